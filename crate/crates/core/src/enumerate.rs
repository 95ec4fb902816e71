//! Exhaustive k-subset enumeration, shared by the brute-force maximizers.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// `C(n, k)`, capped: returns `cap + 1` as soon as the running value
/// exceeds `cap`, so callers can budget-check without overflow.
pub fn binomial_capped(n: u32, k: u32, cap: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut value: u128 = 1;
    for i in 1..=k {
        // Exact at every step: the product of i consecutive integers is
        // divisible by i!.
        value = value * (n - k + i) / i;
        if value > cap {
            return cap + 1;
        }
    }
    value
}

/// Calls `visit` for every k-subset of `0..n`, in lexicographic order.
pub fn for_each_subset(n: u32, k: u32, mut visit: impl FnMut(&[u32])) {
    if k > n {
        return;
    }
    let mut current: Vec<u32> = (0..k).collect();
    loop {
        visit(&current);
        // Lexicographic successor.
        let k = k as usize;
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if current[i] != n - (k - i) as u32 {
                break;
            }
            if i == 0 {
                return;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Exhaustive argmax over the k-subsets of `0..n` for a float-valued
/// objective, with budget check and tie tolerance.
///
/// Returns the maximum and every subset whose value is within `tol` of it,
/// in lexicographic order. The search is partitioned on the smallest element
/// and the partitions are evaluated in parallel.
pub fn argmax_subsets<F>(
    n: u32,
    k: u32,
    budget: u64,
    tol: f64,
    value: F,
) -> Result<(f64, Vec<Vec<u32>>)>
where
    F: Fn(&[u32]) -> f64 + Sync,
{
    if k > n {
        return Err(Error::InvalidCardinality {
            modulus: n,
            cardinality: k,
        });
    }
    let count = binomial_capped(n, k, budget as u128);
    if count > budget as u128 {
        return Err(Error::EnumerationTooLarge {
            modulus: n,
            cardinality: k,
            count,
            budget,
        });
    }
    if k == 0 {
        return Ok((value(&[]), vec![Vec::new()]));
    }

    struct Partition {
        best: f64,
        candidates: Vec<(f64, Vec<u32>)>,
    }

    let partitions: Vec<Partition> = (0..=n - k)
        .into_par_iter()
        .map(|first| {
            let mut best = f64::NEG_INFINITY;
            let mut candidates: Vec<(f64, Vec<u32>)> = Vec::new();
            let mut subset = vec![0u32; k as usize];
            subset[0] = first;
            for_each_subset(n - first - 1, k - 1, |rest| {
                for (slot, r) in subset[1..].iter_mut().zip(rest) {
                    *slot = first + 1 + r;
                }
                let v = value(&subset);
                if v > best {
                    best = v;
                    candidates.retain(|(cv, _)| *cv >= best - tol);
                }
                if v >= best - tol {
                    candidates.push((v, subset.clone()));
                }
            });
            Partition { best, candidates }
        })
        .collect();

    let best = partitions
        .iter()
        .map(|p| p.best)
        .fold(f64::NEG_INFINITY, f64::max);
    let maximizers = partitions
        .into_iter()
        .flat_map(|p| p.candidates)
        .filter(|(v, _)| *v >= best - tol)
        .map(|(_, subset)| subset)
        .collect();
    Ok((best, maximizers))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_capped(12, 5, u64::MAX as u128), 792);
        assert_eq!(binomial_capped(12, 6, u64::MAX as u128), 924);
        assert_eq!(binomial_capped(24, 12, u64::MAX as u128), 2_704_156);
        assert_eq!(binomial_capped(5, 9, u64::MAX as u128), 0);
        assert_eq!(binomial_capped(7, 0, u64::MAX as u128), 1);
        assert_eq!(binomial_capped(40, 20, 3_000_000), 3_000_001);
    }

    #[test]
    fn enumerates_all_subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen.first().unwrap(), &[0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &[2, 3, 4]);
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, seen);
    }

    #[test]
    fn edge_cardinalities() {
        let mut count = 0;
        for_each_subset(4, 0, |s| {
            assert!(s.is_empty());
            count += 1;
        });
        assert_eq!(count, 1);
        count = 0;
        for_each_subset(4, 4, |s| {
            assert_eq!(s, [0, 1, 2, 3]);
            count += 1;
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn argmax_finds_all_ties() {
        // Maximize the sum of elements: unique winner.
        let (best, winners) =
            argmax_subsets(6, 2, 1_000, 1e-9, |s| s.iter().sum::<u32>() as f64).unwrap();
        assert_eq!(best, 9.0);
        assert_eq!(winners, vec![vec![4, 5]]);

        // Constant objective: every subset ties.
        let (_, winners) = argmax_subsets(6, 2, 1_000, 1e-9, |_| 1.0).unwrap();
        assert_eq!(winners.len(), 15);
    }

    #[test]
    fn argmax_respects_budget() {
        let err = argmax_subsets(24, 12, 1_000, 1e-9, |_| 0.0).unwrap_err();
        assert!(matches!(err, Error::EnumerationTooLarge { .. }));
    }
}
