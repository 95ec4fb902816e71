//! Classification of maximally even sets by the common divisor
//! `m = gcd(c, d)`: type I (coprime, generated and well formed), type IIa
//! (regular division), type IIb (complement of a regular division), and
//! type III (internally periodic without being either), plus the existence
//! machinery that produces a type III witness for every composite `c > 12`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::maxeven::{is_maximally_even, me_set, mod_inverse};
use crate::pcs::PitchClassSet;

/// Type tag for a maximally even set, decided by `m = gcd(c, d)`.
///
/// Exactly one tag applies to every `0 < d < c`: type I when `m = 1`,
/// type IIa when `m = d > 1`, type IIb when `1 < m = c - d < d`, and
/// type III otherwise. The empty and full sets are admitted everywhere but
/// tagged as degenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum METype {
    I,
    IIa,
    IIb,
    III,
    DegenerateTrivial,
}

impl fmt::Display for METype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            METype::I => "I",
            METype::IIa => "IIa",
            METype::IIb => "IIb",
            METype::III => "III",
            METype::DegenerateTrivial => "degenerate",
        };
        f.write_str(label)
    }
}

/// Full classification record for the maximally even class of `(c, d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MEClassification {
    pub modulus: u32,
    pub cardinality: u32,
    pub me_type: METype,
    /// `gcd(c, d)`.
    pub m: u32,
    /// `c / m`.
    pub c_prime: u32,
    /// `d / m`.
    pub d_prime: u32,
    /// `d^{-1} mod c`, present exactly for type I.
    pub generator: Option<u32>,
    /// The period of the class: `c / m`.
    pub period: u32,
    /// The reduced maximally even set of `Z_{c'}`, present iff `m > 1`;
    /// its parameters `(c', d')` are coprime.
    pub reduced: Option<PitchClassSet>,
}

/// Classifies the maximally even class of `(c, d)` with `0 < d < c`.
///
/// Classification is a function of the pair alone because maximally even
/// sets are unique up to translation; [`classify_set`] is the set-level
/// overload that first checks maximal evenness.
pub fn classify(modulus: u32, cardinality: u32) -> Result<MEClassification> {
    let (c, d) = (modulus, cardinality);
    if c == 0 {
        return Err(Error::ZeroModulus);
    }
    if d == 0 || d >= c {
        return Err(Error::InvalidCardinality {
            modulus: c,
            cardinality: d,
        });
    }
    let m = c.gcd(&d);
    let me_type = if m == 1 {
        METype::I
    } else if m == d {
        METype::IIa
    } else if m == c - d {
        METype::IIb
    } else {
        METype::III
    };
    let (c_prime, d_prime) = (c / m, d / m);
    Ok(MEClassification {
        modulus: c,
        cardinality: d,
        me_type,
        m,
        c_prime,
        d_prime,
        generator: (m == 1).then(|| mod_inverse(d, c).expect("coprime")),
        period: c_prime,
        reduced: (m > 1).then(|| me_set(c_prime, d_prime).expect("0 < d' <= c'")),
    })
}

/// Set-level classification: checks that the set is maximally even, then
/// delegates to [`classify`]. The empty and full sets come back tagged
/// [`METype::DegenerateTrivial`].
pub fn classify_set(set: &PitchClassSet) -> Result<MEClassification> {
    let (c, d) = (set.modulus(), set.cardinality());
    if d == 0 || d == c {
        let m = if d == 0 { c } else { c.gcd(&d) };
        return Ok(MEClassification {
            modulus: c,
            cardinality: d,
            me_type: METype::DegenerateTrivial,
            m,
            c_prime: c / m,
            d_prime: d / m,
            generator: None,
            period: 1,
            reduced: None,
        });
    }
    if !is_maximally_even(set)? {
        return Err(Error::NotMaximallyEven);
    }
    classify(c, d)
}

/// Splits a maximally even set with `m = gcd(c, d) > 1` into its reduced set
/// `A' = A mod c'` in `Z_{c'}` and the factor `m`, so that `A` is the union
/// of the `m` translates `A' + j*c'`.
pub fn decompose(set: &PitchClassSet) -> Result<(PitchClassSet, u32)> {
    let (c, d) = (set.modulus(), set.cardinality());
    if !is_maximally_even(set)? {
        return Err(Error::NotMaximallyEven);
    }
    let m = c.gcd(&d);
    if m == 1 {
        return Err(Error::Irreducible);
    }
    let c_prime = c / m;
    let mut residues: Vec<u32> = set.members().iter().map(|&a| a % c_prime).collect();
    residues.sort_unstable();
    residues.dedup();
    debug_assert_eq!(residues.len() as u32, d / m);
    let reduced = PitchClassSet::from_sorted(c_prime, residues);
    debug_assert!({
        let mut rebuilt: Vec<u32> = (0..m)
            .flat_map(|j| reduced.members().iter().map(move |&a| a + j * c_prime))
            .collect();
        rebuilt.sort_unstable();
        rebuilt == set.members()
    });
    Ok((reduced, m))
}

/// Searches exhaustively for a generator: some `f` with
/// `A = {a0 + j*f : j = 0..d-1}` for some `a0 in A`. Returns the smallest
/// such `f >= 1`, or `None` when the set is not a generated scale.
///
/// The search is brute force over `f` and `a0` so it answers the question
/// for arbitrary sets, not just maximally even ones.
pub fn find_generator(set: &PitchClassSet) -> Option<u32> {
    let (c, d) = (set.modulus(), set.cardinality());
    if d == 0 {
        return None;
    }
    for f in 1..c.max(2) {
        for &a0 in set.members() {
            let mut orbit: Vec<u32> = (0..d)
                .map(|j| ((u64::from(a0) + u64::from(j) * u64::from(f)) % u64::from(c)) as u32)
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            if orbit.len() as u32 == d && orbit == set.members() {
                return Some(f);
            }
        }
    }
    None
}

/// Smallest `d` whose maximally even class is type III, if any.
///
/// Requires `c >= 2`.
pub fn type_iii_search(modulus: u32) -> Result<Option<u32>> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall);
    }
    for d in 1..modulus {
        if classify(modulus, d)?.me_type == METype::III {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Constructive type III witness for a composite modulus above 12.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeIIIWitness {
    pub modulus: u32,
    /// The chosen divisor of `c`.
    pub k: u32,
    /// The chosen prime, with `p < k - 1` and `p` not dividing `k`.
    pub p: u32,
    /// Cardinality of the witness: `(c/k) * (p^{-1} mod k)`.
    pub cardinality: u32,
    /// The witness set itself, verified type III.
    pub witness: PitchClassSet,
}

/// Produces a verified type III maximally even set for any composite
/// `c > 12`, via a divisor `k` of `c` and a prime `p < k - 1` not dividing
/// `k`:
///
/// - `c` a power of two: `k = c/2`, `p = 3`;
/// - `c` with an odd divisor above 3: the largest such (proper) divisor,
///   `p = 2`;
/// - `c = 3 * 2^a` (so `c >= 24` here): `k = c/2`, `p = 5`.
///
/// The witness is the orbit, under translation by `c/k`, of the `Z_k` scale
/// generated by `p` — equivalently the maximally even set of cardinality
/// `(c/k) * (p^{-1} mod k)` — and its classification is re-checked before
/// returning.
pub fn lemma_witness(modulus: u32) -> Result<TypeIIIWitness> {
    let c = modulus;
    if c <= 12 || is_prime(c) {
        return Err(Error::OutOfTheoremScope(c));
    }
    let largest_odd_divisor = (1..c)
        .filter(|k| k % 2 == 1 && c.is_multiple_of(*k) && *k > 3)
        .max();
    let (k, p) = match largest_odd_divisor {
        Some(k) => (k, 2),
        None if c.is_power_of_two() => (c / 2, 3),
        None => (c / 2, 5), // c = 3 * 2^a with c >= 24
    };
    debug_assert!(p < k - 1 && k % p != 0);
    let e = mod_inverse(p, k).expect("p prime, p does not divide k");
    let d = (c / k) * e;
    let witness = me_set(c, d)?;
    let classification = classify(c, d)?;
    if classification.me_type != METype::III {
        return Err(Error::Certification(format!(
            "witness for c={c} (k={k}, p={p}, d={d}) classified as {}",
            classification.me_type
        )));
    }
    Ok(TypeIIIWitness {
        modulus: c,
        k,
        p,
        cardinality: d,
        witness,
    })
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(c: u32, members: &[u32]) -> PitchClassSet {
        PitchClassSet::new(c, members.iter().copied()).unwrap()
    }

    #[test]
    fn classify_reference_pairs() {
        let c12d7 = classify(12, 7).unwrap();
        assert_eq!(c12d7.me_type, METype::I);
        assert_eq!(c12d7.generator, Some(7));
        assert_eq!(c12d7.period, 12);
        assert_eq!(c12d7.reduced, None);

        let c12d4 = classify(12, 4).unwrap();
        assert_eq!(c12d4.me_type, METype::IIa);
        assert_eq!((c12d4.m, c12d4.c_prime, c12d4.d_prime), (4, 3, 1));

        let c12d8 = classify(12, 8).unwrap();
        assert_eq!(c12d8.me_type, METype::IIb);

        let c18d8 = classify(18, 8).unwrap();
        assert_eq!(c18d8.me_type, METype::III);
        assert_eq!((c18d8.m, c18d8.c_prime, c18d8.d_prime), (2, 9, 4));
        assert_eq!(c18d8.period, 9);
        assert_eq!(c18d8.reduced, Some(set(9, &[0, 2, 4, 6])));
    }

    #[test]
    fn classify_rejects_improper_cardinalities() {
        assert!(classify(12, 0).is_err());
        assert!(classify(12, 12).is_err());
    }

    #[test]
    fn classify_set_checks_evenness_and_degeneracy() {
        let harmonic_minor = set(12, &[0, 2, 3, 5, 7, 8, 11]);
        assert_eq!(
            classify_set(&harmonic_minor).unwrap_err(),
            Error::NotMaximallyEven
        );
        let major = set(12, &[0, 2, 4, 5, 7, 9, 11]);
        assert_eq!(classify_set(&major).unwrap().me_type, METype::I);
        let empty = PitchClassSet::empty(12).unwrap();
        assert_eq!(
            classify_set(&empty).unwrap().me_type,
            METype::DegenerateTrivial
        );
        let full = PitchClassSet::full(12).unwrap();
        assert_eq!(
            classify_set(&full).unwrap().me_type,
            METype::DegenerateTrivial
        );
    }

    #[test]
    fn decompose_examples() {
        let (reduced, m) = decompose(&set(18, &[0, 2, 4, 6, 9, 11, 13, 15])).unwrap();
        assert_eq!(reduced, set(9, &[0, 2, 4, 6]));
        assert_eq!(m, 2);

        let (reduced, m) = decompose(&set(12, &[0, 3, 6, 9])).unwrap();
        assert_eq!(reduced, set(3, &[0]));
        assert_eq!(m, 4);

        let (reduced, m) = decompose(&set(10, &[0, 2, 5, 7])).unwrap();
        assert_eq!(reduced, set(5, &[0, 2]));
        assert_eq!(m, 2);
    }

    #[test]
    fn decompose_rejects_type_i_and_uneven_sets() {
        assert_eq!(
            decompose(&set(12, &[0, 2, 4, 5, 7, 9, 11])).unwrap_err(),
            Error::Irreducible
        );
        assert_eq!(
            decompose(&set(12, &[0, 1, 2, 3])).unwrap_err(),
            Error::NotMaximallyEven
        );
    }

    #[test]
    fn generator_search() {
        let major = set(12, &[0, 2, 4, 5, 7, 9, 11]);
        let f = find_generator(&major).unwrap();
        assert!(f == 5 || f == 7);
        assert_eq!(find_generator(&set(18, &[0, 2, 4, 6, 9, 11, 13, 15])), None);
        assert_eq!(find_generator(&set(12, &[0, 1, 2])), Some(1));
        assert_eq!(find_generator(&PitchClassSet::empty(12).unwrap()), None);
        assert_eq!(find_generator(&set(12, &[4])), Some(1));
    }

    #[test]
    fn type_iii_scan() {
        assert_eq!(type_iii_search(12).unwrap(), None);
        assert_eq!(type_iii_search(13).unwrap(), None);
        // (18,4): gcd = 2, 2 not in {1, 4, 14}, so d = 4 is already type III.
        assert_eq!(type_iii_search(18).unwrap(), Some(4));
        assert_eq!(type_iii_search(16).unwrap(), Some(6));
        assert!(type_iii_search(1).is_err());
    }

    #[test]
    fn lemma_witness_cases() {
        let w18 = lemma_witness(18).unwrap();
        assert_eq!((w18.k, w18.p, w18.cardinality), (9, 2, 10));
        let printed = set(18, &[0, 2, 4, 6, 8, 9, 11, 13, 15, 17]);
        assert_eq!(
            w18.witness.canonical_class(false),
            printed.canonical_class(false)
        );

        let w16 = lemma_witness(16).unwrap();
        assert_eq!((w16.k, w16.p, w16.cardinality), (8, 3, 6));
        assert_eq!(classify(16, 6).unwrap().me_type, METype::III);

        let w24 = lemma_witness(24).unwrap();
        assert_eq!((w24.k, w24.p, w24.cardinality), (12, 5, 10));
        assert_eq!(classify(24, 10).unwrap().me_type, METype::III);
    }

    #[test]
    fn lemma_witness_scope() {
        assert_eq!(lemma_witness(12).unwrap_err(), Error::OutOfTheoremScope(12));
        assert_eq!(lemma_witness(17).unwrap_err(), Error::OutOfTheoremScope(17));
        assert_eq!(lemma_witness(8).unwrap_err(), Error::OutOfTheoremScope(8));
    }

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
