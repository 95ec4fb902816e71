//! Maximally even sets: a `d`-subset of `Z_c` is maximally even when it
//! maximizes `|F_A(d)|` over all `d`-subsets.
//!
//! Two independent routes produce them here. [`me_oracle`] enumerates every
//! `d`-subset and reports the exact argmax family; it is the ground truth the
//! rest of the crate is tested against. [`me_formula`] evaluates the
//! closed-form floor generator `k -> floor((k*c + alpha)/d) mod c` in exact
//! integer arithmetic. The two are required to agree, up to translation, by
//! the test suites.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::enumerate::{argmax_subsets, binomial_capped};
use crate::error::{Error, Result};
use crate::pcs::PitchClassSet;
use crate::spectral::{magnitude_at, roots_of_unity, Spectrum};
use crate::TOL;

/// Hard cap on `C(c,d)` for the exhaustive maximizers; covers every
/// cardinality at `c = 24`.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 3_000_000;

/// An exact rational offset `numer/denom` for the floor generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    numer: i64,
    denom: i64,
}

impl Rational {
    pub const ZERO: Self = Self { numer: 0, denom: 1 };

    /// `numer/denom`; the sign is normalized onto the numerator.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        let sign = denom.signum();
        Ok(Self {
            numer: numer * sign,
            denom: denom * sign,
        })
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad rational {s:?}, expected p or p/q"));
        match s.split_once('/') {
            None => Rational::new(s.trim().parse().map_err(|_| bad())?, 1),
            Some((num, den)) => Rational::new(
                num.trim().parse().map_err(|_| bad())?,
                den.trim().parse().map_err(|_| bad())?,
            ),
        }
    }
}

/// Parameters for the floor generator: modulus, cardinality, and offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MEQuery {
    pub modulus: u32,
    pub cardinality: u32,
    pub alpha: Rational,
}

impl MEQuery {
    pub fn new(modulus: u32, cardinality: u32) -> Self {
        Self {
            modulus,
            cardinality,
            alpha: Rational::ZERO,
        }
    }

    pub fn with_alpha(mut self, alpha: Rational) -> Self {
        self.alpha = alpha;
        self
    }
}

/// The argmax family reported by [`me_oracle`].
#[derive(Clone, Debug)]
pub struct MEResult {
    pub modulus: u32,
    pub cardinality: u32,
    /// The maximum of `|F_A(d)|` over all `d`-subsets.
    pub max_magnitude: f64,
    /// Every maximizing subset, in lexicographic order.
    pub maximizers: Vec<PitchClassSet>,
    /// Canonical representative of each distinct translation class among the
    /// maximizers, in lexicographic order.
    pub class_representatives: Vec<PitchClassSet>,
}

impl MEResult {
    pub fn class_count(&self) -> u32 {
        self.class_representatives.len() as u32
    }
}

fn classes_of(sets: &[PitchClassSet]) -> Vec<PitchClassSet> {
    let mut reps: Vec<PitchClassSet> = sets
        .iter()
        .map(|s| s.canonical_class(false).canonical().clone())
        .collect();
    reps.sort_unstable();
    reps.dedup();
    reps
}

/// Brute-force maximizer of `|F_A(d)|` over all `d`-subsets of `Z_c`, the
/// ground-truth oracle for everything else in this module.
///
/// All subsets within `1e-9` of the maximum are reported; uniqueness up to
/// translation is a theorem asserted by the test suites, never assumed here.
/// `d = 0` and `d = c` yield the degenerate single-subset result.
pub fn me_oracle(modulus: u32, cardinality: u32) -> Result<MEResult> {
    me_oracle_with_budget(modulus, cardinality, DEFAULT_ENUMERATION_BUDGET)
}

/// [`me_oracle`] with an explicit cap on the number of subsets enumerated.
pub fn me_oracle_with_budget(modulus: u32, cardinality: u32, budget: u64) -> Result<MEResult> {
    let (c, d) = (modulus, cardinality);
    if c == 0 {
        return Err(Error::ZeroModulus);
    }
    if d > c {
        return Err(Error::InvalidCardinality {
            modulus: c,
            cardinality: d,
        });
    }
    if d == 0 || d == c {
        let sole = if d == 0 {
            PitchClassSet::empty(c)?
        } else {
            PitchClassSet::full(c)?
        };
        let max_magnitude = Spectrum::of_set(&sole).magnitude(d % c);
        let class_representatives = classes_of(std::slice::from_ref(&sole));
        return Ok(MEResult {
            modulus: c,
            cardinality: d,
            max_magnitude,
            maximizers: vec![sole],
            class_representatives,
        });
    }

    let roots = roots_of_unity(c);
    let (max_magnitude, subsets) = argmax_subsets(c, d, budget, TOL, |members| {
        magnitude_at(members, &roots, d)
    })?;
    let maximizers: Vec<PitchClassSet> = subsets
        .into_iter()
        .map(|members| PitchClassSet::from_sorted(c, members))
        .collect();
    let class_representatives = classes_of(&maximizers);
    Ok(MEResult {
        modulus: c,
        cardinality: d,
        max_magnitude,
        maximizers,
        class_representatives,
    })
}

/// Number of distinct maximally even sets (as sets, not classes) of
/// cardinality `d` in `Z_c`: `c / gcd(c, d)`.
pub fn me_class_count(modulus: u32, cardinality: u32) -> Result<u32> {
    require_proper(modulus, cardinality)?;
    Ok(modulus / modulus.gcd(&cardinality))
}

/// Closed-form generator: `{ floor((k*c + alpha)/d) mod c : k = 0..d-1 }`,
/// evaluated in exact integer arithmetic so that integer boundary cases of
/// the floor are never subject to rounding.
///
/// Requires `0 < d <= c`. The result always has exactly `d` members and is
/// maximally even; the default offset is zero, and any rational offset gives
/// a translate of the same class.
pub fn me_formula(query: &MEQuery) -> Result<PitchClassSet> {
    let (c, d) = (query.modulus, query.cardinality);
    if c == 0 {
        return Err(Error::ZeroModulus);
    }
    if d == 0 || d > c {
        return Err(Error::InvalidCardinality {
            modulus: c,
            cardinality: d,
        });
    }
    let (p, q) = (
        i128::from(query.alpha.numer()),
        i128::from(query.alpha.denom()),
    );
    let mut members: Vec<u32> = (0..d)
        .map(|k| {
            let numerator = i128::from(k) * i128::from(c) * q + p;
            let value = numerator.div_euclid(i128::from(d) * q);
            value.rem_euclid(i128::from(c)) as u32
        })
        .collect();
    members.sort_unstable();
    debug_assert!(
        members.windows(2).all(|w| w[0] < w[1]),
        "floor generator produced a duplicate"
    );
    Ok(PitchClassSet::from_sorted(c, members))
}

/// Convenience form of [`me_formula`] with offset zero.
pub fn me_set(modulus: u32, cardinality: u32) -> Result<PitchClassSet> {
    me_formula(&MEQuery::new(modulus, cardinality))
}

/// Whether `|F_A(d)|` attains the proven maximum, i.e. matches the formula
/// set's magnitude within `1e-9`. No enumeration happens here.
///
/// Requires `0 < |A| < c`.
pub fn is_maximally_even(set: &PitchClassSet) -> Result<bool> {
    let (c, d) = (set.modulus(), set.cardinality());
    require_proper(c, d)?;
    let roots = roots_of_unity(c);
    let ours = magnitude_at(set.members(), &roots, d);
    let best = magnitude_at(me_set(c, d)?.members(), &roots, d);
    Ok(ours >= best - TOL)
}

/// `f = d^{-1} mod c` together with the certificate that `{f, 2f, ..., d*f}`
/// is a translate of the formula set's class.
///
/// Errors with [`Error::NotCoprime`] unless `gcd(c, d) = 1`.
pub fn verify_generated(modulus: u32, cardinality: u32) -> Result<u32> {
    let (c, d) = (modulus, cardinality);
    if c == 0 {
        return Err(Error::ZeroModulus);
    }
    if d == 0 || d > c {
        return Err(Error::InvalidCardinality {
            modulus: c,
            cardinality: d,
        });
    }
    let m = c.gcd(&d);
    if m != 1 {
        return Err(Error::NotCoprime {
            modulus: c,
            cardinality: d,
            gcd: m,
        });
    }
    let f = mod_inverse(d, c).expect("coprime values are invertible");
    let mut multiples: Vec<u32> = (1..=d)
        .map(|j| ((u64::from(j) * u64::from(f)) % u64::from(c)) as u32)
        .collect();
    multiples.sort_unstable();
    let generated = PitchClassSet::from_sorted(c, multiples);
    let formula = me_set(c, d)?;
    if generated.canonical_class(false) != formula.canonical_class(false) {
        return Err(Error::Certification(format!(
            "generated scale {generated} is not a translate of {formula}"
        )));
    }
    Ok(f)
}

/// Checks `C(c, d)` against a budget, returning the count when it fits.
pub fn enumeration_size(modulus: u32, cardinality: u32, budget: u64) -> Result<u64> {
    let count = binomial_capped(modulus, cardinality, budget as u128);
    if count > budget as u128 {
        return Err(Error::EnumerationTooLarge {
            modulus,
            cardinality,
            count,
            budget,
        });
    }
    Ok(count as u64)
}

fn require_proper(modulus: u32, cardinality: u32) -> Result<()> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    if cardinality == 0 || cardinality >= modulus {
        return Err(Error::InvalidCardinality {
            modulus,
            cardinality,
        });
    }
    Ok(())
}

/// Multiplicative inverse of `a` mod `n`, when `gcd(a, n) = 1`.
pub(crate) fn mod_inverse(a: u32, n: u32) -> Option<u32> {
    let egcd = i64::from(a).extended_gcd(&i64::from(n));
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(i64::from(n)) as u32)
}
