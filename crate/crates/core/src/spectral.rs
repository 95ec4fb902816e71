//! Discrete Fourier transforms of subsets and integer functions on `Z_c`,
//! interval content, and the classical spectral identities (convolution
//! theorem for interval content, hexachord theorem).
//!
//! Transforms are computed by direct summation: the moduli in play are tiny,
//! so there is nothing to gain from an FFT, and direct summation sidesteps
//! composite-length plan churn. Spectra are dense length-`c` vectors.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pcs::PitchClassSet;
use crate::TOL;

/// `exp(-2*pi*i*r/c)` for `r = 0..c`.
pub(crate) fn roots_of_unity(modulus: u32) -> Vec<Complex64> {
    let c = f64::from(modulus);
    (0..modulus)
        .map(|r| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * f64::from(r) / c))
        .collect()
}

/// The `c` Fourier coefficients of a subset or function on `Z_c`;
/// `value(t)` is `F(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    modulus: u32,
    values: Vec<Complex64>,
}

impl Spectrum {
    /// `F_A(t) = sum_{k in A} exp(-2*pi*i*k*t/c)`; in particular
    /// `F_A(0) = |A|` and `|F_A(t)| <= |A|` everywhere.
    pub fn of_set(set: &PitchClassSet) -> Self {
        let c = set.modulus();
        let roots = roots_of_unity(c);
        let values = (0..c)
            .map(|t| {
                set.members()
                    .iter()
                    .map(|&k| roots[((u64::from(k) * u64::from(t)) % u64::from(c)) as usize])
                    .sum()
            })
            .collect();
        Self { modulus: c, values }
    }

    /// Transform of an arbitrary integer-valued function on `Z_c`, given as
    /// the value list `f(0), f(1), ..., f(c-1)`. Agrees with
    /// [`Spectrum::of_set`] on indicator functions.
    pub fn of_function(values: &[i64]) -> Result<Self> {
        let c = u32::try_from(values.len()).map_err(|_| Error::ZeroModulus)?;
        if c == 0 {
            return Err(Error::ZeroModulus);
        }
        let roots = roots_of_unity(c);
        let spectrum = (0..c)
            .map(|t| {
                values
                    .iter()
                    .enumerate()
                    .map(|(k, &f)| {
                        roots[(k * t as usize) % c as usize].scale(f as f64)
                    })
                    .sum()
            })
            .collect();
        Ok(Self {
            modulus: c,
            values: spectrum,
        })
    }

    /// Plancherel inversion: `f(t) = (1/c) * sum_k F(k) exp(+2*pi*i*k*t/c)`.
    pub fn inverse(&self) -> Vec<Complex64> {
        let c = self.modulus;
        let roots = roots_of_unity(c);
        (0..c)
            .map(|t| {
                let sum: Complex64 = self
                    .values
                    .iter()
                    .enumerate()
                    // conj(root) = exp(+2*pi*i*.../c)
                    .map(|(k, &f)| f * roots[(k * t as usize) % c as usize].conj())
                    .sum();
                sum.unscale(f64::from(c))
            })
            .collect()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `F(t)`, with `t` taken mod `c`.
    pub fn value(&self, t: u32) -> Complex64 {
        self.values[(t % self.modulus) as usize]
    }

    /// `|F(t)|`.
    pub fn magnitude(&self, t: u32) -> f64 {
        self.value(t).norm()
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }
}

/// `|F_A(t)|` for a single coefficient, without building the full spectrum.
/// This is the hot path of the brute-force maximizers.
pub(crate) fn magnitude_at(members: &[u32], roots: &[Complex64], t: u32) -> f64 {
    let c = roots.len() as u64;
    let sum: Complex64 = members
        .iter()
        .map(|&k| roots[((u64::from(k) * u64::from(t)) % c) as usize])
        .sum();
    sum.norm()
}

/// Interval content: `counts[k]` is the number of ordered pairs
/// `(x, y) in A x A` with `y - x = k (mod c)`.
///
/// `counts[0] = |A|`, the counts sum to `|A|^2`, and `counts[k] = counts[c-k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalVector {
    modulus: u32,
    counts: Vec<u64>,
}

impl IntervalVector {
    pub fn of_set(set: &PitchClassSet) -> Self {
        let c = set.modulus();
        let mut counts = vec![0u64; c as usize];
        for &x in set.members() {
            for &y in set.members() {
                counts[((y + c - x) % c) as usize] += 1;
            }
        }
        Self { modulus: c, counts }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// Outcome of checking the convolution identity `DFT(IC_A) = |F_A|^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LewinCheck {
    pub holds: bool,
    pub max_deviation: f64,
}

/// Checks Lewin's identity for one set: the transform of the interval
/// content equals the squared magnitude of the set's transform, pointwise.
///
/// The two sides are computed along independent paths (pair counting plus a
/// function DFT on the left, the subset DFT on the right).
pub fn verify_lewin(set: &PitchClassSet) -> LewinCheck {
    let ic = IntervalVector::of_set(set);
    let ic_values: Vec<i64> = ic.counts().iter().map(|&n| n as i64).collect();
    let lhs = Spectrum::of_function(&ic_values).expect("modulus is positive");
    let rhs = Spectrum::of_set(set);
    let max_deviation = (0..set.modulus())
        .map(|t| {
            let expected = rhs.magnitude(t).powi(2);
            (lhs.value(t) - Complex64::new(expected, 0.0)).norm()
        })
        .fold(0.0, f64::max);
    LewinCheck {
        holds: max_deviation < TOL,
        max_deviation,
    }
}

/// Hexachord theorem check: a set of cardinality `c/2` (`c` even) has the
/// same interval content as its complement, compared exactly on integers.
///
/// Errors unless `|A| = c/2` with `c` even.
pub fn verify_hexachord(set: &PitchClassSet) -> Result<bool> {
    let c = set.modulus();
    if !c.is_multiple_of(2) || set.cardinality() != c / 2 {
        return Err(Error::NotHalfCardinality);
    }
    Ok(IntervalVector::of_set(set) == IntervalVector::of_set(&set.complement()))
}
