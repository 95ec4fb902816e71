//! Exhaustive verification sweeps for every identity and theorem the crate
//! relies on, at desk scale. The CLI `verify` subcommand runs [`run_all`]
//! and fails on any violation.
//!
//! Each suite enumerates its full case range (these universes are small
//! enough that sampling would be a downgrade) and records one message per
//! violation.

use std::collections::BTreeSet;

use num_complex::Complex64;
use num_integer::Integer;

use crate::classify::{classify, lemma_witness, type_iii_search, METype};
use crate::enumerate::for_each_subset;
use crate::error::Result;
use crate::maxeven::{me_class_count, me_set, MEQuery, Rational};
use crate::pcs::PitchClassSet;
use crate::properties::{
    angular_interval_sum, cardinality_variety, distance_sum_argmax, euclidean_chord_sum,
    generic_interval_spectrum, inclusion_in_complement, second_order_me, step_pattern,
    DistanceMetric,
};
use crate::spectral::{roots_of_unity, verify_hexachord, verify_lewin, Spectrum};
use crate::TOL;

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    /// Number of individual cases checked.
    pub cases: u64,
    pub violations: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(message());
        }
    }
}

/// Ranges for the sweeps; `Default` uses the documented desk-scale bounds.
#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    /// Upper bound for the type III existence scan (composite moduli).
    pub existence_max: u32,
    /// Enumeration budget for the brute-force argmax suites.
    pub budget: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            existence_max: 200,
            budget: crate::maxeven::DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

/// Runs every suite. Any suite that fails internally (e.g. budget overrun)
/// surfaces as an error rather than a silent skip.
pub fn run_all(config: &CheckConfig) -> Result<Vec<CheckReport>> {
    Ok(vec![
        core_orbits(),
        spectral_identities(),
        lewin_sweep(),
        hexachord_sweep(),
        oracle_formula_agreement(config.budget)?,
        magnitude_rigidity(),
        evenness_complement_closure(),
        evenness_inversion_closure(),
        consecutive_image(),
        type_partition(),
        complement_duality(),
        period_law(),
        type_iii_existence(config.existence_max),
        myhill_sweep(),
        variety_coprime(),
        inclusion_counts(),
        distance_sum_anchors(config.budget)?,
        second_order_samples(),
    ])
}

fn subsets_of(c: u32, mut visit: impl FnMut(PitchClassSet)) {
    for mask in 0u64..(1 << c) {
        let members = (0..c).filter(|b| mask & (1 << b) != 0);
        visit(PitchClassSet::new(c, members).expect("mask members are valid"));
    }
}

/// Involutions, canonical-form invariance, and the period/orbit laws,
/// exhaustively for `c <= 10`.
pub fn core_orbits() -> CheckReport {
    let mut report = CheckReport::new("core orbit machinery (c <= 10, exhaustive)");
    for c in 1..=10 {
        subsets_of(c, |a| {
            report.check(a.complement().complement() == a, || {
                format!("complement not involutive on {a}")
            });
            report.check(a.invert().invert() == a, || {
                format!("inversion not involutive on {a}")
            });
            let class = a.canonical_class(false);
            for t in 0..c {
                report.check(
                    a.translate(i64::from(t)).canonical_class(false) == class,
                    || format!("canonical class of {a} moved under t={t}"),
                );
            }
            if !a.is_empty() {
                let p = a.period().expect("nonempty");
                report.check(c % p == 0, || format!("period of {a} does not divide c"));
                report.check(class.orbit_size() == p, || {
                    format!("orbit size of {a} differs from its period")
                });
                report.check(
                    a.invert().period().expect("nonempty") == p
                        && a.translate(1).period().expect("nonempty") == p,
                    || format!("period of {a} not invariant"),
                );
            }
        });
    }
    report
}

/// The pointwise transform identities, exhaustively for `c <= 10`: value at
/// zero, magnitude bound, conjugate symmetry, translation phase, inversion
/// conjugacy, complement cancellation, Plancherel round trip, and the
/// regular-division spectrum for every `d | c` up to 20.
pub fn spectral_identities() -> CheckReport {
    let mut report = CheckReport::new("spectral identities (c <= 10 exhaustive, divisions to 20)");
    for c in 1..=10u32 {
        subsets_of(c, |a| {
            let s = Spectrum::of_set(&a);
            let d = f64::from(a.cardinality());
            report.check((s.value(0).re - d).abs() < TOL, || {
                format!("F(0) != |A| on {a}")
            });
            let translated = Spectrum::of_set(&a.translate(1));
            let inverted = Spectrum::of_set(&a.invert());
            let comp = Spectrum::of_set(&a.complement());
            for t in 0..c {
                report.check(s.magnitude(t) <= d + TOL, || {
                    format!("|F({t})| exceeds |A| on {a}")
                });
                report.check(
                    (s.value((c - t) % c) - s.value(t).conj()).norm() < TOL,
                    || format!("conjugate symmetry fails at t={t} on {a}"),
                );
                let phase = Complex64::from_polar(
                    1.0,
                    -2.0 * std::f64::consts::PI * f64::from(t) / f64::from(c),
                );
                report.check((translated.value(t) - phase * s.value(t)).norm() < TOL, || {
                    format!("translation phase fails at t={t} on {a}")
                });
                report.check((inverted.value(t) - s.value(t).conj()).norm() < TOL, || {
                    format!("inversion conjugacy fails at t={t} on {a}")
                });
                if t != 0 {
                    report.check((s.value(t) + comp.value(t)).norm() < TOL, || {
                        format!("complement spectra do not cancel at t={t} on {a}")
                    });
                }
            }
            let back = s.inverse();
            for (k, v) in back.iter().enumerate() {
                let want = if a.contains(k as u32) { 1.0 } else { 0.0 };
                report.check((v - Complex64::new(want, 0.0)).norm() < TOL, || {
                    format!("Plancherel round trip fails at {k} on {a}")
                });
            }
        });
    }
    for c in 2..=20u32 {
        for d in (1..c).filter(|d| c % d == 0) {
            let division =
                PitchClassSet::new(c, (0..d).map(|k| k * (c / d))).expect("regular division");
            let s = Spectrum::of_set(&division);
            for t in 0..c {
                let want = if t % d == 0 { f64::from(d) } else { 0.0 };
                report.check((s.magnitude(t) - want).abs() < TOL, || {
                    format!("regular division spectrum wrong at t={t} for (c,d)=({c},{d})")
                });
            }
        }
    }
    report
}

/// `DFT(IC_A) = |F_A|^2` for every subset of every `Z_c`, `c <= 10`.
pub fn lewin_sweep() -> CheckReport {
    let mut report = CheckReport::new("interval-content transform identity (c <= 10, exhaustive)");
    for c in 1..=10 {
        subsets_of(c, |a| {
            let outcome = verify_lewin(&a);
            report.check(outcome.holds, || {
                format!(
                    "identity fails on {a} with deviation {:.3e}",
                    outcome.max_deviation
                )
            });
        });
    }
    report
}

/// Every half-cardinality set shares its complement's interval content, for
/// even `c <= 12` (924 hexachords at c = 12).
pub fn hexachord_sweep() -> CheckReport {
    let mut report = CheckReport::new("hexachord theorem (even c <= 12, exhaustive)");
    for c in (2..=12u32).step_by(2) {
        for_each_subset(c, c / 2, |members| {
            let a = PitchClassSet::new(c, members.iter().copied()).expect("valid members");
            report.check(verify_hexachord(&a) == Ok(true), || {
                format!("complementary interval content differs for {a}")
            });
        });
    }
    report
}

/// The brute-force argmax family of `|F_A(d)|` equals the translate family
/// of the formula set, with `c/gcd(c,d)` members forming one class, for
/// every `2 <= c <= 20`, `0 < d < c`; rational offsets land in the same
/// class.
pub fn oracle_formula_agreement(budget: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("oracle/formula agreement (c <= 20, all cardinalities)");
    for c in 2..=20u32 {
        for d in 1..c {
            let oracle = me_oracle_with(c, d, budget)?;
            let formula = me_set(c, d)?;
            let mut formula_family: Vec<PitchClassSet> =
                (0..c).map(|t| formula.translate(i64::from(t))).collect();
            formula_family.sort_unstable();
            formula_family.dedup();
            report.check(oracle.maximizers == formula_family, || {
                format!("argmax family differs from formula translates at (c,d)=({c},{d})")
            });
            let expected = me_class_count(c, d).expect("proper cardinality");
            report.check(oracle.maximizers.len() as u32 == expected, || {
                format!(
                    "family size {} != c/gcd = {expected} at (c,d)=({c},{d})",
                    oracle.maximizers.len()
                )
            });
            report.check(oracle.class_count() == 1, || {
                format!("more than one maximizer class at (c,d)=({c},{d})")
            });
            let base = formula.canonical_class(false);
            for (n, q) in [(1i64, 2i64), (1, 3), (2, 3), (7, 2)] {
                let alpha = Rational::new(n, q).expect("nonzero denominator");
                let shifted = crate::maxeven::me_formula(
                    &MEQuery::new(c, d).with_alpha(alpha),
                )?;
                report.check(shifted.canonical_class(false) == base, || {
                    format!("offset {n}/{q} leaves the class at (c,d)=({c},{d})")
                });
            }
        }
    }
    Ok(report)
}

fn me_oracle_with(c: u32, d: u32, budget: u64) -> Result<crate::maxeven::MEResult> {
    crate::maxeven::me_oracle_with_budget(c, d, budget)
}

/// `|F_A(|A|)| = |A|` exactly characterizes translated regular polygons,
/// exhaustively over all nonempty subsets for `c <= 16`.
pub fn magnitude_rigidity() -> CheckReport {
    let mut report = CheckReport::new("magnitude-d rigidity (c <= 16, exhaustive)");
    for c in 1..=16u32 {
        let roots = roots_of_unity(c);
        subsets_of(c, |a| {
            let d = a.cardinality();
            if d == 0 {
                return;
            }
            let attains = (crate::spectral::magnitude_at(a.members(), &roots, d % c)
                - f64::from(d))
            .abs()
                < TOL;
            let is_regular_polygon = c % d == 0
                && step_pattern(&a)
                    .expect("nonempty")
                    .steps()
                    .iter()
                    .all(|&s| s == c / d);
            report.check(attains == is_regular_polygon, || {
                format!("rigidity fails on {a}: attains={attains}, regular={is_regular_polygon}")
            });
        });
    }
    report
}

/// A set is maximally even exactly when its complement is, over all proper
/// subsets for `c <= 16`.
pub fn evenness_complement_closure() -> CheckReport {
    let mut report = CheckReport::new("evenness complement closure (c <= 16, exhaustive)");
    for c in 2..=16u32 {
        let roots = roots_of_unity(c);
        // The proven maximum of |F(d)| for each d, from the formula set.
        let best: Vec<f64> = (0..c)
            .map(|d| {
                if d == 0 {
                    0.0
                } else {
                    crate::spectral::magnitude_at(
                        me_set(c, d).expect("proper").members(),
                        &roots,
                        d,
                    )
                }
            })
            .collect();
        subsets_of(c, |a| {
            let d = a.cardinality();
            if d == 0 || d == c {
                return;
            }
            let me_a = crate::spectral::magnitude_at(a.members(), &roots, d)
                >= best[d as usize] - TOL;
            let comp = a.complement();
            let me_comp = crate::spectral::magnitude_at(comp.members(), &roots, c - d)
                >= best[(c - d) as usize] - TOL;
            report.check(me_a == me_comp, || {
                format!("complement closure fails on {a}")
            });
        });
    }
    report
}

/// The inversion of a maximally even set is one of its own translates, for
/// `c <= 20`.
pub fn evenness_inversion_closure() -> CheckReport {
    let mut report = CheckReport::new("evenness inversion closure (c <= 20)");
    for c in 2..=20u32 {
        for d in 1..c {
            let a = me_set(c, d).expect("proper");
            report.check(
                a.invert().canonical_class(false) == a.canonical_class(false),
                || format!("inversion leaves the class of {a}"),
            );
        }
    }
    report
}

/// For coprime `(c, d)`, multiplying a maximally even set by `d` yields `d`
/// consecutive residues, for `c <= 20`.
pub fn consecutive_image() -> CheckReport {
    let mut report = CheckReport::new("consecutive image under d (coprime, c <= 20)");
    for c in 2..=20u32 {
        for d in (1..c).filter(|d| c.gcd(d) == 1) {
            let a = me_set(c, d).expect("proper");
            let mut image: Vec<u32> = a
                .members()
                .iter()
                .map(|&x| ((u64::from(x) * u64::from(d)) % u64::from(c)) as u32)
                .collect();
            image.sort_unstable();
            image.dedup();
            // A run of d consecutive residues (possibly wrapping) has d-1
            // circular gaps of 1; multiplication by a unit keeps all d
            // members distinct.
            let mut gaps: Vec<u32> = image.windows(2).map(|w| w[1] - w[0]).collect();
            gaps.push(image[0] + c - image[image.len() - 1]);
            let is_run = image.len() as u32 == d
                && gaps.iter().filter(|&&g| g == 1).count() as u32 == d - 1;
            report.check(is_run || d == 1, || {
                format!("d*A is not a consecutive run for (c,d)=({c},{d})")
            });
        }
    }
    report
}

/// Exactly one of the four type predicates holds for every `0 < d < c`,
/// `c <= 64`, and `classify` returns that type.
pub fn type_partition() -> CheckReport {
    let mut report = CheckReport::new("type partition (c <= 64)");
    for c in 2..=64u32 {
        for d in 1..c {
            let m = c.gcd(&d);
            let predicates = [
                (METype::I, m == 1),
                (METype::IIa, m > 1 && m == d),
                (METype::IIb, m > 1 && m == c - d && m != d),
                (METype::III, m > 1 && m != d && m != c - d),
            ];
            let holding: Vec<METype> = predicates
                .iter()
                .filter(|(_, holds)| *holds)
                .map(|(t, _)| *t)
                .collect();
            report.check(holding.len() == 1, || {
                format!("type predicates not a partition at (c,d)=({c},{d}): {holding:?}")
            });
            let classified = classify(c, d).expect("proper").me_type;
            report.check(holding.first() == Some(&classified), || {
                format!("classify disagrees with predicates at (c,d)=({c},{d})")
            });
        }
    }
    report
}

/// Complementation fixes types I and III, swaps IIa and IIb, and fixes IIa
/// at the self-complementary point `c = 2d`, for `c <= 64`.
pub fn complement_duality() -> CheckReport {
    let mut report = CheckReport::new("type duality under complement (c <= 64)");
    for c in 2..=64u32 {
        for d in 1..c {
            let t = classify(c, d).expect("proper").me_type;
            let tc = classify(c, c - d).expect("proper").me_type;
            let expected = match t {
                METype::I => METype::I,
                METype::III => METype::III,
                METype::IIb => METype::IIa,
                METype::IIa if c == 2 * d => METype::IIa,
                METype::IIa => METype::IIb,
                METype::DegenerateTrivial => unreachable!("proper cardinality"),
            };
            report.check(tc == expected, || {
                format!("complement of type {t} at (c,d)=({c},{d}) is {tc}, expected {expected}")
            });
        }
    }
    report
}

/// The period of the maximally even set is `c / gcd(c, d)` and matches the
/// classification record, for `c <= 20`.
pub fn period_law() -> CheckReport {
    let mut report = CheckReport::new("period law (c <= 20)");
    for c in 2..=20u32 {
        for d in 1..c {
            let a = me_set(c, d).expect("proper");
            let period = a.period().expect("nonempty");
            let classification = classify(c, d).expect("proper");
            report.check(
                period == c / c.gcd(&d) && period == classification.period,
                || format!("period law fails at (c,d)=({c},{d}): got {period}"),
            );
        }
    }
    report
}

/// Type III classes exist exactly where the existence theorem says: never
/// for `c = 12` or prime `c`, always for composite `c > 12` (scanned up to
/// `max`), with the constructive witness verified each time.
pub fn type_iii_existence(max: u32) -> CheckReport {
    let mut report = CheckReport::new("type III existence and witnesses");
    for c in 2..=max {
        let found = type_iii_search(c).expect("c >= 2");
        if c == 12 || crate::classify::is_prime(c) {
            report.check(found.is_none(), || {
                format!("unexpected type III cardinality {found:?} at c={c}")
            });
        } else if c > 12 {
            report.check(found.is_some(), || format!("no type III cardinality at c={c}"));
            match lemma_witness(c) {
                Err(e) => report.check(false, || format!("witness construction failed at c={c}: {e}")),
                Ok(w) => {
                    let verified = w.k > 0
                        && c % w.k == 0
                        && crate::classify::is_prime(w.p)
                        && w.p < w.k - 1
                        && w.k % w.p != 0
                        && classify(c, w.cardinality).expect("proper").me_type == METype::III
                        && w.witness.cardinality() == w.cardinality;
                    report.check(verified, || {
                        format!("witness invariants fail at c={c}: k={}, p={}, d={}", w.k, w.p, w.cardinality)
                    });
                }
            }
        } else {
            report.cases += 1; // small composite moduli: existence varies, no claim
        }
    }
    report
}

/// Step sizes of maximally even sets take at most two values, the rounders
/// of `c/d`, with a single value exactly for regular divisions; span-k
/// spectra take at most the two rounders of `k*c/d`. Swept for `c <= 30`.
pub fn myhill_sweep() -> CheckReport {
    let mut report = CheckReport::new("two-step-size law and span spectra (c <= 30)");
    for c in 2..=30u32 {
        for d in 1..c {
            let a = me_set(c, d).expect("proper");
            let steps: BTreeSet<u32> = step_pattern(&a).expect("nonempty").distinct();
            let floor = c / d;
            let ceil = c.div_ceil(d);
            report.check(steps.iter().all(|&s| s == floor || s == ceil), || {
                format!("step sizes {steps:?} outside rounders at (c,d)=({c},{d})")
            });
            report.check((steps.len() == 1) == (c % d == 0), || {
                format!("single-step criterion fails at (c,d)=({c},{d})")
            });
            for k in 1..d {
                let spectrum = generic_interval_spectrum(&a, k).expect("valid span");
                let lo = k * c / d;
                let hi = (k * c).div_ceil(d);
                report.check(
                    spectrum.len() <= 2 && spectrum.iter().all(|&v| v == lo || v == hi),
                    || format!("span-{k} spectrum {spectrum:?} fails at (c,d)=({c},{d})"),
                );
            }
        }
    }
    report
}

/// Cardinality equals variety: for coprime `(c, d)` the span-k windows fall
/// into exactly `k` translation classes, `c <= 20`.
pub fn variety_coprime() -> CheckReport {
    let mut report = CheckReport::new("cardinality equals variety (coprime, c <= 20)");
    for c in 2..=20u32 {
        for d in (2..c).filter(|d| c.gcd(d) == 1) {
            for k in 1..d {
                let count = cardinality_variety(c, d, k)
                    .expect("valid span")
                    .orbit_count;
                report.check(count == k, || {
                    format!("variety {count} != span {k} at (c,d)=({c},{d})")
                });
            }
        }
    }
    report
}

/// The maximally even set of cardinality `d < c/2` lies in exactly
/// `c' - 2d' + 1` distinct translates of the complement-cardinality class
/// (`c - 2d + 1` in the coprime case), `c <= 20`.
pub fn inclusion_counts() -> CheckReport {
    let mut report = CheckReport::new("inclusion in complement class (c <= 20)");
    for c in 3..=20u32 {
        for d in 1..c {
            if 2 * d >= c {
                continue;
            }
            let m = c.gcd(&d);
            let expected = c / m - 2 * (d / m) + 1;
            let count = inclusion_in_complement(c, d).expect("d < c/2").count();
            report.check(count == expected, || {
                format!("inclusion count {count} != {expected} at (c,d)=({c},{d})")
            });
        }
    }
    report
}

/// The published distance-sum anchors for pentachords of `Z_12`: the angular
/// value set and its non-unique maximum, and the unique Euclidean maximum.
pub fn distance_sum_anchors(budget: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("distance-sum anchors (pentachords of Z_12)");
    let mut values = BTreeSet::new();
    for_each_subset(12, 5, |members| {
        let a = PitchClassSet::new(12, members.iter().copied()).expect("valid");
        values.insert(angular_interval_sum(&a));
    });
    report.check(
        values == BTreeSet::from([40, 48, 52, 56, 60, 64, 68, 72]),
        || format!("angular value set is {values:?}"),
    );

    let angular = distance_sum_argmax(12, 5, DistanceMetric::Angular, budget)?;
    report.check(angular.max_value == 72.0, || {
        format!("angular maximum is {}", angular.max_value)
    });
    report.check(angular.class_count() == 21, || {
        format!("angular argmax classes: {}", angular.class_count())
    });
    let penta = PitchClassSet::new(12, [0, 2, 4, 7, 9]).expect("valid");
    let cluster = PitchClassSet::new(12, [0, 1, 2, 6, 7]).expect("valid");
    for set in [&penta, &cluster] {
        report.check(
            angular
                .class_representatives
                .contains(set.canonical_class(false).canonical()),
            || format!("angular argmax misses the class of {set}"),
        );
    }

    let euclidean = distance_sum_argmax(12, 5, DistanceMetric::Euclidean, budget)?;
    report.check(euclidean.class_count() == 1, || {
        format!("euclidean argmax classes: {}", euclidean.class_count())
    });
    report.check(
        euclidean.class_representatives[0] == *penta.canonical_class(false).canonical(),
        || "euclidean argmax is not the pentatonic class".to_string(),
    );
    report.check((euclidean.max_value - 30.5758).abs() < 1e-4, || {
        format!("euclidean maximum is {:.6}", euclidean.max_value)
    });
    report.check(
        (euclidean_chord_sum(&penta) - 30.5758).abs() < 1e-4,
        || "pentatonic chord sum drifted".to_string(),
    );
    Ok(report)
}

/// Second-order selections: indexing the diatonic class by the (7,5) and
/// (7,3) patterns reaches the pentatonic class and the major/minor triads;
/// identity indexing returns the base set.
pub fn second_order_samples() -> CheckReport {
    let mut report = CheckReport::new("second-order selections");
    let canon = |a: &PitchClassSet| a.canonical_class(false).canonical().clone();

    let penta = canon(&PitchClassSet::new(12, [0, 2, 4, 7, 9]).expect("valid"));
    let reached = (0..7).any(|o| canon(&second_order_me(12, 7, 5, o).expect("valid")) == penta);
    report.check(reached, || {
        "no offset of the (12,7,5) selection reaches the pentatonic class".to_string()
    });

    let triads: BTreeSet<PitchClassSet> = (0..7)
        .map(|o| canon(&second_order_me(12, 7, 3, o).expect("valid")))
        .collect();
    let major = canon(&PitchClassSet::new(12, [0, 4, 7]).expect("valid"));
    let minor = canon(&PitchClassSet::new(12, [0, 3, 7]).expect("valid"));
    report.check(triads.contains(&major), || "major triad missing".to_string());
    report.check(triads.contains(&minor), || "minor triad missing".to_string());

    for (c, d) in [(12u32, 7u32), (10, 4), (18, 8)] {
        report.check(
            second_order_me(c, d, d, 0).expect("valid") == me_set(c, d).expect("proper"),
            || format!("identity indexing fails at (c,d)=({c},{d})"),
        );
    }
    report
}
