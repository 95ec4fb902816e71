//! Pitch-class sets over the cyclic group `Z_c` and their orbit machinery.
//!
//! A [`PitchClassSet`] is an unordered subset of `Z_c`, stored as a strictly
//! increasing member list together with its modulus. Everything downstream
//! (spectra, maximal evenness, classification) consumes this one type.
//! Transposition-level comparisons go through [`PitchClassSet::canonical_class`],
//! which picks the lexicographically least translate as the orbit
//! representative.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest modulus accepted by the default constructors and the text parser.
///
/// The exhaustive routines in this crate are desk-scale by design; callers
/// that need a larger universe (e.g. classification scans) can raise the cap
/// per call with [`PitchClassSet::with_max_modulus`].
pub const DEFAULT_MAX_MODULUS: u32 = 64;

/// An unordered subset of `Z_c`.
///
/// Invariants: every member lies in `0..c`, members are strictly increasing,
/// and `c >= 1`. The empty set and the full set are both legal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PitchClassSet {
    modulus: u32,
    members: Vec<u32>,
}

impl PitchClassSet {
    /// Builds a set, validating members against the modulus and the default
    /// modulus cap.
    pub fn new(modulus: u32, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::with_max_modulus(modulus, members, DEFAULT_MAX_MODULUS)
    }

    /// Like [`PitchClassSet::new`] but with a caller-chosen modulus cap.
    pub fn with_max_modulus(
        modulus: u32,
        members: impl IntoIterator<Item = u32>,
        max_modulus: u32,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if modulus > max_modulus {
            return Err(Error::ModulusTooLarge {
                modulus,
                max: max_modulus,
            });
        }
        let mut members: Vec<u32> = members.into_iter().collect();
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateMember { value: pair[0] });
            }
        }
        if let Some(&last) = members.last() {
            if last >= modulus {
                return Err(Error::MemberOutOfRange {
                    value: last,
                    modulus,
                });
            }
        }
        Ok(Self { modulus, members })
    }

    /// Internal constructor for members already known to satisfy the
    /// invariants (sorted, deduplicated, in range). Not capped.
    pub(crate) fn from_sorted(modulus: u32, members: Vec<u32>) -> Self {
        debug_assert!(modulus >= 1);
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&m| m < modulus));
        Self { modulus, members }
    }

    /// The empty subset of `Z_c`.
    pub fn empty(modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Self::from_sorted(modulus, Vec::new()))
    }

    /// The full set `Z_c`.
    pub fn full(modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Self::from_sorted(modulus, (0..modulus).collect()))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn cardinality(&self) -> u32 {
        self.members.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, value: u32) -> bool {
        self.members.binary_search(&(value % self.modulus)).is_ok()
    }

    /// `{a + t mod c}`. Negative shifts are taken mod `c`.
    pub fn translate(&self, shift: i64) -> Self {
        let c = self.modulus;
        let t = shift.rem_euclid(c as i64) as u32;
        let mut members: Vec<u32> = self.members.iter().map(|&a| (a + t) % c).collect();
        members.sort_unstable();
        Self::from_sorted(c, members)
    }

    /// `{-a mod c}` (musical inversion / retrograde on the circle).
    pub fn invert(&self) -> Self {
        let c = self.modulus;
        let mut members: Vec<u32> = self.members.iter().map(|&a| (c - a) % c).collect();
        members.sort_unstable();
        Self::from_sorted(c, members)
    }

    /// `Z_c \ A`.
    pub fn complement(&self) -> Self {
        let members = (0..self.modulus)
            .filter(|v| self.members.binary_search(v).is_err())
            .collect();
        Self::from_sorted(self.modulus, members)
    }

    /// Smallest `t > 0` with `A + t = A`. Always divides `c`; a value below
    /// `c` marks a mode of limited transposition.
    ///
    /// Errors with [`Error::UndefinedPeriod`] on the empty set.
    pub fn period(&self) -> Result<u32> {
        if self.members.is_empty() {
            return Err(Error::UndefinedPeriod);
        }
        let c = self.modulus;
        for tau in 1..=c {
            if c.is_multiple_of(tau) && self.translate(i64::from(tau)) == *self {
                return Ok(tau);
            }
        }
        unreachable!("translation by c is the identity")
    }

    /// Canonical representative of the translation orbit (optionally the
    /// joint orbit under translation and inversion).
    pub fn canonical_class(&self, include_inversion: bool) -> TranslationClass {
        let c = self.modulus;
        let mut translates: Vec<PitchClassSet> =
            (0..c).map(|t| self.translate(i64::from(t))).collect();
        translates.sort_unstable();
        translates.dedup();
        let orbit_size = translates.len() as u32;
        let mut canonical = translates.into_iter().next().expect("orbit is nonempty");
        if include_inversion {
            let inverted = self.invert();
            for t in 0..c {
                let candidate = inverted.translate(i64::from(t));
                if candidate < canonical {
                    canonical = candidate;
                }
            }
        }
        TranslationClass {
            canonical,
            orbit_size,
        }
    }

    /// `{...}` form without the `c:d:` prefix, for table cells.
    pub fn brace_notation(&self) -> String {
        let inner: Vec<String> = self.members.iter().map(u32::to_string).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Display for PitchClassSet {
    /// Set literal `c:d:{a1,a2,...}`, e.g. `12:7:{0,2,4,5,7,9,11}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            self.modulus,
            self.cardinality(),
            self.brace_notation()
        )
    }
}

impl fmt::Debug for PitchClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PitchClassSet({self})")
    }
}

impl FromStr for PitchClassSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::Parse(format!("expected c:d:{{a1,a2,...}}, got {s:?}"));
        let (c_str, rest) = s.split_once(':').ok_or_else(malformed)?;
        let (d_str, brace) = rest.split_once(':').ok_or_else(malformed)?;
        let modulus: u32 = c_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus {c_str:?}")))?;
        let declared: u32 = d_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad cardinality {d_str:?}")))?;
        let inner = brace
            .trim()
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(malformed)?;
        let mut members = Vec::new();
        if !inner.trim().is_empty() {
            for item in inner.split(',') {
                let value: u32 = item
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad member {item:?}")))?;
                members.push(value);
            }
        }
        let set = Self::new(modulus, members)?;
        if set.cardinality() != declared {
            return Err(Error::Parse(format!(
                "declared cardinality {declared} but found {} members",
                set.cardinality()
            )));
        }
        Ok(set)
    }
}

/// A translation orbit, named by its lexicographically least member.
///
/// `orbit_size` is the number of distinct translates of the set; it always
/// divides `c` and equals the set's period (fewer than `c` distinct
/// translates means a mode of limited transposition).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslationClass {
    canonical: PitchClassSet,
    orbit_size: u32,
}

impl TranslationClass {
    pub fn canonical(&self) -> &PitchClassSet {
        &self.canonical
    }

    pub fn orbit_size(&self) -> u32 {
        self.orbit_size
    }
}

impl fmt::Display for TranslationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(c: u32, members: &[u32]) -> PitchClassSet {
        PitchClassSet::new(c, members.iter().copied()).unwrap()
    }

    #[test]
    fn translate_prototype_in_z10() {
        assert_eq!(set(10, &[0, 3, 5, 8]).translate(2), set(10, &[0, 2, 5, 7]));
    }

    #[test]
    fn translate_identity() {
        let a = set(12, &[0, 2, 4, 5, 7, 9, 11]);
        assert_eq!(a.translate(0), a);
    }

    #[test]
    fn translate_major_scale_by_five() {
        assert_eq!(
            set(12, &[0, 2, 4, 5, 7, 9, 11]).translate(5),
            set(12, &[0, 2, 4, 5, 7, 9, 10])
        );
    }

    #[test]
    fn translate_negative_shift() {
        let a = set(12, &[0, 2, 4]);
        assert_eq!(a.translate(-12), a);
        assert_eq!(a.translate(-1), set(12, &[1, 3, 11]));
    }

    #[test]
    fn invert_prototype_in_z10() {
        assert_eq!(set(10, &[0, 3, 5, 8]).invert(), set(10, &[0, 2, 5, 7]));
    }

    #[test]
    fn invert_empty() {
        let e = PitchClassSet::empty(7).unwrap();
        assert_eq!(e.invert(), e);
    }

    #[test]
    fn invert_major_scale() {
        assert_eq!(
            set(12, &[0, 2, 4, 5, 7, 9, 11]).invert(),
            set(12, &[0, 1, 3, 5, 7, 8, 10])
        );
    }

    #[test]
    fn complement_major_scale_is_pentatonic_translate() {
        let comp = set(12, &[0, 2, 4, 5, 7, 9, 11]).complement();
        assert_eq!(comp, set(12, &[1, 3, 6, 8, 10]));
        let penta = set(12, &[0, 2, 4, 7, 9]);
        assert_eq!(
            comp.canonical_class(false).canonical(),
            penta.canonical_class(false).canonical()
        );
    }

    #[test]
    fn complement_of_full_and_empty() {
        assert_eq!(
            PitchClassSet::full(9).unwrap().complement(),
            PitchClassSet::empty(9).unwrap()
        );
        assert_eq!(
            PitchClassSet::empty(5).unwrap().complement(),
            set(5, &[0, 1, 2, 3, 4])
        );
    }

    #[test]
    fn period_examples() {
        assert_eq!(set(12, &[0, 3, 6, 9]).period().unwrap(), 3);
        assert_eq!(set(12, &[0, 2, 4, 5, 7, 9, 11]).period().unwrap(), 12);
        let a = PitchClassSet::new(18, [0, 2, 4, 6, 9, 11, 13, 15]).unwrap();
        assert_eq!(a.period().unwrap(), 9);
    }

    #[test]
    fn period_of_empty_is_an_error() {
        assert_eq!(
            PitchClassSet::empty(6).unwrap().period(),
            Err(Error::UndefinedPeriod)
        );
    }

    #[test]
    fn canonical_class_of_rotated_prototype() {
        let class = set(10, &[2, 5, 7, 0]).canonical_class(false);
        assert_eq!(class.canonical(), &set(10, &[0, 2, 5, 7]));
        // {0,2,5,7} is 5-periodic ({0,2} + {0,5}), so only 5 translates exist.
        assert_eq!(class.orbit_size(), 5);
        assert_eq!(class.orbit_size(), class.canonical().period().unwrap());
    }

    #[test]
    fn canonical_class_of_diminished_seventh() {
        let class = set(12, &[0, 3, 6, 9]).canonical_class(false);
        assert_eq!(class.canonical(), &set(12, &[0, 3, 6, 9]));
        assert_eq!(class.orbit_size(), 3);
    }

    #[test]
    fn canonical_class_of_singleton() {
        for c in [1u32, 5, 12] {
            let class = set(c, &[0]).canonical_class(false);
            assert_eq!(class.canonical(), &set(c, &[0]));
            assert_eq!(class.orbit_size(), c);
        }
    }

    #[test]
    fn canonical_class_with_inversion_merges_orbits() {
        let major = set(12, &[0, 4, 7]);
        let minor = set(12, &[0, 3, 7]);
        assert_ne!(
            major.canonical_class(false).canonical(),
            minor.canonical_class(false).canonical()
        );
        assert_eq!(
            major.canonical_class(true).canonical(),
            minor.canonical_class(true).canonical()
        );
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(
            PitchClassSet::new(0, [0]).unwrap_err(),
            Error::ZeroModulus
        );
        assert_eq!(
            PitchClassSet::new(12, [12]).unwrap_err(),
            Error::MemberOutOfRange {
                value: 12,
                modulus: 12
            }
        );
        assert_eq!(
            PitchClassSet::new(12, [3, 3]).unwrap_err(),
            Error::DuplicateMember { value: 3 }
        );
        assert!(matches!(
            PitchClassSet::new(65, [0]).unwrap_err(),
            Error::ModulusTooLarge { .. }
        ));
        assert!(PitchClassSet::with_max_modulus(200, [0, 199], 200).is_ok());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let text = "12:7:{0,2,4,5,7,9,11}";
        let set: PitchClassSet = text.parse().unwrap();
        assert_eq!(set.to_string(), text);
        let empty: PitchClassSet = "12:0:{}".parse().unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.to_string(), "12:0:{}");
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        assert!("12:7:{0,2,4,5,7,9,12}".parse::<PitchClassSet>().is_err());
        assert!("12:7:{0,2,4,5,7,9,9}".parse::<PitchClassSet>().is_err());
        assert!("12:6:{0,2,4,5,7,9,11}".parse::<PitchClassSet>().is_err());
        assert!("12:{0}".parse::<PitchClassSet>().is_err());
        assert!("0:0:{}".parse::<PitchClassSet>().is_err());
        assert!("12:1:0".parse::<PitchClassSet>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_set() -> impl Strategy<Value = PitchClassSet> {
            (1u32..=24).prop_flat_map(|c| {
                proptest::bits::u32::masked((1u64 << c).wrapping_sub(1) as u32).prop_map(
                    move |mask| {
                        let members = (0..c).filter(|&b| mask & (1 << b) != 0);
                        PitchClassSet::new(c, members).unwrap()
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn display_parse_round_trip(a in arb_set()) {
                let back: PitchClassSet = a.to_string().parse().unwrap();
                prop_assert_eq!(back, a);
            }

            #[test]
            fn involutions(a in arb_set()) {
                prop_assert_eq!(a.complement().complement(), a.clone());
                prop_assert_eq!(a.invert().invert(), a);
            }

            #[test]
            fn canonical_is_translation_invariant(a in arb_set(), t in 0i64..64) {
                prop_assert_eq!(a.translate(t).canonical_class(false), a.canonical_class(false));
            }

            #[test]
            fn period_facts(a in arb_set(), t in 0i64..64) {
                prop_assume!(!a.is_empty());
                let p = a.period().unwrap();
                prop_assert_eq!(a.modulus() % p, 0);
                prop_assert_eq!(a.translate(t).period().unwrap(), p);
                prop_assert_eq!(a.invert().period().unwrap(), p);
                prop_assert_eq!(a.canonical_class(false).orbit_size(), p);
            }
        }
    }
}
