//! C ABI for the evenscale library.
//!
//! Conventions: sets travel as opaque `EsSet` handles created by the
//! constructors here and released with [`es_set_free`]; every fallible call
//! returns an [`EsStatus`] and writes its results through out-pointers;
//! strings returned by the library are NUL-terminated, UTF-8, and owned by
//! the caller, to be released with [`es_string_free`].

use std::ffi::{c_char, CStr, CString};

use evenscale::classify;
use evenscale::maxeven;
use evenscale::pcs::PitchClassSet;
use evenscale::properties;
use evenscale::spectral::{IntervalVector, Spectrum};
use evenscale::svg::{polygon_svg, SvgOptions};
use evenscale::Error;

/// Result code for every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EsStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer,
    /// An argument violated a precondition (range, cardinality, coprimality).
    InvalidArgument,
    /// A set literal or rational offset failed to parse.
    ParseError,
    /// The operation is undefined for this input (e.g. period of the empty set).
    Undefined,
    /// The requested enumeration exceeds the configured budget.
    TooLarge,
    /// The input set is not maximally even.
    NotMaximallyEven,
    /// The modulus is outside the theorem's scope.
    OutOfScope,
    /// The output buffer is too small.
    BufferTooSmall,
    /// Internal invariant failure.
    Internal,
}

fn status_of(error: &Error) -> EsStatus {
    match error {
        Error::Parse(_) => EsStatus::ParseError,
        Error::UndefinedPeriod | Error::EmptySet => EsStatus::Undefined,
        Error::EnumerationTooLarge { .. } => EsStatus::TooLarge,
        Error::NotMaximallyEven => EsStatus::NotMaximallyEven,
        Error::OutOfTheoremScope(_) => EsStatus::OutOfScope,
        Error::Certification(_) => EsStatus::Internal,
        _ => EsStatus::InvalidArgument,
    }
}

/// Opaque pitch-class set handle.
pub struct EsSet {
    inner: PitchClassSet,
}

fn give(set: PitchClassSet, out: *mut *mut EsSet) -> EsStatus {
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    let handle = Box::new(EsSet { inner: set });
    unsafe { *out = Box::into_raw(handle) };
    EsStatus::Ok
}

unsafe fn borrow<'a>(set: *const EsSet) -> Option<&'a PitchClassSet> {
    unsafe { set.as_ref() }.map(|s| &s.inner)
}

fn give_string(text: String) -> *mut c_char {
    match CString::new(text) {
        Ok(s) => s.into_raw(),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Parses a set literal `c:d:{a1,a2,...}` into a new handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn es_set_parse(text: *const c_char, out: *mut *mut EsSet) -> EsStatus {
    if text.is_null() || out.is_null() {
        return EsStatus::NullPointer;
    }
    let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return EsStatus::ParseError;
    };
    match text.parse::<PitchClassSet>() {
        Ok(set) => give(set, out),
        Err(e) => status_of(&e),
    }
}

/// Builds a set from `len` members in `0..modulus`. `members` may be NULL
/// when `len` is 0.
///
/// # Safety
/// `members` must point to `len` readable `uint32_t`s when `len > 0`.
#[no_mangle]
pub unsafe extern "C" fn es_set_new(
    modulus: u32,
    members: *const u32,
    len: usize,
    out: *mut *mut EsSet,
) -> EsStatus {
    if out.is_null() || (members.is_null() && len > 0) {
        return EsStatus::NullPointer;
    }
    let values: &[u32] = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(members, len) }
    };
    match PitchClassSet::new(modulus, values.iter().copied()) {
        Ok(set) => give(set, out),
        Err(e) => status_of(&e),
    }
}

/// Releases a handle returned by any constructor here. NULL is a no-op.
///
/// # Safety
/// `set` must be a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn es_set_free(set: *mut EsSet) {
    if !set.is_null() {
        drop(unsafe { Box::from_raw(set) });
    }
}

/// Frees a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `text` must be a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn es_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

/// The modulus `c`, or 0 for a NULL handle.
/// # Safety
/// `set` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn es_set_modulus(set: *const EsSet) -> u32 {
    unsafe { borrow(set) }.map_or(0, PitchClassSet::modulus)
}

/// The cardinality `|A|`, or 0 for a NULL handle.
/// # Safety
/// `set` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn es_set_cardinality(set: *const EsSet) -> u32 {
    unsafe { borrow(set) }.map_or(0, PitchClassSet::cardinality)
}

/// Copies the members (ascending) into `buf`.
///
/// # Safety
/// `buf` must have room for `len` values, with `len >= cardinality`.
#[no_mangle]
pub unsafe extern "C" fn es_set_members(set: *const EsSet, buf: *mut u32, len: usize) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if buf.is_null() {
        return EsStatus::NullPointer;
    }
    if len < a.members().len() {
        return EsStatus::BufferTooSmall;
    }
    unsafe { std::ptr::copy_nonoverlapping(a.members().as_ptr(), buf, a.members().len()) };
    EsStatus::Ok
}

/// The set literal `c:d:{a1,...}` as a newly allocated string, or NULL.
/// # Safety
/// `set` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn es_set_format(set: *const EsSet) -> *mut c_char {
    match unsafe { borrow(set) } {
        Some(a) => give_string(a.to_string()),
        None => std::ptr::null_mut(),
    }
}

/// `A + shift (mod c)` as a new handle.
/// # Safety
/// `set` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_translate(set: *const EsSet, shift: i64, out: *mut *mut EsSet) -> EsStatus {
    match unsafe { borrow(set) } {
        Some(a) => give(a.translate(shift), out),
        None => EsStatus::NullPointer,
    }
}

/// `-A (mod c)` as a new handle.
/// # Safety
/// `set` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_invert(set: *const EsSet, out: *mut *mut EsSet) -> EsStatus {
    match unsafe { borrow(set) } {
        Some(a) => give(a.invert(), out),
        None => EsStatus::NullPointer,
    }
}

/// `Z_c \ A` as a new handle.
/// # Safety
/// `set` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_complement(set: *const EsSet, out: *mut *mut EsSet) -> EsStatus {
    match unsafe { borrow(set) } {
        Some(a) => give(a.complement(), out),
        None => EsStatus::NullPointer,
    }
}

/// Smallest `t > 0` with `A + t = A`; `EsStatus::Undefined` for the empty set.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_period(set: *const EsSet, out: *mut u32) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    match a.period() {
        Ok(p) => {
            unsafe { *out = p };
            EsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Canonical (lexicographically least) representative of the translation
/// orbit, optionally folding in inversion; also reports the orbit size.
///
/// # Safety
/// `out_set` and `out_orbit_size` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn es_set_canonical(
    set: *const EsSet,
    include_inversion: bool,
    out_set: *mut *mut EsSet,
    out_orbit_size: *mut u32,
) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if out_orbit_size.is_null() {
        return EsStatus::NullPointer;
    }
    let class = a.canonical_class(include_inversion);
    unsafe { *out_orbit_size = class.orbit_size() };
    give(class.canonical().clone(), out_set)
}

/// Writes the `c` magnitudes `|F_A(0)|..|F_A(c-1)|` into `buf`.
///
/// # Safety
/// `buf` must have room for `len` doubles, with `len >= c`.
#[no_mangle]
pub unsafe extern "C" fn es_set_dft_magnitudes(
    set: *const EsSet,
    buf: *mut f64,
    len: usize,
) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if buf.is_null() {
        return EsStatus::NullPointer;
    }
    if len < a.modulus() as usize {
        return EsStatus::BufferTooSmall;
    }
    let magnitudes = Spectrum::of_set(a).magnitudes();
    unsafe { std::ptr::copy_nonoverlapping(magnitudes.as_ptr(), buf, magnitudes.len()) };
    EsStatus::Ok
}

/// Writes the `c` interval-content counts `IC_A(0)..IC_A(c-1)` into `buf`.
///
/// # Safety
/// `buf` must have room for `len` values, with `len >= c`.
#[no_mangle]
pub unsafe extern "C" fn es_set_interval_content(
    set: *const EsSet,
    buf: *mut u64,
    len: usize,
) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if buf.is_null() {
        return EsStatus::NullPointer;
    }
    if len < a.modulus() as usize {
        return EsStatus::BufferTooSmall;
    }
    let ic = IntervalVector::of_set(a);
    unsafe { std::ptr::copy_nonoverlapping(ic.counts().as_ptr(), buf, ic.counts().len()) };
    EsStatus::Ok
}

/// Whether `|F_A(d)|` attains the proven maximum for its cardinality.
/// Requires `0 < |A| < c`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_is_maximally_even(set: *const EsSet, out: *mut bool) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    match maxeven::is_maximally_even(a) {
        Ok(value) => {
            unsafe { *out = value };
            EsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The maximally even set of `(c, d)` from the floor generator with the
/// rational offset `alpha_numer/alpha_denom`.
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_me_formula(
    modulus: u32,
    cardinality: u32,
    alpha_numer: i64,
    alpha_denom: i64,
    out: *mut *mut EsSet,
) -> EsStatus {
    let alpha = match maxeven::Rational::new(alpha_numer, alpha_denom) {
        Ok(r) => r,
        Err(e) => return status_of(&e),
    };
    match maxeven::me_formula(&maxeven::MEQuery::new(modulus, cardinality).with_alpha(alpha)) {
        Ok(set) => give(set, out),
        Err(e) => status_of(&e),
    }
}

/// Number of distinct maximally even sets of `(c, d)`: `c / gcd(c, d)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_me_class_count(
    modulus: u32,
    cardinality: u32,
    out: *mut u32,
) -> EsStatus {
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    match maxeven::me_class_count(modulus, cardinality) {
        Ok(count) => {
            unsafe { *out = count };
            EsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Type tag of a maximally even class.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EsScaleKind {
    I = 0,
    IIa,
    IIb,
    III,
    Degenerate,
}

/// Classification record for the maximally even class of `(c, d)`.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct EsClassification {
    pub kind: EsScaleKind,
    /// `gcd(c, d)`.
    pub m: u32,
    pub c_prime: u32,
    pub d_prime: u32,
    /// `d^{-1} mod c` for type I, otherwise -1.
    pub generator: i64,
    /// Period of the class: `c / m`.
    pub period: u32,
}

/// Classifies the `(c, d)` maximally even class. Requires `0 < d < c`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_classify(
    modulus: u32,
    cardinality: u32,
    out: *mut EsClassification,
) -> EsStatus {
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    match classify::classify(modulus, cardinality) {
        Ok(cl) => {
            let kind = match cl.me_type {
                classify::METype::I => EsScaleKind::I,
                classify::METype::IIa => EsScaleKind::IIa,
                classify::METype::IIb => EsScaleKind::IIb,
                classify::METype::III => EsScaleKind::III,
                classify::METype::DegenerateTrivial => EsScaleKind::Degenerate,
            };
            unsafe {
                *out = EsClassification {
                    kind,
                    m: cl.m,
                    c_prime: cl.c_prime,
                    d_prime: cl.d_prime,
                    generator: cl.generator.map_or(-1, i64::from),
                    period: cl.period,
                };
            }
            EsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The reduced maximally even set of `Z_{c'}` for the `(c, d)` class, or a
/// NULL handle when `gcd(c, d) = 1` (type I has no reduction).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_classify_reduced(
    modulus: u32,
    cardinality: u32,
    out: *mut *mut EsSet,
) -> EsStatus {
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    match classify::classify(modulus, cardinality) {
        Ok(cl) => match cl.reduced {
            Some(set) => give(set, out),
            None => {
                unsafe { *out = std::ptr::null_mut() };
                EsStatus::Ok
            }
        },
        Err(e) => status_of(&e),
    }
}

/// Smallest type III cardinality for this modulus, or -1 when none exists.
/// Requires `c >= 2`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_type_iii_search(modulus: u32, out: *mut i64) -> EsStatus {
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    match classify::type_iii_search(modulus) {
        Ok(found) => {
            unsafe { *out = found.map_or(-1, i64::from) };
            EsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Constructive type III witness for composite `c > 12`: the divisor `k`,
/// prime `p`, witness cardinality, and the witness set itself.
///
/// # Safety
/// All out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn es_lemma_witness(
    modulus: u32,
    out_k: *mut u32,
    out_p: *mut u32,
    out_cardinality: *mut u32,
    out_witness: *mut *mut EsSet,
) -> EsStatus {
    if out_k.is_null() || out_p.is_null() || out_cardinality.is_null() {
        return EsStatus::NullPointer;
    }
    match classify::lemma_witness(modulus) {
        Ok(w) => {
            unsafe {
                *out_k = w.k;
                *out_p = w.p;
                *out_cardinality = w.cardinality;
            }
            give(w.witness, out_witness)
        }
        Err(e) => status_of(&e),
    }
}

/// Exhaustive generator search (smallest `f >= 1` generating the set), or
/// -1 when the set is not a generated scale.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_find_generator(set: *const EsSet, out: *mut i64) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    unsafe { *out = classify::find_generator(a).map_or(-1, i64::from) };
    EsStatus::Ok
}

/// Sum of circular distances over ordered pairs.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_angular_sum(set: *const EsSet, out: *mut u64) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    unsafe { *out = properties::angular_interval_sum(a) };
    EsStatus::Ok
}

/// Sum of unit-circle chord lengths over ordered pairs.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_set_euclidean_sum(set: *const EsSet, out: *mut f64) -> EsStatus {
    let Some(a) = (unsafe { borrow(set) }) else {
        return EsStatus::NullPointer;
    };
    if out.is_null() {
        return EsStatus::NullPointer;
    }
    unsafe { *out = properties::euclidean_chord_sum(a) };
    EsStatus::Ok
}

/// Full analysis of the set as a JSON document (same schema as the CLI's
/// `analyze --format json`), or NULL on failure.
/// # Safety
/// `set` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn es_set_analyze_json(set: *const EsSet) -> *mut c_char {
    let Some(a) = (unsafe { borrow(set) }) else {
        return std::ptr::null_mut();
    };
    let cli = evenscale::cli::Cli {
        command: evenscale::cli::Command::Analyze {
            set: a.to_string(),
            format: evenscale::cli::Format::Json,
            include_inversion: false,
        },
    };
    let mut buffer = Vec::new();
    match evenscale::cli::run(&cli, &mut buffer) {
        Ok(()) => match String::from_utf8(buffer) {
            Ok(text) => give_string(text),
            Err(_) => std::ptr::null_mut(),
        },
        Err(_) => std::ptr::null_mut(),
    }
}

/// Standalone SVG rendering of the set as an inscribed polygon, or NULL.
/// # Safety
/// `set` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn es_set_svg(set: *const EsSet, labels: bool) -> *mut c_char {
    let Some(a) = (unsafe { borrow(set) }) else {
        return std::ptr::null_mut();
    };
    let options = SvgOptions {
        labels,
        ..SvgOptions::default()
    };
    give_string(polygon_svg(a, &options))
}
