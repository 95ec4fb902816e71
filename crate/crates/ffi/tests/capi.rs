//! Exercises the C ABI from the Rust side, through the exported symbols and
//! raw pointers exactly as a C caller would use them.

use std::ffi::{CStr, CString};
use std::ptr;

use evenscale_ffi::*;

fn parse(text: &str) -> *mut EsSet {
    let c_text = CString::new(text).unwrap();
    let mut set = ptr::null_mut();
    let status = unsafe { es_set_parse(c_text.as_ptr(), &mut set) };
    assert_eq!(status, EsStatus::Ok, "parse {text}");
    assert!(!set.is_null());
    set
}

fn members_of(set: *const EsSet) -> Vec<u32> {
    let len = unsafe { es_set_cardinality(set) } as usize;
    let mut buf = vec![0u32; len];
    let status = unsafe { es_set_members(set, buf.as_mut_ptr(), len) };
    assert_eq!(status, EsStatus::Ok);
    buf
}

fn take_string(raw: *mut std::ffi::c_char) -> String {
    assert!(!raw.is_null());
    let text = unsafe { CStr::from_ptr(raw) }.to_str().unwrap().to_owned();
    unsafe { es_string_free(raw) };
    text
}

#[test]
fn parse_inspect_format_round_trip() {
    let set = parse("12:7:{0,2,4,5,7,9,11}");
    unsafe {
        assert_eq!(es_set_modulus(set), 12);
        assert_eq!(es_set_cardinality(set), 7);
        assert_eq!(members_of(set), [0, 2, 4, 5, 7, 9, 11]);
        assert_eq!(take_string(es_set_format(set)), "12:7:{0,2,4,5,7,9,11}");
        es_set_free(set);
    }
}

#[test]
fn construction_and_errors() {
    unsafe {
        let members = [0u32, 3, 6, 9];
        let mut set = ptr::null_mut();
        let status = es_set_new(12, members.as_ptr(), members.len(), &mut set);
        assert_eq!(status, EsStatus::Ok);
        assert_eq!(members_of(set), members);
        es_set_free(set);

        let mut empty = ptr::null_mut();
        assert_eq!(es_set_new(5, ptr::null(), 0, &mut empty), EsStatus::Ok);
        assert_eq!(es_set_cardinality(empty), 0);
        es_set_free(empty);

        let mut out = ptr::null_mut();
        let dup = [1u32, 1];
        assert_eq!(
            es_set_new(12, dup.as_ptr(), 2, &mut out),
            EsStatus::InvalidArgument
        );
        let bad = CString::new("not-a-set").unwrap();
        assert_eq!(es_set_parse(bad.as_ptr(), &mut out), EsStatus::ParseError);
        assert_eq!(es_set_parse(ptr::null(), &mut out), EsStatus::NullPointer);
        es_set_free(ptr::null_mut()); // no-op
        es_string_free(ptr::null_mut()); // no-op
    }
}

#[test]
fn group_operations() {
    let set = parse("10:4:{0,3,5,8}");
    unsafe {
        let mut translated = ptr::null_mut();
        assert_eq!(es_set_translate(set, 2, &mut translated), EsStatus::Ok);
        assert_eq!(members_of(translated), [0, 2, 5, 7]);

        let mut inverted = ptr::null_mut();
        assert_eq!(es_set_invert(set, &mut inverted), EsStatus::Ok);
        assert_eq!(members_of(inverted), [0, 2, 5, 7]);

        let mut complement = ptr::null_mut();
        assert_eq!(es_set_complement(set, &mut complement), EsStatus::Ok);
        assert_eq!(members_of(complement), [1, 2, 4, 6, 7, 9]);

        let mut canonical = ptr::null_mut();
        let mut orbit = 0u32;
        assert_eq!(
            es_set_canonical(set, false, &mut canonical, &mut orbit),
            EsStatus::Ok
        );
        assert_eq!(members_of(canonical), [0, 2, 5, 7]);
        assert_eq!(orbit, 5);

        for handle in [set, translated, inverted, complement, canonical] {
            es_set_free(handle);
        }
    }
}

#[test]
fn period_and_undefined_cases() {
    unsafe {
        let d7 = parse("12:4:{0,3,6,9}");
        let mut period = 0u32;
        assert_eq!(es_set_period(d7, &mut period), EsStatus::Ok);
        assert_eq!(period, 3);
        es_set_free(d7);

        let empty = parse("12:0:{}");
        assert_eq!(es_set_period(empty, &mut period), EsStatus::Undefined);
        es_set_free(empty);
    }
}

#[test]
fn spectral_buffers() {
    unsafe {
        let d7 = parse("12:4:{0,3,6,9}");
        let mut magnitudes = vec![0f64; 12];
        assert_eq!(
            es_set_dft_magnitudes(d7, magnitudes.as_mut_ptr(), 12),
            EsStatus::Ok
        );
        assert!((magnitudes[4] - 4.0).abs() < 1e-9);
        assert!(magnitudes[1].abs() < 1e-9);
        assert_eq!(
            es_set_dft_magnitudes(d7, magnitudes.as_mut_ptr(), 4),
            EsStatus::BufferTooSmall
        );
        es_set_free(d7);

        let major = parse("12:7:{0,2,4,5,7,9,11}");
        let mut ic = vec![0u64; 12];
        assert_eq!(
            es_set_interval_content(major, ic.as_mut_ptr(), 12),
            EsStatus::Ok
        );
        assert_eq!(ic, [7, 2, 5, 4, 3, 6, 2, 6, 3, 4, 5, 2]);
        es_set_free(major);
    }
}

#[test]
fn evenness_formula_and_counts() {
    unsafe {
        let mut formula = ptr::null_mut();
        assert_eq!(es_me_formula(12, 5, 0, 1, &mut formula), EsStatus::Ok);
        assert_eq!(members_of(formula), [0, 2, 4, 7, 9]);
        let mut even = false;
        assert_eq!(es_set_is_maximally_even(formula, &mut even), EsStatus::Ok);
        assert!(even);
        es_set_free(formula);

        assert_eq!(
            es_me_formula(12, 0, 0, 1, &mut formula),
            EsStatus::InvalidArgument
        );
        assert_eq!(
            es_me_formula(12, 5, 1, 0, &mut formula),
            EsStatus::InvalidArgument
        );

        let mut count = 0u32;
        assert_eq!(es_me_class_count(10, 4, &mut count), EsStatus::Ok);
        assert_eq!(count, 5);

        let minor = parse("12:7:{0,2,3,5,7,8,11}");
        assert_eq!(es_set_is_maximally_even(minor, &mut even), EsStatus::Ok);
        assert!(!even);
        es_set_free(minor);
    }
}

#[test]
fn classification_surface() {
    unsafe {
        let mut record = EsClassification {
            kind: EsScaleKind::Degenerate,
            m: 0,
            c_prime: 0,
            d_prime: 0,
            generator: 0,
            period: 0,
        };
        assert_eq!(es_classify(18, 8, &mut record), EsStatus::Ok);
        assert_eq!(record.kind, EsScaleKind::III);
        assert_eq!((record.m, record.c_prime, record.d_prime), (2, 9, 4));
        assert_eq!(record.generator, -1);
        assert_eq!(record.period, 9);

        assert_eq!(es_classify(12, 7, &mut record), EsStatus::Ok);
        assert_eq!(record.kind, EsScaleKind::I);
        assert_eq!(record.generator, 7);

        assert_eq!(es_classify(12, 12, &mut record), EsStatus::InvalidArgument);

        let mut reduced = ptr::null_mut();
        assert_eq!(es_classify_reduced(18, 8, &mut reduced), EsStatus::Ok);
        assert_eq!(es_set_modulus(reduced), 9);
        assert_eq!(members_of(reduced), [0, 2, 4, 6]);
        es_set_free(reduced);

        assert_eq!(es_classify_reduced(12, 7, &mut reduced), EsStatus::Ok);
        assert!(reduced.is_null());
    }
}

#[test]
fn type_iii_machinery() {
    unsafe {
        let mut found = 0i64;
        assert_eq!(es_type_iii_search(12, &mut found), EsStatus::Ok);
        assert_eq!(found, -1);
        assert_eq!(es_type_iii_search(18, &mut found), EsStatus::Ok);
        assert_eq!(found, 4);

        let (mut k, mut p, mut d) = (0u32, 0u32, 0u32);
        let mut witness = ptr::null_mut();
        assert_eq!(
            es_lemma_witness(18, &mut k, &mut p, &mut d, &mut witness),
            EsStatus::Ok
        );
        assert_eq!((k, p, d), (9, 2, 10));
        assert_eq!(es_set_cardinality(witness), 10);
        es_set_free(witness);

        assert_eq!(
            es_lemma_witness(13, &mut k, &mut p, &mut d, &mut witness),
            EsStatus::OutOfScope
        );
    }
}

#[test]
fn scalar_properties_and_generator() {
    unsafe {
        let penta = parse("12:5:{0,2,4,7,9}");
        let mut angular = 0u64;
        assert_eq!(es_set_angular_sum(penta, &mut angular), EsStatus::Ok);
        assert_eq!(angular, 72);
        let mut chord = 0f64;
        assert_eq!(es_set_euclidean_sum(penta, &mut chord), EsStatus::Ok);
        assert!((chord - 30.5758).abs() < 1e-4);
        es_set_free(penta);

        let major = parse("12:7:{0,2,4,5,7,9,11}");
        let mut generator = 0i64;
        assert_eq!(es_set_find_generator(major, &mut generator), EsStatus::Ok);
        assert!(generator == 5 || generator == 7);
        es_set_free(major);

        let type3 = parse("18:8:{0,2,4,6,9,11,13,15}");
        assert_eq!(es_set_find_generator(type3, &mut generator), EsStatus::Ok);
        assert_eq!(generator, -1);
        es_set_free(type3);
    }
}

#[test]
fn json_and_svg_emission() {
    unsafe {
        let major = parse("12:7:{0,2,4,5,7,9,11}");
        let json = take_string(es_set_analyze_json(major));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["classification"]["type"], "I");
        assert_eq!(value["maximallyEven"], true);

        let svg = take_string(es_set_svg(major, true));
        assert!(svg.starts_with("<svg xmlns="));
        assert!(svg.trim_end().ends_with("</svg>"));
        es_set_free(major);

        assert!(es_set_analyze_json(ptr::null()).is_null());
        assert!(es_set_svg(ptr::null(), false).is_null());
    }
}

#[test]
fn generated_header_covers_the_surface() {
    let header = include_str!("../include/evenscale.h");
    for symbol in [
        "typedef struct EsSet EsSet;",
        "es_set_parse",
        "es_set_new",
        "es_set_free",
        "es_string_free",
        "es_set_members",
        "es_set_translate",
        "es_set_period",
        "es_set_canonical",
        "es_set_dft_magnitudes",
        "es_set_interval_content",
        "es_me_formula",
        "es_me_class_count",
        "es_classify",
        "es_type_iii_search",
        "es_lemma_witness",
        "es_set_analyze_json",
        "es_set_svg",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
