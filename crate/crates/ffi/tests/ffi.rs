use std::ffi::{CStr, CString};
use std::ptr;

use divgraph_ffi::*;

fn group(desc: &str) -> *mut DgGroup {
    let d = CString::new(desc).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { dg_group_from_catalog(d.as_ptr(), &mut g) }, DgStatus::Ok);
    g
}

fn last_error() -> String {
    let p = dg_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn q8_round_trip() {
    let g = group("quaternion8");
    let mut n = 0usize;
    unsafe {
        assert_eq!(dg_group_order(g, &mut n), DgStatus::Ok);
        assert_eq!(n, 8);
        assert_eq!(dg_group_division_count(g, &mut n), DgStatus::Ok);
        assert_eq!(n, 5);
        let mut dg = ptr::null_mut();
        assert_eq!(dg_division_graph_new(g, &mut dg), DgStatus::Ok);
        assert_eq!(dg_division_graph_component_count(dg, &mut n), DgStatus::Ok);
        assert_eq!(n, 5);
        let mut s = ptr::null_mut();
        assert_eq!(dg_division_graph_to_dot(dg, &mut s), DgStatus::Ok);
        assert!(CStr::from_ptr(s).to_str().unwrap().starts_with("digraph division_graph"));
        dg_string_free(s);
        assert_eq!(dg_division_graph_to_json(dg, &mut s), DgStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap();
        assert!(text.contains("\"components\"") && text.contains("\"schema_version\": 1"));
        dg_string_free(s);
        assert_eq!(dg_division_graph_fingerprint(dg, 100_000, &mut s), DgStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_bytes().len(), 64);
        dg_string_free(s);
        dg_division_graph_free(dg);
        dg_group_free(g);
    }
}

#[test]
fn compare_groups() {
    let (a, b, c) = (group("cyclic:4"), group("klein4"), group("product:cyclic:2:cyclic:2"));
    let mut same = -1;
    unsafe {
        assert_eq!(dg_compare(a, b, 100_000, &mut same), DgStatus::Ok);
        assert_eq!(same, 0);
        assert_eq!(dg_compare(b, c, 100_000, &mut same), DgStatus::Ok);
        assert_eq!(same, 1);
        for g in [a, b, c] {
            dg_group_free(g);
        }
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(dg_group_from_catalog(ptr::null(), &mut g), DgStatus::InvalidArgument);
        assert!(last_error().contains("null"));
        let bad = CString::new("no_such_group").unwrap();
        assert_eq!(dg_group_from_catalog(bad.as_ptr(), &mut g), DgStatus::InvalidGroup);
        assert!(last_error().contains("no_such_group"));
        let big = CString::new("symmetric:8").unwrap();
        assert_eq!(dg_group_from_catalog(big.as_ptr(), &mut g), DgStatus::CapExceeded);
        let loop_table = CString::new(r#"{"name":"l","order":5,"table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#).unwrap();
        assert_eq!(dg_group_from_json(loop_table.as_ptr(), &mut g), DgStatus::InvalidGroup);
        assert!(last_error().contains("associative"));
        let s5 = group("symmetric:5");
        let mut dg = ptr::null_mut();
        assert_eq!(dg_division_graph_new(s5, &mut dg), DgStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(dg_division_graph_fingerprint(dg, 1, &mut s), DgStatus::BudgetExceeded);
        dg_division_graph_free(dg);
        dg_group_free(s5);
        assert_eq!(dg_group_order(ptr::null(), ptr::null_mut()), DgStatus::InvalidArgument);
        dg_group_free(ptr::null_mut());
        dg_string_free(ptr::null_mut());
    }
}

#[test]
fn json_groups() {
    let text = CString::new(r#"{"name":"s3","degree":3,"generators":[[2,1,3],[2,3,1]]}"#).unwrap();
    let mut g = ptr::null_mut();
    let mut n = 0;
    unsafe {
        assert_eq!(dg_group_from_json(text.as_ptr(), &mut g), DgStatus::Ok);
        assert_eq!(dg_group_division_count(g, &mut n), DgStatus::Ok);
        assert_eq!(n, 3);
        dg_group_free(g);
    }
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/divgraph.h")).unwrap();
    for name in [
        "typedef struct DgGroup DgGroup;",
        "typedef struct DgDivisionGraph DgDivisionGraph;",
        "DG_STATUS_BUDGET_EXCEEDED = 4",
        "dg_group_from_catalog",
        "dg_division_graph_to_dot",
        "dg_compare",
        "dg_string_free",
        "dg_last_error_message",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
