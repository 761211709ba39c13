//! Subgroup and quotient division graphs read off the parent graph,
//! checked against direct computation.

use std::collections::BTreeSet;

use divgraph::divgraph::division_graph_with_lattice;
use divgraph::extraction::{
    check_extraction, division_images, extract_quotient, extract_subgroup, subgroup_as_group, DedupMode,
};
use divgraph::{all_subgroups, catalog_str, divisions, Group, Limits};

fn limits() -> Limits {
    Limits::default()
}

fn direct(g: &Group) -> divgraph::DivisionGraph {
    division_graph_with_lattice(g, &all_subgroups(g, &limits()).unwrap())
}

#[test]
fn every_subgroup_of_s4() {
    let l = limits();
    let g = catalog_str("symmetric:4", &l).unwrap();
    let lat = all_subgroups(&g, &l).unwrap();
    let dg = division_graph_with_lattice(&g, &lat);
    for h in 0..lat.len() {
        let sub = subgroup_as_group(&g, &lat.subgroup(h).members, &format!("H{h}"));
        let want = direct(&sub);
        let ex = extract_subgroup(&dg, h, DedupMode::LabeledColors, l.search_budget).unwrap();
        let check = check_extraction(&ex, DedupMode::LabeledColors, &want, l.search_budget).unwrap();
        assert!(check.matches(), "H{h} (order {}): {check:?}", sub.order());
        assert_eq!(ex.colors.len(), all_subgroups(&sub, &l).unwrap().len(), "H{h}");
        let loose = extract_subgroup(&dg, h, DedupMode::FeaturelessColors, l.search_budget).unwrap();
        assert!(loose.components.len() <= ex.components.len());
    }
}

#[test]
fn subgroups_of_assorted_groups() {
    let l = limits();
    for s in ["quaternion8", "dihedral:6", "alternating:4", "product:cyclic:2:cyclic:4", "heisenberg27"] {
        let g = catalog_str(s, &l).unwrap();
        let lat = all_subgroups(&g, &l).unwrap();
        let dg = division_graph_with_lattice(&g, &lat);
        for h in 0..lat.len() {
            let sub = subgroup_as_group(&g, &lat.subgroup(h).members, "h");
            let ex = extract_subgroup(&dg, h, DedupMode::LabeledColors, l.search_budget).unwrap();
            let check = check_extraction(&ex, DedupMode::LabeledColors, &direct(&sub), l.search_budget).unwrap();
            assert!(check.matches(), "{s} H{h}: {check:?}");
        }
    }
}

#[test]
fn quotients_and_division_images() {
    let l = limits();
    for s in ["quaternion8", "dihedral:4", "symmetric:4", "alternating:4", "dihedral:6", "product:symmetric:3:cyclic:2"] {
        let g = catalog_str(s, &l).unwrap();
        let lat = all_subgroups(&g, &l).unwrap();
        let dg = division_graph_with_lattice(&g, &lat);
        for n in (0..lat.len()).filter(|&n| lat.is_normal(&g, n)) {
            let (q, proj) = g.quotient(&lat.subgroup(n).members);
            let want = direct(&q);
            let ex = extract_quotient(&dg, n, DedupMode::LabeledColors, l.search_budget).unwrap();
            let check = check_extraction(&ex, DedupMode::LabeledColors, &want, l.search_budget).unwrap();
            assert!(check.matches(), "{s} / N{n}: {check:?}");
            let images = division_images(&g, &proj);
            let direct_divs: BTreeSet<Vec<usize>> = divisions(&q).into_iter().map(|d| d.members).collect();
            assert_eq!(images, direct_divs, "{s} / N{n}");
        }
    }
}
