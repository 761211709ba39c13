//! Subgroup lattices against brute-force subset enumeration and known counts.

use std::collections::BTreeSet;

use divgraph::catalog::{catalog, standard_catalog};
use divgraph::{all_subgroups, catalog_str, Group, Limits};

/// Every subset containing the identity that is closed under products.
fn brute_subgroups(g: &Group) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let set: Vec<usize> = std::iter::once(0).chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1)).collect();
        let mut member = vec![false; n];
        for &x in &set {
            member[x] = true;
        }
        if set.iter().all(|&a| set.iter().all(|&b| member[g.mul(a, b)])) {
            out.insert(set);
        }
    }
    out
}

#[test]
fn lattice_matches_subset_enumeration() {
    let l = Limits::default();
    let mut groups: Vec<Group> =
        standard_catalog(16).iter().filter(|d| d.order() <= 16).map(|d| catalog(d, &l).unwrap()).collect();
    groups.retain(|g| g.order() <= 16);
    assert!(groups.len() > 20);
    for g in &groups {
        let lat = all_subgroups(g, &l).unwrap();
        let direct: BTreeSet<Vec<usize>> = lat.subgroups().iter().map(|s| s.members.to_vec()).collect();
        let brute = brute_subgroups(g);
        assert_eq!(direct, brute, "{}", g.name());

        let subs: Vec<Vec<usize>> = lat.subgroups().iter().map(|s| s.members.to_vec()).collect();
        let contains = |a: &[usize], b: &[usize]| b.iter().all(|x| a.contains(x));
        let mut covers = BTreeSet::new();
        for (i, a) in subs.iter().enumerate() {
            for (j, b) in subs.iter().enumerate() {
                let proper = i != j && contains(a, b);
                let between = subs.iter().enumerate().any(|(k, c)| k != i && k != j && contains(a, c) && contains(c, b));
                if proper && !between {
                    covers.insert((i, j, a.len() / b.len()));
                }
            }
        }
        let got: BTreeSet<(usize, usize, usize)> = lat.covers().iter().map(|c| (c.lower, c.upper, c.index)).collect();
        assert_eq!(got, covers, "{}", g.name());

        for (i, s) in subs.iter().enumerate() {
            let normal = g.elements().all(|x| s.iter().all(|&h| s.contains(&g.conjugate(h, x))));
            assert_eq!(lat.is_normal(g, i), normal, "{} subgroup {i}", g.name());
        }
        assert_eq!(lat.subgroup(lat.trivial()).order(), 1);
        assert_eq!(lat.subgroup(lat.whole()).order(), g.order());
    }
}

#[test]
fn known_subgroup_counts() {
    let l = Limits::default();
    for (s, count) in [
        ("elementary_abelian:3:3", 28),
        ("elementary_abelian:2:4", 67),
        ("quaternion8", 6),
        ("dihedral:4", 10),
        ("symmetric:4", 30),
        ("alternating:4", 10),
        ("alternating:5", 59),
        ("symmetric:5", 156),
        ("heisenberg27", 19),
    ] {
        let g = catalog_str(s, &l).unwrap();
        assert_eq!(all_subgroups(&g, &l).unwrap().len(), count, "{s}");
    }
    let g = catalog_str("elementary_abelian:3:3", &l).unwrap();
    let lat = all_subgroups(&g, &l).unwrap();
    let by_order: Vec<usize> =
        [1, 3, 9, 27].iter().map(|&o| lat.subgroups().iter().filter(|s| s.order() == o).count()).collect();
    assert_eq!(by_order, [1, 13, 13, 1]);
}
