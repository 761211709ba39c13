//! Division graphs.
//!
//! For a division with representative `φ`, the cyclic group `D = <φ>` acts
//! on every right-coset space `H\G` by `Hg ↦ Hgφ`. The `D`-orbits of `H\G`
//! form the color cluster of `H`. For each Hasse arc `A ⊃ B` of the
//! subgroup lattice, the projection `Bg ↦ Ag` sends each orbit `Q` of
//! `B\G` onto an orbit `P` of `A\G`; the arc `P → Q` is labeled by the
//! relative degree `len(Q) / len(P)`. One connected component arises per
//! division; their disjoint union is the division graph.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{divisions, Division};
use crate::error::LatticeError;
use crate::group::Group;
use crate::lattice::{all_subgroups, Cover, SubgroupLattice};
use crate::Limits;

pub const SCHEMA_VERSION: u32 = 1;

/// The right cosets `Hg` of one subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    pub subgroup_id: usize,
    /// Sorted member lists, ordered by minimal element.
    pub cosets: Vec<Vec<usize>>,
    /// Element index to coset index.
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Coset index of `Hgφ` where `Hg` is coset `c`.
    pub fn act(&self, g: &Group, c: usize, phi: usize) -> usize {
        self.coset_of[g.mul(self.cosets[c][0], phi)]
    }
}

pub fn right_cosets(g: &Group, l: &SubgroupLattice, subgroup_id: usize) -> CosetSpace {
    let h: Vec<usize> = l.subgroup(subgroup_id).members.to_vec();
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets = Vec::with_capacity(n / h.len());
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = h.iter().map(|&y| g.mul(y, x)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        cosets.push(members);
    }
    CosetSpace { subgroup_id, cosets, coset_of }
}

/// A `D`-orbit on a coset space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub cosets: Vec<usize>,
    pub length: usize,
}

/// Orbits of `<φ>` on `cs`, ordered by minimal coset index.
pub fn orbit_decomposition(cs: &CosetSpace, g: &Group, phi: usize) -> Vec<Orbit> {
    let mut seen = vec![false; cs.len()];
    let mut out = Vec::new();
    for start in 0..cs.len() {
        if seen[start] {
            continue;
        }
        let mut cosets = Vec::new();
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            cosets.push(c);
            c = cs.act(g, c, phi);
        }
        cosets.sort_unstable();
        out.push(Orbit { length: cosets.len(), cosets });
    }
    out
}

/// Vertex of a component: (subgroup id, orbit index within its cluster).
pub type Vertex = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    /// Orbit in the cluster of the larger subgroup.
    pub lower: Vertex,
    /// Orbit in the cluster of the smaller subgroup.
    pub upper: Vertex,
    pub label: usize,
}

/// One unramified splitting type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct USTComponent {
    pub division_rep: usize,
    /// Indexed by subgroup id.
    pub clusters: Vec<Vec<Orbit>>,
    /// Sorted.
    pub arcs: Vec<Arc>,
}

impl USTComponent {
    pub fn vertex_count(&self) -> usize {
        self.clusters.iter().map(|c| c.len()).sum()
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.len()).collect()
    }

    /// Arc labels sorted ascending.
    pub fn label_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.arcs.iter().map(|a| a.label).collect();
        v.sort_unstable();
        v
    }

    /// Checks orbit sums, label integrality and path multiplicativity.
    pub fn check_invariants(&self, covers: &[Cover]) -> Result<(), String> {
        for (h, cl) in self.clusters.iter().enumerate() {
            let total: usize = cl.iter().map(|o| o.length).sum();
            let cosets: usize = cl.iter().map(|o| o.cosets.len()).sum();
            if total != cosets {
                return Err(format!("cluster H{h}: orbit lengths do not sum to the coset count"));
            }
        }
        for a in &self.arcs {
            let p = &self.clusters[a.lower.0][a.lower.1];
            let q = &self.clusters[a.upper.0][a.upper.1];
            if p.length * a.label != q.length {
                return Err(format!("arc {a:?}: label does not multiply orbit lengths"));
            }
        }
        for c in covers {
            for (pi, _) in self.clusters[c.lower].iter().enumerate() {
                let s: usize = self
                    .arcs
                    .iter()
                    .filter(|a| a.lower == (c.lower, pi) && a.upper.0 == c.upper)
                    .map(|a| a.label)
                    .sum();
                if s != c.index {
                    return Err(format!(
                        "cover H{} > H{}: labels out of orbit {pi} sum to {s}, expected {}",
                        c.lower, c.upper, c.index
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Coset spaces for every subgroup, shared by all components.
pub struct CosetData {
    pub spaces: Vec<CosetSpace>,
    pub covers: Vec<Cover>,
}

impl CosetData {
    pub fn new(g: &Group, l: &SubgroupLattice) -> CosetData {
        CosetData {
            spaces: (0..l.len()).map(|h| right_cosets(g, l, h)).collect(),
            covers: l.covers().to_vec(),
        }
    }

    /// Component for the cyclic group generated by `phi`.
    pub fn component(&self, g: &Group, phi: usize) -> USTComponent {
        let clusters: Vec<Vec<Orbit>> = self.spaces.iter().map(|cs| orbit_decomposition(cs, g, phi)).collect();
        let orbit_of: Vec<Vec<usize>> = clusters
            .iter()
            .zip(&self.spaces)
            .map(|(orbits, cs)| {
                let mut m = vec![0; cs.len()];
                for (i, o) in orbits.iter().enumerate() {
                    for &c in &o.cosets {
                        m[c] = i;
                    }
                }
                m
            })
            .collect();
        let mut arcs = Vec::new();
        for cover in &self.covers {
            let (a, b) = (cover.lower, cover.upper);
            for (qi, q) in clusters[b].iter().enumerate() {
                let x = self.spaces[b].cosets[q.cosets[0]][0];
                let pi = orbit_of[a][self.spaces[a].coset_of[x]];
                let p = &clusters[a][pi];
                assert_eq!(q.length % p.length, 0, "orbit lengths must divide along a projection");
                arcs.push(Arc { lower: (a, pi), upper: (b, qi), label: q.length / p.length });
            }
        }
        arcs.sort();
        USTComponent { division_rep: phi, clusters, arcs }
    }

    /// Sorted orbit-length multiset of `<phi>` on every coset space.
    pub fn signature(&self, g: &Group, phi: usize) -> Vec<Vec<usize>> {
        self.spaces
            .iter()
            .map(|cs| {
                let mut lens: Vec<usize> = orbit_decomposition(cs, g, phi).iter().map(|o| o.length).collect();
                lens.sort_unstable();
                lens
            })
            .collect()
    }
}

pub fn ust_component(g: &Group, l: &SubgroupLattice, d: &Division) -> USTComponent {
    CosetData::new(g, l).component(g, d.representative)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionSummary {
    pub representative: usize,
    pub representative_name: String,
    pub members: Vec<usize>,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionGraph {
    pub schema_version: u32,
    pub group_name: String,
    pub divisions: Vec<DivisionSummary>,
    /// One per division, in the same order.
    pub components: Vec<USTComponent>,
}

impl DivisionGraph {
    pub fn color_count(&self) -> usize {
        self.components.first().map_or(0, |c| c.clusters.len())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("division graph serializes")
    }

    /// Graphviz rendering. Each component is a cluster subgraph; inside
    /// it, each color cluster is a dashed same-rank box.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph division_graph {{").unwrap();
        writeln!(out, "  label={:?};", self.group_name).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=circle, colorscheme=set312];").unwrap();
        for (d, comp) in self.divisions.iter().zip(&self.components) {
            let rep = d.representative;
            writeln!(out, "  subgraph \"cluster_d{rep}\" {{").unwrap();
            writeln!(out, "    label={:?};", format!("[{}]", d.representative_name)).unwrap();
            for (h, orbits) in comp.clusters.iter().enumerate() {
                writeln!(out, "    subgraph \"cluster_d{rep}_H{h}\" {{").unwrap();
                writeln!(out, "      label=\"H{h}\"; style=dashed; rank=same;").unwrap();
                for (k, o) in orbits.iter().enumerate() {
                    writeln!(
                        out,
                        "      \"d{rep}/H{h}/o{k}\" [label=\"{}\", subgroup={h}, color={}];",
                        o.length,
                        h % 12 + 1
                    )
                    .unwrap();
                }
                writeln!(out, "    }}").unwrap();
            }
            for a in &comp.arcs {
                writeln!(
                    out,
                    "    \"d{rep}/H{}/o{}\" -> \"d{rep}/H{}/o{}\" [label=\"{}\"];",
                    a.lower.0, a.lower.1, a.upper.0, a.upper.1, a.label
                )
                .unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

pub fn division_graph_with_lattice(g: &Group, l: &SubgroupLattice) -> DivisionGraph {
    let data = CosetData::new(g, l);
    let divs = divisions(g);
    let components: Vec<USTComponent> = divs.par_iter().map(|d| data.component(g, d.representative)).collect();
    DivisionGraph {
        schema_version: SCHEMA_VERSION,
        group_name: g.name().to_string(),
        divisions: divs
            .iter()
            .map(|d| DivisionSummary {
                representative: d.representative,
                representative_name: g.element_name(d.representative).to_string(),
                members: d.members.clone(),
                order: d.common_order,
            })
            .collect(),
        components,
    }
}

pub fn division_graph(g: &Group, limits: &Limits) -> Result<DivisionGraph, LatticeError> {
    let l = all_subgroups(g, limits)?;
    Ok(division_graph_with_lattice(g, &l))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LagariasViolation {
    pub a: usize,
    pub b: usize,
    /// True when `a` and `b` share a division but their orbit data differ;
    /// false when they lie in different divisions with equal orbit data.
    pub same_division: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LagariasReport {
    pub group: String,
    pub elements: usize,
    pub subgroups: usize,
    pub divisions: usize,
    pub violations: Vec<LagariasViolation>,
}

impl LagariasReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that two elements share a division exactly when `<φ₁>` and
/// `<φ₂>` have the same orbit-length multisets on every `H\G`.
pub fn verify_lagarias_with_lattice(g: &Group, l: &SubgroupLattice) -> LagariasReport {
    let data = CosetData::new(g, l);
    let divs = divisions(g);
    let sigs: Vec<Vec<Vec<usize>>> = g.elements().collect::<Vec<_>>().par_iter().map(|&x| data.signature(g, x)).collect();
    let mut violations = Vec::new();
    let mut by_sig: HashMap<&Vec<Vec<usize>>, usize> = HashMap::new();
    for d in &divs {
        for &x in &d.members {
            if sigs[x] != sigs[d.representative] {
                violations.push(LagariasViolation { a: d.representative, b: x, same_division: true });
            }
        }
        match by_sig.get(&sigs[d.representative]) {
            Some(&other) => violations.push(LagariasViolation { a: other, b: d.representative, same_division: false }),
            None => {
                by_sig.insert(&sigs[d.representative], d.representative);
            }
        }
    }
    LagariasReport {
        group: g.name().to_string(),
        elements: g.order(),
        subgroups: l.len(),
        divisions: divs.len(),
        violations,
    }
}

pub fn verify_lagarias(g: &Group, limits: &Limits) -> Result<LagariasReport, LatticeError> {
    let l = all_subgroups(g, limits)?;
    Ok(verify_lagarias_with_lattice(g, &l))
}
