//! Division graphs of subgroups and quotients read off a division graph.
//!
//! Subgroup `H`: every vertex of color `H` whose path product is 1 roots
//! a copy of a splitting type of `H`, namely the part of its component
//! reachable from it. Quotient `G/N` for normal `N`: each component
//! restricted to the colors containing `N`. Both procedures produce
//! duplicates, which are removed either up to labeled isomorphism (colors
//! fixed) or up to isomorphism with featureless colors.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::analysis::{certificate_of, ColorMode, GraphView, RecoveredLattice};
use crate::bitset::ElementSet;
use crate::canon::canonical_form;
use crate::divgraph::{Arc, DivisionGraph, USTComponent};
use crate::error::AnalysisError;
use crate::analysis::certificate_graph;
use crate::group::Group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DedupMode {
    LabeledColors,
    FeaturelessColors,
}

/// The part of `comp` on the colors in `keep` reachable from the `roots`,
/// re-indexed so color `keep[i]` becomes color `i`.
fn restrict(comp: &USTComponent, keep: &[usize], roots: &[(usize, usize)]) -> USTComponent {
    let allowed: HashSet<usize> = keep.iter().copied().collect();
    let mut seen: HashSet<(usize, usize)> = roots.iter().copied().collect();
    let mut queue: VecDeque<(usize, usize)> = roots.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for a in comp.arcs.iter().filter(|a| a.lower == v && allowed.contains(&a.upper.0)) {
            if seen.insert(a.upper) {
                queue.push_back(a.upper);
            }
        }
    }
    let mut index: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut clusters = Vec::with_capacity(keep.len());
    for (i, &h) in keep.iter().enumerate() {
        let mut cl = Vec::new();
        for (k, o) in comp.clusters[h].iter().enumerate() {
            if seen.contains(&(h, k)) {
                index.insert((h, k), (i, cl.len()));
                cl.push(o.clone());
            }
        }
        clusters.push(cl);
    }
    let mut arcs: Vec<Arc> = comp
        .arcs
        .iter()
        .filter_map(|a| match (index.get(&a.lower), index.get(&a.upper)) {
            (Some(&l), Some(&u)) => Some(Arc { lower: l, upper: u, label: a.label }),
            _ => None,
        })
        .collect();
    arcs.sort();
    USTComponent { division_rep: comp.division_rep, clusters, arcs }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    /// Original colors kept, in increasing order; new color `i` is `colors[i]`.
    pub colors: Vec<usize>,
    /// Every copy found, before deduplication.
    pub copies: Vec<USTComponent>,
    /// Representatives after deduplication.
    pub components: Vec<USTComponent>,
}

impl Extraction {
    pub fn as_graph(&self, name: &str) -> DivisionGraph {
        DivisionGraph {
            schema_version: crate::divgraph::SCHEMA_VERSION,
            group_name: name.to_string(),
            divisions: Vec::new(),
            components: self.components.clone(),
        }
    }
}

fn dedup(copies: &[USTComponent], mode: DedupMode, budget: usize) -> Result<Vec<USTComponent>, AnalysisError> {
    let color_mode = match mode {
        DedupMode::LabeledColors => ColorMode::Fixed,
        DedupMode::FeaturelessColors => ColorMode::Featureless,
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in copies {
        let form = canonical_form(&certificate_graph(std::slice::from_ref(c), color_mode), budget)?;
        if seen.insert(form.encoding) {
            out.push(c.clone());
        }
    }
    Ok(out)
}

/// Colors contained in `h` according to the recovered lattice.
fn colors_below(lat: &RecoveredLattice, h: usize) -> Vec<usize> {
    lat.below[h].to_vec()
}

fn colors_above(lat: &RecoveredLattice, n: usize) -> Vec<usize> {
    (0..lat.orders.len()).filter(|&j| lat.contains(j, n)).collect()
}

/// Division graph of the subgroup with color `h`, from the graph alone.
pub fn extract_subgroup(dg: &DivisionGraph, h: usize, mode: DedupMode, budget: usize) -> Result<Extraction, AnalysisError> {
    let v = GraphView::new(dg)?;
    let lat = crate::analysis::recover_lattice(dg)?;
    let keep = colors_below(&lat, h);
    let mut copies = Vec::new();
    for (c, comp) in dg.components.iter().enumerate() {
        for k in 0..comp.clusters[h].len() {
            if v.products[c][h][k] == 1 {
                copies.push(restrict(comp, &keep, &[(h, k)]));
            }
        }
    }
    let components = dedup(&copies, mode, budget)?;
    Ok(Extraction { colors: keep, copies, components })
}

/// Division graph of the quotient by the normal subgroup with color `n`.
pub fn extract_quotient(dg: &DivisionGraph, n: usize, mode: DedupMode, budget: usize) -> Result<Extraction, AnalysisError> {
    let v = GraphView::new(dg)?;
    let lat = crate::analysis::recover_lattice(dg)?;
    let keep = colors_above(&lat, n);
    let copies: Vec<USTComponent> = dg.components.iter().map(|comp| restrict(comp, &keep, &[(v.base, 0)])).collect();
    let components = dedup(&copies, mode, budget)?;
    Ok(Extraction { colors: keep, copies, components })
}

/// Agreement of an extracted graph with a directly computed one.
#[derive(Clone, Debug, Serialize)]
pub struct ExtractionCheck {
    pub mode: DedupMode,
    pub extracted_components: usize,
    pub direct_components: usize,
    pub certificates_equal: bool,
}

impl ExtractionCheck {
    pub fn matches(&self) -> bool {
        self.certificates_equal && self.extracted_components == self.direct_components
    }
}

pub fn check_extraction(ex: &Extraction, mode: DedupMode, direct: &DivisionGraph, budget: usize) -> Result<ExtractionCheck, AnalysisError> {
    let a = certificate_of(&ex.components, ColorMode::Featureless, budget)?;
    let b = certificate_of(&direct.components, ColorMode::Featureless, budget)?;
    Ok(ExtractionCheck {
        mode,
        extracted_components: ex.components.len(),
        direct_components: direct.components.len(),
        certificates_equal: a == b,
    })
}

/// The subgroup on `members` as a group in its own right, elements in
/// increasing order of their index in `g`.
pub fn subgroup_as_group(g: &Group, members: &ElementSet, name: &str) -> Group {
    let elems = members.to_vec();
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let m = elems.len();
    let mut table = vec![0u32; m * m];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            table[i * m + j] = pos[&g.mul(a, b)] as u32;
        }
    }
    let names = elems.iter().map(|&x| g.element_name(x).to_string()).collect();
    Group::from_trusted_table(name.to_string(), table, names)
}

/// Images of the divisions of `g` under the projection onto a quotient,
/// as sorted quotient-element sets.
pub fn division_images(g: &Group, projection: &[usize]) -> BTreeSet<Vec<usize>> {
    crate::classes::divisions(g)
        .iter()
        .map(|d| {
            let mut img: Vec<usize> = d.members.iter().map(|&x| projection[x]).collect();
            img.sort_unstable();
            img.dedup();
            img
        })
        .collect()
}
