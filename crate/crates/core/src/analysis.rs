//! Reading group structure back out of a division graph.
//!
//! The `recover_*` functions look only at clusters and arcs: color ids
//! are treated as opaque names, and neither the group nor its lattice is
//! consulted. [`analyze`] compares every recovered value with a direct
//! computation on the group.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bitset::ElementSet;
use crate::canon::{canonical_form, LabeledDigraph};
use crate::classes::divisions;
use crate::divgraph::{division_graph_with_lattice, DivisionGraph, USTComponent};
use crate::error::AnalysisError;
use crate::group::Group;
use crate::lattice::{all_subgroups, Cover, SubgroupLattice};
use crate::Limits;

fn malformed(msg: impl Into<String>) -> AnalysisError {
    AnalysisError::MalformedGraph(msg.into())
}

/// Structural landmarks of a division graph.
#[derive(Clone, Debug)]
pub struct GraphView<'a> {
    pub graph: &'a DivisionGraph,
    pub colors: usize,
    /// Color of the whole group: no arc enters its cluster.
    pub base: usize,
    /// Color of the trivial subgroup: no arc leaves its cluster.
    pub top: usize,
    /// Index of the component whose labels are all 1.
    pub identity: usize,
    /// Product of labels from the base vertex, per component, color, orbit.
    pub products: Vec<Vec<Vec<usize>>>,
}

impl<'a> GraphView<'a> {
    pub fn new(dg: &'a DivisionGraph) -> Result<Self, AnalysisError> {
        let comps = &dg.components;
        if comps.is_empty() {
            return Err(malformed("no components"));
        }
        let colors = comps[0].clusters.len();
        if colors == 0 || comps.iter().any(|c| c.clusters.len() != colors) {
            return Err(malformed("components disagree on the number of colors"));
        }
        let mut has_in = vec![false; colors];
        let mut has_out = vec![false; colors];
        for c in comps {
            for a in &c.arcs {
                let ok = a.lower.0 < colors
                    && a.upper.0 < colors
                    && a.lower.1 < c.clusters[a.lower.0].len()
                    && a.upper.1 < c.clusters[a.upper.0].len()
                    && a.label > 0;
                if !ok {
                    return Err(malformed(format!("arc {a:?} is out of range")));
                }
                has_out[a.lower.0] = true;
                has_in[a.upper.0] = true;
            }
        }
        let single = |flags: &[bool], what: &str| -> Result<usize, AnalysisError> {
            let found: Vec<usize> = (0..colors).filter(|&h| !flags[h]).collect();
            match found.as_slice() {
                [h] => Ok(*h),
                _ => Err(malformed(format!("expected one {what} color, found {}", found.len()))),
            }
        };
        let base = single(&has_in, "base")?;
        let top = single(&has_out, "top")?;
        if comps.iter().any(|c| c.clusters[base].len() != 1) {
            return Err(malformed("base cluster must hold one vertex in every component"));
        }
        let trivial: Vec<usize> =
            (0..comps.len()).filter(|&i| comps[i].arcs.iter().all(|a| a.label == 1)).collect();
        let identity = match trivial.as_slice() {
            [i] => *i,
            _ => return Err(malformed(format!("expected one all-label-1 component, found {}", trivial.len()))),
        };
        let products = comps.iter().map(|c| path_products(c, base)).collect::<Result<Vec<_>, _>>()?;
        Ok(GraphView { graph: dg, colors, base, top, identity, products })
    }

    fn component(&self, i: usize) -> &USTComponent {
        &self.graph.components[i]
    }

    /// Top-cluster vertices reachable from `(color, orbit)` in component `c`.
    fn reachable_top(&self, c: usize, start: (usize, usize)) -> BTreeSet<usize> {
        let comp = self.component(c);
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        let mut tops = BTreeSet::new();
        while let Some(v) = queue.pop_front() {
            if v.0 == self.top {
                tops.insert(v.1);
            }
            for a in comp.arcs.iter().filter(|a| a.lower == v) {
                if seen.insert(a.upper) {
                    queue.push_back(a.upper);
                }
            }
        }
        tops
    }
}

fn path_products(c: &USTComponent, base: usize) -> Result<Vec<Vec<usize>>, AnalysisError> {
    let mut prod: Vec<Vec<usize>> = c.clusters.iter().map(|cl| vec![0; cl.len()]).collect();
    prod[base][0] = 1;
    let mut queue = VecDeque::from([(base, 0usize)]);
    while let Some(v) = queue.pop_front() {
        let pv = prod[v.0][v.1];
        for a in c.arcs.iter().filter(|a| a.lower == v) {
            let w = a.upper;
            let pw = pv * a.label;
            match prod[w.0][w.1] {
                0 => {
                    prod[w.0][w.1] = pw;
                    queue.push_back(w);
                }
                old if old != pw => return Err(malformed(format!("inconsistent path products at {w:?}"))),
                _ => {}
            }
        }
    }
    if prod.iter().flatten().any(|&p| p == 0) {
        return Err(malformed("vertex unreachable from the base"));
    }
    Ok(prod)
}

pub fn recover_order(dg: &DivisionGraph) -> Result<usize, AnalysisError> {
    let v = GraphView::new(dg)?;
    Ok(v.component(v.identity).clusters[v.top].len())
}

/// Colors with orders and Hasse arcs, read from the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveredLattice {
    pub orders: Vec<usize>,
    pub covers: Vec<Cover>,
    /// `below[h]`: colors contained in `h`, including `h`.
    #[serde(skip)]
    pub below: Vec<ElementSet>,
}

impl RecoveredLattice {
    pub fn contains(&self, big: usize, small: usize) -> bool {
        self.below[big].contains(small)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let common = self.below[a].intersection(&self.below[b]);
        common.iter().max_by_key(|&h| self.orders[h]).expect("trivial color is below everything")
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        (0..self.orders.len())
            .filter(|&h| self.below[h].contains(a) && self.below[h].contains(b))
            .min_by_key(|&h| self.orders[h])
            .expect("whole group is above everything")
    }
}

pub fn recover_lattice(dg: &DivisionGraph) -> Result<RecoveredLattice, AnalysisError> {
    let v = GraphView::new(dg)?;
    recover_lattice_from(&v)
}

fn recover_lattice_from(v: &GraphView) -> Result<RecoveredLattice, AnalysisError> {
    let id = v.component(v.identity);
    let order = id.clusters[v.top].len();
    let orders: Vec<usize> = id.clusters.iter().map(|cl| order / cl.len()).collect();
    let mut sums: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
    for comp in &v.graph.components {
        let mut per_vertex: HashMap<((usize, usize), usize), usize> = HashMap::new();
        for a in &comp.arcs {
            *per_vertex.entry((a.lower, a.upper.0)).or_default() += a.label;
        }
        for (((ca, _), cb), s) in per_vertex {
            sums.entry((ca, cb)).or_default().insert(s);
        }
    }
    let mut covers = Vec::new();
    for ((a, b), s) in sums {
        if s.len() != 1 {
            return Err(malformed(format!("colors {a} -> {b}: arc label sums disagree {s:?}")));
        }
        covers.push(Cover { lower: a, upper: b, index: *s.iter().next().unwrap() });
    }
    covers.sort();
    let n = orders.len();
    let mut order_ids: Vec<usize> = (0..n).collect();
    order_ids.sort_by_key(|&h| orders[h]);
    let mut below: Vec<ElementSet> = (0..n).map(|h| ElementSet::from_indices(n, [h])).collect();
    for &h in &order_ids {
        for c in covers.iter().filter(|c| c.lower == h) {
            let sub = below[c.upper].clone();
            below[h] = below[h].union(&sub);
        }
    }
    Ok(RecoveredLattice { orders, covers, below })
}

/// Colors whose base-relative path products agree within every component.
pub fn recover_normal_colors(dg: &DivisionGraph) -> Result<BTreeSet<usize>, AnalysisError> {
    let v = GraphView::new(dg)?;
    Ok(normal_colors(&v))
}

fn normal_colors(v: &GraphView) -> BTreeSet<usize> {
    (0..v.colors)
        .filter(|&h| v.products.iter().all(|comp| comp[h].windows(2).all(|w| w[0] == w[1])))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicRecovery {
    pub cyclic: BTreeSet<usize>,
    /// Per component: the maximal colors with a single-top vertex. These
    /// are the conjugates of the cyclic group generated by the division.
    pub families: Vec<BTreeSet<usize>>,
    /// Per component: the minimal colors with a path-product-1 vertex.
    /// Must equal `families`.
    pub twins: Vec<BTreeSet<usize>>,
}

pub fn recover_cyclic_colors(dg: &DivisionGraph) -> Result<CyclicRecovery, AnalysisError> {
    let v = GraphView::new(dg)?;
    let lat = recover_lattice_from(&v)?;
    Ok(cyclic_colors(&v, &lat))
}

fn cyclic_colors(v: &GraphView, lat: &RecoveredLattice) -> CyclicRecovery {
    let mut cyclic = BTreeSet::new();
    let mut families = Vec::new();
    let mut twins = Vec::new();
    for c in 0..v.graph.components.len() {
        let comp = v.component(c);
        let single: BTreeSet<usize> = (0..v.colors)
            .filter(|&h| (0..comp.clusters[h].len()).any(|k| v.reachable_top(c, (h, k)).len() == 1))
            .collect();
        let fixed: BTreeSet<usize> =
            (0..v.colors).filter(|&h| v.products[c][h].contains(&1)).collect();
        let maximal: BTreeSet<usize> = single
            .iter()
            .copied()
            .filter(|&h| !single.iter().any(|&k| k != h && lat.contains(k, h)))
            .collect();
        let minimal: BTreeSet<usize> = fixed
            .iter()
            .copied()
            .filter(|&h| !fixed.iter().any(|&k| k != h && lat.contains(h, k)))
            .collect();
        cyclic.extend(single);
        families.push(maximal);
        twins.push(minimal);
    }
    CyclicRecovery { cyclic, families, twins }
}

/// Graph-side abelian test: a decomposition of the whole group into
/// independent normal cyclic colors. Returns the factor orders (prime
/// powers, ascending) when abelian.
fn abelian_factors(v: &GraphView, lat: &RecoveredLattice, normal: &BTreeSet<usize>, cyclic: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let is_prime_power = |m: usize| {
        if m < 2 {
            return false;
        }
        let p = (2..=m).find(|p| m.is_multiple_of(*p)).unwrap();
        let mut x = m;
        while x.is_multiple_of(p) {
            x /= p;
        }
        x == 1
    };
    let candidates: Vec<usize> = (0..v.colors)
        .filter(|h| normal.contains(h) && cyclic.contains(h) && is_prime_power(lat.orders[*h]))
        .collect();
    let whole = v.base;
    if lat.orders[whole] == 1 {
        return Some(vec![]);
    }
    // Breadth-first over join colors; each state remembers one factor list.
    let mut seen: HashMap<usize, Vec<usize>> = HashMap::from([(v.top, vec![])]);
    let mut queue = VecDeque::from([v.top]);
    while let Some(j) = queue.pop_front() {
        if j == whole {
            let mut f = seen[&j].clone();
            f.sort_unstable();
            return Some(f);
        }
        for &n in &candidates {
            if lat.meet(j, n) != v.top {
                continue;
            }
            let k = lat.join(j, n);
            if lat.orders[k] != lat.orders[j] * lat.orders[n] || seen.contains_key(&k) {
                continue;
            }
            let mut f = seen[&j].clone();
            f.push(lat.orders[n]);
            seen.insert(k, f);
            queue.push_back(k);
        }
    }
    None
}

/// Fewest cyclic colors whose join is the whole group, using maximal
/// cyclic colors only.
fn min_generators_graph(v: &GraphView, lat: &RecoveredLattice, cyclic: &BTreeSet<usize>) -> usize {
    let maximal: Vec<usize> = cyclic
        .iter()
        .copied()
        .filter(|&h| !cyclic.iter().any(|&k| k != h && lat.contains(k, h)))
        .collect();
    let mut level: BTreeSet<usize> = BTreeSet::from([v.top]);
    let mut seen = level.clone();
    let mut k = 0;
    while !level.contains(&v.base) {
        k += 1;
        let mut next = BTreeSet::new();
        for &j in &level {
            for &m in &maximal {
                let x = lat.join(j, m);
                if seen.insert(x) {
                    next.insert(x);
                }
            }
        }
        level = next;
    }
    k
}

/// Smallest number of elements generating `g`, by breadth-first search
/// over generated subgroups.
pub fn min_generators_direct(g: &Group) -> usize {
    if g.order() == 1 {
        return 0;
    }
    let mut level: HashSet<ElementSet> = HashSet::from([g.generate(&[])]);
    let mut seen = level.clone();
    let mut k = 0;
    loop {
        k += 1;
        let mut next = HashSet::new();
        for h in &level {
            let gens = h.to_vec();
            for x in g.elements().filter(|&x| !h.contains(x)) {
                let mut gx = gens.clone();
                gx.push(x);
                let s = g.extend_closure(h.clone(), &gx);
                if s.len() == g.order() {
                    return k;
                }
                if seen.insert(s.clone()) {
                    next.insert(s);
                }
            }
        }
        level = next;
    }
}

/// Invariant factors in primary form, from counts of `x^(p^k) = 1`.
pub fn primary_invariants_direct(g: &Group) -> Vec<usize> {
    let n = g.order();
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if !m.is_multiple_of(p) {
            p += 1;
            continue;
        }
        while m.is_multiple_of(p) {
            m /= p;
        }
        // r_k = log_p #{x : x^(p^k) = 1}; multiplicities of p^k from differences.
        let mut r = vec![0u32];
        let mut pk = 1;
        loop {
            pk *= p;
            let count = g.elements().filter(|&x| g.power(x, pk as i64) == 0).count();
            let mut e = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                e += 1;
            }
            r.push(e);
            if e == *r.iter().rev().nth(1).unwrap() {
                r.pop();
                break;
            }
        }
        // Number of factors of order >= p^k is r_k - r_{k-1}.
        let at_least: Vec<u32> = (1..r.len()).map(|k| r[k] - r[k - 1]).collect();
        for k in 0..at_least.len() {
            let exactly = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..exactly {
                out.push(p.pow(k as u32 + 1));
            }
        }
        p += 1;
    }
    out.sort_unstable();
    out
}

pub fn is_solvable_direct(g: &Group, l: &SubgroupLattice) -> bool {
    let mut current = ElementSet::full(g.order());
    loop {
        if current.len() == 1 {
            return true;
        }
        let elems = current.to_vec();
        let mut comms = Vec::new();
        for &a in &elems {
            for &b in &elems {
                comms.push(g.commutator(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        let next = g.generate(&comms);
        if next == current {
            return false;
        }
        let _ = l;
        current = next;
    }
}

/// Nilpotent iff every Sylow subgroup is normal.
pub fn is_nilpotent_direct(g: &Group, l: &SubgroupLattice) -> bool {
    let n = g.order();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut pk = 1;
            while m.is_multiple_of(p) {
                m /= p;
                pk *= p;
            }
            let normal = l.subgroups().iter().filter(|s| s.order() == pk).all(|s| l.is_normal(g, s.id));
            let count = l.subgroups().iter().filter(|s| s.order() == pk).count();
            if count != 1 || !normal {
                return false;
            }
        }
        p += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub graph_value: Option<serde_json::Value>,
    pub direct_value: serde_json::Value,
    pub agree: bool,
}

impl OracleCheck {
    fn both<T: Serialize + PartialEq>(graph: T, direct: T) -> Self {
        let agree = graph == direct;
        OracleCheck {
            graph_value: Some(serde_json::to_value(graph).unwrap()),
            direct_value: serde_json::to_value(direct).unwrap(),
            agree,
        }
    }

    fn direct<T: Serialize>(direct: T) -> Self {
        OracleCheck { graph_value: None, direct_value: serde_json::to_value(direct).unwrap(), agree: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: usize,
    pub division_count: usize,
    pub lattice_sketch: RecoveredLattice,
    pub normal_color_ids: BTreeSet<usize>,
    pub cyclic_color_ids: BTreeSet<usize>,
    pub conjugate_cyclic_families: Vec<BTreeSet<usize>>,
    pub oracle_checks: BTreeMap<String, OracleCheck>,
}

impl AnalysisReport {
    pub fn all_agree(&self) -> bool {
        self.oracle_checks.values().all(|c| c.agree)
    }

    pub fn disagreements(&self) -> Vec<&str> {
        self.oracle_checks.iter().filter(|(_, c)| !c.agree).map(|(k, _)| k.as_str()).collect()
    }
}

pub fn analyze(g: &Group, limits: &Limits) -> Result<AnalysisReport, AnalysisError> {
    let l = all_subgroups(g, limits)?;
    let dg = division_graph_with_lattice(g, &l);
    analyze_with(g, &l, &dg)
}

pub fn analyze_with(g: &Group, l: &SubgroupLattice, dg: &DivisionGraph) -> Result<AnalysisReport, AnalysisError> {
    let v = GraphView::new(dg)?;
    let lat = recover_lattice_from(&v)?;
    let order = v.component(v.identity).clusters[v.top].len();
    let normal = normal_colors(&v);
    let cyc = cyclic_colors(&v, &lat);
    let factors = abelian_factors(&v, &lat, &normal, &cyc.cyclic);
    let mut checks = BTreeMap::new();
    let ids = |f: &dyn Fn(usize) -> bool| -> BTreeSet<usize> { (0..l.len()).filter(|&h| f(h)).collect() };

    checks.insert("order".into(), OracleCheck::both(order, g.order()));
    checks.insert("division_count".into(), OracleCheck::both(dg.components.len(), divisions(g).len()));
    checks.insert("lattice".into(), OracleCheck::both(lat.covers.clone(), l.covers().to_vec()));
    let orders: Vec<usize> = l.subgroups().iter().map(|s| s.order()).collect();
    checks.insert("subgroup_orders".into(), OracleCheck::both(lat.orders.clone(), orders));
    let direct_normal = ids(&|h| l.is_normal(g, h));
    checks.insert("normal_subgroups".into(), OracleCheck::both(normal.clone(), direct_normal.clone()));
    checks.insert("cyclic_subgroups".into(), OracleCheck::both(cyc.cyclic.clone(), ids(&|h| l.is_cyclic(g, h))));
    let direct_families: Vec<BTreeSet<usize>> = dg
        .divisions
        .iter()
        .map(|d| {
            let c = l.find(&g.cyclic_subgroup(d.representative)).expect("cyclic subgroup in lattice");
            l.conjugates(g, c).into_iter().collect()
        })
        .collect();
    checks.insert("conjugate_cyclic_families".into(), OracleCheck::both(cyc.families.clone(), direct_families));
    checks.insert("twin_properties".into(), OracleCheck::both(cyc.twins.clone(), cyc.families.clone()));
    let simple_graph = order > 1 && normal.len() == 2;
    let simple_direct = g.order() > 1 && direct_normal.len() == 2;
    checks.insert("simple".into(), OracleCheck::both(simple_graph, simple_direct));
    checks.insert("abelian".into(), OracleCheck::both(factors.is_some(), g.is_abelian()));
    if g.is_abelian() {
        checks.insert(
            "abelian_factors".into(),
            OracleCheck::both(factors.clone().unwrap_or_default(), primary_invariants_direct(g)),
        );
    }
    checks.insert(
        "minimal_generators".into(),
        OracleCheck::both(min_generators_graph(&v, &lat, &cyc.cyclic), min_generators_direct(g)),
    );
    checks.insert("center_order".into(), OracleCheck::direct(l.subgroup(l.center(g)).order()));
    checks.insert("commutator_order".into(), OracleCheck::direct(l.subgroup(l.commutator_subgroup(g)).order()));
    checks.insert("solvable".into(), OracleCheck::direct(is_solvable_direct(g, l)));
    checks.insert("nilpotent".into(), OracleCheck::direct(is_nilpotent_direct(g, l)));

    Ok(AnalysisReport {
        group: g.name().to_string(),
        order,
        division_count: dg.components.len(),
        lattice_sketch: lat,
        normal_color_ids: normal,
        cyclic_color_ids: cyc.cyclic,
        conjugate_cyclic_families: cyc.families,
        oracle_checks: checks,
    })
}

/// How colors enter a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMode {
    /// Colors may be renamed by one bijection shared by all components.
    Featureless,
    /// Color ids are kept as they are.
    Fixed,
}

/// Builds the labeled digraph: one vertex per orbit, plus one vertex per
/// color joined by label-0 arcs to the orbits of that color.
pub fn certificate_graph(components: &[USTComponent], mode: ColorMode) -> LabeledDigraph {
    let colors = components.first().map_or(0, |c| c.clusters.len());
    let mut kinds = Vec::new();
    let mut arcs = Vec::new();
    let color_vertex: Vec<usize> = (0..colors).collect();
    for h in 0..colors {
        kinds.push(match mode {
            ColorMode::Featureless => 1,
            ColorMode::Fixed => 1 + h as u64,
        });
    }
    for comp in components {
        let mut offsets = Vec::with_capacity(colors);
        for (h, cl) in comp.clusters.iter().enumerate() {
            offsets.push(kinds.len());
            for _ in cl {
                arcs.push((color_vertex[h], kinds.len(), 0));
                kinds.push(0);
            }
        }
        for a in &comp.arcs {
            arcs.push((offsets[a.lower.0] + a.lower.1, offsets[a.upper.0] + a.upper.1, a.label as u64));
        }
    }
    LabeledDigraph { kinds, arcs }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub bytes: Vec<u8>,
}

impl Certificate {
    fn from_encoding(enc: &[u64]) -> Self {
        Certificate { bytes: enc.iter().flat_map(|&x| (x as u32).to_be_bytes()).collect() }
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn fingerprint(&self) -> String {
        Sha256::digest(&self.bytes).iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn certificate_of(components: &[USTComponent], mode: ColorMode, budget: usize) -> Result<Certificate, AnalysisError> {
    let form = canonical_form(&certificate_graph(components, mode), budget)?;
    Ok(Certificate::from_encoding(&form.encoding))
}

/// Certificate up to component order and a global color renaming.
pub fn certificate(dg: &DivisionGraph, budget: usize) -> Result<Certificate, AnalysisError> {
    certificate_of(&dg.components, ColorMode::Featureless, budget)
}

pub fn group_certificate(g: &Group, limits: &Limits) -> Result<Certificate, AnalysisError> {
    let l = all_subgroups(g, limits)?;
    certificate(&division_graph_with_lattice(g, &l), limits.search_budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Same,
    Different,
}

pub fn compare(a: &Group, b: &Group, limits: &Limits) -> Result<Comparison, AnalysisError> {
    let (ca, cb) = rayon::join(|| group_certificate(a, limits), || group_certificate(b, limits));
    Ok(if ca? == cb? { Comparison::Same } else { Comparison::Different })
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub group: String,
    pub order: usize,
    pub fingerprint: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub groups: Vec<ScanEntry>,
    /// Pairs with equal certificates but non-isomorphic tables.
    pub collisions: Vec<(String, String)>,
    /// Pairs of isomorphic groups with different certificates.
    pub invariance_failures: Vec<(String, String)>,
    pub isomorphic_pairs: usize,
    pub distinct_certificates: usize,
}

pub fn conjecture_scan(groups: &[Group], limits: &Limits) -> Result<ScanReport, AnalysisError> {
    let certs: Vec<Certificate> =
        groups.par_iter().map(|g| group_certificate(g, limits)).collect::<Result<Vec<_>, _>>()?;
    let pairs: Vec<(usize, usize)> =
        (0..groups.len()).flat_map(|i| (i + 1..groups.len()).map(move |j| (i, j))).collect();
    let verdicts: Vec<(usize, usize, bool, bool)> = pairs
        .par_iter()
        .filter(|&&(i, j)| groups[i].order() == groups[j].order())
        .map(|&(i, j)| (i, j, certs[i] == certs[j], groups[i].is_isomorphic(&groups[j])))
        .collect();
    let name = |i: usize| groups[i].name().to_string();
    let mut collisions = Vec::new();
    let mut invariance_failures = Vec::new();
    let mut isomorphic_pairs = 0;
    for (i, j, same_cert, iso) in verdicts {
        isomorphic_pairs += iso as usize;
        if same_cert && !iso {
            collisions.push((name(i), name(j)));
        }
        if !same_cert && iso {
            invariance_failures.push((name(i), name(j)));
        }
    }
    let distinct: HashSet<&Certificate> = certs.iter().collect();
    Ok(ScanReport {
        groups: groups
            .iter()
            .zip(&certs)
            .map(|(g, c)| ScanEntry { group: g.name().to_string(), order: g.order(), fingerprint: c.fingerprint() })
            .collect(),
        collisions,
        invariance_failures,
        isomorphic_pairs,
        distinct_certificates: distinct.len(),
    })
}
