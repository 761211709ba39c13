//! Canonical forms of vertex-colored, arc-labeled digraphs.
//!
//! Individualization-refinement: the partition of vertices is refined to
//! an equitable one by (cell, multiset of (direction, label, neighbor
//! cell)) signatures, then a vertex of the first smallest non-trivial cell
//! is individualized and the search recurses. Every leaf is a discrete
//! partition and hence a labeling; the lexicographically least leaf
//! encoding is the canonical form. Leaves with equal encodings yield
//! automorphisms, which prune sibling branches by orbit and by jumping back
//! to the level where the two leaves diverge.

use crate::error::AnalysisError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDigraph {
    /// Initial vertex color; only the relative order matters.
    pub kinds: Vec<u64>,
    /// `(from, to, label)`.
    pub arcs: Vec<(usize, usize, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Vertex to canonical position.
    pub labeling: Vec<usize>,
    pub encoding: Vec<u64>,
    pub nodes: usize,
}

impl LabeledDigraph {
    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    /// Encoding of the graph under `labeling` (vertex to position).
    pub fn encode(&self, labeling: &[usize]) -> Vec<u64> {
        let n = self.kinds.len();
        let mut kinds = vec![0; n];
        for v in 0..n {
            kinds[labeling[v]] = self.kinds[v];
        }
        let mut arcs: Vec<(u64, u64, u64)> =
            self.arcs.iter().map(|&(u, v, l)| (labeling[u] as u64, labeling[v] as u64, l)).collect();
        arcs.sort_unstable();
        let mut out = Vec::with_capacity(2 + n + 3 * arcs.len());
        out.push(n as u64);
        out.extend(kinds);
        out.push(arcs.len() as u64);
        for (u, v, l) in arcs {
            out.extend([u, v, l]);
        }
        out
    }
}

/// Arc direction (0 out, 1 in), arc label, neighbor cell.
type NeighborKey = (u8, u64, usize);

struct Search<'a> {
    graph: &'a LabeledDigraph,
    out_adj: Vec<Vec<(usize, u64)>>,
    in_adj: Vec<Vec<(usize, u64)>>,
    budget: usize,
    nodes: usize,
    first: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

/// Ranks `keys` densely in sorted order.
fn rank<K: Ord + Clone>(keys: &[K]) -> (Vec<usize>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect();
    (ranks, sorted.len())
}

fn cell_count(cells: &[usize]) -> usize {
    cells.iter().max().map_or(0, |m| m + 1)
}

impl<'a> Search<'a> {
    fn new(graph: &'a LabeledDigraph, budget: usize) -> Self {
        let n = graph.kinds.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v, l) in &graph.arcs {
            out_adj[u].push((v, l));
            in_adj[v].push((u, l));
        }
        Search { graph, out_adj, in_adj, budget, nodes: 0, first: None, best: None, automorphisms: Vec::new() }
    }

    fn refine(&self, mut cells: Vec<usize>) -> Vec<usize> {
        let mut count = cell_count(&cells);
        loop {
            let sigs: Vec<(usize, Vec<NeighborKey>)> = (0..cells.len())
                .map(|v| {
                    let mut nb: Vec<NeighborKey> = self.out_adj[v]
                        .iter()
                        .map(|&(w, l)| (0, l, cells[w]))
                        .chain(self.in_adj[v].iter().map(|&(w, l)| (1, l, cells[w])))
                        .collect();
                    nb.sort_unstable();
                    (cells[v], nb)
                })
                .collect();
            let (next, k) = rank(&sigs);
            cells = next;
            if k == count {
                return cells;
            }
            count = k;
        }
    }

    fn individualize(cells: &[usize], v: usize) -> Vec<usize> {
        let c = cells[v];
        cells
            .iter()
            .enumerate()
            .map(|(x, &cx)| if cx > c || (cx == c && x != v) { cx + 1 } else { cx })
            .collect()
    }

    /// Orbit representatives of the target cell under the automorphisms
    /// found so far that fix `path` pointwise.
    fn prune_orbits(&self, path: &[usize], candidates: &[usize]) -> Vec<usize> {
        let gens: Vec<&Vec<usize>> =
            self.automorphisms.iter().filter(|g| path.iter().all(|&p| g[p] == p)).collect();
        if gens.is_empty() {
            return candidates.to_vec();
        }
        let n = self.graph.kinds.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in gens {
            for (x, &gx) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        candidates.iter().copied().filter(|&w| seen.insert(find(&mut parent, w))).collect()
    }

    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn visit(&mut self, cells: Vec<usize>, path: &mut Vec<usize>) -> Result<Option<usize>, AnalysisError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(AnalysisError::CanonicalizationBudgetExceeded { budget: self.budget });
        }
        let cells = self.refine(cells);
        let n = cells.len();
        let k = cell_count(&cells);
        if k == n {
            return Ok(self.leaf(cells, path));
        }
        let mut sizes = vec![0usize; k];
        for &c in &cells {
            sizes[c] += 1;
        }
        let target = (0..k).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)).unwrap();
        let candidates: Vec<usize> = (0..n).filter(|&v| cells[v] == target).collect();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !explored.is_empty() {
                let mut trial = explored.clone();
                trial.push(w);
                let reps = self.prune_orbits(path, &trial);
                if !reps.contains(&w) {
                    continue;
                }
            }
            explored.push(w);
            path.push(w);
            let r = self.visit(Self::individualize(&cells, w), path)?;
            path.pop();
            if let Some(level) = r {
                if level < depth {
                    return Ok(Some(level));
                }
            }
        }
        Ok(None)
    }

    fn leaf(&mut self, labeling: Vec<usize>, path: &[usize]) -> Option<usize> {
        let enc = self.graph.encode(&labeling);
        let common = |other: &[usize]| path.iter().zip(other).take_while(|(a, b)| a == b).count();
        let automorphism = |reference: &[usize]| {
            // Vertex at position p in this leaf maps to the vertex at p in the reference.
            let mut at = vec![0; reference.len()];
            for (v, &p) in reference.iter().enumerate() {
                at[p] = v;
            }
            labeling.iter().map(|&p| at[p]).collect::<Vec<usize>>()
        };
        match &self.first {
            None => {
                self.first = Some((enc.clone(), labeling.clone(), path.to_vec()));
                self.best = Some((enc, labeling, path.to_vec()));
                return None;
            }
            Some((fe, fl, fp)) if *fe == enc => {
                let gamma = automorphism(fl);
                let level = common(fp);
                self.automorphisms.push(gamma);
                return Some(level);
            }
            _ => {}
        }
        let (be, bl, bp) = self.best.as_ref().unwrap();
        match enc.cmp(be) {
            std::cmp::Ordering::Less => {
                self.best = Some((enc, labeling, path.to_vec()));
                None
            }
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(bl);
                let level = common(bp);
                self.automorphisms.push(gamma);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

/// Canonical labeling and encoding. Isomorphic graphs (preserving kinds,
/// arc directions and labels) get equal encodings, and only those.
pub fn canonical_form(graph: &LabeledDigraph, budget: usize) -> Result<CanonicalForm, AnalysisError> {
    let mut search = Search::new(graph, budget);
    let (cells, _) = rank(&graph.kinds);
    if graph.kinds.is_empty() {
        return Ok(CanonicalForm { labeling: vec![], encoding: graph.encode(&[]), nodes: 0 });
    }
    search.visit(cells, &mut Vec::new())?;
    let nodes = search.nodes;
    let (encoding, labeling, _) = search.best.unwrap();
    Ok(CanonicalForm { labeling, encoding, nodes })
}
