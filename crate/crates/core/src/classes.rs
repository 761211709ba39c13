//! Conjugacy classes and divisions.

use serde::Serialize;

use crate::group::Group;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Minimal element index in the class.
    pub representative: usize,
    pub members: Vec<usize>,
}

/// A division: elements whose cyclic subgroups are conjugate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Division {
    /// Minimal element index in the division.
    pub representative: usize,
    pub members: Vec<usize>,
    /// Indices into [`conjugacy_classes`] of the classes united here.
    pub classes: Vec<usize>,
    pub common_order: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller root so roots are minimal members.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn groups(mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|v| !v.is_empty()).collect()
    }
}

/// Orbits of conjugation, ordered by minimal member.
pub fn conjugacy_classes(g: &Group) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut members: Vec<usize> = g.elements().map(|s| g.conjugate(x, s)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m] = true;
        }
        out.push(ConjugacyClass { representative: x, members });
    }
    out
}

/// Conjugacy classes read off the multiplication table: `c` and `d` are
/// conjugate exactly when some cell pair has `ab = c` and `ba = d`.
pub fn golomb_classes(g: &Group) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for b in (a + 1)..n {
            uf.union(g.mul(a, b), g.mul(b, a));
        }
    }
    uf.groups()
        .into_iter()
        .map(|members| ConjugacyClass { representative: members[0], members })
        .collect()
}

/// Number of cells `(a, b)` with `ab = c` and `ba = d`.
pub fn symmetric_occurrences(g: &Group, c: usize, d: usize) -> usize {
    // For fixed b the cell is determined by a = c b⁻¹.
    g.elements().filter(|&b| g.mul(b, g.mul(c, g.inv(b))) == d).count()
}

/// Class size predicted from symmetric table occurrences, `n / k`.
/// `None` when the pair never appears symmetrically.
pub fn golomb_class_size(g: &Group, c: usize, d: usize) -> Option<usize> {
    match symmetric_occurrences(g, c, d) {
        0 => None,
        k => Some(g.order() / k),
    }
}

/// Maps each element to the index of its class in `classes`.
pub fn class_index(classes: &[ConjugacyClass], n: usize) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, c) in classes.iter().enumerate() {
        for &m in &c.members {
            idx[m] = i;
        }
    }
    idx
}

/// Divisions, ordered by minimal member. Each class is fused with the
/// classes of its coprime powers.
pub fn divisions(g: &Group) -> Vec<Division> {
    let classes = conjugacy_classes(g);
    let idx = class_index(&classes, g.order());
    let mut uf = UnionFind::new(classes.len());
    for (ci, c) in classes.iter().enumerate() {
        for p in g.coprime_powers(c.representative) {
            uf.union(ci, idx[p]);
        }
    }
    let mut out: Vec<Division> = uf
        .groups()
        .into_iter()
        .map(|class_ids| {
            let mut members: Vec<usize> =
                class_ids.iter().flat_map(|&c| classes[c].members.iter().copied()).collect();
            members.sort_unstable();
            let representative = members[0];
            Division { representative, common_order: g.element_order(representative), members, classes: class_ids }
        })
        .collect();
    out.sort_by_key(|d| d.representative);
    out
}

pub fn division_of(g: &Group, x: usize) -> Division {
    divisions(g)
        .into_iter()
        .find(|d| d.members.binary_search(&x).is_ok())
        .expect("divisions partition the group")
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisionJson {
    pub representative: String,
    pub members: Vec<String>,
    pub class_representatives: Vec<String>,
    pub order: usize,
}

pub fn divisions_json(g: &Group, divs: &[Division]) -> Vec<DivisionJson> {
    let classes = conjugacy_classes(g);
    let name = |x: usize| g.element_name(x).to_string();
    divs.iter()
        .map(|d| DivisionJson {
            representative: name(d.representative),
            members: d.members.iter().map(|&m| name(m)).collect(),
            class_representatives: d.classes.iter().map(|&c| name(classes[c].representative)).collect(),
            order: d.common_order,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_str;
    use crate::Limits;

    fn build(s: &str) -> Group {
        catalog_str(s, &Limits::default()).unwrap()
    }

    fn named(g: &Group, members: &[usize]) -> Vec<String> {
        members.iter().map(|&m| g.element_name(m).to_string()).collect()
    }

    #[test]
    fn s3_class_sizes() {
        let g = build("symmetric:3");
        let sizes: Vec<usize> = conjugacy_classes(&g).iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = build("product:cyclic:2:cyclic:6");
        assert_eq!(conjugacy_classes(&g).len(), 12);
    }

    #[test]
    fn golomb_counts() {
        let g = build("symmetric:3");
        assert_eq!(golomb_class_size(&g, 0, 0), Some(1));
        let t = g.find_element("(1 2)").unwrap();
        let u = g.find_element("(1 3)").unwrap();
        assert_eq!(symmetric_occurrences(&g, t, u), 2);
        assert_eq!(golomb_class_size(&g, t, u), Some(3));
        let q = build("quaternion8");
        let (i, mi) = (q.find_element("i").unwrap(), q.find_element("-i").unwrap());
        assert_eq!(symmetric_occurrences(&q, i, mi), 4);
        assert_eq!(golomb_class_size(&q, i, mi), Some(2));
        assert_eq!(golomb_class_size(&q, i, q.find_element("j").unwrap()), None);
    }

    #[test]
    fn q8_divisions() {
        let g = build("quaternion8");
        let d: Vec<Vec<String>> = divisions(&g).iter().map(|d| named(&g, &d.members)).collect();
        assert_eq!(d, vec![vec!["1"], vec!["-1"], vec!["i", "-i"], vec!["j", "-j"], vec!["k", "-k"]]);
    }

    #[test]
    fn z4_divisions() {
        let g = build("cyclic:4");
        let d: Vec<Vec<usize>> = divisions(&g).into_iter().map(|d| d.members).collect();
        assert_eq!(d, vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn klein_divisions_are_singletons() {
        assert_eq!(divisions(&build("klein4")).len(), 4);
    }

    #[test]
    fn s4_four_cycles_form_one_division() {
        let g = build("symmetric:4");
        let c = g.find_element("(1 2 3 4)").unwrap();
        let d = division_of(&g, c);
        assert_eq!(d.members.len(), 6);
        assert!(d.members.iter().all(|&m| g.permutation(m).unwrap().cycle_type() == vec![4]));
        assert_eq!(division_of(&g, 0).members, vec![0]);
    }
}
