//! Finite groups given by a complete multiplication table.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::ElementSet;
use crate::error::GroupError;
use crate::perm::{gcd, Permutation};
use crate::Limits;

/// A finite group. Element 0 is always the identity.
#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    names: Vec<String>,
    perms: Option<Vec<Permutation>>,
    degree: usize,
}

impl Group {
    /// Builds from a table already known to be a group with identity at 0.
    pub(crate) fn from_trusted_table(name: impl Into<String>, table: Vec<u32>, names: Vec<String>) -> Group {
        let order = names.len();
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for (i, inv) in inverse.iter_mut().enumerate() {
            let row = &table[i * order..(i + 1) * order];
            *inv = row.iter().position(|&x| x == 0).expect("trusted table has inverses") as u32;
        }
        Group { name: name.into(), order, table, inverse, names, perms: None, degree: 0 }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn find_element(&self, name: &str) -> Option<usize> {
        let wanted = name.trim();
        if let Some(i) = self.names.iter().position(|n| n == wanted) {
            return Some(i);
        }
        // Permutation groups also accept any cycle spelling, e.g. "(2 3 1)".
        let perms = self.perms.as_ref()?;
        let p = Permutation::parse_cycles(wanted, self.degree).ok()?;
        perms.iter().position(|q| *q == p)
    }

    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.perms.as_deref()
    }

    pub fn permutation(&self, g: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p[g])
    }

    /// Degree of the permutation realization, or 0 when there is none.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    /// Smallest `m >= 1` with `g^m = 1`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut m = 1;
        while x != 0 {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    pub fn power(&self, g: usize, k: i64) -> usize {
        let ord = self.element_order(g) as i64;
        let e = k.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, g);
        }
        acc
    }

    /// `s⁻¹ g s`.
    pub fn conjugate(&self, g: usize, s: usize) -> usize {
        self.mul(self.mul(self.inv(s), g), s)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Generators `g` with `gcd(k, ord g) = 1` powers, i.e. all generators of `<g>`.
    pub fn coprime_powers(&self, g: usize) -> Vec<usize> {
        let m = self.element_order(g);
        let mut out = Vec::new();
        let mut x = 0;
        for k in 1..=m {
            x = self.mul(x, g);
            if gcd(k, m) == 1 {
                out.push(x);
            }
        }
        out
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> ElementSet {
        let start = ElementSet::from_indices(self.order, [0]);
        self.extend_closure(start, gens)
    }

    /// Smallest subgroup containing `base` and `gens`, where `base` is a
    /// subgroup and `gens` includes a generating set of `base`.
    pub(crate) fn extend_closure(&self, base: ElementSet, gens: &[usize]) -> ElementSet {
        if gens.iter().all(|&g| base.contains(g)) {
            return base;
        }
        let mut set = base;
        let mut queue: VecDeque<usize> = set.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn cyclic_subgroup(&self, g: usize) -> ElementSet {
        let mut s = ElementSet::new(self.order);
        let mut x = 0;
        loop {
            s.insert(x);
            x = self.mul(x, g);
            if x == 0 {
                break;
            }
        }
        s
    }

    /// Relabels elements: old element `i` becomes new element `perm[i]`.
    /// `perm` must be a permutation of `0..n` with `perm[0] = 0`.
    pub fn relabel(&self, perm: &[usize]) -> Group {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "relabeling must keep the identity at 0");
        let n = self.order;
        let mut table = vec![0u32; n * n];
        let mut names = vec![String::new(); n];
        for i in 0..n {
            names[perm[i]] = self.names[i].clone();
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u32;
            }
        }
        let mut g = Group::from_trusted_table(self.name.clone(), table, names);
        if let Some(ps) = &self.perms {
            let mut np = vec![Permutation::identity(self.degree); n];
            for i in 0..n {
                np[perm[i]] = ps[i].clone();
            }
            g.perms = Some(np);
            g.degree = self.degree;
        }
        g
    }

    /// Quotient by a normal subgroup. Returns the quotient and the projection
    /// `G -> G/N` as an element map. Cosets are ordered by minimal element.
    pub fn quotient(&self, normal: &ElementSet) -> (Group, Vec<usize>) {
        let n = self.order;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for h in normal.iter() {
                coset_of[self.mul(h, g)] = idx;
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = coset_of[self.mul(reps[a], reps[b])] as u32;
            }
        }
        let names = reps.iter().map(|&r| format!("[{}]", self.names[r])).collect();
        let q = Group::from_trusted_table(format!("{}/N", self.name), table, names);
        (q, coset_of)
    }

    /// A small generating set, picked greedily from elements of large order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        let mut gens = Vec::new();
        let mut current = self.generate(&[]);
        for g in by_order {
            if current.len() == self.order {
                break;
            }
            if !current.contains(g) {
                gens.push(g);
                current = self.extend_closure(current, &gens);
            }
        }
        gens
    }

    /// Exhaustive isomorphism search. Returns `map` with `map[g]` the image in `other`.
    pub fn find_isomorphism(&self, other: &Group) -> Option<Vec<usize>> {
        if self.order != other.order {
            return None;
        }
        let mut a: Vec<usize> = self.elements().map(|g| self.element_order(g)).collect();
        let mut b: Vec<usize> = other.elements().map(|g| other.element_order(g)).collect();
        let gens = self.generating_set();
        let gen_orders: Vec<usize> = gens.iter().map(|&g| a[g]).collect();
        let candidates: Vec<Vec<usize>> = gen_orders
            .iter()
            .map(|&o| other.elements().filter(|&h| b[h] == o).collect())
            .collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let mut images = Vec::with_capacity(gens.len());
        self.iso_search(other, &gens, &candidates, &mut images)
    }

    fn iso_search(
        &self,
        other: &Group,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            return self.extend_homomorphism(other, gens, images);
        }
        for &c in &candidates[images.len()] {
            images.push(c);
            if let Some(m) = self.iso_search(other, gens, candidates, images) {
                return Some(m);
            }
            images.pop();
        }
        None
    }

    fn extend_homomorphism(&self, other: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order;
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = other.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let mut hit = vec![false; n];
        for &m in &map {
            if m == usize::MAX || hit[m] {
                return None;
            }
            hit[m] = true;
        }
        Some(map)
    }

    pub fn is_isomorphic(&self, other: &Group) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

/// Validates a Cayley table and returns the group it describes, with the
/// identity relabeled to index 0.
pub fn validate_cayley_table(
    name: &str,
    table: &[Vec<usize>],
    names: Option<Vec<String>>,
    limits: &Limits,
) -> Result<Group, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    if n > limits.order_cap {
        return Err(GroupError::OrderCapExceeded { order: n, cap: limits.order_cap });
    }
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotSquare { row: r, len: row.len(), expected: n });
        }
    }
    if let Some(ns) = &names {
        if ns.len() != n {
            return Err(GroupError::Parse(format!("{} names given for order {n}", ns.len())));
        }
    }
    // Latin square: every row and column is a permutation of 0..n.
    let mut seen = vec![false; n];
    for (r, row) in table.iter().enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for (c, &v) in row.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(GroupError::NotClosed { row: r, col: c, value: v });
            }
            seen[v] = true;
        }
    }
    for c in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for (r, row) in table.iter().enumerate() {
            let v = row[c];
            if seen[v] {
                return Err(GroupError::NotClosed { row: r, col: c, value: v });
            }
            seen[v] = true;
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or(GroupError::NoIdentity)?;
    for (i, row) in table.iter().enumerate() {
        match row.iter().position(|&x| x == e) {
            Some(j) if table[j][i] == e => {}
            _ => return Err(GroupError::NoInverse { element: i }),
        }
    }
    check_associativity(table, limits)?;

    // Swap the identity into position 0.
    let swap = |x: usize| {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let mut flat = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            flat[swap(i) * n + swap(j)] = swap(table[i][j]) as u32;
        }
    }
    let mut names = names.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
    names.swap(0, e);
    Ok(Group::from_trusted_table(name, flat, names))
}

fn check_associativity(table: &[Vec<usize>], limits: &Limits) -> Result<(), GroupError> {
    let n = table.len();
    let check = |a: usize, b: usize, c: usize| {
        if table[table[a][b]][c] != table[a][table[b][c]] {
            Err(GroupError::NotAssociative { a, b, c })
        } else {
            Ok(())
        }
    };
    if n < limits.associativity_exhaustive_below {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0a55_0c1a);
        for _ in 0..10 * n * n {
            check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
    }
    Ok(())
}

/// Closes a set of permutations under composition. Elements are sorted by
/// image list, so the identity is element 0 and the numbering does not
/// depend on generator order.
pub fn from_permutation_generators(
    name: &str,
    gens: &[Permutation],
    degree: usize,
    limits: &Limits,
) -> Result<Group, GroupError> {
    for (i, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch { index: i, found: g.degree(), expected: degree });
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::from([(id.clone(), ())]);
    let mut elems = vec![id];
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        head += 1;
        for g in gens {
            let y = x.compose(g);
            if !seen.contains_key(&y) {
                if elems.len() == limits.order_cap {
                    return Err(GroupError::OrderCapExceeded { order: elems.len() + 1, cap: limits.order_cap });
                }
                seen.insert(y.clone(), ());
                elems.push(y);
            }
        }
    }
    elems.sort();
    Ok(group_from_sorted_perms(name, elems, degree))
}

fn group_from_sorted_perms(name: &str, elems: Vec<Permutation>, degree: usize) -> Group {
    let n = elems.len();
    let index: HashMap<&[usize], usize> = elems.iter().enumerate().map(|(i, p)| (p.images0(), i)).collect();
    let mut table = vec![0u32; n * n];
    let mut buf = vec![0usize; degree];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            for (x, slot) in buf.iter_mut().enumerate() {
                *slot = a.apply(b.apply(x));
            }
            table[i * n + j] = index[buf.as_slice()] as u32;
        }
    }
    let names = elems.iter().map(|p| p.to_string()).collect();
    let mut g = Group::from_trusted_table(name, table, names);
    g.perms = Some(elems);
    g.degree = degree;
    g
}

/// Checks that a permutation-realized group's table matches composition.
pub fn check_permutation_consistency(g: &Group) -> Result<(), GroupError> {
    let Some(perms) = g.permutations() else { return Ok(()) };
    for i in g.elements() {
        for j in g.elements() {
            if perms[i].compose(&perms[j]) != perms[g.mul(i, j)] {
                return Err(GroupError::PermutationMismatch { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Direct product; element `(a, b)` has index `a * |B| + b`.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
        }
    }
    let names = (0..n)
        .map(|x| format!("({},{})", a.element_name(x / nb), b.element_name(x % nb)))
        .collect();
    Group::from_trusted_table(format!("{}x{}", a.name(), b.name()), table, names)
}
