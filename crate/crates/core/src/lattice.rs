//! Subgroup enumeration and the subgroup graph (Hasse diagram with
//! relative-index labels).
//!
//! Subgroups are found by seeding with every cyclic subgroup and closing
//! under joins with cyclic subgroups until nothing new appears. Every
//! subgroup is a join of cyclic subgroups, so the fixed point is complete.
//! Ids follow the canonical order: size ascending, then the sorted member
//! list lexicographically. Id 0 is the trivial subgroup and the last id is
//! the whole group.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::LatticeError;
use crate::group::Group;
use crate::Limits;

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub id: usize,
    pub members: ElementSet,
    /// A generating set (not necessarily minimal).
    pub gens: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }
}

/// Hasse arc from the larger group `lower` to the maximal subgroup `upper`,
/// labeled by `index = |lower| / |upper|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    order: usize,
    subgroups: Vec<Subgroup>,
    covers: Vec<Cover>,
    lookup: HashMap<ElementSet, usize>,
}

/// Enumerates every subgroup of `g` and computes the cover arcs.
pub fn all_subgroups(g: &Group, limits: &Limits) -> Result<SubgroupLattice, LatticeError> {
    let n = g.order();
    if n > limits.lattice_order_cap {
        return Err(LatticeError::OrderCap { order: n, cap: limits.lattice_order_cap });
    }
    let cap = limits.lattice_subgroup_cap;
    let mut found: Vec<(ElementSet, Vec<usize>)> = Vec::new();
    let mut seen: HashMap<ElementSet, usize> = HashMap::new();
    let mut cyclic_gens: Vec<usize> = Vec::new();

    let mut push = |set: ElementSet, gens: Vec<usize>, found: &mut Vec<(ElementSet, Vec<usize>)>| {
        if seen.contains_key(&set) {
            return Ok(None);
        }
        if found.len() == cap {
            return Err(LatticeError::SubgroupCap { cap });
        }
        seen.insert(set.clone(), found.len());
        found.push((set, gens));
        Ok(Some(found.len() - 1))
    };

    for x in g.elements() {
        let gens = if x == 0 { vec![] } else { vec![x] };
        if push(g.cyclic_subgroup(x), gens, &mut found)?.is_some() && x != 0 {
            cyclic_gens.push(x);
        }
    }

    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &c in &cyclic_gens {
                let (members, gens) = &found[a];
                if members.contains(c) {
                    continue;
                }
                let mut new_gens = gens.clone();
                new_gens.push(c);
                let joined = g.extend_closure(members.clone(), &new_gens);
                if let Some(id) = push(joined, new_gens, &mut found)? {
                    next.push(id);
                }
            }
        }
        frontier = next;
    }

    let mut keyed: Vec<(Vec<usize>, ElementSet, Vec<usize>)> =
        found.into_iter().map(|(set, gens)| (set.to_vec(), set, gens)).collect();
    keyed.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let subgroups: Vec<Subgroup> = keyed
        .into_iter()
        .enumerate()
        .map(|(id, (_, members, gens))| Subgroup { id, members, gens })
        .collect();
    let lookup = subgroups.iter().map(|s| (s.members.clone(), s.id)).collect();
    let covers = compute_covers(&subgroups);
    Ok(SubgroupLattice { order: n, subgroups, covers, lookup })
}

fn compute_covers(subgroups: &[Subgroup]) -> Vec<Cover> {
    let mut covers = Vec::new();
    for a in subgroups {
        let na = a.order();
        let below: Vec<&Subgroup> = subgroups
            .iter()
            .filter(|b| b.order() < na && na % b.order() == 0 && b.members.is_subset(&a.members))
            .collect();
        for b in &below {
            let nb = b.order();
            let maximal = !below
                .iter()
                .any(|c| c.order() > nb && c.order() % nb == 0 && b.members.is_subset(&c.members));
            if maximal {
                covers.push(Cover { lower: a.id, upper: b.id, index: na / nb });
            }
        }
    }
    covers.sort();
    covers
}

impl SubgroupLattice {
    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn find(&self, members: &ElementSet) -> Option<usize> {
        self.lookup.get(members).copied()
    }

    fn id_of(&self, members: &ElementSet) -> usize {
        self.find(members).expect("computed set is a subgroup of the lattice")
    }

    /// True if subgroup `small` is contained in subgroup `big`.
    pub fn contains(&self, big: usize, small: usize) -> bool {
        self.subgroups[small].members.is_subset(&self.subgroups[big].members)
    }

    pub fn is_normal(&self, g: &Group, h: usize) -> bool {
        let sub = &self.subgroups[h];
        g.elements().all(|s| sub.gens.iter().all(|&x| sub.members.contains(g.conjugate(x, s))))
    }

    pub fn normalizer(&self, g: &Group, h: usize) -> usize {
        let sub = &self.subgroups[h];
        let set = ElementSet::from_indices(
            g.order(),
            g.elements().filter(|&s| sub.gens.iter().all(|&x| sub.members.contains(g.conjugate(x, s)))),
        );
        self.id_of(&set)
    }

    /// Centralizer of an arbitrary element set.
    pub fn centralizer(&self, g: &Group, elements: &ElementSet) -> usize {
        let set = ElementSet::from_indices(
            g.order(),
            g.elements().filter(|&c| elements.iter().all(|x| g.mul(c, x) == g.mul(x, c))),
        );
        self.id_of(&set)
    }

    pub fn center(&self, g: &Group) -> usize {
        self.centralizer(g, &ElementSet::full(g.order()))
    }

    pub fn join(&self, g: &Group, a: usize, b: usize) -> usize {
        let (sa, sb) = (&self.subgroups[a], &self.subgroups[b]);
        let mut gens = sa.gens.clone();
        gens.extend(&sb.gens);
        self.id_of(&g.extend_closure(sa.members.clone(), &gens))
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.id_of(&self.subgroups[a].members.intersection(&self.subgroups[b].members))
    }

    pub fn commutator_subgroup(&self, g: &Group) -> usize {
        let mut comms = ElementSet::new(g.order());
        for a in g.elements() {
            for b in g.elements() {
                comms.insert(g.commutator(a, b));
            }
        }
        self.id_of(&g.generate(&comms.to_vec()))
    }

    /// Ids of all conjugates `s⁻¹ H s`, sorted.
    pub fn conjugates(&self, g: &Group, h: usize) -> Vec<usize> {
        let sub = &self.subgroups[h];
        let mut ids: Vec<usize> = g
            .elements()
            .map(|s| {
                let set = ElementSet::from_indices(g.order(), sub.members.iter().map(|x| g.conjugate(x, s)));
                self.id_of(&set)
            })
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub fn is_cyclic(&self, g: &Group, h: usize) -> bool {
        let sub = &self.subgroups[h];
        sub.members.iter().any(|x| g.element_order(x) == sub.order())
    }

    /// Graphviz rendering: edges run from the larger group to the smaller.
    pub fn to_dot(&self, group_name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph subgroup_lattice {{").unwrap();
        writeln!(out, "  label={:?};", group_name).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for s in &self.subgroups {
            writeln!(out, "  \"H{}\" [label=\"H{} (order {})\"];", s.id, s.id, s.order()).unwrap();
        }
        for c in &self.covers {
            writeln!(out, "  \"H{}\" -> \"H{}\" [label=\"{}\"];", c.lower, c.upper, c.index).unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }

    pub fn to_json(&self, g: &Group) -> LatticeJson {
        LatticeJson {
            group: g.name().to_string(),
            order: g.order(),
            subgroups: self
                .subgroups
                .iter()
                .map(|s| SubgroupJson {
                    id: s.id,
                    order: s.order(),
                    members: s.members.to_vec(),
                    member_names: s.members.iter().map(|x| g.element_name(x).to_string()).collect(),
                })
                .collect(),
            covers: self.covers.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupJson {
    pub id: usize,
    pub order: usize,
    pub members: Vec<usize>,
    pub member_names: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeJson {
    pub group: String,
    pub order: usize,
    pub subgroups: Vec<SubgroupJson>,
    pub covers: Vec<Cover>,
}
