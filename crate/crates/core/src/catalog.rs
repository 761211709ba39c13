//! Named constructors for the groups used throughout the crate.
//!
//! Descriptors use a small colon-separated grammar, `name[:arg[:arg]]`, for
//! example `symmetric:4`, `elementary_abelian:3:3` or
//! `product:cyclic:2:cyclic:4`. A `product` consumes two nested descriptors.

use std::fmt;
use std::str::FromStr;

use crate::error::GroupError;
use crate::group::{direct_product, from_permutation_generators, Group};
use crate::perm::Permutation;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Cyclic(usize),
    Klein4,
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, usize),
    /// Nonabelian group of order 27 and exponent 3.
    Heisenberg27,
    Product(Box<Descriptor>, Box<Descriptor>),
}

impl Descriptor {
    pub fn product(a: Descriptor, b: Descriptor) -> Descriptor {
        Descriptor::Product(Box::new(a), Box::new(b))
    }

    /// Order of the described group, saturating on overflow.
    pub fn order(&self) -> usize {
        match self {
            Descriptor::Cyclic(n) => *n,
            Descriptor::Klein4 => 4,
            Descriptor::Dihedral(n) => 2 * n,
            Descriptor::Quaternion8 => 8,
            Descriptor::Symmetric(n) => factorial(*n),
            Descriptor::Alternating(n) => {
                if *n < 2 {
                    1
                } else {
                    factorial(*n) / 2
                }
            }
            Descriptor::ElementaryAbelian(p, k) => p.checked_pow(*k as u32).unwrap_or(usize::MAX),
            Descriptor::Heisenberg27 => 27,
            Descriptor::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    fn parse_tokens<'a>(tokens: &mut impl Iterator<Item = &'a str>, whole: &str) -> Result<Descriptor, GroupError> {
        let unknown = || GroupError::UnknownDescriptor(whole.to_string());
        let num = |tokens: &mut dyn Iterator<Item = &'a str>| -> Result<usize, GroupError> {
            tokens.next().and_then(|t| t.trim().parse::<usize>().ok()).ok_or_else(unknown)
        };
        let name = tokens.next().ok_or_else(unknown)?.trim().to_ascii_lowercase();
        let d = match name.as_str() {
            "cyclic" | "c" | "z" => Descriptor::Cyclic(num(tokens)?),
            "klein4" | "v4" => Descriptor::Klein4,
            "dihedral" | "d" => Descriptor::Dihedral(num(tokens)?),
            "quaternion8" | "q8" => Descriptor::Quaternion8,
            "symmetric" | "s" => Descriptor::Symmetric(num(tokens)?),
            "alternating" | "a" => Descriptor::Alternating(num(tokens)?),
            "elementary_abelian" => {
                let p = num(tokens)?;
                let k = num(tokens)?;
                Descriptor::ElementaryAbelian(p, k)
            }
            "heisenberg27" => Descriptor::Heisenberg27,
            "product" | "direct_product" => {
                let a = Self::parse_tokens(tokens, whole)?;
                let b = Self::parse_tokens(tokens, whole)?;
                Descriptor::product(a, b)
            }
            _ => return Err(unknown()),
        };
        match &d {
            Descriptor::Cyclic(0) | Descriptor::Dihedral(0) => Err(unknown()),
            Descriptor::ElementaryAbelian(p, _) if !is_prime(*p) => Err(unknown()),
            _ => Ok(d),
        }
    }
}

impl FromStr for Descriptor {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split(':');
        let d = Descriptor::parse_tokens(&mut tokens, s)?;
        if tokens.next().is_some() {
            return Err(GroupError::UnknownDescriptor(s.to_string()));
        }
        Ok(d)
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Cyclic(n) => write!(f, "cyclic:{n}"),
            Descriptor::Klein4 => write!(f, "klein4"),
            Descriptor::Dihedral(n) => write!(f, "dihedral:{n}"),
            Descriptor::Quaternion8 => write!(f, "quaternion8"),
            Descriptor::Symmetric(n) => write!(f, "symmetric:{n}"),
            Descriptor::Alternating(n) => write!(f, "alternating:{n}"),
            Descriptor::ElementaryAbelian(p, k) => write!(f, "elementary_abelian:{p}:{k}"),
            Descriptor::Heisenberg27 => write!(f, "heisenberg27"),
            Descriptor::Product(a, b) => write!(f, "product:{a}:{b}"),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Builds the group named by `desc`.
pub fn catalog(desc: &Descriptor, limits: &Limits) -> Result<Group, GroupError> {
    let order = desc.order();
    if order > limits.order_cap {
        return Err(GroupError::OrderCapExceeded { order, cap: limits.order_cap });
    }
    let mut g = match desc {
        Descriptor::Cyclic(n) => cyclic(*n),
        Descriptor::Klein4 => elementary_abelian(2, 2),
        Descriptor::Dihedral(n) => dihedral(*n),
        Descriptor::Quaternion8 => quaternion8(),
        Descriptor::Symmetric(n) => symmetric(*n, limits)?,
        Descriptor::Alternating(n) => alternating(*n, limits)?,
        Descriptor::ElementaryAbelian(p, k) => elementary_abelian(*p, *k),
        Descriptor::Heisenberg27 => heisenberg27(),
        Descriptor::Product(a, b) => direct_product(&catalog(a, limits)?, &catalog(b, limits)?),
    };
    g.set_name(desc.to_string());
    Ok(g)
}

/// Parses and builds in one step.
pub fn catalog_str(desc: &str, limits: &Limits) -> Result<Group, GroupError> {
    catalog(&desc.parse()?, limits)
}

fn cyclic(n: usize) -> Group {
    let table = (0..n * n).map(|x| ((x / n + x % n) % n) as u32).collect();
    let names = (0..n).map(|i| i.to_string()).collect();
    Group::from_trusted_table("cyclic", table, names)
}

fn dihedral(n: usize) -> Group {
    // Element r^a s^b has index a + n*b.
    let order = 2 * n;
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (a1, b1) = (x % n, x / n);
        for y in 0..order {
            let (a2, b2) = (y % n, y / n);
            let a = if b1 == 0 { (a1 + a2) % n } else { (a1 + n - a2) % n };
            table[x * order + y] = (a + n * (b1 ^ b2)) as u32;
        }
    }
    let names = (0..order)
        .map(|x| {
            let (a, b) = (x % n, x / n);
            let r = match a {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{a}"),
            };
            match (r.is_empty(), b) {
                (true, 0) => "e".to_string(),
                (false, 0) => r,
                (true, _) => "s".to_string(),
                (false, _) => format!("{r}s"),
            }
        })
        .collect();
    Group::from_trusted_table("dihedral", table, names)
}

fn quaternion8() -> Group {
    // Units 1, i, j, k; element index = 2*unit + sign bit.
    const MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mut table = vec![0u32; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (w, s) = MUL[x / 2][y / 2];
            table[x * 8 + y] = (2 * w + (s ^ (x % 2) ^ (y % 2))) as u32;
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    Group::from_trusted_table("quaternion8", table, names)
}

fn elementary_abelian(p: usize, k: usize) -> Group {
    let n = p.pow(k as u32);
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut().rev() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let dx = digits(x);
        for y in 0..n {
            let dy = digits(y);
            let z = dx.iter().zip(&dy).fold(0, |acc, (a, b)| acc * p + (a + b) % p);
            table[x * n + y] = z as u32;
        }
    }
    let names = (0..n)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
            format!("({})", d.join(","))
        })
        .collect();
    Group::from_trusted_table("elementary_abelian", table, names)
}

fn heisenberg27() -> Group {
    // x^a y^b z^c with x central and z y = x^-1 y z, so
    // (x^a y^b z^c)(x^d y^e z^f) = x^(a+d-ce) y^(b+e) z^(c+f).
    let idx = |a: usize, b: usize, c: usize| a * 9 + b * 3 + c;
    let mut table = vec![0u32; 27 * 27];
    for x in 0..27 {
        let (a, b, c) = (x / 9, x / 3 % 3, x % 3);
        for y in 0..27 {
            let (d, e, f) = (y / 9, y / 3 % 3, y % 3);
            let xa = (a + d + 9 - c * e) % 3;
            table[x * 27 + y] = idx(xa, (b + e) % 3, (c + f) % 3) as u32;
        }
    }
    let names = (0..27)
        .map(|x| {
            let parts: Vec<String> = [("x", x / 9), ("y", x / 3 % 3), ("z", x % 3)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join(" ")
            }
        })
        .collect();
    Group::from_trusted_table("heisenberg27", table, names)
}

fn symmetric(n: usize, limits: &Limits) -> Result<Group, GroupError> {
    let d = n.max(1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(d, &[&[1, 2]])?);
        let long: Vec<usize> = (1..=n).collect();
        gens.push(Permutation::from_cycles(d, &[&long])?);
    }
    from_permutation_generators("symmetric", &gens, d, limits)
}

fn alternating(n: usize, limits: &Limits) -> Result<Group, GroupError> {
    let d = n.max(1);
    let gens = (3..=n)
        .map(|k| Permutation::from_cycles(d, &[&[1, 2, k]]))
        .collect::<Result<Vec<_>, _>>()?;
    from_permutation_generators("alternating", &gens, d, limits)
}

/// A fixed list of catalog descriptors of order at most `max_order`,
/// covering every constructor family plus assorted direct products.
/// Isomorphic duplicates (e.g. `symmetric:3` and `dihedral:3`) are kept.
pub fn standard_catalog(max_order: usize) -> Vec<Descriptor> {
    use Descriptor::*;
    let mut out: Vec<Descriptor> = Vec::new();
    out.extend((1..=max_order).map(Cyclic));
    out.extend([Klein4, Quaternion8, Heisenberg27]);
    out.extend((3..=max_order / 2).map(Dihedral));
    out.extend((3..=7).map(Symmetric));
    out.extend((4..=7).map(Alternating));
    for p in [2, 3, 5, 7] {
        for k in 2..=6 {
            out.push(ElementaryAbelian(p, k));
        }
    }
    for a in 2..=max_order {
        for b in (a..=max_order).step_by(a) {
            if (a, b) != (2, 2) {
                out.push(Descriptor::product(Cyclic(a), Cyclic(b)));
            }
        }
    }
    for base in [Quaternion8, Dihedral(4), Symmetric(3), Alternating(4), Heisenberg27] {
        for m in 2..=max_order {
            out.push(Descriptor::product(base.clone(), Cyclic(m)));
        }
    }
    out.retain(|d| d.order() <= max_order);
    out.sort_by_key(|d| (d.order(), d.to_string()));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::validate_cayley_table;

    fn build(s: &str) -> Group {
        catalog_str(s, &Limits::default()).unwrap()
    }

    fn assert_valid(g: &Group) {
        let v = validate_cayley_table(g.name(), &g.table_rows(), None, &Limits::default()).unwrap();
        assert_eq!(v.table_rows(), g.table_rows());
    }

    #[test]
    fn descriptor_grammar_round_trips() {
        for s in ["cyclic:4", "elementary_abelian:3:3", "product:cyclic:2:cyclic:4", "product:product:klein4:cyclic:3:quaternion8"] {
            let d: Descriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("cyclic".parse::<Descriptor>().is_err());
        assert!("cyclic:3:4".parse::<Descriptor>().is_err());
        assert!("mystery:3".parse::<Descriptor>().is_err());
        assert!("elementary_abelian:4:2".parse::<Descriptor>().is_err());
    }

    #[test]
    fn constructed_tables_are_groups() {
        for s in ["cyclic:6", "dihedral:5", "quaternion8", "heisenberg27", "elementary_abelian:3:2", "product:quaternion8:cyclic:3", "alternating:4"] {
            assert_valid(&build(s));
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = build("quaternion8");
        let [one, m1, i, j, k] = ["1", "-1", "i", "j", "k"].map(|n| q.find_element(n).unwrap());
        assert_eq!(one, 0);
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.mul(j, j), m1);
        assert_eq!(q.mul(k, k), m1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, k), i);
        assert_eq!(q.mul(k, i), j);
        assert_eq!(q.mul(j, i), q.find_element("-k").unwrap());
        assert_eq!(q.element_order(i), 4);
    }

    #[test]
    fn heisenberg_has_exponent_three() {
        let h = build("heisenberg27");
        assert_eq!(h.order(), 27);
        assert!(h.elements().skip(1).all(|g| h.element_order(g) == 3));
        assert!(!h.is_abelian());
    }

    #[test]
    fn klein_is_product_of_two_cyclic() {
        let v = build("klein4");
        let p = build("product:cyclic:2:cyclic:2");
        assert_eq!(p.order(), 4);
        assert!(v.is_isomorphic(&p));
        assert_eq!(v.names(), &["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
    }

    #[test]
    fn orders() {
        assert_eq!(build("symmetric:4").order(), 24);
        assert_eq!(build("alternating:5").order(), 60);
        assert_eq!(build("dihedral:4").order(), 8);
        assert_eq!(build("symmetric:1").order(), 1);
        assert_eq!(build("alternating:2").order(), 1);
        assert!(matches!(
            catalog_str("symmetric:8", &Limits::default()),
            Err(GroupError::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn standard_catalog_respects_bound() {
        let c = standard_catalog(15);
        assert!(c.iter().all(|d| d.order() <= 15));
        assert!(c.contains(&Descriptor::Quaternion8));
        assert!(c.contains(&Descriptor::Alternating(4)));
    }
}
