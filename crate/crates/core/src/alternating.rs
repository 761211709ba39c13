//! Divisions of alternating groups from cycle-type combinatorics.
//!
//! An even class of `S_n` splits into two `A_n` classes exactly when its
//! cycle lengths (fixed points included) are odd and pairwise distinct. A
//! split pair is one division unless no coprime power of a representative
//! lands in the other half; conjugator parity decides which half a
//! conjugate lies in.

use std::collections::BTreeMap;

use crate::error::AlternatingError;
use crate::perm::{gcd, Permutation};

/// All partitions of `n`, each weakly decreasing, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A cycle type describes even permutations iff `n - #parts` is even.
pub fn is_even_type(cycle_type: &[usize]) -> bool {
    let n: usize = cycle_type.iter().sum();
    (n - cycle_type.len()).is_multiple_of(2)
}

pub fn class_splits_in_alternating(cycle_type: &[usize]) -> Result<bool, AlternatingError> {
    if !is_even_type(cycle_type) {
        return Err(AlternatingError::NotEvenClass(cycle_type.to_vec()));
    }
    let mut parts = cycle_type.to_vec();
    parts.sort_unstable();
    let distinct = parts.windows(2).all(|w| w[0] != w[1]);
    Ok(distinct && parts.iter().all(|p| p % 2 == 1))
}

/// For a split type: are the two halves each closed under inverses?
/// True iff the number of parts congruent to 3 mod 4 is even.
pub fn split_class_inverse_closed(cycle_type: &[usize]) -> Result<bool, AlternatingError> {
    if !class_splits_in_alternating(cycle_type)? {
        return Err(AlternatingError::NotSplitClass(cycle_type.to_vec()));
    }
    Ok(cycle_type.iter().filter(|&&p| p % 4 == 3).count() % 2 == 0)
}

/// `A_n` is ambivalent only for n in {2, 5, 6, 10, 14}.
pub fn ambivalent_alternating(n: usize) -> bool {
    matches!(n, 2 | 5 | 6 | 10 | 14)
}

/// The permutation `(1 .. a)(a+1 .. a+b)...` of the given cycle type.
pub fn permutation_of_type(cycle_type: &[usize]) -> Permutation {
    let n: usize = cycle_type.iter().sum();
    let mut next = 1;
    let cycles: Vec<Vec<usize>> = cycle_type
        .iter()
        .map(|&len| {
            let c: Vec<usize> = (next..next + len).collect();
            next += len;
            c
        })
        .collect();
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(n, &refs).expect("consecutive cycles are disjoint")
}

/// A permutation `τ` with `τ p τ⁻¹ = q`, built by lining up the cycles of
/// `p` and `q` sorted by (length, minimal point), each read from its
/// minimal point.
pub fn standard_conjugator(p: &Permutation, q: &Permutation) -> Result<Permutation, AlternatingError> {
    if p.degree() != q.degree() || p.cycle_type() != q.cycle_type() {
        return Err(AlternatingError::TypeMismatch(p.cycle_type(), q.cycle_type()));
    }
    let sorted = |perm: &Permutation| {
        let mut cs = perm.all_cycles();
        cs.sort_by_key(|c| (c.len(), c[0]));
        cs
    };
    let mut images = vec![0usize; p.degree()];
    for (cp, cq) in sorted(p).iter().zip(sorted(q).iter()) {
        for (&x, &y) in cp.iter().zip(cq) {
            images[x - 1] = y;
        }
    }
    Ok(Permutation::from_images(&images).expect("cycle alignment is a bijection"))
}

/// Whether two even permutations of the same type are conjugate in `A_n`.
pub fn same_class_in_alternating(p: &Permutation, q: &Permutation) -> Result<bool, AlternatingError> {
    let tp = p.cycle_type();
    if p.degree() != q.degree() || tp != q.cycle_type() {
        return Err(AlternatingError::TypeMismatch(tp, q.cycle_type()));
    }
    if !class_splits_in_alternating(&tp)? {
        return Ok(true);
    }
    Ok(standard_conjugator(p, q)?.is_even())
}

/// Number of `A_n` divisions (1 or 2) for every even cycle type of `n`.
pub fn alternating_divisions_by_type(
    n: usize,
    cap: usize,
) -> Result<BTreeMap<Vec<usize>, usize>, AlternatingError> {
    assert!(n <= cap, "n = {n} exceeds the alternating cap {cap}");
    let mut out = BTreeMap::new();
    for t in partitions(n) {
        if !is_even_type(&t) {
            continue;
        }
        let count = if !class_splits_in_alternating(&t)? {
            1
        } else {
            let pi = permutation_of_type(&t);
            let m = pi.order();
            let fused = (2..m)
                .filter(|&k| gcd(k, m) == 1)
                .map(|k| same_class_in_alternating(&pi, &pi.power(k as i64)))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .any(|same| !same);
            if fused {
                1
            } else {
                2
            }
        };
        out.insert(t, count);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn split_detection() {
        assert!(class_splits_in_alternating(&[5]).unwrap());
        assert!(!class_splits_in_alternating(&[3, 3]).unwrap());
        assert!(!class_splits_in_alternating(&[2, 2]).unwrap());
        assert!(class_splits_in_alternating(&[9, 1]).unwrap());
        assert!(matches!(class_splits_in_alternating(&[2, 1]), Err(AlternatingError::NotEvenClass(_))));
    }

    #[test]
    fn inverse_closure() {
        assert!(split_class_inverse_closed(&[7, 3]).unwrap());
        assert!(!split_class_inverse_closed(&[3]).unwrap());
        assert!(split_class_inverse_closed(&[5]).unwrap());
        assert!(matches!(split_class_inverse_closed(&[2, 2]), Err(AlternatingError::NotSplitClass(_))));
    }

    #[test]
    fn ambivalence_list() {
        let amb: Vec<usize> = (2..=20).filter(|&n| ambivalent_alternating(n)).collect();
        assert_eq!(amb, vec![2, 5, 6, 10, 14]);
    }

    #[test]
    fn five_cycle_square_needs_odd_conjugator() {
        let p = perm("(1 2 3 4 5)", 5);
        let q = p.power(2);
        let tau = standard_conjugator(&p, &q).unwrap();
        assert_eq!(tau.to_string(), "(2 3 5 4)");
        assert_eq!(tau.compose(&p).compose(&tau.inverse()), q);
        assert!(!same_class_in_alternating(&p, &q).unwrap());
        assert!(same_class_in_alternating(&p, &p).unwrap());
    }

    #[test]
    fn nine_cycle_powers_stay_in_class() {
        let p = perm("(1 2 3 4 5 6 7 8 9)", 10);
        let t2 = standard_conjugator(&p, &p.power(2)).unwrap();
        assert_eq!(t2.to_string(), "(2 3 5 9 8 6)(4 7)");
        let t4 = standard_conjugator(&p, &p.power(4)).unwrap();
        assert_eq!(t4.to_string(), "(2 5 8)(3 9 6)");
        assert!(same_class_in_alternating(&p, &p.power(2)).unwrap());
        assert!(same_class_in_alternating(&p, &p.power(4)).unwrap());
    }

    #[test]
    fn type_mismatch() {
        let p = perm("(1 2 3)", 5);
        let q = perm("(1 2)(3 4)", 5);
        assert!(matches!(same_class_in_alternating(&p, &q), Err(AlternatingError::TypeMismatch(..))));
    }

    #[test]
    fn exception_at_ten() {
        let m = alternating_divisions_by_type(10, 20).unwrap();
        assert_eq!(m[&vec![9, 1]], 2);
        assert!(m.iter().filter(|(t, _)| *t != &vec![9, 1]).all(|(_, &c)| c == 1));
        assert_eq!(alternating_divisions_by_type(5, 20).unwrap()[&vec![5]], 1);
    }
}
