//! Double description: generators of `{y : <a_i, y> <= 0}` over `Z`.

use num_traits::{Signed, Zero};

use crate::num::{dot_int, primitive, Int, IntVec};

#[derive(Clone, Debug, Default)]
pub(crate) struct Cone {
    /// Extreme rays modulo the lineality space.
    pub rays: Vec<IntVec>,
    /// Basis of the lineality space.
    pub lineality: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> BitSet {
        BitSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn is_superset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: IntVec,
    zeros: BitSet,
}

fn combine(fa: &Int, a: &[Int], fb: &Int, b: &[Int]) -> IntVec {
    let v: IntVec = a.iter().zip(b).map(|(x, y)| fa * x + fb * y).collect();
    primitive(&v)
}

pub(crate) fn cone_from_constraints(dim: usize, constraints: &[IntVec]) -> Cone {
    let m = constraints.len();
    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (idx, a) in constraints.iter().enumerate() {
        if let Some(li) = lineality.iter().position(|l| !dot_int(a, l).is_zero()) {
            let mut l = lineality.swap_remove(li);
            let mut al = dot_int(a, &l);
            if al.is_positive() {
                l.iter_mut().for_each(|x| *x = -x.clone());
                al = -al;
            }
            let neg_al = -al.clone();
            lineality = lineality
                .into_iter()
                .map(|lp| {
                    let s = dot_int(a, &lp);
                    if s.is_zero() {
                        lp
                    } else {
                        combine(&al, &lp, &-s, &l)
                    }
                })
                .collect();
            for r in rays.iter_mut() {
                let s = dot_int(a, &r.v);
                if !s.is_zero() {
                    r.v = combine(&neg_al, &r.v, &s, &l);
                }
                r.zeros.insert(idx);
            }
            let mut zeros = BitSet::new(m);
            (0..idx).for_each(|j| zeros.insert(j));
            rays.push(Ray { v: l, zeros });
            continue;
        }

        let values: Vec<Int> = rays.iter().map(|r| dot_int(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if pos.is_empty() {
            for (r, s) in rays.iter_mut().zip(&values) {
                if s.is_zero() {
                    r.zeros.insert(idx);
                }
            }
            continue;
        }
        let pointed_dim = dim - lineality.len();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if pointed_dim >= 2 && common.count() + 2 < pointed_dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|k| k == p || k == n || !rays[k].zeros.is_superset(&common));
                if !adjacent {
                    continue;
                }
                // <a,p> n - <a,n> p lies on the hyperplane.
                let v = combine(&values[p], &rays[n].v, &-values[n].clone(), &rays[p].v);
                let mut zeros = common;
                zeros.insert(idx);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_positive() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros.insert(idx);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }

    Cone {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality,
    }
}
