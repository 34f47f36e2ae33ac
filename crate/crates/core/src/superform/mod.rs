//! Superforms `α = Σ α_{IJ} d'x_I ∧ d''x_J` on `R^r` with polynomial coefficients.
//!
//! All generators `d'x_i`, `d''x_j` are odd: the algebra is the exterior
//! algebra on `2r` generators, graded by total degree `p + q`. A term is kept
//! in the normal form `d'x_I ∧ d''x_J` with both index sets increasing; any
//! reordering sign is absorbed into the coefficient. With this convention
//! `d' = Σ d'x_i ∂_i` and `d'' = Σ d''x_j ∂_j` act by left multiplication, so
//! `d'd'' = -d''d'`.
//!
//! Multilinear evaluation: `α(n_1..n_p; n_{p+1}..n_{p+q})` is
//! `Σ α_{IJ} det(<dx_I, n_1..n_p>) det(<dx_J, n_{p+1}..n_{p+q}>)`.

mod map;
mod polynomial;

pub use map::IntegralAffineMap;
pub use polynomial::{Exponent, Polynomial};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{RatVec, Rational};

/// Maximum ambient dimension (index sets are stored as bit masks).
pub const MAX_AMBIENT: usize = 32;

type Mask = u32;

fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

fn indices_of(mask: Mask) -> Vec<usize> {
    (0..MAX_AMBIENT).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Parity of `#{(a, b) : a ∈ A, b ∈ B, a > b}`: the sign of sorting `A ++ B`.
fn shuffle_odd(a: Mask, b: Mask) -> bool {
    let mut count = 0u32;
    for j in indices_of(b) {
        let above = if j + 1 >= MAX_AMBIENT { 0 } else { a >> (j + 1) };
        count += above.count_ones();
    }
    count % 2 == 1
}

/// Sign and mask of a product of the listed generators, `None` on repetition.
fn sort_sign(indices: &[usize]) -> Option<(bool, Mask)> {
    let mut v = indices.to_vec();
    let mut odd = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                odd = !odd;
            } else if v[j] == v[j + 1] {
                return None;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((odd, mask_of(&v)))
}

/// All increasing `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Superform {
    ambient: usize,
    p: usize,
    q: usize,
    terms: BTreeMap<(Mask, Mask), Polynomial>,
}

impl Superform {
    pub fn zero(ambient: usize, p: usize, q: usize) -> Superform {
        assert!(ambient <= MAX_AMBIENT, "ambient dimension above {MAX_AMBIENT}");
        Superform {
            ambient,
            p,
            q,
            terms: BTreeMap::new(),
        }
    }

    /// A `(0,0)`-form.
    pub fn function(f: Polynomial) -> Superform {
        let mut s = Superform::zero(f.vars(), 0, 0);
        s.add_component(0, 0, f);
        s
    }

    pub fn constant(ambient: usize, c: Rational) -> Superform {
        Superform::function(Polynomial::constant(ambient, c))
    }

    /// `f d'x_{i_1} ∧ ... ∧ d'x_{i_p} ∧ d''x_{j_1} ∧ ... ∧ d''x_{j_q}` in the
    /// given (0-based, not necessarily sorted) order.
    pub fn term(ambient: usize, i: &[usize], j: &[usize], f: Polynomial) -> Superform {
        assert_eq!(f.vars(), ambient, "coefficient has wrong number of variables");
        assert!(i.iter().chain(j).all(|&k| k < ambient), "index out of range");
        let mut s = Superform::zero(ambient, i.len(), j.len());
        if let (Some((oi, mi)), Some((oj, mj))) = (sort_sign(i), sort_sign(j)) {
            let f = if oi != oj { -f } else { f };
            s.add_component(mi, mj, f);
        }
        s
    }

    /// `d'x_i` (0-based).
    pub fn dprime_x(ambient: usize, i: usize) -> Superform {
        Superform::term(ambient, &[i], &[], Polynomial::one(ambient))
    }

    /// `d''x_j` (0-based).
    pub fn dsecond_x(ambient: usize, j: usize) -> Superform {
        Superform::term(ambient, &[], &[j], Polynomial::one(ambient))
    }

    fn add_component(&mut self, i: Mask, j: Mask, f: Polynomial) {
        if f.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((i, j))
            .or_insert_with(|| Polynomial::zero(self.ambient));
        *entry = std::mem::replace(entry, Polynomial::zero(0)) + f;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Components `(I, J, α_{IJ})` with 0-based increasing index lists.
    pub fn components(&self) -> impl Iterator<Item = (Vec<usize>, Vec<usize>, &Polynomial)> {
        self.terms
            .iter()
            .map(|(&(i, j), f)| (indices_of(i), indices_of(j), f))
    }

    /// `α_{IJ}` for increasing 0-based index lists.
    pub fn coefficient(&self, i: &[usize], j: &[usize]) -> Polynomial {
        self.terms
            .get(&(mask_of(i), mask_of(j)))
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.ambient))
    }

    fn check_same_space(&self, other: &Superform) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    fn check_same_kind(&self, other: &Superform) -> Result<()> {
        self.check_same_space(other)?;
        if (self.p, self.q) != (other.p, other.q) {
            return Err(Error::Bidegree(self.p, self.q, other.p, other.q));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Superform) -> Result<Superform> {
        self.check_same_kind(other)?;
        let mut out = self.clone();
        for (&(i, j), f) in &other.terms {
            out.add_component(i, j, f.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Superform) -> Result<Superform> {
        self.checked_add(&-other.clone())
    }

    pub fn scale(&self, c: &Rational) -> Superform {
        self.map_coefficients(|f| f.scale(c))
    }

    pub fn mul_function(&self, g: &Polynomial) -> Superform {
        self.map_coefficients(|f| f * g)
    }

    fn map_coefficients(&self, op: impl Fn(&Polynomial) -> Polynomial) -> Superform {
        let mut out = Superform::zero(self.ambient, self.p, self.q);
        for (&(i, j), f) in &self.terms {
            out.add_component(i, j, op(f));
        }
        out
    }

    /// `self ∧ other`.
    pub fn wedge(&self, other: &Superform) -> Result<Superform> {
        self.check_same_space(other)?;
        let mut out = Superform::zero(self.ambient, self.p + other.p, self.q + other.q);
        for (&(i, j), f) in &self.terms {
            for (&(k, l), g) in &other.terms {
                if i & k != 0 || j & l != 0 {
                    continue;
                }
                let mut odd = (j.count_ones() * k.count_ones()) % 2 == 1;
                odd ^= shuffle_odd(i, k);
                odd ^= shuffle_odd(j, l);
                let h = f * g;
                out.add_component(i | k, j | l, if odd { -h } else { h });
            }
        }
        Ok(out)
    }

    /// `J^{p,q}`: exchange of the two tensor factors, `d'x_I ∧ d''x_J -> d'x_J ∧ d''x_I`.
    pub fn swap(&self) -> Superform {
        let mut out = Superform::zero(self.ambient, self.q, self.p);
        for (&(i, j), f) in &self.terms {
            out.add_component(j, i, f.clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.p == self.q && self.swap() == *self
    }

    /// `d'α = Σ_i ∂_i α_{IJ} d'x_i ∧ d'x_I ∧ d''x_J`.
    pub fn d_prime(&self) -> Superform {
        let mut out = Superform::zero(self.ambient, self.p + 1, self.q);
        for (&(i, j), f) in &self.terms {
            for k in 0..self.ambient {
                if i & (1 << k) != 0 {
                    continue;
                }
                let df = f.derivative(k);
                if df.is_zero() {
                    continue;
                }
                let odd = (i & ((1 << k) - 1)).count_ones() % 2 == 1;
                out.add_component(i | (1 << k), j, if odd { -df } else { df });
            }
        }
        out
    }

    /// `d''α = Σ_j ∂_j α_{IJ} d''x_j ∧ d'x_I ∧ d''x_J`.
    pub fn d_second(&self) -> Superform {
        let mut out = Superform::zero(self.ambient, self.p, self.q + 1);
        for (&(i, j), f) in &self.terms {
            for k in 0..self.ambient {
                if j & (1 << k) != 0 {
                    continue;
                }
                let df = f.derivative(k);
                if df.is_zero() {
                    continue;
                }
                let odd = (self.p + (j & ((1 << k) - 1)).count_ones() as usize) % 2 == 1;
                out.add_component(i, j | (1 << k), if odd { -df } else { df });
            }
        }
        out
    }

    /// `dα = d'α + d''α`, as its `(p+1,q)` and `(p,q+1)` components.
    pub fn d_total(&self) -> (Superform, Superform) {
        (self.d_prime(), self.d_second())
    }

    /// `<α; v_1, ..., v_s>_P`: inserts `vectors[k]` at the 1-based slot
    /// `positions[k]` of the multilinear map of `α`.
    pub fn contract(&self, vectors: &[RatVec], positions: &[usize]) -> Result<Superform> {
        if vectors.len() != positions.len() {
            return Err(Error::Invalid(format!(
                "{} vectors for {} positions",
                vectors.len(),
                positions.len()
            )));
        }
        for v in vectors {
            if v.len() != self.ambient {
                return Err(Error::AmbientMismatch {
                    expected: self.ambient,
                    found: v.len(),
                });
            }
        }
        let mut slots: Vec<(usize, &RatVec)> = Vec::with_capacity(positions.len());
        for (&pos, v) in positions.iter().zip(vectors) {
            if pos == 0 || pos > self.p + self.q || slots.iter().any(|(q, _)| *q == pos) {
                return Err(Error::Position {
                    position: pos,
                    p: self.p,
                    q: self.q,
                });
            }
            slots.push((pos, v));
        }
        slots.sort_by_key(|(pos, _)| *pos);
        let first: Vec<(usize, &RatVec)> = slots.iter().filter(|(pos, _)| *pos <= self.p).cloned().collect();
        let second: Vec<(usize, &RatVec)> = slots
            .iter()
            .filter(|(pos, _)| *pos > self.p)
            .map(|(pos, v)| (pos - self.p, *v))
            .collect();

        let mut out = Superform::zero(self.ambient, self.p - first.len(), self.q - second.len());
        for (&(i, j), f) in &self.terms {
            let a = block_expansion(i, &first);
            if a.is_empty() {
                continue;
            }
            let b = block_expansion(j, &second);
            for (ri, ci) in &a {
                for (rj, cj) in &b {
                    let c = ci * cj;
                    if !c.is_zero() {
                        out.add_component(*ri, *rj, f.scale(&c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Value of the multilinear map at a point.
    pub fn evaluate(&self, x: &[Rational], vectors: &[RatVec]) -> Result<Rational> {
        if vectors.len() != self.p + self.q {
            return Err(Error::Invalid(format!(
                "{} vectors for bidegree ({}, {})",
                vectors.len(),
                self.p,
                self.q
            )));
        }
        let positions: Vec<usize> = (1..=vectors.len()).collect();
        let c = self.contract(vectors, &positions)?;
        Ok(c.coefficient(&[], &[]).evaluate(x))
    }

    /// `F^*α` along `F: R^{r'} -> R^r`.
    pub fn pullback(&self, f: &IntegralAffineMap) -> Result<Superform> {
        if f.target_dim() != self.ambient {
            return Err(Error::AmbientMismatch {
                expected: f.target_dim(),
                found: self.ambient,
            });
        }
        let src = f.source_dim();
        assert!(src <= MAX_AMBIENT, "ambient dimension above {MAX_AMBIENT}");
        let a = f.rational_rows();
        let mut minors: HashMap<Mask, Vec<(Mask, Rational)>> = HashMap::new();
        let mut expand = |m: Mask| -> Vec<(Mask, Rational)> {
            minors
                .entry(m)
                .or_insert_with(|| {
                    let rows = indices_of(m);
                    combinations(src, rows.len())
                        .into_iter()
                        .filter_map(|cols| {
                            let sub: Vec<RatVec> = rows
                                .iter()
                                .map(|&r| cols.iter().map(|&c| a[r][c].clone()).collect())
                                .collect();
                            let d = linalg::det(sub);
                            (!d.is_zero()).then(|| (mask_of(&cols), d))
                        })
                        .collect()
                })
                .clone()
        };
        let mut out = Superform::zero(src, self.p, self.q);
        for (&(i, j), g) in &self.terms {
            let h = g.compose_affine(&a, f.translate(), src);
            if h.is_zero() {
                continue;
            }
            let ei = expand(i);
            let ej = expand(j);
            for (ki, di) in &ei {
                for (kj, dj) in &ej {
                    out.add_component(*ki, *kj, h.scale(&(di * dj)));
                }
            }
        }
        Ok(out)
    }
}

/// Laplace expansion of one determinant block along the inserted columns.
/// Returns the remaining index set and the scalar for each choice of rows.
fn block_expansion(set: Mask, slots: &[(usize, &RatVec)]) -> Vec<(Mask, Rational)> {
    let idx = indices_of(set);
    if slots.is_empty() {
        return vec![(set, Rational::one())];
    }
    let col_sum: usize = slots.iter().map(|(c, _)| *c).sum();
    let mut out = Vec::new();
    for rows in combinations(idx.len(), slots.len()) {
        let m: Vec<RatVec> = rows
            .iter()
            .map(|&r| slots.iter().map(|(_, v)| v[idx[r]].clone()).collect())
            .collect();
        let d = linalg::det(m);
        if d.is_zero() {
            continue;
        }
        let row_sum: usize = rows.iter().map(|r| r + 1).sum();
        let d = if (row_sum + col_sum) % 2 == 1 { -d } else { d };
        let removed = rows.iter().fold(0, |m, &r| m | (1 << idx[r]));
        out.push((set & !removed, d));
    }
    out
}

impl Neg for Superform {
    type Output = Superform;
    fn neg(self) -> Superform {
        self.map_coefficients(|f| -f.clone())
    }
}

/// # Panics
/// On ambient or bidegree mismatch; see [`Superform::checked_add`].
impl Add for &Superform {
    type Output = Superform;
    fn add(self, rhs: &Superform) -> Superform {
        self.checked_add(rhs).expect("superform sum")
    }
}

/// # Panics
/// On ambient or bidegree mismatch; see [`Superform::checked_sub`].
impl Sub for &Superform {
    type Output = Superform;
    fn sub(self, rhs: &Superform) -> Superform {
        self.checked_sub(rhs).expect("superform difference")
    }
}

impl fmt::Display for Superform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, j, c)) in self.components().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for a in i {
                write!(f, " d'x{}", a + 1)?;
            }
            for b in j {
                write!(f, " d''x{}", b + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Superform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Superform[r={}, ({}, {})]({self})", self.ambient, self.p, self.q)
    }
}
