//! Sublattices of `Z^r`: canonical bases, saturation, indices and the
//! outward lattice vector across a facet.

mod matrix;
mod normal_form;

pub use matrix::IntMatrix;
pub use normal_form::{hnf, snf};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Rref};
use crate::num::{dot_rat, floor_div, rat_int, Int, IntVec, Rational};

/// A sublattice of `Z^r`, stored by its Hermite normal form basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
}

/// `[sup : sub]`, infinite when `sub` has smaller rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(Int),
    Infinite,
}

impl Lattice {
    pub fn from_generators(ambient: usize, gens: &[IntVec]) -> Lattice {
        let (h, _) = hnf(&IntMatrix::from_rows(ambient, gens));
        let nonzero: Vec<IntVec> = (0..h.rows())
            .filter(|&i| !h.is_zero_row(i))
            .map(|i| h.row(i).to_vec())
            .collect();
        Lattice {
            ambient,
            basis: IntMatrix::from_rows(ambient, &nonzero),
        }
    }

    pub fn zero(ambient: usize) -> Lattice {
        Lattice::from_generators(ambient, &[])
    }

    pub fn full(ambient: usize) -> Lattice {
        Lattice {
            ambient,
            basis: IntMatrix::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// HNF basis, one row per basis vector.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<IntVec> {
        self.basis.row_vecs()
    }

    fn pivot(&self, i: usize) -> usize {
        self.basis
            .row(i)
            .iter()
            .position(|x| !x.is_zero())
            .expect("HNF basis rows are nonzero")
    }

    /// Integer coordinates of `v` in the HNF basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<IntVec> {
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let p = self.pivot(i);
            let piv = &self.basis[(i, p)];
            if !(&rest[p] % piv).is_zero() {
                return None;
            }
            let c = &rest[p] / piv;
            for (x, b) in rest.iter_mut().zip(self.basis.row(i)) {
                *x -= b * &c;
            }
            coords.push(c);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Rational coordinates of `v` in the HNF basis, if `v` is in the real span.
    pub fn span_coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        linalg::solve_in_span(&self.basis.to_rational_rows(), v)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn span_contains(&self, v: &[Rational]) -> bool {
        self.span_rref().contains(v)
    }

    pub fn span_rref(&self) -> Rref {
        Rref::new(self.basis.to_rational_rows())
    }

    /// Canonical representative of `v` modulo the lattice: subtracts basis
    /// rows so that each pivot coordinate lands in `[0, pivot)`.
    pub fn reduce(&self, v: &[Int]) -> IntVec {
        let mut v = v.to_vec();
        for i in 0..self.rank() {
            let p = self.pivot(i);
            let q = floor_div(&v[p], &self.basis[(i, p)]);
            if !q.is_zero() {
                for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                    *x -= b * &q;
                }
            }
        }
        v
    }

    /// `span_R(self) ∩ Z^r`.
    pub fn saturate(&self) -> Lattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let normals = integer_kernel(&self.basis);
        integer_kernel(normals.basis())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// Image under a linear map given by `m` (rows = target coordinates).
    pub fn image(&self, m: &IntMatrix) -> Lattice {
        let gens: Vec<IntVec> = self.basis_vecs().iter().map(|b| m.mul_vec(b)).collect();
        Lattice::from_generators(m.rows(), &gens)
    }
}

/// `{x in Z^c : m x = 0}` for an `r x c` matrix; always saturated.
pub fn integer_kernel(m: &IntMatrix) -> Lattice {
    let (h, u) = hnf(&m.transpose());
    let gens: Vec<IntVec> = (0..h.rows())
        .filter(|&i| h.is_zero_row(i))
        .map(|i| u.row(i).to_vec())
        .collect();
    Lattice::from_generators(m.cols(), &gens)
}

pub fn saturate(l: &Lattice) -> Lattice {
    l.saturate()
}

pub fn member(v: &[Int], l: &Lattice) -> bool {
    l.contains(v)
}

/// `[sup : sub]` as the product of the elementary divisors of `sub`
/// expressed in a basis of `sup`.
pub fn lattice_index(sub: &Lattice, sup: &Lattice) -> Result<LatticeIndex> {
    if sub.ambient != sup.ambient {
        return Err(Error::AmbientMismatch {
            expected: sup.ambient,
            found: sub.ambient,
        });
    }
    let rref = sup.span_rref();
    for b in sub.basis.to_rational_rows() {
        if !rref.contains(&b) {
            return Err(Error::NotInSpan);
        }
    }
    if sub.rank() < sup.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    let mut coords = Vec::with_capacity(sub.rank());
    for b in sub.basis_vecs() {
        coords.push(sup.coordinates(&b).ok_or(Error::NotSublattice)?);
    }
    let d = snf(&IntMatrix::from_rows(sup.rank(), &coords));
    Ok(LatticeIndex::Finite(d.iter().fold(Int::one(), |acc, x| acc * x)))
}

/// The lattice vector `ω` in `n_sigma` pointing out of a polyhedron across a
/// facet with direction lattice `n_rho`.
///
/// `inward` is any vector of `span(n_sigma)` pointing from the facet into the
/// polyhedron. The result satisfies `u(ω) = 1` for the unique primitive
/// `u` in the dual of `n_sigma` that vanishes on `n_rho` and is negative on
/// `inward`; it is reduced modulo `n_rho` with [`Lattice::reduce`].
pub fn primitive_outward(n_sigma: &Lattice, n_rho: &Lattice, inward: &[Rational]) -> Result<IntVec> {
    let k = n_sigma.rank();
    if k == 0 || n_rho.rank() + 1 != k {
        return Err(Error::NotAFacet(format!(
            "ranks {} and {} are not consecutive",
            n_rho.rank(),
            k
        )));
    }
    let mut coords = Vec::with_capacity(k - 1);
    for b in n_rho.basis_vecs() {
        coords.push(
            n_sigma
                .coordinates(&b)
                .ok_or_else(|| Error::NotAFacet("facet lattice not inside cell lattice".into()))?,
        );
    }
    let normal_lattice = integer_kernel(&IntMatrix::from_rows(k, &coords));
    let mut u = normal_lattice.basis_vecs().remove(0);
    let d = n_sigma
        .span_coordinates(inward)
        .ok_or_else(|| Error::NotAFacet("inward direction leaves the cell hull".into()))?;
    let ud = dot_rat(&u.iter().map(rat_int).collect::<Vec<_>>(), &d);
    if ud.is_zero() {
        return Err(Error::NotAFacet("inward direction is parallel to the facet".into()));
    }
    if ud.is_positive() {
        u.iter_mut().for_each(|x| *x = -x.clone());
    }
    // w with <u, w> = 1, from the HNF transform of the column u.
    let (h, t) = hnf(&IntMatrix::from_rows(1, &u.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>()));
    debug_assert!(h[(0, 0)].is_one());
    let w = t.row(0);
    let mut omega = vec![Int::zero(); n_sigma.ambient];
    for (c, b) in w.iter().zip(n_sigma.basis_vecs()) {
        for (o, x) in omega.iter_mut().zip(&b) {
            *o += c * x;
        }
    }
    Ok(n_rho.reduce(&omega))
}
