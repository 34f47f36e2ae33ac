//! Tropical hypersurfaces: the corner locus of a tropical polynomial,
//! weighted by lattice lengths of the dual edges of the Newton subdivision.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::cycle::WeightedComplex;
use crate::error::{Error, Result};
use crate::num::{dot_int_rat, primitive, Int, IntVec, Rational};
use crate::polyhedra::{Halfspace, Polyhedron};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    #[default]
    Min,
    Max,
}

/// `min_m (c_m + <m, x>)` (or `max`), with distinct exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalPolynomial {
    ambient: usize,
    terms: Vec<(IntVec, Rational)>,
    convention: Convention,
}

impl TropicalPolynomial {
    pub fn new(ambient: usize, terms: Vec<(IntVec, Rational)>, convention: Convention) -> Result<TropicalPolynomial> {
        if terms.len() < 2 {
            return Err(Error::Invalid("a tropical polynomial needs at least two terms".into()));
        }
        let mut seen = BTreeSet::new();
        for (m, _) in &terms {
            if m.len() != ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    found: m.len(),
                });
            }
            if !seen.insert(m.clone()) {
                return Err(Error::Invalid(format!("duplicate exponent {m:?}")));
            }
        }
        Ok(TropicalPolynomial {
            ambient,
            terms,
            convention,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn terms(&self) -> &[(IntVec, Rational)] {
        &self.terms
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Value of the tropical polynomial at `x`.
    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        let values = self.terms.iter().map(|(m, c)| c + dot_int_rat(m, x));
        match self.convention {
            Convention::Min => values.min(),
            Convention::Max => values.max(),
        }
        .expect("at least two terms")
    }

    /// Exponents attaining the optimum at `x`.
    pub fn optimal_terms(&self, x: &[Rational]) -> Vec<&IntVec> {
        let best = self.evaluate(x);
        self.terms
            .iter()
            .filter(|(m, c)| c + dot_int_rat(m, x) == best)
            .map(|(m, _)| m)
            .collect()
    }

    /// Closed region where term `k` is optimal.
    fn region(&self, k: usize) -> Option<Polyhedron> {
        let (mk, ck) = &self.terms[k];
        let hs: Vec<Halfspace> = self
            .terms
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, (mj, cj))| {
                let u: IntVec = mk.iter().zip(mj).map(|(a, b)| a - b).collect();
                match self.convention {
                    // c_k + <m_k,x> <= c_j + <m_j,x>
                    Convention::Min => Halfspace::new(u, cj - ck),
                    Convention::Max => Halfspace::new(u.iter().map(|x| -x).collect(), ck - cj),
                }
            })
            .collect();
        Polyhedron::from_halfspaces(self.ambient, &hs)
    }
}

/// Lattice length of the convex hull of collinear integer points.
fn lattice_length(points: &[&IntVec]) -> Result<Int> {
    let p0 = points[0];
    let far = points
        .iter()
        .find(|p| *p != &p0)
        .ok_or_else(|| Error::Invalid("a corner needs two optimal terms".into()))?;
    let d = primitive(&far.iter().zip(p0).map(|(a, b)| a - b).collect::<Vec<_>>());
    let k = d.iter().position(|x| !x.is_zero()).expect("primitive vector is nonzero");
    let mut lo = Int::zero();
    let mut hi = Int::zero();
    for p in points {
        let diff: IntVec = p.iter().zip(p0).map(|(a, b)| a - b).collect();
        let t = &diff[k] / &d[k];
        if diff.iter().zip(&d).any(|(x, y)| *x != y * &t) {
            return Err(Error::Invalid("optimal exponents on a corner are not collinear".into()));
        }
        lo = lo.min(t.clone());
        hi = hi.max(t);
    }
    Ok(hi - lo)
}

/// The tropical hypersurface: the `(r-1)`-cells where the optimum is attained
/// at least twice, each weighted by the lattice length of its dual edge.
pub fn corner_locus(p: &TropicalPolynomial) -> Result<WeightedComplex> {
    let r = p.ambient;
    if r == 0 {
        return Err(Error::Dimension("ambient dimension must be positive".into()));
    }
    let regions: Vec<Polyhedron> = (0..p.terms.len())
        .filter_map(|k| p.region(k))
        .filter(|reg| reg.dim() == r)
        .collect();
    let mut cells = BTreeSet::new();
    for (a, ra) in regions.iter().enumerate() {
        for rb in &regions[a + 1..] {
            if let Some(x) = ra.intersect(rb) {
                if x.dim() + 1 == r {
                    cells.insert(x);
                }
            }
        }
    }
    let mut weighted = Vec::with_capacity(cells.len());
    for cell in cells {
        let x = cell.relative_interior_point();
        let m = lattice_length(&p.optimal_terms(&x))?;
        weighted.push((cell, m));
    }
    WeightedComplex::new(r, r - 1, weighted)
}
