//! Weighted complexes and tropical cycles: balancing, the closedness
//! certificate of the Dirac current, supercurrents, and push-forward.

mod current;
mod pushforward;

pub use current::{current_eval, Current, CurrentKind, Op};
pub use pushforward::{projection_check, pushforward};

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{is_zero_vec, to_rat_vec, Int, IntVec, RatVec, Rational};
use crate::polyhedra::{hyperplanes_of, split_by_hyperplanes, validate_complex, Complex, Polyhedron, Violation};
use crate::superform::Superform;

/// A complex of pure dimension `n` with an integer weight on every `n`-cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedComplex {
    ambient: usize,
    dim: usize,
    weights: BTreeMap<Polyhedron, Int>,
}

impl WeightedComplex {
    /// Cells must all have dimension `dim`; repeated cells are rejected.
    pub fn new(ambient: usize, dim: usize, cells: Vec<(Polyhedron, Int)>) -> Result<WeightedComplex> {
        if dim > ambient {
            return Err(Error::Dimension(format!("dimension {dim} in ambient {ambient}")));
        }
        let mut weights = BTreeMap::new();
        for (cell, m) in cells {
            if cell.ambient_dim() != ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    found: cell.ambient_dim(),
                });
            }
            if cell.dim() != dim {
                return Err(Error::Dimension(format!(
                    "cell of dimension {} in a complex of pure dimension {dim}",
                    cell.dim()
                )));
            }
            if weights.insert(cell, m).is_some() {
                return Err(Error::Invalid("repeated maximal cell".into()));
            }
        }
        Ok(WeightedComplex { ambient, dim, weights })
    }

    /// The zero cycle.
    pub fn zero(ambient: usize, dim: usize) -> WeightedComplex {
        WeightedComplex {
            ambient,
            dim,
            weights: BTreeMap::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Maximal cells with their weights, in canonical order.
    pub fn weighted_cells(&self) -> impl Iterator<Item = (&Polyhedron, &Int)> {
        self.weights.iter()
    }

    pub fn num_cells(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, cell: &Polyhedron) -> Option<&Int> {
        self.weights.get(cell)
    }

    pub fn with_weight(&self, cell: &Polyhedron, m: Int) -> Result<WeightedComplex> {
        if !self.weights.contains_key(cell) {
            return Err(Error::Invalid("not a maximal cell of the complex".into()));
        }
        let mut out = self.clone();
        out.weights.insert(cell.clone(), m);
        Ok(out)
    }

    /// The underlying complex: maximal cells and all their faces.
    pub fn complex(&self) -> Complex {
        Complex::from_maximal(self.ambient, self.weights.keys().cloned().collect())
    }

    /// The subcomplex of cells with nonzero weight.
    pub fn support(&self) -> WeightedComplex {
        WeightedComplex {
            ambient: self.ambient,
            dim: self.dim,
            weights: self
                .weights
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(c, m)| (c.clone(), m.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.weights.values().all(Zero::is_zero)
    }

    pub fn is_bounded(&self) -> bool {
        self.weights.keys().all(Polyhedron::is_bounded)
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate_complex(&self.complex())
    }

    /// `(C, m)` intersected with a full-dimensional polytope; pieces of
    /// dimension below `n` are dropped.
    pub fn truncate(&self, window: &Polyhedron) -> Result<WeightedComplex> {
        check_window(self.ambient, window)?;
        let mut weights: BTreeMap<Polyhedron, Int> = BTreeMap::new();
        for (cell, m) in &self.weights {
            if let Some(piece) = cell.intersect(window) {
                if piece.dim() == self.dim {
                    *weights.entry(piece).or_insert_with(Int::zero) += m;
                }
            }
        }
        Ok(WeightedComplex {
            ambient: self.ambient,
            dim: self.dim,
            weights,
        })
    }

    /// The `(n-1)`-faces with `e_ρ = Σ_{σ ⊃ ρ} m_σ ω_{ρ,σ}`.
    pub fn codim_one_excess(&self) -> Result<BTreeMap<Polyhedron, IntVec>> {
        let mut out: BTreeMap<Polyhedron, IntVec> = BTreeMap::new();
        if self.dim == 0 {
            return Ok(out);
        }
        for (sigma, m) in &self.weights {
            for rho in sigma.facet_faces() {
                let omega = sigma.outward_vector(rho)?;
                let e = out
                    .entry(rho.clone())
                    .or_insert_with(|| vec![Int::zero(); self.ambient]);
                for (x, w) in e.iter_mut().zip(&omega) {
                    *x += m * w;
                }
            }
        }
        Ok(out)
    }

    /// Same weighted set after a common refinement (zero weights ignored).
    pub fn equivalent(&self, other: &WeightedComplex) -> bool {
        if self.ambient != other.ambient {
            return false;
        }
        let a = self.support();
        let b = other.support();
        if a.weights.is_empty() || b.weights.is_empty() {
            return a.weights.is_empty() && b.weights.is_empty();
        }
        if self.dim != other.dim {
            return false;
        }
        let hyperplanes = hyperplanes_of(a.weights.keys().chain(b.weights.keys()));
        a.refined_weights(&hyperplanes) == b.refined_weights(&hyperplanes)
    }

    fn refined_weights(&self, hyperplanes: &[crate::polyhedra::Halfspace]) -> BTreeMap<Polyhedron, Int> {
        let mut out: BTreeMap<Polyhedron, Int> = BTreeMap::new();
        for (cell, m) in &self.weights {
            for piece in split_by_hyperplanes(cell, hyperplanes) {
                *out.entry(piece).or_insert_with(Int::zero) += m;
            }
        }
        out.retain(|_, m| !m.is_zero());
        out
    }
}

pub(crate) fn check_window(ambient: usize, window: &Polyhedron) -> Result<()> {
    if window.ambient_dim() != ambient {
        return Err(Error::AmbientMismatch {
            expected: ambient,
            found: window.ambient_dim(),
        });
    }
    if !window.is_bounded() || window.dim() != ambient {
        return Err(Error::Truncation("window must be a full-dimensional polytope".into()));
    }
    Ok(())
}

/// A codimension-one face where balancing fails, with `e_ρ` reduced modulo `N_ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancingViolation {
    pub face: Polyhedron,
    pub excess: IntVec,
}

/// Faces `ρ` with `Σ_{σ ⊃ ρ} m_σ ω_{ρ,σ} ∉ N_ρ`.
pub fn check_balancing(c: &WeightedComplex) -> Result<Vec<BalancingViolation>> {
    Ok(c.codim_one_excess()?
        .into_iter()
        .filter_map(|(rho, e)| {
            let excess = rho.lattice().reduce(&e);
            (!is_zero_vec(&excess)).then_some(BalancingViolation { face: rho, excess })
        })
        .collect())
}

/// A face where the Dirac current fails to be `d'`-closed, with a test form.
///
/// `excess` is the component of `e_ρ` in the complement of `(N_ρ)_R`
/// (reduced row echelon representative). `form` is an `(n-1, n)`-form with
/// constant coefficients; `value` is the nonzero value of `<form; e_ρ>`
/// on a basis of `N_ρ` in both blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosednessWitness {
    pub face: Polyhedron,
    pub excess: RatVec,
    pub form: Superform,
    pub value: Rational,
}

/// Faces where `e_ρ` leaves the real span of `N_ρ`, each with a certificate.
pub fn closedness_witness(c: &WeightedComplex) -> Result<Vec<ClosednessWitness>> {
    let n = c.dim;
    let mut out = Vec::new();
    for (rho, e) in c.codim_one_excess()? {
        let span = rho.lattice().span_rref();
        let er = to_rat_vec(&e);
        let t = if span.rows.is_empty() { er.clone() } else { span.reduce(&er) };
        if is_zero_vec(&t) {
            continue;
        }
        let basis: Vec<RatVec> = rho.lattice().basis().to_rational_rows();
        let (form, value) = certificate(c.ambient, n, &basis, &er)?;
        debug_assert!(!value.is_zero());
        out.push(ClosednessWitness {
            face: rho,
            excess: t,
            form,
            value,
        });
    }
    Ok(out)
}

/// `α = (μ_1 ∧ ... ∧ μ_{n-1}) ⊗ (μ_1 ∧ ... ∧ μ_n)` with `μ_i(b_j) = δ_ij`,
/// `μ_i(e) = 0` for `i < n`, `μ_n(b_j) = 0`, `μ_n(e) = 1`.
fn certificate(ambient: usize, n: usize, basis: &[RatVec], e: &[Rational]) -> Result<(Superform, Rational)> {
    let mut rows: Vec<RatVec> = basis.to_vec();
    rows.push(e.to_vec());
    let mus = dual_functionals(&rows);
    let one = Rational::from_integer(1.into());
    let linear = |mu: &RatVec, second: bool| -> Superform {
        let mut s = Superform::zero(ambient, usize::from(!second), usize::from(second));
        for (i, c) in mu.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let g = if second { Superform::dsecond_x(ambient, i) } else { Superform::dprime_x(ambient, i) };
            s = &s + &g.scale(c);
        }
        s
    };
    let mut first = Superform::constant(ambient, one.clone());
    for mu in &mus[..n - 1] {
        first = first.wedge(&linear(mu, false))?;
    }
    let mut second = Superform::constant(ambient, one);
    for mu in &mus {
        second = second.wedge(&linear(mu, true))?;
    }
    let form = first.wedge(&second)?;
    let contracted = form.contract(&[e.to_vec()], &[2 * n - 1])?;
    let mut vectors = basis.to_vec();
    vectors.extend(basis.iter().cloned());
    let value = contracted.evaluate(&vec![Rational::zero(); ambient], &vectors)?;
    Ok((form, value))
}

/// Functionals `μ_i` with `μ_i(rows_j) = δ_ij` for linearly independent rows.
fn dual_functionals(rows: &[RatVec]) -> Vec<RatVec> {
    let k = rows.len();
    let gram: Vec<RatVec> = rows
        .iter()
        .map(|a| rows.iter().map(|b| crate::num::dot_rat(a, b)).collect())
        .collect();
    let inv = linalg::inverse(&gram).expect("rows are linearly independent");
    (0..k)
        .map(|i| {
            let mut mu = vec![Rational::zero(); rows[0].len()];
            for (j, row) in rows.iter().enumerate() {
                for (m, x) in mu.iter_mut().zip(row) {
                    *m += &inv[j][i] * x;
                }
            }
            mu
        })
        .collect()
}
