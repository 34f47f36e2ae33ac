//! Exact integration of superforms over polytopes and weighted complexes,
//! boundary integrals, and the Stokes and Green residuals.
//!
//! An `(n,n)`-form on an `n`-dimensional polytope `σ` is integrated in the
//! integral chart of `σ` (base point plus a `Z`-basis of `N_σ`): the pulled
//! back coefficient `α_{LL}` times `(-1)^{n(n-1)/2}` is integrated against
//! Lebesgue measure. The result does not depend on the chosen basis.

use num_traits::{One, Zero};

use crate::cycle::WeightedComplex;
use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{factorial, rat_int, RatVec, Rational};
use crate::polyhedra::{triangulate, Polyhedron};
use crate::superform::{Polynomial, Superform};

/// Either a single polytope or a weighted complex.
#[derive(Clone, Copy, Debug)]
pub enum Domain<'a> {
    Cell(&'a Polyhedron),
    Cycle(&'a WeightedComplex),
}

impl<'a> From<&'a Polyhedron> for Domain<'a> {
    fn from(p: &'a Polyhedron) -> Self {
        Domain::Cell(p)
    }
}

impl<'a> From<&'a WeightedComplex> for Domain<'a> {
    fn from(c: &'a WeightedComplex) -> Self {
        Domain::Cycle(c)
    }
}

impl Domain<'_> {
    pub fn dim(&self) -> usize {
        match self {
            Domain::Cell(p) => p.dim(),
            Domain::Cycle(c) => c.dim(),
        }
    }

    pub fn integrate(&self, a: &Superform) -> Result<Rational> {
        match self {
            Domain::Cell(p) => integrate_polytope(p, a),
            Domain::Cycle(c) => integrate_complex(c, a),
        }
    }

    pub fn integrate_boundary(&self, eta: &Superform) -> Result<Rational> {
        match self {
            Domain::Cell(p) => integrate_boundary(p, eta),
            Domain::Cycle(c) => integrate_complex_boundary(c, eta),
        }
    }
}

fn sign_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `∫_Δ λ^a dλ = Π a_k! / (n + Σ a_k)!` over the standard simplex in `R^n`.
fn standard_simplex_moment(exp: &[u32]) -> Rational {
    let n = exp.len();
    let total: usize = exp.iter().map(|&a| a as usize).sum();
    let num = exp.iter().fold(crate::num::int(1), |acc, &a| acc * factorial(a as usize));
    Rational::new(num, factorial(n + total))
}

/// `∫_S g` over the simplex with the given vertices in `R^n` (Lebesgue measure).
pub fn integrate_over_simplex(g: &Polynomial, vertices: &[RatVec]) -> Rational {
    let n = g.vars();
    assert_eq!(vertices.len(), n + 1, "simplex needs n + 1 vertices");
    if n == 0 {
        return g.evaluate(&[]);
    }
    let t0 = &vertices[0];
    // columns: edge vectors t_k - t_0
    let edges: Vec<RatVec> = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(t0).map(|(a, b)| a - b).collect())
        .collect();
    let jac = linalg::det(edges.clone());
    if jac.is_zero() {
        return Rational::zero();
    }
    let a: Vec<RatVec> = (0..n).map(|i| edges.iter().map(|e| e[i].clone()).collect()).collect();
    let h = g.compose_affine(&a, t0, n);
    let mut total = Rational::zero();
    for (e, c) in h.terms() {
        total += c * standard_simplex_moment(e);
    }
    let jac = if jac < Rational::zero() { -jac } else { jac };
    total * jac
}

/// `∫_σ α` for an `(n,n)`-form on a bounded `n`-dimensional polyhedron.
pub fn integrate_polytope(sigma: &Polyhedron, a: &Superform) -> Result<Rational> {
    if a.ambient_dim() != sigma.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: sigma.ambient_dim(),
            found: a.ambient_dim(),
        });
    }
    let n = sigma.dim();
    let (p, q) = a.bidegree();
    if (p, q) != (n, n) {
        return Err(Error::Bidegree(n, n, p, q));
    }
    if !sigma.is_bounded() {
        return Err(Error::Unbounded);
    }
    if a.is_zero() {
        return Ok(Rational::zero());
    }
    if n == 0 {
        return Ok(a.coefficient(&[], &[]).evaluate(&sigma.vertices()[0]));
    }
    let chart = sigma.chart();
    let pulled = a.pullback(&chart)?;
    let all: Vec<usize> = (0..n).collect();
    let g = pulled.coefficient(&all, &all);
    if g.is_zero() {
        return Ok(Rational::zero());
    }
    let base = &sigma.vertices()[0];
    let mut total = Rational::zero();
    for s in triangulate(sigma)? {
        let coords: Vec<RatVec> = s
            .vertices
            .iter()
            .map(|v| {
                let d: RatVec = v.iter().zip(base).map(|(x, y)| x - y).collect();
                sigma.lattice().span_coordinates(&d).expect("vertex lies in the affine hull")
            })
            .collect();
        total += integrate_over_simplex(&g, &coords);
    }
    Ok(sign_pow(n * (n - 1) / 2) * total)
}

/// Slot used for the outward vector, and the extra sign, for a boundary form.
fn boundary_slot(n: usize, eta: &Superform) -> Result<(usize, Rational)> {
    let (p, q) = eta.bidegree();
    if n == 0 {
        return Err(Error::Dimension("a point has no boundary".into()));
    }
    if (p, q) == (n - 1, n) {
        Ok((2 * n - 1, Rational::one()))
    } else if (p, q) == (n, n - 1) {
        Ok((n, sign_pow(n)))
    } else {
        Err(Error::Bidegree(n - 1, n, p, q))
    }
}

/// `∫_{∂σ} η = Σ_ρ ∫_ρ <η; ω_{ρ,σ}>` for `η` of bidegree `(n-1,n)` or `(n,n-1)`.
///
/// For `(n-1,n)` the outward vector fills the last slot; for `(n,n-1)` it fills
/// the last `d'` slot and the sum carries the factor `(-1)^n`, which makes
/// both `∫ d'η = ∫_∂ η` and `∫ d''η = ∫_∂ η` hold.
pub fn integrate_boundary(sigma: &Polyhedron, eta: &Superform) -> Result<Rational> {
    if eta.ambient_dim() != sigma.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: sigma.ambient_dim(),
            found: eta.ambient_dim(),
        });
    }
    let n = sigma.dim();
    let (slot, sign) = boundary_slot(n, eta)?;
    if !sigma.is_bounded() {
        return Err(Error::Unbounded);
    }
    let mut total = Rational::zero();
    for rho in sigma.facet_faces() {
        let omega = sigma.outward_vector(rho)?;
        total += boundary_term(rho, eta, &crate::num::to_rat_vec(&omega), slot)?;
    }
    Ok(sign * total)
}

/// `∫_ρ <η; ω>` with `ω` in the given slot.
pub(crate) fn boundary_term(rho: &Polyhedron, eta: &Superform, omega: &[Rational], slot: usize) -> Result<Rational> {
    let c = eta.contract(&[omega.to_vec()], &[slot])?;
    integrate_polytope(rho, &c)
}

/// `∫_{(C,m)} α = Σ_σ m_σ ∫_σ α`.
pub fn integrate_complex(c: &WeightedComplex, a: &Superform) -> Result<Rational> {
    let mut total = Rational::zero();
    for (cell, m) in c.weighted_cells() {
        if m.is_zero() {
            continue;
        }
        total += rat_int(m) * integrate_polytope(cell, a)?;
    }
    Ok(total)
}

/// `∫_{∂(C,m)} η = Σ_σ m_σ ∫_{∂σ} η`.
pub fn integrate_complex_boundary(c: &WeightedComplex, eta: &Superform) -> Result<Rational> {
    let mut total = Rational::zero();
    for (cell, m) in c.weighted_cells() {
        if m.is_zero() {
            continue;
        }
        total += rat_int(m) * integrate_boundary(cell, eta)?;
    }
    Ok(total)
}

/// `(∫ d'η' - ∫_∂ η', ∫ d''η'' - ∫_∂ η'')`.
pub fn stokes_residual<'a>(
    domain: impl Into<Domain<'a>>,
    eta_prime: &Superform,
    eta_second: &Superform,
) -> Result<(Rational, Rational)> {
    let d = domain.into();
    let n = d.dim();
    if n == 0 {
        return Err(Error::Dimension("Stokes needs dimension at least 1".into()));
    }
    if eta_prime.bidegree() != (n - 1, n) {
        let (p, q) = eta_prime.bidegree();
        return Err(Error::Bidegree(n - 1, n, p, q));
    }
    if eta_second.bidegree() != (n, n - 1) {
        let (p, q) = eta_second.bidegree();
        return Err(Error::Bidegree(n, n - 1, p, q));
    }
    let first = d.integrate(&eta_prime.d_prime())? - d.integrate_boundary(eta_prime)?;
    let second = d.integrate(&eta_second.d_second())? - d.integrate_boundary(eta_second)?;
    Ok((first, second))
}

/// `∫_σ (α∧d'd''β - β∧d'd''α) - ∫_{∂σ} (α∧d''β - β∧d''α)` for symmetric
/// `α ∈ A^{p,p}`, `β ∈ A^{q,q}`, `p + q = n - 1`.
pub fn green_residual(sigma: &Polyhedron, alpha: &Superform, beta: &Superform) -> Result<Rational> {
    if !alpha.is_symmetric() || !beta.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = sigma.dim();
    let (p, _) = alpha.bidegree();
    let (q, _) = beta.bidegree();
    if n == 0 || p + q + 1 != n {
        return Err(Error::Dimension(format!(
            "bidegrees ({p},{p}) and ({q},{q}) on a {n}-dimensional polyhedron need p + q = n - 1"
        )));
    }
    let ddb = beta.d_second().d_prime();
    let dda = alpha.d_second().d_prime();
    let interior = alpha.wedge(&ddb)?.checked_sub(&beta.wedge(&dda)?)?;
    let boundary = alpha
        .wedge(&beta.d_second())?
        .checked_sub(&beta.wedge(&alpha.d_second())?)?;
    Ok(integrate_polytope(sigma, &interior)? - integrate_boundary(sigma, &boundary)?)
}
