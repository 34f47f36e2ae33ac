use std::fmt;

use num_traits::{One, Zero};

use super::{check_window, WeightedComplex};
use crate::error::{Error, Result};
use crate::integrate::{integrate_complex, integrate_polytope};
use crate::num::Rational;
use crate::polyhedra::Polyhedron;
use crate::superform::Superform;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    DPrime,
    DSecond,
}

impl Op {
    fn apply(self, a: &Superform) -> Superform {
        match self {
            Op::DPrime => a.d_prime(),
            Op::DSecond => a.d_second(),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::DPrime => write!(f, "d'"),
            Op::DSecond => write!(f, "d''"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurrentKind {
    /// `δ_{(C,m)}(η) = ∫_{(C,m)} η`.
    Dirac(WeightedComplex),
    /// `[ω](η) = ∫ ω ∧ η`.
    Embedded(Superform),
}

/// `o_1(o_2(...o_k(T_0)))` for `ops = [o_1, ..., o_k]`, where
/// `(o T)(η) = (-1)^{deg T + 1} T(o η)` and `deg T` is the total degree of
/// the forms `T` accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Current {
    pub kind: CurrentKind,
    pub ops: Vec<Op>,
}

impl Current {
    pub fn dirac(c: WeightedComplex) -> Current {
        Current {
            kind: CurrentKind::Dirac(c),
            ops: Vec::new(),
        }
    }

    pub fn embedded(omega: Superform) -> Current {
        Current {
            kind: CurrentKind::Embedded(omega),
            ops: Vec::new(),
        }
    }

    /// `o(self)`.
    pub fn apply(mut self, op: Op) -> Current {
        self.ops.insert(0, op);
        self
    }

    pub fn ambient_dim(&self) -> usize {
        match &self.kind {
            CurrentKind::Dirac(c) => c.ambient_dim(),
            CurrentKind::Embedded(w) => w.ambient_dim(),
        }
    }

    fn base_bidegree(&self) -> (usize, usize) {
        match &self.kind {
            CurrentKind::Dirac(c) => (c.dim(), c.dim()),
            CurrentKind::Embedded(w) => {
                let r = w.ambient_dim();
                let (p, q) = w.bidegree();
                (r - p, r - q)
            }
        }
    }

    /// Bidegree of the forms the current accepts, `None` if negative.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let (mut p, mut q) = self.base_bidegree();
        for op in &self.ops {
            match op {
                Op::DPrime => p = p.checked_sub(1)?,
                Op::DSecond => q = q.checked_sub(1)?,
            }
        }
        Some((p, q))
    }
}

/// `T(a)`, integrating over `window` (a full-dimensional polytope).
pub fn current_eval(t: &Current, a: &Superform, window: &Polyhedron) -> Result<Rational> {
    if a.ambient_dim() != t.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: t.ambient_dim(),
            found: a.ambient_dim(),
        });
    }
    check_window(t.ambient_dim(), window)?;
    let (p, q) = t
        .bidegree()
        .ok_or_else(|| Error::Dimension("operator stack lowers the degree below zero".into()))?;
    let (ap, aq) = a.bidegree();
    if (ap, aq) != (p, q) {
        return Err(Error::Bidegree(p, q, ap, aq));
    }
    // The current o_i is applied to accepts degree deg_i; it is o_{i+1}(...) of the base.
    let (mut dp, mut dq) = (p, q);
    let mut sign = Rational::one();
    let mut form = a.clone();
    for op in &t.ops {
        match op {
            Op::DPrime => dp += 1,
            Op::DSecond => dq += 1,
        }
        if (dp + dq) % 2 == 0 {
            sign = -sign;
        }
        form = op.apply(&form);
    }
    if form.is_zero() {
        return Ok(Rational::zero());
    }
    let value = match &t.kind {
        CurrentKind::Dirac(c) => integrate_complex(&c.truncate(window)?, &form)?,
        CurrentKind::Embedded(w) => integrate_polytope(window, &w.wedge(&form)?)?,
    };
    Ok(sign * value)
}
