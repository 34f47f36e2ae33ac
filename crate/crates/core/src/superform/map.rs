use crate::lattice::IntMatrix;
use crate::num::{to_rat_vec, RatVec, Rational};

/// `x -> A x + b` from `R^{r'}` to `R^r`, `A` an integer `r x r'` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralAffineMap {
    linear: IntMatrix,
    translate: RatVec,
}

impl IntegralAffineMap {
    pub fn new(linear: IntMatrix, translate: RatVec) -> IntegralAffineMap {
        assert_eq!(linear.rows(), translate.len(), "translation has wrong length");
        IntegralAffineMap { linear, translate }
    }

    pub fn linear_map(linear: IntMatrix) -> IntegralAffineMap {
        let t = vec![Rational::from_integer(0.into()); linear.rows()];
        IntegralAffineMap::new(linear, t)
    }

    pub fn identity(r: usize) -> IntegralAffineMap {
        IntegralAffineMap::linear_map(IntMatrix::identity(r))
    }

    pub fn linear(&self) -> &IntMatrix {
        &self.linear
    }

    pub fn translate(&self) -> &[Rational] {
        &self.translate
    }

    pub fn source_dim(&self) -> usize {
        self.linear.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.linear.rows()
    }

    pub fn apply(&self, x: &[Rational]) -> RatVec {
        self.linear
            .mul_rat_vec(x)
            .into_iter()
            .zip(&self.translate)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &IntegralAffineMap) -> IntegralAffineMap {
        assert_eq!(self.source_dim(), inner.target_dim(), "maps do not compose");
        IntegralAffineMap::new(self.linear.mul(&inner.linear), self.apply(&inner.translate))
    }

    pub(crate) fn rational_rows(&self) -> Vec<RatVec> {
        (0..self.linear.rows()).map(|i| to_rat_vec(self.linear.row(i))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_vec;

    #[test]
    fn compose_applies_inner_first() {
        let f = IntegralAffineMap::new(IntMatrix::from_i64(&[&[1, 1]]), rat_vec(&[1]));
        let g = IntegralAffineMap::new(IntMatrix::from_i64(&[&[2], &[0]]), rat_vec(&[0, 3]));
        let h = g.compose(&f);
        let x = rat_vec(&[1, 2]);
        assert_eq!(h.apply(&x), g.apply(&f.apply(&x)));
        assert_eq!(h.apply(&x), rat_vec(&[8, 3]));
    }
}
