use std::collections::BTreeMap;

use num_traits::Zero;

use super::{check_window, WeightedComplex};
use crate::error::{Error, Result};
use crate::integrate::{integrate_complex, integrate_polytope};
use crate::lattice::{lattice_index, LatticeIndex};
use crate::num::{rat_int, Int, Rational};
use crate::polyhedra::{hyperplanes_of, split_by_hyperplanes, Polyhedron};
use crate::superform::{IntegralAffineMap, Superform};

/// `F_*(C, m)`: images of the `n`-cells that stay `n`-dimensional, subdivided
/// by the arrangement of all their facet and hull hyperplanes, each piece `P`
/// weighted by `Σ_{ν' : P ⊆ F(ν')} [N_{F(ν')} : F(N_{ν'})] m_{ν'}`.
pub fn pushforward(f: &IntegralAffineMap, c: &WeightedComplex) -> Result<WeightedComplex> {
    if f.source_dim() != c.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: f.source_dim(),
            found: c.ambient_dim(),
        });
    }
    let n = c.dim();
    let mut images: Vec<(Polyhedron, Int)> = Vec::new();
    for (cell, m) in c.weighted_cells() {
        if m.is_zero() {
            continue;
        }
        let image = cell.image(f);
        if image.dim() < n {
            continue;
        }
        let mapped = cell.lattice().image(f.linear());
        let index = match lattice_index(&mapped, image.lattice())? {
            LatticeIndex::Finite(k) => k,
            LatticeIndex::Infinite => unreachable!("image has full rank"),
        };
        images.push((image, index * m));
    }
    let hyperplanes = hyperplanes_of(images.iter().map(|(p, _)| p));
    let mut weights: BTreeMap<Polyhedron, Int> = BTreeMap::new();
    for (image, w) in &images {
        for piece in split_by_hyperplanes(image, &hyperplanes) {
            *weights.entry(piece).or_insert_with(Int::zero) += w;
        }
    }
    weights.retain(|_, m| !m.is_zero());
    WeightedComplex::new(f.target_dim(), n, weights.into_iter().collect())
}

/// `(∫_{F_*(C,m) ∩ W} α, ∫_{(C,m) ∩ F^{-1}(W)} F^*α)`.
pub fn projection_check(
    f: &IntegralAffineMap,
    c: &WeightedComplex,
    a: &Superform,
    window: &Polyhedron,
) -> Result<(Rational, Rational)> {
    check_window(f.target_dim(), window)?;
    let left = integrate_complex(&pushforward(f, c)?.truncate(window)?, a)?;
    let preimage = window.preimage(f);
    let pulled = a.pullback(f)?;
    let n = c.dim();
    let mut right = Rational::zero();
    for (cell, m) in c.weighted_cells() {
        if m.is_zero() || cell.image(f).dim() < n {
            continue;
        }
        let Some(piece) = preimage.as_ref().and_then(|pre| cell.intersect(pre)) else {
            continue;
        };
        if piece.dim() < n {
            continue;
        }
        if !piece.is_bounded() {
            return Err(Error::Truncation(
                "a cell meets the preimage of the window in an unbounded set".into(),
            ));
        }
        right += rat_int(m) * integrate_polytope(&piece, &pulled)?;
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::check_balancing;
    use crate::lattice::IntMatrix;
    use crate::num::{int, int_vec, rat, rat_vec};
    use crate::superform::Polynomial;

    fn seg(a: i64, b: i64) -> Polyhedron {
        Polyhedron::cuboid(&rat_vec(&[a]), &rat_vec(&[b])).unwrap()
    }

    fn segment(from: &[i64], to: &[i64]) -> Polyhedron {
        Polyhedron::from_generators(from.len(), &[rat_vec(from), rat_vec(to)], &[], &[]).unwrap()
    }

    #[test]
    fn doubling_map() {
        let f = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[2]]));
        let c = WeightedComplex::new(1, 1, vec![(seg(0, 1), int(1))]).unwrap();
        let img = pushforward(&f, &c).unwrap();
        let expected = WeightedComplex::new(1, 1, vec![(seg(0, 2), int(2))]).unwrap();
        assert_eq!(img, expected);
        let a = Superform::term(1, &[0], &[0], Polynomial::one(1));
        let (l, r) = projection_check(&f, &c, &a, &seg(0, 2)).unwrap();
        assert_eq!((l, r), (rat(4, 1), rat(4, 1)));
    }

    #[test]
    fn projections_of_segments() {
        let first = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[1, 0]]));
        let second = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[0, 1]]));
        let diag = WeightedComplex::new(2, 1, vec![(segment(&[0, 0], &[1, 1]), int(1))]).unwrap();
        assert_eq!(
            pushforward(&first, &diag).unwrap(),
            WeightedComplex::new(1, 1, vec![(seg(0, 1), int(1))]).unwrap()
        );
        let steep = WeightedComplex::new(2, 1, vec![(segment(&[0, 0], &[1, 2]), int(1))]).unwrap();
        assert_eq!(
            pushforward(&first, &steep).unwrap(),
            WeightedComplex::new(1, 1, vec![(seg(0, 1), int(1))]).unwrap()
        );
        // F(Z(1,2)) = 2Z inside Z: index 2
        assert_eq!(
            pushforward(&second, &steep).unwrap(),
            WeightedComplex::new(1, 1, vec![(seg(0, 2), int(2))]).unwrap()
        );
        let a = Superform::term(1, &[0], &[0], Polynomial::var(1, 0));
        let (l, r) = projection_check(&first, &diag, &a, &seg(-1, 2)).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, rat(1, 2));
    }

    #[test]
    fn collapsed_cells_are_dropped() {
        let f = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[0, 1]]));
        let c = WeightedComplex::new(2, 1, vec![(segment(&[0, 0], &[1, 0]), int(1))]).unwrap();
        assert!(pushforward(&f, &c).unwrap().is_zero());
    }

    #[test]
    fn pushforward_of_tropical_line_is_balanced() {
        let ray = |d: &[i64]| Polyhedron::from_generators(2, &[rat_vec(&[0, 0])], &[int_vec(d)], &[]).unwrap();
        let line = WeightedComplex::new(2, 1, vec![(ray(&[1, 0]), int(1)), (ray(&[0, 1]), int(1)), (ray(&[-1, -1]), int(1))]).unwrap();
        let f = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[2, 1], &[0, 3]]));
        let img = pushforward(&f, &line).unwrap();
        assert!(check_balancing(&img).unwrap().is_empty());
        let g = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[1, 1]]));
        let img = pushforward(&g, &line).unwrap();
        assert!(check_balancing(&img).unwrap().is_empty());
    }

    #[test]
    fn degenerate_window_is_rejected() {
        let f = IntegralAffineMap::identity(1);
        let c = WeightedComplex::new(1, 1, vec![(seg(0, 1), int(1))]).unwrap();
        let a = Superform::term(1, &[0], &[0], Polynomial::one(1));
        let point = Polyhedron::point(&rat_vec(&[0]));
        assert!(matches!(projection_check(&f, &c, &a, &point), Err(Error::Truncation(_))));
    }
}
