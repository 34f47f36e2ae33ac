//! Push-forward with lattice-index weights and both sides of the projection formula.

use tropcalc::cycle::{projection_check, pushforward, WeightedComplex};
use tropcalc::lattice::IntMatrix;
use tropcalc::num::{format_vec, int, rat, rat_vec};
use tropcalc::polyhedra::Polyhedron;
use tropcalc::superform::{IntegralAffineMap, Polynomial, Superform};

fn main() {
    let double = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[2]]));
    let segment = WeightedComplex::new(1, 1, vec![(Polyhedron::cuboid(&[rat(0, 1)], &[rat(1, 1)]).unwrap(), int(1))]).unwrap();
    for (cell, m) in pushforward(&double, &segment).unwrap().weighted_cells() {
        println!("image {} to {} with weight {m}", format_vec(&cell.vertices()[0]), format_vec(&cell.vertices()[1]));
    }
    let a = Superform::term(1, &[0], &[0], Polynomial::one(1));
    let window = Polyhedron::cuboid(&[rat(0, 1)], &[rat(2, 1)]).unwrap();
    let (lhs, rhs) = projection_check(&double, &segment, &a, &window).unwrap();
    println!("∫ over F_*C = {lhs}, ∫ over C of F*a = {rhs}");

    let steep = Polyhedron::from_generators(2, &[rat_vec(&[0, 0]), rat_vec(&[1, 2])], &[], &[]).unwrap();
    let c = WeightedComplex::new(2, 1, vec![(steep, int(1))]).unwrap();
    let second = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[0, 1]]));
    for (cell, m) in pushforward(&second, &c).unwrap().weighted_cells() {
        println!("projection to the second coordinate: {} to {} with weight {m}", format_vec(&cell.vertices()[0]), format_vec(&cell.vertices()[1]));
    }
}
