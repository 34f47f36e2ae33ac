//! Stokes' formula for both differentials on the unit square, exactly.

use tropcalc::integrate::{integrate_boundary, integrate_polytope, stokes_residual};
use tropcalc::num::rat;
use tropcalc::polyhedra::Polyhedron;
use tropcalc::superform::{Polynomial, Superform};

fn main() {
    let square = Polyhedron::cuboid(&[rat(0, 1), rat(0, 1)], &[rat(1, 1), rat(1, 1)]).unwrap();
    let g = Polynomial::from_terms(2, [(vec![2, 1], rat(1, 3)), (vec![0, 3], rat(-2, 1))]);
    let eta_prime = Superform::term(2, &[1], &[0, 1], g.clone());
    let eta_second = Superform::term(2, &[0, 1], &[0], g);

    println!("∫ d'η'  = {}", integrate_polytope(&square, &eta_prime.d_prime()).unwrap());
    println!("∫_∂ η'  = {}", integrate_boundary(&square, &eta_prime).unwrap());
    println!("∫ d''η'' = {}", integrate_polytope(&square, &eta_second.d_second()).unwrap());
    println!("∫_∂ η'' = {}", integrate_boundary(&square, &eta_second).unwrap());
    let (r1, r2) = stokes_residual(&square, &eta_prime, &eta_second).unwrap();
    println!("residuals: {r1}, {r2}");
}
