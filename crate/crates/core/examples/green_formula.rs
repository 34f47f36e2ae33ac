//! Green's formula for a symmetric pair on the unit cube.

use tropcalc::integrate::green_residual;
use tropcalc::num::rat;
use tropcalc::polyhedra::Polyhedron;
use tropcalc::superform::{Polynomial, Superform};

fn main() {
    let cube = Polyhedron::cuboid(&vec![rat(0, 1); 3], &vec![rat(1, 1); 3]).unwrap();
    let x = Polynomial::var(3, 0);
    let z = Polynomial::var(3, 2);
    // α ∈ A^{1,1} and β ∈ A^{1,1}, so p + q = 2 = dim - 1
    let alpha = &Superform::term(3, &[0], &[0], &x * &z) + &Superform::term(3, &[1], &[1], Polynomial::one(3));
    let a12 = Superform::term(3, &[0], &[2], z.clone());
    let beta = &a12 + &a12.swap();
    println!("α = {alpha}\nβ = {beta}");
    println!("Green residual = {}", green_residual(&cube, &alpha, &beta).unwrap());
}
