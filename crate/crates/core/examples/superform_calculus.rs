//! Wedge products, the two differentials, contraction and pullback.

use tropcalc::lattice::IntMatrix;
use tropcalc::num::{rat, rat_vec};
use tropcalc::superform::{IntegralAffineMap, Polynomial, Superform};

fn main() {
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    let f = Superform::function(&(&x * &x) * &y);

    let a = f.d_prime();
    let b = f.d_second();
    println!("d'f  = {a}");
    println!("d''f = {b}");
    println!("d'd''f = {}", f.d_second().d_prime());
    println!("d''d'f = {}", f.d_prime().d_second());
    println!("d'd'f is zero: {}", a.d_prime().is_zero());

    let w = a.wedge(&b).unwrap();
    println!("d'f ∧ d''f = {w}, symmetric: {}", w.is_symmetric());
    println!("value at (1,1) on e1, e2: {}", w.evaluate(&[rat(1, 1), rat(1, 1)], &[rat_vec(&[1, 0]), rat_vec(&[0, 1])]).unwrap());
    println!("contracted with e1 in slot 1: {}", w.contract(&[rat_vec(&[1, 0])], &[1]).unwrap());

    let shear = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[1, 1], &[0, 1]]));
    println!("pullback along a shear: {}", w.pullback(&shear).unwrap());
}
