//! The Dirac current of a tropical conic and its derivatives on a window.

use tropcalc::cycle::{current_eval, Current, Op};
use tropcalc::hypersurface::{corner_locus, Convention, TropicalPolynomial};
use tropcalc::num::{int_vec, rat};
use tropcalc::polyhedra::Polyhedron;
use tropcalc::superform::{Polynomial, Superform};

fn main() {
    let conic = TropicalPolynomial::new(
        2,
        [([0, 0], 0), ([1, 0], 1), ([0, 1], 1), ([2, 0], 3), ([1, 1], 2), ([0, 2], 3)]
            .iter()
            .map(|(m, c)| (int_vec(m), rat(*c, 1)))
            .collect(),
        Convention::Min,
    )
    .unwrap();
    let cycle = corner_locus(&conic).unwrap();
    let window = Polyhedron::cuboid(&[rat(-4, 1), rat(-4, 1)], &[rat(4, 1), rat(4, 1)]).unwrap();

    let f = Polynomial::from_terms(2, [(vec![1, 1], rat(1, 1)), (vec![0, 0], rat(2, 1))]);
    let a = Superform::term(2, &[0], &[1], f.clone());
    let delta = Current::dirac(cycle.clone());
    println!("δ(a) = {}", current_eval(&delta, &a, &window).unwrap());

    let d_delta = Current::dirac(cycle).apply(Op::DPrime);
    let eta = Superform::term(2, &[], &[0], f);
    println!("(d'δ)(η) = {}", current_eval(&d_delta, &eta, &window).unwrap());

    // a factor vanishing on the window boundary leaves only interior faces, where balancing cancels
    let mut bump = Polynomial::one(2);
    for i in 0..2 {
        let x = Polynomial::var(2, i);
        bump = &bump * &(&(&x + &Polynomial::constant(2, rat(4, 1))) * &(&Polynomial::constant(2, rat(4, 1)) - &x));
    }
    println!("(d'δ)(bump·η) = {}", current_eval(&d_delta, &eta.mul_function(&bump), &window).unwrap());
}
