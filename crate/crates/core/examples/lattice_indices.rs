//! Hermite and Smith normal forms, saturation and lattice indices.

use tropcalc::lattice::{hnf, lattice_index, primitive_outward, snf, IntMatrix, Lattice};
use tropcalc::num::{int_vec, rat_vec};

fn main() {
    let m = IntMatrix::from_i64(&[&[4, 6, 2], &[2, 0, 8]]);
    let (h, u) = hnf(&m);
    println!("hnf = {:?}\nwith transform {:?}", h.row_vecs(), u.row_vecs());
    println!("elementary divisors = {:?}", snf(&m));

    let sub = Lattice::from_generators(2, &[int_vec(&[2, 2]), int_vec(&[0, 3])]);
    let full = Lattice::full(2);
    println!("[Z^2 : sub] = {:?}", lattice_index(&sub, &full).unwrap());

    let line = Lattice::from_generators(3, &[int_vec(&[2, 4, 6])]);
    println!("saturation of <(2,4,6)> = {:?}", line.saturate().basis_vecs());

    // edge of the unit square seen from the square
    let n_rho = Lattice::from_generators(2, &[int_vec(&[0, 1])]);
    let omega = primitive_outward(&full, &n_rho, &rat_vec(&[1, 0])).unwrap();
    println!("outward vector across x = 0: {omega:?}");
}
