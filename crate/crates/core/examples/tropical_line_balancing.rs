//! Balancing of the tropical line, a broken copy, and the closedness certificate.

use tropcalc::cycle::{check_balancing, closedness_witness, WeightedComplex};
use tropcalc::num::{format_vec, int, int_vec, rat_vec};
use tropcalc::polyhedra::Polyhedron;

fn ray(d: &[i64]) -> Polyhedron {
    Polyhedron::from_generators(2, &[rat_vec(&[0, 0])], &[int_vec(d)], &[]).unwrap()
}

fn main() {
    let line = WeightedComplex::new(2, 1, vec![(ray(&[1, 0]), int(1)), (ray(&[0, 1]), int(1)), (ray(&[-1, -1]), int(1))]).unwrap();
    println!("tropical line balanced: {}", check_balancing(&line).unwrap().is_empty());

    let broken = line.with_weight(&ray(&[0, 1]), int(3)).unwrap();
    for v in check_balancing(&broken).unwrap() {
        println!("unbalanced at {}: excess {}", format_vec(&v.face.vertices()[0]), format_vec(&v.excess));
    }
    for w in closedness_witness(&broken).unwrap() {
        println!("test form {} pairs to {} with the excess", w.form, w.value);
    }
}
