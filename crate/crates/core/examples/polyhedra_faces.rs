//! Building polyhedra from either description and walking their faces.

use tropcalc::num::{format_vec, int_vec, rat, rat_vec};
use tropcalc::polyhedra::{triangulate, Halfspace, Polyhedron};

fn main() {
    let triangle = Polyhedron::from_halfspaces(
        2,
        &[
            Halfspace::from_i64(&[-1, 0], rat(0, 1)),
            Halfspace::from_i64(&[0, -1], rat(0, 1)),
            Halfspace::from_i64(&[1, 1], rat(2, 1)),
            Halfspace::from_i64(&[1, 0], rat(5, 1)),
        ],
    )
    .unwrap();
    let vertices: Vec<String> = triangle.vertices().iter().map(|v| format_vec(v)).collect();
    println!("dim {} with {} facets, vertices {}", triangle.dim(), triangle.facets().len(), vertices.join(" "));
    for edge in triangle.faces(1) {
        let omega = triangle.outward_vector(&edge).unwrap();
        let ends: Vec<String> = edge.vertices().iter().map(|v| format_vec(v)).collect();
        println!("  edge {}: outward lattice vector {}", ends.join(" to "), format_vec(&omega));
    }
    println!("lattice-normalized area {}", triangle.volume().unwrap());
    println!("{} simplices in the pulling triangulation", triangulate(&triangle).unwrap().len());

    let slab = Polyhedron::from_generators(3, &[rat_vec(&[0, 0, 0])], &[int_vec(&[1, 1, 0])], &[int_vec(&[0, 0, 1])]).unwrap();
    println!("slab: dim {}, bounded {}", slab.dim(), slab.is_bounded());
    for e in slab.equations() {
        println!("  {} . x = {}", format_vec(&e.u), e.c);
    }
}
