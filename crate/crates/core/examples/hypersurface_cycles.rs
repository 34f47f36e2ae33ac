//! Tropical hypersurfaces in the plane and in space are balanced.

use tropcalc::cycle::check_balancing;
use tropcalc::hypersurface::{corner_locus, Convention, TropicalPolynomial};
use tropcalc::num::{format_vec, int_vec, rat};

fn main() {
    let cubic_terms: Vec<_> = [([0, 0], 0), ([3, 0], 0), ([0, 3], 0), ([1, 1], -2), ([2, 0], 1), ([0, 1], 1)]
        .iter()
        .map(|(m, c)| (int_vec(m), rat(*c, 1)))
        .collect();
    let curve = corner_locus(&TropicalPolynomial::new(2, cubic_terms, Convention::Min).unwrap()).unwrap();
    println!("plane curve: {} cells", curve.num_cells());
    for (cell, m) in curve.weighted_cells() {
        let vertices: Vec<String> = cell.vertices().iter().map(|v| format_vec(v)).collect();
        let rays: Vec<String> = cell.rays().iter().map(|v| format_vec(v)).collect();
        println!("  vertices [{}] rays [{}] weight {m}", vertices.join(" "), rays.join(" "));
    }
    println!("balanced: {}", check_balancing(&curve).unwrap().is_empty());

    let plane_terms: Vec<_> = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]].iter().map(|m| (int_vec(m), rat(0, 1))).collect();
    let plane = corner_locus(&TropicalPolynomial::new(3, plane_terms, Convention::Max).unwrap()).unwrap();
    println!("tropical plane in R^3: {} two-dimensional cells, balanced: {}", plane.num_cells(), check_balancing(&plane).unwrap().is_empty());
}
