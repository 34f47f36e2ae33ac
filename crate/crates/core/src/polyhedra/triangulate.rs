use num_traits::Signed;

use super::Polyhedron;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg;
use crate::num::{factorial, rat_int, RatVec, Rational};

/// A simplex given by its `k + 1` affinely independent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub vertices: Vec<RatVec>,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Edge vectors `v_i - v_0` expressed in a basis of `lattice`.
    pub fn edge_coordinates(&self, lattice: &Lattice) -> Vec<RatVec> {
        let v0 = &self.vertices[0];
        self.vertices[1..]
            .iter()
            .map(|v| {
                let d: RatVec = v.iter().zip(v0).map(|(a, b)| a - b).collect();
                lattice.span_coordinates(&d).expect("simplex lies in the lattice span")
            })
            .collect()
    }

    /// Volume normalized so that a fundamental parallelepiped of `lattice` has volume 1.
    pub fn volume(&self, lattice: &Lattice) -> Rational {
        let n = self.dim();
        linalg::det(self.edge_coordinates(lattice)).abs() / rat_int(&factorial(n))
    }
}

/// Pulling triangulation from the lexicographically smallest vertex, applied recursively.
pub fn triangulate(p: &Polyhedron) -> Result<Vec<Simplex>> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let mut out = Vec::new();
    pull(p, &mut Vec::new(), &mut out);
    Ok(out)
}

fn pull(p: &Polyhedron, apexes: &mut Vec<RatVec>, out: &mut Vec<Simplex>) {
    let v = p.vertices()[0].clone();
    if p.dim() == 0 {
        let mut vertices = vec![v];
        vertices.extend(apexes.iter().rev().cloned());
        out.push(Simplex { vertices });
        return;
    }
    apexes.push(v.clone());
    for f in p.facet_faces() {
        if !f.contains_point(&v) {
            pull(f, apexes, out);
        }
    }
    apexes.pop();
}
