use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use super::{Halfspace, Polyhedron};
use crate::num::{normalize_sign, Rational};

/// A finite set of polyhedra in a common ambient space, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    ambient: usize,
    cells: Vec<Polyhedron>,
}

impl Complex {
    /// Takes the cells as given; no closure is performed.
    pub fn new(ambient: usize, cells: Vec<Polyhedron>) -> Complex {
        let set: BTreeSet<Polyhedron> = cells.into_iter().collect();
        Complex {
            ambient,
            cells: set.into_iter().collect(),
        }
    }

    /// The cells together with all of their faces.
    pub fn from_maximal(ambient: usize, cells: Vec<Polyhedron>) -> Complex {
        let mut set = BTreeSet::new();
        for c in cells {
            set.extend(c.all_faces());
        }
        Complex {
            ambient,
            cells: set.into_iter().collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains_cell(&self, p: &Polyhedron) -> bool {
        self.cells.binary_search(p).is_ok()
    }

    /// Largest cell dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(Polyhedron::dim).max()
    }

    pub fn cells_of_dim(&self, k: usize) -> Vec<&Polyhedron> {
        self.cells.iter().filter(|c| c.dim() == k).collect()
    }

    /// Cells that are not a proper face of another cell.
    pub fn maximal_cells(&self) -> Vec<&Polyhedron> {
        self.cells
            .iter()
            .filter(|c| {
                !self
                    .cells
                    .iter()
                    .any(|d| d.dim() > c.dim() && c.is_face_of(d))
            })
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let dim = self.dim();
        self.maximal_cells().iter().all(|c| Some(c.dim()) == dim)
    }

    pub fn is_bounded(&self) -> bool {
        self.cells.iter().all(Polyhedron::is_bounded)
    }
}

/// A failure of one of the complex axioms. Indices refer to [`Complex::cells`].
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    AmbientMismatch { cell: usize },
    MissingFace { cell: usize, face: Polyhedron },
    BadIntersection { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AmbientMismatch { cell } => write!(f, "cell {cell}: ambient dimension mismatch"),
            Violation::MissingFace { cell, face } => {
                write!(f, "cell {cell}: missing face of dimension {}", face.dim())
            }
            Violation::BadIntersection { first, second } => {
                write!(f, "cells {first} and {second}: intersection is not a common face")
            }
        }
    }
}

/// Checks closure under faces and that intersections are common faces.
pub fn validate_complex(c: &Complex) -> Vec<Violation> {
    let mut out = Vec::new();
    for (i, cell) in c.cells.iter().enumerate() {
        if cell.ambient_dim() != c.ambient {
            out.push(Violation::AmbientMismatch { cell: i });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (i, cell) in c.cells.iter().enumerate() {
        for f in cell.facet_faces() {
            if !c.contains_cell(f) {
                out.push(Violation::MissingFace {
                    cell: i,
                    face: f.clone(),
                });
            }
        }
    }
    let maximal: Vec<usize> = (0..c.cells.len())
        .filter(|&i| {
            let p = &c.cells[i];
            !c.cells.iter().any(|d| d.dim() > p.dim() && p.is_face_of(d))
        })
        .collect();
    for (a, &i) in maximal.iter().enumerate() {
        for &j in &maximal[a + 1..] {
            let (p, q) = (&c.cells[i], &c.cells[j]);
            if let Some(x) = p.intersect(q) {
                if !x.is_face_of(p) || !x.is_face_of(q) {
                    out.push(Violation::BadIntersection { first: i, second: j });
                }
            }
        }
    }
    out
}

/// Common refinement of `c` by `d` on `|c| ∩ |d|`.
pub fn refine(c: &Complex, d: &Complex) -> Complex {
    let mut pieces = Vec::new();
    for a in c.maximal_cells() {
        for b in d.maximal_cells() {
            if let Some(x) = a.intersect(b) {
                pieces.push(x);
            }
        }
    }
    Complex::from_maximal(c.ambient, pieces)
}

/// Intersection of every cell with a box, closed under faces.
pub fn truncate(c: &Complex, window: &Polyhedron) -> Complex {
    let pieces = c
        .maximal_cells()
        .into_iter()
        .filter_map(|a| a.intersect(window))
        .collect();
    Complex::from_maximal(c.ambient, pieces)
}

/// The facet hyperplanes and affine-hull equations of the cells as
/// `<u,x> = c` with sign-normalized `u`, deduplicated.
pub(crate) fn hyperplanes_of<'a>(cells: impl IntoIterator<Item = &'a Polyhedron>) -> Vec<Halfspace> {
    let mut set = BTreeSet::new();
    for p in cells {
        for h in p.equations().iter().chain(p.facets()) {
            let mut u = h.u.clone();
            let c = if normalize_sign(&mut u) { -h.c.clone() } else { h.c.clone() };
            set.insert(Halfspace::new(u, c));
        }
    }
    set.into_iter().collect()
}

/// Splits `p` by every hyperplane that crosses its relative interior.
pub(crate) fn split_by_hyperplanes(p: &Polyhedron, hyperplanes: &[Halfspace]) -> Vec<Polyhedron> {
    let mut pieces = vec![p.clone()];
    for h in hyperplanes {
        let mut next = Vec::with_capacity(pieces.len());
        for piece in pieces {
            let (neg, pos) = piece.sides(&h.u, &h.c);
            if !(neg && pos) {
                next.push(piece);
                continue;
            }
            let below = Polyhedron::from_halfspaces(
                p.ambient_dim(),
                &[piece.halfspaces(), vec![h.clone()]].concat(),
            );
            let above = Polyhedron::from_halfspaces(
                p.ambient_dim(),
                &[piece.halfspaces(), vec![h.negated()]].concat(),
            );
            next.extend(below.into_iter().filter(|x| x.dim() == p.dim()));
            next.extend(above.into_iter().filter(|x| x.dim() == p.dim()));
        }
        pieces = next;
    }
    pieces
}

/// Lattice-normalized total `n`-volume of the `n`-cells of a bounded complex.
pub fn total_volume(c: &Complex, n: usize) -> crate::error::Result<Rational> {
    let mut total = Rational::zero();
    for cell in c.cells_of_dim(n) {
        total += cell.volume()?;
    }
    Ok(total)
}
