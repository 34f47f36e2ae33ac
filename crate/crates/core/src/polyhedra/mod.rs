//! Integral `Q`-affine polyhedra and polyhedral complexes.
//!
//! A [`Polyhedron`] keeps both descriptions: a canonical H-representation
//! (saturated integral equations of the affine hull plus primitive facet
//! inequalities reduced modulo those equations) and the V-representation
//! (points of the minimal faces, extreme rays, lineality basis). Equality,
//! ordering and hashing only look at the canonical H-representation, so two
//! polyhedra compare equal exactly when they are the same set.
//!
//! The empty set is `None` wherever a construction can produce it.

mod complex;
mod dd;
mod triangulate;

pub use complex::{refine, total_volume, truncate, validate_complex, Complex, Violation};
pub(crate) use complex::{hyperplanes_of, split_by_hyperplanes};
pub use triangulate::{triangulate, Simplex};

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, primitive_outward, Lattice};
use crate::linalg::{self, Rref};
use crate::num::{
    dot_int, dot_int_rat, primitive_of_rational, rat_int, to_rat_vec, Int, IntVec, RatVec,
    Rational,
};
use crate::superform::IntegralAffineMap;

/// `<u, x> <= c` (or `= c` when used as an equation).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub u: IntVec,
    pub c: Rational,
}

impl Halfspace {
    pub fn new(u: IntVec, c: Rational) -> Halfspace {
        Halfspace { u, c }
    }

    pub fn from_i64(u: &[i64], c: Rational) -> Halfspace {
        Halfspace::new(u.iter().map(|&x| Int::from(x)).collect(), c)
    }

    /// `<u, x> - c`
    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot_int_rat(&self.u, x) - &self.c
    }

    pub fn negated(&self) -> Halfspace {
        Halfspace::new(self.u.iter().map(|x| -x).collect(), -self.c.clone())
    }
}

#[derive(Clone)]
pub struct Polyhedron {
    ambient: usize,
    dim: usize,
    equations: Vec<Halfspace>,
    facets: Vec<Halfspace>,
    vertices: Vec<RatVec>,
    rays: Vec<IntVec>,
    lines: Vec<IntVec>,
    lattice: Lattice,
    facet_faces: OnceLock<Vec<Polyhedron>>,
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.equations == other.equations
            && self.facets == other.facets
    }
}

impl Eq for Polyhedron {}

impl Hash for Polyhedron {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.equations.hash(state);
        self.facets.hash(state);
    }
}

impl Ord for Polyhedron {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim, &self.equations, &self.facets).cmp(&(
            other.ambient,
            other.dim,
            &other.equations,
            &other.facets,
        ))
    }
}

impl PartialOrd for Polyhedron {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|p| p.iter().map(ToString::to_string).collect())
            .collect();
        let r: Vec<Vec<String>> = self
            .rays
            .iter()
            .map(|p| p.iter().map(ToString::to_string).collect())
            .collect();
        let l: Vec<Vec<String>> = self
            .lines
            .iter()
            .map(|p| p.iter().map(ToString::to_string).collect())
            .collect();
        f.debug_struct("Polyhedron")
            .field("dim", &self.dim)
            .field("vertices", &v)
            .field("rays", &r)
            .field("lines", &l)
            .finish()
    }
}

/// Generator values of a linear functional on a polyhedron.
struct Values {
    vertices: Vec<Rational>,
    rays: Vec<Int>,
    lines: Vec<Int>,
}

impl Polyhedron {
    /// Intersection of halfspaces; `None` when infeasible.
    pub fn from_halfspaces(ambient: usize, hs: &[Halfspace]) -> Option<Polyhedron> {
        for h in hs {
            assert_eq!(h.u.len(), ambient, "halfspace normal has wrong length");
        }
        let d = ambient + 1;
        let mut cons = Vec::with_capacity(hs.len() + 1);
        let mut t_row = vec![Int::zero(); d];
        t_row[ambient] = Int::from(-1);
        cons.push(t_row);
        for h in hs {
            let den = h.c.denom().clone();
            let mut row: IntVec = h.u.iter().map(|x| x * &den).collect();
            row.push(-h.c.numer().clone());
            cons.push(row);
        }
        let cone = dd::cone_from_constraints(d, &cons);
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in cone.rays {
            let t = &r[ambient];
            if t.is_positive() {
                let t = rat_int(t);
                vertices.push(r[..ambient].iter().map(|x| rat_int(x) / &t).collect());
            } else {
                rays.push(r[..ambient].to_vec());
            }
        }
        if vertices.is_empty() {
            return None;
        }
        let lines = cone.lineality.into_iter().map(|l| l[..ambient].to_vec()).collect();
        Some(Polyhedron::from_vrep(ambient, vertices, rays, lines, hs))
    }

    /// `{x : equations hold, inequalities hold}`.
    pub fn from_constraints(
        ambient: usize,
        equations: &[Halfspace],
        inequalities: &[Halfspace],
    ) -> Option<Polyhedron> {
        let mut hs: Vec<Halfspace> = inequalities.to_vec();
        for e in equations {
            hs.push(e.clone());
            hs.push(e.negated());
        }
        Polyhedron::from_halfspaces(ambient, &hs)
    }

    /// `conv(points) + cone(rays) + span(lines)`; `None` without points.
    pub fn from_generators(
        ambient: usize,
        points: &[RatVec],
        rays: &[IntVec],
        lines: &[IntVec],
    ) -> Option<Polyhedron> {
        if points.is_empty() {
            return None;
        }
        let d = ambient + 1;
        let mut cons: Vec<IntVec> = Vec::new();
        for p in points {
            let (mut a, den) = crate::num::clear_denominators(p);
            a.push(den);
            cons.push(a);
        }
        for r in rays {
            let mut a = r.clone();
            a.push(Int::zero());
            cons.push(a);
        }
        for l in lines {
            let mut a = l.clone();
            a.push(Int::zero());
            cons.push(a.iter().map(|x| -x).collect());
            cons.push(a);
        }
        let polar = dd::cone_from_constraints(d, &cons);
        let mut hs = Vec::new();
        for r in polar.rays {
            if r[..ambient].iter().all(Zero::is_zero) {
                continue;
            }
            hs.push(Halfspace::new(r[..ambient].to_vec(), -rat_int(&r[ambient])));
        }
        for l in polar.lineality {
            let h = Halfspace::new(l[..ambient].to_vec(), -rat_int(&l[ambient]));
            hs.push(h.negated());
            hs.push(h);
        }
        Polyhedron::from_halfspaces(ambient, &hs)
    }

    pub fn point(x: &[Rational]) -> Polyhedron {
        Polyhedron::from_generators(x.len(), &[x.to_vec()], &[], &[]).expect("a point is nonempty")
    }

    /// Axis-parallel box `prod [lo_i, hi_i]`.
    pub fn cuboid(lo: &[Rational], hi: &[Rational]) -> Option<Polyhedron> {
        let r = lo.len();
        let mut hs = Vec::with_capacity(2 * r);
        for i in 0..r {
            let mut e = vec![Int::zero(); r];
            e[i] = Int::from(1);
            hs.push(Halfspace::new(e.clone(), hi[i].clone()));
            hs.push(Halfspace::new(e.iter().map(|x| -x).collect(), -lo[i].clone()));
        }
        Polyhedron::from_halfspaces(r, &hs)
    }

    /// Canonical polyhedron from an extreme V-representation. `candidates`
    /// must contain a defining inequality for every facet.
    fn from_vrep(
        ambient: usize,
        vertices: Vec<RatVec>,
        rays: Vec<IntVec>,
        lines: Vec<IntVec>,
        candidates: &[Halfspace],
    ) -> Polyhedron {
        let line_lattice = Lattice::from_generators(ambient, &lines).saturate();
        let line_rref = line_lattice.span_rref();
        let mut vertices: Vec<RatVec> = vertices.iter().map(|v| line_rref.reduce(v)).collect();
        vertices.sort();
        vertices.dedup();
        let mut rays: Vec<IntVec> = rays
            .iter()
            .map(|r| primitive_of_rational(&line_rref.reduce(&to_rat_vec(r))))
            .filter(|r| !r.iter().all(Zero::is_zero))
            .collect();
        rays.sort();
        rays.dedup();
        let lines = line_lattice.basis_vecs();

        let v0 = vertices[0].clone();
        let mut dirs: Vec<IntVec> = vertices[1..]
            .iter()
            .map(|v| {
                let d: RatVec = v.iter().zip(&v0).map(|(a, b)| a - b).collect();
                primitive_of_rational(&d)
            })
            .collect();
        dirs.extend(rays.iter().cloned());
        dirs.extend(lines.iter().cloned());
        let lattice = Lattice::from_generators(ambient, &dirs).saturate();
        let dim = lattice.rank();

        let normals = integer_kernel(lattice.basis());
        let equations: Vec<Halfspace> = normals
            .basis_vecs()
            .into_iter()
            .map(|u| {
                let c = dot_int_rat(&u, &v0);
                Halfspace::new(u, c)
            })
            .collect();
        let eq_rref = Rref::new(
            equations
                .iter()
                .map(|e| {
                    let mut row = to_rat_vec(&e.u);
                    row.push(e.c.clone());
                    row
                })
                .collect(),
        );

        let mut p = Polyhedron {
            ambient,
            dim,
            equations,
            facets: Vec::new(),
            vertices,
            rays,
            lines,
            lattice,
            facet_faces: OnceLock::new(),
        };

        let mut facets = Vec::new();
        for h in candidates {
            let vals = p.values(&h.u, &h.c);
            let tight_vertices: Vec<usize> =
                (0..p.vertices.len()).filter(|&i| vals.vertices[i].is_zero()).collect();
            if tight_vertices.is_empty() {
                continue;
            }
            let all_tight = tight_vertices.len() == p.vertices.len()
                && vals.rays.iter().all(Zero::is_zero)
                && vals.lines.iter().all(Zero::is_zero);
            if all_tight {
                continue;
            }
            let tight_rays: Vec<usize> =
                (0..p.rays.len()).filter(|&i| vals.rays[i].is_zero()).collect();
            if p.face_dim(&tight_vertices, &tight_rays) + 1 != dim {
                continue;
            }
            let mut aug = to_rat_vec(&h.u);
            aug.push(h.c.clone());
            let reduced = if eq_rref.rows.is_empty() { aug } else { eq_rref.reduce(&aug) };
            let (u_part, c_part) = reduced.split_at(ambient);
            let u = primitive_of_rational(u_part);
            // scale factor between u_part and u: pick any nonzero coordinate
            let k = (0..ambient).find(|&i| !u_part[i].is_zero()).expect("facet normal is nonzero");
            let scale = rat_int(&u[k]) / &u_part[k];
            facets.push(Halfspace::new(u, &c_part[0] * scale));
        }
        facets.sort();
        facets.dedup();
        p.facets = facets;
        p
    }

    fn values(&self, u: &[Int], c: &Rational) -> Values {
        Values {
            vertices: self.vertices.iter().map(|v| dot_int_rat(u, v) - c).collect(),
            rays: self.rays.iter().map(|r| dot_int(u, r)).collect(),
            lines: self.lines.iter().map(|l| dot_int(u, l)).collect(),
        }
    }

    /// Dimension of the face spanned by some vertices and rays (plus all lines).
    fn face_dim(&self, vertices: &[usize], rays: &[usize]) -> usize {
        let Some(&first) = vertices.first() else { return 0 };
        let v0 = &self.vertices[first];
        let mut rows: Vec<RatVec> = vertices[1..]
            .iter()
            .map(|&i| self.vertices[i].iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        rows.extend(rays.iter().map(|&i| to_rat_vec(&self.rays[i])));
        rows.extend(self.lines.iter().map(|l| to_rat_vec(l)));
        linalg::rank(&rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Saturated integral equations of the affine hull.
    pub fn equations(&self) -> &[Halfspace] {
        &self.equations
    }

    /// Canonical facet inequalities.
    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Points of the minimal faces, sorted (the vertices when pointed).
    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lines(&self) -> &[IntVec] {
        &self.lines
    }

    /// `N_σ`: the integer points of the linear space parallel to the hull.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lines.is_empty()
    }

    /// Equations (as opposite pairs) and facets.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        let mut hs = Vec::with_capacity(2 * self.equations.len() + self.facets.len());
        for e in &self.equations {
            hs.push(e.clone());
            hs.push(e.negated());
        }
        hs.extend(self.facets.iter().cloned());
        hs
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.equations.iter().all(|e| e.eval(x).is_zero())
            && self.facets.iter().all(|h| !h.eval(x).is_positive())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Polyhedron) -> bool {
        if other.ambient != self.ambient {
            return false;
        }
        other.vertices.iter().all(|v| self.contains_point(v))
            && other.rays.iter().all(|r| {
                self.equations.iter().all(|e| dot_int(&e.u, r).is_zero())
                    && self.facets.iter().all(|h| !dot_int(&h.u, r).is_positive())
            })
            && other.lines.iter().all(|l| {
                self.equations.iter().all(|e| dot_int(&e.u, l).is_zero())
                    && self.facets.iter().all(|h| dot_int(&h.u, l).is_zero())
            })
    }

    pub fn intersect(&self, other: &Polyhedron) -> Option<Polyhedron> {
        let mut hs = self.halfspaces();
        hs.extend(other.halfspaces());
        Polyhedron::from_halfspaces(self.ambient, &hs)
    }

    /// The face cut out by making the listed facets tight.
    pub fn face_with_tight(&self, tight: &[usize]) -> Option<Polyhedron> {
        let tight_hs: Vec<&Halfspace> = tight.iter().map(|&i| &self.facets[i]).collect();
        let vertices: Vec<RatVec> = self
            .vertices
            .iter()
            .filter(|v| tight_hs.iter().all(|h| h.eval(v).is_zero()))
            .cloned()
            .collect();
        if vertices.is_empty() {
            return None;
        }
        let rays: Vec<IntVec> = self
            .rays
            .iter()
            .filter(|r| tight_hs.iter().all(|h| dot_int(&h.u, r).is_zero()))
            .cloned()
            .collect();
        Some(Polyhedron::from_vrep(
            self.ambient,
            vertices,
            rays,
            self.lines.clone(),
            &self.facets,
        ))
    }

    /// Faces of codimension one, in the order of [`Polyhedron::facets`].
    pub fn facet_faces(&self) -> &[Polyhedron] {
        self.facet_faces.get_or_init(|| {
            (0..self.facets.len())
                .map(|i| self.face_with_tight(&[i]).expect("facets are nonempty"))
                .collect()
        })
    }

    /// All closed faces of the given codimension, sorted.
    pub fn faces(&self, codim: usize) -> Vec<Polyhedron> {
        let mut current = vec![self.clone()];
        for _ in 0..codim {
            let mut next: Vec<Polyhedron> = current
                .iter()
                .flat_map(|f| f.facet_faces().iter().cloned())
                .collect();
            next.sort();
            next.dedup();
            current = next;
        }
        current
    }

    /// All nonempty faces, including `self`.
    pub fn all_faces(&self) -> Vec<Polyhedron> {
        let mut out = Vec::new();
        for k in 0..=self.dim {
            out.extend(self.faces(k));
        }
        out.sort();
        out.dedup();
        out
    }

    /// True when `self` is a nonempty face of `sup`.
    pub fn is_face_of(&self, sup: &Polyhedron) -> bool {
        if !sup.contains(self) {
            return false;
        }
        let tight: Vec<usize> = (0..sup.facets.len())
            .filter(|&j| {
                let h = &sup.facets[j];
                self.vertices.iter().all(|v| h.eval(v).is_zero())
                    && self.rays.iter().all(|r| dot_int(&h.u, r).is_zero())
            })
            .collect();
        match sup.face_with_tight(&tight) {
            Some(f) => f == *self,
            None => false,
        }
    }

    /// A point of the relative interior.
    pub fn relative_interior_point(&self) -> RatVec {
        let n = Rational::from_integer(Int::from(self.vertices.len() as u64));
        let mut x: RatVec = vec![Rational::zero(); self.ambient];
        for v in &self.vertices {
            for (a, b) in x.iter_mut().zip(v) {
                *a += b;
            }
        }
        for a in x.iter_mut() {
            *a /= &n;
        }
        for r in &self.rays {
            for (a, b) in x.iter_mut().zip(r) {
                *a += rat_int(b);
            }
        }
        x
    }

    /// A vector of the hull direction pointing from `facet` into `self`.
    pub fn inward_direction(&self, facet: &Polyhedron) -> Result<RatVec> {
        let base = &facet.vertices[0];
        if let Some(v) = self.vertices.iter().find(|v| !facet.contains_point(v)) {
            return Ok(v.iter().zip(base).map(|(a, b)| a - b).collect());
        }
        let outside = self.rays.iter().find(|r| {
            let moved: RatVec = base.iter().zip(r.iter()).map(|(a, b)| a + rat_int(b)).collect();
            !facet.contains_point(&moved)
        });
        match outside {
            Some(r) => Ok(to_rat_vec(r)),
            None => Err(Error::NotAFacet("face contains the whole cell".into())),
        }
    }

    /// `ω_{ρ,σ}` for a facet `ρ` of `σ = self`, canonicalized modulo `N_ρ`.
    pub fn outward_vector(&self, facet: &Polyhedron) -> Result<IntVec> {
        if facet.dim + 1 != self.dim || !self.contains(facet) {
            return Err(Error::NotAFacet(format!(
                "dimension {} face of a dimension {} cell",
                facet.dim, self.dim
            )));
        }
        let d = self.inward_direction(facet)?;
        primitive_outward(&self.lattice, &facet.lattice, &d)
    }

    /// Base point (smallest vertex) and HNF basis of `N_σ`: the integral
    /// affine chart `t -> base + sum t_i b_i` of the affine hull.
    pub fn chart(&self) -> IntegralAffineMap {
        IntegralAffineMap::new(self.lattice.basis().transpose(), self.vertices[0].clone())
    }

    pub fn translate(&self, v: &[Rational]) -> Polyhedron {
        let hs: Vec<Halfspace> = self
            .halfspaces()
            .into_iter()
            .map(|h| {
                let c = &h.c + dot_int_rat(&h.u, v);
                Halfspace::new(h.u, c)
            })
            .collect();
        Polyhedron::from_halfspaces(self.ambient, &hs).expect("translate of nonempty")
    }

    /// `F(self)` under an affine map.
    pub fn image(&self, f: &IntegralAffineMap) -> Polyhedron {
        let points: Vec<RatVec> = self.vertices.iter().map(|v| f.apply(v)).collect();
        let rays: Vec<IntVec> = self.rays.iter().map(|r| f.linear().mul_vec(r)).collect();
        let lines: Vec<IntVec> = self.lines.iter().map(|l| f.linear().mul_vec(l)).collect();
        Polyhedron::from_generators(f.target_dim(), &points, &rays, &lines)
            .expect("image of nonempty polyhedron")
    }

    /// `F^{-1}(self)`.
    pub fn preimage(&self, f: &IntegralAffineMap) -> Option<Polyhedron> {
        let at = f.linear().transpose();
        let hs: Vec<Halfspace> = self
            .halfspaces()
            .into_iter()
            .map(|h| {
                let u = at.mul_vec(&h.u);
                let c = &h.c - dot_int_rat(&h.u, f.translate());
                Halfspace::new(u, c)
            })
            .collect();
        Polyhedron::from_halfspaces(f.source_dim(), &hs)
    }

    /// Lattice-normalized `dim`-volume of a bounded polyhedron.
    pub fn volume(&self) -> Result<Rational> {
        Ok(triangulate(self)?.iter().map(|s| s.volume(&self.lattice)).sum())
    }

    /// Whether `<u,x> - c` takes negative and positive values on `self`.
    pub(crate) fn sides(&self, u: &[Int], c: &Rational) -> (bool, bool) {
        let vals = self.values(u, c);
        let neg = vals.vertices.iter().any(Signed::is_negative)
            || vals.rays.iter().any(Signed::is_negative)
            || vals.lines.iter().any(|x| !x.is_zero());
        let pos = vals.vertices.iter().any(Signed::is_positive)
            || vals.rays.iter().any(Signed::is_positive)
            || vals.lines.iter().any(|x| !x.is_zero());
        (neg, pos)
    }
}
