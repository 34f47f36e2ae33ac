#![allow(dead_code, clippy::mutable_key_type)]
pub mod criteria;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropcalc::cycle::WeightedComplex;
use tropcalc::hypersurface::{corner_locus, Convention, TropicalPolynomial};
use tropcalc::lattice::IntMatrix;
use tropcalc::num::{int, rat, Int, IntVec, RatVec, Rational};
use tropcalc::polyhedra::Polyhedron;
use tropcalc::superform::{IntegralAffineMap, Polynomial, Superform};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// Random polynomial in `vars` variables with total degree at most `max_degree`.
pub fn polynomial(rng: &mut impl Rng, vars: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let mut f = Polynomial::zero(vars);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut exp = vec![0u32; vars];
        let total = rng.gen_range(0..=max_degree);
        for _ in 0..total {
            if vars > 0 {
                exp[rng.gen_range(0..vars)] += 1;
            }
        }
        f.add_term(exp, small_rational(rng));
    }
    f
}

fn subset(rng: &mut impl Rng, r: usize, k: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..r).collect();
    all.shuffle(rng);
    all.truncate(k);
    all
}

/// Random `(p,q)`-form on `R^r` with polynomial coefficients.
pub fn form(rng: &mut impl Rng, r: usize, p: usize, q: usize, max_degree: u32) -> Superform {
    let mut a = Superform::zero(r, p, q);
    for _ in 0..rng.gen_range(1..=3) {
        let i = subset(rng, r, p);
        let j = subset(rng, r, q);
        a = &a + &Superform::term(r, &i, &j, polynomial(rng, r, max_degree, 3));
    }
    a
}

pub fn int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<IntVec> = (0..rows)
        .map(|_| (0..cols).map(|_| int(rng.gen_range(-bound..=bound))).collect())
        .collect();
    IntMatrix::from_rows(cols, &data)
}

/// Product of random elementary integer operations.
pub fn unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut rows: Vec<IntVec> = (0..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect()).collect();
    if n < 2 {
        if rng.gen_bool(0.5) {
            rows[0][0] = int(-1);
        }
        return IntMatrix::from_rows(n, &rows);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => {
                let k: i64 = rng.gen_range(-2..=2);
                let rj = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(&rj) {
                    *x += y * k;
                }
            }
            1 => rows.swap(i, j),
            _ => rows[i].iter_mut().for_each(|x| *x = -x.clone()),
        }
    }
    IntMatrix::from_rows(n, &rows)
}

/// Random integer matrix with nonzero determinant.
pub fn nonsingular(rng: &mut impl Rng, n: usize, bound: i64) -> IntMatrix {
    loop {
        let m = int_matrix(rng, n, n, bound);
        if m.det() != Int::from(0) {
            return m;
        }
    }
}

pub fn point(rng: &mut impl Rng, r: usize, bound: i64) -> RatVec {
    (0..r).map(|_| rat(rng.gen_range(-bound..=bound), 1)).collect()
}

/// Full-dimensional polytope: hull of random integer points, or a box.
pub fn polytope(rng: &mut impl Rng, r: usize) -> Polyhedron {
    loop {
        let p = if rng.gen_bool(0.3) {
            let lo = point(rng, r, 2);
            let hi: RatVec = lo.iter().map(|x| x + rat(rng.gen_range(1..=2), rng.gen_range(1..=2))).collect();
            Polyhedron::cuboid(&lo, &hi)
        } else {
            let pts: Vec<RatVec> = (0..r + 1 + rng.gen_range(0..3)).map(|_| point(rng, r, 2)).collect();
            Polyhedron::from_generators(r, &pts, &[], &[])
        };
        if let Some(p) = p {
            if p.dim() == r {
                return p;
            }
        }
    }
}

/// `n`-dimensional polytope in `R^r`: a full-dimensional polytope in `R^n`
/// pushed in along an injective integral affine map.
pub fn embedded_polytope(rng: &mut impl Rng, r: usize, n: usize) -> Polyhedron {
    let base = polytope(rng, n);
    loop {
        let a = int_matrix(rng, r, n, 2);
        let f = IntegralAffineMap::new(a, point(rng, r, 2));
        let img = base.image(&f);
        if img.dim() == n {
            return img;
        }
    }
}

pub fn unit_cube(r: usize) -> Polyhedron {
    Polyhedron::cuboid(&vec![rat(0, 1); r], &vec![rat(1, 1); r]).unwrap()
}

pub fn segment(from: &[i64], to: &[i64]) -> Polyhedron {
    let pts = [from, to].map(|p| p.iter().map(|&x| rat(x, 1)).collect::<RatVec>());
    Polyhedron::from_generators(from.len(), &pts, &[], &[]).unwrap()
}

pub fn ray(base: &[i64], dir: &[i64]) -> Polyhedron {
    let b: RatVec = base.iter().map(|&x| rat(x, 1)).collect();
    let d: IntVec = dir.iter().map(|&x| int(x)).collect();
    Polyhedron::from_generators(base.len(), &[b], &[d], &[]).unwrap()
}

pub fn tropical_line() -> WeightedComplex {
    WeightedComplex::new(
        2,
        1,
        vec![(ray(&[0, 0], &[1, 0]), int(1)), (ray(&[0, 0], &[0, 1]), int(1)), (ray(&[0, 0], &[-1, -1]), int(1))],
    )
    .unwrap()
}

/// Tropical polynomial with `terms` distinct exponents in `[0, degree]^r`
/// (always including the origin) and random integer coefficients.
pub fn tropical_polynomial(rng: &mut impl Rng, r: usize, degree: i64, terms: usize) -> TropicalPolynomial {
    let mut exps: Vec<IntVec> = vec![vec![int(0); r]];
    let mut tries = 0;
    while exps.len() < terms && tries < 1000 {
        tries += 1;
        let e: IntVec = (0..r).map(|_| int(rng.gen_range(0..=degree))).collect();
        if !exps.contains(&e) {
            exps.push(e);
        }
    }
    let convention = if rng.gen_bool(0.8) { Convention::Min } else { Convention::Max };
    let terms = exps.into_iter().map(|e| (e, rat(rng.gen_range(-4..=4), 1))).collect();
    TropicalPolynomial::new(r, terms, convention).unwrap()
}

/// Balanced cycle from a random tropical hypersurface with at least one cell.
pub fn hypersurface_cycle(rng: &mut impl Rng, r: usize) -> WeightedComplex {
    loop {
        let terms = if r == 2 { rng.gen_range(3..=6) } else { rng.gen_range(3..=5) };
        let p = tropical_polynomial(rng, r, 2, terms);
        let c = corner_locus(&p).unwrap();
        if !c.is_zero() {
            return c;
        }
    }
}

/// Box `[-b, b]^r`.
pub fn window(r: usize, b: i64) -> Polyhedron {
    Polyhedron::cuboid(&vec![rat(-b, 1); r], &vec![rat(b, 1); r]).unwrap()
}

/// Bounded cycle of segments and polygons: a hypersurface cut to a box, or
/// random weighted cells when `r == 1`.
pub fn bounded_complex(rng: &mut impl Rng, r: usize) -> WeightedComplex {
    if r == 1 {
        let mut cells = Vec::new();
        let mut x = rng.gen_range(-3..=0);
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(1..=2);
            cells.push((segment(&[x], &[x + len]), int(rng.gen_range(1..=3))));
            x += len;
        }
        return WeightedComplex::new(1, 1, cells).unwrap();
    }
    hypersurface_cycle(rng, r).truncate(&window(r, 3)).unwrap()
}

pub fn weight(c: &WeightedComplex) -> Vec<(Polyhedron, Int)> {
    c.weighted_cells().map(|(p, m)| (p.clone(), m.clone())).collect()
}
