//! End-to-end checks shared by the acceptance runner and the integration tests.
//! Each returns a one-line summary on success and the first failure otherwise.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;

use num_traits::{Signed, Zero};
use rand::Rng;
use tropcalc::cli::{emit, parse, Document};
use tropcalc::cycle::{check_balancing, closedness_witness, projection_check, pushforward, WeightedComplex};
use tropcalc::integrate::{green_residual, integrate_complex_boundary, integrate_polytope, stokes_residual};
use tropcalc::lattice::{lattice_index, saturate, IntMatrix, Lattice, LatticeIndex};
use tropcalc::num::{int, rat, Int, IntVec, RatVec, Rational};
use tropcalc::polyhedra::Polyhedron;
use tropcalc::superform::{IntegralAffineMap, Polynomial, Superform};

use super::*;

pub type Outcome = std::result::Result<String, String>;

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        rat(1, 1)
    } else {
        rat(-1, 1)
    }
}

// Stokes

pub fn stokes_corpus() -> Vec<(String, WeightedComplex)> {
    let one = |p: Polyhedron| {
        let n = p.dim();
        WeightedComplex::new(p.ambient_dim(), n, vec![(p, int(1))]).unwrap()
    };
    let simplex3 = Polyhedron::from_generators(
        3,
        &[vec![rat(0, 1); 3], vec![rat(1, 1), rat(0, 1), rat(0, 1)], vec![rat(0, 1), rat(2, 1), rat(0, 1)], vec![rat(1, 1), rat(1, 1), rat(3, 1)]],
        &[],
        &[],
    )
    .unwrap();
    let simplex2 = Polyhedron::from_generators(2, &[rat_v(&[0, 0]), rat_v(&[2, 1]), rat_v(&[-1, 3])], &[], &[]).unwrap();
    let quarter = |lo: [i64; 2]| Polyhedron::cuboid(&rat_v(&lo), &rat_v(&[lo[0] + 1, lo[1] + 1])).unwrap();
    let subdivided = WeightedComplex::new(
        2,
        2,
        vec![(quarter([0, 0]), int(1)), (quarter([1, 0]), int(2)), (quarter([0, 1]), int(-1)), (quarter([1, 1]), int(3))],
    )
    .unwrap();
    let triangles = WeightedComplex::new(
        2,
        2,
        vec![
            (Polyhedron::from_generators(2, &[rat_v(&[0, 0]), rat_v(&[1, 0]), rat_v(&[1, 1])], &[], &[]).unwrap(), int(1)),
            (Polyhedron::from_generators(2, &[rat_v(&[0, 0]), rat_v(&[0, 1]), rat_v(&[1, 1])], &[], &[]).unwrap(), int(1)),
        ],
    )
    .unwrap();
    let multi_segment = WeightedComplex::new(
        2,
        1,
        vec![(segment(&[0, 0], &[1, 2]), int(2)), (segment(&[1, 2], &[3, 1]), int(1)), (segment(&[-2, 0], &[0, 0]), int(5))],
    )
    .unwrap();
    let multi_segment3 = WeightedComplex::new(
        3,
        1,
        vec![(segment(&[0, 0, 0], &[1, 1, 2]), int(3)), (segment(&[1, 1, 2], &[1, -1, 0]), int(-2))],
    )
    .unwrap();
    let tilted_square = Polyhedron::from_generators(
        3,
        &[rat_v(&[0, 0, 0]), rat_v(&[1, 1, 0]), rat_v(&[0, 1, 2]), rat_v(&[1, 2, 2])],
        &[],
        &[],
    )
    .unwrap();
    vec![
        ("cube".into(), one(unit_cube(3))),
        ("simplex in R^3".into(), one(simplex3)),
        ("triangle in R^2".into(), one(simplex2)),
        ("subdivided square".into(), subdivided),
        ("triangulated square".into(), triangles),
        ("weighted multi-segment in R^2".into(), multi_segment),
        ("weighted multi-segment in R^3".into(), multi_segment3),
        ("parallelogram in R^3".into(), one(tilted_square)),
        ("box in R^2".into(), one(Polyhedron::cuboid(&[rat(-1, 2), rat(0, 1)], &[rat(1, 1), rat(5, 3)]).unwrap())),
    ]
}

fn rat_v(v: &[i64]) -> RatVec {
    v.iter().map(|&x| rat(x, 1)).collect()
}

pub fn stokes(seed: u64, cases: usize) -> Outcome {
    let mut rng = rng(seed);
    let corpus = stokes_corpus();
    let mut nonzero = 0;
    for k in 0..cases {
        let (name, c) = &corpus[k % corpus.len()];
        let (r, n) = (c.ambient_dim(), c.dim());
        let ep = form(&mut rng, r, n - 1, n, 4);
        let es = form(&mut rng, r, n, n - 1, 4);
        let cell = c.weighted_cells().next().unwrap().0;
        let single = stokes_residual(cell, &ep, &es).map_err(|e| e.to_string())?;
        let whole = stokes_residual(c, &ep, &es).map_err(|e| e.to_string())?;
        let zero = (Rational::zero(), Rational::zero());
        if single != zero || whole != zero {
            return fail(format!("{name}: residuals {single:?} / {whole:?} for η'={ep}, η''={es}"));
        }
        if !integrate_complex_boundary(c, &ep).map_err(|e| e.to_string())?.is_zero() {
            nonzero += 1;
        }
    }
    Ok(format!("{cases} random form pairs of degree <= 4 over {} domains ({nonzero} with nonzero boundary integral)", corpus.len()))
}

// Green

fn symmetric(rng: &mut impl Rng, r: usize, p: usize) -> Superform {
    loop {
        let a = form(rng, r, p, p, 3);
        let s = &a + &a.swap();
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn green(seed: u64, cases: usize) -> Outcome {
    let mut rng = rng(seed);
    let square = unit_cube(2);
    let cube = unit_cube(3);
    for k in 0..cases {
        let (sigma, p) = if k % 2 == 0 { (&square, k % 4 / 2) } else { (&cube, k % 3) };
        let n = sigma.dim();
        let q = n - 1 - p;
        let alpha = symmetric(&mut rng, n, p);
        let beta = symmetric(&mut rng, n, q);
        let res = green_residual(sigma, &alpha, &beta).map_err(|e| e.to_string())?;
        if !res.is_zero() {
            return fail(format!("residual {res} on dimension {n} for α={alpha}, β={beta}"));
        }
    }
    Ok(format!("{cases} symmetric pairs on the square and the cube"))
}

// transformation formula

pub fn transformation(seed: u64, cases: usize) -> Outcome {
    let mut rng = rng(seed);
    let mut unimodular_cases = 0;
    let mut nonzero = 0;
    for k in 0..cases {
        let n = 1 + k % 3;
        let m = if k % 3 == 0 {
            unimodular_cases += 1;
            unimodular(&mut rng, n, 6)
        } else {
            nonsingular(&mut rng, n, 3)
        };
        let f = IntegralAffineMap::new(m.clone(), point(&mut rng, n, 2));
        let v = polytope(&mut rng, n);
        let all: Vec<usize> = (0..n).collect();
        let a = Superform::term(n, &all, &all, polynomial(&mut rng, n, 3, 3));
        let lhs = integrate_polytope(&v, &a.pullback(&f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let det = Rational::from_integer(m.det().abs());
        let rhs = det * integrate_polytope(&v.image(&f), &a).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return fail(format!("∫ F*α = {lhs} but |det F| ∫ α = {rhs} for F = {m:?}"));
        }
        if !lhs.is_zero() {
            nonzero += 1;
        }
    }
    Ok(format!("{cases} integer maps ({unimodular_cases} unimodular, {nonzero} nonzero integrals)"))
}

// balancing and closedness

fn faces_of<T>(items: &[T], face: impl Fn(&T) -> &Polyhedron) -> BTreeSet<Polyhedron> {
    items.iter().map(|x| face(x).clone()).collect()
}

fn agree(c: &WeightedComplex) -> std::result::Result<(BTreeSet<Polyhedron>, BTreeSet<Polyhedron>), String> {
    let b = check_balancing(c).map_err(|e| e.to_string())?;
    let w = closedness_witness(c).map_err(|e| e.to_string())?;
    for x in &w {
        if x.value.is_zero() {
            return fail("a certificate form evaluates to zero");
        }
    }
    Ok((faces_of(&b, |v| &v.face), faces_of(&w, |v| &v.face)))
}

pub fn balancing_closedness(seed: u64, cycles: usize) -> Outcome {
    let mut rng = rng(seed);
    let mut mutated_faces = 0;
    for k in 0..cycles {
        let r = if k % 3 == 2 { 3 } else { 2 };
        let c = hypersurface_cycle(&mut rng, r);
        let (b, w) = agree(&c)?;
        if !b.is_empty() || !w.is_empty() {
            return fail(format!("hypersurface cycle in R^{r} flagged at {} / {} faces", b.len(), w.len()));
        }
        let cells = weight(&c);
        let (sigma, m) = &cells[rng.gen_range(0..cells.len())];
        let delta = if rng.gen_bool(0.5) { 1 } else { -1 };
        let broken = c.with_weight(sigma, m + int(delta)).map_err(|e| e.to_string())?;
        let expected: BTreeSet<Polyhedron> = sigma.facet_faces().iter().cloned().collect();
        let (b, w) = agree(&broken)?;
        if b != w {
            return fail(format!("balancing flags {} faces, closedness {}", b.len(), w.len()));
        }
        if b != expected {
            return fail(format!("mutation expected to fail at {} faces, flagged {}", expected.len(), b.len()));
        }
        mutated_faces += b.len();
    }
    Ok(format!("{cycles} balanced cycles and {cycles} mutations ({mutated_faces} failing faces, sets match)"))
}

// projection formula

fn full_form(rng: &mut impl Rng, s: usize, n: usize) -> Superform {
    form(rng, s, n, n, 2)
}

pub fn projection(seed: u64, cases: usize) -> Outcome {
    let double = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[2]]));
    let seg01 = WeightedComplex::new(1, 1, vec![(segment(&[0], &[1]), int(1))]).unwrap();
    let dxdx = Superform::term(1, &[0], &[0], Polynomial::one(1));
    let w02 = Polyhedron::cuboid(&[rat(0, 1)], &[rat(2, 1)]).unwrap();
    let (l, r) = projection_check(&double, &seg01, &dxdx, &w02).map_err(|e| e.to_string())?;
    if (l.clone(), r.clone()) != (rat(4, 1), rat(4, 1)) {
        return fail(format!("×2 segment: sides {l} and {r}, expected 4 and 4"));
    }
    let first = IntegralAffineMap::linear_map(IntMatrix::from_i64(&[&[1, 0]]));
    let diag = WeightedComplex::new(2, 1, vec![(segment(&[0, 0], &[1, 1]), int(1))]).unwrap();
    let xdx = Superform::term(1, &[0], &[0], Polynomial::var(1, 0));
    let (l, r) = projection_check(&first, &diag, &xdx, &window(1, 2)).map_err(|e| e.to_string())?;
    if l != r {
        return fail(format!("diagonal projection: sides {l} and {r}"));
    }
    let mut rng = rng(seed);
    let mut nonzero = 0;
    for k in 0..cases {
        let r = 2 + k % 2;
        let c = if k % 4 == 1 { bounded_complex(&mut rng, r) } else { hypersurface_cycle(&mut rng, r) };
        let n = c.dim();
        let s = rng.gen_range(n..=r + 1).max(1);
        let f = IntegralAffineMap::new(int_matrix(&mut rng, s, r, 2), point(&mut rng, s, 1));
        let a = full_form(&mut rng, s, n);
        let w = window(s, rng.gen_range(1..=3));
        let (lhs, rhs) = projection_check(&f, &c, &a, &w).map_err(|e| format!("case {k}: {e}"))?;
        if lhs != rhs {
            return fail(format!("case {k}: ∫ over the push-forward = {lhs}, ∫ of the pullback = {rhs}"));
        }
        if !lhs.is_zero() {
            nonzero += 1;
        }
    }
    Ok(format!("×2 segment (4 = 4), diagonal projection, {cases} random triples ({nonzero} nonzero)"))
}

// push-forward

pub fn pushforward_balancing(seed: u64, pairs: usize) -> Outcome {
    let mut rng = rng(seed);
    let mut nonzero = 0;
    for k in 0..pairs {
        let r = if k % 4 == 3 { 3 } else { 2 };
        let c = hypersurface_cycle(&mut rng, r);
        let s = rng.gen_range(c.dim().max(1)..=3);
        let f = IntegralAffineMap::new(int_matrix(&mut rng, s, r, 2), point(&mut rng, s, 1));
        let img = pushforward(&f, &c).map_err(|e| e.to_string())?;
        if !check_balancing(&img).map_err(|e| e.to_string())?.is_empty() {
            return fail(format!("pair {k}: push-forward along {:?} is not balanced", f.linear()));
        }
        if !img.is_zero() {
            nonzero += 1;
        }
        let t = rng.gen_range(c.dim().max(1)..=3);
        let g = IntegralAffineMap::new(int_matrix(&mut rng, t, s, 2), point(&mut rng, t, 1));
        let composed = pushforward(&g.compose(&f), &c).map_err(|e| e.to_string())?;
        let iterated = pushforward(&g, &img).map_err(|e| e.to_string())?;
        if !composed.equivalent(&iterated) {
            return fail(format!("pair {k}: (g∘f)_* differs from g_* f_*"));
        }
    }
    Ok(format!("{pairs} pairs balanced ({nonzero} nonzero images), functoriality holds on all"))
}

// calculus identities

pub fn calculus(seed: u64, forms: usize) -> Outcome {
    let mut rng = rng(seed);
    for k in 0..forms {
        let r = 1 + k % 4;
        let (p, q) = (rng.gen_range(0..=r), rng.gen_range(0..=r));
        let a = form(&mut rng, r, p, q, 4);
        let zero = |x: &Superform| x.is_zero();
        if !zero(&a.d_prime().d_prime()) || !zero(&a.d_second().d_second()) {
            return fail(format!("d'² or d''² nonzero on {a}"));
        }
        if a.d_prime().d_second() != -a.d_second().d_prime() {
            return fail(format!("d'd'' != -d''d' on {a}"));
        }
        let (p2, q2) = (rng.gen_range(0..=r - p), rng.gen_range(0..=r - q));
        let b = form(&mut rng, r, p2, q2, 2);
        let ab = a.wedge(&b).map_err(|e| e.to_string())?;
        let ba = b.wedge(&a).map_err(|e| e.to_string())?;
        if ab != ba.scale(&sign((p + q) * (p2 + q2))) {
            return fail(format!("graded commutativity fails for {a} and {b}"));
        }
        let s = 1 + rng.gen_range(0..4);
        let f = IntegralAffineMap::new(int_matrix(&mut rng, r, s, 2), point(&mut rng, r, 2));
        let pb = |x: &Superform| x.pullback(&f).map_err(|e| e.to_string());
        if pb(&a.d_prime())? != pb(&a)?.d_prime() || pb(&a.d_second())? != pb(&a)?.d_second() {
            return fail(format!("pullback does not commute with d on {a}"));
        }
    }
    Ok(format!("{forms} random forms with r <= 4"))
}

// lattice oracles

/// Integer points of `Z^k` in the half-open parallelepiped spanned by the rows of `m`.
pub fn parallelepiped_points(m: &[IntVec]) -> usize {
    let k = m.len();
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let inv = tropcalc::linalg::inverse(&rows).expect("nonsingular");
    let mut lo = vec![Int::zero(); k];
    let mut hi = vec![Int::zero(); k];
    for row in m {
        for j in 0..k {
            if row[j].is_negative() {
                lo[j] += &row[j];
            } else {
                hi[j] += &row[j];
            }
        }
    }
    let mut count = 0;
    let mut x = lo.clone();
    loop {
        // t = x m^{-1}, all coordinates in [0,1)
        let t: Vec<Rational> = (0..k)
            .map(|j| (0..k).map(|i| Rational::from_integer(x[i].clone()) * &inv[i][j]).fold(Rational::zero(), |a, b| a + b))
            .collect();
        if t.iter().all(|c| !c.is_negative() && *c < rat(1, 1)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i].clone();
            i += 1;
        }
    }
}

fn small_det_matrix(rng: &mut impl Rng, k: usize, max_index: i64) -> (IntMatrix, Int) {
    loop {
        let m = int_matrix(rng, k, k, 3);
        let d = m.det().abs();
        if !d.is_zero() && d <= int(max_index) {
            return (m, d);
        }
    }
}

pub fn lattice_oracles(seed: u64, cases: usize) -> Outcome {
    let mut rng = rng(seed);
    for c in 0..cases {
        let r = 1 + c % 4;
        let k = rng.gen_range(1..=r);
        // sup = A Z^k with A the first k columns of a unimodular matrix, so sup is saturated.
        let u = unimodular(&mut rng, r, 8);
        let a: Vec<IntVec> = (0..k).map(|j| (0..r).map(|i| u[(i, j)].clone()).collect()).collect();
        let (m, d) = small_det_matrix(&mut rng, k, 20);
        let sub_gens: Vec<IntVec> = (0..k)
            .map(|i| (0..r).map(|t| (0..k).map(|j| &m[(i, j)] * &a[j][t]).fold(Int::zero(), |x, y| x + y)).collect())
            .collect();
        let mut redundant = sub_gens.clone();
        redundant.push(sub_gens.iter().fold(vec![Int::zero(); r], |acc, g| acc.iter().zip(g).map(|(x, y)| x + y).collect()));
        let sub = Lattice::from_generators(r, &redundant);
        let sup = Lattice::from_generators(r, &a);
        let brute = parallelepiped_points(&m.row_vecs());
        if Int::from(brute) != d {
            return fail(format!("case {c}: brute-force count {brute} disagrees with |det| {d}"));
        }
        match lattice_index(&sub, &sup).map_err(|e| e.to_string())? {
            LatticeIndex::Finite(i) if i == d => {}
            other => return fail(format!("case {c}: lattice_index {other:?}, brute force {brute}")),
        }
        let sat = saturate(&sub);
        if sat != sup || saturate(&sat) != sat {
            return fail(format!("case {c}: saturation differs from the saturated super-lattice"));
        }
        if lattice_index(&sub, &sat).map_err(|e| e.to_string())? != LatticeIndex::Finite(d.clone()) {
            return fail(format!("case {c}: [sat(l) : l] is not {d}"));
        }
        // every point of sup in a box lies in sub after scaling by the index
        for _ in 0..5 {
            let coeffs: Vec<i64> = (0..k).map(|_| rng.gen_range(-3..=3)).collect();
            let v: IntVec = (0..r).map(|t| (0..k).map(|j| &a[j][t] * coeffs[j]).fold(Int::zero(), |x, y| x + y)).collect();
            let dv: IntVec = v.iter().map(|x| x * &d).collect();
            if !sat.contains(&v) || !sub.contains(&dv) {
                return fail(format!("case {c}: membership of {v:?} inconsistent"));
            }
        }
    }
    Ok(format!("{cases} sublattices with index <= 20, r <= 4"))
}

// normalization

pub fn normalization() -> Outcome {
    for r in 1..=3 {
        let mut a = Superform::constant(r, rat(1, 1));
        for i in 0..r {
            a = a
                .wedge(&Superform::dprime_x(r, i))
                .and_then(|x| x.wedge(&Superform::dsecond_x(r, i)))
                .map_err(|e| e.to_string())?;
        }
        let v = integrate_polytope(&unit_cube(r), &a).map_err(|e| e.to_string())?;
        if v != rat(1, 1) {
            return fail(format!("r = {r}: integral {v}"));
        }
    }
    Ok("∫ over [0,1]^r of d'x1∧d''x1∧...∧d'xr∧d''xr = 1 for r = 1, 2, 3".into())
}

// command line

pub fn corpus_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data"))
}

fn run_bin(bin: &Path, args: &[&str]) -> std::result::Result<(i32, String), String> {
    let out = Command::new(bin).args(args).current_dir(corpus_dir()).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

pub fn cli(bin: &Path) -> Outcome {
    let mut docs = 0;
    for entry in std::fs::read_dir(corpus_dir()).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let d = parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let canonical = emit(&d);
        let again = parse(&canonical).map_err(|e| format!("{}: {e}", path.display()))?;
        if again != d || emit(&again) != canonical {
            return fail(format!("{}: round trip changed the document", path.display()));
        }
        let (code, _) = run_bin(bin, &["validate", path.to_str().unwrap()])?;
        let expected = match &d {
            Document::Complex(c) if !tropcalc::polyhedra::validate_complex(c).is_empty() => 1,
            _ => 0,
        };
        if code != expected {
            return fail(format!("validate {}: exit {code}, expected {expected}", path.display()));
        }
        docs += 1;
    }
    let expect = |args: &[&str], code: i32| -> std::result::Result<String, String> {
        let (got, out) = run_bin(bin, args)?;
        if got != code {
            return fail(format!("`{}` exited {got}, expected {code}", args.join(" ")));
        }
        Ok(out)
    };
    let out = expect(&["check-balancing", "line.json"], 0)?;
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    if v["violations"] != serde_json::json!([]) {
        return fail("check-balancing on the tropical line reported violations");
    }
    expect(&["check-balancing", "broken_line.json"], 1)?;
    let out = expect(&["stokes", "square.json", "etap.json", "etas.json"], 0)?;
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    if v["residuals"] != serde_json::json!(["0", "0"]) {
        return fail(format!("stokes residuals {}", v["residuals"]));
    }
    let out = expect(&["pushforward", "times2.json", "segment.json"], 0)?;
    match parse(&out).map_err(|e| e.to_string())? {
        Document::WeightedComplex(c) if c.weighted_cells().all(|(_, m)| *m == int(2)) && c.num_cells() == 1 => {}
        _ => return fail("pushforward of the segment under ×2 is not a single cell of weight 2"),
    }
    expect(&["check-balancing", "invalid/bad_halfspace.json"], 2)?;
    expect(&["check-balancing", "invalid/truncated.json"], 2)?;
    expect(&["check-balancing", "missing.json"], 2)?;
    expect(&["frobnicate"], 2)?;
    Ok(format!("{docs} corpus documents round-trip; exit statuses 0/1/2 as specified"))
}
