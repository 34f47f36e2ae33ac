//! `trop/1` JSON documents.
//!
//! Every document is an object with `"format": "trop/1"` and a `"type"` tag.
//! Rationals are strings `"p/q"` (plain integers are also accepted on input);
//! integers are JSON numbers, or decimal strings when they exceed 64 bits.
//! Form indices are 1-based. Emitted objects have sorted keys.

use std::fmt;

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::cycle::WeightedComplex;
use crate::hypersurface::{Convention, TropicalPolynomial};
use crate::lattice::IntMatrix;
use crate::num::{parse_rational, Int, IntVec, RatVec, Rational};
use crate::polyhedra::{Complex, Halfspace, Polyhedron};
use crate::superform::{Polynomial, Superform};
use crate::superform::IntegralAffineMap;

pub const FORMAT: &str = "trop/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DocumentError {
    Syntax { line: usize, column: usize, message: String },
    Schema { field: String, message: String },
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Syntax { line, column, message } => {
                write!(f, "syntax error at line {line}, column {column}: {message}")
            }
            DocumentError::Schema { field, message } => write!(f, "schema error in field `{field}`: {message}"),
        }
    }
}

impl std::error::Error for DocumentError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Polyhedron(Polyhedron),
    Complex(Complex),
    WeightedComplex(WeightedComplex),
    Superform(Superform),
    Map(IntegralAffineMap),
    TropicalPolynomial(TropicalPolynomial),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Polyhedron(_) => "polyhedron",
            Document::Complex(_) => "complex",
            Document::WeightedComplex(_) => "weighted-complex",
            Document::Superform(_) => "superform",
            Document::Map(_) => "map",
            Document::TropicalPolynomial(_) => "tropical-polynomial",
        }
    }
}

type Res<T> = std::result::Result<T, DocumentError>;

fn schema<T>(field: &str, message: impl Into<String>) -> Res<T> {
    Err(DocumentError::Schema {
        field: field.to_string(),
        message: message.into(),
    })
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn at(path: &str, k: usize) -> String {
    format!("{path}[{k}]")
}

pub fn parse(text: &str) -> Res<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_value(&value)
}

pub fn emit(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(doc)).expect("serializable");
    s.push('\n');
    s
}

pub fn from_value(value: &Value) -> Res<Document> {
    let obj = object(value, "")?;
    match obj.get("format") {
        Some(Value::String(s)) if s == FORMAT => {}
        Some(_) => return schema("format", format!("expected \"{FORMAT}\"")),
        None => return schema("format", "missing"),
    }
    let kind = match obj.get("type") {
        Some(Value::String(s)) => s.as_str(),
        Some(_) => return schema("type", "expected a string"),
        None => return schema("type", "missing"),
    };
    Ok(match kind {
        "polyhedron" => Document::Polyhedron(polyhedron(value, "", None)?),
        "complex" => Document::Complex(complex(value, "")?),
        "weighted-complex" => Document::WeightedComplex(weighted_complex(value, "")?),
        "superform" => Document::Superform(superform(value, "")?),
        "map" => Document::Map(map(value, "")?),
        "tropical-polynomial" => Document::TropicalPolynomial(tropical_polynomial(value, "")?),
        other => return schema("type", format!("unknown document type \"{other}\"")),
    })
}

pub fn to_value(doc: &Document) -> Value {
    let mut body = match doc {
        Document::Polyhedron(p) => polyhedron_value(p),
        Document::Complex(c) => complex_value(c),
        Document::WeightedComplex(c) => weighted_complex_value(c),
        Document::Superform(a) => superform_value(a),
        Document::Map(f) => map_value(f),
        Document::TropicalPolynomial(p) => tropical_polynomial_value(p),
    };
    let obj = body.as_object_mut().expect("object");
    obj.insert("format".into(), json!(FORMAT));
    obj.insert("type".into(), json!(doc.kind()));
    body
}

// primitive values

fn object<'a>(v: &'a Value, path: &str) -> Res<&'a Map<String, Value>> {
    v.as_object().map_or_else(|| schema(path, "expected an object"), Ok)
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Res<&'a Value> {
    obj.get(key).map_or_else(|| schema(&join(path, key), "missing"), Ok)
}

fn array<'a>(v: &'a Value, path: &str) -> Res<&'a Vec<Value>> {
    v.as_array().map_or_else(|| schema(path, "expected an array"), Ok)
}

fn usize_of(v: &Value, path: &str) -> Res<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .map_or_else(|| schema(path, "expected a nonnegative integer"), Ok)
}

fn integer(v: &Value, path: &str) -> Res<Int> {
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(x), _) => Ok(Int::from(x)),
            (_, Some(x)) => Ok(Int::from(x)),
            _ => schema(path, format!("expected an integer, got {n}")),
        },
        Value::String(s) => s
            .trim()
            .parse::<Int>()
            .map_or_else(|_| schema(path, format!("expected an integer, got \"{s}\"")), Ok),
        _ => schema(path, "expected an integer"),
    }
}

fn rational(v: &Value, path: &str) -> Res<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_or_else(|| schema(path, format!("expected a rational \"p/q\", got \"{s}\"")), Ok),
        Value::Number(_) => integer(v, path).map(Rational::from_integer),
        _ => schema(path, "expected a rational \"p/q\""),
    }
}

fn int_vector(v: &Value, path: &str, len: Option<usize>) -> Res<IntVec> {
    let items = array(v, path)?;
    if let Some(n) = len {
        if items.len() != n {
            return schema(path, format!("expected {n} entries, got {}", items.len()));
        }
    }
    items.iter().enumerate().map(|(k, x)| integer(x, &at(path, k))).collect()
}

fn rat_vector(v: &Value, path: &str, len: usize) -> Res<RatVec> {
    let items = array(v, path)?;
    if items.len() != len {
        return schema(path, format!("expected {len} entries, got {}", items.len()));
    }
    items.iter().enumerate().map(|(k, x)| rational(x, &at(path, k))).collect()
}

fn int_value(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn rat_value(x: &Rational) -> Value {
    json!(x.to_string())
}

fn int_vec_value(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

fn rat_vec_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat_value).collect())
}

// polyhedra

fn halfspace(v: &Value, path: &str, ambient: usize) -> Res<Halfspace> {
    let obj = object(v, path)?;
    let u = int_vector(field(obj, path, "u")?, &join(path, "u"), Some(ambient))?;
    let c = rational(field(obj, path, "c")?, &join(path, "c"))?;
    Ok(Halfspace::new(u, c))
}

fn halfspaces(obj: &Map<String, Value>, path: &str, key: &str, ambient: usize) -> Res<Vec<Halfspace>> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(v) => {
            let p = join(path, key);
            array(v, &p)?
                .iter()
                .enumerate()
                .map(|(k, h)| halfspace(h, &at(&p, k), ambient))
                .collect()
        }
    }
}

fn ambient_of(obj: &Map<String, Value>, path: &str, expected: Option<usize>) -> Res<usize> {
    let key = "ambient_dim";
    let r = match (obj.get(key), expected) {
        (Some(v), _) => usize_of(v, &join(path, key))?,
        (None, Some(r)) => return Ok(r),
        (None, None) => return schema(&join(path, key), "missing"),
    };
    match expected {
        Some(e) if e != r => schema(&join(path, key), format!("expected {e}, got {r}")),
        _ => Ok(r),
    }
}

/// H-representation (`equations`, `halfspaces`: `<u,x> = c`, `<u,x> <= c`)
/// or V-representation (`points`, `rays`, `lines`); not both.
fn polyhedron(v: &Value, path: &str, ambient: Option<usize>) -> Res<Polyhedron> {
    let obj = object(v, path)?;
    let r = ambient_of(obj, path, ambient)?;
    let has_v = ["points", "rays", "lines"].iter().any(|k| obj.contains_key(*k));
    let has_h = ["equations", "halfspaces"].iter().any(|k| obj.contains_key(*k));
    if has_v && has_h {
        return schema(path, "give either `equations`/`halfspaces` or `points`/`rays`/`lines`, not both");
    }
    if has_v {
        let points = match obj.get("points") {
            Some(pts) => {
                let p = join(path, "points");
                array(pts, &p)?
                    .iter()
                    .enumerate()
                    .map(|(k, x)| rat_vector(x, &at(&p, k), r))
                    .collect::<Res<Vec<_>>>()?
            }
            None => return schema(&join(path, "points"), "missing"),
        };
        let dirs = |key: &str| -> Res<Vec<IntVec>> {
            match obj.get(key) {
                None => Ok(Vec::new()),
                Some(v) => {
                    let p = join(path, key);
                    array(v, &p)?
                        .iter()
                        .enumerate()
                        .map(|(k, x)| int_vector(x, &at(&p, k), Some(r)))
                        .collect()
                }
            }
        };
        let rays = dirs("rays")?;
        let lines = dirs("lines")?;
        return Polyhedron::from_generators(r, &points, &rays, &lines)
            .map_or_else(|| schema(&join(path, "points"), "at least one point is required"), Ok);
    }
    let eqs = halfspaces(obj, path, "equations", r)?;
    let ineqs = halfspaces(obj, path, "halfspaces", r)?;
    let mut all = ineqs;
    for e in eqs {
        all.push(e.negated());
        all.push(e);
    }
    Polyhedron::from_halfspaces(r, &all).map_or_else(|| schema(path, "the polyhedron is empty"), Ok)
}

fn polyhedron_value(p: &Polyhedron) -> Value {
    let hs = |v: &[Halfspace]| -> Value {
        Value::Array(v.iter().map(|h| json!({"u": int_vec_value(&h.u), "c": rat_value(&h.c)})).collect())
    };
    json!({
        "ambient_dim": p.ambient_dim(),
        "equations": hs(p.equations()),
        "halfspaces": hs(p.facets()),
    })
}

fn cell_value(p: &Polyhedron) -> Value {
    let mut v = polyhedron_value(p);
    v.as_object_mut().expect("object").remove("ambient_dim");
    v
}

fn complex(v: &Value, path: &str) -> Res<Complex> {
    let obj = object(v, path)?;
    let r = ambient_of(obj, path, None)?;
    let p = join(path, "cells");
    let cells = array(field(obj, path, "cells")?, &p)?
        .iter()
        .enumerate()
        .map(|(k, c)| polyhedron(c, &at(&p, k), Some(r)))
        .collect::<Res<Vec<_>>>()?;
    Ok(Complex::new(r, cells))
}

fn complex_value(c: &Complex) -> Value {
    json!({
        "ambient_dim": c.ambient_dim(),
        "cells": Value::Array(c.cells().iter().map(cell_value).collect()),
    })
}

fn weighted_complex(v: &Value, path: &str) -> Res<WeightedComplex> {
    let obj = object(v, path)?;
    let r = ambient_of(obj, path, None)?;
    let n = usize_of(field(obj, path, "dim")?, &join(path, "dim"))?;
    let p = join(path, "cells");
    let mut cells = Vec::new();
    for (k, c) in array(field(obj, path, "cells")?, &p)?.iter().enumerate() {
        let cp = at(&p, k);
        let co = object(c, &cp)?;
        let cell = polyhedron(field(co, &cp, "polyhedron")?, &join(&cp, "polyhedron"), Some(r))?;
        let m = integer(field(co, &cp, "weight")?, &join(&cp, "weight"))?;
        cells.push((cell, m));
    }
    WeightedComplex::new(r, n, cells).or_else(|e| schema(&p, e.to_string()))
}

fn weighted_complex_value(c: &WeightedComplex) -> Value {
    let cells = c
        .weighted_cells()
        .map(|(p, m)| json!({"polyhedron": cell_value(p), "weight": int_value(m)}))
        .collect();
    json!({
        "ambient_dim": c.ambient_dim(),
        "dim": c.dim(),
        "cells": Value::Array(cells),
    })
}

// forms and maps

fn polynomial(v: &Value, path: &str, vars: usize) -> Res<Polynomial> {
    let mut poly = Polynomial::zero(vars);
    for (k, t) in array(v, path)?.iter().enumerate() {
        let tp = at(path, k);
        let to = object(t, &tp)?;
        let ep = join(&tp, "exponent");
        let exp = int_vector(field(to, &tp, "exponent")?, &ep, Some(vars))?
            .iter()
            .map(|e| e.to_u32())
            .collect::<Option<Vec<u32>>>()
            .map_or_else(|| schema(&ep, "exponents must be nonnegative"), Ok)?;
        let c = rational(field(to, &tp, "c")?, &join(&tp, "c"))?;
        poly.add_term(exp, c);
    }
    Ok(poly)
}

fn polynomial_value(f: &Polynomial) -> Value {
    Value::Array(
        f.terms()
            .map(|(e, c)| json!({"exponent": Value::Array(e.iter().map(|x| json!(x)).collect()), "c": rat_value(c)}))
            .collect(),
    )
}

fn indices(v: &Value, path: &str, ambient: usize, len: usize) -> Res<Vec<usize>> {
    let items = array(v, path)?;
    if items.len() != len {
        return schema(path, format!("expected {len} indices, got {}", items.len()));
    }
    items
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let i = usize_of(x, &at(path, k))?;
            if i == 0 || i > ambient {
                schema(&at(path, k), format!("index {i} out of range 1..={ambient}"))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// `terms`: `{i, j, coefficient}` with 1-based `i`, `j` read as
/// `f d'x_{i_1}...d'x_{i_p} d''x_{j_1}...d''x_{j_q}`.
fn superform(v: &Value, path: &str) -> Res<Superform> {
    let obj = object(v, path)?;
    let r = ambient_of(obj, path, None)?;
    if r > crate::superform::MAX_AMBIENT {
        return schema(&join(path, "ambient_dim"), format!("at most {}", crate::superform::MAX_AMBIENT));
    }
    let p = usize_of(field(obj, path, "p")?, &join(path, "p"))?;
    let q = usize_of(field(obj, path, "q")?, &join(path, "q"))?;
    if p > r || q > r {
        return schema(path, format!("bidegree ({p}, {q}) exceeds the ambient dimension {r}"));
    }
    let mut form = Superform::zero(r, p, q);
    let tp = join(path, "terms");
    for (k, t) in array(field(obj, path, "terms")?, &tp)?.iter().enumerate() {
        let kp = at(&tp, k);
        let to = object(t, &kp)?;
        let i = indices(field(to, &kp, "i")?, &join(&kp, "i"), r, p)?;
        let j = indices(field(to, &kp, "j")?, &join(&kp, "j"), r, q)?;
        let f = polynomial(field(to, &kp, "coefficient")?, &join(&kp, "coefficient"), r)?;
        form = &form + &Superform::term(r, &i, &j, f);
    }
    Ok(form)
}

fn superform_value(a: &Superform) -> Value {
    let (p, q) = a.bidegree();
    let one_based = |v: &[usize]| Value::Array(v.iter().map(|i| json!(i + 1)).collect());
    let terms = a
        .components()
        .map(|(i, j, f)| json!({"i": one_based(&i), "j": one_based(&j), "coefficient": polynomial_value(f)}))
        .collect();
    json!({
        "ambient_dim": a.ambient_dim(),
        "p": p,
        "q": q,
        "terms": Value::Array(terms),
    })
}

/// `x ↦ linear·x + translate`, `linear` given as `target_dim` rows.
fn map(v: &Value, path: &str) -> Res<IntegralAffineMap> {
    let obj = object(v, path)?;
    let n = usize_of(field(obj, path, "source_dim")?, &join(path, "source_dim"))?;
    let m = usize_of(field(obj, path, "target_dim")?, &join(path, "target_dim"))?;
    let lp = join(path, "linear");
    let rows = array(field(obj, path, "linear")?, &lp)?;
    if rows.len() != m {
        return schema(&lp, format!("expected {m} rows, got {}", rows.len()));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(k, row)| int_vector(row, &at(&lp, k), Some(n)))
        .collect::<Res<Vec<_>>>()?;
    let translate = match obj.get("translate") {
        Some(t) => rat_vector(t, &join(path, "translate"), m)?,
        None => vec![Rational::from_integer(Int::from(0)); m],
    };
    Ok(IntegralAffineMap::new(IntMatrix::from_rows(n, &rows), translate))
}

fn map_value(f: &IntegralAffineMap) -> Value {
    let rows = f.linear().row_vecs().iter().map(|r| int_vec_value(r)).collect();
    json!({
        "source_dim": f.source_dim(),
        "target_dim": f.target_dim(),
        "linear": Value::Array(rows),
        "translate": rat_vec_value(f.translate()),
    })
}

fn tropical_polynomial(v: &Value, path: &str) -> Res<TropicalPolynomial> {
    let obj = object(v, path)?;
    let r = ambient_of(obj, path, None)?;
    let convention = match obj.get("convention") {
        None => Convention::Min,
        Some(Value::String(s)) if s == "min" => Convention::Min,
        Some(Value::String(s)) if s == "max" => Convention::Max,
        Some(_) => return schema(&join(path, "convention"), "expected \"min\" or \"max\""),
    };
    let tp = join(path, "terms");
    let terms = array(field(obj, path, "terms")?, &tp)?
        .iter()
        .enumerate()
        .map(|(k, t)| {
            let kp = at(&tp, k);
            let to = object(t, &kp)?;
            let e = int_vector(field(to, &kp, "exponent")?, &join(&kp, "exponent"), Some(r))?;
            let c = rational(field(to, &kp, "c")?, &join(&kp, "c"))?;
            Ok((e, c))
        })
        .collect::<Res<Vec<_>>>()?;
    TropicalPolynomial::new(r, terms, convention).or_else(|e| schema(&tp, e.to_string()))
}

fn tropical_polynomial_value(p: &TropicalPolynomial) -> Value {
    let terms = p
        .terms()
        .iter()
        .map(|(e, c)| json!({"exponent": int_vec_value(e), "c": rat_value(c)}))
        .collect();
    json!({
        "ambient_dim": p.ambient_dim(),
        "convention": match p.convention() {
            Convention::Min => "min",
            Convention::Max => "max",
        },
        "terms": Value::Array(terms),
    })
}

/// Body of a polyhedron inside a report.
pub fn polyhedron_report(p: &Polyhedron) -> Value {
    polyhedron_value(p)
}

pub fn rational_report(x: &Rational) -> Value {
    rat_value(x)
}

pub fn int_vec_report(v: &[Int]) -> Value {
    int_vec_value(v)
}

pub fn rat_vec_report(v: &[Rational]) -> Value {
    rat_vec_value(v)
}

pub fn superform_report(a: &Superform) -> Value {
    let mut v = superform_value(a);
    v.as_object_mut().expect("object").insert("format".into(), json!(FORMAT));
    v.as_object_mut().expect("object").insert("type".into(), json!("superform"));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat, rat_vec};

    fn doc(body: Value) -> String {
        let mut v = body;
        v.as_object_mut().unwrap().insert("format".into(), json!(FORMAT));
        v.to_string()
    }

    #[test]
    fn polyhedron_round_trip() {
        let text = doc(json!({
            "type": "polyhedron",
            "ambient_dim": 2,
            "halfspaces": [
                {"u": [-1, 0], "c": "0"}, {"u": [1, 0], "c": "1/3"},
                {"u": [0, -1], "c": "0"}, {"u": [0, 1], "c": "2"}, {"u": [1, 1], "c": "10"}
            ]
        }));
        let d = parse(&text).unwrap();
        let Document::Polyhedron(p) = &d else { panic!() };
        assert_eq!(p.facets().len(), 4);
        assert!(p.contains_point(&[rat(1, 3), rat(2, 1)]));
        let again = parse(&emit(&d)).unwrap();
        assert_eq!(again, d);
        assert!(emit(&d).contains("\"1/3\""));
        assert_eq!(emit(&again), emit(&d));
    }

    #[test]
    fn vertex_input_matches_halfspaces() {
        let v = parse(&doc(json!({"type": "polyhedron", "ambient_dim": 1, "points": [["0"], ["2"]]}))).unwrap();
        let h = parse(&doc(json!({"type": "polyhedron", "ambient_dim": 1, "halfspaces": [{"u": [1], "c": 2}, {"u": [-1], "c": 0}]}))).unwrap();
        assert_eq!(v, h);
    }

    #[test]
    fn non_integer_normal_names_u() {
        let text = doc(json!({"type": "polyhedron", "ambient_dim": 1, "halfspaces": [{"u": ["1/2"], "c": "0"}]}));
        match parse(&text) {
            Err(DocumentError::Schema { field, .. }) => assert_eq!(field, "halfspaces[0].u[0]"),
            other => panic!("{other:?}"),
        }
        let text = doc(json!({"type": "polyhedron", "ambient_dim": 1, "halfspaces": [{"u": [1.5], "c": "0"}]}));
        assert!(matches!(parse(&text), Err(DocumentError::Schema { field, .. }) if field.ends_with(".u[0]")));
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse("{\n  \"format\": \"trop/1\",\n  oops\n}") {
            Err(DocumentError::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_format_and_unknown_type() {
        assert!(matches!(parse("{\"type\": \"map\"}"), Err(DocumentError::Schema { field, .. }) if field == "format"));
        assert!(matches!(parse(&doc(json!({"type": "cube"}))), Err(DocumentError::Schema { field, .. }) if field == "type"));
    }

    #[test]
    fn superform_round_trip() {
        let f = Polynomial::from_terms(2, [(vec![1, 0], rat(1, 3)), (vec![0, 2], rat(-2, 1))]);
        let a = &Superform::term(2, &[1], &[0], f) + &Superform::term(2, &[0], &[1], Polynomial::one(2));
        let d = Document::Superform(a);
        assert_eq!(parse(&emit(&d)).unwrap(), d);
    }

    #[test]
    fn superform_indices_are_one_based() {
        let text = doc(json!({
            "type": "superform", "ambient_dim": 2, "p": 1, "q": 1,
            "terms": [{"i": [2], "j": [1], "coefficient": [{"exponent": [0, 0], "c": "1"}]}]
        }));
        let Document::Superform(a) = parse(&text).unwrap() else { panic!() };
        assert_eq!(a, Superform::term(2, &[1], &[0], Polynomial::one(2)));
        let bad = text.replace("[2]", "[3]");
        assert!(matches!(parse(&bad), Err(DocumentError::Schema { field, .. }) if field == "terms[0].i[0]"));
    }

    #[test]
    fn weighted_complex_and_map_round_trip() {
        let seg = Polyhedron::cuboid(&rat_vec(&[0]), &rat_vec(&[1])).unwrap();
        let c = WeightedComplex::new(1, 1, vec![(seg, int(3))]).unwrap();
        let d = Document::WeightedComplex(c);
        assert_eq!(parse(&emit(&d)).unwrap(), d);
        let f = IntegralAffineMap::new(IntMatrix::from_i64(&[&[2, 1]]), vec![rat(1, 2)]);
        let d = Document::Map(f);
        assert_eq!(parse(&emit(&d)).unwrap(), d);
    }

    #[test]
    fn big_integers_survive() {
        let big: Int = "123456789012345678901234567890".parse().unwrap();
        let c = WeightedComplex::new(1, 0, vec![(Polyhedron::point(&rat_vec(&[0])), big.clone())]).unwrap();
        let d = Document::WeightedComplex(c);
        let text = emit(&d);
        assert!(text.contains("\"123456789012345678901234567890\""));
        assert_eq!(parse(&text).unwrap(), d);
    }

    #[test]
    fn tropical_polynomial_round_trip() {
        let p = TropicalPolynomial::new(
            2,
            vec![(vec![int(1), int(0)], rat(0, 1)), (vec![int(0), int(1)], rat(1, 2))],
            Convention::Max,
        )
        .unwrap();
        let d = Document::TropicalPolynomial(p);
        assert_eq!(parse(&emit(&d)).unwrap(), d);
    }
}
