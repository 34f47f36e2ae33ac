//! The `tropcalc` command line.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails (unbalanced
//! cycle, nonzero residual, unequal projection sides, invalid complex), 2 on
//! usage or input errors. Inputs are file paths or `-` for standard input.

pub mod document;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::cycle::{
    check_balancing, closedness_witness, current_eval, projection_check, pushforward, Current, CurrentKind, Op,
    WeightedComplex,
};
use crate::hypersurface::corner_locus;
use crate::integrate::{green_residual, integrate_complex, integrate_complex_boundary, integrate_polytope, stokes_residual};
use crate::num::{int, Rational};
use crate::polyhedra::{refine, truncate, validate_complex, Complex, Polyhedron};
use crate::superform::Superform;
pub use document::{emit, parse, Document, DocumentError, FORMAT};

#[derive(Parser, Debug)]
#[command(name = "tropcalc", version, about = "Exact superform calculus on polyhedra and tropical cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Polyhedron document bounding the region of integration.
    #[arg(long, global = true, value_name = "FILE")]
    window: Option<String>,
    /// Write the output document here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report codimension-one faces where a weighted complex is not balanced.
    CheckBalancing {
        cycle: String,
        /// Also emit a test form certifying non-closedness at each bad face.
        #[arg(long)]
        witness: bool,
    },
    /// Integrate an (n,n)-form over a polyhedron or weighted complex.
    Integrate { domain: String, form: String },
    /// Integrate an (n-1,n)- or (n,n-1)-form over the boundary.
    IntegrateBoundary { domain: String, form: String },
    /// Stokes residuals for an (n-1,n)-form and an (n,n-1)-form.
    Stokes { domain: String, eta_prime: String, eta_second: String },
    /// Green residual for a symmetric pair of forms on a polytope.
    Green { cell: String, alpha: String, beta: String },
    /// Push a weighted complex forward along an integral affine map.
    Pushforward { map: String, cycle: String },
    /// Both sides of the projection formula inside `--window`.
    ProjectionCheck { map: String, cycle: String, form: String },
    /// Evaluate a current (weighted complex or superform) on a form inside `--window`.
    CurrentEval {
        current: String,
        form: String,
        /// Operators applied to the current, outermost first, e.g. `d',d''`.
        #[arg(long, value_delimiter = ',', value_parser = parse_op)]
        ops: Vec<Op>,
    },
    /// Corner locus of a tropical polynomial as a weighted complex.
    Hypersurface { polynomial: String },
    /// Common refinement of two complexes.
    Refine { first: String, second: String },
    /// Intersect a complex or weighted complex with `--window`.
    Truncate { input: String },
    /// Faces of a polyhedron of the given codimension, or all faces.
    Faces {
        polyhedron: String,
        #[arg(long)]
        codim: Option<usize>,
    },
    /// Parse and validate any document.
    Validate { input: String },
}

fn parse_op(s: &str) -> std::result::Result<Op, String> {
    match s.trim() {
        "d'" | "dprime" => Ok(Op::DPrime),
        "d''" | "dsecond" => Ok(Op::DSecond),
        other => Err(format!("unknown operator `{other}`; expected d', d'', dprime or dsecond")),
    }
}

struct Outcome {
    value: Value,
    passed: bool,
}

impl Outcome {
    fn ok(value: Value) -> Outcome {
        Outcome { value, passed: true }
    }
}

fn report(command: &str, fields: Value) -> Value {
    let mut obj = Map::new();
    obj.insert("format".into(), json!(FORMAT));
    obj.insert("type".into(), json!("report"));
    obj.insert("command".into(), json!(command));
    if let Value::Object(f) = fields {
        obj.extend(f);
    }
    Value::Object(obj)
}

fn document_value(d: &Document) -> Value {
    document::to_value(d)
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn text(&mut self, path: &str) -> std::result::Result<String, String> {
        if path == "-" {
            if self.stdin_used {
                return Err("standard input can be read only once".into());
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| format!("<stdin>: {e}"))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }

    fn document(&mut self, path: &str) -> std::result::Result<Document, String> {
        let text = self.text(path)?;
        parse(&text).map_err(|e| format!("{path}: {e}"))
    }
}

fn expect_kind<T>(path: &str, d: Document, pick: impl FnOnce(Document) -> Option<T>, wanted: &str) -> std::result::Result<T, String> {
    let kind = d.kind();
    pick(d).ok_or_else(|| format!("{path}: expected a {wanted} document, got {kind}"))
}

fn polyhedron_doc(inputs: &mut Inputs, path: &str) -> std::result::Result<Polyhedron, String> {
    let d = inputs.document(path)?;
    expect_kind(path, d, |d| if let Document::Polyhedron(p) = d { Some(p) } else { None }, "polyhedron")
}

fn superform_doc(inputs: &mut Inputs, path: &str) -> std::result::Result<Superform, String> {
    let d = inputs.document(path)?;
    expect_kind(path, d, |d| if let Document::Superform(a) = d { Some(a) } else { None }, "superform")
}

fn cycle_doc(inputs: &mut Inputs, path: &str) -> std::result::Result<WeightedComplex, String> {
    let d = inputs.document(path)?;
    expect_kind(path, d, |d| if let Document::WeightedComplex(c) = d { Some(c) } else { None }, "weighted-complex")
}

fn complex_doc(inputs: &mut Inputs, path: &str) -> std::result::Result<Complex, String> {
    let d = inputs.document(path)?;
    expect_kind(path, d, |d| if let Document::Complex(c) = d { Some(c) } else { None }, "complex")
}

/// A polyhedron becomes the weighted complex of itself with weight 1.
fn domain_doc(inputs: &mut Inputs, path: &str) -> std::result::Result<WeightedComplex, String> {
    match inputs.document(path)? {
        Document::Polyhedron(p) => {
            let n = p.dim();
            WeightedComplex::new(p.ambient_dim(), n, vec![(p, int(1))]).map_err(|e| e.to_string())
        }
        Document::WeightedComplex(c) => Ok(c),
        other => Err(format!("{path}: expected a polyhedron or weighted-complex document, got {}", other.kind())),
    }
}

fn windowed(c: WeightedComplex, window: &Option<Polyhedron>) -> crate::Result<WeightedComplex> {
    match window {
        Some(w) => c.truncate(w),
        None => Ok(c),
    }
}

fn rat(x: &Rational) -> Value {
    document::rational_report(x)
}

fn execute(cli: Cli, inputs: &mut Inputs) -> std::result::Result<Outcome, String> {
    let Format::Json = cli.format;
    let window = match &cli.window {
        Some(path) => Some(polyhedron_doc(inputs, path)?),
        None => None,
    };
    let need_window = || window.clone().ok_or_else(|| "this command requires --window".to_string());
    let math = |e: crate::Error| e.to_string();
    Ok(match cli.command {
        Command::CheckBalancing { cycle, witness } => {
            let c = cycle_doc(inputs, &cycle)?;
            let violations = check_balancing(&c).map_err(math)?;
            let list: Vec<Value> = violations
                .iter()
                .map(|v| json!({"face": document::polyhedron_report(&v.face), "excess": document::int_vec_report(&v.excess)}))
                .collect();
            let mut fields = json!({"balanced": violations.is_empty(), "violations": list});
            if witness {
                let ws: Vec<Value> = closedness_witness(&c)
                    .map_err(math)?
                    .iter()
                    .map(|w| {
                        json!({
                            "face": document::polyhedron_report(&w.face),
                            "excess": document::rat_vec_report(&w.excess),
                            "form": document::superform_report(&w.form),
                            "value": rat(&w.value),
                        })
                    })
                    .collect();
                fields["witnesses"] = Value::Array(ws);
            }
            Outcome {
                value: report("check-balancing", fields),
                passed: violations.is_empty(),
            }
        }
        Command::Integrate { domain, form } => {
            let d = inputs.document(&domain)?;
            let a = superform_doc(inputs, &form)?;
            let value = match (d, &window) {
                (Document::Polyhedron(p), None) => integrate_polytope(&p, &a).map_err(math)?,
                (Document::Polyhedron(p), Some(_)) => {
                    let n = p.dim();
                    let c = WeightedComplex::new(p.ambient_dim(), n, vec![(p, int(1))]).map_err(math)?;
                    integrate_complex(&windowed(c, &window).map_err(math)?, &a).map_err(math)?
                }
                (Document::WeightedComplex(c), _) => integrate_complex(&windowed(c, &window).map_err(math)?, &a).map_err(math)?,
                (other, _) => return Err(format!("{domain}: expected a polyhedron or weighted-complex document, got {}", other.kind())),
            };
            Outcome::ok(report("integrate", json!({"value": rat(&value)})))
        }
        Command::IntegrateBoundary { domain, form } => {
            let c = windowed(domain_doc(inputs, &domain)?, &window).map_err(math)?;
            let eta = superform_doc(inputs, &form)?;
            let value = integrate_complex_boundary(&c, &eta).map_err(math)?;
            Outcome::ok(report("integrate-boundary", json!({"value": rat(&value)})))
        }
        Command::Stokes { domain, eta_prime, eta_second } => {
            let c = windowed(domain_doc(inputs, &domain)?, &window).map_err(math)?;
            let ep = superform_doc(inputs, &eta_prime)?;
            let es = superform_doc(inputs, &eta_second)?;
            let (r1, r2) = stokes_residual(&c, &ep, &es).map_err(math)?;
            let passed = r1.is_zero() && r2.is_zero();
            Outcome {
                value: report("stokes", json!({"residuals": [rat(&r1), rat(&r2)], "passed": passed})),
                passed,
            }
        }
        Command::Green { cell, alpha, beta } => {
            let mut sigma = polyhedron_doc(inputs, &cell)?;
            if let Some(w) = &window {
                let n = sigma.dim();
                sigma = sigma
                    .intersect(w)
                    .filter(|s| s.dim() == n)
                    .ok_or_else(|| "the window cuts the cell down in dimension".to_string())?;
            }
            let a = superform_doc(inputs, &alpha)?;
            let b = superform_doc(inputs, &beta)?;
            let r = green_residual(&sigma, &a, &b).map_err(math)?;
            let passed = r.is_zero();
            Outcome {
                value: report("green", json!({"residual": rat(&r), "passed": passed})),
                passed,
            }
        }
        Command::Pushforward { map, cycle } => {
            let d = inputs.document(&map)?;
            let f = expect_kind(&map, d, |d| if let Document::Map(f) = d { Some(f) } else { None }, "map")?;
            let c = cycle_doc(inputs, &cycle)?;
            Outcome::ok(document_value(&Document::WeightedComplex(pushforward(&f, &c).map_err(math)?)))
        }
        Command::ProjectionCheck { map, cycle, form } => {
            let w = need_window()?;
            let d = inputs.document(&map)?;
            let f = expect_kind(&map, d, |d| if let Document::Map(f) = d { Some(f) } else { None }, "map")?;
            let c = cycle_doc(inputs, &cycle)?;
            let a = superform_doc(inputs, &form)?;
            let (l, r) = projection_check(&f, &c, &a, &w).map_err(math)?;
            let passed = l == r;
            Outcome {
                value: report("projection-check", json!({"pushforward_side": rat(&l), "pullback_side": rat(&r), "passed": passed})),
                passed,
            }
        }
        Command::CurrentEval { current, form, ops } => {
            let w = need_window()?;
            let kind = match inputs.document(&current)? {
                Document::WeightedComplex(c) => CurrentKind::Dirac(c),
                Document::Superform(s) => CurrentKind::Embedded(s),
                other => return Err(format!("{current}: expected a weighted-complex or superform document, got {}", other.kind())),
            };
            let a = superform_doc(inputs, &form)?;
            let t = Current { kind, ops };
            let value = current_eval(&t, &a, &w).map_err(math)?;
            Outcome::ok(report("current-eval", json!({"value": rat(&value)})))
        }
        Command::Hypersurface { polynomial } => {
            let d = inputs.document(&polynomial)?;
            let p = expect_kind(&polynomial, d, |d| if let Document::TropicalPolynomial(p) = d { Some(p) } else { None }, "tropical-polynomial")?;
            Outcome::ok(document_value(&Document::WeightedComplex(corner_locus(&p).map_err(math)?)))
        }
        Command::Refine { first, second } => {
            let a = complex_doc(inputs, &first)?;
            let b = complex_doc(inputs, &second)?;
            if a.ambient_dim() != b.ambient_dim() {
                return Err(math(crate::Error::AmbientMismatch {
                    expected: a.ambient_dim(),
                    found: b.ambient_dim(),
                }));
            }
            Outcome::ok(document_value(&Document::Complex(refine(&a, &b))))
        }
        Command::Truncate { input } => {
            let w = need_window()?;
            let out = match inputs.document(&input)? {
                Document::Complex(c) => {
                    if c.ambient_dim() != w.ambient_dim() {
                        return Err(math(crate::Error::AmbientMismatch {
                            expected: c.ambient_dim(),
                            found: w.ambient_dim(),
                        }));
                    }
                    Document::Complex(truncate(&c, &w))
                }
                Document::WeightedComplex(c) => Document::WeightedComplex(c.truncate(&w).map_err(math)?),
                other => return Err(format!("{input}: expected a complex or weighted-complex document, got {}", other.kind())),
            };
            Outcome::ok(document_value(&out))
        }
        Command::Faces { polyhedron, codim } => {
            let p = polyhedron_doc(inputs, &polyhedron)?;
            let faces = match codim {
                Some(k) => p.faces(k),
                None => p.all_faces(),
            };
            Outcome::ok(document_value(&Document::Complex(Complex::new(p.ambient_dim(), faces))))
        }
        Command::Validate { input } => {
            let d = inputs.document(&input)?;
            let violations: Vec<String> = match &d {
                Document::Complex(c) => validate_complex(c).iter().map(|v| v.to_string()).collect(),
                Document::WeightedComplex(c) => c.validate().iter().map(|v| v.to_string()).collect(),
                _ => Vec::new(),
            };
            let passed = violations.is_empty();
            Outcome {
                value: report("validate", json!({"document": d.kind(), "valid": passed, "violations": violations})),
                passed,
            }
        }
    })
}

/// Runs the command line; returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let out = cli.out.clone();
    let mut inputs = Inputs { stdin, stdin_used: false };
    let outcome = match execute(cli, &mut inputs) {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.value).expect("serializable");
    text.push('\n');
    let written = match out {
        Some(path) => std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}
