//! Reading and writing `trop/1` documents and driving the command line in-process.

use tropcalc::cli::{emit, parse, run, Document};
use tropcalc::num::rat;
use tropcalc::polyhedra::Polyhedron;

fn main() {
    let square = Polyhedron::cuboid(&[rat(0, 1), rat(0, 1)], &[rat(1, 3), rat(1, 1)]).unwrap();
    let text = emit(&Document::Polyhedron(square));
    print!("{text}");
    assert_eq!(emit(&parse(&text).unwrap()), text);

    let line = r#"{"format": "trop/1", "type": "weighted-complex", "ambient_dim": 2, "dim": 1, "cells": [
        {"polyhedron": {"points": [["0", "0"]], "rays": [[1, 0]]}, "weight": 1},
        {"polyhedron": {"points": [["0", "0"]], "rays": [[0, 1]]}, "weight": 1},
        {"polyhedron": {"points": [["0", "0"]], "rays": [[-1, -1]]}, "weight": 1}]}"#;
    let mut out = Vec::new();
    let status = run(["tropcalc", "check-balancing", "-"], &mut line.as_bytes(), &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit status {status}");
}
