// SPDX-License-Identifier: MIT
//! Python bindings. Classes are passed as expression strings and returned
//! as lists of canonical term strings.

use bnhopf::charged::{self, charged_basis};
use bnhopf::hopf;
use bnhopf::partition::Partition;
use bnhopf::restrict;
use bnhopf::syntax::{self, eval_str, fmt_charged, fmt_monomial, Value};
use bnhopf::verify::{Bounds, Suite};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(text: &str) -> PyResult<Value> {
    eval_str(text).map_err(err)
}

fn in_ring(v: Value, ring: &str) -> PyResult<Value> {
    match ring {
        "B" => Ok(Value::B(v.to_b().map_err(err)?)),
        "Bplus" => Ok(Value::Plus(v.to_plus().map_err(err)?)),
        _ => Err(err(format!("unknown ring `{ring}`, expected B or Bplus"))),
    }
}

/// Basis of the given ring in bidegree `(n, d)`.
#[pyfunction]
#[pyo3(signature = (n, d, ring = "B"))]
fn basis(n: u32, d: u32, ring: &str) -> PyResult<Vec<String>> {
    match ring {
        "B" => Ok(hopf::basis(n, d).iter().map(fmt_monomial).collect()),
        "Bplus" => Ok(charged_basis(n, d).iter().map(fmt_charged).collect()),
        _ => Err(err(format!("unknown ring `{ring}`"))),
    }
}

/// Terms of an arbitrary expression.
#[pyfunction]
fn evaluate(expr: &str) -> PyResult<Vec<String>> {
    Ok(parse(expr)?.terms())
}

/// Bidegree of a homogeneous class, or `None`.
#[pyfunction]
fn bidegree(expr: &str) -> PyResult<Option<(u32, u32)>> {
    Ok(parse(expr)?.bidegree())
}

#[pyfunction]
#[pyo3(signature = (x, y, ring = "B"))]
fn mul(x: &str, y: &str, ring: &str) -> PyResult<Vec<String>> {
    let v = syntax::cup_values(in_ring(parse(x)?, ring)?, in_ring(parse(y)?, ring)?).map_err(err)?;
    Ok(v.terms())
}

#[pyfunction]
#[pyo3(signature = (x, y, ring = "B"))]
fn transfer(x: &str, y: &str, ring: &str) -> PyResult<Vec<String>> {
    let v = syntax::transfer_values(in_ring(parse(x)?, ring)?, in_ring(parse(y)?, ring)?).map_err(err)?;
    Ok(v.terms())
}

/// Coproduct terms, each written `left # right`.
#[pyfunction]
#[pyo3(signature = (x, ring = "B"))]
fn comul(x: &str, ring: &str) -> PyResult<Vec<String>> {
    let t = match in_ring(parse(x)?, ring)? {
        Value::B(e) => Value::BTensor(hopf::coproduct(&e)),
        Value::Plus(z) => Value::PlusTensor(charged::coproduct(&z)),
        v => v,
    };
    Ok(t.terms())
}

#[pyfunction]
fn res(x: &str) -> PyResult<Vec<String>> {
    let e = parse(x)?.to_b().map_err(err)?;
    Ok(Value::Plus(charged::res(&e).map_err(err)?).terms())
}

#[pyfunction]
fn tr(x: &str) -> PyResult<Vec<String>> {
    let z = parse(x)?.to_plus().map_err(err)?;
    Ok(Value::B(charged::tr(&z)).terms())
}

/// Restriction to the elementary abelian subgroup of an admissible
/// partition, as a polynomial string.
#[pyfunction]
#[pyo3(signature = (x, partition, prime = false))]
fn restrict_to(x: &str, partition: &str, prime: bool) -> PyResult<String> {
    let p: Partition = partition.parse().map_err(err)?;
    let poly = match (parse(x)?, prime) {
        (Value::B(e), false) => restrict::restrict_b(&e, &p),
        (Value::B(e), true) => charged::res(&e).and_then(|z| restrict::restrict_prime(&z, &p)),
        (Value::Plus(z), false) => restrict::restrict_charged(&z, &p),
        (Value::Plus(z), true) => restrict::restrict_prime(&z, &p),
        (Value::Zero, _) => Ok(bnhopf::poly::Poly::zero()),
        (v, _) => return Err(err(format!("restriction needs a class, got a {}", v.kind()))),
    }
    .map_err(err)?;
    Ok(poly.to_string())
}

/// Dimension table for components `0..=n` and degrees `0..=d`.
#[pyfunction]
#[pyo3(signature = (n, d, ring = "B"))]
fn poincare(n: u32, d: u32, ring: &str) -> PyResult<Vec<Vec<usize>>> {
    match ring {
        "B" => Ok(hopf::poincare(n, d)),
        "Bplus" => Ok((0..=n).map(|c| (0..=d).map(|e| charged_basis(c, e).len()).collect()).collect()),
        _ => Err(err(format!("unknown ring `{ring}`"))),
    }
}

/// `(rank, dim)` of the stacked restriction matrix in bidegree `(n, d)`.
#[pyfunction]
fn detect(n: u32, d: u32) -> (usize, usize) {
    let r = restrict::detection_matrix(n, d);
    (r.rank, r.dim)
}

/// Runs a verification suite; returns `(ok, report_json)`.
#[pyfunction]
#[pyo3(signature = (suite, n = None, d = None))]
fn verify(py: Python<'_>, suite: &str, n: Option<u32>, d: Option<u32>) -> PyResult<(bool, String)> {
    let s: Suite = suite.parse().map_err(err)?;
    let def = s.default_bounds();
    let bounds = Bounds { n: n.unwrap_or(def.n), d: d.unwrap_or(def.d) };
    let report = py.detach(|| s.run(bounds));
    let json = serde_json::to_string(&report).map_err(err)?;
    Ok((report.ok(), json))
}

#[pymodule]
fn bnhopf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(bidegree, m)?)?;
    m.add_function(wrap_pyfunction!(mul, m)?)?;
    m.add_function(wrap_pyfunction!(transfer, m)?)?;
    m.add_function(wrap_pyfunction!(comul, m)?)?;
    m.add_function(wrap_pyfunction!(res, m)?)?;
    m.add_function(wrap_pyfunction!(tr, m)?)?;
    m.add_function(wrap_pyfunction!(restrict_to, m)?)?;
    m.add_function(wrap_pyfunction!(poincare, m)?)?;
    m.add_function(wrap_pyfunction!(detect, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
