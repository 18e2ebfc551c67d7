// SPDX-License-Identifier: MIT
use std::time::Instant;

use anyhow::{bail, Context, Result};
use bnhopf::charged::{self, charged_basis};
use bnhopf::hopf;
use bnhopf::partition::Partition;
use bnhopf::restrict;
use bnhopf::syntax::{self, eval_str, fmt_charged, fmt_monomial, Value};
use bnhopf::verify::{Bounds, Suite, SuiteReport};
use itertools::Itertools;
use serde_json::{json, Value as Json};

use crate::output::{Outcome, Report};
use crate::{Command, Ring};

fn ring_name(r: Ring) -> &'static str {
    match r {
        Ring::B => "B",
        Ring::Bplus => "Bplus",
    }
}

fn parse(text: &str) -> Result<Value> {
    eval_str(text).with_context(|| format!("in expression `{text}`"))
}

fn in_ring(v: Value, ring: Ring) -> Result<Value> {
    let out = match ring {
        Ring::B => Value::B(v.to_b()?),
        Ring::Bplus => Value::Plus(v.to_plus()?),
    };
    Ok(if out.terms().is_empty() { Value::Zero } else { out })
}

fn parse_in(text: &str, ring: Ring) -> Result<Value> {
    in_ring(parse(text)?, ring).with_context(|| format!("in expression `{text}`"))
}

fn class_json(v: &Value) -> Json {
    json!({
        "kind": v.kind(),
        "bidegree": v.bidegree().map(|(n, d)| [n, d]),
        "terms": v.terms(),
        "text": v.to_string(),
    })
}

fn class_text(v: &Value) -> Vec<String> {
    let mut out = vec![v.to_string()];
    if let Some((n, d)) = v.bidegree() {
        out.push(format!("bidegree ({n}, {d}), {} terms", v.terms().len()));
    }
    out
}

struct Done {
    args: Json,
    outcome: Outcome,
    result: Json,
    text: Vec<String>,
}

impl Done {
    fn pass(args: Json, result: Json, text: Vec<String>) -> Done {
        Done { args, outcome: Outcome::Pass, result, text }
    }
}

pub fn run(cmd: &Command) -> Result<Report> {
    let start = Instant::now();
    let done = dispatch(cmd)?;
    Ok(Report {
        command: command_name(cmd),
        args: done.args,
        outcome: done.outcome,
        result: done.result,
        elapsed_ms: start.elapsed().as_millis(),
        text: done.text,
    })
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Basis { .. } => "basis",
        Command::Mul { .. } => "mul",
        Command::Transfer { .. } => "transfer",
        Command::Comul { .. } => "comul",
        Command::Res { .. } => "res",
        Command::Tr { .. } => "tr",
        Command::Restrict { .. } => "restrict",
        Command::Eval { .. } => "eval",
        Command::Poincare { .. } => "poincare",
        Command::Detect { .. } => "detect",
        Command::Verify { .. } => "verify",
    }
}

fn dispatch(cmd: &Command) -> Result<Done> {
    match cmd {
        Command::Basis { ring, n, d } => {
            let terms: Vec<String> = match ring.ring {
                Ring::B => hopf::basis(*n, *d).iter().map(fmt_monomial).collect(),
                Ring::Bplus => charged_basis(*n, *d).iter().map(fmt_charged).collect(),
            };
            let args = json!({ "ring": ring_name(ring.ring), "n": n, "d": d });
            let mut text =
                vec![format!("{} basis in bidegree ({n}, {d}): {}", ring_name(ring.ring), terms.len())];
            text.extend(terms.iter().map(|t| format!("  {t}")));
            Ok(Done::pass(args, json!({ "dim": terms.len(), "terms": terms }), text))
        }
        Command::Mul { ring, x, y } | Command::Transfer { ring, x, y } => {
            let a = parse_in(x, ring.ring)?;
            let b = parse_in(y, ring.ring)?;
            let v = if matches!(cmd, Command::Mul { .. }) {
                syntax::cup_values(a, b)?
            } else {
                syntax::transfer_values(a, b)?
            };
            let args = json!({ "ring": ring_name(ring.ring), "x": x, "y": y });
            Ok(Done::pass(args, class_json(&v), class_text(&v)))
        }
        Command::Comul { ring, x, component } => {
            let v = parse_in(x, ring.ring)?;
            let t = match (&v, component) {
                (Value::Zero, _) => Value::Zero,
                (Value::B(e), None) => Value::BTensor(hopf::coproduct(e)),
                (Value::B(e), Some(a)) => Value::BTensor(hopf::coproduct_component(e, *a)),
                (Value::Plus(z), None) => Value::PlusTensor(charged::coproduct(z)),
                (Value::Plus(z), Some(a)) => Value::PlusTensor(
                    z.iter()
                        .map(|m| charged::coproduct_component(m, *a))
                        .fold(Default::default(), |acc, t| acc + t),
                ),
                _ => unreachable!("coerced to a ring"),
            };
            let args = json!({ "ring": ring_name(ring.ring), "x": x, "component": component });
            let result = json!({ "terms": t.terms(), "text": t.to_string() });
            Ok(Done::pass(args, result, vec![t.to_string()]))
        }
        Command::Res { x } => {
            let v = Value::Plus(parse_in(x, Ring::B)?.to_b().and_then(|e| charged::res(&e))?);
            let v = in_ring(v, Ring::Bplus)?;
            Ok(Done::pass(json!({ "x": x }), class_json(&v), class_text(&v)))
        }
        Command::Tr { x } => {
            let z = parse_in(x, Ring::Bplus)?.to_plus()?;
            let v = in_ring(Value::B(charged::tr(&z)), Ring::B)?;
            Ok(Done::pass(json!({ "x": x }), class_json(&v), class_text(&v)))
        }
        Command::Restrict { partition, prime, x } => {
            let p: Partition = partition.parse().with_context(|| format!("partition `{partition}`"))?;
            let v = parse(x)?;
            let poly = match (&v, prime) {
                (Value::B(e), false) => restrict::restrict_b(e, &p)?,
                (Value::B(e), true) => restrict::restrict_prime(&charged::res(e)?, &p)?,
                (Value::Plus(z), false) => restrict::restrict_charged(z, &p)?,
                (Value::Plus(z), true) => restrict::restrict_prime(z, &p)?,
                (Value::Zero, _) => bnhopf::poly::Poly::zero(),
                _ => bail!("restriction needs a class, got a {}", v.kind()),
            };
            let args = json!({ "partition": p.to_string(), "prime": prime, "x": x });
            let text = poly.to_string();
            Ok(Done::pass(args, json!({ "polynomial": text }), vec![text]))
        }
        Command::Eval { expr } => {
            let v = parse(expr)?;
            let result = match &v {
                Value::BTensor(_) | Value::PlusTensor(_) => {
                    json!({ "kind": v.kind(), "terms": v.terms(), "text": v.to_string() })
                }
                _ => class_json(&v),
            };
            Ok(Done::pass(json!({ "expr": expr }), result, class_text(&v)))
        }
        Command::Poincare { ring, n, d } => {
            let table: Vec<Vec<usize>> = match ring.ring {
                Ring::B => hopf::poincare(*n, *d),
                Ring::Bplus => {
                    (0..=*n).map(|c| (0..=*d).map(|e| charged_basis(c, e).len()).collect()).collect()
                }
            };
            let mut text = vec![format!("n\\d {}", (0..=*d).map(|e| format!("{e:>5}")).join(""))];
            for (c, row) in table.iter().enumerate() {
                text.push(format!("{c:>3} {}", row.iter().map(|x| format!("{x:>5}")).join("")));
            }
            let args = json!({ "ring": ring_name(ring.ring), "n": n, "d": d });
            Ok(Done::pass(args, json!({ "rows": table }), text))
        }
        Command::Detect { n, d } => {
            let reports: Vec<_> = (0..=*d).map(|e| restrict::detection_matrix(*n, e)).collect();
            let ok = reports.iter().all(|r| r.injective());
            let text = reports
                .iter()
                .map(|r| {
                    let tag = if r.injective() { "injective" } else { "NOT injective" };
                    format!("(n={}, d={}): rank {} of {} ({} rows) {tag}", r.n, r.d, r.rank, r.dim, r.rows)
                })
                .collect();
            Ok(Done {
                args: json!({ "n": n, "d": d }),
                outcome: if ok { Outcome::Pass } else { Outcome::Fail },
                result: json!({ "reports": reports }),
                text,
            })
        }
        Command::Verify { suite, n, d } => {
            let suites: Vec<Suite> = match suite {
                Some(s) => vec![s.parse().with_context(|| {
                    format!("expected one of {}", Suite::ALL.iter().map(|s| s.name()).join(", "))
                })?],
                None => Suite::ALL.to_vec(),
            };
            let reports: Vec<SuiteReport> = suites
                .iter()
                .map(|s| {
                    let def = s.default_bounds();
                    s.run(Bounds { n: n.unwrap_or(def.n), d: d.unwrap_or(def.d) })
                })
                .collect();
            let ok = reports.iter().all(SuiteReport::ok);
            let mut text = vec![];
            for r in &reports {
                text.push(format!("{}: {}", r.suite, if r.ok() { "PASS" } else { "FAIL" }));
                for c in &r.checks {
                    text.push(format!(
                        "  {} {} ({} cases)",
                        if c.ok { "PASS" } else { "FAIL" },
                        c.name,
                        c.cases
                    ));
                    for e in &c.counterexamples {
                        text.push(format!("      {e}"));
                    }
                }
            }
            Ok(Done {
                args: json!({ "suite": suite, "n": n, "d": d }),
                outcome: if ok { Outcome::Pass } else { Outcome::Fail },
                result: json!({ "suites": reports }),
                text,
            })
        }
    }
}
