// SPDX-License-Identifier: MIT
use serde::Serialize;
use serde_json::Value as Json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

/// Top-level JSON document. Field order is fixed by declaration order.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub args: Json,
    pub outcome: Outcome,
    pub result: Json,
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub text: Vec<String>,
}

pub fn emit(r: &Report, pretty: bool) {
    if pretty {
        for line in &r.text {
            println!("{line}");
        }
    } else {
        println!("{}", serde_json::to_string(r).expect("report serializes"));
    }
}

pub fn emit_error(e: &anyhow::Error, pretty: bool) {
    if pretty {
        eprintln!("error: {e:#}");
    } else {
        let doc = serde_json::json!({ "error": format!("{e:#}") });
        eprintln!("{doc}");
    }
}
