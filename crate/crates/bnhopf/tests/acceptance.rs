// SPDX-License-Identifier: MIT
//! One line per acceptance criterion. Exits non-zero when a criterion
//! departs from its recorded outcome.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use bnhopf::verify::{self, CheckResult};

/// Detection is known to fail in these bidegrees: `B_2^+` is cyclic of
/// order 4, and on `n = 6` some classes vanish on every elementary abelian
/// subgroup.
const KNOWN_UNDETECTED: [(u32, u32); 5] = [(2, 1), (2, 3), (2, 5), (6, 4), (6, 6)];

struct Line {
    id: u32,
    title: &'static str,
    checks: Vec<CheckResult>,
    secs: f64,
}

impl Line {
    fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    fn summary(&self) -> String {
        let cases: usize = self.checks.iter().map(|c| c.cases).sum();
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.ok)
            .map(|c| format!("{} [{}]", c.name, c.counterexamples.join("; ")))
            .collect();
        let status = if self.ok() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {} {}: {status} ({} checks, {cases} cases, {:.1}s)",
            self.id,
            self.title,
            self.checks.len(),
            self.secs
        );
        for f in failed {
            s.push_str(&format!("\n    failed: {f}"));
        }
        s
    }
}

fn timed(id: u32, title: &'static str, f: impl FnOnce() -> Vec<CheckResult>) -> Line {
    let t = Instant::now();
    let checks = f();
    Line { id, title, checks, secs: t.elapsed().as_secs_f64() }
}

fn undetected(checks: &[CheckResult]) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for n in [2u32, 3, 4, 5, 6, 8] {
        for d in 0..=6 {
            let r = bnhopf::restrict::detection_matrix(n, d);
            if !r.injective() {
                out.insert((n, d));
            }
        }
    }
    debug_assert_eq!(checks.iter().all(|c| c.ok), out.is_empty());
    out
}

fn main() -> ExitCode {
    let lines = vec![
        timed(1, "Hopf ring axioms", || verify::hopf_axioms(6, 6)),
        timed(2, "Euler classifier matches elimination", || {
            verify::gysin_checks(8, 8).into_iter().take(1).collect()
        }),
        timed(3, "basis bookkeeping", || verify::gysin_checks(8, 8).into_iter().skip(1).collect()),
        timed(4, "restriction and transfer identities", || verify::res_tr(6, 6)),
        timed(5, "presentation relations", || verify::relations(3, 24)),
        timed(6, "invariant theory identities", || verify::invariant_checks(3, 3)),
        timed(7, "restriction compatibility", || verify::restriction(8, 8)),
        timed(8, "detection by elementary abelian subgroups", || verify::detection(&[2, 3, 4, 5, 6, 8], 6)),
        timed(9, "Fox-Neuwirth sign algebra", || verify::fox_neuwirth(6, 8)),
    ];

    let mut unexpected = vec![];
    for line in &lines {
        println!("{}", line.summary());
        if line.id == 8 {
            let found = undetected(&line.checks);
            let known: BTreeSet<_> = KNOWN_UNDETECTED.into_iter().collect();
            if found != known {
                unexpected.push(format!("criterion 8: undetected set {found:?}"));
            } else {
                println!("    known: B_2^+ is cyclic of order 4; on n = 6 the classes with a");
                println!("    gamma_{{1,1}} factor on a component-2 block restrict to zero.");
            }
        } else if !line.ok() {
            unexpected.push(format!("criterion {}", line.id));
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria at their recorded outcome");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome in {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
