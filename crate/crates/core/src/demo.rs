//! End-to-end run on the bundled `S²×D²` diagrams: validation, the low-genus
//! parameter argument, cap-off, invariants, and the distinguishing verdict.

use std::fmt::{self, Write};

use serde::{Deserialize, Serialize};

use crate::bundled;
use crate::diagram::{validate_closed, validate_relative};
use crate::error::Error;
use crate::invariants::{distinguish, invariant_report};
use crate::moves::cap_off;
use crate::params::{
    enumerate_types, minimal_genus_bound, openbook_boundary_filter, Boundary, GenusBound,
};
use crate::report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemoCheck {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemoSummary {
    pub checks: Vec<DemoCheck>,
    pub log: String,
}

impl DemoSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for DemoSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.log)?;
        writeln!(f, "== checks ==")?;
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}: expected {}, observed {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.expected,
                c.observed
            )?;
        }
        writeln!(
            f,
            "result: {}",
            if self.all_passed() {
                "all checks passed"
            } else {
                "CHECKS FAILED"
            }
        )
    }
}

struct Recorder {
    checks: Vec<DemoCheck>,
    log: String,
}

impl Recorder {
    fn check(&mut self, name: &str, expected: impl ToString, observed: impl ToString) {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        self.checks.push(DemoCheck {
            name: name.into(),
            pass: expected == observed,
            expected,
            observed,
        });
    }

    fn section(&mut self, title: &str) {
        writeln!(self.log, "== {title} ==").unwrap();
    }
}

pub fn paper_demo() -> Result<DemoSummary, Error> {
    let (d1, d2) = (bundled::d1(), bundled::d2());
    let mut r = Recorder {
        checks: Vec::new(),
        log: String::new(),
    };

    r.section("validate relative diagrams");
    for (name, d) in [("D1", &d1), ("D2", &d2)] {
        let v = validate_relative(d);
        writeln!(r.log, "[{name}]\n{v}").unwrap();
        let observed = v
            .inferred_type
            .filter(|_| v.ok)
            .map_or("invalid".to_string(), |t| t.to_string());
        r.check(&format!("{name} type"), "(2,1;0,2)", observed);
    }

    r.section("genus below 2 (chi = 2, boundary s2xs1)");
    let low = enumerate_types(2, 1);
    r.log.push_str(&report::render_types(&low));
    let listed: Vec<String> = low.iter().map(|t| t.to_string()).collect();
    r.check(
        "types with chi 2, g <= 1",
        "[(1,0;0,1)]",
        format!("[{}]", listed.join(", ")),
    );
    let kept = openbook_boundary_filter(&low, Boundary::S2xS1);
    writeln!(r.log, "after boundary filter s2xs1: {} type(s)", kept.len()).unwrap();
    r.check("survivors with boundary s2xs1", 0, kept.len());
    let bound = minimal_genus_bound(2, Boundary::S2xS1);
    r.log.push_str(&report::render_bound(&bound));
    let g = match bound {
        GenusBound::Found { genus, .. } => genus.to_string(),
        GenusBound::NotFound { .. } => "none".to_string(),
    };
    r.check("minimal genus for chi 2 with boundary s2xs1", 2, g);

    r.section("cap off and compute invariants");
    let mut reports = Vec::new();
    for (name, d) in [("D1", &d1), ("D2", &d2)] {
        let capped = cap_off(d)?;
        let t = validate_closed(&capped).into_result()?;
        r.check(&format!("cap({name}) type"), "(2,0)", t);
        let inv = invariant_report(&capped)?;
        writeln!(r.log, "[cap({name})]").unwrap();
        r.log.push_str(&report::render_invariants(&inv));
        r.check(&format!("cap({name}) H1"), "0", &inv.homology.h1);
        r.check(&format!("cap({name}) H2"), "Z^2", &inv.homology.h2);
        reports.push(inv);
    }
    r.check("cap(D1) parity", "even", reports[0].form.parity);
    r.check("cap(D2) parity", "odd", reports[1].form.parity);

    r.section("distinguish D1 and D2");
    let verdict = distinguish(&d1, &d2)?;
    let witness = verdict
        .witness
        .as_ref()
        .map_or("none".to_string(), |w| w.to_string());
    writeln!(r.log, "outcome: {}\nwitness: {witness}", verdict.outcome).unwrap();
    r.check(
        "distinguishing witness",
        "intersection form parity: even vs odd",
        witness,
    );

    Ok(DemoSummary {
        checks: r.checks,
        log: r.log,
    })
}
