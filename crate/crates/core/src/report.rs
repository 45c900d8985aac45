//! Plain-text rendering of reports, shared by the CLI and the browser demo.

use std::fmt::Write;

use crate::invariants::{DistinguishVerdict, InvariantReport, Outcome};
use crate::params::{FilteredType, GenusBound, PageCompatibility, RelativeTrisectionType};

pub fn render_invariants(r: &InvariantReport) -> String {
    let mut out = String::new();
    let f = &r.form;
    writeln!(out, "closed type: {}", r.closed_type).unwrap();
    writeln!(out, "euler characteristic: {}", r.euler_characteristic).unwrap();
    writeln!(out, "homology: {}", r.homology).unwrap();
    writeln!(out, "intersection form: {}", f.matrix).unwrap();
    writeln!(
        out,
        "  rank {}, signature {}, parity {}, determinant {}",
        f.rank, f.signature, f.parity, f.determinant
    )
    .unwrap();
    out
}

pub fn render_verdict(v: &DistinguishVerdict) -> String {
    let mut out = String::new();
    match (&v.outcome, &v.witness) {
        (Outcome::Distinguished, Some(w)) => {
            writeln!(out, "outcome: distinguished").unwrap();
            writeln!(out, "witness: {w}").unwrap();
        }
        _ => {
            writeln!(out, "outcome: inconclusive (all computed invariants agree; this is not a proof of equivalence)")
                .unwrap();
        }
    }
    for (label, report) in [("left", &v.left), ("right", &v.right)] {
        if let Some(r) = report {
            writeln!(out, "[{label} cap-off]").unwrap();
            out.push_str(&render_invariants(r));
        }
    }
    out
}

pub fn render_types(types: &[RelativeTrisectionType]) -> String {
    let mut out = String::from("g  k  p  b  A  chi\n");
    for t in types {
        writeln!(
            out,
            "{:<2} {:<2} {:<2} {:<2} {:<2} {}",
            t.g,
            t.k,
            t.p,
            t.b,
            t.dual_pairs(),
            t.euler_characteristic()
        )
        .unwrap();
    }
    if types.is_empty() {
        out.push_str("(no admissible types)\n");
    }
    out
}

pub fn render_filtered(types: &[FilteredType]) -> String {
    let mut out = String::from("g  k  p  b  A  chi page\n");
    for f in types {
        let t = f.ty;
        let status = match f.status {
            PageCompatibility::Compatible => "compatible",
            PageCompatibility::Unconstrained => "unconstrained",
            PageCompatibility::Incompatible => "incompatible",
        };
        writeln!(
            out,
            "{:<2} {:<2} {:<2} {:<2} {:<2} {:<3} {status}",
            t.g,
            t.k,
            t.p,
            t.b,
            t.dual_pairs(),
            t.euler_characteristic()
        )
        .unwrap();
    }
    if types.is_empty() {
        out.push_str("(no admissible types)\n");
    }
    out
}

pub fn render_bound(bound: &GenusBound) -> String {
    match bound {
        GenusBound::Found { genus, evidence } => {
            let list: Vec<String> = evidence.iter().map(|f| f.ty.to_string()).collect();
            format!(
                "minimal genus: {genus} (witness types {})\n",
                list.join(", ")
            )
        }
        GenusBound::NotFound { cap } => format!("no bound found <= {cap}\n"),
    }
}
