//! Browser bindings: parameter exploration, diagram analysis, and the
//! cap-off distinguisher. Every function returns plain text or an error
//! message, so the page only has to show strings.

use wasm_bindgen::prelude::*;

use trisect::report;
use trisect::{
    cap_off, enumerate_types, invariant_report, minimal_genus_bound, openbook_boundary_filter,
    parse_diagram, serialize_diagram, Boundary, Diagram, Error,
};

fn message(e: Error) -> String {
    e.to_string()
}

/// Admissible types with Euler characteristic `chi` and genus at most
/// `gmax`. A non-empty `boundary` (`s3`, `s2xs1`, `lens`, `other`) applies
/// the open-book filter and reports the least genus that survives it.
#[wasm_bindgen]
pub fn explore_params(chi: i32, gmax: u32, boundary: &str) -> Result<String, String> {
    if gmax > 40 {
        return Err("gmax above 40 is not supported here".into());
    }
    let types = enumerate_types(chi.into(), gmax as usize);
    let mut out = report::render_types(&types);
    if !boundary.is_empty() {
        let b: Boundary = boundary.parse().map_err(message)?;
        let kept = openbook_boundary_filter(&types, b);
        out.push_str(&format!(
            "\nboundary {b}: {} of {} type(s) survive\n",
            kept.len(),
            types.len()
        ));
        out.push_str(&report::render_filtered(&kept));
        out.push_str(&report::render_bound(&minimal_genus_bound(chi.into(), b)));
    }
    Ok(out)
}

/// Validation report for a JSON diagram, then invariants of the closed
/// diagram (relative ones are capped off first).
#[wasm_bindgen]
pub fn analyze(json: &str) -> Result<String, String> {
    let doc = parse_diagram(json).map_err(message)?.document;
    let validation = doc.diagram.validate();
    let mut out = format!("{validation}\n");
    if !validation.ok {
        return Ok(out);
    }
    let closed = match &doc.diagram {
        Diagram::Closed(c) => c.clone(),
        Diagram::Relative(r) => {
            let c = cap_off(r).map_err(message)?;
            out.push_str("capped off:\n");
            c
        }
    };
    out.push_str(&report::render_invariants(
        &invariant_report(&closed).map_err(message)?,
    ));
    Ok(out)
}

/// Caps off two relative diagrams and compares their invariants.
#[wasm_bindgen]
pub fn distinguish(left: &str, right: &str) -> Result<String, String> {
    let relative =
        |json: &str, side: &str| match parse_diagram(json).map_err(message)?.document.diagram {
            Diagram::Relative(r) => Ok(r),
            Diagram::Closed(_) => Err(format!(
                "{side} diagram is closed; expected a relative diagram"
            )),
        };
    let verdict = trisect::distinguish(&relative(left, "left")?, &relative(right, "right")?)
        .map_err(message)?;
    Ok(report::render_verdict(&verdict))
}

/// Canonical JSON of a bundled diagram (`D1`, `D2`, `S4`, `S1xS3`, `CP2`,
/// `CP2bar`).
#[wasm_bindgen]
pub fn bundled(name: &str) -> Result<String, String> {
    trisect::bundled::by_name(name)
        .map(|doc| serialize_diagram(&doc))
        .ok_or_else(|| format!("no bundled diagram named {name:?}"))
}
