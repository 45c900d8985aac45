//! Bundled diagrams: the two `(2,1;0,2)` relative diagrams of `S²×D²` and the
//! small closed model diagrams used as oracles.
//!
//! `D1` and `D2` are homological reconstructions. Their curve classes are
//! chosen so that both validate as type `(2,1;0,2)` and their cap-offs carry
//! the even (`S²×S²`) and odd (`CP²#-CP²`) rank-2 forms. They are not
//! transcriptions of drawn curves and say nothing about curve geometry.

use crate::diagram::{ClosedTrisectionDiagram, Diagram, RelativeTrisectionDiagram};
use crate::format::DiagramDocument;
use crate::surface::{H1Class, SurfaceModel};

const RECONSTRUCTION_NOTE: &str = "homological reconstruction: curve classes satisfy the stated type and cap-off invariants; curve geometry is not modelled";

fn relative(
    alpha: Vec<H1Class>,
    beta: Vec<H1Class>,
    gamma: Vec<H1Class>,
) -> RelativeTrisectionDiagram {
    RelativeTrisectionDiagram::new(SurfaceModel::new(2, 2), alpha, beta, gamma)
        .expect("bundled diagram")
}

/// `α = {a₁, a₂}`, `β = {b₁, b₂}`, `γ = {a₁+b₂, a₂+b₁}`; caps to `S²×S²`.
pub fn d1() -> RelativeTrisectionDiagram {
    let s = SurfaceModel::new(2, 2);
    relative(
        vec![s.a(1), s.a(2)],
        vec![s.b(1), s.b(2)],
        vec![&s.a(1) + &s.b(2), &s.a(2) + &s.b(1)],
    )
}

/// `α = {a₁, a₂}`, `β = {b₁, b₂}`, `γ = {a₁+b₁, a₂−b₂}`; caps to `CP²#-CP²`.
pub fn d2() -> RelativeTrisectionDiagram {
    let s = SurfaceModel::new(2, 2);
    relative(
        vec![s.a(1), s.a(2)],
        vec![s.b(1), s.b(2)],
        vec![&s.a(1) + &s.b(1), &s.a(2) - &s.b(2)],
    )
}

fn genus_one(beta: H1Class, gamma: H1Class) -> ClosedTrisectionDiagram {
    let s = SurfaceModel::closed(1);
    ClosedTrisectionDiagram::new(s, vec![s.a(1)], vec![beta], vec![gamma]).expect("bundled diagram")
}

pub fn s4() -> ClosedTrisectionDiagram {
    ClosedTrisectionDiagram::new(SurfaceModel::closed(0), vec![], vec![], vec![])
        .expect("bundled diagram")
}

pub fn s1xs3() -> ClosedTrisectionDiagram {
    let s = SurfaceModel::closed(1);
    genus_one(s.a(1), s.a(1))
}

pub fn cp2() -> ClosedTrisectionDiagram {
    let s = SurfaceModel::closed(1);
    genus_one(s.b(1), &s.a(1) + &s.b(1))
}

pub fn cp2_bar() -> ClosedTrisectionDiagram {
    let s = SurfaceModel::closed(1);
    genus_one(s.b(1), &s.a(1) - &s.b(1))
}

/// `(file stem, document)` for every bundled diagram.
pub fn corpus() -> Vec<(&'static str, DiagramDocument)> {
    let doc =
        |d: Diagram, name: &str, what: &str| DiagramDocument::new(d).with_metadata(name, what);
    vec![
        (
            "D1",
            doc(
                d1().into(),
                "D1",
                &format!("(2,1;0,2) relative diagram of S^2 x D^2 capping off to S^2 x S^2; {RECONSTRUCTION_NOTE}"),
            ),
        ),
        (
            "D2",
            doc(
                d2().into(),
                "D2",
                &format!("(2,1;0,2) relative diagram of S^2 x D^2 capping off to CP^2 # -CP^2; {RECONSTRUCTION_NOTE}"),
            ),
        ),
        ("S4", doc(s4().into(), "S4", "genus-0 diagram of the 4-sphere")),
        ("S1xS3", doc(s1xs3().into(), "S1xS3", "genus-1 diagram of S^1 x S^3")),
        ("CP2", doc(cp2().into(), "CP2", "genus-1 diagram of the complex projective plane")),
        ("CP2bar", doc(cp2_bar().into(), "CP2bar", "genus-1 diagram of CP^2 with reversed orientation")),
    ]
}

/// Looks up a bundled document by file stem, case-insensitively.
pub fn by_name(name: &str) -> Option<DiagramDocument> {
    corpus()
        .into_iter()
        .find(|(stem, _)| stem.eq_ignore_ascii_case(name))
        .map(|(_, doc)| doc)
}
