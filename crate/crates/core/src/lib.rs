//! Homological toolkit for trisection diagrams of 4-manifolds.
//!
//! Diagrams are carried as a surface `Σ_{g,b}` plus three families of curve
//! homology classes. The crate validates diagrams against the homological
//! shadow of the standard diagrams, applies handleslides and Dehn-twist
//! transvections, caps relative diagrams off to closed ones, and computes
//! invariants (homology, intersection form) of the resulting closed
//! 4-manifolds. All arithmetic is exact.

pub mod bundled;
pub mod demo;
pub mod diagram;
pub mod error;
pub mod format;
pub mod invariants;
pub mod lattice;
pub mod moves;
pub mod params;
mod reduce;
pub mod report;
pub mod surface;

pub use diagram::{
    pair_type, standard_closed_diagram, standard_relative_diagram, validate_closed,
    validate_relative, ClosedTrisectionDiagram, Diagram, DiagramType, Family,
    RelativeTrisectionDiagram, TrisectionDiagram, ValidationReport,
};
pub use error::Error;
pub use format::{parse_diagram, serialize_diagram, DiagramDocument, ParsedDocument};
pub use invariants::{
    distinguish, homology, intersection_form, invariant_report, DistinguishVerdict,
    HomologyProfile, IntersectionForm, InvariantReport, Outcome, Parity,
};
pub use lattice::{smith_normal_form, IntegerMatrix, SmithNormalForm};
pub use moves::{
    apply_move, apply_moves, cap_off, handleslide, transvection, Move, Sign, SymplecticMap,
};
pub use params::{
    enumerate_types, euler_characteristic_closed, euler_characteristic_relative,
    minimal_genus_bound, openbook_boundary_filter, Boundary, GenusBound, RelativeTrisectionType,
};
pub use surface::{
    cap_classes, lagrangian_span, lattice_ops, symplectic_pairing, AbelianGroup, H1Class,
    LagrangianSubgroup, LatticeOp, LatticeOutcome, SurfaceModel,
};
