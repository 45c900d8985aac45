//! Relative and closed trisection diagrams at the level of homology classes,
//! homological validation, and the standard diagram generators.
//!
//! A diagram that passes validation satisfies necessary homological
//! conditions only. Whether it is a genuine trisection diagram depends on
//! curve geometry that is not modelled here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lattice::{self, IntegerMatrix};
use crate::params::RelativeTrisectionType;
use crate::surface::{lagrangian_span, H1Class, SurfaceModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Alpha, Family::Beta, Family::Gamma];

    /// The three pairs in validation order.
    pub const PAIRS: [(Family, Family); 3] = [
        (Family::Alpha, Family::Beta),
        (Family::Beta, Family::Gamma),
        (Family::Gamma, Family::Alpha),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alpha => "alpha",
            Family::Beta => "beta",
            Family::Gamma => "gamma",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "a" | "alpha" => Ok(Family::Alpha),
            "b" | "beta" => Ok(Family::Beta),
            "g" | "gamma" => Ok(Family::Gamma),
            _ => Err(Error::BadMove(format!("unknown family {s:?}"))),
        }
    }
}

/// Shared access to a surface with three curve families.
pub trait TrisectionDiagram: Clone {
    fn surface(&self) -> &SurfaceModel;
    fn family(&self, f: Family) -> &[H1Class];
    fn family_mut(&mut self, f: Family) -> &mut Vec<H1Class>;

    fn families(&self) -> [&[H1Class]; 3] {
        [
            self.family(Family::Alpha),
            self.family(Family::Beta),
            self.family(Family::Gamma),
        ]
    }

    /// Applies `f` to every class of every family.
    fn map_classes(&self, mut f: impl FnMut(&H1Class) -> H1Class) -> Self {
        let mut out = self.clone();
        for fam in Family::ALL {
            let mapped: Vec<H1Class> = self.family(fam).iter().map(&mut f).collect();
            *out.family_mut(fam) = mapped;
        }
        out
    }
}

fn check_classes(surface: &SurfaceModel, families: [&[H1Class]; 3]) -> Result<(), Error> {
    for (fam, classes) in Family::ALL.iter().zip(families) {
        for (i, c) in classes.iter().enumerate() {
            if c.0.len() != surface.dim() {
                return Err(Error::Schema(format!(
                    "family {fam}, curve {}: expected length {}",
                    i + 1,
                    surface.dim()
                )));
            }
        }
    }
    Ok(())
}

macro_rules! diagram_type {
    ($name:ident) => {
        impl TrisectionDiagram for $name {
            fn surface(&self) -> &SurfaceModel {
                &self.surface
            }

            fn family(&self, f: Family) -> &[H1Class] {
                match f {
                    Family::Alpha => &self.alpha,
                    Family::Beta => &self.beta,
                    Family::Gamma => &self.gamma,
                }
            }

            fn family_mut(&mut self, f: Family) -> &mut Vec<H1Class> {
                match f {
                    Family::Alpha => &mut self.alpha,
                    Family::Beta => &mut self.beta,
                    Family::Gamma => &mut self.gamma,
                }
            }
        }
    };
}

/// Surface with boundary plus three families of `g − p` curve classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeTrisectionDiagram {
    pub surface: SurfaceModel,
    pub alpha: Vec<H1Class>,
    pub beta: Vec<H1Class>,
    pub gamma: Vec<H1Class>,
}

impl RelativeTrisectionDiagram {
    pub fn new(
        surface: SurfaceModel,
        alpha: Vec<H1Class>,
        beta: Vec<H1Class>,
        gamma: Vec<H1Class>,
    ) -> Result<Self, Error> {
        if surface.is_closed() {
            return Err(Error::IncompatibleSurface(
                "relative diagrams need at least one boundary circle".into(),
            ));
        }
        check_classes(&surface, [&alpha, &beta, &gamma])?;
        Ok(Self {
            surface,
            alpha,
            beta,
            gamma,
        })
    }

    /// `p = g − |α|`, when the family fits on the surface.
    pub fn page_genus(&self) -> Option<usize> {
        self.surface.genus.checked_sub(self.alpha.len())
    }
}

/// Closed surface plus three families of `g` curve classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedTrisectionDiagram {
    pub surface: SurfaceModel,
    pub alpha: Vec<H1Class>,
    pub beta: Vec<H1Class>,
    pub gamma: Vec<H1Class>,
}

impl ClosedTrisectionDiagram {
    pub fn new(
        surface: SurfaceModel,
        alpha: Vec<H1Class>,
        beta: Vec<H1Class>,
        gamma: Vec<H1Class>,
    ) -> Result<Self, Error> {
        if !surface.is_closed() {
            return Err(Error::IncompatibleSurface(format!(
                "closed diagrams live on closed surfaces, got {surface}"
            )));
        }
        check_classes(&surface, [&alpha, &beta, &gamma])?;
        Ok(Self {
            surface,
            alpha,
            beta,
            gamma,
        })
    }
}

diagram_type!(RelativeTrisectionDiagram);
diagram_type!(ClosedTrisectionDiagram);

/// Either kind of diagram; closed iff the surface has no boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Diagram {
    Relative(RelativeTrisectionDiagram),
    Closed(ClosedTrisectionDiagram),
}

impl Diagram {
    pub fn new(
        surface: SurfaceModel,
        alpha: Vec<H1Class>,
        beta: Vec<H1Class>,
        gamma: Vec<H1Class>,
    ) -> Result<Self, Error> {
        if surface.is_closed() {
            ClosedTrisectionDiagram::new(surface, alpha, beta, gamma).map(Diagram::Closed)
        } else {
            RelativeTrisectionDiagram::new(surface, alpha, beta, gamma).map(Diagram::Relative)
        }
    }

    pub fn surface(&self) -> &SurfaceModel {
        match self {
            Diagram::Relative(d) => d.surface(),
            Diagram::Closed(d) => d.surface(),
        }
    }

    pub fn family(&self, f: Family) -> &[H1Class] {
        match self {
            Diagram::Relative(d) => d.family(f),
            Diagram::Closed(d) => d.family(f),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            Diagram::Relative(d) => validate_relative(d),
            Diagram::Closed(d) => validate_closed(d),
        }
    }
}

impl From<RelativeTrisectionDiagram> for Diagram {
    fn from(d: RelativeTrisectionDiagram) -> Self {
        Diagram::Relative(d)
    }
}

impl From<ClosedTrisectionDiagram> for Diagram {
    fn from(d: ClosedTrisectionDiagram) -> Self {
        Diagram::Closed(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DiagramType {
    Relative {
        g: usize,
        k: usize,
        p: usize,
        b: usize,
    },
    Closed {
        g: usize,
        k: usize,
    },
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DiagramType::Relative { g, k, p, b } => write!(f, "({g},{k};{p},{b})"),
            DiagramType::Closed { g, k } => write!(f, "({g},{k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub inferred_type: Option<DiagramType>,
    /// `A` for the pairs (alpha,beta), (beta,gamma), (gamma,alpha); `None`
    /// where the pair is not homologically standard.
    pub pair_types: [Option<usize>; 3],
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn into_result(self) -> Result<DiagramType, Error> {
        match (self.ok, self.inferred_type) {
            (true, Some(t)) => Ok(t),
            _ => Err(Error::Invalid(Box::new(self))),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            writeln!(f, "status: homologically valid")?;
        } else {
            writeln!(f, "status: INVALID")?;
        }
        match self.inferred_type {
            Some(t) => writeln!(f, "type: {t}")?,
            None => writeln!(f, "type: undetermined")?,
        }
        let show = |a: Option<usize>| a.map_or("-".to_string(), |a| a.to_string());
        writeln!(
            f,
            "pair A-values: (alpha,beta)={} (beta,gamma)={} (gamma,alpha)={}",
            show(self.pair_types[0]),
            show(self.pair_types[1]),
            show(self.pair_types[2])
        )?;
        for failure in &self.failures {
            writeln!(f, "failure: {failure}")?;
        }
        Ok(())
    }
}

/// Number `A` of dual pairs in a homologically standard pair of families.
///
/// With `Mᵢⱼ = ω(δᵢ, εⱼ)`, the pair is standard when every nonzero Smith
/// divisor of `M` is 1 and the combined span has rank `n + A`, `A = rank M`.
pub fn pair_type(delta: &[H1Class], epsilon: &[H1Class], s: &SurfaceModel) -> Result<usize, Error> {
    if delta.len() != epsilon.len() {
        return Err(Error::Shape(format!(
            "pair of families with {} and {} curves",
            delta.len(),
            epsilon.len()
        )));
    }
    let n = delta.len();
    let m = s.pairing_matrix(delta, epsilon)?;
    let divisors = lattice::smith_normal_form(&m).divisors();
    let a = divisors.len();
    if let Some(d) = divisors.iter().find(|&&d| d != 1) {
        return Err(Error::NonstandardPair(format!(
            "pairing matrix has Smith divisor {d}"
        )));
    }
    let combined: Vec<H1Class> = delta.iter().chain(epsilon).cloned().collect();
    let span = lagrangian_span(&combined, s)?;
    if span.rank != n + a {
        return Err(Error::NonstandardPair(format!(
            "combined span has rank {}, expected {}",
            span.rank,
            n + a
        )));
    }
    Ok(a)
}

/// Per-family checks plus the three pair types. Shared by both validators.
fn check_families(
    surface: &SurfaceModel,
    families: [&[H1Class]; 3],
    failures: &mut Vec<String>,
) -> [Option<usize>; 3] {
    for (fam, classes) in Family::ALL.iter().zip(families) {
        for (i, c) in classes.iter().enumerate() {
            if !c.is_zero() && !c.is_primitive() {
                failures.push(format!(
                    "class not primitive: family {fam}, curve {} has content {}",
                    i + 1,
                    c.content()
                ));
            }
        }
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let w = surface.pairing(&classes[i], &classes[j]).unwrap_or(0);
                if w != 0 {
                    failures.push(format!(
                        "curves not disjoint: family {fam}, curves {} and {} pair to {w}",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        // Disjoint curves with connected complement span a direct summand.
        if let Ok(span) = lagrangian_span(classes, surface) {
            if span.rank != classes.len() || !span.is_summand() {
                failures.push(format!(
                    "family {fam} does not span a rank-{} direct summand (rank {}, divisors {:?})",
                    classes.len(),
                    span.rank,
                    span.elementary_divisors
                ));
            }
        }
    }
    let mut types = [None; 3];
    for (slot, (x, y)) in types.iter_mut().zip(Family::PAIRS) {
        let idx = |f: Family| Family::ALL.iter().position(|&g| g == f).unwrap();
        match pair_type(families[idx(x)], families[idx(y)], surface) {
            Ok(a) => *slot = Some(a),
            Err(e) => failures.push(format!("{e}: ({x}, {y})")),
        }
    }
    types
}

fn common_pair_type(types: [Option<usize>; 3], failures: &mut Vec<String>) -> Option<usize> {
    match types {
        [Some(x), Some(y), Some(z)] if x == y && y == z => Some(x),
        [Some(x), Some(y), Some(z)] => {
            failures.push(format!("inconsistent pair types: A-values ({x},{y},{z})"));
            None
        }
        _ => None,
    }
}

pub fn validate_relative(d: &RelativeTrisectionDiagram) -> ValidationReport {
    let s = d.surface;
    let mut failures = Vec::new();
    let sizes = d.families().map(|f| f.len());
    if sizes[0] != sizes[1] || sizes[1] != sizes[2] {
        failures.push(format!(
            "family sizes differ: alpha {}, beta {}, gamma {}",
            sizes[0], sizes[1], sizes[2]
        ));
        return ValidationReport {
            ok: false,
            inferred_type: None,
            pair_types: [None; 3],
            failures,
        };
    }
    let n = sizes[0];
    if n > s.genus {
        failures.push(format!("family size {n} exceeds genus {}", s.genus));
        return ValidationReport {
            ok: false,
            inferred_type: None,
            pair_types: [None; 3],
            failures,
        };
    }
    let (g, p, b) = (s.genus, s.genus - n, s.boundary);
    let pair_types = check_families(&s, d.families(), &mut failures);
    let mut inferred_type = None;
    if let Some(a) = common_pair_type(pair_types, &mut failures) {
        if a > g - p {
            failures.push(format!(
                "type constraint violated: A = {a} exceeds g - p = {}",
                g - p
            ));
        } else {
            let k = g + p + b - 1 - a;
            match RelativeTrisectionType::new(g, k, p, b) {
                Ok(_) => inferred_type = Some(DiagramType::Relative { g, k, p, b }),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    ValidationReport {
        ok: failures.is_empty(),
        inferred_type,
        pair_types,
        failures,
    }
}

pub fn validate_closed(d: &ClosedTrisectionDiagram) -> ValidationReport {
    let g = d.surface.genus;
    let mut failures = Vec::new();
    let sizes = d.families().map(|f| f.len());
    if sizes.iter().any(|&n| n != g) {
        failures.push(format!(
            "family sizes must equal genus {g}: alpha {}, beta {}, gamma {}",
            sizes[0], sizes[1], sizes[2]
        ));
        return ValidationReport {
            ok: false,
            inferred_type: None,
            pair_types: [None; 3],
            failures,
        };
    }
    let pair_types = check_families(&d.surface, d.families(), &mut failures);
    let inferred_type =
        common_pair_type(pair_types, &mut failures).map(|a| DiagramType::Closed { g, k: g - a });
    ValidationReport {
        ok: failures.is_empty(),
        inferred_type,
        pair_types,
        failures,
    }
}

/// Families on handles `offset+1 ..= offset+n` with `dual` dual slots:
/// `α = aₕ`; on a dual slot `β = bₕ`, `γ = aₕ + bₕ`, otherwise `β = γ = aₕ`.
fn standard_families(s: &SurfaceModel, offset: usize, n: usize, dual: usize) -> [Vec<H1Class>; 3] {
    let mut out: [Vec<H1Class>; 3] = Default::default();
    for i in 1..=n {
        let h = offset + i;
        let (a, b) = (s.a(h), s.b(h));
        let (beta, gamma) = if i <= dual {
            (b.clone(), &a + &b)
        } else {
            (a.clone(), a.clone())
        };
        out[0].push(a);
        out[1].push(beta);
        out[2].push(gamma);
    }
    out
}

/// Homological model of the standard diagram of type `(g,k;p,b)`.
pub fn standard_relative_diagram(
    g: usize,
    k: usize,
    p: usize,
    b: usize,
) -> Result<RelativeTrisectionDiagram, Error> {
    let ty = RelativeTrisectionType::new(g, k, p, b)?;
    let s = SurfaceModel::new(g, b);
    let [alpha, beta, gamma] = standard_families(&s, p, g - p, ty.dual_pairs());
    RelativeTrisectionDiagram::new(s, alpha, beta, gamma)
}

/// Homological model of the standard diagram of type `(g,k)`.
pub fn standard_closed_diagram(g: usize, k: usize) -> Result<ClosedTrisectionDiagram, Error> {
    if k > g {
        return Err(Error::TypeConstraint(format!(
            "(g,k)=({g},{k}): need k <= g"
        )));
    }
    let s = SurfaceModel::closed(g);
    let [alpha, beta, gamma] = standard_families(&s, 0, g, g - k);
    ClosedTrisectionDiagram::new(s, alpha, beta, gamma)
}

/// Full coordinate matrix of a family (rows are classes).
pub fn family_matrix(s: &SurfaceModel, classes: &[H1Class]) -> IntegerMatrix {
    IntegerMatrix::from_rows(
        &classes.iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
        s.dim(),
    )
    .expect("class lengths checked at construction")
}
