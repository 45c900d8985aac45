//! Parameter arithmetic for relative trisection types `(g,k;p,b)`: the
//! admissibility inequalities, Euler characteristic, enumeration at fixed
//! Euler characteristic, and the open-book page/boundary rule table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Upper end of the genus scan in [`minimal_genus_bound`].
pub const GENUS_SCAN_CAP: usize = 16;

/// An admissible relative trisection type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelativeTrisectionType {
    pub g: usize,
    pub k: usize,
    pub p: usize,
    pub b: usize,
}

impl RelativeTrisectionType {
    /// Checks `g,k,p ≥ 0`, `b ≥ 1` and `2p+b−1 ≤ k ≤ g+p+b−1`.
    pub fn new(g: usize, k: usize, p: usize, b: usize) -> Result<Self, Error> {
        if b < 1 {
            return Err(Error::TypeConstraint(format!(
                "(g,k;p,b)=({g},{k};{p},{b}): b must be at least 1"
            )));
        }
        if p > g {
            return Err(Error::TypeConstraint(format!(
                "(g,k;p,b)=({g},{k};{p},{b}): p exceeds g"
            )));
        }
        let (lo, hi) = (2 * p + b - 1, g + p + b - 1);
        if k < lo || k > hi {
            return Err(Error::TypeConstraint(format!(
                "(g,k;p,b)=({g},{k};{p},{b}): need {lo} <= k <= {hi}"
            )));
        }
        Ok(Self { g, k, p, b })
    }

    /// Number of dual curve pairs in the standard pair: `A = g+p+b−1−k`.
    pub fn dual_pairs(&self) -> usize {
        self.g + self.p + self.b - 1 - self.k
    }

    pub fn euler_characteristic(&self) -> i64 {
        let (g, k, p, b) = (self.g as i64, self.k as i64, self.p as i64, self.b as i64);
        g - 3 * k + 3 * p + 2 * b - 1
    }

    pub fn page(&self) -> OpenBookPage {
        OpenBookPage {
            p: self.p,
            b: self.b,
        }
    }
}

impl fmt::Display for RelativeTrisectionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.g, self.k, self.p, self.b)
    }
}

/// Page `Σ_{p,b}` of the open book induced on the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpenBookPage {
    pub p: usize,
    pub b: usize,
}

impl OpenBookPage {
    pub fn is_disk(&self) -> bool {
        self.p == 0 && self.b == 1
    }

    pub fn is_annulus(&self) -> bool {
        self.p == 0 && self.b == 2
    }
}

pub fn euler_characteristic_relative(g: usize, k: usize, p: usize, b: usize) -> Result<i64, Error> {
    Ok(RelativeTrisectionType::new(g, k, p, b)?.euler_characteristic())
}

pub fn euler_characteristic_closed(g: usize, k: usize) -> Result<i64, Error> {
    if k > g {
        return Err(Error::TypeConstraint(format!(
            "(g,k)=({g},{k}): need k <= g"
        )));
    }
    Ok(2 + g as i64 - 3 * k as i64)
}

/// All admissible types with `g ≤ g_max` and Euler characteristic `chi`,
/// sorted by `(g,k,p,b)`.
///
/// For fixed `g`, `p` and `A ∈ [0, g−p]` the type is forced:
/// `b = 2 − χ + 3A − 2g` and `k = g+p+b−1−A`.
pub fn enumerate_types(chi: i64, g_max: usize) -> Vec<RelativeTrisectionType> {
    let mut out = Vec::new();
    for g in 0..=g_max {
        for p in 0..=g {
            for a in 0..=(g - p) {
                let b = 2 - chi + 3 * a as i64 - 2 * g as i64;
                if b < 1 {
                    continue;
                }
                let k = (g + p) as i64 + b - 1 - a as i64;
                if k < 0 {
                    continue;
                }
                if let Ok(t) = RelativeTrisectionType::new(g, k as usize, p, b as usize) {
                    debug_assert_eq!(t.euler_characteristic(), chi);
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// Declared boundary 3-manifold for the open-book filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    S3,
    S2xS1,
    Lens,
    Other,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::S3 => "s3",
            Boundary::S2xS1 => "s2xs1",
            Boundary::Lens => "lens",
            Boundary::Other => "other",
        })
    }
}

impl FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "s3" => Ok(Boundary::S3),
            "s2xs1" => Ok(Boundary::S2xS1),
            "lens" => Ok(Boundary::Lens),
            "other" => Ok(Boundary::Other),
            _ => Err(Error::Schema(format!(
                "unknown boundary {s:?} (expected s3, s2xs1, lens or other)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PageCompatibility {
    Compatible,
    Incompatible,
    /// The rule table says nothing about this page.
    Unconstrained,
}

/// The page/boundary rule table. A disk page only bounds `S³`; an annulus
/// page bounds `S³`, `S²×S¹` or a lens space.
pub fn page_compatibility(page: OpenBookPage, boundary: Boundary) -> PageCompatibility {
    use PageCompatibility::*;
    if page.is_disk() {
        if boundary == Boundary::S3 {
            Compatible
        } else {
            Incompatible
        }
    } else if page.is_annulus() {
        match boundary {
            Boundary::S3 | Boundary::S2xS1 | Boundary::Lens => Compatible,
            Boundary::Other => Incompatible,
        }
    } else {
        Unconstrained
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilteredType {
    #[serde(rename = "type")]
    pub ty: RelativeTrisectionType,
    pub status: PageCompatibility,
}

/// Drops the types whose page cannot bound `boundary`. Survivors carry their
/// rule-table status, so unconstrained pages stay visible as such.
pub fn openbook_boundary_filter(
    types: &[RelativeTrisectionType],
    boundary: Boundary,
) -> Vec<FilteredType> {
    types
        .iter()
        .map(|&ty| FilteredType {
            ty,
            status: page_compatibility(ty.page(), boundary),
        })
        .filter(|f| f.status != PageCompatibility::Incompatible)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GenusBound {
    Found {
        genus: usize,
        evidence: Vec<FilteredType>,
    },
    NotFound {
        cap: usize,
    },
}

/// Least genus `g ≤ 16` at which some type with Euler characteristic `chi`
/// survives the boundary filter.
pub fn minimal_genus_bound(chi: i64, boundary: Boundary) -> GenusBound {
    let all = enumerate_types(chi, GENUS_SCAN_CAP);
    for g in 0..=GENUS_SCAN_CAP {
        let slice: Vec<_> = all.iter().copied().filter(|t| t.g == g).collect();
        let evidence = openbook_boundary_filter(&slice, boundary);
        if !evidence.is_empty() {
            return GenusBound::Found { genus: g, evidence };
        }
    }
    GenusBound::NotFound {
        cap: GENUS_SCAN_CAP,
    }
}
