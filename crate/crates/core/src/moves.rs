//! Diagram moves: handleslides within a family, the homological action of
//! Dehn twists (transvections), and capping a relative diagram off to a
//! closed one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{
    validate_closed, validate_relative, ClosedTrisectionDiagram, DiagramType, Family,
    RelativeTrisectionDiagram, TrisectionDiagram,
};
use crate::error::Error;
use crate::lattice::IntegerMatrix;
use crate::surface::{cap_classes, H1Class, SurfaceModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::BadMove(format!("unknown sign {s:?}"))),
        }
    }
}

/// A single move. Curve indices are 0-based; the textual form is 1-based:
/// `slide <family> <curve> <over> <+|->` and `twist <c1,c2,...> <power>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Move {
    Handleslide {
        family: Family,
        slid: usize,
        over: usize,
        sign: Sign,
    },
    Transvection {
        class: H1Class,
        power: i64,
    },
}

impl Move {
    pub fn inverse(&self) -> Move {
        match self {
            Move::Handleslide {
                family,
                slid,
                over,
                sign,
            } => Move::Handleslide {
                family: *family,
                slid: *slid,
                over: *over,
                sign: sign.flip(),
            },
            Move::Transvection { class, power } => Move::Transvection {
                class: class.clone(),
                power: -power,
            },
        }
    }

    /// The same move read on the capped surface, or `None` when it acts
    /// trivially there. A twist along `c` with capped class `m·c₀` (`c₀`
    /// primitive) acts as `T_{c₀}^{n·m²}`.
    pub fn capped(&self, s: &SurfaceModel) -> Result<Option<Move>, Error> {
        Ok(match self {
            Move::Handleslide { .. } => Some(self.clone()),
            Move::Transvection { class, power } => {
                let (_, mut c) = cap_classes(s, std::slice::from_ref(class))?;
                let c = c.pop().expect("one class");
                let m = c.content();
                if m == 0 || *power == 0 {
                    return Ok(None);
                }
                let power = m
                    .checked_mul(m)
                    .and_then(|m2| m2.checked_mul(*power))
                    .ok_or_else(|| Error::Overflow("capped twist power".into()))?;
                Some(Move::Transvection {
                    class: H1Class(c.0.iter().map(|x| x / m).collect()),
                    power,
                })
            }
        })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Handleslide {
                family,
                slid,
                over,
                sign,
            } => {
                write!(f, "slide {family} {} {} {sign}", slid + 1, over + 1)
            }
            Move::Transvection { class, power } => {
                let coords: Vec<String> = class.0.iter().map(|x| x.to_string()).collect();
                write!(f, "twist {} {power}", coords.join(","))
            }
        }
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let index = |w: &str| -> Result<usize, Error> {
            match w.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::BadMove(format!(
                    "curve index {w:?} must be a positive integer"
                ))),
            }
        };
        match words.as_slice() {
            ["slide", family, slid, over, sign] => Ok(Move::Handleslide {
                family: family.parse()?,
                slid: index(slid)?,
                over: index(over)?,
                sign: sign.parse()?,
            }),
            ["twist", class, power] => Ok(Move::Transvection {
                class: parse_class(class)?,
                power: power
                    .parse()
                    .map_err(|_| Error::BadMove(format!("power {power:?} is not an integer")))?,
            }),
            _ => Err(Error::BadMove(format!("cannot parse move {s:?}"))),
        }
    }
}

/// Comma-separated integer coordinates.
pub fn parse_class(text: &str) -> Result<H1Class, Error> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::BadMove(format!("class coordinate {t:?} is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(H1Class)
}

/// Replaces `family[slid]` by `family[slid] + sign·family[over]`.
pub fn handleslide<D: TrisectionDiagram>(
    d: &D,
    family: Family,
    slid: usize,
    over: usize,
    sign: Sign,
) -> Result<D, Error> {
    if slid == over {
        return Err(Error::SelfSlide);
    }
    let n = d.family(family).len();
    if slid >= n || over >= n {
        return Err(Error::IndexOutOfRange(format!(
            "family {family} has {n} curves, slide {} over {}",
            slid + 1,
            over + 1
        )));
    }
    let mut out = d.clone();
    let curves = out.family_mut(family);
    curves[slid] = curves[slid].add_multiple(&curves[over], sign.value());
    debug_assert!(
        !is_isotropic(d.surface(), d.family(family))
            || is_isotropic(d.surface(), out.family(family)),
        "handleslide broke homological disjointness"
    );
    Ok(out)
}

fn is_isotropic(s: &SurfaceModel, classes: &[H1Class]) -> bool {
    classes
        .iter()
        .all(|x| classes.iter().all(|y| matches!(s.pairing(x, y), Ok(0))))
}

/// Integer matrix acting on column coordinate vectors, preserving `ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticMap {
    pub surface: SurfaceModel,
    pub matrix: IntegerMatrix,
}

impl SymplecticMap {
    /// Checks that `matrix` preserves `ω` and permutes the boundary classes.
    pub fn new(surface: SurfaceModel, matrix: IntegerMatrix) -> Result<Self, Error> {
        let dim = surface.dim();
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::Shape(format!(
                "{}x{} matrix on a surface of dimension {dim}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let map = Self { surface, matrix };
        let units: Vec<H1Class> = (0..dim)
            .map(|k| {
                let mut c = surface.zero();
                c.0[k] = 1;
                c
            })
            .collect();
        let images: Vec<H1Class> = units.iter().map(|u| map.apply(u)).collect();
        for i in 0..dim {
            for j in 0..dim {
                if surface.pairing(&images[i], &images[j])?
                    != surface.pairing(&units[i], &units[j])?
                {
                    return Err(Error::Shape(
                        "matrix does not preserve the intersection pairing".into(),
                    ));
                }
            }
        }
        let boundary = &units[2 * surface.genus..];
        if !images[2 * surface.genus..]
            .iter()
            .all(|im| boundary.contains(im))
        {
            return Err(Error::Shape(
                "matrix does not permute the boundary classes".into(),
            ));
        }
        Ok(map)
    }

    /// `x ↦ x + n·ω(x,c)·c`.
    pub fn transvection(surface: SurfaceModel, c: &H1Class, n: i64) -> Result<Self, Error> {
        surface.check(c)?;
        if !c.is_primitive() {
            return Err(Error::NotPrimitive(format!("twisting class {c}")));
        }
        let dim = surface.dim();
        let mut m = IntegerMatrix::identity(dim);
        for k in 0..dim {
            let mut e = surface.zero();
            e.0[k] = 1;
            let w = surface.pairing(&e, c)?;
            for i in 0..dim {
                m[(i, k)] += n * w * c.0[i];
            }
        }
        Ok(Self { surface, matrix: m })
    }

    pub fn apply(&self, x: &H1Class) -> H1Class {
        let dim = self.matrix.rows();
        H1Class(
            (0..dim)
                .map(|i| (0..dim).map(|j| self.matrix[(i, j)] * x.0[j]).sum())
                .collect(),
        )
    }
}

/// Applies the `n`-fold twist along `c` to every curve of every family.
pub fn transvection<D: TrisectionDiagram>(d: &D, c: &H1Class, n: i64) -> Result<D, Error> {
    let map = SymplecticMap::transvection(*d.surface(), c, n)?;
    Ok(d.map_classes(|x| map.apply(x)))
}

pub fn apply_move<D: TrisectionDiagram>(d: &D, m: &Move) -> Result<D, Error> {
    match m {
        Move::Handleslide {
            family,
            slid,
            over,
            sign,
        } => handleslide(d, *family, *slid, *over, *sign),
        Move::Transvection { class, power } => transvection(d, class, *power),
    }
}

pub fn apply_moves<D: TrisectionDiagram>(d: &D, moves: &[Move]) -> Result<D, Error> {
    moves
        .iter()
        .try_fold(d.clone(), |acc, m| apply_move(&acc, m))
}

/// Reversed sequence of inverses: undoes `moves`.
pub fn inverse_sequence(moves: &[Move]) -> Vec<Move> {
    moves.iter().rev().map(Move::inverse).collect()
}

/// Glues a disk to every boundary circle of a `(g,k;0,b)` diagram, giving a
/// closed diagram of type `(g, k−b+1)`.
pub fn cap_off(d: &RelativeTrisectionDiagram) -> Result<ClosedTrisectionDiagram, Error> {
    let s = d.surface;
    if d.alpha.len() < s.genus {
        return Err(Error::CapRequiresClosedPages {
            genus: s.genus,
            size: d.alpha.len(),
        });
    }
    let report = validate_relative(d);
    let Some(DiagramType::Relative { g, k, p, b }) = report.inferred_type.filter(|_| report.ok)
    else {
        return Err(Error::Invalid(Box::new(report)));
    };
    if p != 0 {
        return Err(Error::CapRequiresClosedPages {
            genus: g,
            size: d.alpha.len(),
        });
    }
    let project = |classes: &[H1Class]| cap_classes(&s, classes).map(|(_, c)| c);
    let capped = ClosedTrisectionDiagram::new(
        SurfaceModel::closed(g),
        project(&d.alpha)?,
        project(&d.beta)?,
        project(&d.gamma)?,
    )?;
    let closed = validate_closed(&capped);
    // k ≥ b − 1 holds for every admissible type with p = 0.
    let expected = DiagramType::Closed { g, k: k + 1 - b };
    if !closed.ok || closed.inferred_type != Some(expected) {
        return Err(Error::Invalid(Box::new(closed)));
    }
    Ok(capped)
}
