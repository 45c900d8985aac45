//! Invariants of the closed 4-manifold determined by a closed trisection
//! diagram, computed from the three curve lattices `L_α, L_β, L_γ ⊂ H₁(Σ)`:
//!
//! * `H₁ = H₁(Σ) / (L_α + L_β + L_γ)`
//! * `H₂` free part `= N / Dn` with `N = L_α ∩ (L_β + L_γ)` and
//!   `Dn = (L_α ∩ L_β) + (L_α ∩ L_γ)`
//! * `Q(x, y) = σ·ω(x, y_β)` where `y = y_β + y_γ`, `y_β ∈ L_β`, `y_γ ∈ L_γ`.
//!
//! Torsion in `H₂` and `H₃` is read off `H₁` by duality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::{
    validate_closed, validate_relative, ClosedTrisectionDiagram, DiagramType,
    RelativeTrisectionDiagram,
};
use crate::error::Error;
use crate::lattice::{self, IntegerMatrix};
use crate::moves::cap_off;
use crate::params::euler_characteristic_closed;
use crate::surface::{lagrangian_span, AbelianGroup, H1Class, LagrangianSubgroup, SurfaceModel};

/// Global orientation sign of the pairing formula, pinned so that the
/// `CP²` model `({a₁}, {b₁}, {a₁+b₁})` has form `[+1]`.
pub const FORM_SIGN: i64 = -1;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub h3: AbelianGroup,
    pub h4: AbelianGroup,
    /// Set when `H₁` has torsion, so `H₂` torsion was inferred by duality.
    pub reduced_confidence: bool,
}

impl HomologyProfile {
    pub fn euler_characteristic(&self) -> i64 {
        let r = |h: &AbelianGroup| h.free_rank as i64;
        r(&self.h0) - r(&self.h1) + r(&self.h2) - r(&self.h3) + r(&self.h4)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H0 = {}, H1 = {}, H2 = {}, H3 = {}, H4 = {}",
            self.h0, self.h1, self.h2, self.h3, self.h4
        )?;
        if self.reduced_confidence {
            write!(f, " (reduced confidence: torsion inferred by duality)")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionForm {
    pub matrix: IntegerMatrix,
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
    pub determinant: i64,
}

impl IntersectionForm {
    pub fn from_matrix(matrix: IntegerMatrix) -> Result<Self, Error> {
        if !matrix.is_symmetric() {
            return Err(Error::PairingIllDefined(format!(
                "form {matrix} is not symmetric"
            )));
        }
        Ok(Self {
            rank: matrix.rows(),
            signature: signature(&matrix),
            parity: parity(&matrix),
            determinant: matrix.determinant()?,
            matrix,
        })
    }
}

/// Even iff every diagonal entry is even.
pub fn parity(q: &IntegerMatrix) -> Parity {
    if (0..q.rows()).all(|i| q[(i, i)] % 2 == 0) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Signature by exact congruence diagonalization over the rationals.
pub fn signature(q: &IntegerMatrix) -> i64 {
    let n = q.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(q[(i, j)])))
                .collect()
        })
        .collect();
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k ← e_k + e_j; the new diagonal entry is 2·a[k][j].
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[k] += v;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in 0..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for row in a.iter_mut() {
                let v = &f * &row[k];
                row[i] -= v;
            }
        }
    }
    (0..n)
        .map(|i| match a[i][i].cmp(&BigRational::zero()) {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => 0,
        })
        .sum()
}

struct Lattices {
    surface: SurfaceModel,
    alpha: LagrangianSubgroup,
    beta: LagrangianSubgroup,
    gamma: LagrangianSubgroup,
}

impl Lattices {
    fn new(d: &ClosedTrisectionDiagram) -> Result<Self, Error> {
        let s = d.surface;
        Ok(Self {
            surface: s,
            alpha: lagrangian_span(&d.alpha, &s)?,
            beta: lagrangian_span(&d.beta, &s)?,
            gamma: lagrangian_span(&d.gamma, &s)?,
        })
    }

    fn h1(&self) -> Result<AbelianGroup, Error> {
        let all = self.alpha.sum(&self.beta)?.sum(&self.gamma)?;
        Ok(AbelianGroup::cokernel(&all.rows(), self.surface.dim()))
    }

    /// Lifts to `N` of a basis of the free part of `N / Dn`.
    fn h2_basis(&self) -> Result<Vec<H1Class>, Error> {
        let n = self.alpha.intersection(&self.beta.sum(&self.gamma)?)?;
        let dn = self
            .alpha
            .intersection(&self.beta)?
            .sum(&self.alpha.intersection(&self.gamma)?)?;
        let n_matrix = IntegerMatrix::from_rows(&n.rows(), self.surface.dim())?;
        let in_n: Vec<Vec<i64>> = dn
            .basis
            .iter()
            .map(|y| {
                lattice::solve_left(&n_matrix, &y.0)
                    .ok_or_else(|| Error::PairingIllDefined("Dn is not contained in N".into()))
            })
            .collect::<Result<_, _>>()?;
        let m = IntegerMatrix::from_rows(&in_n, n.rank)?;
        let snf = lattice::smith_normal_form(&m);
        // Rows r.. of V⁻¹ complement the saturation of Dn inside N.
        let new_basis = &snf.v_inv * &n_matrix;
        Ok((snf.rank()..n.rank)
            .map(|i| H1Class(new_basis.row(i).to_vec()))
            .collect())
    }

    /// All integral `L_β` parts `y_β` of decompositions `y = y_β + y_γ`: the
    /// one found by solving, plus shifts by each generator of `L_β ∩ L_γ`.
    fn beta_parts(&self, y: &H1Class) -> Result<Vec<H1Class>, Error> {
        let mut rows = self.beta.rows();
        rows.extend(self.gamma.rows());
        let m = IntegerMatrix::from_rows(&rows, self.surface.dim())?;
        let c = lattice::solve_left(&m, &y.0)
            .ok_or_else(|| Error::PairingIllDefined(format!("{y} is not in L_beta + L_gamma")))?;
        let mut y_beta = self.surface.zero();
        for (coef, b) in c.iter().zip(&self.beta.basis) {
            y_beta = y_beta.add_multiple(b, *coef);
        }
        let mut parts = vec![y_beta.clone()];
        for z in self.beta.intersection(&self.gamma)?.basis {
            parts.push(&y_beta + &z);
        }
        Ok(parts)
    }
}

fn checked_type(d: &ClosedTrisectionDiagram) -> Result<(usize, usize), Error> {
    match validate_closed(d).into_result()? {
        DiagramType::Closed { g, k } => Ok((g, k)),
        DiagramType::Relative { .. } => unreachable!("closed validation infers closed types"),
    }
}

pub fn homology(d: &ClosedTrisectionDiagram) -> Result<HomologyProfile, Error> {
    let (g, k) = checked_type(d)?;
    let lat = Lattices::new(d)?;
    let h1 = lat.h1()?;
    let b2 = lat.h2_basis()?.len();
    let profile = HomologyProfile {
        h0: AbelianGroup::free(1),
        h2: AbelianGroup {
            free_rank: b2,
            torsion: h1.torsion.clone(),
        },
        h3: h1.free_part(),
        h4: AbelianGroup::free(1),
        reduced_confidence: h1.has_torsion(),
        h1,
    };
    let expected = euler_characteristic_closed(g, k)?;
    let computed = profile.euler_characteristic();
    if computed != expected {
        return Err(Error::EulerMismatch { computed, expected });
    }
    Ok(profile)
}

pub fn intersection_form(d: &ClosedTrisectionDiagram) -> Result<IntersectionForm, Error> {
    checked_type(d)?;
    let lat = Lattices::new(d)?;
    let basis = lat.h2_basis()?;
    let s = lat.surface;
    let r = basis.len();
    let parts: Vec<Vec<H1Class>> = basis
        .iter()
        .map(|y| lat.beta_parts(y))
        .collect::<Result<_, _>>()?;
    let mut q = IntegerMatrix::zeros(r, r);
    for (i, x) in basis.iter().enumerate() {
        for (j, ys) in parts.iter().enumerate() {
            let values: Vec<i64> = ys
                .iter()
                .map(|y_beta| s.pairing(x, y_beta).map(|w| FORM_SIGN * w))
                .collect::<Result<_, _>>()?;
            if values.iter().any(|&v| v != values[0]) {
                return Err(Error::PairingIllDefined(format!(
                    "decompositions of basis class {} give values {values:?}",
                    j + 1
                )));
            }
            q[(i, j)] = values[0];
        }
    }
    IntersectionForm::from_matrix(q)
}

/// Everything computed about a closed diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub closed_type: DiagramType,
    pub homology: HomologyProfile,
    pub form: IntersectionForm,
    pub euler_characteristic: i64,
}

pub fn invariant_report(d: &ClosedTrisectionDiagram) -> Result<InvariantReport, Error> {
    let (g, k) = checked_type(d)?;
    Ok(InvariantReport {
        closed_type: DiagramType::Closed { g, k },
        homology: homology(d)?,
        form: intersection_form(d)?,
        euler_characteristic: euler_characteristic_closed(g, k)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Distinguished,
    /// Every computed invariant agrees. This does not mean equivalent.
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Distinguished => "distinguished",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub invariant: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.invariant, self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishVerdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub left: Option<InvariantReport>,
    pub right: Option<InvariantReport>,
}

fn first_difference(l: &InvariantReport, r: &InvariantReport) -> Option<Witness> {
    let candidates: [(&str, String, String); 7] = [
        (
            "closed type",
            l.closed_type.to_string(),
            r.closed_type.to_string(),
        ),
        ("H1", l.homology.h1.to_string(), r.homology.h1.to_string()),
        ("H2", l.homology.h2.to_string(), r.homology.h2.to_string()),
        ("H3", l.homology.h3.to_string(), r.homology.h3.to_string()),
        (
            "intersection form rank",
            l.form.rank.to_string(),
            r.form.rank.to_string(),
        ),
        (
            "intersection form signature",
            l.form.signature.to_string(),
            r.form.signature.to_string(),
        ),
        (
            "intersection form parity",
            l.form.parity.to_string(),
            r.form.parity.to_string(),
        ),
    ];
    candidates
        .into_iter()
        .find(|(_, a, b)| a != b)
        .map(|(name, left, right)| Witness {
            invariant: name.to_string(),
            left,
            right,
        })
}

/// Caps both diagrams off and compares their invariants. A difference proves
/// the relative diagrams inequivalent; agreement proves nothing.
pub fn distinguish(
    d: &RelativeTrisectionDiagram,
    e: &RelativeTrisectionDiagram,
) -> Result<DistinguishVerdict, Error> {
    let td = validate_relative(d).into_result()?;
    let te = validate_relative(e).into_result()?;
    if td != te {
        let report = |x| cap_off(x).and_then(|c| invariant_report(&c)).ok();
        return Ok(DistinguishVerdict {
            outcome: Outcome::Distinguished,
            witness: Some(Witness {
                invariant: "relative type".into(),
                left: td.to_string(),
                right: te.to_string(),
            }),
            left: report(d),
            right: report(e),
        });
    }
    let (left, right) = (
        invariant_report(&cap_off(d)?)?,
        invariant_report(&cap_off(e)?)?,
    );
    let witness = first_difference(&left, &right);
    Ok(DistinguishVerdict {
        outcome: if witness.is_some() {
            Outcome::Distinguished
        } else {
            Outcome::Inconclusive
        },
        witness,
        left: Some(left),
        right: Some(right),
    })
}
