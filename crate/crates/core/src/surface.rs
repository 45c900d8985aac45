//! Surfaces `Σ_{g,b}` with a fixed homology basis, the intersection pairing,
//! sublattices spanned by curve classes, and the capping projection.
//!
//! Coordinates are ordered `(a₁, b₁, …, a_g, b_g, d₁, …, d_{b−1})`. The `aᵢ, bᵢ`
//! are handle classes with `ω(aᵢ, bᵢ) = +1`; the `dⱼ` are loops parallel to the
//! first `b − 1` boundary circles and lie in the radical of `ω`. The last
//! boundary loop is omitted: all `b` loops together bound.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lattice::{self, IntegerMatrix};

/// Compact oriented surface of genus `genus` with `boundary` boundary circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub genus: usize,
    pub boundary: usize,
}

impl SurfaceModel {
    pub const fn new(genus: usize, boundary: usize) -> Self {
        Self { genus, boundary }
    }

    pub const fn closed(genus: usize) -> Self {
        Self { genus, boundary: 0 }
    }

    /// Coordinate dimension `2g + max(b − 1, 0)`.
    pub const fn dim(&self) -> usize {
        2 * self.genus + self.boundary_classes()
    }

    pub const fn boundary_classes(&self) -> usize {
        self.boundary.saturating_sub(1)
    }

    pub const fn is_closed(&self) -> bool {
        self.boundary == 0
    }

    pub fn zero(&self) -> H1Class {
        H1Class(vec![0; self.dim()])
    }

    /// Handle class `aᵢ`, 1-based.
    pub fn a(&self, i: usize) -> H1Class {
        assert!(
            (1..=self.genus).contains(&i),
            "a{i} on genus {}",
            self.genus
        );
        self.unit(2 * (i - 1))
    }

    /// Handle class `bᵢ`, 1-based.
    pub fn b(&self, i: usize) -> H1Class {
        assert!(
            (1..=self.genus).contains(&i),
            "b{i} on genus {}",
            self.genus
        );
        self.unit(2 * (i - 1) + 1)
    }

    /// Boundary-parallel class `dⱼ`, 1-based, `j < b`.
    pub fn d(&self, j: usize) -> H1Class {
        assert!(
            (1..=self.boundary_classes()).contains(&j),
            "d{j} with {} boundary circles",
            self.boundary
        );
        self.unit(2 * self.genus + j - 1)
    }

    fn unit(&self, k: usize) -> H1Class {
        let mut c = self.zero();
        c.0[k] = 1;
        c
    }

    pub fn class(&self, coords: Vec<i64>) -> Result<H1Class, Error> {
        let c = H1Class(coords);
        self.check(&c)?;
        Ok(c)
    }

    pub fn check(&self, x: &H1Class) -> Result<(), Error> {
        if x.0.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::IncompatibleSurface(format!(
                "class of length {} on Σ_{{{},{}}} (dimension {})",
                x.0.len(),
                self.genus,
                self.boundary,
                self.dim()
            )))
        }
    }

    /// The intersection pairing `ω(x, y)`.
    pub fn pairing(&self, x: &H1Class, y: &H1Class) -> Result<i64, Error> {
        self.check(x)?;
        self.check(y)?;
        Ok(handle_pairing(&x.0, &y.0, self.genus))
    }

    /// Gram matrix `ω(xᵢ, yⱼ)`.
    pub fn pairing_matrix(&self, xs: &[H1Class], ys: &[H1Class]) -> Result<IntegerMatrix, Error> {
        let mut entries = Vec::with_capacity(xs.len() * ys.len());
        for x in xs {
            for y in ys {
                entries.push(self.pairing(x, y)?);
            }
        }
        IntegerMatrix::new(xs.len(), ys.len(), entries)
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{{{},{}}}", self.genus, self.boundary)
    }
}

fn handle_pairing(x: &[i64], y: &[i64], genus: usize) -> i64 {
    (0..genus)
        .map(|i| x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i])
        .sum()
}

/// Free function form of [`SurfaceModel::pairing`].
pub fn symplectic_pairing(x: &H1Class, y: &H1Class, s: &SurfaceModel) -> Result<i64, Error> {
    s.pairing(x, y)
}

/// First-homology class of a curve, as integer coordinates in the surface basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct H1Class(pub Vec<i64>);

impl H1Class {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// gcd of the coordinates is 1.
    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn content(&self) -> i64 {
        self.0.iter().fold(0, |g, &x| lattice::gcd(g, x))
    }

    pub fn scaled(&self, n: i64) -> H1Class {
        H1Class(self.0.iter().map(|&x| n * x).collect())
    }

    /// `self + n·other`.
    pub fn add_multiple(&self, other: &H1Class, n: i64) -> H1Class {
        assert_eq!(self.0.len(), other.0.len(), "class lengths differ");
        H1Class(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&x, &y)| x + n * y)
                .collect(),
        )
    }
}

impl Add for &H1Class {
    type Output = H1Class;

    fn add(self, rhs: &H1Class) -> H1Class {
        self.add_multiple(rhs, 1)
    }
}

impl Sub for &H1Class {
    type Output = H1Class;

    fn sub(self, rhs: &H1Class) -> H1Class {
        self.add_multiple(rhs, -1)
    }
}

impl Neg for &H1Class {
    type Output = H1Class;

    fn neg(self) -> H1Class {
        self.scaled(-1)
    }
}

impl fmt::Display for H1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Projection to the closed surface obtained by gluing a disk to every
/// boundary circle: the boundary coordinates are dropped.
pub fn cap_classes(
    s: &SurfaceModel,
    classes: &[H1Class],
) -> Result<(SurfaceModel, Vec<H1Class>), Error> {
    if s.is_closed() {
        return Err(Error::AlreadyClosed);
    }
    let capped = SurfaceModel::closed(s.genus);
    let out = classes
        .iter()
        .map(|c| {
            s.check(c)?;
            Ok(H1Class(c.0[..capped.dim()].to_vec()))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok((capped, out))
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t₁ ⊕ …`, with `t₁ | t₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// Cokernel of the inclusion of the row span of `generators` into `Z^dim`.
    pub fn cokernel(generators: &[Vec<i64>], dim: usize) -> Self {
        let m = IntegerMatrix::from_rows(generators, dim).expect("generator lengths");
        let divisors = lattice::smith_normal_form(&m).divisors();
        Self {
            free_rank: dim - divisors.len(),
            torsion: divisors.into_iter().filter(|&d| d > 1).collect(),
        }
    }

    pub fn free_part(&self) -> Self {
        Self::free(self.free_rank)
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Sublattice of `H₁(Σ)` spanned by a family of curve classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LagrangianSubgroup {
    pub surface: SurfaceModel,
    /// Hermite-reduced basis; canonical for the sublattice.
    pub basis: Vec<H1Class>,
    pub rank: usize,
    /// Elementary divisors of the inclusion into `H₁(Σ)`.
    pub elementary_divisors: Vec<i64>,
    pub isotropic: bool,
}

impl LagrangianSubgroup {
    /// Direct summand of the ambient lattice iff every divisor is 1.
    pub fn is_summand(&self) -> bool {
        self.elementary_divisors.iter().all(|&d| d == 1)
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.basis.iter().map(|c| c.0.clone()).collect()
    }

    pub fn contains(&self, x: &H1Class) -> bool {
        let m = IntegerMatrix::from_rows(&self.rows(), self.surface.dim()).expect("basis rows");
        lattice::solve_left(&m, &x.0).is_some()
    }

    fn same_surface(&self, other: &Self) -> Result<(), Error> {
        if self.surface == other.surface {
            Ok(())
        } else {
            Err(Error::IncompatibleSurface(format!(
                "sublattices of {} and {}",
                self.surface, other.surface
            )))
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.same_surface(other)?;
        let classes: Vec<H1Class> = self.basis.iter().chain(&other.basis).cloned().collect();
        lagrangian_span(&classes, &self.surface)
    }

    /// Exact intersection, from the left kernel of the stacked bases.
    pub fn intersection(&self, other: &Self) -> Result<Self, Error> {
        self.same_surface(other)?;
        let dim = self.surface.dim();
        let mut stacked = self.rows();
        stacked.extend(other.rows());
        let m = IntegerMatrix::from_rows(&stacked, dim)?;
        let classes: Vec<H1Class> = lattice::left_kernel(&m)
            .into_iter()
            .map(|k| {
                let mut v = vec![0i64; dim];
                for (coef, row) in k[..self.rank].iter().zip(&self.basis) {
                    for (acc, &x) in v.iter_mut().zip(&row.0) {
                        *acc += coef * x;
                    }
                }
                H1Class(v)
            })
            .collect();
        lagrangian_span(&classes, &self.surface)
    }

    /// Isomorphism type of `H₁(Σ) / (self + other)`.
    pub fn quotient_of_sum(&self, other: &Self) -> Result<AbelianGroup, Error> {
        let s = self.sum(other)?;
        Ok(AbelianGroup::cokernel(&s.rows(), self.surface.dim()))
    }
}

/// Span of `classes` with rank, elementary divisors and isotropy.
pub fn lagrangian_span(classes: &[H1Class], s: &SurfaceModel) -> Result<LagrangianSubgroup, Error> {
    for c in classes {
        s.check(c)?;
    }
    let rows: Vec<Vec<i64>> = classes.iter().map(|c| c.0.clone()).collect();
    let basis: Vec<H1Class> = lattice::hermite_basis(&rows, s.dim())
        .into_iter()
        .map(H1Class)
        .collect();
    let m = IntegerMatrix::from_rows(&rows, s.dim())?;
    let elementary_divisors = lattice::smith_normal_form(&m).divisors();
    let isotropic = basis.iter().enumerate().all(|(i, x)| {
        basis[i + 1..]
            .iter()
            .all(|y| handle_pairing(&x.0, &y.0, s.genus) == 0)
    });
    Ok(LagrangianSubgroup {
        surface: *s,
        rank: basis.len(),
        basis,
        elementary_divisors,
        isotropic,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeOp {
    Sum,
    Intersect,
    QuotientTorsion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeOutcome {
    Subgroup(LagrangianSubgroup),
    Quotient(AbelianGroup),
}

pub fn lattice_ops(
    a: &LagrangianSubgroup,
    b: &LagrangianSubgroup,
    op: LatticeOp,
) -> Result<LatticeOutcome, Error> {
    Ok(match op {
        LatticeOp::Sum => LatticeOutcome::Subgroup(a.sum(b)?),
        LatticeOp::Intersect => LatticeOutcome::Subgroup(a.intersection(b)?),
        LatticeOp::QuotientTorsion => LatticeOutcome::Quotient(a.quotient_of_sum(b)?),
    })
}
