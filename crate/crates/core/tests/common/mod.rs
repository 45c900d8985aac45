#![allow(dead_code)]

pub mod checks;

use rand::seq::SliceRandom;
use rand::Rng;

use trisect::params::RelativeTrisectionType;
use trisect::{
    bundled, standard_closed_diagram, standard_relative_diagram, ClosedTrisectionDiagram, Family,
    H1Class, IntegerMatrix, Move, RelativeTrisectionDiagram, Sign, SurfaceModel, TrisectionDiagram,
};

/// Every `(g,k,0,b)` type with `g ≤ g_max` and `b ≤ b_max`.
pub fn closed_page_types(g_max: usize, b_max: usize) -> Vec<RelativeTrisectionType> {
    let mut out = Vec::new();
    for g in 0..=g_max {
        for b in 1..=b_max {
            for k in 0..=g + b {
                if let Ok(t) = RelativeTrisectionType::new(g, k, 0, b) {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn random_relative<R: Rng>(rng: &mut R) -> RelativeTrisectionDiagram {
    if rng.gen_bool(0.25) {
        return if rng.gen() {
            bundled::d1()
        } else {
            bundled::d2()
        };
    }
    let types = closed_page_types(3, 3);
    let t = types.choose(rng).unwrap();
    standard_relative_diagram(t.g, t.k, t.p, t.b).unwrap()
}

pub fn random_closed<R: Rng>(rng: &mut R) -> ClosedTrisectionDiagram {
    match rng.gen_range(0..4) {
        0 => [bundled::cp2(), bundled::cp2_bar(), bundled::s1xs3()]
            .choose(rng)
            .unwrap()
            .clone(),
        1 => trisect::cap_off(&random_relative(rng)).unwrap(),
        _ => {
            let g = rng.gen_range(0..=3);
            standard_closed_diagram(g, rng.gen_range(0..=g)).unwrap()
        }
    }
}

/// Class with entries in {−1,0,1} and at least one nonzero, hence primitive.
pub fn random_primitive<R: Rng>(rng: &mut R, s: &SurfaceModel) -> H1Class {
    loop {
        let c: Vec<i64> = (0..s.dim()).map(|_| rng.gen_range(-1..=1)).collect();
        if c.iter().any(|&x| x != 0) {
            return H1Class(c);
        }
    }
}

pub fn random_slide<R: Rng, D: TrisectionDiagram>(rng: &mut R, d: &D) -> Option<Move> {
    let family = *Family::ALL.choose(rng).unwrap();
    let n = d.family(family).len();
    if n < 2 {
        return None;
    }
    let slid = rng.gen_range(0..n);
    let over = (slid + rng.gen_range(1..n)) % n;
    let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
    Some(Move::Handleslide {
        family,
        slid,
        over,
        sign,
    })
}

pub fn random_twist<R: Rng>(rng: &mut R, s: &SurfaceModel) -> Option<Move> {
    if s.dim() == 0 {
        return None;
    }
    let power = if rng.gen() { 1 } else { -1 };
    Some(Move::Transvection {
        class: random_primitive(rng, s),
        power,
    })
}

/// Up to `len` moves, mostly slides. Transvections appear with probability
/// `twist_rate`.
pub fn random_moves<R: Rng, D: TrisectionDiagram>(
    rng: &mut R,
    d: &D,
    len: usize,
    twist_rate: f64,
) -> Vec<Move> {
    (0..len)
        .filter_map(|_| {
            if rng.gen_bool(twist_rate) {
                random_twist(rng, d.surface())
            } else {
                random_slide(rng, d)
            }
        })
        .collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> IntegerMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let entries = (0..rows * cols)
        .map(|_| rng.gen_range(-bound..=bound))
        .collect();
    IntegerMatrix::new(rows, cols, entries).unwrap()
}

pub fn random_rows<R: Rng>(rng: &mut R, count: usize, dim: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..count)
        .map(|_| (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

/// Product of random elementary operations; determinant ±1.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntegerMatrix {
    let mut p = IntegerMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen() {
            p[(0, 0)] = -1;
        }
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let q = rng.gen_range(-2..=2);
        for r in 0..n {
            let v = p[(r, j)];
            p[(r, i)] += q * v;
        }
    }
    p
}

pub fn diagonal_is_smith(d: &IntegerMatrix) -> bool {
    let n = d.rows().min(d.cols());
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j && d[(i, j)] != 0 {
                return false;
            }
        }
    }
    let diag: Vec<i64> = (0..n).map(|i| d[(i, i)]).collect();
    let nonzero = diag.iter().take_while(|&&x| x != 0).count();
    diag[nonzero..].iter().all(|&x| x == 0)
        && diag[..nonzero].iter().all(|&x| x > 0)
        && diag[..nonzero].windows(2).all(|w| w[1] % w[0] == 0)
}

/// Rank over Q by fraction-free elimination, independent of the Smith form.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let (a, b) = (m[rank][c], m[r][c]);
            if b == 0 {
                continue;
            }
            let g = gcd128(a, b);
            for k in 0..cols {
                m[r][k] = m[r][k] * (a / g) - m[rank][k] * (b / g);
            }
            let content = m[r].iter().fold(0, |acc, &x| gcd128(acc, x));
            if content > 1 {
                m[r].iter_mut().for_each(|x| *x /= content);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn wide(m: &IntegerMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&x| x as i128).collect())
        .collect()
}

/// Product of the factors in `i128`, so large transforms cannot overflow.
pub fn product(factors: &[&IntegerMatrix]) -> Vec<Vec<i128>> {
    let mut acc = wide(factors[0]);
    for f in &factors[1..] {
        let b = wide(f);
        acc = acc
            .iter()
            .map(|row| {
                (0..f.cols())
                    .map(|j| row.iter().zip(&b).map(|(x, brow)| x * brow[j]).sum())
                    .collect()
            })
            .collect();
    }
    acc
}
