//! Hermite and Smith normal forms with small unimodular transforms.
//!
//! Plain integer elimination lets transform entries grow exponentially, so the
//! Hermite form here is the lattice-reduction variant of Havas, Majewski and
//! Matthews: an integral LLL pass over the transform rows, driven by the pivot
//! columns of the matrix. Smith forms alternate row and column Hermite forms
//! until the matrix is diagonal, then repair divisibility pairwise. All
//! arithmetic is arbitrary precision; callers narrow the result.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Big = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Big {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

pub fn transpose(a: &Big, rows: usize, cols: usize) -> Big {
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect()
}

pub fn mul(a: &Big, b: &Big, rows: usize, inner: usize, cols: usize) -> Big {
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `b · input = h`, `b · b_inv = 1`.
pub struct Hermite {
    pub h: Big,
    pub b: Big,
    pub b_inv: Big,
}

struct Lll {
    g: Big,
    b: Big,
    b_inv: Big,
    lambda: Big,
    /// `d[i + 1]` belongs to row `i`; `d[0] = 1`.
    d: Vec<BigInt>,
    cols: usize,
}

impl Lll {
    fn pivot(&self, i: usize) -> usize {
        self.g[i]
            .iter()
            .position(|x| !x.is_zero())
            .unwrap_or(self.cols)
    }

    fn negate(&mut self, i: usize) {
        for x in self.g[i].iter_mut().chain(self.b[i].iter_mut()) {
            *x = -&*x;
        }
        for row in self.b_inv.iter_mut() {
            row[i] = -&row[i];
        }
        for j in 0..i {
            self.lambda[i][j] = -&self.lambda[i][j];
        }
        for r in i + 1..self.g.len() {
            self.lambda[r][i] = -&self.lambda[r][i];
        }
    }

    /// `row k -= q · row i`
    fn subtract(&mut self, k: usize, i: usize, q: &BigInt) {
        for c in 0..self.cols {
            let t = q * &self.g[i][c];
            self.g[k][c] -= t;
        }
        for c in 0..self.b.len() {
            let t = q * &self.b[i][c];
            self.b[k][c] -= t;
        }
        for row in self.b_inv.iter_mut() {
            let t = q * &row[k];
            row[i] += t;
        }
        if i < k {
            let t = q * &self.d[i + 1];
            self.lambda[k][i] -= t;
            for j in 0..i {
                let t = q * &self.lambda[i][j];
                self.lambda[k][j] -= t;
            }
        }
    }

    fn reduce(&mut self, k: usize, i: usize) -> (usize, usize) {
        let col1 = self.pivot(i);
        if col1 < self.cols && self.g[i][col1].is_negative() {
            self.negate(i);
        }
        let col2 = self.pivot(k);
        let q = if col1 < self.cols {
            self.g[k][col1].div_floor(&self.g[i][col1])
        } else if BigInt::from(2) * self.lambda[k][i].abs() > self.d[i + 1] {
            let two_d = BigInt::from(2) * &self.d[i + 1];
            (BigInt::from(2) * &self.lambda[k][i] + &self.d[i + 1]).div_floor(&two_d)
        } else {
            BigInt::zero()
        };
        if !q.is_zero() {
            self.subtract(k, i, &q);
        }
        (col1, col2)
    }

    fn swap(&mut self, k: usize) {
        self.g.swap(k, k - 1);
        self.b.swap(k, k - 1);
        for row in self.b_inv.iter_mut() {
            row.swap(k, k - 1);
        }
        for j in 0..k - 1 {
            let t = std::mem::take(&mut self.lambda[k][j]);
            self.lambda[k][j] = std::mem::replace(&mut self.lambda[k - 1][j], t);
        }
        let l = self.lambda[k][k - 1].clone();
        let next = (&self.d[k - 1] * &self.d[k + 1] + &l * &l) / &self.d[k];
        for i in k + 1..self.g.len() {
            let t = self.lambda[i][k].clone();
            self.lambda[i][k] = (&self.d[k + 1] * &self.lambda[i][k - 1] - &l * &t) / &self.d[k];
            self.lambda[i][k - 1] = (&next * &t + &l * &self.lambda[i][k]) / &self.d[k + 1];
        }
        self.d[k] = next;
    }
}

/// Row-style Hermite form: pivot columns strictly increase down the rows,
/// pivots are positive, entries above a pivot lie in `[0, pivot)`, zero rows
/// come last. Zero rows of `h` pair with an LLL-reduced kernel basis in `b`.
pub fn hermite(a: &Big, rows: usize, cols: usize) -> Hermite {
    let mut s = Lll {
        g: a.clone(),
        b: identity(rows),
        b_inv: identity(rows),
        lambda: vec![vec![BigInt::zero(); rows]; rows],
        d: vec![BigInt::one(); rows + 1],
        cols,
    };
    let mut k = 1;
    while k < rows {
        let (col1, col2) = s.reduce(k, k - 1);
        let lovasz_fails = col1 == cols && col2 == cols && {
            let l = &s.lambda[k][k - 1];
            BigInt::from(4) * (&s.d[k - 1] * &s.d[k + 1] + l * l)
                < BigInt::from(3) * &s.d[k] * &s.d[k]
        };
        if (col1 < cols && col1 <= col2) || lovasz_fails {
            s.swap(k);
            k = k.saturating_sub(1).max(1);
        } else {
            for i in (0..k - 1).rev() {
                s.reduce(k, i);
            }
            k += 1;
        }
    }
    // The pass leaves pivots in decreasing column order; flip it, then fix
    // signs and reduce above each pivot.
    s.g.reverse();
    s.b.reverse();
    for row in s.b_inv.iter_mut() {
        row.reverse();
    }
    for i in 0..rows {
        let c = s.pivot(i);
        if c == cols {
            continue;
        }
        if s.g[i][c].is_negative() {
            s.negate(i);
        }
        for r in 0..i {
            let q = s.g[r][c].div_floor(&s.g[i][c]);
            if !q.is_zero() {
                s.subtract(r, i, &q);
            }
        }
    }
    Hermite {
        h: s.g,
        b: s.b,
        b_inv: s.b_inv,
    }
}

pub struct Smith {
    pub u: Big,
    pub u_inv: Big,
    pub d: Big,
    pub v: Big,
    pub v_inv: Big,
}

fn is_diagonal(d: &Big) -> bool {
    d.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

pub fn smith(a: &Big, rows: usize, cols: usize) -> Smith {
    let mut d = a.clone();
    let (mut u, mut u_inv) = (identity(rows), identity(rows));
    let (mut v, mut v_inv) = (identity(cols), identity(cols));
    loop {
        let r = hermite(&d, rows, cols);
        d = r.h;
        u = mul(&r.b, &u, rows, rows, rows);
        u_inv = mul(&u_inv, &r.b_inv, rows, rows, rows);
        if is_diagonal(&d) {
            break;
        }
        let c = hermite(&transpose(&d, rows, cols), cols, rows);
        d = transpose(&c.h, cols, rows);
        v = mul(&v, &transpose(&c.b, cols, cols), cols, cols, cols);
        v_inv = mul(&transpose(&c.b_inv, cols, cols), &v_inv, cols, cols, cols);
        if is_diagonal(&d) {
            break;
        }
    }

    // Ascending order first, so unit divisors never take part in a repair.
    let rank = (0..rows.min(cols))
        .take_while(|&i| !d[i][i].is_zero())
        .count();
    let mut order: Vec<usize> = (0..rank).collect();
    order.sort_by(|&x, &y| d[x][x].abs().cmp(&d[y][y].abs()));
    let diag: Vec<BigInt> = order.iter().map(|&i| d[i][i].clone()).collect();
    for (i, x) in diag.into_iter().enumerate() {
        d[i][i] = x;
    }
    let old_u = u.clone();
    let old_v_inv = v_inv.clone();
    for (new, &old) in order.iter().enumerate() {
        u[new] = old_u[old].clone();
        v_inv[new] = old_v_inv[old].clone();
    }
    for row in u_inv.iter_mut() {
        let old = row.clone();
        for (new, &o) in order.iter().enumerate() {
            row[new] = old[o].clone();
        }
    }
    for row in v.iter_mut() {
        let old = row.clone();
        for (new, &o) in order.iter().enumerate() {
            row[new] = old[o].clone();
        }
    }

    for i in 0..rank {
        for j in i + 1..rank {
            let (a, b) = (d[i][i].clone(), d[j][j].clone());
            if b.is_multiple_of(&a) {
                continue;
            }
            // U₂·diag(a,b)·V₂ = diag(g, ab/g) with
            // U₂ = [[s,t],[−b/g,a/g]], V₂ = [[1,−tb/g],[1,sa/g]].
            let e = a.extended_gcd(&b);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (p, q) = (-(&b / &g), &a / &g);
            let (x, y) = (-(&t * &b / &g), &s * &a / &g);
            for c in 0..rows {
                let (ui, uj) = (u[i][c].clone(), u[j][c].clone());
                u[i][c] = &s * &ui + &t * &uj;
                u[j][c] = &p * &ui + &q * &uj;
            }
            for row in u_inv.iter_mut() {
                let (wi, wj) = (row[i].clone(), row[j].clone());
                row[i] = &q * &wi - &p * &wj;
                row[j] = &s * &wj - &t * &wi;
            }
            for row in v.iter_mut() {
                let (vi, vj) = (row[i].clone(), row[j].clone());
                row[i] = &vi + &vj;
                row[j] = &x * &vi + &y * &vj;
            }
            for c in 0..cols {
                let (wi, wj) = (v_inv[i][c].clone(), v_inv[j][c].clone());
                v_inv[i][c] = &y * &wi - &x * &wj;
                v_inv[j][c] = &wj - &wi;
            }
            d[j][j] = &a / &g * &b;
            d[i][i] = g;
        }
    }
    Smith {
        u,
        u_inv,
        d,
        v,
        v_inv,
    }
}
