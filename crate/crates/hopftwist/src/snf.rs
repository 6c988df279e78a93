//! Integer matrices, Smith normal form, and lattice utilities.
//!
//! Used by group cohomology to present `H^2(G, mu_N)` as an abelian group:
//! kernels and quotients of integer lattices, with arbitrary-precision
//! entries throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix (small sizes; cohomology complexes only).
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = IntMat::zero(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for col in 0..self.cols {
            let v = self.at(j, col) * c;
            self.data[i * self.cols + col] += v;
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for row in 0..self.rows {
            let v = self.at(row, j) * c;
            self.data[row * self.cols + i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for col in 0..self.cols {
            let v = -self.at(i, col).clone();
            self.set(i, col, v);
        }
    }

    fn negate_col(&mut self, i: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, i).clone();
            self.set(r, i, v);
        }
    }
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMat {}x{}:", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `P · A · Q = D` with `D` diagonal and `d_1 | d_2 | ...`.
/// `pinv` is `P^{-1}` (accumulated inverse row transforms), `q` is `Q`.
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub pinv: IntMat,
    pub q: IntMat,
}

pub fn snf(a: &IntMat) -> Snf {
    let mut m = a.clone();
    let rows = m.rows;
    let cols = m.cols;
    let mut pinv = IntMat::identity(rows);
    let mut q = IntMat::identity(cols);

    // Row op on m mirrored as the inverse column op on pinv; column ops on m
    // mirrored directly on q.
    let rank_bound = rows.min(cols);
    let mut t = 0usize;
    while t < rank_bound {
        // Nonzero entry of minimal absolute value in the trailing submatrix.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if m.at(r, c).is_zero() {
                    continue;
                }
                match &best {
                    None => best = Some((r, c)),
                    Some((br, bc)) => {
                        if m.at(r, c).abs() < m.at(*br, *bc).abs() {
                            best = Some((r, c));
                        }
                    }
                }
            }
        }
        let Some((r, c)) = best else { break };
        m.swap_rows(t, r);
        pinv.swap_cols(t, r);
        m.swap_cols(t, c);
        q.swap_cols(t, c);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m.at(i, t).is_zero() {
                    continue;
                }
                let quot = div_round(m.at(i, t), m.at(t, t));
                if !quot.is_zero() {
                    let neg = -quot.clone();
                    m.add_row(i, t, &neg);
                    pinv.add_col(t, i, &quot);
                }
                if !m.at(i, t).is_zero() {
                    // Remainder left: continue the Euclidean exchange.
                    m.swap_rows(t, i);
                    pinv.swap_cols(t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m.at(t, j).is_zero() {
                    continue;
                }
                let quot = div_round(m.at(t, j), m.at(t, t));
                if !quot.is_zero() {
                    let neg = -quot.clone();
                    m.add_col(j, t, &neg);
                    q.add_col(j, t, &neg);
                }
                if !m.at(t, j).is_zero() {
                    m.swap_cols(t, j);
                    q.swap_cols(t, j);
                    clean = false;
                }
            }
            let col_clean = (t + 1..rows).all(|i| m.at(i, t).is_zero());
            let row_clean = (t + 1..cols).all(|j| m.at(t, j).is_zero());
            if clean && col_clean && row_clean {
                break;
            }
        }
        if m.at(t, t).is_negative() {
            m.negate_row(t);
            pinv.negate_col(t);
        }
        t += 1;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    loop {
        let mut fixed = true;
        for i in 0..t.saturating_sub(1) {
            let a_d = m.at(i, i).clone();
            let b_d = m.at(i + 1, i + 1).clone();
            if a_d.is_zero() || (&b_d % &a_d).is_zero() {
                continue;
            }
            fixed = false;
            m.add_col(i, i + 1, &BigInt::one());
            q.add_col(i, i + 1, &BigInt::one());
            loop {
                if !m.at(i + 1, i).is_zero() {
                    let quot = div_round(m.at(i + 1, i), m.at(i, i));
                    if !quot.is_zero() {
                        let neg = -quot.clone();
                        m.add_row(i + 1, i, &neg);
                        pinv.add_col(i, i + 1, &quot);
                    }
                    if !m.at(i + 1, i).is_zero() {
                        m.swap_rows(i, i + 1);
                        pinv.swap_cols(i, i + 1);
                        continue;
                    }
                }
                if !m.at(i, i + 1).is_zero() {
                    let quot = div_round(m.at(i, i + 1), m.at(i, i));
                    if !quot.is_zero() {
                        let neg = -quot.clone();
                        m.add_col(i + 1, i, &neg);
                        q.add_col(i + 1, i, &neg);
                    }
                    if !m.at(i, i + 1).is_zero() {
                        m.swap_cols(i, i + 1);
                        q.swap_cols(i, i + 1);
                        continue;
                    }
                }
                break;
            }
            if m.at(i, i).is_negative() {
                m.negate_row(i);
                pinv.negate_col(i);
            }
            if m.at(i + 1, i + 1).is_negative() {
                m.negate_row(i + 1);
                pinv.negate_col(i + 1);
            }
        }
        if fixed {
            break;
        }
    }

    let diag = (0..rank_bound).map(|i| m.at(i, i).clone()).collect();
    Snf { diag, pinv, q }
}

/// Round-to-nearest integer division (keeps SNF entries small).
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (&r * 2i32).abs() > b.abs() {
        if r.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis for the integer kernel `{x : A x = 0}`.
pub fn integer_kernel(a: &IntMat) -> Vec<Vec<BigInt>> {
    let s = snf(a);
    let rank = s.diag.iter().filter(|d| !d.is_zero()).count();
    (rank..a.cols).map(|j| s.q.column(j)).collect()
}

/// Basis (as columns) for the lattice spanned by the columns of `gens`.
pub fn lattice_basis(gens: &IntMat) -> IntMat {
    let s = snf(gens);
    let mut cols = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        let mut col = s.pinv.column(i);
        for v in &mut col {
            *v *= d;
        }
        cols.push(col);
    }
    IntMat::from_columns(gens.rows, &cols)
}

/// Solve `U X = V` over the integers for a square nonsingular `U`.
/// Returns `None` if the rational solution is not integral.
pub fn solve_integral(u: &IntMat, v: &IntMat) -> Option<IntMat> {
    use num_rational::BigRational;
    let n = u.rows;
    assert_eq!(u.cols, n);
    assert_eq!(v.rows, n);
    let cols = n + v.cols;
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    if c < n {
                        BigRational::from(u.at(r, c).clone())
                    } else {
                        BigRational::from(v.at(r, c - n).clone())
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot);
        let inv = m[k][k].recip();
        for c in k..cols {
            m[k][c] = &m[k][c] * &inv;
        }
        for r in 0..n {
            if r == k || m[r][k].is_zero() {
                continue;
            }
            let f = m[r][k].clone();
            for c in k..cols {
                let v = &m[k][c] * &f;
                m[r][c] -= v;
            }
        }
    }
    let mut x = IntMat::zero(n, v.cols);
    for r in 0..n {
        for c in 0..v.cols {
            let val = &m[r][n + c];
            if !val.is_integer() {
                return None;
            }
            x.set(r, c, val.to_integer());
        }
    }
    Some(x)
}

/// Does `x` lie in the lattice spanned by the columns of `u`?
pub fn lattice_contains(u: &IntMat, x: &[BigInt]) -> bool {
    if u.rows == u.cols {
        let v = IntMat::from_columns(u.rows, &[x.to_vec()]);
        return solve_integral(u, &v).is_some();
    }
    let mut gens = IntMat::zero(u.rows, u.cols + 1);
    for r in 0..u.rows {
        for c in 0..u.cols {
            gens.set(r, c, u.at(r, c).clone());
        }
        gens.set(r, u.cols, x[r].clone());
    }
    let with = lattice_basis(&gens);
    let without = lattice_basis(u);
    if with.cols != without.cols {
        return false;
    }
    lattice_index(&without) == lattice_index(&with)
}

fn lattice_index(u: &IntMat) -> BigInt {
    let s = snf(u);
    s.diag.iter().fold(BigInt::one(), |acc, d| acc * d.abs())
}
