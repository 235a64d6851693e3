//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision; there is no floating point path.
//! The Hermite normal form convention is row style: pivots strictly positive,
//! entries above a pivot reduced into `[0, pivot)`, zero rows last.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(v: &Integer) -> Rational {
    BigRational::from_integer(v.clone())
}

/// Parses `"p"` or `"p/q"` with `q > 0`. The result is canonical even if the
/// input was not written in lowest terms.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) || den.starts_with('-') {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// `"p"` for integers, `"p/q"` otherwise; always lowest terms with `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Integer>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Integer>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                what: "matrix entries",
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Integer::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Integer::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers; panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&v| int(v)).collect(),
        }
    }

    pub fn from_big_rows(rows: Vec<Vec<Integer>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let entries: Vec<Integer> = rows.into_iter().flatten().collect();
        Self::new(n, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Integer {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Integer] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Integer> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Integer>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                what: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(rat_int).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                what: "matrix entries",
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        Self::new(n, cols, entries)
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        IntMatrix::from_rows(rows).to_rational()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                what: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn select_rows(&self, idx: &[usize]) -> RatMatrix {
        RatMatrix {
            rows: idx.len(),
            cols: self.cols,
            entries: idx.iter().flat_map(|&r| self.row(r).to_vec()).collect(),
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for v in rows[r].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let m = RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    /// Basis of the rational null space, as columns, in the standard
    /// free-variable parametrisation of the RREF.
    pub fn kernel(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = RatMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.entries[f * free.len() + k] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                out.entries[p * free.len() + k] = -r.get(i, f).clone();
            }
        }
        out
    }

    /// A solution of `self * x = rhs` with free variables set to zero.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "rhs length");
        let mut aug = Vec::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            aug.extend_from_slice(self.row(r));
            aug.push(rhs[r].clone());
        }
        let aug = RatMatrix {
            rows: self.rows,
            cols: self.cols + 1,
            entries: aug,
        };
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The unique solution of a square system, if the matrix is invertible.
pub fn solve_square(m: &RatMatrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    if m.rows != m.cols || rank(m) < m.cols {
        return None;
    }
    m.solve(rhs)
}

pub fn rank(m: &RatMatrix) -> usize {
    m.rref().1.len()
}

pub fn det(m: &RatMatrix) -> Result<Rational> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let pivot = a[c][c].clone();
        d *= &pivot;
        let pivot_row = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *v -= &f * p;
            }
        }
    }
    Ok(d)
}

pub fn is_primitive(v: &[Integer]) -> Result<bool> {
    let g = v.iter().fold(Integer::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(g.is_one())
}

/// Row Hermite normal form `H` together with a unimodular `U` such that
/// `H = U * m`.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (nr, nc) = (m.rows, m.cols);
    let mut h = m.to_rows();
    let mut u = IntMatrix::identity(nr).to_rows();
    let mut pr = 0;
    for c in 0..nc {
        if pr == nr {
            break;
        }
        for i in pr + 1..nr {
            if h[i][c].is_zero() {
                continue;
            }
            let a = h[pr][c].clone();
            let b = h[i][c].clone();
            let eg = a.extended_gcd(&b);
            let (s, t) = (eg.x, eg.y);
            let (a_g, b_g) = (&a / &eg.gcd, &b / &eg.gcd);
            // [s t; -b/g a/g] has determinant 1.
            combine_rows(&mut h, pr, i, &s, &t, &b_g, &a_g);
            combine_rows(&mut u, pr, i, &s, &t, &b_g, &a_g);
        }
        if h[pr][c].is_zero() {
            continue;
        }
        if h[pr][c].is_negative() {
            negate_row(&mut h[pr]);
            negate_row(&mut u[pr]);
        }
        let p = h[pr][c].clone();
        for i in 0..pr {
            let q = h[i][c].div_floor(&p);
            if q.is_zero() {
                continue;
            }
            sub_row_multiple(&mut h, i, pr, &q);
            sub_row_multiple(&mut u, i, pr, &q);
        }
        pr += 1;
    }
    (
        IntMatrix::from_big_rows(h, nc).expect("shape preserved"),
        IntMatrix::from_big_rows(u, nr).expect("shape preserved"),
    )
}

fn combine_rows(
    rows: &mut [Vec<Integer>],
    p: usize,
    i: usize,
    s: &Integer,
    t: &Integer,
    b_g: &Integer,
    a_g: &Integer,
) {
    let (rp, ri) = (rows[p].clone(), rows[i].clone());
    for (k, (x, y)) in rp.iter().zip(&ri).enumerate() {
        rows[p][k] = s * x + t * y;
        rows[i][k] = a_g * y - b_g * x;
    }
}

fn negate_row(row: &mut [Integer]) {
    for v in row {
        *v = -&*v;
    }
}

fn sub_row_multiple(rows: &mut [Vec<Integer>], target: usize, src: usize, q: &Integer) {
    let src_row = rows[src].clone();
    for (v, s) in rows[target].iter_mut().zip(&src_row) {
        *v -= q * s;
    }
}

/// Basis of the saturated integer kernel `ker(m) ∩ Z^cols`, returned as the
/// columns of a `cols x (cols - rank)` matrix. The basis is pinned: its
/// transpose is in row Hermite normal form.
pub fn kernel_lattice(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hermite_normal_form(&m.transpose());
    let rank = (0..h.rows).filter(|&r| h.row(r).iter().any(|v| !v.is_zero())).count();
    let kernel_rows: Vec<Vec<Integer>> = (rank..u.rows).map(|r| u.row(r).to_vec()).collect();
    let k = IntMatrix::from_big_rows(kernel_rows, m.cols).expect("rows of U have cols entries");
    let (pinned, _) = hermite_normal_form(&k);
    pinned.transpose()
}
