//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. The routines are
//! small dense algorithms sized for polytope combinatorics: a few dozen rows
//! at most.

use alloc::vec;
use alloc::vec::Vec;
use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always reduced with a positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: &'static str, got: usize },
    #[error("system has no unique solution")]
    NoSolution,
}

/// Dense row-major integer matrix with an explicit shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape {
                expected: "rows * cols entries",
                got: data.len(),
            });
        }
        Ok(IntMat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share a length. `cols` is
    /// needed so that a matrix with zero rows still has a width.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                expected: "inner dimensions to agree",
                got: other.rows,
            });
        }
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v^T * self`.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.row(i)) {
                *o += vi * x;
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        self.rows()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Submatrix made of the listed rows, in order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        IntMat {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] -= factor * row[src]`
    fn sub_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            self.data[dst * self.cols + j] -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[r * self.cols + j];
            *v = -core::mem::take(v);
        }
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }
}

impl core::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .finish()
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u * m = h`. `h` is in row echelon
/// form, each pivot is positive, and every entry above a pivot lies in
/// `[0, pivot)`. Zero rows sit at the bottom.
pub fn hermite_normal_form(m: &IntMat) -> (IntMat, IntMat) {
    let mut h = m.clone();
    let mut u = IntMat::identity(m.nrows());
    let mut r = 0;
    for c in 0..m.ncols() {
        if r == m.nrows() {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at or below r becomes pivot
            let pivot = (r..h.nrows())
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..h.nrows() {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.sub_row(i, r, &q);
                u.sub_row(i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.sub_row(i, r, &q);
            u.sub_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Number of nonzero rows of an echelon matrix.
fn echelon_rank(h: &IntMat) -> usize {
    (0..h.nrows()).take_while(|&i| !h.is_zero_row(i)).count()
}

/// Saturated basis of the left kernel `{a in Z^d : a^T m = 0}` of a `d x n`
/// matrix, returned as rows in Hermite normal form.
pub fn kernel_lattice_basis(m: &IntMat) -> IntMat {
    let (h, u) = hermite_normal_form(m);
    let rank = echelon_rank(&h);
    let idx: Vec<usize> = (rank..m.nrows()).collect();
    let ker = u.select_rows(&idx);
    if ker.nrows() == 0 {
        return ker;
    }
    let (kh, _) = hermite_normal_form(&ker);
    kh
}

/// Integer solutions of `a * x = b`.
///
/// Returns a particular solution and a saturated basis (as rows) of the
/// integer kernel of `a`, or `None` when no integer solution exists.
pub fn solve_integer(a: &IntMat, b: &[BigInt]) -> Option<(Vec<BigInt>, IntMat)> {
    assert_eq!(a.nrows(), b.len());
    // u * a^T = h, so a * u^T = h^T and x = u^T y.
    let (h, u) = hermite_normal_form(&a.transpose());
    let rank = echelon_rank(&h);
    let mut y = vec![BigInt::zero(); a.ncols()];
    let mut pivots = Vec::with_capacity(rank);
    for i in 0..rank {
        let p = (0..h.ncols()).find(|&j| !h[(i, j)].is_zero()).unwrap();
        pivots.push(p);
        let mut rhs = b[p].clone();
        for (l, yl) in y.iter().enumerate().take(i) {
            rhs -= &h[(l, p)] * yl;
        }
        let (q, rem) = rhs.div_rem(&h[(i, p)]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    // remaining equations must hold
    for (j, bj) in b.iter().enumerate() {
        let lhs: BigInt = (0..rank).map(|i| &h[(i, j)] * &y[i]).sum();
        if &lhs != bj {
            return None;
        }
    }
    let x = u.left_mul_vec(&y);
    let idx: Vec<usize> = (rank..u.nrows()).collect();
    Some((x, u.select_rows(&idx)))
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMat) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

/// Solves the square system `m x = b` over the rationals.
pub fn solve_rational(m: &IntMat, b: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Shape {
            expected: "square matrix",
            got: m.ncols(),
        });
    }
    if b.len() != m.nrows() {
        return Err(LinalgError::Shape {
            expected: "right-hand side of matching length",
            got: b.len(),
        });
    }
    let n = m.nrows();
    let mut a: Vec<Vec<Rat>> = m
        .rows()
        .zip(b)
        .map(|(r, bi)| {
            let mut row: Vec<Rat> = r.iter().cloned().map(Rat::from_integer).collect();
            row.push(bi.clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(LinalgError::NoSolution)?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let (top, bottom) = a.split_at_mut(i.max(c));
            let (pivot, row) = if i < c { (&bottom[0], &mut top[i]) } else { (&top[c], &mut bottom[0]) };
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
    }
    Ok(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// gcd of the entries; zero for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}
