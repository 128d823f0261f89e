//! Exact linear algebra over ℚ(φ).
//!
//! Small dense vectors and matrices with fraction-preserving Gaussian
//! elimination. Pivots are chosen by exact nonzero tests, never by magnitude.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::golden::GoldenRational;

/// Fixed-size exact vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GVec<const N: usize>(pub [GoldenRational; N]);

pub type GVec3 = GVec<3>;
pub type GVec6 = GVec<6>;

impl<const N: usize> GVec<N> {
    pub fn zero() -> Self {
        GVec(std::array::from_fn(|_| GoldenRational::zero()))
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = GoldenRational::one();
        v
    }

    pub fn from_ints(c: [i64; N]) -> Self {
        GVec(c.map(GoldenRational::int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GoldenRational::is_zero)
    }

    pub fn dot(&self, other: &Self) -> GoldenRational {
        self.0.iter().zip(&other.0).map(|(x, y)| x * y).sum()
    }

    pub fn norm_sq(&self) -> GoldenRational {
        self.dot(self)
    }

    pub fn scale(&self, s: &GoldenRational) -> Self {
        GVec(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        GVec(std::array::from_fn(|i| self.0[i].scale_int(n)))
    }

    pub fn conj(&self) -> Self {
        GVec(std::array::from_fn(|i| self.0[i].conj()))
    }

    pub fn as_slice(&self) -> &[GoldenRational] {
        &self.0
    }

    pub fn from_slice(s: &[GoldenRational]) -> Option<Self> {
        if s.len() != N {
            return None;
        }
        Some(GVec(std::array::from_fn(|i| s[i].clone())))
    }

    pub fn to_f64(&self) -> [f64; N] {
        std::array::from_fn(|i| self.0[i].to_f64())
    }
}

impl GVec3 {
    pub fn new(x: GoldenRational, y: GoldenRational, z: GoldenRational) -> Self {
        GVec([x, y, z])
    }

    pub fn cross(&self, o: &Self) -> Self {
        let [a, b, c] = &self.0;
        let [d, e, f] = &o.0;
        GVec([b * f - c * e, c * d - a * f, a * e - b * d])
    }
}

/// Exact 3×3 determinant of the matrix with rows `a`, `b`, `c`.
pub fn det3(a: &GVec3, b: &GVec3, c: &GVec3) -> GoldenRational {
    a.dot(&b.cross(c))
}

impl<const N: usize> Index<usize> for GVec<N> {
    type Output = GoldenRational;
    fn index(&self, i: usize) -> &GoldenRational {
        &self.0[i]
    }
}

impl<const N: usize> IndexMut<usize> for GVec<N> {
    fn index_mut(&mut self, i: usize) -> &mut GoldenRational {
        &mut self.0[i]
    }
}

impl<const N: usize> Add for &GVec<N> {
    type Output = GVec<N>;
    fn add(self, o: &GVec<N>) -> GVec<N> {
        GVec(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl<const N: usize> Sub for &GVec<N> {
    type Output = GVec<N>;
    fn sub(self, o: &GVec<N>) -> GVec<N> {
        GVec(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl<const N: usize> Add for GVec<N> {
    type Output = GVec<N>;
    fn add(self, o: GVec<N>) -> GVec<N> {
        &self + &o
    }
}

impl<const N: usize> Sub for GVec<N> {
    type Output = GVec<N>;
    fn sub(self, o: GVec<N>) -> GVec<N> {
        &self - &o
    }
}

impl<const N: usize> Neg for &GVec<N> {
    type Output = GVec<N>;
    fn neg(self) -> GVec<N> {
        GVec(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl<const N: usize> Neg for GVec<N> {
    type Output = GVec<N>;
    fn neg(self) -> GVec<N> {
        -&self
    }
}

impl<const N: usize> PartialOrd for GVec<N> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<const N: usize> Ord for GVec<N> {
    /// Lexicographic on real values.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.iter().cmp(other.0.iter())
    }
}

impl<const N: usize> fmt::Debug for GVec<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<const N: usize> fmt::Display for GVec<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<const N: usize> Serialize for GVec<N> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de, const N: usize> Deserialize<'de> for GVec<N> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<GoldenRational>::deserialize(d)?;
        let len = v.len();
        GVec::from_slice(&v).ok_or_else(|| {
            serde::de::Error::custom(format!("expected {N} golden numbers, got {len}"))
        })
    }
}

/// Dense row-major matrix over ℚ(φ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GMat {
    rows: usize,
    cols: usize,
    data: Vec<GoldenRational>,
}

impl GMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GMat {
            rows,
            cols,
            data: vec![GoldenRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GoldenRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GoldenRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        GMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns<const N: usize>(cols: &[GVec<N>]) -> Self {
        let mut m = GMat::zeros(N, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for i in 0..N {
                m[(i, j)] = v[i].clone();
            }
        }
        m
    }

    pub fn from_row_vecs<const N: usize>(rows: &[GVec<N>]) -> Self {
        GMat::from_rows(rows.iter().map(|v| v.0.to_vec()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[GoldenRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[GoldenRational] {
        &self.data
    }

    pub fn column<const N: usize>(&self, j: usize) -> GVec<N> {
        assert_eq!(self.rows, N);
        GVec(std::array::from_fn(|i| self[(i, j)].clone()))
    }

    pub fn transpose(&self) -> GMat {
        let mut t = GMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[GoldenRational]) -> Vec<GoldenRational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply<const N: usize, const M: usize>(&self, v: &GVec<M>) -> GVec<N> {
        assert_eq!(self.rows, N);
        GVec::from_slice(&self.mul_vec(&v.0)).expect("row count checked")
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Determinant by exact elimination. `None` for non-square input.
    pub fn det(&self) -> Option<GoldenRational> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = GoldenRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Some(GoldenRational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = &det * &pivot;
            let inv = pivot.recip().expect("pivot is nonzero");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] * &inv;
                for c in col..n {
                    let d = &f * &m[(col, c)];
                    m[(r, c)] -= &d;
                }
            }
        }
        Some(det)
    }

    pub fn inverse(&self) -> Option<GMat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = GMat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = GoldenRational::one();
        }
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = GMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces to reduced row echelon form, pivoting only in the first
    /// `pivot_cols` columns. Returns the pivot column of each pivot row.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self[(row, col)].recip().expect("pivot is nonzero");
            for c in 0..self.cols {
                self[(row, c)] = &self[(row, c)] * &inv;
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let f = self[(r, col)].clone();
                for c in 0..self.cols {
                    let d = &f * &self[(row, c)];
                    self[(r, c)] -= &d;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (GMat, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place(self.cols);
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, returned as the rows of a matrix in
    /// reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<GoldenRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vec<GoldenRational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![GoldenRational::zero(); self.cols];
                v[f] = GoldenRational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(i, f)];
                }
                v
            })
            .collect();
        if raw.is_empty() {
            return raw;
        }
        let (k, kp) = GMat::from_rows(raw).rref();
        (0..kp.len()).map(|i| k.row(i).to_vec()).collect()
    }
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<GoldenRational>),
    /// Underdetermined: a particular solution plus a kernel basis in RREF.
    Family {
        particular: Vec<GoldenRational>,
        kernel: Vec<Vec<GoldenRational>>,
    },
    Inconsistent,
}

impl Solution {
    /// A solution, if any exists (the particular one for families).
    pub fn any(&self) -> Option<&[GoldenRational]> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::Family { particular, .. } => Some(particular),
            Solution::Inconsistent => None,
        }
    }
}

/// Solves `a · x = b` exactly.
pub fn solve(a: &GMat, b: &[GoldenRational]) -> Solution {
    assert_eq!(a.rows, b.len(), "right-hand side length mismatch");
    let n = a.cols;
    let mut aug = GMat::zeros(a.rows, n + 1);
    for i in 0..a.rows {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let pivots = aug.rref_in_place(n);
    if (pivots.len()..a.rows).any(|r| !aug[(r, n)].is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![GoldenRational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[(i, n)].clone();
    }
    if pivots.len() == n {
        Solution::Unique(x)
    } else {
        Solution::Family {
            particular: x,
            kernel: a.kernel(),
        }
    }
}

impl Index<(usize, usize)> for GMat {
    type Output = GoldenRational;
    fn index(&self, (r, c): (usize, usize)) -> &GoldenRational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for GMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GoldenRational {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &GMat {
    type Output = GMat;
    fn mul(self, o: &GMat) -> GMat {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = GMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                m[(i, j)] = (0..self.cols).map(|k| &self[(i, k)] * &o[(k, j)]).sum();
            }
        }
        m
    }
}

impl fmt::Debug for GMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[GoldenRational]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}
