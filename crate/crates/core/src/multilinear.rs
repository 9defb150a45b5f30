//! Dense complex linear algebra, Kronecker products, multi-index flattening
//! and the pure multipartite state type.
//!
//! Basis ordering is row-major with the last subsystem index varying
//! fastest, so `kron(A_0, kron(A_1, ...))` acts on a [`MultiState`] without
//! any permutation.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Normalization tolerance applied to `Σ|α|²` at construction.
pub const NORM_TOLERANCE: f64 = 1e-8;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::domain("matrix dimensions must be positive"));
        }
        if rows * cols != data.len() {
            return Err(Error::domain(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Builds a matrix from a list of rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        ComplexMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Real-valued convenience constructor.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Number of entries that are not exactly zero.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|z| **z != ZERO).count()
    }

    /// Iterator over `(row, col, value)` for entries that are not exactly zero.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, z)| **z != ZERO)
            .map(move |(idx, z)| (idx / cols, idx % cols, *z))
    }

    /// Largest entrywise modulus of `self - other`. Shapes must agree.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.max_abs_diff(&self.conj_transpose()) <= tol
    }

    /// `Oᵀ = O` in the computational basis.
    pub fn is_complex_symmetric(&self, tol: f64) -> bool {
        self.is_square() && self.max_abs_diff(&self.transpose()) <= tol
    }

    /// Strict upper triangle (entries with `col > row`).
    pub fn strict_upper(&self) -> Self {
        let mut u = Self::zeros(self.rows, self.cols);
        for (i, j, z) in self.nonzeros() {
            if j > i {
                u[(i, j)] = z;
            }
        }
        u
    }

    /// Strict lower triangle (entries with `col < row`).
    pub fn strict_lower(&self) -> Self {
        let mut l = Self::zeros(self.rows, self.cols);
        for (i, j, z) in self.nonzeros() {
            if j < i {
                l[(i, j)] = z;
            }
        }
        l
    }

    pub fn matmul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::domain(format!(
                "vector of length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("shape mismatch in matrix product")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:>8.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product `a ⊗ b`.
///
/// Fails with a capacity error when either side of the result exceeds `cap`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix, cap: usize) -> Result<ComplexMatrix> {
    let rows = checked_side(a.rows, b.rows, cap)?;
    let cols = checked_side(a.cols, b.cols, cap)?;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a[(i, j)];
            if x == ZERO {
                continue;
            }
            for k in 0..b.rows {
                let base = (i * b.rows + k) * cols + j * b.cols;
                for l in 0..b.cols {
                    out.data[base + l] = x * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// Left-to-right Kronecker product of a non-empty list of factors.
pub fn kron_all<'a, I>(factors: I, cap: usize) -> Result<ComplexMatrix>
where
    I: IntoIterator<Item = &'a ComplexMatrix>,
{
    let mut iter = factors.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::domain("Kronecker product of an empty factor list"))?;
    if first.rows > cap || first.cols > cap {
        return Err(Error::Capacity {
            what: "dense matrix side",
            required: first.rows.max(first.cols),
            cap,
        });
    }
    iter.try_fold(first.clone(), |acc, f| kron(&acc, f, cap))
}

fn checked_side(a: usize, b: usize, cap: usize) -> Result<usize> {
    match a.checked_mul(b) {
        Some(n) if n <= cap => Ok(n),
        other => Err(Error::Capacity {
            what: "dense matrix side",
            required: other.unwrap_or(usize::MAX),
            cap,
        }),
    }
}

/// Product of subsystem dimensions, or a capacity error on overflow.
pub fn total_dim(dims: &[usize]) -> Result<usize> {
    dims.iter().try_fold(1usize, |acc, &d| {
        acc.checked_mul(d).ok_or(Error::Capacity {
            what: "Hilbert space dimension",
            required: usize::MAX,
            cap: usize::MAX,
        })
    })
}

/// Flat basis index of a multi-index, last subsystem fastest.
pub fn flat_index(multi: &[usize], dims: &[usize]) -> Result<usize> {
    if multi.len() != dims.len() {
        return Err(Error::domain(format!(
            "multi-index has {} entries but there are {} subsystems",
            multi.len(),
            dims.len()
        )));
    }
    let mut flat = 0usize;
    for (j, (&i, &n)) in multi.iter().zip(dims).enumerate() {
        if i >= n {
            return Err(Error::domain(format!(
                "index {i} out of range for subsystem {j} of dimension {n}"
            )));
        }
        flat = flat * n + i;
    }
    Ok(flat)
}

/// Inverse of [`flat_index`].
pub fn multi_index(flat: usize, dims: &[usize]) -> Result<Vec<usize>> {
    let total = total_dim(dims)?;
    if flat >= total {
        return Err(Error::domain(format!(
            "flat index {flat} out of range for total dimension {total}"
        )));
    }
    let mut multi = vec![0; dims.len()];
    let mut rest = flat;
    for (slot, &n) in multi.iter_mut().zip(dims).rev() {
        *slot = rest % n;
        rest /= n;
    }
    Ok(multi)
}

/// Pure state of `m` subsystems with dimensions `dims`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiState {
    dims: Vec<usize>,
    amps: Vec<Complex64>,
}

impl MultiState {
    /// Validated constructor; rejects states whose norm differs from 1 by
    /// more than [`NORM_TOLERANCE`].
    pub fn new(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        let state = Self::unnormalized(dims, amps)?;
        let norm_sq = state.norm_sqr();
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::domain(format!(
                "state is not normalized: sum of |amp|^2 = {norm_sq}"
            )));
        }
        Ok(state)
    }

    /// Accepts any nonzero amplitude vector and rescales it to unit norm.
    pub fn normalized(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        let mut state = Self::unnormalized(dims, amps)?;
        let norm = state.norm_sqr().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::domain("cannot normalize a zero or non-finite state"));
        }
        for a in &mut state.amps {
            *a /= norm;
        }
        Ok(state)
    }

    /// Scratch state: shape is checked, the norm is not.
    pub fn unnormalized(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::domain("a state needs at least one subsystem"));
        }
        if let Some((j, &n)) = dims.iter().enumerate().find(|(_, &n)| n < 2) {
            return Err(Error::domain(format!(
                "subsystem {j} has dimension {n}; every dimension must be at least 2"
            )));
        }
        let total = total_dim(&dims)?;
        if amps.len() != total {
            return Err(Error::domain(format!(
                "dims {dims:?} need {total} amplitudes, got {}",
                amps.len()
            )));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::domain("amplitudes must be finite"));
        }
        Ok(MultiState { dims, amps })
    }

    /// Computational basis state `|multi⟩`.
    pub fn basis(dims: Vec<usize>, multi: &[usize]) -> Result<Self> {
        let total = total_dim(&dims)?;
        let idx = flat_index(multi, &dims)?;
        let mut amps = vec![ZERO; total];
        amps[idx] = ONE;
        Self::new(dims, amps)
    }

    /// Tensor product of single-subsystem states, in order.
    pub fn product(factors: &[Vec<Complex64>]) -> Result<Self> {
        let dims: Vec<usize> = factors.iter().map(Vec::len).collect();
        let mut amps = vec![ONE];
        for f in factors {
            amps = amps
                .iter()
                .flat_map(|a| f.iter().map(move |b| a * b))
                .collect();
        }
        Self::normalized(dims, amps)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// Number of subsystems.
    pub fn m(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORM_TOLERANCE
    }

    pub fn amp(&self, multi: &[usize]) -> Result<Complex64> {
        Ok(self.amps[flat_index(multi, &self.dims)?])
    }

    /// Multiplies every amplitude by `c`, skipping the norm check.
    pub fn scaled(&self, c: Complex64) -> Self {
        MultiState {
            dims: self.dims.clone(),
            amps: self.amps.iter().map(|a| a * c).collect(),
        }
    }

    /// Relabels subsystems: subsystem `i` of the result is subsystem
    /// `perm[i]` of `self`.
    pub fn permute_subsystems(&self, perm: &[usize]) -> Result<Self> {
        let m = self.m();
        let mut seen = vec![false; m];
        if perm.len() != m
            || perm
                .iter()
                .any(|&p| p >= m || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::domain(format!(
                "{perm:?} is not a permutation of 0..{m}"
            )));
        }
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut amps = vec![ZERO; self.amps.len()];
        let mut old = vec![0usize; m];
        for (flat, slot) in amps.iter_mut().enumerate() {
            let new_multi = multi_index(flat, &new_dims)?;
            for (i, &p) in perm.iter().enumerate() {
                old[p] = new_multi[i];
            }
            *slot = self.amps[flat_index(&old, &self.dims)?];
        }
        Ok(MultiState {
            dims: new_dims,
            amps,
        })
    }
}

/// Componentwise complex conjugate in the computational basis.
pub fn conjugate_state(state: &MultiState) -> MultiState {
    MultiState {
        dims: state.dims.clone(),
        amps: state.amps.iter().map(Complex64::conj).collect(),
    }
}

/// `⟨Ψ*|O|Ψ⟩ = Σ_{a,b} α_a O[a,b] α_b`.
///
/// The bra is the conjugated state, so the amplitudes enter without
/// conjugation. This is a symmetric bilinear form when `Oᵀ = O`.
pub fn bilinear_expectation(state: &MultiState, op: &ComplexMatrix) -> Result<Complex64> {
    bilinear_form(state.amps(), op, state.amps())
}

/// General bilinear form `Σ_{a,b} x_a O[a,b] y_b`.
pub fn bilinear_form(x: &[Complex64], op: &ComplexMatrix, y: &[Complex64]) -> Result<Complex64> {
    if op.rows != x.len() || op.cols != y.len() {
        return Err(Error::domain(format!(
            "operator is {}x{} but the vectors have lengths {} and {}",
            op.rows,
            op.cols,
            x.len(),
            y.len()
        )));
    }
    let mut acc = ZERO;
    for (a, &xa) in x.iter().enumerate() {
        if xa == ZERO {
            continue;
        }
        let row: Complex64 = op
            .row(a)
            .iter()
            .zip(y)
            .filter(|(o, _)| **o != ZERO)
            .map(|(o, yb)| o * yb)
            .sum();
        acc += xa * row;
    }
    Ok(acc)
}
