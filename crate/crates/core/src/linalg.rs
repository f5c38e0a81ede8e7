//! Dense exact vectors and matrices over [`Scalar`], with a small float bridge.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExactVector(Vec<Scalar>);

impl ExactVector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        ExactVector(entries)
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        ExactVector(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        ExactVector(vec![Scalar::zero(); dim])
    }

    /// `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.0.iter().all(Scalar::is_rational)
    }

    fn check_dim(&self, other: &ExactVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(())
    }

    /// Euclidean inner product `Σ uᵢvᵢ`.
    pub fn inner_product(&self, other: &ExactVector) -> Result<Scalar> {
        self.check_dim(other)?;
        self.0.iter().zip(&other.0).try_fold(Scalar::zero(), |acc, (x, y)| acc.checked_add(&x.checked_mul(y)?))
    }

    /// Inner product for vectors already known to share a dimension.
    pub fn dot(&self, other: &ExactVector) -> Scalar {
        self.inner_product(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn norm_squared(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, c: &Scalar) -> ExactVector {
        ExactVector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &Scalar, other: &ExactVector) -> ExactVector {
        assert_eq!(self.dim(), other.dim(), "axpy dimension mismatch");
        ExactVector(self.0.iter().zip(&other.0).map(|(x, y)| x + &(c * y)).collect())
    }

    /// Galois conjugate, entrywise.
    pub fn conjugate(&self) -> ExactVector {
        ExactVector(self.0.iter().map(Scalar::conjugate).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(Scalar::to_f64).collect()
    }

    /// Parses a comma-separated list of exact scalars, e.g. `"1,-1/2,sqrt(2)"`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let body = match (t.chars().next(), t.chars().last()) {
            (Some('('), Some(')')) | (Some('['), Some(']')) => &t[1..t.len() - 1],
            _ => t,
        };
        if body.trim().is_empty() {
            return Err(Error::Parse(text.to_string()));
        }
        body.split(',').map(|t| t.trim().parse()).collect::<Result<Vec<_>>>().map(ExactVector)
    }
}

impl Index<usize> for ExactVector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &ExactVector {
    type Output = ExactVector;
    fn add(self, rhs: &ExactVector) -> ExactVector {
        self.axpy(&Scalar::one(), rhs)
    }
}

impl Sub for &ExactVector {
    type Output = ExactVector;
    fn sub(self, rhs: &ExactVector) -> ExactVector {
        self.axpy(&Scalar::from_int(-1), rhs)
    }
}

impl Neg for &ExactVector {
    type Output = ExactVector;
    fn neg(self) -> ExactVector {
        ExactVector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Symmetric,
    Skew,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    tag: Symmetry,
}

impl ExactMatrix {
    fn with_data(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        let mut m = ExactMatrix { rows, cols, data, tag: Symmetry::General };
        m.tag = m.detect_symmetry();
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::with_data(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m.tag = Symmetry::Symmetric;
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut data = vec![Scalar::zero(); n * n];
        for (i, x) in entries.iter().enumerate() {
            data[i * n + i] = x.clone();
        }
        Self::with_data(n, n, data)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { left: c, right: bad.len() });
        }
        Ok(Self::with_data(r, c, rows.into_iter().flatten().collect()))
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
            .expect("ragged integer rows")
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(vs: &[ExactVector]) -> Result<Self> {
        Self::from_rows(vs.iter().map(|v| v.entries().to_vec()).collect())
    }

    /// `Eᵢⱼ + Eⱼᵢ` in dimension `n`.
    pub fn sym_unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = m.data[i * n + j].clone() + Scalar::one();
        m.data[j * n + i] = m.data[j * n + i].clone() + Scalar::one();
        m.tag = Symmetry::Symmetric;
        m
    }

    /// `Eᵢⱼ − Eⱼᵢ` in dimension `n`.
    pub fn skew_unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = Scalar::one();
        m.data[j * n + i] = Scalar::from_int(-1);
        m.tag = m.detect_symmetry();
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> ExactVector {
        ExactVector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> ExactVector {
        ExactVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn symmetry(&self) -> Symmetry {
        self.tag
    }

    pub fn is_symmetric(&self) -> bool {
        self.tag == Symmetry::Symmetric
    }

    /// Skew test on the entries; the zero matrix counts as skew.
    pub fn is_skew(&self) -> bool {
        self.tag == Symmetry::Skew || (self.tag == Symmetry::Symmetric && self.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn detect_symmetry(&self) -> Symmetry {
        if !self.is_square() {
            return Symmetry::General;
        }
        let n = self.rows;
        let pairs = || (0..n).flat_map(move |i| (i..n).map(move |j| (i, j)));
        if pairs().all(|(i, j)| self.get(i, j) == self.get(j, i)) {
            Symmetry::Symmetric
        } else if pairs().all(|(i, j)| *self.get(i, j) == -self.get(j, i)) {
            Symmetry::Skew
        } else {
            Symmetry::General
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols).flat_map(|j| (0..self.rows).map(move |i| (i, j))).map(|(i, j)| self.get(i, j).clone()).collect();
        Self::with_data(self.cols, self.rows, data)
    }

    pub fn checked_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { left: self.cols, right: other.rows });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    let (x, y) = (self.get(i, k), other.get(k, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc + x * y;
                    }
                }
                data.push(acc);
            }
        }
        Ok(Self::with_data(self.rows, other.cols, data))
    }

    pub fn mul_vec(&self, v: &ExactVector) -> Result<ExactVector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch { left: self.cols, right: v.dim() });
        }
        Ok(ExactVector::new((0..self.rows).map(|i| self.row(i).dot(v)).collect()))
    }

    fn zip_with(&self, other: &ExactMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<ExactMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch { left: self.rows * self.cols, right: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(x, y)| f(x, y)).collect();
        Ok(Self::with_data(self.rows, self.cols, data))
    }

    pub fn checked_add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn checked_sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |x, y| x - y)
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        Self::with_data(self.rows, self.cols, self.data.iter().map(|x| x * c).collect())
    }

    /// `trace(AB)`.
    pub fn trace_form(&self, other: &ExactMatrix) -> Result<Scalar> {
        if !self.is_square() || (self.rows, self.cols) != (other.cols, other.rows) {
            return Err(Error::DimensionMismatch { left: self.rows, right: other.rows });
        }
        let n = self.rows;
        let mut acc = Scalar::zero();
        for i in 0..n {
            for k in 0..n {
                let (x, y) = (self.get(i, k), other.get(k, i));
                if !x.is_zero() && !y.is_zero() {
                    acc = acc + x * y;
                }
            }
        }
        Ok(acc)
    }

    /// `AB − BA`; the bracket of two symmetric matrices is tagged skew.
    pub fn commutator(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if !self.is_square() || (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch { left: self.rows, right: other.rows });
        }
        let mut c = self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)?;
        if self.is_symmetric() && other.is_symmetric() {
            c.tag = Symmetry::Skew;
        }
        Ok(c)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn flatten(&self) -> ExactVector {
        ExactVector::new(self.data.clone())
    }

    pub fn rank(&self) -> usize {
        echelon(self).pivots.len()
    }

    /// Exact basis of `{v : Av = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<ExactVector> {
        let e = echelon(self);
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.cols];
                x[f] = Scalar::one();
                for (k, &p) in e.pivots.iter().enumerate().rev() {
                    let mut acc = Scalar::zero();
                    for (j, xj) in x.iter().enumerate().skip(p + 1) {
                        if !xj.is_zero() {
                            acc = acc + e.get(k, j) * xj;
                        }
                    }
                    x[p] = -(acc / e.get(k, p));
                }
                ExactVector::new(x)
            })
            .collect()
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_f64())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

struct Echelon {
    cols: usize,
    data: Vec<Scalar>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

/// Fraction-free (Bareiss) row echelon form. Every update
/// `(p·aᵢⱼ − aᵢc·aₖⱼ)/prev` is an exact division.
fn echelon(m: &ExactMatrix) -> Echelon {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut pivots = Vec::new();
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = &piv * &a[i * cols + j] - &lead * &a[r * cols + j];
                a[i * cols + j] = v / &prev;
            }
            a[i * cols + c] = Scalar::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    Echelon { cols, data: a, pivots }
}

/// Rank of a list of vectors.
pub fn rank_of(vs: &[ExactVector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    ExactMatrix::from_row_vectors(vs).map_or(0, |m| m.rank())
}

/// Coordinates `c` with `Σ cᵢ·basisᵢ = v`, or `None` if `v` is outside the span.
/// The basis must be linearly independent.
pub fn solve_in_span(basis: &[ExactVector], v: &ExactVector) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return v.is_zero().then(Vec::new);
    }
    // Columns are basis vectors augmented by −v; a kernel vector with last entry 1 solves it.
    let n = basis.len();
    let rows: Vec<Vec<Scalar>> = (0..v.dim())
        .map(|i| basis.iter().map(|b| b[i].clone()).chain(std::iter::once(-&v[i])).collect())
        .collect();
    let m = ExactMatrix::from_rows(rows).ok()?;
    let kernel = m.kernel_basis();
    let k = kernel.into_iter().find(|k| !k[n].is_zero())?;
    let t = k[n].clone();
    Some((0..n).map(|i| &k[i] / &t).collect())
}

/// Orthogonalizes without normalizing, so entries stay in the scalar field.
/// The span of the first `i` outputs equals that of the first `i` inputs.
pub fn gram_schmidt_unnormalized(vs: &[ExactVector]) -> Result<Vec<ExactVector>> {
    let mut out: Vec<ExactVector> = Vec::with_capacity(vs.len());
    let mut norms: Vec<Scalar> = Vec::with_capacity(vs.len());
    for (i, v) in vs.iter().enumerate() {
        if let Some(first) = vs.first() {
            if first.dim() != v.dim() {
                return Err(Error::DimensionMismatch { left: first.dim(), right: v.dim() });
            }
        }
        let mut w = v.clone();
        for (u, nu) in out.iter().zip(&norms) {
            let c = v.dot(u) / nu;
            if !c.is_zero() {
                w = w.axpy(&-c, u);
            }
        }
        if w.is_zero() {
            return Err(Error::LinearlyDependent(i));
        }
        norms.push(w.norm_squared());
        out.push(w);
    }
    Ok(out)
}

/// `‖exp(2πi·q·A) − I‖∞` in double precision for a symmetric `A`, computed from a
/// float eigendecomposition. Vanishes (up to rounding) exactly when every
/// eigenvalue of `q·A` is an integer.
pub fn float_expm_check(a: &ExactMatrix, q: u64) -> Result<f64> {
    if !a.is_symmetric() {
        return Err(Error::WrongSymmetry("symmetric"));
    }
    let n = a.nrows();
    let eig = a.to_f64().symmetric_eigen();
    let theta = 2.0 * std::f64::consts::PI * q as f64;
    let phases: Vec<Complex64> = eig.eigenvalues.iter().map(|&l| Complex64::from_polar(1.0, theta * l)).collect();
    let v = &eig.eigenvectors;
    let mut worst = 0.0f64;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            let mut z = Complex64::new(0.0, 0.0);
            for (k, ph) in phases.iter().enumerate() {
                z += ph * v[(i, k)] * v[(j, k)];
            }
            if i == j {
                z -= 1.0;
            }
            row += z.norm();
        }
        worst = worst.max(row);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> ExactVector {
        ExactVector::from_ints(xs)
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(v(&[1, 0]).inner_product(&v(&[0, 1])).unwrap(), Scalar::zero());
        assert_eq!(v(&[1, 1]).inner_product(&v(&[1, -1])).unwrap(), Scalar::zero());
        assert_eq!(v(&[2, 1]).inner_product(&v(&[1, 3])).unwrap(), Scalar::from_int(5));
        assert!(v(&[1]).inner_product(&v(&[1, 2])).is_err());
    }

    #[test]
    fn trace_form_examples() {
        let i2 = ExactMatrix::identity(2);
        let d = ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        let off = ExactMatrix::sym_unit(2, 0, 1);
        assert_eq!(i2.trace_form(&i2).unwrap(), Scalar::from_int(2));
        assert_eq!(d.trace_form(&d).unwrap(), Scalar::from_int(2));
        assert_eq!(d.trace_form(&off).unwrap(), Scalar::zero());
        assert!(d.trace_form(&ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn commutator_examples() {
        let d = ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        let e = ExactMatrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        let off = ExactMatrix::sym_unit(2, 0, 1);
        assert!(d.commutator(&e).unwrap().is_zero());
        let c = d.commutator(&off).unwrap();
        assert_eq!(c, ExactMatrix::from_int_rows(&[&[0, 2], &[-2, 0]]));
        assert!(c.is_skew());
        assert!(off.commutator(&off).unwrap().is_zero());
    }

    #[test]
    fn gram_schmidt_examples() {
        let out = gram_schmidt_unnormalized(&[v(&[1, 1]), v(&[1, 0])]).unwrap();
        assert_eq!(out, vec![v(&[1, 1]), ExactVector::new(vec![q(1, 2), q(-1, 2)])]);
        let e = vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])];
        assert_eq!(gram_schmidt_unnormalized(&e).unwrap(), e);
        let tri = gram_schmidt_unnormalized(&[v(&[1, 0, 0]), v(&[1, 1, 0]), v(&[1, 1, 1])]).unwrap();
        assert_eq!(tri, e);
        assert!(matches!(
            gram_schmidt_unnormalized(&[v(&[1, 2]), v(&[2, 4])]),
            Err(Error::LinearlyDependent(1))
        ));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(ExactMatrix::zeros(2, 2).kernel_basis().len(), 2);
        assert!(ExactMatrix::identity(3).kernel_basis().is_empty());
        let k = ExactMatrix::from_int_rows(&[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, vec![v(&[-1, 1])]);
    }

    #[test]
    fn kernel_of_rectangular_rank_deficient() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 0, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len() + m.rank(), 4);
        for x in &k {
            assert!(m.mul_vec(x).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_in_span_finds_coordinates() {
        let basis = vec![v(&[1, -1, 0]), v(&[0, 1, -1])];
        let c = solve_in_span(&basis, &v(&[1, 0, -1])).unwrap();
        assert_eq!(c, vec![Scalar::one(), Scalar::one()]);
        assert!(solve_in_span(&basis, &v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn expm_bridge() {
        let a = ExactMatrix::diagonal(&[Scalar::one(), Scalar::from_int(-1)]);
        assert!(float_expm_check(&a, 1).unwrap() < 1e-8);
        let h = ExactMatrix::diagonal(&[q(1, 2), q(-1, 2)]);
        assert!(float_expm_check(&h, 2).unwrap() < 1e-8);
        let r2 = Scalar::sqrt(2).unwrap();
        let irr = ExactMatrix::diagonal(&[r2.clone(), -r2]);
        for q in 1..=10 {
            assert!(float_expm_check(&irr, q).unwrap() > 0.1, "q = {q}");
        }
    }

    #[test]
    fn vector_text_forms() {
        let r2 = Scalar::sqrt(2).unwrap();
        let expected = ExactVector::new(vec![Scalar::one(), r2.clone()]);
        assert_eq!(ExactVector::parse("1,sqrt(2)").unwrap(), expected);
        assert_eq!(ExactVector::parse("(1, sqrt(2))").unwrap(), expected);
        assert_eq!(ExactVector::parse("[1,sqrt(2)]").unwrap(), expected);
        assert_eq!(ExactVector::parse(&expected.to_string()).unwrap(), expected);
        assert_eq!(ExactVector::parse("sqrt(2)").unwrap(), ExactVector::new(vec![r2]));
        assert!(ExactVector::parse("()").is_err());
    }

    #[test]
    fn expm_bridge_on_rotated_matrix() {
        // [[0,1/2],[1/2,0]] has eigenvalues ±1/2.
        let a = ExactMatrix::sym_unit(2, 0, 1).scale(&q(1, 2));
        assert!(float_expm_check(&a, 2).unwrap() < 1e-8);
        assert!(float_expm_check(&a, 1).unwrap() > 1.0);
    }
}
