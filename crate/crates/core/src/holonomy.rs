//! Curvature of `SU_n/SO_n`, holonomy algebras generated by curvature
//! operators, and two numeric/exact harnesses around flat variations and
//! splitting of curvature tensors.
//!
//! Tangent vectors of `SU_n/SO_n` are traceless symmetric matrices. The
//! multiplication by `i` is kept implicit: every bracket is written on the real
//! representatives, where `[iu, iv] = −[u, v]`.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::{rank_of, ExactMatrix, ExactVector};

/// A symmetric matrix with trace zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracelessSym(ExactMatrix);

impl TracelessSym {
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if !m.is_square() || !m.is_symmetric() {
            return Err(Error::WrongSymmetry("symmetric"));
        }
        if !m.trace().is_zero() {
            return Err(Error::Precondition(format!("trace {} is not zero", m.trace())));
        }
        Ok(TracelessSym(m))
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }
}

/// `⟨R_{u,v}w, z⟩ = trace([u,v][w,z])`. Sectional values `⟨R_{u,v}v, u⟩` are
/// nonnegative with this sign.
pub fn curvature_su_so(u: &TracelessSym, v: &TracelessSym, w: &TracelessSym, z: &TracelessSym) -> Result<Scalar> {
    let uv = u.0.commutator(&v.0)?;
    let wz = w.0.commutator(&z.0)?;
    uv.trace_form(&wz)
}

/// Linear map `ξ ↦ Ã_ξ` given by its values on a basis of the normal space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedMap {
    images: Vec<TracelessSym>,
}

impl AdaptedMap {
    pub fn new(images: Vec<TracelessSym>) -> Result<Self> {
        if let Some(first) = images.first() {
            if let Some(bad) = images.iter().find(|m| m.dim() != first.dim()) {
                return Err(Error::DimensionMismatch { left: first.dim(), right: bad.dim() });
            }
        }
        Ok(AdaptedMap { images })
    }

    /// Traceless parts of the diagonal shape operators of an orbit on `basis`.
    pub fn from_orbit(orbit: &crate::orbit::IsotropyOrbit, basis: &[ExactVector]) -> Result<Self> {
        let mut images = Vec::with_capacity(basis.len());
        for xi in basis {
            let a = orbit.shape_operator_matrix(xi)?;
            let n = a.nrows();
            let shift = a.trace() / Scalar::from_int(n as i64);
            let traceless = a.checked_sub(&ExactMatrix::identity(n).scale(&shift))?;
            images.push(TracelessSym::new(traceless)?);
        }
        Self::new(images)
    }

    pub fn domain_dim(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[TracelessSym] {
        &self.images
    }

    /// `Ã_ξ` for `ξ` given in coordinates of the basis.
    pub fn apply(&self, xi: &ExactVector) -> Result<TracelessSym> {
        if xi.dim() != self.images.len() {
            return Err(Error::DimensionMismatch { left: self.images.len(), right: xi.dim() });
        }
        let n = self.images.first().map_or(0, TracelessSym::dim);
        let mut acc = ExactMatrix::zeros(n, n);
        for (c, m) in xi.iter().zip(&self.images) {
            if !c.is_zero() {
                acc = acc.checked_add(&m.0.scale(c))?;
            }
        }
        TracelessSym::new(acc)
    }

    pub fn is_abelian(&self) -> Result<bool> {
        for (i, a) in self.images.iter().enumerate() {
            for b in &self.images[i + 1..] {
                if !a.0.commutator(&b.0)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `⟨𝓡_{ξ₁,ξ₂}ξ₃, ξ₄⟩ = −trace([Ã_{ξ₁},Ã_{ξ₂}][Ã_{ξ₃},Ã_{ξ₄}])`, which equals
/// `−curvature_su_so(Ã_{ξ₁}, …, Ã_{ξ₄})`.
pub fn adapted_normal_curvature(
    map: &AdaptedMap,
    x1: &ExactVector,
    x2: &ExactVector,
    x3: &ExactVector,
    x4: &ExactVector,
) -> Result<Scalar> {
    let r = curvature_su_so(&map.apply(x1)?, &map.apply(x2)?, &map.apply(x3)?, &map.apply(x4)?)?;
    Ok(-r)
}

/// Basis of `𝔰𝔦𝔪⁰_n` orthogonal for the trace form, every element of squared
/// norm 2. Supported for `n ∈ {2, 3, 4}`; the diagonal part needs `√3` for
/// `n = 3` and `√2` for `n = 4`.
pub fn sim0_basis(n: usize) -> Result<Vec<ExactMatrix>> {
    let int = |xs: &[i64]| xs.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>();
    let diagonal: Vec<ExactMatrix> = match n {
        2 => vec![ExactMatrix::diagonal(&int(&[1, -1]))],
        3 => {
            let s = Scalar::one() / Scalar::sqrt(3)?;
            let d2: Vec<Scalar> = int(&[1, 1, -2]).iter().map(|x| x * &s).collect();
            vec![ExactMatrix::diagonal(&int(&[1, -1, 0])), ExactMatrix::diagonal(&d2)]
        }
        4 => {
            let s = Scalar::one() / Scalar::sqrt(2)?;
            let d3: Vec<Scalar> = int(&[1, 1, -1, -1]).iter().map(|x| x * &s).collect();
            vec![
                ExactMatrix::diagonal(&int(&[1, -1, 0, 0])),
                ExactMatrix::diagonal(&int(&[0, 0, 1, -1])),
                ExactMatrix::diagonal(&d3),
            ]
        }
        _ => return Err(Error::Unsupported(format!("sim0 model space of size {n}"))),
    };
    let mut basis = diagonal;
    for i in 0..n {
        for j in i + 1..n {
            basis.push(ExactMatrix::sym_unit(n, i, j));
        }
    }
    Ok(basis)
}

/// Matrix of `R_{u,v}` on the span of `basis` (orthogonal, squared norms 2):
/// entry `(i, j)` is `⟨R_{u,v} eⱼ, eᵢ⟩ / 2`. Skew-symmetric.
pub fn curvature_operator(u: &ExactMatrix, v: &ExactMatrix, basis: &[ExactMatrix]) -> Result<ExactMatrix> {
    let uv = u.commutator(v)?;
    let half = Scalar::from_ratio(1, 2);
    let images: Vec<ExactMatrix> = basis.iter().map(|e| e.commutator(&uv)).collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(basis.len());
    for ei in basis {
        let row: Vec<Scalar> = images.iter().map(|img| img.trace_form(ei).map(|t| &t * &half)).collect::<Result<_>>()?;
        rows.push(row);
    }
    ExactMatrix::from_rows(rows)
}

/// All `R_{eᵢ,eⱼ}` with `i < j` on `𝔰𝔦𝔪⁰_n`.
pub fn sim0_curvature_generators(n: usize) -> Result<Vec<ExactMatrix>> {
    let basis = sim0_basis(n)?;
    let mut gens = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            gens.push(curvature_operator(&basis[i], &basis[j], &basis)?);
        }
    }
    Ok(gens)
}

/// Lie algebra of skew matrices generated by `generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewAlgebra {
    pub size: usize,
    pub generators: Vec<ExactMatrix>,
    pub closure: Vec<ExactMatrix>,
}

impl SkewAlgebra {
    pub fn dim(&self) -> usize {
        self.closure.len()
    }

    /// Exact check that every bracket of basis elements stays in the span.
    pub fn is_closed(&self) -> Result<bool> {
        let flat: Vec<ExactVector> = self.closure.iter().map(ExactMatrix::flatten).collect();
        for (i, x) in self.closure.iter().enumerate() {
            for y in &self.closure[i + 1..] {
                let mut trial = flat.clone();
                trial.push(x.commutator(y)?.flatten());
                if rank_of(&trial) > flat.len() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Smallest bracket-closed space containing `generators`, capped at
/// `dim 𝔰𝔬(size)`.
pub fn generate_algebra(size: usize, generators: &[ExactMatrix]) -> Result<SkewAlgebra> {
    for g in generators {
        if g.nrows() != size || g.ncols() != size {
            return Err(Error::DimensionMismatch { left: size, right: g.nrows() });
        }
        if !g.is_skew() {
            return Err(Error::WrongSymmetry("skew"));
        }
    }
    let cap = size * size.saturating_sub(1) / 2;
    let mut closure: Vec<ExactMatrix> = Vec::new();
    let mut flat: Vec<ExactVector> = Vec::new();
    let push = |m: ExactMatrix, closure: &mut Vec<ExactMatrix>, flat: &mut Vec<ExactVector>| -> Result<bool> {
        if m.is_zero() {
            return Ok(false);
        }
        let mut trial = flat.clone();
        trial.push(m.flatten());
        if rank_of(&trial) > flat.len() {
            if closure.len() == cap {
                return Err(Error::Internal(format!("closure exceeds dim so({size}) = {cap}")));
            }
            *flat = trial;
            closure.push(m);
            return Ok(true);
        }
        Ok(false)
    };
    for g in generators {
        push(g.clone(), &mut closure, &mut flat)?;
    }
    let mut start = 0;
    while start < closure.len() {
        let end = closure.len();
        for i in start..end {
            for j in 0..i {
                let b = closure[i].commutator(&closure[j])?;
                push(b, &mut closure, &mut flat)?;
            }
        }
        start = end;
    }
    Ok(SkewAlgebra { size, generators: generators.to_vec(), closure })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Transitivity {
    Transitive { orbit_dim: usize },
    NonTransitive { orbit_dim: usize },
}

impl Transitivity {
    pub fn orbit_dim(&self) -> usize {
        match *self {
            Transitivity::Transitive { orbit_dim } | Transitivity::NonTransitive { orbit_dim } => orbit_dim,
        }
    }

    pub fn is_transitive(&self) -> bool {
        matches!(self, Transitivity::Transitive { .. })
    }
}

pub const TRANSITIVITY_SAMPLES: usize = 5;

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Rank of `{X q}` over the closure, maximized over seeded rational points
/// `q`. Transitive on spheres iff that rank is `size − 1`.
pub fn transitivity_test(alg: &SkewAlgebra, seed: u64) -> Result<Transitivity> {
    let n = alg.size;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..TRANSITIVITY_SAMPLES {
        let q = ExactVector::new((0..n).map(|_| random_rational(&mut rng)).collect());
        if q.is_zero() {
            continue;
        }
        let images: Vec<ExactVector> = alg.closure.iter().map(|x| x.mul_vec(&q)).collect::<Result<_>>()?;
        best = best.max(rank_of(&images));
    }
    Ok(if n > 0 && best == n - 1 {
        Transitivity::Transitive { orbit_dim: best }
    } else {
        Transitivity::NonTransitive { orbit_dim: best }
    })
}

/// Seeded random traceless symmetric matrix with small rational entries.
pub fn random_traceless_sym(rng: &mut ChaCha8Rng, n: usize) -> TracelessSym {
    let upper: Vec<Vec<Scalar>> = (0..n).map(|i| (i..n).map(|_| random_rational(rng)).collect()).collect();
    let mut rows: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i <= j { upper[i][j - i].clone() } else { upper[j][i - j].clone() }).collect()).collect();
    let mean = (0..n).map(|i| rows[i][i].clone()).sum::<Scalar>() / Scalar::from_int(n as i64);
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = &row[i] - &mean;
    }
    TracelessSym::new(ExactMatrix::from_rows(rows).expect("square")).expect("traceless by construction")
}

/// Quadrilinear form on `Qᵏ` stored by its values on the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureTensor {
    dim: usize,
    values: Vec<Scalar>,
}

impl CurvatureTensor {
    pub fn zero(dim: usize) -> Self {
        CurvatureTensor { dim, values: vec![Scalar::zero(); dim.pow(4)] }
    }

    pub fn from_fn<F: FnMut(usize, usize, usize, usize) -> Scalar>(dim: usize, mut f: F) -> Self {
        let mut values = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        values.push(f(i, j, k, l));
                    }
                }
            }
        }
        CurvatureTensor { dim, values }
    }

    /// `λ(h(v,w)h(u,z) − h(u,w)h(v,z))` for a symmetric bilinear form `h`.
    pub fn constant_curvature(h: &ExactMatrix, lambda: &Scalar) -> Result<Self> {
        if !h.is_symmetric() {
            return Err(Error::WrongSymmetry("symmetric"));
        }
        Ok(Self::from_fn(h.nrows(), |u, v, w, z| {
            lambda * &(h.get(v, w) * h.get(u, z) - h.get(u, w) * h.get(v, z))
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn at(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let d = self.dim;
        &self.values[((i * d + j) * d + k) * d + l]
    }

    pub fn checked_add(&self, other: &CurvatureTensor) -> Result<CurvatureTensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(CurvatureTensor { dim: self.dim, values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() })
    }

    /// `R(Px, Py, Pz, Pw)` on `Qᵐ` for a `dim × m` matrix `P`.
    pub fn pullback(&self, p: &ExactMatrix) -> Result<CurvatureTensor> {
        if p.nrows() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: p.nrows() });
        }
        let cols: Vec<ExactVector> = (0..p.ncols()).map(|i| p.column(i)).collect();
        Ok(CurvatureTensor::from_fn(p.ncols(), |a, b, c, d| self.eval(&cols[a], &cols[b], &cols[c], &cols[d])))
    }

    pub fn eval(&self, u: &ExactVector, v: &ExactVector, w: &ExactVector, z: &ExactVector) -> Scalar {
        let mut acc = Scalar::zero();
        for i in (0..self.dim).filter(|&i| !u[i].is_zero()) {
            for j in (0..self.dim).filter(|&j| !v[j].is_zero()) {
                let uv = &u[i] * &v[j];
                for k in (0..self.dim).filter(|&k| !w[k].is_zero()) {
                    let uvw = &uv * &w[k];
                    for l in (0..self.dim).filter(|&l| !z[l].is_zero()) {
                        let t = self.at(i, j, k, l);
                        if !t.is_zero() {
                            acc = acc + &(&uvw * &z[l]) * t;
                        }
                    }
                }
            }
        }
        acc
    }

    /// Matrix of `R_{u,v}` with entry `(l, k) = R(u, v, e_k, e_l)`.
    pub fn operator(&self, u: &ExactVector, v: &ExactVector) -> ExactMatrix {
        let d = self.dim;
        let rows = (0..d)
            .map(|l| (0..d).map(|k| self.eval(u, v, &ExactVector::unit(d, k), &ExactVector::unit(d, l))).collect())
            .collect();
        ExactMatrix::from_rows(rows).expect("square")
    }

    /// Skew in both pairs, pair symmetric and first Bianchi, on basis tuples.
    pub fn has_curvature_symmetries(&self) -> bool {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let x = self.at(i, j, k, l);
                        if *x != -self.at(j, i, k, l) || *x != -self.at(i, j, l, k) || x != self.at(k, l, i, j) {
                            return false;
                        }
                        if !(x + self.at(j, k, i, l) + self.at(k, i, j, l)).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// No nonzero vector is killed by every `R_{eᵢ,eⱼ}`.
    pub fn is_nondegenerate(&self) -> bool {
        let d = self.dim;
        let mut rows = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let m = self.operator(&ExactVector::unit(d, i), &ExactVector::unit(d, j));
                rows.extend((0..d).map(|r| m.row(r)));
            }
        }
        rank_of(&rows) == d
    }
}

/// For complementary `V`, `W` with `R_{V,W} = 0` and `R` nondegenerate,
/// reports whether `V ⟂ W`. Violated hypotheses are a `Precondition` error.
pub fn lemma_2_6_check(r: &CurvatureTensor, v: &[ExactVector], w: &[ExactVector]) -> Result<bool> {
    let d = r.dim();
    if let Some(bad) = v.iter().chain(w).find(|x| x.dim() != d) {
        return Err(Error::DimensionMismatch { left: d, right: bad.dim() });
    }
    let all: Vec<ExactVector> = v.iter().chain(w).cloned().collect();
    if v.len() + w.len() != d || rank_of(&all) != d {
        return Err(Error::Precondition("V and W are not complementary".into()));
    }
    if !r.is_nondegenerate() {
        return Err(Error::Precondition("curvature tensor is degenerate".into()));
    }
    for a in v {
        for b in w {
            if !r.operator(a, b).is_zero() {
                return Err(Error::Precondition("R_{V,W} does not vanish".into()));
            }
        }
    }
    Ok(v.iter().all(|a| w.iter().all(|b| a.dot(b).is_zero())))
}

/// Sum of constant-curvature tensors on consecutive coordinate blocks of
/// the given sizes, each with a random positive definite form. Returns the
/// tensor and the block subspaces.
pub fn random_block_tensor(rng: &mut ChaCha8Rng, blocks: &[usize]) -> Result<(CurvatureTensor, Vec<Vec<ExactVector>>)> {
    let d: usize = blocks.iter().sum();
    let mut total = CurvatureTensor::zero(d);
    let mut spaces = Vec::with_capacity(blocks.len());
    let mut offset = 0;
    for &k in blocks {
        let b: Vec<Vec<Scalar>> = (0..k).map(|_| (0..k).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect()).collect();
        let b = ExactMatrix::from_rows(b)?;
        let h = b.transpose().checked_mul(&b)?.checked_add(&ExactMatrix::identity(k))?;
        let lambda = Scalar::from_ratio(rng.gen_range(1..=5), rng.gen_range(1..=3));
        let block = CurvatureTensor::constant_curvature(&h, &lambda)?;
        let embedding = ExactMatrix::from_rows(
            (0..k).map(|i| (0..d).map(|j| if j == offset + i { Scalar::one() } else { Scalar::zero() }).collect()).collect(),
        )?;
        total = total.checked_add(&block.pullback(&embedding)?)?;
        spaces.push((0..k).map(|i| ExactVector::unit(d, offset + i)).collect());
        offset += k;
    }
    Ok((total, spaces))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlaneRotation {
    pub i: usize,
    pub j: usize,
    pub rate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlatVariationReport {
    pub n: usize,
    pub steps: usize,
    pub max_eigenvalue_drift: f64,
    pub max_orthogonality_residual: f64,
    pub max_spectrum_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

fn sorted_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let mut e: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    e.sort_by(|a, b| b.total_cmp(a));
    e
}

/// Integrates `h′ = Ωh`, `h(0) = I` with fixed-step RK4 over `t ∈ [0, 1]`
/// and checks the family `c(t) = h p hᵀ`, `a_t = h a₀ hᵀ` with diagonal
/// traceless `a₀`: the spectrum of `c` stays that of `p` and `ċ ⟂ a_t`.
pub fn flat_variation_harness(p: &[f64], path: &[PlaneRotation], steps: usize, tol: f64) -> Result<FlatVariationReport> {
    let n = p.len();
    if n == 0 || steps == 0 {
        return Err(Error::Precondition("need a nonempty diagonal and at least one step".into()));
    }
    let mut omega = DMatrix::<f64>::zeros(n, n);
    for r in path {
        if r.i >= n || r.j >= n || r.i == r.j {
            return Err(Error::Precondition(format!("invalid rotation plane ({}, {})", r.i, r.j)));
        }
        omega[(r.i, r.j)] += r.rate;
        omega[(r.j, r.i)] -= r.rate;
    }
    let pm = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(p));
    let mean = (n as f64 - 1.0) / 2.0;
    let a0 = DMatrix::from_fn(n, n, |i, j| if i == j { i as f64 - mean } else { 0.0 });
    let target = sorted_eigenvalues(&pm);
    let dt = 1.0 / steps as f64;
    let mut h = DMatrix::<f64>::identity(n, n);
    let (mut drift, mut resid, mut spec_err) = (0.0f64, 0.0f64, 0.0f64);
    let mut previous = target.clone();
    for step in 0..=steps {
        let c = &h * &pm * h.transpose();
        let a = &h * &a0 * h.transpose();
        let hdot = &omega * &h;
        let cdot = &hdot * &pm * h.transpose() + &h * &pm * hdot.transpose();
        resid = resid.max((cdot.transpose() * &a).trace().abs());
        let eig = sorted_eigenvalues(&c);
        for ((x, y), z) in eig.iter().zip(&previous).zip(&target) {
            drift = drift.max((x - y).abs());
            spec_err = spec_err.max((x - z).abs());
        }
        previous = eig;
        if step == steps {
            break;
        }
        let k1 = &omega * &h;
        let k2 = &omega * (&h + &k1 * (dt / 2.0));
        let k3 = &omega * (&h + &k2 * (dt / 2.0));
        let k4 = &omega * (&h + &k3 * dt);
        h += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    }
    let passed = drift < tol && resid < tol && spec_err < tol;
    Ok(FlatVariationReport {
        n,
        steps,
        max_eigenvalue_drift: drift,
        max_orthogonality_residual: resid,
        max_spectrum_error: spec_err,
        tolerance: tol,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::IsotropyOrbit;
    use crate::rootsys::{build_catalog, Multiplicities, RootKind};
    use std::sync::Arc;

    fn ts(rows: &[&[i64]]) -> TracelessSym {
        TracelessSym::new(ExactMatrix::from_int_rows(rows)).unwrap()
    }

    #[test]
    fn curvature_examples() {
        let u = ts(&[&[1, 0], &[0, -1]]);
        let v = TracelessSym::new(ExactMatrix::sym_unit(2, 0, 1)).unwrap();
        assert_eq!(curvature_su_so(&u, &v, &v, &u).unwrap(), Scalar::from_int(8));
        assert!(curvature_su_so(&u, &u, &v, &u).unwrap().is_zero());
        let d = ts(&[&[2, 0], &[0, -2]]);
        assert!(curvature_su_so(&u, &d, &v, &u).unwrap().is_zero());
        assert!(TracelessSym::new(ExactMatrix::identity(2)).is_err());
    }

    #[test]
    fn adapted_examples() {
        let u = ts(&[&[1, 0], &[0, -1]]);
        let v = TracelessSym::new(ExactMatrix::sym_unit(2, 0, 1)).unwrap();
        let map = AdaptedMap::new(vec![u, v]).unwrap();
        let (e1, e2) = (ExactVector::from_ints(&[1, 0]), ExactVector::from_ints(&[0, 1]));
        assert_eq!(adapted_normal_curvature(&map, &e1, &e2, &e2, &e1).unwrap(), Scalar::from_int(-8));
        assert!(adapted_normal_curvature(&map, &e1, &e1, &e2, &e1).unwrap().is_zero());
    }

    #[test]
    fn most_singular_b2_family_is_flat() {
        let sys = Arc::new(build_catalog(RootKind::B, 2, Multiplicities::default()).unwrap());
        let o = IsotropyOrbit::new(sys, ExactVector::from_ints(&[1, 0])).unwrap();
        let basis = vec![ExactVector::from_ints(&[1, 0]), ExactVector::from_ints(&[0, 1])];
        let map = AdaptedMap::from_orbit(&o, &basis).unwrap();
        assert!(map.is_abelian().unwrap());
        let (e1, e2) = (ExactVector::from_ints(&[1, 0]), ExactVector::from_ints(&[0, 1]));
        assert!(adapted_normal_curvature(&map, &e1, &e2, &e2, &e1).unwrap().is_zero());
    }

    #[test]
    fn generation_examples() {
        let g3 = generate_algebra(5, &sim0_curvature_generators(3).unwrap()).unwrap();
        assert_eq!(g3.dim(), 3);
        assert!(g3.is_closed().unwrap());
        assert!(g3.generators.iter().all(ExactMatrix::is_skew));
        assert_eq!(transitivity_test(&g3, 0).unwrap(), Transitivity::NonTransitive { orbit_dim: 3 });

        let g2 = generate_algebra(2, &sim0_curvature_generators(2).unwrap()).unwrap();
        assert_eq!(g2.dim(), 1);
        assert_eq!(transitivity_test(&g2, 0).unwrap(), Transitivity::Transitive { orbit_dim: 1 });

        let empty = generate_algebra(4, &[]).unwrap();
        assert_eq!(empty.dim(), 0);
        assert_eq!(transitivity_test(&empty, 0).unwrap(), Transitivity::NonTransitive { orbit_dim: 0 });
    }

    #[test]
    fn full_rotation_algebra_is_transitive() {
        let gens = vec![ExactMatrix::skew_unit(3, 0, 1), ExactMatrix::skew_unit(3, 1, 2)];
        let alg = generate_algebra(3, &gens).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(transitivity_test(&alg, 7).unwrap().is_transitive());
    }

    #[test]
    fn closure_dimension_ignores_generator_order() {
        let mut gens = sim0_curvature_generators(3).unwrap();
        gens.reverse();
        assert_eq!(generate_algebra(5, &gens).unwrap().dim(), 3);
    }

    #[test]
    fn sim0_four_closes_inside_rotations() {
        let gens = sim0_curvature_generators(4).unwrap();
        assert!(gens.iter().all(ExactMatrix::is_skew));
        let alg = generate_algebra(9, &gens).unwrap();
        assert_eq!(alg.dim(), 6);
        assert!(!transitivity_test(&alg, 0).unwrap().is_transitive());
    }

    #[test]
    fn block_tensor_splits_orthogonally() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (r, spaces) = random_block_tensor(&mut rng, &[2, 2]).unwrap();
        assert!(r.has_curvature_symmetries());
        assert!(lemma_2_6_check(&r, &spaces[0], &spaces[1]).unwrap());

        // Shearing V into W destroys R_{V,W} = 0.
        let sheared: Vec<ExactVector> = spaces[0].iter().map(|x| x + &spaces[1][0]).collect();
        assert!(matches!(lemma_2_6_check(&r, &sheared, &spaces[1]), Err(Error::Precondition(_))));
    }

    #[test]
    fn degenerate_tensor_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (r, _) = random_block_tensor(&mut rng, &[2]).unwrap();
        let embedding = ExactMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let padded = r.pullback(&embedding).unwrap();
        let (v, w) = (
            vec![ExactVector::unit(4, 0), ExactVector::unit(4, 1)],
            vec![ExactVector::unit(4, 2), ExactVector::unit(4, 3)],
        );
        assert!(matches!(lemma_2_6_check(&padded, &v, &w), Err(Error::Precondition(_))));
    }

    #[test]
    fn flat_variation_examples() {
        let plane = [PlaneRotation { i: 0, j: 1, rate: 1.0 }];
        let r = flat_variation_harness(&[1.0, -1.0, 0.0], &plane, 1000, DEFAULT_TOLERANCE).unwrap();
        assert!(r.passed, "{r:?}");
        let id = flat_variation_harness(&[1.0, -1.0, 0.0], &[], 10, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(id.max_eigenvalue_drift, 0.0);
        let composite = [PlaneRotation { i: 0, j: 1, rate: 1.0 }, PlaneRotation { i: 2, j: 3, rate: 0.5 }, PlaneRotation { i: 1, j: 2, rate: 0.3 }];
        let r = flat_variation_harness(&[2.0, 1.0, -1.0, -2.0], &composite, 1000, DEFAULT_TOLERANCE).unwrap();
        assert!(r.passed, "{r:?}");
    }
}
