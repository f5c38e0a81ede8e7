//! The root lattice and orthogonal-complement sublattices.
//!
//! For a rational lattice `L` and lattice vectors `S` spanning a proper
//! subspace `W`, the vectors of `L` orthogonal to `W` span `W^⊥`. The
//! construction is constructive: extend a basis of `W` taken from `S` by
//! lattice vectors, orthogonalize without normalizing (all inner products are
//! rational, so the result stays rational), and clear denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::linalg::{gram_schmidt_unnormalized, rank_of, solve_in_span, ExactVector};
use crate::rootsys::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLattice {
    basis: Vec<ExactVector>,
    generated_from: Vec<ExactVector>,
}

/// A lattice point `γ = a·p` on the ray through `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayPoint {
    pub gamma: ExactVector,
    pub scale: Scalar,
}

impl RootLattice {
    /// Z-span of rational generators, reduced to a basis by integer row
    /// reduction.
    pub fn from_generators(generators: &[ExactVector]) -> Result<Self> {
        let dim = generators.first().ok_or(Error::EmptyInput("lattice generators"))?.dim();
        let mut entries: Vec<Vec<Rational>> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: g.dim() });
            }
            entries.push(g.iter().map(|x| x.to_rational().ok_or(Error::NotInLattice)).collect::<Result<_>>()?);
        }
        let denom = entries.iter().flatten().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut rows: Vec<Vec<BigInt>> = entries
            .iter()
            .map(|r| r.iter().map(|q| (q * BigRational::from_integer(denom.clone())).to_integer()).collect())
            .collect();
        let rank = integer_echelon(&mut rows, dim);
        let basis = rows[..rank]
            .iter()
            .map(|r| ExactVector::new(r.iter().map(|x| Scalar::from_rational(BigRational::new(x.clone(), denom.clone()))).collect()))
            .collect();
        Ok(RootLattice { basis, generated_from: generators.to_vec() })
    }

    /// Integer span of the roots of `system`.
    pub fn of_roots(system: &RootSystem) -> Self {
        Self::from_generators(system.roots()).expect("catalog roots are rational")
    }

    /// `Z^n`.
    pub fn standard(n: usize) -> Self {
        let basis: Vec<ExactVector> = (0..n).map(|i| ExactVector::unit(n, i)).collect();
        RootLattice { generated_from: basis.clone(), basis }
    }

    pub fn basis(&self) -> &[ExactVector] {
        &self.basis
    }

    pub fn generated_from(&self) -> &[ExactVector] {
        &self.generated_from
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Rational coordinates of `v` in the lattice basis, if `v` is in its span.
    fn coordinates(&self, v: &ExactVector) -> Option<Vec<Rational>> {
        solve_in_span(&self.basis, v)?.iter().map(Scalar::to_rational).collect()
    }

    /// Integer coefficients of `v` in the lattice basis, or `None` if `v ∉ L`.
    pub fn membership(&self, v: &ExactVector) -> Option<Vec<BigInt>> {
        if !v.is_rational() {
            return None;
        }
        let c = self.coordinates(v)?;
        c.iter().all(|q| q.is_integer()).then(|| c.iter().map(|q| q.to_integer()).collect())
    }

    pub fn contains(&self, v: &ExactVector) -> bool {
        self.membership(v).is_some()
    }

    fn combine(&self, coeffs: &[BigInt]) -> ExactVector {
        coeffs.iter().zip(&self.basis).fold(ExactVector::zeros(self.basis[0].dim()), |acc, (c, b)| {
            acc.axpy(&Scalar::from_rational(BigRational::from_integer(c.clone())), b)
        })
    }

    /// Shortest lattice vector on the ray through rational `v` (same direction).
    fn primitive_on_ray(&self, v: &ExactVector) -> Option<ExactVector> {
        let c = self.coordinates(v)?;
        let l = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = c.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return None;
        }
        Some(self.combine(&ints.iter().map(|x| x / &g).collect::<Vec<_>>()))
    }

    /// Lattice vectors orthogonal to `span(s)` that span its orthogonal
    /// complement inside the span of the lattice.
    pub fn ortho_complement_sublattice(&self, s: &[ExactVector]) -> Result<Vec<ExactVector>> {
        if let Some(bad) = s.iter().find(|v| !self.contains(v)) {
            return Err(Error::Precondition(format!("{bad} is not a lattice vector")));
        }
        let mut start: Vec<ExactVector> = Vec::new();
        for v in s {
            let mut trial = start.clone();
            trial.push(v.clone());
            if rank_of(&trial) > start.len() {
                start = trial;
            }
        }
        let j = start.len();
        if j == self.rank() {
            return Err(Error::TrivialComplement);
        }
        let mut extended = start;
        for b in &self.basis {
            let mut trial = extended.clone();
            trial.push(b.clone());
            if rank_of(&trial) > extended.len() {
                extended = trial;
            }
        }
        let orthogonal = gram_schmidt_unnormalized(&extended)?;
        orthogonal[j..]
            .iter()
            .map(|w| self.primitive_on_ray(w).map(canonical_sign).ok_or_else(|| Error::Internal("complement vector left the lattice span".into())))
            .collect()
    }

    /// A lattice point `γ = a·p` with `a > 0`. Works for points with
    /// entries in Q(√d) as long as the line through `p` is rational.
    pub fn lattice_point_on_line(&self, p: &ExactVector) -> Result<RayPoint> {
        let none = || Error::NoLatticePoint(p.to_string());
        if p.is_zero() {
            return Err(none());
        }
        let rational = ExactVector::new(p.iter().map(|x| Scalar::from_rational(x.rational_part().clone())).collect());
        let irrational = ExactVector::new(p.iter().map(|x| Scalar::from_rational(x.irrational_part().clone())).collect());
        let direction = match (rational.is_zero(), irrational.is_zero()) {
            (false, true) | (true, true) => rational,
            (true, false) => irrational,
            (false, false) => {
                if rank_of(&[rational.clone(), irrational]) != 1 {
                    return Err(none());
                }
                rational
            }
        };
        let gamma = self.primitive_on_ray(&direction).ok_or_else(none)?;
        let k = (0..p.dim()).find(|&k| !p[k].is_zero()).expect("p is nonzero");
        let scale = &gamma[k] / &p[k];
        if scale.is_negative() {
            Ok(RayPoint { gamma: -&gamma, scale: -scale })
        } else {
            Ok(RayPoint { gamma, scale })
        }
    }
}

/// Flips `v` so its first nonzero coordinate is positive.
pub fn canonical_sign(v: ExactVector) -> ExactVector {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -&v,
        _ => v,
    }
}

/// In-place integer row echelon form by repeated Euclidean steps; returns the
/// rank. Nonzero rows end up first.
fn integer_echelon(rows: &mut [Vec<BigInt>], cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        loop {
            let pivot = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).min_by(|&i, &k| rows[i][c].abs().cmp(&rows[k][c].abs()));
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !rows[r][c].is_zero() {
            r += 1;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_catalog, Multiplicities, RootKind};

    fn v(xs: &[i64]) -> ExactVector {
        ExactVector::from_ints(xs)
    }

    #[test]
    fn membership_examples() {
        let z2 = RootLattice::standard(2);
        assert_eq!(z2.membership(&v(&[3, -2])), Some(vec![BigInt::from(3), BigInt::from(-2)]));
        let half = ExactVector::new(vec![Scalar::from_ratio(1, 2), Scalar::zero()]);
        assert!(z2.membership(&half).is_none());
        let a2 = RootLattice::of_roots(&build_catalog(RootKind::A, 2, Multiplicities::default()).unwrap());
        assert_eq!(a2.rank(), 2);
        assert!(a2.contains(&v(&[1, -1, 0])));
        assert!(!a2.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn generators_reduce_to_a_basis() {
        let l = RootLattice::from_generators(&[v(&[2, 0]), v(&[0, 2]), v(&[1, 1])]).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&v(&[1, 1])));
        assert!(l.contains(&v(&[2, 0])));
        assert!(!l.contains(&v(&[1, 0])));
    }

    #[test]
    fn complement_examples() {
        let z2 = RootLattice::standard(2);
        assert_eq!(z2.ortho_complement_sublattice(&[v(&[1, 1])]).unwrap(), vec![v(&[1, -1])]);
        assert_eq!(z2.ortho_complement_sublattice(&[v(&[2, 1])]).unwrap(), vec![v(&[1, -2])]);
        let z3 = RootLattice::standard(3);
        assert_eq!(z3.ortho_complement_sublattice(&[v(&[1, 0, 0])]).unwrap(), vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(matches!(z2.ortho_complement_sublattice(&[v(&[1, 0]), v(&[0, 1])]), Err(Error::TrivialComplement)));
    }

    #[test]
    fn complement_inside_a_non_standard_lattice() {
        let c2 = RootLattice::of_roots(&build_catalog(RootKind::C, 2, Multiplicities::default()).unwrap());
        // C₂ root lattice is {(a,b) : a+b even}; (1,−1) is its shortest vector ⟂ (1,1).
        let out = c2.ortho_complement_sublattice(&[v(&[1, 1])]).unwrap();
        assert_eq!(out, vec![v(&[1, -1])]);
        let out = c2.ortho_complement_sublattice(&[v(&[2, 0])]).unwrap();
        assert_eq!(out, vec![v(&[0, 2])]);
    }

    #[test]
    fn ray_points() {
        let z2 = RootLattice::standard(2);
        let r = z2.lattice_point_on_line(&v(&[1, 1])).unwrap();
        assert_eq!((r.gamma, r.scale), (v(&[1, 1]), Scalar::one()));
        let p = ExactVector::new(vec![Scalar::from_ratio(1, 2), Scalar::from_ratio(1, 3)]);
        let r = z2.lattice_point_on_line(&p).unwrap();
        assert_eq!((r.gamma, r.scale), (v(&[3, 2]), Scalar::from_int(6)));
        let r2 = Scalar::sqrt(2).unwrap();
        let bad = ExactVector::new(vec![Scalar::one(), r2.clone()]);
        assert!(matches!(z2.lattice_point_on_line(&bad), Err(Error::NoLatticePoint(_))));
        // An irrational multiple of a rational direction still has one.
        let scaled = ExactVector::new(vec![r2.clone(), r2.clone()]);
        let r = z2.lattice_point_on_line(&scaled).unwrap();
        assert_eq!(r.gamma, v(&[1, 1]));
        assert_eq!(&r.scale * &r2, Scalar::one());
        let neg = v(&[-2, 0]);
        let r = z2.lattice_point_on_line(&neg).unwrap();
        assert_eq!((r.gamma, r.scale), (v(&[-1, 0]), Scalar::from_ratio(1, 2)));
    }
}
