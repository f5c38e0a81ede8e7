//! Reduced crystallographic root systems with multiplicities.
//!
//! A [`RootSystem`] is validated on construction: the four root-system axioms,
//! rational norms, Weyl invariance of multiplicities, and a simple system whose
//! nonnegative cone contains half of the roots.

mod axioms;
mod catalog;
mod weyl;

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

pub use axioms::{validate_axioms, AxiomReport, Violation};
pub use catalog::{build_catalog, parse_label, Multiplicities, RootKind};
pub use weyl::WeylElement;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::{rank_of, solve_in_span, ExactMatrix, ExactVector};

/// Reflection of `x` in the hyperplane orthogonal to `alpha`.
pub fn reflect(x: &ExactVector, alpha: &ExactVector) -> ExactVector {
    let c = Scalar::from_int(2) * x.dot(alpha) / alpha.norm_squared();
    x.axpy(&-c, alpha)
}

/// `I − 2ααᵀ/(α,α)`.
pub fn reflection_matrix(alpha: &ExactVector) -> ExactMatrix {
    let n = alpha.dim();
    let k = Scalar::from_int(2) / alpha.norm_squared();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let delta = if i == j { Scalar::one() } else { Scalar::zero() };
                    delta - &k * &alpha[i] * &alpha[j]
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).expect("square by construction")
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    ambient_dim: usize,
    rank: usize,
    roots: Vec<ExactVector>,
    multiplicity: Vec<u32>,
    simple_roots: Vec<ExactVector>,
    positive: Vec<bool>,
}

/// Position of a point relative to the fundamental chamber `{x : (αᵢ, x) ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "vanishing")]
pub enum ChamberPosition {
    Interior,
    /// Indices of the simple roots orthogonal to the point.
    BoundaryFace(Vec<usize>),
    Outside,
}

impl RootSystem {
    /// Validates explicit root data. `multiplicity[i]` belongs to `roots[i]`.
    pub fn new(
        label: impl Into<String>,
        roots: Vec<ExactVector>,
        multiplicity: Vec<u32>,
        simple_roots: Vec<ExactVector>,
    ) -> Result<Self> {
        if multiplicity.len() != roots.len() {
            return Err(Error::DimensionMismatch { left: roots.len(), right: multiplicity.len() });
        }
        let report = validate_axioms(&roots, &multiplicity);
        if !report.ok {
            return Err(Error::InvalidRootSystem(report.summary()));
        }
        let ambient_dim = roots[0].dim();
        let rank = rank_of(&roots);
        if simple_roots.len() != rank || rank_of(&simple_roots) != rank {
            return Err(Error::InvalidRootSystem(format!("need {rank} independent simple roots")));
        }
        if let Some(s) = simple_roots.iter().find(|s| !roots.contains(s)) {
            return Err(Error::InvalidRootSystem(format!("simple root {s} is not a root")));
        }
        let mut positive = Vec::with_capacity(roots.len());
        for r in &roots {
            let c = solve_in_span(&simple_roots, r).ok_or(Error::NotInSection)?;
            let integral = c.iter().all(|x| x.to_rational().is_some_and(|q| q.is_integer()));
            let nonneg = c.iter().all(|x| !x.is_negative());
            let nonpos = c.iter().all(|x| !x.is_positive());
            if !integral || !(nonneg || nonpos) {
                return Err(Error::InvalidRootSystem(format!("{r} is not a signed integer combination of the simple roots")));
            }
            positive.push(nonneg);
        }
        Ok(RootSystem { label: label.into(), ambient_dim, rank, roots, multiplicity, simple_roots, positive })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[ExactVector] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[ExactVector] {
        &self.simple_roots
    }

    pub fn multiplicity_at(&self, index: usize) -> u32 {
        self.multiplicity[index]
    }

    pub fn multiplicity(&self, root: &ExactVector) -> Option<u32> {
        self.index_of(root).map(|i| self.multiplicity[i])
    }

    pub fn index_of(&self, root: &ExactVector) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    /// Positive roots with respect to the simple system, in catalog order.
    pub fn positive_roots(&self) -> impl Iterator<Item = (usize, &ExactVector)> {
        self.roots.iter().enumerate().filter(move |(i, _)| self.positive[*i])
    }

    pub fn is_positive(&self, index: usize) -> bool {
        self.positive[index]
    }

    /// True if `v` lies in the span of the roots.
    pub fn in_section(&self, v: &ExactVector) -> bool {
        v.dim() == self.ambient_dim && solve_in_span(&self.simple_roots, v).is_some()
    }

    /// Coordinates of `v` in the basis of simple roots.
    pub fn simple_coordinates(&self, v: &ExactVector) -> Result<Vec<Scalar>> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: v.dim() });
        }
        solve_in_span(&self.simple_roots, v).ok_or(Error::NotInSection)
    }

    /// Vectors `ωᵢ` in the section with `(αⱼ, ωᵢ) = δᵢⱼ`: the edges of the
    /// fundamental chamber.
    pub fn chamber_rays(&self) -> Vec<ExactVector> {
        let n = self.rank;
        let gram: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| self.simple_roots[i].dot(&self.simple_roots[j])).collect())
            .collect();
        let gram_cols: Vec<ExactVector> = (0..n).map(|j| ExactVector::new((0..n).map(|i| gram[i][j].clone()).collect())).collect();
        (0..n)
            .map(|i| {
                let c = solve_in_span(&gram_cols, &ExactVector::unit(n, i)).expect("Gram matrix of simple roots is invertible");
                c.iter()
                    .zip(&self.simple_roots)
                    .fold(ExactVector::zeros(self.ambient_dim), |acc, (ck, ak)| acc.axpy(ck, ak))
            })
            .collect()
    }

    pub fn chamber_membership(&self, p: &ExactVector) -> ChamberPosition {
        let signs: Vec<i32> = self.simple_roots.iter().map(|a| a.dot(p).signum()).collect();
        if signs.iter().any(|&s| s < 0) {
            ChamberPosition::Outside
        } else if signs.iter().all(|&s| s > 0) {
            ChamberPosition::Interior
        } else {
            ChamberPosition::BoundaryFace(signs.iter().enumerate().filter(|(_, &s)| s == 0).map(|(i, _)| i).collect())
        }
    }

    /// Roots orthogonal to `p`: the root system of the stabilizer.
    pub fn stabilizer_subsystem(&self, p: &ExactVector) -> Subsystem {
        let indices: Vec<usize> = (0..self.roots.len()).filter(|&i| self.roots[i].dot(p).is_zero()).collect();
        Subsystem::from_indices(self, indices)
    }

    /// Moves `p` into the closed fundamental chamber by simple reflections.
    pub fn dominant_representative(&self, p: &ExactVector) -> ExactVector {
        let mut x = p.clone();
        while let Some(a) = self.simple_roots.iter().find(|a| a.dot(&x).is_negative()) {
            x = reflect(&x, a);
        }
        x
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {}, {} roots)", self.label, self.rank, self.roots.len())
    }
}

/// A subset of the roots of a parent system, closed under its own reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsystem {
    /// Indices into the parent's root list, ascending.
    pub indices: Vec<usize>,
    pub roots: Vec<ExactVector>,
    /// Positive flags inherited from the parent's simple system.
    pub positive: Vec<bool>,
}

impl Subsystem {
    pub fn from_indices(parent: &RootSystem, indices: Vec<usize>) -> Self {
        let roots = indices.iter().map(|&i| parent.roots[i].clone()).collect();
        let positive = indices.iter().map(|&i| parent.positive[i]).collect();
        Subsystem { indices, roots, positive }
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn span_dim(&self) -> usize {
        rank_of(&self.roots)
    }

    /// Closed under negation and under the reflections of its own members.
    pub fn is_root_subsystem(&self) -> bool {
        self.roots.iter().all(|a| self.roots.contains(&-a))
            && self.roots.iter().all(|a| self.roots.iter().all(|b| self.roots.contains(&reflect(b, a))))
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &ExactVector> {
        self.roots.iter().zip(&self.positive).filter(|(_, &p)| p).map(|(r, _)| r)
    }

    /// Indecomposable positive roots: the simple system of the subsystem.
    pub fn simple_roots(&self) -> Vec<ExactVector> {
        let pos: Vec<&ExactVector> = self.positive_roots().collect();
        pos.iter()
            .filter(|&&r| !pos.iter().any(|&a| a != r && pos.contains(&&(r - a))))
            .map(|&r| r.clone())
            .collect()
    }

    /// Connected components of the non-orthogonality graph on roots up to sign.
    pub fn irreducible_components(&self) -> Vec<Subsystem> {
        let reps: Vec<usize> = (0..self.roots.len()).filter(|&i| self.positive[i]).collect();
        let mut uf = UnionFind::<usize>::new(reps.len());
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                if !self.roots[reps[a]].dot(&self.roots[reps[b]]).is_zero() {
                    uf.union(a, b);
                }
            }
        }
        let mut order: Vec<usize> = Vec::new();
        for a in 0..reps.len() {
            let r = uf.find(a);
            if !order.contains(&r) {
                order.push(r);
            }
        }
        order
            .into_iter()
            .map(|root| {
                let members: Vec<usize> = (0..self.roots.len())
                    .filter(|&i| {
                        let v = if self.positive[i] { self.roots[i].clone() } else { -&self.roots[i] };
                        reps.iter().position(|&k| self.roots[k] == v).is_some_and(|a| uf.find(a) == root)
                    })
                    .collect();
                Subsystem {
                    indices: members.iter().map(|&i| self.indices[i]).collect(),
                    roots: members.iter().map(|&i| self.roots[i].clone()).collect(),
                    positive: members.iter().map(|&i| self.positive[i]).collect(),
                }
            })
            .collect()
    }
}

/// Components of an explicit list of roots, closed under negation. Each root is
/// represented up to sign by whichever of `±α` appears first.
pub fn irreducible_components(roots: &[ExactVector]) -> Vec<Vec<ExactVector>> {
    let mut seen: Vec<ExactVector> = Vec::new();
    let positive: Vec<bool> = roots
        .iter()
        .map(|r| {
            let neg = -r;
            if seen.contains(&neg) {
                false
            } else {
                seen.push(r.clone());
                true
            }
        })
        .collect();
    let sub = Subsystem { indices: (0..roots.len()).collect(), roots: roots.to_vec(), positive };
    sub.irreducible_components().into_iter().map(|c| c.roots).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> ExactVector {
        ExactVector::from_ints(xs)
    }

    fn b2() -> RootSystem {
        build_catalog(RootKind::B, 2, Multiplicities::default()).unwrap()
    }

    #[test]
    fn stabilizer_examples() {
        let b2 = b2();
        let j = b2.stabilizer_subsystem(&v(&[1, 0]));
        assert_eq!(j.roots.len(), 2);
        assert!(j.roots.contains(&v(&[0, 1])) && j.roots.contains(&v(&[0, -1])));
        assert!(b2.stabilizer_subsystem(&v(&[2, 1])).is_empty());

        let b3 = build_catalog(RootKind::B, 3, Multiplicities::default()).unwrap();
        let j = b3.stabilizer_subsystem(&v(&[1, 1, 0]));
        let mut got = j.roots.clone();
        got.sort_by_key(|r| r.to_string());
        let mut want = vec![v(&[1, -1, 0]), v(&[-1, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, -1])];
        want.sort_by_key(|r| r.to_string());
        assert_eq!(got, want);
        assert!(j.is_root_subsystem());
    }

    #[test]
    fn component_examples() {
        let j = vec![v(&[1, -1, 0]), v(&[-1, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, -1])];
        assert_eq!(irreducible_components(&j).len(), 2);
        assert!(irreducible_components(&[]).is_empty());
        let a2 = build_catalog(RootKind::A, 2, Multiplicities::default()).unwrap();
        assert_eq!(irreducible_components(a2.roots()).len(), 1);
    }

    #[test]
    fn chamber_examples() {
        let b2 = b2();
        assert_eq!(b2.chamber_membership(&v(&[2, 1])), ChamberPosition::Interior);
        assert_eq!(b2.chamber_membership(&v(&[1, 1])), ChamberPosition::BoundaryFace(vec![0]));
        assert_eq!(b2.simple_roots()[0], v(&[1, -1]));
        assert_eq!(b2.chamber_membership(&v(&[-1, 0])), ChamberPosition::Outside);
    }

    #[test]
    fn chamber_rays_are_dual_to_simple_roots() {
        for (kind, rank) in [(RootKind::A, 3), (RootKind::B, 3), (RootKind::C, 3), (RootKind::G, 2), (RootKind::D, 4)] {
            let sys = build_catalog(kind, rank, Multiplicities::default()).unwrap();
            let rays = sys.chamber_rays();
            for (i, w) in rays.iter().enumerate() {
                assert!(sys.in_section(w));
                for (j, a) in sys.simple_roots().iter().enumerate() {
                    let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(a.dot(w), expect);
                }
            }
        }
    }

    #[test]
    fn half_of_the_roots_are_positive() {
        let b3 = build_catalog(RootKind::B, 3, Multiplicities::default()).unwrap();
        assert_eq!(b3.positive_roots().count(), 9);
    }

    #[test]
    fn dominant_representative_lands_in_chamber() {
        let b2 = b2();
        let r2 = Scalar::sqrt(2).unwrap();
        let p = ExactVector::new(vec![Scalar::one(), r2.clone()]);
        let d = b2.dominant_representative(&p);
        assert_eq!(d, ExactVector::new(vec![r2, Scalar::one()]));
        assert_eq!(b2.chamber_membership(&d), ChamberPosition::Interior);
    }

    #[test]
    fn simple_roots_of_stabilizer() {
        let b3 = build_catalog(RootKind::B, 3, Multiplicities::default()).unwrap();
        let j = b3.stabilizer_subsystem(&v(&[1, 0, 0]));
        let mut s = j.simple_roots();
        s.sort_by_key(|r| r.to_string());
        assert_eq!(s, vec![v(&[0, 0, 1]), v(&[0, 1, -1])]);
    }
}
