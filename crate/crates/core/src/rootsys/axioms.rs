use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::reflect;
use crate::exactnum::Scalar;
use crate::linalg::{rank_of, ExactVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "violation")]
pub enum Violation {
    Empty,
    DimensionMismatch { index: usize },
    /// Condition (1): the zero vector is listed as a root.
    ZeroRoot { index: usize },
    DuplicateRoot { first: usize, second: usize },
    /// Condition (2): `−α` missing.
    MissingNegative { index: usize },
    /// Condition (2): a multiple other than `±α` is present.
    ExtraMultiple { index: usize, multiple: usize },
    /// Condition (3): `s_α(β)` is not a root.
    NotReflectionInvariant { reflection: usize, root: usize },
    /// Condition (4): `2(α,β)/(α,α)` is not rational.
    IrrationalCartanInteger { first: usize, second: usize },
    /// `(β,β)/(α,α)` irrational inside one irreducible component.
    IrrationalNormRatio { first: usize, second: usize },
    IrrationalNorm { index: usize },
    MultiplicityCount { roots: usize, multiplicities: usize },
    ZeroMultiplicity { index: usize },
    /// `m(s_α β) ≠ m(β)`; covers negation since `s_β β = −β`.
    MultiplicityNotInvariant { reflection: usize, root: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub rank: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn summary(&self) -> String {
        if self.ok {
            return "ok".to_string();
        }
        let parts: Vec<String> = self.violations.iter().map(|v| format!("{v:?}")).collect();
        parts.join("; ")
    }
}

/// Checks the root-system axioms and the multiplicity data. Violations are
/// collected, not thrown.
pub fn validate_axioms(roots: &[ExactVector], multiplicity: &[u32]) -> AxiomReport {
    let mut violations = Vec::new();
    if roots.is_empty() {
        return AxiomReport { ok: false, rank: 0, violations: vec![Violation::Empty] };
    }
    let dim = roots[0].dim();
    for (i, r) in roots.iter().enumerate() {
        if r.dim() != dim {
            violations.push(Violation::DimensionMismatch { index: i });
        }
    }
    if !violations.is_empty() {
        return AxiomReport { ok: false, rank: 0, violations };
    }
    let rank = rank_of(roots);
    let n = roots.len();
    let position = |v: &ExactVector| roots.iter().position(|r| r == v);

    for (i, r) in roots.iter().enumerate() {
        if r.is_zero() {
            violations.push(Violation::ZeroRoot { index: i });
        }
        if let Some(j) = roots[..i].iter().position(|s| s == r) {
            violations.push(Violation::DuplicateRoot { first: j, second: i });
        }
    }
    let nonzero: Vec<usize> = (0..n).filter(|&i| !roots[i].is_zero()).collect();

    for &i in &nonzero {
        if position(&-&roots[i]).is_none() {
            violations.push(Violation::MissingNegative { index: i });
        }
        for &j in &nonzero {
            if i != j && roots[j] != -&roots[i] && roots[i] != roots[j] && parallel(&roots[i], &roots[j]) {
                violations.push(Violation::ExtraMultiple { index: i, multiple: j });
            }
        }
    }

    for &a in &nonzero {
        let na = roots[a].norm_squared();
        for &b in &nonzero {
            let cartan = Scalar::from_int(2) * roots[a].dot(&roots[b]) / &na;
            if !cartan.is_rational() {
                violations.push(Violation::IrrationalCartanInteger { first: a, second: b });
            }
            if position(&reflect(&roots[b], &roots[a])).is_none() {
                violations.push(Violation::NotReflectionInvariant { reflection: a, root: b });
            }
        }
    }

    // Norm ratios are rational along chains of non-orthogonal roots.
    let component = components(roots, &nonzero);
    for &a in &nonzero {
        let na = roots[a].norm_squared();
        if !na.is_rational() {
            violations.push(Violation::IrrationalNorm { index: a });
        }
        for &b in &nonzero {
            if b > a && component[a] == component[b] {
                let ratio = roots[b].norm_squared() / &na;
                if !ratio.is_rational() {
                    violations.push(Violation::IrrationalNormRatio { first: a, second: b });
                }
            }
        }
    }

    if multiplicity.len() != n {
        violations.push(Violation::MultiplicityCount { roots: n, multiplicities: multiplicity.len() });
    } else {
        for (i, &m) in multiplicity.iter().enumerate() {
            if m == 0 {
                violations.push(Violation::ZeroMultiplicity { index: i });
            }
        }
        for &a in &nonzero {
            for &b in &nonzero {
                if let Some(c) = position(&reflect(&roots[b], &roots[a])) {
                    if multiplicity[c] != multiplicity[b] {
                        violations.push(Violation::MultiplicityNotInvariant { reflection: a, root: b });
                    }
                }
            }
        }
    }

    AxiomReport { ok: violations.is_empty(), rank, violations }
}

fn parallel(u: &ExactVector, v: &ExactVector) -> bool {
    let n = u.dim();
    (0..n).all(|i| (i + 1..n).all(|j| (&u[i] * &v[j] - &u[j] * &v[i]).is_zero()))
}

/// Component label per root index for the graph of non-orthogonal pairs.
fn components(roots: &[ExactVector], nonzero: &[usize]) -> Vec<usize> {
    let mut uf = UnionFind::<usize>::new(roots.len());
    for &a in nonzero {
        for &b in nonzero {
            if a < b && !roots[a].dot(&roots[b]).is_zero() {
                uf.union(a, b);
            }
        }
    }
    uf.into_labeling()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_catalog, Multiplicities, RootKind};

    fn v(xs: &[i64]) -> ExactVector {
        ExactVector::from_ints(xs)
    }

    #[test]
    fn catalog_b2_is_valid() {
        let b2 = build_catalog(RootKind::B, 2, Multiplicities::default()).unwrap();
        let m: Vec<u32> = (0..b2.roots().len()).map(|i| b2.multiplicity_at(i)).collect();
        let report = validate_axioms(b2.roots(), &m);
        assert!(report.ok, "{}", report.summary());
        assert_eq!(report.rank, 2);
    }

    #[test]
    fn deleting_a_root_breaks_conditions_two_and_three() {
        let b2 = build_catalog(RootKind::B, 2, Multiplicities::default()).unwrap();
        let mut roots = b2.roots().to_vec();
        roots.remove(0);
        let report = validate_axioms(&roots, &vec![1; roots.len()]);
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| matches!(v, Violation::MissingNegative { .. })));
        assert!(report.violations.iter().any(|v| matches!(v, Violation::NotReflectionInvariant { .. })));
    }

    #[test]
    fn extra_multiple_is_rejected() {
        let roots = vec![v(&[1, 0]), v(&[-1, 0]), v(&[3, 0]), v(&[-3, 0])];
        let report = validate_axioms(&roots, &[1, 1, 1, 1]);
        assert!(report.violations.iter().any(|v| matches!(v, Violation::ExtraMultiple { .. })));
    }

    #[test]
    fn irrational_angle_is_rejected() {
        let r2 = Scalar::sqrt(2).unwrap();
        let a = v(&[1, 0]);
        let b = ExactVector::new(vec![r2, Scalar::one()]);
        let roots = vec![a.clone(), -&a, b.clone(), -&b];
        let report = validate_axioms(&roots, &[1, 1, 1, 1]);
        assert!(report.violations.iter().any(|v| matches!(v, Violation::IrrationalCartanInteger { .. })));
    }

    #[test]
    fn multiplicities_must_be_weyl_invariant() {
        let b2 = build_catalog(RootKind::B, 2, Multiplicities::default()).unwrap();
        let mut m = vec![1; b2.roots().len()];
        m[0] = 2;
        let report = validate_axioms(b2.roots(), &m);
        assert!(report.violations.iter().any(|v| matches!(v, Violation::MultiplicityNotInvariant { .. })));
    }
}
