//! Compact-type and Lie-triple decisions for families of commuting symmetric
//! operators.
//!
//! A commuting family is recorded by its eigenvalue functionals: one row per
//! basis vector `ξᵢ`, one column per common eigenspace. The exponential of the
//! family (times `i`) is a closed torus exactly when the row space is defined
//! over Q. Over Q(√d) that is Galois descent: the row space must be stable
//! under `√d ↦ −√d`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::{rank_of, ExactMatrix, ExactVector};

/// Eigenvalue functionals of a commuting family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenFamily {
    pub basis: Vec<ExactVector>,
    /// `rows[i][k]` is the eigenvalue of the operator for `basis[i]` on the
    /// `k`-th common eigenspace.
    pub rows: Vec<Vec<Scalar>>,
    pub multiplicities: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "vectors")]
pub enum Certificate {
    /// Rational eigenvalue vectors spanning the same space as the family.
    Witness(Vec<ExactVector>),
    /// An eigenvalue row whose Galois conjugate leaves the span.
    Obstruction(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactTypeVerdict {
    pub compact: bool,
    pub certificate: Certificate,
}

fn rational_parts(row: &[Scalar]) -> (ExactVector, ExactVector) {
    let a = row.iter().map(|x| Scalar::from_rational(x.rational_part().clone())).collect();
    let b = row.iter().map(|x| Scalar::from_rational(x.irrational_part().clone())).collect();
    (ExactVector::new(a), ExactVector::new(b))
}

/// Decides whether the span of the eigenvalue rows has a basis of rational
/// vectors (each row is then rational up to one common scalar per basis
/// element).
pub fn is_compact_type(family: &EigenFamily) -> Result<CompactTypeVerdict> {
    let width = family.multiplicities.len();
    if let Some(bad) = family.rows.iter().find(|r| r.len() != width) {
        return Err(Error::DimensionMismatch { left: width, right: bad.len() });
    }
    let rows: Vec<ExactVector> = family.rows.iter().map(|r| ExactVector::new(r.clone())).collect();
    let r = rank_of(&rows);
    for row in &rows {
        if row.is_rational() {
            continue;
        }
        let mut with_conjugate = rows.clone();
        with_conjugate.push(row.conjugate());
        if rank_of(&with_conjugate) > r {
            return Ok(CompactTypeVerdict { compact: false, certificate: Certificate::Obstruction(row.entries().to_vec()) });
        }
    }
    // Stable under conjugation: the rational and √d parts of each row lie in the span.
    let mut witness: Vec<ExactVector> = Vec::new();
    for row in &rows {
        let (a, b) = rational_parts(row.entries());
        for cand in [a, b] {
            if cand.is_zero() {
                continue;
            }
            let mut trial = witness.clone();
            trial.push(cand);
            if rank_of(&trial) > witness.len() {
                witness = trial;
            }
        }
    }
    if witness.len() != r {
        return Err(Error::Internal("rational witness does not span the family".into()));
    }
    Ok(CompactTypeVerdict { compact: true, certificate: Certificate::Witness(witness) })
}

/// True iff `[[X, Y], Z]` lies in `span(S)` for all basis triples.
pub fn is_lie_triple(family: &[ExactMatrix]) -> Result<bool> {
    let Some(first) = family.first() else {
        return Ok(true);
    };
    let (n, m) = (first.nrows(), first.ncols());
    if let Some(bad) = family.iter().find(|x| (x.nrows(), x.ncols()) != (n, m)) {
        return Err(Error::DimensionMismatch { left: n * m, right: bad.nrows() * bad.ncols() });
    }
    let mut basis: Vec<ExactMatrix> = Vec::new();
    let mut flat: Vec<ExactVector> = Vec::new();
    for x in family {
        let mut trial = flat.clone();
        trial.push(x.flatten());
        if rank_of(&trial) > flat.len() {
            flat = trial;
            basis.push(x.clone());
        }
    }
    let r = flat.len();
    for x in &basis {
        for y in &basis {
            let xy = x.commutator(y)?;
            if xy.is_zero() {
                continue;
            }
            for z in &basis {
                let t = xy.commutator(z)?;
                if t.is_zero() {
                    continue;
                }
                let mut trial = flat.clone();
                trial.push(t.flatten());
                if rank_of(&trial) > r {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn single(row: &[&str]) -> EigenFamily {
        EigenFamily {
            basis: vec![ExactVector::from_ints(&[1])],
            rows: vec![row.iter().map(|t| s(t)).collect()],
            multiplicities: vec![1; row.len()],
        }
    }

    #[test]
    fn single_generator_examples() {
        assert!(is_compact_type(&single(&["1", "0", "-1"])).unwrap().compact);
        let v = is_compact_type(&single(&["1", "sqrt(2)", "-1-sqrt(2)"])).unwrap();
        assert!(!v.compact);
        assert!(matches!(v.certificate, Certificate::Obstruction(_)));
        // An irrational multiple of a rational row is still compact.
        let v = is_compact_type(&single(&["sqrt(2)", "0", "-sqrt(2)"])).unwrap();
        assert!(v.compact);
        assert_eq!(v.certificate, Certificate::Witness(vec![ExactVector::from_ints(&[1, 0, -1])]));
    }

    #[test]
    fn conjugate_pair_spans_a_rational_plane() {
        // Rows v and σ(v) together span a rational 2-plane.
        let fam = EigenFamily {
            basis: vec![ExactVector::from_ints(&[1, 0]), ExactVector::from_ints(&[0, 1])],
            rows: vec![
                vec![s("1+sqrt(2)"), s("1"), s("-2-sqrt(2)")],
                vec![s("1-sqrt(2)"), s("1"), s("-2+sqrt(2)")],
            ],
            multiplicities: vec![1, 1, 1],
        };
        assert!(is_compact_type(&fam).unwrap().compact);
    }

    #[test]
    fn lie_triple_examples() {
        let a = ExactMatrix::diagonal(&[s("1"), s("-1"), s("0")]);
        let b = ExactMatrix::sym_unit(3, 0, 1);
        let c = ExactMatrix::sym_unit(3, 0, 2);
        let d = ExactMatrix::diagonal(&[s("2"), s("0"), s("-2")]);
        assert!(is_lie_triple(&[a.clone(), d]).unwrap());
        assert!(is_lie_triple(&[a.clone(), b.clone()]).unwrap());
        assert!(!is_lie_triple(&[a, b, c]).unwrap());
        assert!(is_lie_triple(&[]).unwrap());
    }

    #[test]
    fn double_brackets_of_the_two_dimensional_example() {
        let a = ExactMatrix::diagonal(&[s("1"), s("-1"), s("0")]);
        let b = ExactMatrix::sym_unit(3, 0, 1);
        let ab = a.commutator(&b).unwrap();
        assert_eq!(ab.commutator(&a).unwrap(), b.scale(&s("-4")));
        assert_eq!(ab.commutator(&b).unwrap(), a.scale(&s("4")));
    }
}
