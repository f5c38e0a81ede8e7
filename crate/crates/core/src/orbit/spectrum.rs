use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::error::Result;
use crate::exactnum::Scalar;
use crate::linalg::{ExactMatrix, ExactVector};

/// Multiset of exact eigenvalues, stored as distinct values in decreasing
/// order with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    entries: Vec<(Scalar, u32)>,
}

impl Spectrum {
    /// Merges repeated values and drops zero multiplicities.
    pub fn from_pairs<I: IntoIterator<Item = (Scalar, u32)>>(pairs: I) -> Self {
        let mut entries: Vec<(Scalar, u32)> = Vec::new();
        for (value, m) in pairs {
            if m == 0 {
                continue;
            }
            match entries.iter_mut().find(|(v, _)| *v == value) {
                Some((_, k)) => *k += m,
                None => entries.push((value, m)),
            }
        }
        entries.sort_by(|a, b| b.0.cmp(&a.0));
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[(Scalar, u32)] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, value: &Scalar) -> u32 {
        self.entries.iter().find(|(v, _)| v == value).map_or(0, |(_, m)| *m)
    }

    /// `Σ mᵢλᵢ`, the trace of the operator.
    pub fn weighted_sum(&self) -> Scalar {
        self.entries.iter().map(|(v, m)| v * &Scalar::from_int(i64::from(*m))).sum()
    }

    /// Shift by `−(1/n)·trace`, the spectrum of the traceless part.
    pub fn traceless(&self) -> Spectrum {
        let n = self.total();
        if n == 0 {
            return self.clone();
        }
        let shift = self.weighted_sum() / Scalar::from_int(i64::from(n));
        Spectrum::from_pairs(self.entries.iter().map(|(v, m)| (v - &shift, *m)))
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_rational())
    }

    /// First eigenvalue outside Q, if any.
    pub fn first_irrational(&self) -> Option<&Scalar> {
        self.entries.iter().map(|(v, _)| v).find(|v| !v.is_rational())
    }

    /// Least common denominator of a rational spectrum.
    pub fn denominator_lcm(&self) -> Option<BigInt> {
        self.is_rational().then(|| self.entries.iter().fold(BigInt::one(), |acc, (v, _)| acc.lcm(&v.denominator_lcm())))
    }

    /// Eigenvalues repeated by multiplicity, decreasing.
    pub fn expanded(&self) -> Vec<Scalar> {
        self.entries.iter().flat_map(|(v, m)| std::iter::repeat_n(v.clone(), *m as usize)).collect()
    }

    /// Diagonal matrix with this spectrum.
    pub fn diagonal_matrix(&self) -> ExactMatrix {
        ExactMatrix::diagonal(&self.expanded())
    }

    /// Spectral image under `λ ↦ λ/(1−λ)`, the tube-formula transform of
    /// `A(I − A)⁻¹`. An eigenvalue 1 marks a focal point.
    pub fn tube_transform(&self) -> std::result::Result<Spectrum, Focal> {
        let one = Scalar::one();
        if let Some((_, m)) = self.entries.iter().find(|(v, _)| *v == one) {
            return Err(Focal { multiplicity: *m, roots: Vec::new() });
        }
        Ok(Spectrum::from_pairs(self.entries.iter().map(|(v, m)| (v / &(&one - v), *m))))
    }

    pub fn to_f64(&self) -> Vec<(f64, u32)> {
        self.entries.iter().map(|(v, m)| (v.to_f64(), *m)).collect()
    }
}

/// Eigenvalue 1 encountered by the tube transform.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Focal {
    pub multiplicity: u32,
    /// Roots whose eigenvalue is 1, when known.
    pub roots: Vec<ExactVector>,
}

impl fmt::Display for Focal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "focal eigenvalue 1 with multiplicity {}", self.multiplicity)?;
        if !self.roots.is_empty() {
            let roots: Vec<String> = self.roots.iter().map(ToString::to_string).collect();
            write!(f, " from roots {}", roots.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(v, m)| format!("{v}:x{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Serialized as `[["1",1],["0",1],["-1",1]]`.
impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (v, m) in &self.entries {
            seq.serialize_element(&(v.to_string(), m))?;
        }
        seq.end()
    }
}

pub(crate) fn check_total(s: &Spectrum, n: u32) -> Result<()> {
    if s.total() != n {
        return Err(crate::error::Error::Internal(format!("spectrum total {} differs from dimension {n}", s.total())));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    #[test]
    fn merging_and_order() {
        let s = Spectrum::from_pairs([(q(-1, 1), 1), (q(1, 1), 2), (q(-1, 1), 2), (q(0, 1), 0)]);
        assert_eq!(s.entries(), &[(q(1, 1), 2), (q(-1, 1), 3)]);
        assert_eq!(s.total(), 5);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"[["1",2],["-1",3]]"#);
    }

    #[test]
    fn tube_examples() {
        let zeros = Spectrum::from_pairs([(q(0, 1), 4)]);
        assert_eq!(zeros.tube_transform().unwrap(), zeros);
        let half = Spectrum::from_pairs([(q(1, 2), 1)]);
        assert_eq!(half.tube_transform().unwrap(), Spectrum::from_pairs([(q(1, 1), 1)]));
        let s = Spectrum::from_pairs([(q(-1, 1), 3), (q(0, 1), 1)]);
        assert_eq!(s.tube_transform().unwrap(), Spectrum::from_pairs([(q(-1, 2), 3), (q(0, 1), 1)]));
        let focal = Spectrum::from_pairs([(q(1, 1), 2), (q(0, 1), 1)]);
        assert_eq!(focal.tube_transform().unwrap_err().multiplicity, 2);
    }

    #[test]
    fn traceless_shift() {
        let s = Spectrum::from_pairs([(q(2, 1), 1), (q(0, 1), 2)]);
        let t = s.traceless();
        assert!(t.weighted_sum().is_zero());
        assert_eq!(t.entries(), &[(q(4, 3), 1), (q(-2, 3), 2)]);
    }
}
