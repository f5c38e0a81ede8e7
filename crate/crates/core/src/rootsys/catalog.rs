use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::RootSystem;
use crate::error::{Error, Result};
use crate::linalg::ExactVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootKind {
    A,
    B,
    C,
    D,
    G,
}

impl RootKind {
    pub fn letter(self) -> char {
        match self {
            RootKind::A => 'A',
            RootKind::B => 'B',
            RootKind::C => 'C',
            RootKind::D => 'D',
            RootKind::G => 'G',
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, RootKind::A | RootKind::D)
    }
}

impl FromStr for RootKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(RootKind::A),
            "B" | "b" => Ok(RootKind::B),
            "C" | "c" => Ok(RootKind::C),
            "D" | "d" => Ok(RootKind::D),
            "G" | "g" => Ok(RootKind::G),
            other => Err(Error::Catalog(format!("unknown root system type {other:?}"))),
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Root-space dimensions per root length. Simply-laced systems have a single
/// length, so the two values must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multiplicities {
    pub short: u32,
    pub long: u32,
}

impl Default for Multiplicities {
    fn default() -> Self {
        Multiplicities { short: 1, long: 1 }
    }
}

impl Multiplicities {
    pub fn new(short: u32, long: u32) -> Self {
        Multiplicities { short, long }
    }

    pub fn uniform(m: u32) -> Self {
        Multiplicities { short: m, long: m }
    }
}

fn e(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn combo(n: usize, i: usize, si: i64, j: usize, sj: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += si;
    v[j] += sj;
    v
}

/// Positive roots and simple roots of the standard rational realization.
fn realization(kind: RootKind, rank: usize) -> (usize, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = rank;
    let pairs = |m: usize| (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)));
    match kind {
        RootKind::A => {
            let m = n + 1;
            let pos = pairs(m).map(|(i, j)| combo(m, i, 1, j, -1)).collect();
            let simple = (0..n).map(|i| combo(m, i, 1, i + 1, -1)).collect();
            (m, pos, simple)
        }
        RootKind::B | RootKind::C | RootKind::D => {
            let mut pos: Vec<Vec<i64>> = pairs(n).map(|(i, j)| combo(n, i, 1, j, -1)).collect();
            pos.extend(pairs(n).map(|(i, j)| combo(n, i, 1, j, 1)));
            let scale = if kind == RootKind::C { 2 } else { 1 };
            if kind != RootKind::D {
                pos.extend((0..n).map(|i| e(n, i).into_iter().map(|x| x * scale).collect()));
            }
            let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| combo(n, i, 1, i + 1, -1)).collect();
            simple.push(match kind {
                RootKind::D => combo(n, n - 2, 1, n - 1, 1),
                _ => e(n, n - 1).into_iter().map(|x| x * scale).collect(),
            });
            (n, pos, simple)
        }
        RootKind::G => {
            let pos = vec![
                vec![1, -1, 0],
                vec![-2, 1, 1],
                vec![-1, 0, 1],
                vec![0, -1, 1],
                vec![1, -2, 1],
                vec![-1, -1, 2],
            ];
            let simple = vec![vec![1, -1, 0], vec![-2, 1, 1]];
            (3, pos, simple)
        }
    }
}

fn legal(kind: RootKind, rank: usize) -> bool {
    match kind {
        RootKind::G => rank == 2,
        _ => (2..=4).contains(&rank),
    }
}

pub fn default_label(kind: RootKind, rank: usize, mult: Multiplicities) -> String {
    if mult == Multiplicities::default() {
        format!("{kind}{rank}")
    } else if kind.is_simply_laced() {
        format!("{kind}{rank}[{}]", mult.short)
    } else {
        format!("{kind}{rank}[{},{}]", mult.short, mult.long)
    }
}

/// Standard realization of `kind` in rank `rank` with the given multiplicities.
///
/// `A_n` and `G₂` live in the sum-zero hyperplane of `R^{n+1}` (resp. `R³`),
/// the classical `B/C/D_n` in `R^n`. Simple roots: `eᵢ − eᵢ₊₁` followed by
/// `eₙ` (B), `2eₙ` (C), `eₙ₋₁ + eₙ` (D); for `G₂`, `(1,−1,0)` and `(−2,1,1)`.
pub fn build_catalog(kind: RootKind, rank: usize, mult: Multiplicities) -> Result<RootSystem> {
    if !legal(kind, rank) {
        return Err(Error::IllegalSystem { kind: kind.letter(), rank });
    }
    if kind.is_simply_laced() && mult.short != mult.long {
        return Err(Error::InconsistentMultiplicities(format!(
            "{kind}{rank} has one root length but multiplicities ({}, {}) differ",
            mult.short, mult.long
        )));
    }
    if mult.short == 0 || mult.long == 0 {
        return Err(Error::InconsistentMultiplicities("multiplicities must be positive".into()));
    }
    let (_, pos, simple) = realization(kind, rank);
    let mut roots: Vec<ExactVector> = pos.iter().map(|r| ExactVector::from_ints(r)).collect();
    roots.extend(pos.iter().map(|r| -&ExactVector::from_ints(r)));
    let min_norm = roots.iter().map(ExactVector::norm_squared).min().expect("nonempty");
    let multiplicity = roots
        .iter()
        .map(|r| if r.norm_squared() == min_norm { mult.short } else { mult.long })
        .collect();
    let simple = simple.iter().map(|r| ExactVector::from_ints(r)).collect();
    RootSystem::new(default_label(kind, rank, mult), roots, multiplicity, simple)
}

/// Parses labels such as `B2`, `A3`, `B3[2,1]` or `A2[2]`.
pub fn parse_label(label: &str) -> Result<RootSystem> {
    let bad = || Error::Catalog(format!("cannot parse system label {label:?}"));
    let label = label.trim();
    let (head, mults) = match label.split_once('[') {
        Some((h, rest)) => (h, Some(rest.strip_suffix(']').ok_or_else(bad)?)),
        None => (label, None),
    };
    let mut chars = head.chars();
    let kind: RootKind = chars.next().ok_or_else(bad)?.to_string().parse()?;
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    let mult = match mults {
        None => Multiplicities::default(),
        Some(m) => {
            let parts: Vec<u32> = m.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
            match parts[..] {
                [u] => Multiplicities::uniform(u),
                [s, l] => Multiplicities::new(s, l),
                _ => return Err(bad()),
            }
        }
    };
    build_catalog(kind, rank, mult)
}
