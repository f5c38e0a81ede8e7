use std::collections::{HashMap, HashSet, VecDeque};

use super::{reflect, reflection_matrix, RootSystem};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, ExactVector};

/// Largest rank for which the Weyl group is enumerated element by element.
pub const MAX_ENUMERATION_RANK: usize = 4;

/// An element of the Weyl group: its matrix in ambient coordinates and a
/// shortest word in the simple reflections (indices into the simple roots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: ExactMatrix,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement { matrix: ExactMatrix::identity(dim), word: Vec::new() }
    }

    pub fn apply(&self, v: &ExactVector) -> ExactVector {
        self.matrix.mul_vec(v).expect("Weyl element and vector share the ambient dimension")
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl RootSystem {
    fn check_enumerable(&self) -> Result<()> {
        if self.rank() > MAX_ENUMERATION_RANK {
            return Err(Error::RankTooLarge(self.rank()));
        }
        Ok(())
    }

    /// All group elements, breadth-first from the identity, so words are
    /// shortest and the order is deterministic.
    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        self.check_enumerable()?;
        let gens: Vec<ExactMatrix> = self.simple_roots().iter().map(reflection_matrix).collect();
        let id = WeylElement::identity(self.ambient_dim());
        let mut seen: HashMap<ExactMatrix, usize> = HashMap::new();
        seen.insert(id.matrix.clone(), 0);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (g, s) in gens.iter().enumerate() {
                let m = s.checked_mul(&elements[k].matrix)?;
                if seen.contains_key(&m) {
                    continue;
                }
                let mut word = vec![g];
                word.extend_from_slice(&elements[k].word);
                seen.insert(m.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(WeylElement { matrix: m, word });
            }
        }
        Ok(elements)
    }

    pub fn weyl_group_order(&self) -> Result<usize> {
        self.weyl_group().map(|g| g.len())
    }

    /// Orbit of `p` under all root reflections, in discovery order.
    pub fn weyl_orbit(&self, p: &ExactVector) -> Vec<ExactVector> {
        let mut seen: HashSet<ExactVector> = HashSet::from([p.clone()]);
        let mut orbit = vec![p.clone()];
        let mut k = 0;
        while k < orbit.len() {
            for a in self.simple_roots() {
                let y = reflect(&orbit[k], a);
                if seen.insert(y.clone()) {
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit
    }

    /// Weyl elements fixing `p`.
    pub fn stabilizer_elements(&self, p: &ExactVector) -> Result<Vec<WeylElement>> {
        Ok(self.weyl_group()?.into_iter().filter(|g| g.apply(p) == *p).collect())
    }

    /// True if the element maps the root set onto itself with multiplicities.
    pub fn preserves_roots(&self, g: &WeylElement) -> bool {
        self.roots().iter().enumerate().all(|(i, r)| {
            let image = g.apply(r);
            self.multiplicity(&image) == Some(self.multiplicity_at(i))
        })
    }
}
