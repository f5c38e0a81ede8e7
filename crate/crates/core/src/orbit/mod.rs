//! Isotropy orbits `K·p` of an s-representation, described by restricted root
//! data.
//!
//! The shape operators of `K·p` at `p` in directions `ξ` of the section commute
//! and share the eigenspaces of the positive roots `α` with `(α, p) ≠ 0`. On
//! the root space of `α` (dimension `m_α`) the eigenvalue is `(η_α, ξ)` with
//! curvature normal `η_α = −α/(p, α)`. Spectra are assembled from this data
//! directly; no numeric eigensolver is involved.

mod compact;
mod spectrum;

use std::sync::Arc;

use serde::Serialize;

pub use compact::{is_compact_type, is_lie_triple, Certificate, CompactTypeVerdict, EigenFamily};
pub use spectrum::{Focal, Spectrum};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::lattice::RootLattice;
use crate::linalg::{rank_of, ExactMatrix, ExactVector};
use crate::rootsys::{ChamberPosition, RootSystem, Subsystem, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitType {
    Principal,
    Singular,
    MostSingular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "component")]
pub enum SectionKind {
    /// A maximal abelian subspace; the section of a principal orbit.
    FullMaximalAbelian,
    /// `W = span(J)`, a section of the normal holonomy.
    HolonomySection,
    /// Span of one irreducible component of `J`.
    FactorSection(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub kind: SectionKind,
    pub basis: Vec<ExactVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolonomySections {
    /// Set for principal orbits, which have no holonomy section; `sections`
    /// then holds the maximal abelian section instead.
    pub principal: bool,
    pub sections: Vec<Section>,
}

/// One active root with its eigenvalue in a fixed direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEigenvalue {
    pub root: ExactVector,
    pub value: Scalar,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Witness {
    Rational {
        /// `a` with `a·p` in the root lattice (1 when no lattice ray was used).
        scale: Scalar,
        basis: Vec<ExactVector>,
        spectra: Vec<Spectrum>,
    },
    Failure {
        basis: Vec<ExactVector>,
        index: usize,
        spectrum: Spectrum,
        eigenvalue: Scalar,
    },
}

impl Witness {
    pub fn is_rational(&self) -> bool {
        matches!(self, Witness::Rational { .. })
    }
}

#[derive(Clone, Debug)]
pub struct IsotropyOrbit {
    system: Arc<RootSystem>,
    p: ExactVector,
    stabilizer: Subsystem,
    /// Indices of positive roots not orthogonal to `p`, with `(p, α)`.
    active: Vec<(usize, Scalar)>,
}

impl IsotropyOrbit {
    /// Orbit through `p`, which must be nonzero, in the section and in the
    /// closed fundamental chamber.
    pub fn new(system: Arc<RootSystem>, p: ExactVector) -> Result<Self> {
        if p.dim() != system.ambient_dim() {
            return Err(Error::DimensionMismatch { left: system.ambient_dim(), right: p.dim() });
        }
        if p.is_zero() {
            return Err(Error::ZeroPoint);
        }
        if !system.in_section(&p) {
            return Err(Error::NotInSection);
        }
        if system.chamber_membership(&p) == ChamberPosition::Outside {
            return Err(Error::OutsideChamber(p.to_string()));
        }
        let stabilizer = system.stabilizer_subsystem(&p);
        let active = system
            .positive_roots()
            .filter_map(|(i, a)| {
                let c = a.dot(&p);
                (!c.is_zero()).then_some((i, c))
            })
            .collect();
        Ok(IsotropyOrbit { system, p, stabilizer, active })
    }

    /// The same orbit, entered through its point in the closed chamber.
    pub fn through(system: Arc<RootSystem>, p: &ExactVector) -> Result<Self> {
        if p.dim() != system.ambient_dim() {
            return Err(Error::DimensionMismatch { left: system.ambient_dim(), right: p.dim() });
        }
        let dominant = system.dominant_representative(p);
        Self::new(system, dominant)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn point(&self) -> &ExactVector {
        &self.p
    }

    pub fn stabilizer(&self) -> &Subsystem {
        &self.stabilizer
    }

    pub fn active_roots(&self) -> impl Iterator<Item = &ExactVector> {
        self.active.iter().map(|(i, _)| &self.system.roots()[*i])
    }

    /// Dimension `n = Σ m_α` over active roots.
    pub fn dimension(&self) -> u32 {
        self.active.iter().map(|(i, _)| self.system.multiplicity_at(*i)).sum()
    }

    pub fn classify(&self) -> OrbitType {
        if self.stabilizer.is_empty() {
            OrbitType::Principal
        } else if self.stabilizer.span_dim() + 1 == self.system.rank() {
            OrbitType::MostSingular
        } else {
            OrbitType::Singular
        }
    }

    /// `(α, η_α)` with `η_α = −α/(p, α)` for each active root.
    pub fn curvature_normals(&self) -> Vec<(ExactVector, ExactVector)> {
        self.active
            .iter()
            .map(|(i, c)| {
                let a = &self.system.roots()[*i];
                (a.clone(), a.scale(&(-(Scalar::one() / c))))
            })
            .collect()
    }

    fn check_normal(&self, xi: &ExactVector) -> Result<()> {
        if xi.dim() != self.system.ambient_dim() {
            return Err(Error::DimensionMismatch { left: self.system.ambient_dim(), right: xi.dim() });
        }
        if !self.system.in_section(xi) {
            return Err(Error::NotInSection);
        }
        Ok(())
    }

    /// Per-root eigenvalues `−(α, ξ)/(p, α)` of the shape operator `A_ξ`.
    pub fn root_eigenvalues(&self, xi: &ExactVector) -> Result<Vec<RootEigenvalue>> {
        self.check_normal(xi)?;
        Ok(self
            .active
            .iter()
            .map(|(i, c)| {
                let a = &self.system.roots()[*i];
                RootEigenvalue { root: a.clone(), value: -(a.dot(xi) / c), multiplicity: self.system.multiplicity_at(*i) }
            })
            .collect())
    }

    pub fn shape_spectrum(&self, xi: &ExactVector) -> Result<Spectrum> {
        let s = Spectrum::from_pairs(self.root_eigenvalues(xi)?.into_iter().map(|e| (e.value, e.multiplicity)));
        spectrum::check_total(&s, self.dimension())?;
        Ok(s)
    }

    /// Spectrum of `A_ξ − (1/n)·trace(A_ξ)·Id`.
    pub fn traceless_spectrum(&self, xi: &ExactVector) -> Result<Spectrum> {
        Ok(self.shape_spectrum(xi)?.traceless())
    }

    /// `H = Σ m_α η_α`, so that `trace(A_ξ) = (H, ξ)`.
    pub fn mean_curvature_normal(&self) -> ExactVector {
        self.curvature_normals()
            .iter()
            .zip(&self.active)
            .fold(ExactVector::zeros(self.system.ambient_dim()), |acc, ((_, eta), (i, _))| {
                acc.axpy(&Scalar::from_int(i64::from(self.system.multiplicity_at(*i))), eta)
            })
    }

    /// Shape operator in a model basis adapted to the root spaces: block
    /// diagonal with `λ_α(ξ)·I_{m_α}` per active root, in root order.
    pub fn shape_operator_matrix(&self, xi: &ExactVector) -> Result<ExactMatrix> {
        let diag: Vec<Scalar> = self
            .root_eigenvalues(xi)?
            .into_iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity as usize))
            .collect();
        Ok(ExactMatrix::diagonal(&diag))
    }

    /// Tube-formula transform of `A_ξ`; a focal eigenvalue reports its roots.
    pub fn tube_transform(&self, xi: &ExactVector) -> Result<std::result::Result<Spectrum, Focal>> {
        let per_root = self.root_eigenvalues(xi)?;
        let spectrum = Spectrum::from_pairs(per_root.iter().map(|e| (e.value.clone(), e.multiplicity)));
        Ok(spectrum.tube_transform().map_err(|mut f| {
            f.roots = per_root.into_iter().filter(|e| e.value.is_one()).map(|e| e.root).collect();
            f
        }))
    }

    /// Sections of the normal holonomy: `W = span(J)` and one factor section
    /// per irreducible component of `J`. Principal orbits are flagged and get
    /// the maximal abelian section.
    pub fn holonomy_sections(&self) -> HolonomySections {
        if self.stabilizer.is_empty() {
            return HolonomySections {
                principal: true,
                sections: vec![Section { kind: SectionKind::FullMaximalAbelian, basis: self.system.simple_roots().to_vec() }],
            };
        }
        let mut sections = vec![Section { kind: SectionKind::HolonomySection, basis: ordered(self.stabilizer.simple_roots(), &self.system) }];
        for (k, comp) in self.stabilizer.irreducible_components().iter().enumerate() {
            sections.push(Section { kind: SectionKind::FactorSection(k), basis: ordered(comp.simple_roots(), &self.system) });
        }
        HolonomySections { principal: false, sections }
    }

    /// Basis of `section` whose traceless shape operators have rational
    /// eigenvalues. With `γ = a·p` in the root lattice the basis is `β/a` for
    /// the section's simple roots `β`: then `−(α, β/a)/(p, α) = −(α, β)/(γ, α)`.
    pub fn rational_witness_basis(&self, section: &Section) -> Result<Witness> {
        let lattice = RootLattice::of_roots(&self.system);
        let (scale, basis) = match lattice.lattice_point_on_line(&self.p) {
            Ok(ray) => {
                let inv = Scalar::one() / &ray.scale;
                (ray.scale, section.basis.iter().map(|b| b.scale(&inv)).collect::<Vec<_>>())
            }
            Err(Error::NoLatticePoint(_)) => (Scalar::one(), section.basis.clone()),
            Err(e) => return Err(e),
        };
        let mut spectra = Vec::with_capacity(basis.len());
        for (index, xi) in basis.iter().enumerate() {
            let spectrum = self.traceless_spectrum(xi)?;
            if let Some(eigenvalue) = spectrum.first_irrational().cloned() {
                return Ok(Witness::Failure { basis, index, spectrum, eigenvalue });
            }
            spectra.push(spectrum);
        }
        Ok(Witness::Rational { scale, basis, spectra })
    }

    /// Eigenvalue functionals of the traceless family over `basis`, one column
    /// per active root.
    pub fn traceless_family(&self, basis: &[ExactVector]) -> Result<EigenFamily> {
        let n = Scalar::from_int(i64::from(self.dimension()));
        let mut rows = Vec::with_capacity(basis.len());
        for xi in basis {
            let per_root = self.root_eigenvalues(xi)?;
            let trace: Scalar = per_root.iter().map(|e| &e.value * &Scalar::from_int(i64::from(e.multiplicity))).sum();
            let mean = trace / &n;
            rows.push(per_root.iter().map(|e| &e.value - &mean).collect());
        }
        let multiplicities = self.active.iter().map(|(i, _)| self.system.multiplicity_at(*i)).collect();
        Ok(EigenFamily { basis: basis.to_vec(), rows, multiplicities })
    }

    /// Compact-type decision for the traceless shape operators over a section.
    pub fn section_compact_type(&self, section: &Section) -> Result<CompactTypeVerdict> {
        is_compact_type(&self.traceless_family(&section.basis)?)
    }

    /// Checks that `ξ` and `g·ξ` have equal spectra for a Weyl element `g`
    /// fixing `p`.
    pub fn eigenvalue_invariance_check(&self, xi: &ExactVector, g: &WeylElement) -> Result<bool> {
        if g.apply(&self.p) != self.p {
            return Err(Error::DoesNotFixPoint);
        }
        Ok(self.shape_spectrum(xi)? == self.shape_spectrum(&g.apply(xi))?)
    }
}

/// Sorts section basis vectors by their position in the parent's root list.
fn ordered(mut basis: Vec<ExactVector>, system: &RootSystem) -> Vec<ExactVector> {
    basis.sort_by_key(|b| system.index_of(b));
    basis
}

/// Dimension of the span of a section basis.
pub fn section_dim(section: &Section) -> usize {
    rank_of(&section.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_catalog, Multiplicities, RootKind};

    fn v(xs: &[i64]) -> ExactVector {
        ExactVector::from_ints(xs)
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn orbit(kind: RootKind, rank: usize, mult: Multiplicities, p: &[i64]) -> IsotropyOrbit {
        let sys = Arc::new(build_catalog(kind, rank, mult).unwrap());
        IsotropyOrbit::new(sys, v(p)).unwrap()
    }

    fn spec(pairs: &[(i64, u32)]) -> Spectrum {
        Spectrum::from_pairs(pairs.iter().map(|&(x, m)| (Scalar::from_int(x), m)))
    }

    #[test]
    fn classification_examples() {
        let m = Multiplicities::default();
        assert_eq!(orbit(RootKind::B, 2, m, &[2, 1]).classify(), OrbitType::Principal);
        assert_eq!(orbit(RootKind::B, 2, m, &[1, 0]).classify(), OrbitType::MostSingular);
        assert_eq!(orbit(RootKind::B, 3, m, &[1, 1, 0]).classify(), OrbitType::MostSingular);
        assert_eq!(orbit(RootKind::B, 3, m, &[2, 1, 0]).classify(), OrbitType::Singular);
    }

    #[test]
    fn zero_and_outside_points_are_rejected() {
        let sys = Arc::new(build_catalog(RootKind::B, 2, Multiplicities::default()).unwrap());
        assert!(matches!(IsotropyOrbit::new(sys.clone(), v(&[0, 0])), Err(Error::ZeroPoint)));
        assert!(matches!(IsotropyOrbit::new(sys.clone(), v(&[-1, 0])), Err(Error::OutsideChamber(_))));
        let o = IsotropyOrbit::through(sys, &v(&[-1, 0])).unwrap();
        assert_eq!(o.point(), &v(&[1, 0]));
    }

    #[test]
    fn shape_spectrum_examples() {
        let m = Multiplicities::default();
        let b2 = orbit(RootKind::B, 2, m, &[1, 0]);
        assert_eq!(b2.shape_spectrum(&v(&[0, 1])).unwrap(), spec(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(b2.shape_spectrum(&v(&[1, 0])).unwrap(), spec(&[(-1, 3)]));
        let b3 = orbit(RootKind::B, 3, m, &[1, 1, 0]);
        assert_eq!(b3.dimension(), 7);
        assert_eq!(b3.shape_spectrum(&v(&[1, -1, 0])).unwrap(), spec(&[(1, 3), (0, 1), (-1, 3)]));
        let a2 = orbit(RootKind::A, 2, m, &[1, 0, -1]);
        assert!(matches!(a2.shape_spectrum(&v(&[1, 0, 0])), Err(Error::NotInSection)));
    }

    #[test]
    fn traceless_examples() {
        let m = Multiplicities::default();
        let b2 = orbit(RootKind::B, 2, m, &[1, 0]);
        assert_eq!(b2.traceless_spectrum(&v(&[1, 0])).unwrap(), spec(&[(0, 3)]));
        assert_eq!(b2.traceless_spectrum(&v(&[0, 1])).unwrap(), spec(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn traceless_with_multiplicities_matches_enumeration() {
        // Oracle: enumerate positive roots of B₂ by hand with (m_short, m_long) = (2, 1).
        let b2 = orbit(RootKind::B, 2, Multiplicities::new(2, 1), &[1, 0]);
        let xi = v(&[0, 1]);
        let p = v(&[1, 0]);
        let by_hand: Vec<(ExactVector, u32)> = vec![(v(&[1, -1]), 1), (v(&[1, 0]), 2), (v(&[1, 1]), 1)];
        let raw: Vec<(Scalar, u32)> = by_hand.iter().map(|(a, m)| (-(a.dot(&xi) / a.dot(&p)), *m)).collect();
        let n: u32 = by_hand.iter().map(|(_, m)| m).sum();
        let trace: Scalar = raw.iter().map(|(x, m)| x * &Scalar::from_int(i64::from(*m))).sum();
        let mean = trace / Scalar::from_int(i64::from(n));
        let expected = Spectrum::from_pairs(raw.iter().map(|(x, m)| (x - &mean, *m)));
        assert_eq!(b2.dimension(), 4);
        assert_eq!(b2.traceless_spectrum(&xi).unwrap(), expected);
        assert_eq!(expected, spec(&[(1, 1), (0, 2), (-1, 1)]));
        // In the direction p the raw trace is −n and the traceless part vanishes.
        let t = b2.traceless_spectrum(&v(&[1, 1])).unwrap();
        assert!(t.weighted_sum().is_zero());
    }

    #[test]
    fn mean_curvature_examples() {
        let m = Multiplicities::default();
        let b2 = orbit(RootKind::B, 2, m, &[1, 0]);
        assert_eq!(b2.mean_curvature_normal(), v(&[-3, 0]));
        assert_eq!(b2.mean_curvature_normal().dot(b2.point()), Scalar::from_int(-3));

        // A₂ at the sum of the chamber rays: oracle is a direct sum over the three positive roots.
        let sys = Arc::new(build_catalog(RootKind::A, 2, m).unwrap());
        let rays = sys.chamber_rays();
        let p = &rays[0] + &rays[1];
        let a2 = IsotropyOrbit::new(sys.clone(), p.clone()).unwrap();
        let oracle = [v(&[1, -1, 0]), v(&[1, 0, -1]), v(&[0, 1, -1])]
            .iter()
            .fold(ExactVector::zeros(3), |acc, a| acc.axpy(&-(Scalar::one() / a.dot(&p)), a));
        assert_eq!(a2.mean_curvature_normal(), oracle);
        assert_eq!(oracle, ExactVector::new(vec![q(-3, 2), q(0, 1), q(3, 2)]));
    }

    #[test]
    fn sections_examples() {
        let m = Multiplicities::default();
        let b2 = orbit(RootKind::B, 2, m, &[1, 0]);
        let s = b2.holonomy_sections();
        assert!(!s.principal);
        assert_eq!(s.sections[0].basis, vec![v(&[0, 1])]);
        assert_eq!(s.sections.len(), 2);

        let b3 = orbit(RootKind::B, 3, m, &[1, 1, 0]);
        let s = b3.holonomy_sections();
        let factors: Vec<&Section> = s.sections.iter().filter(|x| matches!(x.kind, SectionKind::FactorSection(_))).collect();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].basis, vec![v(&[1, -1, 0])]);
        assert_eq!(factors[1].basis, vec![v(&[0, 0, 1])]);
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                assert!(a.basis.iter().all(|x| b.basis.iter().all(|y| x.dot(y).is_zero())));
            }
        }

        let principal = orbit(RootKind::B, 2, m, &[2, 1]).holonomy_sections();
        assert!(principal.principal);
        assert_eq!(principal.sections[0].kind, SectionKind::FullMaximalAbelian);
        assert_eq!(section_dim(&principal.sections[0]), 2);
    }

    #[test]
    fn witness_examples() {
        let m = Multiplicities::default();
        let b2 = orbit(RootKind::B, 2, m, &[1, 0]);
        let sec = &b2.holonomy_sections().sections[1];
        match b2.rational_witness_basis(sec).unwrap() {
            Witness::Rational { scale, basis, spectra } => {
                assert_eq!(scale, Scalar::one());
                assert_eq!(basis, vec![v(&[0, 1])]);
                assert_eq!(spectra, vec![spec(&[(1, 1), (0, 1), (-1, 1)])]);
            }
            w => panic!("unexpected {w:?}"),
        }

        let b3 = orbit(RootKind::B, 3, m, &[1, 1, 0]);
        let sec = &b3.holonomy_sections().sections[1];
        match b3.rational_witness_basis(sec).unwrap() {
            Witness::Rational { basis, spectra, .. } => {
                assert_eq!(basis, vec![v(&[1, -1, 0])]);
                assert_eq!(spectra, vec![spec(&[(1, 3), (0, 1), (-1, 3)])]);
            }
            w => panic!("unexpected {w:?}"),
        }
    }

    #[test]
    fn witness_fails_for_irrational_principal_point() {
        let sys = Arc::new(build_catalog(RootKind::B, 2, Multiplicities::default()).unwrap());
        let r2 = Scalar::sqrt(2).unwrap();
        let o = IsotropyOrbit::through(sys, &ExactVector::new(vec![Scalar::one(), r2])).unwrap();
        assert_eq!(o.classify(), OrbitType::Principal);
        let sections = o.holonomy_sections();
        let w = o.rational_witness_basis(&sections.sections[0]).unwrap();
        match w {
            Witness::Failure { eigenvalue, .. } => assert!(!eigenvalue.is_rational()),
            w => panic!("unexpected {w:?}"),
        }
        let verdict = o.section_compact_type(&sections.sections[0]).unwrap();
        assert!(!verdict.compact);
    }

    #[test]
    fn rational_principal_point_is_compact() {
        let b2 = orbit(RootKind::B, 2, Multiplicities::default(), &[2, 1]);
        let sec = &b2.holonomy_sections().sections[0];
        assert!(b2.section_compact_type(sec).unwrap().compact);
        assert!(b2.rational_witness_basis(sec).unwrap().is_rational());
    }

    #[test]
    fn invariance_examples() {
        let m = Multiplicities::default();
        let b2 = orbit(RootKind::B, 2, m, &[1, 0]);
        let stab = b2.system().stabilizer_elements(b2.point()).unwrap();
        let reflection = stab.iter().find(|g| !g.is_identity()).unwrap();
        assert_eq!(reflection.apply(&v(&[0, 1])), v(&[0, -1]));
        assert!(b2.eigenvalue_invariance_check(&v(&[0, 1]), reflection).unwrap());
        assert!(b2.eigenvalue_invariance_check(&v(&[0, 1]), &stab[0]).unwrap());

        let b3 = orbit(RootKind::B, 3, m, &[1, 1, 0]);
        let g = b3
            .system()
            .stabilizer_elements(b3.point())
            .unwrap()
            .into_iter()
            .find(|g| g.apply(&v(&[1, -1, 0])) == v(&[-1, 1, 0]) && g.apply(&v(&[0, 0, 1])) == v(&[0, 0, 1]))
            .unwrap();
        assert!(b3.eigenvalue_invariance_check(&v(&[0, 0, 1]), &g).unwrap());

        let all = b2.system().weyl_group().unwrap();
        let moving = all.iter().find(|g| g.apply(b2.point()) != *b2.point()).unwrap();
        assert!(matches!(b2.eigenvalue_invariance_check(&v(&[0, 1]), moving), Err(Error::DoesNotFixPoint)));
    }

    #[test]
    fn tube_transform_reports_focal_roots() {
        let b2 = orbit(RootKind::B, 2, Multiplicities::default(), &[1, 0]);
        // ξ = e₂ gives eigenvalue 1 on the root e₁ − e₂.
        let focal = b2.tube_transform(&v(&[0, 1])).unwrap().unwrap_err();
        assert_eq!(focal.roots, vec![v(&[1, -1])]);
        let half = v(&[0, 1]).scale(&q(1, 2));
        let t = b2.tube_transform(&half).unwrap().unwrap();
        assert_eq!(t, Spectrum::from_pairs([(q(1, 1), 1), (q(0, 1), 1), (q(-1, 3), 1)]));
    }

    #[test]
    fn model_matrices_commute_and_trace_matches_mean_curvature() {
        let b3 = orbit(RootKind::B, 3, Multiplicities::new(2, 1), &[1, 1, 0]);
        let x = b3.shape_operator_matrix(&v(&[1, -1, 0])).unwrap();
        let y = b3.shape_operator_matrix(&v(&[0, 0, 1])).unwrap();
        assert!(x.commutator(&y).unwrap().is_zero());
        let h = b3.mean_curvature_normal();
        assert_eq!(x.trace(), h.dot(&v(&[1, -1, 0])));
    }
}
