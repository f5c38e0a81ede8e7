//! Catalog scans over isotropy orbits, and their reports.
//!
//! `scan_theorem_a` visits the most singular orbit on every edge of the
//! fundamental chamber and asks each holonomy section for a rational witness
//! basis. `scan_counterexamples` samples principal orbits through points with
//! a coordinate in Q(√d) and looks for a section that is not of compact type.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat, Scalar};
use crate::lattice::RootLattice;
use crate::linalg::ExactVector;
use crate::orbit::{CompactTypeVerdict, IsotropyOrbit, OrbitType, SectionKind, Witness};
use crate::rootsys::{build_catalog, parse_label, validate_axioms, AxiomReport, Multiplicities, RootKind, RootSystem};

pub const CATALOG_ENV: &str = "HOLONOMY_LAB_CATALOG";

/// Default systems for the witness scan.
pub const THEOREM_A_CATALOG: [&str; 8] = ["A2", "B2", "G2", "A3", "B3", "C3", "B2[2,1]", "B3[2,1]"];

/// Default systems for the counterexample scan.
pub const COUNTEREXAMPLE_CATALOG: [&str; 2] = ["B2", "A2"];

pub const DEFAULT_SAMPLES: usize = 8;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiplicitySpec {
    short: Option<u32>,
    long: Option<u32>,
}

impl MultiplicitySpec {
    fn resolve(&self) -> Result<Multiplicities> {
        match (self.short, self.long) {
            (Some(s), Some(l)) => Ok(Multiplicities::new(s, l)),
            (Some(m), None) | (None, Some(m)) => Ok(Multiplicities::uniform(m)),
            (None, None) => Ok(Multiplicities::default()),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum CatalogEntry {
    Label(String),
    Builtin {
        #[serde(rename = "type")]
        kind: String,
        rank: usize,
        #[serde(default)]
        multiplicities: MultiplicitySpec,
    },
    Custom {
        label: Option<String>,
        roots: Vec<ExactVector>,
        simple_roots: Vec<ExactVector>,
        multiplicities: Option<Vec<u32>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum CatalogFile {
    Wrapped { systems: Vec<CatalogEntry> },
    List(Vec<CatalogEntry>),
    Single(CatalogEntry),
}

impl CatalogEntry {
    /// Axiom check without building; custom root lists report violations
    /// instead of failing.
    fn validate(self, position: usize) -> Result<(String, AxiomReport)> {
        match self {
            CatalogEntry::Custom { label, roots, multiplicities, .. } => {
                let m = multiplicities.unwrap_or_else(|| vec![1; roots.len()]);
                Ok((label.unwrap_or_else(|| format!("custom{position}")), validate_axioms(&roots, &m)))
            }
            other => {
                let sys = other.build(position)?;
                let m: Vec<u32> = (0..sys.roots().len()).map(|i| sys.multiplicity_at(i)).collect();
                Ok((sys.label().to_string(), validate_axioms(sys.roots(), &m)))
            }
        }
    }

    fn build(self, position: usize) -> Result<RootSystem> {
        match self {
            CatalogEntry::Label(label) => parse_label(&label),
            CatalogEntry::Builtin { kind, rank, multiplicities } => {
                build_catalog(kind.parse::<RootKind>()?, rank, multiplicities.resolve()?)
            }
            CatalogEntry::Custom { label, roots, simple_roots, multiplicities } => {
                let m = multiplicities.unwrap_or_else(|| vec![1; roots.len()]);
                RootSystem::new(label.unwrap_or_else(|| format!("custom{position}")), roots, m, simple_roots)
            }
        }
    }
}

fn catalog_entries(text: &str) -> Result<Vec<CatalogEntry>> {
    let file: CatalogFile = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
    Ok(match file {
        CatalogFile::Wrapped { systems } | CatalogFile::List(systems) => systems,
        CatalogFile::Single(entry) => vec![entry],
    })
}

/// Axiom reports for every entry of a catalog document.
pub fn validate_catalog(text: &str) -> Result<Vec<(String, AxiomReport)>> {
    catalog_entries(text)?.into_iter().enumerate().map(|(i, e)| e.validate(i)).collect()
}

/// Parses a catalog document: one entry, a list of entries, or
/// `{"systems": [...]}`. Entries are labels (`"B3[2,1]"`), built-in
/// descriptions or explicit root lists.
pub fn parse_catalog(text: &str) -> Result<Vec<RootSystem>> {
    catalog_entries(text)?.into_iter().enumerate().map(|(i, e)| e.build(i)).collect()
}

pub fn load_catalog(path: &Path) -> Result<Vec<RootSystem>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}

/// Systems named by labels.
pub fn catalog_from_labels(labels: &[&str]) -> Result<Vec<RootSystem>> {
    labels.iter().map(|l| parse_label(l)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Every section has a rational witness basis.
    RationalWitness,
    /// Some sampled orbit is not of compact type.
    Counterexample,
    /// Every sampled orbit is of compact type.
    Compact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionScan {
    #[serde(flatten)]
    pub kind: SectionKind,
    pub basis: Vec<ExactVector>,
    pub witness: Witness,
    pub compact_type: CompactTypeVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitScan {
    /// Index of the simple root not orthogonal to `p`, for edge orbits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face: Option<usize>,
    pub point: ExactVector,
    pub classification: OrbitType,
    pub dimension: u32,
    pub sections: Vec<SectionScan>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemScan {
    pub system: String,
    pub expectation: Expectation,
    pub orbits: Vec<OrbitScan>,
    pub failures: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub systems: Vec<SystemScan>,
    pub failures: usize,
}

impl ScanReport {
    pub fn new(systems: Vec<SystemScan>) -> Self {
        let failures = systems.iter().map(|s| s.failures).sum();
        ScanReport { systems, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Every section of every orbit.
    pub fn sections(&self) -> impl Iterator<Item = &SectionScan> {
        self.systems.iter().flat_map(|s| s.orbits.iter().flat_map(|o| o.sections.iter()))
    }
}

fn scan_sections(orbit: &IsotropyOrbit) -> Result<Vec<SectionScan>> {
    let sections = orbit.holonomy_sections();
    sections
        .sections
        .into_iter()
        .map(|s| {
            Ok(SectionScan {
                witness: orbit.rational_witness_basis(&s)?,
                compact_type: orbit.section_compact_type(&s)?,
                kind: s.kind,
                basis: s.basis,
            })
        })
        .collect()
}

/// Most singular orbits through the lattice generator of each chamber edge.
pub fn scan_system_theorem_a(system: &RootSystem) -> Result<SystemScan> {
    let system = Arc::new(system.clone());
    let lattice = RootLattice::of_roots(&system);
    let mut orbits = Vec::new();
    for (face, ray) in system.chamber_rays().into_iter().enumerate() {
        let gamma = lattice.lattice_point_on_line(&ray)?.gamma;
        let orbit = IsotropyOrbit::new(system.clone(), gamma)?;
        let sections = scan_sections(&orbit)?;
        let passed = sections.iter().all(|s| s.witness.is_rational());
        orbits.push(OrbitScan {
            face: Some(face),
            point: orbit.point().clone(),
            classification: orbit.classify(),
            dimension: orbit.dimension(),
            sections,
            passed,
        });
    }
    let failures = orbits.iter().filter(|o| !o.passed).count();
    Ok(SystemScan { system: system.label().to_string(), expectation: Expectation::RationalWitness, orbits, failures })
}

pub fn scan_theorem_a(systems: &[RootSystem]) -> Result<ScanReport> {
    Ok(ScanReport::new(systems.iter().map(scan_system_theorem_a).collect::<Result<_>>()?))
}

fn positive_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_rational(rat(rng.gen_range(1..=6), rng.gen_range(1..=4)))
}

/// Seeded interior points `Σ cᵢ ωᵢ` with positive coefficients. With
/// `d = Some(d)` one coefficient is `r + s√d` with `r, s > 0`.
pub fn sample_chamber_points(system: &RootSystem, d: Option<u64>, count: usize, seed: u64) -> Result<Vec<ExactVector>> {
    let rays = system.chamber_rays();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let irrational = rng.gen_range(0..rays.len());
        let mut p = ExactVector::zeros(system.ambient_dim());
        for (i, ray) in rays.iter().enumerate() {
            let mut c = positive_rational(&mut rng);
            if let (Some(d), true) = (d, i == irrational) {
                let s = positive_rational(&mut rng);
                c = c.checked_add(&(&s * &Scalar::sqrt(d)?))?;
            }
            p = p.axpy(&c, ray);
        }
        out.push(p);
    }
    Ok(out)
}

/// Full-section compact-type test on `points`. With `expect_counterexample`
/// the system fails when no point gives a non-compact section; otherwise
/// every non-compact section is a failure.
pub fn scan_points(system: &RootSystem, points: &[ExactVector], expect_counterexample: bool) -> Result<SystemScan> {
    let arc = Arc::new(system.clone());
    let mut orbits = Vec::with_capacity(points.len());
    for p in points {
        let orbit = IsotropyOrbit::through(arc.clone(), p)?;
        let sections = scan_sections(&orbit)?;
        let passed = sections.iter().all(|s| s.compact_type.compact);
        orbits.push(OrbitScan {
            face: None,
            point: orbit.point().clone(),
            classification: orbit.classify(),
            dimension: orbit.dimension(),
            sections,
            passed,
        });
    }
    orbits.sort_by(|a, b| a.point.entries().cmp(b.point.entries()));
    orbits.dedup_by(|a, b| a.point == b.point);
    let non_compact = orbits.iter().filter(|o| !o.passed).count();
    let (expectation, failures) = if expect_counterexample {
        (Expectation::Counterexample, usize::from(non_compact == 0))
    } else {
        (Expectation::Compact, non_compact)
    };
    Ok(SystemScan { system: system.label().to_string(), expectation, orbits, failures })
}

/// Samples `count` principal points with a coordinate in Q(√d) per system.
/// `d = None` runs the rational control sweep instead.
pub fn scan_counterexamples(systems: &[RootSystem], d: Option<u64>, count: usize, seed: u64) -> Result<ScanReport> {
    let mut out = Vec::with_capacity(systems.len());
    for system in systems {
        if system.rank() < 2 {
            return Err(Error::Precondition(format!("{} has rank {} < 2", system.label(), system.rank())));
        }
        let points = sample_chamber_points(system, d, count, seed)?;
        out.push(scan_points(system, &points, d.is_some())?);
    }
    Ok(ScanReport::new(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::Parse(format!("unknown report format {other:?}"))),
        }
    }
}

fn section_name(kind: &SectionKind) -> String {
    match kind {
        SectionKind::FullMaximalAbelian => "full".to_string(),
        SectionKind::HolonomySection => "W".to_string(),
        SectionKind::FactorSection(k) => format!("factor{k}"),
    }
}

fn orbit_type_name(t: OrbitType) -> &'static str {
    match t {
        OrbitType::Principal => "principal",
        OrbitType::Singular => "singular",
        OrbitType::MostSingular => "most_singular",
    }
}

fn render_text(report: &ScanReport) -> String {
    let mut out = String::new();
    for s in &report.systems {
        let _ = writeln!(out, "system {} expect={:?} failures={}", s.system, s.expectation, s.failures);
        let _ = writeln!(out, "  {:<5} {:<14} {:>4}  {:<8} {:<9} {:<8} point", "face", "class", "dim", "section", "witness", "compact");
        for o in &s.orbits {
            let face = o.face.map_or("-".to_string(), |f| f.to_string());
            for sec in &o.sections {
                let witness = if sec.witness.is_rational() { "rational" } else { "failed" };
                let compact = if sec.compact_type.compact { "yes" } else { "no" };
                let _ = writeln!(
                    out,
                    "  {:<5} {:<14} {:>4}  {:<8} {:<9} {:<8} {}",
                    face,
                    orbit_type_name(o.classification),
                    o.dimension,
                    section_name(&sec.kind),
                    witness,
                    compact,
                    o.point
                );
            }
        }
    }
    let _ = writeln!(out, "failures {}", report.failures);
    out
}

/// Deterministic serialization; exact scalars are strings.
pub fn emit_report(report: &ScanReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => serde_json::to_string(report).map_err(|e| Error::Internal(e.to_string())),
        ReportFormat::Text => Ok(render_text(report)),
    }
}
