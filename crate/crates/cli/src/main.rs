use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use holonomy_lab::holonomy::{
    curvature_su_so, flat_variation_harness, generate_algebra, sim0_curvature_generators, transitivity_test, PlaneRotation,
    TracelessSym, DEFAULT_TOLERANCE,
};
use holonomy_lab::lattice::RootLattice;
use holonomy_lab::orbit::{IsotropyOrbit, Witness};
use holonomy_lab::rootsys::{parse_label, RootSystem};
use holonomy_lab::scan::{
    self, catalog_from_labels, emit_report, load_catalog, validate_catalog, ReportFormat, CATALOG_ENV,
    COUNTEREXAMPLE_CATALOG, DEFAULT_SAMPLES, THEOREM_A_CATALOG,
};
use holonomy_lab::surface::{integrate_weingarten, WeingartenSeed, MAX_STEP};
use holonomy_lab::{Error, ExactMatrix, ExactVector};

#[derive(Parser)]
#[command(name = "holonomy-lab", version, about = "Exact checks on isotropy orbits of symmetric spaces")]
struct Cli {
    /// Root-system catalog (JSON).
    #[arg(long, global = true, env = CATALOG_ENV)]
    catalog: Option<PathBuf>,
    /// Seed for every sampled point.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root systems.
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Root and standard lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Isotropy orbits.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Curvature and holonomy of SU_n/SO_n.
    #[command(subcommand)]
    Holonomy(HolonomyCmd),
    /// Rotational Weingarten surfaces.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Catalog scans.
    #[command(subcommand)]
    Scan(ScanCmd),
}

#[derive(Args)]
struct SystemArgs {
    /// Catalog label such as `B2` or `B3[2,1]`, or a label from `--catalog`.
    #[arg(long)]
    system: Vec<String>,
}

#[derive(Subcommand)]
enum RootsysCmd {
    /// Check the root-system axioms.
    Validate(SystemArgs),
    /// Print roots, simple roots, chamber rays and the Weyl group order.
    Show(SystemArgs),
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Integer basis of the part of a lattice orthogonal to a set of vectors.
    Complement {
        /// Vectors spanning S, separated by `;`.
        #[arg(long)]
        subset: String,
        /// Lattice generators separated by `;` (default: the standard lattice).
        #[arg(long, conflicts_with = "system")]
        lattice: Option<String>,
        /// Use the root lattice of this system.
        #[arg(long)]
        system: Option<String>,
    },
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long)]
    system: String,
    /// Point of the section; moved into the closed chamber if needed.
    #[arg(long)]
    point: String,
}

#[derive(Subcommand)]
enum OrbitCmd {
    Classify(OrbitArgs),
    Spectrum {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long)]
        xi: String,
        /// Spectrum of the traceless part.
        #[arg(long)]
        traceless: bool,
    },
    Witness(OrbitArgs),
    CompactType(OrbitArgs),
}

#[derive(Subcommand)]
enum HolonomyCmd {
    /// Lie algebra generated by the curvature operators of a model space.
    Generate {
        /// `sim0:N` with N in 2..=4.
        #[arg(long)]
        space: String,
    },
    /// Conjugation family along a rotation path.
    Flatvar {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Rotation plane `i,j,rate`; repeatable (default `0,1,1`).
        #[arg(long)]
        plane: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// `⟨R_{u,v}w, z⟩` for traceless symmetric matrices given as `a,b;c,d`.
    Curvature {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// Profile curve with κ_m − κ_p = c as CSV.
    Weingarten {
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        r0: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi0: f64,
        #[arg(long, default_value_t = 2.0)]
        smax: f64,
        #[arg(long, default_value_t = MAX_STEP)]
        step: f64,
    },
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    systems: SystemArgs,
    /// `json` or `text`.
    #[arg(long, default_value = "json")]
    format: ReportFormat,
}

#[derive(Subcommand)]
enum ScanCmd {
    /// Rational witness bases on every most singular orbit.
    TheoremA(ScanArgs),
    /// Principal orbits through points with a coordinate in Q(√d).
    Counterexamples {
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Rational points instead; every orbit must be of compact type.
        #[arg(long)]
        control: bool,
    },
}

/// Outcome of a command: text to print and whether a mathematical
/// expectation failed.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failed: false }
    }

    fn json(v: Value) -> Self {
        Self::ok(v.to_string())
    }
}

fn parse_vector(text: &str) -> Result<ExactVector, Error> {
    ExactVector::parse(text)
}

fn parse_vectors(text: &str) -> Result<Vec<ExactVector>, Error> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(parse_vector).collect()
}

fn parse_matrix(text: &str) -> Result<ExactMatrix, Error> {
    ExactMatrix::from_row_vectors(&parse_vectors(text)?)
}

fn parse_floats(text: &str) -> Result<Vec<f64>, Error> {
    text.split(',').map(|t| t.trim().parse::<f64>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))).collect()
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn decimal(x: f64) -> String {
    format!("{x:.11e}")
}

struct Context {
    catalog: Option<Vec<RootSystem>>,
}

impl Context {
    fn new(path: Option<&PathBuf>) -> Result<Self, Error> {
        Ok(Context { catalog: path.map(|p| load_catalog(p)).transpose()? })
    }

    fn system(&self, label: &str) -> Result<RootSystem, Error> {
        if let Some(found) = self.catalog.iter().flatten().find(|s| s.label() == label) {
            return Ok(found.clone());
        }
        parse_label(label)
    }

    /// Named systems, else the catalog file, else `defaults`.
    fn systems(&self, labels: &[String], defaults: &[&str]) -> Result<Vec<RootSystem>, Error> {
        if !labels.is_empty() {
            return labels.iter().map(|l| self.system(l)).collect();
        }
        match &self.catalog {
            Some(c) => Ok(c.clone()),
            None => catalog_from_labels(defaults),
        }
    }
}

fn rootsys(cmd: RootsysCmd, cli_catalog: Option<&PathBuf>) -> Result<Outcome, Error> {
    match cmd {
        RootsysCmd::Validate(args) => {
            let reports: Vec<(String, _)> = if args.system.is_empty() {
                match cli_catalog {
                    Some(path) => {
                        let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
                        validate_catalog(&text)?
                    }
                    None => validate_labels(&THEOREM_A_CATALOG.map(String::from))?,
                }
            } else {
                validate_labels(&args.system)?
            };
            let failed = reports.iter().any(|(_, r)| !r.ok);
            let systems: Vec<Value> = reports.iter().map(|(l, r)| json!({"system": l, "report": to_json(r)})).collect();
            Ok(Outcome { text: json!({ "systems": systems }).to_string(), failed })
        }
        RootsysCmd::Show(args) => {
            let ctx = Context::new(cli_catalog)?;
            let mut out = Vec::new();
            for sys in ctx.systems(&args.system, &THEOREM_A_CATALOG)? {
                let positive: Vec<&ExactVector> = sys.positive_roots().map(|(_, r)| r).collect();
                let mult: Vec<u32> = sys.positive_roots().map(|(i, _)| sys.multiplicity_at(i)).collect();
                out.push(json!({
                    "system": sys.label(),
                    "rank": sys.rank(),
                    "ambient_dim": sys.ambient_dim(),
                    "simple_roots": to_json(&sys.simple_roots()),
                    "positive_roots": to_json(&positive),
                    "multiplicities": mult,
                    "chamber_rays": to_json(&sys.chamber_rays()),
                    "weyl_group_order": sys.weyl_group_order()?,
                }));
            }
            Ok(Outcome::json(json!({ "systems": out })))
        }
    }
}

fn validate_labels(labels: &[String]) -> Result<Vec<(String, holonomy_lab::rootsys::AxiomReport)>, Error> {
    let doc = serde_json::to_string(labels).expect("strings serialize");
    validate_catalog(&doc)
}

fn lattice(cmd: LatticeCmd, ctx: &Context) -> Result<Outcome, Error> {
    let LatticeCmd::Complement { subset, lattice, system } = cmd;
    let s = parse_vectors(&subset)?;
    let dim = s.first().map(ExactVector::dim).ok_or(Error::EmptyInput("subset"))?;
    let lat = match (lattice, system) {
        (Some(gens), _) => RootLattice::from_generators(&parse_vectors(&gens)?)?,
        (None, Some(label)) => RootLattice::of_roots(&ctx.system(&label)?),
        (None, None) => RootLattice::standard(dim),
    };
    let complement = lat.ortho_complement_sublattice(&s)?;
    Ok(Outcome::json(json!({ "lattice": to_json(&lat.basis()), "complement": to_json(&complement) })))
}

fn orbit(cmd: OrbitCmd, ctx: &Context) -> Result<Outcome, Error> {
    let build = |args: &OrbitArgs| -> Result<IsotropyOrbit, Error> {
        let sys = Arc::new(ctx.system(&args.system)?);
        IsotropyOrbit::through(sys, &parse_vector(&args.point)?)
    };
    let header = |o: &IsotropyOrbit| {
        json!({
            "system": o.system().label(),
            "point": to_json(o.point()),
            "classification": to_json(&o.classify()),
            "dimension": o.dimension(),
        })
    };
    let merge = |mut base: Value, extra: Value| {
        if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
            b.extend(e);
        }
        base
    };
    match cmd {
        OrbitCmd::Classify(args) => {
            let o = build(&args)?;
            let stabilizer: Vec<&ExactVector> = o.stabilizer().positive_roots().collect();
            let active: Vec<&ExactVector> = o.active_roots().collect();
            let extra = json!({
                "stabilizer_positive_roots": to_json(&stabilizer),
                "active_roots": to_json(&active),
                "mean_curvature_normal": to_json(&o.mean_curvature_normal()),
            });
            Ok(Outcome::json(merge(header(&o), extra)))
        }
        OrbitCmd::Spectrum { orbit: args, xi, traceless } => {
            let o = build(&args)?;
            let xi = parse_vector(&xi)?;
            let spectrum = if traceless { o.traceless_spectrum(&xi)? } else { o.shape_spectrum(&xi)? };
            Ok(Outcome::json(merge(header(&o), json!({ "xi": to_json(&xi), "traceless": traceless, "spectrum": to_json(&spectrum) }))))
        }
        OrbitCmd::Witness(args) => {
            let o = build(&args)?;
            let mut sections = Vec::new();
            for s in o.holonomy_sections().sections {
                let w: Witness = o.rational_witness_basis(&s)?;
                sections.push(json!({ "section": to_json(&s), "witness": to_json(&w) }));
            }
            Ok(Outcome::json(merge(header(&o), json!({ "sections": sections }))))
        }
        OrbitCmd::CompactType(args) => {
            let o = build(&args)?;
            let mut sections = Vec::new();
            for s in o.holonomy_sections().sections {
                let v = o.section_compact_type(&s)?;
                sections.push(json!({ "section": to_json(&s), "verdict": to_json(&v) }));
            }
            Ok(Outcome::json(merge(header(&o), json!({ "sections": sections }))))
        }
    }
}

fn holonomy(cmd: HolonomyCmd, seed: u64) -> Result<Outcome, Error> {
    match cmd {
        HolonomyCmd::Generate { space } => {
            let n: usize = space
                .strip_prefix("sim0:")
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("space {space:?} is not of the form sim0:N")))?;
            let gens = sim0_curvature_generators(n)?;
            let size = gens.first().map_or(0, ExactMatrix::nrows);
            let alg = generate_algebra(size, &gens)?;
            let verdict = transitivity_test(&alg, seed)?;
            Ok(Outcome::json(json!({
                "space": space,
                "module_dim": size,
                "generators": gens.len(),
                "dimension": alg.dim(),
                "closed": alg.is_closed()?,
                "transitivity": to_json(&verdict),
            })))
        }
        HolonomyCmd::Flatvar { n, p, steps, plane, tol } => {
            let diag = parse_floats(&p)?;
            if diag.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: diag.len() });
            }
            let planes = if plane.is_empty() { vec!["0,1,1".to_string()] } else { plane };
            let mut path = Vec::with_capacity(planes.len());
            for spec in &planes {
                let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
                let [i, j, rate] = parts[..] else {
                    return Err(Error::Parse(format!("plane {spec:?} is not i,j,rate")));
                };
                let index = |t: &str| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")));
                let rate = rate.parse::<f64>().map_err(|e| Error::Parse(format!("{rate:?}: {e}")))?;
                path.push(PlaneRotation { i: index(i)?, j: index(j)?, rate });
            }
            let r = flat_variation_harness(&diag, &path, steps, tol)?;
            let text = json!({
                "n": r.n,
                "steps": r.steps,
                "max_eigenvalue_drift": decimal(r.max_eigenvalue_drift),
                "max_orthogonality_residual": decimal(r.max_orthogonality_residual),
                "max_spectrum_error": decimal(r.max_spectrum_error),
                "tolerance": decimal(r.tolerance),
                "passed": r.passed,
            })
            .to_string();
            Ok(Outcome { text, failed: !r.passed })
        }
        HolonomyCmd::Curvature { u, v, w, z } => {
            let m = |t: &str| parse_matrix(t).and_then(TracelessSym::new);
            let value = curvature_su_so(&m(&u)?, &m(&v)?, &m(&w)?, &m(&z)?)?;
            Ok(Outcome::json(json!({ "value": to_json(&value) })))
        }
    }
}

fn surface(cmd: SurfaceCmd) -> Result<Outcome, Error> {
    let SurfaceCmd::Weingarten { c, r0, phi0, smax, step } = cmd;
    let seed = WeingartenSeed { c, r0, phi0, s_max: smax, step };
    let curve = integrate_weingarten(&seed)?;
    let mut buf = Vec::new();
    curve.write_csv(&mut buf).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Outcome::ok(String::from_utf8(buf).expect("ascii").trim_end().to_string()))
}

fn scan_cmd(cmd: ScanCmd, ctx: &Context, seed: u64) -> Result<Outcome, Error> {
    let (report, format) = match cmd {
        ScanCmd::TheoremA(args) => {
            let systems = ctx.systems(&args.systems.system, &THEOREM_A_CATALOG)?;
            (scan::scan_theorem_a(&systems)?, args.format)
        }
        ScanCmd::Counterexamples { scan: args, d, samples, control } => {
            let systems = ctx.systems(&args.systems.system, &COUNTEREXAMPLE_CATALOG)?;
            let d = (!control).then_some(d);
            (scan::scan_counterexamples(&systems, d, samples, seed)?, args.format)
        }
    };
    let text = emit_report(&report, format)?;
    Ok(Outcome { text: text.trim_end().to_string(), failed: !report.passed() })
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Rootsys(cmd) => rootsys(cmd, cli.catalog.as_ref()),
        Command::Lattice(cmd) => lattice(cmd, &Context::new(cli.catalog.as_ref())?),
        Command::Orbit(cmd) => orbit(cmd, &Context::new(cli.catalog.as_ref())?),
        Command::Holonomy(cmd) => holonomy(cmd, cli.seed),
        Command::Surface(cmd) => surface(cmd),
        Command::Scan(cmd) => scan_cmd(cmd, &Context::new(cli.catalog.as_ref())?, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if writeln!(out, "{}", outcome.text).is_err() {
                return ExitCode::from(2);
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Error::AxisCollision(s)) => {
            eprintln!("error: profile reached the axis at arclength {s}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
