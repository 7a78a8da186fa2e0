//! Command-line front end. Exit codes: 0 when every check passes, 1 when a
//! mathematical check fails, 2 on invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chain::fixtures::{delta_relations, grid, weyl_pairs, FIXTURE_DEGREE};
use crate::chain::{build_fixture, can_check, weyl_coinvariants, ChainPresentation, Coefficients, FIXTURES};
use crate::enveloping::Enveloping;
use crate::error::{Error, Result};
use crate::highest_weight::{central_character_hc, root_system, simple_quotient, RootType};
use crate::lie::{catalog_algebra, center, derived_algebra, nilradical, series, LieAlgebra, SeriesKind, CATALOG};
use crate::linalg::Vector;
use crate::orbit::{check_relation, ideal_flag, FlagOrder, Relation, RelationReport, Truncation};
use crate::rep::{kernel_truncated, parse_module_spec, KernelReport};
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// Directory searched for `<name>.json` when `--algebra` is not a catalog entry.
pub const CATALOG_ENV: &str = "LIECHAIN_CATALOG";

#[derive(Parser, Debug)]
#[command(
    name = "liechain",
    version,
    about = "Enveloping algebras, weak containment and chain groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List built-in algebras and chain fixtures.
    Catalog,
    /// Structural queries on an algebra.
    Lie {
        #[command(subcommand)]
        query: LieQuery,
    },
    /// Relation checks on sampled functionals.
    Orbit {
        #[command(subcommand)]
        cmd: OrbitCmd,
    },
    /// Chain presentations and their abelianizations.
    Chain {
        #[command(subcommand)]
        cmd: ChainCmd,
    },
    /// Truncated kernels of modules.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Highest-weight data for types A1 and A2.
    Hw {
        #[command(subcommand)]
        cmd: HwCmd,
    },
}

#[derive(Args, Debug, Clone)]
struct AlgebraArgs {
    /// Catalog name, or a file name under $LIECHAIN_CATALOG.
    #[arg(long)]
    algebra: Option<String>,
    /// Algebra JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum LieQuery {
    /// Center as a span of basis combinations.
    Center(AlgebraArgs),
    /// Lower central or derived series.
    Series {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = SeriesArg::Lower)]
        kind: SeriesArg,
    },
    /// Largest nilpotent ideal.
    Nilradical(AlgebraArgs),
    /// Check antisymmetry and the Jacobi identity.
    Validate(AlgebraArgs),
    /// Write an algebra as JSON.
    Export {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeriesArg {
    Lower,
    Derived,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum RelationKind {
    /// I(f) ∩ U(g') inside I(f|g') for a subalgebra g'.
    Resnil,
    /// ker(M_f ⊗ M_f') inside I(f + f').
    Tensnil,
    /// ker(M_f ⊗ λ) inside I(f + λ) for a character λ.
    Shift,
    /// I(-f) = S(I(f)).
    Antipode,
    /// ker(M_f ⊗ M_f') inside ker(M_(f+f') ⊗ λ), λ vanishing on the nilradical.
    Indrestw,
}

#[derive(Subcommand, Debug)]
enum OrbitCmd {
    /// Run a relation check on sampled functionals.
    Check {
        kind: RelationKind,
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 2)]
        deg: u32,
        /// Module level; defaults to the certified level for the relation.
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct PresentationArgs {
    #[arg(long)]
    fixture: Option<String>,
    /// Chain presentation JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TypeArg {
    A1,
    A2,
}

impl From<TypeArg> for RootType {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::A1 => RootType::A1,
            TypeArg::A2 => RootType::A2,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RingArg {
    Lattice,
    Rational,
}

#[derive(Subcommand, Debug)]
enum ChainCmd {
    /// Abelianization by Smith normal form.
    Solve(PresentationArgs),
    /// Compare the abelianization with the central-character image.
    Check(PresentationArgs),
    /// Weyl coinvariants of the weight lattice or weight space.
    Coinvariants {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value_t = RingArg::Lattice)]
        ring: RingArg,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    /// Truncated kernel of a module given as JSON.
    Kernel {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Module JSON file.
        #[arg(long)]
        module: PathBuf,
        #[arg(long, default_value_t = 2)]
        deg: u32,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum HwCmd {
    /// Casimir eigenvalue on the Verma module M(λ).
    Casimir {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        /// Comma-separated fundamental-weight coordinates.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Finite-dimensional simple quotient of M(λ).
    Quotient {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Presentation from a weight grid `lo..hi` in every coordinate.
    Grid {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CheckFailed(_) | Error::RelationNotRespected { .. } | Error::NoWitness => 1,
        _ => 2,
    }
}

fn io<T>(r: std::io::Result<T>) -> Result<T> {
    r.map_err(Error::from)
}

pub fn load_algebra(name: Option<&str>, file: Option<&Path>) -> Result<LieAlgebra> {
    match (name, file) {
        (Some(_), Some(_)) => Err(Error::Invalid("give either --algebra or --file".into())),
        (None, None) => Err(Error::Invalid("an algebra is required (--algebra or --file)".into())),
        (None, Some(path)) => LieAlgebra::from_json_str(&std::fs::read_to_string(path)?),
        (Some(name), None) => match catalog_algebra(name) {
            Err(Error::UnknownCatalogEntry(_)) => {
                let Ok(dir) = std::env::var(CATALOG_ENV) else {
                    return Err(Error::UnknownCatalogEntry(name.into()));
                };
                let path = Path::new(&dir).join(format!("{name}.json"));
                if !path.exists() {
                    return Err(Error::UnknownCatalogEntry(name.into()));
                }
                LieAlgebra::from_json_str(&std::fs::read_to_string(path)?)
            }
            other => other,
        },
    }
}

fn algebra(a: &AlgebraArgs) -> Result<LieAlgebra> {
    load_algebra(a.algebra.as_deref(), a.file.as_deref())
}

fn emit_json<T: Serialize>(value: &T, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => io(writeln!(out, "{text}"))?,
    }
    Ok(())
}

fn parse_weight(s: &str) -> Result<Vec<Scalar>> {
    s.split(',').map(|x| parse_scalar(x.trim())).collect()
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("expected a range lo..hi, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Catalog => {
            io(writeln!(out, "algebras:"))?;
            for e in CATALOG {
                io(writeln!(out, "  {:<12} {}", e.name, e.note))?;
            }
            io(writeln!(out, "fixtures:"))?;
            for f in FIXTURES {
                io(writeln!(out, "  {:<20} {}", f.name, f.note))?;
            }
            Ok(true)
        }
        Command::Lie { query } => lie(query, out),
        Command::Orbit {
            cmd:
                OrbitCmd::Check {
                    kind,
                    alg,
                    deg,
                    level,
                    strict,
                    samples,
                    seed,
                    out: path,
                },
        } => {
            let g = algebra(&alg)?;
            let report = orbit_check(&g, kind, deg, level, strict, samples, seed)?;
            for inst in &report.instances {
                io(writeln!(
                    out,
                    "{} {}: {}{}",
                    inst.kind,
                    inst.instance,
                    if inst.holds { "holds" } else { "FAILS" },
                    if inst.certified { "" } else { " (uncertified)" }
                ))?;
            }
            io(writeln!(out, "{} of {} instances hold", report.holding, report.samples))?;
            emit_json(&report, path.as_deref(), out)?;
            Ok(report.passed)
        }
        Command::Chain { cmd } => chain(cmd, out),
        Command::Rep {
            cmd:
                RepCmd::Kernel {
                    alg,
                    module,
                    deg,
                    strict,
                    out: path,
                },
        } => {
            let g = algebra(&alg)?;
            let m = parse_module_spec(&std::fs::read_to_string(module)?, &g)?;
            let env = Enveloping::new(g);
            let k = kernel_truncated(&env, &m, deg, strict)?;
            let report = KernelReport::new(&env, &k);
            io(writeln!(
                out,
                "kernel at degree {deg}: dim {} (certified: {})",
                report.dim, report.certified
            ))?;
            emit_json(&report, path.as_deref(), out)?;
            Ok(true)
        }
        Command::Hw { cmd } => hw(cmd, out),
    }
}

fn lie(query: LieQuery, out: &mut dyn Write) -> Result<bool> {
    match query {
        LieQuery::Center(a) => {
            let g = algebra(&a)?;
            io(writeln!(out, "{}", g.format_subspace(&center(&g))))?;
        }
        LieQuery::Series { alg, kind } => {
            let g = algebra(&alg)?;
            let kind = match kind {
                SeriesArg::Lower => SeriesKind::LowerCentral,
                SeriesArg::Derived => SeriesKind::Derived,
            };
            for (i, s) in series(&g, kind).iter().enumerate() {
                io(writeln!(out, "{i}: dim {} {}", s.dim(), g.format_subspace(s)))?;
            }
        }
        LieQuery::Nilradical(a) => {
            let g = algebra(&a)?;
            io(writeln!(out, "{}", g.format_subspace(&nilradical(&g)?)))?;
        }
        LieQuery::Validate(a) => {
            let g = algebra(&a)?;
            io(writeln!(out, "{}: valid, dimension {}", g.name(), g.dim()))?;
        }
        LieQuery::Export { alg, out: path } => {
            let g = algebra(&alg)?;
            emit_json(&g.to_json(), path.as_deref(), out)?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct OrbitReport {
    command: &'static str,
    kind: String,
    algebra: String,
    seed: u64,
    samples: usize,
    strict: bool,
    truncation: Truncation,
    certified: bool,
    passed: bool,
    holding: usize,
    instances: Vec<RelationReport>,
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=2).into())
}

fn random_functional(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| random_scalar(rng)).collect()
}

fn sample_relation(g: &LieAlgebra, kind: RelationKind, rng: &mut ChaCha8Rng) -> Result<Relation> {
    let n = g.dim();
    Ok(match kind {
        RelationKind::Resnil => {
            let flag = ideal_flag(g, FlagOrder::default())?;
            Relation::ResNil {
                sub: flag[n - 1].clone(),
                f: random_functional(rng, n),
            }
        }
        RelationKind::Tensnil => Relation::TensNil {
            f: random_functional(rng, n),
            f2: random_functional(rng, n),
        },
        RelationKind::Shift => {
            let chars = derived_algebra(g).annihilator();
            let mut lambda = vec![Scalar::from_integer(0.into()); n];
            for b in chars.basis() {
                let c = random_scalar(rng);
                for (l, x) in lambda.iter_mut().zip(b) {
                    *l += &c * x;
                }
            }
            Relation::Shift {
                f: random_functional(rng, n),
                lambda,
            }
        }
        RelationKind::Antipode => Relation::Antipode {
            f: random_functional(rng, n),
        },
        RelationKind::Indrestw => Relation::IndResTw {
            f: random_functional(rng, n),
            f2: random_functional(rng, n),
        },
    })
}

fn orbit_check(
    g: &LieAlgebra,
    kind: RelationKind,
    deg: u32,
    level: Option<usize>,
    strict: bool,
    samples: usize,
    seed: u64,
) -> Result<OrbitReport> {
    if deg == 0 {
        return Err(Error::Invalid("--deg must be at least 1".into()));
    }
    let env = Enveloping::new(g.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::with_capacity(samples);
    let mut trunc = Truncation {
        d: deg,
        level: level.unwrap_or(0),
    };
    for _ in 0..samples {
        let rel = sample_relation(g, kind, &mut rng)?;
        trunc.level = level.unwrap_or_else(|| rel.required_level(g, deg));
        instances.push(check_relation(&env, &rel, trunc, strict, FlagOrder::default())?);
    }
    let holding = instances.iter().filter(|r| r.holds).count();
    Ok(OrbitReport {
        command: "orbit check",
        kind: format!("{kind:?}").to_lowercase(),
        algebra: g.name().to_string(),
        seed,
        samples,
        strict,
        truncation: trunc,
        certified: instances.iter().all(|r| r.certified),
        passed: holding == samples,
        holding,
        instances,
    })
}

fn presentation(args: &PresentationArgs) -> Result<(String, ChainPresentation, bool)> {
    match (&args.fixture, &args.file) {
        (Some(name), None) => Ok((name.clone(), build_fixture(name)?, true)),
        (None, Some(path)) => Ok((
            path.display().to_string(),
            ChainPresentation::from_json_str(&std::fs::read_to_string(path)?)?,
            false,
        )),
        _ => Err(Error::Invalid("give exactly one of --fixture or --file".into())),
    }
}

#[derive(Serialize)]
struct ChainReport<T: Serialize> {
    command: &'static str,
    source: String,
    /// Degree at which fixture relations were verified; absent for files.
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation: Option<u32>,
    certified: bool,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct SolveBody {
    generators: usize,
    relations: usize,
    group: String,
    free_rank: usize,
    torsion: Vec<String>,
}

fn chain(cmd: ChainCmd, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        ChainCmd::Solve(args) => {
            let (source, p, verified) = presentation(&args)?;
            let group = p.abelian_invariants();
            io(writeln!(out, "{group}"))?;
            if args.out.is_some() {
                let report = ChainReport {
                    command: "chain solve",
                    source,
                    truncation: verified.then_some(FIXTURE_DEGREE),
                    certified: verified,
                    body: SolveBody {
                        generators: p.num_generators(),
                        relations: p.relations().len(),
                        group: group.to_string(),
                        free_rank: group.free_rank,
                        torsion: group.torsion.iter().map(|d| d.to_string()).collect(),
                    },
                };
                emit_json(&report, args.out.as_deref(), out)?;
            }
            Ok(true)
        }
        ChainCmd::Check(args) => {
            let (source, p, verified) = presentation(&args)?;
            let can = can_check(&p)?;
            io(writeln!(
                out,
                "abelianization {} ; character image {} ; {}",
                can.abelianization,
                can.image,
                if can.isomorphic { "isomorphic" } else { "NOT isomorphic" }
            ))?;
            let passed = can.passed();
            if args.out.is_some() {
                let report = ChainReport {
                    command: "chain check",
                    source,
                    truncation: verified.then_some(FIXTURE_DEGREE),
                    certified: verified,
                    body: can,
                };
                emit_json(&report, args.out.as_deref(), out)?;
            }
            Ok(passed)
        }
        ChainCmd::Coinvariants { ty, ring } => {
            let rs = root_system(ty.into())?;
            let coeffs = match ring {
                RingArg::Lattice => Coefficients::Lattice,
                RingArg::Rational => Coefficients::Rational,
            };
            io(writeln!(out, "{}", weyl_coinvariants(coeffs, &rs)))?;
            Ok(true)
        }
    }
}

fn hw(cmd: HwCmd, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        HwCmd::Casimir { ty, weight } => {
            let rs = root_system(ty.into())?;
            let c = central_character_hc(&rs, &parse_weight(&weight)?)?;
            io(writeln!(out, "{}", format_scalar(&c)))?;
        }
        HwCmd::Quotient { ty, weight } => {
            let rs = root_system(ty.into())?;
            let lambda = parse_weight(&weight)?;
            let rep = simple_quotient(&rs, &lambda)?;
            io(writeln!(
                out,
                "dim {} (Weyl dimension {})",
                rep.dim(),
                format_scalar(&rs.weyl_dimension(&lambda))
            ))?;
        }
        HwCmd::Grid { ty, range, out: path } => {
            let rs = root_system(ty.into())?;
            let (lo, hi) = parse_range(&range)?;
            let weights = grid(rs.rank(), lo, hi);
            let p = delta_relations(&rs, &weights)?.merge_by_inclusion(&weyl_pairs(&rs, &weights)?)?;
            let text = p.to_json_string();
            match path {
                Some(p) => std::fs::write(p, text + "\n")?,
                None => io(writeln!(out, "{text}"))?,
            }
        }
    }
    Ok(true)
}
