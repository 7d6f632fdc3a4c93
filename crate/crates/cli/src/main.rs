//! `singlet`: invariant-subspace dimensions and their verification suites.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use singlet_core::invariant::{adjoint_dimension_sequence, power_dimension_sequence, su3_component_sequence};
use singlet_core::verify::{run_check, Check, VerifyConfig};
use singlet_core::{
    adjoint_character, character_from_weights, derangement_sequence, dimension_table, fundamental_character,
    CharacterSpec, LaurentPolynomial,
};

use render::Format;

#[derive(Parser, Debug)]
#[command(name = "singlet", version, about = "Count singlets in SU(N) tensor powers exactly")]
struct Cli {
    /// Worker threads for table generation (0 = rayon default).
    #[arg(long, global = true, env = "SINGLET_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant dimension of the n-th tensor power of a representation.
    Dim(DimArgs),
    /// Adjoint-power dimensions for a range of groups and powers.
    Table(TableArgs),
    /// The four SU(3) coefficients a1..a4 and their signed sum.
    Components(ComponentsArgs),
    /// A whole sequence, by default as an OEIS-style b-file.
    Sequence(SequenceArgs),
    /// Run a named verification, or `all`.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct RepArgs {
    /// Group SU(N).
    #[arg(long, default_value_t = 2)]
    group: i64,
    /// `adjoint`, `fundamental`, or `weights-file <PATH>`.
    #[arg(long, num_args = 1..=2, value_names = ["KIND", "PATH"], default_values_t = ["adjoint".to_string()])]
    rep: Vec<String>,
}

#[derive(Args, Debug)]
struct DimArgs {
    #[command(flatten)]
    rep: RepArgs,
    /// Power `k` or inclusive range `a..b`.
    #[arg(long)]
    n: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, default_value = "2..7")]
    groups: String,
    #[arg(long, default_value = "2..8")]
    powers: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ComponentsArgs {
    #[arg(long, default_value = "0..10")]
    n: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum SequenceName {
    /// Invariant dimensions for `--group` / `--rep`.
    Dim,
    A1,
    A2,
    A3,
    A4,
    Derangement,
}

#[derive(Args, Debug)]
struct SequenceArgs {
    #[arg(value_enum)]
    name: SequenceName,
    #[command(flatten)]
    rep: RepArgs,
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Bfile)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check name, or `all`.
    check: String,
    /// Range for sequence-indexed checks (defaults differ per check).
    #[arg(long)]
    max_n: Option<usize>,
    /// Residual truncation order for ODE checks.
    #[arg(long)]
    order: Option<usize>,
    /// Largest group for the derangement check.
    #[arg(long)]
    max_group: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Inclusive `a..b`, `a..=b`, or a single value.
fn parse_range<T>(s: &str) -> anyhow::Result<Vec<T>>
where
    T: std::str::FromStr + Copy + Into<i64> + TryFrom<i64>,
    <T as std::str::FromStr>::Err: std::error::Error + Send + Sync + 'static,
{
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse::<T>()?, b.trim().trim_start_matches('=').parse::<T>()?),
        None => {
            let v = s.trim().parse::<T>()?;
            (v, v)
        }
    };
    let (lo, hi): (i64, i64) = (lo.into(), hi.into());
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo..=hi).filter_map(|v| T::try_from(v).ok()).collect())
}

fn parse_powers(s: &str) -> anyhow::Result<Vec<usize>> {
    let v: Vec<u32> = parse_range(s).with_context(|| format!("invalid power range {s:?}"))?;
    Ok(v.into_iter().map(|x| x as usize).collect())
}

fn parse_groups(s: &str) -> anyhow::Result<Vec<i64>> {
    let v: Vec<i64> = parse_range(s).with_context(|| format!("invalid group range {s:?}"))?;
    if let Some(g) = v.iter().find(|&&g| g < 2) {
        bail!("SU({g}) is not a valid group: N must be at least 2");
    }
    Ok(v)
}

/// Resolved representation: label plus character polynomial.
fn representation(args: &RepArgs) -> anyhow::Result<(String, LaurentPolynomial)> {
    if args.group < 2 {
        bail!("SU({}) is not a valid group: N must be at least 2", args.group);
    }
    let kind = args.rep.first().map(String::as_str).unwrap_or("adjoint");
    match (kind, args.rep.get(1)) {
        ("adjoint", None) => Ok(("adjoint".into(), adjoint_character(args.group)?)),
        ("fundamental", None) => Ok(("fundamental".into(), fundamental_character(args.group)?)),
        ("weights-file", Some(path)) => {
            let path = PathBuf::from(path);
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("cannot read weight file {}", path.display()))?;
            let spec = CharacterSpec::from_json(&text)
                .with_context(|| format!("invalid weight file {}", path.display()))?;
            let rank = (args.group - 1) as usize;
            if spec.rank != rank {
                bail!(
                    "weight file {} has rank {} but SU({}) has rank {rank}",
                    path.display(),
                    spec.rank,
                    args.group
                );
            }
            let label = if spec.label.is_empty() { path.display().to_string() } else { spec.label.clone() };
            Ok((label, character_from_weights(&spec)?))
        }
        ("weights-file", None) => bail!("--rep weights-file needs a path"),
        (other, _) => bail!("unknown representation {other:?} (expected adjoint, fundamental or weights-file <PATH>)"),
    }
}

fn require(format: Format, allowed: &[Format], command: &str) -> anyhow::Result<()> {
    if !allowed.contains(&format) {
        bail!("format {format:?} is not available for `{command}`");
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .context("cannot configure thread pool")?;
    }
    let mut out = String::new();
    let ok = match cli.command {
        Command::Dim(a) => {
            require(a.format, &[Format::Text, Format::Json, Format::Csv], "dim")?;
            let (label, chi) = representation(&a.rep)?;
            let powers = parse_powers(&a.n)?;
            let max = powers.iter().copied().max().unwrap_or(0);
            let seq = power_dimension_sequence(a.rep.group, &chi, max)?;
            let rows: Vec<(usize, &BigInt)> = powers.iter().map(|&n| (n, &seq[n])).collect();
            render::dims(&mut out, a.format, a.rep.group, &label, &rows);
            true
        }
        Command::Table(a) => {
            require(a.format, &[Format::Text, Format::Json, Format::Csv], "table")?;
            let groups = parse_groups(&a.groups)?;
            let powers = parse_powers(&a.powers)?;
            let table = dimension_table(&groups, &powers)?;
            let max = powers.iter().copied().max().unwrap_or(0);
            render::table(&mut out, a.format, &table, &derangement_sequence(max));
            true
        }
        Command::Components(a) => {
            require(a.format, &[Format::Text, Format::Json, Format::Csv], "components")?;
            let powers = parse_powers(&a.n)?;
            let max = powers.iter().copied().max().unwrap_or(0);
            let all = su3_component_sequence(max)?;
            let rows: Vec<_> = powers.iter().map(|&n| all[n].clone()).collect();
            render::components(&mut out, a.format, &rows);
            true
        }
        Command::Sequence(a) => {
            let seq = match a.name {
                SequenceName::Dim => {
                    let (_, chi) = representation(&a.rep)?;
                    if a.rep.rep.first().map(String::as_str) == Some("adjoint") {
                        adjoint_dimension_sequence(a.rep.group, a.max_n)?
                    } else {
                        power_dimension_sequence(a.rep.group, &chi, a.max_n)?
                    }
                }
                SequenceName::Derangement => derangement_sequence(a.max_n),
                name => {
                    let comps = su3_component_sequence(a.max_n)?;
                    comps
                        .into_iter()
                        .map(|c| match name {
                            SequenceName::A1 => c.a1,
                            SequenceName::A2 => c.a2,
                            SequenceName::A3 => c.a3,
                            _ => c.a4,
                        })
                        .collect()
                }
            };
            render::sequence(&mut out, a.format, &seq);
            true
        }
        Command::Verify(a) => {
            require(a.format, &[Format::Text, Format::Json], "verify")?;
            let checks: Vec<Check> = if a.check == "all" {
                Check::ALL.to_vec()
            } else {
                vec![a.check.parse()?]
            };
            let mut cfg = VerifyConfig::default();
            if let Some(m) = a.max_n {
                cfg = cfg.with_max_n(m);
            }
            if let Some(t) = a.order {
                cfg.ode_order = t;
            }
            if let Some(g) = a.max_group {
                cfg.derangement_max_group = g;
            }
            let mut all_ok = true;
            for c in checks {
                let report = run_check(c, &cfg)?;
                if !report.passed() {
                    all_ok = false;
                    if let Some(d) = &report.detail {
                        eprintln!("{}: {d}", report.check);
                    }
                }
                render::report(&mut out, a.format, &report);
            }
            all_ok
        }
    };
    print!("{out}");
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
