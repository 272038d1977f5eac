use std::ffi::OsString;
use std::io::Write;

use clap::builder::PossibleValuesParser;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use monideal::families::{generate, FamilyKind, FamilySpec};
use monideal::oracle::DEFAULT_ORACLE_CAP;
use monideal::{
    big_height, depth, hochster_betti_table, is_cohen_macaulay, is_sequentially_cm,
    krull_dimension, minimal_primes, pd_oracle, polarize, projective_dimension,
    verify_main_theorem, MonomialIdeal, PrimeField, SquareFreeIdeal,
};
use rayon::prelude::*;
use serde_json::json;

use crate::error::CliError;
use crate::parse::{format_ideal, parse_ideal};
use crate::report::{BatchRow, JsonReport};

#[derive(Debug, Parser)]
#[command(
    name = "monideal",
    version,
    about = "Depth, projective dimension and sequential Cohen-Macaulayness of monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Prime characteristic of the coefficient field
    #[arg(long, global = true, default_value_t = 2)]
    pub field: u32,
    /// Emit JSON (one object per line)
    #[arg(long, global = true)]
    pub json: bool,
    /// Cross-check pd against the Hochster-formula oracle
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Largest number of variables the oracle will sweep
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,
    /// Seed for gen, first seed for batch
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Explicit variable list, including variables no generator uses
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Projective dimension of R/I
    Pd(IdealArg),
    /// Depth of R/I
    Depth(IdealArg),
    /// Krull dimension of R/I
    Dim(IdealArg),
    /// Largest height of an associated prime
    BigHeight(IdealArg),
    /// Minimal primes (of the polarization for non-square-free input)
    Primes(IdealArg),
    /// Is R/I Cohen-Macaulay?
    IsCm(IdealArg),
    /// Is R/I sequentially Cohen-Macaulay?
    IsScm(IdealArg),
    /// Multigraded Betti numbers from Hochster's formula
    Betti(IdealArg),
    /// Polarization of a monomial ideal
    Polarize(IdealArg),
    /// Every invariant plus the inequality and equality checks
    Verify(IdealArg),
    /// Generate one ideal from a family
    Gen(FamilyArgs),
    /// Verify a run of consecutive seeds from a family
    Batch {
        #[command(flatten)]
        family: FamilyArgs,
        /// Number of ideals
        #[arg(long, default_value_t = 10)]
        count: u64,
    },
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Generators such as "x1*x2, x2^2*x3"; "@path" reads them from a file
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(value_parser = PossibleValuesParser::new(FamilyKind::NAMES))]
    pub family: String,
    /// Number of variables
    #[arg(short, long)]
    pub n: usize,
    /// Largest facet size (simplicial_tree)
    #[arg(long, default_value_t = 3)]
    pub max_facet: usize,
    /// Path length in vertices (path_ideal)
    #[arg(long, default_value_t = 3)]
    pub len: usize,
    /// Number of generators before minimalization (random families) [default: n]
    #[arg(long)]
    pub gens: Option<usize>,
    /// Largest generator degree (random_squarefree) [default: min(3, n)]
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Largest exponent (random_monomial)
    #[arg(long, default_value_t = 3)]
    pub max_exp: u32,
}

impl FamilyArgs {
    fn kind(&self) -> FamilyKind {
        let gens = self.gens.unwrap_or(self.n);
        match self.family.as_str() {
            "tree" => FamilyKind::Tree,
            "forest" => FamilyKind::Forest,
            "chordal" => FamilyKind::Chordal,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "simplicial_tree" => FamilyKind::SimplicialTree {
                max_facet: self.max_facet,
            },
            "path_ideal" => FamilyKind::PathIdeal { len: self.len },
            "random_squarefree" => FamilyKind::RandomSquareFree {
                gens,
                max_degree: self.max_degree.unwrap_or(self.n.min(3)),
            },
            "random_monomial" => FamilyKind::RandomMonomial {
                gens,
                max_exp: self.max_exp,
            },
            other => unreachable!("clap restricts family names, got {other}"),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// The input ideal and the square-free ideal the computations run on.
struct Prepared {
    source: MonomialIdeal,
    target: SquareFreeIdeal,
    polarized: bool,
}

impl Prepared {
    fn new(source: MonomialIdeal) -> Self {
        match source.to_square_free() {
            Some(target) => Self {
                source,
                target,
                polarized: false,
            },
            None => {
                let target = polarize(&source).target;
                Self {
                    source,
                    target,
                    polarized: true,
                }
            }
        }
    }

    /// Number of variables polarization added. Depth and dimension drop by
    /// this much going back to the source ring; pd and big height do not.
    fn shift(&self) -> usize {
        self.target.n() - self.source.n()
    }
}

fn read_ideal_text(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn prepare(arg: &IdealArg, g: &Global, err: &mut dyn Write) -> Result<Prepared, CliError> {
    let text = read_ideal_text(&arg.ideal)?;
    let parsed = parse_ideal(&text, g.vars.as_deref())?;
    for w in &parsed.warnings {
        writeln!(err, "warning: {w}")?;
    }
    Ok(Prepared::new(parsed.ideal))
}

fn scalar(
    out: &mut dyn Write,
    json: bool,
    key: &str,
    value: serde_json::Value,
) -> Result<(), CliError> {
    if json {
        writeln!(out, "{}", json!({ key: value }))?;
    } else {
        writeln!(out, "{value}")?;
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let g = &cli.global;
    let field = PrimeField::new(g.field)?;
    let oracle_cap = g.oracle.then_some(g.oracle_cap);
    match &cli.command {
        Command::Pd(arg) => {
            let p = prepare(arg, g, err)?;
            let pd = projective_dimension(&p.target, field)?;
            if let Some(cap) = oracle_cap {
                let o = pd_oracle(&p.target, field, cap)?;
                if o != pd {
                    return Err(CliError::Invariant(format!(
                        "pd {pd} but the oracle gives {o}"
                    )));
                }
            }
            scalar(out, g.json, "pd", pd.into())
        }
        Command::Depth(arg) => {
            let p = prepare(arg, g, err)?;
            let d = depth(&p.target, field)? - p.shift();
            scalar(out, g.json, "depth", d.into())
        }
        Command::Dim(arg) => {
            let p = prepare(arg, g, err)?;
            let d = krull_dimension(&p.target) - p.shift();
            scalar(out, g.json, "dim", d.into())
        }
        Command::BigHeight(arg) => {
            let p = prepare(arg, g, err)?;
            scalar(out, g.json, "big_height", big_height(&p.target).into())
        }
        Command::Primes(arg) => {
            let p = prepare(arg, g, err)?;
            let vars = p.target.vars();
            let primes: Vec<Vec<String>> = minimal_primes(&p.target)
                .primes
                .iter()
                .map(|s| vars.names(s))
                .collect();
            if g.json {
                writeln!(out, "{}", json!({ "minimal_primes": primes }))?;
            } else {
                for prime in primes {
                    writeln!(out, "({})", prime.join(", "))?;
                }
            }
            Ok(())
        }
        Command::IsCm(arg) => {
            let p = prepare(arg, g, err)?;
            let cm = is_cohen_macaulay(&p.target.stanley_reisner_complex(), field)?;
            scalar(out, g.json, "is_cm", cm.into())
        }
        Command::IsScm(arg) => {
            let p = prepare(arg, g, err)?;
            scalar(
                out,
                g.json,
                "is_scm",
                is_sequentially_cm(&p.target, field)?.into(),
            )
        }
        Command::Betti(arg) => {
            let p = prepare(arg, g, err)?;
            let table = hochster_betti_table(&p.target, field, g.oracle_cap)?;
            let vars = p.target.vars();
            if g.json {
                let totals: Vec<usize> = (0..=table.pd()).map(|i| table.total(i)).collect();
                let entries: Vec<_> = table
                    .entries()
                    .map(|(i, sigma, b)| json!({ "i": i, "multidegree": vars.names(sigma), "value": b }))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "field": table.field_p(), "pd": table.pd(), "totals": totals, "entries": entries })
                )?;
            } else {
                for i in 0..=table.pd() {
                    writeln!(out, "beta_{i} = {}", table.total(i))?;
                    for (j, sigma, b) in table.entries().filter(|(j, _, _)| *j == i) {
                        debug_assert_eq!(j, i);
                        writeln!(out, "  {}: {b}", vars.monomial(sigma))?;
                    }
                }
            }
            Ok(())
        }
        Command::Polarize(arg) => {
            let p = prepare(arg, g, err)?;
            let target = MonomialIdeal::from_square_free(&p.target);
            if g.json {
                let vars = p.target.vars();
                let gens: Vec<Vec<String>> = p
                    .target
                    .generators()
                    .iter()
                    .map(|s| vars.names(s))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "variables": vars.labels(), "generators": gens })
                )?;
            } else {
                writeln!(out, "{}", format_ideal(&target))?;
            }
            Ok(())
        }
        Command::Verify(arg) => {
            let p = prepare(arg, g, err)?;
            let report = verify_main_theorem(&p.target, field, oracle_cap)?;
            let ok = report.all_ok();
            let record = JsonReport::new(&p.target, report, p.polarized);
            if g.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&record).expect("reports serialize")
                )?;
            } else {
                write!(out, "{}", record.to_text())?;
            }
            if ok {
                Ok(())
            } else {
                Err(CliError::Invariant("a theorem check failed".to_string()))
            }
        }
        Command::Gen(family) => {
            reject_vars(g)?;
            let spec = FamilySpec::new(family.kind(), family.n, g.seed);
            let ideal = generate(&spec)?.into_monomial();
            if g.json {
                let gens: Vec<String> = (0..ideal.generators().len())
                    .map(|k| ideal.monomial(k))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "kind": family.family, "seed": g.seed, "variables": ideal.vars().labels(), "generators": gens })
                )?;
            } else {
                writeln!(out, "{}", format_ideal(&ideal))?;
            }
            Ok(())
        }
        Command::Batch { family, count } => {
            reject_vars(g)?;
            let kind = family.kind();
            let seeds: Vec<u64> = (0..*count).map(|k| g.seed.wrapping_add(k)).collect();
            let rows: Vec<Result<(BatchRow, bool), CliError>> = seeds
                .par_iter()
                .map(|&seed| {
                    let ideal = generate(&FamilySpec::new(kind, family.n, seed))?.into_monomial();
                    let p = Prepared::new(ideal);
                    let report = verify_main_theorem(&p.target, field, oracle_cap)?;
                    let ok = report.all_ok();
                    Ok((
                        BatchRow::new(&family.family, seed, p.source.generators().len(), &report),
                        ok,
                    ))
                })
                .collect();
            write_batch(out, g.json, rows)
        }
    }
}

fn reject_vars(g: &Global) -> Result<(), CliError> {
    match g.vars {
        Some(_) => Err(CliError::Input(
            "--vars applies only to commands that read an ideal".to_string(),
        )),
        None => Ok(()),
    }
}

fn write_batch(
    out: &mut dyn Write,
    json: bool,
    rows: Vec<Result<(BatchRow, bool), CliError>>,
) -> Result<(), CliError> {
    let mut failed = Vec::new();
    let mut csv_out = (!json).then(|| csv::Writer::from_writer(Vec::new()));
    for row in rows {
        let (row, ok) = row?;
        if !ok {
            failed.push(row.seed);
        }
        match csv_out.as_mut() {
            Some(w) => w.serialize(&row).map_err(|e| CliError::Io(e.into()))?,
            None => writeln!(
                out,
                "{}",
                serde_json::to_string(&row).expect("rows serialize")
            )?,
        }
    }
    if let Some(w) = csv_out {
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        out.write_all(&bytes)?;
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Invariant(format!(
            "theorem checks failed for seeds {failed:?}"
        )))
    }
}
