//! The `ffdim` command line.
//!
//! Exit codes: 0 success, 1 the two dimension computations disagree,
//! 2 input error, 3 a Gröbner basis computation ran out of time.

pub mod document;
pub mod generate;
pub mod report;

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::Rng;
use rayon::prelude::*;

use crate::complexes::{koszul_complex, FiniteFreeComplex};
use crate::dimform::{codimension_from, dim_dual_via_fitting_with, dim_via_fitting_with, DimReport};
use crate::error::Error;
use crate::groebner::Budget;
use crate::homoracle::homology_table_with;
use crate::polyring::{CoefficientField, MonomialOrder, PolyRing};

pub use document::{parse_document, parse_input, render_document, ComplexDocument};
pub use generate::{random_complex, seeded, RandomSpec};
pub use report::{build_report, ReportJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ffdim", version, about = "Dimensions of finite free complexes over polynomial rings")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Override the document's monomial order.
    #[arg(long)]
    order: Option<MonomialOrder>,
    /// Time budget per Gröbner basis computation.
    #[arg(long = "timeout-ms")]
    timeout_ms: Option<u64>,
}

impl Common {
    fn budget(&self) -> Budget {
        self.timeout_ms
            .map_or(Budget::unlimited(), |ms| Budget::limited(Duration::from_millis(ms)))
    }
}

#[derive(Args, Debug, Clone)]
struct RandomArgs {
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 2)]
    maxdeg: u32,
    #[arg(long, default_value_t = 3)]
    maxrank: usize,
    #[arg(long, default_value_t = 4)]
    len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Only graded building blocks.
    #[arg(long)]
    homogeneous: bool,
}

impl RandomArgs {
    fn params(&self) -> RandomSpec {
        RandomSpec {
            vars: self.vars,
            maxdeg: self.maxdeg,
            maxrank: self.maxrank,
            len: self.len,
            homogeneous: self.homogeneous,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of a complex from the ideals of minors of its differentials.
    Dim {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of the dual complex and the codimension `dim R - dim Hom(F, R)`.
    Codim {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Homology modules and their dimensions.
    Homology {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the minor formula with the homology computation.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[command(flatten)]
        random_args: RandomArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Write a complex document.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file; standard output if omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Full report on a complex.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Skip the homology computation and the bounds that depend on it.
        #[arg(long)]
        no_homology: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// The Koszul complex on the given polynomials.
    Koszul {
        #[arg(required = true)]
        polys: Vec<String>,
        /// Number of variables; inferred from the polynomials if omitted.
        #[arg(long)]
        vars: Option<usize>,
        /// `QQ` or `Fp(<prime>)`.
        #[arg(long, default_value = "Fp(32003)")]
        field: String,
        #[arg(long)]
        order: Option<MonomialOrder>,
        #[arg(long)]
        name: Option<String>,
    },
    /// A random complex.
    Random {
        #[command(flatten)]
        args: RandomArgs,
        #[arg(long)]
        name: Option<String>,
    },
}

/// Runs the command line with the given arguments (including the program
/// name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Timeout => EXIT_TIMEOUT,
                _ => EXIT_INPUT,
            }
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn load(file: &PathBuf, common: &Common) -> Result<ComplexDocument, Error> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
    let mut doc = parse_document(&text)?;
    if let Some(order) = common.order {
        doc.complex = doc.complex.with_order(order);
    }
    Ok(doc)
}

fn term_table(out: &mut dyn Write, report: &DimReport, label: &str, range: (i64, i64)) -> std::io::Result<()> {
    writeln!(out, "{:>4}  {:>4}  {:>6}  {:>8}  {:>6}", "n", label, "minors", "dim R/I", "term")?;
    for t in report.per_degree.iter().filter(|t| t.degree >= range.0 && t.degree <= range.1) {
        writeln!(
            out,
            "{:>4}  {:>4}  {:>6}  {:>8}  {:>6}",
            t.degree,
            t.minor_size,
            t.generators,
            t.quotient_dim.to_string(),
            t.term.to_string()
        )?;
    }
    Ok(())
}

fn json_line<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Dim { file, json, common } => {
            let doc = load(&file, &common)?;
            let c = &doc.complex;
            let rep = dim_via_fitting_with(c, common.budget())?;
            if json {
                json_line(out, &rep)?;
            } else {
                writeln!(out, "dim = {}", rep.result).map_err(io)?;
                if !c.is_empty() {
                    term_table(out, &rep, "s_n", (c.low(), c.high())).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Codim { file, json, common } => {
            let doc = load(&file, &common)?;
            let c = &doc.complex;
            let rep = dim_dual_via_fitting_with(c, common.budget())?;
            let codim = codimension_from(c, rep.result);
            if json {
                #[derive(serde::Serialize)]
                struct Codim<'a> {
                    dim_dual: crate::krull::ExtendedDim,
                    bh_codim: crate::krull::ExtendedDim,
                    per_degree_terms: &'a DimReport,
                }
                json_line(out, &Codim { dim_dual: rep.result, bh_codim: codim, per_degree_terms: &rep })?;
            } else {
                writeln!(out, "dim_dual = {}, bh_codim = {}", rep.result, codim).map_err(io)?;
                if !c.is_empty() {
                    term_table(out, &rep, "r_n", (c.low(), c.high() + 1)).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Homology { file, json, common } => {
            let doc = load(&file, &common)?;
            let table = homology_table_with(&doc.complex, common.budget())?;
            if json {
                json_line(out, &report::homology_json(&table))?;
            } else {
                for h in &table.degrees {
                    writeln!(
                        out,
                        "H_{}: {} generators, {} relations, dim {}",
                        h.degree,
                        h.presentation.generator_count,
                        h.presentation.relations.cols(),
                        h.dim
                    )
                    .map_err(io)?;
                }
                writeln!(out, "inf H = {}, sup H = {}", table.inf(), table.sup()).map_err(io)?;
                writeln!(out, "dim = {}", table.dimension()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            file,
            random,
            count,
            random_args,
            common,
        } => {
            if random {
                verify_random(count, &random_args, &common, out, err)
            } else {
                let file = file.expect("clap requires a file without --random");
                let doc = load(&file, &common)?;
                let outcome = verify_one(&doc.complex, common.budget())?;
                writeln!(out, "fitting = {}, homology = {}", outcome.0, outcome.1).map_err(io)?;
                if outcome.0 == outcome.1 {
                    writeln!(out, "agree").map_err(io)?;
                    Ok(EXIT_OK)
                } else {
                    writeln!(out, "MISMATCH").map_err(io)?;
                    out.write_all(render_document(&doc.complex, doc.name.as_deref()).as_bytes()).map_err(io)?;
                    Ok(EXIT_MISMATCH)
                }
            }
        }
        Command::Gen { kind, output } => {
            let text = match kind {
                GenKind::Koszul {
                    polys,
                    vars,
                    field,
                    order,
                    name,
                } => {
                    let ring = koszul_ring(&polys, vars, &field, order.unwrap_or_default())?;
                    let f = polys
                        .iter()
                        .map(|p| ring.parse(p).map_err(Error::from))
                        .collect::<Result<Vec<_>, _>>()?;
                    let c = koszul_complex(&ring, &f)?;
                    render_document(&c, name.as_deref())
                }
                GenKind::Random { args, name } => {
                    let params = args.params();
                    let c = random_complex(&params.ring(), &params, &mut seeded(args.seed));
                    render_document(&c, name.as_deref())
                }
            };
            match output {
                Some(path) => std::fs::write(&path, text).map_err(io)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Report {
            file,
            json,
            no_homology,
            common,
        } => {
            let doc = load(&file, &common)?;
            let rep = build_report(&doc.complex, doc.name.as_deref(), !no_homology, common.budget())?;
            if json {
                json_line(out, &rep)?;
            } else {
                writeln!(out, "ring      {}", rep.ring).map_err(io)?;
                if let Some(name) = &rep.complex_name {
                    writeln!(out, "name      {name}").map_err(io)?;
                }
                writeln!(out, "dim       {}", rep.dim).map_err(io)?;
                writeln!(out, "dim_dual  {}", rep.dim_dual).map_err(io)?;
                writeln!(out, "bh_codim  {}", rep.bh_codim).map_err(io)?;
                writeln!(out, "acyclic   {}", rep.acyclic).map_err(io)?;
                if let Some(b) = &rep.bounds {
                    writeln!(out, "inf H     {}", b.inf_homology).map_err(io)?;
                    writeln!(out, "sup H     {}", b.sup_homology).map_err(io)?;
                    writeln!(out, "bounds    {}", if b.asserted_bounds_hold() { "hold" } else { "VIOLATED" })
                        .map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// `(dim via minors, dim via homology)`.
pub fn verify_one(
    c: &FiniteFreeComplex,
    budget: Budget,
) -> Result<(crate::krull::ExtendedDim, crate::krull::ExtendedDim), Error> {
    let fitting = dim_via_fitting_with(c, budget)?.result;
    let homology = homology_table_with(c, budget)?.dimension();
    Ok((fitting, homology))
}

/// Seeds for `count` random complexes derived from one master seed.
pub fn derived_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = seeded(seed);
    (0..count).map(|_| rng.gen()).collect()
}

fn verify_random(
    count: usize,
    args: &RandomArgs,
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let params = args.params();
    let ring = params.ring().with_order(common.order.unwrap_or_default());
    let budget = common.budget();
    let outcomes: Vec<_> = derived_seeds(args.seed, count)
        .into_par_iter()
        .map(|s| {
            let c = random_complex(&ring, &params, &mut seeded(s));
            let r = verify_one(&c, budget);
            (s, c, r)
        })
        .collect();
    let mut agree = 0;
    let mut timeouts = 0;
    for (s, c, r) in &outcomes {
        match r {
            Ok((a, b)) if a == b => agree += 1,
            Ok((a, b)) => {
                writeln!(out, "mismatch (seed {s}): fitting = {a}, homology = {b}").map_err(io)?;
                out.write_all(render_document(c, Some(&format!("seed_{s}"))).as_bytes()).map_err(io)?;
            }
            Err(Error::Timeout) => {
                timeouts += 1;
                writeln!(err, "timeout (seed {s})").map_err(io)?;
            }
            Err(e) => return Err(e.clone()),
        }
    }
    writeln!(out, "{agree}/{count} agree").map_err(io)?;
    Ok(if agree == count {
        EXIT_OK
    } else if agree + timeouts == count {
        EXIT_TIMEOUT
    } else {
        EXIT_MISMATCH
    })
}

/// Ring for `gen koszul`: standard names for `--vars`, otherwise the
/// identifiers occurring in the polynomials.
fn koszul_ring(polys: &[String], vars: Option<usize>, field: &str, order: MonomialOrder) -> Result<PolyRing, Error> {
    let field = parse_field(field)?;
    let names = match vars {
        Some(n) => generate::variable_names(n),
        None => {
            let mut found: Vec<String> = Vec::new();
            for p in polys {
                let mut ident = String::new();
                for ch in p.chars().chain([' ']) {
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        ident.push(ch);
                    } else {
                        if ident.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') && !found.contains(&ident) {
                            found.push(ident.clone());
                        }
                        ident.clear();
                    }
                }
            }
            let standard = generate::variable_names(8);
            found.sort_by_key(|v| standard.iter().position(|s| s == v).unwrap_or(usize::MAX));
            if found.is_empty() {
                found.push("x".into());
            }
            found
        }
    };
    PolyRing::new(field, names, order)
}

fn parse_field(text: &str) -> Result<CoefficientField, Error> {
    let text = text.trim();
    if text == "QQ" {
        return Ok(CoefficientField::Rationals);
    }
    let p = text
        .strip_prefix("Fp(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.trim().parse::<u64>().ok())
        .ok_or_else(|| Error::InvalidRing(format!("unknown field `{text}`")))?;
    CoefficientField::prime(p)
}
