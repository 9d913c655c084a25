//! Command-line front end.
//!
//! Every command produces flat key/value records. `--machine` prints one
//! record per line as tab-separated `key=value` pairs; the default prints
//! aligned text. Diagnostics go to the error stream only.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 disagreement
//! between the criterion and an independent check.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::ext_field::{self, FieldSpec};
use crate::oracle;
use crate::polynomial;
use crate::power_residues as pr;
use crate::prime_field::PrimeModulus;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ffpow", version, about = "Power residues in finite fields F_q")]
struct Cli {
    /// One tab-separated key=value record per line.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

fn positive() -> clap::builder::RangedU64ValueParser<u64> {
    clap::value_parser!(u64).range(1..)
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct F_{p^n} and print its descriptor.
    Field {
        p: u64,
        n: usize,
        /// Monic irreducible modulus, e.g. "t^3+2*t+11".
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Decide whether an element is an r-th power.
    IsPower {
        #[arg(long)]
        field: String,
        #[arg(long)]
        element: String,
        #[arg(long = "r", value_parser = positive())]
        r: u64,
        /// Cross-check against a brute-force scan.
        #[arg(long)]
        oracle: bool,
    },
    /// Count the r-th powers among the units.
    Count {
        #[arg(long)]
        field: String,
        #[arg(long = "r", value_parser = positive())]
        r: u64,
    },
    /// List the r-th powers among the units.
    Table {
        #[arg(long)]
        field: String,
        #[arg(long = "r", value_parser = positive())]
        r: u64,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Extract the canonical r-th root.
    Root {
        #[arg(long)]
        field: String,
        #[arg(long)]
        element: String,
        #[arg(long = "r", value_parser = positive())]
        r: u64,
    },
    /// Check x^q - x = h(x)(x^r - a) + c x by long division.
    VerifyIdentity {
        #[arg(long)]
        field: String,
        #[arg(long)]
        element: String,
        #[arg(long = "r", value_parser = positive())]
        r: u64,
    },
    /// Is the constant c an r-th power in F_{p^n}, for n = 1..max-n?
    Tower {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: i64,
        #[arg(long = "r", value_parser = positive())]
        r: u64,
        #[arg(long = "max-n", value_parser = positive())]
        max_n: u64,
    },
}

/// Ordered key/value pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OutputRecord(Vec<(String, String)>);

impl OutputRecord {
    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn to_machine_line(&self) -> String {
        self.0
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join("\t")
    }
}

enum Output {
    Single(OutputRecord),
    Rows(Vec<OutputRecord>),
}

struct Outcome {
    output: Output,
    code: i32,
}

impl From<OutputRecord> for Outcome {
    fn from(r: OutputRecord) -> Self {
        Outcome {
            output: Output::Single(r),
            code: EXIT_OK,
        }
    }
}

fn render(output: &Output, machine: bool, out: &mut dyn Write) -> io::Result<()> {
    let records: &[OutputRecord] = match output {
        Output::Single(r) => std::slice::from_ref(r),
        Output::Rows(rows) => rows,
    };
    if machine {
        for r in records {
            writeln!(out, "{}", r.to_machine_line())?;
        }
        return Ok(());
    }
    match output {
        Output::Single(r) => {
            let width = r.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &r.0 {
                writeln!(out, "{k:<width$}  {v}")?;
            }
        }
        Output::Rows(rows) => {
            let Some(first) = rows.first() else {
                return Ok(());
            };
            let widths: Vec<usize> = first
                .0
                .iter()
                .enumerate()
                .map(|(i, (k, _))| {
                    rows.iter()
                        .map(|r| r.0[i].1.len())
                        .chain([k.len()])
                        .max()
                        .unwrap()
                })
                .collect();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(first.0.iter().map(|(k, _)| k.as_str()).collect()))?;
            for r in rows {
                writeln!(out, "{}", line(r.0.iter().map(|(_, v)| v.as_str()).collect()))?;
            }
        }
    }
    Ok(())
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn opt_text(e: Option<&ext_field::FieldElement>) -> String {
    e.map_or_else(|| "NONE".to_string(), |x| x.to_string())
}

fn parse_field_arg(text: &str) -> crate::Result<FieldSpec> {
    ext_field::parse_field(text)
}

fn cmd_field(p: u64, n: usize, modulus: Option<String>) -> crate::Result<Outcome> {
    let explicit = modulus.is_some();
    let m = modulus
        .map(|m| polynomial::parse_poly(PrimeModulus::new(p)?, &m))
        .transpose()?;
    let spec = ext_field::make_field(p, n, m)?;
    Ok(OutputRecord::default()
        .with("field", spec.descriptor())
        .with("p", spec.p())
        .with("n", spec.degree())
        .with("q", spec.q())
        .with("modulus", spec.modulus())
        .with("modulus_source", if explicit { "explicit" } else { "default" })
        .into())
}

fn cmd_is_power(field: &str, element: &str, r: u64, with_oracle: bool) -> crate::Result<Outcome> {
    let spec = parse_field_arg(field)?;
    let a = ext_field::parse_element(&spec, element)?;
    let rep = pr::is_rth_power(&a, r)?;
    let mut rec = OutputRecord::default()
        .with("field", spec.descriptor())
        .with("element", &rep.a)
        .with("r", rep.r)
        .with("d", rep.d)
        .with("euler_value", &rep.euler_value)
        .with("is_power", rep.is_power)
        .with("num_roots", rep.num_roots)
        .with("canonical_root", opt_text(rep.canonical_root.as_ref()));
    let mut code = EXIT_OK;
    if with_oracle {
        let roots = oracle::brute_roots(&spec, &a, r)?;
        let oracle_is_power = !roots.is_empty();
        let agree = oracle_is_power == rep.is_power
            && roots.len() as u64 == rep.num_roots
            && roots.first() == rep.canonical_root.as_ref();
        rec = rec
            .with("oracle_is_power", oracle_is_power)
            .with("oracle_num_roots", roots.len())
            .with("oracle_root", opt_text(roots.first()))
            .with("oracle", if agree { "AGREE" } else { "DISAGREE" });
        if !agree {
            code = EXIT_DISAGREE;
        }
    }
    Ok(Outcome {
        output: Output::Single(rec),
        code,
    })
}

fn cmd_count(field: &str, r: u64) -> crate::Result<Outcome> {
    let spec = parse_field_arg(field)?;
    let count = pr::count_rth_powers(&spec, r)?;
    let mut rec = OutputRecord::default()
        .with("field", spec.descriptor())
        .with("r", r)
        .with("total", count.total);
    if let Some(nontrivial) = count.nontrivial_squares {
        rec = rec.with("nontrivial", nontrivial);
        if count.outside_odd_hypothesis {
            rec = rec.with("note", "characteristic-2-squaring-is-bijective");
        }
    }
    Ok(rec.into())
}

fn cmd_table(field: &str, r: u64, limit: Option<usize>) -> crate::Result<Outcome> {
    let spec = parse_field_arg(field)?;
    let powers = pr::list_rth_powers(&spec, r)?;
    let rows = powers
        .iter()
        .take(limit.unwrap_or(usize::MAX))
        .map(|e| {
            OutputRecord::default()
                .with("index", e.index().0)
                .with("element", e)
        })
        .collect();
    Ok(Outcome {
        output: Output::Rows(rows),
        code: EXIT_OK,
    })
}

fn cmd_root(field: &str, element: &str, r: u64) -> crate::Result<Outcome> {
    let spec = parse_field_arg(field)?;
    let a = ext_field::parse_element(&spec, element)?;
    let res = pr::rth_root(&a, r)?;
    Ok(OutputRecord::default()
        .with("field", spec.descriptor())
        .with("element", &a)
        .with("r", r)
        .with("canonical_root", opt_text(res.canonical_root.as_ref()))
        .with("root_count", res.count)
        .into())
}

fn cmd_verify_identity(field: &str, element: &str, r: u64) -> crate::Result<Outcome> {
    let spec = parse_field_arg(field)?;
    let a = ext_field::parse_element(&spec, element)?;
    let id = pr::euler_division_identity(&a, r)?;
    let verdict = pr::is_rth_power(&a, r)?.is_power;
    let consistent = id.remainder_coeff.is_zero() == verdict;
    let verified = match id.verified {
        Some(true) => "true",
        Some(false) => "false",
        None => "skipped",
    };
    let rec = OutputRecord::default()
        .with("field", spec.descriptor())
        .with("element", &a)
        .with("r", r)
        .with("h", &id)
        .with("remainder_coeff", &id.remainder_coeff)
        .with("verified", verified)
        .with("is_power", verdict);
    let code = if id.verified == Some(false) || !consistent {
        EXIT_DISAGREE
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        output: Output::Single(rec),
        code,
    })
}

fn cmd_tower(p: u64, c: i64, r: u64, max_n: u64) -> crate::Result<Outcome> {
    let prime = PrimeModulus::new(p)?;
    let residue = prime.residue(prime.reduce_i128(c as i128));
    let rows = (1..=max_n)
        .map(|n| {
            let is_power = pr::constant_power_in_extension(prime, residue, n, r)?;
            Ok(OutputRecord::default()
                .with("p", p)
                .with("c", residue)
                .with("r", r)
                .with("n", n)
                .with("is_power", is_power))
        })
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(Outcome {
        output: Output::Rows(rows),
        code: EXIT_OK,
    })
}

fn dispatch(command: Command) -> crate::Result<Outcome> {
    match command {
        Command::Field { p, n, modulus } => cmd_field(p, n, modulus),
        Command::IsPower {
            field,
            element,
            r,
            oracle,
        } => cmd_is_power(&field, &element, r, oracle),
        Command::Count { field, r } => cmd_count(&field, r),
        Command::Table { field, r, limit } => cmd_table(&field, r, limit),
        Command::Root { field, element, r } => cmd_root(&field, &element, r),
        Command::VerifyIdentity { field, element, r } => cmd_verify_identity(&field, &element, r),
        Command::Tower { p, c, r, max_n } => cmd_tower(p, c, r, max_n),
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            if let Err(e) = render(&outcome.output, cli.machine, out) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_DOMAIN;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}
