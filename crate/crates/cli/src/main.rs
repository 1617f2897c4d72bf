//! `greenbox`: egg-box diagrams, generalized inverses and theorem sweeps for
//! finite semigroups read from text files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use greenbox::verify::{enumerate_semigroups, MAX_ORDER};
use greenbox::{
    drazin_inverse, green_relations, group_inverse, inverse_along, moore_penrose, parse_semigroup,
    render_eggbox, run_checks, sweep_orders, CheckId, Error, GreenStructure, Semigroup,
    SemigroupFile, StarSemigroup,
};

const EXIT_NONE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_UNKNOWN_ELEMENT: u8 = 4;
const EXIT_NO_INVOLUTION: u8 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "greenbox",
    version,
    about = "Green's relations and generalized inverses in finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the egg-box diagram of every D-class
    Eggbox { file: PathBuf },
    /// Inverse of an element along another
    Inverse {
        file: PathBuf,
        /// Element to invert (label or #index)
        #[arg(long = "a")]
        a: String,
        /// Element to invert along
        #[arg(long)]
        along: String,
    },
    /// Group inverse
    Group(Classical),
    /// Drazin inverse and its index
    Drazin(Classical),
    /// Moore-Penrose inverse (the file needs an involution section)
    Mp(Classical),
    /// Run the theorem checks on a file or on all small semigroups
    Verify {
        #[arg(conflicts_with_all = ["order", "deep"])]
        file: Option<PathBuf>,
        /// Sweep every semigroup of order up to N (at most 3 without --deep)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        order: Option<u8>,
        /// Include order 4 in the sweep
        #[arg(long)]
        deep: bool,
        /// Restrict to the named checks
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<CheckId>,
    },
    /// List every labeled semigroup of the given order in table format
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        order: u8,
        /// Print only the number of tables
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Args)]
struct Classical {
    file: PathBuf,
    #[arg(long = "a")]
    a: String,
}

fn parse_check(s: &str) -> Result<CheckId, String> {
    CheckId::parse(s).ok_or_else(|| {
        let names: Vec<&str> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
        format!("unknown check; expected one of {}", names.join(", "))
    })
}

/// A failed invocation: exit code plus message for standard error.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::UnknownElement(_) => EXIT_UNKNOWN_ELEMENT,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

struct Loaded {
    semigroup: Semigroup,
    star: Option<StarSemigroup>,
    green: GreenStructure,
}

impl Loaded {
    fn element(&self, name: &str) -> Result<greenbox::ElementId, Failure> {
        Ok(self.semigroup.resolve(name)?)
    }

    fn label(&self, x: greenbox::ElementId) -> &str {
        self.semigroup.label(x)
    }
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let file: SemigroupFile =
        parse_semigroup(&text).map_err(|e| Failure::from(e).prefixed(path))?;
    let star = file.star().map_err(|e| Failure::from(e).prefixed(path))?;
    let green = green_relations(&file.semigroup);
    Ok(Loaded {
        semigroup: file.semigroup,
        star,
        green,
    })
}

impl Failure {
    fn prefixed(mut self, path: &Path) -> Self {
        self.message = format!("{}: {}", path.display(), self.message);
        self
    }
}

/// Output text and exit code of a successful invocation.
type Outcome = (String, u8);

fn found_or_none(found: Option<String>) -> Outcome {
    match found {
        Some(line) => (line + "\n", 0),
        None => ("none\n".to_string(), EXIT_NONE),
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Eggbox { file } => {
            let l = load(&file)?;
            Ok((render_eggbox(&l.semigroup, &l.green), 0))
        }
        Command::Inverse { file, a, along } => {
            let l = load(&file)?;
            let (a, d) = (l.element(&a)?, l.element(&along)?);
            let r = inverse_along(&l.semigroup, &l.green, a, d);
            Ok(found_or_none(r.map(|r| {
                format!(
                    "{} inner={} e={} f={} (ad)#={} d(ad)#={}",
                    l.label(r.b),
                    r.inner,
                    l.label(r.e_witness),
                    l.label(r.f_witness),
                    l.label(r.group_witness),
                    l.label(l.semigroup.mul(d, r.group_witness)),
                )
            })))
        }
        Command::Group(c) => {
            let l = load(&c.file)?;
            let a = l.element(&c.a)?;
            let r = group_inverse(&l.semigroup, &l.green, a);
            Ok(found_or_none(r.map(|b| l.label(b).to_string())))
        }
        Command::Drazin(c) => {
            let l = load(&c.file)?;
            let a = l.element(&c.a)?;
            let r = drazin_inverse(&l.semigroup, &l.green, a);
            Ok(found_or_none(
                r.map(|r| format!("{} m={}", l.label(r.b), r.index)),
            ))
        }
        Command::Mp(c) => {
            let l = load(&c.file)?;
            let a = l.element(&c.a)?;
            let star = l.star.as_ref().ok_or_else(|| {
                Failure::new(
                    EXIT_NO_INVOLUTION,
                    format!(
                        "{}: Moore-Penrose inverse needs an involution section",
                        c.file.display()
                    ),
                )
            })?;
            let r = moore_penrose(star, &l.green, a);
            Ok(found_or_none(r.map(|b| l.label(b).to_string())))
        }
        Command::Verify {
            file,
            order,
            deep,
            checks,
        } => {
            let checks = if checks.is_empty() {
                CheckId::ALL.to_vec()
            } else {
                checks
            };
            let report = match file {
                Some(path) => {
                    let l = load(&path)?;
                    run_checks(&l.semigroup, &checks, l.star.as_ref())
                }
                None => {
                    let max = match (order, deep) {
                        (Some(4), false) => {
                            return Err(Failure::new(EXIT_PARSE, "order 4 sweeps require --deep"))
                        }
                        (Some(n), _) => n as usize,
                        (None, true) => MAX_ORDER,
                        (None, false) => 3,
                    };
                    sweep_orders(max, &checks)?
                }
            };
            let code = if report.passed() { 0 } else { EXIT_NONE };
            Ok((report.render(), code))
        }
        Command::Enumerate { order, count } => {
            let all = enumerate_semigroups(order as usize)?;
            if count {
                return Ok((format!("{}\n", all.len()), 0));
            }
            let blocks: Vec<String> = all.iter().map(Semigroup::to_cayley_text).collect();
            Ok((blocks.join("\n"), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("greenbox: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
