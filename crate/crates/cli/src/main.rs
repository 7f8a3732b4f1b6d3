//! Command line front end: counting, enumeration, classification,
//! factorization and rank certification for directed path monoids.
//!
//! Exit codes: 0 success, 1 domain failure (non-member input, failed
//! verification), 2 usage error (bad arguments, unparsable input, size
//! caps). A closed output pipe ends the run quietly with code 0.

mod output;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dipath::{generators, wend, Error, PathTransformation};
use output::{Emitter, Format, Record, Value};

/// Default cap for counting commands; the counts are exact big integers,
/// the cap only keeps accidental huge loops out.
const COUNT_CAP: usize = 64;
/// Default cap for full enumeration; at n the monoid has (n+1) 2^(n-2)
/// elements.
const ENUMERATE_CAP: usize = 8;
/// Default cap for closure computation inside rank certification.
const CLOSURE_CAP: usize = 8;

#[derive(Parser)]
#[command(
    name = "dipath",
    version,
    about = "Explore the endomorphism monoid of the directed path"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Replace the command's default cap on n
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    /// Ignore all caps on n
    #[arg(long, global = true)]
    allow_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the weak endomorphisms and the idempotents among them
    Count {
        /// Number of path vertices
        n: usize,
        /// Also evaluate the closed form (n+1) * 2^(n-2), defined for n >= 2
        #[arg(long)]
        closed_form: bool,
    },
    /// List every weak endomorphism with its encoding and flags
    Enumerate {
        /// Number of path vertices
        n: usize,
    },
    /// Report the class memberships of transformations
    Classify {
        /// Transformation like "[1,2,2]"; omitted means one per stdin line
        transformation: Option<String>,
    },
    /// Write transformations as words over the canonical generators
    Factorize {
        /// Transformation like "[1,2,2]"; omitted means one per stdin line
        transformation: Option<String>,
    },
    /// Certify that the monoid needs exactly n-1 generators
    VerifyRank {
        /// Number of path vertices, at least 3
        n: usize,
    },
    /// Print the count table for 1..=n
    Table {
        /// Largest number of path vertices
        n: usize,
    },
}

enum Failure {
    /// Bad invocation or unparsable input: exit 2.
    Usage(String),
    /// Valid invocation, negative answer: exit 1.
    Domain(String),
    /// Output pipe closed early: exit 0 without noise.
    Pipe,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Pipe
        } else {
            Failure::Domain(format!("cannot write output: {e}"))
        }
    }
}

struct Limits {
    max_n: Option<usize>,
    allow_large: bool,
}

impl Limits {
    fn check(&self, n: usize, what: &str, default_cap: usize) -> Result<(), Failure> {
        if self.allow_large {
            return Ok(());
        }
        let cap = self.max_n.unwrap_or(default_cap);
        if n > cap {
            return Err(Failure::Usage(format!(
                "n={n} exceeds the {what} cap {cap}; raise it with --max-n or --allow-large"
            )));
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut emitter = Emitter::new(cli.format, stdout.lock());
    let limits = Limits {
        max_n: cli.max_n,
        allow_large: cli.allow_large,
    };
    match run(cli.command, &limits, &mut emitter) {
        Ok(()) | Err(Failure::Pipe) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run<W: Write>(
    command: Command,
    limits: &Limits,
    emitter: &mut Emitter<W>,
) -> Result<(), Failure> {
    match command {
        Command::Count { n, closed_form } => count(n, closed_form, limits, emitter),
        Command::Enumerate { n } => enumerate(n, limits, emitter),
        Command::Classify { transformation } => classify(transformation, emitter),
        Command::Factorize { transformation } => factorize(transformation, emitter),
        Command::VerifyRank { n } => verify_rank(n, limits, emitter),
        Command::Table { n } => table(n, limits, emitter),
    }
}

fn require_positive(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    Ok(())
}

fn count<W: Write>(
    n: usize,
    closed_form: bool,
    limits: &Limits,
    emitter: &mut Emitter<W>,
) -> Result<(), Failure> {
    require_positive(n)?;
    limits.check(n, "counting", COUNT_CAP)?;
    let total = wend::count(n);
    let mut record: Record = vec![
        ("n", Value::Int(n)),
        ("wend", Value::Big(total.to_string())),
        (
            "idempotents",
            Value::Big(wend::count_idempotents(n).to_string()),
        ),
    ];
    if closed_form {
        let closed = wend::count_closed_form(n).ok_or_else(|| {
            Failure::Usage("the closed form needs n >= 2; n=1 only has the summation".into())
        })?;
        record.push(("closed_form", Value::Big(closed.to_string())));
        record.push(("agrees", Value::Flag(closed == total)));
    }
    emitter.emit(&record)?;
    Ok(())
}

fn enumerate<W: Write>(n: usize, limits: &Limits, emitter: &mut Emitter<W>) -> Result<(), Failure> {
    require_positive(n)?;
    limits.check(n, "enumeration", ENUMERATE_CAP)?;
    for f in wend::enumerate(n) {
        let code = f.encode().expect("enumerated maps are members");
        let parts = code
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let record: Record = vec![
            ("images", Value::Text(f.to_string())),
            ("offset", Value::Int(code.offset())),
            ("composition", Value::Text(parts)),
            ("rank", Value::Int(f.rank())),
            ("idempotent", Value::Flag(f.is_idempotent())),
            (
                "regular",
                Value::Flag(f.is_regular().expect("enumerated maps are members")),
            ),
        ];
        emitter.emit(&record)?;
    }
    Ok(())
}

/// The positional argument if given, otherwise nonempty trimmed stdin lines.
fn gather_inputs(argument: Option<String>) -> Result<Vec<String>, Failure> {
    let inputs = match argument {
        Some(text) => vec![text],
        None => io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?
            .into_iter()
            .map(|line| line.trim().to_string())
            .filter(|line| !line.is_empty())
            .collect(),
    };
    if inputs.is_empty() {
        return Err(Failure::Usage(
            "no transformation given; pass one as an argument or one per stdin line".into(),
        ));
    }
    Ok(inputs)
}

fn parse_transformation(text: &str) -> Result<PathTransformation, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn classify<W: Write>(argument: Option<String>, emitter: &mut Emitter<W>) -> Result<(), Failure> {
    for input in gather_inputs(argument)? {
        let f = parse_transformation(&input)?;
        let report = f.classify();
        let record: Record = vec![
            ("input", Value::Text(f.to_string())),
            ("n", Value::Int(f.degree())),
            ("end", Value::Flag(report.is_endomorphism)),
            ("wend", Value::Flag(report.is_weak_endomorphism)),
            ("send", Value::Flag(report.is_strong_endomorphism)),
            ("swend", Value::Flag(report.is_strong_weak_endomorphism)),
            ("aut", Value::Flag(report.is_automorphism)),
            ("idempotent", Value::Flag(report.is_idempotent)),
            ("regular", Value::Flag(report.is_regular)),
            ("rank", Value::Int(report.rank)),
            ("image_min", Value::Int(report.image_min)),
            ("image_max", Value::Int(report.image_max)),
        ];
        emitter.emit(&record)?;
    }
    Ok(())
}

fn factorize<W: Write>(argument: Option<String>, emitter: &mut Emitter<W>) -> Result<(), Failure> {
    let mut all_verified = true;
    for input in gather_inputs(argument)? {
        let f = parse_transformation(&input)?;
        let word = match generators::factorize(&f) {
            Ok(word) => word,
            Err(Error::DegreeTooSmall { degree, .. }) => {
                return Err(Failure::Domain(format!(
                    "no generating letters exist for n={degree}: the monoid has rank 0 \
                     for n=1 (empty generating set) and rank 2 for n=2 (its two \
                     non-identity elements)"
                )))
            }
            Err(Error::NotWeakEndomorphism) => {
                return Err(Failure::Domain(format!(
                    "{f} is not a weak endomorphism, so it lies outside the monoid"
                )))
            }
            Err(e) => return Err(Failure::Domain(e.to_string())),
        };
        let evaluated = word.evaluate();
        let verified = evaluated == f;
        all_verified &= verified;
        let record: Record = vec![
            ("input", Value::Text(f.to_string())),
            ("word", Value::Quoted(word.to_string())),
            ("evaluated", Value::Text(evaluated.to_string())),
            ("verified", Value::Flag(verified)),
        ];
        emitter.emit(&record)?;
    }
    if !all_verified {
        return Err(Failure::Domain(
            "a factorization failed to reproduce its input".into(),
        ));
    }
    Ok(())
}

fn verify_rank<W: Write>(
    n: usize,
    limits: &Limits,
    emitter: &mut Emitter<W>,
) -> Result<(), Failure> {
    if n < 3 {
        return Err(Failure::Usage(
            "rank certification needs n >= 3; n=1 has rank 0 and n=2 has rank 2".into(),
        ));
    }
    limits.check(n, "closure", CLOSURE_CAP)?;
    let cert = generators::certify_rank(n);
    let record: Record = vec![
        ("n", Value::Int(cert.degree)),
        ("generating_set_size", Value::Int(cert.generating_set_size)),
        ("distinct_kernels", Value::Int(cert.distinct_kernels)),
        ("closure_size", Value::Big(cert.closure_size.to_string())),
        ("expected_size", Value::Big(cert.expected_size.to_string())),
        ("verdict", Value::Flag(cert.verdict)),
    ];
    emitter.emit(&record)?;
    if !cert.verdict {
        return Err(Failure::Domain(format!(
            "the canonical generating set does not certify rank {} at n={}",
            n - 1,
            n
        )));
    }
    Ok(())
}

fn table<W: Write>(n: usize, limits: &Limits, emitter: &mut Emitter<W>) -> Result<(), Failure> {
    require_positive(n)?;
    limits.check(n, "counting", COUNT_CAP)?;
    for m in 1..=n {
        let record: Record = vec![
            ("n", Value::Int(m)),
            ("wend", Value::Big(wend::count(m).to_string())),
            (
                "idempotents",
                Value::Big(wend::count_idempotents(m).to_string()),
            ),
        ];
        emitter.emit_bare(&record)?;
    }
    Ok(())
}
