use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ncdiff::algebra::{algebra_by_name, center, commutator_space, solve_derivations, solve_double_derivations, AlgebraError, FinDimAlgebra};
use ncdiff::cyclic::{reduced_cyclic_dims_with, Convention, CyclicMethod, SplitRule};
use ncdiff::drcomplex::{hochschild_homology, HochschildMethod};
use ncdiff::forms::Forms;
use ncdiff::io::{read_algebra, IoError};
use ncdiff::repfunctor::{rep_suite, RepConfig};
use ncdiff::report::{Check, Report};
use ncdiff::suites::{run_suite, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "ncdiff", version, about = "Exact noncommutative differential calculus checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Print the report as JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print the report as text (the default).
    #[arg(long, global = true)]
    text: bool,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an algebra file and check the axioms.
    Validate { algebra: String },
    /// HHₙ by three methods.
    Hochschild {
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Reduced cyclic homology by total complexes and the λ-complex.
    Cyclic {
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = ConventionArg::Lowering)]
        convention: ConventionArg,
    },
    /// Run a named check suite.
    Verify {
        algebra: String,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 2)]
        t_cap: usize,
        /// Operator defining the harmonic split.
        #[arg(long, value_enum, default_value_t = SplitArg::Unipotent)]
        split: SplitArg,
    },
    /// Evaluation into matrix-valued forms against both differentials.
    Repcheck {
        #[arg(long, default_value_t = 2)]
        gens: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 3)]
        max_word_len: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dtiota,
    #[value(name = "bB")]
    BB,
    Lambda,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Lowering,
    Raising,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Harmonic,
    Freeprod,
    Deform,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SplitArg {
    Unipotent,
    #[value(name = "kappa2")]
    KappaSquared,
}

enum Failure {
    Usage(String),
}

const MAX_T_CAP: usize = 4;
const MAX_DEGREE: usize = 6;

/// A file path if one exists, otherwise a built-in name such as `D` or `M2`.
fn load(arg: &str) -> Result<FinDimAlgebra, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        return read_algebra(path).map_err(|e| Failure::Usage(e.to_string()));
    }
    algebra_by_name(arg).ok_or_else(|| Failure::Usage(format!("no such file or built-in algebra: {arg}")))
}

fn validate(arg: &str) -> Result<Report, Failure> {
    let path = Path::new(arg);
    let mut r = Report::new();
    let alg = if path.exists() {
        match read_algebra(path) {
            Ok(a) => a,
            Err(IoError::Algebra(e)) => {
                let (name, want) = match e {
                    AlgebraError::NotAssociative(..) => ("associative", "associative"),
                    AlgebraError::NotUnital(_) => ("unital", "unital"),
                    _ => ("valid structure constants", "valid"),
                };
                r.push(Check::text(name, arg, None, want.into(), e.to_string()));
                return Ok(r);
            }
            Err(e) => return Err(Failure::Usage(e.to_string())),
        }
    } else {
        load(arg)?
    };
    let name = alg.name().to_string();
    r.push(Check::holds("associative", &name, None, true));
    r.push(Check::holds("unital", &name, None, true));
    r.note(format!("dim A = {}", alg.dim()));
    r.note(format!("dim Z(A) = {}", center(&alg).dim()));
    r.note(format!("dim [A,A] = {}", commutator_space(&alg).dim()));
    r.note(format!("dim Der(A) = {}", solve_derivations(&alg).len()));
    r.note(format!("dim Der(A, A⊗A) = {}", solve_double_derivations(&alg).len()));
    Ok(r)
}

fn table(header: &[&str], rows: &[Vec<usize>]) -> Vec<String> {
    let mut out = vec![format!("n  {}", header.join("  "))];
    for (n, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .zip(header)
            .map(|(v, h)| format!("{v:>w$}", w = h.len()))
            .collect();
        out.push(format!("{n}  {}", cells.join("  ")));
    }
    out
}

fn hochschild(alg: &FinDimAlgebra, n_max: usize) -> Report {
    let forms = Forms::new(alg.clone());
    let name = alg.name().to_string();
    let mut r = Report::new();
    let rows: Vec<Vec<usize>> = (0..=n_max)
        .map(|n| HochschildMethod::ALL.iter().map(|&m| hochschild_homology(&forms, n, m)).collect())
        .collect();
    for (n, row) in rows.iter().enumerate() {
        r.push(Check::text(
            "HH agreement (forms, bar, ker_iota)",
            &name,
            Some(n),
            format!("{0}, {0}, {0}", row[1]),
            format!("{}, {}, {}", row[0], row[1], row[2]),
        ));
    }
    let header: Vec<&str> = HochschildMethod::ALL.iter().map(|m| m.name()).collect();
    for line in table(&header, &rows) {
        r.note(line);
    }
    r
}

fn cyclic(alg: &FinDimAlgebra, n_max: usize, method: MethodArg, conv: Convention) -> Report {
    let forms = Forms::new(alg.clone());
    let name = alg.name().to_string();
    let methods: Vec<CyclicMethod> = match method {
        MethodArg::Dtiota => vec![CyclicMethod::DIota],
        MethodArg::BB => vec![CyclicMethod::DB],
        MethodArg::Lambda => vec![CyclicMethod::Lambda],
        MethodArg::All => CyclicMethod::ALL.to_vec(),
    };
    let cols: Vec<Vec<usize>> = methods
        .iter()
        .map(|&m| reduced_cyclic_dims_with(&forms, m, conv, n_max))
        .collect();
    let mut r = Report::new();
    if matches!(method, MethodArg::All) {
        for n in 0..=n_max {
            r.push(Check::text(
                "reduced HC agreement (dtiota, bB, lambda)",
                &name,
                Some(n),
                format!("{0}, {0}, {0}", cols[2][n]),
                format!("{}, {}, {}", cols[0][n], cols[1][n], cols[2][n]),
            ));
        }
    }
    let rows: Vec<Vec<usize>> = (0..=n_max).map(|n| cols.iter().map(|c| c[n]).collect()).collect();
    let header: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    let conv_name = match conv {
        Convention::Lowering => "lowering",
        Convention::Raising => "raising",
    };
    r.note(format!("total complexes in the {conv_name} convention"));
    for line in table(&header, &rows) {
        r.note(line);
    }
    r
}

/// Freeprod errors come back as check text; a cap overflow is a bad
/// configuration rather than a failed identity.
fn cap_overflow(r: &Report) -> Option<String> {
    r.failures()
        .find(|c| c.got.starts_with("word needs") || c.got.contains("exceeds the form cap"))
        .map(|c| format!("configuration error in '{}': {}", c.name, c.got))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let seed = cli.out.seed;
    let mut r = match &cli.cmd {
        Cmd::Validate { algebra } => validate(algebra)?,
        Cmd::Hochschild { algebra, max_degree } => {
            if *max_degree > MAX_DEGREE {
                return Err(Failure::Usage(format!("--max-degree is capped at {MAX_DEGREE}")));
            }
            hochschild(&load(algebra)?, *max_degree)
        }
        Cmd::Cyclic {
            algebra,
            max_degree,
            method,
            convention,
        } => {
            if *max_degree > MAX_DEGREE {
                return Err(Failure::Usage(format!("--max-degree is capped at {MAX_DEGREE}")));
            }
            let conv = match convention {
                ConventionArg::Lowering => Convention::Lowering,
                ConventionArg::Raising => Convention::Raising,
            };
            cyclic(&load(algebra)?, *max_degree, *method, conv)
        }
        Cmd::Verify {
            algebra,
            suite,
            max_degree,
            t_cap,
            split,
        } => {
            if *t_cap == 0 || *t_cap > MAX_T_CAP {
                return Err(Failure::Usage(format!("--t-cap must be in 1..={MAX_T_CAP}")));
            }
            if *max_degree > MAX_DEGREE {
                return Err(Failure::Usage(format!("--max-degree is capped at {MAX_DEGREE}")));
            }
            let alg = load(algebra)?;
            let suite = match suite {
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Harmonic => Suite::Harmonic,
                SuiteArg::Freeprod => Suite::Freeprod,
                SuiteArg::Deform => Suite::Deform,
                SuiteArg::All => Suite::All,
            };
            let cfg = SuiteConfig {
                max_degree: *max_degree,
                t_cap: *t_cap,
                seed,
                split: match split {
                    SplitArg::Unipotent => SplitRule::Unipotent,
                    SplitArg::KappaSquared => SplitRule::KappaSquared,
                },
            };
            let r = run_suite(&alg, suite, &cfg);
            if let Some(msg) = cap_overflow(&r) {
                return Err(Failure::Usage(msg));
            }
            r
        }
        Cmd::Repcheck {
            gens,
            dim,
            max_word_len,
        } => {
            if *gens == 0 || *dim == 0 || *max_word_len < 2 {
                return Err(Failure::Usage("need --gens ≥ 1, --dim ≥ 1, --max-word-len ≥ 2".into()));
            }
            rep_suite(&RepConfig {
                m: *gens,
                d: *dim,
                max_word_len: *max_word_len,
                seed,
            })
        }
    };
    r.seed = Some(seed);
    Ok(r)
}

struct Output {
    code: u8,
    stdout: String,
    stderr: String,
}

fn execute<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cli) {
        Ok(r) => {
            let body = if cli.out.json { r.to_json() + "\n" } else { r.to_text() };
            if let Some(p) = &cli.out.out {
                if let Err(e) = std::fs::write(p, &body) {
                    return Output {
                        code: 2,
                        stdout: body,
                        stderr: format!("cannot write {}: {e}\n", p.display()),
                    };
                }
            }
            Output {
                code: if r.all_pass() { 0 } else { 1 },
                stdout: body,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn main() -> ExitCode {
    let out = execute(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code)
}

#[cfg(test)]
#[path = "ncdiff/tests.rs"]
mod tests;
