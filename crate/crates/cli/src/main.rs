//! `dioph`: solve, check and benchmark linear Diophantine systems.
//!
//! Exit codes: 0 success, 1 no solution / failed check / budget exceeded,
//! 2 usage or input error, 3 internal verification failure.

use std::fmt::Display;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::TypedValueParser as _;
use clap::{Parser, Subcommand, ValueEnum};
use dioph_core::corpus::{run_bench, run_bench_on, BenchConfig};
use dioph_core::oracle::{
    brute_particulars, is_general_on_box, structure_checks, verify_symbolic, CheckStatus,
    Generality, OracleError, DEFAULT_BOX, ENUM_BUDGET_VAR,
};
use dioph_core::textio::{parse_machine, parse_system, render_with_trace, Format};
use dioph_core::{
    solve, Algorithm, GeneralSolution, Integer, LinearSystem, NoSolution, SolveError,
    SolveOutcome,
};

#[derive(Parser)]
#[command(name = "dioph", version, about = "Integer solutions of linear equation systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a system and print its general integer solution.
    Solve {
        /// e1 or e2 for one equation, s1..s5 for systems; auto picks e2 or s5.
        #[arg(long, short, default_value = "auto")]
        algorithm: Algorithm,
        /// Input file, or '-' for standard input.
        #[arg(long, short, default_value = "-")]
        input: String,
        #[arg(long, short, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
        /// Append iteration and coefficient statistics.
        #[arg(long)]
        trace: bool,
    },
    /// Check a machine-format solution against a system.
    Verify {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        /// Half-width of the enumeration box for the generality check.
        #[arg(long = "box", default_value_t = DEFAULT_BOX)]
        bound: u32,
    },
    /// Compare the two single-equation solvers on random or given equations.
    Bench {
        #[arg(long, default_value_t = BenchConfig::default().trials)]
        trials: usize,
        #[arg(long, default_value_t = BenchConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = BenchConfig::default().max_n,
              value_parser = clap::value_parser!(u32).range(1..=64).map(|v| v as usize))]
        max_n: usize,
        #[arg(long, default_value_t = BenchConfig::default().max_coeff,
              value_parser = clap::value_parser!(i64).range(1..=1_000_000_000))]
        max_coeff: i64,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Benchmark the equations in this file (one per line) instead of random ones.
        #[arg(long, conflicts_with_all = ["trials", "seed", "max_n", "max_coeff"])]
        input: Option<String>,
    },
    /// List every solution with all coordinates in [-B, B].
    Enumerate {
        #[arg(long)]
        system: PathBuf,
        #[arg(long = "box", default_value_t = DEFAULT_BOX)]
        bound: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Machine,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Human => Format::Human,
            OutputFormat::Machine => Format::Machine,
        }
    }
}

/// A run that ends with a nonzero exit and a message on stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure { code: 2, message: message.to_string() }
    }

    fn internal(message: impl Display) -> Self {
        Failure { code: 3, message: message.to_string() }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::InvalidInput(_) => Failure::usage(e),
            SolveError::Internal(_) => Failure::internal(e),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve { algorithm, input, format, trace } => {
            cmd_solve(algorithm, &input, format.into(), trace)
        }
        Command::Verify { system, solution, bound } => cmd_verify(&system, &solution, bound),
        Command::Bench { trials, seed, max_n, max_coeff, output, input } => {
            let cfg = BenchConfig { trials, seed, max_n, max_coeff };
            cmd_bench(cfg, input.as_deref(), output.as_deref())
        }
        Command::Enumerate { system, bound } => cmd_enumerate(&system, bound),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("dioph: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }
}

fn load_system(path: &str) -> Result<LinearSystem, Failure> {
    let text = read_input(path)?;
    parse_system(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::internal(format!("writing output: {e}")))
}

fn tuple(xs: &[Integer]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn cmd_solve(alg: Algorithm, input: &str, format: Format, trace: bool) -> Outcome {
    let sys = load_system(input)?;
    let solved = solve(&sys, alg)?;
    let code = match &solved.outcome {
        SolveOutcome::Solution(gs) => {
            let ok = verify_symbolic(&sys, gs).map_err(Failure::internal)?;
            if !ok {
                return Err(Failure::internal(format!(
                    "{} produced a solution that does not satisfy the system",
                    alg.resolve(&sys)
                )));
            }
            0
        }
        SolveOutcome::NoSolution(ns) => {
            if !ns.witness.holds_for(&sys) {
                return Err(Failure::internal(format!(
                    "{} reported no solution with a witness that does not hold",
                    alg.resolve(&sys)
                )));
            }
            1
        }
    };
    emit(&render_with_trace(&solved.outcome, format, trace.then_some(&solved.trace)))?;
    Ok(code)
}

/// Lines up the solution's variables with the system's.
fn align(sys: &LinearSystem, gs: GeneralSolution) -> Result<GeneralSolution, Failure> {
    if gs.num_vars() != sys.num_vars() {
        return Err(Failure::usage(format!(
            "solution has {} variables, system has {}",
            gs.num_vars(),
            sys.num_vars()
        )));
    }
    if gs.vars() == sys.vars() {
        return Ok(gs);
    }
    gs.reorder(sys.vars())
        .map_err(|e| Failure::usage(format!("solution variables do not match the system: {e}")))
}

fn report_line(name: &str, pass: bool, detail: &str) -> String {
    let status = if pass { "pass" } else { "FAIL" };
    if detail.is_empty() {
        format!("{name}: {status}\n")
    } else {
        format!("{name}: {status} ({detail})\n")
    }
}

/// First nonzero residual of `d` or of a column of `C`.
fn symbolic_witness(sys: &LinearSystem, gs: &GeneralSolution) -> String {
    if let Ok(r) = sys.residual(gs.offset()) {
        if r.iter().any(|v| *v != Integer::from(0)) {
            return format!("A·d - b = {}", tuple(&r));
        }
    }
    let hom = sys.homogeneous();
    for j in 0..gs.num_params() {
        if let Ok(r) = hom.residual(&gs.column(j)) {
            if r.iter().any(|v| *v != Integer::from(0)) {
                return format!("A·c{} = {}", j + 1, tuple(&r));
            }
        }
    }
    String::new()
}

fn verify_no_solution(sys: &LinearSystem, ns: &NoSolution) -> Outcome {
    let holds = ns.witness.holds_for(sys);
    emit(&report_line("witness", holds, &ns.reason))?;
    Ok(if holds { 0 } else { 1 })
}

fn cmd_verify(system: &Path, solution: &Path, bound: u32) -> Outcome {
    let sys = load_system(&system.to_string_lossy())?;
    let text = read_input(&solution.to_string_lossy())?;
    let doc = parse_machine(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", solution.display())))?;
    let gs = match doc {
        SolveOutcome::NoSolution(ns) => return verify_no_solution(&sys, &ns),
        SolveOutcome::Solution(gs) => align(&sys, gs)?,
    };

    let mut report = String::new();
    let mut all = true;

    let symbolic = verify_symbolic(&sys, &gs).map_err(Failure::usage)?;
    all &= symbolic;
    let detail = if symbolic { String::new() } else { symbolic_witness(&sys, &gs) };
    report.push_str(&report_line("substitution", symbolic, &detail));

    for check in structure_checks(&sys, &gs).checks {
        let line = match check.status {
            CheckStatus::NotApplicable => format!("{}: n/a ({})\n", check.name, check.detail),
            status => report_line(check.name, status == CheckStatus::Pass, &check.detail),
        };
        all &= check.status != CheckStatus::Fail;
        report.push_str(&line);
    }

    let name = format!("generality on box {bound}");
    match is_general_on_box(&sys, &gs, bound) {
        Ok(Generality::General) => report.push_str(&report_line(&name, true, "")),
        Ok(Generality::Counterexample(x)) => {
            all = false;
            report.push_str(&report_line(&name, false, &format!("counterexample {}", tuple(&x))));
        }
        Ok(Generality::NotASolution) => {
            all = false;
            report.push_str(&report_line(&name, false, "not a solution"));
        }
        Err(e @ OracleError::BudgetExceeded { .. }) => {
            emit(&report)?;
            return Err(Failure::usage(format!(
                "{e}; use a smaller --box or raise {ENUM_BUDGET_VAR}"
            )));
        }
        Err(e) => return Err(Failure::usage(e)),
    }

    emit(&report)?;
    Ok(if all { 0 } else { 1 })
}

/// One independent equation per nonempty, non-comment line.
fn load_equations(path: &str) -> Result<Vec<LinearSystem>, Failure> {
    let text = read_input(path)?;
    let mut eqs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let eq = parse_system(line)
            .map_err(|e| Failure::usage(format!("{path}: line {}: {e}", i + 1)))?;
        eqs.push(eq);
    }
    Ok(eqs)
}

fn cmd_bench(cfg: BenchConfig, input: Option<&str>, output: Option<&Path>) -> Outcome {
    let report = match input {
        Some(path) => run_bench_on(&load_equations(path)?)?,
        None => run_bench(&cfg)?,
    };
    let csv = report.to_csv();
    let summary = format!("{}\n", report.summary());
    match output {
        Some(path) => {
            fs::write(path, &csv)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            emit(&summary)?;
        }
        None => {
            emit(&csv)?;
            eprint!("{summary}");
        }
    }
    Ok(0)
}

fn cmd_enumerate(system: &Path, bound: u32) -> Outcome {
    let sys = load_system(&system.to_string_lossy())?;
    match brute_particulars(&sys, bound) {
        Ok(points) => {
            let mut out = String::new();
            for x in &points {
                out.push_str(&tuple(x));
                out.push('\n');
            }
            emit(&out)?;
            Ok(0)
        }
        Err(e @ OracleError::BudgetExceeded { .. }) => Err(Failure {
            code: 1,
            message: format!("{e}; raise {ENUM_BUDGET_VAR} to allow it"),
        }),
        Err(e) => Err(Failure::usage(e)),
    }
}
