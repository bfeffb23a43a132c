use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use omv_sat::amplifier::{self, amplify, crossing_sweep, format_sig17, LogisticParams};
use omv_sat::circuit::synthesize;
use omv_sat::cnf::{parse_dimacs, ClauseSet};
use omv_sat::report::{parse_q_squared, solve, Engine, SolveOptions};
use omv_sat::simulator::{SimConfig, DEFAULT_MAX_QUBITS};

/// Step budget for `amplify --q2` when n cannot be read off the denominator.
const FALLBACK_MAX_STEPS: usize = 32;

#[derive(Parser)]
#[command(name = "omv-sat", version, about = "Circuit-based SAT decision with logistic amplification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a DIMACS file and print a JSON report.
    /// Exit code 0 = SAT, 1 = UNSAT, 2 = error.
    Solve(SolveArgs),
    /// Print the compiled circuit as text.
    Compile {
        file: PathBuf,
        /// Drop the Hadamard layer.
        #[arg(long)]
        logic_only: bool,
    },
    /// Print an amplifier trace as CSV.
    Amplify(AmplifyArgs),
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    /// dense or table; default picks table when the register exceeds the dense cap.
    #[arg(long)]
    engine: Option<Engine>,
    #[arg(long, default_value_t = amplifier::DEFAULT_A)]
    a: f64,
    #[arg(long)]
    max_steps: Option<usize>,
    /// Dense engine qubit cap.
    #[arg(long, default_value_t = DEFAULT_MAX_QUBITS)]
    max_qubits: usize,
    /// Also write the amplifier trace CSV here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write the final dense state as `index,re,im` CSV (dense engine only).
    #[arg(long)]
    dump_state: Option<PathBuf>,
}

#[derive(Args)]
struct AmplifyArgs {
    /// Starting value: p/q, p/2^k or decimal.
    #[arg(long, conflicts_with_all = ["n", "r"])]
    q2: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, conflicts_with = "sweep")]
    r: Option<u64>,
    /// Per-r first crossing for r = 1..=2^(n-1); needs --n.
    #[arg(long, requires = "n")]
    sweep: bool,
    #[arg(long, default_value_t = amplifier::DEFAULT_A)]
    a: f64,
    #[arg(long)]
    max_steps: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn execute(command: Command) -> CliResult {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Compile { file, logic_only } => cmd_compile(&file, logic_only),
        Command::Amplify(args) => cmd_amplify(args),
    }
}

fn read_instance(path: &Path) -> Result<ClauseSet, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_dimacs(&text)?)
}

fn cmd_solve(args: SolveArgs) -> CliResult {
    let cs = read_instance(&args.file)?;
    let opts = SolveOptions {
        engine: args.engine,
        a: args.a,
        max_steps: args.max_steps,
        sim: SimConfig::with_max_qubits(args.max_qubits)?,
        keep_state: args.dump_state.is_some(),
    };
    let outcome = solve(&cs, &opts)?;
    if let Some(path) = &args.trace {
        outcome.trace.write_csv(BufWriter::new(File::create(path)?))?;
    }
    if let Some(path) = &args.dump_state {
        let state = outcome
            .state
            .as_ref()
            .ok_or("--dump-state needs the dense engine")?;
        state.write_csv(BufWriter::new(File::create(path)?))?;
    }
    println!("{}", outcome.report.to_json());
    Ok(if outcome.report.sat {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_compile(path: &Path, logic_only: bool) -> CliResult {
    let cs = read_instance(path)?;
    let circuit = synthesize(&cs);
    let circuit = if logic_only {
        circuit.logic_only()
    } else {
        circuit
    };
    print!("{}", circuit.to_text());
    Ok(ExitCode::SUCCESS)
}

fn cmd_amplify(args: AmplifyArgs) -> CliResult {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());

    if args.sweep {
        let n = args.n.expect("clap enforces --n");
        let steps = args.max_steps.unwrap_or_else(|| amplifier::default_max_steps(n));
        let rows = crossing_sweep(n, &LogisticParams::new(args.a, steps)?)?;
        writeln!(out, "r,q2,m_star,x_final")?;
        for row in rows {
            let m_star = row.m_star.map_or_else(|| "none".to_string(), |m| m.to_string());
            writeln!(
                out,
                "{},{},{},{}",
                row.r,
                format_sig17(row.q_squared),
                m_star,
                format_sig17(row.x_final)
            )?;
        }
        out.flush()?;
        return Ok(ExitCode::SUCCESS);
    }

    let (q2, n) = match (args.q2, args.n, args.r) {
        (Some(text), _, _) => {
            let parsed = parse_q_squared(&text)?;
            (parsed.value, parsed.n)
        }
        (None, Some(n), Some(r)) => {
            if n == 0 || n >= 64 || r > 1u64 << n {
                return Err(format!("need 1 <= n < 64 and r <= 2^n (got n={n}, r={r})").into());
            }
            (r as f64 / (1u64 << n) as f64, Some(n))
        }
        _ => return Err("amplify needs --q2, or both --n and --r".into()),
    };
    let steps = args
        .max_steps
        .or_else(|| n.map(amplifier::default_max_steps))
        .unwrap_or(FALLBACK_MAX_STEPS);
    let trace = amplify(q2, &LogisticParams::new(args.a, steps)?)?;
    trace.write_csv(&mut out)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
