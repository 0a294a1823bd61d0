use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twistlink::cli::{
    build_classify_report, build_torsion_report, parse_surgery, run_identity_suite, run_sweep,
    OutputFormat, SweepConfig, SweepRecord, VerdictJson,
};
use twistlink::cyclo::Sign;
use twistlink::error::Error;
use twistlink::torsion::{Side, SurgerySpec};

#[derive(Parser)]
#[command(
    name = "twistlink",
    about = "Exact Reidemeister torsion and lens-surgery classification for twisted Whitehead links",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the torsion of a single surgery two ways and compare them.
    Torsion(TorsionArgs),
    /// Classify a single surgery: decision table, obstruction, construction.
    Classify(ClassifyArgs),
    /// Sweep a grid of surgeries and write a report file.
    Sweep(SweepArgs),
    /// Run the polynomial identity suite for the link family.
    VerifyIdentities(VerifyArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// Twist parameter (negative values are mirrored to positive ones).
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    /// Surgery coefficients `p1/q1,p2/q2`; an omitted denominator means 1.
    #[arg(long, allow_negative_numbers = true)]
    surgery: String,
}

impl SpecArgs {
    fn parse_spec(&self) -> Result<SurgerySpec, Error> {
        let (p1, q1, p2, q2) = parse_surgery(&self.surgery)?;
        SurgerySpec::normalized(self.n, p1, q1, p2, q2)
    }
}

#[derive(Args)]
struct TorsionArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Root-of-unity level; must divide the coefficient on the chosen side.
    #[arg(long)]
    d: u64,
    /// Which component's meridian maps to the root of unity (1 or 2).
    #[arg(long)]
    side: u32,
    /// Sign entering the closed form (+1 for the concrete family).
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    epsilon: i64,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Use the generalized engine for links sharing the same polynomials.
    #[arg(long)]
    generalized: bool,
    /// Sign parameter for the generalized engine.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    epsilon: i64,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct SweepArgs {
    /// TOML config file; explicit flags below override its fields.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    n_min: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    p_bound: Option<i64>,
    #[arg(long)]
    q_bound: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    epsilon: Option<i64>,
    #[arg(long)]
    divisor_bound: Option<u64>,
    /// json or csv.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    parallelism: Option<usize>,
    /// Report file path.
    #[arg(long)]
    output: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest twist parameter to check.
    #[arg(long, default_value_t = 20)]
    max_n: u32,
    #[arg(long, default_value = "text")]
    format: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep exit code 1 for all usage problems (clap would use 2)
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Torsion(args) => cmd_torsion(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::VerifyIdentities(args) => cmd_verify(args),
    }
}

fn side_from_flag(side: u32) -> Result<Side, Error> {
    match side {
        1 => Ok(Side::ComponentOne),
        2 => Ok(Side::ComponentTwo),
        other => Err(Error::Parse(format!("side must be 1 or 2, got {other}"))),
    }
}

fn cmd_torsion(args: TorsionArgs) -> Result<ExitCode, Error> {
    let spec = args.spec.parse_spec()?;
    let side = side_from_flag(args.side)?;
    let epsilon = Sign::from_value(args.epsilon)?;
    let report = build_torsion_report(&spec, args.d, side, epsilon)?;
    match args.format.as_str() {
        "json" => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        "text" => {
            println!("spec:        {spec}");
            println!("level:       d = {} (side {})", report.d, report.side);
            println!(
                "closed form: ({}) / ({})",
                report.closed_form.num, report.closed_form.den
            );
            println!(
                "pipeline:    ({}) / ({})",
                report.pipeline.num, report.pipeline.den
            );
            println!("equivalent:  {}", report.equivalent);
            if let Some(w) = &report.witness {
                println!("witness:     sign {} shift z^{}", w.sign, w.m);
            }
        }
        other => return Err(Error::Parse(format!("unknown format '{other}'"))),
    }
    // a disagreement between the two routes is an internal error
    if !report.equivalent {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, Error> {
    let spec = args.spec.parse_spec()?;
    let epsilon = Sign::from_value(args.epsilon)?;
    let report = build_classify_report(&spec, epsilon, args.generalized);
    match args.format.as_str() {
        "json" => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        "text" => {
            println!("spec:         {spec}");
            println!("verdict:      {}", verdict_line(&report.verdict));
            println!("obstruction:  {}", verdict_line(&report.obstruction));
            match &report.constructive {
                Some(v) => println!("construction: {}", verdict_line(v)),
                None => println!("construction: not applicable"),
            }
            if let Some(tv) = report.torsion_verified {
                println!("torsion ok:   {tv}");
            }
            println!("agreement:    {}", report.agreement);
        }
        other => return Err(Error::Parse(format!("unknown format '{other}'"))),
    }
    if !report.agreement {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_line(v: &VerdictJson) -> String {
    match v {
        VerdictJson::Lens { p, q, cases } => {
            if cases.is_empty() {
                format!("lens L({p}, {q})")
            } else {
                format!("lens L({p}, {q}) via cases [{}]", cases.join(", "))
            }
        }
        VerdictJson::NotLens { reasons } => format!("not a lens space ({})", reasons.join("; ")),
        VerdictJson::Indeterminate => "indeterminate".to_string(),
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode, Error> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.clone(),
                source: e,
            })?;
            SweepConfig::from_toml(&text)?
        }
        None => SweepConfig::default(),
    };
    if let Some(v) = args.n_min {
        cfg.n_min = v;
    }
    if let Some(v) = args.n_max {
        cfg.n_max = v;
    }
    if let Some(v) = args.p_bound {
        cfg.p_bound = v;
    }
    if let Some(v) = args.q_bound {
        cfg.q_bound = v;
    }
    if let Some(v) = args.epsilon {
        cfg.epsilon = v;
    }
    if let Some(v) = args.divisor_bound {
        cfg.divisor_bound = v;
    }
    if let Some(v) = &args.format {
        cfg.output_format = v.parse()?;
    }
    if let Some(v) = args.parallelism {
        cfg.parallelism = v;
    }
    cfg.validate()?;

    let report = run_sweep(&cfg)?;
    let mut file = std::fs::File::create(&args.output).map_err(|e| Error::Io {
        path: args.output.clone(),
        source: e,
    })?;
    match cfg.output_format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut file, &report).map_err(|e| Error::Io {
                path: args.output.clone(),
                source: std::io::Error::other(e),
            })?;
            file.write_all(b"\n").ok();
        }
        OutputFormat::Csv => {
            writeln!(file, "{}", SweepRecord::CSV_HEADER).map_err(|e| Error::Io {
                path: args.output.clone(),
                source: e,
            })?;
            for r in &report.records {
                writeln!(file, "{}", r.csv_row()).map_err(|e| Error::Io {
                    path: args.output.clone(),
                    source: e,
                })?;
            }
        }
    }
    println!(
        "specs: {}  lens: {}  not-lens: {}  obstruction-indeterminate: {}  disagreements: {}",
        report.summary.total,
        report.summary.lens,
        report.summary.not_lens,
        report.summary.obstruction_indeterminate,
        report.summary.disagreements
    );
    if report.summary.disagreements > 0 {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let report = run_identity_suite(args.max_n);
    match args.format.as_str() {
        "json" => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        "text" => {
            for line in &report.lines {
                println!("{line}");
            }
            println!("all passed: {}", report.all_passed);
        }
        other => return Err(Error::Parse(format!("unknown format '{other}'"))),
    }
    if !report.all_passed {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}
