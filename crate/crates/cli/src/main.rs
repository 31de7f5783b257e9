//! Command-line surface: single computations, bulk verification tables, and
//! the Casimir constraint solver, with machine-readable output.
//!
//! Exit codes: 0 on success and agreement, 1 when requested methods
//! disagree (a bug signal), 2 on usage errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use extschur::ext::{evaluate_query, verify_range, ExtQuery, ExtReport, Method, ReportRecord};
use extschur::parallel;
use extschur::partitions::{lr_coefficient, Partition};
use extschur::polyfun::{casimir_kernel, render_vector, Family, FunctorKind};

#[derive(Parser)]
#[command(
    name = "extschur",
    version,
    about = "Exact first Ext-group dimensions between Schur-functor modules, with cross-checking oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum SolveFamily {
    Sym,
    Ext,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient LR^lambda_{rho,nu}.
    Lr {
        /// Partition as comma-separated parts; "" or "0" for the empty one.
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        rho: String,
        #[arg(long)]
        nu: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// First Ext dimension for one pair, by the requested methods.
    Ext {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Comma-separated subset of closed,catlie,ub-char,ub-symmetrizer,solver.
        #[arg(long, default_value = "closed,catlie,ub-char,ub-symmetrizer")]
        methods: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Full cross-verification table over all pairs up to a size bound.
    Table {
        /// Largest partition size on either side.
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Worker pool size; EXTSCHUR_JOBS is the fallback.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Kernel of the Casimir constraint system for a power-functor pair.
    Solve {
        #[arg(long, value_enum)]
        family: SolveFamily,
        /// Source degree.
        #[arg(long)]
        d: usize,
        /// Target degree, evaluated at arity d + 2.
        #[arg(long)]
        target: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
}

fn parse_partition(arg_name: &str, text: &str) -> Result<Partition, String> {
    Partition::parse(text).map_err(|e| format!("invalid partition for {arg_name}: {e}"))
}

fn parse_methods(text: &str) -> Result<Vec<Method>, String> {
    let mut methods = Vec::new();
    for piece in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let m = Method::from_flag(piece).ok_or_else(|| {
            format!(
                "unknown method {piece:?} for --methods; expected a subset of \
                 closed,catlie,ub-char,ub-symmetrizer,solver"
            )
        })?;
        if !methods.contains(&m) {
            methods.push(m);
        }
    }
    if methods.is_empty() {
        return Err("--methods must name at least one method".to_string());
    }
    Ok(methods)
}

const TABLE_HEADER: &str = "lambda,mu,closed,catlie,ub_char,ub_symmetrizer,agree";

fn csv_partition_cell(p: &Partition) -> String {
    format!("\"{}\"", p.text())
}

fn oracle_cell(record: &ReportRecord, key: &str) -> String {
    match record.oracles.get(key) {
        Some(extschur::OracleValue::Available(v)) => v.to_string(),
        Some(extschur::OracleValue::Unavailable) => "unavailable".to_string(),
        None => "unavailable".to_string(),
    }
}

fn render_reports(reports: &[ExtReport], format: OutputFormat) -> String {
    let records: Vec<ReportRecord> = reports.iter().map(ExtReport::to_record).collect();
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&records).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from(TABLE_HEADER);
            s.push('\n');
            for (report, record) in reports.iter().zip(&records) {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    csv_partition_cell(&report.query.lambda),
                    csv_partition_cell(&report.query.mu),
                    record.closed,
                    oracle_cell(record, "catlie"),
                    oracle_cell(record, "ub_char"),
                    oracle_cell(record, "ub_symmetrizer"),
                    record.agree,
                ));
            }
            s
        }
        OutputFormat::Markdown => {
            let mut s = String::from(
                "| lambda | mu | closed | catlie | ub_char | ub_symmetrizer | agree |\n\
                 |---|---|---|---|---|---|---|\n",
            );
            for (report, record) in reports.iter().zip(&records) {
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    report.query.lambda.text(),
                    report.query.mu.text(),
                    record.closed,
                    oracle_cell(record, "catlie"),
                    oracle_cell(record, "ub_char"),
                    oracle_cell(record, "ub_symmetrizer"),
                    record.agree,
                ));
            }
            s
        }
    }
}

fn render_single_report(report: &ExtReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s =
                serde_json::to_string_pretty(&report.to_record()).expect("report serializes");
            s.push('\n');
            s
        }
        _ => render_reports(std::slice::from_ref(report), format),
    }
}

fn cmd_lr(lambda: &str, rho: &str, nu: &str, format: OutputFormat) -> Result<ExitCode, String> {
    let lambda = parse_partition("--lambda", lambda)?;
    let rho = parse_partition("--rho", rho)?;
    let nu = parse_partition("--nu", nu)?;
    let value = lr_coefficient(&lambda, &rho, &nu);
    let out = match format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::json!({
                "lambda": lambda.parts(),
                "rho": rho.parts(),
                "nu": nu.parts(),
                "value": value,
            })
        ),
        OutputFormat::Csv => format!(
            "lambda,rho,nu,value\n{},{},{},{}\n",
            csv_partition_cell(&lambda),
            csv_partition_cell(&rho),
            csv_partition_cell(&nu),
            value
        ),
        OutputFormat::Markdown => format!(
            "| lambda | rho | nu | value |\n|---|---|---|---|\n| {} | {} | {} | {} |\n",
            lambda.text(),
            rho.text(),
            nu.text(),
            value
        ),
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_ext(
    lambda: &str,
    mu: &str,
    methods: &str,
    format: OutputFormat,
) -> Result<ExitCode, String> {
    let lambda = parse_partition("--lambda", lambda)?;
    let mu = parse_partition("--mu", mu)?;
    let methods = parse_methods(methods)?;
    let report = evaluate_query(&ExtQuery::new(lambda, mu), &methods);
    print!("{}", render_single_report(&report, format));
    Ok(if report.agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_table(
    max: usize,
    format: OutputFormat,
    out: Option<&std::path::Path>,
    jobs: Option<usize>,
) -> Result<ExitCode, String> {
    let jobs = jobs.or_else(|| {
        std::env::var("EXTSCHUR_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    parallel::configure_jobs(jobs);
    eprintln!("computing cross-verification table up to size {max}");
    let reports = verify_range(max);
    let rendered = render_reports(&reports, format);
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            file.write_all(rendered.as_bytes())
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        }
        None => print!("{rendered}"),
    }
    Ok(if reports.iter().all(|r| r.agree) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_solve(
    family: SolveFamily,
    d: usize,
    target: usize,
    format: OutputFormat,
) -> Result<ExitCode, String> {
    let fam = match family {
        SolveFamily::Sym => Family::Symmetric,
        SolveFamily::Ext => Family::Exterior,
    };
    let source = FunctorKind::new(fam, d);
    let tgt = FunctorKind::new(fam, target);
    let kernel = casimir_kernel(source, tgt);
    let generator = if kernel.len() == 1 {
        Some(render_vector(tgt, d + 2, &kernel[0]))
    } else {
        None
    };
    let family_name = match family {
        SolveFamily::Sym => "sym",
        SolveFamily::Ext => "ext",
    };
    let out = match format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::json!({
                "family": family_name,
                "d": d,
                "target": target,
                "kernel_dim": kernel.len(),
                "generator": generator,
            })
        ),
        OutputFormat::Csv => format!(
            "family,d,target,kernel_dim,generator\n{},{},{},{},{}\n",
            family_name,
            d,
            target,
            kernel.len(),
            generator.as_deref().unwrap_or("")
        ),
        OutputFormat::Markdown => format!(
            "| family | d | target | kernel_dim | generator |\n|---|---|---|---|---|\n| {} | {} | {} | {} | {} |\n",
            family_name,
            d,
            target,
            kernel.len(),
            generator.as_deref().unwrap_or("")
        ),
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Lr {
            lambda,
            rho,
            nu,
            format,
        } => cmd_lr(lambda, rho, nu, *format),
        Command::Ext {
            lambda,
            mu,
            methods,
            format,
        } => cmd_ext(lambda, mu, methods, *format),
        Command::Table {
            max,
            format,
            out,
            jobs,
        } => cmd_table(*max, *format, out.as_deref(), *jobs),
        Command::Solve {
            family,
            d,
            target,
            format,
        } => cmd_solve(*family, *d, *target, *format),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
