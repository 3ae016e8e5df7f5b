use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crorder::admissible::{representatives, table_entry, TableEntry};
use crorder::enumerate::{map_ordered, Enumeration, Execution};
use crorder::extension::{lee_report, LeeReport};
use crorder::instance::{analyze_spec, parse_instance, Instance, InstanceSpec, Report};
use crorder::report::render_text;
use crorder::{CartanType, Error, RootSystem};

const EXIT_MALFORMED: u8 = 2;
const EXIT_INVALID_INVOLUTION: u8 = 3;
const EXIT_CROSS_CHECK: u8 = 4;

#[derive(Parser)]
#[command(name = "crorder", version, about = "Levi and contact orders of parabolic CR algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one instance document (JSON), or a named fixture.
    Analyze {
        /// Path to the instance document; `-` reads standard input.
        file: Option<String>,
        #[arg(long, conflicts_with = "file")]
        fixture: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Every crossed set and every signed-permutation involution of one system.
    Enumerate {
        #[arg(long = "type")]
        cartan: CartanType,
        #[arg(long)]
        rank: usize,
        /// Use only the first N involutions.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// q(β) for one root per length, compared with the classification table.
    Qbeta {
        #[arg(long = "type")]
        cartan: CartanType,
        #[arg(long)]
        rank: usize,
        /// Compute every root, not one per length.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The extension of sl2 by its (k+1)-dimensional module.
    Lee {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Named example instances.
    Fixtures {
        #[arg(long)]
        list: bool,
        /// Print the instance document of one fixture.
        #[arg(long)]
        show: Option<String>,
    },
}

fn exit_code(e: &Error) -> u8 {
    if e.is_invalid_involution() {
        EXIT_INVALID_INVOLUTION
    } else if matches!(e, Error::InternalInconsistency(_)) {
        EXIT_CROSS_CHECK
    } else {
        EXIT_MALFORMED
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize") + "\n"
}

fn read_document(file: Option<&str>) -> Result<String, (u8, String)> {
    let read = match file {
        None | Some("-") => std::io::read_to_string(std::io::stdin()),
        Some(path) => std::fs::read_to_string(path),
    };
    read.map_err(|e| (EXIT_MALFORMED, format!("cannot read {}: {e}", file.unwrap_or("standard input"))))
}

fn lee_text(r: &LeeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra         sl2 + V_{} (dim {})", r.k, r.dim);
    let _ = writeln!(s, "CR dim/codim    {} / {}", r.cr_dim, r.cr_codim);
    if !r.in_hypothesis {
        let _ = writeln!(s, "note            k is not a positive even number");
    }
    let _ = writeln!(s, "fundamental     {}", if r.fundamental { "yes" } else { "no" });
    let _ = writeln!(s, "Levi order      {}", r.levi_order);
    let _ = writeln!(s, "contact order   {}", r.contact_order);
    let dims: Vec<String> = r.levi_chain_dims.iter().map(usize::to_string).collect();
    let _ = writeln!(s, "Levi chain      dim = {}", dims.join(" > "));
    let failed = r.failed_checks();
    let _ = writeln!(
        s,
        "cross-checks    {}",
        if failed.is_empty() {
            format!("{} passed", r.cross_checks.len())
        } else {
            format!("FAILED: {}", failed.join(", "))
        }
    );
    s
}

fn analyze(file: Option<String>, fixture: Option<String>, format: Format) -> Result<(String, u8), (u8, String)> {
    let spec = match fixture {
        Some(name) => InstanceSpec { fixture: Some(name), ..InstanceSpec::default() },
        None => {
            let text = read_document(file.as_deref())?;
            parse_instance(&text).map_err(|e| (exit_code(&e), e.to_string()))?
        }
    };
    let err = |e: Error| (exit_code(&e), e.to_string());
    let out = analyze_spec(&spec).map_err(err)?;
    let code = if out.report.failed_checks().is_empty() { 0 } else { EXIT_CROSS_CHECK };
    let text = match format {
        Format::Json => json(&out),
        Format::Text => match (&out.report, spec.resolve().map_err(err)?) {
            (Report::Parabolic(r), Instance::Parabolic(p)) => render_text(&p, r),
            (Report::LeeExtension(r), _) => lee_text(r),
            _ => unreachable!("report kind follows the instance kind"),
        },
    };
    Ok((text, code))
}

fn enumerate(
    cartan: CartanType,
    rank: usize,
    bound: Option<usize>,
    format: Format,
    exec: Execution,
) -> Result<(String, u8), (u8, String)> {
    let rs = RootSystem::build(cartan, rank).map_err(|e| (exit_code(&e), e.to_string()))?;
    let e = Enumeration::new(Arc::new(rs), bound);
    let results = e.run(exec);
    let summary = e.summarize(&results);
    let code = if summary.total_failures() == 0 { 0 } else { EXIT_CROSS_CHECK };
    let mut s = String::new();
    match format {
        Format::Json => {
            for r in &results {
                s.push_str(&serde_json::to_string(r).expect("report types serialize"));
                s.push('\n');
            }
            s.push_str(&serde_json::to_string(&serde_json::json!({ "summary": summary })).expect("serializes"));
            s.push('\n');
        }
        Format::Text => {
            let _ = writeln!(s, "system          {cartan}{rank}");
            let _ = writeln!(s, "involutions     {}", summary.involutions);
            let _ = writeln!(s, "instances       {}", summary.instances);
            for (order, n) in &summary.levi_orders {
                let _ = writeln!(s, "  Levi order {order:<9} {n}");
            }
            for (name, n) in &summary.failures {
                let first = summary
                    .first_failure
                    .get(name)
                    .map_or(String::new(), |k| format!("  first: crossed {:?}, sigma #{}", k.crossed, k.sigma));
                let _ = writeln!(s, "  {name:<52} {n:>5} failures{first}");
            }
        }
    }
    Ok((s, code))
}

fn qbeta(cartan: CartanType, rank: usize, all: bool, format: Format) -> Result<(String, u8), (u8, String)> {
    let rs = RootSystem::build(cartan, rank).map_err(|e| (exit_code(&e), e.to_string()))?;
    let reps = representatives(&rs);
    let jobs: Vec<_> = if all {
        rs.ids()
            .map(|b| {
                let length = reps
                    .iter()
                    .find(|(_, r)| rs.is_long(*r) == rs.is_long(b))
                    .map(|(l, _)| *l)
                    .expect("every root has a length class");
                (length, b)
            })
            .collect()
    } else {
        reps
    };
    let entries: Vec<TableEntry> = map_ordered(Execution::default(), &jobs, |&(l, b)| table_entry(&rs, l, b));
    let code = if entries.iter().all(|e| e.witness_valid) { 0 } else { EXIT_CROSS_CHECK };
    let s = match format {
        Format::Json => json(&entries),
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                let expected = e.expected.map_or("-".to_string(), |q| q.to_string());
                let flag = if e.expected.is_some() && !e.ok() { "  MISMATCH" } else { "" };
                let _ = writeln!(
                    s,
                    "{:<28} {:<7} q = {} (table {expected})  ({}){flag}",
                    e.display,
                    format!("{:?}", e.length).to_lowercase(),
                    e.got,
                    e.witness.join(", ")
                );
            }
            s
        }
    };
    Ok((s, code))
}

fn lee(k: usize, format: Format) -> Result<(String, u8), (u8, String)> {
    let r = lee_report(k).map_err(|e| (exit_code(&e), e.to_string()))?;
    let code = if r.failed_checks().is_empty() { 0 } else { EXIT_CROSS_CHECK };
    let s = match format {
        Format::Json => json(&r),
        Format::Text => lee_text(&r),
    };
    Ok((s, code))
}

fn fixtures(list: bool, show: Option<String>) -> Result<(String, u8), (u8, String)> {
    let mut s = String::new();
    if let Some(name) = show {
        let f = crorder::fixtures::get(&name).map_err(|e| (exit_code(&e), e.to_string()))?;
        s = json(&f.spec);
    } else if list {
        for f in crorder::fixtures::all() {
            let _ = writeln!(s, "{:<22} {}", f.name, f.description);
        }
    } else {
        return Err((EXIT_MALFORMED, "fixtures: pass --list or --show NAME".into()));
    }
    Ok((s, 0))
}

fn configure_threads() -> Result<(), (u8, String)> {
    let Ok(v) = std::env::var("CRORDER_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| (EXIT_MALFORMED, format!("CRORDER_THREADS must be a positive integer, got '{v}'")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| (EXIT_MALFORMED, e.to_string()))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Analyze { file, fixture, format } => {
            if file.is_none() && fixture.is_none() && std::io::IsTerminal::is_terminal(&std::io::stdin()) {
                return Err((EXIT_MALFORMED, "analyze: pass a file, `-`, or --fixture NAME".into()));
            }
            analyze(file, fixture, format)
        }
        Command::Enumerate { cartan, rank, bound, format, sequential } => {
            enumerate(cartan, rank, bound, format, execution(sequential))
        }
        Command::Qbeta { cartan, rank, all, format } => qbeta(cartan, rank, all, format),
        Command::Lee { k, format } => lee(k, format),
        Command::Fixtures { list, show } => fixtures(list, show),
    });
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
