//! `idxcert`: build, check and tabulate index certificates.
//!
//! Exit codes: 0 pass, 1 verification failed, 2 precondition violated,
//! 3 internal checker disagreement, 64 usage error, 65 unparsable input.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idxcert_core::certify::{
    from_json_str, index_table, realize, search_plane_pair, to_json_string, verify_certificate,
    verify_claim, Certificate, Claim, IndexTable, Mode, VerificationReport,
};
use idxcert_core::numtheory::{euler_phi, indices_with_phi_at_most};
use idxcert_core::{selftest, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

#[derive(Parser)]
#[command(
    name = "idxcert",
    version,
    about = "Index certificates for klt Calabi-Yau pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Trusting,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Trusting => Mode::Trusting,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Certify that φ(M) ≤ 2N puts M in the index set of dimension N − 1.
    Realize {
        #[arg(long = "dim", value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
        index: u64,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// Write the certificate here and the report to standard output.
        /// Without it the certificate goes to standard output and the report
        /// to standard error.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Re-check a certificate file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List every m with φ(m) ≤ B.
    Enumerate {
        #[arg(long, value_name = "B", value_parser = clap::value_parser!(u64).range(1..))]
        phi_bound: u64,
    },
    /// Index sets in the given dimensions with a status per element.
    Table {
        #[arg(long, value_delimiter = ',', default_value = "1,2", value_parser = clap::value_parser!(u64).range(1..))]
        dims: Vec<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// First line/conic or point arrangement on P^D with the given index.
    Search {
        #[arg(long, value_name = "D", value_parser = clap::value_parser!(u64).range(1..=2))]
        dim: u64,
        #[arg(long, value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
        index: u64,
        #[arg(long, value_name = "K", default_value_t = 4)]
        max_components: usize,
    },
    /// Run the built-in invariant sweeps.
    Selftest,
}

fn report_json(report: &VerificationReport) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
}

fn report_text(report: &VerificationReport) -> String {
    let mode = match report.mode {
        Mode::Strict => "strict",
        Mode::Trusting => "trusting",
    };
    let index = report
        .index
        .map_or("undefined".to_string(), |m| m.to_string());
    let mut s = String::new();
    let _ = writeln!(s, "passed     {}", if report.passed { "yes" } else { "no" });
    let _ = writeln!(s, "mode       {mode}");
    let _ = writeln!(s, "dimension  {}", report.dim);
    let _ = writeln!(s, "index      {index}");
    let _ = writeln!(s, "nodes      {}", report.nodes.len());
    for c in &report.cited_leaves {
        let at = if c.path.is_empty() { "root" } else { &c.path };
        let _ = writeln!(
            s,
            "cited      {at}: dim {}, index {}: {}",
            c.dim, c.index, c.cite
        );
    }
    for h in &report.unchecked_hypotheses {
        let _ = writeln!(s, "assumed    {h}");
    }
    for n in &report.nodes {
        for c in n.checks.iter().filter(|c| !c.passed) {
            let at = if n.path.is_empty() { "root" } else { &n.path };
            let detail = c.detail.as_deref().unwrap_or("");
            let _ = writeln!(s, "failed     {at} {}: {detail}", c.step);
        }
    }
    for c in report.claim_checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(
            s,
            "failed     claim {}: {}",
            c.step,
            c.detail.as_deref().unwrap_or("")
        );
    }
    s
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report_json(report),
        Format::Table => report_text(report),
    }
}

fn status(report: &VerificationReport) -> ExitCode {
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("idxcert: {msg}");
    ExitCode::from(code)
}

fn cmd_realize(n: u64, m: u64, mode: Mode, out: Option<PathBuf>, format: Format) -> ExitCode {
    if n < 3 {
        return fail(EXIT_PRECONDITION, format!("need --dim >= 3, got {n}"));
    }
    let cert = match realize(n, m) {
        Ok(c) => c,
        Err(e @ Error::Precondition(_)) => return fail(EXIT_PRECONDITION, e),
        Err(e) => return fail(EXIT_DISAGREEMENT, e),
    };
    let claim = Claim {
        dim: (n - 1) as usize,
        index: m,
    };
    let report = verify_claim(&cert, mode, &claim);
    let json = to_json_string(&cert, Some(claim));
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, json) {
                return fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display()));
            }
            print!("{}", render(&report, format));
        }
        None => {
            print!("{json}");
            eprint!("{}", render(&report, format));
        }
    }
    status(&report)
}

fn cmd_verify(file: PathBuf, mode: Mode, format: Format) -> ExitCode {
    let text = match fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_USAGE, format!("cannot read {}: {e}", file.display())),
    };
    let doc = match from_json_str(&text) {
        Ok(d) => d,
        Err(e) => return fail(EXIT_PARSE, format!("{}: {e}", file.display())),
    };
    let report = match doc.claim {
        Some(claim) => verify_claim(&doc.cert, mode, &claim),
        None => verify_certificate(&doc.cert, mode),
    };
    print!("{}", render(&report, format));
    status(&report)
}

fn cmd_enumerate(bound: u64) -> ExitCode {
    match indices_with_phi_at_most(bound) {
        Ok(ms) => {
            let line: Vec<String> = ms.iter().map(u64::to_string).collect();
            println!("{}", line.join(" "));
            ExitCode::SUCCESS
        }
        Err(e) => fail(EXIT_PRECONDITION, e),
    }
}

fn table_text(t: &IndexTable) -> String {
    let mut s = String::new();
    let kind = if t.exact { "exact" } else { "lower bound" };
    let _ = writeln!(s, "I({}), {kind}, {} elements", t.dim, t.rows.len());
    let _ = writeln!(s, "{:>6}  {:>6}  status", "m", "phi(m)");
    for r in &t.rows {
        let _ = writeln!(s, "{:>6}  {:>6}  {}", r.m, r.phi, r.status.label());
    }
    for &m in &t.excluded {
        let phi = euler_phi(m).unwrap_or(0);
        let _ = writeln!(
            s,
            "{m:>6}  {phi:>6}  excluded by the surface classification (not computed)"
        );
    }
    s
}

fn cmd_table(dims: &[u64], format: Format) -> ExitCode {
    let mut tables = Vec::new();
    for &d in dims {
        match index_table(d as usize) {
            Ok(t) => tables.push(t),
            Err(e) => return fail(EXIT_PRECONDITION, e),
        }
    }
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&tables).expect("tables serialize")
        ),
        Format::Table => {
            let blocks: Vec<String> = tables.iter().map(table_text).collect();
            print!("{}", blocks.join("\n"));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_search(dim: u64, index: u64, max_components: usize) -> ExitCode {
    let Some(leaf) = search_plane_pair(dim as usize, index, max_components) else {
        println!("none");
        return ExitCode::SUCCESS;
    };
    let cert = Certificate::WpsLeaf(leaf);
    let report = verify_certificate(&cert, Mode::Strict);
    if !report.passed || report.index != Some(index) {
        eprint!("{}", report_text(&report));
        return fail(EXIT_DISAGREEMENT, "search hit does not pass the verifier");
    }
    print!("{}", to_json_string(&cert, None));
    ExitCode::SUCCESS
}

fn cmd_selftest() -> ExitCode {
    let results = selftest::run();
    let mut ok = true;
    for r in &results {
        ok &= r.passed;
        println!(
            "{} {}: {}",
            if r.passed { "pass" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Realize {
            n,
            index,
            mode,
            out,
            format,
        } => cmd_realize(n, index, mode.into(), out, format),
        Command::Verify { file, mode, format } => cmd_verify(file, mode.into(), format),
        Command::Enumerate { phi_bound } => cmd_enumerate(phi_bound),
        Command::Table { dims, format } => cmd_table(&dims, format),
        Command::Search {
            dim,
            index,
            max_components,
        } => cmd_search(dim, index, max_components),
        Command::Selftest => cmd_selftest(),
    }
}
