//! `sgag` — batch interface for numerical-semigroup ring invariants.
//!
//! Exit codes are a stable contract: 0 success, 1 verification mismatch,
//! 2 input error, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sgag_core::classify::classify;
use sgag_core::fixtures::run_reference_fixtures;
use sgag_core::herzog::{ag_by_matrix, closed_form_invariants, herzog_matrix};
use sgag_core::ideal::{hilbert_coefficients, hilbert_function, RelativeIdeal};
use sgag_core::scan::{run_scan, LawSuite, ScanConfig};
use sgag_core::semigroup::{NumericalSemigroup, SemigroupInfo};

#[derive(Parser)]
#[command(
    name = "sgag",
    version,
    about = "Invariants of numerical-semigroup rings: canonical ideals, Hilbert coefficients, Gorenstein and almost-Gorenstein classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classical invariants of a semigroup.
    Info {
        /// Generators, e.g. "3,7,8" or "⟨3,7,8⟩".
        generators: String,
        #[arg(long)]
        json: bool,
    },
    /// Full Gorenstein / almost-Gorenstein classification report.
    Classify {
        generators: String,
        #[arg(long)]
        json: bool,
    },
    /// Herzog matrix and closed-form invariants (3-generated, non-symmetric).
    Herzog {
        generators: String,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert function table of a monomial ideal, as CSV.
    Hilbert {
        generators: String,
        /// Generators of the ideal, e.g. "3,5"; must lie in H and exclude 0.
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
    },
    /// Run theorem-law suites over all semigroups up to a genus bound.
    Scan {
        #[arg(long, default_value_t = 8)]
        genus_max: u32,
        /// Comma-separated suite ids; defaults to all of them.
        #[arg(long)]
        checks: Option<String>,
        /// Worker threads; defaults to $SGAG_WORKERS, then to auto.
        #[arg(long)]
        workers: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format; inferred from the --out extension when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Replay the frozen example fixtures and report mismatches.
    Verify {
        /// Only run fixtures whose name contains this substring.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum CliError {
    /// Exit 1: a verification mismatch (failed fixture, scan counterexample).
    Mismatch,
    /// Exit 2: unusable input.
    Input(String),
    /// Exit 3: filesystem trouble.
    Io(String),
}

fn main() -> ExitCode {
    // Die quietly when stdout is piped into a reader that closes early
    // (head, grep -m), like every other line-oriented Unix tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Mismatch) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn parse_semigroup(text: &str) -> Result<NumericalSemigroup, CliError> {
    text.parse::<NumericalSemigroup>()
        .map_err(|e| CliError::Input(format!("{text:?}: {e}")))
}

fn parse_int_list(text: &str) -> Result<Vec<i64>, CliError> {
    text.trim()
        .trim_start_matches(['⟨', '<', '('])
        .trim_end_matches(['⟩', '>', ')'])
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("cannot parse integer list {text:?}")))
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Info { generators, json } => cmd_info(&generators, json),
        Command::Classify { generators, json } => cmd_classify(&generators, json),
        Command::Herzog { generators, json } => cmd_herzog(&generators, json),
        Command::Hilbert {
            generators,
            ideal,
            n_max,
        } => cmd_hilbert(&generators, &ideal, n_max),
        Command::Scan {
            genus_max,
            checks,
            workers,
            out,
            format,
        } => cmd_scan(genus_max, checks.as_deref(), workers, out, format),
        Command::Verify { only } => cmd_verify(only.as_deref()),
    }
}

fn cmd_info(generators: &str, json: bool) -> Result<(), CliError> {
    let h = parse_semigroup(generators)?;
    let info = SemigroupInfo::of(&h);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&info).expect("serializable")
        );
        return Ok(());
    }
    println!("H = {}", h.descriptor());
    if h.is_dvr() {
        println!("the full semigroup ℕ: the semigroup ring is a DVR");
    }
    println!("value set      {}", h.elements());
    println!("frobenius f    {}", info.frobenius);
    println!("conductor c    {}", info.conductor);
    println!("genus          {}", info.genus);
    println!("gaps           {:?}", info.gaps);
    println!("multiplicity e {}", info.multiplicity);
    println!("embedding v    {}", info.embedding_dim);
    println!("type r         {}", info.cm_type);
    println!("PF(H)          {:?}", info.pseudo_frobenius);
    println!("Apéry (mod e)  {:?}", info.apery);
    println!("symmetric      {}", info.symmetric);
    println!("almost symm.   {}", info.almost_symmetric);
    Ok(())
}

fn cmd_classify(generators: &str, json: bool) -> Result<(), CliError> {
    let h = parse_semigroup(generators)?;
    let report = classify(&h);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
        return Ok(());
    }
    println!("H = {}", h.descriptor());
    println!("verdict: {}", report.verdict);
    let inv = &report.invariants;
    println!(
        "e0={} e1={} red={} r={} v={} e={} c={} f={} genus={}",
        inv.e0, inv.e1, inv.red, inv.r, inv.v, inv.e, inv.c, inv.f, inv.genus
    );
    if let Some(b) = inv.b {
        println!("herzog b = {b}");
    }
    println!(
        "lengths: ℓ(I/Q)={} ℓ(I²/QI)={} ℓ(R/I)={} ℓ(S/R)={} ℓ(S/K)={} ℓ(R/𝔠)={} μ(I)={}",
        inv.lengths.i_over_q,
        inv.lengths.i2_over_qi,
        inv.lengths.r_over_i,
        inv.lengths.s_over_r,
        inv.lengths.s_over_k,
        inv.lengths.r_over_c,
        inv.lengths.mu_i
    );
    if let Some(mm) = inv.mm_gorenstein {
        println!("𝔪:𝔪 Gorenstein: {mm}");
    }
    if let Some(ia) = inv.idealization_ag {
        println!("idealization conditions (𝔪I=𝔪Q and I²=QI): {ia}");
    }
    println!("v(R⋉𝔪) = {}", inv.v_of_idealization);
    if let Some(batteries) = &report.batteries {
        println!("batteries consistent: {}", batteries.consistent);
    }
    Ok(())
}

fn cmd_herzog(generators: &str, json: bool) -> Result<(), CliError> {
    let h = parse_semigroup(generators)?;
    let data = herzog_matrix(&h).map_err(|e| CliError::Input(e.to_string()))?;
    let cf = closed_form_invariants(&data, &h);
    let ag = ag_by_matrix(&data);
    if json {
        let doc = serde_json::json!({
            "semigroup": SemigroupInfo::of(&h),
            "matrix": data,
            "closed_form": cf,
            "almost_gorenstein": ag,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
        return Ok(());
    }
    let pow = |v: &str, e: i64| {
        if e == 1 {
            v.to_string()
        } else {
            format!("{v}^{e}")
        }
    };
    let top = [
        pow("X", data.alpha),
        pow("Y", data.beta),
        pow("Z", data.gamma),
    ];
    let bottom = [
        pow("Y", data.beta_prime),
        pow("Z", data.gamma_prime),
        pow("X", data.alpha_prime),
    ];
    let width = top
        .iter()
        .chain(bottom.iter())
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    println!("H = {}", h.descriptor());
    println!("Herzog matrix:");
    println!(
        "  [ {:<w$}  {:<w$}  {:<w$} ]",
        top[0],
        top[1],
        top[2],
        w = width
    );
    println!(
        "  [ {:<w$}  {:<w$}  {:<w$} ]",
        bottom[0],
        bottom[1],
        bottom[2],
        w = width
    );
    println!("d1={} d2={} d3={}", data.d1, data.d2, data.d3);
    println!("l={} n={} b={}", data.ell, data.n, data.b);
    println!(
        "canonical pair: I = (t^{}, t^{}), Q = (t^{})",
        cf.c,
        cf.c + cf.b,
        cf.c
    );
    println!("l(I/Q)={} e1={}", cf.ell_i_q, cf.e1);
    println!("almost Gorenstein (by matrix): {ag}");
    Ok(())
}

fn cmd_hilbert(generators: &str, ideal: &str, n_max: u32) -> Result<(), CliError> {
    let h = parse_semigroup(generators)?;
    let igens = parse_int_list(ideal)?;
    if igens.contains(&0) {
        return Err(CliError::Input("ideal contains 0: unit ideal".into()));
    }
    if let Some(&bad) = igens.iter().find(|&&g| !h.elements().contains(g)) {
        return Err(CliError::Input(format!(
            "ideal generator {bad} lies outside {}",
            h.descriptor()
        )));
    }
    let i =
        RelativeIdeal::from_generators(&h, &igens).map_err(|e| CliError::Input(e.to_string()))?;
    let hd = hilbert_coefficients(&i).map_err(|e| CliError::Input(e.to_string()))?;
    println!("n,exact,polynomial,agree");
    for n in 0..=n_max as i64 {
        let exact = hilbert_function(&i, n).map_err(|e| CliError::Input(e.to_string()))?;
        let poly = hd.e0 * (n + 1) - hd.e1;
        println!("{n},{exact},{poly},{}", exact == poly);
    }
    Ok(())
}

fn cmd_scan(
    genus_max: u32,
    checks: Option<&str>,
    workers: Option<usize>,
    out: Option<PathBuf>,
    format: Option<Format>,
) -> Result<(), CliError> {
    if genus_max < 1 {
        return Err(CliError::Input("--genus-max must be at least 1".into()));
    }
    let checks = match checks {
        None => LawSuite::ALL.to_vec(),
        Some(list) => {
            let mut suites = Vec::new();
            for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let law = LawSuite::parse(id).ok_or_else(|| {
                    CliError::Input(format!(
                        "unknown check {id:?}; known: {}",
                        LawSuite::ALL.map(|l| l.id()).join(",")
                    ))
                })?;
                suites.push(law);
            }
            if suites.is_empty() {
                return Err(CliError::Input(
                    "--checks must name at least one suite".into(),
                ));
            }
            suites
        }
    };
    let workers = workers
        .or_else(|| {
            std::env::var("SGAG_WORKERS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    let report = run_scan(&ScanConfig {
        genus_max,
        checks,
        workers,
    });
    let format = format.unwrap_or_else(|| {
        match out
            .as_ref()
            .and_then(|p| p.extension())
            .and_then(|e| e.to_str())
        {
            Some("csv") => Format::Csv,
            _ => Format::Json,
        }
    });
    let rendered = match format {
        Format::Json => report.render_json(),
        Format::Csv => report.render_csv(),
    };
    match out {
        Some(path) => std::fs::write(&path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    if report.counterexample_count() > 0 {
        eprintln!(
            "scan found {} counterexample(s)",
            report.counterexample_count()
        );
        return Err(CliError::Mismatch);
    }
    Ok(())
}

fn cmd_verify(only: Option<&str>) -> Result<(), CliError> {
    let outcomes: Vec<_> = run_reference_fixtures()
        .into_iter()
        .filter(|o| only.is_none_or(|f| o.name.contains(f)))
        .collect();
    if outcomes.is_empty() {
        eprintln!("warning: no fixtures matched; nothing verified");
        return Ok(());
    }
    let mut failed = 0usize;
    for outcome in &outcomes {
        if outcome.passed() {
            println!("ok   {}", outcome.name);
        } else {
            failed += 1;
            println!("FAIL {}", outcome.name);
            for line in &outcome.failures {
                println!("     {line}");
            }
        }
    }
    println!("{} fixtures, {} failed", outcomes.len(), failed);
    if failed > 0 {
        return Err(CliError::Mismatch);
    }
    Ok(())
}
