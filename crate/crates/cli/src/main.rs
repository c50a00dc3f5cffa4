//! `supermac`: build Macdonald superpolynomials, run the verification
//! suites and manage the on-disk cache.

mod cache;
mod report;
mod suites;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use supermac_core::algebra::AlgebraError;
use supermac_core::inner::{WeightKind, ZWeight};
use supermac_core::macdonald::integral_form;
use supermac_core::special::{
    hall_littlewood, hall_littlewood_bar, jack_schur, latex_label, latex_ratfunc, schur_s, schur_sbar, schur_st,
    KostkaKind, KostkaMatrix, SpecialError,
};
use supermac_core::superpoly::{EngineError, SymSuperPoly};
use supermac_core::SuperPartition;
use thiserror::Error;

use cache::Cache;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Parser)]
#[command(name = "supermac", version, about = "Macdonald polynomials in superspace")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    /// the monic polynomial
    #[value(name = "P")]
    P,
    /// the integral form
    #[value(name = "J")]
    J,
    /// q := 0
    Hl,
    /// bar, then q := 0
    HlBar,
    /// q := t
    St,
    /// q := t := 0
    S,
    /// bar, then q := t := 0
    Sbar,
    /// α := 1 in the Jack family
    SJack,
}

fn parse_kind(s: &str) -> Result<WeightKind, String> {
    s.parse()
}

fn parse_kostka_kind(s: &str) -> Result<KostkaKind, String> {
    KostkaKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown Kostka kind '{s}'"))
}

fn parse_label(s: &str) -> Result<SuperPartition, String> {
    s.parse::<SuperPartition>().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the family of degree (N|M) and store it in the cache.
    Compute {
        n: u32,
        m: u32,
        #[arg(value_parser = parse_kind, default_value = "new")]
        kind: WeightKind,
        /// Ignore cached results.
        #[arg(long)]
        force: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(suite_names()))]
        suite: String,
        /// Largest total degree n.
        #[arg(long, default_value_t = 6)]
        max_total: u32,
        /// Include the expensive consistency degrees.
        #[arg(long)]
        long: bool,
        /// Degrees processed concurrently.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Print one polynomial of a family.
    Show {
        #[arg(value_parser = parse_label)]
        label: SuperPartition,
        #[arg(value_parser = parse_kind, default_value = "new")]
        kind: WeightKind,
        #[arg(long, value_enum, default_value_t = What::P)]
        what: What,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a Kostka matrix.
    Kostka {
        n: u32,
        m: u32,
        #[arg(long, value_parser = parse_kostka_kind, default_value = "qt")]
        kind: KostkaKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Remove the cache, or only the files of one degree.
    Clean { n: Option<u32>, m: Option<u32> },
}

fn suite_names() -> Vec<&'static str> {
    let mut v = suites::SUITES.to_vec();
    v.push("all");
    v
}

fn check_degree(n: u32, m: u32) -> Result<(), CliError> {
    if m * m.saturating_sub(1) / 2 > n {
        return Err(CliError::Usage(format!("no superpartitions of degree ({n}|{m})")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Compute { n, m, kind, force } => {
            check_degree(n, m)?;
            let cache = Cache::from_env(force);
            let w = ZWeight::new(kind);
            let lookup = cache.family(n, m, &w)?;
            let hit = lookup.was_hit();
            let (report, _) = lookup.into_inner();
            println!(
                "({n}|{m}) {}: {} superpartitions, {} equations, {} unknowns, {}{}",
                w.key(),
                report.num_superpartitions,
                report.num_equations,
                report.num_unknowns,
                if report.consistent { "consistent" } else { "inconsistent" },
                if hit { " (cached)" } else { "" }
            );
            for p in &report.failing_pairs {
                println!("  <P_({}), P_({})> = {}", p.first, p.second, p.residual);
            }
            println!("{}", cache.degree_dir(n, m).join(w.key()).display());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, max_total, long, jobs, format, force } => {
            if let Some(j) = jobs {
                // only fails if a global pool already exists
                let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
            }
            let ctx = suites::Ctx { cache: Cache::from_env(force), max_total, long };
            let result = suites::run(&ctx, &suite)?;
            let json = serde_json::to_string_pretty(&result)? + "\n";
            let text = result.to_text();
            ctx.cache.write_report(&suite, &json, &text)?;
            match format {
                Format::Json => print!("{json}"),
                _ => print!("{text}"),
            }
            Ok(if result.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Show { label, kind, what, format } => {
            let (n, m) = label.degree();
            let cache = Cache::from_env(false);
            let needs_jack = what == What::SJack;
            let w = ZWeight::new(if needs_jack { WeightKind::JackAlpha } else { kind });
            let fam = cache
                .consistent_family(n, m, &w)?
                .map_err(|_| CliError::Usage(format!("the {} family does not exist at ({n}|{m})", w.key())))?;
            let poly = match what {
                What::P => fam.poly(&label),
                What::J => integral_form(&fam, &label),
                What::Hl => hall_littlewood(&fam)?.remove(&label).unwrap(),
                What::HlBar => hall_littlewood_bar(&fam)?.remove(&label).unwrap(),
                What::St => schur_st(&fam)?.remove(&label).unwrap(),
                What::S => schur_s(&fam)?.remove(&label).unwrap(),
                What::Sbar => schur_sbar(&fam)?.remove(&label).unwrap(),
                What::SJack => jack_schur(&fam)?.remove(&label).unwrap(),
            };
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&poly)?),
                Format::Latex => println!("{}", latex_poly(&poly, fam.index())),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Kostka { n, m, kind, format } => {
            check_degree(n, m)?;
            let cache = Cache::from_env(false);
            let fam = cache
                .consistent_family(n, m, &ZWeight::new(WeightKind::New))?
                .map_err(|_| CliError::Usage(format!("no family at ({n}|{m})")))?;
            let set = cache.kostka(&fam)?;
            let k = set.get(kind);
            match format {
                Format::Text => print!("{}", kostka_text(k)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&k.record())?),
                Format::Latex => print!("{}", k.to_latex()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Clean { n, m } => {
            let cache = Cache::from_env(false);
            match (n, m) {
                (Some(n), Some(m)) => cache.clean(Some((n, m)))?,
                (None, None) => cache.clean(None)?,
                _ => return Err(CliError::Usage("clean takes both N and M, or neither".into())),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Terms in dominance order, largest first.
fn latex_poly(f: &SymSuperPoly, order: &[SuperPartition]) -> String {
    let sym = f.basis().symbol();
    let mut out = String::new();
    for l in order {
        let c = f.coeff(l);
        if c.is_zero() {
            continue;
        }
        let body = latex_ratfunc(&c);
        let (neg, body) = match body.strip_prefix('-') {
            Some(rest) if c.is_polynomial() && c.num().nterms() == 1 => (true, rest.to_string()),
            _ => (false, body),
        };
        if !out.is_empty() {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let wrapped = if body == "1" {
            String::new()
        } else if c.is_polynomial() && c.num().nterms() > 1 {
            format!("({body})\\,")
        } else {
            format!("{body}\\,")
        };
        write!(out, "{wrapped}{sym}_{{{}}}", latex_label(l)).unwrap();
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn kostka_text(k: &KostkaMatrix) -> String {
    let cells: Vec<Vec<String>> = k.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    let labels: Vec<String> = k.index.iter().map(|l| format!("({l})")).collect();
    let first = labels.iter().map(|s| s.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..labels.len())
        .map(|j| cells.iter().map(|r| r[j].len()).chain([labels[j].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    write!(out, "{:first$}", "").unwrap();
    for (l, w) in labels.iter().zip(&widths) {
        write!(out, "  {l:w$}").unwrap();
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(&cells) {
        write!(out, "{l:first$}").unwrap();
        for (c, w) in row.iter().zip(&widths) {
            write!(out, "  {c:w$}").unwrap();
        }
        out.push('\n');
    }
    out
}
