//! Batch front end for the classification library: classify user-supplied
//! structure constants, replay the twenty-family catalog against the recorded
//! table, list the families, and sample random in-domain points.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liefol::exec::Mode;
use liefol::families::verify::{verify_catalog, VerificationReport, VerifyOptions};
use liefol::hermitian::{classify, ClassificationResult};
use liefol::liealg::PARAM_NAMES;
use liefol::report::export_catalog;
use liefol::scalar::parse_scalar;
use liefol::{Catalog, Fault, StructureConstants};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// The recorded catalog table `verify-paper` diffs against.
const GOLDEN: &str = include_str!("../data/families.json");

#[derive(Parser)]
#[command(
    name = "liefol",
    version,
    about = "Exact classification of 4-dimensional metric Lie algebras \
             carrying a conformal, minimal 2-dimensional foliation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one structure-constant assignment read from a JSON file
    Classify {
        /// JSON object mapping parameter names to scalar expressions
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Re-derive the twenty-family catalog and check every subfamily claim
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for the per-claim sample streams
        #[arg(long, env = "LIEALG_SEED", default_value_t = 0)]
        seed: u64,
        /// Random samples per claim
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Self-test hook: mutate the catalog before checking. Known ids:
        /// g6-w2-sign, g1-theta2-drop, g4-r-sign, g18-z1-drop, g17-z3-sign,
        /// g1-ak-wrong-branch, g4-k-whole
        #[arg(long, value_parser = parse_fault)]
        inject_fault: Option<Fault>,
    },
    /// List the families of the catalog
    ListFamilies {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw random in-domain points from one family and classify each
    Sample {
        /// Family id in 1..=20
        #[arg(long)]
        family: u8,
        /// Number of points to draw
        #[arg(short = 'n', long = "count", default_value_t = 100)]
        count: usize,
        #[arg(long, env = "LIEALG_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(ValueEnum, Copy, Clone)]
enum Format {
    Json,
    Text,
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    s.parse()
}

/// A command failure carrying its exit code: 1 for verification failures,
/// 2 for usage and parse errors.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { input, format } => cmd_classify(&input, format),
        Command::VerifyPaper { format, out, seed, samples, inject_fault } => {
            cmd_verify_paper(format, out.as_deref(), seed, samples, inject_fault)
        }
        Command::ListFamilies { format } => cmd_list_families(format),
        Command::Sample { family, count, seed, format } => {
            cmd_sample(family, count, seed, format)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut rendered = serde_json::to_string_pretty(value).expect("reports serialize");
    rendered.push('\n');
    rendered
}

#[derive(Serialize)]
struct ClassifyReport {
    /// All fourteen constants, rendered.
    constants: BTreeMap<String, String>,
    is_lie_algebra: bool,
    /// The fourteen closure residuals, in system order.
    residuals: Vec<String>,
    classification: ClassificationResult,
}

fn cmd_classify(input: &Path, format: Format) -> Result<(), Failure> {
    let text = fs::read_to_string(input)
        .map_err(|e| usage(format!("cannot read {}: {e}", input.display())))?;
    let entries: BTreeMap<String, String> = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: not a JSON string map: {e}", input.display())))?;
    let mut sc = StructureConstants::zero();
    for (name, expr) in &entries {
        let value = parse_scalar(expr).map_err(|e| usage(format!("parameter `{name}`: {e}")))?;
        match sc.field_mut(name) {
            Some(slot) => *slot = value,
            None => {
                return Err(usage(format!(
                    "unknown parameter `{name}`; expected one of: {}",
                    PARAM_NAMES.join(", ")
                )))
            }
        }
    }
    let report = ClassifyReport {
        constants: sc.fields().map(|(n, v)| (n.to_string(), v.to_string())).collect(),
        is_lie_algebra: sc.is_lie_algebra(),
        residuals: sc.jacobi_residuals().iter().map(|r| r.to_string()).collect(),
        classification: classify(&sc),
    };
    let rendered = match format {
        Format::Json => to_pretty_json(&report),
        Format::Text => render_classify(&report),
    };
    print!("{rendered}");
    Ok(())
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn render_classify(report: &ClassifyReport) -> String {
    let mut out = String::new();
    let c = &report.classification;
    let _ = writeln!(out, "lie algebra: {}", yes_no(report.is_lie_algebra));
    let _ = writeln!(
        out,
        "almost Kähler: {}   integrable: {}   Kähler: {}",
        yes_no(c.almost_kahler),
        yes_no(c.integrable),
        yes_no(c.kahler)
    );
    let _ = writeln!(out, "witnesses:");
    let _ = writeln!(out, "  theta1 - 2a      = {}", c.witnesses.theta1_minus_2a);
    let _ = writeln!(out, "  theta2 + 2alpha  = {}", c.witnesses.theta2_plus_2alpha);
    let _ = writeln!(out, "  2z1 - z4 - w2    = {}", c.witnesses.two_z1_minus_z4_minus_w2);
    let _ = writeln!(out, "  2z2 + z3 + w1    = {}", c.witnesses.two_z2_plus_z3_plus_w1);
    let _ = writeln!(out, "foliation:");
    let _ = writeln!(out, "  riemannian: {}", yes_no(c.foliation.riemannian));
    let _ = writeln!(out, "  totally geodesic leaves: {}", yes_no(c.foliation.totally_geodesic));
    let _ = writeln!(out, "  horizontal integrable: {}", yes_no(c.foliation.h_integrable));
    let _ = writeln!(out, "  mean curvature: {}", c.foliation.mean_curvature);
    if !report.is_lie_algebra {
        let _ = writeln!(out, "nonzero closure residuals:");
        for (i, r) in report.residuals.iter().enumerate() {
            if r != "0" {
                let _ = writeln!(out, "  #{}: {}", i + 1, r);
            }
        }
    }
    out
}

#[derive(Serialize)]
struct VerifyPaperReport {
    ok: bool,
    seed: u64,
    samples_per_claim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    fault: Option<String>,
    catalog_matches_golden: bool,
    families: Vec<VerificationReport>,
    claims: Vec<VerificationReport>,
}

fn cmd_verify_paper(
    format: Format,
    out: Option<&Path>,
    seed: u64,
    samples: usize,
    fault: Option<Fault>,
) -> Result<(), Failure> {
    let catalog = match fault {
        Some(f) => Catalog::with_fault(f),
        None => Catalog::standard(),
    };
    let run = verify_catalog(&catalog, &VerifyOptions { seed, samples, mode: Mode::default() });
    let export = serde_json::to_value(export_catalog(&catalog)).expect("export serializes");
    let golden: serde_json::Value =
        serde_json::from_str(GOLDEN).expect("recorded catalog table parses");
    let catalog_matches_golden = export == golden;
    let report = VerifyPaperReport {
        ok: run.ok && catalog_matches_golden,
        seed: run.seed,
        samples_per_claim: run.samples_per_claim,
        fault: fault.map(|f| f.id().to_string()),
        catalog_matches_golden,
        families: run.families,
        claims: run.claims,
    };
    let rendered = match format {
        Format::Json => to_pretty_json(&report),
        Format::Text => render_verify(&report),
    };
    match out {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    if report.ok {
        Ok(())
    } else {
        let mut failing: Vec<String> = report
            .families
            .iter()
            .filter(|r| !r.ok())
            .map(|r| format!("family {} closure", r.family))
            .collect();
        failing.extend(report.claims.iter().filter(|r| !r.ok()).map(|r| {
            format!("family {} class {}", r.family, r.class.expect("claim reports carry a class"))
        }));
        if !catalog_matches_golden {
            failing.push("catalog export differs from the recorded table".into());
        }
        Err(Failure { code: 1, message: format!("verification failed: {}", failing.join("; ")) })
    }
}

fn dims(report: &VerificationReport) -> String {
    if report.branch_params.is_empty() {
        "-".to_string()
    } else {
        let list: Vec<String> = report.branch_params.iter().map(|n| n.to_string()).collect();
        list.join(",")
    }
}

fn render_verify(report: &VerifyPaperReport) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "catalog verification  seed={}  samples/claim={}",
        report.seed, report.samples_per_claim
    );
    if let Some(fault) = &report.fault {
        let _ = write!(out, "  fault={fault}");
    }
    out.push('\n');
    let _ = writeln!(out, "families:");
    for r in &report.families {
        let _ = writeln!(
            out,
            "  g{:<3} closure {}",
            r.family,
            if r.ok() { "ok" } else { "FAILED" }
        );
    }
    let _ = writeln!(out, "claims:");
    for r in &report.claims {
        let class = r.class.expect("claim reports carry a class");
        let _ = writeln!(
            out,
            "  g{:<3} {ratio:<3} {:<11} dims {:<8} {}",
            r.family,
            r.subject,
            dims(r),
            if r.ok() { "ok" } else { "FAILED" },
            ratio = class.label(),
        );
    }
    let mut broken: Vec<&VerificationReport> = Vec::new();
    broken.extend(report.families.iter().filter(|r| !r.ok()));
    broken.extend(report.claims.iter().filter(|r| !r.ok()));
    if !broken.is_empty() {
        let _ = writeln!(out, "failures:");
        for r in broken {
            let subject = match r.class {
                Some(class) => format!("g{} {}", r.family, class.label()),
                None => format!("g{} closure", r.family),
            };
            for line in &r.failures {
                let _ = writeln!(out, "  {subject}: {line}");
            }
        }
    }
    let _ = writeln!(
        out,
        "catalog table: {}",
        if report.catalog_matches_golden {
            "matches recorded export"
        } else {
            "DIFFERS from recorded export"
        }
    );
    let _ = writeln!(out, "result: {}", if report.ok { "ok" } else { "FAILED" });
    out
}

fn cmd_list_families(format: Format) -> Result<(), Failure> {
    let catalog = Catalog::standard();
    match format {
        Format::Json => print!("{}", to_pretty_json(&export_catalog(&catalog))),
        Format::Text => {
            for f in &catalog.families {
                let params: Vec<String> = f.params.iter().map(|p| p.name()).collect();
                println!(
                    "g{:<3} case {}  {:<25} params: {}",
                    f.id,
                    f.case,
                    f.tag,
                    params.join(", ")
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SamplePoint {
    params: BTreeMap<String, String>,
    almost_kahler: bool,
    integrable: bool,
    kahler: bool,
}

#[derive(Serialize, Default)]
struct SampleTally {
    lie_algebra: usize,
    almost_kahler: usize,
    integrable: usize,
    kahler: usize,
}

#[derive(Serialize)]
struct SampleReport {
    family: u8,
    seed: u64,
    count: usize,
    points: Vec<SamplePoint>,
    tally: SampleTally,
}

fn cmd_sample(family: u8, count: usize, seed: u64, format: Format) -> Result<(), Failure> {
    let catalog = Catalog::standard();
    let spec = catalog.family(family).map_err(|e| usage(e.to_string()))?;
    // Streams 0..=99 belong to verify-paper; keep sampling decorrelated.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1_000 + u64::from(family));
    let mut points = Vec::with_capacity(count);
    let mut tally = SampleTally::default();
    for _ in 0..count {
        let (bindings, sc) = spec.sample(&mut rng);
        let c = classify(&sc);
        tally.lie_algebra += usize::from(sc.is_lie_algebra());
        tally.almost_kahler += usize::from(c.almost_kahler);
        tally.integrable += usize::from(c.integrable);
        tally.kahler += usize::from(c.kahler);
        points.push(SamplePoint {
            params: bindings.iter().map(|(p, v)| (p.name(), v.to_string())).collect(),
            almost_kahler: c.almost_kahler,
            integrable: c.integrable,
            kahler: c.kahler,
        });
    }
    let report = SampleReport { family, seed, count, points, tally };
    let rendered = match format {
        Format::Json => to_pretty_json(&report),
        Format::Text => render_sample(spec.params.iter().map(|p| p.name()).collect(), &report),
    };
    print!("{rendered}");
    Ok(())
}

fn render_sample(param_order: Vec<String>, report: &SampleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "family g{}  seed={}  points={}",
        report.family, report.seed, report.count
    );
    for (i, p) in report.points.iter().enumerate() {
        let assign: Vec<String> = param_order
            .iter()
            .map(|name| format!("{name}={}", p.params[name]))
            .collect();
        let _ = writeln!(
            out,
            "  #{:<4} {}   AK:{} I:{} K:{}",
            i + 1,
            assign.join(" "),
            yes_no(p.almost_kahler),
            yes_no(p.integrable),
            yes_no(p.kahler)
        );
    }
    let t = &report.tally;
    let _ = writeln!(
        out,
        "tally: lie {}/{c}, almost Kähler {}/{c}, integrable {}/{c}, Kähler {}/{c}",
        t.lie_algebra,
        t.almost_kahler,
        t.integrable,
        t.kahler,
        c = report.count
    );
    out
}
