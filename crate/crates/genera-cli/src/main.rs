//! Command-line front end for the genera library: series generation,
//! sequence printing, genus evaluation, identity verification, the
//! vanishing engine, and manifold-descriptor generation.
//!
//! Exit codes: 0 on success (all checks pass), 1 when a verification
//! fails, 2 on usage or input errors. All numeric output is exact reduced
//! rationals; identical invocations produce byte-identical output.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use genera::genus::{
    verify_a2_is_ahat, verify_ak_scaling, verify_exp_identity, verify_todd_decomposition,
    GenusName, GenusSpec,
};
use genera::hattori::{
    check_theorem, render_report_text, solve_vanishing, synthesize_consistent_table,
};
use genera::manifold::{cp_table, hypersurface_table, product_table, CharacteristicTable};
use genera::series::{a_recip_k_series, ahat_series, ak_series, l_series, todd_series};
use genera::symmetric::sequence::multiplicative_sequence;
use genera::symmetric::VarKind;
use genera::{PowerSeries, Rational};

#[derive(Parser)]
#[command(
    name = "genera",
    version,
    about = "Exact multiplicative sequences, genera, and circle-action vanishing checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    Todd,
    Ahat,
    #[value(name = "l", alias = "L")]
    L,
    #[value(name = "a_k")]
    AK,
    #[value(name = "a_recip_k")]
    ARecipK,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GradingArg {
    Chern,
    Pontrjagin,
}

impl From<GradingArg> for VarKind {
    fn from(g: GradingArg) -> VarKind {
        match g {
            GradingArg::Chern => VarKind::Chern,
            GradingArg::Pontrjagin => VarKind::Pontrjagin,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact coefficients of a characteristic power series.
    Series {
        name: SeriesName,
        /// k parameter for the a_k / a_recip_k families.
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the sequence polynomials K_1..K_n of a genus.
    Sequence {
        name: SeriesName,
        #[arg(long)]
        n: usize,
        /// Variable grading; defaults to the genus's native one.
        #[arg(long, value_enum)]
        grading: Option<GradingArg>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Evaluate a genus against a manifold descriptor.
    Genus {
        name: SeriesName,
        #[arg(long)]
        k: Option<i64>,
        #[command(flatten)]
        source: ManifoldSource,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Verify the symbolic identities behind the vanishing argument.
    Verify {
        /// One of: todd-decomposition, exp-identity, ak-scaling, a2-ahat.
        identity: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        kmax: i64,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Run the vanishing engine: symbolic with --n/--k0, numeric with
    /// --manifest.
    Hattori {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k0: Option<i64>,
        #[arg(long, conflicts_with_all = ["n", "k0"])]
        manifest: Option<PathBuf>,
        #[arg(long = "max-k", default_value_t = 5)]
        max_k: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Write a manifold descriptor to a JSON file.
    #[command(name = "mk-manifold")]
    MkManifold {
        #[command(subcommand)]
        kind: MkKind,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ManifoldSource {
    /// Path to a manifold descriptor JSON file.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Built-in CP^n.
    #[arg(long)]
    cp: Option<usize>,
    /// Built-in degree-d hypersurface in CP^{n+1}, written "n,d".
    #[arg(long)]
    hypersurface: Option<String>,
}

#[derive(Subcommand)]
enum MkKind {
    /// CP^n.
    Cp {
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Degree-d hypersurface in CP^{n+1}.
    Hypersurface {
        n: usize,
        d: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Product of two descriptors.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Pseudo-random table satisfying every Hattori relation.
    Synthetic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k0: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> genera::Result<ExitCode> {
    match command {
        Command::Series {
            name,
            k,
            order,
            format,
        } => cmd_series(name, k, order, format),
        Command::Sequence {
            name,
            n,
            grading,
            k,
            format,
        } => cmd_sequence(name, n, grading, k, format),
        Command::Genus {
            name,
            k,
            source,
            format,
        } => cmd_genus(name, k, source, format),
        Command::Verify {
            identity,
            all,
            n,
            kmax,
            k,
            order,
        } => cmd_verify(identity, all, n, kmax, k, order),
        Command::Hattori {
            n,
            k0,
            manifest,
            max_k,
            format,
        } => cmd_hattori(n, k0, manifest, max_k, format),
        Command::MkManifold { kind } => cmd_mk_manifold(kind),
    }
}

fn series_label(name: SeriesName, k: Option<i64>) -> String {
    match name {
        SeriesName::Todd => "todd".into(),
        SeriesName::Ahat => "ahat".into(),
        SeriesName::L => "L".into(),
        SeriesName::AK => format!("a_k(k={})", k.unwrap_or(0)),
        SeriesName::ARecipK => format!("a_recip_k(k={})", k.unwrap_or(0)),
    }
}

fn require_k(name: SeriesName, k: Option<i64>) -> genera::Result<i64> {
    match (name, k) {
        (SeriesName::AK | SeriesName::ARecipK, Some(k)) => Ok(k),
        (SeriesName::AK | SeriesName::ARecipK, None) => {
            Err(genera::Error::BadK("this family needs --k".into()))
        }
        (_, _) => Ok(0),
    }
}

fn build_series(name: SeriesName, k: Option<i64>, order: usize) -> genera::Result<PowerSeries> {
    let k = require_k(name, k)?;
    Ok(match name {
        SeriesName::Todd => todd_series(order),
        SeriesName::Ahat => ahat_series(order),
        SeriesName::L => l_series(order),
        SeriesName::AK => ak_series(k, order)?,
        SeriesName::ARecipK => a_recip_k_series(k, order)?,
    })
}

fn genus_name(name: SeriesName, k: Option<i64>) -> genera::Result<GenusName> {
    let k = require_k(name, k)?;
    Ok(match name {
        SeriesName::Todd => GenusName::Todd,
        SeriesName::Ahat => GenusName::AHat,
        SeriesName::L => GenusName::L,
        SeriesName::AK => GenusName::Ak(k),
        SeriesName::ARecipK => GenusName::ARecipK(k),
    })
}

fn sequence_symbol(name: SeriesName, k: Option<i64>) -> String {
    match name {
        SeriesName::Todd => "T".into(),
        SeriesName::Ahat => "Ahat".into(),
        SeriesName::L => "L".into(),
        SeriesName::AK => format!("A{}", k.unwrap_or(0)),
        SeriesName::ARecipK => format!("Arecip{}", k.unwrap_or(0)),
    }
}

fn cmd_series(
    name: SeriesName,
    k: Option<i64>,
    order: usize,
    format: OutputFormat,
) -> genera::Result<ExitCode> {
    let series = build_series(name, k, order)?;
    match format {
        OutputFormat::Text => {
            for (m, c) in series.coeffs().iter().enumerate() {
                println!("x^{m}: {c}");
            }
        }
        OutputFormat::Json => {
            let coeffs: Vec<String> = series.coeffs().iter().map(Rational::to_string).collect();
            let doc = serde_json::json!({
                "name": series_label(name, k),
                "order": order,
                "coefficients": coeffs,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sequence(
    name: SeriesName,
    n: usize,
    grading: Option<GradingArg>,
    k: Option<i64>,
    format: OutputFormat,
) -> genera::Result<ExitCode> {
    let grading: VarKind = grading.map(Into::into).unwrap_or_else(|| {
        genus_name(name, k.or(Some(2)))
            .map(|g| g.default_grading())
            .unwrap_or(VarKind::Chern)
    });
    let order = match grading {
        VarKind::Chern => n,
        VarKind::Pontrjagin => 2 * n,
    };
    let series = build_series(name, k, order.max(2))?;
    let seq = multiplicative_sequence(&series, n, grading)?;
    let symbol = sequence_symbol(name, k);
    match format {
        OutputFormat::Text => {
            for (m, poly) in seq.iter().enumerate() {
                println!("{symbol}_{} = {poly}", m + 1);
            }
        }
        OutputFormat::Json => {
            let polys: Vec<serde_json::Value> = seq
                .iter()
                .enumerate()
                .map(|(m, poly)| {
                    let terms: BTreeMap<String, String> = poly
                        .terms()
                        .map(|(mon, c)| (mon.display_with(poly.kind()), c.to_string()))
                        .collect();
                    serde_json::json!({
                        "name": format!("{symbol}_{}", m + 1),
                        "terms": terms,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "name": series_label(name, k),
                "grading": match grading { VarKind::Chern => "chern", VarKind::Pontrjagin => "pontrjagin" },
                "polynomials": polys,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_source(source: &ManifoldSource) -> genera::Result<CharacteristicTable> {
    if let Some(path) = &source.manifest {
        return CharacteristicTable::load(path);
    }
    if let Some(n) = source.cp {
        if n < 1 {
            return Err(genera::Error::ParseError("--cp needs n >= 1".into()));
        }
        return Ok(cp_table(n));
    }
    if let Some(nd) = &source.hypersurface {
        let (n, d) = nd.split_once(',').ok_or_else(|| {
            genera::Error::ParseError(format!("--hypersurface wants \"n,d\", got {nd:?}"))
        })?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| genera::Error::ParseError(format!("bad n in {nd:?}")))?;
        let d: i64 = d
            .trim()
            .parse()
            .map_err(|_| genera::Error::ParseError(format!("bad d in {nd:?}")))?;
        if n < 1 || d < 1 {
            return Err(genera::Error::ParseError(
                "--hypersurface needs n >= 1 and d >= 1".into(),
            ));
        }
        return Ok(hypersurface_table(n, d));
    }
    unreachable!("clap enforces exactly one source")
}

fn cmd_genus(
    name: SeriesName,
    k: Option<i64>,
    source: ManifoldSource,
    format: OutputFormat,
) -> genera::Result<ExitCode> {
    let table = load_source(&source)?;
    let gname = genus_name(name, k)?;
    let spec = GenusSpec::for_half_dim(gname, table.half_dim())?;
    let value = table.evaluate_genus(&spec)?;
    match format {
        OutputFormat::Text => println!("{value}"),
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "genus": series_label(name, k),
                "half_dim": table.half_dim(),
                "value": value.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct VerifyRun {
    lines: Vec<String>,
    failures: usize,
}

impl VerifyRun {
    fn new() -> Self {
        VerifyRun {
            lines: Vec::new(),
            failures: 0,
        }
    }

    fn record(&mut self, ok: bool, what: String, witness: String) {
        if ok {
            self.lines.push(format!("ok   {what}"));
        } else {
            self.failures += 1;
            self.lines.push(format!("FAIL {what}: witness = {witness}"));
        }
    }
}

fn cmd_verify(
    identity: Option<String>,
    all: bool,
    n: usize,
    kmax: i64,
    k: Option<i64>,
    order: usize,
) -> genera::Result<ExitCode> {
    let which = match (&identity, all) {
        (Some(name), false) => name.clone(),
        (None, true) => "all".to_string(),
        (None, false) => {
            return Err(genera::Error::ParseError(
                "pass an identity name or --all".into(),
            ))
        }
        (Some(_), true) => {
            return Err(genera::Error::ParseError(
                "--all conflicts with a named identity".into(),
            ))
        }
    };
    let mut run = VerifyRun::new();

    if which == "all" || which == "todd-decomposition" {
        for nn in 1..=n {
            for kk in 1..=nn {
                let v = verify_todd_decomposition(kk, nn)?;
                run.record(
                    v.ok,
                    format!("todd-decomposition n={nn} k={kk}"),
                    v.witness.to_string(),
                );
            }
        }
    }
    if which == "all" || which == "exp-identity" {
        let ks: Vec<i64> = match k {
            Some(k) => vec![k],
            None => (2..=kmax).collect(),
        };
        for kk in ks {
            let v = verify_exp_identity(kk, order)?;
            run.record(
                v.ok,
                format!("exp-identity k={kk} order={order}"),
                v.witness.to_string(),
            );
        }
    }
    if which == "all" || which == "ak-scaling" {
        let ks: Vec<i64> = match k {
            Some(k) => vec![k],
            None => (2..=kmax).collect(),
        };
        for kk in ks {
            for nn in 1..=n {
                let v = verify_ak_scaling(kk, nn)?;
                run.record(
                    v.ok,
                    format!("ak-scaling k={kk} n={nn}"),
                    v.witness.to_string(),
                );
            }
        }
    }
    if which == "all" || which == "a2-ahat" {
        for nn in 1..=n {
            let v = verify_a2_is_ahat(nn)?;
            let witness = if v.series_witness.is_zero() {
                v.poly_witness.to_string()
            } else {
                v.series_witness.to_string()
            };
            run.record(v.ok(), format!("a2-ahat n={nn}"), witness);
        }
    }
    if run.lines.is_empty() {
        return Err(genera::Error::ParseError(format!(
            "unknown identity {which:?}; expected todd-decomposition, exp-identity, ak-scaling or a2-ahat"
        )));
    }

    for line in &run.lines {
        println!("{line}");
    }
    if run.failures == 0 {
        println!("all {} checks passed", run.lines.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{} of {} checks failed", run.failures, run.lines.len());
        Ok(ExitCode::from(1))
    }
}

fn cmd_hattori(
    n: Option<usize>,
    k0: Option<i64>,
    manifest: Option<PathBuf>,
    max_k: i64,
    format: OutputFormat,
) -> genera::Result<ExitCode> {
    let (report, hypotheses) = match (manifest, n, k0) {
        (Some(path), None, None) => {
            let table = CharacteristicTable::load(&path)?;
            let hyps = *table.hypotheses();
            (check_theorem(&table, max_k)?, Some(hyps))
        }
        (None, Some(n), Some(k0)) => (solve_vanishing(n, k0)?, None),
        _ => {
            return Err(genera::Error::ParseError(
                "pass either --manifest or both --n and --k0".into(),
            ))
        }
    };
    match format {
        OutputFormat::Text => {
            print!("{}", render_report_text(&report));
            if let Some(h) = hypotheses {
                println!(
                    "hypotheses (assumed, not verified): connected={}, h1_zero={}, nontrivial_circle_action={}",
                    h.connected, h.h1_zero, h.nontrivial_circle_action
                );
            }
        }
        OutputFormat::Json => print!("{}", report.to_json_string()),
    }
    if report.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_mk_manifold(kind: MkKind) -> genera::Result<ExitCode> {
    let (table, out) = match kind {
        MkKind::Cp { n, out } => {
            if n < 1 {
                return Err(genera::Error::ParseError("cp needs n >= 1".into()));
            }
            (cp_table(n), out)
        }
        MkKind::Hypersurface { n, d, out } => {
            if n < 1 || d < 1 {
                return Err(genera::Error::ParseError(
                    "hypersurface needs n >= 1 and d >= 1".into(),
                ));
            }
            (hypersurface_table(n, d), out)
        }
        MkKind::Product { a, b, out } => {
            let ta = CharacteristicTable::load(&a)?;
            let tb = CharacteristicTable::load(&b)?;
            (product_table(&ta, &tb)?, out)
        }
        MkKind::Synthetic { n, k0, seed, out } => (synthesize_consistent_table(n, k0, seed)?, out),
    };
    table.save(&out)?;
    println!("wrote {}", out.display());
    Ok(ExitCode::SUCCESS)
}
