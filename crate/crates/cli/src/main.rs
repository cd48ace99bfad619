//! `yangian`: expansions and verification suites for the truncated Yangian.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use yangian_core::drinfeld::CurrentKind;
use yangian_core::hopf::{HopfContext, Placement};
use yangian_core::rtt::GaussVariant;
use yangian_core::scalar::rat;
use yangian_core::serialize::{element_text, pair_text, series_json, series_latex, word_text, RenderKey};
use yangian_core::suites::{self, default_order, Suite, SuiteConfig};
use yangian_core::{QuotientMode, RttError, Series, Yangian};

#[derive(Parser)]
#[command(name = "yangian", version, about = "Exact computations in the Yangian Y(gl_n) / Y(sl_n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Gl,
    Sl,
}

impl From<Mode> for QuotientMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Gl => QuotientMode::Gl,
            Mode::Sl => QuotientMode::Sl,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    DeltaE,
    DeltaF,
    DeltaH,
    #[value(name = "s-e")]
    SE,
    #[value(name = "s-f")]
    SF,
    #[value(name = "s-h")]
    SH,
    PhiE,
    PhiF,
    PhiH,
    Qdet,
    Minor,
    Gauss,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::DeltaE => "delta-e",
            Target::DeltaF => "delta-f",
            Target::DeltaH => "delta-h",
            Target::SE => "s-e",
            Target::SF => "s-f",
            Target::SH => "s-h",
            Target::PhiE => "phi-e",
            Target::PhiF => "phi-f",
            Target::PhiH => "phi-h",
            Target::Qdet => "qdet",
            Target::Minor => "minor",
            Target::Gauss => "gauss",
        }
    }

    /// RTT-side targets default to `gl`, everything in the Drinfel'd basis
    /// to `sl`.
    fn default_mode(self) -> Mode {
        match self {
            Target::Qdet | Target::Minor | Target::Gauss => Mode::Gl,
            _ => Mode::Sl,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    /// The explicit formula, evaluated as printed.
    Formula,
    /// The RTT map pulled back through the current realisation.
    Pullback,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    /// `T = F K E`.
    Ldu,
    /// `T = E~ K~ F~`.
    Udl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    RMatrix,
    Algebra,
    Minors,
    Gauss,
    Drinfeld,
    HopfAxioms,
    Theorem5,
    Theorem6,
    Sl2,
    Sl3,
    All,
}

#[derive(clap::Args)]
struct Common {
    /// Matrix size.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..=6))]
    n: u64,
    /// Truncation order (default 4 for n = 2, 3 for n = 3, 2 beyond).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    order: Option<u32>,
    /// Quotient (default gl for qdet, minor and gauss, sl otherwise).
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Output format (json for expand, text for verify by default).
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a normal-ordered expansion.
    Expand {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        common: Common,
        /// Current index for delta-*, s-* and phi-*.
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Minor rows, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        /// Minor columns.
        #[arg(long, value_delimiter = ',')]
        cols: Vec<usize>,
        #[arg(long, value_enum, default_value = "formula")]
        source: Source,
        #[arg(long, value_enum, default_value = "ldu")]
        variant: Variant,
    },
    /// Run a verification suite; exit 0 iff everything passes.
    Verify {
        #[arg(value_enum, required_unless_present = "suite_flag", conflicts_with = "suite_flag")]
        suite: Option<SuiteArg>,
        #[arg(long = "suite", value_enum, id = "suite_flag")]
        suite_flag: Option<SuiteArg>,
        #[command(flatten)]
        common: Common,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// A usage error (exit 2); failing checks are reported through the output.
struct Usage(String);

impl From<RttError> for Usage {
    fn from(e: RttError) -> Self {
        Usage(e.to_string())
    }
}

fn text_series<K: RenderKey + std::fmt::Debug>(s: &Series<K>, render: impl Fn(&K) -> String) -> String {
    let mut out = format!("1: {}\n", yangian_core::scalar::format_rational(s.constant()));
    for (p, c) in s.coeffs().iter().enumerate() {
        out.push_str(&format!("u^-{}: {}\n", p + 1, element_text(c, &render)));
    }
    out
}

/// Renders one series in the requested format; `meta` goes into the JSON
/// envelope.
trait Render {
    fn render(&self, format: Format, meta: Value) -> String;
}

impl Render for yangian_core::AlgebraSeries {
    fn render(&self, format: Format, mut meta: Value) -> String {
        match format {
            Format::Json => {
                meta["series"] = series_json(self);
                to_json(&meta)
            }
            Format::Latex => series_latex(self) + "\n",
            Format::Text => text_series(self, word_text),
        }
    }
}

impl Render for yangian_core::TensorSeries {
    fn render(&self, format: Format, mut meta: Value) -> String {
        match format {
            Format::Json => {
                meta["series"] = series_json(self);
                to_json(&meta)
            }
            Format::Latex => series_latex(self) + "\n",
            Format::Text => text_series(self, pair_text),
        }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn kind_of(t: Target) -> CurrentKind {
    match t {
        Target::DeltaE | Target::SE | Target::PhiE => CurrentKind::E,
        Target::DeltaF | Target::SF | Target::PhiF => CurrentKind::F,
        _ => CurrentKind::H,
    }
}

#[allow(clippy::too_many_arguments)]
fn expand(target: Target, common: &Common, i: usize, rows: &[usize], cols: &[usize], source: Source, variant: Variant) -> Result<String, Usage> {
    let n = common.n as usize;
    let order = common.order.unwrap_or_else(|| default_order(n));
    let mode = common.mode.unwrap_or(target.default_mode());
    let y = Yangian::new(n, order, mode.into()).map_err(RttError::from)?;
    let mut meta = json!({
        "target": target.name(),
        "n": n,
        "order": order,
        "mode": QuotientMode::from(mode).to_string(),
    });
    let index_ok = (1..n).contains(&i);
    let current = matches!(
        target,
        Target::DeltaE | Target::DeltaF | Target::DeltaH | Target::SE | Target::SF | Target::SH | Target::PhiE | Target::PhiF | Target::PhiH
    );
    if current {
        if !index_ok {
            return Err(Usage(format!("--i must lie in 1..={}", n - 1)));
        }
        meta["i"] = json!(i);
    }
    let f = common.format.unwrap_or(Format::Json);
    Ok(match target {
        Target::DeltaE | Target::DeltaF | Target::DeltaH => {
            let ctx = HopfContext::new(&y)?;
            let kind = kind_of(target);
            let p = Placement::printed();
            let s = match source {
                Source::Pullback => ctx.pullback_delta(kind, i),
                Source::Formula => match kind {
                    CurrentKind::E => ctx.delta_e_formula(i, &p),
                    CurrentKind::F => ctx.delta_f_formula(i, &p),
                    CurrentKind::H => {
                        let df = ctx.delta_f_formula(i, &p);
                        let de = ctx.delta_e_formula(i, &p);
                        ctx.delta_h_formula(i, &p, &df, &de)
                    }
                },
            };
            meta["source"] = json!(source_name(source));
            meta["argument"] = json!("u");
            s.render(f, meta)
        }
        Target::SE | Target::SF | Target::SH => {
            let ctx = HopfContext::new(&y)?;
            let kind = kind_of(target);
            let p = Placement::printed();
            let half = rat(n as i64, 2);
            let s = match source {
                Source::Pullback => ctx.pullback_antipode(kind, i).shift(&half),
                Source::Formula => match kind {
                    CurrentKind::E => ctx.antipode_e_formula(i, &p)?,
                    CurrentKind::F => ctx.antipode_f_formula(i, &p)?,
                    CurrentKind::H => ctx.antipode_h_formula(i, &p, &ctx.antipode_deps_from_formulas()?)?,
                },
            };
            meta["source"] = json!(source_name(source));
            meta["argument"] = json!(format!("u+{}", yangian_core::scalar::format_rational(&half)));
            s.render(f, meta)
        }
        Target::PhiE | Target::PhiF | Target::PhiH => {
            let cur = yangian_core::drinfeld::Currents::new(&y)?;
            cur.series(kind_of(target), i).render(f, meta)
        }
        Target::Qdet => y.qdet().render(f, meta),
        Target::Minor => {
            if rows.is_empty() || rows.len() != cols.len() {
                return Err(Usage("minor needs --rows and --cols of equal nonzero length".into()));
            }
            meta["rows"] = json!(rows);
            meta["cols"] = json!(cols);
            y.minor(rows, cols)?.render(f, meta)
        }
        Target::Gauss => {
            let v = match variant {
                Variant::Ldu => GaussVariant::LowerDiagUpper,
                Variant::Udl => GaussVariant::UpperDiagLower,
            };
            let g = y.gauss_decompose(v)?;
            let mut parts: BTreeMap<String, &yangian_core::AlgebraSeries> = BTreeMap::new();
            for ((a, b), s) in &g.e {
                parts.insert(format!("e{a}{b}"), s);
            }
            for ((a, b), s) in &g.f {
                parts.insert(format!("f{a}{b}"), s);
            }
            for (a, s) in g.k.iter().enumerate() {
                parts.insert(format!("k{}", a + 1), s);
            }
            meta["variant"] = json!(match variant {
                Variant::Ldu => "ldu",
                Variant::Udl => "udl",
            });
            match f {
                Format::Json => {
                    let obj: serde_json::Map<String, Value> = parts.iter().map(|(k, s)| (k.clone(), series_json(*s))).collect();
                    meta["components"] = Value::Object(obj);
                    to_json(&meta)
                }
                Format::Latex => parts.iter().map(|(k, s)| format!("{k}(u) = {}\n", series_latex(*s))).collect(),
                Format::Text => parts.iter().map(|(k, s)| format!("{k}(u):\n{}", text_series(s, word_text))).collect(),
            }
        }
    })
}

fn source_name(s: Source) -> &'static str {
    match s {
        Source::Formula => "formula",
        Source::Pullback => "pullback",
    }
}

fn verify(suite: SuiteArg, common: &Common, seed: u64) -> Result<(String, bool), Usage> {
    let n = common.n as usize;
    let mut cfg = SuiteConfig::new(n).with_seed(seed);
    if let Some(o) = common.order {
        cfg = cfg.with_order(o);
    }
    if let Some(m) = common.mode {
        cfg = cfg.with_mode(m.into());
    }
    let report = match suite {
        SuiteArg::All => suites::run_all(&cfg)?,
        other => {
            let s = to_suite(other);
            if !s.applies_to(&cfg) {
                return Err(Usage(format!("suite {s} does not apply to n = {n} in {} mode", cfg.mode)));
            }
            suites::run(s, &cfg)?
        }
    };
    let text = match common.format.unwrap_or(Format::Text) {
        Format::Json => to_json(&report.to_json()),
        Format::Text => report.to_string(),
        Format::Latex => return Err(Usage("verify supports text and json output".into())),
    };
    Ok((text, report.passed()))
}

fn to_suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::RMatrix => Suite::RMatrix,
        SuiteArg::Algebra => Suite::Algebra,
        SuiteArg::Minors => Suite::Minors,
        SuiteArg::Gauss => Suite::Gauss,
        SuiteArg::Drinfeld => Suite::Drinfeld,
        SuiteArg::HopfAxioms => Suite::HopfAxioms,
        SuiteArg::Theorem5 => Suite::Theorem5,
        SuiteArg::Theorem6 => Suite::Theorem6,
        SuiteArg::Sl2 => Suite::Sl2,
        SuiteArg::Sl3 => Suite::Sl3,
        SuiteArg::All => unreachable!("handled by the caller"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Expand {
            target,
            common,
            i,
            rows,
            cols,
            source,
            variant,
        } => expand(*target, common, *i, rows, cols, *source, *variant).map(|s| (s, true)),
        Command::Verify {
            suite,
            suite_flag,
            common,
            seed,
        } => verify(suite.or(*suite_flag).expect("clap requires one"), common, *seed),
    };
    match result {
        Ok((out, ok)) => {
            // the whole output is built before anything is written
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
