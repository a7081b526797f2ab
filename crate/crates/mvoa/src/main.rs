use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use mvoa::gf2::{standard_code, Code, StandardCode, WeightEnumerator, Word};
use mvoa::hypotheses;
use mvoa::lattice;
use mvoa::mooncodes;
use mvoa::qchar;
use mvoa::qseries::{QSeries, DENOM};
use mvoa::selftest;

#[derive(Parser)]
#[command(name = "mvoa", version, about = "Exact moonshine-module combinatorics")]
struct Cli {
    /// Cap the worker-thread count (default: all cores). Results are
    /// byte-identical for any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named code, or verify a code family (`codes verify <name>`)
    Codes(CodesArgs),
    /// Check the two code-pair conditions with recheckable witnesses
    Hypotheses(HypothesesArgs),
    /// Report the five-step orbifold chain
    Chain(OutputArgs),
    /// Lattice presentations: classify/theta, `scan-bound <m>`, `frame-code <m>`
    Lattice(LatticeArgs),
    /// Exact graded characters
    Char(CharArgs),
    /// The length-(16+32n) series pair and its weight-one check
    Series(SeriesArgs),
    /// Run every module invariant
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct CodesArgs {
    /// Code key (s_e8, d_e8, d3, s_nat, d_nat, s_lambda, d_lambda,
    /// chain1..chain5, series_n, hamming8) or the word `verify`
    name: String,
    /// Family name after `verify`: e8, moonshine, lambda, chain, series
    family: Option<String>,
    /// Series index for `series_n` / `verify series`
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct HypothesesArgs {
    /// Key of the large code
    #[arg(long = "d", visible_alias = "D")]
    d: String,
    /// Key of the small code
    #[arg(long = "s", visible_alias = "S")]
    s: String,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct LatticeArgs {
    /// Presentation index 1..4, or `scan-bound` / `frame-code`
    selector: String,
    /// Presentation index when a mode word is given first
    index: Option<usize>,
    /// Theta series order (weights 0..=K)
    #[arg(long, default_value_t = 4)]
    theta_order: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CharArgs {
    /// Which character: moonshine, 2b, 3c, e8, j-oracle
    which: CharKind,
    /// Truncation order in integral weights
    #[arg(long, default_value_t = 6)]
    order: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharKind {
    Moonshine,
    #[value(name = "2b")]
    TwoB,
    #[value(name = "3c")]
    ThreeC,
    E8,
    JOracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SelftestArgs {
    /// Smaller sampled case counts
    #[arg(long)]
    quick: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    match run(cli.command) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            let payload = json!({ "schema": 1, "error": msg });
            eprintln!("{}", serde_json::to_string_pretty(&payload).unwrap());
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Codes(args) => run_codes(args),
        Command::Hypotheses(args) => run_hypotheses(args),
        Command::Chain(out) => run_chain(out),
        Command::Lattice(args) => run_lattice(args),
        Command::Char(args) => run_char(args),
        Command::Series(args) => run_series(args),
        Command::Selftest(args) => run_selftest(args),
    }
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), String> {
    match &out.out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| {
                    if text.ends_with('\n') {
                        Ok(())
                    } else {
                        stdout.write_all(b"\n")
                    }
                })
                .map_err(|e| e.to_string())
        }
    }
}

fn emit_json(out: &OutputArgs, value: &Value) -> Result<(), String> {
    emit(out, &serde_json::to_string_pretty(value).map_err(|e| e.to_string())?)
}

fn code_by_key(key: &str, n: usize) -> Result<Code, String> {
    let (s_e8, d_e8) = mooncodes::e8_codes();
    Ok(match key {
        "s_e8" => s_e8,
        "d_e8" => d_e8,
        "d3" => qchar::triple_code(),
        "s_nat" => mooncodes::moonshine_codes().small,
        "d_nat" => mooncodes::moonshine_codes().large,
        "s_lambda" => mooncodes::lambda_codes().0,
        "d_lambda" => mooncodes::lambda_codes().1,
        "hamming8" => standard_code(&StandardCode::Hamming8).map_err(|e| e.to_string())?,
        "series_n" => mooncodes::series_codes(n).map_err(|e| e.to_string())?.0,
        "series_n_dual" => mooncodes::series_codes(n).map_err(|e| e.to_string())?.1,
        key if key.starts_with("chain") => {
            let step: usize = key["chain".len()..]
                .parse()
                .map_err(|_| format!("bad chain key {key}"))?;
            if !(1..=5).contains(&step) {
                return Err(format!("chain step {step} outside 1..=5"));
            }
            mooncodes::orbifold_chain()[step - 1].0.clone()
        }
        _ => return Err(format!("unknown code key {key}")),
    })
}

fn run_codes(args: CodesArgs) -> Result<bool, String> {
    if args.name == "verify" {
        let family = args
            .family
            .as_deref()
            .ok_or_else(|| "verify needs a family name".to_string())?;
        return run_codes_verify(family, args.n, &args.out);
    }
    let code = code_by_key(&args.name, args.n)?;
    emit(&args.out, &code.to_text())?;
    Ok(true)
}

fn we_json(code: &Code) -> Value {
    Value::Array(
        WeightEnumerator::of_code(code)
            .to_decimal_strings()
            .into_iter()
            .map(Value::String)
            .collect(),
    )
}

fn min_weight_json(code: &Code) -> Value {
    match code.min_weight() {
        None => Value::Null,
        Some(mvoa::gf2::MinWeight::Exact(w)) => json!(w),
        Some(mvoa::gf2::MinWeight::GreaterThan(w)) => json!(format!(">{w}")),
    }
}

fn run_codes_verify(family: &str, n: usize, out: &OutputArgs) -> Result<bool, String> {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let push = |name: &str, ok: bool, checks: &mut Vec<(String, bool)>| {
        checks.push((name.to_string(), ok));
    };
    let report = match family {
        "e8" => {
            let (s, d) = mooncodes::e8_codes();
            push("dims_5_11", s.dim() == 5 && d.dim() == 11, &mut checks);
            push(
                "small_weight_enumerator",
                WeightEnumerator::of_code(&s).to_polynomial_string() == "X^16 + 30X^8 + 1",
                &mut checks,
            );
            push("small_inside_large", s.is_subcode_of(&d), &mut checks);
            push(
                "large_min_weight_4",
                d.min_weight() == Some(mvoa::gf2::MinWeight::Exact(4)),
                &mut checks,
            );
            push("duality", mooncodes::holomorphy_check(&d, &s), &mut checks);
            json!({
                "family": "e8",
                "small": { "n": s.len(), "k": s.dim(), "weights": we_json(&s) },
                "large": { "n": d.len(), "k": d.dim(), "min_weight": min_weight_json(&d) },
            })
        }
        "moonshine" => {
            let pair = mooncodes::moonshine_codes();
            push("dims_7_41", pair.small.dim() == 7 && pair.large.dim() == 41, &mut checks);
            let we = WeightEnumerator::of_code(&pair.small);
            push(
                "small_weight_enumerator",
                we.to_polynomial_string() == "X^48 + 3X^32 + 120X^24 + 3X^16 + 1",
                &mut checks,
            );
            let dual_we = WeightEnumerator::of_code(&pair.large);
            push("no_weight_2_words", dual_we.count(2).is_zero(), &mut checks);
            push(
                "large_min_weight_4",
                pair.large.min_weight() == Some(mvoa::gf2::MinWeight::Exact(4)),
                &mut checks,
            );
            push(
                "duality",
                mooncodes::holomorphy_check(&pair.large, &pair.small),
                &mut checks,
            );
            json!({
                "family": "moonshine",
                "small": { "n": pair.small.len(), "k": pair.small.dim(), "weights": we_json(&pair.small) },
                "large": { "n": pair.large.len(), "k": pair.large.dim(),
                           "min_weight": min_weight_json(&pair.large),
                           "weight_2_count": dual_we.count(2).to_string() },
            })
        }
        "lambda" => {
            let (s, d) = mooncodes::lambda_codes();
            push("dims_6_42", s.dim() == 6 && d.dim() == 42, &mut checks);
            push("all_words_doubled", s.words().all(|w| w.is_doubled()), &mut checks);
            let weight2: Vec<Word> = d
                .low_weight_words(2)
                .into_iter()
                .filter(|w| w.weight() == 2)
                .collect();
            let adjacent = weight2
                .iter()
                .all(|w| {
                    let sup = w.support();
                    sup[0] % 2 == 0 && sup[1] == sup[0] + 1
                });
            push("24_adjacent_weight_2_words", weight2.len() == 24 && adjacent, &mut checks);
            json!({
                "family": "lambda",
                "small": { "n": s.len(), "k": s.dim() },
                "large": { "n": d.len(), "k": d.dim(), "weight_2_count": weight2.len() },
            })
        }
        "chain" => {
            let chain = mooncodes::orbifold_chain();
            let (s_e8, d_e8) = mooncodes::e8_codes();
            let mut nested = true;
            for w in chain.windows(2) {
                nested &= w[0].0.is_subcode_of(&w[1].0) && w[1].1.is_subcode_of(&w[0].1);
            }
            push("nested", nested, &mut checks);
            push(
                "duals",
                chain.iter().all(|(s, d)| s.dual().same_code(d)),
                &mut checks,
            );
            push(
                "final_step_is_e8_pair",
                chain[4].0.same_code(&s_e8) && chain[4].1.same_code(&d_e8),
                &mut checks,
            );
            json!({
                "family": "chain",
                "dims": chain.iter().map(|(s, d)| json!([s.dim(), d.dim()])).collect::<Vec<_>>(),
            })
        }
        "series" => {
            let (s, d) = mooncodes::series_codes(n).map_err(|e| e.to_string())?;
            push("even", s.is_even(), &mut checks);
            push("duality", s.dual().same_code(&d), &mut checks);
            push("dim", s.dim() == 2 * n + 5, &mut checks);
            if n == 1 {
                let pair = mooncodes::moonshine_codes();
                push("matches_moonshine", s.same_code(&pair.small), &mut checks);
            }
            let w1 = qchar::series_weight_one(n).map_err(|e| e.to_string())?;
            push("weight_one_vanishes", w1.is_zero(), &mut checks);
            json!({
                "family": "series", "n": n,
                "small": { "n": s.len(), "k": s.dim() },
                "large": { "n": d.len(), "k": d.dim() },
            })
        }
        _ => return Err(format!("unknown verify family {family}")),
    };
    let pass = checks.iter().all(|(_, ok)| *ok);
    let payload = json!({
        "schema": 1,
        "report": report,
        "checks": checks.iter().map(|(n, ok)| json!({ "name": n, "pass": ok })).collect::<Vec<_>>(),
        "pass": pass,
    });
    emit_json(out, &payload)?;
    Ok(pass)
}

fn run_hypotheses(args: HypothesesArgs) -> Result<bool, String> {
    let d = code_by_key(&args.d, args.n)?;
    let s = code_by_key(&args.s, args.n)?;
    let report = hypotheses::check_conditions(&d, &s).map_err(|e| e.to_string())?;
    // re-verify every witness before reporting success
    let mut recheck_failures = Vec::new();
    for w in &report.witnesses {
        if let Err(reason) = hypotheses::verify_witness(&d, w) {
            recheck_failures.push(reason);
        }
    }
    let pass = report.pass && recheck_failures.is_empty();
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "alpha": w.alpha.bit_string(),
                "beta": w.beta.bit_string(),
                "blocks": w.blocks.iter().map(|b| b.to_text()).collect::<Vec<_>>(),
                "e": w.e.to_text(),
                "h_beta": w.h_beta.to_text(),
                "h_alpha_beta": w.h_alpha_beta.to_text(),
            })
        })
        .collect();
    let payload = json!({
        "schema": 1,
        "pass": pass,
        "condition1_failures": report.condition1_failures,
        "pair_count": report.witnesses.len() + report.failures.len(),
        "witnesses": witnesses,
        "failures": report.failures.iter().map(|f| json!({
            "alpha": f.alpha.bit_string(),
            "beta": f.beta.bit_string(),
            "reason": f.reason,
        })).collect::<Vec<_>>(),
        "recheck_failures": recheck_failures,
    });
    emit_json(&args.out, &payload)?;
    Ok(pass)
}

fn run_chain(out: OutputArgs) -> Result<bool, String> {
    let chain = mooncodes::orbifold_chain();
    let steps: Vec<Value> = chain
        .iter()
        .enumerate()
        .map(|(i, (s, d))| {
            json!({
                "step": i + 1,
                "small": s.to_text(),
                "small_dim": s.dim(),
                "dual_dim": d.dim(),
                "doubled": s.words().all(|w| w.is_doubled()),
            })
        })
        .collect();
    let payload = json!({ "schema": 1, "chain": steps });
    emit_json(&out, &payload)?;
    Ok(true)
}

fn run_lattice(args: LatticeArgs) -> Result<bool, String> {
    match args.selector.as_str() {
        "scan-bound" => {
            let m = args.index.ok_or("scan-bound needs a presentation index")?;
            let l = lattice::e8_variant(m).map_err(|e| e.to_string())?;
            let scan = lattice::conformal_bound_scan(&l).map_err(|e| e.to_string())?;
            let pass = scan.violations.is_empty();
            let payload = json!({
                "schema": 1,
                "presentation": m,
                "labels": scan.label_count,
                "max_offdiag": scan.max_offdiag.to_string(),
                "min_distance_sq": scan.min_distance_sq.to_string(),
                "violations": scan.violations.len(),
                "pass": pass,
            });
            emit_json(&args.out, &payload)?;
            Ok(pass)
        }
        "frame-code" => {
            let m = args.index.ok_or("frame-code needs a presentation index")?;
            let l = lattice::e8_variant(m).map_err(|e| e.to_string())?;
            let code = l.frame_tau_code().map_err(|e| e.to_string())?;
            emit(&args.out, &code.to_text())?;
            Ok(true)
        }
        selector => {
            let m: usize = selector
                .parse()
                .map_err(|_| format!("expected a presentation index or mode, got {selector}"))?;
            let l = lattice::e8_variant(m).map_err(|e| e.to_string())?;
            let class = l.classify();
            let theta = l.theta_series(args.theta_order).map_err(|e| e.to_string())?;
            let coeffs: Vec<Value> = (0..=args.theta_order)
                .map(|k| json!(theta.coeff_q(k).to_string()))
                .collect();
            let payload = json!({
                "schema": 1,
                "presentation": m,
                "even": class.even,
                "det": class.det.to_string(),
                "unimodular": class.unimodular,
                "theta": coeffs,
            });
            emit_json(&args.out, &payload)?;
            Ok(class.even && class.unimodular)
        }
    }
}

fn series_pairs(series: &QSeries) -> Vec<Value> {
    series
        .to_pairs()
        .into_iter()
        .map(|(e, c)| json!([e, c]))
        .collect()
}

fn format_series(which: &str, series: &QSeries, format: Format) -> String {
    match format {
        Format::Csv => series.to_csv(),
        Format::Text => format!("{which}: {series}\n"),
        Format::Json => serde_json::to_string_pretty(&json!({
            "schema": 1,
            "character": which,
            "denominator": DENOM,
            "coefficients": series_pairs(series),
        }))
        .unwrap(),
    }
}

fn run_char(args: CharArgs) -> Result<bool, String> {
    if args.order < 0 {
        return Err("order must be nonnegative".into());
    }
    let trunc = args.order * DENOM;
    let (name, series, pass) = match args.which {
        CharKind::Moonshine => {
            let ch = qchar::moonshine_char(trunc).map_err(|e| e.to_string())?;
            let ok = ch.coeff_q(0).to_i64() == Some(1)
                && ch.coeff_q(1).to_i64() == Some(0)
                && (args.order < 2 || ch.coeff_q(2).to_i64() == Some(196_884));
            ("moonshine", ch, ok)
        }
        CharKind::TwoB => {
            let split = qchar::char_2b(trunc).map_err(|e| e.to_string())?;
            let ok = args.order < 2
                || (split.plus.coeff_q(2).to_i64() == Some(98_580)
                    && split.minus.coeff_q(2).to_i64() == Some(98_304));
            ("2b-trace", split.trace, ok)
        }
        CharKind::ThreeC => {
            let direct = qchar::char_3c(trunc).map_err(|e| e.to_string())?;
            let substituted = qchar::char_3c_substituted(trunc).map_err(|e| e.to_string())?;
            let ok = direct.agrees_with(&substituted, trunc);
            ("3c-trace", direct, ok)
        }
        CharKind::E8 => {
            let ch = qchar::e8_char(trunc);
            let oracle = qchar::e8_char_oracle(trunc).map_err(|e| e.to_string())?;
            let ok = ch.agrees_with(&oracle, trunc);
            ("e8", ch, ok)
        }
        CharKind::JOracle => {
            let j = qchar::j_oracle(trunc).map_err(|e| e.to_string())?;
            ("j-oracle", j, true)
        }
    };
    emit(&args.out, &format_series(name, &series, args.format))?;
    Ok(pass)
}

fn run_series(args: SeriesArgs) -> Result<bool, String> {
    let (s, d) = mooncodes::series_codes(args.n).map_err(|e| e.to_string())?;
    let w1 = qchar::series_weight_one(args.n).map_err(|e| e.to_string())?;
    let pass = w1.is_zero() && s.dual().same_code(&d);
    let payload = json!({
        "schema": 1,
        "n": args.n,
        "length": s.len(),
        "small_dim": s.dim(),
        "large_dim": d.dim(),
        "weight_one_dimension": w1.to_string(),
        "pass": pass,
    });
    emit_json(&args.out, &payload)?;
    Ok(pass)
}

fn run_selftest(args: SelftestArgs) -> Result<bool, String> {
    let checks = selftest::run_all(args.quick);
    let mut lines = String::new();
    for c in &checks {
        lines.push_str(&format!(
            "[{}] {}: {}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    let pass = checks.iter().all(|c| c.pass);
    lines.push_str(&format!(
        "{}/{} checks passed\n",
        checks.iter().filter(|c| c.pass).count(),
        checks.len()
    ));
    emit(&args.out, &lines)?;
    Ok(pass)
}
