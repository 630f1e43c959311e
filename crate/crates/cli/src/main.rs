//! Command-line interface for Hermitian two-point codes.
//!
//! Data goes to standard output (or `--out`); progress goes to standard
//! error. Re-running any command with the same configuration produces
//! byte-identical output.

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hermitian_core::supports::default_d_range;
use hermitian_core::{
    build_code, classify_support, h1_oracle_distance, normalize_params, reduce_params,
    verify_theorems, Clause, CodeParams, Curve, Divisor, SchemeOnCurve, TwoPointCode,
};

#[derive(Parser)]
#[command(
    name = "hermitian",
    about = "Two-point evaluation codes on the Hermitian curve: construction, dual \
             minimum distance, and support geometry",
    version
)]
struct Cli {
    /// Number of worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ParamArgs {
    /// Field parameter; the code lives over F_{q^2}.
    #[arg(long)]
    q: u32,
    #[arg(long, requires = "a", requires = "b", conflicts_with_all = ["m", "n"])]
    d: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long, requires = "n", conflicts_with_all = ["d", "a", "b"])]
    m: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
}

impl ParamArgs {
    fn params(&self) -> Result<CodeParams> {
        match (self.d, self.m) {
            (Some(d), None) => {
                let (a, b) = (self.a.unwrap(), self.b.unwrap());
                Ok(CodeParams::from_dab(self.q, d, a, b)?)
            }
            (None, Some(m)) => Ok(CodeParams::from_mn(self.q, m, self.n.unwrap())?),
            _ => bail!("give exactly one parameter form: --d/--a/--b or --m/--n"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Census of the rational points of the curve.
    Points {
        q: u32,
        /// List the points instead of only counting them.
        #[arg(long)]
        list: bool,
    },
    /// Normalize (m, n) to the canonical (d, a, b).
    Normalize { q: u32, m: i64, n: i64 },
    /// Emit the generator matrix of a code.
    Construct {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Group label and formula dispatch for a code.
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Predicted dual minimum distance, optionally verified exactly.
    Delta {
        #[command(flatten)]
        params: ParamArgs,
        /// Also compute the exact distance by circuit search.
        #[arg(long)]
        exact: bool,
        /// Also compute the distance through the h^1 oracle.
        #[arg(long)]
        oracle: bool,
        /// Cap for the circuit search (default q + 2).
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate all minimum-weight dual codeword supports.
    Minwords {
        #[command(flatten)]
        params: ParamArgs,
        /// Classify the geometry of each support.
        #[arg(long)]
        classify_geometry: bool,
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tangent-line parameter reduction.
    Reduce {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        /// Build both codes and compare them.
        #[arg(long)]
        check: bool,
    },
    /// Sweep all codes for a given q and certify predictions and support
    /// geometry. Exits nonzero if any violation is found.
    Verify {
        q: u32,
        /// Values of d to sweep (default: 3..=q-1).
        #[arg(long = "d")]
        d: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// h^0 and h^1 of the ideal sheaf of a scheme on the curve.
    H1 {
        #[arg(long)]
        q: u32,
        /// Form degree.
        #[arg(long)]
        t: usize,
        /// Scheme as a `mult*point` list, e.g. "2*inf, 1*(0, g^5)".
        #[arg(long)]
        scheme: String,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("failed to configure the thread pool")?;
    }
    match cli.command {
        Command::Points { q, list } => points(q, list),
        Command::Normalize { q, m, n } => {
            let (d, a, b) = normalize_params(m, n, q)?;
            println!("(d,a,b)=({d},{a},{b})");
            Ok(())
        }
        Command::Construct { params, format, out } => construct(&params, format, out),
        Command::Classify { params, format } => classify(&params, format),
        Command::Delta { params, exact, oracle, max_weight, format } => {
            delta(&params, exact, oracle, max_weight, format)
        }
        Command::Minwords { params, classify_geometry, max_weight, format, out } => {
            minwords(&params, classify_geometry, max_weight, format, out)
        }
        Command::Reduce { q, d, a, b, check } => reduce(q, d, a, b, check),
        Command::Verify { q, d, format, out } => verify(q, d, format, out),
        Command::H1 { q, t, scheme } => h1(q, t, &scheme),
    }
}

fn emit(data: &str, out: Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(&path, data).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{data}"),
    }
    Ok(())
}

fn points(q: u32, list: bool) -> Result<()> {
    let curve = Curve::new(q)?;
    if list {
        let f = curve.field();
        for p in curve.points() {
            println!("{}", p.render(f));
        }
    } else {
        println!("{}", curve.points().len());
    }
    Ok(())
}

fn build(params: &ParamArgs) -> Result<(Arc<Curve>, TwoPointCode)> {
    let p = params.params()?;
    let curve = Arc::new(Curve::new(p.q)?);
    let code = build_code(p, Arc::clone(&curve))?;
    Ok((curve, code))
}

fn construct(params: &ParamArgs, format: Format, out: Option<PathBuf>) -> Result<()> {
    let (_, code) = build(params)?;
    if !code.params().of_interest() {
        eprintln!("note: b = 0, a one-point code; flagged as not of interest");
    }
    let data = match format {
        Format::Text => code.export_text(),
        Format::Json => format!("{:#}\n", code.export_json()),
        Format::Csv => bail!("construct has no csv format"),
    };
    emit(&data, out)
}

fn classify(params: &ParamArgs, format: Format) -> Result<()> {
    let p = params.params()?;
    let prediction = hermitian_core::predicted_delta(p.d, p.a, p.b, p.q);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&prediction)?),
        _ => {
            println!("code: C({},{},{}) over q={}", p.d, p.a, p.b, p.q);
            println!("group: {}", prediction.group);
            println!("formula: {:?}", prediction.formula);
            println!(
                "park_case: {}",
                prediction.park_case.map_or("-".into(), |c| c.to_string())
            );
            println!(
                "predicted_delta: {}",
                prediction.delta.map_or("uncovered".into(), |d| d.to_string())
            );
            println!("hypothesis_ok: {}", prediction.hypothesis_ok);
            println!("roles_swapped: {}", prediction.roles_swapped);
        }
    }
    Ok(())
}

fn delta(
    params: &ParamArgs,
    exact: bool,
    oracle: bool,
    max_weight: Option<usize>,
    format: Format,
) -> Result<()> {
    let p = params.params()?;
    let prediction = hermitian_core::predicted_delta(p.d, p.a, p.b, p.q);
    let w_max = max_weight.unwrap_or(p.q as usize + 2);
    let mut exact_delta = None;
    let mut oracle_delta = None;
    if exact || oracle {
        let (_, code) = build(params)?;
        if exact {
            exact_delta = Some(hermitian_core::dual_min_distance(&code, w_max)?);
        }
        if oracle {
            oracle_delta = Some(h1_oracle_distance(&code, w_max)?);
        }
    }
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "q": p.q, "d": p.d, "a": p.a, "b": p.b,
                "prediction": prediction,
                "exact": exact_delta,
                "oracle": oracle_delta,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        _ => {
            println!(
                "predicted: {} (group {}, case {})",
                prediction.delta.map_or("uncovered".into(), |d| d.to_string()),
                prediction.group,
                prediction.park_case.map_or("-".into(), |c| c.to_string()),
            );
            if let Some(e) = exact_delta {
                println!("exact: {e}");
            }
            if let Some(o) = oracle_delta {
                println!("oracle: {o}");
            }
        }
    }
    if let (Some(pred), Some(e)) = (prediction.delta, exact_delta) {
        if prediction.hypothesis_ok && pred != e as i64 {
            bail!("prediction {pred} disagrees with exact distance {e}");
        }
    }
    Ok(())
}

fn minwords(
    params: &ParamArgs,
    classify_geometry: bool,
    max_weight: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<()> {
    let p = params.params()?;
    let (curve, code) = build(params)?;
    let w_max = max_weight.unwrap_or(p.q as usize + 2);
    eprintln!("searching circuits of C({},{},{}) over q={}", p.d, p.a, p.b, p.q);
    let (delta, circuits) = hermitian_core::distance::min_weight_circuits(&code, w_max)?;
    let f = curve.field();
    let b_points = curve.evaluation_points();
    let mut circuit_values = Vec::new();
    let mut text = format!("delta {delta}\n");
    for circ in &circuits {
        let points: Vec<_> = circ.support.iter().map(|&i| b_points[i]).collect();
        let rendered_points: Vec<String> = points.iter().map(|pt| pt.render(f)).collect();
        let codeword: Vec<String> = circ.codeword.iter().map(|&v| f.display(v)).collect();
        let mut entry = serde_json::json!({
            "support_indices": circ.support,
            "support_points": rendered_points,
            "codeword": codeword,
        });
        text.push_str(&format!(
            "{} | {} | {}\n",
            circ.support.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            rendered_points.join(" "),
            codeword.join(" ")
        ));
        if classify_geometry {
            let class = classify_support(&curve, &points, code.params());
            entry["clause"] = serde_json::json!(class.clause.as_str());
            entry["witness"] = serde_json::json!(class
                .witnesses
                .iter()
                .map(|w| w.render(f))
                .collect::<Vec<_>>());
            text.push_str(&format!(
                "  clause {} | witness {}\n",
                class.clause.as_str(),
                class.witnesses.iter().map(|w| w.render(f)).collect::<Vec<_>>().join(" ; ")
            ));
        }
        circuit_values.push(entry);
    }
    let data = match format {
        Format::Json => format!(
            "{:#}\n",
            serde_json::json!({ "delta": delta, "circuits": circuit_values })
        ),
        _ => text,
    };
    emit(&data, out)
}

fn reduce(q: u32, d: i64, a: i64, b: i64, check: bool) -> Result<()> {
    let red = reduce_params(d, a, b)?;
    println!("r={} (d',a',b')=({},{},{}) swapped={}", red.r, red.d, red.a, red.b, red.swapped);
    if check {
        let curve = Arc::new(Curve::new(q)?);
        let orig = build_code(CodeParams::from_dab(q, d, a, b)?, Arc::clone(&curve))?;
        let reduced = build_code(CodeParams::from_dab(q, red.d, red.a, red.b)?, curve)?;
        println!("k={} k'={}", orig.k(), reduced.k());
        println!("codes_equal={}", hermitian_core::codes_equal(&orig, &reduced));
    }
    Ok(())
}

fn verify(q: u32, d: Vec<i64>, format: Format, out: Option<PathBuf>) -> Result<()> {
    let curve = Arc::new(Curve::new(q)?);
    let d_range = if d.is_empty() { default_d_range(q) } else { d };
    if d_range.is_empty() {
        bail!("no d values to sweep for q = {q} (need q >= 4)");
    }
    eprintln!("sweeping q={q}, d in {d_range:?}");
    let report = verify_theorems(&curve, &d_range)?;
    let violations = report.violations();
    let data = match format {
        Format::Json => format!("{:#}\n", report.to_json(&curve)),
        Format::Csv => report.csv(),
        Format::Text => {
            let mut s = String::new();
            for r in &report.reports {
                s.push_str(&format!(
                    "C({},{},{}) group={} case={} predicted={} actual={} supports={} [{}]\n",
                    r.d,
                    r.a,
                    r.b,
                    r.prediction.group,
                    r.prediction.park_case.map_or("-".into(), |c| c.to_string()),
                    r.prediction.delta.map_or("uncovered".into(), |x| x.to_string()),
                    r.actual_delta.map_or("-".into(), |x| x.to_string()),
                    r.num_min_supports(),
                    r.clause_counts
                        .iter()
                        .map(|(c, n)| format!("{}:{}", c.as_str(), n))
                        .collect::<Vec<_>>()
                        .join(" "),
                ));
            }
            s.push_str(&format!("violations: {}\n", violations.len()));
            s
        }
    };
    emit(&data, out)?;
    for v in &violations {
        eprintln!("violation: {v}");
    }
    if !violations.is_empty() {
        bail!("{} violation(s) found", violations.len());
    }
    let unclassified: usize = report
        .reports
        .iter()
        .flat_map(|r| r.clause_counts.iter())
        .filter(|(c, _)| **c == Clause::Unclassified)
        .map(|(_, n)| n)
        .sum();
    if unclassified > 0 {
        bail!("{unclassified} unclassified support(s)");
    }
    Ok(())
}

fn h1(q: u32, t: usize, scheme_text: &str) -> Result<()> {
    if t == 0 {
        bail!("degree must be at least 1");
    }
    let curve = Curve::new(q)?;
    let divisor = Divisor::parse(curve.field(), scheme_text)?;
    let scheme =
        SchemeOnCurve::new(&curve, divisor).map_err(|e| anyhow!("invalid scheme: {e}"))?;
    let (h0, h1) = hermitian_core::h0_h1(&curve, &scheme, t);
    println!("deg={} t={} h0={} h1={}", scheme.degree(), t, h0, h1);
    Ok(())
}
