//! Batch command-line front end: generation, counting, densities, witness
//! rescaling, the supersaturation pipeline, exponent algebra, and oracle
//! cross-checks. Exit codes: 0 success, 1 domain error, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hypercycle::constructions::{
    blow_up, greedy_high_girth, linear_cycle, linear_path, percolate_vertices, random_uniform,
    single_edge, steiner_triple_9, tensor_product,
};
use hypercycle::counting::{
    automorphism_count, berge_girth, count_linear_trees, hom_count, homomorphic_image_profile,
    labeled_copy_count,
};
use hypercycle::oracles::{brute_berge_girth, brute_copies, brute_hom, OracleBudget};
use hypercycle::report::{format_real, StageRecord, StructuredReport};
use hypercycle::sidorenko::{
    gap_estimate, hom_density, rescale_witness, sidorenko_check, tensor_power_gap_series,
    tensor_power_witness, RescaleBranch, SidorenkoVerdict,
};
use hypercycle::supersat::{bound_values, supersat_pipeline, PipelineMode};
use hypercycle::textio::{read_hypergraph, write_hypergraph};
use hypercycle::{Hypergraph, RngSeed};

const TOOL: &str = "hypercycle";

#[derive(Parser, Debug)]
#[command(name = TOOL, version, about = "Linear-cycle hypergraph toolkit", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a hypergraph and write it in the text format.
    Generate(GenerateArgs),
    /// Count patterns in a host (hom, labeled, unlabeled, girth, trees, profile).
    Count(CountArgs),
    /// Berge girth of a host (shorthand for count --mode girth).
    Girth(GirthArgs),
    /// Homomorphism density report for a pattern/host pair.
    Density(PairArgs),
    /// Sidorenko check and gap estimate for a pattern/host pair.
    Gap(PairArgs),
    /// Rescale a gap witness to a target density exponent.
    Rescale(RescaleArgs),
    /// Run the supersaturation pipeline, emitting certificates and a trace.
    Supersat(SupersatArgs),
    /// Closed-form exponent algebra for given (r, ell, n, e).
    Bounds(BoundsArgs),
    /// Cross-check the engines against the brute-force oracles on a corpus.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Family {
    SingleEdge,
    LinearCycle,
    LinearPath,
    BlowUp,
    Tensor,
    TensorPower,
    Random,
    Percolate,
    HighGirth,
    Sts9,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Uniformity r (single-edge, linear-cycle, linear-path, random, high-girth).
    #[arg(long)]
    r: Option<usize>,
    /// Number of edges of a cycle/path family.
    #[arg(long)]
    length: Option<usize>,
    /// Blow-up factor or tensor power.
    #[arg(long)]
    t: Option<usize>,
    /// Vertex count (random, high-girth).
    #[arg(long)]
    n: Option<usize>,
    /// Edge count (random).
    #[arg(long)]
    edges: Option<u64>,
    /// Keep probability (percolate).
    #[arg(long)]
    p: Option<f64>,
    /// Girth floor (high-girth).
    #[arg(long)]
    girth_min: Option<usize>,
    /// Insertion attempts (high-girth).
    #[arg(long, default_value_t = 2000)]
    attempts: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Input graph file (blow-up, tensor, tensor-power, percolate).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Second input graph file (tensor).
    #[arg(long)]
    input2: Option<PathBuf>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum CountMode {
    Hom,
    Labeled,
    Unlabeled,
    Girth,
    Trees,
    Profile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Plain,
    Json,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CountArgs {
    /// Pattern: a file path or a named family (`edge:R`, `cycle:R:L`,
    /// `path:R:L`, `sts9`). Not needed for girth/trees modes.
    #[arg(long)]
    pattern: Option<String>,
    /// Host graph file.
    #[arg(long)]
    host: PathBuf,
    #[arg(long, value_enum, default_value_t = CountMode::Hom)]
    mode: CountMode,
    /// Tree-size cap for --mode trees.
    #[arg(long, default_value_t = 3)]
    max_edges: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the structured report here as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GirthArgs {
    #[arg(long)]
    host: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    host: PathBuf,
    /// Also report gap estimates of the first k tensor powers, raw and
    /// convention-adjusted side by side (gap subcommand only).
    #[arg(long)]
    tensor_powers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RescaleArgs {
    #[arg(long)]
    host: PathBuf,
    #[arg(long)]
    pattern: String,
    /// Target density exponent in (0, 1).
    #[arg(long)]
    delta: f64,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Write the rescaled graph here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Mode {
    Induction,
    Shadow,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SupersatArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    ell: usize,
    #[arg(long, value_enum, default_value_t = Mode::Shadow)]
    mode: Mode,
    /// Certificate budget.
    #[arg(long, default_value_t = 32)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundsArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    edges: u64,
    #[arg(long, default_value_t = 0.0)]
    slack: f64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyArgs {
    /// Directory of hypergraph files (*.txt) to cross-check.
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long, default_value_t = 6)]
    max_pattern_vertices: usize,
    #[arg(long, default_value_t = 9)]
    max_host_vertices: usize,
}

#[derive(Debug)]
struct CliError(String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// `edge:R`, `cycle:R:L`, `path:R:L`, `sts9`, or a file path.
fn load_pattern(spec: &str) -> Result<Hypergraph, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let parse = |s: &str| -> Result<usize, CliError> {
        s.parse::<usize>().map_err(|_| CliError(format!("bad number {s:?} in pattern {spec:?}")))
    };
    match parts.as_slice() {
        ["edge", r] => Ok(single_edge(parse(r)?)?),
        ["cycle", r, l] => Ok(linear_cycle(parse(r)?, parse(l)?)?),
        ["path", r, l] => Ok(linear_path(parse(r)?, parse(l)?)?),
        ["sts9"] => Ok(steiner_triple_9()),
        _ => Ok(read_hypergraph(spec)?),
    }
}

fn emit_graph(h: &Hypergraph, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => Ok(write_hypergraph(h, path)?),
        None => {
            print!("{}", hypercycle::textio::format_hypergraph(h));
            Ok(())
        }
    }
}

fn command_echo(args: &impl Serialize) -> String {
    serde_json::to_string(args).unwrap_or_default()
}

fn finish_report(
    mut report: StructuredReport,
    records: Vec<StageRecord>,
    format: Format,
    path: Option<&PathBuf>,
    plain: &str,
) -> Result<(), CliError> {
    report.records = records;
    let json = serde_json::to_string_pretty(&report).map_err(|e| CliError(e.to_string()))?;
    if let Some(path) = path {
        std::fs::write(path, &json).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    }
    match format {
        Format::Plain => {
            if !plain.is_empty() {
                println!("{plain}");
            }
        }
        Format::Json => println!("{json}"),
    }
    Ok(())
}

fn new_report(command: String) -> StructuredReport {
    StructuredReport::new(TOOL, env!("CARGO_PKG_VERSION"), command)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(args) => {
            let seed = RngSeed(args.seed);
            let need = |opt: Option<usize>, what: &str| {
                opt.ok_or_else(|| CliError(format!("--{what} is required for this family")))
            };
            let graph = match args.family {
                Family::SingleEdge => single_edge(need(args.r, "r")?)?,
                Family::LinearCycle => linear_cycle(need(args.r, "r")?, need(args.length, "length")?)?,
                Family::LinearPath => linear_path(need(args.r, "r")?, need(args.length, "length")?)?,
                Family::Sts9 => steiner_triple_9(),
                Family::BlowUp => {
                    let input = args.input.as_ref().ok_or(CliError("--input required".into()))?;
                    blow_up(&read_hypergraph(input)?, need(args.t, "t")?)?
                }
                Family::Tensor => {
                    let input = args.input.as_ref().ok_or(CliError("--input required".into()))?;
                    let input2 = args.input2.as_ref().ok_or(CliError("--input2 required".into()))?;
                    tensor_product(&read_hypergraph(input)?, &read_hypergraph(input2)?)?
                }
                Family::TensorPower => {
                    let input = args.input.as_ref().ok_or(CliError("--input required".into()))?;
                    tensor_power_witness(&read_hypergraph(input)?, need(args.t, "t")?)?
                }
                Family::Random => {
                    let m = args.edges.ok_or(CliError("--edges required".into()))?;
                    random_uniform(need(args.n, "n")?, need(args.r, "r")?, m, seed)?
                }
                Family::Percolate => {
                    let input = args.input.as_ref().ok_or(CliError("--input required".into()))?;
                    let p = args.p.ok_or(CliError("--p required".into()))?;
                    let outcome = percolate_vertices(&read_hypergraph(input)?, p, seed)?;
                    eprintln!(
                        "kept {} vertices, {} edges survive",
                        outcome.kept_count, outcome.surviving_edges
                    );
                    outcome.graph
                }
                Family::HighGirth => greedy_high_girth(
                    need(args.n, "n")?,
                    need(args.r, "r")?,
                    args.girth_min.ok_or(CliError("--girth-min required".into()))?,
                    args.attempts,
                    seed,
                )?,
            };
            emit_graph(&graph, args.out.as_ref())
        }

        Command::Count(args) => {
            let host = read_hypergraph(&args.host)?;
            let echo = command_echo(&args);
            let mut rec = StageRecord::new("count", "count.result");
            let plain = match args.mode {
                CountMode::Girth => {
                    let report = berge_girth(&host);
                    let plain = match report.girth {
                        Some(g) => g.to_string(),
                        None => "infinity".to_string(),
                    };
                    rec.put("girth", plain.clone());
                    if let Some(w) = report.witness {
                        rec.put("witness_vertices", format!("{:?}", w.vertices));
                        rec.put("witness_edges", format!("{:?}", w.edges));
                    }
                    plain
                }
                CountMode::Trees => {
                    let count = count_linear_trees(&host, args.max_edges)?;
                    rec.put_big("linear_trees", &count);
                    rec.put_int("max_edges", args.max_edges as u128);
                    count.to_string()
                }
                mode => {
                    let spec = args
                        .pattern
                        .as_ref()
                        .ok_or(CliError("--pattern required for this mode".into()))?;
                    let pattern = load_pattern(spec)?;
                    match mode {
                        CountMode::Hom => {
                            let c = hom_count(&pattern, &host)?;
                            rec.put_big("hom", &c.value);
                            c.value.to_string()
                        }
                        CountMode::Labeled => {
                            let c = labeled_copy_count(&pattern, &host)?;
                            rec.put_big("labeled", &c.value);
                            c.value.to_string()
                        }
                        CountMode::Unlabeled => {
                            let labeled = labeled_copy_count(&pattern, &host)?.value;
                            let aut = automorphism_count(&pattern);
                            let unlabeled = &labeled / &aut;
                            rec.put_big("labeled", &labeled);
                            rec.put_big("automorphisms", &aut);
                            rec.put_big("unlabeled", &unlabeled);
                            unlabeled.to_string()
                        }
                        CountMode::Profile => {
                            let profile = homomorphic_image_profile(&pattern, &host)?;
                            for (&(tree, k), &c) in &profile.histogram {
                                rec.put(&format!("class_tree_{tree}_edges_{k}"), c.to_string());
                            }
                            rec.put_big("total", &profile.total);
                            profile
                                .histogram
                                .iter()
                                .map(|(&(tree, k), &c)| format!("tree={tree} edges={k}: {c}"))
                                .collect::<Vec<_>>()
                                .join("\n")
                        }
                        _ => unreachable!(),
                    }
                }
            };
            rec.passed(true);
            finish_report(new_report(echo), vec![rec], args.format, args.report.as_ref(), &plain)
        }

        Command::Girth(args) => {
            let host = read_hypergraph(&args.host)?;
            let report = berge_girth(&host);
            let plain = match report.girth {
                Some(g) => g.to_string(),
                None => "infinity".to_string(),
            };
            match args.format {
                Format::Plain => println!("{plain}"),
                Format::Json => {
                    let mut rec = StageRecord::new("girth", "count.result");
                    rec.put("girth", plain);
                    rec.passed(true);
                    let mut rep = new_report(command_echo(&args));
                    rep.records = vec![rec];
                    println!("{}", serde_json::to_string_pretty(&rep)?);
                }
            }
            Ok(())
        }

        Command::Density(args) => {
            let pattern = load_pattern(&args.pattern)?;
            let host = read_hypergraph(&args.host)?;
            let report = hom_density(&pattern, &host)?;
            let mut rec = StageRecord::new("density", "density.report");
            rec.put_big("hom", &report.hom);
            rec.put_real("log_tf", report.log_tf);
            rec.put_real("log_tk", report.log_tk);
            if let Some(g) = report.gap_estimate {
                rec.put_real("gap_estimate", g);
            }
            rec.passed(true);
            let plain = format!(
                "hom = {}\nlog t_F = {}\nlog t_K = {}\ngap = {}",
                report.hom,
                format_real(report.log_tf),
                format_real(report.log_tk),
                report.gap_estimate.map(format_real).unwrap_or_else(|| "undefined".into())
            );
            finish_report(
                new_report(command_echo(&args)),
                vec![rec],
                args.format,
                args.report.as_ref(),
                &plain,
            )
        }

        Command::Gap(args) => {
            let pattern = load_pattern(&args.pattern)?;
            let host = read_hypergraph(&args.host)?;
            let verdict = sidorenko_check(&pattern, &host)?;
            let verdict_str = match verdict {
                SidorenkoVerdict::Holds => "holds",
                SidorenkoVerdict::Violated => "violated",
                SidorenkoVerdict::Undefined => "undefined",
            };
            let gap = gap_estimate(&pattern, &host);
            let mut rec = StageRecord::new("gap", "gap.verdict");
            rec.put("sidorenko", verdict_str);
            let gap_str = match &gap {
                Ok(g) => format_real(*g),
                Err(e) => format!("undefined ({e})"),
            };
            rec.put("gap_estimate", gap_str.clone());
            let mut plain = format!("sidorenko: {verdict_str}\ngap: {gap_str}");
            if let Some(k) = args.tensor_powers {
                let series = tensor_power_gap_series(&host, k, &pattern)?;
                for point in &series {
                    let raw = point.raw_gap.map(format_real).unwrap_or_else(|| "undefined".into());
                    let adj =
                        point.adjusted_gap.map(format_real).unwrap_or_else(|| "undefined".into());
                    rec.put(&format!("power_{}_gap_raw", point.power), raw.clone());
                    rec.put(&format!("power_{}_gap_adjusted", point.power), adj.clone());
                    plain.push_str(&format!(
                        "\npower {}: raw {raw}, adjusted {adj}",
                        point.power
                    ));
                }
            }
            rec.passed(true);
            finish_report(
                new_report(command_echo(&args)),
                vec![rec],
                args.format,
                args.report.as_ref(),
                &plain,
            )
        }

        Command::Rescale(args) => {
            let pattern = load_pattern(&args.pattern)?;
            let host = read_hypergraph(&args.host)?;
            let report =
                rescale_witness(&host, args.delta, args.epsilon, &pattern, RngSeed(args.seed))?;
            let mut rec = StageRecord::new("rescale", "rescale.branch");
            rec.put_real("target_delta", report.target_delta);
            rec.put_real("delta_prime", report.source_delta_prime);
            if let Some(d) = report.achieved_delta {
                rec.put_real("achieved_delta", d);
            }
            rec.put_int("achieved_vertices", report.achieved_vertices as u128);
            rec.put_int("achieved_edges", report.achieved_edges as u128);
            rec.put_big("copies_observed", &report.copy_upper_observed);
            let plain = match &report.branch {
                RescaleBranch::BlowUp { t, copy_bound } => {
                    rec.put("branch", "blow-up");
                    rec.put_int("t", *t as u128);
                    rec.put_big("copy_bound", copy_bound);
                    format!(
                        "blow-up t = {t}: v = {}, e = {}, copies {} <= bound {}",
                        report.achieved_vertices,
                        report.achieved_edges,
                        report.copy_upper_observed,
                        copy_bound
                    )
                }
                RescaleBranch::Percolation { p_raw, p, capped, success, .. } => {
                    rec.put("branch", "percolation");
                    rec.put_real("p_raw", *p_raw);
                    rec.put_real("p", *p);
                    rec.put("capped", capped.to_string());
                    rec.put("success", success.to_string());
                    rec.put_int("trials", report.trials as u128);
                    format!(
                        "percolation p = {} (raw {}, capped: {capped}): success = {success} \
                         after {} trial(s), v = {}, e = {}",
                        format_real(*p),
                        format_real(*p_raw),
                        report.trials,
                        report.achieved_vertices,
                        report.achieved_edges
                    )
                }
            };
            rec.passed(true);
            if let Some(out) = &args.out {
                write_hypergraph(&report.graph, out)?;
            }
            finish_report(
                new_report(command_echo(&args)),
                vec![rec],
                args.format,
                args.report.as_ref(),
                &plain,
            )
        }

        Command::Supersat(args) => {
            let g = read_hypergraph(&args.input)?;
            let mode = match args.mode {
                Mode::Induction => PipelineMode::Induction,
                Mode::Shadow => PipelineMode::Shadow,
            };
            let outcome = supersat_pipeline(&g, args.ell, mode, args.budget, RngSeed(args.seed))?;
            let mut report = new_report(command_echo(&args));
            report.certificates = outcome.certificates.iter().map(|c| c.to_payload()).collect();
            let plain = format!(
                "certificates: {} (count lower bound {})\nstages: {}",
                outcome.certificates.len(),
                outcome.certificate_count,
                outcome
                    .records
                    .iter()
                    .map(|r| format!(
                        "{}[{}]",
                        r.name,
                        match r.pass {
                            Some(true) => "pass",
                            Some(false) => "FAIL",
                            None => "info",
                        }
                    ))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            finish_report(report, outcome.records, args.format, args.report.as_ref(), &plain)
        }

        Command::Bounds(args) => {
            let b = bound_values(args.r, args.ell, args.n, args.edges, args.slack)?;
            let mut rec = StageRecord::new("bounds", "bounds.values");
            rec.put_ratio("f_r", &b.f_r);
            if let Some(f1) = &b.f_r_minus_1 {
                rec.put_ratio("f_r_minus_1", f1);
            }
            rec.put_ratio("weaker_exponent", &b.weaker_exponent);
            rec.put_ratio("conditional_lower_gap", &b.conditional_lower_gap);
            if let (Some(x), Some(y)) = (&b.threshold_exp_e, &b.threshold_exp_n) {
                rec.put_ratio("threshold_exp_e", x);
                rec.put_ratio("threshold_exp_n", y);
            }
            if let Some(a) = b.threshold_a {
                rec.put_real("threshold_a", a);
            }
            rec.put_real("delta", b.delta);
            rec.put_real("main_lower_bound_log", b.main_lower_bound_log);
            rec.put_real("conditional_copy_exponent", b.conditional_copy_exponent);
            rec.passed(true);
            let plain = format!(
                "f({}) = {}/{}\nweaker exponent 2/(r-1) = {}/{}\nconditional lower gap = {}/{}\ndelta = {}\nconditional copy exponent = {}",
                args.r,
                b.f_r.numer(),
                b.f_r.denom(),
                b.weaker_exponent.numer(),
                b.weaker_exponent.denom(),
                b.conditional_lower_gap.numer(),
                b.conditional_lower_gap.denom(),
                format_real(b.delta),
                format_real(b.conditional_copy_exponent),
            );
            finish_report(
                new_report(command_echo(&args)),
                vec![rec],
                args.format,
                args.report.as_ref(),
                &plain,
            )
        }

        Command::Verify(args) => {
            let budget = OracleBudget {
                max_pattern_vertices: args.max_pattern_vertices,
                max_host_vertices: args.max_host_vertices,
                max_sequence_length: 8,
            };
            let mut entries: Vec<PathBuf> = std::fs::read_dir(&args.corpus)
                .map_err(|e| CliError(format!("{}: {e}", args.corpus.display())))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|ext| ext == "txt"))
                .collect();
            entries.sort();
            if entries.is_empty() {
                return Err(CliError(format!(
                    "no .txt hypergraph files under {}",
                    args.corpus.display()
                )));
            }
            let mut checked = 0usize;
            let mut skipped = 0usize;
            let mut mismatches = 0usize;
            for path in &entries {
                let host = read_hypergraph(path)?;
                if host.vertex_count() > budget.max_host_vertices {
                    eprintln!("skip {} (host above oracle budget)", path.display());
                    skipped += 1;
                    continue;
                }
                let girth_engine = berge_girth(&host).girth;
                match brute_berge_girth(&host, budget) {
                    Ok(girth_oracle) => {
                        if girth_engine != girth_oracle {
                            eprintln!(
                                "MISMATCH girth at {}: engine {girth_engine:?}, oracle {girth_oracle:?}",
                                path.display()
                            );
                            mismatches += 1;
                        }
                    }
                    Err(_) => skipped += 1,
                }
                let r = host.uniformity();
                let mut patterns = vec![single_edge(r)?, linear_path(r, 2)?];
                if r == 3 {
                    patterns.push(linear_cycle(3, 3)?);
                }
                for pattern in &patterns {
                    if pattern.vertex_count() > budget.max_pattern_vertices {
                        continue;
                    }
                    let hom_engine = hom_count(pattern, &host)?.value;
                    let hom_oracle = brute_hom(pattern, &host, budget)?;
                    if hom_engine != hom_oracle {
                        eprintln!(
                            "MISMATCH hom at {}: engine {hom_engine}, oracle {hom_oracle}",
                            path.display()
                        );
                        mismatches += 1;
                    }
                    let copies_engine = labeled_copy_count(pattern, &host)?.value;
                    let copies_oracle = brute_copies(pattern, &host, budget)?;
                    if copies_engine != copies_oracle {
                        eprintln!(
                            "MISMATCH labeled at {}: engine {copies_engine}, oracle {copies_oracle}",
                            path.display()
                        );
                        mismatches += 1;
                    }
                }
                checked += 1;
            }
            println!("verified {checked} file(s), skipped {skipped}, mismatches {mismatches}");
            if mismatches > 0 {
                return Err(CliError(format!("{mismatches} oracle mismatch(es)")));
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn experiment_configs_round_trip_and_reject_unknown_keys() {
        let args = BoundsArgs {
            r: 3,
            ell: 2,
            n: 100,
            edges: 5000,
            slack: 0.0,
            format: Format::Plain,
            report: None,
        };
        let json = serde_json::to_string(&args).unwrap();
        let back: BoundsArgs = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);

        let with_unknown = r#"{"r":3,"ell":2,"n":100,"edges":5000,"slack":0.0,"format":"plain","report":null,"bogus":1}"#;
        assert!(serde_json::from_str::<BoundsArgs>(with_unknown).is_err());
    }

    #[test]
    fn pattern_specs_parse() {
        assert_eq!(load_pattern("edge:3").unwrap().edge_count(), 1);
        assert_eq!(load_pattern("cycle:3:5").unwrap().vertex_count(), 10);
        assert_eq!(load_pattern("path:4:2").unwrap().vertex_count(), 7);
        assert_eq!(load_pattern("sts9").unwrap().edge_count(), 12);
        assert!(load_pattern("cycle:x:5").is_err());
    }
}
