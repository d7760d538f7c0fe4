//! Command-line surface over the hopfflow library: graph enumeration and
//! analysis, the toy-model series, the cut-coproduct Hopf algebra,
//! Birkhoff decomposition, flowchart evaluation, sequence operators, and
//! max-plus timing.
//!
//! Exit codes: 0 on success, 1 on validation/computation failures, 2 on
//! usage errors.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfflow::feynman::series::{
    partition_series_graphs, partition_series_wick, tree_series, LambdaConvention,
};
use hopfflow::feynman::{FormalSeries, Model};
use hopfflow::graph::canon::{automorphism_count, canonical_form};
use hopfflow::graph::cut::enumerate_cuts;
use hopfflow::graph::enumerate::{enumerate_graphs, EnumerationOptions, DEFAULT_CLASS_CAP};
use hopfflow::graph::DecoratedGraph;
use hopfflow::hopf::{element_to_json, Family, HopfElement};
use hopfflow::prim::eval::{evaluate, Budget};
use hopfflow::prim::normalize::normalize;
use hopfflow::prim::Flowchart;
use hopfflow::renorm::birkhoff::{
    birkhoff, convolution_inverse, convolve, regularized_value, HopfMap,
};
use hopfflow::renorm::{laurent_from_json, laurent_to_json, LaurentAlgebra};
use hopfflow::seq::fit::asymptotic_fit;
use hopfflow::seq::gamma::{gamma_transform, SymPoly};
use hopfflow::seq::norm::levin_norm;
use hopfflow::seq::timing::{cut_timing_report, running_time};
use hopfflow::seq::{SeqProduct, SummationOp, TruncatedSequence};
use serde_json::json;
use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hopfflow", version, about = "graph series, flowcharts, and renormalization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial graph operations.
    Graphs {
        #[command(subcommand)]
        cmd: GraphsCmd,
    },
    /// Toy-model perturbation series.
    Feynman {
        #[command(subcommand)]
        cmd: FeynmanCmd,
    },
    /// Cut-coproduct Hopf algebra operations.
    Hopf {
        #[command(subcommand)]
        cmd: HopfCmd,
    },
    /// Birkhoff decomposition over minimal-subtraction algebras.
    Renorm {
        #[command(subcommand)]
        cmd: RenormCmd,
    },
    /// Flowchart programs.
    Prim {
        #[command(subcommand)]
        cmd: PrimCmd,
    },
    /// Sequence algebras.
    Seq {
        #[command(subcommand)]
        cmd: SeqCmd,
    },
    /// Max-plus running time.
    Time {
        #[command(subcommand)]
        cmd: TimeCmd,
    },
}

#[derive(Subcommand)]
enum GraphsCmd {
    /// List one representative per isomorphism class of tail-free graphs.
    Enumerate {
        #[arg(long)]
        max_edges: usize,
        /// Keep only graphs whose every vertex has this valence.
        #[arg(long)]
        valence: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Automorphism count and canonical fingerprint of a graph file.
    Aut {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// All cuts of an oriented graph file.
    Cuts {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesMethod {
    Graphs,
    Wick,
    Both,
}

#[derive(Subcommand)]
enum FeynmanCmd {
    /// Partition series up to a coupling-weight order.
    Series {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "graphs")]
        method: SeriesMethod,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Tree series and the stationary-field identities.
    Trees {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        order: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Cut coproduct of a graph class.
    Coproduct {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Antipode of a graph class.
    Antipode {
        #[arg(long = "in")]
        input: PathBuf,
        /// Degree guard for the recursion.
        #[arg(long, default_value_t = 16)]
        degree: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum RenormCmd {
    /// Birkhoff-decompose a character file.
    Birkhoff {
        /// Admissible family of the character's domain.
        #[arg(long = "hopf-family", default_value = "oriented")]
        family: String,
        #[arg(long)]
        character: PathBuf,
        /// Degree bound on the tabulated classes.
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 32)]
        pole_cap: i64,
        #[arg(long, default_value_t = 32)]
        regular_cap: i64,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum PrimCmd {
    /// Evaluate a closed flowchart on an argument tuple.
    Eval {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated positive integers, e.g. "4,3".
        #[arg(long)]
        args: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Contract nested composition/bracket chains to the localized form.
    Normalize {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqMode {
    Pointwise,
    Maxconv,
    Cauchy,
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Multiply two sequences.
    Product {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long, value_enum)]
        mode: SeqMode,
    },
    /// Partial sums; --prime shifts the window by one (output one shorter).
    Sum {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        prime: bool,
    },
    /// Apply the Gamma(1+d/dt) transform to a polynomial in t.
    Gamma {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Fit partial sums against powers of log N over the tail window.
    Fit {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Norm functional sup r * #{x : f(x) >= r}.
    Norm {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Rota-Baxter identity report for the summation operators.
    RbCheck {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        theta: i64,
        #[arg(long)]
        prime: bool,
    },
}

#[derive(Subcommand)]
enum TimeCmd {
    /// Critical-path running time of a flowchart plus the per-cut report.
    Flowchart {
        #[arg(long = "in")]
        input: PathBuf,
        /// JSON object vertex -> cost.
        #[arg(long)]
        costs: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn class_cap() -> usize {
    std::env::var("HOPFFLOW_MAX_CLASSES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CLASS_CAP)
}

/// A formal series as a stable JSON value, coupling keys spelled with
/// the model's color names.
fn series_json(s: &FormalSeries, model: &Model) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = s
        .terms()
        .map(|(m, c)| {
            let couplings: BTreeMap<String, u32> = m
                .couplings
                .iter()
                .map(|(sym, e)| {
                    let name = sym
                        .colors()
                        .iter()
                        .map(|&i| model.colors()[i].clone())
                        .collect::<Vec<_>>()
                        .join(",");
                    (format!("C[{name}]"), *e)
                })
                .collect();
            json!({
                "couplings": couplings,
                "lambda": m.lambda,
                "coeff": hopfflow::ratio::format(c),
            })
        })
        .collect();
    json!({ "weight_cap": s.weight_cap(), "terms": terms })
}

fn series_human(s: &FormalSeries, model: &Model) -> String {
    if s.is_zero() {
        return "0".to_owned();
    }
    s.terms()
        .map(|(m, c)| {
            let mut parts = vec![hopfflow::ratio::format(c)];
            if m.lambda != 0 {
                parts.push(format!("L^{}", m.lambda));
            }
            for (sym, e) in &m.couplings {
                let name = sym
                    .colors()
                    .iter()
                    .map(|&i| model.colors()[i].clone())
                    .collect::<Vec<_>>()
                    .join(",");
                if *e == 1 {
                    parts.push(format!("C[{name}]"));
                } else {
                    parts.push(format!("C[{name}]^{e}"));
                }
            }
            parts.join("*")
        })
        .collect::<Vec<_>>()
        .join("  +  ")
}

fn emit(out: &OutputOpts, human: String, value: serde_json::Value) {
    match out.format {
        Format::Human => println!("{human}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
    }
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Graphs { cmd } => graphs(cmd),
        Command::Feynman { cmd } => feynman(cmd),
        Command::Hopf { cmd } => hopf(cmd),
        Command::Renorm { cmd } => renorm(cmd),
        Command::Prim { cmd } => prim(cmd),
        Command::Seq { cmd } => seq(cmd),
        Command::Time { cmd } => time(cmd),
    }
}

fn graphs(cmd: GraphsCmd) -> Result<()> {
    match cmd {
        GraphsCmd::Enumerate {
            max_edges,
            valence,
            out,
        } => {
            let mut opts = EnumerationOptions::new(max_edges).with_cap(class_cap());
            if let Some(k) = valence {
                opts = opts.with_valences([k]);
            }
            let classes = enumerate_graphs(&opts)?;
            match out.format {
                Format::Human => {
                    println!("{} classes", classes.len());
                    for g in &classes {
                        let dg = DecoratedGraph::bare(g.clone());
                        println!(
                            "  {}  vertices={} edges={} aut={}",
                            canonical_form(&dg).fingerprint(),
                            g.vertex_count(),
                            g.edge_count(),
                            automorphism_count(&dg)
                        );
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = classes
                        .iter()
                        .map(|g| serde_json::to_value(DecoratedGraph::bare(g.clone())).unwrap())
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items)?);
                }
            }
            Ok(())
        }
        GraphsCmd::Aut { input, out } => {
            let dg = DecoratedGraph::from_json(&read(&input)?)?;
            let aut = automorphism_count(&dg);
            let fp = canonical_form(&dg).fingerprint();
            emit(
                &out,
                format!("automorphisms: {aut}\ncanonical: {fp}"),
                json!({ "automorphisms": aut.to_string(), "canonical": fp }),
            );
            Ok(())
        }
        GraphsCmd::Cuts { input, out } => {
            let dg = DecoratedGraph::from_json(&read(&input)?)?;
            let cuts = enumerate_cuts(&dg)?;
            match out.format {
                Format::Human => {
                    println!("{} cuts", cuts.len());
                    for c in &cuts {
                        let upper: Vec<String> = c.upper.iter().map(|v| v.0.clone()).collect();
                        println!("  {:?}  upper = {{{}}}", c.kind, upper.join(", "));
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = cuts
                        .iter()
                        .map(|c| {
                            json!({
                                "kind": format!("{:?}", c.kind),
                                "upper": c.upper.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
                                "lower": c.lower.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items)?);
                }
            }
            Ok(())
        }
    }
}

fn feynman(cmd: FeynmanCmd) -> Result<()> {
    match cmd {
        FeynmanCmd::Series {
            model,
            order,
            method,
            out,
        } => {
            let model = Model::from_json(&read(&model)?)?;
            let cap = class_cap();
            let (graphs_side, wick_side) = match method {
                SeriesMethod::Graphs => (Some(partition_series_graphs(&model, order, cap)?), None),
                SeriesMethod::Wick => (None, Some(partition_series_wick(&model, order)?)),
                SeriesMethod::Both => (
                    Some(partition_series_graphs(&model, order, cap)?),
                    Some(partition_series_wick(&model, order)?),
                ),
            };
            match (graphs_side, wick_side) {
                (Some(g), None) => emit(&out, series_human(&g, &model), series_json(&g, &model)),
                (None, Some(w)) => emit(&out, series_human(&w, &model), series_json(&w, &model)),
                (Some(g), Some(w)) => {
                    let diff = g.sub(&w);
                    match out.format {
                        Format::Human => {
                            println!("graphs: {}", series_human(&g, &model));
                            println!("wick:   {}", series_human(&w, &model));
                            if diff.is_zero() {
                                println!("diff:   (empty -- the two routes agree exactly)");
                            } else {
                                println!("diff:   {}", series_human(&diff, &model));
                            }
                        }
                        Format::Json => {
                            let v = json!({
                                "graphs": series_json(&g, &model),
                                "wick": series_json(&w, &model),
                                "diff": series_json(&diff, &model),
                                "agree": diff.is_zero(),
                            });
                            println!("{}", serde_json::to_string_pretty(&v)?);
                        }
                    }
                    if !diff.is_zero() {
                        bail!("the graph and Wick routes disagree");
                    }
                }
                (None, None) => unreachable!(),
            }
            Ok(())
        }
        FeynmanCmd::Trees { model, order, out } => {
            let model = Model::from_json(&read(&model)?)?;
            let cap = class_cap();
            let z = tree_series(&model, order, cap)?;
            let report = hopfflow::feynman::series::verify_tree_identities(
                &model,
                order,
                cap,
                LambdaConvention::AtOne,
            )?;
            let human = format!(
                "Z = {}\nat lambda=1: dZ/dC matches the stationary field: {}; Z = S(phi0): {}",
                series_human(&z, &model),
                report.derivative_matches,
                report.critical_value_matches
            );
            let v = json!({
                "tree_series": series_json(&z, &model),
                "lambda_convention": "at_one",
                "derivative_matches": report.derivative_matches,
                "critical_value_matches": report.critical_value_matches,
            });
            emit(&out, human, v);
            Ok(())
        }
    }
}

fn hopf(cmd: HopfCmd) -> Result<()> {
    let family = Family::all_oriented();
    match cmd {
        HopfCmd::Coproduct { input, out } => {
            let dg = DecoratedGraph::from_json(&read(&input)?)?;
            let x = HopfElement::basis(family, &dg)?;
            let d = x.coproduct()?;
            match out.format {
                Format::Human => {
                    println!("{} tensor terms", d.term_count());
                    for (ka, kb, _, _, c) in d.terms() {
                        println!(
                            "  {} * {} (x) {}",
                            hopfflow::ratio::format(c),
                            ka.fingerprint(),
                            kb.fingerprint()
                        );
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = d
                        .terms()
                        .map(|(_, _, ga, gb, c)| {
                            json!({
                                "coeff": hopfflow::ratio::format(c),
                                "left": serde_json::to_value(ga).unwrap(),
                                "right": serde_json::to_value(gb).unwrap(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items)?);
                }
            }
            Ok(())
        }
        HopfCmd::Antipode { input, degree, out } => {
            let dg = DecoratedGraph::from_json(&read(&input)?)?;
            let x = HopfElement::basis(family, &dg)?;
            let s = x.antipode(degree)?;
            match out.format {
                Format::Human => {
                    println!("{} terms", s.terms().count());
                    for (k, _, c) in s.terms() {
                        println!("  {} * {}", hopfflow::ratio::format(c), k.fingerprint());
                    }
                }
                Format::Json => println!("{}", element_to_json(&s)),
            }
            Ok(())
        }
    }
}

fn renorm(cmd: RenormCmd) -> Result<()> {
    let RenormCmd::Birkhoff {
        family,
        character,
        degree,
        pole_cap,
        regular_cap,
        out,
    } = cmd;
    if family != "oriented" {
        bail!("unknown admissible family {family:?}; available: oriented");
    }
    let fam = Family::all_oriented();
    let algebra = LaurentAlgebra::new(pole_cap, regular_cap);

    #[derive(serde::Deserialize)]
    struct CharacterFile {
        degree_bound: u32,
        values: Vec<CharacterEntry>,
    }
    #[derive(serde::Deserialize)]
    struct CharacterEntry {
        graph: serde_json::Value,
        laurent: BTreeMap<String, String>,
    }

    let file: CharacterFile =
        serde_json::from_str(&read(&character)?).context("parsing character file")?;
    let mut entries = Vec::new();
    let mut span = Vec::new();
    for e in &file.values {
        let graph: DecoratedGraph = if e.graph.is_array() {
            let parts: Vec<DecoratedGraph> = serde_json::from_value(e.graph.clone())?;
            hopfflow::graph::disjoint_union_all(&parts)
        } else {
            serde_json::from_value(e.graph.clone())?
        };
        let value = laurent_from_json(&e.laurent)?;
        span.push(graph.clone());
        entries.push((graph, value));
    }
    let bound = degree.min(file.degree_bound);
    for g in &span {
        if g.graph.flag_count() as u32 > bound {
            bail!(
                "character value on a class of degree {} exceeds the bound {bound}",
                g.graph.flag_count()
            );
        }
    }
    let phi = HopfMap::linear(algebra.clone(), fam.clone(), entries);
    let pair = birkhoff(&phi, &span)?;
    let inverse_minus = convolution_inverse(&pair.minus, &span)?;
    let mut items = Vec::new();
    let mut all_reconstructed = true;
    for g in &span {
        let x = HopfElement::basis(fam.clone(), g)?;
        let reconstructed = convolve(&inverse_minus, &pair.plus, &x)?;
        let original = phi.value_on_graph(g)?;
        let ok = reconstructed == original;
        all_reconstructed &= ok;
        let reg = regularized_value(&pair, g)
            .map(|v| hopfflow::ratio::format(&v))
            .unwrap_or_else(|_| "undefined".to_owned());
        items.push(json!({
            "graph": serde_json::to_value(g).unwrap(),
            "phi": laurent_to_json(&original),
            "phi_minus": laurent_to_json(&pair.minus.value_on_graph(g)?),
            "phi_plus": laurent_to_json(&pair.plus.value_on_graph(g)?),
            "regularized": reg,
            "reconstructed": ok,
        }));
    }
    match out.format {
        Format::Human => {
            for (g, item) in span.iter().zip(&items) {
                println!(
                    "{}: phi- = {}, phi+ = {}, regularized = {}",
                    canonical_form(g).fingerprint(),
                    pair.minus.value_on_graph(g)?,
                    pair.plus.value_on_graph(g)?,
                    item["regularized"].as_str().unwrap()
                );
            }
            println!(
                "reconstruction phi = phi_-^(*-1) * phi_+: {}",
                if all_reconstructed { "exact" } else { "FAILED" }
            );
        }
        Format::Json => {
            let v = json!({ "values": items, "reconstruction_exact": all_reconstructed });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    if !all_reconstructed {
        bail!("Birkhoff reconstruction failed");
    }
    Ok(())
}

fn prim(cmd: PrimCmd) -> Result<()> {
    match cmd {
        PrimCmd::Eval {
            input,
            args,
            budget,
            out,
        } => {
            let chart = Flowchart::from_json(&read(&input)?)?;
            let values: Vec<u64> = args
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|e| anyhow!("bad --args: {e}"))?;
            let result = evaluate(&chart, &values, &mut Budget::new(budget))?;
            let joined = result
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            emit(&out, joined, json!(result));
            Ok(())
        }
        PrimCmd::Normalize { input } => {
            let chart = Flowchart::from_json(&read(&input)?)?;
            println!("{}", normalize(&chart)?.to_json());
            Ok(())
        }
    }
}

fn seq(cmd: SeqCmd) -> Result<()> {
    match cmd {
        SeqCmd::Product { input, rhs, mode } => {
            let f = TruncatedSequence::from_json(&read(&input)?)?;
            let g = TruncatedSequence::from_json(&read(&rhs)?)?;
            let mode = match mode {
                SeqMode::Pointwise => SeqProduct::Pointwise,
                SeqMode::Maxconv => SeqProduct::MaxConv,
                SeqMode::Cauchy => SeqProduct::Cauchy,
            };
            println!("{}", f.product(&g, mode)?.to_json());
            Ok(())
        }
        SeqCmd::Sum { input, prime } => {
            let f = TruncatedSequence::from_json(&read(&input)?)?;
            let s = if prime { f.prime_sum() } else { f.partial_sum() };
            println!("{}", s.to_json());
            Ok(())
        }
        SeqCmd::Gamma { input, order } => {
            let coeffs: Vec<String> = serde_json::from_str(&read(&input)?)?;
            let rationals = coeffs
                .iter()
                .map(|s| hopfflow::ratio::parse(s))
                .collect::<Result<Vec<_>, _>>()?;
            let q = gamma_transform(&SymPoly::from_rationals(&rationals), order);
            let display: Vec<String> = q.coeffs.iter().map(|c| c.to_string()).collect();
            println!("{}", serde_json::to_string_pretty(&json!(display))?);
            Ok(())
        }
        SeqCmd::Fit { input, degree } => {
            let f = TruncatedSequence::from_json(&read(&input)?)?;
            let floats = match &f {
                TruncatedSequence::Float(v) => v.clone(),
                TruncatedSequence::Exact(v) => v
                    .iter()
                    .map(hopfflow::feynman::quadrature::rational_to_f64)
                    .collect(),
            };
            let report = asymptotic_fit(&floats, degree)?;
            let v = json!({
                "coefficients": report.coefficients,
                "window": [report.window.0, report.window.1],
                "max_residual": report.max_residual,
                "residual_first_half": report.residual_first_half,
                "residual_second_half": report.residual_second_half,
                "ill_conditioned": report.ill_conditioned,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(())
        }
        SeqCmd::Norm { input } => {
            let f = TruncatedSequence::from_json(&read(&input)?)?;
            println!("{}", hopfflow::ratio::format(&levin_norm(&f)?));
            Ok(())
        }
        SeqCmd::RbCheck {
            input,
            rhs,
            theta,
            prime,
        } => {
            let f = TruncatedSequence::from_json(&read(&input)?)?;
            let g = TruncatedSequence::from_json(&read(&rhs)?)?;
            let op = if prime {
                SummationOp::Shifted
            } else {
                SummationOp::Inclusive
            };
            let report = hopfflow::seq::summation_rb_report(&f, &g, op, theta)?;
            let v = json!({
                "theta": theta,
                "compared_indices": report.compared_indices,
                "mismatches": report.mismatches,
                "passed": report.passed(),
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(())
        }
    }
}

fn time(cmd: TimeCmd) -> Result<()> {
    let TimeCmd::Flowchart { input, costs, out } = cmd;
    let chart = Flowchart::from_json(&read(&input)?)?;
    let cost_map: BTreeMap<String, f64> = serde_json::from_str(&read(&costs)?)?;
    let cost_map: BTreeMap<hopfflow::graph::VertexId, f64> = cost_map
        .into_iter()
        .map(|(k, v)| (hopfflow::graph::VertexId(k), v))
        .collect();
    let dg = chart.to_decorated_graph()?;
    let total = running_time(&dg, &cost_map)?;
    let report = cut_timing_report(&dg, &cost_map)?;
    match out.format {
        Format::Human => {
            println!("running time: {total}");
            for r in &report {
                let upper: Vec<String> = r.cut.upper.iter().map(|v| v.0.clone()).collect();
                println!(
                    "  cut upper={{{}}}: whole {} vs upper {} + lower {} -- {}",
                    upper.join(","),
                    r.whole,
                    r.upper,
                    r.lower,
                    if r.additive { "additive" } else { "strictly subadditive" }
                );
            }
        }
        Format::Json => {
            let cuts: Vec<serde_json::Value> = report
                .iter()
                .map(|r| {
                    json!({
                        "upper": r.cut.upper.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
                        "whole": r.whole,
                        "upper_time": r.upper,
                        "lower_time": r.lower,
                        "additive": r.additive,
                        "subadditive": r.subadditive,
                    })
                })
                .collect();
            let v = json!({ "running_time": total, "cuts": cuts });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
