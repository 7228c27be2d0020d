//! Command-line interface: dataset generation, training, pairwise bound
//! computation, and nearest-neighbor evaluation.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use ringbound::ml::feature_dimension;
use ringbound::params::LearnConfig;
use ringbound::{
    build_all_rings, generate_trees, knn, learn_ring_params, load_collection, pairwise_bounds,
    ConstantCosts, CostModel, Error, GraphCollection, HeuristicConfig, LetterCosts, Method,
    OneClassSvmModel, RingParams, SetDistanceKind, SyntheticConfig,
};

#[derive(Parser)]
#[command(
    name = "ringbound",
    about = "Upper bounds for the graph edit distance via ring structures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic dataset of pairwise non-isomorphic labeled trees
    Generate(GenerateArgs),
    /// Compute bounds for every ordered pair of a dataset and write a CSV
    Compute(ComputeArgs),
    /// Leave-one-out 1-NN classification accuracy from a bounds CSV
    EvaluateKnn(EvaluateArgs),
    /// Learn ring parameters or train the one-class SVM model
    Train(TrainArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Node count range, e.g. 8-12
    #[arg(long, value_parser = parse_range)]
    sizes: (usize, usize),
    /// Node label alphabet size
    #[arg(long, default_value_t = 1)]
    alphabet: usize,
    /// Number of trees
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Accepted for interface uniformity; generation is single-threaded
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Output dataset path (JSON)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CostKind {
    Letter,
    Constant,
}

#[derive(Args)]
struct CostArgs {
    /// Cost model for the dataset's labels
    #[arg(long, value_enum, default_value_t = CostKind::Constant)]
    costs: CostKind,
    /// Constants sub_n,del_n,ins_n,sub_e,del_e,ins_e for --costs constant
    #[arg(long, default_value = "1,1,1,1,1,1", value_parser = parse_constants)]
    constants: [f64; 6],
}

impl CostArgs {
    fn build(&self) -> Result<Box<dyn CostModel>, Error> {
        Ok(match self.costs {
            CostKind::Letter => Box::new(LetterCosts::new()),
            CostKind::Constant => {
                let c = self.constants;
                Box::new(ConstantCosts::new(c[0], c[1], c[2], c[3], c[4], c[5])?)
            }
        })
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    dataset: PathBuf,
    /// ring_opt | ring_gd | ring_ms | ring_ml | branch_like | node_only
    #[arg(long)]
    method: String,
    /// Learned ring parameters JSON (from `train --mode ring-params`)
    #[arg(long)]
    params: Option<PathBuf>,
    /// Trained model JSON, required for ring_ml
    #[arg(long)]
    model: Option<PathBuf>,
    /// Maximum number of LSAPE solutions per pair
    #[arg(long, default_value_t = 1)]
    solutions: usize,
    /// Use a single greedy LSAPE solution instead of optimal ones
    #[arg(long, default_value_t = false)]
    greedy: bool,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Accepted for interface uniformity; bounds are deterministic
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    cost: CostArgs,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct EvaluateArgs {
    #[arg(long)]
    dataset: PathBuf,
    /// Bounds CSV produced by `compute`
    #[arg(long)]
    bounds: PathBuf,
    /// Optional report output path (stdout otherwise)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TrainMode {
    RingParams,
    MlModel,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    LsapeOptimal,
    LsapeGreedy,
    Multiset,
}

impl From<KindArg> for SetDistanceKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::LsapeOptimal => SetDistanceKind::LsapeOptimal,
            KindArg::LsapeGreedy => SetDistanceKind::LsapeGreedy,
            KindArg::Multiset => SetDistanceKind::Multiset,
        }
    }
}

#[derive(Args)]
struct TrainArgs {
    #[arg(long, value_enum)]
    mode: TrainMode,
    #[arg(long)]
    dataset: PathBuf,
    /// Objective trade-off for ring-params (1 = pure tightness sum)
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    /// Random simplex restarts for ring-params
    #[arg(long, default_value_t = 4)]
    restarts: usize,
    /// Set-distance kind used in training
    #[arg(long, value_enum, default_value_t = KindArg::LsapeOptimal)]
    kind: KindArg,
    /// One-class SVM nu for ml-model
    #[arg(long, default_value_t = 0.5)]
    nu: f64,
    /// Pairs up to this many total nodes get exact training maps
    #[arg(long, default_value_t = 12)]
    oracle_budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[command(flatten)]
    cost: CostArgs,
    /// Output artifact path (JSON)
    #[arg(long)]
    out: PathBuf,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once('-')
        .ok_or_else(|| format!("expected MIN-MAX, got '{s}'"))?;
    let lo = lo.trim().parse().map_err(|e| format!("bad minimum: {e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("bad maximum: {e}"))?;
    Ok((lo, hi))
}

fn parse_constants(s: &str) -> Result<[f64; 6], String> {
    let values: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|e| format!("bad constant: {e}")))
        .collect::<Result<_, _>>()?;
    values
        .try_into()
        .map_err(|_| "expected six comma-separated constants".to_string())
}

fn configure_threads(threads: usize) {
    if threads > 0 {
        // ignore the error if a global pool already exists (tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Compute(args) => cmd_compute(args),
        Command::EvaluateKnn(args) => cmd_evaluate_knn(args),
        Command::Train(args) => cmd_train(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Error> {
    let coll = generate_trees(&SyntheticConfig {
        min_nodes: args.sizes.0,
        max_nodes: args.sizes.1,
        alphabet_size: args.alphabet,
        count: args.count,
        seed: args.seed,
    })?;
    ringbound::save_collection(&coll, &args.out)?;
    println!(
        "wrote {} trees ({}-{} nodes, alphabet {}) to {}",
        coll.len(),
        args.sizes.0,
        args.sizes.1,
        args.alphabet,
        args.out.display()
    );
    Ok(())
}

/// Ring parameters artifact: the learned weights plus the training context.
#[derive(Serialize, Deserialize)]
struct RingParamsArtifact {
    collection: String,
    kind: SetDistanceKind,
    mu: f64,
    seed: u64,
    objective: f64,
    #[serde(flatten)]
    params: RingParams,
}

#[derive(Serialize)]
struct ModelArtifact<'a> {
    #[serde(flatten)]
    model: &'a OneClassSvmModel,
    meta: ModelMeta,
}

#[derive(Serialize)]
struct ModelMeta {
    collection: String,
    kind: SetDistanceKind,
    nu: f64,
    oracle_budget: usize,
    seed: u64,
    ring_size: usize,
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Uniform fallback parameters sized to cover every training graph.
fn default_ring_params(coll: &GraphCollection) -> Result<RingParams, Error> {
    let mut max_diam = 0;
    for g in &coll.graphs {
        max_diam = max_diam.max(build_all_rings(g, 1)?.diameter);
    }
    Ok(RingParams::uniform(max_diam + 1))
}

fn cmd_compute(args: ComputeArgs) -> Result<(), Error> {
    configure_threads(args.threads);
    let method: Method = args.method.parse()?;
    let coll = load_collection(&args.dataset)?;
    let costs = args.cost.build()?;

    let model = match (&args.model, method.needs_model()) {
        (Some(path), _) => Some(OneClassSvmModel::load(path)?),
        (None, true) => return Err(Error::MissingModel),
        (None, false) => None,
    };

    let mut cfg = match (&args.params, method.needs_rings()) {
        (Some(path), _) => {
            let artifact: RingParamsArtifact =
                serde_json::from_str(&std::fs::read_to_string(path)?)?;
            HeuristicConfig::with_ring_params(method, &artifact.params)
        }
        (None, true) => {
            if method == Method::RingMl {
                // ring size is pinned by the model's feature dimension
                let model = model.as_ref().expect("checked above");
                let l = ring_size_for_dimension(model.dim)?;
                HeuristicConfig::new(method, l)
            } else {
                HeuristicConfig::with_ring_params(method, &default_ring_params(&coll)?)
            }
        }
        (None, false) => HeuristicConfig::new(method, 1),
    };
    cfg.num_solutions = args.solutions;
    cfg.greedy_final_solve = args.greedy;

    let results = pairwise_bounds(&coll, &cfg, costs.as_ref(), model.as_ref())?;

    let mut csv = String::from("g_id,h_id,bound,seconds\n");
    let mut bound_sum = 0.0;
    let mut time_sum = 0.0;
    for r in &results {
        writeln!(
            csv,
            "{},{},{},{}",
            coll.graphs[r.g_index].id, coll.graphs[r.h_index].id, r.bound, r.seconds
        )
        .expect("writing to string");
        bound_sum += r.bound;
        time_sum += r.seconds;
    }
    let pairs = results.len().max(1) as f64;
    writeln!(csv, "#avg,,{},{}", bound_sum / pairs, time_sum / pairs).expect("writing to string");
    std::fs::write(&args.out, csv)?;
    println!(
        "computed {} pairs with {} (avg bound {:.4}, avg seconds {:.6}) -> {}",
        results.len(),
        method.name(),
        bound_sum / pairs,
        time_sum / pairs,
        args.out.display()
    );
    Ok(())
}

fn ring_size_for_dimension(dim: usize) -> Result<usize, Error> {
    if dim < feature_dimension(1) || (dim - 10) % 6 != 0 {
        return Err(Error::InvalidConfig(format!(
            "model dimension {dim} does not match any ring size"
        )));
    }
    Ok((dim - 10) / 6)
}

fn cmd_evaluate_knn(args: EvaluateArgs) -> Result<(), Error> {
    configure_threads(args.threads);
    let coll = load_collection(&args.dataset)?;
    let mut ids = Vec::with_capacity(coll.len());
    let mut classes = Vec::with_capacity(coll.len());
    for g in &coll.graphs {
        let class = g.class_label.clone().ok_or_else(|| {
            Error::MissingClassLabels(format!("graph '{}' has no class label", g.id))
        })?;
        ids.push(g.id.clone());
        classes.push(class);
    }

    let bounds = read_bounds_csv(&args.bounds)?;
    for (i, gi) in ids.iter().enumerate() {
        for (j, gj) in ids.iter().enumerate() {
            if i != j && !bounds.contains_key(&(gi.clone(), gj.clone())) {
                return Err(Error::InvalidConfig(format!(
                    "bounds CSV misses the ordered pair ({gi},{gj})"
                )));
            }
        }
    }

    let dist = |i: usize, j: usize| bounds[&(ids[i].clone(), ids[j].clone())];
    let accuracy = knn::one_nn_accuracy(&ids, &classes, &dist);
    let report = format!(
        "graphs: {}\nclasses: {}\n1-nn accuracy r = {accuracy}\n",
        ids.len(),
        classes
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len(),
    );
    match &args.out {
        Some(path) => std::fs::write(path, &report)?,
        None => print!("{report}"),
    }
    Ok(())
}

fn read_bounds_csv(path: &Path) -> Result<HashMap<(String, String), f64>, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut bounds = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("g_id") {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() < 3 {
            return Err(Error::InvalidConfig(format!(
                "{}:{}: expected g_id,h_id,bound[,seconds]",
                path.display(),
                lineno + 1
            )));
        }
        let bound: f64 = fields[2].parse().map_err(|e| {
            Error::InvalidConfig(format!("{}:{}: bad bound: {e}", path.display(), lineno + 1))
        })?;
        bounds.insert((fields[0].to_string(), fields[1].to_string()), bound);
    }
    Ok(bounds)
}

fn cmd_train(args: TrainArgs) -> Result<(), Error> {
    configure_threads(args.threads);
    let coll = load_collection(&args.dataset)?;
    let costs = args.cost.build()?;
    let kind: SetDistanceKind = args.kind.into();
    match args.mode {
        TrainMode::RingParams => {
            let learned = learn_ring_params(
                &coll,
                costs.as_ref(),
                &LearnConfig {
                    mu: args.mu,
                    kind,
                    restarts: args.restarts,
                    seed: args.seed,
                },
            )?;
            let artifact = RingParamsArtifact {
                collection: dataset_name(&args.dataset),
                kind,
                mu: args.mu,
                seed: args.seed,
                objective: learned.objective,
                params: learned.params,
            };
            std::fs::write(&args.out, serde_json::to_string_pretty(&artifact)?)?;
            println!(
                "learned ring parameters (L = {}, objective {:.4}) -> {}",
                artifact.params.l,
                artifact.objective,
                args.out.display()
            );
        }
        TrainMode::MlModel => {
            let (model, ring_size) = ringbound::train_ring_ml_model(
                &coll,
                costs.as_ref(),
                args.oracle_budget,
                args.nu,
                kind,
            )?;
            let artifact = ModelArtifact {
                model: &model,
                meta: ModelMeta {
                    collection: dataset_name(&args.dataset),
                    kind,
                    nu: args.nu,
                    oracle_budget: args.oracle_budget,
                    seed: args.seed,
                    ring_size,
                },
            };
            std::fs::write(&args.out, serde_json::to_string_pretty(&artifact)?)?;
            println!(
                "trained one-class SVM ({} support vectors, ring size {ring_size}) -> {}",
                model.support_vectors.len(),
                args.out.display()
            );
        }
    }
    Ok(())
}
