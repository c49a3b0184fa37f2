//! Command-line front end: argument parsing, engine dispatch and report rendering.
//!
//! Every subcommand produces a [`Report`], which renders to JSON or CSV. Exact values are
//! written as `"p/q"` strings next to floats rounded to six decimals. Failures render as a
//! JSON object `{"error": {"kind": ..., "message": ...}}` on stderr with a nonzero exit.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    self, characterisation_probe, check_axiom, connected_graphs, edge_addition_delta,
    myerson_measure, pa_measure, position_measure, two_star_closed_forms, two_star_increments,
    Axiom, AxiomReport, Engine, Measure, TwoStarRow,
};
use crate::centrality::{
    myerson_centrality, position_centrality_dividends, position_centrality_exact,
    position_centrality_mc, Caps, CentralityVector, McConfig, SamplingInfo, Values,
};
use crate::error::{Error, Result};
use crate::exact::{render, to_f64, Rational};
use crate::game::SymmetricGame;
use crate::graph::{parse_graph, Graph};
use crate::link::LinkGame;

/// Environment variables that override the exact-engine caps.
pub const ENV_MYERSON_NODES: &str = "POSCENT_MYERSON_NODES";
pub const ENV_POSITION_EDGES: &str = "POSCENT_POSITION_EDGES";
pub const ENV_DIVIDEND_WARN: &str = "POSCENT_DIVIDEND_WARN_SUBSETS";

#[derive(Debug, Parser)]
#[command(name = "poscent", version, about = "Game-theoretic centrality on undirected graphs")]
pub struct Cli {
    /// Worker threads for the engines (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Output format.
    #[arg(long = "out", value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Marginal,
    Dividends,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Myerson,
    Position,
    Attachment,
    Pa,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Myerson => Measure::Myerson,
            MeasureArg::Position => Measure::Position,
            MeasureArg::Attachment => Measure::Attachment,
            MeasureArg::Pa => Measure::Pa,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Sampling {
    /// Exact enumeration or Monte-Carlo permutation sampling.
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    pub method: MethodArg,

    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,

    /// Required with `--method mc`.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Independent generator streams; results depend on this, not on `--threads`.
    #[arg(long, default_value_t = 8)]
    pub workers: usize,
}

impl Sampling {
    fn engine(&self) -> Result<Engine> {
        match self.method {
            MethodArg::Exact => Ok(Engine::Exact),
            MethodArg::Mc => {
                let seed = self
                    .seed
                    .ok_or_else(|| Error::Config("--seed is required with --method mc".into()))?;
                if self.workers == 0 {
                    return Err(Error::Config("--workers must be positive".into()));
                }
                Ok(Engine::Mc(McConfig {
                    samples: self.samples,
                    seed,
                    workers: self.workers,
                }))
            }
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Per-node centrality of one graph.
    Centrality {
        /// Edge-list or JSON graph file.
        #[arg(long)]
        graph: PathBuf,
        /// Catalog game name or a JSON file `{"name": .., "f": [..]}`.
        #[arg(long, default_value = "messages")]
        game: String,
        #[arg(long, value_enum, default_value_t = MeasureArg::Position)]
        measure: MeasureArg,
        /// Exact position engine.
        #[arg(long, value_enum, default_value_t = EngineArg::Marginal)]
        engine: EngineArg,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Centrality changes when one edge is added.
    Delta {
        /// Edge-list or JSON graph file.
        #[arg(long)]
        graph: PathBuf,
        /// The new edge as `i,j` (0-based).
        #[arg(long)]
        add: String,
        #[arg(long, default_value = "messages")]
        game: String,
        #[arg(long, value_delimiter = ',', default_value = "position")]
        measures: Vec<MeasureArg>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Exhaustive axiom checks over connected graphs or a single graph.
    Axioms {
        #[arg(long, value_enum, default_value_t = MeasureArg::Pa)]
        measure: MeasureArg,
        #[arg(long, default_value = "messages")]
        game: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Check this graph only.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Increments from joining the hubs of a k1-star and a k2-star.
    TwoStars {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long, default_value = "messages")]
        game: String,
    },
    /// Harsanyi dividends of the link game on every connected edge subset.
    Dividends {
        /// Edge-list or JSON graph file.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "messages")]
        game: String,
    },
}

/// A parsed invocation with caps resolved.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub caps: Caps,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl RunConfig {
    /// Builds a config from parsed arguments and the process environment.
    pub fn from_cli(cli: Cli) -> Result<Self> {
        Self::with_env(cli, |k| std::env::var(k).ok())
    }

    pub fn with_env(cli: Cli, env: impl Fn(&str) -> Option<String>) -> Result<Self> {
        let mut caps = Caps::default();
        let read = |key: &str| -> Result<Option<u64>> {
            match env(key) {
                None => Ok(None),
                Some(v) => match v.trim().parse::<u64>() {
                    Ok(x) if x > 0 => Ok(Some(x)),
                    _ => Err(Error::Config(format!("{key} must be a positive integer, got `{v}`"))),
                },
            }
        };
        if let Some(v) = read(ENV_MYERSON_NODES)? {
            caps.myerson_nodes = v as usize;
        }
        if let Some(v) = read(ENV_POSITION_EDGES)? {
            caps.position_edges = v as usize;
        }
        if let Some(v) = read(ENV_DIVIDEND_WARN)? {
            caps.dividend_warn_subsets = v;
        }
        if cli.threads == Some(0) {
            return Err(Error::Config("--threads must be positive".into()));
        }
        Ok(RunConfig {
            command: cli.command,
            caps,
            format: cli.format,
            output: cli.output,
            threads: cli.threads,
        })
    }
}

/// A number as an exact `"p/q"` string (when known) plus a rounded float.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Num {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<String>,
    pub approx: f64,
}

fn round6(x: f64) -> f64 {
    if x.is_finite() {
        let r = (x * 1e6).round() / 1e6;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    } else {
        x
    }
}

impl Num {
    fn exact(r: &Rational) -> Self {
        Num {
            exact: Some(render(r)),
            approx: round6(to_f64(r)),
        }
    }

    fn float(x: f64) -> Self {
        Num {
            exact: None,
            approx: round6(x),
        }
    }

    fn cell(&self) -> String {
        format!("{:.6}", self.approx)
    }

    fn exact_cell(&self) -> String {
        self.exact.clone().unwrap_or_default()
    }
}

fn nums(values: &Values) -> (Vec<Num>, Option<Vec<f64>>) {
    match values {
        Values::Exact(v) => (v.iter().map(Num::exact).collect(), None),
        Values::Sampled { mean, stderr } => (
            mean.iter().map(|&x| Num::float(x)).collect(),
            Some(stderr.iter().map(|&x| round6(x)).collect()),
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeValue {
    pub node: usize,
    pub value: Num,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stderr: Option<f64>,
    /// Fraction of the total over all nodes.
    pub share: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityReport {
    pub measure: String,
    pub method: String,
    pub game: String,
    pub nodes_count: usize,
    pub edges_count: usize,
    pub sampling: Option<SamplingInfo>,
    pub warnings: Vec<String>,
    pub total: Num,
    pub nodes: Vec<NodeValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Change {
    pub before: Num,
    pub after: Num,
    pub delta: Num,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stderr: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relative: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureChanges {
    pub measure: String,
    pub method: String,
    pub sampling: Option<SamplingInfo>,
    pub zeroed_unaffected: bool,
    pub nodes: Vec<Change>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeChange {
    pub edge: [usize; 2],
    pub change: Change,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaOutput {
    pub added_edge: [usize; 2],
    pub game: String,
    pub classification: Vec<String>,
    pub measures: Vec<MeasureChanges>,
    pub edges: Vec<EdgeChange>,
    pub proposition_violations: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub nodes: usize,
    pub edges: Vec<[usize; 2]>,
    pub detail: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomOut {
    pub axiom: String,
    pub holds: bool,
    pub graphs: usize,
    pub witness_count: usize,
    /// At most ten witnesses.
    pub witnesses: Vec<WitnessOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomsOutput {
    pub measure: String,
    pub game: String,
    pub graphs: usize,
    pub axioms: Vec<AxiomOut>,
    /// The same checks for a deliberately perturbed PA, which should fail.
    pub perturbed: Option<Vec<AxiomOut>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoStarQuantity {
    pub quantity: String,
    pub closed_form: Option<Num>,
    pub exact: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoStarsOutput {
    pub k1: usize,
    pub k2: usize,
    pub game: String,
    pub matches: Option<bool>,
    pub rows: Vec<TwoStarQuantity>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DividendOut {
    pub mask: u64,
    pub edges: Vec<usize>,
    pub l: usize,
    pub cutedges: Option<usize>,
    pub dividend: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DividendsOutput {
    pub game: String,
    pub nodes_count: usize,
    pub edges_count: usize,
    pub rows: Vec<DividendOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Centrality(CentralityReport),
    Delta(DeltaOutput),
    Axioms(AxiomsOutput),
    TwoStars(TwoStarsOutput),
    Dividends(DividendsOutput),
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

/// A catalog name, or a path to a JSON game table.
pub fn load_game(spec: &str) -> Result<SymmetricGame> {
    match SymmetricGame::from_name(spec) {
        Ok(g) => Ok(g),
        Err(unknown) => {
            let path = Path::new(spec);
            if spec.ends_with(".json") || path.is_file() {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{spec}: {e}")))?;
                SymmetricGame::from_json(&text)
            } else {
                Err(unknown)
            }
        }
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            _ => Err(Error::Config(format!("--add expects `i,j`, got `{s}`"))),
        },
        _ => Err(Error::Config(format!("--add expects `i,j`, got `{s}`"))),
    }
}

fn centrality_of(
    g: &Graph,
    measure: Measure,
    game: &SymmetricGame,
    engine: Engine,
    exact_engine: EngineArg,
    caps: &Caps,
) -> Result<CentralityVector> {
    let attachment = SymmetricGame::attachment();
    match (measure, engine) {
        (Measure::Myerson, _) => myerson_centrality(g, game, caps),
        (Measure::Attachment, _) => myerson_centrality(g, &attachment, caps),
        (Measure::Position | Measure::Pa, Engine::Mc(cfg)) => {
            let game = if measure == Measure::Pa { &attachment } else { game };
            position_centrality_mc(g, game, &cfg)
        }
        (Measure::Position | Measure::Pa, Engine::Exact) => {
            let game = if measure == Measure::Pa { &attachment } else { game };
            match exact_engine {
                EngineArg::Marginal => position_centrality_exact(g, game, caps),
                EngineArg::Dividends => position_centrality_dividends(g, game, caps),
            }
        }
    }
}

fn centrality_report(g: &Graph, measure: Measure, c: &CentralityVector) -> CentralityReport {
    let (values, stderr) = nums(&c.values);
    let total_f: f64 = c.as_f64().iter().sum();
    let total = match &c.values {
        Values::Exact(v) => Num::exact(&v.iter().sum::<Rational>()),
        Values::Sampled { .. } => Num::float(total_f),
    };
    let floats = c.as_f64();
    let nodes = values
        .into_iter()
        .enumerate()
        .map(|(v, value)| NodeValue {
            node: v,
            value,
            stderr: stderr.as_ref().map(|s| s[v]),
            share: if total_f != 0.0 { round6(floats[v] / total_f) } else { 0.0 },
        })
        .collect();
    CentralityReport {
        measure: measure.label().to_string(),
        method: c.method.label().to_string(),
        game: c.game.clone(),
        nodes_count: g.node_count(),
        edges_count: g.edge_count(),
        sampling: c.sampling.clone(),
        warnings: c.warnings.clone(),
        total,
        nodes,
    }
}

fn changes(before: &Values, after: &Values, delta: &Values, relative: &[Option<f64>]) -> Vec<Change> {
    let (b, _) = nums(before);
    let (a, _) = nums(after);
    let (d, err) = nums(delta);
    b.into_iter()
        .zip(a)
        .zip(d)
        .enumerate()
        .map(|(v, ((before, after), delta))| Change {
            before,
            after,
            delta,
            stderr: err.as_ref().map(|e| e[v]),
            relative: relative.get(v).copied().flatten().map(round6),
        })
        .collect()
}

fn edge_changes(after: &Graph, before: &Values, after_v: &Values) -> Vec<EdgeChange> {
    let padded = match before {
        Values::Exact(v) => {
            let mut v = v.clone();
            v.resize(after.edge_count(), Rational::from_integer(0.into()));
            Values::Exact(v)
        }
        Values::Sampled { mean, stderr } => {
            let (mut mean, mut stderr) = (mean.clone(), stderr.clone());
            mean.resize(after.edge_count(), 0.0);
            stderr.resize(after.edge_count(), 0.0);
            Values::Sampled { mean, stderr }
        }
    };
    let delta = match (&padded, after_v) {
        (Values::Exact(b), Values::Exact(a)) => Values::Exact(a.iter().zip(b).map(|(a, b)| a - b).collect()),
        _ => {
            let (b, a) = (padded.as_f64(), after_v.as_f64());
            let eb = padded.stderr().map(<[f64]>::to_vec).unwrap_or_default();
            let ea = after_v.stderr().map(<[f64]>::to_vec).unwrap_or_default();
            Values::Sampled {
                mean: a.iter().zip(&b).map(|(a, b)| a - b).collect(),
                stderr: ea.iter().zip(&eb).map(|(x, y)| x.hypot(*y)).collect(),
            }
        }
    };
    changes(&padded, after_v, &delta, &[])
        .into_iter()
        .zip(after.edges())
        .map(|(change, &(i, j))| EdgeChange { edge: [i, j], change })
        .collect()
}

fn axiom_out(report: &AxiomReport, graphs: usize) -> AxiomOut {
    AxiomOut {
        axiom: report.axiom.label().to_string(),
        holds: report.holds,
        graphs,
        witness_count: report.witnesses.len(),
        witnesses: report
            .witnesses
            .iter()
            .take(10)
            .map(|w| WitnessOut {
                nodes: w.graph.node_count(),
                edges: w.graph.edges().iter().map(|&(a, b)| [a, b]).collect(),
                detail: w.detail.clone(),
                lhs: render(&w.lhs),
                rhs: render(&w.rhs),
            })
            .collect(),
    }
}

fn merge_reports(axiom: Axiom, parts: Vec<AxiomReport>) -> AxiomReport {
    let witnesses: Vec<_> = parts.into_iter().flat_map(|r| r.witnesses).collect();
    AxiomReport {
        axiom,
        holds: witnesses.is_empty(),
        witnesses,
    }
}

fn run_axioms(
    measure: Measure,
    game_spec: &str,
    max_n: usize,
    graph: Option<&Path>,
    caps: &Caps,
) -> Result<AxiomsOutput> {
    let graphs = match graph {
        Some(p) => vec![read_graph(p)?],
        None => {
            if max_n > 7 {
                return Err(Error::CapExceeded {
                    what: "axiom sweep nodes",
                    size: max_n,
                    cap: 7,
                });
            }
            connected_graphs(max_n, max_n * max_n.saturating_sub(1) / 2)
        }
    };
    let (game, axioms, measure_fn): (SymmetricGame, Vec<Axiom>, Box<analysis::MeasureFn<'_>>) = match measure {
        Measure::Pa => (
            SymmetricGame::attachment(),
            Axiom::CHARACTERISATION.to_vec(),
            Box::new(pa_measure(*caps)),
        ),
        Measure::Attachment => (
            SymmetricGame::attachment(),
            vec![Axiom::ComponentEfficiency, Axiom::Fairness],
            Box::new(myerson_measure(SymmetricGame::attachment(), *caps)),
        ),
        Measure::Myerson => {
            let game = load_game(game_spec)?;
            (
                game.clone(),
                vec![Axiom::ComponentEfficiency, Axiom::Fairness],
                Box::new(myerson_measure(game, *caps)),
            )
        }
        Measure::Position => {
            let game = load_game(game_spec)?;
            (
                game.clone(),
                vec![Axiom::ComponentEfficiency, Axiom::BalancedLinkContributions, Axiom::Locality],
                Box::new(position_measure(game, *caps)),
            )
        }
    };
    let mut results = Vec::new();
    for &axiom in &axioms {
        let mut parts = Vec::new();
        for g in &graphs {
            if axiom == Axiom::GainLoss && !g.is_connected() {
                continue;
            }
            parts.push(check_axiom(axiom, g, &game, &*measure_fn)?);
        }
        results.push(axiom_out(&merge_reports(axiom, parts), graphs.len()));
    }
    let perturbed = if measure == Measure::Pa {
        let mut per_axiom: Vec<Vec<AxiomReport>> = vec![Vec::new(); Axiom::CHARACTERISATION.len()];
        for g in &graphs {
            let probe = characterisation_probe(g, caps)?;
            for r in probe.perturbed {
                let k = Axiom::CHARACTERISATION
                    .iter()
                    .position(|&a| a == r.axiom)
                    .expect("characterisation axiom");
                per_axiom[k].push(r);
            }
        }
        Some(
            Axiom::CHARACTERISATION
                .iter()
                .zip(per_axiom)
                .map(|(&a, parts)| axiom_out(&merge_reports(a, parts), graphs.len()))
                .collect(),
        )
    } else {
        None
    };
    Ok(AxiomsOutput {
        measure: measure.label().to_string(),
        game: game.name().to_string(),
        graphs: graphs.len(),
        axioms: results,
        perturbed,
    })
}

fn two_star_rows(closed: Option<&TwoStarRow>, exact: &TwoStarRow) -> Vec<TwoStarQuantity> {
    let pick = |row: &TwoStarRow| -> Vec<(String, Rational)> {
        vec![
            ("myerson_hub_1".into(), row.myerson_hub[0].clone()),
            ("myerson_hub_2".into(), row.myerson_hub[1].clone()),
            ("myerson_satellite_1".into(), row.myerson_satellite[0].clone()),
            ("myerson_satellite_2".into(), row.myerson_satellite[1].clone()),
            ("position_hub_1".into(), row.position_hub[0].clone()),
            ("position_hub_2".into(), row.position_hub[1].clone()),
            ("position_satellite_1".into(), row.position_satellite[0].clone()),
            ("position_satellite_2".into(), row.position_satellite[1].clone()),
            ("bridge_power".into(), row.bridge_power.clone()),
            ("spoke_power_1".into(), row.spoke_power[0].clone()),
            ("spoke_power_2".into(), row.spoke_power[1].clone()),
        ]
    };
    let closed = closed.map(pick);
    pick(exact)
        .into_iter()
        .enumerate()
        .map(|(k, (quantity, value))| TwoStarQuantity {
            quantity,
            closed_form: closed.as_ref().map(|c| Num::exact(&c[k].1)),
            exact: Num::exact(&value),
        })
        .collect()
}

/// Executes one command and returns its report.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(|| dispatch(cfg)),
        None => dispatch(cfg),
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Report> {
    let caps = &cfg.caps;
    match &cfg.command {
        Command::Centrality {
            graph,
            game,
            measure,
            engine,
            sampling,
        } => {
            let g = read_graph(graph)?;
            let game = load_game(game)?;
            let measure = Measure::from(*measure);
            let c = centrality_of(&g, measure, &game, sampling.engine()?, *engine, caps)?;
            Ok(Report::Centrality(centrality_report(&g, measure, &c)))
        }
        Command::Delta {
            graph,
            add,
            game,
            measures,
            sampling,
        } => {
            let g = read_graph(graph)?;
            let game = load_game(game)?;
            let (i, j) = parse_pair(add)?;
            let mut wanted: Vec<Measure> = measures.iter().map(|&m| m.into()).collect();
            wanted.dedup();
            let r = edge_addition_delta(&g, (i, j), &game, &wanted, sampling.engine()?, caps)?;
            let after_graph = g.add_edge(i, j)?;
            let edges = match &r.per_edge {
                Some((b, a)) => edge_changes(&after_graph, &b.values, &a.values),
                None => Vec::new(),
            };
            Ok(Report::Delta(DeltaOutput {
                added_edge: [r.added_edge.0, r.added_edge.1],
                game: r.game.clone(),
                classification: r.classification.iter().map(|c| c.label().to_string()).collect(),
                measures: r
                    .measures
                    .iter()
                    .map(|m| MeasureChanges {
                        measure: m.measure.label().to_string(),
                        method: m.after.method.label().to_string(),
                        sampling: m.after.sampling.clone(),
                        zeroed_unaffected: m.zeroed_unaffected,
                        nodes: changes(&m.before.values, &m.after.values, &m.delta, &m.relative()),
                    })
                    .collect(),
                edges,
                proposition_violations: r.proposition_violations.clone(),
            }))
        }
        Command::Axioms {
            measure,
            game,
            max_n,
            graph,
        } => Ok(Report::Axioms(run_axioms(
            (*measure).into(),
            game,
            *max_n,
            graph.as_deref(),
            caps,
        )?)),
        Command::TwoStars { k1, k2, game } => {
            let game = load_game(game)?;
            let exact = two_star_increments(*k1, *k2, &game, caps)?;
            let closed = if game == SymmetricGame::messages() {
                Some(two_star_closed_forms(*k1, *k2, &game)?)
            } else {
                None
            };
            Ok(Report::TwoStars(TwoStarsOutput {
                k1: *k1,
                k2: *k2,
                game: game.name().to_string(),
                matches: closed.as_ref().map(|c| *c == exact),
                rows: two_star_rows(closed.as_ref(), &exact),
            }))
        }
        Command::Dividends { graph, game } => {
            let g = read_graph(graph)?;
            let game = load_game(game)?;
            let link = LinkGame::new(&g, &game)?;
            let rows = link
                .dividend_spectrum()?
                .into_iter()
                .map(|r| DividendOut {
                    mask: r.mask,
                    edges: crate::graph::EdgeSubset::from_mask(r.mask).iter().collect(),
                    l: r.edges,
                    cutedges: r.cutedges,
                    dividend: Num::exact(&r.dividend),
                })
                .collect();
            Ok(Report::Dividends(DividendsOutput {
                game: game.name().to_string(),
                nodes_count: g.node_count(),
                edges_count: g.edge_count(),
                rows,
            }))
        }
    }
}

fn opt_f(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.6}")).unwrap_or_default()
}

/// Renders a report; output is a deterministic function of the report.
pub fn render_report(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => Ok(render_csv(report)),
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Centrality(r) => {
            if r.sampling.is_some() {
                out.push_str("node,value,stderr\n");
                for n in &r.nodes {
                    let _ = writeln!(out, "{},{},{}", n.node, n.value.cell(), opt_f(n.stderr));
                }
            } else {
                out.push_str("node,value,exact\n");
                for n in &r.nodes {
                    let _ = writeln!(out, "{},{},{}", n.node, n.value.cell(), n.value.exact_cell());
                }
            }
        }
        Report::Delta(r) => {
            out.push_str("node,class,measure,before,after,delta,stderr,delta_exact\n");
            for m in &r.measures {
                for (v, c) in m.nodes.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "{v},{},{},{},{},{},{},{}",
                        r.classification[v],
                        m.measure,
                        c.before.cell(),
                        c.after.cell(),
                        c.delta.cell(),
                        opt_f(c.stderr),
                        c.delta.exact_cell()
                    );
                }
            }
        }
        Report::Axioms(r) => {
            out.push_str("measure,axiom,holds,graphs,witnesses\n");
            for a in &r.axioms {
                let _ = writeln!(out, "{},{},{},{},{}", r.measure, a.axiom, a.holds, a.graphs, a.witness_count);
            }
            for a in r.perturbed.iter().flatten() {
                let _ = writeln!(out, "perturbed,{},{},{},{}", a.axiom, a.holds, a.graphs, a.witness_count);
            }
        }
        Report::TwoStars(r) => {
            out.push_str("quantity,closed_form,exact,exact_value\n");
            for q in &r.rows {
                let closed = q.closed_form.as_ref().map(Num::exact_cell).unwrap_or_default();
                let _ = writeln!(out, "{},{},{},{}", q.quantity, closed, q.exact.exact_cell(), q.exact.cell());
            }
        }
        Report::Dividends(r) => {
            out.push_str("mask,l,d_L,lambda\n");
            for row in &r.rows {
                let d = row.cutedges.map(|d| d.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{},{},{},{}", row.mask, row.l, d, row.dividend.exact_cell());
            }
        }
    }
    out
}

/// Machine-readable error object.
pub fn error_json(err: &Error) -> String {
    serde_json::json!({ "error": { "kind": err.kind(), "message": err.to_string() } }).to_string()
}

/// Parses `args`, runs, and writes the report. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let err = Error::Config(e.to_string().trim().to_string());
            eprintln!("{}", error_json(&err));
            return 2;
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let report = run(&cfg)?;
        let text = render_report(&report, cfg.format)?;
        match &cfg.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("{}", error_json(&err));
            1
        }
    }
}
