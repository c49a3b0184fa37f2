//! Attachment and position-attachment changes when the two-community graph gains the
//! edge between the path midpoint (node 2) and the second hub (node 15).
//!
//! Nodes are printed 1-based. Pass `--mc` to estimate PA by sampling instead.
//!
//! ```bash
//! cargo run --release --example attachment_edge_addition
//! cargo run --release --example attachment_edge_addition -- --mc
//! ```

use position_centrality::analysis::{edge_addition_delta, Engine, Measure};
use position_centrality::centrality::{Caps, McConfig};
use position_centrality::graph::two_communities;
use position_centrality::SymmetricGame;

fn main() -> position_centrality::Result<()> {
    let engine = if std::env::args().any(|a| a == "--mc") {
        Engine::Mc(McConfig::new(10_000_000, 42))
    } else {
        Engine::Exact
    };
    let report = edge_addition_delta(
        &two_communities(),
        (1, 14),
        &SymmetricGame::attachment(),
        &[Measure::Attachment, Measure::Pa],
        engine,
        &Caps::default(),
    )?;
    let a = report.measure(Measure::Attachment).expect("requested").delta.as_f64();
    let pa = report.measure(Measure::Pa).expect("requested");
    let pa_mean = pa.delta.as_f64();
    let pa_err = pa.delta.stderr();

    println!("{:>4}  {:>13}  {:>8}  {:>8}  {:>8}", "node", "class", "dA", "dPA", "stderr");
    for v in 0..report.classification.len() {
        let err = pa_err.map_or(String::from("-"), |e| format!("{:.5}", e[v]));
        println!(
            "{:>4}  {:>13}  {:>8.4}  {:>8.4}  {:>8}",
            v + 1,
            report.classification[v].label(),
            a[v],
            pa_mean[v],
            err
        );
    }
    if let Some(bad) = &report.proposition_violations {
        println!("classification check violations: {}", bad.len());
    }
    Ok(())
}
