//! Position and Myerson gains when a triangle node is bridged to the end of a chain.
//!
//! ```bash
//! cargo run --release --example bridge_gain
//! ```

use position_centrality::analysis::{edge_addition_delta, Engine, Measure};
use position_centrality::centrality::Caps;
use position_centrality::exact::to_f64;
use position_centrality::graph::triangle_and_chain;
use position_centrality::SymmetricGame;

fn main() -> position_centrality::Result<()> {
    let report = edge_addition_delta(
        &triangle_and_chain(),
        (0, 3),
        &SymmetricGame::messages(),
        &[Measure::Position, Measure::Myerson],
        Engine::Exact,
        &Caps::default(),
    )?;
    for m in [Measure::Position, Measure::Myerson] {
        let d = report.measure(m).expect("requested");
        let rel = d.relative();
        println!("{}", m.label());
        println!("{:>4}  {:>8}  {:>8}  {:>9}  {:>8}", "node", "before", "after", "delta", "gain");
        for v in 0..d.before.len() {
            let gain = rel[v].map_or(String::from("-"), |r| format!("{:.2}%", 100.0 * r));
            println!(
                "{:>4}  {:>8.4}  {:>8.4}  {:>9}  {:>8}",
                v,
                to_f64(&d.before.exact_values()[v]),
                to_f64(&d.after.exact_values()[v]),
                d.delta.exact().expect("exact engine")[v].to_string(),
                gain
            );
        }
        println!();
    }
    Ok(())
}
