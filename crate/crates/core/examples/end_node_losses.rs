//! Searches small connected graphs for an added edge that lowers the centrality of one of
//! its own end nodes.
//!
//! ```bash
//! cargo run --release --example end_node_losses -- overhead 5
//! ```

use position_centrality::analysis::{connected_graphs, end_node_losses};
use position_centrality::centrality::Caps;
use position_centrality::SymmetricGame;

fn main() -> position_centrality::Result<()> {
    let mut args = std::env::args().skip(1);
    let game = SymmetricGame::from_name(&args.next().unwrap_or_else(|| "messages".into()))?;
    let max_n: usize = args.next().map_or(5, |a| a.parse().expect("node count"));
    let graphs = connected_graphs(max_n, max_n * (max_n - 1) / 2);
    let found = end_node_losses(&graphs, &game, &Caps::default())?;
    println!("{} graphs, game {}: {} losing end nodes", graphs.len(), game.name(), found.len());
    for (g, (i, j), v, d) in found.iter().take(5) {
        println!("edges {:?} + ({i}, {j}): node {v} changes by {d}", g.edges());
    }
    Ok(())
}
