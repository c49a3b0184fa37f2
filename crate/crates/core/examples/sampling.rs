//! Monte-Carlo position centrality against the exact value, for growing sample counts.
//!
//! ```bash
//! cargo run --release --example sampling -- 42
//! ```

use position_centrality::centrality::{position_centrality_exact, position_centrality_mc, Caps, McConfig};
use position_centrality::graph::two_communities;
use position_centrality::SymmetricGame;

fn main() -> position_centrality::Result<()> {
    let seed: u64 = std::env::args().nth(1).map_or(42, |a| a.parse().expect("seed"));
    let g = two_communities();
    let game = SymmetricGame::messages();
    let exact = position_centrality_exact(&g, &game, &Caps::default())?.as_f64();

    println!("{:>9}  {:>12}  {:>12}  {:>10}", "samples", "max |error|", "max stderr", "max z");
    for samples in [1_000, 10_000, 100_000, 1_000_000] {
        let est = position_centrality_mc(&g, &game, &McConfig::new(samples, seed))?;
        let mean = est.as_f64();
        let stderr = est.values.stderr().expect("sampled");
        let mut worst = (0.0f64, 0.0f64, 0.0f64);
        for v in 0..g.node_count() {
            let err = (mean[v] - exact[v]).abs();
            worst.0 = worst.0.max(err);
            worst.1 = worst.1.max(stderr[v]);
            if stderr[v] > 0.0 {
                worst.2 = worst.2.max(err / stderr[v]);
            }
        }
        println!("{samples:>9}  {:>12.5}  {:>12.5}  {:>10.2}", worst.0, worst.1, worst.2);
    }
    Ok(())
}
