//! Myerson centrality of the two-community graph under the messages and attachment games.
//!
//! ```bash
//! cargo run --release --example myerson_two_communities
//! ```

use position_centrality::centrality::{myerson_centrality, Caps};
use position_centrality::exact::to_f64;
use position_centrality::graph::two_communities;
use position_centrality::SymmetricGame;

fn main() -> position_centrality::Result<()> {
    let g = two_communities();
    let caps = Caps::default();
    let messages = myerson_centrality(&g, &SymmetricGame::messages(), &caps)?;
    let attachment = myerson_centrality(&g, &SymmetricGame::attachment(), &caps)?;
    let total_m: f64 = messages.as_f64().iter().sum();
    let total_a: f64 = attachment.as_f64().iter().sum();

    println!("{:>4}  {:>16}  {:>16}", "node", "messages", "attachment");
    for v in 0..g.node_count() {
        let m = to_f64(&messages.exact_values()[v]);
        let a = to_f64(&attachment.exact_values()[v]);
        println!(
            "{:>4}  {:>7.2} ({:>5.2}%)  {:>7.3} ({:>5.2}%)",
            v + 1,
            m,
            100.0 * m / total_m,
            a,
            100.0 * a / total_a
        );
    }
    println!("{:>4}  {:>7.2}           {:>7.3}", "sum", total_m, total_a);
    Ok(())
}
