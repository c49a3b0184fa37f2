//! Position centrality of chains and stars from their closed forms.
//!
//! ```bash
//! cargo run --release --example closed_forms -- attachment
//! ```

use position_centrality::centrality::{chain_position_closed_form, star_position};
use position_centrality::SymmetricGame;

fn main() -> position_centrality::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "messages".into());
    let game = SymmetricGame::from_name(&name)?;
    println!("game {}\n\nchains", game.name());
    for n in 2..=8 {
        let pi = chain_position_closed_form(n, &game)?;
        let row: Vec<String> = pi.exact_values().iter().map(ToString::to_string).collect();
        println!("{n:>3}  {}", row.join("  "));
    }
    println!("\nstars (hub, leaf)");
    for n in 2..=10 {
        let pi = star_position(n, &game)?;
        let v = pi.exact_values();
        println!("{n:>3}  {:>8}  {:>8}", v[0].to_string(), v[1].to_string());
    }
    Ok(())
}
