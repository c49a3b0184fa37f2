//! Increments from bridging the hubs of two stars, and how the bridge's power compares to
//! a spoke's.
//!
//! ```bash
//! cargo run --release --example joined_stars -- 2 3
//! ```

use position_centrality::analysis::{
    bridge_ratio_limits, bridge_ratios, two_star_closed_forms, two_star_increments,
};
use position_centrality::centrality::Caps;
use position_centrality::exact::to_f64;
use position_centrality::SymmetricGame;

fn main() -> position_centrality::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("leaf count"));
    let k1 = args.next().unwrap_or(2);
    let k2 = args.next().unwrap_or(3);
    let game = SymmetricGame::messages();
    let closed = two_star_closed_forms(k1, k2, &game)?;
    let exact = two_star_increments(k1, k2, &game, &Caps::default())?;
    assert_eq!(closed, exact);

    println!("stars with {k1} and {k2} leaves, messages game");
    let rows = [
        ("myerson hub", &closed.myerson_hub),
        ("myerson satellite", &closed.myerson_satellite),
        ("position hub", &closed.position_hub),
        ("position satellite", &closed.position_satellite),
        ("spoke power", &closed.spoke_power),
    ];
    for (name, pair) in rows {
        println!("{name:>20}  {:>8}  {:>8}", pair[0].to_string(), pair[1].to_string());
    }
    println!("{:>20}  {:>8}", "bridge power", closed.bridge_power.to_string());

    let (lim1, lim2) = bridge_ratio_limits(k1);
    println!("\nbridge / spoke as the second star grows (limits {lim1}, {lim2})");
    for k in [1, 2, 5, 10, 50, 200] {
        let (r1, r2) = bridge_ratios(k1, k)?;
        println!("{k:>5}  {:>10.4}  {:>10.4}", to_f64(&r1), to_f64(&r2));
    }
    Ok(())
}
