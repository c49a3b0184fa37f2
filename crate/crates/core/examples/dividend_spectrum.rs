//! Harsanyi dividends of the link game, grouped by edge count and cutedge count.
//!
//! Disconnected edge sets have zero dividend and are never visited; tree-shaped sets
//! depend only on `(l, d_L)`, the rest are computed by inclusion-exclusion.
//!
//! ```bash
//! cargo run --release --example dividend_spectrum -- conferences
//! cargo run --release --example dividend_spectrum -- messages fixtures/triangle_chain.txt
//! ```

use std::collections::BTreeMap;

use position_centrality::graph::{parse_graph, triangle_and_chain};
use position_centrality::link::LinkGame;
use position_centrality::{Rational, SymmetricGame};

fn main() -> position_centrality::Result<()> {
    let mut args = std::env::args().skip(1);
    let game = SymmetricGame::from_name(&args.next().unwrap_or_else(|| "messages".into()))?;
    let g = match args.next() {
        Some(path) => parse_graph(&std::fs::read_to_string(path).expect("readable graph file"))?,
        None => triangle_and_chain().add_edge(0, 3)?,
    };
    let link = LinkGame::new(&g, &game)?;
    let rows = link.dividend_spectrum()?;

    let mut trees: BTreeMap<(usize, usize), (usize, Rational)> = BTreeMap::new();
    let mut cyclic: BTreeMap<usize, (usize, Rational, Rational)> = BTreeMap::new();
    for r in &rows {
        match r.cutedges {
            Some(d) => {
                let e = trees.entry((r.edges, d)).or_insert((0, r.dividend.clone()));
                e.0 += 1;
            }
            None => {
                let e = cyclic
                    .entry(r.edges)
                    .or_insert((0, r.dividend.clone(), r.dividend.clone()));
                e.0 += 1;
                e.1 = e.1.clone().min(r.dividend.clone());
                e.2 = e.2.clone().max(r.dividend.clone());
            }
        }
    }

    println!("{} connected edge sets of {} edges, game {}", rows.len(), g.edge_count(), game.name());
    println!("\ntrees\n{:>3}  {:>3}  {:>6}  {:>12}", "l", "d", "count", "dividend");
    for ((l, d), (count, lambda)) in &trees {
        println!("{l:>3}  {d:>3}  {count:>6}  {:>12}", lambda.to_string());
    }
    println!("\nwith cycles\n{:>3}  {:>6}  {:>12}  {:>12}", "l", "count", "min", "max");
    for (l, (count, lo, hi)) in &cyclic {
        println!("{l:>3}  {count:>6}  {:>12}  {:>12}", lo.to_string(), hi.to_string());
    }
    Ok(())
}
