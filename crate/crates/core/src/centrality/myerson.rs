use rayon::prelude::*;

use super::{shapley_from_size_sums, CentralityVector, Caps, Method};
use crate::error::{Error, Result};
use crate::exact::ScaledTable;
use crate::game::SymmetricGame;
use crate::graph::Graph;
use crate::link::component_sizes;

const CHUNK: u64 = 1 << 12;

/// Myerson centrality: the Shapley value of the graph-restricted game `v_E`.
pub fn myerson_centrality(g: &Graph, game: &SymmetricGame, caps: &Caps) -> Result<CentralityVector> {
    let n = g.node_count();
    if n > caps.myerson_nodes || n > 30 {
        return Err(Error::CapExceeded {
            what: "Myerson nodes",
            size: n,
            cap: caps.myerson_nodes.min(30),
        });
    }
    let scale = ScaledTable::new(&game.table(n)?)?;
    scale.check_headroom(n as u32, n as i128)?;
    let table = &scale.numerators;
    let adjacency = g.adjacency_masks()?;
    let subsets = 1u64 << n;

    let zero = || (vec![vec![0i128; n + 1]; n], vec![0i128; n + 1]);
    let (contains, total) = (0..subsets.div_ceil(CHUNK))
        .into_par_iter()
        .fold(zero, |(mut contains, mut total), chunk| {
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(subsets);
            for s in lo..hi {
                let value: i128 = component_sizes(&adjacency, s)
                    .into_iter()
                    .map(|c| table[c])
                    .sum();
                let size = s.count_ones() as usize;
                total[size] += value;
                let mut rest = s;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    contains[i][size] += value;
                }
            }
            (contains, total)
        })
        .reduce(zero, merge_sums);

    let values = shapley_from_size_sums(n, &contains, &total, &scale);
    let method = if game.is_attachment() {
        Method::AttachmentExact
    } else {
        Method::MyersonExact
    };
    Ok(CentralityVector::exact(method, game.name(), values))
}

pub(crate) fn merge_sums(
    (mut ca, mut ta): (Vec<Vec<i128>>, Vec<i128>),
    (cb, tb): (Vec<Vec<i128>>, Vec<i128>),
) -> (Vec<Vec<i128>>, Vec<i128>) {
    for (ra, rb) in ca.iter_mut().zip(&cb) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
    for (x, y) in ta.iter_mut().zip(&tb) {
        *x += y;
    }
    (ca, ta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::game::{shapley_marginal, CoalitionGame};
    use crate::link::RestrictedGame;

    #[test]
    fn matches_generic_shapley() {
        let g = crate::graph::triangle_and_chain().add_edge(0, 3).unwrap();
        for game in SymmetricGame::catalog() {
            let fast = myerson_centrality(&g, &game, &Caps::default()).unwrap();
            let rg = RestrictedGame::new(&g, &game).unwrap();
            assert_eq!(rg.player_count(), 6);
            let slow = shapley_marginal(&rg, 20).unwrap();
            assert_eq!(fast.exact_values(), &slow[..], "{}", game.name());
        }
    }

    #[test]
    fn attachment_on_tree_is_degree() {
        let t = Graph::new(7, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        let a = myerson_centrality(&t, &SymmetricGame::attachment(), &Caps::default()).unwrap();
        assert_eq!(a.method, Method::AttachmentExact);
        let deg: Vec<_> = (0..7).map(|v| int(t.degree(v) as i64)).collect();
        assert_eq!(a.exact_values(), &deg[..]);
    }

    #[test]
    fn node_cap() {
        let caps = Caps {
            myerson_nodes: 4,
            ..Caps::default()
        };
        assert!(matches!(
            myerson_centrality(&Graph::chain(5), &SymmetricGame::messages(), &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
