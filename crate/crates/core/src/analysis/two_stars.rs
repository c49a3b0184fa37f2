//! Two stars joined by a bridge between their hubs.
//!
//! `Graph::two_stars(k1, k2)` puts the first hub at node 0 with leaves `1..=k1` and the
//! second hub at `k1 + 1`; the bridge is then edge id `k1 + k2`.

use crate::centrality::{edge_power, myerson_centrality, position_centrality_exact, Caps};
use crate::error::{Error, Result};
use crate::exact::{frac, int, Rational};
use crate::game::SymmetricGame;
use crate::graph::Graph;

/// Centrality increments from adding the hub-to-hub bridge, plus the edge powers after it.
///
/// Index `0` refers to the `k1`-star and index `1` to the `k2`-star.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoStarRow {
    pub k1: usize,
    pub k2: usize,
    pub myerson_hub: [Rational; 2],
    pub myerson_satellite: [Rational; 2],
    pub position_hub: [Rational; 2],
    pub position_satellite: [Rational; 2],
    pub bridge_power: Rational,
    pub spoke_power: [Rational; 2],
}

fn check_leaves(k1: usize, k2: usize) -> Result<()> {
    if k1 == 0 || k2 == 0 {
        return Err(Error::Precondition("each star needs at least one leaf".into()));
    }
    Ok(())
}

/// Closed-form increments under the messages game.
pub fn two_star_closed_forms(k1: usize, k2: usize, game: &SymmetricGame) -> Result<TwoStarRow> {
    check_leaves(k1, k2)?;
    if *game != SymmetricGame::messages() {
        return Err(Error::Config(format!(
            "two-star closed forms exist only for the messages game, not `{}`",
            game.name()
        )));
    }
    let (a, b) = (int(k1 as i64), int(k2 as i64));
    let ab = &a * &b;
    let myerson_hub = int(1) + frac(2, 3) * (&a + &b) + &ab * frac(1, 2);
    let position_hub = |own: &Rational, other: &Rational| {
        int(1) + own + other * frac(1, 2) + &ab * frac(2, 3)
    };
    let spoke = |own: &Rational, other: &Rational| frac(2, 3) * other + own + int(2);
    Ok(TwoStarRow {
        k1,
        k2,
        myerson_hub: [myerson_hub.clone(), myerson_hub],
        myerson_satellite: [frac(2, 3) + &b * frac(1, 2), frac(2, 3) + &a * frac(1, 2)],
        position_hub: [position_hub(&a, &b), position_hub(&b, &a)],
        position_satellite: [frac(1, 2) + &b * frac(1, 3), frac(1, 2) + &a * frac(1, 3)],
        bridge_power: int(2) + &a + &b + &ab * frac(2, 3),
        spoke_power: [spoke(&a, &b), spoke(&b, &a)],
    })
}

/// The same quantities from the exact engines, for any game.
pub fn two_star_increments(
    k1: usize,
    k2: usize,
    game: &SymmetricGame,
    caps: &Caps,
) -> Result<TwoStarRow> {
    check_leaves(k1, k2)?;
    let before = Graph::two_stars(k1, k2);
    let (h1, h2) = (0, k1 + 1);
    let after = before.add_edge(h1, h2)?;
    let diff = |b: &[Rational], a: &[Rational], v: usize| &a[v] - &b[v];

    let mb = myerson_centrality(&before, game, caps)?;
    let ma = myerson_centrality(&after, game, caps)?;
    let pb = position_centrality_exact(&before, game, caps)?;
    let pa = position_centrality_exact(&after, game, caps)?;
    let phi = edge_power(&after, game, caps)?;
    let (mb, ma, pb, pa) = (mb.exact_values(), ma.exact_values(), pb.exact_values(), pa.exact_values());
    let phi = phi.exact_values();
    Ok(TwoStarRow {
        k1,
        k2,
        myerson_hub: [diff(mb, ma, h1), diff(mb, ma, h2)],
        myerson_satellite: [diff(mb, ma, 1), diff(mb, ma, h2 + 1)],
        position_hub: [diff(pb, pa, h1), diff(pb, pa, h2)],
        position_satellite: [diff(pb, pa, 1), diff(pb, pa, h2 + 1)],
        bridge_power: phi[k1 + k2].clone(),
        spoke_power: [phi[0].clone(), phi[k1].clone()],
    })
}

/// `(φ_b/φ_{e1}, φ_b/φ_{e2})` from the messages closed forms.
pub fn bridge_ratios(k1: usize, k2: usize) -> Result<(Rational, Rational)> {
    let row = two_star_closed_forms(k1, k2, &SymmetricGame::messages())?;
    Ok((
        &row.bridge_power / &row.spoke_power[0],
        &row.bridge_power / &row.spoke_power[1],
    ))
}

/// Limits of [`bridge_ratios`] as `k2 → ∞`: `3/2 + k1` and `1 + 2k1/3`.
pub fn bridge_ratio_limits(k1: usize) -> (Rational, Rational) {
    let a = int(k1 as i64);
    (frac(3, 2) + &a, int(1) + frac(2, 3) * a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::to_f64;

    #[test]
    fn single_leaf_stars() {
        let row = two_star_closed_forms(1, 1, &SymmetricGame::messages()).unwrap();
        assert_eq!(row.position_hub[0], frac(19, 6));
        assert_eq!(row.bridge_power, frac(14, 3));
    }

    #[test]
    fn closed_forms_match_engines() {
        let caps = Caps::default();
        for (k1, k2) in [(1, 1), (1, 3), (2, 2), (2, 4)] {
            let closed = two_star_closed_forms(k1, k2, &SymmetricGame::messages()).unwrap();
            let exact = two_star_increments(k1, k2, &SymmetricGame::messages(), &caps).unwrap();
            assert_eq!(closed, exact, "k1={k1} k2={k2}");
        }
    }

    #[test]
    fn hub_and_satellite_gaps() {
        for (k1, k2) in [(1, 4), (2, 5), (3, 3)] {
            let row = two_star_closed_forms(k1, k2, &SymmetricGame::messages()).unwrap();
            let d = (k2 as i64) - (k1 as i64);
            assert_eq!(&row.position_hub[1] - &row.position_hub[0], frac(d, 2));
            assert_eq!(&row.position_satellite[0] - &row.position_satellite[1], frac(d, 3));
        }
    }

    #[test]
    fn ratios_approach_limits() {
        let (l1, l2) = bridge_ratio_limits(2);
        let (r1, r2) = bridge_ratios(2, 100_000).unwrap();
        assert!((to_f64(&r1) - to_f64(&l1)).abs() < 1e-3);
        assert!((to_f64(&r2) - to_f64(&l2)).abs() < 1e-3);
    }

    #[test]
    fn other_games_rejected() {
        assert!(two_star_closed_forms(1, 2, &SymmetricGame::attachment()).is_err());
    }
}
