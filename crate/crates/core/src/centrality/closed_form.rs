use num_traits::Zero;

use super::{CentralityVector, Method};
use crate::error::{Error, Result};
use crate::exact::{frac, int, Rational};
use crate::game::SymmetricGame;
use crate::link::FFunction;

/// Shapley value of each spoke of an `n`-node star: `f(n)/(n-1)`.
pub fn star_edge_power(n: usize, game: &SymmetricGame) -> Result<Rational> {
    if n < 2 {
        return Err(Error::Precondition("a star needs at least 2 nodes".into()));
    }
    Ok(game.f(n)? / int(n as i64 - 1))
}

/// Position centrality on `Graph::star(n)`: hub `f(n)/2`, leaves `f(n)/(2(n-1))`.
pub fn star_position(n: usize, game: &SymmetricGame) -> Result<CentralityVector> {
    if n == 1 {
        return Ok(CentralityVector::exact(Method::ClosedForm, game.name(), vec![Rational::zero()]));
    }
    let spoke = star_edge_power(n, game)?;
    let f = game.f(n)?;
    let mut values = vec![&spoke * frac(1, 2); n];
    values[0] = f * frac(1, 2);
    Ok(CentralityVector::exact(Method::ClosedForm, game.name(), values))
}

/// Edge powers along `Graph::chain(n)` from the recursion
/// `φ_{e_j} = φ_{e_{j-1}} + Σ_{k=j}^{n-j} F(k+1, 2)/k`, mirrored past the middle.
pub fn chain_edge_powers(n: usize, game: &SymmetricGame) -> Result<Vec<Rational>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    let big_f = FFunction::from_table(game.link_table(n)?);
    let m = n - 1;
    let mut phi = vec![Rational::zero(); m];
    let mut prev = Rational::zero();
    for j in 1..=n / 2 {
        let mut step = Rational::zero();
        for k in j..=n - j {
            step += big_f.eval(k + 1, 2)? / int(k as i64);
        }
        prev += step;
        phi[j - 1] = prev.clone();
        phi[m - j] = prev.clone();
    }
    Ok(phi)
}

/// Position centrality on `Graph::chain(n)` from [`chain_edge_powers`].
pub fn chain_position_closed_form(n: usize, game: &SymmetricGame) -> Result<CentralityVector> {
    let phi = chain_edge_powers(n, game)?;
    let half = frac(1, 2);
    let values = (0..n)
        .map(|v| {
            let left = if v > 0 { phi[v - 1].clone() } else { Rational::zero() };
            let right = phi.get(v).cloned().unwrap_or_else(Rational::zero);
            (left + right) * &half
        })
        .collect();
    Ok(CentralityVector::exact(Method::ClosedForm, game.name(), values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::{edge_power, position_centrality_exact, Caps};
    use crate::graph::Graph;

    #[test]
    fn three_node_chain() {
        let pi = chain_position_closed_form(3, &SymmetricGame::messages()).unwrap();
        assert_eq!(pi.exact_values(), &[frac(3, 2), int(3), frac(3, 2)]);
    }

    #[test]
    fn chains_match_exact_engine() {
        for game in SymmetricGame::catalog() {
            for n in 1..=9 {
                let exact = edge_power(&Graph::chain(n), &game, &Caps::default()).unwrap();
                let closed = chain_edge_powers(n, &game).unwrap();
                assert_eq!(exact.exact_values(), &closed[..], "{} n={n}", game.name());
            }
        }
    }

    #[test]
    fn stars_match_exact_engine() {
        for game in SymmetricGame::catalog() {
            for n in 1..=8 {
                let exact = position_centrality_exact(&Graph::star(n), &game, &Caps::default()).unwrap();
                let closed = star_position(n, &game).unwrap();
                assert_eq!(exact.exact_values(), closed.exact_values(), "{} n={n}", game.name());
            }
        }
    }
}
