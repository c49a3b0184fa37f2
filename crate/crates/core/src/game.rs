//! Transferable-utility games: the symmetric catalog, Harsanyi dividends and the Shapley
//! value in marginal and dividend form.
//!
//! Coalitions are `u64` bitmasks over players `0..n`. All values are exact rationals.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, factorial, int, Rational};

/// Default player cap for the generic (2^n table) Shapley routines.
pub const DEFAULT_PLAYER_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
enum SizeFunction {
    Messages,
    Overhead,
    Attachment,
    AttachmentMessages,
    Conferences,
    Custom(Vec<Rational>),
}

/// A game whose coalition values depend only on coalition size: `v(S) = f(|S|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGame {
    name: String,
    f: SizeFunction,
}

/// Analytic properties of a symmetric game checked by finite differences on `0..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameFlags {
    pub zero_normalized: bool,
    pub superadditive: bool,
    pub convex: bool,
    /// `f >= 0` and every forward difference of every order is `>= 0` on `1..=n`.
    pub smooth_nonneg: bool,
}

impl GameFlags {
    /// Zero-normalized and superadditive, the class the position-centrality results assume.
    pub fn in_g0(&self) -> bool {
        self.zero_normalized && self.superadditive
    }
}

#[derive(Debug, Deserialize)]
struct CustomGameJson {
    name: String,
    f: Vec<serde_json::Value>,
}

impl SymmetricGame {
    /// `f(s) = s(s-1)`: ordered pairs able to exchange messages.
    pub fn messages() -> Self {
        Self::named("messages", SizeFunction::Messages)
    }

    /// `f(s) = -1` for every nonempty coalition.
    pub fn overhead() -> Self {
        Self::named("overhead", SizeFunction::Overhead)
    }

    /// `f(s) = 2(s-1)`.
    pub fn attachment() -> Self {
        Self::named("attachment", SizeFunction::Attachment)
    }

    /// `f(s) = s^2 + s - 2`.
    pub fn attachment_messages() -> Self {
        Self::named("attachment-messages", SizeFunction::AttachmentMessages)
    }

    /// `f(s) = 2^s - s - 1`: subsets with at least two members.
    pub fn conferences() -> Self {
        Self::named("conferences", SizeFunction::Conferences)
    }

    /// A game given by its table `f(0), f(1), ...`; `f(0)` must be zero.
    pub fn custom(name: impl Into<String>, table: Vec<Rational>) -> Result<Self> {
        let name = name.into();
        match table.first() {
            None => return Err(Error::Parse(format!("game `{name}` has an empty table"))),
            Some(v) if !v.is_zero() => {
                return Err(Error::Parse(format!("game `{name}` must have f(0) = 0")))
            }
            _ => {}
        }
        Ok(SymmetricGame {
            name,
            f: SizeFunction::Custom(table),
        })
    }

    /// Parses `{"name": ..., "f": [f(0), f(1), ...]}`; entries may be numbers or `"p/q"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CustomGameJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let table = raw
            .f
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => exact::parse(s),
                serde_json::Value::Number(n) => exact::parse(&n.to_string()),
                other => Err(Error::Parse(format!("bad game table entry {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::custom(raw.name, table)
    }

    /// Looks up a catalog game by its CLI name.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "messages" => Ok(Self::messages()),
            "overhead" => Ok(Self::overhead()),
            "attachment" => Ok(Self::attachment()),
            "attachment-messages" => Ok(Self::attachment_messages()),
            "conferences" => Ok(Self::conferences()),
            other => Err(Error::UnknownGame(other.to_string())),
        }
    }

    /// The five catalog games.
    pub fn catalog() -> Vec<SymmetricGame> {
        vec![
            Self::messages(),
            Self::overhead(),
            Self::attachment(),
            Self::attachment_messages(),
            Self::conferences(),
        ]
    }

    fn named(name: &str, f: SizeFunction) -> Self {
        SymmetricGame {
            name: name.to_string(),
            f,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_attachment(&self) -> bool {
        self.f == SizeFunction::Attachment
    }

    /// `f(s)`.
    pub fn f(&self, s: usize) -> Result<Rational> {
        if s == 0 {
            return Ok(Rational::zero());
        }
        let si = s as i64;
        Ok(match &self.f {
            SizeFunction::Messages => int(si * (si - 1)),
            SizeFunction::Overhead => int(-1),
            SizeFunction::Attachment => int(2 * (si - 1)),
            SizeFunction::AttachmentMessages => int(si * si + si - 2),
            SizeFunction::Conferences => {
                let two_s = num_traits::pow(num_bigint::BigInt::from(2), s);
                Rational::from_integer(two_s - num_bigint::BigInt::from(s) - 1)
            }
            SizeFunction::Custom(t) => t.get(s).cloned().ok_or(Error::GameDomain {
                name: self.name.clone(),
                size: s,
            })?,
        })
    }

    /// `[f(0), ..., f(max)]`.
    pub fn table(&self, max: usize) -> Result<Vec<Rational>> {
        (0..=max).map(|s| self.f(s)).collect()
    }

    /// The size function that actually enters the link game: components of an edge set
    /// always have at least two nodes, so `f(1)` never contributes. Returns
    /// `[0, 0, f(2), ..., f(max)]`.
    pub fn link_table(&self, max: usize) -> Result<Vec<Rational>> {
        (0..=max)
            .map(|s| if s < 2 { Ok(Rational::zero()) } else { self.f(s) })
            .collect()
    }

    /// Checks the analytic flags on sizes `0..=n`.
    pub fn flags(&self, n: usize) -> Result<GameFlags> {
        let t = self.table(n)?;
        let zero_normalized = n < 1 || t[1].is_zero();
        let superadditive =
            (1..=n).all(|a| (1..=n - a).all(|b| t[a + b] >= &t[a] + &t[b]));
        let convex = (0..t.len().saturating_sub(2))
            .all(|s| !(&t[s + 2] - &t[s + 1] * int(2) + &t[s]).is_negative());
        let mut smooth_nonneg = t.iter().skip(1).all(|v| !v.is_negative());
        // difference rows restricted to sizes 1..=n
        let mut row: Vec<Rational> = t.iter().skip(1).cloned().collect();
        while smooth_nonneg && row.len() > 1 {
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
            smooth_nonneg = row.iter().all(|v| !v.is_negative());
        }
        Ok(GameFlags {
            zero_normalized,
            superadditive,
            convex,
            smooth_nonneg,
        })
    }

    /// The game on a fixed number of players.
    pub fn on(&self, n: usize) -> Result<SymmetricOn> {
        Ok(SymmetricOn {
            table: self.table(n)?,
        })
    }
}

/// A characteristic function over the subsets of a finite carrier `0..n`.
pub trait CoalitionGame {
    fn player_count(&self) -> usize;
    /// `v(S)` for the coalition given as a bitmask; `v(∅) = 0`.
    fn value(&self, coalition: u64) -> Rational;
}

/// A symmetric game restricted to `n` players.
#[derive(Debug, Clone)]
pub struct SymmetricOn {
    table: Vec<Rational>,
}

impl CoalitionGame for SymmetricOn {
    fn player_count(&self) -> usize {
        self.table.len() - 1
    }
    fn value(&self, coalition: u64) -> Rational {
        self.table[coalition.count_ones() as usize].clone()
    }
}

/// A game given by an explicit value for every coalition mask.
#[derive(Debug, Clone)]
pub struct TableGame {
    n: usize,
    values: Vec<Rational>,
}

impl TableGame {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        if values.len() != 1usize << n {
            return Err(Error::Precondition(format!(
                "a game on {n} players needs {} values",
                1usize << n
            )));
        }
        if !values[0].is_zero() {
            return Err(Error::Precondition("v(∅) must be zero".into()));
        }
        Ok(TableGame { n, values })
    }
}

impl CoalitionGame for TableGame {
    fn player_count(&self) -> usize {
        self.n
    }
    fn value(&self, coalition: u64) -> Rational {
        self.values[coalition as usize].clone()
    }
}

/// `u_R(S) = 1` if `R ⊆ S`, else 0.
#[derive(Debug, Clone, Copy)]
pub struct UnanimityGame {
    pub n: usize,
    pub carrier: u64,
}

impl CoalitionGame for UnanimityGame {
    fn player_count(&self) -> usize {
        self.n
    }
    fn value(&self, coalition: u64) -> Rational {
        if self.carrier & !coalition == 0 && self.carrier != 0 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > 30 {
        return Err(Error::CapExceeded {
            what: "players",
            size: n,
            cap: cap.min(30),
        });
    }
    Ok(())
}

/// `Δ_S(v) = Σ_{T ⊆ S} (-1)^{|S|-|T|} v(T)`.
pub fn harsanyi_dividend(game: &dyn CoalitionGame, coalition: u64) -> Result<Rational> {
    if coalition == 0 {
        return Err(Error::EmptyCoalition);
    }
    let s = coalition.count_ones();
    let mut sum = Rational::zero();
    let mut t = 0u64;
    loop {
        let v = game.value(t);
        if (s - t.count_ones()) % 2 == 0 {
            sum += v;
        } else {
            sum -= v;
        }
        if t == coalition {
            break;
        }
        t = t.wrapping_sub(coalition) & coalition;
    }
    Ok(sum)
}

/// Every dividend at once by in-place Möbius inversion over the subset lattice.
pub fn all_dividends(game: &dyn CoalitionGame, cap: usize) -> Result<Vec<Rational>> {
    let n = game.player_count();
    check_cap(n, cap)?;
    let mut d: Vec<Rational> = (0..1u64 << n).map(|s| game.value(s)).collect();
    for i in 0..n {
        let bit = 1usize << i;
        for s in 0..d.len() {
            if s & bit != 0 {
                let lower = d[s ^ bit].clone();
                d[s] -= lower;
            }
        }
    }
    Ok(d)
}

/// Shapley value from marginal contributions weighted by `s!(n-s-1)!/n!`.
pub fn shapley_marginal(game: &dyn CoalitionGame, cap: usize) -> Result<Vec<Rational>> {
    let n = game.player_count();
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let values: Vec<Rational> = (0..1u64 << n).map(|s| game.value(s)).collect();
    let nf = factorial(n);
    let weights: Vec<Rational> = (0..n)
        .map(|s| Rational::new(factorial(s) * factorial(n - s - 1), nf.clone()))
        .collect();
    Ok((0..n)
        .map(|i| {
            let bit = 1usize << i;
            let mut phi = Rational::zero();
            for s in 0..values.len() {
                if s & bit == 0 {
                    let marginal = &values[s | bit] - &values[s];
                    if !marginal.is_zero() {
                        phi += marginal * &weights[s.count_ones() as usize];
                    }
                }
            }
            phi
        })
        .collect())
}

/// Shapley value as `Σ_{S ∋ i} Δ_S / |S|`.
pub fn shapley_dividends(game: &dyn CoalitionGame, cap: usize) -> Result<Vec<Rational>> {
    let n = game.player_count();
    let d = all_dividends(game, cap)?;
    let mut phi = vec![Rational::zero(); n];
    for (s, div) in d.iter().enumerate().skip(1) {
        if div.is_zero() {
            continue;
        }
        let share = div / int(s.count_ones() as i64);
        for (i, p) in phi.iter_mut().enumerate() {
            if s >> i & 1 == 1 {
                *p += &share;
            }
        }
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn catalog_formulas() {
        let t = |g: SymmetricGame| g.table(4).unwrap();
        assert_eq!(t(SymmetricGame::messages()), [0, 0, 2, 6, 12].map(int));
        assert_eq!(t(SymmetricGame::overhead()), [0, -1, -1, -1, -1].map(int));
        assert_eq!(t(SymmetricGame::attachment()), [0, 0, 2, 4, 6].map(int));
        assert_eq!(t(SymmetricGame::attachment_messages()), [0, 0, 4, 10, 18].map(int));
        assert_eq!(t(SymmetricGame::conferences()), [0, 0, 1, 4, 11].map(int));
    }

    #[test]
    fn flags_of_catalog() {
        let m = SymmetricGame::messages().flags(12).unwrap();
        assert!(m.zero_normalized && m.convex && m.smooth_nonneg && m.superadditive);
        let o = SymmetricGame::overhead().flags(12).unwrap();
        assert!(!o.zero_normalized && !o.smooth_nonneg);
        let a = SymmetricGame::attachment().flags(12).unwrap();
        assert!(a.zero_normalized && a.convex && a.smooth_nonneg);
        let c = SymmetricGame::conferences().flags(12).unwrap();
        assert!(c.in_g0() && c.smooth_nonneg);
        let concave = SymmetricGame::custom("sqrtish", [0, 0, 4, 5, 5].map(int).to_vec()).unwrap();
        let f = concave.flags(4).unwrap();
        assert!(f.zero_normalized && !f.convex && !f.smooth_nonneg);
    }

    #[test]
    fn custom_games() {
        let g = SymmetricGame::from_json(r#"{"name":"half","f":[0, "0", "1/2", 1.5]}"#).unwrap();
        assert_eq!(g.f(2).unwrap(), frac(1, 2));
        assert_eq!(g.f(3).unwrap(), frac(3, 2));
        assert!(matches!(g.f(4), Err(Error::GameDomain { .. })));
        assert!(SymmetricGame::from_json(r#"{"name":"bad","f":[1]}"#).is_err());
        assert!(matches!(
            SymmetricGame::from_name("nope"),
            Err(Error::UnknownGame(_))
        ));
    }

    #[test]
    fn unanimity_dividends() {
        let u = UnanimityGame { n: 4, carrier: 0b0110 };
        assert_eq!(harsanyi_dividend(&u, 0b0110).unwrap(), int(1));
        assert_eq!(harsanyi_dividend(&u, 0b0010).unwrap(), int(0));
        assert_eq!(harsanyi_dividend(&u, 0b0111).unwrap(), int(0));
        assert_eq!(harsanyi_dividend(&u, 0), Err(Error::EmptyCoalition));
        let phi = shapley_dividends(&u, 20).unwrap();
        assert_eq!(phi, vec![int(0), frac(1, 2), frac(1, 2), int(0)]);
        assert_eq!(shapley_marginal(&u, 20).unwrap(), phi);
    }

    #[test]
    fn messages_pair_dividend_is_two() {
        let g = SymmetricGame::messages().on(5).unwrap();
        assert_eq!(harsanyi_dividend(&g, 0b00011).unwrap(), int(2));
    }

    #[test]
    fn attachment_dividends_alternate() {
        // f is affine on s >= 1 but f(0) = 0 sits off the line: λ_S = 2(-1)^|S| for |S| >= 2
        let g = SymmetricGame::attachment().on(6).unwrap();
        for s in [0b11u64, 0b111, 0b1111, 0b110101, 0b111111] {
            let sign = if s.count_ones() % 2 == 0 { 2 } else { -2 };
            assert_eq!(harsanyi_dividend(&g, s).unwrap(), int(sign));
        }
    }

    #[test]
    fn symmetric_game_splits_evenly() {
        for game in SymmetricGame::catalog() {
            let g = game.on(5).unwrap();
            let expect = game.f(5).unwrap() / int(5);
            assert!(shapley_marginal(&g, 20).unwrap().iter().all(|v| *v == expect));
            assert!(shapley_dividends(&g, 20).unwrap().iter().all(|v| *v == expect));
        }
    }

    #[test]
    fn two_player_game() {
        let g = TableGame::new(2, [0, 0, 0, 2].map(int).to_vec()).unwrap();
        assert_eq!(shapley_marginal(&g, 20).unwrap(), vec![int(1), int(1)]);
        assert_eq!(shapley_dividends(&g, 20).unwrap(), vec![int(1), int(1)]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = SymmetricGame::messages().on(8).unwrap();
        assert!(matches!(
            shapley_marginal(&g, 6),
            Err(Error::CapExceeded { .. })
        ));
    }
}
