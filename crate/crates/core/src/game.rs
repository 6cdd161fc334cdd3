//! Exact data model for bimatrix games: labeled square payoff matrices over
//! rationals, probability vectors, supports, and the L1 metric on the
//! simplex. All types are immutable after construction and all operations
//! are pure, so values can be shared freely across threads.

use num::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Metadata = Map<String, Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    Row,
    Col,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Row => Player::Col,
            Player::Col => Player::Row,
        }
    }
}

/// Sorted set of strategy indices with positive probability.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportSet {
    indices: Vec<usize>,
}

impl SupportSet {
    pub fn new(mut indices: Vec<usize>) -> SupportSet {
        indices.sort_unstable();
        indices.dedup();
        SupportSet { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn is_disjoint(&self, other: &SupportSet) -> bool {
        self.indices.iter().all(|i| !other.contains(*i))
    }

    /// True when the two supports jointly cover `0..n`.
    pub fn covers_with(&self, other: &SupportSet, n: usize) -> bool {
        (0..n).all(|i| self.contains(i) || other.contains(i))
    }
}

/// Exact probability vector on the strategy simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedStrategy {
    probs: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(probs: Vec<Rational>) -> Result<MixedStrategy> {
        if probs.is_empty() {
            return Err(Error::NotAProbability("empty vector".into()));
        }
        if let Some(p) = probs.iter().find(|p| p.is_negative()) {
            return Err(Error::NotAProbability(format!("negative entry {p}")));
        }
        let sum: Rational = probs.iter().sum();
        if !sum.is_one() {
            return Err(Error::NotAProbability(format!("entries sum to {sum}, not 1")));
        }
        Ok(MixedStrategy { probs })
    }

    /// Point mass on strategy `i`.
    pub fn pure(n: usize, i: usize) -> Result<MixedStrategy> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, dim: n });
        }
        let mut probs = vec![Rational::zero(); n];
        probs[i] = Rational::one();
        Ok(MixedStrategy { probs })
    }

    pub fn uniform(n: usize) -> MixedStrategy {
        assert!(n > 0);
        let p = Rational::new(1.into(), (n as i64).into());
        MixedStrategy { probs: vec![p; n] }
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.probs[i]
    }

    /// Exact positive-entry index set; no tolerance is involved.
    pub fn support(&self) -> SupportSet {
        SupportSet::new(
            self.probs
                .iter()
                .enumerate()
                .filter(|(_, p)| p.is_positive())
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn is_fully_mixed(&self) -> bool {
        self.probs.iter().all(|p| p.is_positive())
    }
}

/// A pair of mixed strategies, row player first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub x: MixedStrategy,
    pub y: MixedStrategy,
}

impl Profile {
    pub fn new(x: MixedStrategy, y: MixedStrategy) -> Result<Profile> {
        if x.dim() != y.dim() {
            return Err(Error::DimensionMismatch {
                expected: x.dim(),
                got: y.dim(),
            });
        }
        Ok(Profile { x, y })
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn strategy(&self, player: Player) -> &MixedStrategy {
        match player {
            Player::Row => &self.x,
            Player::Col => &self.y,
        }
    }
}

/// ||x − y||₁ = Σ|x_i − y_i|, the total-variation scale of farness; ranges
/// over [0, 2] for probability vectors.
pub fn l1_distance(x: &MixedStrategy, y: &MixedStrategy) -> Result<Rational> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    Ok(x.probs
        .iter()
        .zip(&y.probs)
        .map(|(a, b)| (a - b).abs())
        .sum())
}

/// Two payoff matrices over one shared, labeled strategy set.
#[derive(Debug, Clone, PartialEq)]
pub struct BimatrixGame {
    labels: Vec<String>,
    row_payoff: Vec<Vec<Rational>>,
    col_payoff: Vec<Vec<Rational>>,
    pub metadata: Option<Metadata>,
}

impl BimatrixGame {
    pub fn new(
        labels: Vec<String>,
        row_payoff: Vec<Vec<Rational>>,
        col_payoff: Vec<Vec<Rational>>,
        metadata: Option<Metadata>,
    ) -> Result<BimatrixGame> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::RectangularGame("empty strategy set".into()));
        }
        for (name, m) in [("row", &row_payoff), ("col", &col_payoff)] {
            if m.len() != n {
                return Err(Error::RectangularGame(format!(
                    "{name} matrix has {} rows for {n} labels",
                    m.len()
                )));
            }
            for (i, r) in m.iter().enumerate() {
                if r.len() != n {
                    return Err(Error::RectangularGame(format!(
                        "{name} matrix row {i} has {} entries for {n} labels",
                        r.len()
                    )));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(BimatrixGame {
            labels,
            row_payoff,
            col_payoff,
            metadata,
        })
    }

    /// Square game from integer payoff entries with generated labels.
    pub fn from_int_matrices(row: &[Vec<i64>], col: &[Vec<i64>]) -> Result<BimatrixGame> {
        let n = row.len();
        let labels = (0..n).map(|i| format!("s{i}")).collect();
        let conv = |m: &[Vec<i64>]| {
            m.iter()
                .map(|r| r.iter().map(|v| crate::rational::int(*v)).collect())
                .collect()
        };
        BimatrixGame::new(labels, conv(row), conv(col), None)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn matrix(&self, player: Player) -> &Vec<Vec<Rational>> {
        match player {
            Player::Row => &self.row_payoff,
            Player::Col => &self.col_payoff,
        }
    }

    pub fn payoff(&self, player: Player, i: usize, j: usize) -> &Rational {
        &self.matrix(player)[i][j]
    }

    fn check_profile(&self, profile: &Profile) -> Result<()> {
        if profile.dim() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: profile.dim(),
            });
        }
        Ok(())
    }

    /// Σ_i Σ_j x_i y_j U_player(i, j), exact.
    pub fn expected_payoff(&self, profile: &Profile, player: Player) -> Result<Rational> {
        self.check_profile(profile)?;
        let m = self.matrix(player);
        let mut total = Rational::zero();
        for (i, xi) in profile.x.probs().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for (j, yj) in profile.y.probs().iter().enumerate() {
                if !yj.is_zero() {
                    row += yj * &m[i][j];
                }
            }
            total += xi * row;
        }
        Ok(total)
    }

    /// The vector of pure-strategy payoffs for `player` against the
    /// opponent's mixed strategy: entry s is U_player(s, other) with `player`
    /// on its own side of the matrix.
    pub fn pure_payoffs_against(&self, player: Player, opponent: &MixedStrategy) -> Result<Vec<Rational>> {
        if opponent.dim() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: opponent.dim(),
            });
        }
        let m = self.matrix(player);
        let n = self.n();
        let mut out = Vec::with_capacity(n);
        match player {
            Player::Row => {
                for i in 0..n {
                    let mut v = Rational::zero();
                    for (j, yj) in opponent.probs().iter().enumerate() {
                        if !yj.is_zero() {
                            v += yj * &m[i][j];
                        }
                    }
                    out.push(v);
                }
            }
            Player::Col => {
                for j in 0..n {
                    let mut v = Rational::zero();
                    for (i, xi) in opponent.probs().iter().enumerate() {
                        if !xi.is_zero() {
                            v += xi * &m[i][j];
                        }
                    }
                    out.push(v);
                }
            }
        }
        Ok(out)
    }

    pub fn min_payoff(&self) -> Rational {
        self.payoff_iter().min().cloned().unwrap()
    }

    pub fn max_payoff(&self) -> Rational {
        self.payoff_iter().max().cloned().unwrap()
    }

    pub fn payoff_range(&self) -> (Rational, Rational) {
        (self.min_payoff(), self.max_payoff())
    }

    fn payoff_iter(&self) -> impl Iterator<Item = &Rational> {
        self.row_payoff
            .iter()
            .chain(self.col_payoff.iter())
            .flat_map(|r| r.iter())
    }

    /// True when all entries of both matrices lie in [0, 1].
    pub fn in_unit_range(&self) -> bool {
        self.payoff_iter()
            .all(|v| !v.is_negative() && *v <= Rational::one())
    }
}

/// The affine map applied by [`scale_payoffs`]: scaled payoffs map back to
/// the source via `u = scaled · scale + offset`. A constant game records
/// scale 0 with offset equal to the constant, which still maps back exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineScale {
    pub offset: Rational,
    pub scale: Rational,
}

impl AffineScale {
    pub fn to_original(&self, scaled: &Rational) -> Rational {
        scaled * &self.scale + &self.offset
    }
}

/// Jointly rescales both matrices by u ↦ (u − min)/(max − min) so every
/// entry lies in [0, 1]. Best-response comparisons are unchanged because the
/// same positive affine map is applied to every entry.
pub fn scale_payoffs(game: &BimatrixGame) -> (BimatrixGame, AffineScale) {
    let (min, max) = game.payoff_range();
    let span = &max - &min;
    let map_entry = |v: &Rational| -> Rational {
        if span.is_zero() {
            Rational::zero()
        } else {
            (v - &min) / &span
        }
    };
    let remap = |m: &Vec<Vec<Rational>>| m.iter().map(|r| r.iter().map(map_entry).collect()).collect();
    let scaled = BimatrixGame {
        labels: game.labels.clone(),
        row_payoff: remap(&game.row_payoff),
        col_payoff: remap(&game.col_payoff),
        metadata: game.metadata.clone(),
    };
    (
        scaled,
        AffineScale {
            offset: min,
            scale: span,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games;
    use crate::rational::{int, rat};

    fn strat(parts: &[(i64, i64)]) -> MixedStrategy {
        MixedStrategy::new(parts.iter().map(|(n, d)| rat(*n, *d)).collect()).unwrap()
    }

    #[test]
    fn probability_invariants_enforced() {
        assert!(MixedStrategy::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(MixedStrategy::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(MixedStrategy::new(vec![rat(1, 2), rat(1, 2)]).is_ok());
    }

    #[test]
    fn rectangular_and_duplicate_labels_rejected() {
        let bad = BimatrixGame::new(
            vec!["a".into(), "b".into()],
            vec![vec![int(0), int(0)]],
            vec![vec![int(0), int(0)], vec![int(0), int(0)]],
            None,
        );
        assert!(bad.is_err());
        let dup = BimatrixGame::new(
            vec!["a".into(), "a".into()],
            vec![vec![int(0), int(0)], vec![int(0), int(0)]],
            vec![vec![int(0), int(0)], vec![int(0), int(0)]],
            None,
        );
        assert!(dup.is_err());
    }

    #[test]
    fn expected_payoff_pure_profile_is_entry() {
        let g = games::bach_or_stravinsky();
        for i in 0..2 {
            for j in 0..2 {
                let p = Profile::new(
                    MixedStrategy::pure(2, i).unwrap(),
                    MixedStrategy::pure(2, j).unwrap(),
                )
                .unwrap();
                assert_eq!(&g.expected_payoff(&p, Player::Row).unwrap(), g.payoff(Player::Row, i, j));
                assert_eq!(&g.expected_payoff(&p, Player::Col).unwrap(), g.payoff(Player::Col, i, j));
            }
        }
    }

    #[test]
    fn expected_payoff_rps_uniform_is_zero() {
        let g = games::rock_paper_scissors();
        let p = Profile::new(MixedStrategy::uniform(3), MixedStrategy::uniform(3)).unwrap();
        assert_eq!(g.expected_payoff(&p, Player::Row).unwrap(), int(0));
        assert_eq!(g.expected_payoff(&p, Player::Col).unwrap(), int(0));
    }

    #[test]
    fn expected_payoff_bach_stravinsky_mixed() {
        let g = games::bach_or_stravinsky();
        let p = Profile::new(strat(&[(2, 3), (1, 3)]), strat(&[(1, 3), (2, 3)])).unwrap();
        assert_eq!(g.expected_payoff(&p, Player::Row).unwrap(), rat(1, 3));
    }

    #[test]
    fn l1_examples() {
        let a = strat(&[(2, 3), (1, 3)]);
        let b = strat(&[(1, 3), (2, 3)]);
        assert_eq!(l1_distance(&a, &a).unwrap(), int(0));
        assert_eq!(l1_distance(&a, &b).unwrap(), rat(2, 3));
        let e1 = MixedStrategy::pure(2, 0).unwrap();
        let e2 = MixedStrategy::pure(2, 1).unwrap();
        assert_eq!(l1_distance(&e1, &e2).unwrap(), int(2));
        assert!(l1_distance(&e1, &MixedStrategy::uniform(3)).is_err());
    }

    #[test]
    fn support_examples() {
        assert_eq!(MixedStrategy::pure(3, 0).unwrap().support().indices(), &[0]);
        assert_eq!(MixedStrategy::uniform(3).support().indices(), &[0, 1, 2]);
        let h = MixedStrategy::new(vec![rat(1, 2), int(0), rat(1, 2)]).unwrap();
        assert_eq!(h.support().indices(), &[0, 2]);
    }

    #[test]
    fn scale_examples() {
        let already = games::bach_or_stravinsky();
        let (scaled, map) = scale_payoffs(&already);
        assert_eq!(scaled, already);
        assert_eq!(map.scale, int(1));
        assert_eq!(map.offset, int(0));

        let constant = BimatrixGame::from_int_matrices(
            &[vec![7, 7], vec![7, 7]],
            &[vec![7, 7], vec![7, 7]],
        )
        .unwrap();
        let (scaled, map) = scale_payoffs(&constant);
        assert!(scaled.payoff_iter().all(|v| v.is_zero()));
        assert_eq!(map.to_original(&int(0)), int(7));

        let rps = games::rock_paper_scissors();
        let (scaled, map) = scale_payoffs(&rps);
        assert!(scaled.in_unit_range());
        assert_eq!(map.to_original(scaled.payoff(Player::Row, 0, 1)), int(-1));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_vec(n: usize) -> impl Strategy<Value = MixedStrategy> {
            prop::collection::vec(0u32..=12, n).prop_map(move |ws| {
                let total: u32 = ws.iter().sum();
                if total == 0 {
                    MixedStrategy::uniform(n)
                } else {
                    MixedStrategy::new(
                        ws.iter()
                            .map(|w| rat(*w as i64, total as i64))
                            .collect(),
                    )
                    .unwrap()
                }
            })
        }

        proptest! {
            #[test]
            fn l1_is_a_metric(a in arb_vec(4), b in arb_vec(4), c in arb_vec(4)) {
                let dab = l1_distance(&a, &b).unwrap();
                let dba = l1_distance(&b, &a).unwrap();
                let dac = l1_distance(&a, &c).unwrap();
                let dcb = l1_distance(&c, &b).unwrap();
                prop_assert!(!dab.is_negative());
                prop_assert!(dab <= int(2));
                prop_assert_eq!(&dab, &dba);
                prop_assert!(dab <= dac + dcb);
                prop_assert_eq!(l1_distance(&a, &a).unwrap(), int(0));
            }

            #[test]
            fn l1_min_overlap_identity(a in arb_vec(5), b in arb_vec(5)) {
                let overlap: Rational = a.probs().iter().zip(b.probs())
                    .map(|(p, q)| p.min(q).clone())
                    .sum();
                let d = l1_distance(&a, &b).unwrap();
                prop_assert_eq!(d, (int(1) - overlap) * int(2));
            }

            #[test]
            fn expected_payoff_is_bilinear(
                x1 in arb_vec(3), x2 in arb_vec(3), y in arb_vec(3), num in 0i64..=8,
            ) {
                let alpha = rat(num, 8);
                let g = games::rock_paper_scissors();
                let mix = MixedStrategy::new(
                    x1.probs().iter().zip(x2.probs())
                        .map(|(a, b)| &alpha * a + (int(1) - &alpha) * b)
                        .collect(),
                ).unwrap();
                let pay = |x: &MixedStrategy| {
                    g.expected_payoff(&Profile::new(x.clone(), y.clone()).unwrap(), Player::Row).unwrap()
                };
                prop_assert_eq!(pay(&mix), &alpha * pay(&x1) + (int(1) - &alpha) * pay(&x2));
            }
        }
    }

    #[test]
    fn scale_preserves_best_response_argmax() {
        // Sign of U1(i, y) − U1(k, y) is unchanged for every pure pair and a
        // spread of opponent strategies, on a fixed bank of small games.
        let bank = [
            games::rock_paper_scissors(),
            games::coordination(3),
            BimatrixGame::from_int_matrices(
                &[vec![3, -2, 0], vec![1, 5, -4], vec![0, 0, 2]],
                &[vec![-1, 2, 2], vec![0, 1, 3], vec![4, -2, 0]],
            )
            .unwrap(),
        ];
        for g in &bank {
            let (scaled, _) = scale_payoffs(g);
            let opponents = [
                MixedStrategy::uniform(3),
                MixedStrategy::pure(3, 1).unwrap(),
                MixedStrategy::new(vec![rat(1, 2), rat(1, 3), rat(1, 6)]).unwrap(),
            ];
            for y in &opponents {
                let orig = g.pure_payoffs_against(Player::Row, y).unwrap();
                let news = scaled.pure_payoffs_against(Player::Row, y).unwrap();
                for i in 0..3 {
                    for k in 0..3 {
                        let s1 = (&orig[i] - &orig[k]).signum();
                        let s2 = (&news[i] - &news[k]).signum();
                        assert_eq!(s1, s2, "argmax structure changed at ({i},{k})");
                    }
                }
            }
        }
    }
}
