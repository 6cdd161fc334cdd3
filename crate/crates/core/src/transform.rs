//! Game surgeries shared by the reductions: per-player strategy duplication
//! with punishment of unassociated play, diagonal modification, and
//! projection of derived-game profiles back to the source game.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{BimatrixGame, MixedStrategy, Player, Profile, SupportSet};
use crate::rational::{int, Rational};

/// Who a derived strategy belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Owner {
    Shared,
    RowCopy,
    ColCopy,
}

/// Bookkeeping for a duplication: for every derived index, the source index
/// it unlabels to and its owner; the punishment payoff σ charged for playing
/// the opponent's copy; and the source payoff range used when certifying
/// projected profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelMap {
    pub forward: Vec<(usize, Owner)>,
    pub punishment: Rational,
    pub payoff_range: (Rational, Rational),
}

impl LabelMap {
    pub fn derived_n(&self) -> usize {
        self.forward.len()
    }
}

/// Gives every strategy in `subset` a row copy and a column copy. A player
/// using its own copy (or a shared strategy) sees the source payoffs; a
/// player using the other player's copy is punished with σ while the
/// bystander receives 0.
///
/// σ must be strictly below the minimum payoff. The default is
/// min(0, min payoff) − 1: keeping σ below the bystander payoff as well
/// guarantees that no exact equilibrium of the derived game puts mass on an
/// unassociated copy, which is what makes the equilibrium sets of the two
/// games correspond exactly.
pub fn duplicate_strategies(
    game: &BimatrixGame,
    subset: &SupportSet,
    sigma: Option<Rational>,
) -> Result<(BimatrixGame, LabelMap)> {
    let n = game.n();
    if let Some(&bad) = subset.indices().iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange { index: bad, dim: n });
    }
    let (min, max) = game.payoff_range();
    let sigma = sigma.unwrap_or_else(|| min.clone().min(Rational::zero()) - int(1));
    if sigma >= min {
        return Err(Error::SigmaTooLarge {
            sigma: crate::rational::format_rational(&sigma),
            min: crate::rational::format_rational(&min),
        });
    }

    let mut forward: Vec<(usize, Owner)> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for i in 0..n {
        if !subset.contains(i) {
            forward.push((i, Owner::Shared));
            labels.push(game.label(i).to_string());
        }
    }
    for owner in [Owner::RowCopy, Owner::ColCopy] {
        let tag = if owner == Owner::RowCopy { 1 } else { 2 };
        for i in subset.iter() {
            forward.push((i, owner));
            labels.push(format!("{}#{tag}", game.label(i)));
        }
    }

    let dn = forward.len();
    let mut row = vec![vec![Rational::zero(); dn]; dn];
    let mut col = vec![vec![Rational::zero(); dn]; dn];
    for a in 0..dn {
        let (sa, oa) = &forward[a];
        for b in 0..dn {
            let (sb, ob) = &forward[b];
            row[a][b] = if *oa == Owner::ColCopy {
                sigma.clone()
            } else if *ob == Owner::RowCopy {
                Rational::zero()
            } else {
                game.payoff(Player::Row, *sa, *sb).clone()
            };
            col[a][b] = if *ob == Owner::RowCopy {
                sigma.clone()
            } else if *oa == Owner::ColCopy {
                Rational::zero()
            } else {
                game.payoff(Player::Col, *sa, *sb).clone()
            };
        }
    }

    let derived = BimatrixGame::new(labels, row, col, game.metadata.clone())?;
    Ok((
        derived,
        LabelMap {
            forward,
            punishment: sigma,
            payoff_range: (min, max),
        },
    ))
}

/// Replaces every diagonal entry of both payoff matrices with −M.
pub fn diagonal_modify(game: &BimatrixGame, m: &Rational) -> Result<BimatrixGame> {
    if !m.is_positive() {
        return Err(Error::ParameterOutOfRange(format!("M must be > 0, got {m}")));
    }
    let n = game.n();
    let penalty = -m.clone();
    let fix = |src: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        let mut out = src.clone();
        for (t, row) in out.iter_mut().enumerate().take(n) {
            row[t] = penalty.clone();
        }
        out
    };
    BimatrixGame::new(
        game.labels().to_vec(),
        fix(game.matrix(Player::Row)),
        fix(game.matrix(Player::Col)),
        game.metadata.clone(),
    )
}

/// Default diagonal-modification magnitude, 2n(max − min) + 1: large enough
/// that any 1/M shared mass is strictly unprofitable in the contexts the
/// modification is used in.
pub fn default_modification_magnitude(game: &BimatrixGame) -> Rational {
    let (min, max) = game.payoff_range();
    int(2 * game.n() as i64) * (max - min) + int(1)
}

/// Sums every copy's mass back onto its source strategy. Mass a player had
/// on unassociated copies is certified via the redistribution bound: the
/// returned rational is 2·(ε_row + ε_col)·(β − α), the extra regret the
/// projected profile can carry in the source game relative to the derived
/// profile's quality.
pub fn project_profile(derived: &Profile, map: &LabelMap) -> Result<(Profile, Rational)> {
    let dn = map.derived_n();
    if derived.dim() != dn {
        return Err(Error::DimensionMismatch {
            expected: dn,
            got: derived.dim(),
        });
    }
    let n = map
        .forward
        .iter()
        .map(|(s, _)| s + 1)
        .max()
        .expect("label map is nonempty");

    let mut unassociated = Rational::zero();
    let mut back = |s: &MixedStrategy, wrong: Owner| -> MixedStrategy {
        let mut probs = vec![Rational::zero(); n];
        for (idx, (src, owner)) in map.forward.iter().enumerate() {
            if *owner == wrong {
                unassociated += s.get(idx);
            }
            probs[*src] += s.get(idx);
        }
        MixedStrategy::new(probs).expect("projection conserves mass")
    };
    let x = back(&derived.x, Owner::ColCopy);
    let y = back(&derived.y, Owner::RowCopy);
    let (alpha, beta) = &map.payoff_range;
    let bound = int(2) * unassociated * (beta - alpha);
    Ok((Profile::new(x, y)?, bound))
}
