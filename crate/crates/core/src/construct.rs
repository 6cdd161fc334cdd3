//! Constructive algorithms with certified approximation bounds: mass
//! redistribution, far-equilibrium construction from an exact equilibrium,
//! the greedy constrained-disjoint profile, and the semi-disjoint to
//! constrained-far conversion. Every certificate is an exact rational bound
//! that the verify module can re-check with no tolerance.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{l1_distance, BimatrixGame, MixedStrategy, Player, Profile};
use crate::rational::{int, Rational};
use crate::transform;
use crate::verify;

#[derive(Debug, Clone, PartialEq)]
pub enum BoundKind {
    Nash,
    ConstrainedDisjoint,
    ConstrainedFar { delta: Rational },
}

/// One mass move in a construction trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Move {
    pub side: Player,
    pub from: usize,
    pub to: usize,
    pub mass: Rational,
}

/// A profile bundled with the exact regret bound its construction certifies
/// and the moves that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedProfile {
    pub profile: Profile,
    pub regret_bound: Rational,
    pub bound_kind: BoundKind,
    pub construction_trace: Vec<Move>,
}

/// Moves the listed masses between coordinates of `x` and certifies the
/// 2·ε·(β−α) bound, ε being the total moved mass: if (x, y) was an exact
/// equilibrium of a game with payoffs in [α, β], the moved profile is an
/// approximate equilibrium within the bound and both players' payoffs shift
/// by at most the bound.
pub fn redistribute(
    x: &MixedStrategy,
    moves: &[(usize, usize, Rational)],
    payoff_range: (&Rational, &Rational),
) -> Result<(MixedStrategy, Rational)> {
    let n = x.dim();
    let mut probs: Vec<Rational> = x.probs().to_vec();
    let mut total = Rational::zero();
    for (from, to, mass) in moves {
        for idx in [from, to] {
            if *idx >= n {
                return Err(Error::IndexOutOfRange { index: *idx, dim: n });
            }
        }
        if mass.is_negative() {
            return Err(Error::ParameterOutOfRange(format!("negative move mass {mass}")));
        }
        if *mass > probs[*from] {
            return Err(Error::NegativeMass { index: *from });
        }
        probs[*from] -= mass;
        probs[*to] += mass;
        total += mass;
    }
    let (alpha, beta) = payoff_range;
    let bound = int(2) * total * (beta - alpha);
    Ok((MixedStrategy::new(probs).expect("mass is conserved"), bound))
}

/// Turns an exact Nash equilibrium of a unit-range game into a profile
/// whose strategies are exactly 2δ apart, certified as a 4δ-approximate
/// equilibrium. If the input is already 2δ-far it is returned unchanged with
/// bound 0; otherwise both sides collapse onto the column strategy and δ
/// mass is moved off its largest coordinate, spread evenly over the rest.
pub fn make_far(game: &BimatrixGame, ne: &Profile, delta: &Rational) -> Result<CertifiedProfile> {
    if !game.in_unit_range() {
        return Err(Error::InvalidInput(
            "make_far requires payoffs in [0,1]; scale the game first".into(),
        ));
    }
    if delta.is_negative() || *delta > Rational::one() {
        return Err(Error::ParameterOutOfRange(format!("δ must be in [0,1], got {delta}")));
    }
    if !verify::regret(game, ne, Player::Row)?.is_zero()
        || !verify::regret(game, ne, Player::Col)?.is_zero()
    {
        return Err(Error::InvalidInput("input profile is not an exact Nash equilibrium".into()));
    }

    let two_delta = delta * int(2);
    if l1_distance(&ne.x, &ne.y)? >= two_delta {
        return Ok(CertifiedProfile {
            profile: ne.clone(),
            regret_bound: Rational::zero(),
            bound_kind: BoundKind::Nash,
            construction_trace: Vec::new(),
        });
    }

    let n = game.n();
    let y = &ne.y;
    let mut t = 0usize;
    for i in 1..n {
        if y.get(i) > y.get(t) {
            t = i;
        }
    }
    if delta > y.get(t) {
        return Err(Error::ParameterOutOfRange(format!(
            "δ = {delta} exceeds the largest probability {} of the target strategy",
            y.get(t)
        )));
    }
    if n < 2 {
        return Err(Error::ParameterOutOfRange(
            "cannot move mass off the only strategy of a 1-strategy game".into(),
        ));
    }

    let share = delta / int((n - 1) as i64);
    let mut probs = y.probs().to_vec();
    let mut trace = Vec::new();
    probs[t] -= delta;
    for i in 0..n {
        if i != t {
            probs[i] += &share;
            trace.push(Move {
                side: Player::Row,
                from: t,
                to: i,
                mass: share.clone(),
            });
        }
    }
    let z = MixedStrategy::new(probs).expect("mass conserved");
    debug_assert_eq!(l1_distance(&z, y).unwrap(), two_delta);
    Ok(CertifiedProfile {
        profile: Profile::new(z, y.clone())?,
        regret_bound: delta * int(4),
        bound_kind: BoundKind::Nash,
        construction_trace: trace,
    })
}

/// Greedy constrained-disjoint profile: the column sits on a pure anchor l,
/// the row concentrates 1−ε on its best reply t ≠ l and spreads ε over the
/// remaining strategies so that its support blocks every column deviation.
/// The column's feasible set collapses to {l} (regret exactly 0) and the
/// certified bound is the row's exact constrained regret, which is at most
/// ε·(β−α). With exactly two strategies the pure/pure profile is an exact
/// constrained disjoint equilibrium.
pub fn greedy_constrained_disjoint(
    game: &BimatrixGame,
    eps: &Rational,
    anchor: Option<usize>,
) -> Result<CertifiedProfile> {
    let n = game.n();
    if n < 2 {
        return Err(Error::ParameterOutOfRange(
            "constrained disjoint profiles need at least two strategies".into(),
        ));
    }
    if !eps.is_positive() || *eps >= Rational::one() {
        return Err(Error::ParameterOutOfRange(format!("ε must be in (0,1), got {eps}")));
    }
    let l = anchor.unwrap_or(0);
    if l >= n {
        return Err(Error::IndexOutOfRange { index: l, dim: n });
    }
    let y = MixedStrategy::pure(n, l)?;
    let row_values = game.pure_payoffs_against(Player::Row, &y)?;
    let mut t = if l == 0 { 1 } else { 0 };
    for i in 0..n {
        if i != l && row_values[i] > row_values[t] {
            t = i;
        }
    }

    let (x, trace) = if n == 2 {
        (MixedStrategy::pure(n, t)?, Vec::new())
    } else {
        let share = eps / int((n - 2) as i64);
        let mut probs = vec![Rational::zero(); n];
        probs[t] = Rational::one() - eps;
        let mut trace = Vec::new();
        for i in 0..n {
            if i != t && i != l {
                probs[i] = share.clone();
                trace.push(Move {
                    side: Player::Row,
                    from: t,
                    to: i,
                    mass: share.clone(),
                });
            }
        }
        (MixedStrategy::new(probs).expect("sums to one"), trace)
    };

    let profile = Profile::new(x, y)?;
    let row_regret = verify::constrained_regret_disjoint(game, &profile, Player::Row)?;
    debug_assert!(verify::constrained_regret_disjoint(game, &profile, Player::Col)?
        .regret
        .is_zero());
    Ok(CertifiedProfile {
        profile,
        regret_bound: row_regret.regret,
        bound_kind: BoundKind::ConstrainedDisjoint,
        construction_trace: trace,
    })
}

/// Converts an exact M-semi-disjoint Nash equilibrium of the diagonally
/// modified game into a constrained-far profile of the source game: each
/// strategy splits into its big part (entries > 1/M) and small part, and the
/// small mass collapses onto the lowest-index big-support element. The big
/// supports are disjoint, so the output is fully far, and the certified
/// constrained-far regret bound is 6n/M at δ = 1 − n/M.
pub fn semi_to_constrained_far(
    game: &BimatrixGame,
    m: &Rational,
    semi_ne: &Profile,
) -> Result<CertifiedProfile> {
    if !game.in_unit_range() {
        return Err(Error::InvalidInput(
            "semi_to_constrained_far requires payoffs in [0,1]; scale the game first".into(),
        ));
    }
    if !m.is_positive() {
        return Err(Error::ParameterOutOfRange(format!("M must be > 0, got {m}")));
    }
    let n = game.n();
    let modified = transform::diagonal_modify(game, m)?;
    if !verify::regret(&modified, semi_ne, Player::Row)?.is_zero()
        || !verify::regret(&modified, semi_ne, Player::Col)?.is_zero()
    {
        return Err(Error::InvalidInput(
            "input profile is not an exact Nash equilibrium of the diagonally modified game".into(),
        ));
    }
    if !verify::check_constraint(semi_ne, &verify::ConstraintSpec::SemiDisjoint(m.clone()))? {
        return Err(Error::InvalidInput("input profile is not M-semi-disjoint".into()));
    }

    let threshold = Rational::one() / m;
    let mut trace = Vec::new();
    let mut collapse = |side: Player, s: &MixedStrategy| -> Result<MixedStrategy> {
        let big: Vec<usize> = (0..n).filter(|&i| s.get(i) > &threshold).collect();
        let Some(&target) = big.first() else {
            return Err(Error::InvalidInput(format!(
                "{side:?} strategy has no entry above 1/M; cannot collapse the small part"
            )));
        };
        let mut probs = vec![Rational::zero(); n];
        for &i in &big {
            probs[i] = s.get(i).clone();
        }
        for i in 0..n {
            if s.get(i).is_positive() && !big.contains(&i) {
                probs[target] += s.get(i);
                trace.push(Move {
                    side,
                    from: i,
                    to: target,
                    mass: s.get(i).clone(),
                });
            }
        }
        Ok(MixedStrategy::new(probs).expect("mass conserved"))
    };

    let x = collapse(Player::Row, &semi_ne.x)?;
    let y = collapse(Player::Col, &semi_ne.y)?;
    debug_assert!(x.support().is_disjoint(&y.support()));

    let n_rat = int(n as i64);
    Ok(CertifiedProfile {
        profile: Profile::new(x, y)?,
        regret_bound: int(6) * &n_rat / m,
        bound_kind: BoundKind::ConstrainedFar {
            delta: Rational::one() - n_rat / m,
        },
    construction_trace: trace,
    })
}
