//! Exact regret computation and predicate checks for every equilibrium
//! notion in the library: plain ε-Nash, the five strategic constraints, and
//! constrained (generalized Nash) best responses under the disjointness and
//! farness feasible sets.
//!
//! Pure deviations suffice for the unconstrained and disjoint notions
//! because the feasible sets are convex hulls of the feasible pure
//! strategies. The 2δ-far feasible set is not convex, so
//! [`max_payoff_far`] maximizes over it directly by extreme-point
//! enumeration: the set is a union of half-space slices of the simplex, so
//! every candidate optimum is a simplex vertex or a point on a simplex edge
//! where the L1 distance to the anchor is exactly 2δ.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{l1_distance, BimatrixGame, MixedStrategy, Player, Profile};
use crate::rational::Rational;

/// Tagged strategic constraint on a profile.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstraintSpec {
    Disjoint,
    Partition,
    Far(Rational),
    Major(Rational),
    SemiDisjoint(Rational),
}

impl ConstraintSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            ConstraintSpec::Disjoint | ConstraintSpec::Partition => Ok(()),
            ConstraintSpec::Far(d) => {
                if d.is_negative() || *d > Rational::one() {
                    Err(Error::ParameterOutOfRange(format!("far δ must be in [0,1], got {d}")))
                } else {
                    Ok(())
                }
            }
            ConstraintSpec::Major(t) => {
                if t.is_negative() || *t >= Rational::one() {
                    Err(Error::ParameterOutOfRange(format!("major θ must be in [0,1), got {t}")))
                } else {
                    Ok(())
                }
            }
            ConstraintSpec::SemiDisjoint(m) => {
                if m.is_positive() {
                    Ok(())
                } else {
                    Err(Error::ParameterOutOfRange(format!("semi-disjoint M must be > 0, got {m}")))
                }
            }
        }
    }
}

/// A deviation that attains a reported regret.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Pure(usize),
    Mixed(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegretReport {
    pub row_regret: Rational,
    pub col_regret: Rational,
    pub row_witness: Option<Witness>,
    pub col_witness: Option<Witness>,
}

/// Best unilateral pure-deviation gain for `player`; zero iff the player is
/// already best-responding. Ties in the maximizing deviation break to the
/// lowest strategy index.
pub fn regret(game: &BimatrixGame, profile: &Profile, player: Player) -> Result<Rational> {
    Ok(regret_with_witness(game, profile, player)?.0)
}

pub fn regret_with_witness(
    game: &BimatrixGame,
    profile: &Profile,
    player: Player,
) -> Result<(Rational, usize)> {
    let current = game.expected_payoff(profile, player)?;
    let payoffs = game.pure_payoffs_against(player, profile.strategy(player.other()))?;
    let mut best = 0usize;
    for (s, v) in payoffs.iter().enumerate() {
        if v > &payoffs[best] {
            best = s;
        }
    }
    Ok((&payoffs[best] - current, best))
}

pub fn regret_report(game: &BimatrixGame, profile: &Profile) -> Result<RegretReport> {
    let (row_regret, rw) = regret_with_witness(game, profile, Player::Row)?;
    let (col_regret, cw) = regret_with_witness(game, profile, Player::Col)?;
    Ok(RegretReport {
        row_regret,
        col_regret,
        row_witness: Some(Witness::Pure(rw)),
        col_witness: Some(Witness::Pure(cw)),
    })
}

/// True iff max(row regret, col regret) ≤ ε.
pub fn is_eps_nash(game: &BimatrixGame, profile: &Profile, eps: &Rational) -> Result<bool> {
    if eps.is_negative() {
        return Err(Error::ParameterOutOfRange(format!("ε must be ≥ 0, got {eps}")));
    }
    Ok(regret(game, profile, Player::Row)? <= *eps && regret(game, profile, Player::Col)? <= *eps)
}

/// Whether a profile satisfies a strategic constraint. This checks the
/// profile itself; deviation incentives are the separate constrained-regret
/// operations.
pub fn check_constraint(profile: &Profile, spec: &ConstraintSpec) -> Result<bool> {
    spec.validate()?;
    let sx = profile.x.support();
    let sy = profile.y.support();
    Ok(match spec {
        ConstraintSpec::Disjoint => sx.is_disjoint(&sy),
        ConstraintSpec::Partition => sx.is_disjoint(&sy) && sx.covers_with(&sy, profile.dim()),
        ConstraintSpec::Far(d) => l1_distance(&profile.x, &profile.y)? >= d * crate::rational::int(2),
        ConstraintSpec::Major(t) => profile
            .x
            .probs()
            .iter()
            .chain(profile.y.probs())
            .all(|p| p.is_zero() || p > t),
        ConstraintSpec::SemiDisjoint(m) => {
            let bound = Rational::one() / m;
            profile
                .x
                .probs()
                .iter()
                .zip(profile.y.probs())
                .all(|(p, q)| !p.is_positive() || !q.is_positive() || p.min(q) < &bound)
        }
    })
}

/// Result of a constrained best-response query. When the feasible set is
/// empty the player is trivially unable to deviate: regret is reported as 0
/// with `empty_feasible` set.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstrainedRegret {
    pub regret: Rational,
    pub witness: Option<Witness>,
    pub empty_feasible: bool,
}

/// Best deviation gain for `player` over pure strategies outside the
/// opponent's support (pure deviations suffice: the feasible set is the
/// convex hull of the feasible pure strategies). Clamped below at 0.
pub fn constrained_regret_disjoint(
    game: &BimatrixGame,
    profile: &Profile,
    player: Player,
) -> Result<ConstrainedRegret> {
    let opponent = profile.strategy(player.other());
    let blocked = opponent.support();
    let feasible: Vec<usize> = (0..game.n()).filter(|s| !blocked.contains(*s)).collect();
    if feasible.is_empty() {
        return Ok(ConstrainedRegret {
            regret: Rational::zero(),
            witness: None,
            empty_feasible: true,
        });
    }
    let current = game.expected_payoff(profile, player)?;
    let payoffs = game.pure_payoffs_against(player, opponent)?;
    let mut best = feasible[0];
    for &s in &feasible[1..] {
        if payoffs[s] > payoffs[best] {
            best = s;
        }
    }
    let gain = &payoffs[best] - &current;
    if gain.is_positive() {
        Ok(ConstrainedRegret {
            regret: gain,
            witness: Some(Witness::Pure(best)),
            empty_feasible: false,
        })
    } else {
        Ok(ConstrainedRegret {
            regret: Rational::zero(),
            witness: None,
            empty_feasible: false,
        })
    }
}

/// Optimum of a linear payoff over the far feasible set.
#[derive(Debug, Clone, PartialEq)]
pub struct FarBest {
    pub value: Rational,
    pub witness: MixedStrategy,
}

/// Exact maximum of ⟨c, x⟩ over Δ_n ∩ { ||x − y||₁ ≥ 2δ }.
///
/// The L1 norm is the maximum of 2ⁿ linear functionals, so the feasible set
/// is a finite union of polytopes, each the simplex cut by one half-space.
/// Every vertex of such a cut lies on a vertex or an edge of the simplex,
/// which gives the candidate list: feasible vertices e_i (those with
/// 1 − y_i ≥ δ) and the points on each edge [e_i, e_j] where the distance
/// to y equals 2δ exactly. The distance along an edge is piecewise linear
/// and convex in the edge parameter, so the crossings are rational and at
/// most two per edge.
///
/// Returns [`Error::FarInfeasible`] when no candidate is feasible, which
/// happens exactly when δ > max_i (1 − y_i).
pub fn max_payoff_far(c: &[Rational], y: &MixedStrategy, delta: &Rational) -> Result<FarBest> {
    let n = y.dim();
    if c.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: c.len() });
    }
    if delta.is_negative() || *delta > Rational::one() {
        return Err(Error::ParameterOutOfRange(format!("δ must be in [0,1], got {delta}")));
    }
    let two_delta = delta * crate::rational::int(2);

    let mut best: Option<(Rational, Vec<Rational>)> = None;
    let mut consider = |value: Rational, point: Vec<Rational>| match &best {
        Some((v, _)) if *v >= value => {}
        _ => best = Some((value, point)),
    };

    // Simplex vertices.
    for i in 0..n {
        let dist = (Rational::one() - y.get(i)) * crate::rational::int(2);
        if dist >= two_delta {
            let mut point = vec![Rational::zero(); n];
            point[i] = Rational::one();
            consider(c[i].clone(), point);
        }
    }

    // Edge crossings: x(t) = (1−t)·e_i + t·e_j.
    let off_mass = |i: usize, j: usize| -> Rational {
        Rational::one() - y.get(i) - y.get(j)
    };
    for i in 0..n {
        for j in (i + 1)..n {
            let dist_at = |t: &Rational| -> Rational {
                (Rational::one() - t - y.get(i)).abs() + (t - y.get(j)).abs() + off_mass(i, j)
            };
            // Breakpoints of the two absolute values, clipped to [0, 1].
            let mut ts = vec![Rational::zero(), Rational::one()];
            for bp in [y.get(j).clone(), Rational::one() - y.get(i)] {
                if bp.is_positive() && bp < Rational::one() {
                    ts.push(bp);
                }
            }
            ts.sort();
            ts.dedup();
            let mut crossings: Vec<Rational> = Vec::new();
            for w in ts.windows(2) {
                let (p, q) = (&w[0], &w[1]);
                let fp = dist_at(p);
                let fq = dist_at(q);
                if fp == two_delta {
                    crossings.push(p.clone());
                }
                if fq == two_delta {
                    crossings.push(q.clone());
                }
                if (fp < two_delta && fq > two_delta) || (fp > two_delta && fq < two_delta) {
                    // Linear interpolation on this piece is exact.
                    let t = p + (&two_delta - &fp) * (q - p) / (&fq - &fp);
                    crossings.push(t);
                }
            }
            crossings.sort();
            crossings.dedup();
            for t in crossings {
                debug_assert_eq!(dist_at(&t), two_delta);
                let value = (Rational::one() - &t) * &c[i] + &t * &c[j];
                let mut point = vec![Rational::zero(); n];
                point[i] = Rational::one() - &t;
                point[j] = t;
                consider(value, point);
            }
        }
    }

    match best {
        Some((value, point)) => Ok(FarBest {
            value,
            witness: MixedStrategy::new(point).expect("candidate points lie on the simplex"),
        }),
        None => Err(Error::FarInfeasible),
    }
}

/// Best feasible deviation gain for `player` over strategies 2δ-far from the
/// opponent's strategy, clamped below at 0. An empty feasible set (the
/// opponent is within 2δ of every point of the simplex, possible only with a
/// full-support opponent) is reported via `empty_feasible` rather than as an
/// error, matching the disjoint convention.
pub fn constrained_regret_far(
    game: &BimatrixGame,
    profile: &Profile,
    delta: &Rational,
    player: Player,
) -> Result<ConstrainedRegret> {
    let opponent = profile.strategy(player.other());
    let payoffs = game.pure_payoffs_against(player, opponent)?;
    match max_payoff_far(&payoffs, opponent, delta) {
        Err(Error::FarInfeasible) => Ok(ConstrainedRegret {
            regret: Rational::zero(),
            witness: None,
            empty_feasible: true,
        }),
        Err(e) => Err(e),
        Ok(best) => {
            let current = game.expected_payoff(profile, player)?;
            let gain = &best.value - &current;
            if gain.is_positive() {
                Ok(ConstrainedRegret {
                    regret: gain,
                    witness: Some(Witness::Mixed(best.witness.probs().to_vec())),
                    empty_feasible: false,
                })
            } else {
                Ok(ConstrainedRegret {
                    regret: Rational::zero(),
                    witness: None,
                    empty_feasible: false,
                })
            }
        }
    }
}

/// Brute-force oracle over the resolution-`N` grid of the simplex, in exact
/// integer arithmetic. Test-only cross-check for [`max_payoff_far`]: returns
/// the best grid point with ||x − y||₁ ≥ 2δ, or `None` when no grid point is
/// feasible.
pub mod grid {
    use super::*;
    use num::bigint::BigInt;
    use num::Integer;

    pub fn max_payoff_far_grid(
        c: &[Rational],
        y: &MixedStrategy,
        delta: &Rational,
        resolution: usize,
    ) -> Option<(Rational, MixedStrategy)> {
        let n = y.dim();
        assert_eq!(c.len(), n);
        let nn = resolution as i128;

        let lcm_of = |vals: &mut dyn Iterator<Item = BigInt>| -> BigInt {
            vals.fold(BigInt::from(1), |acc, d| acc.lcm(&d))
        };
        let lc = lcm_of(&mut c.iter().map(|v| v.denom().clone()));
        let ly = lcm_of(
            &mut y
                .probs()
                .iter()
                .map(|v| v.denom().clone())
                .chain(std::iter::once(delta.denom().clone())),
        );
        let to_i128 = |b: BigInt| -> i128 { i128::try_from(b).expect("grid oracle overflow") };

        // Integer views: value numerators a_i = c_i·lc, anchor w_i = y_i·ly·N,
        // threshold T = 2δ·ly·N. A grid point k/N is feasible iff
        // Σ|k_i·ly − w_i| ≥ T and its value numerator is Σ k_i·a_i.
        let a: Vec<i128> = c.iter().map(|v| to_i128(v.numer() * &lc / v.denom())).collect();
        let w: Vec<i128> = y
            .probs()
            .iter()
            .map(|v| to_i128(v.numer() * &ly / v.denom()) * nn)
            .collect();
        let lyi = to_i128(ly.clone());
        let t_threshold = to_i128((delta.numer() * &ly / delta.denom()) * BigInt::from(2)) * nn;

        struct Scan<'a> {
            n: usize,
            lyi: i128,
            w: &'a [i128],
            a: &'a [i128],
            threshold: i128,
            point: Vec<usize>,
            best: Option<(i128, Vec<usize>)>,
        }
        impl Scan<'_> {
            fn recurse(&mut self, depth: usize, remaining: usize, dist: i128, val: i128) {
                if depth == self.n - 1 {
                    let k = remaining as i128;
                    let d = dist + (k * self.lyi - self.w[depth]).abs();
                    let v = val + k * self.a[depth];
                    if d >= self.threshold {
                        match &self.best {
                            Some((bv, _)) if *bv >= v => {}
                            _ => {
                                self.point[depth] = remaining;
                                self.best = Some((v, self.point.clone()));
                            }
                        }
                    }
                    return;
                }
                for k in 0..=remaining {
                    self.point[depth] = k;
                    let ki = k as i128;
                    self.recurse(
                        depth + 1,
                        remaining - k,
                        dist + (ki * self.lyi - self.w[depth]).abs(),
                        val + ki * self.a[depth],
                    );
                }
            }
        }
        let mut scan = Scan {
            n,
            lyi,
            w: &w,
            a: &a,
            threshold: t_threshold,
            point: vec![0usize; n],
            best: None,
        };
        scan.recurse(0, resolution, 0, 0);
        let best = scan.best;

        best.map(|(v, ks)| {
            let value = Rational::new(BigInt::from(v), BigInt::from(nn) * &lc);
            let probs = ks
                .iter()
                .map(|k| Rational::new(BigInt::from(*k as i64), BigInt::from(nn)))
                .collect();
            (value, MixedStrategy::new(probs).unwrap())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games;
    use crate::rational::{int, rat};

    fn strat(parts: &[(i64, i64)]) -> MixedStrategy {
        MixedStrategy::new(parts.iter().map(|(n, d)| rat(*n, *d)).collect()).unwrap()
    }

    fn pure_profile(n: usize, i: usize, j: usize) -> Profile {
        Profile::new(MixedStrategy::pure(n, i).unwrap(), MixedStrategy::pure(n, j).unwrap()).unwrap()
    }

    #[test]
    fn regret_rps_uniform_is_zero() {
        let g = games::rock_paper_scissors();
        let p = Profile::new(MixedStrategy::uniform(3), MixedStrategy::uniform(3)).unwrap();
        assert_eq!(regret(&g, &p, Player::Row).unwrap(), int(0));
        assert_eq!(regret(&g, &p, Player::Col).unwrap(), int(0));
    }

    #[test]
    fn regret_no_disjoint_example() {
        let g = games::no_disjoint_example();
        let p = pure_profile(2, 0, 1);
        let (r, w) = regret_with_witness(&g, &p, Player::Col).unwrap();
        assert_eq!(r, int(1));
        assert_eq!(w, 0);
        assert!(!is_eps_nash(&g, &p, &rat(1, 2)).unwrap());

        // (e₂, e₂) is exact: every deviation pays 0.
        let q = pure_profile(2, 1, 1);
        assert!(is_eps_nash(&g, &q, &int(0)).unwrap());
    }

    #[test]
    fn regret_constant_game_is_zero() {
        let g = BimatrixGame::from_int_matrices(&[vec![3, 3], vec![3, 3]], &[vec![3, 3], vec![3, 3]])
            .unwrap();
        let p = Profile::new(strat(&[(1, 4), (3, 4)]), strat(&[(1, 2), (1, 2)])).unwrap();
        assert_eq!(regret(&g, &p, Player::Row).unwrap(), int(0));
        assert_eq!(regret(&g, &p, Player::Col).unwrap(), int(0));
    }

    #[test]
    fn constraint_checks() {
        let e0 = MixedStrategy::pure(3, 0).unwrap();
        let e1 = MixedStrategy::pure(3, 1).unwrap();
        let p = Profile::new(e0, e1).unwrap();
        assert!(check_constraint(&p, &ConstraintSpec::Disjoint).unwrap());
        assert!(!check_constraint(&p, &ConstraintSpec::Partition).unwrap());

        let u = Profile::new(MixedStrategy::uniform(3), MixedStrategy::uniform(3)).unwrap();
        assert!(!check_constraint(&u, &ConstraintSpec::Disjoint).unwrap());

        let far = Profile::new(strat(&[(2, 3), (1, 3)]), strat(&[(1, 3), (2, 3)])).unwrap();
        assert!(check_constraint(&far, &ConstraintSpec::Far(rat(1, 3))).unwrap());
        assert!(!check_constraint(&far, &ConstraintSpec::Far(rat(1, 2))).unwrap());

        // 2×2 partition: disjoint pure supports cover the strategy set.
        let q = Profile::new(MixedStrategy::pure(2, 0).unwrap(), MixedStrategy::pure(2, 1).unwrap())
            .unwrap();
        assert!(check_constraint(&q, &ConstraintSpec::Partition).unwrap());

        assert!(check_constraint(&far, &ConstraintSpec::Major(rat(1, 4))).unwrap());
        assert!(!check_constraint(&far, &ConstraintSpec::Major(rat(1, 3))).unwrap());

        assert!(check_constraint(&p, &ConstraintSpec::SemiDisjoint(int(10))).unwrap());
        assert!(!check_constraint(&u, &ConstraintSpec::SemiDisjoint(int(10))).unwrap());
        assert!(check_constraint(&u, &ConstraintSpec::SemiDisjoint(int(2))).unwrap());

        assert!(check_constraint(&p, &ConstraintSpec::Far(int(2))).is_err());
        assert!(check_constraint(&p, &ConstraintSpec::Major(int(1))).is_err());
        assert!(check_constraint(&p, &ConstraintSpec::SemiDisjoint(int(0))).is_err());
    }

    #[test]
    fn semi_disjoint_implies_far_via_identity() {
        // Σ_t min(x_t, y_t) < n/M forces ||x−y||₁ > 2(1 − n/M).
        let x = strat(&[(99, 100), (1, 100), (0, 1)]);
        let y = strat(&[(1, 200), (0, 1), (199, 200)]);
        let m = int(100);
        let p = Profile::new(x, y).unwrap();
        assert!(check_constraint(&p, &ConstraintSpec::SemiDisjoint(m)).unwrap());
        let delta = int(1) - rat(3, 100);
        assert!(check_constraint(&p, &ConstraintSpec::Far(delta)).unwrap());
    }

    #[test]
    fn disjoint_regret_examples() {
        let g = games::rock_paper_scissors();
        // Row on rock, column on (0, 99/100, 1/100): the column's feasible
        // deviations are paper and scissors; paper pays 1 vs the current
        // 98/100, so the exact constrained regret is 2/100.
        let p = Profile::new(
            MixedStrategy::pure(3, 0).unwrap(),
            strat(&[(0, 1), (99, 100), (1, 100)]),
        )
        .unwrap();
        let r = constrained_regret_disjoint(&g, &p, Player::Col).unwrap();
        assert_eq!(r.regret, rat(2, 100));
        assert_eq!(r.witness, Some(Witness::Pure(1)));
        assert!(!r.empty_feasible);

        // The reversed roles from the greedy construction: column pure on
        // rock, row on (0, 1−ε, ε). The column's only feasible deviation is
        // rock itself, so its constrained regret is exactly 0.
        let q = Profile::new(
            strat(&[(0, 1), (99, 100), (1, 100)]),
            MixedStrategy::pure(3, 0).unwrap(),
        )
        .unwrap();
        let r = constrained_regret_disjoint(&g, &q, Player::Col).unwrap();
        assert_eq!(r.regret, int(0));
        assert!(!r.empty_feasible);

        // Full-support opponent: empty feasible set.
        let u = Profile::new(MixedStrategy::uniform(3), MixedStrategy::uniform(3)).unwrap();
        let r = constrained_regret_disjoint(&g, &u, Player::Row).unwrap();
        assert!(r.empty_feasible);
        assert_eq!(r.regret, int(0));
    }

    #[test]
    fn disjoint_regret_no_disjoint_example() {
        let g = games::no_disjoint_example();
        let p = pure_profile(2, 0, 1);
        let r = constrained_regret_disjoint(&g, &p, Player::Row).unwrap();
        assert_eq!(r.regret, int(0));
    }

    #[test]
    fn far_best_response_examples() {
        // δ = 0: the constraint is vacuous and the best vertex wins.
        let y = strat(&[(1, 2), (1, 2)]);
        let c = vec![int(3), int(1)];
        let b = max_payoff_far(&c, &y, &int(0)).unwrap();
        assert_eq!(b.value, int(3));
        assert_eq!(b.witness, MixedStrategy::pure(2, 0).unwrap());

        // n = 2, y = (1, 0), δ = 1/2, c = (1, 0) → value 1/2 at (1/2, 1/2).
        let y = strat(&[(1, 1), (0, 1)]);
        let c = vec![int(1), int(0)];
        let b = max_payoff_far(&c, &y, &rat(1, 2)).unwrap();
        assert_eq!(b.value, rat(1, 2));
        assert_eq!(b.witness, strat(&[(1, 2), (1, 2)]));

        // Constant objective: any feasible candidate attains it.
        let c = vec![int(5), int(5), int(5)];
        let y = MixedStrategy::uniform(3);
        let b = max_payoff_far(&c, &y, &rat(1, 3)).unwrap();
        assert_eq!(b.value, int(5));

        // Full-support anchor with δ beyond max_i(1 − y_i): infeasible.
        assert!(matches!(
            max_payoff_far(&c, &y, &int(1)),
            Err(Error::FarInfeasible)
        ));
    }

    #[test]
    fn far_regret_delta_zero_matches_regret() {
        let g = games::tax_audit(10);
        let p = Profile::new(strat(&[(1, 4), (3, 4)]), strat(&[(1, 2), (1, 2)])).unwrap();
        for player in [Player::Row, Player::Col] {
            let plain = regret(&g, &p, player).unwrap();
            let far = constrained_regret_far(&g, &p, &int(0), player).unwrap();
            assert_eq!(far.regret, plain);
        }
    }

    #[test]
    fn far_regret_rps_cases() {
        let g = games::rock_paper_scissors();
        // Uniform against uniform at δ = 1: the feasible set is empty
        // because the opponent has full support.
        let u = Profile::new(MixedStrategy::uniform(3), MixedStrategy::uniform(3)).unwrap();
        let r = constrained_regret_far(&g, &u, &int(1), Player::Row).unwrap();
        assert!(r.empty_feasible);

        // A disjoint candidate profile (rock, paper) at δ = 1: the feasible
        // anti-strategy (scissors) beats the current payoff, so the row's
        // constrained regret is strictly positive.
        let p = pure_profile(3, 0, 1);
        let r = constrained_regret_far(&g, &p, &int(1), Player::Row).unwrap();
        assert_eq!(r.regret, int(2));
        assert!(!r.empty_feasible);
    }

    #[test]
    fn grid_oracle_agrees_on_small_instance() {
        let y = strat(&[(1, 1), (0, 1)]);
        let c = vec![int(1), int(0)];
        let delta = rat(1, 2);
        let exact = max_payoff_far(&c, &y, &delta).unwrap();
        let (gv, _) = grid::max_payoff_far_grid(&c, &y, &delta, 200).unwrap();
        assert!(exact.value >= gv);
        assert!(&exact.value - &gv <= rat(1, 200));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_sparse(n: usize) -> impl Strategy<Value = MixedStrategy> {
            prop::collection::vec(0u32..=4, n).prop_map(move |ws| {
                let total: u32 = ws.iter().sum();
                if total == 0 {
                    MixedStrategy::pure(n, 0).unwrap()
                } else {
                    MixedStrategy::new(ws.iter().map(|w| rat(*w as i64, total as i64)).collect())
                        .unwrap()
                }
            })
        }

        proptest! {
            #[test]
            fn constraint_implication_chain(x in arb_sparse(4), y in arb_sparse(4)) {
                let p = Profile::new(x, y).unwrap();
                let partition = check_constraint(&p, &ConstraintSpec::Partition).unwrap();
                let disjoint = check_constraint(&p, &ConstraintSpec::Disjoint).unwrap();
                let far_one = check_constraint(&p, &ConstraintSpec::Far(int(1))).unwrap();
                prop_assert!(!partition || disjoint);
                prop_assert!(!disjoint || far_one);

                let m = int(5);
                let semi = check_constraint(&p, &ConstraintSpec::SemiDisjoint(m)).unwrap();
                let far_semi =
                    check_constraint(&p, &ConstraintSpec::Far(int(1) - rat(4, 5))).unwrap();
                prop_assert!(!semi || far_semi);
            }
        }

        fn arb_strat(n: usize) -> impl Strategy<Value = MixedStrategy> {
            prop::collection::vec(0u32..=10, n).prop_map(move |ws| {
                let total: u32 = ws.iter().sum();
                if total == 0 {
                    MixedStrategy::uniform(n)
                } else {
                    MixedStrategy::new(ws.iter().map(|w| rat(*w as i64, total as i64)).collect())
                        .unwrap()
                }
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn far_value_monotone_in_delta(
                y in arb_strat(3),
                cs in prop::collection::vec(-6i64..=6, 3),
                d1 in 0i64..=10,
                d2 in 0i64..=10,
            ) {
                let (lo, hi) = (d1.min(d2), d1.max(d2));
                let c: Vec<Rational> = cs.iter().map(|v| int(*v)).collect();
                let a = max_payoff_far(&c, &y, &rat(lo, 10));
                let b = max_payoff_far(&c, &y, &rat(hi, 10));
                match (a, b) {
                    (Ok(a), Ok(b)) => prop_assert!(a.value >= b.value),
                    (_, Err(Error::FarInfeasible)) => {}
                    (Err(Error::FarInfeasible), Ok(_)) => {
                        prop_assert!(false, "feasibility must be monotone in δ");
                    }
                    _ => prop_assert!(false, "unexpected error"),
                }
            }

            #[test]
            fn far_value_dominates_grid(
                y in arb_strat(3),
                cs in prop::collection::vec(-6i64..=6, 3),
                d in 0i64..=20,
            ) {
                let c: Vec<Rational> = cs.iter().map(|v| int(*v)).collect();
                let delta = rat(d, 20);
                let exact = max_payoff_far(&c, &y, &delta);
                let gridded = grid::max_payoff_far_grid(&c, &y, &delta, 50);
                match (exact, gridded) {
                    (Ok(e), Some((gv, _))) => prop_assert!(e.value >= gv),
                    (Err(Error::FarInfeasible), None) => {}
                    (Err(Error::FarInfeasible), Some(_)) => {
                        prop_assert!(false, "grid found a point the exact method called infeasible")
                    }
                    (Ok(_), None) => {} // grid may miss a thin feasible sliver
                    _ => prop_assert!(false, "unexpected error"),
                }
            }
        }
    }
}
