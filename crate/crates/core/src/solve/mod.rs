//! Exact equilibrium enumeration by support enumeration.
//!
//! For each candidate support pair (I, J) the side systems are linear: the
//! row mix over I must make the column indifferent across J, and vice versa.
//! A uniquely solvable side is accepted after strict-positivity and
//! no-profitable-deviation checks. Rank-deficient sides describe a solution
//! continuum; a single representative witness is then recovered by an exact
//! max-min linear program over the solution polytope (including the
//! deviation inequalities) and flagged as degenerate.
//!
//! Support pairs are visited in order of (|I| + |J|, |I|, lexicographic I,
//! lexicographic J), so output order is deterministic. Pairs containing a
//! strategy strictly dominated by another pure strategy cannot carry a Nash
//! equilibrium and are skipped during Nash enumeration.

pub mod linsys;
pub mod lp;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{BimatrixGame, MixedStrategy, Player, Profile, SupportSet};
use crate::rational::Rational;
use crate::verify::{self, ConstraintSpec};

/// Hard cap on unrestricted exhaustive enumeration; 2^(2n) support pairs.
pub const EXHAUSTIVE_LIMIT: usize = 14;

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    pub max_support: Option<usize>,
    /// Explicit support pairs to visit instead of the full lattice. The
    /// search is reported as non-exhaustive when set.
    pub support_pairs: Option<Vec<(SupportSet, SupportSet)>>,
    /// Descriptive name for `support_pairs` recorded in the result.
    pub filter_name: Option<String>,
    /// Stop after this many equilibria have been found.
    pub max_equilibria: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchBoundsRecord {
    pub max_support: Option<usize>,
    pub filter: String,
    pub max_equilibria: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium {
    pub profile: Profile,
    /// True when the support pair admits a continuum of solutions and the
    /// profile is one representative of it.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumSet {
    pub equilibria: Vec<Equilibrium>,
    pub exhaustive: bool,
    pub search_bounds: SearchBoundsRecord,
}

impl EquilibriumSet {
    pub fn profiles(&self) -> impl Iterator<Item = &Profile> {
        self.equilibria.iter().map(|e| &e.profile)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Pure strategies strictly dominated by another pure strategy of the same
/// player. These can never be best responses, so no Nash equilibrium puts
/// mass on them.
fn strictly_dominated(game: &BimatrixGame, player: Player) -> Vec<bool> {
    let n = game.n();
    let m = game.matrix(player);
    let value = |own: usize, other: usize| match player {
        Player::Row => &m[own][other],
        Player::Col => &m[other][own],
    };
    let mut dominated = vec![false; n];
    for i in 0..n {
        'cand: for k in 0..n {
            if k == i {
                continue;
            }
            for s in 0..n {
                if value(k, s) <= value(i, s) {
                    continue 'cand;
                }
            }
            dominated[i] = true;
            break;
        }
    }
    dominated
}

/// Finds this side's mix over `weights_on` that makes the opponent
/// indifferent across `equal_over` and weakly prefers `equal_over` to every
/// strategy in `le_over`, with strictly positive weights. `value(k, s)` is
/// the opponent's payoff from pure `s` when this side plays pure `k`.
fn side_witness<F>(
    value: F,
    weights_on: &[usize],
    equal_over: &[usize],
    le_over: &[usize],
    n: usize,
) -> Option<(Vec<Rational>, bool)>
where
    F: Fn(usize, usize) -> Rational,
{
    let k = weights_on.len();
    let ref_s = equal_over[0];

    let mut eq_rows: Vec<Vec<Rational>> = Vec::with_capacity(equal_over.len());
    let mut rhs: Vec<Rational> = Vec::with_capacity(equal_over.len());
    eq_rows.push(vec![Rational::one(); k]);
    rhs.push(Rational::one());
    for &s in &equal_over[1..] {
        eq_rows.push(
            weights_on
                .iter()
                .map(|&i| value(i, s) - value(i, ref_s))
                .collect(),
        );
        rhs.push(Rational::zero());
    }

    let expand = |z: &[Rational]| -> Vec<Rational> {
        let mut full = vec![Rational::zero(); n];
        for (idx, &i) in weights_on.iter().enumerate() {
            full[i] = z[idx].clone();
        }
        full
    };

    match linsys::solve(&eq_rows, &rhs) {
        linsys::LinSolution::Inconsistent => None,
        linsys::LinSolution::Unique(z) => {
            if !z.iter().all(|v| v.is_positive()) {
                return None;
            }
            let base: Rational = weights_on
                .iter()
                .zip(&z)
                .map(|(&i, w)| w * value(i, ref_s))
                .sum();
            for &s in le_over {
                let v: Rational = weights_on
                    .iter()
                    .zip(&z)
                    .map(|(&i, w)| w * value(i, s))
                    .sum();
                if v > base {
                    return None;
                }
            }
            Some((expand(&z), false))
        }
        linsys::LinSolution::Underdetermined { .. } => {
            // Witness LP over [z.., t, slack.., surplus..]: maximize the
            // minimum weight subject to the indifference equalities and the
            // deviation inequalities.
            let nvars = k + 1 + k + le_over.len();
            let mut a: Vec<Vec<Rational>> = Vec::new();
            let mut b: Vec<Rational> = Vec::new();
            for (row, r) in eq_rows.iter().zip(&rhs) {
                let mut full = vec![Rational::zero(); nvars];
                full[..k].clone_from_slice(row);
                a.push(full);
                b.push(r.clone());
            }
            for idx in 0..k {
                let mut row = vec![Rational::zero(); nvars];
                row[idx] = Rational::one();
                row[k] = -Rational::one();
                row[k + 1 + idx] = -Rational::one();
                a.push(row);
                b.push(Rational::zero());
            }
            for (le_idx, &s) in le_over.iter().enumerate() {
                let mut row = vec![Rational::zero(); nvars];
                for (idx, &i) in weights_on.iter().enumerate() {
                    row[idx] = value(i, s) - value(i, ref_s);
                }
                row[k + 1 + k + le_idx] = Rational::one();
                a.push(row);
                b.push(Rational::zero());
            }
            let mut c = vec![Rational::zero(); nvars];
            c[k] = Rational::one();
            match lp::maximize(&a, &b, &c) {
                lp::LpOutcome::Optimal { solution, value } if value.is_positive() => {
                    Some((expand(&solution[..k]), true))
                }
                _ => None,
            }
        }
    }
}

struct PairSearch<'a> {
    game: &'a BimatrixGame,
    /// Opponent deviation targets excluded from the inequality checks, on
    /// top of the indifference set itself (used by the constrained-disjoint
    /// search, where deviations inside this side's support are infeasible).
    exclude_own_support: bool,
}

impl<'a> PairSearch<'a> {
    fn candidate(&self, i_set: &[usize], j_set: &[usize]) -> Option<(Profile, bool)> {
        let n = self.game.n();
        let row_m = self.game.matrix(Player::Row);
        let col_m = self.game.matrix(Player::Col);

        let in_set = |set: &[usize], s: usize| set.binary_search(&s).is_ok();
        let le_x: Vec<usize> = (0..n)
            .filter(|&s| !in_set(j_set, s) && !(self.exclude_own_support && in_set(i_set, s)))
            .collect();
        let le_y: Vec<usize> = (0..n)
            .filter(|&s| !in_set(i_set, s) && !(self.exclude_own_support && in_set(j_set, s)))
            .collect();

        let (x, xdeg) = side_witness(|i, s| col_m[i][s].clone(), i_set, j_set, &le_x, n)?;
        let (y, ydeg) = side_witness(|j, s| row_m[s][j].clone(), j_set, i_set, &le_y, n)?;

        let profile = Profile::new(
            MixedStrategy::new(x).expect("side witness is a probability vector"),
            MixedStrategy::new(y).expect("side witness is a probability vector"),
        )
        .expect("dimensions agree");
        Some((profile, xdeg || ydeg))
    }
}

fn run_enumeration(
    game: &BimatrixGame,
    opts: &EnumerationOptions,
    disjoint_only: bool,
) -> Result<EquilibriumSet> {
    let n = game.n();
    let explicit = opts.support_pairs.is_some();
    if !explicit && n > EXHAUSTIVE_LIMIT && opts.max_support.is_none_or(|k| k > EXHAUSTIVE_LIMIT) {
        return Err(Error::ParameterOutOfRange(format!(
            "exhaustive support enumeration is capped at n = {EXHAUSTIVE_LIMIT}; \
             supply a support bound or an explicit support filter for n = {n}"
        )));
    }

    let search = PairSearch {
        game,
        exclude_own_support: disjoint_only,
    };

    let (dom_rows, dom_cols) = if disjoint_only {
        (vec![false; n], vec![false; n])
    } else {
        (
            strictly_dominated(game, Player::Row),
            strictly_dominated(game, Player::Col),
        )
    };

    let mut equilibria: Vec<Equilibrium> = Vec::new();
    let mut truncated = false;

    let visit = |i_set: &[usize], j_set: &[usize], equilibria: &mut Vec<Equilibrium>| -> bool {
        if i_set.iter().any(|&i| dom_rows[i]) || j_set.iter().any(|&j| dom_cols[j]) {
            return true;
        }
        if let Some((profile, degenerate)) = search.candidate(i_set, j_set) {
            let sound = if disjoint_only {
                let row = verify::constrained_regret_disjoint(game, &profile, Player::Row)
                    .expect("dimensions agree");
                let col = verify::constrained_regret_disjoint(game, &profile, Player::Col)
                    .expect("dimensions agree");
                row.regret.is_zero() && col.regret.is_zero()
            } else {
                verify::regret(game, &profile, Player::Row).expect("dimensions agree").is_zero()
                    && verify::regret(game, &profile, Player::Col)
                        .expect("dimensions agree")
                        .is_zero()
            };
            debug_assert!(sound, "support candidate failed re-verification");
            if sound {
                equilibria.push(Equilibrium { profile, degenerate });
                if let Some(cap) = opts.max_equilibria {
                    if equilibria.len() >= cap {
                        return false;
                    }
                }
            }
        }
        true
    };

    if let Some(pairs) = &opts.support_pairs {
        'outer: for (i_set, j_set) in pairs {
            if disjoint_only && !i_set.is_disjoint(j_set) {
                continue;
            }
            if i_set.is_empty() || j_set.is_empty() {
                continue;
            }
            if !visit(i_set.indices(), j_set.indices(), &mut equilibria) {
                truncated = true;
                break 'outer;
            }
        }
    } else {
        let cap = opts.max_support.unwrap_or(n).min(n);
        let by_size: Vec<Vec<Vec<usize>>> = (0..=cap).map(|k| combinations(n, k)).collect();
        'outer: for sum in 2..=(2 * cap) {
            for a in 1..=cap.min(sum.saturating_sub(1)) {
                let b = sum - a;
                if b == 0 || b > cap {
                    continue;
                }
                for i_set in &by_size[a] {
                    for j_set in &by_size[b] {
                        if disjoint_only && i_set.iter().any(|i| j_set.contains(i)) {
                            continue;
                        }
                        if !visit(i_set, j_set, &mut equilibria) {
                            truncated = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    let exhaustive = !explicit && !truncated && opts.max_support.is_none_or(|k| k >= n);
    Ok(EquilibriumSet {
        equilibria,
        exhaustive,
        search_bounds: SearchBoundsRecord {
            max_support: opts.max_support,
            filter: opts
                .filter_name
                .clone()
                .unwrap_or_else(|| if explicit { "explicit".into() } else { "none".into() }),
            max_equilibria: opts.max_equilibria,
        },
    })
}

/// All exact Nash equilibria found over the admissible support pairs. An
/// exhaustive run over an unrestricted lattice returns at least one
/// equilibrium.
pub fn enumerate_nash(game: &BimatrixGame, opts: &EnumerationOptions) -> Result<EquilibriumSet> {
    run_enumeration(game, opts, false)
}

/// First equilibrium in the canonical search order, if any.
pub fn first_nash(game: &BimatrixGame) -> Result<Option<Profile>> {
    let opts = EnumerationOptions {
        max_equilibria: Some(1),
        ..Default::default()
    };
    Ok(run_enumeration(game, &opts, false)?
        .equilibria
        .into_iter()
        .next()
        .map(|e| e.profile))
}

/// Solves the two full-support indifference systems; returns the profile
/// when both solutions are strictly positive and normalized. With full
/// supports every pure strategy is indifferent, so no further check is
/// needed.
pub fn fully_mixed_nash(game: &BimatrixGame) -> Result<Option<Profile>> {
    let n = game.n();
    let full: Vec<usize> = (0..n).collect();
    let row_m = game.matrix(Player::Row);
    let col_m = game.matrix(Player::Col);
    let x = side_witness(|i, s| col_m[i][s].clone(), &full, &full, &[], n);
    let y = side_witness(|j, s| row_m[s][j].clone(), &full, &full, &[], n);
    match (x, y) {
        (Some((x, _)), Some((y, _))) => Ok(Some(Profile::new(
            MixedStrategy::new(x).expect("witness is a probability vector"),
            MixedStrategy::new(y).expect("witness is a probability vector"),
        )?)),
        _ => Ok(None),
    }
}

/// Enumerates Nash equilibria and keeps those satisfying `spec`. Answers
/// decision questions such as "does the game have a disjoint Nash
/// equilibrium" (nonempty + exhaustive).
pub fn filter_nash_by_constraint(
    game: &BimatrixGame,
    spec: &ConstraintSpec,
    opts: &EnumerationOptions,
) -> Result<EquilibriumSet> {
    spec.validate()?;
    let mut set = enumerate_nash(game, opts)?;
    let mut kept = Vec::new();
    for e in set.equilibria {
        if verify::check_constraint(&e.profile, spec)? {
            kept.push(e);
        }
    }
    set.equilibria = kept;
    Ok(set)
}

/// Enumerates exact constrained disjoint equilibria: disjoint support pairs
/// where neither player can gain by any pure deviation outside the
/// opponent's support. These need not be Nash equilibria of the
/// unconstrained game.
pub fn enumerate_constrained_disjoint(
    game: &BimatrixGame,
    opts: &EnumerationOptions,
) -> Result<EquilibriumSet> {
    run_enumeration(game, opts, true)
}
