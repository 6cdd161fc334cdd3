//! Generators for the reduction games.
//!
//! All six games share one payoff rule set over strategy roles:
//!
//! * literal vs literal pays n−1 to both, or n−4 when the two literals are
//!   negations of one another;
//! * a variable (clause) pays n against a literal of a different variable
//!   (a literal outside the clause) and 0 otherwise, and n−4 against
//!   variables and clauses; literals pay n−4 against variables and clauses;
//! * an escape block pays n−1 against everything outside the block and 0 to
//!   the bystander; inside the block it is either a single strategy worth
//!   2n to both on the diagonal, or a cycle where matched indices pay a
//!   base value and the successor index pays twice the base;
//! * playing a strategy owned by the other player pays −2n regardless of
//!   the opponent, while the bystander receives 0 (n−1 when the bystander
//!   strategy is in the escape block).
//!
//! The generators differ only in which blocks exist and which are
//! duplicated per player.

use num::{One, Signed, Zero};
use rand::SeedableRng;

use super::{default_eps, CnfFormula, ReductionGame, ReductionParams, Role, RoleOwner};
use crate::error::{Error, Result};
use crate::game::{BimatrixGame, Player};
use crate::rational::{int, Rational};

#[derive(Debug, Clone)]
enum FBlock {
    None,
    Single { both: Rational },
    Cycle { len: usize, base: Rational },
}

fn rule_payoffs(
    n: i64,
    phi: &CnfFormula,
    fblock: &FBlock,
    row: &Role,
    col: &Role,
) -> (Rational, Rational) {
    let punish = int(-2 * n);
    let guarantee = int(n - 1);

    let row_punished = !row.owner().row_can_play();
    let col_punished = !col.owner().col_can_play();

    let u1 = if row_punished {
        punish.clone()
    } else if col_punished {
        if matches!(row, Role::F { .. }) {
            guarantee.clone()
        } else {
            Rational::zero()
        }
    } else {
        feasible_value(n, phi, fblock, row, col, Player::Row)
    };
    let u2 = if col_punished {
        punish
    } else if row_punished {
        if matches!(col, Role::F { .. }) {
            guarantee
        } else {
            Rational::zero()
        }
    } else {
        feasible_value(n, phi, fblock, row, col, Player::Col)
    };
    (u1, u2)
}

/// Payoff to `player` when both strategies are on their feasible side.
fn feasible_value(
    n: i64,
    phi: &CnfFormula,
    fblock: &FBlock,
    row: &Role,
    col: &Role,
    player: Player,
) -> Rational {
    let guarantee = &int(n - 1);
    let mismatch = &int(n - 4);
    let var_of = |lit: i32| lit.unsigned_abs() as usize;
    let in_clause = |idx: usize, lit: i32| phi.clauses()[idx].contains(&lit);
    let reward = int(n);

    match (row, col) {
        (Role::F { index: i, .. }, Role::F { index: j, .. }) => match fblock {
            FBlock::None => unreachable!("no escape block in this game"),
            FBlock::Single { both } => both.clone(),
            FBlock::Cycle { len, base } => {
                let (own, other) = match player {
                    Player::Row => (*i, *j),
                    Player::Col => (*j, *i),
                };
                if own == other {
                    base.clone()
                } else if own == (other + 1) % len {
                    base * int(2)
                } else {
                    Rational::zero()
                }
            }
        },
        (Role::F { .. }, _) => match player {
            Player::Row => guarantee.clone(),
            Player::Col => Rational::zero(),
        },
        (_, Role::F { .. }) => match player {
            Player::Row => Rational::zero(),
            Player::Col => guarantee.clone(),
        },
        (Role::Literal { literal: a, .. }, Role::Literal { literal: b, .. }) => {
            if *a == -*b {
                mismatch.clone()
            } else {
                guarantee.clone()
            }
        }
        (Role::Literal { literal, .. }, Role::Variable { var, .. }) => match player {
            Player::Row => mismatch.clone(),
            Player::Col => {
                if var_of(*literal) != *var {
                    reward
                } else {
                    Rational::zero()
                }
            }
        },
        (Role::Literal { literal, .. }, Role::Clause { index, .. }) => match player {
            Player::Row => mismatch.clone(),
            Player::Col => {
                if in_clause(*index, *literal) {
                    Rational::zero()
                } else {
                    reward
                }
            }
        },
        (Role::Variable { var, .. }, Role::Literal { literal, .. }) => match player {
            Player::Row => {
                if var_of(*literal) != *var {
                    reward
                } else {
                    Rational::zero()
                }
            }
            Player::Col => mismatch.clone(),
        },
        (Role::Clause { index, .. }, Role::Literal { literal, .. }) => match player {
            Player::Row => {
                if in_clause(*index, *literal) {
                    Rational::zero()
                } else {
                    reward
                }
            }
            Player::Col => mismatch.clone(),
        },
        _ => mismatch.clone(),
    }
}

fn lit_label(lit: i32) -> String {
    if lit > 0 {
        format!("x{lit}")
    } else {
        format!("-x{}", -lit)
    }
}

fn owner_suffix(owner: RoleOwner) -> &'static str {
    match owner {
        RoleOwner::Shared => "",
        RoleOwner::Row => "#1",
        RoleOwner::Col => "#2",
    }
}

struct Builder {
    roles: Vec<Role>,
    labels: Vec<String>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            roles: Vec::new(),
            labels: Vec::new(),
        }
    }

    fn literal(&mut self, lit: i32, owner: RoleOwner) {
        self.roles.push(Role::Literal { literal: lit, owner });
        self.labels.push(format!("{}{}", lit_label(lit), owner_suffix(owner)));
    }

    fn literal_copy(&mut self, lit: i32, copy: usize, owner: RoleOwner) {
        self.roles.push(Role::Literal { literal: lit, owner });
        self.labels
            .push(format!("{}@{copy}{}", lit_label(lit), owner_suffix(owner)));
    }

    fn variables(&mut self, n: usize, owner: RoleOwner) {
        for v in 1..=n {
            self.roles.push(Role::Variable { var: v, owner });
            self.labels.push(format!("v{v}{}", owner_suffix(owner)));
        }
    }

    fn clauses(&mut self, m: usize, owner: RoleOwner) {
        for i in 0..m {
            self.roles.push(Role::Clause { index: i, owner });
            self.labels.push(format!("c{}{}", i + 1, owner_suffix(owner)));
        }
    }

    fn escape(&mut self, count: usize, owner: RoleOwner) {
        for i in 0..count {
            self.roles.push(Role::F { index: i, owner });
            let name = if count == 1 && owner == RoleOwner::Shared {
                "f".to_string()
            } else {
                format!("f{}{}", i + 1, owner_suffix(owner))
            };
            self.labels.push(name);
        }
    }
}

fn clause_length_warnings(phi: &CnfFormula) -> Vec<String> {
    phi.clauses()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() != 3)
        .map(|(i, c)| {
            format!(
                "clause {} has {} literals; the hardness analyses assume exactly 3",
                i + 1,
                c.len()
            )
        })
        .collect()
}

fn finish(
    phi: &CnfFormula,
    builder: Builder,
    fblock: FBlock,
    generator: &str,
    params: ReductionParams,
    mut warnings: Vec<String>,
) -> Result<ReductionGame> {
    warnings.extend(clause_length_warnings(phi));
    let n = phi.num_vars() as i64;
    let size = builder.roles.len();
    let mut row = vec![vec![Rational::zero(); size]; size];
    let mut col = vec![vec![Rational::zero(); size]; size];
    for a in 0..size {
        for b in 0..size {
            let (u1, u2) = rule_payoffs(n, phi, &fblock, &builder.roles[a], &builder.roles[b]);
            row[a][b] = u1;
            col[a][b] = u2;
        }
    }
    let metadata = super::meta::embed(generator, &builder.roles, &params, &warnings);
    let game = BimatrixGame::new(builder.labels, row, col, Some(metadata))?;
    Ok(ReductionGame {
        game,
        roles: builder.roles,
        params,
        generator: generator.to_string(),
        warnings,
    })
}

fn resolve_eps(phi: &CnfFormula, eps: Option<Rational>) -> Result<Rational> {
    let eps = eps.unwrap_or_else(|| default_eps(phi.num_vars()));
    if !eps.is_positive() {
        return Err(Error::ParameterOutOfRange(format!("ε must be > 0, got {eps}")));
    }
    Ok(eps)
}

/// Symmetric base game on S = L ∪ V ∪ C (3n + m strategies).
pub fn gen_sv(phi: &CnfFormula, eps: Option<Rational>) -> Result<ReductionGame> {
    let n = phi.num_vars();
    let eps = resolve_eps(phi, eps)?;
    let mut b = Builder::new();
    for v in 1..=n {
        b.literal(v as i32, RoleOwner::Shared);
        b.literal(-(v as i32), RoleOwner::Shared);
    }
    b.variables(n, RoleOwner::Shared);
    b.clauses(phi.num_clauses(), RoleOwner::Shared);
    let rg = finish(phi, b, FBlock::None, "sv", ReductionParams::bare(eps), Vec::new())?;
    debug_assert!(is_symmetric(&rg.game));
    Ok(rg)
}

/// True when U₁ equals the transpose of U₂.
pub fn is_symmetric(game: &BimatrixGame) -> bool {
    let n = game.n();
    (0..n).all(|i| {
        (0..n).all(|j| game.payoff(Player::Row, i, j) == game.payoff(Player::Col, j, i))
    })
}

/// Per-player literal copies plus a mutual escape strategy:
/// S = L₁ ∪ L₂ ∪ V ∪ C ∪ {f} (5n + m + 1 strategies).
pub fn gen_g(phi: &CnfFormula, eps: Option<Rational>) -> Result<ReductionGame> {
    let n = phi.num_vars();
    let eps = resolve_eps(phi, eps)?;
    let mut b = Builder::new();
    for owner in [RoleOwner::Row, RoleOwner::Col] {
        for v in 1..=n {
            b.literal(v as i32, owner);
            b.literal(-(v as i32), owner);
        }
    }
    b.variables(n, RoleOwner::Shared);
    b.clauses(phi.num_clauses(), RoleOwner::Shared);
    b.escape(1, RoleOwner::Shared);
    finish(
        phi,
        b,
        FBlock::Single { both: int(2 * n as i64) },
        "g",
        ReductionParams::bare(eps),
        Vec::new(),
    )
}

/// Replaces the single escape strategy with a shared c-cycle block paying
/// n²/ε on matched indices and twice that on the successor.
pub fn gen_c(phi: &CnfFormula, c: usize, eps: Option<Rational>) -> Result<ReductionGame> {
    let n = phi.num_vars();
    let eps = resolve_eps(phi, eps)?;
    if c <= n || int(c as i64) * &eps >= Rational::one() {
        return Err(Error::ParameterOutOfRange(format!(
            "cycle length must satisfy n < c < 1/ε (n = {n}, c = {c}, ε = {eps})"
        )));
    }
    let mut b = Builder::new();
    for owner in [RoleOwner::Row, RoleOwner::Col] {
        for v in 1..=n {
            b.literal(v as i32, owner);
            b.literal(-(v as i32), owner);
        }
    }
    b.variables(n, RoleOwner::Shared);
    b.clauses(phi.num_clauses(), RoleOwner::Shared);
    b.escape(c, RoleOwner::Shared);
    let base = int((n * n) as i64) / &eps;
    let mut params = ReductionParams::bare(eps);
    params.c = Some(c);
    finish(phi, b, FBlock::Cycle { len: c, base }, "c", params, Vec::new())
}

/// Duplicates only some variables' literals: the count ⌊i⌋ comes from
/// δ = i·(1/n − 2ε − 1/n²). By default the first ⌊i⌋ variables are
/// duplicated; a seed switches to a seeded random choice.
pub fn gen_h(
    phi: &CnfFormula,
    delta: &Rational,
    eps: Option<Rational>,
    seed: Option<u64>,
) -> Result<ReductionGame> {
    let n = phi.num_vars();
    let eps = resolve_eps(phi, eps)?;
    let n_r = int(n as i64);
    let lower = Rational::one() / &n_r
        - Rational::one() / (&n_r * &n_r)
        - Rational::one() / (&n_r * &n_r * &n_r);
    if delta <= &lower || *delta > Rational::one() {
        return Err(Error::ParameterOutOfRange(format!(
            "δ must lie in (1/n − 1/n² − 1/n³, 1], got {delta}"
        )));
    }
    let unit = Rational::one() / &n_r - int(2) * &eps - Rational::one() / (&n_r * &n_r);
    if !unit.is_positive() {
        return Err(Error::ParameterOutOfRange(format!(
            "per-variable farness 1/n − 2ε − 1/n² is not positive for n = {n}, ε = {eps}"
        )));
    }
    let i_count: usize = {
        let exact = delta / &unit;
        let floored = crate::rational::floor_int(&exact);
        usize::try_from(floored.max(0.into())).unwrap_or(n).min(n)
    };

    let mut warnings = Vec::new();
    let chosen: Vec<usize> = if i_count == 0 {
        warnings.push(
            "duplication count ⌊i⌋ is 0 for these parameters; emitting the shared-literal game"
                .to_string(),
        );
        Vec::new()
    } else if let Some(seed) = seed {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut picked = rand::seq::index::sample(&mut rng, n, i_count).into_vec();
        picked.sort_unstable();
        picked.iter().map(|v| v + 1).collect()
    } else {
        (1..=i_count).collect()
    };

    let mut b = Builder::new();
    for v in 1..=n {
        if !chosen.contains(&v) {
            b.literal(v as i32, RoleOwner::Shared);
            b.literal(-(v as i32), RoleOwner::Shared);
        }
    }
    for owner in [RoleOwner::Row, RoleOwner::Col] {
        for &v in &chosen {
            b.literal(v as i32, owner);
            b.literal(-(v as i32), owner);
        }
    }
    b.variables(n, RoleOwner::Shared);
    b.clauses(phi.num_clauses(), RoleOwner::Shared);
    b.escape(1, RoleOwner::Shared);
    let mut params = ReductionParams::bare(eps);
    params.delta = Some(delta.clone());
    params.i = Some(i_count);
    finish(
        phi,
        b,
        FBlock::Single { both: int(2 * n as i64) },
        "h",
        params,
        warnings,
    )
}

fn copy_bound(n: usize) -> Rational {
    let n_r = int(n as i64);
    Rational::one() / &n_r
        - Rational::one() / (&n_r * &n_r)
        - Rational::one() / (&n_r * &n_r * &n_r)
}

/// D-structure literal blocks for one duplicated variable with d copies:
/// copies 2..=d of both its literals are shared, copy 1 is per-player.
fn d_literals(b: &mut Builder, n: usize, d: usize) {
    for v in 1..=n {
        if v == 1 {
            for j in 2..=d {
                b.literal_copy(1, j, RoleOwner::Shared);
                b.literal_copy(-1, j, RoleOwner::Shared);
            }
        } else {
            b.literal(v as i32, RoleOwner::Shared);
            b.literal(-(v as i32), RoleOwner::Shared);
        }
    }
    for owner in [RoleOwner::Row, RoleOwner::Col] {
        b.literal_copy(1, 1, owner);
        b.literal_copy(-1, 1, owner);
    }
}

/// Narrow-farness game: d copies of the first variable's literals, one of
/// them duplicated per player, so spreading that variable's weight evenly
/// achieves farness 2/(nd) ≥ 2δ.
pub fn gen_d(phi: &CnfFormula, delta: &Rational, eps: Option<Rational>) -> Result<ReductionGame> {
    let n = phi.num_vars();
    let eps = resolve_eps(phi, eps)?;
    let bound = copy_bound(n);
    if !delta.is_positive() || *delta > bound {
        return Err(Error::ParameterOutOfRange(format!(
            "δ must lie in (0, 1/n − 1/n² − 1/n³], got {delta}"
        )));
    }
    let d = usize::try_from(crate::rational::floor_int(&(&bound / delta)))
        .map_err(|_| Error::ParameterOutOfRange("copy count overflows".into()))?;
    debug_assert!(d >= 1);

    let mut b = Builder::new();
    d_literals(&mut b, n, d);
    b.variables(n, RoleOwner::Shared);
    b.clauses(phi.num_clauses(), RoleOwner::Shared);
    b.escape(1, RoleOwner::Shared);
    let mut params = ReductionParams::bare(eps);
    params.delta = Some(delta.clone());
    params.d = Some(d);
    params.i = Some(1);
    finish(
        phi,
        b,
        FBlock::Single { both: int(2 * n as i64) },
        "d",
        params,
        Vec::new(),
    )
}

/// Restricted-far game: the D-structure literals (or, for δ above the
/// single-variable range, whole-variable duplication) combined with
/// per-player variable, clause, and escape-cycle blocks of length
/// c = ⌈d/δ⌉ + 1 paying dn²/(δε) on matched indices.
pub fn gen_r(phi: &CnfFormula, delta: &Rational, eps: Option<Rational>) -> Result<ReductionGame> {
    let n = phi.num_vars();
    let eps = resolve_eps(phi, eps)?;
    if !delta.is_positive() || *delta > Rational::one() {
        return Err(Error::ParameterOutOfRange(format!("δ must lie in (0, 1], got {delta}")));
    }
    let bound = copy_bound(n);

    let mut b = Builder::new();
    let (d, i_count) = if *delta <= bound {
        let d = usize::try_from(crate::rational::floor_int(&(&bound / delta)))
            .map_err(|_| Error::ParameterOutOfRange("copy count overflows".into()))?;
        d_literals(&mut b, n, d);
        (d, 1usize)
    } else {
        let k = usize::try_from(crate::rational::ceil_int(&(delta * int(n as i64))))
            .unwrap_or(n)
            .clamp(1, n);
        for v in (k + 1)..=n {
            b.literal(v as i32, RoleOwner::Shared);
            b.literal(-(v as i32), RoleOwner::Shared);
        }
        for owner in [RoleOwner::Row, RoleOwner::Col] {
            for v in 1..=k {
                b.literal(v as i32, owner);
                b.literal(-(v as i32), owner);
            }
        }
        (1, k)
    };

    let c = usize::try_from(crate::rational::ceil_int(&(int(d as i64) / delta)))
        .map_err(|_| Error::ParameterOutOfRange("cycle length overflows".into()))?
        + 1;
    b.variables(n, RoleOwner::Row);
    b.variables(n, RoleOwner::Col);
    b.clauses(phi.num_clauses(), RoleOwner::Row);
    b.clauses(phi.num_clauses(), RoleOwner::Col);
    b.escape(c, RoleOwner::Row);
    b.escape(c, RoleOwner::Col);

    let base = int((d * n * n) as i64) / (delta * &eps);
    let mut params = ReductionParams::bare(eps);
    params.delta = Some(delta.clone());
    params.c = Some(c);
    params.d = Some(d);
    params.i = Some(i_count);
    finish(phi, b, FBlock::Cycle { len: c, base }, "r", params, Vec::new())
}
