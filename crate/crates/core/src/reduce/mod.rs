//! Compilation of 3CNF formulas into the strategic-constraint reduction
//! games, plus the translations between truth assignments and strategy
//! profiles.
//!
//! Six generators share one payoff rule engine (see [`gen`]): a symmetric
//! base game on literals/variables/clauses, optional per-player duplication
//! of blocks with punished unassociated play, and an escape block that is
//! either a single mutual-escape strategy or a cyclic sub-game.

pub mod gen;
pub mod meta;

use num::Zero;

use crate::error::{Error, Result};
use crate::game::{BimatrixGame, MixedStrategy, Profile, SupportSet};
use crate::rational::{rat, Rational};

pub use gen::{gen_c, gen_d, gen_g, gen_h, gen_r, gen_sv};

/// A CNF formula: variables are 1..=num_vars, literals are nonzero signed
/// variable indices, clauses are literal lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula> {
        if num_vars == 0 {
            return Err(Error::InvalidInput("a formula needs at least one variable".into()));
        }
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidInput(format!("clause {ci} is empty")));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidInput(format!(
                        "literal {lit} out of range in clause {ci} (variables 1..={num_vars})"
                    )));
                }
                if clause.contains(&-lit) {
                    return Err(Error::InvalidInput(format!(
                        "clause {ci} contains both {lit} and {}",
                        -lit
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// `assignment[v-1]` is the value of variable v.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.num_vars);
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let val = assignment[(lit.unsigned_abs() as usize) - 1];
                if lit > 0 {
                    val
                } else {
                    !val
                }
            })
        })
    }
}

/// Parses DIMACS CNF: comment lines, a `p cnf <vars> <clauses>` header, and
/// zero-terminated clauses. Clause order is preserved.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut tokens: Vec<&str> = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(Error::Parse("duplicate DIMACS problem line".into()));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(Error::Parse(format!("malformed problem line {line:?}")));
            }
            let nv = fields[1]
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad variable count {:?}", fields[1])))?;
            let nc = fields[2]
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad clause count {:?}", fields[2])))?;
            header = Some((nv, nc));
            continue;
        }
        tokens.extend(line.split_whitespace());
    }
    let Some((num_vars, num_clauses)) = header else {
        return Err(Error::Parse("missing \"p cnf\" problem line".into()));
    };

    let mut clauses: Vec<Vec<i32>> = Vec::with_capacity(num_clauses);
    let mut current: Vec<i32> = Vec::new();
    for tok in tokens {
        let lit = tok
            .parse::<i32>()
            .map_err(|_| Error::Parse(format!("invalid literal token {tok:?}")))?;
        if lit == 0 {
            if current.is_empty() {
                return Err(Error::Parse("empty clause".into()));
            }
            clauses.push(std::mem::take(&mut current));
        } else {
            if lit.unsigned_abs() as usize > num_vars {
                return Err(Error::Parse(format!(
                    "literal {lit} out of range (header declares {num_vars} variables)"
                )));
            }
            current.push(lit);
        }
    }
    if !current.is_empty() {
        return Err(Error::Parse("unterminated clause (missing trailing 0)".into()));
    }
    if clauses.len() != num_clauses {
        return Err(Error::Parse(format!(
            "header declares {num_clauses} clauses but {} were read",
            clauses.len()
        )));
    }
    CnfFormula::new(num_vars, clauses)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoleOwner {
    Shared,
    Row,
    Col,
}

impl RoleOwner {
    pub fn row_can_play(self) -> bool {
        matches!(self, RoleOwner::Shared | RoleOwner::Row)
    }

    pub fn col_can_play(self) -> bool {
        matches!(self, RoleOwner::Shared | RoleOwner::Col)
    }
}

/// What a strategy of a reduction game stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Literal { literal: i32, owner: RoleOwner },
    Variable { var: usize, owner: RoleOwner },
    Clause { index: usize, owner: RoleOwner },
    F { index: usize, owner: RoleOwner },
}

impl Role {
    pub fn owner(&self) -> RoleOwner {
        match *self {
            Role::Literal { owner, .. }
            | Role::Variable { owner, .. }
            | Role::Clause { owner, .. }
            | Role::F { owner, .. } => owner,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionParams {
    pub eps: Rational,
    pub delta: Option<Rational>,
    pub c: Option<usize>,
    pub d: Option<usize>,
    pub i: Option<usize>,
}

impl ReductionParams {
    fn bare(eps: Rational) -> ReductionParams {
        ReductionParams {
            eps,
            delta: None,
            c: None,
            d: None,
            i: None,
        }
    }
}

/// Default approximation parameter 1/(2n³).
pub fn default_eps(num_vars: usize) -> Rational {
    let n = num_vars as i64;
    rat(1, 2 * n * n * n)
}

/// A compiled reduction game: the bimatrix game (with roles and parameters
/// embedded in its metadata), the role of every strategy index, and the
/// generator parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionGame {
    pub game: BimatrixGame,
    pub roles: Vec<Role>,
    pub params: ReductionParams,
    pub generator: String,
    pub warnings: Vec<String>,
}

impl ReductionGame {
    pub fn n_vars(&self) -> usize {
        self.roles
            .iter()
            .filter_map(|r| match r {
                Role::Variable { var, owner } if owner.row_can_play() => Some(*var),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    fn literal_copies(&self, literal: i32, row_side: bool) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| match r {
                Role::Literal { literal: l, owner } => {
                    *l == literal
                        && if row_side {
                            owner.row_can_play()
                        } else {
                            owner.col_can_play()
                        }
                }
                _ => false,
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// The support pair induced by a truth assignment (all copies of each
    /// chosen literal available to each player).
    pub fn assignment_supports(&self, assignment: &[bool]) -> Result<(SupportSet, SupportSet)> {
        let n = self.n_vars();
        if assignment.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: assignment.len(),
            });
        }
        let mut row = Vec::new();
        let mut col = Vec::new();
        for v in 1..=n {
            let lit = if assignment[v - 1] { v as i32 } else { -(v as i32) };
            let r = self.literal_copies(lit, true);
            let c = self.literal_copies(lit, false);
            if r.is_empty() || c.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "no playable copy of literal {lit} for one of the players"
                )));
            }
            row.extend(r);
            col.extend(c);
        }
        Ok((SupportSet::new(row), SupportSet::new(col)))
    }

    /// All 2^n assignment-structured support pairs, in assignment order
    /// (variable 1 least significant, false before true).
    pub fn assignment_support_pairs(&self) -> Result<Vec<(SupportSet, SupportSet)>> {
        let n = self.n_vars();
        if n > 20 {
            return Err(Error::ParameterOutOfRange(format!(
                "{n} variables give 2^{n} assignment supports; refusing"
            )));
        }
        let mut out = Vec::with_capacity(1 << n);
        for bits in 0..(1usize << n) {
            let assignment: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
            out.push(self.assignment_supports(&assignment)?);
        }
        Ok(out)
    }
}

/// Uniform profile induced by a truth assignment: each player gives every
/// variable total mass 1/n on its chosen literal, spread evenly over the
/// copies that player may use.
pub fn assignment_to_profile(rg: &ReductionGame, assignment: &[bool]) -> Result<Profile> {
    let n = rg.n_vars();
    if assignment.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: assignment.len(),
        });
    }
    let size = rg.game.n();
    let per_var = rat(1, n as i64);
    let mut x = vec![Rational::zero(); size];
    let mut y = vec![Rational::zero(); size];
    for v in 1..=n {
        let lit = if assignment[v - 1] { v as i32 } else { -(v as i32) };
        for (side, row_side) in [(&mut x, true), (&mut y, false)] {
            let copies = rg.literal_copies(lit, row_side);
            if copies.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "no playable copy of literal {lit} for one of the players"
                )));
            }
            let share = &per_var / crate::rational::int(copies.len() as i64);
            for idx in copies {
                side[idx] += &share;
            }
        }
    }
    Profile::new(MixedStrategy::new(x)?, MixedStrategy::new(y)?)
}

/// Decodes a profile to an assignment: a variable is true iff the combined
/// mass both players put on copies of its positive literal is at least the
/// mass on the negative literal (ties decode to true).
pub fn profile_to_assignment(rg: &ReductionGame, profile: &Profile) -> Result<Vec<bool>> {
    let n = rg.n_vars();
    if profile.dim() != rg.game.n() {
        return Err(Error::DimensionMismatch {
            expected: rg.game.n(),
            got: profile.dim(),
        });
    }
    let mass_on = |literal: i32| -> Rational {
        rg.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, Role::Literal { literal: l, .. } if *l == literal))
            .map(|(i, _)| profile.x.get(i) + profile.y.get(i))
            .sum()
    };
    Ok((1..=n)
        .map(|v| mass_on(v as i32) >= mass_on(-(v as i32)))
        .collect())
}
