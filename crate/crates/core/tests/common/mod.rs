//! Shared helpers for the integration suites: fixture games, a fixed 3CNF
//! corpus, and random-game generators over exact rationals.

#![allow(dead_code)]

use farnash_core::rational::{int, rat, Rational};
use farnash_core::reduce::CnfFormula;
use farnash_core::{BimatrixGame, MixedStrategy, Profile};
use rand::Rng;

pub fn strat(parts: &[(i64, i64)]) -> MixedStrategy {
    MixedStrategy::new(parts.iter().map(|(n, d)| rat(*n, *d)).collect()).unwrap()
}

pub fn pure(n: usize, i: usize) -> MixedStrategy {
    MixedStrategy::pure(n, i).unwrap()
}

pub fn profile(x: MixedStrategy, y: MixedStrategy) -> Profile {
    Profile::new(x, y).unwrap()
}

/// Random game with entries k/denom, k ∈ 0..=denom, so payoffs lie in [0,1].
pub fn random_unit_game<R: Rng>(rng: &mut R, n: usize, denom: i64) -> BimatrixGame {
    let mut mk = || -> Vec<Vec<Rational>> {
        (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(0..=denom), denom)).collect())
            .collect()
    };
    let row = mk();
    let col = mk();
    let labels = (0..n).map(|i| format!("s{i}")).collect();
    BimatrixGame::new(labels, row, col, None).unwrap()
}

pub fn random_int_game<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> BimatrixGame {
    let mut mk = || -> Vec<Vec<i64>> {
        (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
            .collect()
    };
    let row = mk();
    let col = mk();
    BimatrixGame::from_int_matrices(&row, &col).unwrap()
}

/// All eight sign patterns over variables {1, 2, 3}; together they are
/// unsatisfiable, every proper subset is satisfiable.
pub fn all_sign_clauses() -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for s1 in [1i32, -1] {
        for s2 in [1i32, -1] {
            for s3 in [1i32, -1] {
                out.push(vec![s1, 2 * s2, 3 * s3]);
            }
        }
    }
    out
}

pub fn unsat8() -> CnfFormula {
    CnfFormula::new(3, all_sign_clauses()).unwrap()
}

/// Brute-force satisfying assignment, the independent oracle for the
/// reduction tests.
pub fn satisfying_assignment(phi: &CnfFormula) -> Option<Vec<bool>> {
    let n = phi.num_vars();
    (0..(1u32 << n)).find_map(|bits| {
        let a: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
        phi.is_satisfied_by(&a).then_some(a)
    })
}

/// Fixed corpus of satisfiable 3CNF formulas with 3 or 4 variables; each is
/// checked satisfiable by brute force on construction.
pub fn satisfiable_corpus() -> Vec<CnfFormula> {
    let mut out = Vec::new();
    let patterns = all_sign_clauses();
    for k in 1..=7 {
        out.push(CnfFormula::new(3, patterns[..k].to_vec()).unwrap());
        out.push(CnfFormula::new(3, patterns[8 - k..].to_vec()).unwrap());
    }
    let n4: [&[&[i32]]; 8] = [
        &[&[1, 2, 3]],
        &[&[1, 2, 4], &[-1, -2, -4]],
        &[&[1, -2, 3], &[-1, 2, -4], &[2, 3, 4]],
        &[&[-1, -2, -3], &[1, 2, 4], &[-2, 3, -4], &[1, -3, 4]],
        &[&[1, 2, 3], &[-1, -2, 4], &[2, -3, -4], &[-1, 3, 4], &[1, -2, -4]],
        &[&[-1, 2, 3], &[1, -2, 3], &[1, 2, -3], &[-1, -2, -3], &[2, 3, 4]],
        &[&[1, 3, 4], &[-1, -3, -4], &[2, -3, 4], &[-2, 3, -4], &[1, -2, 3], &[-1, 2, -3]],
        &[&[4, 2, 1], &[-4, -2, -1], &[3, -1, 4], &[-3, 1, -4], &[2, 3, -4]],
    ];
    for clauses in n4 {
        let phi = CnfFormula::new(4, clauses.iter().map(|c| c.to_vec()).collect()).unwrap();
        out.push(phi);
    }
    for phi in &out {
        assert!(
            satisfying_assignment(phi).is_some(),
            "corpus formula must be satisfiable"
        );
    }
    assert!(out.len() >= 20);
    out
}

pub fn two() -> Rational {
    int(2)
}
