//! Small named games used in the documentation and test suites.

use crate::game::BimatrixGame;
use crate::rational::{int, rat};

/// Zero-sum 3×3 rock–paper–scissors; unique equilibrium is uniform/uniform
/// and it has no exact constrained disjoint equilibrium.
pub fn rock_paper_scissors() -> BimatrixGame {
    let u1 = vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]];
    let u2: Vec<Vec<i64>> = u1.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
    let mut g = BimatrixGame::from_int_matrices(&u1, &u2).unwrap();
    g = BimatrixGame::new(
        vec!["rock".into(), "paper".into(), "scissors".into()],
        g.matrix(crate::game::Player::Row).clone(),
        g.matrix(crate::game::Player::Col).clone(),
        None,
    )
    .unwrap();
    g
}

/// Coordination game: both players want to match, payoff 1 on the diagonal.
pub fn coordination(n: usize) -> BimatrixGame {
    let m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    BimatrixGame::from_int_matrices(&m, &m).unwrap()
}

/// Bach-or-Stravinsky with payoffs 1 and 1/2 for the preferred/conceded
/// activity; two pure equilibria plus the mixed ((2/3,1/3),(1/3,2/3)).
pub fn bach_or_stravinsky() -> BimatrixGame {
    BimatrixGame::new(
        vec!["first".into(), "second".into()],
        vec![vec![int(1), int(0)], vec![int(0), rat(1, 2)]],
        vec![vec![rat(1, 2), int(0)], vec![int(0), int(1)]],
        None,
    )
    .unwrap()
}

/// The mismatching variant: payoffs arrive only when the players pick
/// different activities.
pub fn bach_or_stravinsky_opposite() -> BimatrixGame {
    BimatrixGame::new(
        vec!["first".into(), "second".into()],
        vec![vec![int(0), int(1)], vec![rat(1, 2), int(0)]],
        vec![vec![int(0), rat(1, 2)], vec![int(1), int(0)]],
        None,
    )
    .unwrap()
}

/// Tax auditing game. Row is the auditor (audit / pass), column is the
/// taxpayer (pay truthfully / cheat); `penalty` is the taxpayer's loss when
/// caught cheating. Penalty 10 and 20 give the two classic variants: the
/// taxpayer mixes (2/3, 1/3) in both, while the auditor mixes (2/7, 5/7)
/// and (1/6, 5/6) respectively.
pub fn tax_audit(penalty: i64) -> BimatrixGame {
    BimatrixGame::new(
        vec!["audit".into(), "pass".into()],
        vec![vec![int(2), int(4)], vec![int(4), int(0)]],
        vec![vec![int(0), int(-penalty)], vec![int(0), int(4)]],
        None,
    )
    .unwrap()
}

/// 2×2 game whose only equilibria are the two diagonal pure profiles, so no
/// equilibrium has disjoint supports.
pub fn no_disjoint_example() -> BimatrixGame {
    let m = vec![vec![1, 0], vec![0, 0]];
    BimatrixGame::from_int_matrices(&m, &m).unwrap()
}
