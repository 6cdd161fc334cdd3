//! Exact-arithmetic toolkit for bimatrix games with strategic constraints.
//!
//! Everything in the core paths runs on arbitrary-precision rationals: no
//! floating point, no tolerances, no "numerically zero" supports. The crate
//! covers
//!
//! * the game model ([`game`]): labeled square bimatrix games, mixed
//!   strategies, supports, the L1 metric, and joint payoff rescaling;
//! * verification ([`verify`]): exact regret, ε-Nash tests, the disjoint /
//!   partition / far / major / semi-disjoint constraint predicates, and
//!   constrained best responses, including an exact extreme-point optimizer
//!   over the non-convex farness constraint;
//! * solving ([`solve`]): support enumeration with exact linear algebra,
//!   fully-mixed solving, constraint filtering, and enumeration of exact
//!   constrained disjoint equilibria;
//! * constructions ([`construct`]): certified mass redistribution, far
//!   profiles from exact equilibria, the greedy constrained-disjoint
//!   profile, and the semi-disjoint to constrained-far conversion;
//! * surgeries ([`transform`]): per-player strategy duplication with
//!   punishment, diagonal modification, and profile projection;
//! * reductions ([`reduce`]): compilation of 3CNF formulas into the
//!   strategic-constraint reduction games and assignment/profile
//!   translations;
//! * wire formats ([`json`]): exact `"p/q"` JSON encodings for games,
//!   profiles, and results.

pub mod construct;
pub mod error;
pub mod game;
pub mod games;
pub mod json;
pub mod rational;
pub mod reduce;
pub mod solve;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use game::{l1_distance, scale_payoffs, BimatrixGame, MixedStrategy, Player, Profile, SupportSet};
pub use rational::Rational;
