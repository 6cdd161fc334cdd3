//! Wire formats. Games and profiles travel as JSON with every rational
//! written as a `"p/q"` (or plain integer) string, so values survive a
//! round trip bit-exactly. Result types (regret reports, equilibrium sets,
//! certified profiles) serialize to JSON the same way.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::construct::{BoundKind, CertifiedProfile, Move};
use crate::error::{Error, Result};
use crate::game::{BimatrixGame, Metadata, MixedStrategy, Player, Profile};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::solve::EquilibriumSet;
use crate::transform::{LabelMap, Owner};
use crate::verify::{ConstrainedRegret, RegretReport, Witness};

#[derive(Serialize, Deserialize)]
struct GameWire {
    labels: Vec<String>,
    row: Vec<Vec<String>>,
    col: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Metadata>,
}

#[derive(Serialize, Deserialize)]
struct ProfileWire {
    x: Vec<String>,
    y: Vec<String>,
}

fn fmt_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn fmt_matrix(m: &[Vec<Rational>]) -> Vec<Vec<String>> {
    m.iter().map(|r| fmt_vec(r)).collect()
}

fn parse_vec(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn game_to_json(game: &BimatrixGame) -> String {
    let wire = GameWire {
        labels: game.labels().to_vec(),
        row: fmt_matrix(game.matrix(Player::Row)),
        col: fmt_matrix(game.matrix(Player::Col)),
        metadata: game.metadata.clone(),
    };
    let mut s = serde_json::to_string_pretty(&wire).expect("game serialization cannot fail");
    s.push('\n');
    s
}

pub fn game_from_json(text: &str) -> Result<BimatrixGame> {
    let wire: GameWire =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid game JSON: {e}")))?;
    let parse_m = |m: &[Vec<String>]| -> Result<Vec<Vec<Rational>>> {
        m.iter().map(|r| parse_vec(r)).collect()
    };
    BimatrixGame::new(wire.labels, parse_m(&wire.row)?, parse_m(&wire.col)?, wire.metadata)
}

pub fn profile_to_json(profile: &Profile) -> String {
    let wire = ProfileWire {
        x: fmt_vec(profile.x.probs()),
        y: fmt_vec(profile.y.probs()),
    };
    let mut s = serde_json::to_string_pretty(&wire).expect("profile serialization cannot fail");
    s.push('\n');
    s
}

/// Rejects non-normalized probability vectors.
pub fn profile_from_json(text: &str) -> Result<Profile> {
    let wire: ProfileWire = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid profile JSON: {e}")))?;
    Profile::new(
        MixedStrategy::new(parse_vec(&wire.x)?)?,
        MixedStrategy::new(parse_vec(&wire.y)?)?,
    )
}

fn witness_value(w: &Option<Witness>) -> Value {
    match w {
        None => Value::Null,
        Some(Witness::Pure(i)) => json!({"pure": i}),
        Some(Witness::Mixed(v)) => json!({"mixed": fmt_vec(v)}),
    }
}

pub fn regret_report_value(report: &RegretReport) -> Value {
    json!({
        "row_regret": format_rational(&report.row_regret),
        "col_regret": format_rational(&report.col_regret),
        "row_witness": witness_value(&report.row_witness),
        "col_witness": witness_value(&report.col_witness),
    })
}

pub fn constrained_regret_value(player: &str, r: &ConstrainedRegret) -> Value {
    json!({
        "player": player,
        "regret": format_rational(&r.regret),
        "witness": witness_value(&r.witness),
        "empty_feasible": r.empty_feasible,
    })
}

pub fn equilibrium_set_value(set: &EquilibriumSet) -> Value {
    json!({
        "equilibria": set
            .equilibria
            .iter()
            .map(|e| json!({
                "x": fmt_vec(e.profile.x.probs()),
                "y": fmt_vec(e.profile.y.probs()),
                "degenerate": e.degenerate,
            }))
            .collect::<Vec<_>>(),
        "exhaustive": set.exhaustive,
        "search_bounds": {
            "max_support": set.search_bounds.max_support,
            "filter": set.search_bounds.filter,
            "max_equilibria": set.search_bounds.max_equilibria,
        },
    })
}

pub fn certified_profile_value(cp: &CertifiedProfile) -> Value {
    let kind = match &cp.bound_kind {
        BoundKind::Nash => json!({"kind": "nash"}),
        BoundKind::ConstrainedDisjoint => json!({"kind": "constrained_disjoint"}),
        BoundKind::ConstrainedFar { delta } => {
            json!({"kind": "constrained_far", "delta": format_rational(delta)})
        }
    };
    json!({
        "x": fmt_vec(cp.profile.x.probs()),
        "y": fmt_vec(cp.profile.y.probs()),
        "regret_bound": format_rational(&cp.regret_bound),
        "bound_kind": kind,
        "construction_trace": cp
            .construction_trace
            .iter()
            .map(|m: &Move| json!({
                "side": match m.side { Player::Row => "row", Player::Col => "col" },
                "from": m.from,
                "to": m.to,
                "mass": format_rational(&m.mass),
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn label_map_value(map: &LabelMap) -> Value {
    json!({
        "forward": map
            .forward
            .iter()
            .map(|(src, owner)| json!({
                "source": src,
                "owner": match owner {
                    Owner::Shared => "shared",
                    Owner::RowCopy => "row",
                    Owner::ColCopy => "col",
                },
            }))
            .collect::<Vec<_>>(),
        "punishment": format_rational(&map.punishment),
        "payoff_range": [
            format_rational(&map.payoff_range.0),
            format_rational(&map.payoff_range.1),
        ],
    })
}
