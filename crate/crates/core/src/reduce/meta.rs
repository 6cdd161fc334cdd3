//! Embedding of reduction roles and parameters into game metadata, and the
//! reverse parse used when a reduction game arrives as a plain game file.

use serde_json::{json, Map, Value};

use super::{ReductionGame, ReductionParams, Role, RoleOwner};
use crate::error::{Error, Result};
use crate::game::BimatrixGame;
use crate::rational::{format_rational, parse_rational};

fn owner_str(o: RoleOwner) -> &'static str {
    match o {
        RoleOwner::Shared => "shared",
        RoleOwner::Row => "row",
        RoleOwner::Col => "col",
    }
}

fn owner_from(s: &str) -> Result<RoleOwner> {
    match s {
        "shared" => Ok(RoleOwner::Shared),
        "row" => Ok(RoleOwner::Row),
        "col" => Ok(RoleOwner::Col),
        other => Err(Error::Parse(format!("unknown owner {other:?}"))),
    }
}

fn role_to_value(role: &Role) -> Value {
    match role {
        Role::Literal { literal, owner } => {
            json!({"kind": "literal", "literal": literal, "owner": owner_str(*owner)})
        }
        Role::Variable { var, owner } => {
            json!({"kind": "variable", "var": var, "owner": owner_str(*owner)})
        }
        Role::Clause { index, owner } => {
            json!({"kind": "clause", "index": index, "owner": owner_str(*owner)})
        }
        Role::F { index, owner } => {
            json!({"kind": "f", "index": index, "owner": owner_str(*owner)})
        }
    }
}

fn role_from_value(v: &Value) -> Result<Role> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("role entry is not an object".into()))?;
    let owner = owner_from(
        obj.get("owner")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("role is missing its owner".into()))?,
    )?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("role is missing its kind".into()))?;
    let get_usize = |key: &str| -> Result<usize> {
        obj.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| Error::Parse(format!("role is missing {key:?}")))
    };
    Ok(match kind {
        "literal" => Role::Literal {
            literal: obj
                .get("literal")
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Parse("literal role is missing its literal".into()))?
                as i32,
            owner,
        },
        "variable" => Role::Variable { var: get_usize("var")?, owner },
        "clause" => Role::Clause { index: get_usize("index")?, owner },
        "f" => Role::F { index: get_usize("index")?, owner },
        other => return Err(Error::Parse(format!("unknown role kind {other:?}"))),
    })
}

fn params_to_value(p: &ReductionParams) -> Value {
    let opt_rat = |r: &Option<crate::rational::Rational>| match r {
        Some(v) => Value::String(format_rational(v)),
        None => Value::Null,
    };
    let opt_usize = |u: &Option<usize>| match u {
        Some(v) => json!(v),
        None => Value::Null,
    };
    json!({
        "eps": format_rational(&p.eps),
        "delta": opt_rat(&p.delta),
        "c": opt_usize(&p.c),
        "d": opt_usize(&p.d),
        "i": opt_usize(&p.i),
    })
}

fn params_from_value(v: &Value) -> Result<ReductionParams> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("params entry is not an object".into()))?;
    let rat_at = |key: &str| -> Result<Option<crate::rational::Rational>> {
        match obj.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::String(s)) => Ok(Some(parse_rational(s)?)),
            Some(other) => Err(Error::Parse(format!("{key} must be a rational string, got {other}"))),
        }
    };
    let usize_at = |key: &str| -> Option<usize> {
        obj.get(key).and_then(Value::as_u64).map(|v| v as usize)
    };
    Ok(ReductionParams {
        eps: rat_at("eps")?.ok_or_else(|| Error::Parse("params are missing eps".into()))?,
        delta: rat_at("delta")?,
        c: usize_at("c"),
        d: usize_at("d"),
        i: usize_at("i"),
    })
}

pub fn embed(
    generator: &str,
    roles: &[Role],
    params: &ReductionParams,
    warnings: &[String],
) -> Map<String, Value> {
    let mut meta = Map::new();
    meta.insert("generator".into(), Value::String(generator.to_string()));
    meta.insert("roles".into(), Value::Array(roles.iter().map(role_to_value).collect()));
    meta.insert("params".into(), params_to_value(params));
    if !warnings.is_empty() {
        meta.insert(
            "warnings".into(),
            Value::Array(warnings.iter().map(|w| Value::String(w.clone())).collect()),
        );
    }
    meta
}

impl ReductionGame {
    /// Reconstructs the reduction view from a game whose metadata carries
    /// the `roles`/`params` blocks written by the generators.
    pub fn from_game(game: &BimatrixGame) -> Result<ReductionGame> {
        let meta = game
            .metadata
            .as_ref()
            .ok_or_else(|| Error::Parse("game has no metadata; not a reduction game".into()))?;
        let roles_v = meta
            .get("roles")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("metadata has no roles block".into()))?;
        if roles_v.len() != game.n() {
            return Err(Error::Parse(format!(
                "roles block has {} entries for {} strategies",
                roles_v.len(),
                game.n()
            )));
        }
        let roles = roles_v.iter().map(role_from_value).collect::<Result<Vec<_>>>()?;
        let params = params_from_value(
            meta.get("params")
                .ok_or_else(|| Error::Parse("metadata has no params block".into()))?,
        )?;
        let generator = meta
            .get("generator")
            .and_then(Value::as_str)
            .unwrap_or("unknown")
            .to_string();
        let warnings = meta
            .get("warnings")
            .and_then(Value::as_array)
            .map(|ws| {
                ws.iter()
                    .filter_map(Value::as_str)
                    .map(str::to_string)
                    .collect()
            })
            .unwrap_or_default();
        Ok(ReductionGame {
            game: game.clone(),
            roles,
            params,
            generator,
            warnings,
        })
    }
}
