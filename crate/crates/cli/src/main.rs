//! Command-line front end: solve / verify / construct / transform / reduce /
//! distance over the exact JSON and DIMACS interfaces.
//!
//! Exit codes: 0 = found / true, 1 = not found / false (decision commands),
//! 2 = usage or data error. `-` means standard input or output. All output
//! is deterministic for a given invocation.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use farnash_core::rational::{format_rational, parse_rational, Rational};
use farnash_core::solve::EnumerationOptions;
use farnash_core::verify::ConstraintSpec;
use farnash_core::{construct, game, json as wire, reduce, solve, transform, verify};
use farnash_core::{BimatrixGame, Player, Profile, SupportSet};

#[derive(Parser)]
#[command(
    name = "farnash",
    version,
    about = "Exact-arithmetic bimatrix games with strategic constraints"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct OutputArg {
    /// Write the result here instead of standard output (`-` = stdout).
    #[arg(long, short)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate exact equilibria of a game (exit 0 iff any were found).
    Solve {
        /// Game JSON file, or `-` for stdin.
        game: String,
        /// `disjoint`, `partition`, `far:<r>`, `major:<r>`, or `semi:<r>`
        #[arg(long)]
        constraint: Option<String>,
        /// nash (default) or constrained
        #[arg(long, default_value = "nash")]
        notion: String,
        /// Cap on each player's support size.
        #[arg(long)]
        max_support: Option<usize>,
        /// `assignment`: only assignment-structured supports (reduction games).
        #[arg(long)]
        support_filter: Option<String>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Check a profile against a game (exit 0 iff it passes at the given ε).
    Verify {
        game: String,
        profile: String,
        /// Additive approximation bound, an exact rational.
        #[arg(long)]
        eps: String,
        #[arg(long)]
        constraint: Option<String>,
        /// nash (default) or constrained
        #[arg(long, default_value = "nash")]
        notion: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Run one of the certified constructions.
    Construct {
        game: String,
        /// Build a δ-far profile from the exact equilibrium given via --ne.
        #[arg(long)]
        far: Option<String>,
        /// Profile JSON file for --far / --semi-to-far.
        #[arg(long)]
        ne: Option<String>,
        /// Greedy constrained-disjoint profile with this ε.
        #[arg(long)]
        greedy_disjoint: Option<String>,
        /// Column anchor strategy for --greedy-disjoint (default 0).
        #[arg(long)]
        anchor: Option<usize>,
        /// Convert the M-semi-disjoint equilibrium given via --ne.
        #[arg(long)]
        semi_to_far: Option<String>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Apply a game surgery and print the derived game.
    Transform {
        game: String,
        /// Replace both diagonals with −M.
        #[arg(long)]
        diag_modify: Option<String>,
        /// Duplicate strategies per player (see --subset / --sigma).
        #[arg(long)]
        duplicate: bool,
        /// Comma-separated strategy indices to duplicate (default: all).
        #[arg(long)]
        subset: Option<String>,
        /// Punishment payoff for unassociated play.
        #[arg(long)]
        sigma: Option<String>,
        /// Rescale payoffs jointly into [0, 1].
        #[arg(long)]
        scale: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Compile a DIMACS 3CNF formula into a reduction game.
    Reduce {
        /// DIMACS CNF file, or `-` for stdin.
        cnf: String,
        /// sv | g | c | h | d | r
        #[arg(long)]
        game: String,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        eps: Option<String>,
        /// Escape-cycle length for the c game.
        #[arg(long)]
        c: Option<usize>,
        /// Seeded random duplication choice for the h game.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Print the L1 distance between the two sides of a profile.
    Distance {
        profile: String,
        #[command(flatten)]
        out: OutputArg,
    },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn write_output(out: &OutputArg, content: &str) -> Result<(), String> {
    match out.output.as_deref() {
        None | Some("-") => {
            print!("{content}");
            Ok(())
        }
        Some(path) => std::fs::write(path, content).map_err(|e| format!("writing {path}: {e}")),
    }
}

fn load_game(path: &str) -> Result<BimatrixGame, String> {
    wire::game_from_json(&read_input(path)?).map_err(|e| e.to_string())
}

fn load_profile(path: &str) -> Result<Profile, String> {
    wire::profile_from_json(&read_input(path)?).map_err(|e| e.to_string())
}

fn parse_rat_arg(name: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("--{name}: {e}"))
}

fn parse_constraint(s: &str) -> Result<ConstraintSpec, String> {
    let spec = match s.split_once(':') {
        None => match s {
            "disjoint" => ConstraintSpec::Disjoint,
            "partition" => ConstraintSpec::Partition,
            other => return Err(format!("unknown constraint {other:?}")),
        },
        Some((kind, value)) => {
            let r = parse_rational(value).map_err(|e| format!("constraint value: {e}"))?;
            match kind {
                "far" => ConstraintSpec::Far(r),
                "major" => ConstraintSpec::Major(r),
                "semi" => ConstraintSpec::SemiDisjoint(r),
                other => return Err(format!("unknown constraint {other:?}")),
            }
        }
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Ok(true) = found/pass (exit 0), Ok(false) = not found/fail (exit 1).
fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Solve {
            game,
            constraint,
            notion,
            max_support,
            support_filter,
            out,
        } => {
            let g = load_game(&game)?;
            let mut opts = EnumerationOptions {
                max_support,
                ..Default::default()
            };
            if let Some(filter) = support_filter.as_deref() {
                if filter != "assignment" {
                    return Err(format!("unknown support filter {filter:?}"));
                }
                let rg = reduce::ReductionGame::from_game(&g).map_err(|e| e.to_string())?;
                opts.support_pairs = Some(rg.assignment_support_pairs().map_err(|e| e.to_string())?);
                opts.filter_name = Some("assignment".into());
            }
            let spec = constraint.as_deref().map(parse_constraint).transpose()?;
            let set = match notion.as_str() {
                "nash" => match &spec {
                    Some(spec) => {
                        solve::filter_nash_by_constraint(&g, spec, &opts).map_err(|e| e.to_string())?
                    }
                    None => solve::enumerate_nash(&g, &opts).map_err(|e| e.to_string())?,
                },
                "constrained" => match &spec {
                    Some(ConstraintSpec::Disjoint) => {
                        solve::enumerate_constrained_disjoint(&g, &opts).map_err(|e| e.to_string())?
                    }
                    _ => {
                        return Err(
                            "--notion constrained requires --constraint disjoint (the only \
                             constrained notion with an exact enumeration)"
                                .into(),
                        )
                    }
                },
                other => return Err(format!("unknown notion {other:?}")),
            };
            write_output(&out, &pretty(&wire::equilibrium_set_value(&set)))?;
            Ok(!set.equilibria.is_empty())
        }

        Cmd::Verify {
            game,
            profile,
            eps,
            constraint,
            notion,
            out,
        } => {
            let g = load_game(&game)?;
            let p = load_profile(&profile)?;
            let eps = parse_rat_arg("eps", &eps)?;
            let spec = constraint.as_deref().map(parse_constraint).transpose()?;
            let constraint_ok = match &spec {
                Some(spec) => Some(verify::check_constraint(&p, spec).map_err(|e| e.to_string())?),
                None => None,
            };
            let (value, regrets_ok) = match notion.as_str() {
                "nash" => {
                    let report = verify::regret_report(&g, &p).map_err(|e| e.to_string())?;
                    let ok = report.row_regret <= eps && report.col_regret <= eps;
                    (wire::regret_report_value(&report), ok)
                }
                "constrained" => {
                    let (row, col) = match &spec {
                        Some(ConstraintSpec::Disjoint) => (
                            verify::constrained_regret_disjoint(&g, &p, Player::Row)
                                .map_err(|e| e.to_string())?,
                            verify::constrained_regret_disjoint(&g, &p, Player::Col)
                                .map_err(|e| e.to_string())?,
                        ),
                        Some(ConstraintSpec::Far(d)) => (
                            verify::constrained_regret_far(&g, &p, d, Player::Row)
                                .map_err(|e| e.to_string())?,
                            verify::constrained_regret_far(&g, &p, d, Player::Col)
                                .map_err(|e| e.to_string())?,
                        ),
                        _ => {
                            return Err("--notion constrained requires --constraint disjoint or \
                                        far:<r>"
                                .into())
                        }
                    };
                    let ok = row.regret <= eps && col.regret <= eps;
                    (
                        json!({
                            "row": wire::constrained_regret_value("row", &row),
                            "col": wire::constrained_regret_value("col", &col),
                        }),
                        ok,
                    )
                }
                other => return Err(format!("unknown notion {other:?}")),
            };
            let pass = regrets_ok && constraint_ok.unwrap_or(true);
            let result = json!({
                "report": value,
                "eps": format_rational(&eps),
                "constraint_satisfied": constraint_ok,
                "pass": pass,
            });
            write_output(&out, &pretty(&result))?;
            Ok(pass)
        }

        Cmd::Construct {
            game,
            far,
            ne,
            greedy_disjoint,
            anchor,
            semi_to_far,
            out,
        } => {
            let g = load_game(&game)?;
            let modes = [far.is_some(), greedy_disjoint.is_some(), semi_to_far.is_some()];
            if modes.iter().filter(|m| **m).count() != 1 {
                return Err(
                    "pick exactly one of --far, --greedy-disjoint, --semi-to-far".into(),
                );
            }
            let cp = if let Some(delta) = far {
                let delta = parse_rat_arg("far", &delta)?;
                let ne = load_profile(ne.as_deref().ok_or("--far requires --ne <profile>")?)?;
                construct::make_far(&g, &ne, &delta).map_err(|e| e.to_string())?
            } else if let Some(eps) = greedy_disjoint {
                let eps = parse_rat_arg("greedy-disjoint", &eps)?;
                construct::greedy_constrained_disjoint(&g, &eps, anchor).map_err(|e| e.to_string())?
            } else {
                let m = parse_rat_arg("semi-to-far", &semi_to_far.unwrap())?;
                let ne = load_profile(ne.as_deref().ok_or("--semi-to-far requires --ne <profile>")?)?;
                construct::semi_to_constrained_far(&g, &m, &ne).map_err(|e| e.to_string())?
            };
            write_output(&out, &pretty(&wire::certified_profile_value(&cp)))?;
            Ok(true)
        }

        Cmd::Transform {
            game,
            diag_modify,
            duplicate,
            subset,
            sigma,
            scale,
            out,
        } => {
            let g = load_game(&game)?;
            let modes = [diag_modify.is_some(), duplicate, scale];
            if modes.iter().filter(|m| **m).count() != 1 {
                return Err("pick exactly one of --diag-modify, --duplicate, --scale".into());
            }
            let derived = if let Some(m) = diag_modify {
                let m = parse_rat_arg("diag-modify", &m)?;
                transform::diagonal_modify(&g, &m).map_err(|e| e.to_string())?
            } else if duplicate {
                let subset = match subset.as_deref() {
                    None => SupportSet::new((0..g.n()).collect()),
                    Some(list) => SupportSet::new(
                        list.split(',')
                            .map(|t| {
                                t.trim()
                                    .parse::<usize>()
                                    .map_err(|_| format!("--subset: bad index {t:?}"))
                            })
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                };
                let sigma = sigma
                    .as_deref()
                    .map(|s| parse_rat_arg("sigma", s))
                    .transpose()?;
                let (mut derived, map) =
                    transform::duplicate_strategies(&g, &subset, sigma).map_err(|e| e.to_string())?;
                let mut meta = derived.metadata.take().unwrap_or_default();
                meta.insert("label_map".into(), wire::label_map_value(&map));
                derived.metadata = Some(meta);
                derived
            } else {
                let (mut scaled, map) = game::scale_payoffs(&g);
                let mut meta = scaled.metadata.take().unwrap_or_default();
                meta.insert(
                    "scale_map".into(),
                    json!({
                        "offset": format_rational(&map.offset),
                        "scale": format_rational(&map.scale),
                    }),
                );
                scaled.metadata = Some(meta);
                scaled
            };
            write_output(&out, &wire::game_to_json(&derived))?;
            Ok(true)
        }

        Cmd::Reduce {
            cnf,
            game,
            delta,
            eps,
            c,
            seed,
            out,
        } => {
            let phi = reduce::parse_dimacs(&read_input(&cnf)?).map_err(|e| e.to_string())?;
            let eps = eps.as_deref().map(|s| parse_rat_arg("eps", s)).transpose()?;
            let delta = delta.as_deref().map(|s| parse_rat_arg("delta", s)).transpose()?;
            let need_delta = || delta.clone().ok_or(format!("--game {game} requires --delta"));
            let rg = match game.as_str() {
                "sv" => reduce::gen_sv(&phi, eps),
                "g" => reduce::gen_g(&phi, eps),
                "c" => {
                    let c = c.ok_or("--game c requires --c <cycle length>")?;
                    reduce::gen_c(&phi, c, eps)
                }
                "h" => reduce::gen_h(&phi, &need_delta()?, eps, seed),
                "d" => reduce::gen_d(&phi, &need_delta()?, eps),
                "r" => reduce::gen_r(&phi, &need_delta()?, eps),
                other => return Err(format!("unknown reduction game {other:?}")),
            }
            .map_err(|e| e.to_string())?;
            for w in &rg.warnings {
                eprintln!("warning: {w}");
            }
            write_output(&out, &wire::game_to_json(&rg.game))?;
            Ok(true)
        }

        Cmd::Distance { profile, out } => {
            let p = load_profile(&profile)?;
            let d = game::l1_distance(&p.x, &p.y).map_err(|e| e.to_string())?;
            write_output(&out, &format!("{}\n", format_rational(&d)))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("{}", json!({"error": msg}));
            ExitCode::from(2)
        }
    }
}
