//! Command-line front end over problem files.
//!
//! Exit status: 0 on success or equivalence, 1 when the automorphisms are
//! not equivalent, 2 on any input error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::Algebra;
use crate::criterion::{decide, require_same_objects, rho_on_window, scaling_condition, RhoMap, WindowRho};
use crate::error::{Error, Result};
use crate::oracle::{all_closed_walks_pass, enumerate_all_cycles, simple_cycle_classes_by_search, structure_table};
use crate::orbit::{build_orbit, certify, orbit_levels, Verdict};
use crate::problem::Problem;
use crate::quiver::enumerate_simple_cycles;
use crate::repetitive::{HatElement, JumpAuto, RepetitiveWindow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "quiver-orbit", version, about = "Orbit categories of repetitive quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List simple-cycle representatives of the quiver.
    Cycles {
        file: PathBuf,
        /// Cross-check against every closed walk up to this length.
        #[arg(long)]
        max_cycle_len: Option<usize>,
    },
    /// Decide whether two automorphisms give isomorphic orbit categories.
    Check {
        file: PathBuf,
        auto1: String,
        auto2: String,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
        /// Cross-check the cycle condition on closed walks up to this length.
        #[arg(long)]
        max_cycle_len: Option<usize>,
    },
    /// Print the comparison scalars on a window of levels.
    Rho {
        file: PathBuf,
        auto1: String,
        auto2: String,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
    /// Dump the structure constants of the orbit algebra of one automorphism.
    Orbit { file: PathBuf, auto: String },
    /// Build both orbit algebras and verify a graded isomorphism between them.
    /// Without AUTO2 the second side is the twisted extension of AUTO1.
    Verify {
        file: PathBuf,
        auto1: String,
        auto2: Option<String>,
    },
    /// Dump the algebra basis and the composition table of a window.
    Dump {
        file: PathBuf,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
}

/// Parses `lo..hi` (inclusive, `lo <= hi`).
pub fn parse_window(text: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, found `{text}`"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad level `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad level `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn input_error(e: &Error) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Outcome::input_error(&e),
    }
}

fn load(file: &PathBuf) -> Result<(Problem, Algebra)> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", file.display())))?;
    let problem = Problem::parse(&text)?;
    let alg = problem.algebra()?;
    Ok((problem, alg))
}

fn render(format: Format, text: Vec<String>, value: serde_json::Value) -> String {
    match format {
        Format::Text => text.into_iter().map(|l| l + "\n").collect(),
        Format::Json => serde_json::to_string_pretty(&value).expect("plain json") + "\n",
    }
}

fn tuple(rho: &RhoMap) -> String {
    let parts: Vec<String> = rho.values().iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn rho_lines(alg: &Algebra, rho: &WindowRho, lo: i64, hi: i64) -> (Vec<String>, serde_json::Value) {
    let nv = alg.quiver().vertex_count();
    let mut lines = Vec::new();
    let mut rows = serde_json::Map::new();
    for level in lo..=hi {
        if let Some(row) = rho.level(level, nv) {
            lines.push(format!("  level {level}: {}", tuple(&row)));
            rows.insert(level.to_string(), json!(strings(&row)));
        }
    }
    (lines, serde_json::Value::Object(rows))
}

fn strings(rho: &RhoMap) -> Vec<String> {
    rho.values().iter().map(|s| s.to_string()).collect()
}

fn default_window(jump: i64, window: Option<(i64, i64)>) -> (i64, i64) {
    window.unwrap_or_else(|| orbit_levels(jump.abs().max(1)))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Cycles { file, max_cycle_len } => {
            let (_, alg) = load(file)?;
            cmd_cycles(&alg, *max_cycle_len, format)
        }
        Command::Check {
            file,
            auto1,
            auto2,
            window,
            max_cycle_len,
        } => {
            let (p, alg) = load(file)?;
            let (phi, psi) = (p.auto(&alg, auto1)?, p.auto(&alg, auto2)?);
            cmd_check(&alg, &phi, &psi, *window, *max_cycle_len, format)
        }
        Command::Rho {
            file,
            auto1,
            auto2,
            window,
        } => {
            let (p, alg) = load(file)?;
            let (phi, psi) = (p.auto(&alg, auto1)?, p.auto(&alg, auto2)?);
            cmd_rho(&alg, &phi, &psi, *window, format)
        }
        Command::Orbit { file, auto } => {
            let (p, alg) = load(file)?;
            cmd_orbit(&alg, &p.auto(&alg, auto)?, format)
        }
        Command::Verify { file, auto1, auto2 } => {
            let (p, alg) = load(file)?;
            let phi = p.auto(&alg, auto1)?;
            let psi = match auto2 {
                Some(name) => p.auto(&alg, name)?,
                None => {
                    let (n, phi_l) = phi.decompose();
                    JumpAuto::hat_lift(phi_l.psi()?).with_jump(n)
                }
            };
            cmd_verify(&alg, &phi, &psi, format)
        }
        Command::Dump { file, window } => {
            let (_, alg) = load(file)?;
            cmd_dump(&alg, window.unwrap_or((-1, 1)), format)
        }
    }
}

fn cmd_cycles(alg: &Algebra, max_len: Option<usize>, format: Format) -> Result<Outcome> {
    let q = alg.quiver();
    let reps: Vec<String> = enumerate_simple_cycles(q)
        .iter()
        .map(|c| c.display(q).to_string())
        .collect();
    let mut lines = if reps.is_empty() {
        vec!["no simple cycles".to_string()]
    } else {
        reps.clone()
    };
    let mut value = json!({ "simple_cycles": reps });
    if let Some(bound) = max_len {
        let total = enumerate_all_cycles(q, bound).len();
        let classes = simple_cycle_classes_by_search(q, bound).len();
        lines.push(format!("closed walks up to length {bound}: {total}"));
        lines.push(format!("simple classes found by search: {classes}"));
        value["closed_walks"] = json!(total);
        value["classes_by_search"] = json!(classes);
    }
    Ok(Outcome::ok(render(format, lines, value)))
}

fn cmd_check(
    alg: &Algebra,
    phi: &JumpAuto,
    psi: &JumpAuto,
    window: Option<(i64, i64)>,
    max_len: Option<usize>,
    format: Format,
) -> Result<Outcome> {
    require_same_objects(alg, phi, psi)?;
    let (n, phi_l) = phi.decompose();
    let (_, psi_l) = psi.decompose();
    let (g, h) = (phi_l.psi()?, psi_l.psi()?);
    let verdict = decide(alg, &g, &h)?;

    let mut oracle_lines = Vec::new();
    let mut oracle_json = serde_json::Value::Null;
    if let Some(bound) = max_len {
        let agree = match scaling_condition(alg, &g, &h)? {
            Ok(e) => all_closed_walks_pass(alg.quiver(), &e, bound) == verdict.is_ok(),
            Err(_) => verdict.is_err(),
        };
        let word = if agree { "agrees" } else { "DISAGREES" };
        oracle_lines.push(format!("oracle: closed walks up to length {bound} {word}"));
        oracle_json = json!({ "bound": bound, "agrees": agree });
    }

    match verdict {
        Err(failure) => {
            let mut lines = vec!["not equivalent".to_string(), failure.to_string()];
            lines.extend(oracle_lines);
            let value = json!({
                "verdict": "not equivalent",
                "failure": failure.to_string(),
                "oracle": oracle_json,
            });
            Ok(Outcome {
                stdout: render(format, lines, value),
                stderr: String::new(),
                code: EXIT_NOT_EQUIVALENT,
            })
        }
        Ok(rho0) => {
            let (lo, hi) = default_window(n, window);
            let rho = rho_on_window(alg, phi, psi, &rho0, lo, hi)?;
            let (rows, rows_json) = rho_lines(alg, &rho, lo, hi);
            let mut lines = vec![
                "equivalent".to_string(),
                format!("jump {n}"),
                format!("rho0 = {}", tuple(&rho0)),
                format!("rho on levels {lo}..{hi}:"),
            ];
            lines.extend(rows);
            lines.extend(oracle_lines);
            let value = json!({
                "verdict": "equivalent",
                "jump": n,
                "rho0": strings(&rho0),
                "window": [lo, hi],
                "rho": rows_json,
                "oracle": oracle_json,
            });
            Ok(Outcome::ok(render(format, lines, value)))
        }
    }
}

fn cmd_rho(
    alg: &Algebra,
    phi: &JumpAuto,
    psi: &JumpAuto,
    window: Option<(i64, i64)>,
    format: Format,
) -> Result<Outcome> {
    require_same_objects(alg, phi, psi)?;
    let (n, phi_l) = phi.decompose();
    let (_, psi_l) = psi.decompose();
    match decide(alg, &phi_l.psi()?, &psi_l.psi()?)? {
        Err(failure) => Ok(Outcome {
            stdout: render(
                format,
                vec![format!("no rho: {failure}")],
                json!({ "failure": failure.to_string() }),
            ),
            stderr: String::new(),
            code: EXIT_NOT_EQUIVALENT,
        }),
        Ok(rho0) => {
            let (lo, hi) = default_window(n, window);
            let rho = rho_on_window(alg, phi, psi, &rho0, lo, hi)?;
            let (lines, value) = rho_lines(alg, &rho, lo, hi);
            let lines = lines.into_iter().map(|l| l.trim_start().to_string()).collect();
            Ok(Outcome::ok(render(format, lines, value)))
        }
    }
}

fn cmd_orbit(alg: &Algebra, phi: &JumpAuto, format: Format) -> Result<Outcome> {
    if phi.jump() == 0 {
        return Err(Error::ZeroJump);
    }
    let (lo, hi) = orbit_levels(phi.jump());
    let w = RepetitiveWindow::new(alg, lo, hi);
    let table = structure_table(&build_orbit(&w, phi)?);
    let value = serde_json::to_value(&table).expect("plain json");
    Ok(Outcome::ok(render(format, table.lines(), value)))
}

fn cmd_verify(alg: &Algebra, phi: &JumpAuto, psi: &JumpAuto, format: Format) -> Result<Outcome> {
    if phi.jump() == 0 {
        return Err(Error::ZeroJump);
    }
    match certify(alg, phi, psi)? {
        Verdict::NotIsomorphic(failure) => Ok(Outcome {
            stdout: render(
                format,
                vec![format!("criterion: failed, {failure}"), "not isomorphic".into()],
                json!({ "verdict": "not isomorphic", "failure": failure.to_string() }),
            ),
            stderr: String::new(),
            code: EXIT_NOT_EQUIVALENT,
        }),
        Verdict::Isomorphic(cert) => {
            let (lo, hi) = cert.rho.levels().unwrap_or((0, 0));
            let (src, dst, _) = cert.orbits.as_ref().expect("nonzero jump");
            let lines = vec![
                format!("criterion: passed, rho0 = {}", tuple(&cert.rho0)),
                format!("extend: rho valid on levels {lo}..{hi}"),
                format!("eta: {} values", cert.eta.len()),
                format!("orbits: dimensions {} and {}", src.dim(), dst.dim()),
                format!("iso: multiplicative on {} products", src.products().count()),
                "isomorphic (graded)".into(),
            ];
            let value = json!({
                "verdict": "isomorphic (graded)",
                "jump": cert.jump,
                "rho0": strings(&cert.rho0),
                "dims": [src.dim(), dst.dim()],
            });
            Ok(Outcome::ok(render(format, lines, value)))
        }
    }
}

fn cmd_dump(alg: &Algebra, (lo, hi): (i64, i64), format: Format) -> Result<Outcome> {
    let q = alg.quiver();
    let w = RepetitiveWindow::new(alg, lo, hi);
    let mut lines = Vec::new();
    let mut paths = Vec::new();
    for p in alg.path_ids() {
        let path = alg.path(p);
        let (name, s, t) = (
            alg.display_path(p),
            q.vertex_name(path.source),
            q.vertex_name(path.target),
        );
        lines.push(format!("path {name} : {s} -> {t}"));
        paths.push(json!({ "name": name, "source": s, "target": t }));
    }
    let mut products: Vec<(String, String, String)> = w
        .products()
        .map(|(g, f, c)| (g.display(alg), f.display(alg), combination(alg, c)))
        .collect();
    products.sort();
    for (g, f, c) in &products {
        lines.push(format!("{g} o {f} = {c}"));
    }
    let value = json!({
        "dim": alg.dim(),
        "paths": paths,
        "window": [lo, hi],
        "products": products
            .iter()
            .map(|(g, f, c)| json!({ "left": g, "right": f, "value": c }))
            .collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(render(format, lines, value)))
}

fn combination(alg: &Algebra, c: &HatElement) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<String> = c
        .iter()
        .map(|(b, s)| format!("{s} {}", b.display(alg)))
        .collect();
    terms.sort();
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows_parse() {
        assert_eq!(parse_window("-3..3"), Ok((-3, 3)));
        assert_eq!(parse_window("0..0"), Ok((0, 0)));
        assert!(parse_window("2..1").is_err());
        assert!(parse_window("1-2").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
