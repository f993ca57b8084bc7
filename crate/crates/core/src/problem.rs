//! Line-oriented problem files: a quiver, zero relations, and named
//! automorphisms.
//!
//! ```text
//! [quiver]
//! vertices = 1 2 3
//! arrow alpha = 1 -> 2
//! arrow beta = 2 -> 3
//!
//! [relations]
//! zero = alpha beta
//!
//! [auto psi]
//! jump = 1
//! scale alpha = 2
//! vertex 1 = 1
//! arrow alpha = alpha
//! lambda -1 2 = 1/2
//! ```
//!
//! Relations list arrows in traversal order. Unlisted scales and level
//! scalars default to 1, unlisted vertex and arrow images to the identity.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{Algebra, ScalingAuto};
use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver, VertexId};
use crate::repetitive::{JumpAuto, LevelScalars};
use crate::scalar::{parse_unit, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AutoSection {
    pub name: String,
    pub jump: i64,
    pub scales: BTreeMap<String, Scalar>,
    pub vertex_map: BTreeMap<String, String>,
    pub arrow_map: BTreeMap<String, String>,
    pub lambda: BTreeMap<(i64, String), Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Problem {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<Vec<String>>,
    pub autos: Vec<AutoSection>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Quiver,
    Relations,
    Auto,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn split_entry(text: &str, line: usize) -> Result<(&str, &str)> {
    match text.split_once('=') {
        Some((k, v)) => Ok((k.trim(), v.trim())),
        None => err(line, format!("expected `key = value`, found `{text}`")),
    }
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem> {
        let mut p = Problem::default();
        let mut section = Section::None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(header) = content.strip_prefix('[') {
                let header = header
                    .strip_suffix(']')
                    .ok_or(Error::Parse {
                        line,
                        msg: "unterminated section header".into(),
                    })?
                    .trim();
                section = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
                    ["quiver"] => Section::Quiver,
                    ["relations"] => Section::Relations,
                    ["auto", name] => {
                        if p.vertices.is_empty() {
                            return err(line, "automorphisms must follow the quiver section");
                        }
                        if p.autos.iter().any(|a| a.name == *name) {
                            return err(line, format!("duplicate automorphism `{name}`"));
                        }
                        p.autos.push(AutoSection {
                            name: name.to_string(),
                            ..AutoSection::default()
                        });
                        Section::Auto
                    }
                    _ => return err(line, format!("unknown section `[{header}]`")),
                };
                continue;
            }
            let (key, value) = split_entry(content, line)?;
            let words: Vec<&str> = key.split_whitespace().collect();
            match section {
                Section::None => return err(line, "entry outside of any section"),
                Section::Quiver => p.quiver_entry(&words, value, line)?,
                Section::Relations => p.relation_entry(&words, value, line)?,
                Section::Auto => p.auto_entry(&words, value, line)?,
            }
        }
        if p.vertices.is_empty() {
            return err(text.lines().count().max(1), "no vertices declared");
        }
        Ok(p)
    }

    fn has_vertex(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| x == v)
    }

    fn has_arrow(&self, a: &str) -> bool {
        self.arrows.iter().any(|x| x.0 == a)
    }

    fn quiver_entry(&mut self, words: &[&str], value: &str, line: usize) -> Result<()> {
        match words {
            ["vertices"] => {
                for v in value.split_whitespace() {
                    if self.has_vertex(v) {
                        return err(line, format!("duplicate vertex `{v}`"));
                    }
                    self.vertices.push(v.to_string());
                }
            }
            ["arrow", name] => {
                let Some((s, t)) = value.split_once("->") else {
                    return err(line, "expected `arrow NAME = SOURCE -> TARGET`");
                };
                let (s, t) = (s.trim(), t.trim());
                for v in [s, t] {
                    if !self.has_vertex(v) {
                        return err(line, format!("arrow `{name}` uses undeclared vertex `{v}`"));
                    }
                }
                if self.has_arrow(name) {
                    return err(line, format!("duplicate arrow `{name}`"));
                }
                self.arrows.push((name.to_string(), s.to_string(), t.to_string()));
            }
            _ => return err(line, format!("unknown quiver entry `{}`", words.join(" "))),
        }
        Ok(())
    }

    fn relation_entry(&mut self, words: &[&str], value: &str, line: usize) -> Result<()> {
        if words != ["zero"] {
            return err(line, "expected `zero = ARROW ARROW ...`");
        }
        let rel: Vec<String> = value.split_whitespace().map(str::to_string).collect();
        if let Some(a) = rel.iter().find(|a| !self.has_arrow(a)) {
            return err(line, format!("relation uses undeclared arrow `{a}`"));
        }
        self.relations.push(rel);
        Ok(())
    }

    fn auto_entry(&mut self, words: &[&str], value: &str, line: usize) -> Result<()> {
        let unit = |text: &str| {
            parse_unit(text).ok_or(Error::Parse {
                line,
                msg: format!("`{text}` is not a nonzero rational p/q"),
            })
        };
        let vertex_ok = self.vertices.clone();
        let arrow_ok: Vec<String> = self.arrows.iter().map(|a| a.0.clone()).collect();
        let need_vertex = |v: &str| {
            if vertex_ok.iter().any(|x| x == v) {
                Ok(v.to_string())
            } else {
                err(line, format!("undeclared vertex `{v}`"))
            }
        };
        let need_arrow = |a: &str| {
            if arrow_ok.iter().any(|x| x == a) {
                Ok(a.to_string())
            } else {
                err(line, format!("undeclared arrow `{a}`"))
            }
        };
        let auto = self.autos.last_mut().expect("inside an auto section");
        match words {
            ["jump"] => {
                auto.jump = value.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{value}` is not an integer"),
                })?;
            }
            ["scale", a] => {
                auto.scales.insert(need_arrow(a)?, unit(value)?);
            }
            ["vertex", v] => {
                auto.vertex_map.insert(need_vertex(v)?, need_vertex(value)?);
            }
            ["arrow", a] => {
                auto.arrow_map.insert(need_arrow(a)?, need_arrow(value)?);
            }
            ["lambda", level, v] => {
                let level: i64 = level.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{level}` is not a level"),
                })?;
                auto.lambda.insert((level, need_vertex(v)?), unit(value)?);
            }
            _ => return err(line, format!("unknown automorphism entry `{}`", words.join(" "))),
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("[quiver]\n");
        let _ = writeln!(out, "vertices = {}", self.vertices.join(" "));
        for (name, s, t) in &self.arrows {
            let _ = writeln!(out, "arrow {name} = {s} -> {t}");
        }
        if !self.relations.is_empty() {
            out.push_str("\n[relations]\n");
            for rel in &self.relations {
                let _ = writeln!(out, "zero = {}", rel.join(" "));
            }
        }
        for auto in &self.autos {
            let _ = writeln!(out, "\n[auto {}]", auto.name);
            let _ = writeln!(out, "jump = {}", auto.jump);
            for (a, s) in &auto.scales {
                let _ = writeln!(out, "scale {a} = {s}");
            }
            for (v, w) in &auto.vertex_map {
                let _ = writeln!(out, "vertex {v} = {w}");
            }
            for (a, b) in &auto.arrow_map {
                let _ = writeln!(out, "arrow {a} = {b}");
            }
            for ((level, v), s) in &auto.lambda {
                let _ = writeln!(out, "lambda {level} {v} = {s}");
            }
        }
        out
    }

    pub fn algebra(&self) -> Result<Algebra> {
        let q = Quiver::new(&self.vertices, &self.arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|a| q.arrow_by_name(a).expect("checked while parsing"))
                    .collect()
            })
            .collect();
        Algebra::new(q, relations)
    }

    pub fn auto_names(&self) -> Vec<&str> {
        self.autos.iter().map(|a| a.name.as_str()).collect()
    }

    pub fn auto_section(&self, name: &str) -> Result<&AutoSection> {
        self.autos.iter().find(|a| a.name == name).ok_or_else(|| {
            Error::Input(format!(
                "no automorphism named `{name}` (have: {})",
                self.auto_names().join(", ")
            ))
        })
    }

    pub fn auto(&self, alg: &Algebra, name: &str) -> Result<JumpAuto> {
        let section = self.auto_section(name)?;
        let q = alg.quiver();
        let vertex = |v: &str| q.vertex_by_name(v).expect("checked while parsing");
        let arrow = |a: &str| q.arrow_by_name(a).expect("checked while parsing");
        let mut vertex_perm: Vec<VertexId> = q.vertex_ids().collect();
        for (v, w) in &section.vertex_map {
            vertex_perm[vertex(v).0] = vertex(w);
        }
        let mut arrow_perm: Vec<ArrowId> = q.arrow_ids().collect();
        for (a, b) in &section.arrow_map {
            arrow_perm[arrow(a).0] = arrow(b);
        }
        let mut scalars = vec![Scalar::from_integer(1.into()); q.arrow_count()];
        for (a, s) in &section.scales {
            scalars[arrow(a).0] = s.clone();
        }
        let sigma = ScalingAuto::new(alg, vertex_perm, arrow_perm, scalars).map_err(|e| {
            Error::Input(format!("automorphism `{name}`: {e}"))
        })?;
        let mut lambda = LevelScalars::new();
        for ((level, v), s) in &section.lambda {
            lambda.set(*level, vertex(v), s.clone());
        }
        Ok(JumpAuto::new(section.jump, sigma, lambda))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    const SAMPLE: &str = "\
# two-cycle with both composites zero
[quiver]
vertices = 1 2
arrow a = 1 -> 2
arrow b = 2 -> 1

[relations]
zero = a b
zero = b a

[auto phi]
jump = 1
scale a = 2
scale b = 3

[auto swap]
jump = 1
vertex 1 = 2
vertex 2 = 1
arrow a = b
arrow b = a
lambda 0 1 = -1/2
";

    #[test]
    fn parses_and_builds() {
        let p = Problem::parse(SAMPLE).unwrap();
        assert_eq!(p.vertices, ["1", "2"]);
        assert_eq!(p.relations.len(), 2);
        let alg = p.algebra().unwrap();
        assert_eq!(alg.dim(), 4);
        let phi = p.auto(&alg, "phi").unwrap();
        assert_eq!(phi.jump(), 1);
        assert_eq!(phi.sigma().scalars(), &[int(2), int(3)]);
        let swap = p.auto(&alg, "swap").unwrap();
        assert_eq!(swap.sigma().vertex(VertexId(0)), VertexId(1));
        assert_eq!(swap.lambda().get(0, VertexId(0)), ratio(-1, 2));
        assert!(matches!(p.auto(&alg, "nope"), Err(Error::Input(_))));
    }

    #[test]
    fn round_trips() {
        let p = Problem::parse(SAMPLE).unwrap();
        assert_eq!(Problem::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "[quiver]\nvertices = 1 2\narrow a = 1 -> 7\n";
        assert!(matches!(Problem::parse(bad), Err(Error::Parse { line: 3, .. })));
        let bad = "[quiver]\nvertices = 1\n[auto f]\nscale a = 2\n";
        assert!(matches!(Problem::parse(bad), Err(Error::Parse { line: 4, .. })));
        let bad = "[quiver]\nvertices = 1 2\narrow a = 1 -> 2\n[auto f]\nscale a = 1/0\n";
        assert!(matches!(Problem::parse(bad), Err(Error::Parse { line: 5, .. })));
        let bad = "vertices = 1\n";
        assert!(matches!(Problem::parse(bad), Err(Error::Parse { line: 1, .. })));
        let bad = "[quiver]\nvertices = 1 2\narrow a = 1 2\n";
        assert!(matches!(Problem::parse(bad), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn incompatible_permutations_are_input_errors() {
        let text = "[quiver]\nvertices = 1 2\narrow a = 1 -> 2\n[auto f]\nvertex 1 = 2\nvertex 2 = 1\n";
        let p = Problem::parse(text).unwrap();
        let alg = p.algebra().unwrap();
        assert!(matches!(p.auto(&alg, "f"), Err(Error::Input(_))));
    }
}
