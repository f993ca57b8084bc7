//! Quivers, walks in the double quiver, and simple cycles.
//!
//! Walks are stored in traversal order (first step first) but displayed as
//! composites written right to left, so the walk "a then b" prints as `b*a`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num::One;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

/// Per-arrow nonzero scalars, e.g. the diagonal of a scaling automorphism.
pub type ArrowScalars = BTreeMap<ArrowId, Scalar>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    // double-quiver adjacency: steps leaving each vertex, in arrow order
    out_steps: Vec<Vec<(Step, VertexId)>>,
}

impl Quiver {
    /// Builds a quiver from named vertices and `(name, source, target)` arrows.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), VertexId(i)).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut names = BTreeSet::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            let (name, s, t) = (name.as_ref(), s.as_ref(), t.as_ref());
            if !names.insert(name.to_string()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
            }
            let lookup = |v: &str| {
                index.get(v).copied().ok_or_else(|| {
                    Error::InvalidQuiver(format!("arrow `{name}` uses undeclared vertex `{v}`"))
                })
            };
            built.push(Arrow {
                name: name.to_string(),
                source: lookup(s)?,
                target: lookup(t)?,
            });
        }
        Ok(Self::assemble(vertices, built))
    }

    /// Vertices named `1..=n`, arrows named `a0, a1, ...`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| {
                assert!(s < n && t < n, "edge endpoint out of range");
                Arrow {
                    name: format!("a{i}"),
                    source: VertexId(s),
                    target: VertexId(t),
                }
            })
            .collect();
        Self::assemble(vertices, arrows)
    }

    fn assemble(vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        let mut out_steps = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            let id = ArrowId(i);
            out_steps[a.source.0].push((Step::forward(id), a.target));
            out_steps[a.target.0].push((Step::inverse(id), a.source));
        }
        Quiver {
            vertices,
            arrows,
            out_steps,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name).map(VertexId)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn step_source(&self, step: Step) -> VertexId {
        match step.dir {
            Direction::Forward => self.source(step.arrow),
            Direction::Inverse => self.target(step.arrow),
        }
    }

    pub fn step_target(&self, step: Step) -> VertexId {
        match step.dir {
            Direction::Forward => self.target(step.arrow),
            Direction::Inverse => self.source(step.arrow),
        }
    }

    /// Steps of the double quiver leaving `v`, with their targets.
    pub fn steps_from(&self, v: VertexId) -> &[(Step, VertexId)] {
        &self.out_steps[v.0]
    }

    pub fn step_name(&self, step: Step) -> String {
        let name = &self.arrows[step.arrow.0].name;
        match step.dir {
            Direction::Forward => name.clone(),
            Direction::Inverse => format!("{name}^-1"),
        }
    }

    /// The double quiver: every arrow `a` plus a formal reverse `a^-1`.
    pub fn double(&self) -> Quiver {
        let mut arrows = self.arrows.clone();
        arrows.extend(self.arrows.iter().map(|a| Arrow {
            name: format!("{}^-1", a.name),
            source: a.target,
            target: a.source,
        }));
        Self::assemble(self.vertices.clone(), arrows)
    }

    /// Connected components of the underlying graph, each sorted, in order of least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for v in self.vertex_ids() {
            if seen[v.0] {
                continue;
            }
            seen[v.0] = true;
            let mut comp = vec![v];
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for &(_, w) in self.steps_from(u) {
                    if !seen[w.0] {
                        seen[w.0] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Inverse,
}

/// An arrow of the double quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub arrow: ArrowId,
    pub dir: Direction,
}

impl Step {
    pub fn forward(arrow: ArrowId) -> Self {
        Step {
            arrow,
            dir: Direction::Forward,
        }
    }

    pub fn inverse(arrow: ArrowId) -> Self {
        Step {
            arrow,
            dir: Direction::Inverse,
        }
    }

    pub fn flip(self) -> Self {
        let dir = match self.dir {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        };
        Step { dir, ..self }
    }
}

/// A path in the double quiver. Empty walks keep their anchor vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    start: VertexId,
    end: VertexId,
    steps: Vec<Step>,
}

impl Walk {
    pub fn empty(at: VertexId) -> Self {
        Walk {
            start: at,
            end: at,
            steps: Vec::new(),
        }
    }

    pub fn new(q: &Quiver, start: VertexId, steps: Vec<Step>) -> Result<Self> {
        let mut at = start;
        for (i, &step) in steps.iter().enumerate() {
            if q.step_source(step) != at {
                return Err(Error::InvalidWalk(format!(
                    "step {} ({}) does not start at `{}`",
                    i + 1,
                    q.step_name(step),
                    q.vertex_name(at)
                )));
            }
            at = q.step_target(step);
        }
        Ok(Walk {
            start,
            end: at,
            steps,
        })
    }

    /// Walk from steps alone; the start is the source of the first step.
    pub fn from_steps(q: &Quiver, steps: Vec<Step>) -> Result<Self> {
        let first = steps
            .first()
            .ok_or_else(|| Error::InvalidWalk("empty step list has no anchor".into()))?;
        Self::new(q, q.step_source(*first), steps)
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Reverse order, flip every step.
    pub fn inverse(&self) -> Walk {
        Walk {
            start: self.end,
            end: self.start,
            steps: self.steps.iter().rev().map(|s| s.flip()).collect(),
        }
    }

    /// `self` followed by `next` (the composite `next * self`).
    pub fn then(&self, next: &Walk) -> Result<Walk> {
        if self.end != next.start {
            return Err(Error::InvalidWalk("walks are not composable".into()));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&next.steps);
        Ok(Walk {
            start: self.start,
            end: next.end,
            steps,
        })
    }

    pub fn push(&mut self, q: &Quiver, step: Step) -> Result<()> {
        if q.step_source(step) != self.end {
            return Err(Error::InvalidWalk("step is not composable".into()));
        }
        self.steps.push(step);
        self.end = q.step_target(step);
        Ok(())
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> WalkDisplay<'a> {
        WalkDisplay { walk: self, q }
    }
}

pub struct WalkDisplay<'a> {
    walk: &'a Walk,
    q: &'a Quiver,
}

impl fmt::Display for WalkDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.walk.is_empty() {
            return write!(f, "e_{}", self.q.vertex_name(self.walk.start));
        }
        let parts: Vec<String> = self
            .walk
            .steps
            .iter()
            .rev()
            .map(|&s| self.q.step_name(s))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A nonempty closed walk.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Walk);

impl Cycle {
    pub fn new(walk: Walk) -> Result<Self> {
        if walk.is_empty() {
            return Err(Error::InvalidWalk("a cycle must be nonempty".into()));
        }
        if walk.start != walk.end {
            return Err(Error::InvalidWalk("walk is not closed".into()));
        }
        Ok(Cycle(walk))
    }

    pub fn from_steps(q: &Quiver, steps: Vec<Step>) -> Result<Self> {
        Self::new(Walk::from_steps(q, steps)?)
    }

    pub fn walk(&self) -> &Walk {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Visited start vertices are pairwise distinct.
    pub fn is_simple(&self, q: &Quiver) -> bool {
        let mut seen = BTreeSet::new();
        self.0.steps.iter().all(|&s| seen.insert(q.step_source(s)))
    }

    /// A length-2 cycle of the form `a^-1 * a`.
    pub fn is_backtrack(&self) -> bool {
        self.0.steps.len() == 2 && self.0.steps[1] == self.0.steps[0].flip()
    }

    /// The rotation `C[shift]`: the cycle restarted after its first `shift` steps.
    pub fn rotate(&self, q: &Quiver, shift: usize) -> Result<Cycle> {
        let len = self.len();
        if shift == 0 || shift > len {
            return Err(Error::ShiftOutOfRange { shift, len });
        }
        let mut steps = self.0.steps.clone();
        steps.rotate_left(shift % len);
        let start = q.step_source(steps[0]);
        Ok(Cycle(Walk {
            start,
            end: start,
            steps,
        }))
    }

    pub fn inverse(&self) -> Cycle {
        Cycle(self.0.inverse())
    }

    /// All rotations of the cycle and of its inverse, as step sequences.
    fn orbit_sequences(&self) -> impl Iterator<Item = Vec<Step>> + '_ {
        let inv = self.0.inverse();
        let len = self.len();
        (0..len).flat_map(move |c| {
            let mut fwd = self.0.steps.clone();
            fwd.rotate_left(c);
            let mut bwd = inv.steps.clone();
            bwd.rotate_left(c);
            [fwd, bwd]
        })
    }

    /// The lexicographically least rotation/inversion.
    pub fn canonical(&self, q: &Quiver) -> Cycle {
        let best = self
            .orbit_sequences()
            .min()
            .expect("cycles are nonempty");
        let start = q.step_source(best[0]);
        Cycle(Walk {
            start,
            end: start,
            steps: best,
        })
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> WalkDisplay<'a> {
        self.0.display(q)
    }
}

/// Same length, and some rotation of `c1` equals `c2` or its inverse.
pub fn cycles_equivalent(q: &Quiver, c1: &Cycle, c2: &Cycle) -> bool {
    if c1.len() != c2.len() {
        return false;
    }
    let inv = c2.inverse();
    (1..=c1.len()).any(|c| {
        let r = c1.rotate(q, c).expect("shift within range");
        r == *c2 || r == inv
    })
}

/// One canonical representative per equivalence class of simple cycles.
///
/// Backtracking cycles `a^-1 * a` are excluded: they evaluate to 1 under every
/// scalar family. Classes appear in order of discovery by a depth-first search
/// rooted at each vertex in turn, visiting only vertices after the root.
pub fn enumerate_simple_cycles(q: &Quiver) -> Vec<Cycle> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut on_path = vec![false; q.vertex_count()];
    for root in q.vertex_ids() {
        let mut steps = Vec::new();
        on_path[root.0] = true;
        simple_cycle_dfs(q, root, root, &mut steps, &mut on_path, &mut seen, &mut out);
        on_path[root.0] = false;
    }
    out
}

fn simple_cycle_dfs(
    q: &Quiver,
    root: VertexId,
    at: VertexId,
    steps: &mut Vec<Step>,
    on_path: &mut [bool],
    seen: &mut BTreeSet<Vec<Step>>,
    out: &mut Vec<Cycle>,
) {
    for &(step, next) in q.steps_from(at) {
        if next == root {
            steps.push(step);
            let cycle = Cycle(Walk {
                start: root,
                end: root,
                steps: steps.clone(),
            });
            steps.pop();
            if cycle.is_backtrack() {
                continue;
            }
            let canon = cycle.canonical(q);
            if seen.insert(canon.0.steps.clone()) {
                out.push(canon);
            }
        } else if next > root && !on_path[next.0] && steps.len() + 1 < q.vertex_count() {
            on_path[next.0] = true;
            steps.push(step);
            simple_cycle_dfs(q, root, next, steps, on_path, seen, out);
            steps.pop();
            on_path[next.0] = false;
        }
    }
}

/// Product of arrow scalars along a walk, inverting on reversed steps.
pub fn walk_value(scalars: &ArrowScalars, walk: &Walk) -> Result<Scalar> {
    let mut value = Scalar::one();
    for step in walk.steps() {
        let s = scalars
            .get(&step.arrow)
            .ok_or_else(|| Error::MissingScalar(format!("#{}", step.arrow.0)))?;
        match step.dir {
            Direction::Forward => value *= s,
            Direction::Inverse => value /= s,
        }
    }
    Ok(value)
}

/// Walks from a chosen base vertex to every vertex of one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningWalks {
    pub base: VertexId,
    pub walks: BTreeMap<VertexId, Walk>,
}

/// Breadth-first spanning walks, one tree per connected component, based at
/// the least vertex of the component.
pub fn spanning_walks(q: &Quiver) -> Vec<SpanningWalks> {
    q.components()
        .into_iter()
        .map(|comp| {
            let base = comp[0];
            let mut walks = BTreeMap::from([(base, Walk::empty(base))]);
            let mut queue = VecDeque::from([base]);
            while let Some(u) = queue.pop_front() {
                for &(step, w) in q.steps_from(u) {
                    if walks.contains_key(&w) {
                        continue;
                    }
                    let mut walk = walks[&u].clone();
                    walk.push(q, step).expect("adjacent step");
                    walks.insert(w, walk);
                    queue.push_back(w);
                }
            }
            SpanningWalks { base, walks }
        })
        .collect()
}
