//! Brute-force counterparts of the constructive routines.

use std::collections::HashSet;

use num::One;
use serde::Serialize;

use crate::orbit::GradedAlgebra;
use crate::quiver::{cycles_equivalent, walk_value, ArrowScalars, Cycle, Direction, Quiver, Walk};
use crate::scalar::Scalar;

/// Every closed walk up to a length bound, without quotienting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInventory {
    pub max_len: usize,
    pub cycles: Vec<Cycle>,
}

impl CycleInventory {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Exhaustive search of closed walks of length `1..=max_len` from every vertex.
pub fn enumerate_all_cycles(q: &Quiver, max_len: usize) -> CycleInventory {
    let mut cycles = Vec::new();
    for start in q.vertex_ids() {
        let mut stack = vec![Walk::empty(start)];
        while let Some(walk) = stack.pop() {
            if walk.len() == max_len {
                continue;
            }
            for &(step, _) in q.steps_from(walk.end()) {
                let mut next = walk.clone();
                next.push(q, step).expect("step leaves the current end");
                if next.end() == start {
                    cycles.push(Cycle::new(next.clone()).expect("closed and nonempty"));
                }
                stack.push(next);
            }
        }
    }
    cycles.sort();
    CycleInventory { max_len, cycles }
}

pub fn first_failing_inventoried(e: &ArrowScalars, inv: &CycleInventory) -> Option<Cycle> {
    inv.cycles
        .iter()
        .find(|c| !walk_value(e, c.walk()).expect("scalars cover every arrow").is_one())
        .cloned()
}

pub fn all_cycles_pass(e: &ArrowScalars, inv: &CycleInventory) -> bool {
    first_failing_inventoried(e, inv).is_none()
}

/// The same verdict as [`all_cycles_pass`] on the inventory of length
/// `bound`, computed by propagating the set of walk values reachable at each
/// vertex instead of listing walks.
pub fn all_closed_walks_pass(q: &Quiver, e: &ArrowScalars, bound: usize) -> bool {
    let n = q.vertex_count();
    for start in q.vertex_ids() {
        let mut frontier: Vec<HashSet<Scalar>> = vec![HashSet::new(); n];
        frontier[start.0].insert(Scalar::one());
        for _ in 0..bound {
            let mut next: Vec<HashSet<Scalar>> = vec![HashSet::new(); n];
            for v in q.vertex_ids() {
                for value in &frontier[v.0] {
                    for &(step, w) in q.steps_from(v) {
                        let s = &e[&step.arrow];
                        let moved = match step.dir {
                            Direction::Forward => value * s,
                            Direction::Inverse => value / s,
                        };
                        next[w.0].insert(moved);
                    }
                }
            }
            if next[start.0].iter().any(|v| !v.is_one()) {
                return false;
            }
            frontier = next;
        }
    }
    true
}

/// Simple, non-backtracking cycles found by exhaustive search, grouped by
/// equivalence; one member (the first found) per class.
pub fn simple_cycle_classes_by_search(q: &Quiver, max_len: usize) -> Vec<Cycle> {
    let mut classes: Vec<Cycle> = Vec::new();
    for c in enumerate_all_cycles(q, max_len).cycles {
        if !c.is_simple(q) || c.is_backtrack() {
            continue;
        }
        if !classes.iter().any(|k| cycles_equivalent(q, k, &c)) {
            classes.push(c);
        }
    }
    classes
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisRow {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductRow {
    pub left: String,
    pub right: String,
    /// `(coefficient, basis name)` pairs, sorted by name; empty means zero.
    pub terms: Vec<(String, String)>,
}

/// An order-normalized listing of a graded algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureTable {
    pub jump: i64,
    pub dim: usize,
    pub basis: Vec<BasisRow>,
    pub products: Vec<ProductRow>,
}

impl StructureTable {
    /// One line per basis element, then one line per composable pair.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("jump {} dim {}", self.jump, self.dim)];
        for b in &self.basis {
            out.push(format!(
                "basis {} : {} -> {} degree {}",
                b.name, b.source, b.target, b.degree
            ));
        }
        for p in &self.products {
            let rhs = if p.terms.is_empty() {
                "0".to_string()
            } else {
                p.terms
                    .iter()
                    .map(|(c, n)| format!("{c} {n}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            out.push(format!("{} * {} = {}", p.left, p.right, rhs));
        }
        out
    }
}

pub fn structure_table(g: &GradedAlgebra) -> StructureTable {
    let mut basis: Vec<BasisRow> = g
        .basis()
        .iter()
        .enumerate()
        .map(|(i, b)| BasisRow {
            name: g.basis_name(i).to_string(),
            source: g.object_name(b.source).to_string(),
            target: g.object_name(b.target).to_string(),
            degree: b.degree,
        })
        .collect();
    basis.sort_by(|a, b| (&a.source, &a.target, a.degree, &a.name).cmp(&(&b.source, &b.target, b.degree, &b.name)));
    let mut products: Vec<ProductRow> = g
        .products()
        .map(|(l, r, c)| {
            let mut terms: Vec<(String, String)> = c
                .iter()
                .map(|(k, s)| (s.to_string(), g.basis_name(*k).to_string()))
                .collect();
            terms.sort_by(|a, b| a.1.cmp(&b.1));
            ProductRow {
                left: g.basis_name(l).to_string(),
                right: g.basis_name(r).to_string(),
                terms,
            }
        })
        .collect();
    products.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
    StructureTable {
        jump: g.jump(),
        dim: g.dim(),
        basis,
        products,
    }
}
