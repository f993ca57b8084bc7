#![allow(dead_code)]

use std::path::PathBuf;

use quiver_orbit::algebra::{Algebra, ScalingAuto};
use quiver_orbit::problem::Problem;
use quiver_orbit::quiver::{ArrowId, ArrowScalars, Quiver, VertexId};
use quiver_orbit::repetitive::LevelScalars;
use quiver_orbit::scalar::ratio;
use quiver_orbit::Scalar;
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn load(name: &str) -> (Problem, Algebra) {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    let p = Problem::parse(&text).expect("fixture parses");
    let alg = p.algebra().expect("fixture algebra");
    (p, alg)
}

pub fn a3() -> Algebra {
    load("a3.txt").1
}

pub fn two_cycle() -> Algebra {
    load("two_cycle.txt").1
}

/// A nonzero rational with small numerator and denominator.
pub fn unit<R: Rng>(rng: &mut R) -> Scalar {
    let num = loop {
        let n: i64 = rng.gen_range(-6..=6);
        if n != 0 {
            break n;
        }
    };
    ratio(num, rng.gen_range(1..=6))
}

pub fn units<R: Rng>(rng: &mut R, k: usize) -> Vec<Scalar> {
    (0..k).map(|_| unit(rng)).collect()
}

pub fn random_diagonal<R: Rng>(rng: &mut R, alg: &Algebra) -> ScalingAuto {
    ScalingAuto::diagonal(alg, units(rng, alg.quiver().arrow_count())).unwrap()
}

/// A random automorphism of A: a random symmetry of the quiver (when the
/// quiver has one) with random arrow scalars.
pub fn random_sigma<R: Rng>(rng: &mut R, alg: &Algebra) -> ScalingAuto {
    let q = alg.quiver();
    let scalars = units(rng, q.arrow_count());
    if q.vertex_count() == 2 && q.arrow_count() == 2 && q.source(ArrowId(0)) == q.target(ArrowId(1)) && rng.gen_bool(0.5) {
        ScalingAuto::new(
            alg,
            vec![VertexId(1), VertexId(0)],
            vec![ArrowId(1), ArrowId(0)],
            scalars,
        )
        .unwrap()
    } else {
        ScalingAuto::diagonal(alg, scalars).unwrap()
    }
}

/// Random level scalars on `lo..=hi`, each entry left at 1 with probability 1/3.
pub fn random_lambda<R: Rng>(rng: &mut R, alg: &Algebra, lo: i64, hi: i64) -> LevelScalars {
    let mut out = LevelScalars::new();
    for level in lo..=hi {
        for v in alg.quiver().vertex_ids() {
            if rng.gen_bool(2.0 / 3.0) {
                out.set(level, v, unit(rng));
            }
        }
    }
    out
}

/// A connected quiver with `2..=max_v` vertices and at most `max_a` arrows,
/// loops excluded.
pub fn random_quiver<R: Rng>(rng: &mut R, max_v: usize, max_a: usize) -> Quiver {
    let n = rng.gen_range(2..=max_v);
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
    }
    let extra = rng.gen_range(0..=max_a - edges.len());
    for _ in 0..extra {
        let s = rng.gen_range(0..n);
        let t = (s + rng.gen_range(1..n)) % n;
        edges.push((s, t));
    }
    Quiver::from_edges(n, &edges)
}

pub fn random_arrow_scalars<R: Rng>(rng: &mut R, q: &Quiver) -> ArrowScalars {
    q.arrow_ids().map(|a| (a, unit(rng))).collect()
}
