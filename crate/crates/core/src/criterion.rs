//! Deciding when two automorphisms give isomorphic orbit categories, and
//! building the comparison scalars ρ and η.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num::One;

use crate::algebra::{xi, Algebra, PathId, ScalingAuto};
use crate::error::{Error, Result};
use crate::quiver::{enumerate_simple_cycles, spanning_walks, walk_value, ArrowScalars, Cycle, Quiver, VertexId};
use crate::repetitive::{HatBasis, HatElement, HatObject, JumpAuto, RepetitiveWindow};
use crate::scalar::Scalar;

/// A nonzero scalar per vertex of A.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RhoMap(Vec<Scalar>);

impl RhoMap {
    pub fn new(values: Vec<Scalar>) -> Self {
        RhoMap(values)
    }

    pub fn ones(vertices: usize) -> Self {
        RhoMap(vec![Scalar::one(); vertices])
    }

    pub fn get(&self, v: VertexId) -> &Scalar {
        &self.0[v.0]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }
}

/// A nonzero scalar per object of a window of Â.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WindowRho(BTreeMap<HatObject, Scalar>);

impl WindowRho {
    pub fn new(values: BTreeMap<HatObject, Scalar>) -> Self {
        WindowRho(values)
    }

    pub fn get(&self, x: HatObject) -> Option<&Scalar> {
        self.0.get(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (HatObject, &Scalar)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn levels(&self) -> Option<(i64, i64)> {
        let lo = self.0.keys().next()?.level;
        let hi = self.0.keys().next_back()?.level;
        Some((lo, hi))
    }

    /// Restriction to one level, as a map on A.
    pub fn level(&self, level: i64, vertices: usize) -> Option<RhoMap> {
        (0..vertices)
            .map(|v| self.get(HatObject::new(VertexId(v), level)).cloned())
            .collect::<Option<Vec<_>>>()
            .map(RhoMap)
    }

    /// `x^[i] ↦ ρ(x^[i+n])`.
    pub fn shifted(&self, n: i64) -> WindowRho {
        WindowRho(
            self.0
                .iter()
                .map(|(k, v)| (HatObject::new(k.vertex, k.level - n), v.clone()))
                .collect(),
        )
    }
}

/// Why two automorphisms of A fail the criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionFailure {
    /// `g⁻¹h` moves an arrow.
    ArrowPermuted { arrow: String, image: String },
    /// Two parallel arrows are rescaled differently by `g⁻¹h`.
    ParallelScalars {
        first: String,
        second: String,
        first_scalar: Scalar,
        second_scalar: Scalar,
    },
    /// A simple cycle with value different from 1.
    Cycle { cycle: String, value: Scalar },
}

impl fmt::Display for CriterionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriterionFailure::ArrowPermuted { arrow, image } => {
                write!(f, "arrow {arrow} is sent to {image}, not rescaled")
            }
            CriterionFailure::ParallelScalars {
                first,
                second,
                first_scalar,
                second_scalar,
            } => write!(
                f,
                "parallel arrows {first} and {second} are scaled by {first_scalar} and {second_scalar}"
            ),
            CriterionFailure::Cycle { cycle, value } => {
                write!(f, "cycle {cycle} has value {value}")
            }
        }
    }
}

fn require_same_vertices(alg: &Algebra, g: &ScalingAuto, h: &ScalingAuto) -> Result<()> {
    match alg.quiver().vertex_ids().find(|&v| g.vertex(v) != h.vertex(v)) {
        Some(v) => Err(Error::ObjectMismatch(alg.quiver().vertex_name(v).to_string())),
        None => Ok(()),
    }
}

/// The arrow scalars of `E = g⁻¹h`, when `E` fixes every arrow and scales
/// parallel arrows alike.
pub fn scaling_condition(
    alg: &Algebra,
    g: &ScalingAuto,
    h: &ScalingAuto,
) -> Result<std::result::Result<ArrowScalars, CriterionFailure>> {
    require_same_vertices(alg, g, h)?;
    let q = alg.quiver();
    let e = g.inverse().compose(h);
    let mut per_pair: BTreeMap<(VertexId, VertexId), crate::quiver::ArrowId> = BTreeMap::new();
    let mut out = ArrowScalars::new();
    for a in q.arrow_ids() {
        if e.arrow(a) != a {
            return Ok(Err(CriterionFailure::ArrowPermuted {
                arrow: q.arrow(a).name.clone(),
                image: q.arrow(e.arrow(a)).name.clone(),
            }));
        }
        let key = (q.source(a), q.target(a));
        if let Some(&b) = per_pair.get(&key) {
            if e.scalar(b) != e.scalar(a) {
                return Ok(Err(CriterionFailure::ParallelScalars {
                    first: q.arrow(b).name.clone(),
                    second: q.arrow(a).name.clone(),
                    first_scalar: e.scalar(b).clone(),
                    second_scalar: e.scalar(a).clone(),
                }));
            }
        } else {
            per_pair.insert(key, a);
        }
        out.insert(a, e.scalar(a).clone());
    }
    Ok(Ok(out))
}

pub fn check_scaling_condition(
    alg: &Algebra,
    g: &ScalingAuto,
    h: &ScalingAuto,
) -> Result<Option<ArrowScalars>> {
    Ok(scaling_condition(alg, g, h)?.ok())
}

/// The first simple-cycle representative whose value is not 1.
pub fn first_failing_cycle(q: &Quiver, e: &ArrowScalars) -> Option<(Cycle, Scalar)> {
    enumerate_simple_cycles(q).into_iter().find_map(|c| {
        let value = walk_value(e, c.walk()).expect("scalars cover every arrow");
        (!value.is_one()).then_some((c, value))
    })
}

pub fn check_cycle_condition(q: &Quiver, e: &ArrowScalars) -> bool {
    first_failing_cycle(q, e).is_none()
}

/// Runs both conditions; on success returns ρ with `ρ(base) = 1` on each
/// component and `ρ(x)` the value of `E` along the spanning walk to `x`.
pub fn decide(
    alg: &Algebra,
    g: &ScalingAuto,
    h: &ScalingAuto,
) -> Result<std::result::Result<RhoMap, CriterionFailure>> {
    let e = match scaling_condition(alg, g, h)? {
        Ok(e) => e,
        Err(failure) => return Ok(Err(failure)),
    };
    let q = alg.quiver();
    if let Some((cycle, value)) = first_failing_cycle(q, &e) {
        return Ok(Err(CriterionFailure::Cycle {
            cycle: cycle.display(q).to_string(),
            value,
        }));
    }
    let mut values = vec![Scalar::one(); q.vertex_count()];
    for tree in spanning_walks(q) {
        for (v, walk) in &tree.walks {
            values[v.0] = walk_value(&e, walk)?;
        }
    }
    Ok(Ok(RhoMap(values)))
}

pub fn build_rho(alg: &Algebra, g: &ScalingAuto, h: &ScalingAuto) -> Result<Option<RhoMap>> {
    Ok(decide(alg, g, h)?.ok())
}

/// First basis path `f: x → y` violating `ρ(y)·g(f) = h(f)·ρ(x)`.
pub fn rho_failure(alg: &Algebra, g: &ScalingAuto, h: &ScalingAuto, rho: &RhoMap) -> Option<PathId> {
    alg.path_ids().find(|&p| {
        let path = alg.path(p);
        let (cg, ig) = g.apply_path(alg, p);
        let (ch, ih) = h.apply_path(alg, p);
        ig != ih || rho.get(path.target) * cg != ch * rho.get(path.source)
    })
}

pub fn rho_is_valid(alg: &Algebra, g: &ScalingAuto, h: &ScalingAuto, rho: &RhoMap) -> bool {
    rho_failure(alg, g, h, rho).is_none()
}

/// Fails unless the two automorphisms have the same jump and agree on objects.
pub fn require_same_objects(alg: &Algebra, phi: &JumpAuto, psi: &JumpAuto) -> Result<()> {
    if phi.jump() != psi.jump() {
        return Err(Error::JumpMismatch(phi.jump(), psi.jump()));
    }
    require_same_vertices(alg, phi.sigma(), psi.sigma())
}

/// First window basis morphism `f: u → v` violating `ρ(v)φ(f) = ψ(f)ρ(u)`.
/// Morphisms whose images leave the window, or whose endpoints carry no ρ
/// value, are skipped.
pub fn window_rho_failure(
    w: &RepetitiveWindow<'_>,
    phi: &JumpAuto,
    psi: &JumpAuto,
    rho: &WindowRho,
) -> Option<HatBasis> {
    let alg = w.algebra();
    w.basis().iter().copied().find(|&b| {
        let (Some(ru), Some(rv)) = (rho.get(b.source(alg)), rho.get(b.target(alg))) else {
            return false;
        };
        let (cp, ip) = phi.apply_basis(alg, b);
        let (cs, is) = psi.apply_basis(alg, b);
        if !w.contains(&ip) || !w.contains(&is) {
            return false;
        }
        ip != is || rv * cp != cs * ru
    })
}

/// Extends `ρ_0` from level 0 to every level of the window.
///
/// The comparison is made between the jump-0 parts `φν^{-n}` and `ψν^{-n}`:
/// the result satisfies `ρ(v)φ_L(f) = ψ_L(f)ρ(u)` on the window and equals
/// `ρ_0` on level 0. For the automorphisms themselves use
/// [`WindowRho::shifted`] by the jump.
pub fn extend_rho(
    w: &RepetitiveWindow<'_>,
    phi: &JumpAuto,
    psi: &JumpAuto,
    rho0: &RhoMap,
) -> Result<WindowRho> {
    let alg = w.algebra();
    require_same_objects(alg, phi, psi)?;
    let (_, phi_l) = phi.decompose();
    let (_, psi_l) = psi.decompose();
    if let Some(p) = rho_failure(alg, phi_l.sigma(), psi_l.sigma(), rho0) {
        return Err(Error::PreconditionViolated(alg.display_path(p)));
    }
    let twist = JumpAuto::hat_lift(xi(alg, rho0.values()));
    let d = phi_l.inverse(alg).compose(alg, &psi_l).compose(alg, &twist);
    debug_assert!(d.sigma().is_diagonal() && d.sigma() == &ScalingAuto::identity(alg));
    let (lo, hi) = w.levels();
    let mut values = BTreeMap::new();
    for level in lo..=hi {
        for v in alg.quiver().vertex_ids() {
            let value = rho0.get(v) / d.lambda().cumulative(level, v);
            values.insert(HatObject::new(v, level), value);
        }
    }
    let rho = WindowRho(values);
    if let Some(b) = window_rho_failure(w, &phi_l, &psi_l, &rho) {
        return Err(Error::PreconditionViolated(b.display(alg)));
    }
    Ok(rho)
}

/// ρ on levels `lo..=hi` for the automorphisms themselves, checked there.
pub fn rho_on_window(
    alg: &Algebra,
    phi: &JumpAuto,
    psi: &JumpAuto,
    rho0: &RhoMap,
    lo: i64,
    hi: i64,
) -> Result<WindowRho> {
    let n = phi.jump();
    let shifted = RepetitiveWindow::new(alg, lo + n, hi + n);
    let rho = extend_rho(&shifted, phi, psi, rho0)?.shifted(n);
    let w = RepetitiveWindow::new(alg, lo, hi);
    if let Some(b) = window_rho_failure(&w, phi, psi, &rho) {
        return Err(Error::PreconditionViolated(b.display(alg)));
    }
    Ok(rho)
}

/// First arrow-path `f: x → y` violating `ρ(y)φ_i(f) = ψ_j(f)ρ(x)`, where
/// `φ_i`, `ψ_j` are the level components of the jump-0 parts.
pub fn level_rho_failure(
    alg: &Algebra,
    phi: &JumpAuto,
    psi: &JumpAuto,
    rho: &RhoMap,
    i: i64,
    j: i64,
) -> Option<PathId> {
    let phi_i = phi.decompose().1.level_component(alg, i);
    let psi_j = psi.decompose().1.level_component(alg, j);
    rho_failure(alg, &phi_i, &psi_j, rho)
}

/// Moves a ρ valid between levels `i` and `j` to one valid at level 0.
pub fn shift_rho(
    alg: &Algebra,
    phi: &JumpAuto,
    psi: &JumpAuto,
    rho: &RhoMap,
    i: i64,
    j: i64,
) -> Result<RhoMap> {
    if let Some(p) = level_rho_failure(alg, phi, psi, rho, i, j) {
        return Err(Error::PreconditionViolated(alg.display_path(p)));
    }
    let values = alg
        .quiver()
        .vertex_ids()
        .map(|z| rho.get(z) * psi.lambda().cumulative(j, z) / phi.lambda().cumulative(i, z))
        .collect();
    Ok(RhoMap(values))
}

/// `η_{k,x}` for a range of powers `k` and a set of objects `x`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EtaFamily(BTreeMap<(i64, HatObject), Scalar>);

impl EtaFamily {
    pub fn get(&self, k: i64, x: HatObject) -> Option<&Scalar> {
        self.0.get(&(k, x))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, HatObject, &Scalar)> {
        self.0.iter().map(|(&(k, x), s)| (k, x, s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `η_{k,x} = ρ(x)ρ(gx)⋯ρ(g^{k-1}x)` for `k > 0`,
/// `ρ(g^k x)⁻¹⋯ρ(g^{-1}x)⁻¹` for `k < 0`, and 1 for `k = 0`.
pub fn build_eta(
    alg: &Algebra,
    g: &JumpAuto,
    rho: &WindowRho,
    objects: &[HatObject],
    ks: RangeInclusive<i64>,
) -> Result<EtaFamily> {
    let g_inv = g.inverse(alg);
    let (lo, hi) = rho.levels().unwrap_or((0, -1));
    let lookup = |x: HatObject| {
        rho.get(x).cloned().ok_or(Error::EtaRange {
            lo,
            hi,
            level: x.level,
        })
    };
    let mut out = BTreeMap::new();
    for &x in objects {
        for k in ks.clone() {
            let mut value = Scalar::one();
            if k > 0 {
                let mut at = x;
                for _ in 0..k {
                    value *= lookup(at)?;
                    at = g.object(at);
                }
            } else {
                let mut at = x;
                for _ in 0..-k {
                    at = g_inv.object(at);
                    value /= lookup(at)?;
                }
            }
            out.insert((k, x), value);
        }
    }
    Ok(EtaFamily(out))
}

/// Checks `η_{m+n,x} = η_{m,g^n x}·η_{n,x}` wherever all three are present.
pub fn eta_cocycle_failure(
    alg: &Algebra,
    g: &JumpAuto,
    eta: &EtaFamily,
) -> Option<(i64, i64, HatObject)> {
    for (n, x, eta_n) in eta.iter() {
        let moved = g.pow(alg, n).object(x);
        for (m, y, eta_m) in eta.iter() {
            if y != moved {
                continue;
            }
            if let Some(total) = eta.get(m + n, x) {
                if *total != eta_m * eta_n {
                    return Some((m, n, x));
                }
            }
        }
    }
    None
}

/// Checks `η_{k,y}·g^k(f) = h^k(f)·η_{k,x}` on window morphisms `f: x → y`
/// whose endpoints carry η values and whose images stay in the window.
pub fn eta_naturality_failure(
    w: &RepetitiveWindow<'_>,
    g: &JumpAuto,
    h: &JumpAuto,
    eta: &EtaFamily,
    k: i64,
) -> Option<HatBasis> {
    let alg = w.algebra();
    let (gk, hk) = (g.pow(alg, k), h.pow(alg, k));
    w.basis().iter().copied().find(|&b| {
        let (Some(ex), Some(ey)) = (eta.get(k, b.source(alg)), eta.get(k, b.target(alg))) else {
            return false;
        };
        let e = HatElement::basis(b);
        let (Ok(gb), Ok(hb)) = (w.apply(&gk, &e), w.apply(&hk, &e)) else {
            return false;
        };
        gb.scale(ey) != hb.scale(ex)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::ArrowId;
    use crate::repetitive::LevelScalars;
    use crate::scalar::{int, ratio};

    fn two_cycle() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        Algebra::new(q, vec![vec![ArrowId(0), ArrowId(1)], vec![ArrowId(1), ArrowId(0)]]).unwrap()
    }

    fn a3() -> Algebra {
        let q = Quiver::new(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")]).unwrap();
        Algebra::new(q, vec![]).unwrap()
    }

    fn diag(alg: &Algebra, s: &[Scalar]) -> ScalingAuto {
        ScalingAuto::diagonal(alg, s.to_vec()).unwrap()
    }

    #[test]
    fn scaling_condition_examples() {
        let alg = two_cycle();
        let g = diag(&alg, &[int(2), int(3)]);
        let h = diag(&alg, &[int(6), int(1)]);
        let e = check_scaling_condition(&alg, &g, &h).unwrap().unwrap();
        assert_eq!(e[&ArrowId(0)], int(3));
        assert_eq!(e[&ArrowId(1)], ratio(1, 3));
        let e = check_scaling_condition(&alg, &g, &g).unwrap().unwrap();
        assert!(e.values().all(|s| s.is_one()));

        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        let alg = Algebra::new(q, vec![]).unwrap();
        let g = ScalingAuto::identity(&alg);
        let h = diag(&alg, &[int(2), int(3)]);
        assert!(check_scaling_condition(&alg, &g, &h).unwrap().is_none());
        let swap = ScalingAuto::new(
            &alg,
            vec![VertexId(0), VertexId(1)],
            vec![ArrowId(1), ArrowId(0)],
            vec![int(1), int(1)],
        )
        .unwrap();
        assert!(matches!(
            scaling_condition(&alg, &g, &swap).unwrap(),
            Err(CriterionFailure::ArrowPermuted { .. })
        ));
    }

    #[test]
    fn cycle_condition_examples() {
        let q = a3();
        assert!(check_cycle_condition(q.quiver(), &ArrowScalars::new()));
        let alg = two_cycle();
        let good = ArrowScalars::from([(ArrowId(0), int(3)), (ArrowId(1), ratio(1, 3))]);
        let bad = ArrowScalars::from([(ArrowId(0), int(3)), (ArrowId(1), ratio(1, 2))]);
        assert!(check_cycle_condition(alg.quiver(), &good));
        let (c, v) = first_failing_cycle(alg.quiver(), &bad).unwrap();
        assert_eq!(c.display(alg.quiver()).to_string(), "b*a");
        assert_eq!(v, ratio(3, 2));
    }

    #[test]
    fn rho_for_the_two_cycle() {
        let alg = two_cycle();
        let g = diag(&alg, &[int(2), int(3)]);
        let h = diag(&alg, &[int(6), int(1)]);
        let rho = build_rho(&alg, &g, &h).unwrap().unwrap();
        assert_eq!(rho.values(), &[int(1), int(3)]);
        assert!(rho_is_valid(&alg, &g, &h, &rho));
        assert_eq!(build_rho(&alg, &g, &g).unwrap().unwrap(), RhoMap::ones(2));
        let h2 = diag(&alg, &[int(2), int(2)]);
        assert!(build_rho(&alg, &g, &h2).unwrap().is_none());
        assert!(matches!(
            decide(&alg, &g, &h2).unwrap(),
            Err(CriterionFailure::Cycle { .. })
        ));
    }

    #[test]
    fn mismatched_objects_fail_fast() {
        let alg = two_cycle();
        let swap = ScalingAuto::new(
            &alg,
            vec![VertexId(1), VertexId(0)],
            vec![ArrowId(1), ArrowId(0)],
            vec![int(1), int(1)],
        )
        .unwrap();
        let id = ScalingAuto::identity(&alg);
        assert!(matches!(build_rho(&alg, &id, &swap), Err(Error::ObjectMismatch(_))));
        let f = JumpAuto::nu(&alg, 1);
        let g = JumpAuto::nu(&alg, 2);
        assert_eq!(
            require_same_objects(&alg, &f, &g),
            Err(Error::JumpMismatch(1, 2))
        );
    }

    #[test]
    fn extend_rho_trivial_and_level_steps() {
        let alg = a3();
        let w = RepetitiveWindow::new(&alg, -2, 2);
        let nu = JumpAuto::nu(&alg, 1);
        let rho = extend_rho(&w, &nu, &nu, &RhoMap::ones(3)).unwrap();
        assert!(rho.iter().all(|(_, s)| s.is_one()));

        // ψ = Φ(λ) against the identity: ρ at level i+1 is ρ at level i over λ_i
        let lambda = LevelScalars::from_rows([(0, vec![int(2), int(5), int(7)]), (1, vec![int(3), int(1), int(1)])]);
        let phi = JumpAuto::phi(&alg, lambda.clone()).with_jump(1);
        let rho = extend_rho(&w, &phi, &nu, &RhoMap::ones(3)).unwrap();
        for level in -2..2 {
            for v in alg.quiver().vertex_ids() {
                let here = rho.get(HatObject::new(v, level)).unwrap();
                let next = rho.get(HatObject::new(v, level + 1)).unwrap();
                assert_eq!(next, &(here * lambda.get(level, v)));
            }
        }
        assert_eq!(rho.level(0, 3).unwrap(), RhoMap::ones(3));
        let (_, phi_l) = phi.decompose();
        assert!(window_rho_failure(&w, &phi_l, &JumpAuto::identity(&alg), &rho).is_none());
    }

    #[test]
    fn extend_rho_rejects_invalid_rho0() {
        let alg = two_cycle();
        let w = RepetitiveWindow::new(&alg, -1, 1);
        let g = JumpAuto::hat_lift(diag(&alg, &[int(2), int(3)]));
        let h = JumpAuto::hat_lift(diag(&alg, &[int(6), int(1)]));
        assert!(matches!(
            extend_rho(&w, &g, &h, &RhoMap::ones(2)),
            Err(Error::PreconditionViolated(_))
        ));
        let rho = extend_rho(&w, &g, &h, &RhoMap::new(vec![int(1), int(3)])).unwrap();
        assert!(window_rho_failure(&w, &g, &h, &rho).is_none());
    }

    #[test]
    fn shift_rho_examples() {
        let alg = a3();
        let id = JumpAuto::identity(&alg);
        let rho = RhoMap::new(vec![int(4), int(4), int(4)]);
        assert_eq!(shift_rho(&alg, &id, &id, &rho, 0, 0).unwrap(), rho);

        let lambda = LevelScalars::from_rows([(0, vec![int(1), int(2), int(6)])]);
        let phi = JumpAuto::phi(&alg, lambda);
        // φ_1 = ξ(1,2,6) against ψ_1 = id: valid ρ at (1, 1) is ρ(x) ∝ λ_0(x)
        let rho = RhoMap::new(vec![int(1), int(2), int(6)]);
        assert!(level_rho_failure(&alg, &phi, &id, &rho, 1, 1).is_none());
        let rho0 = shift_rho(&alg, &phi, &id, &rho, 1, 1).unwrap();
        assert_eq!(rho0, RhoMap::ones(3));
        assert!(shift_rho(&alg, &phi, &id, &RhoMap::ones(3), 1, 1).is_err());
    }

    #[test]
    fn eta_two_cycle_values() {
        let alg = two_cycle();
        let g = JumpAuto::hat_lift(diag(&alg, &[int(2), int(3)]));
        let mut values = BTreeMap::new();
        for level in -3..=3 {
            values.insert(HatObject::new(VertexId(0), level), int(1));
            values.insert(HatObject::new(VertexId(1), level), int(3));
        }
        let rho = WindowRho::new(values);
        let objects = [HatObject::new(VertexId(0), 0), HatObject::new(VertexId(1), 0)];
        let eta = build_eta(&alg, &g, &rho, &objects, -2..=2).unwrap();
        assert_eq!(eta.get(2, objects[0]), Some(&int(1)));
        assert_eq!(eta.get(2, objects[1]), Some(&int(9)));
        assert_eq!(eta.get(1, objects[1]), Some(&int(3)));
        assert_eq!(eta.get(0, objects[1]), Some(&int(1)));
        assert_eq!(eta.get(-1, objects[1]), Some(&ratio(1, 3)));
        assert!(eta_cocycle_failure(&alg, &g, &eta).is_none());

        let nu = JumpAuto::nu(&alg, 1);
        assert!(matches!(
            build_eta(&alg, &nu, &rho, &objects, 0..=5),
            Err(Error::EtaRange { level: 4, .. })
        ));
    }
}
