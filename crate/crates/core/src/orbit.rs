//! Finite graded orbit algebras `Â/⟨φ⟩` for automorphisms with nonzero jump,
//! graded isomorphisms between them, and the end-to-end certification pipeline.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::algebra::{Algebra, ScalingAuto};
use crate::criterion::{
    build_eta, decide, require_same_objects, rho_on_window, CriterionFailure, EtaFamily, RhoMap,
    WindowRho,
};
use crate::error::{Error, Result};
use crate::repetitive::{compose_elements, HatBasis, HatElement, HatObject, JumpAuto, RepetitiveWindow};
use crate::scalar::{LinComb, Scalar};

/// Degrees searched when collecting orbit homs; only adjacent levels are
/// linked in Â, so larger powers never contribute.
const DEGREES: std::ops::RangeInclusive<i64> = -2..=2;

/// Levels an orbit construction with jump `n` may touch.
pub fn orbit_levels(n: i64) -> (i64, i64) {
    let n = n.abs();
    (-2 * n - 2, 2 * n + 2)
}

/// A basis element of `(Â/⟨φ⟩)^degree(source, target) = Â(φ^degree source, target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitBasis {
    pub source: usize,
    pub target: usize,
    pub degree: i64,
    pub morphism: HatBasis,
}

/// A finite ℤ-graded category with exact structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    jump: i64,
    objects: Vec<HatObject>,
    object_names: Vec<String>,
    basis: Vec<OrbitBasis>,
    names: Vec<String>,
    index: HashMap<OrbitBasis, usize>,
    table: BTreeMap<(usize, usize), LinComb<usize>>,
}

impl GradedAlgebra {
    pub fn jump(&self) -> i64 {
        self.jump
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn objects(&self) -> &[HatObject] {
        &self.objects
    }

    pub fn object_name(&self, i: usize) -> &str {
        &self.object_names[i]
    }

    pub fn basis(&self) -> &[OrbitBasis] {
        &self.basis
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn find(&self, key: &OrbitBasis) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// `g ∘ f`; `None` when `f` does not end where `g` starts.
    pub fn product(&self, g: usize, f: usize) -> Option<&LinComb<usize>> {
        self.table.get(&(g, f))
    }

    /// All composable pairs `(g, f)` with `g ∘ f`.
    pub fn products(&self) -> impl Iterator<Item = (usize, usize, &LinComb<usize>)> {
        self.table.iter().map(|(&(g, f), c)| (g, f, c))
    }

    /// Overwrites one structure constant block; used to build negative controls.
    pub fn set_product(&mut self, g: usize, f: usize, value: LinComb<usize>) {
        assert!(self.table.contains_key(&(g, f)), "pair is not composable");
        self.table.insert((g, f), value);
    }

    pub fn degree_histogram(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry(b.degree).or_default() += 1;
        }
        out
    }

    fn compose_elements(&self, g: &LinComb<usize>, f: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (fi, fc) in f.iter() {
            for (gi, gc) in g.iter() {
                if let Some(p) = self.product(*gi, *fi) {
                    out.add_scaled(&(fc * gc), p);
                }
            }
        }
        out
    }

    /// `(h∘g)∘f = h∘(g∘f)` on all composable basis triples; returns the count.
    pub fn check_associativity(&self) -> std::result::Result<usize, String> {
        let mut by_source: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, b) in self.basis.iter().enumerate() {
            by_source.entry(b.source).or_default().push(i);
        }
        let mut count = 0;
        for f in 0..self.dim() {
            for &g in by_source.get(&self.basis[f].target).into_iter().flatten() {
                for &h in by_source.get(&self.basis[g].target).into_iter().flatten() {
                    let left = self.compose_elements(&self.table[&(h, g)], &LinComb::basis(f));
                    let right = self.compose_elements(&LinComb::basis(h), &self.table[&(g, f)]);
                    if left != right {
                        return Err(format!("{} o {} o {}", self.names[h], self.names[g], self.names[f]));
                    }
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Every product of degree-`k` and degree-`l` elements lies in degree
    /// `k + l` between the right objects.
    pub fn check_grading(&self) -> bool {
        self.table.iter().all(|(&(g, f), prod)| {
            let (bg, bf) = (self.basis[g], self.basis[f]);
            prod.iter().all(|(p, _)| {
                let bp = self.basis[*p];
                bp.degree == bg.degree + bf.degree && bp.source == bf.source && bp.target == bg.target
            })
        })
    }

    /// The identity of each object is a degree-0 basis element acting as a unit.
    pub fn check_identities(&self, alg: &Algebra) -> bool {
        self.objects.iter().enumerate().all(|(i, obj)| {
            let key = OrbitBasis {
                source: i,
                target: i,
                degree: 0,
                morphism: HatBasis::path(obj.level, alg.trivial(obj.vertex)),
            };
            let Some(id) = self.find(&key) else {
                return false;
            };
            self.basis.iter().enumerate().all(|(j, b)| {
                let unit = LinComb::basis(j);
                (b.source != i || self.product(j, id) == Some(&unit))
                    && (b.target != i || self.product(id, j) == Some(&unit))
            })
        })
    }
}

/// Builds `Â/⟨φ⟩` with objects `x^[r]`, `0 ≤ r < |n|`.
pub fn build_orbit(w: &RepetitiveWindow<'_>, phi: &JumpAuto) -> Result<GradedAlgebra> {
    let n = phi.jump();
    if n == 0 {
        return Err(Error::ZeroJump);
    }
    let alg = w.algebra();
    let (need_lo, need_hi) = orbit_levels(n);
    let (lo, hi) = w.levels();
    if lo > need_lo || hi < need_hi {
        let level = if lo > need_lo { need_lo } else { need_hi };
        return Err(Error::WindowExit { lo, hi, level });
    }
    let powers: BTreeMap<i64, JumpAuto> = (2 * DEGREES.start()..=2 * DEGREES.end())
        .map(|k| (k, phi.pow(alg, k)))
        .collect();

    let objects: Vec<HatObject> = (0..n.abs())
        .flat_map(|r| alg.quiver().vertex_ids().map(move |v| HatObject::new(v, r)))
        .collect();

    let mut basis = Vec::new();
    for (ui, &u) in objects.iter().enumerate() {
        for (vi, &v) in objects.iter().enumerate() {
            for k in DEGREES {
                let moved = powers[&k].object(u);
                if !(0..=1).contains(&(v.level - moved.level)) {
                    continue;
                }
                for morphism in w.hom(moved, v) {
                    basis.push(OrbitBasis {
                        source: ui,
                        target: vi,
                        degree: k,
                        morphism,
                    });
                }
            }
        }
    }
    let index: HashMap<OrbitBasis, usize> =
        basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();

    let mut table = BTreeMap::new();
    for (fi, f) in basis.iter().enumerate() {
        for (gi, g) in basis.iter().enumerate().filter(|(_, g)| g.source == f.target) {
            let moved = w.apply(&powers[&g.degree], &HatElement::basis(f.morphism))?;
            let prod = compose_elements(alg, &HatElement::basis(g.morphism), &moved);
            let degree = f.degree + g.degree;
            let value = prod.map_linear(|m| {
                let key = OrbitBasis {
                    source: f.source,
                    target: g.target,
                    degree,
                    morphism: *m,
                };
                LinComb::basis(index[&key])
            });
            table.insert((gi, fi), value);
        }
    }

    let names = basis
        .iter()
        .map(|b| format!("{}@{}", b.morphism.display(alg), b.degree))
        .collect();
    let object_names = objects.iter().map(|o| o.display(alg)).collect();
    Ok(GradedAlgebra {
        jump: n,
        objects,
        object_names,
        basis,
        names,
        index,
        table,
    })
}

/// `Tⁿ_σ(A) = Â/⟨σ̂ νⁿ⟩`.
pub fn twisted_extension(alg: &Algebra, sigma: &ScalingAuto, n: i64) -> Result<GradedAlgebra> {
    if n == 0 {
        return Err(Error::ZeroJump);
    }
    let (lo, hi) = orbit_levels(n);
    let w = RepetitiveWindow::new(alg, lo, hi);
    build_orbit(&w, &JumpAuto::hat_lift(sigma.clone()).with_jump(n))
}

/// An object-fixing map sending basis element `i` of the source to
/// `scalars[i]` times the basis element with the same label in the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIso {
    scalars: Vec<Scalar>,
}

impl GradedIso {
    pub fn new(scalars: Vec<Scalar>) -> Self {
        GradedIso { scalars }
    }

    pub fn identity(src: &GradedAlgebra) -> Self {
        GradedIso {
            scalars: vec![Scalar::from_integer(1.into()); src.dim()],
        }
    }

    pub fn scalars(&self) -> &[Scalar] {
        &self.scalars
    }

    pub fn set_scalar(&mut self, i: usize, s: Scalar) {
        self.scalars[i] = s;
    }
}

/// The isomorphism induced by η: a degree-`k` element out of `u` is scaled
/// by `η_{k,u}⁻¹`. The given ρ must agree with `η_1`.
pub fn graded_iso_from_rho(
    src: &GradedAlgebra,
    dst: &GradedAlgebra,
    rho: &WindowRho,
    eta: &EtaFamily,
) -> Result<GradedIso> {
    if src.objects() != dst.objects() {
        return Err(Error::ObjectMismatch("orbit representatives differ".into()));
    }
    for &u in src.objects() {
        if let (Some(r), Some(e)) = (rho.get(u), eta.get(1, u)) {
            if r != e {
                return Err(Error::PreconditionViolated(format!(
                    "rho and eta disagree at level {} vertex #{}",
                    u.level, u.vertex.0
                )));
            }
        }
    }
    let scalars = src
        .basis()
        .iter()
        .map(|b| {
            let u = src.objects()[b.source];
            eta.get(b.degree, u).map(|s| s.recip()).ok_or(Error::EtaRange {
                lo: *DEGREES.start(),
                hi: *DEGREES.end(),
                level: b.degree,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedIso { scalars })
}

/// Checks the claimed isomorphism against both structure-constant tables.
/// Returns a description of the first defect.
pub fn graded_iso_defect(iso: &GradedIso, src: &GradedAlgebra, dst: &GradedAlgebra) -> Option<String> {
    if src.objects() != dst.objects() {
        return Some("object sets differ".into());
    }
    if src.dim() != dst.dim() || iso.scalars.len() != src.dim() {
        return Some(format!("dimensions differ: {} vs {}", src.dim(), dst.dim()));
    }
    let mut image = Vec::with_capacity(src.dim());
    for (i, b) in src.basis().iter().enumerate() {
        let Some(j) = dst.find(b) else {
            return Some(format!("{} has no counterpart", src.basis_name(i)));
        };
        if iso.scalars[i].is_zero() {
            return Some(format!("{} is sent to zero", src.basis_name(i)));
        }
        image.push(j);
    }
    let map = |c: &LinComb<usize>| -> LinComb<usize> {
        c.iter()
            .map(|(k, s)| (s * &iso.scalars[*k], image[*k]))
            .collect()
    };
    for (g, f, prod) in src.products() {
        let lhs = map(prod);
        let rhs = match dst.product(image[g], image[f]) {
            Some(p) => p.scale(&(&iso.scalars[g] * &iso.scalars[f])),
            None => return Some("composable pair missing in target".into()),
        };
        if lhs != rhs {
            return Some(format!(
                "not multiplicative on {} o {}",
                src.basis_name(g),
                src.basis_name(f)
            ));
        }
    }
    if src.products().count() != dst.products().count() {
        return Some("composable pairs differ".into());
    }
    None
}

pub fn verify_graded_iso(iso: &GradedIso, src: &GradedAlgebra, dst: &GradedAlgebra) -> bool {
    graded_iso_defect(iso, src, dst).is_none()
}

/// Everything produced by a successful run of the pipeline.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub jump: i64,
    /// `ρ_0` comparing `Ψ` of the two jump-0 parts.
    pub rho0: RhoMap,
    /// ρ on the working window, valid for the automorphisms themselves.
    pub rho: WindowRho,
    pub eta: EtaFamily,
    /// Source orbit, target orbit and the verified isomorphism (jump ≠ 0).
    pub orbits: Option<(GradedAlgebra, GradedAlgebra, GradedIso)>,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Isomorphic(Box<Certificate>),
    NotIsomorphic(CriterionFailure),
}

/// decompose → Ψ → ρ_0 → extend → η → orbits → graded iso → verification.
pub fn certify(alg: &Algebra, phi: &JumpAuto, psi: &JumpAuto) -> Result<Verdict> {
    if let Some(v) = alg.first_oriented_cycle_vertex() {
        return Err(Error::NonzeroOrientedCycle(alg.quiver().vertex_name(v).to_string()));
    }
    require_same_objects(alg, phi, psi)?;
    let (n, phi_l) = phi.decompose();
    let (_, psi_l) = psi.decompose();
    let rho0 = match decide(alg, &phi_l.psi()?, &psi_l.psi()?)? {
        Ok(rho0) => rho0,
        Err(failure) => return Ok(Verdict::NotIsomorphic(failure)),
    };

    let (lo, hi) = orbit_levels(n);
    let rho = rho_on_window(alg, phi, psi, &rho0, lo, hi)?;
    let w = RepetitiveWindow::new(alg, lo, hi);

    let reps: Vec<HatObject> = (0..n.abs().max(1))
        .flat_map(|r| alg.quiver().vertex_ids().map(move |v| HatObject::new(v, r)))
        .collect();
    let eta = build_eta(alg, phi, &rho, &reps, DEGREES)?;

    let orbits = if n == 0 {
        None
    } else {
        let src = build_orbit(&w, phi)?;
        let dst = build_orbit(&w, psi)?;
        let iso = graded_iso_from_rho(&src, &dst, &rho, &eta)?;
        if let Some(defect) = graded_iso_defect(&iso, &src, &dst) {
            return Err(Error::PreconditionViolated(defect));
        }
        Some((src, dst, iso))
    };
    Ok(Verdict::Isomorphic(Box::new(Certificate {
        jump: n,
        rho0,
        rho,
        eta,
        orbits,
    })))
}

/// `Â/⟨φ⟩` against `Tⁿ_{φ_0}(A)`, the twisted extension by `Ψ(φν^{-n})`.
pub fn certify_against_twist(alg: &Algebra, phi: &JumpAuto) -> Result<Verdict> {
    let (n, phi_l) = phi.decompose();
    let twist = JumpAuto::hat_lift(phi_l.psi()?).with_jump(n);
    certify(alg, phi, &twist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{ArrowId, Quiver};
    use crate::repetitive::LevelScalars;
    use crate::scalar::{int, ratio};

    fn a3() -> Algebra {
        let q = Quiver::new(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")]).unwrap();
        Algebra::new(q, vec![]).unwrap()
    }

    fn two_cycle() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        Algebra::new(q, vec![vec![ArrowId(0), ArrowId(1)], vec![ArrowId(1), ArrowId(0)]]).unwrap()
    }

    #[test]
    fn trivial_extension_of_a3() {
        let alg = a3();
        let t = twisted_extension(&alg, &ScalingAuto::identity(&alg), 1).unwrap();
        assert_eq!(t.dim(), 12);
        assert_eq!(t.degree_histogram(), BTreeMap::from([(-1, 6), (0, 6)]));
        assert!(t.check_grading());
        assert!(t.check_identities(&alg));
        assert!(t.check_associativity().unwrap() > 0);
        let (lo, hi) = orbit_levels(1);
        let w = RepetitiveWindow::new(&alg, lo, hi);
        assert_eq!(build_orbit(&w, &JumpAuto::nu(&alg, 1)).unwrap(), t);
    }

    #[test]
    fn dimensions_scale_with_the_jump() {
        let alg = two_cycle();
        for n in [-2i64, -1, 1, 2, 3] {
            let t = twisted_extension(&alg, &ScalingAuto::identity(&alg), n).unwrap();
            assert_eq!(t.dim(), 8 * n.unsigned_abs() as usize);
            assert!(t.check_associativity().is_ok());
        }
        assert_eq!(
            twisted_extension(&alg, &ScalingAuto::identity(&alg), 0).unwrap_err(),
            Error::ZeroJump
        );
    }

    #[test]
    fn window_too_small_is_reported() {
        let alg = a3();
        let w = RepetitiveWindow::new(&alg, -1, 1);
        assert!(matches!(
            build_orbit(&w, &JumpAuto::nu(&alg, 1)),
            Err(Error::WindowExit { .. })
        ));
    }

    #[test]
    fn identity_iso_and_corruption() {
        let alg = a3();
        let t = twisted_extension(&alg, &ScalingAuto::identity(&alg), 1).unwrap();
        let id = GradedIso::identity(&t);
        assert!(verify_graded_iso(&id, &t, &t));
        let mut bad = id.clone();
        bad.set_scalar(3, int(2));
        assert!(!verify_graded_iso(&bad, &t, &t));
    }

    #[test]
    fn two_cycle_pipeline() {
        let alg = two_cycle();
        let g = ScalingAuto::diagonal(&alg, vec![int(2), int(3)]).unwrap();
        let h = ScalingAuto::diagonal(&alg, vec![int(6), int(1)]).unwrap();
        for n in [1, 2, -1] {
            let phi = JumpAuto::hat_lift(g.clone()).with_jump(n);
            let psi = JumpAuto::hat_lift(h.clone()).with_jump(n);
            let Verdict::Isomorphic(cert) = certify(&alg, &phi, &psi).unwrap() else {
                panic!("expected an isomorphism");
            };
            assert_eq!(cert.rho0.values(), &[int(1), int(3)]);
            assert!(cert.orbits.is_some());
        }
        let bad = ScalingAuto::diagonal(&alg, vec![int(2), int(2)]).unwrap();
        let verdict = certify(
            &alg,
            &JumpAuto::hat_lift(g).with_jump(1),
            &JumpAuto::hat_lift(bad).with_jump(1),
        )
        .unwrap();
        assert!(matches!(
            verdict,
            Verdict::NotIsomorphic(CriterionFailure::Cycle { .. })
        ));
    }

    #[test]
    fn a3_fixture_against_its_twist() {
        let alg = a3();
        let sigma = ScalingAuto::diagonal(&alg, vec![int(2), int(3)]).unwrap();
        let lambda = LevelScalars::from_rows([
            (-1, vec![int(1), ratio(1, 2), ratio(1, 6)]),
            (0, vec![ratio(1, 6), ratio(1, 3), int(1)]),
        ]);
        for n in [1, 2, 3, -1] {
            let phi = JumpAuto::new(n, sigma.clone(), lambda.clone());
            let Verdict::Isomorphic(cert) = certify_against_twist(&alg, &phi).unwrap() else {
                panic!("expected an isomorphism");
            };
            let (src, _, _) = cert.orbits.unwrap();
            assert_eq!(src.dim(), 12 * n.unsigned_abs() as usize);
        }
    }

    #[test]
    fn oriented_cycles_are_refused() {
        let q = Quiver::new(&["1"], &[("l", "1", "1")]).unwrap();
        let alg = Algebra::new(q, vec![vec![ArrowId(0), ArrowId(0)]]).unwrap();
        let nu = JumpAuto::nu(&alg, 1);
        assert!(matches!(
            certify(&alg, &nu, &nu),
            Err(Error::NonzeroOrientedCycle(_))
        ));
    }
}
