//! The repetitive category Â on a finite window of levels, and its
//! automorphisms presented as (jump, base automorphism, level scalars).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Zero};

use crate::algebra::{xi, Algebra, PathId, ScalingAuto};
use crate::error::{Error, Result};
use crate::quiver::VertexId;
use crate::scalar::{LinComb, Scalar};

/// The object `x^[level]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HatObject {
    pub level: i64,
    pub vertex: VertexId,
}

impl HatObject {
    pub fn new(vertex: VertexId, level: i64) -> Self {
        HatObject { level, vertex }
    }

    pub fn display(&self, alg: &Algebra) -> String {
        format!("{}^[{}]", alg.quiver().vertex_name(self.vertex), self.level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HatKind {
    /// `f^[i]`, a path `f: u ⇝ v` seen as `u^[i] → v^[i]`.
    Path,
    /// `β_p^[i]` for `p: y ⇝ x`, a morphism `x^[i] → y^[i+1]`.
    Dual,
}

/// A basis morphism of Â.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HatBasis {
    pub level: i64,
    pub kind: HatKind,
    pub path: PathId,
}

impl HatBasis {
    pub fn path(level: i64, path: PathId) -> Self {
        HatBasis {
            level,
            kind: HatKind::Path,
            path,
        }
    }

    pub fn dual(level: i64, path: PathId) -> Self {
        HatBasis {
            level,
            kind: HatKind::Dual,
            path,
        }
    }

    pub fn source(&self, alg: &Algebra) -> HatObject {
        let p = alg.path(self.path);
        match self.kind {
            HatKind::Path => HatObject::new(p.source, self.level),
            HatKind::Dual => HatObject::new(p.target, self.level),
        }
    }

    pub fn target(&self, alg: &Algebra) -> HatObject {
        let p = alg.path(self.path);
        match self.kind {
            HatKind::Path => HatObject::new(p.target, self.level),
            HatKind::Dual => HatObject::new(p.source, self.level + 1),
        }
    }

    /// Highest level touched by the morphism.
    pub fn top_level(&self) -> i64 {
        match self.kind {
            HatKind::Path => self.level,
            HatKind::Dual => self.level + 1,
        }
    }

    pub fn shifted(&self, by: i64) -> Self {
        HatBasis {
            level: self.level + by,
            ..*self
        }
    }

    pub fn display(&self, alg: &Algebra) -> String {
        match self.kind {
            HatKind::Path => format!("{}^[{}]", alg.display_path(self.path), self.level),
            HatKind::Dual => format!("D({})^[{}]", alg.display_path(self.path), self.level),
        }
    }
}

pub type HatElement = LinComb<HatBasis>;

/// `g ∘ f` for basis morphisms; zero when they do not compose.
pub fn compose_basis(alg: &Algebra, g: HatBasis, f: HatBasis) -> HatElement {
    if f.target(alg) != g.source(alg) {
        return HatElement::zero();
    }
    let dual = alg.dual();
    let tag = |level: i64, kind: HatKind, c: LinComb<PathId>| {
        c.map_linear(|&p| LinComb::basis(HatBasis { level, kind, path: p }))
    };
    match (f.kind, g.kind) {
        (HatKind::Path, HatKind::Path) => match alg.mul(g.path, f.path) {
            Some(p) => HatElement::basis(HatBasis::path(f.level, p)),
            None => HatElement::zero(),
        },
        (HatKind::Path, HatKind::Dual) => tag(f.level, HatKind::Dual, dual.right_action(g.path, f.path)),
        (HatKind::Dual, HatKind::Path) => tag(f.level, HatKind::Dual, dual.left_action(g.path, f.path)),
        (HatKind::Dual, HatKind::Dual) => HatElement::zero(),
    }
}

pub fn compose_elements(alg: &Algebra, g: &HatElement, f: &HatElement) -> HatElement {
    let mut out = HatElement::zero();
    for (fb, fc) in f.iter() {
        for (gb, gc) in g.iter() {
            out.add_scaled(&(fc * gc), &compose_basis(alg, *gb, *fb));
        }
    }
    out
}

/// Â restricted to the levels `lo..=hi`, with its composition table.
#[derive(Debug, Clone)]
pub struct RepetitiveWindow<'a> {
    alg: &'a Algebra,
    lo: i64,
    hi: i64,
    basis: Vec<HatBasis>,
    index: HashMap<HatBasis, usize>,
    by_source: BTreeMap<HatObject, Vec<usize>>,
    table: HashMap<(usize, usize), HatElement>,
}

impl<'a> RepetitiveWindow<'a> {
    pub fn new(alg: &'a Algebra, lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty level window");
        let mut basis = Vec::new();
        for level in lo..=hi {
            basis.extend(alg.path_ids().map(|p| HatBasis::path(level, p)));
            if level < hi {
                basis.extend(alg.path_ids().map(|p| HatBasis::dual(level, p)));
            }
        }
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let mut by_source: BTreeMap<HatObject, Vec<usize>> = BTreeMap::new();
        for (i, b) in basis.iter().enumerate() {
            by_source.entry(b.source(alg)).or_default().push(i);
        }
        let mut w = RepetitiveWindow {
            alg,
            lo,
            hi,
            basis,
            index,
            by_source,
            table: HashMap::new(),
        };
        let mut table = HashMap::new();
        for (fi, f) in w.basis.iter().enumerate() {
            for &gi in w.by_source.get(&f.target(alg)).into_iter().flatten() {
                table.insert((gi, fi), compose_basis(alg, w.basis[gi], *f));
            }
        }
        w.table = table;
        w
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    pub fn levels(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn basis(&self) -> &[HatBasis] {
        &self.basis
    }

    pub fn contains_level(&self, level: i64) -> bool {
        (self.lo..=self.hi).contains(&level)
    }

    pub fn contains(&self, b: &HatBasis) -> bool {
        self.index.contains_key(b)
    }

    pub fn objects(&self) -> impl Iterator<Item = HatObject> + '_ {
        (self.lo..=self.hi)
            .flat_map(move |l| self.alg.quiver().vertex_ids().map(move |v| HatObject::new(v, l)))
    }

    /// Basis of `Â(x, y)` inside the window.
    pub fn hom(&self, x: HatObject, y: HatObject) -> Vec<HatBasis> {
        self.by_source
            .get(&x)
            .into_iter()
            .flatten()
            .map(|&i| self.basis[i])
            .filter(|b| b.target(self.alg) == y)
            .collect()
    }

    /// Table lookup for `g ∘ f`; `None` when not composable.
    pub fn compose(&self, g: HatBasis, f: HatBasis) -> Option<&HatElement> {
        let (gi, fi) = (self.index.get(&g)?, self.index.get(&f)?);
        self.table.get(&(*gi, *fi))
    }

    /// Composable pairs `(g, f)` with their products.
    pub fn products(&self) -> impl Iterator<Item = (HatBasis, HatBasis, &HatElement)> + '_ {
        self.table
            .iter()
            .map(|(&(g, f), v)| (self.basis[g], self.basis[f], v))
    }

    fn check_inside(&self, e: &HatElement) -> Result<()> {
        for (b, _) in e.iter() {
            for level in [b.level, b.top_level()] {
                if !self.contains_level(level) {
                    return Err(Error::WindowExit {
                        lo: self.lo,
                        hi: self.hi,
                        level,
                    });
                }
            }
        }
        Ok(())
    }

    /// `ν^k` applied to an element; fails if the image leaves the window.
    pub fn nakayama_shift(&self, e: &HatElement, k: i64) -> Result<HatElement> {
        let out = e.map_linear(|b| LinComb::basis(b.shifted(k)));
        self.check_inside(&out)?;
        Ok(out)
    }

    pub fn apply(&self, auto: &JumpAuto, e: &HatElement) -> Result<HatElement> {
        let out = auto.apply(self.alg, e);
        self.check_inside(&out)?;
        Ok(out)
    }

    /// Every composable triple `(h, g, f)` satisfies `(h∘g)∘f = h∘(g∘f)`.
    /// Returns the number of triples checked, or the first failure.
    pub fn check_associativity(&self) -> std::result::Result<usize, String> {
        let mut count = 0;
        for (fi, f) in self.basis.iter().enumerate() {
            for &gi in self.by_source.get(&f.target(self.alg)).into_iter().flatten() {
                let g = self.basis[gi];
                let gf = &self.table[&(gi, fi)];
                for &hi in self.by_source.get(&g.target(self.alg)).into_iter().flatten() {
                    let h = self.basis[hi];
                    let hg = &self.table[&(hi, gi)];
                    let left = compose_elements(self.alg, hg, &HatElement::basis(*f));
                    let right = compose_elements(self.alg, &HatElement::basis(h), gf);
                    if left != right {
                        return Err(format!(
                            "{} o {} o {}",
                            h.display(self.alg),
                            g.display(self.alg),
                            f.display(self.alg)
                        ));
                    }
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// `auto(g∘f) = auto(g)∘auto(f)` on every composable pair whose images
    /// stay inside the window.
    pub fn is_functorial(&self, auto: &JumpAuto) -> bool {
        self.products().all(|(g, f, gf)| {
            let img = |b: HatBasis| auto.apply(self.alg, &HatElement::basis(b));
            let (ig, if_) = (img(g), img(f));
            if self.check_inside(&ig).is_err() || self.check_inside(&if_).is_err() {
                return true;
            }
            auto.apply(self.alg, gf) == compose_elements(self.alg, &ig, &if_)
        })
    }

    /// True iff `auto` fixes every basis morphism of the window.
    pub fn acts_as_identity(&self, auto: &JumpAuto) -> bool {
        self.basis
            .iter()
            .all(|b| auto.apply(self.alg, &HatElement::basis(*b)) == HatElement::basis(*b))
    }

    /// Reads `λ` off a jump-0 automorphism from its action on `β_{e_x}^[i]`.
    pub fn recover_lambda(&self, auto: &JumpAuto) -> Result<LevelScalars> {
        if auto.jump() != 0 {
            return Err(Error::NonzeroJump(auto.jump()));
        }
        let mut out = LevelScalars::new();
        for level in self.lo..self.hi {
            for v in self.alg.quiver().vertex_ids() {
                let e = self.alg.trivial(v);
                let image = auto.apply(self.alg, &HatElement::basis(HatBasis::dual(level, e)));
                let (_, c) = image.as_monomial().expect("scaling automorphisms act monomially");
                out.set(level, v, c.recip());
            }
        }
        Ok(out)
    }
}

/// A family of nonzero scalars indexed by `(level, vertex)`; missing
/// entries are 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LevelScalars(BTreeMap<(i64, VertexId), Scalar>);

impl LevelScalars {
    pub fn new() -> Self {
        Self::default()
    }

    /// One row of vertex scalars per level.
    pub fn from_rows(rows: impl IntoIterator<Item = (i64, Vec<Scalar>)>) -> Self {
        let mut out = Self::new();
        for (level, row) in rows {
            for (i, s) in row.into_iter().enumerate() {
                out.set(level, VertexId(i), s);
            }
        }
        out
    }

    pub fn get(&self, level: i64, v: VertexId) -> Scalar {
        self.0.get(&(level, v)).cloned().unwrap_or_else(Scalar::one)
    }

    pub fn set(&mut self, level: i64, v: VertexId, s: Scalar) {
        assert!(!s.is_zero(), "level scalars must be nonzero");
        if s.is_one() {
            self.0.remove(&(level, v));
        } else {
            self.0.insert((level, v), s);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, VertexId, &Scalar)> {
        self.0.iter().map(|(&(l, v), s)| (l, v, s))
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest and largest level with a non-unit entry.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.0.keys().next()?.0;
        let hi = self.0.keys().next_back()?.0;
        Some((lo, hi))
    }

    /// `Λ_i(v)`: `λ_0⋯λ_{i-1}` for `i > 0`, `(λ_i⋯λ_{-1})⁻¹` for `i < 0`.
    pub fn cumulative(&self, level: i64, v: VertexId) -> Scalar {
        let mut acc = Scalar::one();
        if level >= 0 {
            for k in 0..level {
                acc *= self.get(k, v);
            }
        } else {
            for k in level..0 {
                acc /= self.get(k, v);
            }
        }
        acc
    }

    pub fn cumulative_row(&self, level: i64, vertices: usize) -> Vec<Scalar> {
        (0..vertices)
            .map(|v| self.cumulative(level, VertexId(v)))
            .collect()
    }

    pub fn mul(&self, other: &LevelScalars) -> LevelScalars {
        let mut out = self.clone();
        for (l, v, s) in other.entries() {
            out.set(l, v, out.get(l, v) * s);
        }
        out
    }

    pub fn inverse(&self) -> LevelScalars {
        LevelScalars(self.0.iter().map(|(k, s)| (*k, s.recip())).collect())
    }
}

/// The automorphism `σ̂ ∘ Φ(λ) ∘ ν^jump` of Â.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JumpAuto {
    jump: i64,
    sigma: ScalingAuto,
    lambda: LevelScalars,
}

impl JumpAuto {
    pub fn new(jump: i64, sigma: ScalingAuto, lambda: LevelScalars) -> Self {
        JumpAuto {
            jump,
            sigma,
            lambda,
        }
    }

    pub fn identity(alg: &Algebra) -> Self {
        Self::new(0, ScalingAuto::identity(alg), LevelScalars::new())
    }

    /// The Nakayama automorphism raised to `n`.
    pub fn nu(alg: &Algebra, n: i64) -> Self {
        Self::new(n, ScalingAuto::identity(alg), LevelScalars::new())
    }

    pub fn hat_lift(sigma: ScalingAuto) -> Self {
        Self::new(0, sigma, LevelScalars::new())
    }

    /// `Φ(λ)`: jump 0, identity at level 0, level `i` acting by `ξ(Λ_i)`.
    pub fn phi(alg: &Algebra, lambda: LevelScalars) -> Self {
        Self::new(0, ScalingAuto::identity(alg), lambda)
    }

    pub fn jump(&self) -> i64 {
        self.jump
    }

    pub fn sigma(&self) -> &ScalingAuto {
        &self.sigma
    }

    pub fn lambda(&self) -> &LevelScalars {
        &self.lambda
    }

    /// `Ψ(f) = f_0` for jump-0 automorphisms.
    pub fn psi(&self) -> Result<ScalingAuto> {
        if self.jump != 0 {
            return Err(Error::NonzeroJump(self.jump));
        }
        Ok(self.sigma.clone())
    }

    /// `(n, f∘ν^{-n})`.
    pub fn decompose(&self) -> (i64, JumpAuto) {
        (self.jump, Self::new(0, self.sigma.clone(), self.lambda.clone()))
    }

    /// `f ∘ ν^n` for a jump-0 `f`.
    pub fn with_jump(&self, n: i64) -> JumpAuto {
        Self::new(self.jump + n, self.sigma.clone(), self.lambda.clone())
    }

    pub fn object(&self, x: HatObject) -> HatObject {
        HatObject::new(self.sigma.vertex(x.vertex), x.level + self.jump)
    }

    /// The map `A → A` induced between level `i` and level `i + jump`.
    pub fn level_component(&self, alg: &Algebra, level: i64) -> ScalingAuto {
        let n = alg.quiver().vertex_count();
        let cumulative = self.lambda.cumulative_row(level + self.jump, n);
        self.sigma.compose(&xi(alg, &cumulative))
    }

    pub fn apply_basis(&self, alg: &Algebra, b: HatBasis) -> (Scalar, HatBasis) {
        let j = b.level + self.jump;
        let path = alg.path(b.path);
        let (c, image) = self.sigma.apply_path(alg, b.path);
        let lam = |level, v| self.lambda.cumulative(level, v);
        match b.kind {
            HatKind::Path => {
                let scale = lam(j, path.source) / lam(j, path.target) * c;
                (scale, HatBasis::path(j, image))
            }
            HatKind::Dual => {
                let c = lam(j + 1, path.source) / lam(j, path.target) * c;
                (c.recip(), HatBasis::dual(j, image))
            }
        }
    }

    pub fn apply(&self, alg: &Algebra, e: &HatElement) -> HatElement {
        e.map_linear(|b| {
            let (c, image) = self.apply_basis(alg, *b);
            LinComb::term(c, image)
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, alg: &Algebra, other: &JumpAuto) -> JumpAuto {
        let nv = alg.quiver().vertex_count();
        let n = self.jump;
        let correction = xi(alg, &other.lambda.cumulative_row(-n, nv));
        let sigma = self.sigma.compose(&other.sigma).compose(&correction);
        let mut lambda = LevelScalars::new();
        let levels = [self.lambda.support(), other.lambda.support().map(|(a, b)| (a + n, b + n))];
        for (lo, hi) in levels.into_iter().flatten() {
            for i in lo..=hi {
                for x in alg.quiver().vertex_ids() {
                    let value = self.lambda.get(i, other.sigma.vertex(x)) * other.lambda.get(i - n, x);
                    lambda.set(i, x, value);
                }
            }
        }
        JumpAuto::new(n + other.jump, sigma, lambda)
    }

    pub fn inverse(&self, alg: &Algebra) -> JumpAuto {
        let n = self.jump;
        let nv = alg.quiver().vertex_count();
        let sigma_inv = self.sigma.inverse();
        let mut mu = LevelScalars::new();
        for (i, x, s) in self.lambda.entries() {
            mu.set(i - n, self.sigma.vertex(x), s.recip());
        }
        let inverse_row: Vec<Scalar> = mu
            .cumulative_row(-n, nv)
            .into_iter()
            .map(|s| s.recip())
            .collect();
        let sigma = sigma_inv.compose(&xi(alg, &inverse_row));
        JumpAuto::new(-n, sigma, mu)
    }

    pub fn pow(&self, alg: &Algebra, k: i64) -> JumpAuto {
        let base = if k < 0 { self.inverse(alg) } else { self.clone() };
        let mut out = JumpAuto::identity(alg);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(alg, &base);
        }
        out
    }
}

impl fmt::Display for HatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HatKind::Path => write!(f, "path"),
            HatKind::Dual => write!(f, "dual"),
        }
    }
}
