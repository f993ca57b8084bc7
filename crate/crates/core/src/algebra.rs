//! Monomial bound quiver algebras with explicit path bases, the dual
//! bimodule, and permutation-and-scaling automorphisms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver, VertexId};
use crate::scalar::{LinComb, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathId(pub usize);

/// A path of the quiver, arrows listed from source to target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, q }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    q: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "e_{}", self.q.vertex_name(self.path.source));
        }
        let parts: Vec<&str> = self
            .path
            .arrows
            .iter()
            .rev()
            .map(|&a| self.q.arrow(a).name.as_str())
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// An element of A: a combination of basis paths.
pub type AlgElement = LinComb<PathId>;

/// `kQ/I` for a monomial admissible ideal `I`.
#[derive(Debug, Clone)]
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Vec<ArrowId>>,
    basis: Vec<Path>,
    index: HashMap<(VertexId, Vec<ArrowId>), PathId>,
    by_pair: BTreeMap<(VertexId, VertexId), Vec<PathId>>,
    dual: DualBasis,
}

impl Algebra {
    /// Enumerates the nonzero paths of `kQ/(rels)`.
    ///
    /// Every relation must be a path of length at least 2 and the quotient
    /// must be finite-dimensional; otherwise the offending oriented cycle is
    /// reported.
    pub fn new(quiver: Quiver, relations: Vec<Vec<ArrowId>>) -> Result<Self> {
        if quiver.vertex_count() == 0 {
            return Err(Error::InvalidQuiver("the quiver has no vertices".into()));
        }
        if !quiver.is_connected() {
            return Err(Error::Disconnected);
        }
        for rel in &relations {
            if rel.len() < 2 {
                return Err(Error::InvalidRelation(format!(
                    "relation of length {} (need at least 2)",
                    rel.len()
                )));
            }
            for w in rel.windows(2) {
                if quiver.target(w[0]) != quiver.source(w[1]) {
                    return Err(Error::InvalidRelation(format!(
                        "`{}` is not followed by `{}` in any path",
                        quiver.arrow(w[0]).name,
                        quiver.arrow(w[1]).name
                    )));
                }
            }
        }

        let mut basis = Vec::new();
        let window = relations.iter().map(Vec::len).max().map_or(0, |l| l - 1);
        for v in quiver.vertex_ids() {
            let mut arrows = Vec::new();
            let mut states = vec![(v, Vec::new())];
            basis.push(Path::trivial(v));
            extend_paths(
                &quiver,
                &relations,
                window,
                v,
                &mut arrows,
                &mut states,
                &mut basis,
            )?;
        }
        basis.sort_by(|p, q| {
            (p.source, p.target, p.len(), &p.arrows).cmp(&(q.source, q.target, q.len(), &q.arrows))
        });

        let mut index = HashMap::new();
        let mut by_pair: BTreeMap<_, Vec<PathId>> = BTreeMap::new();
        for (i, p) in basis.iter().enumerate() {
            index.insert((p.source, p.arrows.clone()), PathId(i));
            by_pair.entry((p.source, p.target)).or_default().push(PathId(i));
        }
        let mut alg = Algebra {
            quiver,
            relations,
            basis,
            index,
            by_pair,
            dual: DualBasis::default(),
        };
        alg.dual = DualBasis::from_pairing(&alg);
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Vec<ArrowId>] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn path(&self, id: PathId) -> &Path {
        &self.basis[id.0]
    }

    pub fn path_ids(&self) -> impl Iterator<Item = PathId> {
        (0..self.basis.len()).map(PathId)
    }

    pub fn lookup(&self, source: VertexId, arrows: &[ArrowId]) -> Option<PathId> {
        self.index.get(&(source, arrows.to_vec())).copied()
    }

    pub fn trivial(&self, v: VertexId) -> PathId {
        self.lookup(v, &[]).expect("trivial paths are basis elements")
    }

    /// Basis of `A(x, y)`, the nonzero paths from `x` to `y`.
    pub fn hom(&self, x: VertexId, y: VertexId) -> &[PathId] {
        self.by_pair.get(&(x, y)).map_or(&[], Vec::as_slice)
    }

    /// `q * p`: first `p`, then `q`. `None` when not composable or zero.
    pub fn mul(&self, q: PathId, p: PathId) -> Option<PathId> {
        let (pp, qq) = (self.path(p), self.path(q));
        if pp.target != qq.source {
            return None;
        }
        let mut arrows = pp.arrows.clone();
        arrows.extend_from_slice(&qq.arrows);
        self.lookup(pp.source, &arrows)
    }

    pub fn mul_elements(&self, q: &AlgElement, p: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (pi, pc) in p.iter() {
            for (qi, qc) in q.iter() {
                if let Some(r) = self.mul(*qi, *pi) {
                    out.add_term(pc * qc, r);
                }
            }
        }
        out
    }

    pub fn dual(&self) -> &DualBasis {
        &self.dual
    }

    /// True iff every `A(x, x)` is spanned by the trivial path.
    pub fn has_no_nonzero_oriented_cycles(&self) -> bool {
        self.first_oriented_cycle_vertex().is_none()
    }

    pub fn first_oriented_cycle_vertex(&self) -> Option<VertexId> {
        self.quiver.vertex_ids().find(|&v| self.hom(v, v).len() > 1)
    }

    pub fn display_path(&self, id: PathId) -> String {
        self.path(id).display(&self.quiver).to_string()
    }
}

fn extend_paths(
    q: &Quiver,
    relations: &[Vec<ArrowId>],
    window: usize,
    at_start: VertexId,
    arrows: &mut Vec<ArrowId>,
    states: &mut Vec<(VertexId, Vec<ArrowId>)>,
    basis: &mut Vec<Path>,
) -> Result<()> {
    let end = arrows.last().map_or(at_start, |&a| q.target(a));
    for a in q.arrow_ids().filter(|&a| q.source(a) == end) {
        arrows.push(a);
        if relations.iter().any(|r| arrows.ends_with(r)) {
            arrows.pop();
            continue;
        }
        let suffix = arrows[arrows.len().saturating_sub(window)..].to_vec();
        let state = (q.target(a), suffix);
        if let Some(pos) = states.iter().position(|s| *s == state) {
            let cycle = Path {
                source: state.0,
                target: state.0,
                arrows: arrows[pos..].to_vec(),
            };
            return Err(Error::NonAdmissible {
                cycle: cycle.display(q).to_string(),
            });
        }
        basis.push(Path {
            source: at_start,
            target: q.target(a),
            arrows: arrows.clone(),
        });
        states.push(state);
        extend_paths(q, relations, window, at_start, arrows, states, basis)?;
        states.pop();
        arrows.pop();
    }
    Ok(())
}

/// Structure constants of the A-A-bimodule `DA`.
///
/// The dual element `β_p` of a basis path `p: y ⇝ x` lives in `D(A(y, x))`.
/// Both actions are expanded through the pairing `β_p(q) = δ_{pq}`:
/// `(g·β_p)(q) = β_p(q∘g)` and `(β_p·f)(q) = β_p(f∘q)`.
#[derive(Debug, Clone, Default)]
pub struct DualBasis {
    left: HashMap<(PathId, PathId), AlgElement>,
    right: HashMap<(PathId, PathId), AlgElement>,
}

impl DualBasis {
    pub fn from_pairing(alg: &Algebra) -> Self {
        let mut left = HashMap::new();
        let mut right = HashMap::new();
        for p in alg.path_ids() {
            let (y, x) = (alg.path(p).source, alg.path(p).target);
            // g: y -> y', result in D(A(y', x))
            for g in alg.path_ids().filter(|&g| alg.path(g).source == y) {
                let y2 = alg.path(g).target;
                let value: AlgElement = alg
                    .hom(y2, x)
                    .iter()
                    .filter(|&&q| alg.mul(q, g) == Some(p))
                    .map(|&q| (Scalar::one(), q))
                    .collect();
                left.insert((g, p), value);
            }
            // f: x' -> x, result in D(A(y, x'))
            for f in alg.path_ids().filter(|&f| alg.path(f).target == x) {
                let x2 = alg.path(f).source;
                let value: AlgElement = alg
                    .hom(y, x2)
                    .iter()
                    .filter(|&&q| alg.mul(f, q) == Some(p))
                    .map(|&q| (Scalar::one(), q))
                    .collect();
                right.insert((p, f), value);
            }
        }
        DualBasis { left, right }
    }

    /// `g · β_p`, as a combination of dual elements (labelled by their paths).
    pub fn left_action(&self, g: PathId, p: PathId) -> AlgElement {
        self.left.get(&(g, p)).cloned().unwrap_or_default()
    }

    /// `β_p · f`.
    pub fn right_action(&self, p: PathId, f: PathId) -> AlgElement {
        self.right.get(&(p, f)).cloned().unwrap_or_default()
    }

    /// Evaluates `β_p` on an element of A.
    pub fn pair(p: PathId, element: &AlgElement) -> Scalar {
        element.coeff(&p)
    }
}

/// An automorphism of A that permutes vertices and arrows and rescales arrows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalingAuto {
    vertex_perm: Vec<VertexId>,
    arrow_perm: Vec<ArrowId>,
    scalars: Vec<Scalar>,
}

impl ScalingAuto {
    pub fn new(
        alg: &Algebra,
        vertex_perm: Vec<VertexId>,
        arrow_perm: Vec<ArrowId>,
        scalars: Vec<Scalar>,
    ) -> Result<Self> {
        let q = alg.quiver();
        let bad = |msg: String| Err(Error::InvalidAutomorphism(msg));
        if vertex_perm.len() != q.vertex_count()
            || arrow_perm.len() != q.arrow_count()
            || scalars.len() != q.arrow_count()
        {
            return bad("size does not match the quiver".into());
        }
        if !is_permutation(vertex_perm.iter().map(|v| v.0), q.vertex_count())
            || !is_permutation(arrow_perm.iter().map(|a| a.0), q.arrow_count())
        {
            return bad("vertex or arrow map is not a bijection".into());
        }
        for a in q.arrow_ids() {
            let image = arrow_perm[a.0];
            if q.source(image) != vertex_perm[q.source(a).0]
                || q.target(image) != vertex_perm[q.target(a).0]
            {
                return bad(format!(
                    "arrow `{}` is sent to `{}` with incompatible endpoints",
                    q.arrow(a).name,
                    q.arrow(image).name
                ));
            }
            if scalars[a.0].is_zero() {
                return bad(format!("zero scalar on arrow `{}`", q.arrow(a).name));
            }
        }
        let auto = ScalingAuto {
            vertex_perm,
            arrow_perm,
            scalars,
        };
        for p in alg.path_ids() {
            let path = alg.path(p);
            let image: Vec<ArrowId> = path.arrows.iter().map(|&a| auto.arrow(a)).collect();
            if alg.lookup(auto.vertex(path.source), &image).is_none() {
                return bad(format!(
                    "the nonzero path {} is sent into the ideal",
                    alg.display_path(p)
                ));
            }
        }
        Ok(auto)
    }

    pub fn identity(alg: &Algebra) -> Self {
        let q = alg.quiver();
        ScalingAuto {
            vertex_perm: q.vertex_ids().collect(),
            arrow_perm: q.arrow_ids().collect(),
            scalars: vec![Scalar::one(); q.arrow_count()],
        }
    }

    /// Identity on vertices and arrows, arrow `a` scaled by `scalars[a]`.
    pub fn diagonal(alg: &Algebra, scalars: Vec<Scalar>) -> Result<Self> {
        let q = alg.quiver();
        Self::new(alg, q.vertex_ids().collect(), q.arrow_ids().collect(), scalars)
    }

    pub fn vertex(&self, v: VertexId) -> VertexId {
        self.vertex_perm[v.0]
    }

    pub fn arrow(&self, a: ArrowId) -> ArrowId {
        self.arrow_perm[a.0]
    }

    pub fn scalar(&self, a: ArrowId) -> &Scalar {
        &self.scalars[a.0]
    }

    pub fn scalars(&self) -> &[Scalar] {
        &self.scalars
    }

    pub fn vertex_perm(&self) -> &[VertexId] {
        &self.vertex_perm
    }

    pub fn arrow_perm(&self) -> &[ArrowId] {
        &self.arrow_perm
    }

    pub fn is_diagonal(&self) -> bool {
        self.vertex_perm.iter().enumerate().all(|(i, v)| v.0 == i)
            && self.arrow_perm.iter().enumerate().all(|(i, a)| a.0 == i)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &ScalingAuto) -> ScalingAuto {
        let n = other.arrow_perm.len();
        ScalingAuto {
            vertex_perm: other.vertex_perm.iter().map(|&v| self.vertex(v)).collect(),
            arrow_perm: other.arrow_perm.iter().map(|&a| self.arrow(a)).collect(),
            scalars: (0..n)
                .map(|i| &other.scalars[i] * self.scalar(other.arrow_perm[i]))
                .collect(),
        }
    }

    pub fn inverse(&self) -> ScalingAuto {
        let mut vertex_perm = vec![VertexId(0); self.vertex_perm.len()];
        for (i, v) in self.vertex_perm.iter().enumerate() {
            vertex_perm[v.0] = VertexId(i);
        }
        let mut arrow_perm = vec![ArrowId(0); self.arrow_perm.len()];
        let mut scalars = vec![Scalar::one(); self.arrow_perm.len()];
        for (i, a) in self.arrow_perm.iter().enumerate() {
            arrow_perm[a.0] = ArrowId(i);
            scalars[a.0] = self.scalars[i].recip();
        }
        ScalingAuto {
            vertex_perm,
            arrow_perm,
            scalars,
        }
    }

    /// Product of the arrow scalars along a path.
    pub fn path_scalar(&self, path: &Path) -> Scalar {
        path.arrows
            .iter()
            .fold(Scalar::one(), |acc, &a| acc * self.scalar(a))
    }

    /// Image of a basis path: a scalar times another basis path.
    pub fn apply_path(&self, alg: &Algebra, p: PathId) -> (Scalar, PathId) {
        let path = alg.path(p);
        let image: Vec<ArrowId> = path.arrows.iter().map(|&a| self.arrow(a)).collect();
        let id = alg
            .lookup(self.vertex(path.source), &image)
            .expect("automorphisms preserve the ideal");
        (self.path_scalar(path), id)
    }

    pub fn apply(&self, alg: &Algebra, element: &AlgElement) -> AlgElement {
        element.map_linear(|&p| {
            let (c, q) = self.apply_path(alg, p);
            LinComb::term(c, q)
        })
    }
}

/// `ξ(λ)`: the identity on vertices, arrow `a: x → y` scaled by `λ(y)⁻¹λ(x)`.
pub fn xi(alg: &Algebra, lambda: &[Scalar]) -> ScalingAuto {
    let q = alg.quiver();
    assert_eq!(lambda.len(), q.vertex_count(), "lambda must cover every vertex");
    let scalars = q
        .arrow_ids()
        .map(|a| &lambda[q.source(a).0] / &lambda[q.target(a).0])
        .collect();
    ScalingAuto {
        vertex_perm: q.vertex_ids().collect(),
        arrow_perm: q.arrow_ids().collect(),
        scalars,
    }
}

fn is_permutation(images: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for i in images {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn a3() -> Algebra {
        let q = Quiver::new(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")]).unwrap();
        Algebra::new(q, vec![]).unwrap()
    }

    fn two_cycle() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let (a, b) = (ArrowId(0), ArrowId(1));
        Algebra::new(q, vec![vec![a, b], vec![b, a]]).unwrap()
    }

    fn names(alg: &Algebra) -> Vec<String> {
        alg.path_ids().map(|p| alg.display_path(p)).collect()
    }

    #[test]
    fn a3_basis() {
        let alg = a3();
        assert_eq!(alg.dim(), 6);
        let mut n = names(&alg);
        n.sort();
        assert_eq!(n, ["alpha", "beta", "beta*alpha", "e_1", "e_2", "e_3"]);
        assert!(alg.has_no_nonzero_oriented_cycles());
    }

    #[test]
    fn two_cycle_basis() {
        let alg = two_cycle();
        assert_eq!(alg.dim(), 4);
        let mut n = names(&alg);
        n.sort();
        assert_eq!(n, ["a", "b", "e_1", "e_2"]);
        assert!(alg.has_no_nonzero_oriented_cycles());
    }

    #[test]
    fn non_admissible_relations_name_the_cycle() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let err = Algebra::new(q.clone(), vec![]).unwrap_err();
        assert_eq!(
            err,
            Error::NonAdmissible {
                cycle: "b*a".into()
            }
        );
        // only ab = 0: (ba)(ba) still contains ab
        let ok = Algebra::new(q.clone(), vec![vec![ArrowId(0), ArrowId(1)]]).unwrap();
        assert_eq!(ok.dim(), 5);
        let err = Algebra::new(q, vec![vec![ArrowId(0)]]).unwrap_err();
        assert!(matches!(err, Error::InvalidRelation(_)));
    }

    #[test]
    fn loop_with_square_zero_has_an_oriented_cycle() {
        let q = Quiver::new(&["1"], &[("l", "1", "1")]).unwrap();
        let alg = Algebra::new(q, vec![vec![ArrowId(0), ArrowId(0)]]).unwrap();
        assert_eq!(alg.dim(), 2);
        assert!(!alg.has_no_nonzero_oriented_cycles());
    }

    #[test]
    fn disconnected_quivers_are_refused() {
        let q = Quiver::new(&["1", "2"], &[] as &[(&str, &str, &str)]).unwrap();
        assert_eq!(Algebra::new(q, vec![]).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn multiplication_concatenates() {
        let alg = a3();
        let alpha = alg.lookup(VertexId(0), &[ArrowId(0)]).unwrap();
        let beta = alg.lookup(VertexId(1), &[ArrowId(1)]).unwrap();
        let ba = alg.lookup(VertexId(0), &[ArrowId(0), ArrowId(1)]).unwrap();
        assert_eq!(alg.mul(beta, alpha), Some(ba));
        assert_eq!(alg.mul(alpha, beta), None);
        assert_eq!(alg.mul(alpha, alg.trivial(VertexId(0))), Some(alpha));

        let alg = two_cycle();
        let a = alg.lookup(VertexId(0), &[ArrowId(0)]).unwrap();
        let b = alg.lookup(VertexId(1), &[ArrowId(1)]).unwrap();
        assert_eq!(alg.mul(b, a), None);
    }

    #[test]
    fn dual_actions_through_the_pairing() {
        let alg = a3();
        let alpha = alg.lookup(VertexId(0), &[ArrowId(0)]).unwrap();
        let beta = alg.lookup(VertexId(1), &[ArrowId(1)]).unwrap();
        let ba = alg.lookup(VertexId(0), &[ArrowId(0), ArrowId(1)]).unwrap();
        // alpha · β_{βα} = β_β
        assert_eq!(alg.dual().left_action(alpha, ba), LinComb::basis(beta));
        // β_{βα} · beta = β_α
        assert_eq!(alg.dual().right_action(ba, beta), LinComb::basis(alpha));
        // idempotents act as identity on the matching side, zero otherwise
        let e1 = alg.trivial(VertexId(0));
        let e3 = alg.trivial(VertexId(2));
        assert_eq!(alg.dual().left_action(e1, ba), LinComb::basis(ba));
        assert_eq!(alg.dual().right_action(ba, e3), LinComb::basis(ba));
        assert!(alg.dual().left_action(e3, ba).is_zero());

        let alg = two_cycle();
        let a = alg.lookup(VertexId(0), &[ArrowId(0)]).unwrap();
        let e1 = alg.trivial(VertexId(0));
        let e2 = alg.trivial(VertexId(1));
        // (β_a · a)(e_1) = β_a(a) = 1 and (a · β_a)(e_2) = β_a(a) = 1
        assert_eq!(alg.dual().right_action(a, a), LinComb::basis(e1));
        assert_eq!(alg.dual().left_action(a, a), LinComb::basis(e2));
    }

    #[test]
    fn xi_examples() {
        let alg = a3();
        let x = xi(&alg, &[int(1), int(2), int(6)]);
        assert_eq!(x.scalars(), &[ratio(1, 2), ratio(1, 3)]);
        let ba = alg.lookup(VertexId(0), &[ArrowId(0), ArrowId(1)]).unwrap();
        assert_eq!(x.apply_path(&alg, ba), (ratio(1, 6), ba));
        assert_eq!(xi(&alg, &[int(5), int(5), int(5)]), ScalingAuto::identity(&alg));

        let alg = two_cycle();
        let x = xi(&alg, &[int(1), int(3)]);
        assert_eq!(x.scalars(), &[ratio(1, 3), int(3)]);
    }

    #[test]
    fn composition_and_inverse() {
        let alg = two_cycle();
        let swap = ScalingAuto::new(
            &alg,
            vec![VertexId(1), VertexId(0)],
            vec![ArrowId(1), ArrowId(0)],
            vec![int(2), ratio(-1, 5)],
        )
        .unwrap();
        assert_eq!(swap.compose(&swap.inverse()), ScalingAuto::identity(&alg));
        assert_eq!(swap.inverse().compose(&swap), ScalingAuto::identity(&alg));

        let f = ScalingAuto::diagonal(&alg, vec![int(2), int(3)]).unwrap();
        let g = ScalingAuto::diagonal(&alg, vec![int(5), int(7)]).unwrap();
        assert_eq!(f.compose(&g).scalars(), &[int(10), int(21)]);

        // apply(f ∘ g) = apply(f) ∘ apply(g) on every basis path
        for p in alg.path_ids() {
            let lhs = swap.compose(&f).apply(&alg, &LinComb::basis(p));
            let rhs = swap.apply(&alg, &f.apply(&alg, &LinComb::basis(p)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn invalid_automorphisms_are_rejected() {
        let alg = a3();
        // swapping endpoints of a path is not compatible
        assert!(ScalingAuto::new(
            &alg,
            vec![VertexId(2), VertexId(1), VertexId(0)],
            vec![ArrowId(1), ArrowId(0)],
            vec![int(1), int(1)],
        )
        .is_err());
        assert!(ScalingAuto::diagonal(&alg, vec![int(0), int(1)]).is_err());

        // a permutation that moves a zero relation onto a nonzero path
        let q = Quiver::new(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3")],
        )
        .unwrap();
        let alg = Algebra::new(q, vec![vec![ArrowId(0), ArrowId(1)]]).unwrap();
        let err = ScalingAuto::new(
            &alg,
            vec![VertexId(0), VertexId(1), VertexId(2)],
            vec![ArrowId(0), ArrowId(2), ArrowId(1)],
            vec![int(1), int(1), int(1)],
        );
        assert!(err.is_err());
    }
}
