mod common;

use proptest::prelude::*;
use quiver_orbit::algebra::{xi, ScalingAuto};
use quiver_orbit::criterion::{build_rho, check_cycle_condition, rho_is_valid};
use quiver_orbit::oracle::{all_closed_walks_pass, all_cycles_pass, enumerate_all_cycles};
use quiver_orbit::problem::Problem;
use quiver_orbit::quiver::{cycles_equivalent, walk_value};
use quiver_orbit::repetitive::{HatElement, JumpAuto, RepetitiveWindow};
use quiver_orbit::scalar::{parse_scalar, ratio};
use quiver_orbit::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn unit() -> impl Strategy<Value = Scalar> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn units(k: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(unit(), k)
}

/// A random jump automorphism of one of the two fixture algebras.
fn jump_auto(seed: u64, which: bool, jump: i64) -> (quiver_orbit::algebra::Algebra, JumpAuto) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = if which { a3() } else { two_cycle() };
    let sigma = random_sigma(&mut rng, &alg);
    let lambda = random_lambda(&mut rng, &alg, -2, 2);
    (alg.clone(), JumpAuto::new(jump, sigma, lambda))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_print_and_parse(s in unit()) {
        prop_assert_eq!(parse_scalar(&s.to_string()), Some(s));
    }

    #[test]
    fn xi_is_multiplicative(l in units(3), m in units(3)) {
        let alg = a3();
        let lm: Vec<Scalar> = l.iter().zip(&m).map(|(a, b)| a * b).collect();
        prop_assert_eq!(xi(&alg, &lm), xi(&alg, &l).compose(&xi(&alg, &m)));
    }

    #[test]
    fn constant_xi_is_trivial(c in unit()) {
        let alg = two_cycle();
        prop_assert_eq!(xi(&alg, &[c.clone(), c]), ScalingAuto::identity(&alg));
    }

    #[test]
    fn scaling_autos_form_a_group(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = two_cycle();
        let (f, g) = (random_sigma(&mut rng, &alg), random_sigma(&mut rng, &alg));
        prop_assert_eq!(f.compose(&f.inverse()), ScalingAuto::identity(&alg));
        prop_assert_eq!(f.compose(&g).inverse(), g.inverse().compose(&f.inverse()));
    }

    #[test]
    fn jump_composition_matches_the_action(seed in any::<u64>(), which in any::<bool>(), n in -2i64..=2, m in -2i64..=2) {
        let (alg, f) = jump_auto(seed, which, n);
        let (_, g) = jump_auto(seed.wrapping_add(1), which, m);
        let fg = f.compose(&alg, &g);
        prop_assert_eq!(fg.jump(), n + m);
        let w = RepetitiveWindow::new(&alg, -1, 1);
        for b in w.basis() {
            let e = HatElement::basis(*b);
            prop_assert_eq!(fg.apply(&alg, &e), f.apply(&alg, &g.apply(&alg, &e)));
            let back = f.inverse(&alg).apply(&alg, &f.apply(&alg, &e));
            prop_assert_eq!(back, e);
        }
    }

    #[test]
    fn jump_autos_are_functorial(seed in any::<u64>(), which in any::<bool>(), n in -2i64..=2) {
        let (alg, f) = jump_auto(seed, which, n);
        let w = RepetitiveWindow::new(&alg, -3, 3);
        prop_assert!(w.is_functorial(&f));
    }

    #[test]
    fn decomposition_recombines(seed in any::<u64>(), which in any::<bool>(), n in -3i64..=3) {
        let (alg, f) = jump_auto(seed, which, n);
        let (jump, level) = f.decompose();
        prop_assert_eq!(jump, n);
        prop_assert_eq!(level.jump(), 0);
        let w = RepetitiveWindow::new(&alg, -2, 2);
        let recombined = level.compose(&alg, &JumpAuto::nu(&alg, n));
        for b in w.basis() {
            let e = HatElement::basis(*b);
            prop_assert_eq!(recombined.apply(&alg, &e), f.apply(&alg, &e));
        }
    }

    #[test]
    fn rho_is_symmetric(g in units(2), h in units(2)) {
        let alg = two_cycle();
        let g = ScalingAuto::diagonal(&alg, g).unwrap();
        let h = ScalingAuto::diagonal(&alg, h).unwrap();
        let forward = build_rho(&alg, &g, &h).unwrap();
        let backward = build_rho(&alg, &h, &g).unwrap();
        prop_assert_eq!(forward.is_some(), backward.is_some());
        if let (Some(f), Some(b)) = (forward, backward) {
            prop_assert!(rho_is_valid(&alg, &g, &h, &f));
            for (x, y) in f.values().iter().zip(b.values()) {
                prop_assert_eq!(x * y, ratio(1, 1));
            }
        }
    }

    #[test]
    fn cycle_values_respect_equivalence(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, 4, 6);
        let e = random_arrow_scalars(&mut rng, &q);
        for c in enumerate_all_cycles(&q, 4).cycles {
            let v = walk_value(&e, c.walk()).unwrap();
            for s in 1..=c.len() {
                let r = c.rotate(&q, s).unwrap();
                prop_assert!(cycles_equivalent(&q, &c, &r));
                prop_assert_eq!(walk_value(&e, r.walk()).unwrap(), v.clone());
            }
            if c.is_backtrack() {
                prop_assert_eq!(v, ratio(1, 1));
            }
        }
    }

    #[test]
    fn oracles_agree_with_the_criterion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, 4, 6);
        let e = random_arrow_scalars(&mut rng, &q);
        let bound = 2 * q.vertex_count();
        let simple = check_cycle_condition(&q, &e);
        prop_assert_eq!(all_closed_walks_pass(&q, &e, bound), simple);
        prop_assert_eq!(all_cycles_pass(&e, &enumerate_all_cycles(&q, bound.min(6))), all_closed_walks_pass(&q, &e, bound.min(6)));
    }

    #[test]
    fn problems_round_trip(seed in any::<u64>(), jump in -3i64..=3, scales in units(2), level in -3i64..=3, l in unit()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, 4, 5);
        let mut text = String::from("[quiver]\nvertices =");
        for v in q.vertex_ids() {
            text += &format!(" {}", q.vertex_name(v));
        }
        text += "\n";
        for a in q.arrows() {
            text += &format!("arrow {} = {} -> {}\n", a.name, q.vertex_name(a.source), q.vertex_name(a.target));
        }
        text += &format!("[auto f]\njump = {jump}\nscale a0 = {}\nlambda {level} 1 = {l}\n", scales[0]);
        if q.arrow_count() > 1 {
            text += &format!("scale a1 = {}\n", scales[1]);
        }
        let p = Problem::parse(&text).unwrap();
        prop_assert_eq!(Problem::parse(&p.to_text()).unwrap(), p);
    }
}
