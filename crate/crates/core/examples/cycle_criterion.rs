//! Deciding whether two automorphisms give isomorphic orbit categories.
use quiver_orbit::algebra::{Algebra, ScalingAuto};
use quiver_orbit::criterion::decide;
use quiver_orbit::quiver::{ArrowId, Quiver};
use quiver_orbit::scalar::int;

fn main() -> quiver_orbit::Result<()> {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")])?;
    let alg = Algebra::new(q, vec![vec![ArrowId(0), ArrowId(1)], vec![ArrowId(1), ArrowId(0)]])?;
    let g = ScalingAuto::diagonal(&alg, vec![int(2), int(3)])?;
    for h in [vec![int(6), int(1)], vec![int(2), int(2)]] {
        let label = format!("({}, {})", h[0], h[1]);
        let h = ScalingAuto::diagonal(&alg, h)?;
        match decide(&alg, &g, &h)? {
            Ok(rho) => println!("(2, 3) vs {label}: equivalent, rho = {:?}", rho.values().iter().map(|s| s.to_string()).collect::<Vec<_>>()),
            Err(why) => println!("(2, 3) vs {label}: not equivalent, {why}"),
        }
    }
    Ok(())
}
