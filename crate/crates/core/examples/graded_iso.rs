//! End to end: an automorphism with jump 2 against its twisted extension.
use quiver_orbit::algebra::{Algebra, ScalingAuto};
use quiver_orbit::orbit::{certify_against_twist, verify_graded_iso, Verdict};
use quiver_orbit::quiver::{ArrowId, Quiver};
use quiver_orbit::repetitive::{JumpAuto, LevelScalars};
use quiver_orbit::scalar::{int, ratio};

fn main() -> quiver_orbit::Result<()> {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")])?;
    let alg = Algebra::new(q, vec![vec![ArrowId(0), ArrowId(1)], vec![ArrowId(1), ArrowId(0)]])?;
    let sigma = ScalingAuto::diagonal(&alg, vec![int(5), ratio(-1, 2)])?;
    let lambda = LevelScalars::from_rows([(0, vec![int(3), int(7)]), (1, vec![ratio(1, 4), int(1)])]);
    let phi = JumpAuto::new(2, sigma, lambda);
    match certify_against_twist(&alg, &phi)? {
        Verdict::Isomorphic(cert) => {
            let (src, dst, iso) = cert.orbits.expect("nonzero jump");
            println!("rho0 = {:?}", cert.rho0.values().iter().map(|s| s.to_string()).collect::<Vec<_>>());
            println!("orbit dims {} and {}", src.dim(), dst.dim());
            println!("iso verified: {}", verify_graded_iso(&iso, &src, &dst));
            for (i, s) in iso.scalars().iter().enumerate().filter(|(_, s)| !num::One::is_one(*s)).take(6) {
                println!("  {} scaled by {s}", src.basis_name(i));
            }
        }
        Verdict::NotIsomorphic(why) => println!("not isomorphic: {why}"),
    }
    Ok(())
}
