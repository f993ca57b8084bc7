//! Extending ρ across levels for an automorphism that rescales one level of A3.
use quiver_orbit::algebra::{Algebra, ScalingAuto};
use quiver_orbit::criterion::{rho_on_window, RhoMap};
use quiver_orbit::quiver::Quiver;
use quiver_orbit::repetitive::{JumpAuto, LevelScalars};
use quiver_orbit::scalar::{int, ratio};

fn main() -> quiver_orbit::Result<()> {
    let q = Quiver::new(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")])?;
    let alg = Algebra::new(q, vec![])?;
    let sigma = ScalingAuto::diagonal(&alg, vec![int(2), int(3)])?;
    let lambda = LevelScalars::from_rows([
        (-1, vec![int(1), ratio(1, 2), ratio(1, 6)]),
        (0, vec![ratio(1, 6), ratio(1, 3), int(1)]),
    ]);
    let psi = JumpAuto::new(0, sigma.clone(), lambda);
    let hat = JumpAuto::hat_lift(sigma);
    for n in [0, 1] {
        let rho = rho_on_window(&alg, &psi.with_jump(n), &hat.with_jump(n), &RhoMap::ones(3), -2, 2)?;
        println!("jump {n}:");
        for level in -2..=2 {
            let row = rho.level(level, 3).unwrap();
            let row: Vec<String> = row.values().iter().map(|s| s.to_string()).collect();
            println!("  level {level}: {}", row.join(", "));
        }
    }
    Ok(())
}
