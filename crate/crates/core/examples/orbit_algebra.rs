//! The trivial extension of A3 as a graded orbit algebra, with its table.
use quiver_orbit::algebra::{Algebra, ScalingAuto};
use quiver_orbit::oracle::structure_table;
use quiver_orbit::orbit::twisted_extension;
use quiver_orbit::quiver::Quiver;

fn main() -> quiver_orbit::Result<()> {
    let q = Quiver::new(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")])?;
    let alg = Algebra::new(q, vec![])?;
    for n in [1, 2] {
        let t = twisted_extension(&alg, &ScalingAuto::identity(&alg), n)?;
        println!("jump {n}: dim {}, degrees {:?}", t.dim(), t.degree_histogram());
        assert!(t.check_grading() && t.check_associativity().is_ok());
    }
    let t = twisted_extension(&alg, &ScalingAuto::identity(&alg), 1)?;
    for line in structure_table(&t).lines().iter().take(16) {
        println!("{line}");
    }
    Ok(())
}
