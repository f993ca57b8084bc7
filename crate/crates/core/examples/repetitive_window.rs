//! A window of the repetitive category, the Nakayama shift and level scalings.
use quiver_orbit::algebra::{Algebra, ScalingAuto};
use quiver_orbit::quiver::{Quiver, VertexId};
use quiver_orbit::repetitive::{HatElement, HatObject, JumpAuto, LevelScalars, RepetitiveWindow};
use quiver_orbit::scalar::{int, ratio};

fn main() -> quiver_orbit::Result<()> {
    let q = Quiver::new(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")])?;
    let alg = Algebra::new(q, vec![])?;
    let w = RepetitiveWindow::new(&alg, -1, 1);
    println!("window basis: {} morphisms", w.basis().len());
    let (x, y) = (HatObject::new(VertexId(0), 0), HatObject::new(VertexId(0), 1));
    for b in w.hom(x, y) {
        println!("hom {} -> {}: {}", x.display(&alg), y.display(&alg), b.display(&alg));
    }
    println!("associative on {} triples", w.check_associativity().expect("associative"));

    let b = w.basis()[3];
    let shifted = w.nakayama_shift(&HatElement::basis(b), 1)?;
    let (image, _) = shifted.as_monomial().unwrap();
    println!("nu({}) = {}", b.display(&alg), image.display(&alg));

    let sigma = ScalingAuto::diagonal(&alg, vec![int(2), int(3)])?;
    let lambda = LevelScalars::from_rows([(0, vec![ratio(1, 6), ratio(1, 3), int(1)])]);
    let f = JumpAuto::new(1, sigma, lambda);
    println!("functorial: {}", w.is_functorial(&f));
    for level in -1..=2 {
        let c = f.level_component(&alg, level);
        println!("level {level} to {}: alpha x{}, beta x{}", level + 1, c.scalars()[0], c.scalars()[1]);
    }
    Ok(())
}
