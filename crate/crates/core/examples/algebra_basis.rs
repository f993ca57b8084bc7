//! Path bases of a monomial algebra, dual actions, and the ξ automorphisms.
use quiver_orbit::algebra::{xi, Algebra};
use quiver_orbit::quiver::{ArrowId, Quiver, VertexId};
use quiver_orbit::scalar::int;

fn main() -> quiver_orbit::Result<()> {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")])?;
    let alg = Algebra::new(q, vec![vec![ArrowId(0), ArrowId(1)], vec![ArrowId(1), ArrowId(0)]])?;
    println!("dim {}", alg.dim());
    for p in alg.path_ids() {
        println!("  {}", alg.display_path(p));
    }
    println!("oriented cycles vanish: {}", alg.has_no_nonzero_oriented_cycles());

    let a = alg.lookup(VertexId(0), &[ArrowId(0)]).unwrap();
    let dual = alg.dual();
    for (p, s) in dual.right_action(a, a).iter() {
        println!("D(a) . a = {s} D({})", alg.display_path(*p));
    }

    let scale = xi(&alg, &[int(1), int(3)]);
    println!("xi(1, 3) scales a by {} and b by {}", scale.scalar(ArrowId(0)), scale.scalar(ArrowId(1)));

    let free = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")])?;
    match Algebra::new(free, vec![]) {
        Err(e) => println!("without relations: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
