//! Simple cycles up to rotation and inversion, and spanning walks.
use quiver_orbit::quiver::{cycles_equivalent, enumerate_simple_cycles, spanning_walks, Quiver};

fn main() -> quiver_orbit::Result<()> {
    let q = Quiver::new(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "1", "3")],
    )?;
    let cycles = enumerate_simple_cycles(&q);
    for c in &cycles {
        println!("cycle {} (length {})", c.display(&q), c.len());
        let turned = c.rotate(&q, 1)?;
        assert!(cycles_equivalent(&q, c, &turned));
        println!("  rotated: {}", turned.display(&q));
    }
    for tree in spanning_walks(&q) {
        println!("base {}", q.vertex_name(tree.base));
        for (v, walk) in &tree.walks {
            println!("  to {}: {}", q.vertex_name(*v), walk.display(&q));
        }
    }
    Ok(())
}
