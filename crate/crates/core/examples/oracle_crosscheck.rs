//! The simple-cycle test against brute force over every closed walk.
use quiver_orbit::criterion::check_cycle_condition;
use quiver_orbit::oracle::{all_closed_walks_pass, all_cycles_pass, enumerate_all_cycles};
use quiver_orbit::quiver::{ArrowId, ArrowScalars, Quiver};
use quiver_orbit::scalar::{int, ratio};

fn main() {
    let q = Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]);
    let families = [
        ("coboundary", [int(2), ratio(3, 2), ratio(1, 3), int(3)]),
        ("broken", [int(2), int(3), int(5), int(7)]),
    ];
    for (name, values) in families {
        let e: ArrowScalars = values.iter().enumerate().map(|(i, s)| (ArrowId(i), s.clone())).collect();
        let bound = 2 * q.vertex_count();
        let inventory = enumerate_all_cycles(&q, bound);
        println!(
            "{name}: simple cycles {}, {} closed walks {}, propagation {}",
            check_cycle_condition(&q, &e),
            inventory.len(),
            all_cycles_pass(&e, &inventory),
            all_closed_walks_pass(&q, &e, bound),
        );
    }
}
