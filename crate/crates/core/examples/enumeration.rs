//! Count labelled structures and check that topologies match quasi-orders.

use ordertop::labcli::enumerate;

fn main() {
    for n in 1..=5 {
        println!("n={n}: {} quasi-orders, {} partial orders, {} topologies, {} T0 topologies",
            enumerate::qosets(n).len(),
            enumerate::partial_orders(n).len(),
            enumerate::topologies(n).len(),
            enumerate::t0_topologies(n).len());
    }
    let lattices: Vec<usize> = (1..=7).map(|m| enumerate::lattices_unlabeled(m).len()).collect();
    println!("lattices up to isomorphism with 1..7 elements: {lattices:?}");
}
