//! Distributivity laws, witnesses and weights on small lattices.

use ordertop::finstruct::Lattice;
use ordertop::latid::{self, LatticeLaw};

fn main() {
    for (name, l) in [("2x2", Lattice::diamond()), ("M3", Lattice::m3()), ("N5", Lattice::n5()), ("chain-4", Lattice::chain(4))] {
        println!("{name}:");
        for law in LatticeLaw::ALL {
            let v = latid::check_law(&l, law);
            match v.witness {
                None => println!("  {:<24} holds", law.tag()),
                Some(w) => println!("  {:<24} fails, witness {w:?}", law.tag()),
            }
        }
        let w = latid::min_join_dense(&l);
        println!("  weight {} (dual {}), coprimes {:?}",
            w.weight,
            latid::min_join_dense(&l.dual()).weight,
            ordertop::finstruct::mask_iter(latid::coprimes(&l)).collect::<Vec<_>>());
    }
}
