//! Scott, Lawson, patch and upper/lower topologies of the four-element Boolean lattice.

use ordertop::finstruct::Lattice;
use ordertop::topoderive::{self, Coselection};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = Lattice::diamond().to_qoset()?;
    println!("weak upper: {:?}", topoderive::weak_upper(&square).opens());
    println!("scott:      {:?}", topoderive::scott(&square).opens());
    println!("lawson:     {:?}", topoderive::lawson(&square).opens());

    let scott = topoderive::scott(&square);
    for zeta in Coselection::ALL {
        let p = topoderive::patch(&scott, zeta);
        println!("patch:{zeta} has {} opens; its upper space is the Scott topology again: {}",
            p.topology().opens().len(),
            topoderive::upper_space(&p) == scott);
    }
    let p = topoderive::patch(&scott, Coselection::Upsilon);
    println!("lower space of the weak patch: {:?}", topoderive::lower_space(&p).opens());
    println!("cocompact topology: {:?}", topoderive::cocompact(&scott).opens());
    println!("interior relation:\n{:?}", topoderive::interior_relation(&scott));

    let q = topoderive::quasi_uniformity(&topoderive::alexandroff(&square))?;
    println!("quasi-uniformity base has {} entourages", q.members().len());
    Ok(())
}
