//! Build, encode, decode and compare small structures.

use ordertop::finstruct::{is_isomorphic, Lattice, Qoset, Record, Topology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sierpinski = Topology::sierpinski();
    let text = Record::from(sierpinski.clone()).encode();
    println!("sierpinski: {text}");
    assert_eq!(Record::decode(&text)?, Record::Topology(sierpinski));

    let chain = Qoset::new(3, &[vec![true, true, true], vec![false, true, true], vec![false, false, true]])?;
    println!("3-chain antisymmetric: {}", chain.is_antisymmetric());
    println!("dual of the 3-chain isomorphic to it: {}", is_isomorphic(&chain, &chain.dual()));

    let m3 = Lattice::m3();
    let n5 = Lattice::n5();
    println!("M3 ≅ N5: {}", is_isomorphic(&m3, &n5));
    println!("N5 ≅ dual N5: {}", is_isomorphic(&n5, &n5.dual()));

    let bad = r#"{"kind":"topology","n":2,"opens":[[],[0],[1]]}"#;
    println!("invalid record rejected: {}", Record::decode(bad).unwrap_err());
    Ok(())
}
