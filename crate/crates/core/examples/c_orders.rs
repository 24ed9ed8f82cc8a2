//! Interior relations, rounded ideal completions and cardinal invariants.

use ordertop::cord::{self, CQuasiOrder};
use ordertop::finstruct::Topology;
use ordertop::topoderive;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opens = [0b000, 0b001, 0b011, 0b111].map(ordertop::finstruct::PointSet::from_bits);
    let chain = Topology::validate(3, &opens)?;
    let r = CQuasiOrder::new(topoderive::interior_relation(&chain))?;
    println!("interior relation: {:?}", r.relation());
    println!("generates the same topology: {}", cord::topology_of(&r) == chain);

    let completion = cord::rounded_ideal_completion(&r)?;
    println!("rounded ideals: {:?}", completion.ideals);
    println!("basis map x -> Rx: {:?}", completion.basis);

    let profile = cord::core_space_profile(&chain)?;
    for (label, flag) in cord::CoreSpaceProfile::LABELS.iter().zip(profile.flags()) {
        println!("  {label:<40} {flag}");
    }

    let inv = cord::cardinal_invariants(&chain)?;
    println!("cofinality, weight, closed weight, patch weight, patch density: {:?}", inv.values());
    Ok(())
}
