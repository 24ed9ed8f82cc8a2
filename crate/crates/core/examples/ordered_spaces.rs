//! Separation, convexity, stability and web profiles plus theorem bundles.

use ordertop::finstruct::{Lattice, OrderedSpace};
use ordertop::ospace::{self, Bundle};
use ordertop::topoderive;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = Lattice::diamond().to_qoset()?;
    let lawson = OrderedSpace::new(square.clone(), topoderive::lawson(&square))?;
    let profile = ospace::full_profile(&lawson);
    println!("{}", serde_json::to_string_pretty(&profile)?);

    for bundle in [Bundle::Thm46, Bundle::Thm53, Bundle::Thm62, Bundle::Thm72, Bundle::Prop74] {
        let v = ospace::theorem_bundle(&lawson, bundle)?;
        println!("{bundle:?}: hypothesis {}, conditions agree {}", v.hypothesis, v.agree());
        for (label, value) in v.labels.iter().zip(&v.values) {
            println!("    {label} = {value}");
        }
    }
    Ok(())
}
