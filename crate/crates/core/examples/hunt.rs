//! Look for spaces that satisfy some predicates but not another.

use ordertop::labcli::enumerate::Kind;
use ordertop::labcli::hunt::{self, HypothesisSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let searches = [
        HypothesisSpec::new(["hyperconvex", "semi-qospace", "up-stable", "locally-filtered"], "core-stable", 4),
        HypothesisSpec::new(["semi-qospace"], "pospace", 3),
        HypothesisSpec { kind: Kind::Topology, ..HypothesisSpec::new(["upper-core-space"], "t0", 3) },
    ];
    for h in &searches {
        println!("assume {:?}, refute {}: {}", h.assume, h.refute, serde_json::to_string(&hunt::hunt(h)?)?);
    }
    Ok(())
}
