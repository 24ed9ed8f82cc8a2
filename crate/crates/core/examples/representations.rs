//! Move one C-ordered set through all six descriptions and inspect a map.

use ordertop::finstruct::{SpaceMap, Topology};
use ordertop::morphcat::{self, MapContext, RepKind, Representation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Representation::T0CoreSpace(Topology::sierpinski());
    for kind in RepKind::ALL {
        let rep = morphcat::convert(&start, kind)?;
        let back = morphcat::convert(&rep, RepKind::T0CoreSpace)?;
        println!("{:<30} {}  back: {}", kind.tag(), rep.to_value(), morphcat::representations_isomorphic(&back, &start));
    }

    let s = Topology::sierpinski();
    let ctx = MapContext::of_topology(&s);
    for values in [vec![0, 1], vec![1, 0], vec![1, 1]] {
        let f = SpaceMap::new(2, 2, values.clone())?;
        let p = morphcat::map_profile(&f, &ctx, &ctx)?;
        println!("map {values:?}: continuous {:?}, residual {:?}, core continuous {:?}",
            p.continuous, p.residual, p.core_continuous);
    }
    Ok(())
}
