//! Named instances: the standard small spaces and lattices, plus finite truncations
//! of two infinite ordered sets.

use crate::finstruct::{Lattice, OrderedSpace, Qoset, Record, Topology};
use crate::topoderive;

/// Printed with every truncated fixture.
pub const TRUNCATION_BANNER: &str = "exploratory truncation: properties of the infinite \
     original are NOT asserted for this finite instance";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub record: Record,
    pub note: String,
    pub exploratory: bool,
}

impl Fixture {
    fn new(name: impl Into<String>, record: impl Into<Record>, note: impl Into<String>) -> Self {
        Fixture { name: name.into(), record: record.into(), note: note.into(), exploratory: false }
    }

    fn exploratory(mut self) -> Self {
        self.exploratory = true;
        self
    }

    pub fn banner(&self) -> Option<&'static str> {
        self.exploratory.then_some(TRUNCATION_BANNER)
    }
}

/// `X = {b_0, .., b_{k-1}, a, ⊤}` with `x ≤ y` iff `x = y`, `x = b_0`, `y = ⊤`, or
/// `x = b_i`, `y = b_j` with `i < j`. Labels: `b_i = i`, `a = k`, `⊤ = k + 1`.
pub fn ex33_truncation(k: usize) -> Lattice {
    let top = k + 1;
    Lattice::from_fn(k + 2, |x, y| x == y || x == 0 || y == top || (x < y && y < k))
        .expect("the truncation is a lattice")
}

/// The points `a_n = (0, -2^-n)`, `b_n = (2^-n, 0)`, `c_n = (2^-n, 2^-n)` for `n < k`
/// under the coordinatewise order of the plane. Labels: `a_n = n`, `b_n = k + n`, `c_n = 2k + n`.
pub fn ex32_truncation(k: usize) -> Qoset {
    let point = |i: usize| -> (f64, f64) {
        let (family, n) = (i / k, i % k);
        let e = 0.5f64.powi(n as i32);
        match family {
            0 => (0.0, -e),
            1 => (e, 0.0),
            _ => (e, e),
        }
    };
    Qoset::from_fn(3 * k, |x, y| {
        let (p, q) = (point(x), point(y));
        p.0 <= q.0 && p.1 <= q.1
    })
    .expect("coordinatewise order")
}

/// Every fixture, in name order.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        Fixture::new("sierpinski", Topology::sierpinski(), "two points, opens {}, {1}, {0,1}"),
        Fixture::new("discrete-2", Topology::discrete(2), "discrete topology on two points"),
        Fixture::new("discrete-3", Topology::discrete(3), "discrete topology on three points"),
        Fixture::new("indiscrete-2", Topology::indiscrete(2), "indiscrete topology on two points"),
        Fixture::new("indiscrete-3", Topology::indiscrete(3), "indiscrete topology on three points"),
        Fixture::new("chain-3", Qoset::chain(3), "the chain 0 < 1 < 2"),
        Fixture::new("chain-4", Qoset::chain(4), "the chain 0 < 1 < 2 < 3"),
        Fixture::new("square", Lattice::diamond(), "the four-element Boolean lattice 2x2"),
        Fixture::new("m3", Lattice::m3(), "the diamond lattice with three atoms"),
        Fixture::new("n5", Lattice::n5(), "the pentagon lattice"),
        Fixture::new(
            "lawson-square",
            OrderedSpace::new(
                Lattice::diamond().to_qoset().expect("lattice order"),
                topoderive::lawson(&Lattice::diamond().to_qoset().expect("lattice order")),
            )
            .expect("same carrier"),
            "2x2 with its Lawson topology",
        ),
        Fixture::new(
            "chain-3-open-point",
            OrderedSpace::new(
                Qoset::chain(3),
                Topology::validate(3, &[0b000, 0b010, 0b111].map(crate::finstruct::PointSet::from_bits))
                    .expect("topology"),
            )
            .expect("same carrier"),
            "the 3-chain with opens {}, {1}, X",
        ),
    ];
    for k in 1..=4 {
        out.push(
            Fixture::new(
                format!("ex33-trunc-{k}"),
                ex33_truncation(k),
                format!("{{b_0..b_{}, a, top}}: x <= y iff x = y or x = b_0 or y = top or b_i < b_j", k - 1),
            )
            .exploratory(),
        );
    }
    for k in 1..=3 {
        out.push(
            Fixture::new(
                format!("ex32-trunc-{k}"),
                ex32_truncation(k),
                format!("a_n, b_n, c_n for n < {k} in the plane, coordinatewise order"),
            )
            .exploratory(),
        );
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latid::{check_law, LatticeLaw};

    #[test]
    fn named_lookups() {
        assert_eq!(fixture("sierpinski").unwrap().record, Record::Topology(Topology::sierpinski()));
        match fixture("ex33-trunc-3").unwrap().record {
            Record::Lattice(l) => {
                assert_eq!(l.size(), 5);
                assert_eq!((l.bottom(), l.top()), (0, 4));
                assert!(l.leq(1, 2) && !l.leq(3, 1) && !l.leq(1, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(fixture("m3").unwrap().record, Record::Lattice(Lattice::m3()));
        assert!(fixture("ex32-trunc-2").unwrap().banner().is_some());
        assert!(fixture("sierpinski").unwrap().banner().is_none());
        assert!(fixture("nope").is_none());
    }

    #[test]
    fn truncations_are_distributive_only_when_small() {
        assert!(check_law(&ex33_truncation(1), LatticeLaw::Distributive).holds);
        assert!(check_law(&ex33_truncation(2), LatticeLaw::Distributive).holds);
        assert!(crate::finstruct::is_isomorphic(&ex33_truncation(3), &Lattice::n5()));
        assert!(!check_law(&ex33_truncation(3), LatticeLaw::Distributive).holds);
        assert!(ex32_truncation(2).is_antisymmetric());
    }
}
