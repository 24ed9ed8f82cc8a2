//! Deterministic enumeration of small labelled structures.
//!
//! Every stream is sorted by the canonical encoding of its items, so "the first
//! instance with property P" has a fixed meaning independent of how work is split.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::finstruct::{is_isomorphic, Lattice, OrderedSpace, PointSet, Qoset, Record, Topology};
use crate::topoderive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Qoset,
    PartialOrder,
    Topology,
    T0Topology,
    OrderedSpace,
    Lattice,
    SemilatticeOrderedSpace,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Qoset,
        Kind::PartialOrder,
        Kind::Topology,
        Kind::T0Topology,
        Kind::OrderedSpace,
        Kind::Lattice,
        Kind::SemilatticeOrderedSpace,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Qoset => "qoset",
            Kind::PartialOrder => "partial-order",
            Kind::Topology => "topology",
            Kind::T0Topology => "t0-topology",
            Kind::OrderedSpace => "ordered-space",
            Kind::Lattice => "lattice",
            Kind::SemilatticeOrderedSpace => "semilattice-ordered-space",
        }
    }

    /// Largest carrier accepted for an exhaustive stream.
    pub fn cap(self) -> usize {
        match self {
            Kind::Qoset | Kind::PartialOrder | Kind::Topology | Kind::T0Topology | Kind::Lattice => 6,
            Kind::OrderedSpace | Kind::SemilatticeOrderedSpace => 5,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {n} exceeds the bound {cap} for kind {kind}")]
    BoundTooLarge { kind: Kind, n: usize, cap: usize },
}

pub fn check_bound(kind: Kind, n: usize) -> Result<(), EnumerateError> {
    if n == 0 || n > kind.cap() {
        Err(EnumerateError::BoundTooLarge { kind, n, cap: kind.cap() })
    } else {
        Ok(())
    }
}

/// All quasi-orders on `n` labelled points, ascending in the tuple of principal filters.
///
/// Rows are chosen point by point; a partial assignment survives only if
/// `y ∈ up[x]` implies `up[y] ⊆ up[x]` for every pair already assigned.
pub fn qosets(n: usize) -> Vec<Qoset> {
    fn extend(n: usize, rows: &mut Vec<u16>, out: &mut Vec<Qoset>) {
        let x = rows.len();
        if x == n {
            let up = rows.iter().map(|&r| PointSet::from_bits(r)).collect();
            out.push(Qoset::from_up_rows(n, up));
            return;
        }
        for row in 0..(1u32 << n) {
            let row = row as u16;
            if row >> x & 1 == 0 {
                continue;
            }
            let ok = rows.iter().enumerate().all(|(y, &ry)| {
                (row >> y & 1 == 0 || ry & !row == 0) && (ry >> x & 1 == 0 || row & !ry == 0)
            });
            if ok {
                rows.push(row);
                extend(n, rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n), &mut out);
    out
}

pub fn partial_orders(n: usize) -> Vec<Qoset> {
    qosets(n).into_iter().filter(Qoset::is_antisymmetric).collect()
}

/// Closure of a family of subsets under pairwise unions and intersections.
fn close_family(n: usize, family: &BTreeSet<u16>) -> BTreeSet<u16> {
    let mut fam = family.clone();
    fam.insert(0);
    fam.insert(PointSet::full(n).bits());
    loop {
        let items: Vec<u16> = fam.iter().copied().collect();
        let before = fam.len();
        for (i, &a) in items.iter().enumerate() {
            for &b in &items[i + 1..] {
                fam.insert(a | b);
                fam.insert(a & b);
            }
        }
        if fam.len() == before {
            return fam;
        }
    }
}

/// All topologies on `n` labelled points, ascending in the sorted list of opens.
///
/// Works on open-set families directly: starting from the indiscrete topology, each
/// family is extended by one further subset and closed under unions and intersections.
/// Every topology is reached because adding its opens one at a time never leaves it.
pub fn topologies(n: usize) -> Vec<Topology> {
    let start = close_family(n, &BTreeSet::new());
    let mut seen: HashSet<BTreeSet<u16>> = HashSet::from([start.clone()]);
    let mut queue = vec![start];
    while let Some(fam) = queue.pop() {
        for s in 1..(1u32 << n) - 1 {
            let s = s as u16;
            if fam.contains(&s) {
                continue;
            }
            let mut bigger = fam.clone();
            bigger.insert(s);
            let closed = close_family(n, &bigger);
            if seen.insert(closed.clone()) {
                queue.push(closed);
            }
        }
    }
    let mut out: Vec<Topology> = seen
        .into_iter()
        .map(|fam| {
            let opens: Vec<PointSet> = fam.into_iter().map(PointSet::from_bits).collect();
            Topology::validate(n, &opens).expect("closed families are topologies")
        })
        .collect();
    out.sort();
    out
}

pub fn t0_topologies(n: usize) -> Vec<Topology> {
    topologies(n).into_iter().filter(topoderive::is_t0).collect()
}

/// Labelled lattices on `n` points, in qoset order.
pub fn lattices(n: usize) -> Vec<Lattice> {
    partial_orders(n)
        .iter()
        .filter_map(|q| Lattice::of_qoset(q).ok())
        .collect()
}

/// One representative per isomorphism class of lattices with exactly `m` elements.
///
/// Representatives are naturally labelled (`x ≤ y` implies `x ≤ y` as numbers) with
/// bottom `0` and top `m - 1`; the first such labelling found in row order is kept.
pub fn lattices_unlabeled(m: usize) -> Vec<Lattice> {
    fn extend(m: usize, x: usize, rows: &mut [u64], reps: &mut Vec<Lattice>) {
        if x == 0 {
            rows[0] = (1u64 << m) - 1;
            let l = Lattice::from_fn(m, |a, b| rows[a] >> b & 1 == 1);
            if let Ok(l) = l {
                if !reps.iter().any(|r| is_isomorphic(r, &l)) {
                    reps.push(l);
                }
            }
            return;
        }
        // Filters of point x live in {x, .., m-1}, contain x and the top, and are
        // unions of filters of the points above x that they contain.
        let above = if x + 1 >= m { 0 } else { ((1u64 << m) - 1) & !((1u64 << (x + 1)) - 1) };
        let top = 1u64 << (m - 1);
        let mut choice = above;
        loop {
            if choice & top != 0 {
                let row = mask_iter_u64(choice).fold(1u64 << x, |acc, y| acc | rows[y]);
                if row == (1u64 << x) | choice {
                    rows[x] = row;
                    extend(m, x - 1, rows, reps);
                }
            }
            if choice == 0 {
                break;
            }
            choice = (choice - 1) & above;
        }
    }
    match m {
        0 => Vec::new(),
        1 => vec![Lattice::chain(1)],
        _ => {
            let mut rows = vec![0u64; m];
            rows[m - 1] = 1u64 << (m - 1);
            let mut reps = Vec::new();
            extend(m, m - 2, &mut rows, &mut reps);
            reps
        }
    }
}

fn mask_iter_u64(mask: u64) -> impl Iterator<Item = usize> {
    crate::finstruct::mask_iter(mask)
}

/// The product of a list of orders with a list of topologies, order-major.
///
/// Items are produced on demand so that large products never need to be stored.
#[derive(Clone, Debug)]
pub struct ProductStream {
    orders: Vec<Qoset>,
    topologies: Vec<Topology>,
}

impl ProductStream {
    pub fn new(orders: Vec<Qoset>, topologies: Vec<Topology>) -> Self {
        ProductStream { orders, topologies }
    }

    pub fn len(&self) -> usize {
        self.orders.len() * self.topologies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, index: usize) -> OrderedSpace {
        let t = self.topologies.len();
        OrderedSpace::new(self.orders[index / t].clone(), self.topologies[index % t].clone())
            .expect("same carrier")
    }

    pub fn iter(&self) -> impl Iterator<Item = OrderedSpace> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

/// Posets times topologies on `n` points.
pub fn ordered_spaces(n: usize) -> ProductStream {
    ProductStream::new(partial_orders(n), topologies(n))
}

/// Meet-semilattice posets times topologies on `n` points.
pub fn semilattice_ordered_spaces(n: usize) -> ProductStream {
    let orders = partial_orders(n).into_iter().filter(Qoset::is_meet_semilattice).collect();
    ProductStream::new(orders, topologies(n))
}

/// The stream of `kind` on `n` points as text records.
pub fn enumerate(kind: Kind, n: usize) -> Result<Box<dyn Iterator<Item = Record>>, EnumerateError> {
    check_bound(kind, n)?;
    Ok(match kind {
        Kind::Qoset => Box::new(qosets(n).into_iter().map(Record::from)),
        Kind::PartialOrder => Box::new(partial_orders(n).into_iter().map(Record::from)),
        Kind::Topology => Box::new(topologies(n).into_iter().map(Record::from)),
        Kind::T0Topology => Box::new(t0_topologies(n).into_iter().map(Record::from)),
        Kind::Lattice => Box::new(lattices(n).into_iter().map(Record::from)),
        Kind::OrderedSpace => {
            let s = ordered_spaces(n);
            Box::new((0..s.len()).map(move |i| Record::from(s.get(i))))
        }
        Kind::SemilatticeOrderedSpace => {
            let s = semilattice_ordered_spaces(n);
            Box::new((0..s.len()).map(move |i| Record::from(s.get(i))))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let q: Vec<usize> = (1..=4).map(|n| qosets(n).len()).collect();
        assert_eq!(q, [1, 4, 29, 355]);
        let p: Vec<usize> = (1..=4).map(|n| partial_orders(n).len()).collect();
        assert_eq!(p, [1, 3, 19, 219]);
        let t: Vec<usize> = (1..=4).map(|n| topologies(n).len()).collect();
        assert_eq!(t, [1, 4, 29, 355]);
        let t0: Vec<usize> = (1..=4).map(|n| t0_topologies(n).len()).collect();
        assert_eq!(t0, [1, 3, 19, 219]);
    }

    #[test]
    fn streams_are_sorted_and_distinct() {
        for n in 1..=4 {
            let q = qosets(n);
            assert!(q.windows(2).all(|w| w[0] < w[1]));
            let t = topologies(n);
            assert!(t.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn unlabeled_lattice_counts() {
        let counts: Vec<usize> = (1..=7).map(|m| lattices_unlabeled(m).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15, 53]);
    }

    #[test]
    fn bound_checks() {
        assert!(enumerate(Kind::Topology, 7).is_err());
        assert!(enumerate(Kind::OrderedSpace, 0).is_err());
        assert_eq!(enumerate(Kind::PartialOrder, 3).unwrap().count(), 19);
        assert_eq!(ordered_spaces(3).len(), 19 * 29);
    }
}
