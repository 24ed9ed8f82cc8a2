//! Derived topologies and space-level constructions on finite carriers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::finstruct::{BinaryRelation, OrderedSpace, PointSet, Qoset, Topology};

/// The three named topological upset selections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coselection {
    Upsilon,
    Sigma,
    Alpha,
}

impl Coselection {
    pub const ALL: [Coselection; 3] = [Coselection::Upsilon, Coselection::Sigma, Coselection::Alpha];

    pub fn tag(self) -> &'static str {
        match self {
            Coselection::Upsilon => "upsilon",
            Coselection::Sigma => "sigma",
            Coselection::Alpha => "alpha",
        }
    }
}

impl fmt::Display for Coselection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for Coselection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "upsilon" | "υ" | "weak" => Ok(Coselection::Upsilon),
            "sigma" | "σ" | "scott" => Ok(Coselection::Sigma),
            "alpha" | "α" | "alexandroff" => Ok(Coselection::Alpha),
            other => Err(format!("unknown coselection `{other}`")),
        }
    }
}

/// Topologies built from a quasi-order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpsetTopology {
    Alpha,
    Upsilon,
    Sigma,
    Lawson,
    AlphaDual,
    UpsilonDual,
}

/// `x <= y` iff every open set containing `x` contains `y`.
pub fn specialization(t: &Topology) -> Qoset {
    let n = t.size();
    let up = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| t.opens().iter().all(|u| !u.contains(x) || u.contains(y)))
                .collect()
        })
        .collect();
    Qoset::from_up_rows(n, up)
}

/// Whether distinct points are always separated by an open set.
pub fn is_t0(t: &Topology) -> bool {
    specialization(t).is_antisymmetric()
}

/// All upper sets.
pub fn alexandroff(q: &Qoset) -> Topology {
    Topology::of_upper_sets(q)
}

/// Generated by the complements of principal ideals.
pub fn weak_upper(q: &Qoset) -> Topology {
    let n = q.size();
    let subbase: Vec<PointSet> = (0..n).map(|x| q.down(x).complement(n)).collect();
    Topology::generate(n, &subbase).expect("carrier already validated")
}

/// Upper sets `U` that meet every directed set having a least upper bound in `U`.
///
/// Evaluated literally over all directed subsets, so the cost grows with `2^n`.
pub fn scott(q: &Qoset) -> Topology {
    let guarded: Vec<(PointSet, usize)> = q
        .directed_subsets()
        .into_iter()
        .filter_map(|d| q.least_upper_bound(d).map(|s| (d, s)))
        .collect();
    alexandroff(q).filtered(|u| guarded.iter().all(|&(d, s)| !u.contains(s) || u.meets(d)))
}

/// The Scott topology joined with the weak lower topology.
pub fn lawson(q: &Qoset) -> Topology {
    scott(q).join(&weak_upper(&q.dual()))
}

pub fn upset_topology(q: &Qoset, which: UpsetTopology) -> Topology {
    match which {
        UpsetTopology::Alpha => alexandroff(q),
        UpsetTopology::Upsilon => weak_upper(q),
        UpsetTopology::Sigma => scott(q),
        UpsetTopology::Lawson => lawson(q),
        UpsetTopology::AlphaDual => alexandroff(&q.dual()),
        UpsetTopology::UpsilonDual => weak_upper(&q.dual()),
    }
}

/// `ζQ` for a qoset `Q`.
pub fn selection(q: &Qoset, zeta: Coselection) -> Topology {
    match zeta {
        Coselection::Upsilon => weak_upper(q),
        Coselection::Sigma => scott(q),
        Coselection::Alpha => alexandroff(q),
    }
}

/// The cotopology subbase `ζS`: the selection applied to the dual specialization order.
pub fn coselection(s: &Topology, zeta: Coselection) -> Topology {
    selection(&specialization(s).dual(), zeta)
}

pub fn interior(t: &Topology, set: PointSet) -> PointSet {
    t.interior(set)
}

pub fn closure(t: &Topology, set: PointSet) -> PointSet {
    t.closure(set)
}

/// Intersection of all open sets containing `set`.
pub fn saturation(t: &Topology, set: PointSet) -> PointSet {
    t.opens()
        .iter()
        .filter(|u| set.is_subset(**u))
        .fold(t.full(), |acc, &u| acc & u)
}

/// The `ζ`-patch space: specialization order with the topology generated by `S ∪ ζS`.
pub fn patch(s: &Topology, zeta: Coselection) -> OrderedSpace {
    let q = specialization(s);
    let co = selection(&q.dual(), zeta);
    OrderedSpace::new(q, s.join(&co)).expect("same carrier")
}

/// Open upper sets.
pub fn upper_space(t: &OrderedSpace) -> Topology {
    let q = t.qoset();
    t.topology().filtered(|u| q.is_upper(u))
}

/// Open lower sets.
pub fn lower_space(t: &OrderedSpace) -> Topology {
    let q = t.qoset();
    t.topology().filtered(|u| q.is_lower(u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Compactness {
    Compact,
    Supercompact,
    Hypercompact,
}

/// Largest open-set count for which compactness enumerates every directed cover.
pub const LITERAL_COVER_LIMIT: usize = 12;

pub fn compactness(t: &Topology, c: PointSet, kind: Compactness) -> bool {
    match kind {
        Compactness::Compact => is_compact(t, c),
        Compactness::Supercompact => is_supercompact(t, c),
        Compactness::Hypercompact => is_hypercompact(t, c),
    }
}

/// Every directed family of open sets covering `c` has a member containing `c`
/// (equivalently, every open cover has a finite subcover).
///
/// With more than [`LITERAL_COVER_LIMIT`] open sets the enumeration is skipped:
/// a finite family of open sets makes every cover finite.
pub fn is_compact(t: &Topology, c: PointSet) -> bool {
    let opens = t.opens();
    if opens.len() > LITERAL_COVER_LIMIT {
        return true;
    }
    (1u32..1 << opens.len()).all(|fam| {
        let members: Vec<PointSet> = (0..opens.len())
            .filter(|i| fam >> i & 1 == 1)
            .map(|i| opens[i])
            .collect();
        let directed = members
            .iter()
            .all(|&a| members.iter().all(|&b| members.iter().any(|&m| (a | b).is_subset(m))));
        let covers = c.is_subset(members.iter().fold(PointSet::EMPTY, |acc, &m| acc | m));
        !(directed && covers) || members.iter().any(|m| c.is_subset(*m))
    })
}

/// Every open cover of `c` has a single member containing `c`.
pub fn is_supercompact(t: &Topology, c: PointSet) -> bool {
    let others = t
        .opens()
        .iter()
        .filter(|u| !c.is_subset(**u))
        .fold(PointSet::EMPTY, |acc, &u| acc | u);
    !c.is_subset(others)
}

/// The saturation of `c` is the up-closure of a finite subset.
pub fn is_hypercompact(t: &Topology, c: PointSet) -> bool {
    let sat = saturation(t, c);
    let q = specialization(t);
    sat.subsets().any(|f| q.up_closure(f) == sat)
}

/// Nonempty closed sets `A` such that `A ⊆ B ∪ C` with `B, C` closed forces `A ⊆ B` or `A ⊆ C`.
pub fn irreducible_closed(t: &Topology) -> Vec<PointSet> {
    let closeds = t.closeds();
    closeds
        .iter()
        .copied()
        .filter(|a| !a.is_empty())
        .filter(|&a| {
            closeds.iter().all(|&b| {
                closeds
                    .iter()
                    .all(|&c| !a.is_subset(b | c) || a.is_subset(b) || a.is_subset(c))
            })
        })
        .collect()
}

fn point_closures(t: &Topology) -> BTreeSet<PointSet> {
    (0..t.size()).map(|x| t.closure(PointSet::singleton(x))).collect()
}

/// T0, and every irreducible closed set is a point closure.
pub fn is_sober(t: &Topology) -> bool {
    let points = point_closures(t);
    is_t0(t) && irreducible_closed(t).iter().all(|a| points.contains(a))
}

/// T0, and the closure of every directed set is a point closure.
pub fn is_dspace(t: &Topology) -> bool {
    let points = point_closures(t);
    is_t0(t)
        && specialization(t)
            .directed_subsets()
            .into_iter()
            .all(|d| points.contains(&t.closure(d)))
}

/// Generated by the complements of compact saturated sets.
pub fn cocompact(t: &Topology) -> Topology {
    let n = t.size();
    let q = specialization(t);
    let subbase: Vec<PointSet> = t
        .carrier()
        .subsets()
        .filter(|&c| q.is_upper(c) && is_compact(t, c))
        .map(|c| c.complement(n))
        .collect();
    Topology::generate(n, &subbase).expect("carrier already validated")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasiUniformityError {
    #[error("space is not a core space")]
    NotCoreSpace,
}

/// A finite base of entourages, closed under pairwise intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntourageBase {
    n: usize,
    base: Vec<BinaryRelation>,
}

impl EntourageBase {
    /// Closes `generators` under pairwise intersection. Every generator must be reflexive.
    pub fn generate(n: usize, generators: Vec<BinaryRelation>) -> Self {
        let mut seen: BTreeSet<BinaryRelation> = generators.iter().cloned().collect();
        let mut frontier: Vec<BinaryRelation> = seen.iter().cloned().collect();
        while !frontier.is_empty() {
            let current: Vec<BinaryRelation> = seen.iter().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &current {
                    let c = a.intersection(b);
                    if seen.insert(c.clone()) {
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        debug_assert!(seen.iter().all(|r| r.is_reflexive()));
        EntourageBase { n, base: seen.into_iter().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[BinaryRelation] {
        &self.base
    }

    pub fn inverse(&self) -> Self {
        EntourageBase {
            n: self.n,
            base: self.base.iter().map(|r| r.transpose()).collect(),
        }
    }

    /// The base `{U ∩ U⁻¹}` of the symmetrized uniformity.
    pub fn symmetrized(&self) -> Self {
        EntourageBase {
            n: self.n,
            base: self.base.iter().map(|r| r.intersection(&r.transpose())).collect(),
        }
    }
}

/// The coarsest quasi-uniformity inducing `s`, generated by the relations
/// `x'R → y'R = {(x, y) : x' R x ⇒ y' R y}` for `y' R x'`, where `R` is the interior relation.
pub fn quasi_uniformity(s: &Topology) -> Result<EntourageBase, QuasiUniformityError> {
    let n = s.size();
    let r = interior_relation(s);
    // On a core space every point lies in the interior of some core.
    if (0..n).any(|y| r.pre(y).is_empty()) {
        return Err(QuasiUniformityError::NotCoreSpace);
    }
    let full = PointSet::full(n);
    let mut generators = Vec::new();
    for x1 in 0..n {
        for y1 in r.pre(x1).iter() {
            let rows = (0..n)
                .map(|x| if r.contains(x1, x) { r.post(y1) } else { full })
                .collect();
            generators.push(BinaryRelation::from_rows(n, rows));
        }
    }
    Ok(EntourageBase::generate(n, generators))
}

/// `x R y` iff `y` is interior to the core `↑x`.
pub fn interior_relation(s: &Topology) -> BinaryRelation {
    let q = specialization(s);
    let rows = (0..s.size()).map(|x| s.interior(q.up(x))).collect();
    BinaryRelation::from_rows(s.size(), rows)
}

/// Sets `O` such that each `x ∈ O` has an entourage `U` with `xU ⊆ O`.
pub fn tau(e: &EntourageBase) -> Topology {
    let n = e.size();
    let opens: Vec<PointSet> = PointSet::full(n)
        .subsets()
        .filter(|&o| o.iter().all(|x| e.members().iter().any(|u| u.post(x).is_subset(o))))
        .collect();
    Topology::validate(n, &opens).expect("tau of an entourage base is a topology")
}

pub fn tau_inverse(e: &EntourageBase) -> Topology {
    tau(&e.inverse())
}

pub fn tau_star(e: &EntourageBase) -> Topology {
    tau(&e.symmetrized())
}
