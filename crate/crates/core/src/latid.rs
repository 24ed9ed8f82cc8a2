//! Lattice identities, the way-below and superway relations, coprimes and weight.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::finstruct::{elem_full, mask_iter, ElemSet, Lattice, Topology, ValidationError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeLaw {
    Frame,
    Coframe,
    WideFrame,
    WideCoframe,
    CompletelyDistributive,
    MeetContinuous,
    ContinuousLattice,
    Distributive,
}

impl LatticeLaw {
    pub const ALL: [LatticeLaw; 8] = [
        LatticeLaw::Frame,
        LatticeLaw::Coframe,
        LatticeLaw::WideFrame,
        LatticeLaw::WideCoframe,
        LatticeLaw::CompletelyDistributive,
        LatticeLaw::MeetContinuous,
        LatticeLaw::ContinuousLattice,
        LatticeLaw::Distributive,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LatticeLaw::Frame => "frame",
            LatticeLaw::Coframe => "coframe",
            LatticeLaw::WideFrame => "wide-frame",
            LatticeLaw::WideCoframe => "wide-coframe",
            LatticeLaw::CompletelyDistributive => "completely-distributive",
            LatticeLaw::MeetContinuous => "meet-continuous",
            LatticeLaw::ContinuousLattice => "continuous-lattice",
            LatticeLaw::Distributive => "distributive",
        }
    }
}

impl fmt::Display for LatticeLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for LatticeLaw {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LatticeLaw::ALL
            .into_iter()
            .find(|l| l.tag() == s)
            .ok_or_else(|| format!("unknown lattice law `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatidError {
    #[error("direct check of {law} needs at most {cap} elements, lattice has {size}")]
    SizeCapExceeded { law: LatticeLaw, size: usize, cap: usize },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// A counterexample to a lattice law.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawWitness {
    /// `x ∧ ⋁Y ≠ ⋁{x ∧ y : y ∈ Y}` (or its dual, for coframe-type laws).
    Binary { x: usize, ys: ElemSet },
    /// `⋀{⋁Y : Y ∈ 𝒴} ≠ ⋁⋂𝒴` for a collection of lower sets (or its dual).
    Collection(Vec<ElemSet>),
    /// `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    Triple(usize, usize, usize),
    /// `y` is not the join of `{x : x ⊲ y}`.
    NotApproximated(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawVerdict {
    pub holds: bool,
    pub witness: Option<LawWitness>,
}

impl LawVerdict {
    fn from_witness(witness: Option<LawWitness>) -> Self {
        LawVerdict { holds: witness.is_none(), witness }
    }
}

/// Largest lattice for which (D) is scanned over all collections of lower sets.
pub const DIRECT_COLLECTION_CAP: usize = 6;
/// Largest lattice for which laws are scanned over every subset of elements.
pub const SUBSET_SCAN_CAP: usize = 16;
/// Largest lattice for which `⊲` and `≪` quantify over every subset literally.
pub const LITERAL_RELATION_CAP: usize = 20;

/// Open sets ordered by inclusion, in the topology's canonical order.
pub fn open_lattice(t: &Topology) -> Result<Lattice, ValidationError> {
    Lattice::of_family(t.opens())
}

/// Closed sets ordered by inclusion, in ascending numeric order.
pub fn closed_lattice(t: &Topology) -> Result<Lattice, ValidationError> {
    Lattice::of_family(&t.closeds())
}

/// Evaluate a law with the production method of each law.
///
/// Complete distributivity uses the `⊲` test; the collection-quantified wide laws fall
/// back to the `⊲` test beyond [`DIRECT_COLLECTION_CAP`]. Beyond [`SUBSET_SCAN_CAP`]
/// continuity is read off [`way_below`] and meet-continuity is checked on principal
/// ideals, which are all the ideals of a finite lattice.
pub fn check_law(l: &Lattice, law: LatticeLaw) -> LawVerdict {
    let m = l.size();
    match law {
        LatticeLaw::CompletelyDistributive => raney_test(l),
        LatticeLaw::WideFrame | LatticeLaw::WideCoframe if m > DIRECT_COLLECTION_CAP => raney_test(l),
        LatticeLaw::ContinuousLattice if m > SUBSET_SCAN_CAP => {
            let wb = way_below(l);
            LawVerdict::from_witness(
                (0..m).find(|&y| l.join_all(wb.pre(y)) != y).map(LawWitness::NotApproximated),
            )
        }
        LatticeLaw::MeetContinuous if m > SUBSET_SCAN_CAP => LawVerdict::from_witness((0..m).find_map(|x| {
            (0..m)
                .map(|d| l.down(d))
                .find(|&ys| l.meet(x, l.join_all(ys)) != join_of_meets(l, x, ys))
                .map(|ys| LawWitness::Binary { x, ys })
        })),
        _ => check_law_direct(l, law).expect("within caps"),
    }
}

/// Evaluate a law directly from its defining identity.
pub fn check_law_direct(l: &Lattice, law: LatticeLaw) -> Result<LawVerdict, LatidError> {
    let m = l.size();
    let cap = |cap: usize| {
        if m > cap {
            Err(LatidError::SizeCapExceeded { law, size: m, cap })
        } else {
            Ok(())
        }
    };
    let witness = match law {
        LatticeLaw::Frame => frame_witness(l),
        LatticeLaw::Coframe => frame_witness(&l.dual()),
        LatticeLaw::Distributive => distributive_witness(l),
        LatticeLaw::CompletelyDistributive => {
            cap(DIRECT_COLLECTION_CAP)?;
            collection_witness(l, &lower_sets(l))
        }
        LatticeLaw::WideCoframe => {
            cap(DIRECT_COLLECTION_CAP)?;
            collection_witness(l, &finitely_generated_lower_sets(l))
        }
        LatticeLaw::WideFrame => {
            cap(DIRECT_COLLECTION_CAP)?;
            let d = l.dual();
            collection_witness(&d, &finitely_generated_lower_sets(&d))
        }
        LatticeLaw::MeetContinuous => {
            cap(SUBSET_SCAN_CAP)?;
            meet_continuity_witness(l)
        }
        LatticeLaw::ContinuousLattice => {
            cap(SUBSET_SCAN_CAP)?;
            collection_witness(l, &ideals(l))
        }
    };
    Ok(LawVerdict::from_witness(witness))
}

fn every_subset(m: usize) -> impl Iterator<Item = ElemSet> {
    let full = elem_full(m);
    (0..=full).take_while(move |&s| s <= full)
}

fn join_of_meets(l: &Lattice, x: usize, ys: ElemSet) -> usize {
    mask_iter(ys).fold(l.bottom(), |acc, y| l.join(acc, l.meet(x, y)))
}

/// Law (d) over every subset `Y` when small enough, otherwise over pairs
/// (on a finite lattice every join is an iterated binary join).
fn frame_witness(l: &Lattice) -> Option<LawWitness> {
    let m = l.size();
    let holds = |x: usize, ys: ElemSet| l.meet(x, l.join_all(ys)) == join_of_meets(l, x, ys);
    if m <= SUBSET_SCAN_CAP {
        (0..m).find_map(|x| {
            every_subset(m)
                .find(|&ys| !holds(x, ys))
                .map(|ys| LawWitness::Binary { x, ys })
        })
    } else {
        (0..m).find_map(|x| {
            (0..m).find_map(|a| {
                (a + 1..m)
                    .map(|b| 1u64 << a | 1u64 << b)
                    .find(|&ys| !holds(x, ys))
                    .map(|ys| LawWitness::Binary { x, ys })
            })
        })
    }
}

fn meet_continuity_witness(l: &Lattice) -> Option<LawWitness> {
    let m = l.size();
    (0..m).find_map(|x| {
        every_subset(m)
            .filter(|&ys| l.is_directed(ys))
            .find(|&ys| l.meet(x, l.join_all(ys)) != join_of_meets(l, x, ys))
            .map(|ys| LawWitness::Binary { x, ys })
    })
}

fn distributive_witness(l: &Lattice) -> Option<LawWitness> {
    let m = l.size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    return Some(LawWitness::Triple(x, y, z));
                }
            }
        }
    }
    None
}

/// All lower sets, by testing every subset.
pub fn lower_sets(l: &Lattice) -> Vec<ElemSet> {
    every_subset(l.size()).filter(|&s| l.is_lower(s)).collect()
}

/// `↓F` for every finite `F`, deduplicated.
pub fn finitely_generated_lower_sets(l: &Lattice) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = every_subset(l.size()).map(|f| l.down_closure(f)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Directed lower sets.
pub fn ideals(l: &Lattice) -> Vec<ElemSet> {
    every_subset(l.size()).filter(|&s| l.is_ideal(s)).collect()
}

/// Law (D) for every subcollection of `family`; the first failing collection
/// in ascending order of its index mask is reported.
fn collection_witness(l: &Lattice, family: &[ElemSet]) -> Option<LawWitness> {
    let k = family.len();
    assert!(k < 32, "collection scan over {k} sets");
    let joins: Vec<usize> = family.iter().map(|&y| l.join_all(y)).collect();
    (0u32..1 << k).find_map(|pick| {
        let mut lhs = l.top();
        let mut common = l.full();
        for i in mask_iter(pick as u64) {
            lhs = l.meet(lhs, joins[i]);
            common &= family[i];
        }
        (lhs != l.join_all(common)).then(|| {
            LawWitness::Collection(mask_iter(pick as u64).map(|i| family[i]).collect())
        })
    })
}

/// Complete distributivity as "every `y` is the join of `{x : x ⊲ y}`".
pub fn raney_test(l: &Lattice) -> LawVerdict {
    let sw = superway(l);
    let witness = (0..l.size())
        .find(|&y| l.join_all(sw.pre(y)) != y)
        .map(LawWitness::NotApproximated);
    LawVerdict::from_witness(witness)
}

/// A relation on lattice elements; `rows[x]` holds `{y : x R y}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElemRelation {
    m: usize,
    rows: Vec<ElemSet>,
}

impl ElemRelation {
    pub fn from_fn(m: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        let rows = (0..m)
            .map(|x| (0..m).filter(|&y| rel(x, y)).fold(0, |a, y| a | 1 << y))
            .collect();
        ElemRelation { m, rows }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn post(&self, x: usize) -> ElemSet {
        self.rows[x]
    }

    pub fn pre(&self, y: usize) -> ElemSet {
        (0..self.m).filter(|&x| self.contains(x, y)).fold(0, |a, x| a | 1 << x)
    }

    /// As a relation on a point carrier (lattices of at most 16 elements).
    pub fn to_binary_relation(&self) -> Result<crate::finstruct::BinaryRelation, ValidationError> {
        crate::finstruct::Carrier::new(self.m)?;
        Ok(crate::finstruct::BinaryRelation::from_fn(self.m, |x, y| self.contains(x, y)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BelowKind {
    WayBelow,
    Superway,
}

pub fn below_relation(l: &Lattice, kind: BelowKind) -> ElemRelation {
    match kind {
        BelowKind::WayBelow => way_below(l),
        BelowKind::Superway => superway(l),
    }
}

/// `x ≪ y` iff every directed `D` with `y ≤ ⋁D` contains an element above `x`.
///
/// Beyond [`LITERAL_RELATION_CAP`] elements the quantifier runs over the directed
/// sets `↓d` only: a finite directed set contains its own join.
pub fn way_below(l: &Lattice) -> ElemRelation {
    let m = l.size();
    let directed: Vec<(ElemSet, usize)> = if m <= LITERAL_RELATION_CAP {
        every_subset(m)
            .filter(|&d| l.is_directed(d))
            .map(|d| (d, l.join_all(d)))
            .collect()
    } else {
        (0..m).map(|d| (1u64 << d, d)).collect()
    };
    ElemRelation::from_fn(m, |x, y| {
        directed
            .iter()
            .filter(|&&(_, j)| l.leq(y, j))
            .all(|&(d, _)| d & l.up(x) != 0)
    })
}

/// `x ⊲ y` iff `x ∈ ⋂{↓A : y ≤ ⋁A}`.
///
/// Beyond [`LITERAL_RELATION_CAP`] elements the equivalent form `y ≰ ⋁(L ∖ ↑x)` is used.
pub fn superway(l: &Lattice) -> ElemRelation {
    let m = l.size();
    if m <= LITERAL_RELATION_CAP {
        let covering: Vec<ElemSet> = every_subset(m).collect();
        let joins: Vec<usize> = covering.iter().map(|&a| l.join_all(a)).collect();
        ElemRelation::from_fn(m, |x, y| {
            covering
                .iter()
                .zip(&joins)
                .filter(|&(_, &j)| l.leq(y, j))
                .all(|(&a, _)| l.down_closure(a) >> x & 1 == 1)
        })
    } else {
        superway_reduced(l)
    }
}

/// `x ⊲ y` iff `y ≰ ⋁(L ∖ ↑x)`.
pub fn superway_reduced(l: &Lattice) -> ElemRelation {
    let full = l.full();
    ElemRelation::from_fn(l.size(), |x, y| !l.leq(y, l.join_all(full & !l.up(x))))
}

/// Elements `q` for which `L ∖ ↑q` is an ideal.
pub fn coprimes(l: &Lattice) -> ElemSet {
    (0..l.size())
        .filter(|&q| l.is_ideal(l.full() & !l.up(q)))
        .fold(0, |a, q| a | 1 << q)
}

/// Every element is the join of the members of `set` below it.
pub fn is_join_dense(l: &Lattice, set: ElemSet) -> bool {
    (0..l.size()).all(|y| l.join_all(set & l.down(y)) == y)
}

/// Elements that are not the join of the elements strictly below them.
pub fn join_irreducibles(l: &Lattice) -> ElemSet {
    (0..l.size())
        .filter(|&y| l.join_all(l.down(y) & !(1u64 << y)) != y)
        .fold(0, |a, y| a | 1 << y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightResult {
    pub weight: usize,
    pub witness: ElemSet,
}

/// The least join-dense subset, which for a finite lattice is the set of join-irreducibles.
pub fn min_join_dense(l: &Lattice) -> WeightResult {
    let witness = join_irreducibles(l);
    debug_assert!(is_join_dense(l, witness));
    WeightResult { weight: witness.count_ones() as usize, witness }
}

/// Smallest join-dense subset by search over sizes, lexicographically least within a size.
pub fn min_join_dense_search(l: &Lattice) -> WeightResult {
    let m = l.size();
    assert!(m <= SUBSET_SCAN_CAP, "exhaustive weight search over {m} elements");
    let mut candidates: Vec<ElemSet> = every_subset(m).collect();
    candidates.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
    let witness = candidates
        .into_iter()
        .find(|&s| is_join_dense(l, s))
        .expect("the whole lattice is join-dense");
    WeightResult { weight: witness.count_ones() as usize, witness }
}
