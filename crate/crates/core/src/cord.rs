//! C-quasi-orders, their topologies and completions, and the cardinal invariants of core spaces.

use thiserror::Error;

use crate::finstruct::{BinaryRelation, Carrier, PointSet, Qoset, Topology, ValidationError};
use crate::latid::{self, LatticeLaw};
use crate::search::least_combination;
use crate::topoderive::{self, Coselection};

pub use crate::topoderive::interior_relation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CordError {
    #[error("R{0} is empty")]
    EmptyPointPreimage(usize),
    #[error("relation is not idempotent at ({0}, {1})")]
    NotIdempotent(usize, usize),
    #[error("R{y} contains {a} but not {b} ≤_R {a}")]
    NotDownClosed { y: usize, a: usize, b: usize },
    #[error("R{y} contains {a} and {b} without a common ≤_R-upper bound")]
    NotDirected { y: usize, a: usize, b: usize },
    #[error("{what} needs at most {cap}, got {size}")]
    SizeCapExceeded { what: &'static str, size: usize, cap: usize },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// An idempotent relation whose point preimages are ideals of the lower quasi-order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CQuasiOrder {
    rel: BinaryRelation,
}

/// `x ≤_R y` iff `Rx ⊆ Ry`.
pub fn lower_quasi_order(r: &BinaryRelation) -> Qoset {
    Qoset::from_fn(r.size(), |x, y| r.pre(x).is_subset(r.pre(y))).expect("inclusion is a quasi-order")
}

pub fn validate_cquasiorder(carrier: Carrier, r: BinaryRelation) -> Result<CQuasiOrder, CordError> {
    let n = carrier.size();
    if r.size() != n {
        return Err(ValidationError::Dimension { expected: n, found: r.size() }.into());
    }
    if let Some(y) = (0..n).find(|&y| r.pre(y).is_empty()) {
        return Err(CordError::EmptyPointPreimage(y));
    }
    let squared = r.compose(&r);
    for x in 0..n {
        if let Some(z) = (0..n).find(|&z| r.contains(x, z) != squared.contains(x, z)) {
            return Err(CordError::NotIdempotent(x, z));
        }
    }
    let lower = lower_quasi_order(&r);
    for y in 0..n {
        let ideal = r.pre(y);
        for a in ideal.iter() {
            if let Some(b) = lower.down(a).difference(ideal).first() {
                return Err(CordError::NotDownClosed { y, a, b });
            }
        }
        for a in ideal.iter() {
            for b in ideal.iter() {
                if !(lower.up(a) & lower.up(b)).meets(ideal) {
                    return Err(CordError::NotDirected { y, a, b });
                }
            }
        }
    }
    Ok(CQuasiOrder { rel: r })
}

impl CQuasiOrder {
    pub fn new(r: BinaryRelation) -> Result<Self, CordError> {
        validate_cquasiorder(r.carrier(), r)
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.rel
    }

    pub fn size(&self) -> usize {
        self.rel.size()
    }

    pub fn lower_quasi_order(&self) -> Qoset {
        lower_quasi_order(&self.rel)
    }

    /// No two points have the same preimage.
    pub fn is_c_order(&self) -> bool {
        self.lower_quasi_order().is_antisymmetric()
    }
}

impl From<&Qoset> for CQuasiOrder {
    fn from(q: &Qoset) -> Self {
        CQuasiOrder { rel: q.as_relation() }
    }
}

/// `O_R = {YR : Y ⊆ X}`.
pub fn topology_of(r: &CQuasiOrder) -> Topology {
    let rel = &r.rel;
    let mut family: Vec<PointSet> = rel.carrier().subsets().map(|y| rel.image(y)).collect();
    family.sort_unstable();
    family.dedup();
    Topology::validate(r.size(), &family).expect("O_R of a C-quasi-order is a topology")
}

/// Fixed points of `Y ↦ RY`, ascending.
pub fn rounded_sets(r: &CQuasiOrder) -> Vec<PointSet> {
    r.rel.carrier().subsets().filter(|&y| r.rel.preimage(y) == y).collect()
}

/// The rounded ideal completion with its basis map `x ↦ Rx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    /// Rounded ideals in ascending numeric order.
    pub ideals: Vec<PointSet>,
    /// Inclusion order on `ideals`.
    pub order: Qoset,
    /// `basis[x]` is the index of `Rx` in `ideals`.
    pub basis: Vec<usize>,
}

impl Completion {
    /// `x R y` iff `Rx ≪ Ry` in the completion.
    pub fn basis_reflects_relation(&self, r: &CQuasiOrder) -> bool {
        let wb = self.order.way_below();
        let n = r.size();
        (0..n).all(|x| {
            (0..n).all(|y| r.rel.contains(x, y) == wb.contains(self.basis[x], self.basis[y]))
        })
    }
}

pub fn rounded_ideal_completion(r: &CQuasiOrder) -> Result<Completion, CordError> {
    let lower = r.lower_quasi_order();
    let ideals: Vec<PointSet> = r
        .rel
        .carrier()
        .subsets()
        .filter(|&i| lower.is_lower(i) && lower.is_directed(i) && r.rel.preimage(i) == i)
        .collect();
    let order = Qoset::from_fn(ideals.len(), |a, b| ideals[a].is_subset(ideals[b]))?;
    let basis = (0..r.size())
        .map(|x| {
            let rx = r.rel.pre(x);
            ideals.iter().position(|&i| i == rx).expect("Rx is a rounded ideal")
        })
        .collect();
    Ok(Completion { ideals, order, basis })
}

/// The nine equivalent descriptions of a core space, each evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoreSpaceProfile {
    pub core_space: bool,
    pub locally_supercompact: bool,
    pub open_lattice_supercontinuous: bool,
    pub closed_lattice_supercontinuous: bool,
    pub closed_lattice_continuous: bool,
    pub interior_preserves_upper_unions: bool,
    pub closure_preserves_lower_intersections: bool,
    pub locally_hypercompact_web_space: bool,
    pub locally_compact_wide_web_space: bool,
}

impl CoreSpaceProfile {
    pub const LABELS: [&'static str; 9] = [
        "core-space",
        "locally-supercompact",
        "open-lattice-supercontinuous",
        "closed-lattice-supercontinuous",
        "closed-lattice-continuous",
        "interior-preserves-upper-unions",
        "closure-preserves-lower-intersections",
        "locally-hypercompact-web-space",
        "locally-compact-wide-web-space",
    ];

    pub fn flags(&self) -> [bool; 9] {
        [
            self.core_space,
            self.locally_supercompact,
            self.open_lattice_supercontinuous,
            self.closed_lattice_supercontinuous,
            self.closed_lattice_continuous,
            self.interior_preserves_upper_unions,
            self.closure_preserves_lower_intersections,
            self.locally_hypercompact_web_space,
            self.locally_compact_wide_web_space,
        ]
    }

    pub fn all(&self) -> bool {
        self.flags().into_iter().all(|f| f)
    }
}

/// Every point has a neighbourhood base of sets accepted by `good`.
pub fn has_local_base(t: &Topology, good: impl Fn(PointSet) -> bool) -> bool {
    let candidates: Vec<(PointSet, PointSet)> = t
        .carrier()
        .subsets()
        .filter(|&c| good(c))
        .map(|c| (c, t.interior(c)))
        .collect();
    t.opens().iter().all(|&u| {
        u.iter().all(|x| {
            candidates
                .iter()
                .any(|&(c, int)| int.contains(x) && c.is_subset(u))
        })
    })
}

/// Largest family of sets over which operator equations are checked member by member.
pub const LITERAL_FAMILY_CAP: usize = 16;

/// `op(⋃𝒰) = ⋃{op(U) : U ∈ 𝒰}` for every family `𝒰 ⊆ sets`.
///
/// Beyond [`LITERAL_FAMILY_CAP`] sets, the equation is checked for the decomposition of each
/// member into the members that are not unions of smaller members (the principal ones).
fn preserves_unions(sets: &[PointSet], op: impl Fn(PointSet) -> PointSet) -> bool {
    if sets.len() <= LITERAL_FAMILY_CAP {
        unions_literal(sets, &op)
    } else {
        unions_principal(sets, &op)
    }
}

fn unions_literal(sets: &[PointSet], op: &impl Fn(PointSet) -> PointSet) -> bool {
    {
        let images: Vec<PointSet> = sets.iter().map(|&s| op(s)).collect();
        (0u32..1 << sets.len()).all(|pick| {
            let (union, image_union) = (0..sets.len())
                .filter(|i| pick >> i & 1 == 1)
                .fold((PointSet::EMPTY, PointSet::EMPTY), |(u, v), i| (u | sets[i], v | images[i]));
            op(union) == image_union
        })
    }
}

fn unions_principal(sets: &[PointSet], op: &impl Fn(PointSet) -> PointSet) -> bool {
    let principal: Vec<PointSet> = sets
        .iter()
        .copied()
        .filter(|&s| {
            let below = sets.iter().filter(|&&m| m.is_subset(s) && m != s);
            below.fold(PointSet::EMPTY, |acc, &m| acc | m) != s
        })
        .collect();
    sets.iter().all(|&s| {
        let parts = principal.iter().filter(|p| p.is_subset(s));
        parts.fold(PointSet::EMPTY, |acc, &p| acc | op(p)) == op(s)
    })
}

/// `op(⋂𝒴) = ⋂{op(Y) : Y ∈ 𝒴}` for every family `𝒴 ⊆ sets`, with `⋂∅ = full`.
fn preserves_intersections(sets: &[PointSet], full: PointSet, op: impl Fn(PointSet) -> PointSet) -> bool {
    if sets.len() <= LITERAL_FAMILY_CAP {
        intersections_literal(sets, full, &op)
    } else {
        intersections_principal(sets, full, &op)
    }
}

fn intersections_literal(sets: &[PointSet], full: PointSet, op: &impl Fn(PointSet) -> PointSet) -> bool {
    {
        let images: Vec<PointSet> = sets.iter().map(|&s| op(s)).collect();
        (0u32..1 << sets.len()).all(|pick| {
            let (meet, image_meet) = (0..sets.len())
                .filter(|i| pick >> i & 1 == 1)
                .fold((full, full), |(u, v), i| (u & sets[i], v & images[i]));
            op(meet) == image_meet
        })
    }
}

fn intersections_principal(sets: &[PointSet], full: PointSet, op: &impl Fn(PointSet) -> PointSet) -> bool {
    let principal: Vec<PointSet> = sets
        .iter()
        .copied()
        .filter(|&s| {
            let above = sets.iter().filter(|&&m| s.is_subset(m) && m != s);
            above.fold(full, |acc, &m| acc & m) != s
        })
        .collect();
    sets.iter().all(|&s| {
        let parts = principal.iter().filter(|&&p| s.is_subset(p));
        parts.fold(full, |acc, &p| acc & op(p)) == op(s)
    })
}

pub fn core_space_profile(s: &Topology) -> Result<CoreSpaceProfile, CordError> {
    let q = topoderive::specialization(s);
    let full = s.full();
    let opens = latid::open_lattice(s)?;
    let closeds = latid::closed_lattice(s)?;
    let cores: Vec<PointSet> = (0..s.size()).map(|x| q.up(x)).collect();

    let core_space = has_local_base(s, |c| cores.contains(&c));
    let locally_supercompact = has_local_base(s, |c| topoderive::is_supercompact(s, c));
    let open_lattice_supercontinuous =
        latid::check_law(&opens, LatticeLaw::CompletelyDistributive).holds;
    let closed_lattice_supercontinuous =
        latid::check_law(&closeds, LatticeLaw::CompletelyDistributive).holds;
    let closed_lattice_continuous = latid::check_law(&closeds, LatticeLaw::ContinuousLattice).holds;

    let interior_preserves_upper_unions = preserves_unions(&q.upper_sets(), |y| s.interior(y));
    let closure_preserves_lower_intersections =
        preserves_intersections(&q.lower_sets(), full, |y| s.closure(y));

    let web_space = latid::check_law(&opens, LatticeLaw::Coframe).holds;
    let locally_hypercompact_web_space =
        web_space && has_local_base(s, |c| topoderive::is_hypercompact(s, c));
    let locally_compact_wide_web_space = has_local_base(s, |c| q.is_filtered(c))
        && has_local_base(s, |c| topoderive::is_compact(s, c));

    Ok(CoreSpaceProfile {
        core_space,
        locally_supercompact,
        open_lattice_supercontinuous,
        closed_lattice_supercontinuous,
        closed_lattice_continuous,
        interior_preserves_upper_unions,
        closure_preserves_lower_intersections,
        locally_hypercompact_web_space,
        locally_compact_wide_web_space,
    })
}

/// For every open `U` and `y ∈ U` some `b ∈ B ∩ U` has `y ∈ int(↑b) ⊆ ↑b ⊆ U`.
pub fn core_basis_check(s: &Topology, b: PointSet) -> bool {
    let q = topoderive::specialization(s);
    s.opens().iter().all(|&u| {
        u.iter().all(|y| {
            (b & u).iter().any(|c| {
                let core = q.up(c);
                s.interior(core).contains(y) && core.is_subset(u)
            })
        })
    })
}

/// Smallest core basis, lexicographically least among those of that size.
pub fn minimal_core_basis(s: &Topology) -> PointSet {
    let found = least_combination(s.size(), |c| core_basis_check(s, c.iter().copied().collect()))
        .expect("the carrier is a core basis");
    found.into_iter().collect()
}

/// `x R y` implies `x R b R y` for some `b ∈ B`.
pub fn r_dense(r: &BinaryRelation, b: PointSet) -> bool {
    r.pairs()
        .all(|(x, y)| b.iter().any(|c| r.contains(x, c) && r.contains(c, y)))
}

/// `x R y` implies `x ≤_R b` and `b R y` for some `b ∈ B`.
pub fn r_cofinal(r: &BinaryRelation, b: PointSet) -> bool {
    r.pairs().all(|(x, y)| {
        b.iter()
            .any(|c| r.pre(x).is_subset(r.pre(c)) && r.contains(c, y))
    })
}

/// Least cardinality of an `R`-cofinal set, with the lexicographically least witness.
pub fn cofinality(r: &BinaryRelation) -> (usize, PointSet) {
    let found = least_combination(r.size(), |c| r_cofinal(r, c.iter().copied().collect()))
        .expect("the carrier is cofinal");
    (found.len(), found.into_iter().collect())
}

/// The Skula topology generated by the open and the closed sets.
pub fn skula(s: &Topology) -> Topology {
    let mut subbase = s.opens().to_vec();
    subbase.extend(s.closeds());
    Topology::generate(s.size(), &subbase).expect("open and closed sets lie in the carrier")
}

/// `B` meets every nonempty open set.
pub fn is_dense(t: &Topology, b: PointSet) -> bool {
    t.opens().iter().all(|&u| u.is_empty() || u.meets(b))
}

/// Every closed set is the union of the point closures `↓b ⊆ C` with `b ∈ B`.
pub fn point_closures_join_dense(s: &Topology, b: PointSet) -> bool {
    s.closeds().iter().all(|&c| {
        let joined = b
            .iter()
            .map(|x| s.closure(PointSet::singleton(x)))
            .filter(|d| d.is_subset(c))
            .fold(PointSet::EMPTY, |acc, d| acc | d);
        s.closure(joined) == c
    })
}

/// The five equivalent descriptions of a core basis: `R`-dense, `R`-cofinal, core basis,
/// dense in the Skula topology, and point closures join-dense among closed sets.
pub fn core_basis_conditions(s: &Topology, b: PointSet) -> [bool; 5] {
    let r = interior_relation(s);
    [
        r_dense(&r, b),
        r_cofinal(&r, b),
        core_basis_check(s, b),
        is_dense(&skula(s), b),
        point_closures_join_dense(s, b),
    ]
}

/// Largest carrier for which the minimal-base search is run.
pub const MIN_BASE_CAP: usize = 6;

/// `B` is a base: every open set is the union of the members it contains.
pub fn is_base(t: &Topology, family: &[PointSet]) -> bool {
    t.opens().iter().all(|&u| {
        family
            .iter()
            .filter(|b| b.is_subset(u))
            .fold(PointSet::EMPTY, |acc, &b| acc | b)
            == u
    }) && family.iter().all(|&b| t.is_open(b))
}

/// A base of least cardinality.
///
/// Any base needs, for each point `x`, a member between `x` and the smallest open set
/// around `x`; the search branches only over such members and then confirms the base property.
pub fn minimal_base(t: &Topology) -> Result<Vec<PointSet>, CordError> {
    let n = t.size();
    if n > MIN_BASE_CAP {
        return Err(CordError::SizeCapExceeded { what: "minimal base search", size: n, cap: MIN_BASE_CAP });
    }
    let options: Vec<Vec<PointSet>> = (0..n)
        .map(|x| {
            let hood = t.minimal_neighbourhood(x);
            t.opens()
                .iter()
                .copied()
                .filter(|&u| u.contains(x) && u.is_subset(hood))
                .collect()
        })
        .collect();
    let mut best: Option<Vec<PointSet>> = None;
    let mut chosen = Vec::new();
    search_base(t, &options, 0, &mut chosen, &mut best);
    let mut best = best.expect("the open sets form a base");
    best.sort_unstable();
    Ok(best)
}

fn search_base(
    t: &Topology,
    options: &[Vec<PointSet>],
    x: usize,
    chosen: &mut Vec<PointSet>,
    best: &mut Option<Vec<PointSet>>,
) {
    if best.as_ref().is_some_and(|b| b.len() <= chosen.len()) {
        return;
    }
    if x == options.len() {
        if is_base(t, chosen) {
            *best = Some(chosen.clone());
        }
        return;
    }
    let hood = t.minimal_neighbourhood(x);
    if chosen.iter().any(|&b| b.contains(x) && b.is_subset(hood)) {
        search_base(t, options, x + 1, chosen, best);
        return;
    }
    for &u in &options[x] {
        chosen.push(u);
        search_base(t, options, x + 1, chosen, best);
        chosen.pop();
    }
}

/// Base of least size by testing every subfamily of open sets, smallest first.
pub fn minimal_base_exhaustive(t: &Topology) -> Vec<PointSet> {
    let opens = t.opens();
    let found = least_combination(opens.len(), |c| {
        let family: Vec<PointSet> = c.iter().map(|&i| opens[i]).collect();
        is_base(t, &family)
    })
    .expect("the open sets form a base");
    found.into_iter().map(|i| opens[i]).collect()
}

/// Smallest dense set, lexicographically least among those of that size.
pub fn minimal_dense_set(t: &Topology) -> PointSet {
    least_combination(t.size(), |c| is_dense(t, c.iter().copied().collect()))
        .expect("the carrier is dense")
        .into_iter()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBundle {
    /// `R`-cofinality of the interior relation.
    pub c: usize,
    pub c_witness: PointSet,
    /// Weight of the space.
    pub w_open: usize,
    pub w_open_witness: Vec<PointSet>,
    /// Weight of the closed-set lattice.
    pub w_closed: usize,
    pub w_closed_witness: Vec<PointSet>,
    /// Weight of the weak patch topology.
    pub w_patch: usize,
    pub w_patch_witness: Vec<PointSet>,
    /// Density of the weak patch topology.
    pub d_patch: usize,
    pub d_patch_witness: PointSet,
    /// The five core-basis conditions agree on the cofinality witness.
    pub core_basis_conditions_agree: bool,
}

impl InvariantBundle {
    pub fn values(&self) -> [usize; 5] {
        [self.c, self.w_open, self.w_closed, self.w_patch, self.d_patch]
    }

    pub fn all_equal(&self) -> bool {
        self.values().iter().all(|&v| v == self.c)
    }
}

pub fn cardinal_invariants(s: &Topology) -> Result<InvariantBundle, CordError> {
    let r = interior_relation(s);
    let (c, c_witness) = cofinality(&r);

    let w_open_witness = minimal_base(s)?;

    let closeds = s.closeds();
    let closed_lattice = latid::closed_lattice(s)?;
    let weight = latid::min_join_dense(&closed_lattice);
    let w_closed_witness: Vec<PointSet> = crate::finstruct::mask_iter(weight.witness)
        .map(|i| closeds[i])
        .collect();

    let weak_patch = topoderive::patch(s, Coselection::Upsilon);
    let w_patch_witness = minimal_base(weak_patch.topology())?;
    let d_patch_witness = minimal_dense_set(weak_patch.topology());

    let conditions = core_basis_conditions(s, c_witness);
    Ok(InvariantBundle {
        c,
        c_witness,
        w_open: w_open_witness.len(),
        w_open_witness,
        w_closed: weight.weight,
        w_closed_witness,
        w_patch: w_patch_witness.len(),
        w_patch_witness,
        d_patch: d_patch_witness.len(),
        d_patch_witness,
        core_basis_conditions_agree: conditions.iter().all(|&f| f == conditions[0]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> PointSet {
        items.iter().copied().collect()
    }

    #[test]
    fn interior_relation_examples() {
        let r = interior_relation(&Topology::sierpinski());
        assert_eq!(r, BinaryRelation::from_pairs(2, &[(0, 0), (0, 1), (1, 1)]));
        assert_eq!(interior_relation(&Topology::discrete(2)), BinaryRelation::identity(2));
        assert_eq!(interior_relation(&Topology::indiscrete(2)), BinaryRelation::full(2));
    }

    #[test]
    fn validation_examples() {
        let c = Carrier::new(2).unwrap();
        assert!(validate_cquasiorder(c, Qoset::chain(2).as_relation()).is_ok());
        assert!(validate_cquasiorder(c, BinaryRelation::full(2)).is_ok());
        assert_eq!(
            validate_cquasiorder(c, BinaryRelation::from_pairs(2, &[(0, 1)])),
            Err(CordError::EmptyPointPreimage(0))
        );
        let c3 = Carrier::new(3).unwrap();
        assert_eq!(
            validate_cquasiorder(c3, BinaryRelation::from_pairs(3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)])),
            Err(CordError::NotIdempotent(0, 2))
        );
        let antichain_ideal = BinaryRelation::from_pairs(3, &[(0, 0), (1, 1), (0, 2), (1, 2)]);
        assert_eq!(
            validate_cquasiorder(c3, antichain_ideal),
            Err(CordError::NotDirected { y: 2, a: 0, b: 1 })
        );
        let down_failure = (0u32..1 << 9)
            .map(|bits| BinaryRelation::from_fn(3, |x, y| bits >> (3 * x + y) & 1 == 1))
            .find(|r| matches!(validate_cquasiorder(c3, r.clone()), Err(CordError::NotDownClosed { .. })));
        let r = down_failure.expect("some relation fails only down-closure");
        let Err(CordError::NotDownClosed { y, a, b }) = validate_cquasiorder(c3, r.clone()) else { unreachable!() };
        assert!(r.contains(a, y) && !r.contains(b, y) && r.pre(b).is_subset(r.pre(a)));
    }

    #[test]
    fn topology_of_examples() {
        let chain = Qoset::chain(3);
        assert_eq!(topology_of(&CQuasiOrder::from(&chain)), Topology::of_upper_sets(&chain));
        let full = CQuasiOrder::new(BinaryRelation::full(2)).unwrap();
        assert_eq!(topology_of(&full), Topology::indiscrete(2));
        let s = Topology::sierpinski();
        let r = CQuasiOrder::new(interior_relation(&s)).unwrap();
        assert_eq!(topology_of(&r), s);
    }

    #[test]
    fn rounded_set_examples() {
        let chain = CQuasiOrder::from(&Qoset::chain(2));
        assert_eq!(rounded_sets(&chain), vec![set(&[]), set(&[0]), set(&[0, 1])]);
        let full = CQuasiOrder::new(BinaryRelation::full(2)).unwrap();
        assert_eq!(rounded_sets(&full), vec![set(&[]), set(&[0, 1])]);
    }

    #[test]
    fn completion_examples() {
        let anti = CQuasiOrder::from(&Qoset::discrete(2));
        let c = rounded_ideal_completion(&anti).unwrap();
        assert_eq!(c.ideals, vec![set(&[0]), set(&[1])]);
        assert_eq!(c.order, Qoset::discrete(2));
        assert!(c.basis_reflects_relation(&anti));

        let chain = CQuasiOrder::from(&Qoset::chain(2));
        let c = rounded_ideal_completion(&chain).unwrap();
        assert_eq!(c.ideals, vec![set(&[0]), set(&[0, 1])]);
        assert_eq!(c.order, Qoset::chain(2));
        assert!(c.basis_reflects_relation(&chain));

        let one = CQuasiOrder::new(BinaryRelation::full(1)).unwrap();
        assert_eq!(rounded_ideal_completion(&one).unwrap().ideals.len(), 1);
    }

    #[test]
    fn profile_examples() {
        for t in [Topology::sierpinski(), Topology::discrete(3), Topology::indiscrete(2)] {
            assert!(core_space_profile(&t).unwrap().all(), "{t:?}");
        }
    }

    #[test]
    fn literal_and_principal_operator_checks_agree() {
        let q = Qoset::from_fn(4, |x, y| x == y || x == 0 || y == 3).unwrap();
        let tops = [Topology::of_upper_sets(&q), topoderive::scott(&q), Topology::indiscrete(4)];
        for t in &tops {
            let ups = q.upper_sets();
            let lows = q.lower_sets();
            assert_eq!(unions_literal(&ups, &|y| t.interior(y)), unions_principal(&ups, &|y| t.interior(y)));
            let full = t.full();
            assert_eq!(
                intersections_literal(&lows, full, &|y| t.closure(y)),
                intersections_principal(&lows, full, &|y| t.closure(y))
            );
        }
        assert!(unions_literal(&q.upper_sets(), &|y| tops[1].interior(y)));
    }

    #[test]
    fn core_basis_examples() {
        let s = Topology::sierpinski();
        assert!(core_basis_check(&s, set(&[0, 1])));
        assert!(!core_basis_check(&s, set(&[0])));
        assert_eq!(minimal_core_basis(&s), set(&[0, 1]));
        assert_eq!(minimal_core_basis(&Topology::indiscrete(3)), set(&[0]));
    }

    #[test]
    fn density_examples() {
        let q = Qoset::chain(3).as_relation();
        assert!(r_dense(&q, set(&[0, 1, 2])) && r_cofinal(&q, set(&[0, 1, 2])));
        assert!(r_dense(&BinaryRelation::full(2), set(&[0])));
        assert_eq!(cofinality(&BinaryRelation::full(2)), (1, set(&[0])));
    }

    #[test]
    fn invariant_examples() {
        let cases = [(Topology::sierpinski(), 2), (Topology::indiscrete(3), 1), (Topology::discrete(3), 3)];
        for (t, expected) in cases {
            let b = cardinal_invariants(&t).unwrap();
            assert_eq!(b.values(), [expected; 5], "{t:?}");
            assert!(b.core_basis_conditions_agree);
            assert_eq!(minimal_base_exhaustive(&t).len(), b.w_open);
        }
    }
}
