//! Map predicates between ordered structures, lower adjoints, and the six
//! interchangeable descriptions of a C-ordered set.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cord::{self, CQuasiOrder, CordError};
use crate::finstruct::iso::{find_isomorphism, Signature, Structure};
use crate::finstruct::{
    mask_iter, BinaryRelation, CodecError, ElemSet, Lattice, OrderedSpace, PointSet,
    Qoset, Record, SpaceMap, Topology, ValidationError,
};
use crate::latid::{self, LatticeLaw};
use crate::ospace;
use crate::topoderive::{self, Coselection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("map from {map_source} to {map_target} points does not fit contexts of {source_size} and {target_size} points")]
    ContextMismatch { map_source: usize, map_target: usize, source_size: usize, target_size: usize },
    #[error("map is not isotone: {x} <= {y} but f({x}) = {fx} is not below f({y}) = {fy}")]
    NotIsotone { x: usize, y: usize, fx: usize, fy: usize },
}

/// The data a map may be judged against: any of a topology, a quasi-order and an
/// interior-type relation on the same carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapContext {
    pub size: usize,
    pub topology: Option<Topology>,
    pub order: Option<Qoset>,
    pub relation: Option<BinaryRelation>,
}

impl MapContext {
    /// A space with its specialization order and interior relation.
    pub fn of_topology(t: &Topology) -> Self {
        MapContext {
            size: t.size(),
            topology: Some(t.clone()),
            order: Some(topoderive::specialization(t)),
            relation: Some(topoderive::interior_relation(t)),
        }
    }

    pub fn of_ordered_space(s: &OrderedSpace) -> Self {
        MapContext {
            size: s.size(),
            topology: Some(s.topology().clone()),
            order: Some(s.qoset().clone()),
            relation: None,
        }
    }

    pub fn of_qoset(q: &Qoset) -> Self {
        MapContext { size: q.size(), topology: None, order: Some(q.clone()), relation: None }
    }

    /// A C-quasi-ordered set with its lower quasi-order and the topology `O_R`.
    pub fn of_c_quasi_order(r: &CQuasiOrder) -> Self {
        MapContext {
            size: r.size(),
            topology: Some(cord::topology_of(r)),
            order: Some(r.lower_quasi_order()),
            relation: Some(r.relation().clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ZetaProper {
    pub upsilon: bool,
    pub sigma: bool,
    pub alpha: bool,
}

impl ZetaProper {
    pub fn get(&self, zeta: Coselection) -> bool {
        match zeta {
            Coselection::Upsilon => self.upsilon,
            Coselection::Sigma => self.sigma,
            Coselection::Alpha => self.alpha,
        }
    }
}

/// Verdicts for every map property whose data is present in both contexts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MapProfile {
    pub continuous: Option<bool>,
    pub isotone: Option<bool>,
    pub lower_semicontinuous: Option<bool>,
    pub zeta_proper: Option<ZetaProper>,
    pub core_continuous: Option<bool>,
    pub quasiopen: Option<bool>,
    pub residuated: Option<bool>,
    pub residual: Option<bool>,
    pub interpolating: Option<bool>,
}

impl MapProfile {
    /// Core continuity forces properness for all three coselections.
    pub fn consistent(&self) -> bool {
        match (self.core_continuous, self.zeta_proper) {
            (Some(true), Some(z)) => z.upsilon && z.sigma && z.alpha,
            _ => true,
        }
    }
}

fn is_continuous(f: &SpaceMap, src: &Topology, dst: &Topology) -> bool {
    dst.opens().iter().all(|&v| src.is_open(f.preimage(v)))
}

fn is_isotone(f: &SpaceMap, src: &Qoset, dst: &Qoset) -> bool {
    isotone_witness(f, src, dst).is_none()
}

fn isotone_witness(f: &SpaceMap, src: &Qoset, dst: &Qoset) -> Option<(usize, usize)> {
    let n = src.size();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| src.leq(x, y) && !dst.leq(f.apply(x), f.apply(y)))
}

fn zeta_proper(f: &SpaceMap, src: &Topology, dst: &Topology, zeta: Coselection) -> bool {
    let src_patch = topoderive::patch(src, zeta);
    let coopens = topoderive::coselection(dst, zeta);
    is_continuous(f, src, dst)
        && coopens.opens().iter().all(|&v| src_patch.topology().is_open(f.preimage(v)))
}

/// Preimages of the principal sets in `dst_rows` are principal sets in `src_rows`.
fn principal_preimages(f: &SpaceMap, src_rows: &[PointSet], dst_rows: &[PointSet]) -> bool {
    dst_rows.iter().all(|&r| src_rows.contains(&f.preimage(r)))
}

pub fn map_profile(f: &SpaceMap, src: &MapContext, dst: &MapContext) -> Result<MapProfile, MorphError> {
    if f.source() != src.size || f.target() != dst.size {
        return Err(MorphError::ContextMismatch {
            map_source: f.source(),
            map_target: f.target(),
            source_size: src.size,
            target_size: dst.size,
        });
    }
    let tops = src.topology.as_ref().zip(dst.topology.as_ref());
    let orders = src.order.as_ref().zip(dst.order.as_ref());
    let continuous = tops.map(|(s, d)| is_continuous(f, s, d));
    let isotone = orders.map(|(s, d)| is_isotone(f, s, d));
    let lower_semicontinuous = tops.zip(orders).map(|((s, d), (_, dq))| {
        d.closeds()
            .into_iter()
            .filter(|&c| dq.is_lower(c))
            .all(|c| s.is_closed(f.preimage(c)))
    });
    let zeta_proper = tops.map(|(s, d)| ZetaProper {
        upsilon: zeta_proper(f, s, d, Coselection::Upsilon),
        sigma: zeta_proper(f, s, d, Coselection::Sigma),
        alpha: zeta_proper(f, s, d, Coselection::Alpha),
    });
    let core_continuous = tops.map(|(s, d)| {
        let cores: Vec<PointSet> = s.minimal_neighbourhoods().to_vec();
        is_continuous(f, s, d)
            && (0..d.size()).all(|y| cores.contains(&f.preimage(topoderive::saturation(d, PointSet::singleton(y)))))
    });
    let quasiopen = tops.map(|(s, d)| {
        s.opens().iter().all(|&u| d.is_open(topoderive::saturation(d, f.image(u))))
    });
    let residual = orders.map(|(s, d)| principal_preimages(f, s.up_rows(), d.up_rows()));
    let residuated = orders.map(|(s, d)| {
        let src_down: Vec<PointSet> = (0..s.size()).map(|x| s.down(x)).collect();
        let dst_down: Vec<PointSet> = (0..d.size()).map(|y| d.down(y)).collect();
        principal_preimages(f, &src_down, &dst_down)
    });
    let interpolating = src.relation.as_ref().zip(dst.relation.as_ref()).map(|(r, r2)| {
        (0..src.size).all(|y| {
            r2.pre(f.apply(y))
                .iter()
                .all(|xp| (0..src.size).any(|x| r2.contains(xp, f.apply(x)) && r.contains(x, y)))
        })
    });
    Ok(MapProfile {
        continuous,
        isotone,
        lower_semicontinuous,
        zeta_proper,
        core_continuous,
        quasiopen,
        residuated,
        residual,
        interpolating,
    })
}

/// The map `g` with `g(y) ≤ x ⇔ y ≤ f(x)`, when it exists.
///
/// `g(y)` must be a least element of `{x : y ≤ f(x)}`; among equivalent least
/// elements the smallest label is chosen.
pub fn lower_adjoint(f: &SpaceMap, src: &Qoset, dst: &Qoset) -> Result<Option<SpaceMap>, MorphError> {
    if f.source() != src.size() || f.target() != dst.size() {
        return Err(MorphError::ContextMismatch {
            map_source: f.source(),
            map_target: f.target(),
            source_size: src.size(),
            target_size: dst.size(),
        });
    }
    if let Some((x, y)) = isotone_witness(f, src, dst) {
        return Err(MorphError::NotIsotone { x, y, fx: f.apply(x), fy: f.apply(y) });
    }
    let (n, m) = (src.size(), dst.size());
    let mut values = Vec::with_capacity(m);
    for y in 0..m {
        let above: Vec<usize> = (0..n).filter(|&x| dst.leq(y, f.apply(x))).collect();
        let least = above.iter().copied().find(|&g| above.iter().all(|&x| src.leq(g, x)));
        match least {
            Some(g) if (0..n).all(|x| src.leq(g, x) == dst.leq(y, f.apply(x))) => values.push(g),
            _ => return Ok(None),
        }
    }
    Ok(Some(SpaceMap::new(m, n, values).expect("values lie in the source carrier")))
}

/// The six object kinds describing a C-ordered set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepKind {
    COrderedSet,
    T0CoreSpace,
    FanOrderedSpace,
    BasedDomain,
    CoreBasedSoberSpace,
    BasedSupercontinuousLattice,
}

impl RepKind {
    pub const ALL: [RepKind; 6] = [
        RepKind::COrderedSet,
        RepKind::T0CoreSpace,
        RepKind::FanOrderedSpace,
        RepKind::BasedDomain,
        RepKind::CoreBasedSoberSpace,
        RepKind::BasedSupercontinuousLattice,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RepKind::COrderedSet => "c-ordered-set",
            RepKind::T0CoreSpace => "t0-core-space",
            RepKind::FanOrderedSpace => "fan-ordered-space",
            RepKind::BasedDomain => "based-domain",
            RepKind::CoreBasedSoberSpace => "core-based-sober-space",
            RepKind::BasedSupercontinuousLattice => "based-supercontinuous-lattice",
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for RepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RepKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| format!("unknown representation kind `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    COrderedSet(CQuasiOrder),
    T0CoreSpace(Topology),
    FanOrderedSpace(OrderedSpace),
    BasedDomain { order: Qoset, basis: PointSet },
    CoreBasedSoberSpace { topology: Topology, basis: PointSet },
    BasedSupercontinuousLattice { lattice: Lattice, basis: ElemSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error("relation is not a C-quasi-order: {0}")]
    NotCQuasiOrder(#[from] CordError),
    #[error("points {0} and {1} have the same preimage, so the lower order is not antisymmetric")]
    NotCOrdered(usize, usize),
    #[error("points {0} and {1} are topologically indistinguishable")]
    NotT0(usize, usize),
    #[error("space is not a core space")]
    NotCoreSpace,
    #[error("ordered space is not a fan space")]
    NotFanSpace,
    #[error("order is not antisymmetric at {0} and {1}")]
    NotAPoset(usize, usize),
    #[error("order is not a continuous domain")]
    NotContinuousDomain,
    #[error("basis elements way below {0} do not form a directed set")]
    BasisNotDirected(usize),
    #[error("basis elements way below {0} do not have join {0}")]
    BasisJoinMismatch(usize),
    #[error("space is not sober")]
    NotSober,
    #[error("the given points do not form a core basis: point {0} lacks a basic neighbourhood")]
    NotCoreBasis(usize),
    #[error("lattice is not completely distributive")]
    NotCompletelyDistributive,
    #[error("basis element {0} is not coprime")]
    NotCoprime(usize),
    #[error("basis is not join-dense: element {0} is not a join of basis elements")]
    NotJoinDense(usize),
    #[error("basis mentions element {0} outside the structure")]
    BasisOutOfRange(usize),
    #[error("basis has {0} elements, more than the 16-point carrier cap")]
    BasisTooLarge(usize),
    #[error("record error: {0}")]
    Record(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvertError {
    #[error("invalid source: {0}")]
    InvalidSource(#[from] RepresentationError),
}

impl Representation {
    pub fn kind(&self) -> RepKind {
        match self {
            Representation::COrderedSet(_) => RepKind::COrderedSet,
            Representation::T0CoreSpace(_) => RepKind::T0CoreSpace,
            Representation::FanOrderedSpace(_) => RepKind::FanOrderedSpace,
            Representation::BasedDomain { .. } => RepKind::BasedDomain,
            Representation::CoreBasedSoberSpace { .. } => RepKind::CoreBasedSoberSpace,
            Representation::BasedSupercontinuousLattice { .. } => RepKind::BasedSupercontinuousLattice,
        }
    }

    /// `{"kind": .., "payload": <structure record>, "basis": [..]}`.
    pub fn to_value(&self) -> Value {
        let (payload, basis): (Record, Vec<usize>) = match self {
            Representation::COrderedSet(r) => (r.relation().clone().into(), vec![]),
            Representation::T0CoreSpace(t) => (t.clone().into(), vec![]),
            Representation::FanOrderedSpace(s) => (s.clone().into(), vec![]),
            Representation::BasedDomain { order, basis } => (order.clone().into(), basis.to_vec()),
            Representation::CoreBasedSoberSpace { topology, basis } => {
                (topology.clone().into(), basis.to_vec())
            }
            Representation::BasedSupercontinuousLattice { lattice, basis } => {
                (lattice.clone().into(), mask_iter(*basis).collect())
            }
        };
        json!({"kind": self.kind().tag(), "payload": payload.to_value(), "basis": basis})
    }

    pub fn from_value(value: &Value) -> Result<Self, RepresentationError> {
        let bad = |m: &str| RepresentationError::Record(m.to_string());
        let kind: RepKind = value
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing string field `kind`"))?
            .parse()
            .map_err(|e: String| bad(&e))?;
        let payload = Record::from_value(value.get("payload").ok_or_else(|| bad("missing field `payload`"))?)
            .map_err(|e: CodecError| bad(&e.to_string()))?;
        let basis: Vec<usize> = match value.get("basis") {
            None => Vec::new(),
            Some(b) => b
                .as_array()
                .ok_or_else(|| bad("`basis` must be an array"))?
                .iter()
                .map(|v| v.as_u64().map(|x| x as usize).ok_or_else(|| bad("basis entries must be integers")))
                .collect::<Result<_, _>>()?,
        };
        let point_basis = |n: usize| -> Result<PointSet, RepresentationError> {
            match basis.iter().find(|&&b| b >= n) {
                Some(&b) => Err(RepresentationError::BasisOutOfRange(b)),
                None => Ok(basis.iter().copied().collect()),
            }
        };
        let mismatch = || bad(&format!("payload of kind `{}` does not fit `{kind}`", payload.kind()));
        Ok(match (kind, &payload) {
            (RepKind::COrderedSet, Record::Relation(r)) => {
                Representation::COrderedSet(CQuasiOrder::new(r.clone())?)
            }
            (RepKind::COrderedSet, Record::Qoset(q)) => Representation::COrderedSet(CQuasiOrder::from(q)),
            (RepKind::T0CoreSpace, Record::Topology(t)) => Representation::T0CoreSpace(t.clone()),
            (RepKind::FanOrderedSpace, Record::OrderedSpace(s)) => Representation::FanOrderedSpace(s.clone()),
            (RepKind::BasedDomain, Record::Qoset(q)) => {
                Representation::BasedDomain { order: q.clone(), basis: point_basis(q.size())? }
            }
            (RepKind::CoreBasedSoberSpace, Record::Topology(t)) => {
                Representation::CoreBasedSoberSpace { topology: t.clone(), basis: point_basis(t.size())? }
            }
            (RepKind::BasedSupercontinuousLattice, Record::Lattice(l)) => {
                if let Some(&b) = basis.iter().find(|&&b| b >= l.size()) {
                    return Err(RepresentationError::BasisOutOfRange(b));
                }
                let mask = basis.iter().fold(0u64, |acc, &b| acc | 1 << b);
                Representation::BasedSupercontinuousLattice { lattice: l.clone(), basis: mask }
            }
            _ => return Err(mismatch()),
        })
    }
}

fn basis_rows(size: usize, basis: u64) -> Vec<u64> {
    (0..size).map(|x| basis & (1 << x)).collect()
}

fn with_basis(sig: Signature, size: usize, basis: u64) -> Signature {
    sig.with_relation(basis_rows(size, basis))
}

impl Representation {
    fn signature(&self) -> Signature {
        match self {
            Representation::COrderedSet(r) => r.relation().signature(),
            Representation::T0CoreSpace(t) => t.signature(),
            Representation::FanOrderedSpace(s) => s.signature(),
            Representation::BasedDomain { order, basis } => {
                with_basis(order.signature(), order.size(), basis.bits() as u64)
            }
            Representation::CoreBasedSoberSpace { topology, basis } => {
                with_basis(topology.signature(), topology.size(), basis.bits() as u64)
            }
            Representation::BasedSupercontinuousLattice { lattice, basis } => {
                with_basis(lattice.signature(), lattice.size(), *basis)
            }
        }
    }
}

/// Same kind and isomorphic underlying structures, with bases matched.
pub fn representations_isomorphic(a: &Representation, b: &Representation) -> bool {
    a.kind() == b.kind() && find_isomorphism(&a.signature(), &b.signature()).is_some()
}

fn t0_witness(t: &Topology) -> Option<(usize, usize)> {
    let n = t.size();
    let cores = t.minimal_neighbourhoods();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| cores[x] == cores[y])
}

fn check_core_space(t: &Topology) -> Result<(), RepresentationError> {
    let profile = cord::core_space_profile(t)?;
    if profile.core_space {
        Ok(())
    } else {
        Err(RepresentationError::NotCoreSpace)
    }
}

fn check_poset(q: &Qoset) -> Result<(), RepresentationError> {
    match q.antisymmetry_witness() {
        Some((x, y)) => Err(RepresentationError::NotAPoset(x, y)),
        None => Ok(()),
    }
}

/// Kind-specific validity.
pub fn validate_representation(r: &Representation) -> Result<(), RepresentationError> {
    match r {
        Representation::COrderedSet(c) => {
            let lower = c.lower_quasi_order();
            match lower.antisymmetry_witness() {
                Some((x, y)) => Err(RepresentationError::NotCOrdered(x, y)),
                None => Ok(()),
            }
        }
        Representation::T0CoreSpace(t) => {
            if let Some((x, y)) = t0_witness(t) {
                return Err(RepresentationError::NotT0(x, y));
            }
            check_core_space(t)
        }
        Representation::FanOrderedSpace(s) => {
            check_poset(s.qoset())?;
            if ospace::web_profile(s).fan_space {
                Ok(())
            } else {
                Err(RepresentationError::NotFanSpace)
            }
        }
        Representation::BasedDomain { order, basis } => {
            check_poset(order)?;
            if !order.is_up_complete() || !order.is_continuous() {
                return Err(RepresentationError::NotContinuousDomain);
            }
            let wb = order.way_below();
            for y in 0..order.size() {
                let approx = wb.pre(y) & *basis;
                if !order.is_directed(approx) {
                    return Err(RepresentationError::BasisNotDirected(y));
                }
                let join = order.least_upper_bound(approx);
                if join.map_or(true, |j| !order.equivalent(j, y)) {
                    return Err(RepresentationError::BasisJoinMismatch(y));
                }
            }
            Ok(())
        }
        Representation::CoreBasedSoberSpace { topology, basis } => {
            if let Some((x, y)) = t0_witness(topology) {
                return Err(RepresentationError::NotT0(x, y));
            }
            if !topoderive::is_sober(topology) {
                return Err(RepresentationError::NotSober);
            }
            core_basis_gap(topology, *basis).map_or(Ok(()), |y| Err(RepresentationError::NotCoreBasis(y)))
        }
        Representation::BasedSupercontinuousLattice { lattice, basis } => {
            if !latid::check_law(lattice, LatticeLaw::CompletelyDistributive).holds {
                return Err(RepresentationError::NotCompletelyDistributive);
            }
            let coprimes = latid::coprimes(lattice);
            if let Some(b) = mask_iter(*basis & !coprimes).next() {
                return Err(RepresentationError::NotCoprime(b));
            }
            if let Some(y) = (0..lattice.size()).find(|&y| lattice.join_all(*basis & lattice.down(y)) != y) {
                return Err(RepresentationError::NotJoinDense(y));
            }
            Ok(())
        }
    }
}

/// A point of some open `U` that has no basic core `↑x ⊆ U` with `x ∈ B` around it.
fn core_basis_gap(t: &Topology, basis: PointSet) -> Option<usize> {
    let r = topoderive::interior_relation(t);
    (0..t.size()).find(|&y| {
        t.opens().iter().any(|&u| u.contains(y) && (r.pre(y) & basis & u).is_empty())
    })
}

/// Points of `basis` (a set of labels) in ascending order.
fn basis_points(basis: u64) -> Vec<usize> {
    mask_iter(basis).collect()
}

/// Restrict a relation on labelled elements to the basis, relabelled in ascending order.
fn induced(points: &[usize], rel: impl Fn(usize, usize) -> bool) -> Result<CQuasiOrder, RepresentationError> {
    if points.len() > crate::finstruct::MAX_POINTS {
        return Err(RepresentationError::BasisTooLarge(points.len()));
    }
    let k = points.len();
    let r = BinaryRelation::from_fn(k, |i, j| rel(points[i], points[j]));
    Ok(CQuasiOrder::new(r)?)
}

/// The C-ordered set described by a valid representation.
fn to_c_order(r: &Representation) -> Result<CQuasiOrder, RepresentationError> {
    Ok(match r {
        Representation::COrderedSet(c) => c.clone(),
        Representation::T0CoreSpace(t) => CQuasiOrder::new(topoderive::interior_relation(t))?,
        Representation::FanOrderedSpace(s) => {
            CQuasiOrder::new(topoderive::interior_relation(&topoderive::upper_space(s)))?
        }
        Representation::BasedDomain { order, basis } => {
            let wb = order.way_below();
            induced(&basis_points(basis.bits() as u64), |a, b| wb.contains(a, b))?
        }
        Representation::CoreBasedSoberSpace { topology, basis } => {
            let wb = topoderive::specialization(topology).way_below();
            induced(&basis_points(basis.bits() as u64), |a, b| wb.contains(a, b))?
        }
        Representation::BasedSupercontinuousLattice { lattice, basis } => {
            let tri = latid::superway(lattice);
            induced(&basis_points(*basis), |a, b| tri.contains(b, a))?
        }
    })
}

/// The representation of kind `target` built from a C-ordered set.
fn from_c_order(c: &CQuasiOrder, target: RepKind) -> Representation {
    match target {
        RepKind::COrderedSet => Representation::COrderedSet(c.clone()),
        RepKind::T0CoreSpace => Representation::T0CoreSpace(cord::topology_of(c)),
        RepKind::FanOrderedSpace => {
            Representation::FanOrderedSpace(topoderive::patch(&cord::topology_of(c), Coselection::Upsilon))
        }
        RepKind::BasedDomain | RepKind::CoreBasedSoberSpace => {
            let completion = cord::rounded_ideal_completion(c).expect("valid C-quasi-order");
            let basis: PointSet = completion.basis.iter().copied().collect();
            if target == RepKind::BasedDomain {
                Representation::BasedDomain { order: completion.order, basis }
            } else {
                Representation::CoreBasedSoberSpace { topology: topoderive::scott(&completion.order), basis }
            }
        }
        RepKind::BasedSupercontinuousLattice => {
            let opens = cord::topology_of(c);
            let lattice = Lattice::of_family(opens.opens()).expect("open sets form a lattice");
            let basis = (0..c.size()).fold(0u64, |acc, x| {
                let xr = c.relation().post(x);
                acc | 1 << opens.opens().iter().position(|&u| u == xr).expect("xR is open")
            });
            Representation::BasedSupercontinuousLattice { lattice, basis }
        }
    }
}

/// Translate a valid representation into another kind.
///
/// Every conversion passes through the C-ordered set; carriers of the result are
/// labelled by ascending labels of the source elements they come from.
pub fn convert(r: &Representation, target: RepKind) -> Result<Representation, ConvertError> {
    validate_representation(r)?;
    let c = to_c_order(r)?;
    Ok(from_c_order(&c, target))
}

impl From<ValidationError> for RepresentationError {
    fn from(e: ValidationError) -> Self {
        RepresentationError::Record(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labcli::enumerate::{partial_orders, t0_topologies};

    fn chain_alpha(n: usize) -> MapContext {
        MapContext::of_topology(&topoderive::alexandroff(&Qoset::chain(n)))
    }

    #[test]
    fn identity_on_sierpinski() {
        let ctx = MapContext::of_topology(&Topology::sierpinski());
        let p = map_profile(&SpaceMap::identity(2), &ctx, &ctx).unwrap();
        let z = p.zeta_proper.unwrap();
        let flags = [
            p.continuous, p.isotone, p.lower_semicontinuous, p.core_continuous, p.quasiopen,
            p.residuated, p.residual, p.interpolating, Some(z.upsilon && z.sigma && z.alpha),
        ];
        assert!(flags.iter().all(|f| *f == Some(true)));
    }

    #[test]
    fn collapse_and_constant_maps() {
        let f = SpaceMap::new(3, 2, vec![0, 0, 1]).unwrap();
        let p = map_profile(&f, &chain_alpha(3), &chain_alpha(2)).unwrap();
        assert_eq!((p.continuous, p.isotone, p.residual), (Some(true), Some(true), Some(true)));
        let g = lower_adjoint(&f, &Qoset::chain(3), &Qoset::chain(2)).unwrap().unwrap();
        assert_eq!(g.values(), &[0, 2]);

        let k = SpaceMap::constant(2, 2, 0).unwrap();
        let p = map_profile(&k, &chain_alpha(2), &chain_alpha(2)).unwrap();
        assert_eq!((p.continuous, p.residual), (Some(true), Some(false)));
        assert_eq!(lower_adjoint(&k, &Qoset::chain(2), &Qoset::chain(2)).unwrap(), None);
        assert_eq!(
            lower_adjoint(&SpaceMap::identity(3), &Qoset::chain(3), &Qoset::chain(3)).unwrap(),
            Some(SpaceMap::identity(3))
        );
    }

    #[test]
    fn non_isotone_maps_have_no_adjoint_question() {
        let f = SpaceMap::new(2, 2, vec![1, 0]).unwrap();
        assert!(matches!(
            lower_adjoint(&f, &Qoset::chain(2), &Qoset::chain(2)),
            Err(MorphError::NotIsotone { x: 0, y: 1, .. })
        ));
    }

    /// Residuality and existence of a lower adjoint coincide, and core continuity
    /// implies properness, over all maps between small posets with Alexandroff topologies.
    #[test]
    fn adjoints_and_properness_over_small_maps() {
        for n in 1..=3 {
            for m in 1..=3 {
                for p in partial_orders(n) {
                    for q in partial_orders(m) {
                        let (sp, sq) = (topoderive::alexandroff(&p), topoderive::alexandroff(&q));
                        let (cp, cq) = (MapContext::of_topology(&sp), MapContext::of_topology(&sq));
                        for code in 0..m.pow(n as u32) {
                            let values: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
                            let f = SpaceMap::new(n, m, values).unwrap();
                            let prof = map_profile(&f, &cp, &cq).unwrap();
                            assert!(prof.consistent());
                            if prof.isotone == Some(true) {
                                let adj = lower_adjoint(&f, &p, &q).unwrap();
                                assert_eq!(adj.is_some(), prof.residual.unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn validation_examples() {
        let p = Qoset::chain(3);
        let full = Representation::BasedDomain { order: p.clone(), basis: p.full() };
        assert_eq!(validate_representation(&full), Ok(()));
        let square = Lattice::diamond().to_qoset().unwrap();
        let atoms: PointSet = [1, 2].into_iter().collect();
        assert!(!square.is_directed(square.way_below().pre(3) & atoms));
        let atoms = Representation::BasedDomain { order: square, basis: atoms };
        // The bottom is the least failing point: nothing in the basis lies way below it.
        assert_eq!(validate_representation(&atoms), Err(RepresentationError::BasisNotDirected(0)));
        let opens = Lattice::of_family(Topology::sierpinski().opens()).unwrap();
        let based = Representation::BasedSupercontinuousLattice { lattice: opens, basis: 0b110 };
        assert_eq!(validate_representation(&based), Ok(()));
    }

    #[test]
    fn conversion_examples() {
        let c = Representation::COrderedSet(CQuasiOrder::from(&Qoset::chain(2)));
        let d = convert(&c, RepKind::BasedDomain).unwrap();
        assert_eq!(d, Representation::BasedDomain { order: Qoset::chain(2), basis: PointSet::full(2) });

        let s = Representation::T0CoreSpace(Topology::sierpinski());
        assert_eq!(convert(&s, RepKind::COrderedSet).unwrap(), c);

        let fan = OrderedSpace::new(Qoset::chain(2), Topology::discrete(2)).unwrap();
        let back = convert(&Representation::FanOrderedSpace(fan), RepKind::T0CoreSpace).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn roundtrips_on_three_points() {
        for n in 1..=3 {
            for t in t0_topologies(n) {
                let base = Representation::T0CoreSpace(t);
                for a in RepKind::ALL {
                    let ra = convert(&base, a).unwrap();
                    assert_eq!(validate_representation(&ra), Ok(()), "{a}");
                    for b in RepKind::ALL {
                        let rb = convert(&ra, b).unwrap();
                        let back = convert(&rb, a).unwrap();
                        assert!(representations_isomorphic(&back, &ra), "{a} -> {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn records_roundtrip() {
        let t = Representation::CoreBasedSoberSpace { topology: Topology::sierpinski(), basis: PointSet::full(2) };
        assert_eq!(Representation::from_value(&t.to_value()).unwrap(), t);
        let l = convert(&t, RepKind::BasedSupercontinuousLattice).unwrap();
        assert_eq!(Representation::from_value(&l.to_value()).unwrap(), l);
    }
}
