//! Theorem suites: each one evaluates a family of identities or equivalences over an
//! enumerated stream and aggregates the verdicts into a deterministic report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::enumerate::{self, ProductStream};
use crate::cord::{self, CQuasiOrder};
use crate::finstruct::{
    BinaryRelation, Lattice, OrderedSpace, PointSet, Qoset, Record, SpaceMap, Topology,
};
use crate::latid::{self, LatticeLaw};
use crate::morphcat::{self, MapContext, RepKind, Representation};
use crate::ospace::{self, Bundle};
use crate::topoderive::{self, Coselection};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    Thm33Roundtrip,
    Thm33,
    COrderCollapse,
    Lemma21,
    Prop31,
    Lemma41,
    Thm46,
    Thm53,
    Prop55,
    Lemma61,
    Thm62,
    Thm72,
    Prop74,
    Cor48,
    Thm84,
    Prop91,
    Thm93,
    LatticeLaws,
    CountCrosscheck,
}

impl SuiteId {
    pub const ALL: [SuiteId; 19] = [
        SuiteId::Thm33Roundtrip,
        SuiteId::Thm33,
        SuiteId::COrderCollapse,
        SuiteId::Lemma21,
        SuiteId::Prop31,
        SuiteId::Lemma41,
        SuiteId::Thm46,
        SuiteId::Thm53,
        SuiteId::Prop55,
        SuiteId::Lemma61,
        SuiteId::Thm62,
        SuiteId::Thm72,
        SuiteId::Prop74,
        SuiteId::Cor48,
        SuiteId::Thm84,
        SuiteId::Prop91,
        SuiteId::Thm93,
        SuiteId::LatticeLaws,
        SuiteId::CountCrosscheck,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SuiteId::Thm33Roundtrip => "thm-3.3-roundtrip",
            SuiteId::Thm33 => "thm-3.3",
            SuiteId::COrderCollapse => "c-order-collapse",
            SuiteId::Lemma21 => "lemma-2.1",
            SuiteId::Prop31 => "prop-3.1",
            SuiteId::Lemma41 => "lemma-4.1",
            SuiteId::Thm46 => "thm-4.6",
            SuiteId::Thm53 => "thm-5.3",
            SuiteId::Prop55 => "prop-5.5",
            SuiteId::Lemma61 => "lemma-6.1",
            SuiteId::Thm62 => "thm-6.2",
            SuiteId::Thm72 => "thm-7.2",
            SuiteId::Prop74 => "prop-7.4",
            SuiteId::Cor48 => "cor-4.8",
            SuiteId::Thm84 => "thm-8.4",
            SuiteId::Prop91 => "prop-9.1",
            SuiteId::Thm93 => "thm-9.3",
            SuiteId::LatticeLaws => "lattice-laws",
            SuiteId::CountCrosscheck => "count-crosscheck",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SuiteId::Thm33Roundtrip => "topologies and interior relations determine each other",
            SuiteId::Thm33 => "closures of rounded sets, irreducible closed sets, Scott and cocompact topologies",
            SuiteId::COrderCollapse => "finite C-quasi-orders are exactly the quasi-orders",
            SuiteId::Lemma21 => "patch and upper space functors invert each other",
            SuiteId::Prop31 => "nine descriptions of core spaces agree",
            SuiteId::Lemma41 => "core stability of semi-qospaces and its four components",
            SuiteId::Thm46 => "sector spaces are the patch spaces of core spaces",
            SuiteId::Thm53 => "fan spaces are the weak patch spaces of core spaces",
            SuiteId::Prop55 => "the quasi-uniformity of a space recovers its topologies",
            SuiteId::Lemma61 => "stability for unions and intersections of principal filters",
            SuiteId::Thm62 => "Lawson spaces of continuous domains",
            SuiteId::Thm72 => "semilattice characterizations of weak patch spaces",
            SuiteId::Prop74 => "compact Lawson semilattices",
            SuiteId::Cor48 => "lower adjoints exist exactly for residual maps; core continuity implies properness",
            SuiteId::Thm84 => "six descriptions of C-ordered sets convert back and forth",
            SuiteId::Prop91 => "five characterizations of core bases agree for every subset",
            SuiteId::Thm93 => "cofinality, weights and density coincide",
            SuiteId::LatticeLaws => "finite distributivity laws collapse to one",
            SuiteId::CountCrosscheck => "topologies and quasi-orders are equinumerous",
        }
    }

    /// Largest size accepted by the suite.
    pub fn cap(self) -> usize {
        match self {
            SuiteId::Cor48 => 3,
            SuiteId::Thm33
            | SuiteId::COrderCollapse
            | SuiteId::Prop31
            | SuiteId::Prop55
            | SuiteId::Thm84
            | SuiteId::Prop91 => 4,
            SuiteId::LatticeLaws | SuiteId::CountCrosscheck => 6,
            _ => 5,
        }
    }

    /// Whether the stream contains products of orders and topologies, whose size-5
    /// sweep runs only on request.
    fn uses_product(self) -> bool {
        matches!(
            self,
            SuiteId::Lemma21
                | SuiteId::Lemma41
                | SuiteId::Thm46
                | SuiteId::Thm53
                | SuiteId::Lemma61
                | SuiteId::Thm72
                | SuiteId::Prop74
        )
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|x| x.tag() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleSpec {
    pub seed: u64,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSpec {
    pub suite: SuiteId,
    pub n: usize,
    /// Evaluate a seeded uniform sample of the stream instead of all of it.
    pub sample: Option<SampleSpec>,
    /// Allow the full size-5 sweep of order-topology products.
    pub exhaustive: bool,
    /// Worker threads; `None` uses the default pool.
    pub workers: Option<usize>,
    /// Keep one verdict per evaluated instance.
    pub verbose: bool,
    /// Seed of a deliberately broken predicate variant.
    pub fault: Option<u64>,
}

impl SuiteSpec {
    pub fn new(suite: SuiteId, n: usize) -> Self {
        SuiteSpec { suite, n, sample: None, exhaustive: false, workers: None, verbose: false, fault: None }
    }

    pub fn workers(mut self, k: usize) -> Self {
        self.workers = Some(k);
        self
    }

    pub fn fault(mut self, seed: u64) -> Self {
        self.fault = Some(seed);
        self
    }

    pub fn sample(mut self, seed: u64, size: usize) -> Self {
        self.sample = Some(SampleSpec { seed, size });
        self
    }

    pub fn verbose(mut self) -> Self {
        self.verbose = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("suite {suite} accepts n in 1..={cap}, got {n}")]
    BoundTooLarge { suite: SuiteId, n: usize, cap: usize },
    #[error("suite {suite} at n = {n} sweeps about {instances} instances; pass a sample seed or request the exhaustive sweep")]
    NeedsSampleOrExhaustive { suite: SuiteId, n: usize, instances: usize },
    #[error("cannot start worker pool: {0}")]
    Workers(String),
}

/// One instance of a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Case {
    Topology(Topology),
    Order(Qoset),
    Space(OrderedSpace),
    Lattice(Lattice),
    Relation(BinaryRelation),
    TopologyZeta(Topology, Coselection),
    SpaceZeta(OrderedSpace, Coselection),
    TopologyPair(Topology, Topology),
    Counts(usize),
}

impl Case {
    pub fn to_value(&self) -> Value {
        let rec = |r: Record| r.to_value();
        match self {
            Case::Topology(t) => json!({"case": "topology", "record": rec(t.clone().into())}),
            Case::Order(q) => json!({"case": "order", "record": rec(q.clone().into())}),
            Case::Space(s) => json!({"case": "space", "record": rec(s.clone().into())}),
            Case::Lattice(l) => json!({"case": "lattice", "record": rec(l.clone().into())}),
            Case::Relation(r) => json!({"case": "relation", "record": rec(r.clone().into())}),
            Case::TopologyZeta(t, z) => {
                json!({"case": "topology", "record": rec(t.clone().into()), "zeta": z.tag()})
            }
            Case::SpaceZeta(s, z) => {
                json!({"case": "space", "record": rec(s.clone().into()), "zeta": z.tag()})
            }
            Case::TopologyPair(a, b) => json!({
                "case": "topology-pair",
                "source": rec(a.clone().into()),
                "target": rec(b.clone().into()),
            }),
            Case::Counts(n) => json!({"case": "counts", "n": n}),
        }
    }

    pub fn from_value(v: &Value) -> Result<Case, String> {
        let case = v.get("case").and_then(Value::as_str).ok_or("missing `case`")?;
        let record = |key: &str| -> Result<Record, String> {
            Record::from_value(v.get(key).ok_or(format!("missing `{key}`"))?).map_err(|e| e.to_string())
        };
        let zeta = match v.get("zeta").and_then(Value::as_str) {
            Some(z) => Some(z.parse::<Coselection>().map_err(|e| e.to_string())?),
            None => None,
        };
        Ok(match (case, zeta) {
            ("counts", _) => Case::Counts(v.get("n").and_then(Value::as_u64).ok_or("missing `n`")? as usize),
            ("topology-pair", _) => match (record("source")?, record("target")?) {
                (Record::Topology(a), Record::Topology(b)) => Case::TopologyPair(a, b),
                _ => return Err("topology pair needs two topologies".into()),
            },
            (_, z) => match (record("record")?, z) {
                (Record::Topology(t), None) => Case::Topology(t),
                (Record::Topology(t), Some(z)) => Case::TopologyZeta(t, z),
                (Record::Qoset(q), _) => Case::Order(q),
                (Record::OrderedSpace(s), None) => Case::Space(s),
                (Record::OrderedSpace(s), Some(z)) => Case::SpaceZeta(s, z),
                (Record::Lattice(l), _) => Case::Lattice(l),
                (Record::Relation(r), _) => Case::Relation(r),
                (other, _) => return Err(format!("unexpected record kind {}", other.kind())),
            },
        })
    }
}

/// Verdict on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The statement's hypothesis does not apply.
    Vacuous,
    Fail(String),
}

impl Outcome {
    fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Fail(_) => "fail",
        }
    }
}

fn check(cond: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn outcome(r: Result<bool, String>) -> Outcome {
    match r {
        Ok(true) => Outcome::Pass,
        Ok(false) => Outcome::Vacuous,
        Err(e) => Outcome::Fail(e),
    }
}

fn wrong_case(suite: SuiteId) -> Outcome {
    Outcome::Fail(format!("case does not belong to suite {suite}"))
}

fn bundle_outcome(s: &OrderedSpace, which: Bundle) -> Outcome {
    match ospace::theorem_bundle(s, which) {
        Err(e) => Outcome::Fail(e.to_string()),
        Ok(v) if !v.hypothesis => Outcome::Vacuous,
        Ok(v) if v.agree() => Outcome::Pass,
        Ok(v) => {
            let entries: Vec<String> =
                v.labels.iter().zip(&v.values).map(|(l, b)| format!("{l}={b}")).collect();
            Outcome::Fail(format!("conditions disagree: {}", entries.join(", ")))
        }
    }
}

/// Evaluate one instance honestly.
pub fn evaluate(suite: SuiteId, case: &Case) -> Outcome {
    match (suite, case) {
        (SuiteId::Thm33Roundtrip, Case::Topology(s)) => outcome(thm33_roundtrip(s).map(|_| true)),
        (SuiteId::Thm33, Case::Topology(s)) => outcome(thm33_parts(s).map(|_| true)),
        (SuiteId::COrderCollapse, Case::Relation(r)) => outcome(c_order_collapse(r).map(|_| true)),
        (SuiteId::Lemma21, Case::TopologyZeta(s, z)) => outcome(lemma21_upper(s, *z).map(|_| true)),
        (SuiteId::Lemma21, Case::SpaceZeta(t, z)) => outcome(lemma21_patch(t, *z)),
        (SuiteId::Prop31, Case::Topology(s)) => outcome(prop31(s).map(|_| true)),
        (SuiteId::Lemma41, Case::Space(t)) => outcome(lemma41(t)),
        (SuiteId::Thm46, Case::Space(t)) => bundle_outcome(t, Bundle::Thm46),
        (SuiteId::Thm53, Case::Space(t)) => bundle_outcome(t, Bundle::Thm53),
        (SuiteId::Prop55, Case::Topology(s)) => outcome(prop55(s).map(|_| true)),
        (SuiteId::Lemma61, Case::Space(t)) => outcome(lemma61(t).map(|_| true)),
        (SuiteId::Thm62, Case::Order(p)) => outcome(thm62_lawson(p).map(|_| true)),
        (SuiteId::Thm62, Case::Space(t)) => bundle_outcome(t, Bundle::Thm62),
        (SuiteId::Thm72, Case::Space(t)) => bundle_outcome(t, Bundle::Thm72),
        (SuiteId::Prop74, Case::Space(t)) => bundle_outcome(t, Bundle::Prop74),
        (SuiteId::Cor48, Case::TopologyPair(a, b)) => outcome(cor48(a, b).map(|_| true)),
        (SuiteId::Thm84, Case::Topology(s)) => outcome(thm84(s).map(|_| true)),
        (SuiteId::Prop91, Case::Topology(s)) => outcome(prop91(s).map(|_| true)),
        (SuiteId::Thm93, Case::Topology(s)) => outcome(thm93(s).map(|_| true)),
        (SuiteId::LatticeLaws, Case::Lattice(l)) => outcome(lattice_laws(l).map(|_| true)),
        (SuiteId::CountCrosscheck, Case::Counts(n)) => outcome(count_equality(*n).map(|_| true)),
        (SuiteId::CountCrosscheck, Case::Order(q)) => outcome(order_to_topology(q).map(|_| true)),
        (SuiteId::CountCrosscheck, Case::Topology(t)) => outcome(topology_to_order(t).map(|_| true)),
        (suite, _) => wrong_case(suite),
    }
}

/// Extra data reported for instances worth highlighting even though they pass.
fn flag(suite: SuiteId, case: &Case) -> Option<Value> {
    match (suite, case) {
        (SuiteId::LatticeLaws, Case::Lattice(l)) => {
            let verdicts: Vec<(LatticeLaw, latid::LawVerdict)> = LatticeLaw::ALL
                .into_iter()
                .filter_map(|law| latid::check_law_direct(l, law).ok().map(|v| (law, v)))
                .collect();
            let failing: serde_json::Map<String, Value> = verdicts
                .iter()
                .filter(|(_, v)| !v.holds)
                .map(|(law, v)| (law.tag().to_string(), json!(v.witness)))
                .collect();
            (!failing.is_empty()).then(|| json!({"violated": failing}))
        }
        _ => None,
    }
}

fn thm33_roundtrip(s: &Topology) -> Result<(), String> {
    let r = topoderive::interior_relation(s);
    let c = CQuasiOrder::new(r.clone()).map_err(|e| format!("interior relation rejected: {e}"))?;
    check(cord::topology_of(&c) == *s, || "topology of the interior relation differs".into())?;
    check(topoderive::alexandroff(&topoderive::specialization(s)) == *s, || {
        "Alexandroff topology of the specialization differs".into()
    })?;
    check(c.lower_quasi_order() == topoderive::specialization(s), || {
        "lower quasi-order of the interior relation is not the specialization".into()
    })?;
    check(topoderive::interior_relation(&cord::topology_of(&c)) == r, || {
        "interior relation of the generated topology differs".into()
    })
}

fn thm33_parts(s: &Topology) -> Result<(), String> {
    let r = topoderive::interior_relation(s);
    let c = CQuasiOrder::new(r.clone()).map_err(|e| e.to_string())?;
    let spec = topoderive::specialization(s);
    let lowers = spec.lower_sets();
    let closeds = s.closeds();
    for &a in &closeds {
        let ra = r.preimage(a);
        check(spec.is_lower(ra) && s.closure(ra) == a, || format!("R{a} is not a lower set with closure {a}"))?;
        if let Some(&y) = lowers.iter().find(|&&y| s.closure(y) == a && !ra.is_subset(y)) {
            return Err(format!("lower set {y} has closure {a} but misses part of R{a}"));
        }
    }
    let rounded = cord::rounded_sets(&c);
    check_closure_iso(s, &rounded, &closeds, "rounded sets")?;

    let irreducible = topoderive::irreducible_closed(s);
    let mut directed_closures: Vec<PointSet> =
        spec.directed_subsets().into_iter().map(|d| s.closure(d)).collect();
    directed_closures.sort_unstable();
    directed_closures.dedup();
    check(irreducible == directed_closures, || {
        format!("irreducible closed sets {irreducible:?} differ from directed closures {directed_closures:?}")
    })?;
    let ideals = spec.ideals();
    for &a in &irreducible {
        let ra = r.preimage(a);
        check(spec.is_directed(ra) && spec.is_lower(ra), || format!("R{a} is not an ideal"))?;
        if let Some(&i) = ideals.iter().find(|&&i| s.closure(i) == a && !ra.is_subset(i)) {
            return Err(format!("ideal {i} has closure {a} but misses part of R{a}"));
        }
    }
    let completion = cord::rounded_ideal_completion(&c).map_err(|e| e.to_string())?;
    check_closure_iso(s, &completion.ideals, &irreducible, "rounded ideals")?;

    check(topoderive::scott(&spec).is_coarser_than(s), || "an open Scott set is not open".into())?;
    let cocompact = topoderive::cocompact(s);
    let dual = spec.dual();
    check(cocompact == topoderive::weak_upper(&dual), || "cocompact topology is not the weak lower topology".into())?;
    check(cocompact == topoderive::alexandroff(&dual), || "cocompact topology is not the lower Alexandroff topology".into())?;
    check(topoderive::scott(&spec) == topoderive::alexandroff(&spec), || "Scott and Alexandroff topologies differ".into())?;
    check(s.join(&cocompact) == *topoderive::patch(s, Coselection::Upsilon).topology(), || {
        "patch topology differs from the weak patch topology".into()
    })
}

/// Closure maps `from` bijectively onto `onto`, preserving and reflecting inclusion.
fn check_closure_iso(s: &Topology, from: &[PointSet], onto: &[PointSet], what: &str) -> Result<(), String> {
    let mut image: Vec<PointSet> = from.iter().map(|&y| s.closure(y)).collect();
    let order_ok = from.iter().enumerate().all(|(i, &a)| {
        from.iter().enumerate().all(|(j, &b)| a.is_subset(b) == image[i].is_subset(image[j]))
    });
    image.sort_unstable();
    let mut target = onto.to_vec();
    target.sort_unstable();
    check(image == target && order_ok, || format!("closure is not an isomorphism on {what}"))
}

fn c_order_collapse(r: &BinaryRelation) -> Result<(), String> {
    let valid = CQuasiOrder::new(r.clone());
    let qoset = r.is_reflexive() && r.is_transitive();
    check(valid.is_ok() == qoset, || {
        format!("C-quasi-order validity {} but quasi-order {}", valid.is_ok(), qoset)
    })?;
    if let Ok(c) = valid {
        check(topoderive::interior_relation(&cord::topology_of(&c)) == *r, || {
            "interior relation of O_R differs from R".into()
        })?;
    }
    Ok(())
}

fn lemma21_upper(s: &Topology, zeta: Coselection) -> Result<(), String> {
    let p = topoderive::patch(s, zeta);
    check(topoderive::upper_space(&p) == *s, || format!("upper space of the {zeta}-patch differs"))?;
    check(*p.qoset() == topoderive::specialization(s), || "patch order is not the specialization".into())
}

fn lemma21_patch(t: &OrderedSpace, zeta: Coselection) -> Result<bool, String> {
    let applies = ospace::convexity_profile(t).zeta_convex(zeta) && ospace::separation_profile(t).semi_qospace;
    if !applies {
        return Ok(false);
    }
    check(topoderive::patch(&topoderive::upper_space(t), zeta) == *t, || {
        format!("{zeta}-patch of the upper space differs")
    })?;
    Ok(true)
}

fn prop31(s: &Topology) -> Result<(), String> {
    let p = cord::core_space_profile(s).map_err(|e| e.to_string())?;
    let flags = p.flags();
    match flags.iter().position(|f| !f) {
        None => Ok(()),
        Some(i) => Err(format!("condition {} fails", cord::CoreSpaceProfile::LABELS[i])),
    }
}

fn lemma41(t: &OrderedSpace) -> Result<bool, String> {
    let p = ospace::full_profile(t);
    if !p.separation.semi_qospace {
        return Ok(false);
    }
    let cs = p.stability.core_stable;
    let upper = topoderive::upper_space(t);
    let upper_core = cord::core_space_profile(&upper).map_err(|e| e.to_string())?.core_space
        && topoderive::specialization(&upper) == *t.qoset();
    check(cs == upper_core, || format!("core-stable={cs} but upper core space={upper_core}"))?;
    let parts = p.separation.upper_regular && p.web.locally_filtered && p.stability.up_stable && p.stability.d_stable;
    check(cs == parts, || format!("core-stable={cs} but c1-c4={parts}"))?;
    Ok(true)
}

fn prop55(s: &Topology) -> Result<(), String> {
    let q = topoderive::quasi_uniformity(s).map_err(|e| e.to_string())?;
    let spec = topoderive::specialization(s);
    check(topoderive::tau(&q) == *s, || "tau(Q) differs from the topology".into())?;
    check(topoderive::tau_inverse(&q) == topoderive::weak_upper(&spec.dual()), || {
        "tau of the inverse differs from the weak lower topology".into()
    })?;
    check(topoderive::tau_star(&q) == *topoderive::patch(s, Coselection::Upsilon).topology(), || {
        "tau of the symmetrization differs from the weak patch topology".into()
    })
}

fn lemma61(t: &OrderedSpace) -> Result<(), String> {
    let q = t.qoset();
    let n = t.size();
    let p = ospace::stability_profile(t);
    let upper = topoderive::upper_space(t);
    let int_up: Vec<PointSet> = (0..n).map(|x| upper.interior(q.up(x))).collect();
    let directed = (0..n).all(|y| q.is_directed((0..n).filter(|&x| int_up[x].contains(y)).collect()));
    check(p.wedge_stable == directed, || {
        format!("wedge-stable={} but sets Ry directed={directed}", p.wedge_stable)
    })?;
    check(p.diamond_stable == (p.vee_stable && p.wedge_stable), || {
        "diamond stability differs from vee and wedge stability".into()
    })?;
    check(!q.is_join_semilattice_with_bottom() || p.wedge_stable, || {
        "join-semilattice with bottom is not wedge-stable".into()
    })
}

fn thm62_lawson(p: &Qoset) -> Result<(), String> {
    let s = OrderedSpace::new(p.clone(), topoderive::lawson(p)).map_err(|e| e.to_string())?;
    let v = ospace::theorem_bundle(&s, Bundle::Thm62).map_err(|e| e.to_string())?;
    match v.values.iter().position(|b| !b) {
        None => Ok(()),
        Some(i) => Err(format!("Lawson space fails {}", v.labels[i])),
    }
}

fn cor48(a: &Topology, b: &Topology) -> Result<(), String> {
    let (n, m) = (a.size(), b.size());
    let (ca, cb) = (MapContext::of_topology(a), MapContext::of_topology(b));
    let (qa, qb) = (topoderive::specialization(a), topoderive::specialization(b));
    for code in 0..m.pow(n as u32) {
        let values: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
        let f = SpaceMap::new(n, m, values).map_err(|e| e.to_string())?;
        let p = morphcat::map_profile(&f, &ca, &cb).map_err(|e| e.to_string())?;
        check(p.consistent(), || format!("map {:?} is core continuous but not proper", f.values()))?;
        if p.isotone == Some(true) {
            let adjoint = morphcat::lower_adjoint(&f, &qa, &qb).map_err(|e| e.to_string())?;
            check(adjoint.is_some() == (p.residual == Some(true)), || {
                format!("map {:?}: lower adjoint exists={} but residual={:?}", f.values(), adjoint.is_some(), p.residual)
            })?;
        }
    }
    Ok(())
}

fn thm84(s: &Topology) -> Result<(), String> {
    let base = Representation::T0CoreSpace(s.clone());
    for a in RepKind::ALL {
        let ra = morphcat::convert(&base, a).map_err(|e| format!("to {a}: {e}"))?;
        morphcat::validate_representation(&ra).map_err(|e| format!("{a} invalid: {e}"))?;
        for b in RepKind::ALL {
            let rb = morphcat::convert(&ra, b).map_err(|e| format!("{a} to {b}: {e}"))?;
            let back = morphcat::convert(&rb, a).map_err(|e| format!("{b} to {a}: {e}"))?;
            check(morphcat::representations_isomorphic(&back, &ra), || format!("{a} -> {b} -> {a} is not isomorphic"))?;
        }
    }
    if let Representation::BasedDomain { order, .. } = morphcat::convert(&base, RepKind::BasedDomain).map_err(|e| e.to_string())? {
        for b in order.carrier().subsets() {
            let rep = Representation::BasedDomain { order: order.clone(), basis: b };
            let valid = morphcat::validate_representation(&rep).is_ok();
            check(valid == (b == order.full()), || format!("basis {b} validity {valid}"))?;
        }
    }
    Ok(())
}

fn prop91(s: &Topology) -> Result<(), String> {
    for b in s.carrier().subsets() {
        let c = cord::core_basis_conditions(s, b);
        check(c.iter().all(|&x| x == c[0]), || format!("conditions disagree on {b}: {c:?}"))?;
    }
    Ok(())
}

fn thm93(s: &Topology) -> Result<(), String> {
    let bundle = cord::cardinal_invariants(s).map_err(|e| e.to_string())?;
    let classes = topoderive::specialization(s).class_count();
    check(bundle.all_equal() && bundle.c == classes, || {
        format!("invariants {:?}, specialization classes {classes}", bundle.values())
    })?;
    check(bundle.core_basis_conditions_agree, || "core-basis conditions disagree on the cofinal witness".into())
}

const DISTRIBUTIVE_FAMILY: [LatticeLaw; 6] = [
    LatticeLaw::Frame,
    LatticeLaw::Coframe,
    LatticeLaw::Distributive,
    LatticeLaw::CompletelyDistributive,
    LatticeLaw::WideFrame,
    LatticeLaw::WideCoframe,
];

fn lattice_laws(l: &Lattice) -> Result<(), String> {
    let direct = |law| latid::check_law_direct(l, law).map_err(|e| e.to_string());
    let values: Vec<bool> = DISTRIBUTIVE_FAMILY
        .into_iter()
        .map(|law| direct(law).map(|v| v.holds))
        .collect::<Result<_, _>>()?;
    check(values.iter().all(|&v| v == values[0]), || {
        let entries: Vec<String> =
            DISTRIBUTIVE_FAMILY.iter().zip(&values).map(|(l, v)| format!("{l}={v}")).collect();
        format!("distributivity laws disagree: {}", entries.join(", "))
    })?;
    for law in [LatticeLaw::MeetContinuous, LatticeLaw::ContinuousLattice] {
        check(direct(law)?.holds, || format!("{law} fails"))?;
    }
    if l.size() <= 5 {
        let raney = latid::check_law(l, LatticeLaw::CompletelyDistributive).holds;
        check(raney == values[3], || "superway test disagrees with the direct scan".into())?;
    }
    if values[2] {
        let (w, wd) = (latid::min_join_dense(l), latid::min_join_dense(&l.dual()));
        check(w.weight == wd.weight, || format!("weight {} but dual weight {}", w.weight, wd.weight))?;
        check(latid::min_join_dense_search(l).weight == w.weight, || "searched weight differs".into())?;
    }
    Ok(())
}

fn count_equality(n: usize) -> Result<(), String> {
    let (q, t) = (enumerate::qosets(n).len(), enumerate::topologies(n).len());
    check(q == t, || format!("{q} quasi-orders but {t} topologies"))
}

fn order_to_topology(q: &Qoset) -> Result<(), String> {
    let t = topoderive::alexandroff(q);
    Topology::validate(q.size(), t.opens()).map_err(|e| e.to_string())?;
    check(topoderive::specialization(&t) == *q, || "specialization of the upper-set topology differs".into())
}

fn topology_to_order(t: &Topology) -> Result<(), String> {
    check(topoderive::alexandroff(&topoderive::specialization(t)) == *t, || {
        "upper-set topology of the specialization differs".into()
    })
}

/// A random-access list of cases.
pub struct Stream {
    len: usize,
    get: Box<dyn Fn(usize) -> Case + Send + Sync>,
}

impl Stream {
    fn from_vec(items: Vec<Case>) -> Self {
        Stream { len: items.len(), get: Box::new(move |i| items[i].clone()) }
    }

    fn product(p: ProductStream, wrap: fn(OrderedSpace) -> Case) -> Self {
        Stream { len: p.len(), get: Box::new(move |i| wrap(p.get(i))) }
    }

    fn product_zeta(p: ProductStream) -> Self {
        Stream {
            len: p.len() * 3,
            get: Box::new(move |i| Case::SpaceZeta(p.get(i / 3), Coselection::ALL[i % 3])),
        }
    }

    fn concat(parts: Vec<Stream>) -> Self {
        let offsets: Vec<usize> = parts
            .iter()
            .scan(0, |acc, p| {
                let start = *acc;
                *acc += p.len;
                Some(start)
            })
            .collect();
        let len = parts.iter().map(|p| p.len).sum();
        Stream {
            len,
            get: Box::new(move |i| {
                let k = offsets.partition_point(|&o| o <= i) - 1;
                (parts[k].get)(i - offsets[k])
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Case {
        (self.get)(i)
    }
}

/// Every relation on `n` points, ascending in the tuple of rows.
fn relations(n: usize) -> Vec<Case> {
    let bits = n * n;
    (0..1u64 << bits)
        .map(|code| {
            let rows: Vec<PointSet> = (0..n)
                .map(|x| PointSet::from_bits((code >> (n * (n - 1 - x)) & ((1 << n) - 1)) as u16))
                .collect();
            Case::Relation(BinaryRelation::from_rows(n, rows))
        })
        .collect()
}

fn topology_cases(n: usize) -> Vec<Case> {
    enumerate::topologies(n).into_iter().map(Case::Topology).collect()
}

/// The instance stream of a suite at size `n`.
pub fn stream(suite: SuiteId, n: usize) -> Stream {
    match suite {
        SuiteId::Thm33Roundtrip
        | SuiteId::Thm33
        | SuiteId::Prop31
        | SuiteId::Prop55
        | SuiteId::Prop91
        | SuiteId::Thm93 => Stream::from_vec(topology_cases(n)),
        SuiteId::COrderCollapse => Stream::from_vec(relations(n)),
        SuiteId::Lemma21 => {
            let tz = enumerate::topologies(n)
                .into_iter()
                .flat_map(|t| Coselection::ALL.map(|z| Case::TopologyZeta(t.clone(), z)))
                .collect();
            Stream::concat(vec![Stream::from_vec(tz), Stream::product_zeta(enumerate::ordered_spaces(n))])
        }
        SuiteId::Lemma41 | SuiteId::Thm46 | SuiteId::Thm53 | SuiteId::Lemma61 => {
            Stream::product(enumerate::ordered_spaces(n), Case::Space)
        }
        SuiteId::Thm62 => {
            let lawson = Stream::from_vec(enumerate::partial_orders(n).into_iter().map(Case::Order).collect());
            if n <= 3 {
                Stream::concat(vec![lawson, Stream::product(enumerate::ordered_spaces(n), Case::Space)])
            } else {
                lawson
            }
        }
        SuiteId::Thm72 | SuiteId::Prop74 => {
            Stream::product(enumerate::semilattice_ordered_spaces(n), Case::Space)
        }
        SuiteId::Cor48 => {
            let ts = enumerate::topologies(n);
            let pairs = ts
                .iter()
                .flat_map(|a| ts.iter().map(move |b| Case::TopologyPair(a.clone(), b.clone())))
                .collect();
            Stream::from_vec(pairs)
        }
        SuiteId::Thm84 => {
            Stream::from_vec(enumerate::t0_topologies(n).into_iter().map(Case::Topology).collect())
        }
        SuiteId::LatticeLaws => {
            Stream::from_vec(enumerate::lattices_unlabeled(n).into_iter().map(Case::Lattice).collect())
        }
        SuiteId::CountCrosscheck => {
            let mut cases = vec![Case::Counts(n)];
            cases.extend(enumerate::qosets(n).into_iter().map(Case::Order));
            cases.extend(topology_cases(n));
            Stream::from_vec(cases)
        }
    }
}

/// Whether the broken variant seeded with `seed` flips the verdict at `index`.
///
/// The decision depends only on the seed and the global index, so any split of the
/// stream across workers sees the same faults.
pub fn fault_hits(seed: u64, index: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng.gen_ratio(1, 8)
}

/// The verdict of the suite's predicate, or of its broken variant when `fault` is set.
pub fn evaluate_at(suite: SuiteId, case: &Case, index: usize, fault: Option<u64>) -> Outcome {
    let honest = evaluate(suite, case);
    match fault {
        Some(seed) if fault_hits(seed, index) => match honest {
            Outcome::Fail(_) => Outcome::Pass,
            _ => Outcome::Fail(format!("injected fault (seed {seed})")),
        },
        _ => honest,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Position in the full lexicographic stream.
    pub index: usize,
    pub case: Value,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flagged {
    pub index: usize,
    pub case: Value,
    pub note: Value,
}

/// Aggregate result of one suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub record: &'static str,
    pub suite: String,
    pub n: usize,
    /// Size of the full stream.
    pub instances: usize,
    pub evaluated: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub failed: usize,
    pub first_counterexample: Option<Counterexample>,
    pub flagged: Vec<Flagged>,
    pub sample: Option<SampleSpec>,
    pub fault_seed: Option<u64>,
    pub tool_version: &'static str,
    pub wall_time_ms: u64,
    pub determinism_hash: String,
}

impl Report {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// SHA-256 of the report with its timing and hash fields blanked.
    pub fn compute_hash(&self) -> String {
        let mut stable = self.clone();
        stable.wall_time_ms = 0;
        stable.determinism_hash = String::new();
        hex::encode(Sha256::digest(stable.to_line().as_bytes()))
    }

    pub fn passed_all(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictLine {
    pub record: &'static str,
    pub index: usize,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub report: Report,
    /// One line per evaluated instance, in stream order; empty unless verbose.
    pub verdicts: Vec<VerdictLine>,
}

/// Flagged instances kept in a report.
const FLAG_LIMIT: usize = 16;

#[derive(Default)]
struct Tally {
    passed: usize,
    vacuous: usize,
    failed: usize,
    first: Option<(usize, String)>,
    flagged: Vec<(usize, Value)>,
}

impl Tally {
    fn one(index: usize, outcome: &Outcome, flag: Option<Value>) -> Self {
        let mut t = Tally::default();
        match outcome {
            Outcome::Pass => t.passed = 1,
            Outcome::Vacuous => t.vacuous = 1,
            Outcome::Fail(d) => {
                t.failed = 1;
                t.first = Some((index, d.clone()));
            }
        }
        if let Some(f) = flag {
            t.flagged.push((index, f));
        }
        t
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.vacuous += other.vacuous;
        self.failed += other.failed;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self.flagged.extend(other.flagged);
        self.flagged.sort_by_key(|(i, _)| *i);
        self.flagged.truncate(FLAG_LIMIT);
        self
    }
}

pub fn validate_spec(spec: &SuiteSpec) -> Result<(), SuiteError> {
    let cap = spec.suite.cap();
    if spec.n == 0 || spec.n > cap {
        return Err(SuiteError::BoundTooLarge { suite: spec.suite, n: spec.n, cap });
    }
    if spec.suite.uses_product() && spec.n >= 5 && spec.sample.is_none() && !spec.exhaustive {
        let p = enumerate::partial_orders(spec.n).len();
        let t = enumerate::topologies(spec.n).len();
        return Err(SuiteError::NeedsSampleOrExhaustive { suite: spec.suite, n: spec.n, instances: p * t });
    }
    Ok(())
}

pub fn run_suite(spec: &SuiteSpec) -> Result<SuiteRun, SuiteError> {
    validate_spec(spec)?;
    let started = Instant::now();
    let stream = stream(spec.suite, spec.n);
    let indices: Vec<usize> = match spec.sample {
        Some(s) if s.size < stream.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
            let mut v = sample(&mut rng, stream.len(), s.size).into_vec();
            v.sort_unstable();
            v
        }
        _ => (0..stream.len()).collect(),
    };
    let suite = spec.suite;
    let eval = |i: usize| -> (Outcome, Option<Value>) {
        let case = stream.get(i);
        (evaluate_at(suite, &case, i, spec.fault), flag(suite, &case))
    };
    let work = || -> (Tally, Vec<VerdictLine>) {
        if spec.verbose {
            let results: Vec<(usize, Outcome, Option<Value>)> = indices
                .par_iter()
                .map(|&i| {
                    let (o, f) = eval(i);
                    (i, o, f)
                })
                .collect();
            let lines = results
                .iter()
                .map(|(i, o, _)| VerdictLine {
                    record: "verdict",
                    index: *i,
                    outcome: o.label(),
                    detail: match o {
                        Outcome::Fail(d) => Some(d.clone()),
                        _ => None,
                    },
                })
                .collect();
            let tally = results
                .into_iter()
                .fold(Tally::default(), |acc, (i, o, f)| acc.merge(Tally::one(i, &o, f)));
            (tally, lines)
        } else {
            let tally = indices
                .par_iter()
                .map(|&i| {
                    let (o, f) = eval(i);
                    Tally::one(i, &o, f)
                })
                .reduce(Tally::default, Tally::merge);
            (tally, Vec::new())
        }
    };
    let (tally, verdicts) = match spec.workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| SuiteError::Workers(e.to_string()))?
            .install(work),
        None => work(),
    };
    let mut report = Report {
        record: "report",
        suite: suite.tag().to_string(),
        n: spec.n,
        instances: stream.len(),
        evaluated: indices.len(),
        passed: tally.passed,
        vacuous: tally.vacuous,
        failed: tally.failed,
        first_counterexample: tally.first.map(|(index, detail)| Counterexample {
            index,
            case: stream.get(index).to_value(),
            detail,
        }),
        flagged: tally
            .flagged
            .into_iter()
            .map(|(index, note)| Flagged { index, case: stream.get(index).to_value(), note })
            .collect(),
        sample: spec.sample,
        fault_seed: spec.fault,
        tool_version: env!("CARGO_PKG_VERSION"),
        wall_time_ms: 0,
        determinism_hash: String::new(),
    };
    report.determinism_hash = report.compute_hash();
    report.wall_time_ms = started.elapsed().as_millis() as u64;
    Ok(SuiteRun { report, verdicts })
}

/// Re-decode a report's counterexample and evaluate it standalone.
///
/// Returns `None` when the report has no counterexample or names an unknown suite.
pub fn replay(report: &Report) -> Option<Result<Outcome, String>> {
    let cx = report.first_counterexample.as_ref()?;
    let suite: SuiteId = report.suite.parse().ok()?;
    Some(Case::from_value(&cx.case).map(|case| evaluate_at(suite, &case, cx.index, report.fault_seed)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_roundtrip() {
        for s in SuiteId::ALL {
            assert_eq!(s.tag().parse::<SuiteId>().unwrap(), s);
        }
        assert!("thm-0".parse::<SuiteId>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in SuiteId::ALL {
            for n in 1..=2 {
                let run = run_suite(&SuiteSpec::new(suite, n)).unwrap();
                assert_eq!(run.report.failed, 0, "{suite} n={n}: {:?}", run.report.first_counterexample);
            }
        }
    }

    #[test]
    fn roundtrip_counts() {
        let r = run_suite(&SuiteSpec::new(SuiteId::Thm33Roundtrip, 3)).unwrap().report;
        assert_eq!((r.instances, r.passed, r.failed), (29, 29, 0));
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            run_suite(&SuiteSpec::new(SuiteId::Cor48, 4)),
            Err(SuiteError::BoundTooLarge { cap: 3, .. })
        ));
        assert!(matches!(
            validate_spec(&SuiteSpec::new(SuiteId::Thm46, 5)),
            Err(SuiteError::NeedsSampleOrExhaustive { .. })
        ));
        assert!(validate_spec(&SuiteSpec::new(SuiteId::Thm46, 5).sample(1, 10)).is_ok());
    }

    #[test]
    fn faults_are_partition_independent_and_replay() {
        let spec = SuiteSpec::new(SuiteId::Thm93, 3).fault(7);
        let one = run_suite(&spec.clone().workers(1)).unwrap().report;
        let four = run_suite(&spec.workers(4)).unwrap().report;
        assert!(one.failed > 0);
        assert_eq!(one.first_counterexample, four.first_counterexample);
        assert_eq!(one.determinism_hash, four.determinism_hash);
        let expected = (0..29).find(|&i| fault_hits(7, i)).unwrap();
        assert_eq!(one.first_counterexample.as_ref().unwrap().index, expected);
        assert!(matches!(replay(&one), Some(Ok(Outcome::Fail(_)))));
    }

    #[test]
    fn lattice_laws_flag_m3_and_n5() {
        let r = run_suite(&SuiteSpec::new(SuiteId::LatticeLaws, 5)).unwrap().report;
        assert_eq!((r.instances, r.failed), (5, 0));
        assert_eq!(r.flagged.len(), 2);
    }

    #[test]
    fn verbose_lines_follow_stream_order() {
        let run = run_suite(&SuiteSpec::new(SuiteId::Prop31, 3).verbose()).unwrap();
        assert_eq!(run.verdicts.len(), 29);
        assert!(run.verdicts.windows(2).all(|w| w[0].index < w[1].index));
    }
}
