//! Search for the first enumerated space that satisfies a list of predicates and
//! violates another.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use super::enumerate::{self, EnumerateError, Kind};
use super::registry::{self, Facts, Predicate, RegistryError};
use crate::finstruct::{OrderedSpace, Record};
use crate::topoderive;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisSpec {
    pub assume: Vec<String>,
    pub refute: String,
    /// Enumerated objects; anything other than an ordered space is lifted to one.
    pub kind: Kind,
    /// Sizes `1..=n` are searched in turn.
    pub n: usize,
}

impl HypothesisSpec {
    pub fn new<S: Into<String>>(assume: impl IntoIterator<Item = S>, refute: impl Into<String>, n: usize) -> Self {
        HypothesisSpec {
            assume: assume.into_iter().map(Into::into).collect(),
            refute: refute.into(),
            kind: Kind::OrderedSpace,
            n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HuntError {
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error(transparent)]
    Bound(#[from] EnumerateError),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "record", rename_all = "kebab-case")]
pub enum HuntOutcome {
    Counterexample {
        n: usize,
        /// Position in the size-`n` stream.
        index: usize,
        /// The enumerated object.
        instance: Value,
        /// The ordered space the predicates were evaluated on.
        space: Value,
    },
    Exhausted {
        kind: String,
        max_n: usize,
        searched: usize,
    },
}

/// The ordered space on which predicates about an enumerated object are evaluated.
///
/// Topologies carry their specialization order, quasi-orders and lattices their
/// Alexandroff and Lawson topologies respectively.
pub fn lift(record: &Record) -> Option<OrderedSpace> {
    match record {
        Record::OrderedSpace(s) => Some(s.clone()),
        Record::Topology(t) => OrderedSpace::new(topoderive::specialization(t), t.clone()).ok(),
        Record::Qoset(q) => OrderedSpace::new(q.clone(), topoderive::alexandroff(q)).ok(),
        Record::Lattice(l) => {
            let q = l.to_qoset().ok()?;
            let t = topoderive::lawson(&q);
            OrderedSpace::new(q, t).ok()
        }
        _ => None,
    }
}

fn hit(assume: &[&Predicate], refute: &Predicate, record: &Record) -> bool {
    let Some(space) = lift(record) else { return false };
    let facts = Facts::new(&space);
    assume.iter().all(|p| p.eval(&facts)) && !refute.eval(&facts)
}

pub fn hunt(h: &HypothesisSpec) -> Result<HuntOutcome, HuntError> {
    let assume: Vec<&Predicate> = h.assume.iter().map(|t| registry::lookup(t)).collect::<Result<_, _>>()?;
    let refute = registry::lookup(&h.refute)?;
    enumerate::check_bound(h.kind, h.n)?;
    let mut searched = 0;
    for n in 1..=h.n {
        let records: Vec<Record> = enumerate::enumerate(h.kind, n)?.collect();
        searched += records.len();
        let found = records.par_iter().position_first(|r| hit(&assume, refute, r));
        if let Some(index) = found {
            let record = &records[index];
            let space = lift(record).expect("hits are liftable");
            return Ok(HuntOutcome::Counterexample {
                n,
                index,
                instance: record.to_value(),
                space: Record::from(space).to_value(),
            });
        }
    }
    Ok(HuntOutcome::Exhausted { kind: h.kind.tag().to_string(), max_n: h.n, searched })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_spaces_are_compact() {
        let out = hunt(&HypothesisSpec::new(Vec::<String>::new(), "compact", 3)).unwrap();
        assert_eq!(out, HuntOutcome::Exhausted { kind: "ordered-space".into(), max_n: 3, searched: 1 + 12 + 551 });
    }

    #[test]
    fn unknown_tags_are_rejected() {
        let err = hunt(&HypothesisSpec::new(["semi-qospace", "sparkly"], "compact", 2)).unwrap_err();
        assert_eq!(err, HuntError::Registry(RegistryError::UnknownPredicateTag("sparkly".into())));
    }

    #[test]
    fn finds_the_first_non_antisymmetric_topology() {
        let mut h = HypothesisSpec::new(Vec::<String>::new(), "t0", 3);
        h.kind = Kind::Topology;
        match hunt(&h).unwrap() {
            HuntOutcome::Counterexample { n, index, .. } => {
                assert_eq!(n, 2);
                let first = enumerate::topologies(2).iter().position(|t| !topoderive::is_t0(t)).unwrap();
                assert_eq!(index, first);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
