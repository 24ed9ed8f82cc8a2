//! Named predicates on ordered spaces, addressable by tag.

use std::cell::OnceCell;

use thiserror::Error;

use crate::cord;
use crate::finstruct::OrderedSpace;
use crate::ospace::{self, FullProfile};
use crate::topoderive;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown predicate tag `{0}`")]
    UnknownPredicateTag(String),
}

/// An ordered space with its profile computed on first use.
pub struct Facts<'a> {
    pub space: &'a OrderedSpace,
    profile: OnceCell<FullProfile>,
}

impl<'a> Facts<'a> {
    pub fn new(space: &'a OrderedSpace) -> Self {
        Facts { space, profile: OnceCell::new() }
    }

    pub fn profile(&self) -> &FullProfile {
        self.profile.get_or_init(|| ospace::full_profile(self.space))
    }
}

#[derive(Clone, Copy)]
pub struct Predicate {
    pub tag: &'static str,
    pub description: &'static str,
    eval: fn(&Facts) -> bool,
}

impl Predicate {
    pub fn eval(&self, facts: &Facts) -> bool {
        (self.eval)(facts)
    }
}

impl std::fmt::Debug for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag)
    }
}

macro_rules! profile_flag {
    ($tag:literal, $desc:literal, $group:ident . $field:ident) => {
        Predicate { tag: $tag, description: $desc, eval: |f| f.profile().$group.$field }
    };
}

pub const PREDICATES: &[Predicate] = &[
    profile_flag!("lower-semi-qospace", "principal ideals are closed", separation.lower_semi_qospace),
    profile_flag!("upper-semi-qospace", "principal filters are closed", separation.upper_semi_qospace),
    profile_flag!("semi-qospace", "principal filters and ideals are closed", separation.semi_qospace),
    profile_flag!("qospace", "unrelated points have neighbourhoods with disjoint up- and down-closures", separation.qospace),
    profile_flag!("pospace", "antisymmetric qospace", separation.pospace),
    profile_flag!("t1-ordered", "antisymmetric semi-qospace", separation.t1_ordered),
    profile_flag!("t2-ordered", "x not below y is separated by an open upper and an open lower set", separation.t2_ordered),
    profile_flag!("upper-regular", "open upper sets are unions of interiors of closed upper sets", separation.upper_regular),
    profile_flag!("lower-regular", "open lower sets are unions of interiors of closed lower sets", separation.lower_regular),
    profile_flag!("upper-t3-ordered", "upper regular and t2-ordered", separation.upper_t3_ordered),
    profile_flag!("locally-convex", "each point has a base of convex neighbourhoods", convexity.locally_convex),
    profile_flag!("strongly-convex", "open upper and open lower sets generate the topology", convexity.strongly_convex),
    profile_flag!("hyperconvex", "upsilon-convex", convexity.hyperconvex),
    profile_flag!("sigma-convex", "sigma-convex", convexity.sigma_convex),
    profile_flag!("alpha-convex", "alpha-convex", convexity.alpha_convex),
    profile_flag!("up-stable", "up-closures of open sets are open", stability.up_stable),
    profile_flag!("d-stable", "filtered-set interior condition", stability.d_stable),
    profile_flag!("core-stable", "up-closure of an open set is the union of interiors of its cores", stability.core_stable),
    profile_flag!("vee-stable", "stable for finite unions of principal filters", stability.vee_stable),
    profile_flag!("wedge-stable", "stable for finite intersections of principal filters", stability.wedge_stable),
    profile_flag!("diamond-stable", "stable for the lattice generated by principal filters", stability.diamond_stable),
    profile_flag!("web-ordered", "each point has a base of webs", web.web_ordered),
    profile_flag!("locally-filtered", "each point has a base of filtered sets", web.locally_filtered),
    profile_flag!("sector-space", "up-stable semi-qospace with sector bases", web.sector_space),
    profile_flag!("upsilon-sector-space", "up-stable semi-qospace with upsilon-sector bases", web.upsilon_sector_space),
    profile_flag!("fan-space", "up-stable semi-qospace with fan bases", web.fan_space),
    profile_flag!("mc-ordered", "directed sets converge to their joins", web.mc_ordered),
    profile_flag!("upper-m-determined", "upper space determined by monotone nets", web.upper_m_determined),
    Predicate {
        tag: "compact",
        description: "every open cover has a finite subcover",
        eval: |f| topoderive::is_compact(f.space.topology(), f.space.topology().full()),
    },
    Predicate {
        tag: "hausdorff",
        description: "distinct points have disjoint neighbourhoods",
        eval: |f| ospace::is_hausdorff(f.space.topology()),
    },
    Predicate {
        tag: "t0",
        description: "the topology is T0",
        eval: |f| topoderive::is_t0(f.space.topology()),
    },
    Predicate {
        tag: "antisymmetric",
        description: "the order is a partial order",
        eval: |f| f.space.qoset().is_antisymmetric(),
    },
    Predicate {
        tag: "meet-semilattice",
        description: "any two points have a meet",
        eval: |f| f.space.qoset().is_meet_semilattice(),
    },
    Predicate {
        tag: "upper-core-space",
        description: "the upper space is a core space",
        eval: |f| {
            cord::core_space_profile(&topoderive::upper_space(f.space)).is_ok_and(|p| p.core_space)
        },
    },
    Predicate {
        tag: "upper-sober",
        description: "the upper space is sober",
        eval: |f| topoderive::is_sober(&topoderive::upper_space(f.space)),
    },
];

pub fn lookup(tag: &str) -> Result<&'static Predicate, RegistryError> {
    PREDICATES
        .iter()
        .find(|p| p.tag == tag)
        .ok_or_else(|| RegistryError::UnknownPredicateTag(tag.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finstruct::{Qoset, Topology};

    #[test]
    fn tags_are_unique_and_resolvable() {
        let mut tags: Vec<&str> = PREDICATES.iter().map(|p| p.tag).collect();
        tags.sort_unstable();
        let before = tags.len();
        tags.dedup();
        assert_eq!(tags.len(), before);
        assert!(lookup("fan-space").is_ok());
        assert_eq!(lookup("frobnicate").unwrap_err(), RegistryError::UnknownPredicateTag("frobnicate".into()));
    }

    #[test]
    fn evaluates_on_a_fan_space() {
        let s = OrderedSpace::new(Qoset::chain(2), Topology::discrete(2)).unwrap();
        let facts = Facts::new(&s);
        for tag in ["fan-space", "compact", "t0", "upper-core-space", "hausdorff"] {
            assert!(lookup(tag).unwrap().eval(&facts), "{tag}");
        }
    }
}
