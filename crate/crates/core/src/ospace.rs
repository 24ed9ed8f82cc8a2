//! Predicate profiles of quasi-ordered spaces and the equivalence bundles built from them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::cord;
use crate::finstruct::{OrderedSpace, PointSet, Qoset, Topology};
use crate::latid::{self, LatticeLaw};
use crate::topoderive::{self, Coselection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OspaceError {
    #[error("the order is not a meet-semilattice")]
    NotASemilattice,
}

/// Derived data shared by the predicates of one ordered space.
struct Ctx<'a> {
    q: &'a Qoset,
    t: &'a Topology,
    upper: Topology,
    lower: Topology,
}

impl<'a> Ctx<'a> {
    fn new(s: &'a OrderedSpace) -> Self {
        Ctx {
            q: s.qoset(),
            t: s.topology(),
            upper: topoderive::upper_space(s),
            lower: topoderive::lower_space(s),
        }
    }

    fn n(&self) -> usize {
        self.t.size()
    }

    fn subsets(&self) -> impl Iterator<Item = PointSet> {
        self.t.carrier().subsets()
    }

    /// Each point has a neighbourhood base of sets accepted by `good`.
    ///
    /// Checking inside the smallest open set around each point suffices.
    fn local_base(&self, good: impl Fn(PointSet) -> bool) -> bool {
        (0..self.n()).all(|x| {
            let hood = self.t.minimal_neighbourhood(x);
            hood.subsets()
                .any(|w| w.contains(x) && self.t.interior(w).contains(x) && good(w))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeparationProfile {
    pub lower_semi_qospace: bool,
    pub upper_semi_qospace: bool,
    pub semi_qospace: bool,
    pub qospace: bool,
    pub pospace: bool,
    pub t1_ordered: bool,
    pub t2_ordered: bool,
    pub upper_regular: bool,
    pub lower_regular: bool,
    pub upper_t3_ordered: bool,
}

pub fn separation_profile(s: &OrderedSpace) -> SeparationProfile {
    separation(&Ctx::new(s))
}

fn separation(c: &Ctx) -> SeparationProfile {
    let (q, t, n) = (c.q, c.t, c.n());
    let ordered = q.is_antisymmetric();
    let lower_semi_qospace = (0..n).all(|x| t.is_closed(q.down(x)));
    let upper_semi_qospace = (0..n).all(|x| t.is_closed(q.up(x)));
    let semi_qospace = lower_semi_qospace && upper_semi_qospace;
    let separated_pairs = |sep: &dyn Fn(usize, usize) -> bool| {
        (0..n).all(|x| (0..n).all(|y| q.leq(x, y) || sep(x, y)))
    };
    let qospace = separated_pairs(&|x, y| {
        t.opens().iter().filter(|u| u.contains(x)).any(|&u| {
            t.opens()
                .iter()
                .filter(|v| v.contains(y))
                .any(|&v| !q.up_closure(u).meets(q.down_closure(v)))
        })
    });
    let t2_ordered = ordered
        && separated_pairs(&|x, y| {
            c.upper.opens().iter().filter(|u| u.contains(x)).any(|&u| {
                c.lower.opens().iter().any(|&v| v.contains(y) && !u.meets(v))
            })
        });
    let regular = |side: &Topology, is_side: &dyn Fn(PointSet) -> bool| {
        let closed_side: Vec<PointSet> = c.subsets().filter(|&b| is_side(b) && t.is_closed(b)).collect();
        side.opens().iter().all(|&o| {
            o.iter().all(|x| {
                side.opens().iter().filter(|u| u.contains(x) && u.is_subset(o)).any(|&u| {
                    closed_side.iter().any(|&b| u.is_subset(b) && b.is_subset(o))
                })
            })
        })
    };
    let upper_regular = regular(&c.upper, &|b| q.is_upper(b));
    let lower_regular = regular(&c.lower, &|b| q.is_lower(b));
    let t1_ordered = ordered && semi_qospace;
    SeparationProfile {
        lower_semi_qospace,
        upper_semi_qospace,
        semi_qospace,
        qospace,
        pospace: ordered && qospace,
        t1_ordered,
        t2_ordered,
        upper_regular,
        lower_regular,
        upper_t3_ordered: upper_regular && t1_ordered,
    }
}

/// Distinct points have disjoint neighbourhoods.
pub fn is_hausdorff(t: &Topology) -> bool {
    let n = t.size();
    (0..n).all(|x| {
        (x + 1..n).all(|y| !t.minimal_neighbourhood(x).meets(t.minimal_neighbourhood(y)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConvexityProfile {
    pub locally_convex: bool,
    pub strongly_convex: bool,
    pub hyperconvex: bool,
    pub sigma_convex: bool,
    pub alpha_convex: bool,
}

impl ConvexityProfile {
    pub fn zeta_convex(&self, zeta: Coselection) -> bool {
        match zeta {
            Coselection::Upsilon => self.hyperconvex,
            Coselection::Sigma => self.sigma_convex,
            Coselection::Alpha => self.alpha_convex,
        }
    }
}

pub fn convexity_profile(s: &OrderedSpace) -> ConvexityProfile {
    convexity(&Ctx::new(s))
}

fn regenerates(c: &Ctx, parts: &[&Topology]) -> bool {
    let subbase: Vec<PointSet> = parts.iter().flat_map(|p| p.opens().iter().copied()).collect();
    Topology::generate(c.n(), &subbase).expect("subsets of the carrier") == *c.t
}

/// `T` is generated by `T^≤ ∪ ζ(T^≤)`, with `ζ` read off the upper space itself.
fn zeta_convex(c: &Ctx, zeta: Coselection) -> bool {
    regenerates(c, &[&c.upper, &topoderive::coselection(&c.upper, zeta)])
}

fn convexity(c: &Ctx) -> ConvexityProfile {
    let convex_opens: Vec<PointSet> = c.t.opens().iter().copied().filter(|&o| c.q.is_convex(o)).collect();
    ConvexityProfile {
        locally_convex: cord::is_base(c.t, &convex_opens),
        strongly_convex: regenerates(c, &[&c.upper, &c.lower]),
        hyperconvex: zeta_convex(c, Coselection::Upsilon),
        sigma_convex: zeta_convex(c, Coselection::Sigma),
        alpha_convex: zeta_convex(c, Coselection::Alpha),
    }
}

/// The sets `U ∖ ↑F` with `U` an open upper set and `F` finite are open and form a base;
/// `↑` is taken in the specialization order of the upper space.
pub fn hyperconvex_by_base(s: &OrderedSpace) -> bool {
    let c = Ctx::new(s);
    let spec = topoderive::specialization(&c.upper);
    let mut family = Vec::new();
    for &u in c.upper.opens() {
        for f in c.subsets() {
            family.push(u.difference(spec.up_closure(f)));
        }
    }
    family.sort_unstable();
    family.dedup();
    cord::is_base(c.t, &family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StabilityProfile {
    pub up_stable: bool,
    pub d_stable: bool,
    pub core_stable: bool,
    pub vee_stable: bool,
    pub wedge_stable: bool,
    pub diamond_stable: bool,
}

/// The families generated from the principal filters of a qoset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FilterFamily {
    /// Finite unions, including the empty one.
    Vee,
    /// Finite intersections, including the whole carrier.
    Wedge,
    /// The generated sublattice together with the empty set and the carrier.
    Diamond,
}

pub fn filter_family(q: &Qoset, which: FilterFamily) -> Vec<PointSet> {
    let mut family: Vec<PointSet> = (0..q.size()).map(|x| q.up(x)).collect();
    let (unions, intersections) = match which {
        FilterFamily::Vee => {
            family.push(PointSet::EMPTY);
            (true, false)
        }
        FilterFamily::Wedge => {
            family.push(q.full());
            (false, true)
        }
        FilterFamily::Diamond => {
            family.push(PointSet::EMPTY);
            family.push(q.full());
            (true, true)
        }
    };
    family.sort_unstable();
    family.dedup();
    loop {
        let mut next = family.clone();
        for &a in &family {
            for &b in &family {
                if unions {
                    next.push(a | b);
                }
                if intersections {
                    next.push(a & b);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() == family.len() {
            return family;
        }
        family = next;
    }
}

pub fn stability_profile(s: &OrderedSpace) -> StabilityProfile {
    stability(&Ctx::new(s))
}

/// `Y° = ⋃{(↑y)° : y ∈ Y}` for every `Y` in `family`, with `°` the interior of the upper space.
fn zeta_stable(c: &Ctx, family: &[PointSet]) -> bool {
    let int_up: Vec<PointSet> = (0..c.n()).map(|y| c.upper.interior(c.q.up(y))).collect();
    family.iter().all(|&y| {
        let joined = y.iter().fold(PointSet::EMPTY, |acc, v| acc | int_up[v]);
        c.upper.interior(y) == joined
    })
}

fn stability(c: &Ctx) -> StabilityProfile {
    let (q, t) = (c.q, c.t);
    let int_t_up: Vec<PointSet> = (0..c.n()).map(|u| t.interior(q.up(u))).collect();
    let up_stable = t.opens().iter().all(|&o| t.is_open(q.up_closure(o)));
    let core_stable = t.opens().iter().all(|&o| {
        q.up_closure(o) == o.iter().fold(PointSet::EMPTY, |acc, u| acc | int_t_up[u])
    });
    let d_stable = q.filtered_subsets().into_iter().all(|d| {
        let hull = c.lower.closure(d);
        let cover = hull.iter().fold(PointSet::EMPTY, |acc, u| acc | int_t_up[u]);
        t.interior(d).is_subset(cover)
    });
    StabilityProfile {
        up_stable,
        d_stable,
        core_stable,
        vee_stable: zeta_stable(c, &filter_family(q, FilterFamily::Vee)),
        wedge_stable: zeta_stable(c, &filter_family(q, FilterFamily::Wedge)),
        diamond_stable: zeta_stable(c, &filter_family(q, FilterFamily::Diamond)),
    }
}

/// `W` contains `x`, and for every `y ∈ W` the set `↓x ∩ ↓y` meets `W`.
pub fn is_web_around(q: &Qoset, w: PointSet, x: usize) -> bool {
    w.contains(x) && w.iter().all(|y| (q.down(x) & q.down(y)).meets(w))
}

/// Nonempty sets `↑u ∩ V` with `V` drawn from `lower_opens`, ascending.
pub fn sectors(q: &Qoset, lower_opens: &[PointSet]) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = (0..q.size())
        .flat_map(|u| lower_opens.iter().map(move |&v| q.up(u) & v))
        .filter(|s| !s.is_empty())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Nonempty sets `↑u ∖ ↑F` with `F` finite, ascending.
pub fn fans(q: &Qoset) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = (0..q.size())
        .flat_map(|u| q.carrier().subsets().map(move |f| q.up(u).difference(q.up_closure(f))))
        .filter(|s| !s.is_empty())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WebProfile {
    pub web_ordered: bool,
    pub locally_filtered: bool,
    pub sector_space: bool,
    pub upsilon_sector_space: bool,
    pub fan_space: bool,
    pub mc_ordered: bool,
    pub upper_m_determined: bool,
}

pub fn web_profile(s: &OrderedSpace) -> WebProfile {
    let c = Ctx::new(s);
    web(&c, &separation(&c), &stability(&c))
}

fn web(c: &Ctx, sep: &SeparationProfile, stab: &StabilityProfile) -> WebProfile {
    let q = c.q;
    let webs_everywhere = (0..c.n()).all(|x| {
        c.t.minimal_neighbourhood(x)
            .subsets()
            .any(|w| is_web_around(q, w, x) && c.t.interior(w).contains(x))
    });
    let base_of = |family: &[PointSet]| c.local_base(|w| family.binary_search(&w).is_ok());
    let upsilon_lower = topoderive::coselection(&c.upper, Coselection::Upsilon);
    let stable_semi = stab.up_stable && sep.semi_qospace;
    WebProfile {
        web_ordered: stab.up_stable && webs_everywhere,
        locally_filtered: c.local_base(|w| q.is_filtered(w)),
        sector_space: stable_semi && base_of(&sectors(q, c.lower.opens())),
        upsilon_sector_space: stable_semi && base_of(&sectors(q, upsilon_lower.opens())),
        fan_space: stable_semi && base_of(&fans(q)),
        mc_ordered: mc_ordered(c),
        upper_m_determined: upper_m_determined(c),
    }
}

/// Every directed set has a least upper bound `s`, and every open set around `s`
/// contains a tail `{d ∈ D : d₀ ≤ d}` of the set.
fn mc_ordered(c: &Ctx) -> bool {
    let q = c.q;
    q.directed_subsets().into_iter().all(|d| {
        q.least_upper_bound(d).is_some_and(|s| {
            c.t.opens()
                .iter()
                .filter(|u| u.contains(s))
                .all(|&u| d.iter().any(|d0| (q.up(d0) & d).is_subset(u)))
        })
    })
}

/// Every upper set meeting each directed set whose closure meets it is open.
fn upper_m_determined(c: &Ctx) -> bool {
    let directed: Vec<(PointSet, PointSet)> = c
        .q
        .directed_subsets()
        .into_iter()
        .map(|d| (d, c.t.closure(d)))
        .collect();
    c.q.upper_sets().into_iter().all(|u| {
        let qualifies = directed.iter().all(|&(d, cl)| !cl.meets(u) || d.meets(u));
        !qualifies || c.t.is_open(u)
    })
}

/// All four profiles of one ordered space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FullProfile {
    pub separation: SeparationProfile,
    pub convexity: ConvexityProfile,
    pub stability: StabilityProfile,
    pub web: WebProfile,
}

pub fn full_profile(s: &OrderedSpace) -> FullProfile {
    let c = Ctx::new(s);
    let separation = separation(&c);
    let stability = stability(&c);
    FullProfile {
        separation,
        convexity: convexity(&c),
        stability,
        web: web(&c, &separation, &stability),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bundle {
    Thm46,
    Thm53,
    Thm62,
    Thm72,
    Prop74,
}

impl Bundle {
    pub const ALL: [Bundle; 5] = [Bundle::Thm46, Bundle::Thm53, Bundle::Thm62, Bundle::Thm72, Bundle::Prop74];

    pub fn tag(self) -> &'static str {
        match self {
            Bundle::Thm46 => "thm-4.6",
            Bundle::Thm53 => "thm-5.3",
            Bundle::Thm62 => "thm-6.2",
            Bundle::Thm72 => "thm-7.2",
            Bundle::Prop74 => "prop-7.4",
        }
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for Bundle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bundle::ALL
            .into_iter()
            .find(|b| b.tag() == s)
            .ok_or_else(|| format!("unknown theorem bundle `{s}`"))
    }
}

/// Independently evaluated conditions of one equivalence statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleVerdict {
    /// Whether the standing hypothesis of the statement holds for this instance.
    pub hypothesis: bool,
    pub labels: Vec<&'static str>,
    pub values: Vec<bool>,
    /// Index ranges of conditions asserted to be equivalent to each other.
    pub groups: Vec<std::ops::Range<usize>>,
}

impl BundleVerdict {
    /// Every group is constant, or the hypothesis fails.
    pub fn agree(&self) -> bool {
        !self.hypothesis
            || self
                .groups
                .iter()
                .all(|g| self.values[g.clone()].iter().all(|&v| v == self.values[g.start]))
    }

    pub fn value(&self, label: &str) -> Option<bool> {
        self.labels.iter().position(|&l| l == label).map(|i| self.values[i])
    }
}

fn single_group(hypothesis: bool, entries: Vec<(&'static str, bool)>) -> BundleVerdict {
    let len = entries.len();
    let (labels, values) = entries.into_iter().unzip();
    BundleVerdict { hypothesis, labels, values, groups: vec![0..len] }
}

/// The upper space is a core space whose specialization is the given order, the lower
/// space has the dual specialization, and together they generate the topology.
pub fn is_patch_of_core_space(s: &OrderedSpace) -> bool {
    let c = Ctx::new(s);
    cord::core_space_profile(&c.upper).is_ok_and(|p| p.core_space)
        && topoderive::specialization(&c.upper) == *c.q
        && topoderive::specialization(&c.lower) == c.q.dual()
        && c.upper.join(&c.lower) == *c.t
}

/// `T` is the `ζ`-patch space of its upper space.
pub fn is_own_patch(s: &OrderedSpace, zeta: Coselection) -> bool {
    topoderive::patch(&topoderive::upper_space(s), zeta) == *s
}

fn is_lawson_space(s: &OrderedSpace) -> bool {
    topoderive::lawson(s.qoset()) == *s.topology()
}

fn is_domain(q: &Qoset) -> bool {
    q.is_antisymmetric() && q.is_up_complete()
}

fn require_semilattice(q: &Qoset) -> Result<(), OspaceError> {
    if q.is_meet_semilattice() {
        Ok(())
    } else {
        Err(OspaceError::NotASemilattice)
    }
}

pub fn theorem_bundle(s: &OrderedSpace, which: Bundle) -> Result<BundleVerdict, OspaceError> {
    let c = Ctx::new(s);
    let sep = separation(&c);
    let conv = convexity(&c);
    let stab = stability(&c);
    let web = web(&c, &sep, &stab);
    let q = c.q;
    let upper_core = || cord::core_space_profile(&c.upper).is_ok_and(|p| p.core_space);
    let c1_to_c4 = sep.upper_regular && web.locally_filtered && stab.up_stable && stab.d_stable;
    Ok(match which {
        Bundle::Thm46 => single_group(
            true,
            vec![
                ("sector-space", web.sector_space),
                ("patch-of-core-space", is_patch_of_core_space(s)),
                (
                    "strongly-convex-core-stable-semi-qospace",
                    conv.strongly_convex && stab.core_stable && sep.semi_qospace,
                ),
                ("strongly-convex-c1-c4-qospace", conv.strongly_convex && c1_to_c4 && sep.qospace),
            ],
        ),
        Bundle::Thm53 => single_group(
            true,
            vec![
                ("fan-space", web.fan_space),
                ("upsilon-sector-space", web.upsilon_sector_space),
                ("weak-patch-of-core-space", is_own_patch(s, Coselection::Upsilon) && upper_core()),
                (
                    "hyperconvex-core-stable-semi-qospace",
                    conv.hyperconvex && stab.core_stable && sep.semi_qospace,
                ),
                ("hyperconvex-c1-c4-qospace", conv.hyperconvex && c1_to_c4 && sep.qospace),
            ],
        ),
        Bundle::Thm62 => {
            let scott_web = latid::open_lattice(&topoderive::scott(q))
                .is_ok_and(|l| latid::check_law(&l, LatticeLaw::Coframe).holds);
            let hausdorff = is_hausdorff(c.t);
            single_group(
                q.is_antisymmetric(),
                vec![
                    (
                        "lawson-space-of-continuous-domain",
                        is_domain(q) && q.is_continuous() && is_lawson_space(s),
                    ),
                    ("fan-space-sober-upper-space", web.fan_space && topoderive::is_sober(&c.upper)),
                    (
                        "lawson-space-of-meet-continuous-domain-wedge-stable-t2",
                        is_domain(q) && scott_web && is_lawson_space(s) && stab.wedge_stable && hausdorff,
                    ),
                    (
                        "hyperconvex-mc-ordered-core-stable-semi-pospace",
                        conv.hyperconvex && web.mc_ordered && stab.core_stable && sep.t1_ordered,
                    ),
                    (
                        "hyperconvex-mc-ordered-up-stable-diamond-stable-t2",
                        conv.hyperconvex && web.mc_ordered && stab.up_stable && stab.diamond_stable && hausdorff,
                    ),
                ],
            )
        }
        Bundle::Thm72 => {
            let sl = semilattice(&c)?;
            let own_weak_patch = is_own_patch(s, Coselection::Upsilon);
            let upper_web = latid::open_lattice(&c.upper)
                .is_ok_and(|l| latid::check_law(&l, LatticeLaw::Coframe).holds);
            let upper_spec = topoderive::specialization(&c.upper);
            let upper_wide_web = cord::has_local_base(&c.upper, |w| upper_spec.is_filtered(w));
            let upper_locally_compact =
                cord::has_local_base(&c.upper, |w| topoderive::is_compact(&c.upper, w));
            let s_top = sl.topological && sl.small_semilattices;
            let sc_top = sl.topological && sl.small_convex_semilattices;
            let entries = vec![
                ("w11-weak-patch-of-web-space", own_weak_patch && upper_web),
                ("w12-web-ordered", web.web_ordered),
                ("w13-semitopological", sl.semitopological),
                ("w21-weak-patch-of-wide-web-space", own_weak_patch && upper_wide_web),
                ("w22-locally-filtered-up-stable", web.locally_filtered && stab.up_stable),
                ("w23-s-topological", s_top),
                ("w23-sc-topological", sc_top),
                ("w31-weak-patch-of-core-space", own_weak_patch && upper_core()),
                ("w32-core-stable-pospace", stab.core_stable && sep.pospace),
                ("w33-s-topological-locally-compact-upper", s_top && upper_locally_compact),
                ("w33-sc-topological-locally-compact-upper", sc_top && upper_locally_compact),
            ];
            let (labels, values) = entries.into_iter().unzip();
            BundleVerdict {
                hypothesis: conv.hyperconvex && sep.t1_ordered,
                labels,
                values,
                groups: vec![0..3, 3..7, 7..11],
            }
        }
        Bundle::Prop74 => {
            require_semilattice(q)?;
            let compact = topoderive::is_compact(c.t, c.t.full());
            single_group(
                true,
                vec![
                    (
                        "compact-lawson-space-of-continuous-domain",
                        compact && is_domain(q) && q.is_continuous() && is_lawson_space(s),
                    ),
                    (
                        "locally-filtered-up-stable-compact-pospace",
                        web.locally_filtered && stab.up_stable && compact && sep.pospace,
                    ),
                ],
            )
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemilatticeProfile {
    pub compatible: bool,
    pub semitopological: bool,
    pub topological: bool,
    pub small_semilattices: bool,
    pub small_convex_semilattices: bool,
}

pub fn semilattice_profile(s: &OrderedSpace) -> Result<SemilatticeProfile, OspaceError> {
    semilattice(&Ctx::new(s))
}

fn semilattice(c: &Ctx) -> Result<SemilatticeProfile, OspaceError> {
    let (q, t, n) = (c.q, c.t, c.n());
    require_semilattice(q)?;
    let meet = |x: usize, y: usize| q.meet(x, y).expect("meet-semilattice");
    let semitopological = (0..n).all(|x| {
        t.opens().iter().all(|&o| {
            let preimage: PointSet = (0..n).filter(|&y| o.contains(meet(x, y))).collect();
            t.is_open(preimage)
        })
    });
    // The preimage of each open set must be a union of open rectangles.
    let topological = t.opens().iter().all(|&o| {
        (0..n).all(|a| {
            (0..n).filter(|&b| o.contains(meet(a, b))).all(|b| {
                t.opens().iter().filter(|u| u.contains(a)).any(|&u| {
                    t.opens()
                        .iter()
                        .filter(|v| v.contains(b))
                        .any(|&v| u.iter().all(|x| v.iter().all(|y| o.contains(meet(x, y)))))
                })
            })
        })
    });
    let subsemilattice = |w: PointSet| {
        !w.is_empty() && w.iter().all(|x| w.iter().all(|y| w.contains(meet(x, y))))
    };
    Ok(SemilatticeProfile {
        compatible: topoderive::specialization(t) == *q,
        semitopological,
        topological,
        small_semilattices: c.local_base(subsemilattice),
        small_convex_semilattices: c.local_base(|w| subsemilattice(w) && q.is_convex(w)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> PointSet {
        items.iter().copied().collect()
    }

    fn space(q: Qoset, opens: &[&[usize]]) -> OrderedSpace {
        let n = q.size();
        let family: Vec<PointSet> = opens.iter().map(|o| set(o)).collect();
        OrderedSpace::new(q, Topology::validate(n, &family).unwrap()).unwrap()
    }

    fn chain_discrete(n: usize) -> OrderedSpace {
        OrderedSpace::new(Qoset::chain(n), Topology::discrete(n)).unwrap()
    }

    fn three_chain_bad() -> OrderedSpace {
        space(Qoset::chain(3), &[&[], &[1], &[0, 1, 2]])
    }

    fn diamond() -> Qoset {
        Qoset::from_fn(4, |x, y| x == y || x == 0 || y == 3).unwrap()
    }

    #[test]
    fn separation_examples() {
        let p = separation_profile(&chain_discrete(2));
        assert!(p.pospace && p.t2_ordered && p.upper_regular);
        let p = separation_profile(&OrderedSpace::new(Qoset::chain(2), Topology::indiscrete(2)).unwrap());
        assert!(!p.lower_semi_qospace);
        let p = separation_profile(&OrderedSpace::new(Qoset::discrete(2), Topology::discrete(2)).unwrap());
        assert!(p.lower_semi_qospace && p.upper_semi_qospace && p.qospace && p.pospace);
        assert!(p.t1_ordered && p.t2_ordered && p.upper_regular && p.lower_regular && p.upper_t3_ordered);
    }

    #[test]
    fn convexity_examples() {
        assert!(convexity_profile(&chain_discrete(2)).hyperconvex);
        let odd = space(Qoset::discrete(3), &[&[], &[0, 1], &[0, 1, 2]]);
        let p = convexity_profile(&odd);
        assert!(p.strongly_convex && !p.hyperconvex);
        assert_eq!(hyperconvex_by_base(&odd), p.hyperconvex);
        let q = Qoset::from_fn(3, |x, y| x == y || x == 0).unwrap();
        let alpha = topoderive::patch(&Topology::of_upper_sets(&q), Coselection::Alpha);
        assert!(convexity_profile(&alpha).alpha_convex);
    }

    #[test]
    fn stability_examples() {
        let p = stability_profile(&three_chain_bad());
        assert!(!p.up_stable && p.d_stable);
        assert!(stability_profile(&chain_discrete(2)).core_stable);
    }

    #[test]
    fn filter_family_shapes() {
        let v = Qoset::from_fn(3, |x, y| x == y || y == 2).unwrap();
        assert_eq!(
            filter_family(&v, FilterFamily::Vee),
            vec![set(&[]), set(&[2]), set(&[0, 2]), set(&[1, 2]), set(&[0, 1, 2])]
        );
        assert_eq!(
            filter_family(&v, FilterFamily::Wedge),
            vec![set(&[2]), set(&[0, 2]), set(&[1, 2]), set(&[0, 1, 2])]
        );
        assert_eq!(filter_family(&v, FilterFamily::Diamond).len(), 5);
    }

    #[test]
    fn web_examples() {
        assert!(web_profile(&chain_discrete(2)).fan_space);
        assert!(!web_profile(&three_chain_bad()).sector_space);
    }

    #[test]
    fn bundle_examples() {
        let q = diamond();
        let lawson = OrderedSpace::new(q.clone(), topoderive::lawson(&q)).unwrap();
        assert_eq!(*lawson.topology(), Topology::discrete(4));
        let v = theorem_bundle(&lawson, Bundle::Thm62).unwrap();
        assert!(v.values.iter().all(|&b| b) && v.agree(), "{v:?}");

        let v = theorem_bundle(&three_chain_bad(), Bundle::Thm53).unwrap();
        assert!(v.values.iter().all(|&b| !b) && v.agree(), "{v:?}");

        let v = theorem_bundle(&chain_discrete(2), Bundle::Thm72).unwrap();
        assert!(v.agree(), "{v:?}");

        let v_shape =
            OrderedSpace::new(Qoset::from_fn(3, |x, y| x == y || y == 2).unwrap(), Topology::discrete(3)).unwrap();
        assert_eq!(theorem_bundle(&v_shape, Bundle::Thm72), Err(OspaceError::NotASemilattice));
    }

    #[test]
    fn semilattice_examples() {
        let p = semilattice_profile(&chain_discrete(3)).unwrap();
        assert!(p.semitopological && p.topological && p.small_semilattices && p.small_convex_semilattices);
        assert!(!p.compatible);
        let q = diamond();
        let p = semilattice_profile(&OrderedSpace::new(q.clone(), topoderive::lawson(&q)).unwrap()).unwrap();
        assert!(p.topological);
        let p = semilattice_profile(&OrderedSpace::new(Qoset::chain(2), Topology::indiscrete(2)).unwrap()).unwrap();
        assert!(!p.compatible);
    }
}
