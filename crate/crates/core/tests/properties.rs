//! Randomized invariants on spaces with up to six points.

use proptest::prelude::*;

use ordertop::cord::{self, CQuasiOrder};
use ordertop::finstruct::{is_isomorphic, Lattice, OrderedSpace, PointSet, Qoset, Record, Topology};
use ordertop::topoderive::{self, Coselection};
use ordertop::{latid, ospace};

fn topology() -> impl Strategy<Value = Topology> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(0u16..(1 << n), 0..6)
            .prop_map(move |gens| {
                let subbase: Vec<PointSet> = gens.into_iter().map(PointSet::from_bits).collect();
                Topology::generate(n, &subbase).expect("generated topologies are valid")
            })
    })
}

/// A relabelling of the points of `t` by `perm`.
fn relabel(t: &Topology, perm: &[usize]) -> Topology {
    let opens: Vec<PointSet> = t.opens().iter().map(|o| o.iter().map(|x| perm[x]).collect()).collect();
    Topology::validate(t.size(), &opens).unwrap()
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    Just((0..6).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn interior_relation_roundtrip(t in topology()) {
        let r = CQuasiOrder::new(topoderive::interior_relation(&t)).unwrap();
        prop_assert_eq!(cord::topology_of(&r), t.clone());
        prop_assert_eq!(topoderive::alexandroff(&topoderive::specialization(&t)), t);
    }

    #[test]
    fn patch_then_upper_space_is_identity(t in topology()) {
        for zeta in Coselection::ALL {
            let p = topoderive::patch(&t, zeta);
            prop_assert_eq!(topoderive::upper_space(&p), t.clone());
            prop_assert!(t.is_coarser_than(p.topology()));
        }
    }

    #[test]
    fn cocompact_is_the_lower_alexandroff_topology(t in topology()) {
        let spec = topoderive::specialization(&t);
        prop_assert_eq!(topoderive::cocompact(&t), topoderive::alexandroff(&spec.dual()));
    }

    #[test]
    fn codec_roundtrip(t in topology()) {
        let rec = Record::from(t.clone());
        prop_assert_eq!(Record::decode(&rec.encode()).unwrap(), rec);
        let q = topoderive::specialization(&t);
        let rec = Record::from(OrderedSpace::new(q, t).unwrap());
        prop_assert_eq!(Record::decode(&rec.encode()).unwrap(), rec);
    }

    #[test]
    fn relabelling_preserves_structure(t in topology(), perm in permutation()) {
        let n = t.size();
        let mut p: Vec<usize> = perm.into_iter().filter(|&x| x < n).collect();
        p.truncate(n);
        let u = relabel(&t, &p);
        prop_assert!(is_isomorphic(&t, &u));
        let q = topoderive::specialization(&t);
        let s = OrderedSpace::new(q.clone(), t.clone()).unwrap();
        let s2 = OrderedSpace::new(topoderive::specialization(&u), u.clone()).unwrap();
        prop_assert_eq!(ospace::full_profile(&s), ospace::full_profile(&s2));
        prop_assert_eq!(q.class_count(), topoderive::specialization(&u).class_count());
    }

    #[test]
    fn finite_spaces_are_core_spaces(t in topology().prop_filter("small", |t| t.size() <= 4)) {
        prop_assert!(cord::core_space_profile(&t).unwrap().all());
    }

    #[test]
    fn open_lattices_are_distributive(t in topology()) {
        let l = latid::open_lattice(&t).unwrap();
        prop_assert!(latid::check_law(&l, latid::LatticeLaw::Distributive).holds);
        prop_assert!(latid::check_law(&l, latid::LatticeLaw::CompletelyDistributive).holds);
        prop_assert_eq!(latid::min_join_dense(&l).weight, latid::min_join_dense(&l.dual()).weight);
    }

    #[test]
    fn dual_of_dual(t in topology()) {
        let q: Qoset = topoderive::specialization(&t);
        prop_assert_eq!(q.dual().dual(), q.clone());
        if let Ok(l) = Lattice::of_qoset(&q) {
            prop_assert_eq!(l.dual().dual(), l);
        }
    }
}
