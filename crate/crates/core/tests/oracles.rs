//! Library results compared with brute-force computations written directly on bitmasks.

use ordertop::finstruct::{BinaryRelation, Lattice, OrderedSpace, PointSet, Qoset, Topology};
use ordertop::labcli::enumerate;
use ordertop::labcli::hunt::{self, HuntOutcome, HypothesisSpec};
use ordertop::labcli::{fixtures, suites};
use ordertop::{latid, topoderive};

/// Every family of subsets of an `n`-set that contains ∅ and X and is closed under ∪ and ∩.
fn oracle_topologies(n: usize) -> Vec<Vec<u16>> {
    let subsets = 1usize << n;
    let full = (subsets - 1) as u16;
    let mut out = Vec::new();
    for fam in 0u64..1 << subsets {
        let has = |s: u16| fam >> s & 1 == 1;
        if !has(0) || !has(full) {
            continue;
        }
        let members: Vec<u16> = (0..subsets as u16).filter(|&s| has(s)).collect();
        if members.iter().all(|&a| members.iter().all(|&b| has(a | b) && has(a & b))) {
            out.push(members);
        }
    }
    out
}

/// Every reflexive transitive relation on `n` points, as an adjacency matrix.
fn oracle_qosets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    for code in 0u32..1 << (n * n) {
        let r = |x: usize, y: usize| code >> (x * n + y) & 1 == 1;
        let reflexive = (0..n).all(|x| r(x, x));
        let transitive =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(r(x, y) && r(y, z)) || r(x, z))));
        if reflexive && transitive {
            out.push((0..n).map(|x| (0..n).map(|y| r(x, y)).collect()).collect());
        }
    }
    out
}

fn as_sets(bits: &[u16]) -> Vec<PointSet> {
    bits.iter().map(|&b| PointSet::from_bits(b)).collect()
}

#[test]
fn topology_and_quasi_order_counts() {
    for n in 1..=4 {
        let expected_t = oracle_topologies(n);
        let mut got: Vec<Vec<u16>> = enumerate::topologies(n)
            .iter()
            .map(|t| t.opens().iter().map(|s| s.bits()).collect())
            .collect();
        got.sort();
        let mut expected_sorted = expected_t.clone();
        expected_sorted.sort();
        assert_eq!(got, expected_sorted, "topologies on {n} points");

        let q = oracle_qosets(n);
        assert_eq!(enumerate::qosets(n).len(), q.len());
        let antisymmetric = q
            .iter()
            .filter(|m| (0..n).all(|x| (0..n).all(|y| x == y || !(m[x][y] && m[y][x]))))
            .count();
        assert_eq!(enumerate::partial_orders(n).len(), antisymmetric);
        let t0 = expected_t
            .iter()
            .filter(|fam| {
                (0..n).all(|x| (0..n).all(|y| x == y || fam.iter().any(|&o| (o >> x & 1) != (o >> y & 1))))
            })
            .count();
        assert_eq!(enumerate::t0_topologies(n).len(), t0);
    }
    let counts: Vec<usize> = (1..=4).map(|n| oracle_topologies(n).len()).collect();
    assert_eq!(counts, [1, 4, 29, 355]);
}

/// `x R y` iff `y` lies in the interior of the intersection of all opens containing `x`.
fn oracle_interior_relation(n: usize, opens: &[u16]) -> Vec<Vec<bool>> {
    let full = ((1u32 << n) - 1) as u16;
    let core = |x: usize| opens.iter().filter(|&&o| o >> x & 1 == 1).fold(full, |a, &o| a & o);
    let interior = |s: u16| opens.iter().filter(|&&o| o & !s == 0).fold(0, |a, &o| a | o);
    (0..n).map(|x| (0..n).map(|y| interior(core(x)) >> y & 1 == 1).collect()).collect()
}

#[test]
fn interior_relation_matches_definition() {
    for n in 1..=4 {
        for fam in oracle_topologies(n) {
            let t = Topology::validate(n, &as_sets(&fam)).unwrap();
            assert_eq!(topoderive::interior_relation(&t).matrix(), oracle_interior_relation(n, &fam));
        }
    }
}

#[test]
fn specialization_matches_definition() {
    for fam in oracle_topologies(3) {
        let t = Topology::validate(3, &as_sets(&fam)).unwrap();
        let q = topoderive::specialization(&t);
        for x in 0..3 {
            for y in 0..3 {
                let expected = fam.iter().all(|&o| o >> x & 1 == 0 || o >> y & 1 == 1);
                assert_eq!(q.leq(x, y), expected);
            }
        }
    }
}

#[test]
fn sierpinski_quasi_uniformity_base() {
    let q = topoderive::quasi_uniformity(&Topology::sierpinski()).unwrap();
    let everything = BinaryRelation::full(2);
    let without_10 = BinaryRelation::from_pairs(2, &[(0, 0), (0, 1), (1, 1)]);
    let mut members = q.members().to_vec();
    members.sort();
    let mut expected = vec![everything, without_10];
    expected.sort();
    assert_eq!(members, expected);
}

fn oracle_distributive(l: &Lattice) -> bool {
    let m = l.size();
    (0..m).all(|x| {
        (0..m).all(|y| (0..m).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))))
    })
}

#[test]
fn m3_and_n5_are_the_non_distributive_five_element_lattices() {
    let laws = suites::run_suite(&suites::SuiteSpec::new(suites::SuiteId::LatticeLaws, 5)).unwrap().report;
    let all = enumerate::lattices_unlabeled(5);
    let non_distributive: Vec<&Lattice> = all.iter().filter(|l| !oracle_distributive(l)).collect();
    assert_eq!(non_distributive.len(), 2);
    assert!(non_distributive.iter().any(|l| ordertop::finstruct::is_isomorphic(*l, &Lattice::m3())));
    assert!(non_distributive.iter().any(|l| ordertop::finstruct::is_isomorphic(*l, &Lattice::n5())));
    assert_eq!(laws.flagged.len(), 2);
    for l in &all {
        assert_eq!(latid::check_law(l, latid::LatticeLaw::Distributive).holds, oracle_distributive(l));
    }
}

#[test]
fn ex33_truncation_follows_the_order_rule() {
    // x ≤ y iff x = y, x = b_0, y = ⊤, or x = b_i, y = b_j with i < j.
    let k = 3;
    let (a, top) = (k, k + 1);
    let leq = |x: usize, y: usize| x == y || x == 0 || y == top || (x < k && y < k && x < y);
    let f = fixtures::fixture("ex33-trunc-3").unwrap();
    let ordertop::finstruct::Record::Lattice(l) = &f.record else { panic!("not a lattice") };
    assert_eq!(l.size(), 5);
    for x in 0..5 {
        for y in 0..5 {
            assert_eq!(l.leq(x, y), leq(x, y), "({x}, {y})");
        }
    }
    assert!(!l.leq(a, 1) && l.leq(a, top));
    assert!(f.banner().is_some());
}

fn oracle_semi_qospace(q: &Qoset, opens: &[u16], n: usize) -> bool {
    let full = ((1u32 << n) - 1) as u16;
    let closed = |s: u16| opens.contains(&(full & !s));
    (0..n).all(|x| closed(q.up(x).bits()) && closed(q.down(x).bits()))
}

fn oracle_up_stable(q: &Qoset, opens: &[u16]) -> bool {
    opens.iter().all(|&o| opens.contains(&q.up_closure(PointSet::from_bits(o)).bits()))
}

#[test]
fn semi_qospaces_on_three_points_are_up_stable() {
    let mut searched = 0;
    let mut found = None;
    'outer: for n in 1..=3 {
        for q in enumerate::partial_orders(n) {
            for fam in {
                let mut f = oracle_topologies(n);
                f.sort();
                f
            } {
                searched += 1;
                if oracle_semi_qospace(&q, &fam, n) && !oracle_up_stable(&q, &fam) {
                    found = Some((q.clone(), fam));
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(found, None);
    assert_eq!(searched, 564);
    let out = hunt::hunt(&HypothesisSpec::new(["semi-qospace"], "up-stable", 3)).unwrap();
    assert_eq!(out, HuntOutcome::Exhausted { kind: "ordered-space".into(), max_n: 3, searched: 564 });
}

#[test]
fn hunt_returns_the_first_hit_in_stream_order() {
    let h = HypothesisSpec::new(["semi-qospace"], "pospace", 3);
    let expected = (1..=3).find_map(|n| {
        let stream = enumerate::ordered_spaces(n);
        (0..stream.len()).find(|&i| {
            let s: OrderedSpace = stream.get(i);
            let p = ordertop::ospace::separation_profile(&s);
            p.semi_qospace && !p.pospace
        })
        .map(|i| (n, i))
    });
    match (hunt::hunt(&h).unwrap(), expected) {
        (HuntOutcome::Counterexample { n, index, .. }, Some(e)) => assert_eq!((n, index), e),
        (HuntOutcome::Exhausted { .. }, None) => {}
        (got, want) => panic!("hunt gave {got:?}, scan gave {want:?}"),
    }
}

#[test]
fn unlabeled_lattice_counts_match_labelled_classes() {
    // Labelled lattices on m points split into isomorphism classes; the class count must
    // match the unlabeled enumeration.
    for m in 1..=5 {
        let labelled = enumerate::lattices(m);
        let mut reps: Vec<Lattice> = Vec::new();
        for l in labelled {
            if !reps.iter().any(|r| ordertop::finstruct::is_isomorphic(r, &l)) {
                reps.push(l);
            }
        }
        assert_eq!(reps.len(), enumerate::lattices_unlabeled(m).len(), "m = {m}");
    }
}
