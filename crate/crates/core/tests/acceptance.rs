//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ordertop::finstruct::{is_isomorphic, BinaryRelation, Lattice, Record, Topology};
use ordertop::labcli::enumerate;
use ordertop::labcli::suites::{self, Case, Report, SuiteId, SuiteSpec};
use ordertop::ospace::{self, Bundle};
use ordertop::topoderive;

type Check = Result<String, String>;

fn run(suite: SuiteId, n: usize) -> Result<Report, String> {
    run_spec(SuiteSpec::new(suite, n))
}

fn run_spec(spec: SuiteSpec) -> Result<Report, String> {
    let r = suites::run_suite(&spec).map_err(|e| e.to_string())?.report;
    if r.failed > 0 {
        let cx = r.first_counterexample.as_ref().map(|c| format!("{} at {}", c.detail, c.case));
        return Err(format!("{} n={}: {} failures, first {:?}", r.suite, r.n, r.failed, cx));
    }
    Ok(r)
}

fn within(limit: Duration, start: Instant) -> Result<String, String> {
    let t = start.elapsed();
    if t < limit {
        Ok(format!("{:.2}s < {}s", t.as_secs_f64(), limit.as_secs()))
    } else {
        Err(format!("took {:.2}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let r = run(SuiteId::Thm33Roundtrip, 4)?;
    expect(r.instances == 355 && r.passed == 355, || format!("{} instances, {} passed", r.instances, r.passed))?;
    Ok(format!("355/355 topologies round-trip, {}", within(Duration::from_secs(10), start)?))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut applicable = 0;
    let mut instances = 0;
    for n in 1..=3 {
        let r = run(SuiteId::Lemma21, n)?;
        instances += r.instances;
        applicable += r.passed;
    }
    let topology_cases: usize = (1..=3).map(|n| 3 * enumerate::topologies(n).len()).sum();
    expect(applicable > topology_cases, || "no convex semi-qospace instance was exercised".into())?;
    Ok(format!(
        "{instances} instances ({topology_cases} topology-coselection pairs, {} convex semi-qospace patches), {}",
        applicable - topology_cases,
        within(Duration::from_secs(30), start)?
    ))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for suite in [SuiteId::Thm46, SuiteId::Thm53] {
        let r = run_spec(SuiteSpec::new(suite, 4).workers(1))?;
        expect(r.instances == 77_745 && r.passed == 77_745, || {
            format!("{suite}: {} instances, {} agreeing", r.instances, r.passed)
        })?;
        parts.push(format!("{suite} 77745/77745"));
    }
    Ok(format!("{}, single worker, {}", parts.join(", "), within(Duration::from_secs(300), start)?))
}

fn criterion_4() -> Check {
    let mut lawson = 0;
    for n in 1..=5 {
        let r = run(SuiteId::Thm62, n)?;
        let orders = enumerate::partial_orders(n).len();
        let spaces = if n <= 3 { enumerate::ordered_spaces(n).len() } else { 0 };
        expect(r.instances == orders + spaces && r.passed == r.instances, || format!("n={n}: {r:?}"))?;
        lawson += orders;
    }
    expect(lawson == 1 + 3 + 19 + 219 + 4231, || format!("{lawson} partial orders"))?;
    let mut checked = 0;
    for n in 1..=3 {
        let stream = enumerate::ordered_spaces(n);
        for s in stream.iter() {
            let v = ospace::theorem_bundle(&s, Bundle::Thm62).map_err(|e| e.to_string())?;
            if !v.hypothesis {
                continue;
            }
            let c4 = v.values[3];
            let c5 = v.values[4];
            expect(c4 == c5, || format!("(4)={c4} but (5)={c5} on {}", Record::from(s.clone()).encode()))?;
            checked += 1;
        }
    }
    Ok(format!("{lawson} Lawson spaces satisfy (1)-(5); (4)<=>(5) on {checked} ordered posets n<=3"))
}

fn criterion_5() -> Check {
    let mut total = 0;
    for n in 1..=4 {
        total += run(SuiteId::Prop31, n)?.passed;
    }
    Ok(format!("nine conditions true on all {total} spaces n<=4"))
}

fn criterion_6() -> Check {
    let mut total = 0;
    for n in 1..=3 {
        total += run(SuiteId::Prop55, n)?.passed;
    }
    let q = topoderive::quasi_uniformity(&Topology::sierpinski()).map_err(|e| e.to_string())?;
    let mut base = q.members().to_vec();
    base.sort();
    let mut expected = vec![BinaryRelation::full(2), BinaryRelation::from_pairs(2, &[(0, 0), (0, 1), (1, 1)])];
    expected.sort();
    expect(base == expected, || format!("Sierpinski base {base:?}"))?;
    Ok(format!("{total} spaces n<=3; Sierpinski base is {{X^2, X^2 minus (1,0)}}"))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut inv = 0;
    for n in 1..=4 {
        inv += run(SuiteId::Thm93, n)?.passed;
    }
    let mut bases = 0;
    for n in 1..=3 {
        bases += run(SuiteId::Prop91, n)?.passed;
    }
    Ok(format!(
        "invariants agree on {inv} spaces n<=4, basis conditions on {bases} spaces n<=3, {}",
        within(Duration::from_secs(120), start)?
    ))
}

const DISTRIBUTIVE_LAWS: [&str; 6] =
    ["frame", "coframe", "distributive", "completely-distributive", "wide-frame", "wide-coframe"];

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut lattices = 0;
    let (mut m3, mut n5) = (false, false);
    for m in 1..=6 {
        let r = run(SuiteId::LatticeLaws, m)?;
        lattices += r.instances;
        for f in &r.flagged {
            let Ok(Case::Lattice(l)) = Case::from_value(&f.case) else {
                return Err("flagged case is not a lattice".into());
            };
            let violated = &f.note["violated"];
            let all_laws = DISTRIBUTIVE_LAWS.iter().all(|law| violated.get(*law).is_some_and(|w| !w.is_null()));
            if is_isomorphic(&l, &Lattice::m3()) {
                m3 = all_laws;
            }
            if is_isomorphic(&l, &Lattice::n5()) {
                n5 = all_laws;
            }
        }
    }
    expect(m3 && n5, || format!("M3 flagged with all witnesses: {m3}, N5: {n5}"))?;
    Ok(format!(
        "collapse holds on {lattices} lattices <=6 elements, M3 and N5 violate all six laws with witnesses, {}",
        within(Duration::from_secs(60), start)?
    ))
}

fn criterion_9() -> Check {
    let mut spaces = 0;
    for n in 1..=3 {
        spaces += run(SuiteId::Thm84, n)?.passed;
    }
    Ok(format!("30 kind pairs round-trip on all {spaces} T0 spaces n<=3"))
}

fn criterion_10() -> Check {
    let (mut hyp, mut total) = (0, 0);
    for n in 1..=4 {
        let r = run(SuiteId::Thm72, n)?;
        hyp += r.passed;
        total += r.instances;
    }
    expect(hyp > 0, || "no hyperconvex T1 semilattice instance".into())?;
    Ok(format!("three groups agree on {hyp} hyperconvex T1 instances (of {total} semilattice spaces n<=4)"))
}

fn criterion_11() -> Check {
    let spec = SuiteSpec::new(SuiteId::Thm46, 3);
    let mut a = run(SuiteId::Thm46, 3)?;
    let mut b = suites::run_suite(&spec).map_err(|e| e.to_string())?.report;
    a.wall_time_ms = 0;
    b.wall_time_ms = 0;
    expect(a.to_line() == b.to_line(), || "repeated reports differ".into())?;

    let cases = [(SuiteId::Thm46, 3), (SuiteId::Thm93, 4), (SuiteId::LatticeLaws, 6), (SuiteId::Cor48, 2)];
    let mut compared = 0;
    for (suite, n) in cases {
        for seed in 1..=4u64 {
            let base = SuiteSpec::new(suite, n).fault(seed);
            let single = suites::run_suite(&base.clone().workers(1)).map_err(|e| e.to_string())?.report;
            let expected = (0..single.instances).find(|&i| suites::fault_hits(seed, i));
            let got = single.first_counterexample.as_ref().map(|c| c.index);
            expect(got == expected, || format!("{suite} seed {seed}: first {got:?}, expected {expected:?}"))?;
            for workers in [2, 4, 8] {
                let multi = suites::run_suite(&base.clone().workers(workers)).map_err(|e| e.to_string())?.report;
                expect(multi.first_counterexample == single.first_counterexample, || {
                    format!("{suite} seed {seed}: {workers} workers disagree")
                })?;
                expect(multi.determinism_hash == single.determinism_hash, || {
                    format!("{suite} seed {seed}: hash differs with {workers} workers")
                })?;
                compared += 1;
            }
            if single.first_counterexample.is_some() {
                let replayed = suites::replay(&single);
                expect(matches!(replayed, Some(Ok(suites::Outcome::Fail(_)))), || {
                    format!("{suite} seed {seed}: replay gave {replayed:?}")
                })?;
            }
        }
    }
    Ok(format!("identical repeated reports; {compared} partitioned fault-injection runs match single worker"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("interior relation round-trip, 355 topologies", criterion_1),
        ("patch and upper space functors", criterion_2),
        ("sector and fan space equivalences on 77745 spaces", criterion_3),
        ("Lawson spaces of continuous domains", criterion_4),
        ("nine core-space conditions", criterion_5),
        ("quasi-uniformity suite", criterion_6),
        ("cardinal invariants and core bases", criterion_7),
        ("lattice-law collapse", criterion_8),
        ("representation converter round-trips", criterion_9),
        ("semilattice equivalence groups", criterion_10),
        ("determinism and partition independence", criterion_11),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                all = false;
                println!("criterion {:>2}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
