//! Run a few suites, then show how a seeded fault is located identically by any worker count.

use ordertop::labcli::suites::{self, SuiteId, SuiteSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (suite, n) in [(SuiteId::Thm33Roundtrip, 4), (SuiteId::Thm93, 3), (SuiteId::LatticeLaws, 5)] {
        let report = suites::run_suite(&SuiteSpec::new(suite, n))?.report;
        println!("{}", report.to_line());
    }
    let spec = SuiteSpec::new(SuiteId::Prop31, 4).fault(11);
    let one = suites::run_suite(&spec.clone().workers(1))?.report;
    let many = suites::run_suite(&spec.workers(4))?.report;
    println!("first injected failure, 1 worker:  {:?}", one.first_counterexample.as_ref().map(|c| c.index));
    println!("first injected failure, 4 workers: {:?}", many.first_counterexample.as_ref().map(|c| c.index));
    println!("replayed verdict: {:?}", suites::replay(&one));
    Ok(())
}
