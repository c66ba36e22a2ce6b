//! Acceptance checks 1-11, one verdict line each. A line reads PASS only
//! when every metric of the check meets its bound, informative ones
//! included; the metric lines underneath show which bound decided it.
//!
//! `LCT_QUICK=1` runs the reduced variant.

use lct::engine::suite::{run, SuiteOptions, CRITERIA};

fn main() {
    let quick = std::env::var("LCT_QUICK").is_ok_and(|v| v == "1");
    let opts = SuiteOptions { quick, ..SuiteOptions::default() };
    let mut failed = 0;
    for &(id, _, _) in &CRITERIA {
        let r = run(id, &opts);
        let verdict = if r.strict_passed() { "PASS" } else { "FAIL" };
        if !r.strict_passed() {
            failed += 1;
        }
        println!("criterion {:>2} {verdict}: {} ({:.1} s)", r.id, r.title, r.seconds);
        for m in &r.metrics {
            let tag = if m.gating { "" } else { " [informative]" };
            let ok = if m.passed { "ok  " } else { "FAIL" };
            println!("    {ok} {:.3e} (limit {:.0e}) {}{tag}", m.value, m.limit, m.name);
        }
        for n in &r.notes {
            println!("    note: {n}");
        }
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
}
