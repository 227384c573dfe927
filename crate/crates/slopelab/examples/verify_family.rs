//! Verification reports for one knot and for a small family.
//!
//! cargo run --release --example verify_family

use slopelab::verify::{scan, verify, Family, VerifyConfig};

fn main() {
    let cfg = VerifyConfig::default();
    let report = verify("m:-1/3,3/7,1/5", &cfg).expect("valid knot");
    for c in &report.checks {
        println!("{:<28} {:<5} {}", c.name, c.passed, c.detail);
    }
    println!("verdict {:?}\n", report.verdict);

    let family = scan(&Family::OddPretzel { m: 2, max_abs: 7 }, &cfg);
    for e in &family.entries {
        let verdict = e.report.as_ref().map(|r| format!("{:?}", r.verdict)).unwrap_or_else(|| e.error.clone().unwrap_or_default());
        println!("{:<16} {verdict}", e.knot);
    }
    println!("{:?}", family.verdicts);
}
