//! Jones slope and normalized Euler characteristic, and the degree they predict.
//!
//! cargo run --example degree_formulas

use slopelab::degree::{max_delta, montesinos_js_jx, pretzel_degree_prediction, pretzel_js_jx, tr_moves};
use slopelab::exact::{format_rational, rat};
use slopelab::knot::MontesinosKnot;

fn main() {
    for q in [vec![-7, 5, 7, 3, 5], vec![-3, 5, 5], vec![-5, 3, 3], vec![-3, 3, 5, 7, 9]] {
        let d = pretzel_js_jx(&q, true).expect("strict pretzel");
        println!(
            "P{q:?}: s = {}, s1 = {}, case {}, js = {}, jx = {}",
            format_rational(&d.s),
            format_rational(&d.s1),
            d.case.label(),
            format_rational(&d.js),
            format_rational(&d.jx)
        );
        for n in 1..=4 {
            let (best, k) = max_delta(n, &q).unwrap();
            println!("    n = {n}: max delta {best} at k = {k:?}, deg J_(n+1) = {}", pretzel_degree_prediction(&q, n).unwrap());
        }
    }

    let k = MontesinosKnot::new(vec![rat(-46, 327), rat(35, 151), rat(5, 31), rat(16, 35), rat(1, 5)]).unwrap();
    let d = montesinos_js_jx(&k, true).unwrap();
    println!("\n{k}");
    println!("  associated pretzel P{:?}", d.pretzel);
    println!("  TR-moves {:?}", tr_moves(&k));
    println!("  corrections {:?}", d.corrections);
    println!("  js = {}, jx = {}", format_rational(&d.degree.js), format_rational(&d.degree.jx));
}
