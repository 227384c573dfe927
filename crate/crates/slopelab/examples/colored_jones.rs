//! Colored Jones polynomials from the Temperley-Lieb skein oracle.
//!
//! cargo run --release --example colored_jones -- p:-3,5,5 2

use slopelab::exact::Degree;
use slopelab::knot::KnotSpec;
use slopelab::skein::{colored_jones, OracleConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let input = args.next().unwrap_or_else(|| "p:-3,5,5".into());
    let top: usize = args.next().map(|s| s.parse().expect("cable count")).unwrap_or(2);
    let spec = KnotSpec::parse(&input).expect("knot spec");
    let cfg = OracleConfig { max_color: top + 1, ..OracleConfig::default() };

    for n in 1..=top {
        let j = colored_jones(&spec, n, &cfg).expect("oracle");
        let mirror = colored_jones(&mirror_of(&spec), n, &cfg).expect("oracle");
        let deg = match j.degree() {
            Degree::Finite(d) => d.to_string(),
            Degree::NegInfinity => "-inf".into(),
        };
        println!("J_{{K,{}}} = {}", n + 1, j.pretty());
        println!("  max degree {deg}, value at v = 1: {}, mirror agrees: {}", j.eval_at_one(), mirror == j.mirror());
    }
}

fn mirror_of(spec: &KnotSpec) -> KnotSpec {
    match spec {
        KnotSpec::Pretzel(q) => KnotSpec::Pretzel(q.iter().map(|x| -x).collect()),
        KnotSpec::Montesinos(r) => KnotSpec::Montesinos(r.iter().map(|x| -x).collect()),
    }
}
