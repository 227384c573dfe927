//! Separable quadratic integer programs over the scaled simplex.
//!
//! cargo run --example quadratic_programs

use slopelab::exact::{format_rational, int};
use slopelab::qip::{brute_force_min, graver_certificate, lattice_min, maximize_degree, real_min_simplex, SeparableQuadratic};

fn main() {
    let f = SeparableQuadratic::new(vec![1, 2, 3], vec![0, -1, 2]).unwrap();
    for t in [0, 1, 5, 7, 12] {
        let o = lattice_min(&f, t);
        let (real_x, real_v) = real_min_simplex(&f, &int(t));
        let real: Vec<String> = real_x.iter().map(format_rational).collect();
        println!("t = {t:>2}: lattice {:?} -> {}  on Σx = t [{}] -> {}", o.minimizer, o.value, real.join(", "), format_rational(&real_v));
        assert_eq!(o.value, brute_force_min(&f, t).1);
        println!("        certificate: {:?}", graver_certificate(&f, &o.minimizer, t));
    }

    // the degree program of P(-7, 5, 7, 3, 5)
    let q = [-7, 5, 7, 3, 5];
    for n in [3, 7, 14] {
        let m = maximize_degree(&q, n).unwrap();
        println!("P{q:?}, n = {n}: case {}, t* = {}, k = {:?}, predicted t {:?}", m.case.label(), m.t_star, m.k, m.predicted_t);
    }
}
