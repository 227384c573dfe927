//! Continued fraction expansions and bracket sums of the tangles in the worked example.
//!
//! cargo run --example continued_fractions

use slopelab::exact::{bracket_sums, eval_cfe, even_length_cfe, format_rational, negative_cfe, positive_cfe, rat};

fn main() {
    for (p, q) in [(-46, 327), (35, 151), (5, 31), (16, 35), (1, 5)] {
        let r = rat(p, q);
        let even = even_length_cfe(&r);
        let b = bracket_sums(&r);
        println!("{:>8}", format_rational(&r));
        println!("  positive     {}", positive_cfe(&r));
        println!("  even length  {}", even);
        println!("  negative     {}", negative_cfe(&r));
        println!("  [r]_e = {}  [r]_o = {}  [r] = {}", b.e_sum, b.o_sum, b.total);
        assert_eq!(eval_cfe(&even).unwrap(), r);
    }
}
