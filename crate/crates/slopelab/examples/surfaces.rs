//! The candidate surfaces S(M, x*) and R with their boundary slopes and Euler characteristics.
//!
//! cargo run --example surfaces -- p:-7,5,7,3,5

use slopelab::exact::format_rational;
use slopelab::knot::{KnotSpec, MontesinosKnot, PretzelKnot};
use slopelab::surface::{
    build_reference_surface, build_sstar_surface, euler_over_sheets, incompressibility_check, reference_slope,
    twist_number, CandidateSurface,
};

fn show(name: &str, s: &CandidateSurface) {
    println!("{name}: M = {}, K = {:?}, r-values {:?}", s.sheets, s.k, s.rvalues);
    for (path, v) in s.edgepaths.iter().zip(s.vertex_lists()) {
        println!("    {} {:?}", v.join(" -> "), path.final_fraction);
    }
    println!("    tw = {}, 2chi/#S = {}", format_rational(&twist_number(s)), euler_over_sheets(s).map(|x| format_rational(&x)).unwrap_or_else(|e| e.to_string()));
    println!("    {:?}", incompressibility_check(s));
}

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "p:-7,5,7,3,5".into());
    let k = match KnotSpec::parse(&input).expect("knot spec") {
        KnotSpec::Montesinos(r) => MontesinosKnot::new(r).expect("Montesinos knot"),
        KnotSpec::Pretzel(q) => MontesinosKnot::from_pretzel(&PretzelKnot::new(q).expect("pretzel knot")),
    };
    let r = build_reference_surface(&k).expect("reference surface");
    show("R", &r);
    let bs_r = reference_slope(&k).expect("diagram slope");
    println!("    bs(R) = {}", format_rational(&bs_r));
    match build_sstar_surface(&k) {
        Ok(s) => {
            show("S(M, x*)", &s);
            let bs = twist_number(&s) - twist_number(&r) + bs_r;
            println!("    bs(S) = {}", format_rational(&bs));
        }
        Err(e) => println!("S(M, x*): {e}"),
    }
}
