//! Reduced form, associated pretzel knot and standard diagram of a Montesinos knot.
//!
//! cargo run --example knot_diagrams -- m:-46/327,35/151,5/31,16/35,1/5

use slopelab::knot::diagram::montesinos_row;
use slopelab::knot::{associated_pretzel, Diagram, KnotSpec, MontesinosKnot, PretzelKnot};

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "m:-46/327,35/151,5/31,16/35,1/5".into());
    let k = match KnotSpec::parse(&input).expect("knot spec like m:-1/3,2/5,1/3 or p:-3,5,5") {
        KnotSpec::Montesinos(r) => MontesinosKnot::new(r).expect("reducible Montesinos knot"),
        KnotSpec::Pretzel(q) => MontesinosKnot::from_pretzel(&PretzelKnot::new(q).expect("pretzel knot")),
    };
    println!("reduced form       {k}");
    let ap = associated_pretzel(&k);
    println!("associated pretzel P{:?}  q0' = {}  qi' = {:?}", ap.q, ap.q0_prime, ap.qi_prime);

    let d = Diagram::from_row(&montesinos_row(&k));
    println!("crossings          {}", d.crossing_count());
    println!("components         {}", d.components().len());
    println!("planar             {}", d.is_planar());
    match d.writhe() {
        Ok(w) => println!("writhe             {w}"),
        Err(e) => println!("writhe             {e}"),
    }
    let pd = d.pd_code();
    let head: Vec<String> = pd.iter().take(6).map(|c| format!("X{:?}{:+}", c.edges, c.sign)).collect();
    println!("PD code (first 6)  {}", head.join(" "));
}
