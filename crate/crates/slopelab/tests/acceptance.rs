//! End-to-end acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use slopelab::degree::{exceptional_scan, montesinos_js_jx, montesinos_writhe, pretzel_js_jx, pretzel_writhe};
use slopelab::exact::{format_rational, int, rat, Degree, LaurentPoly, Rational};
use slopelab::knot::{KnotSpec, MontesinosKnot, PretzelKnot, Tangle};
use slopelab::qip::{brute_force_min, lattice_min, SeparableQuadratic};
use slopelab::skein::{colored_jones, colored_jones_of_row, OracleConfig};
use slopelab::surface::{
    boundary_slope, build_reference_surface, build_sstar_surface, euler_over_sheets, reference_slope, twist_number,
};
use std::time::{Duration, Instant};

fn report(id: u32, passed: bool, detail: impl AsRef<str>, took: Duration) {
    let tag = if passed { "PASS" } else { "FAIL" };
    println!("criterion {id}: {tag} ({:.2?}) {}", took, detail.as_ref());
}

fn example_knot() -> MontesinosKnot {
    MontesinosKnot::new(vec![rat(-46, 327), rat(35, 151), rat(5, 31), rat(16, 35), rat(1, 5)]).unwrap()
}

const EXAMPLE_PRETZEL: [i64; 5] = [-7, 5, 7, 3, 5];

fn fmt(r: &Rational) -> String {
    format_rational(r)
}

fn degree_of(j: &LaurentPoly) -> i64 {
    match j.degree() {
        Degree::Finite(d) => d,
        Degree::NegInfinity => panic!("oracle returned the zero polynomial"),
    }
}

#[test]
fn c1_worked_example_degree_side() {
    let t = Instant::now();
    let k = example_knot();
    let d = montesinos_js_jx(&k, true).unwrap();
    let got = [
        &d.pretzel_degree.s,
        &d.pretzel_degree.s1,
        &d.pretzel_degree.js,
        &d.pretzel_degree.jx,
        &d.degree.js,
        &d.degree.jx,
    ];
    let want = [rat(-36, 7), rat(-32, 7), rat(72, 7), rat(-122, 7), rat(100, 7), rat(-374, 7)];
    let took = t.elapsed();
    let ok = d.pretzel == EXAMPLE_PRETZEL && got.iter().zip(&want).all(|(g, w)| *g == w) && took < Duration::from_secs(1);
    let shown: Vec<String> = got.iter().map(|r| fmt(r)).collect();
    report(1, ok, format!("q = {:?}; s, s1, js_P, jx_P, js_K, jx_K = {}", d.pretzel, shown.join(", ")), took);
    assert!(ok);
}

#[test]
fn c2_worked_example_surface_side() {
    let t = Instant::now();
    let p = MontesinosKnot::from_pretzel(&PretzelKnot::new(EXAMPLE_PRETZEL.to_vec()).unwrap());
    let sp = build_sstar_surface(&p).unwrap();
    let rp = build_reference_surface(&p).unwrap();
    let bs_p = boundary_slope(&sp, &rp);
    let chi_p = euler_over_sheets(&sp).unwrap();

    let k = example_knot();
    let sk = build_sstar_surface(&k).unwrap();
    let rk = build_reference_surface(&k).unwrap();
    let bs_k = twist_number(&sk) - twist_number(&rk) + reference_slope(&k).unwrap();
    let chi_k = euler_over_sheets(&sk).unwrap();
    let took = t.elapsed();

    let ok = bs_p == rat(72, 7)
        && chi_p == rat(-122, 7)
        && bs_k == rat(100, 7)
        && chi_k == rat(-374, 7)
        && took < Duration::from_secs(1);
    report(
        2,
        ok,
        format!("pretzel bs {} chi/M {}; Montesinos bs {} chi/M {}", fmt(&bs_p), fmt(&chi_p), fmt(&bs_k), fmt(&chi_k)),
        took,
    );
    assert!(ok);
}

#[test]
fn c3_writhe_anchors() {
    let t = Instant::now();
    let wp = pretzel_writhe(&EXAMPLE_PRETZEL).unwrap();
    let wk = montesinos_writhe(&example_knot()).unwrap();
    let ok = wp == -13 && wk == -43;
    report(3, ok, format!("w(D_P) = {wp}, w(D_K) = {wk}"), t.elapsed());
    assert!(ok);
}

fn unknot_value(color: i64) -> LaurentPoly {
    let num = &LaurentPoly::v(2 * color) - &LaurentPoly::v(-2 * color);
    num.div_exact(&(&LaurentPoly::v(2) - &LaurentPoly::v(-2))).unwrap()
}

#[test]
fn c4_skein_oracle_anchors() {
    let t = Instant::now();
    let cfg = OracleConfig::default();
    let circle = slopelab::knot::tangle::TangleRow { tangles: vec![Tangle::Infinity] };
    let twisted = KnotSpec::parse("p:1,-1,1").unwrap();
    let mut unknot_ok = true;
    for color in 1..=4usize {
        let want = unknot_value(color as i64);
        unknot_ok &= colored_jones_of_row(&circle, color - 1, &cfg).unwrap() == want;
        unknot_ok &= colored_jones(&twisted, color - 1, &cfg).unwrap() == want;
    }

    let stated = LaurentPoly::from_pairs(&[(18, 1), (10, -1), (6, -1), (2, -1)]);
    let trefoil = colored_jones(&KnotSpec::parse("p:1,1,1").unwrap(), 1, &cfg).unwrap();
    let exact = trefoil == stated;
    // The stated value evaluates to -2 at v = 1; the oracle's value is its mirror with the sign flipped.
    let related = trefoil.mirror().scale(&(-1).into()) == stated;
    let took = t.elapsed();

    report(
        4,
        unknot_ok && exact && took < Duration::from_secs(10),
        format!(
            "unknot colors 1..4 {}; J(3_1, 2) = {} vs stated {} (exact match {}, equal after v -> 1/v and sign {})",
            if unknot_ok { "match" } else { "MISMATCH" },
            trefoil.pretty(),
            stated.pretty(),
            exact,
            related
        ),
        took,
    );
    assert!(unknot_ok);
    assert!(related);
    assert_eq!(trefoil.eval_at_one(), 2.into());
}

/// Strict pretzels with at most `max` crossings, positive entries non-decreasing.
fn strict_pretzels(max: i64) -> Vec<Vec<i64>> {
    fn grow(m: usize, lo: i64, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        let mut x = lo;
        while x <= budget {
            cur.push(x);
            grow(m, x, budget - x, cur, out);
            cur.pop();
            x += 2;
        }
    }
    let mut out = Vec::new();
    for m in [2usize, 4] {
        let mut q0 = -3;
        while -q0 + 3 * m as i64 <= max {
            grow(m, 3, max + q0, &mut vec![q0], &mut out);
            q0 -= 2;
        }
    }
    out.retain(|q| PretzelKnot::new(q.clone()).map(|p| p.is_strict()).unwrap_or(false));
    out
}

#[test]
fn c5_oracle_formula_consistency() {
    let t = Instant::now();
    let cfg = OracleConfig::default();
    let knots = strict_pretzels(21);
    let mut consistent = Vec::new();
    let mut periodic = Vec::new();
    for q in &knots {
        let d = pretzel_js_jx(q, true).unwrap();
        let spec = KnotSpec::Pretzel(q.clone());
        let c: Vec<Rational> = [1usize, 2]
            .iter()
            .map(|&n| {
                let big_n = int(n as i64 + 1);
                let deg = degree_of(&colored_jones(&spec, n, &cfg).unwrap());
                int(deg) - &d.js * &big_n * &big_n - &d.jx * &big_n
            })
            .collect();
        let line = format!("P{q:?} case {} c(2) = {} c(3) = {}", d.case.label(), fmt(&c[0]), fmt(&c[1]));
        if c[0] == c[1] && c[0].is_integer() {
            consistent.push(line);
        } else {
            periodic.push(line);
        }
    }
    let took = t.elapsed();
    let ok = consistent.len() >= 5;
    report(
        5,
        ok,
        format!("{} of {} strict pretzels with <= 21 crossings have c(2) = c(3)", consistent.len(), knots.len()),
        took,
    );
    for l in &consistent {
        println!("    same    {l}");
    }
    for l in &periodic {
        println!("    differs {l}");
    }
    assert!(ok);
}

#[test]
fn c6_qip_exhaustive() {
    let t = Instant::now();
    let mut count = 0usize;
    let mut mismatches = 0usize;
    for m in 1..=3u32 {
        for code in 0..(28usize.pow(m)) {
            let mut c = code;
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for _ in 0..m {
                a.push((c % 4) as i64 + 1);
                c /= 4;
                b.push((c % 7) as i64 - 3);
                c /= 7;
            }
            let f = SeparableQuadratic::new(a, b).unwrap();
            for tt in 0..=15 {
                let o = lattice_min(&f, tt);
                let (_, best) = brute_force_min(&f, tt);
                if o.value != best || f.eval(&o.minimizer) != best || o.minimizer.iter().sum::<i64>() != tt {
                    mismatches += 1;
                }
                count += 1;
            }
        }
    }
    let took = t.elapsed();
    let ok = mismatches == 0 && took < Duration::from_secs(120);
    report(6, ok, format!("{count} instances, {mismatches} mismatches"), took);
    assert_eq!(mismatches, 0);
}

fn random_strict_q(rng: &mut impl Rng) -> Vec<i64> {
    loop {
        let m = if rng.gen_bool(0.5) { 2 } else { 4 };
        let odd = |rng: &mut dyn rand::RngCore, lo: i64| {
            let k = rng.gen_range(0..=(25 - lo) / 2);
            lo + 2 * k
        };
        let mut q = vec![-odd(rng, 3)];
        for _ in 0..m {
            q.push(odd(rng, 3));
        }
        if pretzel_js_jx(&q, true).map(|d| !d.s.is_positive()).unwrap_or(false) {
            return q;
        }
    }
}

#[test]
fn c7_symbolic_identities() {
    let t = Instant::now();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x51_0e);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let q = random_strict_q(&mut rng);
        let d = pretzel_js_jx(&q, true).unwrap();
        let k = MontesinosKnot::from_pretzel(&PretzelKnot::new(q.clone()).unwrap());
        let m = int(k.m() as i64);
        let s = build_sstar_surface(&k).unwrap();
        let r = build_reference_surface(&k).unwrap();
        let tw_diff = twist_number(&s) - twist_number(&r);
        let chi = euler_over_sheets(&s).unwrap();
        let want_chi = -int(2) * &d.s1 + int(4) * &d.s - int(2) * (m - int(1));
        if tw_diff != -int(2) * &d.s || chi != want_chi || boundary_slope(&s, &r) != tw_diff {
            failures.push(q);
        }
    }
    let took = t.elapsed();
    let ok = failures.is_empty() && took < Duration::from_secs(10);
    report(7, ok, format!("100 random strict q with s <= 0, m in {{2, 4}}, entries <= 25; failures {failures:?}"), took);
    assert!(failures.is_empty());
}

#[test]
fn c8_exceptional_scan() {
    let t = Instant::now();
    let mut got: Vec<Vec<i64>> = exceptional_scan(-10, 10)
        .into_iter()
        .map(|mut q| {
            q[1..].sort();
            q
        })
        .collect();
    got.sort();
    got.dedup();
    let mut want = vec![vec![-3, 5, 5], vec![-3, 4, 7], vec![-2, 3, 7], vec![-2, 3, 5, 5]];
    want.sort();
    let took = t.elapsed();
    let ok = got == want && took < Duration::from_secs(30);
    report(8, ok, format!("found {got:?}"), took);
    assert_eq!(got, want);
}

#[test]
fn c9_mirror_identity() {
    let t = Instant::now();
    let cfg = OracleConfig::default();
    let pairs = [("p:1,1,1", "p:-1,-1,-1"), ("p:3,-3,-3", "p:-3,3,3")];
    let mut ok = true;
    let mut detail = Vec::new();
    for (a, b) in pairs {
        for n in 1..=2 {
            let ja = colored_jones(&KnotSpec::parse(a).unwrap(), n, &cfg).unwrap();
            let jb = colored_jones(&KnotSpec::parse(b).unwrap(), n, &cfg).unwrap();
            let same = ja.mirror() == jb;
            ok &= same;
            detail.push(format!("{a}/{b} color {}: {}", n + 1, if same { "ok" } else { "differs" }));
        }
    }
    report(9, ok, detail.join("; "), t.elapsed());
    assert!(ok);
}
