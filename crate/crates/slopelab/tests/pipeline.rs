use slopelab::exact::rat;
use slopelab::knot::{KnotSpec, MontesinosKnot};
use slopelab::skein::{colored_jones, OracleConfig};
use slopelab::degree::montesinos_degree_prediction;
use slopelab::verify::{scan, verify, Family, OverallVerdict, VerifyConfig};

#[test]
fn montesinos_degrees_match_oracle() {
    let cfg = OracleConfig::default();
    for fr in [vec![rat(-1, 3), rat(3, 7), rat(1, 5)], vec![rat(-3, 10), rat(1, 3), rat(1, 3)], vec![rat(-1, 3), rat(2, 7), rat(1, 4)]] {
        let k = MontesinosKnot::new(fr.clone()).unwrap();
        for n in 1..=2 {
            let j = colored_jones(&KnotSpec::Montesinos(fr.clone()), n, &cfg).unwrap();
            assert_eq!(j.degree().finite(), Some(montesinos_degree_prediction(&k, n as i64).unwrap()), "{k} n={n}");
        }
    }
}

#[test]
fn scan_is_deterministic_and_clean() {
    let cfg = VerifyConfig { oracle_colors: Some(1), ..VerifyConfig::default() };
    let a = scan(&Family::OddPretzel { m: 2, max_abs: 7 }, &cfg);
    let b = scan(&Family::OddPretzel { m: 2, max_abs: 7 }, &cfg);
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.entries.iter().all(|e| e.report.as_ref().is_some_and(|r| r.verdict != OverallVerdict::Fail)));
}

#[test]
fn four_tangle_pretzels_pass() {
    let cfg = VerifyConfig { oracle_colors: Some(1), ..VerifyConfig::default() };
    for k in ["p:-3,5,5,5,5", "p:-5,3,5,7,9", "p:-9,5,5,5,5"] {
        let r = verify(k, &cfg).unwrap();
        assert_eq!(r.verdict, OverallVerdict::Pass, "{k}: {:?}", r.checks);
    }
}

#[test]
fn exceptional_family_in_forced_mode() {
    let r = scan(&Family::Exceptional { q0_min: -10, qi_max: 10 }, &VerifyConfig { oracle_colors: Some(0), ..VerifyConfig::default() });
    let knots: Vec<&str> = r.entries.iter().map(|e| e.knot.as_str()).collect();
    assert_eq!(knots.len(), 4);
    assert!(r.entries.iter().all(|e| e.report.as_ref().is_some_and(|x| x.forced)));
}
