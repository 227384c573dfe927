//! Per-knot verification reports: degree formulas, the matching Hatcher-Oertel surface
//! and oracle degrees at small colors, assembled into deterministic JSON.

use crate::degree::{
    exceptional_scan, montesinos_degree_prediction, montesinos_js_jx, pretzel_degree_prediction, pretzel_js_jx,
    Corrections, DegreeError, DegreeQuadratic, SurfaceHint,
};
use crate::exact::rational::serde_rat;
use crate::exact::{format_rational, int, Rational};
use crate::knot::{KnotError, KnotSpec, MontesinosKnot, PretzelKnot};
use crate::skein::{colored_jones, OracleConfig};
use crate::surface::{
    build_reference_surface, build_sstar_surface, euler_over_sheets, incompressibility_check, reference_slope,
    twist_number, CandidateSurface, SurfaceError, SurfaceKind, Verdict,
};
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: &str = "slopelab-report/1";

/// Diagrams above this size skip the oracle unless colors are requested explicitly.
pub const AUTO_ORACLE_CROSSINGS: usize = 30;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("cannot parse knot: {0}")]
    Parse(#[from] KnotError),
    #[error("{0}")]
    Hypothesis(String),
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Highest cable count `n` (color `n + 1`) sent to the oracle; `None` picks 2 for
    /// diagrams up to 30 crossings and 0 above.
    pub oracle_colors: Option<usize>,
    pub force: bool,
    pub oracle: OracleConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { oracle_colors: None, force: false, oracle: OracleConfig::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum OverallVerdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeSide {
    pub pretzel: Vec<i64>,
    #[serde(flatten)]
    pub quadratic: DegreeQuadratic,
    pub pretzel_degree: Option<DegreeQuadratic>,
    pub corrections: Option<Corrections>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceSide {
    pub kind: SurfaceKind,
    #[serde(rename = "M")]
    pub sheets: i64,
    #[serde(rename = "K")]
    pub k: Vec<i64>,
    pub q: Option<i64>,
    pub edgepaths: Vec<Vec<String>>,
    pub final_fractions: Vec<Option<(i64, i64)>>,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub tw: Rational,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub tw_reference: Rational,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub bs_reference: Rational,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub bs: Rational,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub two_chi_over_sheets: Rational,
    pub rvalues: Vec<i64>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleColor {
    pub color: usize,
    pub degree: Option<i64>,
    pub predicted: Option<i64>,
    #[serde(serialize_with = "serde_rat::opt::serialize")]
    pub constant: Option<Rational>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSide {
    pub colors: Vec<OracleColor>,
    pub constant_varies: bool,
    pub matched: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub knot: String,
    pub forced: bool,
    pub strict_ok: bool,
    pub degree: DegreeSide,
    pub surface: Option<SurfaceSide>,
    pub surface_error: Option<String>,
    pub oracle: OracleSide,
    pub checks: Vec<Check>,
    pub verdict: OverallVerdict,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn hypothesis(e: DegreeError) -> VerifyError {
    match e {
        DegreeError::Knot(k) => VerifyError::Parse(k),
        e => VerifyError::Hypothesis(e.to_string()),
    }
}

/// The knot as a reduced Montesinos knot plus its degree quadratic.
fn degree_side(spec: &KnotSpec, strict: bool) -> Result<(MontesinosKnot, DegreeSide), VerifyError> {
    match spec {
        KnotSpec::Pretzel(q) => {
            let p = PretzelKnot::new(q.clone())?;
            let d = pretzel_js_jx(&p.q, strict).map_err(hypothesis)?;
            let side = DegreeSide { pretzel: p.q.clone(), quadratic: d, pretzel_degree: None, corrections: None };
            Ok((MontesinosKnot::from_pretzel(&p), side))
        }
        KnotSpec::Montesinos(r) => {
            let k = MontesinosKnot::new(r.clone())?;
            let d = montesinos_js_jx(&k, strict).map_err(hypothesis)?;
            let side = DegreeSide {
                pretzel: d.pretzel,
                quadratic: d.degree,
                pretzel_degree: Some(d.pretzel_degree),
                corrections: Some(d.corrections),
            };
            Ok((k, side))
        }
    }
}

fn surface_side(k: &MontesinosKnot, hint: SurfaceHint) -> Result<SurfaceSide, SurfaceError> {
    let r = build_reference_surface(k)?;
    let s: CandidateSurface = match hint {
        SurfaceHint::SStar => build_sstar_surface(k)?,
        SurfaceHint::Reference => r.clone(),
    };
    let bs_reference = reference_slope(k)?;
    let (tw, tw_reference) = (twist_number(&s), twist_number(&r));
    let bs = &tw - &tw_reference + &bs_reference;
    Ok(SurfaceSide {
        kind: s.kind,
        sheets: s.sheets,
        k: s.k.clone(),
        q: s.q_negative,
        edgepaths: s.vertex_lists(),
        final_fractions: s.edgepaths.iter().map(|p| p.final_fraction).collect(),
        tw,
        tw_reference,
        bs_reference,
        bs,
        two_chi_over_sheets: euler_over_sheets(&s)?,
        rvalues: s.rvalues.clone(),
        verdict: incompressibility_check(&s),
    })
}

fn oracle_side(spec: &KnotSpec, k: &MontesinosKnot, d: &DegreeQuadratic, colors: usize, cfg: &OracleConfig) -> OracleSide {
    let mut out = Vec::new();
    for n in 1..=colors {
        let predicted = match spec {
            KnotSpec::Pretzel(q) => pretzel_degree_prediction(q, n as i64),
            KnotSpec::Montesinos(_) => montesinos_degree_prediction(k, n as i64),
        }
        .ok();
        let (degree, error) = match colored_jones(spec, n, cfg) {
            Ok(j) => (j.degree().finite(), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let color = n + 1;
        let constant = degree.map(|g| int(g) - &d.js * int((color * color) as i64) - &d.jx * int(color as i64));
        out.push(OracleColor { color, degree, predicted, constant, error });
    }
    let constants: Vec<&Rational> = out.iter().filter_map(|c| c.constant.as_ref()).collect();
    let constant_varies = constants.windows(2).any(|w| w[0] != w[1]);
    let matched = out.iter().all(|c| c.degree.is_none() || c.degree == c.predicted);
    OracleSide { colors: out, constant_varies, matched }
}

/// Runs the degree engine, the surface selected by the degree case and the oracle.
pub fn verify(input: &str, cfg: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    let spec = KnotSpec::parse(input)?;
    let (k, degree) = degree_side(&spec, !cfg.force)?;
    let d = &degree.quadratic;
    let (surface, surface_error) = match surface_side(&k, d.surface_hint) {
        Ok(s) => (Some(s), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let crossings = crate::knot::diagram::montesinos_row(&k).crossings();
    let colors = cfg.oracle_colors.unwrap_or(if crossings <= AUTO_ORACLE_CROSSINGS { 2 } else { 0 });
    let oracle = oracle_side(&spec, &k, d, colors, &cfg.oracle);

    let mut checks = Vec::new();
    match &surface {
        Some(s) => {
            checks.push(Check {
                name: "js = bs".into(),
                passed: s.bs == d.js,
                detail: format!("js = {}, bs = {}", format_rational(&d.js), format_rational(&s.bs)),
            });
            checks.push(Check {
                name: "jx = 2chi/#S".into(),
                passed: s.two_chi_over_sheets == d.jx,
                detail: format!(
                    "jx = {}, 2chi/#S = {}",
                    format_rational(&d.jx),
                    format_rational(&s.two_chi_over_sheets)
                ),
            });
        }
        None => checks.push(Check {
            name: "surface".into(),
            passed: false,
            detail: surface_error.clone().unwrap_or_default(),
        }),
    }
    for c in &oracle.colors {
        if let Some(g) = c.degree {
            checks.push(Check {
                name: format!("oracle degree at color {}", c.color),
                passed: Some(g) == c.predicted,
                detail: format!("oracle {g}, predicted {:?}", c.predicted),
            });
        }
    }
    let verdict = if checks.iter().any(|c| !c.passed) {
        OverallVerdict::Fail
    } else if surface.as_ref().map(|s| s.verdict) == Some(Verdict::Inconclusive) {
        OverallVerdict::Inconclusive
    } else {
        OverallVerdict::Pass
    };
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        knot: spec.to_string(),
        forced: cfg.force,
        strict_ok: d.strict_ok,
        degree,
        surface,
        surface_error,
        oracle,
        checks,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Strict odd pretzels `P(q0, q1, ..., qm)` with `|q_i| <= max_abs` and sorted positive entries.
    OddPretzel { m: usize, max_abs: i64 },
    /// The exceptional knots with `q0_min <= q0 <= -2`, `3 <= q_i <= qi_max`, verified in forced mode.
    Exceptional { q0_min: i64, qi_max: i64 },
    /// Explicit knot specs.
    List(Vec<String>),
}

impl Family {
    pub fn members(&self) -> Vec<String> {
        match self {
            Family::OddPretzel { m, max_abs } => {
                let odd: Vec<i64> = (3..=*max_abs).step_by(2).collect();
                let mut out = Vec::new();
                let mut combos: Vec<Vec<i64>> = vec![vec![]];
                for _ in 0..*m {
                    combos = combos
                        .into_iter()
                        .flat_map(|c| {
                            let lo = c.last().copied().unwrap_or(3);
                            odd.iter().filter(move |&&x| x >= lo).map(move |&x| [c.clone(), vec![x]].concat())
                        })
                        .collect();
                }
                for q0 in odd.iter().map(|x| -x) {
                    for c in &combos {
                        let q: Vec<i64> = std::iter::once(q0).chain(c.iter().copied()).collect();
                        if PretzelKnot::new(q.clone()).map(|p| p.is_strict()).unwrap_or(false) {
                            out.push(PretzelKnot { q }.spec());
                        }
                    }
                }
                out
            }
            Family::Exceptional { q0_min, qi_max } => {
                exceptional_scan(*q0_min, *qi_max).into_iter().map(|q| PretzelKnot { q }.spec()).collect()
            }
            Family::List(v) => v.clone(),
        }
    }

    pub fn forced(&self) -> bool {
        matches!(self, Family::Exceptional { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub knot: String,
    pub report: Option<VerificationReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub schema: &'static str,
    pub entries: Vec<ScanEntry>,
    pub verdicts: BTreeMap<String, usize>,
    pub cases: BTreeMap<String, usize>,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.report.as_ref().map(|r| r.verdict) == Some(OverallVerdict::Pass))
    }
}

/// Verifies every member of `family`, spread over the available cores.
pub fn scan(family: &Family, cfg: &VerifyConfig) -> ScanReport {
    let members = family.members();
    let cfg = VerifyConfig { force: cfg.force || family.forced(), ..cfg.clone() };
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(members.len().max(1));
    let mut entries: Vec<Option<ScanEntry>> = vec![None; members.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (members, cfg) = (&members, &cfg);
                scope.spawn(move || {
                    (w..members.len())
                        .step_by(workers)
                        .map(|i| {
                            let knot = members[i].clone();
                            let entry = match verify(&knot, cfg) {
                                Ok(r) => ScanEntry { knot, report: Some(r), error: None },
                                Err(e) => ScanEntry { knot, report: None, error: Some(e.to_string()) },
                            };
                            (i, entry)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, e) in h.join().expect("scan worker") {
                entries[i] = Some(e);
            }
        }
    });
    let entries: Vec<ScanEntry> = entries.into_iter().map(|e| e.expect("every member scanned")).collect();
    let mut verdicts = BTreeMap::new();
    let mut cases = BTreeMap::new();
    for e in &entries {
        let v = match &e.report {
            Some(r) => {
                *cases.entry(r.degree.quadratic.case.label().to_string()).or_insert(0) += 1;
                format!("{:?}", r.verdict).to_uppercase()
            }
            None => "ERROR".into(),
        };
        *verdicts.entry(v).or_insert(0) += 1;
    }
    ScanReport { schema: SCHEMA_VERSION, entries, verdicts, cases }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn no_oracle() -> VerifyConfig {
        VerifyConfig { oracle_colors: Some(0), ..VerifyConfig::default() }
    }

    #[test]
    fn worked_examples_pass() {
        let r = verify("m:-46/327,35/151,5/31,16/35,1/5", &no_oracle()).unwrap();
        assert_eq!(r.verdict, OverallVerdict::Pass);
        let s = r.surface.unwrap();
        assert_eq!((s.bs, s.two_chi_over_sheets), (rat(100, 7), rat(-374, 7)));
        let r = verify("p:-7,5,7,3,5", &no_oracle()).unwrap();
        assert_eq!(r.verdict, OverallVerdict::Pass);
        let s = r.surface.unwrap();
        assert_eq!((s.bs, s.two_chi_over_sheets), (rat(72, 7), rat(-122, 7)));
    }

    #[test]
    fn exceptional_knot_in_forced_mode() {
        assert!(matches!(verify("p:-2,3,7", &no_oracle()), Err(VerifyError::Hypothesis(_))));
        let cfg = VerifyConfig { force: true, ..no_oracle() };
        let r = verify("p:-2,3,7", &cfg).unwrap();
        assert_eq!(r.degree.quadratic.case.label(), "3");
        assert_eq!(r.surface.as_ref().unwrap().kind, SurfaceKind::Reference);
        assert_eq!(r.degree.quadratic.js, int(0));
        assert!(!r.strict_ok);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(verify("q:1,2", &no_oracle()), Err(VerifyError::Parse(_))));
        assert!(matches!(verify("p:-3,3,3,3", &no_oracle()), Err(VerifyError::Parse(_))));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = VerifyConfig { oracle_colors: Some(1), ..VerifyConfig::default() };
        let a = verify("p:-3,5,5", &cfg).unwrap().to_json();
        let b = verify("p:-3,5,5", &cfg).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": \"slopelab-report/1\""));
    }

    #[test]
    fn oracle_agrees_with_the_prediction() {
        let cfg = VerifyConfig { oracle_colors: Some(2), ..VerifyConfig::default() };
        for k in ["p:-3,5,5", "p:-5,3,3", "m:-1/3,3/7,1/5"] {
            let r = verify(k, &cfg).unwrap();
            assert!(r.oracle.matched, "{k}: {:?}", r.oracle.colors);
            assert_eq!(r.oracle.colors.len(), 2);
        }
    }

    #[test]
    fn scan_families() {
        assert!(Family::OddPretzel { m: 2, max_abs: 1 }.members().is_empty());
        let m = Family::OddPretzel { m: 2, max_abs: 5 }.members();
        assert_eq!(m, ["p:-3,3,3", "p:-3,3,5", "p:-3,5,5", "p:-5,3,3", "p:-5,3,5", "p:-5,5,5"]);
        let rep = scan(&Family::Exceptional { q0_min: -10, qi_max: 10 }, &no_oracle());
        let knots: Vec<&str> = rep.entries.iter().map(|e| e.knot.as_str()).collect();
        assert_eq!(knots, ["p:-3,4,7", "p:-3,5,5", "p:-2,3,5,5", "p:-2,3,7"]);
    }
}
