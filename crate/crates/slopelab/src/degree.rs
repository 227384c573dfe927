//! Degree of the colored Jones polynomial: the state degree `δ(n,k)`, the Jones slope
//! and normalized Euler characteristic of pretzel and Montesinos knots, and TR-move shifts.

use crate::exact::{bracket_sums, int, rat, Rational};
use crate::knot::diagram::{montesinos_row, pretzel_row, Diagram, DiagramError};
use crate::knot::model::{associated_pretzel, classify, KnotError, LinkType, MontesinosKnot, PretzelKnot};
use crate::qip::{self, DegreeCase, QipError};
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DegreeError {
    #[error("outside the theorem hypotheses: {0}")]
    HypothesisViolation(String),
    #[error("state parameters are not tight")]
    NotTight,
    #[error("{0}")]
    SignViolation(&'static str),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Qip(#[from] QipError),
}

/// Which Hatcher-Oertel surface realizes the slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SurfaceHint {
    SStar,
    Reference,
}

/// `deg J_{K,n} = js n^2 + jx n + c(n)` for large colors `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeQuadratic {
    #[serde(serialize_with = "crate::exact::rational::serde_rat::serialize")]
    pub js: Rational,
    #[serde(serialize_with = "crate::exact::rational::serde_rat::serialize")]
    pub jx: Rational,
    #[serde(serialize_with = "crate::exact::rational::serde_rat::serialize")]
    pub s: Rational,
    #[serde(serialize_with = "crate::exact::rational::serde_rat::serialize")]
    pub s1: Rational,
    pub case: DegreeCase,
    pub surface_hint: SurfaceHint,
    pub strict_ok: bool,
    pub notes: Vec<String>,
}

/// `s(q) = 1 + q_0 + 1/Σ(q_i-1)^{-1}` and `s_1(q) = Σ(q_i+q_0-2)(q_i-1)^{-1} / Σ(q_i-1)^{-1}`.
pub fn s_and_s1(q: &[i64]) -> Result<(Rational, Rational), DegreeError> {
    if q.len() < 2 || q[1..].iter().any(|&x| x == 1) {
        return Err(DegreeError::HypothesisViolation("q_i = 1 for some i >= 1".into()));
    }
    let inv: Rational = q[1..].iter().map(|&x| rat(1, x - 1)).sum();
    if inv.is_zero() {
        return Err(DegreeError::HypothesisViolation("Σ(q_i-1)^{-1} vanishes".into()));
    }
    let s = int(1 + q[0]) + Rational::from_integer(1.into()) / &inv;
    let s1 = q[1..].iter().map(|&x| rat(x + q[0] - 2, x - 1)).sum::<Rational>() / inv;
    Ok((s, s1))
}

/// `δ(n,k) = -2[(q_0+1)k_0^2 + Σ(q_i-1)k_i^2 + Σ(q_0+q_i-2)k_i - n(n+2)/2 Σq_i + (m-1)n]`
/// for tight `k = (k_0, k_1, ..., k_m)`.
pub fn delta_nk(n: i64, k: &[i64], q: &[i64]) -> Result<Rational, DegreeError> {
    if k.len() != q.len() || k[0] != k[1..].iter().sum::<i64>() || k.iter().any(|&x| x < 0 || x > n) {
        return Err(DegreeError::NotTight);
    }
    let m = q.len() as i64 - 1;
    let mut inner = int((q[0] + 1) * k[0] * k[0]);
    for i in 1..q.len() {
        inner += int((q[i] - 1) * k[i] * k[i] + (q[0] + q[i] - 2) * k[i]);
    }
    inner -= rat(n * (n + 2), 2) * int(q.iter().sum());
    inner += int((m - 1) * n);
    Ok(int(-2) * inner)
}

/// The special Montesinos variant: `δ(n,k) + n^2 Σ(q'_i - 1)`.
pub fn delta_nk_special(n: i64, k: &[i64], q: &[i64], q_prime: &[i64]) -> Result<Rational, DegreeError> {
    if q_prime.len() + 1 != q.len() {
        return Err(DegreeError::HypothesisViolation("q' must have one entry per positive tangle".into()));
    }
    let extra: i64 = q_prime.iter().map(|&x| x - 1).sum();
    Ok(delta_nk(n, k, q)? + int(n * n * extra))
}

/// `max_k δ(n,k)` over tight parameters, with a maximizing `k`.
pub fn max_delta(n: i64, q: &[i64]) -> Result<(i64, Vec<i64>), DegreeError> {
    let d = qip::maximize_degree(q, n)?;
    let m = q.len() as i64 - 1;
    let value = n * (n + 2) * q.iter().sum::<i64>() - 2 * (m - 1) * n - 2 * d.min_value;
    let mut k = vec![d.t_star];
    k.extend(d.k);
    Ok((value, k))
}

fn check_shape(q: &[i64]) -> Result<(), DegreeError> {
    if q.len() < 3 {
        return Err(DegreeError::HypothesisViolation("need at least three tangles".into()));
    }
    if !(q[0] < -1 && q[1..].iter().all(|&x| x > 1)) {
        return Err(DegreeError::HypothesisViolation("need q_0 < -1 < 1 < q_1, ..., q_m".into()));
    }
    Ok(())
}

/// Whether `q` meets the parity hypotheses: every entry odd and `m` even.
pub fn is_strict(q: &[i64]) -> bool {
    q.len() >= 3 && q[0] < -1 && q[1..].iter().all(|&x| x > 1) && q.iter().all(|x| x % 2 != 0) && (q.len() - 1) % 2 == 0
}

/// Jones slope and normalized Euler characteristic of `P(q_0, ..., q_m)`.
/// With `strict` set, inputs outside the parity hypotheses are rejected.
pub fn pretzel_js_jx(q: &[i64], strict: bool) -> Result<DegreeQuadratic, DegreeError> {
    check_shape(q)?;
    let strict_ok = is_strict(q);
    if strict && !strict_ok {
        return Err(DegreeError::HypothesisViolation("entries must be odd and m even".into()));
    }
    let (s, s1) = s_and_s1(q)?;
    let m = int(q.len() as i64 - 1);
    let base = int(-2) * (&m - int(1));
    let case = DegreeCase::classify(&s, &s1);
    let mut notes = Vec::new();
    let (js, jx, hint) = match case {
        DegreeCase::Concave => (int(-2) * &s, int(-2) * &s1 + int(4) * &s + &base, SurfaceHint::SStar),
        DegreeCase::Linear | DegreeCase::Flat => {
            if s1.is_negative() {
                (int(0), int(-2) * &s1 + &base, SurfaceHint::SStar)
            } else {
                (int(0), base.clone(), SurfaceHint::Reference)
            }
        }
        DegreeCase::Convex => (int(0), base.clone(), SurfaceHint::Reference),
    };
    if case == DegreeCase::Flat {
        notes.push("s = s1 = 0: non-cancellation of the leading coefficient relies on the parity hypotheses".into());
    }
    if !strict_ok {
        notes.push("outside theorem hypotheses".into());
    }
    Ok(DegreeQuadratic { js, jx, s, s1, case, surface_hint: hint, strict_ok, notes })
}

/// Degree shift of `⟨K^n⟩` under one TR-move, as `(n^2, n)` coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrMove {
    /// `1/t -> r * 1/t` with `r, t < 0`.
    Tr1Neg { r: i64 },
    /// `1/t -> (1/r_1 ⊕ r_2) * 1/t` with `r_1, r_2, t < 0`.
    Tr2Neg { r1: i64, r2: i64 },
    /// `t -> (r_1 * 1/r_2) ⊕ t` with `r_1, r_2, t > 0`.
    TrPos { r1: i64, r2: i64 },
}

pub fn tr_move_shift(mv: TrMove) -> Result<(i64, i64), DegreeError> {
    match mv {
        TrMove::Tr1Neg { r } if r < 0 => Ok((-r, 2 * (-r - 1))),
        TrMove::Tr2Neg { r1, r2 } if r1 < 0 && r2 < 0 => Ok((-(r1 + r2), -2 * r2)),
        TrMove::TrPos { r1, r2 } if r1 > 0 && r2 > 0 => Ok((r1 + r2, 2 * r2)),
        TrMove::Tr1Neg { .. } => Err(DegreeError::SignViolation("TR1- needs r < 0")),
        TrMove::Tr2Neg { .. } => Err(DegreeError::SignViolation("TR2- needs r1, r2 < 0")),
        TrMove::TrPos { .. } => Err(DegreeError::SignViolation("TR+ needs r1, r2 > 0")),
    }
}

/// The TR-moves that turn the special knot of a Montesinos knot into its standard diagram.
pub fn tr_moves(k: &MontesinosKnot) -> Vec<TrMove> {
    let cfs = k.expansions();
    let mut moves = Vec::new();
    for cf in &cfs[1..] {
        let l = cf.len_index();
        let mut j = 2;
        while j + 2 <= l {
            moves.push(TrMove::TrPos { r1: cf.term(j + 2), r2: cf.term(j + 1) });
            j += 2;
        }
    }
    let ap = associated_pretzel(k);
    if ap.q0_prime != 0 {
        let r0 = &cfs[0];
        let l = r0.len_index();
        let mut j = 1;
        while j + 2 < l {
            moves.push(TrMove::Tr2Neg { r1: r0.term(j + 2), r2: r0.term(j + 1) });
            j += 2;
        }
        moves.push(TrMove::Tr1Neg { r: r0.term(l) });
    }
    moves
}

/// The bookkeeping terms of the Montesinos formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corrections {
    pub q0_prime: i64,
    pub r0_2: i64,
    pub r0_bracket: i64,
    pub r0_bracket_o: i64,
    pub sum_ri2_minus_1: i64,
    pub sum_ri_bracket: i64,
    pub sum_ri_bracket_e: i64,
    pub writhe_p: i64,
    pub writhe_k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MontesinosDegree {
    pub pretzel: Vec<i64>,
    pub pretzel_degree: DegreeQuadratic,
    pub degree: DegreeQuadratic,
    pub corrections: Corrections,
}

/// Writhe of the standard diagram of `P(q)`.
pub fn pretzel_writhe(q: &[i64]) -> Result<i64, DegreeError> {
    Ok(Diagram::from_row(&pretzel_row(&PretzelKnot::unchecked(q.to_vec()))).writhe()?)
}

pub fn montesinos_writhe(k: &MontesinosKnot) -> Result<i64, DegreeError> {
    Ok(Diagram::from_row(&montesinos_row(k)).writhe()?)
}

/// Jones slope and normalized Euler characteristic of a reduced Montesinos knot, obtained
/// from the associated pretzel knot and the continued fraction bookkeeping.
pub fn montesinos_js_jx(k: &MontesinosKnot, strict: bool) -> Result<MontesinosDegree, DegreeError> {
    let ap = associated_pretzel(k);
    let q = ap.q.clone();
    if strict {
        if !is_strict(&q) {
            return Err(DegreeError::HypothesisViolation("associated pretzel entries must be odd and m even".into()));
        }
        if k.fractions().iter().any(|r| r.abs() >= int(1)) {
            return Err(DegreeError::HypothesisViolation("need |r_i| < 1".into()));
        }
    }
    let p = pretzel_js_jx(&q, false)?;
    let fr = k.fractions();
    let r0 = &k.expansions()[0];
    let b0 = bracket_sums(&fr[0]);
    let (mut sum2, mut sum_b, mut sum_be) = (0, 0, 0);
    for r in &fr[1..] {
        let cf = crate::exact::even_length_cfe(r);
        let b = bracket_sums(r);
        sum2 += cf.term(2) - 1;
        sum_b += b.total;
        sum_be += b.e_sum;
    }
    let c = Corrections {
        q0_prime: ap.q0_prime,
        r0_2: r0.term(2),
        r0_bracket: b0.total,
        r0_bracket_o: b0.o_sum,
        sum_ri2_minus_1: sum2,
        sum_ri_bracket: sum_b,
        sum_ri_bracket_e: sum_be,
        writhe_p: pretzel_writhe(&q).unwrap_or(-q.iter().sum::<i64>()),
        writhe_k: montesinos_writhe(k)?,
    };
    let js = &p.js - int(c.q0_prime) - int(c.r0_bracket) - int(c.writhe_p) + int(c.writhe_k) + int(c.sum_ri2_minus_1) + int(c.sum_ri_bracket);
    let jx = &p.jx - rat(2 * c.q0_prime, c.r0_2) + int(2 * c.r0_bracket_o) - int(2 * c.sum_ri2_minus_1) - int(2 * c.sum_ri_bracket_e);
    let strict_ok = p.strict_ok;
    let mut notes = p.notes.clone();
    notes.retain(|n| n != "outside theorem hypotheses");
    if pretzel_writhe(&q).is_err() {
        notes.push("associated pretzel is a link; its writhe is taken as -Σq".into());
    }
    if !strict_ok {
        notes.push("outside theorem hypotheses".into());
    }
    let degree = DegreeQuadratic { js, jx, s: p.s.clone(), s1: p.s1.clone(), case: p.case, surface_hint: p.surface_hint, strict_ok, notes };
    Ok(MontesinosDegree { pretzel: q, pretzel_degree: p, degree, corrections: c })
}

/// `deg J_{P,n+1}` predicted by the state sum: `ω n(n+2) + max_k δ(n,k)`.
pub fn pretzel_degree_prediction(q: &[i64], n: i64) -> Result<i64, DegreeError> {
    let w = pretzel_writhe(q)?;
    Ok(w * n * (n + 2) + max_delta(n, q)?.0)
}

/// `deg J_{K,n+1}` predicted from the special knot degree plus the TR-move shifts.
pub fn montesinos_degree_prediction(k: &MontesinosKnot, n: i64) -> Result<i64, DegreeError> {
    let ap = associated_pretzel(k);
    let (special, _) = max_delta(n, &ap.q)?;
    let extra: i64 = ap.qi_prime.iter().map(|&x| x - 1).sum();
    let mut deg = special + n * n * extra;
    for mv in tr_moves(k) {
        let (a, b) = tr_move_shift(mv)?;
        deg += a * n * n + b * n;
    }
    Ok(montesinos_writhe(k)? * n * (n + 2) + deg)
}

/// All `P(q_0, q_1, ..., q_m)` with `m ∈ {2, 3}`, `q0_min ≤ q_0 ≤ -2`, `3 ≤ q_i ≤ qi_max`,
/// `s ≥ 0` and `s_1 = 0` that are knots. Positive entries are listed in increasing order.
pub fn exceptional_scan(q0_min: i64, qi_max: i64) -> Vec<Vec<i64>> {
    fn positives(m: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            positives(m, x, hi, cur, out);
            cur.pop();
        }
    }
    let mut found = Vec::new();
    for m in 2..=3 {
        let mut tails = Vec::new();
        positives(m, 3, qi_max, &mut Vec::new(), &mut tails);
        for q0 in q0_min..=-2 {
            for tail in &tails {
                let mut q = vec![q0];
                q.extend(tail);
                let Ok((s, s1)) = s_and_s1(&q) else { continue };
                if s.is_negative() || !s1.is_zero() {
                    continue;
                }
                let fr: Vec<Rational> = q.iter().map(|&x| rat(1, x)).collect();
                if classify(&fr) == LinkType::Knot {
                    found.push(q);
                }
            }
        }
    }
    found.sort();
    found
}
