use crate::exact::{even_length_cfe, format_rational, parse_rational, rat, ContinuedFraction, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("cannot parse knot spec {0:?}: expected m:r0,r1,... or p:q0,q1,...")]
    Parse(String),
    #[error("need at least three tangles, got {0}")]
    TooFewTangles(usize),
    #[error("tangle fraction {0} is zero or an integer")]
    IntegralTangle(String),
    #[error("the fractions describe a link with more than one component")]
    NotAKnot,
    #[error("reduced form has {0} negative tangles; exactly one is supported")]
    NegativeTangleCount(usize),
    #[error("all tangles have the same sign and cannot be brought into 0 < |r| < 1")]
    NotReducible,
    #[error("pretzel entries must satisfy |q| > 1, got {0}")]
    SmallPretzelEntry(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinkType {
    Knot,
    Link,
}

/// Knot (vs link) parity rule on the fractions of the tangles.
pub fn classify(fractions: &[Rational]) -> LinkType {
    let even_dens = fractions.iter().filter(|r| r.denom().is_even()).count();
    let odd_nums = fractions.iter().filter(|r| r.numer().is_odd()).count();
    match even_dens {
        1 => LinkType::Knot,
        0 if odd_nums % 2 == 1 => LinkType::Knot,
        _ => LinkType::Link,
    }
}

/// A Montesinos knot `K(r0, ..., rm)` in reduced form: `r0 < 0 < r1, ..., rm` and `|ri| < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MontesinosKnot {
    fractions: Vec<Rational>,
}

impl MontesinosKnot {
    /// Normalizes and validates; see [`normalize_reduced`].
    pub fn new(fractions: Vec<Rational>) -> Result<Self, KnotError> {
        normalize_reduced(&fractions)
    }

    pub fn fractions(&self) -> &[Rational] {
        &self.fractions
    }

    /// Number of positive tangles.
    pub fn m(&self) -> usize {
        self.fractions.len() - 1
    }

    pub fn expansions(&self) -> Vec<ContinuedFraction> {
        self.fractions.iter().map(even_length_cfe).collect()
    }

    pub fn from_pretzel(p: &PretzelKnot) -> Self {
        Self { fractions: p.q.iter().map(|&q| rat(1, q)).collect() }
    }

    /// `Some` when every tangle is `1/q`.
    pub fn as_pretzel(&self) -> Option<PretzelKnot> {
        let q = self
            .fractions
            .iter()
            .map(|r| {
                let unit = r.numer().abs().is_one();
                unit.then(|| i64::try_from(r.numer() * r.denom()).ok()).flatten()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(PretzelKnot { q })
    }

    pub fn spec(&self) -> String {
        let body = self.fractions.iter().map(format_rational).collect::<Vec<_>>().join(",");
        format!("m:{body}")
    }
}

impl fmt::Display for MontesinosKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.fractions.iter().map(format_rational).collect::<Vec<_>>().join(", ");
        write!(f, "K({body})")
    }
}

/// A pretzel knot `P(q0, ..., qm)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PretzelKnot {
    pub q: Vec<i64>,
}

impl PretzelKnot {
    pub fn new(q: Vec<i64>) -> Result<Self, KnotError> {
        if q.len() < 3 {
            return Err(KnotError::TooFewTangles(q.len()));
        }
        if let Some(&x) = q.iter().find(|x| x.abs() <= 1) {
            return Err(KnotError::SmallPretzelEntry(x));
        }
        let fr: Vec<Rational> = q.iter().map(|&x| rat(1, x)).collect();
        if classify(&fr) == LinkType::Link {
            return Err(KnotError::NotAKnot);
        }
        Ok(Self { q })
    }

    /// Any entries at all, including `|q| <= 1`; used for small test diagrams such as `P(1,1,1)`.
    pub fn unchecked(q: Vec<i64>) -> Self {
        Self { q }
    }

    pub fn m(&self) -> usize {
        self.q.len() - 1
    }

    /// Exactly one negative entry, placed first.
    pub fn has_one_negative_first(&self) -> bool {
        self.q[0] < 0 && self.q[1..].iter().all(|&x| x > 0)
    }

    /// Hypotheses of the pretzel theorem: `q0 < -1 < 1 < qi`, all odd, `m >= 2` even.
    pub fn is_strict(&self) -> bool {
        let m = self.m();
        self.q[0] < -1
            && self.q[1..].iter().all(|&x| x > 1)
            && self.q.iter().all(|x| x.rem_euclid(2) == 1)
            && m >= 2
            && m % 2 == 0
    }

    pub fn crossing_count(&self) -> u64 {
        self.q.iter().map(|x| x.unsigned_abs()).sum()
    }

    pub fn mirror(&self) -> Self {
        Self { q: self.q.iter().map(|x| -x).collect() }
    }

    pub fn spec(&self) -> String {
        let body = self.q.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("p:{body}")
    }
}

impl fmt::Display for PretzelKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.q.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "P({body})")
    }
}

/// Parsed knot input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotSpec {
    Montesinos(Vec<Rational>),
    Pretzel(Vec<i64>),
}

impl KnotSpec {
    pub fn parse(s: &str) -> Result<Self, KnotError> {
        let err = || KnotError::Parse(s.to_string());
        let (kind, body) = s.trim().split_once(':').ok_or_else(err)?;
        let items: Vec<&str> = body.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
        match kind.trim() {
            "m" => items.iter().map(|t| parse_rational(t)).collect::<Option<Vec<_>>>().map(KnotSpec::Montesinos).ok_or_else(err),
            "p" => items.iter().map(|t| t.parse::<i64>().ok()).collect::<Option<Vec<_>>>().map(KnotSpec::Pretzel).ok_or_else(err),
            _ => Err(err()),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Montesinos(r) => {
                write!(f, "m:{}", r.iter().map(format_rational).collect::<Vec<_>>().join(","))
            }
            KnotSpec::Pretzel(q) => {
                write!(f, "p:{}", q.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
        }
    }
}

/// Moves integer parts between tangles until `0 < |ri| < 1`, then rotates the unique
/// negative tangle to the front.
///
/// Each step subtracts 1 from the largest fraction and adds 1 to the smallest, which
/// preserves the sum and every residue mod 1.
pub fn normalize_reduced(fractions: &[Rational]) -> Result<MontesinosKnot, KnotError> {
    if fractions.len() < 3 {
        return Err(KnotError::TooFewTangles(fractions.len()));
    }
    if let Some(r) = fractions.iter().find(|r| r.is_integer()) {
        return Err(KnotError::IntegralTangle(format_rational(r)));
    }
    if classify(fractions) == LinkType::Link {
        return Err(KnotError::NotAKnot);
    }
    let one = Rational::one();
    let mut r = fractions.to_vec();
    loop {
        let (imax, imin) = extremes(&r);
        let (hi, lo) = (r[imax].clone(), r[imin].clone());
        let too_big = hi >= one;
        let too_small = lo <= -one.clone();
        if !too_big && !too_small {
            break;
        }
        let movable = (too_big && lo.is_negative()) || (too_small && hi.is_positive());
        if !movable {
            return Err(KnotError::NotReducible);
        }
        r[imax] -= &one;
        r[imin] += &one;
    }
    let negatives: Vec<usize> = (0..r.len()).filter(|&i| r[i].is_negative()).collect();
    if negatives.len() != 1 {
        return Err(KnotError::NegativeTangleCount(negatives.len()));
    }
    r.rotate_left(negatives[0]);
    debug_assert!(r.iter().all(|x| !x.is_zero()));
    Ok(MontesinosKnot { fractions: r })
}

fn extremes(r: &[Rational]) -> (usize, usize) {
    let mut imax = 0;
    let mut imin = 0;
    for i in 1..r.len() {
        if r[i] > r[imax] {
            imax = i;
        }
        if r[i] < r[imin] {
            imin = i;
        }
    }
    (imax, imin)
}

/// The associated pretzel vector `q` and the integers `q'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociatedPretzelData {
    pub q: Vec<i64>,
    pub q0_prime: i64,
    pub qi_prime: Vec<i64>,
}

pub fn associated_pretzel(k: &MontesinosKnot) -> AssociatedPretzelData {
    let cfs = k.expansions();
    let r0 = &cfs[0];
    let q0 = if r0.len_index() == 2 && r0.term(2) == -1 { r0.term(1) - 1 } else { r0.term(1) };
    let mut q = vec![q0];
    q.extend(cfs[1..].iter().map(|c| c.term(1) + 1));
    let q0_prime = if k.fractions()[0] == rat(1, q0) { 0 } else { r0.term(2) };
    let qi_prime = cfs[1..].iter().map(|c| c.term(2)).collect();
    AssociatedPretzelData { q, q0_prime, qi_prime }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(p, q)| rat(p, q)).collect()
    }

    fn example() -> Vec<Rational> {
        fr(&[(-46, 327), (35, 151), (5, 31), (16, 35), (1, 5)])
    }

    #[test]
    fn parity_rule() {
        assert_eq!(classify(&fr(&[(-1, 3), (-3, 10), (1, 4), (3, 7)])), LinkType::Link);
        assert_eq!(classify(&fr(&[(-1, 3), (1, 3), (1, 3)])), LinkType::Knot);
        assert_eq!(classify(&fr(&[(-1, 2), (1, 3), (1, 3)])), LinkType::Knot);
        assert_eq!(classify(&fr(&[(-1, 3), (1, 3), (1, 3), (1, 3)])), LinkType::Link);
        assert_eq!(classify(&example()), LinkType::Knot);
    }

    #[test]
    fn normalization() {
        let k = normalize_reduced(&example()).unwrap();
        assert_eq!(k.fractions(), &example()[..]);
        let k = normalize_reduced(&fr(&[(-1, 3), (1, 4), (3, 7)])).unwrap();
        assert_eq!(k.fractions(), &fr(&[(-1, 3), (1, 4), (3, 7)])[..]);
        let k = normalize_reduced(&fr(&[(1, 3), (-4, 3), (4, 3)])).unwrap();
        assert_eq!(k.fractions(), &fr(&[(-1, 3), (1, 3), (1, 3)])[..]);
        assert_eq!(normalize_reduced(&fr(&[(-5, 3), (1, 3), (1, 3)])), Err(KnotError::NegativeTangleCount(2)));
        assert_eq!(normalize_reduced(&fr(&[(-4, 3), (1, 3), (1, 3)])), Err(KnotError::NotAKnot));
        assert_eq!(normalize_reduced(&fr(&[(5, 3), (1, 3), (1, 3)])), Err(KnotError::NotReducible));
        assert_eq!(normalize_reduced(&fr(&[(-1, 3), (1, 4), (1, 4)])), Err(KnotError::NotAKnot));
    }

    #[test]
    fn worked_example_pretzel() {
        let k = MontesinosKnot::new(example()).unwrap();
        let a = associated_pretzel(&k);
        assert_eq!(a.q, vec![-7, 5, 7, 3, 5]);
        assert_eq!(a.q0_prime, -9);
        assert_eq!(a.qi_prime, vec![3, 5, 5, 1]);
    }

    #[test]
    fn pretzel_is_its_own_associate() {
        let p = PretzelKnot::new(vec![-3, 3, 3]).unwrap();
        let a = associated_pretzel(&MontesinosKnot::from_pretzel(&p));
        assert_eq!(a.q, vec![-3, 3, 3]);
        assert_eq!(a.q0_prime, 0);
        assert_eq!(a.qi_prime, vec![1, 1]);
        assert_eq!(MontesinosKnot::from_pretzel(&p).as_pretzel(), Some(p));
    }

    #[test]
    fn parse_specs() {
        let s = KnotSpec::parse("m:-46/327,35/151,5/31,16/35,1/5").unwrap();
        assert_eq!(s, KnotSpec::Montesinos(example()));
        assert_eq!(s.to_string(), "m:-46/327,35/151,5/31,16/35,1/5");
        assert_eq!(KnotSpec::parse("p:-7,5,7,3,5").unwrap(), KnotSpec::Pretzel(vec![-7, 5, 7, 3, 5]));
        assert!(KnotSpec::parse("q:1").is_err());
        assert!(KnotSpec::parse("p:1,x").is_err());
    }

    #[test]
    fn strictness() {
        assert!(PretzelKnot::new(vec![-7, 5, 7, 3, 5]).unwrap().is_strict());
        assert!(!PretzelKnot::new(vec![-2, 3, 7]).unwrap().is_strict());
        assert_eq!(PretzelKnot::new(vec![-3, 5, 5]).unwrap().crossing_count(), 13);
        assert_eq!(PretzelKnot::new(vec![-2, 4, 3]), Err(KnotError::NotAKnot));
    }
}
