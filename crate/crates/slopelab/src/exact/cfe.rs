//! Continued fraction expansions.
//!
//! `[a0, a1, ..., al]` denotes `a0 + 1/(a1 + 1/(... + 1/al))` and the negative
//! flavor `[[b0, b1, ..., bk]]` denotes `b0 - 1/(b1 - 1/(... - 1/bk))`.

use super::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Positive,
    EvenLengthPositive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ContinuedFraction {
    pub terms: Vec<i64>,
    pub flavor: Flavor,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CfeError {
    #[error("continued fraction {0:?} has a zero intermediate denominator")]
    Degenerate(Vec<i64>),
    #[error("empty continued fraction")]
    Empty,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<i64>, flavor: Flavor) -> Self {
        Self { terms, flavor }
    }

    /// Index length `l` of `[a0, ..., al]`.
    pub fn len_index(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// `r[j]`, zero past the end.
    pub fn term(&self, j: usize) -> i64 {
        self.terms.get(j).copied().unwrap_or(0)
    }

    pub fn eval(&self) -> Result<Rational, CfeError> {
        eval_cfe(self)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ");
        match self.flavor {
            Flavor::Negative => write!(f, "[[{body}]]"),
            _ => write!(f, "[{body}]"),
        }
    }
}

fn quotient_i64(x: &BigInt) -> i64 {
    i64::try_from(x.clone()).expect("partial quotient exceeds i64")
}

/// Euclid with truncation toward zero, so every quotient past the first shares the sign of `r`.
pub fn positive_cfe(r: &Rational) -> ContinuedFraction {
    let mut terms = Vec::new();
    let mut x = r.clone();
    loop {
        let b = x.trunc();
        terms.push(quotient_i64(b.numer()));
        let rem = &x - &b;
        if rem.is_zero() {
            break;
        }
        x = rem.recip();
    }
    ContinuedFraction::new(terms, Flavor::Positive)
}

/// Splits the last quotient when the positive expansion has odd index length.
pub fn even_length_cfe(r: &Rational) -> ContinuedFraction {
    let mut terms = positive_cfe(r).terms;
    let l = terms.len() - 1;
    if l % 2 == 1 {
        let last = terms[l];
        if r.is_positive() {
            terms[l] = last - 1;
            terms.push(1);
        } else {
            terms[l] = last + 1;
            terms.push(-1);
        }
    }
    ContinuedFraction::new(terms, Flavor::EvenLengthPositive)
}

/// Negative expansion built with floors: every `b_j` with `j >= 1` is at most `-2`.
pub fn negative_cfe(r: &Rational) -> ContinuedFraction {
    let mut terms = Vec::new();
    let mut x = r.clone();
    loop {
        let b = x.floor();
        terms.push(quotient_i64(b.numer()));
        let rem = &x - &b;
        if rem.is_zero() {
            break;
        }
        x = -rem.recip();
    }
    ContinuedFraction::new(terms, Flavor::Negative)
}

pub fn eval_cfe(cf: &ContinuedFraction) -> Result<Rational, CfeError> {
    let (last, rest) = cf.terms.split_last().ok_or(CfeError::Empty)?;
    let mut acc = Rational::from_integer(BigInt::from(*last));
    for &a in rest.iter().rev() {
        if acc.is_zero() {
            return Err(CfeError::Degenerate(cf.terms.clone()));
        }
        let a = Rational::from_integer(BigInt::from(a));
        acc = match cf.flavor {
            Flavor::Negative => a - acc.recip(),
            _ => a + acc.recip(),
        };
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BracketSums {
    pub e_sum: i64,
    pub o_sum: i64,
    pub total: i64,
}

/// `[r]_e`, `[r]_o` and `[r]` from the even length expansion, indices `>= 3` only.
pub fn bracket_sums(r: &Rational) -> BracketSums {
    let cf = even_length_cfe(r);
    let (mut e, mut o) = (0, 0);
    for (j, &a) in cf.terms.iter().enumerate().skip(3) {
        if j.is_even() {
            e += a;
        } else {
            o += a;
        }
    }
    BracketSums { e_sum: e, o_sum: o, total: e + o }
}
