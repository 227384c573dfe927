//! Rational functions whose denominators are products of the quantum integers `Δ_k`.

use super::jw::delta_n;
use crate::exact::LaurentPoly;
use std::cmp::max;

/// `num / Π_k Δ_k^{den[k-1]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFrac {
    num: LaurentPoly,
    den: Vec<u32>,
}

impl QFrac {
    pub fn zero() -> Self {
        Self::poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::poly(LaurentPoly::one())
    }

    pub fn poly(num: LaurentPoly) -> Self {
        Self { num, den: Vec::new() }
    }

    /// `num / Δ_k`.
    pub fn over_delta(num: LaurentPoly, k: usize) -> Self {
        let mut den = vec![0; k];
        den[k - 1] = 1;
        Self { num, den }.reduced()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn denominator(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one();
        for (i, &e) in self.den.iter().enumerate() {
            d = &d * &delta_n(i + 1).pow(e);
        }
        d
    }

    /// The Laurent polynomial equal to `self`, if there is one.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.denominator())
    }

    /// Cancels every `Δ_k` factor that divides the numerator.
    pub fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for k in 0..self.den.len() {
            if self.den[k] == 0 {
                continue;
            }
            let d = delta_n(k + 1);
            while self.den[k] > 0 {
                match self.num.div_exact(&d) {
                    Some(q) => {
                        self.num = q;
                        self.den[k] -= 1;
                    }
                    None => break,
                }
            }
        }
        while self.den.last() == Some(&0) {
            self.den.pop();
        }
        self
    }

    fn lift(&self, target: &[u32]) -> LaurentPoly {
        let mut n = self.num.clone();
        for (k, &t) in target.iter().enumerate() {
            let have = self.den.get(k).copied().unwrap_or(0);
            if t > have {
                n = &n * &delta_n(k + 1).pow(t - have);
            }
        }
        n
    }

    pub fn add(&self, other: &QFrac) -> QFrac {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return QFrac { num: &self.num + &other.num, den: self.den.clone() };
        }
        let len = max(self.den.len(), other.den.len());
        let den: Vec<u32> = (0..len)
            .map(|k| max(self.den.get(k).copied().unwrap_or(0), other.den.get(k).copied().unwrap_or(0)))
            .collect();
        QFrac { num: &self.lift(&den) + &other.lift(&den), den }
    }

    pub fn neg(&self) -> QFrac {
        QFrac { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &QFrac) -> QFrac {
        if self.is_zero() || other.is_zero() {
            return QFrac::zero();
        }
        let len = max(self.den.len(), other.den.len());
        let den = (0..len)
            .map(|k| self.den.get(k).copied().unwrap_or(0) + other.den.get(k).copied().unwrap_or(0))
            .collect();
        QFrac { num: &self.num * &other.num, den }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> QFrac {
        QFrac { num: &self.num * p, den: self.den.clone() }
    }
}
