//! Algebraic 2-tangles in standard form.
//!
//! A tangle has four ends NW, NE, SE, SW. `Sum` places two tangles side by side
//! (NE of the left joined to NW of the right, SE to SW), `Product` stacks the first
//! above the second (SW to NW, SE to NE). A single crossing is both the horizontal
//! tangle `[±1]` and the vertical tangle `1/[±1]`.

use crate::exact::ContinuedFraction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tangle {
    Zero,
    Infinity,
    /// One crossing; `+1` for the crossing of a positive twist.
    Crossing(i8),
    Sum(Box<Tangle>, Box<Tangle>),
    Product(Box<Tangle>, Box<Tangle>),
}

/// Anything a tangle expression can be evaluated into.
pub trait TangleAlgebra {
    type Element;
    fn zero(&mut self) -> Self::Element;
    fn infinity(&mut self) -> Self::Element;
    fn crossing(&mut self, sign: i8) -> Self::Element;
    fn sum(&mut self, a: Self::Element, b: Self::Element) -> Self::Element;
    fn product(&mut self, a: Self::Element, b: Self::Element) -> Self::Element;
}

impl Tangle {
    /// Horizontal twist `[a]`.
    pub fn horizontal(a: i64) -> Tangle {
        let s = a.signum() as i8;
        (0..a.unsigned_abs()).fold(None, |acc: Option<Tangle>, _| {
            Some(match acc {
                None => Tangle::Crossing(s),
                Some(t) => Tangle::Sum(Box::new(t), Box::new(Tangle::Crossing(s))),
            })
        })
        .unwrap_or(Tangle::Zero)
    }

    /// Vertical twist `1/[a]`.
    pub fn vertical(a: i64) -> Tangle {
        let s = a.signum() as i8;
        (0..a.unsigned_abs()).fold(None, |acc: Option<Tangle>, _| {
            Some(match acc {
                None => Tangle::Crossing(s),
                Some(t) => Tangle::Product(Box::new(t), Box::new(Tangle::Crossing(s))),
            })
        })
        .unwrap_or(Tangle::Infinity)
    }

    /// Standard form of `[a0, ..., al]`: start from the innermost twist, then alternately
    /// multiply by vertical twists (odd index) and add horizontal twists (even index).
    pub fn rational(cf: &ContinuedFraction) -> Tangle {
        let a = &cf.terms;
        let l = a.len() - 1;
        let mut t = if l % 2 == 0 { Tangle::horizontal(a[l]) } else { Tangle::vertical(a[l]) };
        for j in (0..l).rev() {
            t = if j % 2 == 1 {
                Tangle::product(t, Tangle::vertical(a[j]))
            } else {
                Tangle::sum(t, Tangle::horizontal(a[j]))
            };
        }
        t
    }

    /// `T ⊕ Zero` and `T * Infinity` are dropped so the expression mirrors the drawn diagram.
    pub fn sum(a: Tangle, b: Tangle) -> Tangle {
        match (a, b) {
            (t, Tangle::Zero) | (Tangle::Zero, t) => t,
            (a, b) => Tangle::Sum(Box::new(a), Box::new(b)),
        }
    }

    pub fn product(a: Tangle, b: Tangle) -> Tangle {
        match (a, b) {
            (t, Tangle::Infinity) | (Tangle::Infinity, t) => t,
            (a, b) => Tangle::Product(Box::new(a), Box::new(b)),
        }
    }

    pub fn crossings(&self) -> usize {
        match self {
            Tangle::Zero | Tangle::Infinity => 0,
            Tangle::Crossing(_) => 1,
            Tangle::Sum(a, b) | Tangle::Product(a, b) => a.crossings() + b.crossings(),
        }
    }

    pub fn mirror(&self) -> Tangle {
        match self {
            Tangle::Crossing(s) => Tangle::Crossing(-s),
            Tangle::Sum(a, b) => Tangle::Sum(Box::new(a.mirror()), Box::new(b.mirror())),
            Tangle::Product(a, b) => Tangle::Product(Box::new(a.mirror()), Box::new(b.mirror())),
            t => t.clone(),
        }
    }

    pub fn eval<A: TangleAlgebra>(&self, alg: &mut A) -> A::Element {
        match self {
            Tangle::Zero => alg.zero(),
            Tangle::Infinity => alg.infinity(),
            Tangle::Crossing(s) => alg.crossing(*s),
            Tangle::Sum(a, b) => {
                let (x, y) = (a.eval(alg), b.eval(alg));
                alg.sum(x, y)
            }
            Tangle::Product(a, b) => {
                let (x, y) = (a.eval(alg), b.eval(alg));
                alg.product(x, y)
            }
        }
    }

    /// Fraction of the tangle, using `T ⊕ S -> t + s` and `T * S -> 1/(1/t + 1/s)`.
    pub fn fraction(&self) -> Option<crate::exact::Rational> {
        struct Frac;
        impl TangleAlgebra for Frac {
            type Element = Option<(i128, i128)>;
            fn zero(&mut self) -> Self::Element {
                Some((0, 1))
            }
            fn infinity(&mut self) -> Self::Element {
                Some((1, 0))
            }
            fn crossing(&mut self, s: i8) -> Self::Element {
                Some((s as i128, 1))
            }
            fn sum(&mut self, a: Self::Element, b: Self::Element) -> Self::Element {
                let ((p, q), (r, s)) = (a?, b?);
                Some((p * s + r * q, q * s))
            }
            fn product(&mut self, a: Self::Element, b: Self::Element) -> Self::Element {
                let ((p, q), (r, s)) = (a?, b?);
                Some((p * r, q * r + p * s))
            }
        }
        let (p, q) = self.eval(&mut Frac)?;
        (q != 0).then(|| crate::exact::Rational::new(p.into(), q.into()))
    }
}

/// The row `T0 ⊕ T1 ⊕ ... ⊕ Tm` whose numerator closure is a Montesinos diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleRow {
    pub tangles: Vec<Tangle>,
}

impl TangleRow {
    pub fn crossings(&self) -> usize {
        self.tangles.iter().map(Tangle::crossings).sum()
    }

    pub fn mirror(&self) -> TangleRow {
        TangleRow { tangles: self.tangles.iter().map(Tangle::mirror).collect() }
    }

    /// `((T0 ⊕ T1) ⊕ ...) ⊕ Tm`.
    pub fn left_fold(&self) -> Tangle {
        let mut it = self.tangles.iter().cloned();
        let first = it.next().unwrap_or(Tangle::Zero);
        it.fold(first, |acc, t| Tangle::Sum(Box::new(acc), Box::new(t)))
    }

    /// `T0 ⊕ (T1 ⊕ (... ⊕ Tm))`.
    pub fn right_fold(&self) -> Tangle {
        let mut it = self.tangles.iter().rev().cloned();
        let last = it.next().unwrap_or(Tangle::Zero);
        it.fold(last, |acc, t| Tangle::Sum(Box::new(t), Box::new(acc)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{even_length_cfe, rat};

    #[test]
    fn fractions_of_standard_tangles() {
        for (p, q) in [(13, 36), (63, 202), (-46, 327), (35, 151), (5, 31), (16, 35), (1, 5), (-1, 3)] {
            let r = rat(p, q);
            let t = Tangle::rational(&even_length_cfe(&r));
            assert_eq!(t.fraction(), Some(r), "{p}/{q}");
        }
        assert_eq!(Tangle::vertical(3).fraction(), Some(rat(1, 3)));
        assert_eq!(Tangle::horizontal(-2).fraction(), Some(rat(-2, 1)));
    }

    #[test]
    fn crossing_counts() {
        let cf = even_length_cfe(&rat(-46, 327));
        assert_eq!(Tangle::rational(&cf).crossings(), 21);
        assert_eq!(Tangle::rational(&even_length_cfe(&rat(1, 5))).crossings(), 5);
    }
}
