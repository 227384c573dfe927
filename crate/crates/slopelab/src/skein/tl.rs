//! Temperley-Lieb elements as formal combinations of crossingless matchings.
//!
//! Boundary points are numbered with the top row first (left to right) and the
//! bottom row after it (left to right).

use super::jw::delta_n;
use super::qfrac::QFrac;
use crate::exact::LaurentPoly;
use std::collections::BTreeMap;

/// A perfect matching of boundary points: `pairs[i]` is the partner of point `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching(pub Vec<u8>);

impl Matching {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Non-crossing with respect to the cyclic boundary order
    /// (top left to right, then bottom right to left).
    pub fn is_planar(&self, top: usize) -> bool {
        let n = self.0.len();
        let cyc = |i: usize| if i < top { i } else { top + (n - 1 - i) };
        let arcs: Vec<(usize, usize)> = (0..n)
            .filter(|&i| i < self.partner(i))
            .map(|i| {
                let (a, b) = (cyc(i), cyc(self.partner(i)));
                (a.min(b), a.max(b))
            })
            .collect();
        arcs.iter().all(|&(a, b)| arcs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    A,
    B,
}

/// How two matchings are glued: linked point pairs, and the order of the surviving points.
pub(crate) struct GluePlan {
    link: [Vec<Option<usize>>; 2],
    out: [Vec<Option<usize>>; 2],
    order: Vec<(Side, usize)>,
}

fn idx(s: Side) -> usize {
    match s {
        Side::A => 0,
        Side::B => 1,
    }
}

fn other(s: Side) -> Side {
    match s {
        Side::A => Side::B,
        Side::B => Side::A,
    }
}

impl GluePlan {
    pub(crate) fn new(a_len: usize, b_len: usize, links: &[(usize, usize)], order: Vec<(Side, usize)>) -> Self {
        let mut link = [vec![None; a_len], vec![None; b_len]];
        for &(a, b) in links {
            link[0][a] = Some(b);
            link[1][b] = Some(a);
        }
        let mut out = [vec![None; a_len], vec![None; b_len]];
        for (o, &(s, i)) in order.iter().enumerate() {
            out[idx(s)][i] = Some(o);
        }
        Self { link, out, order }
    }

    /// Glues two matchings, returning the outer matching and the number of closed loops.
    pub(crate) fn glue(&self, a: &[u8], b: &[u8]) -> (Matching, usize) {
        let m = [a, b];
        let mut seen = [vec![false; a.len()], vec![false; b.len()]];
        let mut result = vec![u8::MAX; self.order.len()];
        for (o, &(s0, i0)) in self.order.iter().enumerate() {
            if result[o] != u8::MAX {
                continue;
            }
            let (mut s, mut i) = (s0, i0);
            seen[idx(s)][i] = true;
            loop {
                let p = m[idx(s)][i] as usize;
                seen[idx(s)][p] = true;
                if let Some(o2) = self.out[idx(s)][p] {
                    result[o] = o2 as u8;
                    result[o2] = o as u8;
                    break;
                }
                i = self.link[idx(s)][p].expect("dangling point in glue plan");
                s = other(s);
                seen[idx(s)][i] = true;
            }
        }
        let mut loops = 0;
        for start in 0..a.len() {
            if seen[0][start] {
                continue;
            }
            loops += 1;
            let (mut s, mut i) = (Side::A, start);
            while !seen[idx(s)][i] {
                seen[idx(s)][i] = true;
                let p = m[idx(s)][i] as usize;
                seen[idx(s)][p] = true;
                i = self.link[idx(s)][p].expect("dangling point in glue plan");
                s = other(s);
            }
        }
        (Matching(result), loops)
    }
}

fn delta_power(k: usize, cache: &mut Vec<LaurentPoly>) -> LaurentPoly {
    while cache.len() <= k {
        let next = &cache[cache.len() - 1] * &delta_n(1);
        cache.push(next);
    }
    cache[k].clone()
}

/// Element of the Temperley-Lieb space with `top` points above and `bottom` below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    top: usize,
    bottom: usize,
    terms: BTreeMap<Matching, QFrac>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TLError {
    #[error("arity mismatch: {0} points meet {1} points")]
    Arity(usize, usize),
    #[error("trace needs a square element")]
    NotSquare,
}

impl TLElement {
    pub fn zero(top: usize, bottom: usize) -> Self {
        Self { top, bottom, terms: BTreeMap::new() }
    }

    pub fn from_matching(top: usize, bottom: usize, m: Matching, c: QFrac) -> Self {
        let mut x = Self::zero(top, bottom);
        x.add_term(m, c);
        x
    }

    pub fn identity(k: usize) -> Self {
        let pairs = (0..2 * k).map(|i| if i < k { (i + k) as u8 } else { (i - k) as u8 }).collect();
        Self::from_matching(k, k, Matching(pairs), QFrac::one())
    }

    /// The generator `e^i` on `k` strands, `1 ≤ i < k`: strands `i` and `i+1` turn back.
    pub fn generator(k: usize, i: usize) -> Self {
        assert!(i >= 1 && i < k, "generator index out of range");
        let mut pairs: Vec<u8> = Self::identity(k).terms.keys().next().unwrap().0.clone();
        let (a, b) = (i - 1, i);
        pairs[a] = b as u8;
        pairs[b] = a as u8;
        pairs[k + a] = (k + b) as u8;
        pairs[k + b] = (k + a) as u8;
        Self::from_matching(k, k, Matching(pairs), QFrac::one())
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &QFrac)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Matching) -> QFrac {
        self.terms.get(m).cloned().unwrap_or_else(QFrac::zero)
    }

    pub fn add_term(&mut self, m: Matching, c: QFrac) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(QFrac::zero);
        *entry = entry.add(&c).reduced();
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &TLElement) -> TLElement {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &QFrac) -> TLElement {
        let mut r = TLElement::zero(self.top, self.bottom);
        for (m, x) in &self.terms {
            r.add_term(m.clone(), x.mul(c).reduced());
        }
        r
    }

    pub fn retain(&mut self, keep: impl Fn(&Matching) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    /// Glues `self` (side A) to `other` (side B) along `plan`.
    pub(crate) fn glue(&self, other: &TLElement, plan: &GluePlan, top: usize, bottom: usize) -> TLElement {
        let mut acc: BTreeMap<Matching, QFrac> = BTreeMap::new();
        let mut powers = vec![LaurentPoly::one()];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (m, loops) = plan.glue(&ma.0, &mb.0);
                let mut c = ca.mul(cb);
                if loops > 0 {
                    c = c.mul_poly(&delta_power(loops, &mut powers));
                }
                let e = acc.entry(m).or_insert_with(QFrac::zero);
                *e = e.add(&c);
            }
        }
        let terms = acc
            .into_iter()
            .map(|(m, c)| (m, c.reduced()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        TLElement { top, bottom, terms }
    }

    /// Stacking product: `self` above `other`.
    pub fn multiply(&self, other: &TLElement) -> Result<TLElement, TLError> {
        if self.bottom != other.top {
            return Err(TLError::Arity(self.bottom, other.top));
        }
        let (t, k, b) = (self.top, self.bottom, other.bottom);
        let links: Vec<(usize, usize)> = (0..k).map(|i| (t + i, i)).collect();
        let order = (0..t).map(|i| (Side::A, i)).chain((0..b).map(|i| (Side::B, k + i))).collect();
        let plan = GluePlan::new(t + k, k + b, &links, order);
        Ok(self.glue(other, &plan, t, b))
    }

    /// Side by side: `self` on the left.
    pub fn tensor(&self, other: &TLElement) -> TLElement {
        let (ta, ba, tb, bb) = (self.top, self.bottom, other.top, other.bottom);
        let mut r = TLElement::zero(ta + tb, ba + bb);
        let map_a = |i: usize| if i < ta { i } else { ta + tb + (i - ta) };
        let map_b = |i: usize| if i < tb { ta + i } else { ta + tb + ba + (i - tb) };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut pairs = vec![0u8; ta + tb + ba + bb];
                for i in 0..ma.len() {
                    pairs[map_a(i)] = map_a(ma.partner(i)) as u8;
                }
                for i in 0..mb.len() {
                    pairs[map_b(i)] = map_b(mb.partner(i)) as u8;
                }
                r.add_term(Matching(pairs), ca.mul(cb));
            }
        }
        r
    }

    /// Markov trace: closes top point `i` to bottom point `i` around the right side.
    pub fn trace(&self) -> Result<QFrac, TLError> {
        if self.top != self.bottom {
            return Err(TLError::NotSquare);
        }
        let k = self.top;
        let id = Self::identity(k);
        let links: Vec<(usize, usize)> = (0..2 * k).map(|i| (i, i)).collect();
        let plan = GluePlan::new(2 * k, 2 * k, &links, Vec::new());
        Ok(self.glue(&id, &plan, 0, 0).coeff(&Matching(Vec::new())))
    }
}
