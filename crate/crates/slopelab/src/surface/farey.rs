//! Vertices and edge-paths in the Farey diagram.

use crate::exact::{eval_cfe, rat, ContinuedFraction, Flavor, Rational};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("vertices {0} and {1} are not joined by a Farey edge")]
    AdjacencyViolation(FareyVertex, FareyVertex),
    #[error("continued fraction {0} does not evaluate to {1}")]
    ExpansionMismatch(String, String),
    #[error("no candidate surface S(M, x*): s(q) = {0} > 0")]
    NoSolution(String),
    #[error("edge-path shape not covered by the Euler characteristic accounting: {0}")]
    UnsupportedEdgepathShape(String),
    #[error("knot outside the surface constructions: {0}")]
    Hypothesis(String),
    #[error("{0}")]
    Diagram(#[from] crate::knot::DiagramError),
}

/// `⟨p/q⟩` with `q >= 0`; `⟨1/0⟩` is the vertex at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FareyVertex {
    pub p: i64,
    pub q: i64,
}

impl FareyVertex {
    pub fn new(p: i64, q: i64) -> Self {
        let g = num_integer::gcd(p, q).max(1);
        let s = if q < 0 || (q == 0 && p < 0) { -1 } else { 1 };
        Self { p: s * p / g, q: s * q / g }
    }

    pub fn infinity() -> Self {
        Self { p: 1, q: 0 }
    }

    pub fn from_rational(r: &Rational) -> Self {
        let p = i64::try_from(r.numer().clone()).expect("numerator fits i64");
        let q = i64::try_from(r.denom().clone()).expect("denominator fits i64");
        Self::new(p, q)
    }

    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }

    pub fn value(&self) -> Option<Rational> {
        (!self.is_infinity()).then(|| rat(self.p, self.q))
    }

    pub fn adjacent(&self, other: &FareyVertex) -> bool {
        (self.p as i128 * other.q as i128 - other.p as i128 * self.q as i128).abs() == 1
    }
}

impl fmt::Display for FareyVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl Serialize for FareyVertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A path of Farey edges. With `final_fraction = Some((K, M))` the last edge
/// `⟨p/q⟩ to ⟨r/s⟩` stops at `K/M ⟨p/q⟩ + (M-K)/M ⟨r/s⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePath {
    pub vertices: Vec<FareyVertex>,
    pub final_fraction: Option<(i64, i64)>,
}

impl EdgePath {
    pub fn new(vertices: Vec<FareyVertex>, final_fraction: Option<(i64, i64)>) -> Result<Self, SurfaceError> {
        for w in vertices.windows(2) {
            if w[0] != w[1] && !w[0].adjacent(&w[1]) {
                return Err(SurfaceError::AdjacencyViolation(w[0], w[1]));
            }
        }
        if let Some((k, m)) = final_fraction {
            assert!(m > 0 && (0..=m).contains(&k), "endpoint weight {k}/{m} out of range");
        }
        Ok(Self { vertices, final_fraction })
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.vertices.windows(2).any(|w| w[0] == w[1]) || self.vertices.len() < 2
    }

    /// The last two vertices.
    pub fn final_edge(&self) -> Option<(FareyVertex, FareyVertex)> {
        let n = self.vertices.len();
        (n >= 2).then(|| (self.vertices[n - 2], self.vertices[n - 1]))
    }

    /// Keeps the vertices up to and including `v`.
    pub fn truncate_at(&self, v: FareyVertex, final_fraction: Option<(i64, i64)>) -> Option<EdgePath> {
        let i = self.vertices.iter().position(|&w| w == v)?;
        Some(EdgePath { vertices: self.vertices[..=i].to_vec(), final_fraction })
    }

    /// `r`-value of the final edge: `0` for a constant or vertical edge, else `|q - s|`.
    pub fn final_rvalue(&self) -> i64 {
        match self.final_edge() {
            Some((a, b)) if a != b && !a.is_infinity() && !b.is_infinity() => (a.q - b.q).abs(),
            _ => 0,
        }
    }
}

/// Partial sums `[[b0..bk]], [[b0..b(k-1)]], ..., [[b0]], ∞` of a negative expansion.
pub fn edgepath_from_negative_cfe(cf: &ContinuedFraction) -> Result<EdgePath, SurfaceError> {
    assert_eq!(cf.flavor, Flavor::Negative, "edge-paths come from negative expansions");
    let mut vertices = Vec::with_capacity(cf.terms.len() + 1);
    for len in (1..=cf.terms.len()).rev() {
        let head = ContinuedFraction::new(cf.terms[..len].to_vec(), Flavor::Negative);
        let v = eval_cfe(&head).map_err(|e| SurfaceError::ExpansionMismatch(cf.to_string(), e.to_string()))?;
        vertices.push(FareyVertex::from_rational(&v));
    }
    vertices.push(FareyVertex::infinity());
    EdgePath::new(vertices, None)
}

fn checked(terms: Vec<i64>, r: &Rational) -> Result<ContinuedFraction, SurfaceError> {
    let cf = ContinuedFraction::new(terms, Flavor::Negative);
    match eval_cfe(&cf) {
        Ok(v) if &v == r => Ok(cf),
        _ => Err(SurfaceError::ExpansionMismatch(cf.to_string(), crate::exact::format_rational(r))),
    }
}

fn repeat_two(out: &mut Vec<i64>, times: i64) {
    out.extend(std::iter::repeat(-2).take(times.max(0) as usize));
}

/// Even term `a_j` of a negative tangle loses one for each neighbouring run of `-2`s.
fn even_term(a: &[i64], j: usize, first_run: bool) -> i64 {
    let l = a.len() - 1;
    a[j] - i64::from(first_run || j > 2) - i64::from(j < l)
}

/// `[[-1, -2 x (-a1-1), a2-2, -2 x (-a3-1), ..., a_l - 1]]` for `r0 = [0, a1, ..., al]`, all `aj < 0`.
pub fn ladder_expansion(r0: &Rational, even: &ContinuedFraction) -> Result<ContinuedFraction, SurfaceError> {
    let a = &even.terms;
    let mut out = vec![-1];
    for j in 1..a.len() {
        if j % 2 == 1 {
            repeat_two(&mut out, -a[j] - 1);
        } else {
            out.push(even_term(a, j, true));
        }
    }
    checked(out, r0)
}

/// `[[0, -a1-1, -2 x (a2-1), -a3-2, -2 x (a4-1), ...]]` for `r = [0, a1, ..., al]`, all `aj > 0`.
pub fn positive_expansion(r: &Rational, even: &ContinuedFraction) -> Result<ContinuedFraction, SurfaceError> {
    let a = &even.terms;
    let mut out = vec![0];
    for j in 1..a.len() {
        match j {
            1 => out.push(-a[1] - 1),
            _ if j % 2 == 1 => out.push(-a[j] - 2),
            _ => repeat_two(&mut out, a[j] - 1),
        }
    }
    checked(out, r)
}

/// `[[0, -a1, a2-1, -2 x (-a3-1), a4-2, ..., a_l - 1]]`, or `[[0, -q0]]` when `r0 = 1/q0`.
pub fn reference_expansion(r0: &Rational, even: &ContinuedFraction) -> Result<ContinuedFraction, SurfaceError> {
    let a = &even.terms;
    if r0.numer() == &num_bigint::BigInt::from(-1) {
        let d = i64::try_from(r0.denom().clone()).expect("denominator fits i64");
        return checked(vec![0, d], r0);
    }
    let mut out = vec![0, -a[1]];
    for j in 2..a.len() {
        if j % 2 == 1 {
            repeat_two(&mut out, -a[j] - 1);
        } else {
            out.push(even_term(a, j, false));
        }
    }
    checked(out, r0)
}
