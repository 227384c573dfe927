//! Exact quadratic optimization: real minimizers, lattice minimizers over the scaled
//! simplex `{x ∈ Z^m : Σx = t, 0 ≤ x ≤ t}` and the degree maximization built on them.

use crate::exact::{int, Rational};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QipError {
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("dimension mismatch")]
    Dimension,
    #[error("quadratic coefficients must be positive")]
    NonConvex,
    #[error("point is not feasible for t = {0}")]
    Infeasible(i64),
    #[error("point lies on the boundary of the simplex")]
    Degenerate,
    #[error("tangle entries q_1..q_m must exceed 1")]
    BadTangles,
}

/// `f(x) = Σ a_i x_i^2 + b_i x_i` with every `a_i > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparableQuadratic {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl SeparableQuadratic {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self, QipError> {
        if a.len() != b.len() || a.is_empty() {
            return Err(QipError::Dimension);
        }
        if a.iter().any(|&x| x <= 0) {
            return Err(QipError::NonConvex);
        }
        Ok(Self { a, b })
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.a).zip(&self.b).map(|((&x, &a), &b)| a * x * x + b * x).sum()
    }

    pub fn eval_rational(&self, x: &[Rational]) -> Rational {
        x.iter()
            .zip(&self.a)
            .zip(&self.b)
            .map(|((x, &a), &b)| int(a) * x * x + int(b) * x)
            .sum()
    }

    /// Change of `f` when one unit moves from coordinate `i` to coordinate `j`.
    pub fn exchange_cost(&self, x: &[i64], i: usize, j: usize) -> i64 {
        let (a, b) = (&self.a, &self.b);
        a[i] * (1 - 2 * x[i]) - b[i] + a[j] * (2 * x[j] + 1) + b[j]
    }

    /// `ϖ = Σ_i Π_{j≠i} a_j`.
    pub fn period(&self) -> i64 {
        (0..self.m()).map(|i| self.cofactor(i)).sum()
    }

    /// `A_i = Π_{j≠i} a_j`.
    pub fn cofactor(&self, i: usize) -> i64 {
        self.a.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a).product()
    }
}

/// Minimizes `½ xᵀAx + b·x` over `R^m`: the point `-A⁻¹b` and the value `-½ bᵀA⁻¹b`.
pub fn real_min_unconstrained(a: &[Vec<Rational>], b: &[Rational]) -> Result<(Vec<Rational>, Rational), QipError> {
    let m = b.len();
    if a.len() != m || a.iter().any(|row| row.len() != m) {
        return Err(QipError::Dimension);
    }
    for i in 0..m {
        for j in 0..m {
            if a[i][j] != a[j][i] {
                return Err(QipError::NotPositiveDefinite);
            }
        }
    }
    // Gaussian elimination without pivoting: every pivot is a ratio of leading
    // principal minors, so all pivots are positive exactly when A is positive definite.
    let mut aug: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.push(-b[i].clone());
            row
        })
        .collect();
    for c in 0..m {
        if !aug[c][c].is_positive() {
            return Err(QipError::NotPositiveDefinite);
        }
        for r in c + 1..m {
            let factor = &aug[r][c] / &aug[c][c];
            for k in c..=m {
                let d = &factor * &aug[c][k];
                aug[r][k] -= d;
            }
        }
    }
    let mut x = vec![Rational::zero(); m];
    for r in (0..m).rev() {
        let mut s = aug[r][m].clone();
        for k in r + 1..m {
            s -= &aug[r][k] * &x[k];
        }
        x[r] = s / &aug[r][r];
    }
    let value = b.iter().zip(&x).map(|(b, x)| b * x).sum::<Rational>() / int(2);
    Ok((x, value))
}

/// The real minimizer `x*(t)` of `f` on the hyperplane `Σx = t`, and `f(x*(t))`.
pub fn real_min_simplex(f: &SeparableQuadratic, t: &Rational) -> (Vec<Rational>, Rational) {
    let inv: Vec<Rational> = f.a.iter().map(|&a| Rational::new(1.into(), a.into())).collect();
    let s: Rational = inv.iter().sum();
    let x: Vec<Rational> = (0..f.m())
        .map(|i| {
            let shift: Rational = (0..f.m()).map(|j| int(f.b[j] - f.b[i]) * &inv[i] * &inv[j]).sum();
            (&inv[i] * t + shift / int(2)) / &s
        })
        .collect();
    let value = f.eval_rational(&x);
    (x, value)
}

/// The `t^2` and `t` coefficients of `f(x*(t))`: `1/(1·a⁻¹)` and `(b·a⁻¹)/(1·a⁻¹)`.
pub fn real_min_coefficients(f: &SeparableQuadratic) -> (Rational, Rational) {
    let inv: Vec<Rational> = f.a.iter().map(|&a| Rational::new(1.into(), a.into())).collect();
    let s: Rational = inv.iter().sum();
    let ba: Rational = inv.iter().zip(&f.b).map(|(i, &b)| i * int(b)).sum();
    (Rational::one() / &s, ba / s)
}

fn feasible(x: &[i64], t: i64) -> bool {
    x.iter().all(|&v| (0..=t).contains(&v)) && x.iter().sum::<i64>() == t
}

/// Optimality certificate at a non-degenerate feasible point:
/// `2(a_i x_i - a_j x_j) ≤ (a_i + a_j) - (b_i - b_j)` for all `i ≠ j`.
pub fn graver_certificate(f: &SeparableQuadratic, x: &[i64], t: i64) -> Result<bool, QipError> {
    if x.len() != f.m() {
        return Err(QipError::Dimension);
    }
    if !feasible(x, t) {
        return Err(QipError::Infeasible(t));
    }
    if f.m() > 1 && x.iter().any(|&v| v == 0 || v == t) {
        return Err(QipError::Degenerate);
    }
    Ok(certificate_pairs(f, x, |_| true))
}

fn certificate_pairs(f: &SeparableQuadratic, x: &[i64], can_give: impl Fn(usize) -> bool) -> bool {
    let (a, b) = (&f.a, &f.b);
    (0..f.m()).all(|i| {
        !can_give(i)
            || (0..f.m()).all(|j| i == j || 2 * (a[i] * x[i] - a[j] * x[j]) <= (a[i] + a[j]) - (b[i] - b[j]))
    })
}

/// The certificate restricted to the moves that stay feasible. It characterizes
/// optimality at every feasible point, degenerate ones included.
pub fn exchange_optimal(f: &SeparableQuadratic, x: &[i64]) -> bool {
    certificate_pairs(f, x, |i| x[i] > 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeOptimum {
    pub t: i64,
    pub minimizer: Vec<i64>,
    pub value: i64,
    pub certificate_checked: bool,
    pub degenerate: bool,
    pub period: i64,
}

/// Nearest feasible lattice point to the real minimizer: clip to the simplex,
/// round down and hand out the remainder by largest fractional part.
fn rounded_start(f: &SeparableQuadratic, t: i64) -> Vec<i64> {
    let (xr, _) = real_min_simplex(f, &int(t));
    let clipped: Vec<Rational> = xr.iter().map(|v| v.clone().max(Rational::zero()).min(int(t))).collect();
    let mut x: Vec<i64> = clipped.iter().map(|v| crate::exact::rational::to_i64(&v.floor()).expect("bounded")).collect();
    let mut rest = t - x.iter().sum::<i64>();
    let mut order: Vec<usize> = (0..f.m()).collect();
    order.sort_by(|&i, &j| clipped[j].fract().cmp(&clipped[i].fract()).then(i.cmp(&j)));
    let mut k = 0;
    while rest > 0 {
        let i = order[k % f.m()];
        if x[i] < t {
            x[i] += 1;
            rest -= 1;
        }
        k += 1;
    }
    while rest < 0 {
        let i = order[k % f.m()];
        if x[i] > 0 {
            x[i] -= 1;
            rest += 1;
        }
        k += 1;
    }
    x
}

/// Exact minimizer of `f` over the scaled simplex; ties go to the lexicographically
/// smallest minimizer.
pub fn lattice_min(f: &SeparableQuadratic, t: i64) -> LatticeOptimum {
    assert!(t >= 0, "t must be non-negative");
    let m = f.m();
    let mut x = rounded_start(f, t);
    // steepest descent along the Graver directions e_j - e_i
    loop {
        let mut best = (0i64, 0usize, 0usize);
        for i in 0..m {
            if x[i] == 0 {
                continue;
            }
            for j in 0..m {
                if i != j {
                    let c = f.exchange_cost(&x, i, j);
                    if c < best.0 {
                        best = (c, i, j);
                    }
                }
            }
        }
        if best.0 == 0 {
            break;
        }
        x[best.1] -= 1;
        x[best.2] += 1;
    }
    // zero-cost moves toward later coordinates make the point lexicographically smaller
    'outer: loop {
        for i in 0..m {
            if x[i] == 0 {
                continue;
            }
            for j in i + 1..m {
                if f.exchange_cost(&x, i, j) == 0 {
                    x[i] -= 1;
                    x[j] += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    let degenerate = m > 1 && x.iter().any(|&v| v == 0 || v == t);
    let certificate_checked = if degenerate { exchange_optimal(f, &x) } else { graver_certificate(f, &x, t) == Ok(true) };
    LatticeOptimum { t, value: f.eval(&x), minimizer: x, certificate_checked, degenerate, period: f.period() }
}

/// Every minimizer, found by walking zero-cost exchanges from one of them.
pub fn lattice_minimizers(f: &SeparableQuadratic, t: i64) -> Vec<Vec<i64>> {
    let start = lattice_min(f, t).minimizer;
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for i in 0..f.m() {
            for j in 0..f.m() {
                if i != j && x[i] > 0 && f.exchange_cost(&x, i, j) == 0 {
                    let mut y = x.clone();
                    y[i] -= 1;
                    y[j] += 1;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Exhaustive search; returns the lexicographically smallest minimizer.
pub fn brute_force_min(f: &SeparableQuadratic, t: i64) -> (Vec<i64>, i64) {
    fn rec(f: &SeparableQuadratic, i: usize, left: i64, x: &mut Vec<i64>, best: &mut Option<(Vec<i64>, i64)>) {
        if i + 1 == f.m() {
            x.push(left);
            let v = f.eval(x);
            if best.as_ref().map_or(true, |b| v < b.1) {
                *best = Some((x.clone(), v));
            }
            x.pop();
            return;
        }
        for v in 0..=left {
            x.push(v);
            rec(f, i + 1, left - v, x, best);
            x.pop();
        }
    }
    let mut best = None;
    rec(f, 0, t, &mut Vec::new(), &mut best);
    best.unwrap()
}

/// The four regimes of `Q_0(t) = s t^2 + s_1 t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DegreeCase {
    /// `s < 0`
    #[serde(rename = "1")]
    Concave,
    /// `s = 0`, `s_1 ≠ 0`
    #[serde(rename = "2a")]
    Linear,
    /// `s = 0 = s_1`
    #[serde(rename = "2b")]
    Flat,
    /// `s > 0`
    #[serde(rename = "3")]
    Convex,
}

impl DegreeCase {
    pub fn label(&self) -> &'static str {
        match self {
            DegreeCase::Concave => "1",
            DegreeCase::Linear => "2a",
            DegreeCase::Flat => "2b",
            DegreeCase::Convex => "3",
        }
    }

    pub fn classify(s: &Rational, s1: &Rational) -> Self {
        if s.is_negative() {
            DegreeCase::Concave
        } else if s.is_positive() {
            DegreeCase::Convex
        } else if s1.is_zero() {
            DegreeCase::Flat
        } else {
            DegreeCase::Linear
        }
    }
}

/// Outcome of maximizing the state degree over tight parameters at a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeMaximum {
    pub n: i64,
    pub case: DegreeCase,
    /// The values of `t = k_0` that the case analysis singles out.
    pub predicted_t: Vec<i64>,
    /// The exact optimum over all `0 ≤ t ≤ n` (smallest `t` on ties).
    pub t_star: i64,
    /// `(k_1, ..., k_m)` at the optimum.
    pub k: Vec<i64>,
    /// Minimum of `(q_0+1) t^2 + Σ (q_i-1) k_i^2 + (q_0+q_i-2) k_i`.
    pub min_value: i64,
    /// `s` and `s_1`, the coefficients of `Q_0`.
    #[serde(serialize_with = "crate::exact::rational::serde_rat::serialize")]
    pub s: Rational,
    #[serde(serialize_with = "crate::exact::rational::serde_rat::serialize")]
    pub s1: Rational,
}

/// The separable part of `-δ/2` for the tangles `q_1..q_m` at fixed `q_0`.
pub fn degree_quadratic(q: &[i64]) -> Result<SeparableQuadratic, QipError> {
    if q.len() < 2 || q[1..].iter().any(|&x| x <= 1) {
        return Err(QipError::BadTangles);
    }
    SeparableQuadratic::new(q[1..].iter().map(|&x| x - 1).collect(), q[1..].iter().map(|&x| x + q[0] - 2).collect())
}

/// Minimum over tight `k` with `k_0 = t` of the `k`-dependent part of `-δ/2`.
pub fn tight_minimum(q: &[i64], t: i64) -> Result<(Vec<i64>, i64), QipError> {
    let f = degree_quadratic(q)?;
    let opt = lattice_min(&f, t);
    Ok((opt.minimizer, (q[0] + 1) * t * t + opt.value))
}

/// Maximizes `δ(n, k)` over tight `k` and reports the regime of `Q_0`.
pub fn maximize_degree(q: &[i64], n: i64) -> Result<DegreeMaximum, QipError> {
    let f = degree_quadratic(q)?;
    let (c2, c1) = real_min_coefficients(&f);
    let s = int(q[0] + 1) + c2;
    let s1 = c1;
    let case = DegreeCase::classify(&s, &s1);
    let predicted_t = match case {
        DegreeCase::Concave => vec![n],
        DegreeCase::Linear => vec![if s1.is_positive() { 0 } else { n }],
        DegreeCase::Flat => vec![0, n],
        DegreeCase::Convex => {
            if s1.is_negative() {
                let centre = -(&s1) / (int(2) * &s);
                let c = crate::exact::rational::to_i64(&centre.round().min(int(n))).unwrap_or(n).clamp(0, n);
                let mut v: Vec<i64> = vec![0, (c - 1).max(0), c, (c + 1).min(n)];
                v.sort();
                v.dedup();
                v
            } else {
                vec![0]
            }
        }
    };
    let mut best: Option<(i64, Vec<i64>, i64)> = None;
    for t in 0..=n {
        let (k, v) = tight_minimum(q, t)?;
        if best.as_ref().map_or(true, |b| v < b.2) {
            best = Some((t, k, v));
        }
    }
    let (t_star, k, min_value) = best.unwrap();
    Ok(DegreeMaximum { n, case, predicted_t, t_star, k, min_value, s, s1 })
}
