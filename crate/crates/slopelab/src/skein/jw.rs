//! Quantum integers, Jones-Wenzl projectors and theta networks.

use super::qfrac::QFrac;
use super::tl::TLElement;
use crate::exact::LaurentPoly;

/// `Δ_n = (-1)^n (v^{2(n+1)} - v^{-2(n+1)}) / (v^2 - v^{-2})`, the closure of the `n`th projector.
pub fn delta_n(n: usize) -> LaurentPoly {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let n = n as i64;
    LaurentPoly::from_pairs(&(0..=n).map(|j| (-2 * n + 4 * j, sign)).collect::<Vec<_>>())
}

/// The projector `f_n` on `n` strands, by Wenzl's recursion
/// `f_{k+1} = f_k ⊗ 1 - (Δ_{k-1}/Δ_k) (f_k ⊗ 1) e_k (f_k ⊗ 1)`.
pub fn jw_projector(n: usize) -> TLElement {
    assert!(n >= 1, "projector needs at least one strand");
    let mut f = TLElement::identity(1);
    for k in 1..n {
        let g = f.tensor(&TLElement::identity(1));
        let e = TLElement::generator(k + 1, k);
        let geg = g.multiply(&e).unwrap().multiply(&g).unwrap();
        let c = QFrac::over_delta(delta_n(k - 1), k).neg();
        f = g.add(&geg.scale(&c));
    }
    f
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("({0}, {1}, {2}) is not admissible")]
    InadmissibleTriple(usize, usize, usize),
}

/// `Δ_k Δ_{k-1} ... Δ_1` as exponents of the `Δ` factors, with `Δ_0! = Δ_{-1}! = 1`.
fn factorial_exponents(k: i64, into: &mut Vec<i64>, sign: i64) {
    for j in 1..=k.max(0) as usize {
        if into.len() < j {
            into.resize(j, 0);
        }
        into[j - 1] += sign;
    }
}

/// The theta network `θ(a,b,c)` as a ratio of `Δ`-factorials. It is a rational
/// function in general, e.g. `θ(2,2,2) = Δ_3 Δ_2 / Δ_1^2`.
pub fn theta(a: usize, b: usize, c: usize) -> Result<QFrac, ThetaError> {
    if (a + b + c) % 2 != 0 || a > b + c || b > a + c || c > a + b {
        return Err(ThetaError::InadmissibleTriple(a, b, c));
    }
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let (x, y, z) = ((b + c - a) / 2, (a + c - b) / 2, (a + b - c) / 2);
    let mut e = Vec::new();
    factorial_exponents(x + y + z, &mut e, 1);
    for t in [x - 1, y - 1, z - 1] {
        factorial_exponents(t, &mut e, 1);
    }
    for t in [y + z - 1, z + x - 1, x + y - 1] {
        factorial_exponents(t, &mut e, -1);
    }
    let mut r = QFrac::one();
    for (j, &p) in e.iter().enumerate() {
        let d = delta_n(j + 1);
        for _ in 0..p.max(0) {
            r = r.mul_poly(&d);
        }
        for _ in 0..(-p).max(0) {
            r = r.mul(&QFrac::over_delta(LaurentPoly::one(), j + 1));
        }
    }
    Ok(r.reduced())
}
