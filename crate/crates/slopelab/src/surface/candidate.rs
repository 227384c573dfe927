//! Candidate surfaces `S(M, x*)` and `R`, their twist numbers, Euler characteristics
//! and the r-value test.

use super::farey::{
    edgepath_from_negative_cfe, ladder_expansion, positive_expansion, reference_expansion, EdgePath, FareyVertex,
    SurfaceError,
};
use crate::degree::s_and_s1;
use crate::exact::{format_rational, int, rat, Rational};
use crate::knot::{associated_pretzel, MontesinosKnot};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// `(A, B, C)` coordinates of a curve system on a Conway sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveCoords {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SurfaceKind {
    SStar,
    Reference,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateSurface {
    pub kind: SurfaceKind,
    pub edgepaths: Vec<EdgePath>,
    #[serde(rename = "M")]
    pub sheets: i64,
    #[serde(rename = "K")]
    pub k: Vec<i64>,
    /// The integer `q` placing the fractional edge of the negative tangle.
    pub q_negative: Option<i64>,
    pub rvalues: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Incompressible,
    Inconclusive,
}

/// Coordinates at the end of `path` for a surface with `m` sheets.
pub fn endpoint_coords(path: &EdgePath, m: i64) -> Option<CurveCoords> {
    let (u, w) = path.final_edge()?;
    let (k, m) = path.final_fraction.unwrap_or((0, m));
    Some(if u == w {
        CurveCoords { a: m - k, b: (m - k) * (u.q - 1) + k * u.q, c: m * u.p }
    } else {
        CurveCoords { a: m, b: k * (u.q - 1) + (m - k) * (w.q - 1), c: k * u.p + (m - k) * w.p }
    })
}

impl CandidateSurface {
    /// Assembles a system and checks the gluing equations `A_i = A_j`, `B_i = B_j`, `sum C_i = 0`.
    pub fn new(
        kind: SurfaceKind,
        edgepaths: Vec<EdgePath>,
        sheets: i64,
        k: Vec<i64>,
        q_negative: Option<i64>,
    ) -> Result<Self, SurfaceError> {
        let rvalues = edgepaths.iter().map(EdgePath::final_rvalue).collect();
        let s = Self { kind, edgepaths, sheets, k, q_negative, rvalues };
        let coords = s.coords().ok_or_else(|| SurfaceError::UnsupportedEdgepathShape("empty edge-path".into()))?;
        let glued = coords.windows(2).all(|w| w[0].a == w[1].a && w[0].b == w[1].b)
            && coords.iter().map(|c| c.c).sum::<i64>() == 0;
        if !glued {
            return Err(SurfaceError::Hypothesis(format!("gluing equations fail: {coords:?}")));
        }
        Ok(s)
    }

    pub fn coords(&self) -> Option<Vec<CurveCoords>> {
        self.edgepaths.iter().map(|p| endpoint_coords(p, self.sheets)).collect()
    }

    /// Every path as a list of `"p/q"` strings.
    pub fn vertex_lists(&self) -> Vec<Vec<String>> {
        self.edgepaths.iter().map(|p| p.vertices.iter().map(|v| v.to_string()).collect()).collect()
    }
}

/// `x*_i = (q_i - 1)^{-1} / sum_j (q_j - 1)^{-1}` over the positive entries, the sheet
/// count `M` (common denominator) and `K_i = M x*_i`.
pub fn sstar_vector(q: &[i64]) -> Result<(Vec<Rational>, i64, Vec<i64>), SurfaceError> {
    if q.len() < 2 || q[1..].iter().any(|&x| x <= 1) {
        return Err(SurfaceError::Hypothesis(format!("positive entries must exceed 1: {q:?}")));
    }
    let inv: Vec<Rational> = q[1..].iter().map(|&x| rat(1, x - 1)).collect();
    let total: Rational = inv.iter().sum();
    let x: Vec<Rational> = inv.iter().map(|r| r / &total).collect();
    let m = x.iter().fold(num_bigint::BigInt::from(1), |acc, r| acc.lcm(r.denom()));
    let m = i64::try_from(m).map_err(|_| SurfaceError::Hypothesis("sheet count overflows".into()))?;
    let k = x.iter().map(|r| i64::try_from((r * int(m)).to_integer()).expect("K fits i64")).collect();
    Ok((x, m, k))
}

fn knot_data(k: &MontesinosKnot) -> Result<Vec<i64>, SurfaceError> {
    let f = k.fractions();
    if !(f[0].is_negative() && f[1..].iter().all(Signed::is_positive)) {
        return Err(SurfaceError::Hypothesis(format!("{k} is not in the form r0 < 0 < r1, ..., rm")));
    }
    let q = associated_pretzel(k).q;
    if q[0] > -2 || q[1..].iter().any(|&x| x < 2) {
        return Err(SurfaceError::Hypothesis(format!("associated pretzel {q:?} has a twist of size one")));
    }
    Ok(q)
}

fn positive_paths(k: &MontesinosKnot, ends: &[(i64, i64)]) -> Result<Vec<EdgePath>, SurfaceError> {
    let zero = FareyVertex::new(0, 1);
    k.fractions()[1..]
        .iter()
        .zip(&k.expansions()[1..])
        .zip(ends)
        .map(|((r, e), &end)| {
            let full = edgepath_from_negative_cfe(&positive_expansion(r, e)?)?;
            Ok(full.truncate_at(zero, Some(end)).expect("positive paths pass through 0"))
        })
        .collect()
}

/// `S(M, x*)`: the negative tangle descends the `-1/j` ladder to a fractional edge
/// `⟨-1/q⟩ to ⟨-1/(q-1)⟩` with weight `K0`, each positive tangle stops on `⟨1/q_i⟩ to ⟨0⟩`.
pub fn build_sstar_surface(k: &MontesinosKnot) -> Result<CandidateSurface, SurfaceError> {
    let q = knot_data(k)?;
    let (s, _) = s_and_s1(&q).map_err(|e| SurfaceError::Hypothesis(e.to_string()))?;
    if s.is_positive() {
        return Err(SurfaceError::NoSolution(format_rational(&s)));
    }
    let (_, m, kk) = sstar_vector(&q)?;
    let b = kk[0] * (q[1] - 1);
    let (qn, k0) = (2..=-q[0])
        .map(|j| (j, b - m * (j - 2)))
        .find(|&(_, k0)| (0..=m).contains(&k0))
        .ok_or_else(|| SurfaceError::NoSolution(format_rational(&s)))?;
    let e0 = &k.expansions()[0];
    let ladder = edgepath_from_negative_cfe(&ladder_expansion(&k.fractions()[0], e0)?)?;
    let stop = FareyVertex::new(-1, qn - 1);
    let gamma0 = ladder.truncate_at(stop, Some((k0, m))).expect("ladder passes through -1/(q-1)");
    let ends: Vec<(i64, i64)> = kk.iter().map(|&ki| (ki, m)).collect();
    let mut paths = vec![gamma0];
    paths.extend(positive_paths(k, &ends)?);
    let mut kv = vec![k0];
    kv.extend(kk);
    CandidateSurface::new(SurfaceKind::SStar, paths, m, kv, Some(qn))
}

/// The one-sheeted surface `R` whose paths all end at `⟨0⟩`.
pub fn build_reference_surface(k: &MontesinosKnot) -> Result<CandidateSurface, SurfaceError> {
    knot_data(k)?;
    let zero = FareyVertex::new(0, 1);
    let e0 = &k.expansions()[0];
    let full = edgepath_from_negative_cfe(&reference_expansion(&k.fractions()[0], e0)?)?;
    let gamma0 = full.truncate_at(zero, Some((0, 1))).expect("reference path passes through 0");
    let mut paths = vec![gamma0];
    paths.extend(positive_paths(k, &vec![(0, 1); k.m()])?);
    CandidateSurface::new(SurfaceKind::Reference, paths, 1, vec![0; k.m() + 1], None)
}

/// `2 sum (e- - e+)`, a fractional final edge counting `(M - K)/M`. Constant and
/// vertical edges do not twist.
pub fn twist_number(s: &CandidateSurface) -> Rational {
    let mut total = Rational::zero();
    for p in &s.edgepaths {
        let n = p.edge_count();
        for (i, w) in p.vertices.windows(2).enumerate() {
            let (Some(from), Some(to)) = (w[0].value(), w[1].value()) else { continue };
            let weight = match p.final_fraction {
                Some((k, m)) if i + 1 == n => rat(m - k, m),
                _ => int(1),
            };
            if to < from {
                total += weight;
            } else if to > from {
                total -= weight;
            }
        }
    }
    total * int(2)
}

/// `tw(s) - tw(seifert)` for a Seifert candidate surface `seifert`.
pub fn boundary_slope(s: &CandidateSurface, seifert: &CandidateSurface) -> Rational {
    twist_number(s) - twist_number(seifert)
}

/// `2 chi / M`: `2M` disks per tangle, `M` per full edge, `M - K` per fractional edge,
/// `2M + B` per identification of neighbouring tangles and `B` back for the last one.
pub fn euler_over_sheets(s: &CandidateSurface) -> Result<Rational, SurfaceError> {
    for p in &s.edgepaths {
        if p.is_constant() {
            return Err(SurfaceError::UnsupportedEdgepathShape("constant edge-path".into()));
        }
        if p.vertices.iter().any(FareyVertex::is_infinity) {
            return Err(SurfaceError::UnsupportedEdgepathShape("edge-path through ⟨1/0⟩".into()));
        }
    }
    let m = s.sheets;
    let b = s.coords().expect("non-empty paths")[0].b;
    let tangles = s.edgepaths.len() as i64;
    let mut chi = 2 * m * tangles;
    for p in &s.edgepaths {
        let full = p.edge_count() as i64 - i64::from(p.final_fraction.is_some());
        chi -= m * full;
        if let Some((k, mm)) = p.final_fraction {
            chi -= mm - k;
        }
    }
    chi -= (tangles - 1) * (2 * m + b);
    chi += b;
    Ok(rat(2 * chi, m))
}

fn excluded(c: &[i64]) -> bool {
    let l = c.len();
    let ones = |n: usize| c[..n].iter().all(|&x| x == 1);
    (l >= 1 && ones(l - 1)) || (l >= 2 && ones(l - 2) && c[l - 2] == 2)
}

/// The r-value criterion: incompressible unless the cycle has a `0`, or reads
/// `1, ..., 1, r` or `1, ..., 1, 2, r` in some rotation or reflection.
pub fn incompressibility_check(s: &CandidateSurface) -> Verdict {
    let r = &s.rvalues;
    if r.contains(&0) {
        return Verdict::Inconclusive;
    }
    let rev: Vec<i64> = r.iter().rev().copied().collect();
    for seq in [r.clone(), rev] {
        for i in 0..seq.len() {
            let rot: Vec<i64> = seq[i..].iter().chain(&seq[..i]).copied().collect();
            if excluded(&rot) {
                return Verdict::Inconclusive;
            }
        }
    }
    Verdict::Incompressible
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::{montesinos_js_jx, pretzel_js_jx};
    use crate::knot::PretzelKnot;
    use proptest::prelude::*;

    fn pretzel(q: &[i64]) -> MontesinosKnot {
        MontesinosKnot::from_pretzel(&PretzelKnot::unchecked(q.to_vec()))
    }

    fn example() -> MontesinosKnot {
        MontesinosKnot::new(vec![rat(-46, 327), rat(35, 151), rat(5, 31), rat(16, 35), rat(1, 5)]).unwrap()
    }

    #[test]
    fn sstar_vectors() {
        let (x, m, _) = sstar_vector(&[-11, 7, 9]).unwrap();
        assert_eq!((x, m), (vec![rat(4, 7), rat(3, 7)], 7));
        let (x, m, k) = sstar_vector(&[-7, 5, 7, 3, 5]).unwrap();
        assert_eq!(x, vec![rat(3, 14), rat(1, 7), rat(3, 7), rat(3, 14)]);
        assert_eq!((m, k), (14, vec![3, 2, 6, 3]));
        let (x, _, _) = sstar_vector(&[-3, 5, 5, 5, 5]).unwrap();
        assert!(x.iter().all(|r| r == &rat(1, 4)));
    }

    #[test]
    fn pretzel_example_surface() {
        let k = pretzel(&[-7, 5, 7, 3, 5]);
        let s = build_sstar_surface(&k).unwrap();
        let r = build_reference_surface(&k).unwrap();
        assert_eq!((s.q_negative, s.k[0], s.sheets), (Some(2), 12, 14));
        assert_eq!(twist_number(&s), rat(114, 7));
        assert_eq!(twist_number(&r), int(6));
        assert_eq!(boundary_slope(&s, &r), rat(72, 7));
        assert_eq!(boundary_slope(&r, &r), int(0));
        assert_eq!(euler_over_sheets(&s).unwrap(), rat(-122, 7));
        assert_eq!(euler_over_sheets(&r).unwrap(), int(-6));
        assert_eq!(s.rvalues, [1, 4, 6, 2, 4]);
        assert_eq!(r.rvalues, [6, 4, 6, 2, 4]);
        assert_eq!(incompressibility_check(&s), Verdict::Incompressible);
        let c: Vec<i64> = s.coords().unwrap().iter().map(|c| c.c).collect();
        assert_eq!(c, [-14, 3, 2, 6, 3]);
    }

    #[test]
    fn sstar_needs_nonpositive_s() {
        assert!(build_sstar_surface(&pretzel(&[-3, 5, 5])).is_ok());
        assert!(matches!(build_sstar_surface(&pretzel(&[-2, 3, 7])), Err(SurfaceError::NoSolution(_))));
    }

    #[test]
    fn rvalue_patterns() {
        let mut s = build_reference_surface(&pretzel(&[-3, 3, 3])).unwrap();
        assert_eq!(s.rvalues, [2, 2, 2]);
        assert_eq!(incompressibility_check(&s), Verdict::Incompressible);
        for (cycle, v) in [
            (vec![1, 2, 2], Verdict::Inconclusive),
            (vec![2, 1, 1, 7], Verdict::Inconclusive),
            (vec![3, 0, 5], Verdict::Inconclusive),
            (vec![1, 5, 1, 2], Verdict::Incompressible),
            (vec![1, 4, 1, 5], Verdict::Incompressible),
            (vec![4, 2, 1, 1], Verdict::Inconclusive),
        ] {
            s.rvalues = cycle.clone();
            assert_eq!(incompressibility_check(&s), v, "{cycle:?}");
        }
    }

    #[test]
    fn unsupported_shapes_are_rejected() {
        let mut s = build_reference_surface(&pretzel(&[-3, 3, 3])).unwrap();
        s.edgepaths[1] = EdgePath::new(vec![FareyVertex::new(1, 3), FareyVertex::new(1, 3)], None).unwrap();
        assert!(matches!(euler_over_sheets(&s), Err(SurfaceError::UnsupportedEdgepathShape(_))));
        s.edgepaths[1] =
            EdgePath::new(vec![FareyVertex::new(1, 3), FareyVertex::new(0, 1), FareyVertex::infinity()], None).unwrap();
        assert!(matches!(euler_over_sheets(&s), Err(SurfaceError::UnsupportedEdgepathShape(_))));
    }

    #[test]
    fn montesinos_example_surface() {
        let k = example();
        let s = build_sstar_surface(&k).unwrap();
        let r = build_reference_surface(&k).unwrap();
        assert_eq!(euler_over_sheets(&s).unwrap(), rat(-374, 7));
        assert_eq!(boundary_slope(&s, &r), rat(72, 7));
        assert_eq!(incompressibility_check(&s), Verdict::Incompressible);
        assert_eq!(incompressibility_check(&r), Verdict::Incompressible);
    }

    #[test]
    fn reference_surface_matches_the_reference_degree_case() {
        for f in [
            vec![rat(-1, 3), rat(3, 7), rat(1, 5)],
            vec![rat(-3, 10), rat(1, 3), rat(1, 3)],
            vec![rat(-1, 3), rat(3, 8), rat(1, 3)],
            vec![rat(-5, 17), rat(2, 7), rat(3, 10)],
        ] {
            let k = MontesinosKnot::new(f).unwrap();
            let d = montesinos_js_jx(&k, false).unwrap();
            let r = build_reference_surface(&k).unwrap();
            let c = &d.corrections;
            let m = k.m() as i64;
            let jx_r = int(-2 * (m - 1)) - rat(2 * c.q0_prime, if c.q0_prime == 0 { 1 } else { c.r0_2 })
                + int(2 * c.r0_bracket_o - 2 * c.sum_ri2_minus_1 - 2 * c.sum_ri_bracket_e);
            assert_eq!(euler_over_sheets(&r).unwrap(), jx_r, "{k}");
        }
    }

    fn strict_q() -> impl Strategy<Value = Vec<i64>> {
        (1usize..=2, -15i64..=-1)
            .prop_flat_map(|(h, q0)| (Just(2 * q0 - 1), prop::collection::vec((1i64..=8).prop_map(|x| 2 * x + 1), 2 * h)))
            .prop_map(|(q0, rest)| {
                let mut q = vec![q0];
                q.extend(rest);
                q
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn pretzel_surfaces_realize_the_degree(q in strict_q()) {
            let k = pretzel(&q);
            let d = pretzel_js_jx(&q, true).unwrap();
            let r = build_reference_surface(&k).unwrap();
            prop_assert_eq!(twist_number(&r), int(2 * (k.m() as i64 - 1)));
            prop_assert_eq!(euler_over_sheets(&r).unwrap(), int(2 * (1 - k.m() as i64)));
            if !d.s.is_positive() {
                let s = build_sstar_surface(&k).unwrap();
                let coords = s.coords().unwrap();
                prop_assert!(coords[1..].iter().zip(&s.k[1..]).zip(&q[1..]).all(|((c, ki), qi)| c.b == ki * (qi - 1)));
                prop_assert_eq!(coords.iter().map(|c| c.c).sum::<i64>(), 0);
                prop_assert_eq!(boundary_slope(&s, &r), -int(2) * &d.s);
                prop_assert_eq!(euler_over_sheets(&s).unwrap(), -int(2) * &d.s1 + int(4) * &d.s - int(2 * (k.m() as i64 - 1)));
                prop_assert_eq!(&s.rvalues[1..], &q[1..].iter().map(|x| x - 1).collect::<Vec<_>>()[..]);
                let caught = k.m() == 2 && q[1..].contains(&3);
                let expected = if caught { Verdict::Inconclusive } else { Verdict::Incompressible };
                prop_assert_eq!(incompressibility_check(&s), expected);
                prop_assert_eq!(incompressibility_check(&r), Verdict::Incompressible);
            } else {
                prop_assert!(build_sstar_surface(&k).is_err());
            }
        }
    }
}
