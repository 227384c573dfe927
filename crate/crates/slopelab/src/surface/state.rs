//! Boundary slopes of state surfaces read off a diagram.
//!
//! Pushing the knot into a state surface agrees with the blackboard push-off except at
//! the half-twisted bands. A band at an oriented smoothing cancels that crossing's
//! writhe; any other band doubles it. So the slope is `2 * sum(sign)` over the
//! crossings whose smoothing does not respect the orientation.

use super::farey::SurfaceError;
use crate::exact::{int, Rational};
use crate::knot::diagram::montesinos_row;
use crate::knot::{Diagram, MontesinosKnot};

/// Port pairs joined by the A-smoothing of crossing `x`.
fn a_pairs(d: &Diagram, x: usize) -> [(usize, usize); 2] {
    if d.is_over(x, 1) {
        [(0, 3), (1, 2)]
    } else {
        [(0, 1), (3, 2)]
    }
}

/// Slope of the surface of the state that A-smooths the crossings flagged in `a_state`
/// and B-smooths the rest.
pub fn state_surface_slope(d: &Diagram, a_state: &[bool]) -> Result<i64, SurfaceError> {
    let signs = d.crossing_signs();
    d.writhe()?;
    let mut incoming = vec![[false; 4]; d.crossing_count()];
    for comp in d.components() {
        for p in comp {
            incoming[p.crossing][p.enter] = true;
        }
    }
    let mut slope = 0;
    for x in 0..d.crossing_count() {
        let a = a_pairs(d, x);
        let pairs = if a_state[x] { a } else if a[0] == (0, 3) { [(0, 1), (3, 2)] } else { [(0, 3), (1, 2)] };
        let oriented = pairs.iter().all(|&(p, q)| incoming[x][p] != incoming[x][q]);
        if !oriented {
            slope += 2 * signs[x] as i64;
        }
    }
    Ok(slope)
}

/// The state of `R`: A on the outer vertical twist of the negative tangle (the whole
/// tangle when `r0 = 1/q0`), B everywhere else.
pub fn reference_state(k: &MontesinosKnot) -> (Diagram, Vec<bool>) {
    let row = montesinos_row(k);
    let d = Diagram::from_row(&row);
    let c0 = row.tangles[0].crossings();
    let e0 = &k.expansions()[0];
    let pretzel_like = e0.len_index() == 2 && e0.term(2) == -1;
    let twist = if pretzel_like { c0 } else { e0.term(1).unsigned_abs() as usize };
    let state = (0..d.crossing_count()).map(|x| x < c0 && x >= c0 - twist).collect();
    (d, state)
}

/// `bs(R)` from the diagram.
pub fn reference_slope(k: &MontesinosKnot) -> Result<Rational, SurfaceError> {
    let (d, state) = reference_state(k);
    Ok(int(state_surface_slope(&d, &state)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::montesinos_js_jx;
    use crate::exact::rat;
    use crate::knot::diagram::pretzel_row;
    use crate::knot::PretzelKnot;

    #[test]
    fn trefoil_checkerboard_and_seifert() {
        let d = Diagram::from_row(&pretzel_row(&PretzelKnot::unchecked(vec![1, 1, 1])));
        let slopes: Vec<i64> = [false, true]
            .iter()
            .map(|&a| state_surface_slope(&d, &vec![a; 3]).unwrap())
            .collect();
        assert!(slopes.contains(&-6) && slopes.contains(&0), "{slopes:?}");
    }

    #[test]
    fn pretzel_reference_is_seifert() {
        for q in [vec![-3, 3, 3], vec![-7, 5, 7, 3, 5], vec![-5, 3, 7]] {
            let k = MontesinosKnot::from_pretzel(&PretzelKnot::unchecked(q));
            assert_eq!(reference_slope(&k).unwrap(), int(0));
        }
    }

    #[test]
    fn montesinos_reference_slope_matches_the_correction_terms() {
        for f in [
            vec![rat(-46, 327), rat(35, 151), rat(5, 31), rat(16, 35), rat(1, 5)],
            vec![rat(-1, 3), rat(3, 7), rat(1, 5)],
            vec![rat(-3, 10), rat(1, 3), rat(1, 3)],
            vec![rat(-1, 3), rat(3, 8), rat(1, 3)],
            vec![rat(-5, 17), rat(2, 7), rat(3, 10)],
        ] {
            let k = MontesinosKnot::new(f).unwrap();
            let d = montesinos_js_jx(&k, false).unwrap();
            let c = &d.corrections;
            let bs_r = -c.q0_prime - c.r0_bracket - c.writhe_p + c.writhe_k + c.sum_ri2_minus_1 + c.sum_ri_bracket;
            assert_eq!(reference_slope(&k).unwrap(), int(bs_r), "{k}");
        }
    }
}
