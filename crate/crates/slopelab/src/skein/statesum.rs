//! Kauffman bracket of a closed diagram by summing over all `2^c` states.
//! Used only to cross-check the cabled oracle at color 2.

use crate::exact::LaurentPoly;
use crate::knot::diagram::{Diagram, DiagramError};

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// `⟨D⟩` with `A = v^{-1}`, loop value `-v^2 - v^{-2}` and empty diagram `1`.
pub fn kauffman_bracket(d: &Diagram) -> LaurentPoly {
    let c = d.crossing_count();
    assert!(c < 26, "state sum limited to small diagrams");
    let delta = super::jw::delta_n(1);
    let mut powers = vec![LaurentPoly::one()];
    for i in 1..=c + 1 + d.free_loops() {
        powers.push(&powers[i - 1] * &delta);
    }
    // A-smoothing: "/" over joins NW-SW and NE-SE, "\" over joins NW-NE and SW-SE.
    let a_pairs: Vec<[(usize, usize); 2]> = (0..c)
        .map(|x| if d.is_over(x, 1) { [(0, 3), (1, 2)] } else { [(0, 1), (3, 2)] })
        .collect();
    let b_pairs: Vec<[(usize, usize); 2]> = a_pairs
        .iter()
        .map(|p| if p[0] == (0, 3) { [(0, 1), (3, 2)] } else { [(0, 3), (1, 2)] })
        .collect();
    let mut total = LaurentPoly::zero();
    for state in 0u64..(1u64 << c) {
        let mut parent: Vec<usize> = (0..4 * c).collect();
        for port in 0..4 * c {
            let (a, b) = (find(&mut parent, port), find(&mut parent, d.partner(port)));
            parent[a] = b;
        }
        let mut a_count = 0i64;
        for x in 0..c {
            let pairs = if state >> x & 1 == 0 {
                a_count += 1;
                a_pairs[x]
            } else {
                b_pairs[x]
            };
            for (p, q) in pairs {
                let (a, b) = (find(&mut parent, 4 * x + p), find(&mut parent, 4 * x + q));
                parent[a] = b;
            }
        }
        let loops = (0..4 * c).filter(|&i| find(&mut parent, i) == i).count() + d.free_loops();
        let b_count = c as i64 - a_count;
        total = &total + &powers[loops].shift(b_count - a_count);
    }
    total
}

/// `J_{K,2}` from the state sum: `(-v)^{3ω} (-1) ⟨D⟩`.
pub fn jones_color_two(d: &Diagram) -> Result<LaurentPoly, DiagramError> {
    let w = d.writhe()?;
    let sign: i64 = if (3 * w + 1).rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(kauffman_bracket(d).shift(3 * w).scale(&sign.into()))
}
