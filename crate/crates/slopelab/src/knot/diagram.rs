//! Closed diagrams as crossing records with explicit port gluing.
//!
//! Every crossing keeps the compass frame of the tangle it came from: ports
//! `0 = NW, 1 = NE, 2 = SE, 3 = SW`. One strand runs NW-SE, the other NE-SW.

use super::model::{MontesinosKnot, PretzelKnot};
use super::tangle::{Tangle, TangleAlgebra, TangleRow};
use serde::Serialize;

/// Which diagonal of a `Tangle::Crossing(+1)` passes over. The choice fixes the chirality
/// of every diagram and is pinned by the writhe and oracle tests.
pub const POSITIVE_TWIST_OVER_BACKSLASH: bool = false;

const POS: [(i64, i64); 4] = [(-1, 1), (1, 1), (1, -1), (-1, -1)];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("diagram has {0} components; a knot is required")]
    MultiComponent(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    /// Tangle sign of each crossing.
    kinds: Vec<i8>,
    /// Port `4c + k` is glued to `partner[4c + k]`.
    partner: Vec<usize>,
    /// Crossingless closed loops produced by the closure.
    free_loops: usize,
}

/// One pass of the oriented diagram through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pass {
    pub crossing: usize,
    pub enter: usize,
    pub exit: usize,
}

/// PD record: edge labels starting at the incoming under-strand, counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PdCrossing {
    pub edges: [usize; 4],
    pub sign: i8,
}

struct Builder {
    kinds: Vec<i8>,
    port_base: Vec<usize>,
    partner: Vec<usize>,
    free_loops: usize,
}

impl Builder {
    fn node(&mut self) -> usize {
        self.partner.push(usize::MAX);
        self.partner.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.partner[a] = b;
        self.partner[b] = a;
    }

    /// Identifies two boundary markers; both disappear.
    fn join(&mut self, x: usize, y: usize) {
        let (p, q) = (self.partner[x], self.partner[y]);
        if p == y {
            self.free_loops += 1;
        } else {
            self.link(p, q);
        }
        self.partner[x] = usize::MAX;
        self.partner[y] = usize::MAX;
    }
}

impl TangleAlgebra for Builder {
    type Element = [usize; 4];

    fn zero(&mut self) -> [usize; 4] {
        let b = [self.node(), self.node(), self.node(), self.node()];
        self.link(b[0], b[1]);
        self.link(b[2], b[3]);
        b
    }

    fn infinity(&mut self) -> [usize; 4] {
        let b = [self.node(), self.node(), self.node(), self.node()];
        self.link(b[0], b[3]);
        self.link(b[1], b[2]);
        b
    }

    fn crossing(&mut self, sign: i8) -> [usize; 4] {
        self.kinds.push(sign);
        self.port_base.push(self.partner.len());
        let ports = [self.node(), self.node(), self.node(), self.node()];
        let b = [self.node(), self.node(), self.node(), self.node()];
        for k in 0..4 {
            self.link(ports[k], b[k]);
        }
        b
    }

    fn sum(&mut self, a: [usize; 4], b: [usize; 4]) -> [usize; 4] {
        self.join(a[1], b[0]);
        self.join(a[2], b[3]);
        [a[0], b[1], b[2], a[3]]
    }

    fn product(&mut self, a: [usize; 4], b: [usize; 4]) -> [usize; 4] {
        self.join(a[3], b[0]);
        self.join(a[2], b[1]);
        [a[0], a[1], b[2], b[3]]
    }
}

impl Diagram {
    /// Numerator closure of a 2-tangle: NW joined to NE, SW joined to SE.
    pub fn numerator_closure(t: &Tangle) -> Diagram {
        let mut b = Builder { kinds: Vec::new(), port_base: Vec::new(), partner: Vec::new(), free_loops: 0 };
        let e = t.eval(&mut b);
        b.join(e[0], e[1]);
        b.join(e[3], e[2]);
        let mut index = vec![usize::MAX; b.partner.len()];
        for (c, &base) in b.port_base.iter().enumerate() {
            for k in 0..4 {
                index[base + k] = 4 * c + k;
            }
        }
        let partner = b
            .port_base
            .iter()
            .flat_map(|&base| (0..4).map(move |k| base + k))
            .map(|n| index[b.partner[n]])
            .collect();
        Diagram { kinds: b.kinds, partner, free_loops: b.free_loops }
    }

    pub fn from_row(row: &TangleRow) -> Diagram {
        Diagram::numerator_closure(&row.left_fold())
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kinds(&self) -> &[i8] {
        &self.kinds
    }

    pub fn partner(&self, port: usize) -> usize {
        self.partner[port]
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// True when the strand through ports `k` and `k + 2` passes over.
    pub fn is_over(&self, crossing: usize, port: usize) -> bool {
        let backslash_over = POSITIVE_TWIST_OVER_BACKSLASH == (self.kinds[crossing] > 0);
        (port % 2 == 0) == backslash_over
    }

    /// Oriented traversals of all components, one list of passes each.
    pub fn components(&self) -> Vec<Vec<Pass>> {
        let n = self.kinds.len();
        let mut seen = vec![false; 4 * n];
        let mut comps = Vec::new();
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut enter = start;
            loop {
                let c = enter / 4;
                let exit = 4 * c + (enter % 4 + 2) % 4;
                seen[enter] = true;
                seen[exit] = true;
                comp.push(Pass { crossing: c, enter: enter % 4, exit: exit % 4 });
                enter = self.partner[exit];
                if enter == start {
                    break;
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Crossing signs for the orientation given by `components()`.
    pub fn crossing_signs(&self) -> Vec<i8> {
        let mut dirs: Vec<[Option<(i64, i64)>; 2]> = vec![[None, None]; self.kinds.len()];
        for comp in self.components() {
            for p in comp {
                let d = (POS[p.exit].0 - POS[p.enter].0, POS[p.exit].1 - POS[p.enter].1);
                let slot = usize::from(!self.is_over(p.crossing, p.enter));
                dirs[p.crossing][slot] = Some(d);
            }
        }
        dirs.iter()
            .map(|[o, u]| {
                let (o, u) = (o.unwrap(), u.unwrap());
                (o.0 * u.1 - o.1 * u.0).signum() as i8
            })
            .collect()
    }

    pub fn writhe(&self) -> Result<i64, DiagramError> {
        let comps = self.components().len() + self.free_loops;
        if comps != 1 {
            return Err(DiagramError::MultiComponent(comps));
        }
        Ok(self.crossing_signs().iter().map(|&s| s as i64).sum())
    }

    /// Faces of the underlying 4-valent plane graph, from the rotation system.
    pub fn face_count(&self) -> usize {
        let n = 4 * self.kinds.len();
        let mut seen = vec![false; n];
        let mut faces = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                let p = self.partner[d];
                d = 4 * (p / 4) + (p % 4 + 3) % 4;
            }
        }
        faces
    }

    /// Euler characteristic check `V - E + F = 2` for a connected diagram.
    pub fn is_planar(&self) -> bool {
        let v = self.kinds.len();
        v == 0 || self.face_count() == v + 2
    }

    pub fn mirror(&self) -> Diagram {
        Diagram { kinds: self.kinds.iter().map(|s| -s).collect(), ..self.clone() }
    }

    pub fn pd_code(&self) -> Vec<PdCrossing> {
        let n = self.kinds.len();
        let mut label = vec![0usize; 4 * n];
        let mut next = 1;
        for comp in self.components() {
            let first = next;
            for (i, p) in comp.iter().enumerate() {
                let out = if i + 1 == comp.len() { first } else { next + 1 };
                label[4 * p.crossing + p.enter] = next;
                label[4 * p.crossing + p.exit] = out;
                next += 1;
            }
        }
        let signs = self.crossing_signs();
        let mut incoming_under = vec![0usize; n];
        for comp in self.components() {
            for p in comp {
                if !self.is_over(p.crossing, p.enter) {
                    incoming_under[p.crossing] = p.enter;
                }
            }
        }
        (0..n)
            .map(|c| {
                let mut k = incoming_under[c];
                let mut edges = [0; 4];
                for e in edges.iter_mut() {
                    *e = label[4 * c + k];
                    k = (k + 3) % 4;
                }
                PdCrossing { edges, sign: signs[c] }
            })
            .collect()
    }
}

/// Standard diagram of a pretzel knot: one vertical twist per entry.
pub fn pretzel_row(p: &PretzelKnot) -> TangleRow {
    TangleRow { tangles: p.q.iter().map(|&q| Tangle::vertical(q)).collect() }
}

/// Standard diagram of a Montesinos knot from the even length expansions.
pub fn montesinos_row(k: &MontesinosKnot) -> TangleRow {
    TangleRow { tangles: k.expansions().iter().map(Tangle::rational).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn example() -> MontesinosKnot {
        MontesinosKnot::new(vec![rat(-46, 327), rat(35, 151), rat(5, 31), rat(16, 35), rat(1, 5)]).unwrap()
    }

    #[test]
    fn writhe_anchors() {
        let p = PretzelKnot::new(vec![-7, 5, 7, 3, 5]).unwrap();
        let dp = Diagram::from_row(&pretzel_row(&p));
        assert_eq!(dp.crossing_count(), 27);
        assert_eq!(dp.writhe(), Ok(-13));
        let dk = Diagram::from_row(&montesinos_row(&example()));
        assert_eq!(dk.crossing_count(), 61);
        assert_eq!(dk.writhe(), Ok(-43));
    }

    #[test]
    fn trefoil_and_planarity() {
        let t = Diagram::from_row(&pretzel_row(&PretzelKnot::unchecked(vec![1, 1, 1])));
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.writhe(), Ok(-3));
        assert!(t.is_planar());
        assert!(Diagram::from_row(&montesinos_row(&example())).is_planar());
    }

    #[test]
    fn link_detected() {
        let d = Diagram::from_row(&pretzel_row(&PretzelKnot::unchecked(vec![-3, 3, 3, 3])));
        assert_eq!(d.writhe(), Err(DiagramError::MultiComponent(2)));
    }

    #[test]
    fn pd_code_uses_each_edge_twice() {
        let d = Diagram::from_row(&pretzel_row(&PretzelKnot::new(vec![-3, 3, 3]).unwrap()));
        let pd = d.pd_code();
        let mut count = vec![0; 2 * d.crossing_count() + 1];
        for x in &pd {
            for &e in &x.edges {
                count[e] += 1;
            }
        }
        assert!(count[1..].iter().all(|&c| c == 2));
        assert_eq!(pd.iter().map(|x| x.sign as i64).sum::<i64>(), d.writhe().unwrap());
    }

    #[test]
    fn orientation_reversal_keeps_writhe() {
        let d = Diagram::from_row(&montesinos_row(&example()));
        let comps = d.components();
        let mut dirs = vec![Vec::new(); d.crossing_count()];
        for p in comps.concat() {
            // reversed traversal swaps enter and exit
            let dv = (POS[p.enter].0 - POS[p.exit].0, POS[p.enter].1 - POS[p.exit].1);
            dirs[p.crossing].push((d.is_over(p.crossing, p.exit), dv));
        }
        let rev: i64 = dirs
            .iter()
            .map(|v| {
                let o = v.iter().find(|x| x.0).unwrap().1;
                let u = v.iter().find(|x| !x.0).unwrap().1;
                (o.0 * u.1 - o.1 * u.0).signum()
            })
            .sum();
        assert_eq!(rev, -43);
    }
}
