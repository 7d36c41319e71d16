//! Decorated string diagrams over exact rational positions.
//!
//! A diagram is a south loading (solid points with residues) plus a word of
//! elementary events read bottom to top. Each solid strand drags a ghost one
//! unit to its left; red strands stand at the weighting coordinates. An
//! elementary `Move` slides one strand to a new position, sweeping at most
//! one crossing (a solid-solid crossing counts together with its paired
//! ghost-ghost crossing).

use crate::boxes::BoxPos;
use crate::multipartition::{BoxConfiguration, Multipartition};
use crate::params::{Params, Res};
use crate::tableau::{SemistandardTableau, StandardTableau};
use num::rational::Ratio;
use num::Zero;
use std::cmp::Ordering;

pub type Rat = Ratio<i64>;

/// Exact position: primary coordinate scaled by the level, with the
/// infinitesimal tiebreak as a second rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pos {
    pub x: Rat,
    pub eps: Rat,
}

impl Pos {
    pub fn new(x: Rat, eps: Rat) -> Self {
        Pos { x, eps }
    }

    pub fn from_ints(x: i64, eps: i64) -> Self {
        Pos { x: Rat::from_integer(x), eps: Rat::from_integer(eps) }
    }

    pub fn from_box(b: &BoxPos, p: &Params) -> Self {
        let l = b.loading(p);
        Pos::from_ints(l.x, l.tb)
    }

    pub fn red(m: usize, p: &Params) -> Self {
        Pos::from_ints(p.theta_num[m], 0)
    }

    /// Position of the ghost: one unit (= level in scaled coordinates) left.
    pub fn ghost(&self, p: &Params) -> Pos {
        Pos { x: self.x - Rat::from_integer(p.ell as i64), eps: self.eps }
    }

    pub fn midpoint(a: &Pos, b: &Pos) -> Pos {
        if a.x != b.x {
            Pos { x: (a.x + b.x) / Rat::from_integer(2), eps: Rat::zero() }
        } else {
            Pos { x: a.x, eps: (a.eps + b.eps) / Rat::from_integer(2) }
        }
    }
}

impl PartialOrd for Pos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pos {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.x, self.eps).cmp(&(other.x, other.eps))
    }
}

/// An elementary event.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ev {
    /// Strand `s` moves to `to`, sweeping at most one crossing.
    Move { s: usize, to: Pos },
    /// A dot on strand `s`.
    Dot { s: usize },
}

/// What a move sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossing {
    None,
    /// Solid a crosses solid b (ghosts cross in the same instant).
    SolidSolid { a: usize, b: usize },
    /// The solid of `solid` crosses the ghost of `ghost`.
    SolidGhost { solid: usize, ghost: usize },
    /// Solid `s` crosses the red strand `m`.
    SolidRed { s: usize, m: usize },
    /// The ghost of `s` crosses the red strand `m`.
    GhostRed { s: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    /// Residue of each strand, by strand id.
    pub res: Vec<Res>,
    /// South position of each strand, by strand id.
    pub south: Vec<Pos>,
    pub events: Vec<Ev>,
}

fn in_open_interval(q: &Pos, a: &Pos, b: &Pos) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    lo < q && q < hi
}

impl Diagram {
    pub fn idempotent(res: Vec<Res>, south: Vec<Pos>) -> Self {
        Diagram { res, south, events: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.res.len()
    }

    /// Classify the crossing of moving strand `s` from `from` to `to`, given
    /// the other strand positions. Panics if the move is not elementary.
    pub fn classify(
        p: &Params,
        pos: &[Pos],
        s: usize,
        from: &Pos,
        to: &Pos,
    ) -> Crossing {
        let gfrom = from.ghost(p);
        let gto = to.ghost(p);
        let mut hits: Vec<Crossing> = Vec::new();
        for (t, pt) in pos.iter().enumerate() {
            if t == s {
                continue;
            }
            let solid_hit = in_open_interval(pt, from, to);
            let ghost_pt = pt.ghost(p);
            let ghost_in_solid_sweep = in_open_interval(&ghost_pt, from, to);
            let solid_in_ghost_sweep = in_open_interval(pt, &gfrom, &gto);
            if solid_hit {
                hits.push(Crossing::SolidSolid { a: s, b: t });
                // The paired ghost-ghost crossing is implicit; assert it.
                debug_assert!(in_open_interval(&ghost_pt, &gfrom, &gto));
            }
            if ghost_in_solid_sweep {
                hits.push(Crossing::SolidGhost { solid: s, ghost: t });
            }
            if solid_in_ghost_sweep {
                hits.push(Crossing::SolidGhost { solid: t, ghost: s });
            }
        }
        for m in 0..p.ell {
            let red = Pos::red(m, p);
            if in_open_interval(&red, from, to) {
                hits.push(Crossing::SolidRed { s, m });
            }
            if in_open_interval(&red, &gfrom, &gto) {
                hits.push(Crossing::GhostRed { s, m });
            }
        }
        match hits.len() {
            0 => Crossing::None,
            1 => hits[0],
            _ => panic!("non-elementary move of strand {s}: {from:?} -> {to:?} sweeps {hits:?}"),
        }
    }

    /// Replay all events, returning the position state after each event.
    /// Also validates elementarity and distinctness.
    pub fn replay(&self, p: &Params) -> Vec<Vec<Pos>> {
        let mut pos = self.south.clone();
        let mut states = Vec::with_capacity(self.events.len() + 1);
        for ev in &self.events {
            if let Ev::Move { s, to } = ev {
                let from = pos[*s];
                let _ = Self::classify(p, &pos, *s, &from, to);
                assert!(
                    pos.iter().enumerate().all(|(t, q)| t == *s || q != to),
                    "position collision"
                );
                pos[*s] = *to;
            }
            states.push(pos.clone());
        }
        states.push(pos);
        states
    }

    pub fn north(&self, p: &Params) -> Vec<Pos> {
        let mut pos = self.south.clone();
        for ev in &self.events {
            if let Ev::Move { s, to } = ev {
                pos[*s] = *to;
            }
        }
        let _ = p;
        pos
    }

    /// Crossing kinds per event (None for dots).
    pub fn crossings(&self, p: &Params) -> Vec<Crossing> {
        let mut pos = self.south.clone();
        let mut out = Vec::with_capacity(self.events.len());
        for ev in &self.events {
            match ev {
                Ev::Move { s, to } => {
                    let from = pos[*s];
                    let c = Self::classify(p, &pos, *s, &from, to);
                    out.push(c);
                    pos[*s] = *to;
                }
                Ev::Dot { .. } => out.push(Crossing::None),
            }
        }
        out
    }

    /// The grading: dots contribute 2, crossings per the local rule.
    pub fn degree(&self, p: &Params) -> i64 {
        let mut deg = 0;
        let crossings = self.crossings(p);
        for (ev, c) in self.events.iter().zip(&crossings) {
            deg += match ev {
                Ev::Dot { .. } => 2,
                Ev::Move { .. } => match c {
                    Crossing::None => 0,
                    Crossing::SolidSolid { a, b } => {
                        if p.res_eq(self.res[*a], self.res[*b]) {
                            -2
                        } else {
                            0
                        }
                    }
                    Crossing::SolidGhost { solid, ghost } => {
                        if p.res_eq(self.res[*ghost], self.res[*solid] - 1) {
                            1
                        } else {
                            0
                        }
                    }
                    Crossing::SolidRed { s, m } => {
                        if p.res_eq(self.res[*s], p.kappa[*m]) {
                            1
                        } else {
                            0
                        }
                    }
                    Crossing::GhostRed { .. } => 0,
                },
            };
        }
        deg
    }

    /// Horizontal reflection: reverse the events, re-targeting moves.
    pub fn star(&self, p: &Params) -> Diagram {
        let mut pos = self.south.clone();
        let mut flipped: Vec<Ev> = Vec::with_capacity(self.events.len());
        for ev in &self.events {
            match ev {
                Ev::Move { s, to } => {
                    let from = pos[*s];
                    flipped.push(Ev::Move { s: *s, to: from });
                    pos[*s] = *to;
                }
                Ev::Dot { s } => flipped.push(Ev::Dot { s: *s }),
            }
        }
        flipped.reverse();
        Diagram { res: self.res.clone(), south: pos, events: flipped }
    }

    /// Stack `upper` on top of `self`; positions must match exactly and
    /// residues must agree strand-by-strand under the position matching.
    pub fn stack(&self, upper: &Diagram, p: &Params) -> Option<Diagram> {
        let mid = self.north(p);
        // Match upper strand ids to ours by south position.
        let mut map = vec![usize::MAX; upper.n()];
        for (uid, upos) in upper.south.iter().enumerate() {
            let Some(sid) = mid.iter().position(|q| q == upos) else {
                return None;
            };
            if !p.res_eq(upper.res[uid], self.res[sid]) {
                return None;
            }
            map[uid] = sid;
        }
        let mut events = self.events.clone();
        for ev in &upper.events {
            events.push(match ev {
                Ev::Move { s, to } => Ev::Move { s: map[*s], to: *to },
                Ev::Dot { s } => Ev::Dot { s: map[*s] },
            });
        }
        Some(Diagram { res: self.res.clone(), south: self.south.clone(), events })
    }

    /// Append the elementary moves realising a pull of strand `s` to
    /// `target`, splitting at every crossing.
    pub fn pull(&mut self, p: &Params, s: usize, target: Pos) {
        let mut pos = self.north(p);
        let from = pos[s];
        if from == target {
            return;
        }
        // Collect crossing triggers in solid coordinates.
        let gfrom = from.ghost(p);
        let gtarget = target.ghost(p);
        let ell = Rat::from_integer(p.ell as i64);
        let mut triggers: Vec<Pos> = Vec::new();
        for (t, pt) in pos.iter().enumerate() {
            if t == s {
                continue;
            }
            if in_open_interval(pt, &from, &target) {
                triggers.push(*pt);
            }
            let gpt = pt.ghost(p);
            if in_open_interval(&gpt, &from, &target) {
                triggers.push(gpt);
            }
            if in_open_interval(pt, &gfrom, &gtarget) {
                triggers.push(Pos { x: pt.x + ell, eps: pt.eps });
            }
        }
        for m in 0..p.ell {
            let red = Pos::red(m, p);
            if in_open_interval(&red, &from, &target) {
                triggers.push(red);
            }
            if in_open_interval(&red, &gfrom, &gtarget) {
                triggers.push(Pos { x: red.x + ell, eps: red.eps });
            }
        }
        triggers.sort();
        triggers.dedup();
        if from > target {
            triggers.reverse();
        }
        // Landing points: midpoints between consecutive triggers, then the
        // final target.
        let mut lands = Vec::with_capacity(triggers.len());
        for k in 0..triggers.len() {
            if k + 1 < triggers.len() {
                lands.push(Pos::midpoint(&triggers[k], &triggers[k + 1]));
            } else {
                lands.push(target);
            }
        }
        if lands.is_empty() {
            lands.push(target);
        }
        for to in lands {
            // Skip no-op midpoints equal to current position.
            if pos[s] == to {
                continue;
            }
            self.events.push(Ev::Move { s, to });
            pos[s] = to;
        }
    }
}

/// The loading of the minimal multipartition, as positions with a chosen
/// residue sequence (the idempotent 1^i_omega).
pub fn omega_positions(p: &Params) -> Vec<Pos> {
    let om = crate::multipartition::omega(p);
    BoxConfiguration::from_multipartition(&om, p)
        .boxes
        .iter()
        .map(|b| Pos::from_box(b, p))
        .collect()
}

/// The idempotent diagram 1^i_omega.
pub fn idem_omega(p: &Params, idem: &[Res]) -> Diagram {
    Diagram::idempotent(idem.to_vec(), omega_positions(p))
}

/// The image of psi_r e(i) (0-based r): strands r and r+1 cross along with
/// their ghosts.
pub fn gen_psi(p: &Params, idem: &[Res], r: usize) -> Diagram {
    let mut d = idem_omega(p, idem);
    let slots = omega_positions(p);
    let (xa, xb) = (slots[r], slots[r + 1]);
    // Land strand r+1 just left of strand r, then swap the survivors onto
    // the vacated grid slots.
    let half = Rat::new(1, 2);
    let mid = Pos { x: xa.x, eps: xa.eps - half };
    d.pull(p, r + 1, mid);
    d.pull(p, r, xb);
    d.pull(p, r + 1, xa);
    d
}

/// The image of y_k e(i) (0-based k).
pub fn gen_y(p: &Params, idem: &[Res], k: usize) -> Diagram {
    let mut d = idem_omega(p, idem);
    d.events.push(Ev::Dot { s: k });
    d
}

/// The diagram of a weight-omega semistandard tableau: strands rise from the
/// shape's box loadings to the omega slots tracing the tableau bijection,
/// with southern residues read from the boxes. Strand ids are ordered by the
/// omega slot they reach (id k-1 ends at slot k).
pub fn c_half(ssyt: &SemistandardTableau, p: &Params) -> Diagram {
    let slots = omega_positions(p);
    // Entry loadings are omega loadings; strand for slot k starts at the box
    // mapped to slot k.
    let mut south: Vec<Pos> = vec![Pos::from_ints(0, 0); slots.len()];
    let mut res: Vec<Res> = vec![0; slots.len()];
    for (b, l) in &ssyt.entries {
        let lp = Pos::from_ints(l.x, l.tb);
        let k = slots
            .iter()
            .position(|q| *q == lp)
            .expect("weight must be omega");
        south[k] = Pos::from_box(b, p);
        res[k] = b.residue(p);
    }
    let mut d = Diagram::idempotent(res, south);
    // Move strands to their slots, rightmost slot first.
    for k in (0..slots.len()).rev() {
        d.pull(p, k, slots[k]);
    }
    d
}

/// The cellular basis diagram c_{st} = (half for s) stacked on the flip of
/// (half for t).
pub fn c_basis_diagram(s: &StandardTableau, t: &StandardTableau, p: &Params) -> Diagram {
    let up = c_half(&crate::tableau::phi(s, p), p);
    let down = c_half(&crate::tableau::phi(t, p), p).star(p);
    down.stack(&up, p).expect("halves share the middle loading")
}

/// 1_lambda as a diagram (strands vertical at the box loadings of a
/// multipartition).
pub fn idem_multipartition(lambda: &Multipartition, p: &Params) -> Diagram {
    let conf = BoxConfiguration::from_multipartition(lambda, p);
    let res = conf.residue_sequence(p);
    let south = conf.boxes.iter().map(|b| Pos::from_box(b, p)).collect();
    Diagram::idempotent(res, south)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::all_multipartitions;
    use crate::tableau::enumerate_std;

    fn params(t2: (i64, i64), n: usize) -> Params {
        Params::from_rational_theta(Some(2), 2, n, &[(0, 1), t2], vec![0, 1]).unwrap()
    }

    #[test]
    fn psi_generator_degree_matches_klr_grading() {
        let p = params((1, 2), 2);
        // e = 2: i_1 != i_2 means degree 2; equal means -2.
        let d = gen_psi(&p, &[0, 1], 0);
        assert_eq!(d.degree(&p), 2);
        let d = gen_psi(&p, &[0, 0], 0);
        assert_eq!(d.degree(&p), -2);
        let p3 = Params::from_rational_theta(Some(3), 2, 2, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        assert_eq!(gen_psi(&p3, &[0, 1], 0).degree(&p3), 1);
        assert_eq!(gen_psi(&p3, &[0, 2], 0).degree(&p3), 1);
        assert_eq!(gen_psi(&p3, &[1, 0], 0).degree(&p3), 1);
        let p4 = Params::from_rational_theta(Some(4), 2, 2, &[(0, 1), (1, 2)], vec![0, 2]).unwrap();
        assert_eq!(gen_psi(&p4, &[0, 2], 0).degree(&p4), 0);
    }

    #[test]
    fn psi_generator_crossing_pattern() {
        let p = params((1, 2), 3);
        for r in 0..2 {
            let d = gen_psi(&p, &[0, 1, 0], r);
            let kinds = d.crossings(&p);
            let mut ss = 0;
            let mut sg = 0;
            for c in kinds {
                match c {
                    Crossing::SolidSolid { .. } => ss += 1,
                    Crossing::SolidGhost { .. } => sg += 1,
                    Crossing::None => {}
                    other => panic!("unexpected crossing {other:?}"),
                }
            }
            assert_eq!(ss, 1);
            assert_eq!(sg, 2);
        }
    }

    #[test]
    fn half_diagram_degree_equals_tableau_degree() {
        for t2 in [(1i64, 2i64), (3, 2)] {
            for n in 1..=3usize {
                let p = params(t2, n);
                for lam in all_multipartitions(2, n) {
                    for t in enumerate_std(&lam, &p) {
                        let d = c_half(&crate::tableau::phi(&t, &p), &p);
                        assert_eq!(
                            d.degree(&p),
                            t.degree(&p),
                            "degree mismatch for {lam} tableau {:?} theta2={t2:?}",
                            t.order
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn basis_diagram_degree_is_sum() {
        let p = params((3, 2), 2);
        for lam in all_multipartitions(2, 2) {
            let std = enumerate_std(&lam, &p);
            for s in &std {
                for t in &std {
                    let d = c_basis_diagram(s, t, &p);
                    assert_eq!(d.degree(&p), s.degree(&p) + t.degree(&p));
                }
            }
        }
    }

    #[test]
    fn star_is_involutive_on_events() {
        let p = params((1, 2), 2);
        let d = gen_psi(&p, &[0, 1], 0);
        let dd = d.star(&p).star(&p);
        assert_eq!(d, dd);
    }
}
