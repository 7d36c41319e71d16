//! Standard and semistandard tableaux, degrees, residue sequences and the
//! reading-word bijection between them.

use crate::boxes::{BoxPos, Loading};
use crate::multipartition::{omega, BoxConfiguration, Multipartition};
use crate::params::{Params, Res};

/// A standard tableau, stored as the sequence of boxes in entry order.
/// Standardness is equivalent to every prefix being a multipartition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    pub order: Vec<BoxPos>,
}

impl StandardTableau {
    pub fn shape(&self) -> Multipartition {
        let ell = self
            .order
            .iter()
            .map(|b| b.m as usize + 1)
            .max()
            .unwrap_or(1);
        let mut mp = Multipartition::empty(ell);
        for b in &self.order {
            mp = mp.with_box(b);
        }
        mp
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// The box containing `k` (1-based).
    pub fn box_of(&self, k: usize) -> &BoxPos {
        &self.order[k - 1]
    }

    pub fn entry(&self, b: &BoxPos) -> Option<usize> {
        self.order.iter().position(|x| x == b).map(|i| i + 1)
    }

    pub fn residue_sequence(&self, p: &Params) -> Vec<Res> {
        self.order.iter().map(|b| b.residue(p)).collect()
    }

    /// Entries read along boxes in dominance order; a deterministic sort key.
    pub fn entries_in_dominance_order(&self, p: &Params) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.order.len()).collect();
        idx.sort_by_key(|&i| self.order[i].loading(p));
        let mut out = vec![0; self.order.len()];
        for (rank, i) in idx.into_iter().enumerate() {
            out[rank] = i + 1;
        }
        out
    }

    pub fn degree(&self, p: &Params) -> i64 {
        let mut shape = Multipartition::empty(p.ell);
        let mut deg = 0;
        for b in &self.order {
            shape = shape.with_box(b);
            deg += box_degree(&shape, b, p);
        }
        deg
    }

    /// Restrict to entries 1..=k.
    pub fn restrict(&self, k: usize) -> StandardTableau {
        StandardTableau { order: self.order[..k].to_vec() }
    }
}

/// Degree contribution of `b` as the last box added to `shape` (which must
/// contain it): addable minus removable boxes of the same residue strictly
/// dominated by `b` (strictly to its right).
pub fn box_degree(shape: &Multipartition, b: &BoxPos, p: &Params) -> i64 {
    debug_assert!(shape.contains(b));
    let load = b.loading(p);
    let i = b.residue(p);
    let add = shape
        .addable_res(i, p)
        .into_iter()
        .filter(|a| a.loading(p) > load)
        .count() as i64;
    let rem = shape
        .removable_res(i, p)
        .into_iter()
        .filter(|r| r.loading(p) > load)
        .count() as i64;
    add - rem
}

/// All standard tableaux of the given shape, sorted by the entry sequence
/// read along boxes in dominance order.
pub fn enumerate_std(lambda: &Multipartition, p: &Params) -> Vec<StandardTableau> {
    fn rec(shape: &Multipartition, acc: &mut Vec<BoxPos>, out: &mut Vec<StandardTableau>) {
        if shape.size() == 0 {
            let mut order = acc.clone();
            order.reverse();
            out.push(StandardTableau { order });
            return;
        }
        for b in shape.removable() {
            acc.push(b);
            rec(&shape.without_box(&b), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, &mut Vec::new(), &mut out);
    out.sort_by_key(|t| t.entries_in_dominance_order(p));
    out
}

/// Addable and removable boxes of residue `i`, sorted most dominant first.
pub fn addable_removable(
    lambda: &Multipartition,
    i: Res,
    p: &Params,
) -> (Vec<BoxPos>, Vec<BoxPos>) {
    (lambda.addable_res(i, p), lambda.removable_res(i, p))
}

/// A semistandard tableau: a bijection from the boxes of the shape to the
/// loadings of the weight configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    pub shape: Multipartition,
    /// For each box of the shape (in dominance order) the assigned loading.
    pub entries: Vec<(BoxPos, Loading)>,
}

impl SemistandardTableau {
    pub fn value(&self, b: &BoxPos) -> Option<Loading> {
        self.entries.iter().find(|(x, _)| x == b).map(|(_, l)| *l)
    }

    /// The three defining conditions, re-checked from scratch.
    pub fn is_semistandard(&self, p: &Params) -> bool {
        let elli = p.ell as i64;
        for (b, l) in &self.entries {
            if b.r == 1 && b.c == 1 {
                let red = Loading { x: p.theta_num[b.m as usize], tb: 0 };
                if !(*l > red) {
                    return false;
                }
            }
            if b.r > 1 {
                let up = BoxPos::new(b.r - 1, b.c, b.m);
                match self.value(&up) {
                    Some(lu) => {
                        let shifted = Loading { x: lu.x + elli, tb: lu.tb };
                        if !(*l > shifted) {
                            return false;
                        }
                    }
                    None => return false,
                }
            }
            if b.c > 1 {
                let left = BoxPos::new(b.r, b.c - 1, b.m);
                match self.value(&left) {
                    Some(ll) => {
                        let shifted = Loading { x: ll.x - elli, tb: ll.tb };
                        if !(*l > shifted) {
                            return false;
                        }
                    }
                    None => return false,
                }
            }
        }
        true
    }

    /// Boxes ordered by their assigned loading (the reading word).
    pub fn reading_word(&self) -> Vec<BoxPos> {
        let mut v = self.entries.clone();
        v.sort_by_key(|(_, l)| *l);
        v.into_iter().map(|(b, _)| b).collect()
    }
}

/// All bijections shape -> loadings(mu) satisfying the semistandard
/// conditions, by backtracking over boxes in dominance order.
pub fn enumerate_sstd(
    lambda: &Multipartition,
    mu: &BoxConfiguration,
    p: &Params,
) -> Vec<SemistandardTableau> {
    assert_eq!(lambda.size(), mu.boxes.len(), "size mismatch");
    let boxes = lambda.boxes_by_dominance(p);
    let loads = mu.loadings(p);
    let n = boxes.len();
    let mut used = vec![false; n];
    let mut assign: Vec<(BoxPos, Loading)> = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn ok_partial(t: &SemistandardTableau, b: &BoxPos, p: &Params) -> bool {
        let elli = p.ell as i64;
        let l = t.value(b).unwrap();
        if b.r == 1 && b.c == 1 {
            let red = Loading { x: p.theta_num[b.m as usize], tb: 0 };
            if !(l > red) {
                return false;
            }
        }
        if b.r > 1 {
            if let Some(lu) = t.value(&BoxPos::new(b.r - 1, b.c, b.m)) {
                if !(l > Loading { x: lu.x + elli, tb: lu.tb }) {
                    return false;
                }
            }
        }
        if b.c > 1 {
            if let Some(ll) = t.value(&BoxPos::new(b.r, b.c - 1, b.m)) {
                if !(l > Loading { x: ll.x - elli, tb: ll.tb }) {
                    return false;
                }
            }
        }
        // Also check boxes that sit after b but are already assigned.
        let down = BoxPos::new(b.r + 1, b.c, b.m);
        if let Some(ld) = t.value(&down) {
            if !(ld > Loading { x: l.x + elli, tb: l.tb }) {
                return false;
            }
        }
        let right = BoxPos::new(b.r, b.c + 1, b.m);
        if let Some(lr) = t.value(&right) {
            if !(lr > Loading { x: l.x - elli, tb: l.tb }) {
                return false;
            }
        }
        true
    }
    fn rec(
        k: usize,
        boxes: &[BoxPos],
        loads: &[Loading],
        used: &mut Vec<bool>,
        assign: &mut Vec<(BoxPos, Loading)>,
        shape: &Multipartition,
        p: &Params,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if k == boxes.len() {
            let t = SemistandardTableau { shape: shape.clone(), entries: assign.clone() };
            debug_assert!(t.is_semistandard(p));
            out.push(t);
            return;
        }
        for (j, &l) in loads.iter().enumerate() {
            if used[j] {
                continue;
            }
            used[j] = true;
            assign.push((boxes[k], l));
            let t = SemistandardTableau { shape: shape.clone(), entries: assign.clone() };
            if ok_partial(&t, &boxes[k], p) {
                rec(k + 1, boxes, loads, used, assign, shape, p, out);
            }
            assign.pop();
            used[j] = false;
        }
    }
    rec(0, &boxes, &loads, &mut used, &mut assign, lambda, p, &mut out);
    out.sort_by_key(|t| {
        let mut v = t.entries.clone();
        v.sort_by_key(|(b, _)| b.loading(p));
        v.into_iter().map(|(_, l)| l).collect::<Vec<_>>()
    });
    out
}

/// The loadings of the minimal multipartition, ascending (leftmost first).
pub fn omega_loadings(p: &Params) -> Vec<Loading> {
    let om = omega(p);
    BoxConfiguration::from_multipartition(&om, p).loadings(p)
}

/// The weight-omega semistandard tableau with the same reading word as `t`.
pub fn phi(t: &StandardTableau, p: &Params) -> SemistandardTableau {
    let loads = omega_loadings(p);
    let entries = t
        .order
        .iter()
        .enumerate()
        .map(|(k, b)| (*b, loads[k]))
        .collect();
    SemistandardTableau { shape: t.shape(), entries }
}

/// Inverse of `phi` on weight-omega semistandard tableaux.
pub fn phi_inverse(t: &SemistandardTableau, p: &Params) -> StandardTableau {
    let loads = omega_loadings(p);
    let mut order = vec![None; loads.len()];
    for (b, l) in &t.entries {
        let k = loads
            .iter()
            .position(|x| x == l)
            .expect("weight is not omega");
        order[k] = Some(*b);
    }
    StandardTableau { order: order.into_iter().map(|b| b.unwrap()).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::all_multipartitions;

    fn fig1_params(theta: &[(i64, i64)]) -> Params {
        Params::from_rational_theta(Some(3), 2, 9, theta, vec![0, 1]).unwrap()
    }

    /// The tableau with component-1 rows (1,2,3),(7,8) and component-2 rows
    /// (4,5,6),(9), of shape ((3,2),(3,1)).
    fn fig1_tableau() -> StandardTableau {
        let order = vec![
            BoxPos::new(1, 1, 0),
            BoxPos::new(1, 2, 0),
            BoxPos::new(1, 3, 0),
            BoxPos::new(1, 1, 1),
            BoxPos::new(1, 2, 1),
            BoxPos::new(1, 3, 1),
            BoxPos::new(2, 1, 0),
            BoxPos::new(2, 2, 0),
            BoxPos::new(2, 1, 1),
        ];
        StandardTableau { order }
    }

    #[test]
    fn degree_goldens() {
        let s_params = fig1_params(&[(0, 1), (1, 2)]);
        assert_eq!(fig1_tableau().degree(&s_params), 5);
        let t_params = fig1_params(&[(15, 2), (0, 1)]);
        assert_eq!(fig1_tableau().degree(&t_params), 2);
    }

    #[test]
    fn residue_sequence_golden() {
        let p = fig1_params(&[(0, 1), (1, 2)]);
        assert_eq!(
            fig1_tableau().residue_sequence(&p),
            vec![0, 1, 2, 1, 2, 0, 2, 0, 0]
        );
    }

    #[test]
    fn degree_both_tableaux_of_two_columns() {
        // e=2, kappa=(0,1), theta=(0,1/2), shape ((1),(1)): both degree 1.
        let p = Params::from_rational_theta(Some(2), 2, 2, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        let lam = Multipartition::new(vec![vec![1], vec![1]]);
        let ts = enumerate_std(&lam, &p);
        assert_eq!(ts.len(), 2);
        for t in &ts {
            assert_eq!(t.degree(&p), 1);
        }
    }

    #[test]
    fn counts_and_phi_roundtrip() {
        let p = Params::from_rational_theta(Some(2), 2, 2, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        let total: usize = all_multipartitions(2, 2)
            .iter()
            .map(|l| enumerate_std(l, &p).len().pow(2))
            .sum();
        assert_eq!(total, 8);
        for n in 0..=4usize {
            let p =
                Params::from_rational_theta(Some(2), 2, n, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
            let om = omega(&p);
            let omc = BoxConfiguration::from_multipartition(&om, &p);
            for lam in all_multipartitions(2, n) {
                let std = enumerate_std(&lam, &p);
                let sstd = enumerate_sstd(&lam, &omc, &p);
                assert_eq!(std.len(), sstd.len(), "count mismatch at {lam}");
                for t in &std {
                    let big = phi(t, &p);
                    assert!(big.is_semistandard(&p));
                    // Reading words agree.
                    assert_eq!(big.reading_word(), t.order);
                    assert_eq!(&phi_inverse(&big, &p), t);
                }
            }
        }
    }

    #[test]
    fn incremental_vs_batch_degree() {
        let p = Params::from_rational_theta(Some(3), 2, 3, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        for lam in all_multipartitions(2, 3) {
            for t in enumerate_std(&lam, &p) {
                let batch = t.degree(&p);
                let mut inc = 0;
                for k in 1..=t.size() {
                    inc += box_degree(&t.restrict(k).shape(), t.box_of(k), &p);
                }
                assert_eq!(batch, inc);
            }
        }
    }

    #[test]
    fn single_row_has_one_tableau() {
        let p = Params::from_rational_theta(Some(2), 2, 4, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        let lam = Multipartition::new(vec![vec![4], vec![]]);
        assert_eq!(enumerate_std(&lam, &p).len(), 1);
    }

    #[test]
    fn fig1_addable_removable_count() {
        let p = fig1_params(&[(0, 1), (1, 2)]);
        let lam = Multipartition::new(vec![vec![3, 2], vec![3, 1]]);
        let (a, r) = addable_removable(&lam, 0, &p);
        assert_eq!(a.len() + r.len(), 4);
    }
}
