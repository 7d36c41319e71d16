//! Good-node combinatorics, the label set of simple modules, and the
//! charge/weighting translation.

use crate::boxes::{BoxOrd, BoxPos};
use crate::multipartition::{all_multipartitions, Multipartition};
use crate::params::{Params, Res};
use std::collections::HashMap;

/// A tagged addable/removable box of the i-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Addable,
    Removable,
}

/// The i-sequence: addable and removable i-boxes listed most dominant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ISequence {
    pub entries: Vec<(BoxPos, Tag)>,
}

pub fn i_sequence(lambda: &Multipartition, i: Res, p: &Params) -> ISequence {
    let mut entries: Vec<(BoxPos, Tag)> = lambda
        .addable_res(i, p)
        .into_iter()
        .map(|b| (b, Tag::Addable))
        .chain(
            lambda
                .removable_res(i, p)
                .into_iter()
                .map(|b| (b, Tag::Removable)),
        )
        .collect();
    entries.sort_by_key(|(b, _)| b.loading(p));
    ISequence { entries }
}

/// Cancellation convention used when reducing an i-sequence.
///
/// `AddableThenRemovable` repeatedly deletes adjacent (A,R) pairs, yielding
/// the R..RA..A normal form; `RemovableThenAddable` is the dual rule deleting
/// adjacent (R,A) pairs, yielding A..AR..R. The two induce dual crystal
/// structures whose reachable-label sets are exchanged by component-reversed
/// conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cancellation {
    AddableThenRemovable,
    RemovableThenAddable,
}

pub fn reduce_sequence(seq: &ISequence, conv: Cancellation) -> ISequence {
    let mut v = seq.entries.clone();
    loop {
        let mut cancelled = false;
        let mut k = 0;
        while k + 1 < v.len() {
            let pat = (v[k].1, v[k + 1].1);
            let hit = match conv {
                Cancellation::AddableThenRemovable => pat == (Tag::Addable, Tag::Removable),
                Cancellation::RemovableThenAddable => pat == (Tag::Removable, Tag::Addable),
            };
            if hit {
                v.drain(k..=k + 1);
                cancelled = true;
            } else {
                k += 1;
            }
        }
        if !cancelled {
            break;
        }
    }
    ISequence { entries: v }
}

/// Reduce by cancelling (A,R) pairs and return the good node: the rightmost
/// (least dominant) surviving removable box, if any.
pub fn reduce_and_good_node(seq: &ISequence) -> (ISequence, Option<BoxPos>) {
    let reduced = reduce_sequence(seq, Cancellation::AddableThenRemovable);
    let good = reduced
        .entries
        .iter()
        .rev()
        .find(|(_, t)| *t == Tag::Removable)
        .map(|(b, _)| *b);
    (reduced, good)
}

/// Good node under the dual cancellation; this is the crystal whose
/// reachable set labels the simple modules of the cellular structure.
pub fn dual_good_node(seq: &ISequence) -> Option<BoxPos> {
    let reduced = reduce_sequence(seq, Cancellation::RemovableThenAddable);
    reduced
        .entries
        .iter()
        .rev()
        .find(|(_, t)| *t == Tag::Removable)
        .map(|(b, _)| *b)
}

/// The label set of simple modules: multipartitions reachable from the empty
/// one by adding good nodes (equivalently, whose good-node removals chain
/// down to the empty multipartition). Memoised bottom-up across sizes.
pub fn uglov_set(p: &Params) -> Vec<Multipartition> {
    let mut member: HashMap<Multipartition, bool> = HashMap::new();
    member.insert(Multipartition::empty(p.ell), true);
    for k in 1..=p.n {
        for lam in all_multipartitions(p.ell, k) {
            let mut ok = false;
            for i in p.residue_universe() {
                let seq = i_sequence(&lam, i, p);
                if let Some(good) = dual_good_node(&seq) {
                    let below = lam.without_box(&good);
                    if member.get(&below).copied().unwrap_or(false) {
                        ok = true;
                        break;
                    }
                }
            }
            member.insert(lam, ok);
        }
    }
    all_multipartitions(p.ell, p.n)
        .into_iter()
        .filter(|l| member[l])
        .collect()
}

/// An integer charge vector of length ell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Charge {
    pub s: Vec<i64>,
}

/// Translate a charge into the corresponding weighting/multicharge pair:
/// theta_m = (m-1)/ell - s_m and kappa_m = -s_m mod e.
pub fn charge_to_pair(s: &Charge, e: Option<u64>, ell: usize, n: usize) -> Params {
    assert_eq!(s.s.len(), ell);
    let elli = ell as i64;
    let theta_num: Vec<i64> = (0..ell)
        .map(|m| m as i64 - elli * s.s[m])
        .collect();
    let kappa: Vec<Res> = s
        .s
        .iter()
        .map(|&sm| match e {
            Some(e) => (-sm).rem_euclid(e as i64),
            None => -sm,
        })
        .collect();
    Params::new(e, ell, n, theta_num, kappa).expect("charge produces a valid weighting")
}

/// The charge order on boxes: smaller is less dominant in the induced
/// weighting. Compares c - r + s_m with the component tiebreak m > m'.
pub fn s_order_cmp(b1: &BoxPos, b2: &BoxPos, s: &Charge) -> std::cmp::Ordering {
    let v1 = b1.c as i64 - b1.r as i64 + s.s[b1.m as usize];
    let v2 = b2.c as i64 - b2.r as i64 + s.s[b2.m as usize];
    v1.cmp(&v2).then(b2.m.cmp(&b1.m))
}

/// Check that the charge order agrees with theta-dominance (reversed) on all
/// in-frame boxes.
pub fn equivalence_check(s: &Charge, e: Option<u64>, ell: usize, n: usize) -> bool {
    let p = charge_to_pair(s, e, ell, n);
    let mut boxes = Vec::new();
    for m in 0..ell as u32 {
        for r in 1..=(2 * n) as u32 {
            for c in 1..=(2 * n) as u32 {
                if (r + c) as usize <= 2 * n {
                    boxes.push(BoxPos::new(r, c, m));
                }
            }
        }
    }
    for a in &boxes {
        for b in &boxes {
            if a == b {
                continue;
            }
            let by_s = s_order_cmp(a, b, s);
            let by_theta = crate::boxes::box_cmp(a, b, &p);
            let consistent = match by_theta {
                BoxOrd::Dominates => by_s == std::cmp::Ordering::Greater,
                BoxOrd::DominatedBy => by_s == std::cmp::Ordering::Less,
                BoxOrd::Equal => false,
            };
            if !consistent {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1(theta: &[(i64, i64)]) -> Params {
        Params::from_rational_theta(Some(3), 2, 9, theta, vec![0, 1]).unwrap()
    }

    fn fig1_shape() -> Multipartition {
        Multipartition::new(vec![vec![3, 2], vec![3, 1]])
    }

    #[test]
    fn fig1_zero_sequences() {
        let tags = |p: &Params| {
            i_sequence(&fig1_shape(), 0, p)
                .entries
                .iter()
                .map(|(_, t)| *t)
                .collect::<Vec<_>>()
        };
        use Tag::*;
        assert_eq!(
            tags(&fig1(&[(0, 1), (1, 2)])),
            vec![Addable, Removable, Removable, Removable]
        );
        assert_eq!(
            tags(&fig1(&[(15, 2), (0, 1)])),
            vec![Removable, Removable, Addable, Removable]
        );
        assert_eq!(
            tags(&fig1(&[(3, 2), (0, 1)])),
            vec![Removable, Addable, Removable, Removable]
        );
    }

    #[test]
    fn fig1_good_nodes_9_9_8() {
        // Boxes containing 9, 9, 8 in the three depicted tableaux:
        // entry 9 sits at (2,1,2) and entry 8 at (2,2,1) in all of them.
        let box9 = BoxPos::new(2, 1, 1);
        let box8 = BoxPos::new(2, 2, 0);
        let good = |p: &Params| reduce_and_good_node(&i_sequence(&fig1_shape(), 0, p)).1;
        assert_eq!(good(&fig1(&[(0, 1), (1, 2)])), Some(box9));
        assert_eq!(good(&fig1(&[(15, 2), (0, 1)])), Some(box9));
        assert_eq!(good(&fig1(&[(3, 2), (0, 1)])), Some(box8));
    }

    #[test]
    fn reduce_trivial_examples() {
        let p = fig1(&[(0, 1), (1, 2)]);
        // A,R reduces to empty; R,A is unchanged with the R as good node.
        let lam = Multipartition::new(vec![vec![2], vec![]]);
        // Build artificial sequences directly.
        let a = (BoxPos::new(1, 3, 0), Tag::Addable);
        let r = (BoxPos::new(2, 1, 0), Tag::Removable);
        let (red, good) = reduce_and_good_node(&ISequence { entries: vec![a, r] });
        assert!(red.entries.is_empty());
        assert_eq!(good, None);
        let (red, good) = reduce_and_good_node(&ISequence { entries: vec![r, a] });
        assert_eq!(red.entries.len(), 2);
        assert_eq!(good, Some(BoxPos::new(2, 1, 0)));
        let _ = (lam, p);
    }

    #[test]
    fn empty_multipartition_sequences_are_all_addable() {
        let p = Params::from_rational_theta(Some(2), 2, 2, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        let empty = Multipartition::empty(2);
        for i in 0..2 {
            let seq = i_sequence(&empty, i, &p);
            assert!(seq.entries.iter().all(|(_, t)| *t == Tag::Addable));
            for (b, _) in seq.entries {
                assert_eq!(b.r, 1);
                assert_eq!(b.c, 1);
                assert_eq!(p.kappa[b.m as usize], i);
            }
        }
    }

    fn mp(c: &[&[u32]]) -> Multipartition {
        Multipartition::new(c.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn rank2_label_sets() {
        let sorted = |mut v: Vec<Multipartition>| {
            v.sort();
            v
        };
        // theta = (0,1/2): the printed label set.
        let p = Params::from_rational_theta(Some(2), 2, 2, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        assert_eq!(
            sorted(uglov_set(&p)),
            sorted(vec![mp(&[&[1, 1], &[]]), mp(&[&[], &[1, 1]])])
        );
        // theta = (0,3/2): the set consistent with the printed decomposition
        // matrix (unit diagonals at ({},(1^2)) and ((1),(1))).
        let p = Params::from_rational_theta(Some(2), 2, 2, &[(0, 1), (3, 2)], vec![0, 1]).unwrap();
        assert_eq!(
            sorted(uglov_set(&p)),
            sorted(vec![mp(&[&[1], &[1]]), mp(&[&[], &[1, 1]])])
        );
    }

    #[test]
    fn label_count_independent_of_theta() {
        for n in 0..=4usize {
            let mut counts = Vec::new();
            for t2 in [(1i64, 2i64), (3, 2), (5, 2), (7, 2)] {
                let p =
                    Params::from_rational_theta(Some(2), 2, n, &[(0, 1), t2], vec![0, 1]).unwrap();
                counts.push(uglov_set(&p).len());
            }
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "n={n}: {counts:?}");
        }
    }

    #[test]
    fn saturation_of_label_set() {
        let p = Params::from_rational_theta(Some(2), 2, 3, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        let labels = uglov_set(&p);
        let smaller = uglov_set(&Params::from_rational_theta(
            Some(2),
            2,
            2,
            &[(0, 1), (1, 2)],
            vec![0, 1],
        )
        .unwrap());
        for lam in labels {
            let mut witnessed = false;
            for i in p.residue_universe() {
                if let Some(g) = dual_good_node(&i_sequence(&lam, i, &p)) {
                    if smaller.contains(&lam.without_box(&g)) {
                        witnessed = true;
                    }
                }
            }
            assert!(witnessed, "{lam} has no witnessing good node");
        }
    }

    #[test]
    fn charge_translation_examples() {
        let p = charge_to_pair(&Charge { s: vec![0, 0] }, Some(2), 2, 2);
        assert_eq!(p.theta_num, vec![0, 1]); // theta = (0, 1/2)
        assert_eq!(p.kappa, vec![0, 0]);
        let p = charge_to_pair(&Charge { s: vec![0, -1] }, Some(2), 2, 2);
        assert_eq!(p.theta_num, vec![0, 3]); // theta = (0, 3/2)
        assert_eq!(p.kappa, vec![0, 1]);
    }

    #[test]
    fn order_equivalence_small_grid() {
        for s1 in -2..=2i64 {
            for s2 in -2..=2i64 {
                let s = Charge { s: vec![s1, s2] };
                assert!(equivalence_check(&s, Some(2), 2, 3), "s = ({s1},{s2})");
            }
        }
    }
}
