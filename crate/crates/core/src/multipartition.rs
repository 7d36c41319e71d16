//! Multipartitions, box configurations, addable/removable boxes and the
//! theta-dominance order.

use crate::boxes::{BoxPos, Loading};
use crate::params::{Params, Res};
use itertools::Itertools;

/// An `ell`-multipartition: one weakly decreasing row vector per component.
/// Trailing zero rows are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    pub components: Vec<Vec<u32>>,
}

impl Multipartition {
    pub fn new(components: Vec<Vec<u32>>) -> Self {
        let components = components
            .into_iter()
            .map(|mut rows| {
                while rows.last() == Some(&0) {
                    rows.pop();
                }
                debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
                rows
            })
            .collect();
        Multipartition { components }
    }

    pub fn empty(ell: usize) -> Self {
        Multipartition { components: vec![Vec::new(); ell] }
    }

    pub fn size(&self) -> usize {
        self.components
            .iter()
            .map(|rows| rows.iter().map(|&x| x as usize).sum::<usize>())
            .sum()
    }

    pub fn row_len(&self, m: u32, r: u32) -> u32 {
        self.components[m as usize].get((r - 1) as usize).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: &BoxPos) -> bool {
        b.c <= self.row_len(b.m, b.r)
    }

    /// All boxes of the Young diagram.
    pub fn boxes(&self) -> Vec<BoxPos> {
        let mut out = Vec::with_capacity(self.size());
        for (m, rows) in self.components.iter().enumerate() {
            for (r0, &len) in rows.iter().enumerate() {
                for c0 in 0..len {
                    out.push(BoxPos::new(r0 as u32 + 1, c0 + 1, m as u32));
                }
            }
        }
        out
    }

    /// Boxes sorted most dominant first.
    pub fn boxes_by_dominance(&self, p: &Params) -> Vec<BoxPos> {
        let mut boxes = self.boxes();
        boxes.sort_by_key(|b| b.loading(p));
        boxes
    }

    /// Removable boxes (boxes whose removal leaves a multipartition).
    pub fn removable(&self) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for (m, rows) in self.components.iter().enumerate() {
            for (r0, &len) in rows.iter().enumerate() {
                if len == 0 {
                    continue;
                }
                let below = rows.get(r0 + 1).copied().unwrap_or(0);
                if len > below {
                    out.push(BoxPos::new(r0 as u32 + 1, len, m as u32));
                }
            }
        }
        out
    }

    /// Addable boxes within the frame `r + c <= 2n`.
    pub fn addable(&self, p: &Params) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for (m, rows) in self.components.iter().enumerate() {
            for r0 in 0..=rows.len() {
                let here = rows.get(r0).copied().unwrap_or(0);
                let above = if r0 == 0 { u32::MAX } else { rows[r0 - 1] };
                if above > here {
                    let b = BoxPos::new(r0 as u32 + 1, here + 1, m as u32);
                    if b.in_frame(p) {
                        out.push(b);
                    }
                }
            }
        }
        out
    }

    pub fn addable_res(&self, i: Res, p: &Params) -> Vec<BoxPos> {
        let mut v: Vec<BoxPos> = self
            .addable(p)
            .into_iter()
            .filter(|b| b.residue(p) == p.res(i))
            .collect();
        v.sort_by_key(|b| b.loading(p));
        v
    }

    pub fn removable_res(&self, i: Res, p: &Params) -> Vec<BoxPos> {
        let mut v: Vec<BoxPos> = self
            .removable()
            .into_iter()
            .filter(|b| b.residue(p) == p.res(i))
            .collect();
        v.sort_by_key(|b| b.loading(p));
        v
    }

    pub fn with_box(&self, b: &BoxPos) -> Multipartition {
        let mut components = self.components.clone();
        let rows = &mut components[b.m as usize];
        if rows.len() < b.r as usize {
            rows.resize(b.r as usize, 0);
        }
        rows[(b.r - 1) as usize] += 1;
        debug_assert_eq!(rows[(b.r - 1) as usize], b.c);
        Multipartition::new(components)
    }

    pub fn without_box(&self, b: &BoxPos) -> Multipartition {
        let mut components = self.components.clone();
        let rows = &mut components[b.m as usize];
        debug_assert_eq!(rows[(b.r - 1) as usize], b.c);
        rows[(b.r - 1) as usize] -= 1;
        Multipartition::new(components)
    }

    /// Componentwise number of columns bounded by `h`.
    pub fn max_columns(&self) -> u32 {
        self.components
            .iter()
            .map(|rows| rows.first().copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn conjugate_components(&self) -> Multipartition {
        let components = self
            .components
            .iter()
            .map(|rows| {
                let cols = rows.first().copied().unwrap_or(0);
                (1..=cols)
                    .map(|c| rows.iter().filter(|&&len| len >= c).count() as u32)
                    .collect()
            })
            .collect();
        Multipartition::new(components)
    }
}

impl std::fmt::Display for Multipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let comps = self
            .components
            .iter()
            .map(|rows| {
                if rows.is_empty() {
                    "[]".to_string()
                } else {
                    format!("[{}]", rows.iter().join(","))
                }
            })
            .join(",");
        write!(f, "({comps})")
    }
}

/// A set of boxes within the frame. Multipartitions embed via their Young
/// diagram; general configurations arise inside the rewriting engine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxConfiguration {
    pub boxes: Vec<BoxPos>,
}

impl BoxConfiguration {
    pub fn new(mut boxes: Vec<BoxPos>, p: &Params) -> Self {
        assert!(boxes.iter().all(|b| b.in_frame(p)), "box outside the frame");
        boxes.sort_by_key(|b| b.loading(p));
        BoxConfiguration { boxes }
    }

    pub fn from_multipartition(mp: &Multipartition, p: &Params) -> Self {
        BoxConfiguration::new(mp.boxes(), p)
    }

    pub fn loadings(&self, p: &Params) -> Vec<Loading> {
        self.boxes.iter().map(|b| b.loading(p)).collect()
    }

    /// Residues read in dominance order.
    pub fn residue_sequence(&self, p: &Params) -> Vec<Res> {
        self.boxes.iter().map(|b| b.residue(p)).collect()
    }
}

/// Outcome of a multipartition dominance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomOrdering {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Counting form of theta-dominance: `mu` is dominated by `lambda` iff for
/// every box b of mu there are more residue-matching boxes of lambda weakly
/// left of b than there are boxes of mu (other than b itself) strictly left
/// of b. Pinned against the printed rank-2 Hasse chains.
fn dominates(lambda: &Multipartition, mu: &Multipartition, p: &Params) -> bool {
    if lambda == mu {
        return false;
    }
    let lb = mu.boxes();
    let lam_boxes: Vec<(Loading, Res)> = lambda
        .boxes()
        .iter()
        .map(|b| (b.loading(p), b.residue(p)))
        .collect();
    let mu_boxes: Vec<(Loading, Res)> = lb.iter().map(|b| (b.loading(p), b.residue(p))).collect();
    for b in &lb {
        let load = b.loading(p);
        let res = b.residue(p);
        let in_lambda = lam_boxes
            .iter()
            .filter(|(l, r)| *r == res && *l <= load)
            .count();
        let in_mu = mu_boxes
            .iter()
            .filter(|(l, r)| *r == res && *l < load)
            .count();
        if in_lambda <= in_mu {
            return false;
        }
    }
    true
}

/// Compare two multipartitions of equal size in the theta-dominance order.
pub fn dominance_mp(lambda: &Multipartition, mu: &Multipartition, p: &Params) -> DomOrdering {
    assert_eq!(lambda.size(), mu.size(), "size mismatch");
    if lambda == mu {
        return DomOrdering::Equal;
    }
    let gt = dominates(lambda, mu, p);
    let lt = dominates(mu, lambda, p);
    match (gt, lt) {
        (true, false) => DomOrdering::Greater,
        (false, true) => DomOrdering::Less,
        (false, false) => DomOrdering::Incomparable,
        (true, true) => panic!("dominance is not antisymmetric on {lambda} vs {mu}"),
    }
}

fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = n.min(max);
        for first in (1..=top).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All `ell`-multipartitions of `n` in a fixed deterministic order.
pub fn all_multipartitions(ell: usize, n: usize) -> Vec<Multipartition> {
    fn rec(ell: usize, n: u32, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Multipartition>) {
        if acc.len() == ell {
            if n == 0 {
                out.push(Multipartition::new(acc.clone()));
            }
            return;
        }
        let remaining_slots = ell - acc.len();
        for k in 0..=n {
            if remaining_slots == 1 && k != n {
                continue;
            }
            for part in partitions_of(k) {
                acc.push(part);
                rec(ell, n - k, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(ell, n as u32, &mut Vec::new(), &mut out);
    out
}

/// The theta-minimal multipartition (weight of the Schur idempotent),
/// computed from the dominance order rather than hard-coded.
pub fn omega(p: &Params) -> Multipartition {
    let all = all_multipartitions(p.ell, p.n);
    let mut minima: Vec<&Multipartition> = Vec::new();
    'outer: for cand in &all {
        for other in &all {
            if dominates(cand, other, p) {
                continue 'outer;
            }
        }
        minima.push(cand);
    }
    assert_eq!(
        minima.len(),
        1,
        "theta-minimum is not unique for these parameters"
    );
    minima[0].clone()
}

/// A total refinement of the dominance order, ascending (least dominant
/// first), deterministic via the enumeration order on ties.
pub fn total_refinement_ascending(p: &Params) -> Vec<Multipartition> {
    let all = all_multipartitions(p.ell, p.n);
    let k = all.len();
    let mut above: Vec<usize> = vec![0; k]; // number of elements strictly below, pending
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); k]; // i -> j with all[i] < all[j]
    for i in 0..k {
        for j in 0..k {
            if i != j && dominates(&all[j], &all[i], p) {
                edges[i].push(j);
                above[j] += 1;
            }
        }
    }
    let mut out = Vec::with_capacity(k);
    let mut used = vec![false; k];
    for _ in 0..k {
        let next = (0..k)
            .filter(|&i| !used[i] && above[i] == 0)
            .min()
            .expect("dominance order is acyclic");
        used[next] = true;
        for &j in &edges[next] {
            above[j] -= 1;
        }
        out.push(all[next].clone());
    }
    out
}

/// Multipartitions with at most `h` columns in any component.
pub fn with_column_bound(ell: usize, n: usize, h: u32) -> Vec<Multipartition> {
    all_multipartitions(ell, n)
        .into_iter()
        .filter(|mp| mp.max_columns() <= h)
        .collect()
}
