//! Cyclic boxes, cyclic tableaux, the greedy least-dominant tableau and the
//! data feeding the coset-like basis.

use crate::boxes::BoxPos;
use crate::multipartition::Multipartition;
use crate::params::Params;
use crate::tableau::StandardTableau;

/// The two-bullet cyclicity test for a removable box.
pub fn is_cyclic_box(lambda: &Multipartition, b: &BoxPos, p: &Params) -> bool {
    debug_assert!(lambda.removable().contains(b));
    let i = b.residue(p);
    let load = b.loading(p);
    // Every i- or (i±1)-box of lambda strictly to the right must share the
    // row and component.
    for other in lambda.boxes() {
        let ri = other.residue(p);
        let near = ri == i || ri == p.res(i + 1) || ri == p.res(i - 1);
        if near && other.loading(p) > load && !(other.m == b.m && other.r == b.r) {
            return false;
        }
    }
    // Every addable i-box is left of b, or right of all i-boxes of lambda.
    let rightmost_i = lambda
        .boxes()
        .iter()
        .filter(|x| x.residue(p) == i)
        .map(|x| x.loading(p))
        .max();
    for a in lambda.addable_res(i, p) {
        let la = a.loading(p);
        if la < load {
            continue;
        }
        match rightmost_i {
            Some(r) if la > r => continue,
            _ => return false,
        }
    }
    true
}

/// Whether every prefix removal of `t` happens at a cyclic box.
pub fn is_cyclic_tableau(t: &StandardTableau, p: &Params) -> bool {
    let mut shape = t.shape();
    for k in (1..=t.size()).rev() {
        let b = t.box_of(k);
        if !is_cyclic_box(&shape, b, p) {
            return false;
        }
        shape = shape.without_box(b);
    }
    true
}

/// The greedy tableau: place n in the least dominant removable box and
/// recurse.
pub fn t_lambda_theta(lambda: &Multipartition, p: &Params) -> StandardTableau {
    let mut shape = lambda.clone();
    let mut rev = Vec::with_capacity(lambda.size());
    while shape.size() > 0 {
        let b = shape
            .removable()
            .into_iter()
            .max_by_key(|b| b.loading(p))
            .expect("nonempty shape has a removable box");
        rev.push(b);
        shape = shape.without_box(&b);
    }
    rev.reverse();
    StandardTableau { order: rev }
}

/// Search for any cyclic tableau, trying the greedy one first, then bounded
/// backtracking over removable-box choices.
pub fn find_cyclic_tableau(lambda: &Multipartition, p: &Params) -> Option<StandardTableau> {
    let greedy = t_lambda_theta(lambda, p);
    if is_cyclic_tableau(&greedy, p) {
        return Some(greedy);
    }
    fn rec(shape: &Multipartition, acc: &mut Vec<BoxPos>, p: &Params) -> bool {
        if shape.size() == 0 {
            return true;
        }
        let mut rem = shape.removable();
        rem.sort_by_key(|b| std::cmp::Reverse(b.loading(p)));
        for b in rem {
            if is_cyclic_box(shape, &b, p) {
                acc.push(b);
                if rec(&shape.without_box(&b), acc, p) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    if rec(lambda, &mut acc, p) {
        acc.reverse();
        Some(StandardTableau { order: acc })
    } else {
        None
    }
}

/// Whether the pair is cyclic for every shape in the given set.
pub fn is_cyclic_pair(shapes: &[Multipartition], p: &Params) -> bool {
    shapes.iter().all(|l| find_cyclic_tableau(l, p).is_some())
}

/// Per-shape data for the coset-like basis: the greedy tableau, the exponent
/// vector counting addable same-residue boxes to the right at each step, and
/// a fixed reduced word for each standard tableau's place permutation.
pub struct CyclicData {
    pub t_lambda: StandardTableau,
    pub y_exponents: Vec<usize>,
}

impl CyclicData {
    pub fn new(lambda: &Multipartition, p: &Params) -> Self {
        let t_lambda = t_lambda_theta(lambda, p);
        let mut shape = Multipartition::empty(p.ell);
        let mut y_exponents = Vec::with_capacity(lambda.size());
        for b in &t_lambda.order {
            shape = shape.with_box(b);
            let load = b.loading(p);
            let i = b.residue(p);
            let a = shape
                .addable_res(i, p)
                .into_iter()
                .filter(|x| x.loading(p) > load)
                .count();
            y_exponents.push(a);
        }
        CyclicData { t_lambda, y_exponents }
    }

    /// The permutation carrying the greedy tableau to `s` by place
    /// permutation: entry k of the greedy tableau becomes perm[k-1]+1 in s.
    pub fn place_permutation(&self, s: &StandardTableau) -> Vec<usize> {
        self.t_lambda
            .order
            .iter()
            .map(|b| s.entry(b).expect("same shape") - 1)
            .collect()
    }

    /// Deterministic reduced word via bubble sort: adjacent transpositions
    /// s_{i+1} listed bottom-up, each index 0-based (s_i swaps i, i+1).
    pub fn reduced_word(&self, s: &StandardTableau) -> Vec<usize> {
        let mut perm = self.place_permutation(s);
        let mut word = Vec::new();
        let n = perm.len();
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if perm[i] > perm[i + 1] {
                    perm.swap(i, i + 1);
                    word.push(i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::all_multipartitions;
    use crate::tableau::enumerate_std;

    #[test]
    fn asymptotic_pairs_are_cyclic() {
        // theta_2 - theta_1 > n: greedy tableau cyclic for every shape.
        for n in 1..=4usize {
            let p = Params::from_rational_theta(
                Some(2),
                2,
                n,
                &[(0, 1), (2 * n as i64 + 1, 2)],
                vec![0, 1],
            )
            .unwrap();
            for lam in all_multipartitions(2, n) {
                let t = t_lambda_theta(&lam, &p);
                assert!(is_cyclic_tableau(&t, &p), "greedy not cyclic at {lam}");
            }
        }
    }

    #[test]
    fn e_infinity_always_cyclic() {
        for n in 1..=4usize {
            for t2 in [(1i64, 2i64), (3, 2)] {
                let p = Params::from_rational_theta(None, 2, n, &[(0, 1), t2], vec![0, 1]).unwrap();
                for lam in all_multipartitions(2, n) {
                    assert!(
                        find_cyclic_tableau(&lam, &p).is_some(),
                        "no cyclic tableau at {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn flotw_cyclic_on_column_bounded_shapes() {
        // FLOTW weighting theta = (0, 1/2); kappa admissible for h = 1
        // requires the pairing condition, e.g. e = 4, kappa = (0, 2).
        for n in 1..=4usize {
            let p =
                Params::from_rational_theta(Some(4), 2, n, &[(0, 1), (1, 2)], vec![0, 2]).unwrap();
            for lam in crate::multipartition::with_column_bound(2, n, 1) {
                let t = t_lambda_theta(&lam, &p);
                assert!(is_cyclic_tableau(&t, &p), "greedy not cyclic at {lam}");
            }
        }
    }

    #[test]
    fn reduced_words_recover_tableaux() {
        let p = Params::from_rational_theta(Some(2), 2, 3, &[(0, 1), (7, 2)], vec![0, 1]).unwrap();
        for lam in all_multipartitions(2, 3) {
            let data = CyclicData::new(&lam, &p);
            for s in enumerate_std(&lam, &p) {
                let word = data.reduced_word(&s);
                // Apply the word to the greedy tableau by place permutation.
                let mut entries: Vec<usize> = (0..lam.size()).collect();
                for &i in &word {
                    entries.swap(i, i + 1);
                }
                // entries[k] = final entry of the box initially labelled k+1.
                let mut order = vec![None; lam.size()];
                for (k, b) in data.t_lambda.order.iter().enumerate() {
                    order[entries[k]] = Some(*b);
                }
                let rebuilt = StandardTableau {
                    order: order.into_iter().map(|b| b.unwrap()).collect(),
                };
                assert_eq!(rebuilt, s);
            }
        }
    }

    #[test]
    fn y_exponents_nonnegative_and_zero_for_flotw_columns() {
        let p = Params::from_rational_theta(Some(4), 2, 3, &[(0, 1), (1, 2)], vec![0, 2]).unwrap();
        for lam in crate::multipartition::with_column_bound(2, 3, 1) {
            let data = CyclicData::new(&lam, &p);
            assert!(data.y_exponents.iter().all(|&a| a == 0), "{lam}");
        }
    }
}
