//! Exact Laurent polynomials in one indeterminate and graded dimensions.

use crate::multipartition::{all_multipartitions, Multipartition};
use crate::params::Params;
use crate::tableau::{box_degree, enumerate_std};
use num::BigInt;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul};

/// Integer Laurent polynomial: exponent -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    pub coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut coeffs = BTreeMap::new();
        if c != BigInt::from(0) {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff == &BigInt::from(0) {
            return;
        }
        let entry = self.coeffs.entry(exp).or_default();
        *entry += coeff;
        if *entry == BigInt::from(0) {
            self.coeffs.remove(&exp);
        }
    }

    /// Value at t = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Shift by t^k.
    pub fn shifted(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.coeffs {
            out.add_term(*e, &(c * k));
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c >= &BigInt::from(0))
    }

    /// Reverse grading t -> t^{-1}.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c);
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 if *c == BigInt::from(1) => write!(f, "t")?,
                1 => write!(f, "{c}t")?,
                _ if *c == BigInt::from(1) => write!(f, "t^{e}")?,
                _ => write!(f, "{c}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Graded dimension of the cell module: sum of t^{deg s} over standard s.
pub fn graded_dim_cell(lambda: &Multipartition, p: &Params) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for t in enumerate_std(lambda, p) {
        out.add_term(t.degree(p), &BigInt::from(1));
    }
    out
}

/// Graded dimension of the whole algebra: sum of squares of cell dimensions.
pub fn graded_dim_algebra(p: &Params) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for lam in all_multipartitions(p.ell, p.n) {
        let g = graded_dim_cell(&lam, p);
        out += &(&g * &g);
    }
    out
}

/// Removable boxes sorted most dominant first, each with the degree it
/// carries as the last-added box, plus the graded branching identity check.
pub struct BranchingData {
    pub removables: Vec<(crate::boxes::BoxPos, i64)>,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub holds: bool,
}

pub fn branching_data(lambda: &Multipartition, p: &Params) -> BranchingData {
    assert!(lambda.size() >= 1);
    let mut removables: Vec<_> = lambda.removable();
    removables.sort_by_key(|b| b.loading(p));
    let removables: Vec<(crate::boxes::BoxPos, i64)> = removables
        .into_iter()
        .map(|b| {
            let d = box_degree(lambda, &b, p);
            (b, d)
        })
        .collect();
    let lhs = graded_dim_cell(lambda, p);
    let mut rhs = LaurentPoly::zero();
    for (b, d) in &removables {
        let sub = graded_dim_cell(&lambda.without_box(b), p);
        rhs += &sub.shifted(*d);
    }
    let holds = lhs == rhs;
    BranchingData { removables, lhs, rhs, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(theta2: (i64, i64), n: usize) -> Params {
        Params::from_rational_theta(Some(2), 2, n, &[(0, 1), theta2], vec![0, 1]).unwrap()
    }

    #[test]
    fn graded_dim_h2_both_weightings() {
        let expected = {
            let mut lp = LaurentPoly::zero();
            lp.add_term(0, &BigInt::from(2));
            lp.add_term(2, &BigInt::from(4));
            lp.add_term(4, &BigInt::from(2));
            lp
        };
        assert_eq!(graded_dim_algebra(&p2((1, 2), 2)), expected);
        assert_eq!(graded_dim_algebra(&p2((3, 2), 2)), expected);
    }

    #[test]
    fn graded_dim_n0_is_one() {
        assert_eq!(graded_dim_algebra(&p2((1, 2), 0)), LaurentPoly::one());
    }

    #[test]
    fn branching_small_example() {
        // ((1),(1)) at theta=(0,1/2): 2t = t*1 + t*1.
        let p = p2((1, 2), 2);
        let lam = Multipartition::new(vec![vec![1], vec![1]]);
        let b = branching_data(&lam, &p);
        assert!(b.holds);
        assert_eq!(b.lhs, LaurentPoly::monomial(1, 2));
    }

    #[test]
    fn branching_exhaustive_grid() {
        for (e, t2) in [
            (Some(2), (1i64, 2i64)),
            (Some(2), (3, 2)),
            (Some(3), (1, 2)),
            (None, (1, 2)),
        ] {
            for n in 1..=4usize {
                let p = Params::from_rational_theta(e, 2, n, &[(0, 1), t2], vec![0, 1]).unwrap();
                for lam in all_multipartitions(2, n) {
                    let b = branching_data(&lam, &p);
                    assert!(b.holds, "branching fails at {lam} (e={e:?}, theta2={t2:?})");
                }
            }
        }
    }

    #[test]
    fn coefficient_sum_consistency() {
        let p = p2((1, 2), 3);
        let total: BigInt = all_multipartitions(2, 3)
            .iter()
            .map(|l| {
                let k = enumerate_std(l, &p).len();
                BigInt::from(k * k)
            })
            .sum();
        assert_eq!(graded_dim_algebra(&p).eval_at_one(), total);
    }
}
