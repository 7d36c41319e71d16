//! Boxes, loadings and the total order on boxes.

use crate::params::{Params, Res};
use std::cmp::Ordering;

pub type Residue = Res;

/// A box `(r, c, m)`: row and column are 1-based, the component is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxPos {
    pub r: u32,
    pub c: u32,
    pub m: u32,
}

impl BoxPos {
    pub fn new(r: u32, c: u32, m: u32) -> Self {
        debug_assert!(r >= 1 && c >= 1);
        BoxPos { r, c, m }
    }

    /// Residue `kappa_m + c - r` reduced into I.
    pub fn residue(&self, p: &Params) -> Residue {
        p.res(p.kappa[self.m as usize] + self.c as i64 - self.r as i64)
    }

    /// Exact loading: the pair `(ell*(theta_m + r - c), r + c)`, ordered
    /// lexicographically. Smaller loading = further left = more dominant.
    pub fn loading(&self, p: &Params) -> Loading {
        let elli = p.ell as i64;
        Loading {
            x: p.theta_num[self.m as usize] + elli * (self.r as i64 - self.c as i64),
            tb: self.r as i64 + self.c as i64,
        }
    }

    /// Frame condition from the box-configuration universe.
    pub fn in_frame(&self, p: &Params) -> bool {
        (self.r + self.c) as usize <= 2 * p.n
    }
}

/// The exact x-coordinate data of a box: primary part scaled by the level,
/// with the `r + c` tiebreak standing in for the infinitesimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Loading {
    pub x: i64,
    pub tb: i64,
}

impl PartialOrd for Loading {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Loading {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.x, self.tb).cmp(&(other.x, other.tb))
    }
}

/// Outcome of comparing two boxes in the theta-order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxOrd {
    Dominates,
    DominatedBy,
    Equal,
}

/// Strict total order on boxes: `b1` dominates `b2` iff its loading is
/// lexicographically smaller. Distinct boxes never compare equal for a valid
/// weighting.
pub fn box_cmp(b1: &BoxPos, b2: &BoxPos, p: &Params) -> BoxOrd {
    if b1 == b2 {
        return BoxOrd::Equal;
    }
    match b1.loading(p).cmp(&b2.loading(p)) {
        Ordering::Less => BoxOrd::Dominates,
        Ordering::Greater => BoxOrd::DominatedBy,
        Ordering::Equal => BoxOrd::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params_theta_halves(theta2: (i64, i64)) -> Params {
        // ell = 2, e = 2, kappa = (0,1), theta = (0, theta2.0/theta2.1)
        Params::from_rational_theta(Some(2), 2, 2, &[(0, 1), theta2], vec![0, 1]).unwrap()
    }

    #[test]
    fn residue_examples() {
        // (2,1,1) with kappa = (0,1), e = 3 has residue 2.
        let p = Params::from_rational_theta(Some(3), 2, 9, &[(0, 1), (1, 2)], vec![0, 1]).unwrap();
        assert_eq!(BoxPos::new(2, 1, 0).residue(&p), 2);
        // (1,1,m) has residue kappa_m.
        assert_eq!(BoxPos::new(1, 1, 1).residue(&p), 1);
        // e = ∞: plain integer arithmetic, no reduction.
        let pi = Params::new(None, 1, 4, vec![0], vec![0]).unwrap();
        assert_eq!(BoxPos::new(1, 4, 0).residue(&pi), 3);
    }

    #[test]
    fn box_cmp_examples() {
        let p = params_theta_halves((1, 2));
        // theta = (0, 1/2): (1,1,1) dominates (1,1,2).
        assert_eq!(
            box_cmp(&BoxPos::new(1, 1, 0), &BoxPos::new(1, 1, 1), &p),
            BoxOrd::Dominates
        );
        let p1 = Params::new(Some(2), 1, 3, vec![0], vec![0]).unwrap();
        // theta = (0): (1,2,1) dominates (2,1,1): -1 < 1.
        assert_eq!(
            box_cmp(&BoxPos::new(1, 2, 0), &BoxPos::new(2, 1, 0), &p1),
            BoxOrd::Dominates
        );
        // theta = (0): equal primaries, tiebreak 2 < 4.
        assert_eq!(
            box_cmp(&BoxPos::new(1, 1, 0), &BoxPos::new(2, 2, 0), &p1),
            BoxOrd::Dominates
        );
    }

    #[test]
    fn total_order_on_any_configuration() {
        let p = params_theta_halves((3, 2));
        let mut boxes = Vec::new();
        for m in 0..2u32 {
            for r in 1..=4u32 {
                for c in 1..=4u32 {
                    if r + c <= 4 {
                        boxes.push(BoxPos::new(r, c, m));
                    }
                }
            }
        }
        for (i, a) in boxes.iter().enumerate() {
            for (j, b) in boxes.iter().enumerate() {
                if i != j {
                    assert_ne!(box_cmp(a, b, &p), BoxOrd::Equal, "{a:?} vs {b:?}");
                }
            }
        }
    }
}
