//! Global parameters: quantum characteristic, level, size, weighting and
//! multicharge.

use std::fmt;

/// Residue index, an element of Z/eZ (e finite) or Z (e = ∞).
pub type Res = i64;

/// The global parameter tuple configuring every computation.
///
/// The weighting is stored as the integer vector `theta_num` with
/// `theta_num[m] = ell * theta_m`, so all loading arithmetic stays in `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Params {
    /// Quantum characteristic; `None` means e = ∞.
    pub e: Option<u64>,
    /// Level, number of components.
    pub ell: usize,
    /// Size (number of boxes / strands).
    pub n: usize,
    /// `ell * theta_m` for each component, so theta_m = theta_num[m] / ell.
    pub theta_num: Vec<i64>,
    /// Multicharge, one residue per component.
    pub kappa: Vec<Res>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamsError {
    BadLength(String),
    ThetaDifferenceIntegral(usize, usize),
    KappaOutOfRange(usize),
    BadE,
}

impl fmt::Display for ParamsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamsError::BadLength(s) => write!(f, "bad length: {s}"),
            ParamsError::ThetaDifferenceIntegral(i, j) => {
                write!(f, "theta_{} - theta_{} is an integer", i + 1, j + 1)
            }
            ParamsError::KappaOutOfRange(m) => write!(f, "kappa_{} out of range", m + 1),
            ParamsError::BadE => write!(f, "e must be at least 2 (or infinity)"),
        }
    }
}

impl std::error::Error for ParamsError {}

impl Params {
    pub fn new(
        e: Option<u64>,
        ell: usize,
        n: usize,
        theta_num: Vec<i64>,
        kappa: Vec<Res>,
    ) -> Result<Self, ParamsError> {
        if let Some(e) = e {
            if e < 2 {
                return Err(ParamsError::BadE);
            }
        }
        if ell == 0 || theta_num.len() != ell || kappa.len() != ell {
            return Err(ParamsError::BadLength(format!(
                "ell={ell}, |theta|={}, |kappa|={}",
                theta_num.len(),
                kappa.len()
            )));
        }
        let elli = ell as i64;
        for i in 0..ell {
            for j in (i + 1)..ell {
                if (theta_num[i] - theta_num[j]).rem_euclid(elli) == 0 {
                    return Err(ParamsError::ThetaDifferenceIntegral(i, j));
                }
            }
        }
        for (m, &k) in kappa.iter().enumerate() {
            match e {
                Some(e) => {
                    if k < 0 || k >= e as i64 {
                        return Err(ParamsError::KappaOutOfRange(m));
                    }
                }
                None => {}
            }
        }
        Ok(Params { e, ell, n, theta_num, kappa })
    }

    /// Convenience constructor from rational theta entries `(num, den)`,
    /// validating that each denominator divides the level.
    pub fn from_rational_theta(
        e: Option<u64>,
        ell: usize,
        n: usize,
        theta: &[(i64, i64)],
        kappa: Vec<Res>,
    ) -> Result<Self, ParamsError> {
        if theta.len() != ell {
            return Err(ParamsError::BadLength("theta".into()));
        }
        let elli = ell as i64;
        let mut theta_num = Vec::with_capacity(ell);
        for &(p, q) in theta {
            if q == 0 || (elli * p) % q != 0 {
                return Err(ParamsError::BadLength(format!(
                    "theta entry {p}/{q} does not have denominator dividing {ell}"
                )));
            }
            theta_num.push(elli * p / q);
        }
        Params::new(e, ell, n, theta_num, kappa)
    }

    /// Reduce an integer to a residue in I.
    pub fn res(&self, x: i64) -> Res {
        match self.e {
            Some(e) => x.rem_euclid(e as i64),
            None => x,
        }
    }

    /// Whether two integers are congruent as residues.
    pub fn res_eq(&self, a: i64, b: i64) -> bool {
        self.res(a) == self.res(b)
    }

    /// `<Lambda(kappa), alpha_i>`: the number of components with multicharge i.
    pub fn lambda_alpha(&self, i: Res) -> usize {
        self.kappa.iter().filter(|&&k| self.res_eq(k, i)).count()
    }

    /// All residues that occur for boxes within the frame, deduplicated and
    /// sorted. For finite e this is 0..e; for e = ∞ it is the finite window
    /// of residues reachable by boxes with r + c <= 2n.
    pub fn residue_universe(&self) -> Vec<Res> {
        match self.e {
            Some(e) => (0..e as i64).collect(),
            None => {
                let span = (2 * self.n as i64).max(1);
                let mut v: Vec<Res> = Vec::new();
                for &k in &self.kappa {
                    for d in -span..=span {
                        v.push(k + d);
                    }
                }
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    /// Leftmost red-strand coordinate, scaled by ell.
    pub fn theta_min_num(&self) -> i64 {
        *self.theta_num.iter().min().expect("ell >= 1")
    }

    /// Normalised key so poset-isomorphic weightings hash identically: the
    /// weighting `a_m e + kappa_m + (m-1)/ell` equivalent to this one, as the
    /// sorted vector of scaled offsets. For e = ∞ the raw sorted thetas are
    /// used.
    pub fn normalized_weighting_key(&self) -> Vec<i64> {
        let elli = self.ell as i64;
        match self.e {
            Some(_) => {
                let mut key: Vec<i64> = (0..self.ell)
                    .map(|m| self.theta_num[m] - elli * self.kappa[m])
                    .collect();
                key.sort_unstable();
                key
            }
            None => {
                let mut key = self.theta_num.clone();
                key.sort_unstable();
                key
            }
        }
    }
}
