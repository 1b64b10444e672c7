//! Exact approximation ratios and membership in the recognition classes
//! `S^ED_r` and `S^MDG_r`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{self, Budget};
use crate::graph::Graph;
use crate::heuristics::{self, Algorithm};

/// A rational `r = ell / m >= 1` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    ell: u64,
    m: u64,
}

impl Ratio {
    pub fn new(ell: i64, m: i64) -> Result<Ratio> {
        if ell < 1 || m < 1 {
            return Err(Error::InvalidRatio(format!(
                "{ell}/{m}: both parts must be positive"
            )));
        }
        if ell < m {
            return Err(Error::InvalidRatio(format!("{ell}/{m} is below 1")));
        }
        let g = ell.gcd(&m);
        Ok(Ratio {
            ell: (ell / g) as u64,
            m: (m / g) as u64,
        })
    }

    pub const ONE: Ratio = Ratio { ell: 1, m: 1 };
    pub const TWO: Ratio = Ratio { ell: 2, m: 1 };

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn is_one(&self) -> bool {
        self.ell == self.m
    }

    /// `value <= r * base`, by cross-multiplication.
    pub fn admits(&self, value: usize, base: usize) -> bool {
        u128::from(self.m) * value as u128 <= u128::from(self.ell) * base as u128
    }

    /// `value == r * base`.
    pub fn equals(&self, value: usize, base: usize) -> bool {
        u128::from(self.m) * value as u128 == u128::from(self.ell) * base as u128
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (u128::from(self.ell) * u128::from(other.m))
            .cmp(&(u128::from(other.ell) * u128::from(self.m)))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ell, self.m)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `L/M` or a bare integer `L`.
    fn from_str(s: &str) -> Result<Ratio> {
        let bad = || Error::InvalidRatio(format!("cannot parse {s:?} as L/M"));
        let (l, m) = match s.split_once('/') {
            Some((l, m)) => (l.trim(), m.trim()),
            None => (s.trim(), "1"),
        };
        let l: i64 = l.parse().map_err(|_| bad())?;
        let m: i64 = m.parse().map_err(|_| bad())?;
        Ratio::new(l, m)
    }
}

/// Outcome of a membership test, with the values it was decided from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub heuristic_min: usize,
    pub mvc: usize,
}

/// `min-ed(g) <= r * mvc(g)`.
pub fn member_sed(g: &Graph, r: Ratio) -> Result<Membership> {
    member(g, r, Algorithm::Ed, &Budget::default())
}

/// `min-mdg(g) <= r * mvc(g)`.
pub fn member_smdg(g: &Graph, r: Ratio) -> Result<Membership> {
    member(g, r, Algorithm::Mdg, &Budget::default())
}

pub fn member(g: &Graph, r: Ratio, algorithm: Algorithm, budget: &Budget) -> Result<Membership> {
    let heuristic_min = match algorithm {
        Algorithm::Ed => heuristics::min_ed_with(g, budget)?.size(),
        Algorithm::Mdg => heuristics::min_mdg_with(g, budget)?.size(),
    };
    let mvc = exact::mvc_with(g, budget)?.size;
    Ok(Membership {
        member: r.admits(heuristic_min, mvc),
        heuristic_min,
        mvc,
    })
}
