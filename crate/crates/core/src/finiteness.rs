//! Whether `GL_n ⋉ M` (or `GL_n` alone) has finitely many orbits on
//! `𝒩 × M` for the irreducible module `M` of a given highest weight.
//!
//! Only the weight up to a determinant twist matters, so every decision
//! starts by shifting the weight to end in 0. The answers follow the
//! characteristic zero classification.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A dominant weight `a₁ ≥ … ≥ a_n` of `GL_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSpec {
    weight: Vec<i64>,
}

impl WeightSpec {
    pub fn new(n: usize, weight: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be positive".into()));
        }
        if weight.len() != n {
            return Err(Error::SizeMismatch(format!(
                "weight has {} entries for n = {n}",
                weight.len()
            )));
        }
        if weight.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(weight));
        }
        Ok(WeightSpec { weight })
    }

    pub fn n(&self) -> usize {
        self.weight.len()
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weight.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `a1,...,an`; `n` is the number of entries.
impl FromStr for WeightSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let weight = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightSpec::new(weight.len(), weight)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Infinite,
}

impl fmt::Display for Finiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Finiteness::Finite => "Finite",
            Finiteness::Infinite => "Infinite",
        })
    }
}

/// Subtracts `a_n` from every entry.
pub fn normalize_det_twist(w: &WeightSpec) -> WeightSpec {
    let last = *w.weight.last().expect("weights are nonempty");
    WeightSpec {
        weight: w.weight.iter().map(|a| a - last).collect(),
    }
}

fn from_bool(finite: bool) -> Finiteness {
    if finite {
        Finiteness::Finite
    } else {
        Finiteness::Infinite
    }
}

/// Trivial, natural or dual natural, up to twist.
fn is_small_for_large_n(w: &[i64]) -> bool {
    let n = w.len();
    let ones = w.iter().filter(|&&a| a == 1).count();
    w.iter().all(|&a| a == 0 || a == 1) && (ones == 0 || ones == 1 || ones == n - 1)
}

/// Decides with the largest admissible `m` for a normalized `n = 2` weight `(m, 0)`.
fn decide(w: &WeightSpec, max_m_for_gl2: i64) -> Finiteness {
    let normal = normalize_det_twist(w);
    let a = normal.weight();
    match a.len() {
        1 => Finiteness::Finite,
        2 => from_bool(a[0] <= max_m_for_gl2),
        _ => from_bool(is_small_for_large_n(a)),
    }
}

/// Finiteness of `GL_n ⋉ M`-orbits on `𝒩 × M`.
pub fn decide_enhanced(w: &WeightSpec) -> Finiteness {
    decide(w, 2)
}

/// Finiteness of `GL_n`-orbits on `𝒩 × M`.
pub fn decide_gl_variety(w: &WeightSpec) -> Finiteness {
    decide(w, 1)
}
