//! Partitions, enhanced partitions and the closure order on enhanced
//! partitions.
//!
//! A partition `λ = (a_1 ≥ … ≥ a_t > 0)` is also described by its groups
//! `(b_j, d_j)`: the distinct part values `b_1 > … > b_r` with their
//! multiplicities. An enhanced partition `λ[q]` pairs `λ` with a marker
//! `q ∈ {0, d_1, d_1 + d_2, …, t}`; these label the orbits of
//! `GL_n ⋉ V` on the enhanced nilpotent cone `𝒩 × V`.
//!
//! Everywhere below, parts beyond the last one are read as zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`build_poset`].
pub const MAX_POSET_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is nonincreasing and strictly positive. The
    /// empty sequence is accepted and stands for the empty partition of 0.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be nonincreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^n)`, the type of the zero matrix.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(n)`, the type of a regular nilpotent.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part `a_1` (zero for the empty partition).
    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// Distinct part values with multiplicities, largest value first.
    pub fn groups(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &a in &self.parts {
            match out.last_mut() {
                Some((b, d)) if *b == a => *d += 1,
                _ => out.push((a, 1)),
            }
        }
        out
    }

    /// Conjugate partition: `(λᵗ)_k = #{i : a_i ≥ k}`.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|k| self.parts.iter().take_while(|&&a| a >= k).count())
            .collect();
        Partition { parts }
    }

    /// Markers `q` for which `λ[q]` is an enhanced partition:
    /// `{0, d_1, d_1 + d_2, …, t}`.
    pub fn allowed_q(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut acc = 0;
        for (_, d) in self.groups() {
            acc += d;
            out.push(acc);
        }
        out
    }

    /// `λ − (1)_q`, or `None` if subtracting one from the first `q` parts
    /// does not leave a partition.
    pub fn subtract_ones(&self, q: usize) -> Option<Partition> {
        if q > self.len() {
            return None;
        }
        let mut parts: Vec<usize> = self.parts.clone();
        for a in parts.iter_mut().take(q) {
            *a -= 1;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        // Zeros can only appear at the tail of a nonincreasing sequence.
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition { parts })
    }

    /// All lowerings `(q, λ − (1)_q)` indexed by allowed markers.
    pub fn lowerings(&self) -> Vec<(usize, Partition)> {
        self.allowed_q()
            .into_iter()
            .map(|q| {
                let mu = self
                    .subtract_ones(q)
                    .expect("allowed marker always yields a lowering");
                (q, mu)
            })
            .collect()
    }

    /// Dimension of the nilpotent orbit `O_λ`: `n² − Σ (λᵗ_i)²`.
    pub fn dim_orbit(&self) -> usize {
        let n = self.size();
        let centralizer: usize = self.transpose().parts.iter().map(|c| c * c).sum();
        n * n - centralizer
    }

    /// Dimension of the Springer fiber over an element of type `λ`.
    pub fn fiber_dim(&self) -> usize {
        let n = self.size();
        (n * n - n - self.dim_orbit()) / 2
    }

    /// Total dimension of the cohomology of the Springer fiber:
    /// the multinomial coefficient `n! / Π a_i!`.
    pub fn cohomology_total_dim(&self) -> BigUint {
        let n = self.size();
        let mut num = factorial(n);
        for &a in &self.parts {
            num /= factorial(a);
        }
        num
    }

    /// All partitions of `n`, in reverse-lexicographic order starting at
    /// `(n)` and ending at `(1^n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for a in (1..=rest.min(max)).rev() {
                cur.push(a);
                rec(rest - a, a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn write_parts(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        self.write_parts(f)?;
        write!(f, ")")
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {:?}", tok.trim())))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Partition::new(parse_parts(&cleaned)?)
    }
}

/// Dominance order: `μ ≤ λ` iff every prefix sum of `μ` is at most the
/// corresponding prefix sum of `λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!(
            "{mu} has size {} but {lambda} has size {}",
            mu.size(),
            lambda.size()
        )));
    }
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0, 0);
    for i in 0..len {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A partition together with an allowed marker `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnhancedPartition {
    lambda: Partition,
    q: usize,
}

impl EnhancedPartition {
    pub fn new(lambda: Partition, q: usize) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidPartition(
                "the empty partition is not an orbit label".into(),
            ));
        }
        let allowed = lambda.allowed_q();
        if !allowed.contains(&q) {
            return Err(Error::InvalidQ {
                lambda: lambda.to_string(),
                q,
                allowed,
            });
        }
        Ok(EnhancedPartition { lambda, q })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    /// Index `j` (1-based) of the group selected by the marker, so that
    /// `q = d_1 + … + d_{j−1}`; equals `r + 1` when `q = t`.
    pub fn group_index(&self) -> usize {
        self.lambda
            .allowed_q()
            .iter()
            .position(|&x| x == self.q)
            .expect("marker validated on construction")
            + 1
    }

    /// The lowering `λ − (1)_q`.
    pub fn lowering(&self) -> Partition {
        self.lambda
            .subtract_ones(self.q)
            .expect("marker validated on construction")
    }

    /// `℘_k = a_1 + … + a_k + δ` with `δ = a_{k+1}` when `k + 1 > q` and
    /// `a_{k+1} − 1` otherwise.
    pub fn enhanced_number(&self, k: usize) -> Result<usize> {
        let n = self.n();
        if k > n {
            return Err(Error::OutOfRange(format!(
                "enhanced number index {k} exceeds n = {n}"
            )));
        }
        let prefix: usize = (0..k).map(|i| self.lambda.part(i)).sum();
        let next = self.lambda.part(k);
        // k + 1 <= q forces k < t, so next >= 1 there.
        let delta = if k + 1 > self.q { next } else { next - 1 };
        Ok(prefix + delta)
    }

    /// `(℘_0, …, ℘_n)`.
    pub fn enhanced_numbers(&self) -> Vec<usize> {
        (0..=self.n())
            .map(|k| self.enhanced_number(k).expect("k within range"))
            .collect()
    }

    /// `dim O_λ + (n − q)`.
    pub fn dim_enhanced_orbit(&self) -> usize {
        self.lambda.dim_orbit() + self.n() - self.q
    }

    pub fn bipartition(&self) -> Bipartition {
        Bipartition {
            first: self.lowering(),
            second: Partition::ones(self.q),
        }
    }

    /// Every enhanced partition of `n`, ordered by partition (canonical
    /// order of [`Partition::all`]) and then by ascending marker.
    pub fn all(n: usize) -> Vec<EnhancedPartition> {
        Partition::all(n)
            .into_iter()
            .flat_map(|lambda| {
                lambda
                    .allowed_q()
                    .into_iter()
                    .map(move |q| EnhancedPartition {
                        lambda: lambda.clone(),
                        q,
                    })
            })
            .collect()
    }

    /// `(n)[0]`, the open orbit.
    pub fn top(n: usize) -> Self {
        EnhancedPartition::new(Partition::row(n), 0).expect("n >= 1")
    }

    /// `(1^n)[n]`, the origin.
    pub fn bottom(n: usize) -> Self {
        EnhancedPartition::new(Partition::ones(n), n).expect("n >= 1")
    }
}

impl fmt::Display for EnhancedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lambda.write_parts(f)?;
        write!(f, "[{}]", self.q)
    }
}

impl FromStr for EnhancedPartition {
    type Err = Error;

    /// Grammar: `parts "[" q "]"`, e.g. `3,2,2,1[1]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, tail) = cleaned
            .split_once('[')
            .ok_or_else(|| Error::Parse(format!("missing '[q]' in {s:?}")))?;
        let q_str = tail
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("missing ']' in {s:?}")))?;
        let q = q_str
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad marker {q_str:?}")))?;
        let lambda = Partition::new(parse_parts(head)?)?;
        EnhancedPartition::new(lambda, q)
    }
}

/// `μ[l] ⪯ λ[q]`: dominance `μ ≤ λ` together with `℘_k(μ[l]) ≤ ℘_k(λ[q])`
/// for every `k`.
pub fn enhanced_leq(lower: &EnhancedPartition, upper: &EnhancedPartition) -> Result<bool> {
    if !dominance_leq(&lower.lambda, &upper.lambda)? {
        return Ok(false);
    }
    Ok(lower
        .enhanced_numbers()
        .iter()
        .zip(upper.enhanced_numbers())
        .all(|(a, b)| *a <= b))
}

/// Pair of partitions attached to `λ[q]`: `(λ − (1)_q, (1^q))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// The covering relations predicted by the explicit case analysis, as
/// opposed to the transitive reduction computed in [`build_poset`].
///
/// Writing `λ = (b_1^{d_1} … b_r^{d_r})`, `D_j = d_1 + … + d_j` and
/// `q = D_{j−1}`, the candidates are:
/// * `λ[D_j]` (same partition, next marker), when `j ≤ r`;
/// * `μ[D_k − 1]` for `k = j+1, …, r` where `μ` moves one box from row
///   `D_k` to row `D_k + 1`;
/// * `μ[q − 1]` when `q > 0` and `d_j = 1`, where `μ` moves one box from
///   row `q` to row `q + 1`.
///
/// Candidates that are not valid enhanced partitions are dropped.
pub fn covers_formula(upper: &EnhancedPartition) -> Vec<EnhancedPartition> {
    let lambda = &upper.lambda;
    let groups = lambda.groups();
    let r = groups.len();
    let ends: Vec<usize> = groups
        .iter()
        .scan(0, |acc, &(_, d)| {
            *acc += d;
            Some(*acc)
        })
        .collect();
    let j = upper.group_index();
    let q = upper.q;
    let mut out = Vec::new();

    if j <= r {
        out.push(EnhancedPartition {
            lambda: lambda.clone(),
            q: ends[j - 1],
        });
    }

    for k in (j + 1)..=r {
        let row = ends[k - 1];
        if let Some(mu) = move_box(lambda, row) {
            if let Ok(e) = EnhancedPartition::new(mu, row - 1) {
                if q <= e.q {
                    out.push(e);
                }
            }
        }
    }

    if q > 0 && j <= r && groups[j - 1].1 == 1 {
        if let Some(mu) = move_box(lambda, q) {
            if let Ok(e) = EnhancedPartition::new(mu, q - 1) {
                out.push(e);
            }
        }
    }

    out
}

/// Moves one box from row `row` (1-based) to row `row + 1`.
fn move_box(lambda: &Partition, row: usize) -> Option<Partition> {
    let mut parts: Vec<usize> = lambda.parts.clone();
    if row == 0 || row > parts.len() {
        return None;
    }
    if parts.len() == row {
        parts.push(0);
    }
    parts[row - 1] -= 1;
    parts[row] += 1;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::new(parts).ok()
}

/// Fixed-width bitset over poset elements.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn new(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn intersects(&self, other: &BitRow) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}

/// The poset `(𝒫ᵉ_n, ⪯)` with its Hasse diagram.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    n: usize,
    elements: Vec<EnhancedPartition>,
    /// `below[a]` has bit `b` set iff `elements[b] ⪯ elements[a]`.
    below: Vec<BitRow>,
    /// Covering pairs `(upper, lower)` as indices into `elements`.
    covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[EnhancedPartition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: &EnhancedPartition) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    /// `elements[lower] ⪯ elements[upper]`.
    pub fn leq(&self, lower: usize, upper: usize) -> bool {
        self.below[upper].get(lower)
    }

    /// Covering pairs `(upper, lower)` in lexicographic index order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements covered by `elements[upper]`.
    pub fn covered_by(&self, upper: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|(u, _)| *u == upper)
            .map(|&(_, l)| l)
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(a, b)))
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(b, a)))
            .collect()
    }
}

/// Enumerates `𝒫ᵉ_n`, fills `⪯` and extracts covering pairs by transitive
/// reduction.
#[allow(clippy::needless_range_loop)]
pub fn build_poset(n: usize) -> Result<OrbitPoset> {
    if n == 0 || n > MAX_POSET_N {
        return Err(Error::OutOfRange(format!(
            "poset size n = {n} outside 1..={MAX_POSET_N}"
        )));
    }
    let elements = EnhancedPartition::all(n);
    let m = elements.len();
    let numbers: Vec<Vec<usize>> = elements.iter().map(|e| e.enhanced_numbers()).collect();

    let mut below = vec![BitRow::new(m); m];
    let mut strictly_above = vec![BitRow::new(m); m];
    for a in 0..m {
        for b in 0..m {
            let le = dominance_leq(&elements[b].lambda, &elements[a].lambda)?
                && numbers[b].iter().zip(&numbers[a]).all(|(x, y)| x <= y);
            if le {
                below[a].set(b);
                if a != b {
                    strictly_above[b].set(a);
                }
            }
        }
    }

    // (a, b) is a cover iff b < a strictly and nothing lies strictly between.
    let mut covers = Vec::new();
    for a in 0..m {
        let mut strictly_below_a = below[a].clone();
        strictly_below_a.0[a / 64] &= !(1 << (a % 64));
        for b in 0..m {
            if b == a || !below[a].get(b) {
                continue;
            }
            if !strictly_below_a.intersects(&strictly_above[b]) {
                covers.push((a, b));
            }
        }
    }

    Ok(OrbitPoset {
        n,
        elements,
        below,
        covers,
    })
}

/// Checks `2·dim(fiber) + dim O_{λ[q]} ≤ n²` over every stratum.
pub fn semismall_check(n: usize) -> bool {
    EnhancedPartition::all(n)
        .iter()
        .all(|e| 2 * e.lambda.fiber_dim() + e.dim_enhanced_orbit() <= n * n)
}

/// Strata `λ[0]` supporting the summands of the pushforward along the
/// enhanced Springer resolution, each with shift `dim O_λ + n`.
pub fn ic_summand_support(n: usize) -> Vec<(EnhancedPartition, usize)> {
    Partition::all(n)
        .into_iter()
        .map(|lambda| {
            let shift = lambda.dim_orbit() + n;
            (EnhancedPartition { lambda, q: 0 }, shift)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ep(s: &str) -> EnhancedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).transpose(), p(&[3]));
        assert_eq!(p(&[2, 2, 1]).transpose(), p(&[3, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[2, 1, 1])).unwrap());
        assert!(matches!(
            dominance_leq(&p(&[2]), &p(&[2, 1])),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn lowerings_examples() {
        assert_eq!(
            p(&[2, 1]).lowerings(),
            vec![(0, p(&[2, 1])), (1, p(&[1, 1])), (2, p(&[1]))]
        );
        assert_eq!(p(&[3]).lowerings(), vec![(0, p(&[3])), (1, p(&[2]))]);
        assert_eq!(
            p(&[1, 1]).lowerings(),
            vec![(0, p(&[1, 1])), (2, Partition::empty())]
        );
    }

    #[test]
    fn allowed_q_examples() {
        assert_eq!(p(&[2, 1]).allowed_q(), vec![0, 1, 2]);
        assert_eq!(p(&[2, 2]).allowed_q(), vec![0, 2]);
        assert_eq!(p(&[1, 1, 1]).allowed_q(), vec![0, 3]);
    }

    #[test]
    fn enhanced_number_examples() {
        assert_eq!(&ep("2,1[0]").enhanced_numbers()[..3], &[2, 3, 3]);
        assert_eq!(&ep("2,1[1]").enhanced_numbers()[..3], &[1, 3, 3]);
        assert_eq!(ep("1,1,1[3]").enhanced_numbers(), vec![0, 1, 2, 3]);
        // w != 0 branch of the zero matrix: k + 1, capped at n.
        assert_eq!(ep("1,1,1[0]").enhanced_numbers(), vec![1, 2, 3, 3]);
        assert!(matches!(
            ep("2,1[0]").enhanced_number(4),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn enhanced_leq_examples() {
        assert!(enhanced_leq(&ep("2,1[1]"), &ep("2,1[0]")).unwrap());
        assert!(!enhanced_leq(&ep("2,1[0]"), &ep("2,1[1]")).unwrap());
        assert!(enhanced_leq(&ep("1,1,1[3]"), &ep("1,1,1[3]")).unwrap());
        assert!(enhanced_leq(&ep("2,1[0]"), &ep("1,1[0]")).is_err());
    }

    #[test]
    fn poset_sizes() {
        assert_eq!(build_poset(2).unwrap().len(), 4);
        assert_eq!(build_poset(3).unwrap().len(), 7);
        assert_eq!(build_poset(4).unwrap().len(), 12);
        assert!(build_poset(0).is_err());
        assert!(build_poset(MAX_POSET_N + 1).is_err());
        assert!(build_poset(12).is_ok());
    }

    #[test]
    fn n2_poset_is_a_chain() {
        let poset = build_poset(2).unwrap();
        let labels: Vec<String> = poset.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(labels, ["2[0]", "2[1]", "1,1[0]", "1,1[2]"]);
        assert_eq!(poset.covers(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn covers_formula_examples() {
        assert!(covers_formula(&ep("2[0]")).contains(&ep("2[1]")));
        assert!(covers_formula(&ep("1,1,1[3]")).is_empty());
        assert!(covers_formula(&ep("2,1[0]")).contains(&ep("2,1[1]")));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(p(&[1, 1, 1]).dim_orbit(), 0);
        assert_eq!(p(&[3]).dim_orbit(), 6);
        assert_eq!(p(&[2, 1]).dim_orbit(), 4);
        assert_eq!(ep("2,1[0]").dim_enhanced_orbit(), 7);
        assert_eq!(ep("2,1[2]").dim_enhanced_orbit(), 5);
        assert_eq!(ep("1,1,1,1[4]").dim_enhanced_orbit(), 0);
    }

    #[test]
    fn bipartition_examples() {
        let b = ep("2,1[1]").bipartition();
        assert_eq!((b.first, b.second), (p(&[1, 1]), p(&[1])));
        let b = ep("3[0]").bipartition();
        assert_eq!((b.first, b.second), (p(&[3]), Partition::empty()));
        let b = ep("1,1[2]").bipartition();
        assert_eq!((b.first, b.second), (Partition::empty(), p(&[1, 1])));
    }

    #[test]
    fn springer_fiber_numbers() {
        assert_eq!(p(&[4]).fiber_dim(), 0);
        assert_eq!(p(&[1, 1, 1]).fiber_dim(), 3);
        assert_eq!(p(&[2, 1]).fiber_dim(), 1);
        assert_eq!(p(&[1, 1, 1]).cohomology_total_dim(), BigUint::from(6u32));
        assert_eq!(p(&[3]).cohomology_total_dim(), BigUint::from(1u32));
        assert_eq!(p(&[2, 1]).cohomology_total_dim(), BigUint::from(3u32));
    }

    #[test]
    fn semismall_and_ic_support() {
        assert!(semismall_check(2));
        assert!(semismall_check(3));
        assert!(semismall_check(8));
        assert_eq!(
            ic_summand_support(2),
            vec![(ep("2[0]"), 4), (ep("1,1[0]"), 2)]
        );
        assert_eq!(ic_summand_support(1), vec![(ep("1[0]"), 1)]);
        let shifts: Vec<usize> = ic_summand_support(3).iter().map(|(_, s)| *s).collect();
        assert_eq!(shifts, vec![9, 7, 3]);
    }

    #[test]
    fn parser_grammar() {
        assert_eq!(ep(" 3, 2,2 ,1 [ 1 ]").to_string(), "3,2,2,1[1]");
        match "2,1[3]".parse::<EnhancedPartition>() {
            Err(Error::InvalidQ { allowed, .. }) => assert_eq!(allowed, vec![0, 1, 2]),
            other => panic!("unexpected {other:?}"),
        }
        let msg = "2,2[1]"
            .parse::<EnhancedPartition>()
            .unwrap_err()
            .to_string();
        assert!(msg.contains("[0, 2]"), "{msg}");
        assert!("[0]".parse::<EnhancedPartition>().is_err());
        assert!("1,2[0]".parse::<EnhancedPartition>().is_err());
        assert!("2,1".parse::<EnhancedPartition>().is_err());
    }

    #[test]
    fn canonical_order_n4() {
        let names: Vec<String> = Partition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }
}
