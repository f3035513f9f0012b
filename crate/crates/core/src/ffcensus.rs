//! Brute-force orbit census of `GL_n(F_p) ⋉ F_pⁿ` on pairs `(X, w)` with
//! `X` nilpotent, used as an oracle independent of the combinatorics.
//!
//! Enhanced centralizers are connected, so each geometric orbit meets the
//! `F_p`-points in exactly one orbit of the finite group and the census
//! count is comparable with the number of enhanced partitions.
//!
//! # State packing (version 1)
//!
//! A pair `(X, w)` is packed into a `u64` as base-`p` digits: the `n²`
//! entries of `X` in row-major order come first, with `X[0][0]` the least
//! significant digit, followed by the `n` entries of `w`. The packed value
//! also defines the lexicographic order used to pick orbit representatives.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlinalg::{Field, Matrix, PrimeField};
use crate::orbitcalc::{classify, EnhancedElement};
use crate::partitions::EnhancedPartition;

pub const PACKING_VERSION: u32 = 1;

fn check_feasible(n: usize, p: u64) -> Result<()> {
    let ok = match p {
        2 => (1..=4).contains(&n),
        3 => (1..=3).contains(&n),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "census supports n <= 4 at p = 2 and n <= 3 at p = 3, got n = {n}, p = {p}"
        )))
    }
}

/// Dense arithmetic on small matrices and vectors with entries in `[0, p)`.
#[derive(Debug, Clone, Copy)]
struct Small {
    n: usize,
    p: u8,
}

type Mat = Vec<u8>;

impl Small {
    fn mul(&self, a: &[u8], b: &[u8]) -> Mat {
        let n = self.n;
        let p = self.p as u32;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: u32 = (0..n)
                    .map(|k| a[i * n + k] as u32 * b[k * n + j] as u32)
                    .sum();
                out[i * n + j] = (s % p) as u8;
            }
        }
        out
    }

    fn mul_vec(&self, a: &[u8], v: &[u8]) -> Vec<u8> {
        let n = self.n;
        let p = self.p as u32;
        (0..n)
            .map(|i| {
                ((0..n)
                    .map(|k| a[i * n + k] as u32 * v[k] as u32)
                    .sum::<u32>()
                    % p) as u8
            })
            .collect()
    }

    fn sub_vec(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    fn identity(&self) -> Mat {
        let n = self.n;
        (0..n * n).map(|k| u8::from(k / n == k % n)).collect()
    }

    fn is_nilpotent(&self, x: &[u8]) -> bool {
        let mut power = x.to_vec();
        for _ in 1..self.n {
            power = self.mul(&power, x);
        }
        power.iter().all(|&v| v == 0)
    }

    fn rank(&self, a: &[u8]) -> usize {
        let n = self.n;
        let p = self.p as u32;
        let mut m: Vec<u32> = a.iter().map(|&v| v as u32).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            for k in 0..n {
                m.swap(rank * n + k, piv * n + k);
            }
            let inv = (1..p)
                .find(|&c| c * m[rank * n + col] % p == 1)
                .unwrap_or(1);
            for k in 0..n {
                m[rank * n + k] = m[rank * n + k] * inv % p;
            }
            for r in 0..n {
                if r != rank && m[r * n + col] != 0 {
                    let f = m[r * n + col];
                    for k in 0..n {
                        m[r * n + k] = (m[r * n + k] + p * p - f * m[rank * n + k]) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn digits(&self, mut code: u64, count: usize) -> Vec<u8> {
        (0..count)
            .map(|_| {
                let d = (code % self.p as u64) as u8;
                code /= self.p as u64;
                d
            })
            .collect()
    }

    fn encode(&self, x: &[u8], w: &[u8]) -> u64 {
        x.iter()
            .chain(w)
            .rev()
            .fold(0u64, |acc, &d| acc * self.p as u64 + d as u64)
    }

    fn decode(&self, code: u64) -> (Mat, Vec<u8>) {
        let n = self.n;
        let mut all = self.digits(code, n * n + n);
        let w = all.split_off(n * n);
        (all, w)
    }

    fn element(&self, field: &PrimeField, x: &[u8], w: &[u8]) -> EnhancedElement<PrimeField> {
        let rows = x
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as u64).collect())
            .collect();
        let m = Matrix::from_rows(field, rows).expect("square by construction");
        EnhancedElement::new(m, w.iter().map(|&v| v as u64).collect())
            .expect("census states are nilpotent")
    }
}

fn nilpotent_raw(s: Small) -> Vec<Mat> {
    let count = (s.p as u64).pow((s.n * s.n) as u32);
    (0..count)
        .map(|c| s.digits(c, s.n * s.n))
        .filter(|x| s.is_nilpotent(x))
        .collect()
}

/// Every nilpotent `n × n` matrix over `F_p`, ordered by packed code.
pub fn enumerate_nilpotents(n: usize, p: u64) -> Result<Vec<Matrix<PrimeField>>> {
    check_feasible(n, p)?;
    let field = PrimeField::new(p)?;
    let s = Small { n, p: p as u8 };
    Ok(nilpotent_raw(s)
        .into_iter()
        .map(|x| {
            let rows = x
                .chunks(n)
                .map(|r| r.iter().map(|&v| v as u64).collect())
                .collect();
            Matrix::from_rows(&field, rows).expect("square by construction")
        })
        .collect())
}

/// `|GL_n(F_p)| = Π_{i<n} (pⁿ − pⁱ)`.
pub fn gl_order(n: usize, p: u64) -> u64 {
    let pn = p.pow(n as u32);
    (0..n as u32).map(|i| pn - p.pow(i)).product()
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // Keep the smaller index as root so roots are lexicographically least.
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// One orbit of the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOrbit {
    /// Packed code of the lexicographically least element.
    pub representative: u64,
    pub size: u64,
    pub stabilizer_order: u64,
    pub kind: EnhancedPartition,
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub n: usize,
    pub p: u64,
    pub state_count: u64,
    pub expected_count: usize,
    /// Sorted by orbit type in canonical order, then by representative.
    pub orbits: Vec<CensusOrbit>,
    /// Every element of an orbit received the same type.
    pub classification_constant: bool,
    /// No two orbits received the same type.
    pub classification_distinct: bool,
    /// `|orbit| · |stabilizer| = |GL_n(F_p)| · pⁿ` for every orbit.
    pub orbit_stabilizer_ok: bool,
    /// Excluded from every textual rendering.
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// All internal consistency checks hold and the count is as expected.
    pub fn is_consistent(&self) -> bool {
        self.orbit_count() == self.expected_count
            && self.classification_constant
            && self.classification_distinct
            && self.orbit_stabilizer_ok
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "census n={} p={}: {} orbits (expected {})",
            self.n,
            self.p,
            self.orbit_count(),
            self.expected_count
        );
        if !self.is_consistent() {
            out.push_str(" MISMATCH");
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut rows = vec![[
            "type".to_string(),
            "orbit_size".to_string(),
            "stabilizer_order".to_string(),
            "representative".to_string(),
        ]];
        rows.extend(self.orbits.iter().map(|o| {
            [
                o.kind.to_string(),
                o.size.to_string(),
                o.stabilizer_order.to_string(),
                format!("{:#x}", o.representative),
            ]
        }));
        let widths: Vec<usize> = (0..4)
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = format!("{}\n", self.summary());
        for r in &rows {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out.push_str(&format!(
            "checks: classification_constant={} classification_distinct={} orbit_stabilizer={}\n",
            self.classification_constant, self.classification_distinct, self.orbit_stabilizer_ok
        ));
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(["type", "orbit_size", "stabilizer_order", "representative"])
            .map_err(io)?;
        for o in &self.orbits {
            w.write_record([
                o.kind.to_string(),
                o.size.to_string(),
                o.stabilizer_order.to_string(),
                format!("{:#x}", o.representative),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Generators of `GL_n(F_p)` paired with their inverses: transvections
/// `I + E_ij` and `diag(γ, 1, …, 1)` for a primitive root `γ`.
fn gl_generators(s: Small, field: &PrimeField) -> Vec<(Mat, Mat)> {
    let n = s.n;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut g = s.identity();
            let mut h = s.identity();
            g[i * n + j] = 1;
            h[i * n + j] = s.p - 1;
            gens.push((g, h));
        }
    }
    let gamma = field.primitive_root();
    if gamma != 1 {
        let mut g = s.identity();
        let mut h = s.identity();
        g[0] = gamma as u8;
        h[0] = field.inv(&gamma).expect("nonzero") as u8;
        gens.push((g, h));
    }
    gens
}

fn all_invertible(s: Small) -> Vec<Mat> {
    let count = (s.p as u64).pow((s.n * s.n) as u32);
    (0..count)
        .map(|c| s.digits(c, s.n * s.n))
        .filter(|g| s.rank(g) == s.n)
        .collect()
}

/// Counts `|{(g, u) : Ad(g, u)(X, w) = (X, w)}|`, by direct enumeration.
fn stabilizer_order(s: Small, gl: &[Mat], vectors: &[Vec<u8>], x: &[u8], w: &[u8]) -> u64 {
    gl.iter()
        .filter(|g| s.mul(g, x) == s.mul(x, g))
        .map(|g| {
            let gw = s.mul_vec(g, w);
            vectors
                .iter()
                .filter(|u| s.sub_vec(&gw, &s.mul_vec(x, u)) == w)
                .count() as u64
        })
        .sum()
}

pub fn orbit_census(n: usize, p: u64) -> Result<CensusReport> {
    check_feasible(n, p)?;
    let start = Instant::now();
    let field = PrimeField::new(p)?;
    let s = Small { n, p: p as u8 };

    let nilpotents = nilpotent_raw(s);
    let vectors: Vec<Vec<u8>> = (0..(p.pow(n as u32))).map(|c| s.digits(c, n)).collect();
    // States in increasing packed order: the w digits are most significant.
    let states: Vec<(Mat, Vec<u8>)> = vectors
        .iter()
        .flat_map(|w| nilpotents.iter().map(move |x| (x.clone(), w.clone())))
        .collect();
    let codes: Vec<u64> = states.iter().map(|(x, w)| s.encode(x, w)).collect();
    debug_assert!(codes.windows(2).all(|c| c[0] < c[1]));
    let index_of = |code: u64| codes.binary_search(&code).expect("orbit stays in the cone");

    let gens = gl_generators(s, &field);
    let mut sets = DisjointSets::new(states.len());
    for (i, (x, w)) in states.iter().enumerate() {
        for (g, h) in &gens {
            let x2 = s.mul(&s.mul(g, x), h);
            let w2 = s.mul_vec(g, w);
            sets.union(i, index_of(s.encode(&x2, &w2)));
        }
        for k in 0..n {
            let column: Vec<u8> = (0..n).map(|r| x[r * n + k]).collect();
            sets.union(i, index_of(s.encode(x, &s.sub_vec(w, &column))));
        }
    }

    let kinds: Vec<EnhancedPartition> = states
        .par_iter()
        .map(|(x, w)| classify(&s.element(&field, x, w)).expect("nilpotent state"))
        .collect();

    let roots: Vec<usize> = (0..states.len()).map(|i| sets.find(i)).collect();
    let mut classification_constant = true;
    let mut sizes = vec![0u64; states.len()];
    for (i, &r) in roots.iter().enumerate() {
        sizes[r] += 1;
        if kinds[i] != kinds[r] {
            classification_constant = false;
        }
    }

    let gl = all_invertible(s);
    let group_order = gl_order(n, p) * p.pow(n as u32);
    let orbit_roots: Vec<usize> = (0..states.len()).filter(|&i| roots[i] == i).collect();
    let stabilizers: Vec<u64> = orbit_roots
        .par_iter()
        .map(|&r| stabilizer_order(s, &gl, &vectors, &states[r].0, &states[r].1))
        .collect();

    let canonical = EnhancedPartition::all(n);
    let rank_of = |k: &EnhancedPartition| canonical.iter().position(|c| c == k);
    let mut orbits: Vec<CensusOrbit> = orbit_roots
        .iter()
        .zip(&stabilizers)
        .map(|(&r, &stab)| CensusOrbit {
            representative: codes[r],
            size: sizes[r],
            stabilizer_order: stab,
            kind: kinds[r].clone(),
        })
        .collect();
    orbits.sort_by_key(|o| (rank_of(&o.kind), o.representative));

    let distinct: BTreeSet<String> = orbits.iter().map(|o| o.kind.to_string()).collect();
    Ok(CensusReport {
        n,
        p,
        state_count: states.len() as u64,
        expected_count: canonical.len(),
        classification_constant,
        classification_distinct: distinct.len() == orbits.len(),
        orbit_stabilizer_ok: orbits
            .iter()
            .all(|o| o.size * o.stabilizer_order == group_order),
        orbits,
        elapsed: start.elapsed(),
    })
}

/// Decodes a packed state into an element over `F_p`.
pub fn unpack_state(n: usize, p: u64, code: u64) -> Result<EnhancedElement<PrimeField>> {
    check_feasible(n, p)?;
    let field = PrimeField::new(p)?;
    let s = Small { n, p: p as u8 };
    if code >= (p).pow((n * n + n) as u32) {
        return Err(Error::OutOfRange(format!(
            "packed code {code:#x} too large"
        )));
    }
    let (x, w) = s.decode(code);
    EnhancedElement::new(
        s.element(&field, &x, &w).x().clone(),
        w.iter().map(|&v| v as u64).collect(),
    )
}

pub fn pack_state(e: &EnhancedElement<PrimeField>) -> Result<u64> {
    let n = e.n();
    let p = e.field().modulus();
    check_feasible(n, p)?;
    let s = Small { n, p: p as u8 };
    let x: Vec<u8> = e.x().to_rows().concat().iter().map(|&v| v as u8).collect();
    let w: Vec<u8> = e.w().iter().map(|&v| v as u8).collect();
    Ok(s.encode(&x, &w))
}

/// Bit-packed vectors over `F_2`, bit `i` holding coordinate `i`.
fn apply_bits(x: &[u8], n: usize, v: u8) -> u8 {
    (0..n).fold(0u8, |acc, i| {
        let bit = (0..n).fold(0u8, |b, k| b ^ (x[i * n + k] & (v >> k) & 1));
        acc | (bit << i)
    })
}

fn xor_rank(vectors: impl IntoIterator<Item = u8>) -> usize {
    let mut basis = [0u8; 8];
    let mut rank = 0;
    for mut v in vectors {
        for b in (0..8).rev() {
            if v >> b & 1 == 0 {
                continue;
            }
            if basis[b] == 0 {
                basis[b] = v;
                rank += 1;
                break;
            }
            v ^= basis[b];
        }
    }
    rank
}

/// Maximum over `ũ ∈ w + im X` and `ν₁, …, ν_k ∈ V` of the dimension of the
/// `F_2[X]`-submodule generated by `ũ, ν₁, …, ν_k`.
pub fn enhanced_number_oracle(e: &EnhancedElement<PrimeField>, k: usize) -> Result<usize> {
    let n = e.n();
    if e.field().modulus() != 2 || n > 3 {
        return Err(Error::OutOfRange(format!(
            "oracle supports p = 2, n <= 3; got p = {}, n = {n}",
            e.field().modulus()
        )));
    }
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let x: Vec<u8> = e.x().to_rows().concat().iter().map(|&v| v as u8).collect();
    let w = e
        .w()
        .iter()
        .enumerate()
        .fold(0u8, |acc, (i, &v)| acc | ((v as u8) << i));
    let all: Vec<u8> = (0..1u8 << n).collect();
    let image: BTreeSet<u8> = all.iter().map(|&v| apply_bits(&x, n, v)).collect();
    let orbit_span = |gens: &[u8]| {
        let mut vs = Vec::new();
        for &g in gens {
            let mut v = g;
            for _ in 0..n {
                vs.push(v);
                v = apply_bits(&x, n, v);
            }
        }
        xor_rank(vs)
    };
    let tuples = 1usize << (n * k);
    let mut best = 0;
    for &im in &image {
        let u = w ^ im;
        for t in 0..tuples {
            let mut gens = vec![u];
            gens.extend((0..k).map(|i| ((t >> (n * i)) & ((1 << n) - 1)) as u8));
            best = best.max(orbit_span(&gens));
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMismatch {
    pub state: u64,
    pub k: usize,
    pub oracle: usize,
    pub formula: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSweep {
    pub n: usize,
    pub checked: usize,
    pub mismatches: Vec<OracleMismatch>,
}

impl OracleSweep {
    pub fn summary(&self) -> String {
        format!(
            "enhanced numbers n={} p=2: {} cases checked, {} mismatches",
            self.n,
            self.checked,
            self.mismatches.len()
        )
    }
}

/// Compares the oracle with the `℘` formula of the classified type on every
/// pair `(X, w)` over `F_2` and every `k ≤ min(n, max_k)`.
pub fn enhanced_number_sweep(n: usize, max_k: usize) -> Result<OracleSweep> {
    if !(1..=3).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "oracle sweep supports 1 <= n <= 3, got {n}"
        )));
    }
    let field = PrimeField::new(2)?;
    let s = Small { n, p: 2 };
    let nilpotents = nilpotent_raw(s);
    let states: Vec<(Mat, Vec<u8>)> = (0..1u64 << n)
        .map(|c| s.digits(c, n))
        .flat_map(|w| nilpotents.iter().map(move |x| (x.clone(), w.clone())))
        .collect();
    let results: Vec<Vec<(u64, usize, usize, usize)>> = states
        .par_iter()
        .map(|(x, w)| {
            let e = s.element(&field, x, w);
            let kind = classify(&e).expect("nilpotent state");
            (0..=n.min(max_k))
                .map(|k| {
                    let oracle = enhanced_number_oracle(&e, k).expect("feasible");
                    let formula = kind.enhanced_number(k).expect("k <= n");
                    (s.encode(x, w), k, oracle, formula)
                })
                .collect()
        })
        .collect();
    let flat: Vec<_> = results.into_iter().flatten().collect();
    Ok(OracleSweep {
        n,
        checked: flat.len(),
        mismatches: flat
            .into_iter()
            .filter(|r| r.2 != r.3)
            .map(|(state, k, oracle, formula)| OracleMismatch {
                state,
                k,
                oracle,
                formula,
            })
            .collect(),
    })
}
