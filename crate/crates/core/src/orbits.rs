//! Nilpotent orbits attached to ideals in types A and B.
//!
//! An ideal is realized as a space of strictly upper triangular matrices, in
//! `sl_n` for type `A_{n−1}` and in `so(2n+1)` (bilinear form with ones on the
//! antidiagonal) for type `B_n`. The orbit of a generic element is labelled by
//! its Jordan type, read off from the ranks of its powers over `F_p`.

use std::cmp::Ordering;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Counterexample, Error, Result};
use crate::ideals::{enumerate_ideals, is_upward_closed, Ideal};
use crate::partition::{partitions_of, Partition};
use crate::rootsys::{Family, Root, RootSystem, RootSystemKind};

/// Prime used for the random rank computations.
pub const PRIME: u64 = 32003;

/// A matrix slot carrying `sign · c_root`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternEntry {
    pub row: usize,
    pub col: usize,
    /// Index of the positive root in root order.
    pub root: usize,
    pub sign: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPattern {
    dim: usize,
    entries: Vec<PatternEntry>,
}

impl MatrixPattern {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[PatternEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Root indices present, in root order.
    pub fn roots(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.entries.iter().map(|e| e.root).collect();
        r.sort_unstable();
        r.dedup();
        r
    }

    /// Dense matrix over `F_p` with coefficient `coeff(root)` on each root.
    fn fill(&self, coeff: impl Fn(usize) -> u64) -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; self.dim]; self.dim];
        for e in &self.entries {
            let c = coeff(e.root) % PRIME;
            let v = if e.sign >= 0 { c } else { (PRIME - c) % PRIME };
            m[e.row - 1][e.col - 1] = (m[e.row - 1][e.col - 1] + v) % PRIME;
        }
        m
    }
}

/// Entries of a positive root's root vector, as `(row, col, sign)`.
fn root_entries(rs: &RootSystem, root: &Root) -> Result<Vec<(usize, usize, i64)>> {
    let c = root.coeffs();
    match rs.family() {
        Family::A => {
            // e_i − e_j with ones on positions i..j−1
            let first = c.iter().position(|&x| x != 0);
            let last = c.iter().rposition(|&x| x != 0);
            match (first, last) {
                (Some(f), Some(l)) => Ok(vec![(f + 1, l + 2, 1)]),
                _ => Err(Error::Internal(format!("zero vector {root} in type A"))),
            }
        }
        Family::B => {
            let n = rs.rank();
            let d = 2 * n + 1;
            let prime = |k: usize| d + 1 - k;
            // coordinates over e_1, …, e_n
            let v: Vec<i64> = (0..n).map(|m| c[m] - if m > 0 { c[m - 1] } else { 0 }).collect();
            let plus: Vec<usize> = (0..n).filter(|&m| v[m] == 1).map(|m| m + 1).collect();
            let minus: Vec<usize> = (0..n).filter(|&m| v[m] == -1).map(|m| m + 1).collect();
            match (plus.as_slice(), minus.as_slice()) {
                (&[i], &[j]) => Ok(vec![(i, j, 1), (prime(j), prime(i), -1)]),
                (&[i, j], &[]) => Ok(vec![(i, prime(j), 1), (j, prime(i), -1)]),
                (&[i], &[]) => Ok(vec![(i, n + 1, 1), (n + 1, prime(i), -1)]),
                _ => Err(Error::Internal(format!("unexpected root {root} in type B"))),
            }
        }
        Family::G => Err(Error::NoMatrixRealization(rs.kind().to_string())),
    }
}

/// Positions of the root vectors of `I` in the defining representation.
pub fn matrix_realization(ideal: &Ideal) -> Result<MatrixPattern> {
    let rs = ideal.system();
    let dim = match rs.family() {
        Family::A => rs.rank() + 1,
        Family::B => 2 * rs.rank() + 1,
        Family::G => return Err(Error::NoMatrixRealization(rs.kind().to_string())),
    };
    let mut entries = Vec::new();
    for i in ideal.indices() {
        for (row, col, sign) in root_entries(rs, &rs.positive_roots()[i])? {
            entries.push(PatternEntry { row, col, root: i, sign });
        }
    }
    entries.sort_unstable();
    Ok(MatrixPattern { dim, entries })
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= PRIME;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], PRIME - 2);
        for x in m[rank].iter_mut() {
            *x = *x * inv % PRIME;
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..cols {
                    let sub = f * m[rank][c] % PRIME;
                    m[r][c] = (m[r][c] + PRIME - sub) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % PRIME;
            }
        }
    }
    out
}

/// Jordan type of a nilpotent matrix over `F_p` from the ranks of its powers.
pub fn jordan_type_mod_p(m: &[Vec<u64>]) -> Result<Partition> {
    let d = m.len();
    let mut ranks = vec![d];
    let mut power = m.to_vec();
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > d {
            return Err(Error::Internal("sampled matrix is not nilpotent".into()));
        }
        ranks.push(rank_mod_p(power.clone()));
        power = mat_mul_mod(&power, m);
    }
    // ranks[k−1] − ranks[k] = number of Jordan blocks of size ≥ k
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    if at_least.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!("rank sequence {ranks:?} is not convex")));
    }
    Ok(Partition::new(at_least)?.conjugate())
}

/// Jordan type of a generic element of `I`: the dominance maximum over
/// `trials` random samples with coefficients uniform in `F_p`.
pub fn generic_jordan_type(ideal: &Ideal, seed: u64, trials: usize) -> Result<Partition> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let pattern = matrix_realization(ideal)?;
    let rs = ideal.system();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Partition> = None;
    for _ in 0..trials {
        let coeffs: Vec<u64> = (0..rs.num_positive()).map(|_| rng.gen_range(0..PRIME)).collect();
        let sample = jordan_type_mod_p(&pattern.fill(|r| coeffs[r]))?;
        best = Some(match best {
            None => sample,
            Some(b) => match sample.dominance_cmp(&b) {
                Some(Ordering::Greater) => sample,
                Some(_) => b,
                None => {
                    return Err(Error::Internal(format!(
                        "incomparable samples {b} and {sample} for ideal {ideal}"
                    )))
                }
            },
        });
    }
    let best = best.expect("trials >= 1");
    if rs.family() == Family::B && !best.even_parts_have_even_multiplicity() {
        return Err(Error::Internal(format!(
            "{best} is not an orthogonal Jordan type (ideal {ideal})"
        )));
    }
    Ok(best)
}

/// The ideal spanned by the root spaces of degree ≥ 2 for the grading
/// attached to λ, in `A_{n−1}`.
///
/// The grading comes from the multiset `⋃_m {m−1, m−3, …, 1−m}` over the parts
/// `m`, sorted decreasingly into `h`; the ideal is `{e_i − e_j : h_i − h_j ≥ 2}`.
pub fn ideal_from_partition(n: usize, lambda: &Partition) -> Result<Ideal> {
    if lambda.size() != n {
        return Err(Error::NotAPartition(lambda.to_string(), n));
    }
    let rs = RootSystem::build(RootSystemKind::new(Family::A, n.saturating_sub(1))?)?;
    ideal_from_partition_in(&rs, lambda)
}

fn ideal_from_partition_in(rs: &Arc<RootSystem>, lambda: &Partition) -> Result<Ideal> {
    let mut h: Vec<i64> = lambda
        .parts()
        .iter()
        .flat_map(|&m| {
            let m = m as i64;
            (0..m).map(move |k| m - 1 - 2 * k)
        })
        .collect();
    h.sort_unstable_by(|a, b| b.cmp(a));
    let mut mask = 0u64;
    for (idx, root) in rs.positive_roots().iter().enumerate() {
        let &[(i, j, _)] = root_entries(rs, root)?.as_slice() else {
            return Err(Error::Internal("type A root with several entries".into()));
        };
        if h[i - 1] - h[j - 1] >= 2 {
            mask |= 1 << idx;
        }
    }
    if !is_upward_closed(rs, mask) {
        return Err(Error::Internal(format!("grading of {lambda} does not give an ideal")));
    }
    Ideal::from_mask(rs, mask)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectivitySummary {
    pub partitions: usize,
}

/// Checks `generic_jordan_type(ideal_from_partition(n, λ)) = λ` for every
/// partition λ of every `n` in `ns`.
pub fn check_surjectivity(ns: impl IntoIterator<Item = usize>, seed: u64, trials: usize) -> Result<SurjectivitySummary> {
    let mut partitions = 0;
    for n in ns {
        let rs = RootSystem::build(RootSystemKind::new(Family::A, n.saturating_sub(1))?)?;
        for lambda in partitions_of(n) {
            let ideal = ideal_from_partition_in(&rs, &lambda)?;
            let got = generic_jordan_type(&ideal, seed, trials)?;
            if got != lambda {
                return Err(Counterexample::new("generic Jordan type of the graded ideal = partition")
                    .with("partition", &lambda)
                    .with("ideal", &ideal)
                    .with("jordan type", &got)
                    .into_error());
            }
            partitions += 1;
        }
    }
    Ok(SurjectivitySummary { partitions })
}

/// Generic Jordan type of every ideal of `rs`, in enumeration order.
pub fn orbit_labels(rs: &Arc<RootSystem>, seed: u64, trials: usize) -> Result<Vec<(Ideal, Partition)>> {
    enumerate_ideals(rs)
        .into_iter()
        .map(|i| generic_jordan_type(&i, seed, trials).map(|p| (i, p)))
        .collect()
}
