//! Type Ã_{n−1} in window notation.
//!
//! An affine permutation is a bijection σ of ℤ with `σ(i + n) = σ(i) + n` and
//! `Σ_{t=1}^{n} (σ(t) − t) = 0`; it is stored through its window
//! `(σ(1), …, σ(n))`. Simple reflection `s_i`, `1 ≤ i < n`, swaps `i` and
//! `i + 1` (mod n); `s_0` swaps `0` and `1` (mod n).

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::affine::{minimal_element, AffineWeylElement};
use crate::error::{Counterexample, Error, Result};
use crate::ideals::enumerate_ideals;
use crate::orbits::generic_jordan_type;
use crate::partition::Partition;
use crate::rootsys::{Family, RootSystem, RootSystemKind};

/// Largest `n` for which [`green_partition`] scans all subsets of `[n]`.
pub const GREEN_SEARCH_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::InvalidWindow(window, "empty window"));
        }
        let mut residues: Vec<i64> = window.iter().map(|v| v.rem_euclid(n)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() != window.len() {
            return Err(Error::InvalidWindow(window, "entries not distinct mod n"));
        }
        let shift: i64 = window.iter().zip(1..).map(|(v, t)| v - t).sum();
        if shift != 0 {
            return Err(Error::InvalidWindow(window, "window sum differs from 1 + 2 + ... + n"));
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// σ(i) for any integer `i`.
    pub fn value(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1 - r) / n;
        self.window[r as usize] + q * n
    }

    fn check_index(&self, a: usize) -> Result<()> {
        let n = self.n();
        if a >= n {
            return Err(Error::IndexOutOfRange { index: a, max: n - 1 });
        }
        Ok(())
    }

    /// `σ·s_a`.
    pub fn right_multiply(&self, a: usize) -> Result<Self> {
        self.check_index(a)?;
        let n = self.n();
        let mut window = self.window.clone();
        if a == 0 {
            window[0] = self.window[n - 1] - n as i64;
            window[n - 1] = self.window[0] + n as i64;
        } else {
            window.swap(a - 1, a);
        }
        Ok(Self { window })
    }

    /// `σ(a) > σ(a + 1)`, i.e. `σ·s_a < σ`.
    pub fn has_right_descent(&self, a: usize) -> bool {
        let a = a as i64;
        self.value(a) > self.value(a + 1)
    }

    /// `Σ_{1≤i<j≤n} |⌊(σ(j) − σ(i)) / n⌋|`.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let mut total = 0;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        total
    }

    /// A reduced word, found by peeling the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::new();
        while let Some(a) = (0..cur.n()).find(|&a| cur.has_right_descent(a)) {
            word.push(a);
            cur = cur.right_multiply(a).expect("index in range");
        }
        word.reverse();
        word
    }

    /// The relation `i ≻ j` on `[n]` (1-based):
    /// `i < j` and `σ(i) > σ(j)`, or `i > j` and `σ(i) > σ(j) + n`.
    pub fn chain_order(&self, i: usize, j: usize) -> bool {
        let n = self.n() as i64;
        let (si, sj) = (self.value(i as i64), self.value(j as i64));
        (i < j && si > sj) || (i > j && si > sj + n)
    }

    /// The element of `Ã_{n−1}` with the same reduced word.
    pub fn to_element(&self, rs: &Arc<RootSystem>) -> Result<AffineWeylElement> {
        let expected = RootSystemKind::new(Family::A, self.n() - 1)?;
        if rs.kind() != expected {
            return Err(Error::ContextMismatch(expected.to_string(), rs.kind().to_string()));
        }
        AffineWeylElement::from_word(rs, &self.reduced_word())
    }

    pub fn from_element(w: &AffineWeylElement) -> Result<Self> {
        let rs = w.system();
        if rs.family() != Family::A {
            return Err(Error::WrongFamily {
                expected: "A",
                got: rs.kind().to_string(),
            });
        }
        perm_from_word(rs.rank() + 1, &w.reduced_word())
    }

    /// `{"n": 3, "window": [0, 2, 4]}`.
    pub fn to_json(&self) -> Value {
        json!({"n": self.n(), "window": self.window})
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `s_{word[0]} s_{word[1]} ⋯` acting on `ℤ` with period `n`.
pub fn perm_from_word(n: usize, word: &[usize]) -> Result<AffinePermutation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("window size {n} must be at least 2")));
    }
    word.iter()
        .try_fold(AffinePermutation::identity(n), |acc, &a| acc.right_multiply(a))
}

/// Transitive closure of `≻` as bit masks: `down[i]` holds every `j` with
/// `i ≻ ⋯ ≻ j` (0-based).
fn chain_closure(sigma: &AffinePermutation) -> Result<Vec<u32>> {
    let n = sigma.n();
    let mut down = vec![0u32; n];
    for (i, d) in down.iter_mut().enumerate() {
        for j in 0..n {
            if i != j && sigma.chain_order(i + 1, j + 1) {
                *d |= 1 << j;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if down[i] & (1 << k) != 0 {
                down[i] |= down[k];
            }
        }
    }
    if (0..n).any(|i| down[i] & (1 << i) != 0) {
        return Err(Error::Internal(format!("chain order of {sigma} has a cycle")));
    }
    Ok(down)
}

/// `d_k`, the largest size of a subset of `[n]` with no chain of `k + 1`
/// elements, for `k = 1..=n`.
pub fn max_family_sizes(sigma: &AffinePermutation) -> Result<Vec<usize>> {
    let n = sigma.n();
    if n > GREEN_SEARCH_MAX_N {
        return Err(Error::SearchBudget {
            n,
            max: GREEN_SEARCH_MAX_N,
        });
    }
    let down = chain_closure(sigma)?;
    // longest[mask] = length of the longest chain inside mask; every
    // recursive call is on a proper submask, hence a smaller integer.
    let mut longest = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        longest[mask] = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| 1 + longest[mask & down[i] as usize])
            .max()
            .unwrap_or(0);
    }
    let mut d = vec![0usize; n + 1];
    for (mask, &l) in longest.iter().enumerate() {
        let size = mask.count_ones() as usize;
        for dk in d.iter_mut().skip(l as usize) {
            *dk = (*dk).max(size);
        }
    }
    Ok(d[1..].to_vec())
}

/// Green's partition φ(σ): with `λ_j = d_j − d_{j−1}`, returns the
/// conjugate of λ.
pub fn green_partition(sigma: &AffinePermutation) -> Result<Partition> {
    let d = max_family_sizes(sigma)?;
    let n = sigma.n();
    if d.windows(2).any(|w| w[0] > w[1]) || d.last() != Some(&n) {
        return Err(Error::Internal(format!("family sizes {d:?} of {sigma} are not monotone up to n")));
    }
    let mut steps: Vec<usize> = d
        .iter()
        .scan(0, |prev, &dk| {
            let step = dk - *prev;
            *prev = dk;
            Some(step)
        })
        .collect();
    if steps.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!(
            "family increments {steps:?} of {sigma} are not weakly decreasing"
        )));
    }
    steps.retain(|&x| x > 0);
    let lambda = Partition::new(steps)?;
    Ok(lambda.conjugate())
}

/// Outcome of comparing Green's partition with the generic Jordan type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenDiagramSummary {
    pub system: String,
    pub minimal_elements: usize,
    pub dominant_elements: usize,
}

/// Checks `green_partition(σ) = generic_jordan_type(first_layer_ideal(σ))`
/// for every minimal element of `Ã_{n−1}` and every dominant element of
/// length at most `max_length`.
pub fn check_green_diagram(n: usize, max_length: usize, seed: u64, trials: usize) -> Result<GreenDiagramSummary> {
    let rs = RootSystem::build(RootSystemKind::new(Family::A, n.saturating_sub(1))?)?;
    let check = |w: &AffineWeylElement| -> Result<()> {
        let sigma = AffinePermutation::from_element(w)?;
        let green = green_partition(&sigma)?;
        let ideal = w.first_layer_ideal()?;
        let jordan = generic_jordan_type(&ideal, seed, trials)?;
        if green != jordan {
            return Err(Counterexample::new("green partition = generic Jordan type of first layer")
                .with("element", w)
                .with("window", &sigma)
                .with("first layer ideal", &ideal)
                .with("green partition", &green)
                .with("jordan type", &jordan)
                .into_error());
        }
        Ok(())
    };
    let ideals = enumerate_ideals(&rs);
    for ideal in &ideals {
        check(&minimal_element(ideal)?)?;
    }
    let mut dominant = 0;
    for w in crate::affine::elements_up_to_length(&rs, max_length) {
        if w.is_dominant() {
            check(&w)?;
            dominant += 1;
        }
    }
    Ok(GreenDiagramSummary {
        system: rs.kind().to_string(),
        minimal_elements: ideals.len(),
        dominant_elements: dominant,
    })
}
