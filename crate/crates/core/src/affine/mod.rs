//! Affine roots and affine Weyl group elements.
//!
//! An element is stored as a pair `(u, λ)` with `u` in the finite Weyl group
//! and `λ` in the coroot lattice, standing for `u·t_λ`. It acts on affine
//! roots by
//!
//! ```text
//! w(β + kδ) = u(β) + (k − (β, λ))δ
//! ```
//!
//! and on `V` by `x ↦ u(x + λ)`. Affine roots `β + kδ` are read as the affine
//! functions `x ↦ (β, x) + k`, so the positive ones are exactly those positive
//! on the fundamental alcove.
//!
//! Simple reflections are indexed `0..=n`: index 0 is the reflection in
//! `δ − θ`, index `i ≥ 1` is the reflection in the finite simple root `α_i`.
//!
//! The inversion set of `w` is `N(w) = {γ ∈ Δ̂⁺ : w(γ) < 0}`: the walls
//! separating the fundamental alcove from `w⁻¹(C₀)`. This is the convention
//! under which a dominant element sends every finite simple root to a
//! positive affine root and its first layer is `{μ : w(δ − μ) < 0}`.

mod dominance;
mod star;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

pub use dominance::{generators_via_affine, minimal_element, normalizer_via_affine};
pub use star::{fundamental_alcove_point, order_is_three, pair_point, DescentSet};

/// The affine root `finite + level·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    level: i64,
    finite: Root,
}

impl AffineRoot {
    pub fn new(finite: Root, level: i64) -> Self {
        Self { level, finite }
    }

    pub fn finite(&self) -> &Root {
        &self.finite
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// Δ̂⁺ = (Δ⁺ + ℕδ) ∪ (Δ⁻ + ℕ⁺δ).
    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        !self.is_positive()
    }

    pub fn neg(&self) -> Self {
        Self {
            level: -self.level,
            finite: self.finite.neg(),
        }
    }

    /// Affine simple root for reflection index `s`.
    pub fn simple(rs: &RootSystem, s: usize) -> Self {
        if s == 0 {
            Self::new(rs.highest_root().neg(), 1)
        } else {
            Self::new(rs.simple_root(s - 1), 0)
        }
    }

    /// Index `s` with `self = α_s`, if this is an affine simple root.
    pub fn simple_index(&self, rs: &RootSystem) -> Option<usize> {
        match self.level {
            0 => self.finite.simple_index().map(|i| i + 1),
            1 if &self.finite.neg() == rs.highest_root() => Some(0),
            _ => None,
        }
    }

    pub fn label(&self, rs: &RootSystem) -> String {
        let delta = match self.level {
            0 => return rs.root_label(&self.finite),
            1 => "δ".to_string(),
            -1 => "-δ".to_string(),
            k => format!("{k}δ"),
        };
        format!("{delta} + ({})", rs.root_label(&self.finite))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}δ", self.finite, self.level)
    }
}

type Matrix = Vec<i64>;

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Matrix {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

fn mat_apply(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

fn identity_matrix(n: usize) -> Matrix {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// An element `u·t_λ` of the affine Weyl group.
#[derive(Clone)]
pub struct AffineWeylElement {
    rs: Arc<RootSystem>,
    // Columns are the images of the simple roots, in simple-root coordinates.
    finite: Matrix,
    finite_inv: Matrix,
    // Coordinates over the simple coroots.
    translation: Vec<i64>,
}

impl PartialEq for AffineWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs.kind() == other.rs.kind()
            && self.finite == other.finite
            && self.translation == other.translation
    }
}

impl Eq for AffineWeylElement {}

impl Hash for AffineWeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rs.kind().hash(state);
        self.finite.hash(state);
        self.translation.hash(state);
    }
}

impl PartialOrd for AffineWeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AffineWeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rs
            .kind()
            .cmp(&other.rs.kind())
            .then_with(|| self.finite.cmp(&other.finite))
            .then_with(|| self.translation.cmp(&other.translation))
    }
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.rs.kind(), self.reduced_word())
    }
}

impl fmt::Display for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.reduced_word();
        if word.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = word.iter().map(|s| format!("s{s}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl AffineWeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let n = rs.rank();
        Self {
            rs: Arc::clone(rs),
            finite: identity_matrix(n),
            finite_inv: identity_matrix(n),
            translation: vec![0; n],
        }
    }

    /// The simple reflection `s_index`, `index ∈ 0..=rank`.
    pub fn simple_reflection(rs: &Arc<RootSystem>, index: usize) -> Result<Self> {
        let n = rs.rank();
        if index > n {
            return Err(Error::IndexOutOfRange { index, max: n });
        }
        let mirror = if index == 0 {
            rs.highest_root().clone()
        } else {
            rs.simple_root(index - 1)
        };
        let mut finite = vec![0; n * n];
        for j in 0..n {
            let img = rs.reflect_vec(&mirror, rs.simple_root(j).coeffs());
            for i in 0..n {
                finite[i * n + j] = img[i];
            }
        }
        // s_0 = s_θ · t_{-θ^∨}; θ is long, so θ^∨ = θ in root coordinates.
        let translation = if index == 0 {
            rs.highest_root()
                .coeffs()
                .iter()
                .zip(rs.coroot_scale())
                .map(|(t, m)| {
                    debug_assert_eq!(t % m, 0);
                    -(t / m)
                })
                .collect()
        } else {
            vec![0; n]
        };
        Ok(Self {
            rs: Arc::clone(rs),
            finite_inv: finite.clone(),
            finite,
            translation,
        })
    }

    /// Product `s_{word[0]} s_{word[1]} ⋯`.
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        let mut acc = Self::identity(rs);
        for &s in word {
            acc = acc.compose(&Self::simple_reflection(rs, s)?)?;
        }
        Ok(acc)
    }

    /// Rebuilds an element from its finite part (images of the simple roots,
    /// one vector per simple root) and coroot-lattice translation.
    pub fn from_parts(rs: &Arc<RootSystem>, finite: &[Vec<i64>], translation: &[i64]) -> Result<Self> {
        let n = rs.rank();
        if finite.len() != n || translation.len() != n || finite.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidArgument("dimension mismatch".into()));
        }
        let mut m = vec![0; n * n];
        for (j, col) in finite.iter().enumerate() {
            for i in 0..n {
                m[i * n + j] = col[i];
            }
        }
        // Recover a word for u from the images of simple roots, then check.
        let mut cur = Self {
            rs: Arc::clone(rs),
            finite: m.clone(),
            finite_inv: identity_matrix(n),
            translation: vec![0; n],
        };
        let mut word = Vec::new();
        for _ in 0..=rs.num_positive() {
            let Some(i) = (0..n).find(|&i| !Root::raw(cur.finite_column(i)).is_positive()) else {
                break;
            };
            // u s_i: column j becomes u(s_i α_j)
            let s = Self::simple_reflection(rs, i + 1)?;
            cur.finite = mat_mul(n, &cur.finite, &s.finite);
            word.push(i + 1);
        }
        if cur.finite != identity_matrix(n) {
            return Err(Error::InvalidArgument("finite part is not a Weyl group element".into()));
        }
        word.reverse();
        let mut u = Self::from_word(rs, &word)?;
        u.translation = translation.to_vec();
        if u.finite != m {
            return Err(Error::Internal("finite part reconstruction failed".into()));
        }
        Ok(u)
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Image of the simple root `α_j` under the finite part.
    pub fn finite_column(&self, j: usize) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|i| self.finite[i * n + j]).collect()
    }

    /// Images of the simple roots under the finite part.
    pub fn finite_images(&self) -> Vec<Vec<i64>> {
        (0..self.rank()).map(|j| self.finite_column(j)).collect()
    }

    /// Translation part in simple-coroot coordinates.
    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// Translation part in simple-root coordinates.
    pub fn translation_root_coords(&self) -> Vec<i64> {
        self.translation
            .iter()
            .zip(self.rs.coroot_scale())
            .map(|(c, m)| c * m)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.finite == identity_matrix(self.rank()) && self.translation.iter().all(|&c| c == 0)
    }

    fn coroot_to_root(&self, c: &[i64]) -> Vec<i64> {
        c.iter().zip(self.rs.coroot_scale()).map(|(c, m)| c * m).collect()
    }

    fn root_to_coroot(&self, v: &[i64]) -> Vec<i64> {
        v.iter()
            .zip(self.rs.coroot_scale())
            .map(|(x, m)| {
                assert_eq!(x % m, 0, "vector left the coroot lattice");
                x / m
            })
            .collect()
    }

    /// `(β, λ)` for the translation λ, an integer.
    fn pair_with_translation(&self, beta: &[i64]) -> i64 {
        self.translation
            .iter()
            .enumerate()
            .map(|(i, &c)| c * self.rs.coroot_pairing(beta, i))
            .sum()
    }

    fn apply_finite(&self, v: &[i64]) -> Vec<i64> {
        mat_apply(self.rank(), &self.finite, v)
    }

    /// `w(β + kδ) = u(β) + (k − (β, λ))δ`.
    pub fn act(&self, r: &AffineRoot) -> AffineRoot {
        let beta = r.finite.coeffs();
        AffineRoot::new(
            Root::raw(self.apply_finite(beta)),
            r.level - self.pair_with_translation(beta),
        )
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.rs.kind() != other.rs.kind() {
            return Err(Error::ContextMismatch(
                self.rs.kind().to_string(),
                other.rs.kind().to_string(),
            ));
        }
        Ok(())
    }

    /// Group product `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.rank();
        // (u1 t_λ1)(u2 t_λ2) = u1 u2 t_{u2⁻¹(λ1) + λ2}
        let l1 = self.coroot_to_root(&self.translation);
        let moved = self.root_to_coroot(&mat_apply(n, &other.finite_inv, &l1));
        let translation = moved.iter().zip(&other.translation).map(|(a, b)| a + b).collect();
        Ok(Self {
            rs: Arc::clone(&self.rs),
            finite: mat_mul(n, &self.finite, &other.finite),
            finite_inv: mat_mul(n, &other.finite_inv, &self.finite_inv),
            translation,
        })
    }

    pub fn inverse(&self) -> Self {
        // (u t_λ)⁻¹ = u⁻¹ t_{−u(λ)}
        let n = self.rank();
        let l = self.coroot_to_root(&self.translation);
        let ul = self.root_to_coroot(&mat_apply(n, &self.finite, &l));
        Self {
            rs: Arc::clone(&self.rs),
            finite: self.finite_inv.clone(),
            finite_inv: self.finite.clone(),
            translation: ul.into_iter().map(|c| -c).collect(),
        }
    }

    /// `s_index · self`.
    pub fn left_multiply(&self, index: usize) -> Result<Self> {
        Self::simple_reflection(&self.rs, index)?.compose(self)
    }

    /// `self · s_index`.
    pub fn right_multiply(&self, index: usize) -> Result<Self> {
        self.compose(&Self::simple_reflection(&self.rs, index)?)
    }

    /// For each finite root β, the levels k with β + kδ ∈ N(w).
    fn for_each_inversion(&self, mut f: impl FnMut(&Root, i64)) {
        for beta in self.rs.all_roots() {
            let c = self.pair_with_translation(beta.coeffs());
            let kmin = if beta.is_positive() { 0 } else { 1 };
            let image_negative = Root::raw(self.apply_finite(beta.coeffs())).is_negative();
            let kmax = if image_negative { c } else { c - 1 };
            for k in kmin..=kmax {
                f(&beta, k);
            }
        }
    }

    /// `N(w) = {γ ∈ Δ̂⁺ : w(γ) < 0}`, sorted by level.
    pub fn inversion_set(&self) -> BTreeSet<AffineRoot> {
        let mut out = BTreeSet::new();
        self.for_each_inversion(|beta, k| {
            out.insert(AffineRoot::new(beta.clone(), k));
        });
        out
    }

    /// Coxeter length, `|N(w)|`.
    pub fn length(&self) -> usize {
        let mut n = 0;
        self.for_each_inversion(|_, _| n += 1);
        n
    }

    /// Whether `s_index · w < w`, i.e. `w⁻¹(α_s) < 0`.
    pub fn has_left_descent(&self, index: usize) -> bool {
        self.inverse()
            .act(&AffineRoot::simple(&self.rs, index))
            .is_negative()
    }

    /// A reduced word `[s_1, …, s_m]` with `w = s_1 ⋯ s_m`; lexicographically
    /// first among those found by peeling left descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = self.clone();
        loop {
            let inv = cur.inverse();
            let Some(s) = (0..=self.rank())
                .find(|&s| inv.act(&AffineRoot::simple(&self.rs, s)).is_negative())
            else {
                break;
            };
            word.push(s);
            cur = cur.left_multiply(s).expect("index in range");
        }
        word
    }

    /// `{"word": [...], "translation": [...], "finite": [[...], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "word": self.reduced_word(),
            "translation": self.translation,
            "finite": self.finite_images(),
        })
    }
}

/// All elements of length at most `max_length`, by length and then by the
/// element order.
pub fn elements_up_to_length(rs: &Arc<RootSystem>, max_length: usize) -> Vec<AffineWeylElement> {
    let mut out = vec![AffineWeylElement::identity(rs)];
    let mut layer = out.clone();
    for _ in 0..max_length {
        let mut next: HashSet<AffineWeylElement> = HashSet::new();
        for w in &layer {
            for s in 0..=rs.rank() {
                if !w.has_left_descent(s) {
                    next.insert(w.left_multiply(s).expect("index in range"));
                }
            }
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn rs(code: &str) -> Arc<RootSystem> {
        RootSystem::build(code.parse().unwrap()).unwrap()
    }

    /// Reflection on V̂ straight from `s_α(x) = x − 2(α,x)/(α,α) α`, with δ
    /// isotropic and orthogonal to V.
    fn reflect_hat(rs: &RootSystem, a: &AffineRoot, x: &AffineRoot) -> AffineRoot {
        let ip = rs.inner_product(a.finite(), x.finite());
        let aa = rs.inner_product(a.finite(), a.finite());
        let c = Rational64::from(2) * ip / aa;
        assert!(c.is_integer());
        let c = c.to_integer();
        let fin: Vec<i64> = x
            .finite()
            .coeffs()
            .iter()
            .zip(a.finite().coeffs())
            .map(|(p, q)| p - c * q)
            .collect();
        AffineRoot::new(Root::raw(fin), x.level() - c * a.level())
    }

    #[test]
    fn simple_reflections_match_reflection_formula() {
        for code in ["A1", "A2", "A3", "B2", "B3", "G2"] {
            let s = rs(code);
            for i in 0..=s.rank() {
                let w = AffineWeylElement::simple_reflection(&s, i).unwrap();
                let a = AffineRoot::simple(&s, i);
                for beta in s.all_roots() {
                    for k in -2..=2 {
                        let r = AffineRoot::new(beta.clone(), k);
                        assert_eq!(w.act(&r), reflect_hat(&s, &a, &r), "{code} s{i} on {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn identity_and_s0() {
        let a2 = rs("A2");
        let e = AffineWeylElement::identity(&a2);
        for beta in a2.all_roots() {
            let r = AffineRoot::new(beta, 3);
            assert_eq!(e.act(&r), r);
        }
        let s0 = AffineWeylElement::simple_reflection(&a2, 0).unwrap();
        let a0 = AffineRoot::simple(&a2, 0);
        assert_eq!(s0.act(&a0), a0.neg());
    }

    #[test]
    fn words_and_involutions() {
        for code in ["A1", "A3", "B3", "G2"] {
            let s = rs(code);
            assert!(AffineWeylElement::from_word(&s, &[]).unwrap().is_identity());
            for i in 0..=s.rank() {
                assert!(AffineWeylElement::from_word(&s, &[i, i]).unwrap().is_identity());
            }
            assert!(matches!(
                AffineWeylElement::from_word(&s, &[s.rank() + 1]),
                Err(Error::IndexOutOfRange { .. })
            ));
        }
        let a1 = rs("A1");
        let x = AffineWeylElement::from_word(&a1, &[0, 1, 0]).unwrap();
        let y = AffineWeylElement::from_word(&a1, &[1, 0, 1]).unwrap();
        assert_ne!(x, y);
    }

    #[test]
    fn word_concatenation_is_composition() {
        let s = rs("B3");
        let u = [0, 1, 2, 3, 2];
        let v = [1, 0, 3, 2];
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let a = AffineWeylElement::from_word(&s, &u).unwrap();
        let b = AffineWeylElement::from_word(&s, &v).unwrap();
        assert_eq!(AffineWeylElement::from_word(&s, &uv).unwrap(), a.compose(&b).unwrap());
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn inversion_sets_of_generators() {
        for code in ["A1", "A2", "B2", "G2"] {
            let s = rs(code);
            assert!(AffineWeylElement::identity(&s).inversion_set().is_empty());
            for i in 0..=s.rank() {
                let w = AffineWeylElement::simple_reflection(&s, i).unwrap();
                let n: Vec<_> = w.inversion_set().into_iter().collect();
                assert_eq!(n, vec![AffineRoot::simple(&s, i)]);
            }
        }
        let a2 = rs("A2");
        let s0 = AffineWeylElement::simple_reflection(&a2, 0).unwrap();
        let theta = a2.highest_root().clone();
        assert_eq!(
            s0.inversion_set().into_iter().collect::<Vec<_>>(),
            vec![AffineRoot::new(theta.neg(), 1)]
        );
    }

    #[test]
    fn reduced_words_have_length_many_letters() {
        for code in ["A2", "B2", "G2"] {
            let s = rs(code);
            for w in elements_up_to_length(&s, 6) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(AffineWeylElement::from_word(&s, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn growth_of_a2() {
        // Ã2: one element of length 0, then 3k elements of length k.
        let s = rs("A2");
        let all = elements_up_to_length(&s, 6);
        for k in 0..=6 {
            let count = all.iter().filter(|w| w.length() == k).count();
            assert_eq!(count, if k == 0 { 1 } else { 3 * k });
        }
    }

    #[test]
    fn parts_round_trip() {
        let s = rs("G2");
        for w in elements_up_to_length(&s, 5) {
            let back = AffineWeylElement::from_parts(&s, &w.finite_images(), w.translation()).unwrap();
            assert_eq!(back, w);
        }
        assert!(AffineWeylElement::from_parts(&s, &[vec![2, 0], vec![0, 1]], &[0, 0]).is_err());
    }
}
