//! Root systems of types A_n, B_n and G2 built from Cartan data.
//!
//! Everything is exact. The invariant form is normalized so that the highest
//! root has squared length 2; with that choice every coroot `α^∨ = 2α/(α,α)`
//! is an integer multiple of `α`, so the coroot lattice sits inside the root
//! lattice and the affine action stays integral.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

/// Cartan type: family plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemKind {
    family: Family,
    rank: usize,
}

impl RootSystemKind {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 || (family == Family::G && rank != 2) {
            return Err(Error::UnsupportedRootSystem(format!("{family}{rank}")));
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether `build` accepts this kind: A1..A7, B2..B4, G2.
    pub fn is_supported(&self) -> bool {
        match self.family {
            Family::A => (1..=7).contains(&self.rank),
            Family::B => (2..=4).contains(&self.rank),
            Family::G => self.rank == 2,
        }
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedRootSystem(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(family, rank).map_err(|_| bad())
    }
}

/// A root, as integer coordinates over the simple roots.
///
/// Values of this type are only handed out by a [`RootSystem`], which checks
/// membership.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub(crate) fn raw(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Index of the simple root this is, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut idx = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn add_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A reduced root system with a fixed base, positive roots and invariant form.
#[derive(Debug)]
pub struct RootSystem {
    kind: RootSystemKind,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<Rational64>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    highest: Root,
    // α_i^∨ = coroot_scale[i] · α_i
    coroot_scale: Vec<i64>,
    // pos_sum[i][j] = index of β_i + β_j; pos_diff[i][j] = index of β_i - β_j
    pos_sum: Vec<Vec<Option<usize>>>,
    pos_diff: Vec<Vec<Option<usize>>>,
}

fn cartan_matrix(kind: RootSystemKind) -> Vec<Vec<i64>> {
    let n = kind.rank();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    match kind.family() {
        Family::A => {}
        Family::B => {
            // α_n short: <α_{n-1}, α_n^∨> = -2
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        Family::G => {
            // index 0 = α1 (short), index 1 = α6 (long)
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

impl RootSystem {
    /// Builds the full root system for a supported kind.
    pub fn build(kind: RootSystemKind) -> Result<Arc<RootSystem>> {
        if !kind.is_supported() {
            return Err(Error::UnsupportedRootSystem(kind.to_string()));
        }
        let n = kind.rank();
        let cartan = cartan_matrix(kind);

        // Relative squared lengths from symmetrizability of the Cartan matrix.
        let mut len: Vec<Option<Rational64>> = vec![None; n];
        len[0] = Some(Rational64::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && len[j].is_none() {
                    let li = len[i].unwrap();
                    len[j] = Some(li * Rational64::new(cartan[j][i], cartan[i][j]));
                    queue.push_back(j);
                }
            }
        }
        let len: Vec<Rational64> = len.into_iter().map(|l| l.expect("connected diagram")).collect();

        let all = generate_roots(&cartan);
        let mut positive: Vec<Root> = all
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .map(Root)
            .collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));

        let highest = positive.last().cloned().expect("nonempty");
        if positive
            .iter()
            .any(|b| highest.0.iter().zip(&b.0).any(|(t, c)| t < c))
        {
            return Err(Error::Internal("highest root is not unique maximal".into()));
        }

        // Unnormalized form, then rescale so that (θ, θ) = 2.
        let raw_form = |i: usize, j: usize| Rational64::from(cartan[i][j]) * len[j] / 2;
        let mut theta_sq = Rational64::zero();
        for i in 0..n {
            for j in 0..n {
                theta_sq += raw_form(i, j) * highest.0[i] * highest.0[j];
            }
        }
        let scale = Rational64::from(2) / theta_sq;
        let form: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| raw_form(i, j) * scale).collect())
            .collect();

        let coroot_scale = (0..n)
            .map(|i| {
                let m = Rational64::from(2) / form[i][i];
                if !m.is_integer() {
                    return Err(Error::Internal("non-integral coroot scale".into()));
                }
                Ok(m.to_integer())
            })
            .collect::<Result<Vec<_>>>()?;

        let index: HashMap<Vec<i64>, usize> = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();
        let table = |op: fn(&[i64], &[i64]) -> Vec<i64>| -> Vec<Vec<Option<usize>>> {
            positive
                .iter()
                .map(|a| {
                    positive
                        .iter()
                        .map(|b| index.get(&op(&a.0, &b.0)).copied())
                        .collect()
                })
                .collect()
        };
        let pos_sum = table(add_vec);
        let pos_diff = table(sub_vec);

        let rs = RootSystem {
            kind,
            cartan,
            form,
            positive,
            index,
            highest,
            coroot_scale,
            pos_sum,
            pos_diff,
        };
        rs.check_cartan_round_trip()?;
        Ok(Arc::new(rs))
    }

    fn check_cartan_round_trip(&self) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                let v = Rational64::from(2) * self.form[i][j] / self.form[j][j];
                if v != Rational64::from(self.cartan[i][j]) {
                    return Err(Error::Internal(format!("Cartan entry ({i},{j}) mismatch")));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn family(&self) -> Family {
        self.kind.family()
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    /// `cartan()[i][j] = <α_i, α_j^∨>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix `(α_i, α_j)`.
    pub fn form(&self) -> &[Vec<Rational64>] {
        &self.form
    }

    /// Positive roots, ordered by height and then by decreasing coefficient vector.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    /// `α_i^∨ = coroot_scale()[i] · α_i`.
    pub fn coroot_scale(&self) -> &[i64] {
        &self.coroot_scale
    }

    /// Index of `β_i + β_j` when it is a (necessarily positive) root.
    pub fn positive_sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.pos_sum[i][j]
    }

    /// Index of `β_i - β_j` when it is a positive root.
    pub fn positive_difference_index(&self, i: usize, j: usize) -> Option<usize> {
        self.pos_diff[i][j]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Root(v)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    pub fn contains(&self, coeffs: &[i64]) -> bool {
        if coeffs.len() != self.rank() {
            return false;
        }
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// Validated constructor for a root.
    pub fn root(&self, coeffs: &[i64]) -> Result<Root> {
        if self.contains(coeffs) {
            Ok(Root(coeffs.to_vec()))
        } else {
            Err(Error::NotARoot {
                system: self.kind.to_string(),
                coeffs: coeffs.to_vec(),
            })
        }
    }

    pub fn positive_root(&self, coeffs: &[i64]) -> Result<Root> {
        if self.index.contains_key(coeffs) {
            Ok(Root(coeffs.to_vec()))
        } else {
            Err(Error::NotAPositiveRoot {
                system: self.kind.to_string(),
                coeffs: coeffs.to_vec(),
            })
        }
    }

    /// All roots: positives in order, followed by their negatives.
    pub fn all_roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(Root::neg))
    }

    /// `a + b` if it is a root.
    pub fn sum(&self, a: &Root, b: &Root) -> Option<Root> {
        let v = add_vec(&a.0, &b.0);
        self.contains(&v).then(|| Root(v))
    }

    /// `a - b` if it is a root.
    pub fn difference(&self, a: &Root, b: &Root) -> Option<Root> {
        let v = sub_vec(&a.0, &b.0);
        self.contains(&v).then(|| Root(v))
    }

    /// Invariant form on integer vectors over the simple roots.
    pub fn inner_product_vec(&self, x: &[i64], y: &[i64]) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc += self.form[i][j] * (xi * yj);
                }
            }
        }
        acc
    }

    pub fn inner_product(&self, x: &Root, y: &Root) -> Rational64 {
        self.inner_product_vec(&x.0, &y.0)
    }

    /// `<x, α_i^∨>` for an integer vector `x`.
    pub fn coroot_pairing(&self, x: &[i64], i: usize) -> i64 {
        x.iter().enumerate().map(|(k, &c)| c * self.cartan[k][i]).sum()
    }

    /// `s_mirror(x) = x - (2(mirror, x)/(mirror, mirror)) mirror`.
    pub fn reflect(&self, mirror: &Root, x: &Root) -> Result<Root> {
        if !self.contains(&mirror.0) {
            return Err(Error::NotARoot {
                system: self.kind.to_string(),
                coeffs: mirror.0.clone(),
            });
        }
        let v = self.reflect_vec(mirror, &x.0);
        Ok(Root(v))
    }

    pub(crate) fn reflect_vec(&self, mirror: &Root, x: &[i64]) -> Vec<i64> {
        let c = Rational64::from(2) * self.inner_product_vec(&mirror.0, x)
            / self.inner_product(mirror, mirror);
        assert!(c.is_integer(), "non-integral reflection coefficient");
        let c = c.to_integer();
        x.iter().zip(&mirror.0).map(|(a, m)| a - c * m).collect()
    }

    /// Display name of a root. G2 roots use the names α1..α6 with α1 short
    /// simple and α6 long simple; other systems use `α1+2α2`-style sums.
    pub fn root_label(&self, r: &Root) -> String {
        if self.family() == Family::G {
            let names: [(&[i64], &str); 6] = [
                (&[1, 0], "α1"),
                (&[1, 1], "α2"),
                (&[2, 1], "α3"),
                (&[3, 1], "α4"),
                (&[3, 2], "α5"),
                (&[0, 1], "α6"),
            ];
            for (c, name) in names {
                if r.0 == c {
                    return name.to_string();
                }
                if r.0.iter().zip(c).all(|(a, b)| *a == -b) {
                    return format!("-{name}");
                }
            }
        }
        let sign = if r.is_negative() { "-" } else { "" };
        let terms: Vec<String> = r
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let c = c.abs();
                if c == 1 {
                    format!("α{}", i + 1)
                } else {
                    format!("{c}α{}", i + 1)
                }
            })
            .collect();
        if sign.is_empty() {
            terms.join("+")
        } else {
            format!("-({})", terms.join("+"))
        }
    }

    /// Name of the simple root with index `i` (0-based).
    pub fn simple_label(&self, i: usize) -> String {
        self.root_label(&self.simple_root(i))
    }
}

/// Closure of the simple roots under simple reflections.
fn generate_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|k| r[k] * cartan[k][i]).sum();
            let mut s = r.clone();
            s[i] -= p;
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(code: &str) -> Arc<RootSystem> {
        RootSystem::build(code.parse().unwrap()).unwrap()
    }

    fn r(v: &[i64]) -> Root {
        Root(v.to_vec())
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=7 {
            assert_eq!(rs(&format!("A{n}")).num_positive(), n * (n + 1) / 2);
        }
        for n in 2..=4 {
            assert_eq!(rs(&format!("B{n}")).num_positive(), n * n);
        }
        assert_eq!(rs("G2").num_positive(), 6);
    }

    #[test]
    fn a2_roots_in_order() {
        let a2 = rs("A2");
        let got: Vec<_> = a2.positive_roots().iter().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_roots_match_names() {
        let g2 = rs("G2");
        for v in [[1, 0], [1, 1], [2, 1], [3, 1], [3, 2], [0, 1]] {
            assert!(g2.positive_index(&r(&v)).is_some(), "{v:?}");
        }
        assert_eq!(g2.highest_root(), &r(&[3, 2]));
        assert_eq!(g2.root_label(&r(&[3, 1])), "α4");
        assert_eq!(g2.root_label(&r(&[-1, -1])), "-α2");
    }

    #[test]
    fn normalization_and_form_values() {
        for code in ["A1", "A3", "B2", "B3", "B4", "G2"] {
            let s = rs(code);
            let t = s.highest_root().clone();
            assert_eq!(s.inner_product(&t, &t), Rational64::from(2), "{code}");
        }
        let g2 = rs("G2");
        assert_eq!(g2.inner_product(&r(&[1, 0]), &r(&[1, 0])), Rational64::new(2, 3));
        let a2 = rs("A2");
        assert_eq!(a2.inner_product(&r(&[1, 0]), &r(&[0, 1])), Rational64::from(-1));
    }

    #[test]
    fn g2_reflections() {
        let g2 = rs("G2");
        assert_eq!(g2.reflect(&r(&[1, 0]), &r(&[0, 1])).unwrap(), r(&[3, 1]));
        assert_eq!(g2.reflect(&r(&[0, 1]), &r(&[3, 1])).unwrap(), r(&[3, 2]));
        let a = r(&[2, 1]);
        assert_eq!(g2.reflect(&a, &a).unwrap(), a.neg());
        assert!(g2.reflect(&r(&[1, 2]), &a).is_err());
    }

    #[test]
    fn closed_under_reflections_and_signed() {
        for code in ["A4", "B3", "B4", "G2"] {
            let s = rs(code);
            let all: Vec<Root> = s.all_roots().collect();
            assert_eq!(all.len(), 2 * s.num_positive());
            for b in &all {
                assert!(b.is_positive() ^ b.is_negative());
                for a in s.simple_roots() {
                    let img = s.reflect(&a, b).unwrap();
                    assert!(s.contains(img.coeffs()), "{code}: s_{a}({b})");
                }
            }
        }
    }

    #[test]
    fn highest_root_dominates() {
        for code in ["A5", "B3", "G2"] {
            let s = rs(code);
            let t = s.highest_root();
            for b in s.positive_roots() {
                assert!(t.coeffs().iter().zip(b.coeffs()).all(|(x, y)| x >= y));
            }
        }
    }

    #[test]
    fn unsupported_kinds() {
        assert!("G3".parse::<RootSystemKind>().is_err());
        assert!("A0".parse::<RootSystemKind>().is_err());
        assert!("C3".parse::<RootSystemKind>().is_err());
        let b1 = RootSystemKind::new(Family::B, 1).unwrap();
        assert!(matches!(RootSystem::build(b1), Err(Error::UnsupportedRootSystem(_))));
        assert!(RootSystem::build("A8".parse().unwrap()).is_err());
    }

    #[test]
    fn validated_constructor() {
        let b3 = rs("B3");
        assert!(b3.root(&[0, 1, 2]).is_ok());
        assert!(b3.root(&[0, -1, -2]).is_ok());
        assert!(b3.root(&[0, 2, 1]).is_err());
        assert!(b3.positive_root(&[0, -1, 0]).is_err());
    }
}
