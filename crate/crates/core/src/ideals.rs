//! Combinatorial ideals of the positive roots: upward-closed subsets of Δ⁺,
//! one for each ad-nilpotent ideal of the Borel subalgebra.
//!
//! An ideal is stored as a bit set over the positive roots, indexed in the
//! order of [`RootSystem::positive_roots`].

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};

/// An upward-closed set of positive roots.
#[derive(Clone)]
pub struct Ideal {
    rs: Arc<RootSystem>,
    members: u64,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.rs.kind() == other.rs.kind() && self.members == other.members
    }
}

impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rs.kind().hash(state);
        self.members.hash(state);
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({}, {})", self.rs.kind(), self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", label_set(&self.rs, &self.roots()))
    }
}

/// Minimal elements of an ideal; they form an antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    roots: Vec<Root>,
}

impl GeneratorSet {
    pub(crate) fn new(mut roots: Vec<Root>) -> Self {
        roots.sort();
        roots.dedup();
        Self { roots }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        json!({
            "system": rs.kind().to_string(),
            "generators": sorted_vectors(&self.roots),
        })
    }
}

/// `{α1, α1+α2}`: labels in root order, or by name for G2.
pub fn label_set(rs: &RootSystem, roots: &[Root]) -> String {
    let mut roots = roots.to_vec();
    roots.sort_by_key(|r| rs.positive_index(r));
    let mut labels: Vec<String> = roots.iter().map(|r| rs.root_label(r)).collect();
    if rs.family() == Family::G {
        labels.sort();
    }
    format!("{{{}}}", labels.join(", "))
}

fn sorted_vectors(roots: &[Root]) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = roots.iter().map(|r| r.coeffs().to_vec()).collect();
    v.sort();
    v
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

/// Checks upward closure: for α in the set and β ∈ Δ⁺ with α + β ∈ Δ,
/// α + β is in the set.
pub fn is_upward_closed(rs: &RootSystem, mask: u64) -> bool {
    let n = rs.num_positive();
    bits(mask).all(|a| {
        (0..n).all(|b| match rs.positive_sum_index(a, b) {
            Some(c) => mask & (1 << c) != 0,
            None => true,
        })
    })
}

impl Ideal {
    /// Wraps a bit set after checking that it is upward closed.
    pub fn from_mask(rs: &Arc<RootSystem>, members: u64) -> Result<Ideal> {
        let n = rs.num_positive();
        if n < 64 && members >> n != 0 {
            return Err(Error::InvalidArgument("mask has bits beyond Δ⁺".into()));
        }
        if !is_upward_closed(rs, members) {
            return Err(Error::InvalidArgument(format!(
                "root set {members:#b} is not an ideal of {}",
                rs.kind()
            )));
        }
        Ok(Ideal {
            rs: Arc::clone(rs),
            members,
        })
    }

    pub(crate) fn from_mask_unchecked(rs: &Arc<RootSystem>, members: u64) -> Ideal {
        debug_assert!(is_upward_closed(rs, members));
        Ideal {
            rs: Arc::clone(rs),
            members,
        }
    }

    /// Builds an ideal from an explicit list of positive roots; the list must
    /// already be upward closed.
    pub fn from_roots(rs: &Arc<RootSystem>, roots: &[Root]) -> Result<Ideal> {
        Self::from_mask(rs, mask_of(rs, roots)?)
    }

    pub fn zero(rs: &Arc<RootSystem>) -> Ideal {
        Ideal {
            rs: Arc::clone(rs),
            members: 0,
        }
    }

    /// The nilradical: all of Δ⁺.
    pub fn maximal(rs: &Arc<RootSystem>) -> Ideal {
        let n = rs.num_positive();
        let members = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ideal {
            rs: Arc::clone(rs),
            members,
        }
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn mask(&self) -> u64 {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.rs
            .positive_index(r)
            .is_some_and(|i| self.contains_index(i))
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.members & (1 << i) != 0
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members & !other.members == 0
    }

    /// Member indices in root order.
    pub fn indices(&self) -> Vec<usize> {
        bits(self.members).collect()
    }

    /// Members in root order.
    pub fn roots(&self) -> Vec<Root> {
        bits(self.members)
            .map(|i| self.rs.positive_roots()[i].clone())
            .collect()
    }

    /// Γ(I): roots α ∈ I with α − β ∉ I for every β ∈ Δ⁺.
    pub fn generators(&self) -> GeneratorSet {
        let n = self.rs.num_positive();
        let gens = bits(self.members)
            .filter(|&a| {
                (0..n).all(|b| match self.rs.positive_difference_index(a, b) {
                    Some(c) => !self.contains_index(c),
                    None => true,
                })
            })
            .map(|a| self.rs.positive_roots()[a].clone())
            .collect();
        GeneratorSet::new(gens)
    }

    /// `{α + β : α ∈ self, β ∈ other, α + β ∈ Δ}`.
    pub fn bracket(&self, other: &Ideal) -> Result<Ideal> {
        if self.rs.kind() != other.rs.kind() {
            return Err(Error::ContextMismatch(
                self.rs.kind().to_string(),
                other.rs.kind().to_string(),
            ));
        }
        let mut out = 0u64;
        for a in bits(self.members) {
            for b in bits(other.members) {
                if let Some(c) = self.rs.positive_sum_index(a, b) {
                    out |= 1 << c;
                }
            }
        }
        if !is_upward_closed(&self.rs, out) {
            return Err(Error::Internal("bracket of ideals is not an ideal".into()));
        }
        Ok(Ideal::from_mask_unchecked(&self.rs, out))
    }

    /// `I^1 = I`, `I^k = [I^{k-1}, I]`.
    pub fn power(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Err(Error::InvalidArgument("ideal power needs k >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            if acc.is_empty() {
                break;
            }
            acc = acc.bracket(self)?;
        }
        Ok(acc)
    }

    /// The nonempty powers `I, I^2, ...` in order.
    pub fn powers(&self) -> Vec<Ideal> {
        let mut out = Vec::new();
        let mut acc = self.clone();
        while !acc.is_empty() {
            let next = acc.bracket(self).expect("same system");
            out.push(acc);
            acc = next;
        }
        out
    }

    /// Indices of the simple roots α whose Levi factor `h + g_α + g_{-α}`
    /// normalizes the ideal: α ∉ I, and β − α ∈ I whenever β ∈ I and
    /// β − α ∈ Δ⁺.
    pub fn normalizer_simple_roots(&self) -> Vec<usize> {
        (0..self.rs.rank())
            .filter(|&i| {
                let alpha = self.rs.simple_root(i);
                let ai = self.rs.positive_index(&alpha).expect("simple root");
                if self.contains_index(ai) {
                    return false;
                }
                bits(self.members).all(|b| match self.rs.positive_difference_index(b, ai) {
                    Some(c) => self.contains_index(c),
                    None => true,
                })
            })
            .collect()
    }

    /// JSON encoding `{"system": "G2", "roots": [[..], ..]}`, vectors sorted.
    pub fn to_json(&self) -> Value {
        json!({
            "system": self.rs.kind().to_string(),
            "roots": sorted_vectors(&self.roots()),
        })
    }
}

fn mask_of(rs: &RootSystem, roots: &[Root]) -> Result<u64> {
    let mut mask = 0u64;
    for r in roots {
        let i = rs.positive_index(r).ok_or_else(|| Error::NotAPositiveRoot {
            system: rs.kind().to_string(),
            coeffs: r.coeffs().to_vec(),
        })?;
        mask |= 1 << i;
    }
    Ok(mask)
}

/// Smallest ideal containing the given positive roots.
pub fn ideal_from_generators(rs: &Arc<RootSystem>, roots: &[Root]) -> Result<Ideal> {
    let mut mask = mask_of(rs, roots)?;
    let n = rs.num_positive();
    // Roots are height-ordered, so one ascending pass closes upward.
    for a in 0..n {
        if mask & (1 << a) != 0 {
            for b in 0..n {
                if let Some(c) = rs.positive_sum_index(a, b) {
                    mask |= 1 << c;
                }
            }
        }
    }
    Ok(Ideal::from_mask_unchecked(rs, mask))
}

/// Ideal given by raw coefficient vectors.
pub fn ideal_from_generator_vectors(rs: &Arc<RootSystem>, vectors: &[Vec<i64>]) -> Result<Ideal> {
    let roots = vectors
        .iter()
        .map(|v| rs.positive_root(v))
        .collect::<Result<Vec<_>>>()?;
    ideal_from_generators(rs, &roots)
}

/// Every ideal exactly once, ordered by size and then lexicographically by
/// sorted member indices.
pub fn enumerate_ideals(rs: &Arc<RootSystem>) -> Vec<Ideal> {
    let n = rs.num_positive();
    // above[i] = roots reachable as β_i + β for some positive β
    let above: Vec<u64> = (0..n)
        .map(|a| {
            (0..n)
                .filter_map(|b| rs.positive_sum_index(a, b))
                .fold(0u64, |m, c| m | (1 << c))
        })
        .collect();

    fn go(idx: usize, mask: u64, above: &[u64], out: &mut Vec<u64>) {
        // roots are visited from the top of the height order down
        let Some(i) = idx.checked_sub(1) else {
            out.push(mask);
            return;
        };
        go(i, mask, above, out);
        if above[i] & !mask == 0 {
            go(i, mask | (1 << i), above, out);
        }
    }

    let mut masks = Vec::new();
    go(n, 0, &above, &mut masks);
    masks.sort_by(|a, b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| bits(*a).cmp(bits(*b)))
    });
    masks
        .into_iter()
        .map(|m| Ideal::from_mask_unchecked(rs, m))
        .collect()
}
