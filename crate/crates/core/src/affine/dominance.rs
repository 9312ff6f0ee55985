//! Dominant and minimal elements, the ideal ↔ minimal element bijection and
//! the affine descriptions of generators and normalizers.

use std::collections::BTreeSet;

use super::{AffineRoot, AffineWeylElement};
use crate::error::{Error, Result};
use crate::ideals::{GeneratorSet, Ideal};
use crate::rootsys::Root;

impl AffineWeylElement {
    /// `w(α) > 0` for every finite simple root α.
    pub fn is_dominant(&self) -> bool {
        (0..self.rank()).all(|i| {
            self.act(&AffineRoot::new(self.rs.simple_root(i), 0))
                .is_positive()
        })
    }

    /// Dominance read off the inversion set: `N(w) ⊆ ⋃_{k≥1} (kδ − Δ⁺)`.
    pub fn is_dominant_by_inversions(&self) -> bool {
        self.inversion_set()
            .iter()
            .all(|r| r.level() >= 1 && r.finite().is_negative())
    }

    /// Dominant, and every `w⁻¹(α)`, α ∈ Π̂, has level at least −1.
    pub fn is_minimal(&self) -> bool {
        if !self.is_dominant() {
            return false;
        }
        let inv = self.inverse();
        (0..=self.rank()).all(|s| inv.act(&AffineRoot::simple(&self.rs, s)).level() >= -1)
    }

    /// `{μ ∈ Δ⁺ : δ − μ ∈ N(w)}` for dominant `w`.
    pub fn first_layer_ideal(&self) -> Result<Ideal> {
        if !self.is_dominant() {
            return Err(Error::NotDominant);
        }
        let mut mask = 0u64;
        for (i, mu) in self.rs.positive_roots().iter().enumerate() {
            if self.act(&AffineRoot::new(mu.neg(), 1)).is_negative() {
                mask |= 1 << i;
            }
        }
        Ideal::from_mask(&self.rs, mask)
            .map_err(|_| Error::Internal(format!("first layer of {self} is not an ideal")))
    }
}

/// `⋃_{k≥1} (kδ − I^k)`.
pub(crate) fn layered_target(ideal: &Ideal) -> BTreeSet<AffineRoot> {
    let mut target = BTreeSet::new();
    for (k, power) in ideal.powers().iter().enumerate() {
        for beta in power.roots() {
            target.insert(AffineRoot::new(beta.neg(), k as i64 + 1));
        }
    }
    target
}

/// The minimal element `w_I`, whose inversion set is `⋃_{k≥1} (kδ − I^k)`.
///
/// Built by peeling: while the target set is nonempty, pick an affine simple
/// root `α_s` in it, record `s` and replace the set by `s(set ∖ {α_s})`. The
/// recorded letters, read backwards, form a reduced word for `w_I`.
pub fn minimal_element(ideal: &Ideal) -> Result<AffineWeylElement> {
    let rs = ideal.system();
    let target = layered_target(ideal);
    let mut set = target.clone();
    let mut peeled = Vec::with_capacity(set.len());
    while !set.is_empty() {
        let Some(s) = (0..=rs.rank()).find(|&s| set.contains(&AffineRoot::simple(rs, s))) else {
            return Err(Error::Internal(format!(
                "no affine simple root in {} remaining inversions of ideal {ideal}",
                set.len()
            )));
        };
        let refl = AffineWeylElement::simple_reflection(rs, s)?;
        let alpha = AffineRoot::simple(rs, s);
        set = set
            .into_iter()
            .filter(|r| r != &alpha)
            .map(|r| refl.act(&r))
            .collect();
        if set.iter().any(AffineRoot::is_negative) {
            return Err(Error::Internal("peeling produced a negative root".into()));
        }
        peeled.push(s);
    }
    peeled.reverse();
    let w = AffineWeylElement::from_word(rs, &peeled)?;
    if w.inversion_set() != target {
        return Err(Error::Internal(format!("inversion set of {w} differs from target")));
    }
    Ok(w)
}

/// Generators of `I` as the roots α ∈ I with `w_I(α − δ)` an affine simple root.
pub fn generators_via_affine(ideal: &Ideal) -> Result<GeneratorSet> {
    let w = minimal_element(ideal)?;
    let rs = ideal.system();
    let gens: Vec<Root> = ideal
        .roots()
        .into_iter()
        .filter(|a| w.act(&AffineRoot::new(a.clone(), -1)).simple_index(rs).is_some())
        .collect();
    Ok(GeneratorSet::new(gens))
}

/// Indices of simple roots α with `w_I(α)` an affine simple root.
pub fn normalizer_via_affine(ideal: &Ideal) -> Result<Vec<usize>> {
    let w = minimal_element(ideal)?;
    let rs = ideal.system();
    Ok((0..rs.rank())
        .filter(|&i| {
            w.act(&AffineRoot::new(rs.simple_root(i), 0))
                .simple_index(rs)
                .is_some()
        })
        .collect())
}
