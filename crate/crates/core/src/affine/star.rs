//! Left descent sets, the left star operation, and the alcove picture.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::{AffineRoot, AffineWeylElement};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// Indices `s` with `s·w < w`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DescentSet(Vec<usize>);

impl DescentSet {
    pub fn contains(&self, s: usize) -> bool {
        self.0.contains(&s)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| format!("s{s}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Whether `s_s s_t` has order 3 in the affine Weyl group, read from the
/// affine Cartan entries: `a_st · a_ts = 1`.
pub fn order_is_three(rs: &RootSystem, s: usize, t: usize) -> bool {
    if s == t || s > rs.rank() || t > rs.rank() {
        return false;
    }
    let a = AffineRoot::simple(rs, s);
    let b = AffineRoot::simple(rs, t);
    let ab = rs.inner_product(a.finite(), b.finite());
    let aa = rs.inner_product(a.finite(), a.finite());
    let bb = rs.inner_product(b.finite(), b.finite());
    let prod = Rational64::from(4) * ab * ab / (aa * bb);
    prod == Rational64::one()
}

impl AffineWeylElement {
    /// `L(w) = {s : w⁻¹(α_s) < 0}`.
    pub fn left_descents(&self) -> DescentSet {
        let inv = self.inverse();
        DescentSet(
            (0..=self.rank())
                .filter(|&s| inv.act(&AffineRoot::simple(&self.rs, s)).is_negative())
                .collect(),
        )
    }

    /// Membership in `D_L(s, t)`: exactly one of `s`, `t` is a left descent.
    pub fn in_descent_pair(&self, s: usize, t: usize) -> bool {
        let l = self.left_descents();
        l.contains(s) != l.contains(t)
    }

    /// Left star operation for the pair `(s, t)`.
    ///
    /// Returns `Ok(None)` when `w ∉ D_L(s, t)`; otherwise the unique element
    /// of `{s·w, t·w}` lying in `D_L(s, t)`. Only pairs with `st` of order 3
    /// are accepted.
    pub fn star_left(&self, s: usize, t: usize) -> Result<Option<AffineWeylElement>> {
        let n = self.rank();
        for i in [s, t] {
            if i > n {
                return Err(Error::IndexOutOfRange { index: i, max: n });
            }
        }
        if !order_is_three(&self.rs, s, t) {
            return Err(Error::StarUndefined(s, t));
        }
        if !self.in_descent_pair(s, t) {
            return Ok(None);
        }
        let candidates: Vec<AffineWeylElement> = [s, t]
            .into_iter()
            .map(|i| self.left_multiply(i))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|u| u.in_descent_pair(s, t))
            .collect();
        match <[AffineWeylElement; 1]>::try_from(candidates) {
            Ok([u]) => Ok(Some(u)),
            Err(c) => Err(Error::Internal(format!(
                "star of {self} for (s{s}, s{t}) has {} candidates",
                c.len()
            ))),
        }
    }

    /// All pairs `(s, t)`, `s < t`, of order 3 with `w ∈ D_L(s, t)`.
    pub fn star_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let l = self.left_descents();
        let mut out = Vec::new();
        for s in 0..=n {
            for t in s + 1..=n {
                if order_is_three(&self.rs, s, t) && l.contains(s) != l.contains(t) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// `w⁻¹(x₀)` for the fixed interior point `x₀` of the fundamental alcove,
    /// in simple-root coordinates.
    pub fn interior_point_image(&self) -> Vec<Rational64> {
        let x0 = fundamental_alcove_point(&self.rs);
        // w⁻¹ acts on V by x ↦ u⁻¹(x) − λ
        let n = self.rank();
        let lambda = self.translation_root_coords();
        (0..n)
            .map(|i| {
                let mut acc = Rational64::zero();
                for (j, xj) in x0.iter().enumerate() {
                    acc += *xj * self.finite_inv[i * n + j];
                }
                acc - lambda[i]
            })
            .collect()
    }
}

/// `(x, β)` for a rational point `x` and an integer vector `β`, both in
/// simple-root coordinates.
pub fn pair_point(rs: &RootSystem, x: &[Rational64], beta: &[i64]) -> Rational64 {
    let mut acc = Rational64::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, &bj) in beta.iter().enumerate() {
            if bj != 0 {
                acc += *xi * rs.form()[i][j] * bj;
            }
        }
    }
    acc
}

/// The point `x₀` with `(x₀, α_i) = 1/(2(h₀+1))` for every simple root, where
/// `h₀` is the height of the highest root. It lies strictly inside the
/// fundamental alcove.
pub fn fundamental_alcove_point(rs: &RootSystem) -> Vec<Rational64> {
    let n = rs.rank();
    let h0 = rs.highest_root().height();
    let eps = Rational64::new(1, 2 * (h0 + 1));
    // Solve G x = eps·1 with G the Gram matrix.
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            let mut row = rs.form()[i].clone();
            row.push(eps);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("form is nondegenerate");
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..=n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n]).collect()
}
