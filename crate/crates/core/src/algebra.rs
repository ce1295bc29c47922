//! The algebra `ℚR_n` in either the semigroup basis `{s}` or the groupoid
//! basis `{⌊s⌋}`, stored sparsely.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rook::{PartialRanking, Subset};
use crate::symmetric::{isotypic_project_group, GroupAlgebraElement, IntegerPartition};
use crate::Rational;

/// Which basis the coefficients of an [`AlgebraElement`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Semigroup,
    Groupoid,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Semigroup => "semigroup",
            Basis::Groupoid => "groupoid",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sparse element of `ℚR_n`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<PartialRanking, Rational>,
}

impl AlgebraElement {
    pub fn zero(n: usize, basis: Basis) -> Self {
        AlgebraElement { n, basis, coeffs: BTreeMap::new() }
    }

    pub fn from_terms<I>(n: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PartialRanking, Rational)>,
    {
        let mut out = Self::zero(n, basis);
        for (s, c) in terms {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    /// The single basis element `s` (or `⌊s⌋`).
    pub fn basis_element(s: PartialRanking, basis: Basis) -> Self {
        let n = s.n();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(s, Rational::from_integer(1));
        AlgebraElement { n, basis, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn get(&self, s: &PartialRanking) -> Rational {
        self.coeffs.get(s).copied().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&PartialRanking, &Rational)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, s: PartialRanking, c: Rational) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::SizeMismatch(s.n(), self.n));
        }
        self.add_unchecked(s, c);
        Ok(())
    }

    fn add_unchecked(&mut self, s: PartialRanking, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(s) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name() });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_unchecked(s.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(-Rational::from_integer(1)))
    }

    pub fn scale(&self, c: Rational) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero(self.n, self.basis);
        }
        AlgebraElement {
            n: self.n,
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(s, x)| (s.clone(), x * c)).collect(),
        }
    }

    /// The part supported on rank-`k` elements, in the same basis.
    pub fn rank_part(&self, k: usize) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(s, _)| s.rank() == k)
                .map(|(s, c)| (s.clone(), *c))
                .collect(),
        }
    }

    /// Groupoid-basis coefficients: `g(σ) = Σ_{t ≥ σ} f(t)`.
    pub fn to_groupoid_basis(&self) -> AlgebraElement {
        match self.basis {
            Basis::Groupoid => self.clone(),
            Basis::Semigroup => {
                let mut out = Self::zero(self.n, Basis::Groupoid);
                for (t, c) in &self.coeffs {
                    for sigma in t.restrictions() {
                        out.add_unchecked(sigma, *c);
                    }
                }
                out
            }
        }
    }

    /// Semigroup-basis coefficients: `f(σ) = Σ_{t ≥ σ} (-1)^{rk t - rk σ} c(t)`.
    pub fn to_semigroup_basis(&self) -> AlgebraElement {
        match self.basis {
            Basis::Semigroup => self.clone(),
            Basis::Groupoid => {
                let mut out = Self::zero(self.n, Basis::Semigroup);
                for (t, c) in &self.coeffs {
                    for sigma in t.restrictions() {
                        let c = if (t.rank() - sigma.rank()) % 2 == 0 { *c } else { -*c };
                        out.add_unchecked(sigma, c);
                    }
                }
                out
            }
        }
    }

    pub fn to_basis(&self, basis: Basis) -> AlgebraElement {
        match basis {
            Basis::Semigroup => self.to_semigroup_basis(),
            Basis::Groupoid => self.to_groupoid_basis(),
        }
    }

    /// Convolution, the bilinear extension of composition. Both operands
    /// must be in the semigroup basis.
    pub fn convolve(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.basis != Basis::Semigroup || other.basis != Basis::Semigroup {
            return Err(Error::BasisMismatch { expected: "semigroup" });
        }
        self.check_compatible(other)?;
        let mut out = Self::zero(self.n, Basis::Semigroup);
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                out.add_unchecked(s.compose_unchecked(t), a * b);
            }
        }
        Ok(out)
    }

    /// Product in the groupoid basis: `⌊s⌋⌊t⌋ = ⌊st⌋` when
    /// `dom(s) = ran(t)`, zero otherwise.
    pub fn multiply_groupoid(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.basis != Basis::Groupoid || other.basis != Basis::Groupoid {
            return Err(Error::BasisMismatch { expected: "groupoid" });
        }
        self.check_compatible(other)?;
        let mut by_range: BTreeMap<Subset, Vec<(&PartialRanking, &Rational)>> = BTreeMap::new();
        for (t, b) in &other.coeffs {
            by_range.entry(t.range()).or_default().push((t, b));
        }
        let mut out = Self::zero(self.n, Basis::Groupoid);
        for (s, a) in &self.coeffs {
            if let Some(matches) = by_range.get(&s.domain()) {
                for (t, b) in matches {
                    out.add_unchecked(s.compose_unchecked(t), a * *b);
                }
            }
        }
        Ok(out)
    }

    /// Squared norm under the groupoid inner product.
    pub fn norm_sq_groupoid(&self) -> Rational {
        let g = self.to_groupoid_basis();
        g.coeffs.values().map(|c| c * c).sum()
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)?;
        f.debug_map().entries(self.coeffs.iter().map(|(s, c)| (s.to_string(), c.to_string()))).finish()
    }
}

/// Coefficientwise dot product; the caller picks the basis.
pub(crate) fn coefficient_dot(f: &AlgebraElement, g: &AlgebraElement) -> Rational {
    let (small, large) = if f.support_len() <= g.support_len() { (f, g) } else { (g, f) };
    small.coeffs.iter().map(|(s, c)| c * large.get(s)).sum()
}

/// Inner product making the groupoid basis orthonormal.
pub fn inner_product_groupoid(f: &AlgebraElement, g: &AlgebraElement) -> Result<Rational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch(f.n, g.n));
    }
    Ok(coefficient_dot(&f.to_groupoid_basis(), &g.to_groupoid_basis()))
}

/// Inner product making the semigroup basis orthonormal.
pub fn inner_product_natural(f: &AlgebraElement, g: &AlgebraElement) -> Result<Rational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch(f.n, g.n));
    }
    Ok(coefficient_dot(&f.to_semigroup_basis(), &g.to_semigroup_basis()))
}

/// The rank-`k` groupoid coefficients of `f` split into `(D, R)` blocks and
/// relabelled into `ℚS_k` by permutation type.
pub fn groupoid_blocks(f: &AlgebraElement, k: usize) -> BTreeMap<(Subset, Subset), GroupAlgebraElement> {
    let g = f.to_groupoid_basis();
    let mut blocks: BTreeMap<(Subset, Subset), GroupAlgebraElement> = BTreeMap::new();
    for (s, c) in g.coeffs.iter().filter(|(s, _)| s.rank() == k) {
        blocks
            .entry((s.domain(), s.range()))
            .or_insert_with(|| GroupAlgebraElement::zero(k))
            .add_to(&s.perm_type(), *c);
    }
    blocks
}

/// Projection of `f` onto the isotypic component `V^λ` of `ℚR_n`, with
/// `λ ⊢ k`. Each `(D, R)` block of rank `k` is projected inside `ℚS_k` and
/// carried back by `x ↦ ⌊p_R x p_D⁻¹⌋`. The result is in the groupoid basis.
pub fn isotypic_project_rook(f: &AlgebraElement, lambda: &IntegerPartition) -> Result<AlgebraElement> {
    let k = lambda.weight();
    if k > f.n {
        return Err(Error::WeightTooLarge { weight: k, n: f.n });
    }
    let mut out = AlgebraElement::zero(f.n, Basis::Groupoid);
    for ((domain, range), block) in groupoid_blocks(f, k) {
        let projected = isotypic_project_group(&block, lambda)?;
        for (perm, c) in projected.terms() {
            out.add_unchecked(PartialRanking::from_perm_type(f.n, domain, range, &perm)?, c);
        }
    }
    Ok(out)
}
