//! Partial rankings and the rook monoid `R_n`.
//!
//! A [`PartialRanking`] is an injective partial function on `{1..n}`. Points
//! are 1-based everywhere. Maps act on the left and compose right-to-left:
//! `s.compose(&t)` is `x ↦ s(t(x))`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ambient size representable by [`Subset`].
pub const MAX_N: usize = 32;

/// A subset of `{1..32}` stored as a bitmask.
///
/// Ordering is lexicographic on the ascending element lists, so
/// `{1,2,3} < {1,2,4} < {1,3,4}` and `{1,2} < {1,2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{1..k}`.
    pub fn initial(k: usize) -> Self {
        assert!(k <= MAX_N);
        if k == MAX_N {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << k) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u32;
        for x in elements {
            if x == 0 || x > MAX_N {
                return Err(Error::OutOfRange { value: x, n: MAX_N });
            }
            bits |= 1 << (x - 1);
        }
        Ok(Subset(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x >= 1 && x <= MAX_N && self.0 & (1 << (x - 1)) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// The largest element, or 0 for the empty set.
    pub fn max_element(self) -> usize {
        (32 - self.0.leading_zeros()) as usize
    }

    /// Elements in ascending order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based position of `x` among the elements, if present.
    pub fn position(self, x: usize) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let below = self.0 & ((1u32 << (x - 1)) - 1);
        Some(below.count_ones() as usize + 1)
    }

    /// The `p`-th smallest element (1-based `p`).
    pub fn nth(self, p: usize) -> Option<usize> {
        if p == 0 {
            return None;
        }
        self.iter().nth(p - 1)
    }

    /// All subsets of `self`, each exactly once.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        // Standard submask walk, starting from the full mask.
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(Subset(cur))
        })
    }

    /// The `k`-element subsets of `{1..n}` in lexicographic order.
    pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
        fn go(start: usize, n: usize, left: usize, acc: u32, out: &mut Vec<Subset>) {
            if left == 0 {
                out.push(Subset(acc));
                return;
            }
            for x in start..=n {
                if n - x + 1 < left {
                    break;
                }
                go(x + 1, n, left - 1, acc | (1 << (x - 1)), out);
            }
        }
        let mut out = Vec::new();
        if k <= n {
            go(1, n, k, 0, &mut out);
        }
        out
    }

    /// Comma-separated elements without braces, e.g. `1,4,5`.
    pub fn label(self) -> String {
        self.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label())
    }
}

pub struct SubsetIter(u32);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }
}

/// A permutation of `{1..k}`, stored as its image list.
///
/// The derived ordering is lexicographic on the image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((1..=k as u8).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        if k > MAX_N {
            return Err(Error::UnsupportedSize(k));
        }
        let mut seen = 0u64;
        for &x in &images {
            if x == 0 || x > k {
                return Err(Error::OutOfRange { value: x, n: k });
            }
            if seen & (1 << x) != 0 {
                return Err(Error::NotInjective(x));
            }
            seen |= 1 << x;
        }
        Ok(Permutation(images.into_iter().map(|x| x as u8).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation(other.0.iter().map(|&x| self.0[x as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// Cycle lengths, sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut lengths = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize - 1;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Index of this permutation in the lexicographic listing of `S_k`.
    pub fn lex_index(&self) -> usize {
        let k = self.degree();
        let mut index = 0;
        for i in 0..k {
            let smaller = self.0[i + 1..].iter().filter(|&&y| y < self.0[i]).count();
            index = index * (k - i) + smaller;
        }
        index
    }

    /// Inverse of [`Permutation::lex_index`].
    pub fn from_lex_index(k: usize, mut index: usize) -> Permutation {
        let mut digits = vec![0usize; k];
        for i in (0..k).rev() {
            let base = k - i;
            digits[i] = index % base;
            index /= base;
        }
        let mut pool: Vec<u8> = (1..=k as u8).collect();
        Permutation(digits.into_iter().map(|d| pool.remove(d)).collect())
    }

    /// All of `S_k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        (0..factorial(k)).map(|i| Permutation::from_lex_index(k, i)).collect()
    }

    /// The copy of this permutation in `R_n` acting on `{1..k}`.
    pub fn to_ranking(&self, n: usize) -> Result<PartialRanking> {
        PartialRanking::from_pairs(n, self.images().enumerate().map(|(i, x)| (i + 1, x)))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// An injective partial function on `{1..n}`.
///
/// The ordering is the canonical enumeration order: by rank, then domain,
/// then range, then permutation type (equivalently, the images read along
/// the domain).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialRanking {
    // images[i] is the image of i+1, 0 when undefined.
    images: Vec<u8>,
    dom: Subset,
    ran: Subset,
}

impl PartialRanking {
    /// Builds a ranking from `images[i] = σ(i+1)`.
    pub fn new(images: &[Option<usize>]) -> Result<Self> {
        let n = images.len();
        Self::from_pairs(
            n,
            images
                .iter()
                .enumerate()
                .filter_map(|(i, x)| x.map(|x| (i + 1, x))),
        )
    }

    /// Builds a ranking in `R_n` from `(point, image)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::UnsupportedSize(n));
        }
        let mut images = vec![0u8; n];
        let mut dom = 0u32;
        let mut ran = 0u32;
        for (x, y) in pairs {
            if x == 0 || x > n {
                return Err(Error::OutOfRange { value: x, n });
            }
            if y == 0 || y > n {
                return Err(Error::OutOfRange { value: y, n });
            }
            if dom & (1 << (x - 1)) != 0 {
                return Err(Error::NotInjective(x));
            }
            if ran & (1 << (y - 1)) != 0 {
                return Err(Error::NotInjective(y));
            }
            dom |= 1 << (x - 1);
            ran |= 1 << (y - 1);
            images[x - 1] = y as u8;
        }
        Ok(PartialRanking {
            images,
            dom: Subset(dom),
            ran: Subset(ran),
        })
    }

    /// The null map of `R_n`.
    pub fn null(n: usize) -> Self {
        assert!(n <= MAX_N);
        PartialRanking {
            images: vec![0; n],
            dom: Subset::EMPTY,
            ran: Subset::EMPTY,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::partial_identity(n, Subset::initial(n))
    }

    /// The idempotent fixing exactly the points of `set`.
    pub fn partial_identity(n: usize, set: Subset) -> Self {
        assert!(n <= MAX_N && set.max_element() <= n);
        let mut images = vec![0u8; n];
        for x in set.iter() {
            images[x - 1] = x as u8;
        }
        PartialRanking {
            images,
            dom: set,
            ran: set,
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn rank(&self) -> usize {
        self.dom.len()
    }

    pub fn domain(&self) -> Subset {
        self.dom
    }

    pub fn range(&self) -> Subset {
        self.ran
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        match self.images.get(x.wrapping_sub(1)) {
            Some(&y) if y != 0 => Some(y as usize),
            _ => None,
        }
    }

    /// `(point, image)` pairs in increasing point order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dom.iter().map(move |x| (x, self.images[x - 1] as usize))
    }

    pub fn is_idempotent(&self) -> bool {
        self.pairs().all(|(x, y)| x == y)
    }

    /// `(self ∘ t)(x) = self(t(x))`, defined where both steps are.
    pub fn compose(&self, t: &PartialRanking) -> Result<PartialRanking> {
        if self.n() != t.n() {
            return Err(Error::SizeMismatch(self.n(), t.n()));
        }
        Ok(self.compose_unchecked(t))
    }

    pub(crate) fn compose_unchecked(&self, t: &PartialRanking) -> PartialRanking {
        let mut images = vec![0u8; self.n()];
        let mut dom = 0u32;
        let mut ran = 0u32;
        for (x, y) in t.pairs() {
            let z = self.images[y - 1];
            if z != 0 {
                images[x - 1] = z;
                dom |= 1 << (x - 1);
                ran |= 1 << (z - 1);
            }
        }
        PartialRanking {
            images,
            dom: Subset(dom),
            ran: Subset(ran),
        }
    }

    pub fn inverse(&self) -> PartialRanking {
        let mut images = vec![0u8; self.n()];
        for (x, y) in self.pairs() {
            images[y - 1] = x as u8;
        }
        PartialRanking {
            images,
            dom: self.ran,
            ran: self.dom,
        }
    }

    /// Natural partial order: `self ≤ s` iff `s` extends `self`.
    ///
    /// Rankings of different ambient sizes are never comparable.
    pub fn leq(&self, s: &PartialRanking) -> bool {
        self.n() == s.n()
            && self.dom.is_subset_of(s.dom)
            && self.pairs().all(|(x, y)| s.images[x - 1] as usize == y)
    }

    /// The restriction of `self` to the points of `set ∩ dom`.
    pub fn restrict(&self, set: Subset) -> PartialRanking {
        let keep = Subset(self.dom.0 & set.0);
        let mut images = vec![0u8; self.n()];
        let mut ran = 0u32;
        for x in keep.iter() {
            let y = self.images[x - 1];
            images[x - 1] = y;
            ran |= 1 << (y - 1);
        }
        PartialRanking {
            images,
            dom: keep,
            ran: Subset(ran),
        }
    }

    /// Every `t ≤ self`, i.e. every restriction, including `self` and the
    /// null map.
    pub fn restrictions(&self) -> impl Iterator<Item = PartialRanking> + '_ {
        self.dom.subsets().map(move |d| self.restrict(d))
    }

    /// Every permutation `t ∈ S_n` with `t ≥ self`.
    pub fn full_extensions(&self) -> Vec<PartialRanking> {
        let n = self.n();
        let free_dom: Vec<usize> = Subset::initial(n).difference(self.dom).to_vec();
        let free_ran: Vec<usize> = Subset::initial(n).difference(self.ran).to_vec();
        Permutation::all(free_dom.len())
            .into_iter()
            .map(|p| {
                let mut images = self.images.clone();
                for (i, &x) in free_dom.iter().enumerate() {
                    images[x - 1] = free_ran[p.apply(i + 1) - 1] as u8;
                }
                PartialRanking {
                    images,
                    dom: Subset::initial(n),
                    ran: Subset::initial(n),
                }
            })
            .collect()
    }

    /// The permutation of `{1..k}` recording how the `i`-th smallest point
    /// of the domain lands on the `j`-th smallest point of the range.
    ///
    /// Equal to `p_ran⁻¹ ∘ self ∘ p_dom` read inside `S_k`.
    pub fn perm_type(&self) -> Permutation {
        Permutation(
            self.pairs()
                .map(|(_, y)| self.ran.position(y).unwrap() as u8)
                .collect(),
        )
    }

    /// The unique ranking with the given domain, range and permutation type,
    /// i.e. `p_range ∘ perm ∘ p_domain⁻¹`.
    pub fn from_perm_type(
        n: usize,
        domain: Subset,
        range: Subset,
        perm: &Permutation,
    ) -> Result<PartialRanking> {
        let k = perm.degree();
        if domain.len() != k {
            return Err(Error::SubsetSize { expected: k, got: domain.len() });
        }
        if range.len() != k {
            return Err(Error::SubsetSize { expected: k, got: range.len() });
        }
        let ran: Vec<usize> = range.to_vec();
        PartialRanking::from_pairs(
            n,
            domain
                .iter()
                .enumerate()
                .map(|(i, x)| (x, ran[perm.apply(i + 1) - 1])),
        )
    }
}

/// Möbius function of the natural partial order on `R_n`:
/// `μ(t, s) = (-1)^(rank s - rank t)` for `t ≤ s`.
pub fn mobius(t: &PartialRanking, s: &PartialRanking) -> Result<i64> {
    if !t.leq(s) {
        return Err(Error::NotComparable(t.to_string(), s.to_string()));
    }
    Ok(if (s.rank() - t.rank()) % 2 == 0 { 1 } else { -1 })
}

/// The order-preserving bijection `p_A` from `{1..k}` onto `A`, as an
/// element of `R_n`.
pub fn order_preserving_bijection(n: usize, k: usize, set: Subset) -> Result<PartialRanking> {
    if set.len() != k {
        return Err(Error::SubsetSize { expected: k, got: set.len() });
    }
    if set.max_element() > n {
        return Err(Error::OutOfRange { value: set.max_element(), n });
    }
    PartialRanking::from_pairs(n, set.iter().enumerate().map(|(i, x)| (i + 1, x)))
}

/// All of `R_n` in canonical order.
pub fn enumerate_rook_monoid(n: usize) -> Vec<PartialRanking> {
    let mut out = Vec::new();
    for k in 0..=n {
        let subsets = Subset::k_subsets(n, k);
        let perms = Permutation::all(k);
        for &d in &subsets {
            for &r in &subsets {
                for p in &perms {
                    out.push(PartialRanking::from_perm_type(n, d, r, p).expect("valid block"));
                }
            }
        }
    }
    out
}

/// The `k!` rankings with domain `d` and range `r`, ordered by permutation type.
pub fn enumerate_block(n: usize, d: Subset, r: Subset) -> Result<Vec<PartialRanking>> {
    if d.len() != r.len() {
        return Err(Error::SubsetSize { expected: d.len(), got: r.len() });
    }
    Permutation::all(d.len())
        .iter()
        .map(|p| PartialRanking::from_perm_type(n, d, r, p))
        .collect()
}

/// `|R_n| = Σ_k C(n,k)² k!`.
pub fn rook_monoid_order(n: usize) -> usize {
    (0..=n).map(|k| binomial(n, k).pow(2) * factorial(k)).sum()
}

impl Ord for PartialRanking {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.dom.cmp(&other.dom))
            .then_with(|| self.ran.cmp(&other.ran))
            .then_with(|| {
                self.pairs()
                    .map(|(_, y)| y)
                    .cmp(other.pairs().map(|(_, y)| y))
            })
            .then_with(|| self.n().cmp(&other.n()))
    }
}

impl PartialOrd for PartialRanking {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartialRanking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .map(|&y| if y == 0 { "-".to_string() } else { y.to_string() })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for PartialRanking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PartialRanking {
    type Err = Error;

    /// Parses the bracket form `[3,-,-,2,1]`; position `i` holds `σ(i)` or `-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: String| Error::Parse { line: 0, message };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad(format!("expected a bracketed list, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(PartialRanking::null(0));
        }
        let mut images = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok == "-" || tok == "−" {
                images.push(None);
            } else {
                let v: usize = tok
                    .parse()
                    .map_err(|_| bad(format!("invalid entry {tok:?}")))?;
                images.push(Some(v));
            }
        }
        PartialRanking::new(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> PartialRanking {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied()).unwrap()
    }

    #[test]
    fn compose_identity_and_disjoint() {
        let t = r("[-,5,-,1,2]");
        assert_eq!(PartialRanking::identity(5).compose(&t).unwrap(), t);
        // ran(u) = {1,3} misses dom(t) = {2,4,5}.
        let u = r("[1,-,3,-,-]");
        assert_eq!(t.compose(&u).unwrap(), PartialRanking::null(5));
    }

    #[test]
    fn compose_size_mismatch() {
        assert_eq!(
            r("[1,2]").compose(&r("[1,2,3]")),
            Err(Error::SizeMismatch(2, 3))
        );
    }

    #[test]
    fn relabel_example_from_section_4_1_style_data() {
        let sigma = r("[-,5,-,1,2]");
        let pd = order_preserving_bijection(5, 3, set(&[2, 4, 5])).unwrap();
        let pr = order_preserving_bijection(5, 3, set(&[1, 2, 5])).unwrap();
        let relabeled = pr.inverse().compose(&sigma).unwrap().compose(&pd).unwrap();
        assert_eq!(relabeled, r("[3,1,2,-,-]"));
        assert_eq!(sigma.perm_type(), Permutation::new(vec![3, 1, 2]).unwrap());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(PartialRanking::null(4).inverse(), PartialRanking::null(4));
        assert_eq!(PartialRanking::identity(4).inverse(), PartialRanking::identity(4));
        assert_eq!(r("[-,5,-,1,2]").inverse(), r("[4,5,-,-,2]"));
    }

    #[test]
    fn leq_examples() {
        let s = r("[3,5,4,1,2]");
        assert!(PartialRanking::null(5).leq(&s));
        assert!(s.leq(&s));
        assert!(r("[-,5,-,1,2]").leq(&s));
        assert!(!r("[-,5,-,1,2]").leq(&r("[3,5,4,2,1]")));
    }

    #[test]
    fn mobius_examples() {
        let s = r("[3,5,4,1,2]");
        assert_eq!(mobius(&s, &s), Ok(1));
        assert_eq!(mobius(&r("[-,5,4,1,2]"), &s), Ok(-1));
        assert_eq!(mobius(&r("[-,-,4,1,2]"), &s), Ok(1));
        assert!(matches!(
            mobius(&r("[-,5,-,1,2]"), &r("[3,5,4,2,1]")),
            Err(Error::NotComparable(..))
        ));
    }

    #[test]
    fn order_preserving_examples() {
        assert_eq!(
            order_preserving_bijection(5, 3, set(&[1, 2, 3])).unwrap(),
            r("[1,2,3,-,-]")
        );
        let p = order_preserving_bijection(5, 3, set(&[2, 4, 5])).unwrap();
        assert_eq!((p.get(1), p.get(2), p.get(3)), (Some(2), Some(4), Some(5)));
        assert_eq!(
            order_preserving_bijection(5, 0, Subset::EMPTY).unwrap(),
            PartialRanking::null(5)
        );
        assert_eq!(
            order_preserving_bijection(5, 2, set(&[1, 2, 3])),
            Err(Error::SubsetSize { expected: 2, got: 3 })
        );
    }

    #[test]
    fn perm_type_examples() {
        assert_eq!(r("[4,-,1,2]").perm_type(), Permutation::new(vec![3, 1, 2]).unwrap());
        let e = PartialRanking::partial_identity(5, set(&[1, 3, 4]));
        assert!(e.perm_type().is_identity());
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(enumerate_rook_monoid(1).len(), 2);
        assert_eq!(enumerate_rook_monoid(2).len(), 7);
        assert_eq!(enumerate_rook_monoid(5).len(), 1546);
        assert_eq!(rook_monoid_order(5), 1546);
        let all = enumerate_rook_monoid(3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let block = enumerate_block(5, set(&[1, 4, 5]), set(&[1, 2, 3])).unwrap();
        assert_eq!(block.len(), 6);
        assert!(enumerate_block(5, set(&[1]), set(&[1, 2])).is_err());
    }

    #[test]
    fn k_subsets_are_lexicographic() {
        let subs = Subset::k_subsets(5, 3);
        assert_eq!(subs.len(), 10);
        assert_eq!(subs[0].to_vec(), vec![1, 2, 3]);
        assert_eq!(subs[1].to_vec(), vec![1, 2, 4]);
        assert_eq!(subs[9].to_vec(), vec![3, 4, 5]);
        assert_eq!(Subset::k_subsets(3, 0), vec![Subset::EMPTY]);
    }

    #[test]
    fn lex_index_roundtrip() {
        for k in 0..=5 {
            for (i, p) in Permutation::all(k).iter().enumerate() {
                assert_eq!(p.lex_index(), i);
            }
        }
        let all = Permutation::all(4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_and_display() {
        let s = r("[3,-,-,2,1]");
        assert_eq!((s.get(1), s.get(4), s.get(5)), (Some(3), Some(2), Some(1)));
        assert_eq!(s.to_string(), "[3,-,-,2,1]");
        assert_eq!("[1,1,-]".parse::<PartialRanking>(), Err(Error::NotInjective(1)));
        assert!("[6,-,-]".parse::<PartialRanking>().is_err());
        assert!("3,-".parse::<PartialRanking>().is_err());
    }

    #[test]
    fn full_extensions_count() {
        let s = r("[3,-,-,2,1]");
        let ext = s.full_extensions();
        assert_eq!(ext.len(), 2);
        assert!(ext.iter().all(|t| s.leq(t) && t.rank() == 5));
    }
}
