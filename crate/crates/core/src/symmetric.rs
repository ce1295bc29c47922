//! The symmetric group `S_k` and its group algebra over the rationals.
//!
//! Characters come from the Murnaghan–Nakayama rule. Isotypic projections
//! use the central idempotent of each irreducible:
//!
//! ```text
//! f^λ = (d_λ / k!) Σ_σ χ_λ(σ⁻¹) σ·f
//! ```
//!
//! Characters of `S_k` are real, so `χ_λ(σ⁻¹) = χ_λ(σ)` is used throughout.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rook::{factorial, PartialRanking, Permutation, Subset};
use crate::Rational;

/// A partition of `k`: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntegerPartition(Vec<usize>);

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(IntegerPartition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition(parts)
    }

    pub fn empty() -> Self {
        IntegerPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `χ_λ(1^k)`, by the hook length formula.
    pub fn dimension(&self) -> usize {
        let k = self.weight();
        let mut hooks: usize = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = self.0[i + 1..].iter().filter(|&&r| r > j).count();
                hooks *= arm + leg + 1;
            }
        }
        factorial(k) / hooks
    }

    /// Beta-set of length `len` (must be at least the number of parts).
    fn beta_set(&self, len: usize) -> Vec<usize> {
        (0..len)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + (len - 1 - i))
            .collect()
    }

    fn from_beta_set(mut beta: Vec<usize>) -> Self {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let len = beta.len();
        IntegerPartition::from_unsorted(
            beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).collect(),
        )
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    /// Accepts `2,1`, `(2,1)` or `()` / `0` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() || inner == "0" {
            return Ok(IntegerPartition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerPartition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for IntegerPartition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        IntegerPartition::new(parts)
    }
}

impl From<IntegerPartition> for Vec<usize> {
    fn from(p: IntegerPartition) -> Self {
        p.0
    }
}

/// All partitions of `k`, in reverse-lexicographic order:
/// `(3), (2,1), (1,1,1)`.
pub fn partitions(k: usize) -> Vec<IntegerPartition> {
    fn go(left: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if left == 0 {
            out.push(IntegerPartition(acc.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            acc.push(p);
            go(left - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

type CharKey = (IntegerPartition, Vec<usize>);

fn character_cache() -> &'static Mutex<HashMap<CharKey, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<CharKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `χ_λ(μ)`: the irreducible character `λ` on the class of cycle type `μ`.
pub fn character(lambda: &IntegerPartition, mu: &IntegerPartition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
    }
    Ok(mn_rule(lambda, mu.parts()))
}

fn mn_rule(lambda: &IntegerPartition, cycles: &[usize]) -> i64 {
    if cycles.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(&v) = character_cache().lock().unwrap().get(&key) {
        return v;
    }
    // Remove a rim hook of length r: move one bead of the beta-set down by r.
    let r = cycles[0];
    let beta = lambda.beta_set(lambda.0.len());
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[idx] = b - r;
        let smaller = IntegerPartition::from_beta_set(next);
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rule(&smaller, &cycles[1..]);
    }
    character_cache().lock().unwrap().insert(key, total);
    total
}

/// Number of permutations of `S_k` with cycle type `mu`.
pub fn class_size(mu: &IntegerPartition) -> usize {
    let k = mu.weight();
    let mut denom = 1usize;
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (&p, &m) in &counts {
        denom *= p.pow(m as u32) * factorial(m);
    }
    factorial(k) / denom
}

/// The character table of `S_k`: rows are irreducibles, columns are
/// conjugacy classes, both in [`partitions`] order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub k: usize,
    pub partitions: Vec<IntegerPartition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(k: usize) -> Self {
        let parts = partitions(k);
        let values = parts
            .iter()
            .map(|l| parts.iter().map(|m| mn_rule(l, m.parts())).collect())
            .collect();
        CharacterTable { k, partitions: parts, values }
    }

    pub fn value(&self, lambda: &IntegerPartition, mu: &IntegerPartition) -> Option<i64> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == mu)?;
        Some(self.values[i][j])
    }
}

/// `S_k` with its multiplication table, indexed by lexicographic rank.
#[derive(Debug)]
pub struct SymmetricGroup {
    k: usize,
    elements: Vec<Permutation>,
    product: Vec<Vec<u32>>,
    inverse: Vec<usize>,
    cycle_types: Vec<IntegerPartition>,
}

impl SymmetricGroup {
    /// A shared, lazily built copy of `S_k`.
    pub fn get(k: usize) -> Arc<SymmetricGroup> {
        static GROUPS: OnceLock<Mutex<HashMap<usize, Arc<SymmetricGroup>>>> = OnceLock::new();
        let groups = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = groups.lock().unwrap();
        guard
            .entry(k)
            .or_insert_with(|| Arc::new(SymmetricGroup::build(k)))
            .clone()
    }

    fn build(k: usize) -> Self {
        let elements = Permutation::all(k);
        let product = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| a.compose(b).lex_index() as u32)
                    .collect()
            })
            .collect();
        let inverse = elements.iter().map(|p| p.inverse().lex_index()).collect();
        let cycle_types = elements
            .iter()
            .map(|p| IntegerPartition(p.cycle_type()))
            .collect();
        SymmetricGroup { k, elements, product, inverse, cycle_types }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Index of `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn cycle_type(&self, a: usize) -> &IntegerPartition {
        &self.cycle_types[a]
    }

    /// `χ_λ` evaluated on every element.
    pub fn character_values(&self, lambda: &IntegerPartition) -> Result<Vec<i64>> {
        if lambda.weight() != self.k {
            return Err(Error::WeightMismatch(lambda.weight(), self.k));
        }
        let mut by_class: HashMap<&IntegerPartition, i64> = HashMap::new();
        Ok(self
            .cycle_types
            .iter()
            .map(|mu| *by_class.entry(mu).or_insert_with(|| mn_rule(lambda, mu.parts())))
            .collect())
    }
}

/// An element of the group algebra `ℚS_k`, stored densely by lexicographic
/// rank of the permutation.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    k: usize,
    coeffs: Vec<Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(k: usize) -> Self {
        GroupAlgebraElement { k, coeffs: vec![Rational::zero(); factorial(k)] }
    }

    /// `c · σ`.
    pub fn basis(sigma: &Permutation, c: Rational) -> Self {
        let mut f = Self::zero(sigma.degree());
        f.add_to(sigma, c);
        f
    }

    pub fn from_dense(k: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), factorial(k), "dense length must be k!");
        GroupAlgebraElement { k, coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Rational)>>(k: usize, terms: I) -> Self {
        let mut f = Self::zero(k);
        for (p, c) in terms {
            f.add_to(&p, c);
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn get(&self, sigma: &Permutation) -> Rational {
        self.coeffs[sigma.lex_index()]
    }

    pub fn add_to(&mut self, sigma: &Permutation, c: Rational) {
        assert_eq!(sigma.degree(), self.k, "permutation degree mismatch");
        self.coeffs[sigma.lex_index()] += c;
    }

    pub fn dense(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Nonzero terms in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Permutation, Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (Permutation::from_lex_index(self.k, i), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn total(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// `Σ_σ f(σ) g(σ)`.
    pub fn inner(&self, other: &GroupAlgebraElement) -> Rational {
        assert_eq!(self.k, other.k);
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.k, other.k);
        GroupAlgebraElement {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: Rational) -> GroupAlgebraElement {
        GroupAlgebraElement { k: self.k, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Convolution in `ℚS_k`.
    pub fn convolve(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.k, other.k);
        let group = SymmetricGroup::get(self.k);
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        for (a, ca) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cb) in other.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out[group.mul(a, b)] += ca * cb;
            }
        }
        GroupAlgebraElement { k: self.k, coeffs: out }
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms()).finish()
    }
}

/// Projection of `f` onto the isotypic component `V^λ` of `ℚS_k`.
pub fn isotypic_project_group(
    f: &GroupAlgebraElement,
    lambda: &IntegerPartition,
) -> Result<GroupAlgebraElement> {
    let group = SymmetricGroup::get(f.k);
    let chi = group.character_values(lambda)?;
    let scale = Rational::new(lambda.dimension() as i64, group.order() as i64);
    let mut out = vec![Rational::zero(); group.order()];
    // (σ·f)(τ) = f(σ⁻¹τ); summing over σ, the term f(ρ) lands on σρ.
    for (rho, c) in f.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (sigma, &x) in chi.iter().enumerate() {
            if x != 0 {
                out[group.mul(sigma, rho)] += c * Rational::from_integer(x);
            }
        }
    }
    for c in &mut out {
        *c *= scale;
    }
    Ok(GroupAlgebraElement { k: f.k, coeffs: out })
}

/// Interpretable-function flavour for order-`m ≥ 2` statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Unordered,
    Ordered,
}

/// The condition of an interpretable function, in the point labels of the
/// block it lives on (`S_k` uses `{1..k}` for both).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    /// Order 0: every element of the block.
    Block,
    /// `σ(i) = j` for every listed pair, pairs sorted by `i`.
    Ordered(Vec<(usize, usize)>),
    /// `σ(from) = to` as sets (order at least 2).
    Unordered { from: Subset, to: Subset },
}

impl Cell {
    /// First-order cell `i ↦ j`.
    pub fn first(i: usize, j: usize) -> Cell {
        Cell::Ordered(vec![(i, j)])
    }

    /// Unordered cell; single points collapse to a first-order cell and the
    /// empty set to [`Cell::Block`].
    pub fn unordered(from: Subset, to: Subset) -> Result<Cell> {
        if from.len() != to.len() {
            return Err(Error::SubsetSize { expected: from.len(), got: to.len() });
        }
        Ok(match from.len() {
            0 => Cell::Block,
            1 => Cell::first(from.nth(1).unwrap(), to.nth(1).unwrap()),
            _ => Cell::Unordered { from, to },
        })
    }

    /// Ordered cell from `(i, j)` pairs; points and images must be distinct.
    pub fn ordered(mut pairs: Vec<(usize, usize)>) -> Result<Cell> {
        pairs.sort_unstable();
        let from = Subset::from_elements(pairs.iter().map(|p| p.0))?;
        let to = Subset::from_elements(pairs.iter().map(|p| p.1))?;
        if from.len() != pairs.len() || to.len() != pairs.len() {
            return Err(Error::CellOutsideBlock(format!("{pairs:?} repeats a point")));
        }
        Ok(if pairs.is_empty() { Cell::Block } else { Cell::Ordered(pairs) })
    }

    pub fn order(&self) -> usize {
        match self {
            Cell::Block => 0,
            Cell::Ordered(p) => p.len(),
            Cell::Unordered { from, .. } => from.len(),
        }
    }

    pub fn flavor(&self) -> Option<Flavor> {
        match self {
            Cell::Block => None,
            Cell::Ordered(p) if p.len() == 1 => None,
            Cell::Ordered(_) => Some(Flavor::Ordered),
            Cell::Unordered { .. } => Some(Flavor::Unordered),
        }
    }

    /// Points the cell constrains.
    pub fn points(&self) -> Subset {
        match self {
            Cell::Block => Subset::EMPTY,
            Cell::Ordered(p) => Subset::from_elements(p.iter().map(|x| x.0)).unwrap(),
            Cell::Unordered { from, .. } => *from,
        }
    }

    /// Images the cell constrains.
    pub fn images(&self) -> Subset {
        match self {
            Cell::Block => Subset::EMPTY,
            Cell::Ordered(p) => Subset::from_elements(p.iter().map(|x| x.1)).unwrap(),
            Cell::Unordered { to, .. } => *to,
        }
    }

    /// Whether a map (given pointwise) satisfies the condition.
    pub fn holds(&self, image: impl Fn(usize) -> Option<usize>) -> bool {
        match self {
            Cell::Block => true,
            Cell::Ordered(pairs) => pairs.iter().all(|&(i, j)| image(i) == Some(j)),
            Cell::Unordered { from, to } => from
                .iter()
                .all(|i| image(i).is_some_and(|j| to.contains(j))),
        }
    }

    /// The partition whose isotypic projection this cell is paired with:
    /// `(k)`, `(k-1,1)`, `(k-m,m)` unordered and `(k-m,1^m)` ordered, with
    /// parts re-sorted and zeros dropped when `m > k - m`.
    pub fn paired_partition(&self, k: usize) -> Result<IntegerPartition> {
        let m = self.order();
        if m > k {
            return Err(Error::OrderTooLarge { order: m, k });
        }
        Ok(match self {
            Cell::Block => IntegerPartition::from_unsorted(vec![k]),
            Cell::Unordered { .. } => IntegerPartition::from_unsorted(vec![k - m, m]),
            Cell::Ordered(_) => {
                let mut parts = vec![k - m];
                parts.extend(std::iter::repeat(1).take(m));
                IntegerPartition::from_unsorted(parts)
            }
        })
    }

    /// Rewrites the cell from block labels `(domain, range)` into `{1..k}`.
    pub fn relabel(&self, domain: Subset, range: Subset) -> Result<Cell> {
        let outside = || Error::CellOutsideBlock(format!("{self} vs ({domain}, {range})"));
        let pos_d = |i: usize| domain.position(i).ok_or_else(outside);
        let pos_r = |j: usize| range.position(j).ok_or_else(outside);
        Ok(match self {
            Cell::Block => Cell::Block,
            Cell::Ordered(pairs) => Cell::Ordered(
                pairs
                    .iter()
                    .map(|&(i, j)| Ok((pos_d(i)?, pos_r(j)?)))
                    .collect::<Result<_>>()?,
            ),
            Cell::Unordered { from, to } => Cell::Unordered {
                from: Subset::from_elements(from.iter().map(pos_d).collect::<Result<Vec<_>>>()?)?,
                to: Subset::from_elements(to.iter().map(pos_r).collect::<Result<Vec<_>>>()?)?,
            },
        })
    }

    /// Every cell of the given order and flavour on a block, in
    /// deterministic order: points lexicographic, then images.
    pub fn all(domain: Subset, range: Subset, order: usize, flavor: Flavor) -> Vec<Cell> {
        let k = domain.len();
        if order > k || range.len() != k {
            return Vec::new();
        }
        let subsets_of = |s: Subset| -> Vec<Subset> {
            let elems = s.to_vec();
            Subset::k_subsets(k, order)
                .into_iter()
                .map(|pos| Subset::from_elements(pos.iter().map(|p| elems[p - 1])).unwrap())
                .collect()
        };
        match order {
            0 => vec![Cell::Block],
            1 => domain
                .iter()
                .flat_map(|i| range.iter().map(move |j| Cell::first(i, j)))
                .collect(),
            _ => {
                let froms = subsets_of(domain);
                let tos = subsets_of(range);
                match flavor {
                    Flavor::Unordered => froms
                        .iter()
                        .flat_map(|&from| tos.iter().map(move |&to| Cell::Unordered { from, to }))
                        .collect(),
                    Flavor::Ordered => {
                        let mut out = Vec::new();
                        for from in froms {
                            let points = from.to_vec();
                            for to in &tos {
                                let imgs = to.to_vec();
                                for p in Permutation::all(order) {
                                    out.push(Cell::Ordered(
                                        points
                                            .iter()
                                            .enumerate()
                                            .map(|(a, &i)| (i, imgs[p.apply(a + 1) - 1]))
                                            .collect(),
                                    ));
                                }
                            }
                        }
                        out
                    }
                }
            }
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Block => write!(f, "*"),
            Cell::Ordered(pairs) => {
                let parts: Vec<String> = pairs.iter().map(|(i, j)| format!("{i}->{j}")).collect();
                write!(f, "{}", parts.join(";"))
            }
            Cell::Unordered { from, to } => write!(f, "{from}->{to}"),
        }
    }
}

/// One paired statistic: `⟨f^λ, δ_cell⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statistic {
    pub cell: Cell,
    pub partition: IntegerPartition,
    pub value: Rational,
}

/// Sum of `g` over the permutations satisfying `cell`.
pub fn indicator_sum(g: &GroupAlgebraElement, cell: &Cell) -> Rational {
    let group = SymmetricGroup::get(g.k);
    group
        .elements()
        .iter()
        .zip(&g.coeffs)
        .filter(|(p, c)| !c.is_zero() && cell.holds(|i| Some(p.apply(i))))
        .map(|(_, c)| *c)
        .sum()
}

/// `⟨f^λ, δ_cell⟩` with `λ` the cell's paired partition.
pub fn interpretable_statistic(f: &GroupAlgebraElement, cell: &Cell) -> Result<Rational> {
    let lambda = cell.paired_partition(f.k)?;
    let projected = isotypic_project_group(f, &lambda)?;
    Ok(indicator_sum(&projected, cell))
}

/// `⟨f^(k-1,1), δ_{i↦j}⟩`.
pub fn first_order_statistic(f: &GroupAlgebraElement, i: usize, j: usize) -> Result<Rational> {
    if f.k == 0 {
        return Err(Error::OrderTooLarge { order: 1, k: 0 });
    }
    if i == 0 || i > f.k || j == 0 || j > f.k {
        return Err(Error::CellOutsideBlock(format!("{i}->{j} in S_{}", f.k)));
    }
    interpretable_statistic(f, &Cell::first(i, j))
}

/// Closed form of [`first_order_statistic`]: `Σ f(σ) w(σ)` with
/// `w = (k-1)/k` when `σ(i) = j` and `-1/k` otherwise.
pub fn first_order_closed_form(f: &GroupAlgebraElement, i: usize, j: usize) -> Rational {
    let k = f.k as i64;
    let hit = Rational::new(k - 1, k);
    let miss = Rational::new(-1, k);
    f.terms()
        .map(|(p, c)| c * if p.apply(i) == j { hit } else { miss })
        .sum()
}

/// Every paired statistic of `f` up to `max_order`: zeroth order, then for
/// each order `m ≥ 1` the unordered cells followed by the ordered ones
/// (order 1 has a single flavour).
pub fn spectral_statistics(f: &GroupAlgebraElement, max_order: usize) -> Result<Vec<Statistic>> {
    let k = f.k;
    let all = Subset::initial(k);
    let mut projections: HashMap<IntegerPartition, GroupAlgebraElement> = HashMap::new();
    let mut out = Vec::new();
    for m in 0..=max_order.min(k) {
        let flavors: &[Flavor] = if m < 2 { &[Flavor::Ordered] } else { &[Flavor::Unordered, Flavor::Ordered] };
        for &flavor in flavors {
            for cell in Cell::all(all, all, m, flavor) {
                let lambda = cell.paired_partition(k)?;
                if !projections.contains_key(&lambda) {
                    projections.insert(lambda.clone(), isotypic_project_group(f, &lambda)?);
                }
                let value = indicator_sum(&projections[&lambda], &cell);
                out.push(Statistic { cell, partition: lambda, value });
            }
        }
    }
    Ok(out)
}

/// Result of the averaging analysis of partially ranked data on `S_n`.
#[derive(Clone, Debug)]
pub struct PartialRankingAnalysis {
    pub n: usize,
    pub k: usize,
    /// The averaged full-ranking data `F`.
    pub averaged: GroupAlgebraElement,
    pub statistics: Vec<Statistic>,
}

impl PartialRankingAnalysis {
    pub fn lookup(&self, cell: &Cell) -> Option<Rational> {
        self.statistics.iter().find(|s| &s.cell == cell).map(|s| s.value)
    }
}

/// Averages rank-`k` rankings with range `{1..k}` over their extensions to
/// `S_n` and analyses the result as fully ranked data:
/// `F = Σ_σ f(σ)/E(σ) Σ_{t ≥ σ} t` with `E(σ) = (n-k)!`.
pub fn diaconis_partial_analysis<I>(counts: I, n: usize, max_order: usize) -> Result<PartialRankingAnalysis>
where
    I: IntoIterator<Item = (PartialRanking, Rational)>,
{
    let mut averaged = GroupAlgebraElement::zero(n);
    let mut rank: Option<usize> = None;
    for (sigma, c) in counts {
        if sigma.n() != n {
            return Err(Error::SizeMismatch(sigma.n(), n));
        }
        let k = sigma.rank();
        if sigma.range() != Subset::initial(k) || rank.is_some_and(|r| r != k) {
            return Err(Error::WrongRange { ranking: sigma.to_string(), k: rank.unwrap_or(k) });
        }
        rank = Some(k);
        let extensions = sigma.full_extensions();
        let share = c / Rational::from_integer(extensions.len() as i64);
        for t in extensions {
            averaged.add_to(&t.perm_type(), share);
        }
    }
    let statistics = spectral_statistics(&averaged, max_order)?;
    Ok(PartialRankingAnalysis { n, k: rank.unwrap_or(n), averaged, statistics })
}
