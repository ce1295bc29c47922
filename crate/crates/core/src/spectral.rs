//! Spectral analysis of partially ranked data on `R_n`.
//!
//! A [`Dataset`] is embedded in `ℚR_n` either as `Σ f(σ)⌊σ⌋` (groupoid
//! association) or as `Σ f(σ)σ` (semigroup association), projected onto every
//! isotypic component `V^λ`, and each projection is paired with the
//! interpretable functions of the matching order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{coefficient_dot, isotypic_project_rook, AlgebraElement, Basis};
use crate::error::{Error, Result};
use crate::rook::{binomial, enumerate_block, PartialRanking, Subset, MAX_N};
use crate::symmetric::{partitions, Cell, Flavor, GroupAlgebraElement, IntegerPartition};
use crate::Rational;

/// How ballot counts become an element of `ℚR_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Association {
    Groupoid,
    Semigroup,
}

impl Association {
    pub fn basis(self) -> Basis {
        match self {
            Association::Groupoid => Basis::Groupoid,
            Association::Semigroup => Basis::Semigroup,
        }
    }
}

impl fmt::Display for Association {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Association::Groupoid => "groupoid",
            Association::Semigroup => "semigroup",
        })
    }
}

impl FromStr for Association {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "groupoid" => Ok(Association::Groupoid),
            "semigroup" => Ok(Association::Semigroup),
            other => Err(Error::Config(format!("unknown association {other:?} (groupoid|semigroup)"))),
        }
    }
}

/// Inner product used to pair projections with interpretable functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerProduct {
    Groupoid,
    Natural,
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnerProduct::Groupoid => "groupoid",
            InnerProduct::Natural => "natural",
        })
    }
}

impl FromStr for InnerProduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "groupoid" => Ok(InnerProduct::Groupoid),
            "natural" => Ok(InnerProduct::Natural),
            other => Err(Error::Config(format!("unknown inner product {other:?} (groupoid|natural)"))),
        }
    }
}

/// Ballot counts: a function `R_n → ℕ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    n: usize,
    counts: BTreeMap<PartialRanking, u64>,
}

impl Dataset {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::UnsupportedSize(n));
        }
        Ok(Dataset { n, counts: BTreeMap::new() })
    }

    pub fn from_counts<I>(n: usize, counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PartialRanking, u64)>,
    {
        let mut out = Self::new(n)?;
        for (s, c) in counts {
            out.add(s, c)?;
        }
        Ok(out)
    }

    /// Adds `count` ballots of type `s`; repeated calls accumulate.
    pub fn add(&mut self, s: PartialRanking, count: u64) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::SizeMismatch(s.n(), self.n));
        }
        if count > 0 {
            *self.counts.entry(s).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: &PartialRanking) -> u64 {
        self.counts.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PartialRanking, u64)> {
        self.counts.iter().map(|(s, &c)| (s, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Ranks with at least one ballot.
    pub fn ranks(&self) -> BTreeSet<usize> {
        self.counts.keys().map(PartialRanking::rank).collect()
    }

    /// The counts as coefficients in the association's basis.
    pub fn to_element(&self, association: Association) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.n,
            association.basis(),
            self.counts.iter().map(|(s, &c)| (s.clone(), Rational::from_integer(c as i64))),
        )
        .expect("dataset rankings share n")
    }

    /// `g(σ) = Σ_{t ≥ σ} f(t)`, the extension-cumulative counts.
    pub fn cumulative_counts(&self) -> BTreeMap<PartialRanking, u64> {
        let mut out: BTreeMap<PartialRanking, u64> = BTreeMap::new();
        for (t, &c) in &self.counts {
            for sigma in t.restrictions() {
                *out.entry(sigma).or_insert(0) += c;
            }
        }
        out
    }
}

/// A 0/1 function on `R_n`: 1 exactly on the `σ` with `dom σ = D`,
/// `ran σ = R` that satisfy the cell condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InterpretableFunction {
    n: usize,
    domain: Subset,
    range: Subset,
    cell: Cell,
}

impl InterpretableFunction {
    pub fn new(n: usize, domain: Subset, range: Subset, cell: Cell) -> Result<Self> {
        if domain.len() != range.len() {
            return Err(Error::SubsetSize { expected: domain.len(), got: range.len() });
        }
        for set in [domain, range] {
            if !set.is_empty() && set.max_element() > n {
                return Err(Error::OutOfRange { value: set.max_element(), n });
            }
        }
        if cell.order() > domain.len() {
            return Err(Error::OrderTooLarge { order: cell.order(), k: domain.len() });
        }
        cell.relabel(domain, range)?;
        Ok(InterpretableFunction { n, domain, range, cell })
    }

    /// Every interpretable function of the given order and flavour on a
    /// block, in the deterministic cell order.
    pub fn all(n: usize, domain: Subset, range: Subset, order: usize, flavor: Flavor) -> Vec<Self> {
        Cell::all(domain, range, order, flavor)
            .into_iter()
            .map(|cell| InterpretableFunction { n, domain, range, cell })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> Subset {
        self.domain
    }

    pub fn range(&self) -> Subset {
        self.range
    }

    pub fn cell(&self) -> &Cell {
        &self.cell
    }

    pub fn rank(&self) -> usize {
        self.domain.len()
    }

    pub fn order(&self) -> usize {
        self.cell.order()
    }

    /// The partition this function is paired with.
    pub fn partition(&self) -> IntegerPartition {
        self.cell.paired_partition(self.rank()).expect("order checked at construction")
    }

    pub fn eval(&self, s: &PartialRanking) -> bool {
        s.n() == self.n
            && s.domain() == self.domain
            && s.range() == self.range
            && self.cell.holds(|i| s.get(i))
    }

    pub fn support(&self) -> Vec<PartialRanking> {
        enumerate_block(self.n, self.domain, self.range)
            .expect("domain and range have equal size")
            .into_iter()
            .filter(|s| self.cell.holds(|i| s.get(i)))
            .collect()
    }

    /// The indicator written in the given basis (`E_S` or `E_G`).
    pub fn to_element(&self, basis: Basis) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.n,
            basis,
            self.support().into_iter().map(|s| (s, Rational::from_integer(1))),
        )
        .expect("support lies in R_n")
    }
}

/// The block of `f` (groupoid basis) with domain `D` and range `R`, moved to
/// `ℚS_k` by permutation type.
pub fn restrict_and_relabel_element(f: &AlgebraElement, domain: Subset, range: Subset) -> Result<GroupAlgebraElement> {
    if domain.len() != range.len() {
        return Err(Error::SubsetSize { expected: domain.len(), got: range.len() });
    }
    let g = f.to_groupoid_basis();
    let mut out = GroupAlgebraElement::zero(domain.len());
    for s in enumerate_block(f.n(), domain, range)? {
        let c = g.get(&s);
        if !c.is_zero() {
            out.add_to(&s.perm_type(), c);
        }
    }
    Ok(out)
}

/// Ballot counts with domain `D` and range `R`, keyed by permutation type.
pub fn restrict_and_relabel(f: &Dataset, domain: Subset, range: Subset) -> Result<GroupAlgebraElement> {
    if domain.len() != range.len() {
        return Err(Error::SubsetSize { expected: domain.len(), got: range.len() });
    }
    let mut out = GroupAlgebraElement::zero(domain.len());
    for (s, c) in f.iter() {
        if s.domain() == domain && s.range() == range {
            out.add_to(&s.perm_type(), Rational::from_integer(c as i64));
        }
    }
    Ok(out)
}

/// Which ranks and orders to report, and with which inner product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub max_order: usize,
    /// `None` reports every rank `0..=n`.
    pub ranks: Option<Vec<usize>>,
    pub inner_product: InnerProduct,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { max_order: 2, ranks: None, inner_product: InnerProduct::Groupoid }
    }
}

/// Extra natural-inner-product quantities for one statistic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalDiagnostics {
    /// `⟨f^λ, E_S⟩_s`; always equal to the groupoid statistic.
    pub projection_vs_semigroup_indicator: Rational,
    /// `⟨f^λ, E_G⟩_s`.
    pub projection_vs_groupoid_indicator: Rational,
    /// `⟨f, E_S^λ⟩_s`.
    pub data_vs_projected_indicator: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellStatistic {
    pub cell: Cell,
    pub partition: IntegerPartition,
    /// `⟨f^λ, E⟩` under the groupoid inner product.
    pub value: Rational,
    pub natural: Option<NaturalDiagnostics>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub domain: Subset,
    pub range: Subset,
    /// Order 0, order 1, then unordered and ordered cells for each higher order.
    pub statistics: Vec<CellStatistic>,
}

impl BlockReport {
    pub fn lookup(&self, cell: &Cell) -> Option<&CellStatistic> {
        self.statistics.iter().find(|s| &s.cell == cell)
    }

    pub fn zeroth(&self) -> Rational {
        self.lookup(&Cell::Block).map_or_else(Rational::zero, |s| s.value)
    }

    /// First-order statistics as an `n × n` matrix (row `i`, column `j`
    /// holds the `i ↦ j` value), zero outside `D × R`.
    pub fn first_order_matrix(&self, n: usize) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); n]; n];
        for stat in &self.statistics {
            if let Cell::Ordered(pairs) = &stat.cell {
                if let [(i, j)] = pairs.as_slice() {
                    out[i - 1][j - 1] = stat.value;
                }
            }
        }
        out
    }

    pub fn of_order(&self, order: usize, flavor: Option<Flavor>) -> impl Iterator<Item = &CellStatistic> {
        self.statistics
            .iter()
            .filter(move |s| s.cell.order() == order && (order < 2 || s.cell.flavor() == flavor))
    }
}

/// `‖f^λ‖²` for one partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionEnergy {
    pub partition: IntegerPartition,
    pub norm_sq: Rational,
    /// `norm_sq / dim V^λ` with `dim V^λ = C(n,k)² d_λ²`.
    pub normalized: Rational,
    /// Share of the rank's energy; `None` when the rank carries none.
    pub fraction: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEnergy {
    pub k: usize,
    /// `‖f_k‖²`, the rank-`k` part in the groupoid basis.
    pub norm_sq: Rational,
    pub partitions: Vec<PartitionEnergy>,
}

impl RankEnergy {
    /// `‖Σ_{λ∈subset} f^λ‖² / ‖f_k‖²`.
    pub fn fraction(&self, subset: &[IntegerPartition]) -> Option<Rational> {
        if self.norm_sq.is_zero() {
            return None;
        }
        let kept: Rational = self
            .partitions
            .iter()
            .filter(|p| subset.contains(&p.partition))
            .map(|p| p.norm_sq)
            .sum();
        Some(kept / self.norm_sq)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub k: usize,
    pub blocks: Vec<BlockReport>,
    pub energy: RankEnergy,
}

impl RankReport {
    pub fn block(&self, domain: Subset, range: Subset) -> Option<&BlockReport> {
        self.blocks.iter().find(|b| b.domain == domain && b.range == range)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralReport {
    pub n: usize,
    pub association: Association,
    pub inner_product: InnerProduct,
    pub max_order: usize,
    pub ranks: Vec<RankReport>,
    /// `‖f‖²` under the groupoid inner product.
    pub norm_sq: Rational,
}

impl SpectralReport {
    pub fn rank(&self, k: usize) -> Option<&RankReport> {
        self.ranks.iter().find(|r| r.k == k)
    }

    pub fn block(&self, domain: Subset, range: Subset) -> Option<&BlockReport> {
        self.rank(domain.len())?.block(domain, range)
    }
}

fn report_ranks(n: usize, options: &AnalysisOptions) -> Result<Vec<usize>> {
    match &options.ranks {
        None => Ok((0..=n).collect()),
        Some(ranks) => {
            let set: BTreeSet<usize> = ranks.iter().copied().collect();
            if let Some(&bad) = set.iter().find(|&&k| k > n) {
                return Err(Error::Config(format!("rank {bad} exceeds n = {n}")));
            }
            Ok(set.into_iter().collect())
        }
    }
}

fn rank_energy(n: usize, k: usize, projections: &HashMap<IntegerPartition, AlgebraElement>, g: &AlgebraElement) -> RankEnergy {
    let norm_sq = g.rank_part(k).norm_sq_groupoid();
    let blocks = Rational::from_integer(binomial(n, k) as i64).pow(2);
    let partitions = partitions(k)
        .into_iter()
        .map(|lambda| {
            let e = projections[&lambda].norm_sq_groupoid();
            let d = Rational::from_integer(lambda.dimension() as i64);
            PartitionEnergy {
                normalized: e / (blocks * d * d),
                fraction: (!norm_sq.is_zero()).then(|| e / norm_sq),
                norm_sq: e,
                partition: lambda,
            }
        })
        .collect();
    RankEnergy { k, norm_sq, partitions }
}

/// Projects `f` (any basis) onto every `V^λ` of the requested ranks and pairs
/// the projections with interpretable functions.
pub fn analyze_element(f: &AlgebraElement, association: Association, options: &AnalysisOptions) -> Result<SpectralReport> {
    let n = f.n();
    let g = f.to_groupoid_basis();
    let f_semigroup = f.to_semigroup_basis();
    let natural = options.inner_product == InnerProduct::Natural;
    let mut ranks = Vec::new();
    for k in report_ranks(n, options)? {
        let mut projections: HashMap<IntegerPartition, AlgebraElement> = HashMap::new();
        for lambda in partitions(k) {
            let p = isotypic_project_rook(&g, &lambda)?;
            projections.insert(lambda, p);
        }
        let semigroup_projections: HashMap<&IntegerPartition, AlgebraElement> = if natural {
            projections.iter().map(|(l, p)| (l, p.to_semigroup_basis())).collect()
        } else {
            HashMap::new()
        };
        let subsets = Subset::k_subsets(n, k);
        let mut blocks = Vec::with_capacity(subsets.len() * subsets.len());
        for &domain in &subsets {
            for &range in &subsets {
                let mut statistics = Vec::new();
                for m in 0..=options.max_order.min(k) {
                    let flavors: &[Flavor] = if m < 2 { &[Flavor::Ordered] } else { &[Flavor::Unordered, Flavor::Ordered] };
                    for &flavor in flavors {
                        for e in InterpretableFunction::all(n, domain, range, m, flavor) {
                            let lambda = e.partition();
                            let projection = &projections[&lambda];
                            let support = e.support();
                            let value: Rational = support.iter().map(|s| projection.get(s)).sum();
                            let diagnostics = if natural {
                                let projection_s = &semigroup_projections[&lambda];
                                let paired: Rational = support.iter().map(|s| projection_s.get(s)).sum();
                                if paired != value {
                                    return Err(Error::RouteMismatch(format!(
                                        "natural and groupoid pairings differ at {} ({domain}, {range}): {paired} vs {value}",
                                        e.cell()
                                    )));
                                }
                                let e_g = e.to_element(Basis::Groupoid);
                                let e_s_lambda = isotypic_project_rook(&e.to_element(Basis::Semigroup), &lambda)?;
                                Some(NaturalDiagnostics {
                                    projection_vs_semigroup_indicator: paired,
                                    projection_vs_groupoid_indicator: coefficient_dot(projection_s, &e_g.to_semigroup_basis()),
                                    data_vs_projected_indicator: coefficient_dot(&f_semigroup, &e_s_lambda.to_semigroup_basis()),
                                })
                            } else {
                                None
                            };
                            statistics.push(CellStatistic {
                                cell: e.cell().clone(),
                                partition: lambda,
                                value,
                                natural: diagnostics,
                            });
                        }
                    }
                }
                blocks.push(BlockReport { domain, range, statistics });
            }
        }
        let energy = rank_energy(n, k, &projections, &g);
        ranks.push(RankReport { k, blocks, energy });
    }
    Ok(SpectralReport {
        n,
        association,
        inner_product: options.inner_product,
        max_order: options.max_order,
        ranks,
        norm_sq: g.norm_sq_groupoid(),
    })
}

/// Analysis under the groupoid association `f ↦ Σ f(σ)⌊σ⌋`.
pub fn analyze_groupoid(f: &Dataset, options: &AnalysisOptions) -> Result<SpectralReport> {
    analyze_element(&f.to_element(Association::Groupoid), Association::Groupoid, options)
}

/// Analysis under the semigroup association `f ↦ Σ f(σ)σ`.
///
/// Computed twice: once as the groupoid analysis of the cumulative counts
/// `g(σ) = Σ_{t ≥ σ} f(t)`, once by projecting the semigroup element
/// directly. The two reports must agree.
pub fn analyze_semigroup(f: &Dataset, options: &AnalysisOptions) -> Result<SpectralReport> {
    let cumulative = AlgebraElement::from_terms(
        f.n(),
        Basis::Groupoid,
        f.cumulative_counts()
            .into_iter()
            .map(|(s, c)| (s, Rational::from_integer(c as i64))),
    )?;
    let via_cumulative = analyze_element(&cumulative, Association::Semigroup, options)?;
    let direct = analyze_element(&f.to_element(Association::Semigroup), Association::Semigroup, options)?;
    if via_cumulative != direct {
        return Err(Error::RouteMismatch(
            "semigroup association: cumulative-count route and direct projection differ".into(),
        ));
    }
    Ok(direct)
}

pub fn analyze(f: &Dataset, association: Association, options: &AnalysisOptions) -> Result<SpectralReport> {
    match association {
        Association::Groupoid => analyze_groupoid(f, options),
        Association::Semigroup => analyze_semigroup(f, options),
    }
}

/// Analysis with statistics paired under the natural inner product, with
/// the extra diagnostics attached to every statistic.
pub fn analyze_natural_ip(f: &Dataset, association: Association, max_order: usize) -> Result<SpectralReport> {
    let options = AnalysisOptions { max_order, ranks: None, inner_product: InnerProduct::Natural };
    analyze(f, association, &options)
}

/// Per-rank norm accounting under the groupoid inner product.
pub fn energy_report(f: &Dataset, association: Association) -> Result<Vec<RankEnergy>> {
    let g = f.to_element(association).to_groupoid_basis();
    (0..=f.n())
        .map(|k| {
            let projections = partitions(k)
                .into_iter()
                .map(|lambda| Ok((lambda.clone(), isotypic_project_rook(&g, &lambda)?)))
                .collect::<Result<HashMap<_, _>>>()?;
            Ok(rank_energy(f.n(), k, &projections, &g))
        })
        .collect()
}
