#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use rook_spectral::algebra::{AlgebraElement, Basis};
use rook_spectral::rook::{enumerate_rook_monoid, Permutation, Subset};
use rook_spectral::semigroup::{DClassInfo, FiniteInverseSemigroup, MatrixIrrep, RationalMatrix};
use rook_spectral::spectral::restrict_and_relabel_element;
use rook_spectral::symmetric::{spectral_statistics, Cell};
use rook_spectral::{Dataset, IntegerPartition, PartialRanking, Rational};

pub fn q(x: i64) -> Rational {
    Rational::from_integer(x)
}

pub fn set(xs: &[usize]) -> Subset {
    Subset::from_elements(xs.iter().copied()).unwrap()
}

pub fn r(s: &str) -> PartialRanking {
    s.parse().unwrap()
}

pub fn partition(parts: &[usize]) -> IntegerPartition {
    IntegerPartition::new(parts.to_vec()).unwrap()
}

/// A uniformly random element of `R_n`.
pub fn random_ranking(rng: &mut StdRng, n: usize) -> PartialRanking {
    let mut images: Vec<Option<usize>> = vec![None; n];
    let mut free: Vec<usize> = (1..=n).collect();
    for slot in images.iter_mut() {
        // Each point is left out with probability 1/3.
        if rng.gen_range(0..3) > 0 && !free.is_empty() {
            let pick = rng.gen_range(0..free.len());
            *slot = Some(free.swap_remove(pick));
        }
    }
    PartialRanking::new(&images).unwrap()
}

pub fn random_dataset(rng: &mut StdRng, n: usize, ballots: usize) -> Dataset {
    let mut d = Dataset::new(n).unwrap();
    for _ in 0..ballots {
        let s = random_ranking(rng, n);
        d.add(s, rng.gen_range(1..20)).unwrap();
    }
    d
}

pub fn random_element(rng: &mut StdRng, n: usize, basis: Basis, terms: usize) -> AlgebraElement {
    let mut f = AlgebraElement::zero(n, basis);
    for _ in 0..terms {
        let c = Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=3));
        f.add_term(random_ranking(rng, n), c).unwrap();
    }
    f
}

/// Random coefficients on every element of `R_n`.
pub fn dense_random_element(rng: &mut StdRng, n: usize, basis: Basis) -> AlgebraElement {
    AlgebraElement::from_terms(
        n,
        basis,
        enumerate_rook_monoid(n)
            .into_iter()
            .map(|s| (s, Rational::from_integer(rng.gen_range(-9..=9)))),
    )
    .unwrap()
}

/// The 0/1 rook matrix of `s`: entry `(s(x), x)` is 1.
pub fn rook_matrix(s: &PartialRanking) -> Vec<Vec<u8>> {
    let n = s.n();
    let mut m = vec![vec![0u8; n]; n];
    for (x, y) in s.pairs() {
        m[y - 1][x - 1] = 1;
    }
    m
}

pub fn from_rook_matrix(m: &[Vec<u8>]) -> PartialRanking {
    let n = m.len();
    let pairs = (1..=n).filter_map(|x| (1..=n).find(|&y| m[y - 1][x - 1] == 1).map(|y| (x, y)));
    PartialRanking::from_pairs(n, pairs.collect::<Vec<_>>()).unwrap()
}

pub fn matmul(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn transpose(a: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// Maps a cell written in positions `{1..k}` back to the labels of `(D, R)`.
pub fn unrelabel(cell: &Cell, domain: Subset, range: Subset) -> Cell {
    let d = domain.to_vec();
    let rr = range.to_vec();
    match cell {
        Cell::Block => Cell::Block,
        Cell::Ordered(pairs) => Cell::ordered(pairs.iter().map(|&(i, j)| (d[i - 1], rr[j - 1])).collect()).unwrap(),
        Cell::Unordered { from, to } => Cell::unordered(
            Subset::from_elements(from.iter().map(|i| d[i - 1])).unwrap(),
            Subset::from_elements(to.iter().map(|j| rr[j - 1])).unwrap(),
        )
        .unwrap(),
    }
}

/// Statistics of one block computed entirely inside `ℚS_k`, with cells
/// translated back to block labels.
pub fn per_block_statistics(
    f: &AlgebraElement,
    domain: Subset,
    range: Subset,
    max_order: usize,
) -> Vec<(Cell, IntegerPartition, Rational)> {
    let block = restrict_and_relabel_element(f, domain, range).unwrap();
    spectral_statistics(&block, max_order)
        .unwrap()
        .into_iter()
        .map(|s| (unrelabel(&s.cell, domain, range), s.partition, s.value))
        .collect()
}

// ---------------------------------------------------------------------------
// Character oracle: trace of left multiplication on the left ideal generated
// by a Young symmetrizer.

fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != q(0)) else { continue };
        rows.swap(r, p);
        let inv = q(1) / rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != q(0) {
                let factor = rows[i][c];
                for j in 0..cols {
                    let delta = factor * rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Young symmetrizer `e = b·a` of the row-reading tableau of `λ`, as a
/// dense vector over `S_k` in lexicographic order.
fn young_symmetrizer(lambda: &IntegerPartition) -> Vec<Rational> {
    let k = lambda.weight();
    let perms = Permutation::all(k);
    let mut row_of = vec![0; k + 1];
    let mut col_of = vec![0; k + 1];
    let mut next = 1;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            row_of[next] = r;
            col_of[next] = c;
            next += 1;
        }
    }
    let preserves = |p: &Permutation, label: &[usize]| (1..=k).all(|i| label[p.apply(i)] == label[i]);
    let sign = |p: &Permutation| {
        let even = p.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 0;
        if even { 1 } else { -1 }
    };
    let rows: Vec<&Permutation> = perms.iter().filter(|p| preserves(p, &row_of)).collect();
    let cols: Vec<&Permutation> = perms.iter().filter(|p| preserves(p, &col_of)).collect();
    let mut e = vec![q(0); perms.len()];
    for b in &cols {
        for a in &rows {
            e[b.compose(a).lex_index()] += q(sign(b));
        }
    }
    e
}

fn left_multiply(sigma: &Permutation, v: &[Rational]) -> Vec<Rational> {
    let k = sigma.degree();
    let mut out = vec![q(0); v.len()];
    for (i, c) in v.iter().enumerate() {
        if *c != q(0) {
            let tau = Permutation::from_lex_index(k, i);
            out[sigma.compose(&tau).lex_index()] += *c;
        }
    }
    out
}

/// `χ_λ(σ)` by brute force linear algebra; practical for `k ≤ 4`.
pub fn character_oracle(lambda: &IntegerPartition, sigma: &Permutation) -> i64 {
    let k = lambda.weight();
    let e = young_symmetrizer(lambda);
    let mut basis: Vec<Vec<Rational>> = Permutation::all(k).iter().map(|g| left_multiply(g, &e)).collect();
    let pivots = rref(&mut basis);
    let trace: Rational = basis
        .iter()
        .zip(&pivots)
        .map(|(b, &p)| left_multiply(sigma, b)[p])
        .sum();
    assert!(trace.is_integer());
    trace.to_integer()
}

// ---------------------------------------------------------------------------
// Fixture irreps of the maximal subgroups of R_n (n ≤ 3).

/// Which hard-coded representation of `S_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureRep {
    Trivial,
    Sign,
    /// The 2-dimensional representation of `S_3` on `{x : Σx = 0}`.
    Standard,
}

impl FixtureRep {
    pub fn partition(self, k: usize) -> IntegerPartition {
        match self {
            FixtureRep::Trivial => IntegerPartition::from_unsorted(vec![k]),
            FixtureRep::Sign => IntegerPartition::from_unsorted(vec![1; k]),
            FixtureRep::Standard => partition(&[2, 1]),
        }
    }

    /// The representations used for `S_k`: every irrep for `k ≤ 3`.
    pub fn for_degree(k: usize) -> Vec<FixtureRep> {
        match k {
            0 | 1 => vec![FixtureRep::Trivial],
            2 => vec![FixtureRep::Trivial, FixtureRep::Sign],
            3 => vec![FixtureRep::Trivial, FixtureRep::Sign, FixtureRep::Standard],
            _ => panic!("no fixture irreps for S_{k}"),
        }
    }

    pub fn matrix(self, p: &Permutation) -> RationalMatrix {
        match self {
            FixtureRep::Trivial => RationalMatrix::from_integers(&[&[1]]),
            FixtureRep::Sign => {
                let odd = p.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2;
                RationalMatrix::from_integers(&[&[if odd == 0 { 1 } else { -1 }]])
            }
            FixtureRep::Standard => {
                // Basis v1 = e1 - e2, v2 = e2 - e3; w = Σ w_i e_i with Σ w_i = 0
                // has coordinates (w1, w1 + w2).
                let image = |a: usize, b: usize| {
                    let mut w = [0i64; 3];
                    w[p.apply(a) - 1] += 1;
                    w[p.apply(b) - 1] -= 1;
                    [w[0], w[0] + w[1]]
                };
                let c1 = image(1, 2);
                let c2 = image(2, 3);
                RationalMatrix::from_integers(&[&[c1[0], c2[0]], &[c1[1], c2[1]]])
            }
        }
    }

    pub fn irrep(self, s: &FiniteInverseSemigroup, elements: &[PartialRanking], class: &DClassInfo) -> MatrixIrrep {
        let images = class
            .group
            .iter()
            .map(|&g| (g, self.matrix(&elements[g].perm_type())))
            .collect();
        MatrixIrrep::new(s, class, images).unwrap()
    }
}

/// Coefficient vector (by semigroup index) to a groupoid-basis element.
pub fn indexed_to_element(n: usize, elements: &[PartialRanking], coeffs: &[Rational]) -> AlgebraElement {
    AlgebraElement::from_terms(
        n,
        Basis::Groupoid,
        elements.iter().cloned().zip(coeffs.iter().copied()),
    )
    .unwrap()
}
