mod common;

use common::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rook_spectral::algebra::{
    groupoid_blocks, inner_product_groupoid, inner_product_natural, isotypic_project_rook, AlgebraElement, Basis,
};
use rook_spectral::rook::enumerate_rook_monoid;
use rook_spectral::symmetric::partitions;
use rook_spectral::{IntegerPartition, Rational, Subset};

/// `g(σ) = Σ_{t ≥ σ} f(t)` by scanning all of `R_n`.
fn zeta_oracle(f: &AlgebraElement) -> AlgebraElement {
    let all = enumerate_rook_monoid(f.n());
    let terms = all.iter().map(|s| {
        let sum: Rational = all.iter().filter(|t| s.leq(t)).map(|t| f.get(t)).sum();
        (s.clone(), sum)
    });
    AlgebraElement::from_terms(f.n(), Basis::Groupoid, terms).unwrap()
}

fn lambdas(n: usize) -> Vec<IntegerPartition> {
    (0..=n).flat_map(partitions).collect()
}

#[test]
fn basis_change_matches_brute_force_zeta() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 0..=4 {
        for _ in 0..5 {
            let f = random_element(&mut rng, n, Basis::Semigroup, 15);
            let g = f.to_groupoid_basis();
            assert_eq!(g, zeta_oracle(&f), "n={n}");
            assert_eq!(g.to_semigroup_basis(), f);
        }
    }
}

#[test]
fn isotypic_components_are_orthogonal_under_groupoid_product() {
    let mut rng = StdRng::seed_from_u64(12);
    for n in 1..=4 {
        let f = dense_random_element(&mut rng, n, Basis::Semigroup);
        let g = dense_random_element(&mut rng, n, Basis::Groupoid);
        let ls = lambdas(n);
        for a in &ls {
            let fa = isotypic_project_rook(&f, a).unwrap();
            for b in &ls {
                let gb = isotypic_project_rook(&g, b).unwrap();
                let ip = inner_product_groupoid(&fa, &gb).unwrap();
                if a != b {
                    assert_eq!(ip, q(0), "{a} vs {b}");
                }
            }
        }
    }
}

#[test]
fn projection_stays_inside_a_block() {
    let mut rng = StdRng::seed_from_u64(13);
    let f = dense_random_element(&mut rng, 4, Basis::Groupoid);
    let blocks = groupoid_blocks(&f, 2);
    assert_eq!(blocks.len(), 36);
    let d = set(&[1, 3]);
    let rr = set(&[2, 4]);
    let local = AlgebraElement::from_terms(
        4,
        Basis::Groupoid,
        f.terms().filter(|(s, _)| s.domain() == d && s.range() == rr).map(|(s, c)| (s.clone(), *c)),
    )
    .unwrap();
    for lambda in partitions(2) {
        let p = isotypic_project_rook(&local, &lambda).unwrap();
        assert!(p.terms().all(|(s, _)| s.domain() == d && s.range() == rr));
        let whole = isotypic_project_rook(&f, &lambda).unwrap();
        for (s, c) in p.terms() {
            assert_eq!(whole.get(s), *c);
        }
    }
}

#[test]
fn natural_inner_product_does_not_separate_components_in_r1() {
    // N = [-] and the identity [1] in R_1.
    let n_elem = AlgebraElement::basis_element(r("[-]"), Basis::Semigroup);
    let id = AlgebraElement::basis_element(r("[1]"), Basis::Semigroup);
    let zero_part = isotypic_project_rook(&id, &IntegerPartition::empty()).unwrap();
    let one_part = isotypic_project_rook(&id, &partition(&[1])).unwrap();
    assert_eq!(zero_part, n_elem.to_groupoid_basis());
    assert_eq!(inner_product_groupoid(&zero_part, &one_part).unwrap(), q(0));
    assert_eq!(inner_product_natural(&zero_part, &one_part).unwrap(), q(-1));
}

#[test]
fn groupoid_product_matches_semigroup_convolution() {
    let mut rng = StdRng::seed_from_u64(14);
    for n in 0..=4 {
        let (f, g) = if n <= 3 {
            (dense_random_element(&mut rng, n, Basis::Semigroup), dense_random_element(&mut rng, n, Basis::Semigroup))
        } else {
            (random_element(&mut rng, n, Basis::Semigroup, 25), random_element(&mut rng, n, Basis::Semigroup, 25))
        };
        let via_semigroup = f.convolve(&g).unwrap().to_groupoid_basis();
        let via_groupoid = f.to_groupoid_basis().multiply_groupoid(&g.to_groupoid_basis()).unwrap();
        assert_eq!(via_semigroup, via_groupoid, "n={n}");
    }
}

#[test]
fn groupoid_rule_holds_exhaustively_for_r2() {
    let all = enumerate_rook_monoid(2);
    for s in &all {
        for t in &all {
            let a = AlgebraElement::basis_element(s.clone(), Basis::Groupoid);
            let b = AlgebraElement::basis_element(t.clone(), Basis::Groupoid);
            let product = a.multiply_groupoid(&b).unwrap();
            if s.domain() == t.range() {
                let st = s.compose(t).unwrap();
                assert_eq!(product, AlgebraElement::basis_element(st, Basis::Groupoid), "{s}·{t}");
            } else {
                assert!(product.is_zero(), "{s}·{t}");
            }
        }
    }
}

#[test]
fn rank_parts_partition_the_element() {
    let mut rng = StdRng::seed_from_u64(15);
    let f = dense_random_element(&mut rng, 3, Basis::Groupoid);
    let mut sum = AlgebraElement::zero(3, Basis::Groupoid);
    for k in 0..=3 {
        let part = f.rank_part(k);
        assert!(part.terms().all(|(s, _)| s.rank() == k));
        sum = sum.add(&part).unwrap();
    }
    assert_eq!(sum, f);
    assert!(groupoid_blocks(&f, 3).keys().all(|&(d, r)| d == Subset::initial(3) && r == Subset::initial(3)));
}
