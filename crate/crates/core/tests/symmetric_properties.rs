mod common;

use common::*;
use proptest::prelude::*;
use rook_spectral::rook::factorial;
use rook_spectral::symmetric::{
    character, class_size, first_order_closed_form, first_order_statistic, isotypic_project_group, partitions,
    SymmetricGroup,
};
use rook_spectral::{GroupAlgebraElement, IntegerPartition, Permutation, Rational};

fn cycle_type(p: &Permutation) -> IntegerPartition {
    IntegerPartition::from_unsorted(p.cycle_type())
}

fn element(k: usize) -> impl Strategy<Value = GroupAlgebraElement> {
    prop::collection::vec(-20i64..=20, factorial(k))
        .prop_map(move |v| GroupAlgebraElement::from_dense(k, v.into_iter().map(Rational::from_integer).collect()))
}

fn sized_element() -> impl Strategy<Value = GroupAlgebraElement> {
    (1usize..=4).prop_flat_map(element)
}

#[test]
fn characters_match_young_symmetrizer_oracle() {
    for k in 1..=4 {
        for lambda in partitions(k) {
            for sigma in Permutation::all(k) {
                let expected = character_oracle(&lambda, &sigma);
                assert_eq!(character(&lambda, &cycle_type(&sigma)).unwrap(), expected, "χ_{lambda}({sigma})");
            }
        }
    }
}

#[test]
fn characters_are_invariant_under_inversion_and_orthonormal() {
    for k in 1..=6 {
        let group = SymmetricGroup::get(k);
        let lambdas = partitions(k);
        for lambda in &lambdas {
            let chi = group.character_values(lambda).unwrap();
            for a in 0..group.order() {
                assert_eq!(chi[a], chi[group.inv(a)]);
            }
            assert_eq!(chi[0] as usize, lambda.dimension());
        }
        // Σ_μ |C_μ| χ_λ(μ) χ_ν(μ) = k! δ_λν
        for lambda in &lambdas {
            for nu in &lambdas {
                let sum: i64 = partitions(k)
                    .iter()
                    .map(|mu| class_size(mu) as i64 * character(lambda, mu).unwrap() * character(nu, mu).unwrap())
                    .sum();
                assert_eq!(sum, if lambda == nu { factorial(k) as i64 } else { 0 });
            }
        }
    }
}

proptest! {
    #[test]
    fn projections_resolve_identity(f in sized_element()) {
        let k = f.degree();
        let mut sum = GroupAlgebraElement::zero(k);
        let mut energy = Rational::from_integer(0);
        let parts: Vec<GroupAlgebraElement> =
            partitions(k).iter().map(|l| isotypic_project_group(&f, l).unwrap()).collect();
        for (i, p) in parts.iter().enumerate() {
            sum = sum.add(p);
            energy += p.norm_sq();
            for (j, lambda) in partitions(k).iter().enumerate() {
                let again = isotypic_project_group(p, lambda).unwrap();
                if i == j {
                    prop_assert_eq!(&again, p);
                } else {
                    prop_assert!(again.is_zero());
                }
                if i != j {
                    prop_assert_eq!(p.inner(&parts[j]), Rational::from_integer(0));
                }
            }
        }
        prop_assert_eq!(sum, f.clone());
        prop_assert_eq!(energy, f.norm_sq());
    }

    #[test]
    fn first_order_closed_form_agrees(f in (2usize..=5).prop_flat_map(element)) {
        let k = f.degree();
        for i in 1..=k {
            for j in 1..=k {
                prop_assert_eq!(first_order_statistic(&f, i, j).unwrap(), first_order_closed_form(&f, i, j));
            }
        }
    }

    #[test]
    fn first_order_margins_vanish(f in (2usize..=4).prop_flat_map(element)) {
        let k = f.degree();
        for i in 1..=k {
            let row: Rational = (1..=k).map(|j| first_order_statistic(&f, i, j).unwrap()).sum();
            let col: Rational = (1..=k).map(|j| first_order_statistic(&f, j, i).unwrap()).sum();
            prop_assert_eq!(row, Rational::from_integer(0));
            prop_assert_eq!(col, Rational::from_integer(0));
        }
    }
}

#[test]
fn projection_commutes_with_convolution_by_group_elements() {
    // Isotypic components are two-sided ideals.
    let k = 4;
    let f = GroupAlgebraElement::from_dense(k, (0..24).map(|i| Rational::from_integer(i * i % 7 - 3)).collect());
    let g = GroupAlgebraElement::basis(&Permutation::new(vec![2, 3, 1, 4]).unwrap(), q(1));
    for lambda in partitions(k) {
        let left = isotypic_project_group(&g.convolve(&f), &lambda).unwrap();
        let right = g.convolve(&isotypic_project_group(&f, &lambda).unwrap());
        assert_eq!(left, right);
    }
}
