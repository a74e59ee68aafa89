//! Law-level properties checked over randomized instances. Each test draws
//! from the seeded generators in `common`, so failures replay deterministically.

mod common;

use common::*;
use smallcat::action::{
    action_domain, inner_action, semidirect_groupoid, semigroup_bundle_action, tilde_category,
    validate_action, validate_action_groupoid_form, ActionError, LeftAction,
};
use smallcat::bundle::{bundle_from_groupoid, standard_groupoid, standardization_iso, ChoicePolicy};
use smallcat::category::{FiniteCategory, Groupoid, MorphismId, ObjectId};
use smallcat::group::group_isomorphic;
use smallcat::iso::{find_isomorphism, IsoOutcome, DEFAULT_BUDGET};

const INSTANCES: usize = 40;

#[test]
fn the_domain_only_sees_the_image_of_the_object_map() {
    let mut rng = rng(0x5a01);
    for _ in 0..INSTANCES {
        let action = random_groupoid_action(&mut rng);
        let g = action.g();
        let h = action.h();
        let mut image: Vec<ObjectId> = action.phi().iter().map(|&v| ObjectId(v)).collect();
        image.sort_unstable();
        image.dedup();
        let sub = g.full_subcategory(&image);
        let phi_sub: Vec<usize> = action
            .phi()
            .iter()
            .map(|&v| sub.object_to_parent.binary_search(&ObjectId(v)).unwrap())
            .collect();
        let translated: Vec<(MorphismId, MorphismId)> =
            action_domain(&sub.category, h, &phi_sub)
                .into_iter()
                .map(|(gm, hm)| (sub.morphism_to_parent[gm.0], hm))
                .collect();
        assert_eq!(translated, action_domain(g, h, action.phi()));
    }
}

#[test]
fn units_are_sent_to_units() {
    let mut rng = rng(0x5a02);
    for _ in 0..INSTANCES {
        let action = random_groupoid_action(&mut rng);
        let h = action.h();
        for &(gm, hm) in action.domain() {
            if h.is_identity(hm) {
                let image = action.apply(gm, hm).unwrap();
                assert!(h.is_identity(image), "unit {hm} moved to non-unit {image}");
            }
        }
    }
}

#[test]
fn inversion_commutes_with_the_action() {
    let mut rng = rng(0x5a03);
    for _ in 0..INSTANCES {
        let action = random_groupoid_action(&mut rng);
        if !action.h_is_groupoid() {
            continue;
        }
        for &(gm, hm) in action.domain() {
            let lhs = action.h_invert(action.apply(gm, hm).unwrap()).unwrap();
            let rhs = action.apply(gm, action.h_invert(hm).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn image_endpoints_are_anchored_at_the_target() {
    let mut rng = rng(0x5a04);
    for _ in 0..INSTANCES {
        let action = random_groupoid_action(&mut rng);
        let (g, h) = (action.g(), action.h());
        for &(gm, hm) in action.domain() {
            let a = action.apply(gm, hm).unwrap();
            assert_eq!(action.phi_of(h.source(a)), g.target(gm));
            assert_eq!(action.phi_of(h.target(a)), g.target(gm));
        }
    }
}

#[test]
fn translation_along_a_morphism_is_functorial() {
    let mut rng = rng(0x5a05);
    for _ in 0..INSTANCES {
        let action = random_groupoid_action(&mut rng);
        let (g, h) = (action.g(), action.h());
        for gm in g.morphisms() {
            let domain: Vec<MorphismId> = action
                .domain()
                .iter()
                .filter(|&&(gd, _)| gd == gm)
                .map(|&(_, hm)| hm)
                .collect();
            // composition is preserved wherever both sides exist
            for &h1 in &domain {
                for &h2 in &domain {
                    if let Some(c) = h.compose(h1, h2) {
                        let image = h
                            .compose(action.apply(gm, h1).unwrap(), action.apply(gm, h2).unwrap());
                        assert_eq!(image, action.apply(gm, c));
                    }
                }
            }
            // a unit acts as the identity map
            if g.is_identity(gm) {
                for &hm in &domain {
                    assert_eq!(action.apply(gm, hm), Some(hm));
                }
            }
            // in a groupoid the reverse morphism gives the inverse map
            let gi = action.g_invert(gm).unwrap();
            for &hm in &domain {
                let there = action.apply(gm, hm).unwrap();
                assert_eq!(action.apply(gi, there), Some(hm));
            }
        }
    }
}

#[test]
fn the_two_validators_agree_on_valid_and_corrupted_tables() {
    let mut rng = rng(0x5a06);
    let mut corrupted_seen = 0;
    while corrupted_seen < INSTANCES {
        let action = random_groupoid_action(&mut rng);
        let tables = action.tables().clone();
        assert!(validate_action(tables.clone()).is_ok());
        assert!(validate_action_groupoid_form(&tables).is_ok());
        let Some(mutant) = corrupt_one_entry(&mut rng, &tables) else {
            continue;
        };
        corrupted_seen += 1;
        let direct = validate_action(mutant.clone());
        let groupoid_form = validate_action_groupoid_form(&mutant);
        assert!(direct.is_err(), "corruption went undetected");
        assert!(groupoid_form.is_err(), "corruption went undetected by the primed form");
        if let Err(ActionError::Laws(violations)) = &direct {
            assert!(!violations.is_empty());
        }
    }
}

#[test]
fn product_inverses_follow_the_twisted_formula() {
    let mut rng = rng(0x5a07);
    for _ in 0..INSTANCES {
        let action = random_groupoid_action(&mut rng);
        if !action.h_is_groupoid() {
            continue;
        }
        let product = semidirect_groupoid(&action).unwrap();
        let groupoid = product.to_groupoid().unwrap();
        for p in product.category().morphisms() {
            let (hm, gm) = product.pair(p);
            let gi = action.g_invert(gm).unwrap();
            let hi = action.h_invert(hm).unwrap();
            let expected = (action.apply(gi, hi).unwrap(), gi);
            assert_eq!(product.pair(groupoid.invert(p)), expected);
        }
    }
}

#[test]
fn products_over_non_groupoids_are_categories_but_not_groupoids() {
    let action = swap_arrows_action();
    let product = semidirect_groupoid(&action).unwrap();
    assert_eq!(product.pairs().len(), 12);
    assert!(product.to_groupoid().is_err());
    // the tilde construction still goes through: every unit image is a unit
    let tilde = tilde_category(&action).unwrap();
    assert_eq!(tilde.triples().len(), 8);
}

#[test]
fn standardization_does_not_depend_on_the_choice_policy() {
    let mut rng = rng(0x5a08);
    for _ in 0..INSTANCES {
        let groupoid = random_groupoid(&mut rng);
        let mut partitions = Vec::new();
        for policy in [ChoicePolicy::LeastIndex, ChoicePolicy::GreatestIndex] {
            let dec = bundle_from_groupoid(&groupoid, policy);
            let (standard, witness) = standardization_iso(&groupoid, &dec);
            witness.verify(groupoid.category(), standard.groupoid.category()).unwrap();
            partitions.push(dec.bundle);
        }
        assert_eq!(partitions[0].partition, partitions[1].partition);
        for (a, b) in partitions[0].fibers.iter().zip(&partitions[1].fibers) {
            assert!(group_isomorphic(a, b).is_some());
        }
    }
}

fn restricted_image(action: &LeftAction) -> Vec<(usize, usize)> {
    let restricted = smallcat::action::restricted_semidirect(action).unwrap();
    let mut image: Vec<(usize, usize)> = restricted
        .product
        .pairs()
        .iter()
        .map(|&(hm, tm)| (hm.0, restricted.tilde.j_morphisms()[tm.0]))
        .collect();
    image.sort_unstable();
    image
}

#[test]
fn the_restricted_product_is_the_semigroup_bundle_product() {
    let mut rng = rng(0x5a09);
    for _ in 0..INSTANCES {
        let action = random_groupoid_action(&mut rng);
        let image = restricted_image(&action);
        let (prime_action, bundle) = semigroup_bundle_action(&action);
        let prime = semidirect_groupoid(&prime_action).unwrap();
        let mut prime_pairs: Vec<(usize, usize)> = prime
            .pairs()
            .iter()
            .map(|&(hm, gm)| (bundle.morphism_to_parent[hm.0].0, gm.0))
            .collect();
        prime_pairs.sort_unstable();
        assert_eq!(image, prime_pairs);
        // membership: every restricted member is an endomorphism pair
        let h = action.h();
        for &(hm, _) in &image {
            assert_eq!(h.source(MorphismId(hm)), h.target(MorphismId(hm)));
        }
    }
}

#[test]
fn groups_make_the_restricted_and_full_products_coincide() {
    let mut rng = rng(0x5a0a);
    for _ in 0..INSTANCES {
        let action = random_group_on_group(&mut rng);
        let image = restricted_image(&action);
        let full = semidirect_groupoid(&action).unwrap();
        let mut full_pairs: Vec<(usize, usize)> =
            full.pairs().iter().map(|&(hm, gm)| (hm.0, gm.0)).collect();
        full_pairs.sort_unstable();
        assert_eq!(image, full_pairs);
    }
}

#[test]
fn isomorphism_search_is_symmetric() {
    let mut rng = rng(0x5a0b);
    for _ in 0..12 {
        let a = random_groupoid(&mut rng).into_category();
        let b = random_groupoid(&mut rng).into_category();
        let ab = find_isomorphism(&a, &b, DEFAULT_BUDGET);
        let ba = find_isomorphism(&b, &a, DEFAULT_BUDGET);
        match (&ab, &ba) {
            (IsoOutcome::Isomorphic(u), IsoOutcome::Isomorphic(v)) => {
                u.verify(&a, &b).unwrap();
                v.verify(&b, &a).unwrap();
            }
            (IsoOutcome::NotIsomorphic, IsoOutcome::NotIsomorphic) => {}
            other => panic!("asymmetric outcomes {other:?}"),
        }
    }
}

#[test]
fn empty_acted_categories_yield_empty_valid_structures() {
    let empty = FiniteCategory::discrete(0);
    let action = unit_only_action(empty, 1, vec![]);
    assert!(action.domain().is_empty());
    let product = semidirect_groupoid(&action).unwrap();
    assert_eq!(product.category().n_morphisms(), 0);
    assert!(product.to_groupoid().is_ok());
    let tilde = tilde_category(&action).unwrap();
    assert_eq!(tilde.triples().len(), 0);
    match find_isomorphism(product.category(), tilde.category(), DEFAULT_BUDGET) {
        IsoOutcome::Isomorphic(w) => {
            w.verify(product.category(), tilde.category()).unwrap();
        }
        other => panic!("empty categories must be isomorphic, got {other:?}"),
    }
}

#[test]
fn one_object_groupoids_recover_their_groups() {
    let mut rng = rng(0x5a0c);
    for _ in 0..INSTANCES {
        let group = random_group(&mut rng);
        let groupoid = smallcat::bundle::one_object_groupoid(&group);
        let dec = bundle_from_groupoid(&groupoid, ChoicePolicy::LeastIndex);
        assert_eq!(dec.bundle.fibers.len(), 1);
        assert!(group_isomorphic(&dec.bundle.fibers[0], &group).is_some());
    }
}

#[test]
fn inner_action_kernels_match_the_endomorphism_bundle() {
    let mut rng = rng(0x5a0d);
    for _ in 0..10 {
        let groupoid = random_groupoid(&mut rng);
        let inner = inner_action(&groupoid);
        inner
            .kernel_witness
            .verify(&inner.kernel.category, &inner.endos.category)
            .unwrap();
        // the kernel is exactly the pairs whose composite is a unit
        for p in inner.product.category().morphisms() {
            let is_kernel = inner.kernel.position_of_parent(p).is_some();
            let composite = inner.psi[p.0];
            assert_eq!(is_kernel, groupoid.category().is_identity(composite));
        }
    }
}

#[test]
fn standard_groupoid_size_matches_the_class_formula() {
    let mut rng = rng(0x5a0e);
    for _ in 0..INSTANCES {
        let bundle = random_bundle(&mut rng, 6, 6, 216);
        let standard = standard_groupoid(&bundle);
        let by_formula: usize = bundle
            .partition
            .classes()
            .zip(&bundle.fibers)
            .map(|(class, fiber)| class.len() * class.len() * fiber.order())
            .sum();
        assert_eq!(standard.groupoid.n_morphisms(), by_formula);
        assert_eq!(Groupoid::from_category(standard.groupoid.category().clone()).is_ok(), true);
    }
}
