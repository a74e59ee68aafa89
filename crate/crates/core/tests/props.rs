//! Property-based checks: structural laws that must hold for every seed.

mod common;

use common::*;
use proptest::prelude::*;
use smallcat::category::{FiniteCategory, ObjectId};
use smallcat::group::group_isomorphic;
use smallcat::partition::Partition;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partitions_round_trip_through_labels(labels in prop::collection::vec(0usize..5, 1..12)) {
        let partition = Partition::from_labels(&labels);
        let classes: Vec<Vec<usize>> = partition.classes().map(|c| c.to_vec()).collect();
        let rebuilt = Partition::from_classes(labels.len(), &classes).unwrap();
        prop_assert_eq!(partition, rebuilt);
    }

    #[test]
    fn partition_classes_cover_each_point_once(labels in prop::collection::vec(0usize..5, 1..12)) {
        let partition = Partition::from_labels(&labels);
        let mut seen = vec![0usize; labels.len()];
        for class in partition.classes() {
            for &p in class {
                seen[p] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        for (a, b) in labels.iter().enumerate().flat_map(|(a, la)| {
            labels.iter().enumerate().filter(move |&(_, lb)| la == lb).map(move |(b, _)| (a, b))
        }) {
            prop_assert!(partition.same_class(a, b));
        }
    }

    #[test]
    fn opposite_is_an_involution(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let c = random_groupoid(&mut rng).into_category();
        prop_assert_eq!(c.opposite().opposite(), c);
    }

    #[test]
    fn hom_sets_partition_the_morphisms(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let c = random_groupoid(&mut rng).into_category();
        let total: usize = (0..c.n_objects())
            .flat_map(|x| (0..c.n_objects()).map(move |y| (x, y)))
            .map(|(x, y)| c.hom_set(ObjectId(x), ObjectId(y)).len())
            .sum();
        prop_assert_eq!(total, c.n_morphisms());
    }

    #[test]
    fn the_full_subcategory_over_all_objects_is_the_whole_category(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let c = random_groupoid(&mut rng).into_category();
        let all: Vec<ObjectId> = c.objects().collect();
        let sub = c.full_subcategory(&all);
        prop_assert_eq!(sub.category, c);
    }

    #[test]
    fn relabelling_preserves_isomorphism_class(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let c = random_groupoid(&mut rng).into_category();
        let relabelled = relabel_category(&mut rng, &c);
        match smallcat::iso::find_isomorphism(&c, &relabelled, smallcat::iso::DEFAULT_BUDGET) {
            smallcat::iso::IsoOutcome::Isomorphic(w) => {
                prop_assert!(w.verify(&c, &relabelled).is_ok());
            }
            other => prop_assert!(false, "expected a witness, got {:?}", other),
        }
    }

    #[test]
    fn group_isomorphism_maps_verify(a_index in 0usize..8, b_index in 0usize..8) {
        let pool = group_pool();
        let (a, b) = (&pool[a_index], &pool[b_index]);
        if let Some(iso) = group_isomorphic(a, b) {
            prop_assert!(iso.verify(a, b));
            // and the relation is symmetric
            prop_assert!(group_isomorphic(b, a).is_some());
        } else {
            prop_assert!(group_isomorphic(b, a).is_none());
        }
    }

    #[test]
    fn element_orders_divide_the_group_order(index in 0usize..8) {
        let group = &group_pool()[index];
        for x in 0..group.order() {
            prop_assert_eq!(group.order() % group.element_order(x), 0);
        }
    }

    #[test]
    fn reachability_of_a_groupoid_is_symmetric(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let groupoid = random_groupoid(&mut rng);
        let reach = groupoid.category().reachability_classes();
        prop_assert!(reach.symmetric);
        // classes agree with hom-set nonemptiness
        for x in groupoid.category().objects() {
            for y in groupoid.category().objects() {
                let related = !groupoid.category().hom_set(x, y).is_empty();
                prop_assert_eq!(reach.partition.same_class(x.0, y.0), related);
            }
        }
    }

    #[test]
    fn discrete_categories_have_only_identities(n in 0usize..8) {
        let c = FiniteCategory::discrete(n);
        prop_assert_eq!(c.n_morphisms(), n);
        for m in c.morphisms() {
            prop_assert!(c.is_identity(m));
        }
    }

    #[test]
    fn corollary_reports_are_reflexively_positive(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let group = random_group(&mut rng);
        let action = random_group_action(&mut rng, &group, 1 + (seed as usize % 4));
        let report = smallcat::iso::corollary_check(&action, &action, smallcat::iso::DEFAULT_BUDGET);
        prop_assert_eq!(report.verdicts_agree(), Some(true));
        prop_assert!(report.matching.is_some());
    }
}
