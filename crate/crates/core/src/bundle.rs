//! Group bundles over a partitioned object set, and the standard-type
//! groupoid they generate.
//!
//! A bundle assigns one finite group to each equivalence class of objects.
//! Its standard groupoid has one morphism `(x, g, y)` for every pair of
//! equivalent objects `x, y` and group element `g` of their class, with
//! `(x, g, y) . (y, h, z) = (x, gh, z)` and identity `(x, e, x)`. Conversely,
//! every finite groupoid decomposes into such a bundle: pick a representative
//! per class and a connector into each object, then conjugate every morphism
//! into the representative's isotropy group.

use crate::category::{
    FiniteCategory, Groupoid, IsoWitness, MorphismId, ObjectId, RawCategory,
};
use crate::group::FiniteGroup;
use crate::partition::Partition;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("partition has {classes} classes but {fibers} fiber groups were given")]
    FiberCountMismatch { classes: usize, fibers: usize },
}

/// A partition of a finite object set with one group per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupBundle {
    pub partition: Partition,
    pub fibers: Vec<FiniteGroup>,
}

impl GroupBundle {
    pub fn new(partition: Partition, fibers: Vec<FiniteGroup>) -> Result<GroupBundle, BundleError> {
        if partition.num_classes() != fibers.len() {
            return Err(BundleError::FiberCountMismatch {
                classes: partition.num_classes(),
                fibers: fibers.len(),
            });
        }
        Ok(GroupBundle { partition, fibers })
    }

    /// Morphism count of the standard groupoid: the sum over classes of
    /// (class size)^2 * (fiber order).
    pub fn standard_size(&self) -> usize {
        self.partition
            .classes()
            .zip(&self.fibers)
            .map(|(class, fiber)| class.len() * class.len() * fiber.order())
            .sum()
    }
}

/// A morphism of a standard groupoid, displayed as a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StandardMorphism {
    pub target: usize,
    pub element: usize,
    pub source: usize,
}

/// A standard groupoid together with its triple labelling.
#[derive(Debug, Clone)]
pub struct StandardGroupoid {
    pub groupoid: Groupoid,
    /// Morphism index -> triple, in lexicographic (target, source, element) order.
    pub morphisms: Vec<StandardMorphism>,
    index: HashMap<StandardMorphism, usize>,
}

impl StandardGroupoid {
    pub fn index_of(&self, triple: StandardMorphism) -> Option<MorphismId> {
        self.index.get(&triple).map(|&i| MorphismId(i))
    }
}

/// Builds the standard groupoid of a bundle. Morphisms are numbered by
/// iterating the target object, then the source object within its class, then
/// the fiber element.
pub fn standard_groupoid(bundle: &GroupBundle) -> StandardGroupoid {
    let n = bundle.partition.points();
    let mut morphisms = Vec::with_capacity(bundle.standard_size());
    for x in 0..n {
        let class = bundle.partition.class_of(x);
        let fiber = &bundle.fibers[class];
        for &y in bundle.partition.class(class) {
            for g in 0..fiber.order() {
                morphisms.push(StandardMorphism { target: x, element: g, source: y });
            }
        }
    }
    let index: HashMap<StandardMorphism, usize> =
        morphisms.iter().enumerate().map(|(i, &t)| (t, i)).collect();

    let m = morphisms.len();
    let mut raw = RawCategory::with_undefined_compose(
        n,
        morphisms.iter().map(|t| t.source).collect(),
        morphisms.iter().map(|t| t.target).collect(),
        (0..n)
            .map(|x| {
                let e = bundle.fibers[bundle.partition.class_of(x)].identity();
                index[&StandardMorphism { target: x, element: e, source: x }]
            })
            .collect(),
    );
    for (h, th) in morphisms.iter().enumerate() {
        for (k, tk) in morphisms.iter().enumerate() {
            if th.source == tk.target {
                let fiber = &bundle.fibers[bundle.partition.class_of(th.target)];
                let product = StandardMorphism {
                    target: th.target,
                    element: fiber.mul(th.element, tk.element),
                    source: tk.source,
                };
                raw.set_compose(h, k, index[&product]);
            }
        }
    }
    let category = FiniteCategory::validate(raw).expect("standard tables satisfy category laws");
    let groupoid = Groupoid::from_category(category).expect("standard tables are invertible");
    debug_assert_eq!(m, bundle.standard_size());
    StandardGroupoid { groupoid, morphisms, index }
}

/// How representatives and connectors are picked when decomposing a groupoid.
/// Both policies are deterministic; the resulting standard groupoids are
/// isomorphic either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChoicePolicy {
    /// Least object index as representative, least morphism index as connector.
    #[default]
    LeastIndex,
    /// Greatest indices instead.
    GreatestIndex,
}

/// A bundle decomposition of a groupoid: the data needed to rebuild it as a
/// standard groupoid.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub bundle: GroupBundle,
    /// Per class: the chosen representative object.
    pub representatives: Vec<ObjectId>,
    /// Per object `x`: a chosen morphism from `x` to its representative
    /// (target = representative, source = x). At the representative itself
    /// this is the identity.
    pub connectors: Vec<MorphismId>,
    /// Per class: the isotropy morphisms at the representative, in morphism
    /// index order; their positions are the fiber group's element numbers.
    pub fiber_morphisms: Vec<Vec<MorphismId>>,
}

/// Decomposes a groupoid into a bundle over its reachability classes. The
/// fiber over a class is the isotropy group at the chosen representative.
pub fn bundle_from_groupoid(groupoid: &Groupoid, policy: ChoicePolicy) -> Decomposition {
    let category = groupoid.category();
    let partition = category.reachability_classes().partition;
    let pick = |candidates: &[MorphismId]| -> MorphismId {
        match policy {
            ChoicePolicy::LeastIndex => *candidates.first().expect("hom-set nonempty in class"),
            ChoicePolicy::GreatestIndex => *candidates.last().expect("hom-set nonempty in class"),
        }
    };

    let mut representatives = Vec::with_capacity(partition.num_classes());
    let mut fiber_morphisms = Vec::with_capacity(partition.num_classes());
    let mut fibers = Vec::with_capacity(partition.num_classes());
    let mut connectors = vec![MorphismId(usize::MAX); category.n_objects()];
    for class in partition.classes() {
        let rep = ObjectId(match policy {
            ChoicePolicy::LeastIndex => *class.first().unwrap(),
            ChoicePolicy::GreatestIndex => *class.last().unwrap(),
        });
        let isotropy = category.hom_set(rep, rep);
        let position: HashMap<MorphismId, usize> =
            isotropy.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        let rows: Vec<Vec<usize>> = isotropy
            .iter()
            .map(|&g| {
                isotropy
                    .iter()
                    .map(|&h| position[&category.compose(g, h).expect("isotropy is closed")])
                    .collect()
            })
            .collect();
        let fiber = FiniteGroup::from_table(&rows).expect("isotropy at an object is a group");
        for &x in class {
            connectors[x] = if x == rep.0 {
                category.identity(rep)
            } else {
                pick(&category.hom_set(rep, ObjectId(x)))
            };
        }
        representatives.push(rep);
        fiber_morphisms.push(isotropy);
        fibers.push(fiber);
    }
    let bundle = GroupBundle::new(partition, fibers).expect("one fiber per class");
    Decomposition { bundle, representatives, connectors, fiber_morphisms }
}

/// The standardization isomorphism: rebuilds the standard groupoid of the
/// decomposition's bundle and the isomorphism onto it that conjugates each
/// morphism `g : y -> x` to the fiber element `l_x . g . l_y^{-1}`.
///
/// The decomposition must come from `groupoid` (as produced by
/// [`bundle_from_groupoid`]); the returned witness has been verified.
pub fn standardization_iso(
    groupoid: &Groupoid,
    decomposition: &Decomposition,
) -> (StandardGroupoid, IsoWitness) {
    let category = groupoid.category();
    let standard = standard_groupoid(&decomposition.bundle);
    let partition = &decomposition.bundle.partition;
    // position of each isotropy morphism within its fiber
    let mut fiber_position: HashMap<MorphismId, usize> = HashMap::new();
    for fiber in &decomposition.fiber_morphisms {
        for (i, &h) in fiber.iter().enumerate() {
            fiber_position.insert(h, i);
        }
    }

    let morphism_map: Vec<usize> = category
        .morphisms()
        .map(|g| {
            let x = category.target(g);
            let y = category.source(g);
            let lx = decomposition.connectors[x.0];
            let ly_inv = groupoid.invert(decomposition.connectors[y.0]);
            let conjugated = category
                .compose(category.compose(lx, g).expect("connector meets morphism"), ly_inv)
                .expect("conjugation lands in the isotropy group");
            let triple = StandardMorphism {
                target: x.0,
                element: fiber_position[&conjugated],
                source: y.0,
            };
            standard.index_of(triple).expect("triple exists in standard groupoid").0
        })
        .collect();
    let witness = IsoWitness {
        object_map: (0..category.n_objects()).collect(),
        morphism_map,
    };
    witness
        .verify(category, standard.groupoid.category())
        .expect("standardization must be an isomorphism");
    debug_assert_eq!(partition.points(), category.n_objects());
    (standard, witness)
}

/// A group viewed as a one-object groupoid; morphism indices are the group's
/// element numbers.
pub fn one_object_groupoid(group: &FiniteGroup) -> Groupoid {
    let n = group.order();
    let mut raw = RawCategory::with_undefined_compose(
        1,
        vec![0; n],
        vec![0; n],
        vec![group.identity()],
    );
    for a in 0..n {
        for b in 0..n {
            raw.set_compose(a, b, group.mul(a, b));
        }
    }
    let category = FiniteCategory::validate(raw).expect("group table is a lawful category");
    Groupoid::from_category(category).expect("groups are invertible")
}
