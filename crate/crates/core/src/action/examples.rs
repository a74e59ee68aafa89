//! Actions built from classical data: a group acting on a set (the
//! transformation groupoid) and a group acting on an equivalence relation.

use thiserror::Error;

use crate::bundle::{one_object_groupoid, standard_groupoid, GroupBundle, StandardGroupoid, StandardMorphism};
use crate::category::{FiniteCategory, Groupoid, MorphismId};
use crate::group::FiniteGroup;
use crate::partition::Partition;

use super::products::{semidirect_groupoid, SemidirectProduct};
use super::{validate_action, ActionError, ActionTables, LeftAction};

#[derive(Debug, Error)]
pub enum GroupActionError {
    #[error("malformed action table: {0}")]
    Malformed(String),
    #[error("the identity element moves point {x}")]
    IdentityMoves { x: usize },
    #[error("action is not a homomorphism at (g={g}, h={h}, x={x}): acting twice differs from acting by the product")]
    NotHomomorphism { g: usize, h: usize, x: usize },
}

/// A validated action of a finite group on a finite set: the identity fixes
/// every point and acting twice equals acting by the product.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: FiniteGroup,
    n_points: usize,
    table: Vec<usize>,
}

impl GroupAction {
    /// Validates `rows[g][x]`, one row per group element.
    pub fn new(
        group: FiniteGroup,
        n_points: usize,
        rows: &[Vec<usize>],
    ) -> Result<GroupAction, GroupActionError> {
        if rows.len() != group.order() {
            return Err(GroupActionError::Malformed(format!(
                "{} rows for a group of order {}",
                rows.len(),
                group.order()
            )));
        }
        let mut table = Vec::with_capacity(group.order() * n_points);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != n_points {
                return Err(GroupActionError::Malformed(format!(
                    "row {g} has {} entries, expected {n_points}",
                    row.len()
                )));
            }
            for (x, &y) in row.iter().enumerate() {
                if y >= n_points {
                    return Err(GroupActionError::Malformed(format!(
                        "point ({g}, {x}) maps to {y}, outside the {n_points} points"
                    )));
                }
                table.push(y);
            }
        }
        let action = GroupAction { group, n_points, table };
        for x in 0..n_points {
            if action.apply(action.group.identity(), x) != x {
                return Err(GroupActionError::IdentityMoves { x });
            }
        }
        for g in 0..action.group.order() {
            for h in 0..action.group.order() {
                let gh = action.group.mul(g, h);
                for x in 0..n_points {
                    if action.apply(g, action.apply(h, x)) != action.apply(gh, x) {
                        return Err(GroupActionError::NotHomomorphism { g, h, x });
                    }
                }
            }
        }
        Ok(action)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.table[g * self.n_points + x]
    }

    /// The table rows, one per group element.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.group.order())
            .map(|g| (0..self.n_points).map(|x| self.apply(g, x)).collect())
            .collect()
    }
}

/// A group action turned into a left action on the discrete category of its
/// points, together with the resulting semi-direct product groupoid.
#[derive(Debug, Clone)]
pub struct TransformationGroupoid {
    pub action: LeftAction,
    pub product: SemidirectProduct,
    pub groupoid: Groupoid,
}

/// Builds the transformation groupoid of a group action: the acted category
/// is the set of points with only identity morphisms, the acting category is
/// the group with a single object.
pub fn transformation_groupoid(action: &GroupAction) -> TransformationGroupoid {
    let h = FiniteCategory::discrete(action.n_points());
    let g = one_object_groupoid(action.group()).into_category();
    let tables = ActionTables::from_fn(g, h, vec![0; action.n_points()], |gm, hm| {
        // morphisms of a discrete category are its objects
        MorphismId(action.apply(gm.0, hm.0))
    });
    let left = validate_action(tables).expect("a group action on points is a lawful action");
    let product = semidirect_groupoid(&left).expect("the acting category is a groupoid");
    let groupoid = product.to_groupoid().expect("the product of groupoids is a groupoid");
    debug_assert_eq!(groupoid.n_morphisms(), action.n_points() * action.group().order());
    TransformationGroupoid { action: left, product, groupoid }
}

/// A group action on the groupoid of an equivalence relation it respects.
#[derive(Debug, Clone)]
pub struct RelationAction {
    pub action: LeftAction,
    /// The relation groupoid: one morphism per related pair of points.
    pub groupoid: StandardGroupoid,
}

/// Builds the left action of a group on the relation groupoid of a partition.
/// Refuses, naming a witness pair, if some group element maps two equivalent
/// points to inequivalent ones.
pub fn relation_action(
    action: &GroupAction,
    classes: &Partition,
) -> Result<RelationAction, ActionError> {
    if classes.points() != action.n_points() {
        return Err(ActionError::Malformed(format!(
            "partition covers {} points but the action moves {}",
            classes.points(),
            action.n_points()
        )));
    }
    for g in 0..action.group().order() {
        for class in classes.classes() {
            let u = class[0];
            for &v in &class[1..] {
                if classes.class_of(action.apply(g, u)) != classes.class_of(action.apply(g, v)) {
                    return Err(ActionError::RelationNotRespected { g, u, v });
                }
            }
        }
    }

    let fibers = vec![FiniteGroup::trivial(); classes.num_classes()];
    let bundle = GroupBundle::new(classes.clone(), fibers).expect("one fiber per class");
    let relation = standard_groupoid(&bundle);
    let g_cat = one_object_groupoid(action.group()).into_category();
    let n = classes.points();
    let tables = ActionTables::from_fn(
        g_cat,
        relation.groupoid.category().clone(),
        vec![0; n],
        |gm, hm| {
            let triple = relation.morphisms[hm.0];
            relation
                .index_of(StandardMorphism {
                    target: action.apply(gm.0, triple.target),
                    element: 0,
                    source: action.apply(gm.0, triple.source),
                })
                .expect("respected relations keep pairs related")
        },
    );
    let left = validate_action(tables).expect("a respected relation yields a lawful action");
    Ok(RelationAction { action: left, groupoid: relation })
}
