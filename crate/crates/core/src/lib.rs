//! Finite small categories and groupoids, given by explicit tables.
//!
//! The crate provides:
//!
//! - validated [`category::FiniteCategory`] and [`category::Groupoid`] values
//!   with hom-sets, opposites, reachability classes, and full subcategories;
//! - [`bundle`]: bundles of groups over a partition, the standard groupoid
//!   they generate, and the standardization of a groupoid whose reachability
//!   relation and isotropy groups are recovered up to isomorphism;
//! - [`action`]: left actions of one category on another with exhaustive
//!   axiom checking, the semi-direct product groupoids and their variants,
//!   dualities, the inner action of a groupoid on itself, transformation
//!   groupoids of group actions, and actions on equivalence relations;
//! - [`iso`]: budgeted backtracking isomorphism search producing verifiable
//!   certificates, orbit/stabilizer decompositions, and the cross-check that
//!   two group actions have isomorphic transformation groupoids exactly when
//!   their orbits match with isomorphic stabilizers.
//!
//! Everything is eager and total: validated values exist only after every
//! law has been checked, and violations carry concrete witnesses.
//!
//! ```
//! use smallcat::action::{transformation_groupoid, GroupAction};
//! use smallcat::group::FiniteGroup;
//! use smallcat::iso::{find_isomorphism, IsoOutcome, DEFAULT_BUDGET};
//!
//! # fn main() -> Result<(), smallcat::action::GroupActionError> {
//! let swap = GroupAction::new(FiniteGroup::cyclic(2), 2, &[vec![0, 1], vec![1, 0]])?;
//! let gpd = transformation_groupoid(&swap).groupoid; // 2 objects, 4 morphisms
//! match find_isomorphism(gpd.category(), gpd.category(), DEFAULT_BUDGET) {
//!     IsoOutcome::Isomorphic(w) => assert_eq!(w.object_map, vec![0, 1]),
//!     _ => unreachable!(),
//! }
//! # Ok(())
//! # }
//! ```

pub mod action;
pub mod bundle;
pub mod category;
pub mod group;
pub mod iso;
pub mod partition;

pub use action::{
    gphi_category, inner_action, opposite_action, psi_isomorphism, relation_action,
    restricted_semidirect, semidirect_groupoid, semidirect_shared_units, semigroup_bundle_action,
    semigroup_bundle_of, tilde_category, transformation_groupoid, validate_action,
    validate_action_groupoid_form, ActionError, ActionTables, ActionViolation, GroupAction,
    LeftAction,
};
pub use bundle::{
    bundle_from_groupoid, one_object_groupoid, standard_groupoid, standardization_iso,
    ChoicePolicy, Decomposition, GroupBundle, StandardGroupoid, StandardMorphism,
};
pub use category::{
    validate_category, CategoryError, FiniteCategory, Groupoid, IsoWitness, LawViolation,
    MorphismId, ObjectId, RawCategory,
};
pub use group::{group_isomorphic, FiniteGroup, GroupError, GroupIso};
pub use iso::{
    corollary_check, find_isomorphism, orbits_and_stabilizers, CorollaryReport, IsoOutcome,
    OrbitDecomposition, OrbitMatching, DEFAULT_BUDGET,
};
pub use partition::Partition;
