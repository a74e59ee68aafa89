//! Left actions of a small category on a small category, given extensionally.
//!
//! An action `(phi, alpha)` of `G` on `H` is an object map `phi : H-objects ->
//! G-objects` and a table assigning to certain pairs `(g, h)` a morphism
//! `alpha_g(h)` of `H`. The table is defined exactly on the action domain:
//! pairs with `source(g) = phi(target(h)) = phi(source(h))`. Validation checks
//! the action axioms exhaustively and reports each failure with a witness
//! tuple; a [`LeftAction`] can only be obtained from a table that passes.

mod examples;
mod products;

pub use examples::{
    relation_action, transformation_groupoid, GroupAction, GroupActionError, RelationAction,
    TransformationGroupoid,
};
pub use products::{
    gphi_category, inner_action, opposite_action, psi_isomorphism, restricted_semidirect,
    semidirect_groupoid, semidirect_shared_units, semigroup_bundle_action, semigroup_bundle_of,
    tilde_category, GPhiProduct, InnerAction, PsiIsomorphism, PsiVariant, RestrictedSemidirect,
    SemidirectProduct, TildeCategory, WideSubcategory,
};

use crate::category::{FiniteCategory, Groupoid, MorphismId, ObjectId};
use thiserror::Error;

/// Sentinel for "no entry" in a raw action table.
pub const NO_ENTRY: usize = usize::MAX;

/// One broken action law, with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionViolation {
    #[error("table defines alpha_{g}({h}) although (g={g}, h={h}) is outside the action domain")]
    OffDomain { g: usize, h: usize },
    #[error("table has no entry for the domain pair (g={g}, h={h})")]
    Missing { g: usize, h: usize },
    #[error("table defines alpha_{g}({h}) twice")]
    Duplicate { g: usize, h: usize },
    #[error("unit-endomorphism law fails: alpha_{g} of the unit at object {u} is not an endomorphism")]
    UnitEndo { g: usize, u: usize },
    #[error("source compatibility fails at (g={g}, h={h}): alpha_{g} of the source unit does not sit at source(alpha_{g}({h}))")]
    SourceCompat { g: usize, h: usize },
    #[error("target compatibility fails at (g={g}, h={h}): alpha_{g} of the target unit does not sit at target(alpha_{g}({h}))")]
    TargetCompat { g: usize, h: usize },
    #[error("unit anchoring fails at (g={g}, u={u}): phi of the acted unit is not target(g)")]
    UnitAnchor { g: usize, u: usize },
    #[error("identity law fails at h={h}: acting by the identity at phi(target(h)) does not fix h")]
    IdentityLaw { h: usize },
    #[error("compatibility fails at (g'={g2}, g={g1}, h={h}): alpha_{{g'}}(alpha_{{g}}(h)) != alpha_{{g'g}}(h)")]
    Compat { g2: usize, g1: usize, h: usize },
    #[error("compatibility is undefined at (g'={g2}, g={g1}, h={h}): alpha_{{g}}(h) leaves the domain of alpha_{{g'}}")]
    CompatUndefined { g2: usize, g1: usize, h: usize },
    #[error("distribution over composition fails at (g={g}, h'={h2}, h={h1}): alpha_{g}(h'h) != alpha_{g}(h') alpha_{g}(h)")]
    Distrib { g: usize, h2: usize, h1: usize },
    #[error("distribution over composition is undefined at (g={g}, h'={h2}, h={h1}): the images do not compose")]
    DistribUndefined { g: usize, h2: usize, h1: usize },
    #[error("endpoint anchoring fails at (g={g}, h={h}): phi of the endpoints of alpha_{g}({h}) is not target(g)")]
    Anchoring { g: usize, h: usize },
    #[error("unit image law fails at (g={g}, u={u}): alpha_{g} of the unit at {u} is not a unit")]
    UnitImageNotUnit { g: usize, u: usize },
    #[error("unit phi law fails at (g={g}, u={u}): phi(alpha_{g}(u)) != target(g)")]
    UnitPhi { g: usize, u: usize },
}

#[derive(Debug, Error)]
pub enum ActionError {
    #[error("malformed action tables: {0}")]
    Malformed(String),
    #[error("{0}")]
    RequiresGroupoid(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{} action law violation(s), first: {}", .0.len(), .0[0])]
    Laws(Vec<ActionViolation>),
    #[error("constructed product is not a category: {0}")]
    ProductInvalid(#[from] crate::category::CategoryError),
    #[error("alpha_{g} of the unit at object {object} is not a unit, so the restricted composition is undefined")]
    NotUnitImage { g: usize, object: usize },
    #[error("relation is not respected: objects {u} and {v} are equivalent but their images under g={g} are not")]
    RelationNotRespected { g: usize, u: usize, v: usize },
}

/// The action domain: pairs `(g, h)` with `source(g) = phi(target(h)) =
/// phi(source(h))`, in lexicographic `(g, h)` order.
pub fn action_domain(
    g: &FiniteCategory,
    h: &FiniteCategory,
    phi: &[usize],
) -> Vec<(MorphismId, MorphismId)> {
    let mut pairs = Vec::new();
    for gm in g.morphisms() {
        for hm in h.morphisms() {
            if in_domain(g, h, phi, gm, hm) {
                pairs.push((gm, hm));
            }
        }
    }
    pairs
}

fn in_domain(
    g: &FiniteCategory,
    h: &FiniteCategory,
    phi: &[usize],
    gm: MorphismId,
    hm: MorphismId,
) -> bool {
    let s = g.source(gm).0;
    s == phi[h.target(hm).0] && s == phi[h.source(hm).0]
}

/// Unvalidated action tables. `alpha` is row-major over `(g, h)` morphism
/// pairs with [`NO_ENTRY`] off the action domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTables {
    pub g: FiniteCategory,
    pub h: FiniteCategory,
    pub phi: Vec<usize>,
    pub alpha: Vec<usize>,
}

impl ActionTables {
    /// Fills the table by evaluating `f` on every domain pair.
    pub fn from_fn(
        g: FiniteCategory,
        h: FiniteCategory,
        phi: Vec<usize>,
        f: impl Fn(MorphismId, MorphismId) -> MorphismId,
    ) -> ActionTables {
        let mh = h.n_morphisms();
        let mut alpha = vec![NO_ENTRY; g.n_morphisms() * mh];
        for gm in g.morphisms() {
            for hm in h.morphisms() {
                if in_domain(&g, &h, &phi, gm, hm) {
                    alpha[gm.0 * mh + hm.0] = f(gm, hm).0;
                }
            }
        }
        ActionTables { g, h, phi, alpha }
    }

    /// Builds the table from explicit `(g, h, result)` entries. Every entry
    /// must lie on the action domain, no pair may repeat, and every domain
    /// pair must be covered.
    pub fn from_entries(
        g: FiniteCategory,
        h: FiniteCategory,
        phi: Vec<usize>,
        entries: &[(usize, usize, usize)],
    ) -> Result<ActionTables, ActionError> {
        check_phi(&g, &h, &phi)?;
        let mh = h.n_morphisms();
        let mut alpha = vec![NO_ENTRY; g.n_morphisms() * mh];
        for &(gm, hm, result) in entries {
            if gm >= g.n_morphisms() || hm >= h.n_morphisms() {
                return Err(ActionError::Malformed(format!(
                    "entry ({gm}, {hm}) is outside the morphism ranges"
                )));
            }
            if result >= mh {
                return Err(ActionError::Malformed(format!(
                    "alpha_{gm}({hm}) = {result}, outside the {mh} morphisms of the acted category"
                )));
            }
            if !in_domain(&g, &h, &phi, MorphismId(gm), MorphismId(hm)) {
                return Err(ActionError::Laws(vec![ActionViolation::OffDomain { g: gm, h: hm }]));
            }
            if alpha[gm * mh + hm] != NO_ENTRY {
                return Err(ActionError::Laws(vec![ActionViolation::Duplicate { g: gm, h: hm }]));
            }
            alpha[gm * mh + hm] = result;
        }
        for (gm, hm) in action_domain(&g, &h, &phi) {
            if alpha[gm.0 * mh + hm.0] == NO_ENTRY {
                return Err(ActionError::Laws(vec![ActionViolation::Missing {
                    g: gm.0,
                    h: hm.0,
                }]));
            }
        }
        Ok(ActionTables { g, h, phi, alpha })
    }

    pub fn lookup(&self, gm: MorphismId, hm: MorphismId) -> Option<MorphismId> {
        match self.alpha[gm.0 * self.h.n_morphisms() + hm.0] {
            NO_ENTRY => None,
            r => Some(MorphismId(r)),
        }
    }

    /// The defined entries as `(g, h, result)` triples in `(g, h)` order.
    pub fn entries(&self) -> Vec<(usize, usize, usize)> {
        let mh = self.h.n_morphisms();
        self.alpha
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r != NO_ENTRY)
            .map(|(pos, &r)| (pos / mh, pos % mh, r))
            .collect()
    }
}

fn check_phi(g: &FiniteCategory, h: &FiniteCategory, phi: &[usize]) -> Result<(), ActionError> {
    if phi.len() != h.n_objects() {
        return Err(ActionError::Malformed(format!(
            "phi has {} entries but the acted category has {} objects",
            phi.len(),
            h.n_objects()
        )));
    }
    if let Some((u, &v)) = phi.iter().enumerate().find(|&(_, &v)| v >= g.n_objects()) {
        return Err(ActionError::Malformed(format!(
            "phi({u}) = {v}, outside the {} objects of the acting category",
            g.n_objects()
        )));
    }
    Ok(())
}

/// A validated left action. Every axiom has been checked exhaustively over
/// the table.
#[derive(Debug, Clone)]
pub struct LeftAction {
    tables: ActionTables,
    domain: Vec<(MorphismId, MorphismId)>,
    g_inverse: Option<Vec<usize>>,
    h_inverse: Option<Vec<usize>>,
}

impl LeftAction {
    pub fn g(&self) -> &FiniteCategory {
        &self.tables.g
    }

    pub fn h(&self) -> &FiniteCategory {
        &self.tables.h
    }

    pub fn phi(&self) -> &[usize] {
        &self.tables.phi
    }

    pub fn phi_of(&self, u: ObjectId) -> ObjectId {
        ObjectId(self.tables.phi[u.0])
    }

    pub fn tables(&self) -> &ActionTables {
        &self.tables
    }

    /// `alpha_g(h)`, defined exactly on the action domain.
    pub fn apply(&self, gm: MorphismId, hm: MorphismId) -> Option<MorphismId> {
        self.tables.lookup(gm, hm)
    }

    pub fn domain(&self) -> &[(MorphismId, MorphismId)] {
        &self.domain
    }

    pub fn g_is_groupoid(&self) -> bool {
        self.g_inverse.is_some()
    }

    pub fn h_is_groupoid(&self) -> bool {
        self.h_inverse.is_some()
    }

    /// Inverse of a morphism of the acting category, if it is a groupoid.
    pub fn g_invert(&self, gm: MorphismId) -> Option<MorphismId> {
        self.g_inverse.as_ref().map(|inv| MorphismId(inv[gm.0]))
    }

    /// Inverse of a morphism of the acted category, if it is a groupoid.
    pub fn h_invert(&self, hm: MorphismId) -> Option<MorphismId> {
        self.h_inverse.as_ref().map(|inv| MorphismId(inv[hm.0]))
    }
}

const MAX_VIOLATIONS: usize = 200;

struct Checker<'a> {
    t: &'a ActionTables,
    violations: Vec<ActionViolation>,
}

impl<'a> Checker<'a> {
    fn push(&mut self, v: ActionViolation) {
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(v);
        }
    }

    fn alpha(&self, gm: MorphismId, hm: MorphismId) -> Option<MorphismId> {
        self.t.lookup(gm, hm)
    }

    fn in_domain(&self, gm: MorphismId, hm: MorphismId) -> bool {
        in_domain(&self.t.g, &self.t.h, &self.t.phi, gm, hm)
    }

    /// Totality: defined exactly on the domain, entries in range.
    fn check_shape(&mut self) -> Result<(), ActionError> {
        let mh = self.t.h.n_morphisms();
        if self.t.alpha.len() != self.t.g.n_morphisms() * mh {
            return Err(ActionError::Malformed(format!(
                "alpha table has {} entries, expected {}",
                self.t.alpha.len(),
                self.t.g.n_morphisms() * mh
            )));
        }
        for gm in self.t.g.morphisms() {
            for hm in self.t.h.morphisms() {
                let entry = self.t.alpha[gm.0 * mh + hm.0];
                if entry != NO_ENTRY && entry >= mh {
                    return Err(ActionError::Malformed(format!(
                        "alpha_{gm}({hm}) = {entry}, outside the {mh} morphisms"
                    )));
                }
                match (self.in_domain(gm, hm), entry == NO_ENTRY) {
                    (true, true) => self.push(ActionViolation::Missing { g: gm.0, h: hm.0 }),
                    (false, false) => self.push(ActionViolation::OffDomain { g: gm.0, h: hm.0 }),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// The unit-endomorphism, source/target compatibility, unit anchoring and
    /// endpoint anchoring laws, quantified over the domain.
    fn check_pointwise(&mut self) {
        let (g, h, phi) = (&self.t.g, &self.t.h, &self.t.phi);
        for gm in g.morphisms() {
            for hm in h.morphisms() {
                if !self.in_domain(gm, hm) {
                    continue;
                }
                let Some(a) = self.alpha(gm, hm) else { continue };
                if h.is_identity(hm) {
                    let u = h.source(hm).0;
                    if h.source(a) != h.target(a) {
                        self.push(ActionViolation::UnitEndo { g: gm.0, u });
                    }
                    if phi[h.source(a).0] != g.target(gm).0 {
                        self.push(ActionViolation::UnitAnchor { g: gm.0, u });
                    }
                }
                // images of the source and target units must frame the image
                if let Some(au) = self.alpha(gm, h.identity(h.source(hm))) {
                    if h.source(au) != h.source(a) {
                        self.push(ActionViolation::SourceCompat { g: gm.0, h: hm.0 });
                    }
                }
                if let Some(au) = self.alpha(gm, h.identity(h.target(hm))) {
                    if h.target(au) != h.target(a) {
                        self.push(ActionViolation::TargetCompat { g: gm.0, h: hm.0 });
                    }
                }
                // derived well-definedness: both endpoints of the image land
                // over target(g)
                let t = g.target(gm).0;
                if phi[h.source(a).0] != t || phi[h.target(a).0] != t {
                    self.push(ActionViolation::Anchoring { g: gm.0, h: hm.0 });
                }
            }
        }
    }

    /// Groupoid-form pointwise laws: images of units are units, placed at the
    /// endpoints of the image, over target(g).
    fn check_pointwise_prime(&mut self) {
        let (g, h, phi) = (&self.t.g, &self.t.h, &self.t.phi);
        for gm in g.morphisms() {
            for hm in h.morphisms() {
                if !self.in_domain(gm, hm) {
                    continue;
                }
                let Some(a) = self.alpha(gm, hm) else { continue };
                if h.is_identity(hm) {
                    let u = h.source(hm).0;
                    if !h.is_identity(a) {
                        self.push(ActionViolation::UnitImageNotUnit { g: gm.0, u });
                        continue;
                    }
                    if phi[h.source(a).0] != g.target(gm).0 {
                        self.push(ActionViolation::UnitPhi { g: gm.0, u });
                    }
                }
                if let Some(au) = self.alpha(gm, h.identity(h.source(hm))) {
                    if au != h.identity(h.source(a)) {
                        self.push(ActionViolation::SourceCompat { g: gm.0, h: hm.0 });
                    }
                }
                if let Some(au) = self.alpha(gm, h.identity(h.target(hm))) {
                    if au != h.identity(h.target(a)) {
                        self.push(ActionViolation::TargetCompat { g: gm.0, h: hm.0 });
                    }
                }
            }
        }
    }

    /// The identity law: acting by the identity of phi(target(h)) fixes h.
    fn check_identity_law(&mut self) {
        let (g, h, phi) = (&self.t.g, &self.t.h, &self.t.phi);
        for hm in h.morphisms() {
            if phi[h.source(hm).0] != phi[h.target(hm).0] {
                continue; // h never appears in the domain
            }
            let g0 = g.identity(ObjectId(phi[h.target(hm).0]));
            if let Some(a) = self.alpha(g0, hm) {
                if a != hm {
                    self.push(ActionViolation::IdentityLaw { h: hm.0 });
                }
            }
        }
    }

    /// Compatibility: acting by a composite equals acting twice.
    fn check_compat(&mut self) {
        let (g, h) = (&self.t.g, &self.t.h);
        let mut hs_by_g: Vec<Vec<MorphismId>> = vec![Vec::new(); g.n_morphisms()];
        for gm in g.morphisms() {
            for hm in h.morphisms() {
                if self.in_domain(gm, hm) {
                    hs_by_g[gm.0].push(hm);
                }
            }
        }
        for g2 in g.morphisms() {
            for g1 in g.morphisms() {
                let Some(g21) = g.compose(g2, g1) else { continue };
                for i in 0..hs_by_g[g1.0].len() {
                    let hm = hs_by_g[g1.0][i];
                    let Some(a1) = self.alpha(g1, hm) else { continue };
                    if !self.in_domain(g2, a1) {
                        self.push(ActionViolation::CompatUndefined {
                            g2: g2.0,
                            g1: g1.0,
                            h: hm.0,
                        });
                        continue;
                    }
                    let Some(a2) = self.alpha(g2, a1) else { continue };
                    let Some(a21) = self.alpha(g21, hm) else { continue };
                    if a2 != a21 {
                        self.push(ActionViolation::Compat { g2: g2.0, g1: g1.0, h: hm.0 });
                    }
                }
            }
        }
    }

    /// Distribution over composition in the acted category.
    fn check_distrib(&mut self) {
        let (g, h) = (&self.t.g, &self.t.h);
        for h2 in h.morphisms() {
            for h1 in h.morphisms() {
                let Some(h21) = h.compose(h2, h1) else { continue };
                for gm in g.morphisms() {
                    if !self.in_domain(gm, h2) || !self.in_domain(gm, h1) {
                        continue;
                    }
                    let Some(a2) = self.alpha(gm, h2) else { continue };
                    let Some(a1) = self.alpha(gm, h1) else { continue };
                    let Some(a21) = self.alpha(gm, h21) else { continue };
                    match h.compose(a2, a1) {
                        None => self.push(ActionViolation::DistribUndefined {
                            g: gm.0,
                            h2: h2.0,
                            h1: h1.0,
                        }),
                        Some(c) => {
                            if c != a21 {
                                self.push(ActionViolation::Distrib {
                                    g: gm.0,
                                    h2: h2.0,
                                    h1: h1.0,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
}

fn groupoid_inverses(c: &FiniteCategory) -> Option<Vec<usize>> {
    Groupoid::from_category(c.clone())
        .ok()
        .map(|g| c.morphisms().map(|h| g.invert(h).0).collect())
}

/// Validates the action axioms on the table and returns the action, or every
/// broken law with witnesses.
pub fn validate_action(tables: ActionTables) -> Result<LeftAction, ActionError> {
    check_phi(&tables.g, &tables.h, &tables.phi)?;
    let mut checker = Checker { t: &tables, violations: Vec::new() };
    checker.check_shape()?;
    checker.check_pointwise();
    checker.check_identity_law();
    checker.check_compat();
    checker.check_distrib();
    let violations = checker.violations;
    if !violations.is_empty() {
        return Err(ActionError::Laws(violations));
    }
    let domain = action_domain(&tables.g, &tables.h, &tables.phi);
    let g_inverse = groupoid_inverses(&tables.g);
    let h_inverse = groupoid_inverses(&tables.h);
    Ok(LeftAction { tables, domain, g_inverse, h_inverse })
}

/// Validates the action using the reformulated unit laws available when the
/// acting category is a groupoid, and returns the induced action on objects
/// (the acted category replaced by the discrete category on its objects).
///
/// A table passes this check exactly when it passes [`validate_action`].
pub fn validate_action_groupoid_form(tables: &ActionTables) -> Result<LeftAction, ActionError> {
    check_phi(&tables.g, &tables.h, &tables.phi)?;
    if groupoid_inverses(&tables.g).is_none() {
        return Err(ActionError::RequiresGroupoid(
            "the groupoid-form validation requires the acting category to be a groupoid",
        ));
    }
    let mut checker = Checker { t: tables, violations: Vec::new() };
    checker.check_shape()?;
    checker.check_pointwise_prime();
    checker.check_identity_law();
    checker.check_compat();
    checker.check_distrib();
    let violations = checker.violations;
    if !violations.is_empty() {
        return Err(ActionError::Laws(violations));
    }

    // Induced action on objects: units map to units, so the table restricts
    // to the discrete category on the acted objects.
    let h0 = FiniteCategory::discrete(tables.h.n_objects());
    let h = &tables.h;
    let object_tables = ActionTables::from_fn(
        tables.g.clone(),
        h0,
        tables.phi.clone(),
        |gm, um| {
            let unit = tables
                .lookup(gm, h.identity(ObjectId(um.0)))
                .expect("domain pairs are covered");
            MorphismId(h.source(unit).0)
        },
    );
    validate_action(object_tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::{one_object_groupoid, standard_groupoid, GroupBundle};
    use crate::group::FiniteGroup;
    use crate::partition::Partition;

    pub(crate) fn pair_groupoid_category(n: usize) -> FiniteCategory {
        standard_groupoid(
            &GroupBundle::new(
                Partition::from_classes(n, &[(0..n).collect()]).unwrap(),
                vec![FiniteGroup::trivial()],
            )
            .unwrap(),
        )
        .groupoid
        .into_category()
    }

    /// Z2 acting on Z3 by inversion, as one-object categories.
    pub(crate) fn z2_on_z3_by_inversion() -> ActionTables {
        let g = one_object_groupoid(&FiniteGroup::cyclic(2)).into_category();
        let h = one_object_groupoid(&FiniteGroup::cyclic(3)).into_category();
        ActionTables::from_fn(g, h, vec![0], |gm, hm| {
            if gm.0 == 0 {
                hm
            } else {
                MorphismId((3 - hm.0) % 3)
            }
        })
    }

    #[test]
    fn action_domain_requires_matching_phi() {
        let g = FiniteCategory::discrete(2);
        let h = pair_groupoid_category(2);
        // phi separates the two objects, so only endomorphisms are acted on
        let dom = action_domain(&g, &h, &[0, 1]);
        for (_, hm) in &dom {
            assert_eq!(h.source(*hm), h.target(*hm));
        }
        assert_eq!(dom.len(), 2);
        // a constant phi puts every (unit, morphism) pair in the domain
        let dom = action_domain(&g, &h, &[0, 0]);
        assert_eq!(dom.len(), 4);
    }

    #[test]
    fn objects_outside_the_image_of_phi_are_never_acted_on() {
        let g = FiniteCategory::discrete(2);
        let h = FiniteCategory::discrete(1);
        let dom = action_domain(&g, &h, &[1]);
        assert_eq!(dom, vec![(MorphismId(1), MorphismId(0))]);
    }

    #[test]
    fn inversion_action_of_z2_on_z3_validates() {
        let action = validate_action(z2_on_z3_by_inversion()).unwrap();
        assert!(action.g_is_groupoid());
        assert_eq!(action.domain().len(), 6);
        assert_eq!(action.apply(MorphismId(1), MorphismId(1)), Some(MorphismId(2)));
    }

    #[test]
    fn corrupting_one_entry_is_detected() {
        let mut tables = z2_on_z3_by_inversion();
        // alpha_z(1) = 2; corrupt it to 1
        let mh = tables.h.n_morphisms();
        tables.alpha[1 * mh + 1] = 1;
        let err = validate_action(tables).unwrap_err();
        assert!(matches!(err, ActionError::Laws(_)));
    }

    #[test]
    fn off_domain_entry_is_reported() {
        let mut tables = z2_on_z3_by_inversion();
        tables.h = FiniteCategory::discrete(2);
        tables.phi = vec![0, 0];
        tables.alpha = vec![NO_ENTRY; 2 * 2];
        // fill the domain correctly, then stray off it
        for gm in 0..2 {
            for hm in 0..2 {
                tables.alpha[gm * 2 + hm] = hm;
            }
        }
        let action = validate_action(tables.clone());
        assert!(action.is_ok());
        // a second acting object that phi never hits
        let g2 = FiniteCategory::discrete(2);
        tables.g = g2;
        tables.alpha = vec![NO_ENTRY; 2 * 2];
        tables.alpha[0 * 2 + 0] = 0;
        tables.alpha[0 * 2 + 1] = 1;
        tables.alpha[1 * 2 + 0] = 0; // off domain: phi never reaches object 1
        let err = validate_action(tables).unwrap_err();
        let ActionError::Laws(violations) = err else { panic!("expected law violations") };
        assert!(violations.contains(&ActionViolation::OffDomain { g: 1, h: 0 }));
    }

    #[test]
    fn missing_domain_entry_is_reported() {
        let mut tables = z2_on_z3_by_inversion();
        let mh = tables.h.n_morphisms();
        tables.alpha[0 * mh + 2] = NO_ENTRY;
        let err = validate_action(tables).unwrap_err();
        let ActionError::Laws(violations) = err else { panic!("expected law violations") };
        assert!(violations.contains(&ActionViolation::Missing { g: 0, h: 2 }));
    }

    #[test]
    fn identity_law_violation_is_reported() {
        let g = one_object_groupoid(&FiniteGroup::cyclic(2)).into_category();
        let h = one_object_groupoid(&FiniteGroup::cyclic(3)).into_category();
        // swap under the unit as well: breaks the identity law
        let tables = ActionTables::from_fn(g, h, vec![0], |_, hm| MorphismId((3 - hm.0) % 3));
        let err = validate_action(tables).unwrap_err();
        let ActionError::Laws(violations) = err else { panic!("expected law violations") };
        assert!(violations.iter().any(|v| matches!(v, ActionViolation::IdentityLaw { .. })));
    }

    #[test]
    fn groupoid_form_agrees_on_valid_tables() {
        let tables = z2_on_z3_by_inversion();
        let object_action = validate_action_groupoid_form(&tables).unwrap();
        assert!(validate_action(tables).is_ok());
        // one object on each side: the object action is trivial
        assert_eq!(object_action.domain().len(), 2);
    }

    #[test]
    fn groupoid_form_agrees_on_corrupted_tables() {
        let mut tables = z2_on_z3_by_inversion();
        let mh = tables.h.n_morphisms();
        tables.alpha[1 * mh + 2] = 2;
        assert!(validate_action(tables.clone()).is_err());
        assert!(validate_action_groupoid_form(&tables).is_err());
    }

    #[test]
    fn groupoid_form_requires_a_groupoid() {
        let g = crate::category::FiniteCategory::validate({
            // the idempotent two-element monoid
            let mut raw = crate::category::RawCategory::with_undefined_compose(
                1,
                vec![0, 0],
                vec![0, 0],
                vec![0],
            );
            raw.set_compose(0, 0, 0);
            raw.set_compose(0, 1, 1);
            raw.set_compose(1, 0, 1);
            raw.set_compose(1, 1, 1);
            raw
        })
        .unwrap();
        let h = FiniteCategory::discrete(1);
        let tables = ActionTables::from_fn(g, h, vec![0], |_, hm| hm);
        assert!(matches!(
            validate_action_groupoid_form(&tables),
            Err(ActionError::RequiresGroupoid(_))
        ));
    }

    #[test]
    fn from_entries_round_trips() {
        let tables = z2_on_z3_by_inversion();
        let entries = tables.entries();
        let rebuilt = ActionTables::from_entries(
            tables.g.clone(),
            tables.h.clone(),
            tables.phi.clone(),
            &entries,
        )
        .unwrap();
        assert_eq!(rebuilt, tables);
    }

    #[test]
    fn from_entries_rejects_off_domain_duplicate_and_missing() {
        let t = z2_on_z3_by_inversion();
        let err = ActionTables::from_entries(t.g.clone(), t.h.clone(), t.phi.clone(), &[])
            .unwrap_err();
        assert!(matches!(err, ActionError::Laws(v) if v == vec![ActionViolation::Missing { g: 0, h: 0 }]));
        let mut entries = t.entries();
        entries.push(entries[0]);
        let err = ActionTables::from_entries(t.g.clone(), t.h.clone(), t.phi.clone(), &entries)
            .unwrap_err();
        assert!(matches!(err, ActionError::Laws(v) if matches!(v[0], ActionViolation::Duplicate { .. })));
    }
}
