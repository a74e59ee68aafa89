//! Product categories built from a left action: the semi-direct product
//! `H x_alpha G`, its shared-unit variant, the companion structure on the
//! action domain `G x^phi H`, the restricted semi-direct product through the
//! category `G-tilde`, and the inner action of a groupoid on itself.

use std::collections::HashMap;

use crate::category::{
    verify_functor, FiniteCategory, Groupoid, GroupoidError, IsoWitness, MorphismId, ObjectId,
    RawCategory,
};

use super::{validate_action, ActionError, ActionTables, LeftAction};

/// The semi-direct product `H x_alpha G`: morphisms are pairs `(h, g)` with
/// `target(g) = phi(source(h)) = phi(target(h))`, indexed lexicographically
/// by `(h, g)`.
#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    category: FiniteCategory,
    pairs: Vec<(MorphismId, MorphismId)>,
    index: HashMap<(usize, usize), usize>,
}

impl SemidirectProduct {
    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    /// All carrier pairs `(h, g)` in morphism order.
    pub fn pairs(&self) -> &[(MorphismId, MorphismId)] {
        &self.pairs
    }

    /// The `(h, g)` pair of a product morphism.
    pub fn pair(&self, p: MorphismId) -> (MorphismId, MorphismId) {
        self.pairs[p.0]
    }

    /// The product morphism for a carrier pair, if it is in the carrier.
    pub fn pair_index(&self, h: MorphismId, g: MorphismId) -> Option<MorphismId> {
        self.index.get(&(h.0, g.0)).copied().map(MorphismId)
    }

    /// The product as a groupoid, when every pair is invertible.
    pub fn to_groupoid(&self) -> Result<Groupoid, GroupoidError> {
        Groupoid::from_category(self.category.clone())
    }
}

fn pair_carrier(
    a: &LeftAction,
    accept: impl Fn(MorphismId, MorphismId) -> bool,
) -> (Vec<(MorphismId, MorphismId)>, HashMap<(usize, usize), usize>) {
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for hm in a.h().morphisms() {
        for gm in a.g().morphisms() {
            if accept(hm, gm) {
                index.insert((hm.0, gm.0), pairs.len());
                pairs.push((hm, gm));
            }
        }
    }
    (pairs, index)
}

/// Builds `H x_alpha G` for a groupoid `G` acting on a category `H`:
/// `source(h, g)` is the object under `alpha` of `g`-inverse at `source(h)`,
/// `target(h, g) = target(h)`, and `(h, g)(h', g') = (h alpha_g(h'), gg')`.
/// The result is validated; when `H` is a groupoid so is the product.
pub fn semidirect_groupoid(a: &LeftAction) -> Result<SemidirectProduct, ActionError> {
    if !a.g_is_groupoid() {
        return Err(ActionError::RequiresGroupoid(
            "the semi-direct product requires the acting category to be a groupoid",
        ));
    }
    let (g, h, phi) = (a.g(), a.h(), a.phi());
    let (pairs, index) = pair_carrier(a, |hm, gm| {
        let t = g.target(gm).0;
        t == phi[h.source(hm).0] && t == phi[h.target(hm).0]
    });

    // source(h, g) = the object alpha_{g^{-1}}(source(h)), computed on the
    // source unit; for a groupoid G the image of a unit is a unit.
    let source_of = |&(hm, gm): &(MorphismId, MorphismId)| -> ObjectId {
        let ginv = a.g_invert(gm).expect("acting category is a groupoid");
        let au = a
            .apply(ginv, h.identity(h.source(hm)))
            .expect("carrier pairs put source units in the action domain");
        debug_assert!(h.is_identity(au), "unit image of a groupoid action must be a unit");
        h.source(au)
    };

    let m = pairs.len();
    let source: Vec<usize> = pairs.iter().map(|p| source_of(p).0).collect();
    let target: Vec<usize> = pairs.iter().map(|&(hm, _)| h.target(hm).0).collect();
    // units embedded as u -> (u, phi(u))
    let identity: Vec<usize> = h
        .objects()
        .map(|u| {
            *index
                .get(&(h.identity(u).0, g.identity(ObjectId(phi[u.0])).0))
                .expect("unit pairs lie in the carrier")
        })
        .collect();

    let mut raw =
        RawCategory::with_undefined_compose(h.n_objects(), source.clone(), target.clone(), identity);
    for p in 0..m {
        let (hp, gp) = pairs[p];
        for q in 0..m {
            let (hq, gq) = pairs[q];
            // The composability condition can be stated two ways: through the
            // constructed source/target, or directly as source(alpha of
            // g-inverse applied to the whole of h) = target(h'). Both must
            // select the same pairs.
            let by_objects = source[p] == target[q];
            let ginv = a.g_invert(gp).expect("acting category is a groupoid");
            let twisted = a
                .apply(ginv, hp)
                .expect("carrier pairs lie in the action domain");
            let by_twist = h.source(twisted) == h.target(hq);
            assert_eq!(
                by_objects, by_twist,
                "the two composability conditions must agree on ({p}, {q})"
            );
            if !by_objects {
                continue;
            }
            let moved = a
                .apply(gp, hq)
                .expect("composable pairs put the right factor in the domain");
            let hh = h.compose(hp, moved).expect("twisted factors compose");
            let gg = g.compose(gp, gq).expect("composable pairs have composable g parts");
            let c = *index.get(&(hh.0, gg.0)).expect("composites stay in the carrier");
            raw.set_compose(p, q, c);
        }
    }
    let category =
        FiniteCategory::validate(raw).expect("the semi-direct product satisfies the category laws");
    Ok(SemidirectProduct { category, pairs, index })
}

/// Builds the shared-unit semi-direct product for `phi = id` on a common
/// object set: carrier `target(g) = source(h) = target(h)`, `source(h, g) =
/// source(g)`, `target(h, g) = target(h)`, composition when `source(g) =
/// target(h')`. The acting category need not be a groupoid; the category laws
/// of the result are checked and reported rather than assumed.
pub fn semidirect_shared_units(a: &LeftAction) -> Result<SemidirectProduct, ActionError> {
    let (g, h, phi) = (a.g(), a.h(), a.phi());
    if h.n_objects() != g.n_objects() || phi.iter().enumerate().any(|(u, &v)| u != v) {
        return Err(ActionError::Precondition(
            "the shared-unit product requires a common object set and phi = id".into(),
        ));
    }
    let (pairs, index) = pair_carrier(a, |hm, gm| {
        g.target(gm) == h.source(hm) && g.target(gm) == h.target(hm)
    });

    let m = pairs.len();
    let source: Vec<usize> = pairs.iter().map(|&(_, gm)| g.source(gm).0).collect();
    let target: Vec<usize> = pairs.iter().map(|&(hm, _)| h.target(hm).0).collect();
    let identity: Vec<usize> = h
        .objects()
        .map(|u| {
            *index
                .get(&(h.identity(u).0, g.identity(u).0))
                .expect("unit pairs lie in the carrier")
        })
        .collect();

    let mut raw =
        RawCategory::with_undefined_compose(h.n_objects(), source.clone(), target.clone(), identity);
    for p in 0..m {
        let (hp, gp) = pairs[p];
        for q in 0..m {
            let (hq, _gq) = pairs[q];
            if source[p] != target[q] {
                continue;
            }
            let moved = a
                .apply(gp, hq)
                .expect("composable pairs put the right factor in the domain");
            // replacement for the groupoid-side endpoint identity: the moved
            // factor must end where h starts
            assert_eq!(
                h.target(moved),
                h.source(hp),
                "target(alpha_g(h')) must equal source(h) on composable pairs"
            );
            let hh = h.compose(hp, moved).expect("twisted factors compose");
            let gg = g
                .compose(gp, pairs[q].1)
                .expect("composable pairs have composable g parts");
            let c = *index.get(&(hh.0, gg.0)).expect("composites stay in the carrier");
            raw.set_compose(p, q, c);
        }
    }
    let category = FiniteCategory::validate(raw)?;
    Ok(SemidirectProduct { category, pairs, index })
}

/// The companion category on the action domain `G x^phi H`: morphisms are
/// the domain pairs `(g, h)` in lexicographic `(g, h)` order, `source(g, h) =
/// source(h)`, `target(g, h) = target(alpha_g(h))`, and `(g', h')(g, h) =
/// (g'g, alpha_{g^{-1}}(h') h)`.
#[derive(Debug, Clone)]
pub struct GPhiProduct {
    category: FiniteCategory,
    pairs: Vec<(MorphismId, MorphismId)>,
    index: HashMap<(usize, usize), usize>,
}

impl GPhiProduct {
    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    /// All domain pairs `(g, h)` in morphism order.
    pub fn pairs(&self) -> &[(MorphismId, MorphismId)] {
        &self.pairs
    }

    pub fn pair(&self, p: MorphismId) -> (MorphismId, MorphismId) {
        self.pairs[p.0]
    }

    pub fn pair_index(&self, g: MorphismId, h: MorphismId) -> Option<MorphismId> {
        self.index.get(&(g.0, h.0)).copied().map(MorphismId)
    }
}

/// Builds the category structure on the action domain. Requires a groupoid
/// `G` (the composition formula twists by an inverse).
pub fn gphi_category(a: &LeftAction) -> Result<GPhiProduct, ActionError> {
    if !a.g_is_groupoid() {
        return Err(ActionError::RequiresGroupoid(
            "the domain category requires the acting category to be a groupoid",
        ));
    }
    let (g, h, phi) = (a.g(), a.h(), a.phi());
    let pairs: Vec<(MorphismId, MorphismId)> = a.domain().to_vec();
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &(gm, hm))| ((gm.0, hm.0), i)).collect();

    let m = pairs.len();
    let source: Vec<usize> = pairs.iter().map(|&(_, hm)| h.source(hm).0).collect();
    let target: Vec<usize> = pairs
        .iter()
        .map(|&(gm, hm)| {
            let a_gh = a.apply(gm, hm).expect("domain pairs are covered");
            h.target(a_gh).0
        })
        .collect();
    let identity: Vec<usize> = h
        .objects()
        .map(|u| {
            *index
                .get(&(g.identity(ObjectId(phi[u.0])).0, h.identity(u).0))
                .expect("unit pairs lie in the domain")
        })
        .collect();

    let mut raw =
        RawCategory::with_undefined_compose(h.n_objects(), source.clone(), target.clone(), identity);
    for p in 0..m {
        let (gp, hp) = pairs[p];
        for q in 0..m {
            let (gq, hq) = pairs[q];
            if source[p] != target[q] {
                continue;
            }
            let gg = g.compose(gp, gq).expect("composable pairs have composable g parts");
            let ginv = a.g_invert(gq).expect("acting category is a groupoid");
            let twisted = a.apply(ginv, hp).expect("left factor twists into the domain");
            let hh = h.compose(twisted, hq).expect("twisted factors compose");
            let c = *index.get(&(gg.0, hh.0)).expect("composites stay in the domain");
            raw.set_compose(p, q, c);
        }
    }
    let category =
        FiniteCategory::validate(raw).expect("the domain category satisfies the category laws");
    Ok(GPhiProduct { category, pairs, index })
}

/// The same action on the opposite of the acted category. Applying it twice
/// returns the original tables.
pub fn opposite_action(a: &LeftAction) -> LeftAction {
    let tables = ActionTables {
        g: a.g().clone(),
        h: a.h().opposite(),
        phi: a.phi().to_vec(),
        alpha: a.tables().alpha.clone(),
    };
    validate_action(tables).expect("the opposite of a lawful action is lawful")
}

/// Which duality witness to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiVariant {
    /// `(h-bar, g) -> (g^{-1}, h)`, for any acted category.
    Category,
    /// `(h, g) -> (g^{-1}, h^{-1})`, for an acted groupoid.
    Groupoid,
}

/// The duality between a semi-direct product and the category on the action
/// domain. The underlying map reverses composition, so the verified witness
/// runs from the opposite of the product category.
#[derive(Debug, Clone)]
pub struct PsiIsomorphism {
    /// The action the product was built from: the input action for the
    /// groupoid variant, its opposite action for the category variant.
    pub product_action: LeftAction,
    pub product: SemidirectProduct,
    /// Opposite of the product category: the domain of `witness`.
    pub product_opposite: FiniteCategory,
    pub gphi: GPhiProduct,
    /// Verified isomorphism from `product_opposite` to `gphi.category()`.
    pub witness: IsoWitness,
}

/// Builds and verifies the duality witness for the chosen variant.
pub fn psi_isomorphism(a: &LeftAction, variant: PsiVariant) -> Result<PsiIsomorphism, ActionError> {
    if !a.g_is_groupoid() {
        return Err(ActionError::RequiresGroupoid(
            "the duality requires the acting category to be a groupoid",
        ));
    }
    let gphi = gphi_category(a)?;
    let (product_action, morphism_of) = match variant {
        PsiVariant::Category => {
            let op = opposite_action(a);
            let map = |hm: MorphismId, gm: MorphismId, act: &LeftAction| {
                let ginv = act.g_invert(gm).expect("acting category is a groupoid");
                (ginv, hm)
            };
            (op, map as fn(MorphismId, MorphismId, &LeftAction) -> (MorphismId, MorphismId))
        }
        PsiVariant::Groupoid => {
            if !a.h_is_groupoid() {
                return Err(ActionError::RequiresGroupoid(
                    "the groupoid-variant duality requires the acted category to be a groupoid",
                ));
            }
            let map = |hm: MorphismId, gm: MorphismId, act: &LeftAction| {
                let ginv = act.g_invert(gm).expect("acting category is a groupoid");
                let hinv = act.h_invert(hm).expect("acted category is a groupoid");
                (ginv, hinv)
            };
            (
                a.clone(),
                map as fn(MorphismId, MorphismId, &LeftAction) -> (MorphismId, MorphismId),
            )
        }
    };
    let product = semidirect_groupoid(&product_action)?;
    let morphism_map: Vec<usize> = product
        .pairs()
        .iter()
        .map(|&(hm, gm)| {
            // morphism indices agree between a category and its opposite, so
            // the input action's h-indices name morphisms of the opposite too
            let (gi, hi) = morphism_of(hm, gm, a);
            gphi.pair_index(gi, hi).expect("images lie in the domain carrier").0
        })
        .collect();
    let witness = IsoWitness {
        object_map: (0..product.category().n_objects()).collect(),
        morphism_map,
    };
    let product_opposite = product.category().opposite();
    witness
        .verify(&product_opposite, gphi.category())
        .expect("the duality map is an isomorphism from the opposite product");
    Ok(PsiIsomorphism { product_action, product, product_opposite, gphi, witness })
}

/// The category `G-tilde` of action-compatible morphisms over the acted
/// objects: morphisms `(g, u, v)` with `g` from `phi(v)` to `phi(u)` such
/// that `alpha_g` maps the unit at `v` to the unit at `u`.
#[derive(Debug, Clone)]
pub struct TildeCategory {
    category: FiniteCategory,
    /// For each morphism, the triple `(g, u, v)` with target `u`, source `v`.
    triples: Vec<(MorphismId, ObjectId, ObjectId)>,
    /// The object map of the canonical functor into `G` (a copy of phi).
    j_objects: Vec<usize>,
    /// The morphism map of the canonical functor into `G`.
    j_morphisms: Vec<usize>,
    index: HashMap<(usize, usize), usize>,
}

impl TildeCategory {
    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn triples(&self) -> &[(MorphismId, ObjectId, ObjectId)] {
        &self.triples
    }

    pub fn triple(&self, t: MorphismId) -> (MorphismId, ObjectId, ObjectId) {
        self.triples[t.0]
    }

    /// The morphism with underlying `g` and source `v`, if any.
    pub fn index_of(&self, g: MorphismId, v: ObjectId) -> Option<MorphismId> {
        self.index.get(&(g.0, v.0)).copied().map(MorphismId)
    }

    pub fn j_objects(&self) -> &[usize] {
        &self.j_objects
    }

    pub fn j_morphisms(&self) -> &[usize] {
        &self.j_morphisms
    }
}

/// Builds `G-tilde` and the canonical functor `j` into the acting category.
/// Requires every acted unit image to be a unit; for a non-groupoid acting
/// category this is a genuine restriction and is checked, with refusal
/// naming the failing pair.
pub fn tilde_category(a: &LeftAction) -> Result<TildeCategory, ActionError> {
    let (g, h, phi) = (a.g(), a.h(), a.phi());
    // every unit image must itself be a unit
    for &(gm, hm) in a.domain() {
        if h.is_identity(hm) {
            let image = a.apply(gm, hm).expect("domain pairs are covered");
            if !h.is_identity(image) {
                return Err(ActionError::NotUnitImage { g: gm.0, object: h.source(hm).0 });
            }
        }
    }

    let mut triples = Vec::new();
    let mut index = HashMap::new();
    for gm in g.morphisms() {
        for v in h.objects() {
            if g.source(gm).0 != phi[v.0] {
                continue;
            }
            let image = a
                .apply(gm, h.identity(v))
                .expect("unit pairs over source(g) lie in the domain");
            let u = h.source(image); // image is a unit, checked above
            debug_assert_eq!(phi[u.0], g.target(gm).0);
            index.insert((gm.0, v.0), triples.len());
            triples.push((gm, u, v));
        }
    }

    let m = triples.len();
    let source: Vec<usize> = triples.iter().map(|&(_, _, v)| v.0).collect();
    let target: Vec<usize> = triples.iter().map(|&(_, u, _)| u.0).collect();
    let identity: Vec<usize> = h
        .objects()
        .map(|u| {
            *index
                .get(&(g.identity(ObjectId(phi[u.0])).0, u.0))
                .expect("identity triples exist at every object")
        })
        .collect();

    let mut raw =
        RawCategory::with_undefined_compose(h.n_objects(), source.clone(), target.clone(), identity);
    for p in 0..m {
        let (gp, _, _) = triples[p];
        for q in 0..m {
            let (gq, uq, vq) = triples[q];
            if source[p] != uq.0 {
                continue;
            }
            let gg = g.compose(gp, gq).expect("compatible triples have composable g parts");
            let c = *index
                .get(&(gg.0, vq.0))
                .expect("composition must not escape the compatible morphisms");
            assert_eq!(triples[c].1 .0, target[p], "composite triple must keep the outer target");
            raw.set_compose(p, q, c);
        }
    }
    let category = FiniteCategory::validate(raw)
        .expect("the compatible-morphism category satisfies the category laws");

    let j_objects: Vec<usize> = phi.to_vec();
    let j_morphisms: Vec<usize> = triples.iter().map(|&(gm, _, _)| gm.0).collect();
    verify_functor(&category, g, &j_objects, &j_morphisms)
        .expect("the canonical map into the acting category is a functor");

    Ok(TildeCategory { category, triples, j_objects, j_morphisms, index })
}

/// The restricted semi-direct product: the shared-unit product of `H` with
/// `G-tilde` acting through the canonical functor.
#[derive(Debug, Clone)]
pub struct RestrictedSemidirect {
    pub tilde: TildeCategory,
    /// The induced action of `G-tilde` on the acted category, with `phi = id`.
    pub action: LeftAction,
    pub product: SemidirectProduct,
}

pub fn restricted_semidirect(a: &LeftAction) -> Result<RestrictedSemidirect, ActionError> {
    let tilde = tilde_category(a)?;
    let h = a.h().clone();
    let tables = ActionTables::from_fn(
        tilde.category().clone(),
        h,
        (0..a.h().n_objects()).collect(),
        |tm, hm| {
            let (gm, _, _) = tilde.triple(tm);
            a.apply(gm, hm).expect("compatible pairs lie in the original domain")
        },
    );
    let action = validate_action(tables).expect("the induced action is lawful");
    let product = semidirect_shared_units(&action)?;
    Ok(RestrictedSemidirect { tilde, action, product })
}

/// A wide subcategory: every object kept, morphisms restricted to a
/// composition-closed subset, with the inclusion map back to the parent.
#[derive(Debug, Clone)]
pub struct WideSubcategory {
    pub category: FiniteCategory,
    /// For each new morphism, the parent morphism it came from.
    pub morphism_to_parent: Vec<MorphismId>,
    parent_to_sub: Vec<usize>,
}

impl WideSubcategory {
    /// The morphism of the subcategory a parent morphism maps to, if kept.
    pub fn position_of_parent(&self, m: MorphismId) -> Option<MorphismId> {
        match self.parent_to_sub[m.0] {
            usize::MAX => None,
            p => Some(MorphismId(p)),
        }
    }
}

/// Restricts a category to a composition-closed set of morphisms containing
/// all identities. Panics if the set is not closed.
pub(crate) fn wide_subcategory(parent: &FiniteCategory, keep: &[bool]) -> WideSubcategory {
    assert_eq!(keep.len(), parent.n_morphisms());
    let morphism_to_parent: Vec<MorphismId> =
        parent.morphisms().filter(|&m| keep[m.0]).collect();
    let mut parent_to_sub = vec![usize::MAX; parent.n_morphisms()];
    for (new, &old) in morphism_to_parent.iter().enumerate() {
        parent_to_sub[old.0] = new;
    }
    let m = morphism_to_parent.len();
    let mut raw = RawCategory::with_undefined_compose(
        parent.n_objects(),
        morphism_to_parent.iter().map(|&h| parent.source(h).0).collect(),
        morphism_to_parent.iter().map(|&h| parent.target(h).0).collect(),
        parent
            .objects()
            .map(|u| {
                let i = parent_to_sub[parent.identity(u).0];
                assert_ne!(i, usize::MAX, "identities must be kept");
                i
            })
            .collect(),
    );
    for p in 0..m {
        for q in 0..m {
            if let Some(c) = parent.compose(morphism_to_parent[p], morphism_to_parent[q]) {
                let c = parent_to_sub[c.0];
                assert_ne!(c, usize::MAX, "kept morphisms must compose to kept morphisms");
                raw.set_compose(p, q, c);
            }
        }
    }
    let category = FiniteCategory::validate(raw)
        .expect("a closed wide subcategory satisfies the category laws");
    WideSubcategory { category, morphism_to_parent, parent_to_sub }
}

/// The wide subcategory of endomorphisms: all objects, morphisms with equal
/// source and target.
pub fn semigroup_bundle_of(c: &FiniteCategory) -> WideSubcategory {
    let keep: Vec<bool> = c.morphisms().map(|m| c.source(m) == c.target(m)).collect();
    wide_subcategory(c, &keep)
}

/// Restricts an action to the endomorphism subcategory of the acted
/// category, returning the induced validated action and the subcategory.
pub fn semigroup_bundle_action(a: &LeftAction) -> (LeftAction, WideSubcategory) {
    let bundle = semigroup_bundle_of(a.h());
    let tables = ActionTables::from_fn(
        a.g().clone(),
        bundle.category.clone(),
        a.phi().to_vec(),
        |gm, hm| {
            let parent = bundle.morphism_to_parent[hm.0];
            let image = a.apply(gm, parent).expect("restricted pairs lie in the domain");
            bundle
                .position_of_parent(image)
                .expect("endomorphisms map to endomorphisms")
        },
    );
    let action = validate_action(tables).expect("the restricted action is lawful");
    (action, bundle)
}

/// A groupoid acting on itself by conjugation, its semi-direct product, the
/// canonical homomorphism back to the groupoid, and that homomorphism's
/// kernel with a certified description.
#[derive(Debug, Clone)]
pub struct InnerAction {
    pub action: LeftAction,
    pub product: SemidirectProduct,
    /// For each product morphism `(h, g)`, the composite `h g`: a verified
    /// homomorphism from the product to the groupoid.
    pub psi: Vec<MorphismId>,
    /// Product morphisms sent to units, as a wide subcategory of the product.
    pub kernel: WideSubcategory,
    /// The endomorphism bundle of the groupoid.
    pub endos: WideSubcategory,
    /// Verified isomorphism from the kernel onto the endomorphism bundle.
    pub kernel_witness: IsoWitness,
}

/// Builds the inner (conjugation) action `alpha_g(h) = g h g^{-1}` of a
/// groupoid on itself, with `phi` the identity.
pub fn inner_action(g: &Groupoid) -> InnerAction {
    let cat = g.category().clone();
    let tables = ActionTables::from_fn(cat.clone(), cat.clone(), (0..cat.n_objects()).collect(), |gm, hm| {
        let gh = g.compose(gm, hm).expect("domain pairs conjugate");
        g.compose(gh, g.invert(gm)).expect("domain pairs conjugate")
    });
    let action = validate_action(tables).expect("conjugation is a lawful action");
    let product = semidirect_groupoid(&action).expect("the acting category is a groupoid");

    // the canonical homomorphism (h, g) -> h g
    let psi: Vec<MorphismId> = product
        .pairs()
        .iter()
        .map(|&(hm, gm)| g.compose(hm, gm).expect("carrier pairs compose"))
        .collect();
    let psi_raw: Vec<usize> = psi.iter().map(|m| m.0).collect();
    let object_map: Vec<usize> = (0..product.category().n_objects()).collect();
    verify_functor(product.category(), g.category(), &object_map, &psi_raw)
        .expect("the canonical map is a homomorphism");

    let keep: Vec<bool> = psi.iter().map(|&m| cat.is_identity(m)).collect();
    let kernel = wide_subcategory(product.category(), &keep);
    let endos = semigroup_bundle_of(g.category());

    // kernel elements are the pairs (g^{-1}, g) over endomorphisms g; the
    // second component projects them isomorphically onto the endomorphisms
    let kernel_witness = IsoWitness {
        object_map: (0..kernel.category.n_objects()).collect(),
        morphism_map: kernel
            .morphism_to_parent
            .iter()
            .map(|&p| {
                let (_, gm) = product.pair(p);
                endos
                    .position_of_parent(gm)
                    .expect("kernel members carry endomorphisms")
                    .0
            })
            .collect(),
    };
    kernel_witness
        .verify(&kernel.category, &endos.category)
        .expect("the kernel projects isomorphically onto the endomorphism bundle");

    InnerAction { action, product, psi, kernel, endos, kernel_witness }
}
