//! Finite small categories and groupoids as dense index tables.
//!
//! Objects and morphisms are numbered `0, .., n-1`. A category is four tables:
//! source and target maps on morphisms, an identity map on objects, and a
//! composition table over all morphism pairs with an explicit "undefined"
//! entry wherever source and target do not meet. Composition `c = compose(h, k)`
//! reads right to left: `k` is applied first, and `c` is defined exactly when
//! `source(h) = target(k)`.

use crate::partition::{Partition, UnionFind};
use std::fmt;
use thiserror::Error;

/// Index of an object in a [`FiniteCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub usize);

/// Index of a morphism in a [`FiniteCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorphismId(pub usize);

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for MorphismId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sentinel for an undefined composition entry in a raw table.
pub const UNDEFINED: usize = usize::MAX;

/// Unvalidated category tables, as read from a file or built by hand.
///
/// `compose` is row-major with `m * m` entries: the entry at `h * m + k` is
/// the composite of `h` after `k`, or [`UNDEFINED`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCategory {
    pub n_objects: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub identity: Vec<usize>,
    pub compose: Vec<usize>,
}

impl RawCategory {
    /// Table skeleton with every composition entry undefined.
    pub fn with_undefined_compose(
        n_objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        identity: Vec<usize>,
    ) -> RawCategory {
        let m = source.len();
        RawCategory { n_objects, source, target, identity, compose: vec![UNDEFINED; m * m] }
    }

    pub fn n_morphisms(&self) -> usize {
        self.source.len()
    }

    pub fn set_compose(&mut self, h: usize, k: usize, result: usize) {
        let m = self.n_morphisms();
        self.compose[h * m + k] = result;
    }
}

/// One broken category law, with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawViolation {
    #[error("identity of object {object} has source {src} and target {tgt}")]
    IdentityEndpoints { object: usize, src: usize, tgt: usize },
    #[error("compose({h}, {k}) is defined but source({h}) = {source_h} differs from target({k}) = {target_k}")]
    ComposeOffDomain { h: usize, k: usize, source_h: usize, target_k: usize },
    #[error("compose({h}, {k}) is undefined although source({h}) = target({k}) = {meet}")]
    ComposeMissing { h: usize, k: usize, meet: usize },
    #[error("source(compose({h}, {k})) = {got}, expected source({k}) = {expected}")]
    ComposeSource { h: usize, k: usize, got: usize, expected: usize },
    #[error("target(compose({h}, {k})) = {got}, expected target({h}) = {expected}")]
    ComposeTarget { h: usize, k: usize, got: usize, expected: usize },
    #[error("left unit law fails: compose(identity({object}), {h}) = {got}, expected {h}")]
    LeftUnit { object: usize, h: usize, got: usize },
    #[error("right unit law fails: compose({h}, identity({object})) = {got}, expected {h}")]
    RightUnit { object: usize, h: usize, got: usize },
    #[error("associativity fails at ({h}, {k}, {l}): (hk)l = {left} but h(kl) = {right}")]
    Associativity { h: usize, k: usize, l: usize, left: usize, right: usize },
}

#[derive(Debug, Error)]
pub enum CategoryError {
    /// Tables whose shapes or index ranges are broken; laws were not checked.
    #[error("malformed tables: {0}")]
    Malformed(String),
    /// Well-shaped tables that break category laws.
    #[error("{} category law violation(s), first: {}", .0.len(), .0[0])]
    Laws(Vec<LawViolation>),
}

/// Cap on recorded witnesses per law kind; a thoroughly scrambled table would
/// otherwise report cubically many associativity failures.
const MAX_VIOLATIONS_PER_LAW: usize = 100;

/// A validated finite category. Construction via [`FiniteCategory::validate`]
/// is the only way to obtain one, so every value of this type satisfies the
/// category laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    n_objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    identity: Vec<usize>,
    compose: Vec<usize>,
    is_identity: Vec<bool>,
}

impl FiniteCategory {
    /// Checks every category law on the raw tables. On failure returns every
    /// violated law with concrete witnesses (capped per law kind).
    pub fn validate(raw: RawCategory) -> Result<FiniteCategory, CategoryError> {
        let n = raw.n_objects;
        let m = raw.source.len();
        if raw.target.len() != m {
            return Err(CategoryError::Malformed(format!(
                "source table has {m} entries but target table has {}",
                raw.target.len()
            )));
        }
        if raw.identity.len() != n {
            return Err(CategoryError::Malformed(format!(
                "{n} objects but identity table has {} entries",
                raw.identity.len()
            )));
        }
        if raw.compose.len() != m * m {
            return Err(CategoryError::Malformed(format!(
                "{m} morphisms need a composition table of {} entries, got {}",
                m * m,
                raw.compose.len()
            )));
        }
        for (h, (&s, &t)) in raw.source.iter().zip(&raw.target).enumerate() {
            if s >= n || t >= n {
                return Err(CategoryError::Malformed(format!(
                    "morphism {h} has endpoints ({t}, {s}) outside the {n} objects"
                )));
            }
        }
        for (u, &i) in raw.identity.iter().enumerate() {
            if i >= m {
                return Err(CategoryError::Malformed(format!(
                    "identity of object {u} is {i}, outside the {m} morphisms"
                )));
            }
        }
        for (pos, &c) in raw.compose.iter().enumerate() {
            if c != UNDEFINED && c >= m {
                return Err(CategoryError::Malformed(format!(
                    "compose({}, {}) = {c}, outside the {m} morphisms",
                    pos / m,
                    pos % m
                )));
            }
        }

        let mut violations = Violations::new();
        let comp = |h: usize, k: usize| raw.compose[h * m + k];

        for (u, &i) in raw.identity.iter().enumerate() {
            if raw.source[i] != u || raw.target[i] != u {
                violations.push(LawViolation::IdentityEndpoints {
                    object: u,
                    src: raw.source[i],
                    tgt: raw.target[i],
                });
            }
        }
        for h in 0..m {
            for k in 0..m {
                let c = comp(h, k);
                let meet = raw.source[h] == raw.target[k];
                match (meet, c) {
                    (false, c) if c != UNDEFINED => violations.push(LawViolation::ComposeOffDomain {
                        h,
                        k,
                        source_h: raw.source[h],
                        target_k: raw.target[k],
                    }),
                    (true, UNDEFINED) => {
                        violations.push(LawViolation::ComposeMissing { h, k, meet: raw.source[h] })
                    }
                    (true, c) => {
                        if raw.source[c] != raw.source[k] {
                            violations.push(LawViolation::ComposeSource {
                                h,
                                k,
                                got: raw.source[c],
                                expected: raw.source[k],
                            });
                        }
                        if raw.target[c] != raw.target[h] {
                            violations.push(LawViolation::ComposeTarget {
                                h,
                                k,
                                got: raw.target[c],
                                expected: raw.target[h],
                            });
                        }
                    }
                    _ => {}
                }
            }
        }
        for h in 0..m {
            let it = raw.identity[raw.target[h]];
            let left = comp(it, h);
            if left != UNDEFINED && left != h {
                violations.push(LawViolation::LeftUnit { object: raw.target[h], h, got: left });
            }
            let is = raw.identity[raw.source[h]];
            let right = comp(h, is);
            if right != UNDEFINED && right != h {
                violations.push(LawViolation::RightUnit { object: raw.source[h], h, got: right });
            }
        }
        // Associativity over every triple where both sides are defined.
        for h in 0..m {
            for k in 0..m {
                if raw.source[h] != raw.target[k] {
                    continue;
                }
                let hk = comp(h, k);
                for l in 0..m {
                    if raw.source[k] != raw.target[l] {
                        continue;
                    }
                    let kl = comp(k, l);
                    if hk == UNDEFINED || kl == UNDEFINED {
                        continue; // already reported as ComposeMissing
                    }
                    let left = comp(hk, l);
                    let right = comp(h, kl);
                    if left != right && left != UNDEFINED && right != UNDEFINED {
                        violations.push(LawViolation::Associativity { h, k, l, left, right });
                    }
                }
            }
        }

        let violations = violations.into_vec();
        if !violations.is_empty() {
            return Err(CategoryError::Laws(violations));
        }
        let mut is_identity = vec![false; m];
        for &i in &raw.identity {
            is_identity[i] = true;
        }
        Ok(FiniteCategory {
            n_objects: n,
            source: raw.source,
            target: raw.target,
            identity: raw.identity,
            compose: raw.compose,
            is_identity,
        })
    }

    /// The discrete category on `n` objects: identity morphisms only.
    pub fn discrete(n: usize) -> FiniteCategory {
        let mut raw = RawCategory::with_undefined_compose(
            n,
            (0..n).collect(),
            (0..n).collect(),
            (0..n).collect(),
        );
        for u in 0..n {
            raw.set_compose(u, u, u);
        }
        FiniteCategory::validate(raw).expect("discrete category tables are lawful")
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_morphisms(&self) -> usize {
        self.source.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.n_objects).map(ObjectId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorphismId> {
        (0..self.n_morphisms()).map(MorphismId)
    }

    pub fn source(&self, h: MorphismId) -> ObjectId {
        ObjectId(self.source[h.0])
    }

    pub fn target(&self, h: MorphismId) -> ObjectId {
        ObjectId(self.target[h.0])
    }

    pub fn identity(&self, u: ObjectId) -> MorphismId {
        MorphismId(self.identity[u.0])
    }

    pub fn is_identity(&self, h: MorphismId) -> bool {
        self.is_identity[h.0]
    }

    /// The composite of `h` after `k`, defined iff `source(h) = target(k)`.
    pub fn compose(&self, h: MorphismId, k: MorphismId) -> Option<MorphismId> {
        match self.compose[h.0 * self.n_morphisms() + k.0] {
            UNDEFINED => None,
            c => Some(MorphismId(c)),
        }
    }

    /// Morphisms with target `x` and source `y`, ascending by index.
    pub fn hom_set(&self, x: ObjectId, y: ObjectId) -> Vec<MorphismId> {
        self.morphisms()
            .filter(|&h| self.target(h) == x && self.source(h) == y)
            .collect()
    }

    /// The opposite category: sources and targets swapped, composition
    /// transposed. Applying it twice gives back the original tables.
    pub fn opposite(&self) -> FiniteCategory {
        let m = self.n_morphisms();
        let mut compose = vec![UNDEFINED; m * m];
        for h in 0..m {
            for k in 0..m {
                compose[h * m + k] = self.compose[k * m + h];
            }
        }
        let raw = RawCategory {
            n_objects: self.n_objects,
            source: self.target.clone(),
            target: self.source.clone(),
            identity: self.identity.clone(),
            compose,
        };
        FiniteCategory::validate(raw).expect("opposite of a lawful category is lawful")
    }

    /// The hom-nonemptiness relation on objects together with its closure
    /// into equivalence classes. For a groupoid the relation is already an
    /// equivalence; for a general category only the closure partitions the
    /// objects, and the raw relation is kept for inspection.
    pub fn reachability_classes(&self) -> Reachability {
        let n = self.n_objects;
        let mut relates = vec![false; n * n];
        let mut uf = UnionFind::new(n);
        for h in 0..self.n_morphisms() {
            // relates[x * n + y] == true iff some morphism has target x, source y.
            relates[self.target[h] * n + self.source[h]] = true;
            uf.union(self.target[h], self.source[h]);
        }
        let symmetric = (0..n).all(|x| (0..n).all(|y| relates[x * n + y] == relates[y * n + x]));
        Reachability { n_objects: n, relates, symmetric, partition: uf.into_partition() }
    }

    /// The full subcategory spanned by the given objects: all morphisms with
    /// both endpoints inside, densely re-indexed, with translation maps back
    /// to the parent.
    pub fn full_subcategory(&self, objects: &[ObjectId]) -> Subcategory {
        let mut keep = vec![false; self.n_objects];
        for &u in objects {
            assert!(u.0 < self.n_objects, "object {u} out of range");
            keep[u.0] = true;
        }
        let object_to_parent: Vec<ObjectId> =
            self.objects().filter(|&u| keep[u.0]).collect();
        let mut new_object = vec![usize::MAX; self.n_objects];
        for (new, &old) in object_to_parent.iter().enumerate() {
            new_object[old.0] = new;
        }
        let morphism_to_parent: Vec<MorphismId> = self
            .morphisms()
            .filter(|&h| keep[self.source[h.0]] && keep[self.target[h.0]])
            .collect();
        let mut new_morphism = vec![usize::MAX; self.n_morphisms()];
        for (new, &old) in morphism_to_parent.iter().enumerate() {
            new_morphism[old.0] = new;
        }
        let m = morphism_to_parent.len();
        let mut raw = RawCategory::with_undefined_compose(
            object_to_parent.len(),
            morphism_to_parent.iter().map(|&h| new_object[self.source[h.0]]).collect(),
            morphism_to_parent.iter().map(|&h| new_object[self.target[h.0]]).collect(),
            object_to_parent.iter().map(|&u| new_morphism[self.identity[u.0]]).collect(),
        );
        for h in 0..m {
            for k in 0..m {
                if let Some(c) = self.compose(morphism_to_parent[h], morphism_to_parent[k]) {
                    raw.set_compose(h, k, new_morphism[c.0]);
                }
            }
        }
        let category =
            FiniteCategory::validate(raw).expect("full subcategory of a lawful category is lawful");
        Subcategory { category, object_to_parent, morphism_to_parent }
    }

    /// Raw tables of this category, e.g. for relabelling or serialization.
    pub fn to_raw(&self) -> RawCategory {
        RawCategory {
            n_objects: self.n_objects,
            source: self.source.clone(),
            target: self.target.clone(),
            identity: self.identity.clone(),
            compose: self.compose.clone(),
        }
    }
}

/// Free-function form of [`FiniteCategory::validate`].
pub fn validate_category(raw: RawCategory) -> Result<FiniteCategory, CategoryError> {
    FiniteCategory::validate(raw)
}

/// Result of [`FiniteCategory::reachability_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    n_objects: usize,
    relates: Vec<bool>,
    /// Whether the raw relation is already symmetric.
    pub symmetric: bool,
    /// Objects partitioned by the equivalence closure of the relation.
    pub partition: Partition,
}

impl Reachability {
    /// Whether some morphism has target `x` and source `y` (the raw,
    /// possibly non-symmetric relation).
    pub fn relates(&self, x: ObjectId, y: ObjectId) -> bool {
        self.relates[x.0 * self.n_objects + y.0]
    }
}

/// Result of [`FiniteCategory::full_subcategory`].
#[derive(Debug, Clone)]
pub struct Subcategory {
    pub category: FiniteCategory,
    /// For each new object, the object of the parent category it came from.
    pub object_to_parent: Vec<ObjectId>,
    /// For each new morphism, the morphism of the parent category it came from.
    pub morphism_to_parent: Vec<MorphismId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("morphism {morphism} has no two-sided inverse")]
    NotInvertible { morphism: usize },
}

/// A finite groupoid: a category in which every morphism has a two-sided
/// inverse. Units are the identity morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    category: FiniteCategory,
    inverse: Vec<usize>,
}

impl Groupoid {
    /// Checks that every morphism is invertible; the refusal names the first
    /// morphism without a two-sided inverse.
    pub fn from_category(category: FiniteCategory) -> Result<Groupoid, GroupoidError> {
        let m = category.n_morphisms();
        let mut inverse = vec![usize::MAX; m];
        for h in 0..m {
            let it = category.identity[category.target[h]];
            let is = category.identity[category.source[h]];
            let found = (0..m).find(|&k| {
                category.compose[h * m + k] == it && category.compose[k * m + h] == is
            });
            match found {
                Some(k) => inverse[h] = k,
                None => return Err(GroupoidError::NotInvertible { morphism: h }),
            }
        }
        Ok(Groupoid { category, inverse })
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn into_category(self) -> FiniteCategory {
        self.category
    }

    pub fn invert(&self, h: MorphismId) -> MorphismId {
        MorphismId(self.inverse[h.0])
    }

    pub fn n_objects(&self) -> usize {
        self.category.n_objects()
    }

    pub fn n_morphisms(&self) -> usize {
        self.category.n_morphisms()
    }

    pub fn source(&self, h: MorphismId) -> ObjectId {
        self.category.source(h)
    }

    pub fn target(&self, h: MorphismId) -> ObjectId {
        self.category.target(h)
    }

    pub fn identity(&self, u: ObjectId) -> MorphismId {
        self.category.identity(u)
    }

    pub fn compose(&self, h: MorphismId, k: MorphismId) -> Option<MorphismId> {
        self.category.compose(h, k)
    }

    pub fn hom_set(&self, x: ObjectId, y: ObjectId) -> Vec<MorphismId> {
        self.category.hom_set(x, y)
    }
}

/// One broken functor law, with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorViolation {
    #[error("object map has {got} entries, expected {expected}")]
    ObjectMapLength { got: usize, expected: usize },
    #[error("morphism map has {got} entries, expected {expected}")]
    MorphismMapLength { got: usize, expected: usize },
    #[error("object map sends {object} to {got}, outside the {n} codomain objects")]
    ObjectOutOfRange { object: usize, got: usize, n: usize },
    #[error("morphism map sends {morphism} to {got}, outside the {m} codomain morphisms")]
    MorphismOutOfRange { morphism: usize, got: usize, m: usize },
    #[error("identity of object {object} is not sent to the identity of its image")]
    Identity { object: usize },
    #[error("source of morphism {morphism} is not preserved")]
    Source { morphism: usize },
    #[error("target of morphism {morphism} is not preserved")]
    Target { morphism: usize },
    #[error("composition not preserved at ({h}, {k})")]
    Composition { h: usize, k: usize },
}

/// Checks that `(object_map, morphism_map)` is a functor from `a` to `b`:
/// identities, sources, targets and all defined composites are preserved.
pub fn verify_functor(
    a: &FiniteCategory,
    b: &FiniteCategory,
    object_map: &[usize],
    morphism_map: &[usize],
) -> Result<(), FunctorViolation> {
    if object_map.len() != a.n_objects() {
        return Err(FunctorViolation::ObjectMapLength {
            got: object_map.len(),
            expected: a.n_objects(),
        });
    }
    if morphism_map.len() != a.n_morphisms() {
        return Err(FunctorViolation::MorphismMapLength {
            got: morphism_map.len(),
            expected: a.n_morphisms(),
        });
    }
    for (u, &v) in object_map.iter().enumerate() {
        if v >= b.n_objects() {
            return Err(FunctorViolation::ObjectOutOfRange { object: u, got: v, n: b.n_objects() });
        }
    }
    for (h, &k) in morphism_map.iter().enumerate() {
        if k >= b.n_morphisms() {
            return Err(FunctorViolation::MorphismOutOfRange {
                morphism: h,
                got: k,
                m: b.n_morphisms(),
            });
        }
    }
    for u in a.objects() {
        if morphism_map[a.identity(u).0] != b.identity(ObjectId(object_map[u.0])).0 {
            return Err(FunctorViolation::Identity { object: u.0 });
        }
    }
    for h in a.morphisms() {
        let fh = MorphismId(morphism_map[h.0]);
        if b.source(fh).0 != object_map[a.source(h).0] {
            return Err(FunctorViolation::Source { morphism: h.0 });
        }
        if b.target(fh).0 != object_map[a.target(h).0] {
            return Err(FunctorViolation::Target { morphism: h.0 });
        }
    }
    for h in a.morphisms() {
        for k in a.morphisms() {
            if let Some(c) = a.compose(h, k) {
                let fc = b.compose(MorphismId(morphism_map[h.0]), MorphismId(morphism_map[k.0]));
                if fc != Some(MorphismId(morphism_map[c.0])) {
                    return Err(FunctorViolation::Composition { h: h.0, k: k.0 });
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessViolation {
    #[error("object map is not a bijection")]
    ObjectsNotBijective,
    #[error("morphism map is not a bijection")]
    MorphismsNotBijective,
    #[error("forward direction is not a functor: {0}")]
    Forward(FunctorViolation),
    #[error("inverse direction is not a functor: {0}")]
    Backward(FunctorViolation),
}

/// An isomorphism certificate between two categories: bijections on objects
/// and morphisms that are functors in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl IsoWitness {
    pub fn identity(c: &FiniteCategory) -> IsoWitness {
        IsoWitness {
            object_map: (0..c.n_objects()).collect(),
            morphism_map: (0..c.n_morphisms()).collect(),
        }
    }

    /// Checks the full isomorphism property from `a` to `b`.
    pub fn verify(&self, a: &FiniteCategory, b: &FiniteCategory) -> Result<(), WitnessViolation> {
        let obj_inv = invert_bijection(&self.object_map, b.n_objects())
            .ok_or(WitnessViolation::ObjectsNotBijective)?;
        let mor_inv = invert_bijection(&self.morphism_map, b.n_morphisms())
            .ok_or(WitnessViolation::MorphismsNotBijective)?;
        if self.object_map.len() != a.n_objects() || self.morphism_map.len() != a.n_morphisms() {
            return Err(WitnessViolation::ObjectsNotBijective);
        }
        verify_functor(a, b, &self.object_map, &self.morphism_map)
            .map_err(WitnessViolation::Forward)?;
        verify_functor(b, a, &obj_inv, &mor_inv).map_err(WitnessViolation::Backward)?;
        Ok(())
    }

    /// The inverse witness. The maps must be bijections (e.g. verified).
    pub fn inverted(&self) -> IsoWitness {
        IsoWitness {
            object_map: invert_bijection(&self.object_map, self.object_map.len())
                .expect("object map must be a bijection"),
            morphism_map: invert_bijection(&self.morphism_map, self.morphism_map.len())
                .expect("morphism map must be a bijection"),
        }
    }
}

fn invert_bijection(map: &[usize], codomain: usize) -> Option<Vec<usize>> {
    if map.len() != codomain {
        return None;
    }
    let mut inv = vec![usize::MAX; codomain];
    for (x, &y) in map.iter().enumerate() {
        if y >= codomain || inv[y] != usize::MAX {
            return None;
        }
        inv[y] = x;
    }
    Some(inv)
}

/// Bounded collector that caps witnesses per law kind.
struct Violations {
    v: Vec<LawViolation>,
    counts: [usize; 8],
}

impl Violations {
    fn new() -> Violations {
        Violations { v: Vec::new(), counts: [0; 8] }
    }

    fn push(&mut self, violation: LawViolation) {
        let kind = match violation {
            LawViolation::IdentityEndpoints { .. } => 0,
            LawViolation::ComposeOffDomain { .. } => 1,
            LawViolation::ComposeMissing { .. } => 2,
            LawViolation::ComposeSource { .. } => 3,
            LawViolation::ComposeTarget { .. } => 4,
            LawViolation::LeftUnit { .. } => 5,
            LawViolation::RightUnit { .. } => 6,
            LawViolation::Associativity { .. } => 7,
        };
        if self.counts[kind] < MAX_VIOLATIONS_PER_LAW {
            self.counts[kind] += 1;
            self.v.push(violation);
        }
    }

    fn into_vec(self) -> Vec<LawViolation> {
        self.v
    }
}
