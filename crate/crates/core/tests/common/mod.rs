//! Seeded generators shared by the integration suites. Everything is
//! deterministic in the seed so failures replay exactly.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use smallcat::action::{
    inner_action, opposite_action, relation_action, restricted_semidirect, transformation_groupoid,
    validate_action, ActionTables, GroupAction, LeftAction,
};
use smallcat::bundle::{one_object_groupoid, standard_groupoid, GroupBundle};
use smallcat::category::{FiniteCategory, Groupoid, RawCategory, UNDEFINED};
use smallcat::group::FiniteGroup;
use smallcat::partition::Partition;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- groups --

/// All permutations of `{0, .., n-1}` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// `p` after `q` as functions: `(p . q)(x) = p(q(x))`.
pub fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

/// The symmetric group on `n` letters as a multiplication table over the
/// lexicographically ordered permutations.
pub fn symmetric_group(n: usize) -> FiniteGroup {
    let perms = permutations(n);
    let position = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let rows: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| position(&compose_perm(p, q))).collect())
        .collect();
    FiniteGroup::from_table(&rows).expect("permutation composition is a group")
}

/// Small groups used throughout the randomized sweeps.
pub fn group_pool() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::cyclic(5),
        FiniteGroup::cyclic(6),
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        symmetric_group(3),
    ]
}

pub fn random_group(rng: &mut ChaCha8Rng) -> FiniteGroup {
    let pool = group_pool();
    pool[rng.gen_range(0..pool.len())].clone()
}

// ------------------------------------------------- bundles and groupoids --

pub fn random_partition(rng: &mut ChaCha8Rng, points: usize) -> Partition {
    let labels: Vec<usize> = (0..points).map(|_| rng.gen_range(0..points)).collect();
    Partition::from_labels(&labels)
}

/// A bundle with at most `max_points` objects, fibers of order at most
/// `max_fiber`, and a standard groupoid of at most `max_size` morphisms.
pub fn random_bundle(
    rng: &mut ChaCha8Rng,
    max_points: usize,
    max_fiber: usize,
    max_size: usize,
) -> GroupBundle {
    let pool: Vec<FiniteGroup> =
        group_pool().into_iter().filter(|g| g.order() <= max_fiber).collect();
    loop {
        let points = rng.gen_range(1..=max_points);
        let partition = random_partition(rng, points);
        let fibers: Vec<FiniteGroup> = (0..partition.num_classes())
            .map(|_| pool[rng.gen_range(0..pool.len())].clone())
            .collect();
        let bundle = GroupBundle::new(partition, fibers).expect("one fiber per class");
        if bundle.standard_size() <= max_size {
            return bundle;
        }
    }
}

/// Relabels a category by independent random permutations of its objects and
/// morphisms. The result is isomorphic to, but rarely equal to, the input.
pub fn relabel_category(rng: &mut ChaCha8Rng, c: &FiniteCategory) -> FiniteCategory {
    let raw = c.to_raw();
    let n = raw.n_objects;
    let m = raw.source.len();
    let mut obj: Vec<usize> = (0..n).collect();
    obj.shuffle(rng);
    let mut mor: Vec<usize> = (0..m).collect();
    mor.shuffle(rng);
    let mut source = vec![0; m];
    let mut target = vec![0; m];
    let mut identity = vec![0; n];
    let mut compose = vec![UNDEFINED; m * m];
    for h in 0..m {
        source[mor[h]] = obj[raw.source[h]];
        target[mor[h]] = obj[raw.target[h]];
    }
    for u in 0..n {
        identity[obj[u]] = mor[raw.identity[u]];
    }
    for h in 0..m {
        for k in 0..m {
            let c = raw.compose[h * m + k];
            if c != UNDEFINED {
                compose[mor[h] * m + mor[k]] = mor[c];
            }
        }
    }
    FiniteCategory::validate(RawCategory { n_objects: n, source, target, identity, compose })
        .expect("relabelling preserves the category laws")
}

/// A random groupoid with at most 60 morphisms: the standard groupoid of a
/// random bundle, relabelled.
pub fn random_groupoid(rng: &mut ChaCha8Rng) -> Groupoid {
    let bundle = random_bundle(rng, 6, 6, 60);
    let standard = standard_groupoid(&bundle);
    let relabelled = relabel_category(rng, standard.groupoid.category());
    Groupoid::from_category(relabelled).expect("relabelled groupoid stays a groupoid")
}

// ------------------------------------------------------- group actions ----

/// Orders of every permutation in `perms`.
fn perm_orders(perms: &[Vec<usize>]) -> Vec<usize> {
    perms
        .iter()
        .map(|p| {
            let n = p.len();
            let mut power: Vec<usize> = p.clone();
            let mut order = 1;
            while power != (0..n).collect::<Vec<_>>() {
                power = compose_perm(p, &power);
                order += 1;
            }
            order
        })
        .collect()
}

fn closure(group: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    seen[group.identity()] = true;
    let mut frontier = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        for &a in gens {
            let y = group.mul(x, a);
            if !seen[y] {
                seen[y] = true;
                frontier.push(y);
            }
        }
    }
    (0..group.order()).filter(|&x| seen[x]).collect()
}

/// A generating set of at most two elements (every group in the pool has one).
fn generating_set(group: &FiniteGroup) -> Vec<usize> {
    let all: Vec<usize> = (0..group.order()).collect();
    if group.order() == 1 {
        return vec![];
    }
    for a in 0..group.order() {
        if closure(group, &[a]) == all {
            return vec![a];
        }
    }
    for a in 0..group.order() {
        for b in a + 1..group.order() {
            if closure(group, &[a, b]) == all {
                return vec![a, b];
            }
        }
    }
    panic!("group of order {} is not 2-generated", group.order());
}

/// Extends generator images to a full homomorphism `group -> perms` (as a
/// per-element permutation index), or refuses if the images are inconsistent.
fn extend_hom(
    group: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    perms: &[Vec<usize>],
    position: &std::collections::HashMap<Vec<usize>, usize>,
) -> Option<Vec<usize>> {
    let identity_perm = position[&(0..perms[0].len()).collect::<Vec<usize>>()];
    let mut map = vec![usize::MAX; group.order()];
    map[group.identity()] = identity_perm;
    let mut frontier = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        for (&a, &pa) in gens.iter().zip(images) {
            let y = group.mul(x, a);
            let image = position[&compose_perm(&perms[map[x]], &perms[pa])];
            if map[y] == usize::MAX {
                map[y] = image;
                frontier.push(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    for g in 0..group.order() {
        for h in 0..group.order() {
            let lhs = &perms[map[group.mul(g, h)]];
            let rhs = compose_perm(&perms[map[g]], &perms[map[h]]);
            if *lhs != rhs {
                return None;
            }
        }
    }
    Some(map)
}

/// All homomorphisms from `group` into the permutations listed in `perms`
/// (which must be closed under composition and contain the identity), as
/// per-element permutation indices.
fn enumerate_homs(group: &FiniteGroup, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let position: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let orders = perm_orders(perms);
    let gens = generating_set(group);
    let mut homs = Vec::new();
    match gens.as_slice() {
        [] => {
            if let Some(map) = extend_hom(group, &gens, &[], perms, &position) {
                homs.push(map);
            }
        }
        [a] => {
            let da = group.element_order(*a);
            for pa in 0..perms.len() {
                if da % orders[pa] != 0 {
                    continue;
                }
                if let Some(map) = extend_hom(group, &gens, &[pa], perms, &position) {
                    homs.push(map);
                }
            }
        }
        [a, b] => {
            let da = group.element_order(*a);
            let db = group.element_order(*b);
            for pa in 0..perms.len() {
                if da % orders[pa] != 0 {
                    continue;
                }
                for pb in 0..perms.len() {
                    if db % orders[pb] != 0 {
                        continue;
                    }
                    if let Some(map) = extend_hom(group, &gens, &[pa, pb], perms, &position) {
                        homs.push(map);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    homs
}

/// Every action of `group` on `{0, .., n-1}`, i.e. every homomorphism into
/// the full symmetric group on `n` points.
pub fn all_actions(group: &FiniteGroup, n: usize) -> Vec<GroupAction> {
    let perms = permutations(n);
    enumerate_homs(group, &perms)
        .into_iter()
        .map(|map| {
            let rows: Vec<Vec<usize>> =
                map.iter().map(|&p| perms[p].clone()).collect();
            GroupAction::new(group.clone(), n, &rows).expect("homomorphisms are actions")
        })
        .collect()
}

pub fn random_group_action(rng: &mut ChaCha8Rng, group: &FiniteGroup, n: usize) -> GroupAction {
    let actions = all_actions(group, n);
    actions[rng.gen_range(0..actions.len())].clone()
}

/// All automorphisms of a group, as permutations of its element set.
pub fn automorphism_perms(group: &FiniteGroup) -> Vec<Vec<usize>> {
    permutations(group.order())
        .into_iter()
        .filter(|p| {
            (0..group.order()).all(|a| {
                (0..group.order()).all(|b| p[group.mul(a, b)] == group.mul(p[a], p[b]))
            })
        })
        .collect()
}

/// All actions of the group `g` on the group `h` by automorphisms, as left
/// actions of one one-object groupoid on another.
pub fn group_on_group_actions(g: &FiniteGroup, h: &FiniteGroup) -> Vec<LeftAction> {
    let autos = automorphism_perms(h);
    let gc = one_object_groupoid(g).into_category();
    let hc = one_object_groupoid(h).into_category();
    enumerate_homs(g, &autos)
        .into_iter()
        .map(|map| {
            let tables = ActionTables::from_fn(gc.clone(), hc.clone(), vec![0], |gm, hm| {
                smallcat::category::MorphismId(autos[map[gm.0]][hm.0])
            });
            validate_action(tables).expect("automorphism actions satisfy the axioms")
        })
        .collect()
}

pub fn random_group_on_group(rng: &mut ChaCha8Rng) -> LeftAction {
    let g = random_group(rng);
    let h = random_group(rng);
    let actions = group_on_group_actions(&g, &h);
    actions[rng.gen_range(0..actions.len())].clone()
}

// --------------------------------------------------- left action families --

/// The trivial action of a discrete category on `h` through a constant
/// object map: `alpha` is the identity on every domain pair.
pub fn unit_only_action(h: FiniteCategory, g_objects: usize, phi: Vec<usize>) -> LeftAction {
    let g = FiniteCategory::discrete(g_objects);
    let tables = ActionTables::from_fn(g, h, phi, |_, hm| hm);
    validate_action(tables).expect("identity tables satisfy the axioms")
}

/// Z2 swapping two disjoint copies of the arrow category `u -> v`; the acted
/// category is not a groupoid. Morphisms: 0,1 the copy-0 and copy-1 arrows,
/// 2..=5 the identities of u0, v0, u1, v1.
pub fn swap_arrows_action() -> LeftAction {
    let raw = {
        let mut raw = RawCategory::with_undefined_compose(
            4,
            vec![0, 2, 0, 1, 2, 3],
            vec![1, 3, 0, 1, 2, 3],
            vec![2, 3, 4, 5],
        );
        // arrows compose with identities only
        for h in 0..6usize {
            let (s, t) = ([0, 2, 0, 1, 2, 3][h], [1, 3, 0, 1, 2, 3][h]);
            raw.set_compose([2, 3, 4, 5][t], h, h);
            raw.set_compose(h, [2, 3, 4, 5][s], h);
        }
        raw
    };
    let h = FiniteCategory::validate(raw).expect("two arrow components form a category");
    let g = one_object_groupoid(&FiniteGroup::cyclic(2)).into_category();
    let swap = [1usize, 0, 4, 5, 2, 3];
    let tables = ActionTables::from_fn(g, h, vec![0; 4], move |gm, hm| {
        smallcat::category::MorphismId(if gm.0 == 0 { hm.0 } else { swap[hm.0] })
    });
    validate_action(tables).expect("swapping isomorphic components is an action")
}

/// A random validated left action with a groupoid acting category, drawn
/// from several structurally different families.
pub fn random_groupoid_action(rng: &mut ChaCha8Rng) -> LeftAction {
    match rng.gen_range(0..6) {
        0 => inner_action(&random_groupoid(rng)).action,
        1 => {
            let group = random_group(rng);
            let n = rng.gen_range(1..=4);
            transformation_groupoid(&random_group_action(rng, &group, n)).action
        }
        2 => {
            // action on the orbit relation, which every action respects
            let group = random_group(rng);
            let n = rng.gen_range(1..=4);
            let action = random_group_action(rng, &group, n);
            let orbits = smallcat::iso::orbits_and_stabilizers(&action);
            let partition = Partition::from_classes(n, &orbits.orbits).expect("orbits partition");
            relation_action(&action, &partition)
                .expect("the orbit relation is respected")
                .action
        }
        3 => random_group_on_group(rng),
        4 => opposite_action(&random_group_on_group(rng)),
        _ => {
            // restriction of a group-on-group action to the tilde category
            restricted_semidirect(&random_group_on_group(rng))
                .expect("group actions restrict")
                .action
        }
    }
}

/// Changes one on-domain alpha entry to a different morphism index. Returns
/// `None` when the acted category has a single morphism (no different value
/// exists).
pub fn corrupt_one_entry(rng: &mut ChaCha8Rng, tables: &ActionTables) -> Option<ActionTables> {
    let entries = tables.entries();
    if entries.is_empty() || tables.h.n_morphisms() < 2 {
        return None;
    }
    let (g, h, old) = entries[rng.gen_range(0..entries.len())];
    let mut new = rng.gen_range(0..tables.h.n_morphisms() - 1);
    if new >= old {
        new += 1;
    }
    let mut corrupted = tables.clone();
    corrupted.alpha[g * tables.h.n_morphisms() + h] = new;
    Some(corrupted)
}
