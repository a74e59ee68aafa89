//! Brute-force isomorphism search for finite categories, orbit/stabilizer
//! decompositions of group actions, and the cross-check tying transformation
//! groupoid isomorphism to orbit matching.

use crate::action::GroupAction;
use crate::category::{FiniteCategory, IsoWitness, MorphismId, ObjectId};
use crate::group::{group_isomorphic, FiniteGroup};

/// Default node budget for the backtracking search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Outcome of an isomorphism search. Refusal is exhaustive; running out of
/// budget is reported separately and means "unknown".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(IsoWitness),
    NotIsomorphic,
    BudgetExceeded,
}

impl IsoOutcome {
    pub fn witness(&self) -> Option<&IsoWitness> {
        match self {
            IsoOutcome::Isomorphic(w) => Some(w),
            _ => None,
        }
    }
}

/// Per-object invariant: the size of every hom-set it participates in,
/// arranged to be preserved by any isomorphism.
fn object_profile(c: &FiniteCategory, counts: &[usize], x: usize) -> (usize, Vec<(usize, usize)>) {
    let n = c.n_objects();
    let own = counts[x * n + x];
    let mut others: Vec<(usize, usize)> = (0..n)
        .filter(|&y| y != x)
        .map(|y| (counts[x * n + y], counts[y * n + x]))
        .collect();
    others.sort_unstable();
    (own, others)
}

fn hom_counts(c: &FiniteCategory) -> Vec<usize> {
    let n = c.n_objects();
    let mut counts = vec![0usize; n * n];
    for m in c.morphisms() {
        counts[c.target(m).0 * n + c.source(m).0] += 1;
    }
    counts
}

struct Search<'a> {
    a: &'a FiniteCategory,
    b: &'a FiniteCategory,
    counts_a: Vec<usize>,
    counts_b: Vec<usize>,
    /// candidate B-objects per A-object, ascending
    candidates: Vec<Vec<usize>>,
    nodes_left: u64,
}

enum Step {
    Found(IsoWitness),
    Exhausted,
    OutOfBudget,
}

impl<'a> Search<'a> {
    fn spend(&mut self) -> bool {
        if self.nodes_left == 0 {
            return false;
        }
        self.nodes_left -= 1;
        true
    }

    fn objects(&mut self, sigma: &mut Vec<usize>, used: &mut Vec<bool>, at: usize) -> Step {
        let n = self.a.n_objects();
        if at == n {
            return self.morphisms(sigma);
        }
        for y in 0..self.candidates[at].len() {
            let y = self.candidates[at][y];
            if used[y] {
                continue;
            }
            if !self.spend() {
                return Step::OutOfBudget;
            }
            // pairwise hom-set sizes against every object assigned so far
            let ok = (0..at).all(|p| {
                self.counts_a[at * n + p] == self.counts_b[y * n + sigma[p]]
                    && self.counts_a[p * n + at] == self.counts_b[sigma[p] * n + y]
            });
            if !ok {
                continue;
            }
            sigma[at] = y;
            used[y] = true;
            match self.objects(sigma, used, at + 1) {
                Step::Exhausted => {}
                stop => return stop,
            }
            sigma[at] = usize::MAX;
            used[y] = false;
        }
        Step::Exhausted
    }

    fn morphisms(&mut self, sigma: &[usize]) -> Step {
        let (a, b) = (self.a, self.b);
        let m = a.n_morphisms();
        let mut f = vec![usize::MAX; m];
        let mut used = vec![false; b.n_morphisms()];
        // identities are forced by the object bijection
        for u in a.objects() {
            let target = b.identity(ObjectId(sigma[u.0])).0;
            f[a.identity(u).0] = target;
            used[target] = true;
        }
        let free: Vec<usize> = (0..m).filter(|&h| f[h] == usize::MAX).collect();
        // candidates per free morphism: non-identities with mapped endpoints
        let mut cand: Vec<Vec<usize>> = Vec::with_capacity(free.len());
        for &h in &free {
            let s = sigma[a.source(MorphismId(h)).0];
            let t = sigma[a.target(MorphismId(h)).0];
            let list: Vec<usize> = b
                .morphisms()
                .filter(|&k| {
                    !b.is_identity(k) && b.source(k).0 == s && b.target(k).0 == t
                })
                .map(|k| k.0)
                .collect();
            if list.is_empty() {
                return Step::Exhausted;
            }
            cand.push(list);
        }
        match self.assign(sigma, &free, &cand, &mut f, &mut used, 0) {
            Step::Found(w) => Step::Found(w),
            other => other,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        &mut self,
        sigma: &[usize],
        free: &[usize],
        cand: &[Vec<usize>],
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
        at: usize,
    ) -> Step {
        let (a, b) = (self.a, self.b);
        if at == free.len() {
            let witness = IsoWitness { object_map: sigma.to_vec(), morphism_map: f.clone() };
            // incremental pruning skips composites whose image was unknown at
            // the time, so the leaf is accepted only after a full check
            if witness.verify(a, b).is_ok() {
                return Step::Found(witness);
            }
            return Step::Exhausted;
        }
        let h = free[at];
        'candidates: for &k in &cand[at] {
            if used[k] {
                continue;
            }
            if !self.spend() {
                return Step::OutOfBudget;
            }
            f[h] = k;
            used[k] = true;
            // composition constraints against every assigned morphism
            for g in 0..f.len() {
                if f[g] == usize::MAX {
                    continue;
                }
                for (p, q) in [(h, g), (g, h)] {
                    if let Some(c) = a.compose(MorphismId(p), MorphismId(q)) {
                        if f[c.0] != usize::MAX {
                            let image = b.compose(MorphismId(f[p]), MorphismId(f[q]));
                            if image != Some(MorphismId(f[c.0])) {
                                f[h] = usize::MAX;
                                used[k] = false;
                                continue 'candidates;
                            }
                        }
                    }
                }
            }
            match self.assign(sigma, free, cand, f, used, at + 1) {
                Step::Exhausted => {}
                stop => return stop,
            }
            f[h] = usize::MAX;
            used[k] = false;
        }
        Step::Exhausted
    }
}

/// Searches for an isomorphism between two finite categories by backtracking:
/// first an object bijection refined by hom-set cardinality profiles, then a
/// morphism bijection pruned by composition constraints. Every returned
/// witness is re-verified. The budget counts assignment attempts; exceeding
/// it is reported as its own outcome, distinct from an exhaustive refusal.
pub fn find_isomorphism(a: &FiniteCategory, b: &FiniteCategory, budget: u64) -> IsoOutcome {
    if a.n_objects() != b.n_objects() || a.n_morphisms() != b.n_morphisms() {
        return IsoOutcome::NotIsomorphic;
    }
    let counts_a = hom_counts(a);
    let counts_b = hom_counts(b);
    let n = a.n_objects();
    let profiles_b: Vec<_> = (0..n).map(|y| object_profile(b, &counts_b, y)).collect();
    let mut sorted_a: Vec<_> = (0..n).map(|x| object_profile(a, &counts_a, x)).collect();
    let candidates: Vec<Vec<usize>> = sorted_a
        .iter()
        .map(|p| (0..n).filter(|&y| profiles_b[y] == *p).collect())
        .collect();
    let mut sorted_b = profiles_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return IsoOutcome::NotIsomorphic;
    }

    let mut search = Search { a, b, counts_a, counts_b, candidates, nodes_left: budget };
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    match search.objects(&mut sigma, &mut used, 0) {
        Step::Found(w) => IsoOutcome::Isomorphic(w),
        Step::Exhausted => IsoOutcome::NotIsomorphic,
        Step::OutOfBudget => IsoOutcome::BudgetExceeded,
    }
}

/// Orbits of a group action with the stabilizer of each orbit's least point.
#[derive(Debug, Clone)]
pub struct OrbitDecomposition {
    /// Orbits as sorted point lists, ordered by least point.
    pub orbits: Vec<Vec<usize>>,
    /// The least point of each orbit.
    pub base_points: Vec<usize>,
    /// The stabilizer of each base point as a group in its own right.
    pub stabilizers: Vec<FiniteGroup>,
    /// The group elements forming each stabilizer, ascending.
    pub stabilizer_elements: Vec<Vec<usize>>,
}

pub fn orbits_and_stabilizers(action: &GroupAction) -> OrbitDecomposition {
    let n = action.n_points();
    let order = action.group().order();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    let mut base_points = Vec::new();
    let mut stabilizers = Vec::new();
    let mut stabilizer_elements = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit: Vec<usize> = (0..order).map(|g| action.apply(g, x)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &p in &orbit {
            seen[p] = true;
        }
        let elements: Vec<usize> = (0..order).filter(|&g| action.apply(g, x) == x).collect();
        let rows: Vec<Vec<usize>> = elements
            .iter()
            .map(|&g| {
                elements
                    .iter()
                    .map(|&h| {
                        let prod = action.group().mul(g, h);
                        elements
                            .binary_search(&prod)
                            .expect("stabilizers are closed under multiplication")
                    })
                    .collect()
            })
            .collect();
        let stabilizer =
            FiniteGroup::from_table(&rows).expect("a stabilizer subgroup is a group");
        orbits.push(orbit);
        base_points.push(x);
        stabilizers.push(stabilizer);
        stabilizer_elements.push(elements);
    }
    OrbitDecomposition { orbits, base_points, stabilizers, stabilizer_elements }
}

/// A bijection between the point sets of two actions matching orbits to
/// orbits with isomorphic stabilizers.
#[derive(Debug, Clone)]
pub struct OrbitMatching {
    /// Total point bijection, orbit by orbit in sorted order.
    pub point_map: Vec<usize>,
    /// For each orbit of the first action, the matched orbit of the second.
    pub orbit_pairing: Vec<usize>,
}

/// Both sides of the orbit–stabilizer criterion, computed independently:
/// an isomorphism search between the two transformation groupoids, and a
/// direct search for an orbit-matching bijection.
#[derive(Debug, Clone)]
pub struct CorollaryReport {
    pub groupoid_outcome: IsoOutcome,
    pub matching: Option<OrbitMatching>,
    pub a_decomposition: OrbitDecomposition,
    pub b_decomposition: OrbitDecomposition,
}

impl CorollaryReport {
    /// Whether the two verdicts agree; `None` while the groupoid side is
    /// unknown because the search ran out of budget.
    pub fn verdicts_agree(&self) -> Option<bool> {
        match &self.groupoid_outcome {
            IsoOutcome::BudgetExceeded => None,
            IsoOutcome::Isomorphic(_) => Some(self.matching.is_some()),
            IsoOutcome::NotIsomorphic => Some(self.matching.is_none()),
        }
    }
}

pub fn corollary_check(a: &GroupAction, b: &GroupAction, budget: u64) -> CorollaryReport {
    let ta = crate::action::transformation_groupoid(a);
    let tb = crate::action::transformation_groupoid(b);
    let groupoid_outcome =
        find_isomorphism(ta.groupoid.category(), tb.groupoid.category(), budget);

    let a_decomposition = orbits_and_stabilizers(a);
    let b_decomposition = orbits_and_stabilizers(b);
    let matching = match_orbits(&a_decomposition, &b_decomposition, b.n_points());

    CorollaryReport { groupoid_outcome, matching, a_decomposition, b_decomposition }
}

/// Greedily pairs orbits of equal size and isomorphic stabilizers. Greedy
/// choice is complete here because "matches" is an equivalence between
/// orbits: any two orbits matching the same partner match each other.
fn match_orbits(
    a: &OrbitDecomposition,
    b: &OrbitDecomposition,
    b_points: usize,
) -> Option<OrbitMatching> {
    if a.orbits.len() != b.orbits.len() {
        return None;
    }
    let total_a: usize = a.orbits.iter().map(|o| o.len()).sum();
    if total_a != b_points {
        return None;
    }
    let mut taken = vec![false; b.orbits.len()];
    let mut orbit_pairing = Vec::with_capacity(a.orbits.len());
    let mut point_map = vec![usize::MAX; total_a];
    for (i, orbit) in a.orbits.iter().enumerate() {
        let found = (0..b.orbits.len()).find(|&j| {
            !taken[j]
                && b.orbits[j].len() == orbit.len()
                && group_isomorphic(&a.stabilizers[i], &b.stabilizers[j]).is_some()
        });
        let j = found?;
        taken[j] = true;
        orbit_pairing.push(j);
        for (&x, &y) in orbit.iter().zip(b.orbits[j].iter()) {
            point_map[x] = y;
        }
    }
    Some(OrbitMatching { point_map, orbit_pairing })
}
