//! Finite groups given by multiplication tables.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupViolation {
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("associativity fails at ({a}, {b}, {c}): (ab)c = {left} but a(bc) = {right}")]
    NonAssociative { a: usize, b: usize, c: usize, left: usize, right: usize },
}

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("{} group law violation(s), first: {}", .0.len(), .0[0])]
    Laws(Vec<GroupViolation>),
}

/// A finite group: a validated multiplication table with its identity and
/// inverse map. `mul(a, b)` is "a then b applied on the left", i.e. plain
/// table lookup `table[a][b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates an `n x n` multiplication table: finds the identity, checks
    /// inverses and associativity. Violations come back with witnesses.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Malformed("a group needs at least one element".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Malformed(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::Malformed(format!(
                        "entry ({i}, {j}) = {v}, outside the {n} elements"
                    )));
                }
                table.push(v);
            }
        }

        let mut violations = Vec::new();
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n).find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a));
        let mut inverse = vec![usize::MAX; n];
        match identity {
            None => violations.push(GroupViolation::NoIdentity),
            Some(e) => {
                for a in 0..n {
                    match (0..n).find(|&b| mul(a, b) == e && mul(b, a) == e) {
                        Some(b) => inverse[a] = b,
                        None => violations.push(GroupViolation::NoInverse { element: a }),
                    }
                }
            }
        }
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = mul(mul(a, b), c);
                    let right = mul(a, mul(b, c));
                    if left != right {
                        violations.push(GroupViolation::NonAssociative { a, b, c, left, right });
                        if violations.len() >= 100 {
                            break 'assoc;
                        }
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(GroupError::Laws(violations));
        }
        Ok(FiniteGroup { order: n, table, identity: identity.unwrap(), inverse })
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let rows: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(&rows).expect("cyclic table is a group")
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// The direct product, elements numbered `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.order * b.order;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (xa, xb) = (x / b.order, x % b.order);
                        let (ya, yb) = (y / b.order, y % b.order);
                        a.mul(xa, ya) * b.order + b.mul(xb, yb)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&rows).expect("product table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// An isomorphism certificate between two groups: the element bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupIso {
    pub map: Vec<usize>,
}

impl GroupIso {
    pub fn verify(&self, a: &FiniteGroup, b: &FiniteGroup) -> bool {
        if a.order() != b.order() || self.map.len() != a.order() {
            return false;
        }
        let mut seen = vec![false; b.order()];
        for &y in &self.map {
            if y >= b.order() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        (0..a.order()).all(|x| {
            (0..a.order()).all(|y| self.map[a.mul(x, y)] == b.mul(self.map[x], self.map[y]))
        })
    }
}

/// Searches for a group isomorphism by backtracking over element bijections,
/// pruning on element orders. Returns the first witness found, or `None`
/// after an exhaustive refusal.
pub fn group_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupIso> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let orders_a: Vec<usize> = (0..n).map(|x| a.element_order(x)).collect();
    let orders_b: Vec<usize> = (0..n).map(|x| b.element_order(x)).collect();
    let mut sorted_a = orders_a.clone();
    let mut sorted_b = orders_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    if backtrack_group(a, b, &orders_a, &orders_b, &mut map, &mut used, 0) {
        let witness = GroupIso { map };
        debug_assert!(witness.verify(a, b));
        return Some(witness);
    }
    None
}

fn backtrack_group(
    a: &FiniteGroup,
    b: &FiniteGroup,
    orders_a: &[usize],
    orders_b: &[usize],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    from: usize,
) -> bool {
    let n = a.order();
    let Some(x) = (from..n).find(|&x| map[x] == usize::MAX) else {
        // Complete assignment: all products were checked incrementally, but
        // re-verify to be safe.
        return GroupIso { map: map.clone() }.verify(a, b);
    };
    'candidates: for y in 0..n {
        if used[y] || orders_b[y] != orders_a[x] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        // check all products among assigned elements whose factors involve x
        for z in 0..n {
            if map[z] == usize::MAX {
                continue;
            }
            for (p, q) in [(x, z), (z, x)] {
                let prod = a.mul(p, q);
                if map[prod] != usize::MAX && map[prod] != b.mul(map[p], map[q]) {
                    map[x] = usize::MAX;
                    used[y] = false;
                    continue 'candidates;
                }
            }
        }
        if backtrack_group(a, b, orders_a, orders_b, map, used, x + 1) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}
