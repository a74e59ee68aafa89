//! Partitions of a finite index set `{0, .., n-1}` into equivalence classes.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("point {point} out of range ({points} points)")]
    PointOutOfRange { point: usize, points: usize },
    #[error("point {point} appears in more than one class")]
    Overlap { point: usize },
    #[error("point {point} belongs to no class")]
    Uncovered { point: usize },
}

/// A partition of `{0, .., n-1}`. Classes are numbered in order of their least
/// point and each class lists its points in ascending order, so two partitions
/// of the same set are equal as values iff they have the same classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from an arbitrary labelling `point -> label`.
    /// Labels are renumbered by first occurrence.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut remap: Vec<Option<usize>> = Vec::new();
        let mut class_of = vec![0; labels.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (point, &label) in labels.iter().enumerate() {
            if label >= remap.len() {
                remap.resize(label + 1, None);
            }
            let class = *remap[label].get_or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of[point] = class;
            classes[class].push(point);
        }
        Partition { class_of, classes }
    }

    /// Builds a partition of `{0, .., points-1}` from explicit classes, which
    /// must be disjoint and cover the set.
    pub fn from_classes(points: usize, classes: &[Vec<usize>]) -> Result<Partition, PartitionError> {
        let mut class_of = vec![usize::MAX; points];
        for (c, class) in classes.iter().enumerate() {
            for &p in class {
                if p >= points {
                    return Err(PartitionError::PointOutOfRange { point: p, points });
                }
                if class_of[p] != usize::MAX {
                    return Err(PartitionError::Overlap { point: p });
                }
                class_of[p] = c;
            }
        }
        if let Some(point) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(PartitionError::Uncovered { point });
        }
        Ok(Partition::from_labels(&class_of))
    }

    pub fn singletons(points: usize) -> Partition {
        Partition::from_labels(&(0..points).collect::<Vec<_>>())
    }

    pub fn points(&self) -> usize {
        self.class_of.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, point: usize) -> usize {
        self.class_of[point]
    }

    pub fn class(&self, index: usize) -> &[usize] {
        &self.classes[index]
    }

    pub fn classes(&self) -> impl Iterator<Item = &[usize]> {
        self.classes.iter().map(|c| c.as_slice())
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// Classic union-find with path halving, used to close a relation into a
/// partition.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Lower root wins so the labelling is deterministic.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn into_partition(mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}
