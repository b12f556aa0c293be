use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An `H`-partition: every source vertex is assigned one class in `V(H)`.
/// Classes may be empty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HPartition {
    class_of: Vec<usize>,
    #[serde(skip)]
    target: Graph,
}

impl HPartition {
    pub fn new(class_of: Vec<usize>, target: &Graph) -> Result<HPartition> {
        if let Some((v, &c)) = class_of.iter().enumerate().find(|(_, &c)| c >= target.n()) {
            return Err(Error::Partition(format!("vertex {v} assigned to class {c}, but the target has {} vertices", target.n())));
        }
        Ok(HPartition { class_of, target: target.clone() })
    }

    /// Consecutive blocks: the first `sizes[0]` indices form class 0, etc.
    pub fn from_sizes(sizes: &[usize], target: &Graph) -> Result<HPartition> {
        if sizes.len() != target.n() {
            return Err(Error::Partition(format!("{} class sizes for a target with {} vertices", sizes.len(), target.n())));
        }
        let class_of = sizes.iter().enumerate().flat_map(|(c, &s)| std::iter::repeat_n(c, s)).collect();
        HPartition::new(class_of, target)
    }

    /// From explicit class member lists; every index `0..source_size` must
    /// appear exactly once.
    pub fn from_classes(classes: &[Vec<usize>], source_size: usize, target: &Graph) -> Result<HPartition> {
        if classes.len() != target.n() {
            return Err(Error::Partition(format!("{} classes for a target with {} vertices", classes.len(), target.n())));
        }
        let mut class_of = vec![usize::MAX; source_size];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                if v >= source_size {
                    return Err(Error::Partition(format!("index {v} out of range {source_size}")));
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::Partition(format!("index {v} assigned to classes {} and {c}", class_of[v])));
                }
                class_of[v] = c;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Partition(format!("index {v} is not covered")));
        }
        HPartition::new(class_of, target)
    }

    pub fn source_size(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.target.n()
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.class_count()];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    /// Whether indices `i`, `j` lie in classes that are non-adjacent in the
    /// target (including the same class).
    pub fn off_edge(&self, i: usize, j: usize) -> bool {
        !self.target.has_edge(self.class_of[i], self.class_of[j])
    }

    /// True when the partition comes from a homomorphism of `g`: no edge of
    /// `g` joins classes that are non-adjacent in the target.
    pub fn is_homomorphic_for(&self, g: &Graph) -> bool {
        g.n() == self.source_size() && g.edges().iter().all(|&(u, v)| !self.off_edge(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn construction_and_validation() {
        let k2 = generate("complete", &[2]).unwrap();
        let p = HPartition::from_sizes(&[1, 0], &k2).unwrap();
        assert_eq!(p.class_sizes(), vec![1, 0]);
        assert!(HPartition::from_sizes(&[1], &k2).is_err());
        assert!(HPartition::new(vec![0, 2], &k2).is_err());
        assert!(HPartition::from_classes(&[vec![0], vec![0]], 1, &k2).is_err());
        assert!(HPartition::from_classes(&[vec![0], vec![]], 2, &k2).is_err());
        let ok = HPartition::from_classes(&[vec![1], vec![0]], 2, &k2).unwrap();
        assert_eq!(ok.class_of(), &[1, 0]);
        assert!(ok.is_homomorphic_for(&k2));
        assert!(!HPartition::new(vec![0, 0], &k2).unwrap().is_homomorphic_for(&k2));
    }
}
