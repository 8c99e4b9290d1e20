use rand::seq::SliceRandom;
use rand::Rng;

use super::GraphError;

/// A total order over the nodes `0..p`; the search state of the permutation
/// learners.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from `order`, validating that it is a bijection
    /// onto `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self, GraphError> {
        let p = order.len();
        let mut position = vec![usize::MAX; p];
        for (pos, &node) in order.iter().enumerate() {
            if node >= p || position[node] != usize::MAX {
                return Err(GraphError::InvalidPermutation(order.clone(), p));
            }
            position[node] = pos;
        }
        Ok(Permutation { order, position })
    }

    pub fn identity(p: usize) -> Self {
        Permutation {
            order: (0..p).collect(),
            position: (0..p).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(p: usize, rng: &mut R) -> Self {
        let mut order: Vec<usize> = (0..p).collect();
        order.shuffle(rng);
        Permutation::new(order).unwrap()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of `node` within the order.
    pub fn position(&self, node: usize) -> usize {
        self.position[node]
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// Nodes at positions `0..pos`.
    pub fn prefix(&self, pos: usize) -> &[usize] {
        &self.order[..pos]
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation({:?})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_bijection() {
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
    }

    #[test]
    fn positions_and_precedence() {
        let pi = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(pi.position(2), 0);
        assert!(pi.precedes(2, 1));
        assert!(!pi.precedes(1, 0));
        assert_eq!(pi.prefix(2), &[2, 0]);
    }
}
