use std::collections::BTreeSet;

use super::{Dag, GraphError};

/// Status of an unordered node pair in a [`Pdag`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStatus {
    Absent,
    Undirected,
    /// Directed from the smaller-indexed node to the larger.
    Forward,
    /// Directed from the larger-indexed node to the smaller.
    Backward,
}

/// A partially directed graph: a mix of directed and undirected edges with
/// no pair carrying both marks. Used to represent essential graphs.
#[derive(Clone, PartialEq, Eq)]
pub struct Pdag {
    p: usize,
    directed: BTreeSet<(usize, usize)>,
    undirected: BTreeSet<(usize, usize)>,
}

impl Pdag {
    pub fn new<D, U>(p: usize, directed: D, undirected: U) -> Result<Self, GraphError>
    where
        D: IntoIterator<Item = (usize, usize)>,
        U: IntoIterator<Item = (usize, usize)>,
    {
        let mut dir = BTreeSet::new();
        let mut und = BTreeSet::new();
        let check = |i: usize, j: usize| -> Result<(), GraphError> {
            if i >= p {
                return Err(GraphError::NodeOutOfRange { node: i, p });
            }
            if j >= p {
                return Err(GraphError::NodeOutOfRange { node: j, p });
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            Ok(())
        };
        for (i, j) in directed {
            check(i, j)?;
            if dir.contains(&(j, i)) || dir.contains(&(i, j)) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
            dir.insert((i, j));
        }
        for (i, j) in undirected {
            check(i, j)?;
            let key = (i.min(j), i.max(j));
            if und.contains(&key) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
            und.insert(key);
        }
        for &(i, j) in &dir {
            if und.contains(&(i.min(j), i.max(j))) {
                return Err(GraphError::MixedEdge(i, j));
            }
        }
        Ok(Pdag {
            p,
            directed: dir,
            undirected: und,
        })
    }

    /// The fully directed PDAG of a DAG.
    pub fn from_dag(g: &Dag) -> Self {
        Pdag {
            p: g.num_nodes(),
            directed: g.edges().collect(),
            undirected: BTreeSet::new(),
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.p
    }

    pub fn directed_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.directed
    }

    pub fn undirected_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.undirected
    }

    pub fn num_edges(&self) -> usize {
        self.directed.len() + self.undirected.len()
    }

    /// Status of the pair `{i, j}`; `Forward` means `min -> max`.
    pub fn status(&self, i: usize, j: usize) -> EdgeStatus {
        let (lo, hi) = (i.min(j), i.max(j));
        if self.undirected.contains(&(lo, hi)) {
            EdgeStatus::Undirected
        } else if self.directed.contains(&(lo, hi)) {
            EdgeStatus::Forward
        } else if self.directed.contains(&(hi, lo)) {
            EdgeStatus::Backward
        } else {
            EdgeStatus::Absent
        }
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.status(i, j) != EdgeStatus::Absent
    }

    pub fn skeleton(&self) -> BTreeSet<(usize, usize)> {
        self.directed
            .iter()
            .map(|&(i, j)| (i.min(j), i.max(j)))
            .chain(self.undirected.iter().copied())
            .collect()
    }
}

impl std::fmt::Debug for Pdag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Pdag(p={}, directed={:?}, undirected={:?})",
            self.p, self.directed, self.undirected
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_status() {
        let g = Pdag::new(3, vec![(2, 0)], vec![(0, 1)]).unwrap();
        assert_eq!(g.status(0, 2), EdgeStatus::Backward);
        assert_eq!(g.status(2, 0), EdgeStatus::Backward);
        assert_eq!(g.status(0, 1), EdgeStatus::Undirected);
        assert_eq!(g.status(1, 2), EdgeStatus::Absent);
        assert_eq!(g.skeleton(), BTreeSet::from([(0, 1), (0, 2)]));
    }

    #[test]
    fn rejects_mixed_and_double_edges() {
        assert_eq!(
            Pdag::new(2, vec![(0, 1)], vec![(1, 0)]).unwrap_err(),
            GraphError::MixedEdge(0, 1)
        );
        assert_eq!(
            Pdag::new(2, vec![(0, 1), (1, 0)], vec![]).unwrap_err(),
            GraphError::DuplicateEdge(1, 0)
        );
    }
}
