use std::collections::BTreeSet;

use super::{Dag, GraphError, Permutation};

/// A DAG augmented with one context vertex per interventional setting and an
/// edge from the setting-`k` context vertex to each of its targets.
///
/// Context vertices are indexed `p..p+K` in the augmented graph, where `p` is
/// the number of system nodes.
#[derive(Clone, PartialEq, Eq)]
pub struct IDag {
    base: Dag,
    targets: Vec<BTreeSet<usize>>,
}

impl IDag {
    pub fn new(base: Dag, targets: Vec<BTreeSet<usize>>) -> Result<Self, GraphError> {
        let p = base.num_nodes();
        for set in &targets {
            for &i in set {
                if i >= p {
                    return Err(GraphError::NodeOutOfRange { node: i, p });
                }
            }
        }
        Ok(IDag { base, targets })
    }

    pub fn base(&self) -> &Dag {
        &self.base
    }

    pub fn targets(&self) -> &[BTreeSet<usize>] {
        &self.targets
    }

    pub fn num_settings(&self) -> usize {
        self.targets.len()
    }

    pub fn num_system_nodes(&self) -> usize {
        self.base.num_nodes()
    }

    /// Index of the setting-`k` context vertex in the augmented graph.
    pub fn context_vertex(&self, k: usize) -> usize {
        self.base.num_nodes() + k
    }

    /// The augmented DAG over `p + K` nodes. Acyclic by construction since
    /// context vertices have no parents.
    pub fn augmented(&self) -> Dag {
        let p = self.base.num_nodes();
        let edges = self.base.edges().chain(
            self.targets
                .iter()
                .enumerate()
                .flat_map(|(k, set)| set.iter().map(move |&i| (p + k, i))),
        );
        Dag::new(p + self.targets.len(), edges).expect("augmentation preserves acyclicity")
    }

    /// The augmented DAG with, in addition, a complete tournament among the
    /// context vertices (oriented by setting index). This is the joint graph
    /// used when settings are lifted to ordinary variables.
    pub fn joint_augmented(&self) -> Dag {
        let p = self.base.num_nodes();
        let k = self.targets.len();
        let edges: Vec<(usize, usize)> = self
            .augmented()
            .edges()
            .chain((0..k).flat_map(|a| (a + 1..k).map(move |b| (p + a, p + b))))
            .collect();
        Dag::new(p + k, edges).expect("tournament among context vertices is acyclic")
    }
}

impl std::fmt::Debug for IDag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IDag(base={:?}, targets={:?})", self.base, self.targets)
    }
}

/// Prior structural knowledge for the background-augmented learners: pairs
/// known to be adjacent, and an optional two-block order constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackgroundKnowledge {
    p: usize,
    known_adjacent: BTreeSet<(usize, usize)>,
    order_partition: Option<(BTreeSet<usize>, BTreeSet<usize>)>,
}

impl BackgroundKnowledge {
    /// `known_adjacent` pairs are unordered; `order_partition = (u, v)` asserts
    /// every node of `u` precedes every node of `v`, and requires `u ∪ v` to
    /// cover `0..p` with `u ∩ v = ∅`.
    pub fn new(
        p: usize,
        known_adjacent: impl IntoIterator<Item = (usize, usize)>,
        order_partition: Option<(BTreeSet<usize>, BTreeSet<usize>)>,
    ) -> Result<Self, GraphError> {
        let mut adj = BTreeSet::new();
        for (i, j) in known_adjacent {
            if i >= p || j >= p {
                return Err(GraphError::NodeOutOfRange { node: i.max(j), p });
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            adj.insert((i.min(j), i.max(j)));
        }
        if let Some((u, v)) = &order_partition {
            if u.intersection(v).next().is_some() {
                return Err(GraphError::InvalidPartition("blocks overlap".into()));
            }
            if u.len() + v.len() != p || u.union(v).any(|&x| x >= p) {
                return Err(GraphError::InvalidPartition(format!(
                    "blocks must partition 0..{p}"
                )));
            }
        }
        Ok(BackgroundKnowledge {
            p,
            known_adjacent: adj,
            order_partition,
        })
    }

    pub fn empty(p: usize) -> Self {
        BackgroundKnowledge {
            p,
            known_adjacent: BTreeSet::new(),
            order_partition: None,
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.p
    }

    pub fn is_known_adjacent(&self, i: usize, j: usize) -> bool {
        self.known_adjacent.contains(&(i.min(j), i.max(j)))
    }

    pub fn known_adjacent(&self) -> &BTreeSet<(usize, usize)> {
        &self.known_adjacent
    }

    pub fn order_partition(&self) -> Option<&(BTreeSet<usize>, BTreeSet<usize>)> {
        self.order_partition.as_ref()
    }

    /// Whether `pi` places every first-block node before every second-block
    /// node. Vacuously true without a partition.
    pub fn respects_partition(&self, pi: &Permutation) -> bool {
        match &self.order_partition {
            None => true,
            Some((u, v)) => {
                let last_u = u.iter().map(|&x| pi.position(x)).max();
                let first_v = v.iter().map(|&x| pi.position(x)).min();
                match (last_u, first_v) {
                    (Some(lu), Some(fv)) => lu < fv,
                    _ => true,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn augmented_graph_layout() {
        let base = Dag::new(2, vec![(0, 1)]).unwrap();
        let idag = IDag::new(base, vec![BTreeSet::from([0])]).unwrap();
        let aug = idag.augmented();
        assert_eq!(aug.num_nodes(), 3);
        assert!(aug.has_edge(2, 0));
        assert!(aug.has_edge(0, 1));
        assert_eq!(idag.context_vertex(0), 2);
    }

    #[test]
    fn joint_graph_adds_tournament() {
        let base = Dag::new(2, vec![]).unwrap();
        let idag = IDag::new(base, vec![BTreeSet::from([0]), BTreeSet::from([1])]).unwrap();
        let joint = idag.joint_augmented();
        assert!(joint.has_edge(2, 3));
        assert!(joint.has_edge(2, 0));
        assert!(joint.has_edge(3, 1));
    }

    #[test]
    fn partition_validation_and_check() {
        let bg = BackgroundKnowledge::new(
            3,
            vec![(0, 1)],
            Some((BTreeSet::from([2]), BTreeSet::from([0, 1]))),
        )
        .unwrap();
        assert!(bg.is_known_adjacent(1, 0));
        assert!(bg.respects_partition(&Permutation::new(vec![2, 0, 1]).unwrap()));
        assert!(!bg.respects_partition(&Permutation::new(vec![0, 2, 1]).unwrap()));
        assert!(BackgroundKnowledge::new(
            3,
            vec![],
            Some((BTreeSet::from([0]), BTreeSet::from([1])))
        )
        .is_err());
    }
}
