use std::collections::BTreeSet;

use super::GraphError;

/// A directed acyclic graph over nodes `0..p`.
///
/// Stores a dense adjacency matrix plus sorted parent and child lists, so
/// edge queries are O(1) and neighborhood iteration is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dag {
    p: usize,
    adj: Vec<bool>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    num_edges: usize,
}

impl Dag {
    /// Builds a DAG from an edge list, rejecting self-loops, duplicates,
    /// out-of-range nodes, and cycles.
    pub fn new<I>(p: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Dag::empty(p);
        for (i, j) in edges {
            g.check_node(i)?;
            g.check_node(j)?;
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if g.adj[i * p + j] {
                return Err(GraphError::DuplicateEdge(i, j));
            }
            g.adj[i * p + j] = true;
            g.parents[j].push(i);
            g.children[i].push(j);
            g.num_edges += 1;
        }
        for list in g.parents.iter_mut().chain(g.children.iter_mut()) {
            list.sort_unstable();
        }
        if g.try_topological_order().is_none() {
            return Err(GraphError::Cycle);
        }
        Ok(g)
    }

    /// The edgeless DAG on `p` nodes.
    pub fn empty(p: usize) -> Self {
        Dag {
            p,
            adj: vec![false; p * p],
            parents: vec![Vec::new(); p],
            children: vec![Vec::new(); p],
            num_edges: 0,
        }
    }

    fn check_node(&self, i: usize) -> Result<(), GraphError> {
        if i >= self.p {
            Err(GraphError::NodeOutOfRange { node: i, p: self.p })
        } else {
            Ok(())
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.p
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.p + j]
    }

    #[inline]
    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.has_edge(i, j) || self.has_edge(j, i)
    }

    /// Sorted parents of `i`.
    pub fn parents(&self, i: usize) -> &[usize] {
        &self.parents[i]
    }

    /// Sorted children of `i`.
    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    /// Edges in ascending `(i, j)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.p).flat_map(move |i| self.children[i].iter().map(move |&j| (i, j)))
    }

    /// Kahn's algorithm with a min-heap, so the returned order is the
    /// lexicographically smallest topological order.
    fn try_topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = (0..self.p).map(|i| self.parents[i].len()).collect();
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..self.p)
            .filter(|&i| indeg[i] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.p);
        while let Some(std::cmp::Reverse(i)) = heap.pop() {
            order.push(i);
            for &j in &self.children[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    heap.push(std::cmp::Reverse(j));
                }
            }
        }
        (order.len() == self.p).then_some(order)
    }

    /// A canonical (lexicographically smallest) topological order.
    pub fn topological_order(&self) -> Vec<usize> {
        self.try_topological_order()
            .expect("constructed DAGs are acyclic")
    }

    /// Proper ancestors of `i` (excluding `i`).
    pub fn ancestors(&self, i: usize) -> BTreeSet<usize> {
        self.reach(i, |g, v| g.parents(v))
    }

    /// Proper descendants of `i` (excluding `i`).
    pub fn descendants(&self, i: usize) -> BTreeSet<usize> {
        self.reach(i, |g, v| g.children(v))
    }

    fn reach<'a, F>(&'a self, start: usize, step: F) -> BTreeSet<usize>
    where
        F: Fn(&'a Dag, usize) -> &'a [usize],
    {
        let mut seen = vec![false; self.p];
        let mut stack: Vec<usize> = step(self, start).to_vec();
        let mut out = BTreeSet::new();
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            out.insert(v);
            stack.extend_from_slice(step(self, v));
        }
        out
    }

    /// Skeleton as a set of unordered pairs `(min, max)`.
    pub fn skeleton(&self) -> BTreeSet<(usize, usize)> {
        self.edges()
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect()
    }

    /// V-structures as `(a, b, collider)` triples with `a < b`, where
    /// `a -> collider <- b` and `a`, `b` are non-adjacent.
    pub fn v_structures(&self) -> BTreeSet<(usize, usize, usize)> {
        let mut out = BTreeSet::new();
        for k in 0..self.p {
            let pa = &self.parents[k];
            for (x, &a) in pa.iter().enumerate() {
                for &b in &pa[x + 1..] {
                    if !self.is_adjacent(a, b) {
                        out.insert((a, b, k));
                    }
                }
            }
        }
        out
    }

    /// Covered edges: `i -> j` with `pa(j) = pa(i) ∪ {i}`, returned in
    /// ascending `(i, j)` order.
    pub fn covered_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .filter(|&(i, j)| self.is_covered(i, j))
            .collect()
    }

    /// Whether the edge `i -> j` is covered, i.e. `pa(j) = pa(i) ∪ {i}`.
    pub fn is_covered(&self, i: usize, j: usize) -> bool {
        if !self.has_edge(i, j) {
            return false;
        }
        let pa_j = &self.parents[j];
        let pa_i = &self.parents[i];
        pa_j.len() == pa_i.len() + 1
            && pa_j.binary_search(&i).is_ok()
            && pa_i.iter().all(|x| pa_j.binary_search(x).is_ok())
    }

    /// Returns a copy with `i -> j` replaced by `j -> i`.
    ///
    /// Fails if the edge is missing or if the reversal creates a cycle.
    /// Reversing a covered edge always preserves acyclicity; the caller is
    /// responsible for restricting to covered edges where that matters.
    pub fn reverse_edge(&self, i: usize, j: usize) -> Result<Dag, GraphError> {
        if !self.has_edge(i, j) {
            return Err(GraphError::MissingEdge(i, j));
        }
        let edges = self
            .edges()
            .map(|e| if e == (i, j) { (j, i) } else { e });
        Dag::new(self.p, edges)
    }
}

impl std::fmt::Debug for Dag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Dag(p={}, edges={:?})", self.p, self.edges().collect::<Vec<_>>())
    }
}
