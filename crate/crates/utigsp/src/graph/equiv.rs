use std::collections::BTreeSet;

use super::{Dag, GraphError, IDag, Pdag};

/// Two DAGs are Markov equivalent iff they share skeleton and v-structures.
///
/// Panics if the node counts differ.
pub fn markov_equivalent(g1: &Dag, g2: &Dag) -> bool {
    assert_eq!(g1.num_nodes(), g2.num_nodes(), "node count mismatch");
    g1.skeleton() == g2.skeleton() && g1.v_structures() == g2.v_structures()
}

/// Interventional Markov equivalence: the augmented graphs share skeleton and
/// v-structures.
pub fn i_markov_equivalent(g1: &IDag, g2: &IDag) -> Result<bool, GraphError> {
    if g1.num_system_nodes() != g2.num_system_nodes() {
        return Err(GraphError::NodeCountMismatch(
            g1.num_system_nodes(),
            g2.num_system_nodes(),
        ));
    }
    if g1.num_settings() != g2.num_settings() {
        return Err(GraphError::SettingCountMismatch(
            g1.num_settings(),
            g2.num_settings(),
        ));
    }
    Ok(markov_equivalent(&g1.augmented(), &g2.augmented()))
}

/// Partially oriented graph state used while running the orientation rules.
struct Orienting {
    p: usize,
    // pair (min,max) -> mark: 0 absent, 1 undirected, 2 lo->hi, 3 hi->lo
    mark: Vec<u8>,
}

impl Orienting {
    fn new(p: usize) -> Self {
        Orienting {
            p,
            mark: vec![0; p * p],
        }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i.min(j) * self.p + i.max(j)
    }

    fn set_undirected(&mut self, i: usize, j: usize) {
        let idx = self.idx(i, j);
        self.mark[idx] = 1;
    }

    fn orient(&mut self, from: usize, to: usize) {
        let idx = self.idx(from, to);
        self.mark[idx] = if from < to { 2 } else { 3 };
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.mark[self.idx(i, j)] != 0
    }

    fn undirected(&self, i: usize, j: usize) -> bool {
        self.mark[self.idx(i, j)] == 1
    }

    fn directed(&self, from: usize, to: usize) -> bool {
        let m = self.mark[self.idx(from, to)];
        if from < to {
            m == 2
        } else {
            m == 3
        }
    }

    fn parents_of(&self, v: usize) -> Vec<usize> {
        (0..self.p).filter(|&u| self.directed(u, v)).collect()
    }

    fn into_pdag(self, restrict_to: usize) -> Pdag {
        let mut directed = Vec::new();
        let mut undirected = Vec::new();
        for lo in 0..restrict_to {
            for hi in lo + 1..restrict_to {
                match self.mark[lo * self.p + hi] {
                    1 => undirected.push((lo, hi)),
                    2 => directed.push((lo, hi)),
                    3 => directed.push((hi, lo)),
                    _ => {}
                }
            }
        }
        Pdag::new(restrict_to, directed, undirected).expect("orientation state is consistent")
    }
}

/// Applies the four Meek orientation rules to fixpoint.
///
/// `skeleton` lists the adjacent pairs; `oriented` the edges whose direction
/// is known a priori (v-structures plus any background orientations). Returns
/// the maximally oriented graph as a PDAG.
pub fn meek_closure(
    p: usize,
    skeleton: &BTreeSet<(usize, usize)>,
    oriented: &BTreeSet<(usize, usize)>,
) -> Pdag {
    meek_closure_restricted(p, skeleton, oriented, p)
}

fn meek_closure_restricted(
    p: usize,
    skeleton: &BTreeSet<(usize, usize)>,
    oriented: &BTreeSet<(usize, usize)>,
    restrict_to: usize,
) -> Pdag {
    let mut st = Orienting::new(p);
    for &(i, j) in skeleton {
        st.set_undirected(i, j);
    }
    for &(i, j) in oriented {
        st.orient(i, j);
    }
    loop {
        let mut changed = false;
        for a in 0..p {
            for b in 0..p {
                if a == b || !st.undirected(a, b) {
                    continue;
                }
                if meek_applies(&st, a, b) {
                    st.orient(a, b);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    st.into_pdag(restrict_to)
}

/// Whether any of the four orientation rules forces `a -> b`.
fn meek_applies(st: &Orienting, a: usize, b: usize) -> bool {
    let p = st.p;
    // R1: c -> a, a - b, c and b non-adjacent.
    for c in 0..p {
        if st.directed(c, a) && !st.adjacent(c, b) {
            return true;
        }
    }
    // R2: a -> c -> b with a - b.
    for c in 0..p {
        if st.directed(a, c) && st.directed(c, b) {
            return true;
        }
    }
    // R3: a - c, a - d, c -> b, d -> b, c and d non-adjacent.
    let into_b = st.parents_of(b);
    for (x, &c) in into_b.iter().enumerate() {
        if !st.undirected(a, c) {
            continue;
        }
        for &d in &into_b[x + 1..] {
            if st.undirected(a, d) && !st.adjacent(c, d) {
                return true;
            }
        }
    }
    // R4: c adjacent to a, c -> d -> b, c and b non-adjacent.
    for &d in &into_b {
        for c in 0..p {
            if st.directed(c, d) && st.adjacent(a, c) && !st.adjacent(c, b) {
                return true;
            }
        }
    }
    false
}

/// The essential graph of the interventional equivalence class of `g`,
/// restricted to system nodes.
///
/// Seeds the orientation rules with the v-structures of the augmented graph
/// and the context edges (always directed out of context vertices), then
/// closes under the Meek rules. A directed edge in the result is oriented the
/// same way in every member of the class; an undirected edge is realized in
/// both directions.
pub fn i_essential_graph(g: &IDag) -> Pdag {
    let aug = g.augmented();
    let total = aug.num_nodes();
    let p = g.num_system_nodes();
    let skeleton = aug.skeleton();
    let mut oriented = BTreeSet::new();
    for k in 0..g.num_settings() {
        let z = g.context_vertex(k);
        for &i in aug.children(z) {
            oriented.insert((z, i));
        }
    }
    for (a, b, collider) in aug.v_structures() {
        oriented.insert((a, collider));
        oriented.insert((b, collider));
    }
    meek_closure_restricted(total, &skeleton, &oriented, p)
}

/// The essential graph (CPDAG) of the observational equivalence class.
pub fn essential_graph(g: &Dag) -> Pdag {
    i_essential_graph(&IDag::new(g.clone(), Vec::new()).expect("no targets"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn targets(sets: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn markov_equivalence_basics() {
        let chain = Dag::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let rev = Dag::new(3, vec![(2, 1), (1, 0)]).unwrap();
        assert!(markov_equivalent(&chain, &rev));

        let collider = Dag::new(3, vec![(0, 2), (1, 2)]).unwrap();
        assert!(!markov_equivalent(&chain, &collider));

        // same skeleton, different v-structures: 0 -> 2, 1 -> 2 vs 0 -> 2, 2 -> 1
        let fork = Dag::new(3, vec![(0, 2), (2, 1)]).unwrap();
        assert!(!markov_equivalent(&collider, &fork));
    }

    #[test]
    fn interventional_equivalence_distinguishes_orientation() {
        let fwd = Dag::new(2, vec![(0, 1)]).unwrap();
        let bwd = Dag::new(2, vec![(1, 0)]).unwrap();
        let t = targets(&[&[0]]);
        let a = IDag::new(fwd.clone(), t.clone()).unwrap();
        let b = IDag::new(bwd, t).unwrap();
        assert!(!i_markov_equivalent(&a, &b).unwrap());
        assert!(i_markov_equivalent(&a, &a).unwrap());

        // no settings: reduces to plain Markov equivalence
        let chain = IDag::new(Dag::new(3, vec![(0, 1), (1, 2)]).unwrap(), vec![]).unwrap();
        let rev = IDag::new(Dag::new(3, vec![(2, 1), (1, 0)]).unwrap(), vec![]).unwrap();
        assert!(i_markov_equivalent(&chain, &rev).unwrap());

        let wrong_k = IDag::new(fwd, targets(&[&[0], &[1]])).unwrap();
        assert!(matches!(
            i_markov_equivalent(&a, &wrong_k),
            Err(GraphError::SettingCountMismatch(1, 2))
        ));
    }

    #[test]
    fn essential_graph_of_chain_is_undirected() {
        let chain = Dag::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let ess = essential_graph(&chain);
        assert!(ess.directed_edges().is_empty());
        assert_eq!(ess.undirected_edges(), &BTreeSet::from([(0, 1), (1, 2)]));
    }

    #[test]
    fn single_intervention_orients_edge() {
        let g = IDag::new(Dag::new(2, vec![(0, 1)]).unwrap(), targets(&[&[0]])).unwrap();
        let ess = i_essential_graph(&g);
        assert_eq!(ess.directed_edges(), &BTreeSet::from([(0, 1)]));
        assert!(ess.undirected_edges().is_empty());
    }

    #[test]
    fn v_structure_is_oriented_observationally() {
        let g = Dag::new(3, vec![(0, 2), (1, 2)]).unwrap();
        let ess = essential_graph(&g);
        assert_eq!(ess.directed_edges(), &BTreeSet::from([(0, 2), (1, 2)]));
    }
}
