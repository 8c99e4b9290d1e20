use std::collections::VecDeque;

use super::{Dag, GraphError};

/// Tests whether `a` and `b` are d-separated given `c` in `g`.
///
/// Uses directional reachability over active trails: a trail entering a node
/// against edge direction may continue anywhere if the node is unconditioned;
/// a trail entering along edge direction may continue downstream if the node
/// is unconditioned, and may turn upstream only at a collider whose
/// descendant set meets the conditioning set. This matches the path
/// definition of d-connection exactly.
///
/// The three sets must be pairwise disjoint.
pub fn d_separated(g: &Dag, a: &[usize], b: &[usize], c: &[usize]) -> Result<bool, GraphError> {
    let p = g.num_nodes();
    let mut role = vec![0u8; p]; // 1 = source, 2 = target, 3 = conditioned
    for (&nodes, tag) in [(a, 1u8), (b, 2u8), (c, 3u8)].iter().map(|(n, t)| (n, *t)) {
        for &v in nodes {
            if v >= p {
                return Err(GraphError::NodeOutOfRange { node: v, p });
            }
            if role[v] != 0 && role[v] != tag {
                return Err(GraphError::OverlappingSets);
            }
            role[v] = tag;
        }
    }
    if a.is_empty() || b.is_empty() {
        return Ok(true);
    }

    // Nodes that are in c or have a descendant in c: colliders open there.
    let mut anc_c = vec![false; p];
    let mut stack: Vec<usize> = c.to_vec();
    while let Some(v) = stack.pop() {
        if std::mem::replace(&mut anc_c[v], true) {
            continue;
        }
        stack.extend_from_slice(g.parents(v));
    }

    let in_c = |v: usize| role[v] == 3;
    // State (node, dir): dir 0 = trail arrived moving upstream (from a child,
    // or at a source), dir 1 = trail arrived moving downstream (from a parent).
    let mut visited = vec![[false; 2]; p];
    let mut queue: VecDeque<(usize, usize)> = a.iter().map(|&v| (v, 0)).collect();
    while let Some((v, dir)) = queue.pop_front() {
        if visited[v][dir] {
            continue;
        }
        visited[v][dir] = true;
        if role[v] == 2 {
            return Ok(false);
        }
        if dir == 0 {
            if !in_c(v) {
                for &u in g.parents(v) {
                    queue.push_back((u, 0));
                }
                for &w in g.children(v) {
                    queue.push_back((w, 1));
                }
            }
        } else {
            if !in_c(v) {
                for &w in g.children(v) {
                    queue.push_back((w, 1));
                }
            }
            if anc_c[v] {
                for &u in g.parents(v) {
                    queue.push_back((u, 0));
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dsep(g: &Dag, a: &[usize], b: &[usize], c: &[usize]) -> bool {
        d_separated(g, a, b, c).unwrap()
    }

    #[test]
    fn chain_blocked_by_middle() {
        let g = Dag::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(dsep(&g, &[0], &[2], &[1]));
        assert!(!dsep(&g, &[0], &[2], &[]));
    }

    #[test]
    fn collider_opens_when_conditioned() {
        let g = Dag::new(3, vec![(0, 2), (1, 2)]).unwrap();
        assert!(dsep(&g, &[0], &[1], &[]));
        assert!(!dsep(&g, &[0], &[1], &[2]));
    }

    #[test]
    fn collider_opens_via_descendant() {
        // 0 -> 2 <- 1, 2 -> 3: conditioning on 3 opens the collider at 2.
        let g = Dag::new(4, vec![(0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(!dsep(&g, &[0], &[1], &[3]));
    }

    #[test]
    fn augmented_graph_collider_path() {
        // Complete DAG 0 -> 1, 0 -> 2, 1 -> 2 with context vertices 3 -> {0, 1}
        // and 4 -> 2. Conditioning on {2, 3} opens 4 -> 2 <- 0.
        let g = Dag::new(
            5,
            vec![(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 2)],
        )
        .unwrap();
        assert!(!dsep(&g, &[4], &[0], &[2, 3]));
    }

    #[test]
    fn rejects_overlap_and_range() {
        let g = Dag::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(
            d_separated(&g, &[0], &[0], &[]).unwrap_err(),
            GraphError::OverlappingSets
        );
        assert!(d_separated(&g, &[0], &[7], &[]).is_err());
    }

    #[test]
    fn symmetric_in_a_and_b() {
        let g = Dag::new(4, vec![(0, 2), (1, 2), (2, 3)]).unwrap();
        for (a, b, c) in [
            (vec![0], vec![1], vec![3]),
            (vec![0], vec![3], vec![2]),
            (vec![0, 1], vec![3], vec![]),
        ] {
            assert_eq!(dsep(&g, &a, &b, &c), dsep(&g, &b, &a, &c));
        }
    }
}
