//! Plain-text graph format: a header line `p=<n>` followed by one edge per
//! line, `i -> j` for directed edges and `i -- j` for undirected ones, with
//! 0-based node indices.

use super::{Dag, GraphError, Pdag};

pub fn pdag_to_text(g: &Pdag) -> String {
    let mut out = format!("p={}\n", g.num_nodes());
    for &(i, j) in g.directed_edges() {
        out.push_str(&format!("{i} -> {j}\n"));
    }
    for &(i, j) in g.undirected_edges() {
        out.push_str(&format!("{i} -- {j}\n"));
    }
    out
}

pub fn dag_to_text(g: &Dag) -> String {
    pdag_to_text(&Pdag::from_dag(g))
}

pub fn pdag_from_text(s: &str) -> Result<Pdag, GraphError> {
    let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (first_no, first) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let header = first.trim();
    let p: usize = header
        .strip_prefix("p=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or(GraphError::Parse {
            line: first_no + 1,
            msg: format!("expected header `p=<n>`, got `{header}`"),
        })?;
    let mut directed = Vec::new();
    let mut undirected = Vec::new();
    for (no, line) in lines {
        let parse = |tok: &str| -> Result<usize, GraphError> {
            tok.trim().parse().map_err(|_| GraphError::Parse {
                line: no + 1,
                msg: format!("bad node index `{tok}`"),
            })
        };
        if let Some((a, b)) = line.split_once("->") {
            directed.push((parse(a)?, parse(b)?));
        } else if let Some((a, b)) = line.split_once("--") {
            undirected.push((parse(a)?, parse(b)?));
        } else {
            return Err(GraphError::Parse {
                line: no + 1,
                msg: format!("expected `i -> j` or `i -- j`, got `{}`", line.trim()),
            });
        }
    }
    Pdag::new(p, directed, undirected)
}

/// Parses a fully directed graph; undirected lines are rejected.
pub fn dag_from_text(s: &str) -> Result<Dag, GraphError> {
    let pdag = pdag_from_text(s)?;
    if let Some(&(i, j)) = pdag.undirected_edges().iter().next() {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("expected a DAG but found undirected edge {i} -- {j}"),
        });
    }
    Dag::new(
        pdag.num_nodes(),
        pdag.directed_edges().iter().copied().collect::<Vec<_>>(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let g = Pdag::new(4, vec![(2, 0), (1, 3)], vec![(0, 1)]).unwrap();
        let text = pdag_to_text(&g);
        assert_eq!(pdag_from_text(&text).unwrap(), g);

        let d = Dag::new(3, vec![(0, 1), (2, 1)]).unwrap();
        assert_eq!(dag_from_text(&dag_to_text(&d)).unwrap(), d);
    }

    #[test]
    fn reports_line_numbers() {
        let err = pdag_from_text("p=3\n0 -> 1\n0 ~ 2\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 3,
                msg: "expected `i -> j` or `i -- j`, got `0 ~ 2`".into()
            }
        );
        assert!(pdag_from_text("nodes=3\n").is_err());
    }
}
