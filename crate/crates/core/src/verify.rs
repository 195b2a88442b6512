//! Independent checking of reported solutions against the input graph.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub size: usize,
    /// First adjacent pair found, smaller id first.
    pub conflict: Option<(Vertex, Vertex)>,
    /// Vertices outside the set with no neighbour in it. Cutting is inexact,
    /// so a correct answer need not be maximal in the input graph.
    pub insertable: usize,
}

impl VerifyReport {
    pub fn is_independent(&self) -> bool {
        self.conflict.is_none()
    }

    pub fn is_maximal(&self) -> bool {
        self.insertable == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.conflict {
            Some((u, v)) => writeln!(f, "NOT independent: edge ({u}, {v})")?,
            None => writeln!(f, "independent")?,
        }
        writeln!(f, "size {}", self.size)?;
        if self.is_maximal() {
            write!(f, "maximal")
        } else {
            write!(f, "not maximal: {} insertable vertices", self.insertable)
        }
    }
}

/// Checks `solution` against the live edges of `g`. Ids outside the graph
/// or listed twice are errors.
pub fn verify(g: &Graph, solution: &[Vertex]) -> Result<VerifyReport> {
    let mut member = vec![false; g.id_bound()];
    for &v in solution {
        if v >= g.id_bound() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.id_bound(),
            });
        }
        if !g.is_alive(v) {
            return Err(Error::DeadVertex(v));
        }
        if member[v] {
            return Err(Error::SolutionContract {
                vertex: v,
                reason: "listed twice",
            });
        }
        member[v] = true;
    }
    let mut sorted = solution.to_vec();
    sorted.sort_unstable();
    let conflict = sorted.iter().find_map(|&v| {
        g.live_neighbors(v)
            .find(|&u| member[u])
            .map(|u| (v.min(u), v.max(u)))
    });
    let insertable = g
        .alive_vertices()
        .filter(|&v| !member[v] && !g.live_neighbors(v).any(|u| member[u]))
        .count();
    Ok(VerifyReport {
        size: solution.len(),
        conflict,
        insertable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_examples() {
        let p5 = Graph::from_edges(5, (1..5).map(|i| (i - 1, i))).unwrap();
        let ok = verify(&p5, &[0, 2, 4]).unwrap();
        assert!(ok.is_independent() && ok.is_maximal());
        assert_eq!(ok.size, 3);
        let bad = verify(&p5, &[0, 1]).unwrap();
        assert_eq!(bad.conflict, Some((0, 1)));
        let empty = verify(&p5, &[]).unwrap();
        assert!(empty.is_independent());
        assert_eq!((empty.size, empty.insertable), (0, 5));
        assert!(verify(&p5, &[7]).is_err());
        assert!(verify(&p5, &[2, 2]).is_err());
    }
}
