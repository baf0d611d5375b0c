//! Cograph recognition by recursive component / co-component splitting.

use thiserror::Error;

use super::{Cotree, Kind, Node};
use crate::graph::Graph;
use crate::oracle;

/// The input graph has an induced path on four vertices. `witness` lists
/// the path in order.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("not a cograph: induced P4 {} {} {} {}", witness[0], witness[1], witness[2], witness[3])]
pub struct NotACograph {
    pub witness: [usize; 4],
}

impl Cotree {
    /// Builds the normalized cotree of `g`, keeping vertex ids. Children
    /// appear in order of their smallest vertex.
    ///
    /// A disconnected vertex set becomes a union over its components, a set
    /// with disconnected complement a join over its co-components. A set of
    /// two or more vertices that is connected in both the graph and its
    /// complement contains an induced P4, which is reported as the witness.
    pub fn from_graph(g: &Graph) -> Result<Cotree, NotACograph> {
        let n = g.n();
        assert!(n > 0, "the empty graph has no cotree");
        let mut nodes: Vec<Node> = Vec::new();
        // (vertex subset, parent slot)
        let mut work: Vec<(Vec<usize>, Option<usize>)> = vec![((0..n).collect(), None)];
        while let Some((set, parent)) = work.pop() {
            let id = nodes.len();
            if set.len() == 1 {
                nodes.push(Node::Leaf(set[0]));
            } else {
                let components = split(g, &set, false);
                let (kind, parts) = if components.len() > 1 {
                    (Kind::Union, components)
                } else {
                    let co = split(g, &set, true);
                    if co.len() == 1 {
                        let sub = g.induced_subgraph(&set);
                        let local = oracle::find_p4(&sub)
                            .expect("a prime vertex set of size >= 2 contains an induced P4");
                        return Err(NotACograph {
                            witness: local.map(|v| set[v]),
                        });
                    }
                    (Kind::Join, co)
                };
                nodes.push(Node::Interior {
                    kind,
                    children: Vec::with_capacity(parts.len()),
                });
                for part in parts.into_iter().rev() {
                    work.push((part, Some(id)));
                }
            }
            if let Some(p) = parent {
                if let Node::Interior { children, .. } = &mut nodes[p] {
                    children.push(id);
                }
            }
        }
        Ok(Cotree::from_raw_parts(nodes, 0).compact())
    }
}

/// Components of `set` in `g` (or in its complement when `complement` is
/// set), each sorted and ordered by smallest vertex.
fn split(g: &Graph, set: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut unvisited: Vec<usize> = set.to_vec();
    let mut parts = Vec::new();
    while let Some(&start) = unvisited.first() {
        unvisited.swap_remove(0);
        let mut part = vec![start];
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            let mut i = 0;
            while i < unvisited.len() {
                let w = unvisited[i];
                if g.has_edge(u, w) != complement {
                    unvisited.swap_remove(i);
                    part.push(w);
                    frontier.push(w);
                } else {
                    i += 1;
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
        unvisited.sort_unstable();
    }
    parts
}
