//! Twin classes, twin reduction and equivalence of cographs.
//!
//! Vertices `v`, `w` are twins when `N(v) - w = N(w) - v`. The classes of
//! this relation are cliques or cocliques. The reduction keeps one vertex
//! per class and labels it with the class size (its twin number); two
//! cographs are equivalent when their labelled reductions are isomorphic.

use std::collections::HashMap;
use std::fmt;

use pathfinding::kuhn_munkres::kuhn_munkres;
use pathfinding::matrix::Matrix;
use thiserror::Error;

use crate::cotree::{Cotree, Kind, Node, NodeId};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwinsError {
    #[error("distance from leaf {0} to itself is undefined")]
    SameLeaf(usize),
    #[error("vertex {vertex} out of range for a cotree with {n} leaves")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassType {
    /// Pairwise adjacent twins (coduplicates).
    Clique,
    /// Pairwise nonadjacent twins (duplicates).
    Coclique,
    Singleton,
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassType::Clique => "clique",
            ClassType::Coclique => "coclique",
            ClassType::Singleton => "singleton",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwinClass {
    pub members: Vec<usize>,
    pub kind: ClassType,
}

/// Classes with sorted members, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwinPartition {
    classes: Vec<TwinClass>,
}

impl TwinPartition {
    pub fn new(mut classes: Vec<TwinClass>) -> Self {
        for class in &mut classes {
            class.members.sort_unstable();
        }
        classes.sort_by_key(|c| c.members[0]);
        TwinPartition { classes }
    }

    pub fn classes(&self) -> &[TwinClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn twin_numbers(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    pub fn types(&self) -> Vec<ClassType> {
        self.classes.iter().map(|c| c.kind).collect()
    }

    /// Class index of every vertex.
    pub fn class_of(&self) -> Vec<usize> {
        let n = self.classes.iter().map(|c| c.members.len()).sum();
        let mut of = vec![0; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in &class.members {
                of[v] = i;
            }
        }
        of
    }
}

/// Twin classes of any graph, found by grouping equal open neighborhoods
/// (cocliques) and equal closed neighborhoods (cliques).
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut open: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).expect("in range").iter().copied().collect();
        let mut nb_closed = nb.clone();
        let at = nb_closed.binary_search(&v).unwrap_err();
        nb_closed.insert(at, v);
        open.entry(nb).or_default().push(v);
        closed.entry(nb_closed).or_default().push(v);
    }
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for (groups, kind) in [(open, ClassType::Coclique), (closed, ClassType::Clique)] {
        for members in groups.into_values().filter(|m| m.len() >= 2) {
            for &v in &members {
                assigned[v] = true;
            }
            classes.push(TwinClass { members, kind });
        }
    }
    classes.extend((0..n).filter(|&v| !assigned[v]).map(|v| TwinClass {
        members: vec![v],
        kind: ClassType::Singleton,
    }));
    TwinPartition::new(classes)
}

/// Twin classes read off a normalized cotree: leaves sharing a parent form
/// a class, a clique under a join and a coclique under a union.
pub fn twin_partition_from_cotree(t: &Cotree) -> TwinPartition {
    let mut classes = Vec::new();
    if let Node::Leaf(v) = t.node(t.root()) {
        classes.push(TwinClass {
            members: vec![*v],
            kind: ClassType::Singleton,
        });
    }
    for id in t.preorder() {
        let Node::Interior { kind, children } = t.node(id) else {
            continue;
        };
        let leaves: Vec<usize> = children
            .iter()
            .filter_map(|&c| match t.node(c) {
                Node::Leaf(v) => Some(*v),
                Node::Interior { .. } => None,
            })
            .collect();
        match leaves.len() {
            0 => {}
            1 => classes.push(TwinClass {
                members: leaves,
                kind: ClassType::Singleton,
            }),
            _ => classes.push(TwinClass {
                members: leaves,
                kind: match kind {
                    Kind::Join => ClassType::Clique,
                    Kind::Union => ClassType::Coclique,
                },
            }),
        }
    }
    TwinPartition::new(classes)
}

/// Twin reduction of a cograph. Reduced vertex `i` stands for class `i` of
/// [`ReductionProfile::partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionProfile {
    pub partition: TwinPartition,
    /// Smallest member of each class.
    pub representatives: Vec<usize>,
    pub cotree: Cotree,
    pub graph: Graph,
}

impl ReductionProfile {
    pub fn k(&self) -> usize {
        self.partition.len()
    }

    pub fn twin_numbers(&self) -> Vec<usize> {
        self.partition.twin_numbers()
    }

    pub fn types(&self) -> Vec<ClassType> {
        self.partition.types()
    }
}

pub fn reduction(t: &Cotree) -> ReductionProfile {
    let partition = twin_partition_from_cotree(t);
    let representatives: Vec<usize> = partition.classes().iter().map(|c| c.members[0]).collect();
    let cotree = t.induced(&representatives);
    let graph = cotree.to_graph();
    ReductionProfile {
        partition,
        representatives,
        cotree,
        graph,
    }
}

/// Class correspondence between two equivalent cographs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceMatch {
    /// `class_map[i]` is the class of the second cograph matched to class
    /// `i` of the first.
    pub class_map: Vec<usize>,
    /// Twin numbers, indexed by class of the first cograph.
    pub twin_numbers: Vec<usize>,
    /// Classes of the first cograph whose partner has the same type.
    pub identical: Vec<usize>,
}

impl EquivalenceMatch {
    pub fn k(&self) -> usize {
        self.class_map.len()
    }

    /// `k` plus `t_i - 1` for every identical-type class.
    pub fn bound(&self) -> usize {
        self.k()
            + self
                .identical
                .iter()
                .map(|&i| self.twin_numbers[i] - 1)
                .sum::<usize>()
    }
}

/// Decides equivalence and, if it holds, returns a class correspondence
/// maximizing the total `t_i - 1` over identical-type classes.
///
/// Labelled reductions are compared through canonical codes of their
/// cotrees. The correspondence is then built top-down: children with equal
/// codes are interchangeable, and within each such group a maximum-weight
/// assignment picks the pairing.
pub fn are_equivalent(g: &Cotree, h: &Cotree) -> Option<EquivalenceMatch> {
    let rg = reduction(g);
    let rh = reduction(h);
    if rg.k() != rh.k() {
        return None;
    }
    let labels = |r: &ReductionProfile| -> Vec<u64> {
        r.twin_numbers().into_iter().map(|t| t as u64).collect()
    };
    let (lg, lh) = (labels(&rg), labels(&rh));
    let codes_g = rg.cotree.subtree_codes(Some(&lg));
    let codes_h = rh.cotree.subtree_codes(Some(&lh));
    if codes_g[rg.cotree.root()] != codes_h[rh.cotree.root()] {
        return None;
    }
    let mut matcher = Matcher {
        g: &rg,
        h: &rh,
        codes_g: &codes_g,
        codes_h: &codes_h,
        memo: HashMap::new(),
    };
    let mut pairs = Vec::with_capacity(rg.k());
    matcher.assign(rg.cotree.root(), rh.cotree.root(), &mut pairs);
    let mut class_map = vec![usize::MAX; rg.k()];
    for (a, b) in pairs {
        class_map[a] = b;
    }
    let (tg, th) = (rg.types(), rh.types());
    let identical = (0..rg.k()).filter(|&i| tg[i] == th[class_map[i]]).collect();
    Some(EquivalenceMatch {
        class_map,
        twin_numbers: rg.twin_numbers(),
        identical,
    })
}

struct Matcher<'a> {
    g: &'a ReductionProfile,
    h: &'a ReductionProfile,
    codes_g: &'a [String],
    codes_h: &'a [String],
    memo: HashMap<(NodeId, NodeId), i64>,
}

impl Matcher<'_> {
    /// Best achievable weight when subtree `a` is mapped onto subtree `b`;
    /// the two must have equal codes.
    fn score(&mut self, a: NodeId, b: NodeId) -> i64 {
        if let Some(&s) = self.memo.get(&(a, b)) {
            return s;
        }
        let s = match (self.g.cotree.node(a), self.h.cotree.node(b)) {
            (Node::Leaf(i), Node::Leaf(j)) => {
                let same = self.g.partition.classes()[*i].kind == self.h.partition.classes()[*j].kind;
                if same {
                    self.g.partition.classes()[*i].members.len() as i64 - 1
                } else {
                    0
                }
            }
            _ => self
                .group_assignments(a, b)
                .into_iter()
                .map(|(total, _)| total)
                .sum(),
        };
        self.memo.insert((a, b), s);
        s
    }

    /// For every code group among the children, the optimal total and the
    /// chosen child pairs.
    fn group_assignments(&mut self, a: NodeId, b: NodeId) -> Vec<(i64, Vec<(NodeId, NodeId)>)> {
        let mut groups: HashMap<&str, (Vec<NodeId>, Vec<NodeId>)> = HashMap::new();
        let codes_g = self.codes_g;
        let codes_h = self.codes_h;
        for &c in self.g.cotree.children(a) {
            groups.entry(codes_g[c].as_str()).or_default().0.push(c);
        }
        for &c in self.h.cotree.children(b) {
            groups.entry(codes_h[c].as_str()).or_default().1.push(c);
        }
        let mut keys: Vec<&str> = groups.keys().copied().collect();
        keys.sort_unstable();
        let mut out = Vec::with_capacity(keys.len());
        for key in keys {
            let (left, right) = &groups[key];
            debug_assert_eq!(left.len(), right.len());
            if left.len() == 1 {
                out.push((self.score(left[0], right[0]), vec![(left[0], right[0])]));
                continue;
            }
            let mut weights = Matrix::new(left.len(), right.len(), 0i64);
            for (i, &x) in left.iter().enumerate() {
                for (j, &y) in right.iter().enumerate() {
                    weights[(i, j)] = self.score(x, y);
                }
            }
            let (total, assignment) = kuhn_munkres(&weights);
            let pairs = assignment
                .into_iter()
                .enumerate()
                .map(|(i, j)| (left[i], right[j]))
                .collect();
            out.push((total, pairs));
        }
        out
    }

    fn assign(&mut self, a: NodeId, b: NodeId, pairs: &mut Vec<(usize, usize)>) {
        match (self.g.cotree.node(a), self.h.cotree.node(b)) {
            (Node::Leaf(i), Node::Leaf(j)) => pairs.push((*i, *j)),
            _ => {
                for (_, chosen) in self.group_assignments(a, b) {
                    for (x, y) in chosen {
                        self.assign(x, y, pairs);
                    }
                }
            }
        }
    }
}

/// Number of interior nodes on the tree path between leaves `u` and `v`.
pub fn lca_distance(t: &Cotree, u: usize, v: usize) -> Result<usize, TwinsError> {
    let leaves = t.leaf_nodes();
    for vertex in [u, v] {
        if vertex >= leaves.len() {
            return Err(TwinsError::VertexOutOfRange {
                vertex,
                n: leaves.len(),
            });
        }
    }
    if u == v {
        return Err(TwinsError::SameLeaf(u));
    }
    let depth = t.node_depths();
    let (a, b) = (leaves[u], leaves[v]);
    let top = t.lca(a, b);
    Ok(depth[a] + depth[b] - 2 * depth[top] - 1)
}

/// Local cotree rewrites that preserve the twin reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CotreeEdit {
    /// Move the leaf children of `node` under a new child of opposite kind.
    Split { node: NodeId },
    /// Replace `node`, whose children are all leaves, by those leaves in its
    /// parent. Applies only when the parent has no leaf children.
    Lift { node: NodeId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditCandidate {
    pub edit: CotreeEdit,
    /// Normalized result; vertex ids are those of the input tree.
    pub tree: Cotree,
}

/// Every applicable split and lift, normalized but unfiltered.
pub fn candidate_edits(t: &Cotree) -> Vec<EditCandidate> {
    let parents = t.parents();
    let is_leaf = |id: NodeId| t.node(id).is_leaf();
    let mut out = Vec::new();
    for id in t.preorder() {
        let Node::Interior { kind, children } = t.node(id) else {
            continue;
        };
        let leaf_children: Vec<NodeId> = children.iter().copied().filter(|&c| is_leaf(c)).collect();
        if leaf_children.len() >= 2 {
            let mut nodes = t.nodes().to_vec();
            let fresh = nodes.len();
            nodes.push(Node::Interior {
                kind: kind.opposite(),
                children: leaf_children.clone(),
            });
            let first = children.iter().position(|&c| is_leaf(c)).expect("has leaves");
            let mut rebuilt: Vec<NodeId> = children.iter().copied().filter(|&c| !is_leaf(c)).collect();
            rebuilt.insert(first.min(rebuilt.len()), fresh);
            nodes[id] = Node::Interior {
                kind: *kind,
                children: rebuilt,
            };
            out.push(EditCandidate {
                edit: CotreeEdit::Split { node: id },
                tree: Cotree::from_raw_parts(nodes, t.root()).normalize(),
            });
        }
        if let Some(p) = parents[id] {
            let all_leaves = children.iter().all(|&c| is_leaf(c));
            let parent_has_leaves = t.children(p).iter().any(|&c| is_leaf(c));
            if all_leaves && !parent_has_leaves {
                let mut nodes = t.nodes().to_vec();
                let siblings: Vec<NodeId> = t
                    .children(p)
                    .iter()
                    .flat_map(|&c| if c == id { children.clone() } else { vec![c] })
                    .collect();
                let parent_kind = t.kind(p).expect("interior parent");
                nodes[p] = Node::Interior {
                    kind: parent_kind,
                    children: siblings,
                };
                out.push(EditCandidate {
                    edit: CotreeEdit::Lift { node: id },
                    tree: Cotree::from_raw_parts(nodes, t.root()).normalize(),
                });
            }
        }
    }
    out
}

/// Candidate edits whose result is equivalent to the input.
pub fn equivalent_edits(t: &Cotree) -> Vec<EditCandidate> {
    candidate_edits(t)
        .into_iter()
        .filter(|c| are_equivalent(t, &c.tree).is_some())
        .collect()
}
