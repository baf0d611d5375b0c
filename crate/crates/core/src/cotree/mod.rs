//! Cotrees: rooted trees whose interior nodes are typed union or join and
//! whose leaves are the vertices of a cograph.
//!
//! Two leaves are adjacent in the represented graph exactly when their lowest
//! common ancestor is a join node. Most operations expect the *normalized*
//! form, in which every interior node has at least two children and no
//! interior node has a child of the same kind. [`Cotree::normalize`] produces
//! it from any tree; the constructors in this module always return
//! normalized trees unless their name says `raw`.

mod canonical;
mod expr;
mod recognize;

use std::fmt;

use crate::graph::Graph;

pub use expr::ParseError;
pub use recognize::NotACograph;

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Union,
    Join,
}

impl Kind {
    pub fn opposite(self) -> Kind {
        match self {
            Kind::Union => Kind::Join,
            Kind::Join => Kind::Union,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Kind::Union => 'U',
            Kind::Join => 'J',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Leaf(usize),
    Interior { kind: Kind, children: Vec<NodeId> },
}

impl Node {
    pub fn kind(&self) -> Option<Kind> {
        match self {
            Node::Leaf(_) => None,
            Node::Interior { kind, .. } => Some(*kind),
        }
    }

    pub fn children(&self) -> &[NodeId] {
        match self {
            Node::Leaf(_) => &[],
            Node::Interior { children, .. } => children,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf(_))
    }
}

/// Arena-backed cotree. Leaf payloads are vertex ids of the represented graph.
#[derive(Clone)]
pub struct Cotree {
    nodes: Vec<Node>,
    root: NodeId,
}

impl Cotree {
    /// Tree over an explicit arena. No normalization is applied; the caller
    /// is responsible for leaf ids forming `0..n`.
    pub fn from_raw_parts(nodes: Vec<Node>, root: NodeId) -> Self {
        assert!(root < nodes.len(), "root outside the arena");
        Cotree { nodes, root }
    }

    /// The one-vertex cograph.
    pub fn single() -> Self {
        Cotree {
            nodes: vec![Node::Leaf(0)],
            root: 0,
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        Cotree::combine(Kind::Join, vec![Cotree::single(); n])
    }

    /// Edgeless graph `nK_1`.
    pub fn edgeless(n: usize) -> Self {
        Cotree::combine(Kind::Union, vec![Cotree::single(); n])
    }

    /// Union or join of the given cographs, normalized. Vertices of later
    /// parts are shifted past those of earlier parts, as in
    /// [`Graph::disjoint_union`].
    pub fn combine(kind: Kind, parts: Vec<Cotree>) -> Self {
        Cotree::combine_raw(kind, parts).normalize()
    }

    /// Like [`Cotree::combine`] but keeps the new root as is, even if it has
    /// a single child or children of its own kind.
    pub fn combine_raw(kind: Kind, parts: Vec<Cotree>) -> Self {
        let mut nodes = vec![Node::Interior {
            kind,
            children: Vec::with_capacity(parts.len()),
        }];
        let mut child_roots = Vec::with_capacity(parts.len());
        let mut vertex_offset = 0;
        for part in parts {
            let node_offset = nodes.len();
            child_roots.push(part.root + node_offset);
            let leaves = part.leaf_count();
            nodes.extend(part.nodes.into_iter().map(|node| match node {
                Node::Leaf(v) => Node::Leaf(v + vertex_offset),
                Node::Interior { kind, children } => Node::Interior {
                    kind,
                    children: children.into_iter().map(|c| c + node_offset).collect(),
                },
            }));
            vertex_offset += leaves;
        }
        if let Node::Interior { children, .. } = &mut nodes[0] {
            *children = child_roots;
        }
        Cotree { nodes, root: 0 }
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        self.nodes[id].children()
    }

    pub fn kind(&self, id: NodeId) -> Option<Kind> {
        self.nodes[id].kind()
    }

    /// Number of leaves reachable from the root.
    pub fn leaf_count(&self) -> usize {
        self.preorder()
            .into_iter()
            .filter(|&id| self.nodes[id].is_leaf())
            .count()
    }

    /// Number of reachable nodes, leaves included.
    pub fn size(&self) -> usize {
        self.preorder().len()
    }

    /// Reachable node ids in depth-first preorder, children left to right.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            order.push(id);
            stack.extend(self.nodes[id].children().iter().rev());
        }
        order
    }

    /// Reachable node ids with every node after all of its descendants.
    pub fn postorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            order.push(id);
            stack.extend(self.nodes[id].children().iter());
        }
        order.reverse();
        order
    }

    /// Vertex ids of the leaves in left-to-right order.
    pub fn leaves_in_order(&self) -> Vec<usize> {
        self.preorder()
            .into_iter()
            .filter_map(|id| match self.nodes[id] {
                Node::Leaf(v) => Some(v),
                Node::Interior { .. } => None,
            })
            .collect()
    }

    /// Parent of every arena slot; `None` for the root and unreachable slots.
    pub fn parents(&self) -> Vec<Option<NodeId>> {
        let mut parent = vec![None; self.nodes.len()];
        for id in self.preorder() {
            for &c in self.nodes[id].children() {
                parent[c] = Some(id);
            }
        }
        parent
    }

    /// Node depth (edges from the root) for every arena slot.
    pub fn node_depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.nodes.len()];
        for id in self.preorder() {
            for &c in self.nodes[id].children() {
                depth[c] = depth[id] + 1;
            }
        }
        depth
    }

    /// Arena id of each vertex's leaf, indexed by vertex.
    ///
    /// Panics if a leaf id is not below the leaf count.
    pub fn leaf_nodes(&self) -> Vec<NodeId> {
        let n = self.leaf_count();
        let mut slot = vec![usize::MAX; n];
        for id in self.preorder() {
            if let Node::Leaf(v) = self.nodes[id] {
                assert!(v < n && slot[v] == usize::MAX, "leaf ids must be 0..{n}, each once");
                slot[v] = id;
            }
        }
        slot
    }

    /// Number of leaves below every arena slot.
    pub fn subtree_leaf_counts(&self) -> Vec<usize> {
        let mut count = vec![0; self.nodes.len()];
        for id in self.postorder() {
            count[id] = match &self.nodes[id] {
                Node::Leaf(_) => 1,
                Node::Interior { children, .. } => children.iter().map(|&c| count[c]).sum(),
            };
        }
        count
    }

    /// Length in edges of the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        let depth = self.node_depths();
        self.preorder()
            .into_iter()
            .map(|id| depth[id])
            .max()
            .unwrap_or(0)
    }

    /// Degree of every vertex, indexed by vertex id, computed on the tree in
    /// linear time. A leaf gains, at each join ancestor, the leaves of that
    /// ancestor lying outside its own branch.
    pub fn leaf_degrees(&self) -> Vec<usize> {
        let counts = self.subtree_leaf_counts();
        let mut acc = vec![0usize; self.nodes.len()];
        let mut degrees = vec![0; self.leaf_count()];
        for id in self.preorder() {
            match &self.nodes[id] {
                Node::Leaf(v) => degrees[*v] = acc[id],
                Node::Interior { kind, children } => {
                    for &c in children {
                        acc[c] = acc[id]
                            + match kind {
                                Kind::Join => counts[id] - counts[c],
                                Kind::Union => 0,
                            };
                    }
                }
            }
        }
        degrees
    }

    /// Expands the tree into its graph. Quadratic in the number of leaves.
    pub fn to_graph(&self) -> Graph {
        let n = self.leaf_count();
        let mut edges = Vec::new();
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for id in self.postorder() {
            match &self.nodes[id] {
                Node::Leaf(v) => below[id] = vec![*v],
                Node::Interior { kind, children } => {
                    let mut acc: Vec<usize> = Vec::new();
                    for &c in children {
                        let part = std::mem::take(&mut below[c]);
                        if *kind == Kind::Join {
                            for &u in &acc {
                                for &w in &part {
                                    edges.push((u, w));
                                }
                            }
                        }
                        acc.extend(part);
                    }
                    below[id] = acc;
                }
            }
        }
        Graph::from_edge_list(n, &edges).expect("cotree leaf ids must be 0..n")
    }

    /// Contracts single-child interior nodes, merges children into parents of
    /// the same kind, and drops interior nodes without leaves. Leaf ids are
    /// kept. The result is compacted in preorder. Idempotent.
    pub fn normalize(&self) -> Cotree {
        // rep[x]: node standing for the normalized subtree of x, if any.
        // flat[x]: effective children of x after flattening.
        let mut rep: Vec<Option<NodeId>> = vec![None; self.nodes.len()];
        let mut flat: Vec<Vec<NodeId>> = vec![Vec::new(); self.nodes.len()];
        for id in self.postorder() {
            match &self.nodes[id] {
                Node::Leaf(_) => rep[id] = Some(id),
                Node::Interior { kind, children } => {
                    let mut effective = Vec::with_capacity(children.len());
                    for &c in children {
                        let Some(r) = rep[c] else { continue };
                        if self.nodes[r].kind() == Some(*kind) {
                            effective.append(&mut flat[r]);
                        } else {
                            effective.push(r);
                        }
                    }
                    rep[id] = match effective.len() {
                        0 => None,
                        1 => Some(effective[0]),
                        _ => Some(id),
                    };
                    flat[id] = effective;
                }
            }
        }
        let Some(top) = rep[self.root] else {
            // no leaves at all
            return Cotree {
                nodes: vec![Node::Interior {
                    kind: self.kind(self.root).unwrap_or(Kind::Union),
                    children: Vec::new(),
                }],
                root: 0,
            };
        };
        self.emit_preorder(top, |id| flat[id].as_slice())
    }

    /// Copies the subtree at `top` into a fresh arena in preorder, taking
    /// child lists from `children_of`.
    fn emit_preorder<'f>(&self, top: NodeId, children_of: impl Fn(NodeId) -> &'f [NodeId]) -> Cotree {
        let mut nodes: Vec<Node> = Vec::new();
        // (old id, slot of parent in new arena)
        let mut stack: Vec<(NodeId, Option<NodeId>)> = vec![(top, None)];
        while let Some((old, parent)) = stack.pop() {
            let new_id = nodes.len();
            nodes.push(match &self.nodes[old] {
                Node::Leaf(v) => Node::Leaf(*v),
                Node::Interior { kind, .. } => Node::Interior {
                    kind: *kind,
                    children: Vec::new(),
                },
            });
            if let Some(p) = parent {
                if let Node::Interior { children, .. } = &mut nodes[p] {
                    children.push(new_id);
                }
            }
            if !self.nodes[old].is_leaf() {
                for &c in children_of(old).iter().rev() {
                    stack.push((c, Some(new_id)));
                }
            }
        }
        Cotree { nodes, root: 0 }
    }

    /// Whether the tree already satisfies the normalized-form invariants.
    pub fn is_normalized(&self) -> bool {
        let ids = self.preorder();
        let leaves = ids.iter().filter(|&&id| self.nodes[id].is_leaf()).count();
        let mut seen = vec![false; leaves];
        for &id in &ids {
            match &self.nodes[id] {
                Node::Leaf(v) => {
                    if *v >= leaves || seen[*v] {
                        return false;
                    }
                    seen[*v] = true;
                }
                Node::Interior { kind, children } => {
                    if children.len() < 2
                        || children.iter().any(|&c| self.nodes[c].kind() == Some(*kind))
                    {
                        return false;
                    }
                }
            }
        }
        leaves > 0
    }

    /// Renumbers leaves `0..n` in left-to-right order.
    pub fn relabel_dfs(&self) -> Cotree {
        let mut out = self.clone();
        let mut next = 0;
        for id in self.preorder() {
            if let Node::Leaf(v) = &mut out.nodes[id] {
                *v = next;
                next += 1;
            }
        }
        out
    }

    /// Applies `map` to every leaf id.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Cotree {
        let mut out = self.clone();
        for node in &mut out.nodes {
            if let Node::Leaf(v) = node {
                *v = map(*v);
            }
        }
        out
    }

    /// Reorders every child list by the smallest vertex id below each child.
    pub fn sorted_by_min_leaf(&self) -> Cotree {
        let mut min_leaf = vec![usize::MAX; self.nodes.len()];
        for id in self.postorder() {
            min_leaf[id] = match &self.nodes[id] {
                Node::Leaf(v) => *v,
                Node::Interior { children, .. } => {
                    children.iter().map(|&c| min_leaf[c]).min().unwrap_or(usize::MAX)
                }
            };
        }
        let mut out = self.clone();
        for node in &mut out.nodes {
            if let Node::Interior { children, .. } = node {
                children.sort_by_key(|&c| min_leaf[c]);
            }
        }
        out.compact()
    }

    /// Cotree of the subgraph induced by `vertices`; `vertices[i]` becomes
    /// leaf `i`. The result is normalized.
    pub fn induced(&self, vertices: &[usize]) -> Cotree {
        let mut position = vec![usize::MAX; self.leaf_count()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut nodes = self.nodes.clone();
        for node in &mut nodes {
            if let Node::Interior { children, .. } = node {
                children.retain(|&c| match self.nodes[c] {
                    Node::Leaf(v) => position[v] != usize::MAX,
                    Node::Interior { .. } => true,
                });
            }
        }
        for node in &mut nodes {
            if let Node::Leaf(v) = node {
                *v = position[*v];
            }
        }
        if let Node::Leaf(v) = self.nodes[self.root] {
            assert!(position[v] != usize::MAX, "cannot drop every vertex");
        }
        Cotree {
            nodes,
            root: self.root,
        }
        .normalize()
    }

    /// Copies reachable nodes into a fresh arena in preorder.
    pub fn compact(&self) -> Cotree {
        self.emit_preorder(self.root, |id| self.nodes[id].children())
    }

    /// Lowest common ancestor of two arena nodes.
    pub fn lca(&self, a: NodeId, b: NodeId) -> NodeId {
        let parent = self.parents();
        let depth = self.node_depths();
        let (mut a, mut b) = (a, b);
        while depth[a] > depth[b] {
            a = parent[a].expect("deeper node has a parent");
        }
        while depth[b] > depth[a] {
            b = parent[b].expect("deeper node has a parent");
        }
        while a != b {
            a = parent[a].expect("distinct nodes below the root");
            b = parent[b].expect("distinct nodes below the root");
        }
        a
    }
}

impl PartialEq for Cotree {
    /// Structural equality: same kinds, same child order, same leaf ids.
    fn eq(&self, other: &Self) -> bool {
        let mut stack = vec![(self.root, other.root)];
        while let Some((a, b)) = stack.pop() {
            match (&self.nodes[a], &other.nodes[b]) {
                (Node::Leaf(x), Node::Leaf(y)) if x == y => {}
                (
                    Node::Interior {
                        kind: ka,
                        children: ca,
                    },
                    Node::Interior {
                        kind: kb,
                        children: cb,
                    },
                ) if ka == kb && ca.len() == cb.len() => {
                    stack.extend(ca.iter().copied().zip(cb.iter().copied()));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Cotree {}

impl fmt::Debug for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with_ids())
    }
}

impl Cotree {
    /// Expression form that spells out every leaf id, e.g. `J(0,U(1,2))`.
    /// Intended for diagnostics; [`Cotree::render`] is the grammar form.
    pub fn render_with_ids(&self) -> String {
        fn go(t: &Cotree, id: NodeId, out: &mut String) {
            match &t.nodes[id] {
                Node::Leaf(v) => out.push_str(&v.to_string()),
                Node::Interior { kind, children } => {
                    out.push(kind.symbol());
                    out.push('(');
                    for (i, &c) in children.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        go(t, c, out);
                    }
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        go(self, self.root, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(kind: Kind, parts: Vec<Cotree>) -> Cotree {
        Cotree::combine_raw(kind, parts)
    }

    #[test]
    fn constructors_are_normalized() {
        assert!(Cotree::complete(3).is_normalized());
        assert_eq!(Cotree::complete(1), Cotree::single());
        assert_eq!(Cotree::edgeless(3).render(), "U(3)");
        assert_eq!(Cotree::complete(2).render(), "J(2)");
    }

    #[test]
    fn normalize_merges_same_kind() {
        let t = raw(
            Kind::Union,
            vec![raw(Kind::Union, vec![Cotree::single(), Cotree::single()]), Cotree::single()],
        );
        assert!(!t.is_normalized());
        let n = t.normalize();
        assert_eq!(n.render_with_ids(), "U(0,1,2)");
        assert!(n.is_normalized());
    }

    #[test]
    fn normalize_contracts_single_child() {
        let inner = raw(Kind::Union, vec![Cotree::single()]);
        let t = raw(Kind::Join, vec![inner]);
        assert_eq!(t.normalize(), Cotree::single());
        // contraction inside a larger tree
        let t = raw(
            Kind::Join,
            vec![raw(Kind::Union, vec![Cotree::complete(2)]), Cotree::single()],
        );
        assert_eq!(t.normalize().render_with_ids(), "J(0,1,2)");
    }

    #[test]
    fn normalize_drops_empty_nodes() {
        let t = raw(
            Kind::Join,
            vec![raw(Kind::Union, vec![]), Cotree::single(), Cotree::single()],
        );
        assert_eq!(t.normalize().render_with_ids(), "J(0,1)");
    }

    #[test]
    fn depth_and_degrees() {
        assert_eq!(Cotree::single().depth(), 0);
        assert_eq!(Cotree::complete(2).depth(), 1);
        assert_eq!(Cotree::complete(2).leaf_degrees(), vec![1, 1]);
        let g7: Cotree = "J(U(3),U(J(3),1))".parse().unwrap();
        assert_eq!(g7.leaf_degrees(), vec![4, 4, 4, 5, 5, 5, 3]);
        assert_eq!(g7.leaf_degrees().iter().sum::<usize>(), 30);
    }

    #[test]
    fn expansion() {
        assert_eq!(Cotree::complete(3).to_graph(), Graph::complete(3));
        assert_eq!(Cotree::edgeless(2).to_graph(), Graph::empty(2));
        let t: Cotree = "J(1,U(J(2),J(2)))".parse().unwrap();
        let g = t.to_graph();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]
        );
    }

    #[test]
    fn induced_subtree() {
        let t: Cotree = "J(1,U(J(2),J(2)))".parse().unwrap();
        let r = t.induced(&[0, 1, 3]);
        assert_eq!(r.render_with_ids(), "J(0,U(1,2))");
        assert_eq!(r.to_graph(), t.to_graph().induced_subgraph(&[0, 1, 3]));
    }

    #[test]
    fn lca_of_leaves() {
        let t: Cotree = "J(1,U(J(2),J(2)))".parse().unwrap();
        let leaf = t.leaf_nodes();
        assert_eq!(t.kind(t.lca(leaf[1], leaf[2])), Some(Kind::Join));
        assert_eq!(t.kind(t.lca(leaf[1], leaf[3])), Some(Kind::Union));
        assert_eq!(t.lca(leaf[0], leaf[4]), t.root());
    }
}
