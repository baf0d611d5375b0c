//! Order-independent encoding of cotrees.
//!
//! Two normalized cotrees receive the same encoding exactly when they are
//! isomorphic as rooted unordered trees with leaf labels. Because normalized
//! cotrees are unique up to sibling order, this decides cograph isomorphism.

use super::{Cotree, Node};

impl Cotree {
    /// Canonical string of the tree. `labels[v]` is the label of vertex `v`;
    /// every leaf is labelled `1` when `labels` is `None`.
    ///
    /// Leaves encode as their decimal label, interior nodes as the kind
    /// letter followed by the sorted child encodings in parentheses.
    pub fn canonical_form(&self, labels: Option<&[u64]>) -> String {
        let mut codes: Vec<String> = vec![String::new(); self.nodes().len()];
        for id in self.postorder() {
            codes[id] = match self.node(id) {
                Node::Leaf(v) => labels.map_or(1, |l| l[*v]).to_string(),
                Node::Interior { kind, children } => {
                    let mut parts: Vec<String> =
                        children.iter().map(|&c| std::mem::take(&mut codes[c])).collect();
                    parts.sort_unstable();
                    let mut code = String::with_capacity(parts.iter().map(|p| p.len() + 1).sum::<usize>() + 2);
                    code.push(kind.symbol());
                    code.push('(');
                    code.push_str(&parts.join(","));
                    code.push(')');
                    code
                }
            };
        }
        std::mem::take(&mut codes[self.root()])
    }

    /// Canonical code of every node, for callers that match subtrees.
    /// Entries for unreachable arena slots are empty.
    pub fn subtree_codes(&self, labels: Option<&[u64]>) -> Vec<String> {
        let mut codes: Vec<String> = vec![String::new(); self.nodes().len()];
        for id in self.postorder() {
            codes[id] = match self.node(id) {
                Node::Leaf(v) => labels.map_or(1, |l| l[*v]).to_string(),
                Node::Interior { kind, children } => {
                    let mut parts: Vec<&str> = children.iter().map(|&c| codes[c].as_str()).collect();
                    parts.sort_unstable();
                    format!("{}({})", kind.symbol(), parts.join(","))
                }
            };
        }
        codes
    }
}
