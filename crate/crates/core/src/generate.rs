//! Seeded random cotrees and equivalent pairs.
//!
//! All generators take the RNG by reference; [`rng_from_seed`] gives the
//! reproducible stream used throughout the crate.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cotree::{Cotree, Kind, Node};
use crate::graph::Graph;
use crate::twins::equivalent_edits;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random normalized cotree on `n >= 1` leaves, numbered left to right.
///
/// Each interior node splits its leaves into 2 to `max_children` random
/// nonempty parts; kinds alternate by level from a random root kind.
pub fn random_cotree_with(rng: &mut impl Rng, n: usize, max_children: usize) -> Cotree {
    assert!(n >= 1, "a cotree needs at least one leaf");
    assert!(max_children >= 2);
    let mut nodes: Vec<Node> = Vec::new();
    let root_kind = if rng.gen_bool(0.5) { Kind::Join } else { Kind::Union };
    // (leaves, kind, parent slot)
    let mut work = vec![(n, root_kind, None::<usize>)];
    while let Some((size, kind, parent)) = work.pop() {
        let id = nodes.len();
        if size == 1 {
            nodes.push(Node::Leaf(0));
        } else {
            nodes.push(Node::Interior {
                kind,
                children: Vec::new(),
            });
            let parts = rng.gen_range(2..=max_children.min(size));
            // parts-1 distinct cut points in 1..size
            let mut cuts = rand::seq::index::sample(rng, size - 1, parts - 1).into_vec();
            cuts.iter_mut().for_each(|c| *c += 1);
            cuts.sort_unstable();
            cuts.push(size);
            let mut prev = 0;
            let mut sizes = Vec::with_capacity(parts);
            for c in cuts {
                sizes.push(c - prev);
                prev = c;
            }
            for s in sizes.into_iter().rev() {
                work.push((s, kind.opposite(), Some(id)));
            }
        }
        if let Some(p) = parent {
            if let Node::Interior { children, .. } = &mut nodes[p] {
                children.push(id);
            }
        }
    }
    Cotree::from_raw_parts(nodes, 0).normalize().relabel_dfs()
}

/// [`random_cotree_with`] allowing up to five children per node.
pub fn random_cotree(rng: &mut impl Rng, n: usize) -> Cotree {
    random_cotree_with(rng, n, 5)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// Shuffles every child list; the represented graph is unchanged.
pub fn shuffle_children(rng: &mut impl Rng, t: &Cotree) -> Cotree {
    let mut nodes = t.nodes().to_vec();
    for node in &mut nodes {
        if let Node::Interior { children, .. } = node {
            children.shuffle(rng);
        }
    }
    Cotree::from_raw_parts(nodes, t.root()).compact()
}

/// A random cograph and an equivalent one obtained by one to three
/// reduction-preserving cotree edits. Vertex ids are shared: vertex `v` of
/// the first tree corresponds to vertex `v` of the second.
pub fn random_equivalent_pair(rng: &mut impl Rng, min_n: usize, max_n: usize) -> (Cotree, Cotree) {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let g = random_cotree(rng, n);
        let mut h = g.clone();
        let mut applied = 0;
        for _ in 0..rng.gen_range(1..=3) {
            let edits = equivalent_edits(&h);
            let Some(choice) = edits.choose(rng) else { break };
            h = choice.tree.clone();
            applied += 1;
        }
        if applied > 0 {
            return (g, h);
        }
    }
}
