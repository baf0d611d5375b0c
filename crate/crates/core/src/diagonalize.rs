//! Congruence diagonalization of `L(G) + xI` on the cotree, and eigenvalue
//! location built on it.
//!
//! Every leaf starts with `deg(v) + x`. Sibling leaves are twins, so a pair
//! of them can be eliminated by a congruence that touches only their two
//! rows and columns; one of the pair (sometimes both) then holds a final
//! diagonal value and leaves the tree. Repeating this bottom-up reduces the
//! whole matrix to a diagonal one with the same inertia as `L(G) + xI`.
//!
//! [`diagonalize`] runs in time linear in the tree size (arithmetic is exact,
//! so each step costs time proportional to the size of the rationals
//! involved). [`diagonalize_by_selection`] performs the same eliminations
//! on an explicitly rewritten tree with a pluggable pair choice; it exists to
//! cross-check the fast path and to exercise order independence.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::cotree::{Cotree, Kind, Node, NodeId};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagonalizeError {
    #[error("cotree has no leaves")]
    EmptyTree,
    #[error("integrality violated: integer points account for {found} of {expected} eigenvalues")]
    IntegralityViolation { found: usize, expected: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Numbers of eigenvalues greater than, equal to and less than a point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct InertiaCount {
    pub greater: usize,
    pub equal: usize,
    pub less: usize,
}

impl InertiaCount {
    pub fn total(&self) -> usize {
        self.greater + self.equal + self.less
    }
}

impl fmt::Display for InertiaCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.greater, self.equal, self.less)
    }
}

/// Integer eigenvalues with multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SpectrumMultiset(BTreeMap<u64, usize>);

impl SpectrumMultiset {
    pub fn new() -> Self {
        SpectrumMultiset::default()
    }

    /// Builds from `(eigenvalue, multiplicity)` pairs; zero multiplicities
    /// are dropped and repeated eigenvalues accumulate.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, usize)>) -> Self {
        let mut s = SpectrumMultiset::new();
        for (value, mult) in pairs {
            s.insert(value, mult);
        }
        s
    }

    /// Builds from a list of eigenvalues with repetition.
    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        SpectrumMultiset::from_pairs(values.into_iter().map(|v| (v, 1)))
    }

    pub fn insert(&mut self, value: u64, mult: usize) {
        if mult > 0 {
            *self.0.entry(value).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, value: u64) -> usize {
        self.0.get(&value).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Sum of eigenvalues counted with multiplicity (the Laplacian trace).
    pub fn weighted_sum(&self) -> u64 {
        self.0.iter().map(|(&v, &m)| v * m as u64).sum()
    }

    /// Ascending `(eigenvalue, multiplicity)` pairs.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, usize)> + '_ {
        self.0.iter().map(|(&v, &m)| (v, m))
    }

    /// Eigenvalues with repetition, ascending.
    pub fn values(&self) -> Vec<u64> {
        self.iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset intersection: the minimum multiplicity of every value.
    pub fn intersection(&self, other: &SpectrumMultiset) -> SpectrumMultiset {
        SpectrumMultiset::from_pairs(
            self.iter()
                .map(|(v, m)| (v, m.min(other.multiplicity(v)))),
        )
    }
}

impl fmt::Display for SpectrumMultiset {
    /// Descending `value:multiplicity` tokens separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, m)) in self.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}:{m}")?;
        }
        Ok(())
    }
}

/// Which elimination rule a step used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subcase {
    /// Join parent, `alpha + beta != -2`.
    JoinRegular,
    /// Join parent, `alpha + beta == -2` and `beta == -1`.
    JoinUnitPair,
    /// Join parent, `alpha + beta == -2` and `beta != -1`; both rows final.
    JoinSplit,
    /// Union parent, `alpha + beta != 0`.
    UnionRegular,
    /// Union parent, `alpha + beta == 0` and `beta == 0`.
    UnionZeroPair,
    /// Union parent, `alpha + beta == 0` and `beta != 0`; both rows final.
    UnionSplit,
}

/// Result of eliminating one sibling pair `(v_k, v_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOutcome {
    pub subcase: Subcase,
    /// Final value of `v_k`.
    pub dk: Rational,
    /// New value of `v_l`; final as well when `both_final` is set.
    pub dl: Rational,
    pub both_final: bool,
}

/// Eliminates siblings with current values `alpha = d_k`, `beta = d_l`
/// under a parent of the given kind.
pub fn eliminate_pair(kind: Kind, alpha: &Rational, beta: &Rational) -> PairOutcome {
    let sum = alpha + beta;
    match kind {
        Kind::Join => {
            if sum != -2 {
                let denom = &sum + 2;
                PairOutcome {
                    subcase: Subcase::JoinRegular,
                    dl: (alpha * beta - 1) / &denom,
                    dk: denom,
                    both_final: false,
                }
            } else if *beta == -1 {
                PairOutcome {
                    subcase: Subcase::JoinUnitPair,
                    dl: Rational::from(-1),
                    dk: Rational::zero(),
                    both_final: false,
                }
            } else {
                let shifted = beta + 1;
                PairOutcome {
                    subcase: Subcase::JoinSplit,
                    dl: Rational::from(-1),
                    dk: &shifted * &shifted,
                    both_final: true,
                }
            }
        }
        Kind::Union => {
            if !sum.is_zero() {
                PairOutcome {
                    subcase: Subcase::UnionRegular,
                    dl: (alpha * beta) / &sum,
                    dk: sum,
                    both_final: false,
                }
            } else if beta.is_zero() {
                PairOutcome {
                    subcase: Subcase::UnionZeroPair,
                    dl: Rational::zero(),
                    dk: Rational::zero(),
                    both_final: false,
                }
            } else {
                PairOutcome {
                    subcase: Subcase::UnionSplit,
                    dl: beta.clone(),
                    dk: -beta,
                    both_final: true,
                }
            }
        }
    }
}

/// Values emitted while `m` equal siblings collapse to one, and the value
/// left on the survivor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchOutcome {
    /// `emitted[j - 1]` is the final value assigned at iteration `j`.
    pub emitted: Vec<Rational>,
    pub retained: Rational,
}

/// Closed form for `m` join siblings that all hold `y != -1`: iteration `j`
/// emits `(j+1)/j * (y+1)` and leaves `(y-j)/(j+1)` on the survivor.
pub fn batch_equal_join(y: &Rational, m: usize) -> Result<BatchOutcome, DiagonalizeError> {
    if m < 2 {
        return Err(DiagonalizeError::PreconditionViolated(format!(
            "need at least two siblings, got {m}"
        )));
    }
    if *y == -1 {
        return Err(DiagonalizeError::PreconditionViolated(
            "join siblings with value -1 take the singular subcase".into(),
        ));
    }
    let y1 = y + 1;
    let emitted = (1..m as i64)
        .map(|j| y1.scale(j + 1) / j)
        .collect();
    let last = m as i64 - 1;
    let retained = (y - last) / (last + 1);
    Ok(BatchOutcome { emitted, retained })
}

/// Closed form for `m` union siblings that all hold `y != 0`: iteration `j`
/// emits `(j+1)/j * y` and leaves `y/(j+1)` on the survivor.
pub fn batch_equal_union(y: &Rational, m: usize) -> Result<BatchOutcome, DiagonalizeError> {
    if m < 2 {
        return Err(DiagonalizeError::PreconditionViolated(format!(
            "need at least two siblings, got {m}"
        )));
    }
    if y.is_zero() {
        return Err(DiagonalizeError::PreconditionViolated(
            "union siblings with value 0 take the singular subcase".into(),
        ));
    }
    let emitted = (1..m as i64).map(|j| y.scale(j + 1) / j).collect();
    let retained = y / m as i64;
    Ok(BatchOutcome { emitted, retained })
}

/// Final diagonal of a run, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonal {
    pub values: Vec<Rational>,
    /// Elimination rules in the order applied.
    pub subcases: Vec<Subcase>,
}

impl Diagonal {
    pub fn inertia(&self) -> InertiaCount {
        let mut count = InertiaCount::default();
        for d in &self.values {
            if d.is_positive() {
                count.greater += 1;
            } else if d.is_negative() {
                count.less += 1;
            } else {
                count.equal += 1;
            }
        }
        count
    }

    /// Values sorted ascending, for comparing diagonals as multisets.
    pub fn sorted_values(&self) -> Vec<Rational> {
        let mut v = self.values.clone();
        v.sort();
        v
    }
}

fn initial_values(t: &Cotree, x: &Rational) -> Result<Vec<Rational>, DiagonalizeError> {
    if t.leaf_count() == 0 {
        return Err(DiagonalizeError::EmptyTree);
    }
    Ok(t.leaf_degrees()
        .into_iter()
        .map(|deg| x + deg as i64)
        .collect())
}

/// Diagonal congruent to `L(G) + xI` for the cograph of `t`.
///
/// Nodes are processed deepest first; within a node the two leftmost
/// remaining leaves are eliminated, the first taking the role of `v_k`. A
/// node left with one leaf hands it to its parent in its own position.
pub fn diagonalize(t: &Cotree, x: &Rational) -> Result<Diagonal, DiagonalizeError> {
    let mut d = initial_values(t, x)?;
    let mut subcases = Vec::with_capacity(d.len());
    let mut survivor: Vec<Option<usize>> = vec![None; t.nodes().len()];
    let mut pending: Vec<usize> = Vec::new();
    for id in t.postorder() {
        let (kind, children) = match t.node(id) {
            Node::Leaf(v) => {
                survivor[id] = Some(*v);
                continue;
            }
            Node::Interior { kind, children } => (*kind, children),
        };
        pending.clear();
        pending.extend(children.iter().filter_map(|&c| survivor[c]));
        let mut start = 0;
        let mut acc: Option<usize> = None;
        // Leading run of equal values: closed form.
        let run = pending
            .iter()
            .take_while(|&&v| d[v] == d[pending[0]])
            .count();
        if run >= 2 {
            let y = d[pending[0]].clone();
            let batch = match kind {
                Kind::Join => batch_equal_join(&y, run),
                Kind::Union => batch_equal_union(&y, run),
            };
            if let Ok(batch) = batch {
                for (j, value) in batch.emitted.into_iter().enumerate() {
                    d[pending[j]] = value;
                }
                d[pending[run - 1]] = batch.retained;
                let rule = match kind {
                    Kind::Join => Subcase::JoinRegular,
                    Kind::Union => Subcase::UnionRegular,
                };
                subcases.extend(std::iter::repeat_n(rule, run - 1));
                acc = Some(pending[run - 1]);
                start = run;
            }
        }
        for &l in &pending[start..] {
            let Some(k) = acc else {
                acc = Some(l);
                continue;
            };
            let step = eliminate_pair(kind, &d[k], &d[l]);
            subcases.push(step.subcase);
            d[k] = step.dk;
            d[l] = step.dl;
            acc = if step.both_final { None } else { Some(l) };
        }
        survivor[id] = acc;
    }
    Ok(Diagonal { values: d, subcases })
}

/// Counts Laplacian eigenvalues above, at, and below `x` from the sign
/// pattern of the diagonal congruent to `L(G) - xI`.
pub fn count_relative(t: &Cotree, x: &Rational) -> Result<InertiaCount, DiagonalizeError> {
    Ok(diagonalize(t, &-x)?.inertia())
}

/// Full Laplacian spectrum. Every integer `0..=n` is probed; the
/// multiplicities found must account for all `n` eigenvalues.
pub fn spectrum(t: &Cotree) -> Result<SpectrumMultiset, DiagonalizeError> {
    let n = t.leaf_count();
    if n == 0 {
        return Err(DiagonalizeError::EmptyTree);
    }
    let mut s = SpectrumMultiset::new();
    for x in 0..=n as i64 {
        let count = count_relative(t, &Rational::from(x))?;
        s.insert(x as u64, count.equal);
        if s.total() == n || count.greater == 0 {
            break;
        }
    }
    if s.total() != n {
        return Err(DiagonalizeError::IntegralityViolation {
            found: s.total(),
            expected: n,
        });
    }
    Ok(s)
}

/// Picks the next sibling pair for [`diagonalize_by_selection`].
pub trait PairSelector {
    /// `candidates` lists interior nodes with at least two leaf children as
    /// `(node, depth, leaf children in order)`, in left-to-right preorder.
    /// Returns the node index into `candidates` and the `(k, l)` positions
    /// within its leaf list.
    fn select(&mut self, candidates: &[(NodeId, usize, Vec<NodeId>)]) -> (usize, usize, usize);
}

/// Deepest node, leftmost among equals, and its two leftmost leaves.
#[derive(Debug, Default, Clone, Copy)]
pub struct DeepestLeftmost;

impl PairSelector for DeepestLeftmost {
    fn select(&mut self, candidates: &[(NodeId, usize, Vec<NodeId>)]) -> (usize, usize, usize) {
        let deepest = candidates.iter().map(|c| c.1).max().expect("nonempty");
        let index = candidates
            .iter()
            .position(|c| c.1 == deepest)
            .expect("present");
        (index, 0, 1)
    }
}

/// Uniformly random node, random pair, random roles.
pub struct RandomPair<R: Rng>(pub R);

impl<R: Rng> PairSelector for RandomPair<R> {
    fn select(&mut self, candidates: &[(NodeId, usize, Vec<NodeId>)]) -> (usize, usize, usize) {
        let index = self.0.gen_range(0..candidates.len());
        let leaves = candidates[index].2.len();
        let k = self.0.gen_range(0..leaves);
        let mut l = self.0.gen_range(0..leaves - 1);
        if l >= k {
            l += 1;
        }
        (index, k, l)
    }
}

/// Reference elimination on an explicitly rewritten tree. Each step removes
/// the final leaves, deletes interior nodes left without children and
/// contracts those left with one child into the grandparent.
/// Quadratic time; intended for verification.
pub fn diagonalize_by_selection(
    t: &Cotree,
    x: &Rational,
    selector: &mut impl PairSelector,
) -> Result<Diagonal, DiagonalizeError> {
    let mut d = initial_values(t, x)?;
    let mut subcases = Vec::new();
    let mut kinds: Vec<Option<Kind>> = t.nodes().iter().map(Node::kind).collect();
    let mut children: Vec<Vec<NodeId>> = t.nodes().iter().map(|n| n.children().to_vec()).collect();
    let mut parent: Vec<Option<NodeId>> = t.parents();
    let vertex_of: Vec<Option<usize>> = t
        .nodes()
        .iter()
        .map(|n| match n {
            Node::Leaf(v) => Some(*v),
            Node::Interior { .. } => None,
        })
        .collect();
    let mut root = t.root();
    let mut remaining = d.len();

    while remaining >= 2 {
        // preorder scan with depths
        let mut candidates = Vec::new();
        let mut stack = vec![(root, 0usize)];
        while let Some((id, depth)) = stack.pop() {
            if kinds[id].is_none() {
                continue;
            }
            let leaves: Vec<NodeId> = children[id]
                .iter()
                .copied()
                .filter(|&c| kinds[c].is_none())
                .collect();
            if leaves.len() >= 2 {
                candidates.push((id, depth, leaves));
            }
            stack.extend(children[id].iter().rev().map(|&c| (c, depth + 1)));
        }
        assert!(!candidates.is_empty(), "a normalized cotree always has a sibling pair");
        let (index, k_pos, l_pos) = selector.select(&candidates);
        let (w, _, leaves) = &candidates[index];
        let (w, k, l) = (*w, leaves[k_pos], leaves[l_pos]);
        let (vk, vl) = (vertex_of[k].expect("leaf"), vertex_of[l].expect("leaf"));
        let step = eliminate_pair(kinds[w].expect("interior"), &d[vk], &d[vl]);
        subcases.push(step.subcase);
        d[vk] = step.dk;
        d[vl] = step.dl;
        children[w].retain(|&c| c != k && !(step.both_final && c == l));
        remaining -= if step.both_final { 2 } else { 1 };

        // tidy upwards from w
        let mut node = w;
        loop {
            match children[node].len() {
                0 => {
                    let Some(p) = parent[node] else { break };
                    children[p].retain(|&c| c != node);
                    node = p;
                }
                1 => {
                    let only = children[node][0];
                    match parent[node] {
                        Some(p) => {
                            let slot = children[p].iter().position(|&c| c == node).expect("child");
                            children[p][slot] = only;
                            parent[only] = Some(p);
                        }
                        None => {
                            root = only;
                            parent[only] = None;
                        }
                    }
                    children[node].clear();
                    kinds[node] = None;
                    break;
                }
                _ => break,
            }
        }
    }
    Ok(Diagonal { values: d, subcases })
}
