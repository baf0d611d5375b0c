//! Shared Laplacian eigenvalues of equivalent cographs.
//!
//! For equivalent cographs `G` and `H` with `k` twin classes, the number of
//! eigenvalues they share (with multiplicity) is at least `k + sum(t_i - 1)`
//! over the classes `i` whose type is the same in both. This module
//! computes both sides of that inequality, checks the degree relation and
//! the per-class eigenvalue claims it rests on, and searches generated
//! corpora for equivalent cospectral pairs that are not isomorphic.

use thiserror::Error;

use crate::cotree::Cotree;
use crate::diagonalize::{spectrum, DiagonalizeError, SpectrumMultiset};
use crate::generate::{random_equivalent_pair, rng_from_seed};
use crate::twins::{are_equivalent, twin_partition_from_cotree, ClassType, EquivalenceMatch};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("the cographs are not equivalent")]
    NotEquivalent,
    #[error(
        "degree relation violated for class {class}: degrees {first} ({first_type}) and {second} ({second_type}), twin number {twin_number}"
    )]
    RelationViolated {
        class: usize,
        first: usize,
        second: usize,
        first_type: ClassType,
        second_type: ClassType,
        twin_number: usize,
    },
    #[error(transparent)]
    Spectrum(#[from] DiagonalizeError),
}

/// Multiset intersection of two spectra and its size.
pub fn common_spectrum(a: &SpectrumMultiset, b: &SpectrumMultiset) -> (SpectrumMultiset, usize) {
    let common = a.intersection(b);
    let count = common.total();
    (common, count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub k: usize,
    /// Classes of the first cograph matched to a class of the same type.
    pub identical: Vec<usize>,
    pub bound: usize,
    pub common: usize,
    pub holds: bool,
    pub first_spectrum: SpectrumMultiset,
    pub second_spectrum: SpectrumMultiset,
}

/// Compares the shared-eigenvalue count of two equivalent cographs with the
/// bound implied by their class correspondence.
pub fn verify_conjecture(g: &Cotree, h: &Cotree) -> Result<ConjectureReport, AnalysisError> {
    let matching = are_equivalent(g, h).ok_or(AnalysisError::NotEquivalent)?;
    let first_spectrum = spectrum(g)?;
    let second_spectrum = spectrum(h)?;
    let (_, common) = common_spectrum(&first_spectrum, &second_spectrum);
    let bound = matching.bound();
    Ok(ConjectureReport {
        k: matching.k(),
        identical: matching.identical,
        bound,
        common,
        holds: common >= bound,
        first_spectrum,
        second_spectrum,
    })
}

/// Eigenvalue forced by a twin class of size `t >= 2`, with its guaranteed
/// multiplicity `t - 1` and the multiplicity actually found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEigenvalueClaim {
    pub class: usize,
    pub eigenvalue: u64,
    pub min_multiplicity: usize,
    pub observed: usize,
}

impl ClassEigenvalueClaim {
    pub fn confirmed(&self) -> bool {
        self.observed >= self.min_multiplicity
    }
}

/// One claim per class with at least two members: the representative's
/// degree for a coclique, degree plus one for a clique.
pub fn class_eigenvalues(t: &Cotree) -> Result<Vec<ClassEigenvalueClaim>, AnalysisError> {
    let partition = twin_partition_from_cotree(t);
    let degrees = t.leaf_degrees();
    let s = spectrum(t)?;
    let claims = partition
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.members.len() >= 2)
        .map(|(class, c)| {
            let degree = degrees[c.members[0]] as u64;
            let eigenvalue = match c.kind {
                ClassType::Clique => degree + 1,
                _ => degree,
            };
            ClassEigenvalueClaim {
                class,
                eigenvalue,
                min_multiplicity: c.members.len() - 1,
                observed: s.multiplicity(eigenvalue),
            }
        })
        .collect();
    Ok(claims)
}

/// Degree comparison for one matched class pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    pub class: usize,
    pub partner: usize,
    pub first_degree: usize,
    pub second_degree: usize,
    pub first_type: ClassType,
    pub second_type: ClassType,
    /// Whether the coclique-side representative exceeds the clique side by
    /// `t - 1`, the opposite of the relation that holds.
    pub reversed_relation_holds: bool,
}

/// Checks that matched representatives have equal degrees when their class
/// types agree, and otherwise that the clique side exceeds the coclique
/// side by exactly `t - 1`.
pub fn degree_relation(
    g: &Cotree,
    h: &Cotree,
    matching: &EquivalenceMatch,
) -> Result<Vec<DegreeCheck>, AnalysisError> {
    let pg = twin_partition_from_cotree(g);
    let ph = twin_partition_from_cotree(h);
    let dg = g.leaf_degrees();
    let dh = h.leaf_degrees();
    let mut checks = Vec::with_capacity(matching.k());
    for (class, &partner) in matching.class_map.iter().enumerate() {
        let (cg, ch) = (&pg.classes()[class], &ph.classes()[partner]);
        let (first, second) = (dg[cg.members[0]], dh[ch.members[0]]);
        let t = cg.members.len();
        let violation = || AnalysisError::RelationViolated {
            class,
            first,
            second,
            first_type: cg.kind,
            second_type: ch.kind,
            twin_number: t,
        };
        let (clique_side, coclique_side) = match (cg.kind, ch.kind) {
            (a, b) if a == b => {
                if first != second {
                    return Err(violation());
                }
                checks.push(DegreeCheck {
                    class,
                    partner,
                    first_degree: first,
                    second_degree: second,
                    first_type: cg.kind,
                    second_type: ch.kind,
                    reversed_relation_holds: false,
                });
                continue;
            }
            (ClassType::Clique, ClassType::Coclique) => (first, second),
            (ClassType::Coclique, ClassType::Clique) => (second, first),
            _ => return Err(violation()),
        };
        if clique_side != coclique_side + (t - 1) {
            return Err(violation());
        }
        checks.push(DegreeCheck {
            class,
            partner,
            first_degree: first,
            second_degree: second,
            first_type: cg.kind,
            second_type: ch.kind,
            reversed_relation_holds: coclique_side == clique_side + (t - 1),
        });
    }
    Ok(checks)
}

/// An equivalent, cospectral, nonisomorphic pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub first: Cotree,
    pub second: Cotree,
    pub spectrum: SpectrumMultiset,
}

/// Whether an equivalent pair would contradict "equivalent and cospectral
/// implies isomorphic".
pub fn is_counterexample(g: &Cotree, h: &Cotree) -> Result<Option<Counterexample>, AnalysisError> {
    let sg = spectrum(g)?;
    let sh = spectrum(h)?;
    if sg == sh && g.canonical_form(None) != h.canonical_form(None) {
        Ok(Some(Counterexample {
            first: g.clone(),
            second: h.clone(),
            spectrum: sg,
        }))
    } else {
        Ok(None)
    }
}

/// Runs `trials` seeded equivalent pairs with `min_n..=max_n` vertices and
/// collects counterexamples in generation order.
pub fn counterexample_search(
    seed: u64,
    trials: usize,
    min_n: usize,
    max_n: usize,
) -> Result<Vec<Counterexample>, AnalysisError> {
    let mut rng = rng_from_seed(seed);
    let mut found = Vec::new();
    for _ in 0..trials {
        let (g, h) = random_equivalent_pair(&mut rng, min_n, max_n);
        if let Some(c) = is_counterexample(&g, &h)? {
            found.push(c);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(text: &str) -> Cotree {
        Cotree::parse(text).unwrap()
    }

    #[test]
    fn common_spectrum_examples() {
        let a = SpectrumMultiset::from_pairs([(0, 1), (1, 1), (3, 2), (5, 1)]);
        let b = SpectrumMultiset::from_pairs([(0, 1), (1, 2), (3, 1), (5, 1)]);
        let (common, count) = common_spectrum(&a, &b);
        assert_eq!(common, SpectrumMultiset::from_pairs([(0, 1), (1, 1), (3, 1), (5, 1)]));
        assert_eq!(count, 4);
        assert_eq!(common_spectrum(&a, &a), (a.clone(), 5));
        let k3 = spectrum(&Cotree::complete(3)).unwrap();
        let e3 = spectrum(&Cotree::edgeless(3)).unwrap();
        assert_eq!(common_spectrum(&k3, &e3), (SpectrumMultiset::from_pairs([(0, 1)]), 1));
    }

    #[test]
    fn worked_pair_meets_the_bound_exactly() {
        let g = tree("J(1,U(J(2),J(2)))");
        let h = tree("J(1,U(2,J(2)))");
        let report = verify_conjecture(&g, &h).unwrap();
        assert_eq!(report.first_spectrum.values(), vec![0, 1, 3, 3, 5]);
        assert_eq!(report.second_spectrum.values(), vec![0, 1, 1, 3, 5]);
        assert_eq!((report.k, report.bound, report.common), (3, 4, 4));
        assert!(report.holds);
    }

    #[test]
    fn self_pair_shares_everything() {
        let g = tree("J(U(3),U(J(3),1))");
        let report = verify_conjecture(&g, &g).unwrap();
        assert_eq!((report.bound, report.common), (7, 7));
    }

    #[test]
    fn non_equivalent_pair_is_rejected() {
        let g = tree("J(U(3),U(J(3),1))");
        let h = tree("J(U(J(U(2),1),1),U(J(2),1))");
        assert_eq!(verify_conjecture(&g, &h), Err(AnalysisError::NotEquivalent));
    }

    #[test]
    fn class_eigenvalue_claims() {
        let claims = class_eigenvalues(&Cotree::complete(4)).unwrap();
        assert_eq!(
            claims,
            vec![ClassEigenvalueClaim { class: 0, eigenvalue: 4, min_multiplicity: 3, observed: 3 }]
        );
        let claims = class_eigenvalues(&tree("J(1,U(J(2),J(2)))")).unwrap();
        assert_eq!(claims.len(), 2);
        assert!(claims.iter().all(|c| c.eigenvalue == 3 && c.min_multiplicity == 1 && c.observed == 2));
        let claims = class_eigenvalues(&tree("J(U(3),U(J(3),1))")).unwrap();
        let pairs: Vec<_> = claims.iter().map(|c| (c.eigenvalue, c.min_multiplicity)).collect();
        assert_eq!(pairs, vec![(4, 2), (6, 2)]);
        assert!(claims.iter().all(ClassEigenvalueClaim::confirmed));
    }

    #[test]
    fn degree_relation_on_worked_pair() {
        let g = tree("J(1,U(J(2),J(2)))");
        let h = tree("J(1,U(2,J(2)))");
        let m = are_equivalent(&g, &h).unwrap();
        let checks = degree_relation(&g, &h, &m).unwrap();
        let changed: Vec<_> = checks.iter().filter(|c| c.first_type != c.second_type).collect();
        assert_eq!(changed.len(), 1);
        assert_eq!((changed[0].first_degree, changed[0].second_degree), (2, 1));
        assert!(!changed[0].reversed_relation_holds);
        assert!(checks
            .iter()
            .filter(|c| c.first_type == c.second_type)
            .all(|c| c.first_degree == c.second_degree));
    }

    #[test]
    fn isomorphic_pair_is_not_a_counterexample() {
        let g = tree("J(1,U(J(2),J(2)))");
        let h = tree("J(U(J(2),J(2)),1)");
        assert_eq!(is_counterexample(&g, &h), Ok(None));
    }
}
