//! Families of nonisomorphic cographs sharing a Laplacian spectrum.
//!
//! `G_{2n+1} = nK_1 ⊗ (K_n ∪ K_1)` and
//! `H_{2n+1} = (((n-1)K_1 ⊗ K_1) ∪ K_1) ⊗ (K_{n-1} ∪ K_1)` are cospectral
//! for every `n >= 3`, and joining both with any cograph on `n` vertices
//! keeps them cospectral.

use thiserror::Error;

use crate::cotree::{Cotree, Kind};
use crate::diagonalize::{spectrum, DiagonalizeError, SpectrumMultiset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("construction needs n >= 3, got {0}")]
    NTooSmall(usize),
    #[error("spectrum on {n} vertices has no zero eigenvalue")]
    MissingZero { n: usize },
    #[error("spectrum lists {found} eigenvalues for a graph on {n} vertices")]
    SizeMismatch { n: usize, found: usize },
    #[error("prefix cograph has {found} vertices, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Spectrum(#[from] DiagonalizeError),
}

/// Spectrum of the join of graphs on `n1` and `n2` vertices with spectra
/// `s1` and `s2`: drop one zero from each, shift the rest of `s1` by `n2`
/// and of `s2` by `n1`, and add `0` and `n1 + n2`.
pub fn join_spectrum(
    s1: &SpectrumMultiset,
    n1: usize,
    s2: &SpectrumMultiset,
    n2: usize,
) -> Result<SpectrumMultiset, FamilyError> {
    for (s, n) in [(s1, n1), (s2, n2)] {
        if s.total() != n {
            return Err(FamilyError::SizeMismatch { n, found: s.total() });
        }
        if s.multiplicity(0) == 0 {
            return Err(FamilyError::MissingZero { n });
        }
    }
    let mut out = SpectrumMultiset::new();
    out.insert(0, 1);
    out.insert((n1 + n2) as u64, 1);
    for (s, shift) in [(s1, n2), (s2, n1)] {
        for (value, mult) in s.iter() {
            let mult = if value == 0 { mult - 1 } else { mult };
            out.insert(value + shift as u64, mult);
        }
    }
    Ok(out)
}

/// `nK_1 ⊗ (K_n ∪ K_1)`.
pub fn build_g(n: usize) -> Result<Cotree, FamilyError> {
    if n < 3 {
        return Err(FamilyError::NTooSmall(n));
    }
    Ok(Cotree::combine(
        Kind::Join,
        vec![
            Cotree::edgeless(n),
            Cotree::combine(Kind::Union, vec![Cotree::complete(n), Cotree::single()]),
        ],
    ))
}

/// `(((n-1)K_1 ⊗ K_1) ∪ K_1) ⊗ (K_{n-1} ∪ K_1)`.
pub fn build_h(n: usize) -> Result<Cotree, FamilyError> {
    if n < 3 {
        return Err(FamilyError::NTooSmall(n));
    }
    let star = Cotree::combine(Kind::Join, vec![Cotree::edgeless(n - 1), Cotree::single()]);
    Ok(Cotree::combine(
        Kind::Join,
        vec![
            Cotree::combine(Kind::Union, vec![star, Cotree::single()]),
            Cotree::combine(Kind::Union, vec![Cotree::complete(n - 1), Cotree::single()]),
        ],
    ))
}

/// `{2n+1: 1, 2n: n-1, n+1: n-1, n: 1, 0: 1}`.
pub fn family_spectrum(n: usize) -> SpectrumMultiset {
    let n64 = n as u64;
    SpectrumMultiset::from_pairs([
        (2 * n64 + 1, 1),
        (2 * n64, n - 1),
        (n64 + 1, n - 1),
        (n64, 1),
        (0, 1),
    ])
}

/// Two nonisomorphic cographs with one shared spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CospectralPair {
    pub first: Cotree,
    pub second: Cotree,
    pub spectrum: SpectrumMultiset,
}

fn verified_pair(first: Cotree, second: Cotree) -> Result<CospectralPair, FamilyError> {
    let s1 = spectrum(&first)?;
    let s2 = spectrum(&second)?;
    if s1 != s2 {
        return Err(FamilyError::VerificationFailed(format!(
            "spectra differ: {s1} vs {s2}"
        )));
    }
    if first.canonical_form(None) == second.canonical_form(None) {
        return Err(FamilyError::VerificationFailed("pair is isomorphic".into()));
    }
    Ok(CospectralPair {
        first,
        second,
        spectrum: s1,
    })
}

/// `(G_{2n+1}, H_{2n+1})`, checked against the closed-form spectrum.
pub fn family_pair(n: usize) -> Result<CospectralPair, FamilyError> {
    let pair = verified_pair(build_g(n)?, build_h(n)?)?;
    let expected = family_spectrum(n);
    if pair.spectrum != expected {
        return Err(FamilyError::VerificationFailed(format!(
            "spectrum {} differs from closed form {expected}",
            pair.spectrum
        )));
    }
    Ok(pair)
}

/// `(prefix ⊗ G_{2n+1}, prefix ⊗ H_{2n+1})` for a prefix on `n` vertices.
/// The shared spectrum is computed directly and also predicted from the
/// join rule; both must agree.
pub fn cospectral_family(prefix: &Cotree, n: usize) -> Result<CospectralPair, FamilyError> {
    let order = prefix.leaf_count();
    if order != n {
        return Err(FamilyError::OrderMismatch {
            expected: n,
            found: order,
        });
    }
    let (g, h) = (build_g(n)?, build_h(n)?);
    let pair = verified_pair(
        Cotree::combine(Kind::Join, vec![prefix.clone(), g]),
        Cotree::combine(Kind::Join, vec![prefix.clone(), h]),
    )?;
    let predicted = join_spectrum(&spectrum(prefix)?, n, &family_spectrum(n), 2 * n + 1)?;
    if predicted != pair.spectrum {
        return Err(FamilyError::VerificationFailed(format!(
            "join rule predicts {predicted}, computed {}",
            pair.spectrum
        )));
    }
    Ok(pair)
}
