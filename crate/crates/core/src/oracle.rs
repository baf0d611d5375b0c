//! Brute-force reference computations used to cross-check the cotree
//! algorithms. None of these routines look at a cotree.

use thiserror::Error;

use crate::diagonalize::{InertiaCount, SpectrumMultiset};
use crate::graph::Graph;
use crate::twins::{ClassType, TwinClass, TwinPartition};

/// Largest graph accepted by [`dense_laplacian_spectrum`].
pub const MAX_DENSE_ORDER: usize = 200;
/// Largest graph accepted by [`brute_twin_partition`].
pub const MAX_TWIN_ORDER: usize = 500;
/// Largest graph accepted by [`brute_isomorphic`].
pub const MAX_ISO_ORDER: usize = 8;

/// Jacobi stops once every off-diagonal entry is below this magnitude.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-10;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("graph on {n} vertices exceeds the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
}

/// Eigenvalues of a Laplacian in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSpectrum {
    pub values: Vec<f64>,
    /// Off-diagonal threshold the Jacobi iteration ran to.
    pub tolerance: f64,
}

impl DenseSpectrum {
    /// Counts eigenvalues above, within `tol` of, and below `x`.
    pub fn count_relative(&self, x: f64, tol: f64) -> InertiaCount {
        let mut count = InertiaCount::default();
        for &mu in &self.values {
            if (mu - x).abs() <= tol {
                count.equal += 1;
            } else if mu > x {
                count.greater += 1;
            } else {
                count.less += 1;
            }
        }
        count
    }

    /// Rounds every eigenvalue to the nearest integer, or `None` if one of
    /// them is farther than `tol` from an integer or is negative.
    pub fn to_integer_spectrum(&self, tol: f64) -> Option<SpectrumMultiset> {
        let mut pairs = Vec::with_capacity(self.values.len());
        for &mu in &self.values {
            let r = mu.round();
            if (mu - r).abs() > tol || r < 0.0 {
                return None;
            }
            pairs.push(r as u64);
        }
        Some(SpectrumMultiset::from_values(pairs))
    }
}

/// Laplacian eigenvalues by cyclic Jacobi rotations on the dense matrix.
pub fn dense_laplacian_spectrum(g: &Graph) -> Result<DenseSpectrum, OracleError> {
    let n = g.n();
    if n == 0 {
        return Err(OracleError::Empty);
    }
    if n > MAX_DENSE_ORDER {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_DENSE_ORDER,
        });
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for (v, row) in a.iter_mut().enumerate() {
        row[v] = g.degree(v).expect("in range") as f64;
    }
    for (u, v) in g.edges() {
        a[u][v] = -1.0;
        a[v][u] = -1.0;
    }
    let mut values = jacobi_eigenvalues(a)?;
    values.sort_by(f64::total_cmp);
    Ok(DenseSpectrum {
        values,
        tolerance: OFF_DIAGONAL_TOLERANCE,
    })
}

fn max_off_diagonal(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut max = 0.0f64;
    for p in 0..n {
        for q in p + 1..n {
            max = max.max(a[p][q].abs());
        }
    }
    max
}

fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>, OracleError> {
    let n = a.len();
    for _ in 0..MAX_SWEEPS {
        if max_off_diagonal(&a) < OFF_DIAGONAL_TOLERANCE {
            return Ok((0..n).map(|i| a[i][i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                // rotation angle zeroing a[p][q]
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let residual = max_off_diagonal(&a);
    if residual < OFF_DIAGONAL_TOLERANCE {
        Ok((0..n).map(|i| a[i][i]).collect())
    } else {
        Err(OracleError::NoConvergence {
            sweeps: MAX_SWEEPS,
            residual,
        })
    }
}

/// An induced path on four vertices, listed in path order with the smaller
/// endpoint first, or `None` for cographs.
pub fn find_p4(g: &Graph) -> Option<[usize; 4]> {
    for (x, y) in g.edges() {
        for (b, c) in [(x, y), (y, x)] {
            let nb = g.neighbors(b).expect("in range");
            let nc = g.neighbors(c).expect("in range");
            for &a in nb {
                if a == c || nc.contains(&a) {
                    continue;
                }
                for &d in nc {
                    if d == b || d == a || nb.contains(&d) || g.has_edge(a, d) {
                        continue;
                    }
                    return Some(if a < d { [a, b, c, d] } else { [d, c, b, a] });
                }
            }
        }
    }
    None
}

/// Twin classes by direct comparison of `N(v) - w` and `N(w) - v` over all
/// vertex pairs.
pub fn brute_twin_partition(g: &Graph) -> Result<TwinPartition, OracleError> {
    let n = g.n();
    if n > MAX_TWIN_ORDER {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_TWIN_ORDER,
        });
    }
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[v] = Some(id);
        let mut members = vec![v];
        let nv = g.neighbors(v).expect("in range");
        for w in v + 1..n {
            if class_of[w].is_some() {
                continue;
            }
            let nw = g.neighbors(w).expect("in range");
            let left = nv.iter().filter(|&&x| x != w);
            let right = nw.iter().filter(|&&x| x != v);
            if left.eq(right) {
                class_of[w] = Some(id);
                members.push(w);
            }
        }
        classes.push(members);
    }
    let classes = classes
        .into_iter()
        .map(|members| {
            let kind = if members.len() < 2 {
                ClassType::Singleton
            } else if g.has_edge(members[0], members[1]) {
                ClassType::Clique
            } else {
                ClassType::Coclique
            };
            TwinClass { members, kind }
        })
        .collect();
    Ok(TwinPartition::new(classes))
}

/// Isomorphism test by backtracking over vertex permutations.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> Result<bool, OracleError> {
    let n = a.n().max(b.n());
    if n > MAX_ISO_ORDER {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_ISO_ORDER,
        });
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    Ok(extend(a, b, 0, &mut image, &mut used))
}

fn extend(a: &Graph, b: &Graph, v: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(a, b, v + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    false
}
