//! Laplacian eigenvalues of cographs.
//!
//! A cograph is given by its cotree. [`diagonalize::count_relative`] tells
//! how many Laplacian eigenvalues lie above, at and below any rational
//! point in time linear in the number of vertices, by diagonalizing
//! `L + xI` directly on the cotree with exact arithmetic. Everything else
//! builds on that: full integer spectra, twin classes and reductions,
//! equivalence of cographs with the same reduction, and families of
//! cospectral nonisomorphic cographs.
//!
//! ```
//! use cograph_spectra::cotree::Cotree;
//! use cograph_spectra::diagonalize::spectrum;
//!
//! let g = Cotree::parse("J(U(3),U(J(3),1))").unwrap();
//! assert_eq!(spectrum(&g).unwrap().to_string(), "7:1 6:2 4:2 3:1 0:1");
//! ```

pub mod analysis;
pub mod cli;
pub mod cotree;
pub mod diagonalize;
pub mod families;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod twins;

pub use cotree::{Cotree, Kind};
pub use diagonalize::{count_relative, spectrum, InertiaCount, SpectrumMultiset};
pub use graph::Graph;
pub use rational::Rational;
