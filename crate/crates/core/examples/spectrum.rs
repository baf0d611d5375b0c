// Full Laplacian spectrum of a cograph given as a cotree expression.

use cograph_spectra::cotree::Cotree;
use cograph_spectra::diagonalize::spectrum;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["J(2)", "U(J(2),J(2))", "J(U(3),U(J(3),1))", "J(1,U(J(2),J(2)))"] {
        let t = Cotree::parse(text)?;
        let s = spectrum(&t)?;
        println!("{text:<22} n={:<2} {s}", t.leaf_count());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
