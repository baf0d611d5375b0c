// Cospectral nonisomorphic cographs on 2n+1 vertices and their
// extensions by joining with an arbitrary n-vertex cograph.

use cograph_spectra::cotree::Cotree;
use cograph_spectra::families::{cospectral_family, family_pair};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 3..=5 {
        let p = family_pair(n)?;
        println!("n={n}: {}  {}  spectrum {}", p.first, p.second, p.spectrum);
    }
    let p = cospectral_family(&Cotree::parse("U(1,J(2))")?, 3)?;
    println!("with prefix: {}  {}  spectrum {}", p.first, p.second, p.spectrum);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
