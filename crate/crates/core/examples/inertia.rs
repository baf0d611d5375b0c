// Locating eigenvalues around a point without computing them.
//
// `count_relative` diagonalizes `L - xI` on the cotree and reads off how
// many diagonal entries are positive, zero and negative.

use cograph_spectra::cotree::Cotree;
use cograph_spectra::diagonalize::{count_relative, diagonalize};
use cograph_spectra::rational::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = Cotree::parse("J(U(3),U(J(3),1))")?;
    for at in ["-1", "0", "7/2", "4", "6", "15/2"] {
        let x: Rational = at.parse()?;
        println!("x={at:<5} greater/equal/less = {}", count_relative(&t, &x)?);
    }

    let k3 = Cotree::complete(3);
    let d = diagonalize(&k3, &Rational::from_integer(-3))?;
    let values: Vec<String> = d.values.iter().map(ToString::to_string).collect();
    println!("K3 at x=3: diagonal {}", values.join(" "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
