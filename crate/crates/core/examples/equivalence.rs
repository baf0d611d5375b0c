// Equivalent cographs and the eigenvalues they must share.
//
// Two cographs are equivalent when their twin reductions agree as
// labelled graphs. Every class whose type is the same on both sides
// contributes its whole multiplicity to the shared part of the spectrum.

use cograph_spectra::analysis::{degree_relation, verify_conjecture};
use cograph_spectra::cotree::Cotree;
use cograph_spectra::generate::{random_equivalent_pair, rng_from_seed};
use cograph_spectra::twins::are_equivalent;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Cotree::parse("J(1,U(J(2),J(2)))")?;
    let h = Cotree::parse("J(1,U(2,J(2)))")?;
    let r = verify_conjecture(&g, &h)?;
    println!("{} vs {}", r.first_spectrum, r.second_spectrum);
    println!("k={} bound={} common={}", r.k, r.bound, r.common);

    let m = are_equivalent(&g, &h).ok_or("pair should be equivalent")?;
    for c in degree_relation(&g, &h, &m)? {
        println!(
            "class {} -> {}: {} degree {}, {} degree {}",
            c.class, c.partner, c.first_type, c.first_degree, c.second_type, c.second_degree
        );
    }

    let mut rng = rng_from_seed(5);
    for _ in 0..3 {
        let (a, b) = random_equivalent_pair(&mut rng, 6, 12);
        let r = verify_conjecture(&a, &b)?;
        println!("{a}  ~  {b}: common {} >= {}", r.common, r.bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
