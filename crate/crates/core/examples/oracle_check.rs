// Cross-checking exact eigenvalue counts against a dense floating-point
// eigensolver on random cographs.

use cograph_spectra::diagonalize::count_relative;
use cograph_spectra::generate::{random_cotree, rng_from_seed};
use cograph_spectra::oracle::dense_laplacian_spectrum;
use cograph_spectra::rational::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = rng_from_seed(11);
    let mut checked = 0;
    for n in 2..=10 {
        let t = random_cotree(&mut rng, n);
        let dense = dense_laplacian_spectrum(&t.to_graph())?;
        for half in -2..=2 * n as i64 + 2 {
            let x = Rational::new(half, 2);
            let exact = count_relative(&t, &x)?;
            let approx = dense.count_relative(half as f64 / 2.0, 1e-8);
            assert_eq!(exact, approx, "{t} at {x}");
            checked += 1;
        }
    }
    println!("{checked} queries agree with the dense solver");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
