// Twin classes and the twin reduction of a cograph.

use cograph_spectra::cotree::Cotree;
use cograph_spectra::twins::{reduction, twin_partition_from_cotree};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = Cotree::parse("J(U(J(U(2),1),1),U(J(3),1),1)")?;
    let p = twin_partition_from_cotree(&t);
    println!("twin numbers {:?}", p.twin_numbers());
    for class in p.classes() {
        println!("  {:<9} {:?}", class.kind, class.members);
    }
    let r = reduction(&t);
    println!("reduced on {} vertices: {}", r.k(), r.cotree.render());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
