// Building a cotree from an edge list, or finding an induced P4.

use cograph_spectra::cotree::Cotree;
use cograph_spectra::graph::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = Graph::parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n")?;
    let t = Cotree::from_graph(&c4)?;
    println!("C4 -> {} ({})", t.render(), t.render_with_ids());

    let p4 = Graph::path(4);
    match Cotree::from_graph(&p4) {
        Ok(t) => println!("P4 -> {t}"),
        Err(e) => println!("P4 rejected, witness {:?}", e.witness),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
