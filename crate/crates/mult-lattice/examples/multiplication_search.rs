// Enumerate every multiplication a lattice admits, at either axiom level.
// The pentagon carries twelve V-lattice structures and no multiplicative
// one.

use mult_lattice::{catalog, search_multiplications, textfmt, Result, SearchLevel};

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    let n5 = catalog::builtin("n5")?.lattice().clone();
    let mult = search_multiplications(&n5, SearchLevel::Multiplicative, None, 0)?;
    println!("n5, multiplicative level: count {} (complete: {})", mult.count, mult.complete);

    let v = search_multiplications(&n5, SearchLevel::VLattice, None, 1)?;
    println!("n5, v-lattice level: count {} in {} nodes", v.count, v.nodes);
    println!("one witness table:");
    print!("{}", textfmt::serialize_parts(&n5, Some(&v.examples[0]), None));

    // Larger hosts take a node budget and report a lower bound.
    let z24 = catalog::builtin("idz24")?.lattice().clone();
    let partial = search_multiplications(&z24, SearchLevel::VLattice, Some(5_000), 0)?;
    println!(
        "idz24 with a 5000-node budget: count >= {} (complete: {})",
        partial.count, partial.complete
    );
    Ok(())
}
