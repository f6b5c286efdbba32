// Build lattices from Hasse diagrams, attach multiplications, and classify
// which axioms they satisfy.

use mult_lattice::{catalog, classify_multiplication, FiniteLattice, MultTable, Result};

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    // The pentagon: 0 < a < b < 1 over one leg, 0 < c < 1 over the other.
    let n5 = FiniteLattice::from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )?
    .named("n5");
    println!("n5: {} elements, modular: {}", n5.len(), n5.is_modular().pass);

    // Meet as multiplication only reaches the V-lattice level on n5:
    // meet does not distribute over join here.
    let meet = MultTable::meet_of(&n5);
    let m = classify_multiplication(&n5, meet);
    match m.violation() {
        Some(v) => println!("n5 with meet: {} ({})", m.class().as_str(), v.render(&n5)),
        None => println!("n5 with meet: {}", m.class().as_str()),
    }

    // The ideal lattice of Z_12 is fully multiplicative, modular, and
    // principally generated.
    let z12 = catalog::builtin("idz12")?;
    let flags = z12.class_flags();
    println!(
        "idz12: class {}, c-lattice: {}, r-lattice: {}, reduced: {}",
        z12.class().as_str(),
        flags.c_lattice,
        flags.r_lattice,
        z12.is_reduced().pass,
    );

    // Per-element structure flags.
    for e in 0..z12.len() {
        let f = z12.element_predicates(e);
        println!(
            "  {}: nilpotent={} dense={} essential={} zero-divisor={} annihilator={} principal={}",
            z12.lattice().label(e),
            f.nilpotent,
            f.dense,
            f.essential,
            f.zero_divisor,
            f.annihilator,
            f.principal,
        );
    }
    Ok(())
}
