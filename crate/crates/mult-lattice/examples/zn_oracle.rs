// The ring side of Z_n as an independent oracle: colon ideals and S-prime
// ideals computed over raw residues, cross-checked against the lattice.

use mult_lattice::zn::{saturated_residues, valid_divisor_sets, ZnModel};
use mult_lattice::{crosscheck, ideal_lattice, Result};

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    let zn = ZnModel::new(12)?;
    println!("divisors of 12: {:?}", zn.divisors());
    println!("((0) : (6)) = ({})", zn.ring_colon(12, 6));
    println!("((6) : (4)) = ({})", zn.ring_colon(6, 4));
    println!("S-prime ideals for S = {{1, 4}}: {:?}", zn.ring_s_prime_ideals(&[1, 4])?);

    // One cross-check call: residuals vs colons, spectra vs S-prime ideal
    // sets, family verdicts on sampled families.
    let m = ideal_lattice(12)?;
    let outcome = crosscheck(12, &[1, 4], 200, 42)?;
    println!("{}", outcome.report.render_tsv(m.lattice()));
    println!("families compared: {}", outcome.families_checked);

    // Exhaustive over every valid ideal-side S of Z_30 via saturated
    // residue preimages.
    let m30 = ideal_lattice(30)?;
    for set in valid_divisor_sets(30)? {
        let outcome = crosscheck(30, &saturated_residues(30, &set), 50, 42)?;
        println!(
            "Z30 S_L={:?}: {}",
            set,
            outcome.report.render_tsv(m30.lattice())
        );
    }
    Ok(())
}
