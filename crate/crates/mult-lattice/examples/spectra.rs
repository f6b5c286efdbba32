// S-prime spectra: which proper elements stay prime relative to a
// multiplicatively closed set S.

use mult_lattice::{catalog, is_sprime, mclosed_from_labels, spec_s, Result};

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    let n5 = catalog::builtin("n5")?;
    for s_labels in [vec!["1"], vec!["1", "c"], vec!["1", "a"]] {
        let s = mclosed_from_labels(&n5, &s_labels)?;
        let spectrum: Vec<&str> =
            spec_s(&n5, &s).into_iter().map(|e| n5.lattice().label(e)).collect();
        println!("n5, S = {{{}}}: Spec_S = {{{}}}", s_labels.join(", "), spectrum.join(", "));
    }

    let z12 = catalog::builtin("idz12")?;
    let s = mclosed_from_labels(&z12, &["(1)", "(4)"])?;
    for p in 0..z12.len() {
        let v = is_sprime(&z12, &s, p);
        let verdict = if v.pass { "S-prime" } else { "not S-prime" };
        println!(
            "idz12, S = {{(1),(4)}}: {} is {} {}",
            z12.lattice().label(p),
            verdict,
            v.render_witnesses(z12.lattice()),
        );
    }
    Ok(())
}
