// Run the full theorem registry against a host: every maximal-implies-prime
// consequence, the family-construction lemmas, and the degenerate
// compactness results, each self-gating on its hypotheses.

use mult_lattice::{catalog, run_theorem_suite, Result};

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    for name in ["idz30", "idz12", "k"] {
        println!("== {name} ==");
        let m = catalog::builtin(name)?;
        for report in run_theorem_suite(&m) {
            println!("{}", report.render_tsv(m.lattice()));
        }
    }
    Ok(())
}
