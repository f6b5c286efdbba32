// The S-Prime Element Principle: maximal members of the complement of an
// S-Ako or S-Oka family are S-prime — checked on single instances, refuted
// in the converse direction, and audited exhaustively.

use mult_lattice::{
    catalog, check_s_pep, exhaustive_audit, mclosed_from_labels, search_converse_failures,
    AuditLimits, ElementFamily, PepVariant, Result,
};

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    let m = catalog::builtin("idz12")?;
    let s = mclosed_from_labels(&m, &["(1)", "(4)"])?;
    let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"])?;
    let report = check_s_pep(&f, &s, PepVariant::Ako)?;
    println!("{}", report.render_tsv(m.lattice()));

    // The converse fails: complements with all-S-prime maxima whose
    // families satisfy neither axiom.
    let s1 = mclosed_from_labels(&m, &["(1)"])?;
    for (family, report) in search_converse_failures(&m, &s1, 3)? {
        println!(
            "converse failure at F = {{{}}}: {}",
            family.labels().join(", "),
            report.render_tsv(m.lattice())
        );
    }

    // Exhaustive audit: every valid S, every family containing S, both
    // variants. A failure would be a bug in the checker, never in the
    // principle.
    for name in ["n5", "idz12", "chain5"] {
        let m = catalog::builtin(name)?;
        let outcome = exhaustive_audit(&m, AuditLimits::default())?;
        println!(
            "{name}: {} applicable instances, {} vacuous, {} failures",
            outcome.applicable, outcome.vacuous, outcome.failures
        );
    }
    Ok(())
}
