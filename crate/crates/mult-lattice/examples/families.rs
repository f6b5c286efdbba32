// Element families: structural flags, the S-Ako and S-Oka axioms, and the
// named constructions used by the existence theorems.

use mult_lattice::{
    build_named_family, catalog, is_s_ako, is_s_oka, mclosed_from_labels, product_closure,
    ElementFamily, FamilyKind, Result,
};

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    let m = catalog::builtin("idz12")?;
    let lat = m.lattice();

    let s = mclosed_from_labels(&m, &["(1)", "(4)"])?;
    let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"])?;
    let flags = f.structural_flags()?;
    println!(
        "F = {{(1),(2),(4)}}: semi-filter={} filter={} m-closed={}",
        flags.semi_filter.holds, flags.filter.holds, flags.m_closed.holds
    );
    println!("  S-Ako: {}", is_s_ako(&f, &s)?.pass);
    println!("  S-Oka: {}", is_s_oka(&f, &s)?.pass);

    // An S-Oka family that is not S-Ako, with the counterexample.
    let s1 = mclosed_from_labels(&m, &["(1)"])?;
    let f = ElementFamily::from_labels(&m, &["(1)", "(6)"])?;
    let ako = is_s_ako(&f, &s1)?;
    println!(
        "F = {{(1),(6)}}: S-Oka {}, S-Ako {} {}",
        is_s_oka(&f, &s1)?.pass,
        ako.pass,
        ako.render_witnesses(lat),
    );

    // Named constructions.
    let above = build_named_family(&m, &FamilyKind::AboveS { s_members: s.members().to_vec() })?;
    println!("up-set of S = {{(1),(4)}}: {{{}}}", above.labels().join(", "));
    let dense = build_named_family(&m, &FamilyKind::Dense)?;
    println!("dense elements: {{{}}}", dense.labels().join(", "));

    // The multiplicative closure of {(2), (3)} reaches the zero ideal.
    let gens = vec![lat.index_of("(2)")?, lat.index_of("(3)")?];
    let closure = product_closure(&m, &gens)?;
    let zero_product: Vec<&str> = closure
        .witness_for(lat.bottom())
        .unwrap()
        .iter()
        .map(|&g| lat.label(g))
        .collect();
    println!("zero product from {{(2),(3)}}: {}", zero_product.join(" * "));
    Ok(())
}
