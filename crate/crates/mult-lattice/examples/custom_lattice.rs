// Define a lattice in the text format by hand, load it, and run checks —
// the same path the `mlat` binary uses.

use mult_lattice::{
    classify_multiplication, mclosed_from_labels, spec_s, textfmt, Result,
};

const DIAMOND: &str = "\
# The four-element diamond with an explicit multiplication table.
lattice diamond
elements: 0 x y 1
covers:
0 < x
0 < y
x < 1
y < 1
mult:
0 * 0 = 0
0 * x = 0
0 * y = 0
0 * 1 = 0
x * x = x
x * y = 0
x * 1 = x
y * y = 0
y * 1 = y
1 * 1 = 1
";

fn main() {
    run().unwrap();
}

fn run() -> Result<()> {
    let file = textfmt::parse(DIAMOND)?;
    let m = classify_multiplication(&file.lattice, file.mult.expect("mult section present"));
    println!("{}: class {}", m.name(), m.class().as_str());
    // y * y = 0 makes y nilpotent.
    println!("reduced: {}", m.is_reduced().pass);

    let s = mclosed_from_labels(&m, &["1", "x"])?;
    let spectrum: Vec<&str> = spec_s(&m, &s).into_iter().map(|e| m.lattice().label(e)).collect();
    println!("Spec_S for S = {{1, x}}: {{{}}}", spectrum.join(", "));

    // Canonical serialization round-trips.
    let out = textfmt::serialize(&m);
    assert_eq!(textfmt::parse(&out)?.lattice, *m.lattice());
    print!("{out}");
    Ok(())
}
