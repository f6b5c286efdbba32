//! Built-in example lattices.
//!
//! `n5` is the pentagon with meet as product (a V-lattice that admits no
//! multiplicative structure), `k` is the six-element lattice with the
//! trivial multiplication, `idz<n>` are the Z_n ideal lattices, and
//! `chain<k>` / `boolean<k>` carry meet as product.

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::mult::{classify_multiplication, MultLattice, MultTable};
use crate::zn;

/// Look up a builtin by name.
///
/// Accepted names: `n5` (alias `n5_meet`), `k` (alias `figure3_k`),
/// `idz<n>` (alias `idzn(<n>)`), `chain<k>`, `boolean<k>`.
pub fn builtin(name: &str) -> Result<MultLattice> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "n5" | "n5_meet" => return Ok(n5_meet()),
        "k" | "figure3_k" => return Ok(figure3_k()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix("idzn(").and_then(|r| r.strip_suffix(')')) {
        let n: u64 = rest.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return zn::ideal_lattice(n);
    }
    if let Some(rest) = lower.strip_prefix("idz") {
        let n: u64 = rest.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return zn::ideal_lattice(n);
    }
    if let Some(rest) = lower.strip_prefix("chain") {
        let k: usize = rest.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return chain(k);
    }
    if let Some(rest) = lower.strip_prefix("boolean") {
        let k: u32 = rest.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return boolean(k);
    }
    Err(Error::UnknownName(name.to_string()))
}

/// N5 with meet as the multiplication. Classifies as a V-lattice only.
pub fn n5_meet() -> MultLattice {
    let lat = FiniteLattice::from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )
    .expect("n5 is a lattice")
    .named("n5");
    let meet = MultTable::meet_of(&lat);
    classify_multiplication(&lat, meet)
}

/// The six-element lattice 0 < a < b < d < 1, 0 < c < d, with the trivial
/// multiplication x*y = 0 for x, y != 1. Multiplicative but not modular.
pub fn figure3_k() -> MultLattice {
    let lat = FiniteLattice::from_covers(
        &["0", "a", "b", "c", "d", "1"],
        &[("0", "a"), ("a", "b"), ("b", "d"), ("0", "c"), ("c", "d"), ("d", "1")],
    )
    .expect("k is a lattice")
    .named("k");
    let zero = MultTable::zero_of(&lat);
    classify_multiplication(&lat, zero)
}

/// A k-element chain with meet as the multiplication.
pub fn chain(k: usize) -> Result<MultLattice> {
    if k == 0 {
        return Err(Error::NoBounds);
    }
    let labels: Vec<String> = match k {
        1 => vec!["0".to_string()],
        _ => {
            let mut v = vec!["0".to_string()];
            for i in 0..k.saturating_sub(2) {
                // Single letters for small chains, indexed labels beyond z.
                let label = if i < 24 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("e{i}")
                };
                v.push(label);
            }
            v.push("1".to_string());
            v
        }
    };
    let n = labels.len();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in a..n {
            leq[a * n + b] = true;
        }
    }
    let lat = FiniteLattice::from_leq(labels, leq)?.named(&format!("chain{k}"));
    let meet = MultTable::meet_of(&lat);
    Ok(classify_multiplication(&lat, meet))
}

/// The Boolean lattice of subsets of k atoms, meet as multiplication.
/// Elements are ordered by (popcount, mask); atoms are labelled p, q, r, ...
pub fn boolean(k: u32) -> Result<MultLattice> {
    if k > 8 {
        return Err(Error::BadParams(format!("boolean({k}): at most 8 atoms")));
    }
    let size = 1usize << k;
    let atoms = ["p", "q", "r", "s", "t", "u", "v", "w"];
    let mut masks: Vec<usize> = (0..size).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let labels: Vec<String> = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                "0".to_string()
            } else if m == size - 1 && k > 0 {
                "1".to_string()
            } else {
                (0..k as usize).filter(|&i| m >> i & 1 == 1).map(|i| atoms[i]).collect()
            }
        })
        .collect();
    let n = masks.len();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = masks[a] & masks[b] == masks[a];
        }
    }
    let lat = FiniteLattice::from_leq(labels, leq)?.named(&format!("boolean{k}"));
    let meet = MultTable::meet_of(&lat);
    Ok(classify_multiplication(&lat, meet))
}

/// The catalog used by exhaustive audits and the test suite: every builtin
/// with at most `max_elements` elements.
pub fn small_catalog(max_elements: usize) -> Vec<MultLattice> {
    let mut out = Vec::new();
    out.push(n5_meet());
    out.push(figure3_k());
    for k in 2..=7 {
        out.push(chain(k).expect("chain"));
    }
    out.push(boolean(2).expect("boolean2"));
    for n in [4u64, 6, 8, 9, 12] {
        out.push(zn::ideal_lattice(n).expect("idzn"));
    }
    out.retain(|m| m.len() <= max_elements);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mult::LatticeClass;

    #[test]
    fn builtin_names_resolve() {
        for (name, class, len) in [
            ("n5", LatticeClass::VLatticeOnly, 5),
            ("k", LatticeClass::MultiplicativeLattice, 6),
            ("idz12", LatticeClass::MultiplicativeLattice, 6),
            ("idzn(12)", LatticeClass::MultiplicativeLattice, 6),
            ("chain2", LatticeClass::MultiplicativeLattice, 2),
            ("boolean2", LatticeClass::MultiplicativeLattice, 4),
        ] {
            let m = builtin(name).unwrap();
            assert_eq!(m.class(), class, "{name}");
            assert_eq!(m.len(), len, "{name}");
        }
        assert!(matches!(builtin("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn k_has_figure_shape_and_trivial_product() {
        let m = figure3_k();
        let lat = m.lattice();
        let e = |l: &str| lat.index_of(l).unwrap();
        assert!(lat.lt(e("0"), e("a")) && lat.lt(e("a"), e("b")) && lat.lt(e("b"), e("d")));
        assert!(lat.lt(e("0"), e("c")) && lat.lt(e("c"), e("d")) && lat.lt(e("d"), e("1")));
        for x in 0..m.len() {
            assert_eq!(m.mul(x, lat.top()), x);
            for y in 0..m.len() {
                if x != lat.top() && y != lat.top() {
                    assert_eq!(m.mul(x, y), lat.bottom());
                }
            }
        }
    }

    #[test]
    fn idzn_builtin_matches_zn_bridge() {
        let a = builtin("idz12").unwrap();
        let b = zn::ideal_lattice(12).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn chain_and_boolean_shapes() {
        let c = chain(5).unwrap();
        assert_eq!(c.lattice().labels(), &["0", "a", "b", "c", "1"]);
        let b = boolean(2).unwrap();
        assert_eq!(b.lattice().labels(), &["0", "p", "q", "1"]);
        assert_eq!(b.lattice().join(1, 2), 3);
        assert_eq!(b.lattice().meet(1, 2), 0);
    }
}
