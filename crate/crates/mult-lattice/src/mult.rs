//! Multiplications on lattices and their axiom classification.
//!
//! A multiplicative lattice carries a commutative, associative product with
//! identity 1 that distributes over arbitrary joins. On a finite lattice,
//! arbitrary-join distributivity reduces by induction to binary
//! distributivity plus `a * 0 = 0`, which keeps the classifier at O(n^3).
//!
//! A V-lattice asks less: the product only has to be monotone and bounded by
//! the meet (`a * b <= a ^ b`). N5 famously carries a V-lattice structure
//! (meet as product) but no multiplicative one.
//!
//! Commutativity is structural: [`MultTable`] only stores symmetric tables.

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::verdict::Verdict;

/// A symmetric `n x n` table of element indices: `tbl[a*n+b]` is `a * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    n: usize,
    tbl: Vec<usize>,
}

impl MultTable {
    pub fn new(lat: &FiniteLattice, tbl: Vec<usize>) -> Result<MultTable> {
        let n = lat.len();
        if tbl.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: tbl.len() });
        }
        for a in 0..n {
            for b in 0..n {
                if tbl[a * n + b] >= n {
                    return Err(Error::EntryOutOfRange {
                        a: lat.label(a).to_string(),
                        b: lat.label(b).to_string(),
                    });
                }
                if tbl[a * n + b] != tbl[b * n + a] {
                    return Err(Error::NotSymmetric {
                        a: lat.label(a).to_string(),
                        b: lat.label(b).to_string(),
                    });
                }
            }
        }
        Ok(MultTable { n, tbl })
    }

    pub fn from_fn(lat: &FiniteLattice, f: impl Fn(usize, usize) -> usize) -> Result<MultTable> {
        let n = lat.len();
        let mut tbl = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                tbl[a * n + b] = f(a, b);
            }
        }
        MultTable::new(lat, tbl)
    }

    /// The meet operation as a multiplication.
    pub fn meet_of(lat: &FiniteLattice) -> MultTable {
        MultTable::from_fn(lat, |a, b| lat.meet(a, b)).expect("meet table is symmetric")
    }

    /// The trivial multiplication: `x * y = 0` unless one factor is 1.
    pub fn zero_of(lat: &FiniteLattice) -> MultTable {
        let top = lat.top();
        let bot = lat.bottom();
        MultTable::from_fn(lat, |a, b| {
            if a == top {
                b
            } else if b == top {
                a
            } else {
                bot
            }
        })
        .expect("zero table is symmetric")
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.tbl[a * self.n + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.tbl
    }
}

/// Axiom classification of a `(lattice, multiplication)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeClass {
    MultiplicativeLattice,
    VLatticeOnly,
    Invalid,
}

impl LatticeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            LatticeClass::MultiplicativeLattice => "multiplicative",
            LatticeClass::VLatticeOnly => "v-lattice-only",
            LatticeClass::Invalid => "invalid",
        }
    }
}

/// Named multiplication axioms, in the order the classifier checks them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Identity,
    Associativity,
    Distributivity,
    ZeroAnnihilation,
    Monotonicity,
    MeetBound,
}

impl Axiom {
    pub fn as_str(&self) -> &'static str {
        match self {
            Axiom::Identity => "identity",
            Axiom::Associativity => "associativity",
            Axiom::Distributivity => "distributivity",
            Axiom::ZeroAnnihilation => "zero",
            Axiom::Monotonicity => "monotonicity",
            Axiom::MeetBound => "meet-bound",
        }
    }
}

/// First failing axiom together with the violating elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub at: Vec<usize>,
}

impl AxiomViolation {
    /// Render as e.g. `distributivity at (b; a,c)`.
    pub fn render(&self, lat: &FiniteLattice) -> String {
        let l = |i: usize| lat.label(self.at[i]);
        let site = match self.axiom {
            Axiom::Identity | Axiom::ZeroAnnihilation => format!("({})", l(0)),
            Axiom::Associativity => format!("({},{},{})", l(0), l(1), l(2)),
            Axiom::Distributivity => format!("({}; {},{})", l(0), l(1), l(2)),
            Axiom::Monotonicity => format!("({},{}; {})", l(0), l(1), l(2)),
            Axiom::MeetBound => format!("({},{})", l(0), l(1)),
        };
        format!("{} at {}", self.axiom.as_str(), site)
    }
}

/// A lattice with an attached multiplication and its classification.
///
/// Immutable after construction; all operations are pure, so values can be
/// shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultLattice {
    lattice: FiniteLattice,
    mult: MultTable,
    class: LatticeClass,
    violation: Option<AxiomViolation>,
    /// Precomputed residuals: `residual_tbl[a*n+b] = (a : b)`.
    residual_tbl: Vec<usize>,
}

/// Classify which multiplication axioms hold for `tbl` over `lat`.
///
/// `MultiplicativeLattice` requires associativity, identity, binary join
/// distributivity and `a * 0 = 0`; `VLatticeOnly` requires associativity,
/// identity, monotonicity and `a * b <= a ^ b` but fails the multiplicative
/// level (the recorded violation says which multiplicative axiom broke).
/// Anything else is `Invalid` with the first failing axiom.
pub fn classify_multiplication(lat: &FiniteLattice, tbl: MultTable) -> MultLattice {
    let violation = classify_violation(lat, &tbl);
    let class = match &violation {
        None => LatticeClass::MultiplicativeLattice,
        Some(v) => match v.axiom {
            Axiom::Distributivity | Axiom::ZeroAnnihilation => LatticeClass::VLatticeOnly,
            _ => LatticeClass::Invalid,
        },
    };
    let residual_tbl = compute_residuals(lat, &tbl);
    MultLattice { lattice: lat.clone(), mult: tbl, class, violation, residual_tbl }
}

/// None means fully multiplicative. For a V-lattice the returned violation
/// is the first failing multiplicative axiom; for an invalid table it is the
/// first failing V-lattice axiom.
fn classify_violation(lat: &FiniteLattice, t: &MultTable) -> Option<AxiomViolation> {
    let n = lat.len();
    let top = lat.top();
    let bot = lat.bottom();
    for a in 0..n {
        if t.mul(a, top) != a {
            return Some(AxiomViolation { axiom: Axiom::Identity, at: vec![a] });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)) {
                    return Some(AxiomViolation { axiom: Axiom::Associativity, at: vec![a, b, c] });
                }
            }
        }
    }
    let mut mult_violation = None;
    'dist: for a in 0..n {
        for x in 0..n {
            for y in 0..n {
                if t.mul(a, lat.join(x, y)) != lat.join(t.mul(a, x), t.mul(a, y)) {
                    mult_violation =
                        Some(AxiomViolation { axiom: Axiom::Distributivity, at: vec![a, x, y] });
                    break 'dist;
                }
            }
        }
    }
    if mult_violation.is_none() {
        for a in 0..n {
            if t.mul(a, bot) != bot {
                mult_violation = Some(AxiomViolation { axiom: Axiom::ZeroAnnihilation, at: vec![a] });
                break;
            }
        }
    }
    let v = mult_violation?;
    // Demote to V-lattice if the weaker axioms hold.
    for a in 0..n {
        for b in 0..n {
            if lat.leq(a, b) {
                for c in 0..n {
                    if !lat.leq(t.mul(a, c), t.mul(b, c)) {
                        return Some(AxiomViolation {
                            axiom: Axiom::Monotonicity,
                            at: vec![a, b, c],
                        });
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !lat.leq(t.mul(a, b), lat.meet(a, b)) {
                return Some(AxiomViolation { axiom: Axiom::MeetBound, at: vec![a, b] });
            }
        }
    }
    Some(v)
}

/// Residual `(a : b)` as the literal join of `{x | x * b <= a}`.
fn compute_residuals(lat: &FiniteLattice, t: &MultTable) -> Vec<usize> {
    let n = lat.len();
    let mut out = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            out[a * n + b] = lat.join_set((0..n).filter(|&x| lat.leq(t.mul(x, b), a)));
        }
    }
    out
}

/// Per-element flags decided by direct quantifier elimination.
///
/// `compact` is constantly true: every element of a finite lattice is
/// compact (see [`MultLattice::compact_audit`] for the definitional check).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementFlags {
    pub nilpotent: bool,
    pub dense: bool,
    pub essential: bool,
    pub zero_divisor: bool,
    pub annihilator: bool,
    pub compact: bool,
    pub meet_principal: bool,
    pub join_principal: bool,
    pub principal: bool,
}

/// c-lattice / r-lattice flags.
///
/// On a finite lattice, compact generation and compactness of 1 (and of
/// products) are automatic, so `c_lattice` coincides with being a
/// multiplicative lattice. `r_lattice` adds modularity and principal
/// generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassFlags {
    pub c_lattice: bool,
    pub r_lattice: bool,
}

impl MultLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn table(&self) -> &MultTable {
        &self.mult
    }

    pub fn class(&self) -> LatticeClass {
        self.class
    }

    pub fn violation(&self) -> Option<&AxiomViolation> {
        self.violation.as_ref()
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn name(&self) -> &str {
        self.lattice.name()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult.mul(a, b)
    }

    /// `(a : b)`, the join of all `x` with `x * b <= a`.
    ///
    /// Computed in every class as the literal join; the adjunction
    /// `x * b <= a  iff  x <= (a : b)` is guaranteed only when the class is
    /// `MultiplicativeLattice`.
    #[inline]
    pub fn residual(&self, a: usize, b: usize) -> usize {
        self.residual_tbl[a * self.lattice.len() + b]
    }

    /// The distinct powers `a, a^2, ...` until the sequence cycles.
    pub fn power_cycle(&self, a: usize) -> Vec<usize> {
        let mut seen = Vec::new();
        let mut p = a;
        while !seen.contains(&p) {
            seen.push(p);
            p = self.mul(p, a);
        }
        seen
    }

    /// `a* = join of { x | a^n * x = 0 for some n }`.
    pub fn star(&self, a: usize) -> usize {
        let bot = self.lattice.bottom();
        let powers = self.power_cycle(a);
        self.lattice.join_set(
            (0..self.len()).filter(|&x| powers.iter().any(|&p| self.mul(p, x) == bot)),
        )
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.power_cycle(a).contains(&self.lattice.bottom())
    }

    /// Dense: `(0 : a) = 0`.
    pub fn is_dense(&self, a: usize) -> bool {
        self.residual(self.lattice.bottom(), a) == self.lattice.bottom()
    }

    /// Essential: no nonzero `x` with `a ^ x = 0` (order-only notion).
    pub fn is_essential(&self, a: usize) -> bool {
        let bot = self.lattice.bottom();
        !(0..self.len()).any(|x| x != bot && self.lattice.meet(a, x) == bot)
    }

    /// Zero divisor: `a * y = 0` for some nonzero `y`.
    pub fn is_zero_divisor(&self, a: usize) -> bool {
        let bot = self.lattice.bottom();
        (0..self.len()).any(|y| y != bot && self.mul(a, y) == bot)
    }

    /// Annihilator element: proper `a` with `a = (0 : x)` for some nonzero `x`.
    pub fn is_annihilator(&self, a: usize) -> bool {
        let bot = self.lattice.bottom();
        a != self.lattice.top()
            && (0..self.len()).any(|x| x != bot && self.residual(bot, x) == a)
    }

    /// Meet principal: `a ^ (m*b) = m * ((a:m) ^ b)` for all `a, b`.
    pub fn is_meet_principal(&self, m: usize) -> bool {
        let lat = &self.lattice;
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| {
                lat.meet(a, self.mul(m, b)) == self.mul(m, lat.meet(self.residual(a, m), b))
            })
        })
    }

    /// Join principal: `a v (b:m) = ((a*m v b) : m)` for all `a, b`.
    pub fn is_join_principal(&self, m: usize) -> bool {
        let lat = &self.lattice;
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| {
                lat.join(a, self.residual(b, m))
                    == self.residual(lat.join(self.mul(a, m), b), m)
            })
        })
    }

    pub fn is_principal(&self, m: usize) -> bool {
        self.is_meet_principal(m) && self.is_join_principal(m)
    }

    /// All principal elements, ascending.
    pub fn principal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&m| self.is_principal(m)).collect()
    }

    pub fn element_predicates(&self, a: usize) -> ElementFlags {
        let mp = self.is_meet_principal(a);
        let jp = self.is_join_principal(a);
        ElementFlags {
            nilpotent: self.is_nilpotent(a),
            dense: self.is_dense(a),
            essential: self.is_essential(a),
            zero_divisor: self.is_zero_divisor(a),
            annihilator: self.is_annihilator(a),
            compact: true,
            meet_principal: mp,
            join_principal: jp,
            principal: mp && jp,
        }
    }

    /// Definitional compactness audit over all 2^n subsets (n <= 12 only).
    ///
    /// Always true on finite lattices; the audit exists to exercise the
    /// machinery. For every subset A with `c <= vA` it recomputes the join by
    /// a second route (a plain fold) and confirms a finite subcover exists.
    pub fn compact_audit(&self, c: usize) -> Result<bool> {
        let n = self.len();
        if n > 12 {
            return Err(Error::LimitExceeded { detail: format!("2^{n} subsets") });
        }
        let lat = &self.lattice;
        for mask in 0u32..(1 << n) {
            let members = (0..n).filter(|&i| mask >> i & 1 == 1);
            let via_table = lat.join_set(members.clone());
            let via_fold = members.clone().fold(lat.bottom(), |acc, x| {
                lat.join_set([acc, x]) // second route through join_set
            });
            if via_table != via_fold {
                return Ok(false);
            }
            if lat.leq(c, via_table) {
                // The subset is itself the finite subcover.
                if !lat.leq(c, lat.join_set(members)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Reduced: zero is the only nilpotent element.
    pub fn is_reduced(&self) -> Verdict {
        let bot = self.lattice.bottom();
        for a in 0..self.len() {
            if a != bot && self.is_nilpotent(a) {
                return Verdict::fail_one("nilpotent", vec![a]);
            }
        }
        Verdict::pass()
    }

    pub fn class_flags(&self) -> ClassFlags {
        let c = self.class == LatticeClass::MultiplicativeLattice;
        let r = c && self.lattice.is_modular().pass && self.is_principally_generated();
        ClassFlags { c_lattice: c, r_lattice: r }
    }

    /// Every element is a join of principal elements below it.
    pub fn is_principally_generated(&self) -> bool {
        let pr = self.principal_elements();
        (0..self.len()).all(|x| {
            self.lattice.join_set(pr.iter().copied().filter(|&p| self.lattice.leq(p, x))) == x
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn n5_meet() -> MultLattice {
        catalog::builtin("n5").unwrap()
    }

    fn idz12() -> MultLattice {
        catalog::builtin("idz12").unwrap()
    }

    #[test]
    fn n5_meet_is_v_lattice_only() {
        let m = n5_meet();
        assert_eq!(m.class(), LatticeClass::VLatticeOnly);
        let v = m.violation().unwrap();
        assert_eq!(v.axiom, Axiom::Distributivity);
        // First violation at (b; a, c).
        assert_eq!(v.at, vec![2, 1, 3]);
        assert_eq!(v.render(m.lattice()), "distributivity at (b; a,c)");
    }

    #[test]
    fn idz12_is_multiplicative() {
        let m = idz12();
        assert_eq!(m.class(), LatticeClass::MultiplicativeLattice);
        assert!(m.violation().is_none());
    }

    #[test]
    fn two_chain_meet_is_multiplicative() {
        let m = catalog::builtin("chain2").unwrap();
        assert_eq!(m.class(), LatticeClass::MultiplicativeLattice);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let lat = catalog::builtin("chain3").unwrap().lattice().clone();
        assert!(matches!(
            MultTable::new(&lat, vec![0; 4]),
            Err(crate::error::Error::DimensionMismatch { expected: 9, got: 4 })
        ));
        let mut asymmetric = vec![0usize; 9];
        asymmetric[1] = 1; // 0*m = m but m*0 = 0
        assert!(matches!(
            MultTable::new(&lat, asymmetric),
            Err(crate::error::Error::NotSymmetric { .. })
        ));
        let mut out_of_range = vec![0usize; 9];
        out_of_range[0] = 7;
        assert!(matches!(
            MultTable::new(&lat, out_of_range),
            Err(crate::error::Error::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn broken_tables_are_invalid() {
        let lat = catalog::builtin("chain3").unwrap().lattice().clone();
        // x * y = top everywhere: violates identity? No: a*1 = 1 != a for a=0.
        let t = MultTable::from_fn(&lat, |_, _| lat.top()).unwrap();
        let m = classify_multiplication(&lat, t);
        assert_eq!(m.class(), LatticeClass::Invalid);
        assert_eq!(m.violation().unwrap().axiom, Axiom::Identity);
    }

    #[test]
    fn product_below_meet_in_multiplicative_lattices() {
        for name in ["idz12", "k", "chain4", "boolean2"] {
            let m = catalog::builtin(name).unwrap();
            assert_eq!(m.class(), LatticeClass::MultiplicativeLattice, "{name}");
            for a in 0..m.len() {
                for b in 0..m.len() {
                    assert!(m.lattice().leq(m.mul(a, b), m.lattice().meet(a, b)));
                }
            }
        }
    }

    #[test]
    fn residual_examples_on_idz12() {
        let m = idz12();
        let lat = m.lattice();
        let e = |l: &str| lat.index_of(l).unwrap();
        // ((0) : (6)) = (2)
        assert_eq!(m.residual(e("(0)"), e("(6)")), e("(2)"));
        // ((6) : (4)) = (3), cross-checked against the ring colon oracle.
        assert_eq!(m.residual(e("(6)"), e("(4)")), e("(3)"));
        // (a : 1) = a for every a.
        for a in 0..m.len() {
            assert_eq!(m.residual(a, lat.top()), a);
        }
    }

    #[test]
    fn residual_adjunction_holds_exactly_in_multiplicative_class() {
        for name in ["idz12", "k", "chain5", "boolean2"] {
            let m = catalog::builtin(name).unwrap();
            let lat = m.lattice();
            for a in 0..m.len() {
                for b in 0..m.len() {
                    let r = m.residual(a, b);
                    // r * b <= a and the full adjunction.
                    assert!(lat.leq(m.mul(r, b), a), "{name}: soundness");
                    for x in 0..m.len() {
                        assert_eq!(
                            lat.leq(m.mul(x, b), a),
                            lat.leq(x, r),
                            "{name}: adjunction at ({a},{b},{x})"
                        );
                    }
                }
            }
        }
        // a <= (a : b) holds even on V-lattices, since a * b <= a ^ b.
        let m = n5_meet();
        for a in 0..m.len() {
            for b in 0..m.len() {
                assert!(m.lattice().leq(a, m.residual(a, b)));
            }
        }
    }

    #[test]
    fn star_examples() {
        let m = idz12();
        let e = |l: &str| m.lattice().index_of(l).unwrap();
        // (6)^2 = (0), so (6)* is the top element.
        assert_eq!(m.star(e("(6)")), m.lattice().top());
        // 1* = 0 in every class (1^n * x = x).
        for name in ["idz12", "n5", "k", "chain4", "boolean2"] {
            let m = catalog::builtin(name).unwrap();
            assert_eq!(m.star(m.lattice().top()), m.lattice().bottom(), "{name}");
        }
        // Id(Z30): (2)* = (15).
        let m30 = catalog::builtin("idz30").unwrap();
        let e = |l: &str| m30.lattice().index_of(l).unwrap();
        assert_eq!(m30.star(e("(2)")), e("(15)"));
    }

    #[test]
    fn reduced_examples() {
        let m = idz12();
        let v = m.is_reduced();
        assert!(v.is_fail());
        assert_eq!(v.witnesses[0].elems, vec![m.lattice().index_of("(6)").unwrap()]);

        assert!(catalog::builtin("idz30").unwrap().is_reduced().pass);
        assert!(catalog::builtin("chain2").unwrap().is_reduced().pass);
    }

    #[test]
    fn annihilators_of_k() {
        let m = catalog::builtin("k").unwrap();
        let lat = m.lattice();
        let anni: Vec<&str> = (0..m.len())
            .filter(|&a| m.is_annihilator(a))
            .map(|a| lat.label(a))
            .collect();
        assert_eq!(anni, vec!["0", "d"]);
    }

    #[test]
    fn essential_elements_of_idz30() {
        let m = catalog::builtin("idz30").unwrap();
        let ess: Vec<&str> = (0..m.len())
            .filter(|&a| m.is_essential(a))
            .map(|a| m.lattice().label(a))
            .collect();
        assert_eq!(ess, vec!["(1)"]);
    }

    #[test]
    fn nilpotency_examples() {
        let m = idz12();
        assert!(m.is_nilpotent(m.lattice().index_of("(6)").unwrap()));
        let m30 = catalog::builtin("idz30").unwrap();
        for a in 0..m30.len() {
            if a != m30.lattice().bottom() {
                assert!(!m30.is_nilpotent(a), "Z30 is reduced");
            }
        }
    }

    #[test]
    fn dense_iff_not_zero_divisor_off_bottom() {
        for name in ["idz12", "idz30", "n5", "k", "chain5", "boolean2"] {
            let m = catalog::builtin(name).unwrap();
            for a in 0..m.len() {
                if a != m.lattice().bottom() {
                    assert_eq!(m.is_dense(a), !m.is_zero_divisor(a), "{name} at {a}");
                }
            }
        }
    }

    #[test]
    fn class_flags_examples() {
        let f = idz12().class_flags();
        assert!(f.c_lattice && f.r_lattice);

        let f = n5_meet().class_flags();
        assert!(!f.c_lattice && !f.r_lattice);

        // K is multiplicative but contains a pentagon, so it is not modular.
        let f = catalog::builtin("k").unwrap().class_flags();
        assert!(f.c_lattice && !f.r_lattice);
    }

    #[test]
    fn meet_principal_products_stay_meet_principal() {
        for name in ["idz12", "idz30", "n5", "k", "chain5", "boolean2"] {
            let m = catalog::builtin(name).unwrap();
            let mp: Vec<usize> = (0..m.len()).filter(|&x| m.is_meet_principal(x)).collect();
            for &a in &mp {
                for &b in &mp {
                    assert!(m.is_meet_principal(m.mul(a, b)), "{name}: ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn meet_principal_residual_identity() {
        // For i <= j with j meet principal: j * (i : j) = i (c-lattice hosts).
        for name in ["idz12", "idz30", "k", "chain5", "boolean2"] {
            let m = catalog::builtin(name).unwrap();
            for j in 0..m.len() {
                if !m.is_meet_principal(j) {
                    continue;
                }
                for i in 0..m.len() {
                    if m.lattice().leq(i, j) {
                        assert_eq!(m.mul(j, m.residual(i, j)), i, "{name}: i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_hosts_have_no_phantom_zero_products() {
        // In a reduced multiplicative lattice, a*b = 0 implies a ^ b = 0.
        for name in ["idz30", "chain5", "boolean2", "boolean3"] {
            let m = catalog::builtin(name).unwrap();
            assert!(m.is_reduced().pass, "{name}");
            let bot = m.lattice().bottom();
            for a in 0..m.len() {
                for b in 0..m.len() {
                    if m.mul(a, b) == bot {
                        assert_eq!(m.lattice().meet(a, b), bot, "{name}: ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn compact_audit_accepts_small_hosts() {
        for name in ["n5", "idz12", "k", "boolean2"] {
            let m = catalog::builtin(name).unwrap();
            for c in 0..m.len() {
                assert!(m.compact_audit(c).unwrap(), "{name} at {c}");
            }
        }
    }

    #[test]
    fn every_ideal_of_zn_is_principal() {
        for n in [6u64, 12, 24, 30, 36, 60] {
            let m = crate::zn::ideal_lattice(n).unwrap();
            assert!(m.is_principally_generated());
            for x in 0..m.len() {
                assert!(m.is_principal(x), "Id(Z{n}) at {x}");
            }
        }
    }
}
