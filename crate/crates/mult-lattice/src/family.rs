//! Element families and the S-Ako / S-Oka axioms.
//!
//! A family is just a subset F of the lattice; the interesting structure is
//! which closure axioms it satisfies:
//!
//! - semi-filter: upward closed;
//! - filter: semi-filter closed under meet;
//! - M-closed: closed under the product;
//! - S-Ako: `i v (s*a), i v (s*b) in F  =>  i v (a*b) in F`;
//! - S-Oka: `i v (s*a), (i : (s*a)) in F  =>  i in F`.
//!
//! All quantifier scans run in ascending index order `(s, i, a, b)`, and the
//! first counterexample is the reported witness, so goldens stay stable.
//! S not contained in F is an *error*, not a failing verdict: the
//! definitions presuppose the containment, and keeping that distinction is
//! what lets the theorem audits stay honest.

use crate::error::{Error, Result};
use crate::mult::MultLattice;
use crate::sprime::MClosedSet;
use crate::verdict::Verdict;
use std::sync::OnceLock;

/// A subset of lattice elements over a fixed host, with lazily cached
/// structural flags. The caches are write-once, so sharing a family across
/// threads is safe.
#[derive(Debug)]
pub struct ElementFamily<'a> {
    host: &'a MultLattice,
    mask: Vec<bool>,
    members: Vec<usize>,
    flags: OnceLock<StructuralFlags>,
}

/// One structural flag plus its first counterexample when false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Flag {
    fn pass() -> Flag {
        Flag { holds: true, witness: None }
    }
    fn fail(witness: Vec<usize>) -> Flag {
        Flag { holds: false, witness: Some(witness) }
    }
}

/// Semi-filter / filter / M-closed flags with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralFlags {
    /// Witness `[j, i]`: `j <= i`, `j` in F, `i` not in F.
    pub semi_filter: Flag,
    /// Semi-filter and meet-closed; witness `[i, j]` with `i ^ j` missing.
    pub filter: Flag,
    /// Witness `[i, j]` with `i * j` missing.
    pub m_closed: Flag,
}

impl<'a> ElementFamily<'a> {
    pub fn new(host: &'a MultLattice, members: &[usize]) -> Result<ElementFamily<'a>> {
        let mut mask = vec![false; host.len()];
        for &e in members {
            if e >= host.len() {
                return Err(Error::BadParams(format!("element index {e} out of range")));
            }
            mask[e] = true;
        }
        Ok(Self::from_mask(host, mask))
    }

    pub fn from_mask(host: &'a MultLattice, mask: Vec<bool>) -> ElementFamily<'a> {
        debug_assert_eq!(mask.len(), host.len());
        let members = (0..host.len()).filter(|&e| mask[e]).collect();
        ElementFamily { host, mask, members, flags: OnceLock::new() }
    }

    pub fn from_labels(host: &'a MultLattice, labels: &[&str]) -> Result<ElementFamily<'a>> {
        let members: Vec<usize> = labels
            .iter()
            .map(|l| host.lattice().index_of(l))
            .collect::<Result<_>>()?;
        ElementFamily::new(host, &members)
    }

    pub fn host(&self) -> &'a MultLattice {
        self.host
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.mask[e]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Members ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn labels(&self) -> Vec<&str> {
        self.members.iter().map(|&e| self.host.lattice().label(e)).collect()
    }

    /// Complement of the family, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.host.len()).filter(|&e| !self.mask[e]).collect()
    }

    /// `Max(F')`: maximal members of the complement; empty when F = L.
    pub fn max_complement(&self) -> Vec<usize> {
        self.host.lattice().maximal_members(&self.complement())
    }

    /// Structural flags, computed once and cached. Errors with `MissingTop`
    /// if 1 is not a member (the definitions require `1 in F`).
    pub fn structural_flags(&self) -> Result<&StructuralFlags> {
        if !self.mask[self.host.lattice().top()] {
            return Err(Error::MissingTop);
        }
        Ok(self.flags.get_or_init(|| compute_structural_flags(self.host, &self.mask)))
    }
}

fn compute_structural_flags(m: &MultLattice, mask: &[bool]) -> StructuralFlags {
    let lat = m.lattice();
    let n = m.len();
    let mut semi = Flag::pass();
    'semi: for (j, &in_f) in mask.iter().enumerate() {
        if !in_f {
            continue;
        }
        for (i, &above_in_f) in mask.iter().enumerate() {
            if lat.leq(j, i) && !above_in_f {
                semi = Flag::fail(vec![j, i]);
                break 'semi;
            }
        }
    }
    let mut meet_closed = Flag::pass();
    'meet: for (i, &in_f) in mask.iter().enumerate() {
        if !in_f {
            continue;
        }
        for j in 0..n {
            if mask[j] && !mask[lat.meet(i, j)] {
                meet_closed = Flag::fail(vec![i, j]);
                break 'meet;
            }
        }
    }
    let mut m_closed = Flag::pass();
    'mul: for i in 0..n {
        if !mask[i] {
            continue;
        }
        for j in 0..n {
            if mask[j] && !mask[m.mul(i, j)] {
                m_closed = Flag::fail(vec![i, j]);
                break 'mul;
            }
        }
    }
    let filter = if !semi.holds {
        semi.clone()
    } else if !meet_closed.holds {
        meet_closed
    } else {
        Flag::pass()
    };
    StructuralFlags { semi_filter: semi, filter, m_closed }
}

fn require_s_in_family(f: &ElementFamily<'_>, s: &MClosedSet<'_>) -> Result<()> {
    for &t in s.members() {
        if !f.contains(t) {
            return Err(Error::SNotContained {
                element: f.host().lattice().label(t).to_string(),
            });
        }
    }
    Ok(())
}

/// Kernel shared by the public check and the audit loops: first S-Ako
/// counterexample `(s, i, a, b)` over a raw membership mask.
pub(crate) fn ako_counterexample(
    m: &MultLattice,
    s_members: &[usize],
    mask: &[bool],
) -> Option<[usize; 4]> {
    let lat = m.lattice();
    let n = m.len();
    for &w in s_members {
        for i in 0..n {
            for a in 0..n {
                if !mask[lat.join(i, m.mul(w, a))] {
                    continue;
                }
                for b in 0..n {
                    if mask[lat.join(i, m.mul(w, b))] && !mask[lat.join(i, m.mul(a, b))] {
                        return Some([w, i, a, b]);
                    }
                }
            }
        }
    }
    None
}

/// First S-Oka counterexample `(s, i, a)` over a raw membership mask.
pub(crate) fn oka_counterexample(
    m: &MultLattice,
    s_members: &[usize],
    mask: &[bool],
) -> Option<[usize; 3]> {
    let lat = m.lattice();
    let n = m.len();
    for &w in s_members {
        for i in 0..n {
            if mask[i] {
                continue;
            }
            for a in 0..n {
                let sa = m.mul(w, a);
                if mask[lat.join(i, sa)] && mask[m.residual(i, sa)] {
                    return Some([w, i, a]);
                }
            }
        }
    }
    None
}

/// S-Ako: for all s in S and i, a, b:
/// `i v (s*a), i v (s*b) in F  =>  i v (a*b) in F`.
pub fn is_s_ako(f: &ElementFamily<'_>, s: &MClosedSet<'_>) -> Result<Verdict> {
    require_s_in_family(f, s)?;
    Ok(match ako_counterexample(f.host(), s.members(), f.mask()) {
        None => Verdict::pass(),
        Some(w) => Verdict::fail_one("ako", w.to_vec()),
    })
}

/// S-Oka: for all s in S and i, a:
/// `i v (s*a), (i : (s*a)) in F  =>  i in F`.
pub fn is_s_oka(f: &ElementFamily<'_>, s: &MClosedSet<'_>) -> Result<Verdict> {
    require_s_in_family(f, s)?;
    Ok(match oka_counterexample(f.host(), s.members(), f.mask()) {
        None => Verdict::pass(),
        Some(w) => Verdict::fail_one("oka", w.to_vec()),
    })
}

/// S_pr-Oka: as S-Oka but `a` ranges over principal elements only.
/// Requires an r-lattice host with `S <= Pr(L) <= F`.
pub fn is_spr_oka(f: &ElementFamily<'_>, s: &MClosedSet<'_>) -> Result<Verdict> {
    let m = f.host();
    if !m.class_flags().r_lattice {
        return Err(Error::NotRLattice);
    }
    let principal = m.principal_elements();
    for &t in s.members() {
        if !principal.contains(&t) {
            return Err(Error::SNotContained { element: m.lattice().label(t).to_string() });
        }
    }
    for &p in &principal {
        if !f.contains(p) {
            return Err(Error::PrNotContained { element: m.lattice().label(p).to_string() });
        }
    }
    let lat = m.lattice();
    for &w in s.members() {
        for i in 0..m.len() {
            if f.contains(i) {
                continue;
            }
            for &a in &principal {
                let sa = m.mul(w, a);
                if f.contains(lat.join(i, sa)) && f.contains(m.residual(i, sa)) {
                    return Ok(Verdict::fail_one("oka", vec![w, i, a]));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Multiplicative semigroup closure of `generators` (repeats allowed),
/// with one shortest witness product per closure element. Products are
/// discovered breadth-first by length, expanding generators in ascending
/// index order, so witnesses are deterministic.
#[derive(Debug, Clone)]
pub struct ProductClosure {
    /// Closure elements in discovery order.
    pub elements: Vec<usize>,
    /// `witness[k]` is the generator sequence whose product is `elements[k]`.
    pub witnesses: Vec<Vec<usize>>,
}

impl ProductClosure {
    pub fn contains(&self, e: usize) -> bool {
        self.elements.contains(&e)
    }

    pub fn witness_for(&self, e: usize) -> Option<&[usize]> {
        self.elements.iter().position(|&x| x == e).map(|k| self.witnesses[k].as_slice())
    }
}

/// Compute the product closure of a generator list.
pub fn product_closure(m: &MultLattice, generators: &[usize]) -> Result<ProductClosure> {
    let mut gens: Vec<usize> = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    if gens.is_empty() {
        return Err(Error::BadParams("product closure needs at least one generator".into()));
    }
    if let Some(&e) = gens.iter().find(|&&e| e >= m.len()) {
        return Err(Error::BadParams(format!("element index {e} out of range")));
    }
    let mut elements: Vec<usize> = Vec::new();
    let mut witnesses: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    for &g in &gens {
        if !elements.contains(&g) {
            elements.push(g);
            witnesses.push(vec![g]);
            frontier.push(g);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            let wx = witnesses[elements.iter().position(|&e| e == x).unwrap()].clone();
            for &g in &gens {
                let y = m.mul(x, g);
                if !elements.contains(&y) {
                    let mut w = wx.clone();
                    w.push(g);
                    elements.push(y);
                    witnesses.push(w);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(ProductClosure { elements, witnesses })
}

/// The named family constructions used by the theorem registry.
#[derive(Debug, Clone)]
pub enum FamilyKind {
    /// `{j | s*j </= p for every listed p and every s in S}`.
    AvoidingPrimes { s_members: Vec<usize>, primes: Vec<usize> },
    /// `{i | s <= i for some s in S}`.
    AboveS { s_members: Vec<usize> },
    /// `{j | j* = 0}`.
    StarZero,
    /// `{j | (0:j) = 0}`.
    Dense,
    /// Complement of the annihilator elements.
    NonAnnihilator,
    /// All essential elements.
    Essential,
    /// All meet principal elements.
    MeetPrincipal,
    /// All compact elements; the whole lattice on finite hosts.
    Compact,
    /// Up-set of the multiplicative closure of the generators.
    ProductClosure { generators: Vec<usize> },
}

/// Build the literal set for a named family.
pub fn build_named_family<'a>(m: &'a MultLattice, kind: &FamilyKind) -> Result<ElementFamily<'a>> {
    let lat = m.lattice();
    let n = m.len();
    let check = |elems: &[usize]| -> Result<()> {
        match elems.iter().find(|&&e| e >= n) {
            Some(&e) => Err(Error::BadParams(format!("element index {e} out of range"))),
            None => Ok(()),
        }
    };
    let mask: Vec<bool> = match kind {
        FamilyKind::AvoidingPrimes { s_members, primes } => {
            check(s_members)?;
            check(primes)?;
            (0..n)
                .map(|j| {
                    s_members
                        .iter()
                        .all(|&w| primes.iter().all(|&p| !lat.leq(m.mul(w, j), p)))
                })
                .collect()
        }
        FamilyKind::AboveS { s_members } => {
            check(s_members)?;
            (0..n).map(|i| s_members.iter().any(|&w| lat.leq(w, i))).collect()
        }
        FamilyKind::StarZero => (0..n).map(|j| m.star(j) == lat.bottom()).collect(),
        FamilyKind::Dense => (0..n).map(|j| m.is_dense(j)).collect(),
        FamilyKind::NonAnnihilator => (0..n).map(|a| !m.is_annihilator(a)).collect(),
        FamilyKind::Essential => (0..n).map(|a| m.is_essential(a)).collect(),
        FamilyKind::MeetPrincipal => (0..n).map(|a| m.is_meet_principal(a)).collect(),
        FamilyKind::Compact => vec![true; n],
        FamilyKind::ProductClosure { generators } => {
            let closure = product_closure(m, generators)?;
            (0..n)
                .map(|x| closure.elements.iter().any(|&p| lat.leq(p, x)))
                .collect()
        }
    };
    Ok(ElementFamily::from_mask(m, mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::sprime::mclosed_from_labels;

    fn labels(m: &MultLattice, elems: &[usize]) -> Vec<String> {
        elems.iter().map(|&e| m.lattice().label(e).to_string()).collect()
    }

    #[test]
    fn structural_flags_on_idz12() {
        let m = catalog::builtin("idz12").unwrap();
        let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        let flags = f.structural_flags().unwrap();
        assert!(flags.semi_filter.holds);
        assert!(flags.filter.holds);
        assert!(flags.m_closed.holds);

        let f = ElementFamily::from_labels(&m, &["(1)", "(6)"]).unwrap();
        let flags = f.structural_flags().unwrap();
        assert!(!flags.semi_filter.holds);
        assert_eq!(
            labels(&m, flags.semi_filter.witness.as_ref().unwrap()),
            ["(6)", "(3)"]
        );

        let all = ElementFamily::new(&m, &(0..m.len()).collect::<Vec<_>>()).unwrap();
        let flags = all.structural_flags().unwrap();
        assert!(flags.filter.holds && flags.m_closed.holds);

        let no_top = ElementFamily::from_labels(&m, &["(0)"]).unwrap();
        assert!(matches!(no_top.structural_flags(), Err(Error::MissingTop)));
    }

    #[test]
    fn ako_oka_worked_examples() {
        let m = catalog::builtin("idz12").unwrap();
        // S = {(1),(4)}, F = {(1),(2),(4)}: both S-Ako and S-Oka.
        let s = mclosed_from_labels(&m, &["(1)", "(4)"]).unwrap();
        let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        assert!(is_s_ako(&f, &s).unwrap().pass);
        assert!(is_s_oka(&f, &s).unwrap().pass);

        // S = {(1)}, F = {(1),(6)}: S-Oka but not S-Ako,
        // with witness s=(1), i=(0), a=b=(6).
        let s1 = mclosed_from_labels(&m, &["(1)"]).unwrap();
        let f = ElementFamily::from_labels(&m, &["(1)", "(6)"]).unwrap();
        let ako = is_s_ako(&f, &s1).unwrap();
        assert!(ako.is_fail());
        assert_eq!(labels(&m, &ako.witnesses[0].elems), ["(1)", "(0)", "(6)", "(6)"]);
        assert!(is_s_oka(&f, &s1).unwrap().pass);

        // S not contained in F is an error, not a fail.
        let f = ElementFamily::from_labels(&m, &["(1)", "(6)"]).unwrap();
        let s14 = mclosed_from_labels(&m, &["(1)", "(4)"]).unwrap();
        assert!(matches!(is_s_ako(&f, &s14), Err(Error::SNotContained { .. })));
    }

    #[test]
    fn oka_counterexample_of_msp_family() {
        // F = {(4),(6),(2),(1)} with S = {(1)}: fails S-Oka with
        // i=(0), a=(6) (residual ((0):(6)) = (2) is in F), and fails S-Ako
        // with i=(0), a=b=(6).
        let m = catalog::builtin("idz12").unwrap();
        let s1 = mclosed_from_labels(&m, &["(1)"]).unwrap();
        let f = ElementFamily::from_labels(&m, &["(4)", "(6)", "(2)", "(1)"]).unwrap();
        let oka = is_s_oka(&f, &s1).unwrap();
        assert!(oka.is_fail());
        assert_eq!(labels(&m, &oka.witnesses[0].elems), ["(1)", "(0)", "(6)"]);
        let e = |l: &str| m.lattice().index_of(l).unwrap();
        assert_eq!(m.residual(e("(0)"), e("(6)")), e("(2)"));
        let ako = is_s_ako(&f, &s1).unwrap();
        assert!(ako.is_fail());
        assert_eq!(labels(&m, &ako.witnesses[0].elems), ["(1)", "(0)", "(6)", "(6)"]);
    }

    #[test]
    fn non_annihilator_family_of_k() {
        let m = catalog::builtin("k").unwrap();
        let f = build_named_family(&m, &FamilyKind::NonAnnihilator).unwrap();
        assert_eq!(f.labels(), ["a", "b", "c", "1"]);
        let s = mclosed_from_labels(&m, &["1"]).unwrap();
        let ako = is_s_ako(&f, &s).unwrap();
        assert!(ako.is_fail());
        // First counterexample in scan order: i=0, a=a, b=a (a*a = 0).
        // Re-verify it refutes the definition.
        let w = &ako.witnesses[0].elems;
        let lat = m.lattice();
        assert!(f.contains(lat.join(w[1], m.mul(w[0], w[2]))));
        assert!(f.contains(lat.join(w[1], m.mul(w[0], w[3]))));
        assert!(!f.contains(lat.join(w[1], m.mul(w[2], w[3]))));
        assert_eq!(labels(&m, w), ["1", "0", "a", "a"]);
        assert!(is_s_oka(&f, &s).unwrap().pass);
    }

    #[test]
    fn named_families_on_idz12() {
        let m = catalog::builtin("idz12").unwrap();
        let s = mclosed_from_labels(&m, &["(1)", "(4)"]).unwrap();
        let above = build_named_family(
            &m,
            &FamilyKind::AboveS { s_members: s.members().to_vec() },
        )
        .unwrap();
        assert_eq!(above.labels(), ["(4)", "(2)", "(1)"]);

        let m30 = catalog::builtin("idz30").unwrap();
        let dense30 = build_named_family(&m30, &FamilyKind::Dense).unwrap();
        assert_eq!(dense30.labels(), ["(1)"]);

        // Product closure of {(2),(3)} reaches (0), so the up-set is all of L.
        let e = |l: &str| m.lattice().index_of(l).unwrap();
        let closure = product_closure(&m, &[e("(2)"), e("(3)")]).unwrap();
        assert!(closure.contains(m.lattice().bottom()));
        // Shortest zero product, generators expanded in index order:
        // (3)*(2) = (6), (6)*(2) = (0).
        assert_eq!(
            labels(&m, closure.witness_for(m.lattice().bottom()).unwrap()),
            ["(3)", "(2)", "(2)"]
        );
        let f = build_named_family(
            &m,
            &FamilyKind::ProductClosure { generators: vec![e("(2)"), e("(3)")] },
        )
        .unwrap();
        assert_eq!(f.members().len(), m.len());
    }

    #[test]
    fn max_complement_examples() {
        let m = catalog::builtin("idz12").unwrap();
        let f = ElementFamily::from_labels(&m, &["(4)", "(6)", "(2)", "(1)"]).unwrap();
        assert_eq!(labels(&m, &f.max_complement()), ["(3)"]);
        let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        assert_eq!(labels(&m, &f.max_complement()), ["(3)"]);
        let all = ElementFamily::new(&m, &(0..m.len()).collect::<Vec<_>>()).unwrap();
        assert!(all.max_complement().is_empty());
    }

    #[test]
    fn spr_oka_gates_and_full_family() {
        let m = catalog::builtin("idz12").unwrap();
        let s = mclosed_from_labels(&m, &["(1)"]).unwrap();
        let all = ElementFamily::new(&m, &(0..m.len()).collect::<Vec<_>>()).unwrap();
        assert!(is_spr_oka(&all, &s).unwrap().pass);

        // Every element of Id(Z12) is principal, so Pr(L) = L forces F = L.
        let partial = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        assert!(matches!(is_spr_oka(&partial, &s), Err(Error::PrNotContained { .. })));

        let n5 = catalog::builtin("n5").unwrap();
        let s5 = mclosed_from_labels(&n5, &["1"]).unwrap();
        let all5 = ElementFamily::new(&n5, &(0..n5.len()).collect::<Vec<_>>()).unwrap();
        assert!(matches!(is_spr_oka(&all5, &s5), Err(Error::NotRLattice)));
    }

    #[test]
    fn flags_cache_matches_recomputation() {
        let m = catalog::builtin("idz12").unwrap();
        let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        let first = f.structural_flags().unwrap().clone();
        let again = f.structural_flags().unwrap().clone();
        assert_eq!(first, again);
        let fresh = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        assert_eq!(&first, fresh.structural_flags().unwrap());
    }
}
