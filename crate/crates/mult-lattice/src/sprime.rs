//! Multiplicatively closed sets and (S-)prime elements.
//!
//! A proper element p avoiding S is S-prime when a *single* s in S repairs
//! every product below p: `a*b <= p` forces `s*a <= p` or `s*b <= p`. With
//! S = {1} this is the classical prime element. The existential quantifier
//! is resolved by scanning S in ascending element index and returning the
//! first uniform witness, so spectra and witnesses are reproducible.
//!
//! The failing verdict distinguishes the two failure modes: an element of S
//! sitting below p (witness role `s-below`), versus no uniform s (one
//! `defeated` witness per member of S).

use crate::error::{Error, Result};
use crate::mult::{LatticeClass, MultLattice};
use crate::verdict::{Verdict, Witness};

/// A validated multiplicatively closed subset: contains 1, avoids 0, and is
/// closed under the host's product.
#[derive(Debug, Clone)]
pub struct MClosedSet<'a> {
    host: &'a MultLattice,
    members: Vec<usize>,
}

impl<'a> MClosedSet<'a> {
    pub fn host(&self) -> &'a MultLattice {
        self.host
    }

    /// Members in ascending index order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.members.iter().map(|&e| self.host.lattice().label(e)).collect()
    }
}

/// Validate `members` as a multiplicatively closed set over `m`.
pub fn validate_mclosed<'a>(m: &'a MultLattice, members: &[usize]) -> Result<MClosedSet<'a>> {
    let mut members: Vec<usize> = members.to_vec();
    members.sort_unstable();
    members.dedup();
    let lat = m.lattice();
    if members.binary_search(&lat.bottom()).is_ok() {
        return Err(Error::ContainsZero);
    }
    if members.binary_search(&lat.top()).is_err() {
        return Err(Error::MissingOne);
    }
    for &a in &members {
        for &b in &members {
            let p = m.mul(a, b);
            if members.binary_search(&p).is_err() {
                return Err(Error::NotClosed {
                    a: lat.label(a).to_string(),
                    b: lat.label(b).to_string(),
                    product: lat.label(p).to_string(),
                });
            }
        }
    }
    Ok(MClosedSet { host: m, members })
}

/// Validate a set given by labels.
pub fn mclosed_from_labels<'a>(m: &'a MultLattice, labels: &[&str]) -> Result<MClosedSet<'a>> {
    let members: Vec<usize> = labels
        .iter()
        .map(|l| m.lattice().index_of(l))
        .collect::<Result<_>>()?;
    validate_mclosed(m, &members)
}

/// Classical primality: p proper, and `a*b <= p` implies `a <= p` or
/// `b <= p` for all pairs. The failing witness is the first pair in
/// ascending `(a, b)` scan order.
///
/// On a finite lattice every element is compact, so the all-pairs form
/// coincides with the compact-pairs form used for c-lattices.
pub fn is_prime(m: &MultLattice, p: usize) -> Verdict {
    let lat = m.lattice();
    if p == lat.top() {
        return Verdict::fail_one("not-proper", vec![p]);
    }
    for a in 0..m.len() {
        if lat.leq(a, p) {
            continue;
        }
        for b in 0..m.len() {
            if lat.leq(m.mul(a, b), p) && !lat.leq(b, p) {
                return Verdict::fail_one("pair", vec![a, b]);
            }
        }
    }
    Verdict::pass()
}

/// All prime elements, ascending.
pub fn prime_elements(m: &MultLattice) -> Vec<usize> {
    (0..m.len()).filter(|&p| is_prime(m, p).pass).collect()
}

/// Minimal members of the prime spectrum.
pub fn minimal_primes(m: &MultLattice) -> Vec<usize> {
    m.lattice().minimal_members(&prime_elements(m))
}

/// Does `s` uniformly repair every product below `p`? Returns the first
/// defeating pair when not.
fn uniform_witness_defeat(m: &MultLattice, s: usize, p: usize) -> Option<(usize, usize)> {
    let lat = m.lattice();
    for a in 0..m.len() {
        if lat.leq(m.mul(s, a), p) {
            continue;
        }
        for b in 0..m.len() {
            if lat.leq(m.mul(a, b), p) && !lat.leq(m.mul(s, b), p) {
                return Some((a, b));
            }
        }
    }
    None
}

/// S-primality of `p`.
///
/// Pass requires (i) `t </= p` for every `t` in S (this subsumes properness
/// since 1 is in S) and (ii) a single `s` in S that repairs every pair. The
/// passing verdict carries the least-index witness `s`; the failing verdict
/// carries either the offending `t <= p` or one defeating pair per member
/// of S.
pub fn is_sprime(m: &MultLattice, s: &MClosedSet<'_>, p: usize) -> Verdict {
    let lat = m.lattice();
    for &t in s.members() {
        if lat.leq(t, p) {
            return Verdict::fail_one("s-below", vec![t]);
        }
    }
    let mut defeats = Vec::new();
    for &w in s.members() {
        match uniform_witness_defeat(m, w, p) {
            None => return Verdict::pass_with(vec![Witness::new("s", vec![w])]),
            Some((a, b)) => defeats.push(Witness::new("defeated", vec![w, a, b])),
        }
    }
    Verdict::fail(defeats)
}

/// `Spec_S(L)`: all S-prime elements, ascending. For S = {1} this is the
/// prime spectrum.
pub fn spec_s(m: &MultLattice, s: &MClosedSet<'_>) -> Vec<usize> {
    (0..m.len()).filter(|&p| is_sprime(m, s, p).pass).collect()
}

/// Equivalence between S-primality of `p` and primality of some residual
/// `(p : s)`:
/// `p` is S-prime iff `(p : s)` is a prime element for some s in S.
///
/// Preconditions: the host is a multiplicative lattice and `t </= p` for
/// every t in S. The verdict reports the witnessing s on each side when the
/// equivalence holds in the positive direction.
pub fn residual_prime_equiv(m: &MultLattice, s: &MClosedSet<'_>, p: usize) -> Result<Verdict> {
    if m.class() != LatticeClass::MultiplicativeLattice {
        return Err(Error::UnsupportedClass { need: "multiplicative lattice" });
    }
    let lat = m.lattice();
    if let Some(&t) = s.members().iter().find(|&&t| lat.leq(t, p)) {
        return Err(Error::PreconditionViolated(format!(
            "`{}` in S lies below `{}`",
            lat.label(t),
            lat.label(p)
        )));
    }
    let sprime = is_sprime(m, s, p);
    let residual_side = s
        .members()
        .iter()
        .copied()
        .find(|&w| is_prime(m, m.residual(p, w)).pass);
    let agree = sprime.pass == residual_side.is_some();
    if !agree {
        let mut ws = vec![Witness::new("equivalence-broken", vec![p])];
        ws.extend(sprime.witnesses);
        return Ok(Verdict::fail(ws));
    }
    let mut ws = Vec::new();
    if sprime.pass {
        ws.extend(sprime.witnesses); // role "s"
        if let Some(w) = residual_side {
            ws.push(Witness::new("residual-s", vec![w]));
        }
    }
    Ok(Verdict::pass_with(ws))
}

/// Elements above `a`, avoiding all of S, maximal with that property, and a
/// verdict asserting that each of them is prime.
///
/// Requires a multiplicative host (the statement is about c-lattices) and
/// `t </= a` for all t in S; the candidate set is then nonempty because `a`
/// itself qualifies.
pub fn maximal_avoiding(
    m: &MultLattice,
    s: &MClosedSet<'_>,
    a: usize,
) -> Result<(Vec<usize>, Verdict)> {
    if m.class() != LatticeClass::MultiplicativeLattice {
        return Err(Error::UnsupportedClass { need: "multiplicative lattice (c-lattice)" });
    }
    let lat = m.lattice();
    if let Some(&t) = s.members().iter().find(|&&t| lat.leq(t, a)) {
        return Err(Error::PreconditionViolated(format!(
            "`{}` in S lies below `{}`",
            lat.label(t),
            lat.label(a)
        )));
    }
    let candidates: Vec<usize> = (0..m.len())
        .filter(|&p| lat.leq(a, p) && s.members().iter().all(|&t| !lat.leq(t, p)))
        .collect();
    let maximal = lat.maximal_members(&candidates);
    for &p in &maximal {
        let v = is_prime(m, p);
        if v.is_fail() {
            let mut ws = vec![Witness::new("not-prime", vec![p])];
            ws.extend(v.witnesses);
            return Ok((maximal, Verdict::fail(ws)));
        }
    }
    let ws = maximal.iter().map(|&p| Witness::new("prime", vec![p])).collect();
    Ok((maximal, Verdict::pass_with(ws)))
}
