//! Pass/fail verdicts with structured witnesses.
//!
//! Every decision procedure in this crate returns either a plain value or a
//! [`Verdict`]. A failing verdict always carries at least one [`Witness`]:
//! the concrete elements that refute the definition being checked. Witnesses
//! are stored as element indices and rendered with labels on demand, so
//! reports stay byte-identical across runs.

use crate::lattice::FiniteLattice;
use std::fmt::Write as _;

/// Concrete evidence attached to a verdict: a named tuple of elements.
///
/// The `role` says which quantifier position the elements fill, e.g.
/// `("pair", [a, b])` for a primality counterexample or
/// `("ako", [s, i, a, b])` for a family-axiom counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub role: &'static str,
    pub elems: Vec<usize>,
}

impl Witness {
    pub fn new(role: &'static str, elems: Vec<usize>) -> Self {
        Witness { role, elems }
    }

    /// Render as `role(label,label,...)`.
    pub fn render(&self, lat: &FiniteLattice) -> String {
        let mut out = String::new();
        let _ = write!(out, "{}(", self.role);
        for (k, &e) in self.elems.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(lat.label(e));
        }
        out.push(')');
        out
    }
}

/// Outcome of a predicate or theorem check.
///
/// `vacuous` marks a pass in which the statement held because its
/// quantification range was empty (e.g. `Max(F') = {}`); callers that care
/// about the distinction can surface it, everyone else treats it as a pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub vacuous: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { pass: true, vacuous: false, witnesses: Vec::new() }
    }

    pub fn pass_with(witnesses: Vec<Witness>) -> Self {
        Verdict { pass: true, vacuous: false, witnesses }
    }

    pub fn vacuous_pass() -> Self {
        Verdict { pass: true, vacuous: true, witnesses: Vec::new() }
    }

    pub fn fail(witnesses: Vec<Witness>) -> Self {
        debug_assert!(!witnesses.is_empty(), "failing verdicts carry a witness");
        Verdict { pass: false, vacuous: false, witnesses }
    }

    pub fn fail_one(role: &'static str, elems: Vec<usize>) -> Self {
        Verdict::fail(vec![Witness::new(role, elems)])
    }

    pub fn is_fail(&self) -> bool {
        !self.pass
    }

    /// Render all witnesses, space-separated, with element labels.
    pub fn render_witnesses(&self, lat: &FiniteLattice) -> String {
        self.witnesses
            .iter()
            .map(|w| w.render(lat))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
