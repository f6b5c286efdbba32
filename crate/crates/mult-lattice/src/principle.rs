//! The S-Prime Element Principle, its supplement, and the theorem registry.
//!
//! The principle: if F is an S-Ako or S-Oka family and every maximal member
//! of the complement F' avoids S, then every maximal member of F' is
//! S-prime. [`check_s_pep`] evaluates one instance, [`exhaustive_audit`]
//! instantiates it over every valid S and every family within limits (any
//! failure is a soundness bug in this crate, not in the mathematics), and
//! [`run_theorem_suite`] runs the registry of maximal-implies-prime
//! consequences.
//!
//! Reports never conflate "hypothesis does not hold" with "check failed":
//! a conclusion is asserted only when all recorded preconditions pass,
//! otherwise the report is not-applicable.
//!
//! Several registry members gate on the host being a multiplicative lattice
//! (a finite c-lattice) even though their sources state them for V-lattices:
//! the semi-filter/M-closed lemma and the constructed-family lemmas all rely
//! on the expansion `(i v sa)(i v sb) <= i v ab`, which needs join
//! distributivity. On the V-lattice N5 with meet as product, F = {b, 1} is
//! a meet-closed semi-filter yet fails the Ako axiom at (i, a, b) =
//! (a, b, c); the gates keep the audits on ground where the statements are
//! actually theorems. The principle itself needs no such gate.

use crate::error::{Error, Result};
use crate::family::{
    ako_counterexample, build_named_family, is_s_ako, is_s_oka, is_spr_oka, oka_counterexample,
    product_closure, ElementFamily, FamilyKind,
};
use crate::lattice::FiniteLattice;
use crate::mult::{LatticeClass, MultLattice};
use crate::sprime::{is_prime, is_sprime, minimal_primes, spec_s, validate_mclosed, MClosedSet};
use crate::verdict::{Verdict, Witness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Families-per-host bound for exhaustive (S, F) enumeration.
pub const EXHAUSTIVE_FAMILY_MAX: usize = 7;
/// Sampled (S, F) pairs per audit when the host is too large to enumerate.
const SUITE_SAMPLE: usize = 2_000;
const SUITE_SEED: u64 = 0x5EED_1A77;

/// A named hypothesis check inside a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precondition {
    pub name: &'static str,
    pub verdict: Verdict,
}

impl Precondition {
    pub fn new(name: &'static str, verdict: Verdict) -> Self {
        Precondition { name, verdict }
    }

    pub fn passed(name: &'static str) -> Self {
        Precondition { name, verdict: Verdict::pass() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStatus {
    Pass,
    Fail,
    Vacuous,
    NotApplicable,
}

impl ReportStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ReportStatus::Pass => "pass",
            ReportStatus::Fail => "fail",
            ReportStatus::Vacuous => "vacuous",
            ReportStatus::NotApplicable => "not-applicable",
        }
    }
}

/// Machine-readable outcome of one theorem check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    /// Stable id, e.g. "pep-ako" or "max-nonessential-is-prime".
    pub theorem: &'static str,
    pub host: String,
    pub preconditions: Vec<Precondition>,
    /// None when some precondition failed (not-applicable).
    pub conclusion: Option<Verdict>,
    pub note: Option<String>,
}

impl TheoremReport {
    pub fn new(theorem: &'static str, host: &str) -> Self {
        TheoremReport {
            theorem,
            host: host.to_string(),
            preconditions: Vec::new(),
            conclusion: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn status(&self) -> ReportStatus {
        if self.preconditions.iter().any(|p| p.verdict.is_fail()) {
            return ReportStatus::NotApplicable;
        }
        match &self.conclusion {
            None => ReportStatus::NotApplicable,
            Some(v) if v.pass && v.vacuous => ReportStatus::Vacuous,
            Some(v) if v.pass => ReportStatus::Pass,
            Some(_) => ReportStatus::Fail,
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.status(), ReportStatus::Pass | ReportStatus::Vacuous)
    }

    pub fn is_fail(&self) -> bool {
        self.status() == ReportStatus::Fail
    }

    /// One tab-separated record: theorem id, host, status, witness tuples.
    pub fn render_tsv(&self, lat: &FiniteLattice) -> String {
        let status = self.status();
        let mut detail: Vec<String> = Vec::new();
        match status {
            ReportStatus::NotApplicable => {
                if let Some(p) = self.preconditions.iter().find(|p| p.verdict.is_fail()) {
                    detail.push(format!("precondition:{}", p.name));
                    if !p.verdict.witnesses.is_empty() {
                        detail.push(p.verdict.render_witnesses(lat));
                    }
                }
            }
            _ => {
                if let Some(v) = &self.conclusion {
                    if !v.witnesses.is_empty() {
                        detail.push(v.render_witnesses(lat));
                    }
                }
            }
        }
        if let Some(note) = &self.note {
            detail.push(format!("note:{note}"));
        }
        format!("{}\t{}\t{}\t{}", self.theorem, self.host, status.as_str(), detail.join(" "))
    }
}

/// Which family axiom an S-PEP instance assumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PepVariant {
    Ako,
    Oka,
    SprOka,
}

impl PepVariant {
    pub fn theorem_id(&self) -> &'static str {
        match self {
            PepVariant::Ako => "pep-ako",
            PepVariant::Oka => "pep-oka",
            PepVariant::SprOka => "pep-spr-oka",
        }
    }

    fn precondition_name(&self) -> &'static str {
        match self {
            PepVariant::Ako => "family-is-s-ako",
            PepVariant::Oka => "family-is-s-oka",
            PepVariant::SprOka => "family-is-spr-oka",
        }
    }
}

/// One instance of the S-Prime Element Principle.
///
/// Preconditions recorded in the report: the family axiom named by
/// `variant`, and S-avoidance of every maximal member of F'. When they all
/// hold, the conclusion checks `Max(F') subset of Spec_S`; an empty
/// `Max(F')` is a vacuous pass (the standing maximality assumption is
/// surfaced, not silently assumed). Structural violations (S not inside F,
/// non-r-lattice hosts for the principal variant) are errors.
pub fn check_s_pep(
    f: &ElementFamily<'_>,
    s: &MClosedSet<'_>,
    variant: PepVariant,
) -> Result<TheoremReport> {
    let m = f.host();
    let lat = m.lattice();
    let mut report = TheoremReport::new(variant.theorem_id(), m.name());

    let family_check = match variant {
        PepVariant::Ako => is_s_ako(f, s)?,
        PepVariant::Oka => is_s_oka(f, s)?,
        PepVariant::SprOka => is_spr_oka(f, s)?,
    };
    report
        .preconditions
        .push(Precondition::new(variant.precondition_name(), family_check));

    let max = f.max_complement();
    let mut avoid = Verdict::pass();
    'avoid: for &mx in &max {
        for &t in s.members() {
            if lat.leq(t, mx) {
                avoid = Verdict::fail_one("s-below-max", vec![t, mx]);
                break 'avoid;
            }
        }
    }
    report.preconditions.push(Precondition::new("max-avoids-s", avoid));

    if report.preconditions.iter().any(|p| p.verdict.is_fail()) {
        return Ok(report);
    }

    if max.is_empty() {
        report.conclusion = Some(Verdict::vacuous_pass());
        return Ok(report);
    }
    for &mx in &max {
        let v = is_sprime(m, s, mx);
        if v.is_fail() {
            let mut ws = vec![Witness::new("max-not-sprime", vec![mx])];
            ws.extend(v.witnesses);
            report.conclusion = Some(Verdict::fail(ws));
            return Ok(report);
        }
    }
    report.conclusion = Some(Verdict::pass_with(vec![Witness::new("max", max)]));
    Ok(report)
}

/// Detect the converse-failure configuration: F' is a (non-vacuous) MSP
/// family while F fails both the S-Ako and the S-Oka axiom.
///
/// The three requirements are recorded as preconditions, so a family that is
/// not a converse-failure comes back not-applicable rather than "fail";
/// a confirmed configuration has a passing conclusion carrying both family
/// counterexamples.
pub fn check_converse_failure(f: &ElementFamily<'_>, s: &MClosedSet<'_>) -> Result<TheoremReport> {
    let m = f.host();
    let mut report = TheoremReport::new("pep-converse", m.name());

    let max = f.max_complement();
    let msp = if max.is_empty() {
        Verdict { pass: false, vacuous: true, witnesses: vec![] }
    } else if let Some(&mx) = max.iter().find(|&&mx| is_sprime(m, s, mx).is_fail()) {
        Verdict::fail_one("max-not-sprime", vec![mx])
    } else {
        Verdict::pass_with(vec![Witness::new("max", max)])
    };
    report.preconditions.push(Precondition::new("msp-nonvacuous", msp));

    let ako = is_s_ako(f, s)?;
    let not_ako = match &ako {
        v if v.is_fail() => Verdict::pass_with(v.witnesses.clone()),
        _ => Verdict { pass: false, vacuous: false, witnesses: vec![] },
    };
    report.preconditions.push(Precondition::new("fails-s-ako", not_ako));

    let oka = is_s_oka(f, s)?;
    let not_oka = match &oka {
        v if v.is_fail() => Verdict::pass_with(v.witnesses.clone()),
        _ => Verdict { pass: false, vacuous: false, witnesses: vec![] },
    };
    report.preconditions.push(Precondition::new("fails-s-oka", not_oka));

    if report.preconditions.iter().all(|p| p.verdict.pass) {
        let mut ws = Vec::new();
        for p in &report.preconditions {
            ws.extend(p.verdict.witnesses.clone());
        }
        report.conclusion = Some(Verdict::pass_with(ws));
    }
    Ok(report)
}

/// Enumerate families F over the host (F containing S), returning every
/// confirmed converse-failure, up to `max_results`. Exhaustive only.
pub fn search_converse_failures<'a>(
    m: &'a MultLattice,
    s: &MClosedSet<'a>,
    max_results: usize,
) -> Result<Vec<(ElementFamily<'a>, TheoremReport)>> {
    let n = m.len();
    if n > EXHAUSTIVE_FAMILY_MAX {
        return Err(Error::LimitExceeded { detail: format!("2^{n} families") });
    }
    let mut out = Vec::new();
    for mask_bits in 0u32..(1 << n) {
        let mask: Vec<bool> = (0..n).map(|e| mask_bits >> e & 1 == 1).collect();
        if s.members().iter().any(|&t| !mask[t]) {
            continue;
        }
        let f = ElementFamily::from_mask(m, mask);
        let report = check_converse_failure(&f, s)?;
        if report.status() == ReportStatus::Pass {
            out.push((f, report));
            if out.len() >= max_results {
                break;
            }
        }
    }
    Ok(out)
}

/// Scope of the principle supplement.
#[derive(Debug, Clone, Copy)]
pub enum PepsMode<'x, 'a> {
    /// Every member of the given semi-filter.
    Semifilter(&'x ElementFamily<'a>),
    /// Every element above the given one.
    Above(usize),
    /// Every element of the lattice.
    All,
}

/// The supplement to the principle: under the S-PEP hypotheses, if every
/// S-prime element in the scope belongs to F, then every element of the
/// scope belongs to F.
///
/// The implication is verified literally: a false hypothesis (some S-prime
/// in scope escapes F) is a vacuous pass, recorded with the escaping element
/// as witness. The finite-chain upper-bound hypothesis is recorded as
/// automatically satisfied (a finite chain contains its own maximum).
pub fn check_s_peps(
    f: &ElementFamily<'_>,
    s: &MClosedSet<'_>,
    mode: PepsMode<'_, '_>,
) -> Result<TheoremReport> {
    let m = f.host();
    let lat = m.lattice();
    let mut report = TheoremReport::new(
        match mode {
            PepsMode::Semifilter(_) => "peps-semifilter",
            PepsMode::Above(_) => "peps-above",
            PepsMode::All => "peps-all",
        },
        m.name(),
    );

    let ako = is_s_ako(f, s)?;
    let oka = is_s_oka(f, s)?;
    let family_ok = if ako.pass || oka.pass {
        Verdict::pass()
    } else {
        let mut ws = ako.witnesses;
        ws.extend(oka.witnesses);
        Verdict::fail(ws)
    };
    report.preconditions.push(Precondition::new("family-is-s-ako-or-s-oka", family_ok));

    let max = f.max_complement();
    let mut avoid = Verdict::pass();
    'avoid: for &mx in &max {
        for &t in s.members() {
            if lat.leq(t, mx) {
                avoid = Verdict::fail_one("s-below-max", vec![t, mx]);
                break 'avoid;
            }
        }
    }
    report.preconditions.push(Precondition::new("max-avoids-s", avoid));
    report.preconditions.push(Precondition::passed("chains-have-upper-bounds"));

    let scope: Vec<usize> = match mode {
        PepsMode::Semifilter(fbar) => {
            let flags = fbar.structural_flags()?;
            let semi = if flags.semi_filter.holds {
                Verdict::pass()
            } else {
                Verdict::fail_one("not-semi-filter", flags.semi_filter.witness.clone().unwrap())
            };
            report.preconditions.push(Precondition::new("scope-is-semi-filter", semi));
            fbar.members().to_vec()
        }
        PepsMode::Above(j) => lat.up_set(j),
        PepsMode::All => (0..m.len()).collect(),
    };

    if report.preconditions.iter().any(|p| p.verdict.is_fail()) {
        return Ok(report);
    }

    let sprimes = spec_s(m, s);
    if let Some(&p) = sprimes.iter().find(|&&p| scope.contains(&p) && !f.contains(p)) {
        // Hypothesis fails; the implication holds vacuously.
        report.conclusion = Some(Verdict {
            pass: true,
            vacuous: true,
            witnesses: vec![Witness::new("sprime-outside-f", vec![p])],
        });
        return Ok(report);
    }
    report.conclusion = Some(match scope.iter().find(|&&x| !f.contains(x)) {
        Some(&x) => Verdict::fail_one("scope-element-outside-f", vec![x]),
        None => Verdict::pass(),
    });
    Ok(report)
}

/// All multiplicatively closed subsets of the host (1 in, 0 out), ascending
/// member lists, enumerated over the 2^(n-2) candidate subsets. Hosts with
/// more than 18 free elements fall back to the closures of {1, x} for each
/// single generator x, which keeps the suite usable on large inputs.
pub fn enumerate_mclosed_sets(m: &MultLattice) -> Result<Vec<MClosedSet<'_>>> {
    let lat = m.lattice();
    let (top, bot) = (lat.top(), lat.bottom());
    if top == bot {
        return Ok(Vec::new());
    }
    let free: Vec<usize> = (0..m.len()).filter(|&e| e != top && e != bot).collect();
    let mut out = Vec::new();
    if free.len() <= 18 {
        for mask in 0u32..(1 << free.len()) {
            let mut members = vec![top];
            members.extend(free.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e));
            if let Ok(s) = validate_mclosed(m, &members) {
                out.push(s);
            }
        }
    } else {
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for gen in 0..m.len() {
            let mut members = vec![top, gen];
            loop {
                let mut grew = false;
                let snapshot = members.clone();
                for &a in &snapshot {
                    for &b in &snapshot {
                        let p = m.mul(a, b);
                        if !members.contains(&p) {
                            members.push(p);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            members.sort_unstable();
            members.dedup();
            if members.contains(&bot) || seen.contains(&members) {
                continue;
            }
            seen.push(members.clone());
            if let Ok(s) = validate_mclosed(m, &members) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Family masks containing the given members: exhaustive for small hosts,
/// otherwise a seeded sample of `sample` masks.
pub(crate) fn family_masks_over(
    n: usize,
    forced: &[usize],
    exhaustive_max: usize,
    sample: Option<usize>,
    seed: u64,
) -> Result<Vec<Vec<bool>>> {
    let free: Vec<usize> = (0..n).filter(|e| !forced.contains(e)).collect();
    if n <= exhaustive_max {
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u32..(1 << free.len()) {
            let mut members = vec![false; n];
            for &e in forced {
                members[e] = true;
            }
            for (k, &e) in free.iter().enumerate() {
                members[e] = mask >> k & 1 == 1;
            }
            out.push(members);
        }
        return Ok(out);
    }
    let Some(count) = sample else {
        return Err(Error::LimitExceeded { detail: format!("2^{} families", free.len()) });
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut members = vec![false; n];
        for &e in forced {
            members[e] = true;
        }
        for &e in &free {
            members[e] = rng.gen::<bool>();
        }
        out.push(members);
    }
    Ok(out)
}

/// Limits for [`exhaustive_audit`].
#[derive(Debug, Clone, Copy)]
pub struct AuditLimits {
    /// Hosts up to this size get full family enumeration.
    pub exhaustive_max: usize,
    /// Total sampled families for larger hosts; None forbids sampling.
    pub sample: Option<usize>,
    pub seed: u64,
}

impl Default for AuditLimits {
    fn default() -> Self {
        AuditLimits { exhaustive_max: EXHAUSTIVE_FAMILY_MAX, sample: None, seed: SUITE_SEED }
    }
}

/// Aggregated outcome of an exhaustive S-PEP audit.
#[derive(Debug)]
pub struct AuditOutcome {
    /// All applicable non-vacuous reports, in enumeration order.
    pub reports: Vec<TheoremReport>,
    /// (S, F, variant) triples whose preconditions all held.
    pub applicable: usize,
    /// Applicable triples with empty Max(F').
    pub vacuous: usize,
    pub failures: usize,
}

/// Instantiate the principle over every valid S and every family F
/// containing S, in both the Ako and the Oka variant. The theorem is
/// proved, so any failure indicts this implementation.
pub fn exhaustive_audit(m: &MultLattice, limits: AuditLimits) -> Result<AuditOutcome> {
    if m.class() == LatticeClass::Invalid {
        return Err(Error::UnsupportedClass { need: "multiplicative lattice or V-lattice" });
    }
    let mut outcome =
        AuditOutcome { reports: Vec::new(), applicable: 0, vacuous: 0, failures: 0 };
    let sets = enumerate_mclosed_sets(m)?;
    for s in &sets {
        let per_set_sample = limits.sample.map(|k| (k / sets.len().max(1)).max(1));
        let masks =
            family_masks_over(m.len(), s.members(), limits.exhaustive_max, per_set_sample, limits.seed)?;
        for mask in masks {
            let f = ElementFamily::from_mask(m, mask);
            for variant in [PepVariant::Ako, PepVariant::Oka] {
                let report = check_s_pep(&f, s, variant)?;
                match report.status() {
                    ReportStatus::NotApplicable => {}
                    ReportStatus::Vacuous => {
                        outcome.applicable += 1;
                        outcome.vacuous += 1;
                    }
                    ReportStatus::Pass => {
                        outcome.applicable += 1;
                        outcome.reports.push(report);
                    }
                    ReportStatus::Fail => {
                        outcome.applicable += 1;
                        outcome.failures += 1;
                        outcome.reports.push(report);
                    }
                }
            }
        }
    }
    Ok(outcome)
}

// ---------------------------------------------------------------------------
// Theorem registry
// ---------------------------------------------------------------------------

fn gate_c_lattice(report: &mut TheoremReport, m: &MultLattice) -> bool {
    let flags = m.class_flags();
    let verdict = if flags.c_lattice {
        Verdict::pass()
    } else {
        match m.violation() {
            Some(v) => Verdict::fail_one("axiom-violation", v.at.clone()),
            None => Verdict::fail_one("not-multiplicative", vec![]),
        }
    };
    report.preconditions.push(Precondition::new("c-lattice", verdict));
    flags.c_lattice
}

fn gate_r_lattice(report: &mut TheoremReport, m: &MultLattice) -> bool {
    let flags = m.class_flags();
    let verdict = if flags.r_lattice {
        Verdict::pass()
    } else if !flags.c_lattice {
        Verdict::fail_one("not-c-lattice", vec![])
    } else if let Some(w) = m.lattice().is_modular().witnesses.first() {
        Verdict::fail_one("not-modular", w.elems.clone())
    } else {
        Verdict::fail_one("not-principally-generated", vec![])
    };
    report.preconditions.push(Precondition::new("r-lattice", verdict));
    flags.r_lattice
}

fn gate_reduced(report: &mut TheoremReport, m: &MultLattice) -> bool {
    let v = m.is_reduced();
    let ok = v.pass;
    report.preconditions.push(Precondition::new("reduced", v));
    ok
}

/// Conclusion asserting that every member of `max` is prime.
fn all_prime_conclusion(m: &MultLattice, max: Vec<usize>) -> Verdict {
    if max.is_empty() {
        return Verdict::vacuous_pass();
    }
    for &p in &max {
        let v = is_prime(m, p);
        if v.is_fail() {
            let mut ws = vec![Witness::new("max-not-prime", vec![p])];
            ws.extend(v.witnesses);
            return Verdict::fail(ws);
        }
    }
    Verdict::pass_with(vec![Witness::new("max", max)])
}

fn member_maximal_is_prime(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("maximal-is-prime", m.name());
    if !gate_c_lattice(&mut report, m) {
        return report;
    }
    let proper: Vec<usize> = (0..m.len()).filter(|&e| e != m.lattice().top()).collect();
    report.conclusion = Some(all_prime_conclusion(m, m.lattice().maximal_members(&proper)));
    report
}

fn member_max_nondense_is_prime(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("max-nondense-is-prime", m.name());
    if !gate_c_lattice(&mut report, m) {
        return report;
    }
    let nondense: Vec<usize> = (0..m.len()).filter(|&a| !m.is_dense(a)).collect();
    report.conclusion = Some(all_prime_conclusion(m, m.lattice().maximal_members(&nondense)));
    report
}

fn member_max_zero_divisor_is_prime(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("max-zero-divisor-is-prime", m.name());
    if !gate_c_lattice(&mut report, m) {
        return report;
    }
    let zd: Vec<usize> = (0..m.len()).filter(|&a| m.is_zero_divisor(a)).collect();
    report.conclusion = Some(all_prime_conclusion(m, m.lattice().maximal_members(&zd)));
    report
}

fn member_max_annihilator_is_prime(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("max-annihilator-is-prime", m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    // The route of the proof: the non-annihilator family is Oka for S = {1}.
    let s = validate_mclosed(m, &[m.lattice().top()])?;
    let f = build_named_family(m, &FamilyKind::NonAnnihilator)?;
    let oka = is_s_oka(&f, &s)?;
    if oka.is_fail() {
        let mut ws = vec![Witness::new("non-annihilator-family-not-oka", vec![])];
        ws.extend(oka.witnesses);
        report.conclusion = Some(Verdict::fail(ws));
        return Ok(report);
    }
    let anni: Vec<usize> = (0..m.len()).filter(|&a| m.is_annihilator(a)).collect();
    report.conclusion = Some(all_prime_conclusion(m, m.lattice().maximal_members(&anni)));
    Ok(report)
}

fn member_max_nonessential_is_prime(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("max-nonessential-is-prime", m.name());
    let c = gate_c_lattice(&mut report, m);
    let red = gate_reduced(&mut report, m);
    if !c || !red {
        return Ok(report);
    }
    // The proof route: the essential elements form a semi-filter with the
    // M-closed property on reduced hosts.
    let f = build_named_family(m, &FamilyKind::Essential)?;
    let flags = f.structural_flags()?;
    if !flags.semi_filter.holds || !flags.m_closed.holds {
        let w = flags
            .semi_filter
            .witness
            .clone()
            .or_else(|| flags.m_closed.witness.clone())
            .unwrap_or_default();
        report.conclusion = Some(Verdict::fail_one("essential-family-not-filter", w));
        return Ok(report);
    }
    report.conclusion = Some(all_prime_conclusion(m, f.max_complement()));
    Ok(report)
}

fn member_filter_mclosed_is_ako_oka(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("filter-mclosed-is-ako-oka", m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    let lat = m.lattice();
    let sets = enumerate_mclosed_sets(m)?;
    let mut checked = 0usize;
    for s in &sets {
        let sample = Some((SUITE_SAMPLE / sets.len().max(1)).max(1));
        for mask in family_masks_over(m.len(), s.members(), EXHAUSTIVE_FAMILY_MAX, sample, SUITE_SEED)? {
            checked += 1;
            let n = m.len();
            let semi = (0..n).all(|j| {
                !mask[j] || (0..n).all(|i| !lat.leq(j, i) || mask[i])
            });
            let m_closed = (0..n)
                .all(|i| !mask[i] || (0..n).all(|j| !mask[j] || mask[m.mul(i, j)]));
            let meet_closed = (0..n)
                .all(|i| !mask[i] || (0..n).all(|j| !mask[j] || mask[lat.meet(i, j)]));
            // Semi-filter + M-closed coincides with filter + M-closed.
            if (semi && m_closed) != (semi && meet_closed && m_closed) {
                let members: Vec<usize> = (0..n).filter(|&e| mask[e]).collect();
                report.conclusion = Some(Verdict::fail(vec![Witness::new(
                    "filter-equivalence-broken",
                    members,
                )]));
                return Ok(report);
            }
            if semi && m_closed {
                if let Some(w) = ako_counterexample(m, s.members(), &mask) {
                    report.conclusion = Some(Verdict::fail_one("ako", w.to_vec()));
                    return Ok(report);
                }
                if let Some(w) = oka_counterexample(m, s.members(), &mask) {
                    report.conclusion = Some(Verdict::fail_one("oka", w.to_vec()));
                    return Ok(report);
                }
            }
        }
    }
    report.conclusion = Some(if checked == 0 { Verdict::vacuous_pass() } else { Verdict::pass() });
    report.note = Some(format!("checked {checked} (S, F) pairs"));
    Ok(report)
}

fn member_avoiding_primes_is_ako(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("avoiding-primes-is-ako", m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    let mut checked = 0usize;
    for s in enumerate_mclosed_sets(m)? {
        let spec = spec_s(m, &s);
        // All nonempty prime subsets when small, else singletons + full set.
        let subsets: Vec<Vec<usize>> = if spec.len() <= 4 {
            (1u32..(1 << spec.len()))
                .map(|mask| {
                    spec.iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &p)| p)
                        .collect()
                })
                .collect()
        } else {
            let mut v: Vec<Vec<usize>> = spec.iter().map(|&p| vec![p]).collect();
            v.push(spec.clone());
            v
        };
        for primes in subsets {
            checked += 1;
            let f = build_named_family(
                m,
                &FamilyKind::AvoidingPrimes { s_members: s.members().to_vec(), primes: primes.clone() },
            )?;
            let v = is_s_ako(&f, &s)?;
            if v.is_fail() {
                let mut ws = vec![Witness::new("primes", primes)];
                ws.extend(v.witnesses);
                report.conclusion = Some(Verdict::fail(ws));
                return Ok(report);
            }
        }
    }
    report.conclusion = Some(if checked == 0 { Verdict::vacuous_pass() } else { Verdict::pass() });
    report.note = Some(format!("checked {checked} (S, primes) pairs"));
    Ok(report)
}

fn member_above_s_is_ako(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("above-s-is-ako", m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    let mut checked = 0usize;
    for s in enumerate_mclosed_sets(m)? {
        checked += 1;
        let f = build_named_family(m, &FamilyKind::AboveS { s_members: s.members().to_vec() })?;
        let v = is_s_ako(&f, &s)?;
        if v.is_fail() {
            report.conclusion = Some(Verdict::fail(v.witnesses));
            return Ok(report);
        }
    }
    report.conclusion = Some(if checked == 0 { Verdict::vacuous_pass() } else { Verdict::pass() });
    report.note = Some(format!("checked {checked} sets"));
    Ok(report)
}

fn member_named_family_is_ako(
    m: &MultLattice,
    theorem: &'static str,
    kind: FamilyKind,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(theorem, m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    let f = build_named_family(m, &kind)?;
    let mut applicable = 0usize;
    for s in enumerate_mclosed_sets(m)? {
        // The statement assumes S inside F; other S are out of scope.
        if s.members().iter().any(|&t| !f.contains(t)) {
            continue;
        }
        applicable += 1;
        let v = is_s_ako(&f, &s)?;
        if v.is_fail() {
            report.conclusion = Some(Verdict::fail(v.witnesses));
            return Ok(report);
        }
    }
    report.conclusion =
        Some(if applicable == 0 { Verdict::vacuous_pass() } else { Verdict::pass() });
    report.note = Some(format!("checked {applicable} sets"));
    Ok(report)
}

fn member_oka_residual_condition(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("oka-residual-condition", m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    let lat = m.lattice();
    let n = m.len();
    let mut checked = 0usize;
    let sets = enumerate_mclosed_sets(m)?;
    for s in &sets {
        let sample = Some((SUITE_SAMPLE / sets.len().max(1)).max(1));
        for mask in family_masks_over(n, s.members(), EXHAUSTIVE_FAMILY_MAX, sample, SUITE_SEED)? {
            checked += 1;
            // Condition: i <= s*j with s*j and (i : s*j) in F forces i in F.
            let condition = s.members().iter().all(|&w| {
                (0..n).all(|i| {
                    mask[i]
                        || (0..n).all(|j| {
                            let sj = m.mul(w, j);
                            !(lat.leq(i, sj) && mask[sj] && mask[m.residual(i, sj)])
                        })
                })
            });
            let oka = oka_counterexample(m, s.members(), &mask).is_none();
            if condition != oka {
                let members: Vec<usize> = (0..n).filter(|&e| mask[e]).collect();
                report.conclusion =
                    Some(Verdict::fail(vec![Witness::new("equivalence-broken", members)]));
                return Ok(report);
            }
        }
    }
    report.conclusion = Some(if checked == 0 { Verdict::vacuous_pass() } else { Verdict::pass() });
    report.note = Some(format!("checked {checked} (S, F) pairs"));
    Ok(report)
}

fn member_meet_principal_product(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("meet-principal-product", m.name());
    if !gate_c_lattice(&mut report, m) {
        return report;
    }
    let mp: Vec<usize> = (0..m.len()).filter(|&x| m.is_meet_principal(x)).collect();
    for &a in &mp {
        for &b in &mp {
            if !m.is_meet_principal(m.mul(a, b)) {
                report.conclusion = Some(Verdict::fail_one("product-not-meet-principal", vec![a, b]));
                return report;
            }
        }
    }
    report.conclusion =
        Some(if mp.is_empty() { Verdict::vacuous_pass() } else { Verdict::pass() });
    report
}

fn member_meet_principal_residual_identity(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("meet-principal-residual-identity", m.name());
    if !gate_c_lattice(&mut report, m) {
        return report;
    }
    let lat = m.lattice();
    for j in 0..m.len() {
        if !m.is_meet_principal(j) {
            continue;
        }
        for i in 0..m.len() {
            if lat.leq(i, j) && m.mul(j, m.residual(i, j)) != i {
                report.conclusion = Some(Verdict::fail_one("identity-broken", vec![i, j]));
                return report;
            }
        }
    }
    report.conclusion = Some(Verdict::pass());
    report
}

fn member_prime_meet_principal_implies_all(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("prime-meet-principal-implies-all", m.name());
    if !gate_c_lattice(&mut report, m) {
        return report;
    }
    let primes_mp = crate::sprime::prime_elements(m)
        .into_iter()
        .find(|&p| !m.is_meet_principal(p));
    let all_mp = (0..m.len()).find(|&x| !m.is_meet_principal(x));
    // Biconditional: all primes meet principal iff all elements are.
    report.conclusion = Some(match (primes_mp, all_mp) {
        (None, None) => Verdict::pass(),
        (Some(_), Some(_)) => Verdict::pass(),
        (None, Some(x)) => Verdict::fail_one("element-not-meet-principal", vec![x]),
        (Some(p), None) => Verdict::fail_one("prime-not-meet-principal", vec![p]),
    });
    report
}

fn member_product_avoidance_is_prime(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("product-avoidance-is-prime", m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    let gens = minimal_primes(m);
    if gens.is_empty() {
        report.conclusion = Some(Verdict::vacuous_pass());
        report.note = Some("no prime elements".to_string());
        return Ok(report);
    }
    let closure = product_closure(m, &gens)?;
    let f = build_named_family(m, &FamilyKind::ProductClosure { generators: gens.clone() })?;
    // Part 1: elements maximal outside F are prime.
    let part1 = all_prime_conclusion(m, f.max_complement());
    if part1.is_fail() {
        report.conclusion = Some(part1);
        return Ok(report);
    }
    // Part 2: every prime contains some minimal prime (true by finiteness),
    // hence some finite product of the generators is zero.
    let lat = m.lattice();
    for p in crate::sprime::prime_elements(m) {
        if !gens.iter().any(|&g| lat.leq(g, p)) {
            report.conclusion = Some(Verdict::fail_one("prime-avoids-generators", vec![p]));
            return Ok(report);
        }
    }
    let bot = lat.bottom();
    report.conclusion = Some(match closure.witness_for(bot) {
        Some(product) => Verdict::pass_with(vec![
            Witness::new("generators", gens),
            Witness::new("zero-product", product.to_vec()),
        ]),
        None => Verdict::fail_one("no-zero-product", gens),
    });
    Ok(report)
}

fn member_maximal_star_is_prime(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("maximal-star-is-prime", m.name());
    let c = gate_c_lattice(&mut report, m);
    let red = gate_reduced(&mut report, m);
    if !c || !red {
        return report;
    }
    let top = m.lattice().top();
    let mut stars: Vec<usize> = (0..m.len()).map(|a| m.star(a)).filter(|&x| x != top).collect();
    stars.sort_unstable();
    stars.dedup();
    report.conclusion = Some(all_prime_conclusion(m, m.lattice().maximal_members(&stars)));
    report
}

fn member_sprime_residual_equivalence(m: &MultLattice) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("sprime-residual-equivalence", m.name());
    if !gate_c_lattice(&mut report, m) {
        return Ok(report);
    }
    let lat = m.lattice();
    let mut checked = 0usize;
    for s in enumerate_mclosed_sets(m)? {
        for p in 0..m.len() {
            if s.members().iter().any(|&t| lat.leq(t, p)) {
                continue;
            }
            checked += 1;
            let v = crate::sprime::residual_prime_equiv(m, &s, p)?;
            if v.is_fail() {
                report.conclusion = Some(Verdict::fail(v.witnesses));
                return Ok(report);
            }
        }
    }
    report.conclusion = Some(if checked == 0 { Verdict::vacuous_pass() } else { Verdict::pass() });
    report.note = Some(format!("checked {checked} (S, p) pairs"));
    Ok(report)
}

fn member_max_noncompact_is_prime(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("max-noncompact-is-prime", m.name());
    if !gate_r_lattice(&mut report, m) {
        return report;
    }
    let mut verdict = Verdict::vacuous_pass();
    if m.len() <= 12 {
        for c in 0..m.len() {
            if !m.compact_audit(c).unwrap_or(true) {
                verdict = Verdict::fail_one("compact-audit", vec![c]);
                break;
            }
        }
    }
    report.conclusion = Some(verdict);
    report.note = Some(
        "degenerate: every element of a finite lattice is compact, so the set of \
         non-compact elements is empty"
            .to_string(),
    );
    report
}

fn member_primes_compact_implies_noetherian(m: &MultLattice) -> TheoremReport {
    let mut report = TheoremReport::new("primes-compact-implies-noetherian", m.name());
    if !gate_r_lattice(&mut report, m) {
        return report;
    }
    report.conclusion = Some(Verdict::pass());
    report.note = Some(
        "degenerate: all primes are compact and all elements are compact on a finite \
         lattice, so both sides of the equivalence hold"
            .to_string(),
    );
    report
}

/// Run every registry member against the host. Members self-gate on their
/// hypotheses (c-lattice, r-lattice, reduced); inapplicable members come
/// back not-applicable with the failed hypothesis named.
pub fn run_theorem_suite(m: &MultLattice) -> Vec<TheoremReport> {
    let fallible = |theorem: &'static str, r: Result<TheoremReport>| match r {
        Ok(report) => report,
        Err(e) => TheoremReport::new(theorem, m.name()).with_note(format!("error: {e}")),
    };
    vec![
        member_maximal_is_prime(m),
        member_max_nondense_is_prime(m),
        member_max_zero_divisor_is_prime(m),
        fallible("max-annihilator-is-prime", member_max_annihilator_is_prime(m)),
        fallible("max-nonessential-is-prime", member_max_nonessential_is_prime(m)),
        fallible("filter-mclosed-is-ako-oka", member_filter_mclosed_is_ako_oka(m)),
        fallible("avoiding-primes-is-ako", member_avoiding_primes_is_ako(m)),
        fallible("above-s-is-ako", member_above_s_is_ako(m)),
        fallible("star-zero-is-ako", member_named_family_is_ako(m, "star-zero-is-ako", FamilyKind::StarZero)),
        fallible("dense-is-ako", member_named_family_is_ako(m, "dense-is-ako", FamilyKind::Dense)),
        fallible("oka-residual-condition", member_oka_residual_condition(m)),
        member_meet_principal_product(m),
        member_meet_principal_residual_identity(m),
        member_prime_meet_principal_implies_all(m),
        fallible("product-avoidance-is-prime", member_product_avoidance_is_prime(m)),
        member_maximal_star_is_prime(m),
        fallible("sprime-residual-equivalence", member_sprime_residual_equivalence(m)),
        member_max_noncompact_is_prime(m),
        member_primes_compact_implies_noetherian(m),
    ]
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
    fn pep_worked_examples() {
        let m = catalog::builtin("idz12").unwrap();
        let s = mclosed_from_labels(&m, &["(1)", "(4)"]).unwrap();
        let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        let r = check_s_pep(&f, &s, PepVariant::Ako).unwrap();
        assert_eq!(r.status(), ReportStatus::Pass);
        assert_eq!(labels(&m, &r.conclusion.as_ref().unwrap().witnesses[0].elems), ["(3)"]);

        let s1 = mclosed_from_labels(&m, &["(1)"]).unwrap();
        let f = ElementFamily::from_labels(&m, &["(1)", "(6)"]).unwrap();
        let r = check_s_pep(&f, &s1, PepVariant::Oka).unwrap();
        assert_eq!(r.status(), ReportStatus::Pass);
        // Max(F') = {(3), (2)}, both prime.
        assert_eq!(
            labels(&m, &r.conclusion.as_ref().unwrap().witnesses[0].elems),
            ["(3)", "(2)"]
        );

        let all = ElementFamily::new(&m, &(0..m.len()).collect::<Vec<_>>()).unwrap();
        let r = check_s_pep(&all, &s1, PepVariant::Ako).unwrap();
        assert_eq!(r.status(), ReportStatus::Vacuous);
    }

    #[test]
    fn pep_not_applicable_when_family_axiom_fails() {
        let m = catalog::builtin("idz12").unwrap();
        let s1 = mclosed_from_labels(&m, &["(1)"]).unwrap();
        // Not an Ako family (Example with F = {(1),(6)}).
        let f = ElementFamily::from_labels(&m, &["(1)", "(6)"]).unwrap();
        let r = check_s_pep(&f, &s1, PepVariant::Ako).unwrap();
        assert_eq!(r.status(), ReportStatus::NotApplicable);
        assert!(r.render_tsv(m.lattice()).contains("precondition:family-is-s-ako"));
    }

    #[test]
    fn converse_failure_configuration() {
        let m = catalog::builtin("idz12").unwrap();
        let s1 = mclosed_from_labels(&m, &["(1)"]).unwrap();
        let f = ElementFamily::from_labels(&m, &["(4)", "(6)", "(2)", "(1)"]).unwrap();
        let r = check_converse_failure(&f, &s1).unwrap();
        assert_eq!(r.status(), ReportStatus::Pass);

        let all = ElementFamily::new(&m, &(0..m.len()).collect::<Vec<_>>()).unwrap();
        let r = check_converse_failure(&all, &s1).unwrap();
        assert_eq!(r.status(), ReportStatus::NotApplicable);

        let found = search_converse_failures(&m, &s1, 5).unwrap();
        assert!(!found.is_empty(), "the worked example exists in the search space");
    }

    #[test]
    fn peps_modes() {
        let m = catalog::builtin("idz12").unwrap();
        let s1 = mclosed_from_labels(&m, &["(1)"]).unwrap();
        // All elements of Id(Z12) are meet principal, so the meet-principal
        // family is everything and mode-all passes non-vacuously.
        let f = build_named_family(&m, &FamilyKind::MeetPrincipal).unwrap();
        assert_eq!(f.members().len(), m.len());
        let r = check_s_peps(&f, &s1, PepsMode::All).unwrap();
        assert_eq!(r.status(), ReportStatus::Pass);

        // Above top: the only element is 1, which every family contains.
        let fam = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        let r = check_s_peps(&fam, &s1, PepsMode::Above(m.lattice().top())).unwrap();
        assert_eq!(r.status(), ReportStatus::Pass);

        // Product closure of {(2),(3)} covers L; mode-all passes.
        let e = |l: &str| m.lattice().index_of(l).unwrap();
        let f = build_named_family(
            &m,
            &FamilyKind::ProductClosure { generators: vec![e("(2)"), e("(3)")] },
        )
        .unwrap();
        let r = check_s_peps(&f, &s1, PepsMode::All).unwrap();
        assert_eq!(r.status(), ReportStatus::Pass);
    }

    #[test]
    fn peps_vacuous_when_hypothesis_fails() {
        let m = catalog::builtin("idz12").unwrap();
        let s1 = mclosed_from_labels(&m, &["(1)"]).unwrap();
        // F = {(1),(2),(4)} is Ako for S={1}? It is semi-filter and M-closed,
        // so yes; the prime (3) escapes F, making the mode-all hypothesis false.
        let f = ElementFamily::from_labels(&m, &["(1)", "(2)", "(4)"]).unwrap();
        let r = check_s_peps(&f, &s1, PepsMode::All).unwrap();
        assert_eq!(r.status(), ReportStatus::Vacuous);
        assert_eq!(
            labels(&m, &r.conclusion.as_ref().unwrap().witnesses[0].elems),
            ["(3)"]
        );
    }

    #[test]
    fn exhaustive_audits_are_sound() {
        for name in ["n5", "idz12", "chain5"] {
            let m = catalog::builtin(name).unwrap();
            let outcome = exhaustive_audit(&m, AuditLimits::default()).unwrap();
            assert_eq!(outcome.failures, 0, "{name}");
            assert!(outcome.applicable > 0, "{name}");
        }
        let m = catalog::builtin("idz12").unwrap();
        let outcome = exhaustive_audit(&m, AuditLimits::default()).unwrap();
        assert!(outcome.vacuous >= 1, "F = L is always vacuous");
    }

    #[test]
    fn semifilter_mclosed_fails_ako_on_n5() {
        // The c-lattice gate on the family lemmas is load-bearing: on the
        // V-lattice N5 the family {b, 1} is an M-closed semi-filter yet
        // fails the Ako axiom, because meet does not distribute over join.
        let m = catalog::builtin("n5").unwrap();
        let s1 = mclosed_from_labels(&m, &["1"]).unwrap();
        let f = ElementFamily::from_labels(&m, &["b", "1"]).unwrap();
        let flags = f.structural_flags().unwrap();
        assert!(flags.semi_filter.holds && flags.m_closed.holds);
        let ako = is_s_ako(&f, &s1).unwrap();
        assert!(ako.is_fail());
        assert_eq!(labels(&m, &ako.witnesses[0].elems), ["1", "a", "b", "c"]);

        // Same effect for the up-set family of S = {1, b}.
        let s1b = mclosed_from_labels(&m, &["1", "b"]).unwrap();
        let above = build_named_family(
            &m,
            &FamilyKind::AboveS { s_members: s1b.members().to_vec() },
        )
        .unwrap();
        assert_eq!(above.labels(), ["b", "1"]);
        assert!(is_s_ako(&above, &s1b).unwrap().is_fail());
    }

    #[test]
    fn suite_on_idz30_and_idz12() {
        let m30 = catalog::builtin("idz30").unwrap();
        let reports = run_theorem_suite(&m30);
        let essential = reports.iter().find(|r| r.theorem == "max-nonessential-is-prime").unwrap();
        assert_eq!(essential.status(), ReportStatus::Pass);
        let mut max = labels(&m30, &essential.conclusion.as_ref().unwrap().witnesses[0].elems);
        max.sort();
        assert_eq!(max, ["(2)", "(3)", "(5)"]);
        assert!(reports.iter().all(|r| !r.is_fail()), "no member may fail on Id(Z30)");

        let m12 = catalog::builtin("idz12").unwrap();
        let reports = run_theorem_suite(&m12);
        let essential = reports.iter().find(|r| r.theorem == "max-nonessential-is-prime").unwrap();
        assert_eq!(essential.status(), ReportStatus::NotApplicable);
        let reduced = essential.preconditions.iter().find(|p| p.name == "reduced").unwrap();
        assert_eq!(labels(&m12, &reduced.verdict.witnesses[0].elems), ["(6)"]);
        assert!(reports.iter().all(|r| !r.is_fail()), "no member may fail on Id(Z12)");
    }

    #[test]
    fn suite_on_k_checks_annihilators() {
        let m = catalog::builtin("k").unwrap();
        let reports = run_theorem_suite(&m);
        let anni = reports.iter().find(|r| r.theorem == "max-annihilator-is-prime").unwrap();
        assert_eq!(anni.status(), ReportStatus::Pass);
        assert_eq!(labels(&m, &anni.conclusion.as_ref().unwrap().witnesses[0].elems), ["d"]);
        assert!(reports.iter().all(|r| !r.is_fail()), "no member may fail on K");
    }

    #[test]
    fn degenerate_members_note_their_degeneracy() {
        let m = catalog::builtin("idz12").unwrap();
        let reports = run_theorem_suite(&m);
        for id in ["max-noncompact-is-prime", "primes-compact-implies-noetherian"] {
            let r = reports.iter().find(|r| r.theorem == id).unwrap();
            assert!(r.is_pass(), "{id}");
            assert!(r.note.as_ref().unwrap().contains("degenerate"), "{id}");
        }
    }

    #[test]
    fn product_avoidance_member_on_idz12() {
        let m = catalog::builtin("idz12").unwrap();
        let r = member_product_avoidance_is_prime(&m).unwrap();
        assert_eq!(r.status(), ReportStatus::Pass);
        let ws = &r.conclusion.as_ref().unwrap().witnesses;
        assert_eq!(labels(&m, &ws[0].elems), ["(3)", "(2)"]);
        assert_eq!(labels(&m, &ws[1].elems), ["(3)", "(2)", "(2)"]);
    }

    #[test]
    fn reports_render_deterministically() {
        let m = catalog::builtin("idz30").unwrap();
        let a: Vec<String> =
            run_theorem_suite(&m).iter().map(|r| r.render_tsv(m.lattice())).collect();
        let b: Vec<String> =
            run_theorem_suite(&m).iter().map(|r| r.render_tsv(m.lattice())).collect();
        assert_eq!(a, b);
    }
}
