//! Finite multiplicative lattices and V-lattices, verified exhaustively.
//!
//! This crate decides the element- and family-level predicates of
//! multiplicative order theory on finite carriers — prime and S-prime
//! elements, residuals, Oka/Ako families, principal, dense, essential and
//! annihilator elements — and verifies the theorems that connect them
//! (most centrally the S-Prime Element Principle) by direct enumeration,
//! with deterministic counterexample witnesses. The ideal lattices of Z_n
//! double as an independent ring-side oracle: the same notions are computed
//! over raw residues and cross-checked against the lattice side.
//!
//! Every structure is immutable after construction and every check is a
//! pure function, so everything here is freely shareable across threads.
//!
//! See the crate examples for a tour: building lattices, spectra, family
//! checks, the exhaustive audits, the Z_n cross-check, and the
//! multiplication search. The `mlat` binary exposes the same operations on
//! a line-oriented text format.

pub mod catalog;
pub mod error;
pub mod family;
pub mod lattice;
pub mod mult;
pub mod principle;
pub mod search;
pub mod sprime;
pub mod textfmt;
pub mod verdict;
pub mod zn;

pub use error::{Error, Result};
pub use family::{
    build_named_family, is_s_ako, is_s_oka, is_spr_oka, product_closure, ElementFamily,
    FamilyKind, StructuralFlags,
};
pub use lattice::FiniteLattice;
pub use mult::{
    classify_multiplication, Axiom, AxiomViolation, ClassFlags, ElementFlags, LatticeClass,
    MultLattice, MultTable,
};
pub use principle::{
    check_converse_failure, check_s_pep, check_s_peps, enumerate_mclosed_sets, exhaustive_audit,
    run_theorem_suite, search_converse_failures, AuditLimits, AuditOutcome, PepVariant, PepsMode,
    Precondition, ReportStatus, TheoremReport,
};
pub use search::{search_multiplications, SearchLevel, SearchResult};
pub use sprime::{
    is_prime, is_sprime, maximal_avoiding, mclosed_from_labels, minimal_primes, prime_elements,
    residual_prime_equiv, spec_s, validate_mclosed, MClosedSet,
};
pub use verdict::{Verdict, Witness};
pub use zn::{crosscheck, ideal_lattice, ZnModel};
