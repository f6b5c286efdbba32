//! The ring Z_n and its ideal lattice, used as an independent oracle.
//!
//! Ideals of Z_n are exactly (d) for divisors d of n, with (n) the zero
//! ideal. The lattice side identifies ideal (d) with a lattice element; the
//! ring side works with raw residues 0..n and recovers ideal generators by
//! gcd-folding explicit element sets. The two computations share nothing,
//! which is the point: agreement between them is the anti-drift check for
//! the residual and S-prime implementations.
//!
//! Element order in the ideal lattice is bottom-first: index 0 is the zero
//! ideal `(0)` and the last index is `(1)`. Labels are `"(d)"` with the
//! zero ideal written `"(0)"`.

use crate::error::{Error, Result};
use crate::family::{is_s_ako, is_s_oka};
use crate::lattice::FiniteLattice;
use crate::mult::{classify_multiplication, LatticeClass, MultLattice, MultTable};
use crate::principle::{Precondition, TheoremReport};
use crate::sprime::{validate_mclosed, MClosedSet};
use crate::verdict::{Verdict, Witness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Z_n with its divisor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnModel {
    n: u64,
    /// Ascending divisors of n, 1 first, n last.
    divisors: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl ZnModel {
    pub fn new(n: u64) -> Result<ZnModel> {
        if n < 2 {
            return Err(Error::BadModulus(n));
        }
        let mut divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        Ok(ZnModel { n, divisors })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// Label of the ideal generated by divisor `d`.
    pub fn ideal_label(&self, d: u64) -> String {
        if d == self.n { "(0)".to_string() } else { format!("({d})") }
    }

    /// Residues of the ideal (d): multiples of d below n.
    fn members(&self, d: u64) -> impl Iterator<Item = u64> + '_ {
        (0..self.n / d).map(move |k| k * d)
    }

    /// Generator of the ideal generated by a set of residues: gcd with n.
    fn generated(&self, residues: impl IntoIterator<Item = u64>) -> u64 {
        residues.into_iter().fold(self.n, gcd)
    }

    /// `(A : B) = {r | rB <= A}`, scanned over raw residues.
    pub fn ring_colon(&self, a: u64, b: u64) -> u64 {
        let in_a = |r: u64| r.is_multiple_of(a);
        self.generated(
            (0..self.n).filter(|&r| self.members(b).all(|x| in_a(r * x % self.n))),
        )
    }

    /// Ideal sum (d) + (e) recovered from the explicit residue sumset.
    pub fn ring_sum(&self, d: u64, e: u64) -> u64 {
        let mut residues = Vec::new();
        for x in self.members(d) {
            for y in self.members(e) {
                residues.push((x + y) % self.n);
            }
        }
        self.generated(residues)
    }

    /// Ideal product (d)(e): the ideal generated by pairwise products.
    pub fn ring_product(&self, d: u64, e: u64) -> u64 {
        let mut residues = Vec::new();
        for x in self.members(d) {
            for y in self.members(e) {
                residues.push(x * y % self.n);
            }
        }
        self.generated(residues)
    }

    /// The ideal s(d) = {s*x | x in (d)}.
    pub fn ring_scale(&self, s: u64, d: u64) -> u64 {
        self.generated(self.members(d).map(|x| s * x % self.n))
    }

    /// Validate a residue set as multiplicatively closed with 1, without 0.
    pub fn validate_residue_set(&self, s: &[u64]) -> Result<Vec<u64>> {
        let mut set: Vec<u64> = s.iter().map(|&r| r % self.n).collect();
        set.sort_unstable();
        set.dedup();
        if set.contains(&0) {
            return Err(Error::ContainsZero);
        }
        if !set.contains(&1) {
            return Err(Error::MissingOne);
        }
        for &a in &set {
            for &b in &set {
                let p = a * b % self.n;
                if !set.contains(&p) {
                    return Err(Error::RingSNotClosed { a, b, product: p, n: self.n });
                }
            }
        }
        Ok(set)
    }

    /// Element-wise S-primality of the ideal P = (p), per the ring
    /// definition: P disjoint from S, and one s in S with
    /// `ab in P  =>  sa in P or sb in P` over all residue pairs.
    ///
    /// Also evaluates the ideal-wise form (one s with
    /// `IJ <= P => sI <= P or sJ <= P` over all ideal pairs) and fails if
    /// the two disagree.
    pub fn ring_s_prime(&self, s: &[u64], p: u64) -> Result<Verdict> {
        let s = self.validate_residue_set(s)?;
        let in_p = |r: u64| r.is_multiple_of(p);
        if let Some(&t) = s.iter().find(|&&t| in_p(t)) {
            return Ok(Verdict::fail_one("s-in-p", vec![t as usize]));
        }
        // P = R is never S-prime; with 1 in S the disjointness check above
        // already rejects p = 1, so properness is implied.
        let elementwise = s.iter().copied().find(|&w| {
            (0..self.n).all(|a| {
                (0..self.n).all(|b| !in_p(a * b % self.n) || in_p(w * a % self.n) || in_p(w * b % self.n))
            })
        });
        let idealwise = s.iter().copied().find(|&w| {
            self.divisors.iter().all(|&di| {
                self.divisors.iter().all(|&dj| {
                    !self.ring_product(di, dj).is_multiple_of(p)
                        || self.ring_scale(w, di).is_multiple_of(p)
                        || self.ring_scale(w, dj).is_multiple_of(p)
                })
            })
        });
        if elementwise.is_some() != idealwise.is_some() {
            return Ok(Verdict::fail_one(
                "elementwise-idealwise-disagree",
                vec![p as usize],
            ));
        }
        Ok(match elementwise {
            Some(w) => Verdict::pass_with(vec![Witness::new("s", vec![w as usize])]),
            None => Verdict::fail_one("no-uniform-s", vec![p as usize]),
        })
    }

    /// The set of ring S-prime ideals, as divisors, ascending.
    pub fn ring_s_prime_ideals(&self, s: &[u64]) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for &d in &self.divisors {
            if self.ring_s_prime(s, d)?.pass {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// Precompute the ideal arithmetic tables for a residue set, each entry
    /// derived from raw residue scans.
    pub fn ring_tables<'z>(&'z self, s: &[u64]) -> RingTables<'z> {
        RingTables::new(self, s)
    }

    /// Ring-side S-Ako check of a family of ideals (given as divisors):
    /// for all s in S and ideal triples (I, A, B):
    /// `I+sA, I+sB in F  =>  I+AB in F`.
    pub fn ring_s_ako(&self, s: &[u64], family: &[u64]) -> Verdict {
        self.ring_tables(s).s_ako(family)
    }

    /// Ring-side S-Oka check: for all s and ideal pairs (I, A):
    /// `I+sA, (I:sA) in F  =>  I in F`.
    pub fn ring_s_oka(&self, s: &[u64], family: &[u64]) -> Verdict {
        self.ring_tables(s).s_oka(family)
    }
}

/// Ideal sums, products, colons, and s-scalings of Z_n, all recovered from
/// explicit residue sets once and reused across family checks.
pub struct RingTables<'z> {
    zn: &'z ZnModel,
    s: Vec<u64>,
    /// Flat divisor-index tables.
    sum: Vec<u64>,
    prod: Vec<u64>,
    colon: Vec<u64>,
    /// `scale[si * k + dj]`: the ideal s_si * (d_dj).
    scale: Vec<u64>,
}

impl<'z> RingTables<'z> {
    fn new(zn: &'z ZnModel, s: &[u64]) -> Self {
        let divs = &zn.divisors;
        let k = divs.len();
        let mut sum = vec![0; k * k];
        let mut prod = vec![0; k * k];
        let mut colon = vec![0; k * k];
        for (i, &di) in divs.iter().enumerate() {
            for (j, &dj) in divs.iter().enumerate() {
                sum[i * k + j] = zn.ring_sum(di, dj);
                prod[i * k + j] = zn.ring_product(di, dj);
                colon[i * k + j] = zn.ring_colon(di, dj);
            }
        }
        let mut scale = vec![0; s.len() * k];
        for (si, &w) in s.iter().enumerate() {
            for (j, &dj) in divs.iter().enumerate() {
                scale[si * k + j] = zn.ring_scale(w, dj);
            }
        }
        RingTables { zn, s: s.to_vec(), sum, prod, colon, scale }
    }

    fn idx(&self, d: u64) -> usize {
        self.zn.divisors.iter().position(|&x| x == d).expect("divisor")
    }

    /// See [`ZnModel::ring_s_ako`].
    pub fn s_ako(&self, family: &[u64]) -> Verdict {
        let k = self.zn.divisors.len();
        let mut in_f = vec![false; k];
        for &d in family {
            in_f[self.idx(d)] = true;
        }
        for (si, &w) in self.s.iter().enumerate() {
            for i in 0..k {
                for a in 0..k {
                    let sa = self.idx(self.scale[si * k + a]);
                    if !in_f[self.idx(self.sum[i * k + sa])] {
                        continue;
                    }
                    for b in 0..k {
                        let sb = self.idx(self.scale[si * k + b]);
                        if !in_f[self.idx(self.sum[i * k + sb])] {
                            continue;
                        }
                        let ab = self.idx(self.prod[a * k + b]);
                        if !in_f[self.idx(self.sum[i * k + ab])] {
                            return Verdict::fail_one(
                                "ako",
                                vec![
                                    w as usize,
                                    self.zn.divisors[i] as usize,
                                    self.zn.divisors[a] as usize,
                                    self.zn.divisors[b] as usize,
                                ],
                            );
                        }
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// See [`ZnModel::ring_s_oka`].
    pub fn s_oka(&self, family: &[u64]) -> Verdict {
        let k = self.zn.divisors.len();
        let mut in_f = vec![false; k];
        for &d in family {
            in_f[self.idx(d)] = true;
        }
        for (si, &w) in self.s.iter().enumerate() {
            for i in 0..k {
                if in_f[i] {
                    continue;
                }
                for a in 0..k {
                    let sa = self.idx(self.scale[si * k + a]);
                    if in_f[self.idx(self.sum[i * k + sa])] && in_f[self.idx(self.colon[i * k + sa])]
                    {
                        return Verdict::fail_one(
                            "oka",
                            vec![
                                w as usize,
                                self.zn.divisors[i] as usize,
                                self.zn.divisors[a] as usize,
                            ],
                        );
                    }
                }
            }
        }
        Verdict::pass()
    }
}

/// The ideal lattice Id(Z_n) as a classified multiplicative lattice.
///
/// Order is reverse divisibility (`(d) <= (e)` iff `e | d`), join is the
/// ideal sum `(gcd)`, product is `(gcd(d*e, n))`.
pub fn ideal_lattice(n: u64) -> Result<MultLattice> {
    let zn = ZnModel::new(n)?;
    // Bottom-first: divisors descending, so index 0 is (0) = (n).
    let divs: Vec<u64> = zn.divisors.iter().rev().copied().collect();
    let count = divs.len();
    let labels: Vec<String> = divs.iter().map(|&d| zn.ideal_label(d)).collect();
    let mut leq = vec![false; count * count];
    for (i, &di) in divs.iter().enumerate() {
        for (j, &dj) in divs.iter().enumerate() {
            // (di) subset of (dj) iff dj | di.
            leq[i * count + j] = di % dj == 0;
        }
    }
    let lat = FiniteLattice::from_leq(labels, leq)?.named(&format!("idz{n}"));
    let idx_of = |d: u64| divs.iter().position(|&x| x == d).expect("divisor");
    let tbl = MultTable::from_fn(&lat, |a, b| {
        let p = (divs[a] as u128 * divs[b] as u128 % n as u128) as u64;
        idx_of(gcd(if p == 0 { n } else { p }, n))
    })?;
    Ok(classify_multiplication(&lat, tbl))
}

/// Divisor represented by lattice element `e` of `ideal_lattice(n)`.
pub fn divisor_of_element(m: &MultLattice, zn: &ZnModel, e: usize) -> u64 {
    let label = m.lattice().label(e);
    if label == "(0)" {
        zn.modulus()
    } else {
        label.trim_matches(|c| c == '(' || c == ')').parse().expect("divisor label")
    }
}

/// Lattice element of `ideal_lattice(n)` for divisor `d`.
pub fn element_of_divisor(m: &MultLattice, zn: &ZnModel, d: u64) -> usize {
    m.lattice().index_of(&zn.ideal_label(d)).expect("divisor element")
}

/// Build the lattice-side S from a validated residue set:
/// `S_L = {(s) | s in S}`.
pub fn lattice_set_of_residues<'a>(
    m: &'a MultLattice,
    zn: &ZnModel,
    s: &[u64],
) -> Result<MClosedSet<'a>> {
    let mut members: Vec<usize> = s
        .iter()
        .map(|&r| element_of_divisor(m, zn, gcd(r, zn.modulus())))
        .collect();
    members.sort_unstable();
    members.dedup();
    validate_mclosed(m, &members)
}

/// All multiplicatively closed divisor sets (containing 1, excluding the
/// zero ideal), each returned ascending. These are exactly the valid
/// lattice-side S for `ideal_lattice(n)`.
pub fn valid_divisor_sets(n: u64) -> Result<Vec<Vec<u64>>> {
    let zn = ZnModel::new(n)?;
    let proper: Vec<u64> = zn.divisors.iter().copied().filter(|&d| d != 1 && d != n).collect();
    if proper.len() > 20 {
        return Err(Error::LimitExceeded { detail: format!("2^{} divisor subsets", proper.len()) });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << proper.len()) {
        let mut set = vec![1u64];
        set.extend(proper.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &d)| d));
        let closed = set.iter().all(|&a| {
            set.iter().all(|&b| {
                let p = gcd(a * b, n);
                p != n && set.contains(&p)
            })
        });
        if closed {
            out.push(set);
        }
    }
    Ok(out)
}

/// The saturated residue preimage of a divisor set:
/// `{r in 1..n | gcd(r, n) in D}`. Multiplicatively closed whenever D is
/// closed under the ideal product, because
/// `gcd(r1*r2, n) = gcd(gcd(r1,n)*gcd(r2,n), n)` (check it prime by prime).
/// Every valid residue set has a closed divisor image, so enumerating
/// saturated sets covers every possible ring-side behaviour.
pub fn saturated_residues(n: u64, divisor_set: &[u64]) -> Vec<u64> {
    (1..n).filter(|&r| divisor_set.contains(&gcd(r, n))).collect()
}

/// Outcome of one ring-vs-lattice cross-check.
pub struct CrosscheckOutcome {
    pub report: TheoremReport,
    /// Number of sampled families whose verdicts were compared.
    pub families_checked: usize,
}

/// Cross-check the ring and lattice sides of Z_n for one residue set S:
///
/// 1. `residual((a),(b)) = ring_colon(a,b)` on all divisor pairs;
/// 2. lattice `spec_s` = ring S-prime ideal set;
/// 3. S-Ako/S-Oka verdicts agree on `family_samples` sampled ideal families
///    (all families, when the host is small enough to enumerate).
pub fn crosscheck(n: u64, s_residues: &[u64], family_samples: usize, seed: u64) -> Result<CrosscheckOutcome> {
    let zn = ZnModel::new(n)?;
    let s = zn.validate_residue_set(s_residues)?;
    let m = ideal_lattice(n)?;
    debug_assert_eq!(m.class(), LatticeClass::MultiplicativeLattice);
    let s_lat = lattice_set_of_residues(&m, &zn, &s)?;

    let mut report = TheoremReport::new("zn-crosscheck", m.name());
    report.preconditions.push(Precondition::passed("s-valid"));

    // 1. Residual vs ring colon.
    let mut conclusion = Verdict::pass();
    'colon: for a in 0..m.len() {
        for b in 0..m.len() {
            let da = divisor_of_element(&m, &zn, a);
            let db = divisor_of_element(&m, &zn, b);
            let ring = zn.ring_colon(da, db);
            let lat = divisor_of_element(&m, &zn, m.residual(a, b));
            if ring != lat {
                conclusion = Verdict::fail_one("colon-mismatch", vec![a, b]);
                break 'colon;
            }
        }
    }

    // 2. Spec_S agreement.
    if conclusion.pass {
        let lattice_spec: Vec<u64> = {
            let mut v: Vec<u64> = crate::sprime::spec_s(&m, &s_lat)
                .into_iter()
                .map(|e| divisor_of_element(&m, &zn, e))
                .collect();
            v.sort_unstable();
            v
        };
        let ring_spec = zn.ring_s_prime_ideals(&s)?;
        if lattice_spec != ring_spec {
            let mut elems: Vec<usize> = ring_spec.iter().map(|&d| d as usize).collect();
            elems.extend(lattice_spec.iter().map(|&d| d as usize));
            conclusion = Verdict::fail(vec![Witness::new("spec-mismatch", elems)]);
        }
    }

    // 3. Family verdict agreement on sampled families containing S_L.
    let mut families_checked = 0;
    if conclusion.pass {
        let count = m.len();
        let forced: u64 = s_lat.members().iter().map(|&e| 1u64 << e).sum();
        let mut masks: Vec<u64> = Vec::new();
        if count <= 14 && (1usize << (count - s_lat.members().len())) <= family_samples {
            for mask in 0u64..(1 << count) {
                if mask & forced == forced {
                    masks.push(mask);
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..family_samples {
                masks.push((rng.gen::<u64>() & ((1 << count) - 1)) | forced);
            }
        }
        let tables = zn.ring_tables(&s);
        'fam: for mask in masks {
            let members: Vec<usize> = (0..count).filter(|&e| mask >> e & 1 == 1).collect();
            let family_divs: Vec<u64> =
                members.iter().map(|&e| divisor_of_element(&m, &zn, e)).collect();
            let fam = crate::family::ElementFamily::new(&m, &members)?;
            let lat_ako = is_s_ako(&fam, &s_lat)?.pass;
            let lat_oka = is_s_oka(&fam, &s_lat)?.pass;
            let ring_ako = tables.s_ako(&family_divs).pass;
            let ring_oka = tables.s_oka(&family_divs).pass;
            families_checked += 1;
            if lat_ako != ring_ako || lat_oka != ring_oka {
                conclusion = Verdict::fail(vec![Witness::new("family-verdict-mismatch", members)]);
                break 'fam;
            }
        }
    }

    report.conclusion = Some(conclusion);
    Ok(CrosscheckOutcome { report, families_checked })
}
