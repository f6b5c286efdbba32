//! Finite bounded lattices.
//!
//! Elements are canonical indices `0..n`; labels exist for I/O only. The
//! order relation is a full `n x n` boolean matrix and the join/meet tables
//! are precomputed at construction, so the exhaustive verification kernels
//! pay O(1) per inner-loop lookup.
//!
//! A finite bounded lattice is automatically complete, so completeness is a
//! documented fact here, not a runtime check: joins and meets of arbitrary
//! subsets exist, with the empty join equal to bottom and the empty meet
//! equal to top.

use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// Hard cap on element count; keeps the precomputed tables small.
pub const MAX_ELEMENTS: usize = 512;

/// A finite bounded lattice over elements `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    name: String,
    labels: Vec<String>,
    n: usize,
    /// Row-major `n*n`: `leq[a*n + b]` iff `a <= b`.
    leq: Vec<bool>,
    join_tbl: Vec<usize>,
    meet_tbl: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Build from labels and a cover relation (Hasse-diagram edges).
    ///
    /// The order is the reflexive-transitive closure of `covers`. Fails with
    /// `NotAPoset` on a cycle, `NotALattice` if some pair lacks a unique
    /// least upper bound or greatest lower bound (the lexicographically
    /// first offending pair is reported), and `NoBounds` for an empty
    /// element list.
    pub fn from_covers(labels: &[&str], covers: &[(&str, &str)]) -> Result<FiniteLattice> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let n = labels.len();
        if n == 0 {
            return Err(Error::NoBounds);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements { n, max: MAX_ELEMENTS });
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let index = |name: &str| -> Result<usize> {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownLabel(name.to_string()))
        };

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(lo, hi) in covers {
            let (i, j) = (index(lo)?, index(hi)?);
            leq[i * n + j] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        // A cycle shows up as a failure of antisymmetry.
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::NotAPoset { a: labels[a].clone(), b: labels[b].clone() });
                }
            }
        }
        Self::from_leq_impl(String::new(), labels, leq)
    }

    /// Build from an explicit order matrix (`leq[a*n+b]` iff `a <= b`).
    ///
    /// Validates that the relation is a partial order and that every pair
    /// has a unique join and meet.
    pub fn from_leq(labels: Vec<String>, leq: Vec<bool>) -> Result<FiniteLattice> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NoBounds);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements { n, max: MAX_ELEMENTS });
        }
        if leq.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: leq.len() });
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for a in 0..n {
            if !leq[a * n + a] {
                return Err(Error::NotAPoset { a: labels[a].clone(), b: labels[a].clone() });
            }
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::NotAPoset { a: labels[a].clone(), b: labels[b].clone() });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if leq[a * n + b] && leq[b * n + c] && !leq[a * n + c] {
                        return Err(Error::NotAPoset { a: labels[a].clone(), b: labels[c].clone() });
                    }
                }
            }
        }
        Self::from_leq_impl(String::new(), labels, leq)
    }

    fn from_leq_impl(name: String, labels: Vec<String>, leq: Vec<bool>) -> Result<FiniteLattice> {
        let n = labels.len();
        let mut join_tbl = vec![0usize; n * n];
        let mut meet_tbl = vec![0usize; n * n];
        for a in 0..n {
            for b in a..n {
                let j = unique_bound(&leq, n, a, b, true).ok_or_else(|| Error::NotALattice {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    bound: "join",
                })?;
                let m = unique_bound(&leq, n, a, b, false).ok_or_else(|| Error::NotALattice {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    bound: "meet",
                })?;
                join_tbl[a * n + b] = j;
                join_tbl[b * n + a] = j;
                meet_tbl[a * n + b] = m;
                meet_tbl[b * n + a] = m;
            }
        }
        // Fold joins/meets to locate the bounds; existence is guaranteed once
        // all pairwise bounds exist.
        let mut top = 0;
        let mut bottom = 0;
        for x in 1..n {
            top = join_tbl[top * n + x];
            bottom = meet_tbl[bottom * n + x];
        }
        Ok(FiniteLattice { name, labels, n, leq, join_tbl, meet_tbl, bottom, top })
    }

    /// Attach an I/O name (used as the host id in reports and files).
    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        if self.name.is_empty() { "lattice" } else { &self.name }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_tbl[a * self.n + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_tbl[a * self.n + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Least upper bound of a set; the empty join is bottom.
    pub fn join_set<I: IntoIterator<Item = usize>>(&self, elems: I) -> usize {
        elems.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Greatest lower bound of a set; the empty meet is top.
    pub fn meet_set<I: IntoIterator<Item = usize>>(&self, elems: I) -> usize {
        elems.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Members of `set` with nothing strictly above them inside `set`.
    pub fn maximal_members(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| self.lt(x, y)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Members of `set` with nothing strictly below them inside `set`.
    pub fn minimal_members(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| self.lt(y, x)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Modularity: for all `a <= c` and all `b`, `a v (b ^ c) = (a v b) ^ c`.
    ///
    /// The scan runs `(x, y, z)` in ascending index order testing the law
    /// with `x <= z`; the first violating triple is the witness.
    pub fn is_modular(&self) -> Verdict {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.leq(x, z) && self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return Verdict::fail_one("modularity", vec![x, y, z]);
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// True iff `b` covers `a` (i.e. `a < b` with nothing in between).
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && !(0..self.n).any(|m| self.lt(a, m) && self.lt(m, b))
    }

    /// All cover edges `(lower, upper)` in ascending lexicographic index order.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.covers(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The up-set of `a`: all `x >= a`.
    pub fn up_set(&self, a: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.leq(a, x)).collect()
    }
}

/// Unique least upper bound (or greatest lower bound) of `{a, b}`, if any.
fn unique_bound(leq: &[bool], n: usize, a: usize, b: usize, upper: bool) -> Option<usize> {
    let le = |x: usize, y: usize| leq[x * n + y];
    let is_bound = |x: usize| {
        if upper {
            le(a, x) && le(b, x)
        } else {
            le(x, a) && le(x, b)
        }
    };
    let mut best: Option<usize> = None;
    for x in 0..n {
        if !is_bound(x) {
            continue;
        }
        best = match best {
            None => Some(x),
            // Keep the smaller upper bound (larger lower bound) when
            // comparable; the final dominance pass settles the rest.
            Some(c) => {
                if upper {
                    if le(x, c) { Some(x) } else { Some(c) }
                } else if le(c, x) {
                    Some(x)
                } else {
                    Some(c)
                }
            }
        };
    }
    let c = best?;
    for x in 0..n {
        if is_bound(x) {
            let ok = if upper { le(c, x) } else { le(x, c) };
            if !ok {
                return None;
            }
        }
    }
    Some(c)
}
