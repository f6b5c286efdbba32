//! Brute-force search over all multiplications on a lattice.
//!
//! Tables are symmetric with the row of 1 forced to the identity, so the
//! search space is the upper triangle over the non-top elements. Cells are
//! filled in row-major order; every candidate value is pruned against the
//! meet bound (`a*b <= a ^ b`, an axiom at the V level and a consequence at
//! the multiplicative level), partial monotonicity, and associativity on
//! the closed part of the table. Each surviving table is re-checked via
//! [`classify_multiplication`]; the searcher and the classifier are
//! independent implementations and must agree.

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::mult::{classify_multiplication, LatticeClass, MultTable};

/// Axiom level a searched table must reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchLevel {
    /// Full multiplicative lattice axioms.
    Multiplicative,
    /// V-lattice axioms (multiplicative tables qualify too).
    VLattice,
}

impl SearchLevel {
    pub fn admits(&self, class: LatticeClass) -> bool {
        match self {
            SearchLevel::Multiplicative => class == LatticeClass::MultiplicativeLattice,
            SearchLevel::VLattice => matches!(
                class,
                LatticeClass::MultiplicativeLattice | LatticeClass::VLatticeOnly
            ),
        }
    }
}

#[derive(Debug)]
pub struct SearchResult {
    /// Number of qualifying tables found; exact when `complete`.
    pub count: u64,
    pub complete: bool,
    /// Up to the requested number of qualifying tables. The trivial
    /// multiplication is seeded first when it qualifies.
    pub examples: Vec<MultTable>,
    /// Candidate assignments explored.
    pub nodes: u64,
}

/// Exhaustive bound: beyond this many elements a budget is required.
pub const EXHAUSTIVE_SEARCH_MAX: usize = 7;

struct Searcher<'a> {
    lat: &'a FiniteLattice,
    level: SearchLevel,
    cells: Vec<(usize, usize)>,
    tbl: Vec<usize>,
    assigned: Vec<bool>,
    budget: Option<u64>,
    nodes: u64,
    count: u64,
    complete: bool,
    max_examples: usize,
    examples: Vec<MultTable>,
}

/// Count (and sample) the symmetric multiplications with identity 1 on
/// `lat` that satisfy `level`. Lattices with more than
/// [`EXHAUSTIVE_SEARCH_MAX`] elements require a node `budget`; when the
/// budget runs out the result is flagged incomplete and `count` is a lower
/// bound.
pub fn search_multiplications(
    lat: &FiniteLattice,
    level: SearchLevel,
    budget: Option<u64>,
    max_examples: usize,
) -> Result<SearchResult> {
    let n = lat.len();
    if n > EXHAUSTIVE_SEARCH_MAX && budget.is_none() {
        return Err(Error::BudgetRequired { n, max: EXHAUSTIVE_SEARCH_MAX });
    }
    let top = lat.top();
    let mut cells = Vec::new();
    for a in 0..n {
        for b in a..n {
            if a != top && b != top {
                cells.push((a, b));
            }
        }
    }
    let mut tbl = vec![usize::MAX; n * n];
    let mut assigned = vec![false; n * n];
    for x in 0..n {
        tbl[x * n + top] = x;
        tbl[top * n + x] = x;
        assigned[x * n + top] = true;
        assigned[top * n + x] = true;
    }

    let mut searcher = Searcher {
        lat,
        level,
        cells,
        tbl,
        assigned,
        budget,
        nodes: 0,
        count: 0,
        complete: true,
        max_examples,
        examples: Vec::new(),
    };
    // Seed the trivial multiplication as a fast non-emptiness certificate.
    if max_examples > 0 {
        let zero = MultTable::zero_of(lat);
        if level.admits(classify_multiplication(lat, zero.clone()).class()) {
            searcher.examples.push(zero);
        }
    }
    searcher.fill(0);
    Ok(SearchResult {
        count: searcher.count,
        complete: searcher.complete,
        examples: searcher.examples,
        nodes: searcher.nodes,
    })
}

impl Searcher<'_> {
    fn set(&mut self, a: usize, b: usize, v: usize) {
        let n = self.lat.len();
        self.tbl[a * n + b] = v;
        self.tbl[b * n + a] = v;
        self.assigned[a * n + b] = true;
        self.assigned[b * n + a] = true;
    }

    fn unset(&mut self, a: usize, b: usize) {
        let n = self.lat.len();
        self.tbl[a * n + b] = usize::MAX;
        self.tbl[b * n + a] = usize::MAX;
        self.assigned[a * n + b] = false;
        self.assigned[b * n + a] = false;
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.lat.len();
        if self.assigned[a * n + b] { Some(self.tbl[a * n + b]) } else { None }
    }

    /// Monotonicity on the assigned part: x <= y forces xz <= yz.
    fn monotone_ok(&self) -> bool {
        let n = self.lat.len();
        for x in 0..n {
            for y in 0..n {
                if !self.lat.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if let (Some(p), Some(q)) = (self.get(x, z), self.get(y, z)) {
                        if !self.lat.leq(p, q) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Associativity on the closed part: both routes assigned must agree.
    fn assoc_ok(&self) -> bool {
        let n = self.lat.len();
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.get(a, b) else { continue };
                for c in 0..n {
                    if let (Some(abc), Some(bc)) = (self.get(ab, c), self.get(b, c)) {
                        if let Some(a_bc) = self.get(a, bc) {
                            if abc != a_bc {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Leaf check for the extra multiplicative axioms.
    fn multiplicative_ok(&self) -> bool {
        let n = self.lat.len();
        let bot = self.lat.bottom();
        for a in 0..n {
            if self.tbl[a * n + bot] != bot {
                return false;
            }
            for x in 0..n {
                for y in 0..n {
                    let j = self.lat.join(x, y);
                    if self.tbl[a * n + j]
                        != self.lat.join(self.tbl[a * n + x], self.tbl[a * n + y])
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, k: usize) {
        if !self.complete {
            return;
        }
        if k == self.cells.len() {
            let qualifies = match self.level {
                SearchLevel::VLattice => true,
                SearchLevel::Multiplicative => self.multiplicative_ok(),
            };
            if qualifies {
                self.count += 1;
                if self.examples.len() < self.max_examples {
                    let table = MultTable::new(self.lat, self.tbl.clone())
                        .expect("search tables are symmetric");
                    if !self.examples.contains(&table) {
                        self.examples.push(table);
                    }
                }
            }
            return;
        }
        let (a, b) = self.cells[k];
        let bound = self.lat.meet(a, b);
        for v in 0..self.lat.len() {
            if !self.lat.leq(v, bound) {
                continue;
            }
            if let Some(limit) = self.budget {
                if self.nodes >= limit {
                    self.complete = false;
                    return;
                }
            }
            self.nodes += 1;
            self.set(a, b, v);
            if self.monotone_ok() && self.assoc_ok() {
                self.fill(k + 1);
            }
            self.unset(a, b);
            if !self.complete {
                return;
            }
        }
    }
}
