//! The line-oriented text format for lattices.
//!
//! ```text
//! # comments run to end of line
//! lattice idz12
//! elements: (0) (6) (4) (3) (2) (1)
//! covers:
//! (0) < (6)
//! (0) < (4)
//! ...
//! mult:
//! (0) * (0) = (0)
//! ...
//! s: (1) (4)
//! ```
//!
//! The `mult:` section lists unordered pairs; pairs left unlisted default to
//! the meet only when a `mult-default: meet` header is present, otherwise an
//! incomplete table is a parse error. A file may omit multiplication
//! entirely (e.g. as input to the multiplication search). Serialization is
//! canonical, so emit-then-parse reproduces an identical structure.

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::mult::{MultLattice, MultTable};

/// A parsed lattice file.
#[derive(Debug)]
pub struct LatticeFile {
    pub name: String,
    pub lattice: FiniteLattice,
    pub mult: Option<MultTable>,
    /// Members of the `s:` line, if present (labels, unvalidated).
    pub s_labels: Option<Vec<String>>,
}

pub fn parse(text: &str) -> Result<LatticeFile> {
    #[derive(PartialEq)]
    enum Section {
        Top,
        Covers,
        Mult,
    }
    let mut name: Option<String> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut mult_entries: Vec<(String, String, String)> = Vec::new();
    let mut saw_mult_section = false;
    let mut mult_default_meet = false;
    let mut s_labels: Option<Vec<String>> = None;
    let mut section = Section::Top;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
        if let Some(rest) = content.strip_prefix("lattice ") {
            if name.is_some() {
                return Err(err("duplicate `lattice` header"));
            }
            name = Some(rest.trim().to_string());
            section = Section::Top;
            continue;
        }
        if let Some(rest) = content.strip_prefix("elements:") {
            if !labels.is_empty() {
                return Err(err("duplicate `elements:` line"));
            }
            labels = rest.split_whitespace().map(str::to_string).collect();
            if labels.is_empty() {
                return Err(err("`elements:` line lists no elements"));
            }
            section = Section::Top;
            continue;
        }
        if content == "covers:" {
            section = Section::Covers;
            continue;
        }
        if content == "mult:" {
            saw_mult_section = true;
            section = Section::Mult;
            continue;
        }
        if let Some(rest) = content.strip_prefix("mult-default:") {
            if rest.trim() != "meet" {
                return Err(err("only `mult-default: meet` is supported"));
            }
            mult_default_meet = true;
            continue;
        }
        if let Some(rest) = content.strip_prefix("s:") {
            s_labels = Some(rest.split_whitespace().map(str::to_string).collect());
            section = Section::Top;
            continue;
        }
        match section {
            Section::Covers => {
                let toks: Vec<&str> = content.split_whitespace().collect();
                if toks.len() != 3 || toks[1] != "<" {
                    return Err(err("expected `a < b`"));
                }
                covers.push((toks[0].to_string(), toks[2].to_string()));
            }
            Section::Mult => {
                let toks: Vec<&str> = content.split_whitespace().collect();
                if toks.len() != 5 || toks[1] != "*" || toks[3] != "=" {
                    return Err(err("expected `a * b = c`"));
                }
                mult_entries.push((toks[0].to_string(), toks[2].to_string(), toks[4].to_string()));
            }
            Section::Top => return Err(err("unexpected line outside any section")),
        }
    }

    let name = name.ok_or(Error::Parse { line: 1, msg: "missing `lattice <name>` header".into() })?;
    if labels.is_empty() {
        return Err(Error::Parse { line: 1, msg: "missing `elements:` line".into() });
    }
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let cover_refs: Vec<(&str, &str)> =
        covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let lattice = FiniteLattice::from_covers(&label_refs, &cover_refs)?.named(&name);

    let n = lattice.len();
    let mult = if saw_mult_section || mult_default_meet {
        let mut tbl = vec![usize::MAX; n * n];
        for (a, b, c) in &mult_entries {
            let (i, j, v) = (lattice.index_of(a)?, lattice.index_of(b)?, lattice.index_of(c)?);
            for (x, y) in [(i, j), (j, i)] {
                if tbl[x * n + y] != usize::MAX && tbl[x * n + y] != v {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("conflicting products for `{a} * {b}`"),
                    });
                }
                tbl[x * n + y] = v;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if tbl[a * n + b] == usize::MAX {
                    if mult_default_meet {
                        tbl[a * n + b] = lattice.meet(a, b);
                    } else {
                        return Err(Error::Parse {
                            line: 0,
                            msg: format!(
                                "missing product `{} * {}` (no `mult-default: meet` header)",
                                lattice.label(a),
                                lattice.label(b)
                            ),
                        });
                    }
                }
            }
        }
        Some(MultTable::new(&lattice, tbl)?)
    } else {
        None
    };

    Ok(LatticeFile { name, lattice, mult, s_labels })
}

/// Canonical serialization: covers in ascending (lower, upper) index order,
/// then the full multiplication over the upper triangle.
pub fn serialize(m: &MultLattice) -> String {
    serialize_parts(m.lattice(), Some(m.table()), None)
}

pub fn serialize_parts(
    lat: &FiniteLattice,
    mult: Option<&MultTable>,
    s_members: Option<&[usize]>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("lattice {}\n", lat.name()));
    out.push_str(&format!("elements: {}\n", lat.labels().join(" ")));
    out.push_str("covers:\n");
    for (a, b) in lat.cover_edges() {
        out.push_str(&format!("{} < {}\n", lat.label(a), lat.label(b)));
    }
    if let Some(t) = mult {
        out.push_str("mult:\n");
        for a in 0..lat.len() {
            for b in a..lat.len() {
                out.push_str(&format!(
                    "{} * {} = {}\n",
                    lat.label(a),
                    lat.label(b),
                    lat.label(t.mul(a, b))
                ));
            }
        }
    }
    if let Some(s) = s_members {
        let labels: Vec<&str> = s.iter().map(|&e| lat.label(e)).collect();
        out.push_str(&format!("s: {}\n", labels.join(" ")));
    }
    out
}
