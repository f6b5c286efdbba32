//! Command-line driver: generate, classify, and verify finite
//! multiplicative lattices from the line-oriented text format.
//!
//! Exit status: 0 when every requested check passed (or was vacuous or not
//! applicable), 1 when a theorem or predicate check failed (the witness is
//! printed), 2 on input or usage errors.

use clap::{Parser, Subcommand};
use mult_lattice::{
    build_named_family, catalog, check_s_pep, classify_multiplication, crosscheck,
    exhaustive_audit, is_s_ako, is_s_oka, is_spr_oka, run_theorem_suite, search_multiplications,
    spec_s, textfmt, validate_mclosed, AuditLimits, ElementFamily, FamilyKind, LatticeClass,
    MClosedSet, MultLattice, PepVariant, SearchLevel,
};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mlat", version, about = "Verify finite multiplicative lattices and V-lattices")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a builtin lattice in the text format
    Gen {
        #[command(subcommand)]
        which: GenWhich,
    },
    /// Classify the multiplication axioms and print structure flags
    Check { file: String },
    /// Print the S-prime elements for a multiplicatively closed set
    Sprimes {
        file: String,
        /// Comma-separated member labels, e.g. "(1),(4)"
        #[arg(long)]
        s: String,
        /// Also print the uniform witness s for each S-prime element
        #[arg(long)]
        witness: bool,
    },
    /// Run structural and S-Ako/S-Oka checks on a family
    Family {
        file: String,
        #[arg(long)]
        s: String,
        /// Explicit member labels, e.g. "(1),(2),(4)"
        #[arg(long, conflicts_with = "kind")]
        members: Option<String>,
        /// Named family: avoiding_primes, above_s, star_zero, dense,
        /// non_annihilator, essential, meet_principal, compact,
        /// product_closure
        #[arg(long)]
        kind: Option<String>,
        /// Comma-separated element labels for kinds that take parameters
        #[arg(long)]
        params: Option<String>,
    },
    /// Run the S-Prime Element Principle on one (S, F) instance
    Pep {
        file: String,
        #[arg(long)]
        s: String,
        #[arg(long, conflicts_with = "kind")]
        members: Option<String>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        params: Option<String>,
        /// ako, oka, spr-oka, or both (default: both)
        #[arg(long, default_value = "both")]
        variant: String,
    },
    /// Exhaustive principle audit over all valid S and all families
    Audit {
        file: String,
        /// Sample this many families on hosts too large to enumerate
        #[arg(long, alias = "limit")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Run the theorem registry against the lattice
    Suite { file: String },
    /// Cross-check the ring side of Z_n against the ideal lattice
    Crosscheck {
        n: u64,
        /// Comma-separated residues, e.g. "1,4"
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Count multiplications on a lattice at a given axiom level
    SearchMult {
        file: String,
        /// multiplicative or v-lattice
        #[arg(long)]
        level: String,
        /// Node budget for hosts with more than 7 elements
        #[arg(long)]
        budget: Option<u64>,
        /// Emit up to this many example tables
        #[arg(long, default_value_t = 0)]
        examples: usize,
    },
}

#[derive(Subcommand)]
enum GenWhich {
    /// The pentagon with meet as product
    N5,
    /// The ideal lattice of Z_n
    Zn { n: u64 },
    /// The six-element lattice with the trivial multiplication
    K,
    /// A k-element chain with meet as product
    Chain { k: usize },
    /// The Boolean lattice on k atoms with meet as product
    Boolean { k: u32 },
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (`mlat suite ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(failed) => {
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("mlat: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_file(path: &str) -> Result<textfmt::LatticeFile, String> {
    textfmt::parse(&read_input(path)?).map_err(|e| e.to_string())
}

fn load_classified(path: &str) -> Result<MultLattice, String> {
    let file = load_file(path)?;
    let mult = file.mult.ok_or_else(|| mult_lattice::Error::MissingMult.to_string())?;
    Ok(classify_multiplication(&file.lattice, mult))
}

fn split_labels(arg: &str) -> Vec<String> {
    arg.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}

fn parse_set<'a>(m: &'a MultLattice, arg: &str) -> Result<MClosedSet<'a>, String> {
    let labels = split_labels(arg);
    let members: Vec<usize> = labels
        .iter()
        .map(|l| m.lattice().index_of(l))
        .collect::<mult_lattice::Result<_>>()
        .map_err(|e| e.to_string())?;
    validate_mclosed(m, &members).map_err(|e| e.to_string())
}

fn parse_family<'a>(
    m: &'a MultLattice,
    s: &MClosedSet<'a>,
    members: &Option<String>,
    kind: &Option<String>,
    params: &Option<String>,
) -> Result<ElementFamily<'a>, String> {
    if let Some(members) = members {
        let labels = split_labels(members);
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        return ElementFamily::from_labels(m, &refs).map_err(|e| e.to_string());
    }
    let Some(kind) = kind else {
        return Err("need --members or --kind".to_string());
    };
    let param_elems = || -> Result<Vec<usize>, String> {
        let Some(p) = params else {
            return Err(format!("--kind {kind} needs --params"));
        };
        split_labels(p)
            .iter()
            .map(|l| m.lattice().index_of(l))
            .collect::<mult_lattice::Result<_>>()
            .map_err(|e| e.to_string())
    };
    let kind = match kind.as_str() {
        "avoiding_primes" => {
            FamilyKind::AvoidingPrimes { s_members: s.members().to_vec(), primes: param_elems()? }
        }
        "above_s" => FamilyKind::AboveS { s_members: s.members().to_vec() },
        "star_zero" => FamilyKind::StarZero,
        "dense" => FamilyKind::Dense,
        "non_annihilator" => FamilyKind::NonAnnihilator,
        "essential" => FamilyKind::Essential,
        "meet_principal" => FamilyKind::MeetPrincipal,
        "compact" => FamilyKind::Compact,
        "product_closure" => FamilyKind::ProductClosure { generators: param_elems()? },
        other => return Err(format!("unknown family kind `{other}`")),
    };
    build_named_family(m, &kind).map_err(|e| e.to_string())
}

/// Runs a command; Ok(true) means some check failed (exit 1).
fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Gen { which } => {
            let m = match which {
                GenWhich::N5 => catalog::n5_meet(),
                GenWhich::Zn { n } => mult_lattice::ideal_lattice(n).map_err(|e| e.to_string())?,
                GenWhich::K => catalog::figure3_k(),
                GenWhich::Chain { k } => catalog::chain(k).map_err(|e| e.to_string())?,
                GenWhich::Boolean { k } => catalog::boolean(k).map_err(|e| e.to_string())?,
            };
            print!("{}", textfmt::serialize(&m));
            Ok(false)
        }
        Cmd::Check { file } => {
            let m = load_classified(&file)?;
            match m.violation() {
                None => println!("class: {}", m.class().as_str()),
                Some(v) => {
                    println!("class: {}; violation: {}", m.class().as_str(), v.render(m.lattice()))
                }
            }
            if m.class() != LatticeClass::Invalid {
                let flags = m.class_flags();
                println!("modular: {}", m.lattice().is_modular().pass);
                println!("reduced: {}", m.is_reduced().pass);
                println!("c-lattice: {}", flags.c_lattice);
                println!("r-lattice: {}", flags.r_lattice);
            }
            Ok(false)
        }
        Cmd::Sprimes { file, s, witness } => {
            let m = load_classified(&file)?;
            require_valid_class(&m)?;
            let set = parse_set(&m, &s)?;
            let spectrum = spec_s(&m, &set);
            let labels: Vec<&str> = spectrum.iter().map(|&e| m.lattice().label(e)).collect();
            println!("{}", labels.join(" "));
            if witness {
                for &p in &spectrum {
                    let v = mult_lattice::is_sprime(&m, &set, p);
                    println!(
                        "{}\t{}",
                        m.lattice().label(p),
                        v.render_witnesses(m.lattice())
                    );
                }
            }
            Ok(false)
        }
        Cmd::Family { file, s, members, kind, params } => {
            let m = load_classified(&file)?;
            require_valid_class(&m)?;
            let set = parse_set(&m, &s)?;
            let f = parse_family(&m, &set, &members, &kind, &params)?;
            let lat = m.lattice();
            let flags = f.structural_flags().map_err(|e| e.to_string())?;
            let mut failed = false;
            let render = |w: &Option<Vec<usize>>| -> String {
                match w {
                    None => String::new(),
                    Some(elems) => {
                        let labels: Vec<&str> = elems.iter().map(|&e| lat.label(e)).collect();
                        format!("; witness: {}", labels.join(","))
                    }
                }
            };
            println!("members: {}", f.labels().join(" "));
            for (name, flag) in [
                ("semi-filter", &flags.semi_filter),
                ("filter", &flags.filter),
                ("m-closed", &flags.m_closed),
            ] {
                println!("{name}: {}{}", flag.holds, render(&flag.witness));
                failed |= !flag.holds;
            }
            let ako = is_s_ako(&f, &set).map_err(|e| e.to_string())?;
            let oka = is_s_oka(&f, &set).map_err(|e| e.to_string())?;
            for (name, v) in [("s-ako", &ako), ("s-oka", &oka)] {
                if v.pass {
                    println!("{name}: pass");
                } else {
                    println!("{name}: fail; witness: {}", v.render_witnesses(lat));
                    failed = true;
                }
            }
            if m.class_flags().r_lattice {
                match is_spr_oka(&f, &set) {
                    Ok(v) if v.pass => println!("spr-oka: pass"),
                    Ok(v) => {
                        println!("spr-oka: fail; witness: {}", v.render_witnesses(lat));
                        failed = true;
                    }
                    Err(e) => println!("spr-oka: skipped ({e})"),
                }
            }
            Ok(failed)
        }
        Cmd::Pep { file, s, members, kind, params, variant } => {
            let m = load_classified(&file)?;
            require_valid_class(&m)?;
            let set = parse_set(&m, &s)?;
            let f = parse_family(&m, &set, &members, &kind, &params)?;
            let variants: Vec<PepVariant> = match variant.as_str() {
                "ako" => vec![PepVariant::Ako],
                "oka" => vec![PepVariant::Oka],
                "spr-oka" => vec![PepVariant::SprOka],
                "both" => vec![PepVariant::Ako, PepVariant::Oka],
                other => return Err(format!("unknown variant `{other}`")),
            };
            let mut failed = false;
            for v in variants {
                let report = check_s_pep(&f, &set, v).map_err(|e| e.to_string())?;
                println!("{}", report.render_tsv(m.lattice()));
                failed |= report.is_fail();
            }
            Ok(failed)
        }
        Cmd::Audit { file, sample, seed } => {
            let m = load_classified(&file)?;
            let limits = AuditLimits { sample, seed, ..AuditLimits::default() };
            let outcome = exhaustive_audit(&m, limits).map_err(|e| e.to_string())?;
            for report in &outcome.reports {
                println!("{}", report.render_tsv(m.lattice()));
            }
            println!(
                "audit: {} applicable, {} vacuous, {} failures",
                outcome.applicable, outcome.vacuous, outcome.failures
            );
            Ok(outcome.failures > 0)
        }
        Cmd::Suite { file } => {
            let m = load_classified(&file)?;
            let mut failed = false;
            for report in run_theorem_suite(&m) {
                println!("{}", report.render_tsv(m.lattice()));
                failed |= report.is_fail();
            }
            Ok(failed)
        }
        Cmd::Crosscheck { n, s, samples, seed } => {
            let residues: Vec<u64> = split_labels(&s)
                .iter()
                .map(|t| t.parse::<u64>().map_err(|e| format!("bad residue `{t}`: {e}")))
                .collect::<Result<_, _>>()?;
            let outcome = crosscheck(n, &residues, samples, seed).map_err(|e| e.to_string())?;
            let m = mult_lattice::ideal_lattice(n).map_err(|e| e.to_string())?;
            println!("{}", outcome.report.render_tsv(m.lattice()));
            println!("families-checked: {}", outcome.families_checked);
            Ok(outcome.report.is_fail())
        }
        Cmd::SearchMult { file, level, budget, examples } => {
            let lattice_file = load_file(&file)?;
            let level = match level.as_str() {
                "multiplicative" => SearchLevel::Multiplicative,
                "v-lattice" | "v_lattice" => SearchLevel::VLattice,
                other => return Err(format!("unknown level `{other}`")),
            };
            let result = search_multiplications(&lattice_file.lattice, level, budget, examples)
                .map_err(|e| e.to_string())?;
            if result.complete {
                println!("count: {}", result.count);
            } else {
                println!("count: >= {} (incomplete)", result.count);
            }
            for t in &result.examples {
                print!("{}", textfmt::serialize_parts(&lattice_file.lattice, Some(t), None));
            }
            Ok(false)
        }
    }
}

fn require_valid_class(m: &MultLattice) -> Result<(), String> {
    if m.class() == LatticeClass::Invalid {
        let detail = m
            .violation()
            .map(|v| v.render(m.lattice()))
            .unwrap_or_default();
        return Err(format!("multiplication table is invalid: {detail}"));
    }
    Ok(())
}
