//! `superstar`: JSON on stdout, diagnostics on stderr.
//!
//! Exit codes: 1 parse error, 2 precondition, 3 cap exceeded, 4 verification failure.

mod verify;

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superstar::borel::{self, Borel};
use superstar::chars::{
    generic_restriction_decomposition, penkov_decomposition_q, twisted_verma_character_equal, verma_equivariance,
    verma_restriction_weights, Pairing,
};
use superstar::generic::{self, GenericTester, DEFAULT_GAMMA_CAP};
use superstar::kl::{kl_polynomials, LeftOrder, DEFAULT_KL_CAP};
use superstar::primposet::{
    extra_inclusions_singly_atypical, generic_poset, small_rank_poset, star_inclusion_edges, GenericMode, InclusionGraph,
};
use superstar::rootdata::{parse_linear, root_literal};
use superstar::star::{alpha_finite, orbit, AnyStar, Criterion, StarAction, StarMap};
use superstar::typicality;
use superstar::weyl::{chamber, is_open_chamber, rho0, IntegralData, WeylGroup, DEFAULT_WEYL_CAP};
use superstar::{Error, Family, Kind, RootSystem, Weight};

#[derive(Parser)]
#[command(name = "superstar", version, about = "Star actions, odd reflections and primitive ideal posets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Fam {
    /// gl:m,n | sl:m,n | osp:m,2n | q:n
    #[arg(long)]
    family: String,
}

#[derive(Args, Clone)]
struct BorelSel {
    /// Positive odd roots, comma separated (default: distinguished Borel)
    #[arg(long)]
    odd_positive: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Even and odd roots, simple systems
    Roots {
        #[command(flatten)]
        fam: Fam,
    },
    /// A Borel subalgebra, or all of them with --enumerate
    Borel {
        #[command(flatten)]
        fam: Fam,
        #[command(flatten)]
        sel: BorelSel,
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Reflect a Borel in an isotropic simple root
    OddReflect {
        #[command(flatten)]
        fam: Fam,
        #[command(flatten)]
        sel: BorelSel,
        #[arg(long)]
        gamma: String,
    },
    /// Highest weight of L(λ) after a path of odd reflections
    Track {
        #[command(flatten)]
        fam: Fam,
        #[command(flatten)]
        sel: BorelSel,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Odd roots, comma separated, applied left to right
        #[arg(long, allow_hyphen_values = true)]
        path: String,
    },
    /// ρ0, ρ1 and ρ for a Borel
    Rho {
        #[command(flatten)]
        fam: Fam,
        #[command(flatten)]
        sel: BorelSel,
    },
    /// s_α ∗ λ, or a word acting on λ
    Star {
        #[command(flatten)]
        fam: Fam,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// trivial | anti | example71 | osp-prime | osp-star (ignored for q)
        #[arg(long)]
        map: Option<String>,
        /// Even simple root, as a literal or an index
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Comma separated generator indices, rightmost applied first
        #[arg(long)]
        word: Option<String>,
    },
    /// The star orbit of λ
    StarOrbit {
        #[command(flatten)]
        fam: Fam,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        max_vertices: usize,
        #[arg(long)]
        dot: Option<String>,
    },
    /// Atypical roots and typicality
    Typicality {
        #[command(flatten)]
        fam: Fam,
        #[command(flatten)]
        sel: BorelSel,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Allow the approximate q(n) strong typicality test
        #[arg(long)]
        allow_approx: bool,
    },
    /// Weak genericity, genericity and orbit maximality
    Generic {
        #[command(flatten)]
        fam: Fam,
        #[command(flatten)]
        sel: BorelSel,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = DEFAULT_GAMMA_CAP)]
        gamma_cap: usize,
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: usize,
    },
    /// Sign vector of λ + ρ0 on the positive even roots
    Chamber {
        #[command(flatten)]
        fam: Fam,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Kazhdan–Lusztig polynomials and left cells of W, or of W_λ with --weight
    Kl {
        #[command(flatten)]
        fam: Fam,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long, default_value_t = DEFAULT_KL_CAP)]
        cap: usize,
    },
    /// Inclusions between primitive ideals
    PrimPoset {
        #[command(flatten)]
        fam: Fam,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum)]
        mode: PosetMode,
        /// For --mode generic with q(n)
        #[arg(long, value_enum, default_value_t = GenMode::Proved)]
        generic_mode: GenMode,
        /// For --mode star: comma separated map names (default: built-ins)
        #[arg(long)]
        maps: Option<String>,
        #[arg(long, default_value_t = 256)]
        max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: usize,
        /// Replace edges by their transitive closure
        #[arg(long)]
        closure: bool,
        #[arg(long)]
        dot: Option<String>,
    },
    /// Verma restriction characters
    Chars {
        #[command(flatten)]
        fam: Fam,
        #[command(flatten)]
        sel: BorelSel,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum)]
        op: CharOp,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, value_enum, default_value_t = PairingArg::Bar)]
        pairing: PairingArg,
        #[arg(long, default_value_t = DEFAULT_GAMMA_CAP)]
        gamma_cap: usize,
    },
    /// Run a named property suite
    Verify {
        /// involution | prop7.2 | thm7.3 | lemma8.1 | charverma | smallrank
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random samples per family
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetMode {
    SmallRank,
    Star,
    Generic,
    SinglyAtypical,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenMode {
    Proved,
    Conjectural,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharOp {
    Restriction,
    Twisted,
    Equivariance,
    GenericRestriction,
    Penkov,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairingArg {
    Bar,
    Plain,
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidFamily(_)
        | Error::Parse(_)
        | Error::DimensionMismatch { .. }
        | Error::TraceConstraint
        | Error::NotARoot(_) => 1,
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn system(f: &Fam) -> Result<RootSystem, Error> {
    Ok(RootSystem::new(f.family.parse::<Family>()?))
}

/// "a,b|c" or a linear literal such as "e1-d1"; sl weights may be given in gl
/// coordinates and are normalised.
fn weight(rs: &RootSystem, s: &str) -> Result<Weight, Error> {
    let w = if s.contains('e') || s.contains('d') { parse_linear(s, rs.dims())? } else { Weight::parse_literal(s)? };
    if w.dims() != rs.dims() {
        rs.family.validate(&w)?;
    }
    Ok(rs.family.sl_normalize(&w))
}

fn roots(rs: &RootSystem, s: &str) -> Result<Vec<Weight>, Error> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| rs.parse_root(t)).collect()
}

fn borel_of(rs: &RootSystem, sel: &BorelSel) -> Result<Borel, Error> {
    match &sel.odd_positive {
        None => Ok(Borel::distinguished(rs)),
        Some(s) => Borel::from_odd_positive(rs, roots(rs, s)?),
    }
}

fn borel_json(b: &Borel) -> Value {
    json!({
        "simple": b.simple_literals(),
        "odd_positive": b.odd_positive.iter().map(root_literal).collect::<Vec<_>>(),
    })
}

fn weight_json(w: &Weight) -> Value {
    json!({ "literal": w.to_string(), "weight": w, "pretty": w.pretty() })
}

fn action(rs: &RootSystem, map: &Option<String>) -> Result<AnyStar, Error> {
    let default = if rs.family.kind == Kind::Osp { "osp-star" } else { "trivial" };
    AnyStar::for_family(rs, map.as_deref().unwrap_or(default))
}

fn word_key(w: &WeylGroup, e: usize) -> String {
    let word = w.word(e);
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|g| format!("s{}", g + 1)).collect()
    }
}

fn write_dot(path: &Option<String>, dot: String) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, dot).map_err(|e| Failure::Io(format!("cannot write {p}: {e}")))?;
    }
    Ok(())
}

fn graph_json(g: &InclusionGraph) -> Value {
    let h = g.hasse();
    json!({
        "vertices": g.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "edges": g.edges,
        "skipped": g.skipped.iter().map(|(w, r)| json!({"weight": w.to_string(), "reason": r})).collect::<Vec<_>>(),
        "relation": g.relation().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
        "consistent": g.is_consistent(),
        "hasse": h,
    })
}

fn run(cmd: Cmd) -> Result<Value, Failure> {
    Ok(match cmd {
        Cmd::Roots { fam } => {
            let rs = system(&fam)?;
            let b = Borel::distinguished(&rs);
            json!({
                "family": rs.family,
                "roots": rs.roots(),
                "even_positive": rs.even_positive.iter().map(root_literal).collect::<Vec<_>>(),
                "even_simple": rs.even_simple.iter().map(root_literal).collect::<Vec<_>>(),
                "distinguished": borel_json(&b),
            })
        }
        Cmd::Borel { fam, sel, enumerate, cap } => {
            let rs = system(&fam)?;
            if enumerate {
                let all = borel::enumerate(&rs, cap)?;
                json!({ "count": all.len(), "borels": all.iter().map(borel_json).collect::<Vec<_>>() })
            } else {
                borel_json(&borel_of(&rs, &sel)?)
            }
        }
        Cmd::OddReflect { fam, sel, gamma } => {
            let rs = system(&fam)?;
            let b = borel_of(&rs, &sel)?;
            let g = rs.parse_root(&gamma)?;
            json!({ "from": borel_json(&b), "gamma": root_literal(&g), "to": borel_json(&b.odd_reflect(&rs, &g)?) })
        }
        Cmd::Track { fam, sel, weight: w, path } => {
            let rs = system(&fam)?;
            let b = borel_of(&rs, &sel)?;
            let l = weight(&rs, &w)?;
            let p = roots(&rs, &path)?;
            let end = borel::follow(&rs, &b, &p)?;
            json!({ "input": weight_json(&l), "result": weight_json(&borel::track(&rs, &b, &p, &l)?), "borel": borel_json(&end) })
        }
        Cmd::Rho { fam, sel } => {
            let rs = system(&fam)?;
            json!(borel_of(&rs, &sel)?.rho(&rs))
        }
        Cmd::Star { fam, weight: w, map, alpha, word } => {
            let rs = system(&fam)?;
            let l = weight(&rs, &w)?;
            let act = action(&rs, &map)?;
            let word: Vec<usize> = match (alpha, word) {
                (Some(a), None) => vec![rs.parse_even_simple(&a)?],
                (None, Some(w)) => w
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| rs.parse_even_simple(t))
                    .collect::<Result<_, _>>()?,
                _ => return Err(Error::Parse("give exactly one of --alpha or --word".into()).into()),
            };
            let r = act.apply_word(&word, &l)?;
            json!({ "family": rs.family, "input": weight_json(&l), "word": word, "result": weight_json(&r) })
        }
        Cmd::StarOrbit { fam, weight: w, map, max_vertices, dot } => {
            let rs = system(&fam)?;
            let l = weight(&rs, &w)?;
            let o = orbit(&action(&rs, &map)?, &l, max_vertices)?;
            write_dot(&dot, o.to_dot(&rs))?;
            json!({
                "base": o.base.to_string(),
                "vertices": o.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "edges": o.edges,
                "truncated": o.truncated,
            })
        }
        Cmd::Typicality { fam, sel, weight: w, allow_approx } => {
            let rs = system(&fam)?;
            let l = weight(&rs, &w)?;
            json!(typicality::report(&rs, &borel_of(&rs, &sel)?, &l, allow_approx))
        }
        Cmd::Generic { fam, sel, weight: w, gamma_cap, weyl_cap } => {
            let rs = system(&fam)?;
            let l = weight(&rs, &w)?;
            let g = WeylGroup::new(&rs, weyl_cap)?;
            json!(generic::report(&rs, &borel_of(&rs, &sel)?, &g, &l, gamma_cap)?)
        }
        Cmd::Chamber { fam, weight: w } => {
            let rs = system(&fam)?;
            let l = weight(&rs, &w)?;
            let c = chamber(&rs, &l);
            let finite: Vec<usize> = (0..rs.even_simple.len())
                .filter(|&a| matches!(alpha_finite(&rs, &l, a, Criterion::Auto), Ok(f) if f.is_finite() == Some(true)))
                .collect();
            json!({ "chamber": c, "open": is_open_chamber(&c), "rho0": rho0(&rs), "alpha_finite": finite })
        }
        Cmd::Kl { fam, weight: w, cap } => {
            let rs = system(&fam)?;
            let whole = WeylGroup::new(&rs, DEFAULT_WEYL_CAP)?;
            let g = match w {
                Some(w) => IntegralData::new(&rs, &whole, &weight(&rs, &w)?)?.sub,
                None => whole,
            };
            let p = kl_polynomials(&g, cap)?;
            let mut table: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
            for y in 0..g.size() {
                let row = table.entry(word_key(&g, y)).or_default();
                for x in 0..g.size() {
                    if !p.get(x, y).is_zero() {
                        row.insert(word_key(&g, x), p.get(x, y).to_string());
                    }
                }
            }
            let lo = LeftOrder::new(&g, &p);
            let cells: Vec<Vec<String>> =
                lo.cells().iter().map(|c| c.iter().map(|&e| word_key(&g, e)).collect()).collect();
            json!({ "size": g.size(), "polynomials": table, "left_cells": cells })
        }
        Cmd::PrimPoset { fam, weight: w, mode, generic_mode, maps, max_vertices, weyl_cap, closure, dot } => {
            let rs = system(&fam)?;
            let l = weight(&rs, &w)?;
            let g = match mode {
                PosetMode::SmallRank => small_rank_poset(&rs, &l)?,
                PosetMode::Star => {
                    let acts: Vec<Box<dyn StarAction>> = match (&maps, rs.family.kind) {
                        (_, Kind::Queer) => vec![Box::new(AnyStar::for_family(&rs, "")?)],
                        (Some(m), _) => m
                            .split(',')
                            .map(|n| StarMap::by_name(&rs, n.trim()).map(|m| Box::new(m) as Box<dyn StarAction>))
                            .collect::<Result<_, _>>()?,
                        (None, _) => StarMap::builtins(&rs).into_iter().map(|m| Box::new(m) as Box<dyn StarAction>).collect(),
                    };
                    let refs: Vec<&dyn StarAction> = acts.iter().map(|a| a.as_ref()).collect();
                    star_inclusion_edges(&refs, &[l], Criterion::Auto, max_vertices)?
                }
                PosetMode::Generic => {
                    let m = match generic_mode {
                        GenMode::Proved => GenericMode::Proved,
                        GenMode::Conjectural => GenericMode::Conjectural,
                    };
                    generic_poset(&rs, &l, m, weyl_cap)?
                }
                PosetMode::SinglyAtypical => extra_inclusions_singly_atypical(&rs, &l)?,
            };
            let g = if closure { g.transitive_closure() } else { g };
            write_dot(&dot, g.to_dot())?;
            graph_json(&g)
        }
        Cmd::Chars { fam, sel, weight: w, op, alpha, pairing, gamma_cap } => {
            let rs = system(&fam)?;
            let b = borel_of(&rs, &sel)?;
            let l = weight(&rs, &w)?;
            match op {
                CharOp::Restriction => json!(verma_restriction_weights(&rs, &b, &l, gamma_cap)?),
                CharOp::GenericRestriction => {
                    let t = GenericTester::new(&rs, &b, gamma_cap)?;
                    json!(generic_restriction_decomposition(&rs, &b, &t, &l, gamma_cap)?)
                }
                CharOp::Twisted => {
                    let alphas: Vec<usize> = match alpha {
                        Some(a) => vec![rs.parse_even_simple(&a)?],
                        None => (0..rs.even_simple.len()).collect(),
                    };
                    let mut out = BTreeMap::new();
                    for a in alphas {
                        out.insert(root_literal(&rs.even_simple[a]), twisted_verma_character_equal(&rs, &b, &l, a, gamma_cap)?);
                    }
                    json!({ "identity_holds": out })
                }
                CharOp::Equivariance => {
                    let g = WeylGroup::new(&rs, DEFAULT_WEYL_CAP)?;
                    json!({ "equivariant": verma_equivariance(&rs, &b, &g, &l, gamma_cap)? })
                }
                CharOp::Penkov => {
                    let t = GenericTester::new(&rs, &b, gamma_cap)?;
                    let p = match pairing {
                        PairingArg::Bar => Pairing::Bar,
                        PairingArg::Plain => Pairing::Plain,
                    };
                    json!(penkov_decomposition_q(&rs, &t, &l, p, gamma_cap)?)
                }
            }
        }
        Cmd::Verify { suite, seed, count } => {
            let r = verify::run(&suite, seed, count)?;
            let v = json!(r);
            if !r.passed {
                return Err(Failure::Verify(v));
            }
            v
        }
    })
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(v: &Value) {
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verify(v)) => {
            emit(&v);
            eprintln!("verification failed");
            ExitCode::from(4)
        }
    }
}
