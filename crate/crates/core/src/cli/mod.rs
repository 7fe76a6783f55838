//! The `aglab` command line.
//!
//! Every command reads Cayley tables in the text format of
//! [`crate::format`] and reports either a short human summary or, with
//! `--json`, a JSON document carrying `"schema": 1`. Exit codes: 0 for a
//! positive verdict, 1 for a negative one, 2 when the input could not be
//! checked, 3 when a measured result contradicts one of the theorems the
//! library checks.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::aggroup::{ag_group_report, all_principal_ideals, lemma5_report};
use crate::census::{enumerate, CensusClass, CensusOptions};
use crate::derived::{clifford_decompose, derive};
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::inflation::{inflate, theorem10_check};
use crate::inverses::{classify, inverse_data, Class3};
use crate::laws::{check_law, Law};
use crate::morphisms::{are_isomorphic, automorphisms, canonical_form, Permutation};
use crate::structure::{construct_thm20, extract_thm21, roundtrip_cor22, StructurePair};
use crate::MAX_ORDER;

pub use crate::format::{parse_table, serialize_table};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

/// Environment variable lowering the largest accepted order.
pub const MAX_ORDER_VAR: &str = "AGLAB_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(name = "aglab", version, about = "Finite AG-groupoid toolkit")]
pub struct Cli {
    /// Print a JSON report instead of a summary.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one law, with the first counterexample.
    Check {
        file: PathBuf,
        #[arg(long)]
        law: Law,
    },
    /// Measure every property the library knows about.
    Classify { file: PathBuf },
    /// Left inverses, inverse sets and the inverse map.
    Inverses { file: PathBuf },
    /// The derived product of a completely inverse AG**-groupoid.
    Derive { file: PathBuf },
    /// Clifford decomposition of a semilattice of abelian groups.
    Decompose {
        file: PathBuf,
        /// Decompose the derived product of the input instead.
        #[arg(long)]
        derived: bool,
    },
    /// Canonical form and a relabeling achieving it.
    Canon { file: PathBuf },
    /// Isomorphism test with a witness.
    Iso { first: PathBuf, second: PathBuf },
    /// Automorphisms, optionally only involutive and/or idempotent-fixed ones.
    Autos {
        file: PathBuf,
        #[arg(long)]
        involutive: bool,
        #[arg(long)]
        efixed: bool,
    },
    /// Build `a∘b = A(a)•b` from a semilattice of abelian groups.
    Construct {
        sga_file: PathBuf,
        /// `id`, or the images of the elements in order as labels or indices,
        /// separated by commas.
        #[arg(long = "auto")]
        automorphism: String,
    },
    /// Recover the semilattice of abelian groups and its automorphism.
    Extract { file: PathBuf },
    /// Check that construct(extract(g)) reproduces g.
    Roundtrip { file: PathBuf },
    /// AG-group conditions and left simplicity.
    Aggroup { file: PathBuf },
    /// Principal left and right ideals of every element.
    Ideals { file: PathBuf },
    /// Inflate a groupoid by the given fiber sizes.
    Inflate {
        base_file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Look for an inflation structure over S².
    Deflate { file: PathBuf },
    /// Enumerate a class up to isomorphism.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        class: CensusClass,
        /// Worker threads (default: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write every canonical table to this directory.
        #[arg(long)]
        emit_tables: Option<PathBuf>,
        /// Scan every table instead of searching (order ≤ 3).
        #[arg(long)]
        naive: bool,
        /// Allow the unpruned order-4 enumeration.
        #[arg(long)]
        exhaustive_unpruned: bool,
    },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    json: Value,
    text: String,
    violations: Vec<String>,
    /// Extra diagnostics for stderr.
    note: Option<String>,
}

impl Report {
    fn new(positive: bool, json: impl Serialize, text: String) -> Self {
        Report {
            code: if positive { EXIT_POSITIVE } else { EXIT_NEGATIVE },
            json: serde_json::to_value(json).expect("reports serialize"),
            text,
            violations: Vec::new(),
            note: None,
        }
    }

    fn violations(mut self, v: &[String]) -> Self {
        self.violations.extend_from_slice(v);
        self
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_POSITIVE };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(report) => render(report, json),
        Err(e) => {
            let code = if e.is_theorem_violation() {
                EXIT_VIOLATION
            } else if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_NEGATIVE
            };
            let stdout = if json && code == EXIT_NEGATIVE {
                let doc = json!({ "schema": 1, "verdict": false, "reason": e.to_string() });
                format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
            } else {
                String::new()
            };
            Output {
                code,
                stdout,
                stderr: format!("aglab: {e}\n"),
            }
        }
    }
}

fn render(report: Report, json: bool) -> Output {
    let mut stderr = String::new();
    if let Some(note) = &report.note {
        stderr.push_str(note);
        stderr.push('\n');
    }
    for v in &report.violations {
        if v.starts_with("THEOREM-VIOLATION") {
            stderr.push_str(v);
        } else {
            let _ = write!(stderr, "THEOREM-VIOLATION: {v}");
        }
        stderr.push('\n');
    }
    let code = if report.violations.is_empty() {
        report.code
    } else {
        EXIT_VIOLATION
    };
    let stdout = if json {
        let mut doc = report.json;
        match doc.as_object_mut() {
            Some(map) => {
                map.insert("schema".into(), json!(1));
            }
            None => doc = json!({ "schema": 1, "result": doc }),
        }
        format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
    } else {
        report.text
    };
    Output { code, stdout, stderr }
}

/// The largest order accepted from input files.
pub fn max_order() -> Result<usize> {
    match std::env::var(MAX_ORDER_VAR) {
        Err(_) => Ok(MAX_ORDER),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v.min(MAX_ORDER)),
            _ => Err(Error::Input(format!("{MAX_ORDER_VAR} must be a positive integer, got {s:?}"))),
        },
    }
}

pub fn load(path: &Path) -> Result<FiniteGroupoid> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let g = parse_table(&text)?;
    let bound = max_order()?;
    if g.order() > bound {
        return Err(Error::Size { order: g.order(), bound });
    }
    Ok(g)
}

/// `id`, or comma-separated images given as labels or indices.
pub fn parse_permutation(g: &FiniteGroupoid, text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text == "id" {
        return Ok(Permutation::identity(g.order()));
    }
    let images = text
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            g.elements()
                .find(|&x| g.label(x) == tok)
                .or_else(|| tok.parse::<usize>().ok().filter(|&i| i < g.order()))
                .ok_or_else(|| Error::InvalidPermutation(format!("unknown element {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if images.len() != g.order() {
        return Err(Error::InvalidPermutation(format!(
            "{} images given for order {}",
            images.len(),
            g.order()
        )));
    }
    Permutation::new(images)
}

fn labels(g: &FiniteGroupoid, set: impl IntoIterator<Item = usize>) -> String {
    let items: Vec<String> = set.into_iter().map(|x| g.label(x)).collect();
    format!("{{{}}}", items.join(", "))
}

fn perm_text(g: &FiniteGroupoid, p: &[usize]) -> String {
    g.elements()
        .map(|x| format!("{}->{}", g.label(x), g.label(p[x])))
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(command: Command) -> Result<Report> {
    Ok(match command {
        Command::Check { file, law } => {
            let g = load(&file)?;
            let r = check_law(&g, law);
            let text = match &r.counterexample {
                None => format!("{law}: holds\n"),
                Some(c) => format!(
                    "{law}: fails at ({}): {} vs {}\n",
                    c.args.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(", "),
                    g.label(c.left),
                    g.label(c.right)
                ),
            };
            Report::new(r.holds, &r, text)
        }
        Command::Classify { file } => {
            let g = load(&file)?;
            let r = classify(&g);
            let mut text = String::new();
            let _ = writeln!(text, "AG (invertive):           {}", yes(r.ag.holds));
            let _ = writeln!(text, "AG**:                     {}", yes(r.ag_star_star.holds));
            let _ = writeln!(text, "strongly regular:         {}", yes(r.strongly_regular));
            let _ = writeln!(text, "idempotents:              {}", labels(&g, r.idempotents));
            let _ = writeln!(text, "idempotents a semilattice: {}", yes(r.e_semilattice));
            let _ = writeln!(text, "completely inverse:       {}", yes(r.completely_inverse));
            let _ = writeln!(text, "left identities:          {}", labels(&g, r.left_identities));
            let _ = writeln!(text, "left simple:              {}", yes(r.left_simple));
            if let Some(ideal) = r.proper_left_ideal {
                let _ = writeln!(text, "proper left ideal:        {}", labels(&g, ideal));
            }
            let class = match r.class3 {
                Some(Class3::AllThree) => "all-three",
                Some(Class3::None) => "none",
                None => "disagreement",
            };
            let _ = writeln!(text, "characterizations:        {class}");
            let positive = r.is_completely_inverse_agss();
            Report::new(positive, &r, text).violations(&r.violations)
        }
        Command::Inverses { file } => {
            let g = load(&file)?;
            let d = inverse_data(&g);
            let mut text = String::new();
            for a in g.elements() {
                let _ = writeln!(
                    text,
                    "V({}) = {}{}",
                    g.label(a),
                    labels(&g, d.inverse_sets[a]),
                    if d.commuting[a] { "" } else { "  (no unique commuting inverse)" }
                );
            }
            Report::new(d.is_completely_inverse(), &d, text)
        }
        Command::Derive { file } => {
            let g = load(&file)?;
            let d = derive(&g)?;
            let table = serialize_table(d.derived());
            let summary = json!({
                "derived": d.derived(),
                "inverses": d.base_inverses(),
                "idempotents_agree": d.prop11_check(),
            });
            let mut r = Report::new(true, &summary, table);
            if !d.prop11_check() {
                r.violations.push("idempotents of the derived product differ".into());
            }
            r
        }
        Command::Decompose { file, derived } => {
            let g = load(&file)?;
            let h = if derived { derive(&g)?.into_derived() } else { g };
            let c = clifford_decompose(&h)?;
            let mut text = String::new();
            for group in &c.groups {
                let _ = writeln!(
                    text,
                    "G_{} = {}",
                    h.label(group.identity),
                    labels(&h, group.elements)
                );
            }
            for (e, f) in &c.order {
                let _ = writeln!(text, "{} < {}", h.label(*e), h.label(*f));
            }
            Report::new(true, &c, text)
        }
        Command::Canon { file } => {
            let g = load(&file)?;
            let c = canonical_form(&g);
            let json = json!({ "canonical_table": c.table, "witness_perm": c.relabeling });
            Report::new(true, json, serialize_table(&c.table))
        }
        Command::Iso { first, second } => {
            let g = load(&first)?;
            let h = load(&second)?;
            let w = are_isomorphic(&g, &h);
            let text = match &w {
                Some(p) => format!("isomorphic: {}\n", perm_text(&g, p)),
                None => "not isomorphic\n".to_string(),
            };
            Report::new(w.is_some(), json!({ "isomorphic": w.is_some(), "witness": w }), text)
        }
        Command::Autos { file, involutive, efixed } => {
            let g = load(&file)?;
            let autos: Vec<_> = automorphisms(&g)
                .into_iter()
                .filter(|a| (!involutive || a.involutive) && (!efixed || a.e_fixed))
                .collect();
            let mut text = String::new();
            for a in &autos {
                let _ = writeln!(text, "{}", perm_text(&g, &a.perm));
            }
            Report::new(true, json!({ "count": autos.len(), "automorphisms": autos }), text)
        }
        Command::Construct { sga_file, automorphism } => {
            let t = load(&sga_file)?;
            let perm = parse_permutation(&t, &automorphism)?;
            let pair = StructurePair::new(t, perm)?;
            let g = construct_thm20(&pair)?;
            let text = serialize_table(&g);
            Report::new(true, json!({ "groupoid": g, "automorphism": pair.automorphism }), text)
        }
        Command::Extract { file } => {
            let g = load(&file)?;
            let pair = extract_thm21(&g)?;
            let text = format!(
                "{}# A: {}\n",
                serialize_table(&pair.sga),
                perm_text(&pair.sga, pair.perm())
            );
            Report::new(true, &pair, text)
        }
        Command::Roundtrip { file } => {
            let g = load(&file)?;
            let ok = roundtrip_cor22(&g)?;
            let text = if ok {
                "round trip reproduces the table\n".to_string()
            } else {
                "not a completely inverse AG**-groupoid\n".to_string()
            };
            Report::new(ok, json!({ "roundtrip": ok }), text)
        }
        Command::Aggroup { file } => {
            let g = load(&file)?;
            let r = ag_group_report(&g);
            let mut text = String::new();
            let _ = writeln!(
                text,
                "left identity: {}",
                r.left_identity.map_or("none".to_string(), |e| g.label(e))
            );
            let _ = writeln!(
                text,
                "conditions: {} {} {} {}",
                yes(r.cond1),
                yes(r.cond2),
                yes(r.cond3),
                yes(r.cond4)
            );
            let _ = writeln!(text, "left simple: {}", yes(r.left_simple));
            let _ = writeln!(text, "AG-group: {}", yes(r.is_ag_group));
            Report::new(r.is_ag_group, &r, text).violations(&r.violations)
        }
        Command::Ideals { file } => {
            let g = load(&file)?;
            let ideals = all_principal_ideals(&g);
            let mut text = String::new();
            for p in &ideals {
                let a = g.label(p.element);
                let _ = writeln!(text, "{a}S = {}  S{a} = {}", labels(&g, p.right), labels(&g, p.left));
            }
            let lemma = match lemma5_report(&g) {
                Ok(r) => Some(r),
                Err(Error::NotCompletelyInverse(_)) => None,
                Err(e) => return Err(e),
            };
            let violations = lemma.as_ref().map(|r| r.failures.clone()).unwrap_or_default();
            Report::new(true, json!({ "ideals": ideals, "completely_inverse": lemma }), text)
                .violations(&violations)
        }
        Command::Inflate { base_file, sizes } => {
            let u = load(&base_file)?;
            let g = inflate(&u, &sizes)?;
            Report::new(true, json!({ "groupoid": g }), serialize_table(&g))
        }
        Command::Deflate { file } => {
            let g = load(&file)?;
            let r = theorem10_check(&g);
            let mut text = String::new();
            let _ = writeln!(text, "medial: {}", yes(r.medial));
            let _ = writeln!(text, "S² completely inverse AG**: {}", yes(r.s2_good));
            match &r.witness {
                Some(w) => {
                    for f in &w.fibers {
                        let _ = writeln!(text, "S_{} = {}", g.label(f.base), labels(&g, f.elements));
                    }
                }
                None => text.push_str("not an inflation of a completely inverse AG**-groupoid\n"),
            }
            Report::new(r.is_inflation(), &r, text).violations(&r.violations)
        }
        Command::Census {
            order,
            class,
            jobs,
            emit_tables,
            naive,
            exhaustive_unpruned,
        } => {
            let opts = CensusOptions { jobs, naive, exhaustive_unpruned };
            let r = enumerate(order, class, &opts)?;
            if let Some(dir) = emit_tables {
                std::fs::create_dir_all(&dir)
                    .map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
                for (i, g) in r.groupoids().iter().enumerate() {
                    let path = dir.join(format!("{}-{order}-{i:04}.tbl", class.cli_name()));
                    std::fs::write(&path, serialize_table(g))
                        .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
                }
            }
            let text = format!("{} {class} groupoids of order {order}\n", r.count);
            let mut report = Report::new(true, &r, text);
            report.note = Some(format!(
                "searched {} nodes in {:.3}s",
                r.search_stats.nodes,
                r.search_stats.wall_time.as_secs_f64()
            ));
            report
        }
    })
}
