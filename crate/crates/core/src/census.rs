//! Enumeration of small groupoids by class, up to isomorphism.
//!
//! The search fills the Cayley table cell by cell in row-major order and
//! abandons a partial table as soon as a fully evaluable law instance fails.
//! Survivors are checked against the full class predicate, canonicalized and
//! deduplicated. The tree is split after the first two rows and the subtrees
//! are searched on a rayon pool; the merged result does not depend on the
//! number of workers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::aggroup::ag_group_report;
use crate::derived::{clifford_decompose, derive};
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::inverses::is_completely_inverse_agss;
use crate::laws::{self, Law};
use crate::morphisms::{aut2e, automorphisms, canonical_form, Permutation};
use crate::structure::{construct_thm20, StructurePair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusClass {
    All,
    Ag,
    AgStarStar,
    CompletelyInverseAgss,
    /// Semilattices of abelian groups.
    Sga,
    AgGroup,
}

impl CensusClass {
    pub const ALL: [CensusClass; 6] = [
        CensusClass::All,
        CensusClass::Ag,
        CensusClass::AgStarStar,
        CensusClass::CompletelyInverseAgss,
        CensusClass::Sga,
        CensusClass::AgGroup,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            CensusClass::All => "all",
            CensusClass::Ag => "ag",
            CensusClass::AgStarStar => "agss",
            CensusClass::CompletelyInverseAgss => "cia",
            CensusClass::Sga => "sga",
            CensusClass::AgGroup => "ag-group",
        }
    }

    /// The full membership test applied to every survivor.
    pub fn contains(self, g: &FiniteGroupoid) -> bool {
        match self {
            CensusClass::All => true,
            CensusClass::Ag => laws::holds(g, Law::Invertive),
            CensusClass::AgStarStar => {
                laws::holds(g, Law::Invertive) && laws::holds(g, Law::AgStarStar)
            }
            CensusClass::CompletelyInverseAgss => is_completely_inverse_agss(g),
            CensusClass::Sga => clifford_decompose(g).is_ok(),
            CensusClass::AgGroup => ag_group_report(g).is_ag_group,
        }
    }

    /// Laws used to cut partial tables.
    fn pruning_laws(self) -> &'static [Law] {
        match self {
            CensusClass::All => &[],
            CensusClass::Ag | CensusClass::AgGroup => &[Law::Invertive],
            CensusClass::AgStarStar | CensusClass::CompletelyInverseAgss => {
                &[Law::Invertive, Law::AgStarStar]
            }
            CensusClass::Sga => &[Law::Commutative, Law::Associative],
        }
    }

    /// Largest order the search accepts for this class.
    pub fn max_order(self, exhaustive_unpruned: bool) -> usize {
        match self {
            CensusClass::All if exhaustive_unpruned => 4,
            CensusClass::All => 3,
            CensusClass::AgGroup => 5,
            _ => 4,
        }
    }
}

impl fmt::Display for CensusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for CensusClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => CensusClass::All,
            "ag" => CensusClass::Ag,
            "agss" | "ag_star_star" => CensusClass::AgStarStar,
            "cia" | "completely_inverse_agss" => CensusClass::CompletelyInverseAgss,
            "sga" => CensusClass::Sga,
            "ag-group" | "ag_group" => CensusClass::AgGroup,
            other => return Err(Error::Input(format!("unknown census class {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    /// Scan every table instead of searching.
    pub naive: bool,
    /// Permit the order-4 scan of all 4^16 tables.
    pub exhaustive_unpruned: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Partial and complete tables visited.
    pub nodes: u64,
    /// Complete tables reached.
    pub leaves: u64,
    /// Complete tables passing the class predicate, before deduplication.
    pub members: u64,
    /// Partial tables cut, keyed by the constraint that failed.
    pub pruned: BTreeMap<String, u64>,
    /// Not part of the JSON so that results are reproducible byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SearchStats {
    fn merge(mut self, other: SearchStats) -> SearchStats {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.members += other.members;
        for (k, v) in other.pruned {
            *self.pruned.entry(k).or_default() += v;
        }
        self
    }

    fn prune(&mut self, reason: &str) {
        *self.pruned.entry(reason.to_string()).or_default() += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub schema: u32,
    pub order: usize,
    pub class: CensusClass,
    pub count: usize,
    /// Canonical tables as rows of indices, sorted.
    pub canonical_tables: Vec<Vec<Vec<u8>>>,
    pub search_stats: SearchStats,
}

impl CensusResult {
    pub fn groupoids(&self) -> Vec<FiniteGroupoid> {
        self.canonical_tables
            .iter()
            .map(|rows| {
                FiniteGroupoid::new(self.order, rows.concat()).expect("census tables are valid")
            })
            .collect()
    }
}

const UNSET: u8 = u8::MAX;

struct Search {
    n: usize,
    class: CensusClass,
    laws: &'static [Law],
}

type Found = (BTreeSet<Vec<u8>>, SearchStats);

impl Search {
    #[inline]
    fn get(&self, t: &[u8], a: usize, b: usize) -> Option<usize> {
        let v = t[a * self.n + b];
        (v != UNSET).then_some(v as usize)
    }

    fn law_consistent(&self, t: &[u8], law: Law) -> bool {
        let n = self.n;
        let g = |a: usize, b: usize| self.get(t, a, b);
        let both = |l: Option<usize>, r: Option<usize>| match (l, r) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        };
        let p = |a: Option<usize>, b: Option<usize>| g(a?, b?);
        match law {
            Law::Commutative => (0..n).all(|x| (0..n).all(|y| both(g(x, y), g(y, x)))),
            Law::Invertive | Law::AgStarStar | Law::Associative => (0..n).all(|x| {
                (0..n).all(|y| {
                    (0..n).all(|z| {
                        let (x, y, z) = (Some(x), Some(y), Some(z));
                        match law {
                            Law::Invertive => both(p(p(x, y), z), p(p(z, y), x)),
                            Law::AgStarStar => both(p(x, p(y, z)), p(y, p(x, z))),
                            _ => both(p(p(x, y), z), p(x, p(y, z))),
                        }
                    })
                })
            }),
            Law::Medial | Law::Paramedial => true,
        }
    }

    /// Entries of column `col` filled so far are distinct.
    fn column_distinct(&self, t: &[u8], col: usize) -> bool {
        let mut seen = 0u32;
        for row in 0..self.n {
            if let Some(v) = self.get(t, row, col) {
                if seen & (1 << v) != 0 {
                    return false;
                }
                seen |= 1 << v;
            }
        }
        true
    }

    /// No element already has two inverses, and none is left without one.
    fn inverses_possible(&self, t: &[u8]) -> bool {
        let n = self.n;
        for a in 0..n {
            let mut found = 0;
            let mut open = false;
            for b in 0..n {
                let ab = self.get(t, a, b);
                let ba = self.get(t, b, a);
                let lhs = ab.and_then(|ab| self.get(t, ab, a));
                let rhs = ba.and_then(|ba| self.get(t, ba, b));
                match (lhs, rhs) {
                    (Some(l), Some(r)) => {
                        if l == a && r == b {
                            found += 1;
                        }
                    }
                    (Some(l), None) if l != a => {}
                    (None, Some(r)) if r != b => {}
                    _ => open = true,
                }
            }
            if found > 1 || (found == 0 && !open) {
                return false;
            }
        }
        true
    }

    /// The value cell `k` is fixed to, if any: the first row of an AG-group
    /// is taken to be the identity row.
    fn forced(&self, k: usize) -> Option<u8> {
        (self.class == CensusClass::AgGroup && k < self.n).then_some(k as u8)
    }

    fn accept(&self, t: &[u8], k: usize, stats: &mut SearchStats) -> bool {
        if self.class == CensusClass::AgGroup && !self.column_distinct(t, k % self.n) {
            stats.prune("column");
            return false;
        }
        for &law in self.laws {
            if !self.law_consistent(t, law) {
                stats.prune(law.cli_name());
                return false;
            }
        }
        if self.class == CensusClass::CompletelyInverseAgss && !self.inverses_possible(t) {
            stats.prune("inverse");
            return false;
        }
        true
    }

    fn values(&self, k: usize) -> std::ops::Range<u8> {
        match self.forced(k) {
            Some(v) => v..v + 1,
            None => 0..self.n as u8,
        }
    }

    fn leaf(&self, t: &[u8], found: &mut Found) {
        found.1.leaves += 1;
        let g = FiniteGroupoid::new(self.n, t.to_vec()).expect("complete table");
        if self.class.contains(&g) {
            found.1.members += 1;
            found.0.insert(canonical_form(&g).table.table().to_vec());
        }
    }

    /// Depth-first search below the partial table `t` whose first `k` cells
    /// are set.
    fn dfs(&self, t: &mut Vec<u8>, k: usize, found: &mut Found) {
        found.1.nodes += 1;
        if k == t.len() {
            self.leaf(t, found);
            return;
        }
        for v in self.values(k) {
            t[k] = v;
            if self.accept(t, k, &mut found.1) {
                self.dfs(t, k + 1, found);
            }
        }
        t[k] = UNSET;
    }

    /// Partial tables with exactly `depth` cells set that survive pruning.
    /// Nodes above `depth` are counted here; the prefixes themselves are
    /// counted by `dfs`.
    fn prefixes(&self, t: &mut Vec<u8>, k: usize, depth: usize, out: &mut Vec<Vec<u8>>, stats: &mut SearchStats) {
        if k == depth {
            out.push(t.clone());
            return;
        }
        stats.nodes += 1;
        for v in self.values(k) {
            t[k] = v;
            if self.accept(t, k, stats) {
                self.prefixes(t, k + 1, depth, out, stats);
            }
        }
        t[k] = UNSET;
    }
}

fn check_bounds(n: usize, class: CensusClass, opts: &CensusOptions) -> Result<()> {
    let bound = if opts.naive {
        if opts.exhaustive_unpruned { 4 } else { 3 }
    } else {
        class.max_order(opts.exhaustive_unpruned)
    };
    if n == 0 {
        return Err(Error::Input("census order must be at least 1".into()));
    }
    if n > bound {
        return Err(Error::Size { order: n, bound });
    }
    Ok(())
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))
}

/// Every groupoid of order `n` in `class`, up to isomorphism.
pub fn enumerate(n: usize, class: CensusClass, opts: &CensusOptions) -> Result<CensusResult> {
    check_bounds(n, class, opts)?;
    let start = Instant::now();
    let (tables, mut stats) = if opts.naive {
        naive_scan(n, class)
    } else {
        let search = Search {
            n,
            class,
            laws: class.pruning_laws(),
        };
        let cells = n * n;
        let depth = (2 * n).min(cells);
        let mut t = vec![UNSET; cells];
        let mut prefixes = Vec::new();
        let mut stats = SearchStats::default();
        search.prefixes(&mut t, 0, depth, &mut prefixes, &mut stats);
        let (tables, below) = pool(opts.jobs)?.install(|| {
            prefixes
                .into_par_iter()
                .map(|mut prefix| {
                    let mut found = (BTreeSet::new(), SearchStats::default());
                    search.dfs(&mut prefix, depth, &mut found);
                    found
                })
                .reduce(
                    || (BTreeSet::new(), SearchStats::default()),
                    |mut a, b| {
                        a.0.extend(b.0);
                        (a.0, a.1.merge(b.1))
                    },
                )
        });
        (tables, stats.merge(below))
    };
    for t in &tables {
        let g = FiniteGroupoid::new(n, t.clone())?;
        if canonical_form(&g).table != g || !class.contains(&g) {
            return Err(Error::TheoremViolation(format!(
                "census table {t:?} is not a canonical member of {class}"
            )));
        }
    }
    stats.wall_time = start.elapsed();
    Ok(CensusResult {
        schema: 1,
        order: n,
        class,
        count: tables.len(),
        canonical_tables: tables
            .into_iter()
            .map(|t| t.chunks(n).map(<[u8]>::to_vec).collect())
            .collect(),
        search_stats: stats,
    })
}

/// Checks every one of the `n^(n²)` tables against the class predicate.
fn naive_scan(n: usize, class: CensusClass) -> Found {
    let cells = n * n;
    let mut found = (BTreeSet::new(), SearchStats::default());
    let mut t = vec![0u8; cells];
    loop {
        found.1.nodes += 1;
        found.1.leaves += 1;
        let g = FiniteGroupoid::new(n, t.clone()).expect("valid entries");
        if class.contains(&g) {
            found.1.members += 1;
            found.0.insert(canonical_form(&g).table.table().to_vec());
        }
        let mut i = cells;
        loop {
            if i == 0 {
                return found;
            }
            i -= 1;
            t[i] += 1;
            if (t[i] as usize) < n {
                break;
            }
            t[i] = 0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SgaMultiplicity {
    pub sga: Vec<Vec<u8>>,
    pub aut2e: usize,
    /// `AUT²ₑ` members up to conjugation by automorphisms of the semilattice
    /// of abelian groups.
    pub conjugacy_classes: usize,
    /// Pairwise non-isomorphic groupoids the members construct.
    pub generated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub schema: u32,
    pub order: usize,
    pub holds: bool,
    pub direct: usize,
    pub constructed: usize,
    pub only_direct: Vec<Vec<Vec<u8>>>,
    pub only_constructed: Vec<Vec<Vec<u8>>>,
    pub per_sga: Vec<SgaMultiplicity>,
}

fn rows(t: &FiniteGroupoid) -> Vec<Vec<u8>> {
    t.rows().map(<[u8]>::to_vec).collect()
}

/// Compares the completely inverse AG**-groupoids of order `n` found
/// directly with those built from every semilattice of abelian groups of
/// order `n` and every member of its `AUT²ₑ`.
pub fn omega_cross_check(n: usize, opts: &CensusOptions) -> Result<OmegaReport> {
    let direct: BTreeSet<FiniteGroupoid> = enumerate(n, CensusClass::CompletelyInverseAgss, opts)?
        .groupoids()
        .into_iter()
        .collect();
    let mut constructed = BTreeSet::new();
    let mut per_sga = Vec::new();
    for t in enumerate(n, CensusClass::Sga, opts)?.groupoids() {
        let members = aut2e(&t);
        let autos: Vec<Permutation> = automorphisms(&t).into_iter().map(|a| a.perm).collect();
        let mut orbits: BTreeSet<BTreeSet<Permutation>> = BTreeSet::new();
        let mut generated = BTreeSet::new();
        for a in &members {
            orbits.insert(
                autos
                    .iter()
                    .map(|phi| phi.compose(&a.perm).compose(&phi.inverse()))
                    .collect(),
            );
            let pair = StructurePair::new(t.clone(), a.perm.clone())?;
            let g = canonical_form(&construct_thm20(&pair)?).table;
            generated.insert(g.clone());
            constructed.insert(g);
        }
        per_sga.push(SgaMultiplicity {
            sga: rows(&t),
            aut2e: members.len(),
            conjugacy_classes: orbits.len(),
            generated: generated.len(),
        });
    }
    Ok(OmegaReport {
        schema: 1,
        order: n,
        holds: direct == constructed,
        direct: direct.len(),
        constructed: constructed.len(),
        only_direct: direct.difference(&constructed).map(rows).collect(),
        only_constructed: constructed.difference(&direct).map(rows).collect(),
        per_sga,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop18Report {
    pub order: usize,
    pub holds: bool,
    /// Number of ≈ classes met among the groupoids of order `n`.
    pub classes: usize,
    pub violations: Vec<String>,
}

/// For every completely inverse AG**-groupoid `g` of order `n`: the derived
/// structure decomposes, its canonical form does not depend on how `g` is
/// labelled, `g ≈ (S, [•])`, and the ≈ class of `g` holds exactly one
/// semilattice of abelian groups up to isomorphism.
pub fn prop18_check(n: usize, opts: &CensusOptions) -> Result<Prop18Report> {
    let members = enumerate(n, CensusClass::CompletelyInverseAgss, opts)?.groupoids();
    let mut violations = Vec::new();
    let mut class_of: Vec<FiniteGroupoid> = Vec::new();
    let relabelings = all_permutations(n);
    for g in &members {
        let d = derive(g)?;
        if let Err(e) = clifford_decompose(d.derived()) {
            violations.push(format!("derived structure of {:?} does not decompose: {e}", rows(g)));
        }
        let key = canonical_form(d.derived()).table;
        for phi in &relabelings {
            let other = canonical_form(derive(&g.relabel(phi))?.derived()).table;
            if other != key {
                violations.push(format!(
                    "relabeling {phi:?} of {:?} changes the derived canonical form",
                    rows(g)
                ));
            }
        }
        let again = canonical_form(derive(d.derived())?.derived()).table;
        if again != key {
            violations.push(format!("{:?} is not ≈ to its derived structure", rows(g)));
        }
        class_of.push(key);
    }
    let keys: BTreeSet<&FiniteGroupoid> = class_of.iter().collect();
    for key in &keys {
        let sgas = members
            .iter()
            .zip(&class_of)
            .filter(|(g, k)| k == key && clifford_decompose(g).is_ok())
            .count();
        if sgas != 1 {
            violations.push(format!(
                "≈ class of {:?} holds {sgas} semilattices of abelian groups",
                rows(key)
            ));
        }
    }
    Ok(Prop18Report {
        order: n,
        holds: violations.is_empty(),
        classes: keys.len(),
        violations,
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out
}
