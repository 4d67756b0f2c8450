//! Exhaustive sweeps that check the coalition bounds on every graph of a
//! universe and collect counterexamples.

mod naive;

pub use naive::{naive_coalition_values, NaiveValues};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coalition::{
    assess_partition, coalition_count_with, coalition_graph, coalition_number_with,
    cpartitions_of_order, is_sp_graph,
};
use crate::domination::{domatic_number_with, independence_number_with};
use crate::graph::{
    are_isomorphic_with, encode_graph, enumerate_graphs_with, make_family, EnumMode, FamilySpec,
    Format, Graph,
};
use crate::hstar::{build_hstar, validate_hstar_with};
use crate::limits::Limits;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// c(G) >= d(G) - f for graphs without isolated vertices.
    T31,
    /// c(G) = 1 iff α(G) = n - f.
    T32,
    /// c(G) = 1 iff G ≅ (K_f + pK_1) ∪ qK_1.
    Cor,
    /// One full vertex and δ = 1: c = C - 2 and CG ≅ K_1 ∪ K_{1,C-2}.
    T34,
    /// c(G) >= ⌈(C(G) - f) / 2⌉.
    R35,
    /// SP-graphs without full vertices: c(G) >= α(G).
    T36,
    /// H* construction audit.
    HStar,
    /// Search engine against the naive enumerator.
    Oracle,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::T31,
        CheckId::T32,
        CheckId::Cor,
        CheckId::T34,
        CheckId::R35,
        CheckId::T36,
        CheckId::HStar,
        CheckId::Oracle,
    ];

    /// Universe filter used when none is given.
    pub fn default_filter(self) -> Filter {
        match self {
            CheckId::T31 => Filter::NoIsolates,
            CheckId::T34 => Filter::OneFullAndDelta1,
            CheckId::T36 => Filter::SpNoFull,
            _ => Filter::All,
        }
    }

    pub fn default_mode(self) -> EnumMode {
        match self {
            CheckId::Oracle => EnumMode::Labeled,
            _ => EnumMode::UpToIsomorphism,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckId::T31 => "T31",
            CheckId::T32 => "T32",
            CheckId::Cor => "COR",
            CheckId::T34 => "T34",
            CheckId::R35 => "R35",
            CheckId::T36 => "T36",
            CheckId::HStar => "HSTAR",
            CheckId::Oracle => "ORACLE",
        })
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    NoIsolates,
    /// Exactly one full vertex and minimum degree 1.
    OneFullAndDelta1,
    /// Singleton partition is a c-partition and there is no full vertex.
    SpNoFull,
    /// Isomorphic to some (K_f + pK_1) ∪ qK_1.
    FamilyMembership,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::NoIsolates => "no_isolates",
            Filter::OneFullAndDelta1 => "one_full_and_delta1",
            Filter::SpNoFull => "sp_no_full",
            Filter::FamilyMembership => "family_membership",
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Filter::All,
            "no_isolates" => Filter::NoIsolates,
            "one_full_and_delta1" => Filter::OneFullAndDelta1,
            "sp_no_full" => Filter::SpNoFull,
            "family_membership" => Filter::FamilyMembership,
            other => return Err(Error::parse("filter", format!("unknown filter {other:?}"))),
        })
    }
}

impl Filter {
    pub fn accepts(self, g: &Graph, limits: &Limits) -> Result<bool> {
        Ok(match self {
            Filter::All => true,
            Filter::NoIsolates => !g.has_isolated_vertex(),
            Filter::OneFullAndDelta1 => g.full_count() == 1 && g.min_degree() == Some(1),
            Filter::SpNoFull => g.full_count() == 0 && is_sp_graph(g),
            Filter::FamilyMembership => family_membership(g, limits)?.is_some(),
        })
    }
}

/// Graphs on `1..=max_n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniverseSpec {
    pub max_n: usize,
    pub mode: EnumMode,
    pub filter: Filter,
}

impl fmt::Display for UniverseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n<={}", self.mode, self.max_n)
    }
}

pub fn build_universe(spec: &UniverseSpec, limits: &Limits) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=spec.max_n {
        for g in enumerate_graphs_with(n, spec.mode, limits)? {
            if spec.filter.accepts(&g, limits)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// First `(f, p, q)` in lexicographic order with G ≅ (K_f + pK_1) ∪ qK_1.
pub fn family_membership(g: &Graph, limits: &Limits) -> Result<Option<(usize, usize, usize)>> {
    let n = g.n();
    for f in 0..=n {
        for p in 0..=n - f {
            let q = n - f - p;
            if n == 0 {
                return Ok(Some((0, 0, 0)));
            }
            let member = make_family(&FamilySpec::FullPlusIndependents { f, p, q })?;
            if member.m() == g.m() && are_isomorphic_with(&member, g, limits)? {
                return Ok(Some((f, p, q)));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub struct HarnessOptions {
    pub limits: Limits,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// T34: check every maximum-order c-partition, not only the canonical
    /// witness.
    pub all_witnesses: bool,
}


/// Result of checking one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphVerdict {
    /// Hypothesis holds and so does the claim.
    Holds,
    /// Hypothesis does not apply to this graph.
    Vacuous,
    /// The engine found no c-partition.
    NoCPartition,
    Violated { observed: String, expected: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub check_id: CheckId,
    pub universe: UniverseSpec,
    pub graphs_checked: usize,
    pub applicable: usize,
    pub no_cpartition: usize,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "check={} universe={} filter={}",
            self.check_id, self.universe, self.universe.filter
        )?;
        for c in &self.counterexamples {
            writeln!(f, "g6={} observed={} expected={}", c.graph6, c.observed, c.expected)?;
        }
        writeln!(f, "applicable={}", self.applicable)?;
        writeln!(f, "no_cpartition={}", self.no_cpartition)?;
        writeln!(
            f,
            "checked={} counterexamples={} passed={}",
            self.graphs_checked,
            self.counterexamples.len(),
            self.passed
        )
    }
}

pub fn run_check(check: CheckId, spec: &UniverseSpec, opts: &HarnessOptions) -> Result<TheoremReport> {
    let universe = build_universe(spec, &opts.limits)?;
    let evaluate = || -> Result<Vec<GraphVerdict>> {
        universe
            .par_iter()
            .map(|g| check_graph(check, g, opts))
            .collect()
    };
    let verdicts = match opts.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(evaluate)?,
        None => evaluate()?,
    };

    let mut report = TheoremReport {
        check_id: check,
        universe: *spec,
        graphs_checked: universe.len(),
        applicable: 0,
        no_cpartition: 0,
        counterexamples: Vec::new(),
        passed: false,
    };
    for (g, v) in universe.iter().zip(verdicts) {
        match v {
            GraphVerdict::Holds => report.applicable += 1,
            GraphVerdict::Vacuous => {}
            GraphVerdict::NoCPartition => report.no_cpartition += 1,
            GraphVerdict::Violated { observed, expected } => {
                report.applicable += 1;
                report.counterexamples.push(Counterexample {
                    graph6: encode_graph(g, Format::Graph6)?,
                    observed,
                    expected,
                });
            }
        }
    }
    report.passed = report.counterexamples.is_empty();
    Ok(report)
}

fn ceil_half(x: i64) -> i64 {
    x.div_euclid(2) + x.rem_euclid(2)
}

fn verdict(ok: bool, observed: String, expected: impl Into<String>) -> GraphVerdict {
    if ok {
        GraphVerdict::Holds
    } else {
        GraphVerdict::Violated {
            observed,
            expected: expected.into(),
        }
    }
}

/// Star K_{1,s-2} plus an isolated vertex.
fn t34_shape(s: usize) -> Result<Graph> {
    let star = Graph::complete(1)?.join(&Graph::empty(s - 2)?)?;
    Graph::empty(1)?.union(&star)
}

/// Evaluate one check on one graph.
pub fn check_graph(check: CheckId, g: &Graph, opts: &HarnessOptions) -> Result<GraphVerdict> {
    let limits = &opts.limits;
    let n = g.n();
    let f = g.full_count();
    let big_c = || coalition_number_with(g, limits);
    let small_c = || coalition_count_with(g, limits).map(|o| o.value);

    Ok(match check {
        CheckId::T31 => {
            if g.has_isolated_vertex() {
                return Ok(GraphVerdict::Vacuous);
            }
            let Some(c) = small_c()? else {
                return Ok(GraphVerdict::NoCPartition);
            };
            let d = domatic_number_with(g, limits)?.d;
            verdict(
                c as i64 >= d as i64 - f as i64,
                format!("c={c},d={d},f={f}"),
                "c>=d-f",
            )
        }
        CheckId::T32 => {
            let Some(c) = small_c()? else {
                return Ok(GraphVerdict::NoCPartition);
            };
            let alpha = independence_number_with(g, limits)?;
            verdict(
                (c == 1) == (alpha + f == n),
                format!("c={c},alpha={alpha},n={n},f={f}"),
                "c=1<=>alpha=n-f",
            )
        }
        CheckId::Cor => {
            let Some(c) = small_c()? else {
                return Ok(GraphVerdict::NoCPartition);
            };
            let member = family_membership(g, limits)?;
            let fam = match member {
                Some((fp, p, q)) => format!("member=true,fam_f={fp},p={p},q={q},fam_f_is_full_count={}", fp == f),
                None => "member=false".to_string(),
            };
            verdict(
                (c == 1) == member.is_some(),
                format!("c={c},f={f},{fam}"),
                "c=1<=>G~(K_f+pK_1)uqK_1",
            )
        }
        CheckId::T34 => {
            if f != 1 || g.min_degree() != Some(1) {
                return Ok(GraphVerdict::Vacuous);
            }
            let number = big_c()?;
            let (Some(s), Some(c)) = (number.value, small_c()?) else {
                return Ok(GraphVerdict::NoCPartition);
            };
            if s < 2 {
                return Ok(GraphVerdict::Vacuous);
            }
            let shape = t34_shape(s)?;
            let witnesses = if opts.all_witnesses {
                cpartitions_of_order(g, s, limits)?
            } else {
                vec![number.witness.expect("value implies witness")]
            };
            let mut bad_shapes = Vec::new();
            for w in &witnesses {
                let cg = coalition_graph(g, w)?.cg;
                if !are_isomorphic_with(&cg, &shape, limits)? {
                    bad_shapes.push(w.to_string());
                }
            }
            let mut observed = format!("C={s},c={c},witnesses={}", witnesses.len());
            if !bad_shapes.is_empty() {
                observed.push_str(&format!(",bad_cg={}", bad_shapes.join(";")));
            }
            verdict(
                c + 2 == s && bad_shapes.is_empty(),
                observed,
                "c=C-2,CG~K_1uK_{1,C-2}",
            )
        }
        CheckId::R35 => {
            let number = big_c()?;
            let (Some(s), Some(c)) = (number.value, small_c()?) else {
                return Ok(GraphVerdict::NoCPartition);
            };
            let bound = ceil_half(s as i64 - f as i64);
            verdict(
                c as i64 >= bound,
                format!("c={c},C={s},f={f}"),
                "c>=ceil((C-f)/2)",
            )
        }
        CheckId::T36 => {
            if f != 0 || !is_sp_graph(g) {
                return Ok(GraphVerdict::Vacuous);
            }
            let Some(c) = small_c()? else {
                return Ok(GraphVerdict::NoCPartition);
            };
            let alpha = independence_number_with(g, limits)?;
            verdict(c >= alpha, format!("c={c},alpha={alpha}"), "c>=alpha")
        }
        CheckId::HStar => match build_hstar(g) {
            Ok(r) => {
                let a = validate_hstar_with(g, &r, limits);
                let mut observed = format!(
                    "case={},partition_valid={},cg_matches={},iso_matches={},order={},size={},predicted_order={},predicted_size={},predicted_size_corrected={}",
                    r.case_tag,
                    a.partition_valid,
                    a.cg_matches,
                    a.iso_matches,
                    r.actual_order,
                    r.actual_size,
                    r.predicted.order,
                    r.predicted.size_verbatim,
                    r.predicted.size_corrected
                );
                if !a.violations.is_empty() {
                    observed.push_str(&format!(",violations=[{}]", a.violations.join("; ")));
                }
                verdict(a.ok(), observed, "CG(H*,pi*)=G,size=corrected_table")
            }
            Err(e) => verdict(false, format!("build_error={e}"), "CG(H*,pi*)=G"),
        },
        CheckId::Oracle => {
            let number = big_c()?.value;
            let count = small_c()?;
            let naive = naive_coalition_values(g);
            let show = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
            verdict(
                number == naive.coalition_number && count == naive.coalition_count,
                format!(
                    "C={},c={},naive_C={},naive_c={}",
                    show(number),
                    show(count),
                    show(naive.coalition_number),
                    show(naive.coalition_count)
                ),
                "engine=naive",
            )
        }
    })
}

/// Re-run a single-graph check from a recorded graph6 certificate.
pub fn recheck(check: CheckId, graph6: &str, opts: &HarnessOptions) -> Result<GraphVerdict> {
    let g = crate::graph::parse_graph(graph6, Format::Graph6)?;
    check_graph(check, &g, opts)
}

/// Check that a recorded partition is still a c-partition of `g`; used when
/// re-validating witnesses printed elsewhere.
pub fn witness_is_valid(g: &Graph, p: &crate::Partition) -> Result<bool> {
    Ok(assess_partition(g, p)?.valid)
}
