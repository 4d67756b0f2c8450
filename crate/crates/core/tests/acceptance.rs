//! Acceptance gate. Every test prints one `PASS`/`FAIL` line for the
//! criterion it covers before asserting.

use std::time::{Duration, Instant};

use coalition_core::coalition::{
    assess_partition, coalition_count, coalition_number, cpartition_from_domatic,
};
use coalition_core::domination::{domatic_number, independence_number};
use coalition_core::graph::{
    are_isomorphic, encode_graph, enumerate_graphs, make_family, parse_graph, EnumMode,
    FamilySpec, Format,
};
use coalition_core::harness::{run_check, CheckId, HarnessOptions, TheoremReport, UniverseSpec};
use coalition_core::hstar::{build_hstar, validate_hstar, HStarCase};
use coalition_core::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gate(id: &str, name: &str, started: Instant, budget: Duration, failures: &[String]) {
    let elapsed = started.elapsed();
    let mut failures = failures.to_vec();
    if elapsed > budget {
        failures.push(format!("took {elapsed:?}, budget {budget:?}"));
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("{status} criterion {id} {name} ({:.2}s)", elapsed.as_secs_f64());
    for f in &failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

fn fam(spec: FamilySpec) -> Graph {
    make_family(&spec).unwrap()
}

fn c_number(g: &Graph) -> Option<usize> {
    coalition_number(g).unwrap().value
}

fn c_count(g: &Graph) -> Option<usize> {
    coalition_count(g).unwrap().value
}

fn iso_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphs(n, EnumMode::UpToIsomorphism).unwrap())
        .collect()
}

#[test]
fn criterion_1_known_values() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut expect = |what: String, got: Option<usize>, want: usize| {
        if got != Some(want) {
            bad.push(format!("{what}: got {got:?}, want {want}"));
        }
    };

    let c4 = fam(FamilySpec::Cycle(4));
    expect("C(C4)".into(), c_number(&c4), 4);
    expect("c(C4)".into(), c_count(&c4), 6);

    let p4 = fam(FamilySpec::Path(4));
    expect("C(P4)".into(), c_number(&p4), 4);
    expect("c(P4)".into(), c_count(&p4), 4);

    for n in 3..=8 {
        let k = fam(FamilySpec::Complete(n));
        expect(format!("C(K{n})"), c_number(&k), n);
        expect(format!("c(K{n})"), c_count(&k), 0);
    }

    let p6 = fam(FamilySpec::Path(6));
    expect("C(P6)".into(), c_number(&p6), 5);
    expect("c(P6)".into(), c_count(&p6), 5);

    for m in 2..=6 {
        let star = fam(FamilySpec::Star(m + 1));
        expect(format!("c(K1,{m})"), c_count(&star), 1);
        expect(format!("d(K1,{m})"), Some(domatic_number(&star).unwrap().d), 2);
        expect(format!("f(K1,{m})"), Some(star.full_count()), 1);
    }

    gate("1", "known-value regression", start, Duration::from_secs(5), &bad);
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let spec = UniverseSpec {
        max_n: 5,
        mode: EnumMode::Labeled,
        filter: coalition_core::harness::Filter::All,
    };
    let report = run_check(CheckId::Oracle, &spec, &HarnessOptions::default()).unwrap();
    let mut bad = failures_of(&report);
    if report.graphs_checked < 1024 {
        bad.push(format!("only {} labeled graphs checked", report.graphs_checked));
    }
    gate("2", "engine matches naive enumerator on labeled n<=5", start, Duration::from_secs(60), &bad);
}

fn failures_of(report: &TheoremReport) -> Vec<String> {
    report
        .counterexamples
        .iter()
        .map(|c| format!("g6={} observed={} expected={}", c.graph6, c.observed, c.expected))
        .collect()
}

fn sweep(check: CheckId) {
    let start = Instant::now();
    let spec = UniverseSpec {
        max_n: 6,
        mode: EnumMode::UpToIsomorphism,
        filter: check.default_filter(),
    };
    let opts = HarnessOptions {
        all_witnesses: true,
        ..Default::default()
    };
    let report = run_check(check, &spec, &opts).unwrap();
    let mut bad = failures_of(&report);
    if report.no_cpartition > 0 {
        bad.push(format!("{} graphs without a c-partition", report.no_cpartition));
    }
    let name = format!(
        "sweep {check} over {spec} filter={} ({} graphs, {} applicable)",
        spec.filter, report.graphs_checked, report.applicable
    );
    gate("3", &name, start, Duration::from_secs(600), &bad);
}

#[test]
fn criterion_3_universe_size() {
    let start = Instant::now();
    let n6 = enumerate_graphs(6, EnumMode::UpToIsomorphism).unwrap().count();
    let bad = if n6 == 156 {
        vec![]
    } else {
        vec![format!("{n6} classes at n=6")]
    };
    gate("3", "universe has 156 classes at n=6", start, Duration::from_secs(600), &bad);
}

#[test]
fn criterion_3_sweep_t31() {
    sweep(CheckId::T31);
}

#[test]
fn criterion_3_sweep_t32() {
    sweep(CheckId::T32);
}

#[test]
fn criterion_3_sweep_t34() {
    sweep(CheckId::T34);
}

#[test]
fn criterion_3_sweep_r35() {
    sweep(CheckId::R35);
}

#[test]
fn criterion_3_sweep_t36() {
    sweep(CheckId::T36);
}

fn hstar_targets() -> Vec<(Graph, HStarCase)> {
    let mut targets = Vec::new();
    for np in 2..=5 {
        for gp in enumerate_graphs(np, EnumMode::UpToIsomorphism).unwrap() {
            if gp.has_isolated_vertex() || gp.m() == np * (np - 1) / 2 {
                continue;
            }
            for t in 0..=2 {
                targets.push((gp.union(&Graph::empty(t).unwrap()).unwrap(), HStarCase::Case2));
            }
        }
    }
    for n in [2, 4, 6] {
        for t in 0..=2 {
            let g = Graph::complete(n).unwrap().union(&Graph::empty(t).unwrap()).unwrap();
            targets.push((g, HStarCase::Case1Even));
        }
    }
    targets
}

#[test]
fn criterion_4_hstar_construction() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let targets = hstar_targets();
    for (g, case) in &targets {
        let g6 = encode_graph(g, Format::Graph6).unwrap();
        match build_hstar(g) {
            Err(e) => bad.push(format!("g6={g6} build failed: {e}")),
            Ok(r) => {
                let a = validate_hstar(g, &r);
                if r.case_tag != *case {
                    bad.push(format!("g6={g6} case {} expected {case}", r.case_tag));
                }
                if !(a.partition_valid && a.cg_matches && a.corrected_size_match) {
                    bad.push(format!("g6={g6} audit {:?}", a.violations));
                }
            }
        }
    }
    let name = format!("H* audit on {} Case 2 / Case 1 even targets", targets.len());
    gate("4", &name, start, Duration::from_secs(120), &bad);
}

#[test]
fn criterion_5_case1_odd_audit() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in [3, 5] {
        for t in 0..=1 {
            let g = Graph::complete(n).unwrap().union(&Graph::empty(t).unwrap()).unwrap();
            let g6 = encode_graph(&g, Format::Graph6).unwrap();
            let r = match build_hstar(&g) {
                Ok(r) => r,
                Err(e) => {
                    bad.push(format!("g6={g6} build failed: {e}"));
                    continue;
                }
            };
            let a = validate_hstar(&g, &r);
            if r.case_tag != HStarCase::Case1Odd {
                bad.push(format!("g6={g6} case {}", r.case_tag));
            }
            // the construction is taken literally: gadget u sits in V_0 and
            // is not adjacent to base vertex 0 but sees every other base
            // vertex except the unmatched one
            let u = n;
            let literal = r.pi_star.part(0).contains(u)
                && !r.host.has_edge(u, 0)
                && (1..n - 1).all(|b| r.host.has_edge(u, b))
                && !r.host.has_edge(u, n - 1);
            if !literal {
                bad.push(format!("g6={g6} host differs from the literal construction"));
            }
            if a.ok() != a.violations.is_empty() {
                bad.push(format!("g6={g6} report is not definitive"));
            }
            println!(
                "    g6={g6} case={} partition_valid={} cg_matches={} violations={:?}",
                r.case_tag, a.partition_valid, a.cg_matches, a.violations
            );
        }
    }
    gate("5", "Case 1 odd audit is definitive and unrepaired", start, Duration::from_secs(60), &bad);
}

#[test]
fn criterion_6_codec_round_trips() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for g in iso_upto(6) {
        for format in [Format::EdgeList, Format::Graph6] {
            let text = encode_graph(&g, format).unwrap();
            if parse_graph(&text, format).unwrap() != g {
                bad.push(format!("{format:?} round trip failed for {text:?}"));
            }
        }
    }
    gate("6", "codec round trips on all graphs n<=6", start, Duration::from_secs(60), &bad);
}

#[test]
fn criterion_6_relabel_invariance() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0A1);
    let snapshot = |g: &Graph| {
        (
            g.full_count(),
            g.min_degree(),
            independence_number(g).unwrap(),
            domatic_number(g).unwrap().d,
            c_number(g),
            c_count(g),
        )
    };
    for g in iso_upto(5) {
        let base = snapshot(&g);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for _ in 0..20 {
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            if snapshot(&h) != base {
                bad.push(format!("{} under {perm:?}", encode_graph(&g, Format::Graph6).unwrap()));
            }
        }
    }
    gate("6", "invariants stable under 20 relabelings per graph n<=5", start, Duration::from_secs(60), &bad);
}

#[test]
fn criterion_6_cpartition_from_domatic() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for g in iso_upto(6).into_iter().filter(|g| !g.has_isolated_vertex()) {
        let g6 = encode_graph(&g, Format::Graph6).unwrap();
        let (p, bound) = cpartition_from_domatic(&g).unwrap();
        let a = assess_partition(&g, &p).unwrap();
        let d = domatic_number(&g).unwrap().d;
        if !a.valid {
            bad.push(format!("g6={g6} partition {p} is not a c-partition"));
        } else if (a.pair_count as i64) < d as i64 - g.full_count() as i64 || bound + g.full_count() != d {
            bad.push(format!("g6={g6} pairs={} d={d} f={}", a.pair_count, g.full_count()));
        }
    }
    gate("6", "domatic-derived c-partition valid with pairs>=d-f on n<=6", start, Duration::from_secs(60), &bad);
}

#[test]
fn criterion_6_class_counts() {
    let start = Instant::now();
    let want = [1usize, 2, 4, 11, 34, 156, 1044];
    let got: Vec<usize> = (1..=7)
        .map(|n| enumerate_graphs(n, EnumMode::UpToIsomorphism).unwrap().count())
        .collect();
    let bad = if got == want {
        vec![]
    } else {
        vec![format!("got {got:?}")]
    };
    // classes are pairwise non-isomorphic at n=5
    let five: Vec<Graph> = enumerate_graphs(5, EnumMode::UpToIsomorphism).unwrap().collect();
    let mut bad = bad;
    for i in 0..five.len() {
        for j in i + 1..five.len() {
            if are_isomorphic(&five[i], &five[j]).unwrap() {
                bad.push(format!("classes {i} and {j} at n=5 are isomorphic"));
            }
        }
    }
    gate("6", "class counts 1,2,4,11,34,156,1044", start, Duration::from_secs(120), &bad);
}
