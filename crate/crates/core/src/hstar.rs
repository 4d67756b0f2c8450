//! Realizing an arbitrary graph G as the coalition graph of a host H*.
//!
//! The non-isolated vertices of G become base vertices forming a complete
//! graph minus a (near-)perfect matching. Each isolate of G becomes a
//! universal vertex in its own singleton part. When G' is complete on an odd
//! number of vertices, one extra vertex is added next to the unmatched base
//! vertex. Otherwise one gadget vertex per non-edge `jk` of G' is attached
//! to every base vertex except `j` and `k`, which stops `V_j ∪ V_k` from
//! dominating.

use std::fmt;

use crate::coalition::{assess_partition, PartClass};
use crate::graph::{are_isomorphic_with, Graph, VertexSet};
use crate::limits::Limits;
use crate::partition::Partition;
use crate::{Error, Result};

/// Target split into its non-isolated part G' and its isolates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetDecomposition {
    /// G' relabeled to `0..n` preserving relative order.
    pub g_prime: Graph,
    pub t: usize,
    pub n: usize,
    /// Edges of the complement of G', in G' labels.
    pub comp_edges: Vec<(usize, usize)>,
    /// Original label of each G' vertex.
    pub non_isolated: Vec<usize>,
    pub isolates: Vec<usize>,
}

pub fn decompose_target(g: &Graph) -> TargetDecomposition {
    let (non_isolated, isolates): (Vec<usize>, Vec<usize>) =
        (0..g.n()).partition(|&v| g.degree(v) > 0);
    let g_prime = g.induced(&non_isolated);
    let comp_edges = g_prime.complement().edges();
    TargetDecomposition {
        n: g_prime.n(),
        t: isolates.len(),
        g_prime,
        comp_edges,
        non_isolated,
        isolates,
    }
}

impl TargetDecomposition {
    pub fn m_bar(&self) -> usize {
        self.comp_edges.len()
    }

    pub fn case(&self) -> HStarCase {
        if self.n == 0 {
            HStarCase::AllIsolates
        } else if self.comp_edges.is_empty() {
            if self.n.is_multiple_of(2) {
                HStarCase::Case1Even
            } else {
                HStarCase::Case1Odd
            }
        } else {
            HStarCase::Case2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HStarCase {
    /// G' complete with an even number of vertices.
    Case1Even,
    /// G' complete with an odd number of vertices.
    Case1Odd,
    /// G' not complete.
    Case2,
    /// G has no edges.
    AllIsolates,
}

impl fmt::Display for HStarCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HStarCase::Case1Even => "CASE1_EVEN",
            HStarCase::Case1Odd => "CASE1_ODD",
            HStarCase::Case2 => "CASE2",
            HStarCase::AllIsolates => "ALL_ISOLATES",
        })
    }
}

/// Order and size from the closed-form table. `size_verbatim` sums
/// `t(n(H*) - 1)` for the universal vertices, which counts each of the
/// `C(t, 2)` edges among them twice; `size_corrected` removes that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredictedMetrics {
    pub order: usize,
    pub size_verbatim: usize,
    pub size_corrected: usize,
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn predicted_metrics(d: &TargetDecomposition) -> Result<PredictedMetrics> {
    let (n, t, m_bar) = (d.n, d.t, d.m_bar());
    let (order, base_and_gadgets) = match d.case() {
        HStarCase::Case1Even | HStarCase::AllIsolates => (n + t, choose2(n) - n / 2),
        HStarCase::Case1Odd => (n + t + 1, choose2(n) - (n - 1) / 2 + n - 2),
        HStarCase::Case2 => {
            if n < 3 {
                return Err(Error::TableRowInapplicable(format!(
                    "non-complete G' on {n} vertices gives a negative gadget degree"
                )));
            }
            (n + m_bar + t, choose2(n) - n / 2 + m_bar * (n - 3))
        }
    };
    let size_verbatim = base_and_gadgets + t * (order - 1);
    Ok(PredictedMetrics {
        order,
        size_verbatim,
        size_corrected: size_verbatim - choose2(t),
    })
}

/// A vertex added to a base part: the odd-case companion of the unmatched
/// base vertex (`pair = None`) or the blocker of one non-edge of G'.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gadget {
    pub vertex: usize,
    /// Base positions whose union it blocks.
    pub pair: Option<(usize, usize)>,
    /// Index of the part it was placed in.
    pub part: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarResult {
    pub host: Graph,
    pub pi_star: Partition,
    pub case_tag: HStarCase,
    /// Base position pairs whose edge was deleted.
    pub matching: Vec<(usize, usize)>,
    pub gadgets: Vec<Gadget>,
    /// Universal vertices, one per isolate of the target.
    pub w_vertices: Vec<usize>,
    /// `base_order[i]` is the target vertex sitting at base position `i`.
    pub base_order: Vec<usize>,
    /// Part of π* corresponding to each target vertex.
    pub target_to_part: Vec<usize>,
    pub predicted: PredictedMetrics,
    pub actual_order: usize,
    pub actual_size: usize,
}

/// Base positions for G' vertices. The unmatched (odd) or last-matched
/// (even) slot `n - 1` must hold a non-full vertex of G'. With exactly two
/// non-full vertices and `n` even they must not share a matching pair, or
/// no base part could host their gadget without dominating.
fn case2_order(gp: &Graph) -> Vec<usize> {
    let n = gp.n();
    let mut order: Vec<usize> = (0..n).collect();
    let is_full = |v: usize| gp.degree(v) == n - 1;
    if is_full(order[n - 1]) {
        let pos = (0..n).rev().find(|&p| !is_full(order[p])).expect("G' is not complete");
        order.swap(pos, n - 1);
    }
    let non_full = (0..n).filter(|&v| !is_full(v)).count();
    if n.is_multiple_of(2) && non_full == 2 && !is_full(order[n - 2]) {
        order.swap(0, n - 2);
    }
    order
}

pub fn build_hstar(g: &Graph) -> Result<HStarResult> {
    let d = decompose_target(g);
    let predicted = predicted_metrics(&d)?;
    let case_tag = d.case();
    let (n, t) = (d.n, d.t);

    let base_order: Vec<usize> = match case_tag {
        HStarCase::Case2 => case2_order(&d.g_prime),
        _ => (0..n).collect(),
    };
    let mut position = vec![0; n];
    for (pos, &v) in base_order.iter().enumerate() {
        position[v] = pos;
    }

    let mut host = Graph::complete(n)?;
    let matching: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    for &(a, b) in &matching {
        host.remove_edge(a, b);
    }
    let mut members: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let mut gadgets = Vec::new();

    match case_tag {
        HStarCase::Case1Odd => {
            let unmatched = n - 1;
            let u = host.push_vertex()?;
            for b in 0..n {
                if b != unmatched {
                    host.add_edge(u, b);
                }
            }
            let k = 0;
            members[k] |= 1 << u;
            host.remove_edge(u, k);
            gadgets.push(Gadget {
                vertex: u,
                pair: None,
                part: k,
            });
        }
        HStarCase::Case2 => {
            let mut pairs: Vec<(usize, usize)> = d
                .comp_edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (position[a], position[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            pairs.sort_unstable();
            let mut has_comp = vec![false; n];
            for &(j, k) in &pairs {
                has_comp[j] = true;
                has_comp[k] = true;
            }
            let mut placed = Vec::with_capacity(pairs.len());
            for &(j, k) in &pairs {
                let x = host.push_vertex()?;
                for b in 0..n {
                    if b != j && b != k {
                        host.add_edge(x, b);
                    }
                }
                placed.push((x, j, k));
            }
            let candidates: Vec<usize> = (0..n)
                .filter(|&i| has_comp[i])
                .chain((0..n).filter(|&i| !has_comp[i]))
                .collect();
            for (x, j, k) in placed {
                let mut home = None;
                for &i in &candidates {
                    if i == j || i == k {
                        continue;
                    }
                    host.remove_edge(x, i);
                    let trial = members[i] | 1 << x;
                    if host.coverage(trial) != host.vertex_mask() {
                        members[i] = trial;
                        home = Some(i);
                        break;
                    }
                    host.add_edge(x, i);
                }
                let i = home.ok_or(Error::NoEligibleHost(base_order[j], base_order[k]))?;
                gadgets.push(Gadget {
                    vertex: x,
                    pair: Some((j, k)),
                    part: i,
                });
            }
        }
        HStarCase::Case1Even | HStarCase::AllIsolates => {}
    }

    let mut w_vertices = Vec::with_capacity(t);
    for _ in 0..t {
        let w = host.push_vertex()?;
        for v in 0..w {
            host.add_edge(w, v);
        }
        w_vertices.push(w);
    }

    let hn = host.n();
    let mut parts: Vec<VertexSet> = members
        .iter()
        .map(|&m| VertexSet::new(m, hn))
        .collect::<Result<_>>()?;
    for &w in &w_vertices {
        parts.push(VertexSet::new(1 << w, hn)?);
    }
    let pi_star = Partition::new(hn, parts)?;

    let mut target_to_part = vec![0; g.n()];
    for (a, &orig) in d.non_isolated.iter().enumerate() {
        target_to_part[orig] = position[a];
    }
    for (r, &orig) in d.isolates.iter().enumerate() {
        target_to_part[orig] = n + r;
    }

    Ok(HStarResult {
        actual_order: host.n(),
        actual_size: host.m(),
        host,
        pi_star,
        case_tag,
        matching,
        gadgets,
        w_vertices,
        base_order: base_order.iter().map(|&a| d.non_isolated[a]).collect(),
        target_to_part,
        predicted,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub partition_valid: bool,
    /// Coalition pairs of π* equal the edges of G under the part↔vertex map.
    pub cg_matches: bool,
    pub iso_matches: bool,
    /// Order and verbatim table size both match.
    pub order_size_match_table: bool,
    /// Order and corrected table size both match.
    pub corrected_size_match: bool,
    pub violations: Vec<String>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.partition_valid && self.cg_matches && self.corrected_size_match
    }
}

pub fn validate_hstar(g: &Graph, r: &HStarResult) -> AuditReport {
    validate_hstar_with(g, r, &Limits::default())
}

pub fn validate_hstar_with(g: &Graph, r: &HStarResult, limits: &Limits) -> AuditReport {
    let mut violations = Vec::new();
    let base_parts = r.pi_star.len().saturating_sub(r.w_vertices.len());
    let part_name = |i: usize| -> String {
        match r.target_to_part.iter().position(|&p| p == i) {
            Some(v) if i < base_parts => format!("V[{v}]"),
            Some(v) => format!("W[{v}]"),
            None => format!("part {i}"),
        }
    };

    let assessment = match assess_partition(&r.host, &r.pi_star) {
        Ok(a) => a,
        Err(e) => {
            violations.push(format!("pi* is not a partition of the host: {e}"));
            return AuditReport {
                partition_valid: false,
                cg_matches: false,
                iso_matches: false,
                order_size_match_table: false,
                corrected_size_match: false,
                violations,
            };
        }
    };
    for (i, class) in assessment.part_class.iter().enumerate() {
        let members = r.pi_star.part(i);
        match class {
            PartClass::InvalidDominatingNonSingleton => violations.push(format!(
                "part {} = {{{members}}} is dominating but not a singleton",
                part_name(i)
            )),
            PartClass::OrphanNonDominating => violations.push(format!(
                "part {} = {{{members}}} has no coalition partner",
                part_name(i)
            )),
            _ => {}
        }
    }

    let k = r.pi_star.len();
    let cg = Graph::from_edges(k, &assessment.coalition_pairs).expect("pairs within range");
    let mut cg_matches = k == g.n();
    if cg_matches {
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                let (px, py) = (r.target_to_part[x], r.target_to_part[y]);
                let want = g.has_edge(x, y);
                if cg.has_edge(px, py) != want {
                    cg_matches = false;
                    violations.push(format!(
                        "target {} {x}-{y} but parts {} and {} {}",
                        if want { "has edge" } else { "lacks edge" },
                        part_name(px),
                        part_name(py),
                        if want { "are not coalition partners" } else { "form a coalition" },
                    ));
                }
            }
        }
    } else {
        violations.push(format!("pi* has {k} parts but the target has {} vertices", g.n()));
    }

    let iso_matches = cg_matches
        || match are_isomorphic_with(&cg, g, limits) {
            Ok(b) => b,
            Err(e) => {
                violations.push(format!("isomorphism check skipped: {e}"));
                false
            }
        };

    let order_ok = r.actual_order == r.predicted.order;
    if !order_ok {
        violations.push(format!(
            "order {} differs from predicted {}",
            r.actual_order, r.predicted.order
        ));
    }
    let order_size_match_table = order_ok && r.actual_size == r.predicted.size_verbatim;
    let corrected_size_match = order_ok && r.actual_size == r.predicted.size_corrected;
    if r.actual_size != r.predicted.size_corrected {
        violations.push(format!(
            "size {} differs from corrected prediction {}",
            r.actual_size, r.predicted.size_corrected
        ));
    }

    if r.case_tag == HStarCase::Case2 {
        let hn = r.host.n();
        for b in 0..r.base_order.len() {
            if r.host.degree(b) == hn - 1 {
                violations.push(format!("base vertex {b} is full in the host"));
            }
        }
    }

    AuditReport {
        partition_valid: assessment.valid,
        cg_matches,
        iso_matches,
        order_size_match_table,
        corrected_size_match,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn with_isolates(g: Graph, t: usize) -> Graph {
        g.union(&Graph::empty(t).unwrap()).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_target(&with_isolates(fam("cycle:4"), 1));
        assert_eq!((d.n, d.t, d.m_bar()), (4, 1, 2));
        let d = decompose_target(&fam("complete:4"));
        assert_eq!((d.n, d.t), (4, 0));
        let d = decompose_target(&Graph::empty(3).unwrap());
        assert_eq!((d.n, d.t), (0, 3));
        assert_eq!(d.case(), HStarCase::AllIsolates);
    }

    #[test]
    fn decompose_keeps_relative_order() {
        // isolate in the middle
        let g = Graph::from_edges(4, &[(0, 3), (2, 3)]).unwrap();
        let d = decompose_target(&g);
        assert_eq!(d.non_isolated, vec![0, 2, 3]);
        assert_eq!(d.isolates, vec![1]);
        assert_eq!(d.g_prime.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn table_rows() {
        let p = predicted_metrics(&decompose_target(&fam("complete:4"))).unwrap();
        assert_eq!((p.order, p.size_verbatim), (4, 4));
        let p = predicted_metrics(&decompose_target(&with_isolates(fam("complete:3"), 1))).unwrap();
        assert_eq!((p.order, p.size_verbatim), (5, 7));
        let p = predicted_metrics(&decompose_target(&with_isolates(fam("complete:2"), 2))).unwrap();
        assert_eq!((p.size_verbatim, p.size_corrected), (6, 5));
        let p = predicted_metrics(&decompose_target(&fam("cycle:4"))).unwrap();
        assert_eq!((p.order, p.size_verbatim), (6, 6));
    }

    #[test]
    fn k2_plus_two_isolates_by_hand() {
        // empty base on two vertices plus two universal vertices: 1 + 4 edges
        let r = build_hstar(&with_isolates(fam("complete:2"), 2)).unwrap();
        assert_eq!(r.actual_size, 5);
        assert_eq!(r.host.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k4_gives_c4_host() {
        let g = fam("complete:4");
        let r = build_hstar(&g).unwrap();
        assert_eq!(r.case_tag, HStarCase::Case1Even);
        assert!(crate::graph::are_isomorphic(&r.host, &fam("cycle:4")).unwrap());
        assert_eq!(r.pi_star, Partition::singletons(4));
        let a = validate_hstar(&g, &r);
        assert!(a.partition_valid && a.cg_matches, "{:?}", a.violations);
    }

    #[test]
    fn c4_target() {
        let g = fam("cycle:4");
        let r = build_hstar(&g).unwrap();
        assert_eq!(r.case_tag, HStarCase::Case2);
        assert_eq!((r.actual_order, r.actual_size), (6, 6));
        assert_eq!(r.gadgets.len(), 2);
        let a = validate_hstar(&g, &r);
        assert!(a.partition_valid && a.cg_matches && a.corrected_size_match, "{:?}", a.violations);
    }

    #[test]
    fn case1_odd_part_dominates() {
        let g = with_isolates(fam("complete:3"), 1);
        let r = build_hstar(&g).unwrap();
        assert_eq!(r.case_tag, HStarCase::Case1Odd);
        let u = r.gadgets[0];
        assert_eq!(u.part, 0);
        let a = validate_hstar(&g, &r);
        assert!(!a.partition_valid);
        assert!(
            a.violations.iter().any(|v| v.contains("V[0] = {0,3} is dominating")),
            "{:?}",
            a.violations
        );
    }

    #[test]
    fn all_isolates() {
        let g = Graph::empty(3).unwrap();
        let r = build_hstar(&g).unwrap();
        assert_eq!(r.host, Graph::complete(3).unwrap());
        let a = validate_hstar(&g, &r);
        assert!(a.partition_valid && a.cg_matches && a.corrected_size_match);
    }

    #[test]
    fn near_complete_even_needs_relabel() {
        // K_4 minus the edge {2,3}: both non-full vertices would share a
        // matching pair under the identity labeling
        let mut g = Graph::complete(4).unwrap();
        g.remove_edge(2, 3);
        let r = build_hstar(&g).unwrap();
        let a = validate_hstar(&g, &r);
        assert!(a.partition_valid && a.cg_matches, "{:?}", a.violations);
    }

    #[test]
    fn p3_gadget_becomes_isolated_in_base() {
        let g = fam("path:3");
        let r = build_hstar(&g).unwrap();
        let x = r.gadgets[0].vertex;
        assert_eq!(r.host.degree(x), 0);
        let a = validate_hstar(&g, &r);
        assert!(a.partition_valid && a.cg_matches, "{:?}", a.violations);
    }
}
