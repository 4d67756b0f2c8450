//! Coalitions, c-partitions, and exact coalition numbers and counts.
//!
//! A coalition is a pair of disjoint non-dominating sets whose union
//! dominates. A c-partition is a vertex partition in which every part is
//! either a singleton dominating set or a non-dominating set with at least
//! one coalition partner among the other parts. The coalition number is the
//! largest order of a c-partition; the coalition count is the largest
//! number of coalition pairs inside a single c-partition.

use std::fmt;

use crate::domination::{dominates, domatic_number_with, shrink_to_minimal, split_dominating, InvariantBundle};
use crate::graph::{bits, Graph, VertexSet};
use crate::limits::{check_cap, Limits};
use crate::partition::Partition;
use crate::{Error, Result};

pub fn forms_coalition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    for s in [a, b] {
        if s.host_n() != g.n() {
            return Err(Error::HostMismatch {
                set_n: s.host_n(),
                graph_n: g.n(),
            });
        }
    }
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
        return Err(Error::BadCoalitionOperands);
    }
    Ok(coalition_masks(g, a.mask(), b.mask()))
}

#[inline]
fn coalition_masks(g: &Graph, a: u64, b: u64) -> bool {
    let all = g.vertex_mask();
    let ca = g.coverage(a);
    let cb = g.coverage(b);
    ca != all && cb != all && ca | cb == all
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartClass {
    SingletonDominating,
    CoalitionMember,
    OrphanNonDominating,
    InvalidDominatingNonSingleton,
}

impl fmt::Display for PartClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartClass::SingletonDominating => "singleton_dominating",
            PartClass::CoalitionMember => "coalition_member",
            PartClass::OrphanNonDominating => "orphan_non_dominating",
            PartClass::InvalidDominatingNonSingleton => "invalid_dominating_non_singleton",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionAssessment {
    pub valid: bool,
    pub part_class: Vec<PartClass>,
    /// Unordered part-index pairs `(i, j)`, `i < j`, in lexicographic order.
    pub coalition_pairs: Vec<(usize, usize)>,
    pub pair_count: usize,
}

pub fn assess_partition(g: &Graph, p: &Partition) -> Result<PartitionAssessment> {
    p.check_host(g)?;
    let all = g.vertex_mask();
    let cover: Vec<u64> = p.parts().iter().map(|s| g.coverage(s.mask())).collect();
    let k = cover.len();
    let mut coalition_pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if cover[i] != all && cover[j] != all && cover[i] | cover[j] == all {
                coalition_pairs.push((i, j));
            }
        }
    }
    let mut has_partner = vec![false; k];
    for &(i, j) in &coalition_pairs {
        has_partner[i] = true;
        has_partner[j] = true;
    }
    let part_class: Vec<PartClass> = (0..k)
        .map(|i| match (cover[i] == all, p.part(i).len() == 1) {
            (true, true) => PartClass::SingletonDominating,
            (true, false) => PartClass::InvalidDominatingNonSingleton,
            (false, _) if has_partner[i] => PartClass::CoalitionMember,
            (false, _) => PartClass::OrphanNonDominating,
        })
        .collect();
    let valid = part_class
        .iter()
        .all(|c| matches!(c, PartClass::SingletonDominating | PartClass::CoalitionMember));
    Ok(PartitionAssessment {
        valid,
        part_class,
        pair_count: coalition_pairs.len(),
        coalition_pairs,
    })
}

/// Result of an exhaustive c-partition search. `value` is `None` when the
/// graph has no c-partition at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub value: Option<usize>,
    pub witness: Option<Partition>,
    pub partitions_examined: u64,
}

pub fn coalition_number(g: &Graph) -> Result<SearchOutcome> {
    coalition_number_with(g, &Limits::default())
}

pub fn coalition_number_with(g: &Graph, limits: &Limits) -> Result<SearchOutcome> {
    PartitionSearch::run(g, limits, Objective::Order)
}

pub fn coalition_count(g: &Graph) -> Result<SearchOutcome> {
    coalition_count_with(g, &Limits::default())
}

pub fn coalition_count_with(g: &Graph, limits: &Limits) -> Result<SearchOutcome> {
    PartitionSearch::run(g, limits, Objective::Pairs)
}

/// Every c-partition with exactly `order` parts, in restricted-growth order.
pub fn cpartitions_of_order(g: &Graph, order: usize, limits: &Limits) -> Result<Vec<Partition>> {
    check_cap("partition search", g.n(), limits.partition)?;
    let mut s = PartitionSearch::new(g, Objective::Collect(order));
    s.descend(0, 0);
    s.collected
        .iter()
        .map(|labels| Partition::from_labels(labels))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Objective {
    Order,
    Pairs,
    Collect(usize),
}

/// Depth-first walk over restricted growth strings. A part that becomes
/// dominating while holding two or more vertices can never be repaired by
/// adding vertices, so that branch is cut immediately.
struct PartitionSearch<'a> {
    g: &'a Graph,
    all: u64,
    objective: Objective,
    members: Vec<u64>,
    cover: Vec<u64>,
    labels: Vec<usize>,
    best: Option<usize>,
    best_labels: Vec<usize>,
    collected: Vec<Vec<usize>>,
    examined: u64,
}

impl<'a> PartitionSearch<'a> {
    fn new(g: &'a Graph, objective: Objective) -> Self {
        let n = g.n();
        PartitionSearch {
            g,
            all: g.vertex_mask(),
            objective,
            members: vec![0; n],
            cover: vec![0; n],
            labels: vec![0; n],
            best: None,
            best_labels: Vec::new(),
            collected: Vec::new(),
            examined: 0,
        }
    }

    fn run(g: &Graph, limits: &Limits, objective: Objective) -> Result<SearchOutcome> {
        check_cap("partition search", g.n(), limits.partition)?;
        let mut s = PartitionSearch::new(g, objective);
        s.descend(0, 0);
        let witness = match s.best {
            Some(_) => Some(Partition::from_labels(&s.best_labels)?),
            None => None,
        };
        Ok(SearchOutcome {
            value: s.best,
            witness,
            partitions_examined: s.examined,
        })
    }

    /// Highest objective value any completion could still reach.
    fn can_beat(&self, parts_after: usize, remaining: usize) -> bool {
        let top = parts_after + remaining;
        match (self.objective, self.best) {
            (Objective::Collect(s), _) => parts_after <= s && top >= s,
            (_, None) => true,
            (Objective::Order, Some(b)) => top > b,
            (Objective::Pairs, Some(b)) => top * top.saturating_sub(1) / 2 > b,
        }
    }

    fn descend(&mut self, v: usize, k: usize) {
        let n = self.g.n();
        if v == n {
            self.leaf(k);
            return;
        }
        let remaining = n - v - 1;
        for c in 0..=k {
            let parts_after = k.max(c + 1);
            if !self.can_beat(parts_after, remaining) {
                continue;
            }
            let (old_members, old_cover) = (self.members[c], self.cover[c]);
            self.members[c] |= 1 << v;
            self.cover[c] |= self.g.closed_neighbors(v);
            self.labels[v] = c;
            let dead = self.cover[c] == self.all && self.members[c].count_ones() >= 2;
            if !dead {
                self.descend(v + 1, parts_after);
            }
            self.members[c] = old_members;
            self.cover[c] = old_cover;
        }
    }

    fn leaf(&mut self, k: usize) {
        self.examined += 1;
        let all = self.all;
        let cover = &self.cover[..k];
        let mut partnered = 0u64;
        let mut pairs = 0usize;
        for i in 0..k {
            if cover[i] == all {
                continue;
            }
            for j in i + 1..k {
                if cover[j] != all && cover[i] | cover[j] == all {
                    partnered |= 1 << i | 1 << j;
                    pairs += 1;
                }
            }
        }
        let valid = (0..k).all(|i| cover[i] == all || partnered >> i & 1 == 1);
        if !valid {
            return;
        }
        let value = match self.objective {
            Objective::Order => k,
            Objective::Pairs => pairs,
            Objective::Collect(s) => {
                if k == s {
                    self.collected.push(self.labels.clone());
                }
                return;
            }
        };
        if self.best.is_none_or(|b| value > b) {
            self.best = Some(value);
            self.best_labels.clone_from(&self.labels);
        }
    }
}

/// Coalition graph of a c-partition: one vertex per part, edges between
/// coalition partners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionGraphResult {
    pub cg: Graph,
    pub part_labels: Vec<String>,
}

pub fn coalition_graph(g: &Graph, p: &Partition) -> Result<CoalitionGraphResult> {
    let a = assess_partition(g, p)?;
    if !a.valid {
        return Err(Error::NotCPartition);
    }
    let cg = Graph::from_edges(p.len(), &a.coalition_pairs)?;
    let part_labels = p.parts().iter().map(|s| format!("{{{s}}}")).collect();
    Ok(CoalitionGraphResult { cg, part_labels })
}

/// Whether the all-singletons partition is a c-partition.
pub fn is_sp_graph(g: &Graph) -> bool {
    let all = g.vertex_mask();
    let n = g.n();
    (0..n).all(|v| {
        let cv = g.closed_neighbors(v);
        cv == all
            || (0..n).any(|u| {
                let cu = g.closed_neighbors(u);
                u != v && cu != all && cu | cv == all
            })
    })
}

/// Builds a c-partition with at least `d(G) - f` coalition pairs from a
/// maximum domatic partition; returns it with that bound.
///
/// Full vertices become singleton parts. The domatic parts free of full
/// vertices are shrunk to minimal dominating sets and split in two, which
/// gives one coalition per part. Everything left over is folded into the
/// last such part before it is processed. If the last part is not minimal,
/// the leftover `W` outside its minimal core is kept as its own part when it
/// has a coalition partner and merged into the second half of the split
/// core otherwise.
pub fn cpartition_from_domatic(g: &Graph) -> Result<(Partition, usize)> {
    cpartition_from_domatic_with(g, &Limits::default())
}

pub fn cpartition_from_domatic_with(g: &Graph, limits: &Limits) -> Result<(Partition, usize)> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let dom = domatic_number_with(g, limits)?;
    let roles = g.roles();
    let full = roles.full.mask();
    let f = roles.full_count;
    let set = |m: u64| VertexSet::new(m, n).expect("mask within host");

    let mut parts: Vec<u64> = bits(full).map(|v| 1u64 << v).collect();
    let mut leftover = 0u64;
    let mut free_parts = Vec::new();
    for p in dom.witness.parts() {
        if p.mask() & full != 0 {
            leftover |= p.mask() & !full;
        } else {
            free_parts.push(p.mask());
        }
    }

    if let Some((&last, rest)) = free_parts.split_last() {
        for &q in rest {
            let core = shrink_to_minimal(g, &set(q))?;
            leftover |= q & !core.mask();
            let (a, b) = split_dominating(g, &core)?;
            parts.extend([a.mask(), b.mask()]);
        }
        let last = set(last | leftover);
        let core = shrink_to_minimal(g, &last)?;
        let (a, b) = split_dominating(g, &core)?;
        let w = last.mask() & !core.mask();
        if w == 0 {
            parts.extend([a.mask(), b.mask()]);
        } else {
            debug_assert!(!dominates(g, w));
            parts.push(a.mask());
            let w_partnered = parts
                .iter()
                .chain(std::iter::once(&b.mask()))
                .any(|&x| coalition_masks(g, w, x));
            if w_partnered {
                parts.extend([b.mask(), w]);
            } else {
                parts.push(b.mask() | w);
            }
        }
    } else {
        debug_assert_eq!(leftover, 0, "a nonempty non-full remainder dominates");
    }

    let p = Partition::from_masks(n, &parts)?;
    Ok((p, dom.d - f))
}

/// All exact invariants of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub invariants: InvariantBundle,
    pub domatic_witness: Partition,
    pub coalition_number: SearchOutcome,
    pub coalition_count: SearchOutcome,
}

pub fn analyze(g: &Graph, limits: &Limits) -> Result<Analysis> {
    Ok(Analysis {
        invariants: InvariantBundle::compute(g, limits)?,
        domatic_witness: domatic_number_with(g, limits)?.witness,
        coalition_number: coalition_number_with(g, limits)?,
        coalition_count: coalition_count_with(g, limits)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn set(g: &Graph, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied(), g.n()).unwrap()
    }

    #[test]
    fn coalition_examples() {
        let c4 = fam("cycle:4");
        assert!(forms_coalition(&c4, &set(&c4, &[0]), &set(&c4, &[1])).unwrap());
        let k3 = fam("complete:3");
        assert!(!forms_coalition(&k3, &set(&k3, &[0]), &set(&k3, &[1])).unwrap());
        let p6 = fam("path:6");
        assert!(forms_coalition(&p6, &set(&p6, &[1]), &set(&p6, &[4])).unwrap());
        assert!(forms_coalition(&p6, &set(&p6, &[4]), &set(&p6, &[1])).unwrap());
    }

    #[test]
    fn coalition_operand_errors() {
        let c4 = fam("cycle:4");
        assert_eq!(
            forms_coalition(&c4, &set(&c4, &[0, 1]), &set(&c4, &[1])),
            Err(Error::BadCoalitionOperands)
        );
        assert_eq!(
            forms_coalition(&c4, &VertexSet::empty(4), &set(&c4, &[1])),
            Err(Error::BadCoalitionOperands)
        );
    }

    #[test]
    fn assess_c4_singletons() {
        let c4 = fam("cycle:4");
        let a = assess_partition(&c4, &Partition::singletons(4)).unwrap();
        assert!(a.valid);
        assert_eq!(a.pair_count, 6);
    }

    #[test]
    fn assess_p6_examples() {
        let p6 = fam("path:6");
        let pi2 = Partition::parse("1|3|0,5|2|4", 6).unwrap();
        let a = assess_partition(&p6, &pi2).unwrap();
        assert!(a.valid);
        assert_eq!(a.pair_count, 3);

        let a = assess_partition(&p6, &Partition::singletons(6)).unwrap();
        assert!(!a.valid);
        assert_eq!(a.part_class[0], PartClass::OrphanNonDominating);
    }

    #[test]
    fn assess_flags_dominating_non_singleton() {
        let k3 = fam("complete:3");
        let a = assess_partition(&k3, &Partition::parse("0,1|2", 3).unwrap()).unwrap();
        assert!(!a.valid);
        assert_eq!(a.part_class[0], PartClass::InvalidDominatingNonSingleton);
        assert_eq!(a.part_class[1], PartClass::SingletonDominating);
    }

    #[test]
    fn assess_rejects_wrong_host() {
        let c4 = fam("cycle:4");
        assert!(assess_partition(&c4, &Partition::singletons(5)).is_err());
    }

    #[test]
    fn search_examples() {
        let c4 = fam("cycle:4");
        assert_eq!(coalition_number(&c4).unwrap().value, Some(4));
        assert_eq!(coalition_count(&c4).unwrap().value, Some(6));
        let k5 = fam("complete:5");
        assert_eq!(coalition_number(&k5).unwrap().value, Some(5));
        assert_eq!(coalition_count(&k5).unwrap().value, Some(0));
        let p6 = fam("path:6");
        assert_eq!(coalition_number(&p6).unwrap().value, Some(5));
        assert_eq!(coalition_count(&p6).unwrap().value, Some(5));
        let p4 = fam("path:4");
        assert_eq!(coalition_count(&p4).unwrap().value, Some(4));
        assert_eq!(coalition_number(&p4).unwrap().value, Some(4));
    }

    #[test]
    fn witnesses_reassess() {
        for name in ["cycle:5", "path:6", "star:5", "fpq:2,2,1", "cycle:6"] {
            let g = fam(name);
            for out in [coalition_number(&g).unwrap(), coalition_count(&g).unwrap()] {
                let w = out.witness.unwrap();
                let a = assess_partition(&g, &w).unwrap();
                assert!(a.valid);
                assert!(a.pair_count == out.value.unwrap() || w.len() == out.value.unwrap());
            }
        }
    }

    #[test]
    fn p6_count_witness_and_four_pair_partition() {
        let p6 = fam("path:6");
        let a = assess_partition(&p6, &Partition::parse("0,4|1,5|2|3", 6).unwrap()).unwrap();
        assert!(a.valid);
        assert_eq!(a.pair_count, 5);
        // another order-4 c-partition with only four pairs
        let a = assess_partition(&p6, &Partition::parse("1,3|5|0,2|4", 6).unwrap()).unwrap();
        assert!(a.valid);
        assert_eq!(a.pair_count, 4);
    }

    #[test]
    fn witness_is_least_restricted_growth_string() {
        // brute-force all labelings of C_5 and pick the first maximizer
        let g = fam("cycle:5");
        let out = coalition_number(&g).unwrap();
        let mut first = None;
        let mut best = 0;
        rgs(5, &mut vec![], &mut |labels| {
            let p = Partition::from_labels(labels).unwrap();
            let a = assess_partition(&g, &p).unwrap();
            if a.valid && p.len() > best {
                best = p.len();
                first = Some(p);
            }
        });
        assert_eq!(out.value, Some(best));
        assert_eq!(out.witness, first);
    }

    fn rgs(n: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == n {
            f(cur);
            return;
        }
        let top = cur.iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..=top {
            cur.push(c);
            rgs(n, cur, f);
            cur.pop();
        }
    }

    #[test]
    fn coalition_graph_examples() {
        let c4 = fam("cycle:4");
        let r = coalition_graph(&c4, &Partition::singletons(4)).unwrap();
        assert_eq!(r.cg, Graph::complete(4).unwrap());

        let k3 = fam("complete:3");
        let r = coalition_graph(&k3, &Partition::singletons(3)).unwrap();
        assert_eq!((r.cg.n(), r.cg.m()), (3, 0));

        let p6 = fam("path:6");
        let p = Partition::parse("1|3|0,5|2|4", 6).unwrap();
        let r = coalition_graph(&p6, &p).unwrap();
        assert_eq!(r.cg.n(), 5);
        let mut edges: Vec<(String, String)> = r
            .cg
            .edges()
            .into_iter()
            .map(|(i, j)| (r.part_labels[i].clone(), r.part_labels[j].clone()))
            .collect();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("{0,5}".to_string(), "{2}".to_string()),
                ("{0,5}".to_string(), "{3}".to_string()),
                ("{1}".to_string(), "{4}".to_string()),
            ]
        );

        assert_eq!(
            coalition_graph(&p6, &Partition::singletons(6)),
            Err(Error::NotCPartition)
        );
    }

    #[test]
    fn sp_graph_examples() {
        assert!(is_sp_graph(&fam("cycle:4")));
        assert!(!is_sp_graph(&fam("path:6")));
        assert!(is_sp_graph(&fam("complete:5")));
    }

    #[test]
    fn domatic_construction_examples() {
        let c4 = fam("cycle:4");
        let (p, bound) = cpartition_from_domatic(&c4).unwrap();
        assert_eq!(p.to_string(), "0|1|2|3");
        assert_eq!(bound, 2);

        let star = fam("star:5");
        let (p, bound) = cpartition_from_domatic(&star).unwrap();
        assert_eq!(bound, 1);
        let a = assess_partition(&star, &p).unwrap();
        assert!(a.valid && a.pair_count >= 1);

        let k5 = fam("complete:5");
        let (p, bound) = cpartition_from_domatic(&k5).unwrap();
        assert_eq!(bound, 0);
        assert_eq!(p, Partition::singletons(5));
        assert_eq!(assess_partition(&k5, &p).unwrap().pair_count, 0);

        assert_eq!(
            cpartition_from_domatic(&Graph::from_edges(3, &[(0, 1)]).unwrap()),
            Err(Error::IsolatedVertex(2))
        );
    }

    #[test]
    fn collect_max_order() {
        let star = fam("star:4");
        let c = coalition_number(&star).unwrap().value.unwrap();
        let all = cpartitions_of_order(&star, c, &Limits::default()).unwrap();
        assert!(!all.is_empty());
        for p in &all {
            assert_eq!(p.len(), c);
            assert!(assess_partition(&star, p).unwrap().valid);
        }
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(13).unwrap();
        assert!(matches!(coalition_number(&g), Err(Error::CapExceeded { .. })));
    }
}
