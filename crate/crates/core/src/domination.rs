//! Dominating sets and the classical invariants built on them.

use crate::graph::{bits, Graph, VertexSet};
use crate::limits::{check_cap, Limits};
use crate::partition::Partition;
use crate::{Error, Result};

/// `true` iff the closed neighborhoods of `mask` cover every vertex. The
/// empty set dominates only the empty graph.
#[inline]
pub fn dominates(g: &Graph, mask: u64) -> bool {
    g.coverage(mask) == g.vertex_mask()
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_host(g, s)?;
    Ok(dominates(g, s.mask()))
}

fn check_host(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.host_n() != g.n() {
        return Err(Error::HostMismatch {
            set_n: s.host_n(),
            graph_n: g.n(),
        });
    }
    Ok(())
}

/// Greedily drop the highest-index vertex whose removal keeps the set
/// dominating, until no vertex can be dropped.
pub fn shrink_to_minimal(g: &Graph, d: &VertexSet) -> Result<VertexSet> {
    check_host(g, d)?;
    if !dominates(g, d.mask()) {
        return Err(Error::NotDominating);
    }
    let mut mask = d.mask();
    'outer: loop {
        for v in (0..g.n()).rev() {
            if mask >> v & 1 == 1 && dominates(g, mask & !(1 << v)) {
                mask &= !(1 << v);
                continue 'outer;
            }
        }
        break;
    }
    Ok(VertexSet::new(mask, g.n()).expect("subset of a valid set"))
}

/// Split a minimal dominating set into its lowest vertex and the rest.
/// Both halves are non-dominating when the input is minimal.
pub fn split_dominating(g: &Graph, d: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    check_host(g, d)?;
    if !dominates(g, d.mask()) {
        return Err(Error::NotDominating);
    }
    if d.len() < 2 {
        return Err(Error::SplitTooSmall(d.len()));
    }
    let low = d.min().expect("nonempty");
    let a = VertexSet::new(1 << low, g.n())?;
    let b = d.without(low);
    if dominates(g, a.mask()) || dominates(g, b.mask()) {
        return Err(Error::NotMinimal);
    }
    Ok((a, b))
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with(g, &Limits::default())
}

pub fn independence_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    check_cap("independence number", g.n(), limits.search)?;
    let mut best = 0;
    mis(g, g.vertex_mask(), 0, &mut best);
    Ok(best)
}

fn mis(g: &Graph, cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // branch on the candidate with most candidate neighbors
    let v = bits(cand)
        .max_by_key(|&v| ((g.neighbors(v) & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("nonempty");
    if g.neighbors(v) & cand == 0 {
        // isolated within the candidates: always take it
        mis(g, cand & !(1 << v), size + 1, best);
        return;
    }
    mis(g, cand & !g.closed_neighbors(v), size + 1, best);
    mis(g, cand & !(1 << v), size, best);
}

/// Domatic number with a witness partition into dominating sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomaticResult {
    pub d: usize,
    pub witness: Partition,
}

pub fn domatic_number(g: &Graph) -> Result<DomaticResult> {
    domatic_number_with(g, &Limits::default())
}

/// Tries `k = δ + 1, δ, ..., 1` and returns the first feasible `k`.
pub fn domatic_number_with(g: &Graph, limits: &Limits) -> Result<DomaticResult> {
    check_cap("domatic number", g.n(), limits.domatic)?;
    let n = g.n();
    if n == 0 {
        return Ok(DomaticResult {
            d: 0,
            witness: Partition::new(0, Vec::new())?,
        });
    }
    let delta = g.min_degree().expect("n > 0");
    for k in (1..=delta + 1).rev() {
        let mut search = DomaticSearch {
            g,
            k,
            classes: vec![0; k],
            labels: vec![0; n],
        };
        if search.assign(0, 0) {
            let witness = Partition::from_labels(&search.labels)?;
            return Ok(DomaticResult { d: k, witness });
        }
    }
    unreachable!("the whole vertex set is always a dominating set")
}

struct DomaticSearch<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<u64>,
    labels: Vec<usize>,
}

impl DomaticSearch<'_> {
    /// Every class must still be able to dominate every vertex using its
    /// current members plus the unassigned vertices.
    fn feasible(&self, unassigned: u64) -> bool {
        self.classes.iter().all(|&c| {
            let avail = c | unassigned;
            (0..self.g.n()).all(|v| self.g.closed_neighbors(v) & avail != 0)
        })
    }

    fn assign(&mut self, v: usize, opened: usize) -> bool {
        let n = self.g.n();
        if v == n {
            return opened == self.k;
        }
        let unassigned = self.g.vertex_mask() & !((1u64 << (v + 1)) - 1);
        // open a fresh class first, then the existing ones in order
        let fresh = (opened < self.k).then_some(opened);
        let order = fresh.into_iter().chain(0..opened);
        for c in order {
            self.classes[c] |= 1 << v;
            self.labels[v] = c;
            let next_opened = opened.max(c + 1);
            if self.feasible(unassigned) && self.assign(v + 1, next_opened) {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        false
    }
}

/// n, m, f, δ, α and d of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantBundle {
    pub n: usize,
    pub m: usize,
    pub f: usize,
    pub delta: usize,
    pub alpha: usize,
    pub domatic_d: usize,
}

impl InvariantBundle {
    pub fn compute(g: &Graph, limits: &Limits) -> Result<Self> {
        Ok(InvariantBundle {
            n: g.n(),
            m: g.m(),
            f: g.full_count(),
            delta: g.min_degree().unwrap_or(0),
            alpha: independence_number_with(g, limits)?,
            domatic_d: domatic_number_with(g, limits)?.d,
        })
    }
}
