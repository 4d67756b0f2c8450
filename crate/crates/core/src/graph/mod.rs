//! Simple undirected graphs on at most [`MAX_N`] vertices with bit-mask
//! adjacency rows.

mod codec;
mod enumerate;
mod family;
mod iso;

pub use codec::{encode_graph, parse_graph, Format};
pub use enumerate::{edge_pairs, enumerate_graphs, enumerate_graphs_with, EnumMode};
pub use family::{make_family, FamilySpec};
pub use iso::{are_isomorphic, are_isomorphic_with, canonical_certificate, canonical_form, canonical_form_with};

use std::fmt;

use crate::limits::MAX_N;
use crate::{Error, Result};

/// Bit mask with the low `n` bits set.
#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Labeled simple undirected graph. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::CapExceeded {
                what: "graph order",
                n,
                cap: MAX_N,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// Build from an edge list. Repeated edges are merged; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let g = Graph { n, adj };
        if n > MAX_N {
            return Err(Error::CapExceeded {
                what: "graph order",
                n,
                cap: MAX_N,
            });
        }
        for u in 0..n {
            if g.adj[u] & !low_bits(n) != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - g.adj[u].leading_zeros() as usize,
                    n,
                });
            }
            if g.has_edge(u, u) {
                return Err(Error::InvalidEdge(u, u));
            }
            for v in bits(g.adj[u]) {
                if !g.has_edge(v, u) {
                    return Err(Error::InvalidEdge(u, v));
                }
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Append an isolated vertex and return its index.
    pub(crate) fn push_vertex(&mut self) -> Result<usize> {
        if self.n + 1 > MAX_N {
            return Err(Error::CapExceeded {
                what: "graph order",
                n: self.n + 1,
                cap: MAX_N,
            });
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Open neighborhood N(v) as a mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood N[v] as a mask.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet {
            mask: self.vertex_mask(),
            host_n: self.n,
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Union of closed neighborhoods of the vertices in `mask`.
    #[inline]
    pub fn coverage(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |acc, v| acc | self.closed_neighbors(v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect(),
        }
    }

    /// `perm[v]` is the new label of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { n: k, adj }
    }

    /// Disjoint union; `other` is shifted to `self.n()..`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, join: bool) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_N {
            return Err(Error::CapExceeded {
                what: "combined graph order",
                n,
                cap: MAX_N,
            });
        }
        let shift = self.n;
        let left = low_bits(self.n);
        let right = low_bits(other.n) << shift;
        let mut adj = Vec::with_capacity(n);
        for v in 0..self.n {
            adj.push(self.adj[v] | if join { right } else { 0 });
        }
        for v in 0..other.n {
            adj.push(other.adj[v] << shift | if join { left } else { 0 });
        }
        Ok(Graph { n, adj })
    }

    pub fn roles(&self) -> VertexRoles {
        let degrees = self.degrees();
        let pick = |want: usize| -> VertexSet {
            let mask = degrees
                .iter()
                .enumerate()
                .filter(|(_, &d)| d == want)
                .fold(0u64, |acc, (v, _)| acc | 1 << v);
            VertexSet {
                mask,
                host_n: self.n,
            }
        };
        let full = if self.n == 0 {
            VertexSet::empty(0)
        } else {
            pick(self.n - 1)
        };
        VertexRoles {
            full_count: full.len(),
            full,
            isolated: pick(0),
            pendant: pick(1),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            degrees,
        }
    }

    /// Number of vertices of degree `n - 1`.
    pub fn full_count(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).count()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Free functions matching the operation names used elsewhere.
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Union,
    Join,
}

pub fn combine(g1: &Graph, g2: &Graph, mode: CombineMode) -> Result<Graph> {
    g1.combine(g2, mode == CombineMode::Join)
}

pub fn vertex_roles(g: &Graph) -> VertexRoles {
    g.roles()
}

/// A subset of a host graph's vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: u64,
    host_n: usize,
}

impl VertexSet {
    pub fn new(mask: u64, host_n: usize) -> Result<Self> {
        if mask & !low_bits(host_n) != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 63 - mask.leading_zeros() as usize,
                n: host_n,
            });
        }
        Ok(VertexSet { mask, host_n })
    }

    pub(crate) fn from_mask_unchecked(mask: u64, host_n: usize) -> Self {
        debug_assert!(mask & !low_bits(host_n) == 0);
        VertexSet { mask, host_n }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I, host_n: usize) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= host_n {
                return Err(Error::VertexOutOfRange { vertex: v, n: host_n });
            }
            mask |= 1 << v;
        }
        Ok(VertexSet { mask, host_n })
    }

    pub fn empty(host_n: usize) -> Self {
        VertexSet { mask: 0, host_n }
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn host_n(&self) -> usize {
        self.host_n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.mask >> v & 1 == 1
    }

    pub fn min(&self) -> Option<usize> {
        (self.mask != 0).then(|| self.mask.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits(self.mask)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet {
            mask: self.mask | other.mask,
            host_n: self.host_n,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet {
            mask: self.mask & !other.mask,
            host_n: self.host_n,
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.mask & other.mask == 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn with(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.host_n);
        VertexSet {
            mask: self.mask | 1 << v,
            host_n: self.host_n,
        }
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet {
            mask: self.mask & !(1 << v),
            host_n: self.host_n,
        }
    }
}

/// Members joined by commas, e.g. `0,5`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Degree-based vertex classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRoles {
    pub full: VertexSet,
    pub isolated: VertexSet,
    pub pendant: VertexSet,
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub full_count: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn complement_of_c4_is_two_k2() {
        let c = complement(&cycle(4));
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(complement(&Graph::complete(5).unwrap()).m(), 0);
        let p6 = path(6);
        assert_eq!(complement(&complement(&p6)), p6);
    }

    #[test]
    fn union_and_join() {
        let k2 = Graph::complete(2).unwrap();
        let k1 = Graph::complete(1).unwrap();
        let u = combine(&k2, &k1, CombineMode::Union).unwrap();
        assert_eq!((u.n(), u.m()), (3, 1));

        let star = combine(&k1, &Graph::empty(3).unwrap(), CombineMode::Join).unwrap();
        assert_eq!(star.edges(), vec![(0, 1), (0, 2), (0, 3)]);

        let j = combine(&k2, &Graph::empty(2).unwrap(), CombineMode::Join).unwrap();
        assert_eq!(j.m(), 5);
    }

    #[test]
    fn combine_over_cap_fails() {
        let big = Graph::empty(20).unwrap();
        assert!(matches!(
            big.union(&big),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn roles_of_small_graphs() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = vertex_roles(&star);
        assert_eq!(r.full.to_vec(), vec![0]);
        assert_eq!(r.pendant.to_vec(), vec![1, 2, 3, 4]);
        assert_eq!((r.min_degree, r.full_count), (1, 1));

        let r = vertex_roles(&cycle(4));
        assert!(r.full.is_empty());
        assert_eq!((r.full_count, r.min_degree), (0, 2));

        let k2k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let r = vertex_roles(&k2k1);
        assert_eq!(r.isolated.to_vec(), vec![2]);
        assert_eq!(r.pendant.to_vec(), vec![0, 1]);
        assert_eq!(r.full_count, 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::InvalidEdge(1, 1)));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(VertexSet::new(0b1000, 3).is_err());
    }

    #[test]
    fn relabel_and_induced() {
        let p = path(4);
        let r = p.relabel(&[3, 2, 1, 0]);
        assert_eq!(r, p);
        let sub = cycle(5).induced(&[0, 2, 3]);
        assert_eq!(sub.edges(), vec![(1, 2)]);
    }
}
