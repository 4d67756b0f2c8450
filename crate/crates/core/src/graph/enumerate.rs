use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use super::iso::canonical_bits;
use super::Graph;
use crate::limits::{check_cap, Limits};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumMode {
    /// Every labeled graph, by increasing edge mask.
    Labeled,
    /// One canonical representative per isomorphism class, by increasing
    /// certificate.
    UpToIsomorphism,
}

impl FromStr for EnumMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "labeled" => Ok(EnumMode::Labeled),
            "iso" | "up_to_isomorphism" => Ok(EnumMode::UpToIsomorphism),
            other => Err(Error::parse("mode", format!("unknown enumeration mode {other:?}"))),
        }
    }
}

impl std::fmt::Display for EnumMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EnumMode::Labeled => "labeled",
            EnumMode::UpToIsomorphism => "iso",
        })
    }
}

/// Vertex pairs in graph6 column order; bit `i` of a labeled edge mask is
/// pair `i`.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

pub fn enumerate_graphs(n: usize, mode: EnumMode) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    enumerate_graphs_with(n, mode, &Limits::default())
}

pub fn enumerate_graphs_with(
    n: usize,
    mode: EnumMode,
    limits: &Limits,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    check_cap("enumeration", n, limits.enumeration)?;
    match mode {
        EnumMode::Labeled => {
            let pairs = edge_pairs(n);
            if pairs.len() >= 64 {
                return Err(Error::CapExceeded {
                    what: "labeled enumeration",
                    n,
                    cap: 11,
                });
            }
            let total = 1u64 << pairs.len();
            Ok(Box::new((0..total).map(move |mask| {
                let mut g = Graph::empty(n).expect("n within cap");
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                g
            })))
        }
        EnumMode::UpToIsomorphism => {
            let classes = iso_classes(n);
            Ok(Box::new((0..classes.len()).map(move |i| classes[i].clone())))
        }
    }
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Canonical representatives on `n` vertices, memoized per order. Built by
/// extending every class on `n - 1` vertices with a new vertex in all
/// possible ways and keeping one graph per certificate.
fn iso_classes(n: usize) -> Arc<Vec<Graph>> {
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let out = if n == 0 {
        vec![Graph::empty(0).unwrap()]
    } else {
        let smaller = iso_classes(n - 1);
        let mut found: BTreeMap<u128, Graph> = BTreeMap::new();
        for base in smaller.iter() {
            for nbrs in 0u64..1 << (n - 1) {
                let mut adj: Vec<u64> = (0..n - 1)
                    .map(|v| base.neighbors(v) | (nbrs >> v & 1) << (n - 1))
                    .collect();
                adj.push(nbrs);
                let g = Graph::from_adjacency(adj).expect("valid extension");
                let (cert, order) = canonical_bits(&g);
                found.entry(cert).or_insert_with(|| {
                    let mut perm = vec![0; n];
                    for (pos, &v) in order.iter().enumerate() {
                        perm[v] = pos;
                    }
                    g.relabel(&perm)
                });
            }
        }
        found.into_values().collect()
    };
    let out = Arc::new(out);
    cache().lock().unwrap().insert(n, out.clone());
    out
}
