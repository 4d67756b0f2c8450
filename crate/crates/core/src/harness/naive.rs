//! Reference enumerator for coalition numbers and counts. Written
//! separately from the search in `coalition`: partitions are generated by
//! inserting each vertex into an existing block or a new one, and every
//! domination test walks an adjacency matrix directly.

use crate::graph::Graph;

pub struct NaiveValues {
    pub coalition_number: Option<usize>,
    pub coalition_count: Option<usize>,
}

fn dominating(adj: &[Vec<bool>], set: &[usize]) -> bool {
    (0..adj.len()).all(|v| set.contains(&v) || set.iter().any(|&u| adj[u][v]))
}

fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for v in 0..n {
        let mut next = Vec::with_capacity(out.len() * 2);
        for p in &out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(v);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![v]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Number of coalitions in `blocks` if it is a c-partition.
fn coalitions_if_valid(adj: &[Vec<bool>], blocks: &[Vec<usize>]) -> Option<usize> {
    let dom: Vec<bool> = blocks.iter().map(|b| dominating(adj, b)).collect();
    let mut count = 0;
    let mut partner = vec![false; blocks.len()];
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if dom[i] || dom[j] {
                continue;
            }
            let mut both = blocks[i].clone();
            both.extend_from_slice(&blocks[j]);
            if dominating(adj, &both) {
                count += 1;
                partner[i] = true;
                partner[j] = true;
            }
        }
    }
    for i in 0..blocks.len() {
        let ok = if dom[i] { blocks[i].len() == 1 } else { partner[i] };
        if !ok {
            return None;
        }
    }
    Some(count)
}

pub fn naive_coalition_values(g: &Graph) -> NaiveValues {
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut order: Option<usize> = None;
    let mut count: Option<usize> = None;
    for p in set_partitions(n) {
        if let Some(c) = coalitions_if_valid(&adj, &p) {
            order = Some(order.map_or(p.len(), |o| o.max(p.len())));
            count = Some(count.map_or(c, |o| o.max(c)));
        }
    }
    NaiveValues {
        coalition_number: order,
        coalition_count: count,
    }
}
