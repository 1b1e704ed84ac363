//! The graph identity: for a finite graph `X` and `Y` a subset of its vertices,
//! `sum_{J in A(Y, X)} (q-1)^{#(J - Y cap J°)} q^{#(Y cap J°)} = q^{#X}`, where
//! `A(Y, X)` collects the `J` such that no connected component of `X - J` lies
//! in `Y`, and `J°` is the set of vertices of `J` with no neighbour outside `J`.

use rand::Rng;

use crate::error::{contract, Result};
use crate::qlaurent::QLaurent;

/// A simple graph on at most 32 vertices, as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > 32 {
            return contract("graphs are limited to 32 vertices");
        }
        let mut adj = vec![0u32; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return contract(format!("bad edge ({a}, {b})"));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { adj })
    }

    /// Each edge is present with probability `p`.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut adj = vec![0u32; n];
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        Graph { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| bits(self.adj[a] >> a).map(move |d| (a, a + d)))
            .collect()
    }

    fn all(&self) -> u32 {
        if self.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.len()) - 1
        }
    }

    /// Connected components of the subgraph induced on `mask`.
    pub fn components(&self, mask: u32) -> Vec<u32> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            loop {
                let mut next = comp;
                for v in bits(comp) {
                    next |= self.adj[v] & mask;
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

/// The left-hand side of the graph identity for `Y` given as a bitmask.
pub fn graph_identity(g: &Graph, y: u32) -> Result<QLaurent> {
    let all = g.all();
    if y & !all != 0 {
        return contract("Y is not a subset of X");
    }
    let mut total = QLaurent::zero();
    for j in 0..=all {
        if j & !all != 0 {
            continue;
        }
        let out = all & !j;
        if g.components(out).iter().any(|&c| c & !y == 0) {
            continue;
        }
        let interior = bits(j)
            .filter(|&v| g.adj[v] & out == 0)
            .fold(0u32, |m, v| m | 1 << v);
        let yj = (y & interior).count_ones();
        total = total + QLaurent::path_weight(j.count_ones() - yj, yj as i64);
        if j == all {
            break;
        }
    }
    Ok(total)
}

pub fn verify_graph_identity(g: &Graph, y: u32) -> Result<bool> {
    Ok(graph_identity(g, y)? == QLaurent::monomial(g.len() as i64))
}
