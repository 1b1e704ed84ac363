use serde::Serialize;

use super::{enumerate_indec, BSet};
use crate::error::Result;
use crate::qlaurent::QLaurent;
use crate::root_datum::{NodeSet, RootDatum};
use std::sync::Arc;

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub terms: usize,
    pub sum: QLaurent,
    pub residual: QLaurent,
    pub ok: bool,
    /// Whether `mu` is non-central on every sigma-stable simple factor, the
    /// case in which the identity is expected to hold.
    pub essentially_non_central: bool,
}

/// Sum of the identity terms over the indecomposable classes of `b`.
pub fn identity_sum(b: &BSet) -> QLaurent {
    b.classes()
        .iter()
        .filter(|c| b.is_indecomposable(&c.newton))
        .map(|c| b.identity_term(&c.newton))
        .sum()
}

pub fn verify_identity(datum: &Arc<RootDatum>, mu: &[i64]) -> Result<IdentityReport> {
    let b = enumerate_indec(datum, mu)?;
    let sum = identity_sum(&b);
    let residual = &sum - &QLaurent::one();
    Ok(IdentityReport {
        terms: b.len(),
        ok: residual.is_zero(),
        sum,
        residual,
        essentially_non_central: essentially_non_central(datum, mu),
    })
}

/// Connected components of the Dynkin subdiagram on `nodes`, merged along sigma.
pub fn sigma_components(datum: &RootDatum, nodes: NodeSet) -> Vec<NodeSet> {
    let mut seen = NodeSet::EMPTY;
    let mut out = Vec::new();
    for start in nodes.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = NodeSet::single(start);
        loop {
            let mut next = datum.sigma_closure(comp);
            for i in comp.iter() {
                next = next.union(datum.neighbours(i));
            }
            next = next.intersection(nodes);
            if next == comp {
                break;
            }
            comp = next;
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Whether the coweight with fundamental coordinates `mu` is non-central on
/// every sigma-orbit of connected components of `nodes`.
pub fn essentially_non_central_on(datum: &RootDatum, mu: &[i64], nodes: NodeSet) -> bool {
    sigma_components(datum, nodes)
        .iter()
        .all(|f| f.iter().any(|i| mu[i] != 0))
}

pub fn essentially_non_central(datum: &RootDatum, mu: &[i64]) -> bool {
    essentially_non_central_on(datum, mu, datum.all_nodes())
}
