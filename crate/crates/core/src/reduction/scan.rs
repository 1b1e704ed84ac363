//! Batch drivers over all elements or coweights in a range.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{
    verify_coxeter_translation, verify_finite_coxeter_part, CoxeterTranslationReport,
    FiniteCoxeterPartReport, Reducer, Strategy,
};
use crate::affine_weyl::{to_i64, AffineElement, AffineWeyl};
use crate::bset::IsocrystalClass;
use crate::error::Result;
use crate::qlaurent::QLaurent;
use crate::root_datum::RootDatum;

#[derive(Clone, Debug, Default, Serialize)]
pub struct ClassIdentitySummary {
    pub instances: usize,
    pub failures: Vec<String>,
}

/// Class statistics of one element: `(Psi(end), l(end))` to summed path weight.
pub type ClassStats = BTreeMap<(IsocrystalClass, usize), QLaurent>;

/// Checks the class polynomial identity for every element of length at most
/// `max_len`, returning the per-element class statistics as well.
pub fn class_identity_scan(
    aw: &AffineWeyl,
    max_len: usize,
    strategy: Strategy,
    budget: usize,
) -> Result<(ClassIdentitySummary, Vec<ClassStats>)> {
    let r = Reducer::new(aw, strategy, budget);
    let mut summary = ClassIdentitySummary::default();
    let mut stats = Vec::new();
    for w in aw.elements_up_to_length(max_len, budget)? {
        summary.instances += 1;
        if !r.verify_class_identity(&w)? {
            summary.failures.push(aw.format(&w));
        }
        stats.push(r.class_statistics(&w)?);
    }
    Ok((summary, stats))
}

/// Dominant coweights with `<mu, 2 rho>` at most `bound`, in fundamental coordinates.
pub fn dominant_coweights(d: &RootDatum, bound: i64) -> Vec<Vec<i64>> {
    let n = d.rank();
    let weights: Vec<i64> = (0..n)
        .map(|i| to_i64(&d.pair_two_rho(&d.fundamental_coweight(i))))
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, left: i64, w: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == w.len() {
            out.push(cur.clone());
            return;
        }
        let mut k = 0;
        while k * w[i] <= left {
            cur[i] = k;
            rec(i + 1, left - k * w[i], w, cur, out);
            k += 1;
        }
        cur[i] = 0;
    }
    rec(0, bound, &weights, &mut cur, &mut out);
    out
}

/// All `(mu, c)` with `<mu, 2 rho> <= bound`, `c` sigma-Coxeter and `t^mu c`
/// minimal in its left `W`-coset.
pub fn coxeter_translation_instances(
    aw: &AffineWeyl,
    bound: i64,
) -> Vec<(Vec<i64>, AffineElement)> {
    let mut out = Vec::new();
    let coxeter = aw.sigma_coxeter_elements();
    for mu in dominant_coweights(aw.datum(), bound) {
        for c in &coxeter {
            let w = AffineElement {
                trans: mu.clone(),
                fin: c.clone(),
            };
            if aw.is_minimal_in_left_coset(&w) {
                out.push((mu.clone(), w));
            }
        }
    }
    out
}

pub fn coxeter_translation_scan(
    aw: &AffineWeyl,
    bound: i64,
    strategy: Strategy,
    budget: usize,
) -> Result<Vec<CoxeterTranslationReport>> {
    let r = Reducer::new(aw, strategy, budget);
    coxeter_translation_instances(aw, bound)
        .into_iter()
        .map(|(mu, w)| verify_coxeter_translation(&r, &mu, &w.fin))
        .collect()
}

/// Elements of length at most `max_len` whose finite part `eta_sigma` is a
/// partial sigma-Coxeter element.
pub fn finite_coxeter_part_elements(
    aw: &AffineWeyl,
    max_len: usize,
    budget: usize,
) -> Result<Vec<AffineElement>> {
    let mut out = Vec::new();
    for w in aw.elements_up_to_length(max_len, budget)? {
        if aw.is_partial_sigma_coxeter(&aw.eta_sigma(&w)?) {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn finite_coxeter_part_scan(
    aw: &AffineWeyl,
    max_len: usize,
    strategy: Strategy,
    budget: usize,
) -> Result<Vec<FiniteCoxeterPartReport>> {
    let r = Reducer::new(aw, strategy, budget);
    finite_coxeter_part_elements(aw, max_len, budget)?
        .iter()
        .map(|w| verify_finite_coxeter_part(&r, w))
        .collect()
}

/// Convenience constructor used by the drivers.
pub fn group_of(d: RootDatum) -> AffineWeyl {
    AffineWeyl::new(Arc::new(d))
}
