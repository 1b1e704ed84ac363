//! Kottwitz sets `B(G, mu)` through their Newton points, Hodge-Newton
//! (in)decomposability, and the combinatorial identities attached to them.

mod a_type;
mod graph;
mod identity;
mod levi;
pub mod scan;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Signed;
use serde::Serialize;

pub use a_type::{a_type_terms, verify_a_identity, AIdentityReport, ATerm};
pub use graph::{graph_identity, verify_graph_identity, Graph};
pub use identity::{
    essentially_non_central, essentially_non_central_on, identity_sum, sigma_components,
    verify_identity, IdentityReport,
};
pub use levi::{enumerate_levi, levi_embed, type_d_strata, LeviClass, TypeDStrata};
pub use scan::ScanMode;

use crate::error::{contract, Result};
use crate::linalg::{ceil_to_i64, Q};
use crate::qlaurent::QLaurent;
use crate::root_datum::{NodeSet, RationalVector, RootDatum};

/// A sigma-conjugacy class, recorded by its dominant Newton point and its
/// Kottwitz label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsocrystalClass {
    pub newton: RationalVector,
    pub kottwitz: u32,
}

/// `B(G, mu)` or its indecomposable part, sorted by Newton point.
#[derive(Clone, Debug)]
pub struct BSet {
    datum: Arc<RootDatum>,
    mu: Vec<i64>,
    mu_diamond: RationalVector,
    kottwitz: u32,
    classes: Vec<IsocrystalClass>,
}

/// Output record for one class.
#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub newton: RationalVector,
    pub kottwitz: u32,
    #[serde(rename = "I_nu")]
    pub i_nu: NodeSet,
    pub chai_length: i64,
    pub defect: i64,
}

fn checked_mu(datum: &RootDatum, mu: &[i64]) -> Result<RationalVector> {
    if mu.len() != datum.rank() {
        return contract(format!("coweight needs {} coordinates", datum.rank()));
    }
    if mu.iter().any(|&x| x < 0) {
        return contract("mu must be dominant");
    }
    datum.coweight(mu)
}

fn enumerate(datum: &Arc<RootDatum>, mu: &[i64], mode: ScanMode) -> Result<BSet> {
    let mu_v = checked_mu(datum, mu)?;
    let kottwitz = datum.kottwitz_of(&mu_v)?;
    let mu_diamond = datum.diamond(&mu_v);
    let newton = if datum.is_split() {
        scan::scan(&scan::ScanRequest {
            datum,
            mu: &mu_diamond,
            levi: datum.all_nodes(),
            mode,
            g_dominant: true,
        })?
    } else {
        let f = datum.fold_to_split()?;
        let mu_split = f.to_split(&mu_diamond)?;
        scan::scan(&scan::ScanRequest {
            datum: f.split(),
            mu: &mu_split,
            levi: f.split().all_nodes(),
            mode,
            g_dominant: true,
        })?
        .iter()
        .map(|v| f.from_split(v))
        .collect()
    };
    let mut classes: Vec<IsocrystalClass> = newton
        .into_iter()
        .map(|newton| IsocrystalClass { newton, kottwitz })
        .collect();
    classes.sort();
    Ok(BSet {
        datum: datum.clone(),
        mu: mu.to_vec(),
        mu_diamond,
        kottwitz,
        classes,
    })
}

/// All of `B(G, mu)`; `mu` is dominant, in fundamental-coweight coordinates.
pub fn enumerate_bset(datum: &Arc<RootDatum>, mu: &[i64]) -> Result<BSet> {
    enumerate(datum, mu, ScanMode::Full)
}

/// The Hodge-Newton indecomposable part of `B(G, mu)`.
pub fn enumerate_indec(datum: &Arc<RootDatum>, mu: &[i64]) -> Result<BSet> {
    enumerate(datum, mu, ScanMode::Indecomposable)
}

impl BSet {
    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn mu_diamond(&self) -> &RationalVector {
        &self.mu_diamond
    }

    pub fn kottwitz(&self) -> u32 {
        self.kottwitz
    }

    pub fn classes(&self) -> &[IsocrystalClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, nu: &RationalVector) -> bool {
        self.classes.binary_search_by(|c| c.newton.cmp(nu)).is_ok()
    }

    fn excess(&self, nu: &RationalVector) -> RationalVector {
        &self.mu_diamond - nu
    }

    pub fn level_set(&self, nu: &RationalVector) -> NodeSet {
        self.datum
            .newton_level_set(nu)
            .expect("Newton points are dominant")
    }

    pub fn is_indecomposable(&self, nu: &RationalVector) -> bool {
        let e = self.excess(nu);
        let i = self.level_set(nu);
        (0..self.datum.rank()).all(|j| i.contains(j) || e.coords[j].is_positive())
    }

    /// The unique `J` for which `nu` is `J`-irreducible: the support of `mu - nu`.
    pub fn irr_support(&self, nu: &RationalVector) -> NodeSet {
        self.excess(nu).positive_support()
    }

    pub fn is_irreducible(&self, nu: &RationalVector, j: NodeSet) -> bool {
        self.irr_support(nu) == j
    }

    pub fn partition_by_irr(&self) -> BTreeMap<NodeSet, Vec<IsocrystalClass>> {
        let mut m: BTreeMap<NodeSet, Vec<IsocrystalClass>> = BTreeMap::new();
        for c in &self.classes {
            m.entry(self.irr_support(&c.newton))
                .or_default()
                .push(c.clone());
        }
        m
    }

    pub fn chai_length(&self, nu: &RationalVector) -> i64 {
        chai_length(&self.datum, &self.mu_diamond, nu)
    }

    pub fn defect(&self, nu: &RationalVector) -> i64 {
        defect(&self.datum, &self.mu_diamond, nu)
    }

    /// `(l_I, l_II, l_[b])`.
    pub fn ell_invariants(&self, nu: &RationalVector) -> Result<(i64, i64, i64)> {
        ell_invariants(&self.datum, &self.mu_diamond, nu)
    }

    /// The identity term `(q-1)^{l_I} q^{#I(nu)/sigma - chai}`.
    pub fn identity_term(&self, nu: &RationalVector) -> QLaurent {
        let d = &self.datum;
        let i = d.orbit_count(self.level_set(nu)) as i64;
        let s = d.orbits().len() as i64;
        QLaurent::path_weight((s - i) as u32, i - self.chai_length(nu))
    }

    /// The indecomposable class of largest Newton point, checked to be
    /// above every other indecomposable class.
    pub fn max_indecomposable(&self) -> Result<&IsocrystalClass> {
        let indec: Vec<&IsocrystalClass> = self
            .classes
            .iter()
            .filter(|c| self.is_indecomposable(&c.newton))
            .collect();
        let top = match indec.last() {
            Some(t) => *t,
            None => return contract("no indecomposable classes"),
        };
        match indec.iter().find(|o| !self.le(&o.newton, &top.newton)) {
            None => Ok(top),
            Some(o) => Err(crate::Error::Violation(format!(
                "{} and {} are incomparable maximal candidates",
                o.newton, top.newton
            ))),
        }
    }

    /// `a <= b` in the dominance order (same Kottwitz class is implicit).
    pub fn le(&self, a: &RationalVector, b: &RationalVector) -> bool {
        (b - a).coords.iter().all(|x| !x.is_negative())
    }

    /// Cover relations `(i, j)` with `classes[i] < classes[j]`.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.classes.len();
        let lt = |i: usize, j: usize| {
            i != j && self.le(&self.classes[i].newton, &self.classes[j].newton)
        };
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn record(&self, c: &IsocrystalClass) -> ClassRecord {
        ClassRecord {
            newton: c.newton.clone(),
            kottwitz: c.kottwitz,
            i_nu: self.level_set(&c.newton),
            chai_length: self.chai_length(&c.newton),
            defect: self.defect(&c.newton),
        }
    }

    pub fn records(&self) -> Vec<ClassRecord> {
        self.classes.iter().map(|c| self.record(c)).collect()
    }

    /// Keeps only the indecomposable classes.
    pub fn indecomposable(&self) -> BSet {
        let mut b = self.clone();
        b.classes.retain(|c| self.is_indecomposable(&c.newton));
        b
    }
}

fn orbit_pairing(v: &RationalVector, orbit: &[usize]) -> Q {
    orbit
        .iter()
        .fold(Q::from_integer(0.into()), |a, &i| a + &v.coords[i])
}

/// `sum over orbits of ceil(<mu - nu, omega_O>)`.
pub fn chai_length(datum: &RootDatum, mu_diamond: &RationalVector, nu: &RationalVector) -> i64 {
    let e = mu_diamond - nu;
    datum
        .orbits()
        .iter()
        .map(|o| ceil_to_i64(&orbit_pairing(&e, o)))
        .sum()
}

/// `2 (chai_length - <mu - nu, rho>)`; anything but a nonnegative integer is an
/// internal inconsistency.
pub fn defect(datum: &RootDatum, mu_diamond: &RationalVector, nu: &RationalVector) -> i64 {
    let e = mu_diamond - nu;
    let r = datum.pair_rho(&e) * crate::linalg::q(2);
    let d = Q::from_integer((2 * chai_length(datum, mu_diamond, nu)).into()) - r;
    assert!(d.is_integer() && !d.is_negative(), "defect of {nu} is {d}");
    crate::affine_weyl::to_i64(&d)
}

/// Fails when `l_II < 0`, which happens only outside the indecomposable range.
pub fn ell_invariants(
    datum: &RootDatum,
    mu_diamond: &RationalVector,
    nu: &RationalVector,
) -> Result<(i64, i64, i64)> {
    let s = datum.orbits().len() as i64;
    let i = datum.orbit_count(datum.newton_level_set(nu)?) as i64;
    let chai = chai_length(datum, mu_diamond, nu);
    if chai < s {
        return contract(format!(
            "l_II < 0 for {nu}: class is not in the indecomposable range"
        ));
    }
    let two_rho = datum.pair_two_rho(nu);
    let ell_b = two_rho + Q::from_integer((i - defect(datum, mu_diamond, nu)).into());
    Ok((s - i, chai - s, crate::affine_weyl::to_i64(&ell_b)))
}

#[cfg(test)]
mod tests;
