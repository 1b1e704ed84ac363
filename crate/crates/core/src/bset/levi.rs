//! Kottwitz sets of standard Levi subgroups and their images in `B(G)`.

use std::sync::Arc;

use num_traits::Signed;
use serde::Serialize;

use super::scan::{self, ScanMode, ScanRequest};
use super::{chai_length, IsocrystalClass};
use crate::error::{contract, Result};
use crate::linalg::ceil_to_i64;
use crate::root_datum::{CartanType, NodeSet, RationalVector, RootDatum};

/// A class of `B(M_J, mu)` for a split datum, by its Newton point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LeviClass {
    pub levi: NodeSet,
    pub newton: RationalVector,
}

fn check_levi(datum: &RootDatum, levi: NodeSet, mu: &RationalVector) -> Result<()> {
    if !levi.is_subset(datum.all_nodes()) || !datum.is_sigma_stable(levi) {
        return contract(format!("{levi} is not a sigma-stable set of nodes"));
    }
    if !datum.is_split() {
        return contract("Levi enumeration is implemented for split data");
    }
    if levi
        .iter()
        .any(|j| datum.pair_simple_root(mu, j).is_negative())
    {
        return contract(format!("{mu} is not dominant for the Levi {levi}"));
    }
    Ok(())
}

/// `B(M_J, mu)` (or its indecomposable or irreducible part), with Newton
/// points recorded in the coordinates of the ambient datum. `mu` must be
/// `M_J`-dominant. With `g_dominant` only classes whose Newton point is
/// dominant for the whole datum are kept.
pub fn enumerate_levi(
    datum: &RootDatum,
    levi: NodeSet,
    mu: &RationalVector,
    mode: ScanMode,
    g_dominant: bool,
) -> Result<Vec<LeviClass>> {
    check_levi(datum, levi, mu)?;
    let nus = scan::scan(&ScanRequest {
        datum,
        mu,
        levi,
        mode,
        g_dominant,
    })?;
    Ok(nus
        .into_iter()
        .map(|newton| LeviClass { levi, newton })
        .collect())
}

/// The image of a class of `B(M_J, mu)` in `B(G, mu)`.
pub fn levi_embed(
    datum: &RootDatum,
    levi: NodeSet,
    mu: &RationalVector,
    nu: &RationalVector,
) -> Result<IsocrystalClass> {
    check_levi(datum, levi, mu)?;
    if !datum.is_dominant(nu) {
        return contract(format!("{nu} is not dominant in the ambient datum"));
    }
    let mu_dom = datum.diamond(mu);
    let excess = &mu_dom - nu;
    if excess.coords.iter().any(|x| x.is_negative()) {
        return contract(format!("{nu} is not below {mu_dom}"));
    }
    let local = mu - nu;
    if local.support().minus(levi) != NodeSet::EMPTY {
        return contract(format!("{nu} does not lie in B(M_J, mu)"));
    }
    let length_m: i64 = levi.iter().map(|j| ceil_to_i64(&local.coords[j])).sum();
    let length_g = chai_length(datum, &mu_dom, nu);
    if length_m != length_g {
        return Err(crate::Error::Internal(format!(
            "Levi embedding changes the length of {nu}: {length_m} vs {length_g}"
        )));
    }
    Ok(IsocrystalClass {
        newton: nu.clone(),
        kottwitz: datum.kottwitz_of(mu)?,
    })
}

/// The three families of classes used in the type-D recursion for
/// `(D_n, omega_i^vee)`, `2 <= i <= n-2`, as Newton points.
#[derive(Clone, Debug, Serialize)]
pub struct TypeDStrata {
    pub n: usize,
    pub i: usize,
    pub first: Vec<RationalVector>,
    pub second: Vec<RationalVector>,
    pub third: Vec<RationalVector>,
}

impl TypeDStrata {
    pub fn all(&self) -> Vec<RationalVector> {
        let mut v: Vec<RationalVector> = self
            .first
            .iter()
            .chain(&self.second)
            .chain(&self.third)
            .cloned()
            .collect();
        v.sort();
        v
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let total = self.first.len() + self.second.len() + self.third.len();
        let mut v = self.all();
        v.dedup();
        v.len() == total
    }
}

/// Converts `epsilon`-coordinates of a type-D coweight to simple-coroot coordinates.
fn from_epsilon(datum: &RootDatum, eps: &[i64]) -> Result<RationalVector> {
    let n = eps.len();
    let mut fundamental: Vec<i64> = (0..n - 1).map(|j| eps[j] - eps[j + 1]).collect();
    fundamental.push(eps[n - 2] + eps[n - 1]);
    datum.coweight(&fundamental)
}

/// Builds the strata for `(D_n, omega_i^vee)` (nodes 1-based in `i`).
pub fn type_d_strata(n: usize, i: usize) -> Result<TypeDStrata> {
    if n < 4 || i < 2 || i > n - 2 {
        return contract(format!(
            "need n >= 4 and 2 <= i <= n-2, got (n, i) = ({n}, {i})"
        ));
    }
    let datum = Arc::new(RootDatum::split(CartanType::D(n)));
    let all = datum.all_nodes();
    let lower = if i == 2 {
        RationalVector::zero(n)
    } else {
        datum.fundamental_coweight(i - 3)
    };
    let irr = |levi: NodeSet, mu: &RationalVector| -> Result<Vec<RationalVector>> {
        Ok(
            enumerate_levi(&datum, levi, mu, ScanMode::Irreducible, true)?
                .into_iter()
                .map(|c| c.newton)
                .collect(),
        )
    };

    let mut first = Vec::new();
    for k in (i - 2)..=(n - 3) {
        first.extend(irr(NodeSet::from_iter(0..k), &lower)?);
    }
    let mut second = Vec::new();
    for mask in 0..4u32 {
        let j = NodeSet::from_iter((0..2).filter(|b| mask >> b & 1 == 1).map(|b| n - 2 + b));
        second.extend(irr(all.minus(j), &lower)?);
    }
    let mut third = Vec::new();
    for k in i..=(n - 2) {
        let mut eps = vec![0i64; n];
        for e in eps.iter_mut().take(i - 1) {
            *e = 1;
        }
        eps[k] = 1;
        let mu_k = from_epsilon(&datum, &eps)?;
        third.extend(irr(all.minus(NodeSet::single(k - 1)), &mu_k)?);
    }
    for v in [&mut first, &mut second, &mut third] {
        v.sort();
    }
    Ok(TypeDStrata {
        n,
        i,
        first,
        second,
        third,
    })
}
