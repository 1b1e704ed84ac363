//! Verification drivers for the structure of reduction trees of elements
//! with finite sigma-Coxeter part.
//!
//! The end points of reduction paths are only checked through numerical
//! consequences of being sigma-Coxeter elements for the predicted Levi:
//! minimality, length, and the dimension of the fixed space.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use super::{psi, PathRecord, Reducer};
use crate::affine_weyl::{to_i64, AffineElement, WeylElement};
use crate::bset::{
    defect, enumerate_bset, enumerate_indec, essentially_non_central_on, BSet, IsocrystalClass,
};
use crate::error::{contract, Error, Result};
use crate::linalg::{q, Q};
use crate::qlaurent::QLaurent;
use crate::root_datum::{NodeSet, RationalVector, RootDatum};

const PROXY_NOTE: &str =
    "end points checked through minimality, length and fixed-space dimension only";

fn le(a: &RationalVector, b: &RationalVector) -> bool {
    (b - a)
        .coords
        .iter()
        .all(|x| *x >= Q::from_integer(0.into()))
}

fn group_by_class(
    r: &Reducer<'_>,
    paths: &[PathRecord],
) -> Result<BTreeMap<IsocrystalClass, Vec<PathRecord>>> {
    let mut out: BTreeMap<IsocrystalClass, Vec<PathRecord>> = BTreeMap::new();
    for p in paths {
        out.entry(psi(r.group(), &p.end)?)
            .or_default()
            .push(p.clone());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CoxeterTranslationReport {
    pub element: String,
    pub mu: Vec<i64>,
    pub coxeter: String,
    pub classes: usize,
    pub paths: u64,
    pub failures: Vec<String>,
    pub ok: bool,
    pub note: &'static str,
}

/// Checks the reduction tree of `t^mu c` for a sigma-Coxeter element `c`
/// with `t^mu c` minimal in its left `W`-coset: exactly one path per
/// indecomposable class, with the predicted edge counts and end point.
pub fn verify_coxeter_translation(
    r: &Reducer<'_>,
    mu: &[i64],
    c: &WeylElement,
) -> Result<CoxeterTranslationReport> {
    let aw = r.group();
    let d = aw.datum();
    if !aw.is_sigma_coxeter(c) {
        return contract(format!(
            "{} is not a sigma-Coxeter element",
            aw.format_finite(c)
        ));
    }
    if mu.len() != d.rank() {
        return contract("coweight has the wrong rank");
    }
    let w = AffineElement {
        trans: mu.to_vec(),
        fin: c.clone(),
    };
    if !aw.is_minimal_in_left_coset(&w) {
        return contract(format!(
            "{} is not minimal in its left W-coset",
            aw.format(&w)
        ));
    }
    let b = enumerate_indec(d, mu)?;
    let paths = r.paths(&w)?;
    let grouped = group_by_class(r, &paths)?;
    let mut failures = Vec::new();
    let s_count = d.orbits().len();
    for class in grouped.keys() {
        if !b.contains(&class.newton) || class.kottwitz != b.kottwitz() {
            failures.push(format!(
                "path ends in {} outside the indecomposable set",
                class.newton
            ));
        }
    }
    for class in b.classes() {
        let nu = &class.newton;
        let Some(ps) = grouped.get(class) else {
            failures.push(format!("no path ends in {nu}"));
            continue;
        };
        let count: u64 = ps.iter().map(|p| p.count).sum();
        if count != 1 {
            failures.push(format!("{count} paths end in {nu}"));
            continue;
        }
        let p = &ps[0];
        let (l1, l2, lb) = b.ell_invariants(nu)?;
        if (p.l1 as i64, p.l2 as i64) != (l1, l2) {
            failures.push(format!(
                "{nu}: path has (l_I, l_II) = ({}, {}), expected ({l1}, {l2})",
                p.l1, p.l2
            ));
        }
        if !r.is_minimal(&p.end)? {
            failures.push(format!("{nu}: end {} is not minimal", aw.format(&p.end)));
        }
        if aw.length(&p.end) as i64 != lb {
            failures.push(format!(
                "{nu}: end has length {}, expected {lb}",
                aw.length(&p.end)
            ));
        }
        let fixed = s_count - d.orbit_count(b.level_set(nu));
        if aw.fixed_space_dim(&p.end) != fixed {
            failures.push(format!(
                "{nu}: end has fixed space of dimension {}, expected {fixed}",
                aw.fixed_space_dim(&p.end)
            ));
        }
    }
    Ok(CoxeterTranslationReport {
        element: aw.format(&w),
        mu: mu.to_vec(),
        coxeter: aw.format_finite(c),
        classes: grouped.len(),
        paths: paths.iter().map(|p| p.count).sum(),
        ok: failures.is_empty(),
        failures,
        note: PROXY_NOTE,
    })
}

/// `B(G)_w` read off the reduction tree, with its unique maximum `b_w`.
#[derive(Clone, Debug, Serialize)]
pub struct BgW {
    pub classes: Vec<IsocrystalClass>,
    pub generic: IsocrystalClass,
}

pub fn bg_w(r: &Reducer<'_>, w: &AffineElement) -> Result<BgW> {
    let classes: BTreeSet<IsocrystalClass> = r
        .paths(w)?
        .iter()
        .map(|p| psi(r.group(), &p.end))
        .collect::<Result<_>>()?;
    let classes: Vec<IsocrystalClass> = classes.into_iter().collect();
    let top = classes
        .iter()
        .find(|c| {
            classes
                .iter()
                .all(|o| o.kottwitz == c.kottwitz && le(&o.newton, &c.newton))
        })
        .cloned()
        .ok_or_else(|| {
            Error::Violation(format!(
                "B(G)_w of {} has no unique maximum",
                r.group().format(w)
            ))
        })?;
    Ok(BgW {
        classes,
        generic: top,
    })
}

/// Data attached to an element with finite sigma-Coxeter part.
struct Context {
    mu: Vec<i64>,
    eta: WeylElement,
    j_w: NodeSet,
    j0_w: NodeSet,
    bg: BgW,
}

fn context(r: &Reducer<'_>, w: &AffineElement) -> Result<Context> {
    let aw = r.group();
    let dec = aw.coset_decompose(w)?;
    let eta = aw.eta_sigma(w)?;
    if !aw.is_partial_sigma_coxeter(&eta) {
        return contract(format!(
            "{} does not have finite sigma-Coxeter part",
            aw.format(w)
        ));
    }
    let bg = bg_w(r, w)?;
    let (j_w, j0_w) = aw.j_sets(w, &bg.generic.newton)?;
    Ok(Context {
        mu: dec.mu,
        eta,
        j_w,
        j0_w,
        bg,
    })
}

/// The sigma-stable `J` with `J_0(w) <= J <= J(w)` on which `mu` is
/// essentially non-central.
fn interval(d: &RootDatum, ctx: &Context) -> Vec<NodeSet> {
    let free: Vec<NodeSet> = d
        .orbits()
        .iter()
        .map(|o| NodeSet::from_iter(o.iter().copied()))
        .filter(|o| o.is_subset(ctx.j_w) && !o.is_subset(ctx.j0_w))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let j = (0..free.len())
            .filter(|t| mask >> t & 1 == 1)
            .fold(ctx.j0_w, |acc, t| acc.union(free[t]));
        if essentially_non_central_on(d, &ctx.mu, j) {
            out.push(j);
        }
    }
    out.sort();
    out
}

fn j_flat_in(d: &RootDatum, ctx: &Context, j: NodeSet) -> NodeSet {
    // mu is dominant, so <mu_diamond, alpha_i> = 0 iff mu vanishes on the orbit of i
    let fixed = NodeSet::from_iter(
        d.orbits()
            .iter()
            .filter(|o| o.iter().all(|&i| ctx.mu[i] == 0))
            .flatten()
            .copied(),
    );
    NodeSet::from_iter(
        fixed
            .intersection(ctx.j_w.minus(j))
            .iter()
            .filter(|&i| j.iter().all(|k| d.cartan(i, k) == 0)),
    )
}

/// `{i in I(mu_diamond) cap (J(w) - J) : s_i commutes with J}`.
pub fn j_flat(r: &Reducer<'_>, w: &AffineElement, j: NodeSet) -> Result<NodeSet> {
    let d = r.group().datum();
    let ctx = context(r, w)?;
    if !interval(d, &ctx).contains(&j) {
        return contract(format!(
            "{j} is not in the interval [{}, {}] for mu",
            ctx.j0_w, ctx.j_w
        ));
    }
    Ok(j_flat_in(d, &ctx, j))
}

/// The path predicted for one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedPath {
    pub class: IsocrystalClass,
    pub levi: NodeSet,
    pub l1: u32,
    pub l2: u32,
    pub end_length: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteCoxeterPartReport {
    pub element: String,
    pub mu: Vec<i64>,
    pub j_w: NodeSet,
    pub j0_w: NodeSet,
    pub interval: Vec<NodeSet>,
    pub expected: Vec<ExpectedPath>,
    pub paths: u64,
    /// One path per predicted class with the predicted edge counts and end length.
    pub paths_ok: bool,
    /// The aggregate class polynomial identity.
    pub diamond_ok: bool,
    /// `l(w) - l(eta(w)) = <nu_{b_w}, 2 rho> - def(b_w)`.
    pub cordial: bool,
    /// `B(G)_w` is saturated in `B(G, mu)`.
    pub saturated: bool,
    /// `B(G)_w` equals the union of the `J`-irreducible strata over the interval.
    pub interval_ok: bool,
    /// Degree of each class polynomial matches the virtual dimension, with
    /// leading coefficient 1.
    pub dimensions_ok: bool,
    pub failures: Vec<String>,
    pub ok: bool,
    pub note: &'static str,
}

fn expected_paths(d: &RootDatum, ctx: &Context, bset: &BSet) -> Vec<ExpectedPath> {
    let mut out = Vec::new();
    let jw = d.orbit_count(ctx.j_w) as i64;
    let j0 = d.orbit_count(ctx.j0_w) as i64;
    for j in interval(d, ctx) {
        let flat = d.orbit_count(j_flat_in(d, ctx, j)) as i64;
        for c in bset
            .classes()
            .iter()
            .filter(|c| bset.irr_support(&c.newton) == j)
        {
            let inu = d.orbit_count(bset.level_set(&c.newton).intersection(j)) as i64;
            let two_rho = d.pair_two_rho(&c.newton) - q(bset.defect(&c.newton));
            out.push(ExpectedPath {
                class: c.clone(),
                levi: j,
                l1: (jw - flat - inu) as u32,
                l2: (bset.chai_length(&c.newton) - j0) as u32,
                end_length: (to_i64(&two_rho) + flat + inu) as usize,
            });
        }
    }
    out.sort_by(|a, b| a.class.cmp(&b.class));
    out
}

/// `d_w(b) = (l(w) + l(eta(w)) - def(b))/2 - <nu_b, rho>`, doubled.
fn twice_virtual_dim(
    r: &Reducer<'_>,
    w: &AffineElement,
    eta: &WeylElement,
    mu_diamond: &RationalVector,
    nu: &RationalVector,
) -> Q {
    let aw = r.group();
    let d = aw.datum();
    q(aw.length(w) as i64 + aw.weyl_length(eta) as i64 - defect(d, mu_diamond, nu))
        - d.pair_two_rho(nu)
}

pub fn verify_finite_coxeter_part(
    r: &Reducer<'_>,
    w: &AffineElement,
) -> Result<FiniteCoxeterPartReport> {
    let aw = r.group();
    let d = aw.datum();
    let ctx = context(r, w)?;
    let bset = enumerate_bset(d, &ctx.mu)?;
    let mu_diamond = bset.mu_diamond().clone();
    let expected = expected_paths(d, &ctx, &bset);
    let paths = r.paths(w)?;
    let grouped = group_by_class(r, &paths)?;
    let mut failures = Vec::new();

    let mut paths_ok = true;
    let expected_classes: BTreeSet<&IsocrystalClass> = expected.iter().map(|e| &e.class).collect();
    for class in grouped.keys() {
        if !expected_classes.contains(class) {
            paths_ok = false;
            failures.push(format!("unexpected path end class {}", class.newton));
        }
    }
    let fixed_w = aw.fixed_space_dim(w) as i64;
    for e in &expected {
        let nu = &e.class.newton;
        let Some(ps) = grouped.get(&e.class) else {
            paths_ok = false;
            failures.push(format!("no path ends in {nu} (J = {})", e.levi));
            continue;
        };
        let count: u64 = ps.iter().map(|p| p.count).sum();
        if count != 1 {
            paths_ok = false;
            failures.push(format!("{count} paths end in {nu}"));
            continue;
        }
        let p = &ps[0];
        let got = (p.l1, p.l2, aw.length(&p.end));
        if got != (e.l1, e.l2, e.end_length) {
            paths_ok = false;
            failures.push(format!(
                "{nu}: path (l_I, l_II, l(end)) = {got:?}, expected ({}, {}, {})",
                e.l1, e.l2, e.end_length
            ));
        }
        if aw.fixed_space_dim(&p.end) as i64 - fixed_w != p.l1 as i64 {
            paths_ok = false;
            failures.push(format!(
                "{nu}: fixed space grows by {} along a path with l_I = {}",
                aw.fixed_space_dim(&p.end) as i64 - fixed_w,
                p.l1
            ));
        }
    }

    let mut from_paths: BTreeMap<(IsocrystalClass, usize), QLaurent> = BTreeMap::new();
    for p in paths.iter() {
        let e = from_paths
            .entry((psi(aw, &p.end)?, aw.length(&p.end)))
            .or_insert_with(QLaurent::zero);
        *e = &*e + &QLaurent::path_weight(p.l1, p.l2 as i64).scale(&p.count.into());
    }
    let mut predicted: BTreeMap<(IsocrystalClass, usize), QLaurent> = BTreeMap::new();
    for e in &expected {
        let x = predicted
            .entry((e.class.clone(), e.end_length))
            .or_insert_with(QLaurent::zero);
        *x = &*x + &QLaurent::path_weight(e.l1, e.l2 as i64);
    }
    let diamond_ok = from_paths == predicted;
    if !diamond_ok {
        failures.push("aggregate class polynomial identity fails".into());
    }

    let bw = &ctx.bg.generic.newton;
    let lhs = aw.length(w) as i64 - aw.weyl_length(&ctx.eta) as i64;
    let rhs = d.pair_two_rho(bw) - q(defect(d, &mu_diamond, bw));
    let cordial = q(lhs) == rhs;
    if !cordial {
        failures.push(format!(
            "not cordial: l(w) - l(eta) = {lhs}, <nu, 2rho> - def = {rhs}"
        ));
    }

    let in_bg: BTreeSet<&RationalVector> = ctx.bg.classes.iter().map(|c| &c.newton).collect();
    let mut saturated = true;
    for c in bset.classes() {
        if in_bg.contains(&c.newton) {
            continue;
        }
        let below = ctx.bg.classes.iter().any(|b| le(&b.newton, &c.newton));
        let above = ctx.bg.classes.iter().any(|b| le(&c.newton, &b.newton));
        if below && above {
            saturated = false;
            failures.push(format!("B(G)_w is not saturated at {}", c.newton));
        }
    }

    let interval_ok = ctx.bg.classes.iter().collect::<BTreeSet<_>>() == expected_classes;
    if !interval_ok {
        failures.push("B(G)_w differs from the union of the J-irreducible strata".into());
    }

    let mut dimensions_ok = true;
    let polys = r.class_polynomials(w)?;
    for (class, f) in &polys {
        let deg = f.poly.degree().expect("nonzero");
        let twice_dim = q(2 * deg) - d.pair_two_rho(&class.newton) * q(2);
        let twice_virtual = twice_virtual_dim(r, w, &ctx.eta, &mu_diamond, &class.newton);
        let lead = f.poly.leading_coefficient().expect("nonzero");
        if twice_dim != twice_virtual || *lead != BigInt::from(1) {
            dimensions_ok = false;
            failures.push(format!(
                "{}: dimension {} with {lead} top orbits, virtual dimension {}",
                class.newton,
                twice_dim / q(2),
                twice_virtual / q(2)
            ));
        }
    }

    let ok = paths_ok && diamond_ok && cordial && saturated && interval_ok && dimensions_ok;
    Ok(FiniteCoxeterPartReport {
        element: aw.format(w),
        mu: ctx.mu.clone(),
        j_w: ctx.j_w,
        j0_w: ctx.j0_w,
        interval: interval(d, &ctx),
        expected,
        paths: paths.iter().map(|p| p.count).sum(),
        paths_ok,
        diamond_ok,
        cordial,
        saturated,
        interval_ok,
        dimensions_ok,
        failures,
        ok,
        note: PROXY_NOTE,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub dim: i64,
    pub orbit_count: BigInt,
    pub virtual_dim: Q,
}

/// Dimension and number of top-dimensional orbits of components of the
/// variety attached to `(w, b)`, from the class polynomial. `None` when the
/// class polynomial vanishes, i.e. the variety is empty.
pub fn dim_and_components(
    r: &Reducer<'_>,
    w: &AffineElement,
    b: &IsocrystalClass,
) -> Result<Option<Dimension>> {
    let aw = r.group();
    let d = aw.datum();
    let polys = r.class_polynomials(w)?;
    let Some(f) = polys.get(b) else {
        return Ok(None);
    };
    let deg = f.poly.degree().expect("nonzero");
    let dim = q(deg) - d.pair_two_rho(&b.newton);
    if !dim.is_integer() {
        return Err(Error::Violation(format!("non-integral dimension {dim}")));
    }
    let orbit_count = f.poly.leading_coefficient().expect("nonzero").clone();
    let dec = aw.coset_decompose(w)?;
    let eta = aw.eta_sigma(w)?;
    let mu_diamond = d.diamond(&d.coweight(&dec.mu)?);
    let virtual_dim = twice_virtual_dim(r, w, &eta, &mu_diamond, &b.newton) / q(2);
    if aw.is_partial_sigma_coxeter(&eta) {
        let bg = bg_w(r, w)?;
        let g = &bg.generic.newton;
        let cordial = q(aw.length(w) as i64 - aw.weyl_length(&eta) as i64)
            == d.pair_two_rho(g) - q(defect(d, &mu_diamond, g));
        if cordial && dim != virtual_dim {
            return Err(Error::Violation(format!(
                "dimension {dim} differs from the virtual dimension {virtual_dim}"
            )));
        }
    }
    Ok(Some(Dimension {
        dim: to_i64(&dim),
        orbit_count,
        virtual_dim,
    }))
}
