//! Projection scan for Newton points.
//!
//! For a Levi subset `J` of a split datum, every candidate `nu` has the form
//! `mu - sum_{j in J} d_j alpha_j^vee`. Fix the set `I = {i in J : <nu, alpha_i> > 0}`.
//! Then `d_i` is an integer for `i in I`, and `d_k` for `k in J - I` is
//! determined by `<nu, alpha_k> = 0`. All remaining conditions are affine in
//! the integers `(d_i)_{i in I}`, and those are enumerated by a pruned
//! depth-first search.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::root_datum::{NodeSet, RationalVector, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// `mu - nu` a nonnegative combination of the coroots in `J`.
    Full,
    /// Additionally positive on every node of `J` not orthogonal to `nu`.
    Indecomposable,
    /// Additionally positive on every node of `J`.
    Irreducible,
}

#[derive(Clone, Debug)]
pub struct ScanRequest<'a> {
    pub datum: &'a RootDatum,
    pub mu: &'a RationalVector,
    pub levi: NodeSet,
    pub mode: ScanMode,
    /// Keep only `nu` that are dominant for the whole datum, not just for `J`.
    pub g_dominant: bool,
}

/// An affine constraint `c0 + sum coef[v] * x_v` that must be `> 0` (strict)
/// or `>= 0`, in integer form.
struct Constraint {
    c0: i128,
    coef: Vec<i128>,
    strict: bool,
}

/// Rational affine form `a0 + sum a[v] x_v`.
#[derive(Clone)]
struct Affine {
    a0: Q,
    a: Vec<Q>,
}

impl Affine {
    fn constant(c: Q, vars: usize) -> Self {
        Affine {
            a0: c,
            a: vec![Q::zero(); vars],
        }
    }

    fn add_scaled(&mut self, o: &Affine, s: &Q) {
        self.a0 += &o.a0 * s;
        for (x, y) in self.a.iter_mut().zip(&o.a) {
            *x += y * s;
        }
    }

    fn eval(&self, x: &[i64]) -> Q {
        self.a
            .iter()
            .zip(x)
            .fold(self.a0.clone(), |acc, (a, v)| acc + a * q(*v))
    }

    fn to_constraint(&self, strict: bool) -> Result<Constraint> {
        let den = std::iter::once(&self.a0)
            .chain(&self.a)
            .fold(num_bigint::BigInt::from(1), |l, x| l.lcm(x.denom()));
        let conv = |x: &Q| -> Result<i128> {
            (x * Q::from_integer(den.clone()))
                .to_integer()
                .to_i128()
                .ok_or_else(|| Error::Resource("scan coefficients overflow i128".into()))
        };
        Ok(Constraint {
            c0: conv(&self.a0)?,
            coef: self.a.iter().map(conv).collect::<Result<_>>()?,
            strict,
        })
    }
}

pub fn scan(req: &ScanRequest<'_>) -> Result<Vec<RationalVector>> {
    let d = req.datum;
    let n = d.rank();
    let j_nodes: Vec<usize> = req.levi.iter().filter(|&i| i < n).collect();
    let mu_alpha = d.root_pairings(req.mu);

    // Bounds d_i <= <mu, omega_i^J> for i in J.
    let a_jj: Vec<Vec<Q>> = j_nodes
        .iter()
        .map(|&l| j_nodes.iter().map(|&k| q(d.cartan(l, k))).collect())
        .collect();
    let inv_jj = linalg::inverse(&a_jj)
        .ok_or_else(|| Error::Internal("singular Levi Cartan matrix".into()))?;
    let m_j: Vec<Q> = (0..j_nodes.len())
        .map(|i| {
            (0..j_nodes.len()).fold(Q::zero(), |acc, k| {
                acc + &inv_jj[k][i] * &mu_alpha[j_nodes[k]]
            })
        })
        .collect();

    let mut results = Vec::new();
    let nj = j_nodes.len();
    for mask in 0u32..(1u32 << nj) {
        let i_nodes: Vec<usize> = (0..nj)
            .filter(|&t| mask >> t & 1 == 1)
            .map(|t| j_nodes[t])
            .collect();
        let k_nodes: Vec<usize> = (0..nj)
            .filter(|&t| mask >> t & 1 == 0)
            .map(|t| j_nodes[t])
            .collect();
        let lo: i64 = if req.mode == ScanMode::Full { 0 } else { 1 };
        let hi: Vec<i64> = (0..nj)
            .filter(|&t| mask >> t & 1 == 1)
            .map(|t| m_j[t].floor().to_integer().to_i64().unwrap_or(i64::MAX))
            .collect();
        if hi.iter().any(|&h| h < lo) {
            continue;
        }
        let nv = i_nodes.len();
        // d as affine forms in the integer variables.
        let mut dform: Vec<Affine> = vec![Affine::constant(Q::zero(), nv); n];
        for (v, &i) in i_nodes.iter().enumerate() {
            dform[i].a[v] = q(1);
        }
        if !k_nodes.is_empty() {
            let m: Vec<Vec<Q>> = k_nodes
                .iter()
                .map(|&k| k_nodes.iter().map(|&l| q(d.cartan(l, k))).collect())
                .collect();
            let minv = linalg::inverse(&m)
                .ok_or_else(|| Error::Internal("singular Levi Cartan matrix".into()))?;
            // r_k = <mu, alpha_k> - sum_i x_i A[i][k]
            let r: Vec<Affine> = k_nodes
                .iter()
                .map(|&k| {
                    let mut f = Affine::constant(mu_alpha[k].clone(), nv);
                    for (v, &i) in i_nodes.iter().enumerate() {
                        f.a[v] = q(-d.cartan(i, k));
                    }
                    f
                })
                .collect();
            for (row, &l) in k_nodes.iter().enumerate() {
                let mut f = Affine::constant(Q::zero(), nv);
                for (col, rk) in r.iter().enumerate() {
                    f.add_scaled(rk, &minv[row][col]);
                }
                dform[l] = f;
            }
        }
        let pairing = |j: usize| -> Affine {
            let mut f = Affine::constant(mu_alpha[j].clone(), nv);
            for &l in &j_nodes {
                if d.cartan(l, j) != 0 {
                    f.add_scaled(&dform[l], &q(-d.cartan(l, j)));
                }
            }
            f
        };
        let mut cons = Vec::new();
        for &i in &i_nodes {
            cons.push(pairing(i).to_constraint(true)?);
        }
        for &k in &k_nodes {
            cons.push(dform[k].to_constraint(req.mode == ScanMode::Irreducible)?);
        }
        if req.g_dominant {
            for j in (0..n).filter(|j| !req.levi.contains(*j)) {
                cons.push(pairing(j).to_constraint(false)?);
            }
        }
        let order = dfs_order(d, &i_nodes);
        let mut found = Vec::new();
        search(&cons, &order, lo, &hi, &mut vec![lo; nv], 0, &mut found);
        for x in found {
            let mut nu = req.mu.clone();
            for &l in &j_nodes {
                nu.coords[l] -= dform[l].eval(&x);
            }
            results.push(nu);
        }
    }
    results.sort();
    results.dedup();
    for nu in &results {
        check_candidate(req, nu)?;
    }
    Ok(results)
}

/// Variable order following the Dynkin diagram, so that constraints close early.
fn dfs_order(d: &RootDatum, vars: &[usize]) -> Vec<usize> {
    let mut order = Vec::new();
    let mut used = vec![false; vars.len()];
    while order.len() < vars.len() {
        let start = (0..vars.len()).find(|&v| !used[v]).unwrap();
        let mut queue = std::collections::VecDeque::from([start]);
        used[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in 0..vars.len() {
                if !used[w] && d.cartan(vars[v], vars[w]) != 0 {
                    used[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn satisfiable(
    c: &Constraint,
    x: &[i64],
    order: &[usize],
    depth: usize,
    lo: i64,
    hi: &[i64],
) -> bool {
    let mut s = c.c0;
    for (t, &v) in order.iter().enumerate() {
        let coef = c.coef[v];
        if coef == 0 {
            continue;
        }
        if t < depth {
            s += coef * x[v] as i128;
        } else {
            s += (coef * lo as i128).max(coef * hi[v] as i128);
        }
    }
    if c.strict {
        s > 0
    } else {
        s >= 0
    }
}

fn search(
    cons: &[Constraint],
    order: &[usize],
    lo: i64,
    hi: &[i64],
    x: &mut Vec<i64>,
    depth: usize,
    out: &mut Vec<Vec<i64>>,
) {
    if depth == order.len() {
        if cons.iter().all(|c| satisfiable(c, x, order, depth, lo, hi)) {
            out.push(x.clone());
        }
        return;
    }
    let v = order[depth];
    for val in lo..=hi[v] {
        x[v] = val;
        if cons
            .iter()
            .all(|c| satisfiable(c, x, order, depth + 1, lo, hi))
        {
            search(cons, order, lo, hi, x, depth + 1, out);
        }
    }
}

/// Direct check of the defining conditions, independent of the scan.
fn check_candidate(req: &ScanRequest<'_>, nu: &RationalVector) -> Result<()> {
    let d = req.datum;
    let diff = req.mu - nu;
    let bad = |m: &str| Err(Error::Internal(format!("scan produced {nu}: {m}")));
    for j in 0..d.rank() {
        let p = d.pair_simple_root(nu, j);
        let in_j = req.levi.contains(j);
        if (in_j || req.g_dominant) && p.is_negative() {
            return bad("not dominant");
        }
        if !in_j && !diff.coords[j].is_zero() {
            return bad("support outside the Levi");
        }
        if in_j {
            let c = &diff.coords[j];
            if c.is_negative() {
                return bad("not below mu");
            }
            if !p.is_zero() && !c.is_integer() {
                return bad("integrality fails");
            }
            let need_pos = match req.mode {
                ScanMode::Full => false,
                ScanMode::Indecomposable => !p.is_zero(),
                ScanMode::Irreducible => true,
            };
            if need_pos && !c.is_positive() {
                return bad("not positive");
            }
        }
    }
    Ok(())
}
