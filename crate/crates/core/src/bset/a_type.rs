//! Closed form of the identity for `(A_{n-1}, omega_i^vee)`, indexed by
//! sequences of slopes `1 > a_1/b_1 > ... > a_k/b_k > 0` with `sum a = i`
//! and `sum b = n`.
//!
//! Exponents are half-integers, so both sides are compared as Laurent
//! polynomials in `t = q^{1/2}`.

use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use super::enumerate_indec;
use crate::error::{contract, Result};
use crate::linalg::{frac, q, Q};
use crate::qlaurent::QLaurent;
use crate::root_datum::{CartanType, RationalVector, RootDatum};

/// One slope sequence, as `(a_l, b_l)` pairs in decreasing slope order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ATerm {
    pub parts: Vec<(i64, i64)>,
}

impl ATerm {
    pub fn k(&self) -> i64 {
        self.parts.len() as i64
    }

    /// `sum_{l1 < l2} (a_{l1} b_{l2} - a_{l2} b_{l1})`.
    pub fn area(&self) -> i64 {
        let p = &self.parts;
        let mut s = 0;
        for x in 0..p.len() {
            for y in x + 1..p.len() {
                s += p[x].0 * p[y].1 - p[y].0 * p[x].1;
            }
        }
        s
    }

    pub fn gcd_sum(&self) -> i64 {
        self.parts.iter().map(|&(a, b)| a.gcd(&b)).sum()
    }

    /// The Newton point of the corresponding class of the adjoint group,
    /// in simple-coroot coordinates.
    pub fn newton_point(&self, n: usize, i: i64) -> RationalVector {
        let slopes: Vec<Q> = self
            .parts
            .iter()
            .flat_map(|&(a, b)| std::iter::repeat_n(frac(a, b), b as usize))
            .collect();
        let centre = frac(i, n as i64);
        let mut acc = Q::from_integer(0.into());
        let mut coords = Vec::with_capacity(n - 1);
        for (j, s) in slopes.iter().enumerate().take(n - 1) {
            acc += s;
            coords.push(&acc - &centre * q(j as i64 + 1));
        }
        RationalVector { coords }
    }

    /// The term exactly as displayed with the exponent
    /// `k - 1 - (area + gcd_sum)/2`, in the variable `t`.
    pub fn literal_term(&self) -> QLaurent {
        let k = self.k();
        QLaurent::q_minus_one_pow((k - 1) as u32)
            .inflate(2)
            .shift(2 * (k - 1) - self.area() - self.gcd_sum())
    }

    /// The term as it comes out of the identity for this datum, with exponent
    /// `-k + (area + gcd_sum)/2`, in the variable `t`.
    pub fn derived_term(&self) -> QLaurent {
        let k = self.k();
        QLaurent::q_minus_one_pow((k - 1) as u32)
            .inflate(2)
            .shift(-2 * k + self.area() + self.gcd_sum())
    }
}

/// All slope sequences for `(n, i)`, sorted.
pub fn a_type_terms(n: i64, i: i64) -> Result<Vec<ATerm>> {
    if !(1..n).contains(&i) {
        return contract(format!("need 1 <= i <= n-1, got (n, i) = ({n}, {i})"));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend(i, n, None, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

fn extend(
    a_left: i64,
    b_left: i64,
    last: Option<(i64, i64)>,
    cur: &mut Vec<(i64, i64)>,
    out: &mut Vec<ATerm>,
) {
    if a_left == 0 && b_left == 0 {
        out.push(ATerm { parts: cur.clone() });
        return;
    }
    if a_left == 0 || b_left == 0 {
        return;
    }
    for a in 1..=a_left {
        for b in a + 1..=b_left {
            // a/b < last slope
            if let Some((la, lb)) = last {
                if a * lb >= la * b {
                    continue;
                }
            }
            cur.push((a, b));
            extend(a_left - a, b_left - b, Some((a, b)), cur, out);
            cur.pop();
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AIdentityReport {
    pub n: i64,
    pub i: i64,
    pub terms: usize,
    /// Right-hand side `q^{(i(n-i)-n)/2}` in `t = q^{1/2}`.
    pub rhs: QLaurent,
    pub literal_sum: QLaurent,
    pub literal_ok: bool,
    pub derived_sum: QLaurent,
    pub derived_ok: bool,
    pub enumerated: usize,
    pub count_ok: bool,
    pub newton_ok: bool,
}

impl AIdentityReport {
    /// The displayed identity together with the count check.
    pub fn holds(&self) -> bool {
        self.literal_ok && self.count_ok && self.newton_ok
    }
}

pub fn verify_a_identity(n: i64, i: i64) -> Result<AIdentityReport> {
    let terms = a_type_terms(n, i)?;
    let rhs = QLaurent::monomial(i * (n - i) - n);
    let literal_sum: QLaurent = terms.iter().map(ATerm::literal_term).sum();
    let derived_sum: QLaurent = terms.iter().map(ATerm::derived_term).sum();

    let datum = Arc::new(RootDatum::split(CartanType::A(n as usize - 1)));
    let mut mu = vec![0i64; n as usize - 1];
    mu[i as usize - 1] = 1;
    let b = enumerate_indec(&datum, &mu)?;
    let mut from_terms: Vec<RationalVector> = terms
        .iter()
        .map(|t| t.newton_point(n as usize, i))
        .collect();
    from_terms.sort();
    let enumerated: Vec<RationalVector> = b.classes().iter().map(|c| c.newton.clone()).collect();

    Ok(AIdentityReport {
        n,
        i,
        terms: terms.len(),
        literal_ok: literal_sum == rhs,
        derived_ok: derived_sum == rhs,
        rhs,
        literal_sum,
        derived_sum,
        enumerated: enumerated.len(),
        count_ok: enumerated.len() == terms.len(),
        newton_ok: enumerated == from_terms,
    })
}
