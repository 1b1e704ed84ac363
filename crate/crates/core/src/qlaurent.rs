//! Laurent polynomials in q with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{contract, Result};

/// A Laurent polynomial `sum a_e q^e`. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

/// A polynomial written in the basis `(q-1)^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QMinusOnePoly {
    terms: BTreeMap<u32, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^e`.
    pub fn monomial(e: i64) -> Self {
        Self::term(BigInt::one(), e)
    }

    pub fn term(c: BigInt, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        QLaurent { terms }
    }

    /// `(q-1)^k`.
    pub fn q_minus_one_pow(k: u32) -> Self {
        let base = QLaurent::monomial(1) - QLaurent::one();
        let mut acc = QLaurent::one();
        for _ in 0..k {
            acc = &acc * &base;
        }
        acc
    }

    /// `(q-1)^a q^b`, the weight attached to a reduction path.
    pub fn path_weight(a: u32, b: i64) -> Self {
        Self::q_minus_one_pow(a).shift(b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes `q -> q^k` for a positive `k`.
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k > 0);
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    fn add_term(&mut self, e: i64, c: &BigInt) {
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn evaluate(&self, q: &BigInt) -> Option<num_rational::BigRational> {
        use num_rational::BigRational;
        if q.is_zero() && self.low_degree().is_some_and(|d| d < 0) {
            return None;
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                BigRational::from_integer(num_traits::pow(q.clone(), *e as usize))
            } else {
                BigRational::from_integer(num_traits::pow(q.clone(), (-*e) as usize)).recip()
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Rewrites a polynomial (no negative powers) in the `(q-1)` basis.
    pub fn to_qm1_basis(&self) -> Result<QMinusOnePoly> {
        if self.low_degree().is_some_and(|d| d < 0) {
            return contract("negative powers of q have no (q-1)-expansion");
        }
        let mut out = QMinusOnePoly::default();
        for (&e, c) in &self.terms {
            // q^e = sum_k binom(e, k) (q-1)^k
            let mut binom = BigInt::one();
            for k in 0..=e {
                let v = out.terms.entry(k as u32).or_default();
                *v += &binom * c;
                binom = binom * BigInt::from(e - k) / BigInt::from(k + 1);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

impl QMinusOnePoly {
    pub fn coefficient(&self, k: u32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn to_laurent(&self) -> QLaurent {
        self.terms.iter().fold(QLaurent::zero(), |acc, (k, c)| {
            acc + QLaurent::q_minus_one_pow(*k).scale(c)
        })
    }

    /// Whether all coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, o: &QLaurent) -> QLaurent {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(self, o: QLaurent) -> QLaurent {
        &self + &o
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, o: &QLaurent) -> QLaurent {
        self + &(-o)
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, o: QLaurent) -> QLaurent {
        &self - &o
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, o: &QLaurent) -> QLaurent {
        let mut r = QLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, &(c1 * c2));
            }
        }
        r
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, o: QLaurent) -> QLaurent {
        &self * &o
    }
}

impl std::iter::Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(it: I) -> QLaurent {
        it.fold(QLaurent::zero(), |a, b| a + b)
    }
}

fn write_terms<K: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: Vec<(K, &BigInt)>,
    var: &str,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, (e, c)) in terms.into_iter().enumerate() {
        if n == 0 {
            write!(f, "{c}*{var}^{e}")?;
        } else if c.is_negative() {
            write!(f, " - {}*{var}^{e}", -c)?;
        } else {
            write!(f, " + {c}*{var}^{e}")?;
        }
    }
    Ok(())
}

/// Renders as `3*q^2 - 1*q^0`, highest power first.
impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().rev().map(|(e, c)| (*e, c)).collect(),
            "q",
        )
    }
}

impl fmt::Display for QMinusOnePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().rev().map(|(e, c)| (*e, c)).collect(),
            "(q-1)",
        )
    }
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> QLaurent {
        terms
            .iter()
            .map(|&(e, c)| QLaurent::term(c.into(), e))
            .sum()
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(&[(2, 3), (0, -1)]).to_string(), "3*q^2 - 1*q^0");
        assert_eq!(QLaurent::zero().to_string(), "0");
        assert_eq!(poly(&[(-1, -2)]).to_string(), "-2*q^-1");
    }

    #[test]
    fn path_weights_sum_to_power() {
        let p = QLaurent::path_weight(1, 2) + QLaurent::path_weight(0, 2);
        assert_eq!(p, QLaurent::monomial(3));
        assert_eq!(p.to_string(), "1*q^3");
    }

    #[test]
    fn qm1_expansion_of_q_squared() {
        let b = QLaurent::monomial(2).to_qm1_basis().unwrap();
        assert_eq!(b.coefficient(2), 1.into());
        assert_eq!(b.coefficient(1), 2.into());
        assert_eq!(b.coefficient(0), 1.into());
        assert_eq!(b.to_string(), "1*(q-1)^2 + 2*(q-1)^1 + 1*(q-1)^0");
    }

    #[test]
    fn negative_powers_have_no_qm1_expansion() {
        assert!(QLaurent::monomial(-1).to_qm1_basis().is_err());
    }

    #[test]
    fn large_coefficients_stay_exact() {
        let big = BigInt::from(1u128 << 127) * BigInt::from(3);
        let p = QLaurent::term(big.clone(), 4);
        let sq = &p * &p;
        assert_eq!(sq.coefficient(8), &big * &big);
    }

    fn arb_poly() -> impl Strategy<Value = QLaurent> {
        proptest::collection::vec((-5i64..6, any::<i64>()), 0..6).prop_map(|v| {
            v.into_iter()
                .map(|(e, c)| QLaurent::term(BigInt::from(c) << 64, e))
                .sum()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &QLaurent::one(), a.clone());
        }

        #[test]
        fn qm1_round_trip(a in arb_poly()) {
            let p = a.shift(6);
            prop_assert_eq!(p.to_qm1_basis().unwrap().to_laurent(), p);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in 2i64..7) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).evaluate(&x), Some(a.evaluate(&x).unwrap() * b.evaluate(&x).unwrap()));
        }
    }
}
