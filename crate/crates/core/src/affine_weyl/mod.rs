//! The extended affine Weyl group `P^vee x| W` of an adjoint root datum,
//! with its length function and the Frobenius twist by the diagram
//! automorphism.
//!
//! Simple reflections are indexed `0..=n`: `0` is the affine reflection
//! `s_0 = t^{theta^vee} s_theta`, and `k >= 1` is the finite reflection of node
//! `k - 1` (so indices agree with the printed labels `s0, s1, ...`).

mod element;
mod parse;

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

pub use element::{AffineElement, WeylElement};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::root_datum::{NodeSet, RationalVector, RootDatum};

/// Decomposition `w = x t^mu y` with `t^mu y` minimal in its left `W`-coset,
/// `mu` dominant and `l(w) = l(x) + <mu, 2rho> - l(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub x: WeylElement,
    pub mu: Vec<i64>,
    pub y: WeylElement,
}

#[derive(Debug)]
pub struct AffineWeyl {
    datum: Arc<RootDatum>,
    n: usize,
    simple: Vec<WeylElement>,
    s0: AffineElement,
    perm: WeylElement,
}

impl AffineWeyl {
    pub fn new(datum: Arc<RootDatum>) -> Self {
        let n = datum.rank();
        let simple = (0..n)
            .map(|i| {
                let mut m = WeylElement::identity(n);
                for j in 0..n {
                    m.mat[j * n + i] -= datum.cartan(i, j);
                }
                m
            })
            .collect();
        let h = datum.highest_root_index();
        let theta = &datum.positive_roots()[h];
        let coroot = &datum.positive_coroots()[h];
        let theta_vee: Vec<i64> = (0..n)
            .map(|j| (0..n).map(|l| coroot[l] * datum.cartan(l, j)).sum())
            .collect();
        let mut s_theta = WeylElement::identity(n);
        for j in 0..n {
            for k in 0..n {
                s_theta.mat[j * n + k] -= theta_vee[j] * theta[k];
            }
        }
        let s0 = AffineElement {
            trans: theta_vee,
            fin: s_theta,
        };
        let mut perm = WeylElement {
            n,
            mat: vec![0; n * n],
        };
        for i in 0..n {
            perm.mat[datum.sigma()[i] * n + i] = 1;
        }
        AffineWeyl {
            datum,
            n,
            simple,
            s0,
            perm,
        }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Number of simple affine reflections, `n + 1`.
    pub fn reflection_count(&self) -> usize {
        self.n + 1
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::identity(self.n)
    }

    pub fn reflection(&self, k: usize) -> AffineElement {
        if k == 0 {
            self.s0.clone()
        } else {
            AffineElement::from_finite(self.simple[k - 1].clone())
        }
    }

    pub fn finite_simple(&self, i: usize) -> &WeylElement {
        &self.simple[i]
    }

    pub fn finite_from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(WeylElement::identity(self.n), |acc, &i| {
            acc.compose(&self.simple[i])
        })
    }

    pub fn mul(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let ub = a.fin.apply(&b.trans);
        AffineElement {
            trans: a.trans.iter().zip(&ub).map(|(x, y)| x + y).collect(),
            fin: a.fin.compose(&b.fin),
        }
    }

    pub fn left_mul(&self, k: usize, a: &AffineElement) -> AffineElement {
        if k == 0 {
            self.mul(&self.s0, a)
        } else {
            let s = &self.simple[k - 1];
            AffineElement {
                trans: s.apply(&a.trans),
                fin: s.compose(&a.fin),
            }
        }
    }

    pub fn right_mul(&self, a: &AffineElement, k: usize) -> AffineElement {
        if k == 0 {
            self.mul(a, &self.s0)
        } else {
            AffineElement {
                trans: a.trans.clone(),
                fin: a.fin.compose(&self.simple[k - 1]),
            }
        }
    }

    pub fn finite_inverse(&self, u: &WeylElement) -> WeylElement {
        let mut w = finite_reduced_word_with(self, u);
        w.reverse();
        self.finite_from_word(&w)
    }

    pub fn inverse(&self, a: &AffineElement) -> AffineElement {
        let ui = self.finite_inverse(&a.fin);
        let t = ui.apply(&a.trans).into_iter().map(|x| -x).collect();
        AffineElement { trans: t, fin: ui }
    }

    /// Iwahori-Matsumoto length.
    pub fn length(&self, a: &AffineElement) -> usize {
        let r = a.fin.rho_image();
        let mut len = 0i64;
        for alpha in self.datum.positive_roots() {
            let mut p = 0i64;
            let mut s = 0i64;
            for j in 0..self.n {
                if alpha[j] != 0 {
                    p += alpha[j] * a.trans[j];
                    s += alpha[j] * r[j];
                }
            }
            len += if s > 0 { p.abs() } else { (p - 1).abs() };
        }
        len as usize
    }

    pub fn weyl_length(&self, u: &WeylElement) -> usize {
        let r = u.rho_image();
        self.datum
            .positive_roots()
            .iter()
            .filter(|alpha| alpha.iter().zip(&r).map(|(a, b)| a * b).sum::<i64>() < 0)
            .count()
    }

    /// The lexicographically first reduced word (node indices, 0-based) of a
    /// finite element, read left to right.
    pub fn finite_reduced_word(&self, u: &WeylElement) -> Vec<usize> {
        finite_reduced_word_with(self, u)
    }

    pub fn format(&self, a: &AffineElement) -> String {
        let t: Vec<String> = a.trans.iter().map(|x| x.to_string()).collect();
        let mut s = format!("t[{}]", t.join(","));
        let word = self.finite_reduced_word(&a.fin);
        if !word.is_empty() {
            let w: Vec<String> = word.iter().map(|i| format!("s{}", i + 1)).collect();
            s.push('*');
            s.push_str(&w.join(" "));
        }
        s
    }

    pub fn format_finite(&self, u: &WeylElement) -> String {
        let word = self.finite_reduced_word(u);
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(&self, text: &str) -> Result<AffineElement> {
        parse::parse_element(self, text)
    }

    pub fn sigma_reflection(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.datum.sigma()[k - 1] + 1
        }
    }

    fn permute(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n];
        for (i, x) in v.iter().enumerate() {
            out[self.datum.sigma()[i]] = *x;
        }
        out
    }

    pub fn sigma_finite(&self, u: &WeylElement) -> WeylElement {
        let n = self.n;
        let s = self.datum.sigma();
        let mut m = WeylElement {
            n,
            mat: vec![0; n * n],
        };
        for j in 0..n {
            for k in 0..n {
                m.mat[s[j] * n + s[k]] = u.mat[j * n + k];
            }
        }
        m
    }

    pub fn sigma_finite_inverse(&self, u: &WeylElement) -> WeylElement {
        let mut v = u.clone();
        for _ in 1..self.datum.sigma_order() {
            v = self.sigma_finite(&v);
        }
        v
    }

    /// The Frobenius action on the group.
    pub fn sigma(&self, a: &AffineElement) -> AffineElement {
        AffineElement {
            trans: self.permute(&a.trans),
            fin: self.sigma_finite(&a.fin),
        }
    }

    /// `s_k a sigma(s_k)`.
    pub fn sigma_conjugate(&self, k: usize, a: &AffineElement) -> AffineElement {
        let left = self.left_mul(k, a);
        self.right_mul(&left, self.sigma_reflection(k))
    }

    /// Whether `a` is of minimal length in its coset `W a`.
    pub fn is_minimal_in_left_coset(&self, a: &AffineElement) -> bool {
        let l = self.length(a);
        (1..=self.n).all(|k| self.length(&self.left_mul(k, a)) > l)
    }

    pub fn coset_decompose(&self, a: &AffineElement) -> Result<CosetDecomposition> {
        let mut w = a.clone();
        let mut len = self.length(&w);
        let mut word = Vec::new();
        'outer: loop {
            for k in 1..=self.n {
                let v = self.left_mul(k, &w);
                let lv = self.length(&v);
                if lv < len {
                    word.push(k - 1);
                    w = v;
                    len = lv;
                    continue 'outer;
                }
            }
            break;
        }
        let x = self.finite_from_word(&word);
        let mu = w.trans.clone();
        let y = w.fin.clone();
        let d = CosetDecomposition { x, mu, y };
        let mu_v = self.coweight(&d.mu);
        if !self.datum.is_dominant(&mu_v) {
            return Err(Error::Internal(format!(
                "coset representative of {} has non-dominant translation",
                self.format(a)
            )));
        }
        let expect = self.weyl_length(&d.x) as i64 + to_i64(&self.datum.pair_two_rho(&mu_v))
            - self.weyl_length(&d.y) as i64;
        if expect != self.length(a) as i64 {
            return Err(Error::Internal(format!(
                "length identity fails for {}",
                self.format(a)
            )));
        }
        Ok(d)
    }

    /// `eta_sigma(w) = sigma^{-1}(y) x`.
    pub fn eta_sigma(&self, a: &AffineElement) -> Result<WeylElement> {
        let d = self.coset_decompose(a)?;
        Ok(self.sigma_finite_inverse(&d.y).compose(&d.x))
    }

    /// Fundamental-coweight coordinates to the simple-coroot basis.
    pub fn coweight(&self, lambda: &[i64]) -> RationalVector {
        self.datum.coweight(lambda).expect("rank matches")
    }

    fn linear_part(&self, a: &AffineElement) -> WeylElement {
        a.fin.compose(&self.perm)
    }

    /// The Newton point of `w sigma`, before taking the dominant representative.
    pub fn newton_point(&self, a: &AffineElement) -> Result<RationalVector> {
        let l = self.linear_part(a);
        let id = WeylElement::identity(self.n);
        let cap = self
            .datum
            .weyl_group_order()
            .saturating_mul(self.datum.sigma_order() as u128);
        let mut lam = a.trans.clone();
        let mut pow = l.clone();
        let mut k: u128 = 1;
        while pow != id {
            let moved = l.apply(&lam);
            lam = a.trans.iter().zip(moved).map(|(x, y)| x + y).collect();
            pow = l.compose(&pow);
            k += 1;
            if k > cap {
                return Err(Error::Internal(
                    "Newton iteration exceeded the group order".into(),
                ));
            }
        }
        let v = self.coweight(&lam);
        Ok(v.scale(&(Q::from_integer(1.into()) / q(k as i64))))
    }

    pub fn dominant_newton_point(&self, a: &AffineElement) -> Result<RationalVector> {
        Ok(self.datum.dominant_rep(&self.newton_point(a)?).0)
    }

    pub fn kottwitz_point(&self, a: &AffineElement) -> u32 {
        self.datum
            .kottwitz_of(&self.coweight(&a.trans))
            .expect("translations are integral")
    }

    /// `dim ker(p(w sigma) - 1)` on the underlying real vector space.
    pub fn fixed_space_dim(&self, a: &AffineElement) -> usize {
        let l = self.linear_part(a);
        let n = self.n;
        let m: Vec<Vec<Q>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| q(l.mat[j * n + k] - (j == k) as i64))
                    .collect()
            })
            .collect();
        linalg::nullity(&m)
    }

    pub fn support(&self, u: &WeylElement) -> NodeSet {
        NodeSet::from_iter(self.finite_reduced_word(u))
    }

    pub fn sigma_support(&self, u: &WeylElement) -> NodeSet {
        self.datum.sigma_closure(self.support(u))
    }

    /// Whether some reduced word of `u` uses at most one node of each
    /// sigma-orbit, each at most once.
    pub fn is_partial_sigma_coxeter(&self, u: &WeylElement) -> bool {
        let word = self.finite_reduced_word(u);
        let supp = NodeSet::from_iter(word.iter().copied());
        word.len() == supp.len() && supp.len() == self.datum.orbit_count(supp)
    }

    pub fn is_sigma_coxeter(&self, u: &WeylElement) -> bool {
        self.is_partial_sigma_coxeter(u) && self.sigma_support(u) == self.datum.all_nodes()
    }

    /// All sigma-Coxeter elements of the finite Weyl group.
    pub fn sigma_coxeter_elements(&self) -> Vec<WeylElement> {
        let orbits = self.datum.orbits();
        let mut choices: Vec<Vec<usize>> = vec![vec![]];
        for o in orbits {
            choices = choices
                .into_iter()
                .flat_map(|c| o.iter().map(move |&i| [c.clone(), vec![i]].concat()))
                .collect();
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for c in choices {
            for p in permutations(&c) {
                let u = self.finite_from_word(&p);
                if seen.insert(u.clone()) {
                    out.push(u);
                }
            }
        }
        out.sort();
        out
    }

    /// `(J(w), J_0(w))`, given the Newton point of the generic class `b_w`,
    /// which is read off a reduction tree.
    pub fn j_sets(
        &self,
        a: &AffineElement,
        generic_newton: &RationalVector,
    ) -> Result<(NodeSet, NodeSet)> {
        let d = self.coset_decompose(a)?;
        let eta = self.sigma_finite_inverse(&d.y).compose(&d.x);
        let j = self.sigma_support(&eta);
        let mu = self.datum.diamond(&self.coweight(&d.mu));
        let j0 = (&mu - generic_newton).positive_support();
        Ok((j, j0))
    }

    /// Elements of length zero.
    pub fn length_zero_elements(&self) -> Vec<AffineElement> {
        let h = &self.datum.positive_roots()[self.datum.highest_root_index()];
        let mut out = vec![self.identity()];
        for i in 0..self.n {
            if h[i] != 1 {
                continue;
            }
            let mut lam = vec![0; self.n];
            lam[i] = 1;
            let mut w = AffineElement::translation(lam);
            let mut len = self.length(&w);
            'outer: while len > 0 {
                for k in 1..=self.n {
                    let v = self.right_mul(&w, k);
                    let lv = self.length(&v);
                    if lv < len {
                        w = v;
                        len = lv;
                        continue 'outer;
                    }
                }
                break;
            }
            debug_assert_eq!(len, 0);
            out.push(w);
        }
        out
    }

    /// All elements of length at most `max_len`, ordered by length. Fails with
    /// a resource error once more than `budget` elements have been produced.
    pub fn elements_up_to_length(
        &self,
        max_len: usize,
        budget: usize,
    ) -> Result<Vec<AffineElement>> {
        let mut seen: HashSet<AffineElement> = HashSet::new();
        let mut out = Vec::new();
        let mut level: Vec<AffineElement> = self.length_zero_elements();
        for w in &level {
            seen.insert(w.clone());
        }
        let mut len = 0;
        loop {
            out.extend(level.iter().cloned());
            if out.len() > budget {
                return Err(Error::Resource(format!(
                    "more than {budget} elements of length <= {max_len}"
                )));
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for w in &level {
                for k in 0..=self.n {
                    let v = self.right_mul(w, k);
                    if self.length(&v) == len + 1 && seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            level = next;
            len += 1;
        }
        Ok(out)
    }

    /// Breadth-first closure of `a` under length-preserving sigma-conjugation
    /// by simple reflections.
    pub fn cyclic_shift_class(
        &self,
        a: &AffineElement,
        budget: usize,
    ) -> Result<Vec<AffineElement>> {
        let len = self.length(a);
        let mut seen = HashSet::new();
        seen.insert(a.clone());
        let mut queue = VecDeque::from([a.clone()]);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for k in 0..=self.n {
                let v = self.sigma_conjugate(k, &w);
                if self.length(&v) == len && seen.insert(v.clone()) {
                    if seen.len() > budget {
                        return Err(Error::Resource(format!(
                            "cyclic-shift class exceeds {budget} elements"
                        )));
                    }
                    queue.push_back(v);
                }
            }
            out.push(w);
        }
        Ok(out)
    }
}

fn finite_reduced_word_with(aw: &AffineWeyl, u: &WeylElement) -> Vec<usize> {
    let d = &aw.datum;
    let n = aw.n;
    let mut r = u.rho_image();
    let mut word = Vec::new();
    while let Some(i) = (0..n).find(|&i| r[i] < 0) {
        let ri = r[i];
        for (j, rj) in r.iter_mut().enumerate() {
            *rj -= d.cartan(i, j) * ri;
        }
        word.push(i);
    }
    word
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

pub(crate) fn to_i64(x: &Q) -> i64 {
    use num_traits::ToPrimitive;
    assert!(x.is_integer(), "expected an integer, got {x}");
    x.to_integer().to_i64().expect("fits in i64")
}
