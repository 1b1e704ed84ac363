//! Finite root data of adjoint type with a diagram automorphism.
//!
//! Coweight-side vectors use the simple-coroot basis, weight-side vectors the
//! simple-root basis. Nodes are 0-based internally and printed 1-based, in
//! Bourbaki order for the standard types.

mod cartan_type;
mod fold;
mod kottwitz;
mod vector;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use cartan_type::CartanType;
pub use fold::Folding;
pub use kottwitz::KottwitzGroup;
pub use vector::{NodeSet, RationalVector, Weight};

use crate::error::{contract, Error, Result};
use crate::linalg::{self, q, Matrix, Q};

/// Standard diagram automorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    None,
    /// The order-2 automorphism of A_n, D_n or E6.
    Flip,
    /// The order-3 automorphism of D4.
    Triality,
}

impl Twist {
    pub fn parse(s: &str) -> Result<Twist> {
        match s {
            "none" | "split" | "id" => Ok(Twist::None),
            "flip" => Ok(Twist::Flip),
            "triality" => Ok(Twist::Triality),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown twist {s:?}"),
            }),
        }
    }
}

#[derive(Debug)]
pub struct RootDatum {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    sigma: Vec<usize>,
    inv: Matrix,
    pos_roots: Vec<Vec<i64>>,
    pos_coroots: Vec<Vec<i64>>,
    highest: usize,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    sigma_order: usize,
    kottwitz: OnceLock<KottwitzGroup>,
}

/// JSON descriptor, e.g. `{"type":"E","rank":6,"sigma":[6,2,5,4,3,1]}`.
/// `sigma` lists the image of each node, 1-based; omit it for the split form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatumSpec {
    #[serde(rename = "type")]
    pub letter: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
}

impl RootDatum {
    pub fn split(ty: CartanType) -> RootDatum {
        Self::build(ty, ty.cartan_matrix(), (0..ty.rank()).collect()).expect("standard datum")
    }

    pub fn new(ty: CartanType, sigma: Vec<usize>) -> Result<RootDatum> {
        Self::build(ty, ty.cartan_matrix(), sigma)
    }

    pub fn with_twist(ty: CartanType, twist: Twist) -> Result<RootDatum> {
        let n = ty.rank();
        let sigma: Vec<usize> = match (twist, ty) {
            (Twist::None, _) => (0..n).collect(),
            (Twist::Flip, CartanType::A(_)) => (0..n).map(|i| n - 1 - i).collect(),
            (Twist::Flip, CartanType::D(_)) => {
                let mut s: Vec<usize> = (0..n).collect();
                s.swap(n - 2, n - 1);
                s
            }
            (Twist::Flip, CartanType::E(6)) => vec![5, 1, 4, 3, 2, 0],
            (Twist::Triality, CartanType::D(4)) => vec![2, 1, 3, 0],
            _ => return contract(format!("type {ty} has no twist {twist:?}")),
        };
        Self::new(ty, sigma)
    }

    /// Builds a split datum from an arbitrary finite-type Cartan matrix, keeping
    /// the given node order. The type label is recovered by matching.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootDatum> {
        let Some((ty, _)) = cartan_type::identify(&cartan) else {
            return contract("matrix is not an irreducible finite Cartan matrix");
        };
        let n = cartan.len();
        Self::build(ty, cartan, (0..n).collect())
    }

    pub fn from_spec(spec: &DatumSpec) -> Result<RootDatum> {
        let letter = spec.letter.chars().next().ok_or(Error::Parse {
            pos: 0,
            msg: "empty type".into(),
        })?;
        let ty = CartanType::new(letter, spec.rank)?;
        match &spec.sigma {
            None => Ok(Self::split(ty)),
            Some(s) => {
                if s.iter().any(|&x| x == 0 || x > ty.rank()) {
                    return contract("sigma entries must be 1-based node labels");
                }
                Self::new(ty, s.iter().map(|x| x - 1).collect())
            }
        }
    }

    pub fn from_json(text: &str) -> Result<RootDatum> {
        let spec: DatumSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        Self::from_spec(&spec)
    }

    pub fn spec(&self) -> DatumSpec {
        DatumSpec {
            letter: self.ty.letter().to_string(),
            rank: self.rank(),
            sigma: (!self.is_split()).then(|| self.sigma.iter().map(|x| x + 1).collect()),
        }
    }

    fn build(ty: CartanType, cartan: Vec<Vec<i64>>, sigma: Vec<usize>) -> Result<RootDatum> {
        let n = cartan.len();
        if sigma.len() != n {
            return contract("sigma has the wrong length");
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return contract("sigma is not a permutation of the nodes");
            }
            seen[s] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if cartan[sigma[i]][sigma[j]] != cartan[i][j] {
                    return contract("sigma does not preserve the Cartan matrix");
                }
            }
        }
        let inv = linalg::inverse(&linalg::to_rational(&cartan))
            .ok_or_else(|| Error::Contract("singular Cartan matrix".into()))?;
        let (pos_roots, pos_coroots) = positive_roots(&cartan)?;
        let height = |r: &Vec<i64>| r.iter().sum::<i64>();
        let highest = (0..pos_roots.len())
            .max_by_key(|&k| height(&pos_roots[k]))
            .unwrap();

        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for i in 0..n {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let mut orb = vec![i];
            let mut j = sigma[i];
            while j != i {
                orb.push(j);
                j = sigma[j];
            }
            orb.sort_unstable();
            for &k in &orb {
                orbit_of[k] = orbits.len();
            }
            orbits.push(orb);
        }
        let sigma_order = orbits.iter().map(|o| o.len()).fold(1, num_integer::lcm);
        Ok(RootDatum {
            ty,
            cartan,
            sigma,
            inv,
            pos_roots,
            pos_coroots,
            highest,
            orbits,
            orbit_of,
            sigma_order,
            kottwitz: OnceLock::new(),
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `<alpha_i^vee, alpha_j>`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &Matrix {
        &self.inv
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_split(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn sigma_order(&self) -> usize {
        self.sigma_order
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    /// Number of sigma-orbits contained in or meeting `s`.
    pub fn orbit_count(&self, s: NodeSet) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.iter().any(|&i| s.contains(i)))
            .count()
    }

    pub fn sigma_closure(&self, s: NodeSet) -> NodeSet {
        NodeSet::from_iter(
            self.orbits
                .iter()
                .filter(|o| o.iter().any(|&i| s.contains(i)))
                .flatten()
                .copied(),
        )
    }

    pub fn is_sigma_stable(&self, s: NodeSet) -> bool {
        self.sigma_closure(s) == s
    }

    pub fn weyl_group_order(&self) -> u128 {
        self.ty.weyl_group_order()
    }

    /// Positive roots in the simple-root basis, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    /// Positive coroots in the simple-coroot basis, aligned with `positive_roots`.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.pos_coroots
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    /// Whether s_i and s_j commute (for i != j).
    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0
    }

    pub fn neighbours(&self, i: usize) -> NodeSet {
        NodeSet::from_iter((0..self.rank()).filter(|&j| j != i && self.cartan[i][j] != 0))
    }

    /// The values `<v, alpha_j>` for every simple root.
    pub fn root_pairings(&self, v: &RationalVector) -> Vec<Q> {
        (0..self.rank())
            .map(|j| self.pair_simple_root(v, j))
            .collect()
    }

    pub fn pair_simple_root(&self, v: &RationalVector, j: usize) -> Q {
        let mut s = Q::zero();
        for (i, x) in v.coords.iter().enumerate() {
            if self.cartan[i][j] != 0 && !x.is_zero() {
                s += x * q(self.cartan[i][j]);
            }
        }
        s
    }

    pub fn pair(&self, v: &RationalVector, w: &Weight) -> Result<Q> {
        let n = self.rank();
        if v.dim() != n || w.coords.len() != n {
            return contract("dimension mismatch in pairing");
        }
        let p = self.root_pairings(v);
        Ok(p.iter()
            .zip(&w.coords)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b))
    }

    /// `<v, rho>`, where rho is the half sum of positive roots.
    pub fn pair_rho(&self, v: &RationalVector) -> Q {
        v.coords.iter().fold(Q::zero(), |a, b| a + b)
    }

    pub fn pair_two_rho(&self, v: &RationalVector) -> Q {
        self.pair_rho(v) * q(2)
    }

    pub fn rho(&self) -> Weight {
        let n = self.rank();
        let mut s = vec![Q::zero(); n];
        for r in &self.pos_roots {
            for (k, &c) in r.iter().enumerate() {
                s[k] += q(c);
            }
        }
        Weight {
            coords: s.into_iter().map(|x| x / q(2)).collect(),
        }
    }

    pub fn fundamental_coweight(&self, i: usize) -> RationalVector {
        RationalVector {
            coords: self.inv[i].clone(),
        }
    }

    pub fn fundamental_weight(&self, j: usize) -> Weight {
        Weight {
            coords: self.inv.iter().map(|r| r[j].clone()).collect(),
        }
    }

    pub fn simple_coroot(&self, i: usize) -> RationalVector {
        let mut v = RationalVector::zero(self.rank());
        v.coords[i] = q(1);
        v
    }

    /// Converts integer coordinates in the fundamental-coweight basis.
    pub fn coweight(&self, fundamental: &[i64]) -> Result<RationalVector> {
        if fundamental.len() != self.rank() {
            return contract(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                fundamental.len()
            ));
        }
        let n = self.rank();
        let mut c = vec![Q::zero(); n];
        for (i, &l) in fundamental.iter().enumerate() {
            if l != 0 {
                for (k, ck) in c.iter_mut().enumerate() {
                    *ck += &self.inv[i][k] * q(l);
                }
            }
        }
        Ok(RationalVector { coords: c })
    }

    /// Coordinates in the fundamental-coweight basis, `None` if not integral.
    pub fn fundamental_coordinates(&self, v: &RationalVector) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.root_pairings(v)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten())
            .collect()
    }

    pub fn is_dominant(&self, v: &RationalVector) -> bool {
        (0..self.rank()).all(|j| !self.pair_simple_root(v, j).is_negative())
    }

    /// Dominant representative of the Weyl orbit of `v`, together with the word
    /// `[i_1, ..., i_k]` such that applying `s_{i_1}`, then `s_{i_2}`, ... to `v`
    /// produces it.
    pub fn dominant_rep(&self, v: &RationalVector) -> (RationalVector, Vec<usize>) {
        let mut v = v.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&j| self.pair_simple_root(&v, j).is_negative()) {
            let p = self.pair_simple_root(&v, i);
            v.coords[i] -= p;
            word.push(i);
        }
        (v, word)
    }

    pub fn reflect(&self, v: &RationalVector, i: usize) -> RationalVector {
        let p = self.pair_simple_root(v, i);
        let mut v = v.clone();
        v.coords[i] -= p;
        v
    }

    /// `I(v)`: simple roots orthogonal to a dominant `v`.
    pub fn newton_level_set(&self, v: &RationalVector) -> Result<NodeSet> {
        if !self.is_dominant(v) {
            return contract(format!("{v} is not dominant"));
        }
        Ok(NodeSet::from_iter(
            (0..self.rank()).filter(|&j| self.pair_simple_root(v, j).is_zero()),
        ))
    }

    pub fn apply_sigma(&self, v: &RationalVector) -> RationalVector {
        let mut c = vec![Q::zero(); self.rank()];
        for (i, x) in v.coords.iter().enumerate() {
            c[self.sigma[i]] = x.clone();
        }
        RationalVector { coords: c }
    }

    pub fn is_sigma_invariant(&self, v: &RationalVector) -> bool {
        self.apply_sigma(v) == *v
    }

    /// The sigma-average of `v`.
    pub fn sigma_average(&self, v: &RationalVector) -> RationalVector {
        let mut acc = v.clone();
        let mut cur = v.clone();
        for _ in 1..self.sigma_order {
            cur = self.apply_sigma(&cur);
            acc = &acc + &cur;
        }
        acc.scale(&(Q::from_integer(1.into()) / q(self.sigma_order as i64)))
    }

    /// The Galois average of the dominant representative of `mu`.
    pub fn diamond(&self, mu: &RationalVector) -> RationalVector {
        self.sigma_average(&self.dominant_rep(mu).0)
    }

    pub fn kottwitz_group(&self) -> &KottwitzGroup {
        self.kottwitz.get_or_init(|| KottwitzGroup::new(self))
    }

    /// Label of the class of an integral coweight in the sigma-coinvariants of
    /// the fundamental group.
    pub fn kottwitz_of(&self, v: &RationalVector) -> Result<u32> {
        self.kottwitz_group().label(v)
    }

    pub fn fold_to_split(&self) -> Result<Folding> {
        Folding::new(self)
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_split() {
            write!(f, "{}", self.ty)
        } else {
            let s: Vec<String> = self.sigma.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "{} sigma=[{}]", self.ty, s.join(","))
        }
    }
}

fn positive_roots(cartan: &[Vec<i64>]) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let n = cartan.len();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut roots: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        index.insert(e.clone(), roots.len());
        roots.push((e.clone(), e));
        queue.push_back(roots.len() - 1);
    }
    while let Some(k) = queue.pop_front() {
        for i in 0..n {
            let (r, c) = roots[k].clone();
            let a: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
            if a == 0 || r == (0..n).map(|j| (j == i) as i64).collect::<Vec<_>>() {
                continue;
            }
            let b: i64 = (0..n).map(|j| c[j] * cartan[j][i]).sum();
            let mut r2 = r.clone();
            r2[i] -= a;
            let mut c2 = c.clone();
            c2[i] -= b;
            if r2.iter().any(|&x| x < 0) {
                continue;
            }
            if !index.contains_key(&r2) {
                if roots.len() > 10_000 {
                    return contract("Cartan matrix is not of finite type");
                }
                index.insert(r2.clone(), roots.len());
                roots.push((r2, c2));
                queue.push_back(roots.len() - 1);
            }
        }
    }
    roots.sort_by(|a, b| (a.0.iter().sum::<i64>(), &a.0).cmp(&(b.0.iter().sum::<i64>(), &b.0)));
    Ok(roots.into_iter().unzip())
}

#[cfg(test)]
mod tests;
