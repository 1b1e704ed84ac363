//! Deligne-Lusztig reduction of affine Weyl group elements.
//!
//! A non-minimal `w` is first moved inside its length-preserving
//! sigma-conjugation orbit to some `w'` with a pivot `s_i` such that
//! `s_i w' sigma(s_i) < w'`. It then branches into `s_i w'` (type I edge,
//! weight `q - 1`) and `s_i w' sigma(s_i)` (type II edge, weight `q`).
//! Leaves are minimal length elements.

mod fingerprint;
pub mod scan;
mod theorems;
mod tree;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::rc::Rc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use fingerprint::{find_collisions, Collision};
pub use theorems::{
    bg_w, dim_and_components, j_flat, verify_coxeter_translation, verify_finite_coxeter_part, BgW,
    CoxeterTranslationReport, Dimension, ExpectedPath, FiniteCoxeterPartReport,
};
pub use tree::{EdgeKind, ReductionPath, ReductionTree, TreeEdge, TreeNode};

use crate::affine_weyl::{AffineElement, AffineWeyl};
use crate::bset::IsocrystalClass;
use crate::error::{Error, Result};
use crate::qlaurent::QLaurent;

pub const DEFAULT_BUDGET: usize = 2_000_000;

/// How a reduction step is chosen among the possible `(w', i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Breadth-first through the orbit, pivots in node order; the first hit wins.
    FirstFound,
    /// All candidates in the orbit are collected and one is drawn with a
    /// generator seeded by the seed and the element.
    Seeded(u64),
}

/// A reduction step from `w`: `witness` is the list of reflections
/// `k_1, k_2, ...` with `w' = s_{k_m} ... (s_{k_1} w sigma(s_{k_1})) ... sigma(s_{k_m})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMove {
    pub conjugate: AffineElement,
    pub witness: Vec<usize>,
    pub pivot: usize,
}

/// Paths of a reduction tree with the same end and the same edge counts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathRecord {
    pub end: AffineElement,
    pub l1: u32,
    pub l2: u32,
    pub count: u64,
}

/// Reduction engine for one affine Weyl group. Moves and path summaries are
/// memoised per element, so a single engine should be reused across
/// elements of the same group.
pub struct Reducer<'a> {
    aw: &'a AffineWeyl,
    strategy: Strategy,
    budget: usize,
    moves: RefCell<HashMap<AffineElement, Option<Rc<ReductionMove>>>>,
    summaries: RefCell<HashMap<AffineElement, Rc<Vec<PathRecord>>>>,
}

impl<'a> Reducer<'a> {
    pub fn new(aw: &'a AffineWeyl, strategy: Strategy, budget: usize) -> Self {
        Reducer {
            aw,
            strategy,
            budget,
            moves: RefCell::default(),
            summaries: RefCell::default(),
        }
    }

    pub fn group(&self) -> &'a AffineWeyl {
        self.aw
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    fn node_order(&self, w: &AffineElement) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.aw.reflection_count()).collect();
        if let Strategy::Seeded(seed) = self.strategy {
            order.shuffle(&mut element_rng(seed, w));
        }
        order
    }

    /// A reduction step from `w`, or `None` when `w` is of minimal length in
    /// its sigma-conjugacy class.
    pub fn find_reduction_move(&self, w: &AffineElement) -> Result<Option<Rc<ReductionMove>>> {
        if let Some(m) = self.moves.borrow().get(w) {
            return Ok(m.clone());
        }
        let aw = self.aw;
        let len = aw.length(w);
        let order = self.node_order(w);
        let mut parent: HashMap<AffineElement, (AffineElement, usize)> = HashMap::new();
        let mut seen: HashSet<AffineElement> = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        let mut orbit = Vec::new();
        let mut candidates: Vec<(AffineElement, usize)> = Vec::new();
        'bfs: while let Some(x) = queue.pop_front() {
            for &k in &order {
                let y = aw.sigma_conjugate(k, &x);
                let ly = aw.length(&y);
                if ly + 2 == len {
                    candidates.push((x.clone(), k));
                    if self.strategy == Strategy::FirstFound {
                        break 'bfs;
                    }
                } else if ly == len && !seen.contains(&y) {
                    if seen.len() >= self.budget {
                        return Err(Error::Resource(format!(
                            "sigma-conjugation orbit of {} exceeds the budget of {} elements",
                            aw.format(w),
                            self.budget
                        )));
                    }
                    seen.insert(y.clone());
                    parent.insert(y.clone(), (x.clone(), k));
                    queue.push_back(y);
                }
            }
            orbit.push(x);
        }
        let result = if candidates.is_empty() {
            None
        } else {
            let pick = match self.strategy {
                Strategy::FirstFound => 0,
                Strategy::Seeded(seed) => {
                    element_rng(seed ^ 0x9e37_79b9_7f4a_7c15, w).gen_range(0..candidates.len())
                }
            };
            let (conjugate, pivot) = candidates.swap_remove(pick);
            let mut witness = Vec::new();
            let mut cur = conjugate.clone();
            while let Some((p, k)) = parent.get(&cur) {
                witness.push(*k);
                cur = p.clone();
            }
            witness.reverse();
            Some(Rc::new(ReductionMove {
                conjugate,
                witness,
                pivot,
            }))
        };
        let mut memo = self.moves.borrow_mut();
        if result.is_none() {
            for x in orbit.into_iter().chain(queue) {
                memo.insert(x, None);
            }
        }
        memo.insert(w.clone(), result.clone());
        Ok(result)
    }

    pub fn is_minimal(&self, w: &AffineElement) -> Result<bool> {
        Ok(self.find_reduction_move(w)?.is_none())
    }

    /// The two children of a reduction step, type I first.
    pub fn children(&self, m: &ReductionMove) -> (AffineElement, AffineElement) {
        (
            self.aw.left_mul(m.pivot, &m.conjugate),
            self.aw.sigma_conjugate(m.pivot, &m.conjugate),
        )
    }

    /// Root-to-leaf paths of the reduction tree of `w`, grouped by end point
    /// and edge counts.
    pub fn paths(&self, w: &AffineElement) -> Result<Rc<Vec<PathRecord>>> {
        if let Some(s) = self.summaries.borrow().get(w) {
            return Ok(s.clone());
        }
        let out = match self.find_reduction_move(w)? {
            None => vec![PathRecord {
                end: w.clone(),
                l1: 0,
                l2: 0,
                count: 1,
            }],
            Some(m) => {
                let (c1, c2) = self.children(&m);
                let mut acc: BTreeMap<(AffineElement, u32, u32), u64> = BTreeMap::new();
                for r in self.paths(&c1)?.iter() {
                    *acc.entry((r.end.clone(), r.l1 + 1, r.l2)).or_default() += r.count;
                }
                for r in self.paths(&c2)?.iter() {
                    *acc.entry((r.end.clone(), r.l1, r.l2 + 1)).or_default() += r.count;
                }
                acc.into_iter()
                    .map(|((end, l1, l2), count)| PathRecord { end, l1, l2, count })
                    .collect()
            }
        };
        let out = Rc::new(out);
        debug_assert!(class_identity_holds(self.aw, w, &out));
        self.summaries.borrow_mut().insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Class polynomials `F_{w,[b]}`, keyed by the image of the end points.
    pub fn class_polynomials(
        &self,
        w: &AffineElement,
    ) -> Result<BTreeMap<IsocrystalClass, ClassPolynomial>> {
        let mut out: BTreeMap<IsocrystalClass, ClassPolynomial> = BTreeMap::new();
        for r in self.paths(w)?.iter() {
            let class = psi(self.aw, &r.end)?;
            let e = out.entry(class).or_insert_with(|| ClassPolynomial {
                poly: QLaurent::zero(),
                paths: Vec::new(),
            });
            e.poly = &e.poly + &path_weight(self.aw, r);
            e.paths.push(r.clone());
        }
        Ok(out)
    }

    /// `sum over paths (q-1)^{l_I} q^{l_II + l(end)} == q^{l(w)}`.
    pub fn verify_class_identity(&self, w: &AffineElement) -> Result<bool> {
        Ok(class_identity_holds(self.aw, w, &self.paths(w)?))
    }

    /// Per-class path statistics keyed by `(Psi(end), l(end))`, with the
    /// summed path weight. Independent of the tree when trees are
    /// well-defined up to class polynomials.
    pub fn class_statistics(
        &self,
        w: &AffineElement,
    ) -> Result<BTreeMap<(IsocrystalClass, usize), QLaurent>> {
        let mut out: BTreeMap<(IsocrystalClass, usize), QLaurent> = BTreeMap::new();
        for r in self.paths(w)?.iter() {
            let key = (psi(self.aw, &r.end)?, self.aw.length(&r.end));
            let e = out.entry(key).or_insert_with(QLaurent::zero);
            *e = &*e + &path_weight(self.aw, r);
        }
        Ok(out)
    }

    /// Exact multiset of `(Psi(end), l_I, l_II, l(end))` over paths.
    pub fn path_statistics(
        &self,
        w: &AffineElement,
    ) -> Result<BTreeMap<(IsocrystalClass, u32, u32, usize), u64>> {
        let mut out = BTreeMap::new();
        for r in self.paths(w)?.iter() {
            let key = (psi(self.aw, &r.end)?, r.l1, r.l2, self.aw.length(&r.end));
            *out.entry(key).or_default() += r.count;
        }
        Ok(out)
    }

    pub fn build_tree(&self, w: &AffineElement) -> Result<ReductionTree> {
        tree::build(self, w)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassPolynomial {
    pub poly: QLaurent,
    #[serde(skip)]
    pub paths: Vec<PathRecord>,
}

fn element_rng(seed: u64, w: &AffineElement) -> ChaCha8Rng {
    // FNV-1a over the matrix entries, stable across platforms and releases.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for x in w.trans.iter().chain(&w.fin.mat) {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// `(q-1)^{l_I} q^{l_II + l(end)}`, times the multiplicity.
pub fn path_weight(aw: &AffineWeyl, r: &PathRecord) -> QLaurent {
    QLaurent::path_weight(r.l1, r.l2 as i64 + aw.length(&r.end) as i64).scale(&r.count.into())
}

fn class_identity_holds(aw: &AffineWeyl, w: &AffineElement, paths: &[PathRecord]) -> bool {
    let total: QLaurent = paths.iter().map(|r| path_weight(aw, r)).sum();
    total == QLaurent::monomial(aw.length(w) as i64)
}

/// `Psi(e)`: the sigma-conjugacy class of `G` containing a lift of `e`.
pub fn psi(aw: &AffineWeyl, e: &AffineElement) -> Result<IsocrystalClass> {
    Ok(IsocrystalClass {
        newton: aw.dominant_newton_point(e)?,
        kottwitz: aw.kottwitz_point(e),
    })
}
