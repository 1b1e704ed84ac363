use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::{RationalVector, RootDatum};
use crate::error::{contract, Result};
use crate::linalg::Q;

/// The sigma-coinvariants of the coweight lattice modulo the coroot lattice.
///
/// Elements of the fundamental group are represented by the fractional parts
/// of their simple-coroot coordinates; classes are labelled `0..count` in the
/// order of their smallest representative, so the trivial class is `0`.
#[derive(Debug, Clone)]
pub struct KottwitzGroup {
    labels: HashMap<Vec<Q>, u32>,
    count: u32,
}

fn reduce(v: &[Q]) -> Vec<Q> {
    v.iter().map(|x| x - x.floor()).collect()
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
}

impl KottwitzGroup {
    pub(super) fn new(d: &RootDatum) -> Self {
        let n = d.rank();
        let gens: Vec<Vec<Q>> = (0..n).map(|i| reduce(&d.inverse_cartan()[i])).collect();
        let mut elems: BTreeSet<Vec<Q>> = BTreeSet::new();
        let zero = vec![Q::zero(); n];
        elems.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = add(&x, g);
                if elems.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let sigma = |v: &[Q]| {
            let mut c = vec![Q::zero(); n];
            for (i, x) in v.iter().enumerate() {
                c[d.sigma()[i]] = x.clone();
            }
            c
        };
        let mut sub: BTreeSet<Vec<Q>> = BTreeSet::new();
        sub.insert(vec![Q::zero(); n]);
        let diffs: Vec<Vec<Q>> = elems
            .iter()
            .map(|x| {
                reduce(
                    &x.iter()
                        .zip(sigma(x))
                        .map(|(a, b)| a - b)
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        loop {
            let mut grew = false;
            for h in sub.clone() {
                for g in &diffs {
                    if sub.insert(add(&h, g)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut labels = HashMap::new();
        let mut count = 0u32;
        for x in &elems {
            if labels.contains_key(x) {
                continue;
            }
            for h in &sub {
                labels.insert(add(x, h), count);
            }
            count += 1;
        }
        debug_assert!(labels.values().all(|&l| l < count));
        KottwitzGroup { labels, count }
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn label(&self, v: &RationalVector) -> Result<u32> {
        match self.labels.get(&reduce(&v.coords)) {
            Some(&l) => Ok(l),
            None => contract(format!("{v} is not an integral coweight")),
        }
    }
}
