//! Heuristic check that end points sharing the invariants
//! `(Newton point, Kottwitz point, length)` are sigma-conjugate.
//!
//! Each end point gets a fingerprint: the elements of the same length
//! reachable by at most `DEPTH` sigma-conjugations by simple reflections or
//! length-zero elements. End points whose fingerprints are not linked are
//! reported. A report is not a proof of distinct classes: conjugators between
//! minimal length elements can be longer than `DEPTH`.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::psi;
use crate::affine_weyl::{AffineElement, AffineWeyl};
use crate::bset::IsocrystalClass;
use crate::error::Result;

const DEPTH: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct Collision {
    pub class: IsocrystalClass,
    pub length: usize,
    /// One element from each unlinked group.
    pub representatives: Vec<String>,
}

fn fingerprint(
    aw: &AffineWeyl,
    omega: &[(AffineElement, AffineElement)],
    e: &AffineElement,
) -> HashSet<AffineElement> {
    let len = aw.length(e);
    let mut seen = HashSet::from([e.clone()]);
    let mut frontier = vec![e.clone()];
    for _ in 0..DEPTH {
        let mut next = Vec::new();
        for x in &frontier {
            let conj = (0..aw.reflection_count())
                .map(|k| aw.sigma_conjugate(k, x))
                .chain(
                    omega
                        .iter()
                        .map(|(t, ts_inv)| aw.mul(t, &aw.mul(x, ts_inv))),
                );
            for y in conj {
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().filter(|y| aw.length(y) == len).collect()
}

/// Groups `ends` by invariants and reports groups that split under the
/// fingerprint relation.
pub fn find_collisions(aw: &AffineWeyl, ends: &[AffineElement]) -> Result<Vec<Collision>> {
    let omega: Vec<(AffineElement, AffineElement)> = aw
        .length_zero_elements()
        .into_iter()
        .map(|t| (t.clone(), aw.inverse(&aw.sigma(&t))))
        .collect();
    let mut groups: BTreeMap<(IsocrystalClass, usize), Vec<AffineElement>> = BTreeMap::new();
    for e in ends {
        groups
            .entry((psi(aw, e)?, aw.length(e)))
            .or_default()
            .push(e.clone());
    }
    let mut out = Vec::new();
    for ((class, length), mut members) in groups {
        members.sort();
        members.dedup();
        if members.len() < 2 {
            continue;
        }
        let prints: Vec<HashSet<AffineElement>> =
            members.iter().map(|e| fingerprint(aw, &omega, e)).collect();
        let mut comp: Vec<usize> = (0..members.len()).collect();
        fn find(c: &mut [usize], i: usize) -> usize {
            if c[i] != i {
                let r = find(c, c[i]);
                c[i] = r;
            }
            c[i]
        }
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                if !prints[a].is_disjoint(&prints[b]) {
                    let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                    comp[ra] = rb;
                }
            }
        }
        let mut roots: Vec<usize> = (0..members.len()).map(|i| find(&mut comp, i)).collect();
        roots.sort();
        roots.dedup();
        if roots.len() > 1 {
            out.push(Collision {
                class,
                length,
                representatives: roots.iter().map(|&r| aw.format(&members[r])).collect(),
            });
        }
    }
    Ok(out)
}
