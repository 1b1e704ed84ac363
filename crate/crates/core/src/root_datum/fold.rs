use num_integer::Integer;

use super::{NodeSet, RationalVector, RootDatum};
use crate::error::{contract, Result};
use crate::linalg::{q, Q};

/// Transfer between a twisted datum and the split datum whose simple coroots
/// are the orbit averages of the original simple coroots.
///
/// Node `k` of the split datum is the `k`-th sigma-orbit (orbits ordered by
/// their smallest node). Fundamental weights of the split datum correspond to
/// orbit sums of fundamental weights.
#[derive(Debug)]
pub struct Folding {
    split: RootDatum,
    orbits: Vec<Vec<usize>>,
}

impl Folding {
    pub(super) fn new(d: &RootDatum) -> Result<Folding> {
        let orbits = d.orbits().to_vec();
        let m = orbits.len();
        // Orbits containing two joined nodes use twice the sum of simple roots.
        let weight: Vec<i64> = orbits
            .iter()
            .map(|o| {
                let joined = o
                    .iter()
                    .any(|&i| o.iter().any(|&j| i != j && d.cartan(i, j) != 0));
                if joined {
                    2
                } else {
                    1
                }
            })
            .collect();
        let mut cartan = vec![vec![0i64; m]; m];
        for (a, p) in orbits.iter().enumerate() {
            for (b, o) in orbits.iter().enumerate() {
                let s: i64 = p
                    .iter()
                    .flat_map(|&i| o.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| d.cartan(i, j))
                    .sum();
                let num = s * weight[b];
                let den = p.len() as i64;
                if !num.is_multiple_of(&den) {
                    return contract("folded Cartan matrix is not integral");
                }
                cartan[a][b] = num / den;
            }
        }
        for (a, row) in cartan.iter().enumerate() {
            if row[a] != 2 {
                return contract("folded Cartan matrix has a non-2 diagonal entry");
            }
        }
        let split = RootDatum::from_cartan(cartan)?;
        Ok(Folding { split, orbits })
    }

    pub fn split(&self) -> &RootDatum {
        &self.split
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Maps a sigma-invariant vector to the split datum.
    pub fn to_split(&self, v: &RationalVector) -> Result<RationalVector> {
        let mut c = Vec::with_capacity(self.orbits.len());
        for o in &self.orbits {
            let x = &v.coords[o[0]];
            if o.iter().any(|&i| &v.coords[i] != x) {
                return contract(format!("{v} is not sigma-invariant"));
            }
            c.push(x * q(o.len() as i64));
        }
        Ok(RationalVector { coords: c })
    }

    pub fn from_split(&self, v: &RationalVector) -> RationalVector {
        let n: usize = self.orbits.iter().map(|o| o.len()).sum();
        let mut c = vec![Q::from_integer(0.into()); n];
        for (k, o) in self.orbits.iter().enumerate() {
            for &i in o {
                c[i] = &v.coords[k] / q(o.len() as i64);
            }
        }
        RationalVector { coords: c }
    }

    pub fn nodes_to_split(&self, s: NodeSet) -> NodeSet {
        NodeSet::from_iter(
            self.orbits
                .iter()
                .enumerate()
                .filter(|(_, o)| o.iter().any(|&i| s.contains(i)))
                .map(|(k, _)| k),
        )
    }

    pub fn nodes_from_split(&self, s: NodeSet) -> NodeSet {
        NodeSet::from_iter(s.iter().flat_map(|k| self.orbits[k].iter().copied()))
    }
}
