use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::linalg::{q, Q};

/// A coweight-side vector, stored in the basis of simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector {
    pub coords: Vec<Q>,
}

/// A weight-side vector, stored in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl RationalVector {
    pub fn zero(n: usize) -> Self {
        RationalVector {
            coords: vec![Q::zero(); n],
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RationalVector {
            coords: v.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self, c: &Q) -> Self {
        RationalVector {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    /// Nodes with strictly positive coefficient.
    pub fn positive_support(&self) -> NodeSet {
        NodeSet::from_iter(
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, x)| x.is_positive())
                .map(|(i, _)| i),
        )
    }

    /// Nodes with nonzero coefficient.
    pub fn support(&self) -> NodeSet {
        NodeSet::from_iter(
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, _)| i),
        )
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(|x| x.to_string()).collect()
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, o: &RationalVector) -> RationalVector {
        RationalVector {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, o: &RationalVector) -> RationalVector {
        RationalVector {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl Weight {
    pub fn from_ints(v: &[i64]) -> Self {
        Weight {
            coords: v.iter().map(|&x| q(x)).collect(),
        }
    }
}

/// A set of Dynkin nodes (0-based), at most 32 of them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeSet(pub u32);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn full(n: usize) -> Self {
        NodeSet(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn single(i: usize) -> Self {
        NodeSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 | o.0)
    }

    pub fn intersection(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 & o.0)
    }

    pub fn minus(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: NodeSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// 1-based labels, as used in all textual output.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = NodeSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.labels().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", l.join(","))
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}
