use std::fmt;

use crate::error::{contract, Error, Result};

/// Irreducible finite Cartan types with Bourbaki node numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let t = match (letter.to_ascii_uppercase(), rank) {
            ('A', n) if n >= 1 => CartanType::A(n),
            ('B', n) if n >= 2 => CartanType::B(n),
            ('C', n) if n >= 2 => CartanType::C(n),
            ('D', n) if n >= 4 => CartanType::D(n),
            ('E', n) if (6..=8).contains(&n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            (l, n) => return contract(format!("unknown Cartan type {l}{n}")),
        };
        if t.rank() > 16 {
            return contract("rank above 16 is not supported");
        }
        Ok(t)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or(Error::Parse {
            pos: 0,
            msg: "empty type".into(),
        })?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Parse {
            pos: 1,
            msg: format!("bad rank in {s:?}"),
        })?;
        Self::new(letter, rank)
    }

    pub fn letter(&self) -> char {
        match self {
            CartanType::A(_) => 'A',
            CartanType::B(_) => 'B',
            CartanType::C(_) => 'C',
            CartanType::D(_) => 'D',
            CartanType::E(_) => 'E',
            CartanType::F4 => 'F',
            CartanType::G2 => 'G',
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Matrix with entry `[i][j] = <alpha_i^vee, alpha_j>`, 0-based nodes.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match *self {
            CartanType::A(_)
            | CartanType::B(_)
            | CartanType::C(_)
            | CartanType::F4
            | CartanType::G2 => {
                for i in 0..n - 1 {
                    bond(i, i + 1);
                }
            }
            CartanType::D(_) => {
                for i in 0..n - 2 {
                    bond(i, i + 1);
                }
                bond(n - 3, n - 1);
            }
            CartanType::E(_) => {
                bond(0, 2);
                bond(1, 3);
                for i in 2..n - 1 {
                    bond(i, i + 1);
                }
            }
        }
        match *self {
            CartanType::B(_) => a[n - 1][n - 2] = -2,
            CartanType::C(_) => a[n - 2][n - 1] = -2,
            CartanType::F4 => a[2][1] = -2,
            CartanType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }

    pub fn weyl_group_order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        match *self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u128 << n) * fact(n),
            CartanType::D(n) => (1u128 << (n - 1)) * fact(n),
            CartanType::E(6) => 51_840,
            CartanType::E(7) => 2_903_040,
            CartanType::E(_) => 696_729_600,
            CartanType::F4 => 1_152,
            CartanType::G2 => 12,
        }
    }

    /// All irreducible types of the given rank, in the order used to name
    /// an anonymous Cartan matrix (so rank 2 with a double bond reads as C2).
    pub(crate) fn candidates(rank: usize) -> Vec<CartanType> {
        let mut v = vec![CartanType::A(rank)];
        if rank >= 2 {
            v.push(CartanType::C(rank));
            v.push(CartanType::B(rank));
        }
        if rank >= 4 {
            v.push(CartanType::D(rank));
        }
        if (6..=8).contains(&rank) {
            v.push(CartanType::E(rank));
        }
        if rank == 4 {
            v.push(CartanType::F4);
        }
        if rank == 2 {
            v.push(CartanType::G2);
        }
        v
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

/// Finds a node relabelling `perm` with `m[perm[i]][perm[j]] == standard[i][j]`
/// for some irreducible type.
pub(crate) fn identify(m: &[Vec<i64>]) -> Option<(CartanType, Vec<usize>)> {
    let n = m.len();
    for t in CartanType::candidates(n) {
        let s = t.cartan_matrix();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if extend(&s, m, 0, &mut perm, &mut used) {
            return Some((t, perm));
        }
    }
    None
}

fn extend(s: &[Vec<i64>], m: &[Vec<i64>], k: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
    let n = s.len();
    if k == n {
        return true;
    }
    for c in 0..n {
        if used[c] {
            continue;
        }
        if (0..k).all(|j| s[k][j] == m[c][perm[j]] && s[j][k] == m[perm[j]][c]) {
            perm[k] = c;
            used[c] = true;
            if extend(s, m, k + 1, perm, used) {
                return true;
            }
            used[c] = false;
        }
    }
    false
}
