/// A finite Weyl group element, stored as its exact action matrix on
/// coordinates in the fundamental-coweight basis (row-major, `n x n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub(crate) n: usize,
    pub(crate) mat: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut mat = vec![0; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElement { n, mat }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.mat[row * self.n + col]
    }

    /// Action on fundamental-coweight coordinates.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|k| self.mat[j * n + k] * v[k]).sum())
            .collect()
    }

    pub fn compose(&self, o: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut mat = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.mat[i * n + k];
                if a != 0 {
                    for j in 0..n {
                        mat[i * n + j] += a * o.mat[k * n + j];
                    }
                }
            }
        }
        WeylElement { n, mat }
    }

    /// Image of rho-check (all fundamental coordinates 1). It determines the
    /// element, and its negative coordinates are the left descents.
    pub fn rho_image(&self) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|k| self.mat[j * n + k]).sum())
            .collect()
    }
}

/// An element `t^lambda u` of the extended affine Weyl group, with `lambda`
/// in fundamental-coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    pub trans: Vec<i64>,
    pub fin: WeylElement,
}

impl AffineElement {
    pub fn identity(n: usize) -> Self {
        AffineElement {
            trans: vec![0; n],
            fin: WeylElement::identity(n),
        }
    }

    pub fn translation(lambda: Vec<i64>) -> Self {
        let n = lambda.len();
        AffineElement {
            trans: lambda,
            fin: WeylElement::identity(n),
        }
    }

    pub fn from_finite(u: WeylElement) -> Self {
        AffineElement {
            trans: vec![0; u.n],
            fin: u,
        }
    }

    pub fn rank(&self) -> usize {
        self.trans.len()
    }
}
