//! Finite-dimensional `gl_m`-modules given by the matrices of `E_ab`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational};
use crate::grassmann::{gamma, Shape};

/// Matrices `ρ(E_ab)` on a `dim`-dimensional space, stored at `a*m + b`.
#[derive(Clone, Debug, PartialEq)]
pub struct GlModule {
    m: usize,
    dim: usize,
    e: Vec<QMatrix>,
}

impl GlModule {
    /// Validated construction; fails unless
    /// `[ρ(E_ab), ρ(E_cd)] = δ_bc ρ(E_ad) − δ_da ρ(E_cb)`.
    pub fn new(m: usize, e: Vec<QMatrix>) -> Result<Self> {
        if e.len() != m * m {
            return Err(Error::NotARepresentation(format!(
                "expected {} matrices, got {}",
                m * m,
                e.len()
            )));
        }
        let dim = e.first().map_or(0, QMatrix::rows);
        if e.iter().any(|x| x.rows() != dim || x.cols() != dim) {
            return Err(Error::NotARepresentation("matrices of unequal size".into()));
        }
        let module = GlModule { m, dim, e };
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let m = self.m;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let lhs = self.e(a, b).commutator(self.e(c, d));
                        let mut rhs = QMatrix::zeros(self.dim, self.dim);
                        if b == c {
                            rhs = &rhs + self.e(a, d);
                        }
                        if d == a {
                            rhs = &rhs - self.e(c, b);
                        }
                        if lhs != rhs {
                            return Err(Error::NotARepresentation(format!(
                                "bracket of E_{}{} and E_{}{} fails",
                                a + 1,
                                b + 1,
                                c + 1,
                                d + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial one-dimensional module.
    pub fn trivial(m: usize) -> Self {
        Self::scalar_character(m, Rational::from_integer(0.into()))
    }

    /// One-dimensional module with every `E_aa ↦ t` (any `t` is allowed,
    /// the off-diagonal units act by 0).
    pub fn scalar_character(m: usize, t: Rational) -> Self {
        let e = (0..m * m)
            .map(|k| {
                if k / m == k % m {
                    QMatrix::scalar(1, t.clone())
                } else {
                    QMatrix::zeros(1, 1)
                }
            })
            .collect();
        GlModule { m, dim: 1, e }
    }

    /// The natural module `C^m`.
    pub fn natural(m: usize) -> Self {
        let e = (0..m * m)
            .map(|k| QMatrix::from_triplets(m, m, [(k / m, k % m, Rational::one())]))
            .collect();
        GlModule { m, dim: m, e }
    }

    /// `G(C^m ⊗ C^n)` with `E_ab ↦ γ(E_ab)`.
    pub fn grassmann(m: usize, n: usize) -> Self {
        let shape = Shape::new(m, n);
        let e = (0..m * m)
            .map(|k| gamma(shape, k / m, k % m).expect("in range").to_matrix())
            .collect();
        GlModule { m, dim: shape.dim(), e }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn e(&self, a: usize, b: usize) -> &QMatrix {
        &self.e[a * self.m + b]
    }

    /// Tensor product `V ⊗ W` (index of `v ⊗ w` is `v * dim W + w`).
    pub fn tensor(&self, other: &GlModule) -> GlModule {
        assert_eq!(self.m, other.m, "rank mismatch");
        let (i1, i2) = (QMatrix::identity(self.dim), QMatrix::identity(other.dim));
        let e = self
            .e
            .iter()
            .zip(&other.e)
            .map(|(x, y)| &x.kron(&i2) + &i1.kron(y))
            .collect();
        GlModule {
            m: self.m,
            dim: self.dim * other.dim,
            e,
        }
    }

    /// Restriction to the subspace spanned by the columns of `basis`
    /// (which must be invariant).
    pub fn restrict(&self, basis: &crate::exact::Subspace) -> Result<GlModule> {
        let e = self
            .e
            .iter()
            .map(|x| {
                basis
                    .restrict(x)
                    .ok_or_else(|| Error::NotARepresentation("subspace is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GlModule {
            m: self.m,
            dim: basis.dim(),
            e,
        })
    }
}
