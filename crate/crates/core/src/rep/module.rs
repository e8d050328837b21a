//! Modules over fiber algebras, given by one action matrix per basis element.

use crate::algebra::{EchelonBuilder, FiberAlgebra, Subspace};
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraModule {
    field: Field,
    dim: usize,
    action: Vec<Matrix>,
}

impl AlgebraModule {
    /// Wrap action matrices (one per algebra basis element) without checks.
    pub fn from_action(field: &Field, dim: usize, action: Vec<Matrix>) -> AlgebraModule {
        debug_assert!(action.iter().all(|m| m.rows() == dim && m.cols() == dim));
        AlgebraModule {
            field: field.clone(),
            dim,
            action,
        }
    }

    pub fn regular(f: &FiberAlgebra) -> AlgebraModule {
        let action = (0..f.dim())
            .map(|i| f.left_regular_matrix(&f.basis_vector(i)))
            .collect();
        AlgebraModule::from_action(f.field(), f.dim(), action)
    }

    /// Check that the action respects the structure constants and the unit.
    pub fn validate(&self, f: &FiberAlgebra) -> Result<()> {
        let k = &self.field;
        let n = f.dim();
        if self.action.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {n}",
                self.action.len()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j])?;
                let rhs = self.act(&f.constants()[i][j]);
                if lhs != rhs {
                    return Err(Error::NotAssociative(i, j, 0));
                }
            }
        }
        if self.act(f.unit()) != Matrix::identity(k, self.dim) {
            return Err(Error::NoUnit("unit does not act as the identity".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Action matrix of an algebra element given by coordinates.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let k = &self.field;
        let mut m = Matrix::zeros(k, self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !k.is_zero(c) {
                m = m.add(&a.scale(c)).expect("same shape");
            }
        }
        m
    }

    /// Smallest submodule containing `v`.
    pub fn spin(&self, v: &[Scalar]) -> Subspace {
        spin_with(&self.field, self.dim, &self.action, v)
    }

    /// Smallest subspace of the dual containing `w` and stable under the transposed action.
    pub fn dual_spin(&self, w: &[Scalar]) -> Subspace {
        let t: Vec<Matrix> = self.action.iter().map(Matrix::transpose).collect();
        spin_with(&self.field, self.dim, &t, w)
    }

    /// Restriction to an invariant subspace, in its echelon basis.
    pub fn submodule(&self, w: &Subspace) -> AlgebraModule {
        let k = &self.field;
        let d = w.dim();
        let action = self
            .action
            .iter()
            .map(|g| {
                let mut s = Matrix::zeros(k, d, d);
                for (j, b) in w.basis().iter().enumerate() {
                    let img = g.mul_vec(b);
                    for (l, c) in w.coordinates(&img).into_iter().enumerate() {
                        s.set(l, j, c);
                    }
                }
                s
            })
            .collect();
        AlgebraModule::from_action(k, d, action)
    }

    /// Action on `M / W`, with basis the standard vectors off the pivots of `W`.
    pub fn quotient(&self, w: &Subspace) -> AlgebraModule {
        let k = &self.field;
        let cols = w.complement_columns();
        let d = cols.len();
        let action = self
            .action
            .iter()
            .map(|g| {
                let mut q = Matrix::zeros(k, d, d);
                for (j, &c) in cols.iter().enumerate() {
                    let r = w.reduce(&g.column(c));
                    for (l, &c2) in cols.iter().enumerate() {
                        q.set(l, j, r[c2].clone());
                    }
                }
                q
            })
            .collect();
        AlgebraModule::from_action(k, d, action)
    }

    pub fn direct_sum(&self, other: &AlgebraModule) -> AlgebraModule {
        let k = &self.field;
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(k, d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        AlgebraModule::from_action(k, d, action)
    }

    /// The same module in another basis: `P^-1 g P` for every action matrix.
    pub fn change_basis(&self, p: &Matrix) -> Result<AlgebraModule> {
        let inv = p.inverse()?;
        let action = self
            .action
            .iter()
            .map(|g| inv.mul(&g.mul(p)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraModule::from_action(&self.field, self.dim, action))
    }

    /// Dimension of the image of the algebra in `End(M)`.
    pub fn image_dim(&self) -> usize {
        let flat: Vec<Vec<Scalar>> = self
            .action
            .iter()
            .map(|m| m.row_vectors().into_iter().flatten().collect())
            .collect();
        Matrix::from_row_vectors(&self.field, self.dim * self.dim, &flat).rank()
    }

    /// `dim Hom_A(self, other)`: matrices `X` with `other(b) X = X self(b)`.
    pub fn hom_dim(&self, other: &AlgebraModule) -> usize {
        let k = &self.field;
        let (s, t) = (self.dim, other.dim);
        let unknowns = t * s;
        if unknowns == 0 {
            return 0;
        }
        let mut rows = Vec::new();
        for (a, b) in self.action.iter().zip(&other.action) {
            for r in 0..t {
                for c in 0..s {
                    let mut eq = vec![k.zero(); unknowns];
                    // (b X)[r][c] = sum_l b[r][l] X[l][c]
                    for l in 0..t {
                        let v = b.get(r, l);
                        if !k.is_zero(v) {
                            eq[l * s + c] = k.add(&eq[l * s + c], v);
                        }
                    }
                    // (X a)[r][c] = sum_l X[r][l] a[l][c]
                    for l in 0..s {
                        let v = a.get(l, c);
                        if !k.is_zero(v) {
                            eq[r * s + l] = k.sub(&eq[r * s + l], v);
                        }
                    }
                    rows.push(eq);
                }
            }
        }
        unknowns - Matrix::from_row_vectors(k, unknowns, &rows).rank()
    }

    pub fn endomorphism_dim(&self) -> usize {
        self.hom_dim(self)
    }
}

fn spin_with(k: &Field, dim: usize, gens: &[Matrix], v: &[Scalar]) -> Subspace {
    let mut ech = EchelonBuilder::new(k);
    let mut queue = Vec::new();
    if ech.insert(v) {
        queue.push(v.to_vec());
    }
    while let Some(x) = queue.pop() {
        if ech.len() == dim {
            break;
        }
        for g in gens {
            let y = g.mul_vec(&x);
            if ech.insert(&y) {
                queue.push(y);
            }
        }
    }
    ech.finish(dim)
}
