//! Subspaces of `k^n` kept in reduced row echelon form.

use crate::arith::{Field, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::spanned_by(field, ambient, &Matrix::identity(field, ambient).row_vectors())
    }

    pub fn spanned_by(field: &Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let e = Matrix::from_row_vectors(field, ambient, vectors).rref();
        let basis = (0..e.pivots.len()).map(|i| e.matrix.row(i).to_vec()).collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots: e.pivots,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns not used as pivots: a complement basis of standard vectors.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus its component along the subspace; zero in the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if k.is_zero(&c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !k.is_zero(r) {
                    *o = k.sub(o, &k.mul(&c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::spanned_by(&self.field, self.ambient, &v)
    }

    pub fn format_basis(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|r| r.iter().map(|x| self.field.format(x)).collect())
            .collect()
    }
}

/// Incremental echelon basis used while spinning and closing.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    field: Field,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: &Field) -> EchelonBuilder {
        EchelonBuilder {
            field: field.clone(),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if k.is_zero(&c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !k.is_zero(r) {
                    *o = k.sub(o, &k.mul(&c, r));
                }
            }
        }
        out
    }

    /// Add `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let k = &self.field;
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&r[p]);
        let r: Vec<Scalar> = r.iter().map(|x| k.mul(x, &inv)).collect();
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn finish(self, ambient: usize) -> Subspace {
        Subspace::spanned_by(&self.field, ambient, &self.rows)
    }
}
