//! Jacobson radical, simple modules and splitting data of a fiber algebra.

use std::cmp::Ordering;

use serde::Serialize;

use super::chop::chop;
use super::module::AlgebraModule;
use crate::algebra::{FiberAlgebra, Subspace};
use crate::arith::Field;
use crate::bn::{fingerprint, Fingerprint};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::options::Options;

#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub module: AlgebraModule,
    pub fingerprint: Fingerprint,
}

impl SimpleModule {
    pub fn new(module: AlgebraModule) -> SimpleModule {
        let fingerprint = fingerprint(&module);
        SimpleModule { module, fingerprint }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Canonical order: dimension, then fingerprint.
    pub fn canonical_cmp(&self, other: &SimpleModule) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.fingerprint.cmp_canonical(&other.fingerprint))
    }
}

#[derive(Clone, Debug)]
pub struct WedderburnData {
    pub field: Field,
    pub algebra_dim: usize,
    /// Simple modules in canonical order.
    pub simples: Vec<SimpleModule>,
    /// Multiplicity of each simple in the semisimple quotient `A/J`.
    pub multiplicities: Vec<usize>,
    /// Composition multiplicity of each simple in the regular module.
    pub regular_multiplicities: Vec<usize>,
    /// `dim End_A(S_i)`.
    pub endo_dims: Vec<usize>,
    pub radical: Subspace,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleSummary {
    pub id: String,
    pub dim: usize,
    pub endomorphism_dim: usize,
    pub multiplicity: usize,
    pub fingerprint: Vec<Vec<String>>,
}

impl WedderburnData {
    pub fn radical_dim(&self) -> usize {
        self.radical.dim()
    }

    pub fn is_split(&self) -> bool {
        self.endo_dims.iter().all(|&e| e == 1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.simples.iter().map(SimpleModule::dim).collect()
    }

    pub fn summaries(&self, prefix: &str) -> Vec<SimpleSummary> {
        self.simples
            .iter()
            .enumerate()
            .map(|(i, s)| SimpleSummary {
                id: format!("{prefix}{}", i + 1),
                dim: s.dim(),
                endomorphism_dim: self.endo_dims[i],
                multiplicity: self.multiplicities[i],
                fingerprint: s.fingerprint.coefficient_strings(),
            })
            .collect()
    }

    pub fn require_split(&self, what: &str) -> Result<()> {
        if self.is_split() {
            Ok(())
        } else {
            Err(Error::NotSplit(format!(
                "{what}: endomorphism dimensions {:?}",
                self.endo_dims
            )))
        }
    }
}

/// Simple modules of a fiber, as composition factors of its regular module,
/// with their multiplicities there.
pub fn simple_modules(f: &FiberAlgebra, opts: &Options) -> Result<Vec<(SimpleModule, usize)>> {
    let mut out: Vec<(SimpleModule, usize)> = chop(&AlgebraModule::regular(f), opts)?
        .into_iter()
        .map(|(m, c)| (SimpleModule::new(m), c))
        .collect();
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(out)
}

/// Radical as the common kernel of the actions on the given simples.
fn radical_from_simples(f: &FiberAlgebra, simples: &[SimpleModule]) -> Subspace {
    let k = f.field();
    let width: usize = simples.iter().map(|s| s.dim() * s.dim()).sum();
    let rows: Vec<Vec<_>> = (0..f.dim())
        .map(|i| {
            simples
                .iter()
                .flat_map(|s| s.module.action()[i].row_vectors().into_iter().flatten())
                .collect()
        })
        .collect();
    let m = Matrix::from_row_vectors(k, width, &rows);
    Subspace::spanned_by(k, f.dim(), &m.left_kernel_basis())
}

/// Radical in characteristic zero: kernel of the regular trace form.
fn radical_by_trace_form(f: &FiberAlgebra) -> Subspace {
    Subspace::spanned_by(f.field(), f.dim(), &f.trace_gram().kernel_basis())
}

fn check_radical(f: &FiberAlgebra, j: &Subspace) -> Result<()> {
    if f.nilpotency_index(j).is_none() || f.ideal_closure(j.basis()) != *j {
        return Err(Error::RadicalNotNilpotent);
    }
    Ok(())
}

/// Jacobson radical of a fiber.
pub fn radical(f: &FiberAlgebra, opts: &Options) -> Result<Subspace> {
    let j = if f.field().characteristic() == 0 {
        radical_by_trace_form(f)
    } else {
        let simples: Vec<SimpleModule> = simple_modules(f, opts)?.into_iter().map(|(s, _)| s).collect();
        radical_from_simples(f, &simples)
    };
    check_radical(f, &j)?;
    Ok(j)
}

/// Simples, radical and endomorphism data of a fiber.
pub fn wedderburn(f: &FiberAlgebra, opts: &Options) -> Result<WedderburnData> {
    let found = simple_modules(f, opts)?;
    let simples: Vec<SimpleModule> = found.iter().map(|(s, _)| s.clone()).collect();
    let regular_multiplicities = found.iter().map(|(_, c)| *c).collect();
    let radical = if f.field().characteristic() == 0 {
        radical_by_trace_form(f)
    } else {
        radical_from_simples(f, &simples)
    };
    check_radical(f, &radical)?;
    let endo_dims: Vec<usize> = simples.iter().map(|s| s.module.endomorphism_dim()).collect();
    let multiplicities: Vec<usize> = simples
        .iter()
        .zip(&endo_dims)
        .map(|(s, &e)| s.dim() / e)
        .collect();
    let semisimple: usize = simples.iter().zip(&multiplicities).map(|(s, m)| s.dim() * m).sum();
    if radical.dim() + semisimple != f.dim() {
        return Err(Error::InvariantViolation(format!(
            "radical {} plus semisimple part {semisimple} differs from dimension {}",
            radical.dim(),
            f.dim()
        )));
    }
    Ok(WedderburnData {
        field: f.field().clone(),
        algebra_dim: f.dim(),
        simples,
        multiplicities,
        regular_multiplicities,
        endo_dims,
        radical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upper_triangular(k: &Field) -> FiberAlgebra {
        // basis e11, e12, e22
        let mut c = vec![vec![vec![k.zero(); 3]; 3]; 3];
        c[0][0][0] = k.one();
        c[0][1][1] = k.one();
        c[1][2][1] = k.one();
        c[2][2][2] = k.one();
        FiberAlgebra::new(k, c, vec![k.one(), k.zero(), k.one()], "UT2", "test").unwrap()
    }

    #[test]
    fn radical_of_upper_triangular() {
        for k in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
            let f = upper_triangular(&k);
            let j = radical(&f, &Options::default()).unwrap();
            assert_eq!(j.basis(), &[f.basis_vector(1)]);
            let w = wedderburn(&f, &Options::default()).unwrap();
            assert!(w.is_split());
            assert_eq!(w.dims(), vec![1, 1]);
        }
    }
}
