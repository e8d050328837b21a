//! Schur elements of a symmetric algebra with split semisimple generic fiber.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct SchurElement {
    pub simple: String,
    pub dim: usize,
    pub value: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurSummary {
    pub simple: String,
    pub dim: usize,
    pub value: String,
}

/// `c_i = (1/dim S_i) sum_k chi_i(b_k) chi_i(b_k^dual)`, with the dual basis
/// taken with respect to the attached trace form.
pub fn schur_elements(an: &Analysis) -> Result<Vec<SchurElement>> {
    let a = an.algebra();
    let ring = a.ring();
    let tau = a
        .trace()
        .ok_or_else(|| Error::NotSymmetric(format!("{} has no trace form", a.name())))?;
    let generic = an.generic()?;
    let w = &generic.wedderburn;
    if w.radical_dim() > 0 || !w.is_split() {
        return Err(Error::NotSemisimpleGeneric(format!(
            "radical dimension {}, endomorphism dimensions {:?}",
            w.radical_dim(),
            w.endo_dims
        )));
    }
    let k = ring.fraction_field();
    let n = a.dim();
    let tau: Vec<Scalar> = tau.iter().map(|t| ring.to_fraction(t)).collect();
    let f = &generic.fiber;
    let gram: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let prod = f.multiply(&f.basis_vector(i), &f.basis_vector(j));
                    prod.iter().zip(&tau).fold(k.zero(), |acc, (x, t)| k.add(&acc, &k.mul(x, t)))
                })
                .collect()
        })
        .collect();
    let inv = Matrix::from_row_vectors(&k, n, &gram)
        .inverse()
        .map_err(|_| Error::NotSymmetric("trace form is degenerate".into()))?;
    let mut out = Vec::new();
    for (i, s) in w.simples.iter().enumerate() {
        let chi: Vec<Scalar> = s.module.action().iter().map(Matrix::trace).collect();
        // chi(b_l^dual) = sum_m inv[m][l] chi(b_m)
        let mut sum = k.zero();
        for l in 0..n {
            let dual = (0..n).fold(k.zero(), |acc, m| k.add(&acc, &k.mul(inv.get(m, l), &chi[m])));
            sum = k.add(&sum, &k.mul(&chi[l], &dual));
        }
        let value = k.div(&sum, &k.from_i64(s.dim() as i64));
        if k.is_zero(&value) || !ring.fraction_in_ring(&value) {
            return Err(Error::InvariantViolation(format!(
                "Schur element {} of S{} is zero or not in {ring}",
                k.format(&value),
                i + 1
            )));
        }
        out.push(SchurElement {
            simple: format!("S{}", i + 1),
            dim: s.dim(),
            value,
        });
    }
    Ok(out)
}

pub fn summarize(an: &Analysis, elements: &[SchurElement]) -> Vec<SchurSummary> {
    let k = an.algebra().ring().fraction_field();
    elements
        .iter()
        .map(|e| SchurSummary {
            simple: e.simple.clone(),
            dim: e.dim,
            value: k.format(&e.value),
        })
        .collect()
}
