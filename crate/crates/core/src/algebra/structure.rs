//! Finite free algebras over a supported base ring, given by structure
//! constants `b_i * b_j = sum_k c[i][j][k] b_k`.

use crate::arith::{Poly, PrimeSpec, Ring, RingMap, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFreeAlgebra {
    name: String,
    ring: Ring,
    basis: Vec<String>,
    consts: Vec<Vec<Vec<Poly>>>,
    unit: Vec<Poly>,
    trace: Option<Vec<Poly>>,
}

impl FiniteFreeAlgebra {
    /// Build and validate. `consts` is dense, indexed `[i][j][k]`.
    pub fn new(
        name: &str,
        ring: Ring,
        basis: Vec<String>,
        consts: Vec<Vec<Vec<Poly>>>,
        unit: Vec<Poly>,
        trace: Option<Vec<Poly>>,
    ) -> Result<FiniteFreeAlgebra> {
        let n = basis.len();
        let shape_ok = consts.len() == n
            && consts.iter().all(|r| r.len() == n && r.iter().all(|c| c.len() == n))
            && unit.len() == n
            && trace.as_ref().is_none_or(|t| t.len() == n);
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "structure constants, unit and trace must all have dimension {n}"
            )));
        }
        let elements = consts
            .iter()
            .flatten()
            .flatten()
            .chain(&unit)
            .chain(trace.iter().flatten());
        for c in elements {
            if !ring.contains(c) {
                return Err(Error::UnsupportedRing(format!(
                    "coefficient {} does not lie in {ring}",
                    c.format(ring.vars(), &ring.coefficient_field())
                )));
            }
        }
        let a = FiniteFreeAlgebra {
            name: name.to_string(),
            ring,
            basis,
            consts,
            unit,
            trace,
        };
        a.check_associative()?;
        a.check_unit()?;
        a.check_trace()?;
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Poly {
        &self.consts[i][j][k]
    }

    pub fn constants(&self) -> &[Vec<Vec<Poly>>] {
        &self.consts
    }

    pub fn unit(&self) -> &[Poly] {
        &self.unit
    }

    pub fn trace(&self) -> Option<&[Poly]> {
        self.trace.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> FiniteFreeAlgebra {
        self.name = name.to_string();
        self
    }

    /// Product of two coordinate vectors over the ring.
    pub fn multiply(&self, x: &[Poly], y: &[Poly]) -> Vec<Poly> {
        let r = &self.ring;
        let n = self.dim();
        let mut out = vec![r.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = r.mul(xi, yj);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.consts[i][j][k];
                    if !c.is_zero() {
                        *o = r.add(o, &r.mul(&s, c));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Poly> {
        let r = &self.ring;
        (0..self.dim()).map(|j| if i == j { r.one() } else { r.zero() }).collect()
    }

    /// Matrix of left multiplication by `x`: column `c` holds `x * b_c`.
    pub fn left_regular_matrix(&self, x: &[Poly]) -> Vec<Vec<Poly>> {
        let r = &self.ring;
        let n = self.dim();
        let mut m = vec![vec![r.zero(); n]; n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for c in 0..n {
                for (k, row) in m.iter_mut().enumerate() {
                    let s = &self.consts[i][c][k];
                    if !s.is_zero() {
                        row[c] = r.add(&row[c], &r.mul(xi, s));
                    }
                }
            }
        }
        m
    }

    /// `tr(L_{b_c})` for each basis element.
    pub fn regular_traces(&self) -> Vec<Poly> {
        let r = &self.ring;
        (0..self.dim())
            .map(|c| (0..self.dim()).fold(r.zero(), |acc, k| r.add(&acc, &self.consts[c][k][k])))
            .collect()
    }

    /// Gram matrix `G[i][j] = t(b_i b_j)` of a linear form given by its values on the basis.
    pub fn gram(&self, form: &[Poly]) -> Vec<Vec<Poly>> {
        let r = &self.ring;
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(r.zero(), |acc, k| {
                            let c = &self.consts[i][j][k];
                            if c.is_zero() || form[k].is_zero() {
                                acc
                            } else {
                                r.add(&acc, &r.mul(c, &form[k]))
                            }
                        })
                    })
                    .collect()
            })
            .collect()
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        // left[i][j] = b_i b_j as a vector
        for i in 0..n {
            for j in 0..n {
                let ij = &self.consts[i][j];
                for k in 0..n {
                    let lhs = self.multiply(ij, &self.basis_vector(k));
                    let rhs = self.multiply(&self.basis_vector(i), &self.consts[j][k]);
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = self.basis_vector(i);
            if self.multiply(&self.unit, &b) != b || self.multiply(&b, &self.unit) != b {
                return Err(Error::NoUnit(format!(
                    "u * {0} or {0} * u differs from {0}",
                    self.basis[i]
                )));
            }
        }
        Ok(())
    }

    fn check_trace(&self) -> Result<()> {
        let Some(t) = &self.trace else { return Ok(()) };
        let g = self.gram(t);
        let n = self.dim();
        for i in 0..n {
            for j in 0..i {
                if g[i][j] != g[j][i] {
                    return Err(Error::BadTraceForm(format!(
                        "t({0}{1}) differs from t({1}{0})",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
        }
        if self.ring_det(&g)?.is_zero() {
            return Err(Error::BadTraceForm("Gram matrix is singular".into()));
        }
        Ok(())
    }

    /// Determinant of a ring matrix, computed in the fraction field.
    pub fn ring_det(&self, m: &[Vec<Poly>]) -> Result<Poly> {
        ring_det(&self.ring, m)
    }

    /// Restriction `A/pA` over `R/p`, when that is a supported ring.
    pub fn restrict(&self, p: &PrimeSpec) -> Result<FiniteFreeAlgebra> {
        let map = p.restriction_map()?;
        Ok(self.map_ring(&map, &format!("{}|{}", self.name, p)))
    }

    /// Apply a ring map to every structure constant.
    pub fn map_ring(&self, map: &RingMap, name: &str) -> FiniteFreeAlgebra {
        if map.is_identity() {
            return self.clone().with_name(name);
        }
        let f = |v: &Vec<Poly>| v.iter().map(|c| map.apply(c)).collect::<Vec<_>>();
        FiniteFreeAlgebra {
            name: name.to_string(),
            ring: map.target().clone(),
            basis: self.basis.clone(),
            consts: self.consts.iter().map(|r| r.iter().map(f).collect()).collect(),
            unit: f(&self.unit),
            trace: self.trace.as_ref().map(f),
        }
    }

    /// Direct product with another algebra over the same ring.
    pub fn direct_sum(&self, other: &FiniteFreeAlgebra, name: &str) -> Result<FiniteFreeAlgebra> {
        if self.ring != other.ring {
            return Err(Error::UnsupportedRing(format!(
                "direct sum of algebras over {} and {}",
                self.ring, other.ring
            )));
        }
        let (n, m) = (self.dim(), other.dim());
        let r = &self.ring;
        let mut consts = vec![vec![vec![r.zero(); n + m]; n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    consts[i][j][k] = self.consts[i][j][k].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    consts[n + i][n + j][n + k] = other.consts[i][j][k].clone();
                }
            }
        }
        let mut basis: Vec<String> = self.basis.iter().map(|b| format!("{b}_1")).collect();
        basis.extend(other.basis.iter().map(|b| format!("{b}_2")));
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        let trace = match (&self.trace, &other.trace) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        FiniteFreeAlgebra::new(name, r.clone(), basis, consts, unit, trace)
    }
}

/// Determinant of a square matrix of ring elements.
pub fn ring_det(ring: &Ring, m: &[Vec<Poly>]) -> Result<Poly> {
    let frac = ring.fraction_field();
    let rows: Vec<Vec<Scalar>> = m
        .iter()
        .map(|r| r.iter().map(|a| ring.to_fraction(a)).collect())
        .collect();
    let d = Matrix::from_row_vectors(&frac, m.len(), &rows).det()?;
    ring.from_fraction(&d)
        .ok_or_else(|| Error::InvariantViolation("determinant left the ring".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> FiniteFreeAlgebra {
        let z = Ring::integers();
        let (o, l) = (z.zero(), z.one());
        let consts = vec![
            vec![vec![l.clone(), o.clone()], vec![o.clone(), l.clone()]],
            vec![vec![o.clone(), l.clone()], vec![l.clone(), o.clone()]],
        ];
        FiniteFreeAlgebra::new(
            "C2",
            z,
            vec!["1".into(), "s".into()],
            consts,
            vec![l.clone(), o.clone()],
            Some(vec![l, o]),
        )
        .unwrap()
    }

    #[test]
    fn loads_and_multiplies() {
        let a = c2();
        let s = a.basis_vector(1);
        assert_eq!(a.multiply(&s, &s), a.basis_vector(0));
        let z = a.ring().clone();
        assert_eq!(a.regular_traces(), vec![z.from_i64(2), z.zero()]);
    }

    #[test]
    fn bad_unit_is_rejected() {
        let z = Ring::integers();
        let (o, l) = (z.zero(), z.one());
        // s^2 = s with a unit vector that does not act as one
        let consts = vec![
            vec![vec![l.clone(), o.clone()], vec![o.clone(), l.clone()]],
            vec![vec![o.clone(), l.clone()], vec![o.clone(), l.clone()]],
        ];
        let r = FiniteFreeAlgebra::new("bad", z, vec!["1".into(), "s".into()], consts, vec![o.clone(), l], None);
        assert!(matches!(r, Err(Error::NoUnit(_)) | Err(Error::NotAssociative(..))));
    }
}
