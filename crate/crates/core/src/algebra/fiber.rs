//! Algebras over a field: fibers of a finite free algebra, and everything
//! built from them (ideals, quotients, regular representations).

use super::structure::FiniteFreeAlgebra;
use super::subspace::{EchelonBuilder, Subspace};
use crate::arith::{Field, PrimeSpec, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberAlgebra {
    field: Field,
    consts: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    /// Name of the algebra this fiber came from, and the prime.
    parent: String,
    prime: String,
}

impl FiberAlgebra {
    /// Build and validate an algebra over a field.
    pub fn new(
        field: &Field,
        consts: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        parent: &str,
        prime: &str,
    ) -> Result<FiberAlgebra> {
        let n = unit.len();
        if consts.len() != n || consts.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::DimensionMismatch(format!("expected {n}x{n}x{n} constants")));
        }
        let f = FiberAlgebra {
            field: field.clone(),
            consts,
            unit,
            parent: parent.to_string(),
            prime: prime.to_string(),
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.multiply(&self.consts[i][j], &self.basis_vector(k));
                    let rhs = self.multiply(&self.basis_vector(i), &self.consts[j][k]);
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..n {
            let b = self.basis_vector(i);
            if self.multiply(&self.unit, &b) != b || self.multiply(&b, &self.unit) != b {
                return Err(Error::NoUnit(format!("basis element {i}")));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.consts
    }

    pub fn parent(&self) -> &str {
        &self.parent
    }

    pub fn prime(&self) -> &str {
        &self.prime
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let k = &self.field;
        (0..self.dim()).map(|j| if i == j { k.one() } else { k.zero() }).collect()
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let n = self.dim();
        let mut out = vec![k.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if k.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if k.is_zero(yj) {
                    continue;
                }
                let s = k.mul(xi, yj);
                for (l, o) in out.iter_mut().enumerate() {
                    let c = &self.consts[i][j][l];
                    if !k.is_zero(c) {
                        *o = k.add(o, &k.mul(&s, c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`; column `c` holds `x * b_c`.
    pub fn left_regular_matrix(&self, x: &[Scalar]) -> Matrix {
        let k = &self.field;
        let n = self.dim();
        let mut m = Matrix::zeros(k, n, n);
        for (i, xi) in x.iter().enumerate() {
            if k.is_zero(xi) {
                continue;
            }
            for c in 0..n {
                for l in 0..n {
                    let s = &self.consts[i][c][l];
                    if !k.is_zero(s) {
                        let v = k.add(m.get(l, c), &k.mul(xi, s));
                        m.set(l, c, v);
                    }
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`; column `c` holds `b_c * x`.
    pub fn right_regular_matrix(&self, x: &[Scalar]) -> Matrix {
        let k = &self.field;
        let n = self.dim();
        let mut m = Matrix::zeros(k, n, n);
        for (i, xi) in x.iter().enumerate() {
            if k.is_zero(xi) {
                continue;
            }
            for c in 0..n {
                for l in 0..n {
                    let s = &self.consts[c][i][l];
                    if !k.is_zero(s) {
                        let v = k.add(m.get(l, c), &k.mul(xi, s));
                        m.set(l, c, v);
                    }
                }
            }
        }
        m
    }

    /// Smallest two-sided ideal containing the generators.
    pub fn ideal_closure(&self, gens: &[Vec<Scalar>]) -> Subspace {
        let n = self.dim();
        let mut ech = EchelonBuilder::new(&self.field);
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for g in gens {
            if ech.insert(g) {
                queue.push(g.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for i in 0..n {
                let b = self.basis_vector(i);
                for w in [self.multiply(&b, &v), self.multiply(&v, &b)] {
                    if ech.insert(&w) {
                        queue.push(w);
                    }
                }
            }
        }
        ech.finish(n)
    }

    /// Span of all products `x y` with `x` in `a` and `y` in `b`.
    pub fn product_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut ech = EchelonBuilder::new(&self.field);
        for x in a.basis() {
            for y in b.basis() {
                ech.insert(&self.multiply(x, y));
            }
        }
        ech.finish(self.dim())
    }

    /// Quotient by a two-sided ideal, on the complement of the ideal's pivot columns.
    pub fn quotient(&self, ideal: &Subspace) -> Result<FiberAlgebra> {
        if ideal.contains(&self.unit) {
            return Err(Error::UnitInIdeal);
        }
        let cols = ideal.complement_columns();
        let k = &self.field;
        let project = |v: Vec<Scalar>| -> Vec<Scalar> {
            let r = ideal.reduce(&v);
            cols.iter().map(|&c| r[c].clone()).collect()
        };
        let consts = cols
            .iter()
            .map(|&i| {
                cols.iter()
                    .map(|&j| project(self.consts[i][j].clone()))
                    .collect()
            })
            .collect();
        let unit = project(self.unit.clone());
        let out = FiberAlgebra {
            field: k.clone(),
            consts,
            unit,
            parent: self.parent.clone(),
            prime: self.prime.clone(),
        };
        debug_assert!(out.validate().is_ok(), "quotient by a non-ideal");
        Ok(out)
    }

    /// Smallest `N` with `I^N = 0`, or `None` when the powers stabilize at a
    /// nonzero ideal. The zero ideal has index 1.
    pub fn nilpotency_index(&self, ideal: &Subspace) -> Option<usize> {
        let mut power = ideal.clone();
        let mut n = 1;
        while !power.is_zero() {
            let next = self.product_span(&power, ideal);
            if next.dim() == power.dim() {
                return None;
            }
            power = next;
            n += 1;
        }
        Some(n)
    }

    /// Gram matrix of the regular trace form `tr(L_{b_i} L_{b_j})`.
    pub fn trace_gram(&self) -> Matrix {
        let k = &self.field;
        let n = self.dim();
        let traces: Vec<Scalar> = (0..n)
            .map(|c| (0..n).fold(k.zero(), |acc, l| k.add(&acc, &self.consts[c][l][l])))
            .collect();
        let mut g = Matrix::zeros(k, n, n);
        for i in 0..n {
            for j in 0..n {
                let v = (0..n).fold(k.zero(), |acc, l| {
                    let c = &self.consts[i][j][l];
                    if k.is_zero(c) {
                        acc
                    } else {
                        k.add(&acc, &k.mul(c, &traces[l]))
                    }
                });
                g.set(i, j, v);
            }
        }
        g
    }
}

/// The fiber `k(p) ⊗ A`.
pub fn specialize(a: &FiniteFreeAlgebra, p: &PrimeSpec) -> Result<FiberAlgebra> {
    if p.ring() != a.ring() {
        return Err(Error::UnsupportedRing(format!(
            "prime {p} lives in {}, algebra over {}",
            p.ring(),
            a.ring()
        )));
    }
    let consts = a
        .constants()
        .iter()
        .map(|r| r.iter().map(|v| v.iter().map(|c| p.reduce(c)).collect()).collect())
        .collect();
    let unit = a.unit().iter().map(|c| p.reduce(c)).collect();
    Ok(FiberAlgebra {
        field: p.residue_field().clone(),
        consts,
        unit,
        parent: a.name().to_string(),
        prime: p.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Ring;

    /// B_2 over Q with the loop parameter set to zero.
    fn b2_at_zero() -> FiberAlgebra {
        let k = Field::Rationals;
        let v = |a: i64, b: i64, c: i64| vec![k.from_i64(a), k.from_i64(b), k.from_i64(c)];
        let consts = vec![
            vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)],
            vec![v(0, 1, 0), v(1, 0, 0), v(0, 0, 1)],
            vec![v(0, 0, 1), v(0, 0, 1), v(0, 0, 0)],
        ];
        FiberAlgebra::new(&k, consts, v(1, 0, 0), "B2", "(delta)").unwrap()
    }

    #[test]
    fn ideal_quotient_nilpotency() {
        let f = b2_at_zero();
        let k = f.field().clone();
        let u = f.basis_vector(2);
        let i = f.ideal_closure(&[u]);
        assert_eq!(i.dim(), 1);
        assert_eq!(f.nilpotency_index(&i), Some(2));
        let q = f.quotient(&i).unwrap();
        assert_eq!(q.dim(), 2);
        let s = q.basis_vector(1);
        assert_eq!(q.multiply(&s, &s), q.basis_vector(0));
        assert!(f.ideal_closure(&[]).is_zero());
        assert_eq!(f.ideal_closure(&[f.unit().to_vec()]).dim(), 3);
        assert_eq!(f.nilpotency_index(&Subspace::zero(&k, 3)), Some(1));
        assert_eq!(f.nilpotency_index(&Subspace::full(&k, 3)), None);
        assert_eq!(f.quotient(&Subspace::full(&k, 3)), Err(Error::UnitInIdeal));
    }

    #[test]
    fn regular_matrices() {
        let f = b2_at_zero();
        let k = f.field().clone();
        assert_eq!(f.left_regular_matrix(f.unit()), Matrix::identity(&k, 3));
        let s = f.left_regular_matrix(&f.basis_vector(1));
        assert_eq!(s, Matrix::from_i64(&k, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]));
    }

    #[test]
    fn generic_fiber_of_integer_algebra() {
        let z = Ring::integers();
        let (o, l) = (z.zero(), z.one());
        let consts = vec![
            vec![vec![l.clone(), o.clone()], vec![o.clone(), l.clone()]],
            vec![vec![o.clone(), l.clone()], vec![l.clone(), o.clone()]],
        ];
        let a = FiniteFreeAlgebra::new("C2", z.clone(), vec!["1".into(), "s".into()], consts, vec![l, o], None)
            .unwrap();
        let f2 = specialize(&a, &PrimeSpec::parse("p=2", &z).unwrap()).unwrap();
        assert_eq!(f2.field(), &Field::Prime(2));
        let g = specialize(&a, &PrimeSpec::generic(&z)).unwrap();
        assert_eq!(g.field(), &Field::Rationals);
        assert_eq!(g.trace_gram(), Matrix::from_i64(&Field::Rationals, &[&[2, 0], &[0, 2]]));
    }
}
