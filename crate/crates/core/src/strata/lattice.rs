//! The radical lattice `J_R`: the generic radical pulled back into `R^n`,
//! and the candidate discriminant built from the quotient `A/J_R`.

use crate::algebra::{ring_det, FiniteFreeAlgebra, Subspace};
use crate::analysis::Analysis;
use crate::arith::{Poly, Ring, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, complete_basis, saturate, Matrix};

#[derive(Clone, Debug)]
pub struct RadicalLattice {
    /// Basis rows over `R`.
    pub rows: Vec<Vec<Poly>>,
    /// Hermite-saturated, so that `A/J_R` is torsion free.
    pub saturated: bool,
    pub ambient: usize,
}

impl RadicalLattice {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn to_fraction(ring: &Ring, v: &[Poly]) -> Vec<Scalar> {
    v.iter().map(|a| ring.to_fraction(a)).collect()
}

pub fn radical_lattice(an: &Analysis) -> Result<RadicalLattice> {
    let a = an.algebra();
    let ring = a.ring();
    let n = a.dim();
    let generic = an.generic()?;
    let j = &generic.wedderburn.radical;
    let cleared: Vec<Vec<Poly>> = j.basis().iter().map(|v| clear_denominators(ring, v)).collect();
    let (rows, saturated) = if cleared.is_empty() {
        (cleared, true)
    } else if ring.is_euclidean() {
        (saturate(ring, &cleared, n)?, true)
    } else {
        (cleared, false)
    };
    let lattice = RadicalLattice {
        rows,
        saturated,
        ambient: n,
    };
    check_lattice(a, j, &lattice)?;
    Ok(lattice)
}

fn check_lattice(a: &FiniteFreeAlgebra, j: &Subspace, lattice: &RadicalLattice) -> Result<()> {
    let ring = a.ring();
    let rows: Vec<Vec<Scalar>> = lattice.rows.iter().map(|r| to_fraction(ring, r)).collect();
    if Subspace::spanned_by(j.field(), lattice.ambient, &rows) != *j {
        return Err(Error::InvariantViolation("radical lattice does not span the generic radical".into()));
    }
    for r in &lattice.rows {
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            for prod in [a.multiply(&e, r), a.multiply(r, &e)] {
                if !j.contains(&to_fraction(ring, &prod)) {
                    return Err(Error::InvariantViolation("radical lattice is not an ideal".into()));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct CandidateDiscriminant {
    /// `gram_det * minor_gcd * pivot_minor`, normalized.
    pub generator: Poly,
    /// Trace Gram determinant of `A/J_R`, denominators cleared.
    pub gram_det: Poly,
    /// Gcd of the maximal minors of the lattice basis.
    pub minor_gcd: Poly,
    /// Denominator introduced by the complement over the fraction field.
    pub pivot_minor: Poly,
}

/// Gram matrix of the regular trace form of an algebra with constants `c`.
fn regular_trace_gram<T: Clone>(c: &[Vec<Vec<T>>], zero: T, add: impl Fn(&T, &T) -> T, mul: impl Fn(&T, &T) -> T) -> Vec<Vec<T>> {
    let m = c.len();
    let traces: Vec<T> = (0..m)
        .map(|x| (0..m).fold(zero.clone(), |acc, d| add(&acc, &c[x][d][d])))
        .collect();
    (0..m)
        .map(|a| {
            (0..m)
                .map(|b| (0..m).fold(zero.clone(), |acc, x| add(&acc, &mul(&c[a][b][x], &traces[x]))))
                .collect()
        })
        .collect()
}

/// An element whose zero locus contains every prime where the radical
/// dimension jumps: outside it the lattice stays a nilpotent ideal of the
/// right dimension and the quotient has a nondegenerate trace form.
pub fn candidate_discriminant(an: &Analysis, lattice: &RadicalLattice) -> Result<CandidateDiscriminant> {
    let a = an.algebra();
    if lattice.saturated {
        saturated_candidate(a, lattice)
    } else {
        fraction_candidate(a, lattice)
    }
}

fn saturated_candidate(a: &FiniteFreeAlgebra, lattice: &RadicalLattice) -> Result<CandidateDiscriminant> {
    let ring = a.ring();
    let k = ring.fraction_field();
    let n = a.dim();
    let r = lattice.rank();
    let basis = if r == 0 {
        (0..n).map(|i| a.basis_vector(i)).collect()
    } else {
        complete_basis(ring, &lattice.rows, n)?
    };
    let p = Matrix::from_row_vectors(&k, n, &basis.iter().map(|v| to_fraction(ring, v)).collect::<Vec<_>>()).transpose();
    let m = n - r;
    let mut consts = vec![vec![vec![ring.zero(); m]; m]; m];
    for x in 0..m {
        for y in 0..m {
            let prod = a.multiply(&basis[r + x], &basis[r + y]);
            let coords = p.solve(&to_fraction(ring, &prod))?;
            for z in 0..m {
                consts[x][y][z] = ring
                    .from_fraction(&coords[r + z])
                    .ok_or_else(|| Error::InvariantViolation("completed basis is not unimodular".into()))?;
            }
        }
    }
    let gram = regular_trace_gram(&consts, ring.zero(), |x, y| ring.add(x, y), |x, y| ring.mul(x, y));
    let det = if m == 0 { ring.one() } else { ring_det(ring, &gram)? };
    Ok(CandidateDiscriminant {
        generator: ring.normalize(&det),
        gram_det: ring.normalize(&det),
        minor_gcd: ring.one(),
        pivot_minor: ring.one(),
    })
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

fn minor(ring: &Ring, rows: &[Vec<Poly>], cols: &[usize]) -> Result<Poly> {
    let sub: Vec<Vec<Poly>> = rows.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
    ring_det(ring, &sub)
}

fn fraction_candidate(a: &FiniteFreeAlgebra, lattice: &RadicalLattice) -> Result<CandidateDiscriminant> {
    let ring = a.ring();
    let k = ring.fraction_field();
    let n = a.dim();
    let rows: Vec<Vec<Scalar>> = lattice.rows.iter().map(|v| to_fraction(ring, v)).collect();
    let j = Subspace::spanned_by(&k, n, &rows);
    let pivots = j.pivots().to_vec();
    let free = j.complement_columns();
    let pivot_minor = ring.normalize(&minor(ring, &lattice.rows, &pivots)?);
    let minor_gcd = combinations(n, lattice.rank())
        .iter()
        .try_fold(ring.zero(), |acc, cols| Ok::<_, Error>(ring.gcd(&acc, &minor(ring, &lattice.rows, cols)?)))?;
    let minor_gcd = ring.normalize(&minor_gcd);
    let m = free.len();
    let mut consts = vec![vec![vec![k.zero(); m]; m]; m];
    for (x, &bx) in free.iter().enumerate() {
        for (y, &by) in free.iter().enumerate() {
            let prod = a.multiply(&a.basis_vector(bx), &a.basis_vector(by));
            let reduced = j.reduce(&to_fraction(ring, &prod));
            for (z, &bz) in free.iter().enumerate() {
                consts[x][y][z] = reduced[bz].clone();
            }
        }
    }
    let gram = regular_trace_gram(&consts, k.zero(), |x, y| k.add(x, y), |x, y| k.mul(x, y));
    let det = Matrix::from_row_vectors(&k, m, &gram).det()?;
    let den = ring.denominator_ideal(&det);
    let gram_det = ring
        .from_fraction(&k.mul(&det, &ring.to_fraction(&den)))
        .expect("denominator cleared");
    let generator = ring.normalize(&ring.mul(&ring.mul(&gram_det, &minor_gcd), &pivot_minor));
    Ok(CandidateDiscriminant {
        generator,
        gram_det: ring.normalize(&gram_det),
        minor_gcd,
        pivot_minor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cyclic_group_algebra, upper_triangular};
    use crate::Options;

    #[test]
    fn lattices_and_candidates() {
        let z = Ring::integers();
        let an = Analysis::new(cyclic_group_algebra(2, &z).unwrap(), &Options::default());
        let l = radical_lattice(&an).unwrap();
        assert_eq!(l.rank(), 0);
        assert_eq!(candidate_discriminant(&an, &l).unwrap().generator, z.from_i64(4));

        let an = Analysis::new(upper_triangular(2, &z).unwrap(), &Options::default());
        let l = radical_lattice(&an).unwrap();
        assert_eq!(l.rows, vec![vec![z.zero(), z.one(), z.zero()]]);
        assert!(z.is_unit(&candidate_discriminant(&an, &l).unwrap().generator));
    }
}
