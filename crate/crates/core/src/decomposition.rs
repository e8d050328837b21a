//! Decomposition matrices between the generic fiber and a special fiber.
//!
//! A row of the matrix is found from fingerprints alone: reduce the
//! characteristic polynomials of a generic simple at the prime, refine them
//! together with those of the fiber simples into a gcd-free basis, and solve
//! the resulting linear system in the multiplicities. Triviality is decided
//! independently by comparing radical dimensions.

use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::analysis::{Analysis, FiberAnalysis};
use crate::arith::{Field, PrimeSpec, Scalar, UPoly};
use crate::bn::reduce_fingerprint;
use crate::error::{Error, Result};
use crate::linalg::{gcd_free_basis, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    pub algebra: String,
    pub prime: String,
    pub row_ids: Vec<String>,
    pub col_ids: Vec<String>,
    pub row_dims: Vec<usize>,
    pub col_dims: Vec<usize>,
    pub entries: Vec<Vec<usize>>,
}

impl DecompositionMatrix {
    pub fn is_trivial(&self) -> bool {
        is_trivial(&self.entries)
    }

    /// Aligned table with row and column labels.
    pub fn format_table(&self) -> String {
        let width = self
            .col_ids
            .iter()
            .map(String::len)
            .chain(self.entries.iter().flatten().map(|e| e.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = self.row_ids.iter().map(String::len).max().unwrap_or(0);
        let mut out = format!("{:label$}", "");
        for c in &self.col_ids {
            write!(out, " {c:>width$}").unwrap();
        }
        out.push('\n');
        for (r, row) in self.row_ids.iter().zip(&self.entries) {
            write!(out, "{r:label$}").unwrap();
            for e in row {
                write!(out, " {e:>width$}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// A permutation matrix: square with exactly one 1 in each row and column.
pub fn is_trivial(d: &[Vec<usize>]) -> bool {
    let n = d.len();
    let square = d.iter().all(|r| r.len() == n);
    let ones = |it: &mut dyn Iterator<Item = usize>| {
        let v: Vec<usize> = it.collect();
        v.iter().filter(|&&e| e == 1).count() == 1 && v.iter().all(|&e| e <= 1)
    };
    square
        && d.iter().all(|r| ones(&mut r.iter().copied()))
        && (0..n).all(|j| ones(&mut d.iter().map(|r| r[j])))
}

fn split_pair(an: &Analysis, p: &PrimeSpec) -> Result<(std::sync::Arc<FiberAnalysis>, std::sync::Arc<FiberAnalysis>)> {
    let generic = an.generic()?;
    generic.wedderburn.require_split("generic fiber")?;
    let special = an.fiber(p)?;
    special.wedderburn.require_split(&format!("fiber at {p}"))?;
    Ok((generic, special))
}

fn to_count(q: &Scalar) -> Option<usize> {
    match q {
        Scalar::Rat(r) if r.is_integer() && !r.is_negative() => r.to_integer().to_usize(),
        _ => None,
    }
}

/// All nonnegative integer solutions of `sys * d = rhs` with
/// `sum d_j dims_j = total`, up to two.
fn integer_solutions(sys: &[Vec<usize>], rhs: &[usize], dims: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn go(
        j: usize,
        d: &mut Vec<usize>,
        left: usize,
        sys: &[Vec<usize>],
        rhs: &[usize],
        dims: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() > 1 {
            return;
        }
        if j == dims.len() {
            let ok = left == 0
                && sys
                    .iter()
                    .zip(rhs)
                    .all(|(row, &b)| row.iter().zip(d.iter()).map(|(a, x)| a * x).sum::<usize>() == b);
            if ok {
                out.push(d.clone());
            }
            return;
        }
        for x in 0..=left / dims[j].max(1) {
            d.push(x);
            go(j + 1, d, left - x * dims[j], sys, rhs, dims, out);
            d.pop();
        }
    }
    let mut out = Vec::new();
    go(0, &mut Vec::new(), total, sys, rhs, dims, &mut out);
    out
}

fn solve_row(sys: &[Vec<usize>], rhs: &[usize], dims: &[usize], total: usize, row: &str) -> Result<Vec<usize>> {
    let q = Field::Rationals;
    let width = dims.len();
    let m = Matrix::from_row_vectors(
        &q,
        width,
        &sys.iter()
            .map(|r| r.iter().map(|&x| q.from_i64(x as i64)).collect())
            .collect::<Vec<_>>(),
    );
    let b: Vec<Scalar> = rhs.iter().map(|&x| q.from_i64(x as i64)).collect();
    let none = || Error::NoIntegerSolution(format!("row {row}"));
    let x = m.solve(&b).map_err(|_| none())?;
    if m.kernel_basis().is_empty() {
        return x.iter().map(to_count).collect::<Option<Vec<_>>>().ok_or_else(none);
    }
    let mut sols = integer_solutions(sys, rhs, dims, total);
    match sols.len() {
        1 => Ok(sols.pop().expect("one solution")),
        0 => Err(none()),
        _ => Err(Error::NoIntegerSolution(format!("row {row} has several nonnegative solutions"))),
    }
}

fn matrix_from(an: &Analysis, generic: &FiberAnalysis, special: &FiberAnalysis, p: &PrimeSpec) -> Result<DecompositionMatrix> {
    let g = &generic.wedderburn;
    let s = &special.wedderburn;
    let l: &Field = p.residue_field();
    if *l != s.field {
        return Err(Error::InvariantViolation(format!(
            "fiber field {} differs from residue field {l}",
            s.field
        )));
    }
    let reduced = g
        .simples
        .iter()
        .map(|x| reduce_fingerprint(&x.fingerprint, p))
        .collect::<Result<Vec<_>>>()?;
    let mut all: Vec<UPoly> = s.simples.iter().flat_map(|t| t.fingerprint.polys().to_vec()).collect();
    let fiber_count = all.len();
    all.extend(reduced.iter().flat_map(|f| f.polys().to_vec()));
    let gfb = gcd_free_basis(&all, l);
    let n = an.algebra().dim();
    let nb = gfb.basis.len();
    let col_dims = s.dims();
    let mut entries = Vec::new();
    for i in 0..reduced.len() {
        let mut sys = Vec::with_capacity(n * nb);
        let mut rhs = Vec::with_capacity(n * nb);
        for k in 0..n {
            for f in 0..nb {
                sys.push((0..s.simples.len()).map(|j| gfb.mults[j * n + k][f]).collect());
                rhs.push(gfb.mults[fiber_count + i * n + k][f]);
            }
        }
        let row = solve_row(&sys, &rhs, &col_dims, g.simples[i].dim(), &format!("S{}", i + 1))?;
        entries.push(row);
    }
    let d = DecompositionMatrix {
        algebra: an.algebra().name().to_string(),
        prime: p.to_string(),
        row_ids: (1..=g.simples.len()).map(|i| format!("S{i}")).collect(),
        col_ids: (1..=s.simples.len()).map(|j| format!("T{j}")).collect(),
        row_dims: g.dims(),
        col_dims,
        entries,
    };
    check_matrix(&d)?;
    Ok(d)
}

fn check_matrix(d: &DecompositionMatrix) -> Result<()> {
    for (i, row) in d.entries.iter().enumerate() {
        let total: usize = row.iter().zip(&d.col_dims).map(|(a, b)| a * b).sum();
        if total != d.row_dims[i] {
            return Err(Error::InvariantViolation(format!(
                "row {} of the decomposition matrix at {} accounts for dimension {total}, not {}",
                d.row_ids[i], d.prime, d.row_dims[i]
            )));
        }
        if row.iter().all(|&e| e == 0) {
            return Err(Error::InvariantViolation(format!("zero row {} at {}", d.row_ids[i], d.prime)));
        }
    }
    for j in 0..d.col_ids.len() {
        if d.entries.iter().all(|r| r[j] == 0) {
            return Err(Error::InvariantViolation(format!("zero column {} at {}", d.col_ids[j], d.prime)));
        }
    }
    Ok(())
}

/// Decomposition matrix of the algebra at `p`; both fibers must split.
pub fn decomposition_matrix(an: &Analysis, p: &PrimeSpec) -> Result<DecompositionMatrix> {
    let (generic, special) = split_pair(an, p)?;
    matrix_from(an, &generic, &special, p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalComparison {
    pub generic_radical_dim: usize,
    pub fiber_radical_dim: usize,
    pub trivial: bool,
}

/// Compare the radical dimensions of the generic fiber and the fiber at `p`.
pub fn radical_comparison(an: &Analysis, p: &PrimeSpec) -> Result<RadicalComparison> {
    let (generic, special) = split_pair(an, p)?;
    let (a, b) = (generic.wedderburn.radical_dim(), special.wedderburn.radical_dim());
    if b < a {
        return Err(Error::InvariantViolation(format!(
            "radical dimension {b} at {p} is below the generic {a}"
        )));
    }
    Ok(RadicalComparison {
        generic_radical_dim: a,
        fiber_radical_dim: b,
        trivial: a == b,
    })
}

pub fn triviality_by_radical(an: &Analysis, p: &PrimeSpec) -> Result<bool> {
    Ok(radical_comparison(an, p)?.trivial)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Triviality {
    Trivial,
    NonTrivial,
}

#[derive(Clone, Debug, Serialize)]
pub struct Membership {
    pub prime: String,
    pub status: Triviality,
    pub radicals: RadicalComparison,
    /// Present in verification mode.
    pub matrix: Option<DecompositionMatrix>,
}

/// Whether `p` has a trivial decomposition map, by the radical test; with
/// `verify` set in the options the matrix is computed and must agree.
pub fn dec_gen_membership(an: &Analysis, p: &PrimeSpec) -> Result<Membership> {
    let radicals = radical_comparison(an, p)?;
    let matrix = if an.options().verify {
        let d = decomposition_matrix(an, p)?;
        if d.is_trivial() != radicals.trivial {
            return Err(Error::InvariantViolation(format!(
                "at {p} the radical test says trivial = {} but the matrix says {}",
                radicals.trivial,
                d.is_trivial()
            )));
        }
        Some(d)
    } else {
        None
    };
    Ok(Membership {
        prime: p.to_string(),
        status: if radicals.trivial { Triviality::Trivial } else { Triviality::NonTrivial },
        radicals,
        matrix,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Composability {
    pub outer: DecompositionMatrix,
    pub inner: DecompositionMatrix,
    pub direct: DecompositionMatrix,
    /// Whether `outer * inner == direct` after matching the intermediate simples.
    pub holds: bool,
}

/// Compare the decomposition matrix at `q` with the composite through `p ⊆ q`.
pub fn composability(an: &Analysis, p: &PrimeSpec, q: &PrimeSpec) -> Result<Composability> {
    if !p.is_contained_in(q) {
        return Err(Error::Parse(format!("{p} is not contained in {q}")));
    }
    let map = p.restriction_map()?;
    let restricted = Analysis::new(an.algebra().restrict(p)?, an.options());
    let q_bar = PrimeSpec::new(map.target(), q.generators().iter().map(|g| map.apply(g)).collect())?;
    let outer = decomposition_matrix(an, p)?;
    let inner = decomposition_matrix(&restricted, &q_bar)?;
    let direct = decomposition_matrix(an, q)?;

    // columns of `outer` are simples of A(p); rows of `inner` are generic
    // simples of A|p, the same fiber seen over Frac(R/p)
    let mid = an.fiber(p)?;
    let gen_bar = restricted.generic()?;
    if mid.wedderburn.field != gen_bar.wedderburn.field {
        return Err(Error::UnsupportedResidueField(format!(
            "residue field {} and fraction field {} differ",
            mid.wedderburn.field, gen_bar.wedderburn.field
        )));
    }
    let perm = mid
        .wedderburn
        .simples
        .iter()
        .map(|s| {
            gen_bar
                .wedderburn
                .simples
                .iter()
                .position(|t| t.fingerprint == s.fingerprint)
                .ok_or_else(|| Error::InvariantViolation(format!("simple of the fiber at {p} not found over the restriction")))
        })
        .collect::<Result<Vec<_>>>()?;
    let product: Vec<Vec<usize>> = outer
        .entries
        .iter()
        .map(|row| {
            (0..inner.col_ids.len())
                .map(|c| row.iter().enumerate().map(|(j, a)| a * inner.entries[perm[j]][c]).sum())
                .collect()
        })
        .collect();
    let holds = product == direct.entries;
    Ok(Composability {
        outer,
        inner,
        direct,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::options::Options;

    #[test]
    fn permutation_matrices() {
        assert!(is_trivial(&[vec![1, 0], vec![0, 1]]));
        assert!(is_trivial(&[vec![0, 1], vec![1, 0]]));
        assert!(!is_trivial(&[vec![1], vec![1]]));
        assert!(!is_trivial(&[vec![1, 0], vec![0, 1], vec![1, 1]]));
        assert!(!is_trivial(&[vec![2]]));
    }

    #[test]
    fn nonnegative_solutions() {
        // x + y = 2 in one equation, dims 1 and 1
        let sols = integer_solutions(&[vec![1, 1]], &[2], &[1, 1], 2);
        assert_eq!(sols.len(), 2);
        let sols = integer_solutions(&[vec![1, 0]], &[1], &[1, 1], 2);
        assert_eq!(sols, vec![vec![1, 1]]);
    }

    fn at(id: &str, prime: &str) -> DecompositionMatrix {
        let a = crate::corpus::entry(id).unwrap().unwrap().algebra;
        let p = PrimeSpec::parse(prime, a.ring()).unwrap();
        decomposition_matrix(&Analysis::new(a, &Options::default()), &p).unwrap()
    }

    #[test]
    fn group_algebras() {
        assert_eq!(at("C2", "p=2").entries, vec![vec![1], vec![1]]);
        assert!(at("S3", "p=7").is_trivial());
    }

    #[test]
    fn s3_mod_3_matches_brauer_characters() {
        // ordinary characters on the 3-regular classes {1, (12)}
        let ordinary = [(1i64, 1i64), (1, -1), (2, 0)];
        // Brauer characters of the two simples in characteristic 3
        let brauer = [(1i64, 1i64), (1, -1)];
        let expected: Vec<Vec<usize>> = ordinary
            .iter()
            .map(|&(d, t)| {
                // solve d = a + b, t = a - b
                let (a, b) = ((d + t) / 2, (d - t) / 2);
                assert_eq!((a * brauer[0].0 + b * brauer[1].0, a * brauer[0].1 + b * brauer[1].1), (d, t));
                vec![a as usize, b as usize]
            })
            .collect();
        // rows and columns are compared up to relabelling
        let sorted = |mut m: Vec<Vec<usize>>| {
            m.sort();
            m
        };
        let got = sorted(at("S3", "p=3").entries);
        let swapped = expected.iter().map(|r| vec![r[1], r[0]]).collect();
        assert!(got == sorted(expected) || got == sorted(swapped), "{got:?}");
    }
}
