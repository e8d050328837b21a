//! Matrix units, upper triangular matrices and dual numbers: algebras whose
//! radicals are known in every fiber.

use crate::algebra::FiniteFreeAlgebra;
use crate::arith::Ring;
use crate::error::Result;

fn unit_name(i: usize, j: usize) -> String {
    format!("e{}{}", i + 1, j + 1)
}

fn matrix_units(name: &str, k: usize, upper: bool, ring: &Ring, with_trace: bool) -> Result<FiniteFreeAlgebra> {
    let units: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper || i <= j)
        .collect();
    let n = units.len();
    let mut consts = vec![vec![vec![ring.zero(); n]; n]; n];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(l, m)) in units.iter().enumerate() {
            if j == l {
                let c = units.iter().position(|&u| u == (i, m)).expect("closed");
                consts[a][b][c] = ring.one();
            }
        }
    }
    let diag: Vec<_> = units
        .iter()
        .map(|&(i, j)| if i == j { ring.one() } else { ring.zero() })
        .collect();
    let names = units.iter().map(|&(i, j)| unit_name(i, j)).collect();
    let trace = with_trace.then(|| diag.clone());
    FiniteFreeAlgebra::new(name, ring.clone(), names, consts, diag, trace)
}

/// Full matrix algebra with the matrix trace as symmetrizing form.
pub fn matrix_algebra(k: usize, ring: &Ring) -> Result<FiniteFreeAlgebra> {
    matrix_units(&format!("Mat{k}"), k, false, ring, true)
}

pub fn upper_triangular(k: usize, ring: &Ring) -> Result<FiniteFreeAlgebra> {
    matrix_units(&format!("UT{k}"), k, true, ring, false)
}

/// `R[eps]/(eps^2)`.
pub fn dual_numbers(ring: &Ring) -> Result<FiniteFreeAlgebra> {
    let mut consts = vec![vec![vec![ring.zero(); 2]; 2]; 2];
    consts[0][0][0] = ring.one();
    consts[0][1][1] = ring.one();
    consts[1][0][1] = ring.one();
    FiniteFreeAlgebra::new(
        "Dual",
        ring.clone(),
        vec!["1".into(), "eps".into()],
        consts,
        vec![ring.one(), ring.zero()],
        None,
    )
}

pub fn direct_sum(a: &FiniteFreeAlgebra, b: &FiniteFreeAlgebra) -> Result<FiniteFreeAlgebra> {
    a.direct_sum(b, &format!("{}+{}", a.name(), b.name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let z = Ring::integers();
        let m = matrix_algebra(2, &z).unwrap();
        assert_eq!(m.dim(), 4);
        assert!(m.trace().is_some());
        assert_eq!(upper_triangular(3, &z).unwrap().dim(), 6);
        let d = dual_numbers(&z).unwrap();
        assert_eq!(d.multiply(&d.basis_vector(1), &d.basis_vector(1)), vec![z.zero(), z.zero()]);
        assert_eq!(direct_sum(&m, &d).unwrap().dim(), 6);
    }
}
