//! Coarsest pairwise-coprime squarefree refinement of a family of
//! univariate polynomials.

use crate::arith::{Field, Scalar, UPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct GcdFreeBasis {
    /// Monic, nonconstant and pairwise coprime, in canonical order; squarefree
    /// except for inseparable elements over imperfect fields.
    pub basis: Vec<UPoly>,
    /// `mults[i][j]` is the exponent of `basis[j]` in input `i`.
    pub mults: Vec<Vec<usize>>,
    /// Leading coefficient of input `i`.
    pub units: Vec<Scalar>,
}

impl GcdFreeBasis {
    /// Rebuild input `i` from the basis.
    pub fn reconstruct(&self, i: usize, k: &Field) -> UPoly {
        let mut acc = UPoly::constant(self.units[i].clone(), k);
        for (b, &e) in self.basis.iter().zip(&self.mults[i]) {
            acc = acc.mul(&b.pow(e as u32, k), k);
        }
        acc
    }
}

fn push_factor(list: &mut Vec<UPoly>, f: UPoly, k: &Field) {
    if f.deg() > 0 {
        let f = f.monic(k);
        if !list.contains(&f) {
            list.push(f);
        }
    }
}

/// One refinement step; `None` once the list is squarefree and pairwise coprime.
fn refine(list: &[UPoly], k: &Field) -> Option<Vec<UPoly>> {
    for (i, a) in list.iter().enumerate() {
        let d = a.derivative(k);
        if d.is_zero() {
            // over an imperfect field an inseparable element stays whole
            if let Some(root) = a.pth_root(k.characteristic() as usize, k) {
                let mut out: Vec<UPoly> = list.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, f)| f.clone()).collect();
                push_factor(&mut out, root, k);
                return Some(out);
            }
        } else {
            let g = a.gcd(&d, k);
            if g.deg() > 0 {
                let mut out: Vec<UPoly> = list.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, f)| f.clone()).collect();
                push_factor(&mut out, a.div_exact(&g, k).expect("gcd divides"), k);
                push_factor(&mut out, g, k);
                return Some(out);
            }
        }
        for (j, b) in list.iter().enumerate().skip(i + 1) {
            let g = a.gcd(b, k);
            if g.deg() > 0 {
                let mut out: Vec<UPoly> = list
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != i && l != j)
                    .map(|(_, f)| f.clone())
                    .collect();
                push_factor(&mut out, a.div_exact(&g, k).expect("gcd divides"), k);
                push_factor(&mut out, b.div_exact(&g, k).expect("gcd divides"), k);
                push_factor(&mut out, g, k);
                return Some(out);
            }
        }
    }
    None
}

pub fn gcd_free_basis(polys: &[UPoly], k: &Field) -> GcdFreeBasis {
    assert!(polys.iter().all(|f| !f.is_zero()), "inputs must be nonzero");
    let mut list = Vec::new();
    for f in polys {
        push_factor(&mut list, f.clone(), k);
    }
    while let Some(next) = refine(&list, k) {
        list = next;
    }
    list.sort_by(|a, b| a.cmp_with(b, k));
    let mut mults = Vec::with_capacity(polys.len());
    let mut units = Vec::with_capacity(polys.len());
    for f in polys {
        let mut rest = f.clone();
        let row = list
            .iter()
            .map(|b| {
                let mut e = 0;
                while let Some(q) = rest.div_exact(b, k) {
                    rest = q;
                    e += 1;
                }
                e
            })
            .collect();
        debug_assert!(rest.is_constant());
        units.push(rest.coeffs()[0].clone());
        mults.push(row);
    }
    GcdFreeBasis {
        basis: list,
        mults,
        units,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k = Field::Rationals;
        let p = |v: &[i64]| UPoly::from_i64s(v, &k);
        let b = gcd_free_basis(&[p(&[-1, 0, 1]), p(&[-1, 1])], &k);
        assert_eq!(b.basis, vec![p(&[-1, 1]), p(&[1, 1])]);
        assert_eq!(b.mults, vec![vec![1, 1], vec![1, 0]]);

        let b = gcd_free_basis(&[p(&[0, 0, 1])], &k);
        assert_eq!(b.basis, vec![p(&[0, 1])]);
        assert_eq!(b.mults, vec![vec![2]]);
    }

    #[test]
    fn characteristic_p_powers() {
        let k = Field::Prime(2);
        // x^4 + 1 = (x + 1)^4 over F_2
        let f = UPoly::from_i64s(&[1, 0, 0, 0, 1], &k);
        let b = gcd_free_basis(std::slice::from_ref(&f), &k);
        assert_eq!(b.basis, vec![UPoly::from_i64s(&[1, 1], &k)]);
        assert_eq!(b.mults, vec![vec![4]]);
        assert_eq!(b.reconstruct(0, &k), f);
    }
}
