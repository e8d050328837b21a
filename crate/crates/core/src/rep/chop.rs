//! MeatAxe-style composition factors.
//!
//! A module is certified simple either by Burnside (the algebra image is all
//! of `End(M)`) or by Norton's criterion on a random element `a` and an
//! irreducible factor `f` of its characteristic polynomial with
//! `dim ker f(a) = deg f`. Over function fields only linear factors are
//! available, so the search relies on elements with roots in the field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::AlgebraModule;
use crate::algebra::Subspace;
use crate::arith::factor::{factor_upoly, roots};
use crate::arith::{Field, Scalar, UPoly};
use crate::bn::fingerprint;
use crate::error::{Error, Result};
use crate::linalg::{char_poly, eval_at_matrix, Matrix};
use crate::options::Options;

/// Irreducible factors worth trying, lowest degree first.
fn candidate_factors(chi: &UPoly, k: &Field, opts: &Options) -> Result<Vec<UPoly>> {
    let mut fs: Vec<UPoly> = match k {
        Field::Function(_) => roots(chi, k, opts.max_degree)?
            .iter()
            .map(|r| UPoly::linear(r, k))
            .collect(),
        _ => factor_upoly(chi, k, opts.max_degree)?
            .into_iter()
            .map(|(f, _)| f)
            .collect(),
    };
    fs.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.cmp_with(b, k)));
    Ok(fs)
}

/// Coordinates of the `attempt`-th sample element: each basis element on its
/// own first, then integer combinations with a slowly widening window.
fn sample_element(n: usize, attempt: usize, k: &Field, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    if attempt < n {
        return (0..n).map(|i| if i == attempt { k.one() } else { k.zero() }).collect();
    }
    let w = 1 + ((attempt - n) / (4 * n)) as i64;
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-w..=w)).collect();
        let v: Vec<Scalar> = v.into_iter().map(|c| k.from_i64(c)).collect();
        if v.iter().any(|c| !k.is_zero(c)) {
            return v;
        }
    }
}

/// A proper nonzero submodule, or `None` once the module is certified simple.
pub fn find_submodule(m: &AlgebraModule, rng: &mut ChaCha8Rng, opts: &Options) -> Result<Option<Subspace>> {
    let d = m.dim();
    if d <= 1 || m.image_dim() == d * d {
        return Ok(None);
    }
    let k = m.field().clone();
    let n = m.action().len();
    for attempt in 0..opts.chop_budget {
        let x = sample_element(n, attempt, &k, rng);
        let a = m.act(&x);
        let chi = char_poly(&a)?;
        for f in candidate_factors(&chi, &k, opts)? {
            let fa = eval_at_matrix(&f, &a)?;
            let kernel = fa.kernel_basis();
            for v in &kernel {
                let w = m.spin(v);
                if w.dim() < d {
                    return Ok(Some(w));
                }
            }
            if kernel.len() == f.deg() {
                let dual = fa.transpose().kernel_basis();
                let w = m.dual_spin(&dual[0]);
                if w.dim() == d {
                    return Ok(None);
                }
                let ann = Matrix::from_row_vectors(&k, d, w.basis()).kernel_basis();
                return Ok(Some(Subspace::spanned_by(&k, d, &ann)));
            }
        }
    }
    Err(Error::ChopBudgetExceeded(format!(
        "no split or certificate for a {d}-dimensional module over {k} after {} elements",
        opts.chop_budget
    )))
}

/// Same isomorphism class, for certified simple modules.
pub fn is_isomorphic(s: &AlgebraModule, t: &AlgebraModule) -> bool {
    let same = s.dim() == t.dim() && fingerprint(s) == fingerprint(t);
    if cfg!(debug_assertions) && s.field() == t.field() {
        debug_assert_eq!(same, s.hom_dim(t) > 0, "fingerprint and Hom test disagree");
    }
    same
}

/// Composition factors with multiplicities, in discovery order.
pub fn chop(m: &AlgebraModule, opts: &Options) -> Result<Vec<(AlgebraModule, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut factors: Vec<(AlgebraModule, usize)> = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match find_submodule(&x, &mut rng, opts)? {
            Some(w) => {
                stack.push(x.quotient(&w));
                stack.push(x.submodule(&w));
            }
            None => match factors.iter_mut().find(|(s, _)| is_isomorphic(s, &x)) {
                Some((_, c)) => *c += 1,
                None => factors.push((x, 1)),
            },
        }
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiberAlgebra;

    fn group_algebra_c2(k: &Field) -> FiberAlgebra {
        let v = |a: i64, b: i64| vec![k.from_i64(a), k.from_i64(b)];
        let consts = vec![vec![v(1, 0), v(0, 1)], vec![v(0, 1), v(1, 0)]];
        FiberAlgebra::new(k, consts, v(1, 0), "C2", "test").unwrap()
    }

    #[test]
    fn c2_in_two_characteristics() {
        let opts = Options::default();
        let q = chop(&AlgebraModule::regular(&group_algebra_c2(&Field::Rationals)), &opts).unwrap();
        assert_eq!(q.len(), 2);
        assert!(q.iter().all(|(s, c)| s.dim() == 1 && *c == 1));
        let f2 = chop(&AlgebraModule::regular(&group_algebra_c2(&Field::Prime(2))), &opts).unwrap();
        assert_eq!(f2.len(), 1);
        assert_eq!((f2[0].0.dim(), f2[0].1), (1, 2));
    }

    #[test]
    fn cyclic_three_over_rationals_has_a_two_dimensional_simple() {
        let k = Field::Rationals;
        let mut consts = vec![vec![vec![k.zero(); 3]; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                consts[i][j][(i + j) % 3] = k.one();
            }
        }
        let unit = vec![k.one(), k.zero(), k.zero()];
        let f = FiberAlgebra::new(&k, consts, unit, "C3", "test").unwrap();
        let mut dims: Vec<usize> = chop(&AlgebraModule::regular(&f), &Options::default())
            .unwrap()
            .iter()
            .map(|(s, _)| s.dim())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
    }
}
