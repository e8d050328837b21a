//! Brauer and Temperley–Lieb diagram algebras.
//!
//! A diagram on `n` strands is a perfect matching of `2n` points: top
//! points `0..n`, bottom points `n..2n`. The product `d1 * d2` stacks `d1`
//! above `d2`, traces strands through the middle row and multiplies by the
//! loop parameter once per closed loop.

use crate::algebra::FiniteFreeAlgebra;
use crate::arith::Ring;
use crate::error::{Error, Result};

type Matching = Vec<usize>;

fn all_matchings(points: usize) -> Vec<Matching> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<Matching>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for other in first + 1..partner.len() {
            if partner[other] == usize::MAX {
                partner[first] = other;
                partner[other] = first;
                go(partner, out);
                partner[first] = usize::MAX;
                partner[other] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; points], &mut out);
    out
}

/// Noncrossing with points read around the boundary: top left to right,
/// then bottom right to left.
fn is_planar(m: &Matching, n: usize) -> bool {
    let pos = |p: usize| if p < n { p } else { 3 * n - 1 - p };
    let chords: Vec<(usize, usize)> = (0..2 * n)
        .filter(|&p| p < m[p])
        .map(|p| {
            let (a, b) = (pos(p), pos(m[p]));
            (a.min(b), a.max(b))
        })
        .collect();
    chords.iter().all(|&(a, b)| {
        chords
            .iter()
            .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
    })
}

fn through_strands(m: &Matching, n: usize) -> usize {
    (0..n).filter(|&p| m[p] >= n).count()
}

/// Stack `d1` over `d2`; returns the resulting diagram and the number of loops.
pub fn compose(d1: &Matching, d2: &Matching, n: usize) -> (Matching, usize) {
    let mut result = vec![usize::MAX; 2 * n];
    let mut visited = vec![false; n];
    // state (diagram, point): diagram 0 is d1, 1 is d2
    let walk = |start: (usize, usize), visited: &mut Vec<bool>| -> usize {
        let (mut d, mut x) = start;
        loop {
            let y = if d == 0 { d1[x] } else { d2[x] };
            if d == 0 && y < n {
                return y;
            }
            if d == 1 && y >= n {
                return y;
            }
            let m = if d == 0 { y - n } else { y };
            visited[m] = true;
            (d, x) = if d == 0 { (1, m) } else { (0, n + m) };
        }
    };
    for p in 0..2 * n {
        if result[p] != usize::MAX {
            continue;
        }
        let start = if p < n { (0, p) } else { (1, p) };
        let q = walk(start, &mut visited);
        result[p] = q;
        result[q] = p;
    }
    let mut loops = 0;
    for m in 0..n {
        if visited[m] {
            continue;
        }
        loops += 1;
        let mut cur = m;
        loop {
            visited[cur] = true;
            let a = d1[n + cur] - n;
            visited[a] = true;
            cur = d2[a];
            if cur == m {
                break;
            }
        }
    }
    (result, loops)
}

fn diagram_algebra(name: &str, n: usize, planar: bool, ring: &Ring) -> Result<FiniteFreeAlgebra> {
    if ring.nvars() == 0 {
        return Err(Error::UnsupportedRing(format!(
            "{name} needs a ring with a loop parameter variable, got {ring}"
        )));
    }
    let mut basis: Vec<Matching> = all_matchings(2 * n)
        .into_iter()
        .filter(|m| !planar || is_planar(m, n))
        .collect();
    let identity: Matching = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
    basis.sort_by(|a, b| {
        (*b == identity)
            .cmp(&(*a == identity))
            .then(through_strands(b, n).cmp(&through_strands(a, n)))
            .then(a.cmp(b))
    });
    let dim = basis.len();
    let delta = ring.var(0);
    let mut consts = vec![vec![vec![ring.zero(); dim]; dim]; dim];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let (c, loops) = compose(a, b, n);
            let k = basis.iter().position(|d| *d == c).expect("closed under composition");
            consts[i][j][k] = (0..loops).fold(ring.one(), |acc, _| ring.mul(&acc, &delta));
        }
    }
    let names: Vec<String> = if !planar && n == 2 {
        vec!["1".into(), "s".into(), "u".into()]
    } else {
        (0..dim).map(|i| if i == 0 { "1".into() } else { format!("d{i}") }).collect()
    };
    let unit = (0..dim).map(|i| if i == 0 { ring.one() } else { ring.zero() }).collect();
    FiniteFreeAlgebra::new(name, ring.clone(), names, consts, unit, None)
}

/// Brauer algebra on `n` strands with loop parameter the ring's first variable.
pub fn brauer_algebra(n: usize, ring: &Ring) -> Result<FiniteFreeAlgebra> {
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedRing(format!("Brauer algebras need 2 or 3 strands, got {n}")));
    }
    diagram_algebra(&format!("B{n}"), n, false, ring)
}

pub fn temperley_lieb(n: usize, ring: &Ring) -> Result<FiniteFreeAlgebra> {
    if !(1..=4).contains(&n) {
        return Err(Error::UnsupportedRing(format!("Temperley-Lieb algebras need 1 to 4 strands, got {n}")));
    }
    diagram_algebra(&format!("TL{n}"), n, true, ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let r = Ring::parse("Q[delta]").unwrap();
        assert_eq!(brauer_algebra(2, &r).unwrap().dim(), 3);
        assert_eq!(brauer_algebra(3, &r).unwrap().dim(), 15);
        let dims: Vec<usize> = (2..=4).map(|n| temperley_lieb(n, &r).unwrap().dim()).collect();
        assert_eq!(dims, vec![2, 5, 14]);
    }

    #[test]
    fn brauer_two_relations() {
        let r = Ring::parse("Z[delta]").unwrap();
        let a = brauer_algebra(2, &r).unwrap();
        let (s, u) = (a.basis_vector(1), a.basis_vector(2));
        assert_eq!(a.multiply(&s, &s), a.basis_vector(0));
        assert_eq!(a.multiply(&s, &u), u);
        assert_eq!(a.multiply(&u, &s), u);
        let du: Vec<_> = u.iter().map(|c| r.mul(c, &r.var(0))).collect();
        assert_eq!(a.multiply(&u, &u), du);
    }
}
