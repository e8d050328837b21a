//! Group algebras from multiplication tables.

use crate::algebra::FiniteFreeAlgebra;
use crate::arith::Ring;
use crate::error::{Error, Result};

/// Group algebra of a group given by `table[g][h] = gh`, with the
/// symmetrizing trace `t(g) = [g = 1]`.
pub fn group_algebra(name: &str, names: &[&str], table: &[Vec<usize>], ring: &Ring) -> Result<FiniteFreeAlgebra> {
    let n = names.len();
    if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table is not a square table over the elements".into()));
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for g in 0..n {
        if !(0..n).any(|h| table[g][h] == e && table[h][g] == e) {
            return Err(Error::NotAGroup(format!("{} has no inverse", names[g])));
        }
        for h in 0..n {
            for k in 0..n {
                if table[table[g][h]][k] != table[g][table[h][k]] {
                    return Err(Error::NotAGroup(format!(
                        "not associative at ({}, {}, {})",
                        names[g], names[h], names[k]
                    )));
                }
            }
        }
    }
    let mut consts = vec![vec![vec![ring.zero(); n]; n]; n];
    for g in 0..n {
        for h in 0..n {
            consts[g][h][table[g][h]] = ring.one();
        }
    }
    let indicator: Vec<_> = (0..n).map(|g| if g == e { ring.one() } else { ring.zero() }).collect();
    FiniteFreeAlgebra::new(
        name,
        ring.clone(),
        names.iter().map(|s| s.to_string()).collect(),
        consts,
        indicator.clone(),
        Some(indicator),
    )
}

pub fn cyclic_group_algebra(order: usize, ring: &Ring) -> Result<FiniteFreeAlgebra> {
    let names: Vec<String> = (0..order)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let table: Vec<Vec<usize>> = (0..order).map(|i| (0..order).map(|j| (i + j) % order).collect()).collect();
    group_algebra(&format!("C{order}"), &refs, &table, ring)
}

/// Symmetric group on three letters; transpositions precede 3-cycles.
pub fn symmetric_group_s3(ring: &Ring) -> Result<FiniteFreeAlgebra> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let names = ["1", "(12)", "(13)", "(23)", "(123)", "(132)"];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed");
    // (gh)(x) = g(h(x))
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|g| perms.iter().map(|h| index([g[h[0]], g[h[1]], g[h[2]]])).collect())
        .collect();
    group_algebra("S3", &names, &table, ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_rejects() {
        let z = Ring::integers();
        assert_eq!(cyclic_group_algebra(2, &z).unwrap().dim(), 2);
        assert_eq!(symmetric_group_s3(&z).unwrap().dim(), 6);
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(group_algebra("bad", &["1", "a"], &bad, &z), Err(Error::NotAGroup(_))));
    }
}
