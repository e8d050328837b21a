//! Acceptance suite. Each criterion prints one `PASS` or `FAIL` line and
//! then asserts. Oracles live here and share no code with the engine beyond
//! loading algebras and reading results.

use std::cell::Cell;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use decompgen::algebra::{parse_algebra, specialize, FiniteFreeAlgebra};
use decompgen::analysis::Analysis;
use decompgen::arith::{PrimeSpec, Scalar};
use decompgen::corpus::{corpus, entry, CorpusEntry};
use decompgen::decomposition::{decomposition_matrix, dec_gen_membership, radical_comparison, triviality_by_radical, Triviality};
use decompgen::rep::radical;
use decompgen::strata::{
    candidate_discriminant, dec_ex, radical_lattice, sample_primes, schur_discriminant_crosscheck, stratify, ComponentStatus,
};
use decompgen::{Error, Options};

const SEED: u64 = 0x5eed;
const LIMIT_CLASSICAL: Duration = Duration::from_secs(10);
const LIMIT_SCHUR: Duration = Duration::from_secs(5);
const LIMIT_EQUIVALENCE: Duration = Duration::from_secs(120);
const LIMIT_RADICAL_ORACLE: Duration = Duration::from_secs(120);
const LIMIT_BRAUER: Duration = Duration::from_secs(30);
const LIMIT_STRETCH: Duration = Duration::from_secs(600);
const MIN_MONOTONICITY_EVALUATIONS: usize = 200;
const MIN_RADICAL_INSTANCES: usize = 50;
const MIN_FINGERPRINT_PAIRS: usize = 100;
const VERIFICATION_SAMPLES: usize = 10;
const SOUNDNESS_SAMPLES: usize = 20;

fn report(n: u32, ok: bool, detail: &str) {
    println!("{} criterion {n}: {detail}", if ok { "PASS" } else { "FAIL" });
}

fn opts() -> Options {
    Options {
        seed: SEED,
        ..Options::default()
    }
}

fn gating_corpus() -> Vec<CorpusEntry> {
    corpus().unwrap().into_iter().filter(|e| !e.stretch).collect()
}

fn get(id: &str) -> CorpusEntry {
    entry(id).unwrap().unwrap()
}

/// Excluded primes followed by primes sampled outside the candidate.
fn verification_primes(an: &Analysis, samples: usize) -> Vec<PrimeSpec> {
    let mut out: Vec<PrimeSpec> = dec_ex(an).unwrap().excluded().into_iter().cloned().collect();
    let g = candidate_discriminant(an, &radical_lattice(an).unwrap()).unwrap().generator;
    out.extend(sample_primes(an.algebra().ring(), Some(&g), samples, SEED));
    out
}

fn trial_division_primes(mut n: u64) -> Vec<String> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(format!("({p})"));
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(format!("({n})"));
    }
    out
}

fn brauer_classical(id: &str, order: u64) -> (bool, String) {
    let an = Analysis::new(get(id).algebra, &opts());
    let start = Instant::now();
    let tree = stratify(&an);
    let root = tree.root().discriminant.clone().expect("root analysed");
    let excluded = root.excluded_labels();
    let expected = trial_division_primes(order);
    let recovered_ok = root.components.iter().all(|c| match c.status {
        ComponentStatus::RecoveredTrivial { .. } => {
            dec_gen_membership(&an, c.spec.as_ref().unwrap()).unwrap().status == Triviality::Trivial
        }
        _ => true,
    });
    let elapsed = start.elapsed();
    let ok = excluded == expected && recovered_ok && root.unknown().is_empty() && elapsed < LIMIT_CLASSICAL;
    (ok, format!("{id} excluded {excluded:?}, expected {expected:?}, {elapsed:.2?}"))
}

#[test]
fn criterion_1_classical_locus() {
    let (ok3, d3) = brauer_classical("S3", 6);
    let (ok2, d2) = brauer_classical("C2", 2);
    report(1, ok3 && ok2, &format!("{d3}; {d2}"));
    assert!(ok3 && ok2);
}

/// Group table read back from the structure constants of a group algebra.
fn group_table(a: &FiniteFreeAlgebra) -> Vec<Vec<usize>> {
    let n = a.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).find(|&k| !a.constant(i, j, k).is_zero()).unwrap())
                .collect()
        })
        .collect()
}

fn class_count(t: &[Vec<usize>]) -> usize {
    let n = t.len();
    let e = (0..n).find(|&i| (0..n).all(|j| t[i][j] == j)).unwrap();
    let inv = |g: usize| (0..n).find(|&h| t[g][h] == e).unwrap();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        for g in 0..n {
            seen[t[t[g][x]][inv(g)]] = true;
        }
    }
    classes
}

/// All multisets of degrees with the given count, each dividing the order,
/// whose squares sum to the order, containing the trivial degree.
fn degree_candidates(order: u64, count: usize) -> Vec<Vec<u64>> {
    fn go(order: u64, left: usize, max: u64, rest: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            if rest == 0 && acc.contains(&1) {
                out.push(acc.clone());
            }
            return;
        }
        for d in (1..=max).rev() {
            if order % d == 0 && d * d <= rest {
                acc.push(d);
                go(order, left - 1, d, rest - d * d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(order, count, order, order, &mut Vec::new(), &mut out);
    out
}

fn schur_oracle(id: &str) -> (bool, String) {
    let e = get(id);
    let order = e.algebra.dim() as u64;
    let degrees = degree_candidates(order, class_count(&group_table(&e.algebra)));
    let mut expected: Vec<u64> = match degrees.as_slice() {
        [only] => only.iter().map(|d| order / d).collect(),
        _ => return (false, format!("{id}: degree oracle not unique: {degrees:?}")),
    };
    expected.sort_unstable();
    let start = Instant::now();
    let x = schur_discriminant_crosscheck(&Analysis::new(e.algebra, &opts())).unwrap();
    let elapsed = start.elapsed();
    let mut got: Vec<u64> = x.schur_elements.iter().map(|s| s.value.parse().unwrap()).collect();
    got.sort_unstable();
    let ok = got == expected && x.agrees && x.schur_primes == x.excluded && elapsed < LIMIT_SCHUR;
    (ok, format!("{id} schur {got:?} vs oracle {expected:?}, primes {:?}, {elapsed:.2?}", x.schur_primes))
}

#[test]
fn criterion_2_schur_crosscheck() {
    let (ok3, d3) = schur_oracle("S3");
    let (ok2, d2) = schur_oracle("C2");
    report(2, ok3 && ok2, &format!("{d3}; {d2}"));
    assert!(ok3 && ok2);
}

#[test]
fn criterion_3_triviality_equivalence() {
    let start = Instant::now();
    let (mut compared, mut skipped) = (0, 0);
    let mut disagreements = Vec::new();
    for e in gating_corpus() {
        let an = Analysis::new(e.algebra.clone(), &opts());
        if !an.generic().unwrap().wedderburn.is_split() {
            skipped += 1;
            continue;
        }
        for p in verification_primes(&an, VERIFICATION_SAMPLES) {
            match (decomposition_matrix(&an, &p), triviality_by_radical(&an, &p)) {
                (Ok(d), Ok(r)) => {
                    compared += 1;
                    if d.is_trivial() != r {
                        disagreements.push(format!("{} at {p}", e.id));
                    }
                }
                (Err(Error::NotSplit(_)), Err(Error::NotSplit(_))) => skipped += 1,
                (d, r) => disagreements.push(format!("{} at {p}: {:?} / {:?}", e.id, d.err(), r.err())),
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = disagreements.is_empty() && compared > 0 && elapsed < LIMIT_EQUIVALENCE;
    report(
        3,
        ok,
        &format!("{compared} comparisons, {skipped} skipped as non-split, disagreements {disagreements:?}, {elapsed:.2?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_4_radical_monotonicity() {
    let analyses: Vec<Analysis> = gating_corpus().into_iter().map(|e| Analysis::new(e.algebra, &opts())).collect();
    let evaluations = Cell::new(0usize);
    let mut runner = TestRunner::new(Config {
        cases: 320,
        failure_persistence: None,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        ..Config::default()
    });
    let result = runner.run(&(0..analyses.len(), any::<u64>()), |(i, seed)| {
        let an = &analyses[i];
        let Some(p) = sample_primes(an.algebra().ring(), None, 1, seed).pop() else {
            return Ok(());
        };
        match radical_comparison(an, &p) {
            Ok(c) => {
                evaluations.set(evaluations.get() + 1);
                prop_assert!(
                    c.fiber_radical_dim >= c.generic_radical_dim,
                    "{} at {p}: {} < {}",
                    an.algebra().name(),
                    c.fiber_radical_dim,
                    c.generic_radical_dim
                );
                Ok(())
            }
            Err(Error::NotSplit(_)) => Ok(()),
            Err(e) => Err(TestCaseError::fail(format!("{} at {p}: {e}", an.algebra().name()))),
        }
    });
    let n = evaluations.get();
    let ok = result.is_ok() && n >= MIN_MONOTONICITY_EVALUATIONS;
    report(4, ok, &format!("{n} split fiber evaluations, {result:?}"));
    assert!(ok);
}

/// Arithmetic modulo a small prime on plain vectors.
struct Fq {
    q: i64,
}

impl Fq {
    fn inv(&self, a: i64) -> i64 {
        (1..self.q).find(|b| a * b % self.q == 1).unwrap()
    }

    /// Reduced row echelon form with zero rows dropped.
    fn rref(&self, rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(self.q)).collect()).collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, p);
            let s = self.inv(m[r][c]);
            m[r].iter_mut().for_each(|x| *x = *x * s % self.q);
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        m[i][j] = (m[i][j] - f * m[r][j]).rem_euclid(self.q);
                    }
                }
            }
            r += 1;
        }
        m.truncate(r);
        m
    }

    fn in_span(&self, span: &[Vec<i64>], v: &[i64]) -> bool {
        let mut rows = span.to_vec();
        rows.push(v.to_vec());
        self.rref(&rows).len() == self.rref(span).len()
    }

    /// Every subspace of `F_q^d`, as reduced echelon bases.
    fn subspaces(&self, d: usize) -> Vec<Vec<Vec<i64>>> {
        let mut out = vec![Vec::new()];
        for mask in 1u32..(1 << d) {
            let pivots: Vec<usize> = (0..d).filter(|&i| mask & (1 << i) != 0).collect();
            // free entries: right of the pivot, outside pivot columns
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| ((p + 1)..d).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let total = (self.q as usize).pow(free.len() as u32);
            for mut code in 0..total {
                let mut rows = vec![vec![0i64; d]; pivots.len()];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = 1;
                }
                for &(r, c) in &free {
                    rows[r][c] = (code % self.q as usize) as i64;
                    code /= self.q as usize;
                }
                out.push(rows);
            }
        }
        out
    }
}

/// A small algebra over `F_q` given by structure constants on plain integers.
struct SmallAlgebra {
    q: i64,
    dim: usize,
    consts: Vec<Vec<Vec<i64>>>,
}

impl SmallAlgebra {
    fn mul(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut z = vec![0; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                if x[i] * y[j] % self.q != 0 {
                    for (k, zk) in z.iter_mut().enumerate() {
                        *zk = (*zk + x[i] * y[j] * self.consts[i][j][k]).rem_euclid(self.q);
                    }
                }
            }
        }
        z
    }

    fn unit_vector(&self, i: usize) -> Vec<i64> {
        (0..self.dim).map(|j| i64::from(i == j)).collect()
    }

    fn is_ideal(&self, f: &Fq, span: &[Vec<i64>]) -> bool {
        span.iter().all(|v| {
            (0..self.dim).all(|i| {
                let e = self.unit_vector(i);
                f.in_span(span, &self.mul(&e, v)) && f.in_span(span, &self.mul(v, &e))
            })
        })
    }

    fn is_nilpotent(&self, f: &Fq, span: &[Vec<i64>]) -> bool {
        let mut power = span.to_vec();
        for _ in 0..=self.dim {
            if power.is_empty() {
                return true;
            }
            let products: Vec<Vec<i64>> = power.iter().flat_map(|x| span.iter().map(|y| self.mul(x, y))).collect();
            power = f.rref(&products);
        }
        power.is_empty()
    }

    /// The largest nilpotent two-sided ideal, by exhaustive search.
    fn radical_by_search(&self) -> Vec<Vec<i64>> {
        let f = Fq { q: self.q };
        f.subspaces(self.dim)
            .into_iter()
            .filter(|s| self.is_ideal(&f, s) && self.is_nilpotent(&f, s))
            .max_by_key(Vec::len)
            .unwrap()
    }

    fn definition(&self, name: &str) -> String {
        let mut s = format!("algebra {name}\nring F_{}\nbasis", self.q);
        for i in 0..self.dim {
            s += &format!(" b{i}");
        }
        s += "\nunit 1";
        s += &" 0".repeat(self.dim - 1);
        s += "\n";
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if self.consts[i][j][k] != 0 {
                        s += &format!("const {i} {j} {k} {}\n", self.consts[i][j][k]);
                    }
                }
            }
        }
        s
    }
}

fn matmul(a: &[i64], b: &[i64], n: usize, q: i64) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            c[i * n + j] = (0..n).map(|l| a[i * n + l] * b[l * n + j]).sum::<i64>().rem_euclid(q);
        }
    }
    c
}

/// Coordinates of `v` in the basis `basis` (assumed to contain it).
fn coordinates(f: &Fq, basis: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let d = basis.len();
    let len = v.len();
    // augmented system: columns are basis vectors, last column is v
    let rows: Vec<Vec<i64>> = (0..len)
        .map(|r| basis.iter().map(|b| b[r]).chain(std::iter::once(v[r])).collect())
        .collect();
    let e = f.rref(&rows);
    let mut x = vec![0; d];
    for row in &e {
        let p = row.iter().position(|&c| c != 0).unwrap();
        assert!(p < d, "vector outside the span");
        x[p] = row[d];
    }
    x
}

/// The unital subalgebra of `M_n(F_q)` generated by `gens`, if its
/// dimension is at most `max_dim`.
fn generated_subalgebra(q: i64, n: usize, gens: &[Vec<i64>], max_dim: usize) -> Option<SmallAlgebra> {
    let f = Fq { q };
    let id: Vec<i64> = (0..n * n).map(|i| i64::from(i / n == i % n)).collect();
    let mut basis = vec![id];
    let mut i = 0;
    while i < basis.len() {
        for g in gens {
            let w = matmul(g, &basis[i], n, q);
            if !f.in_span(&basis, &w) {
                basis.push(w);
                if basis.len() > max_dim {
                    return None;
                }
            }
        }
        i += 1;
    }
    let dim = basis.len();
    let consts = (0..dim)
        .map(|a| (0..dim).map(|b| coordinates(&f, &basis, &matmul(&basis[a], &basis[b], n, q))).collect())
        .collect();
    Some(SmallAlgebra { q, dim, consts })
}

fn scalar_to_i64(s: &Scalar) -> i64 {
    match s {
        Scalar::Mod(v) => *v as i64,
        other => panic!("expected a prime field element, got {other:?}"),
    }
}

#[test]
fn criterion_5_radical_oracle() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut instances, mut nonzero, mut mismatches) = (0, 0, Vec::new());
    let mut attempts = 0;
    while instances < 60 && attempts < 10_000 {
        attempts += 1;
        let q = if rng.gen_bool(0.5) { 2 } else { 3 };
        let n = rng.gen_range(2..=3);
        let count = rng.gen_range(1..=2);
        let gens: Vec<Vec<i64>> = (0..count)
            .map(|_| {
                (0..n * n)
                    .map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..q) })
                    .collect()
            })
            .collect();
        let Some(small) = generated_subalgebra(q, n, &gens, 4) else {
            continue;
        };
        if small.dim < 2 {
            continue;
        }
        instances += 1;
        let a = parse_algebra(&small.definition(&format!("R{instances}"))).unwrap();
        let generic = PrimeSpec::parse("generic", a.ring()).unwrap();
        let fiber = specialize(&a, &generic).unwrap();
        let engine: Vec<Vec<i64>> = radical(&fiber, &opts())
            .unwrap()
            .basis()
            .iter()
            .map(|v| v.iter().map(scalar_to_i64).collect())
            .collect();
        let f = Fq { q };
        let oracle = small.radical_by_search();
        if !oracle.is_empty() {
            nonzero += 1;
        }
        if f.rref(&engine) != oracle {
            mismatches.push(format!("R{instances} over F_{q}: engine {engine:?}, search {oracle:?}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && instances >= MIN_RADICAL_INSTANCES && elapsed < LIMIT_RADICAL_ORACLE;
    report(
        5,
        ok,
        &format!("{instances} algebras ({nonzero} with nonzero radical), mismatches {mismatches:?}, {elapsed:.2?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_6_fingerprint_injectivity() {
    let (mut pairs, mut collisions) = (0usize, Vec::new());
    for e in gating_corpus() {
        let an = Analysis::new(e.algebra.clone(), &opts());
        let mut primes = vec![an.generic_prime()];
        primes.extend(verification_primes(&an, VERIFICATION_SAMPLES));
        for p in primes {
            let fa = an.fiber(&p).unwrap();
            let simples = &fa.wedderburn.simples;
            for i in 0..simples.len() {
                for j in i + 1..simples.len() {
                    pairs += 1;
                    // an independent witness that the two simples differ
                    let distinct = simples[i].module.hom_dim(&simples[j].module) == 0;
                    if !distinct || simples[i].fingerprint == simples[j].fingerprint {
                        collisions.push(format!("{} at {p}: simples {} and {}", e.id, i + 1, j + 1));
                    }
                }
            }
        }
    }
    let ok = collisions.is_empty() && pairs >= MIN_FINGERPRINT_PAIRS;
    report(6, ok, &format!("{pairs} simple pairs compared, collisions {collisions:?}"));
    assert!(ok);
}

/// Element `a + b*delta + ...` of `Z[delta]`, as integer coefficients.
type Lin = Vec<i64>;

fn lin_mul(a: &Lin, b: &Lin) -> Lin {
    let mut c = vec![0; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn lin_add(a: &Lin, b: &Lin) -> Lin {
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0))
        .collect()
}

/// How a residue field sees an element of `Z[delta]`.
#[derive(Clone, Copy)]
enum Residue {
    Generic,
    DeltaZero,
    ModTwo,
}

impl Residue {
    fn reduce(self, a: &Lin) -> Lin {
        let mut v: Lin = match self {
            Residue::Generic => a.clone(),
            Residue::DeltaZero => a.iter().take(1).cloned().collect(),
            Residue::ModTwo => a.iter().map(|x| x.rem_euclid(2)).collect(),
        };
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}

/// Characters of the commutative algebra, found by testing every candidate
/// value in `{0, 1, -1, delta, -delta}` against the structure constants.
fn characters(a: &FiniteFreeAlgebra, res: Residue) -> Vec<Vec<Lin>> {
    let k = a.ring().coefficient_field();
    let consts: Vec<Vec<Vec<Lin>>> = a
        .constants()
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| {
                    c.iter()
                        .map(|p| {
                            p.to_upoly(0, &k)
                                .coeffs()
                                .iter()
                                .map(|s| k.format(s).parse::<i64>().unwrap())
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let candidates: Vec<Lin> = vec![vec![], vec![1], vec![-1], vec![0, 1], vec![0, -1]];
    let n = a.dim();
    let mut out: Vec<Vec<Lin>> = Vec::new();
    let mut choice = vec![0usize; n - 1];
    loop {
        let chi: Vec<Lin> = std::iter::once(vec![1]).chain(choice.iter().map(|&c| candidates[c].clone())).collect();
        let hom = (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = lin_mul(&chi[i], &chi[j]);
                let rhs = (0..n).fold(vec![], |acc, l| lin_add(&acc, &lin_mul(&consts[i][j][l], &chi[l])));
                res.reduce(&lhs) == res.reduce(&rhs)
            })
        });
        let reduced: Vec<Lin> = chi.iter().map(|x| res.reduce(x)).collect();
        if hom && !out.contains(&reduced) {
            out.push(reduced);
        }
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < candidates.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Decomposition matrix of a split commutative algebra with one-dimensional
/// simples: each generic character reduces to exactly one fiber character.
fn character_decomposition(a: &FiniteFreeAlgebra, res: Residue) -> Vec<Vec<usize>> {
    let generic = characters(a, Residue::Generic);
    let fiber = characters(a, res);
    generic
        .iter()
        .map(|chi| {
            let r: Vec<Lin> = chi.iter().map(|x| res.reduce(x)).collect();
            fiber.iter().map(|psi| usize::from(*psi == r)).collect()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    permutations(n - 1)
        .into_iter()
        .flat_map(|p| {
            (0..n).map(move |i| {
                let mut q = p.clone();
                q.insert(i, n - 1);
                q
            })
        })
        .collect()
}

/// Equal up to reordering rows and columns.
fn same_up_to_labels(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    if a.len() != b.len() || a.first().map(Vec::len) != b.first().map(Vec::len) {
        return false;
    }
    let sorted_rows = |m: &[Vec<usize>]| {
        let mut rows = m.to_vec();
        rows.sort();
        rows
    };
    let target = sorted_rows(b);
    permutations(a.first().map_or(0, Vec::len))
        .iter()
        .any(|perm| sorted_rows(&a.iter().map(|r| perm.iter().map(|&c| r[c]).collect()).collect::<Vec<_>>()) == target)
}

#[test]
fn criterion_7_brauer_b2() {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;

    let q = get("B2_Qdelta").algebra;
    let an = Analysis::new(q.clone(), &opts());
    let d = dec_ex(&an).unwrap();
    ok &= d.excluded_labels() == ["(delta)"] && d.unknown().is_empty();
    let delta = PrimeSpec::parse("gen=[delta]", q.ring()).unwrap();
    let m = decomposition_matrix(&an, &delta).unwrap();
    let oracle = character_decomposition(&q, Residue::DeltaZero);
    ok &= same_up_to_labels(&m.entries, &oracle);
    notes.push(format!("Q[delta]: excluded {:?}, matrix {:?}, oracle {oracle:?}", d.excluded_labels(), m.entries));

    let z = get("B2_Zdelta").algebra;
    let an = Analysis::new(z.clone(), &Options { verify: true, ..opts() });
    let d = dec_ex(&an).unwrap();
    let labels = d.excluded_labels();
    ok &= labels.contains(&"(2)".to_string()) && labels.contains(&"(delta)".to_string()) && d.unknown().is_empty();
    for (text, res) in [("p=2", Residue::ModTwo), ("gen=[delta]", Residue::DeltaZero)] {
        let p = PrimeSpec::parse(text, z.ring()).unwrap();
        let member = dec_gen_membership(&an, &p).unwrap();
        let m = member.matrix.expect("verify mode computes the matrix");
        let oracle = character_decomposition(&z, res);
        ok &= member.status == Triviality::NonTrivial && same_up_to_labels(&m.entries, &oracle);
        notes.push(format!("Z[delta] at {p}: matrix {:?}, oracle {oracle:?}", m.entries));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < LIMIT_BRAUER;
    report(7, ok, &format!("{}; Z[delta] excluded {labels:?}; {elapsed:.2?}", notes.join("; ")));
    assert!(ok);
}

#[test]
fn criterion_8_generic_triviality() {
    let (mut trivial, mut controls) = (0, 0);
    let mut failures = Vec::new();
    for e in gating_corpus() {
        let an = Analysis::new(e.algebra.clone(), &opts());
        let g = candidate_discriminant(&an, &radical_lattice(&an).unwrap()).unwrap().generator;
        let primes = sample_primes(e.algebra.ring(), Some(&g), SOUNDNESS_SAMPLES, SEED ^ 0x8);
        if primes.len() < SOUNDNESS_SAMPLES {
            failures.push(format!("{}: only {} primes sampled", e.id, primes.len()));
        }
        for p in primes {
            match dec_gen_membership(&an, &p) {
                Ok(m) if m.status == Triviality::Trivial => trivial += 1,
                // a generic fiber that does not split has no decomposition map
                Err(Error::NotSplit(_)) if e.expected_split() == Some(false) => controls += 1,
                other => failures.push(format!("{} at {p}: {:?}", e.id, other.map(|m| m.status))),
            }
        }
    }
    let ok = failures.is_empty();
    report(8, ok, &format!("{trivial} sampled primes trivial, {controls} on the non-split control, failures {failures:?}"));
    assert!(ok);
}

#[test]
fn criterion_9_brauer_b3_generic_simples() {
    let start = Instant::now();
    let e = get("B3_Qdelta");
    let an = Analysis::new(e.algebra, &opts());
    let w = &an.generic().unwrap().wedderburn;
    let dims = w.dims();
    let total: usize = w.multiplicities.iter().zip(&dims).map(|(m, d)| m * d).sum();
    let squares: usize = dims.iter().map(|d| d * d).sum();
    let elapsed = start.elapsed();
    let ok = w.radical_dim() + total == w.algebra_dim
        && (!w.is_split() || squares + w.radical_dim() == w.algebra_dim)
        && elapsed < LIMIT_STRETCH;
    report(
        9,
        ok,
        &format!("dims {dims:?}, radical {}, split {}, {elapsed:.2?}", w.radical_dim(), w.is_split()),
    );
    assert!(ok);
}
