//! Structural invariants over random fibers of the example algebras.

use proptest::prelude::*;

use decompgen::analysis::Analysis;
use decompgen::corpus::corpus;
use decompgen::strata::sample_primes;
use decompgen::Options;

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    /// Radical plus semisimple quotient fill the algebra, composition factors
    /// of the regular module do too, and split quotients are sums of full
    /// matrix algebras.
    #[test]
    fn wedderburn_bookkeeping(index in 0usize..12, seed in any::<u64>()) {
        let entries: Vec<_> = corpus().unwrap().into_iter().filter(|e| !e.stretch).collect();
        let e = &entries[index % entries.len()];
        let an = Analysis::new(e.algebra.clone(), &Options { seed, ..Options::default() });
        let mut primes = vec![an.generic_prime()];
        primes.extend(sample_primes(e.algebra.ring(), None, 1, seed));
        for p in primes {
            let w = &an.fiber(&p).unwrap().wedderburn;
            let dims = w.dims();
            let semisimple: usize = w.multiplicities.iter().zip(&dims).map(|(m, d)| m * d).sum();
            prop_assert_eq!(w.radical_dim() + semisimple, w.algebra_dim, "{} at {}", e.id, p);
            let composition: usize = w.regular_multiplicities.iter().zip(&dims).map(|(m, d)| m * d).sum();
            prop_assert_eq!(composition, w.algebra_dim, "{} at {}", e.id, p);
            if w.is_split() {
                let squares: usize = dims.iter().map(|d| d * d).sum();
                prop_assert_eq!(w.radical_dim() + squares, w.algebra_dim, "{} at {}", e.id, p);
            }
        }
    }
}
