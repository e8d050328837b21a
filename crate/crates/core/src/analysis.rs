//! Per-algebra cache of fiber computations, shared across threads.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::{specialize, FiberAlgebra, FiniteFreeAlgebra};
use crate::arith::PrimeSpec;
use crate::error::Result;
use crate::options::Options;
use crate::rep::{wedderburn, WedderburnData};

#[derive(Debug)]
pub struct FiberAnalysis {
    pub fiber: FiberAlgebra,
    pub wedderburn: WedderburnData,
}

type Slot = Result<Arc<FiberAnalysis>>;

pub struct Analysis {
    algebra: FiniteFreeAlgebra,
    opts: Options,
    fibers: Mutex<HashMap<PrimeSpec, Slot>>,
}

impl Analysis {
    pub fn new(algebra: FiniteFreeAlgebra, opts: &Options) -> Analysis {
        Analysis {
            algebra,
            opts: *opts,
            fibers: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &FiniteFreeAlgebra {
        &self.algebra
    }

    pub fn options(&self) -> &Options {
        &self.opts
    }

    pub fn generic_prime(&self) -> PrimeSpec {
        PrimeSpec::generic(self.algebra.ring())
    }

    /// Fiber and Wedderburn data at `p`, computed once. Two threads asking
    /// for the same new prime may both compute it; the first result wins.
    pub fn fiber(&self, p: &PrimeSpec) -> Result<Arc<FiberAnalysis>> {
        if let Some(hit) = self.fibers.lock().expect("cache lock").get(p) {
            return hit.clone();
        }
        let computed = specialize(&self.algebra, p).and_then(|fiber| {
            let w = wedderburn(&fiber, &self.opts)?;
            Ok(Arc::new(FiberAnalysis { fiber, wedderburn: w }))
        });
        let mut cache = self.fibers.lock().expect("cache lock");
        cache.entry(p.clone()).or_insert(computed).clone()
    }

    pub fn generic(&self) -> Result<Arc<FiberAnalysis>> {
        self.fiber(&self.generic_prime())
    }
}
