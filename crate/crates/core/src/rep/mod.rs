//! Modules over fiber algebras: composition factors, the Jacobson radical,
//! endomorphism rings and splitting.

mod chop;
mod module;
mod wedderburn;

pub use chop::{chop, find_submodule, is_isomorphic};
pub use module::AlgebraModule;
pub use wedderburn::{radical, simple_modules, wedderburn, SimpleModule, SimpleSummary, WedderburnData};
