//! Shared fixtures for the benchmarks.

use cagegen::expansions::{apply_expansion, enumerate_expansion_sites};
use cagegen::seeds::{build_seed, SeedKind};
use cagegen::{DualFullerene, ReductionTriple};

/// The dual of C60 (Ih).
pub fn c60() -> DualFullerene {
    build_seed(SeedKind::C20).leapfrog()
}

/// Every child of `g` by an expansion of length at most `max_len`, with the
/// reduction that undoes it.
pub fn children(g: &DualFullerene, max_len: usize) -> Vec<(DualFullerene, ReductionTriple)> {
    enumerate_expansion_sites(g, max_len).iter().map(|s| apply_expansion(g, s).unwrap()).collect()
}
