//! Exhaustive, isomorph-free generation of fullerenes.
//!
//! Fullerenes are handled through their duals: plane triangulations with
//! twelve vertices of degree 5 and all other vertices of degree 6. New duals
//! are grown from a handful of irreducible seeds by local patch expansions,
//! and isomorphic copies are rejected with a canonical construction path: a
//! child is kept only if the expansion that produced it inverts its canonical
//! reduction, and each parent applies one expansion per automorphism orbit.
//!
//! The crate is organised bottom-up:
//!
//! * [`planar_map`]: rotation systems, validation, primal conversion.
//! * [`seeds`]: the irreducible start graphs and the nanotube series.
//! * [`expansions`]: `L`/`B` expansions and their inverse reductions.
//! * [`canonical`]: invariant tuples, BFS codes, automorphism groups.
//! * [`lookahead`]: bounds on the length of canonical expansions.
//! * [`generator`]: the recursive search.
//! * [`oracle`]: independent brute-force checks.
//! * [`planar_code`]: the binary `planar_code` interchange format.

pub mod canonical;
pub mod error;
pub mod expansions;
pub mod generator;
pub mod lookahead;
pub mod oracle;
pub mod planar_code;
pub mod planar_map;
pub mod seeds;

pub use error::{Error, Result};
pub use planar_map::{Dart, DualFullerene, PrimalFullerene, Violation};
pub use seeds::SeedKind;
pub use expansions::{ExpansionKind, ExpansionSite, ReductionTriple};
pub use canonical::{AutomorphismGroup, Canonicity, InvariantTuple};
pub use generator::{generate, Emitted, GenerationStats, GenerationTask, Mode, Origin, Sink};
pub use oracle::CanonicalForm;
pub use planar_code::PlanarCodeWriter;
