//! Exact-arithmetic toolkit for Erdos-Straus decompositions
//! 4/p = 1/x + 1/y + 1/z over primes p.
//!
//! Everything runs on overflow-checked 128-bit integers: the brute-force
//! solution enumerator, the closed-form trivial solutions, the recovery
//! formulas and necessary conditions, the three Pythagorean-triple
//! correspondences with their inverses and gcd identities, the Berggren
//! tree of primitive triples, and the Bezout-coefficient family search
//! with its reduced type II variant.

pub mod berggren;
pub mod bezout;
pub mod error;
pub mod kernel;
pub mod solutions;
pub mod triples;

pub use error::{Error, Result};
pub use kernel::Nat;
pub use solutions::{EscSolution, SolutionClass};
pub use triples::{PythTriple, TripleKind};
