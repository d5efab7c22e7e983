//! Exact-integer toolkit for cubic sublattices of the three-dimensional
//! integer lattice.
//!
//! A sublattice of `Z³` is *cubic* if it has a basis of three pairwise
//! orthogonal vectors of equal length (the *edge length*). Any vector whose
//! squared length is divisible by `d²` lies in a cubic sublattice of edge
//! `d`, and for primitive vectors that sublattice is unique; this crate
//! constructs it (`gamma`), decides whether an arbitrary basis spans a cubic
//! sublattice (`classify`), relates the two by exhaustive enumeration, and
//! exposes the number-theoretic consequences for sums of three coprime
//! squares (`scale_up` / `scale_down`).
//!
//! All arithmetic is exact over checked 128-bit integers: an operation that
//! would overflow reports [`Error::Overflow`] instead of wrapping. The
//! intended operating range of coordinates up to `2³⁰` in magnitude and
//! edge lengths up to `10⁴` keeps every intermediate value far from the limit.
//!
//! Everything here is a pure function over immutable values and safe to use
//! from any number of threads.

#![forbid(unsafe_code)]

mod arith;
pub mod cubic;
pub mod error;
pub mod int3;
pub mod numtheory;
pub mod perp;
pub mod poset;
pub mod verify;

pub use cubic::{
    classify, edge_splits, enumerate_cubic_containing, enumerate_cubic_edge, extract_cubic_basis,
    gamma, gamma_any, gamma_contains_def, gcd_witness_pair, gcd_witness_triple, sphere_points,
    ClassifyResult, CubicLattice,
};
pub use error::{Error, Result};
pub use int3::{hnf_of_generators, max_square_divisor, Basis3, HnfBasis3, IntVec3};
pub use numtheory::{
    coprime_three_squares_necessary, prime_vector, reverse_construct, scale_down, scale_up,
    ReverseStep, ReverseTrace,
};
pub use perp::{cross_preimage, perp_basis, perp_sublattice, PerpSublattice, PlaneLattice};
pub use poset::{
    divisor_family, lattice_leq, maximal_cubic_under, minimal_cubic_over, CubicFamily,
};
