//! Exact arithmetic for monic polynomials whose roots are nonzero integers.
//!
//! Two consecutive coefficients `(a_j, a_{j+1})` of such a polynomial bound
//! all of its roots, so only finitely many polynomials share them. This crate
//! computes those bounds exactly, checks the coefficient inequalities the
//! family satisfies, and enumerates every member with a given coefficient
//! pair.
//!
//! ```
//! use intpoly::{enumerate_pair, PairConstraint, Status};
//!
//! let c = PairConstraint::from_i64s(3, 1, -6, 11).unwrap();
//! let r = enumerate_pair(&c).unwrap();
//! assert_eq!(r.status, Status::Complete);
//! assert_eq!(r.solutions.len(), 1);
//! assert_eq!(r.solutions[0].poly.to_string(), "x^3 - 6x^2 + 11x - 6");
//! ```

pub mod bounds;
pub mod chains;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod factor;
pub mod inequalities;
pub mod json;
pub mod poly;
pub mod verify;

pub use bounds::{
    alpha, k_closed, k_product, root_bound_alpha, root_bound_constant_term,
    root_bound_first_principle, AlphaValue, BoundCertificate, BoundMethod, ChainBound,
    ClosedChainBound, Radius,
};
pub use chains::{chain_brute_force, chain_count_closed, chain_count_exact, ChainCount};
pub use enumeration::{
    brute_force_all, brute_force_for_each, enumerate_last_pair, enumerate_pair,
    enumerate_pair_with, tightness_search, EnumerationResult, PairConstraint, SearchOptions,
    Solution, Status, Strategy,
};
pub use error::{Error, Result};
pub use inequalities::{
    check_all, check_newton_strong, check_newton_weak, check_no_consecutive_zeros,
    check_second_principle, check_zero_remark, CheckName, CheckReport, Verdict,
};
pub use poly::{
    evaluate, family, from_roots, multiplier_f, multiply, sign_flip, symmetric_functions,
    IntPolynomial, RootMultiset, SymmetricVector,
};
pub use verify::{verify_sweep, SweepReport};
