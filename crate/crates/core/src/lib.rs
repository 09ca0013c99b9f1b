//! Computational certificates for cyclic covers `V = {f = 0, u^K = g}` of
//! hypersurfaces in weighted projective space `P(1, …, 1, l)`, where
//! `deg f = m`, `deg g = Kl` and `m + (K − 1)l = M + 1`.
//!
//! The crate checks, at concrete points of concrete covers, the local
//! conditions used in birational rigidity arguments: regularity of the
//! sequences built from the Taylor pieces of `f` and `g^{1/K}`, the
//! multiplicities of hypertangent divisors along formal arcs, and the exact
//! degree-bound arithmetic of the intersection chain.
//!
//! * [`poly`]: sparse exact polynomials over `Q` and `F_p`.
//! * [`series`]: the coefficients `γ_i`, the pieces `Φ_i`, truncated power
//!   series and Hensel lifting of arcs.
//! * [`regseq`]: Gröbner bases, dimensions and the regular-sequence certifier.
//! * [`cover`]: families, instances, localization, point sampling, sequences
//!   and arc checks.
//! * [`chain`]: ordering tables and degree-bound certificates.
//! * [`cli`]: instance files, reports, campaigns and the commands of the
//!   `fanocert` binary.
//!
//! ```
//! use fanocert::chain::{main_case_bound, BoundVerdict};
//! use fanocert::cover::validate_family;
//!
//! let family = validate_family(6, 4, 3, 2).unwrap();
//! let cert = main_case_bound(&family).unwrap();
//! assert_eq!(cert.verdict, BoundVerdict::StrictlyBelow);
//! assert_eq!(fanocert::poly::rational_string(&cert.product), "20/9");
//! ```

pub mod chain;
pub mod cli;
pub mod cover;
pub mod poly;
pub mod regseq;
pub mod seed;
pub mod series;
