//! rebc — exact-arithmetic classification of vector bundles over real
//! elliptic curves.
//!
//! A real elliptic curve is a genus-1 curve with an anti-holomorphic
//! involution σ; its fixed locus has two circles, one circle, or none. This
//! crate models the curve as a lattice quotient in exact rational
//! coordinates and computes, in closed form:
//!
//! * the Galois involution on each Picard variety Pic^d and the topology and
//!   modular meaning of its real locus ([`picard`]);
//! * the real structure of the moduli space M_X(r,d) of semi-stable bundles,
//!   its real isomorphism type (a symmetric product of the curve or of
//!   Pic⁰), and the component classification in the coprime case
//!   ([`moduli`]);
//! * the indecomposable-bundle calculus: the one-dimensional family
//!   I_X(r,d), its torsion-twist parametrization, the diagonal embedding
//!   into the moduli space, and the real/quaternionic dichotomy for
//!   self-conjugate classes ([`indecomposable`]);
//! * Krull–Schmidt normal forms, slope stability and S-equivalence for
//!   formal direct sums ([`bundlealgebra`]);
//! * topological type enumeration for real and quaternionic bundles,
//!   including the higher-genus coprime component table ([`topotypes`]).
//!
//! Every analytic answer can be re-derived by brute force: the [`oracle`]
//! module enumerates fixed points on torsion grids and counts components by
//! grid adjacency, exactly. The [`cli`] module packages everything behind
//! deterministic JSON reports; the `rebc` binary exposes it as subcommands.
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to share across threads; grid enumerations are
//! data-parallel internally with deterministic (sorted) output.
//!
//! See the crate's `examples/` directory for one runnable walk-through per
//! capability.

pub mod bundlealgebra;
pub mod cli;
pub mod error;
pub mod indecomposable;
pub mod moduli;
pub mod oracle;
pub mod picard;
pub mod topotypes;
pub mod torus;

pub use error::{Error, Result};
pub use torus::{frac, CurveKind, CurveSpec, Rational, TorusPoint};
