//! Ordinal-indexed strictly positive modal logic below ε₀.
//!
//! - [`ordinal`]: ordinals in Cantor normal form and the hyper-exponential `e`.
//! - [`formula`]: formulas `⊤ | φ ∧ ψ | ⟨n^α⟩φ` with a text syntax.
//! - [`semantics`]: worlds as ℓ-sequences, `R_n^α`, forcing via minimal points.
//! - [`calculus`]: monomial normal forms and the sequent decision procedure.
//! - [`oracle`]: brute-force model checking on finite fragments.
//! - [`dot`]: Graphviz rendering of fragments.

pub mod calculus;
pub mod dot;
pub mod formula;
pub mod oracle;
pub mod ordinal;
pub mod par;
pub mod semantics;
mod syntax;

pub use calculus::{
    decide_batch, derives, equiv, is_mnf, normalize, Mnf, MnfError, Monomial, Sequent, Verdict,
};
pub use formula::Formula;
pub use oracle::{FragmentSpec, Oracle, OracleError};
pub use ordinal::{Ordinal, OrdinalError};
pub use par::Execution;
pub use semantics::{forces, minimal_point, r_n, r_n_alpha, Point, PointError};
pub use syntax::ParseError;
