//! Free matching Rota-Baxter algebras over exact rationals.
//!
//! Bracketed words and decorated planar forests, the monomial order `≤db`,
//! rewriting modulo the matching Rota-Baxter relations with a
//! Gröbner-Shirshov verifier, the product `⋄`, and the cocycle Hopf algebra
//! structure on forests and on the free algebra.

pub mod checks;
pub mod exec;
pub mod forest;
pub mod gsb;
pub mod hopf;
pub mod linear;
pub mod mrba;
pub mod notation;
pub mod order;
pub mod rewrite;
pub mod signature;
pub mod word;

pub use exec::Execution;
pub use forest::{theta, theta_inv, Decoration, Forest, Tree};
pub use linear::{q, ratio, Coefficient, LinComb, TensorComb};
pub use mrba::Mrba;
pub use rewrite::{is_mrbw, RewriteSystem};
pub use signature::{Letter, Operator, Signature};
pub use word::{StarWord, Word};
