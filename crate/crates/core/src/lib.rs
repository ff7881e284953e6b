//! Seifert fibered 3-manifolds over hyperbolic 2-orbifolds and the
//! `PSL(2,R)`-representations of their Fuchsian base groups.
//!
//! The crate covers:
//!
//! - [`seifert`]: Seifert indices `(g; b; (a1,b1), ...)`, Fuchsian signatures,
//!   normalization, fiber-orientation reversal, orbifold Euler characteristic,
//!   unit tangent bundles and group presentations.
//! - [`abelian`]: exact arithmetic in `H^2(Γ;Z) = ab<x0..xn | a_i x_i = x0>`,
//!   Smith normal form, and the `Ext/2Ext` equivalence test.
//! - [`euler_class`]: Jankins–Neumann realizability and enumeration of the
//!   realizable classes inside one `Ext(Γ;Z/2)` coset.
//! - [`asymptotics`]: the exact leading coefficient of `log|Tor(M;ρ_2N)|/(2N)`
//!   as a rational multiple of `log 2`.
//! - [`su11`]: irreducible `SU(1,1)`-representations of genus-0 three-fiber
//!   manifolds, with explicit matrices and relation checks.
//! - [`cli`]: the `seifert` command-line front end.
//!
//! ```
//! use seifert::{asymptotics, SeifertIndex};
//!
//! let index: SeifertIndex = "0; -1; 2/1, 3/1, 7/1".parse().unwrap();
//! let report = asymptotics::leading_coefficient(&index);
//! assert_eq!(report.coefficient.to_string(), "1/42");
//! ```

pub mod abelian;
pub mod asymptotics;
pub mod cli;
mod error;
pub mod euler_class;
pub mod presentation;
pub mod rational;
pub mod seifert;
pub mod su11;

pub use abelian::{CohomologyClass, IntegerMatrix};
pub use asymptotics::{AsymptoticCoefficient, AsymptoticsReport};
pub use error::{Error, Result};
pub use euler_class::{LiftLedger, RealizabilityReport};
pub use presentation::Presentation;
pub use seifert::{ExceptionalFiber, FuchsianSignature, SeifertIndex, SeifertIndexInput};
pub use su11::{RepTriple, Su11Element, Su11Representation};
