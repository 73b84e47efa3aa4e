//! fsing — Frobenius-theoretic properties of graded quotients of weighted
//! polynomial rings over prime fields.
//!
//! Given a homogeneous ideal `I` of `A = F_p[x_1..x_n]` with positive
//! integer weights, the toolkit decides and certifies properties of
//! `R = A/I` defined through the Frobenius actions on the local cohomology
//! modules `H^i_m(R)`:
//!
//! - **F-injective** — Frobenius acts injectively on every `H^i_m(R)`;
//! - **F-full** — the span of the Frobenius images generates every
//!   `H^i_m(R)`;
//! - **strongly F-injective** — both of the above;
//! - **F-pure** — decided by Fedder's colon criterion in the ambient ring;
//! - **F-anti-nilpotent** — certified (never guessed) through purity or
//!   the deformation rules;
//!
//! along with element tests (regular, surjective, strictly filter regular),
//! numeric invariants (depth, dimension, finiteness dimension, CM/gCM) and
//! a deformation inference engine that produces machine-checked
//! certificates.
//!
//! Everything runs through graded duality: `H^i_m(R)_d` is the k-dual of
//! `Ext^{n-i}_A(R, A)_{-d-D}` where `D` is the total weight, so the whole
//! Frobenius side is computed on finitely presented Ext modules via a
//! deterministic Buchberger engine, minimal graded free resolutions, chain
//! lifts, and the Cartier operator (the p^{-1}-linear dual of Frobenius).
//! An independent Koszul-limit oracle cross-checks the duality route
//! degreewise; verdicts never depend on the oracle.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run --release --example groebner_and_ideals
//! cargo run --release --example resolutions_and_ext
//! cargo run --release --example cartier_operator
//! cargo run --release --example local_cohomology_window
//! cargo run --release --example classify_fixtures
//! cargo run --release --example deformation_certificate
//! cargo run --release --example finite_length_lab
//! cargo run --release --example generate_fixtures
//! ```
//!
//! or with the `fsing` binary (`classify`, `deform`, `reproduce`,
//! `oracle-check`).

pub mod error;
pub mod field;
pub mod linalg;
pub mod ring;
pub mod poly;
pub mod order;
pub mod groebner;
pub mod ideal;
pub mod modules;
pub mod resolution;
pub mod ext;
pub mod cartier;
pub mod cohomology;
pub mod koszul;
pub mod finlen;
pub mod classify;
pub mod deform;
pub mod input;
pub mod report;
pub mod fixtures;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use ring::PolyRing;
