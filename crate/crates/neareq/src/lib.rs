//! Nash- and ε-equilibrium analysis for networked-system games.
//!
//! The crate has a game-agnostic core and three concrete games:
//!
//! - [`equilibrium`] — game interface, deviation gains, Nash/ε verdicts,
//!   best-response dynamics, mixed strategies over real intervals and
//!   seeded Monte Carlo estimation.
//! - [`security`] — a security-level game where the least protected
//!   players are compromised and pay a fixed penalty.
//! - [`tcp`] — goodput competition between TCP senders adjusting their
//!   additive-increase parameter at a shared bottleneck.
//! - [`netform`] — a network-formation game over directed topologies
//!   with storage, retrieval, routing and link-maintenance costs.
//!
//! All operations are pure functions over immutable inputs; everything
//! randomized takes an explicit 64-bit seed and is reproducible.

pub mod equilibrium;
pub mod error;
pub mod grid;
pub mod netform;
pub mod security;
pub mod tcp;

pub use error::{Error, Result};
