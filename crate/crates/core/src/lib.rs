//! z-measures on partitions and their determinantal structure.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: partitions, Maya sets, rim hooks, r-cores and r-quotients.
//! - [`scalar`]: exact Gaussian-rational and complex-float backends.
//! - [`sl2me`]: Pochhammer symbols, ₂F₁ and sl(2) matrix elements.
//! - [`vector`]: sparse vectors over partitions and Maya sets.
//! - [`kerov`]: Kerov's operators `U`, `L`, `D` (and rim-hook versions) on
//!   the span of partitions.
//! - [`fock`]: the infinite wedge with fermionic operators.
//! - [`measure`]: z-measures, the mixed measure, brute-force correlations and
//!   an exact sampler.
//! - [`kernel`]: the hypergeometric kernel and determinantal correlations.
//! - [`cli`]: the command implementations behind the `zmeasures` binary.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod cli;
pub mod error;
pub mod fock;
pub mod kernel;
pub mod kerov;
pub mod measure;
pub mod partition;
pub mod scalar;
pub mod sl2me;
pub mod vector;

pub use error::{Error, Result};
pub use partition::{HalfInt, MayaSet, Partition};
pub use scalar::{GaussRat, NumericMode, Scalar, C64};
