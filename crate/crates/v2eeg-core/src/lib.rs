//! Core algorithms for video-conditioned EEG synthesis.
//!
//! Everything in this crate is pure computation: a small reverse-mode
//! autodiff tensor engine, EEG preprocessing (band filtering, normalization,
//! windowing), electrode/signal graph construction, graph-based data
//! augmentation, cross-modal attention conditioning, the self-play graph
//! network denoiser, the DDPM diffusion engine (schedules, losses, training,
//! sampling), and the evaluation metric suite.
//!
//! The crate is `no_std`-compatible (with `alloc`); all IO, file formats and
//! the CLI live in the companion `v2eeg` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod augment;
pub mod conditioning;
pub mod diffusion;
pub mod dsp;
pub mod error;
pub mod gradcheck;
pub mod graphs;
pub mod metrics;
pub mod real;
pub mod rng;
pub mod spgn;
pub mod tape;
pub mod tensor;
pub mod welch;

pub use error::CoreError;
pub use real::Real;
pub use rng::Rng;
pub use tape::{Gradients, Tape, Var};
pub use tensor::Tensor;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, CoreError>;
