//! Training toolkit for attentional recurrent sequence-to-sequence models.
//!
//! Implements and compares four training objectives on the same encoder-decoder:
//! maximum likelihood, scheduled sampling, differentiable scheduled sampling, and
//! soft-aligned maximum likelihood over Straight-Through Gumbel-Softmax rollouts.
//! Comes with a minimal reverse-mode autodiff core, a gradient-check harness,
//! synthetic-task data generation, greedy/beam decoding, and corpus BLEU.

pub mod bleu;
pub mod checkpoint;
pub mod data;
pub mod decode;
pub mod model;
pub mod objectives;
pub mod rng;
pub mod sampling;
pub mod selftest;
pub mod tensor;
pub mod training;
pub mod vocab;

/// Scalar element type for all tensors. 64-bit by default; the `f32` feature
/// switches the whole build to 32-bit for faster training runs.
#[cfg(feature = "f32")]
pub type Real = f32;
#[cfg(not(feature = "f32"))]
pub type Real = f64;

/// Byte width of [`Real`], recorded in checkpoint files.
pub const REAL_WIDTH: u8 = std::mem::size_of::<Real>() as u8;

pub use tensor::{grad_check, Gradients, Tape, Tensor, TensorError};
