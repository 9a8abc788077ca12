//! Event-camera gesture-chain benchmarks and a spiking-network training engine.
//!
//! The crate has two halves. The data half synthesizes gesture event streams,
//! accumulates them into polarity-count frame tensors, and chains short clips
//! into temporal-order classification datasets. The model half trains and
//! evaluates feed-forward spiking and non-spiking networks on those datasets,
//! with configurable leak/reset dynamics, per-time-step normalization, and
//! temporal attention weights, plus the analysis tooling to inspect what the
//! trained models learned about time.

pub mod analysis;
pub mod chain;
pub mod event;
pub mod norm;
pub mod snn;
pub mod train;

pub use event::{accumulate_frames, Event, EventStream, FrameMeta, FrameSequence, StreamMeta};
pub use snn::{Network, NetworkConfig, NeuronConfig};
