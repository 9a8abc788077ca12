//! Gesture-chain benchmark construction: class enumeration over label
//! sequences, constrained duration sampling, frame-level chaining, and
//! subject-disjoint dataset assembly.

mod build;
mod classes;
mod durations;

pub use build::{build_chain, generate_dataset, GenerateOptions};
pub use classes::{count_classes, enumerate_classes};
pub use durations::{compute_initial_f, initial_frames, sample_durations};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::event::EventError;

#[derive(Debug, Error)]
pub enum ChainError {
    #[error("no valid chains")]
    NoValidChains,
    #[error("class count overflows u64 for N={n}, L={l}")]
    CountOverflow { n: u32, l: u32 },
    #[error("invalid chain spec: {0}")]
    InvalidSpec(String),
    #[error("infeasible duration constraint: {side} bound violated ({detail})")]
    InfeasibleDuration { side: &'static str, detail: String },
    #[error("heterogeneous chain sources")]
    HeterogeneousChainSources,
    #[error("recording {index} has {have} frames, chain needs {need}")]
    InsufficientFrames { index: usize, have: usize, need: usize },
    #[error("recordings disagree on frame geometry")]
    GeometryMismatch,
    #[error("{recordings} recordings but {durations} durations")]
    LengthMismatch { recordings: usize, durations: usize },
    #[error("empty test user set")]
    EmptyTestUsers,
    #[error("class id {0} out of range")]
    UnknownClass(u64),
    #[error(transparent)]
    Event(#[from] EventError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Parameters of a chain-classification task.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainTaskSpec {
    /// Number of distinct gestures.
    pub n: u32,
    /// Chain length.
    pub l: u32,
    /// Whether consecutive repeats of the same gesture are allowed.
    pub repetition: bool,
    /// Lower duration-fraction bound.
    pub alpha1: f64,
    /// Upper duration-fraction bound.
    pub alpha2: f64,
    /// Target frames per chained sample.
    pub f_total: u32,
    pub seed: u64,
}

impl ChainTaskSpec {
    pub fn validate(&self) -> Result<(), ChainError> {
        if self.n < 1 || self.l < 1 {
            return Err(ChainError::InvalidSpec(format!("N={} L={} must be >= 1", self.n, self.l)));
        }
        if !(self.alpha1 > 0.0 && self.alpha1 <= self.alpha2 && self.alpha2 <= 1.0) {
            return Err(ChainError::InvalidSpec(format!(
                "need 0 < alpha1 <= alpha2 <= 1, got ({}, {})",
                self.alpha1, self.alpha2
            )));
        }
        if self.f_total < self.l {
            return Err(ChainError::InvalidSpec(format!(
                "F_total={} smaller than L={}",
                self.f_total, self.l
            )));
        }
        Ok(())
    }
}

/// One benchmark class: a label sequence and its id in the lexicographic
/// enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainClass {
    pub id: u32,
    pub labels: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Validation,
    Test,
}

/// One generated sample: where its frame file lives and how it was built.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    /// Path relative to the manifest's directory.
    pub path: String,
    pub class_id: u32,
    pub user: String,
    pub lighting: String,
    pub durations: Vec<u32>,
    pub split: Split,
}

/// Dataset description written next to the generated frame files. Embeds the
/// class enumeration so evaluation never has to re-derive it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatasetManifest {
    pub spec: ChainTaskSpec,
    /// Label sequence per class id, in enumeration order.
    pub classes: Vec<Vec<u32>>,
    pub samples: Vec<SampleRecord>,
}

impl DatasetManifest {
    pub fn samples_in(&self, split: Split) -> impl Iterator<Item = &SampleRecord> {
        self.samples.iter().filter(move |s| s.split == split)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}
