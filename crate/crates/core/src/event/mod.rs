//! Event data model: timestamped polarity events, event streams with
//! recording metadata, and accumulated frame tensors.

mod accumulate;
mod io;
mod synth;

pub use accumulate::accumulate_frames;
pub use io::{
    read_events, read_events_csv, read_frames, write_events, write_events_csv, write_frames,
};
pub use synth::{synth_gesture, GestureArchetype, MotionAxis, ShapeKind};

use ndarray::Array4;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EventError {
    #[error("empty stream")]
    EmptyStream,
    #[error("bad magic")]
    BadMagic,
    #[error("truncated payload")]
    Truncated,
    #[error("unsorted timestamps at event {0}")]
    UnsortedTimestamps(usize),
    #[error("invalid polarity {value} at event {index}")]
    InvalidPolarity { index: usize, value: u64 },
    #[error("event {index} at ({x}, {y}) outside {width}x{height} geometry")]
    OutOfBounds { index: usize, x: u16, y: u16, width: u32, height: u32 },
    #[error("shape exceeds geometry")]
    ShapeExceedsGeometry,
    #[error("invalid frame count {0}")]
    InvalidFrameCount(usize),
    #[error("malformed csv line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A single sensor event: microsecond timestamp, pixel position, polarity.
///
/// Polarity 0 is OFF (brightness decrease), 1 is ON (increase).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Event {
    pub t: u64,
    pub x: u16,
    pub y: u16,
    pub polarity: u8,
}

/// Recording metadata carried alongside a stream. The chaining rules key on
/// user and lighting ids; file formats do not encode this, dataset manifests do.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamMeta {
    pub user: String,
    pub lighting: String,
    pub gesture: u32,
}

/// An ordered event recording with its sensor geometry.
#[derive(Clone, Debug, PartialEq)]
pub struct EventStream {
    width: u32,
    height: u32,
    events: Vec<Event>,
    pub meta: StreamMeta,
}

impl EventStream {
    /// Build a stream, enforcing sorted timestamps and in-bounds coordinates.
    pub fn new(
        width: u32,
        height: u32,
        events: Vec<Event>,
        meta: StreamMeta,
    ) -> Result<Self, EventError> {
        let mut prev = 0u64;
        for (i, ev) in events.iter().enumerate() {
            if ev.t < prev {
                return Err(EventError::UnsortedTimestamps(i));
            }
            prev = ev.t;
            if u32::from(ev.x) >= width || u32::from(ev.y) >= height {
                return Err(EventError::OutOfBounds {
                    index: i,
                    x: ev.x,
                    y: ev.y,
                    width,
                    height,
                });
            }
            if ev.polarity > 1 {
                return Err(EventError::InvalidPolarity {
                    index: i,
                    value: u64::from(ev.polarity),
                });
            }
        }
        Ok(Self { width, height, events, meta })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Event count per polarity, (off, on).
    pub fn polarity_counts(&self) -> (usize, usize) {
        let on = self.events.iter().filter(|e| e.polarity == 1).count();
        (self.events.len() - on, on)
    }
}

/// Metadata of a frame sequence: source user/lighting, the gesture labels it
/// contains (one for a plain recording, L for a chain), and the frame index
/// at which each gesture segment ends.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameMeta {
    pub user: String,
    pub lighting: String,
    pub labels: Vec<u32>,
    pub boundaries: Vec<usize>,
}

/// T x 2 x H x W tensor of per-window event counts. Channel index equals the
/// event polarity (0 = OFF, 1 = ON).
#[derive(Clone, Debug, PartialEq)]
pub struct FrameSequence {
    pub values: Array4<f32>,
    pub meta: FrameMeta,
}

impl FrameSequence {
    pub fn frames(&self) -> usize {
        self.values.shape()[0]
    }

    pub fn channels(&self) -> usize {
        self.values.shape()[1]
    }

    pub fn height(&self) -> usize {
        self.values.shape()[2]
    }

    pub fn width(&self) -> usize {
        self.values.shape()[3]
    }

    /// Clamp all cells to {0, 1}. Conservation no longer holds afterwards.
    pub fn binarize(&mut self) {
        self.values.mapv_inplace(|v| if v > 0.0 { 1.0 } else { 0.0 });
    }

    /// Total accumulated count per channel.
    pub fn channel_totals(&self) -> Vec<f64> {
        (0..self.channels())
            .map(|c| self.values.index_axis(ndarray::Axis(1), c).iter().map(|&v| f64::from(v)).sum())
            .collect()
    }
}
