//! Synthetic gesture generator: parametric shapes swept along oscillating
//! trajectories, emitting ON events on the leading edge and OFF events on the
//! trailing edge, plus uniform background noise.

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use super::{Event, EventError, EventStream, StreamMeta};

/// Spatial pattern catalog. Shapes are scaled from the sensor geometry so the
/// same archetype id stays recognizable across resolutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    Bar,
    Cross,
    Ring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MotionAxis {
    Horizontal,
    Vertical,
    Diagonal,
}

/// Parametric description of one synthetic gesture class.
#[derive(Clone, Debug)]
pub struct GestureArchetype {
    pub id: u32,
    pub shape: ShapeKind,
    pub axis: MotionAxis,
    /// Oscillation angular velocity in radians per millisecond.
    pub angular_velocity: f64,
    /// Expected events per changed pixel per millisecond.
    pub event_rate: f64,
    /// Expected uniform background events per millisecond.
    pub noise_rate: f64,
}

impl GestureArchetype {
    /// Canonical catalog entry for an archetype id: shape cycles through the
    /// catalog, motion axis through the three directions.
    pub fn from_id(id: u32) -> Self {
        let shape = match id % 3 {
            0 => ShapeKind::Bar,
            1 => ShapeKind::Cross,
            _ => ShapeKind::Ring,
        };
        let axis = match (id / 3) % 3 {
            0 => MotionAxis::Horizontal,
            1 => MotionAxis::Vertical,
            _ => MotionAxis::Diagonal,
        };
        Self {
            id,
            shape,
            axis,
            angular_velocity: std::f64::consts::TAU / 80.0,
            event_rate: 1.0,
            noise_rate: 0.1,
        }
    }

    pub fn with_rates(mut self, event_rate: f64, noise_rate: f64) -> Self {
        self.event_rate = event_rate;
        self.noise_rate = noise_rate;
        self
    }
}

/// Shape pixel mask as offsets around the center, scaled to the geometry.
fn shape_pixels(shape: ShapeKind, half_extent: i64) -> Vec<(i64, i64)> {
    let e = half_extent;
    let mut px = Vec::new();
    match shape {
        ShapeKind::Bar => {
            for dy in -e..=e {
                px.push((-1, dy));
                px.push((0, dy));
            }
        }
        ShapeKind::Cross => {
            for d in -e..=e {
                px.push((d, 0));
                px.push((0, d));
            }
            px.dedup();
        }
        ShapeKind::Ring => {
            for dy in -e..=e {
                for dx in -e..=e {
                    let r = ((dx * dx + dy * dy) as f64).sqrt();
                    if (r - e as f64).abs() < 0.75 {
                        px.push((dx, dy));
                    }
                }
            }
        }
    }
    px
}

fn floor_plus_bernoulli(rate: f64, rng: &mut ChaCha8Rng) -> u64 {
    let base = rate.floor();
    let frac = rate - base;
    base as u64 + u64::from(rng.random::<f64>() < frac)
}

/// Generate a deterministic synthetic gesture recording.
///
/// The shape sweeps back and forth along the archetype's axis at millisecond
/// granularity. Pixels newly covered by the shape emit ON events, pixels it
/// leaves emit OFF events, and the whole sensor adds uniform noise at the
/// configured rate. Identical inputs (including seed) give bit-identical
/// streams.
pub fn synth_gesture(
    archetype: &GestureArchetype,
    duration_ms: f64,
    width: u32,
    height: u32,
    seed: u64,
) -> Result<EventStream, EventError> {
    let scale = width.min(height) as i64;
    let half_extent = scale / 4;
    let amplitude = scale / 2 - half_extent - 1;
    if scale < 8 || amplitude < 1 {
        return Err(EventError::ShapeExceedsGeometry);
    }
    if duration_ms <= 0.0 {
        return Err(EventError::InvalidFrameCount(0));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phase = rng.random::<f64>() * std::f64::consts::TAU;
    let mask = shape_pixels(archetype.shape, half_extent);
    let (cx, cy) = (i64::from(width) / 2, i64::from(height) / 2);
    let duration_us = (duration_ms * 1000.0).round() as u64;
    let ticks = duration_ms.ceil() as u64;

    let center_at = |tick: u64| -> (i64, i64) {
        let off = (amplitude as f64 * (archetype.angular_velocity * tick as f64 + phase).sin())
            .round() as i64;
        match archetype.axis {
            MotionAxis::Horizontal => (cx + off, cy),
            MotionAxis::Vertical => (cx, cy + off),
            MotionAxis::Diagonal => (cx + off, cy + off),
        }
    };

    let place = |center: (i64, i64)| -> HashSet<(i64, i64)> {
        mask.iter().map(|&(dx, dy)| (center.0 + dx, center.1 + dy)).collect()
    };

    let mut events = Vec::new();
    let mut prev: HashSet<(i64, i64)> = HashSet::new();
    for tick in 0..ticks {
        let base_us = tick * 1000;
        let now = place(center_at(tick));
        let mut tick_events: Vec<Event> = Vec::new();

        let mut emit = |px: &(i64, i64), polarity: u8, rng: &mut ChaCha8Rng| {
            if px.0 < 0 || px.1 < 0 || px.0 >= i64::from(width) || px.1 >= i64::from(height) {
                return;
            }
            for _ in 0..floor_plus_bernoulli(archetype.event_rate, rng) {
                tick_events.push(Event {
                    t: base_us + rng.random_range(0..1000),
                    x: px.0 as u16,
                    y: px.1 as u16,
                    polarity,
                });
            }
        };

        let mut changed: Vec<(&(i64, i64), u8)> = now
            .iter()
            .filter(|p| !prev.contains(*p))
            .map(|p| (p, 1u8))
            .chain(prev.iter().filter(|p| !now.contains(*p)).map(|p| (p, 0u8)))
            .collect();
        // HashSet iteration order is unspecified; sort for determinism.
        changed.sort();
        for (px, polarity) in changed {
            emit(px, polarity, &mut rng);
        }

        for _ in 0..floor_plus_bernoulli(archetype.noise_rate, rng) {
            tick_events.push(Event {
                t: base_us + rng.random_range(0..1000),
                x: rng.random_range(0..width) as u16,
                y: rng.random_range(0..height) as u16,
                polarity: rng.random_range(0..2u8),
            });
        }

        tick_events.retain(|e| e.t < duration_us.max(1));
        tick_events.sort_by_key(|e| e.t);
        events.extend(tick_events);
        prev = now;
    }

    EventStream::new(
        width,
        height,
        events,
        StreamMeta { user: String::new(), lighting: String::new(), gesture: archetype.id },
    )
}
