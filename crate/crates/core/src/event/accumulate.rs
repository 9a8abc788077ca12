//! Event-to-frame accumulation over equal-duration time windows.

use ndarray::Array4;

use super::{EventError, EventStream, FrameMeta, FrameSequence};

/// Accumulate a stream into `frames` equal-duration windows over the span
/// `[t_first, t_last]`. Each event increments cell (window, polarity, y, x).
///
/// Window boundaries are half-open with ties going to the later window; the
/// final boundary is closed so the partition covers the whole span. When all
/// events share one timestamp the span is empty and everything lands in
/// window 0.
pub fn accumulate_frames(stream: &EventStream, frames: usize) -> Result<FrameSequence, EventError> {
    if stream.is_empty() {
        return Err(EventError::EmptyStream);
    }
    if frames == 0 {
        return Err(EventError::InvalidFrameCount(0));
    }

    let t0 = stream.events()[0].t;
    let span = stream.events().last().unwrap().t - t0;
    let (h, w) = (stream.height() as usize, stream.width() as usize);
    let mut values = Array4::<f32>::zeros((frames, 2, h, w));

    for ev in stream.events() {
        let d = ev.t - t0;
        let idx = if span == 0 {
            0
        } else {
            // floor(d * F / span), exact in u128, capped so t_last stays inside.
            let raw = (u128::from(d) * frames as u128) / u128::from(span);
            (raw as usize).min(frames - 1)
        };
        values[[idx, usize::from(ev.polarity), usize::from(ev.y), usize::from(ev.x)]] += 1.0;
    }

    Ok(FrameSequence {
        values,
        meta: FrameMeta {
            user: stream.meta.user.clone(),
            lighting: stream.meta.lighting.clone(),
            labels: vec![stream.meta.gesture],
            boundaries: vec![frames],
        },
    })
}
