//! Bit-exact file formats: EVB1 event binaries, event CSV, FRS1 frame tensors.
//!
//! Neither event format carries recording metadata; readers return default
//! [`StreamMeta`]/[`FrameMeta`] and dataset manifests carry the rest.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use ndarray::Array4;

use super::{Event, EventError, EventStream, FrameMeta, FrameSequence, StreamMeta};

const EVB1_MAGIC: &[u8; 4] = b"EVB1";
const FRS1_MAGIC: &[u8; 4] = b"FRS1";

fn read_exact_or_truncated(r: &mut impl Read, buf: &mut [u8]) -> Result<(), EventError> {
    r.read_exact(buf).map_err(|e| {
        if e.kind() == std::io::ErrorKind::UnexpectedEof {
            EventError::Truncated
        } else {
            EventError::Io(e)
        }
    })
}

fn read_u32(r: &mut impl Read) -> Result<u32, EventError> {
    let mut b = [0u8; 4];
    read_exact_or_truncated(r, &mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64(r: &mut impl Read) -> Result<u64, EventError> {
    let mut b = [0u8; 8];
    read_exact_or_truncated(r, &mut b)?;
    Ok(u64::from_le_bytes(b))
}

/// Write a stream in the EVB1 binary layout: magic, LE u32 width, u32 height,
/// u64 count, then (u64 t, u16 x, u16 y, u8 polarity, u8 pad) per event.
pub fn write_events(stream: &EventStream, path: impl AsRef<Path>) -> Result<(), EventError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(EVB1_MAGIC)?;
    w.write_all(&stream.width().to_le_bytes())?;
    w.write_all(&stream.height().to_le_bytes())?;
    w.write_all(&(stream.len() as u64).to_le_bytes())?;
    for ev in stream.events() {
        w.write_all(&ev.t.to_le_bytes())?;
        w.write_all(&ev.x.to_le_bytes())?;
        w.write_all(&ev.y.to_le_bytes())?;
        w.write_all(&[ev.polarity, 0u8])?;
    }
    w.flush()?;
    Ok(())
}

/// Read an EVB1 file. Timestamp order, coordinate bounds, and polarity values
/// are validated; violations map to the distinct [`EventError`] variants.
pub fn read_events(path: impl AsRef<Path>) -> Result<EventStream, EventError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    read_exact_or_truncated(&mut r, &mut magic)?;
    if &magic != EVB1_MAGIC {
        return Err(EventError::BadMagic);
    }
    let width = read_u32(&mut r)?;
    let height = read_u32(&mut r)?;
    let count = read_u64(&mut r)?;
    let mut events = Vec::with_capacity(count.min(1 << 24) as usize);
    let mut rec = [0u8; 16];
    for _ in 0..count {
        read_exact_or_truncated(&mut r, &mut rec)?;
        events.push(Event {
            t: u64::from_le_bytes(rec[0..8].try_into().unwrap()),
            x: u16::from_le_bytes(rec[8..10].try_into().unwrap()),
            y: u16::from_le_bytes(rec[10..12].try_into().unwrap()),
            polarity: rec[12],
        });
    }
    EventStream::new(width, height, events, StreamMeta::default())
}

/// Write a stream as CSV with header `t,x,y,p`.
pub fn write_events_csv(stream: &EventStream, path: impl AsRef<Path>) -> Result<(), EventError> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "t,x,y,p")?;
    for ev in stream.events() {
        writeln!(w, "{},{},{},{}", ev.t, ev.x, ev.y, ev.polarity)?;
    }
    w.flush()?;
    Ok(())
}

/// Read an event CSV. Geometry is not stored in the format, so it is inferred
/// as the tightest box containing all events unless `geometry` is given.
pub fn read_events_csv(
    path: impl AsRef<Path>,
    geometry: Option<(u32, u32)>,
) -> Result<EventStream, EventError> {
    let mut text = String::new();
    BufReader::new(File::open(path)?).read_to_string(&mut text)?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "t,x,y,p" => {}
        _ => return Err(EventError::BadMagic),
    }
    let mut events = Vec::new();
    for (lineno, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(EventError::Csv {
                line: lineno + 1,
                reason: format!("expected 4 fields, got {}", fields.len()),
            });
        }
        let parse = |s: &str| -> Result<u64, EventError> {
            s.trim().parse::<u64>().map_err(|e| EventError::Csv {
                line: lineno + 1,
                reason: format!("{s:?}: {e}"),
            })
        };
        let (t, x, y, p) = (parse(fields[0])?, parse(fields[1])?, parse(fields[2])?, parse(fields[3])?);
        if p > 1 {
            return Err(EventError::InvalidPolarity { index: events.len(), value: p });
        }
        if x > u64::from(u16::MAX) || y > u64::from(u16::MAX) {
            return Err(EventError::Csv {
                line: lineno + 1,
                reason: "coordinate exceeds u16 range".into(),
            });
        }
        events.push(Event { t, x: x as u16, y: y as u16, polarity: p as u8 });
    }
    let (width, height) = geometry.unwrap_or_else(|| {
        let w = events.iter().map(|e| u32::from(e.x) + 1).max().unwrap_or(1);
        let h = events.iter().map(|e| u32::from(e.y) + 1).max().unwrap_or(1);
        (w, h)
    });
    EventStream::new(width, height, events, StreamMeta::default())
}

/// Write a frame sequence in the FRS1 layout: magic, LE u32 T, C, H, W, then
/// T*C*H*W LE f32 values in `[t][c][h][w]` order.
pub fn write_frames(frames: &FrameSequence, path: impl AsRef<Path>) -> Result<(), EventError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(FRS1_MAGIC)?;
    for dim in frames.values.shape() {
        w.write_all(&(*dim as u32).to_le_bytes())?;
    }
    // Standard-layout ndarray iterates exactly in [t][c][h][w] order.
    for v in frames.values.iter() {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Read an FRS1 file. Metadata is not part of the format.
pub fn read_frames(path: impl AsRef<Path>) -> Result<FrameSequence, EventError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    read_exact_or_truncated(&mut r, &mut magic)?;
    if &magic != FRS1_MAGIC {
        return Err(EventError::BadMagic);
    }
    let t = read_u32(&mut r)? as usize;
    let c = read_u32(&mut r)? as usize;
    let h = read_u32(&mut r)? as usize;
    let w = read_u32(&mut r)? as usize;
    let n = t
        .checked_mul(c)
        .and_then(|v| v.checked_mul(h))
        .and_then(|v| v.checked_mul(w))
        .ok_or(EventError::Truncated)?;
    let mut data = vec![0f32; n];
    let mut b = [0u8; 4];
    for slot in data.iter_mut() {
        read_exact_or_truncated(&mut r, &mut b)?;
        *slot = f32::from_le_bytes(b);
    }
    let values = Array4::from_shape_vec((t, c, h, w), data).expect("shape matches element count");
    Ok(FrameSequence { values, meta: FrameMeta::default() })
}
