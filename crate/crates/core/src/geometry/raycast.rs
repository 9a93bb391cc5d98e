//! Ray casting against the mixed obstacle set (object footprint, arena
//! walls, other robots) and line-of-sight occlusion tests.

use super::footprint::{Disc, WorldFootprint};
use super::{Segment, Vec2};

/// Everything a proximity ray can hit. Borrowed views; build one per query
/// from whatever is relevant to the querying robot.
#[derive(Debug, Clone, Copy, Default)]
pub struct Obstacles<'a> {
    pub footprint: Option<&'a WorldFootprint>,
    pub segments: &'a [Segment],
    pub discs: &'a [Disc],
}

/// First hit along the ray from `origin`, in meters, if it lies within
/// `max_range`. `dir` need not be unit length. An origin already touching
/// or inside an obstacle reads as distance zero.
pub fn ray_cast(origin: Vec2, dir: Vec2, max_range: f64, obstacles: &Obstacles) -> Option<f64> {
    let dir = dir.normalized()?;
    let mut best: Option<f64> = None;
    let mut consider = |t: f64| {
        if t <= max_range && best.map_or(true, |b| t < b) {
            best = Some(t);
        }
    };

    for seg in obstacles.segments {
        if let Some(t) = ray_segment(origin, dir, seg) {
            consider(t);
        }
    }
    for disc in obstacles.discs {
        if let Some(t) = ray_disc(origin, dir, disc) {
            consider(t);
        }
    }
    if let Some(fp) = obstacles.footprint {
        let far = origin + dir * max_range;
        for poly in &fp.parts {
            if let Some((t0, _)) = poly.clip_segment(origin, far, 0.0) {
                consider(t0.max(0.0) * max_range);
            }
        }
        for disc in &fp.discs {
            if let Some(t) = ray_disc(origin, dir, disc) {
                consider(t);
            }
        }
    }
    best
}

/// True when the footprint blocks the open segment strictly between the two
/// points. Grazing contact anywhere between them counts as blocked; contact
/// only at an endpoint does not.
pub fn segment_occluded(from: Vec2, to: Vec2, footprint: &WorldFootprint) -> bool {
    const OPEN: f64 = 1e-12;
    for poly in &footprint.parts {
        if let Some((t0, t1)) = poly.clip_segment(from, to, 0.0) {
            if t1 > OPEN && t0 < 1.0 - OPEN {
                return true;
            }
        }
    }
    for disc in &footprint.discs {
        if let Some((t0, t1)) = segment_circle_overlap(from, to, disc) {
            if t1 > OPEN && t0 < 1.0 - OPEN {
                return true;
            }
        }
    }
    false
}

/// Distance to the segment along a unit-direction ray, if they meet.
fn ray_segment(origin: Vec2, dir: Vec2, seg: &Segment) -> Option<f64> {
    let e = seg.b - seg.a;
    let denom = dir.cross(e);
    if denom.abs() < 1e-12 {
        return None; // parallel; a collinear graze is measure zero
    }
    let w = seg.a - origin;
    let t = w.cross(e) / denom;
    let s = w.cross(dir) / denom;
    if t >= 0.0 && (-1e-12..=1.0 + 1e-12).contains(&s) {
        Some(t)
    } else {
        None
    }
}

/// Distance to the disc rim along a unit-direction ray; zero if the origin
/// is already inside.
fn ray_disc(origin: Vec2, dir: Vec2, disc: &Disc) -> Option<f64> {
    let m = origin - disc.center;
    let b = m.dot(dir);
    let c = m.length_squared() - disc.radius * disc.radius;
    if c <= 0.0 {
        return Some(0.0);
    }
    let q = b * b - c;
    if q < 0.0 {
        return None;
    }
    let t = -b - q.sqrt();
    if t >= 0.0 {
        Some(t)
    } else {
        None
    }
}

/// Closed parameter interval of the segment a->b lying within the disc,
/// clamped to [0, 1]. Tangency yields a degenerate interval.
fn segment_circle_overlap(a: Vec2, b: Vec2, disc: &Disc) -> Option<(f64, f64)> {
    let d = b - a;
    let m = a - disc.center;
    let aa = d.length_squared();
    if aa < 1e-24 {
        return None;
    }
    let bb = 2.0 * m.dot(d);
    let cc = m.length_squared() - disc.radius * disc.radius;
    let q = bb * bb - 4.0 * aa * cc;
    if q < 0.0 {
        return None;
    }
    let sq = q.sqrt();
    let t0 = ((-bb - sq) / (2.0 * aa)).max(0.0);
    let t1 = ((-bb + sq) / (2.0 * aa)).min(1.0);
    if t1 >= t0 {
        Some((t0, t1))
    } else {
        None
    }
}
