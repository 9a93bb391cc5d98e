//! Composite footprints: unions of convex polygon parts and circular discs.
//!
//! Area and centroid of the union are exact (up to floating point): each
//! polygon edge and each disc arc is clipped against every other shape, and
//! the surviving boundary pieces are accumulated with Green's theorem. Discs
//! enter area computations as true circles; only the convex hull (and thus
//! the concavity deficiency) approximates each disc by an inscribed 32-gon.

use super::polygon::{convex_hull, ConvexPolygon};
use super::{GeometryError, Pose2, Vec2, EPS_GEO};

/// Vertex count used when a disc stands in for a polygon (hull computations).
pub const DISC_HULL_SIDES: usize = 32;

/// Interval shorter than this (meters along a boundary) is treated as a
/// measure-zero graze and ignored.
const SLIVER: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub center: Vec2,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Vec2, radius: f64) -> Self {
        Disc { center, radius }
    }

    pub fn contains(self, p: Vec2, tol: f64) -> bool {
        p.distance(self.center) <= self.radius + tol
    }
}

/// Rigid body outline: convex parts plus attached discs, all in a local
/// frame, posed into the world by `pose`.
#[derive(Debug, Clone, PartialEq)]
pub struct Footprint {
    parts: Vec<ConvexPolygon>,
    attached_discs: Vec<Disc>,
    pub pose: Pose2,
}

impl Footprint {
    pub fn new(parts: Vec<ConvexPolygon>, pose: Pose2) -> Result<Self, GeometryError> {
        if parts.is_empty() {
            return Err(GeometryError::InvalidPolygon("footprint needs at least one part"));
        }
        Ok(Footprint {
            parts,
            attached_discs: Vec::new(),
            pose,
        })
    }

    pub fn parts(&self) -> &[ConvexPolygon] {
        &self.parts
    }

    pub fn attached_discs(&self) -> &[Disc] {
        &self.attached_discs
    }

    /// Rigidly attach a disc given in world coordinates; it is stored in the
    /// local frame and follows the pose from then on.
    pub fn attach_disc_world(&mut self, center_world: Vec2, radius: f64) {
        let local = self.pose.inverse_transform(center_world);
        self.attached_discs.push(Disc::new(local, radius));
    }

    /// World-frame view with the pose applied.
    pub fn to_world(&self) -> WorldFootprint {
        WorldFootprint {
            parts: self.parts.iter().map(|p| p.transformed(self.pose)).collect(),
            discs: self
                .attached_discs
                .iter()
                .map(|d| Disc::new(self.pose.transform(d.center), d.radius))
                .collect(),
        }
    }
}

/// Area of the union of all parts and discs, in the world frame.
pub fn footprint_area(f: &Footprint) -> f64 {
    f.to_world().area()
}

/// Convex hull area minus union area: zero for convex outlines, positive
/// when the outline has unfilled cavities.
pub fn concavity_deficiency(f: &Footprint) -> f64 {
    f.to_world().deficiency()
}

/// Closest-boundary query result. `distance` is signed: negative means the
/// query point is inside the footprint by that depth.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryHit {
    pub distance: f64,
    pub point: Vec2,
    pub normal_out: Vec2,
}

/// Footprint flattened into world coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct WorldFootprint {
    pub parts: Vec<ConvexPolygon>,
    pub discs: Vec<Disc>,
}

impl WorldFootprint {
    pub fn empty() -> Self {
        WorldFootprint {
            parts: Vec::new(),
            discs: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty() && self.discs.is_empty()
    }

    /// Closed membership test with tolerance.
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        self.parts.iter().any(|poly| poly.contains(p, tol))
            || self.discs.iter().any(|d| d.contains(p, tol))
    }

    /// Axis-aligned bounds over all parts and disc extremes.
    pub fn bbox(&self) -> Option<super::Aabb> {
        let mut it_pts = self.parts.iter().flat_map(|p| p.vertices().iter().copied());
        let first = it_pts.next().or_else(|| self.discs.first().map(|d| d.center))?;
        let mut bb = super::Aabb::new(first, first);
        for p in self.parts.iter().flat_map(|p| p.vertices().iter().copied()) {
            bb.expand_to(p);
        }
        for d in &self.discs {
            bb.expand_to(d.center + Vec2::new(d.radius, d.radius));
            bb.expand_to(d.center - Vec2::new(d.radius, d.radius));
        }
        Some(bb)
    }

    /// Union area.
    pub fn area(&self) -> f64 {
        self.measures().0
    }

    /// Union area and area centroid.
    pub fn area_and_centroid(&self) -> (f64, Vec2) {
        let (a, mx, my) = self.measures();
        if a.abs() < EPS_GEO {
            return (a, Vec2::ZERO);
        }
        (a, Vec2::new(mx / a, my / a))
    }

    /// Points spanning the outline for hull computations: part vertices plus
    /// an inscribed 32-gon per disc.
    pub fn hull_points(&self) -> Vec<Vec2> {
        let mut pts: Vec<Vec2> = self
            .parts
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .collect();
        for d in &self.discs {
            for k in 0..DISC_HULL_SIDES {
                let a = std::f64::consts::TAU * k as f64 / DISC_HULL_SIDES as f64;
                pts.push(d.center + Vec2::from_angle(a) * d.radius);
            }
        }
        pts
    }

    pub fn hull(&self) -> Result<ConvexPolygon, GeometryError> {
        convex_hull(&self.hull_points())
    }

    /// Convex hull area minus union area, clamped at zero.
    pub fn deficiency(&self) -> f64 {
        let hull_area = match self.hull() {
            Ok(h) => h.area(),
            Err(_) => return 0.0,
        };
        (hull_area - self.area()).max(0.0)
    }

    /// Signed distance from `p` to the union boundary, with the closest
    /// boundary point and its outward normal. Negative distance = inside.
    pub fn closest_boundary(&self, p: Vec2) -> Option<BoundaryHit> {
        if self.is_empty() {
            return None;
        }
        // Inside any shape: report the deepest containment so the caller can
        // push out of it first (and iterate if that lands in a neighbor).
        let mut deepest: Option<BoundaryHit> = None;
        for poly in &self.parts {
            if poly.contains(p, 0.0) {
                let q = poly.closest_boundary_point(p);
                let depth = q.distance(p);
                let n = poly.nearest_edge_outward_normal(p);
                if deepest.as_ref().map_or(true, |h| -depth < h.distance) {
                    deepest = Some(BoundaryHit {
                        distance: -depth,
                        point: q,
                        normal_out: n,
                    });
                }
            }
        }
        for d in &self.discs {
            let dist = p.distance(d.center);
            if dist <= d.radius {
                let n = (p - d.center).normalized().unwrap_or(Vec2::new(1.0, 0.0));
                let depth = d.radius - dist;
                if deepest.as_ref().map_or(true, |h| -depth < h.distance) {
                    deepest = Some(BoundaryHit {
                        distance: -depth,
                        point: d.center + n * d.radius,
                        normal_out: n,
                    });
                }
            }
        }
        if deepest.is_some() {
            return deepest;
        }
        // Outside every shape: the nearest shape boundary is the union boundary.
        let mut best: Option<BoundaryHit> = None;
        for poly in &self.parts {
            let q = poly.closest_boundary_point(p);
            let dist = q.distance(p);
            if best.as_ref().map_or(true, |h| dist < h.distance) {
                let n = (p - q).normalized().unwrap_or(Vec2::new(1.0, 0.0));
                best = Some(BoundaryHit {
                    distance: dist,
                    point: q,
                    normal_out: n,
                });
            }
        }
        for d in &self.discs {
            let to_p = p - d.center;
            let dist = to_p.length() - d.radius;
            if best.as_ref().map_or(true, |h| dist < h.distance) {
                let n = to_p.normalized().unwrap_or(Vec2::new(1.0, 0.0));
                best = Some(BoundaryHit {
                    distance: dist,
                    point: d.center + n * d.radius,
                    normal_out: n,
                });
            }
        }
        best
    }

    /// Farthest boundary crossing along the ray from `origin`, in meters,
    /// if the ray meets the footprint at all. Used to find silhouette points
    /// when sweeping the outline by angle.
    pub fn ray_exit_distance(&self, origin: Vec2, dir: Vec2) -> Option<f64> {
        let dir = dir.normalized()?;
        let big = 1e6;
        let far = origin + dir * big;
        let mut best: Option<f64> = None;
        for poly in &self.parts {
            if let Some((_, t1)) = poly.clip_segment(origin, far, 0.0) {
                let d = t1 * big;
                if d > 0.0 && best.map_or(true, |b| d > b) {
                    best = Some(d);
                }
            }
        }
        for disc in &self.discs {
            let m = origin - disc.center;
            // |m + t dir|^2 = r^2 with |dir| = 1
            let b = m.dot(dir);
            let c = m.length_squared() - disc.radius * disc.radius;
            let disc_q = b * b - c;
            if disc_q >= 0.0 {
                let t = -b + disc_q.sqrt();
                if t > 0.0 && best.map_or(true, |bst| t > bst) {
                    best = Some(t);
                }
            }
        }
        best
    }

    /// Exact (area, integral of x dA, integral of y dA) for the union.
    fn measures(&self) -> (f64, f64, f64) {
        let mut area = 0.0;
        let mut mx = 0.0;
        let mut my = 0.0;

        for (i, poly) in self.parts.iter().enumerate() {
            for edge_idx in 0..poly.len() {
                let seg = poly.edge(edge_idx);
                for (u, v) in self.kept_edge_spans(i, seg) {
                    let p = seg.a + (seg.b - seg.a) * u;
                    let q = seg.a + (seg.b - seg.a) * v;
                    accumulate_segment(p, q, &mut area, &mut mx, &mut my);
                }
            }
        }
        for (k, disc) in self.discs.iter().enumerate() {
            for (t0, t1) in self.kept_arc_spans(k, disc) {
                accumulate_arc(disc.center, disc.radius, t0, t1, &mut area, &mut mx, &mut my);
            }
        }
        (area, mx, my)
    }

    /// Sub-intervals of edge `seg` (owned by part `own`) that lie on the
    /// union boundary, as parameter spans in [0, 1].
    fn kept_edge_spans(&self, own: usize, seg: super::Segment) -> Vec<(f64, f64)> {
        let len = seg.length();
        if len < SLIVER {
            return Vec::new();
        }
        let dir = (seg.b - seg.a) * (1.0 / len);
        let mut blocked: Vec<(f64, f64)> = Vec::new();

        for (j, other) in self.parts.iter().enumerate() {
            if j == own {
                continue;
            }
            let Some((t0, t1)) = other.clip_segment(seg.a, seg.b, EPS_GEO) else {
                continue;
            };
            let (t0, t1) = (t0.max(0.0), t1.min(1.0));
            if (t1 - t0) * len <= SLIVER {
                continue;
            }
            let mid = seg.a + (seg.b - seg.a) * (0.5 * (t0 + t1));
            if other.contains_strict(mid, EPS_GEO) {
                blocked.push((t0, t1));
                continue;
            }
            // The overlap rides along the other part's boundary. A seam
            // between parts facing opposite ways is interior to the union;
            // two boundaries running the same way must be counted once.
            if let Some(align) = collinear_edge_direction(other, mid, dir) {
                if align < 0.0 || j < own {
                    blocked.push((t0, t1));
                }
            }
            // Otherwise: a grazing touch at a vertex; measure zero, keep.
        }
        for disc in &self.discs {
            if let Some((t0, t1)) = segment_inside_circle(seg.a, seg.b, disc) {
                if (t1 - t0) * len > SLIVER {
                    blocked.push((t0, t1));
                }
            }
        }
        complement_spans(blocked, 0.0, 1.0, SLIVER / len)
    }

    /// Arc spans (radians, within [0, 2pi]) of disc `own` on the union boundary.
    fn kept_arc_spans(&self, own: usize, disc: &Disc) -> Vec<(f64, f64)> {
        let tau = std::f64::consts::TAU;
        let mut blocked: Vec<(f64, f64)> = Vec::new();

        for poly in &self.parts {
            match circle_spans_inside_polygon(disc, poly) {
                CircleCover::None => {}
                CircleCover::Full => return Vec::new(),
                CircleCover::Arcs(spans) => blocked.extend(spans),
            }
        }
        for (j, other) in self.discs.iter().enumerate() {
            if j == own {
                continue;
            }
            let d = disc.center.distance(other.center);
            if d < EPS_GEO && (disc.radius - other.radius).abs() < EPS_GEO {
                // Coincident duplicates: keep only the first copy.
                if j < own {
                    return Vec::new();
                }
                continue;
            }
            if d >= disc.radius + other.radius - EPS_GEO {
                continue; // disjoint or tangent
            }
            if d + disc.radius <= other.radius {
                return Vec::new(); // fully swallowed
            }
            if d + other.radius <= disc.radius {
                continue; // other is inside us; our boundary unaffected
            }
            let cos_half = (d * d + disc.radius * disc.radius - other.radius * other.radius)
                / (2.0 * d * disc.radius);
            let half = cos_half.clamp(-1.0, 1.0).acos();
            let mid = (other.center - disc.center).angle();
            blocked.push((mid - half, mid + half));
        }

        // Normalize wrapped spans into [0, tau].
        let mut norm: Vec<(f64, f64)> = Vec::new();
        for (s, e) in blocked {
            let w = (e - s).clamp(0.0, tau);
            if w <= SLIVER / disc.radius.max(SLIVER) {
                continue;
            }
            let s0 = s.rem_euclid(tau);
            if s0 + w <= tau {
                norm.push((s0, s0 + w));
            } else {
                norm.push((s0, tau));
                norm.push((0.0, s0 + w - tau));
            }
        }
        complement_spans(norm, 0.0, tau, SLIVER / disc.radius.max(SLIVER))
    }
}

/// Green's theorem contribution of the straight piece p -> q.
fn accumulate_segment(p: Vec2, q: Vec2, area: &mut f64, mx: &mut f64, my: &mut f64) {
    *area += 0.5 * p.cross(q);
    let dy = q.y - p.y;
    let dx = q.x - p.x;
    *mx += dy * (p.x * p.x + p.x * q.x + q.x * q.x) / 6.0;
    *my -= dx * (p.y * p.y + p.y * q.y + q.y * q.y) / 6.0;
}

/// Green's theorem contribution of the CCW arc t in [t0, t1] on circle (c, r).
fn accumulate_arc(c: Vec2, r: f64, t0: f64, t1: f64, area: &mut f64, mx: &mut f64, my: &mut f64) {
    let (s0, c0) = t0.sin_cos();
    let (s1, c1) = t1.sin_cos();
    let dt = t1 - t0;
    *area += 0.5 * (r * r * dt + c.x * r * (s1 - s0) - c.y * r * (c1 - c0));

    // integral of cos = sin; cos^2 = t/2 + sin(2t)/4; cos^3 = sin - sin^3/3
    let i1c = s1 - s0;
    let i2c = dt / 2.0 + ((2.0 * t1).sin() - (2.0 * t0).sin()) / 4.0;
    let i3c = (s1 - s1 * s1 * s1 / 3.0) - (s0 - s0 * s0 * s0 / 3.0);
    *mx += 0.5 * r * (c.x * c.x * i1c + 2.0 * c.x * r * i2c + r * r * i3c);

    // integral of sin = -cos; sin^2 = t/2 - sin(2t)/4; sin^3 = -cos + cos^3/3
    let i1s = c0 - c1;
    let i2s = dt / 2.0 - ((2.0 * t1).sin() - (2.0 * t0).sin()) / 4.0;
    let i3s = (-c1 + c1 * c1 * c1 / 3.0) - (-c0 + c0 * c0 * c0 / 3.0);
    *my += 0.5 * r * (c.y * c.y * i1s + 2.0 * c.y * r * i2s + r * r * i3s);
}

/// If `poly` has an edge through `point` collinear with `dir`, returns the
/// dot product of the two directions (sign = same/opposite way).
fn collinear_edge_direction(poly: &ConvexPolygon, point: Vec2, dir: Vec2) -> Option<f64> {
    for e in poly.edges() {
        let elen = e.length();
        if elen < SLIVER {
            continue;
        }
        let edir = (e.b - e.a) * (1.0 / elen);
        if dir.cross(edir).abs() > 1e-7 {
            continue;
        }
        if e.distance_to(point) <= 1e-7 {
            return Some(dir.dot(edir));
        }
    }
    None
}

/// Parameter span of segment a->b strictly covered by the disc, if any.
fn segment_inside_circle(a: Vec2, b: Vec2, disc: &Disc) -> Option<(f64, f64)> {
    let d = b - a;
    let m = a - disc.center;
    let aa = d.length_squared();
    if aa < SLIVER * SLIVER {
        return None;
    }
    let bb = 2.0 * m.dot(d);
    let cc = m.length_squared() - disc.radius * disc.radius;
    let disc_q = bb * bb - 4.0 * aa * cc;
    if disc_q <= 0.0 {
        return None;
    }
    let sq = disc_q.sqrt();
    let t0 = ((-bb - sq) / (2.0 * aa)).max(0.0);
    let t1 = ((-bb + sq) / (2.0 * aa)).min(1.0);
    if t1 > t0 {
        Some((t0, t1))
    } else {
        None
    }
}

enum CircleCover {
    None,
    Full,
    Arcs(Vec<(f64, f64)>),
}

/// Angular spans of the circle's boundary lying inside the closed polygon.
fn circle_spans_inside_polygon(disc: &Disc, poly: &ConvexPolygon) -> CircleCover {
    let mut cuts: Vec<f64> = Vec::new();
    for e in poly.edges() {
        // Circle vs segment: |a + s(b-a) - c| = r, s in [0, 1].
        let d = e.b - e.a;
        let m = e.a - disc.center;
        let aa = d.length_squared();
        if aa < SLIVER * SLIVER {
            continue;
        }
        let bb = 2.0 * m.dot(d);
        let cc = m.length_squared() - disc.radius * disc.radius;
        let q = bb * bb - 4.0 * aa * cc;
        if q <= 0.0 {
            continue;
        }
        let sq = q.sqrt();
        for s in [(-bb - sq) / (2.0 * aa), (-bb + sq) / (2.0 * aa)] {
            if (-EPS_GEO..=1.0 + EPS_GEO).contains(&s) {
                let p = e.a + d * s;
                cuts.push((p - disc.center).angle());
            }
        }
    }
    if cuts.is_empty() {
        // No boundary crossings: the circle is wholly inside or wholly outside.
        let probe = disc.center + Vec2::new(disc.radius, 0.0);
        if poly.contains(probe, EPS_GEO) {
            return CircleCover::Full;
        }
        return CircleCover::None;
    }
    let tau = std::f64::consts::TAU;
    let mut angles: Vec<f64> = cuts.iter().map(|a| a.rem_euclid(tau)).collect();
    angles.sort_by(|x, y| x.partial_cmp(y).unwrap());
    angles.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
    let mut spans = Vec::new();
    let n = angles.len();
    for i in 0..n {
        let s = angles[i];
        let e = if i + 1 < n { angles[i + 1] } else { angles[0] + tau };
        if e - s <= 1e-12 {
            continue;
        }
        let mid_angle = (s + e) / 2.0;
        let mid = disc.center + Vec2::from_angle(mid_angle) * disc.radius;
        if poly.contains(mid, EPS_GEO) {
            spans.push((s, e));
        }
    }
    if spans.is_empty() {
        CircleCover::None
    } else {
        CircleCover::Arcs(spans)
    }
}

/// Merge `blocked` spans and return the complement within [lo, hi],
/// dropping pieces shorter than `min_len` (in parameter units).
fn complement_spans(mut blocked: Vec<(f64, f64)>, lo: f64, hi: f64, min_len: f64) -> Vec<(f64, f64)> {
    blocked.retain(|(s, e)| e > s);
    blocked.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut kept = Vec::new();
    let mut cursor = lo;
    for (s, e) in blocked {
        let s = s.clamp(lo, hi);
        let e = e.clamp(lo, hi);
        if s > cursor + min_len {
            kept.push((cursor, s));
        }
        cursor = cursor.max(e);
    }
    if hi > cursor + min_len {
        kept.push((cursor, hi));
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn world(parts: Vec<ConvexPolygon>, discs: Vec<Disc>) -> WorldFootprint {
        WorldFootprint { parts, discs }
    }

    /// U outline: 1.0 x 1.0 outer bounds, 0.2 thick walls, opening at +y.
    fn u_parts() -> Vec<ConvexPolygon> {
        vec![
            ConvexPolygon::rect(-0.5, -0.5, 0.5, -0.3).unwrap(),
            ConvexPolygon::rect(-0.5, -0.3, -0.3, 0.5).unwrap(),
            ConvexPolygon::rect(0.3, -0.3, 0.5, 0.5).unwrap(),
        ]
    }

    #[test]
    fn disjoint_squares_sum() {
        let f = world(
            vec![
                ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap(),
                ConvexPolygon::rect(2.0, 0.0, 3.0, 1.0).unwrap(),
            ],
            vec![],
        );
        assert!((f.area() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn overlapping_squares_union() {
        // Two unit squares overlapping by 0.5 in x: union area 1.5 exactly.
        let f = world(
            vec![
                ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap(),
                ConvexPolygon::rect(0.5, 0.0, 1.5, 1.0).unwrap(),
            ],
            vec![],
        );
        assert!((f.area() - 1.5).abs() < 1e-9, "got {}", f.area());
    }

    #[test]
    fn contained_square_ignored() {
        let f = world(
            vec![
                ConvexPolygon::rect(0.0, 0.0, 2.0, 2.0).unwrap(),
                ConvexPolygon::rect(0.5, 0.5, 1.0, 1.0).unwrap(),
            ],
            vec![],
        );
        assert!((f.area() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn shared_edge_parts_do_not_double_count() {
        let f = world(
            vec![
                ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap(),
                ConvexPolygon::rect(1.0, 0.0, 2.0, 1.0).unwrap(),
            ],
            vec![],
        );
        assert!((f.area() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn collinear_same_direction_boundaries_counted_once() {
        // Same top and bottom lines; boundary pieces must not double-count.
        let f = world(
            vec![
                ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap(),
                ConvexPolygon::rect(0.5, 0.0, 1.5, 1.0).unwrap(),
                ConvexPolygon::rect(1.2, 0.0, 2.5, 1.0).unwrap(),
            ],
            vec![],
        );
        assert!((f.area() - 2.5).abs() < 1e-9, "got {}", f.area());
    }

    #[test]
    fn u_outline_area_and_deficiency() {
        let f = world(u_parts(), vec![]);
        assert!((f.area() - 0.52).abs() < 1e-12);
        let hull = f.hull().unwrap();
        assert!((hull.area() - 1.0).abs() < 1e-12);
        assert!((f.deficiency() - 0.48).abs() < 1e-12);
    }

    #[test]
    fn u_with_disc_in_cavity() {
        // A disc fully inside the cavity subtracts exactly its own area
        // from the deficiency.
        let f = world(u_parts(), vec![Disc::new(Vec2::new(0.0, 0.0), 0.1)]);
        let expected = 0.48 - PI * 0.01;
        assert!(
            (f.deficiency() - expected).abs() < 1e-9,
            "deficiency {} vs {}",
            f.deficiency(),
            expected
        );
    }

    #[test]
    fn disc_straddling_square_edge() {
        // Disc centered on the right edge: union gains exactly half a disc.
        let f = world(
            vec![ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap()],
            vec![Disc::new(Vec2::new(1.0, 0.5), 0.1)],
        );
        assert!((f.area() - (1.0 + PI * 0.01 / 2.0)).abs() < 1e-9, "got {}", f.area());
    }

    #[test]
    fn disc_swallowed_by_square() {
        let f = world(
            vec![ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap()],
            vec![Disc::new(Vec2::new(0.5, 0.5), 0.1)],
        );
        assert!((f.area() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn overlapping_discs_lens_subtracted() {
        // Two unit-radius discs at distance 1: union = 2*pi - 2 lens.
        // lens = 2 r^2 acos(d/2r) - (d/2) sqrt(4r^2 - d^2)
        let f = world(
            vec![ConvexPolygon::rect(10.0, 10.0, 11.0, 11.0).unwrap()],
            vec![
                Disc::new(Vec2::new(0.0, 0.0), 1.0),
                Disc::new(Vec2::new(1.0, 0.0), 1.0),
            ],
        );
        let lens = 2.0 * (0.5_f64).acos() - 0.5 * (4.0_f64 - 1.0).sqrt();
        let expected = 1.0 + 2.0 * PI - lens;
        assert!((f.area() - expected).abs() < 1e-9, "got {} vs {}", f.area(), expected);
    }

    #[test]
    fn tangent_disc_adds_full_area() {
        // Disc resting exactly on the square's edge from outside.
        let f = world(
            vec![ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap()],
            vec![Disc::new(Vec2::new(0.5, 1.1), 0.1)],
        );
        assert!((f.area() - (1.0 + PI * 0.01)).abs() < 1e-9);
    }

    #[test]
    fn centroid_of_symmetric_union() {
        let f = world(
            vec![
                ConvexPolygon::rect(-1.0, -0.5, 0.0, 0.5).unwrap(),
                ConvexPolygon::rect(0.0, -0.5, 1.0, 0.5).unwrap(),
            ],
            vec![],
        );
        let (a, c) = f.area_and_centroid();
        assert!((a - 2.0).abs() < 1e-12);
        assert!(c.length() < 1e-12);
    }

    #[test]
    fn centroid_of_u_is_below_center() {
        let (a, c) = world(u_parts(), vec![]).area_and_centroid();
        assert!((a - 0.52).abs() < 1e-12);
        assert!(c.x.abs() < 1e-12);
        // base (0.2 m^2 at y=-0.4) outweighs the bars (0.32 m^2 at y=+0.1)
        let expected_y = (0.2 * -0.4 + 0.32 * 0.1) / 0.52;
        assert!((c.y - expected_y).abs() < 1e-12);
    }

    #[test]
    fn deficiency_zero_for_convex() {
        let f = world(vec![ConvexPolygon::rect(0.0, 0.0, 1.0, 0.6).unwrap()], vec![]);
        assert!(f.deficiency().abs() < 1e-12);
    }

    #[test]
    fn deficiency_drops_by_disc_area_when_disc_added_inside_hull() {
        let base = world(u_parts(), vec![]);
        let with = world(u_parts(), vec![Disc::new(Vec2::new(-0.1, 0.1), 0.05)]);
        let drop = base.deficiency() - with.deficiency();
        assert!((drop - PI * 0.0025).abs() < 1e-9);
    }

    #[test]
    fn closest_boundary_outside_square() {
        let f = world(vec![ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap()], vec![]);
        let hit = f.closest_boundary(Vec2::new(1.5, 0.5)).unwrap();
        assert!((hit.distance - 0.5).abs() < 1e-12);
        assert!(hit.point.distance(Vec2::new(1.0, 0.5)) < 1e-12);
        assert!(hit.normal_out.distance(Vec2::new(1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn closest_boundary_inside_is_negative() {
        let f = world(vec![ConvexPolygon::rect(0.0, 0.0, 1.0, 1.0).unwrap()], vec![]);
        let hit = f.closest_boundary(Vec2::new(0.9, 0.5)).unwrap();
        assert!((hit.distance + 0.1).abs() < 1e-12);
        assert!(hit.normal_out.distance(Vec2::new(1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn ray_exit_takes_outermost_crossing() {
        let f = world(u_parts(), vec![]);
        // From the cavity center, looking -y: crosses the base and exits at -0.5.
        let d = f.ray_exit_distance(Vec2::new(0.0, 0.0), Vec2::new(0.0, -1.0)).unwrap();
        assert!((d - 0.5).abs() < 1e-9);
        // Looking +y through the open mouth: nothing to cross.
        assert!(f.ray_exit_distance(Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0)).is_none());
    }

    #[test]
    fn world_footprint_follows_pose() {
        let mut fp = Footprint::new(u_parts(), Pose2::IDENTITY).unwrap();
        fp.attach_disc_world(Vec2::new(0.0, -0.2), 0.05);
        fp.pose = Pose2::new(2.0, 1.0, PI / 2.0);
        let w = fp.to_world();
        // Area is rigid-invariant.
        assert!((w.area() - (0.52 + PI * 0.0025)).abs() < 1e-9);
        // The attached disc rotated with the body.
        assert!(w.discs[0].center.distance(Vec2::new(2.2, 1.0)) < 1e-9);
    }
}
