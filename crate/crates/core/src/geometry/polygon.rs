//! Strictly convex polygons and convex hulls.

use super::{GeometryError, Segment, Vec2, EPS_GEO};

/// Convex polygon with counter-clockwise vertices and strictly convex corners.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon {
    /// Validates vertex count, finiteness, winding, and strict convexity.
    pub fn new(vertices: Vec<Vec2>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::InvalidPolygon("fewer than three vertices"));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::InvalidPolygon("non-finite vertex"));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).cross(c - b) <= EPS_GEO {
                return Err(GeometryError::InvalidPolygon(
                    "vertices must turn strictly left (CCW, no collinear runs)",
                ));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Axis-aligned rectangle spanning [x0,x1] x [y0,y1].
    pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self, GeometryError> {
        ConvexPolygon::new(vec![
            Vec2::new(x0, y0),
            Vec2::new(x1, y0),
            Vec2::new(x1, y1),
            Vec2::new(x0, y1),
        ])
    }

    /// Regular n-gon inscribed in the circle (center, radius), first vertex at `phase`.
    pub fn regular(center: Vec2, radius: f64, sides: usize, phase: f64) -> Result<Self, GeometryError> {
        if sides < 3 || radius <= 0.0 {
            return Err(GeometryError::InvalidPolygon("regular polygon needs >= 3 sides and positive radius"));
        }
        let verts = (0..sides)
            .map(|k| {
                let a = phase + std::f64::consts::TAU * k as f64 / sides as f64;
                center + Vec2::from_angle(a) * radius
            })
            .collect();
        ConvexPolygon::new(verts)
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edge(&self, i: usize) -> Segment {
        let n = self.vertices.len();
        Segment::new(self.vertices[i], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    /// Shoelace area; positive because vertices are CCW.
    pub fn area(&self) -> f64 {
        let mut twice = 0.0;
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            twice += a.cross(b);
        }
        twice / 2.0
    }

    pub fn centroid(&self) -> Vec2 {
        let mut twice_area = 0.0;
        let mut acc = Vec2::ZERO;
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let w = a.cross(b);
            twice_area += w;
            acc += (a + b) * w;
        }
        acc * (1.0 / (3.0 * twice_area))
    }

    /// Closed containment test with tolerance `tol` (points within `tol`
    /// outside an edge still count).
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (b - a).cross(p - a) < -tol * (b - a).length() {
                return false;
            }
        }
        true
    }

    /// Strict interior test: margin of at least `tol` inside every edge.
    pub fn contains_strict(&self, p: Vec2, tol: f64) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (b - a).cross(p - a) <= tol * (b - a).length() {
                return false;
            }
        }
        true
    }

    /// Parameter interval [t0, t1] of `a + t (b - a)` inside the closed
    /// polygon, or None when the line segment misses it entirely.
    /// Grazing contact along an edge yields a (possibly degenerate) interval;
    /// `tol` only widens the accepted band around parallel edges, so
    /// transverse crossings stay exact.
    pub fn clip_segment(&self, a: Vec2, b: Vec2, tol: f64) -> Option<(f64, f64)> {
        let d = b - a;
        let mut t0 = 0.0_f64;
        let mut t1 = 1.0_f64;
        let n = self.vertices.len();
        for i in 0..n {
            let va = self.vertices[i];
            let vb = self.vertices[(i + 1) % n];
            let e = vb - va;
            let scale = e.length();
            // Signed distance from the edge line grows along `num + t * den`.
            let num = e.cross(a - va);
            let den = e.cross(d);
            if den.abs() < EPS_GEO * scale {
                if num < -tol * scale {
                    return None; // parallel and outside
                }
                continue;
            }
            let t = -num / den;
            if den > 0.0 {
                t0 = t0.max(t);
            } else {
                t1 = t1.min(t);
            }
            if t0 > t1 {
                return None;
            }
        }
        Some((t0, t1))
    }

    /// The x-extent of the polygon sliced at height `y`, if the slice is non-empty.
    pub fn x_interval_at(&self, y: f64) -> Option<(f64, f64)> {
        let n = self.vertices.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (a.y - y) * (b.y - y) <= 0.0 {
                if (a.y - b.y).abs() < EPS_GEO {
                    lo = lo.min(a.x.min(b.x));
                    hi = hi.max(a.x.max(b.x));
                } else {
                    let x = a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
                    lo = lo.min(x);
                    hi = hi.max(x);
                }
            }
        }
        if lo <= hi {
            Some((lo, hi))
        } else {
            None
        }
    }

    /// Closest point on the polygon boundary to `p`.
    pub fn closest_boundary_point(&self, p: Vec2) -> Vec2 {
        let mut best = self.vertices[0];
        let mut best_d2 = f64::INFINITY;
        for e in self.edges() {
            let q = e.closest_point(p);
            let d2 = (q - p).length_squared();
            if d2 < best_d2 {
                best_d2 = d2;
                best = q;
            }
        }
        best
    }

    /// Outward unit normal of the edge whose closest point to `p` is nearest.
    pub fn nearest_edge_outward_normal(&self, p: Vec2) -> Vec2 {
        let mut best = Vec2::new(1.0, 0.0);
        let mut best_d2 = f64::INFINITY;
        for e in self.edges() {
            let q = e.closest_point(p);
            let d2 = (q - p).length_squared();
            if d2 < best_d2 {
                best_d2 = d2;
                // CCW winding: interior is left of each edge, so outward is -perp.
                best = -(e.b - e.a).perp().normalized().unwrap_or(Vec2::new(1.0, 0.0));
            }
        }
        best
    }

    pub fn transformed(&self, pose: super::Pose2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| pose.transform(*v)).collect(),
        }
    }
}

/// Convex hull of a point set (monotone chain), CCW with collinear points dropped.
pub fn convex_hull(points: &[Vec2]) -> Result<ConvexPolygon, GeometryError> {
    let mut pts: Vec<Vec2> = points.iter().copied().filter(|p| p.is_finite()).collect();
    if pts.len() < 3 {
        return Err(GeometryError::DegenerateHull);
    }
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.distance(*b) < EPS_GEO);
    if pts.len() < 3 {
        return Err(GeometryError::DegenerateHull);
    }

    let mut lower: Vec<Vec2> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            if (b - a).cross(p - a) <= EPS_GEO {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<Vec2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            if (b - a).cross(p - a) <= EPS_GEO {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexPolygon::new(lower).map_err(|_| GeometryError::DegenerateHull)
}
