//! Planar geometry for the simulator: vectors, poses, convex polygons, and
//! composite footprints (unions of convex parts plus circular discs).
//!
//! All lengths are meters, all angles radians. Headings are kept in the
//! half-open interval (-pi, pi].

mod footprint;
mod polygon;
mod raycast;

pub use footprint::{concavity_deficiency, footprint_area, BoundaryHit, Disc, Footprint, WorldFootprint};
pub use polygon::{convex_hull, ConvexPolygon};
pub use raycast::{ray_cast, segment_occluded, Obstacles};

use serde::{Deserialize, Serialize};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Absolute tolerance for geometric predicates (meters, or meters^2 for areas).
pub const EPS_GEO: f64 = 1e-9;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GeometryError {
    #[error("degenerate hull: need at least three non-collinear points")]
    DegenerateHull,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
}

/// 2D vector / point with finite components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at `angle` radians from the +x axis.
    pub fn from_angle(angle: f64) -> Self {
        Vec2::new(angle.cos(), angle.sin())
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product; positive when `o` is CCW from self.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn length_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn length(self) -> f64 {
        self.length_squared().sqrt()
    }

    pub fn distance(self, o: Vec2) -> f64 {
        (self - o).length()
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    /// Unit vector in the same direction, or None for a (near-)zero vector.
    pub fn normalized(self) -> Option<Vec2> {
        let len = self.length();
        if len < EPS_GEO {
            None
        } else {
            Some(self * (1.0 / len))
        }
    }

    pub fn rotated(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, o: Vec2) {
        *self = *self + o;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Wrap an angle into (-pi, pi].
pub fn wrap_angle(a: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut r = a.rem_euclid(two_pi);
    if r > std::f64::consts::PI {
        r -= two_pi;
    }
    r
}

/// Rigid pose: position plus heading in (-pi, pi].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pose2 {
    pub position: Vec2,
    pub heading: f64,
}

impl Pose2 {
    pub fn new(x: f64, y: f64, heading: f64) -> Self {
        Pose2 {
            position: Vec2::new(x, y),
            heading: wrap_angle(heading),
        }
    }

    pub const IDENTITY: Pose2 = Pose2 {
        position: Vec2::ZERO,
        heading: 0.0,
    };

    /// Map a point from the local frame into the world frame.
    pub fn transform(self, local: Vec2) -> Vec2 {
        self.position + local.rotated(self.heading)
    }

    /// Map a world-frame point back into the local frame.
    pub fn inverse_transform(self, world: Vec2) -> Vec2 {
        (world - self.position).rotated(-self.heading)
    }
}

/// Line segment between two points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Vec2,
    pub b: Vec2,
}

impl Segment {
    pub fn new(a: Vec2, b: Vec2) -> Self {
        Segment { a, b }
    }

    pub fn length(self) -> f64 {
        self.a.distance(self.b)
    }

    /// Closest point on the segment to `p`.
    pub fn closest_point(self, p: Vec2) -> Vec2 {
        let d = self.b - self.a;
        let len2 = d.length_squared();
        if len2 < EPS_GEO * EPS_GEO {
            return self.a;
        }
        let t = ((p - self.a).dot(d) / len2).clamp(0.0, 1.0);
        self.a + d * t
    }

    pub fn distance_to(self, p: Vec2) -> f64 {
        self.closest_point(p).distance(p)
    }
}

/// Axis-aligned box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb {
    pub min: Vec2,
    pub max: Vec2,
}

impl Aabb {
    pub fn new(min: Vec2, max: Vec2) -> Self {
        Aabb { min, max }
    }

    /// Centered box with the given width and height.
    pub fn centered(width: f64, height: f64) -> Self {
        let h = Vec2::new(width / 2.0, height / 2.0);
        Aabb { min: -h, max: h }
    }

    pub fn width(self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn contains(self, p: Vec2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    /// Box shrunk by `margin` on every side.
    pub fn inset(self, margin: f64) -> Aabb {
        Aabb {
            min: self.min + Vec2::new(margin, margin),
            max: self.max - Vec2::new(margin, margin),
        }
    }

    pub fn expand_to(&mut self, p: Vec2) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    /// The four walls as segments, wound counter-clockwise.
    pub fn edges(self) -> [Segment; 4] {
        let a = self.min;
        let b = Vec2::new(self.max.x, self.min.y);
        let c = self.max;
        let d = Vec2::new(self.min.x, self.max.y);
        [
            Segment::new(a, b),
            Segment::new(b, c),
            Segment::new(c, d),
            Segment::new(d, a),
        ]
    }
}
