//! Robot-local sensing: a ring of proximity rays cast outward from the body
//! rim, and bearing sensors for the goal light and the object beacon.
//!
//! Everything here is pure: callers assemble the obstacle view and pass it
//! in, and any sensor noise is injected explicitly.

use crate::geometry::{ray_cast, segment_occluded, wrap_angle, Obstacles, Pose2, Vec2, WorldFootprint};

/// Evenly spaced ring of proximity sensors. Sensor 0 points along the
/// robot's heading; indices increase counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensorRig {
    count: usize,
    max_range: f64,
}

impl SensorRig {
    pub fn new(count: usize, max_range: f64) -> Self {
        assert!(count >= 2, "a proximity ring needs at least two sensors");
        assert!(max_range > 0.0, "max_range must be positive");
        SensorRig { count, max_range }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn max_range(&self) -> f64 {
        self.max_range
    }

    /// Bearing of sensor `i` relative to the robot's heading.
    pub fn relative_bearing(&self, i: usize) -> f64 {
        wrap_angle(std::f64::consts::TAU * i as f64 / self.count as f64)
    }

    /// Cast all rays from the rim of a robot with the given pose and body
    /// radius. Readings are distances from the rim, `None` beyond range.
    pub fn scan(&self, pose: Pose2, body_radius: f64, obstacles: &Obstacles) -> ProximityScan {
        let readings = (0..self.count)
            .map(|i| {
                let dir = Vec2::from_angle(pose.heading + self.relative_bearing(i));
                let origin = pose.position + dir * body_radius;
                ray_cast(origin, dir, self.max_range, obstacles)
            })
            .collect();
        ProximityScan {
            readings,
            count: self.count,
        }
    }
}

/// One sweep of the proximity ring.
#[derive(Debug, Clone, PartialEq)]
pub struct ProximityScan {
    readings: Vec<Option<f64>>,
    count: usize,
}

impl ProximityScan {
    pub fn from_readings(readings: Vec<Option<f64>>) -> Self {
        let count = readings.len();
        ProximityScan { readings, count }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn reading(&self, i: usize) -> Option<f64> {
        self.readings[i]
    }

    pub fn readings(&self) -> &[Option<f64>] {
        &self.readings
    }

    /// Bearing of sensor `i` relative to the robot's heading.
    pub fn relative_bearing(&self, i: usize) -> f64 {
        wrap_angle(std::f64::consts::TAU * i as f64 / self.count as f64)
    }

    pub fn active(&self, i: usize, threshold: f64) -> bool {
        self.readings[i].is_some_and(|d| d <= threshold)
    }

    /// How many sensors read at or below `threshold`.
    pub fn active_count(&self, threshold: f64) -> usize {
        (0..self.count).filter(|&i| self.active(i, threshold)).count()
    }

    /// Smallest reading among sensors whose relative bearing satisfies
    /// `pred`, together with that bearing.
    pub fn min_where(&self, pred: impl Fn(f64) -> bool) -> Option<(f64, f64)> {
        let mut best: Option<(f64, f64)> = None;
        for i in 0..self.count {
            let b = self.relative_bearing(i);
            if !pred(b) {
                continue;
            }
            if let Some(d) = self.readings[i] {
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, b));
                }
            }
        }
        best
    }

    /// Angular span of the largest contiguous run of active sensors,
    /// treating the ring as circular: a full ring spans the whole circle,
    /// `k` contiguous sensors span `(k - 1)` sensor spacings.
    pub fn angular_extent(&self, threshold: f64) -> f64 {
        let tau = std::f64::consts::TAU;
        let n = self.count;
        let active: Vec<bool> = (0..n).map(|i| self.active(i, threshold)).collect();
        if active.iter().all(|&a| a) {
            return tau;
        }
        let mut longest = 0usize;
        let mut run = 0usize;
        // Doubling the ring captures runs that wrap past index 0; runs are
        // capped by the all-active check above.
        for i in 0..2 * n {
            if active[i % n] {
                run += 1;
                longest = longest.max(run.min(n));
            } else {
                run = 0;
            }
        }
        if longest == 0 {
            0.0
        } else {
            (longest - 1) as f64 * tau / n as f64
        }
    }

    /// Add `sample()` to every in-range reading, clamping to `[0, max_range]`.
    pub fn apply_noise(&mut self, max_range: f64, mut sample: impl FnMut() -> f64) {
        for r in &mut self.readings {
            if let Some(d) = r {
                *r = Some((*d + sample()).clamp(0.0, max_range));
            }
        }
    }
}

/// Bearing (robot frame) to the goal light, or `None` when the object
/// footprint blocks the line of sight.
pub fn light_bearing(pose: Pose2, light: Vec2, occluder: &WorldFootprint) -> Option<f64> {
    if segment_occluded(pose.position, light, occluder) {
        return None;
    }
    Some(wrap_angle((light - pose.position).angle() - pose.heading))
}

/// Bearing (robot frame) to a beacon that is never occluded — it sits above
/// the plane — but only readable within `range`.
pub fn beacon_bearing(pose: Pose2, beacon: Vec2, range: f64) -> Option<f64> {
    if pose.position.distance(beacon) > range {
        return None;
    }
    Some(wrap_angle((beacon - pose.position).angle() - pose.heading))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ConvexPolygon, Segment};
    use std::f64::consts::{PI, TAU};

    fn scan_of(flags: &[bool]) -> ProximityScan {
        ProximityScan::from_readings(flags.iter().map(|&a| if a { Some(0.01) } else { None }).collect())
    }

    #[test]
    fn extent_of_contiguous_runs() {
        let spacing = TAU / 8.0;
        // 5 contiguous of 8 span half the circle.
        let s = scan_of(&[true, true, true, true, true, false, false, false]);
        assert!((s.angular_extent(0.05) - PI).abs() < 1e-12);
        // 4 contiguous.
        let s = scan_of(&[true, true, true, true, false, false, false, false]);
        assert!((s.angular_extent(0.05) - 3.0 * spacing).abs() < 1e-12);
        // A single active sensor has zero extent.
        let s = scan_of(&[false, true, false, false, false, false, false, false]);
        assert_eq!(s.angular_extent(0.05), 0.0);
        // No active sensors.
        let s = scan_of(&[false; 8]);
        assert_eq!(s.angular_extent(0.05), 0.0);
    }

    #[test]
    fn extent_of_full_ring_is_full_circle() {
        let s = scan_of(&[true; 8]);
        assert!((s.angular_extent(0.05) - TAU).abs() < 1e-12);
    }

    #[test]
    fn extent_handles_wraparound_runs() {
        // Active run {6, 7, 0, 1} wraps the index origin.
        let s = scan_of(&[true, true, false, false, false, false, true, true]);
        assert!((s.angular_extent(0.05) - 3.0 * TAU / 8.0).abs() < 1e-12);
    }

    #[test]
    fn extent_picks_largest_run() {
        let s = scan_of(&[true, false, true, true, true, false, true, false]);
        assert!((s.angular_extent(0.05) - 2.0 * TAU / 8.0).abs() < 1e-12);
    }

    #[test]
    fn flat_wall_at_standoff_activates_only_the_perpendicular_sensor() {
        // Robot heading +x, wall along y = 0.09: center-to-wall 0.09, so the
        // left sensor reads 0.04 while the diagonals read ~0.077.
        let walls = [Segment::new(Vec2::new(-5.0, 0.09), Vec2::new(5.0, 0.09))];
        let obs = Obstacles {
            segments: &walls,
            ..Default::default()
        };
        let rig = SensorRig::new(8, 0.12);
        let scan = rig.scan(Pose2::new(0.0, 0.0, 0.0), 0.05, &obs);

        let left = scan.reading(2).unwrap();
        assert!((left - 0.04).abs() < 1e-12);
        let diag = scan.reading(1).unwrap();
        assert!((diag - (0.09 / (PI / 4.0).cos() - 0.05)).abs() < 1e-12);
        assert_eq!(scan.active_count(0.06), 1);
    }

    #[test]
    fn inside_corner_activates_four_sensors() {
        // Left wall at standoff 0.04, front wall 0.02 ahead of the rim:
        // front, both front diagonals, and left go active together.
        let walls = [
            Segment::new(Vec2::new(-5.0, 0.09), Vec2::new(5.0, 0.09)),
            Segment::new(Vec2::new(0.07, -5.0), Vec2::new(0.07, 5.0)),
        ];
        let obs = Obstacles {
            segments: &walls,
            ..Default::default()
        };
        let rig = SensorRig::new(8, 0.12);
        let scan = rig.scan(Pose2::new(0.0, 0.0, 0.0), 0.05, &obs);

        assert_eq!(scan.active_count(0.06), 4);
        for i in [0, 1, 2, 7] {
            assert!(scan.active(i, 0.06), "sensor {i} should be active");
        }
    }

    #[test]
    fn deep_corner_activates_five_sensors() {
        // Tighter nesting (0.02 on both sides) also reaches the rear-left diagonal.
        let walls = [
            Segment::new(Vec2::new(-5.0, 0.07), Vec2::new(5.0, 0.07)),
            Segment::new(Vec2::new(0.07, -5.0), Vec2::new(0.07, 5.0)),
        ];
        let obs = Obstacles {
            segments: &walls,
            ..Default::default()
        };
        let rig = SensorRig::new(8, 0.12);
        let scan = rig.scan(Pose2::new(0.0, 0.0, 0.0), 0.05, &obs);

        assert_eq!(scan.active_count(0.06), 5);
        assert!((scan.angular_extent(0.06) - PI).abs() < 1e-12);
    }

    #[test]
    fn rays_start_on_the_rim() {
        // An obstacle 0.10 from the center reads 0.05 from the rim.
        let fp = WorldFootprint {
            parts: vec![ConvexPolygon::rect(0.10, -1.0, 1.0, 1.0).unwrap()],
            discs: vec![],
        };
        let obs = Obstacles {
            footprint: Some(&fp),
            ..Default::default()
        };
        let rig = SensorRig::new(8, 0.12);
        let scan = rig.scan(Pose2::IDENTITY, 0.05, &obs);
        assert!((scan.reading(0).unwrap() - 0.05).abs() < 1e-9);
    }

    #[test]
    fn min_where_selects_by_bearing_window() {
        let mut readings = vec![None; 8];
        readings[1] = Some(0.08); // +45 degrees
        readings[2] = Some(0.03); // +90
        readings[6] = Some(0.01); // -90, outside the left window
        let s = ProximityScan::from_readings(readings);
        let (d, b) = s.min_where(|b| (TAU / 8.0 - 1e-9..=3.0 * TAU / 8.0 + 1e-9).contains(&b)).unwrap();
        assert_eq!(d, 0.03);
        assert!((b - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn light_bearing_occluded_by_footprint() {
        let fp = WorldFootprint {
            parts: vec![ConvexPolygon::rect(-0.5, -0.5, 0.5, 0.5).unwrap()],
            discs: vec![],
        };
        // Robot west of the object, light east of it: blocked.
        assert!(light_bearing(Pose2::new(-1.0, 0.0, 0.0), Vec2::new(2.0, 0.0), &fp).is_none());
        // Same side: visible, dead ahead.
        let b = light_bearing(Pose2::new(1.0, 0.0, 0.0), Vec2::new(2.0, 0.0), &fp).unwrap();
        assert!(b.abs() < 1e-12);
        // Visible, behind the robot.
        let b = light_bearing(Pose2::new(1.0, 0.0, PI / 2.0), Vec2::new(2.0, 0.0), &fp).unwrap();
        assert!((b + PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn beacon_bearing_is_range_gated_but_never_occluded() {
        assert!(beacon_bearing(Pose2::new(4.0, 0.0, 0.0), Vec2::ZERO, 3.0).is_none());
        let b = beacon_bearing(Pose2::new(2.0, 0.0, 0.0), Vec2::ZERO, 3.0).unwrap();
        assert!((b.abs() - PI).abs() < 1e-12);
    }

    #[test]
    fn noise_clamps_to_range() {
        let mut s = ProximityScan::from_readings(vec![Some(0.115), Some(0.003), None]);
        let mut vals = [0.01, -0.01].into_iter();
        s.apply_noise(0.12, move || vals.next().unwrap());
        assert_eq!(s.reading(0), Some(0.12)); // clamped up
        assert!((s.reading(1).unwrap() - 0.0).abs() < 1e-12);
        assert_eq!(s.reading(2), None);
    }
}
