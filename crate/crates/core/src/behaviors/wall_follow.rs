//! Left-hand wall following: keep a surface on the left at a fixed standoff
//! while moving forward, which carries a robot counter-clockwise around
//! whatever it is following.

use super::{Command, ControllerParams};
use crate::geometry::Vec2;
use crate::sensing::ProximityScan;
use std::f64::consts::PI;

/// One tick of left-hand wall following. Returns `None` when neither the
/// front sensor nor any left-side sensor sees anything — the surface is
/// lost and the caller must decide how to reacquire it.
///
/// Control combines two terms: a proportional pull toward the standoff
/// distance, and alignment with the wall tangent estimated from the two
/// most forward left-side hit points. The tangent term damps the approach;
/// with a single hit point only the distance term applies.
pub fn wall_follow_command(scan: &ProximityScan, p: &ControllerParams) -> Option<Command> {
    let front = scan.reading(0);
    if front.is_some_and(|f| f <= p.front_stop) {
        // Blocked ahead: pivot right in place until the surface is on the left.
        return Some(Command {
            linear: 0.0,
            angular: -p.omega_turn,
        });
    }

    // Left-side hits, most forward first: bearings strictly inside (0, pi).
    let mut hits: Vec<(f64, f64)> = Vec::new(); // (bearing, distance)
    for i in 0..scan.len() {
        let b = scan.relative_bearing(i);
        if b > 1e-9 && b < PI - 1e-9 {
            if let Some(d) = scan.reading(i) {
                hits.push((b, d));
            }
        }
    }
    hits.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    if hits.is_empty() {
        // Only the front sees the surface: creep forward while turning right
        // so the surface comes around to the left.
        return front.map(|_| Command {
            linear: 0.4 * p.v_follow,
            angular: -p.omega_turn,
        });
    }

    let nearest = hits.iter().map(|&(_, d)| d).fold(f64::INFINITY, f64::min);
    let mut angular = p.k_wall * (nearest - p.standoff);

    if hits.len() >= 2 {
        // Hit points in the robot frame; rays start on the rim.
        let pt = |(b, d): (f64, f64)| Vec2::from_angle(b) * (p.body_radius + d);
        let tangent = pt(hits[0]) - pt(hits[1]);
        if tangent.length() > 1e-9 {
            angular += p.k_bearing * tangent.angle();
        }
    }

    // Slow down as the front closes in on the stop distance.
    let linear = match front {
        Some(f) if f <= p.detect_threshold => {
            let span = (p.detect_threshold - p.front_stop).max(1e-9);
            p.v_follow * ((f - p.front_stop) / span).clamp(0.2, 1.0)
        }
        _ => p.v_follow,
    };

    Some(Command {
        linear,
        angular: angular.clamp(-p.omega_max, p.omega_max),
    })
}
