//! Cavity-filling controller. Robots roam until the object beacon comes
//! into range, drive to the object, and follow its boundary left-handed.
//! Wherever the surface wraps far enough around the body — at least
//! `attach_count` proximity sensors active at once, which only happens
//! inside a concave pocket — the robot attaches and becomes part of the
//! object. Attached bodies form new pockets, so filling cascades until the
//! cavity is plugged.

use super::{steer_toward, wall_follow_command, Command, ControllerParams, Led};
use crate::sensing::ProximityScan;
use std::f64::consts::TAU;

/// Controller state. Phase budgets live in the variants so the controller
/// itself stays a pure function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FillState {
    /// Rotate in place, waiting for the beacon or the next walk phase.
    Scan { ticks_left: u32 },
    /// Turn for a sampled duration, then drive straight; repeat elsewhere.
    RandomWalk {
        turn_ticks_left: u32,
        forward_ticks_left: u32,
        turn_left: bool,
    },
    /// Beacon in range: head toward the object.
    ApproachObject,
    /// Surface contact: follow the boundary and watch for a pocket.
    WallFollow,
    /// Part of the object now; never moves again.
    Attached,
}

impl FillState {
    pub fn initial(p: &ControllerParams) -> Self {
        FillState::Scan {
            ticks_left: p.random_walk_ticks,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FillState::Scan { .. } => "scan",
            FillState::RandomWalk { .. } => "random_walk",
            FillState::ApproachObject => "approach",
            FillState::WallFollow => "wall_follow",
            FillState::Attached => "attached",
        }
    }
}

/// Per-tick inputs. `walk_sample` is a uniform draw in [0, 1) supplied by
/// the caller; it is consumed only when (re)planning a random-walk phase.
#[derive(Debug)]
pub struct FillObservations<'a> {
    pub scan: &'a ProximityScan,
    /// Bearing to the object beacon, if within range.
    pub beacon: Option<f64>,
    pub walk_sample: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FillOutput {
    pub state: FillState,
    pub command: Command,
    /// Request to become part of the object at the current pose.
    pub attach: bool,
    pub led: Led,
}

fn out(state: FillState, command: Command, attach: bool, led: Led) -> FillOutput {
    FillOutput {
        state,
        command,
        attach,
        led,
    }
}

/// Plan a turn-then-drive walk phase from one uniform sample.
fn walk_plan(sample: f64, p: &ControllerParams) -> FillState {
    let n = p.random_walk_ticks.max(1);
    // Decorrelate duration from direction by spreading the sample.
    let turn_ticks = 1 + ((sample * 997.0) as u32) % n;
    FillState::RandomWalk {
        turn_ticks_left: turn_ticks,
        forward_ticks_left: n,
        turn_left: sample < 0.5,
    }
}

/// Anything within the detect threshold in the front quarter of the ring?
fn blocked_ahead(scan: &ProximityScan, p: &ControllerParams) -> bool {
    scan.min_where(|b| b.abs() <= TAU / 8.0 + 1e-9)
        .is_some_and(|(d, _)| d <= p.detect_threshold)
}

pub fn fill_step(state: FillState, obs: &FillObservations, p: &ControllerParams) -> FillOutput {
    match state {
        FillState::Attached => out(FillState::Attached, Command::STOP, false, Led::Blue),

        FillState::Scan { ticks_left } => {
            if let Some(b) = obs.beacon {
                return out(FillState::ApproachObject, steer_toward(b, p.v_follow, p), false, Led::Off);
            }
            if ticks_left == 0 {
                let next = walk_plan(obs.walk_sample, p);
                return out(next, Command::STOP, false, Led::Off);
            }
            out(
                FillState::Scan {
                    ticks_left: ticks_left - 1,
                },
                Command {
                    linear: 0.0,
                    angular: p.omega_scan,
                },
                false,
                Led::Off,
            )
        }

        FillState::RandomWalk {
            turn_ticks_left,
            forward_ticks_left,
            turn_left,
        } => {
            if let Some(b) = obs.beacon {
                return out(FillState::ApproachObject, steer_toward(b, p.v_follow, p), false, Led::Off);
            }
            if turn_ticks_left > 0 {
                let sign = if turn_left { 1.0 } else { -1.0 };
                return out(
                    FillState::RandomWalk {
                        turn_ticks_left: turn_ticks_left - 1,
                        forward_ticks_left,
                        turn_left,
                    },
                    Command {
                        linear: 0.0,
                        angular: sign * p.omega_turn,
                    },
                    false,
                    Led::Off,
                );
            }
            if forward_ticks_left > 0 {
                if blocked_ahead(obs.scan, p) {
                    // Replan the turn away from the obstruction.
                    return out(walk_plan(obs.walk_sample, p), Command::STOP, false, Led::Off);
                }
                return out(
                    FillState::RandomWalk {
                        turn_ticks_left: 0,
                        forward_ticks_left: forward_ticks_left - 1,
                        turn_left,
                    },
                    Command {
                        linear: p.v_max,
                        angular: 0.0,
                    },
                    false,
                    Led::Off,
                );
            }
            out(
                FillState::Scan {
                    ticks_left: p.random_walk_ticks,
                },
                Command::STOP,
                false,
                Led::Off,
            )
        }

        FillState::ApproachObject => {
            if blocked_ahead(obs.scan, p) {
                let command = wall_follow_command(obs.scan, p).unwrap_or(Command::STOP);
                return out(FillState::WallFollow, command, false, Led::Red);
            }
            match obs.beacon {
                Some(b) => out(FillState::ApproachObject, steer_toward(b, p.v_follow, p), false, Led::Off),
                None => out(
                    FillState::Scan {
                        ticks_left: p.random_walk_ticks,
                    },
                    Command::STOP,
                    false,
                    Led::Off,
                ),
            }
        }

        FillState::WallFollow => {
            if obs.scan.active_count(p.detect_threshold) >= p.attach_count {
                return out(FillState::Attached, Command::STOP, true, Led::Blue);
            }
            match wall_follow_command(obs.scan, p) {
                Some(command) => out(FillState::WallFollow, command, false, Led::Red),
                None => match obs.beacon {
                    Some(b) => out(FillState::ApproachObject, steer_toward(b, p.v_follow, p), false, Led::Off),
                    None => out(
                        FillState::Scan {
                            ticks_left: p.random_walk_ticks,
                        },
                        Command::STOP,
                        false,
                        Led::Off,
                    ),
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sensing::ProximityScan;

    fn params() -> ControllerParams {
        ControllerParams::default()
    }

    fn empty_scan() -> ProximityScan {
        ProximityScan::from_readings(vec![None; 8])
    }

    fn near_scan(readings: &[(usize, f64)]) -> ProximityScan {
        let mut r = vec![None; 8];
        for &(i, d) in readings {
            r[i] = Some(d);
        }
        ProximityScan::from_readings(r)
    }

    fn obs<'a>(scan: &'a ProximityScan, beacon: Option<f64>, sample: f64) -> FillObservations<'a> {
        FillObservations {
            scan,
            beacon,
            walk_sample: sample,
        }
    }

    #[test]
    fn scan_counts_down_then_walks() {
        let p = params();
        let scan = empty_scan();
        let o = obs(&scan, None, 0.3);
        let r = fill_step(FillState::Scan { ticks_left: 2 }, &o, &p);
        assert_eq!(r.state, FillState::Scan { ticks_left: 1 });
        assert!(r.command.angular > 0.0);
        assert_eq!(r.command.linear, 0.0);

        let r = fill_step(FillState::Scan { ticks_left: 0 }, &o, &p);
        assert!(matches!(r.state, FillState::RandomWalk { .. }));
    }

    #[test]
    fn beacon_preempts_scanning_and_walking() {
        let p = params();
        let scan = empty_scan();
        let o = obs(&scan, Some(0.4), 0.0);
        let r = fill_step(FillState::Scan { ticks_left: 10 }, &o, &p);
        assert_eq!(r.state, FillState::ApproachObject);

        let walking = FillState::RandomWalk {
            turn_ticks_left: 3,
            forward_ticks_left: 40,
            turn_left: true,
        };
        let r = fill_step(walking, &o, &p);
        assert_eq!(r.state, FillState::ApproachObject);
    }

    #[test]
    fn random_walk_turns_then_drives_then_rescans() {
        let p = params();
        let scan = empty_scan();
        let o = obs(&scan, None, 0.9);

        let r = fill_step(
            FillState::RandomWalk {
                turn_ticks_left: 1,
                forward_ticks_left: 2,
                turn_left: false,
            },
            &o,
            &p,
        );
        assert_eq!(r.command.linear, 0.0);
        assert!(r.command.angular < 0.0);

        let r = fill_step(r.state, &o, &p);
        assert!(r.command.linear > 0.0);
        assert_eq!(r.command.angular, 0.0);

        let r = fill_step(r.state, &o, &p);
        let r = fill_step(r.state, &o, &p);
        assert!(matches!(r.state, FillState::Scan { .. }));
    }

    #[test]
    fn random_walk_replans_when_blocked() {
        let p = params();
        let scan = near_scan(&[(0, 0.03)]);
        let o = obs(&scan, None, 0.7);
        let r = fill_step(
            FillState::RandomWalk {
                turn_ticks_left: 0,
                forward_ticks_left: 10,
                turn_left: true,
            },
            &o,
            &p,
        );
        match r.state {
            FillState::RandomWalk {
                turn_ticks_left,
                turn_left,
                ..
            } => {
                assert!(turn_ticks_left > 0);
                assert!(!turn_left); // sample 0.7 turns right
            }
            other => panic!("expected a replanned walk, got {other:?}"),
        }
    }

    #[test]
    fn approach_switches_to_wall_follow_on_contact() {
        let p = params();
        let scan = near_scan(&[(0, 0.04)]);
        let o = obs(&scan, Some(0.0), 0.0);
        let r = fill_step(FillState::ApproachObject, &o, &p);
        assert_eq!(r.state, FillState::WallFollow);
        assert_eq!(r.led, Led::Red);
    }

    #[test]
    fn approach_falls_back_to_scan_without_beacon() {
        let p = params();
        let scan = empty_scan();
        let o = obs(&scan, None, 0.0);
        let r = fill_step(FillState::ApproachObject, &o, &p);
        assert!(matches!(r.state, FillState::Scan { .. }));
    }

    #[test]
    fn wall_follow_attaches_in_a_pocket() {
        let p = params();
        // Four active sensors: front, both front diagonals, left.
        let scan = near_scan(&[(0, 0.02), (1, 0.05), (2, 0.04), (7, 0.05)]);
        assert_eq!(scan.active_count(p.detect_threshold), 4);
        let o = obs(&scan, None, 0.0);
        let r = fill_step(FillState::WallFollow, &o, &p);
        assert_eq!(r.state, FillState::Attached);
        assert!(r.attach);
        assert_eq!(r.led, Led::Blue);
        assert_eq!(r.command, Command::STOP);
    }

    #[test]
    fn wall_follow_does_not_attach_on_a_flat_face() {
        let p = params();
        // Flat wall on the left: one active sensor, diagonals out of threshold.
        let scan = near_scan(&[(1, 0.077), (2, 0.04), (3, 0.077)]);
        assert!(scan.active_count(p.detect_threshold) < p.attach_count);
        let o = obs(&scan, None, 0.0);
        let r = fill_step(FillState::WallFollow, &o, &p);
        assert_eq!(r.state, FillState::WallFollow);
        assert!(!r.attach);
        assert_eq!(r.led, Led::Red);
    }

    #[test]
    fn wall_follow_lost_goes_back_to_approach_or_scan() {
        let p = params();
        let scan = empty_scan();
        let with_beacon = obs(&scan, Some(1.0), 0.0);
        let r = fill_step(FillState::WallFollow, &with_beacon, &p);
        assert_eq!(r.state, FillState::ApproachObject);

        let without = obs(&scan, None, 0.0);
        let r = fill_step(FillState::WallFollow, &without, &p);
        assert!(matches!(r.state, FillState::Scan { .. }));
    }

    #[test]
    fn attached_is_terminal_and_still() {
        let p = params();
        let scan = near_scan(&[(0, 0.01), (1, 0.01), (2, 0.01), (3, 0.01)]);
        let o = obs(&scan, Some(0.0), 0.5);
        let r = fill_step(FillState::Attached, &o, &p);
        assert_eq!(r.state, FillState::Attached);
        assert_eq!(r.command, Command::STOP);
        assert!(!r.attach);
        assert_eq!(r.led, Led::Blue);
    }
}
