//! Occlusion-driven transport controller. A robot pushes only while the
//! object hides the goal light from it: everywhere else on the boundary it
//! keeps moving around the object. Summed over the swarm, the pushes from
//! the occluded side drive the object toward the light without any robot
//! knowing the object's shape or the swarm's plan.

use super::{steer_toward, wall_follow_command, Command, ControllerParams, Led};
use crate::sensing::ProximityScan;
use std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransportState {
    /// Rotate until the object beacon is roughly ahead.
    OrientToObject,
    /// Drive to the object.
    MoveToObject,
    /// At the surface with the light visible: move around the object.
    WallFollow,
    /// In shadow: square up to the surface before pushing.
    AlignPush,
    /// Drive into the object. Re-evaluated every tick.
    Push,
    /// Trial over; hold position.
    Stopped,
}

impl TransportState {
    pub fn initial() -> Self {
        TransportState::OrientToObject
    }

    pub fn name(&self) -> &'static str {
        match self {
            TransportState::OrientToObject => "orient",
            TransportState::MoveToObject => "move_to_object",
            TransportState::WallFollow => "wall_follow",
            TransportState::AlignPush => "align_push",
            TransportState::Push => "push",
            TransportState::Stopped => "stopped",
        }
    }
}

#[derive(Debug)]
pub struct TransportObservations<'a> {
    pub scan: &'a ProximityScan,
    /// Bearing to the goal light; `None` while the object occludes it.
    pub light: Option<f64>,
    /// Bearing to the object beacon, if within range.
    pub object: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportOutput {
    pub state: TransportState,
    pub command: Command,
    pub led: Led,
}

fn out(state: TransportState, command: Command, led: Led) -> TransportOutput {
    TransportOutput {
        state,
        command,
        led,
    }
}

/// Anything within the detect threshold in the front quarter of the ring?
fn near_ahead(scan: &ProximityScan, p: &ControllerParams) -> bool {
    scan.min_where(|b| b.abs() <= TAU / 8.0 + 1e-9)
        .is_some_and(|(d, _)| d <= p.detect_threshold)
}

/// Any reading at all in the front quarter (the surface is at hand)?
fn surface_ahead(scan: &ProximityScan) -> bool {
    scan.min_where(|b| b.abs() <= TAU / 8.0 + 1e-9).is_some()
}

/// Bearing of the overall closest reading: a stand-in for "toward the
/// surface" when the beacon is unavailable.
fn closest_bearing(scan: &ProximityScan) -> Option<f64> {
    scan.min_where(|_| true).map(|(_, b)| b)
}

pub fn transport_step(
    state: TransportState,
    obs: &TransportObservations,
    p: &ControllerParams,
) -> TransportOutput {
    match state {
        TransportState::Stopped => out(TransportState::Stopped, Command::STOP, Led::Off),

        TransportState::OrientToObject => match obs.object {
            None => out(
                TransportState::OrientToObject,
                Command {
                    linear: 0.0,
                    angular: p.omega_scan,
                },
                Led::Off,
            ),
            Some(b) if b.abs() <= p.theta_tol => out(
                TransportState::MoveToObject,
                steer_toward(b, p.v_max, p),
                Led::Off,
            ),
            Some(b) => out(
                TransportState::OrientToObject,
                Command {
                    linear: 0.0,
                    angular: (p.k_bearing * b).clamp(-p.omega_max, p.omega_max),
                },
                Led::Off,
            ),
        },

        TransportState::MoveToObject => {
            if near_ahead(obs.scan, p) {
                return if obs.light.is_none() {
                    align_or_push(obs, p)
                } else {
                    follow_or_reorient(obs, p)
                };
            }
            match obs.object {
                Some(b) => out(TransportState::MoveToObject, steer_toward(b, p.v_max, p), Led::Off),
                None => out(
                    TransportState::OrientToObject,
                    Command {
                        linear: 0.0,
                        angular: p.omega_scan,
                    },
                    Led::Off,
                ),
            }
        }

        TransportState::WallFollow => {
            if obs.light.is_none() {
                return align_or_push(obs, p);
            }
            follow_or_reorient(obs, p)
        }

        TransportState::AlignPush => {
            if p.push_reeval && obs.light.is_some() {
                return follow_or_reorient(obs, p);
            }
            align_or_push(obs, p)
        }

        TransportState::Push => {
            if p.push_reeval && obs.light.is_some() {
                return follow_or_reorient(obs, p);
            }
            if !surface_ahead(obs.scan) {
                // The object slipped out of reach: close the gap again.
                return match obs.object {
                    Some(b) => out(TransportState::MoveToObject, steer_toward(b, p.v_max, p), Led::Off),
                    None => out(
                        TransportState::OrientToObject,
                        Command {
                            linear: 0.0,
                            angular: p.omega_scan,
                        },
                        Led::Off,
                    ),
                };
            }
            let track = obs.object.or_else(|| closest_bearing(obs.scan)).unwrap_or(0.0);
            out(
                TransportState::Push,
                Command {
                    linear: p.v_push,
                    angular: (p.k_bearing * track).clamp(-p.omega_max, p.omega_max),
                },
                Led::Red,
            )
        }
    }
}

/// Shadow-side behavior: rotate until the object is dead ahead, then push.
fn align_or_push(obs: &TransportObservations, p: &ControllerParams) -> TransportOutput {
    let target = obs.object.or_else(|| closest_bearing(obs.scan));
    match target {
        Some(b) if b.abs() <= p.theta_tol => out(
            TransportState::Push,
            Command {
                linear: p.v_push,
                angular: (p.k_bearing * b).clamp(-p.omega_max, p.omega_max),
            },
            Led::Red,
        ),
        Some(b) => out(
            TransportState::AlignPush,
            Command {
                linear: 0.0,
                angular: (p.k_bearing * b).clamp(-p.omega_max, p.omega_max),
            },
            Led::Red,
        ),
        None => out(
            TransportState::OrientToObject,
            Command {
                linear: 0.0,
                angular: p.omega_scan,
            },
            Led::Off,
        ),
    }
}

/// Lit-side behavior: keep moving around the object, or reorient if the
/// surface is gone.
fn follow_or_reorient(obs: &TransportObservations, p: &ControllerParams) -> TransportOutput {
    match wall_follow_command(obs.scan, p) {
        Some(command) => out(TransportState::WallFollow, command, Led::Red),
        None => match obs.object {
            Some(b) => out(TransportState::MoveToObject, steer_toward(b, p.v_max, p), Led::Off),
            None => out(
                TransportState::OrientToObject,
                Command {
                    linear: 0.0,
                    angular: p.omega_scan,
                },
                Led::Off,
            ),
        },
    }
}
