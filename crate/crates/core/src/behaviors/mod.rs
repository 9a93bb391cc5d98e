//! Per-robot controllers, written as pure transition functions: each tick a
//! controller maps (state, observations, parameters) to a successor state,
//! a motion command, and an LED color. All randomness comes in through the
//! observations, so replaying the same inputs replays the same decisions.
//!
//! Two controllers share one movement vocabulary: [`fill`] robots hunt for
//! cavities on a concave object and attach where the surface wraps around
//! them; [`transport`] robots push a convex object from wherever it hides
//! the goal light.

pub mod fill;
pub mod transport;
mod wall_follow;

pub use wall_follow::wall_follow_command;

/// Differential-drive setpoint: forward speed (m/s) and turn rate (rad/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Command {
    pub linear: f64,
    pub angular: f64,
}

impl Command {
    pub const STOP: Command = Command {
        linear: 0.0,
        angular: 0.0,
    };

    pub fn clamped(self, v_max: f64, omega_max: f64) -> Command {
        Command {
            linear: self.linear.clamp(-v_max, v_max),
            angular: self.angular.clamp(-omega_max, omega_max),
        }
    }
}

/// Body LED color, mirroring what each controller signals: red while
/// reacting to a surface (following or pushing), blue once attached,
/// off otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Led {
    Off,
    Red,
    Blue,
}

impl Led {
    pub fn name(self) -> &'static str {
        match self {
            Led::Off => "off",
            Led::Red => "red",
            Led::Blue => "blue",
        }
    }
}

/// Everything the controllers need to know about the robot and its tuning.
/// One instance is shared by all robots in a trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControllerParams {
    /// A proximity reading at or below this counts as an active sensor.
    pub detect_threshold: f64,
    /// Attach when at least this many sensors are active at once.
    pub attach_count: usize,
    /// Target distance from the followed surface.
    pub standoff: f64,
    /// Front reading at or below this stops forward motion and pivots.
    pub front_stop: f64,
    /// Gain from side-distance error to turn rate.
    pub k_wall: f64,
    /// Gain from a bearing error to turn rate.
    pub k_bearing: f64,
    /// Cruise speed while following a surface.
    pub v_follow: f64,
    /// Drive speed while pushing.
    pub v_push: f64,
    /// Turn rate while scanning in place.
    pub omega_scan: f64,
    /// Turn rate for avoidance pivots.
    pub omega_turn: f64,
    /// Bearing alignment tolerance.
    pub theta_tol: f64,
    /// Tick budget for each scan / random-walk phase.
    pub random_walk_ticks: u32,
    /// Range of the object beacon.
    pub beacon_range: f64,
    /// Re-check light visibility every tick while pushing.
    pub push_reeval: bool,
    /// Speed limit (also enforced by the integrator).
    pub v_max: f64,
    /// Turn-rate limit (also enforced by the integrator).
    pub omega_max: f64,
    /// Robot body radius; proximity readings are measured from the rim.
    pub body_radius: f64,
}

impl Default for ControllerParams {
    fn default() -> Self {
        ControllerParams {
            detect_threshold: 0.06,
            attach_count: 4,
            standoff: 0.04,
            front_stop: 0.02,
            k_wall: 8.0,
            k_bearing: 3.0,
            v_follow: 0.08,
            v_push: 0.1,
            omega_scan: 1.2,
            omega_turn: 2.0,
            theta_tol: 0.05,
            random_walk_ticks: 40,
            beacon_range: 3.0,
            push_reeval: true,
            v_max: 0.1,
            omega_max: std::f64::consts::PI,
            body_radius: 0.05,
        }
    }
}

/// Steer toward a bearing: rotate in place when the target is behind,
/// drive while correcting once it is in the front half.
pub(crate) fn steer_toward(bearing: f64, speed: f64, p: &ControllerParams) -> Command {
    let angular = (p.k_bearing * bearing).clamp(-p.omega_max, p.omega_max);
    let linear = if bearing.abs() < std::f64::consts::FRAC_PI_2 {
        speed
    } else {
        0.0
    };
    Command { linear, angular }
}
