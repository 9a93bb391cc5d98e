//! Deterministic 2D simulator for swarms of disc robots that shape and push
//! passive objects: robots plug the cavities of concave objects by attaching
//! to them, and push convex objects toward a goal light by occlusion.
//!
//! Layering, bottom up: [`geometry`] (exact planar primitives), [`sensing`]
//! (proximity rings and light bearing), [`behaviors`] (pure per-robot
//! controllers), [`dynamics`] (world state and stepping), [`harness`]
//! (scenario configs, trials, batches, logs).

pub mod behaviors;
pub mod geometry;
pub mod sensing;
