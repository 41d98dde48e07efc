//! Distributed forest-of-octrees raycaster.
//!
//! The crate renders emission/absorption volume data and colored 2D manifolds
//! stored in a linear, Morton-ordered forest of quad-/octrees. Ray segments
//! carry per-channel `(A, B)` transmission/emission tuples that compose under
//! an associative operation, so no phase of the pipeline ever needs a global
//! back-to-front sort. Compositing runs over logical ranks with point-to-point
//! messages only; sender/receiver pairs are discovered from replicated
//! partition markers without handshakes.
//!
//! Module map:
//! - [`segment`]: the ray-segment algebra (aggregate, split, average, ...).
//! - [`integrate`]: adaptive `(A, B)` evaluation from coefficient fields.
//! - [`geometry`]: Lagrange tensor geometry, camera, AABBs, patch intersection.
//! - [`forest`]: linear adaptive forest, traversals, completion, partitioning.
//! - [`segstore`]: image quadtree of per-pixel segment lists plus wire format.
//! - [`runtime`]: in-process multi-rank harness with reliable point-to-point.
//! - [`pipeline`]: the full render pipeline from culling to tiled PPM output.
//! - [`scenes`]: the Mandelbrot manifold and random-spheres volume scenes.

pub mod error;
pub mod forest;
pub mod geometry;
pub mod integrate;
pub mod math;
pub mod pipeline;
pub mod ppm;
pub mod runtime;
pub mod scenes;
pub mod segment;
pub mod segstore;

pub use error::{Error, Result};
