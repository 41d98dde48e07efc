//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("opaque segment (A = 0) has no inverse")]
    OpaqueInverse,
    #[error("segment split lengths must be nonnegative with positive sum: dx1 = {dx1}, dx2 = {dx2}")]
    BadSplitLengths { dx1: f64, dx2: f64 },
    #[error("coefficient recovery requires A > 0 and dx > 0: A = {a}, dx = {dx}")]
    BadCoefficientInput { a: f64, dx: f64 },
    #[error("surface segment requires cos(phi) > 0, got {0}; skip grazing intersections")]
    GrazingSurface(f64),
    #[error("coefficient field returned a non-finite value at x = {x}")]
    NonFiniteField { x: f64 },
    #[error("integration recursion exceeded max depth {max_depth} on [{x1}, {x2}]")]
    MaxDepthExceeded { x1: f64, x2: f64, max_depth: u32 },
    #[error("invalid Runge-Kutta tableau: {0}")]
    BadTableau(String),
    #[error("Gauss-Lobatto nodes require degree >= 1")]
    BadBasisDegree,
    #[error("geometry shape mismatch: expected {expected} control points, got {got}")]
    GridShapeMismatch { expected: usize, got: usize },
    #[error("invalid camera: {0}")]
    BadCamera(String),
    #[error("pixel index ({i}, {j}) outside {w}x{h} image")]
    PixelOutOfRange { i: i64, j: i64, w: u32, h: u32 },
    #[error("input leaves overlap at index {0}")]
    OverlappingLeaves(usize),
    #[error("rectangle {0:?} lies outside the image tree bounds")]
    RectOutOfBounds((u32, u32, u32, u32)),
    #[error("cannot merge segment trees of different instances: {0} vs {1}")]
    InstanceMismatch(u32, u32),
    #[error("malformed segment tree bytes at offset {offset}: {what}")]
    Unmarshal { offset: usize, what: String },
    #[error("unknown rank {rank} (communicator has {num_ranks})")]
    UnknownRank { rank: usize, num_ranks: usize },
    #[error("rank harness shut down with pending messages: {0}")]
    HarnessShutdown(String),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("render failed at leaf {leaf}, pixel ({i}, {j}): {source}")]
    RenderAt {
        leaf: String,
        i: u32,
        j: u32,
        #[source]
        source: Box<Error>,
    },
    #[error("I/O error on {path} at offset {offset}: {source}")]
    ImageIo {
        path: String,
        offset: u64,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
