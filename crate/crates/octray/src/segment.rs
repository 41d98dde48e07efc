//! The ray-segment algebra.
//!
//! A segment of a ray carries, per color channel, the pair `(A, B)`: the
//! transmission ratio and the emitted intensity of the medium along the
//! segment. Intensity entering at the far end leaves the near end as
//! `I_out = A * I_in + B`. The pairs form a non-abelian group under
//! [`ChannelSegment::aggregate`], which is what lets the renderer combine
//! segments in any order instead of strictly back to front.
//!
//! All operations here are pure value computations and safe to call
//! concurrently.

use crate::error::{Error, Result};

/// Coordinate comparison tolerance for "same interval" decisions.
/// Geometric intersections carry floating-point noise, so two coordinates
/// are considered equal when within `1e-12 * max(1, |x|)`.
pub const COORD_TOL: f64 = 1e-12;

pub fn coords_equal(a: f64, b: f64) -> bool {
    (a - b).abs() <= COORD_TOL * 1f64.max(a.abs()).max(b.abs())
}

/// Per-channel transmission/emission pair over one ray interval.
///
/// `a` is dimensionless and nonnegative; `a == 0` marks an opaque segment.
/// `b` is an intensity and may be negative (amplifying/absorbing media).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelSegment {
    pub a: f64,
    pub b: f64,
}

pub const IDENTITY: ChannelSegment = ChannelSegment { a: 1.0, b: 0.0 };

impl Default for ChannelSegment {
    fn default() -> Self {
        IDENTITY
    }
}

impl ChannelSegment {
    pub fn new(a: f64, b: f64) -> Self {
        ChannelSegment { a, b }
    }

    /// Combines two adjacent segments, `self` being the one closer to the
    /// camera, into the equivalent single segment:
    /// `(A2, B2) (+) (A1, B1) = (A2 A1, B2 + A2 B1)`.
    pub fn aggregate(self, far: ChannelSegment) -> ChannelSegment {
        ChannelSegment {
            a: self.a * far.a,
            b: self.b + self.a * far.b,
        }
    }

    /// Group inverse `(1/A, -B/A)`; errors on opaque segments.
    pub fn inverse(self) -> Result<ChannelSegment> {
        if self.a <= 0.0 {
            return Err(Error::OpaqueInverse);
        }
        Ok(ChannelSegment {
            a: 1.0 / self.a,
            b: -self.b / self.a,
        })
    }

    /// Applies the segment to a background intensity: `A * I_b + B`.
    pub fn apply_background(self, background: f64) -> f64 {
        self.a * background + self.b
    }

    /// The fraction of this segment covering `q = dx_piece / dx_total`
    /// of its length: `A_i = A^q`, `B_i = B (1 - A_i) / (1 - A)`,
    /// with `B_i = B q` in the limit `A -> 1`.
    fn piece(self, q: f64) -> ChannelSegment {
        if q == 0.0 {
            return IDENTITY;
        }
        if q == 1.0 || self.a == 1.0 {
            return ChannelSegment::new(self.a.powf(q), self.b * q);
        }
        if self.a == 0.0 {
            // Opaque pieces stay opaque and reproduce the full emission on
            // aggregation: (0, B) (+) (0, B) = (0, B).
            return self;
        }
        // Evaluate (1 - A^q) / (1 - A) as expm1(q ln A) / expm1(ln A) to
        // stay accurate for A near 1.
        let ln_a = self.a.ln();
        ChannelSegment {
            a: (q * ln_a).exp(),
            b: self.b * (q * ln_a).exp_m1() / ln_a.exp_m1(),
        }
    }

    /// Splits into two consistent sub-segments of lengths `dx_far` and
    /// `dx_near`; aggregating the parts reproduces `self`.
    pub fn split(self, dx_far: f64, dx_near: f64) -> Result<(ChannelSegment, ChannelSegment)> {
        let dx = dx_far + dx_near;
        if dx_far < 0.0 || dx_near < 0.0 || dx <= 0.0 {
            return Err(Error::BadSplitLengths {
                dx1: dx_far,
                dx2: dx_near,
            });
        }
        Ok((self.piece(dx_far / dx), self.piece(dx_near / dx)))
    }

    /// Mean of two segments covering the same interval: geometric in `A`,
    /// arithmetic in `B`.
    pub fn average(self, other: ChannelSegment) -> ChannelSegment {
        ChannelSegment {
            a: (self.a * other.a).sqrt(),
            b: 0.5 * (self.b + other.b),
        }
    }
}

/// Recovers the constant absorption/emission coefficients that produce a
/// segment over length `dx`: `beta = -ln A / dx`, `gamma = beta B / (1 - A)`
/// with the well-defined limit `gamma = B / dx` for `A -> 1`.
pub fn coefficients_from_segment(s: ChannelSegment, dx: f64) -> Result<(f64, f64)> {
    if s.a <= 0.0 || dx <= 0.0 {
        return Err(Error::BadCoefficientInput { a: s.a, dx });
    }
    let u = s.a.ln();
    let beta = -u / dx;
    let gamma = if u == 0.0 {
        s.b / dx
    } else {
        // beta B / (1 - A) = u B / (dx expm1(u))
        u * s.b / (dx * u.exp_m1())
    };
    Ok((beta, gamma))
}

/// Exact segment of a constant-coefficient medium:
/// `A = exp(-beta dx)`, `B = gamma/beta (1 - A)` (`B = gamma dx` if `beta = 0`).
pub fn segment_from_constant(beta: f64, gamma: f64, dx: f64) -> ChannelSegment {
    debug_assert!(dx >= 0.0);
    let a = (-beta * dx).exp();
    let b = if beta == 0.0 {
        gamma * dx
    } else {
        -gamma * (-beta * dx).exp_m1() / beta
    };
    ChannelSegment { a, b }
}

/// Prescribed per-channel surface optics. `a_s = 0` is an opaque surface.
/// The notional surface thickness cancels analytically and is not stored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfaceMaterial {
    pub a_s: [f64; 3],
    pub i_s: [f64; 3],
}

/// Segment produced by a thin surface hit at incidence angle cosine
/// `cos_phi`: `A_phi = A_s^(1/cos phi)`, `B = I_s (1 - A_phi)`.
/// Grazing rays (`cos_phi <= 0`) are an error; the caller skips those hits.
pub fn surface_segment(a_s: f64, i_s: f64, cos_phi: f64) -> Result<ChannelSegment> {
    if cos_phi <= 0.0 {
        return Err(Error::GrazingSurface(cos_phi));
    }
    debug_assert!((0.0..=1.0).contains(&a_s));
    let a_phi = if a_s == 0.0 { 0.0 } else { a_s.powf(1.0 / cos_phi) };
    Ok(ChannelSegment {
        a: a_phi,
        b: i_s * (1.0 - a_phi),
    })
}

impl SurfaceMaterial {
    pub fn segments(&self, cos_phi: f64) -> Result<[ChannelSegment; 3]> {
        Ok([
            surface_segment(self.a_s[0], self.i_s[0], cos_phi)?,
            surface_segment(self.a_s[1], self.i_s[1], cos_phi)?,
            surface_segment(self.a_s[2], self.i_s[2], cos_phi)?,
        ])
    }
}

/// Pixel address: image instance plus zero-based pixel indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PixelId {
    pub instance: u32,
    pub i: u32,
    pub j: u32,
}

/// One ray interval with per-channel `(A, B)` values.
///
/// Coordinates are in ray-parameter units (camera at 0, increasing away from
/// the camera), `x_in <= x_out`. Light traverses the segment from `x_out`
/// toward `x_in`; physical lengths are recovered by the caller as
/// `(x_out - x_in) * |r|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RaySegment {
    pub pixel: PixelId,
    pub x_in: f64,
    pub x_out: f64,
    pub channels: [ChannelSegment; 3],
}

impl RaySegment {
    pub fn len(&self) -> f64 {
        self.x_out - self.x_in
    }

    pub fn is_point(&self) -> bool {
        coords_equal(self.x_in, self.x_out)
    }

    /// Channel-wise aggregation with `self` nearer to the camera; the
    /// resulting interval spans both inputs.
    pub fn aggregate(&self, far: &RaySegment) -> RaySegment {
        debug_assert_eq!(self.pixel, far.pixel);
        RaySegment {
            pixel: self.pixel,
            x_in: self.x_in.min(far.x_in),
            x_out: self.x_out.max(far.x_out),
            channels: [
                self.channels[0].aggregate(far.channels[0]),
                self.channels[1].aggregate(far.channels[1]),
                self.channels[2].aggregate(far.channels[2]),
            ],
        }
    }

    fn channel_average(&self, other: &RaySegment) -> [ChannelSegment; 3] {
        [
            self.channels[0].average(other.channels[0]),
            self.channels[1].average(other.channels[1]),
            self.channels[2].average(other.channels[2]),
        ]
    }

    /// Cuts out `[lo, hi]` and returns `(near piece, middle, far piece)`;
    /// outer pieces are `None` when they have (tolerance) zero length.
    fn cut(&self, lo: f64, hi: f64) -> (Option<RaySegment>, RaySegment, Option<RaySegment>) {
        let near_len = (lo - self.x_in).max(0.0);
        let mid_len = (hi - lo).max(0.0);
        let far_len = (self.x_out - hi).max(0.0);
        let total = self.len();
        let with = |x_in: f64, x_out: f64, ch: [ChannelSegment; 3]| RaySegment {
            pixel: self.pixel,
            x_in,
            x_out,
            channels: ch,
        };
        if total <= 0.0 {
            return (None, *self, None);
        }
        let split3 = |c: ChannelSegment| {
            // far-to-near order of pieces: [hi, x_out], [lo, hi], [x_in, lo]
            let (far, rest) = c.split(far_len, near_len + mid_len).expect("lengths >= 0");
            let (mid, near) = if near_len + mid_len > 0.0 {
                rest.split(mid_len, near_len).expect("lengths >= 0")
            } else {
                (IDENTITY, IDENTITY)
            };
            (near, mid, far)
        };
        let parts: Vec<_> = self.channels.iter().map(|c| split3(*c)).collect();
        let near = if coords_equal(self.x_in, lo) {
            None
        } else {
            Some(with(self.x_in, lo, [parts[0].0, parts[1].0, parts[2].0]))
        };
        let far = if coords_equal(hi, self.x_out) {
            None
        } else {
            Some(with(hi, self.x_out, [parts[0].2, parts[1].2, parts[2].2]))
        };
        (near, with(lo, hi, [parts[0].1, parts[1].1, parts[2].1]), far)
    }
}

/// Resolves two segments of the same pixel into 1..=3 disjoint segments
/// ordered by increasing `x_in`.
///
/// Proper overlaps are cut at the overlap boundaries and averaged over the
/// common interval; disjoint or merely touching inputs are returned sorted
/// and unchanged. A point segment strictly inside an interval cuts the
/// interval and is placed between the halves.
pub fn resolve_overlap(a: RaySegment, b: RaySegment) -> Vec<RaySegment> {
    debug_assert_eq!(a.pixel, b.pixel);
    let same_in = coords_equal(a.x_in, b.x_in);
    let same_out = coords_equal(a.x_out, b.x_out);
    if same_in && same_out {
        return vec![RaySegment {
            channels: a.channel_average(&b),
            ..a
        }];
    }

    let lo = a.x_in.max(b.x_in);
    let hi = a.x_out.min(b.x_out);
    let sorted = |first: RaySegment, second: RaySegment| {
        if (second.x_in, second.x_out) < (first.x_in, first.x_out) {
            vec![second, first]
        } else {
            vec![first, second]
        }
    };
    if hi < lo || coords_equal(lo, hi) {
        // Disjoint or touching; a point segment strictly inside the other
        // interval still has to cut it to keep the list z-ordered.
        let (point, host) = if a.is_point() && !b.is_point() {
            (a, b)
        } else if b.is_point() && !a.is_point() {
            (b, a)
        } else {
            return sorted(a, b);
        };
        if point.x_in <= host.x_in + COORD_TOL || point.x_in >= host.x_out - COORD_TOL {
            return sorted(a, b);
        }
        let (near, _, far) = host.cut(point.x_in, point.x_in);
        let mut out = Vec::with_capacity(3);
        out.extend(near);
        out.push(point);
        out.extend(far);
        return out;
    }

    let (a_near, a_mid, a_far) = a.cut(lo, hi);
    let (b_near, b_mid, b_far) = b.cut(lo, hi);
    let mid = RaySegment {
        pixel: a.pixel,
        x_in: lo,
        x_out: hi,
        channels: a_mid.channel_average(&b_mid),
    };
    let mut out = Vec::with_capacity(3);
    // At most one of the two segments extends on each side of the overlap.
    out.extend(a_near.or(b_near));
    out.push(mid);
    out.extend(a_far.or(b_far));
    out
}
