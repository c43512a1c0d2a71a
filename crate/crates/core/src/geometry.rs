//! Sectors, rays and polylines in the complex plane.

use core::f64::consts::FRAC_PI_2;

use crate::prelude::*;

/// Relative width of the band around a sector's boundary ray that counts as
/// "on the boundary". `atan2` is not exact, so a point built as
/// `e^{iα}` may come back a few ulps off `α`.
const BOUNDARY_ULPS: f64 = 4.0 * f64::EPSILON;

/// The sector `S_α = {z : Re z > 0, |arg z| < α}` or its closed variant
/// `V_α` (`|arg z| ≤ α`). The origin never belongs to either.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    half_angle: f64,
    closed: bool,
}

impl Sector {
    pub fn new(half_angle: f64, closed: bool) -> Result<Self> {
        if !(half_angle > 0.0 && half_angle < FRAC_PI_2) {
            return Err(Error::invalid(format!(
                "sector half-angle {half_angle} not in (0, pi/2)"
            )));
        }
        Ok(Self { half_angle, closed })
    }

    pub fn open(half_angle: f64) -> Result<Self> {
        Self::new(half_angle, false)
    }

    pub fn closed(half_angle: f64) -> Result<Self> {
        Self::new(half_angle, true)
    }

    pub fn half_angle(&self) -> f64 {
        self.half_angle
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, z: C64) -> bool {
        if !(z.re > 0.0) || !z.im.is_finite() {
            return false;
        }
        let gap = z.arg().abs() - self.half_angle;
        if gap.abs() <= BOUNDARY_ULPS * self.half_angle {
            return self.closed;
        }
        gap < 0.0
    }
}

/// Free-function form of [`Sector::contains`].
pub fn contains_point(sector: &Sector, z: C64) -> bool {
    sector.contains(z)
}

/// The open ray `{r e^{iθ} : r > 0}` with `|θ| < π/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray {
    theta: f64,
    direction: C64,
}

impl Ray {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta.abs() < FRAC_PI_2) {
            return Err(Error::invalid(format!("ray angle {theta} not in (-pi/2, pi/2)")));
        }
        Ok(Self { theta, direction: C64::from_polar(1.0, theta) })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn direction(&self) -> C64 {
        self.direction
    }

    pub fn point(&self, r: f64) -> C64 {
        self.direction * r
    }
}

/// An open or closed piecewise-linear curve. A polyline whose last vertex
/// equals its first is treated as closed.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<C64>,
}

impl Polyline {
    pub fn new(vertices: Vec<C64>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::invalid("a polyline needs at least two vertices"));
        }
        if vertices.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::invalid("polyline vertex is not finite"));
        }
        if let Some(k) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("consecutive vertices {k} and {} coincide", k + 1)));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[C64] {
        &self.vertices
    }

    pub fn start(&self) -> C64 {
        self.vertices[0]
    }

    pub fn end(&self) -> C64 {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() > 2 && self.start() == self.end()
    }

    pub fn segments(&self) -> impl Iterator<Item = (C64, C64)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| (b - a).norm()).sum()
    }

    /// `n` points equidistributed in arclength, first and last being the
    /// curve's endpoints.
    pub fn sample(&self, n: usize) -> Result<Vec<C64>> {
        if n < 2 {
            return Err(Error::invalid(format!("sample count {n} < 2")));
        }
        let lengths: Vec<f64> = self.segments().map(|(a, b)| (b - a).norm()).collect();
        let total: f64 = lengths.iter().sum();
        let mut out = Vec::with_capacity(n);
        let mut seg = 0;
        let mut seg_start = 0.0;
        for j in 0..n {
            if j == n - 1 {
                out.push(self.end());
                break;
            }
            let s = total * j as f64 / (n - 1) as f64;
            while seg + 1 < lengths.len() && s > seg_start + lengths[seg] {
                seg_start += lengths[seg];
                seg += 1;
            }
            let (a, b) = (self.vertices[seg], self.vertices[seg + 1]);
            let t = ((s - seg_start) / lengths[seg]).clamp(0.0, 1.0);
            out.push(a + (b - a) * t);
        }
        Ok(out)
    }

    /// True when no two non-adjacent segments meet and no two adjacent
    /// segments overlap beyond their shared vertex. For closed polylines the
    /// first and last segments count as adjacent.
    pub fn is_simple(&self) -> bool {
        let segs: Vec<(C64, C64)> = self.segments().collect();
        let m = segs.len();
        let closed = self.is_closed();
        for i in 0..m {
            for j in (i + 1)..m {
                let adjacent = j == i + 1 || (closed && i == 0 && j == m - 1);
                if adjacent {
                    if adjacent_segments_overlap(segs[i], segs[j]) {
                        return false;
                    }
                } else if segments_intersect(segs[i], segs[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Free-function form of [`Polyline::sample`].
pub fn sample_curve(curve: &Polyline, n: usize) -> Result<Vec<C64>> {
    curve.sample(n)
}

/// Free-function form of [`Polyline::is_simple`].
pub fn is_simple_polyline(curve: &Polyline) -> bool {
    curve.is_simple()
}

/// Exact sign of the orientation of the triple `(a, b, c)`.
pub fn orientation(a: C64, b: C64, c: C64) -> i8 {
    let det = robust::orient2d(
        robust::Coord { x: a.re, y: a.im },
        robust::Coord { x: b.re, y: b.im },
        robust::Coord { x: c.re, y: c.im },
    );
    if det > 0.0 {
        1
    } else if det < 0.0 {
        -1
    } else {
        0
    }
}

fn on_segment(p: C64, (a, b): (C64, C64)) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

/// Closed-segment intersection test built on exact orientations.
pub fn segments_intersect(s: (C64, C64), t: (C64, C64)) -> bool {
    let (p1, p2) = s;
    let (q1, q2) = t;
    let d1 = orientation(q1, q2, p1);
    let d2 = orientation(q1, q2, p2);
    let d3 = orientation(p1, p2, q1);
    let d4 = orientation(p1, p2, q2);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(p1, t))
        || (d2 == 0 && on_segment(p2, t))
        || (d3 == 0 && on_segment(q1, s))
        || (d4 == 0 && on_segment(q2, s))
}

// `s` ends where `t` starts (or the reverse for the wrap-around pair).
fn adjacent_segments_overlap(s: (C64, C64), t: (C64, C64)) -> bool {
    let (shared, far_s, far_t) = if s.1 == t.0 {
        (s.1, s.0, t.1)
    } else if s.0 == t.1 {
        (s.0, s.1, t.0)
    } else {
        return segments_intersect(s, t);
    };
    if orientation(far_s, shared, far_t) != 0 {
        return false;
    }
    // Collinear: they overlap iff they leave the shared vertex the same way.
    let u = far_s - shared;
    let v = far_t - shared;
    u.re * v.re + u.im * v.im > 0.0
}
