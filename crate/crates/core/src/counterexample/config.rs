use serde::{Deserialize, Serialize};

use crate::exact_geom::{segment_segment_classify, ExactPoint, ExactScalar, SegSegClass, Segment};

/// Placement sampling: `shells` concentric spheres around the center at radii
/// `epsilon * i / shells`, each carrying at least `dirs` directions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub shells: usize,
    pub dirs: usize,
}

/// Indices into the spliced curve (alpha with eta replaced by eta').
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Anchors {
    pub a1: usize,
    pub c: usize,
    pub b1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneConfig {
    pub sphere_radius: ExactScalar,
    pub center: ExactPoint,
    pub alpha: Vec<ExactPoint>,
    /// Inclusive index range `[start, end]` of eta within alpha.
    pub eta_range: [usize; 2],
    pub eta_prime: Vec<ExactPoint>,
    /// Open polyline; the disk over it is coned from the center.
    pub beta: Vec<ExactPoint>,
    pub anchors: Anchors,
    /// Subdivision vertices per branch, counting the anchor itself.
    pub n: usize,
    pub epsilon: ExactScalar,
    pub grid: GridSpec,
    /// Allowed deviation of curve points from the sphere.
    pub tol: ExactScalar,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("{field} must be positive")]
    NotPositive { field: &'static str },
    #[error("{field} must be non-negative")]
    Negative { field: &'static str },
    #[error("{field} needs at least {min} points, got {got}")]
    TooShort {
        field: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{field}[{index}] is farther than tol from the sphere")]
    OffSphere { field: &'static str, index: usize },
    #[error("eta_range {0:?} is not an increasing index range within alpha")]
    BadEtaRange([usize; 2]),
    #[error("eta_prime {which} point differs from the matching endpoint of eta")]
    SpliceMismatch { which: &'static str },
    #[error("{field} is not a simple polyline: segments {first} and {second} meet")]
    NotSimple {
        field: &'static str,
        first: usize,
        second: usize,
    },
    #[error("anchors must satisfy a1 < c < b1 < {len} (indices into the spliced curve)")]
    BadAnchors { len: usize },
}

impl SceneConfig {
    /// alpha with the eta subarc replaced by eta'.
    pub fn alpha_prime(&self) -> Vec<ExactPoint> {
        let [s, e] = self.eta_range;
        let mut out = self.alpha[..s].to_vec();
        out.extend(self.eta_prime.iter().cloned());
        out.extend(self.alpha[e + 1..].iter().cloned());
        out
    }

    pub fn eta(&self) -> &[ExactPoint] {
        let [s, e] = self.eta_range;
        &self.alpha[s..=e]
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.sphere_radius <= 0 {
            return Err(ConfigError::NotPositive { field: "sphere_radius" });
        }
        if self.epsilon <= 0 {
            return Err(ConfigError::NotPositive { field: "epsilon" });
        }
        if self.tol < 0 {
            return Err(ConfigError::Negative { field: "tol" });
        }
        if self.n == 0 {
            return Err(ConfigError::NotPositive { field: "n" });
        }
        if self.grid.shells == 0 {
            return Err(ConfigError::NotPositive { field: "grid.shells" });
        }
        if self.grid.dirs == 0 {
            return Err(ConfigError::NotPositive { field: "grid.dirs" });
        }
        for (field, pts, min) in [
            ("alpha", &self.alpha, 3),
            ("eta_prime", &self.eta_prime, 2),
            ("beta", &self.beta, 2),
        ] {
            if pts.len() < min {
                return Err(ConfigError::TooShort {
                    field,
                    min,
                    got: pts.len(),
                });
            }
            self.check_near_sphere(field, pts)?;
        }
        let [s, e] = self.eta_range;
        if s >= e || e >= self.alpha.len() {
            return Err(ConfigError::BadEtaRange(self.eta_range));
        }
        if self.eta_prime[0] != self.alpha[s] {
            return Err(ConfigError::SpliceMismatch { which: "first" });
        }
        if self.eta_prime.last() != Some(&self.alpha[e]) {
            return Err(ConfigError::SpliceMismatch { which: "last" });
        }
        check_simple_polyline(&self.alpha)
            .map_err(|(first, second)| ConfigError::NotSimple { field: "alpha", first, second })?;
        let spliced = self.alpha_prime();
        check_simple_polyline(&spliced).map_err(|(first, second)| ConfigError::NotSimple {
            field: "alpha_prime",
            first,
            second,
        })?;
        check_simple_polyline(&self.beta)
            .map_err(|(first, second)| ConfigError::NotSimple { field: "beta", first, second })?;
        let Anchors { a1, c, b1 } = self.anchors;
        if !(a1 < c && c < b1 && b1 < spliced.len()) {
            return Err(ConfigError::BadAnchors { len: spliced.len() });
        }
        Ok(())
    }

    fn check_near_sphere(&self, field: &'static str, pts: &[ExactPoint]) -> Result<(), ConfigError> {
        let lo = &self.sphere_radius - &self.tol;
        let hi = (&self.sphere_radius + &self.tol).square();
        let lo = if lo > 0 { lo.square() } else { ExactScalar::zero() };
        for (index, p) in pts.iter().enumerate() {
            let d2 = p.minus(&self.center).norm_squared();
            if d2 < lo || d2 > hi {
                return Err(ConfigError::OffSphere { field, index });
            }
        }
        Ok(())
    }
}

/// Exact axis-aligned bounding box of a segment, for cheap rejection.
struct Bounds {
    lo: [ExactScalar; 3],
    hi: [ExactScalar; 3],
}

impl Bounds {
    fn of(s: &Segment) -> Bounds {
        let pick = |k: usize, want_max: bool| {
            let (a, b) = (s.a().coord(k), s.b().coord(k));
            if (a < b) == want_max { b.clone() } else { a.clone() }
        };
        Bounds {
            lo: [pick(0, false), pick(1, false), pick(2, false)],
            hi: [pick(0, true), pick(1, true), pick(2, true)],
        }
    }

    fn apart(&self, o: &Bounds) -> bool {
        (0..3).any(|k| self.hi[k] < o.lo[k] || o.hi[k] < self.lo[k])
    }
}

/// Check that an open polyline is simple: consecutive segments share only
/// their common vertex, all others are disjoint. On failure returns the
/// offending segment indices.
pub fn check_simple_polyline(points: &[ExactPoint]) -> Result<(), (usize, usize)> {
    let mut segments = Vec::with_capacity(points.len().saturating_sub(1));
    for i in 0..points.len().saturating_sub(1) {
        segments.push(Segment::new(points[i].clone(), points[i + 1].clone()).map_err(|_| (i, i))?);
    }
    let bounds: Vec<Bounds> = segments.iter().map(Bounds::of).collect();
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            if j > i + 1 && bounds[i].apart(&bounds[j]) {
                continue;
            }
            let class = segment_segment_classify(&segments[i], &segments[j]);
            let ok = if j == i + 1 {
                matches!(&class, SegSegClass::EndpointTouch { point } if point == &points[j])
            } else {
                class.is_disjoint()
            };
            if !ok {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyline_simplicity() {
        let p = |x, y, z| ExactPoint::from_ints(x, y, z);
        assert!(check_simple_polyline(&[p(0, 0, 0), p(1, 0, 0), p(1, 1, 0), p(0, 1, 0)]).is_ok());
        assert_eq!(
            check_simple_polyline(&[p(0, 0, 0), p(2, 0, 0), p(2, 1, 0), p(1, -1, 0)]),
            Err((0, 2))
        );
        assert_eq!(check_simple_polyline(&[p(0, 0, 0), p(2, 0, 0), p(1, 0, 0)]), Err((0, 1)));
    }
}
