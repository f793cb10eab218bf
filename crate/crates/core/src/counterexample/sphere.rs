//! Rational points exactly on spheres, via inverse stereographic projection
//! from a rounded parameter pair.

use crate::exact_geom::{ExactPoint, ExactScalar};

/// Denominator used when rounding stereographic coordinates.
pub const STEREO_DEN: i64 = 10_000;

/// Unit vector for longitude/latitude given in radians.
pub fn lon_lat(lon: f64, lat: f64) -> [f64; 3] {
    [lat.cos() * lon.cos(), lat.cos() * lon.sin(), lat.sin()]
}

/// A rational point exactly on the unit sphere close to the direction `u`
/// (which need not be normalised). The projection pole is chosen opposite
/// to `u` so the parameters stay bounded.
pub fn rational_unit(u: [f64; 3], den: i64) -> ExactPoint {
    let len = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
    let [x, y, z] = [u[0] / len, u[1] / len, u[2] / len];
    let from_north = z <= 0.0;
    let w = if from_north { 1.0 - z } else { 1.0 + z };
    let s = ExactScalar::round_f64(x / w, den);
    let t = ExactScalar::round_f64(y / w, den);
    let q = s.square() + t.square();
    let d = (&q + ExactScalar::one()).recip().expect("positive");
    let two = ExactScalar::from_int(2);
    let zz = if from_north { &q - ExactScalar::one() } else { ExactScalar::one() - &q };
    ExactPoint::new(&two * &s * &d, &two * &t * &d, zz * &d)
}

/// `center + radius * rational_unit(u)`.
pub fn sphere_point(center: &ExactPoint, radius: &ExactScalar, u: [f64; 3], den: i64) -> ExactPoint {
    center.plus(&rational_unit(u, den).scaled(radius))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_exactly_unit_and_close() {
        for &(lon, lat) in &[(0.3, 1.2), (2.0, -0.7), (-1.0, 0.0), (0.0, -1.57), (1.0, 1.57)] {
            let u = lon_lat(lon, lat);
            let p = rational_unit(u, STEREO_DEN);
            assert_eq!(p.norm_squared(), ExactScalar::one());
            let f = p.to_f64();
            let err: f64 = (0..3).map(|k| (f[k] - u[k]).powi(2)).sum::<f64>().sqrt();
            assert!(err < 1e-3, "{err}");
        }
    }
}
