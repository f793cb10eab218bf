//! Built-in scene configurations.
//!
//! The default scene: alpha is a double spiral on the unit sphere. Strand A
//! winds `turns` times eastward from latitude `top` down to `bottom`; a small
//! U-turn at the bottom leads into strand B, which winds back up half a pitch
//! above A and ends at latitude `top + pitch/2`. Anchor c is the tip of the
//! U-turn, b1 is the upper end of strand B and a1 sits on eta', a short bump
//! lifting a piece of strand A near its start. Beta is an open arc around the
//! south pole, well away from alpha.

use std::f64::consts::PI;

use super::config::{Anchors, GridSpec, SceneConfig};
use super::sphere::{lon_lat, sphere_point, STEREO_DEN};
use crate::exact_geom::{ExactPoint, ExactScalar};

/// Shape parameters of the double spiral.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleSpiral {
    pub turns: u32,
    pub points_per_turn: u32,
    pub top_deg: f64,
    pub bottom_deg: f64,
    /// Number of U-turn subdivisions (the U-turn contributes one fewer point).
    pub uturn_steps: u32,
}

impl Default for DoubleSpiral {
    fn default() -> Self {
        DoubleSpiral {
            turns: 3,
            points_per_turn: 48,
            top_deg: 60.0,
            bottom_deg: -60.0,
            uturn_steps: 8,
        }
    }
}

/// Longitude/latitude (radians) of the spiral vertices, and the index of
/// the U-turn tip.
pub fn double_spiral_lon_lat(sp: &DoubleSpiral) -> (Vec<(f64, f64)>, usize) {
    let top = sp.top_deg.to_radians();
    let bot = sp.bottom_deg.to_radians();
    let k = sp.turns as f64;
    let pitch = (top - bot) / k;
    let n = sp.turns * sp.points_per_turn;
    let nf = n as f64;
    let total_lon = 2.0 * PI * k;
    let mut out = Vec::new();
    for i in 0..=n {
        let f = i as f64 / nf;
        out.push((total_lon * f, top - (top - bot) * f));
    }
    let r = pitch / 4.0;
    for j in 1..sp.uturn_steps {
        let th = PI * j as f64 / sp.uturn_steps as f64;
        let lat = bot + r - r * th.cos();
        out.push((total_lon + r * th.sin() / lat.cos(), lat));
    }
    let tip = n as usize + 1 + (sp.uturn_steps as usize - 1) / 2;
    for i in 0..=n {
        let f = (n - i) as f64 / nf;
        out.push((total_lon * f, top + pitch / 2.0 - (top - bot) * f));
    }
    (out, tip)
}

/// Open arc at latitude `lat_deg` from `lon_from_deg` to `lon_to_deg`.
fn parallel_arc(lat_deg: f64, lon_from_deg: f64, lon_to_deg: f64, points: usize) -> Vec<[f64; 3]> {
    (0..points)
        .map(|i| {
            let f = i as f64 / (points - 1) as f64;
            let lon = lon_from_deg + (lon_to_deg - lon_from_deg) * f;
            lon_lat(lon.to_radians(), lat_deg.to_radians())
        })
        .collect()
}

fn on_unit_sphere(dirs: impl IntoIterator<Item = [f64; 3]>) -> Vec<ExactPoint> {
    let (c, r) = (ExactPoint::origin(), ExactScalar::one());
    dirs.into_iter().map(|u| sphere_point(&c, &r, u, STEREO_DEN)).collect()
}

fn default_beta() -> Vec<ExactPoint> {
    on_unit_sphere(parallel_arc(-80.0, 10.0, 350.0, 24))
}

/// Rebuild eta' from eta, lifting interior points by the given latitude
/// offsets (degrees) and reusing eta's exact endpoints.
fn lifted(alpha: &[ExactPoint], lon_lat: &[(f64, f64)], start: usize, lifts_deg: &[f64]) -> Vec<ExactPoint> {
    let last = lifts_deg.len() - 1;
    lifts_deg
        .iter()
        .enumerate()
        .map(|(k, d)| {
            if k == 0 || k == last {
                alpha[start + k].clone()
            } else {
                let (lon, lat) = lon_lat[start + k];
                on_unit_sphere([super::sphere::lon_lat(lon, lat + d.to_radians())]).remove(0)
            }
        })
        .collect()
}

/// The shipped scene: double spiral with 3 turns of 48 points, eta = alpha[2..=6]
/// bumped by up to 4 degrees, n = 64, epsilon = 1/100.
pub fn default_scene_config() -> SceneConfig {
    let sp = DoubleSpiral::default();
    let (ll, tip) = double_spiral_lon_lat(&sp);
    let alpha = on_unit_sphere(ll.iter().map(|&(lon, lat)| lon_lat(lon, lat)));
    let eta_range = [2, 6];
    let eta_prime = lifted(&alpha, &ll, eta_range[0], &[0.0, 2.0, 4.0, 2.0, 0.0]);
    let last = alpha.len() - 1;
    SceneConfig {
        sphere_radius: ExactScalar::one(),
        center: ExactPoint::origin(),
        alpha,
        eta_range,
        eta_prime,
        beta: default_beta(),
        anchors: Anchors { a1: 4, c: tip, b1: last },
        n: 64,
        epsilon: ExactScalar::ratio(1, 100).unwrap(),
        grid: GridSpec { shells: 6, dirs: 1000 },
        tol: ExactScalar::ratio(1, 1_000_000).unwrap(),
    }
}

/// Negative control: alpha is a short arc at latitude 80 degrees with all
/// three anchors on it, so segments from most placements reach the anchors
/// without touching the fan.
pub fn control_short_arc_config() -> SceneConfig {
    let ll: Vec<(f64, f64)> = (0..9).map(|i| ((5.0 * i as f64).to_radians(), 80f64.to_radians())).collect();
    let alpha = on_unit_sphere(ll.iter().map(|&(lon, lat)| lon_lat(lon, lat)));
    let eta_range = [2, 4];
    let eta_prime = lifted(&alpha, &ll, eta_range[0], &[0.0, 2.0, 0.0]);
    SceneConfig {
        sphere_radius: ExactScalar::one(),
        center: ExactPoint::origin(),
        alpha,
        eta_range,
        eta_prime,
        beta: default_beta(),
        anchors: Anchors { a1: 1, c: 4, b1: 8 },
        n: 4,
        epsilon: ExactScalar::ratio(1, 100).unwrap(),
        grid: GridSpec { shells: 6, dirs: 1000 },
        tol: ExactScalar::ratio(1, 1_000_000).unwrap(),
    }
}
