//! Deterministic placement grids around the center and sample points on the
//! upper hemisphere.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::config::{GridSpec, SceneConfig};
use super::sphere::{rational_unit, sphere_point, STEREO_DEN};
use crate::exact_geom::{ExactPoint, ExactScalar};

/// One grid position: shell `shell` (1-based), direction `dir` of the net.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub shell: usize,
    pub dir: usize,
    pub x: ExactPoint,
}

fn icosahedron() -> (Vec<[f64; 3]>, Vec<[usize; 3]>) {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut verts = Vec::new();
    for &a in &[-1.0, 1.0] {
        for &b in &[-phi, phi] {
            verts.push([0.0, a, b]);
            verts.push([a, b, 0.0]);
            verts.push([b, 0.0, a]);
        }
    }
    let dist2 = |p: &[f64; 3], q: &[f64; 3]| (0..3).map(|k| (p[k] - q[k]).powi(2)).sum::<f64>();
    let mut faces = Vec::new();
    for i in 0..12 {
        for j in i + 1..12 {
            for k in j + 1..12 {
                let edge = |a: usize, b: usize| (dist2(&verts[a], &verts[b]) - 4.0).abs() < 1e-9;
                if edge(i, j) && edge(j, k) && edge(i, k) {
                    faces.push([i, j, k]);
                }
            }
        }
    }
    (verts, faces)
}

/// Smallest geodesic-icosahedron frequency with at least `min_count`
/// vertices (a frequency-f net has 10 f^2 + 2).
pub fn net_frequency(min_count: usize) -> usize {
    let mut f = 1;
    while 10 * f * f + 2 < min_count {
        f += 1;
    }
    f
}

/// Unit directions of the frequency-`f` geodesic icosahedral net, each
/// rounded to a rational point exactly on the unit sphere.
pub fn icosahedral_directions(f: usize) -> Vec<ExactPoint> {
    let (verts, faces) = icosahedron();
    // vertex of the net keyed by its barycentric support, so points shared
    // between faces are produced once
    let mut net: BTreeMap<Vec<(usize, usize)>, [f64; 3]> = BTreeMap::new();
    for face in &faces {
        for i in 0..=f {
            for j in 0..=f - i {
                let k = f - i - j;
                let mut key: Vec<(usize, usize)> = [(face[0], i), (face[1], j), (face[2], k)]
                    .into_iter()
                    .filter(|&(_, w)| w > 0)
                    .collect();
                key.sort();
                net.entry(key.clone()).or_insert_with(|| {
                    let mut p = [0.0; 3];
                    for (vi, w) in &key {
                        for c in 0..3 {
                            p[c] += verts[*vi][c] * *w as f64;
                        }
                    }
                    p
                });
            }
        }
    }
    net.into_values().map(|p| rational_unit(p, STEREO_DEN)).collect()
}

/// All placements `v + (epsilon * i / shells) * u` for the configured grid.
pub fn placement_grid(cfg: &SceneConfig, grid: &GridSpec) -> Vec<Placement> {
    let dirs = icosahedral_directions(net_frequency(grid.dirs));
    let mut out = Vec::with_capacity(dirs.len() * grid.shells);
    for shell in 1..=grid.shells {
        let r = &cfg.epsilon * ExactScalar::ratio(shell as i64, grid.shells as i64).unwrap();
        for (dir, u) in dirs.iter().enumerate() {
            out.push(Placement {
                shell,
                dir,
                x: cfg.center.plus(&u.scaled(&r)),
            });
        }
    }
    out
}

/// `count` points spread over the open upper hemisphere (above the
/// horizontal plane through the center), in a golden-angle spiral.
pub fn upper_hemisphere_samples(cfg: &SceneConfig, count: usize) -> Vec<ExactPoint> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - (i as f64 + 0.5) / count as f64;
            let r = (1.0 - z * z).sqrt();
            let th = golden * i as f64;
            [r * th.cos(), r * th.sin(), z]
        })
        .map(|u| sphere_point(&cfg.center, &cfg.sphere_radius, u, STEREO_DEN))
        .filter(|p| p.z > cfg.center.z)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn net_sizes() {
        for f in 1..5 {
            assert_eq!(icosahedral_directions(f).len(), 10 * f * f + 2);
        }
        assert_eq!(net_frequency(1000), 10);
        assert_eq!(net_frequency(12), 1);
    }
}
