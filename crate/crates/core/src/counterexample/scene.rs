use super::config::{ConfigError, SceneConfig};
use crate::disks::{disk_disk_classify, obj::write_obj, DiskDiskClass, DiskError, FanDisk, TriPatch};
use crate::exact_geom::{ExactPoint, ExactScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SceneError {
    #[error("invalid config: {0}")]
    Config(#[from] ConfigError),
    #[error("cannot build {disk}: {source}")]
    Disk {
        disk: &'static str,
        #[source]
        source: DiskError,
    },
    #[error("d_f must meet gamma_prime exactly in the center on both boundaries, got {0:?}")]
    DiskContact(DiskDiskClass),
}

/// The assembled geometry: the fan `gamma_prime` over the placed cycle
/// a1..an c bn..b1, the cone `delta` over alpha, the patch between eta and
/// eta', and the cone `d_f` over beta, all apexed at the center v.
#[derive(Debug, Clone)]
pub struct Scene {
    pub v: ExactPoint,
    pub alpha_prime: Vec<ExactPoint>,
    /// a1, ..., an
    pub a_points: Vec<ExactPoint>,
    pub c: ExactPoint,
    /// b1, ..., bn
    pub b_points: Vec<ExactPoint>,
    pub gamma_prime: FanDisk,
    pub delta: FanDisk,
    pub delta_patch: TriPatch,
    pub d_f: FanDisk,
}

/// Point of `poly` at parameter `whole + num/den` where parameter `i`
/// is vertex `i` and each segment has unit parameter length.
fn at_param(poly: &[ExactPoint], whole: usize, num: usize, den: usize) -> ExactPoint {
    if num == 0 {
        poly[whole].clone()
    } else {
        let t = ExactScalar::ratio(num as i64, den as i64).unwrap();
        ExactPoint::lerp(&poly[whole], &poly[whole + 1], &t)
    }
}

/// `n` points from `poly[from]` towards `poly[to]` (exclusive) at equal
/// parameter steps, starting with `poly[from]` itself.
fn subdivide(poly: &[ExactPoint], from: usize, to: usize, n: usize) -> Vec<ExactPoint> {
    let len = from.abs_diff(to);
    (0..n)
        .map(|j| {
            let (q, r) = ((j * len) / n, (j * len) % n);
            if from < to {
                at_param(poly, from + q, r, n)
            } else if r == 0 {
                poly[from - q].clone()
            } else {
                at_param(poly, from - q - 1, n - r, n)
            }
        })
        .collect()
}

pub fn build_scene(cfg: &SceneConfig) -> Result<Scene, SceneError> {
    cfg.validate()?;
    let v = cfg.center.clone();
    let alpha_prime = cfg.alpha_prime();
    let anchors = &cfg.anchors;
    let a_points = subdivide(&alpha_prime, anchors.a1, anchors.c, cfg.n);
    let b_points = subdivide(&alpha_prime, anchors.b1, anchors.c, cfg.n);
    let c = alpha_prime[anchors.c].clone();
    let mut rim = a_points.clone();
    rim.push(c.clone());
    rim.extend(b_points.iter().rev().cloned());
    let disk = |name: &'static str, rim: Vec<ExactPoint>| {
        FanDisk::cone(v.clone(), rim).map_err(|source| SceneError::Disk { disk: name, source })
    };
    let gamma_prime = disk("gamma_prime", rim)?;
    let delta = disk("delta", cfg.alpha.clone())?;
    let d_f = disk("d_f", cfg.beta.clone())?;
    let delta_patch = TriPatch::strip_between(cfg.eta(), &cfg.eta_prime)
        .map_err(|source| SceneError::Disk { disk: "delta_patch", source })?;
    match disk_disk_classify(&d_f, &gamma_prime) {
        DiskDiskClass::SinglePoint {
            point,
            on_boundary_of_both: true,
        } if point == v => {}
        other => return Err(SceneError::DiskContact(other)),
    }
    Ok(Scene {
        v,
        alpha_prime,
        a_points,
        c,
        b_points,
        gamma_prime,
        delta,
        delta_patch,
        d_f,
    })
}

impl Scene {
    pub fn a1(&self) -> &ExactPoint {
        &self.a_points[0]
    }

    pub fn b1(&self) -> &ExactPoint {
        &self.b_points[0]
    }

    /// The cycle v a1 ... an c bn ... b1 bounding gamma_prime.
    pub fn panel_cycle(&self) -> Vec<ExactPoint> {
        self.gamma_prime.boundary_polygon()
    }

    /// Wavefront OBJ with groups delta, delta_patch, gamma_prime and d_f.
    pub fn to_obj(&self) -> String {
        write_obj(&[
            ("delta", self.delta.triangles()),
            ("delta_patch", self.delta_patch.triangles()),
            ("gamma_prime", self.gamma_prime.triangles()),
            ("d_f", self.d_f.triangles()),
        ])
    }
}
