use super::DiskError;
use crate::exact_geom::{ExactPoint, Triangle};

/// Triangulated strip filling the region between two polylines that share
/// their endpoints, e.g. the patch bounded by an arc and its replacement.
#[derive(Debug, Clone)]
pub struct TriPatch {
    triangles: Vec<Triangle>,
}

impl TriPatch {
    pub fn from_triangles(triangles: Vec<Triangle>) -> Self {
        TriPatch { triangles }
    }

    /// Zipper triangulation between `lower` and `upper`, advancing along
    /// whichever side is behind in normalised index. Triangles collapsing
    /// onto a shared endpoint are omitted.
    pub fn strip_between(lower: &[ExactPoint], upper: &[ExactPoint]) -> Result<TriPatch, DiskError> {
        if lower.len() < 2 || upper.len() < 2 {
            return Err(DiskError::RimTooShort(lower.len().min(upper.len())));
        }
        if lower.first() != upper.first() || lower.last() != upper.last() {
            return Err(DiskError::PatchEndpointMismatch);
        }
        let m = lower.len() - 1;
        let k = upper.len() - 1;
        let (mut i, mut j) = (0usize, 0usize);
        let mut triangles = Vec::new();
        while i < m || j < k {
            // compare (i+1)/m with (j+1)/k
            let advance_lower = j == k || (i < m && (i + 1) * k <= (j + 1) * m);
            let (a, b, c) = if advance_lower {
                i += 1;
                (&lower[i - 1], &upper[j], &lower[i])
            } else {
                j += 1;
                (&lower[i], &upper[j - 1], &upper[j])
            };
            if a == b || b == c || a == c {
                continue;
            }
            let t = Triangle::new(a.clone(), b.clone(), c.clone())
                .map_err(|_| DiskError::DegenerateTriangle(triangles.len()))?;
            triangles.push(t);
        }
        Ok(TriPatch { triangles })
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }
}
