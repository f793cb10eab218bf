use serde::{Deserialize, Serialize};

use super::graph::{SpatialGraph, VertexId};

/// Simple cycles, each in canonical form: it starts at its least vertex and
/// the second vertex is less than the last, which picks the lexicographically
/// least of its rotations and reflections.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleList {
    pub cycles: Vec<Vec<VertexId>>,
}

impl CycleList {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Bring a cycle given as a vertex sequence into canonical form.
pub fn canonical_cycle(cycle: &[VertexId]) -> Vec<VertexId> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<VertexId> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    let backward: Vec<VertexId> = (0..n).map(|k| cycle[(start + n - k) % n]).collect();
    forward.min(backward)
}

/// All simple cycles with at most `max_length` vertices, each reported once.
pub fn enumerate_cycles(g: &SpatialGraph, max_length: usize) -> CycleList {
    let mut cycles = Vec::new();
    if max_length < 3 {
        return CycleList { cycles };
    }
    let mut path = Vec::with_capacity(max_length);
    let mut on_path = std::collections::BTreeSet::new();
    for start in g.vertices() {
        path.push(start);
        on_path.insert(start);
        extend(g, start, max_length, &mut path, &mut on_path, &mut cycles);
        path.pop();
        on_path.remove(&start);
    }
    cycles.sort();
    CycleList { cycles }
}

fn extend(
    g: &SpatialGraph,
    start: VertexId,
    max_length: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut std::collections::BTreeSet<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    let last = *path.last().unwrap();
    for w in g.neighbors(last) {
        if w == start {
            if path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            continue;
        }
        if w < start || on_path.contains(&w) || path.len() == max_length {
            continue;
        }
        path.push(w);
        on_path.insert(w);
        extend(g, start, max_length, path, on_path, out);
        path.pop();
        on_path.remove(&w);
    }
}
