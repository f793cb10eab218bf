//! Wavefront OBJ export. Lossy: coordinates are written as 17-significant-digit
//! decimals and are meant for viewing only.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::exact_geom::{ExactPoint, Triangle};

/// Render named triangle groups into one OBJ document with shared vertices.
pub fn write_obj(groups: &[(&str, &[Triangle])]) -> String {
    let mut index: BTreeMap<&ExactPoint, usize> = BTreeMap::new();
    let mut order: Vec<&ExactPoint> = Vec::new();
    for (_, tris) in groups {
        for t in tris.iter() {
            for v in t.vertices() {
                index.entry(v).or_insert_with(|| {
                    order.push(v);
                    order.len()
                });
            }
        }
    }
    let mut out = String::new();
    for v in &order {
        let [x, y, z] = v.to_f64();
        writeln!(out, "v {x:.16e} {y:.16e} {z:.16e}").unwrap();
    }
    for (name, tris) in groups {
        writeln!(out, "g {name}").unwrap();
        for t in tris.iter() {
            let [a, b, c] = t.vertices().each_ref().map(|v| index[v]);
            writeln!(out, "f {a} {b} {c}").unwrap();
        }
    }
    out
}
