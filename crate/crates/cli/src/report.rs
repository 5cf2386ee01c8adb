use diam_core::metrics::{diameter_value, girth, is_connected};
use diam_core::{Graph, Solution};
use serde_json::{json, Value};

/// n, m, connectivity, diameter and girth of the input.
pub fn input_summary(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "m": g.m(),
        "connected": is_connected(g),
        "diameter": diameter_value(g),
        "girth": girth(g),
    })
}

/// Keys come out sorted since `serde_json::Map` is a BTreeMap here.
pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values always serialize"));
}

pub fn print_solution(s: &Solution) {
    println!("verdict: {}", s.verdict);
    if let Some(size) = s.min_size {
        println!("min size: {size}");
    }
    if let Some(f) = &s.deleted {
        println!("deleted: {f}");
    }
    if let Some(d) = s.achieved_diameter {
        println!("achieved diameter: {d}");
    }
    if let Some((u, v)) = s.certificate {
        println!("certificate: dist({u}, {v}) = {}", s.achieved_diameter.map_or("?".into(), |d| d.to_string()));
    }
    println!("method: {}", s.method);
}
