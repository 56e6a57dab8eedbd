//! Reading and writing polygons as JSON documents of the form
//! `{"vertices": [[x, y], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::geometry::{ConvexPolygon, Point};

#[derive(Serialize, Deserialize)]
struct PolygonDocument {
    vertices: Vec<[f64; 2]>,
}

/// Parses a polygon from a JSON string.
pub fn polygon_from_json(text: &str) -> Result<ConvexPolygon, HarnessError> {
    let doc: PolygonDocument = serde_json::from_str(text)
        .map_err(|e| HarnessError::PolygonFile(format!("invalid JSON: {e}")))?;
    let vertices: Vec<Point> = doc
        .vertices
        .iter()
        .map(|[x, y]| Point::new(*x, *y))
        .collect();
    ConvexPolygon::new(vertices).map_err(|e| HarnessError::PolygonFile(e.to_string()))
}

/// Serializes a polygon to the JSON document format.
#[must_use]
pub fn polygon_to_json(polygon: &ConvexPolygon) -> String {
    let doc = PolygonDocument {
        vertices: polygon.vertices().iter().map(|p| [p.x, p.y]).collect(),
    };
    serde_json::to_string(&doc).expect("polygon serialization cannot fail")
}

/// Loads a polygon from a JSON file.
pub fn load_polygon(path: &Path) -> Result<ConvexPolygon, HarnessError> {
    let text = std::fs::read_to_string(path)?;
    polygon_from_json(&text)
}
