//! Browser bindings. Each export is a thin wrapper over a plain function so
//! the logic is testable natively.

use serde_json::json;
use wasm_bindgen::prelude::*;

use dragon_core::counting::Sequence;
use dragon_core::enumeration::{aligned_listing, classify_bin, classify_row, enumerate_a, enumerate_s};
use dragon_core::render::{render_svg, Layer, RenderSpec};

/// Iterates above this get slow to draw in a page.
pub const MAX_RENDER: usize = 16;
pub const MAX_TABLE: u64 = 2000;

/// SVG of iterate `n`; with `boundary` the left (blue) and right (red)
/// sides are drawn over the curve.
pub fn svg(n: usize, boundary: bool) -> Result<String, String> {
    if n > MAX_RENDER {
        return Err(format!("n must be at most {MAX_RENDER}"));
    }
    let layers = if boundary {
        vec![Layer::Cells, Layer::Curve, Layer::Left, Layer::Right]
    } else {
        vec![Layer::Curve]
    };
    let scale = if n > 12 { 2 } else { 8 };
    render_svg(&RenderSpec { n, layers, scale }).map_err(|e| e.to_string())
}

/// `[[index, "value"], ...]` for the named sequence, values as decimal
/// strings so JavaScript never rounds them.
pub fn table(name: &str, n: u64) -> Result<String, String> {
    let seq: Sequence = name.parse()?;
    if n > MAX_TABLE {
        return Err(format!("n must be at most {MAX_TABLE}"));
    }
    let first = seq.first_index();
    let terms = seq.matrix_table(n.max(first)).map_err(|e| e.to_string())?;
    let rows: Vec<_> = terms
        .iter()
        .enumerate()
        .map(|(i, v)| json!([first + i as u64, v.to_string()]))
        .collect();
    Ok(json!(rows).to_string())
}

/// Members of `strings`, `arrays`, or the `aligned` listing, as JSON.
pub fn listing(kind: &str, n: usize) -> Result<String, String> {
    let err = |e: dragon_core::Error| e.to_string();
    let value = match kind {
        "strings" => enumerate_s(n)
            .map_err(err)?
            .iter()
            .map(|s| Ok(json!({"string": s, "type": classify_bin(s)?})))
            .collect::<Result<Vec<_>, dragon_core::Error>>()
            .map_err(err)?
            .into(),
        "arrays" => enumerate_a(n)
            .map_err(err)?
            .iter()
            .map(|t| Ok(json!({"array": t, "type": classify_row(t)?})))
            .collect::<Result<Vec<_>, dragon_core::Error>>()
            .map_err(err)?
            .into(),
        "aligned" => serde_json::to_value(aligned_listing(n).map_err(err)?).map_err(|e| e.to_string())?,
        _ => return Err(format!("unknown listing {kind:?}")),
    };
    Ok(value.to_string())
}

#[wasm_bindgen(js_name = renderSvg)]
pub fn render_svg_js(n: u32, boundary: bool) -> Result<String, JsValue> {
    svg(n as usize, boundary).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = sequenceTable)]
pub fn sequence_table_js(name: &str, n: u32) -> Result<String, JsValue> {
    table(name, n as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = listing)]
pub fn listing_js(kind: &str, n: u32) -> Result<String, JsValue> {
    listing(kind, n as usize).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_bounds() {
        assert!(svg(4, true).unwrap().starts_with("<svg"));
        assert!(svg(MAX_RENDER + 1, false).is_err());
    }

    #[test]
    fn table_values_are_strings() {
        let v: serde_json::Value = serde_json::from_str(&table("right", 6).unwrap()).unwrap();
        assert_eq!(v[6], json!([6, "18"]));
        assert!(table("nope", 3).is_err());
        let b: serde_json::Value = serde_json::from_str(&table("binary", 0).unwrap()).unwrap();
        assert_eq!(b[0], json!([1, "1"]));
    }

    #[test]
    fn listings() {
        let v: serde_json::Value = serde_json::from_str(&listing("arrays", 2).unwrap()).unwrap();
        assert_eq!(v, json!([{"array": "01 10", "type": "D"}]));
        let a: serde_json::Value = serde_json::from_str(&listing("aligned", 4).unwrap()).unwrap();
        assert_eq!(a.as_array().unwrap().len(), 6);
        assert!(listing("strings", 30).is_err());
    }
}
