//! Browser bindings. Each export takes plain values and returns a string
//! (JSON or SVG); failures come back as `{"error": ...}` JSON so the page
//! needs no exception handling.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use ccx_core::diagram::{classify, parse_diagram};
use ccx_core::exactmath::{fmt_rational, int, Rational};
use ccx_core::formulas::{eval_all, f_plus, f_vector_for_diagram, h_from_f};
use ccx_core::invariants::compute_all;
use ccx_core::polygon::{Family, Model};

/// Largest model the page will enumerate facets of.
const MAX_MODEL_VERTICES: usize = 400;
/// Rank cap for the in-browser invariant recursions.
const MAX_INVARIANT_RANK: usize = 10;

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

pub fn face_numbers_json(diagram: &str, m: i64) -> Result<Value, String> {
    let g = parse_diagram(diagram).map_err(|e| e.to_string())?;
    let f = f_vector_for_diagram(&g).map_err(|e| e.to_string())?;
    let n = g.rank();
    let top = f.last().cloned().unwrap_or_default();
    Ok(json!({
        "type": classify(&g).describe(),
        "rank": n,
        "m": m,
        "f": strings(&eval_all(&f, m)),
        "h": strings(&eval_all(&h_from_f(&f), m)),
        "N": fmt_rational(&top.eval(&int(m))),
        "N_plus": fmt_rational(&f_plus(&top, n).eval(&int(m))),
    }))
}

pub fn polygon_svg_checked(family: &str, n: usize, m: usize, facet: usize) -> Result<String, String> {
    let fam: Family = family.parse().map_err(|e: ccx_core::polygon::PolygonError| e.to_string())?;
    let model = Model::new(fam, n, m).map_err(|e| e.to_string())?;
    if model.vertex_count() > MAX_MODEL_VERTICES {
        return Err(format!(
            "{} model vertices is more than this page enumerates ({MAX_MODEL_VERTICES})",
            model.vertex_count()
        ));
    }
    let picture = if facet == 0 {
        model.negatives().map_err(|e| e.to_string())?
    } else {
        model
            .facets(facet)
            .into_iter()
            .nth(facet - 1)
            .ok_or_else(|| format!("the model has fewer than {facet} facets"))?
    };
    Ok(picture.svg())
}

pub fn invariants_json(diagram: &str) -> Result<Value, String> {
    let g = parse_diagram(diagram).map_err(|e| e.to_string())?;
    if g.rank() > MAX_INVARIANT_RANK {
        return Err(format!("rank {} is above the page limit of {MAX_INVARIANT_RANK}", g.rank()));
    }
    Ok(compute_all(&g).to_json())
}

/// Face and h-numbers of a finite type at `m`, with `N` and `N+`.
#[wasm_bindgen]
pub fn face_numbers(diagram: &str, m: i32) -> String {
    face_numbers_json(diagram, m.into()).map_or_else(error, |v| v.to_string())
}

/// SVG of a polygon model: the negative simple roots when `facet` is 0,
/// otherwise the `facet`-th facet.
#[wasm_bindgen]
pub fn polygon_svg(family: &str, n: u32, m: u32, facet: u32) -> String {
    polygon_svg_checked(family, n as usize, m as usize, facet as usize).unwrap_or_else(error)
}

/// All invariant methods on a diagram, as the JSON report.
#[wasm_bindgen]
pub fn invariants(diagram: &str) -> String {
    invariants_json(diagram).map_or_else(error, |v| v.to_string())
}
