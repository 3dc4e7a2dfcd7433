//! Browser demo: fusion tables, braiding spectra, and braid-word matrices
//! rendered as HTML fragments for a static page.
//!
//! The exported functions are thin `wasm_bindgen` wrappers around plain
//! string-returning implementations, which keeps the logic testable on the
//! host target.

use ribbonq_core::braid::{BraidRep, BraidWord};
use ribbonq_core::cartan::{CartanData, LieType, Weight};
use ribbonq_core::fusion::decompose_general;
use ribbonq_core::matrix::QMat;
use ribbonq_core::qmodule::QModule;
use ribbonq_core::ribbon::{braiding_eigenvalue_magnitude, twist_scalar, CertifiedBraiding};
use wasm_bindgen::prelude::*;

const CAP: usize = 2048;

/// Fusion decomposition of `V(w) (x) V(w)` with twist data, as an HTML
/// fragment. Works for any supported type and rank.
#[wasm_bindgen]
pub fn fusion_table(lie_type: &str, rank: usize, weight: &str) -> Result<String, JsValue> {
    fusion_table_impl(lie_type, rank, weight).map_err(|e| JsValue::from_str(&e))
}

/// Certified braiding operator on the tensor square of the simple sl2
/// module `V(m)`: spectrum table plus the full matrix.
#[wasm_bindgen]
pub fn rmatrix_table(m: u32) -> Result<String, JsValue> {
    rmatrix_table_impl(m).map_err(|e| JsValue::from_str(&e))
}

/// Evaluate a braid word in the certified representation of `B_strands` on
/// `V(m)^(x strands)` and render the resulting matrix.
#[wasm_bindgen]
pub fn braid_word_matrix(m: u32, strands: usize, word: &str) -> Result<String, JsValue> {
    braid_word_matrix_impl(m, strands, word).map_err(|e| JsValue::from_str(&e))
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn parse_instance(
    lie_type: &str,
    rank: usize,
    weight: &str,
) -> Result<(CartanData, Weight), String> {
    let ty: LieType = lie_type.parse().map_err(|e| format!("{e}"))?;
    let cd = CartanData::new(ty, rank).map_err(|e| format!("{e}"))?;
    let coords: Vec<i64> = weight
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad weight coordinate {t:?}"))
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != cd.rank() {
        return Err(format!("weight needs {} coordinates", cd.rank()));
    }
    Ok((cd, Weight::new(coords)))
}

fn matrix_html(m: &QMat) -> String {
    let mut out = String::from("<table class=\"matrix\">");
    for r in 0..m.rows() {
        out.push_str("<tr>");
        for c in 0..m.cols() {
            let entry = m.get(r, c);
            if entry.is_zero() {
                out.push_str("<td class=\"zero\">0</td>");
            } else {
                out.push_str(&format!("<td>{}</td>", escape(&entry.canonical_text())));
            }
        }
        out.push_str("</tr>");
    }
    out.push_str("</table>");
    out
}

fn fusion_table_impl(lie_type: &str, rank: usize, weight: &str) -> Result<String, String> {
    let (cd, w) = parse_instance(lie_type, rank, weight)?;
    let decomposition = decompose_general(&cd, &w, CAP).map_err(|e| format!("{e}"))?;
    let order = cd.root_order();
    let base_twist = twist_scalar(&cd, &w, order).map_err(|e| format!("{e}"))?;

    let mut out = format!(
        "<p>V{w} &otimes; V{w} over {cd}: <b>{}</b> summands, multiplicity-free: <b>{}</b>, \
         base twist {}</p>",
        decomposition.summands.len(),
        decomposition.multiplicity_free,
        escape(&base_twist.canonical_text()),
    );
    out.push_str(
        "<table class=\"report\"><tr><th>summand</th><th>mult</th><th>dim</th>\
         <th>casimir</th><th>twist</th><th>eigenvalue magnitude</th></tr>",
    );
    for s in &decomposition.summands {
        let twist = twist_scalar(&cd, &s.weight, order).map_err(|e| format!("{e}"))?;
        let magnitude =
            braiding_eigenvalue_magnitude(&cd, &w, &s.weight, order).map_err(|e| format!("{e}"))?;
        out.push_str(&format!(
            "<tr><td>V{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td></tr>",
            s.weight,
            s.multiplicity,
            s.dim,
            s.casimir,
            escape(&twist.canonical_text()),
            escape(&magnitude.canonical_text()),
        ));
    }
    out.push_str("</table>");
    if !decomposition.multiplicity_free {
        out.push_str("<p class=\"note\">Signs and projectors need a multiplicity-free square.</p>");
    }
    Ok(out)
}

fn rmatrix_table_impl(m: u32) -> Result<String, String> {
    if m > 6 {
        return Err("keep m <= 6 for the in-browser demo".into());
    }
    let module = QModule::sl2_simple(m, 4);
    let braiding = CertifiedBraiding::for_simple_module(&module).map_err(|e| format!("{e}"))?;
    let mut out = format!(
        "<p>Braiding on V({m}) &otimes; V({m}), dimension {}; every certificate check \
         (intertwiner, Yang&ndash;Baxter, eigenvalue law, top-vector normalization, classical \
         limit) passed exactly.</p>",
        module.dim() * module.dim()
    );
    out.push_str(
        "<table class=\"report\"><tr><th>component</th><th>dim</th><th>twist</th>\
         <th>sign</th><th>eigenvalue</th></tr>",
    );
    for c in &braiding.spectrum.components {
        out.push_str(&format!(
            "<tr><td>V{}</td><td>{}</td><td>{}</td><td>{:+}</td><td>{}</td></tr>",
            c.weight,
            c.dim,
            escape(&c.twist.canonical_text()),
            c.sign,
            escape(&c.eigenvalue().canonical_text()),
        ));
    }
    out.push_str("</table>");
    out.push_str(&matrix_html(&braiding.rmatrix));
    Ok(out)
}

fn braid_word_matrix_impl(m: u32, strands: usize, word: &str) -> Result<String, String> {
    let module = QModule::sl2_simple(m, 4);
    let dim = (m as usize + 1).pow(strands as u32);
    if dim > 64 {
        return Err(format!(
            "total dimension {dim} too large for the in-browser demo (keep (m+1)^strands <= 64)"
        ));
    }
    let braiding = CertifiedBraiding::for_simple_module(&module).map_err(|e| format!("{e}"))?;
    let rep = BraidRep::build(&braiding, strands).map_err(|e| format!("{e}"))?;
    let word = BraidWord::parse(word, strands).map_err(|e| format!("{e}"))?;
    let image = rep.evaluate(&word).map_err(|e| format!("{e}"))?;
    let mut out = format!(
        "<p>&sigma;-word \"{}\" acting on V({m})<sup>&otimes;{strands}</sup>, dimension {}; \
         braid relations certified exactly at construction.</p>",
        escape(&word.to_string()),
        image.rows()
    );
    out.push_str(&matrix_html(&image));
    Ok(out)
}
