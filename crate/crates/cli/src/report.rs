//! Rendering helpers for command output. Everything here is deterministic:
//! identical inputs produce byte-identical text.

use ribbonq_core::matrix::QMat;

/// Matrix as nested arrays of canonical field-element strings.
pub fn matrix_block(m: &QMat) -> String {
    let mut out = String::new();
    out.push('[');
    for r in 0..m.rows() {
        if r > 0 {
            out.push_str(",\n ");
        }
        out.push('[');
        for c in 0..m.cols() {
            if c > 0 {
                out.push_str(", ");
            }
            out.push('"');
            out.push_str(&m.get(r, c).canonical_text());
            out.push('"');
        }
        out.push(']');
    }
    out.push(']');
    out
}

/// Human-oriented matrix table: one row per line, entries tab-separated.
pub fn matrix_table(m: &QMat) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if c > 0 {
                out.push('\t');
            }
            out.push_str(&m.get(r, c).canonical_text());
        }
        out.push('\n');
    }
    out
}
