//! Structured text format for module files.
//!
//! Layout (one item per line, `#` starts a comment):
//!
//! ```text
//! qmodule v1
//! lie_type A
//! rank 1
//! root_order 4
//! dimension 2
//! weights
//! 0 1
//! 1 -1
//! generator E 1
//! 0 1 1
//! generator F 1
//! 1 0 1
//! generator K 1
//! 0 0 q
//! 1 1 q^(-1)
//! generator Kinv 1
//! 0 0 q^(-1)
//! 1 1 q
//! ```
//!
//! Weight lines are `index coord_1 ... coord_rank`; generator entry lines
//! are `row col canonical-field-element-text`. Only nonzero entries are
//! written. Loading validates the defining relations and fails on any
//! violation, so a file that parses and loads is a genuine module.

use super::{Generator, QModule};
use crate::cartan::{CartanData, LieType, Weight};
use crate::error::{Error, Result};
use crate::matrix::QMat;
use crate::qarith::FieldElement;
use std::fmt::Write as _;
use std::path::Path;

/// Render a module in the file format; output is canonical, so equal
/// modules render to byte-identical text.
pub fn render_module(m: &QModule) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "qmodule v1");
    let _ = writeln!(out, "lie_type {}", m.cartan().lie_type());
    let _ = writeln!(out, "rank {}", m.cartan().rank());
    let _ = writeln!(out, "root_order {}", m.root_order());
    let _ = writeln!(out, "dimension {}", m.dim());
    let _ = writeln!(out, "weights");
    for (idx, w) in m.weights().iter().enumerate() {
        let coords: Vec<String> = w.coords().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "{idx} {}", coords.join(" "));
    }
    for g in Generator::ALL {
        for i in 1..=m.cartan().rank() {
            let _ = writeln!(out, "generator {} {}", g.label(), i);
            let mat = m.generator(g, i);
            for r in 0..mat.rows() {
                for c in 0..mat.cols() {
                    let v = mat.get(r, c);
                    if !v.is_zero() {
                        let _ = writeln!(out, "{r} {c} {}", v.canonical_text());
                    }
                }
            }
        }
    }
    out
}

/// Parse and validate a module from its file-format text.
pub fn parse_module(text: &str) -> Result<QModule> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();

    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty module file".into()))?;
    if header != "qmodule v1" {
        return Err(Error::Parse(format!("unexpected header {header:?}")));
    }

    let lie_type: LieType = expect_kv(lines.next(), "lie_type")?.parse()?;
    let rank: usize = parse_num(expect_kv(lines.next(), "rank")?)?;
    let root_order: u32 = parse_num(expect_kv(lines.next(), "root_order")?)?;
    let dimension: usize = parse_num(expect_kv(lines.next(), "dimension")?)?;
    let cd = CartanData::new(lie_type, rank)?;

    if lines.next() != Some("weights") {
        return Err(Error::Parse("expected 'weights' section".into()));
    }
    let mut weights = vec![None; dimension];
    for _ in 0..dimension {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("truncated weight table".into()))?;
        let mut parts = line.split_whitespace();
        let idx: usize = parse_num(
            parts
                .next()
                .ok_or_else(|| Error::Parse("empty weight line".into()))?,
        )?;
        let coords: Vec<i64> = parts.map(parse_num).collect::<Result<_>>()?;
        if coords.len() != rank {
            return Err(Error::Parse(format!(
                "weight {idx} has {} coords, expected {rank}",
                coords.len()
            )));
        }
        if idx >= dimension {
            return Err(Error::Parse(format!("weight index {idx} out of range")));
        }
        weights[idx] = Some(Weight::new(coords));
    }
    let weights: Vec<Weight> = weights
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.ok_or_else(|| Error::Parse(format!("missing weight for index {i}"))))
        .collect::<Result<_>>()?;

    let mut mats: Vec<Vec<QMat>> = (0..4)
        .map(|_| vec![QMat::zeros(dimension, dimension); rank])
        .collect();
    let mut seen = vec![vec![false; rank]; 4];
    while let Some(line) = lines.next() {
        let mut parts = line.split_whitespace();
        if parts.next() != Some("generator") {
            return Err(Error::Parse(format!(
                "expected generator header, got {line:?}"
            )));
        }
        let label = parts
            .next()
            .ok_or_else(|| Error::Parse("missing generator label".into()))?;
        let kind = Generator::ALL
            .iter()
            .position(|g| g.label() == label)
            .ok_or_else(|| Error::Parse(format!("unknown generator {label:?}")))?;
        let i: usize = parse_num(
            parts
                .next()
                .ok_or_else(|| Error::Parse("missing generator index".into()))?,
        )?;
        if i < 1 || i > rank {
            return Err(Error::Parse(format!(
                "generator index {i} out of range 1..={rank}"
            )));
        }
        if seen[kind][i - 1] {
            return Err(Error::Parse(format!(
                "duplicate section for generator {label} {i}"
            )));
        }
        seen[kind][i - 1] = true;

        while lines.peek().is_some_and(|l| !l.starts_with("generator")) {
            let entry = lines.next().unwrap();
            let mut parts = entry.splitn(3, ' ');
            let r: usize = parse_num(parts.next().unwrap_or(""))?;
            let c: usize = parse_num(
                parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("bad entry line {entry:?}")))?,
            )?;
            let text = parts
                .next()
                .ok_or_else(|| Error::Parse(format!("bad entry line {entry:?}")))?;
            if r >= dimension || c >= dimension {
                return Err(Error::Parse(format!(
                    "entry ({r},{c}) out of range for dimension {dimension}"
                )));
            }
            mats[kind][i - 1].set(r, c, FieldElement::parse(text.trim(), root_order)?);
        }
    }
    for (kind, g) in Generator::ALL.iter().enumerate() {
        for i in 1..=rank {
            if !seen[kind][i - 1] {
                return Err(Error::Parse(format!(
                    "missing section for generator {} {i}",
                    g.label()
                )));
            }
        }
    }

    let [e, f, k, k_inv]: [Vec<QMat>; 4] = mats.try_into().expect("four kinds");
    QModule::from_parts(cd, root_order, weights, e, f, k, k_inv)
}

pub fn save_module(m: &QModule, path: &Path) -> Result<()> {
    std::fs::write(path, render_module(m))?;
    Ok(())
}

pub fn load_module(path: &Path) -> Result<QModule> {
    let text = std::fs::read_to_string(path)?;
    parse_module(&text)
}

fn expect_kv<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing {key} line")))?;
    line.strip_prefix(key)
        .map(str::trim)
        .ok_or_else(|| Error::Parse(format!("expected {key}, got {line:?}")))
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("invalid number {s:?}")))
}
