//! Exponent gap profiles and bar diagrams.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Exp, SparsePoly};

/// Default cap on diagram cells.
pub const DEFAULT_RENDER_LIMIT: u64 = 10_000;

const SVG_CELL: u64 = 10;
const SVG_HEIGHT: u64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapProfile {
    pub exponents: Vec<Exp>,
    pub diffs: Vec<Exp>,
    pub max_gap: Exp,
    /// Lowest consecutive pair achieving `max_gap`; `None` for a monomial.
    pub argmax: Option<(Exp, Exp)>,
}

pub fn gap_profile(f: &SparsePoly) -> Result<GapProfile> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let exponents: Vec<Exp> = f.exponents().collect();
    let diffs: Vec<Exp> = exponents.windows(2).map(|w| w[1] - w[0]).collect();
    let mut max_gap = 0;
    let mut argmax = None;
    for (i, &d) in diffs.iter().enumerate() {
        if d > max_gap {
            max_gap = d;
            argmax = Some((exponents[i], exponents[i + 1]));
        }
    }
    Ok(GapProfile {
        exponents,
        diffs,
        max_gap,
        argmax,
    })
}

/// `g(f)` alone, without materializing the profile.
pub fn max_gap(f: &SparsePoly) -> Result<Exp> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.terms()
        .windows(2)
        .map(|w| w[1].0 - w[0].0)
        .max()
        .unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    Ascii,
    Svg,
}

pub fn render_diagram(f: &SparsePoly, format: DiagramFormat) -> Result<String> {
    render_diagram_with_limit(f, format, DEFAULT_RENDER_LIMIT)
}

/// One cell per exponent `0..=deg(f)`; a cell is filled iff that exponent
/// occurs. ASCII uses `#`/`.`; SVG emits one black `<rect>` per filled cell.
pub fn render_diagram_with_limit(f: &SparsePoly, format: DiagramFormat, limit: u64) -> Result<String> {
    let cells = f.deg()? + 1;
    if cells > limit {
        return Err(Error::RenderLimitExceeded { cells, limit });
    }
    Ok(match format {
        DiagramFormat::Ascii => {
            let mut row = vec![b'.'; cells as usize];
            for e in f.exponents() {
                row[e as usize] = b'#';
            }
            String::from_utf8(row).expect("ascii")
        }
        DiagramFormat::Svg => {
            let width = cells * SVG_CELL;
            let mut out = String::new();
            let _ = writeln!(
                out,
                r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{SVG_HEIGHT}" viewBox="0 0 {width} {SVG_HEIGHT}" style="background:white">"#
            );
            for e in f.exponents() {
                let _ = writeln!(
                    out,
                    r#"<rect x="{}" y="0" width="{SVG_CELL}" height="{SVG_HEIGHT}" fill="black"/>"#,
                    e * SVG_CELL
                );
            }
            out.push_str("</svg>\n");
            out
        }
    })
}
