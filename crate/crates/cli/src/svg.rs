//! Static plot of a certified instance.

use std::fmt::Write;

use logharmonic::harmonic::Orientation;
use logharmonic::valence::{PoleData, ValenceReport};
use logharmonic::{Complex64, StandardRationalMap};

const SIZE: f64 = 800.0;
const MARK: f64 = 5.0;

/// Zeros (filled = sense-preserving, hollow = sense-reversing), poles as
/// crosses, `c` and `conj(c)` as labelled diamonds, and the large circle.
pub fn render(map: &StandardRationalMap, report: &ValenceReport, poles: &PoleData) -> String {
    let radius = map.large_circle_radius();
    let half = 1.05 * radius;
    let scale = SIZE / (2.0 * half);
    let px = |z: Complex64| (SIZE / 2.0 + z.re * scale, SIZE / 2.0 - z.im * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##);
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{m}" x2="{SIZE}" y2="{m}" stroke="#ccc"/><line x1="{m}" y1="0" x2="{m}" y2="{SIZE}" stroke="#ccc"/>"##,
        m = SIZE / 2.0
    );
    let _ = writeln!(
        out,
        r##"<circle class="large-circle" cx="{c:.3}" cy="{c:.3}" r="{r:.3}" fill="none" stroke="#888" stroke-dasharray="6 4"/>"##,
        c = SIZE / 2.0,
        r = radius * scale
    );
    for pole in &poles.poles {
        let (x, y) = px(pole.location);
        let _ = writeln!(
            out,
            r##"<path class="pole" d="M{:.3} {:.3}L{:.3} {:.3}M{:.3} {:.3}L{:.3} {:.3}" stroke="black" stroke-width="1.5"/>"##,
            x - MARK,
            y - MARK,
            x + MARK,
            y + MARK,
            x - MARK,
            y + MARK,
            x + MARK,
            y - MARK
        );
    }
    for zero in &report.zeros {
        let (x, y) = px(zero.location);
        let style = match zero.orientation {
            Orientation::SensePreserving => r##"fill="#1f5fbf" stroke="#1f5fbf""##,
            _ => r##"fill="none" stroke="#c0392b" stroke-width="1.5""##,
        };
        let _ = writeln!(
            out,
            r##"<circle class="zero {}" cx="{x:.3}" cy="{y:.3}" r="{MARK}" {style}/>"##,
            zero.orientation.as_str()
        );
    }
    for (label, z) in [("c", map.c()), ("conj(c)", map.c().conj())] {
        let (x, y) = px(z);
        let _ = writeln!(
            out,
            r##"<path class="marker" d="M{:.3} {:.3}L{:.3} {:.3}L{:.3} {:.3}L{:.3} {:.3}Z" fill="#2e8b57"/><text x="{:.3}" y="{:.3}" font-size="12" font-family="sans-serif">{label}</text>"##,
            x,
            y - MARK,
            x + MARK,
            y,
            x,
            y + MARK,
            x - MARK,
            y,
            x + 1.5 * MARK,
            y - 1.5 * MARK
        );
    }
    let _ = writeln!(
        out,
        r##"<text x="10" y="20" font-size="14" font-family="sans-serif">n = {}, zeros = {} (N+ = {}, N- = {}), winding = {}</text>"##,
        report.n, report.total, report.n_plus, report.n_minus, report.winding_large_circle
    );
    out.push_str("</svg>\n");
    out
}
