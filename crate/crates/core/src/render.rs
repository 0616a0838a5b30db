//! SVG pictures of cactus words: strands run left to right, and each letter
//! `s(p,q)` gathers the strands at positions `p..q` into one point, from
//! which they leave in reversed order.

use std::fmt::Write;

use crate::cactus::CactusWord;

pub const TRACK: i64 = 20;
pub const COLUMN: i64 = 40;
pub const MARGIN: i64 = 20;

fn track_y(pos: usize) -> i64 {
    MARGIN + (pos as i64 - 1) * TRACK
}

/// Polyline vertices of every strand, indexed by starting position.
pub fn strand_paths(w: &CactusWord) -> Vec<Vec<(i64, i64)>> {
    let n = w.n();
    let mut pos: Vec<usize> = (1..=n).collect();
    let mut paths: Vec<Vec<(i64, i64)>> = pos.iter().map(|&p| vec![(MARGIN, track_y(p))]).collect();
    for (c, l) in w.letters().iter().enumerate() {
        let x0 = MARGIN + c as i64 * COLUMN;
        let x1 = x0 + COLUMN;
        let meet = (track_y(l.p()) + track_y(l.q())) / 2;
        for (strand, path) in paths.iter_mut().enumerate() {
            let p = pos[strand];
            if (l.p()..=l.q()).contains(&p) {
                let q = l.p() + l.q() - p;
                path.push((x0 + COLUMN / 2, meet));
                path.push((x1, track_y(q)));
                pos[strand] = q;
            }
        }
    }
    let end = MARGIN + w.len() as i64 * COLUMN + MARGIN;
    for (strand, path) in paths.iter_mut().enumerate() {
        path.push((end, track_y(pos[strand])));
    }
    paths
}

/// Deterministic SVG document for `w`.
pub fn render_svg(w: &CactusWord, labels: bool) -> String {
    let n = w.n() as i64;
    let width = MARGIN * 3 + w.len() as i64 * COLUMN;
    let height = MARGIN * 2 + (n - 1) * TRACK;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2" stroke-linejoin="round">"#);
    for path in strand_paths(w) {
        let pts: Vec<String> = path.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(out, "</g>");
    if labels {
        let _ = writeln!(out, r#"<g font-family="sans-serif" font-size="10" text-anchor="end">"#);
        for p in 1..=w.n() {
            let _ = writeln!(out, r#"<text x="{}" y="{}">{p}</text>"#, MARGIN - 4, track_y(p) + 3);
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}
