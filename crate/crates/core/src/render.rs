//! ASCII and SVG wiring diagrams.
//!
//! Both renderers are pure functions of their inputs; the output bytes are
//! stable across runs and platforms.

use std::fmt::Write as _;

use crate::chamber::set_string;
use crate::order::Label;
use crate::word::{Arrangement, TrackOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    pub track_gap: u32,
    pub event_gap: u32,
    pub show_chamber_labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: Format::Svg,
            track_gap: 30,
            event_gap: 30,
            show_chamber_labels: true,
        }
    }
}

pub fn render(arr: &Arrangement, opt: &RenderOptions) -> String {
    match opt.format {
        Format::Ascii => render_ascii(arr),
        Format::Svg => render_svg(arr, opt),
    }
}

/// Text diagram: one row per track, crossings drawn as `X` between rows,
/// line labels in both margins.
///
/// ```text
/// 1 --\ /-- 2
///      X
/// 2 --/ \-- 1
/// ```
pub fn render_ascii(arr: &Arrangement) -> String {
    let n = arr.n();
    let left = arr.left();
    let right = arr.right();
    let width = left
        .lines()
        .iter()
        .map(|a| a.to_string().len())
        .max()
        .unwrap_or(1);
    let mut rows: Vec<String> = (0..2 * n - 1)
        .map(|r| {
            if r % 2 == 0 {
                format!("{:>width$} --", left.lines()[r / 2])
            } else {
                " ".repeat(width + 3)
            }
        })
        .collect();
    for &level in arr.word().letters() {
        let upper = 2 * (level - 1);
        for (r, row) in rows.iter_mut().enumerate() {
            let cell = match r {
                _ if r == upper => "\\ /",
                _ if r == upper + 1 => " X ",
                _ if r == upper + 2 => "/ \\",
                _ if r % 2 == 0 => "---",
                _ => "   ",
            };
            row.push_str(cell);
            row.push_str(if r % 2 == 0 { "--" } else { "  " });
        }
    }
    let mut out = String::new();
    for (r, row) in rows.iter_mut().enumerate() {
        if r % 2 == 0 {
            write!(row, " {}", right.lines()[r / 2]).unwrap();
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}

/// A chamber: the gap below track `depth` between two crossings at that level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberSpan {
    /// Number of lines above the chamber.
    pub depth: usize,
    /// First and last sweep column (inclusive) the chamber spans.
    pub columns: (usize, usize),
    pub set: Vec<Label>,
}

/// All chambers of the arrangement except those with the empty label,
/// ordered by depth then by first column.
pub fn chamber_spans(arr: &Arrangement) -> Vec<ChamberSpan> {
    let cols = arr.sweep();
    let last = cols.len() - 1;
    let mut spans = Vec::new();
    for depth in 1..=arr.n() {
        let mut start = 0;
        let mut close = |start: usize, end: usize, col: &TrackOrder| {
            let mut set = col.lines()[..depth].to_vec();
            set.sort_unstable();
            spans.push(ChamberSpan {
                depth,
                columns: (start, end),
                set,
            });
        };
        for (k, &level) in arr.word().letters().iter().enumerate() {
            if level == depth {
                close(start, k, &cols[k]);
                start = k + 1;
            }
        }
        close(start, last, &cols[last]);
    }
    spans
}

fn num(v: f64) -> String {
    format!("{v}")
}

/// SVG 1.1 drawing with a polyline per line, boundary labels, and chamber labels.
///
/// Column `c` of the sweep occupies `[x0 + 2c·g, x0 + (2c+1)·g]` horizontally
/// and event `k` the stretch between columns `k-1` and `k`, where `g` is the
/// event gap. A chamber label sits at the middle of its column span, halfway
/// between the tracks that bound it.
pub fn render_svg(arr: &Arrangement, opt: &RenderOptions) -> String {
    let n = arr.n();
    let cols = arr.sweep();
    let m = arr.word().len();
    let g = f64::from(opt.event_gap.max(1));
    let h = f64::from(opt.track_gap.max(1));
    let margin = 30.0;
    let x0 = margin;
    let x_end = x0 + (2 * m + 1) as f64 * g;
    let y = |track: usize| margin + track as f64 * h;
    let col_start = |c: usize| x0 + (2 * c) as f64 * g;
    let col_end = |c: usize| x0 + (2 * c + 1) as f64 * g;
    let width = x_end + margin;
    let height = margin * 2.0 + n as f64 * h;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    )
    .unwrap();

    let mut labels: Vec<Label> = arr.left().lines().to_vec();
    labels.sort_unstable();
    for &label in &labels {
        let track_in = |col: &TrackOrder| col.lines().iter().position(|&a| a == label).unwrap();
        let mut pts = vec![(x0, y(track_in(&cols[0])))];
        for k in 1..=m {
            let (before, after) = (track_in(&cols[k - 1]), track_in(&cols[k]));
            if before != after {
                pts.push((col_end(k - 1), y(before)));
                pts.push((col_start(k), y(after)));
            }
        }
        pts.push((x_end, y(track_in(&cols[m]))));
        let points: Vec<String> = pts
            .iter()
            .map(|(px, py)| format!("{},{}", num(*px), num(*py)))
            .collect();
        writeln!(
            out,
            r#"  <polyline class="line" data-line="{label}" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            points.join(" ")
        )
        .unwrap();
    }

    for (side, col, x) in [
        ("left", &cols[0], x0 - 12.0),
        ("right", &cols[m], x_end + 12.0),
    ] {
        for (t, label) in col.lines().iter().enumerate() {
            writeln!(
                out,
                r#"  <text class="line-label {side}" x="{}" y="{}" text-anchor="middle" dominant-baseline="middle" font-size="12">{label}</text>"#,
                num(x),
                num(y(t))
            )
            .unwrap();
        }
    }

    if opt.show_chamber_labels {
        for span in chamber_spans(arr) {
            let cx = (col_start(span.columns.0) + col_end(span.columns.1)) / 2.0;
            let cy = y(span.depth - 1) + h / 2.0;
            let text = set_string(&span.set.iter().copied().collect());
            writeln!(
                out,
                r#"  <text class="chamber" x="{}" y="{}" text-anchor="middle" dominant-baseline="middle" font-size="10">{text}</text>"#,
                num(cx),
                num(cy)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::ArrangementWord;
    use std::collections::BTreeSet;

    fn arr(letters: &[usize], n: usize) -> Arrangement {
        Arrangement::with_identity(ArrangementWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn ascii_single_crossing() {
        assert_eq!(
            render_ascii(&arr(&[1], 2)),
            "1 --\\ /-- 2\n     X\n2 --/ \\-- 1\n"
        );
    }

    #[test]
    fn ascii_empty_word() {
        assert_eq!(render_ascii(&arr(&[], 3)), "1 -- 1\n\n2 -- 2\n\n3 -- 3\n");
    }

    #[test]
    fn chamber_spans_match_ideal() {
        for (letters, n) in [
            (&[1, 2, 1][..], 3),
            (&[1, 2, 1, 3, 1, 2, 1][..], 4),
            (&[1, 2, 1, 2][..], 3),
        ] {
            let a = arr(letters, n);
            let drawn: BTreeSet<String> = chamber_spans(&a)
                .iter()
                .map(|s| set_string(&s.set.iter().copied().collect()))
                .collect();
            let ideal: BTreeSet<String> = a
                .chamber_sets()
                .set_strings()
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
            assert_eq!(drawn, ideal);
        }
    }

    #[test]
    fn svg_single_line() {
        let svg = render_svg(&arr(&[], 1), &RenderOptions::default());
        assert_eq!(svg.matches("<polyline").count(), 1);
        // only the full set {1}; the empty label is never drawn
        assert_eq!(svg.matches("class=\"chamber\"").count(), 1);
        let bare = render_svg(
            &arr(&[], 1),
            &RenderOptions {
                show_chamber_labels: false,
                ..RenderOptions::default()
            },
        );
        assert_eq!(bare.matches("class=\"chamber\"").count(), 0);
    }

    #[test]
    fn svg_is_deterministic() {
        let a = arr(&[1, 2, 1, 3, 1, 2, 1], 4);
        let o = RenderOptions::default();
        assert_eq!(render_svg(&a, &o), render_svg(&a, &o));
        assert!(render_svg(&a, &o).contains(">24</text>"));
        assert!(render_svg(&a, &o).contains(">234</text>"));
    }
}
