//! Self-contained SVG line plots: one polyline per series, linear axes,
//! legend from the series labels. Output is byte-deterministic for
//! identical input.

use std::fs;
use std::path::Path;

use crate::io::FormatError;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 48.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
];

/// A labelled sequence of y-values plotted against the sample index.
pub type Series = (String, Vec<f64>);

fn coord(v: f64) -> String {
    format!("{v:.3}")
}

/// Writes a line plot of the given series. The x axis is the sample index;
/// the y axis is autoscaled to the data range with a 5% margin. Empty
/// series are skipped; at least one series must be non-empty.
pub fn emit_svg_plot(series: &[Series], path: &Path) -> Result<(), FormatError> {
    if series.iter().all(|(_, data)| data.is_empty()) {
        return Err(FormatError::EmptySeries);
    }

    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    let mut x_max = 0usize;
    for (_, data) in series {
        for v in data {
            y_min = y_min.min(*v);
            y_max = y_max.max(*v);
        }
        x_max = x_max.max(data.len().saturating_sub(1));
    }
    if y_min == y_max {
        y_min -= 0.5;
        y_max += 0.5;
    } else {
        let margin = 0.05 * (y_max - y_min);
        y_min -= margin;
        y_max += margin;
    }

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let x_of = |i: usize| {
        if x_max == 0 {
            MARGIN_LEFT
        } else {
            MARGIN_LEFT + plot_w * i as f64 / x_max as f64
        }
    };
    let y_of = |v: f64| MARGIN_TOP + plot_h * (y_max - v) / (y_max - y_min);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));

    // Axes.
    let x0 = coord(MARGIN_LEFT);
    let y0 = coord(HEIGHT - MARGIN_BOTTOM);
    let x1 = coord(WIDTH - MARGIN_RIGHT);
    let y1 = coord(MARGIN_TOP);
    svg.push_str(&format!(
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n"
    ));

    // Axis labels and range ticks.
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">index</text>\n",
        coord(MARGIN_LEFT + plot_w / 2.0),
        coord(HEIGHT - 10.0)
    ));
    svg.push_str(&format!(
        "  <text x=\"16\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\" \
         transform=\"rotate(-90 16 {})\">value</text>\n",
        coord(MARGIN_TOP + plot_h / 2.0),
        coord(MARGIN_TOP + plot_h / 2.0)
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
        coord(MARGIN_LEFT - 6.0),
        coord(y_of(y_max) + 4.0),
        y_max
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
        coord(MARGIN_LEFT - 6.0),
        coord(y_of(y_min) + 4.0),
        y_min
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">0</text>\n",
        coord(x_of(0)),
        coord(HEIGHT - MARGIN_BOTTOM + 16.0)
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
        coord(x_of(x_max)),
        coord(HEIGHT - MARGIN_BOTTOM + 16.0),
        x_max
    ));

    // Data polylines.
    for (idx, (_, data)) in series.iter().enumerate() {
        if data.is_empty() {
            continue;
        }
        let color = PALETTE[idx % PALETTE.len()];
        let points: Vec<String> = data
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{},{}", coord(x_of(i)), coord(y_of(*v))))
            .collect();
        svg.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            points.join(" ")
        ));
    }

    // Legend, one row per series (including skipped empty ones, so labels
    // and colors stay aligned with the input order).
    for (idx, (label, _)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let y = MARGIN_TOP + 8.0 + 18.0 * idx as f64;
        svg.push_str(&format!(
            "  <rect x=\"{}\" y=\"{}\" width=\"18\" height=\"4\" fill=\"{color}\"/>\n",
            coord(WIDTH - MARGIN_RIGHT - 150.0),
            coord(y)
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>\n",
            coord(WIDTH - MARGIN_RIGHT - 126.0),
            coord(y + 6.0),
            escape_text(label)
        ));
    }

    svg.push_str("</svg>\n");
    fs::write(path, svg)?;
    Ok(())
}

fn escape_text(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
