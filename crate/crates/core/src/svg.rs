//! Minimal self-contained SVG line chart of concurrence and linear entropy against α².

use std::fmt::Write;

use crate::analysis::AnalysisRecord;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;

struct Series {
    name: &'static str,
    color: &'static str,
    pick: fn(&AnalysisRecord) -> f64,
}

const SERIES: [Series; 4] = [
    Series {
        name: "C(rho_15)",
        color: "#d62728",
        pick: |r| r.rho_15.concurrence,
    },
    Series {
        name: "S_L(rho_15)",
        color: "#1f77b4",
        pick: |r| r.rho_15.linear_entropy,
    },
    Series {
        name: "C(rho_14)",
        color: "#ff7f0e",
        pick: |r| r.rho_14.concurrence,
    },
    Series {
        name: "S_L(rho_14)",
        color: "#2ca02c",
        pick: |r| r.rho_14.linear_entropy,
    },
];

/// Values are plotted on a fixed [0, 1] vertical axis.
pub fn render_svg(records: &[AnalysisRecord]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, x1) = match (records.first(), records.last()) {
        (Some(a), Some(b)) if b.alpha2 > a.alpha2 => (a.alpha2, b.alpha2),
        _ => (0.0, 1.0),
    };
    let px = |a: f64| MARGIN + (a - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |v: f64| HEIGHT - MARGIN - v.clamp(0.0, 1.0) * (HEIGHT - 2.0 * MARGIN);

    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="1"><line x1="{m}" y1="{b}" x2="{r}" y2="{b}"/><line x1="{m}" y1="{b}" x2="{m}" y2="{m}"/></g>"#,
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    );
    for k in 0..=4 {
        let v = k as f64 / 4.0;
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="end">{v:.2}</text>"#,
            MARGIN - 6.0,
            py(v) + 4.0
        );
        let a = x0 + (x1 - x0) * v;
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{a:.3}</text>"#,
            px(a),
            HEIGHT - MARGIN + 16.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="middle">alpha^2</text>"#,
        WIDTH / 2.0,
        HEIGHT - 10.0
    );

    for (i, series) in SERIES.iter().enumerate() {
        let pts: Vec<String> = records
            .iter()
            .map(|r| format!("{:.2},{:.2}", px(r.alpha2), py((series.pick)(r))))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            series.color,
            pts.join(" ")
        );
        let ly = MARGIN + 14.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{ly:.1}" font-size="11" fill="{}">{}</text>"#,
            WIDTH - MARGIN - 90.0,
            series.color,
            series.name
        );
    }
    s.push_str("</svg>\n");
    s
}
