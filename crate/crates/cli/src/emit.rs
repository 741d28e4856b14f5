//! Output assembly: the stable CSV schema, the mirrored JSON records, and
//! the hand-emitted SVG chart.
//!
//! Numbers are rendered with `{:.16e}` (17 significant digits), enough to
//! round-trip an f64 exactly; missing values are empty CSV fields or JSON
//! nulls, never NaN text. Everything here is deterministic byte output.

use num_complex::Complex64;
use surfinv::domains::InvariantSample;

/// One output row. `None` marks an invariant that is undefined on the
/// domain at hand (e.g. the squeezing function for a bare Fuchsian group).
#[derive(Debug, Clone, Copy)]
pub struct Record {
    pub z: Complex64,
    pub s: Option<f64>,
    pub hc: Option<f64>,
    pub hk: Option<f64>,
    pub mc: Option<f64>,
    pub mk: Option<f64>,
}

impl From<InvariantSample> for Record {
    fn from(s: InvariantSample) -> Self {
        Record {
            z: s.z,
            s: Some(s.s),
            hc: Some(s.hc),
            hk: s.hk,
            mc: Some(s.mc),
            mk: s.mk,
        }
    }
}

impl Record {
    /// A record carrying only the Kobayashi Fridman value, for domains
    /// given as a group with no distinguished embedding.
    pub fn fridman_only(z: Complex64, hk: f64) -> Self {
        Record {
            z,
            s: None,
            hc: None,
            hk: Some(hk),
            mc: None,
            mk: None,
        }
    }
}

/// 17-significant-digit scientific rendering; round-trips any finite f64.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn opt_json(v: Option<f64>) -> String {
    v.map(num).unwrap_or_else(|| "null".into())
}

pub const CSV_HEADER: &str = "z_re,z_im,abs_z,S,Hc,Hk,mc,mk";

pub fn csv(records: &[Record]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            num(r.z.re),
            num(r.z.im),
            num(r.z.norm()),
            opt(r.s),
            opt(r.hc),
            opt(r.hk),
            opt(r.mc),
            opt(r.mk),
        ));
    }
    out
}

/// JSON mirror of the CSV schema: an array of objects, one per sample.
pub fn json(records: &[Record]) -> String {
    let mut out = String::from("[\n");
    for (i, r) in records.iter().enumerate() {
        out.push_str(&format!(
            "  {{\"z_re\": {}, \"z_im\": {}, \"abs_z\": {}, \"S\": {}, \"Hc\": {}, \
             \"Hk\": {}, \"mc\": {}, \"mk\": {}}}{}\n",
            num(r.z.re),
            num(r.z.im),
            num(r.z.norm()),
            opt_json(r.s),
            opt_json(r.hc),
            opt_json(r.hk),
            opt_json(r.mc),
            opt_json(r.mk),
            if i + 1 < records.len() { "," } else { "" },
        ));
    }
    out.push_str("]\n");
    out
}

/// The figure CSV: modulus and the three curves, smallest to largest.
pub fn figure_csv(rows: &[(f64, f64, f64, f64)]) -> String {
    let mut out = String::from("abs_z,S,Hc,Hk\n");
    for &(x, s, hc, hk) in rows {
        out.push_str(&format!("{},{},{},{}\n", num(x), num(s), num(hc), num(hk)));
    }
    out
}

// --- SVG ------------------------------------------------------------------

const W: f64 = 800.0;
const H: f64 = 600.0;
const ML: f64 = 70.0; // left margin
const MR: f64 = 20.0;
const MT: f64 = 20.0;
const MB: f64 = 50.0;

fn sx(x: f64) -> f64 {
    ML + x.clamp(0.0, 1.0) * (W - ML - MR)
}

fn sy(y: f64) -> f64 {
    H - MB - y.clamp(0.0, 1.0) * (H - MT - MB)
}

fn polyline(points: impl Iterator<Item = (f64, f64)>) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{}{:.2} {:.2} ", cmd, sx(x), sy(y)));
    }
    d.pop();
    d
}

/// Hand-emitted line chart of the three invariants against |z|: linear
/// axes on [0,1]², the largest curve solid, the middle dashed, the
/// smallest dotted. Exactly three `<path>` elements; axes and legend use
/// `<line>`, `<rect>`, and `<text>` so the curve count is unambiguous.
pub fn figure_svg(rows: &[(f64, f64, f64, f64)], r: f64) -> String {
    let mut svg = String::with_capacity(32 * 1024);
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" \
         font-family=\"monospace\" font-size=\"14\">\n"
    ));
    svg.push_str("<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n");

    // frame and ticks
    svg.push_str(&format!(
        "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" \
         fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n",
        ML,
        MT,
        W - ML - MR,
        H - MT - MB
    ));
    for k in 0..=5 {
        let t = k as f64 / 5.0;
        let label = format!("{:.1}", t);
        svg.push_str(&format!(
            "<line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{0:.2}\" y2=\"{2:.2}\" stroke=\"black\"/>\n",
            sx(t),
            H - MB,
            H - MB + 6.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{label}</text>\n",
            sx(t),
            H - MB + 24.0
        ));
        svg.push_str(&format!(
            "<line x1=\"{1:.2}\" y1=\"{0:.2}\" x2=\"{2:.2}\" y2=\"{0:.2}\" stroke=\"black\"/>\n",
            sy(t),
            ML - 6.0,
            ML
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{label}</text>\n",
            ML - 10.0,
            sy(t) + 5.0
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">|z|</text>\n",
        sx(0.5),
        H - 8.0
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"start\">invariants on the annulus, r = {r}</text>\n",
        ML + 10.0,
        MT + 20.0
    ));

    // the three curves: S dotted, Hc dashed, Hk solid
    let curves: [(&str, &str, Box<dyn Fn(&(f64, f64, f64, f64)) -> f64>); 3] = [
        ("#1e8449", "stroke-dasharray=\"2 4\" ", Box::new(|r| r.1)),
        ("#c0392b", "stroke-dasharray=\"9 5\" ", Box::new(|r| r.2)),
        ("#1f3a93", "", Box::new(|r| r.3)),
    ];
    for (color, dash, pick) in &curves {
        let d = polyline(rows.iter().map(|row| (row.0, pick(row))));
        svg.push_str(&format!(
            "<path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" {dash}/>\n"
        ));
    }

    // legend, top-left inside the frame
    let legend = [
        ("S (dot)", "#1e8449", "stroke-dasharray=\"2 4\" "),
        ("Hc (dash)", "#c0392b", "stroke-dasharray=\"9 5\" "),
        ("Hk (solid)", "#1f3a93", ""),
    ];
    for (i, (name, color, dash)) in legend.iter().enumerate() {
        let y = MT + 46.0 + 22.0 * i as f64;
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
             stroke=\"{color}\" stroke-width=\"2\" {dash}/>\n",
            ML + 10.0,
            ML + 52.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\">{name}</text>\n",
            ML + 60.0,
            y + 5.0
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
