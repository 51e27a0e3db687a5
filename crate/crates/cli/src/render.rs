//! Deterministic SVG rendering of conic configurations.
//!
//! Drawing happens in the circle chart of the conic: the projective change
//! of coordinates u = (z2-z0)/2, v = z1, w = (z2+z0)/2 carries `z0*z2 = z1^2`
//! to the unit circle u^2 + v^2 = w^2, where every real parameter point
//! (including inf) lands at a finite position. Coordinates stay rational
//! until the final write, where they are rounded to a fixed six decimals;
//! that is the one lossy boundary of the whole program.

use std::fmt::Write as _;

use hexagrammum::{
    crosshair_points, eval_pascal, kirkman_triples, polar_triangle, steiner_triples, tau, Letter,
    P1Point, PascalSymbol, ProjLine, ProjPoint, Rational, Sextuple,
};

pub struct RenderOptions {
    pub size: u32,
    pub stroke_width: Option<String>,
    pub kirkman: bool,
    pub steiner: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            size: 800,
            stroke_width: None,
            kirkman: false,
            steiner: false,
        }
    }
}

/// View geometry and style units for one drawing mode.
struct Frame {
    /// Lines and points are clipped against |x|, |y| <= extent.
    extent: Rational,
    view: &'static str,
    stroke: String,
    point_radius: &'static str,
    marker_radius: &'static str,
    font_size: &'static str,
    label_offset: Rational,
}

/// Tight frame around the conic, for sextuple drawings.
fn conic_frame(user_stroke: Option<&str>) -> Frame {
    Frame {
        extent: Rational::new(23, 20),
        view: "-1.2 -1.2 2.4 2.4",
        stroke: user_stroke.unwrap_or("0.012").to_string(),
        point_radius: "0.025",
        marker_radius: "0.016",
        font_size: "0.09",
        label_offset: Rational::new(1, 25),
    }
}

/// Wide frame for the polar-triangle configuration, whose poles, center and
/// axis live outside the conic.
fn triangle_frame(user_stroke: Option<&str>) -> Frame {
    Frame {
        extent: Rational::new(31, 10),
        view: "-3.2 -3.2 6.4 6.4",
        stroke: user_stroke.unwrap_or("0.03").to_string(),
        point_radius: "0.06",
        marker_radius: "0.045",
        font_size: "0.22",
        label_offset: Rational::new(1, 10),
    }
}

/// Rounds to exactly six decimals, half away from zero.
fn decimal6(r: &Rational) -> String {
    r.to_decimal(6)
}

/// A finite chart position with exact coordinates.
#[derive(Clone, PartialEq)]
struct ChartPoint {
    x: Rational,
    y: Rational,
}

/// Chart position of a plane point; `None` at the chart's line at infinity.
fn to_chart(p: &ProjPoint) -> Option<ChartPoint> {
    let [z0, z1, z2] = p.coords();
    let w = &z0 + &z2;
    if w.is_zero() {
        return None;
    }
    let u = &z2 - &z0;
    let x = &u / &w;
    let y = &(&Rational::from_int(2) * &z1) / &w;
    Some(ChartPoint { x, y })
}

/// Chart coefficients (a, b, c) of a plane line: a x + b y + c = 0.
fn line_chart(l: &ProjLine) -> (Rational, Rational, Rational) {
    let [u0, u1, u2] = l.coords();
    (&u2 - &u0, u1, &u0 + &u2)
}

/// Accumulates SVG elements; anything outside the frame is skipped and the
/// scene is annotated as empty when no content element was drawn.
struct Scene {
    frame: Frame,
    body: String,
    content_elements: usize,
}

impl Scene {
    fn new(frame: Frame) -> Self {
        Scene {
            frame,
            body: String::new(),
            content_elements: 0,
        }
    }

    fn in_view(&self, p: &ChartPoint) -> bool {
        let b = &self.frame.extent;
        let lo = -b;
        p.x <= *b && p.x >= lo && p.y <= *b && p.y >= lo
    }

    /// Clips `a x + b y + c = 0` against the frame; segment endpoints.
    fn clip_line(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
    ) -> Option<(ChartPoint, ChartPoint)> {
        let bound = self.frame.extent.clone();
        let lo = -&bound;
        let mut hits: Vec<ChartPoint> = Vec::new();
        if !a.is_zero() {
            for y in [lo.clone(), bound.clone()] {
                let x = &(-&(&(b * &y) + c)) / a;
                let p = ChartPoint { x, y };
                if self.in_view(&p) && !hits.contains(&p) {
                    hits.push(p);
                }
            }
        }
        if !b.is_zero() {
            for x in [lo.clone(), bound.clone()] {
                let y = &(-&(&(a * &x) + c)) / b;
                let p = ChartPoint { x, y };
                if self.in_view(&p) && !hits.contains(&p) {
                    hits.push(p);
                }
            }
        }
        if hits.len() < 2 {
            return None;
        }
        Some((hits[0].clone(), hits[1].clone()))
    }

    fn circle_frame(&mut self) {
        let _ = writeln!(
            self.body,
            r##"  <circle cx="0" cy="0" r="1" fill="none" stroke="#999999" stroke-width="{}"/>"##,
            self.frame.stroke
        );
    }

    fn line(&mut self, l: &ProjLine, class: &str, stroke: &str) {
        let (a, b, c) = line_chart(l);
        if a.is_zero() && b.is_zero() {
            return; // the chart's line at infinity
        }
        if let Some((p, q)) = self.clip_line(&a, &b, &c) {
            let _ = writeln!(
                self.body,
                r##"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{}"/>"##,
                decimal6(&p.x),
                decimal6(&-&p.y),
                decimal6(&q.x),
                decimal6(&-&q.y),
                self.frame.stroke
            );
            self.content_elements += 1;
        }
    }

    fn point(&mut self, p: &ProjPoint, class: &str, fill: &str, small: bool) {
        let radius = if small {
            self.frame.marker_radius
        } else {
            self.frame.point_radius
        };
        if let Some(cp) = to_chart(p) {
            if self.in_view(&cp) {
                let _ = writeln!(
                    self.body,
                    r##"  <circle class="{class}" cx="{}" cy="{}" r="{radius}" fill="{fill}"/>"##,
                    decimal6(&cp.x),
                    decimal6(&-&cp.y),
                );
                self.content_elements += 1;
            }
        }
    }

    fn label(&mut self, p: &ProjPoint, text: &str) {
        if let Some(cp) = to_chart(p) {
            if self.in_view(&cp) {
                let dx = &self.frame.label_offset;
                let _ = writeln!(
                    self.body,
                    r##"  <text x="{}" y="{}" font-size="{}" font-family="sans-serif" fill="#111111">{text}</text>"##,
                    decimal6(&(&cp.x + dx)),
                    decimal6(&-&(&cp.y + dx)),
                    self.frame.font_size,
                );
                self.content_elements += 1;
            }
        }
    }

    fn finish(self, size: u32) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="{}">"#,
            self.frame.view
        );
        if self.content_elements == 0 {
            let _ = writeln!(
                out,
                "  <!-- warning: empty scene; nothing renderable in view -->"
            );
        }
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// Renders a sextuple: the conic, the six labelled points, and optionally
/// one symbol's cross-hair points and Pascal line plus Kirkman/Steiner
/// markers.
pub fn render_sextuple(
    h: &Sextuple,
    symbol: Option<&PascalSymbol>,
    opts: &RenderOptions,
) -> String {
    let mut scene = Scene::new(conic_frame(opts.stroke_width.as_deref()));
    scene.circle_frame();

    if let Some(s) = symbol {
        if let Some(line) = eval_pascal(h, s) {
            scene.line(&line, "pascal", "#c02020");
        }
        for p in crosshair_points(h, s).iter().flatten() {
            scene.point(p, "crosshair", "#2040c0", true);
        }
    }
    if opts.kirkman {
        for kt in kirkman_triples() {
            if let Some(p) = hexagrammum::hexagram::kirkman_point(h, kt) {
                scene.point(&p, "kirkman", "#208020", true);
            }
        }
    }
    if opts.steiner {
        for st in steiner_triples() {
            if let Some(p) = hexagrammum::hexagram::steiner_point(h, st) {
                scene.point(&p, "steiner", "#806020", true);
            }
        }
    }
    // conic points last so they sit on top; coincident letters share a label
    let mut groups: Vec<(P1Point, String)> = Vec::new();
    for l in Letter::ALL {
        let v = h.get(l).clone();
        match groups.iter_mut().find(|(p, _)| *p == v) {
            Some((_, text)) => {
                text.push('=');
                text.push(l.as_char());
            }
            None => groups.push((v, l.to_string())),
        }
    }
    for (v, text) in &groups {
        let p = tau(v);
        scene.point(&p, "conic-point", "#111111", false);
        scene.label(&p, text);
    }
    scene.finish(opts.size)
}

/// Renders a row-matched configuration: P, Q, R on the conic, the polar
/// triangle, the perspectivity connectors and center, and the axis.
pub fn render_triangle(
    p: &P1Point,
    q: &P1Point,
    r: &P1Point,
    opts: &RenderOptions,
) -> Result<String, hexagrammum::Error> {
    let t = polar_triangle(p, q, r)?;
    let taus = [tau(p), tau(q), tau(r)];
    let mut scene = Scene::new(triangle_frame(opts.stroke_width.as_deref()));
    scene.circle_frame();
    scene.line(&t.perspectrix, "ch-line", "#c02020");
    for (i, pole) in t.poles.iter().enumerate() {
        let connector = hexagrammum::join(&taus[i], pole)?;
        scene.line(&connector, "connector", "#2040c0");
    }
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        if t.poles[i] != t.poles[j] {
            let side = hexagrammum::join(&t.poles[i], &t.poles[j])?;
            scene.line(&side, "polar-triangle", "#208020");
        }
    }
    scene.point(&t.perspector, "perspector", "#c02020", false);
    scene.label(&t.perspector, "CH");
    for (pt, name) in t.poles.iter().zip(["P'", "Q'", "R'"]) {
        scene.point(pt, "pole", "#208020", true);
        scene.label(pt, name);
    }
    for (pt, name) in taus.iter().zip(["P", "Q", "R"]) {
        scene.point(pt, "conic-point", "#111111", false);
        scene.label(pt, name);
    }
    Ok(scene.finish(opts.size))
}
