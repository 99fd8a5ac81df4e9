//! Two-panel SVG of a 2-D system: the right-hand-side rectangle with its
//! alpha-level boxes on the left, the solution parallelogram with the matching
//! cuts on the right. Crisp points are drawn as filled dots.
//!
//! Polygons carry their world coordinates in a `data-vertices` attribute so the
//! geometry can be read back without inverting the screen transform.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyNumber, Interval};
use crate::io::Problem;
use crate::linalg::Vector;
use crate::solver::{solve, CutParallelepiped, ParametricSolution};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 400.0;
const PANEL: f64 = 400.0;
const TITLE_BAND: f64 = 30.0;
const PAD: f64 = 10.0;
const MARGIN: f64 = 0.1;

/// Stroke pattern for the `k`-th drawn level: the 0-cut solid, then dotted,
/// dashed, and dash-dot for anything further.
fn dash(k: usize) -> Option<&'static str> {
    match k {
        0 => None,
        1 => Some("2,4"),
        2 => Some("8,4"),
        _ => Some("8,4,2,4"),
    }
}

struct Level {
    alpha: f64,
    rhs_box: [Vector; 4],
    solution: [Vector; 4],
}

/// Parallelogram corners in drawing order. Vertex indices follow the binary
/// counter, so the boundary runs 0, 1, 3, 2.
fn outline(cut: &CutParallelepiped) -> Result<[Vector; 4]> {
    let v = cut.vertices()?;
    Ok([v[0].clone(), v[1].clone(), v[3].clone(), v[2].clone()])
}

fn rect(x: Interval, y: Interval) -> [Vector; 4] {
    [
        Vector::new(vec![x.lo, y.lo]),
        Vector::new(vec![x.hi, y.lo]),
        Vector::new(vec![x.hi, y.hi]),
        Vector::new(vec![x.lo, y.hi]),
    ]
}

/// Maps world coordinates into one panel, flipping the y axis.
struct Frame {
    x0: f64,
    min: [f64; 2],
    scale: [f64; 2],
}

impl Frame {
    fn fit(x0: f64, points: &[&Vector]) -> Frame {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in points {
            for k in 0..2 {
                min[k] = min[k].min(p[k]);
                max[k] = max[k].max(p[k]);
            }
        }
        let inner = [PANEL - 2.0 * PAD, PANEL - TITLE_BAND - 2.0 * PAD];
        let mut scale = [1.0; 2];
        for k in 0..2 {
            let span = if max[k] > min[k] {
                max[k] - min[k]
            } else {
                1.0
            };
            min[k] -= MARGIN * span;
            scale[k] = inner[k] / ((1.0 + 2.0 * MARGIN) * span);
        }
        Frame { x0, min, scale }
    }

    fn map(&self, p: &Vector) -> (f64, f64) {
        let sx = self.x0 + PAD + (p[0] - self.min[0]) * self.scale[0];
        let sy = PANEL - PAD - (p[1] - self.min[1]) * self.scale[1];
        (sx, sy)
    }
}

fn polygon(out: &mut String, frame: &Frame, class: &str, alpha: f64, pts: &[Vector], k: usize) {
    let screen: Vec<String> = pts
        .iter()
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let world: Vec<String> = pts
        .iter()
        .map(|p| format!("{:.6},{:.6}", p[0], p[1]))
        .collect();
    let dash = dash(k)
        .map(|d| format!(" stroke-dasharray=\"{d}\""))
        .unwrap_or_default();
    let width = if k == 0 { 2.0 } else { 1.5 };
    let _ = writeln!(
        out,
        "  <polygon class=\"{class}\" data-alpha=\"{alpha}\" data-vertices=\"{}\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{width}\"{dash}/>",
        world.join(" "),
        screen.join(" ")
    );
}

fn dot(out: &mut String, frame: &Frame, class: &str, p: &Vector) {
    let (x, y) = frame.map(p);
    let _ = writeln!(
        out,
        "  <circle class=\"{class}\" data-point=\"{:.6},{:.6}\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"black\"/>",
        p[0], p[1]
    );
}

/// Renders the problem at alpha = 0 plus each of `alpha_levels`.
pub fn render(problem: &Problem, alpha_levels: &[f64]) -> Result<String> {
    let n = problem.dim();
    if n != 2 {
        return Err(Error::UnsupportedDimension {
            required: 2,
            found: n,
        });
    }
    let alphas: Vec<f64> = std::iter::once(0.0)
        .chain(alpha_levels.iter().copied())
        .collect();

    let (b_cr, x_cr, levels) = match problem {
        Problem::Triangular(sys) => {
            let sol = solve(sys)?;
            let levels = alphas
                .iter()
                .map(|&a| {
                    let cuts = sys
                        .rhs()
                        .iter()
                        .map(|f| f.alpha_cut(a))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Level {
                        alpha: a,
                        rhs_box: rect(cuts[0], cuts[1]),
                        solution: outline(&sol.alpha_cut(a)?)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (sol.b_cr().clone(), sol.x_cr().clone(), levels)
        }
        Problem::Parametric {
            system,
            b_cr_override,
        } => {
            let sol = ParametricSolution::new(system, b_cr_override.as_ref())?;
            let levels = alphas
                .iter()
                .map(|&a| {
                    let cuts = system
                        .rhs()
                        .iter()
                        .map(|f| f.alpha_cut(a))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Level {
                        alpha: a,
                        rhs_box: rect(cuts[0], cuts[1]),
                        solution: outline(&sol.alpha_cut(a)?)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (sol.b_cr().clone(), sol.x_cr().clone(), levels)
        }
    };

    let left_pts: Vec<&Vector> = levels
        .iter()
        .flat_map(|l| l.rhs_box.iter())
        .chain([&b_cr])
        .collect();
    let right_pts: Vec<&Vector> = levels
        .iter()
        .flat_map(|l| l.solution.iter())
        .chain([&x_cr])
        .collect();
    let left = Frame::fit(0.0, &left_pts);
    let right = Frame::fit(PANEL, &right_pts);

    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "  <line x1=\"{PANEL}\" y1=\"0\" x2=\"{PANEL}\" y2=\"{HEIGHT}\" stroke=\"#999999\" stroke-width=\"1\"/>"
    );
    let legend: Vec<String> = alphas.iter().map(|a| format!("{a}")).collect();
    let _ = writeln!(
        out,
        "  <text x=\"{PAD}\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">right-hand side (alpha = {})</text>",
        legend.join(", ")
    );
    let _ = writeln!(
        out,
        "  <text x=\"{}\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">solution set (alpha = {})</text>",
        PANEL + PAD,
        legend.join(", ")
    );

    for (k, level) in levels.iter().enumerate() {
        polygon(&mut out, &left, "rhs-cut", level.alpha, &level.rhs_box, k);
    }
    dot(&mut out, &left, "rhs-crisp", &b_cr);
    for (k, level) in levels.iter().enumerate() {
        polygon(
            &mut out,
            &right,
            "solution-cut",
            level.alpha,
            &level.solution,
            k,
        );
    }
    dot(&mut out, &right, "solution-crisp", &x_cr);
    out.push_str("</svg>\n");
    Ok(out)
}
