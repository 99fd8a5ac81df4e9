//! The `fls` subcommands. Each returns the text destined for stdout; files are
//! written only when an output path is given.

use std::path::Path;

use crate::error::{invalid, Error, Result};
use crate::fuzzy::FuzzyNumber;
use crate::io::{self, CutRecord, Problem, SolutionFile};
use crate::linalg::{dp_decompose, Vector};
use crate::solver::{
    extract_fuzzy_vector, membership_parametric_with_tolerance, solve, ParametricSolution,
    PossibilityResult, Side, DEFAULT_TOLERANCE,
};
use crate::svg;

/// Environment variable overriding the boundary tolerance of `check`.
pub const TOLERANCE_ENV: &str = "FLS_TOLERANCE";

/// Reads [`TOLERANCE_ENV`], falling back to [`DEFAULT_TOLERANCE`].
pub fn tolerance_from_env() -> Result<f64> {
    match std::env::var(TOLERANCE_ENV) {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(invalid(
                "tolerance",
                format!("{TOLERANCE_ENV}={s:?} is not a non-negative number"),
            )),
        },
    }
}

/// Parses a comma-separated list of reals such as `0.5,4.5,0.9`.
pub fn parse_csv(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| invalid("number list", format!("cannot parse {s:?} in {text:?}")))
        })
        .collect()
}

/// Possibilities and coefficients for humans: 12 decimals, trailing zeros
/// dropped, so `0.39999999999999997` prints as `0.4`.
pub fn format_real(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" | "" => "0".into(),
        s => s.into(),
    }
}

fn format_vector(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|&x| format_real(x)).collect();
    format!("({})", parts.join(", "))
}

fn verdict(result: PossibilityResult) -> String {
    match result {
        PossibilityResult::NotASolution => "not-a-solution".into(),
        PossibilityResult::Solution(p) => format!("solution possibility={}", format_real(p)),
    }
}

fn emit(text: String, output: Option<&Path>) -> Result<String> {
    match output {
        Some(path) => {
            io::write_file(path, &text)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(text),
    }
}

fn check_levels(alphas: &[f64]) -> Result<()> {
    alphas
        .iter()
        .find(|a| !(0.0..=1.0).contains(*a))
        .map_or(Ok(()), |&a| Err(Error::AlphaOutOfRange(a)))
}

/// `fls solve`: the solution file, with alpha-cuts for each requested level.
pub fn cmd_solve(input: &Path, output: Option<&Path>, alpha_levels: &[f64]) -> Result<String> {
    check_levels(alpha_levels)?;
    let file = match io::load_problem(input)? {
        Problem::Triangular(sys) => SolutionFile::from_triangular(&solve(&sys)?, alpha_levels)?,
        Problem::Parametric {
            system,
            b_cr_override,
        } => SolutionFile::from_parametric(
            &ParametricSolution::new(&system, b_cr_override.as_ref())?,
            alpha_levels,
        )?,
    };
    emit(file.to_canonical_string(), output)
}

/// `fls check`: whether `point` solves the system, and with what possibility.
/// In verbose mode the intermediate quantities precede the verdict.
pub fn cmd_check(input: &Path, point: &str, tol: f64, verbose: bool) -> Result<String> {
    let x = Vector::new(parse_csv(point)?);
    let mut out = String::new();
    let result = match io::load_problem(input)? {
        Problem::Triangular(sys) => {
            let sol = solve(&sys)?;
            let d = sol.decompose_with_tolerance(&x, tol)?;
            if verbose {
                let coeffs: Vec<String> = d
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let over = match c.side {
                            Side::Lower => format!(" v{}", i + 1),
                            Side::Upper => format!(" u{}", i + 1),
                            Side::Center => String::new(),
                        };
                        format!("{}{over}", format_real(c.value))
                    })
                    .collect();
                out.push_str(&format!("z = {}\n", format_vector(&d.z)));
                out.push_str(&format!("coefficients = {}\n", coeffs.join(", ")));
                out.push_str(&format!(
                    "max coefficient = {}\n",
                    format_real(d.max_coefficient())
                ));
            }
            d.possibility(tol)
        }
        Problem::Parametric { system, .. } => {
            if verbose {
                let k = system.matrix().mul_vec(&x)?;
                let alphas: Vec<f64> = system
                    .rhs()
                    .iter()
                    .zip(k.iter())
                    .map(|(f, &ki)| f.membership(ki))
                    .collect();
                out.push_str(&format!("k = {}\n", format_vector(&k)));
                out.push_str(&format!(
                    "coordinate possibilities = {}\n",
                    format_vector(&alphas)
                ));
            }
            membership_parametric_with_tolerance(&system, &x, tol)?
        }
    };
    out.push_str(&verdict(result));
    out.push('\n');
    Ok(out)
}

/// `fls alpha-cut`: the `2^n` vertices of one cut.
pub fn cmd_alpha_cut(input: &Path, alpha: f64, output: Option<&Path>) -> Result<String> {
    let cut = match io::load_problem(input)? {
        Problem::Triangular(sys) => solve(&sys)?.alpha_cut(alpha)?,
        Problem::Parametric {
            system,
            b_cr_override,
        } => ParametricSolution::new(&system, b_cr_override.as_ref())?.alpha_cut(alpha)?,
    };
    emit(io::cut_to_string(&CutRecord::from_cut(&cut)?), output)
}

/// `fls classify`: the `D P` factors when the matrix is a generalized
/// permutation matrix (plus the fuzzy-number solution for triangular
/// systems), `not-DP` otherwise.
pub fn cmd_classify(input: &Path) -> Result<String> {
    let problem = io::load_problem(input)?;
    let matrix = problem.matrix();
    let Some(dp) = dp_decompose(matrix) else {
        matrix.invert()?;
        return Ok("not-DP\n".into());
    };
    let mut out = String::from("DP\n");
    out.push_str(&format!("D = diag{}\n", format_vector(&dp.diag)));
    out.push_str("P =\n");
    for row in dp.permutation_matrix().rows() {
        let cells: Vec<String> = row.iter().map(|&v| format_real(v)).collect();
        out.push_str(&format!("  {}\n", cells.join(" ")));
    }
    if let Problem::Triangular(sys) = &problem {
        if let Some(x) = extract_fuzzy_vector(sys)? {
            out.push_str("solution:\n");
            for (i, t) in x.iter().enumerate() {
                let (a, c, b) = t.as_tuple();
                out.push_str(&format!("  x{} = {}\n", i + 1, format_vector(&[a, c, b])));
            }
        }
    }
    Ok(out)
}

/// `fls plot`: two-panel SVG for 2-D systems.
pub fn cmd_plot(input: &Path, alpha_levels: &[f64], output: Option<&Path>) -> Result<String> {
    check_levels(alpha_levels)?;
    let problem = io::load_problem(input)?;
    emit(svg::render(&problem, alpha_levels)?, output)
}
