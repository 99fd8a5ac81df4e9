//! Problem and solution files.
//!
//! Both are JSON documents tagged with `"format_version": 1`. Reals are
//! written with 17 significant digits so that reading a file back yields the
//! same `f64` values and writing it again yields the same bytes.
//!
//! Problem file:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "matrix": [[3, 5], [1, -2]],
//!   "rhs": [
//!     {"kind": "triangular", "l": -2, "m": -1, "r": 1},
//!     {"kind": "parametric", "alphas": [0, 1], "left": [5, 7], "right": [8, 7]}
//!   ],
//!   "b_cr_override": [-1, 7]
//! }
//! ```
//!
//! All right-hand-side records of one file must share a kind, and
//! `b_cr_override` is accepted for parametric systems only.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyNumber, ParametricFuzzyNumber, TriangularFuzzyNumber};
use crate::linalg::{Matrix, Vector};
use crate::solver::{
    CutParallelepiped, FuzzyLinearSystem, ParallelepipedSolution, ParametricSolution,
    ParametricSystem, TriangularSystem,
};

pub const FORMAT_VERSION: u32 = 1;

/// A loaded problem: the system plus, for parametric systems, an optional
/// choice of crisp right-hand side.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    Triangular(TriangularSystem),
    Parametric {
        system: ParametricSystem,
        b_cr_override: Option<Vector>,
    },
}

impl Problem {
    pub fn dim(&self) -> usize {
        match self {
            Problem::Triangular(sys) => sys.dim(),
            Problem::Parametric { system, .. } => system.dim(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        match self {
            Problem::Triangular(sys) => sys.matrix(),
            Problem::Parametric { system, .. } => system.matrix(),
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawRhs {
    Triangular {
        l: f64,
        m: f64,
        r: f64,
    },
    Parametric {
        alphas: Vec<f64>,
        left: Vec<f64>,
        right: Vec<f64>,
    },
}

/// A validated right-hand-side record. Validation happens during
/// deserialization so errors carry the record's position in the file.
#[derive(Debug, Clone, PartialEq)]
enum RhsEntry {
    Triangular(TriangularFuzzyNumber),
    Parametric(ParametricFuzzyNumber),
}

impl<'de> Deserialize<'de> for RhsEntry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match RawRhs::deserialize(d)? {
            RawRhs::Triangular { l, m, r } => {
                if l > m {
                    return Err(D::Error::custom(format!(
                        "rhs field `l` ({l}) exceeds `m` ({m})"
                    )));
                }
                if m > r {
                    return Err(D::Error::custom(format!(
                        "rhs field `m` ({m}) exceeds `r` ({r})"
                    )));
                }
                TriangularFuzzyNumber::new(l, m, r)
                    .map(RhsEntry::Triangular)
                    .map_err(D::Error::custom)
            }
            RawRhs::Parametric {
                alphas,
                left,
                right,
            } => ParametricFuzzyNumber::new(alphas, left, right)
                .map(RhsEntry::Parametric)
                .map_err(|e| D::Error::custom(format!("rhs fields `alphas`/`left`/`right`: {e}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    format_version: u32,
    matrix: Vec<Vec<f64>>,
    rhs: Vec<RhsEntry>,
    #[serde(default)]
    b_cr_override: Option<Vec<f64>>,
}

fn format_error(context: &str, e: impl std::fmt::Display) -> Error {
    Error::Format(format!("{context}: {e}"))
}

fn check_version(version: u32) -> Result<()> {
    if version != FORMAT_VERSION {
        return Err(Error::Format(format!(
            "field `format_version`: unsupported version {version}, expected {FORMAT_VERSION}"
        )));
    }
    Ok(())
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let raw: RawProblem =
        serde_json::from_str(text).map_err(|e| format_error("problem file", e))?;
    check_version(raw.format_version)?;
    let matrix = Matrix::from_rows(&raw.matrix).map_err(|e| format_error("field `matrix`", e))?;
    if raw.rhs.len() != matrix.dim() {
        return Err(format_error(
            "field `rhs`",
            Error::DimensionMismatch {
                expected: matrix.dim(),
                found: raw.rhs.len(),
            },
        ));
    }

    let mut triangular = Vec::new();
    let mut parametric = Vec::new();
    for entry in raw.rhs {
        match entry {
            RhsEntry::Triangular(t) => triangular.push(t),
            RhsEntry::Parametric(p) => parametric.push(p),
        }
    }
    if !triangular.is_empty() && !parametric.is_empty() {
        return Err(Error::Format(
            "field `rhs`: records must all be triangular or all parametric".into(),
        ));
    }

    if parametric.is_empty() {
        if raw.b_cr_override.is_some() {
            return Err(Error::Format(
                "field `b_cr_override`: only allowed for parametric right-hand sides".into(),
            ));
        }
        return Ok(Problem::Triangular(FuzzyLinearSystem::new(
            matrix, triangular,
        )?));
    }

    let system = FuzzyLinearSystem::new(matrix, parametric)?;
    let b_cr_override = match raw.b_cr_override {
        None => None,
        Some(b) => {
            if b.len() != system.dim() {
                return Err(format_error(
                    "field `b_cr_override`",
                    Error::DimensionMismatch {
                        expected: system.dim(),
                        found: b.len(),
                    },
                ));
            }
            for (i, (f, &v)) in system.rhs().iter().zip(&b).enumerate() {
                if !f.core().contains(v) {
                    return Err(Error::Format(format!(
                        "field `b_cr_override`: entry {i} = {v} lies outside the core {}",
                        f.core()
                    )));
                }
            }
            Some(Vector::new(b))
        }
    };
    Ok(Problem::Parametric {
        system,
        b_cr_override,
    })
}

pub fn load_problem(path: impl AsRef<Path>) -> Result<Problem> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| match e {
        Error::Format(msg) => Error::Format(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn problem_to_string(problem: &Problem) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format_version\": {FORMAT_VERSION},");
    let _ = writeln!(
        out,
        "  \"matrix\": {},",
        real_matrix(&problem.matrix().to_rows(), 2)
    );
    out.push_str("  \"rhs\": [\n");
    let records: Vec<String> = match problem {
        Problem::Triangular(sys) => sys
            .rhs()
            .iter()
            .map(|t| {
                format!(
                    "    {{\"kind\": \"triangular\", \"l\": {}, \"m\": {}, \"r\": {}}}",
                    real(t.left()),
                    real(t.peak()),
                    real(t.right())
                )
            })
            .collect(),
        Problem::Parametric { system, .. } => system
            .rhs()
            .iter()
            .map(|p| {
                format!(
                    "    {{\"kind\": \"parametric\", \"alphas\": {}, \"left\": {}, \"right\": {}}}",
                    real_array(p.alphas()),
                    real_array(p.left_values()),
                    real_array(p.right_values())
                )
            })
            .collect(),
    };
    out.push_str(&records.join(",\n"));
    out.push_str("\n  ]");
    if let Problem::Parametric {
        b_cr_override: Some(b),
        ..
    } = problem
    {
        let _ = write!(out, ",\n  \"b_cr_override\": {}", real_array(b));
    }
    out.push_str("\n}\n");
    out
}

pub fn save_problem(problem: &Problem, path: impl AsRef<Path>) -> Result<()> {
    write_file(path.as_ref(), &problem_to_string(problem))
}

/// One alpha-cut as stored in files.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutRecord {
    pub alpha: f64,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub vertices: Vec<Vec<f64>>,
}

impl CutRecord {
    pub fn from_cut(cut: &CutParallelepiped) -> Result<Self> {
        Ok(CutRecord {
            alpha: cut.alpha,
            lower: cut.lower.clone(),
            upper: cut.upper.clone(),
            vertices: cut
                .vertices()?
                .into_iter()
                .map(Vector::into_inner)
                .collect(),
        })
    }

    fn write(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        let _ = writeln!(out, "{pad}\"alpha\": {},", real(self.alpha));
        let _ = writeln!(out, "{pad}\"lower\": {},", real_array(&self.lower));
        let _ = writeln!(out, "{pad}\"upper\": {},", real_array(&self.upper));
        let _ = writeln!(
            out,
            "{pad}\"vertices\": {}",
            real_matrix(&self.vertices, indent)
        );
    }
}

/// Stand-alone alpha-cut document written by `fls alpha-cut`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutFile {
    pub format_version: u32,
    #[serde(flatten)]
    pub cut: CutRecord,
}

pub fn cut_to_string(cut: &CutRecord) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"format_version\": {FORMAT_VERSION},");
    cut.write(&mut out, 2);
    out.push_str("}\n");
    out
}

/// Serialized solution set: crisp solution, the frame `A^-1 e_i`, the
/// coefficient intervals of the 0-cut, and optional alpha-cuts.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub format_version: u32,
    pub kind: String,
    pub dimension: usize,
    pub x_cr: Vec<f64>,
    pub b_cr: Vec<f64>,
    pub inverse_columns: Vec<Vec<f64>>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    #[serde(default)]
    pub alpha_cuts: Vec<CutRecord>,
}

impl SolutionFile {
    pub fn from_triangular(sol: &ParallelepipedSolution, alphas: &[f64]) -> Result<Self> {
        let alpha_cuts = alphas
            .iter()
            .map(|&a| CutRecord::from_cut(&sol.alpha_cut(a)?))
            .collect::<Result<_>>()?;
        Ok(SolutionFile {
            format_version: FORMAT_VERSION,
            kind: "triangular".into(),
            dimension: sol.dim(),
            x_cr: sol.x_cr().to_vec(),
            b_cr: sol.b_cr().to_vec(),
            inverse_columns: sol.columns().into_iter().map(Vector::into_inner).collect(),
            lower: sol.lower().to_vec(),
            upper: sol.upper().to_vec(),
            alpha_cuts,
        })
    }

    /// For parametric systems `lower`/`upper` describe the 0-cut only; each
    /// requested level is computed separately.
    pub fn from_parametric(sol: &ParametricSolution, alphas: &[f64]) -> Result<Self> {
        let support = sol.alpha_cut(0.0)?;
        let alpha_cuts = alphas
            .iter()
            .map(|&a| CutRecord::from_cut(&sol.alpha_cut(a)?))
            .collect::<Result<_>>()?;
        Ok(SolutionFile {
            format_version: FORMAT_VERSION,
            kind: "parametric".into(),
            dimension: support.dim(),
            x_cr: sol.x_cr().to_vec(),
            b_cr: sol.b_cr().to_vec(),
            inverse_columns: support
                .columns
                .into_iter()
                .map(Vector::into_inner)
                .collect(),
            lower: support.lower,
            upper: support.upper,
            alpha_cuts,
        })
    }

    fn validate(&self) -> Result<()> {
        check_version(self.format_version)?;
        if self.kind != "triangular" && self.kind != "parametric" {
            return Err(Error::Format(format!(
                "field `kind`: unknown kind {:?}",
                self.kind
            )));
        }
        let n = self.dimension;
        let check = |name: &str, len: usize| {
            if len == n {
                Ok(())
            } else {
                Err(format_error(
                    &format!("field `{name}`"),
                    Error::DimensionMismatch {
                        expected: n,
                        found: len,
                    },
                ))
            }
        };
        check("x_cr", self.x_cr.len())?;
        check("b_cr", self.b_cr.len())?;
        check("inverse_columns", self.inverse_columns.len())?;
        for c in &self.inverse_columns {
            check("inverse_columns", c.len())?;
        }
        check("lower", self.lower.len())?;
        check("upper", self.upper.len())?;
        for cut in &self.alpha_cuts {
            check("alpha_cuts.lower", cut.lower.len())?;
            check("alpha_cuts.upper", cut.upper.len())?;
            for v in &cut.vertices {
                check("alpha_cuts.vertices", v.len())?;
            }
        }
        Ok(())
    }

    pub fn to_canonical_string(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"format_version\": {},", self.format_version);
        let _ = writeln!(out, "  \"kind\": \"{}\",", self.kind);
        let _ = writeln!(out, "  \"dimension\": {},", self.dimension);
        let _ = writeln!(out, "  \"x_cr\": {},", real_array(&self.x_cr));
        let _ = writeln!(out, "  \"b_cr\": {},", real_array(&self.b_cr));
        let _ = writeln!(
            out,
            "  \"inverse_columns\": {},",
            real_matrix(&self.inverse_columns, 2)
        );
        let _ = writeln!(out, "  \"lower\": {},", real_array(&self.lower));
        let _ = write!(out, "  \"upper\": {}", real_array(&self.upper));
        if self.alpha_cuts.is_empty() {
            out.push('\n');
        } else {
            out.push_str(",\n  \"alpha_cuts\": [\n");
            for (i, cut) in self.alpha_cuts.iter().enumerate() {
                out.push_str("    {\n");
                cut.write(&mut out, 6);
                out.push_str(if i + 1 == self.alpha_cuts.len() {
                    "    }\n"
                } else {
                    "    },\n"
                });
            }
            out.push_str("  ]\n");
        }
        out.push_str("}\n");
        out
    }
}

pub fn parse_solution(text: &str) -> Result<SolutionFile> {
    let file: SolutionFile =
        serde_json::from_str(text).map_err(|e| format_error("solution file", e))?;
    file.validate()?;
    Ok(file)
}

pub fn load_solution(path: impl AsRef<Path>) -> Result<SolutionFile> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    parse_solution(&text)
}

pub fn save_solution(file: &SolutionFile, path: impl AsRef<Path>) -> Result<()> {
    write_file(path.as_ref(), &file.to_canonical_string())
}

pub fn parse_cut(text: &str) -> Result<CutFile> {
    let file: CutFile =
        serde_json::from_str(text).map_err(|e| format_error("alpha-cut file", e))?;
    check_version(file.format_version)?;
    Ok(file)
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents)
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))
}

/// 17 significant digits, the shortest fixed width that round-trips every
/// `f64`.
pub fn real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn real_array(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|&v| real(v)).collect();
    format!("[{}]", parts.join(", "))
}

fn real_matrix(rows: &[Vec<f64>], indent: usize) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let pad = " ".repeat(indent + 2);
    let body: Vec<String> = rows
        .iter()
        .map(|r| format!("{pad}{}", real_array(r)))
        .collect();
    format!("[\n{}\n{}]", body.join(",\n"), " ".repeat(indent))
}
