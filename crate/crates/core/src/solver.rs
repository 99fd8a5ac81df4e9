//! Fuzzy linear systems `A X = B` with a crisp nonsingular matrix and a fuzzy
//! right-hand side.
//!
//! The solution is not a vector of fuzzy numbers but a fuzzy set of real
//! vectors: the parallelepiped `x_cr + A^-1 Pi`, where `Pi` is the box spanned
//! by the right-hand-side uncertainties and `x_cr` solves the crisp system
//! built from the peaks. A point `x` belongs to it with possibility
//! `1 - max_i gamma_i`, where `gamma_i` are the coefficients of
//! `A x - b_cr` over the box's support vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{
    check_alpha, FuzzyNumber, Interval, ParametricFuzzyNumber, TriangularFuzzyNumber,
};
use crate::linalg::{dp_decompose, Matrix, Vector};

/// Default slack for membership decisions at the boundary.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest dimension for which all `2^n` vertices are enumerated.
pub const MAX_VERTEX_DIM: usize = 20;

/// `A X = B` with `A` crisp and `B` a vector of fuzzy numbers of one kind.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyLinearSystem<F> {
    matrix: Matrix,
    rhs: Vec<F>,
}

pub type TriangularSystem = FuzzyLinearSystem<TriangularFuzzyNumber>;
pub type ParametricSystem = FuzzyLinearSystem<ParametricFuzzyNumber>;

impl<F> FuzzyLinearSystem<F> {
    pub fn new(matrix: Matrix, rhs: Vec<F>) -> Result<Self> {
        if rhs.len() != matrix.dim() {
            return Err(Error::DimensionMismatch {
                expected: matrix.dim(),
                found: rhs.len(),
            });
        }
        Ok(FuzzyLinearSystem { matrix, rhs })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[F] {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    fn check_point(&self, x: &Vector) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(())
    }
}

impl TriangularSystem {
    /// Same system with every right-hand side in two-sample parametric form.
    pub fn to_parametric(&self) -> ParametricSystem {
        FuzzyLinearSystem {
            matrix: self.matrix.clone(),
            rhs: self
                .rhs
                .iter()
                .map(ParametricFuzzyNumber::from_triangular)
                .collect(),
        }
    }

    /// Multiplies equation `i` through by `k`, scaling both the matrix row and
    /// the fuzzy right-hand side.
    pub fn with_scaled_equation(&self, i: usize, k: f64) -> TriangularSystem {
        let mut rhs = self.rhs.clone();
        rhs[i] = rhs[i].scale(k);
        FuzzyLinearSystem {
            matrix: self.matrix.with_scaled_row(i, k),
            rhs,
        }
    }
}

/// Answer to "is `x` a solution, and with what possibility?".
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PossibilityResult {
    NotASolution,
    Solution(f64),
}

impl PossibilityResult {
    pub fn possibility(&self) -> Option<f64> {
        match *self {
            PossibilityResult::Solution(p) => Some(p),
            PossibilityResult::NotASolution => None,
        }
    }

    pub fn is_solution(&self) -> bool {
        matches!(self, PossibilityResult::Solution(_))
    }

    /// Same verdict and possibilities within `tol`.
    pub fn agrees_with(&self, other: &PossibilityResult, tol: f64) -> bool {
        match (self, other) {
            (PossibilityResult::NotASolution, PossibilityResult::NotASolution) => true,
            (PossibilityResult::Solution(a), PossibilityResult::Solution(b)) => {
                (a - b).abs() <= tol
            }
            _ => false,
        }
    }
}

impl fmt::Display for PossibilityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PossibilityResult::NotASolution => write!(f, "not-a-solution"),
            PossibilityResult::Solution(p) => write!(f, "solution possibility={p}"),
        }
    }
}

/// Which support vector a coordinate of `z` is expressed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `v_i = lower_i e_i`
    Lower,
    /// `u_i = upper_i e_i`
    Upper,
    /// `z_i` is zero; either vector with coefficient 0.
    Center,
}

/// Coefficient of one coordinate of `z` over its support vector. Infinite
/// when `z_i` is nonzero against a zero-width side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportCoefficient {
    pub side: Side,
    pub value: f64,
}

/// `z = A x - b_cr` written over the support vectors of the prism.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub z: Vector,
    pub coefficients: Vec<SupportCoefficient>,
}

impl Decomposition {
    pub fn max_coefficient(&self) -> f64 {
        self.coefficients
            .iter()
            .map(|c| c.value)
            .fold(0.0, f64::max)
    }

    pub fn values(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.value).collect()
    }

    /// `1 - max gamma`, or `NotASolution` once the maximum exceeds `1 + tol`.
    pub fn possibility(&self, tol: f64) -> PossibilityResult {
        let max = self.max_coefficient();
        if max > 1.0 + tol {
            PossibilityResult::NotASolution
        } else {
            PossibilityResult::Solution((1.0 - max).clamp(0.0, 1.0))
        }
    }
}

/// The fuzzy solution set `x_cr + A^-1 Pi` of a triangular system.
#[derive(Debug, Clone, PartialEq)]
pub struct ParallelepipedSolution {
    matrix: Matrix,
    inverse: Matrix,
    b_cr: Vector,
    x_cr: Vector,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

/// Builds the solution parallelepiped: invert `A`, split each `(l, m, r)` into
/// its peak `m` and spreads `l - m <= 0 <= r - m`, and solve for `x_cr`.
pub fn solve(sys: &TriangularSystem) -> Result<ParallelepipedSolution> {
    let inverse = sys.matrix.invert()?;
    let b_cr = Vector::new(
        sys.rhs
            .iter()
            .map(TriangularFuzzyNumber::crisp_part)
            .collect(),
    );
    let (lower, upper) = sys
        .rhs
        .iter()
        .map(|f| {
            let u = f.uncertainty();
            (u.left(), u.right())
        })
        .unzip();
    let x_cr = inverse.mul_vec(&b_cr)?;
    Ok(ParallelepipedSolution {
        matrix: sys.matrix.clone(),
        inverse,
        b_cr,
        x_cr,
        lower,
        upper,
    })
}

impl ParallelepipedSolution {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn x_cr(&self) -> &Vector {
        &self.x_cr
    }

    pub fn b_cr(&self) -> &Vector {
        &self.b_cr
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// `A^-1 e_i` for every `i`.
    pub fn columns(&self) -> Vec<Vector> {
        self.inverse.columns()
    }

    /// Coefficients of `A x - b_cr` over the support vectors.
    pub fn decompose(&self, x: &Vector) -> Result<Decomposition> {
        self.decompose_with_tolerance(x, DEFAULT_TOLERANCE)
    }

    pub fn decompose_with_tolerance(&self, x: &Vector, tol: f64) -> Result<Decomposition> {
        let z = self.matrix.mul_vec(x)?.sub(&self.b_cr);
        let coefficients = z
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(&zi, (&lo, &hi))| coefficient(zi, lo, hi, tol))
            .collect();
        Ok(Decomposition { z, coefficients })
    }

    pub fn membership(&self, x: &Vector) -> Result<PossibilityResult> {
        self.membership_with_tolerance(x, DEFAULT_TOLERANCE)
    }

    pub fn membership_with_tolerance(&self, x: &Vector, tol: f64) -> Result<PossibilityResult> {
        Ok(self.decompose_with_tolerance(x, tol)?.possibility(tol))
    }

    /// The alpha-cut: same frame, coefficient intervals shrunk by `1 - alpha`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<CutParallelepiped> {
        check_alpha(alpha)?;
        let s = 1.0 - alpha;
        Ok(CutParallelepiped {
            alpha,
            x_cr: self.x_cr.clone(),
            columns: self.columns(),
            lower: self.lower.iter().map(|v| s * v).collect(),
            upper: self.upper.iter().map(|v| s * v).collect(),
        })
    }
}

fn coefficient(z: f64, lower: f64, upper: f64, tol: f64) -> SupportCoefficient {
    let over = |side, bound: f64| {
        let value = if bound != 0.0 {
            z / bound
        } else if z.abs() <= tol {
            0.0
        } else {
            f64::INFINITY
        };
        SupportCoefficient { side, value }
    };
    if z > 0.0 {
        over(Side::Upper, upper)
    } else if z < 0.0 {
        over(Side::Lower, lower)
    } else {
        SupportCoefficient {
            side: Side::Center,
            value: 0.0,
        }
    }
}

/// `{ x_cr + sum_i c_i columns[i] : lower[i] <= c_i <= upper[i] }`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutParallelepiped {
    pub alpha: f64,
    pub x_cr: Vector,
    pub columns: Vec<Vector>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl CutParallelepiped {
    pub fn dim(&self) -> usize {
        self.x_cr.dim()
    }

    /// `x_cr + sum_i coeffs[i] * columns[i]`
    pub fn point(&self, coeffs: &[f64]) -> Vector {
        coeffs
            .iter()
            .zip(&self.columns)
            .fold(self.x_cr.clone(), |acc, (&c, col)| acc.axpy(c, col))
    }

    pub fn intervals(&self) -> Vec<Interval> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| Interval::new(lo, hi))
            .collect()
    }

    /// All `2^n` corners. Vertex `k` takes `upper[i]` when bit `i` of `k` is
    /// set and `lower[i]` otherwise.
    pub fn vertices(&self) -> Result<Vec<Vector>> {
        let n = self.dim();
        if n > MAX_VERTEX_DIM {
            return Err(Error::ResourceLimit {
                n,
                max: MAX_VERTEX_DIM,
            });
        }
        Ok((0..1usize << n)
            .map(|k| {
                let coeffs: Vec<f64> = (0..n)
                    .map(|i| {
                        if k >> i & 1 == 1 {
                            self.upper[i]
                        } else {
                            self.lower[i]
                        }
                    })
                    .collect();
                self.point(&coeffs)
            })
            .collect())
    }

    /// The edge vectors `(upper[i] - lower[i]) * columns[i]`.
    pub fn edges(&self) -> Vec<Vector> {
        self.columns
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(col, (&lo, &hi))| col.scale(hi - lo))
            .collect()
    }

    /// `true` when every nonzero edge is parallel to a coordinate axis, i.e.
    /// the cut is a box `[lo_1, hi_1] x ... x [lo_n, hi_n]`.
    pub fn is_axis_aligned(&self, rel_tol: f64) -> bool {
        self.edges().iter().all(|e| {
            let scale = e.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
            e.iter().filter(|v| v.abs() > rel_tol * scale).count() <= 1
        })
    }

    /// Coordinate-wise bounding box of the cut.
    pub fn bounding_box(&self) -> Vec<Interval> {
        (0..self.dim())
            .map(|j| {
                let (lo, hi) = self
                    .columns
                    .iter()
                    .zip(self.lower.iter().zip(&self.upper))
                    .fold((self.x_cr[j], self.x_cr[j]), |(lo, hi), (col, (&a, &b))| {
                        let (p, q) = (a * col[j], b * col[j]);
                        (lo + p.min(q), hi + p.max(q))
                    });
                Interval::new(lo, hi)
            })
            .collect()
    }
}

/// Solution of a system with parametric right-hand side. Alpha-cuts are
/// computed level by level; they are not rescalings of the 0-cut.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricSolution {
    system: ParametricSystem,
    inverse: Matrix,
    b_cr: Vector,
    x_cr: Vector,
}

impl ParametricSolution {
    /// Uses `b_cr` when given (each entry must lie in the matching core),
    /// otherwise the midpoints of the cores.
    pub fn new(sys: &ParametricSystem, b_cr: Option<&Vector>) -> Result<Self> {
        let inverse = sys.matrix.invert()?;
        let b_cr = match b_cr {
            Some(b) => {
                sys.check_point(b)?;
                for (i, (f, &v)) in sys.rhs.iter().zip(b.iter()).enumerate() {
                    if !f.core().contains(v) {
                        return Err(crate::error::invalid(
                            "b_cr override",
                            format!("entry {i} = {v} lies outside the core {}", f.core()),
                        ));
                    }
                }
                b.clone()
            }
            None => Vector::new(
                sys.rhs
                    .iter()
                    .map(ParametricFuzzyNumber::core_midpoint)
                    .collect(),
            ),
        };
        let x_cr = inverse.mul_vec(&b_cr)?;
        Ok(ParametricSolution {
            system: sys.clone(),
            inverse,
            b_cr,
            x_cr,
        })
    }

    pub fn x_cr(&self) -> &Vector {
        &self.x_cr
    }

    pub fn b_cr(&self) -> &Vector {
        &self.b_cr
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn system(&self) -> &ParametricSystem {
        &self.system
    }

    /// Coefficient intervals `[f_L(alpha) - b_cr_i, f_R(alpha) - b_cr_i]`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<CutParallelepiped> {
        let mut lower = Vec::with_capacity(self.b_cr.dim());
        let mut upper = Vec::with_capacity(self.b_cr.dim());
        for (f, &b) in self.system.rhs.iter().zip(self.b_cr.iter()) {
            let cut = f.alpha_cut(alpha)?;
            lower.push(cut.lo - b);
            upper.push(cut.hi - b);
        }
        Ok(CutParallelepiped {
            alpha,
            x_cr: self.x_cr.clone(),
            columns: self.inverse.columns(),
            lower,
            upper,
        })
    }

    pub fn membership(&self, x: &Vector) -> Result<PossibilityResult> {
        membership_parametric_with_tolerance(&self.system, x, DEFAULT_TOLERANCE)
    }
}

/// Alpha-cut of the solution of a parametric system, with the core-midpoint
/// choice of `b_cr`.
pub fn solve_parametric(sys: &ParametricSystem, alpha: f64) -> Result<CutParallelepiped> {
    check_alpha(alpha)?;
    ParametricSolution::new(sys, None)?.alpha_cut(alpha)
}

/// `min_i alpha_i` where `alpha_i` is the membership of `(A x)_i` in the
/// `i`-th right-hand side.
pub fn membership_parametric(sys: &ParametricSystem, x: &Vector) -> Result<PossibilityResult> {
    membership_parametric_with_tolerance(sys, x, DEFAULT_TOLERANCE)
}

pub fn membership_parametric_with_tolerance(
    sys: &ParametricSystem,
    x: &Vector,
    tol: f64,
) -> Result<PossibilityResult> {
    sys.check_point(x)?;
    sys.matrix.invert()?;
    let k = sys.matrix.mul_vec(x)?;
    let mut possibility: f64 = 1.0;
    for (f, &ki) in sys.rhs.iter().zip(k.iter()) {
        let support = f.support();
        let core = f.core();
        let slack_lo = side_slack(core.lo - support.lo, tol);
        let slack_hi = side_slack(support.hi - core.hi, tol);
        if ki < support.lo - slack_lo || ki > support.hi + slack_hi {
            return Ok(PossibilityResult::NotASolution);
        }
        possibility = possibility.min(f.membership(ki.clamp(support.lo, support.hi)));
    }
    Ok(PossibilityResult::Solution(possibility))
}

/// Boundary slack for one side of a support: relative to the side's width,
/// absolute when the side is vertical.
pub(crate) fn side_slack(width: f64, tol: f64) -> f64 {
    if width > 0.0 {
        tol * width
    } else {
        tol
    }
}

/// Solution as a vector of fuzzy numbers, available exactly when `A` is a
/// generalized permutation matrix. The system then decouples into
/// `diag[i] * x[perm[i]] = f_i`.
pub fn extract_fuzzy_vector(sys: &TriangularSystem) -> Result<Option<Vec<TriangularFuzzyNumber>>> {
    let Some(dp) = dp_decompose(&sys.matrix) else {
        sys.matrix.invert()?;
        return Ok(None);
    };
    let mut out = vec![TriangularFuzzyNumber::crisp(0.0); sys.dim()];
    for ((&d, &p), f) in dp.diag.iter().zip(&dp.perm).zip(&sys.rhs) {
        out[p] = f.scale(1.0 / d);
    }
    Ok(Some(out))
}

/// Applies the crisp matrix to a fuzzy vector with fuzzy addition and scalar
/// multiplication: `(A x)_i = sum_j a_ij x_j`.
pub fn apply_fuzzy(a: &Matrix, x: &[TriangularFuzzyNumber]) -> Result<Vec<TriangularFuzzyNumber>> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    Ok(a.rows()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(TriangularFuzzyNumber::crisp(0.0), |acc, (&aij, xj)| {
                    acc + xj.scale(aij)
                })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: f64, c: f64, b: f64) -> TriangularFuzzyNumber {
        TriangularFuzzyNumber::new(a, c, b).unwrap()
    }

    fn example1() -> TriangularSystem {
        FuzzyLinearSystem::new(
            Matrix::from_rows(&[[1.0, -1.0, 2.0], [3.0, -1.0, 4.0], [5.0, 1.0, 7.0]]).unwrap(),
            vec![
                tri(-4.0, -2.0, -1.0),
                tri(-1.0, 0.0, 1.0),
                tri(12.0, 14.0, 17.0),
            ],
        )
        .unwrap()
    }

    fn example2() -> TriangularSystem {
        FuzzyLinearSystem::new(
            Matrix::from_rows(&[[3.0, 5.0], [1.0, -2.0]]).unwrap(),
            vec![tri(-2.0, -1.0, 1.0), tri(5.0, 7.0, 8.0)],
        )
        .unwrap()
    }

    fn v(x: &[f64]) -> Vector {
        Vector::from(x)
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn rejects_rhs_dimension_mismatch() {
        let r = FuzzyLinearSystem::new(Matrix::identity(3), vec![tri(0.0, 1.0, 2.0); 2]);
        assert_eq!(
            r,
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn solves_example1() {
        let sol = solve(&example1()).unwrap();
        assert_close(sol.x_cr(), &[-1.0, 5.0, 2.0], 1e-12);
        assert_eq!(sol.lower(), &[-2.0, -1.0, -2.0]);
        assert_eq!(sol.upper(), &[1.0, 1.0, 3.0]);
        assert_eq!(sol.b_cr().as_slice(), &[-2.0, 0.0, 14.0]);
        let residual = sol.matrix().mul_vec(sol.x_cr()).unwrap();
        assert!(residual.max_abs_diff(sol.b_cr()) <= 1e-9);
    }

    #[test]
    fn solves_example2() {
        let sol = solve(&example2()).unwrap();
        assert_close(sol.x_cr(), &[3.0, -2.0], 1e-12);
        assert_eq!(sol.b_cr().as_slice(), &[-1.0, 7.0]);
        assert_close(&sol.columns()[0], &[2.0 / 11.0, 1.0 / 11.0], 1e-15);
        assert_close(&sol.columns()[1], &[5.0 / 11.0, -3.0 / 11.0], 1e-15);
    }

    #[test]
    fn point_solution_for_crisp_rhs() {
        let sys = FuzzyLinearSystem::new(Matrix::identity(3), vec![tri(0.0, 0.0, 0.0); 3]).unwrap();
        let sol = solve(&sys).unwrap();
        assert_eq!(sol.x_cr(), &Vector::zeros(3));
        assert_eq!(sol.lower(), &[0.0; 3]);
        assert_eq!(sol.upper(), &[0.0; 3]);
        assert_eq!(
            sol.membership(&Vector::zeros(3)).unwrap(),
            PossibilityResult::Solution(1.0)
        );
        assert_eq!(
            sol.membership(&v(&[0.0, 1e-6, 0.0])).unwrap(),
            PossibilityResult::NotASolution
        );
    }

    #[test]
    fn singular_system_is_an_error() {
        let sys = FuzzyLinearSystem::new(
            Matrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]).unwrap(),
            vec![tri(0.0, 1.0, 2.0); 2],
        )
        .unwrap();
        assert_eq!(solve(&sys), Err(Error::SingularMatrix { pivot: 1 }));
        assert_eq!(
            extract_fuzzy_vector(&sys),
            Err(Error::SingularMatrix { pivot: 1 })
        );
    }

    #[test]
    fn example1_membership_checks() {
        let sol = solve(&example1()).unwrap();
        let d = sol.decompose(&v(&[0.5, 4.5, 0.9])).unwrap();
        assert_close(&d.z, &[-0.2, 0.6, -0.7], 1e-12);
        assert_close(&d.values(), &[0.1, 0.6, 0.35], 1e-12);
        let sides: Vec<_> = d.coefficients.iter().map(|c| c.side).collect();
        assert_eq!(sides, [Side::Lower, Side::Upper, Side::Lower]);
        let p = sol
            .membership(&v(&[0.5, 4.5, 0.9]))
            .unwrap()
            .possibility()
            .unwrap();
        assert!((p - 0.4).abs() <= 1e-9);

        let d = sol.decompose(&v(&[-3.4, 5.2, 3.5])).unwrap();
        assert_close(&d.values(), &[0.4, 1.4, 0.65], 1e-12);
        assert_eq!(
            sol.membership(&v(&[-3.4, 5.2, 3.5])).unwrap(),
            PossibilityResult::NotASolution
        );

        let p = sol.membership(sol.x_cr()).unwrap().possibility().unwrap();
        assert!((p - 1.0).abs() <= 1e-12);
        assert!(sol.membership(&v(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn boundary_tolerance() {
        let sys = FuzzyLinearSystem::new(Matrix::identity(1), vec![tri(-1.0, 0.0, 2.0)]).unwrap();
        let sol = solve(&sys).unwrap();
        assert_eq!(
            sol.membership(&v(&[2.0])).unwrap(),
            PossibilityResult::Solution(0.0)
        );
        assert_eq!(
            sol.membership(&v(&[2.0 + 1e-9])).unwrap(),
            PossibilityResult::Solution(0.0)
        );
        assert_eq!(
            sol.membership(&v(&[2.0 + 1e-8])).unwrap(),
            PossibilityResult::NotASolution
        );
        assert_eq!(
            sol.membership_with_tolerance(&v(&[2.0 + 1e-8]), 1e-6)
                .unwrap(),
            PossibilityResult::Solution(0.0)
        );
    }

    #[test]
    fn zero_width_side() {
        let sys = FuzzyLinearSystem::new(Matrix::identity(1), vec![tri(0.0, 0.0, 1.0)]).unwrap();
        let sol = solve(&sys).unwrap();
        let d = sol.decompose(&v(&[-0.5])).unwrap();
        assert_eq!(d.coefficients[0].value, f64::INFINITY);
        assert_eq!(
            sol.membership(&v(&[-0.5])).unwrap(),
            PossibilityResult::NotASolution
        );
        assert_eq!(
            sol.membership(&v(&[-1e-12])).unwrap(),
            PossibilityResult::Solution(1.0)
        );
        assert_eq!(
            sol.membership(&v(&[0.25])).unwrap(),
            PossibilityResult::Solution(0.75)
        );
    }

    #[test]
    fn example2_alpha_cuts() {
        let sol = solve(&example2()).unwrap();
        let point = sol.alpha_cut(1.0).unwrap().vertices().unwrap();
        assert_eq!(point.len(), 4);
        for p in &point {
            assert_close(p, &[3.0, -2.0], 1e-12);
        }

        let cut = sol.alpha_cut(0.0).unwrap();
        assert_eq!(cut.lower, sol.lower());
        assert_eq!(cut.upper, sol.upper());
        let verts = cut.vertices().unwrap();
        // Binary-counter order: (lower, lower), (upper, lower), (lower, upper), (upper, upper).
        let expected = [
            [21.0 / 11.0, -17.0 / 11.0],
            [27.0 / 11.0, -14.0 / 11.0],
            [36.0 / 11.0, -26.0 / 11.0],
            [42.0 / 11.0, -23.0 / 11.0],
        ];
        for (got, want) in verts.iter().zip(&expected) {
            assert_close(got, want, 1e-12);
        }

        // Printed to five decimals (some truncated), hence 1e-5.
        let printed_04 = [
            [2.34546, -1.72727],
            [2.67273, -1.56364],
            [3.16364, -2.21818],
            [3.49091, -2.05455],
        ];
        for (got, want) in sol
            .alpha_cut(0.4)
            .unwrap()
            .vertices()
            .unwrap()
            .iter()
            .zip(&printed_04)
        {
            assert_close(got, want, 1e-5);
        }
        let printed_07 = [
            [2.67273, -1.86363],
            [2.83636, -1.78181],
            [3.08182, -2.10909],
            [3.24545, -2.02727],
        ];
        for (got, want) in sol
            .alpha_cut(0.7)
            .unwrap()
            .vertices()
            .unwrap()
            .iter()
            .zip(&printed_07)
        {
            assert_close(got, want, 1e-5);
        }
        assert!(sol.alpha_cut(-0.5).is_err());
    }

    #[test]
    fn vertex_enumeration_is_guarded() {
        let n = MAX_VERTEX_DIM + 1;
        let cut = CutParallelepiped {
            alpha: 0.0,
            x_cr: Vector::zeros(n),
            columns: Matrix::identity(n).columns(),
            lower: vec![-1.0; n],
            upper: vec![1.0; n],
        };
        assert_eq!(
            cut.vertices(),
            Err(Error::ResourceLimit {
                n,
                max: MAX_VERTEX_DIM
            })
        );
    }

    #[test]
    fn bounding_box_of_example2() {
        let cut = solve(&example2()).unwrap().alpha_cut(0.0).unwrap();
        let bb = cut.bounding_box();
        assert_close(&[bb[0].lo, bb[0].hi], &[21.0 / 11.0, 42.0 / 11.0], 1e-12);
        assert_close(&[bb[1].lo, bb[1].hi], &[-26.0 / 11.0, -14.0 / 11.0], 1e-12);
        assert!(!cut.is_axis_aligned(1e-9));
    }

    #[test]
    fn parametric_matches_triangular_on_examples() {
        for sys in [example1(), example2()] {
            let sol = solve(&sys).unwrap();
            let psys = sys.to_parametric();
            for alpha in [0.0, 0.25, 0.4, 0.7, 1.0] {
                let a = sol.alpha_cut(alpha).unwrap();
                let b = solve_parametric(&psys, alpha).unwrap();
                assert_close(&a.x_cr, &b.x_cr, 1e-12);
                assert_close(&a.lower, &b.lower, 1e-12);
                assert_close(&a.upper, &b.upper, 1e-12);
            }
        }
        let psys = example1().to_parametric();
        let p = membership_parametric(&psys, &v(&[0.5, 4.5, 0.9])).unwrap();
        assert!((p.possibility().unwrap() - 0.4).abs() <= 1e-9);
        assert_eq!(
            membership_parametric(&psys, &v(&[-3.4, 5.2, 3.5])).unwrap(),
            PossibilityResult::NotASolution
        );
        let x_cr = solve(&example1()).unwrap().x_cr().clone();
        let p = membership_parametric(&psys, &x_cr)
            .unwrap()
            .possibility()
            .unwrap();
        assert!((p - 1.0).abs() <= 1e-9);
        assert_eq!(
            membership_parametric(&psys, &v(&[100.0, 100.0, 100.0])).unwrap(),
            PossibilityResult::NotASolution
        );
    }

    #[test]
    fn parametric_core_box_at_alpha_one() {
        let f = ParametricFuzzyNumber::new(vec![0.0, 1.0], vec![0.0, 1.0], vec![4.0, 2.0]).unwrap();
        let g =
            ParametricFuzzyNumber::new(vec![0.0, 1.0], vec![-1.0, 0.0], vec![1.0, 0.0]).unwrap();
        let sys = FuzzyLinearSystem::new(Matrix::identity(2), vec![f, g]).unwrap();
        let cut = solve_parametric(&sys, 1.0).unwrap();
        assert_close(&cut.x_cr, &[1.5, 0.0], 1e-15);
        assert_close(&cut.lower, &[-0.5, 0.0], 1e-15);
        assert_close(&cut.upper, &[0.5, 0.0], 1e-15);
        let p = membership_parametric(&sys, &v(&[1.2, 0.0])).unwrap();
        assert_eq!(p, PossibilityResult::Solution(1.0));
        let p = membership_parametric(&sys, &v(&[3.0, 0.5])).unwrap();
        assert_eq!(p, PossibilityResult::Solution(0.5));
    }

    #[test]
    fn parametric_b_cr_override() {
        let f = ParametricFuzzyNumber::new(vec![0.0, 1.0], vec![0.0, 1.0], vec![4.0, 2.0]).unwrap();
        let sys = FuzzyLinearSystem::new(Matrix::identity(1), vec![f]).unwrap();
        let sol = ParametricSolution::new(&sys, Some(&v(&[1.0]))).unwrap();
        let cut = sol.alpha_cut(0.0).unwrap();
        assert_eq!((cut.lower[0], cut.upper[0]), (-1.0, 3.0));
        assert!(ParametricSolution::new(&sys, Some(&v(&[2.5]))).is_err());
        assert!(ParametricSolution::new(&sys, Some(&v(&[1.0, 2.0]))).is_err());
    }

    #[test]
    fn extracts_fuzzy_vector() {
        let rhs = vec![tri(-2.0, -1.0, 1.0), tri(5.0, 7.0, 8.0)];
        let sys = FuzzyLinearSystem::new(Matrix::identity(2), rhs.clone()).unwrap();
        assert_eq!(extract_fuzzy_vector(&sys).unwrap(), Some(rhs.clone()));

        let a = Matrix::from_rows(&[[0.0, 2.0], [-3.0, 0.0]]).unwrap();
        let sys = FuzzyLinearSystem::new(a.clone(), rhs.clone()).unwrap();
        let x = extract_fuzzy_vector(&sys).unwrap().unwrap();
        let (x0, x1) = (x[0].as_tuple(), x[1].as_tuple());
        assert_close(
            &[x0.0, x0.1, x0.2],
            &[-8.0 / 3.0, -7.0 / 3.0, -5.0 / 3.0],
            1e-15,
        );
        assert_eq!(x1, (-1.0, -0.5, 0.5));
        let back = apply_fuzzy(&a, &x).unwrap();
        for (got, want) in back.iter().zip(&rhs) {
            let (g, w) = (got.as_tuple(), want.as_tuple());
            assert_close(&[g.0, g.1, g.2], &[w.0, w.1, w.2], 1e-12);
        }

        assert_eq!(extract_fuzzy_vector(&example1()).unwrap(), None);
    }

    #[test]
    fn dp_cut_is_box_of_component_cuts() {
        let a = Matrix::from_rows(&[[0.0, 2.0], [-3.0, 0.0]]).unwrap();
        let sys =
            FuzzyLinearSystem::new(a, vec![tri(-2.0, -1.0, 1.0), tri(5.0, 7.0, 8.0)]).unwrap();
        let x = extract_fuzzy_vector(&sys).unwrap().unwrap();
        let sol = solve(&sys).unwrap();
        for alpha in [0.0, 0.3, 0.9] {
            let cut = sol.alpha_cut(alpha).unwrap();
            assert!(cut.is_axis_aligned(1e-12));
            for (bb, xi) in cut.bounding_box().iter().zip(&x) {
                let want = xi.alpha_cut(alpha).unwrap();
                assert_close(&[bb.lo, bb.hi], &[want.lo, want.hi], 1e-12);
            }
        }
    }
}
