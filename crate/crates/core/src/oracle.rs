//! Brute-force reference computations for checking the solver.
//!
//! Nothing here touches the elimination-based inverse: possibilities are read
//! straight off `w = A x` against each right-hand side, and prism points are
//! pulled back through `A` with Cramer's rule over Leibniz determinants. These
//! routines are exponential in `n` and meant for small test systems.

use rand::Rng;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyNumber, TriangularFuzzyNumber};
use crate::linalg::{Matrix, Vector};
use crate::solver::{
    side_slack, FuzzyLinearSystem, PossibilityResult, TriangularSystem, DEFAULT_TOLERANCE,
};

/// Determinant by the permutation expansion.
pub fn determinant(a: &Matrix) -> f64 {
    let n = a.dim();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0.0;
    permute(&mut perm, 0, 1.0, &mut |p, sign| {
        total += sign
            * p.iter()
                .enumerate()
                .map(|(i, &j)| a[(i, j)])
                .product::<f64>();
    });
    total
}

fn permute(p: &mut [usize], k: usize, sign: f64, visit: &mut impl FnMut(&[usize], f64)) {
    if k == p.len() {
        visit(p, sign);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, if i == k { sign } else { -sign }, visit);
        p.swap(k, i);
    }
}

/// Solves `A x = b` by Cramer's rule; `None` when `det A == 0`.
pub fn cramer_solve(a: &Matrix, b: &Vector) -> Option<Vector> {
    let det = determinant(a);
    if det == 0.0 {
        return None;
    }
    let rows = a.to_rows();
    let x = (0..a.dim())
        .map(|j| {
            let replaced: Vec<Vec<f64>> = rows
                .iter()
                .zip(b.iter())
                .map(|(row, &bi)| {
                    let mut r = row.clone();
                    r[j] = bi;
                    r
                })
                .collect();
            determinant(&Matrix::from_rows(&replaced).expect("square")) / det
        })
        .collect();
    Some(Vector::new(x))
}

/// Possibility of `x` read directly off the definition: `min_i mu_i((A x)_i)`,
/// or `NotASolution` when some `(A x)_i` leaves its support.
pub fn direct_possibility<F: FuzzyNumber>(
    sys: &FuzzyLinearSystem<F>,
    x: &Vector,
) -> Result<PossibilityResult> {
    direct_possibility_with_tolerance(sys, x, DEFAULT_TOLERANCE)
}

/// As [`direct_possibility`]; a coordinate within `tol` (relative to the
/// side's width) outside the support is snapped onto the support's edge.
pub fn direct_possibility_with_tolerance<F: FuzzyNumber>(
    sys: &FuzzyLinearSystem<F>,
    x: &Vector,
    tol: f64,
) -> Result<PossibilityResult> {
    let w = sys.matrix().mul_vec(x)?;
    let mut worst = 1.0f64;
    for (f, &wi) in sys.rhs().iter().zip(w.iter()) {
        let support = f.support();
        let core = f.core();
        let below = support.lo - side_slack(core.lo - support.lo, tol);
        let above = support.hi + side_slack(support.hi - core.hi, tol);
        if wi < below || wi > above {
            return Ok(PossibilityResult::NotASolution);
        }
        worst = worst.min(f.membership(wi.clamp(support.lo, support.hi)));
    }
    Ok(PossibilityResult::Solution(worst))
}

/// Points claimed to lie in the alpha-cut of a solution set.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCut {
    pub points: Vec<Vector>,
    pub alpha: f64,
}

/// Uniform `grid^n` lattice over the alpha-level box of the right-hand side,
/// each point pulled back through `A`. The first coordinate varies fastest, so
/// `grid = 2` lists corners in the same order as
/// [`CutParallelepiped::vertices`](crate::solver::CutParallelepiped::vertices).
pub fn sample_prism(sys: &TriangularSystem, alpha: f64, grid: usize) -> Result<SampledCut> {
    if grid < 2 {
        return Err(crate::error::invalid(
            "grid",
            "needs at least two points per axis",
        ));
    }
    let n = sys.dim();
    let boxes = sys
        .rhs()
        .iter()
        .map(|f| f.alpha_cut(alpha))
        .collect::<Result<Vec<_>>>()?;
    let total = grid
        .checked_pow(n as u32)
        .ok_or(Error::ResourceLimit { n, max: 20 })?;
    let mut points = Vec::with_capacity(total);
    for k in 0..total {
        let mut idx = k;
        let w: Vec<f64> = boxes
            .iter()
            .map(|b| {
                let step = idx % grid;
                idx /= grid;
                if step == grid - 1 {
                    b.hi
                } else {
                    b.lo + (b.hi - b.lo) * step as f64 / (grid - 1) as f64
                }
            })
            .collect();
        let x = cramer_solve(sys.matrix(), &Vector::new(w))
            .ok_or(Error::SingularMatrix { pivot: 0 })?;
        points.push(x);
    }
    Ok(SampledCut { points, alpha })
}

/// Symmetric Hausdorff distance between two finite point sets.
pub fn hausdorff(a: &[Vector], b: &[Vector]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let directed = |from: &[Vector], to: &[Vector]| {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| p.distance(q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    Ok(directed(a, b).max(directed(b, a)))
}

pub fn hausdorff_sampled(a: &SampledCut, b: &SampledCut) -> Result<f64> {
    hausdorff(&a.points, &b.points)
}

/// `n x n` matrix with entries uniform in `[-5, 5]`, redrawn until
/// `|det| >= 0.1`.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let data = (0..n * n).map(|_| rng.random_range(-5.0..=5.0)).collect();
        let m = Matrix::new(n, data).expect("finite");
        if determinant(&m).abs() >= 0.1 {
            return m;
        }
    }
}

/// Triangular number with peak in `[-10, 10]` and spreads in `[0.1, 3]`.
/// With `degenerate` set, each spread is zero with probability 1/4.
pub fn random_triangular<R: Rng + ?Sized>(rng: &mut R, degenerate: bool) -> TriangularFuzzyNumber {
    let spread = |rng: &mut R| {
        if degenerate && rng.random_bool(0.25) {
            0.0
        } else {
            rng.random_range(0.1..=3.0)
        }
    };
    let c: f64 = rng.random_range(-10.0..=10.0);
    let (dl, dr) = (spread(rng), spread(rng));
    TriangularFuzzyNumber::new(c - dl, c, c + dr).expect("ordered")
}

pub fn random_system<R: Rng + ?Sized>(rng: &mut R, n: usize, degenerate: bool) -> TriangularSystem {
    let a = random_matrix(rng, n);
    let rhs = (0..n).map(|_| random_triangular(rng, degenerate)).collect();
    FuzzyLinearSystem::new(a, rhs).expect("matching dimensions")
}

/// Random `D P` with `|d_i|` in `[0.2, 5]` and random signs.
pub fn random_generalized_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let mut data = vec![0.0; n * n];
    for (i, &p) in perm.iter().enumerate() {
        let d: f64 = rng.random_range(0.2..=5.0);
        data[i * n + p] = if rng.random_bool(0.5) { d } else { -d };
    }
    Matrix::new(n, data).expect("finite")
}
