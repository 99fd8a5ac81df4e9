use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fls_core::fuzzy::{FuzzyNumber, ParametricFuzzyNumber, TriangularFuzzyNumber};
use fls_core::linalg::{self, Matrix, Vector};
use fls_core::solver::{self, FuzzyLinearSystem, ParallelepipedSolution, PossibilityResult};
use fls_core::{io, oracle};

fn err(e: fls_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix(rows: Vec<Vec<f64>>) -> PyResult<Matrix> {
    Matrix::from_rows(&rows).map_err(err)
}

fn possibility(r: PossibilityResult) -> Option<f64> {
    r.possibility()
}

/// Triangular fuzzy number (a, c, b) with a <= c <= b.
#[pyclass(name = "TriangularFuzzyNumber", from_py_object)]
#[derive(Clone)]
struct PyTriangular(TriangularFuzzyNumber);

#[pymethods]
impl PyTriangular {
    #[new]
    fn new(a: f64, c: f64, b: f64) -> PyResult<Self> {
        TriangularFuzzyNumber::new(a, c, b)
            .map(PyTriangular)
            .map_err(err)
    }

    #[staticmethod]
    fn crisp(x: f64) -> Self {
        PyTriangular(TriangularFuzzyNumber::crisp(x))
    }

    #[getter]
    fn left(&self) -> f64 {
        self.0.left()
    }

    #[getter]
    fn peak(&self) -> f64 {
        self.0.peak()
    }

    #[getter]
    fn right(&self) -> f64 {
        self.0.right()
    }

    fn membership(&self, x: f64) -> f64 {
        self.0.membership(x)
    }

    fn alpha_cut(&self, alpha: f64) -> PyResult<(f64, f64)> {
        let cut = self.0.alpha_cut(alpha).map_err(err)?;
        Ok((cut.lo, cut.hi))
    }

    fn crisp_part(&self) -> f64 {
        self.0.crisp_part()
    }

    fn uncertainty(&self) -> Self {
        PyTriangular(self.0.uncertainty())
    }

    fn scale(&self, k: f64) -> Self {
        PyTriangular(self.0.scale(k))
    }

    fn as_tuple(&self) -> (f64, f64, f64) {
        self.0.as_tuple()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyTriangular(self.0 + other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyTriangular(self.0 - other.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        let (a, c, b) = self.0.as_tuple();
        format!("TriangularFuzzyNumber({a}, {c}, {b})")
    }
}

/// Fuzzy number given by sampled alpha-cut boundaries.
#[pyclass(name = "ParametricFuzzyNumber", from_py_object)]
#[derive(Clone)]
struct PyParametric(ParametricFuzzyNumber);

#[pymethods]
impl PyParametric {
    #[new]
    fn new(alphas: Vec<f64>, left: Vec<f64>, right: Vec<f64>) -> PyResult<Self> {
        ParametricFuzzyNumber::new(alphas, left, right)
            .map(PyParametric)
            .map_err(err)
    }

    #[staticmethod]
    fn from_triangular(t: &PyTriangular) -> Self {
        PyParametric(ParametricFuzzyNumber::from_triangular(&t.0))
    }

    fn membership(&self, x: f64) -> f64 {
        self.0.membership(x)
    }

    fn alpha_cut(&self, alpha: f64) -> PyResult<(f64, f64)> {
        let cut = self.0.alpha_cut(alpha).map_err(err)?;
        Ok((cut.lo, cut.hi))
    }
}

/// Solution parallelepiped x_cr + A^-1 Pi of a triangular system.
#[pyclass(name = "Solution")]
struct PySolution(ParallelepipedSolution);

#[pymethods]
impl PySolution {
    #[getter]
    fn x_cr(&self) -> Vec<f64> {
        self.0.x_cr().to_vec()
    }

    #[getter]
    fn b_cr(&self) -> Vec<f64> {
        self.0.b_cr().to_vec()
    }

    #[getter]
    fn lower(&self) -> Vec<f64> {
        self.0.lower().to_vec()
    }

    #[getter]
    fn upper(&self) -> Vec<f64> {
        self.0.upper().to_vec()
    }

    /// Rows of A^-1.
    #[getter]
    fn inverse(&self) -> Vec<Vec<f64>> {
        self.0.inverse().to_rows()
    }

    /// Possibility of `x`, or None when it is not a solution.
    fn membership(&self, x: Vec<f64>) -> PyResult<Option<f64>> {
        self.0
            .membership(&Vector::new(x))
            .map(possibility)
            .map_err(err)
    }

    /// Coefficients of A x - b_cr over the support vectors.
    fn decompose(&self, x: Vec<f64>) -> PyResult<Vec<f64>> {
        Ok(self.0.decompose(&Vector::new(x)).map_err(err)?.values())
    }

    fn alpha_cut_vertices(&self, alpha: f64) -> PyResult<Vec<Vec<f64>>> {
        let cut = self.0.alpha_cut(alpha).map_err(err)?;
        Ok(cut
            .vertices()
            .map_err(err)?
            .into_iter()
            .map(Vector::into_inner)
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Solution(x_cr={})", self.0.x_cr())
    }
}

fn triangular_system(
    a: Vec<Vec<f64>>,
    rhs: Vec<PyTriangular>,
) -> PyResult<FuzzyLinearSystem<TriangularFuzzyNumber>> {
    FuzzyLinearSystem::new(matrix(a)?, rhs.into_iter().map(|t| t.0).collect()).map_err(err)
}

fn parametric_system(
    a: Vec<Vec<f64>>,
    rhs: Vec<PyParametric>,
) -> PyResult<FuzzyLinearSystem<ParametricFuzzyNumber>> {
    FuzzyLinearSystem::new(matrix(a)?, rhs.into_iter().map(|p| p.0).collect()).map_err(err)
}

#[pyfunction]
fn solve(matrix: Vec<Vec<f64>>, rhs: Vec<PyTriangular>) -> PyResult<PySolution> {
    solver::solve(&triangular_system(matrix, rhs)?)
        .map(PySolution)
        .map_err(err)
}

/// Loads a problem file with a triangular right-hand side and solves it.
#[pyfunction]
fn solve_file(path: &str) -> PyResult<PySolution> {
    match io::load_problem(path).map_err(err)? {
        io::Problem::Triangular(sys) => solver::solve(&sys).map(PySolution).map_err(err),
        io::Problem::Parametric { .. } => Err(PyValueError::new_err(
            "parametric problem files: use solve_parametric",
        )),
    }
}

/// Vertices of the alpha-cut of a parametric system (core-midpoint b_cr).
#[pyfunction]
fn solve_parametric(
    matrix: Vec<Vec<f64>>,
    rhs: Vec<PyParametric>,
    alpha: f64,
) -> PyResult<Vec<Vec<f64>>> {
    let cut = solver::solve_parametric(&parametric_system(matrix, rhs)?, alpha).map_err(err)?;
    Ok(cut
        .vertices()
        .map_err(err)?
        .into_iter()
        .map(Vector::into_inner)
        .collect())
}

#[pyfunction]
fn membership_parametric(
    matrix: Vec<Vec<f64>>,
    rhs: Vec<PyParametric>,
    x: Vec<f64>,
) -> PyResult<Option<f64>> {
    solver::membership_parametric(&parametric_system(matrix, rhs)?, &Vector::new(x))
        .map(possibility)
        .map_err(err)
}

/// `(diag, perm)` with A = D P, or None.
#[pyfunction]
fn dp_decompose(matrix: Vec<Vec<f64>>) -> PyResult<Option<(Vec<f64>, Vec<usize>)>> {
    Ok(linalg::dp_decompose(&self::matrix(matrix)?).map(|f| (f.diag, f.perm)))
}

#[pyfunction]
fn extract_fuzzy_vector(
    matrix: Vec<Vec<f64>>,
    rhs: Vec<PyTriangular>,
) -> PyResult<Option<Vec<PyTriangular>>> {
    let x = solver::extract_fuzzy_vector(&triangular_system(matrix, rhs)?).map_err(err)?;
    Ok(x.map(|v| v.into_iter().map(PyTriangular).collect()))
}

/// Possibility computed straight from min_i mu_i((A x)_i), without A^-1.
#[pyfunction]
fn direct_possibility(
    matrix: Vec<Vec<f64>>,
    rhs: Vec<PyTriangular>,
    x: Vec<f64>,
) -> PyResult<Option<f64>> {
    oracle::direct_possibility(&triangular_system(matrix, rhs)?, &Vector::new(x))
        .map(possibility)
        .map_err(err)
}

#[pymodule]
fn pyfls(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTriangular>()?;
    m.add_class::<PyParametric>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_file, m)?)?;
    m.add_function(wrap_pyfunction!(solve_parametric, m)?)?;
    m.add_function(wrap_pyfunction!(membership_parametric, m)?)?;
    m.add_function(wrap_pyfunction!(dp_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(extract_fuzzy_vector, m)?)?;
    m.add_function(wrap_pyfunction!(direct_possibility, m)?)?;
    Ok(())
}
