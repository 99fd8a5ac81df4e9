//! Fuzzy linear systems `A X = B` with a crisp square matrix and a fuzzy
//! right-hand side, solved as a fuzzy set of real vectors.
//!
//! The solution set is the parallelepiped `x_cr + A^-1 Pi`: `Pi` is the box
//! spanned by the right-hand-side uncertainties and `x_cr` solves the crisp
//! system of peaks. Each point carries the possibility with which it solves
//! the system; alpha-cuts are shrunken copies of the same parallelepiped.
//! A vector of fuzzy numbers solves the system for every right-hand side
//! exactly when `A` is a generalized permutation matrix.
//!
//! ```
//! use fls_core::prelude::*;
//!
//! let a = Matrix::from_rows(&[[3.0, 5.0], [1.0, -2.0]]).unwrap();
//! let rhs = vec![
//!     TriangularFuzzyNumber::new(-2.0, -1.0, 1.0).unwrap(),
//!     TriangularFuzzyNumber::new(5.0, 7.0, 8.0).unwrap(),
//! ];
//! let sol = solve(&FuzzyLinearSystem::new(a, rhs).unwrap()).unwrap();
//! assert!(sol.x_cr().max_abs_diff(&Vector::new(vec![3.0, -2.0])) < 1e-12);
//! let p = sol.membership(&Vector::new(vec![3.0, -2.0])).unwrap().possibility().unwrap();
//! assert!((p - 1.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod error;
pub mod fuzzy;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod solver;
pub mod svg;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::fuzzy::{FuzzyNumber, Interval, ParametricFuzzyNumber, TriangularFuzzyNumber};
    pub use crate::io::Problem;
    pub use crate::linalg::{dp_decompose, DPFactorization, Matrix, Vector};
    pub use crate::solver::{
        extract_fuzzy_vector, membership_parametric, solve, solve_parametric, CutParallelepiped,
        FuzzyLinearSystem, ParallelepipedSolution, ParametricSolution, ParametricSystem,
        PossibilityResult, TriangularSystem,
    };
}
