//! Triangular and parametric fuzzy numbers.
//!
//! A triangular number `(a, c, b)` has membership rising linearly from 0 at
//! `a` to 1 at `c` and falling back to 0 at `b`. A parametric number is given
//! by sampled alpha-cut boundaries `(f_L(alpha), f_R(alpha))`, evaluated by
//! linear interpolation between samples.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{invalid, Error, Result};

/// Closed real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `true` when `other` lies inside `self`, allowing `tol` of slack.
    pub fn encloses(&self, other: &Interval, tol: f64) -> bool {
        self.lo <= other.lo + tol && other.hi <= self.hi + tol
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// Common behaviour of the fuzzy numbers that may appear on a right-hand side.
pub trait FuzzyNumber {
    /// The alpha-cut `[L(alpha), R(alpha)]`.
    fn alpha_cut(&self, alpha: f64) -> Result<Interval>;

    /// Degree of membership of `x`, in `[0, 1]`.
    fn membership(&self, x: f64) -> f64;

    /// The 1-cut.
    fn core(&self) -> Interval;

    /// The closed 0-cut.
    fn support(&self) -> Interval;
}

/// Triangular fuzzy number `(a, c, b)` with `a <= c <= b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularFuzzyNumber {
    a: f64,
    c: f64,
    b: f64,
}

impl TriangularFuzzyNumber {
    pub fn new(a: f64, c: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && c.is_finite() && b.is_finite()) {
            return Err(invalid(
                "triangular fuzzy number",
                format!("non-finite component in ({a}, {c}, {b})"),
            ));
        }
        if !(a <= c && c <= b) {
            return Err(invalid(
                "triangular fuzzy number",
                format!("requires a <= c <= b, got ({a}, {c}, {b})"),
            ));
        }
        Ok(TriangularFuzzyNumber { a, c, b })
    }

    /// The crisp number `x` as `(x, x, x)`.
    pub fn crisp(x: f64) -> Self {
        TriangularFuzzyNumber { a: x, c: x, b: x }
    }

    /// Left endpoint of the support.
    pub fn left(&self) -> f64 {
        self.a
    }

    pub fn peak(&self) -> f64 {
        self.c
    }

    /// Right endpoint of the support.
    pub fn right(&self) -> f64 {
        self.b
    }

    pub fn crisp_part(&self) -> f64 {
        self.c
    }

    /// `(a - c, 0, b - c)`: the number translated so its peak sits at zero.
    pub fn uncertainty(&self) -> Self {
        TriangularFuzzyNumber {
            a: self.a - self.c,
            c: 0.0,
            b: self.b - self.c,
        }
    }

    /// Multiplication by a real; a negative factor swaps the endpoints.
    pub fn scale(&self, k: f64) -> Self {
        if k >= 0.0 {
            TriangularFuzzyNumber {
                a: k * self.a,
                c: k * self.c,
                b: k * self.b,
            }
        } else {
            TriangularFuzzyNumber {
                a: k * self.b,
                c: k * self.c,
                b: k * self.a,
            }
        }
    }

    /// Translation by a crisp amount.
    pub fn shift(&self, x: f64) -> Self {
        TriangularFuzzyNumber {
            a: self.a + x,
            c: self.c + x,
            b: self.b + x,
        }
    }

    pub fn is_crisp(&self) -> bool {
        self.a == self.c && self.c == self.b
    }

    pub fn as_tuple(&self) -> (f64, f64, f64) {
        (self.a, self.c, self.b)
    }
}

impl FuzzyNumber for TriangularFuzzyNumber {
    fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        check_alpha(alpha)?;
        Ok(Interval::new(
            self.a + alpha * (self.c - self.a),
            self.b + alpha * (self.c - self.b),
        ))
    }

    // A zero-width side is vertical: membership jumps from 0 to 1 at the peak.
    fn membership(&self, x: f64) -> f64 {
        if !(self.a <= x && x <= self.b) {
            0.0
        } else if x == self.c {
            1.0
        } else if x < self.c {
            (x - self.a) / (self.c - self.a)
        } else {
            (x - self.b) / (self.c - self.b)
        }
    }

    fn core(&self) -> Interval {
        Interval::new(self.c, self.c)
    }

    fn support(&self) -> Interval {
        Interval::new(self.a, self.b)
    }
}

impl Add for TriangularFuzzyNumber {
    type Output = TriangularFuzzyNumber;

    fn add(self, rhs: Self) -> Self {
        TriangularFuzzyNumber {
            a: self.a + rhs.a,
            c: self.c + rhs.c,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for TriangularFuzzyNumber {
    type Output = TriangularFuzzyNumber;

    /// `(a - e, c - f, b - d)` for `(a, c, b) - (d, f, e)`.
    fn sub(self, rhs: Self) -> Self {
        TriangularFuzzyNumber {
            a: self.a - rhs.b,
            c: self.c - rhs.c,
            b: self.b - rhs.a,
        }
    }
}

impl fmt::Display for TriangularFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.c, self.b)
    }
}

/// Fuzzy number in parametric form: boundary functions sampled on an alpha
/// grid running from 0 to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricFuzzyNumber {
    alphas: Vec<f64>,
    left: Vec<f64>,
    right: Vec<f64>,
}

impl ParametricFuzzyNumber {
    pub fn new(alphas: Vec<f64>, left: Vec<f64>, right: Vec<f64>) -> Result<Self> {
        const WHAT: &str = "parametric fuzzy number";
        if alphas.len() < 2 {
            return Err(invalid(WHAT, "needs at least two alpha samples"));
        }
        if left.len() != alphas.len() || right.len() != alphas.len() {
            return Err(invalid(
                WHAT,
                format!(
                    "sample counts differ: {} alphas, {} left, {} right",
                    alphas.len(),
                    left.len(),
                    right.len()
                ),
            ));
        }
        if alphas
            .iter()
            .chain(&left)
            .chain(&right)
            .any(|v| !v.is_finite())
        {
            return Err(invalid(WHAT, "non-finite sample"));
        }
        if alphas[0] != 0.0 || alphas[alphas.len() - 1] != 1.0 {
            return Err(invalid(WHAT, "alpha grid must start at 0 and end at 1"));
        }
        if alphas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(WHAT, "alpha grid must be strictly increasing"));
        }
        if left.windows(2).any(|w| w[0] > w[1]) {
            return Err(invalid(
                WHAT,
                "left boundary must be non-decreasing in alpha",
            ));
        }
        if right.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(
                WHAT,
                "right boundary must be non-increasing in alpha",
            ));
        }
        let last = alphas.len() - 1;
        if left[last] > right[last] {
            return Err(invalid(
                WHAT,
                format!(
                    "empty core: left(1) = {} > right(1) = {}",
                    left[last], right[last]
                ),
            ));
        }
        Ok(ParametricFuzzyNumber {
            alphas,
            left,
            right,
        })
    }

    /// Two-sample encoding of a triangular number; exact at every alpha.
    pub fn from_triangular(t: &TriangularFuzzyNumber) -> Self {
        ParametricFuzzyNumber {
            alphas: vec![0.0, 1.0],
            left: vec![t.a, t.c],
            right: vec![t.b, t.c],
        }
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn left_values(&self) -> &[f64] {
        &self.left
    }

    pub fn right_values(&self) -> &[f64] {
        &self.right
    }

    /// Midpoint of the core, the default crisp representative.
    pub fn core_midpoint(&self) -> f64 {
        let core = self.core();
        0.5 * (core.lo + core.hi)
    }

    fn interpolate(&self, values: &[f64], alpha: f64) -> f64 {
        let k = self.alphas.partition_point(|&a| a <= alpha);
        if k >= self.alphas.len() {
            return values[values.len() - 1];
        }
        let j = k - 1;
        let t = (alpha - self.alphas[j]) / (self.alphas[j + 1] - self.alphas[j]);
        values[j] + t * (values[j + 1] - values[j])
    }

    /// Largest alpha with `f_L(alpha) <= x`, for `f_L(0) <= x < f_L(1)`.
    fn left_inverse(&self, x: f64) -> f64 {
        let j = self.left.iter().rposition(|&v| v <= x).unwrap_or(0);
        let span = self.alphas[j + 1] - self.alphas[j];
        self.alphas[j] + (x - self.left[j]) / (self.left[j + 1] - self.left[j]) * span
    }

    /// Largest alpha with `f_R(alpha) >= x`, for `f_R(1) < x <= f_R(0)`.
    fn right_inverse(&self, x: f64) -> f64 {
        let j = self.right.iter().rposition(|&v| v >= x).unwrap_or(0);
        let span = self.alphas[j + 1] - self.alphas[j];
        self.alphas[j] + (self.right[j] - x) / (self.right[j] - self.right[j + 1]) * span
    }
}

impl FuzzyNumber for ParametricFuzzyNumber {
    fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        check_alpha(alpha)?;
        Ok(Interval::new(
            self.interpolate(&self.left, alpha),
            self.interpolate(&self.right, alpha),
        ))
    }

    // Flat stretches of a boundary resolve to the largest alpha attaining x.
    fn membership(&self, x: f64) -> f64 {
        let core = self.core();
        let support = self.support();
        if !support.contains(x) {
            0.0
        } else if core.contains(x) {
            1.0
        } else if x < core.lo {
            self.left_inverse(x)
        } else {
            self.right_inverse(x)
        }
    }

    fn core(&self) -> Interval {
        let last = self.alphas.len() - 1;
        Interval::new(self.left[last], self.right[last])
    }

    fn support(&self) -> Interval {
        Interval::new(self.left[0], self.right[0])
    }
}

impl From<&TriangularFuzzyNumber> for ParametricFuzzyNumber {
    fn from(t: &TriangularFuzzyNumber) -> Self {
        ParametricFuzzyNumber::from_triangular(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tri(a: f64, c: f64, b: f64) -> TriangularFuzzyNumber {
        TriangularFuzzyNumber::new(a, c, b).unwrap()
    }

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol
    }

    fn three_sample() -> ParametricFuzzyNumber {
        ParametricFuzzyNumber::new(
            vec![0.0, 0.5, 1.0],
            vec![0.0, 0.3, 0.4],
            vec![2.0, 1.5, 1.2],
        )
        .unwrap()
    }

    #[test]
    fn rejects_unordered_triple() {
        assert!(TriangularFuzzyNumber::new(3.0, 2.0, 4.0).is_err());
        assert!(TriangularFuzzyNumber::new(1.0, 2.0, 1.5).is_err());
        assert!(TriangularFuzzyNumber::new(f64::NAN, 2.0, 3.0).is_err());
    }

    #[test]
    fn membership_examples() {
        assert_eq!(tri(-2.0, -1.0, 1.0).membership(-1.0), 1.0);
        assert!(close(tri(-2.0, -1.0, 1.0).membership(-1.6), 0.4, 1e-12));
        assert_eq!(tri(5.0, 7.0, 8.0).membership(4.0), 0.0);
        assert_eq!(tri(5.0, 7.0, 8.0).membership(8.0), 0.0);
        assert!(close(tri(5.0, 7.0, 8.0).membership(7.5), 0.5, 1e-12));
    }

    #[test]
    fn degenerate_sides_are_vertical() {
        let left_flat = tri(2.0, 2.0, 4.0);
        assert_eq!(left_flat.membership(2.0), 1.0);
        assert_eq!(left_flat.membership(1.999), 0.0);
        assert!(close(left_flat.membership(3.0), 0.5, 1e-15));

        let right_flat = tri(0.0, 1.0, 1.0);
        assert_eq!(right_flat.membership(1.0), 1.0);
        assert_eq!(right_flat.membership(1.0 + 1e-12), 0.0);

        let crisp = TriangularFuzzyNumber::crisp(3.0);
        assert_eq!(crisp.membership(3.0), 1.0);
        assert_eq!(crisp.membership(3.1), 0.0);
        assert_eq!(crisp.membership(f64::NAN), 0.0);
    }

    #[test]
    fn alpha_cut_examples() {
        let cut = tri(-2.0, -1.0, 1.0).alpha_cut(0.4).unwrap();
        assert!(close(cut.lo, -1.6, 1e-12) && close(cut.hi, 0.2, 1e-12));
        let cut = tri(5.0, 7.0, 8.0).alpha_cut(0.7).unwrap();
        assert!(close(cut.lo, 6.4, 1e-12) && close(cut.hi, 7.3, 1e-12));
        let cut = tri(3.0, 3.0, 3.0).alpha_cut(0.5).unwrap();
        assert_eq!((cut.lo, cut.hi), (3.0, 3.0));
    }

    #[test]
    fn alpha_cut_rejects_out_of_range() {
        let u = tri(0.0, 1.0, 2.0);
        assert_eq!(u.alpha_cut(1.5), Err(Error::AlphaOutOfRange(1.5)));
        assert!(u.alpha_cut(-0.1).is_err());
        assert!(u.alpha_cut(f64::NAN).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(tri(1.0, 2.0, 3.0) + tri(0.0, 0.0, 0.0), tri(1.0, 2.0, 3.0));
        assert_eq!(
            tri(-4.0, -2.0, -1.0) + tri(-1.0, 0.0, 1.0),
            tri(-5.0, -2.0, 0.0)
        );
        assert_eq!(tri(1.0, 2.0, 3.0) + tri(4.0, 5.0, 6.0), tri(5.0, 7.0, 9.0));

        assert_eq!(tri(1.0, 2.0, 3.0).scale(2.0), tri(2.0, 4.0, 6.0));
        assert_eq!(tri(1.0, 2.0, 3.0).scale(-1.0), tri(-3.0, -2.0, -1.0));
        assert_eq!(tri(1.0, 2.0, 3.0).scale(0.0), tri(0.0, 0.0, 0.0));

        let crisp = |x| TriangularFuzzyNumber::crisp(x);
        assert_eq!(tri(-4.0, -2.0, -1.0) - crisp(-2.0), tri(-2.0, 0.0, 1.0));
        assert_eq!(tri(12.0, 14.0, 17.0) - crisp(14.0), tri(-2.0, 0.0, 3.0));
        let u = tri(1.0, 2.0, 3.0);
        assert_eq!(u - u, tri(-2.0, 0.0, 2.0));
    }

    #[test]
    fn crisp_part_and_uncertainty() {
        let u = tri(-4.0, -2.0, -1.0);
        assert_eq!(u.crisp_part(), -2.0);
        assert_eq!(u.uncertainty(), tri(-2.0, 0.0, 1.0));
        let u = tri(3.0, 3.0, 3.0);
        assert_eq!((u.crisp_part(), u.uncertainty()), (3.0, tri(0.0, 0.0, 0.0)));
        let u = tri(5.0, 7.0, 8.0);
        assert_eq!(
            (u.crisp_part(), u.uncertainty()),
            (7.0, tri(-2.0, 0.0, 1.0))
        );
    }

    #[test]
    fn parametric_validation() {
        let ok = |a: &[f64], l: &[f64], r: &[f64]| {
            ParametricFuzzyNumber::new(a.to_vec(), l.to_vec(), r.to_vec()).is_ok()
        };
        assert!(ok(&[0.0, 1.0], &[0.0, 1.0], &[2.0, 1.0]));
        assert!(!ok(&[0.0], &[0.0], &[0.0]));
        assert!(!ok(&[0.1, 1.0], &[0.0, 1.0], &[2.0, 1.0]));
        assert!(!ok(&[0.0, 0.5, 0.5, 1.0], &[0.0; 4], &[1.0; 4]));
        assert!(!ok(&[0.0, 1.0], &[1.0, 0.0], &[2.0, 1.0]));
        assert!(!ok(&[0.0, 1.0], &[0.0, 1.0], &[1.0, 2.0]));
        assert!(!ok(&[0.0, 1.0], &[0.0, 1.5], &[2.0, 1.0]));
        assert!(!ok(&[0.0, 1.0], &[0.0, 1.0], &[2.0]));
    }

    #[test]
    fn parametric_alpha_cut_examples() {
        let u = ParametricFuzzyNumber::from_triangular(&tri(-2.0, -1.0, 1.0));
        let cut = u.alpha_cut(0.4).unwrap();
        assert!(close(cut.lo, -1.6, 1e-12) && close(cut.hi, 0.2, 1e-12));

        let u = three_sample();
        assert_eq!(u.alpha_cut(1.0).unwrap(), Interval::new(0.4, 1.2));
        let cut = u.alpha_cut(0.25).unwrap();
        assert!(close(cut.lo, 0.15, 1e-12) && close(cut.hi, 1.75, 1e-12));
        assert_eq!(u.alpha_cut(0.5).unwrap(), Interval::new(0.3, 1.5));
        assert!(u.alpha_cut(1.01).is_err());
    }

    #[test]
    fn parametric_membership_examples() {
        let u = ParametricFuzzyNumber::from_triangular(&tri(-2.0, -1.0, 1.0));
        assert_eq!(u.membership(-1.0), 1.0);
        let u = ParametricFuzzyNumber::from_triangular(&tri(5.0, 7.0, 8.0));
        assert!(close(u.membership(6.4), 0.7, 1e-12));
        let u = three_sample();
        assert!(close(u.membership(1.75), 0.25, 1e-12));
        assert!(close(u.membership(0.15), 0.25, 1e-12));
        assert_eq!(u.membership(0.8), 1.0);
        assert_eq!(u.membership(2.5), 0.0);
        assert_eq!(u.membership(-0.1), 0.0);
        assert_eq!(u.membership(2.0), 0.0);
    }

    #[test]
    fn parametric_flat_segment_takes_largest_alpha() {
        // Right boundary is flat at 2.0 for alpha in [0, 0.5].
        let u = ParametricFuzzyNumber::new(
            vec![0.0, 0.5, 1.0],
            vec![0.0, 0.5, 1.0],
            vec![2.0, 2.0, 1.0],
        )
        .unwrap();
        assert_eq!(u.membership(2.0), 0.5);
        assert!(close(u.membership(1.5), 0.75, 1e-12));

        let u = ParametricFuzzyNumber::new(
            vec![0.0, 0.25, 0.75, 1.0],
            vec![0.0, 0.4, 0.4, 1.0],
            vec![3.0, 3.0, 3.0, 3.0],
        )
        .unwrap();
        assert_eq!(u.membership(0.4), 0.75);
        assert_eq!(u.membership(3.0), 1.0);
    }

    fn arb_tri() -> impl Strategy<Value = TriangularFuzzyNumber> {
        (-100.0f64..100.0, 0.0f64..50.0, 0.0f64..50.0)
            .prop_map(|(c, dl, dr)| tri(c - dl, c, c + dr))
    }

    // Integer-valued triples keep every subtraction exact.
    fn arb_integer_tri() -> impl Strategy<Value = TriangularFuzzyNumber> {
        (-1000i32..1000, 0i32..500, 0i32..500)
            .prop_map(|(c, dl, dr)| tri((c - dl) as f64, c as f64, (c + dr) as f64))
    }

    proptest! {
        #[test]
        fn membership_inverts_left_boundary(u in arb_tri(), alpha in 0.0f64..=1.0) {
            prop_assume!(u.left() < u.peak());
            let x = u.alpha_cut(alpha).unwrap().lo;
            prop_assert!(close(u.membership(x), alpha, 1e-12));
        }

        #[test]
        fn crisp_plus_uncertainty_reconstructs(u in arb_integer_tri()) {
            let rebuilt = u.uncertainty().shift(u.crisp_part());
            prop_assert_eq!(rebuilt, u);
        }

        #[test]
        fn scale_by_reciprocal_round_trips(u in arb_tri(), k in prop_oneof![-20.0f64..-0.05, 0.05f64..20.0]) {
            let back = u.scale(1.0 / k).scale(k);
            let tol = 1e-12 * (1.0 + u.left().abs().max(u.right().abs()));
            prop_assert!(close(back.left(), u.left(), tol));
            prop_assert!(close(back.peak(), u.peak(), tol));
            prop_assert!(close(back.right(), u.right(), tol));
        }

        #[test]
        fn alpha_cuts_are_nested(u in arb_tri(), a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let outer = u.alpha_cut(lo).unwrap();
            let inner = u.alpha_cut(hi).unwrap();
            prop_assert!(outer.encloses(&inner, 1e-12));
            prop_assert!(inner.lo <= inner.hi);
        }

        #[test]
        fn parametric_encoding_matches_triangular(u in arb_tri(), alpha in 0.0f64..=1.0, x in -160.0f64..160.0) {
            let p = ParametricFuzzyNumber::from_triangular(&u);
            let (tc, pc) = (u.alpha_cut(alpha).unwrap(), p.alpha_cut(alpha).unwrap());
            prop_assert!(close(tc.lo, pc.lo, 1e-12) && close(tc.hi, pc.hi, 1e-12));
            prop_assert!(close(u.membership(x), p.membership(x), 1e-12));
            let x = tc.lo;
            prop_assert!(close(u.membership(x), p.membership(x), 1e-12));
        }

        #[test]
        fn subtract_is_add_of_negation(u in arb_tri(), v in arb_tri()) {
            prop_assert_eq!(u - v, u + v.scale(-1.0));
        }

        #[test]
        fn scale_preserves_order(u in arb_tri(), k in -10.0f64..10.0) {
            let s = u.scale(k);
            prop_assert!(s.left() <= s.peak() && s.peak() <= s.right());
        }
    }
}
