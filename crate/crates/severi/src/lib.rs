//! Exact calculator for the degrees of Severi varieties of nodal plane curves.
//!
//! For n = 1, 2, 3 nodes, the closure of the locus of reduced degree-d plane
//! curves with exactly n nodes has codimension n in the projective space of
//! all degree-d curves, and its degree is a polynomial f_n(d). Each f_n is
//! the top Chern number of a rank-3n bundle of sections over a resolution of
//! the ideal-squaring map on the Hilbert scheme of n points in the plane. A
//! diagonal torus action has finitely many fixed points there, so the Bott
//! residue formula turns the Chern number into an exact rational sum over the
//! fixed-point census; the sum is carried out symbolically in d with
//! arbitrary-precision rational arithmetic.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`] — dense univariate polynomials over a generic scalar ring,
//!   elementary symmetric polynomials, Lagrange interpolation;
//! * [`torus`] — integer weight triples and the linear forms built from them;
//! * [`ideal`] — partitions, punctual monomial ideals, staircases, squaring;
//! * [`hilb`] — the ordinary torus-fixed points and their weights;
//! * [`blowup`] — the exceptional fixed points over the fat-point locus;
//! * [`residue`] — per-point Bott terms and the global sums;
//! * [`golden`] — embedded reference weight tables and degree polynomials;
//! * [`dump`] — the structured fixed-point census document;
//! * [`app`] — the command-line driver.

pub mod app;
pub mod blowup;
pub mod dump;
pub mod golden;
pub mod hilb;
pub mod ideal;
pub mod poly;
pub mod residue;
pub mod torus;

use std::fmt;

use num_bigint::BigInt;

pub use poly::{elem_sym, lagrange_interpolate, Poly};
pub use residue::{interpolation_crosscheck, severi_degree, severi_polynomial};
pub use torus::{check_generic, DForm, Degeneracy, WeightForm, WeightTriple};

/// Exact arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Polynomial in the curve degree d with exact rational coefficients.
pub type RationalPoly = Poly<Rational>;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator; panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Number of nodes imposed on the curves. Only 1, 2 and 3 are supported:
/// those are the cases where the squaring map on the Hilbert scheme of
/// points has a known resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cogenus {
    One,
    Two,
    Three,
}

impl Cogenus {
    pub const ALL: [Cogenus; 3] = [Cogenus::One, Cogenus::Two, Cogenus::Three];

    pub fn from_u8(n: u8) -> Option<Self> {
        match n {
            1 => Some(Cogenus::One),
            2 => Some(Cogenus::Two),
            3 => Some(Cogenus::Three),
            _ => None,
        }
    }

    pub fn value(self) -> u8 {
        match self {
            Cogenus::One => 1,
            Cogenus::Two => 2,
            Cogenus::Three => 3,
        }
    }

    /// Dimension 2n of the space the residue formula localizes on; also the
    /// Chern degree taken of the section bundle.
    pub fn dimension(self) -> usize {
        2 * self.value() as usize
    }

    /// Rank 3n of the section bundle: a squared n-point ideal imposes 3n
    /// conditions on curves.
    pub fn bundle_rank(self) -> usize {
        3 * self.value() as usize
    }

    /// Torus weights used when the caller does not supply any. For three
    /// nodes, (0,1,2) is degenerate (0+2 = 2*1) so (0,1,3) is used instead.
    pub fn default_weights(self) -> WeightTriple {
        match self {
            Cogenus::One | Cogenus::Two => WeightTriple::new(0, 1, 2),
            Cogenus::Three => WeightTriple::new(0, 1, 3),
        }
    }

    /// Smallest d for which f_n(d) is literally the degree of the n-nodal
    /// locus. The polynomial itself is computed for every d.
    pub fn min_geometric_degree(self) -> i64 {
        match self {
            Cogenus::One => 1,
            Cogenus::Two | Cogenus::Three => 3,
        }
    }
}

impl fmt::Display for Cogenus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}
