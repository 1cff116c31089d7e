//! Dense univariate polynomials over a generic scalar ring.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty list, so equality is plain coefficient
//! equality. The scalar only has to be a commutative ring ([`Scalar`]), and
//! `Poly<T>` is itself a `Scalar`, so [`elem_sym`] below computes elementary
//! symmetric polynomials of numbers and of polynomials with the same code.
//! The crate instantiates everything at exact big rationals
//! ([`crate::RationalPoly`]).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Commutative-ring scalar: just enough structure for exact polynomial
/// arithmetic. Blanket-implemented for anything with the listed ops.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// Dense univariate polynomial, lowest-degree coefficient first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial from coefficients (index = power), trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of the k-th power (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn mul_scalar(&self, s: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Divides every coefficient by `s`; panics on division by zero, exactly
    /// like the underlying scalar does.
    pub fn div_scalar(&self, s: &T) -> Self
    where
        T: Div<Output = T>,
    {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.clone() / s.clone()).collect())
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Poly<T>) -> Poly<T> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            let sum = long[i].clone() + c;
            long[i] = sum;
        }
        Poly::from_coeffs(long)
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let term = a.clone() * b.clone();
                let sum = out[i + j].clone() + term;
                out[i + j] = sum;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

/// Renders in descending powers with exact coefficients, the variable named
/// `d`: `9/2*d^6 - 27*d^5 + ... + 525`.
impl<T> fmt::Display for Poly<T>
where
    T: Scalar + Signed + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if !(mag.is_one() && k > 0) {
                write!(f, "{}", mag)?;
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("d")?,
                _ => write!(f, "d^{}", k)?,
            }
        }
        Ok(())
    }
}

/// k-th elementary symmetric polynomial of the inputs, by the
/// generating-function recurrence: one pass over the values, updating the
/// coefficients of prod(t + v_i) up to degree k. Returns 1 for k = 0 and 0
/// for k > len, matching the usual convention.
pub fn elem_sym<T: Scalar>(k: usize, values: &[T]) -> T {
    if k > values.len() {
        return T::zero();
    }
    let mut e: Vec<T> = Vec::with_capacity(k + 1);
    e.push(T::one());
    e.resize(k + 1, T::zero());
    for v in values {
        for j in (1..=k).rev() {
            let bump = v.clone() * e[j - 1].clone();
            let sum = e[j].clone() + bump;
            e[j] = sum;
        }
    }
    e.pop().expect("k+1 coefficients were allocated")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpolationError {
    #[error("no sample points given")]
    Empty,
    #[error("duplicate abscissa: samples {first} and {second} share the same evaluation point")]
    DuplicateAbscissa { first: usize, second: usize },
}

/// Exact Lagrange interpolation: the unique polynomial of degree < number of
/// samples passing through all of them. Needs exact division, so the scalar
/// must be a field.
pub fn lagrange_interpolate<T>(points: &[(T, T)]) -> Result<Poly<T>, InterpolationError>
where
    T: Scalar + Div<Output = T>,
{
    if points.is_empty() {
        return Err(InterpolationError::Empty);
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].0 == points[j].0 {
                return Err(InterpolationError::DuplicateAbscissa { first: i, second: j });
            }
        }
    }
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut numer = Poly::one();
        let mut denom = T::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            numer = numer * Poly::from_coeffs(vec![-xj.clone(), T::one()]);
            denom = denom * (xi.clone() - xj.clone());
        }
        acc = acc + numer.mul_scalar(&(yi.clone() / denom));
    }
    Ok(acc)
}
