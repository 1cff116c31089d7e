//! Integer weights of the diagonal torus action on the plane.
//!
//! A one-parameter subgroup acting diagonally on the homogeneous coordinates
//! (Z0, Z1, Z2) is recorded as a [`WeightTriple`] (w0, w1, w2). Tangent
//! weights at fixed points are integer linear forms in the three weights
//! ([`WeightForm`]); weights on fibers of the section bundle additionally
//! depend linearly on the curve degree d ([`DForm`]). Everything evaluates
//! in exact integer arithmetic, and the residue sums are independent of the
//! chosen weights as long as they are generic ([`check_generic`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::{rat, Cogenus, Poly, RationalPoly};

/// The three integer weights of the diagonal torus action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightTriple([i64; 3]);

impl WeightTriple {
    pub fn new(w0: i64, w1: i64, w2: i64) -> Self {
        WeightTriple([w0, w1, w2])
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn values(&self) -> [i64; 3] {
        self.0
    }
}

impl fmt::Display for WeightTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected three comma-separated integers such as 0,1,3 (got {0:?})")]
pub struct ParseWeightsError(String);

impl FromStr for WeightTriple {
    type Err = ParseWeightsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(ParseWeightsError(s.to_string()));
        }
        let mut w = [0i64; 3];
        for (slot, text) in w.iter_mut().zip(&parts) {
            *slot = text.parse().map_err(|_| ParseWeightsError(s.to_string()))?;
        }
        Ok(WeightTriple(w))
    }
}

/// Integer linear form c0*w0 + c1*w1 + c2*w2 in the torus weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeightForm([i64; 3]);

impl WeightForm {
    pub fn new(c0: i64, c1: i64, c2: i64) -> Self {
        WeightForm([c0, c1, c2])
    }

    /// The form w_i.
    pub fn basis(i: usize) -> Self {
        let mut c = [0i64; 3];
        c[i] = 1;
        WeightForm(c)
    }

    /// The form w_j - w_i: weight of the tangent direction at the coordinate
    /// point [z_i] pointing toward [z_j].
    pub fn difference(j: usize, i: usize) -> Self {
        WeightForm::basis(j) - WeightForm::basis(i)
    }

    pub fn coefficients(&self) -> [i64; 3] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn eval(&self, w: &WeightTriple) -> i64 {
        (0..3).map(|i| self.0[i] * w.get(i)).sum()
    }

    /// Relabels the coordinate points: coefficient t moves to slot perm[t].
    pub fn permuted(&self, perm: &[usize; 3]) -> Self {
        let mut c = [0i64; 3];
        for (t, &coeff) in self.0.iter().enumerate() {
            c[perm[t]] = coeff;
        }
        WeightForm(c)
    }
}

impl Add for WeightForm {
    type Output = WeightForm;
    fn add(self, rhs: WeightForm) -> WeightForm {
        WeightForm([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for WeightForm {
    type Output = WeightForm;
    fn sub(self, rhs: WeightForm) -> WeightForm {
        self + (-rhs)
    }
}

impl Neg for WeightForm {
    type Output = WeightForm;
    fn neg(self) -> WeightForm {
        WeightForm([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<i64> for WeightForm {
    type Output = WeightForm;
    fn mul(self, k: i64) -> WeightForm {
        WeightForm([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }
}

impl fmt::Display for WeightForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "w{}", i)?;
        }
        Ok(())
    }
}

/// Linear form d*d_part + const_part: how a section weight depends on the
/// curve degree d on top of the torus weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DForm {
    d_part: WeightForm,
    const_part: WeightForm,
}

impl DForm {
    pub fn new(d_part: WeightForm, const_part: WeightForm) -> Self {
        DForm { d_part, const_part }
    }

    pub fn d_part(&self) -> WeightForm {
        self.d_part
    }

    pub fn const_part(&self) -> WeightForm {
        self.const_part
    }

    pub fn eval(&self, w: &WeightTriple, d: i64) -> i64 {
        d * self.d_part.eval(w) + self.const_part.eval(w)
    }

    /// Same as [`DForm::eval`] but without any overflow concern for large d.
    pub fn eval_big(&self, w: &WeightTriple, d: &BigInt) -> BigInt {
        d * BigInt::from(self.d_part.eval(w)) + BigInt::from(self.const_part.eval(w))
    }

    /// Substitutes the weights only, leaving a degree-<=1 polynomial in d
    /// with integer coefficients.
    pub fn to_poly(&self, w: &WeightTriple) -> RationalPoly {
        Poly::from_coeffs(vec![rat(self.const_part.eval(w)), rat(self.d_part.eval(w))])
    }

    pub fn permuted(&self, perm: &[usize; 3]) -> Self {
        DForm {
            d_part: self.d_part.permuted(perm),
            const_part: self.const_part.permuted(perm),
        }
    }
}

impl fmt::Display for DForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Renders per coordinate: the w_i piece is (a*d + b)*w_i, folded into
        // the familiar shapes -d*w0, -(d-1)*w0, -3*w1, ...
        let mut pieces: Vec<(bool, String)> = Vec::new();
        for i in 0..3 {
            let a = self.d_part.coefficients()[i];
            let b = self.const_part.coefficients()[i];
            let piece = match (a, b) {
                (0, 0) => continue,
                (a, 0) => {
                    let mag = if a.abs() == 1 { "d".to_string() } else { format!("{}*d", a.abs()) };
                    (a < 0, format!("{}*w{}", mag, i))
                }
                (0, b) => {
                    let mag = if b.abs() == 1 { String::new() } else { format!("{}*", b.abs()) };
                    (b < 0, format!("{}w{}", mag, i))
                }
                (a, b) if a.abs() == 1 => {
                    let inner = if (b < 0) == (a < 0) {
                        // same sign: a*(d + |b/a|)
                        format!("(d + {})", b.abs())
                    } else {
                        format!("(d - {})", b.abs())
                    };
                    (a < 0, format!("{}*w{}", inner, i))
                }
                (a, b) => {
                    let sign = if b < 0 { '-' } else { '+' };
                    (false, format!("({}*d {} {})*w{}", a, sign, b.abs(), i))
                }
            };
            pieces.push(piece);
        }
        if pieces.is_empty() {
            return f.write_str("0");
        }
        for (idx, (neg, text)) in pieces.iter().enumerate() {
            if idx == 0 {
                if *neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if *neg { " - " } else { " + " })?;
            }
            f.write_str(text)?;
        }
        Ok(())
    }
}

/// How a weight triple fails to be generic. Display names the violated
/// relation, e.g. `w0+w2 = 2*w1 (0+2 = 2*1)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Degeneracy {
    #[error("repeated weight: w{i} = w{j} (both equal {value})")]
    Repeated { i: usize, j: usize, value: i64 },
    #[error("w{i}+w{j} = 2*w{k} ({wi}+{wj} = 2*{wk})")]
    SumTwice { i: usize, j: usize, k: usize, wi: i64, wj: i64, wk: i64 },
}

/// Checks that every tangent weight occurring for the given number of nodes
/// evaluates to a nonzero integer. One or two nodes only need the weights
/// pairwise distinct; three nodes additionally need that no two weights sum
/// to twice the third (the relation hit by the triple-point and exceptional
/// tangent weights).
pub fn check_generic(w: &WeightTriple, n: Cogenus) -> Result<(), Degeneracy> {
    for i in 0..3 {
        for j in (i + 1)..3 {
            if w.get(i) == w.get(j) {
                return Err(Degeneracy::Repeated { i, j, value: w.get(i) });
            }
        }
    }
    if n == Cogenus::Three {
        for k in 0..3 {
            let (i, j) = match k {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            if w.get(i) + w.get(j) == 2 * w.get(k) {
                return Err(Degeneracy::SumTwice {
                    i,
                    j,
                    k,
                    wi: w.get(i),
                    wj: w.get(j),
                    wk: w.get(k),
                });
            }
        }
    }
    Ok(())
}

/// Deterministic sampler of generic weight triples with entries in
/// [-50, 50], used by the weight-independence checks. SplitMix64 underneath,
/// so a fixed seed reproduces the same triples everywhere.
#[derive(Debug, Clone)]
pub struct WeightSampler {
    state: u64,
}

impl WeightSampler {
    pub fn new(seed: u64) -> Self {
        WeightSampler { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn next_weight(&mut self) -> i64 {
        (self.next_u64() % 101) as i64 - 50
    }

    /// Draws triples until one passes [`check_generic`] for the given n.
    pub fn next_generic(&mut self, n: Cogenus) -> WeightTriple {
        loop {
            let w = WeightTriple::new(self.next_weight(), self.next_weight(), self.next_weight());
            if check_generic(&w, n).is_ok() {
                return w;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn default_triples_pass_their_checks() {
        assert!(check_generic(&WeightTriple::new(0, 1, 2), Cogenus::Two).is_ok());
        assert!(check_generic(&WeightTriple::new(0, 1, 3), Cogenus::Three).is_ok());
    }

    #[test]
    fn arithmetic_progression_fails_for_three_nodes() {
        let err = check_generic(&WeightTriple::new(0, 1, 2), Cogenus::Three).unwrap_err();
        assert_eq!(
            err,
            Degeneracy::SumTwice { i: 0, j: 2, k: 1, wi: 0, wj: 2, wk: 1 }
        );
        assert!(err.to_string().contains("0+2 = 2*1"));
    }

    #[test]
    fn repeated_weight_is_rejected() {
        let err = check_generic(&WeightTriple::new(0, 0, 1), Cogenus::One).unwrap_err();
        assert!(err.to_string().contains("repeated weight"));
    }

    #[test]
    fn genericity_ignores_order_and_common_shift() {
        // only weight differences enter the relations
        for n in Cogenus::ALL {
            let base = WeightTriple::new(2, -7, 11);
            let shifted = WeightTriple::new(2 + 13, -7 + 13, 11 + 13);
            let swapped = WeightTriple::new(11, 2, -7);
            assert_eq!(check_generic(&base, n).is_ok(), check_generic(&shifted, n).is_ok());
            assert_eq!(check_generic(&base, n).is_ok(), check_generic(&swapped, n).is_ok());
        }
    }

    #[test]
    fn form_evaluation_is_exact_substitution() {
        let w = WeightTriple::new(0, 1, 3);
        assert_eq!(WeightForm::new(-1, 1, 0).eval(&w), 1);

        // -d*w0 at w0 = 0 collapses to the zero polynomial
        let form = DForm::new(WeightForm::new(-1, 0, 0), WeightForm::new(0, 0, 0));
        assert!(form.to_poly(&w).is_zero());

        // -d*w1 + w0 at d = 4
        let form = DForm::new(WeightForm::new(0, -1, 0), WeightForm::new(1, 0, 0));
        assert_eq!(form.eval(&w, 4), -4);
    }

    #[test]
    fn parsing_weights() {
        assert_eq!("0,1,3".parse::<WeightTriple>().unwrap(), WeightTriple::new(0, 1, 3));
        assert_eq!(" -5, 1,2 ".parse::<WeightTriple>().unwrap(), WeightTriple::new(-5, 1, 2));
        assert!("0,1".parse::<WeightTriple>().is_err());
        assert!("a,b,c".parse::<WeightTriple>().is_err());
    }

    #[test]
    fn display_of_forms() {
        assert_eq!(WeightForm::new(-2, 2, 0).to_string(), "-2*w0 + 2*w1");
        assert_eq!(WeightForm::difference(1, 0).to_string(), "-w0 + w1");
        let beta = DForm::new(WeightForm::new(-1, 0, 0), WeightForm::new(1, -1, 0));
        assert_eq!(beta.to_string(), "-(d - 1)*w0 - w1");
        let beta = DForm::new(WeightForm::new(-1, 0, 0), WeightForm::new(0, 0, 0));
        assert_eq!(beta.to_string(), "-d*w0");
    }

    #[test]
    fn sampler_is_deterministic_and_generic() {
        let mut a = WeightSampler::new(42);
        let mut b = WeightSampler::new(42);
        for _ in 0..20 {
            let wa = a.next_generic(Cogenus::Three);
            let wb = b.next_generic(Cogenus::Three);
            assert_eq!(wa, wb);
            assert!(check_generic(&wa, Cogenus::Three).is_ok());
            assert!(wa.values().iter().all(|v| (-50..=50).contains(v)));
        }
    }

    #[test]
    fn permuting_a_form_relabels_coefficients() {
        let form = WeightForm::new(1, -2, 3);
        assert_eq!(form.permuted(&[2, 0, 1]), WeightForm::new(-2, 3, 1));
    }
}
