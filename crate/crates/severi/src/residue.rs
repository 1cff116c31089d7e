//! The Bott residue summation.
//!
//! At every torus-fixed point q the formula contributes
//! sigma_2n(beta_1(q), ..., beta_3n(q)) / prod_j alpha_j(q): the 2n-th
//! elementary symmetric polynomial of the bundle weights over the product of
//! the tangent weights. Summed over the whole census this gives the top
//! Chern number of the section bundle, which is the Severi degree f_n(d).
//!
//! The primary path keeps d symbolic: after substituting the weight triple,
//! every beta is a degree-<=1 polynomial in d, the numerator has degree
//! <= 2n, and the denominator is a nonzero integer. The numeric path
//! ([`severi_degree`]) evaluates everything at a concrete d instead and is
//! kept as an independent cross-check via Lagrange interpolation
//! ([`interpolation_crosscheck`]).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::blowup::enumerate_exceptional;
use crate::hilb::enumerate_fixed_points;
use crate::poly::{elem_sym, lagrange_interpolate};
use crate::torus::{check_generic, DForm, Degeneracy, WeightForm, WeightTriple};
use crate::{rat, Cogenus, Rational, RationalPoly};

/// Everything the residue formula needs to know about one fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub label: String,
    pub alphas: Vec<WeightForm>,
    pub betas: Vec<DForm>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResidueError {
    #[error("degenerate weights: {0}")]
    Degenerate(#[from] Degeneracy),
    #[error("tangent weight {form} vanishes at {weights} (fixed point {label})")]
    ZeroAlpha { label: String, form: WeightForm, weights: WeightTriple },
    #[error("fixed point {label} carries {alphas} tangent and {betas} bundle weights; expected {expected_alphas} and {expected_betas}")]
    MalformedDatum { label: String, alphas: usize, betas: usize, expected_alphas: usize, expected_betas: usize },
    #[error("Bott sum at d = {d} is not an integer: {value} (weight-table or arithmetic bug)")]
    NonIntegerSum { d: i64, value: Rational },
}

/// The full fixed-point census for n nodes, as residue data: the ordinary
/// points, plus the twelve exceptional points when n = 3.
pub fn fixed_point_data(n: Cogenus) -> Vec<FixedPointDatum> {
    let mut out: Vec<FixedPointDatum> = enumerate_fixed_points(n)
        .iter()
        .map(|fp| FixedPointDatum {
            label: fp.label(),
            alphas: fp.alpha_weights(),
            betas: fp.beta_weights(),
        })
        .collect();
    if n == Cogenus::Three {
        out.extend(enumerate_exceptional().iter().map(|p| FixedPointDatum {
            label: p.label(),
            alphas: p.alpha_weights(),
            betas: p.beta_weights(),
        }));
    }
    out
}

fn check_datum(datum: &FixedPointDatum, n: Cogenus) -> Result<(), ResidueError> {
    if datum.alphas.len() != n.dimension() || datum.betas.len() != n.bundle_rank() {
        return Err(ResidueError::MalformedDatum {
            label: datum.label.clone(),
            alphas: datum.alphas.len(),
            betas: datum.betas.len(),
            expected_alphas: n.dimension(),
            expected_betas: n.bundle_rank(),
        });
    }
    Ok(())
}

/// Product of the evaluated tangent weights, re-asserting nonvanishing for
/// every single one rather than trusting the genericity predicate.
fn alpha_product(datum: &FixedPointDatum, w: &WeightTriple) -> Result<BigInt, ResidueError> {
    let mut denom = BigInt::one();
    for form in &datum.alphas {
        let value = form.eval(w);
        if value == 0 {
            return Err(ResidueError::ZeroAlpha {
                label: datum.label.clone(),
                form: *form,
                weights: *w,
            });
        }
        denom *= BigInt::from(value);
    }
    Ok(denom)
}

/// The contribution of one fixed point, symbolically in d: a polynomial of
/// degree <= 2n with exact rational coefficients.
pub fn bott_term(
    datum: &FixedPointDatum,
    w: &WeightTriple,
    n: Cogenus,
) -> Result<RationalPoly, ResidueError> {
    check_datum(datum, n)?;
    let denom = alpha_product(datum, w)?;
    let betas: Vec<RationalPoly> = datum.betas.iter().map(|b| b.to_poly(w)).collect();
    let numer = elem_sym(n.dimension(), &betas);
    let term = numer.div_scalar(&Rational::from_integer(denom));
    debug_assert!(term.degree().unwrap_or(0) <= n.dimension());
    Ok(term)
}

/// Sums the residue terms of the given data. Exposed separately so a parsed
/// census document can be re-summed through the identical path.
pub fn bott_sum(
    data: &[FixedPointDatum],
    w: &WeightTriple,
    n: Cogenus,
) -> Result<RationalPoly, ResidueError> {
    let mut total = RationalPoly::zero();
    for datum in data {
        total = total + bott_term(datum, w, n)?;
    }
    Ok(total)
}

/// The Severi degree polynomial f_n(d), exactly. Independent of the weight
/// triple as long as it is generic.
pub fn severi_polynomial(n: Cogenus, w: &WeightTriple) -> Result<RationalPoly, ResidueError> {
    check_generic(w, n)?;
    bott_sum(&fixed_point_data(n), w, n)
}

/// The numeric Bott sum at a concrete degree d. Runs entirely in scalar
/// rational arithmetic (no polynomials), and fails loudly if the total is
/// not an integer.
pub fn severi_degree(n: Cogenus, d: i64, w: &WeightTriple) -> Result<BigInt, ResidueError> {
    check_generic(w, n)?;
    let big_d = BigInt::from(d);
    let mut total = Rational::zero();
    for datum in &fixed_point_data(n) {
        check_datum(datum, n)?;
        let denom = alpha_product(datum, w)?;
        let values: Vec<Rational> = datum
            .betas
            .iter()
            .map(|b| Rational::from_integer(b.eval_big(w, &big_d)))
            .collect();
        let numer = elem_sym(n.dimension(), &values);
        total += numer / Rational::from_integer(denom);
    }
    if !total.is_integer() {
        return Err(ResidueError::NonIntegerSum { d, value: total });
    }
    Ok(total.to_integer())
}

/// Outcome of the numeric-then-interpolate consistency run.
#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    pub n: Cogenus,
    pub weights: WeightTriple,
    pub samples: Vec<(i64, BigInt)>,
    pub interpolated: RationalPoly,
    pub symbolic: RationalPoly,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.interpolated == self.symbolic
    }
}

/// Evaluates the numeric Bott sum at 2n+1 consecutive degrees starting at
/// n+1, interpolates, and compares against the symbolic polynomial.
pub fn interpolation_crosscheck(
    n: Cogenus,
    w: &WeightTriple,
) -> Result<CrosscheckReport, ResidueError> {
    let start = n.value() as i64 + 1;
    let count = n.dimension() + 1;
    let mut samples = Vec::with_capacity(count);
    for d in start..start + count as i64 {
        samples.push((d, severi_degree(n, d, w)?));
    }
    let points: Vec<(Rational, Rational)> = samples
        .iter()
        .map(|(d, v)| (rat(*d), Rational::from_integer(v.clone())))
        .collect();
    let interpolated =
        lagrange_interpolate(&points).expect("consecutive integer abscissae are distinct");
    let symbolic = severi_polynomial(n, w)?;
    Ok(CrosscheckReport { n, weights: *w, samples, interpolated, symbolic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::ratio;

    fn w012() -> WeightTriple {
        WeightTriple::new(0, 1, 2)
    }

    #[test]
    fn census_sizes() {
        assert_eq!(fixed_point_data(Cogenus::One).len(), 3);
        assert_eq!(fixed_point_data(Cogenus::Two).len(), 9);
        assert_eq!(fixed_point_data(Cogenus::Three).len(), 31);
    }

    #[test]
    fn single_point_terms_for_one_node() {
        // hand-evaluated contributions at weights (0, 1, 2)
        let data = fixed_point_data(Cogenus::One);
        let by_label = |label: &str| {
            data.iter().find(|d| d.label == label).expect("census label")
        };
        let term = |label: &str| bott_term(by_label(label), &w012(), Cogenus::One).unwrap();
        assert_eq!(term("z0"), Poly::constant(rat(1)));
        assert_eq!(term("z1"), Poly::from_coeffs(vec![rat(1), rat(0), rat(-3)]));
        assert_eq!(term("z2"), Poly::from_coeffs(vec![rat(1), rat(-6), rat(6)]));
    }

    #[test]
    fn one_node_polynomial() {
        let f1 = severi_polynomial(Cogenus::One, &w012()).unwrap();
        assert_eq!(f1, Poly::from_coeffs(vec![rat(3), rat(-6), rat(3)]));
    }

    #[test]
    fn degenerate_weights_are_refused() {
        let err = severi_polynomial(Cogenus::Three, &w012()).unwrap_err();
        assert!(matches!(err, ResidueError::Degenerate(_)));
        assert!(err.to_string().contains("0+2 = 2*1"));
    }

    #[test]
    fn zero_alpha_is_reported_with_the_label() {
        let datum = FixedPointDatum {
            label: "bogus".into(),
            alphas: vec![WeightForm::new(0, 0, 0), WeightForm::new(1, 0, 0)],
            betas: vec![
                DForm::new(WeightForm::new(-1, 0, 0), WeightForm::new(0, 0, 0));
                3
            ],
        };
        let err = bott_term(&datum, &w012(), Cogenus::One).unwrap_err();
        assert!(matches!(err, ResidueError::ZeroAlpha { .. }));
        assert!(err.to_string().contains("bogus"));
    }

    #[test]
    fn malformed_data_is_rejected() {
        let datum = FixedPointDatum { label: "short".into(), alphas: vec![], betas: vec![] };
        assert!(matches!(
            bott_term(&datum, &w012(), Cogenus::One),
            Err(ResidueError::MalformedDatum { .. })
        ));
    }

    #[test]
    fn numeric_and_symbolic_paths_agree_spotwise() {
        for (n, d, expected) in [
            (Cogenus::One, 1, 0i64),
            (Cogenus::One, 2, 3),
            (Cogenus::Two, 3, 21),
            (Cogenus::Three, 3, 15),
            (Cogenus::Three, 4, 675),
        ] {
            let w = n.default_weights();
            assert_eq!(severi_degree(n, d, &w).unwrap(), BigInt::from(expected));
            let f = severi_polynomial(n, &w).unwrap();
            assert_eq!(f.eval(&rat(d)), rat(expected));
        }
    }

    #[test]
    fn crosscheck_passes_for_all_n() {
        for n in Cogenus::ALL {
            let report = interpolation_crosscheck(n, &n.default_weights()).unwrap();
            assert!(report.passed(), "n = {}", n);
            assert_eq!(report.samples.len(), n.dimension() + 1);
        }
    }

    #[test]
    fn term_degrees_are_bounded() {
        for n in Cogenus::ALL {
            let w = n.default_weights();
            for datum in fixed_point_data(n) {
                let term = bott_term(&datum, &w, n).unwrap();
                assert!(term.degree().unwrap_or(0) <= n.dimension(), "{}", datum.label);
            }
        }
    }

    #[test]
    fn two_node_polynomial_matches_its_factored_form() {
        // (3/2)(d-1)(d-2)(3d^2 - 3d - 11)
        let factored = Poly::constant(ratio(3, 2))
            * Poly::from_coeffs(vec![rat(-1), rat(1)])
            * Poly::from_coeffs(vec![rat(-2), rat(1)])
            * Poly::from_coeffs(vec![rat(-11), rat(-3), rat(3)]);
        assert_eq!(severi_polynomial(Cogenus::Two, &w012()).unwrap(), factored);
    }
}
