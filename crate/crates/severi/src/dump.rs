//! Structured fixed-point census document.
//!
//! One JSON document per run: the cogenus, the weight triple, every fixed
//! point with its label, combinatorial data and weight forms (integer
//! coefficient triples), and the resulting polynomial as exact "num/den"
//! coefficient strings, lowest power first. The document round-trips: the
//! forms parsed back out of it re-sum to the same polynomial.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::blowup::enumerate_exceptional;
use crate::hilb::enumerate_fixed_points;
use crate::residue::{severi_polynomial, FixedPointDatum, ResidueError};
use crate::torus::{DForm, WeightForm, WeightTriple};
use crate::{Cogenus, Poly, Rational, RationalPoly};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DumpDocument {
    pub n: u8,
    pub weights: [i64; 3],
    pub fixed_points: Vec<DumpPoint>,
    /// Polynomial coefficients, lowest power first, as "num/den" strings.
    pub polynomial: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DumpPoint {
    pub label: String,
    #[serde(rename = "type")]
    pub kind: PointKind,
    pub supports: Vec<usize>,
    /// Partitions parallel to `supports`; absent for exceptional points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partitions: Option<Vec<Vec<u32>>>,
    /// Cubic exponent pair (r, s); absent for ordinary points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<(u32, u32)>,
    /// Tangent weights as coefficient triples [c0, c1, c2].
    pub alpha: Vec<[i64; 3]>,
    pub beta: Vec<DumpBeta>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DumpBeta {
    pub d_coeff: [i64; 3],
    #[serde(rename = "const")]
    pub constant: [i64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Ordinary,
    Exceptional,
}

fn alpha_triples(forms: &[WeightForm]) -> Vec<[i64; 3]> {
    forms.iter().map(|f| f.coefficients()).collect()
}

fn beta_triples(forms: &[DForm]) -> Vec<DumpBeta> {
    forms
        .iter()
        .map(|f| DumpBeta { d_coeff: f.d_part().coefficients(), constant: f.const_part().coefficients() })
        .collect()
}

/// Renders a rational as "num/den" with decimal digit strings, denominator
/// always present so parsers never guess.
pub fn rational_to_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Accepts "num/den" and plain "num".
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| format!("bad numerator in {:?}", text))?;
    let denom: BigInt = denom.parse().map_err(|_| format!("bad denominator in {:?}", text))?;
    if denom == BigInt::from(0) {
        return Err(format!("zero denominator in {:?}", text));
    }
    Ok(Rational::new(numer, denom))
}

/// Builds the census document for n at the given weights.
pub fn build_document(n: Cogenus, w: &WeightTriple) -> Result<DumpDocument, ResidueError> {
    let polynomial = severi_polynomial(n, w)?;
    let mut fixed_points = Vec::new();
    for fp in enumerate_fixed_points(n) {
        let supports: Vec<usize> = fp.supports().map(|(i, _)| i).collect();
        let partitions: Vec<Vec<u32>> = fp.supports().map(|(_, p)| p.parts().to_vec()).collect();
        fixed_points.push(DumpPoint {
            label: fp.label(),
            kind: PointKind::Ordinary,
            supports,
            partitions: Some(partitions),
            exponents: None,
            alpha: alpha_triples(&fp.alpha_weights()),
            beta: beta_triples(&fp.beta_weights()),
        });
    }
    if n == Cogenus::Three {
        for p in enumerate_exceptional() {
            fixed_points.push(DumpPoint {
                label: p.label(),
                kind: PointKind::Exceptional,
                supports: vec![p.support()],
                partitions: None,
                exponents: Some(p.exponents()),
                alpha: alpha_triples(&p.alpha_weights()),
                beta: beta_triples(&p.beta_weights()),
            });
        }
    }
    Ok(DumpDocument {
        n: n.value(),
        weights: w.values(),
        fixed_points,
        polynomial: polynomial.coeffs().iter().map(rational_to_string).collect(),
    })
}

/// Reconstructs residue input from a parsed document.
pub fn document_data(doc: &DumpDocument) -> Vec<FixedPointDatum> {
    doc.fixed_points
        .iter()
        .map(|p| FixedPointDatum {
            label: p.label.clone(),
            alphas: p.alpha.iter().map(|c| WeightForm::new(c[0], c[1], c[2])).collect(),
            betas: p
                .beta
                .iter()
                .map(|b| {
                    DForm::new(
                        WeightForm::new(b.d_coeff[0], b.d_coeff[1], b.d_coeff[2]),
                        WeightForm::new(b.constant[0], b.constant[1], b.constant[2]),
                    )
                })
                .collect(),
        })
        .collect()
}

/// The polynomial stored in a document.
pub fn document_polynomial(doc: &DumpDocument) -> Result<RationalPoly, String> {
    let coeffs: Result<Vec<Rational>, String> =
        doc.polynomial.iter().map(|s| parse_rational(s)).collect();
    Ok(Poly::from_coeffs(coeffs?))
}
