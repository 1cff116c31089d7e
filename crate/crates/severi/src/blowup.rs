//! The twelve exceptional fixed points for n = 3.
//!
//! Squaring is not flat at a fat point (the square of a maximal ideal has
//! length 10 instead of 9), so the three-point Hilbert scheme is blown up
//! along the locus F of fat points before pushing forward. Over each of the
//! three fixed fat points [F_i] the exceptional fiber is the P^3 of cubic
//! forms in the chart coordinates, with four isolated fixed points: the
//! cubic monomial classes P_{r,s} = [x^r y^s], r + s = 3.
//!
//! Tangent weights are derived intrinsically from the blow-up structure:
//! two directions along F, three along the fiber P^3, and one normal to the
//! exceptional divisor carrying the weight of the tautological line. The
//! limit subscheme at P_{r,s} is the ideal (m^4, x^r y^s) of colength 9,
//! which plugs straight into the staircase machinery for section weights.

use crate::hilb::{chart, section_weight};
use crate::ideal::MonomialIdeal;
use crate::torus::{DForm, WeightForm};

/// Exponent pairs (r, s) with r + s = 3, in the fixed order used everywhere.
pub const CUBIC_EXPONENTS: [(u32, u32); 4] = [(3, 0), (2, 1), (1, 2), (0, 3)];

/// Fixed point of the exceptional fiber over the fat point at [z_i]: the
/// class of the cubic chart monomial x^r y^s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExceptionalFixedPoint {
    support: usize,
    exponents: (u32, u32),
}

impl ExceptionalFixedPoint {
    pub fn new(support: usize, exponents: (u32, u32)) -> Self {
        assert!(support < 3 && exponents.0 + exponents.1 == 3);
        ExceptionalFixedPoint { support, exponents }
    }

    pub fn support(&self) -> usize {
        self.support
    }

    pub fn exponents(&self) -> (u32, u32) {
        self.exponents
    }

    pub fn label(&self) -> String {
        format!("P({};{},{})", self.support, self.exponents.0, self.exponents.1)
    }

    /// The six tangent weights, assembled from the three-part intrinsic
    /// description of the blow-up rather than from a lookup table.
    pub fn alpha_weights(&self) -> Vec<WeightForm> {
        let i = self.support;
        let (j, k) = chart(i);
        let own = monomial_weight(i, self.exponents);
        let mut out = vec![WeightForm::difference(j, i), WeightForm::difference(k, i)];
        // fiber directions inside P^3: toward each of the other monomials
        for &e in &CUBIC_EXPONENTS {
            if e != self.exponents {
                out.push(monomial_weight(i, e) - own);
            }
        }
        // normal to the exceptional divisor: the tautological line sits
        // inside Hom(K, cubics), where K is the degree-4 kernel line of
        // multiplication on squares of quadrics, of weight 2a + 2b.
        out.push(own - monomial_weight(i, (2, 2)));
        out
    }

    /// Limit subscheme on the exceptional fiber: (m^4, x^r y^s), length 9.
    pub fn limit_ideal(&self) -> MonomialIdeal {
        let mut gens: Vec<(u32, u32)> = (0..=4).map(|a| (a, 4 - a)).collect();
        gens.push(self.exponents);
        MonomialIdeal::new(gens)
    }

    /// The nine section weights: all chart monomials of degree <= 3 except
    /// x^r y^s itself.
    pub fn beta_weights(&self) -> Vec<DForm> {
        let staircase = self
            .limit_ideal()
            .staircase()
            .expect("limit ideals have finite colength");
        staircase.into_iter().map(|cell| section_weight(self.support, cell)).collect()
    }

    /// Transport along a relabeling of the coordinate points; the exponents
    /// swap when the relabeled chart directions come out decreasing.
    pub fn permuted(&self, perm: &[usize; 3]) -> Self {
        let (j, k) = chart(self.support);
        let exponents = if perm[j] < perm[k] {
            self.exponents
        } else {
            (self.exponents.1, self.exponents.0)
        };
        ExceptionalFixedPoint { support: perm[self.support], exponents }
    }
}

/// Torus weight of the chart monomial x^a y^b = (Z_j/Z_i)^a (Z_k/Z_i)^b at
/// the coordinate point [z_i].
pub fn monomial_weight(support: usize, exponents: (u32, u32)) -> WeightForm {
    let (j, k) = chart(support);
    let (a, b) = (exponents.0 as i64, exponents.1 as i64);
    WeightForm::basis(support) * (a + b) - WeightForm::basis(j) * a - WeightForm::basis(k) * b
}

/// All twelve exceptional fixed points: four cubic classes over each of the
/// three fat points.
pub fn enumerate_exceptional() -> Vec<ExceptionalFixedPoint> {
    let mut out = Vec::with_capacity(12);
    for support in 0..3 {
        for &exponents in &CUBIC_EXPONENTS {
            out.push(ExceptionalFixedPoint::new(support, exponents));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
        v.sort();
        v
    }

    #[test]
    fn twelve_points_four_per_fat_point() {
        let points = enumerate_exceptional();
        assert_eq!(points.len(), 12);
        for i in 0..3 {
            let fiber: Vec<_> = points.iter().filter(|p| p.support() == i).collect();
            assert_eq!(fiber.len(), 4);
            assert_eq!(
                sorted(fiber.iter().map(|p| p.exponents()).collect()),
                sorted(CUBIC_EXPONENTS.to_vec())
            );
        }
    }

    #[test]
    fn alpha_row_for_the_pure_cube() {
        // P(0;3,0): {w1-w0, w2-w0, 2w2-w1-w0, w1-w2, 2w1-2w2, 3w1-3w2}
        let p = ExceptionalFixedPoint::new(0, (3, 0));
        assert_eq!(
            sorted(p.alpha_weights()),
            sorted(vec![
                WeightForm::new(-1, 1, 0),
                WeightForm::new(-1, 0, 1),
                WeightForm::new(-1, -1, 2),
                WeightForm::new(0, 1, -1),
                WeightForm::new(0, 2, -2),
                WeightForm::new(0, 3, -3),
            ])
        );
    }

    #[test]
    fn mixed_classes_repeat_a_chart_weight() {
        // the normal weight at P(0;2,1) degenerates to w2 - w0, so that form
        // shows up twice
        let p = ExceptionalFixedPoint::new(0, (2, 1));
        let count = p
            .alpha_weights()
            .iter()
            .filter(|&&f| f == WeightForm::new(-1, 0, 1))
            .count();
        assert_eq!(count, 2);
    }

    #[test]
    fn normal_weight_of_the_pure_y_cube() {
        // P(0;0,3): 2w1 - w2 - w0
        let p = ExceptionalFixedPoint::new(0, (0, 3));
        assert!(p.alpha_weights().contains(&WeightForm::new(-1, 2, -1)));
    }

    #[test]
    fn limit_ideals_have_colength_nine() {
        for p in enumerate_exceptional() {
            assert_eq!(p.limit_ideal().colength().unwrap(), 9, "{}", p.label());
            assert_eq!(p.beta_weights().len(), 9);
        }
    }

    #[test]
    fn beta_rows_share_the_six_low_degree_weights() {
        let common: Vec<DForm> = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
            .into_iter()
            .map(|cell| section_weight(0, cell))
            .collect();
        for &e in &CUBIC_EXPONENTS {
            let p = ExceptionalFixedPoint::new(0, e);
            let betas = p.beta_weights();
            for weight in &common {
                assert!(betas.contains(weight), "{} missing {}", p.label(), weight);
            }
            // the own cubic monomial is excluded
            assert!(!betas.contains(&section_weight(0, e)));
        }
    }

    #[test]
    fn fiber_normal_weights_sweep_the_cubics() {
        // over one fat point, the four normal weights are exactly
        // weight(cubic) - weight(K) for the four cubic monomials
        for i in 0..3 {
            let kernel = monomial_weight(i, (2, 2));
            let expected: Vec<WeightForm> =
                CUBIC_EXPONENTS.iter().map(|&e| monomial_weight(i, e) - kernel).collect();
            let got: Vec<WeightForm> = CUBIC_EXPONENTS
                .iter()
                .map(|&e| *ExceptionalFixedPoint::new(i, e).alpha_weights().last().unwrap())
                .collect();
            assert_eq!(sorted(got), sorted(expected));
        }
    }

    #[test]
    fn permutation_transports_the_exceptional_census() {
        const PERMS: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let census = enumerate_exceptional();
        for perm in PERMS {
            for p in &census {
                let moved = p.permuted(&perm);
                assert!(census.contains(&moved));
                let expected: Vec<WeightForm> =
                    p.alpha_weights().iter().map(|f| f.permuted(&perm)).collect();
                assert_eq!(sorted(moved.alpha_weights()), sorted(expected));
                let expected: Vec<DForm> =
                    p.beta_weights().iter().map(|f| f.permuted(&perm)).collect();
                assert_eq!(sorted(moved.beta_weights()), sorted(expected));
            }
        }
    }
}
