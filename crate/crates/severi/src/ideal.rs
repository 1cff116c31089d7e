//! Partitions and punctual monomial ideals in two variables.
//!
//! A torus-fixed length-n subscheme concentrated at a coordinate point is a
//! monomial ideal, and a monomial ideal of finite colength is a staircase:
//! the monomials outside it form the Young diagram of a partition. The
//! partition (2) is the ideal (x^2, y), (1,1) is (x, y^2), (2,1) is the
//! square of the maximal ideal (x^2, xy, y^2), and so on; part b of the
//! partition counts the x-run of standard monomials at height y^b.

use std::fmt;

use thiserror::Error;

/// Weakly decreasing positive parts; the Young-diagram shape of a punctual
/// monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "partition parts must be weakly decreasing and positive: {:?}",
            parts
        );
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts: the colength of the associated ideal.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Conjugate partition (diagram flipped across the diagonal).
    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|a| self.parts.iter().filter(|&&p| p > a).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Diagram cells as (x, y) exponent pairs: x < parts[y].
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (y, &len) in self.parts.iter().enumerate() {
            for x in 0..len {
                out.push((x, y as u32));
            }
        }
        out
    }

    /// All partitions of n, largest first part first.
    pub fn of(n: u32) -> Vec<Partition> {
        fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                prefix.push(next);
                go(remaining - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaircaseError {
    #[error("ideal {ideal} has infinite colength: no pure power of {axis} among its generators")]
    InfiniteColength { ideal: String, axis: char },
}

/// Monomial ideal in C[x, y], kept as its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<(u32, u32)>,
}

impl MonomialIdeal {
    /// Reduces an arbitrary generating set to the minimal one (pairwise
    /// incomparable under componentwise <=), sorted by x-exponent.
    pub fn new(mut gens: Vec<(u32, u32)>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<(u32, u32)> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(*h, **g)))
            .copied()
            .collect();
        MonomialIdeal { gens: minimal }
    }

    /// The staircase ideal of a partition: standard monomials x^a y^b with
    /// a < parts[b].
    pub fn from_partition(shape: &Partition) -> Self {
        let parts = shape.parts();
        let mut gens = vec![(parts[0], 0)];
        for b in 1..parts.len() {
            if parts[b] < parts[b - 1] {
                gens.push((parts[b], b as u32));
            }
        }
        gens.push((0, parts.len() as u32));
        MonomialIdeal::new(gens)
    }

    /// (x, y)^k.
    pub fn max_ideal_power(k: u32) -> Self {
        MonomialIdeal::new((0..=k).map(|a| (a, k - a)).collect())
    }

    pub fn generators(&self) -> &[(u32, u32)] {
        &self.gens
    }

    /// Membership of the monomial x^a y^b.
    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.gens.iter().any(|&g| divides(g, (a, b)))
    }

    /// The square, generated by pairwise products of generators.
    pub fn square(&self) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * (self.gens.len() + 1) / 2);
        for (i, g) in self.gens.iter().enumerate() {
            for h in &self.gens[i..] {
                gens.push((g.0 + h.0, g.1 + h.1));
            }
        }
        MonomialIdeal::new(gens)
    }

    /// Standard monomials outside the ideal, sorted lexicographically by
    /// (x, y) exponents. Finite exactly when the generators include a pure
    /// power of x and a pure power of y; everything lives in the rectangle
    /// those two powers bound, so a brute-force sweep suffices.
    pub fn staircase(&self) -> Result<Vec<(u32, u32)>, StaircaseError> {
        let x_bound = self
            .gens
            .iter()
            .filter(|g| g.1 == 0)
            .map(|g| g.0)
            .min()
            .ok_or_else(|| StaircaseError::InfiniteColength { ideal: self.to_string(), axis: 'x' })?;
        let y_bound = self
            .gens
            .iter()
            .filter(|g| g.0 == 0)
            .map(|g| g.1)
            .min()
            .ok_or_else(|| StaircaseError::InfiniteColength { ideal: self.to_string(), axis: 'y' })?;
        let mut out = Vec::new();
        for a in 0..x_bound {
            for b in 0..y_bound {
                if !self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        Ok(out)
    }

    /// Number of standard monomials (length of the quotient).
    pub fn colength(&self) -> Result<usize, StaircaseError> {
        Ok(self.staircase()?.len())
    }
}

fn divides(g: (u32, u32), m: (u32, u32)) -> bool {
    g.0 <= m.0 && g.1 <= m.1
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn monomial(a: u32, b: u32) -> String {
            match (a, b) {
                (0, 0) => "1".to_string(),
                _ => {
                    let mut pieces = Vec::new();
                    match a {
                        0 => {}
                        1 => pieces.push("x".to_string()),
                        _ => pieces.push(format!("x^{}", a)),
                    }
                    match b {
                        0 => {}
                        1 => pieces.push("y".to_string()),
                        _ => pieces.push(format!("y^{}", b)),
                    }
                    pieces.join("*")
                }
            }
        }
        write!(f, "(")?;
        for (i, &(a, b)) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            f.write_str(&monomial(a, b))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::new(gens.to_vec())
    }

    #[test]
    #[allow(clippy::type_complexity)]
    fn partition_to_ideal_catalog() {
        let table: [(&[u32], &[(u32, u32)]); 6] = [
            (&[1], &[(1, 0), (0, 1)]),
            (&[2], &[(2, 0), (0, 1)]),
            (&[1, 1], &[(1, 0), (0, 2)]),
            (&[3], &[(3, 0), (0, 1)]),
            (&[2, 1], &[(2, 0), (1, 1), (0, 2)]),
            (&[1, 1, 1], &[(1, 0), (0, 3)]),
        ];
        for (parts, gens) in table {
            let shape = Partition::new(parts.to_vec());
            assert_eq!(MonomialIdeal::from_partition(&shape), ideal(gens), "shape {}", shape);
        }
    }

    #[test]
    fn squaring_the_reduced_point() {
        let sq = ideal(&[(1, 0), (0, 1)]).square();
        assert_eq!(sq, ideal(&[(2, 0), (1, 1), (0, 2)]));
        assert_eq!(sq.colength().unwrap(), 3);
    }

    #[test]
    fn squaring_the_linear_double_point() {
        // (x, y^2)^2 = (x^2, x*y^2, y^4), length 6
        let sq = ideal(&[(1, 0), (0, 2)]).square();
        assert_eq!(sq, ideal(&[(2, 0), (1, 2), (0, 4)]));
        assert_eq!(sq.colength().unwrap(), 6);
    }

    #[test]
    fn squaring_the_fat_point_has_length_ten() {
        let sq = ideal(&[(2, 0), (1, 1), (0, 2)]).square();
        assert_eq!(sq, ideal(&[(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]));
        assert_eq!(sq.colength().unwrap(), 10);
    }

    #[test]
    fn squaring_the_curvilinear_triple_point() {
        // (x^3, y)^2 = (x^6, x^3*y, y^2), length 9
        let sq = ideal(&[(3, 0), (0, 1)]).square();
        assert_eq!(sq, ideal(&[(6, 0), (3, 1), (0, 2)]));
        assert_eq!(
            sq.staircase().unwrap(),
            vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (4, 0), (5, 0)]
        );
    }

    #[test]
    fn staircase_of_squared_double_point() {
        let sq = ideal(&[(1, 0), (0, 2)]).square();
        assert_eq!(sq.staircase().unwrap(), vec![(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1)]);
    }

    #[test]
    fn staircase_of_maximal_ideal() {
        assert_eq!(ideal(&[(1, 0), (0, 1)]).staircase().unwrap(), vec![(0, 0)]);
    }

    #[test]
    fn infinite_colength_is_reported() {
        let err = ideal(&[(1, 2)]).staircase().unwrap_err();
        assert!(matches!(err, StaircaseError::InfiniteColength { .. }));
        assert!(err.to_string().contains("infinite colength"));
    }

    #[test]
    fn colength_triples_except_for_the_fat_point() {
        for n in 1..=3 {
            for shape in Partition::of(n) {
                let ideal = MonomialIdeal::from_partition(&shape);
                let squared = ideal.square().colength().unwrap();
                if shape.parts() == [2, 1] {
                    assert_eq!(squared, 10);
                } else {
                    assert_eq!(squared, 3 * ideal.colength().unwrap(), "shape {}", shape);
                }
            }
        }
    }

    #[test]
    fn transpose_is_an_involution() {
        for n in 1..=5 {
            for shape in Partition::of(n) {
                assert_eq!(shape.transpose().transpose(), shape);
                assert_eq!(shape.transpose().size(), shape.size());
            }
        }
        assert_eq!(Partition::new(vec![2, 1]).transpose(), Partition::new(vec![2, 1]));
        assert_eq!(Partition::new(vec![3]).transpose(), Partition::new(vec![1, 1, 1]));
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(Partition::of(3).len(), 3);
        assert_eq!(Partition::of(5).len(), 7);
    }

    #[test]
    fn minimal_generators_are_reduced() {
        // x^3 swallows x^4 and x^3*y
        let i = ideal(&[(4, 0), (3, 1), (2, 2), (1, 3), (0, 4), (3, 0)]);
        assert_eq!(i.generators(), &[(0, 4), (1, 3), (2, 2), (3, 0)]);
    }
}
