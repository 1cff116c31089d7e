//! Torus-fixed points of the Hilbert schemes of 1, 2, 3 points in the plane
//! and their tangent / section-bundle weights.
//!
//! A fixed subscheme is a disjoint union of punctual monomial ideals sitting
//! at the coordinate points. At the coordinate point [z_i] we always use the
//! chart whose x-direction points at the smaller of the two remaining
//! coordinate points, so the partition itself carries the orientation: (2)
//! at [z0] is the double point along the z1-axis, its transpose (1,1) the
//! one along the z2-axis.
//!
//! The fat point (2,1) concentrated at a single coordinate point is excluded
//! from the census for n = 3: squaring is not flat there, and the blow-up
//! replaces it with four exceptional fixed points (see [`crate::blowup`]).

use crate::ideal::{MonomialIdeal, Partition};
use crate::torus::{DForm, WeightForm};
use crate::Cogenus;

/// Chart directions at the coordinate point [z_i]: the two other coordinate
/// indices in increasing order (x-direction first).
pub fn chart(support: usize) -> (usize, usize) {
    match support {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => panic!("coordinate point index out of range: {}", support),
    }
}

/// Torus weight of the section Z_i^(d-b-c) Z_j^b Z_k^c spanning part of the
/// bundle fiber at a subscheme supported at [z_i]: sections of the degree-d
/// line bundle carry the negated monomial weight.
pub fn section_weight(support: usize, exponents: (u32, u32)) -> DForm {
    let (j, k) = chart(support);
    let (b, c) = (exponents.0 as i64, exponents.1 as i64);
    let d_part = -WeightForm::basis(support);
    let const_part =
        WeightForm::basis(support) * (b + c) - WeightForm::basis(j) * b - WeightForm::basis(k) * c;
    DForm::new(d_part, const_part)
}

/// Tangent weights of the Hilbert scheme at the monomial ideal of `shape`,
/// in a chart whose two tangent directions carry the weights `t1`, `t2`.
///
/// Closed-form cell rule: every diagram cell contributes
/// (arm+1)*t1 - leg*t2 and -arm*t1 + (leg+1)*t2,
/// where the arm counts cells to the right in the same row (the t1
/// direction) and the leg counts cells above in the same column. This
/// reproduces every hand-derived case; the embedded reference tables pin
/// the orientation.
pub fn tangent_weights(shape: &Partition, t1: WeightForm, t2: WeightForm) -> Vec<WeightForm> {
    let parts = shape.parts();
    let mut out = Vec::with_capacity(2 * shape.size() as usize);
    for (row, &len) in parts.iter().enumerate() {
        for col in 0..len {
            let arm = (len - 1 - col) as i64;
            let leg = parts[row + 1..].iter().filter(|&&p| p > col).count() as i64;
            out.push(t1 * (arm + 1) - t2 * leg);
            out.push(t2 * (leg + 1) - t1 * arm);
        }
    }
    out
}

/// A torus-fixed union of punctual monomial subschemes at distinct
/// coordinate points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryFixedPoint {
    parts: [Option<Partition>; 3],
}

impl OrdinaryFixedPoint {
    pub(crate) fn new(parts: [Option<Partition>; 3]) -> Self {
        OrdinaryFixedPoint { parts }
    }

    /// The occupied coordinate points with their partitions.
    pub fn supports(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.parts.iter().enumerate().filter_map(|(i, p)| p.as_ref().map(|p| (i, p)))
    }

    pub fn support_count(&self) -> usize {
        self.supports().count()
    }

    /// Total length n of the subscheme.
    pub fn total_size(&self) -> u32 {
        self.supports().map(|(_, p)| p.size()).sum()
    }

    /// Derived name: reduced points are "z0", double points "D(j,k)" for the
    /// ideal (Z_j^2, Z_k), curvilinear triple points "T(j,k)" for
    /// (Z_j^3, Z_k); components joined by " + ".
    pub fn label(&self) -> String {
        let pieces: Vec<String> = self
            .supports()
            .map(|(i, shape)| {
                let (j, k) = chart(i);
                match shape.parts() {
                    [1] => format!("z{}", i),
                    [2] => format!("D({},{})", j, k),
                    [1, 1] => format!("D({},{})", k, j),
                    [3] => format!("T({},{})", j, k),
                    [1, 1, 1] => format!("T({},{})", k, j),
                    [2, 1] => format!("F{}", i),
                    _ => format!("{}@z{}", shape, i),
                }
            })
            .collect();
        pieces.join(" + ")
    }

    /// Tangent weights of the Hilbert scheme at this point: 2n linear forms,
    /// the union of the per-support contributions.
    pub fn alpha_weights(&self) -> Vec<WeightForm> {
        let mut out = Vec::with_capacity(2 * self.total_size() as usize);
        for (i, shape) in self.supports() {
            let (j, k) = chart(i);
            out.extend(tangent_weights(shape, WeightForm::difference(j, i), WeightForm::difference(k, i)));
        }
        out
    }

    /// Weights on the fiber of the section bundle: 3n forms, one per
    /// standard monomial of each squared punctual ideal.
    pub fn beta_weights(&self) -> Vec<DForm> {
        let mut out = Vec::with_capacity(3 * self.total_size() as usize);
        for (i, shape) in self.supports() {
            let squared = MonomialIdeal::from_partition(shape).square();
            let staircase = squared
                .staircase()
                .expect("squared punctual ideals have finite colength");
            out.extend(staircase.into_iter().map(|cell| section_weight(i, cell)));
        }
        out
    }

    /// Transport along a relabeling of the coordinate points. When the
    /// relabeled chart directions come out in decreasing order the partition
    /// transposes, keeping the canonical orientation.
    pub fn permuted(&self, perm: &[usize; 3]) -> Self {
        let mut parts: [Option<Partition>; 3] = [None, None, None];
        for (i, shape) in self.supports() {
            let (j, k) = chart(i);
            let transported =
                if perm[j] < perm[k] { shape.clone() } else { shape.transpose() };
            parts[perm[i]] = Some(transported);
        }
        OrdinaryFixedPoint { parts }
    }
}

/// The full census of ordinary fixed points of total length n: every
/// assignment of partitions to distinct coordinate points, minus the
/// fat point (2,1) for n = 3.
///
/// Counts: 3 for n = 1; 9 for n = 2 (3 point pairs + 6 double points);
/// 19 for n = 3 (1 reduced + 12 point-plus-double + 6 triple points).
pub fn enumerate_fixed_points(n: Cogenus) -> Vec<OrdinaryFixedPoint> {
    let total = n.value() as u32;
    let mut out = Vec::new();
    for s0 in (0..=total).rev() {
        for s1 in (0..=(total - s0)).rev() {
            let s2 = total - s0 - s1;
            for p0 in partition_choices(s0) {
                for p1 in partition_choices(s1) {
                    for p2 in partition_choices(s2) {
                        out.push(OrdinaryFixedPoint::new([p0.clone(), p1.clone(), p2]));
                    }
                }
            }
        }
    }
    out
}

fn partition_choices(size: u32) -> Vec<Option<Partition>> {
    if size == 0 {
        return vec![None];
    }
    Partition::of(size)
        .into_iter()
        .filter(|p| p.parts() != [2, 1])
        .map(Some)
        .collect()
}
