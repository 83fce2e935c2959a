//! Integral orbifold cohomology for the cyclic family `Z[u]/<m u^d>` with
//! `deg u = 2`, and the decisions it supports: when cup product with a
//! degree-2 class is eventually an isomorphism, when the orbifold is a
//! manifold, when the total space of a circle orbibundle is a manifold,
//! and how many bundle classes exist.
//!
//! This family covers the rings of weighted projective spaces (`d = n+1`,
//! `m` the weight product) and of cyclic quotient orbifolds `C/Z_k`
//! (`d = 1`, `m = k`).

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The graded ring `Z[u]/<m u^d>`, `deg u = 2`: free of rank 1 in even
/// degrees below `2d`, cyclic of order `m` in even degrees from `2d` on,
/// zero in odd degrees. `m = 1` means the tail vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicGradedRing {
    /// First torsion exponent of `u`; positive.
    d: u32,
    /// Torsion order of the tail; positive.
    m: u64,
}

/// A degree-2 class `e = k * u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EulerClassCoeff {
    pub k: i64,
}

impl EulerClassCoeff {
    pub fn new(k: i64) -> Self {
        EulerClassCoeff { k }
    }
}

/// One graded piece of a [`CyclicGradedRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupDescriptor {
    FreeRank1,
    /// Order is always >= 2; order 1 collapses to `Zero`.
    CyclicOfOrder(u64),
    Zero,
}

impl GroupDescriptor {
    fn cyclic(m: u64) -> Self {
        if m == 1 {
            GroupDescriptor::Zero
        } else {
            GroupDescriptor::CyclicOfOrder(m)
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::FreeRank1 => f.write_str("Z"),
            GroupDescriptor::CyclicOfOrder(m) => write!(f, "Z/{m}"),
            GroupDescriptor::Zero => f.write_str("0"),
        }
    }
}

/// Cardinality of the set of principal circle orbibundles over the
/// orbifold, i.e. of the degree-2 group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BundleClassCount {
    Finite(u64),
    InfiniteCyclic,
}

impl fmt::Display for BundleClassCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleClassCount::Finite(n) => write!(f, "{n}"),
            BundleClassCount::InfiniteCyclic => f.write_str("infinite (one free generator)"),
        }
    }
}

impl CyclicGradedRing {
    pub fn new(d: u32, m: u64) -> Self {
        assert!(d >= 1, "torsion exponent must be positive");
        assert!(m >= 1, "torsion order must be positive");
        CyclicGradedRing { d, m }
    }

    /// The ring of the weighted projective space with the given weights:
    /// `d = n+1` for `n+1` weights, `m` their product.
    pub fn weighted_projective(weights: &[i64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        let mut m: u64 = 1;
        for &w in weights {
            if w < 1 {
                return Err(Error::NonPositiveWeight { weight: w });
            }
            m = m.checked_mul(w as u64).ok_or(Error::WeightOverflow)?;
        }
        Ok(CyclicGradedRing::new(weights.len() as u32, m))
    }

    /// The ring of the cone orbifold `C / Z_k`: `Z[u]/<k u>`.
    pub fn cyclic_quotient(k: u64) -> Self {
        CyclicGradedRing::new(1, k)
    }

    pub fn torsion_exponent(&self) -> u32 {
        self.d
    }

    pub fn torsion_order(&self) -> u64 {
        self.m
    }

    /// The graded piece in degree `i`.
    pub fn cohomology_group(&self, i: u64) -> GroupDescriptor {
        if !i.is_multiple_of(2) {
            GroupDescriptor::Zero
        } else if i / 2 < u64::from(self.d) {
            GroupDescriptor::FreeRank1
        } else {
            GroupDescriptor::cyclic(self.m)
        }
    }

    /// First degree from which the graded pieces are constant; cup product
    /// maps are evaluated from here on.
    pub fn stable_range_start(&self) -> u64 {
        2 * u64::from(self.d)
    }

    /// Canonical representative of `k * u` in degree 2: reduced mod `m`
    /// when the degree-2 group is the cyclic group of order `m` (`d = 1`),
    /// kept as is when it is free (`d >= 2`).
    pub fn euler_class(&self, k: i64) -> EulerClassCoeff {
        if self.d == 1 {
            EulerClassCoeff::new((i128::from(k)).rem_euclid(i128::from(self.m)) as i64)
        } else {
            EulerClassCoeff::new(k)
        }
    }

    /// Whether cup product with `e` is an isomorphism in every sufficiently
    /// large degree. On the stable range all even pieces are `Z/m` and the
    /// map is multiplication by `k`, so this holds iff `gcd(k, m) = 1`.
    pub fn euler_condition_holds(&self, e: EulerClassCoeff) -> bool {
        e.k.unsigned_abs().gcd(&self.m) == 1
    }

    /// Independent route to [`euler_condition_holds`]: explicitly checks
    /// that `x -> k*x` is a bijection of `Z/m`. Runs in `O(m)` time and
    /// memory, so keep `m` modest.
    ///
    /// [`euler_condition_holds`]: CyclicGradedRing::euler_condition_holds
    pub fn multiplication_is_bijective(&self, e: EulerClassCoeff) -> bool {
        let m = self.m;
        let k = i128::from(e.k).rem_euclid(i128::from(m)) as u64;
        let mut seen = vec![false; m as usize];
        for x in 0..m {
            let y = ((u128::from(k) * u128::from(x)) % u128::from(m)) as usize;
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    /// Runs both routes to the cup-product condition and errors if they
    /// disagree. Disagreement is impossible unless one route is broken, so
    /// callers surface it as an internal inconsistency.
    pub fn euler_condition_cross_checked(&self, e: EulerClassCoeff) -> Result<bool> {
        let by_gcd = self.euler_condition_holds(e);
        let by_map = self.multiplication_is_bijective(e);
        if by_gcd != by_map {
            return Err(Error::Inconsistency(format!(
                "euler condition on Z[u]/<{} u^{}> with k = {}: gcd route says {}, map route says {}",
                self.m, self.d, e.k, by_gcd, by_map
            )));
        }
        Ok(by_gcd)
    }

    /// An orbifold with this cohomology ring is a manifold iff the ring
    /// vanishes in all sufficiently large degrees, i.e. iff `m = 1`.
    pub fn orbifold_is_manifold(&self) -> bool {
        self.m == 1
    }

    /// The total space of the circle orbibundle with Euler class `k*u` is
    /// a manifold iff the cup-product condition holds.
    pub fn total_space_is_manifold(&self, e: EulerClassCoeff) -> bool {
        self.euler_condition_holds(e)
    }

    /// Number of isomorphism classes of principal circle orbibundles,
    /// classified by the degree-2 group: `m` classes when that group is
    /// `Z/m` (`d = 1`), an infinite cyclic family when it is free.
    pub fn count_bundle_classes(&self) -> BundleClassCount {
        if self.d == 1 {
            BundleClassCount::Finite(self.m)
        } else {
            BundleClassCount::InfiniteCyclic
        }
    }
}

impl fmt::Display for CyclicGradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[u]/<{} u^{}>", self.m, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_projective_all_ones_is_projective_space() {
        for n in 0..=10 {
            let ring = CyclicGradedRing::weighted_projective(&vec![1; n + 1]).unwrap();
            assert_eq!(ring.torsion_exponent(), (n + 1) as u32);
            assert_eq!(ring.torsion_order(), 1);
            assert!(ring.orbifold_is_manifold());
        }
    }

    #[test]
    fn weighted_projective_multiplies_weights() {
        let ring = CyclicGradedRing::weighted_projective(&[2, 3]).unwrap();
        assert_eq!(ring, CyclicGradedRing::new(2, 6));
        assert!(!ring.orbifold_is_manifold());
    }

    #[test]
    fn weighted_projective_single_weight() {
        let ring = CyclicGradedRing::weighted_projective(&[7]).unwrap();
        assert_eq!(ring, CyclicGradedRing::new(1, 7));
    }

    #[test]
    fn weighted_projective_rejects_bad_weights() {
        assert_eq!(
            CyclicGradedRing::weighted_projective(&[]),
            Err(Error::EmptyWeights)
        );
        assert_eq!(
            CyclicGradedRing::weighted_projective(&[2, 0]),
            Err(Error::NonPositiveWeight { weight: 0 })
        );
        assert_eq!(
            CyclicGradedRing::weighted_projective(&[i64::MAX, i64::MAX]),
            Err(Error::WeightOverflow)
        );
    }

    #[test]
    fn cyclic_quotient_parameters() {
        assert_eq!(CyclicGradedRing::cyclic_quotient(5), CyclicGradedRing::new(1, 5));
        assert_eq!(CyclicGradedRing::cyclic_quotient(1), CyclicGradedRing::new(1, 1));
        assert_eq!(CyclicGradedRing::cyclic_quotient(6), CyclicGradedRing::new(1, 6));
    }

    #[test]
    fn graded_pieces() {
        let ring = CyclicGradedRing::new(2, 6);
        assert_eq!(ring.cohomology_group(0), GroupDescriptor::FreeRank1);
        assert_eq!(ring.cohomology_group(2), GroupDescriptor::FreeRank1);
        assert_eq!(ring.cohomology_group(3), GroupDescriptor::Zero);
        assert_eq!(ring.cohomology_group(4), GroupDescriptor::CyclicOfOrder(6));
        assert_eq!(ring.cohomology_group(100), GroupDescriptor::CyclicOfOrder(6));
    }

    #[test]
    fn torsion_order_one_tail_vanishes() {
        let ring = CyclicGradedRing::new(3, 1);
        assert_eq!(ring.cohomology_group(6), GroupDescriptor::Zero);
        assert_eq!(ring.cohomology_group(4), GroupDescriptor::FreeRank1);
    }

    #[test]
    fn euler_condition_via_gcd_matches_examples() {
        // coprime coefficient over a weighted projective ring
        let ring = CyclicGradedRing::weighted_projective(&[2, 3]).unwrap();
        assert!(ring.euler_condition_holds(EulerClassCoeff::new(5)));
        assert!(!ring.euler_condition_holds(EulerClassCoeff::new(4)));

        // trivial bundle over C/Z_5
        let cone = CyclicGradedRing::cyclic_quotient(5);
        assert!(!cone.euler_condition_holds(cone.euler_class(5)));

        // everything works over a manifold point
        let point = CyclicGradedRing::new(1, 1);
        for k in -3..=3 {
            assert!(point.euler_condition_holds(EulerClassCoeff::new(k)));
        }
    }

    #[test]
    fn both_condition_routes_agree_on_a_window() {
        for m in 1..=40u64 {
            let ring = CyclicGradedRing::new(1, m);
            for k in -40..=40i64 {
                let e = EulerClassCoeff::new(k);
                assert_eq!(
                    ring.euler_condition_holds(e),
                    ring.multiplication_is_bijective(e),
                    "m = {m}, k = {k}"
                );
                assert!(ring.euler_condition_cross_checked(e).is_ok());
            }
        }
    }

    #[test]
    fn euler_class_is_reduced_only_in_torsion_degree_two() {
        let cone = CyclicGradedRing::cyclic_quotient(5);
        assert_eq!(cone.euler_class(7).k, 2);
        assert_eq!(cone.euler_class(-1).k, 4);
        let wps = CyclicGradedRing::weighted_projective(&[2, 3]).unwrap();
        assert_eq!(wps.euler_class(7).k, 7);
        assert_eq!(wps.euler_class(-1).k, -1);
    }

    #[test]
    fn total_space_examples() {
        let cone5 = CyclicGradedRing::cyclic_quotient(5);
        assert!(cone5.total_space_is_manifold(EulerClassCoeff::new(2)));
        let cone6 = CyclicGradedRing::cyclic_quotient(6);
        assert!(!cone6.total_space_is_manifold(EulerClassCoeff::new(4)));
        // lens-space case: coprime coefficient over weighted projective space
        let wps = CyclicGradedRing::weighted_projective(&[3, 5]).unwrap();
        assert!(wps.total_space_is_manifold(EulerClassCoeff::new(2)));
    }

    #[test]
    fn manifold_orbifold_satisfies_condition_for_every_coefficient() {
        let ring = CyclicGradedRing::weighted_projective(&[1, 1, 1]).unwrap();
        assert!(ring.orbifold_is_manifold());
        for k in -50..=50 {
            assert!(ring.euler_condition_holds(EulerClassCoeff::new(k)));
        }
    }

    #[test]
    fn bundle_class_counts() {
        for k in 1..=10 {
            assert_eq!(
                CyclicGradedRing::cyclic_quotient(k).count_bundle_classes(),
                BundleClassCount::Finite(k)
            );
        }
        assert_eq!(
            CyclicGradedRing::weighted_projective(&[2, 3])
                .unwrap()
                .count_bundle_classes(),
            BundleClassCount::InfiniteCyclic
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(CyclicGradedRing::new(2, 6).to_string(), "Z[u]/<6 u^2>");
        assert_eq!(GroupDescriptor::cyclic(1), GroupDescriptor::Zero);
        assert_eq!(GroupDescriptor::cyclic(6).to_string(), "Z/6");
    }
}
