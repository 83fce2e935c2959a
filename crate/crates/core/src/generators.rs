//! Generators for the standard families: weighted Hopf fibrations of the
//! 3-sphere, boundaries of rational ellipsoids, and trivial fibrations.
//!
//! The weighted circle action on the unit 3-sphere with coprime weights
//! `(p, q)` fibers over a spindle orbifold; its Seifert data is produced
//! from a Bezout solution `b1*q + b2*p = 1` as `(0; (p,b1), (q,b2))`,
//! which pins the Euler number to `-1/(pq)`. Ellipsoid boundaries reduce
//! to this family through the ratio of their axes.

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::classify::{fibration_spectrum, PeriodSpectrum};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seifert::SeifertInvariants;

/// Coprime weights of a weighted circle action on the 3-sphere,
/// order-normalized to `1 <= p <= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HopfWeights {
    p: i64,
    q: i64,
}

impl HopfWeights {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::NonPositiveWeight { weight: p });
        }
        if q < 1 {
            return Err(Error::NonPositiveWeight { weight: q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { a: p, b: q });
        }
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Ok(HopfWeights { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

/// A weighted Hopf fibration presented as Seifert data, with its spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedHopfFibration {
    pub weights: HopfWeights,
    /// Normal form of `(0; (p,b1), (q,b2))` with `b1*q + b2*p = 1`.
    pub invariants: SeifertInvariants,
    pub spectrum: PeriodSpectrum,
}

/// The fibration induced by the weighted action with weights `(p, q)`.
///
/// The Bezout representative is fixed deterministically (`b1` is the
/// inverse of `q` mod `p`); any other solution differs by elementary
/// moves, so the normal form is independent of that choice.
pub fn weighted_hopf(p: i64, q: i64) -> Result<WeightedHopfFibration> {
    let weights = HopfWeights::new(p, q)?;
    let (p, q) = (weights.p, weights.q);

    let gcd = p.extended_gcd(&q);
    debug_assert_eq!(gcd.gcd, 1);
    // p*x + q*y = 1; shift so that b1 = y mod p lies in [0, p)
    let b1 = i128::from(gcd.y).rem_euclid(i128::from(p));
    let b2 = (1 - b1 * i128::from(q)) / i128::from(p);
    let invariants = SeifertInvariants::new(0, [(p, b1 as i64), (q, b2 as i64)])
        .expect("bezout coefficients are coprime to their weights")
        .normalize();
    debug_assert_eq!(invariants.euler_number(), Rational::new(-1, p * q));

    let spectrum = fibration_spectrum(&invariants);
    Ok(WeightedHopfFibration {
        weights,
        invariants,
        spectrum,
    })
}

/// An ellipsoid boundary with its axes and the Hopf data they reduce to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllipsoidBoundary {
    /// The axes `(a, b)` the fibration came from; only `b/a` matters.
    pub axes: [Rational; 2],
    pub hopf: WeightedHopfFibration,
}

/// The Reeb fibration on the boundary of the ellipsoid with axes `a, b`.
///
/// Writes `b/a = q/p` in lowest terms and delegates to [`weighted_hopf`].
pub fn ellipsoid_boundary(a: &Rational, b: &Rational) -> Result<EllipsoidBoundary> {
    for axis in [a, b] {
        if !axis.is_positive() {
            return Err(Error::NonPositiveAxis {
                value: axis.to_string(),
            });
        }
    }
    let ratio = b / a;
    let q = ratio.numer().to_i64().ok_or(Error::WeightOverflow)?;
    let p = ratio.denom().to_i64().ok_or(Error::WeightOverflow)?;
    Ok(EllipsoidBoundary {
        axes: [a.clone(), b.clone()],
        hopf: weighted_hopf(p, q)?,
    })
}

/// The trivial fibration `(g; (1,0))`: Euler number 0, never realizable.
pub fn trivial_fibration(genus: i64) -> SeifertInvariants {
    SeifertInvariants::new(genus, [(1, 0)]).expect("trivial pair is always valid")
}
