//! Besse realizability of Seifert fibrations, prime period spectra, and
//! the classification of closed Besse contact 3-manifolds up to strict
//! contactomorphism.
//!
//! Realizability is decided by the Euler number alone: a fibration of a
//! closed orientable 3-manifold carries a Besse Reeb flow exactly when its
//! Euler number is nonzero, equivalently when it is not finitely covered by
//! a trivial fibration. Realizable fibrations are then classified by their
//! normal forms, and carry a period spectrum that can be read off from the
//! fiber multiplicities.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seifert::SeifertInvariants;

/// The set of minimal periods of the closed Reeb orbits, rescaled so that
/// the generic fiber has period 1 (one unit = one full turn of the flow).
///
/// Always contains 1, and every element is `1/a` for a multiplicity
/// `a >= 1`. A set, not a multiset: repeated exceptional orders collapse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodSpectrum {
    values: BTreeSet<Rational>,
}

impl PeriodSpectrum {
    /// Spectrum of the fibration with the given multiplicities:
    /// `{1} ∪ {1/a : a >= 2}`.
    pub fn from_multiplicities(multiplicities: impl IntoIterator<Item = i64>) -> Self {
        let mut values = BTreeSet::new();
        values.insert(Rational::one());
        for a in multiplicities {
            debug_assert!(a >= 1);
            if a >= 2 {
                values.insert(Rational::new(1, a));
            }
        }
        PeriodSpectrum { values }
    }

    pub fn values(&self) -> &BTreeSet<Rational> {
        &self.values
    }

    /// Periods in descending order, starting with the generic period 1.
    pub fn sorted_desc(&self) -> Vec<Rational> {
        self.values.iter().rev().cloned().collect()
    }

    /// Set equality. The common rescaling to generic period 1 turns the
    /// "equal up to rescaling" comparison into exact equality.
    pub fn matches(&self, other: &PeriodSpectrum) -> bool {
        self.values == other.values
    }
}

impl fmt::Display for PeriodSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// True iff the fibration is induced by some Besse contact form on its
/// total space, i.e. iff the Euler number is nonzero.
pub fn is_besse_realizable(s: &SeifertInvariants) -> bool {
    !s.euler_number().is_zero()
}

/// True iff the fibration is finitely covered by a trivial fibration
/// `S^1 x Sigma -> Sigma`, i.e. iff the Euler number vanishes. This is the
/// complement of [`is_besse_realizable`], kept as its own code path so the
/// two can be cross-checked.
pub fn finitely_covered_by_trivial(s: &SeifertInvariants) -> bool {
    s.euler_number().is_zero()
}

/// The combinatorial spectrum `{1} ∪ {1/a_i : a_i >= 2}` of a fibration,
/// with no realizability gate. Useful for comparing presentations whether
/// or not they carry a Besse form.
pub fn fibration_spectrum(s: &SeifertInvariants) -> PeriodSpectrum {
    PeriodSpectrum::from_multiplicities(s.pairs().iter().map(|p| p.a))
}

/// The prime period spectrum of a Besse form inducing this fibration.
///
/// Errors with [`Error::NotRealizable`] when the Euler number is zero and
/// no such form exists.
pub fn prime_period_spectrum(s: &SeifertInvariants) -> Result<PeriodSpectrum> {
    if !is_besse_realizable(s) {
        return Err(Error::NotRealizable);
    }
    Ok(fibration_spectrum(s))
}

/// Which side(s) of a comparison failed the realizability gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    First,
    Second,
    Both,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Side::First => "first",
            Side::Second => "second",
            Side::Both => "both",
        };
        f.write_str(name)
    }
}

/// Outcome of comparing two fibrations as Besse contact manifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Both realizable and fiber-preservingly equivalent: the Besse forms
    /// they determine agree up to strict contactomorphism.
    StrictlyContactomorphic,
    /// Both realizable but inequivalent fibrations.
    Distinct,
    /// At least one input has Euler number 0 and carries no Besse form.
    NotRealizable(Side),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::StrictlyContactomorphic => f.write_str("strictly contactomorphic"),
            Verdict::Distinct => f.write_str("distinct"),
            Verdict::NotRealizable(side) => write!(f, "not realizable ({side})"),
        }
    }
}

/// Audit data for one side of a comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationSummary {
    pub normal_form: SeifertInvariants,
    pub euler_number: Rational,
    /// Present exactly when the side is realizable.
    pub spectrum: Option<PeriodSpectrum>,
}

impl FibrationSummary {
    fn of(s: &SeifertInvariants) -> Self {
        let euler_number = s.euler_number();
        let spectrum = (!euler_number.is_zero()).then(|| fibration_spectrum(s));
        FibrationSummary {
            normal_form: s.normalize(),
            euler_number,
            spectrum,
        }
    }
}

/// A comparison verdict together with the quantities that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first: FibrationSummary,
    pub second: FibrationSummary,
    pub allow_reversal: bool,
}

/// Classifies two fibrations up to strict contactomorphism of the Besse
/// forms they induce.
///
/// Inputs with Euler number 0 yield [`Verdict::NotRealizable`]; otherwise
/// the verdict is decided by fiber-preserving equivalence, optionally up to
/// orientation reversal.
pub fn classify(
    s1: &SeifertInvariants,
    s2: &SeifertInvariants,
    allow_reversal: bool,
) -> ClassificationResult {
    let first = FibrationSummary::of(s1);
    let second = FibrationSummary::of(s2);
    let verdict = match (first.spectrum.is_some(), second.spectrum.is_some()) {
        (false, false) => Verdict::NotRealizable(Side::Both),
        (false, true) => Verdict::NotRealizable(Side::First),
        (true, false) => Verdict::NotRealizable(Side::Second),
        (true, true) => {
            if s1.equivalent(s2, allow_reversal) {
                Verdict::StrictlyContactomorphic
            } else {
                Verdict::Distinct
            }
        }
    };
    ClassificationResult {
        verdict,
        witness: Witness {
            first,
            second,
            allow_reversal,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(genus: i64, pairs: &[(i64, i64)]) -> SeifertInvariants {
        SeifertInvariants::new(genus, pairs.iter().copied()).unwrap()
    }

    fn spectrum(values: &[(i64, i64)]) -> PeriodSpectrum {
        PeriodSpectrum {
            values: values.iter().map(|&(n, d)| Rational::new(n, d)).collect(),
        }
    }

    #[test]
    fn trivial_fibrations_are_not_realizable() {
        assert!(!is_besse_realizable(&inv(0, &[(1, 0)])));
        assert!(finitely_covered_by_trivial(&inv(0, &[(1, 0)])));
        assert!(finitely_covered_by_trivial(&inv(1, &[(1, 0)])));
    }

    #[test]
    fn hopf_type_fibration_is_realizable() {
        let hopf = inv(0, &[(1, -1)]);
        assert!(is_besse_realizable(&hopf));
        assert!(!finitely_covered_by_trivial(&hopf));
    }

    #[test]
    fn cancelling_twists_are_not_realizable() {
        assert!(!is_besse_realizable(&inv(0, &[(2, 1), (2, -1)])));
    }

    #[test]
    fn spectrum_of_regular_fibration_is_generic_only() {
        let spec = prime_period_spectrum(&inv(0, &[(1, -1)])).unwrap();
        assert_eq!(spec, spectrum(&[(1, 1)]));
    }

    #[test]
    fn spectrum_reads_off_multiplicities() {
        let spec = prime_period_spectrum(&inv(0, &[(1, -1), (2, 1), (3, 1), (5, 1)])).unwrap();
        assert_eq!(spec, spectrum(&[(1, 1), (1, 2), (1, 3), (1, 5)]));
        assert_eq!(spec.to_string(), "{1, 1/2, 1/3, 1/5}");
    }

    #[test]
    fn spectrum_collapses_duplicates() {
        let spec = prime_period_spectrum(&inv(0, &[(1, -1), (2, 1), (4, 1)])).unwrap();
        assert_eq!(spec, spectrum(&[(1, 1), (1, 2), (1, 4)]));
    }

    #[test]
    fn spectrum_requires_realizability() {
        assert_eq!(
            prime_period_spectrum(&inv(0, &[(1, 0)])),
            Err(Error::NotRealizable)
        );
    }

    #[test]
    fn spectra_match_is_set_equality() {
        let a = spectrum(&[(1, 1)]);
        assert!(a.matches(&spectrum(&[(1, 1)])));
        let b = spectrum(&[(1, 1), (1, 2), (1, 3), (1, 5)]);
        let c = spectrum(&[(1, 1), (1, 2), (1, 3)]);
        assert!(!b.matches(&c));
    }

    #[test]
    fn spectra_forget_multiplicity() {
        // the first presentation has euler number 0, so compare the
        // combinatorial spectra of the fibrations directly
        let a = fibration_spectrum(&inv(0, &[(1, -1), (2, 1), (2, 1)]));
        let b = fibration_spectrum(&inv(0, &[(1, -1), (2, 1)]));
        assert!(a.matches(&b));
        assert_eq!(a, spectrum(&[(1, 1), (1, 2)]));
    }

    #[test]
    fn classify_identical_data() {
        let hopf = inv(0, &[(1, -1)]);
        let res = classify(&hopf, &hopf, false);
        assert_eq!(res.verdict, Verdict::StrictlyContactomorphic);
        assert_eq!(res.witness.first, res.witness.second);
        assert_eq!(res.witness.first.euler_number, Rational::one());
    }

    #[test]
    fn classify_shared_normal_form() {
        let res = classify(&inv(0, &[(2, 3)]), &inv(0, &[(1, 1), (2, 1)]), false);
        assert_eq!(res.verdict, Verdict::StrictlyContactomorphic);
        assert_eq!(res.witness.first.euler_number, Rational::new(-3, 2));
    }

    #[test]
    fn classify_distinct_spectra() {
        let hopf = inv(0, &[(1, -1)]);
        let poincare_style = inv(0, &[(1, -1), (2, 1), (3, 1), (5, 1)]);
        let res = classify(&hopf, &poincare_style, false);
        assert_eq!(res.verdict, Verdict::Distinct);
        let s1 = res.witness.first.spectrum.unwrap();
        let s2 = res.witness.second.spectrum.unwrap();
        assert!(!s1.matches(&s2));
    }

    #[test]
    fn classify_flags_unrealizable_sides() {
        let trivial = inv(0, &[(1, 0)]);
        let hopf = inv(0, &[(1, -1)]);
        assert_eq!(
            classify(&trivial, &hopf, false).verdict,
            Verdict::NotRealizable(Side::First)
        );
        assert_eq!(
            classify(&hopf, &trivial, false).verdict,
            Verdict::NotRealizable(Side::Second)
        );
        let res = classify(&trivial, &trivial, false);
        assert_eq!(res.verdict, Verdict::NotRealizable(Side::Both));
        assert_eq!(res.witness.first.spectrum, None);
    }

    #[test]
    fn classify_trivial_fibrations_any_genus() {
        for g in -5..=5 {
            let s = inv(g, &[(1, 0)]);
            assert!(matches!(
                classify(&s, &s, false).verdict,
                Verdict::NotRealizable(Side::Both)
            ));
        }
    }

    #[test]
    fn classify_respects_reversal_flag() {
        let s = inv(0, &[(1, 1)]);
        let r = inv(0, &[(1, -1)]);
        assert_eq!(classify(&s, &r, false).verdict, Verdict::Distinct);
        assert_eq!(
            classify(&s, &r, true).verdict,
            Verdict::StrictlyContactomorphic
        );
    }
}
