//! Report documents emitted by the CLI: one structured, auditable record
//! per invocation. Every rational is serialized in lowest terms and every
//! verdict carries the quantity that decided it.

use serde::Serialize;

use besse_core::classify::{
    fibration_spectrum, finitely_covered_by_trivial, prime_period_spectrum, ClassificationResult,
    PeriodSpectrum, Verdict,
};
use besse_core::cohomology::{BundleClassCount, CyclicGradedRing};
use besse_core::orbifold::TwoOrbifold;
use besse_core::seifert::SeifertInvariants;

fn spectrum_strings(spectrum: &PeriodSpectrum) -> Vec<String> {
    spectrum
        .sorted_desc()
        .iter()
        .map(|v| v.to_string())
        .collect()
}

/// Summary of the base 2-orbifold of a fibration.
#[derive(Debug, Serialize)]
pub struct BaseReport {
    pub name: String,
    pub orientable: bool,
    pub genus: u32,
    pub cone_orders: Vec<i64>,
    pub euler_characteristic: String,
    pub developable: bool,
    pub geometry: String,
}

impl BaseReport {
    pub fn new(base: &TwoOrbifold) -> Self {
        BaseReport {
            name: base.to_string(),
            orientable: base.orientable(),
            genus: base.genus(),
            cone_orders: base.cone_orders().to_vec(),
            euler_characteristic: base.euler_characteristic().to_string(),
            developable: base.is_developable(),
            geometry: base.geometry_type().to_string(),
        }
    }
}

/// The full record for a single fibration.
#[derive(Debug, Serialize)]
pub struct FibrationReport {
    /// Canonical echo of the parsed input, in the input grammar.
    pub input: String,
    pub normal_form: String,
    pub euler_number: String,
    pub base: BaseReport,
    pub realizable: bool,
    pub reason: String,
    pub covered_by_trivial: bool,
    /// Present exactly when the fibration is realizable.
    pub spectrum: Option<Vec<String>>,
}

pub fn realizability_reason(s: &SeifertInvariants) -> String {
    let e = s.euler_number();
    if e.is_zero() {
        "euler_number = 0".to_owned()
    } else {
        format!("euler_number = {e} != 0")
    }
}

impl FibrationReport {
    pub fn new(s: &SeifertInvariants) -> Self {
        let base = TwoOrbifold::base_of(s);
        FibrationReport {
            input: s.to_string(),
            normal_form: s.normalize().to_string(),
            euler_number: s.euler_number().to_string(),
            base: BaseReport::new(&base),
            realizable: besse_core::is_besse_realizable(s),
            reason: realizability_reason(s),
            covered_by_trivial: finitely_covered_by_trivial(s),
            spectrum: prime_period_spectrum(s)
                .ok()
                .map(|spec| spectrum_strings(&spec)),
        }
    }
}

/// One side of a comparison.
#[derive(Debug, Serialize)]
pub struct SideReport {
    pub input: String,
    pub normal_form: String,
    pub euler_number: String,
    pub spectrum: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct CompareReport {
    pub first: SideReport,
    pub second: SideReport,
    pub allow_reversal: bool,
    pub verdict: String,
    pub not_realizable_side: Option<String>,
    pub reason: String,
}

impl CompareReport {
    pub fn new(s1: &SeifertInvariants, s2: &SeifertInvariants, result: &ClassificationResult) -> Self {
        let side = |input: &SeifertInvariants, summary: &besse_core::FibrationSummary| SideReport {
            input: input.to_string(),
            normal_form: summary.normal_form.to_string(),
            euler_number: summary.euler_number.to_string(),
            spectrum: summary.spectrum.as_ref().map(spectrum_strings),
        };
        let witness = &result.witness;
        let (verdict, not_realizable_side) = match result.verdict {
            Verdict::StrictlyContactomorphic => ("strictly_contactomorphic", None),
            Verdict::Distinct => ("distinct", None),
            Verdict::NotRealizable(which) => ("not_realizable", Some(which.to_string())),
        };
        let reason = match result.verdict {
            Verdict::StrictlyContactomorphic => {
                if s1.equivalent(s2, false) {
                    format!("shared normal form {}", witness.first.normal_form)
                } else {
                    format!(
                        "normal form {} matches {} after orientation reversal",
                        witness.first.normal_form, witness.second.normal_form
                    )
                }
            }
            Verdict::Distinct => {
                let spec1 = fibration_spectrum(s1);
                let spec2 = fibration_spectrum(s2);
                if spec1.matches(&spec2) {
                    format!(
                        "normal forms differ: {} vs {}",
                        witness.first.normal_form, witness.second.normal_form
                    )
                } else {
                    format!("prime period spectra differ: {spec1} vs {spec2}")
                }
            }
            Verdict::NotRealizable(which) => {
                format!("the {which} input has euler_number = 0 and admits no Besse Reeb flow")
            }
        };
        CompareReport {
            first: side(s1, &witness.first),
            second: side(s2, &witness.second),
            allow_reversal: witness.allow_reversal,
            verdict: verdict.to_owned(),
            not_realizable_side,
            reason,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GroupLine {
    pub degree: u64,
    pub group: String,
}

#[derive(Debug, Serialize)]
pub struct BundleClassReport {
    pub kind: String,
    pub count: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct EulerClassReport {
    pub k: i64,
    /// Canonical representative in the degree-2 group.
    pub k_canonical: i64,
    pub condition_holds: bool,
    pub total_space_is_manifold: bool,
    /// Outcome of the gcd-vs-enumeration cross-check.
    pub cross_check: String,
}

#[derive(Debug, Serialize)]
pub struct CohomologyReport {
    pub ring: String,
    pub torsion_exponent: u32,
    pub torsion_order: u64,
    /// Graded pieces up to just past the stable range.
    pub groups: Vec<GroupLine>,
    /// The cup-product condition is decided from this degree on.
    pub stable_range_start: u64,
    /// Smallest odd degree with the same verdict (the total-space
    /// dimension in the bundle picture); listed for reference.
    pub odd_tail_start: u64,
    pub orbifold_is_manifold: bool,
    pub bundle_classes: BundleClassReport,
    pub euler_class: Option<EulerClassReport>,
}

impl CohomologyReport {
    pub fn new(ring: &CyclicGradedRing, euler_class: Option<EulerClassReport>) -> Self {
        let stable = ring.stable_range_start();
        let groups = (0..=stable + 2)
            .map(|degree| GroupLine {
                degree,
                group: ring.cohomology_group(degree).to_string(),
            })
            .collect();
        let bundle_classes = match ring.count_bundle_classes() {
            BundleClassCount::Finite(n) => BundleClassReport {
                kind: "finite".to_owned(),
                count: Some(n),
            },
            BundleClassCount::InfiniteCyclic => BundleClassReport {
                kind: "infinite_cyclic".to_owned(),
                count: None,
            },
        };
        CohomologyReport {
            ring: ring.to_string(),
            torsion_exponent: ring.torsion_exponent(),
            torsion_order: ring.torsion_order(),
            groups,
            stable_range_start: stable,
            odd_tail_start: stable - 1,
            orbifold_is_manifold: ring.orbifold_is_manifold(),
            bundle_classes,
            euler_class,
        }
    }
}

/// Cross-checked evaluation of the cup-product condition for the report.
/// Enumeration is skipped above the given cap; disagreement bubbles up as
/// an inconsistency error.
pub fn euler_class_report(
    ring: &CyclicGradedRing,
    k: i64,
    enumeration_cap: u64,
) -> besse_core::Result<EulerClassReport> {
    let e = ring.euler_class(k);
    let (condition_holds, cross_check) = if ring.torsion_order() <= enumeration_cap {
        (
            ring.euler_condition_cross_checked(e)?,
            "agreed (gcd vs residue-map enumeration)".to_owned(),
        )
    } else {
        (
            ring.euler_condition_holds(e),
            format!("skipped (torsion order > {enumeration_cap})"),
        )
    };
    Ok(EulerClassReport {
        k,
        k_canonical: e.k,
        condition_holds,
        total_space_is_manifold: ring.total_space_is_manifold(e),
        cross_check,
    })
}

/// Parameters echoed back by the `example` subcommand.
#[derive(Debug, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ExampleParameters {
    WeightedHopf {
        p: i64,
        q: i64,
    },
    Ellipsoid {
        a: String,
        b: String,
        p: i64,
        q: i64,
    },
    Trivial {
        genus: i64,
    },
}

#[derive(Debug, Serialize)]
pub struct ExampleReport {
    pub parameters: ExampleParameters,
    pub fibration: FibrationReport,
}

#[derive(Debug, Serialize)]
pub struct SelfTestView {
    pub seed: u64,
    pub all_passed: bool,
    pub checks: Vec<besse_core::CheckOutcome>,
}
