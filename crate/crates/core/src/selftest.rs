//! Randomized self-checks that cross-validate independent routes to the
//! same answers. A failing check means a bug, never bad input.

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::classify::{finitely_covered_by_trivial, fibration_spectrum, is_besse_realizable};
use crate::cohomology::{CyclicGradedRing, EulerClassCoeff};
use crate::generators::weighted_hopf;
use crate::orbifold::TwoOrbifold;
use crate::rational::Rational;
use crate::sampling::{random_invariants, random_move_sequence};

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First counterexample, if any.
    pub detail: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Results of a full self-test run. Reproducible from the seed.
#[derive(Debug, Clone, Serialize)]
pub struct SelfTestReport {
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

struct Recorder {
    name: &'static str,
    cases: usize,
    failures: usize,
    detail: Option<String>,
}

impl Recorder {
    fn new(name: &'static str) -> Self {
        Recorder {
            name,
            cases: 0,
            failures: 0,
            detail: None,
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            detail: self.detail,
        }
    }
}

/// Runs every self-check with the given seed.
pub fn run(seed: u64) -> SelfTestReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checks = Vec::new();

    // The two realizability routes must be pointwise complementary.
    let mut rec = Recorder::new("realizability routes are complementary");
    for _ in 0..10_000 {
        let s = random_invariants(&mut rng, 5, 12, 12);
        let ok = is_besse_realizable(&s) != finitely_covered_by_trivial(&s);
        rec.case(ok, || format!("disagreement on {s}"));
    }
    checks.push(rec.finish());

    let mut rec = Recorder::new("euler number is invariant under elementary moves");
    for _ in 0..2_000 {
        let s = random_invariants(&mut rng, 5, 12, 12);
        let moved = random_move_sequence(&mut rng, &s, 12);
        rec.case(moved.euler_number() == s.euler_number(), || {
            format!("{s} -> {moved}")
        });
    }
    checks.push(rec.finish());

    let mut rec = Recorder::new("normalize is idempotent and preserves invariants");
    for _ in 0..2_000 {
        let s = random_invariants(&mut rng, 5, 12, 12);
        let n = s.normalize();
        let ok = n.normalize() == n
            && n.euler_number() == s.euler_number()
            && TwoOrbifold::base_of(&n) == TwoOrbifold::base_of(&s);
        rec.case(ok, || format!("on {s}"));
    }
    checks.push(rec.finish());

    let mut rec = Recorder::new("spectrum is invariant under moves and normalization");
    for _ in 0..2_000 {
        let s = random_invariants(&mut rng, 5, 12, 12);
        let moved = random_move_sequence(&mut rng, &s, 12);
        let spec = fibration_spectrum(&s);
        let ok = fibration_spectrum(&moved).matches(&spec)
            && fibration_spectrum(&s.normalize()).matches(&spec);
        rec.case(ok, || format!("on {s}"));
    }
    checks.push(rec.finish());

    let mut rec = Recorder::new("cup-product condition routes agree");
    for m in 1..=64u64 {
        let ring = CyclicGradedRing::new(1, m);
        for k in -64..=64i64 {
            let e = EulerClassCoeff::new(k);
            rec.case(ring.euler_condition_cross_checked(e).is_ok(), || {
                format!("m = {m}, k = {k}")
            });
        }
    }
    checks.push(rec.finish());

    let mut rec = Recorder::new("weighted hopf euler number is -1/(pq)");
    for p in 1..=30i64 {
        for q in p..=30i64 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let hopf = weighted_hopf(p, q).expect("coprime weights");
            let ok = hopf.invariants.euler_number() == Rational::new(-1, p * q)
                && is_besse_realizable(&hopf.invariants);
            rec.case(ok, || format!("p = {p}, q = {q}"));
        }
    }
    checks.push(rec.finish());

    SelfTestReport { seed, checks }
}
