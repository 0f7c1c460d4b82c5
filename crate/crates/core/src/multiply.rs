//! Surjectivity of `R : Γ(L_λ) ⊗ Γ(L_μ) → Γ(L_{λ+μ})`.
//!
//! On interval-splitting varieties the image of `R` is a submodule containing
//! `R(y^{m₁}σ_λ ⊗ y^{m₂}σ_μ) = y^{m}σ_{λ+μ}` whenever `m = m₁ + m₂` with both
//! factors admissible, so `R` is onto once every admissible `m` for `λ+μ` has
//! such a split. The checker searches for the splits and reports the first
//! `m` without one as a failure instead of assuming surjectivity.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::catalog::Treatment;
use crate::error::{Error, Result};
use crate::rootsys::Weight;
use crate::sections::{bound_from_star, m_bound};
use crate::wonderful::{PicClass, WonderfulVariety};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    SurjectiveBySplitting,
    SurjectiveByBorelWeil,
    SurjectiveP1xP1,
    /// No split exists for this `m` (or monomial exponent, on the `P¹×P¹` path).
    Failed {
        m: u64,
    },
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::SurjectiveBySplitting => "surjective-by-splitting",
            Verdict::SurjectiveByBorelWeil => "surjective-by-borel-weil",
            Verdict::SurjectiveP1xP1 => "surjective-p1xp1",
            Verdict::Failed { .. } => "failed",
        }
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, Verdict::Failed { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Failed { m } => write!(f, "failed(m={m})"),
            v => f.write_str(v.as_str()),
        }
    }
}

/// `m = m₁ + m₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub m: u64,
    pub m1: u64,
    pub m2: u64,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.m, self.m1, self.m2].serialize(s)
    }
}

/// `(M_λ, M_μ, M_{λ+μ})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub lambda: u64,
    pub mu: u64,
    pub sum: u64,
}

impl Serialize for Bounds {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lambda, self.mu, self.sum].serialize(s)
    }
}

/// Monomial splits for `L_{λ,k₁,k₂} ⊗ L_{μ,l₁,l₂}` on an induction of `P¹×P¹`.
///
/// `factors[i]` witnesses `k[X,Y]_{kᵢ} ⊗ k[X,Y]_{lᵢ} → k[X,Y]_{kᵢ+lᵢ}`: each
/// target monomial `X^a Y^{kᵢ+lᵢ−a}` is the product of `X^{a₁}Y^{kᵢ−a₁}` and
/// `X^{a₂}Y^{lᵢ−a₂}`. The `V_{λ*} ⊗ V_{μ*} → V_{λ*+μ*}` factor is the Cartan
/// product, onto because it is nonzero with irreducible target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P1xP1Evidence {
    pub lambda_class: PicClass,
    pub mu_class: PicClass,
    pub factors: [Vec<Witness>; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectivityCertificate {
    pub lambda: Weight,
    pub mu: Weight,
    pub verdict: Verdict,
    pub bounds: Option<Bounds>,
    pub witnesses: Vec<Witness>,
    pub p1xp1: Vec<P1xP1Evidence>,
}

impl SurjectivityCertificate {
    pub fn is_surjective(&self) -> bool {
        !self.verdict.is_failed()
    }
}

/// `{"lambda":[…], "mu":[…], "verdict":"…", "bounds":[Mλ,Mμ,Mλ+μ], "witnesses":[[m,m1,m2],…]}`,
/// with `failed_at` on failure and `p1xp1` evidence on that path.
impl Serialize for SurjectivityCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("lambda", &self.lambda)?;
        map.serialize_entry("mu", &self.mu)?;
        map.serialize_entry("verdict", self.verdict.as_str())?;
        if let Verdict::Failed { m } = self.verdict {
            map.serialize_entry("failed_at", &m)?;
        }
        map.serialize_entry("bounds", &self.bounds)?;
        map.serialize_entry("witnesses", &self.witnesses)?;
        if !self.p1xp1.is_empty() {
            map.serialize_entry("p1xp1", &self.p1xp1)?;
        }
        map.end()
    }
}

/// Greedy split `m₁ = max{m − M_μ, 0}`, `m₂ = m − m₁`, if it fits both bounds.
pub fn split(bound_lambda: u64, bound_mu: u64, m: u64) -> Option<(u64, u64)> {
    let m1 = m.saturating_sub(bound_mu);
    let m2 = m - m1;
    (m1 <= bound_lambda && m2 <= bound_mu).then_some((m1, m2))
}

/// Splits every `m` in `0..=sum`; stops at the first `m` without a split.
fn witness_interval(bound_lambda: u64, bound_mu: u64, sum: u64) -> (Vec<Witness>, Option<u64>) {
    let mut out = Vec::with_capacity(sum as usize + 1);
    for m in 0..=sum {
        match split(bound_lambda, bound_mu, m) {
            Some((m1, m2)) => out.push(Witness { m, m1, m2 }),
            None => return (out, Some(m)),
        }
    }
    (out, None)
}

fn require_pic_plus(x: &WonderfulVariety, w: &Weight) -> Result<()> {
    if x.pic_plus_contains(w) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{w} is not in pic⁺({x})")))
    }
}

/// Checks surjectivity of `R` for `λ, μ ∈ pic⁺(X)`.
///
/// On inductions of `P¹×P¹` a weight labels several line bundles; every
/// labeling pair is checked.
pub fn check_surjectivity(
    x: &WonderfulVariety,
    lambda: &Weight,
    mu: &Weight,
) -> Result<SurjectivityCertificate> {
    require_pic_plus(x, lambda)?;
    require_pic_plus(x, mu)?;
    match x.treatment() {
        Treatment::BorelWeil => Ok(SurjectivityCertificate {
            lambda: lambda.clone(),
            mu: mu.clone(),
            verdict: Verdict::SurjectiveByBorelWeil,
            bounds: None,
            witnesses: Vec::new(),
            p1xp1: Vec::new(),
        }),
        Treatment::P1xP1Special => {
            let lambda_classes = p1xp1_labelings(x, lambda)?;
            let mu_classes = p1xp1_labelings(x, mu)?;
            let mut evidence = Vec::new();
            let mut verdict = Verdict::SurjectiveP1xP1;
            for lc in &lambda_classes {
                for mc in &mu_classes {
                    let (ev, failed) = p1xp1_evidence(lc, mc);
                    evidence.push(ev);
                    if let (Some(m), false) = (failed, verdict.is_failed()) {
                        verdict = Verdict::Failed { m };
                    }
                }
            }
            Ok(SurjectivityCertificate {
                lambda: lambda.clone(),
                mu: mu.clone(),
                verdict,
                bounds: None,
                witnesses: Vec::new(),
                p1xp1: evidence,
            })
        }
        Treatment::IntervalSplitting => {
            let gamma = x.gamma().expect("interval-splitting varieties carry γ");
            let (lambda_inner, _) = x.split_star(lambda)?;
            let (mu_inner, _) = x.split_star(mu)?;
            let bounds = Bounds {
                lambda: bound_from_star(&lambda_inner, gamma),
                mu: bound_from_star(&mu_inner, gamma),
                sum: bound_from_star(&(&lambda_inner + &mu_inner), gamma),
            };
            let (witnesses, failed) = witness_interval(bounds.lambda, bounds.mu, bounds.sum);
            Ok(SurjectivityCertificate {
                lambda: lambda.clone(),
                mu: mu.clone(),
                verdict: match failed {
                    Some(m) => Verdict::Failed { m },
                    None => Verdict::SurjectiveBySplitting,
                },
                bounds: Some(bounds),
                witnesses,
                p1xp1: Vec::new(),
            })
        }
    }
}

/// All Picard classes on an induction of `P¹×P¹` whose weight is `λ`.
pub fn p1xp1_labelings(x: &WonderfulVariety, lambda: &Weight) -> Result<Vec<PicClass>> {
    if x.treatment() != Treatment::P1xP1Special {
        return Err(Error::UnsupportedPath(format!(
            "{x} is not an induction of P1xP1"
        )));
    }
    let (inner, outer) = x.split_star(lambda)?;
    let fiber_degree = x.restrict_to_fiber(&inner).coords()[0];
    let external: Vec<i64> = x.external().iter().map(|&d| outer.coords()[d]).collect();
    Ok((0..=fiber_degree)
        .map(|k1| {
            let mut coeffs = external.clone();
            coeffs.push(k1);
            coeffs.push(fiber_degree - k1);
            PicClass::new(coeffs)
        })
        .collect())
}

fn fiber_degrees(class: &PicClass) -> (u64, u64) {
    let n = class.coeffs.len();
    (class.coeffs[n - 2] as u64, class.coeffs[n - 1] as u64)
}

fn p1xp1_evidence(lambda: &PicClass, mu: &PicClass) -> (P1xP1Evidence, Option<u64>) {
    let (k1, k2) = fiber_degrees(lambda);
    let (l1, l2) = fiber_degrees(mu);
    let (w1, f1) = witness_interval(k1, l1, k1 + l1);
    let (w2, f2) = witness_interval(k2, l2, k2 + l2);
    (
        P1xP1Evidence {
            lambda_class: lambda.clone(),
            mu_class: mu.clone(),
            factors: [w1, w2],
        },
        f1.or(f2),
    )
}

/// Checks surjectivity for line bundles given by Picard classes.
///
/// This is the natural labeling on inductions of `P¹×P¹`, where the class
/// `(…, k₁, k₂)` names `L_{λ,k₁,k₂}` unambiguously.
pub fn check_surjectivity_classes(
    x: &WonderfulVariety,
    lambda: &PicClass,
    mu: &PicClass,
) -> Result<SurjectivityCertificate> {
    let lambda_weight = x.class_to_weight(lambda)?;
    let mu_weight = x.class_to_weight(mu)?;
    for c in [lambda, mu] {
        if !x.is_globally_generated(c) {
            return Err(Error::Domain(format!(
                "class {c} on {x} is not generated by global sections"
            )));
        }
    }
    if x.treatment() != Treatment::P1xP1Special {
        return check_surjectivity(x, &lambda_weight, &mu_weight);
    }
    let (ev, failed) = p1xp1_evidence(lambda, mu);
    Ok(SurjectivityCertificate {
        lambda: lambda_weight,
        mu: mu_weight,
        verdict: match failed {
            Some(m) => Verdict::Failed { m },
            None => Verdict::SurjectiveP1xP1,
        },
        bounds: None,
        witnesses: Vec::new(),
        p1xp1: vec![ev],
    })
}

/// Weight-level identities behind the reduction from `X` to its fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub lambda: Weight,
    pub lambda_star: Weight,
    /// `λ₁*`, supported on `Δ₁`.
    pub levi_part: Weight,
    /// `λ₂*`, supported off `Δ₁`.
    pub external_part: Weight,
    /// `λ₁*` read as a fiber weight.
    pub fiber_weight: Weight,
    pub ambient_bound: u64,
    pub fiber_bound: u64,
    /// Number of `(μ₂, m)` probes of the monotonicity property.
    pub monotonicity_probes: usize,
    pub failures: Vec<String>,
    pub holds: bool,
}

/// Verifies, for `λ ∈ pic⁺(X)`:
///
/// 1. `λ* = λ₁* + λ₂*` with both parts dominant and `λ₂*` supported off `Δ₁`;
/// 2. the ambient bound of `λ` equals the fiber bound of `λ₁*` read on the fiber;
/// 3. for `μ₂` supported off `Δ₁`, dominance of `λ* + μ₂ − mγ` implies dominance
///    of `λ* − mγ`.
pub fn check_reduction(x: &WonderfulVariety, lambda: &Weight) -> Result<ReductionReport> {
    let ambient_bound = m_bound(x, lambda)?;
    let gamma = x.gamma().expect("m_bound succeeded, so γ is present");
    let rank = x.ambient().rank();
    let lambda_star = x.ambient().weight_star(lambda)?;
    let (levi_part, external_part) = x.split_star(lambda)?;
    let mut failures = Vec::new();

    if &levi_part + &external_part != lambda_star {
        failures.push(format!("{levi_part} + {external_part} != {lambda_star}"));
    }
    if !levi_part.is_nonnegative() || !external_part.is_nonnegative() {
        failures.push(format!(
            "parts {levi_part}, {external_part} are not both dominant"
        ));
    }
    if x.levi().iter().any(|&d| external_part.coords()[d] != 0) {
        failures.push(format!("{external_part} is not supported off Δ₁"));
    }

    let fiber_weight = x.restrict_to_fiber(&levi_part);
    let fiber = WonderfulVariety::irreducible(x.fiber().clone())?;
    let fiber_bound = match m_bound(&fiber, &fiber_weight) {
        Ok(b) => b,
        Err(e) => {
            failures.push(format!("fiber bound for {fiber_weight}: {e}"));
            0
        }
    };
    if fiber_bound != ambient_bound {
        failures.push(format!(
            "ambient bound {ambient_bound} != fiber bound {fiber_bound}"
        ));
    }

    let mut probes: Vec<Weight> = x
        .external()
        .iter()
        .map(|&d| Weight::fundamental(rank, d))
        .collect();
    if !external_part.is_zero() {
        probes.push(external_part.clone());
    }
    if x.external().len() > 1 {
        let mut all = Weight::zero(rank);
        for &d in x.external() {
            all = &all + &Weight::fundamental(rank, d);
        }
        probes.push(all);
    }
    let mut count = 0;
    for mu2 in &probes {
        let raised = &lambda_star + mu2;
        let top = bound_from_star(&raised, gamma) + 1;
        for m in 0..=top {
            count += 1;
            let with = &raised - &(gamma * m as i64);
            let without = &lambda_star - &(gamma * m as i64);
            if with.is_nonnegative() && !without.is_nonnegative() {
                failures.push(format!(
                    "λ* + {mu2} − {m}γ is dominant but λ* − {m}γ is not"
                ));
            }
        }
    }

    Ok(ReductionReport {
        lambda: lambda.clone(),
        lambda_star,
        levi_part,
        external_part,
        fiber_weight,
        ambient_bound,
        fiber_bound,
        monotonicity_probes: count,
        holds: failures.is_empty(),
        failures,
    })
}
