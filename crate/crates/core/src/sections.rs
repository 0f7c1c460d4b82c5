//! Decomposition of `Γ(X, L_λ)` into irreducible summands.
//!
//! For `λ ∈ pic⁺(X)` the module of sections is the direct sum of the simple
//! modules of highest weight `λ* − mγ` over all `m ≥ 0` keeping that weight
//! dominant. Each coordinate of `λ* − mγ` is affine in `m`, so the admissible `m`
//! form an initial interval `0..=M` with
//! `M = min_{⟨γ,δ∨⟩ > 0} ⌊⟨λ*, δ∨⟩ / ⟨γ, δ∨⟩⌋`.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::catalog::Treatment;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::wonderful::WonderfulVariety;

/// One summand `U(g) y^m σ_λ` of highest weight `λ* − mγ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub m: u64,
    pub head: Weight,
    #[serde(serialize_with = "decimal")]
    pub dim: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionDecomposition {
    pub lambda: Weight,
    pub summands: Vec<Summand>,
    #[serde(serialize_with = "decimal")]
    pub total_dim: BigUint,
}

pub(crate) fn decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_str_radix(10))
}

fn require_interval(x: &WonderfulVariety) -> Result<&Weight> {
    match (x.treatment(), x.gamma()) {
        (Treatment::IntervalSplitting, Some(gamma)) => Ok(gamma),
        (t, _) => Err(Error::UnsupportedPath(format!(
            "{x} has treatment {t}; the section decomposition needs a spherical root \
             and excludes inductions of P1xP1"
        ))),
    }
}

/// Closed-form largest `m` with `λ* − mγ` dominant, for dominant `λ*`.
pub(crate) fn bound_from_star(lambda_star: &Weight, gamma: &Weight) -> u64 {
    lambda_star
        .coords()
        .iter()
        .zip(gamma.coords())
        .filter(|(_, &g)| g > 0)
        .map(|(&l, &g)| (l.div_euclid(g)).max(0) as u64)
        .min()
        .expect("spherical root pairs positively with some simple coroot")
}

/// Largest `m` such that `λ* − mγ` is dominant.
pub fn m_bound(x: &WonderfulVariety, lambda: &Weight) -> Result<u64> {
    let gamma = require_interval(x)?;
    if !x.pic_plus_contains(lambda) {
        return Err(Error::Domain(format!("{lambda} is not in pic⁺({x})")));
    }
    let star = x.ambient().weight_star(lambda)?;
    Ok(bound_from_star(&star, gamma))
}

/// The summands of `Γ(X, L_λ)` for `m = 0..=M`.
pub fn decompose(x: &WonderfulVariety, lambda: &Weight) -> Result<SectionDecomposition> {
    let bound = m_bound(x, lambda)?;
    let gamma = require_interval(x)?;
    let rs = x.ambient();
    let star = rs.weight_star(lambda)?;
    let mut summands = Vec::with_capacity(bound as usize + 1);
    let mut total = BigUint::from(0u32);
    for m in 0..=bound {
        let head = &star - &(gamma * m as i64);
        let dim = rs.weyl_dim(&head)?;
        total += &dim;
        summands.push(Summand { m, head, dim });
    }
    Ok(SectionDecomposition {
        lambda: lambda.clone(),
        summands,
        total_dim: total,
    })
}

/// `dim Γ(X, L_{λ,k₁,k₂}) = dim V_{λ*} · (k₁+1) · (k₂+1)` on inductions of `P¹×P¹`.
pub fn dim_sections_p1xp1(rs: &RootSystem, lambda: &Weight, k1: i64, k2: i64) -> Result<BigUint> {
    if k1 < 0 || k2 < 0 {
        return Err(Error::Domain(format!(
            "P1xP1 degrees must be nonnegative, got ({k1},{k2})"
        )));
    }
    if !rs.is_dominant(lambda)? {
        return Err(Error::Domain(format!("{lambda} is not dominant")));
    }
    let base = rs.weyl_dim(&rs.weight_star(lambda)?)?;
    Ok(base * BigUint::from((k1 + 1) as u64) * BigUint::from((k2 + 1) as u64))
}
