//! Rank-one wonderful varieties obtained by parabolic induction `G ×^Q X₁` from an
//! irreducible catalog entry `X₁`, with their Picard data.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogEntry, EntryId, Treatment};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{RootSystem, Weight};

/// A divisor class `Σ nᵢ D̄ᵢ`, coefficients over [`WonderfulVariety::pic_basis`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PicClass {
    pub coeffs: Vec<i64>,
}

impl PicClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        PicClass { coeffs }
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Weight::new(self.coeffs.clone()))
    }
}

/// A rank-one wonderful variety `G ×^Q X₁`.
///
/// Indices are 0-based ambient simple-root indices. `correspondence[i]` is the
/// ambient root matched with fiber root `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct WonderfulVariety {
    ambient: RootSystem,
    levi: Vec<usize>,
    external: Vec<usize>,
    correspondence: Vec<usize>,
    fiber: CatalogEntry,
    gamma: Option<Weight>,
    pic_basis: Vec<Weight>,
}

/// Builds `G ×^Q X₁` for the Levi subset `levi` of `ambient`.
pub fn make_induced(
    ambient: RootSystem,
    levi: &[usize],
    fiber: CatalogEntry,
    correspondence: &[usize],
) -> Result<WonderfulVariety> {
    let rank = ambient.rank();
    let levi_set: BTreeSet<usize> = levi.iter().copied().collect();
    if levi_set.len() != levi.len() {
        return Err(Error::Structural("Levi subset has repeated indices".into()));
    }
    if let Some(&bad) = levi_set.iter().find(|&&i| i >= rank) {
        return Err(Error::IndexOutOfRange { index: bad, rank });
    }
    if correspondence.len() != fiber.rank() {
        return Err(Error::Structural(format!(
            "correspondence has {} entries but the fiber {} has rank {}",
            correspondence.len(),
            fiber.id,
            fiber.rank()
        )));
    }
    let image: BTreeSet<usize> = correspondence.iter().copied().collect();
    if image != levi_set || image.len() != correspondence.len() {
        return Err(Error::Structural(format!(
            "correspondence {correspondence:?} is not a bijection onto the Levi subset {levi:?}"
        )));
    }
    for i in 0..fiber.rank() {
        for j in 0..fiber.rank() {
            let want = fiber.group.cartan_entry(i, j);
            let got = ambient.cartan_entry(correspondence[i], correspondence[j]);
            if want != got {
                return Err(Error::Structural(format!(
                    "Dynkin sub-diagram on {levi:?} of {ambient} does not match {} under {correspondence:?}",
                    fiber.group
                )));
            }
        }
    }
    let trivial = levi_set.len() == rank;
    if fiber.treatment == Treatment::BorelWeil && !trivial {
        return Err(Error::Structural(format!(
            "flag-type fiber {} carries no spherical root; only the trivial induction is supported",
            fiber.id
        )));
    }
    let external: Vec<usize> = (0..rank).filter(|i| !levi_set.contains(i)).collect();

    let gamma = match &fiber.gamma {
        None => None,
        Some(g) => {
            let gamma = push_forward_root_weight(&ambient, &fiber.group, correspondence, g)?;
            for &d in &external {
                if gamma.coords()[d] > 0 {
                    return Err(Error::Structural(format!(
                        "γ = {gamma} pairs positively with the external coroot α{}∨",
                        d + 1
                    )));
                }
            }
            Some(gamma)
        }
    };

    let mut x = WonderfulVariety {
        ambient,
        levi: levi_set.into_iter().collect(),
        external,
        correspondence: correspondence.to_vec(),
        fiber,
        gamma,
        pic_basis: Vec::new(),
    };
    let mut basis = Vec::with_capacity(x.external.len() + x.fiber.picard_rank());
    for &d in &x.external {
        basis.push(x.ambient.weight_star(&Weight::fundamental(rank, d))?);
    }
    for g in &x.fiber.pic_generators {
        let embedded = x.embed_fiber_weight(g);
        basis.push(x.ambient.weight_star(&embedded)?);
    }
    x.pic_basis = basis;
    Ok(x)
}

/// Expands a fiber weight lying in the root lattice over the fiber simple roots and
/// re-expresses the pushed-forward combination in ambient fundamental coordinates.
fn push_forward_root_weight(
    ambient: &RootSystem,
    fiber: &RootSystem,
    correspondence: &[usize],
    w: &Weight,
) -> Result<Weight> {
    let simple: Vec<Vec<i64>> = (0..fiber.rank())
        .map(|i| fiber.simple_root(i).map(Weight::into_coords))
        .collect::<Result<_>>()?;
    let coeffs = linalg::solve_in_span(&simple, w.coords())
        .ok_or_else(|| Error::Structural(format!("{w} is not in the span of the fiber roots")))?;
    let mut out = vec![Ratio::<i128>::zero(); ambient.rank()];
    for (i, c) in coeffs.iter().enumerate() {
        let root = ambient.simple_root(correspondence[i])?;
        for (o, r) in out.iter_mut().zip(root.coords()) {
            *o += *c * Ratio::from_integer(*r as i128);
        }
    }
    out.into_iter()
        .map(|q| {
            if q.is_integer() {
                Ok(q.to_integer() as i64)
            } else {
                Err(Error::Structural(format!(
                    "pushed-forward γ is not integral (coordinate {q})"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Weight::new)
}

impl WonderfulVariety {
    /// The irreducible variety `X₁` itself (`Δ₁ = Δ`, identity correspondence).
    pub fn irreducible(entry: CatalogEntry) -> Result<Self> {
        let rank = entry.rank();
        let all: Vec<usize> = (0..rank).collect();
        make_induced(entry.group.clone(), &all, entry, &all)
    }

    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn fiber(&self) -> &CatalogEntry {
        &self.fiber
    }

    /// `Δ₁`, sorted.
    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    /// `Δ ∖ Δ₁`, sorted.
    pub fn external(&self) -> &[usize] {
        &self.external
    }

    pub fn correspondence(&self) -> &[usize] {
        &self.correspondence
    }

    /// Spherical root in ambient fundamental coordinates.
    pub fn gamma(&self) -> Option<&Weight> {
        self.gamma.as_ref()
    }

    pub fn treatment(&self) -> Treatment {
        self.fiber.treatment
    }

    pub fn is_irreducible(&self) -> bool {
        self.external.is_empty()
    }

    /// Weights `λ` of the divisor-class basis: first `star(ω_δ)` for external `δ`,
    /// then the (starred) embedded fiber generators.
    pub fn pic_basis(&self) -> &[Weight] {
        &self.pic_basis
    }

    pub fn pic_rank(&self) -> usize {
        self.external.len() + self.fiber.picard_rank()
    }

    pub fn embed_fiber_weight(&self, w: &Weight) -> Weight {
        let mut out = vec![0; self.ambient.rank()];
        for (i, &c) in w.coords().iter().enumerate() {
            out[self.correspondence[i]] = c;
        }
        Weight::new(out)
    }

    /// Reads the `Δ₁` coordinates of an ambient weight as a fiber weight.
    pub fn restrict_to_fiber(&self, w: &Weight) -> Weight {
        Weight::new(self.correspondence.iter().map(|&a| w.coords()[a]).collect())
    }

    /// Splits `λ*` as `λ₁* + λ₂*` with `λ₁*` supported on `Δ₁` and `λ₂*` off it.
    pub fn split_star(&self, lambda: &Weight) -> Result<(Weight, Weight)> {
        let star = self.ambient.weight_star(lambda)?;
        let mut inner = star.clone().into_coords();
        let mut outer = star.into_coords();
        for &d in &self.external {
            inner[d] = 0;
        }
        for &d in &self.levi {
            outer[d] = 0;
        }
        Ok((Weight::new(inner), Weight::new(outer)))
    }

    /// Membership of `λ` in `pic⁺(X)`.
    pub fn pic_plus_contains(&self, lambda: &Weight) -> bool {
        if lambda.rank() != self.ambient.rank() || !lambda.is_nonnegative() {
            return false;
        }
        match self.split_star(lambda) {
            Ok((inner, _)) => self
                .fiber
                .pic_plus_contains(&self.restrict_to_fiber(&inner)),
            Err(_) => false,
        }
    }

    pub fn class_to_weight(&self, class: &PicClass) -> Result<Weight> {
        if class.coeffs.len() != self.pic_basis.len() {
            return Err(Error::Dimension {
                expected: self.pic_basis.len(),
                got: class.coeffs.len(),
            });
        }
        let mut out = Weight::zero(self.ambient.rank());
        for (n, b) in class.coeffs.iter().zip(&self.pic_basis) {
            out = &out + &(b * *n);
        }
        Ok(out)
    }

    /// Whether the line bundle of `class` is generated by its global sections.
    pub fn is_globally_generated(&self, class: &PicClass) -> bool {
        class.coeffs.iter().all(|&n| n >= 0)
    }

    /// Whether `Pic(X) → Pic(F)` (restriction to the closed orbit) is injective.
    pub fn pic_restriction_injective(&self) -> bool {
        self.fiber.id != EntryId::P1xP1
    }

    /// Short human-readable label.
    pub fn label(&self) -> String {
        if self.is_irreducible() {
            self.fiber.id.to_string()
        } else {
            let levi: Vec<String> = self.levi.iter().map(|i| (i + 1).to_string()).collect();
            format!("{}/{{{}}}/{}", self.ambient, levi.join(","), self.fiber.id)
        }
    }
}

impl fmt::Display for WonderfulVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::get_entry;
    use crate::rootsys::CartanType;

    fn b4_over_9b3() -> WonderfulVariety {
        make_induced(
            RootSystem::new(CartanType::B, 4).unwrap(),
            &[1, 2, 3],
            get_entry(&EntryId::Case9B(3)).unwrap(),
            &[1, 2, 3],
        )
        .unwrap()
    }

    #[test]
    fn induced_gamma() {
        let x = b4_over_9b3();
        assert_eq!(x.gamma(), Some(&Weight::from([-1, 1, 0, 0])));
        assert_eq!(x.external(), &[0]);
        assert_eq!(x.pic_rank(), 2);
        assert_eq!(
            x.pic_basis(),
            &[Weight::from([1, 0, 0, 0]), Weight::from([0, 1, 0, 0])]
        );
    }

    #[test]
    fn trivial_induction_of_p1xp1() {
        let e = get_entry(&EntryId::P1xP1).unwrap();
        let x = make_induced(e.group.clone(), &[0], e.clone(), &[0]).unwrap();
        assert_eq!(x, WonderfulVariety::irreducible(e).unwrap());
        assert!(x.is_irreducible());
        assert_eq!(x.gamma(), None);
        assert_eq!(x.pic_rank(), 2);
    }

    #[test]
    fn mismatched_diagram_is_rejected() {
        let r = make_induced(
            RootSystem::new(CartanType::A, 3).unwrap(),
            &[0, 2],
            get_entry(&EntryId::Case15).unwrap(),
            &[0, 2],
        );
        assert!(matches!(r, Err(Error::Structural(_))));
        // Reversed B3 numbering inside B4 breaks the double bond orientation.
        let r = make_induced(
            RootSystem::new(CartanType::B, 4).unwrap(),
            &[1, 2, 3],
            get_entry(&EntryId::Case9B(3)).unwrap(),
            &[3, 2, 1],
        );
        assert!(matches!(r, Err(Error::Structural(_))));
    }

    #[test]
    fn bad_correspondence_is_rejected() {
        let fiber = get_entry(&EntryId::Case9B(3)).unwrap();
        let b4 = RootSystem::new(CartanType::B, 4).unwrap();
        assert!(make_induced(b4.clone(), &[1, 2, 3], fiber.clone(), &[1, 2]).is_err());
        assert!(make_induced(b4.clone(), &[1, 2, 3], fiber.clone(), &[1, 1, 3]).is_err());
        assert!(matches!(
            make_induced(b4, &[1, 2, 9], fiber, &[1, 2, 9]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn b2_inside_c3_with_swapped_numbering() {
        // In C₃, {α₂, α₃} is B₂ with α₃ long: fiber α₁ ↦ α₃, α₂ ↦ α₂.
        let x = make_induced(
            RootSystem::new(CartanType::C, 3).unwrap(),
            &[1, 2],
            get_entry(&EntryId::Case9B(2)).unwrap(),
            &[2, 1],
        )
        .unwrap();
        // Fiber γ = ω₁ = α₁ + α₂ ↦ α₃ + α₂ in C₃.
        assert_eq!(x.gamma(), Some(&Weight::from([-1, 0, 1])));
    }

    #[test]
    fn induced_pic_plus() {
        let x = b4_over_9b3();
        assert!(x.pic_plus_contains(&Weight::from([1, 2, 0, 0])));
        assert!(!x.pic_plus_contains(&Weight::from([0, 0, 1, 0])));
        assert!(x.pic_plus_contains(&Weight::zero(4)));
        assert!(!x.pic_plus_contains(&Weight::from([-1, 2, 0, 0])));
        assert!(!x.pic_plus_contains(&Weight::from([1, 2, 0])));
    }

    #[test]
    fn global_generation() {
        let x = WonderfulVariety::irreducible(get_entry(&EntryId::Case15).unwrap()).unwrap();
        assert!(x.is_globally_generated(&PicClass::new(vec![1, 0])));
        assert!(x.is_globally_generated(&PicClass::new(vec![0, 0])));
        let p = WonderfulVariety::irreducible(get_entry(&EntryId::P1xP1).unwrap()).unwrap();
        assert!(!p.is_globally_generated(&PicClass::new(vec![1, -1])));
    }

    #[test]
    fn restriction_injectivity() {
        let b = WonderfulVariety::irreducible(get_entry(&EntryId::Case9B(2)).unwrap()).unwrap();
        assert!(b.pic_restriction_injective());
        let p = WonderfulVariety::irreducible(get_entry(&EntryId::P1xP1).unwrap()).unwrap();
        assert!(!p.pic_restriction_injective());
        let induced = make_induced(
            RootSystem::new(CartanType::B, 4).unwrap(),
            &[3],
            get_entry(&EntryId::P1xP1).unwrap(),
            &[3],
        )
        .unwrap();
        assert!(!induced.pic_restriction_injective());
        assert_eq!(induced.pic_rank(), 5);
    }

    #[test]
    fn pic_ranks() {
        let g2 = WonderfulVariety::irreducible(get_entry(&EntryId::Case15).unwrap()).unwrap();
        assert_eq!(g2.pic_rank(), 2);
        let p = WonderfulVariety::irreducible(get_entry(&EntryId::P1xP1).unwrap()).unwrap();
        assert_eq!(p.pic_rank(), 2);
        assert_eq!(b4_over_9b3().pic_rank(), 2);
    }

    #[test]
    fn classes_map_to_weights() {
        let x = b4_over_9b3();
        let w = x.class_to_weight(&PicClass::new(vec![1, 2])).unwrap();
        assert_eq!(w, Weight::from([1, 2, 0, 0]));
        assert!(x.pic_plus_contains(&w));
        assert!(x.class_to_weight(&PicClass::new(vec![1])).is_err());
    }

    #[test]
    fn star_enters_the_basis_for_type_a() {
        // A₃ with Δ₁ = {α₁}: ω₂ and ω₃ are external, and ω₃* = ω₁.
        let fiber = get_entry(&EntryId::P1xP1).unwrap();
        let x = make_induced(
            RootSystem::new(CartanType::A, 3).unwrap(),
            &[0],
            fiber,
            &[0],
        )
        .unwrap();
        assert_eq!(x.pic_basis()[1], Weight::from([1, 0, 0]));
        assert_eq!(x.pic_basis()[2], Weight::from([0, 0, 1]));
        assert_eq!(x.label(), "A3/{1}/P1xP1");
    }

    #[test]
    fn flag_fibers_only_induce_trivially() {
        use crate::catalog::FlagData;
        let p2 = get_entry(&EntryId::Flag(FlagData::projective_space(2).unwrap())).unwrap();
        assert!(WonderfulVariety::irreducible(p2.clone()).is_ok());
        let r = make_induced(
            RootSystem::new(CartanType::A, 3).unwrap(),
            &[1, 2],
            p2,
            &[1, 2],
        );
        assert!(matches!(r, Err(Error::Structural(_))));
    }
}
