//! The irreducible rank-one wonderful varieties used by the checker, as data.
//!
//! Built-in families:
//!
//! | id        | group | spherical root γ | pic⁺ generators |
//! |-----------|-------|------------------|-----------------|
//! | `9B(n)`   | `Bₙ`  | `ω₁`             | `ω₁`            |
//! | `9C(n)`   | `Cₙ`  | `ω₂`             | `ω₂`            |
//! | `15`      | `G₂`  | `ω₂ − ω₁`        | `ω₁, ω₂`        |
//! | `P1xP1`   | `A₁`  | none             | `O(1,0), O(0,1)`, both of weight `ω₁` |
//!
//! Flag varieties (projective spaces, quadrics, …) are user-supplied
//! [`FlagData`] and are handled by Borel–Weil irreducibility.
//!
//! Generators are recorded as the highest weights `λ*` of the section modules,
//! so `pic_plus_contains` on a variety tests `λ*`. The two readings agree for
//! the built-in groups, where `−w₀ = id`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::models::GradedModel;
use crate::rootsys::{CartanType, RootSystem, Weight};

/// How the surjectivity checker treats a variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Treatment {
    IntervalSplitting,
    BorelWeil,
    P1xP1Special,
}

impl Treatment {
    pub fn as_str(self) -> &'static str {
        match self {
            Treatment::IntervalSplitting => "interval-splitting",
            Treatment::BorelWeil => "borel-weil",
            Treatment::P1xP1Special => "p1xp1-special",
        }
    }
}

impl fmt::Display for Treatment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A homogeneous (flag-type) rank-one wonderful variety supplied by the user.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagData {
    pub name: String,
    pub group: RootSystem,
    pub pic: Vec<Weight>,
    /// Explicit coordinate ring, when one is available for oracle cross-checks.
    pub model: Option<GradedModel>,
}

impl FlagData {
    /// `Pⁿ` under `SL_{n+1}`; `Γ(O(1))` has highest weight `ω₁`.
    pub fn projective_space(n: usize) -> Result<Self> {
        let group = RootSystem::new(CartanType::A, n)?;
        Ok(FlagData {
            name: format!("P{n}"),
            pic: vec![Weight::fundamental(n, 0)],
            group,
            model: Some(GradedModel::ProjectiveSpace(n)),
        })
    }

    /// The quadric `Q(n) ⊂ Pⁿ` under `SO_{n+1}` (needs `n ≥ 4` so the group is simple).
    pub fn quadric(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::Domain(format!(
                "quadric Q({n}): SO_{} is not simple; need n >= 4",
                n + 1
            )));
        }
        let group = if n.is_multiple_of(2) {
            RootSystem::new(CartanType::B, n / 2)?
        } else {
            RootSystem::new(CartanType::D, n.div_ceil(2))?
        };
        let rank = group.rank();
        Ok(FlagData {
            name: format!("Q{n}"),
            pic: vec![Weight::fundamental(rank, 0)],
            group,
            model: Some(GradedModel::Quadric(n)),
        })
    }
}

/// Identifies a catalog entry.
#[derive(Clone, Debug, PartialEq)]
pub enum EntryId {
    Case9B(usize),
    Case9C(usize),
    Case15,
    P1xP1,
    Flag(FlagData),
}

impl EntryId {
    pub fn family(&self) -> &'static str {
        match self {
            EntryId::Case9B(_) => "9B",
            EntryId::Case9C(_) => "9C",
            EntryId::Case15 => "15",
            EntryId::P1xP1 => "P1xP1",
            EntryId::Flag(_) => "flag",
        }
    }

    /// Looks up a family by name; `n` is required for `9B`/`9C` and ignored otherwise.
    pub fn from_family(family: &str, n: Option<usize>) -> Result<Self> {
        let need_n = || n.ok_or_else(|| Error::Lookup(format!("family {family} needs n")));
        match family.trim().to_ascii_uppercase().as_str() {
            "9B" => Ok(EntryId::Case9B(need_n()?)),
            "9C" => Ok(EntryId::Case9C(need_n()?)),
            "15" => Ok(EntryId::Case15),
            "P1XP1" => Ok(EntryId::P1xP1),
            "FLAG" => Err(Error::Lookup(
                "flag-type entries need user data (group and pic generators)".into(),
            )),
            _ => Err(Error::Lookup(format!("unknown family {family:?}"))),
        }
    }
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryId::Case9B(n) => write!(f, "9B(n={n})"),
            EntryId::Case9C(n) => write!(f, "9C(n={n})"),
            EntryId::Case15 => write!(f, "15"),
            EntryId::P1xP1 => write!(f, "P1xP1"),
            EntryId::Flag(d) => write!(f, "flag:{}", d.name),
        }
    }
}

/// An irreducible rank-one wonderful variety.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: EntryId,
    pub group: RootSystem,
    /// Spherical root; absent for `P1xP1` and flag-type entries.
    pub gamma: Option<Weight>,
    /// The `λ_i` with `L_{λ_i} ≅ O(D̄_i)`.
    pub pic_generators: Vec<Weight>,
    pub treatment: Treatment,
}

/// Families listed by `catalog` without arguments.
pub const BUILTIN_FAMILIES: [&str; 4] = ["9B", "9C", "15", "P1xP1"];

pub fn get_entry(id: &EntryId) -> Result<CatalogEntry> {
    let entry = match id {
        EntryId::Case9B(n) | EntryId::Case9C(n) => {
            if *n < 2 {
                return Err(Error::Domain(format!(
                    "family {} needs n >= 2, got {n}",
                    id.family()
                )));
            }
            let (kind, idx) = match id {
                EntryId::Case9B(_) => (CartanType::B, 0),
                _ => (CartanType::C, 1),
            };
            let group = RootSystem::new(kind, *n)?;
            let omega = Weight::fundamental(*n, idx);
            CatalogEntry {
                id: id.clone(),
                group,
                gamma: Some(omega.clone()),
                pic_generators: vec![omega],
                treatment: Treatment::IntervalSplitting,
            }
        }
        EntryId::Case15 => CatalogEntry {
            id: id.clone(),
            group: RootSystem::new(CartanType::G, 2)?,
            gamma: Some(Weight::from([-1, 1])),
            pic_generators: vec![Weight::from([1, 0]), Weight::from([0, 1])],
            treatment: Treatment::IntervalSplitting,
        },
        EntryId::P1xP1 => CatalogEntry {
            id: id.clone(),
            group: RootSystem::new(CartanType::A, 1)?,
            gamma: None,
            pic_generators: vec![Weight::from([1]), Weight::from([1])],
            treatment: Treatment::P1xP1Special,
        },
        EntryId::Flag(data) => CatalogEntry {
            id: id.clone(),
            group: data.group.clone(),
            gamma: None,
            pic_generators: data.pic.clone(),
            treatment: Treatment::BorelWeil,
        },
    };
    entry.validate()?;
    Ok(entry)
}

impl CatalogEntry {
    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn picard_rank(&self) -> usize {
        self.pic_generators.len()
    }

    /// The explicit coordinate ring of a flag-type entry, if one was given.
    pub fn flag_model(&self) -> Option<GradedModel> {
        match &self.id {
            EntryId::Flag(data) => data.model,
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        let rank = self.group.rank();
        for g in &self.pic_generators {
            g.check_rank(rank)?;
            if !g.is_nonnegative() || g.is_zero() {
                return Err(Error::Structural(format!(
                    "{}: pic generator {g} is not a nonzero dominant weight",
                    self.id
                )));
            }
        }
        if self.pic_generators.is_empty() {
            return Err(Error::Structural(format!("{}: no pic generators", self.id)));
        }
        // P1xP1 has two divisor classes of the same weight; everything else is independent.
        if self.treatment != Treatment::P1xP1Special {
            let rows: Vec<Vec<i64>> = self
                .pic_generators
                .iter()
                .map(|g| g.coords().to_vec())
                .collect();
            if linalg::bareiss_rank(&rows) != rows.len() {
                return Err(Error::Structural(format!(
                    "{}: pic generators are linearly dependent",
                    self.id
                )));
            }
        }
        if let Some(gamma) = &self.gamma {
            gamma.check_rank(rank)?;
            let positive: Vec<i64> = gamma.coords().iter().copied().filter(|&c| c > 0).collect();
            if positive.is_empty() {
                return Err(Error::Structural(format!(
                    "{}: γ = {gamma} pairs positively with no simple coroot",
                    self.id
                )));
            }
            if self.treatment == Treatment::IntervalSplitting && positive != [1] {
                return Err(Error::Structural(format!(
                    "{}: γ = {gamma} must pair positively with exactly one simple coroot, with value 1",
                    self.id
                )));
            }
        }
        Ok(())
    }

    fn distinct_generators(&self) -> Vec<Vec<i64>> {
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for g in &self.pic_generators {
            if !gens.iter().any(|h| h.as_slice() == g.coords()) {
                gens.push(g.coords().to_vec());
            }
        }
        gens
    }

    /// Whether `w` lies in the nonnegative integer span of the pic generators.
    pub fn pic_plus_contains(&self, w: &Weight) -> bool {
        w.rank() == self.rank()
            && linalg::nonnegative_integer_coefficients(&self.distinct_generators(), w.coords())
                .is_some()
    }

    /// Coefficients of `w` over the pic generators, for entries whose generators
    /// are independent.
    pub fn pic_coefficients(&self, w: &Weight) -> Option<Vec<i64>> {
        if self.treatment == Treatment::P1xP1Special || w.rank() != self.rank() {
            return None;
        }
        let gens: Vec<Vec<i64>> = self
            .pic_generators
            .iter()
            .map(|g| g.coords().to_vec())
            .collect();
        linalg::nonnegative_integer_coefficients(&gens, w.coords())
    }
}
