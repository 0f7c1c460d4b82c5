//! Executable combinatorics for multiplication maps of sections on rank-one
//! wonderful varieties.
//!
//! The crate models root systems and dominant weights ([`rootsys`]), the
//! irreducible rank-one wonderful varieties ([`catalog`]), their parabolic
//! inductions ([`wonderful`]), the decomposition of section modules into
//! irreducibles ([`sections`]) and a falsifiable checker for surjectivity of the
//! multiplication map `Γ(L) ⊗ Γ(L′) → Γ(L ⊗ L′)` ([`multiply`]). Explicit
//! coordinate rings in [`models`] serve as exact-rank oracles. [`describe`]
//! parses JSON variety descriptions and [`sweep`] drives batch verification
//! with JSON reports.

pub mod catalog;
pub mod describe;
pub mod error;
pub mod linalg;
pub mod models;
pub mod multiply;
pub mod rootsys;
pub mod sections;
pub mod sweep;
pub mod wonderful;

pub use catalog::{get_entry, CatalogEntry, EntryId, FlagData, Treatment};
pub use describe::{FamilyDoc, InductionDoc, VarietyDoc};
pub use error::{Error, Result};
pub use models::{Degree, GradedModel, OracleResult};
pub use multiply::{
    check_reduction, check_surjectivity, check_surjectivity_classes, split, ReductionReport,
    SurjectivityCertificate, Verdict, Witness,
};
pub use rootsys::{CartanType, RootSystem, Weight};
pub use sections::{decompose, dim_sections_p1xp1, m_bound, SectionDecomposition};
pub use sweep::{run_sweep, Report, SweepConfig};
pub use wonderful::{make_induced, PicClass, WonderfulVariety};
