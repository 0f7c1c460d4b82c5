//! Batch verification over `(variety, λ, μ)` pairs.
//!
//! Pairs are evaluated on a rayon pool and merged in a fixed order, so a report
//! is byte-identical across runs for the same configuration.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::Treatment;
use crate::describe::VarietyDoc;
use crate::error::{Error, Result};
use crate::models::{Degree, GradedModel, OracleResult};
use crate::multiply::SurjectivityCertificate;
use crate::multiply::{check_reduction, check_surjectivity, check_surjectivity_classes};
use crate::rootsys::Weight;
use crate::wonderful::{PicClass, WonderfulVariety};

pub const SCHEMA_VERSION: u32 = 1;

/// Sweeps larger than this are rejected before any work is done.
pub const MAX_PAIRS: usize = 5_000_000;

fn default_oracle_degree() -> u32 {
    4
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub varieties: Vec<VarietyDoc>,
    /// Cap on every fundamental coordinate of `λ` and `μ`.
    pub max_coeff: i64,
    /// Worker count; `None` uses rayon's default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallelism: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub with_oracle: bool,
    /// Oracle runs are skipped when any degree exceeds this.
    #[serde(default = "default_oracle_degree")]
    pub oracle_max_degree: u32,
}

impl SweepConfig {
    pub fn new(varieties: Vec<VarietyDoc>, max_coeff: i64) -> Self {
        SweepConfig {
            varieties,
            max_coeff,
            parallelism: None,
            output: None,
            with_oracle: false,
            oracle_max_degree: default_oracle_degree(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: SweepConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.varieties.is_empty() {
            return Err(Error::Config("varieties must be nonempty".into()));
        }
        if self.max_coeff < 0 {
            return Err(Error::Config(format!(
                "max_coeff must be >= 0, got {}",
                self.max_coeff
            )));
        }
        if self.parallelism == Some(0) {
            return Err(Error::Config("parallelism must be >= 1".into()));
        }
        Ok(())
    }
}

/// One line of a report: a certificate, or the error raised for that pair.
#[derive(Clone, Debug, Serialize)]
pub struct ResultRecord {
    pub variety: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_class: Option<PicClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_class: Option<PicClass>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SurjectivityCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub varieties: usize,
    pub pairs: usize,
    pub surjective: usize,
    pub failed: usize,
    pub errors: usize,
    pub by_verdict: BTreeMap<String, usize>,
    pub oracle_checks: usize,
    pub oracle_disagreements: usize,
    pub reduction_checks: usize,
    pub reduction_failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub results: Vec<ResultRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
    pub summary: Summary,
}

impl Report {
    /// Zero failed verdicts and zero errors.
    pub fn is_clean(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

/// A point of `pic⁺(X)`, with its class when weights do not determine it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Label {
    pub weight: Weight,
    pub class: Option<PicClass>,
}

/// Every `λ ∈ pic⁺(X)` with all coordinates `≤ max_coeff`, in lexicographic order.
///
/// On inductions of `P¹×P¹` every class over such a weight is listed.
pub fn labels(x: &WonderfulVariety, max_coeff: i64) -> Vec<Label> {
    let basis = x.pic_basis();
    let keep_class = x.treatment() == Treatment::P1xP1Special;
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; basis.len()];
    // Basis weights are nonnegative and nonzero, so each coefficient is at most the cap.
    loop {
        let class = PicClass::new(coeffs.clone());
        let weight = x.class_to_weight(&class).expect("class has basis length");
        if weight.coords().iter().all(|&c| c <= max_coeff) {
            out.push(Label {
                weight,
                class: keep_class.then_some(class),
            });
        }
        let mut i = 0;
        while i < coeffs.len() && coeffs[i] == max_coeff {
            coeffs[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
        coeffs[i] += 1;
    }
    out.sort();
    out.dedup();
    out
}

struct Job<'a> {
    variety: usize,
    x: &'a WonderfulVariety,
    lambda: &'a Label,
    mu: &'a Label,
}

fn oracle_for(
    x: &WonderfulVariety,
    lambda: &Label,
    mu: &Label,
    cap: u32,
) -> Result<Option<OracleResult>> {
    let fits = |d: i64| d >= 0 && d as u64 <= cap as u64;
    match x.treatment() {
        Treatment::P1xP1Special => {
            let (Some(lc), Some(mc)) = (&lambda.class, &mu.class) else {
                return Ok(None);
            };
            let deg = |c: &PicClass| {
                let n = c.coeffs.len();
                (c.coeffs[n - 2], c.coeffs[n - 1])
            };
            let ((k1, k2), (l1, l2)) = (deg(lc), deg(mc));
            if ![k1, k2, l1, l2].into_iter().all(fits) {
                return Ok(None);
            }
            let d = Degree::Bi(k1 as u32, k2 as u32);
            let d2 = Degree::Bi(l1 as u32, l2 as u32);
            GradedModel::P1xP1.oracle_surjective(d, d2).map(Some)
        }
        Treatment::BorelWeil if x.is_irreducible() => {
            let fiber = x.fiber();
            let Some(model) = fiber.flag_model() else {
                return Ok(None);
            };
            let rs = x.ambient();
            let degree = |w: &Weight| -> Result<Option<i64>> {
                let star = rs.weight_star(w)?;
                Ok(fiber
                    .pic_coefficients(&star)
                    .filter(|c| c.len() == 1)
                    .map(|c| c[0]))
            };
            let (Some(d), Some(d2)) = (degree(&lambda.weight)?, degree(&mu.weight)?) else {
                return Ok(None);
            };
            if !fits(d) || !fits(d2) {
                return Ok(None);
            }
            let result =
                model.oracle_surjective(Degree::Single(d as u32), Degree::Single(d2 as u32))?;
            let expected = rs.weyl_dim(&rs.weight_star(&(&lambda.weight + &mu.weight))?)?;
            if num_bigint::BigUint::from(result.target_dim) != expected {
                return Err(Error::Structural(format!(
                    "{} in degree {} has dimension {}, but the module has dimension {expected}",
                    model.name(),
                    d + d2,
                    result.target_dim
                )));
            }
            Ok(Some(result))
        }
        _ => Ok(None),
    }
}

fn run_job(job: &Job<'_>, config: &SweepConfig) -> ResultRecord {
    let x = job.x;
    let mut record = ResultRecord {
        variety: x.label(),
        lambda_class: job.lambda.class.clone(),
        mu_class: job.mu.class.clone(),
        certificate: None,
        oracle: None,
        error: None,
    };
    let cert = match (&job.lambda.class, &job.mu.class) {
        (Some(lc), Some(mc)) => check_surjectivity_classes(x, lc, mc),
        _ => check_surjectivity(x, &job.lambda.weight, &job.mu.weight),
    };
    match cert {
        Ok(c) => record.certificate = Some(c),
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    }
    if config.with_oracle {
        match oracle_for(x, job.lambda, job.mu, config.oracle_max_degree) {
            Ok(o) => record.oracle = o,
            Err(e) => record.error = Some(e.to_string()),
        }
    }
    record
}

/// Builds every variety, enumerates pairs and checks them.
pub fn run_sweep(config: &SweepConfig) -> Result<Report> {
    config.validate()?;
    let varieties = config
        .varieties
        .iter()
        .map(VarietyDoc::build)
        .collect::<Result<Vec<_>>>()?;
    let label_sets: Vec<Vec<Label>> = varieties
        .iter()
        .map(|x| labels(x, config.max_coeff))
        .collect();

    let pairs: usize = label_sets.iter().map(|ls| ls.len() * ls.len()).sum();
    if pairs > MAX_PAIRS {
        return Err(Error::Config(format!(
            "{pairs} pairs exceed the limit of {MAX_PAIRS}; lower max_coeff"
        )));
    }
    let mut jobs = Vec::with_capacity(pairs);
    for (i, (x, ls)) in varieties.iter().zip(&label_sets).enumerate() {
        for lambda in ls {
            for mu in ls {
                jobs.push(Job {
                    variety: i,
                    x,
                    lambda,
                    mu,
                });
            }
        }
    }

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.parallelism {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;

    let (results, reductions) = pool.install(|| {
        let results: Vec<(usize, ResultRecord)> = jobs
            .par_iter()
            .map(|j| (j.variety, run_job(j, config)))
            .collect();
        let reductions: Vec<(String, Result<bool>)> = varieties
            .par_iter()
            .zip(&label_sets)
            .filter(|(x, _)| !x.is_irreducible() && x.treatment() == Treatment::IntervalSplitting)
            .flat_map_iter(|(x, ls)| {
                ls.iter().map(move |l| {
                    let r = check_reduction(x, &l.weight).map(|r| r.holds);
                    (format!("{x} at {}", l.weight), r)
                })
            })
            .collect();
        (results, reductions)
    });

    let mut summary = Summary {
        varieties: varieties.len(),
        pairs: results.len(),
        ..Summary::default()
    };
    let mut errors = Vec::new();
    let mut records = Vec::with_capacity(results.len());
    for (_, record) in results {
        if let Some(cert) = &record.certificate {
            *summary
                .by_verdict
                .entry(cert.verdict.as_str().to_string())
                .or_default() += 1;
            if cert.is_surjective() {
                summary.surjective += 1;
            } else {
                summary.failed += 1;
            }
            if let Some(o) = &record.oracle {
                summary.oracle_checks += 1;
                if o.surjective != cert.is_surjective() {
                    summary.oracle_disagreements += 1;
                    summary.errors += 1;
                }
            }
        }
        if record.error.is_some() {
            summary.errors += 1;
        }
        records.push(record);
    }
    for (what, outcome) in reductions {
        summary.reduction_checks += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => {
                summary.reduction_failures += 1;
                summary.errors += 1;
                errors.push(format!("reduction identities fail for {what}"));
            }
            Err(e) => {
                summary.reduction_failures += 1;
                summary.errors += 1;
                errors.push(format!("reduction check for {what}: {e}"));
            }
        }
    }
    Ok(Report {
        schema: SCHEMA_VERSION,
        results: records,
        errors,
        summary,
    })
}
