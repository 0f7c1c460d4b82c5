use std::path::PathBuf;
use std::process::ExitCode;

use serde_json::json;
use wonderful_core::catalog::BUILTIN_FAMILIES;
use wonderful_core::{
    check_surjectivity, decompose as decompose_sections, get_entry, run_sweep, CatalogEntry,
    Degree, EntryId, Error, GradedModel, OracleResult, Result, SweepConfig, VarietyDoc, Weight,
    WonderfulVariety,
};

use crate::VarietyArgs;

fn code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn parse_weight(s: &str) -> Result<Weight> {
    s.parse()
}

fn parse_doc(text: &str) -> Result<VarietyDoc> {
    let text = match text.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{path}: {e}")))?
        }
        None => text.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Error::Config(format!("variety description: {e}")))
}

fn variety_from(args: &VarietyArgs) -> Result<WonderfulVariety> {
    let doc = match (&args.variety, &args.family) {
        (Some(text), _) => parse_doc(text)?,
        (None, Some(f)) => VarietyDoc::family(f, args.n),
        (None, None) => {
            return Err(Error::Config("pass --family or --variety".into()));
        }
    };
    doc.build()
}

fn realization(id: &EntryId) -> String {
    match id {
        EntryId::Case9B(n) => format!("Spin({})", 2 * n + 1),
        EntryId::Case9C(n) => format!("Sp({})", 2 * n),
        EntryId::Case15 => "G2".into(),
        EntryId::P1xP1 => "SL(2)".into(),
        EntryId::Flag(d) => d.group.to_string(),
    }
}

fn entry_json(e: &CatalogEntry) -> serde_json::Value {
    json!({
        "id": e.id.to_string(),
        "family": e.id.family(),
        "group": e.group,
        "realization": realization(&e.id),
        "gamma": e.gamma,
        "pic_generators": e.pic_generators,
        "treatment": e.treatment.as_str(),
        "positive_roots": e.group.kind().positive_root_count(e.group.rank()),
    })
}

fn show_weights(ws: &[Weight]) -> String {
    ws.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn catalog(family: Option<&str>, n: Option<usize>, as_json: bool) -> Result<ExitCode> {
    if let Some(f) = family {
        let e = get_entry(&EntryId::from_family(f, n)?)?;
        if as_json {
            println!("{}", serde_json::to_string_pretty(&entry_json(&e)).unwrap());
        } else {
            println!("entry        {}", e.id);
            println!("group        {} ({})", e.group, realization(&e.id));
            println!(
                "gamma        {}",
                e.gamma
                    .as_ref()
                    .map_or("none".to_string(), |g| g.to_string())
            );
            println!("pic+         {}", show_weights(&e.pic_generators));
            println!("treatment    {}", e.treatment);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let n = n.unwrap_or(2);
    let entries = BUILTIN_FAMILIES
        .iter()
        .map(|f| get_entry(&EntryId::from_family(f, Some(n))?))
        .collect::<Result<Vec<_>>>()?;
    if as_json {
        let all: Vec<_> = entries.iter().map(entry_json).collect();
        println!("{}", serde_json::to_string_pretty(&all).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "{:<8} {:<6} {:<11} {:<10} {:<14} treatment",
        "family", "group", "realization", "gamma", "pic+"
    );
    for e in &entries {
        println!(
            "{:<8} {:<6} {:<11} {:<10} {:<14} {}",
            e.id.family(),
            e.group.to_string(),
            realization(&e.id),
            e.gamma.as_ref().map_or("-".to_string(), |g| g.to_string()),
            show_weights(&e.pic_generators),
            e.treatment
        );
    }
    println!("(9B and 9C shown at n = {n}; pass --n to change)");
    Ok(ExitCode::SUCCESS)
}

pub fn decompose(args: &VarietyArgs, lambda: &str, as_json: bool) -> Result<ExitCode> {
    let x = variety_from(args)?;
    let d = decompose_sections(&x, &parse_weight(lambda)?)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&d).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    println!("sections of L{} on {x}", d.lambda);
    println!("{:>4}  {:<16} {:>12}", "m", "head", "dim");
    for s in &d.summands {
        println!("{:>4}  {:<16} {:>12}", s.m, s.head.to_string(), s.dim);
    }
    println!("total {:>29}", d.total_dim);
    Ok(ExitCode::SUCCESS)
}

pub struct VerifyOptions {
    pub config: Option<PathBuf>,
    pub family: Option<String>,
    pub n: Option<String>,
    pub variety: Option<String>,
    pub pair: Option<(String, String)>,
    pub max_coeff: Option<i64>,
    pub with_oracle: bool,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
}

/// `3`, `2,4` or `2..6` (inclusive).
fn parse_n_values(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Config(format!("bad --n value {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

fn docs_from(opts: &VerifyOptions) -> Result<Vec<VarietyDoc>> {
    match (&opts.variety, &opts.family) {
        (Some(text), _) => Ok(vec![parse_doc(text)?]),
        (None, Some(f)) => match &opts.n {
            Some(spec) => Ok(parse_n_values(spec)?
                .into_iter()
                .map(|n| VarietyDoc::family(f, Some(n)))
                .collect()),
            None => Ok(vec![VarietyDoc::family(f, None)]),
        },
        (None, None) => Err(Error::Config("pass --config, --family or --variety".into())),
    }
}

pub fn verify(opts: VerifyOptions) -> Result<ExitCode> {
    if let Some((lambda, mu)) = &opts.pair {
        let docs = docs_from(&opts)?;
        let [doc] = &docs[..] else {
            return Err(Error::Config(
                "--lambda/--mu need exactly one variety".into(),
            ));
        };
        let x = doc.build()?;
        let cert = check_surjectivity(&x, &parse_weight(lambda)?, &parse_weight(mu)?)?;
        println!("{}", serde_json::to_string_pretty(&cert).unwrap());
        return Ok(code(cert.is_surjective()));
    }

    let mut config = match &opts.config {
        Some(path) => SweepConfig::load(path)?,
        None => SweepConfig::new(docs_from(&opts)?, 4),
    };
    if let Some(m) = opts.max_coeff {
        config.max_coeff = m;
    }
    if opts.with_oracle {
        config.with_oracle = true;
    }
    if opts.jobs.is_some() {
        config.parallelism = opts.jobs;
    }
    if opts.out.is_some() {
        config.output = opts.out.clone();
    }

    let report = run_sweep(&config)?;
    match &config.output {
        Some(path) => report.write(path)?,
        None => print!("{}", report.to_json()),
    }
    let s = &report.summary;
    eprintln!(
        "{} varieties, {} pairs: {} surjective, {} failed, {} errors",
        s.varieties, s.pairs, s.surjective, s.failed, s.errors
    );
    if config.with_oracle {
        eprintln!(
            "oracle: {} checks, {} disagreements",
            s.oracle_checks, s.oracle_disagreements
        );
    }
    Ok(code(report.is_clean()))
}

/// Degrees swept when `oracle` runs without `--d`.
fn default_grid(model: GradedModel) -> Vec<(Degree, Degree)> {
    match model {
        GradedModel::P1xP1 => {
            let b: Vec<Degree> = (0..=4)
                .flat_map(|a| (0..=4).map(move |c| Degree::Bi(a, c)))
                .collect();
            b.iter()
                .flat_map(|&d| b.iter().map(move |&e| (d, e)))
                .collect()
        }
        GradedModel::ProjectiveSpace(_) | GradedModel::Quadric(_) => {
            let top = if matches!(model, GradedModel::Quadric(_)) {
                3
            } else {
                4
            };
            (0..=top)
                .flat_map(|d| (0..=top).map(move |e| (Degree::Single(d), Degree::Single(e))))
                .collect()
        }
    }
}

fn default_models() -> Vec<GradedModel> {
    let mut out: Vec<_> = (1..=3).map(GradedModel::ProjectiveSpace).collect();
    out.push(GradedModel::P1xP1);
    out.extend((1..=5).map(GradedModel::Quadric));
    out
}

pub fn oracle(
    model: Option<&str>,
    n: Option<usize>,
    degrees: Option<(String, String)>,
    as_json: bool,
) -> Result<ExitCode> {
    let models = match model {
        Some(m) => {
            let name = match n {
                Some(n) => format!("{}{n}", m.trim_end_matches(|c: char| c.is_ascii_digit())),
                None => m.to_string(),
            };
            vec![name.parse::<GradedModel>()?]
        }
        None => default_models(),
    };
    let mut results: Vec<OracleResult> = Vec::new();
    for m in models {
        let grid = match &degrees {
            Some((d, d2)) => vec![(d.parse()?, d2.parse()?)],
            None => default_grid(m),
        };
        for (d, d2) in grid {
            results.push(m.oracle_surjective(d, d2)?);
        }
    }
    let all = results.iter().all(|r| r.surjective);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&results).unwrap());
    } else {
        println!(
            "{:<7} {:>6} {:>6} {:>6} {:>7} {:>6}  surjective",
            "model", "d", "d2", "rows", "cols", "rank"
        );
        for r in &results {
            println!(
                "{:<7} {:>6} {:>6} {:>6} {:>7} {:>6}  {}",
                r.model.name(),
                r.d.to_string(),
                r.d2.to_string(),
                r.rows,
                r.cols,
                r.rank,
                if r.surjective { "yes" } else { "no" }
            );
        }
    }
    Ok(code(all))
}
