//! Explicit graded coordinate rings (`Pⁿ`, `P¹×P¹`, quadrics `Q(n)`) used as
//! brute-force oracles for the surjectivity of multiplication maps.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// A graded ring with an explicit monomial basis in each degree.
///
/// Serialized as `{"kind": "projective-space", "n": 2}`, `{"kind": "p1xp1"}` or
/// `{"kind": "quadric", "n": 4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ModelDoc", into = "ModelDoc")]
pub enum GradedModel {
    /// `k[x₀, …, xₙ]`.
    ProjectiveSpace(usize),
    /// `k[X₀, X₁] ⊗ k[Y₀, Y₁]`, bigraded.
    P1xP1,
    /// `k[x₀, …, xₙ] / (x₀² − x₁² − … − xₙ²)`.
    Quadric(usize),
}

#[derive(Serialize, Deserialize)]
struct ModelDoc {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
}

impl From<GradedModel> for ModelDoc {
    fn from(m: GradedModel) -> Self {
        match m {
            GradedModel::ProjectiveSpace(n) => ModelDoc {
                kind: "projective-space".into(),
                n: Some(n),
            },
            GradedModel::P1xP1 => ModelDoc {
                kind: "p1xp1".into(),
                n: None,
            },
            GradedModel::Quadric(n) => ModelDoc {
                kind: "quadric".into(),
                n: Some(n),
            },
        }
    }
}

impl TryFrom<ModelDoc> for GradedModel {
    type Error = Error;

    fn try_from(doc: ModelDoc) -> Result<Self> {
        let need_n = || {
            doc.n
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Config(format!("model {:?} needs n >= 1", doc.kind)))
        };
        match doc.kind.to_ascii_lowercase().as_str() {
            "projective-space" | "projective" | "pn" => Ok(GradedModel::ProjectiveSpace(need_n()?)),
            "quadric" | "q" => Ok(GradedModel::Quadric(need_n()?)),
            "p1xp1" => Ok(GradedModel::P1xP1),
            other => Err(Error::Config(format!("unknown model kind {other:?}"))),
        }
    }
}

/// A degree: a single integer, or a bidegree for `P¹×P¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Single(u32),
    Bi(u32, u32),
}

impl From<u32> for Degree {
    fn from(d: u32) -> Self {
        Degree::Single(d)
    }
}

impl From<(u32, u32)> for Degree {
    fn from((a, b): (u32, u32)) -> Self {
        Degree::Bi(a, b)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Single(d) => write!(f, "{d}"),
            Degree::Bi(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl std::ops::Add for Degree {
    type Output = Option<Degree>;
    fn add(self, rhs: Degree) -> Option<Degree> {
        match (self, rhs) {
            (Degree::Single(a), Degree::Single(b)) => Some(Degree::Single(a + b)),
            (Degree::Bi(a, b), Degree::Bi(c, d)) => Some(Degree::Bi(a + c, b + d)),
            _ => None,
        }
    }
}

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// All exponent vectors of length `nvars` and total degree `degree`, lex-descending.
pub fn monomials(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, degree: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(prefix, left - 1, degree - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, degree, &mut out);
    out
}

fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Sparse integer polynomial.
type Poly = BTreeMap<Monomial, i64>;

/// Integer matrix of a multiplication map, rows indexed by the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

/// Outcome of an exact-rank surjectivity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub model: GradedModel,
    pub d: Degree,
    pub d2: Degree,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub target_dim: usize,
    pub surjective: bool,
}

/// Parses `P<n>`, `Q<n>` or `P1xP1` (case-insensitive).
impl FromStr for GradedModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        if t == "P1XP1" {
            return Ok(GradedModel::P1xP1);
        }
        let bad = || Error::Lookup(format!("unknown model {s:?}; expected P<n>, Q<n> or P1xP1"));
        let (head, n) = t.split_at(t.len().min(1));
        let n: usize = n.parse().map_err(|_| bad())?;
        match head {
            "P" if n >= 1 => Ok(GradedModel::ProjectiveSpace(n)),
            "Q" if n >= 1 => Ok(GradedModel::Quadric(n)),
            _ => Err(bad()),
        }
    }
}

/// Parses `d` or `d1,d2`.
impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("bad degree {s:?}"));
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match parts[..] {
            [d] => Ok(Degree::Single(d)),
            [a, b] => Ok(Degree::Bi(a, b)),
            _ => Err(bad()),
        }
    }
}

impl GradedModel {
    pub fn name(&self) -> String {
        match self {
            GradedModel::ProjectiveSpace(n) => format!("P{n}"),
            GradedModel::P1xP1 => "P1xP1".to_string(),
            GradedModel::Quadric(n) => format!("Q{n}"),
        }
    }

    fn check_degree(&self, d: Degree) -> Result<()> {
        match (self, d) {
            (GradedModel::P1xP1, Degree::Bi(..)) => Ok(()),
            (GradedModel::P1xP1, Degree::Single(_)) => Err(Error::Domain(
                "P1xP1 is bigraded; use a bidegree".to_string(),
            )),
            (_, Degree::Single(_)) => Ok(()),
            (_, Degree::Bi(..)) => Err(Error::Domain(format!(
                "{} is singly graded; got bidegree {d}",
                self.name()
            ))),
        }
    }

    /// Ordered monomial basis of the degree-`d` piece.
    ///
    /// Quadric basis monomials have `x₀`-exponent at most one.
    pub fn basis(&self, d: Degree) -> Result<Vec<Monomial>> {
        self.check_degree(d)?;
        Ok(match (*self, d) {
            (GradedModel::ProjectiveSpace(n), Degree::Single(k)) => monomials(n + 1, k),
            (GradedModel::Quadric(n), Degree::Single(k)) => monomials(n + 1, k)
                .into_iter()
                .filter(|m| m[0] <= 1)
                .collect(),
            (GradedModel::P1xP1, Degree::Bi(a, b)) => {
                let xs = monomials(2, a);
                let ys = monomials(2, b);
                xs.iter()
                    .flat_map(|x| {
                        ys.iter()
                            .map(move |y| [x.as_slice(), y.as_slice()].concat())
                    })
                    .collect()
            }
            _ => unreachable!("degree checked above"),
        })
    }

    /// Closed-form dimension of the degree-`d` piece.
    pub fn dim_formula(&self, d: Degree) -> Result<u64> {
        self.check_degree(d)?;
        Ok(match (*self, d) {
            (GradedModel::ProjectiveSpace(n), Degree::Single(k)) => {
                binomial(n as i64 + k as i64, k as i64)
            }
            (GradedModel::Quadric(n), Degree::Single(k)) => {
                let (n, k) = (n as i64, k as i64);
                binomial(n + k, k) - binomial(n + k - 2, k - 2)
            }
            (GradedModel::P1xP1, Degree::Bi(a, b)) => (a as u64 + 1) * (b as u64 + 1),
            _ => unreachable!("degree checked above"),
        })
    }

    /// Rewrites `x₀² → x₁² + … + xₙ²` until every term has `x₀`-exponent ≤ 1.
    pub fn normal_form(&self, poly: &BTreeMap<Monomial, i64>) -> BTreeMap<Monomial, i64> {
        let GradedModel::Quadric(n) = *self else {
            return poly
                .iter()
                .filter(|(_, &c)| c != 0)
                .map(|(m, &c)| (m.clone(), c))
                .collect();
        };
        let mut pending: Vec<(Monomial, i64)> = poly.iter().map(|(m, &c)| (m.clone(), c)).collect();
        let mut out: Poly = BTreeMap::new();
        while let Some((m, c)) = pending.pop() {
            if c == 0 {
                continue;
            }
            if m[0] <= 1 {
                *out.entry(m).or_insert(0) += c;
                continue;
            }
            for i in 1..=n {
                let mut r = m.clone();
                r[0] -= 2;
                r[i] += 2;
                pending.push((r, c));
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Matrix of `basis(d) ⊗ basis(d2) → basis(d + d2)`; column `i·|basis(d2)| + j`
    /// is the normal form of `basis(d)[i] · basis(d2)[j]`.
    pub fn multiplication_matrix(&self, d: Degree, d2: Degree) -> Result<MultiplicationMatrix> {
        let target_degree =
            (d + d2).ok_or_else(|| Error::Domain(format!("cannot add degrees {d} and {d2}")))?;
        let left = self.basis(d)?;
        let right = self.basis(d2)?;
        let target = self.basis(target_degree)?;
        let index: HashMap<&Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let cols = left.len() * right.len();
        let mut entries = vec![vec![0i64; cols]; target.len()];
        for (i, a) in left.iter().enumerate() {
            for (j, b) in right.iter().enumerate() {
                let product: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let col = i * right.len() + j;
                let nf = self.normal_form(&BTreeMap::from([(product, 1)]));
                for (m, c) in nf {
                    let row = index.get(&m).copied().ok_or_else(|| {
                        Error::Structural(format!("monomial {m:?} outside the target basis"))
                    })?;
                    entries[row][col] += c;
                }
            }
        }
        Ok(MultiplicationMatrix {
            rows: target.len(),
            cols,
            entries,
        })
    }

    /// Whether multiplication in degrees `d ⊗ d2` is onto, by exact rank.
    pub fn oracle_surjective(&self, d: Degree, d2: Degree) -> Result<OracleResult> {
        let m = self.multiplication_matrix(d, d2)?;
        let rank = linalg::bareiss_rank(&m.entries);
        Ok(OracleResult {
            model: *self,
            d,
            d2,
            rows: m.rows,
            cols: m.cols,
            rank,
            target_dim: m.rows,
            surjective: rank == m.rows,
        })
    }
}
