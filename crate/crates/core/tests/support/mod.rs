//! Reference computations used by the integration tests.
//!
//! Nothing here calls into the algorithms under test: Cartan matrices are read
//! from Dynkin data written out again below, roots come from Weyl orbits of
//! the simple roots, and dimensions come from Freudenthal's multiplicity
//! formula summed over Weyl orbits.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use wonderful_core::{
    make_induced, CartanType, EntryId, GradedModel, RootSystem, VarietyDoc, WonderfulVariety,
};

pub type Vector = Vec<i64>;

/// Bourbaki Cartan matrix, `c[i][j] = ⟨α_j, α_i∨⟩`, from the Dynkin diagram.
pub fn cartan(kind: char, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind {
        'A' | 'B' | 'C' => (1..n).for_each(|i| link(i - 1, i)),
        'D' => {
            (1..n - 1).for_each(|i| link(i - 1, i));
            link(n - 3, n - 1);
        }
        'E' => {
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2);
            (3..n).for_each(|i| link(i - 1, i));
            link(1, 3);
        }
        'F' => (1..4).for_each(|i| link(i - 1, i)),
        'G' => link(0, 1),
        _ => panic!("unknown type {kind}"),
    }
    match kind {
        'B' => c[n - 1][n - 2] = -2,
        'C' => c[n - 2][n - 1] = -2,
        'F' => c[2][1] = -2,
        'G' => c[0][1] = -3,
        _ => {}
    }
    c
}

pub fn cartan_type(kind: char) -> CartanType {
    kind.to_string().parse().unwrap()
}

pub fn library(kind: char, n: usize) -> RootSystem {
    RootSystem::new(cartan_type(kind), n).unwrap()
}

/// Classical and exceptional ranks covered by the randomized suites.
pub fn small_types() -> Vec<(char, usize)> {
    let mut out = Vec::new();
    out.extend((1..=5).map(|n| ('A', n)));
    out.extend((2..=5).map(|n| ('B', n)));
    out.extend((2..=5).map(|n| ('C', n)));
    out.extend((3..=5).map(|n| ('D', n)));
    out.push(('G', 2));
    out
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Everything the oracles need about one root system.
pub struct Reference {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`, normalised so the first entry is 1.
    pub half_norms: Vec<BigRational>,
    /// Inverse Cartan matrix, turning fundamental coordinates into root coordinates.
    pub inverse: Vec<Vec<BigRational>>,
    /// Positive roots in fundamental coordinates.
    pub positive_roots: Vec<Vector>,
}

impl Reference {
    pub fn new(kind: char, n: usize) -> Self {
        let cartan = cartan(kind, n);
        let half_norms = symmetrizer(&cartan);
        let inverse = invert(&cartan);
        let mut r = Reference {
            rank: n,
            cartan,
            half_norms,
            inverse,
            positive_roots: Vec::new(),
        };
        r.positive_roots = r.roots_by_orbit();
        r
    }

    pub fn simple_root(&self, j: usize) -> Vector {
        (0..self.rank).map(|i| self.cartan[i][j]).collect()
    }

    pub fn reflect(&self, i: usize, w: &[i64]) -> Vector {
        let a = self.simple_root(i);
        w.iter().zip(&a).map(|(x, y)| x - w[i] * y).collect()
    }

    pub fn root_coords(&self, w: &[i64]) -> Vec<BigRational> {
        self.inverse
            .iter()
            .map(|row| row.iter().zip(w).map(|(a, &b)| a * q(b)).sum())
            .collect()
    }

    /// `(x, y)` for weights in fundamental coordinates.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> BigRational {
        // (x, α_j) = x_j · (α_j, α_j)/2
        self.root_coords(y)
            .iter()
            .enumerate()
            .map(|(j, c)| c * q(x[j]) * &self.half_norms[j])
            .sum()
    }

    fn roots_by_orbit(&self) -> Vec<Vector> {
        let mut seen: BTreeSet<Vector> = (0..self.rank).map(|j| self.simple_root(j)).collect();
        let mut queue: VecDeque<Vector> = seen.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..self.rank {
                let s = self.reflect(i, &r);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        seen.into_iter()
            .filter(|r| self.root_coords(r).iter().all(|c| !c.is_negative()))
            .collect()
    }

    pub fn is_dominant(w: &[i64]) -> bool {
        w.iter().all(|&c| c >= 0)
    }

    /// The dominant weight in the Weyl orbit of `w`.
    pub fn dominant(&self, w: &[i64]) -> Vector {
        let mut w = w.to_vec();
        while let Some(i) = (0..self.rank).find(|&i| w[i] < 0) {
            w = self.reflect(i, &w);
        }
        w
    }

    /// `−w₀ λ`, extended linearly from `−w₀ ω_j = dominant(−ω_j)`.
    pub fn star(&self, w: &[i64]) -> Vector {
        let mut out = vec![0; self.rank];
        for (j, &c) in w.iter().enumerate() {
            let mut e = vec![0; self.rank];
            e[j] = -1;
            let image = self.dominant(&e);
            for (o, v) in out.iter_mut().zip(image) {
                *o += c * v;
            }
        }
        out
    }

    pub fn orbit_size(&self, w: &[i64]) -> usize {
        let mut seen = BTreeSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let s = self.reflect(i, &v);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        seen.len()
    }

    /// Dominant weights of `V(λ)`: closure of `{λ}` under subtracting positive
    /// roots while staying dominant.
    pub fn dominant_weights(&self, lambda: &[i64]) -> BTreeSet<Vector> {
        let mut seen = BTreeSet::from([lambda.to_vec()]);
        let mut queue = VecDeque::from([lambda.to_vec()]);
        while let Some(v) = queue.pop_front() {
            for a in &self.positive_roots {
                let w: Vector = v.iter().zip(a).map(|(x, y)| x - y).collect();
                if Self::is_dominant(&w) && seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Multiplicities of the dominant weights of `V(λ)` by Freudenthal's formula.
    pub fn multiplicities(&self, lambda: &[i64]) -> BTreeMap<Vector, BigRational> {
        let dominant = self.dominant_weights(lambda);
        let rho = vec![1i64; self.rank];
        let shift = |w: &[i64]| -> Vector { w.iter().zip(&rho).map(|(a, b)| a + b).collect() };
        let top = self.inner(&shift(lambda), &shift(lambda));
        let height = |w: &Vector| -> BigRational {
            let diff: Vector = lambda.iter().zip(w).map(|(a, b)| a - b).collect();
            self.root_coords(&diff).into_iter().sum()
        };
        let mut order: Vec<Vector> = dominant.iter().cloned().collect();
        order.sort_by_key(|w| height(w));
        let mut mult: BTreeMap<Vector, BigRational> = BTreeMap::new();
        for mu in order {
            if mu == lambda {
                mult.insert(mu, BigRational::one());
                continue;
            }
            let mut sum = BigRational::zero();
            for a in &self.positive_roots {
                let mut k = 1;
                loop {
                    let w: Vector = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                    let rep = self.dominant(&w);
                    let Some(m) = mult.get(&rep) else { break };
                    sum += m * self.inner(&w, a);
                    k += 1;
                }
            }
            let denom = &top - self.inner(&shift(&mu), &shift(&mu));
            mult.insert(mu, q(2) * sum / denom);
        }
        mult
    }

    /// `dim V(λ)` as `Σ_{μ dominant} m(μ) · |Wμ|`.
    pub fn dim(&self, lambda: &[i64]) -> BigInt {
        let total: BigRational = self
            .multiplicities(lambda)
            .into_iter()
            .map(|(mu, m)| m * q(self.orbit_size(&mu) as i64))
            .sum();
        assert!(total.is_integer());
        total.to_integer()
    }
}

fn symmetrizer(c: &[Vec<i64>]) -> Vec<BigRational> {
    let n = c.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && c[i][j] != 0 && d[j].is_none() {
                // d_i c_ij = d_j c_ji
                let dj = d[i].clone().unwrap() * q(c[i][j]) / q(c[j][i]);
                d[j] = Some(dj);
                queue.push_back(j);
            }
        }
    }
    d.into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect()
}

fn invert(c: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = c.len();
    let mut a: Vec<Vec<BigRational>> = c
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| q(x)).collect();
            r.extend((0..n).map(|j| if i == j { q(1) } else { q(0) }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("invertible");
        a.swap(col, p);
        let pivot = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Rank over ℚ by plain Gaussian elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &a[rank][col];
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `{m ≥ 0 : λ* − mγ dominant}` by scanning well past any possible bound.
pub fn dominance_scan(lambda_star: &[i64], gamma: &[i64]) -> Vec<u64> {
    let limit = lambda_star.iter().sum::<i64>().max(0) as u64 + 8;
    (0..=limit)
        .filter(|&m| {
            lambda_star
                .iter()
                .zip(gamma)
                .all(|(l, g)| l - m as i64 * g >= 0)
        })
        .collect()
}

/// Whether every `m ≤ sum` is `m₁ + m₂` with `m₁ ≤ a`, `m₂ ≤ b`, by exhaustive search.
pub fn exhaustive_split(a: u64, b: u64, sum: u64) -> bool {
    (0..=sum).all(|m| (0..=m.min(a)).any(|m1| m - m1 <= b))
}

pub fn doc(json: &str) -> VarietyDoc {
    serde_json::from_str(json).unwrap()
}

/// The three induced fixtures with an interval-splitting fiber, as documents.
pub fn induced_docs() -> Vec<VarietyDoc> {
    [
        r#"{"induction": {"ambient": {"type":"B","rank":4}, "levi": [2,3,4],
            "fiber": {"family":"9B","n":3}, "map": {"1":2,"2":3,"3":4}}}"#,
        r#"{"induction": {"ambient": {"type":"C","rank":3}, "levi": [2,3],
            "fiber": {"family":"9B","n":2}, "map": {"1":3,"2":2}}}"#,
        r#"{"induction": {"ambient": {"type":"C","rank":4}, "levi": [2,3,4],
            "fiber": {"family":"9C","n":3}, "map": {"1":2,"2":3,"3":4}}}"#,
    ]
    .into_iter()
    .map(doc)
    .collect()
}

/// Inductions of `P¹×P¹`, as documents.
pub fn p1xp1_docs() -> Vec<VarietyDoc> {
    [
        r#"{"induction": {"ambient": {"type":"B","rank":4}, "levi": [4],
            "fiber": {"family":"P1xP1"}, "map": {"1":4}}}"#,
        r#"{"induction": {"ambient": {"type":"A","rank":3}, "levi": [2],
            "fiber": {"family":"P1xP1"}, "map": {"1":2}}}"#,
    ]
    .into_iter()
    .map(doc)
    .collect()
}

pub fn induced_fixtures() -> Vec<(String, WonderfulVariety)> {
    induced_docs()
        .into_iter()
        .map(|d| {
            let x = d.build().unwrap();
            (x.label(), x)
        })
        .collect()
}

pub fn p1xp1_fixtures() -> Vec<(String, WonderfulVariety)> {
    let from_docs: Vec<_> = p1xp1_docs()
        .into_iter()
        .map(|d| {
            let x = d.build().unwrap();
            (x.label(), x)
        })
        .collect();
    // Same varieties built directly, to cover both entry points.
    let p1 = || wonderful_core::get_entry(&EntryId::P1xP1).unwrap();
    let direct = [
        make_induced(library('B', 4), &[3], p1(), &[3]).unwrap(),
        make_induced(library('A', 3), &[1], p1(), &[1]).unwrap(),
    ];
    for ((_, a), b) in from_docs.iter().zip(&direct) {
        assert_eq!(a, b);
    }
    from_docs
}

pub fn irreducible(doc: VarietyDoc) -> WonderfulVariety {
    doc.build().unwrap()
}

pub fn model_basis_count(model: GradedModel, d: wonderful_core::Degree) -> usize {
    model.basis(d).unwrap().len()
}
