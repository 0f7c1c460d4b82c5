//! Root systems and the integral weight lattice.
//!
//! Simple roots follow Bourbaki numbering. Index `0` in the API is `α₁`:
//!
//! * `Aₙ`: chain `1 - 2 - … - n`.
//! * `Bₙ`: chain with `αₙ` short.
//! * `Cₙ`: chain with `αₙ` long.
//! * `Dₙ`: chain `1 - … - (n-2)`, with `n-1` and `n` both attached to `n-2`.
//! * `E₆,E₇,E₈`: chain `1 - 3 - 4 - 5 - …`, with `2` attached to `4`.
//! * `F₄`: `1 - 2 => 3 - 4`, `α₁, α₂` long.
//! * `G₂`: `α₁` short, `α₂` long.
//!
//! The Cartan matrix is stored as `C[i][j] = ⟨α_j, α_i∨⟩`, so column `j` holds
//! the fundamental coordinates of the simple root `α_j`.

mod weight;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use weight::Weight;

/// Cartan-Killing type of an irreducible root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    /// Number of positive roots of the irreducible system of this type and rank.
    pub fn positive_root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            CartanType::A => n * (n + 1) / 2,
            CartanType::B | CartanType::C => n * n,
            CartanType::D => n * (n - 1),
            CartanType::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            CartanType::F => 24,
            CartanType::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            other => Err(Error::InvalidRootSystem(format!("unknown type {other:?}"))),
        }
    }
}

/// An irreducible finite root system with its derived data precomputed.
#[derive(Clone, PartialEq, Eq)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height.
    positive_roots: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates.
    positive_coroots: Vec<Vec<i64>>,
    /// Matrix of `λ ↦ -w₀λ`: row `j` holds `(ω_j)*`.
    star: Vec<Vec<i64>>,
    /// Reduced word for `w₀`, applied left to right.
    longest_word: Vec<usize>,
}

fn chain(rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
        if i + 1 < rank {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

fn link(c: &mut [Vec<i64>], i: usize, j: usize) {
    c[i][j] = -1;
    c[j][i] = -1;
}

fn cartan_matrix(kind: CartanType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || {
        Err(Error::InvalidRootSystem(format!(
            "type {kind} does not exist in rank {rank}"
        )))
    };
    let n = rank;
    let c = match kind {
        CartanType::A => {
            if n < 1 {
                return bad();
            }
            chain(n)
        }
        CartanType::B => {
            if n < 2 {
                return bad();
            }
            let mut c = chain(n);
            // ⟨α_{n-1}, α_n∨⟩ = -2: α_n is short.
            c[n - 1][n - 2] = -2;
            c
        }
        CartanType::C => {
            if n < 2 {
                return bad();
            }
            let mut c = chain(n);
            c[n - 2][n - 1] = -2;
            c
        }
        CartanType::D => {
            if n < 3 {
                return bad();
            }
            let mut c = chain(n);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            link(&mut c, n - 3, n - 1);
            c
        }
        CartanType::E => {
            if !(6..=8).contains(&n) {
                return bad();
            }
            let mut c = vec![vec![0; n]; n];
            for (i, row) in c.iter_mut().enumerate() {
                row[i] = 2;
            }
            link(&mut c, 0, 2);
            link(&mut c, 1, 3);
            for i in 2..n - 1 {
                link(&mut c, i, i + 1);
            }
            c
        }
        CartanType::F => {
            if n != 4 {
                return bad();
            }
            let mut c = chain(4);
            c[2][1] = -2;
            c
        }
        CartanType::G => {
            if n != 2 {
                return bad();
            }
            vec![vec![2, -3], vec![-1, 2]]
        }
    };
    Ok(c)
}

/// Positive roots of the system with Cartan matrix `a` (`a[i][j] = ⟨α_j, α_i∨⟩`),
/// in simple-root coordinates, generated by root strings in order of height.
fn generate_positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = a.len();
    let mut roots: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut r = vec![0; rank];
            r[i] = 1;
            r
        })
        .collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut start = 0;
    while start < roots.len() {
        let end = roots.len();
        for idx in start..end {
            let beta = roots[idx].clone();
            for i in 0..rank {
                // p = length of the α_i-string below β.
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|j| beta[j] * a[i][j]).sum();
                if p - pairing > 0 {
                    let mut next = beta.clone();
                    next[i] += 1;
                    if known.insert(next.clone()) {
                        roots.push(next);
                    }
                }
            }
        }
        start = end;
    }
    roots
}

impl RootSystem {
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(kind, rank)?;
        let positive_roots = generate_positive_roots(&cartan);
        let transpose: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[j][i]).collect())
            .collect();
        let positive_coroots = generate_positive_roots(&transpose);
        let expected = kind.positive_root_count(rank);
        if positive_roots.len() != expected || positive_coroots.len() != expected {
            return Err(Error::InvalidRootSystem(format!(
                "{kind}{rank}: generated {} positive roots, expected {expected}",
                positive_roots.len()
            )));
        }
        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            positive_roots,
            positive_coroots,
            star: Vec::new(),
            longest_word: Vec::new(),
        };
        rs.longest_word = rs.raise_to_dominant_word(&Weight::new(vec![-1; rank]));
        rs.star = (0..rank)
            .map(|j| {
                let w = -&Weight::fundamental(rank, j);
                rs.apply_word(&rs.longest_word, w).into_coords()
            })
            .collect();
        Ok(rs)
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `⟨α_j, α_i∨⟩`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Simple root `α_{index+1}` in fundamental coordinates.
    pub fn simple_root(&self, index: usize) -> Result<Weight> {
        self.check_index(index)?;
        Ok(Weight::new(
            (0..self.rank).map(|j| self.cartan[j][index]).collect(),
        ))
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, root_coords: &[i64]) -> Weight {
        Weight::new(
            (0..self.rank)
                .map(|j| {
                    (0..self.rank)
                        .map(|i| self.cartan[j][i] * root_coords[i])
                        .sum()
                })
                .collect(),
        )
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots_in_simple_basis(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive coroots in simple-coroot coordinates.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// All positive roots in fundamental-weight coordinates.
    pub fn positive_roots(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .map(|r| self.root_to_weight(r))
            .collect()
    }

    /// `ρ`, the sum of the fundamental weights.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank])
    }

    /// A reduced word for the longest Weyl group element.
    pub fn longest_word(&self) -> &[usize] {
        &self.longest_word
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                rank: self.rank,
            })
        }
    }

    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        w.check_rank(self.rank)?;
        Ok(w.is_nonnegative())
    }

    /// `s_i(λ) = λ - ⟨λ, α_i∨⟩ α_i`.
    pub fn simple_reflection(&self, index: usize, w: &Weight) -> Result<Weight> {
        self.check_index(index)?;
        w.check_rank(self.rank)?;
        Ok(self.reflect(index, w.clone()))
    }

    fn reflect(&self, index: usize, mut w: Weight) -> Weight {
        let k = w.coords()[index];
        if k != 0 {
            for (j, c) in w.coords_mut().iter_mut().enumerate() {
                *c -= k * self.cartan[j][index];
            }
        }
        w
    }

    fn apply_word(&self, word: &[usize], w: Weight) -> Weight {
        word.iter().fold(w, |acc, &i| self.reflect(i, acc))
    }

    /// Reflects at the first negative coordinate until dominant; returns the word used.
    fn raise_to_dominant_word(&self, w: &Weight) -> Vec<usize> {
        let mut word = Vec::new();
        let mut current = w.clone();
        while let Some(i) = current.coords().iter().position(|&c| c < 0) {
            current = self.reflect(i, current);
            word.push(i);
        }
        word
    }

    /// The dominant weight in the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Result<Weight> {
        w.check_rank(self.rank)?;
        let word = self.raise_to_dominant_word(w);
        Ok(self.apply_word(&word, w.clone()))
    }

    /// `w₀(λ)`.
    pub fn longest_element_action(&self, w: &Weight) -> Result<Weight> {
        w.check_rank(self.rank)?;
        Ok(self.apply_word(&self.longest_word, w.clone()))
    }

    /// The star involution `λ* = -w₀λ`.
    ///
    /// `w₀` is realised as the word that raises `-ρ` to `ρ`, so the map is linear
    /// on the whole lattice and not only on dominant weights.
    pub fn weight_star(&self, w: &Weight) -> Result<Weight> {
        w.check_rank(self.rank)?;
        let mut out = vec![0; self.rank];
        for (j, &c) in w.coords().iter().enumerate() {
            if c != 0 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * self.star[j][k];
                }
            }
        }
        Ok(Weight::new(out))
    }

    /// Dimension of the irreducible module of highest weight `w` (Weyl's formula).
    pub fn weyl_dim(&self, w: &Weight) -> Result<BigUint> {
        if !self.is_dominant(w)? {
            return Err(Error::Domain(format!(
                "weyl_dim needs a dominant weight, got {w}"
            )));
        }
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        for coroot in &self.positive_coroots {
            let shifted: i64 = coroot
                .iter()
                .zip(w.coords())
                .map(|(c, l)| c * (l + 1))
                .sum();
            let base: i64 = coroot.iter().sum();
            num *= BigUint::from(shifted as u64);
            den *= BigUint::from(base as u64);
        }
        Ok(num / den)
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

#[derive(Serialize, Deserialize)]
struct RootSystemDoc {
    #[serde(rename = "type")]
    kind: String,
    rank: usize,
}

/// Serialized as `{"type": "B", "rank": 3}`.
impl Serialize for RootSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootSystemDoc {
            kind: self.kind.to_string(),
            rank: self.rank,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = RootSystemDoc::deserialize(d)?;
        let kind: CartanType = doc.kind.parse().map_err(serde::de::Error::custom)?;
        RootSystem::new(kind, doc.rank).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(kind: CartanType, rank: usize) -> RootSystem {
        RootSystem::new(kind, rank).unwrap()
    }

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    #[test]
    fn cartan_golden_values() {
        assert_eq!(
            rs(CartanType::B, 3).cartan(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            rs(CartanType::C, 3).cartan(),
            &[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(rs(CartanType::G, 2).cartan(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(
            rs(CartanType::D, 4).cartan(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2]
            ]
        );
        assert_eq!(
            rs(CartanType::F, 4).cartan(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        let e6 = rs(CartanType::E, 6);
        assert_eq!(e6.cartan_entry(1, 3), -1);
        assert_eq!(e6.cartan_entry(0, 2), -1);
        assert_eq!(e6.cartan_entry(1, 2), 0);
    }

    #[test]
    fn cartan_invariants_hold_for_all_types() {
        let cases = [
            (CartanType::A, 1),
            (CartanType::A, 5),
            (CartanType::B, 2),
            (CartanType::B, 6),
            (CartanType::C, 5),
            (CartanType::D, 3),
            (CartanType::D, 6),
            (CartanType::E, 6),
            (CartanType::E, 7),
            (CartanType::E, 8),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ];
        for (kind, rank) in cases {
            let r = rs(kind, rank);
            let c = r.cartan();
            for (i, row) in c.iter().enumerate() {
                assert_eq!(row[i], 2);
                for (j, &x) in row.iter().enumerate() {
                    if i != j {
                        assert!(x <= 0);
                        assert_eq!(x == 0, c[j][i] == 0);
                    }
                }
            }
            assert_eq!(r.positive_roots().len(), kind.positive_root_count(rank));
            assert_eq!(r.longest_word().len(), kind.positive_root_count(rank));
        }
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(RootSystem::new(CartanType::B, 1).is_err());
        assert!(RootSystem::new(CartanType::G, 3).is_err());
        assert!(RootSystem::new(CartanType::E, 5).is_err());
        assert!(RootSystem::new(CartanType::A, 0).is_err());
    }

    #[test]
    fn dominance() {
        let g2 = rs(CartanType::G, 2);
        assert!(g2.is_dominant(&w([3, 1])).unwrap());
        assert!(!g2.is_dominant(&w([-1, 1])).unwrap());
        assert!(rs(CartanType::B, 3).is_dominant(&w([0, 0, 0])).unwrap());
        assert_eq!(
            g2.is_dominant(&w([1, 1, 1])),
            Err(Error::Dimension {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn simple_reflections() {
        let a1 = rs(CartanType::A, 1);
        assert_eq!(a1.simple_reflection(0, &w([5])).unwrap(), w([-5]));
        let a2 = rs(CartanType::A, 2);
        assert_eq!(a2.simple_reflection(0, &w([1, 0])).unwrap(), w([-1, 1]));
        assert_eq!(a2.simple_reflection(1, &w([0, 0])).unwrap(), w([0, 0]));
        assert_eq!(
            a2.simple_reflection(2, &w([0, 0])),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        );
        let b3 = rs(CartanType::B, 3);
        let x = w([2, -1, 3]);
        for i in 0..3 {
            let once = b3.simple_reflection(i, &x).unwrap();
            assert_eq!(b3.simple_reflection(i, &once).unwrap(), x);
        }
    }

    #[test]
    fn star_examples() {
        let b3 = rs(CartanType::B, 3);
        for p in 0..5 {
            assert_eq!(b3.weight_star(&w([p, 0, 0])).unwrap(), w([p, 0, 0]));
        }
        let a2 = rs(CartanType::A, 2);
        assert_eq!(a2.weight_star(&w([1, 0])).unwrap(), w([0, 1]));
        let g2 = rs(CartanType::G, 2);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g2.weight_star(&w([a, b])).unwrap(), w([a, b]));
            }
        }
        let d5 = rs(CartanType::D, 5);
        assert_eq!(
            d5.weight_star(&w([0, 0, 0, 1, 0])).unwrap(),
            w([0, 0, 0, 0, 1])
        );
        let d4 = rs(CartanType::D, 4);
        assert_eq!(d4.weight_star(&w([0, 0, 1, 0])).unwrap(), w([0, 0, 1, 0]));
        let e6 = rs(CartanType::E, 6);
        assert_eq!(
            e6.weight_star(&w([1, 0, 0, 0, 0, 0])).unwrap(),
            w([0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn star_agrees_with_raising_negative_dominant() {
        let a4 = rs(CartanType::A, 4);
        let x = w([2, 0, 1, 3]);
        let raised = a4.dominant_representative(&-&x).unwrap();
        assert_eq!(raised, a4.weight_star(&x).unwrap());
        assert_eq!(raised, w([3, 1, 0, 2]));
    }

    #[test]
    fn weyl_dim_examples() {
        let a1 = rs(CartanType::A, 1);
        for k in 0..10 {
            assert_eq!(a1.weyl_dim(&w([k])).unwrap(), BigUint::from((k + 1) as u32));
        }
        assert_eq!(
            rs(CartanType::B, 3).weyl_dim(&w([1, 0, 0])).unwrap(),
            7u32.into()
        );
        assert_eq!(
            rs(CartanType::B, 3).weyl_dim(&w([2, 0, 0])).unwrap(),
            27u32.into()
        );
        assert_eq!(
            rs(CartanType::G, 2).weyl_dim(&w([0, 1])).unwrap(),
            14u32.into()
        );
        assert_eq!(
            rs(CartanType::G, 2).weyl_dim(&w([1, 0])).unwrap(),
            7u32.into()
        );
        assert_eq!(
            rs(CartanType::E, 8)
                .weyl_dim(&w([0, 0, 0, 0, 0, 0, 0, 1]))
                .unwrap(),
            248u32.into()
        );
        assert_eq!(
            rs(CartanType::E, 6)
                .weyl_dim(&w([1, 0, 0, 0, 0, 0]))
                .unwrap(),
            27u32.into()
        );
        assert_eq!(
            rs(CartanType::F, 4).weyl_dim(&w([0, 0, 0, 1])).unwrap(),
            26u32.into()
        );
        assert!(matches!(
            rs(CartanType::G, 2).weyl_dim(&w([-1, 2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn weyl_dim_is_exact_for_large_weights() {
        let e8 = rs(CartanType::E, 8);
        let big = e8.weyl_dim(&Weight::new(vec![40; 8])).unwrap();
        // 41^120 · (product of ρ-pairings)/(same) = 41^120.
        assert_eq!(big, BigUint::from(41u32).pow(120));
    }

    #[test]
    fn positive_root_examples() {
        assert_eq!(rs(CartanType::A, 2).positive_roots().len(), 3);
        assert_eq!(rs(CartanType::G, 2).positive_roots().len(), 6);
        let b3 = rs(CartanType::B, 3);
        let roots = b3.positive_roots();
        assert_eq!(roots.len(), 9);
        // Highest root of B3 is ω₂.
        assert!(roots.contains(&w([0, 1, 0])));
        let g2 = rs(CartanType::G, 2);
        // Highest root of G2 is the adjoint highest weight ω₂.
        assert_eq!(g2.positive_roots().last().unwrap(), &w([0, 1]));
    }

    #[test]
    fn serde_round_trip() {
        let b3 = rs(CartanType::B, 3);
        let json = serde_json::to_string(&b3).unwrap();
        assert_eq!(json, r#"{"type":"B","rank":3}"#);
        let back: RootSystem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b3);
        assert!(serde_json::from_str::<RootSystem>(r#"{"type":"B","rank":1}"#).is_err());
    }
}
