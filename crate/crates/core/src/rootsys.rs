//! Finite root systems and weight-lattice arithmetic.
//!
//! Weights are stored in the basis of fundamental weights, so coordinate `i`
//! of a weight `λ` is exactly the pairing `⟨λ, α_i^∨⟩`. The Cartan matrix is
//! fixed as `cartan[i][j] = ⟨α_j, α_i^∨⟩`; column `j` of it is therefore the
//! weight of the simple root `α_j`. Simple roots are numbered as in Bourbaki.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use smallvec::SmallVec;

use crate::linalg::integer_inverse;
use crate::{Error, Result};

/// Integer coordinate vector; inline for rank at most 8.
pub type Coords = SmallVec<[i32; 8]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A Cartan-Killing type such as `A3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    /// Validates the rank for the family. `C2` is the same system as `B2`
    /// and is returned as `B2`; see [`CartanType::is_alias`].
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bound = match family {
            Family::A if rank < 1 => Some("A needs rank >= 1"),
            Family::B if rank < 2 => Some("B needs rank >= 2"),
            Family::C if rank < 2 => Some("C needs rank >= 3 (C2 is read as B2)"),
            Family::D if rank < 4 => Some("D needs rank >= 4"),
            Family::E if !(6..=8).contains(&rank) => Some("E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("F needs rank 4"),
            Family::G if rank != 2 => Some("G needs rank 2"),
            _ => None,
        };
        if let Some(bound) = bound {
            return Err(Error::InvalidRank {
                family,
                rank,
                bound,
            });
        }
        let family = if family == Family::C && rank == 2 {
            Family::B
        } else {
            family
        };
        Ok(CartanType { family, rank })
    }

    /// True for inputs that [`CartanType::new`] silently renames.
    pub fn is_alias(family: Family, rank: usize) -> bool {
        family == Family::C && rank == 2
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Types A, D and E.
    pub fn simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Symmetric Gram matrix `(α_i, α_j)` of the simple roots, normalised so
    /// that the shortest roots have squared length 2.
    fn gram(&self) -> Vec<i32> {
        let n = self.rank;
        let mut g = vec![0i32; n * n];
        let edge = |i: usize, j: usize, v: i32, g: &mut Vec<i32>| {
            g[i * n + j] = v;
            g[j * n + i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i * n + i] = 2;
                }
                for i in 0..n.saturating_sub(1) {
                    edge(i, i + 1, -1, &mut g);
                }
            }
            Family::B => {
                for i in 0..n {
                    g[i * n + i] = if i + 1 == n { 2 } else { 4 };
                }
                for i in 0..n - 1 {
                    edge(i, i + 1, -2, &mut g);
                }
            }
            Family::C => {
                for i in 0..n {
                    g[i * n + i] = if i + 1 == n { 4 } else { 2 };
                }
                for i in 0..n - 1 {
                    edge(i, i + 1, if i + 2 == n { -2 } else { -1 }, &mut g);
                }
            }
            Family::D => {
                for i in 0..n {
                    g[i * n + i] = 2;
                }
                for i in 0..n - 2 {
                    edge(i, i + 1, -1, &mut g);
                }
                edge(n - 3, n - 1, -1, &mut g);
            }
            Family::E => {
                for i in 0..n {
                    g[i * n + i] = 2;
                }
                edge(0, 2, -1, &mut g);
                edge(1, 3, -1, &mut g);
                for i in 2..n - 1 {
                    edge(i, i + 1, -1, &mut g);
                }
            }
            Family::F => {
                for (i, d) in [4, 4, 2, 2].into_iter().enumerate() {
                    g[i * n + i] = d;
                }
                edge(0, 1, -2, &mut g);
                edge(1, 2, -2, &mut g);
                edge(2, 3, -1, &mut g);
            }
            Family::G => {
                g.copy_from_slice(&[2, -3, -3, 6]);
            }
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Coords);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i32>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coordinates non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: i32, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(1, rhs)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(-1, rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// A root, carried both as a weight and in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub weight: Weight,
    pub root_coords: Coords,
    pub height: i32,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.height > 0
    }
}

/// Location of a weight in the root set: index into the positive roots
/// and the sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootRef {
    pub index: usize,
    pub positive: bool,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<i32>,
    norms: Vec<i32>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    highest_root: usize,
    rho: Weight,
    lookup: BTreeMap<Weight, RootRef>,
    cartan_adj: Vec<i64>,
    cartan_det: i64,
}

impl RootSystem {
    /// Builds the root system by closing the simple roots under root
    /// strings.
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let gram = cartan_type.gram();
        let norms: Vec<i32> = (0..n).map(|i| gram[i * n + i]).collect();
        let cartan: Vec<i32> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                2 * gram[i * n + j] / norms[i]
            })
            .collect();

        let unit = |i: usize| -> Coords { (0..n).map(|k| i32::from(k == i)).collect() };
        let mut known: BTreeSet<Coords> = (0..n).map(unit).collect();
        let mut layer: Vec<Coords> = (0..n).map(unit).collect();
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for beta in &layer {
                for i in 0..n {
                    let pairing: i32 = (0..n).map(|j| cartan[i * n + j] * beta[j]).sum();
                    // p = how far the α_i-string extends below β
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains(&up) {
                            next.insert(up);
                        }
                    }
                }
            }
            known.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }

        let to_weight = |c: &Coords| -> Weight {
            Weight(
                (0..n)
                    .map(|i| (0..n).map(|j| cartan[i * n + j] * c[j]).sum())
                    .collect(),
            )
        };
        let mut positive_roots: Vec<Root> = known
            .into_iter()
            .map(|c| Root {
                weight: to_weight(&c),
                height: c.iter().sum(),
                root_coords: c,
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            a.height
                .cmp(&b.height)
                .then_with(|| a.root_coords.cmp(&b.root_coords))
        });

        let highest_root = positive_roots.len() - 1;
        let mut lookup = BTreeMap::new();
        for (index, r) in positive_roots.iter().enumerate() {
            lookup.insert(
                r.weight.clone(),
                RootRef {
                    index,
                    positive: true,
                },
            );
            lookup.insert(
                -&r.weight,
                RootRef {
                    index,
                    positive: false,
                },
            );
        }
        let simple_roots = (0..n).map(|i| to_weight(&unit(i))).collect();
        let (cartan_adj, cartan_det) =
            integer_inverse(&cartan, n).expect("Cartan matrix of a finite type is nonsingular");

        RootSystem {
            cartan_type,
            rank: n,
            cartan,
            norms,
            simple_roots,
            positive_roots,
            highest_root,
            rho: Weight(SmallVec::from_elem(1, n)),
            lookup,
            cartan_adj,
            cartan_det,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `⟨α_j, α_i^∨⟩`.
    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[i * self.rank + j]
    }

    /// Squared length `(α_i, α_i)`, with the shortest roots normalised to 2.
    pub fn norm(&self, i: usize) -> i32 {
        self.norms[i]
    }

    /// Whether `α_i` is a long root. In simply-laced types every root is long.
    pub fn is_long(&self, i: usize) -> bool {
        self.norms[i] == self.norms.iter().copied().max().unwrap_or(2)
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|k| i32::from(k == i)).collect())
    }

    /// Positive roots ordered by height, then lexicographically by
    /// simple-root coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        }
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank,
                got: w.rank(),
            })
        }
    }

    /// `⟨λ, α_i^∨⟩`, a coordinate read.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i32> {
        self.check_index(i)?;
        self.check_weight(lambda)?;
        Ok(lambda.0[i])
    }

    /// `s_i(λ) = λ - ⟨λ, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        lambda.add_scaled(-lambda.0[i], &self.simple_roots[i])
    }

    /// Weight of `Σ c_j α_j`.
    pub fn weight_of_root_coords(&self, coords: &[i32]) -> Weight {
        let n = self.rank;
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i * n + j] * coords[j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of `λ` if it lies in the root lattice.
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Option<Coords> {
        let n = self.rank;
        let mut out = Coords::new();
        for j in 0..n {
            let num: i64 = (0..n)
                .map(|k| self.cartan_adj[j * n + k] * i64::from(lambda.0[k]))
                .sum();
            if num % self.cartan_det != 0 {
                return None;
            }
            out.push((num / self.cartan_det) as i32);
        }
        Some(out)
    }

    /// `μ ≤ λ`: `λ - μ` is a non-negative integral combination of simple
    /// roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.root_lattice_coords(&(lambda - mu))
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Where `λ` sits in the root set, if it is a root.
    pub fn root_ref(&self, lambda: &Weight) -> Option<RootRef> {
        self.lookup.get(lambda).copied()
    }

    pub fn is_root(&self, lambda: &Weight) -> bool {
        self.lookup.contains_key(lambda)
    }

    pub fn is_positive_root(&self, lambda: &Weight) -> bool {
        self.root_ref(lambda).is_some_and(|r| r.positive)
    }

    pub fn is_negative_root(&self, lambda: &Weight) -> bool {
        self.root_ref(lambda).is_some_and(|r| !r.positive)
    }

    /// Positive roots supported on the simple roots in `j`.
    pub fn subsystem_positive_roots(&self, j: &[usize]) -> Vec<&Root> {
        self.positive_roots
            .iter()
            .filter(|r| {
                r.root_coords
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || j.contains(&k))
            })
            .collect()
    }

    /// Coxeter exponent `m_ij`, the order of `s_i s_j`.
    pub fn coxeter_order(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        match self.cartan(i, j) * self.cartan(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("{}", format!("finite type has no product {p}")),
        }
    }
}
