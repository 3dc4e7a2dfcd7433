//! Root-system and weight-lattice arithmetic for Lie types A, B, D.
//!
//! Weights live in fundamental-weight coordinates throughout: a weight
//! `lambda` is the integer vector `(lambda(H_1), ..., lambda(H_r))`.
//! All inner products go through the symmetrized inverse Cartan matrix
//! `D A^{-1}`, and conversions to root coordinates go through `A`
//! explicitly.

use crate::error::{Error, Result};
use crate::matrix::RatMat;
use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

// ---- Lie types ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieType {
    A,
    B,
    D,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::A => write!(f, "A"),
            LieType::B => write!(f, "B"),
            LieType::D => write!(f, "D"),
        }
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::UnsupportedCartan(format!(
                "Lie type {other:?} (supported: A, B, D)"
            ))),
        }
    }
}

// ---- Weights ----

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// ---- Cartan data ----

/// Cartan matrix, symmetrizer, and the symmetrized inverse `D A^{-1}` for
/// one of the supported root systems. Source of every inner product.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanData {
    lie_type: LieType,
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    da_inverse: RatMat,
}

impl CartanData {
    /// Build the Cartan data for `lie_type` at the given rank.
    ///
    /// Rank constraints: `A_n` needs `n >= 1`, `B_n` needs `n >= 2`,
    /// `D_n` needs `n >= 3` (`D_3` is accepted with its own matrix).
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        let min_rank = match lie_type {
            LieType::A => 1,
            LieType::B => 2,
            LieType::D => 3,
        };
        if rank < min_rank {
            return Err(Error::UnsupportedCartan(format!(
                "{lie_type}_{rank}: type {lie_type} needs rank >= {min_rank}"
            )));
        }

        // Common tridiagonal chain; B and D adjust the tail couplings.
        let mut a = vec![vec![0i64; rank]; rank];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
            if i + 1 < rank {
                row[i + 1] = -1;
            }
            if i >= 1 {
                row[i - 1] = -1;
            }
        }
        match lie_type {
            LieType::A => {}
            LieType::B => {
                // last simple root short; double arrow from node n to n-1
                a[rank - 1][rank - 2] = -2;
            }
            LieType::D => {
                // fork: node n attaches to node n-2 instead of n-1
                a[rank - 1][rank - 2] = 0;
                a[rank - 2][rank - 1] = 0;
                a[rank - 1][rank - 3] = -1;
                a[rank - 3][rank - 1] = -1;
            }
        }

        let symmetrizer: Vec<i64> = match lie_type {
            LieType::A | LieType::D => vec![1; rank],
            LieType::B => {
                let mut d = vec![2; rank];
                d[rank - 1] = 1;
                d
            }
        };

        let a_rat = RatMat::from_fn(rank, rank, |r, c| int_rat(a[r][c]));
        let a_inv = a_rat.inverse().map_err(|_| {
            Error::Internal(format!("Cartan matrix {lie_type}_{rank} not invertible"))
        })?;
        let da_inverse =
            RatMat::from_fn(rank, rank, |r, c| int_rat(symmetrizer[r]) * a_inv.get(r, c));

        let cd = CartanData {
            lie_type,
            rank,
            cartan_matrix: a,
            symmetrizer,
            da_inverse,
        };
        cd.check_invariants()?;
        Ok(cd)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.rank;
        for i in 0..n {
            if self.cartan_matrix[i][i] != 2 {
                return Err(Error::Internal("Cartan diagonal must be 2".into()));
            }
            for j in 0..n {
                if i != j && self.cartan_matrix[i][j] > 0 {
                    return Err(Error::Internal("Cartan off-diagonal must be <= 0".into()));
                }
                // diag(d) * A symmetric
                if self.symmetrizer[i] * self.cartan_matrix[i][j]
                    != self.symmetrizer[j] * self.cartan_matrix[j][i]
                {
                    return Err(Error::Internal("symmetrizer fails to symmetrize A".into()));
                }
            }
        }
        // (D A^{-1}) * A = D exactly
        let a_rat = RatMat::from_fn(n, n, |r, c| int_rat(self.cartan_matrix[r][c]));
        let product = self.da_inverse.mul(&a_rat);
        let d_mat = RatMat::from_fn(n, n, |r, c| {
            if r == c {
                int_rat(self.symmetrizer[r])
            } else {
                Rat::zero()
            }
        });
        if product != d_mat {
            return Err(Error::Internal("DA^{-1} * A != D".into()));
        }
        Ok(())
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.cartan_matrix
    }

    /// Cartan integer `a_ij`, 1-based indices.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan_matrix[i - 1][j - 1]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Root length `d_i`, 1-based.
    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizer[i - 1]
    }

    pub fn da_inverse(&self) -> &RatMat {
        &self.da_inverse
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "weight {w} has rank {}, Cartan data has rank {}",
                w.rank(),
                self.rank
            )));
        }
        Ok(())
    }

    /// `<lambda, mu> = sum_ij (D A^{-1})_ij lambda_i mu_j`.
    pub fn weight_inner_product(&self, lambda: &Weight, mu: &Weight) -> Result<Rat> {
        self.check_weight(lambda)?;
        self.check_weight(mu)?;
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if lambda.coords[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if mu.coords[j] == 0 {
                    continue;
                }
                acc +=
                    self.da_inverse.get(i, j) * int_rat(lambda.coords[i]) * int_rat(mu.coords[j]);
            }
        }
        Ok(acc)
    }

    /// Simple root `alpha_i = sum_j a_ji omega_j` (1-based `i`), i.e. the
    /// i-th column of the Cartan matrix in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        if i < 1 || i > self.rank {
            return Err(Error::UnsupportedCartan(format!(
                "simple root index {i} out of range 1..={}",
                self.rank
            )));
        }
        Ok(Weight::new(
            (0..self.rank)
                .map(|j| self.cartan_matrix[j][i - 1])
                .collect(),
        ))
    }

    /// The Weyl vector `rho`, characterized by `rho(H_i) = 1` for all i.
    pub fn weyl_vector(&self) -> Weight {
        Weight::new(vec![1; self.rank])
    }

    /// Coefficients `b` of `rho = sum_i b_i alpha_i^vee`, i.e. the solution
    /// of `A^T b = d`; equivalently `b_i = sum_j (A^{-1})_ji d_j`, which is
    /// the i-th column sum of `D A^{-1}`.
    pub fn weyl_vector_coroot_coeffs(&self) -> Vec<Rat> {
        let n = self.rank;
        (0..n)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..n {
                    acc += self.da_inverse.get(j, i);
                }
                acc
            })
            .collect()
    }

    /// Casimir eigenvalue `<lambda, lambda + 2 rho>` on the irreducible
    /// highest-weight module `V(lambda)`; requires `lambda` dominant.
    pub fn casimir_eigenvalue(&self, lambda: &Weight) -> Result<Rat> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NonDominantWeight(lambda.coords.clone()));
        }
        let shifted = lambda.add(&self.weyl_vector().scaled(2));
        self.weight_inner_product(lambda, &shifted)
    }

    /// Root order `D` for the session field: `s = q^(1/D)` with
    /// `D = 2 * lcm` of the denominators of the entries of `D A^{-1}`.
    /// Every exponent arising from weight inner products and the square
    /// roots in the spectral construction is then an integer power of `s`.
    pub fn root_order(&self) -> u32 {
        let mut l = BigInt::one();
        for r in 0..self.rank {
            for c in 0..self.rank {
                l = l.lcm(self.da_inverse.get(r, c).denom());
            }
        }

        2u32 * u32::try_from(l).expect("root order fits in u32")
    }

    /// Express a weight in simple-root coordinates: solves `A c = coords`.
    pub fn weight_in_root_coords(&self, w: &Weight) -> Result<Vec<Rat>> {
        self.check_weight(w)?;
        let n = self.rank;
        Ok((0..n)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..n {
                    acc += self.da_inverse.get(i, j) / int_rat(self.symmetrizer[i])
                        * int_rat(w.coords[j]);
                }
                acc
            })
            .collect())
    }

    /// All positive roots, as weights, generated by closing the simple
    /// roots under the simple reflections `s_i(b) = b - b(H_i) alpha_i`.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let simples: Vec<Weight> = (1..=self.rank)
            .map(|i| self.simple_root(i).unwrap())
            .collect();
        let mut all: Vec<Weight> = simples.clone();
        let mut seen: std::collections::BTreeSet<Weight> = all.iter().cloned().collect();
        let mut frontier = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for (i, alpha) in simples.iter().enumerate() {
                    let reflected = beta.sub(&alpha.scaled(beta.coords[i]));
                    if seen.insert(reflected.clone()) {
                        next.push(reflected.clone());
                        all.push(reflected);
                    }
                }
            }
            frontier = next;
        }
        let mut positives: Vec<Weight> = all
            .into_iter()
            .filter(|beta| {
                self.weight_in_root_coords(beta)
                    .map(|c| c.iter().all(|x| !x.is_negative()))
                    .unwrap_or(false)
            })
            .collect();
        positives.sort();
        positives.dedup();
        positives
    }
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.lie_type, self.rank)
    }
}

fn int_rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}
