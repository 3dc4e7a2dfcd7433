//! Tensor-square fusion: decompose `V (x) V` into simples, detect
//! multiplicity-freeness, and realize the isotypic components concretely
//! as projectors built from highest-weight vectors and lowering operators.
//!
//! No inner product or adjoint is assumed anywhere: projectors come from
//! the direct-sum structure alone, so they stay exact over the field.

mod characters;

pub use characters::{dimension, weight_multiplicities};

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};
use crate::matrix::QMat;
use crate::qarith::FieldElement;
use crate::qmodule::{Generator, QModule};
use crate::Rat;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// One simple summand of a tensor-square decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionSummand {
    pub weight: Weight,
    pub multiplicity: u64,
    pub dim: u64,
    pub casimir: Rat,
}

/// `V (x) V = (+)_X N_X X` with deterministic summand ordering
/// (decreasing Casimir eigenvalue, ties broken lexicographically by
/// descending weight coordinates).
#[derive(Clone, Debug, PartialEq)]
pub struct FusionDecomposition {
    pub base_weight: Weight,
    pub summands: Vec<FusionSummand>,
    pub multiplicity_free: bool,
}

impl FusionDecomposition {
    /// Dimension bookkeeping: `sum N_X dim(X)` must equal `dim(V)^2`.
    pub fn total_dim(&self) -> u64 {
        self.summands.iter().map(|s| s.multiplicity * s.dim).sum()
    }

    /// Structured text report: one line per summand.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "base_weight {}", self.base_weight);
        let _ = writeln!(out, "multiplicity_free {}", self.multiplicity_free);
        let _ = writeln!(out, "summands {}", self.summands.len());
        for s in &self.summands {
            let _ = writeln!(
                out,
                "weight {} multiplicity {} dim {} casimir {}",
                s.weight, s.multiplicity, s.dim, s.casimir
            );
        }
        out
    }
}

/// One isotypic component of a multiplicity-free tensor square: a basis of
/// the component and the projector onto it along the other components.
#[derive(Clone, Debug)]
pub struct IsotypicComponent {
    pub weight: Weight,
    pub basis: Vec<Vec<FieldElement>>,
    pub projector: QMat,
}

fn sort_summands(summands: &mut [FusionSummand]) {
    summands.sort_by(|a, b| {
        b.casimir
            .cmp(&a.casimir)
            .then_with(|| b.weight.coords().cmp(a.weight.coords()))
    });
}

/// Clebsch-Gordan rule for the sl2 tensor square:
/// `V(m) (x) V(m) = V(2m) (+) V(2m-2) (+) ... (+) V(0)`.
pub fn sl2_tensor_square_decomposition(m: u32) -> FusionDecomposition {
    let cd = CartanData::new(crate::cartan::LieType::A, 1).expect("A_1 exists");
    let mut summands = Vec::new();
    for k in 0..=m {
        let w = Weight::new(vec![2 * m as i64 - 2 * k as i64]);
        let casimir = cd.casimir_eigenvalue(&w).expect("dominant");
        summands.push(FusionSummand {
            weight: w,
            multiplicity: 1,
            dim: (2 * m - 2 * k + 1) as u64,
            casimir,
        });
    }
    sort_summands(&mut summands);
    FusionDecomposition {
        base_weight: Weight::new(vec![m as i64]),
        summands,
        multiplicity_free: true,
    }
}

/// Decompose `V(lambda) (x) V(lambda)` by brute-force character
/// arithmetic: Freudenthal multiplicities, product character, greedy
/// peeling by maximal height. Reports multiplicities instead of failing
/// on them.
pub fn decompose_general(
    cd: &CartanData,
    lambda: &Weight,
    cap: usize,
) -> Result<FusionDecomposition> {
    if !lambda.is_dominant() {
        return Err(Error::NonDominantWeight(lambda.coords().to_vec()));
    }
    if cd.rank() > 4 {
        return Err(Error::UnsupportedConfiguration(format!(
            "decompose_general supports rank <= 4, got {}",
            cd.rank()
        )));
    }
    let base = weight_multiplicities(cd, lambda, cap)?;
    let dim: u64 = base.values().sum();
    let square_dim = (dim * dim) as usize;
    if square_dim > cap {
        return Err(Error::CapExceeded {
            dim: square_dim,
            cap,
        });
    }

    // product character of the tensor square
    let mut product: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w1, &m1) in &base {
        for (w2, &m2) in &base {
            *product.entry(w1.add(w2)).or_insert(0) += (m1 * m2) as i64;
        }
    }
    product.retain(|_, m| *m != 0);

    let mut summands = Vec::new();
    let mut char_cache: BTreeMap<Weight, BTreeMap<Weight, u64>> = BTreeMap::new();
    char_cache.insert(lambda.clone(), base);
    while !product.is_empty() {
        // maximal height first; ties broken by descending coordinates
        let nu = product
            .keys()
            .max_by(|a, b| {
                let ha: Rat = cd.weight_in_root_coords(a).unwrap().into_iter().sum();
                let hb: Rat = cd.weight_in_root_coords(b).unwrap().into_iter().sum();
                ha.cmp(&hb).then_with(|| a.coords().cmp(b.coords()))
            })
            .cloned()
            .expect("nonempty");
        let mult = product[&nu];
        if mult < 0 || !nu.is_dominant() {
            return Err(Error::Internal(format!(
                "character peeling produced an invalid summand {nu} x {mult}"
            )));
        }
        let nu_char = match char_cache.get(&nu) {
            Some(c) => c.clone(),
            None => {
                let c = weight_multiplicities(cd, &nu, cap)?;
                char_cache.insert(nu.clone(), c.clone());
                c
            }
        };
        for (w, &m) in &nu_char {
            let entry = product.entry(w.clone()).or_insert(0);
            *entry -= mult * m as i64;
            if *entry == 0 {
                product.remove(w);
            }
        }
        let dim_nu: u64 = nu_char.values().sum();
        summands.push(FusionSummand {
            casimir: cd.casimir_eigenvalue(&nu)?,
            weight: nu,
            multiplicity: mult as u64,
            dim: dim_nu,
        });
    }

    sort_summands(&mut summands);
    let multiplicity_free = summands.iter().all(|s| s.multiplicity == 1);
    Ok(FusionDecomposition {
        base_weight: lambda.clone(),
        summands,
        multiplicity_free,
    })
}

// ---- Concrete isotypic decomposition ----

/// Incremental echelon span over the field, for membership tests during
/// component generation.
struct RowSpan {
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    fn new() -> Self {
        RowSpan {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, mut v: Vec<FieldElement>) -> Vec<FieldElement> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        v
    }

    /// Insert if independent; returns whether the span grew.
    fn insert(&mut self, v: Vec<FieldElement>) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        let normalized: Vec<FieldElement> = r.iter().map(|x| x * &inv).collect();
        self.rows.push(normalized);
        self.pivots.push(p);
        true
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

/// Generate the isotypic components of a multiplicity-free tensor square
/// from its highest-weight vectors: each component is the closure of its
/// highest-weight vector under all lowering operators, and the projectors
/// come from the resulting direct-sum basis.
///
/// Errors with [`Error::Multiplicity`] when two independent highest-weight
/// vectors share a weight (the spectral construction assumes each summand
/// occurs once).
pub fn isotypic_decomposition(square: &QModule) -> Result<Vec<IsotypicComponent>> {
    let hwvs = square.highest_weight_vectors();
    for pair in hwvs.windows(2) {
        if pair[0].weight == pair[1].weight {
            return Err(Error::Multiplicity(pair[0].weight.coords().to_vec()));
        }
    }

    let dim = square.dim();
    let rank = square.cartan().rank();
    let mut bases: Vec<(Weight, Vec<Vec<FieldElement>>)> = Vec::new();
    let mut total = 0usize;
    for hw in &hwvs {
        let mut span = RowSpan::new();
        let mut basis: Vec<Vec<FieldElement>> = Vec::new();
        let mut queue: Vec<Vec<FieldElement>> = vec![hw.coeffs.clone()];
        span.insert(hw.coeffs.clone());
        basis.push(hw.coeffs.clone());
        while let Some(v) = queue.pop() {
            for i in 1..=rank {
                let lowered = square.apply(Generator::F, i, &v);
                if lowered.iter().all(|x| x.is_zero()) {
                    continue;
                }
                if span.insert(lowered.clone()) {
                    basis.push(lowered.clone());
                    queue.push(lowered);
                }
            }
        }
        total += span.len();
        bases.push((hw.weight.clone(), basis));
    }
    if total != dim {
        return Err(Error::Internal(format!(
            "component generation spanned {total} of {dim} dimensions"
        )));
    }

    // change of basis: columns are the component vectors, in order
    let mut change = QMat::zeros(dim, dim);
    let mut col = 0;
    for (_, basis) in &bases {
        for v in basis {
            for (r, x) in v.iter().enumerate() {
                change.set(r, col, x.clone());
            }
            col += 1;
        }
    }
    let change_inv = change
        .inverse()
        .map_err(|_| Error::Internal("direct-sum basis is singular; components overlap".into()))?;

    let mut components = Vec::new();
    let mut offset = 0;
    for (weight, basis) in bases {
        let width = basis.len();
        // selector for this block of columns
        let mut selector = QMat::zeros(dim, dim);
        for j in offset..offset + width {
            selector.set(j, j, FieldElement::one_with_order(square.root_order()));
        }
        let projector = change.mul(&selector).mul(&change_inv);
        components.push(IsotypicComponent {
            weight,
            basis,
            projector,
        });
        offset += width;
    }
    Ok(components)
}
