//! Weight multiplicities by the Freudenthal recursion, and dimensions
//! derived from them. Used as the character oracle behind the general
//! tensor-square decomposition.

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};
use crate::Rat;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// All weights of the irreducible module `V(lambda)` with their
/// multiplicities. `cap` bounds the dimension.
pub fn weight_multiplicities(
    cd: &CartanData,
    lambda: &Weight,
    cap: usize,
) -> Result<BTreeMap<Weight, u64>> {
    if !lambda.is_dominant() {
        return Err(Error::NonDominantWeight(lambda.coords().to_vec()));
    }
    let positives = cd.positive_roots();
    let rho = cd.weyl_vector();
    let simples: Vec<Weight> = (1..=cd.rank())
        .map(|i| cd.simple_root(i).expect("in range"))
        .collect();

    let lambda_shift = lambda.add(&rho);
    let top_norm = cd.weight_inner_product(&lambda_shift, &lambda_shift)?;

    let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
    mults.insert(lambda.clone(), 1);
    let mut level: Vec<Weight> = vec![lambda.clone()];
    let mut dim: u64 = 1;

    while !level.is_empty() {
        // candidates one step further down the root lattice
        let mut candidates: Vec<Weight> = Vec::new();
        for w in &level {
            for alpha in &simples {
                let cand = w.sub(alpha);
                if !candidates.contains(&cand) && !mults.contains_key(&cand) {
                    candidates.push(cand);
                }
            }
        }
        candidates.sort();
        let mut next = Vec::new();
        for mu in candidates {
            let mu_shift = mu.add(&rho);
            let denom = &top_norm - cd.weight_inner_product(&mu_shift, &mu_shift)?;
            if denom.is_zero() {
                // only lambda itself satisfies this inside the weight system
                continue;
            }
            // depth of mu below lambda in simple-root coordinates; bounds
            // how far any root string can climb before leaving the cone
            let depth: Vec<Rat> = cd.weight_in_root_coords(&lambda.sub(&mu))?;
            // 2 * sum over positive roots and k >= 1 of m(mu + k a) <mu + k a, a>
            let mut acc = Rat::zero();
            for alpha in &positives {
                let alpha_coords = cd.weight_in_root_coords(alpha)?;
                let k_max = depth
                    .iter()
                    .zip(&alpha_coords)
                    .filter(|(_, b)| !b.is_zero())
                    .map(|(c, b)| (c / b).floor().to_integer())
                    .min()
                    .unwrap_or_else(|| BigInt::from(0));
                let k_max = i64::try_from(k_max).unwrap_or(0);
                for k in 1..=k_max {
                    let shifted = mu.add(&alpha.scaled(k));
                    if let Some(&m) = mults.get(&shifted) {
                        let pairing = cd.weight_inner_product(&shifted, alpha)?;
                        acc += pairing * Rat::from_integer(BigInt::from(m));
                    }
                }
            }
            let value = Rat::from_integer(BigInt::from(2)) * acc / denom;
            if value.is_negative() || !value.is_integer() {
                return Err(Error::Internal(format!(
                    "Freudenthal produced non-integral multiplicity {value} at {mu}"
                )));
            }
            let m = u64::try_from(value.to_integer())
                .map_err(|_| Error::Internal("multiplicity overflow".into()))?;
            if m > 0 {
                dim += m;
                if dim as usize > cap {
                    return Err(Error::CapExceeded {
                        dim: dim as usize,
                        cap,
                    });
                }
                mults.insert(mu.clone(), m);
                next.push(mu);
            }
        }
        level = next;
    }
    Ok(mults)
}

/// Dimension of `V(lambda)` as the sum of its weight multiplicities.
pub fn dimension(cd: &CartanData, lambda: &Weight, cap: usize) -> Result<u64> {
    Ok(weight_multiplicities(cd, lambda, cap)?.values().sum())
}
