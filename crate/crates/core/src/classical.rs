//! Classical sl2 shadow: explicit enveloping-algebra modules over the
//! rationals, the Casimir element and its 2-tensor, infinitesimal braid
//! relations, and the first-order link between the squared braiding and
//! the canonical 2-tensor.
//!
//! Normalization is fixed by `<alpha, alpha> = 2`, so the Casimir is
//! `C = EF + FE + H^2/2`, its 2-tensor is `E (x) F + F (x) E + H (x) H/2`,
//! and classical eigenvalues match `<lambda, lambda + 2 rho>` with no
//! rescaling.

use crate::error::{Error, Result};
use crate::matrix::{QMat, RatMat};
use crate::qarith::{expand_at_q_exp_h, TruncatedSeries};
use crate::Rat;
use num_bigint::BigInt;
use num_traits::Zero;

fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Explicit module over classical sl2: generator matrices over the
/// rationals satisfying `[H,E] = 2E`, `[H,F] = -2F`, `[E,F] = H`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalModule {
    pub dim: usize,
    pub e: RatMat,
    pub f: RatMat,
    pub h: RatMat,
}

impl ClassicalModule {
    /// The (m+1)-dimensional simple module in the standard weight basis:
    /// `H = diag(m, m-2, ..., -m)`, `F v_k = v_{k+1}`,
    /// `E v_k = k(m-k+1) v_{k-1}`.
    pub fn sl2_simple(m: u32) -> Self {
        let dim = m as usize + 1;
        let mut e = RatMat::zeros(dim, dim);
        let mut f = RatMat::zeros(dim, dim);
        let mut h = RatMat::zeros(dim, dim);
        for k in 0..dim {
            h.set(k, k, rint(m as i64 - 2 * k as i64));
            if k + 1 < dim {
                f.set(k + 1, k, rint(1));
                let kk = k as i64 + 1;
                e.set(k, k + 1, rint(kk * (m as i64 - kk + 1)));
            }
        }
        ClassicalModule { dim, e, f, h }
    }

    /// Check the defining relations exactly.
    pub fn verify_relations(&self) -> CheckReport {
        let mut report = CheckReport::default();
        if self.h.commutator(&self.e) != self.e.scaled(&rint(2)) {
            report.failures.push("[H, E] != 2E".into());
        }
        if self.h.commutator(&self.f) != self.f.scaled(&rint(-2)) {
            report.failures.push("[H, F] != -2F".into());
        }
        if self.e.commutator(&self.f) != self.h {
            report.failures.push("[E, F] != H".into());
        }
        report
    }

    /// Tensor product along the classical coproduct `x -> x (x) 1 + 1 (x) x`.
    pub fn tensor(&self, other: &ClassicalModule) -> ClassicalModule {
        let id_m = RatMat::identity(self.dim);
        let id_n = RatMat::identity(other.dim);
        ClassicalModule {
            dim: self.dim * other.dim,
            e: self.e.kron(&id_n).add(&id_m.kron(&other.e)),
            f: self.f.kron(&id_n).add(&id_m.kron(&other.f)),
            h: self.h.kron(&id_n).add(&id_m.kron(&other.h)),
        }
    }
}

/// Failure list shared by the classical verification routines.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Casimir operator `C = EF + FE + H^2/2` on a classical module; scalar
/// on irreducibles.
pub fn casimir_operator(m: &ClassicalModule) -> RatMat {
    let ef = m.e.mul(&m.f);
    let fe = m.f.mul(&m.e);
    let h2 =
        m.h.mul(&m.h)
            .scaled(&Rat::new(BigInt::from(1), BigInt::from(2)));
    ef.add(&fe).add(&h2)
}

/// The symmetric invariant 2-tensor on `M (x) N`, computed both ways and
/// cross-checked: the coproduct form `(C_{M(x)N} - C (x) 1 - 1 (x) C)/2`
/// must agree with the dual-basis form `E (x) F + F (x) E + H (x) H / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTensor {
    pub dim_m: usize,
    pub dim_n: usize,
    pub matrix: RatMat,
}

pub fn casimir_two_tensor(m: &ClassicalModule, n: &ClassicalModule) -> Result<TwoTensor> {
    let tensor = m.tensor(n);
    let id_m = RatMat::identity(m.dim);
    let id_n = RatMat::identity(n.dim);

    let coproduct_form = casimir_operator(&tensor)
        .sub(&casimir_operator(m).kron(&id_n))
        .sub(&id_m.kron(&casimir_operator(n)))
        .scaled(&Rat::new(BigInt::from(1), BigInt::from(2)));

    let dual_basis_form = m.e.kron(&n.f).add(&m.f.kron(&n.e)).add(
        &m.h.kron(&n.h)
            .scaled(&Rat::new(BigInt::from(1), BigInt::from(2))),
    );

    if coproduct_form != dual_basis_form {
        return Err(Error::Internal(
            "coproduct and dual-basis forms of the 2-tensor disagree".into(),
        ));
    }
    Ok(TwoTensor {
        dim_m: m.dim,
        dim_n: n.dim,
        matrix: dual_basis_form,
    })
}

// ---- Placement on tensor powers ----

/// Permutation operator on `(C^d)^(x n)` moving the content of slot `a` to
/// slot `sigma[a]` (0-based).
fn factor_permutation(d: usize, sigma: &[usize]) -> RatMat {
    let n = sigma.len();
    let total = d.pow(n as u32);
    let mut out = RatMat::zeros(total, total);
    for col in 0..total {
        // digits of col, slowest factor first
        let mut digits = vec![0usize; n];
        let mut rem = col;
        for a in (0..n).rev() {
            digits[a] = rem % d;
            rem /= d;
        }
        let mut image = vec![0usize; n];
        for a in 0..n {
            image[sigma[a]] = digits[a];
        }
        let row = image.iter().fold(0usize, |acc, &x| acc * d + x);
        out.set(row, col, rint(1));
    }
    out
}

/// Place a 2-tensor on factors `(i, j)` of `M^(x n)` (1-based, i != j)
/// by conjugating the adjacent placement with a factor permutation.
pub fn place_two_tensor(t: &TwoTensor, n: usize, i: usize, j: usize) -> Result<RatMat> {
    if t.dim_m != t.dim_n {
        return Err(Error::DimensionMismatch(
            "placement on a power needs equal factor dimensions".into(),
        ));
    }
    let d = t.dim_m;
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(Error::DimensionMismatch(format!(
            "invalid factor pair ({i}, {j}) for {n} factors"
        )));
    }
    // sigma: slot 1 -> i, slot 2 -> j, the rest fill the remaining slots
    // in ascending order
    let mut sigma = vec![usize::MAX; n];
    sigma[0] = i - 1;
    sigma[1] = j - 1;
    let mut rest: Vec<usize> = (0..n).filter(|&s| s != i - 1 && s != j - 1).collect();
    rest.sort_unstable();
    for (a, slot) in rest.into_iter().enumerate() {
        sigma[a + 2] = slot;
    }
    let perm = factor_permutation(d, &sigma);
    let perm_inv = perm.transpose(); // permutation matrices are orthogonal
    let placed = t.matrix.kron(&RatMat::identity(d.pow((n - 2) as u32)));
    Ok(perm.mul(&placed).mul(&perm_inv))
}

/// Verify the infinitesimal braid relations for the placements of `t` on
/// `M^(x n)`: symmetry `t_ij = t_ji`, locality `[t_ij, t_kl] = 0`, and the
/// mixed relation `[t_ij, t_ik + t_jk] = 0`, all as exact identities.
pub fn verify_infinitesimal_braid_relations(t: &TwoTensor, n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let mut placed = std::collections::BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                placed.insert((i, j), place_two_tensor(t, n, i, j)?);
            }
        }
    }

    for i in 1..=n {
        for j in (i + 1)..=n {
            if placed[&(i, j)] != placed[&(j, i)] {
                report.failures.push(format!("t_{i}{j} != t_{j}{i}"));
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in 1..=n {
                for l in (k + 1)..=n {
                    if i == k || i == l || j == k || j == l || (i, j) >= (k, l) {
                        continue;
                    }
                    if !placed[&(i, j)].commutes_with(&placed[&(k, l)]) {
                        report.failures.push(format!("[t_{i}{j}, t_{k}{l}] != 0"));
                    }
                }
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in 1..=n {
                if k == i || k == j {
                    continue;
                }
                let sum = placed[&(i, k)].add(&placed[&(j, k)]);
                if !placed[&(i, j)].commutes_with(&sum) {
                    report
                        .failures
                        .push(format!("[t_{i}{j}, t_{i}{k} + t_{j}{k}] != 0"));
                }
            }
        }
    }
    Ok(report)
}

// ---- First-order expansion of the squared braiding ----

/// Expand every entry of a field matrix at `q = e^h`.
pub fn expand_matrix(m: &QMat, order: usize) -> Result<Vec<Vec<TruncatedSeries>>> {
    let mut out = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            row.push(expand_at_q_exp_h(m.get(r, c), order)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// Check that the squared braiding expands as `1 + 2ht + O(h^2)`: the
/// order-0 term is the identity and the `h`-coefficient equals `2t`
/// entry by entry.
pub fn verify_first_order_expansion(
    rmatrix: &QMat,
    t: &TwoTensor,
    order: usize,
) -> Result<CheckReport> {
    let dim = t.dim_m * t.dim_n;
    if rmatrix.rows() != dim || rmatrix.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "braiding is {}x{}, 2-tensor lives on dimension {dim}",
            rmatrix.rows(),
            rmatrix.cols()
        )));
    }
    let order = order.max(2);
    let r2 = rmatrix.mul(rmatrix);
    let series = expand_matrix(&r2, order)?;
    let mut report = CheckReport::default();
    for (r, row) in series.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            let expected0 = if r == c { rint(1) } else { Rat::zero() };
            if s.coeff(0) != expected0 {
                report
                    .failures
                    .push(format!("order-0 term differs from identity at ({r},{c})"));
            }
            let expected1 = t.matrix.get(r, c) * rint(2);
            if s.coeff(1) != expected1 {
                report
                    .failures
                    .push(format!("h-coefficient differs from 2t at ({r},{c})"));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanData, LieType, Weight};
    use crate::qmodule::QModule;
    use crate::rat;
    use crate::ribbon::CertifiedBraiding;

    #[test]
    fn simple_modules_satisfy_relations() {
        for m in 0..=4 {
            let module = ClassicalModule::sl2_simple(m);
            assert!(module.verify_relations().pass(), "V({m})");
        }
        let v2 = ClassicalModule::sl2_simple(2);
        assert_eq!(*v2.h.get(0, 0), rat(2, 1));
        assert_eq!(*v2.h.get(1, 1), rat(0, 1));
        assert_eq!(*v2.h.get(2, 2), rat(-2, 1));
    }

    #[test]
    fn casimir_scalars_match_the_weight_formula() {
        let a1 = CartanData::new(LieType::A, 1).unwrap();
        for m in 0..=8u32 {
            let module = ClassicalModule::sl2_simple(m);
            let c = casimir_operator(&module);
            let expected = a1.casimir_eigenvalue(&Weight::new(vec![m as i64])).unwrap();
            assert_eq!(c, RatMat::identity(module.dim).scaled(&expected), "V({m})");
        }
    }

    #[test]
    fn casimir_is_central_on_tensor_products() {
        let v1 = ClassicalModule::sl2_simple(1);
        let v2 = ClassicalModule::sl2_simple(2);
        let t = v1.tensor(&v2);
        let c = casimir_operator(&t);
        for g in [&t.e, &t.f, &t.h] {
            assert!(c.commutes_with(g));
        }
    }

    #[test]
    fn two_tensor_forms_agree_and_flip_symmetric() {
        let v1 = ClassicalModule::sl2_simple(1);
        let v2 = ClassicalModule::sl2_simple(2);
        let t = casimir_two_tensor(&v1, &v2).unwrap();
        // flip symmetry: the explicit flip V1 (x) V2 -> V2 (x) V1 carries
        // t_{V,W} to t_{W,V}
        let mut flip = RatMat::zeros(6, 6);
        for a in 0..2 {
            for b in 0..3 {
                flip.set(b * 2 + a, a * 3 + b, rat(1, 1));
            }
        }
        let t_vw = t.matrix.clone();
        let t_wv = casimir_two_tensor(&v2, &v1).unwrap().matrix;
        assert_eq!(flip.mul(&t_vw), t_wv.mul(&flip));
    }

    #[test]
    fn two_tensor_with_trivial_factor_vanishes() {
        let v0 = ClassicalModule::sl2_simple(0);
        let v3 = ClassicalModule::sl2_simple(3);
        let t = casimir_two_tensor(&v3, &v0).unwrap();
        assert!(t.matrix.is_zero());
    }

    #[test]
    fn two_tensor_eigenvalues_on_v1_square() {
        // eigenvalues 1/2 (triple) and -3/2 (single): annihilating
        // polynomial (t - 1/2)(t + 3/2) = 0 and trace = 3/2 - 3/2... the
        // trace fixes the multiplicities: 3*(1/2) + 1*(-3/2) = 0
        let v1 = ClassicalModule::sl2_simple(1);
        let t = casimir_two_tensor(&v1, &v1).unwrap().matrix;
        let id = RatMat::identity(4);
        let a = t.sub(&id.scaled(&rat(1, 2)));
        let b = t.add(&id.scaled(&rat(3, 2)));
        assert!(a.mul(&b).is_zero());
        let trace: Rat = (0..4)
            .map(|i| t.get(i, i).clone())
            .fold(rat(0, 1), |x, y| x + y);
        assert_eq!(trace, rat(0, 1));
    }

    #[test]
    fn infinitesimal_braid_relations_hold() {
        let v1 = ClassicalModule::sl2_simple(1);
        let t = casimir_two_tensor(&v1, &v1).unwrap();
        let report = verify_infinitesimal_braid_relations(&t, 3).unwrap();
        assert!(report.pass(), "{:?}", report.failures);

        // n = 4 exercises the disjoint-pair relation
        let report = verify_infinitesimal_braid_relations(&t, 4).unwrap();
        assert!(report.pass(), "{:?}", report.failures);
    }

    #[test]
    fn non_invariant_tensor_fails_the_mixed_relation() {
        let v1 = ClassicalModule::sl2_simple(1);
        // E (x) F alone is not invariant
        let bad = TwoTensor {
            dim_m: 2,
            dim_n: 2,
            matrix: v1.e.kron(&v1.f),
        };
        let report = verify_infinitesimal_braid_relations(&bad, 3).unwrap();
        assert!(!report.pass());
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("t_12, t_13 + t_23")
                || f.contains("t_13, t_12")
                || f.contains("+")));
    }

    #[test]
    fn trivial_module_passes_trivially() {
        let v0 = ClassicalModule::sl2_simple(0);
        let t = casimir_two_tensor(&v0, &v0).unwrap();
        let report = verify_infinitesimal_braid_relations(&t, 3).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn coherence_of_the_infinitesimal_braiding() {
        // t_{U, V(x)W} = t_{UV} (x) 1 + (s (x) 1)^{-1} (1 (x) t_{UW}) (s (x) 1)
        let u = ClassicalModule::sl2_simple(1);
        let v = ClassicalModule::sl2_simple(1);
        let w = ClassicalModule::sl2_simple(2);
        let vw = v.tensor(&w);
        let lhs = casimir_two_tensor(&u, &vw).unwrap().matrix;

        let t_uv = casimir_two_tensor(&u, &v).unwrap().matrix;
        let t_uw = casimir_two_tensor(&u, &w).unwrap().matrix;
        let mut flip_uv = RatMat::zeros(4, 4);
        for a in 0..2 {
            for b in 0..2 {
                flip_uv.set(b * 2 + a, a * 2 + b, rat(1, 1));
            }
        }
        let id_w = RatMat::identity(3);
        let s = flip_uv.kron(&id_w);
        let term2 = s.transpose().mul(&RatMat::identity(2).kron(&t_uw)).mul(&s);
        let rhs = t_uv.kron(&id_w).add(&term2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn first_order_expansion_of_the_braiding_square() {
        let v1q = QModule::sl2_simple(1, 4);
        let braiding = CertifiedBraiding::for_simple_module(&v1q).unwrap();
        let v1 = ClassicalModule::sl2_simple(1);
        let t = casimir_two_tensor(&v1, &v1).unwrap();
        let report = verify_first_order_expansion(&braiding.rmatrix, &t, 2).unwrap();
        assert!(report.pass(), "{:?}", report.failures);
    }

    #[test]
    fn first_order_expansion_trivial_case() {
        let v0q = QModule::sl2_simple(0, 4);
        let braiding = CertifiedBraiding::for_simple_module(&v0q).unwrap();
        let v0 = ClassicalModule::sl2_simple(0);
        let t = casimir_two_tensor(&v0, &v0).unwrap();
        assert!(verify_first_order_expansion(&braiding.rmatrix, &t, 2)
            .unwrap()
            .pass());
    }
}
