//! Twist scalars, braiding spectra, and assembly of the braiding operator
//! on a tensor square via its spectral decomposition.
//!
//! On the isotypic component `X` of `V (x) V`, the squared braiding acts by
//! the twist ratio `q^(chi_X - 2 chi_V)` (with `chi` the Casimir
//! eigenvalue), so the braiding itself is `sum_X eps(X) q^((chi_X - 2
//! chi_V)/2) P[X]` for signs `eps(X)`. The sign of each component is read
//! off from the classical limit: at `q = 1` the braiding degenerates to
//! the flip, whose eigenvalue on the specialized highest-weight vector of
//! `X` is `eps(X)`. Assembly is gated by an exact verification suite
//! (intertwiner property, eigenvalue law, top-vector normalization,
//! classical flip limit, Yang-Baxter); a braiding that fails any check is
//! never handed out.

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};
use crate::fusion::{isotypic_decomposition, IsotypicComponent};
use crate::matrix::QMat;
use crate::qarith::{FieldElement, LaurentPoly};
use crate::qmodule::{Generator, QModule};
use crate::Rat;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt::Write as _;

// ---- Twist scalars ----

/// The twist scalar `q^(<lambda, lambda + 2 rho>)` of the simple module
/// with highest weight `lambda`.
///
/// The central ribbon element itself acts by the reciprocal scalar
/// `q^(-<lambda, lambda + 2 rho>)`; the braiding only ever sees twist
/// ratios, so that convention drops out of every assembled operator.
pub fn twist_scalar(cd: &CartanData, lambda: &Weight, root_order: u32) -> Result<FieldElement> {
    let chi = cd.casimir_eigenvalue(lambda)?;
    FieldElement::q_power(&chi, root_order)
}

/// Table of twist scalars, one per dominant weight.
#[derive(Clone, Debug)]
pub struct TwistTable {
    pub entries: Vec<(Weight, FieldElement)>,
}

impl TwistTable {
    pub fn for_weights(cd: &CartanData, weights: &[Weight], root_order: u32) -> Result<Self> {
        let entries = weights
            .iter()
            .map(|w| Ok((w.clone(), twist_scalar(cd, w, root_order)?)))
            .collect::<Result<_>>()?;
        Ok(TwistTable { entries })
    }

    pub fn get(&self, w: &Weight) -> Option<&FieldElement> {
        self.entries.iter().find(|(ew, _)| ew == w).map(|(_, t)| t)
    }
}

/// Eigenvalue magnitude of the braiding on the `X`-component of the
/// tensor square of `V`: the positive square root of
/// `q^(chi_X) q^(-2 chi_V)`.
pub fn braiding_eigenvalue_magnitude(
    cd: &CartanData,
    lambda_v: &Weight,
    lambda_x: &Weight,
    root_order: u32,
) -> Result<FieldElement> {
    let theta_x = twist_scalar(cd, lambda_x, root_order)?;
    let theta_v = twist_scalar(cd, lambda_v, root_order)?;
    let ratio = &theta_x * &theta_v.pow(-2)?;
    ratio
        .sqrt_monomial()
        .map_err(|e| Error::Internal(format!("twist-ratio square root failed: {e}")))
}

// ---- Sign determination ----

/// Specialize a coefficient vector at `q = 1` after clearing denominators
/// and common content; the result is a nonzero rational vector.
fn specialize_vector(v: &[FieldElement], weight: &Weight) -> Result<Vec<Rat>> {
    // lcm of denominators
    let mut den_lcm = LaurentPoly::one();
    for x in v {
        let d = x.denominator();
        let g = den_lcm.gcd(d);
        den_lcm = &den_lcm.div_exact(&g).expect("gcd divides") * d;
    }
    let cleared: Vec<LaurentPoly> = v
        .iter()
        .map(|x| {
            let lift = den_lcm.div_exact(x.denominator()).expect("lcm divides");
            x.numerator() * &lift
        })
        .collect();
    // strip common polynomial content (this removes any shared power of
    // (s - 1) that would make the naive limit vanish)
    let mut content = LaurentPoly::zero();
    for p in &cleared {
        content = content.gcd(p);
    }
    let reduced: Vec<LaurentPoly> = if content.is_zero() {
        cleared
    } else {
        cleared
            .iter()
            .map(|p| p.div_exact(&content).expect("content divides"))
            .collect()
    };
    let out: Vec<Rat> = reduced.iter().map(LaurentPoly::eval_at_one).collect();
    if out.iter().all(Rat::is_zero) {
        return Err(Error::DegenerateSpecialization(weight.coords().to_vec()));
    }
    Ok(out)
}

/// Sign of the classical flip on the specialized highest-weight vector of
/// one component inside `V (x) V` with `dim V = n`.
fn flip_sign(hw: &[FieldElement], n: usize, weight: &Weight) -> Result<i8> {
    let bar = specialize_vector(hw, weight)?;
    let mut flipped = vec![Rat::zero(); bar.len()];
    for a in 0..n {
        for b in 0..n {
            flipped[a * n + b] = bar[b * n + a].clone();
        }
    }
    if flipped == bar {
        Ok(1)
    } else if flipped.iter().zip(&bar).all(|(x, y)| *x == -y) {
        Ok(-1)
    } else {
        Err(Error::CertificationFailure(format!(
            "classical limit of the highest-weight vector at {weight} is not a flip eigenvector"
        )))
    }
}

/// Signs `eps(X)`, in component order, by the classical-flip rule.
pub fn determine_signs(components: &[IsotypicComponent], dim_v: usize) -> Result<Vec<i8>> {
    components
        .iter()
        .map(|c| flip_sign(&c.basis[0], dim_v, &c.weight))
        .collect()
}

// ---- Spectrum and assembly ----

/// One summand of the braiding spectrum.
#[derive(Clone, Debug)]
pub struct SpectralComponent {
    pub weight: Weight,
    pub dim: usize,
    /// Twist scalar of the summand.
    pub twist: FieldElement,
    /// Positive eigenvalue magnitude.
    pub magnitude: FieldElement,
    pub sign: i8,
    pub projector: QMat,
}

impl SpectralComponent {
    /// The signed eigenvalue `eps(X) * magnitude`.
    pub fn eigenvalue(&self) -> FieldElement {
        if self.sign >= 0 {
            self.magnitude.clone()
        } else {
            -&self.magnitude
        }
    }
}

#[derive(Clone, Debug)]
pub struct BraidingSpectrum {
    pub base_weight: Weight,
    pub base_twist: FieldElement,
    pub dim_v: usize,
    pub root_order: u32,
    pub components: Vec<SpectralComponent>,
}

impl BraidingSpectrum {
    /// Spectrum of the braiding on the tensor square of a simple module.
    pub fn for_simple_module(v: &QModule) -> Result<Self> {
        let hw = v.highest_weight_vectors();
        if hw.len() != 1 {
            return Err(Error::UnsupportedConfiguration(format!(
                "base module is not simple: found {} highest-weight vectors",
                hw.len()
            )));
        }
        let base_weight = hw[0].weight.clone();
        let cd = v.cartan();
        let root_order = v.root_order();
        let square = v.tensor(v)?;
        let comps = isotypic_decomposition(&square)?;
        let signs = determine_signs(&comps, v.dim())?;

        let base_twist = twist_scalar(cd, &base_weight, root_order)?;
        let components = comps
            .into_iter()
            .zip(signs)
            .map(|(c, sign)| {
                Ok(SpectralComponent {
                    twist: twist_scalar(cd, &c.weight, root_order)?,
                    magnitude: braiding_eigenvalue_magnitude(
                        cd,
                        &base_weight,
                        &c.weight,
                        root_order,
                    )?,
                    dim: c.basis.len(),
                    weight: c.weight,
                    sign,
                    projector: c.projector,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidingSpectrum {
            base_weight,
            base_twist,
            dim_v: v.dim(),
            root_order,
            components,
        })
    }

    /// `sum_X eps(X) R_X P[X]` and its spectral inverse.
    pub fn assemble(&self) -> (QMat, QMat) {
        let n = self.dim_v * self.dim_v;
        let mut r = QMat::zeros(n, n);
        let mut r_inv = QMat::zeros(n, n);
        for c in &self.components {
            r = r.add(&c.projector.scaled(&c.eigenvalue()));
            let inv_eig = c.eigenvalue().inv().expect("monomial eigenvalue");
            r_inv = r_inv.add(&c.projector.scaled(&inv_eig));
        }
        (r, r_inv)
    }

    /// Spectrum report: one line per component.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "base_weight {}", self.base_weight);
        let _ = writeln!(out, "base_twist {}", self.base_twist.canonical_text());
        let _ = writeln!(out, "root_order {}", self.root_order);
        let _ = writeln!(out, "components {}", self.components.len());
        for c in &self.components {
            let _ = writeln!(
                out,
                "weight {} dim {} twist {} eigenvalue {}",
                c.weight,
                c.dim,
                c.twist.canonical_text(),
                c.eigenvalue().canonical_text()
            );
        }
        out
    }
}

/// A braiding operator together with its certificate: construction runs
/// the full exact verification suite and fails loudly on any violation.
#[derive(Clone, Debug)]
pub struct CertifiedBraiding {
    pub spectrum: BraidingSpectrum,
    pub rmatrix: QMat,
    pub rmatrix_inv: QMat,
}

impl CertifiedBraiding {
    pub fn for_simple_module(v: &QModule) -> Result<Self> {
        let spectrum = BraidingSpectrum::for_simple_module(v)?;
        let (rmatrix, rmatrix_inv) = spectrum.assemble();

        if !rmatrix.mul(&rmatrix_inv).is_identity() {
            return Err(Error::CertificationFailure("R R^-1 != 1".into()));
        }

        let square = v.tensor(v)?;
        // intertwiner property: the braiding is a module map on the square
        for g in Generator::ALL {
            for i in 1..=v.cartan().rank() {
                if !rmatrix.commutes_with(square.generator(g, i)) {
                    return Err(Error::CertificationFailure(format!(
                        "braiding fails to commute with {}_{i} on the tensor square",
                        g.label()
                    )));
                }
            }
        }

        // eigenvalue law: P[X] R^2 = q^(chi_X - 2 chi_V) P[X]
        let r2 = rmatrix.mul(&rmatrix);
        for c in &spectrum.components {
            let ratio = &c.twist * &spectrum.base_twist.pow(-2).expect("monomial");
            if c.projector.mul(&r2) != c.projector.scaled(&ratio) {
                return Err(Error::CertificationFailure(format!(
                    "squared-braiding eigenvalue law fails on component {}",
                    c.weight
                )));
            }
        }

        // top-vector normalization: R(v (x) v) = q^(<mu, mu>) v (x) v
        let hw = &v.highest_weight_vectors()[0];
        let mut top = vec![FieldElement::zero_with_order(v.root_order()); v.dim() * v.dim()];
        for a in 0..v.dim() {
            for b in 0..v.dim() {
                top[a * v.dim() + b] = &hw.coeffs[a] * &hw.coeffs[b];
            }
        }
        let pairing = v
            .cartan()
            .weight_inner_product(&spectrum.base_weight, &spectrum.base_weight)?;
        let scale = FieldElement::q_power(&pairing, v.root_order())?;
        let image = rmatrix.mul_vec(&top);
        let expected: Vec<FieldElement> = top.iter().map(|x| x * &scale).collect();
        if image != expected {
            return Err(Error::CertificationFailure(
                "top-vector normalization R(v (x) v) = q^(<mu,mu>) v (x) v fails".into(),
            ));
        }

        // classical limit: at q = 1 the braiding is the flip
        let n = v.dim();
        let classical = rmatrix
            .try_map(|x| x.eval_at_one())
            .map_err(|e| Error::CertificationFailure(format!("pole at q = 1 in braiding: {e}")))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let expected = if a == d && b == c { 1 } else { 0 };
                        if *classical.get(a * n + b, c * n + d)
                            != Rat::from_integer(BigInt::from(expected))
                        {
                            return Err(Error::CertificationFailure(
                                "braiding does not specialize to the flip at q = 1".into(),
                            ));
                        }
                    }
                }
            }
        }

        // Yang-Baxter on the triple tensor power
        if !crate::braid::yang_baxter_holds(&rmatrix, v.dim()) {
            return Err(Error::CertificationFailure(
                "Yang-Baxter equation fails".into(),
            ));
        }

        Ok(CertifiedBraiding {
            spectrum,
            rmatrix,
            rmatrix_inv,
        })
    }

    pub fn dim_v(&self) -> usize {
        self.spectrum.dim_v
    }

    pub fn root_order(&self) -> u32 {
        self.spectrum.root_order
    }
}

// ---- Diagonal operators from the weight grading ----

/// Diagonal action of the Cartan part of the universal R-matrix on
/// `M (x) N`: the scalar `q^(<mu', nu'>)` on each `M_mu' (x) N_nu'`.
pub fn exponential_factor_action(m: &QModule, n: &QModule) -> Result<QMat> {
    if m.cartan() != n.cartan() || m.root_order() != n.root_order() {
        return Err(Error::DimensionMismatch("mismatched factors".into()));
    }
    let dim = m.dim() * n.dim();
    let mut out = QMat::zeros(dim, dim);
    for (a, wm) in m.weights().iter().enumerate() {
        for (b, wn) in n.weights().iter().enumerate() {
            let pairing = m.cartan().weight_inner_product(wm, wn)?;
            out.set(
                a * n.dim() + b,
                a * n.dim() + b,
                FieldElement::q_power(&pairing, m.root_order())?,
            );
        }
    }
    Ok(out)
}

/// Diagonal action of `K_{2 rho}`: the scalar `q^(<mu, 2 rho>)` on each
/// weight space.
pub fn k2rho_action(m: &QModule) -> Result<QMat> {
    let two_rho = m.cartan().weyl_vector().scaled(2);
    let mut out = QMat::zeros(m.dim(), m.dim());
    for (idx, w) in m.weights().iter().enumerate() {
        let pairing = m.cartan().weight_inner_product(w, &two_rho)?;
        out.set(idx, idx, FieldElement::q_power(&pairing, m.root_order())?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::LieType;
    use crate::rat;

    fn a1() -> CartanData {
        CartanData::new(LieType::A, 1).unwrap()
    }

    fn qpow(num: i64, den: i64, order: u32) -> FieldElement {
        FieldElement::q_power(&rat(num, den), order).unwrap()
    }

    #[test]
    fn twist_scalars() {
        let cd = a1();
        assert_eq!(
            twist_scalar(&cd, &Weight::new(vec![1]), 4).unwrap(),
            qpow(3, 2, 4)
        );
        assert!(twist_scalar(&cd, &Weight::zero(1), 4).unwrap().is_one());
        assert_eq!(
            twist_scalar(&cd, &Weight::new(vec![2]), 4).unwrap(),
            qpow(4, 1, 4)
        );
        assert!(twist_scalar(&cd, &Weight::new(vec![-1]), 4).is_err());
    }

    #[test]
    fn twist_table_lookup() {
        let cd = a1();
        let weights: Vec<Weight> = (0..=3).map(|m| Weight::new(vec![m])).collect();
        let table = TwistTable::for_weights(&cd, &weights, 4).unwrap();
        assert_eq!(table.entries.len(), 4);
        assert_eq!(table.get(&Weight::new(vec![1])).unwrap(), &qpow(3, 2, 4));
        assert_eq!(table.get(&Weight::new(vec![2])).unwrap(), &qpow(4, 1, 4));
        assert!(table.get(&Weight::new(vec![9])).is_none());
    }

    #[test]
    fn eigenvalue_magnitudes() {
        let cd = a1();
        let v = Weight::new(vec![1]);
        assert_eq!(
            braiding_eigenvalue_magnitude(&cd, &v, &Weight::new(vec![2]), 4).unwrap(),
            qpow(1, 2, 4)
        );
        assert_eq!(
            braiding_eigenvalue_magnitude(&cd, &v, &Weight::new(vec![0]), 4).unwrap(),
            qpow(-3, 2, 4)
        );
        let zero = Weight::zero(1);
        assert!(braiding_eigenvalue_magnitude(&cd, &zero, &zero, 4)
            .unwrap()
            .is_one());
    }

    #[test]
    fn signs_by_classical_flip() {
        let v1 = QModule::sl2_simple(1, 4);
        let square = v1.tensor(&v1).unwrap();
        let comps = isotypic_decomposition(&square).unwrap();
        let signs = determine_signs(&comps, 2).unwrap();
        assert_eq!(signs, vec![1, -1]);

        let v2 = QModule::sl2_simple(2, 4);
        let square = v2.tensor(&v2).unwrap();
        let comps = isotypic_decomposition(&square).unwrap();
        let signs = determine_signs(&comps, 3).unwrap();
        assert_eq!(signs, vec![1, -1, 1]);
    }

    #[test]
    fn top_component_sign_is_positive() {
        for m in 1..=4u32 {
            let v = QModule::sl2_simple(m, 4);
            let square = v.tensor(&v).unwrap();
            let comps = isotypic_decomposition(&square).unwrap();
            let signs = determine_signs(&comps, v.dim()).unwrap();
            assert_eq!(signs[0], 1, "top component of V({m}) square");
        }
    }

    #[test]
    fn certified_braiding_v1() {
        let v1 = QModule::sl2_simple(1, 4);
        let braiding = CertifiedBraiding::for_simple_module(&v1).unwrap();
        // R(v0 (x) v0) = q^(1/2) v0 (x) v0
        let r = &braiding.rmatrix;
        assert_eq!(*r.get(0, 0), qpow(1, 2, 4));
        assert!((1..4).all(|c| r.get(0, c).is_zero()));
        assert!(r.mul(&braiding.rmatrix_inv).is_identity());
        // eigenvalues q^(1/2) on a 3-dim component, -q^(-3/2) on 1-dim
        let comps = &braiding.spectrum.components;
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].dim, 3);
        assert_eq!(comps[0].eigenvalue(), qpow(1, 2, 4));
        assert_eq!(comps[1].dim, 1);
        assert_eq!(comps[1].eigenvalue(), -&qpow(-3, 2, 4));
    }

    #[test]
    fn certified_braiding_trivial_module() {
        let v0 = QModule::sl2_simple(0, 4);
        let braiding = CertifiedBraiding::for_simple_module(&v0).unwrap();
        assert!(braiding.rmatrix.is_identity());
    }

    #[test]
    fn twist_multiplicativity_on_components() {
        // theta_V^2 * (R^2 eigenvalue) = theta_X on every component
        for m in 1..=3u32 {
            let v = QModule::sl2_simple(m, 4);
            let braiding = CertifiedBraiding::for_simple_module(&v).unwrap();
            let tv = &braiding.spectrum.base_twist;
            for c in &braiding.spectrum.components {
                let r2_eig = &c.eigenvalue() * &c.eigenvalue();
                assert_eq!(&(tv * tv) * &r2_eig, c.twist, "component {}", c.weight);
            }
        }
    }

    #[test]
    fn exponential_factor_on_v1_square() {
        let v1 = QModule::sl2_simple(1, 4);
        let e = exponential_factor_action(&v1, &v1).unwrap();
        assert!(e.is_diagonal());
        let expected = [qpow(1, 2, 4), qpow(-1, 2, 4), qpow(-1, 2, 4), qpow(1, 2, 4)];
        for (i, x) in expected.iter().enumerate() {
            assert_eq!(e.get(i, i), x);
        }

        let v0 = QModule::sl2_simple(0, 4);
        let v2 = QModule::sl2_simple(2, 4);
        assert!(exponential_factor_action(&v2, &v0).unwrap().is_identity());
    }

    #[test]
    fn top_entry_of_exponential_factor_matches_braiding() {
        // consistency of the diagonal factor with the spectral top-vector
        // normalization: entry at (top, top) is q^(<mu, nu>)
        for m in 1..=3u32 {
            let v = QModule::sl2_simple(m, 4);
            let e = exponential_factor_action(&v, &v).unwrap();
            let braiding = CertifiedBraiding::for_simple_module(&v).unwrap();
            assert_eq!(e.get(0, 0), braiding.rmatrix.get(0, 0));
        }
    }

    #[test]
    fn k2rho_diagonals() {
        let v1 = QModule::sl2_simple(1, 4);
        let k = k2rho_action(&v1).unwrap();
        assert_eq!(*k.get(0, 0), qpow(1, 1, 4));
        assert_eq!(*k.get(1, 1), qpow(-1, 1, 4));

        let v0 = QModule::sl2_simple(0, 4);
        assert!(k2rho_action(&v0).unwrap().is_identity());

        let v2 = QModule::sl2_simple(2, 4);
        let k = k2rho_action(&v2).unwrap();
        for (i, expected) in [qpow(2, 1, 4), qpow(0, 1, 4), qpow(-2, 1, 4)]
            .iter()
            .enumerate()
        {
            assert_eq!(k.get(i, i), expected);
        }
    }

    #[test]
    fn k2rho_matches_integer_k_power_product() {
        // K_{2 rho} = prod_i K_i^{2 b_i / d_i} with integer exponents
        let v2 = QModule::sl2_simple(2, 4);
        let cd = v2.cartan().clone();
        let b = cd.weyl_vector_coroot_coeffs();
        let mut product = QMat::identity(v2.dim());
        for i in 1..=cd.rank() {
            let exp = rat(2, 1) * &b[i - 1] / rat(cd.d(i), 1);
            assert!(exp.is_integer());
            let exp = i64::try_from(exp.to_integer()).unwrap();
            let base = if exp >= 0 {
                v2.k(i).clone()
            } else {
                v2.k_inv(i).clone()
            };
            for _ in 0..exp.unsigned_abs() {
                product = product.mul(&base);
            }
        }
        assert_eq!(product, k2rho_action(&v2).unwrap());
    }

    #[test]
    fn spectrum_report_contains_eigenvalues() {
        let v1 = QModule::sl2_simple(1, 4);
        let spectrum = BraidingSpectrum::for_simple_module(&v1).unwrap();
        let text = spectrum.render();
        assert!(text.contains("eigenvalue q^(1/2)"));
        assert!(text.contains("eigenvalue -q^(-3/2)"));
        assert!(text.contains("twist q^(4)"));
    }
}
