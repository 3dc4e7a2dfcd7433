//! Truncated power series in the deformation parameter `h`, used for the
//! expansion `q = e^h`.

use super::field::FieldElement;
use super::laurent::LaurentPoly;
use crate::error::Result;
use crate::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// `c_0 + c_1 h + ... + c_K h^K (mod h^(K+1))` with exact rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    /// Truncation order K (series is taken mod h^(K+1)).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Series inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Option<Self> {
        if self.coeffs[0].is_zero() {
            return None;
        }
        let k = self.order();
        let c0 = self.coeffs[0].recip();
        let mut out = vec![Rat::zero(); k + 1];
        out[0] = c0.clone();
        for j in 1..=k {
            let mut acc = Rat::zero();
            for i in 1..=j {
                acc += &self.coeffs[i] * &out[j - i];
            }
            out[j] = -(acc * &c0);
        }
        Some(TruncatedSeries { coeffs: out })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let k = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=k).map(|j| self.coeff(j) + rhs.coeff(j)).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let k = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=k).map(|j| self.coeff(j) - rhs.coeff(j)).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let k = self.order().min(rhs.order());
        let mut coeffs = vec![Rat::zero(); k + 1];
        for i in 0..=k {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=(k - i) {
                coeffs[i + j] = &coeffs[i + j] + self.coeff(i) * rhs.coeff(j);
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.order();
        let mut first = true;
        for j in 0..=k {
            let c = self.coeff(j);
            if c.is_zero() && !(j == 0 && self.is_zero()) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*h")?,
                _ => write!(f, "{c}*h^{j}")?,
            }
            first = false;
        }
        write!(f, " + O(h^{})", k + 1)
    }
}

/// Taylor-expand a Laurent polynomial in `s = q^(1/D)` at `q = e^h`:
/// each monomial `c * s^k` contributes `c * exp(kh/D)`.
fn poly_series(p: &LaurentPoly, root_order: u32, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rat::zero(); order + 1];
    let d = Rat::from_integer(BigInt::from(root_order));
    for (e, c) in p.terms() {
        let rate = Rat::from_integer(BigInt::from(e)) / &d;
        let mut pow = Rat::one(); // rate^j / j!
        for (j, item) in coeffs.iter_mut().enumerate() {
            if j > 0 {
                pow = pow * &rate / Rat::from_integer(BigInt::from(j));
            }
            *item = &*item + c * &pow;
        }
    }
    TruncatedSeries { coeffs }
}

/// Expand a field element at `q = e^h` to the given truncation order.
/// Errors when the element has a pole at `q = 1`.
pub fn expand_at_q_exp_h(x: &FieldElement, order: usize) -> Result<TruncatedSeries> {
    let den_at_one = x.denominator().eval_at_one();
    if den_at_one.is_zero() {
        return Err(crate::error::Error::PoleAtQOne(
            FieldElement::from_poly(x.denominator().clone(), x.root_order()).canonical_text(),
        ));
    }
    let num = poly_series(x.numerator(), x.root_order(), order);
    let den = poly_series(x.denominator(), x.root_order(), order);
    Ok(&num * &den.inv().expect("nonzero constant term"))
}
