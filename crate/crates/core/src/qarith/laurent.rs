//! Dense Laurent polynomials in one variable over the rationals.
//!
//! A `LaurentPoly` stores coefficients contiguously from `min_exp` upward.
//! Invariant: `coeffs` is empty for the zero polynomial; otherwise its first
//! and last entries are nonzero. Exponent ranges stay small at desk scale,
//! so the dense layout beats a map.

use crate::Rat;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Rat::one(), 0)
    }

    /// The monomial `c * s^exp`. Zero coefficient gives the zero polynomial.
    pub fn monomial(c: Rat, exp: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                min_exp: exp,
                coeffs: vec![c],
            }
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let terms: Vec<(i64, Rat)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let min_exp = terms.iter().map(|(e, _)| *e).min().unwrap();
        let max_exp = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rat::zero(); (max_exp - min_exp) as usize + 1];
        for (e, c) in terms {
            let i = (e - min_exp) as usize;
            coeffs[i] = &coeffs[i] + c;
        }
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True if the polynomial has exactly one term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        debug_assert!(!self.is_zero());
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        if self.is_zero() || exp < self.min_exp || exp > self.max_exp() {
            Rat::zero()
        } else {
            self.coeffs[(exp - self.min_exp) as usize].clone()
        }
    }

    /// Iterate `(exponent, coefficient)` over nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        let min = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (min + i as i64, c))
    }

    /// Leading (highest-exponent) coefficient. Panics on zero.
    pub fn leading_coeff(&self) -> &Rat {
        self.coeffs
            .last()
            .expect("leading_coeff of zero polynomial")
    }

    /// Multiply by the monomial `s^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Substitute `s -> s^k` for `k >= 1` (exponent dilation).
    pub fn dilated(&self, k: i64) -> Self {
        assert!(k >= 1);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// The bar involution `s -> s^{-1}` (exponent negation).
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Evaluate at `s = 1` (sum of coefficients).
    pub fn eval_at_one(&self) -> Rat {
        self.coeffs.iter().fold(Rat::zero(), |a, c| a + c)
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Reduce to ordinary polynomial division on shifted copies.
        let (q, r) = div_rem_poly(&self.coeffs, &rhs.coeffs);
        if !r.is_empty() {
            return None;
        }
        let mut out = LaurentPoly {
            min_exp: self.min_exp - rhs.min_exp,
            coeffs: q,
        };
        out.normalize();
        Some(out)
    }

    /// Monic gcd of the underlying ordinary polynomials (exponents shifted
    /// so both arguments start at 0). The result carries no monomial factor:
    /// `gcd.min_exp() == 0`.
    pub fn gcd(&self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return monic_at_zero(rhs);
        }
        if rhs.is_zero() {
            return monic_at_zero(self);
        }
        let mut a = self.coeffs.clone();
        let mut b = rhs.coeffs.clone();
        while !b.is_empty() {
            // monic divisor keeps remainder-sequence coefficients tame
            let lead = b.last().unwrap().clone();
            if !lead.is_one() {
                for c in &mut b {
                    *c = &*c / &lead;
                }
            }
            let (_, r) = div_rem_poly(&a, &b);
            a = b;
            b = r;
        }
        let mut g = LaurentPoly {
            min_exp: 0,
            coeffs: a,
        };
        g.normalize();
        let lead = g.leading_coeff().clone();
        g.scaled(&lead.recip())
    }
}

fn monic_at_zero(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let mut q = p.clone();
    q.min_exp = 0;
    let lead = q.leading_coeff().clone();
    q.scaled(&lead.recip())
}

/// Ordinary polynomial division with remainder on coefficient vectors
/// (ascending degree, no trailing zeros). Returns (quotient, remainder).
fn div_rem_poly(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let lead_b = &b[db];
    let mut r: Vec<Rat> = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let dq = r.len() - 1 - db;
    let mut q = vec![Rat::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let dr = r.len() - 1;
        if dr < db + k {
            continue;
        }
        let c = &r[dr] / lead_b;
        q[k] = c.clone();
        for j in 0..=db {
            r[k + j] = &r[k + j] - &c * &b[j];
        }
        while r.last().is_some_and(Rat::is_zero) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    (q, r)
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min_exp = self.min_exp.min(rhs.min_exp);
        let max_exp = self.max_exp().max(rhs.max_exp());
        let mut coeffs = vec![Rat::zero(); (max_exp - min_exp) as usize + 1];
        for (e, c) in self.terms() {
            coeffs[(e - min_exp) as usize] = c.clone();
        }
        for (e, c) in rhs.terms() {
            let i = (e - min_exp) as usize;
            coeffs[i] = &coeffs[i] + c;
        }
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        let mut p = LaurentPoly {
            min_exp: self.min_exp + rhs.min_exp,
            coeffs,
        };
        p.normalize();
        p
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
