//! Exact elements of the fraction field of Laurent polynomials in
//! `s = q^(1/D)` over the rationals.
//!
//! Every element is a reduced ratio `num / den`:
//! - `den` is nonzero, has lowest exponent 0, and is monic (leading
//!   coefficient 1);
//! - the ordinary-polynomial gcd of `num` and `den` is trivial.
//!
//! This representation is canonical, so structural equality after lifting
//! to a common root order decides field equality. Elements with different
//! root orders lift automatically to the lcm under arithmetic.

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};
use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub struct FieldElement {
    num: LaurentPoly,
    den: LaurentPoly,
    root_order: u32,
}

impl FieldElement {
    // ---- Constructors ----

    pub fn zero_with_order(root_order: u32) -> Self {
        FieldElement {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
            root_order,
        }
    }

    pub fn one_with_order(root_order: u32) -> Self {
        FieldElement {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
            root_order,
        }
    }

    /// `c * s^exp` where `s = q^(1/root_order)`.
    pub fn monomial(c: Rat, exp: i64, root_order: u32) -> Self {
        assert!(root_order >= 1);
        FieldElement {
            num: LaurentPoly::monomial(c, exp),
            den: LaurentPoly::one(),
            root_order,
        }
    }

    pub fn constant(c: Rat, root_order: u32) -> Self {
        Self::monomial(c, 0, root_order)
    }

    pub fn from_integer(n: i64, root_order: u32) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(n)), root_order)
    }

    /// The power `q^e` for a rational exponent `e`; requires `e * root_order`
    /// to be an integer.
    pub fn q_power(e: &Rat, root_order: u32) -> Result<Self> {
        let scaled = e * Rat::from_integer(BigInt::from(root_order));
        if !scaled.is_integer() {
            return Err(Error::UnsupportedCartan(format!(
                "exponent q^({e}) is not an integer power of the chosen root s = q^(1/{root_order})"
            )));
        }
        let exp: i64 = big_to_i64(&scaled.to_integer())?;
        Ok(Self::monomial(Rat::one(), exp, root_order))
    }

    pub fn from_poly(num: LaurentPoly, root_order: u32) -> Self {
        FieldElement {
            num,
            den: LaurentPoly::one(),
            root_order,
        }
    }

    /// Reduced ratio of two Laurent polynomials. Panics if `den` is zero;
    /// use [`FieldElement::div`] for a checked version.
    pub fn from_ratio(num: LaurentPoly, den: LaurentPoly, root_order: u32) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut x = FieldElement {
            num,
            den,
            root_order,
        };
        x.reduce();
        x
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        // Move the denominator's monomial factor into the numerator.
        let k = self.den.min_exp();
        if k != 0 {
            self.den = self.den.shifted(-k);
            self.num = self.num.shifted(-k);
        }
        let m = self.num.min_exp();
        let num_ord = self.num.shifted(-m);
        let g = num_ord.gcd(&self.den);
        if !g.is_one() {
            self.num = num_ord.div_exact(&g).expect("gcd divides").shifted(m);
            self.den = self.den.div_exact(&g).expect("gcd divides");
        }
        let lead = self.den.leading_coeff().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scaled(&inv);
            self.den = self.den.scaled(&inv);
        }
    }

    // ---- Queries ----

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Decompose as a single term `c * s^exp`, if the element is one.
    pub fn as_monomial(&self) -> Option<(Rat, i64)> {
        if self.den.is_one() && self.num.is_monomial() {
            Some((self.num.coeff(self.num.min_exp()), self.num.min_exp()))
        } else {
            None
        }
    }

    // ---- Root-order lifting ----

    /// Re-express in `s' = q^(1/order)`; `order` must be a multiple of the
    /// current root order.
    pub fn with_root_order(&self, order: u32) -> Self {
        assert!(
            order.is_multiple_of(self.root_order),
            "root order {} does not divide {}",
            self.root_order,
            order
        );
        let k = (order / self.root_order) as i64;
        if k == 1 {
            return self.clone();
        }
        FieldElement {
            num: self.num.dilated(k),
            den: self.den.dilated(k),
            root_order: order,
        }
    }

    fn common_order(&self, rhs: &Self) -> u32 {
        self.root_order.lcm(&rhs.root_order)
    }

    // ---- Field operations ----

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_ratio(
            self.den.clone(),
            self.num.clone(),
            self.root_order,
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = Self::one_with_order(self.root_order);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Square root of a monomial `c * s^(2k)` with `c` a square of a
    /// rational; this is the only root the spectral construction needs.
    pub fn sqrt_monomial(&self) -> Result<Self> {
        let (c, exp) = self
            .as_monomial()
            .ok_or_else(|| Error::SqrtUnsupported(format!("{self} is not a monomial")))?;
        if exp % 2 != 0 {
            return Err(Error::SqrtUnsupported(format!("odd exponent in {self}")));
        }
        if c.is_negative() {
            return Err(Error::SqrtUnsupported(format!(
                "negative coefficient in {self}"
            )));
        }
        let sn = c.numer().sqrt();
        let sd = c.denom().sqrt();
        if &(&sn * &sn) != c.numer() || &(&sd * &sd) != c.denom() {
            return Err(Error::SqrtUnsupported(format!(
                "coefficient of {self} is not a rational square"
            )));
        }
        Ok(Self::monomial(Rat::new(sn, sd), exp / 2, self.root_order))
    }

    /// The bar involution `s -> s^{-1}`.
    pub fn bar(&self) -> Self {
        Self::from_ratio(self.num.bar(), self.den.bar(), self.root_order)
    }

    /// Evaluate at `q = 1`; errors when the denominator vanishes there
    /// (a genuine pole, since the representation is reduced).
    pub fn eval_at_one(&self) -> Result<Rat> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtQOne(render_poly(&self.den, self.root_order)));
        }
        Ok(self.num.eval_at_one() / d)
    }

    // ---- Canonical text ----

    /// Canonical rendering: terms `c*q^(a/b)` with strictly decreasing
    /// exponents; ratios parenthesized as `(num)/(den)`. Round-trips
    /// bit-exactly through [`FieldElement::parse`].
    pub fn canonical_text(&self) -> String {
        if self.den.is_one() {
            render_poly(&self.num, self.root_order)
        } else {
            format!(
                "({})/({})",
                render_poly(&self.num, self.root_order),
                render_poly(&self.den, self.root_order)
            )
        }
    }

    /// Parse the canonical rendering back; `root_order` supplies the ring
    /// the text is interpreted in.
    pub fn parse(text: &str, root_order: u32) -> Result<Self> {
        let mut p = Parser {
            chars: text.as_bytes(),
            pos: 0,
            root_order,
        };
        let value = p.element()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!(
                "trailing input at byte {} in {text:?}",
                p.pos
            )));
        }
        Ok(value)
    }
}

// ---- Arithmetic trait impls (by reference; value forms delegate) ----

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let order = self.common_order(rhs);
        let a = self.with_root_order(order);
        let b = rhs.with_root_order(order);
        if a.den.is_one() && b.den.is_one() {
            return FieldElement::from_poly(&a.num + &b.num, order);
        }
        let num = &(&a.num * &b.den) + &(&b.num * &a.den);
        let den = &a.den * &b.den;
        FieldElement::from_ratio(num, den, order)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            num: -&self.num,
            den: self.den.clone(),
            root_order: self.root_order,
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let order = self.common_order(rhs);
        let a = self.with_root_order(order);
        let b = rhs.with_root_order(order);
        if a.den.is_one() && b.den.is_one() {
            return FieldElement::from_poly(&a.num * &b.num, order);
        }
        // cross-reduce before multiplying to keep gcd operands small
        let (na, db) = cancel(&a.num, &b.den);
        let (nb, da) = cancel(&b.num, &a.den);
        let mut out = FieldElement {
            num: &na * &nb,
            den: &da * &db,
            root_order: order,
        };
        out.reduce();
        out
    }
}

/// Divide a common factor out of a numerator/denominator pair from
/// different fractions.
fn cancel(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if num.is_zero() || den.is_one() {
        return (num.clone(), den.clone());
    }
    let shift = num.min_exp();
    let g = num.shifted(-shift).gcd(den);
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (
            num.shifted(-shift)
                .div_exact(&g)
                .expect("gcd divides")
                .shifted(shift),
            den.div_exact(&g).expect("gcd divides"),
        )
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Div for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.checked_div(rhs)
            .expect("division by zero field element")
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        &self / &rhs
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        let order = self.common_order(other);
        let a = self.with_root_order(order);
        let b = other.with_root_order(order);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for FieldElement {}

impl Zero for FieldElement {
    fn zero() -> Self {
        Self::zero_with_order(1)
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
}

impl One for FieldElement {
    fn one() -> Self {
        Self::one_with_order(1)
    }
    fn is_one(&self) -> bool {
        FieldElement::is_one(self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

// ---- Rendering ----

fn render_poly(p: &LaurentPoly, root_order: u32) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut terms: Vec<(i64, Rat)> = p.terms().map(|(e, c)| (e, c.clone())).collect();
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    for (i, (exp, coeff)) in terms.iter().enumerate() {
        let negative = coeff.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&render_term(&coeff.abs(), *exp, root_order));
    }
    out
}

fn render_term(coeff_abs: &Rat, s_exp: i64, root_order: u32) -> String {
    if s_exp == 0 {
        return render_rat(coeff_abs);
    }
    let q_exp = Rat::new(BigInt::from(s_exp), BigInt::from(root_order));
    let body = if q_exp.is_one() {
        "q".to_string()
    } else {
        format!("q^({})", render_rat(&q_exp))
    };
    if coeff_abs.is_one() {
        body
    } else {
        format!("{}*{}", render_rat(coeff_abs), body)
    }
}

fn render_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn big_to_i64(x: &BigInt) -> Result<i64> {
    i64::try_from(x.clone()).map_err(|_| Error::Parse(format!("exponent {x} out of range")))
}

// ---- Parsing ----

struct Parser<'a> {
    chars: &'a [u8],
    pos: usize,
    root_order: u32,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos] == b' ' {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {:?} at byte {} in {:?}",
                c as char,
                self.pos,
                String::from_utf8_lossy(self.chars)
            )))
        }
    }

    fn element(&mut self) -> Result<FieldElement> {
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.expect(b'(')?;
            let num = self.poly()?;
            self.expect(b')')?;
            self.skip_ws();
            self.expect(b'/')?;
            self.skip_ws();
            self.expect(b'(')?;
            let den = self.poly()?;
            self.expect(b')')?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(FieldElement::from_ratio(num, den, self.root_order))
        } else {
            Ok(FieldElement::from_poly(self.poly()?, self.root_order))
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut sign = if self.peek() == Some(b'-') {
            self.pos += 1;
            -1i64
        } else {
            1
        };
        loop {
            self.skip_ws();
            let (exp, coeff) = self.term()?;
            let signed = if sign < 0 { -coeff } else { coeff };
            terms.push((exp, signed));
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    /// One term: `c`, `c*q^(a/b)`, `q`, `q^(a/b)`, with `c` a rational.
    fn term(&mut self) -> Result<(i64, Rat)> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.rational()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                return Ok((0, c));
            }
            c
        } else {
            Rat::one()
        };
        self.expect(b'q')?;
        let q_exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.expect(b'(')?;
            let e = self.signed_rational()?;
            self.expect(b')')?;
            e
        } else {
            Rat::one()
        };
        let s_exp = &q_exp * Rat::from_integer(BigInt::from(self.root_order));
        if !s_exp.is_integer() {
            return Err(Error::Parse(format!(
                "exponent q^({q_exp}) not representable with root order {}",
                self.root_order
            )));
        }
        Ok((big_to_i64(&s_exp.to_integer())?, coeff))
    }

    fn signed_rational(&mut self) -> Result<Rat> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            Ok(-self.rational()?)
        } else {
            self.rational()
        }
    }

    fn rational(&mut self) -> Result<Rat> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            // Only consume '/' when a digit follows: a ratio-of-polynomials
            // slash is always followed by '('.
            if self
                .chars
                .get(self.pos + 1)
                .is_some_and(|c| c.is_ascii_digit())
            {
                self.pos += 1;
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator in rational".into()));
                }
                return Ok(Rat::new(n, d));
            }
        }
        Ok(Rat::from_integer(n))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!(
                "expected integer at byte {} in {:?}",
                start,
                String::from_utf8_lossy(self.chars)
            )));
        }
        std::str::from_utf8(&self.chars[start..self.pos])
            .unwrap()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn fe(terms: &[(i64, i64)], order: u32) -> FieldElement {
        FieldElement::from_poly(
            LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c, 1)))),
            order,
        )
    }

    #[test]
    fn reduction_is_canonical() {
        // (s^2 - 1)/(s - 1) reduces to s + 1
        let num = fe(&[(2, 1), (0, -1)], 1);
        let den = fe(&[(1, 1), (0, -1)], 1);
        let x = num.checked_div(&den).unwrap();
        assert_eq!(x, fe(&[(1, 1), (0, 1)], 1));
        assert!(x.is_polynomial());
    }

    #[test]
    fn inverse_roundtrip() {
        let x = FieldElement::from_ratio(
            LaurentPoly::from_terms(vec![(3, rat(2, 1)), (-1, rat(5, 7))]),
            LaurentPoly::from_terms(vec![(2, rat(1, 1)), (0, rat(4, 3))]),
            2,
        );
        let y = &x * &x.inv().unwrap();
        assert!(y.is_one());
    }

    #[test]
    fn root_order_lifting() {
        let a = FieldElement::monomial(rat(1, 1), 1, 2); // q^(1/2)
        let b = FieldElement::monomial(rat(1, 1), 1, 3); // q^(1/3)
        let prod = &a * &b;
        assert_eq!(prod.root_order(), 6);
        assert_eq!(prod, FieldElement::monomial(rat(1, 1), 5, 6)); // q^(5/6)
        assert_eq!(a, FieldElement::monomial(rat(1, 1), 2, 4));
    }

    #[test]
    fn sqrt_of_monomial() {
        let x = FieldElement::monomial(rat(9, 4), 6, 4);
        let r = x.sqrt_monomial().unwrap();
        assert_eq!(r, FieldElement::monomial(rat(3, 2), 3, 4));
        assert!(fe(&[(1, 1), (0, 1)], 4).sqrt_monomial().is_err());
        assert!(FieldElement::monomial(rat(1, 1), 3, 4)
            .sqrt_monomial()
            .is_err());
        assert!(FieldElement::monomial(rat(2, 1), 2, 4)
            .sqrt_monomial()
            .is_err());
    }

    #[test]
    fn eval_at_one_and_poles() {
        let x = fe(&[(2, 1), (0, 1)], 1); // s^2 + 1
        assert_eq!(x.eval_at_one().unwrap(), rat(2, 1));
        // 1/(s - 1) has a pole at q = 1
        let pole = fe(&[(0, 1)], 1)
            .checked_div(&fe(&[(1, 1), (0, -1)], 1))
            .unwrap();
        assert!(matches!(pole.eval_at_one(), Err(Error::PoleAtQOne(_))));
        // (s - s^-1)/(s - s^-1) = 1 has no pole
        let d = fe(&[(1, 1), (-1, -1)], 1);
        assert_eq!(d.checked_div(&d).unwrap().eval_at_one().unwrap(), rat(1, 1));
    }

    #[test]
    fn canonical_text_examples() {
        // q + q^(-1) with root order 1
        let x = fe(&[(1, 1), (-1, 1)], 1);
        assert_eq!(x.canonical_text(), "q + q^(-1)");
        // q^(3/2) with root order 4 is s^6
        let t = FieldElement::monomial(rat(1, 1), 6, 4);
        assert_eq!(t.canonical_text(), "q^(3/2)");
        assert_eq!(FieldElement::zero_with_order(4).canonical_text(), "0");
        let c = FieldElement::monomial(rat(-3, 2), 0, 4);
        assert_eq!(c.canonical_text(), "-3/2");
        let m = FieldElement::monomial(rat(5, 3), -4, 4);
        assert_eq!(m.canonical_text(), "5/3*q^(-1)");
    }

    #[test]
    fn text_roundtrip() {
        let samples = [
            fe(&[(1, 1), (-1, 1)], 1),
            fe(&[(6, 1), (0, -2), (-3, 7)], 4),
            fe(&[(2, 3), (0, -1)], 4)
                .checked_div(&fe(&[(5, 1), (0, 4)], 4))
                .unwrap(),
            FieldElement::zero_with_order(2),
            FieldElement::monomial(rat(-1, 1), 1, 2),
        ];
        for x in &samples {
            let text = x.canonical_text();
            let back = FieldElement::parse(&text, x.root_order()).unwrap();
            assert_eq!(&back, x, "roundtrip failed for {text}");
            assert_eq!(back.canonical_text(), text);
        }
    }
}
