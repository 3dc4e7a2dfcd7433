//! q-integers, q-factorials, and q-binomial coefficients in the base
//! `q_i = q^(d_i)`.
//!
//! `[n]_{q_i} = (q_i^n - q_i^{-n}) / (q_i - q_i^{-1})`, extended by
//! `[0] = 0` and `[-n] = -[n]`. All three functions return Laurent
//! polynomials (the defining divisions are exact).

use super::field::FieldElement;
use super::laurent::LaurentPoly;
use crate::Rat;
use num_traits::One;

/// `[n]_{q_i}` as a field element in `s = q^(1/root_order)`.
pub fn q_integer(n: i64, d_i: i64, root_order: u32) -> FieldElement {
    assert!(d_i >= 1);
    if n == 0 {
        return FieldElement::zero_with_order(root_order);
    }
    if n < 0 {
        return -&q_integer(-n, d_i, root_order);
    }
    // Telescoped form: sum of s^(d_i * D * (n-1-2j)) for j = 0..n.
    let step = d_i * root_order as i64;
    let terms = (0..n).map(|j| (step * (n - 1 - 2 * j), Rat::one()));
    FieldElement::from_poly(LaurentPoly::from_terms(terms), root_order)
}

/// `[n]_{q_i}! = [n] [n-1] ... [1]`.
pub fn q_factorial(n: u64, d_i: i64, root_order: u32) -> FieldElement {
    let mut acc = FieldElement::one_with_order(root_order);
    for k in 1..=n {
        acc = &acc * &q_integer(k as i64, d_i, root_order);
    }
    acc
}

/// The q-binomial coefficient `[n choose k]_{q_i}`.
///
/// Panics if `k > n`; the division `[n]! / ([k]! [n-k]!)` is exact and the
/// result is a Laurent polynomial.
pub fn q_binomial(n: u64, k: u64, d_i: i64, root_order: u32) -> FieldElement {
    assert!(k <= n, "q_binomial requires 0 <= k <= n, got k={k}, n={n}");
    let num = q_factorial(n, d_i, root_order);
    let den = &q_factorial(k, d_i, root_order) * &q_factorial(n - k, d_i, root_order);
    let result = num.checked_div(&den).expect("q-factorials are nonzero");
    debug_assert!(result.is_polynomial(), "q-binomial division must be exact");
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::expand_at_q_exp_h;
    use crate::rat;

    fn poly(terms: &[(i64, i64)], order: u32) -> FieldElement {
        FieldElement::from_poly(
            LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c, 1)))),
            order,
        )
    }

    #[test]
    fn small_q_integers() {
        assert!(q_integer(0, 1, 1).is_zero());
        // [2]_q = q + q^-1
        assert_eq!(q_integer(2, 1, 1), poly(&[(1, 1), (-1, 1)], 1));
        // [3]_q = q^2 + 1 + q^-2
        assert_eq!(q_integer(3, 1, 1), poly(&[(2, 1), (0, 1), (-2, 1)], 1));
        // division oracle: [3] * (q - q^-1) = q^3 - q^-3
        let ratio = poly(&[(3, 1), (-3, -1)], 1)
            .checked_div(&poly(&[(1, 1), (-1, -1)], 1))
            .unwrap();
        assert_eq!(q_integer(3, 1, 1), ratio);
        assert_eq!(q_integer(-3, 1, 1), -&q_integer(3, 1, 1));
        // base q_i = q^2 dilates exponents
        assert_eq!(q_integer(2, 2, 1), poly(&[(2, 1), (-2, 1)], 1));
    }

    #[test]
    fn factorial_and_binomial() {
        // [2]! = [2], [3]! = [3][2]
        assert_eq!(q_factorial(2, 1, 1), q_integer(2, 1, 1));
        assert_eq!(
            q_factorial(3, 1, 1),
            &q_integer(3, 1, 1) * &q_integer(2, 1, 1)
        );
        // [2 choose 1] = [2]
        assert_eq!(q_binomial(2, 1, 1, 1), q_integer(2, 1, 1));
        // [n choose 0] = 1
        assert!(q_binomial(5, 0, 1, 1).is_one());
        // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4
        assert_eq!(
            q_binomial(4, 2, 1, 1),
            poly(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)], 1)
        );
    }

    #[test]
    fn bar_symmetry() {
        for n in 0..7 {
            assert_eq!(q_integer(n, 1, 2).bar(), q_integer(n, 1, 2));
            assert_eq!(
                q_factorial(n as u64, 1, 2).bar(),
                q_factorial(n as u64, 1, 2)
            );
        }
        for n in 0..=8u64 {
            for k in 0..=n {
                let b = q_binomial(n, k, 1, 1);
                assert_eq!(b.bar(), b);
            }
        }
    }

    #[test]
    fn q_binomial_specializes_to_binomial() {
        fn binom(n: u64, k: u64) -> i64 {
            let mut acc = 1i64;
            for j in 0..k {
                acc = acc * (n - j) as i64 / (j + 1) as i64;
            }
            acc
        }
        for n in 0..=8u64 {
            for k in 0..=n {
                let at_one = q_binomial(n, k, 1, 1).eval_at_one().unwrap();
                assert_eq!(at_one, rat(binom(n, k), 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_integer_at_one_and_expansion() {
        for n in 0..9 {
            assert_eq!(q_integer(n, 1, 1).eval_at_one().unwrap(), rat(n, 1));
        }
        // [2]_q = e^h + e^-h = 2 + h^2 + O(h^3)
        let s = expand_at_q_exp_h(&q_integer(2, 1, 1), 2).unwrap();
        assert_eq!(s.coeffs(), &[rat(2, 1), rat(0, 1), rat(1, 1)]);
    }
}
