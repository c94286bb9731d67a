//! Exact univariate polynomials in `y` with rational coefficients stored as
//! an integer vector over a single positive denominator.
//!
//! The canonical form keeps `denom > 0`, no trailing zero coefficients, and
//! `gcd(content, denom) = 1`, so structural equality is value equality. The
//! polynomial families produced by the generators all have denominators
//! dividing `n!`; [`ExactPoly::scaled_coeffs`] recovers the integer vector
//! for any requested factorial denominator.

use std::fmt;

use rug::{Complete, Integer, Rational};

use crate::bigreal::BigReal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    /// Coefficients `c_0..c_d` of `(Σ c_k y^k) / denom`, ascending powers.
    coeffs: Vec<Integer>,
    denom: Integer,
}

impl ExactPoly {
    pub fn zero() -> Self {
        ExactPoly {
            coeffs: Vec::new(),
            denom: Integer::from(1),
        }
    }

    pub fn constant(c: i64) -> Self {
        ExactPoly {
            coeffs: vec![Integer::from(c)],
            denom: Integer::from(1),
        }
        .normalized()
    }

    /// Builds `(Σ coeffs[k] y^k) / denom` and normalizes.
    pub fn with_denom(coeffs: Vec<Integer>, denom: Integer) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        ExactPoly { coeffs, denom }.normalized()
    }

    pub fn from_int_coeffs(coeffs: Vec<Integer>) -> Self {
        ExactPoly {
            coeffs,
            denom: Integer::from(1),
        }
        .normalized()
    }

    /// The monomial `y`.
    pub fn y() -> Self {
        ExactPoly {
            coeffs: vec![Integer::ZERO, Integer::from(1)],
            denom: Integer::from(1),
        }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.denom = Integer::from(1);
            return self;
        }
        if self.denom < 0 {
            self.denom = -self.denom;
            for c in &mut self.coeffs {
                *c *= -1;
            }
        }
        if self.denom != 1 {
            let mut g = self.denom.clone();
            for c in &self.coeffs {
                g = g.gcd(c);
                if g == 1 {
                    break;
                }
            }
            if g > 1 {
                self.denom = (&self.denom / &g).complete();
                for c in &mut self.coeffs {
                    c.div_exact_mut(&g);
                }
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn denom(&self) -> &Integer {
        &self.denom
    }

    /// Numerator coefficients in canonical form, ascending powers.
    pub fn numerators(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        match self.coeffs.get(k) {
            Some(c) => Rational::from((c.clone(), self.denom.clone())),
            None => Rational::new(),
        }
    }

    pub fn leading_coeff(&self) -> Rational {
        match self.coeffs.last() {
            Some(c) => Rational::from((c.clone(), self.denom.clone())),
            None => Rational::new(),
        }
    }

    /// Integer coefficients when written over the denominator `target`;
    /// `None` if the polynomial does not have such a representation.
    pub fn scaled_coeffs(&self, target: &Integer) -> Option<Vec<Integer>> {
        let (q, r) = target.clone().div_rem(self.denom.clone());
        if !r.is_zero() {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .map(|c| (c * &q).complete())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| (-c).complete()).collect(),
            denom: self.denom.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.denom.clone().gcd(&rhs.denom);
        let la = (&rhs.denom / &g).complete();
        let lb = (&self.denom / &g).complete();
        let denom = (&self.denom * &la).complete();
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![Integer::ZERO; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += (c * &la).complete();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += (c * &lb).complete();
        }
        ExactPoly { coeffs, denom }.normalized()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![Integer::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += (a * b).complete();
            }
        }
        let denom = (&self.denom * &rhs.denom).complete();
        ExactPoly { coeffs, denom }.normalized()
    }

    /// Multiplies by the exact rational `num/den`.
    pub fn scale(&self, num: i64, den: i64) -> Self {
        assert!(den != 0);
        let mut coeffs = self.coeffs.clone();
        for c in &mut coeffs {
            *c *= num;
        }
        let denom = &self.denom * Integer::from(den);
        ExactPoly { coeffs, denom }.normalized()
    }

    pub fn mul_int(&self, m: &Integer) -> Self {
        let coeffs = self.coeffs.iter().map(|c| (c * m).complete()).collect();
        ExactPoly {
            coeffs,
            denom: self.denom.clone(),
        }
        .normalized()
    }

    pub fn div_int(&self, den: &Integer) -> Self {
        assert!(!den.is_zero());
        ExactPoly {
            coeffs: self.coeffs.clone(),
            denom: (&self.denom * den).complete(),
        }
        .normalized()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ExactPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Integer::from(k))
            .collect();
        ExactPoly {
            coeffs,
            denom: self.denom.clone(),
        }
        .normalized()
    }

    pub fn eval_rational(&self, y: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= y;
            acc += c;
        }
        acc / Rational::from(self.denom.clone())
    }

    /// Horner evaluation at a big-real point, at the point's precision.
    pub fn eval_bigreal(&self, y: &BigReal) -> BigReal {
        let prec = y.prec_bits();
        let mut acc = rug::Float::with_val(prec, 0);
        for c in self.coeffs.iter().rev() {
            acc *= y.as_float();
            acc += c;
        }
        acc /= &self.denom;
        BigReal::from_float(acc, y.digits())
    }

    pub fn eval_f64(&self, y: f64) -> f64 {
        let mut acc = 0f64;
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c.to_f64();
        }
        acc / self.denom.to_f64()
    }

    /// log10 of `Σ |c_k| |y|^k / denom`, an upper envelope for the Horner
    /// intermediates; the gap to `log10 |P(y)|` measures cancellation.
    pub fn log10_norm_at(&self, abs_y: f64) -> f64 {
        const LOG10_2: f64 = std::f64::consts::LOG10_2;
        let ly = abs_y.abs().log10();
        let mut max = f64::NEG_INFINITY;
        let mut terms: Vec<f64> = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = c.significant_bits() as f64 * LOG10_2 + k as f64 * ly;
            terms.push(t);
            max = max.max(t);
        }
        if terms.is_empty() {
            return f64::NEG_INFINITY;
        }
        let sum: f64 = terms.iter().map(|t| 10f64.powf(t - max)).sum();
        max + sum.log10() - self.denom.significant_bits() as f64 * LOG10_2
    }

    /// Decimal strings of the canonical numerator coefficients, ascending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Renders like `y - 1`, `-(y^2 - 6y + 11)/2` or `(2y^3 - 15y^2 + 42y - 47)/6`:
/// a leading negative sign is factored out and the denominator is printed
/// only when it is not 1.
impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let negate = *self.coeffs.last().unwrap() < 0;
        let mut body = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let c = if negate { (-c).complete() } else { c.clone() };
            if body.is_empty() {
                if c < 0 {
                    body.push('-');
                }
            } else {
                body.push_str(if c < 0 { " - " } else { " + " });
            }
            let mag = c.clone().abs();
            let show_coeff = mag != 1 || k == 0;
            if show_coeff {
                body.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => body.push('y'),
                _ => {
                    body.push_str("y^");
                    body.push_str(&k.to_string());
                }
            }
        }
        let fraction = self.denom != 1;
        match (negate, fraction) {
            (false, false) => write!(f, "{body}"),
            (true, false) => write!(f, "-({body})"),
            (false, true) => write!(f, "({body})/{}", self.denom),
            (true, true) => write!(f, "-({body})/{}", self.denom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64], den: i64) -> ExactPoly {
        ExactPoly::with_denom(
            coeffs.iter().map(|&c| Integer::from(c)).collect(),
            Integer::from(den),
        )
    }

    #[test]
    fn canonical_form() {
        let a = p(&[2, 4, 0, 0], 6);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(a.denom(), &Integer::from(3));
        assert_eq!(a.numerators(), &[Integer::from(1), Integer::from(2)]);
        let b = p(&[-1, -2], -3);
        assert_eq!(b, a);
    }

    #[test]
    fn ring_ops_match_rational_eval() {
        let a = p(&[1, -3, 5], 4);
        let b = p(&[7, 2], 3);
        let y = Rational::from((5, 7));
        let sum = a.add(&b).eval_rational(&y);
        assert_eq!(sum, a.eval_rational(&y) + b.eval_rational(&y));
        let prod = a.mul(&b).eval_rational(&y);
        assert_eq!(prod, a.eval_rational(&y) * b.eval_rational(&y));
        let d = a.derivative();
        assert_eq!(d, p(&[-3, 10], 4));
    }

    #[test]
    fn scaled_coeffs_roundtrip() {
        let a = p(&[-11, 6, -1], 2);
        let scaled = a.scaled_coeffs(&Integer::from(24)).unwrap();
        assert_eq!(
            scaled,
            vec![Integer::from(-132), Integer::from(72), Integer::from(-12)]
        );
        assert!(a.scaled_coeffs(&Integer::from(3)).is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-1, 1], 1).to_string(), "y - 1");
        assert_eq!(p(&[-11, 6, -1], 2).to_string(), "-(y^2 - 6y + 11)/2");
        assert_eq!(p(&[-47, 42, -15, 2], 6).to_string(), "(2y^3 - 15y^2 + 42y - 47)/6");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1], 1).to_string(), "y");
    }
}
