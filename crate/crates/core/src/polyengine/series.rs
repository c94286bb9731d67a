//! Truncated formal series `Σ_{n=0..N} q_n(y) / x^n` with exact polynomial
//! coefficients of degree at most `n`.
//!
//! This is the complete local ring in which the defining fixed-point
//! equation for the expansion polynomials lives. All arithmetic is exact
//! and closed under truncation at the series order; `log` of a unit series
//! is the truncated alternating sum of powers, which converges here because
//! `u^k` has valuation at least `k`.

use rug::Integer;

use super::poly::ExactPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    /// `terms[n]` is the coefficient of `x^{-n}`; `terms.len() == order + 1`.
    terms: Vec<ExactPoly>,
    order: usize,
}

impl FormalSeries {
    pub fn zero(order: usize) -> Self {
        FormalSeries {
            terms: vec![ExactPoly::zero(); order + 1],
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.terms[0] = ExactPoly::constant(1);
        s
    }

    /// Builds from explicit terms, checking the degree constraint
    /// `deg q_n <= n` that defines the ring.
    pub fn from_terms(terms: Vec<ExactPoly>) -> Self {
        assert!(!terms.is_empty());
        for (n, q) in terms.iter().enumerate() {
            assert!(
                q.degree().map_or(true, |d| d <= n),
                "term {n} has degree {:?} > {n}",
                q.degree()
            );
        }
        let order = terms.len() - 1;
        FormalSeries { terms, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn term(&self, n: usize) -> &ExactPoly {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[ExactPoly] {
        &self.terms
    }

    /// Least `n` with a nonzero term, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.iter().position(|t| !t.is_zero())
    }

    pub fn is_unit_one(&self) -> bool {
        self.terms[0] == ExactPoly::constant(1)
    }

    /// Re-truncates (or zero-extends) to a new order.
    pub fn resized(&self, order: usize) -> Self {
        let mut terms = self.terms.clone();
        terms.resize(order + 1, ExactPoly::zero());
        terms.truncate(order + 1);
        FormalSeries { terms, order }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let terms = (0..=order)
            .map(|n| self.terms[n].add(&rhs.terms[n]))
            .collect();
        FormalSeries { terms, order }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let terms = (0..=order)
            .map(|n| self.terms[n].sub(&rhs.terms[n]))
            .collect();
        FormalSeries { terms, order }
    }

    pub fn neg(&self) -> Self {
        FormalSeries {
            terms: self.terms.iter().map(ExactPoly::neg).collect(),
            order: self.order,
        }
    }

    /// Product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut terms = vec![ExactPoly::zero(); order + 1];
        for (i, a) in self.terms.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.terms.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                terms[i + j] = terms[i + j].add(&a.mul(b));
            }
        }
        FormalSeries { terms, order }
    }

    pub fn scale(&self, num: i64, den: i64) -> Self {
        FormalSeries {
            terms: self.terms.iter().map(|t| t.scale(num, den)).collect(),
            order: self.order,
        }
    }

    /// Multiplies by `x^{-k}` (shifts every term up by `k`), truncating.
    pub fn shift_down(&self, k: usize) -> Self {
        let mut terms = vec![ExactPoly::zero(); self.order + 1];
        for n in 0..=self.order.saturating_sub(k) {
            terms[n + k] = self.terms[n].clone();
        }
        FormalSeries {
            terms,
            order: self.order,
        }
    }

    /// Derivative with respect to `x`: `Σ -n q_n(y) x^{-(n+1)}`, truncated.
    pub fn deriv_x(&self) -> Self {
        let mut terms = vec![ExactPoly::zero(); self.order + 1];
        for n in 1..=self.order.saturating_sub(1) {
            terms[n + 1] = self.terms[n].scale(-(n as i64), 1);
        }
        FormalSeries {
            terms,
            order: self.order,
        }
    }

    /// Derivative with respect to `y`, term by term.
    pub fn deriv_y(&self) -> Self {
        FormalSeries {
            terms: self.terms.iter().map(ExactPoly::derivative).collect(),
            order: self.order,
        }
    }

    /// `log` of a unit series `1 + u`: the truncated alternating series
    /// `Σ_{k>=1} (-1)^{k+1} u^k / k`, with every product truncated at the
    /// series order. Panics if the constant term is not 1.
    pub fn log_unit(&self) -> Self {
        assert!(self.is_unit_one(), "log requires constant term 1");
        let mut u = self.clone();
        u.terms[0] = ExactPoly::zero();
        let mut acc = FormalSeries::zero(self.order);
        let mut power = u.clone();
        let mut k = 1i64;
        while power.valuation().is_some_and(|v| v <= self.order) {
            let signed = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(signed, k));
            if k as usize >= self.order {
                break;
            }
            power = power.mul(&u);
            k += 1;
        }
        acc
    }

    /// `exp` of a series with zero constant term: `Σ u^k / k!` truncated.
    pub fn exp_nilpotent(&self) -> Self {
        assert!(
            self.terms[0].is_zero(),
            "exp requires vanishing constant term"
        );
        let mut acc = FormalSeries::one(self.order);
        let mut power = FormalSeries::one(self.order);
        let mut fact = Integer::from(1);
        for k in 1..=self.order as i64 {
            power = power.mul(self);
            if power.valuation().is_none() {
                break;
            }
            fact *= k;
            let scaled = FormalSeries {
                terms: power.terms.iter().map(|t| t.div_int(&fact)).collect(),
                order: power.order,
            };
            acc = acc.add(&scaled);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Integer;

    fn c(v: i64) -> ExactPoly {
        ExactPoly::constant(v)
    }

    /// 1/(1-1/x) = Σ x^{-n}; log gives Σ 1/(n x^n).
    #[test]
    fn log_of_geometric_series() {
        let geo = FormalSeries::from_terms(vec![c(1); 7]);
        let lg = geo.log_unit();
        for n in 1..=6usize {
            assert_eq!(
                lg.term(n),
                &ExactPoly::with_denom(vec![Integer::from(1)], Integer::from(n)),
                "term {n}"
            );
        }
    }

    #[test]
    fn log_is_additive_on_products() {
        let y = ExactPoly::y();
        let a = FormalSeries::from_terms(vec![c(1), y.clone(), ExactPoly::zero(), c(-3)]);
        let b = FormalSeries::from_terms(vec![c(1), c(2), y.mul(&y).scale(1, 5), c(0)]);
        let lhs = a.mul(&b).log_unit();
        let rhs = a.log_unit().add(&b.log_unit());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_inverts_log() {
        let y = ExactPoly::y();
        let a = FormalSeries::from_terms(vec![c(1), y.clone(), y.derivative(), c(7), c(-2)]);
        assert_eq!(a.log_unit().exp_nilpotent(), a);
    }

    #[test]
    fn x_derivative_shifts_and_scales() {
        let y = ExactPoly::y();
        let a = FormalSeries::from_terms(vec![c(5), y.clone(), y.mul(&y)]);
        let dx = a.deriv_x();
        assert!(dx.term(0).is_zero());
        assert!(dx.term(1).is_zero());
        assert_eq!(dx.term(2), &y.scale(-1, 1));
    }
}
