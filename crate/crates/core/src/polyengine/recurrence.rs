//! Direct recurrence for the expansion polynomials, and the integer
//! sequence controlling the logarithmic tail bound.
//!
//! The polynomial recurrence is evaluated on the scaled integer forms
//! `p_n = n! P_n`, which keeps every intermediate integral and turns the
//! division by `n` into a binomial rewrite:
//!
//! `p_n = n^2 p_{n-1} - n p'_{n-1}
//!        + (n-1) Σ_{k=1}^{n-1} C(n-2,k-1) {k(k-1) p_{k-1} - p_k - k p'_{k-1}} p_{n-k-1}`.
//!
//! This route never touches the coefficient triangles, so it serves as an
//! independent cross-check for them.

use rug::{Complete, Integer};

use super::poly::ExactPoly;
use super::triangle::factorial;

/// Integer polynomial helpers on bare coefficient vectors (ascending).
mod ipoly {
    use super::*;

    pub fn derivative(p: &[Integer]) -> Vec<Integer> {
        if p.len() <= 1 {
            return Vec::new();
        }
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Integer::from(k))
            .collect()
    }

    pub fn mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Integer::ZERO; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += (x * y).complete();
            }
        }
        out
    }

    pub fn add_scaled(acc: &mut Vec<Integer>, p: &[Integer], s: &Integer) {
        if acc.len() < p.len() {
            acc.resize(p.len(), Integer::ZERO);
        }
        for (a, c) in acc.iter_mut().zip(p) {
            *a += (c * s).complete();
        }
    }
}

/// `P_0 .. P_{n_max}` computed purely from the polynomial recurrence.
pub fn gen_p_recurrence(n_max: usize) -> Vec<ExactPoly> {
    assert!(n_max >= 1);
    // Binomial rows C(n-2, .) for the inner sum.
    let mut binom: Vec<Vec<Integer>> = vec![vec![Integer::from(1)]];
    for m in 1..n_max {
        let prev = &binom[m - 1];
        let mut row = vec![Integer::from(1); m + 1];
        for j in 1..m {
            row[j] = (&prev[j - 1] + &prev[j]).complete();
        }
        binom.push(row);
    }

    // p_0 = y - 1.
    let mut scaled: Vec<Vec<Integer>> = vec![vec![Integer::from(-1), Integer::from(1)]];
    let mut derivs: Vec<Vec<Integer>> = vec![ipoly::derivative(&scaled[0])];
    for n in 1..=n_max {
        let ni = Integer::from(n);
        let mut acc: Vec<Integer> = Vec::new();
        ipoly::add_scaled(&mut acc, &scaled[n - 1], &(&ni * &ni).complete());
        ipoly::add_scaled(&mut acc, &derivs[n - 1], &(-&ni).complete());
        if n >= 2 {
            let mut sum: Vec<Integer> = Vec::new();
            for k in 1..n {
                let mut inner: Vec<Integer> = Vec::new();
                let kk = Integer::from(k as u64 * (k as u64 - 1));
                ipoly::add_scaled(&mut inner, &scaled[k - 1], &kk);
                ipoly::add_scaled(&mut inner, &scaled[k], &Integer::from(-1));
                ipoly::add_scaled(&mut inner, &derivs[k - 1], &Integer::from(-(k as i64)));
                let prod = ipoly::mul(&inner, &scaled[n - k - 1]);
                ipoly::add_scaled(&mut sum, &prod, &binom[n - 2][k - 1]);
            }
            ipoly::add_scaled(&mut acc, &sum, &Integer::from(n - 1));
        }
        derivs.push(ipoly::derivative(&acc));
        scaled.push(acc);
    }

    scaled
        .into_iter()
        .enumerate()
        .map(|(n, coeffs)| ExactPoly::with_denom(coeffs, factorial(n)))
        .collect()
}

/// The integer sequence `a_1 = 1, a_n = n! n + Σ_{k=1}^{n-1} k! a_{n-k}`;
/// these are `n` times the expansion coefficients of the logarithm of the
/// inverted truncated factorial series. Returns `a_1..a_{n_max}`.
pub fn a_sequence(n_max: usize) -> Vec<Integer> {
    assert!(n_max >= 1);
    let mut fact: Vec<Integer> = Vec::with_capacity(n_max + 1);
    let mut f = Integer::from(1);
    fact.push(f.clone());
    for k in 1..=n_max {
        f *= k as u64;
        fact.push(f.clone());
    }
    let mut a: Vec<Integer> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut v = &fact[n] * Integer::from(n);
        for k in 1..n {
            v += (&fact[k] * &a[n - k - 1]).complete();
        }
        a.push(v);
    }
    a
}

/// Result of the exact differential-identity sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdeReport {
    pub checked_to: usize,
    /// `(n, family)` of the first failing identity, if any; family is
    /// `'P'` or `'Q'`.
    pub first_failure: Option<(usize, char)>,
}

impl PdeReport {
    pub fn is_success(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Verifies the exact identities `(n-1) P_{n-1} = P'_{n-1} - P'_n` for
/// `1 <= n <= n_max` and `(n-1) Q_{n-1} = Q'_{n-1} - Q'_n` for
/// `2 <= n <= n_max`.
pub fn check_pde(n_max: usize) -> crate::error::Result<PdeReport> {
    assert!(n_max >= 1);
    let a = super::triangle::coeff_triangle_a(n_max)?;
    let p: Vec<ExactPoly> = (0..=n_max)
        .map(|n| super::triangle::poly_p_from_triangle(&a, n))
        .collect();
    let q: Vec<ExactPoly> = (1..=n_max)
        .map(|n| p[n].add(&p[n].derivative()))
        .collect();
    for n in 1..=n_max {
        let lhs = p[n - 1].scale(n as i64 - 1, 1);
        let rhs = p[n - 1].derivative().sub(&p[n].derivative());
        if lhs != rhs {
            return Ok(PdeReport {
                checked_to: n_max,
                first_failure: Some((n, 'P')),
            });
        }
        if n >= 2 {
            let lhs = q[n - 2].scale(n as i64 - 1, 1);
            let rhs = q[n - 2].derivative().sub(&q[n - 1].derivative());
            if lhs != rhs {
                return Ok(PdeReport {
                    checked_to: n_max,
                    first_failure: Some((n, 'Q')),
                });
            }
        }
    }
    Ok(PdeReport {
        checked_to: n_max,
        first_failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_polynomials() {
        let p = gen_p_recurrence(4);
        assert_eq!(p[0].to_string(), "y - 1");
        assert_eq!(p[1].to_string(), "y - 2");
        assert_eq!(p[2].to_string(), "-(y^2 - 6y + 11)/2");
        assert_eq!(p[3].to_string(), "(2y^3 - 21y^2 + 84y - 131)/6");
        assert_eq!(
            p[4].to_string(),
            "-(3y^4 - 46y^3 + 294y^2 - 954y + 1333)/12"
        );
    }

    #[test]
    fn sequence_values() {
        let a = a_sequence(10);
        let want: Vec<u64> = vec![
            1, 5, 25, 137, 841, 5825, 45529, 399713, 3911785, 42302225,
        ];
        assert_eq!(a, want.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>());
    }

    #[test]
    fn pde_holds_on_small_range() {
        let r = check_pde(12).unwrap();
        assert!(r.is_success());
    }

    #[test]
    fn matches_triangle_route() {
        let rec = gen_p_recurrence(10);
        let tri = super::super::triangle::poly_p_range(10).unwrap();
        assert_eq!(rec, tri);
    }
}
