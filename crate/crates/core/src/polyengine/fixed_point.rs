//! Fixed-point generation of the expansion polynomials.
//!
//! The series `V = 1 + Σ P_{n-1}(y)/x^n` is the unique solution of
//!
//! `V = 1 + y/x - V/x - V_x - V_y/x + (log V)/x`
//!
//! in the ring of truncated series, and the right-hand side is a
//! contraction: each application fixes one further order. Iterating from
//! `V = 1` therefore recovers the polynomials without ever using the
//! recurrence or the coefficient triangles, which makes this the
//! independent oracle for both.

use super::poly::ExactPoly;
use super::series::FormalSeries;

/// One application of the contraction `T`.
fn apply_t(v: &FormalSeries) -> FormalSeries {
    let order = v.order();
    let mut t = FormalSeries::one(order);
    if order >= 1 {
        // + y/x
        let mut y_term = FormalSeries::zero(order);
        y_term = {
            let mut terms = y_term.terms().to_vec();
            terms[1] = ExactPoly::y();
            FormalSeries::from_terms(terms)
        };
        t = t.add(&y_term);
    }
    t = t.sub(&v.shift_down(1));
    t = t.sub(&v.deriv_x());
    t = t.sub(&v.deriv_y().shift_down(1));
    t = t.add(&v.log_unit().shift_down(1));
    t
}

/// `P_0 .. P_{n_max}` via the fixed-point iteration: starting from `V = 1`,
/// apply `T` with truncation order `n_max + 1` for `n_max + 2` iterations
/// and read `P_{n-1}` off the coefficient of `x^{-n}`.
///
/// Iteration `i` is truncated at order `min(i, n_max + 1)`; orders beyond
/// that are not yet fixed by the contraction and would be discarded anyway.
pub fn gen_p_fixed_point(n_max: usize) -> Vec<ExactPoly> {
    assert!(n_max >= 1);
    let full_order = n_max + 1;
    let mut v = FormalSeries::one(0);
    for i in 1..=n_max + 2 {
        let target = i.min(full_order);
        v = apply_t(&v.resized(target));
    }
    (1..=full_order).map(|n| v.term(n).clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_iteration_gives_first_term() {
        let v = apply_t(&FormalSeries::one(1));
        assert_eq!(v.term(0), &ExactPoly::constant(1));
        assert_eq!(v.term(1).to_string(), "y - 1");
    }

    #[test]
    fn matches_printed_expansion() {
        let p = gen_p_fixed_point(4);
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
    fn matches_recurrence_route() {
        let fp = gen_p_fixed_point(8);
        let rec = super::super::recurrence::gen_p_recurrence(8);
        assert_eq!(fp, rec);
    }
}
