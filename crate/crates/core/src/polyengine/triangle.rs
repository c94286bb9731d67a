//! Quadratic-cost generation of the expansion-polynomial coefficient
//! triangles `a(n,k)` and `b(n,k)`.
//!
//! The pipeline first computes the boundary sequences `A_n = a(n,n)` and
//! `B_n = a(n,n-1)` from their own recursions, then fills the rest of each
//! row from the two-term mixing rule, whose division is always exact on
//! integers. A unit-cost operation counter tracks the coefficient
//! operations performed, following a fixed accounting convention:
//! one unit per binomial-table addition, four per `B_n`, `8n - 1` per
//! `A_n`, and six per off-diagonal entry `a(n,k)` with `1 <= k < n`.

use rug::{Complete, Integer};
use serde::Serialize;

use crate::error::{Error, Result};

use super::poly::ExactPoly;

/// Which triangle a [`CoeffTriangle`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleKind {
    A,
    B,
}

/// A jagged triangle of exact nonnegative integers, plus the diagonal
/// `A_n = a(n,n)` and subdiagonal `B_n = a(n,n-1)` sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTriangle {
    kind: TriangleKind,
    /// Row `n` holds entries `k = 0..=n`. For the `B` triangle the first
    /// stored row corresponds to `n = 1`.
    rows: Vec<Vec<Integer>>,
    diag_a: Vec<Integer>,
    subdiag_b: Vec<Integer>,
}

impl CoeffTriangle {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    fn first_n(&self) -> usize {
        match self.kind {
            TriangleKind::A => 0,
            TriangleKind::B => 1,
        }
    }

    /// Largest row index `n` stored.
    pub fn max_n(&self) -> usize {
        self.first_n() + self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// Entry at row `n`, column `k`; zero outside the triangle.
    pub fn entry(&self, n: usize, k: i64) -> Integer {
        if n < self.first_n() || n > self.max_n() {
            return Integer::ZERO;
        }
        let row = &self.rows[n - self.first_n()];
        if k < 0 || k as usize >= row.len() {
            Integer::ZERO
        } else {
            row[k as usize].clone()
        }
    }

    /// Diagonal values `A_n = a(n,n)`, indices `0..=N`.
    pub fn diag_a(&self) -> &[Integer] {
        &self.diag_a
    }

    /// Subdiagonal values `B_n = a(n,n-1)`, indices `0..=N` with the
    /// seeded `B_0 = 1`.
    pub fn subdiag_b(&self) -> &[Integer] {
        &self.subdiag_b
    }

    /// JSON export: `{"kind":"a","rows":[["1"],["1","2"],...]}` with
    /// entries as decimal strings, newline-terminated.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export {
            kind: TriangleKind,
            rows: Vec<Vec<String>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            first_row: Option<usize>,
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        let first = self.first_n();
        let export = Export {
            kind: self.kind,
            rows,
            first_row: (first != 0).then_some(first),
        };
        let mut s = serde_json::to_string(&export).expect("triangle serializes");
        s.push('\n');
        s
    }

    /// CSV export with `row,col,value` records, newline-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,value\n");
        for (i, row) in self.rows.iter().enumerate() {
            let n = self.first_n() + i;
            for (k, v) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{v}\n"));
            }
        }
        out
    }
}

/// Pascal triangle rows `C(m, j)` for `0 <= m <= max_m`, counting one unit
/// per interior addition.
fn binomial_rows(max_m: usize, ops: &mut u64) -> Vec<Vec<Integer>> {
    let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_m + 1);
    for m in 0..=max_m {
        let mut row = vec![Integer::from(1); m + 1];
        for j in 1..m {
            row[j] = (&rows[m - 1][j - 1] + &rows[m - 1][j]).complete();
            *ops += 1;
        }
        rows.push(row);
    }
    rows
}

struct SequencePair {
    a: Vec<Integer>,
    b: Vec<Integer>,
    ops: u64,
}

/// `A_n` and `B_n` for `0 <= n <= n_max`, with the seeded values
/// `A_0 = 1, A_1 = 2, B_0 = 1, B_1 = 1`.
fn sequences(n_max: usize, binom: &[Vec<Integer>], mut ops: u64) -> SequencePair {
    let mut a = vec![Integer::from(1), Integer::from(2)];
    let mut b = vec![Integer::from(1), Integer::from(1)];
    a.truncate(n_max + 1);
    b.truncate(n_max + 1);
    for n in 2..=n_max {
        // B_n = n (B_{n-1} + (n-1) A_{n-1}): four unit operations.
        let t = (&a[n - 1] * Integer::from(n - 1)) + &b[n - 1];
        b.push(t * Integer::from(n));
        ops += 4;
        // A_n = n^2 A_{n-1} + n B_{n-1}
        //     - (n-1) Σ_k C(n-2,k-1) {k(k-1)A_{k-1} - A_k + k B_{k-1}} A_{n-k-1}:
        // seven units plus eight per summand.
        let mut sum = Integer::ZERO;
        for k in 1..n {
            let kk = Integer::from(k as u64 * (k as u64 - 1));
            let mut inner = (&a[k - 1] * &kk).complete();
            inner -= &a[k];
            inner += &b[k - 1] * Integer::from(k);
            inner *= &binom[n - 2][k - 1];
            inner *= &a[n - k - 1];
            sum += inner;
            ops += 8;
        }
        let mut an = &a[n - 1] * Integer::from(n as u64 * n as u64);
        an += &b[n - 1] * Integer::from(n);
        an -= sum * Integer::from(n - 1);
        ops += 7;
        a.push(an);
    }
    SequencePair { a, b, ops }
}

/// Boundary sequences `A_n = a(n,n)` and `B_n = a(n,n-1)` for `0..=n_max`.
pub fn gen_sequences(n_max: usize) -> (Vec<Integer>, Vec<Integer>) {
    assert!(n_max >= 1);
    let mut ops = 0;
    let binom = binomial_rows(n_max.saturating_sub(2), &mut ops);
    let pair = sequences(n_max, &binom, ops);
    (pair.a, pair.b)
}

struct TriangleBuild {
    a: CoeffTriangle,
    ops: u64,
}

fn build_triangle_a(n_max: usize) -> Result<TriangleBuild> {
    assert!(n_max >= 1);
    let mut ops = 0;
    let binom = binomial_rows(n_max.saturating_sub(2), &mut ops);
    let pair = sequences(n_max, &binom, ops);
    let mut ops = pair.ops;

    let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Integer::from(1)]);
    rows.push(vec![Integer::from(1), Integer::from(2)]);
    for n in 2..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        let prev = &rows[n - 1];
        for k in 0..n {
            // a(n,k) = n a(n-1,k-1) + n(n-1) a(n-1,k) / (n-k), the division
            // taken first and checked exact. Six units for 1 <= k < n.
            let scaled = &prev[k] * Integer::from(n as u64 * (n as u64 - 1));
            let (q, r) = scaled.div_rem(Integer::from(n - k));
            if !r.is_zero() {
                return Err(Error::InternalInconsistency(format!(
                    "division n(n-1)a(n-1,{k})/({n}-{k}) not exact at row {n}"
                )));
            }
            let mut v = q;
            if k >= 1 {
                v += &prev[k - 1] * Integer::from(n);
                ops += 6;
            }
            row.push(v);
        }
        row.push(pair.a[n].clone());
        rows.push(row);
    }
    let a = CoeffTriangle {
        kind: TriangleKind::A,
        rows,
        diag_a: pair.a,
        subdiag_b: pair.b,
    };
    Ok(TriangleBuild { a, ops })
}

/// Full triangle `a(n,k)` for `0 <= k <= n <= n_max`.
pub fn coeff_triangle_a(n_max: usize) -> Result<CoeffTriangle> {
    Ok(build_triangle_a(n_max)?.a)
}

/// Triangle `b(n,k)` for `1 <= n <= n_max`, derived from the `a` triangle
/// by `b(n,k) = a(n,k) - (n-k+1) a(n,k-1)`.
pub fn coeff_triangle_b(n_max: usize) -> Result<CoeffTriangle> {
    let a = coeff_triangle_a(n_max)?;
    Ok(triangle_b_from_a(&a))
}

pub fn triangle_b_from_a(a: &CoeffTriangle) -> CoeffTriangle {
    let n_max = a.max_n();
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let v = a.entry(n, k as i64)
                - a.entry(n, k as i64 - 1) * Integer::from(n - k + 1);
            row.push(v);
        }
        rows.push(row);
    }
    CoeffTriangle {
        kind: TriangleKind::B,
        rows,
        diag_a: a.diag_a.clone(),
        subdiag_b: a.subdiag_b.clone(),
    }
}

/// Coefficient operations performed by the triangle pipeline up to row `N`,
/// under the fixed unit-cost accounting convention. Equals
/// `(15 N^2 + 3 N - 16) / 2` for `N >= 2`.
pub fn op_count_model(n_max: usize) -> Result<u64> {
    assert!(n_max >= 2);
    Ok(build_triangle_a(n_max)?.ops)
}

/// Closed form `(15 N^2 + 3 N - 16) / 2` of the operation count.
pub fn op_count_formula(n_max: u64) -> u64 {
    (15 * n_max * n_max + 3 * n_max - 16) / 2
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> Integer {
    let mut f = Integer::from(1);
    for k in 2..=n {
        f *= k as u64;
    }
    f
}

/// The expansion polynomial `P_n(y)` reconstructed from a triangle row:
/// the coefficient of `y^{n-k}` is `(-1)^{n+1} (-1)^k a(n,k) / n!`, with
/// `P_0 = y - 1` as the seeded degree-one case.
pub fn poly_p_from_triangle(a: &CoeffTriangle, n: usize) -> ExactPoly {
    assert_eq!(a.kind, TriangleKind::A);
    signed_row_poly(&a.rows[n], n)
}

/// `Q_n(y)` reconstructed from a `b` triangle row (defined for `n >= 1`).
pub fn poly_q_from_triangle(b: &CoeffTriangle, n: usize) -> ExactPoly {
    assert_eq!(b.kind, TriangleKind::B);
    assert!(n >= 1);
    signed_row_poly(&b.rows[n - 1], n)
}

fn signed_row_poly(row: &[Integer], n: usize) -> ExactPoly {
    if n == 0 {
        // Degree-one seed: the sign machinery starts at n = 1.
        return ExactPoly::with_denom(
            vec![Integer::from(-1), Integer::from(1)],
            Integer::from(1),
        );
    }
    // Ascending power j = n - k picks up the sign (-1)^{j+1}.
    let coeffs = (0..=n)
        .map(|j| {
            let v = row[n - j].clone();
            if j % 2 == 1 {
                v
            } else {
                -v
            }
        })
        .collect();
    ExactPoly::with_denom(coeffs, factorial(n))
}

/// All of `P_0 .. P_{n_max}` from a single triangle pass.
pub fn poly_p_range(n_max: usize) -> Result<Vec<ExactPoly>> {
    let a = coeff_triangle_a(n_max.max(1))?;
    Ok((0..=n_max).map(|n| poly_p_from_triangle(&a, n)).collect())
}

/// The exact polynomial `P_n(y)`.
pub fn poly_p(n: usize) -> Result<ExactPoly> {
    let a = coeff_triangle_a(n.max(1))?;
    Ok(poly_p_from_triangle(&a, n))
}

/// `Q_n = P_n + P_n'` for `n >= 1`. The equivalent mixed form
/// `Q_n = P_n - (n-1) P_{n-1} + P'_{n-1}` is asserted in debug builds.
pub fn poly_q(n: usize) -> Result<ExactPoly> {
    assert!(n >= 1, "Q_0 is undefined");
    let a = coeff_triangle_a(n)?;
    let p_n = poly_p_from_triangle(&a, n);
    let q = p_n.add(&p_n.derivative());
    debug_assert_eq!(q, {
        let p_prev = poly_p_from_triangle(&a, n - 1);
        p_n.sub(&p_prev.scale(n as i64 - 1, 1)).add(&p_prev.derivative())
    });
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_small_values() {
        let (a, b) = gen_sequences(3);
        let want_a: Vec<i64> = vec![1, 2, 11, 131];
        let want_b: Vec<i64> = vec![1, 1, 6, 84];
        assert_eq!(a, want_a.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>());
        assert_eq!(b, want_b.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>());
    }

    #[test]
    fn triangle_rows_two_and_six() {
        let t = coeff_triangle_a(6).unwrap();
        let row2: Vec<i64> = vec![1, 6, 11];
        assert_eq!(t.rows()[2], row2.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>());
        let row6: Vec<i64> = vec![120, 3084, 35790, 246480, 1075020, 2823180, 3478014];
        assert_eq!(t.rows()[6], row6.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>());
        assert_eq!(t.entry(5, 0), factorial(4));
    }

    #[test]
    fn b_triangle_values() {
        let b = coeff_triangle_b(7).unwrap();
        let row2: Vec<i64> = vec![1, 4, 5];
        assert_eq!(b.rows()[1], row2.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>());
        assert_eq!(b.entry(7, 7), Integer::from(31154346));
        assert_eq!(b.entry(3, 0), Integer::from(2));
    }

    #[test]
    fn op_counter_matches_closed_form() {
        for n in [2usize, 3, 4, 7, 10, 33] {
            assert_eq!(op_count_model(n).unwrap(), op_count_formula(n as u64), "N={n}");
        }
        assert_eq!(op_count_formula(2), 25);
        assert_eq!(op_count_formula(10), 757);
    }

    #[test]
    fn polynomials_from_rows() {
        let a = coeff_triangle_a(4).unwrap();
        assert_eq!(poly_p_from_triangle(&a, 0).to_string(), "y - 1");
        assert_eq!(poly_p_from_triangle(&a, 2).to_string(), "-(y^2 - 6y + 11)/2");
        assert_eq!(
            poly_p_from_triangle(&a, 4).to_string(),
            "-(3y^4 - 46y^3 + 294y^2 - 954y + 1333)/12"
        );
        assert_eq!(poly_q(1).unwrap().to_string(), "y - 1");
        assert_eq!(poly_q(2).unwrap().to_string(), "-(y^2 - 4y + 5)/2");
        assert_eq!(poly_q(3).unwrap().to_string(), "(2y^3 - 15y^2 + 42y - 47)/6");
    }

    #[test]
    fn q_from_b_matches_relation() {
        let b = coeff_triangle_b(7).unwrap();
        for n in 1..=7 {
            assert_eq!(poly_q_from_triangle(&b, n), poly_q(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn json_and_csv_shape() {
        let t = coeff_triangle_a(2).unwrap();
        assert_eq!(
            t.to_json(),
            "{\"kind\":\"a\",\"rows\":[[\"1\"],[\"1\",\"2\"],[\"1\",\"6\",\"11\"]]}\n"
        );
        let b = coeff_triangle_b(1).unwrap();
        assert_eq!(
            b.to_json(),
            "{\"kind\":\"b\",\"rows\":[[\"1\",\"1\"]],\"first_row\":1}\n"
        );
        assert!(t.to_csv().ends_with("2,2,11\n"));
    }
}
