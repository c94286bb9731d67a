//! Exact generation of the asymptotic-expansion polynomials `P_n`, `Q_n`
//! and their coefficient triangles, by three mutually independent methods:
//!
//! * the quadratic-cost triangle pipeline ([`coeff_triangle_a`],
//!   [`gen_sequences`]), the production path;
//! * the direct polynomial recurrence ([`gen_p_recurrence`]);
//! * a fixed-point iteration in a ring of truncated formal series
//!   ([`gen_p_fixed_point`]), the reference oracle.
//!
//! All arithmetic is exact; any two routes agreeing coefficientwise is a
//! meaningful check, and the test suite keeps them in lockstep.

mod fixed_point;
mod poly;
mod recurrence;
mod series;
mod triangle;

pub use fixed_point::gen_p_fixed_point;
pub use poly::ExactPoly;
pub use recurrence::{a_sequence, check_pde, gen_p_recurrence, PdeReport};
pub use series::FormalSeries;
pub use triangle::{
    coeff_triangle_a, coeff_triangle_b, factorial, gen_sequences, op_count_formula,
    op_count_model, poly_p, poly_p_from_triangle, poly_p_range, poly_q, poly_q_from_triangle,
    triangle_b_from_a, CoeffTriangle, TriangleKind,
};
