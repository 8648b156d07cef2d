//! Exact algebra over the counts: integer polynomials, rational generating
//! functions, bivariate constant terms, polynomials in the number of colors,
//! and polynomial-coefficient recurrences.

mod gf;
mod laurent;
mod ncn_poly;
mod poly;
mod recurrence;

pub use gf::{expand, gf_from_adjacency, gf_from_graph, RationalGF};
pub use laurent::{
    b_recurrence_holds, b_sequence, c2_prefactor, c2_step_polynomial, ct_power_product, triple_binomial_ct,
    LaurentPoly2,
};
pub use ncn_poly::{
    enhanced_binomial_check, enhanced_ncn_count, ncn_poly_in_r, ncn_poly_in_r_with, PolynomialInR,
    DEFAULT_POLY_LIMIT,
};
pub use poly::IntPoly;
pub use recurrence::{
    c2_four_term_recurrence, c2_three_term_recurrence, catalan_recurrence, fit_p_recurrence, verify_recurrence,
    PRecurrence,
};
