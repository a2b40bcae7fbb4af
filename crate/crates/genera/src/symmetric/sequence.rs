//! The multiplicative-sequence generator.
//!
//! Given a normalized power series Q, the polynomials K_1..K_n are defined
//! by expanding the product of Q over formal roots and collecting
//! homogeneous parts in the elementary symmetric functions of the roots
//! (Chern grading) or of their squares (Pontrjagin grading). The generator
//! works through log/exp in the graded ring: log of the product is a sum of
//! log Q over roots, i.e. a power-sum combination, which Newton's identities
//! rewrite in the graded variables before exponentiating back.

use crate::error::{Error, Result};
use crate::series::PowerSeries;
use crate::symmetric::graded::{GradedPolynomial, VarKind};
use crate::symmetric::newton::power_sums_to_elementary_in;

/// K_1..K_n for the series Q. Requires Q(0) = 1 and truncation order at
/// least n (Chern) or 2n (Pontrjagin); Pontrjagin grading additionally
/// requires Q to be even. K_m is homogeneous of weight m in its grading
/// (x-weight m for Chern variables, 2m for Pontrjagin).
pub fn multiplicative_sequence(
    q: &PowerSeries,
    n: usize,
    grading: VarKind,
) -> Result<Vec<GradedPolynomial>> {
    if !q.constant_term().is_one() {
        return Err(Error::NotNormalized(q.constant_term().clone()));
    }
    match grading {
        VarKind::Chern => {
            if q.order() < n {
                return Err(Error::BadOrder(format!(
                    "series order {} too small for n = {n}",
                    q.order()
                )));
            }
            generate(q, n, VarKind::Chern)
        }
        VarKind::Pontrjagin => {
            if !q.is_even() {
                return Err(Error::OddSeriesInPontrjaginGrading);
            }
            if q.order() < 2 * n {
                return Err(Error::BadOrder(format!(
                    "series order {} too small for 2n = {}",
                    q.order(),
                    2 * n
                )));
            }
            // Q(x) = Qc(x^2); run the Chern-grading construction on Qc with
            // the squared roots as variables.
            let compressed =
                PowerSeries::from_coeffs((0..=n).map(|j| q.coeff(2 * j).clone()).collect());
            generate(&compressed, n, VarKind::Pontrjagin)
        }
    }
}

fn generate(q: &PowerSeries, n: usize, kind: VarKind) -> Result<Vec<GradedPolynomial>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let log_q = q.log()?;
    let newton = power_sums_to_elementary_in(kind, n);
    let mut g = GradedPolynomial::zero(kind, n);
    for j in 1..=n {
        g += &newton[j - 1].scalar_mul(log_q.coeff(j));
    }
    let factor = kind.weight_factor();
    let total = g.exp_truncated(n as u32 * factor)?;
    Ok((1..=n)
        .map(|m| total.x_weight_part(m as u32 * factor))
        .collect())
}
