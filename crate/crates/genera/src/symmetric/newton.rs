//! Newton-identity conversions between power sums and elementary symmetric
//! polynomials.
//!
//! Both directions return conversion polynomials in a weighted ring where
//! the index-i variable has weight i: for [`power_sums_to_elementary`] the
//! variables denote the elementary symmetric functions e_i, for
//! [`elementary_to_power_sums`] they denote the power sums ps_i.

use crate::rational::Rational;
use crate::symmetric::graded::{GradedPolynomial, VarKind};

/// [P_1..P_n]: P_j expresses the power sum ps_j of n roots in the
/// elementary symmetric functions. Stable in n: for j <= n the polynomial
/// does not depend on the number of roots.
pub fn power_sums_to_elementary(n: usize) -> Vec<GradedPolynomial> {
    power_sums_to_elementary_in(VarKind::Chern, n)
}

/// Same conversion with a caller-chosen variable kind (Pontrjagin grading
/// uses p_j = e_j of the squared roots).
pub fn power_sums_to_elementary_in(kind: VarKind, n: usize) -> Vec<GradedPolynomial> {
    // ps_k = sum_{i=1..k-1} (-1)^{i-1} e_i ps_{k-i} + (-1)^{k-1} k e_k
    let mut out: Vec<GradedPolynomial> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut p = GradedPolynomial::zero(kind, n);
        for i in 1..k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let term = (&GradedPolynomial::var(kind, n, i) * &out[k - i - 1])
                .scalar_mul(&Rational::from(sign));
            p += &term;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        p += &GradedPolynomial::var(kind, n, k).scalar_mul(&Rational::from(sign * k as i64));
        out.push(p);
    }
    out
}

/// [E_1..E_n]: E_j expresses the elementary symmetric function e_j in the
/// power sums ps_1..ps_j.
pub fn elementary_to_power_sums(n: usize) -> Vec<GradedPolynomial> {
    // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} ps_i
    let kind = VarKind::Chern;
    let mut out: Vec<GradedPolynomial> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut p = GradedPolynomial::zero(kind, n);
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let prev = if k - i == 0 {
                GradedPolynomial::one(kind, n)
            } else {
                out[k - i - 1].clone()
            };
            let term =
                (&prev * &GradedPolynomial::var(kind, n, i)).scalar_mul(&Rational::from(sign));
            p += &term;
        }
        out.push(p.scalar_mul(&Rational::new(1, k as i64)));
    }
    out
}
