//! Named genera, Chern-to-Pontrjagin conversion, and symbolic verification
//! of the identities relating the Todd, A-hat and A_k classes.

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::series::PowerSeries;
use crate::series::{a_recip_k_series, ahat_series, ak_series, exp_series, l_series, todd_series};
use crate::symmetric::graded::{GradedPolynomial, Substitution, VarKind};
use crate::symmetric::sequence::multiplicative_sequence;

/// The genera known to the registry. `Ak(1)` is allowed and coincides with
/// the Todd genus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenusName {
    Todd,
    AHat,
    L,
    Ak(i64),
    ARecipK(i64),
}

impl GenusName {
    pub fn label(&self) -> String {
        match self {
            GenusName::Todd => "todd".into(),
            GenusName::AHat => "ahat".into(),
            GenusName::L => "L".into(),
            GenusName::Ak(k) => format!("a_k(k={k})"),
            GenusName::ARecipK(k) => format!("a_recip_k(k={k})"),
        }
    }

    pub fn default_grading(&self) -> VarKind {
        match self {
            GenusName::AHat | GenusName::L => VarKind::Pontrjagin,
            _ => VarKind::Chern,
        }
    }
}

/// A genus: its characteristic power series plus the grading its sequence
/// polynomials live in. Pontrjagin-graded specs always carry even series.
#[derive(Clone, Debug)]
pub struct GenusSpec {
    pub name: GenusName,
    pub series: PowerSeries,
    pub grading: VarKind,
}

impl GenusSpec {
    /// Builds the spec with enough series order to evaluate on manifolds of
    /// dimension 2n.
    pub fn for_half_dim(name: GenusName, n: usize) -> Result<Self> {
        let order = (2 * n).max(2);
        let series = match name {
            GenusName::Todd => todd_series(order),
            GenusName::AHat => ahat_series(order),
            GenusName::L => l_series(order),
            GenusName::Ak(k) => ak_series(k, order)?,
            GenusName::ARecipK(k) => a_recip_k_series(k, order)?,
        };
        Ok(GenusSpec {
            name,
            series,
            grading: name.default_grading(),
        })
    }

    /// K_1..K_n of this genus in its native grading.
    pub fn sequence(&self, n: usize) -> Result<Vec<GradedPolynomial>> {
        multiplicative_sequence(&self.series, n, self.grading)
    }
}

/// [p_1..p_n] written in Chern variables c_1..c_n: p_j is the j-th
/// elementary symmetric function of the squared Chern roots, which unpacks
/// to p_j = sum_{a+b=2j} (-1)^{b+j} c_a c_b with c_0 = 1 and c_i = 0 for
/// i > n. Each p_j is homogeneous of weight 2j.
pub fn chern_to_pontrjagin(n: usize) -> Vec<GradedPolynomial> {
    (1..=n)
        .map(|j| {
            let mut p = GradedPolynomial::zero(VarKind::Chern, n);
            for a in 0..=(2 * j) {
                let b = 2 * j - a;
                if a > n || b > n {
                    continue;
                }
                let mon = {
                    let mut exps = vec![0u32; n];
                    if a > 0 {
                        exps[a - 1] += 1;
                    }
                    if b > 0 {
                        exps[b - 1] += 1;
                    }
                    crate::symmetric::graded::Monomial::new(0, exps)
                };
                let sign = if (b + j) % 2 == 0 { 1 } else { -1 };
                p.add_term(mon, Rational::from(sign));
            }
            p
        })
        .collect()
}

/// [A-hat_0 .. A-hat_{floor(n/2)}] converted to Chern variables c_1..c_n;
/// entry s is homogeneous of weight 2s (A-hat_0 = 1).
pub fn ahat_chern_polynomials(n: usize) -> Result<Vec<GradedPolynomial>> {
    let jmax = n / 2;
    let mut out = vec![GradedPolynomial::one(VarKind::Chern, n)];
    if jmax == 0 {
        return Ok(out);
    }
    let seq = multiplicative_sequence(&ahat_series(2 * jmax), jmax, VarKind::Pontrjagin)?;
    let conv = chern_to_pontrjagin(n);
    let subst = Substitution::into_ring(VarKind::Pontrjagin, conv[..jmax].to_vec())?;
    for k in &seq {
        out.push(k.substitute(&subst)?);
    }
    Ok(out)
}

/// Outcome of a symbolic identity check; the witness is the difference of
/// the two sides and is zero exactly when the identity holds.
#[derive(Clone, Debug)]
pub struct Verification<W> {
    pub ok: bool,
    pub witness: W,
}

/// Checks T_k = sum_{r+2s=k} c_1^r A-hat_s / (r! 2^r) symbolically in
/// c_1..c_n, the expansion of the Todd class as exp(c_1/2) times the A-hat
/// class.
pub fn verify_todd_decomposition(k: usize, n: usize) -> Result<Verification<GradedPolynomial>> {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    let todd = multiplicative_sequence(&todd_series(n), n, VarKind::Chern)?;
    let ahat_c = ahat_chern_polynomials(n)?;
    let c1 = GradedPolynomial::var(VarKind::Chern, n, 1);
    let mut rhs = GradedPolynomial::zero(VarKind::Chern, n);
    for (s, ahat_s) in ahat_c.iter().enumerate().take(k / 2 + 1) {
        let r = k - 2 * s;
        let coeff = (factorial(r) * Rational::from(2).pow(r as i32)).recip();
        rhs += &(&c1.pow(r as u32) * ahat_s).scalar_mul(&coeff);
    }
    let witness = &todd[k - 1] - &rhs;
    Ok(Verification {
        ok: witness.is_zero(),
        witness,
    })
}

/// Checks x e^{x/k} / (e^x - 1) = e^{(1/k - 1/2) x} * (x/2)/sinh(x/2)
/// coefficientwise up to the given order.
pub fn verify_exp_identity(k: i64, order: usize) -> Result<Verification<PowerSeries>> {
    if k < 2 {
        return Err(Error::BadK(format!(
            "identity is stated for k >= 2, got {k}"
        )));
    }
    let lhs = a_recip_k_series(k, order)?;
    let shift = Rational::new(1, k) - Rational::new(1, 2);
    let rhs = exp_series(order).scale_arg(&shift) * ahat_series(order);
    let witness = &lhs - &rhs;
    Ok(Verification {
        ok: witness.is_zero(),
        witness,
    })
}

/// Checks the scaling relation K_n(A_k) = k^n K_n(A_{1/k}) symbolically in
/// Chern variables, the sequence-level form of A_k(M) = k^n A_{1/k}(M).
pub fn verify_ak_scaling(k: i64, n: usize) -> Result<Verification<GradedPolynomial>> {
    if k < 2 {
        return Err(Error::BadK(format!(
            "scaling is stated for k >= 2, got {k}"
        )));
    }
    assert!(n >= 1);
    let lhs = multiplicative_sequence(&ak_series(k, n)?, n, VarKind::Chern)?;
    let rhs = multiplicative_sequence(&a_recip_k_series(k, n)?, n, VarKind::Chern)?;
    let witness = &lhs[n - 1] - &rhs[n - 1].scalar_mul(&Rational::from(k).pow(n as i32));
    Ok(Verification {
        ok: witness.is_zero(),
        witness,
    })
}

/// Outcome of the A_2 comparison: the A_2 series must equal x/sinh(x)
/// (hence be even), and its degree-n Chern polynomial must be 2^n times the
/// degree-n part of the A-hat class in Chern variables.
#[derive(Clone, Debug)]
pub struct A2Verification {
    pub series_even: bool,
    pub series_witness: PowerSeries,
    pub poly_witness: GradedPolynomial,
}

impl A2Verification {
    pub fn ok(&self) -> bool {
        self.series_even && self.series_witness.is_zero() && self.poly_witness.is_zero()
    }
}

pub fn verify_a2_is_ahat(n: usize) -> Result<A2Verification> {
    assert!(n >= 1);
    let order = (2 * n).max(8);
    let a2 = ak_series(2, order)?;
    // x/sinh(x) built directly as the inverse of sinh(x)/x.
    let mut sinh_over_x = vec![Rational::zero(); order + 1];
    let mut m = 0;
    while 2 * m <= order {
        sinh_over_x[2 * m] = factorial(2 * m + 1).recip();
        m += 1;
    }
    let x_over_sinh = PowerSeries::from_coeffs(sinh_over_x).inverse()?;
    let series_witness = &a2 - &x_over_sinh;

    let k_n = multiplicative_sequence(&a2, n, VarKind::Chern)?[n - 1].clone();
    let ahat_c = ahat_chern_polynomials(n)?;
    let target = if n.is_multiple_of(2) {
        ahat_c[n / 2].scalar_mul(&Rational::from(2).pow(n as i32))
    } else {
        GradedPolynomial::zero(VarKind::Chern, n)
    };
    Ok(A2Verification {
        series_even: a2.is_even(),
        series_witness,
        poly_witness: &k_n - &target,
    })
}
