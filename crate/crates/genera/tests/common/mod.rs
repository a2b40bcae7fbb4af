//! Brute-force symbolic-roots oracle shared by the integration tests.
#![allow(dead_code)] // not every test target uses every oracle helper
//!
//! Multiplicative sequences are recomputed here the slow way: expand the
//! product of Q over explicit formal roots as a dense multivariate
//! polynomial, then rewrite each symmetric homogeneous part in elementary
//! symmetric functions by repeatedly subtracting the leading e-product.
//! Nothing in this module touches the log/exp generator it is used to
//! check.

use std::collections::BTreeMap;

use genera::symmetric::graded::{GradedPolynomial, Monomial, VarKind};
use genera::{PowerSeries, Rational};

/// Dense polynomial in formal roots x_1..x_n.
#[derive(Clone, PartialEq, Debug)]
pub struct RootPoly {
    nroots: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RootPoly {
    pub fn zero(nroots: usize) -> Self {
        RootPoly {
            nroots,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nroots: usize, c: Rational) -> Self {
        let mut p = Self::zero(nroots);
        p.add_term(vec![0; nroots], c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nroots);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &RootPoly) -> RootPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &RootPoly) -> RootPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul_truncated(&self, other: &RootPoly, max_total_deg: u32) -> RootPoly {
        let mut out = RootPoly::zero(self.nroots);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da + db > max_total_deg {
                    continue;
                }
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// Elementary symmetric polynomial e_j of the roots.
    pub fn elementary(nroots: usize, j: usize) -> RootPoly {
        if j == 0 {
            return RootPoly::constant(nroots, Rational::one());
        }
        let mut out = RootPoly::zero(nroots);
        if j > nroots {
            return out;
        }
        assert!(nroots < 24, "oracle is for desk-scale root counts");
        for mask in 0u32..(1 << nroots) {
            if mask.count_ones() as usize != j {
                continue;
            }
            let exps: Vec<u32> = (0..nroots).map(|i| (mask >> i) & 1).collect();
            out.add_term(exps, Rational::one());
        }
        out
    }

    /// Power sum ps_j of the roots.
    pub fn power_sum(nroots: usize, j: u32) -> RootPoly {
        let mut out = RootPoly::zero(nroots);
        for i in 0..nroots {
            let mut exps = vec![0u32; nroots];
            exps[i] = j;
            out.add_term(exps, Rational::one());
        }
        out
    }

    /// prod_i Q(x_i^{root_power}) truncated at total degree max_total_deg.
    pub fn series_product(
        q: &PowerSeries,
        nroots: usize,
        root_power: u32,
        max_total_deg: u32,
    ) -> RootPoly {
        let mut out = RootPoly::constant(nroots, Rational::one());
        for i in 0..nroots {
            let mut factor = RootPoly::zero(nroots);
            let mut m = 0;
            while m as u32 * root_power <= max_total_deg && m <= q.order() {
                let mut exps = vec![0u32; nroots];
                exps[i] = m as u32 * root_power;
                factor.add_term(exps, q.coeff(m).clone());
                m += 1;
            }
            out = out.mul_truncated(&factor, max_total_deg);
        }
        out
    }

    /// Rewrites a symmetric polynomial in the elementary symmetric
    /// functions of the roots by the classical leading-term algorithm. The
    /// output lives in a graded ring where variable i stands for e_i.
    pub fn to_elementary(&self, kind: VarKind) -> GradedPolynomial {
        let n = self.nroots;
        let mut remainder = self.clone();
        let mut out = GradedPolynomial::zero(kind, n);
        while let Some((alpha, coeff)) = remainder.terms.iter().next_back() {
            let alpha = alpha.clone();
            let coeff = coeff.clone();
            assert!(
                alpha.windows(2).all(|w| w[0] >= w[1]),
                "lex-leading exponent of a symmetric polynomial must be weakly decreasing: {alpha:?}"
            );
            // e_1^{a1-a2} e_2^{a2-a3} ... e_n^{an}
            let mut beta = vec![0u32; n];
            for i in 0..n {
                let next = if i + 1 < n { alpha[i + 1] } else { 0 };
                beta[i] = alpha[i] - next;
            }
            let mut expansion = RootPoly::constant(n, coeff.clone());
            for (i, &b) in beta.iter().enumerate() {
                let e = RootPoly::elementary(n, i + 1);
                for _ in 0..b {
                    expansion = expansion.mul_truncated(&e, u32::MAX);
                }
            }
            remainder = remainder.sub(&expansion);
            out.add_term(Monomial::new(0, beta), coeff);
        }
        out
    }
}

/// The weight-m part (in v units) of prod_i Q(x_i) over n roots, written in
/// the elementary symmetric functions: the oracle for K_m of a Chern-graded
/// multiplicative sequence.
pub fn sequence_oracle_chern(q: &PowerSeries, n: usize, m: u32) -> GradedPolynomial {
    let product = RootPoly::series_product(q, n, 1, m);
    let mut part = RootPoly::zero(n);
    for (e, c) in &product.terms {
        if e.iter().sum::<u32>() == m {
            part.add_term(e.clone(), c.clone());
        }
    }
    part.to_elementary(VarKind::Chern)
}

/// Same oracle in the Pontrjagin grading: Q must be even, the roots are
/// squared, and variable j stands for p_j = e_j of the squared roots.
pub fn sequence_oracle_pontrjagin(q: &PowerSeries, n: usize, m: u32) -> GradedPolynomial {
    assert!(q.is_even());
    let compressed = PowerSeries::from_coeffs(
        (0..=q.order() / 2)
            .map(|j| q.coeff(2 * j).clone())
            .collect(),
    );
    let product = RootPoly::series_product(&compressed, n, 1, m);
    let mut part = RootPoly::zero(n);
    for (e, c) in &product.terms {
        if e.iter().sum::<u32>() == m {
            part.add_term(e.clone(), c.clone());
        }
    }
    part.to_elementary(VarKind::Pontrjagin)
}
