//! Truncated formal power series over exact rationals.
//!
//! A [`PowerSeries`] stores coefficients 0..=order densely; the truncation
//! order is explicit and carried by every value. Binary operations truncate
//! to the minimum order of their operands rather than erroring, so
//! composition pipelines stay total.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>, // index = exponent, length = order + 1
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// c * x^exp, truncated to `order`.
    pub fn monomial(c: Rational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Builds a series from coefficients indexed by exponent; the truncation
    /// order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^m. Panics beyond the truncation order.
    pub fn coeff(&self, m: usize) -> &Rational {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// All odd-degree coefficients vanish.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Rational::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let end = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=end].to_vec(),
        }
    }

    /// Equality of all coefficients up to the smaller truncation order.
    pub fn agrees_to_common_order(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes x -> lambda * x: coefficient m picks up lambda^m.
    pub fn scale_arg(&self, lambda: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let c = a * &pow;
                pow *= lambda;
                c
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let inv0 = self.coeffs[0].recip();
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = inv0.clone();
        for m in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=m {
                acc += &self.coeffs[j] * &out[m - j];
            }
            out[m] = -acc * &inv0;
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = Rational::one();
        // e' = a' e  =>  m e_m = sum_{j=1..m} j a_j e_{m-j}
        for m in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=m {
                acc += Rational::from(j as i64) * &self.coeffs[j] * &out[m - j];
            }
            out[m] = acc / Rational::from(m as i64);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotNormalized(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        // a = exp(l)  =>  l_m = a_m - (1/m) sum_{j=1..m-1} j l_j a_{m-j}
        for m in 1..=order {
            let mut acc = Rational::zero();
            for (j, lj) in out.iter().enumerate().take(m).skip(1) {
                acc += Rational::from(j as i64) * lj * &self.coeffs[m - j];
            }
            out[m] = &self.coeffs[m] - acc / Rational::from(m as i64);
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|m| &self.coeffs[m] + &rhs.coeffs[m])
            .collect();
        PowerSeries { coeffs }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|m| &self.coeffs[m] - &rhs.coeffs[m])
            .collect();
        PowerSeries { coeffs }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match m {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a} ")?;
                    }
                    if m == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{m}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// exp(x) = sum x^m / m!.
pub fn exp_series(order: usize) -> PowerSeries {
    let coeffs = (0..=order).map(|m| factorial(m).recip()).collect();
    PowerSeries::from_coeffs(coeffs)
}

/// (1 - e^{-x}) / x = sum (-1)^m x^m / (m+1)!.
fn one_minus_exp_neg_over_x(order: usize) -> PowerSeries {
    let coeffs = (0..=order)
        .map(|m| {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            Rational::from(sign) * factorial(m + 1).recip()
        })
        .collect();
    PowerSeries::from_coeffs(coeffs)
}

/// sinh(x/2) / (x/2) = sum x^{2m} / (4^m (2m+1)!).
fn sinh_half_over_half(order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut m = 0;
    while 2 * m <= order {
        coeffs[2 * m] = factorial(2 * m + 1).recip() / Rational::from(4).pow(m as i32);
        m += 1;
    }
    PowerSeries::from_coeffs(coeffs)
}

/// Todd series x / (1 - e^{-x}).
pub fn todd_series(order: usize) -> PowerSeries {
    one_minus_exp_neg_over_x(order)
        .inverse()
        .expect("constant term is 1")
}

/// A-hat series (x/2) / sinh(x/2); an even series.
pub fn ahat_series(order: usize) -> PowerSeries {
    sinh_half_over_half(order)
        .inverse()
        .expect("constant term is 1")
}

/// L series x / tanh(x) = cosh(x) / (sinh(x)/x); an even series.
pub fn l_series(order: usize) -> PowerSeries {
    let mut cosh = vec![Rational::zero(); order + 1];
    let mut sinh_over_x = vec![Rational::zero(); order + 1];
    let mut m = 0;
    while 2 * m <= order {
        cosh[2 * m] = factorial(2 * m).recip();
        sinh_over_x[2 * m] = factorial(2 * m + 1).recip();
        m += 1;
    }
    let sinh_over_x = PowerSeries::from_coeffs(sinh_over_x);
    &PowerSeries::from_coeffs(cosh) * &sinh_over_x.inverse().expect("constant term is 1")
}

/// A_k series k x e^x / (e^{kx} - 1). Built as k e^x / ((e^{kx} - 1)/x) so
/// no zero-constant division ever appears. k = 1 is allowed and gives the
/// Todd series exactly.
pub fn ak_series(k: i64, order: usize) -> Result<PowerSeries> {
    if k < 1 {
        return Err(Error::BadK(format!("A_k needs k >= 1, got {k}")));
    }
    // (e^{kx} - 1)/x = sum k^{m+1} x^m / (m+1)!
    let kq = Rational::from(k);
    let denom = PowerSeries::from_coeffs(
        (0..=order)
            .map(|m| kq.pow(m as i32 + 1) * factorial(m + 1).recip())
            .collect(),
    );
    Ok(exp_series(order).scalar_mul(&kq) * denom.inverse().expect("constant term is k"))
}

/// A_{1/k} series x e^{x/k} / (e^x - 1).
pub fn a_recip_k_series(k: i64, order: usize) -> Result<PowerSeries> {
    if k < 1 {
        return Err(Error::BadK(format!("A_(1/k) needs k >= 1, got {k}")));
    }
    // (e^x - 1)/x = sum x^m / (m+1)!
    let denom = PowerSeries::from_coeffs((0..=order).map(|m| factorial(m + 1).recip()).collect());
    let exp_over_k = exp_series(order).scale_arg(&Rational::new(1, k));
    Ok(exp_over_k * denom.inverse().expect("constant term is 1"))
}
