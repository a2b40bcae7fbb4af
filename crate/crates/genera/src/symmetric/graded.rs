//! Weighted graded polynomials in Chern or Pontrjagin variables, with an
//! optional distinguished degree-2 class x.
//!
//! Weights are measured in "x units" (half the topological degree): x has
//! weight 1, c_i weight i, p_j weight 2j. Exponent vectors are dense and
//! fixed-length; terms live in a BTreeMap keyed by monomial so every
//! iteration order, printout and serialization is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::symmetric::partition::Partition;

/// What the indexed variables of a polynomial denote.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum VarKind {
    Chern,
    Pontrjagin,
}

impl VarKind {
    /// x-weight of the index-i variable is i times this factor.
    pub fn weight_factor(self) -> u32 {
        match self {
            VarKind::Chern => 1,
            VarKind::Pontrjagin => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            VarKind::Chern => "c",
            VarKind::Pontrjagin => "p",
        }
    }
}

/// x^a * v_1^{e_1} ... v_n^{e_n}; the variable letter is supplied by the
/// polynomial's [`VarKind`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    x_exp: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(x_exp: u32, exps: Vec<u32>) -> Self {
        Monomial { x_exp, exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            x_exp: 0,
            exps: vec![0; nvars],
        }
    }

    /// v_{i1} v_{i2} ... for the parts of a partition (1-based indices).
    pub fn from_partition(p: &Partition, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        for &part in p.parts() {
            assert!(part as usize <= nvars, "part {part} exceeds {nvars} vars");
            exps[part as usize - 1] += 1;
        }
        Monomial { x_exp: 0, exps }
    }

    pub fn x_exp(&self) -> u32 {
        self.x_exp
    }

    /// Exponent of the index-i variable (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.x_exp == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// Combined weight of the indexed variables, in v units.
    pub fn var_weight(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e)
            .sum()
    }

    pub fn x_weight(&self, kind: VarKind) -> u32 {
        self.x_exp + kind.weight_factor() * self.var_weight()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            x_exp: self.x_exp + other.x_exp,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn with_extended_vars(&self, nvars: usize) -> Monomial {
        assert!(nvars >= self.exps.len());
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial {
            x_exp: self.x_exp,
            exps,
        }
    }

    /// Canonical string: "x^2 c_1 c_3^2", "1" for the empty monomial.
    pub fn display_with(&self, kind: VarKind) -> String {
        let mut parts = Vec::new();
        match self.x_exp {
            0 => {}
            1 => parts.push("x".to_string()),
            e => parts.push(format!("x^{e}")),
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{}_{}", kind.symbol(), i + 1)),
                e => parts.push(format!("{}_{}^{}", kind.symbol(), i + 1, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Parses the canonical Chern-variable form produced by
    /// [`Monomial::display_with`].
    pub fn parse_chern(s: &str, nvars: usize) -> Result<Monomial> {
        let bad = |msg: &str| Error::ParseError(format!("bad monomial {s:?}: {msg}"));
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one(nvars));
        }
        let mut x_exp = 0u32;
        let mut exps = vec![0u32; nvars];
        let mut seen_x = false;
        for token in s.split_whitespace() {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => {
                    let exp: u32 = e.parse().map_err(|_| bad(&format!("bad exponent {e:?}")))?;
                    (b, exp)
                }
                None => (token, 1),
            };
            if exp == 0 {
                return Err(bad("zero exponents must be omitted"));
            }
            if base == "x" {
                if seen_x {
                    return Err(bad("repeated factor x"));
                }
                seen_x = true;
                x_exp = exp;
            } else if let Some(idx) = base.strip_prefix("c_") {
                let i: usize = idx
                    .parse()
                    .map_err(|_| bad(&format!("bad variable index {idx:?}")))?;
                if i == 0 || i > nvars {
                    return Err(bad(&format!("c_{i} out of range 1..={nvars}")));
                }
                if exps[i - 1] != 0 {
                    return Err(bad(&format!("repeated factor c_{i}")));
                }
                exps[i - 1] = exp;
            } else {
                return Err(bad(&format!("unknown factor {base:?}")));
            }
        }
        Ok(Monomial { x_exp, exps })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedPolynomial {
    kind: VarKind,
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>, // never stores zero coefficients
}

impl GradedPolynomial {
    pub fn zero(kind: VarKind, nvars: usize) -> Self {
        GradedPolynomial {
            kind,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(kind: VarKind, nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(kind, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(kind: VarKind, nvars: usize) -> Self {
        Self::constant(kind, nvars, Rational::one())
    }

    /// The index-i variable (1-based).
    pub fn var(kind: VarKind, nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index {i} out of range");
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Self::zero(kind, nvars);
        p.add_term(Monomial::new(0, exps), Rational::one());
        p
    }

    /// x^a as a polynomial.
    pub fn x_power(kind: VarKind, nvars: usize, a: u32) -> Self {
        let mut p = Self::zero(kind, nvars);
        p.add_term(Monomial::new(a, vec![0; nvars]), Rational::one());
        p
    }

    pub fn from_terms<I>(kind: VarKind, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(kind, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.kind, self.nvars);
        }
        GradedPolynomial {
            kind: self.kind,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn mul_impl(&self, rhs: &Self, max_x_weight: Option<u32>) -> Self {
        assert_eq!(self.kind, rhs.kind, "kind mismatch in product");
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch in product");
        let mut out = Self::zero(self.kind, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                if let Some(cap) = max_x_weight {
                    if m.x_weight(self.kind) > cap {
                        continue;
                    }
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// Product with all terms above the given x-weight dropped.
    pub fn mul_truncated(&self, rhs: &Self, max_x_weight: u32) -> Self {
        self.mul_impl(rhs, Some(max_x_weight))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.kind, self.nvars);
        for _ in 0..exp {
            result = result.mul_impl(self, None);
        }
        result
    }

    /// exp of a polynomial with zero constant term, truncated at the given
    /// x-weight.
    pub fn exp_truncated(&self, max_x_weight: u32) -> Result<Self> {
        let one_mon = Monomial::one(self.nvars);
        if let Some(c) = self.terms.get(&one_mon) {
            return Err(Error::NonzeroConstantTerm(c.clone()));
        }
        let mut result = Self::one(self.kind, self.nvars);
        let mut term = Self::one(self.kind, self.nvars);
        for m in 1..=max_x_weight as i64 {
            term = term
                .mul_truncated(self, max_x_weight)
                .scalar_mul(&Rational::new(1, m));
            if term.is_zero() {
                break;
            }
            result += &term;
        }
        Ok(result)
    }

    /// The homogeneous x-weight if every term shares it. Zero polynomials
    /// are homogeneous of every weight.
    pub fn homogeneous_x_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = it.next()?.x_weight(self.kind);
        it.all(|m| m.x_weight(self.kind) == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.x_weight(self.kind) == w)
    }

    /// The part of the polynomial with x-weight exactly w.
    pub fn x_weight_part(&self, w: u32) -> Self {
        GradedPolynomial {
            kind: self.kind,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_weight(self.kind) == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies every term by x^a.
    pub fn mul_by_x(&self, a: u32) -> Self {
        if a == 0 {
            return self.clone();
        }
        GradedPolynomial {
            kind: self.kind,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x_exp + a, m.exps.clone()), c.clone()))
                .collect(),
        }
    }

    /// Same polynomial regarded in a ring with more variables.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        GradedPolynomial {
            kind: self.kind,
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_extended_vars(nvars), c.clone()))
                .collect(),
        }
    }

    /// Applies a weight-preserving substitution to every variable.
    pub fn substitute(&self, subst: &Substitution) -> Result<Self> {
        assert_eq!(self.kind, subst.source_kind, "substitution kind mismatch");
        assert_eq!(
            self.nvars,
            subst.images.len(),
            "substitution does not cover all variables"
        );
        let mut out = Self::zero(subst.out_kind, subst.out_nvars);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(subst.out_kind, subst.out_nvars, c.clone());
            if m.x_exp > 0 {
                acc = acc.mul_impl(&subst.x_image.pow(m.x_exp), None);
            }
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    acc = acc.mul_impl(&subst.images[i].pow(e), None);
                }
            }
            out += &acc;
        }
        Ok(out)
    }
}

impl AddAssign<&GradedPolynomial> for GradedPolynomial {
    fn add_assign(&mut self, rhs: &GradedPolynomial) {
        assert_eq!(self.kind, rhs.kind, "kind mismatch in sum");
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch in sum");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scalar_mul(&-Rational::one())
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.mul_impl(rhs, None)
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending monomial order puts leading terms (largest c_1 power)
        // first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.display_with(self.kind))?;
            } else {
                write!(f, "{a} {}", m.display_with(self.kind))?;
            }
        }
        Ok(())
    }
}

/// A variable assignment for [`GradedPolynomial::substitute`]: images for
/// v_1..v_n (and x) in a common output ring, each homogeneous of the weight
/// of the variable it replaces.
#[derive(Clone, Debug)]
pub struct Substitution {
    source_kind: VarKind,
    out_kind: VarKind,
    out_nvars: usize,
    x_image: GradedPolynomial,
    images: Vec<GradedPolynomial>,
}

impl Substitution {
    /// Maps each source variable v_i to `images[i-1]`; x maps to x.
    pub fn into_ring(source_kind: VarKind, images: Vec<GradedPolynomial>) -> Result<Self> {
        assert!(!images.is_empty(), "substitution needs at least one image");
        let out_kind = images[0].kind();
        let out_nvars = images[0].nvars();
        let factor = source_kind.weight_factor();
        for (i, img) in images.iter().enumerate() {
            assert_eq!(img.kind(), out_kind, "images must share a ring");
            assert_eq!(img.nvars(), out_nvars, "images must share a ring");
            let want = (i as u32 + 1) * factor;
            if !img.is_homogeneous_of(want) {
                return Err(Error::WeightMismatch(format!(
                    "image of {}_{} must be homogeneous of weight {want}",
                    source_kind.symbol(),
                    i + 1
                )));
            }
        }
        let x_image = GradedPolynomial::x_power(out_kind, out_nvars, 1);
        Ok(Substitution {
            source_kind,
            out_kind,
            out_nvars,
            x_image,
            images,
        })
    }

    /// Same-ring substitution replacing the single variable v_index and
    /// fixing everything else.
    pub fn replace_var(
        kind: VarKind,
        nvars: usize,
        index: usize,
        image: GradedPolynomial,
    ) -> Result<Self> {
        assert!(index >= 1 && index <= nvars, "variable index out of range");
        assert_eq!(image.kind(), kind);
        assert_eq!(image.nvars(), nvars);
        let want = index as u32 * kind.weight_factor();
        if !image.is_homogeneous_of(want) {
            return Err(Error::WeightMismatch(format!(
                "image of {}_{index} must be homogeneous of weight {want}",
                kind.symbol()
            )));
        }
        let images = (1..=nvars)
            .map(|i| {
                if i == index {
                    image.clone()
                } else {
                    GradedPolynomial::var(kind, nvars, i)
                }
            })
            .collect();
        Ok(Substitution {
            source_kind: kind,
            out_kind: kind,
            out_nvars: nvars,
            x_image: GradedPolynomial::x_power(kind, nvars, 1),
            images,
        })
    }
}
