//! Manifold descriptors as characteristic-number tables.
//!
//! A [`CharacteristicTable`] stands in for a closed 2n-dimensional unitary
//! manifold: it records the evaluation of every weight-n monomial in the
//! Chern classes (optionally decorated by powers of a distinguished
//! degree-2 class x with c_1 = k0 x) against the fundamental class.
//! Pontrjagin-graded data is always derived through
//! [`chern_to_pontrjagin`](crate::genus::chern_to_pontrjagin), so the Chern
//! numbers are the single source of truth.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genus::{chern_to_pontrjagin, GenusSpec};
use crate::rational::{binomial, Rational};
use crate::symmetric::graded::{GradedPolynomial, Monomial, Substitution, VarKind};
use crate::symmetric::partition::partitions_of;

/// Geometric hypotheses a table claims to model. These have no
/// computational shadow here; they are carried as metadata and echoed in
/// reports as assumed, not verified.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Hypotheses {
    #[serde(default)]
    pub connected: bool,
    #[serde(default)]
    pub h1_zero: bool,
    #[serde(default)]
    pub nontrivial_circle_action: bool,
}

impl Hypotheses {
    pub fn all_assumed() -> Self {
        Hypotheses {
            connected: true,
            h1_zero: true,
            nontrivial_circle_action: true,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacteristicTable {
    half_dim: usize,
    has_x: bool,
    k0: Option<i64>,
    hypotheses: Hypotheses,
    numbers: BTreeMap<Monomial, Rational>,
}

/// All weight-n monomials over {x} (if included) and c_1..c_n, in
/// deterministic order.
pub fn weight_monomials(n: usize, include_x: bool) -> Vec<Monomial> {
    let mut out = Vec::new();
    let x_range = if include_x { 0..=n } else { 0..=0 };
    for a in x_range {
        for lambda in partitions_of((n - a) as u32) {
            let base = Monomial::from_partition(&lambda, n);
            out.push(Monomial::new(a as u32, base.exps().to_vec()));
        }
    }
    out
}

impl CharacteristicTable {
    /// Validates all invariants: every key has weight exactly n, x appears
    /// only when `has_x`, and when k0 is set every monomial containing c_1
    /// is tied to its x-replacement by the factor k0.
    pub fn new(
        half_dim: usize,
        has_x: bool,
        k0: Option<i64>,
        hypotheses: Hypotheses,
        numbers: BTreeMap<Monomial, Rational>,
    ) -> Result<Self> {
        if k0.is_some() && !has_x {
            return Err(Error::InvariantViolation(
                "k0 is set but the table has no distinguished class x".into(),
            ));
        }
        for m in numbers.keys() {
            if m.nvars() != half_dim {
                return Err(Error::InvariantViolation(format!(
                    "monomial {} indexes {} variables, table has {half_dim}",
                    m.display_with(VarKind::Chern),
                    m.nvars()
                )));
            }
            if m.x_weight(VarKind::Chern) as usize != half_dim {
                return Err(Error::InvariantViolation(format!(
                    "monomial {} has weight {}, expected {half_dim}",
                    m.display_with(VarKind::Chern),
                    m.x_weight(VarKind::Chern)
                )));
            }
            if !has_x && m.x_exp() > 0 {
                return Err(Error::InvariantViolation(format!(
                    "monomial {} uses x but has_x is false",
                    m.display_with(VarKind::Chern)
                )));
            }
        }
        let table = CharacteristicTable {
            half_dim,
            has_x,
            k0,
            hypotheses,
            numbers,
        };
        if let Some(k0) = k0 {
            table.check_k0_consistency(k0)?;
        }
        Ok(table)
    }

    fn check_k0_consistency(&self, k0: i64) -> Result<()> {
        let k0q = Rational::from(k0);
        for (m, value) in &self.numbers {
            if self.half_dim == 0 || m.exp(1) == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[0] -= 1;
            let replaced = Monomial::new(m.x_exp() + 1, exps);
            let counterpart = self.numbers.get(&replaced).ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "monomial {} has no x-replacement partner {}",
                    m.display_with(VarKind::Chern),
                    replaced.display_with(VarKind::Chern)
                ))
            })?;
            if value != &(&k0q * counterpart) {
                return Err(Error::InvariantViolation(format!(
                    "c_1 = {k0}x is violated at {}: {} != {k0} * {}",
                    m.display_with(VarKind::Chern),
                    value,
                    counterpart
                )));
            }
        }
        Ok(())
    }

    /// The table of a point: half-dimension 0, a single empty monomial
    /// evaluating to 1.
    pub fn point() -> Self {
        let mut numbers = BTreeMap::new();
        numbers.insert(Monomial::one(0), Rational::one());
        CharacteristicTable {
            half_dim: 0,
            has_x: false,
            k0: None,
            hypotheses: Hypotheses {
                connected: true,
                h1_zero: true,
                nontrivial_circle_action: false,
            },
            numbers,
        }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn has_x(&self) -> bool {
        self.has_x
    }

    pub fn k0(&self) -> Option<i64> {
        self.k0
    }

    pub fn hypotheses(&self) -> &Hypotheses {
        &self.hypotheses
    }

    pub fn numbers(&self) -> &BTreeMap<Monomial, Rational> {
        &self.numbers
    }

    pub fn value(&self, m: &Monomial) -> Result<&Rational> {
        self.numbers
            .get(m)
            .ok_or_else(|| Error::MissingMonomial(m.display_with(VarKind::Chern)))
    }

    /// Linear evaluation of a Chern-variable polynomial whose terms all
    /// have weight n.
    pub fn evaluate_poly(&self, poly: &GradedPolynomial) -> Result<Rational> {
        assert_eq!(
            poly.kind(),
            VarKind::Chern,
            "evaluation needs Chern variables"
        );
        let poly = if poly.nvars() < self.half_dim {
            poly.extend_vars(self.half_dim)
        } else {
            poly.clone()
        };
        assert_eq!(
            poly.nvars(),
            self.half_dim,
            "polynomial arity exceeds table"
        );
        let mut acc = Rational::zero();
        for (m, c) in poly.terms() {
            if m.x_weight(VarKind::Chern) as usize != self.half_dim {
                return Err(Error::WeightMismatch(format!(
                    "term {} has weight {}, table evaluates weight {}",
                    m.display_with(VarKind::Chern),
                    m.x_weight(VarKind::Chern),
                    self.half_dim
                )));
            }
            if m.x_exp() > 0 && !self.has_x {
                return Err(Error::NoDistinguishedClass);
            }
            acc += c * self.value(m)?;
        }
        Ok(acc)
    }

    /// The genus of this table: the weight-n sequence polynomial of the
    /// spec evaluated against the numbers map. Pontrjagin-graded specs are
    /// converted to Chern variables first; in odd half-dimension they have
    /// no weight-n component and the genus is 0.
    pub fn evaluate_genus(&self, spec: &GenusSpec) -> Result<Rational> {
        let n = self.half_dim;
        if n == 0 {
            return self.value(&Monomial::one(0)).cloned();
        }
        let poly = match spec.grading {
            VarKind::Chern => spec.sequence(n)?[n - 1].clone(),
            VarKind::Pontrjagin => {
                if n % 2 == 1 {
                    return Ok(Rational::zero());
                }
                let j = n / 2;
                let seq = spec.sequence(j)?;
                let conv = chern_to_pontrjagin(n);
                let subst = Substitution::into_ring(VarKind::Pontrjagin, conv[..j].to_vec())?;
                seq[j - 1].substitute(&subst)?
            }
        };
        self.evaluate_poly(&poly)
    }

    /// Evaluates x^a * poly against the table. `poly` may be in Pontrjagin
    /// variables, in which case it is converted through
    /// `chern_to_pontrjagin` first; a + weight(poly) must equal n.
    pub fn evaluate_mixed(&self, a: u32, poly: &GradedPolynomial) -> Result<Rational> {
        if !self.has_x {
            return Err(Error::NoDistinguishedClass);
        }
        let chern = match poly.kind() {
            VarKind::Chern => poly.clone(),
            VarKind::Pontrjagin => {
                let conv = chern_to_pontrjagin(self.half_dim);
                assert!(poly.nvars() <= conv.len(), "polynomial arity exceeds table");
                let subst =
                    Substitution::into_ring(VarKind::Pontrjagin, conv[..poly.nvars()].to_vec())?;
                poly.substitute(&subst)?
            }
        };
        if let Some(w) = chern.homogeneous_x_weight() {
            if a + w != self.half_dim as u32 {
                return Err(Error::WeightMismatch(format!(
                    "x^{a} times a weight-{w} polynomial does not have weight {}",
                    self.half_dim
                )));
            }
        }
        self.evaluate_poly(&chern.mul_by_x(a))
    }

    /// Builds a complete table from values on the c_1-free monomials: every
    /// monomial containing c_1^e is filled in as k0^e times its x-replaced
    /// free key, so the c_1 = k0 x invariant holds by construction.
    pub fn from_c1_free_numbers(
        n: usize,
        k0: i64,
        hypotheses: Hypotheses,
        free: &BTreeMap<Monomial, Rational>,
    ) -> Result<Self> {
        let mut numbers = BTreeMap::new();
        let k0q = Rational::from(k0);
        for m in weight_monomials(n, true) {
            let e1 = m.exp(1);
            if e1 == 0 {
                let v = free
                    .get(&m)
                    .ok_or_else(|| Error::MissingMonomial(m.display_with(VarKind::Chern)))?;
                numbers.insert(m, v.clone());
            } else {
                let mut exps = m.exps().to_vec();
                exps[0] = 0;
                let key = Monomial::new(m.x_exp() + e1, exps);
                let v = free
                    .get(&key)
                    .ok_or_else(|| Error::MissingMonomial(key.display_with(VarKind::Chern)))?;
                numbers.insert(m, k0q.pow(e1 as i32) * v);
            }
        }
        CharacteristicTable::new(n, true, Some(k0), hypotheses, numbers)
    }

    pub fn to_json_string(&self) -> String {
        let file = TableFile {
            half_dim: self.half_dim,
            has_x: self.has_x,
            k0: self.k0,
            hypotheses: self.hypotheses,
            numbers: self
                .numbers
                .iter()
                .map(|(m, v)| (m.display_with(VarKind::Chern), v.to_string()))
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("table serialization");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: TableFile =
            serde_json::from_str(s).map_err(|e| Error::ParseError(e.to_string()))?;
        let mut numbers = BTreeMap::new();
        for (key, value) in &file.numbers {
            let m = Monomial::parse_chern(key, file.half_dim)?;
            let v: Rational = value.parse()?;
            if numbers.insert(m, v).is_some() {
                return Err(Error::InvariantViolation(format!(
                    "duplicate monomial key {key:?}"
                )));
            }
        }
        CharacteristicTable::new(file.half_dim, file.has_x, file.k0, file.hypotheses, numbers)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path.as_ref(), self.to_json_string())
            .map_err(|e| Error::ParseError(format!("write {}: {e}", path.as_ref().display())))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path.as_ref())
            .map_err(|e| Error::ParseError(format!("read {}: {e}", path.as_ref().display())))?;
        Self::from_json_str(&text)
    }
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    half_dim: usize,
    has_x: bool,
    k0: Option<i64>,
    hypotheses: Hypotheses,
    numbers: BTreeMap<String, String>,
}

/// Complex projective space CP^n: total Chern class (1+x)^{n+1} with x the
/// hyperplane class, x^n[CP^n] = 1, and c_1 = (n+1) x.
pub fn cp_table(n: usize) -> CharacteristicTable {
    assert!(n >= 1);
    build_from_x_powers(n, |i| binomial(n + 1, i), Rational::one(), (n + 1) as i64)
        .expect("projective-space table is consistent")
}

/// Degree-d hypersurface in CP^{n+1}: total Chern class
/// (1+x)^{n+2} / (1+dx) restricted, x^n[X] = d, c_1 = (n+2-d) x.
pub fn hypersurface_table(n: usize, d: i64) -> CharacteristicTable {
    assert!(n >= 1 && d >= 1);
    let dq = Rational::from(d);
    // Coefficients of (1+x)^{n+2} * sum (-d x)^j.
    let gamma = |i: usize| -> Rational {
        let mut acc = Rational::zero();
        let mut dpow = Rational::one();
        for j in 0..=i {
            acc += binomial(n + 2, i - j) * &dpow;
            dpow *= &-&dq;
        }
        acc
    };
    let hypotheses = Hypotheses {
        connected: true,
        // Plane curves of degree >= 3 have nonzero first Betti number.
        h1_zero: n >= 2 || d <= 2,
        // A hyperplane is CP^n, which does admit circle actions.
        nontrivial_circle_action: d == 1,
    };
    let top = dq.clone();
    let mut t = build_from_x_powers(n, gamma, top, (n + 2) as i64 - d)
        .expect("hypersurface table is consistent");
    t.hypotheses = hypotheses;
    t
}

/// Table where c_i = gamma(i) x^i and x^n[M] = top. The k0 invariant holds
/// automatically because gamma(1) = k0.
fn build_from_x_powers(
    n: usize,
    gamma: impl Fn(usize) -> Rational,
    top: Rational,
    k0: i64,
) -> Result<CharacteristicTable> {
    let coeffs: Vec<Rational> = (1..=n).map(&gamma).collect();
    debug_assert_eq!(coeffs[0], Rational::from(k0));
    let mut numbers = BTreeMap::new();
    for m in weight_monomials(n, true) {
        let mut v = top.clone();
        for (i, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                v *= &coeffs[i];
            }
        }
        numbers.insert(m, v);
    }
    CharacteristicTable::new(n, true, Some(k0), Hypotheses::all_assumed(), numbers)
}

/// Chern numbers of a product A x B via the Whitney sum formula
/// c(A x B) = c(A) c(B) and the Kuenneth evaluation. The product table has
/// no distinguished x class: there is no canonical choice on a product.
pub fn product_table(
    a: &CharacteristicTable,
    b: &CharacteristicTable,
) -> Result<CharacteristicTable> {
    let (na, nb) = (a.half_dim(), b.half_dim());
    let n = na + nb;
    let mut numbers = BTreeMap::new();
    for target in weight_monomials(n, false) {
        // Expand prod_t (sum_{i+j=part_t} c_i(A) c_j(B)) as pairs of
        // monomials; only bidegree (na, nb) pairs evaluate nonzero.
        let mut pairs: BTreeMap<(Monomial, Monomial), Rational> = BTreeMap::new();
        pairs.insert((Monomial::one(na), Monomial::one(nb)), Rational::one());
        for (idx, &e) in target.exps().iter().enumerate() {
            let part = idx + 1;
            for _ in 0..e {
                let mut next: BTreeMap<(Monomial, Monomial), Rational> = BTreeMap::new();
                for ((ma, mb), coeff) in &pairs {
                    for i in 0..=part {
                        let j = part - i;
                        if i > na || j > nb {
                            continue;
                        }
                        let mut ea = ma.exps().to_vec();
                        if i > 0 {
                            ea[i - 1] += 1;
                        }
                        let mut eb = mb.exps().to_vec();
                        if j > 0 {
                            eb[j - 1] += 1;
                        }
                        let key = (Monomial::new(0, ea), Monomial::new(0, eb));
                        let entry = next.entry(key).or_insert_with(Rational::zero);
                        *entry += coeff;
                    }
                }
                pairs = next;
            }
        }
        let mut value = Rational::zero();
        for ((ma, mb), coeff) in &pairs {
            if ma.x_weight(VarKind::Chern) as usize != na {
                continue;
            }
            value += coeff * a.value(ma)? * b.value(mb)?;
        }
        numbers.insert(target, value);
    }
    let hypotheses = Hypotheses {
        connected: a.hypotheses.connected && b.hypotheses.connected,
        h1_zero: a.hypotheses.h1_zero && b.hypotheses.h1_zero,
        nontrivial_circle_action: a.hypotheses.nontrivial_circle_action
            || b.hypotheses.nontrivial_circle_action,
    };
    CharacteristicTable::new(n, false, None, hypotheses, numbers)
}
