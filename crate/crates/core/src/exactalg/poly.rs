//! Sparse multivariate and dense univariate polynomials over [`Rational`].
//!
//! `MultiPoly` is kept in a canonical form at all times: a fixed variable
//! order (the conic parameters `a..f`, then the arc parameter `t`, then any
//! auxiliaries alphabetically), exponent vectors as map keys, and no zero
//! coefficients. Two equal polynomials therefore have identical
//! representations. All values are immutable; every operation returns a
//! fresh polynomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactalg::Rational;
use crate::Error;

/// Fixed total order on variable names: a < b < c < d < e < f < t < rest.
fn var_key(name: &str) -> (u8, String) {
    let rank = match name {
        "a" | "b" | "c" | "d" | "e" | "f" => 0,
        "t" => 1,
        _ => 2,
    };
    (rank, name.to_string())
}

fn var_cmp(x: &str, y: &str) -> Ordering {
    var_key(x).cmp(&var_key(y))
}

/// A sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// `coeff * v1 * v2 * ...`; repeated names multiply into powers.
    pub fn monomial(coeff: i64, vars: &[&str]) -> Self {
        let mut p = MultiPoly::constant(Rational::from_int(coeff));
        for v in vars {
            p = &p * &MultiPoly::var(v);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Drops variables that no longer occur in any term.
    fn compact(mut self) -> Self {
        let n = self.vars.len();
        let used: Vec<bool> = (0..n)
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| {
                let e2: Vec<u32> = e
                    .iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(&x, _)| x)
                    .collect();
                (e2, c)
            })
            .collect();
        MultiPoly { vars, terms }
    }

    /// Re-expresses both polynomials over the merged variable list.
    fn align(lhs: &MultiPoly, rhs: &MultiPoly) -> (Vec<String>, MultiPoly, MultiPoly) {
        let mut vars: Vec<String> = lhs.vars.iter().chain(rhs.vars.iter()).cloned().collect();
        vars.sort_by(|x, y| var_cmp(x, y));
        vars.dedup();
        (vars.clone(), lhs.embed(&vars), rhs.embed(&vars))
    }

    fn embed(&self, vars: &[String]) -> MultiPoly {
        if self.vars == vars {
            return self.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = vec![0u32; vars.len()];
                for (i, &x) in e.iter().enumerate() {
                    e2[idx[i]] = x;
                }
                (e2, c.clone())
            })
            .collect();
        MultiPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    fn add_term(terms: &mut BTreeMap<Vec<u32>, Rational>, exp: Vec<u32>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(Rational::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Full evaluation; every variable must be bound.
    pub fn eval(&self, bindings: &BTreeMap<String, Rational>) -> Result<Rational, Error> {
        let vals: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .get(v)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term *= vals[i].pow(k);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for variables; unbound variables pass through.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        // Per-variable power tables, computed to the max exponent in use.
        let reps: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .get(v)
                    .cloned()
                    .unwrap_or_else(|| MultiPoly::var(v))
            })
            .collect();
        let max_exp: Vec<u32> = (0..self.vars.len())
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<MultiPoly>> = reps
            .iter()
            .zip(&max_exp)
            .map(|(r, &m)| {
                let mut pw = vec![MultiPoly::constant(Rational::one())];
                for k in 1..=m {
                    pw.push(&pw[(k - 1) as usize] * r);
                }
                pw
            })
            .collect();
        let mut acc = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Converts a polynomial in at most the single variable `var` to dense form.
    pub fn to_unipoly(&self, var: &str) -> Result<UniPoly, Error> {
        let mut coeffs: Vec<Rational> = Vec::new();
        let pos = self.vars.iter().position(|v| v == var);
        for (e, c) in &self.terms {
            let mut deg = 0u32;
            for (i, &k) in e.iter().enumerate() {
                if Some(i) == pos {
                    deg = k;
                } else if k != 0 {
                    return Err(Error::NotUnivariate(self.vars[i].clone()));
                }
            }
            let d = deg as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (vars, a, b) = MultiPoly::align(self, rhs);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            MultiPoly::add_term(&mut terms, e, c);
        }
        MultiPoly { vars, terms }.compact()
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (vars, a, b) = MultiPoly::align(self, rhs);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea
                    .iter()
                    .zip(eb)
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                MultiPoly::add_term(&mut terms, e, ca * cb);
            }
        }
        MultiPoly { vars, terms }.compact()
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Leading (lex-largest) monomial first.
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut sep = "";
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                write!(f, "{sep}{}", self.vars[i])?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
                sep = "*";
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A dense univariate polynomial in the arc parameter `t`.
///
/// Coefficients are listed from `t^0` upward; the leading coefficient is
/// nonzero unless the polynomial is zero (empty list).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c0 + c1 t + c2 t^2 + ...` from integer shorthand.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// `coeff * t^k`.
    pub fn term(coeff: Rational, k: usize) -> Self {
        if coeff.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = coeff;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at t = 0; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn to_multipoly(&self, var: &str) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let mono = MultiPoly::var(var).pow(k as u32).scale(c);
            acc = &acc + &mono;
        }
        acc
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multipoly("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cancels the common power of `t` from a projective triple and reads off the
/// limit at t = 0.
///
/// Returns the minimum t-adic valuation `v` over the three polynomials and
/// the coefficient of `t^v` in each. An all-zero input signals an arc lying
/// inside the indeterminacy locus and is an error.
pub fn t_strip(triple: &[UniPoly; 3]) -> Result<(usize, [Rational; 3]), Error> {
    let v = triple
        .iter()
        .filter_map(UniPoly::valuation)
        .min()
        .ok_or(Error::IndeterminateLimit)?;
    Ok((
        v,
        [triple[0].coeff(v), triple[1].coeff(v), triple[2].coeff(v)],
    ))
}
