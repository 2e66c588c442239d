//! Multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! A polynomial carries its own ordered variable list. Binary operations align
//! operands by variable *name*: the result's variables are the left operand's
//! followed by any new ones from the right operand.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

type Exponents = Vec<u32>;

#[derive(Debug, Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigInt>,
}

/// A value bound to a variable in [`MultiPoly::eval`].
#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Exact(BigRational),
    Float(f64),
}

impl Number {
    pub fn int(v: i64) -> Self {
        Number::Exact(BigRational::from_integer(v.into()))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Number::Float(f) => *f,
        }
    }

    /// The exact integer value, if this is an exact integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Number::Exact(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }
}

impl From<i64> for Number {
    fn from(v: i64) -> Self {
        Number::int(v)
    }
}

impl From<f64> for Number {
    fn from(v: f64) -> Self {
        Number::Float(v)
    }
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; p.vars.len()], c.into());
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, 1)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        let mut p = Self::zero(&[name]);
        p.add_term(vec![1], BigInt::one());
        p
    }

    /// Builds `Σ coeff · Π vars[k]^exps[k]` from explicit terms.
    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial `Π name^exp`; unnamed variables have exponent 0.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> BigInt {
        let mut e = vec![0; self.vars.len()];
        for &(name, exp) in monomial {
            match self.var_index(name) {
                Some(i) => e[i] = exp,
                None if exp == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Highest exponent of `name` in any term (0 if absent).
    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Re-expresses `self` over `vars`, which must contain every variable that
    /// occurs with a nonzero exponent.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<MultiPoly> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let target = vars.iter().position(|w| w == v);
            if target.is_none() && self.terms.keys().any(|e| e[i] != 0) {
                return Err(Error::UnknownVariable(v.clone()));
            }
            map.push(target);
        }
        let mut out = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut ne = vec![0; out.vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if let Some(t) = map[i] {
                    ne[t] = x;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    fn aligned_vars(&self, other: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn align(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.aligned_vars(other);
        (
            self.with_vars(&vars).expect("superset of variables"),
            other.with_vars(&vars).expect("superset of variables"),
        )
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), x * c))
            .collect();
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces every occurrence of `var` by `replacement`.
    pub fn substitute(&self, var: &str, replacement: &MultiPoly) -> Result<MultiPoly> {
        let idx = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let rest: Vec<String> = self
            .vars
            .iter()
            .filter(|v| v.as_str() != var)
            .cloned()
            .collect();
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(&replacement.vars)];
        let mut out = MultiPoly::zero(&rest);
        out = out.align(replacement).0;
        for (e, c) in &self.terms {
            let k = e[idx] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * replacement;
                powers.push(next);
            }
            let mut mono_exps: Vec<u32> = e.clone();
            mono_exps.remove(idx);
            let mono = MultiPoly::from_terms(&rest, [(mono_exps, c.clone())]);
            out = &out + &(&mono * &powers[k]);
        }
        Ok(out)
    }

    /// Convenience: substitute a sequence of `(var, replacement)` pairs in order.
    pub fn substitute_all(&self, subs: &[(&str, &MultiPoly)]) -> Result<MultiPoly> {
        let mut p = self.clone();
        for &(v, r) in subs {
            p = p.substitute(v, r)?;
        }
        Ok(p)
    }

    /// Evaluates with every occurring variable bound. Exact when all bindings
    /// are exact; otherwise the result is an IEEE double.
    pub fn eval(&self, bindings: &[(&str, Number)]) -> Result<Number> {
        let mut values: Vec<Option<&Number>> = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let bound = bindings.iter().find(|(n, _)| n == v).map(|(_, x)| x);
            if bound.is_none() && self.terms.keys().any(|e| e[i] != 0) {
                return Err(Error::UnboundVariable(v.clone()));
            }
            values.push(bound);
        }
        let exact = values
            .iter()
            .flatten()
            .all(|x| matches!(x, Number::Exact(_)));
        if exact {
            let mut total = BigRational::zero();
            for (e, c) in &self.terms {
                let mut term = BigRational::from_integer(c.clone());
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        let Some(Number::Exact(r)) = values[i] else {
                            unreachable!()
                        };
                        term *= num_traits::pow(r.clone(), k as usize);
                    }
                }
                total += term;
            }
            Ok(Number::Exact(total))
        } else {
            let mut total = 0.0;
            for (e, c) in &self.terms {
                let mut term = c.to_f64().unwrap_or(f64::NAN);
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        term *= values[i].unwrap().to_f64().powi(k as i32);
                    }
                }
                total += term;
            }
            Ok(Number::Float(total))
        }
    }

    /// Integer evaluation; every binding is an integer.
    pub fn eval_integer(&self, bindings: &[(&str, i64)]) -> Result<BigInt> {
        let b: Vec<(&str, Number)> = bindings.iter().map(|&(n, v)| (n, Number::int(v))).collect();
        Ok(self
            .eval(&b)?
            .as_integer()
            .expect("integer bindings give an integer"))
    }

    /// Groups terms by the exponent of `var`: `self = Σ_k var^k · coeff[k]`,
    /// returned densely for `k = 0..=degree_in(var)`. Coefficients are over the
    /// remaining variables.
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<MultiPoly>> {
        let idx = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let rest: Vec<String> = self
            .vars
            .iter()
            .filter(|v| v.as_str() != var)
            .cloned()
            .collect();
        let deg = self.degree_in(var) as usize;
        let mut out = vec![MultiPoly::zero(&rest); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(idx) as usize;
            out[k].add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Canonical form for equality: occurring variables sorted by name.
    fn normalized(&self) -> BTreeMap<Vec<(String, u32)>, BigInt> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut mono: Vec<(String, u32)> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| (self.vars[i].clone(), k))
                    .collect();
                mono.sort();
                (mono, c.clone())
            })
            .collect()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        self.normalized() == other.normalized()
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.align(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.align(rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical text: variables in declared order inside each monomial, terms in
/// descending lexicographic order of exponent vectors.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `(1 + var)`, the recurring change of variables `λ = 1 + q`.
pub fn one_plus(var: &str) -> MultiPoly {
    &MultiPoly::one(&[var]) + &MultiPoly::var(var)
}
