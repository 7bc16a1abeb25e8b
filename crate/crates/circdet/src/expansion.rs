//! Full determinant expansions as sparse polynomials keyed by multiplicity vectors.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeff::{coefficient, evaluate as evaluate_coeff, EngineOptions};
use crate::error::{Error, Result};
use crate::index::{admissible_vectors, MultiplicityVector};
use crate::symmetry::{orbits, OrbitKind};

/// Largest dimension `expand` accepts by default.
pub const DEFAULT_EXPAND_CAP: usize = 12;

/// `det CIRC[x_0, .., x_{N-1}]` as a map from exponent vectors to coefficients.
///
/// Zero coefficients may be stored; equality and serialization ignore them.
#[derive(Debug, Clone, Default)]
pub struct ExpansionPolynomial {
    n: usize,
    terms: HashMap<MultiplicityVector, BigInt>,
}

impl PartialEq for ExpansionPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sorted_terms(false) == other.sorted_terms(false)
    }
}

impl Eq for ExpansionPolynomial {}

impl ExpansionPolynomial {
    pub fn new(n: usize) -> Self {
        ExpansionPolynomial {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, m: MultiplicityVector, c: BigInt) {
        debug_assert_eq!(m.n(), self.n);
        self.terms.insert(m, c);
    }

    pub fn add_to(&mut self, m: MultiplicityVector, c: BigInt) {
        *self.terms.entry(m).or_insert_with(BigInt::zero) += c;
    }

    /// Coefficient of `m`, zero when absent.
    pub fn get(&self, m: &MultiplicityVector) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn stored_len(&self) -> usize {
        self.terms.len()
    }

    pub fn nonzero_len(&self) -> usize {
        self.terms.values().filter(|c| !c.is_zero()).count()
    }

    /// Stored keys whose coefficient is zero.
    pub fn zero_keys(&self) -> Vec<MultiplicityVector> {
        let mut z: Vec<MultiplicityVector> = self
            .terms
            .iter()
            .filter(|(_, c)| c.is_zero())
            .map(|(m, _)| m.clone())
            .collect();
        z.sort();
        z
    }

    /// Terms in lexicographic order of the exponent vector.
    pub fn sorted_terms(&self, include_zeros: bool) -> Vec<(&MultiplicityVector, &BigInt)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .filter(|(_, c)| include_zeros || !c.is_zero())
            .collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Exact value at integer arguments.
    pub fn evaluate(&self, x: &[i64]) -> Result<BigInt> {
        if x.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "expected {} arguments, got {}",
                self.n,
                x.len()
            )));
        }
        let xs: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for (base, &e) in xs.iter().zip(m.counts()) {
                if e > 0 {
                    t *= base.pow(e as u32);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Product of two polynomials in the same variables.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (ma, ca) in self.sorted_terms(false) {
            for (mb, cb) in other.sorted_terms(false) {
                let key: Vec<usize> = ma.counts().iter().zip(mb.counts()).map(|(a, b)| a + b).collect();
                *out.entry(key).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        ExpansionPolynomial {
            n: self.n,
            terms: out
                .into_iter()
                .map(|(k, v)| (MultiplicityVector::from_raw_unchecked(k), v))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ExpansionPolynomial::new(self.n);
        acc.insert(
            MultiplicityVector::from_raw_unchecked(vec![0; self.n]),
            BigInt::one(),
        );
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rename variable `x_i` to `x_{i*d}` in a polynomial with `n*d` variables.
    pub fn spread(&self, d: usize) -> Self {
        let n = self.n * d;
        let mut out = ExpansionPolynomial::new(n);
        for (m, c) in &self.terms {
            let mut k = vec![0; n];
            for (i, &e) in m.counts().iter().enumerate() {
                k[i * d] = e;
            }
            out.insert(MultiplicityVector::from_raw_unchecked(k), c.clone());
        }
        out
    }

    /// Terms that only involve the variables `x_0, x_d, x_{2d}, ..`.
    pub fn restrict_to_spacing(&self, d: usize) -> Self {
        let mut out = ExpansionPolynomial::new(self.n);
        for (m, c) in &self.terms {
            let ok = m
                .counts()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || i % d == 0);
            if ok {
                out.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_document(&self, include_zeros: bool) -> ExpansionDocument {
        ExpansionDocument {
            n: self.n,
            terms: self
                .sorted_terms(include_zeros)
                .into_iter()
                .map(|(m, c)| TermDocument {
                    m: m.counts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self, include_zeros: bool) -> String {
        serde_json::to_string(&self.to_document(include_zeros)).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: ExpansionDocument =
            serde_json::from_str(s).map_err(|e| Error::InvalidIndexSet(e.to_string()))?;
        doc.into_polynomial()
    }
}

/// Serialized form: `{"N":..,"terms":[{"M":[..],"coeff":".."}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDocument {
    #[serde(rename = "N")]
    pub n: usize,
    pub terms: Vec<TermDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    #[serde(rename = "M")]
    pub m: Vec<usize>,
    pub coeff: String,
}

impl ExpansionDocument {
    pub fn into_polynomial(self) -> Result<ExpansionPolynomial> {
        let mut p = ExpansionPolynomial::new(self.n);
        for t in self.terms {
            let m = MultiplicityVector::new(t.m)?;
            if m.n() != self.n {
                return Err(Error::InvalidIndexSet(format!("term {m} has wrong length")));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::InvalidIndexSet(format!("bad coefficient {:?}", t.coeff)))?;
            p.insert(m, c);
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Evaluate every admissible exponent vector.
    #[default]
    Direct,
    /// Evaluate one representative per affine orbit and copy with signs.
    Reduced,
}

/// Expansion of the `n x n` circulant determinant, `1 <= n <= cap`.
pub fn expand(n: usize, strategy: Strategy) -> Result<ExpansionPolynomial> {
    expand_with_cap(n, strategy, DEFAULT_EXPAND_CAP)
}

pub fn expand_with_cap(n: usize, strategy: Strategy, cap: usize) -> Result<ExpansionPolynomial> {
    if n == 0 || n > cap {
        return Err(Error::OutOfRange(format!("N = {n} outside [1, {cap}]")));
    }
    let mut poly = ExpansionPolynomial::new(n);
    match strategy {
        Strategy::Direct => {
            let keys = admissible_vectors(n);
            let values: Vec<Result<BigInt>> = keys
                .par_iter()
                .map(|m| coefficient(&m.index_set()))
                .collect();
            for (m, v) in keys.into_iter().zip(values) {
                poly.insert(m, v?);
            }
        }
        Strategy::Reduced => {
            let orbs = orbits(n, OrbitKind::Super);
            let values: Vec<Result<BigInt>> = orbs
                .par_iter()
                .map(|o| {
                    let opts = EngineOptions::default();
                    Ok(evaluate_coeff(&o.representative.index_set(), opts)?.value)
                })
                .collect();
            for (o, v) in orbs.into_iter().zip(values) {
                let v = v?;
                if o.sign_conflict && !v.is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "orbit of {} forces a zero but evaluates to {v}",
                        o.representative
                    )));
                }
                for (m, s) in o.members {
                    poly.insert(m, &v * s);
                }
            }
        }
    }
    Ok(poly)
}

/// Whether the spaced-out part of `expand(n)` equals `expand(n/d)^d` after relabeling.
pub fn power_identity_check(n: usize, d: usize) -> Result<bool> {
    if d < 2 || n % d != 0 {
        return Err(Error::OutOfRange(format!("{d} is not a proper divisor of {n}")));
    }
    let full = expand(n, Strategy::Reduced)?;
    let small = expand(n / d, Strategy::Reduced)?;
    Ok(full.restrict_to_spacing(d) == small.pow(d as u32).spread(d))
}

/// Convenience: value of `poly` at `x`.
pub fn evaluate(poly: &ExpansionPolynomial, x: &[i64]) -> Result<BigInt> {
    poly.evaluate(x)
}
