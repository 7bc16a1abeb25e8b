//! The affine group `H_N` acting on multiplicity vectors, orbit classification and the
//! counting formulas for orbits.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::coeff::coefficient;
use crate::error::{Error, Result};
use crate::exactmath::{binomial, divisors, euler_phi, factorize, mobius, mod_inverse, sign_pow, units};
use crate::index::{admissible_vectors, for_each_admissible_vector, MultiplicityVector};

/// `(a, b)`: shift by `a`, then multiply by the unit `b`, so index `m` goes to `b(m + a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub shift: usize,
    pub mult: usize,
    pub n: usize,
}

impl GroupElement {
    pub fn new(n: usize, shift: usize, mult: usize) -> Result<Self> {
        if n == 0 || shift >= n || (n > 1 && (mult == 0 || mult >= n)) {
            return Err(Error::OutOfRange(format!("({shift},{mult}) is not in H_{n}")));
        }
        if n > 1 && num_integer::gcd(mult, n) != 1 {
            return Err(Error::OutOfRange(format!("{mult} is not a unit mod {n}")));
        }
        Ok(GroupElement { shift, mult, n })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { shift: 0, mult: 1, n }
    }

    /// Component-wise product `(a+c, bd)`.
    pub fn compose(self, other: GroupElement) -> GroupElement {
        assert_eq!(self.n, other.n);
        let n = self.n;
        GroupElement {
            shift: (self.shift + other.shift) % n,
            mult: (self.mult * other.mult) % n.max(2),
            n,
        }
    }

    pub fn map_index(self, m: usize) -> usize {
        (self.mult * (m + self.shift)) % self.n
    }

    /// `C(M) = sign * C(g * M)`.
    pub fn sign(self) -> i64 {
        sign_pow((self.shift * (self.n - 1)) as i64)
    }

    /// Multiplicative order of the unit part.
    pub fn mult_order(self) -> usize {
        if self.n == 1 {
            return 1;
        }
        let mut k = 1;
        let mut x = self.mult % self.n;
        while x != 1 {
            x = x * self.mult % self.n;
            k += 1;
        }
        k
    }
}

/// All elements of `H_N`.
pub fn group_elements(n: usize) -> Vec<GroupElement> {
    let mut out = Vec::new();
    for b in units(n) {
        for a in 0..n {
            out.push(GroupElement { shift: a, mult: b, n });
        }
    }
    out
}

/// `M'_{b(m+a)} = M_m`.
pub fn act(g: GroupElement, m: &MultiplicityVector) -> MultiplicityVector {
    MultiplicityVector::new(act_raw(g, m.counts())).expect("permutation preserves the total")
}

fn act_raw(g: GroupElement, m: &[usize]) -> Vec<usize> {
    let mut out = vec![0; m.len()];
    for (i, &c) in m.iter().enumerate() {
        out[g.map_index(i)] = c;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    /// Orbits under shifts only.
    Additive,
    /// Orbits under all of `H_N`.
    Super,
}

impl OrbitKind {
    fn elements(self, n: usize) -> Vec<GroupElement> {
        match self {
            OrbitKind::Additive => (0..n)
                .map(|a| GroupElement { shift: a, mult: 1, n })
                .collect(),
            OrbitKind::Super => group_elements(n),
        }
    }
}

/// An orbit before its coefficient is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub kind: OrbitKind,
    /// Lexicographically smallest member.
    pub representative: MultiplicityVector,
    /// Members with `C(member) = sign * C(representative)`, sorted.
    pub members: Vec<(MultiplicityVector, i64)>,
    /// Two group paths reach some member with opposite signs, so the coefficient is 0.
    pub sign_conflict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletRecord {
    pub kind: OrbitKind,
    pub representative: MultiplicityVector,
    pub n: usize,
    pub members: Vec<(MultiplicityVector, i64)>,
    /// Coefficient of the representative.
    pub value: BigInt,
}

/// Orbit of `m` with signs relative to its smallest member.
pub fn orbit_of(m: &MultiplicityVector, kind: OrbitKind) -> Orbit {
    let n = m.n();
    let mut seen: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    let mut conflict = false;
    for g in kind.elements(n) {
        let img = act_raw(g, m.counts());
        // C(m) = g.sign() * C(img), so relative to m the image carries g.sign().
        let s = g.sign();
        match seen.get(&img) {
            Some(&prev) if prev != s => conflict = true,
            Some(_) => {}
            None => {
                seen.insert(img, s);
            }
        }
    }
    let (rep, rep_sign) = seen.iter().next().map(|(k, &s)| (k.clone(), s)).unwrap();
    let members = seen
        .into_iter()
        .map(|(k, s)| {
            let sign = if conflict { 1 } else { s * rep_sign };
            (MultiplicityVector::from_raw_unchecked(k), sign)
        })
        .collect();
    Orbit {
        kind,
        representative: MultiplicityVector::from_raw_unchecked(rep),
        members,
        sign_conflict: conflict,
    }
}

/// Rejects vectors that are not a valid exponent vector.
pub fn additive_multiplet(m: &MultiplicityVector) -> Result<MultipletRecord> {
    if m.counts().iter().sum::<usize>() != m.n() {
        return Err(Error::InvalidIndexSet(format!("{m} does not sum to N")));
    }
    record(orbit_of(m, OrbitKind::Additive))
}

fn record(o: Orbit) -> Result<MultipletRecord> {
    let value = coefficient(&o.representative.index_set())?;
    if o.sign_conflict && !value.is_zero() {
        return Err(Error::Inconsistent(format!(
            "orbit of {} is sign-inconsistent but has value {value}",
            o.representative
        )));
    }
    Ok(MultipletRecord {
        kind: o.kind,
        n: o.members.len(),
        representative: o.representative,
        members: o.members,
        value,
    })
}

/// All orbits of admissible vectors, sorted by representative.
pub fn orbits(n: usize, kind: OrbitKind) -> Vec<Orbit> {
    let keys = admissible_vectors(n);
    let elems = kind.elements(n);
    let mut reps: Vec<MultiplicityVector> = keys
        .par_iter()
        .filter(|m| is_orbit_minimum(m.counts(), &elems))
        .cloned()
        .collect();
    reps.sort();
    reps.par_iter().map(|r| orbit_of(r, kind)).collect()
}

fn is_orbit_minimum(m: &[usize], elems: &[GroupElement]) -> bool {
    let mut buf = vec![0; m.len()];
    for &g in elems {
        for (i, &c) in m.iter().enumerate() {
            buf[g.map_index(i)] = c;
        }
        if buf.as_slice() < m {
            return false;
        }
    }
    true
}

/// Number of orbits, by checking each vector for being its orbit's minimum.
pub fn count_orbits(n: usize, kind: OrbitKind) -> u64 {
    let elems = kind.elements(n);
    let mut count = 0;
    for_each_admissible_vector(n, |m| {
        if is_orbit_minimum(m, &elems) {
            count += 1;
        }
    });
    count
}

/// Additive multiplets followed by super-multiplets, each with its coefficient.
pub fn classify(n: usize) -> Result<Vec<MultipletRecord>> {
    if n < 2 {
        return Err(Error::OutOfRange("classification needs N >= 2".into()));
    }
    let mut out = Vec::new();
    for kind in [OrbitKind::Additive, OrbitKind::Super] {
        let recs: Vec<Result<MultipletRecord>> = orbits(n, kind).into_par_iter().map(record).collect();
        for r in recs {
            out.push(r?);
        }
    }
    Ok(out)
}

/// Number of admissible vectors, `(1/2N) sum_{d|N} phi(N/d) C(2d, d)`.
pub fn count_solutions_f(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let mut s = BigInt::zero();
    for d in divisors(n as u64) {
        s += binomial(2 * d as i64, d as i64) * euler_phi((n as u64 / d) as i64)?;
    }
    crate::exactmath::exact_div(&s, &BigInt::from(2 * n), "F(N)")
}

/// Number of additive multiplets with exactly `k` members.
pub fn additive_multiplet_count_g(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::NonPositive(0));
    }
    if n % k != 0 || (n - k) % 2 != 0 {
        return Ok(BigInt::zero());
    }
    let mut s = BigInt::zero();
    for d in divisors(k as u64) {
        let d = d as i64;
        s += binomial(2 * d, d) * mobius(k as i64 / d)? * sign_pow(k as i64 + d);
    }
    let num = s * 2;
    crate::exactmath::exact_div(&num, &BigInt::from(4 * k * k), "g_N(n)")
}

fn odd_prime(p: usize) -> bool {
    p > 2 && factorize(p as u64) == vec![(p as u64, 1)]
}

/// Closed-form number of super-multiplets for `N = p` or `N = 2p`, `p` an odd prime.
pub fn supermultiplet_count(n: usize) -> Result<BigInt> {
    let q = |a: BigInt, b: i64| BigRational::new(a, BigInt::from(b));
    let int = |a: i64| BigRational::from_integer(BigInt::from(a));
    let c = |a: usize, b: usize| binomial(a as i64, b as i64);
    let phi = |a: usize| euler_phi(a as i64).map(|v| v as i64);

    let total = if odd_prime(n) {
        let p = n as i64;
        let mut braces = q(c(2 * n, n), 2 * p) + q(BigInt::from(p * p - 1), p);
        let mut inner = BigInt::zero();
        for m in divisors((n - 1) as u64) {
            let m = m as usize;
            if m < n - 1 {
                inner += c(2 * m, m) * phi((n - 1) / m)?;
            }
        }
        braces += BigRational::from_integer(inner * p);
        braces / int(p * (p - 1))
    } else if n % 2 == 0 && odd_prime(n / 2) {
        let pu = n / 2;
        let p = pu as i64;
        let mut braces = q(c(4 * pu, 2 * pu), 4 * p)
            + q(BigInt::from(4 * p * p + 1), 4 * p) * c(2 * pu, pu)
            + q(BigInt::from(2 * (p * p - 1)), p);
        let mut inner = BigRational::zero();
        for m in divisors((pu - 1) as u64) {
            let m = m as usize;
            if 2 * m >= pu - 1 {
                continue;
            }
            let r = (pu - 1) / m;
            let alt = q(BigInt::from(1 - sign_pow(r as i64)), 4);
            let lead = q(BigInt::from(p + 4 * m as i64 + 1), 2 * m as i64 + 1) - &alt;
            let term = lead * BigRational::from_integer(c(4 * m, 2 * m))
                + alt * BigRational::from_integer(c(2 * m, m));
            inner += term * int(phi(r)?);
        }
        braces += inner * int(p);
        braces / int(2 * p * (p - 1))
    } else {
        return Err(Error::OutOfRange(format!(
            "closed form only covers N = p or 2p with p an odd prime, got {n}"
        )));
    };
    if !total.is_integer() {
        return Err(Error::Inconsistent(format!("super-multiplet count {total} is not integral")));
    }
    Ok(total.to_integer())
}

/// Number of admissible vectors fixed by every listed group element.
pub fn invariant_count_k(n: usize, generators: &[GroupElement]) -> u64 {
    let mut count = 0;
    let mut buf = vec![0; n];
    for_each_admissible_vector(n, |m| {
        let fixed = generators.iter().all(|&g| {
            for (i, &c) in m.iter().enumerate() {
                buf[g.map_index(i)] = c;
            }
            buf.as_slice() == m
        });
        if fixed {
            count += 1;
        }
    });
    count
}

/// Closed-form fixed-vector counts for a single generator, where one is known:
/// the identity, a full-cycle shift, and a unit of order `d > 1` when `N = p` or `2p`.
pub fn invariant_count_closed_form(g: GroupElement) -> Option<BigInt> {
    let n = g.n;
    if g.shift == 0 && g.mult == 1 {
        return count_solutions_f(n).ok();
    }
    let c = |a: usize, b: usize| binomial(a as i64, b as i64);
    if g.mult == 1 {
        if num_integer::gcd(g.shift, n) == 1 {
            return Some(BigInt::from((n % 2) as i64));
        }
        if n % 2 == 0 && odd_prime(n / 2) && g.shift % 2 == 0 {
            return Some(BigInt::from(2));
        }
        return None;
    }
    let d = g.mult_order();
    if odd_prime(n) {
        // Any shift is conjugate to shift 0 when the multiplier is not 1.
        let m = (n - 1) / d;
        return Some(c(2 * m, m));
    }
    if n % 2 == 0 && odd_prime(n / 2) && g.shift % 2 == 0 {
        let p = n / 2;
        let m = (p - 1) / d;
        if d % 2 == 0 {
            if d == 2 {
                return Some(c(2 * p, p));
            }
            return Some(c(4 * m, 2 * m) * (2 * p) - c(4 * m + 1, 2 * m + 1) * (p - 1));
        }
        let twice = c(4 * m, 2 * m) * (4 * p - 1) - c(4 * m + 1, 2 * m + 1) * (2 * (p - 1)) + c(2 * m, m);
        return Some(twice / 2);
    }
    None
}

/// Compares every available closed-form fixed-vector count with enumeration, using one
/// element per multiplier and shift gcd. Returns the mismatches as (element, formula, count).
pub fn invariant_count_mismatches(n: usize) -> Vec<(GroupElement, BigInt, u64)> {
    let mut shifts: Vec<usize> = vec![0];
    shifts.extend(divisors(n as u64).into_iter().map(|d| d as usize).filter(|&d| d < n));
    let mut bad = Vec::new();
    for b in units(n) {
        for &a in &shifts {
            let g = GroupElement { shift: a, mult: b, n };
            if let Some(want) = invariant_count_closed_form(g) {
                let got = invariant_count_k(n, &[g]);
                if want != BigInt::from(got) {
                    bad.push((g, want, got));
                }
            }
        }
    }
    bad
}

/// Inverse element under the action: `(a, b)^{-1}` maps `m` to `b^{-1} m - a`.
pub fn inverse_map_index(g: GroupElement, m: usize) -> usize {
    let n = g.n;
    if n == 1 {
        return 0;
    }
    let binv = mod_inverse(g.mult as i64, n as u64).expect("unit") as usize;
    (binv * m % n + n - g.shift) % n
}

/// `1 / |H_N|`-weighted check helper: total orbit size for a list of records.
pub fn total_members(records: &[MultipletRecord], kind: OrbitKind) -> usize {
    records.iter().filter(|r| r.kind == kind).map(|r| r.n).sum()
}
