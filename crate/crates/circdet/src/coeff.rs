//! Closed-form evaluation of single circulant-determinant coefficients.
//!
//! A coefficient is addressed by its sorted index set `[a]`; the matrix has entry
//! `x_{(r-c) mod N}` at row `r`, column `c`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, exact_div, factorial, sign_pow, units};
use crate::index::IndexSet;
use crate::partitions::{labeled_set_partitions, multiset_partitions, part_residue};

pub fn satisfies_condition_8(a: &IndexSet) -> bool {
    a.sum() % a.n() == 0
}

/// `(-1)^{a(N-1)}` for the set `[a, a, .., a]`.
pub fn coeff_all_equal(a: &IndexSet) -> Result<BigInt> {
    if !a.is_all_equal() {
        return Err(Error::Shape(format!("{a} has more than one distinct index")));
    }
    let v = a.indices()[0] as i64;
    Ok(BigInt::from(sign_pow(v * (a.n() as i64 - 1))))
}

/// Counts and the split `0^{M0} 1^{M1} A_1..A_p A_{p+1}` shared by the closed forms.
struct Layout {
    n: usize,
    mult: Vec<usize>,
    m0: usize,
    m1: usize,
    /// `A_1..A_p`, sorted; the largest index has been set aside as `A_{p+1}`.
    rest: Vec<usize>,
}

impl Layout {
    fn new(a: &IndexSet) -> Result<Self> {
        let n = a.n();
        let mult = a.multiplicities().counts().to_vec();
        if n < 3 || a.is_all_equal() {
            return Err(Error::Shape(format!("{a} needs the all-equal form")));
        }
        let top = *a.indices().last().unwrap();
        if top < 2 {
            return Err(Error::Shape(format!("{a} has no index above 1")));
        }
        let idx = a.indices();
        let rest: Vec<usize> = idx[..n - 1].iter().copied().filter(|&v| v >= 2).collect();
        Ok(Layout {
            n,
            m0: mult[0],
            m1: mult[1],
            mult,
            rest,
        })
    }

    fn base(&self) -> i64 {
        (self.n - self.m0 - 1) as i64
    }

    fn sign(&self) -> i64 {
        sign_pow(self.base())
    }

    /// `prod_{a >= 2} M_a!`
    fn upper_factorials(&self) -> BigInt {
        self.mult[2..].iter().map(|&c| factorial(c)).product()
    }

    fn finish(&self, s: BigInt) -> Result<BigInt> {
        let num = s * self.n;
        let v = exact_div(&num, &self.upper_factorials(), "multiplicity factorials")?;
        Ok(v * self.sign())
    }
}

/// Signed sum over non-empty masks of the blocks `(X, z)`, blocks sorted by `X`.
///
/// Each chosen block contributes `-N * C(X+z-1, z-1)`; a mask contributes
/// `C(base - sum(X+z), M1 - sum X)` and dies once `sum X > M1`.
fn lambda_sum(n: i64, base: i64, m1: i64, blocks: &[(i64, i64)]) -> BigInt {
    fn walk(
        blocks: &[(i64, i64)],
        start: usize,
        sx: i64,
        sxz: i64,
        prod: &BigInt,
        ctx: (i64, i64, i64),
        acc: &mut BigInt,
    ) {
        let (n, base, m1) = ctx;
        for t in start..blocks.len() {
            let (x, z) = blocks[t];
            let sx2 = sx + x;
            if sx2 > m1 {
                break;
            }
            let sxz2 = sxz + x + z;
            let prod2 = prod * binomial(x + z - 1, z - 1) * (-n);
            *acc += &prod2 * binomial(base - sxz2, m1 - sx2);
            walk(blocks, t + 1, sx2, sxz2, &prod2, ctx, acc);
        }
    }
    let mut acc = BigInt::zero();
    walk(blocks, 0, 0, 0, &BigInt::one(), (n, base, m1), &mut acc);
    acc
}

/// Coefficient via the multiset-partition closed form.
///
/// Every block weight is scaled by `prod M'_a!` (the `A_1..A_p` multiplicities) so that
/// the sum stays integral; the division by the index factorials happens once at the end.
pub fn coeff_theorem3(a: &IndexSet) -> Result<BigInt> {
    if !satisfies_condition_8(a) {
        return Ok(BigInt::zero());
    }
    if a.is_all_equal() {
        return coeff_all_equal(a);
    }
    let lay = Layout::new(a)?;
    let n = lay.n as i64;
    let base = lay.base();
    let m1 = lay.m1 as i64;
    let mut s = exact_div(&factorial(base as usize), &factorial(lay.m1), "leading term")?;

    let mut rest_mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in &lay.rest {
        *rest_mult.entry(v).or_default() += 1;
    }
    let rest_fact: BigInt = rest_mult.values().map(|&c| factorial(c)).product();

    for theta in multiset_partitions(&lay.rest) {
        let mut num = rest_fact.clone();
        let mut den = BigInt::one();
        let mut blocks = Vec::with_capacity(theta.block_count());
        for part in &theta.parts {
            den *= factorial(part.kappa);
            let mfact: BigInt = part.element_multiplicities().iter().map(|&m| factorial(m)).product();
            let z = part.size() as i64;
            let x = part_residue(&part.elements, lay.n) as i64;
            for _ in 0..part.kappa {
                den *= &mfact;
                num *= factorial(z as usize - 1);
                blocks.push((x, z));
            }
        }
        blocks.sort_unstable();
        let w = exact_div(&num, &den, "partition weight")?;
        s += w * lambda_sum(n, base, m1, &blocks);
    }
    lay.finish(s)
}

/// Same coefficient, summed over partitions of the labeled positions `1..p`.
pub fn coeff_eq10d(a: &IndexSet) -> Result<BigInt> {
    if !satisfies_condition_8(a) {
        return Ok(BigInt::zero());
    }
    if a.is_all_equal() {
        return coeff_all_equal(a);
    }
    let lay = Layout::new(a)?;
    let n = lay.n as i64;
    let base = lay.base();
    let mut s = exact_div(&factorial(base as usize), &factorial(lay.m1), "leading term")?;
    for labeled in labeled_set_partitions(lay.rest.len()) {
        let mut w = BigInt::one();
        let mut blocks: Vec<(i64, i64)> = labeled
            .iter()
            .map(|b| {
                let vals: Vec<usize> = b.iter().map(|&i| lay.rest[i]).collect();
                w *= factorial(b.len() - 1);
                (part_residue(&vals, lay.n) as i64, b.len() as i64)
            })
            .collect();
        blocks.sort_unstable();
        s += w * lambda_sum(n, base, lay.m1 as i64, &blocks);
    }
    lay.finish(s)
}

/// The two large indices of a `0^{M0} 1^{M1} a^{Ma} b^{Mb}` set, `Mb <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbShape {
    pub a: usize,
    pub ma: usize,
    pub b: Option<usize>,
}

/// Recognises the shape accepted by [`coeff_special_ab`].
pub fn special_ab_shape(a: &IndexSet) -> Option<AbShape> {
    if a.n() < 3 || a.is_all_equal() {
        return None;
    }
    let mult = a.multiplicities();
    let big: Vec<(usize, usize)> = mult.counts()[2..]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| (i + 2, c))
        .collect();
    match big.as_slice() {
        [(v, c)] => Some(AbShape {
            a: *v,
            ma: *c,
            b: None,
        }),
        [(v1, c1), (v2, c2)] if *c2 == 1 => Some(AbShape {
            a: *v1,
            ma: *c1,
            b: Some(*v2),
        }),
        [(v1, 1), (v2, c2)] => Some(AbShape {
            a: *v2,
            ma: *c2,
            b: Some(*v1),
        }),
        _ => None,
    }
}

/// Coefficient of `0^{M0} 1^{M1} a^{Ma} b^{Mb}` (`Mb <= 1`, `a >= 2`) via the
/// cycle-type sum, which avoids enumerating set partitions.
pub fn coeff_special_ab(a: &IndexSet) -> Result<BigInt> {
    let shape = special_ab_shape(a)
        .ok_or_else(|| Error::Shape(format!("{a} is not of the 0..01..1a..ab form")))?;
    special_ab_with(a, shape)
}

/// As [`coeff_special_ab`] with an explicit choice of which index plays `a`.
pub fn special_ab_with(set: &IndexSet, shape: AbShape) -> Result<BigInt> {
    if !satisfies_condition_8(set) {
        return Ok(BigInt::zero());
    }
    let n = set.n();
    let mult = set.multiplicities();
    let c = mult.counts();
    let mb = shape.b.is_some() as usize;
    if shape.a < 2 || c[shape.a] != shape.ma || shape.b.is_some_and(|b| b < 2 || c[b] != 1) {
        return Err(Error::Shape(format!("{set} does not match {shape:?}")));
    }
    let (m0, m1) = (c[0], c[1]);
    if m0 + m1 + shape.ma + mb != n {
        return Err(Error::Shape(format!("{set} has extra indices beyond {shape:?}")));
    }
    let ni = n as i64;
    let p = shape.ma + mb - 1;
    let base = (n - m0 - 1) as i64;
    let m1i = m1 as i64;
    let xs: Vec<i64> = (1..=p as i64)
        .map(|t| (-(t * shape.a as i64)).rem_euclid(ni))
        .collect();

    let pf = factorial(p);
    let mut s = &pf * binomial(base, m1i);

    // beta[t-1] = number of t-cycles chosen; sum t*beta_t <= p.
    let mut beta = vec![0usize; p];
    fn rec(
        t: usize,
        budget: usize,
        beta: &mut Vec<usize>,
        xs: &[i64],
        ctx: (i64, i64, i64, &BigInt),
        acc: &mut BigInt,
    ) {
        let (n, base, m1, pf) = ctx;
        if t > beta.len() {
            let mu: usize = beta.iter().sum();
            if mu == 0 {
                return;
            }
            let sx: i64 = beta.iter().zip(xs).map(|(&b, &x)| b as i64 * x).sum();
            if sx > m1 {
                return;
            }
            let sxz: i64 = beta
                .iter()
                .zip(xs)
                .enumerate()
                .map(|(i, (&b, &x))| b as i64 * (x + i as i64 + 1))
                .sum();
            let mut den = BigInt::one();
            let mut prod = BigInt::one();
            for (i, (&b, &x)) in beta.iter().zip(xs).enumerate() {
                let size = i as i64 + 1;
                den *= BigInt::from(size).pow(b as u32) * factorial(b);
                prod *= binomial(x + size - 1, size - 1).pow(b as u32);
            }
            let cycles = pf / den;
            let term = BigInt::from(-n).pow(mu as u32) * binomial(base - sxz, m1 - sx) * prod * cycles;
            *acc += term;
            return;
        }
        let mut b = 0;
        while b * t <= budget {
            beta[t - 1] = b;
            rec(t + 1, budget - b * t, beta, xs, ctx, acc);
            b += 1;
        }
        beta[t - 1] = 0;
    }
    rec(1, p, &mut beta, &xs, (ni, base, m1i, &pf), &mut s);

    let pre = binomial((shape.ma + mb) as i64, shape.ma as i64) * n;
    let den = BigInt::from(shape.ma + mb) * &pf;
    let v = exact_div(&(pre * s), &den, "special form normalisation")?;
    Ok(v * sign_pow(base))
}

/// Zero criterion for `0^{M0} 1^{M1} A1 A2 A3` with `M0, M1 >= 1`, checked literally.
fn three_index_zero_direct(n: usize, mult: &[usize]) -> bool {
    let (m0, m1) = (mult[0], mult[1]);
    if n < 5 || m0 == 0 || m1 == 0 || m0 + m1 + 3 != n {
        return false;
    }
    let mut big = Vec::with_capacity(3);
    for (v, &c) in mult.iter().enumerate().skip(2) {
        big.extend(std::iter::repeat(v as i64).take(c));
    }
    let [a1, a2, a3] = [big[0], big[1], big[2]];
    let (n, m0, m1) = (n as i64, m0 as i64, m1 as i64);
    let q1 = (m1 + 2) * (m1 + 1);
    if q1 % n != 0 {
        return false;
    }
    let q0 = (m0 + 2) * (m0 + 1);
    let branch1 = a2 < n - m1 && a1 + a2 == n + 1 - q1 / n && a3 == m0 + 2 + q1 / n;
    let branch2 = n - m1 <= a2 && a2 + a3 == n + 1 + q0 / n && a1 == m0 + 2 - q0 / n;
    branch1 || branch2
}

/// True when some affine image of `a` falls under the three-large-index zero criterion.
pub fn zero_by_corollary6(a: &IndexSet) -> bool {
    let n = a.n();
    if n < 5 {
        return false;
    }
    for b in units(n) {
        for s in 0..n {
            let img = a.affine_image(b, s);
            if three_index_zero_direct(n, img.multiplicities().counts()) {
                return true;
            }
        }
    }
    false
}

/// `N / gcd(M_0, .., M_{N-1})`; every coefficient is a multiple of it.
pub fn divisibility_bound(a: &IndexSet) -> usize {
    let g = a
        .multiplicities()
        .counts()
        .iter()
        .fold(0usize, |g, &c| num_integer::gcd(g, c));
    a.n() / g
}

/// Cheapest equivalent set under `m -> b*m + s`, with `C(a) = sign * C(image)`.
///
/// Preference: smallest `p = N - M0 - M1 - 1`, then smallest `M1`, then lexicographic.
pub fn reduce_representative(a: &IndexSet) -> (IndexSet, i64) {
    let n = a.n();
    let mut best: Option<((i64, usize, IndexSet), i64)> = None;
    for b in units(n) {
        for s in 0..n {
            let img = a.affine_image(b, s);
            let m = img.multiplicities();
            let c = m.counts();
            let m1 = if n > 1 { c[1] } else { 0 };
            let p = n as i64 - c[0] as i64 - m1 as i64 - 1;
            let sign = sign_pow((s * (n - 1)) as i64);
            let key = (p, m1, img);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, sign));
            }
        }
    }
    let ((_, _, img), sign) = best.expect("identity map is always available");
    (img, sign)
}

/// Which evaluator produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    /// Index sum not divisible by `N`.
    Inadmissible,
    AllEqual,
    /// Short-circuited by the zero criterion.
    ZeroCriterion,
    SpecialAb,
    PartitionSum,
}

impl Path {
    pub fn name(self) -> &'static str {
        match self {
            Path::Inadmissible => "inadmissible",
            Path::AllEqual => "all-equal",
            Path::ZeroCriterion => "zero-criterion",
            Path::SpecialAb => "two-index",
            Path::PartitionSum => "partition-sum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    /// Return 0 for sets caught by the zero criterion without evaluating them.
    pub zero_shortcut: bool,
    /// Evaluate on the cheapest affine image instead of the input.
    pub reduce: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            zero_shortcut: false,
            reduce: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigInt,
    pub path: Path,
    /// The set actually evaluated.
    pub representative: IndexSet,
    /// `value = sign * C(representative)`.
    pub sign: i64,
}

pub fn evaluate(a: &IndexSet, opts: EngineOptions) -> Result<Evaluation> {
    let done = |value: BigInt, path| Evaluation {
        value,
        path,
        representative: a.clone(),
        sign: 1,
    };
    if !satisfies_condition_8(a) {
        return Ok(done(BigInt::zero(), Path::Inadmissible));
    }
    if a.is_all_equal() {
        return Ok(done(coeff_all_equal(a)?, Path::AllEqual));
    }
    if opts.zero_shortcut && zero_by_corollary6(a) {
        return Ok(done(BigInt::zero(), Path::ZeroCriterion));
    }
    let (rep, sign) = if opts.reduce {
        reduce_representative(a)
    } else {
        (a.clone(), 1)
    };
    let (v, path) = match special_ab_shape(&rep) {
        Some(shape) => (special_ab_with(&rep, shape)?, Path::SpecialAb),
        None => (coeff_theorem3(&rep)?, Path::PartitionSum),
    };
    Ok(Evaluation {
        value: v * sign,
        path,
        representative: rep,
        sign,
    })
}

/// The coefficient `C_[a]` with default engine options.
pub fn coefficient(a: &IndexSet) -> Result<BigInt> {
    Ok(evaluate(a, EngineOptions::default())?.value)
}

/// `Ok(())` when `value` is a multiple of the divisibility bound.
pub fn check_divisibility(a: &IndexSet, value: &BigInt) -> Result<()> {
    let d = BigInt::from(divisibility_bound(a));
    if !(value % &d).is_zero() {
        return Err(Error::Inconsistent(format!(
            "C[{a}] = {value} is not a multiple of {d}"
        )));
    }
    Ok(())
}
