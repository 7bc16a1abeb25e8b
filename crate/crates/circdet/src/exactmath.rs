//! Exact integer combinatorics and small number-theoretic helpers.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;

/// Factorials below this bound come from a precomputed table.
pub const FACTORIAL_CACHE: usize = 64;

static FACTORIALS: LazyLock<Vec<BigInt>> = LazyLock::new(|| {
    let mut table = Vec::with_capacity(FACTORIAL_CACHE + 1);
    let mut acc = BigInt::one();
    table.push(acc.clone());
    for i in 1..=FACTORIAL_CACHE {
        acc *= i;
        table.push(acc.clone());
    }
    table
});

pub fn factorial(n: usize) -> BigInt {
    if n <= FACTORIAL_CACHE {
        return FACTORIALS[n].clone();
    }
    let mut acc = FACTORIALS[FACTORIAL_CACHE].clone();
    for i in FACTORIAL_CACHE + 1..=n {
        acc *= i;
    }
    acc
}

/// C(n, k), zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `p! / prod_i (i^{k_i} k_i!)`, where `k[i-1]` is the number of parts equal to `i`.
pub fn multinomial_star(p: usize, k: &[usize]) -> Result<BigInt, Error> {
    let weighted: usize = k.iter().enumerate().map(|(i, &ki)| (i + 1) * ki).sum();
    if weighted != p {
        return Err(Error::WeightedSum { p, got: weighted });
    }
    let mut den = BigInt::one();
    for (i, &ki) in k.iter().enumerate() {
        den *= BigInt::from(i + 1).pow(ki as u32) * factorial(ki);
    }
    Ok(factorial(p) / den)
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: i64) -> Result<i64, Error> {
    if n <= 0 {
        return Err(Error::NonPositive(n));
    }
    let f = factorize(n as u64);
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

pub fn euler_phi(n: i64) -> Result<u64, Error> {
    if n <= 0 {
        return Err(Error::NonPositive(n));
    }
    let mut phi = n as u64;
    for (p, _) in factorize(n as u64) {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Residues in `[1, n)` coprime to `n`; `[1]` when `n = 1`.
pub fn units(n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&b| num_integer::gcd(b, n) == 1).collect()
}

/// Inverse of `n` modulo `modulus`, normalized into `[0, modulus)`.
pub fn mod_inverse(n: i64, modulus: u64) -> Result<u64, Error> {
    if modulus == 0 {
        return Err(Error::NonPositive(0));
    }
    let m = modulus as i64;
    let r = n.rem_euclid(m);
    let eg = r.extended_gcd(&m);
    if eg.gcd != 1 {
        return Err(Error::NotInvertible { n, modulus });
    }
    Ok(eg.x.rem_euclid(m) as u64)
}

pub fn heaviside(n: i64) -> i64 {
    (n >= 0) as i64
}

pub fn delta_mod(d: i64, modulus: u64) -> i64 {
    (d.rem_euclid(modulus as i64) == 0) as i64
}

/// `(-1)^e`.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Exact division that refuses to round.
pub fn exact_div(num: &BigInt, den: &BigInt, what: &'static str) -> Result<BigInt, Error> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            what,
            num: num.to_string(),
            den: den.to_string(),
        });
    }
    Ok(q)
}
