//! Brute-force and floating-point references for the closed forms.
//!
//! These are written to be obviously correct rather than fast.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, divisors, exact_div, factorial, mobius, multinomial_star, sign_pow};
use crate::expansion::ExpansionPolynomial;
use crate::index::{IndexSet, MultiplicityVector};
use crate::partitions::integer_partitions;

/// Largest dimension the Leibniz expansion accepts.
pub const LEIBNIZ_CAP: usize = 9;

/// `A^(k)`: distinct arrangements `sigma` of the index set with `sum q*sigma_q = k mod N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KModCounts {
    pub n: usize,
    pub counts: Vec<BigInt>,
}

impl KModCounts {
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }
}

/// Next permutation in lexicographic order; false once the sequence is descending.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn kmod_counts(a: &IndexSet) -> KModCounts {
    let n = a.n();
    let mut counts = vec![0u64; n];
    let mut sigma = a.indices().to_vec();
    loop {
        let w: usize = sigma.iter().enumerate().map(|(q, &s)| q * s).sum();
        counts[w % n] += 1;
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    KModCounts {
        n,
        counts: counts.into_iter().map(BigInt::from).collect(),
    }
}

/// `C = sum_{d|N} mu(N/d) A^(d)`, with `A^(N)` read as `A^(0)`.
pub fn coeff_via_theorem2(a: &IndexSet) -> BigInt {
    let k = kmod_counts(a);
    let n = a.n();
    divisors(n as u64)
        .into_iter()
        .map(|d| &k.counts[d as usize % n] * mobius((n as u64 / d) as i64).unwrap())
        .sum()
}

/// Symbolic determinant by summing over all `N!` permutations.
pub fn leibniz_expansion(n: usize) -> Result<ExpansionPolynomial> {
    if n == 0 || n > LEIBNIZ_CAP {
        return Err(Error::OutOfRange(format!("Leibniz expansion needs 1 <= N <= {LEIBNIZ_CAP}")));
    }
    // Split by the column chosen in row 0 and merge the partial maps.
    let partial: Vec<HashMap<Vec<u8>, i64>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc: HashMap<Vec<u8>, i64> = HashMap::new();
            let mut rest: Vec<usize> = (0..n).filter(|&c| c != first).collect();
            let mut perm = vec![0usize; n];
            let mut key = vec![0u8; n];
            loop {
                perm[0] = first;
                perm[1..].copy_from_slice(&rest);
                key.iter_mut().for_each(|k| *k = 0);
                for (r, &c) in perm.iter().enumerate() {
                    key[(r + n - c) % n] += 1;
                }
                *acc.entry(key.clone()).or_insert(0) += parity_sign(&perm);
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            acc
        })
        .collect();
    let mut merged: HashMap<Vec<u8>, i64> = HashMap::new();
    for part in partial {
        for (k, v) in part {
            *merged.entry(k).or_insert(0) += v;
        }
    }
    let mut poly = ExpansionPolynomial::new(n);
    for (k, v) in merged {
        if v != 0 {
            let m = MultiplicityVector::new(k.into_iter().map(usize::from).collect())?;
            poly.insert(m, BigInt::from(v));
        }
    }
    Ok(poly)
}

fn parity_sign(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    sign_pow(inv)
}

/// `prod_p sum_m w^{pm} x_m` with `w = exp(2 pi i / N)`.
pub fn eigenvalue_det(x: &[Complex64]) -> Complex64 {
    let n = x.len();
    let mut prod = Complex64::new(1.0, 0.0);
    for p in 0..n {
        let mut lambda = Complex64::zero();
        for (m, &xm) in x.iter().enumerate() {
            let angle = 2.0 * PI * ((p * m) % n) as f64 / n as f64;
            lambda += Complex64::from_polar(1.0, angle) * xm;
        }
        prod *= lambda;
    }
    prod
}

/// `Q(n; X, b | excluded)` modulo `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QQuery {
    pub n: i64,
    pub parts: usize,
    pub ceiling: usize,
    pub excluded: Vec<usize>,
}

/// Strictly increasing `X`-tuples from `[1, b]` avoiding `excluded`, with sum `= n mod N`.
pub fn q_partition_function(query: &QQuery, modulus: usize) -> Result<BigInt> {
    if query.ceiling >= modulus {
        return Err(Error::OutOfRange(format!(
            "part ceiling {} must be below {modulus}",
            query.ceiling
        )));
    }
    let table = q_table(modulus, query.parts, query.ceiling, &query.excluded);
    Ok(BigInt::from(table[query.n.rem_euclid(modulus as i64) as usize]))
}

/// Counts for every residue at once.
fn q_table(modulus: usize, parts: usize, ceiling: usize, excluded: &[usize]) -> Vec<u64> {
    let mut dp = vec![vec![0u64; modulus]; parts + 1];
    dp[0][0] = 1;
    for v in 1..=ceiling {
        if excluded.contains(&v) {
            continue;
        }
        for c in (1..=parts).rev() {
            for r in 0..modulus {
                let prev = dp[c - 1][(r + modulus - v % modulus) % modulus];
                dp[c][r] += prev;
            }
        }
    }
    dp.swap_remove(parts)
}

/// `A^(k)` rebuilt from restricted partition counts, pinning the largest index at position 0.
///
/// Only sets with index sum divisible by `N` are accepted; otherwise rotating the pinned
/// index to position 0 changes the residue and the count does not factor this way.
pub fn kmod_via_q(a: &IndexSet) -> Result<KModCounts> {
    let n = a.n();
    let mult = a.multiplicities();
    let c = mult.counts();
    if *a.indices().last().unwrap() < 2 {
        return Err(Error::Shape(format!("{a} has no index above 1")));
    }
    if a.sum() % n != 0 {
        return Err(Error::Shape(format!("{a}: index sum is not divisible by N")));
    }
    let m1 = c[1];
    let idx = a.indices();
    let rest: Vec<usize> = idx[..n - 1].iter().copied().filter(|&v| v >= 2).collect();

    let mut tables: HashMap<u64, Vec<u64>> = HashMap::new();
    let mut sums = vec![0u64; n];
    let mut used = vec![false; n];
    place(n, m1, &rest, 0, 0, 0, &mut used, &mut tables, &mut sums);

    let den: BigInt = c[2..].iter().map(|&k| factorial(k)).product();
    let counts = sums
        .into_iter()
        .map(|s| exact_div(&(BigInt::from(s) * n), &den, "placement count"))
        .collect::<Result<Vec<_>>>()?;
    Ok(KModCounts { n, counts })
}

#[allow(clippy::too_many_arguments)]
fn place(
    n: usize,
    m1: usize,
    rest: &[usize],
    i: usize,
    weight: usize,
    mask: u64,
    used: &mut [bool],
    tables: &mut HashMap<u64, Vec<u64>>,
    sums: &mut [u64],
) {
    if i == rest.len() {
        let table = tables.entry(mask).or_insert_with(|| {
            let excluded: Vec<usize> = (1..n).filter(|&q| mask >> q & 1 == 1).collect();
            q_table(n, m1, n - 1, &excluded)
        });
        for (k, s) in sums.iter_mut().enumerate() {
            *s += table[(k + n - weight) % n];
        }
        return;
    }
    for q in 1..n {
        if used[q] {
            continue;
        }
        used[q] = true;
        let w = (weight + rest[i] * q) % n;
        place(n, m1, rest, i + 1, w, mask | 1 << q, used, tables, sums);
        used[q] = false;
    }
}

/// Both sides of the excluded-root product identity, compared at 64 points on `|y| = 1/2`.
///
/// Left: `sum_{m<N} (-y)^m / prod_s (1 + y w^{q_s})`, evaluated as a rational function.
/// Right: the polynomial of degree `N-1-p` with coefficients `(-1)^m sum_kappa w^{kappa.q}`.
pub fn lemma1_check(n: usize, q: &[usize]) -> bool {
    let p = q.len();
    if p >= n || q.iter().any(|&v| v == 0 || v >= n) {
        return false;
    }
    let w = |k: usize| Complex64::from_polar(1.0, 2.0 * PI * (k % n) as f64 / n as f64);
    let deg = n - 1 - p;
    let mut coeffs = vec![Complex64::zero(); deg + 1];
    for (m, slot) in coeffs.iter_mut().enumerate() {
        let mut s = Complex64::zero();
        let mut kappa = vec![0usize; p];
        kappa_sum(&mut kappa, 0, m, q, &w, &mut s);
        *slot = s * sign_pow(m as i64) as f64;
    }
    (0..64).all(|j| {
        let y = Complex64::from_polar(0.5, 2.0 * PI * j as f64 / 64.0);
        let mut num = Complex64::zero();
        let mut pow = Complex64::new(1.0, 0.0);
        for _ in 0..n {
            num += pow;
            pow *= -y;
        }
        let den: Complex64 = q.iter().map(|&qs| Complex64::new(1.0, 0.0) + y * w(qs)).product();
        let lhs = num / den;
        let mut rhs = Complex64::zero();
        let mut yp = Complex64::new(1.0, 0.0);
        for c in &coeffs {
            rhs += c * yp;
            yp *= y;
        }
        (lhs - rhs).norm() < 1e-9
    })
}

fn kappa_sum(
    kappa: &mut Vec<usize>,
    i: usize,
    budget: usize,
    q: &[usize],
    w: &dyn Fn(usize) -> Complex64,
    acc: &mut Complex64,
) {
    if i == kappa.len() {
        let e: usize = kappa.iter().zip(q).map(|(k, qq)| k * qq).sum();
        *acc += w(e);
        return;
    }
    for k in 0..=budget {
        kappa[i] = k;
        kappa_sum(kappa, i + 1, budget - k, q, w, acc);
    }
    kappa[i] = 0;
}

/// Random symmetric `h` on `[1, M]^p`: a value per sorted tuple.
fn random_symmetric(p: usize, m: usize, rng: &mut StdRng) -> BTreeMap<Vec<usize>, i64> {
    fn rec(p: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for v in lo..=m {
            cur.push(v);
            rec(p, m, v, cur, out);
            cur.pop();
        }
    }
    let mut keys = Vec::new();
    rec(p, m, 1, &mut Vec::new(), &mut keys);
    keys.into_iter().map(|k| (k, rng.gen_range(-50..=50))).collect()
}

/// Strictly increasing lattice sums against the partition-weighted unrestricted sums,
/// for `trials` random symmetric integer functions.
pub fn lemma2_check(p: usize, m: usize, trials: usize, seed: u64) -> Result<bool> {
    if p == 0 || p > 5 || m == 0 || m > 6 {
        return Err(Error::OutOfRange(format!("symmetric-sum check needs 1 <= p <= 5 and 1 <= M <= 6, got p={p} M={m}")));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..trials {
        let h = random_symmetric(p, m, &mut rng);
        let eval = |args: &[usize]| {
            let mut k = args.to_vec();
            k.sort_unstable();
            h[&k]
        };
        let mut lhs = BigInt::zero();
        for_each_tuple(p, m, &mut |t| {
            if t.windows(2).all(|w| w[0] < w[1]) {
                lhs += eval(t);
            }
        });
        let mut rhs = BigInt::zero();
        for z in integer_partitions(p) {
            let j = z.len();
            let weight = multinomial_star(p, &z.multiplicities())? * sign_pow((p + j) as i64);
            let mut inner = BigInt::zero();
            let mut args = Vec::with_capacity(p);
            for_each_tuple(j, m, &mut |t| {
                args.clear();
                for (&v, &size) in t.iter().zip(&z.parts) {
                    args.extend(std::iter::repeat(v).take(size));
                }
                inner += eval(&args);
            });
            rhs += weight * inner;
        }
        if lhs * factorial(p) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn for_each_tuple(len: usize, m: usize, f: &mut dyn FnMut(&[usize])) {
    let mut t = vec![1usize; len];
    loop {
        f(&t);
        let mut i = 0;
        while i < len && t[i] == m {
            t[i] = 1;
            i += 1;
        }
        if i == len {
            return;
        }
        t[i] += 1;
    }
}

/// `sum_Z prod_i C(k_i, beta_i) (p; k)* = p! / prod_i (i^{beta_i} beta_i!)` for every
/// admissible `beta` with `sum i*beta_i <= p`.
pub fn lemma3_check(p: usize) -> bool {
    let parts = integer_partitions(p);
    let mut ok = true;
    let mut beta = vec![0usize; p];
    fn rec(t: usize, budget: usize, beta: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if t > beta.len() {
            f(beta);
            return;
        }
        let mut b = 0;
        while b * t <= budget {
            beta[t - 1] = b;
            rec(t + 1, budget - b * t, beta, f);
            b += 1;
        }
        beta[t - 1] = 0;
    }
    rec(1, p, &mut beta, &mut |beta| {
        let lhs: BigInt = parts
            .iter()
            .map(|z| {
                let k = z.multiplicities();
                let choose: BigInt = k
                    .iter()
                    .zip(beta)
                    .map(|(&ki, &bi)| binomial(ki as i64, bi as i64))
                    .product();
                choose * multinomial_star(p, &k).unwrap()
            })
            .sum();
        let den: BigInt = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| BigInt::from(i + 1).pow(b as u32) * factorial(b))
            .product();
        if lhs * den != factorial(p) {
            ok = false;
        }
    });
    ok
}

/// `sum_{k=0}^{X} C(k, m-1) C(X-k, m) (-1)^k = (-1)^{m-1} C(ceil(X/2), m)`.
pub fn lemma6_check(m: i64, x: i64) -> bool {
    let lhs: BigInt = (0..=x)
        .map(|k| binomial(k, m - 1) * binomial(x - k, m) * sign_pow(k))
        .sum();
    lhs == binomial((x + 1) / 2, m) * sign_pow(m - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::coeff_theorem3;
    use crate::index::admissible_vectors;
    use proptest::prelude::*;

    fn set(n: usize, v: &[usize]) -> IndexSet {
        IndexSet::new(n, v.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kmod_examples() {
        assert_eq!(kmod_counts(&set(3, &[0, 1, 2])).counts, ints(&[0, 3, 3]));
        assert_eq!(kmod_counts(&set(3, &[1, 1, 1])).counts, ints(&[1, 0, 0]));
        assert_eq!(kmod_counts(&set(4, &[0, 0, 1, 3])).total(), BigInt::from(12));
    }

    #[test]
    fn mobius_oracle_examples() {
        assert_eq!(coeff_via_theorem2(&set(3, &[0, 1, 2])), BigInt::from(-3));
        assert_eq!(coeff_via_theorem2(&set(5, &[0, 0, 1, 2, 2])), BigInt::from(5));
        assert_eq!(coeff_via_theorem2(&set(5, &[0, 0, 1, 2, 3])), BigInt::zero());
        assert_eq!(
            coeff_via_theorem2(&set(10, &[0, 0, 1, 1, 1, 1, 3, 7, 8, 8])),
            BigInt::from(200)
        );
    }

    #[test]
    fn leibniz_small() {
        let p = leibniz_expansion(3).unwrap();
        assert_eq!(p.nonzero_len(), 4);
        let abc = MultiplicityVector::new(vec![1, 1, 1]).unwrap();
        assert_eq!(p.get(&abc), BigInt::from(-3));
        assert_eq!(leibniz_expansion(4).unwrap().nonzero_len(), 10);
        let one = leibniz_expansion(1).unwrap();
        assert_eq!(one.get(&MultiplicityVector::new(vec![1]).unwrap()), BigInt::from(1));
        assert!(leibniz_expansion(10).is_err());
    }

    #[test]
    fn eigenvalues() {
        let x: Vec<Complex64> = [1.0, 2.0, 3.0, 4.0].iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let d = eigenvalue_det(&x);
        assert!((d.re + 160.0).abs() < 1e-6 && d.im.abs() < 1e-6);
        for n in 1..=9usize {
            let ones = vec![Complex64::new(1.0, 0.0); n];
            let mut shifted = ones.clone();
            shifted[0] = Complex64::zero();
            if n % 2 == 1 && n > 1 {
                assert!(eigenvalue_det(&ones).norm() < 1e-6);
            }
            let want = sign_pow(n as i64 - 1) as f64 * (n as f64 - 1.0);
            assert!((eigenvalue_det(&shifted) - want).norm() < 1e-6, "n={n}");
        }
    }

    #[test]
    fn q_examples() {
        let q = |n, x, b| QQuery { n, parts: x, ceiling: b, excluded: vec![] };
        assert_eq!(q_partition_function(&q(0, 2, 3), 4).unwrap(), BigInt::from(1));
        assert_eq!(q_partition_function(&q(2, 2, 3), 4).unwrap(), BigInt::from(0));
        assert_eq!(q_partition_function(&q(0, 0, 3), 4).unwrap(), BigInt::from(1));
        assert!(q_partition_function(&q(0, 1, 4), 4).is_err());
        let ex = QQuery { n: 0, parts: 2, ceiling: 3, excluded: vec![1] };
        assert_eq!(q_partition_function(&ex, 4).unwrap(), BigInt::from(0));
    }

    #[test]
    fn q_generating_function() {
        for n in 2..=8usize {
            for x in 0..n {
                let mut s = Complex64::zero();
                for r in 0..n {
                    let c = q_partition_function(&QQuery { n: r as i64, parts: x, ceiling: n - 1, excluded: vec![] }, n)
                        .unwrap();
                    let c: f64 = c.to_string().parse().unwrap();
                    s += Complex64::from_polar(c, 2.0 * PI * r as f64 / n as f64);
                }
                assert!((s - sign_pow(x as i64) as f64).norm() < 1e-9, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn kmod_via_q_examples() {
        for a in [
            set(6, &[0, 0, 1, 1, 2, 2]),
            set(12, &[0, 0, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3]),
            set(5, &[0, 0, 0, 1, 4]),
            set(10, &[0, 0, 1, 1, 1, 1, 3, 7, 8, 8]),
        ] {
            assert_eq!(kmod_via_q(&a).unwrap(), kmod_counts(&a), "{a}");
        }
        assert!(kmod_via_q(&set(3, &[0, 1, 1])).is_err());
        assert!(kmod_via_q(&set(4, &[0, 0, 1, 2])).is_err());
    }

    #[test]
    fn kmod_via_q_exhaustive_small() {
        for n in 3..=7 {
            for m in admissible_vectors(n) {
                let a = m.index_set();
                if *a.indices().last().unwrap() >= 2 {
                    assert_eq!(kmod_via_q(&a).unwrap(), kmod_counts(&a), "{a}");
                }
            }
        }
    }

    #[test]
    fn identity_checkers() {
        assert!(lemma1_check(5, &[1, 3]));
        assert!(lemma1_check(7, &[2]));
        assert!(lemma1_check(6, &[]));
        assert!(!lemma1_check(5, &[0]));
        assert!(lemma2_check(2, 5, 10, 1).unwrap());
        assert!(lemma2_check(3, 4, 50, 2).unwrap());
        assert!(lemma2_check(6, 4, 1, 2).is_err());
        for p in 0..=7 {
            assert!(lemma3_check(p), "p={p}");
        }
        for m in 1..=6 {
            for x in 0..=24 {
                assert!(lemma6_check(m, x));
            }
        }
    }

    #[test]
    fn leibniz_matches_closed_form() {
        for n in 1..=7 {
            let p = leibniz_expansion(n).unwrap();
            for m in admissible_vectors(n) {
                assert_eq!(p.get(&m), coeff_theorem3(&m.index_set()).unwrap(), "{m}");
            }
        }
    }

    fn arb_set(max_n: usize) -> impl Strategy<Value = IndexSet> {
        (2..=max_n).prop_flat_map(|n| {
            prop::collection::vec(0..n, n).prop_map(move |v| IndexSet::new(n, v).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn kmod_total_is_multinomial(a in arb_set(8)) {
            let k = kmod_counts(&a);
            let den: BigInt = a.multiplicities().counts().iter().map(|&c| factorial(c)).product();
            prop_assert_eq!(k.total() * den, factorial(a.n()));
        }

        #[test]
        fn kmod_invariant_under_units(a in arb_set(8)) {
            let n = a.n();
            let k = kmod_counts(&a);
            for u in crate::exactmath::units(n) {
                for r in 0..n {
                    prop_assert_eq!(&k.counts[r], &k.counts[(u * r) % n]);
                }
            }
        }

        #[test]
        fn kmod_shift_by_index_sum(a in arb_set(8)) {
            let n = a.n();
            let x = a.sum() % n;
            let k = kmod_counts(&a);
            for r in 0..n {
                prop_assert_eq!(&k.counts[r], &k.counts[(r + x) % n]);
            }
        }

        #[test]
        fn mobius_oracle_vanishes_when_inadmissible(a in arb_set(8)) {
            if a.sum() % a.n() != 0 {
                prop_assert!(coeff_via_theorem2(&a).is_zero());
            }
        }
    }
}
