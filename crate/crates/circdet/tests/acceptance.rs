//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the report is always printed.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use circdet::cli::find_zeros;
use circdet::coeff::{self, coeff_eq10d, coeff_theorem3, zero_by_corollary6};
use circdet::exactmath::sign_pow;
use circdet::expansion::{expand, power_identity_check, ExpansionPolynomial, Strategy};
use circdet::index::admissible_vectors;
use circdet::oracles::{
    coeff_via_theorem2, eigenvalue_det, leibniz_expansion, lemma1_check, lemma2_check, lemma3_check,
    lemma6_check,
};
use circdet::symmetry::{
    act, additive_multiplet, additive_multiplet_count_g, count_orbits, count_solutions_f, group_elements,
    invariant_count_mismatches, supermultiplet_count, OrbitKind,
};
use circdet::{IndexSet, MultiplicityVector};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn set(n: usize, v: &[usize]) -> IndexSet {
    IndexSet::new(n, v.to_vec()).unwrap()
}

fn mv(s: &str) -> MultiplicityVector {
    MultiplicityVector::new(s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `"A^3 + B^3 - 3ABC"` into a polynomial in `n` letters.
fn parse_display(n: usize, s: &str) -> ExpansionPolynomial {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut poly = ExpansionPolynomial::new(n);
    let mut terms = Vec::new();
    let mut cur = String::new();
    for c in s.chars() {
        if (c == '+' || c == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    terms.push(cur);
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) => (-1, rest.to_string()),
            None => (1, t.trim_start_matches('+').to_string()),
        };
        let digits: String = body.chars().take_while(|c| c.is_ascii_digit()).collect();
        let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
        let chars: Vec<char> = body[digits.len()..].chars().collect();
        let mut m = vec![0usize; n];
        let mut i = 0;
        while i < chars.len() {
            let var = (chars[i] as u8 - b'A') as usize;
            i += 1;
            let mut e = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let mut d = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    d.push(chars[i]);
                    i += 1;
                }
                e = d.parse().unwrap();
            }
            m[var] += e;
        }
        poly.add_to(MultiplicityVector::new(m).unwrap(), big(sign * coeff));
    }
    poly
}

fn c1_worked_example() -> Outcome {
    let a = set(10, &[0, 0, 1, 1, 1, 1, 3, 7, 8, 8]);
    let want = big(200);
    let got = [
        ("engine", coeff::coefficient(&a).map_err(|e| e.to_string())?),
        ("multiset partitions", coeff_theorem3(&a).map_err(|e| e.to_string())?),
        ("labeled partitions", coeff_eq10d(&a).map_err(|e| e.to_string())?),
        ("k-mod oracle", coeff_via_theorem2(&a)),
    ];
    for (name, v) in &got {
        ensure!(*v == want, "{name} gives {v}");
    }
    Ok("C[0011113788] = 200 on all four routes".into())
}

fn c2_sample_calculations() -> Outcome {
    for (a, want) in [
        (set(7, &[0, 1, 2, 3, 4, 5, 6]), -105),
        (set(8, &[0, 0, 2, 2, 4, 4, 6, 6]), 56),
    ] {
        let leib = leibniz_expansion(a.n()).map_err(|e| e.to_string())?;
        let vals = [
            coeff::coefficient(&a).map_err(|e| e.to_string())?,
            coeff_theorem3(&a).map_err(|e| e.to_string())?,
            coeff_eq10d(&a).map_err(|e| e.to_string())?,
            coeff_via_theorem2(&a),
            leib.get(&a.multiplicities()),
        ];
        ensure!(vals.iter().all(|v| *v == big(want)), "C[{a}] routes disagree: {vals:?}");
    }
    Ok("C[0123456] = -105, C[00224466] = 56".into())
}

const DET3: &str = "A^3 + B^3 + C^3 - 3ABC";
const DET4: &str = "A^4 - B^4 + C^4 - D^4 - 2A^2C^2 + 2B^2D^2 - 4A^2BD + 4AB^2C - 4BC^2D + 4ACD^2";
const DET5: &str = "A^5 + B^5 + C^5 + D^5 + E^5
    - 5A^3BE - 5A^3CD - 5AB^3C - 5B^3DE - 5AC^3E
    - 5BC^3D - 5ABD^3 - 5CD^3E - 5ADE^3 - 5BCE^3
    + 5A^2B^2D + 5A^2BC^2 + 5A^2CE^2 + 5A^2D^2E + 5AB^2E^2
    + 5AC^2D^2 + 5B^2C^2E + 5B^2CD^2 + 5BD^2E^2 + 5C^2DE^2
    - 5ABCDE";

fn c3_small_expansions() -> Outcome {
    for (n, text) in [(3, DET3), (4, DET4), (5, DET5)] {
        let want = parse_display(n, text);
        for strategy in [Strategy::Direct, Strategy::Reduced] {
            let got = expand(n, strategy).map_err(|e| e.to_string())?;
            ensure!(got == want, "expand({n}) differs from the displayed expansion");
        }
    }
    let p3 = expand(3, Strategy::Direct).unwrap();
    ensure!(
        circdet::cli::det_line(&p3) == format!("det[A,B,C] = {DET3}"),
        "text rendering of det[A,B,C] differs"
    );
    Ok("N=3,4,5 match term for term (4, 10, 26 terms)".into())
}

/// (exponent vector, value, multiplet size when it is not N).
type Row = (&'static str, i64, Option<usize>);

const TABLE6: &[Row] = &[
    ("600000", 1, None),
    ("400200", -3, None),
    ("410001", -6, None),
    ("401010", -6, None),
    ("303000", 2, None),
    ("320010", 6, None),
    ("301002", 6, None),
    ("311100", 12, None),
    ("300111", 12, None),
    ("222000", -9, None),
    ("202020", 9, Some(2)),
    ("210120", -18, None),
    ("210201", 0, None),
    ("211011", 0, None),
];

const TABLE7: &[Row] = &[
    ("7000000", 1, None),
    ("5100001", -7, None),
    ("5010010", -7, None),
    ("5001100", -7, None),
    ("4200010", 7, None),
    ("4021000", 7, None),
    ("4102000", 7, None),
    ("4000201", 7, None),
    ("4000120", 7, None),
    ("4010002", 7, None),
    ("4110100", 14, None),
    ("4001011", 14, None),
    ("3300100", -7, None),
    ("3130000", -7, None),
    ("3003010", -7, None),
    ("3200002", 14, None),
    ("3020020", 14, None),
    ("3002200", 14, None),
    ("3211000", -21, None),
    ("3020101", -21, None),
    ("3012001", -21, None),
    ("3100210", -21, None),
    ("3101020", -21, None),
    ("3000112", -21, None),
    ("3110011", 7, None),
    ("3011110", 7, None),
    ("3101101", 7, None),
    ("1002022", -7, None),
    ("1220200", -7, None),
    ("1012210", -14, None),
    ("1201102", -14, None),
    ("1120021", -14, None),
    ("1102201", 35, None),
    ("1210012", 35, None),
    ("1021120", 35, None),
    ("1111111", -105, Some(1)),
];

const TABLE8: &[Row] = &[
    ("80000000", 1, None),
    ("60002000", -4, None),
    ("61000001", -8, None),
    ("60010100", -8, None),
    ("60100010", -8, None),
    ("52000010", 8, None),
    ("50120000", 8, None),
    ("50000210", 8, None),
    ("50100002", 8, None),
    ("50201000", 8, None),
    ("50001020", 8, None),
    ("51100100", 16, None),
    ("50010011", 16, None),
    ("51011000", 16, None),
    ("50001101", 16, None),
    ("40400000", -2, None),
    ("40004000", 6, Some(4)),
    ("43000100", -8, None),
    ("40030001", -8, None),
    ("41000300", -8, None),
    ("40010003", -8, None),
    ("42020000", -12, None),
    ("40000202", -12, None),
    ("40200020", 20, None),
    ("42000002", 20, None),
    ("40020200", 20, None),
    ("42101000", -24, None),
    ("40021010", -24, None),
    ("40101200", -24, None),
    ("40001012", -24, None),
    ("41210000", -24, None),
    ("41010020", -24, None),
    ("40200101", -24, None),
    ("40000121", -24, None),
    ("41002001", 8, None),
    ("40012100", 8, None),
    ("40102010", 8, None),
    ("41100011", 16, None),
    ("40110110", 16, None),
    ("41010101", 16, None),
    ("41001110", -48, None),
    ("40111001", -48, None),
    ("23000003", 16, None),
    ("20030300", 16, None),
    ("20300030", -16, None),
    ("33110000", 32, None),
    ("31030010", 32, None),
    ("30100301", 32, None),
    ("30000113", 32, None),
    ("00130310", 32, None),
    ("01030301", -32, None),
    ("01300031", -32, None),
    ("32100020", -16, None),
    ("30220010", -16, None),
    ("30100220", -16, None),
    ("30200012", -16, None),
    ("32001200", 48, None),
    ("30021002", 48, None),
    ("32002010", 16, None),
    ("30122000", 16, None),
    ("30002210", 16, None),
    ("30102002", 16, None),
    ("32100101", -32, None),
    ("30020111", -32, None),
    ("31110200", -32, None),
    ("31010012", -32, None),
    ("32010110", 32, None),
    ("31120001", 32, None),
    ("31000211", 32, None),
    ("30110102", 32, None),
    ("32011001", -32, None),
    ("31021100", -32, None),
    ("30011201", -32, None),
    ("31001102", -32, None),
    ("31201001", 32, None),
    ("30011120", 32, None),
    ("30211100", 32, None),
    ("31001021", 32, None),
    ("31200110", -32, None),
    ("30110021", -32, None),
    ("31102100", 32, None),
    ("30012011", 32, None),
    ("31111010", 64, None),
    ("30101111", 64, None),
    ("20022200", 8, None),
    ("02200022", 56, None),
    ("20202020", 56, Some(2)),
    ("00122210", -48, None),
    ("02102012", -48, None),
    ("01022201", 16, None),
    ("02012102", 16, None),
    ("22120010", -80, None),
    ("20100212", -80, None),
    ("00212120", -16, None),
    ("01202021", -16, None),
    ("22111100", -32, None),
    ("21021011", -32, None),
    ("21101201", -32, None),
    ("20011112", -32, None),
    ("02110112", 32, None),
    ("21102011", -160, None),
    ("21012101", 96, Some(4)),
    ("21110111", -64, None),
];

/// N=8 rows whose printed value belongs to the label shifted by one place, so the
/// label itself carries the opposite sign. Each is pinned exactly below.
const SHIFTED_LABELS8: &[&str] = &[
    "23000003", "20030300", "00130310", "01030301", "20022200", "00122210", "02102012", "01022201",
    "02012102", "02110112",
];

fn c4_tables() -> Outcome {
    let mut rows = 0;
    let mut shifted = 0;
    for (n, table, supers) in [(6, TABLE6, 12), (7, TABLE7, 12), (8, TABLE8, 49)] {
        let poly = expand(n, Strategy::Reduced).map_err(|e| e.to_string())?;
        let direct = expand(n, Strategy::Direct).map_err(|e| e.to_string())?;
        ensure!(poly == direct, "N={n}: strategies disagree");
        let leib = leibniz_expansion(n).map_err(|e| e.to_string())?;
        let step = circdet::symmetry::GroupElement::new(n, 1, 1).unwrap();
        for &(key, value, size) in table {
            let m = mv(key);
            ensure!(m.satisfies_condition_8(), "N={n}: {key} is not admissible");
            let got = poly.get(&m);
            ensure!(got == leib.get(&m), "N={n}: C*{key} = {got}, Leibniz {}", leib.get(&m));
            if n == 8 && SHIFTED_LABELS8.contains(&key) {
                ensure!(got == big(-value), "N={n}: C*{key} = {got}, expected {}", -value);
                let next = act(step, &m);
                ensure!(poly.get(&next) == big(value), "N={n}: shifted label {next} is {}", poly.get(&next));
                shifted += 1;
            } else {
                ensure!(got == big(value), "N={n}: C*{key} = {got}, table says {value}");
            }
            let rec = additive_multiplet(&m).map_err(|e| e.to_string())?;
            ensure!(rec.n == size.unwrap_or(n), "N={n}: multiplet of {key} has {} members", rec.n);
            rows += 1;
        }
        let got = count_orbits(n, OrbitKind::Super);
        ensure!(got == supers, "N={n}: {got} super-multiplets, table says {supers}");
    }
    ensure!(shifted == SHIFTED_LABELS8.len(), "only {shifted} shifted labels seen");
    Ok(format!(
        "{rows} tabulated values and 12/12/49 super-multiplets reproduced; {shifted} N=8 labels carry the opposite sign of their printed value (value sits on the next rotation)"
    ))
}

fn c5_oracle_sweep() -> Outcome {
    let mut checked = 0;
    for n in 3..=8 {
        let leib = leibniz_expansion(n).map_err(|e| e.to_string())?;
        let keys = admissible_vectors(n);
        for m in &keys {
            let a = m.index_set();
            let t3 = coeff_theorem3(&a).map_err(|e| e.to_string())?;
            let l = leib.get(m);
            let k = coeff_via_theorem2(&a);
            ensure!(t3 == l && l == k, "C[{a}]: closed form {t3}, Leibniz {l}, k-mod {k}");
            checked += 1;
        }
        let admissible: HashSet<&MultiplicityVector> = keys.iter().collect();
        for (m, _) in leib.sorted_terms(false) {
            ensure!(admissible.contains(m), "Leibniz term {m} is not admissible");
        }
    }
    Ok(format!("{checked} coefficients, N=3..8, closed form = Leibniz = k-mod"))
}

fn c6_zero_criteria() -> Outcome {
    let mut report = Vec::new();
    for (n, want) in [(6, 12), (10, 120)] {
        let zeros = find_zeros(n, 12).map_err(|e| e.to_string())?;
        let structural = zeros.iter().filter(|z| z.structural).count();
        ensure!(structural == want, "N={n}: {structural} structural zeros, expected {want}");
        for z in &zeros {
            let v = coeff_via_theorem2(&z.set);
            ensure!(v.is_zero(), "N={n}: reported zero C[{}] evaluates to {v}", z.set);
            ensure!(z.structural == zero_by_corollary6(&z.set), "annotation mismatch for {}", z.set);
        }
        report.push(format!("N={n}: {structural} of {} zeros structural", zeros.len()));
    }
    ensure!(find_zeros(5, 12).map_err(|e| e.to_string())?.is_empty(), "N=5 has zeros");
    Ok(report.join(", ") + ", all re-evaluated to 0")
}

/// Admissible multisets by plain enumeration of non-decreasing index lists.
fn brute_solution_count(n: usize) -> usize {
    fn rec(n: usize, pos: usize, lo: usize, sum: usize) -> usize {
        if pos == n {
            return usize::from(sum % n == 0);
        }
        (lo..n).map(|v| rec(n, pos + 1, v, sum + v)).sum()
    }
    rec(n, 0, 0, 0)
}

/// Orbits by collecting every image set, independent of the minimum test.
fn naive_orbit_count(n: usize, kind: OrbitKind) -> usize {
    let elems: Vec<_> = group_elements(n)
        .into_iter()
        .filter(|g| kind == OrbitKind::Super || g.mult == 1)
        .collect();
    let mut seen: HashSet<MultiplicityVector> = HashSet::new();
    let mut count = 0;
    for m in admissible_vectors(n) {
        if seen.contains(&m) {
            continue;
        }
        count += 1;
        let orbit: BTreeSet<MultiplicityVector> = elems.iter().map(|&g| act(g, &m)).collect();
        seen.extend(orbit);
    }
    count
}

fn c7_counting() -> Outcome {
    for n in 1..=10 {
        let f = count_solutions_f(n).map_err(|e| e.to_string())?;
        let brute = brute_solution_count(n);
        ensure!(f == BigInt::from(brute), "F({n}) = {f}, enumeration {brute}");
        let g: BigInt = (1..=n).map(|k| additive_multiplet_count_g(n, k).unwrap()).sum();
        let add = count_orbits(n, OrbitKind::Additive);
        ensure!(g == BigInt::from(add), "N={n}: sum g = {g}, enumeration {add}");
        if n <= 8 {
            for kind in [OrbitKind::Additive, OrbitKind::Super] {
                let fast = count_orbits(n, kind);
                let slow = naive_orbit_count(n, kind);
                ensure!(fast == slow as u64, "N={n} {kind:?}: {fast} vs naive {slow}");
            }
        }
    }
    ensure!(count_orbits(5, OrbitKind::Additive) == 6, "N=5 additive count");
    for (n, want) in [(5, 4), (6, 12), (7, 12)] {
        let c = supermultiplet_count(n).map_err(|e| e.to_string())?;
        ensure!(c == big(want), "super count N={n}: {c}");
        ensure!(count_orbits(n, OrbitKind::Super) == want as u64, "N={n} enumeration");
    }
    let mut big_n = Vec::new();
    for n in [10, 14] {
        let c = supermultiplet_count(n).map_err(|e| e.to_string())?;
        let e = count_orbits(n, OrbitKind::Super);
        ensure!(c == BigInt::from(e), "N={n}: closed form {c}, enumeration {e}");
        big_n.push(format!("n_SM({n})={e}"));
    }
    for n in [5, 6, 7, 10, 14] {
        let bad = invariant_count_mismatches(n);
        ensure!(bad.is_empty(), "N={n}: fixed-vector counts differ: {bad:?}");
    }
    Ok(format!("F, g, n_SM and fixed-vector counts agree; {}", big_n.join(", ")))
}

fn c8_covariance() -> Outcome {
    let mut checks = 0;
    for n in 2..=7 {
        // Reference values come from the Leibniz sum, not from the engine.
        let leib = leibniz_expansion(n).map_err(|e| e.to_string())?;
        let elems = group_elements(n);
        for m in admissible_vectors(n) {
            let c = coeff::coefficient(&m.index_set()).map_err(|e| e.to_string())?;
            ensure!(c == leib.get(&m), "C{m}: engine {c}, Leibniz {}", leib.get(&m));
            coeff::check_divisibility(&m.index_set(), &c).map_err(|e| e.to_string())?;
            for &g in &elems {
                let img = act(g, &m);
                ensure!(
                    c == leib.get(&img) * g.sign(),
                    "C{m} = {c} but image {img} under ({},{}) is {}",
                    g.shift,
                    g.mult,
                    leib.get(&img)
                );
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (coefficient, group element) pairs, divisibility for N<=7"))
}

fn c9_identities() -> Outcome {
    let mut l1 = 0;
    for n in 2..=8usize {
        for mask in 0u32..(1 << (n - 1)) {
            let q: Vec<usize> = (1..n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            if q.len() >= n {
                continue;
            }
            ensure!(lemma1_check(n, &q), "excluded-root identity fails, N={n} q={q:?}");
            l1 += 1;
        }
    }
    for p in 1..=4 {
        for m in [3, 4, 5] {
            let ok = lemma2_check(p, m, 50, 1000 + (p * 7 + m) as u64).map_err(|e| e.to_string())?;
            ensure!(ok, "symmetric-sum identity fails at p={p}, M={m}");
        }
    }
    for p in 0..=7 {
        ensure!(lemma3_check(p), "cycle-count identity fails at p={p}");
    }
    for m in 1..=6 {
        for x in 0..=24 {
            ensure!(lemma6_check(m, x), "alternating binomial identity fails at m={m} X={x}");
        }
    }
    Ok(format!("{l1} excluded-root sets, symmetric sums p<=4, cycle counts p<=7, binomials m<=6 X<=24"))
}

fn c10_global_identities() -> Outcome {
    for n in 1..=9usize {
        let poly = expand(n, Strategy::Reduced).map_err(|e| e.to_string())?;
        if n % 2 == 1 && n > 1 {
            let v = poly.evaluate(&vec![1; n]).unwrap();
            ensure!(v.is_zero(), "det[1..1] = {v} for N={n}");
        }
        let mut x = vec![1; n];
        x[0] = 0;
        let v = poly.evaluate(&x).unwrap();
        let want = big(sign_pow(n as i64 - 1) * (n as i64 - 1));
        ensure!(v == want, "det[0,1..1] = {v} for N={n}, expected {want}");
    }
    for (n, d) in [(4, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 3)] {
        ensure!(power_identity_check(n, d).map_err(|e| e.to_string())?, "power identity N={n} d={d}");
    }
    Ok("det[1..1] = 0 for odd 3<=N<=9, det[0,1..1] for N<=9, six power identities".into())
}

fn c11_eigenvalues() -> Outcome {
    let x: Vec<Complex64> = [1.0, 2.0, 3.0, 4.0].iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let e = eigenvalue_det(&x);
    ensure!((e - Complex64::new(-160.0, 0.0)).norm() < 1e-6, "eigenvalue det[1,2,3,4] = {e}");
    let p4 = expand(4, Strategy::Direct).unwrap();
    ensure!(p4.evaluate(&[1, 2, 3, 4]).unwrap() == big(-160), "exact det[1,2,3,4]");
    let mut rng = StdRng::seed_from_u64(20_241_016);
    let mut worst = 0.0f64;
    for n in 1..=8 {
        let poly = expand(n, Strategy::Direct).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
            let exact = poly.evaluate(&v).unwrap().to_f64().unwrap();
            let xs: Vec<Complex64> = v.iter().map(|&a| Complex64::new(a as f64, 0.0)).collect();
            let approx = eigenvalue_det(&xs);
            let err = (approx - Complex64::new(exact, 0.0)).norm() / exact.abs().max(1.0);
            worst = worst.max(err);
            ensure!(err < 1e-6, "N={n} x={v:?}: exact {exact}, eigenvalues {approx}");
        }
    }
    Ok(format!("800 random vectors, worst relative error {worst:.1e}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("worked N=10 example", c1_worked_example),
        ("N=7 and N=8 sample coefficients", c2_sample_calculations),
        ("N=3,4,5 expansions", c3_small_expansions),
        ("tabulated N=6,7,8 multiplets", c4_tables),
        ("oracle equivalence sweep", c5_oracle_sweep),
        ("zero criteria", c6_zero_criteria),
        ("counting formulas", c7_counting),
        ("symmetry covariance", c8_covariance),
        ("identity checkers", c9_identities),
        ("global identities", c10_global_identities),
        ("eigenvalue sanity", c11_eigenvalues),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
