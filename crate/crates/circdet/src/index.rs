//! Index sets and multiplicity vectors, the two spellings of a monomial.

use std::fmt;

use crate::error::{Error, Result};

/// Sorted multiset of `N` subscripts, each in `[0, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: usize,
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, mut indices: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndexSet("dimension must be at least 1".into()));
        }
        if indices.len() != n {
            return Err(Error::InvalidIndexSet(format!(
                "expected {n} indices, got {}",
                indices.len()
            )));
        }
        if let Some(bad) = indices.iter().find(|&&a| a >= n) {
            return Err(Error::InvalidIndexSet(format!("index {bad} outside [0, {n})")));
        }
        indices.sort_unstable();
        Ok(IndexSet { n, indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn sum(&self) -> usize {
        self.indices.iter().sum()
    }

    pub fn multiplicities(&self) -> MultiplicityVector {
        let mut m = vec![0; self.n];
        for &a in &self.indices {
            m[a] += 1;
        }
        MultiplicityVector { m }
    }

    pub fn is_all_equal(&self) -> bool {
        self.indices.first() == self.indices.last()
    }

    /// Image under `m -> mult*m + shift (mod N)`.
    pub fn affine_image(&self, mult: usize, shift: usize) -> IndexSet {
        let n = self.n;
        let indices = self.indices.iter().map(|&a| (mult * a + shift) % n).collect();
        IndexSet::new(n, indices).expect("affine image stays in range")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.indices, self.n <= 10)
    }
}

/// Exponent form `[M_0, .., M_{N-1}]` of an index set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector {
    m: Vec<usize>,
}

impl MultiplicityVector {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::InvalidIndexSet("empty multiplicity vector".into()));
        }
        let total: usize = m.iter().sum();
        if total != m.len() {
            return Err(Error::InvalidIndexSet(format!(
                "multiplicities sum to {total}, expected {}",
                m.len()
            )));
        }
        Ok(MultiplicityVector { m })
    }

    /// Exponent vector without the degree check, for products of expansions.
    pub(crate) fn from_raw_unchecked(m: Vec<usize>) -> Self {
        MultiplicityVector { m }
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.m
    }

    /// `sum_m m * M_m`.
    pub fn weighted_sum(&self) -> usize {
        self.m.iter().enumerate().map(|(i, &c)| i * c).sum()
    }

    pub fn satisfies_condition_8(&self) -> bool {
        self.weighted_sum() % self.n() == 0
    }

    pub fn index_set(&self) -> IndexSet {
        let mut indices = Vec::with_capacity(self.n());
        for (i, &c) in self.m.iter().enumerate() {
            indices.extend(std::iter::repeat(i).take(c));
        }
        IndexSet {
            n: self.n(),
            indices,
        }
    }

    /// Multiplicities sorted in decreasing order, the "partition" label of a monomial.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.m.iter().copied().filter(|&c| c > 0).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.m, self.m.iter().all(|&c| c < 10))
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, v: &[usize], compact: bool) -> fmt::Result {
    if compact {
        for d in v {
            write!(f, "{d}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = v.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Calls `visit` on every admissible multiplicity vector (`sum m*M_m = 0 mod N`), in lexicographic order.
pub fn for_each_admissible_vector(n: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(
        pos: usize,
        n: usize,
        left: usize,
        weight: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if pos == n - 1 {
            if (weight + pos * left) % n == 0 {
                cur.push(left);
                visit(cur);
                cur.pop();
            }
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(pos + 1, n, left - c, (weight + pos * c) % n, cur, visit);
            cur.pop();
        }
    }
    if n == 0 {
        return;
    }
    let mut cur = Vec::with_capacity(n);
    rec(0, n, n, 0, &mut cur, &mut visit);
}

/// All admissible multiplicity vectors, lexicographically sorted.
pub fn admissible_vectors(n: usize) -> Vec<MultiplicityVector> {
    let mut out = Vec::new();
    for_each_admissible_vector(n, |m| out.push(MultiplicityVector::from_raw_unchecked(m.to_vec())));
    out
}
