//! Integer partitions and partitions of multisets.

use std::cmp::Reverse;

/// A partition of `p` with parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartition {
    pub parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `k_1..k_p`: entry `i-1` counts the parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let p = self.total();
        let mut k = vec![0; p];
        for &z in &self.parts {
            k[z - 1] += 1;
        }
        k
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// All partitions of `p`, largest first part first. `p = 0` gives one empty partition.
pub fn integer_partitions(p: usize) -> Vec<IntegerPartition> {
    fn rec(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if rest == 0 {
            out.push(IntegerPartition { parts: cur.clone() });
            return;
        }
        for z in (1..=cap.min(rest)).rev() {
            cur.push(z);
            rec(rest - z, z, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, p, &mut Vec::new(), &mut out);
    out
}

/// One distinct block of a multiset partition, repeated `kappa` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Part {
    /// Sorted elements of the block.
    pub elements: Vec<usize>,
    pub kappa: usize,
}

impl Part {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn trace(&self) -> usize {
        self.elements.iter().sum()
    }

    /// Multiplicities `m_a` of the distinct elements inside the block.
    pub fn element_multiplicities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.elements.len() {
            let mut j = i;
            while j < self.elements.len() && self.elements[j] == self.elements[i] {
                j += 1;
            }
            out.push(j - i);
            i = j;
        }
        out
    }
}

/// A partition of a multiset into blocks; identical blocks are merged and counted by `kappa`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    pub parts: Vec<Part>,
}

impl SetPartition {
    /// Number of blocks counted with repetition.
    pub fn block_count(&self) -> usize {
        self.parts.iter().map(|p| p.kappa).sum()
    }

    /// Blocks with repetition, in canonical order.
    pub fn blocks(&self) -> impl Iterator<Item = &Part> {
        self.parts
            .iter()
            .flat_map(|p| std::iter::repeat(p).take(p.kappa))
    }

    /// The block-size profile as an integer partition.
    pub fn shape(&self) -> IntegerPartition {
        let mut parts: Vec<usize> = self.blocks().map(Part::size).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    /// Union of all blocks, sorted.
    pub fn flatten(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.blocks().flat_map(|p| p.elements.clone()).collect();
        all.sort_unstable();
        all
    }
}

/// `-Tr(theta) mod n` in `[0, n)`.
pub fn part_residue(theta: &[usize], n: usize) -> usize {
    let t: usize = theta.iter().sum();
    (n - t % n) % n
}

type Key = (Reverse<usize>, Vec<usize>);

fn key_of(counts: &[usize], values: &[usize]) -> Key {
    let mut elems = Vec::new();
    for (v, &c) in values.iter().zip(counts) {
        elems.extend(std::iter::repeat(*v).take(c));
    }
    (Reverse(elems.len()), elems)
}

/// Every partition of the multiset `elements`, each listed once.
///
/// Blocks come out sorted by decreasing size, then lexicographically.
pub fn multiset_partitions(elements: &[usize]) -> Vec<SetPartition> {
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    let mut values = Vec::new();
    let mut counts = Vec::new();
    for &e in &sorted {
        if values.last() == Some(&e) {
            *counts.last_mut().unwrap() += 1;
        } else {
            values.push(e);
            counts.push(1);
        }
    }
    if sorted.is_empty() {
        return Vec::new();
    }

    let mut out = Vec::new();
    let mut chosen: Vec<Key> = Vec::new();
    rec(&values, &mut counts, None, &mut chosen, &mut out);
    out
}

fn rec(
    values: &[usize],
    remaining: &mut Vec<usize>,
    bound: Option<&Key>,
    chosen: &mut Vec<Key>,
    out: &mut Vec<SetPartition>,
) {
    if remaining.iter().all(|&c| c == 0) {
        out.push(collapse(chosen));
        return;
    }
    // Enumerate sub-multisets of `remaining` as mixed-radix counters.
    let mut take = vec![0usize; remaining.len()];
    loop {
        let mut i = 0;
        while i < take.len() {
            if take[i] < remaining[i] {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
        if i == take.len() {
            break;
        }
        let key = key_of(&take, values);
        if bound.is_some_and(|b| key < *b) {
            continue;
        }
        for (r, t) in remaining.iter_mut().zip(&take) {
            *r -= t;
        }
        chosen.push(key);
        let last = chosen.last().cloned().unwrap();
        rec(values, remaining, Some(&last), chosen, out);
        chosen.pop();
        for (r, t) in remaining.iter_mut().zip(&take) {
            *r += t;
        }
    }
}

fn collapse(chosen: &[Key]) -> SetPartition {
    let mut sorted: Vec<&Key> = chosen.iter().collect();
    sorted.sort();
    let mut parts: Vec<Part> = Vec::new();
    for k in sorted {
        match parts.last_mut() {
            Some(p) if p.elements == k.1 => p.kappa += 1,
            _ => parts.push(Part {
                elements: k.1.clone(),
                kappa: 1,
            }),
        }
    }
    SetPartition { parts }
}

/// Partitions of the labeled positions `0..p`, each block listed in increasing order.
pub fn labeled_set_partitions(p: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, p: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == p {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, p, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, p, blocks, out);
        blocks.pop();
    }
    if p == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(0, p, &mut Vec::new(), &mut out);
    out
}
