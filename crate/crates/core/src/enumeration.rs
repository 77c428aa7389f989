//! Exhaustive enumeration of monomial ideals of fixed colength (order
//! ideals in N^n) and of monomial submodules of rank-r free modules, with
//! independent count oracles.
//!
//! - [`enumerate_order_ideals`]: box-growth enumeration with dedup, the
//!   primary strategy.
//! - [`enumerate_order_ideals_by_slices`]: independent slice-chain strategy,
//!   used to cross-check the primary one where no product formula exists.
//! - [`partition_numbers`] / [`macmahon_numbers`]: coefficients of
//!   prod (1-q^k)^-1 and prod (1-q^k)^-k by dynamic programming.
//! - [`count_order_ideals`] / [`count_submodules`]: the oracles (n <= 3).

use crate::monomial::Monomial;
use crate::submodule::MonomialSubmodule;
use crate::{Error, Result};
use std::collections::HashSet;

/// Canonical encoding of an order ideal: the sorted exponent vectors of its
/// standard monomials.
pub type StaircaseKey = Vec<Vec<u32>>;

fn addable_boxes(ideal: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    let set: HashSet<&Vec<u32>> = ideal.iter().collect();
    let mut candidates: HashSet<Vec<u32>> = HashSet::new();
    if ideal.is_empty() {
        candidates.insert(vec![0; n]);
    } else {
        for e in ideal {
            for v in 0..n {
                let mut b = e.clone();
                b[v] += 1;
                candidates.insert(b);
            }
        }
    }
    let mut out: Vec<Vec<u32>> = candidates
        .into_iter()
        .filter(|b| !set.contains(b))
        .filter(|b| {
            (0..n).all(|v| {
                if b[v] == 0 {
                    return true;
                }
                let mut pred = b.clone();
                pred[v] -= 1;
                set.contains(&pred)
            })
        })
        .collect();
    out.sort();
    out
}

/// All order ideals in N^n with exactly d elements, grown one box at a time
/// at addable corners and deduplicated by canonical key. Output is sorted
/// lexicographically, so two runs emit identical sequences.
pub fn enumerate_order_ideals(n: usize, d: u64) -> Vec<StaircaseKey> {
    assert!(n >= 1);
    let mut level: HashSet<StaircaseKey> = HashSet::new();
    level.insert(Vec::new());
    for _ in 0..d {
        let mut next: HashSet<StaircaseKey> = HashSet::new();
        for ideal in &level {
            for b in addable_boxes(ideal, n) {
                let mut grown = ideal.clone();
                let pos = grown.binary_search(&b).unwrap_err();
                grown.insert(pos, b);
                next.insert(grown);
            }
        }
        level = next;
    }
    let mut out: Vec<StaircaseKey> = level.into_iter().collect();
    out.sort();
    out
}

/// Independent enumeration by slicing along the last coordinate: an order
/// ideal in N^n is a containment-decreasing chain of order ideals in
/// N^(n-1) whose sizes sum to d.
pub fn enumerate_order_ideals_by_slices(n: usize, d: u64) -> Vec<StaircaseKey> {
    assert!(n >= 1);
    if n == 1 {
        return vec![(0..d).map(|t| vec![t as u32]).collect()];
    }
    let lower: Vec<Vec<StaircaseKey>> = (0..=d).map(|s| enumerate_order_ideals_by_slices(n - 1, s)).collect();
    fn is_subset(a: &StaircaseKey, b: &StaircaseKey) -> bool {
        let set: HashSet<&Vec<u32>> = b.iter().collect();
        a.iter().all(|e| set.contains(e))
    }
    // chain state: accumulated slices, previous slice, boxes left
    fn rec(
        lower: &[Vec<StaircaseKey>],
        chain: &mut Vec<StaircaseKey>,
        prev: Option<&StaircaseKey>,
        remaining: u64,
        collected: &mut Vec<Vec<StaircaseKey>>,
    ) {
        if remaining == 0 {
            collected.push(chain.clone());
            return;
        }
        let cap = match prev {
            None => remaining,
            Some(p) => remaining.min(p.len() as u64),
        };
        for s in (1..=cap).rev() {
            for cand in &lower[s as usize] {
                if let Some(p) = prev {
                    if !is_subset(cand, p) {
                        continue;
                    }
                }
                chain.push(cand.clone());
                rec(lower, chain, Some(cand), remaining - s, collected);
                chain.pop();
            }
        }
    }
    let mut collected = Vec::new();
    let mut chain = Vec::new();
    rec(&lower, &mut chain, None, d, &mut collected);
    let mut out: Vec<StaircaseKey> = Vec::new();
    for slices in collected {
        let mut key: StaircaseKey = Vec::new();
        for (t, slice) in slices.iter().enumerate() {
            for e in slice {
                let mut full = e.clone();
                full.push(t as u32);
                key.push(full);
            }
        }
        key.sort();
        out.push(key);
    }
    out.sort();
    out
}

/// Minimal generators of the monomial ideal whose staircase is `ideal`.
pub fn staircase_to_generators(ideal: &StaircaseKey, n: usize) -> Vec<Monomial> {
    addable_boxes(ideal, n).into_iter().map(Monomial::new).collect()
}

/// Deterministic stream over all monomial submodules of colength d in a
/// rank-r free module over n variables.
pub struct EnumerationStream {
    pub nvars: usize,
    pub rank: usize,
    pub colength: u64,
    items: Vec<MonomialSubmodule>,
    pos: usize,
}

impl Iterator for EnumerationStream {
    type Item = MonomialSubmodule;

    fn next(&mut self) -> Option<MonomialSubmodule> {
        let item = self.items.get(self.pos)?;
        self.pos += 1;
        Some(item.clone())
    }
}

impl EnumerationStream {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[MonomialSubmodule] {
        &self.items
    }
}

/// All monomial ideals of colength d in n variables (rank 1).
pub fn enumerate_monomial_ideals(n: usize, d: u64) -> EnumerationStream {
    let items = enumerate_order_ideals(n, d)
        .into_iter()
        .map(|key| MonomialSubmodule::from_ideals(n, vec![staircase_to_generators(&key, n).into_iter().collect()]))
        .collect();
    EnumerationStream { nvars: n, rank: 1, colength: d, items, pos: 0 }
}

/// All monomial submodules K = I_1 eps_1 + ... + I_r eps_r with
/// sum of colengths d: r-tuples of monomial ideals.
pub fn enumerate_monomial_submodules(n: usize, r: usize, d: u64) -> EnumerationStream {
    assert!(r >= 1);
    let per_size: Vec<Vec<StaircaseKey>> = (0..=d).map(|s| enumerate_order_ideals(n, s)).collect();
    let mut keyed: Vec<(Vec<StaircaseKey>, MonomialSubmodule)> = Vec::new();
    let mut tuple: Vec<StaircaseKey> = Vec::new();
    fn rec(
        per_size: &[Vec<StaircaseKey>],
        n: usize,
        r: usize,
        remaining: u64,
        tuple: &mut Vec<StaircaseKey>,
        keyed: &mut Vec<(Vec<StaircaseKey>, MonomialSubmodule)>,
    ) {
        if tuple.len() == r {
            if remaining == 0 {
                let ideals = tuple
                    .iter()
                    .map(|key| staircase_to_generators(key, n))
                    .collect();
                keyed.push((tuple.clone(), MonomialSubmodule::from_ideals(n, ideals)));
            }
            return;
        }
        let last = tuple.len() + 1 == r;
        for s in 0..=remaining {
            if last && s != remaining {
                continue;
            }
            for key in &per_size[s as usize] {
                tuple.push(key.clone());
                rec(per_size, n, r, remaining - s, tuple, keyed);
                tuple.pop();
            }
        }
    }
    rec(&per_size, n, r, d, &mut tuple, &mut keyed);
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let items = keyed.into_iter().map(|(_, k)| k).collect();
    EnumerationStream { nvars: n, rank: r, colength: d, items, pos: 0 }
}

/// p(0..=dmax): coefficients of prod_k (1 - q^k)^-1.
pub fn partition_numbers(dmax: usize) -> Vec<u64> {
    let mut c = vec![0u64; dmax + 1];
    c[0] = 1;
    for k in 1..=dmax {
        for j in k..=dmax {
            c[j] += c[j - k];
        }
    }
    c
}

/// Plane partition counts: coefficients of prod_k (1 - q^k)^-k.
pub fn macmahon_numbers(dmax: usize) -> Vec<u64> {
    let mut c = vec![0u64; dmax + 1];
    c[0] = 1;
    for k in 1..=dmax {
        for _ in 0..k {
            for j in k..=dmax {
                c[j] += c[j - k];
            }
        }
    }
    c
}

/// Count oracle for order ideals in N^n of size d. Only n in 1..=3 has a
/// trustworthy product formula; larger n must cross-check enumerations
/// against each other instead.
pub fn count_order_ideals(n: usize, d: u64) -> Result<u64> {
    match n {
        1 => Ok(1),
        2 => Ok(partition_numbers(d as usize)[d as usize]),
        3 => Ok(macmahon_numbers(d as usize)[d as usize]),
        _ => Err(Error::UnsupportedCountOracle(n)),
    }
}

/// Rank-r counts by r-fold convolution of the rank-1 counts.
pub fn count_submodules(n: usize, r: usize, d: u64) -> Result<u64> {
    let base: Vec<u64> = (0..=d).map(|s| count_order_ideals(n, s)).collect::<Result<_>>()?;
    let mut acc = vec![0u64; d as usize + 1];
    acc[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u64; d as usize + 1];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in base.iter().enumerate() {
                if i + j <= d as usize {
                    next[i + j] += a * b;
                }
            }
        }
        acc = next;
    }
    Ok(acc[d as usize])
}
