//! Counting pattern-avoiding partitions.
//!
//! Canonical sequences are generated depth-first. A prefix that contains the
//! pattern is never extended, and since every extension of an avoiding prefix
//! can only create occurrences through its new last symbol, each child is
//! tested with [`Matcher::completes`] instead of a full containment search.
//! One walk to depth `N` yields the counts for every `n <= N`.
//!
//! The tree is cut at a fixed prefix depth and the subtrees are counted in
//! parallel with rayon; partial tables are summed, so results do not depend
//! on scheduling.

use rayon::prelude::*;

use crate::containment::{contains, Matcher};
use crate::error::{Error, Result};
use crate::seqcore::{format_symbols, iterate_partitions, validate_partition, Partition};

/// Largest `n` the engine walks to.
pub const MAX_N: usize = 64;

/// Default depth at which the generation tree is split into parallel jobs.
pub const SHARD_DEPTH: usize = 4;

/// Avoider counts of one pattern for `n = 0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    /// The pattern (canonical sequence).
    pub pattern: Vec<u8>,
    /// `counts[n] = p(n; pattern)`.
    pub counts: Vec<u64>,
    /// `by_blocks[n][m]` = avoiders of `[n]` with exactly `m` blocks, when
    /// requested.
    pub by_blocks: Option<Vec<Vec<u64>>>,
}

impl CountTable {
    /// Largest `n` in the table.
    pub fn max_n(&self) -> usize {
        self.counts.len() - 1
    }
}

struct Walk<'a> {
    m: &'a Matcher,
    pattern: &'a [u8],
    max_n: usize,
    seq: [u8; MAX_N],
    counts: Vec<u64>,
    blocks: Option<Vec<Vec<u64>>>,
    overflow: bool,
    // children found at depth `collect_at` are recorded instead of expanded
    collect_at: usize,
    collected: Vec<(Vec<u8>, u8)>,
}

impl<'a> Walk<'a> {
    fn new(
        m: &'a Matcher,
        pattern: &'a [u8],
        max_n: usize,
        by_blocks: bool,
        collect_at: usize,
    ) -> Self {
        Walk {
            m,
            pattern,
            max_n,
            seq: [0; MAX_N],
            counts: vec![0; max_n + 1],
            blocks: by_blocks.then(|| vec![vec![0; max_n + 1]; max_n + 1]),
            overflow: false,
            collect_at,
            collected: Vec::new(),
        }
    }

    #[inline]
    fn bump(&mut self, len: usize, blocks: u8) {
        match self.counts[len].checked_add(1) {
            Some(c) => self.counts[len] = c,
            None => self.overflow = true,
        }
        if let Some(b) = self.blocks.as_mut() {
            b[len][blocks as usize] += 1;
        }
    }

    fn go(&mut self, len: usize, max: u8) {
        for v in 1..=max + 1 {
            if self.m.completes(&self.seq[..len], v) {
                continue;
            }
            if cfg!(debug_assertions) && len < 7 {
                let mut full = self.seq[..len].to_vec();
                full.push(v);
                debug_assert!(!contains(&full, self.pattern));
            }
            let nl = len + 1;
            let nm = max.max(v);
            self.bump(nl, nm);
            if nl < self.max_n {
                self.seq[len] = v;
                if nl == self.collect_at {
                    self.collected.push((self.seq[..nl].to_vec(), nm));
                } else {
                    self.go(nl, nm);
                }
            }
        }
    }
}

fn add_into(acc: &mut CountTable, part: &Walk<'_>) -> Result<()> {
    for (a, b) in acc.counts.iter_mut().zip(&part.counts) {
        *a = a.checked_add(*b).ok_or(Error::Overflow("avoider count"))?;
    }
    if let (Some(acc_b), Some(part_b)) = (acc.by_blocks.as_mut(), part.blocks.as_ref()) {
        for (ra, rb) in acc_b.iter_mut().zip(part_b) {
            for (a, b) in ra.iter_mut().zip(rb) {
                *a = a.checked_add(*b).ok_or(Error::Overflow("block-refined count"))?;
            }
        }
    }
    Ok(())
}

fn check_pattern(pattern: &[u8]) -> Result<()> {
    if validate_partition(pattern) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "pattern `{}` is not a canonical sequence",
            format_symbols(pattern)
        )))
    }
}

/// Count the avoiders of `pattern` for every `n <= max_n`, optionally refined
/// by number of blocks, splitting the walk at depth `shard_depth`.
pub fn count_table_sharded(
    pattern: &[u8],
    max_n: usize,
    by_blocks: bool,
    shard_depth: usize,
) -> Result<CountTable> {
    check_pattern(pattern)?;
    if max_n >= MAX_N {
        return Err(Error::OutOfRange(format!("n = {max_n} exceeds {}", MAX_N - 1)));
    }
    let mut table = CountTable {
        pattern: pattern.to_vec(),
        counts: vec![0; max_n + 1],
        by_blocks: by_blocks.then(|| vec![vec![0; max_n + 1]; max_n + 1]),
    };
    if pattern.is_empty() {
        return Ok(table);
    }
    table.counts[0] = 1;
    if let Some(b) = table.by_blocks.as_mut() {
        b[0][0] = 1;
    }
    if max_n == 0 {
        return Ok(table);
    }
    let matcher = Matcher::new(pattern)?;
    let depth = shard_depth.clamp(1, max_n);
    let mut top = Walk::new(&matcher, pattern, max_n, by_blocks, depth);
    top.go(0, 0);
    if top.overflow {
        return Err(Error::Overflow("avoider count"));
    }
    add_into(&mut table, &top)?;
    let jobs = std::mem::take(&mut top.collected);
    let parts: Vec<Result<CountTable>> = jobs
        .par_iter()
        .map(|(prefix, max)| {
            let mut w = Walk::new(&matcher, pattern, max_n, by_blocks, usize::MAX);
            w.seq[..prefix.len()].copy_from_slice(prefix);
            w.go(prefix.len(), *max);
            if w.overflow {
                return Err(Error::Overflow("avoider count"));
            }
            let mut t = CountTable {
                pattern: Vec::new(),
                counts: vec![0; max_n + 1],
                by_blocks: by_blocks.then(|| vec![vec![0; max_n + 1]; max_n + 1]),
            };
            add_into(&mut t, &w)?;
            Ok(t)
        })
        .collect();
    for part in parts {
        let part = part?;
        for (a, b) in table.counts.iter_mut().zip(&part.counts) {
            *a = a.checked_add(*b).ok_or(Error::Overflow("avoider count"))?;
        }
        if let (Some(acc), Some(pb)) = (table.by_blocks.as_mut(), part.by_blocks.as_ref()) {
            for (ra, rb) in acc.iter_mut().zip(pb) {
                for (a, b) in ra.iter_mut().zip(rb) {
                    *a = a.checked_add(*b).ok_or(Error::Overflow("block-refined count"))?;
                }
            }
        }
    }
    Ok(table)
}

/// [`count_table_sharded`] with the default shard depth.
pub fn count_table(pattern: &[u8], max_n: usize, by_blocks: bool) -> Result<CountTable> {
    count_table_sharded(pattern, max_n, by_blocks, SHARD_DEPTH)
}

/// `p(n; pattern)`.
pub fn count_avoiders(pattern: &[u8], n: usize) -> Result<u64> {
    Ok(count_table(pattern, n, false)?.counts[n])
}

/// Avoiders of `pattern` in `[n]` by number of blocks; entry `m` counts
/// partitions with `m` blocks.
pub fn count_avoiders_by_blocks(pattern: &[u8], n: usize) -> Result<Vec<u64>> {
    let t = count_table(pattern, n, true)?;
    Ok(t.by_blocks.expect("requested")[n].clone())
}

/// `p(n; pattern)` for `n` in `from..=to`.
pub fn count_vector(pattern: &[u8], from: usize, to: usize) -> Result<Vec<u64>> {
    if from > to {
        return Ok(Vec::new());
    }
    Ok(count_table(pattern, to, false)?.counts[from..=to].to_vec())
}

/// Reference count: generate every partition of `[n]` and filter.
pub fn count_by_filter(pattern: &[u8], n: usize) -> u64 {
    iterate_partitions(n).filter(|p| !contains(p, pattern)).count() as u64
}

/// One equivalence class found by [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternClass {
    /// `p(n; σ)` for `n = size+1 ..= horizon`, shared by every member.
    pub counts: Vec<u64>,
    /// Members in lexicographic order.
    pub members: Vec<Partition>,
}

/// Patterns of one size grouped by their count vectors. Members of a class
/// agree up to the horizon; that is all the report claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    /// Pattern length.
    pub size: usize,
    /// Largest `n` compared.
    pub horizon: usize,
    /// Classes ordered by their lexicographically first member.
    pub classes: Vec<PatternClass>,
}

/// Group all canonical patterns of length `size` by `p(size+1 ..= horizon)`.
pub fn classify(size: usize, horizon: usize) -> Result<ClassReport> {
    if horizon < size {
        return Err(Error::OutOfRange(format!("horizon {horizon} below size {size}")));
    }
    let patterns: Vec<Partition> = iterate_partitions(size).collect();
    let mut classes: Vec<PatternClass> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for p in patterns {
        let counts = count_vector(&p, size + 1, horizon)?;
        match index.get(&counts) {
            Some(&i) => {
                let c: &mut PatternClass = &mut classes[i];
                c.members.push(p);
            }
            None => {
                index.insert(counts.clone(), classes.len());
                classes.push(PatternClass { counts, members: vec![p] });
            }
        }
    }
    Ok(ClassReport { size, horizon, classes })
}

/// Least `n <= max_n` with `p(n; a) != p(n; b)`.
pub fn witness(a: &[u8], b: &[u8], max_n: usize) -> Result<Option<usize>> {
    let mut cap = max_n.min(8);
    loop {
        let ta = count_table(a, cap, false)?;
        let tb = count_table(b, cap, false)?;
        if let Some(n) = (0..=cap).find(|&n| ta.counts[n] != tb.counts[n]) {
            return Ok(Some(n));
        }
        if cap == max_n {
            return Ok(None);
        }
        cap = (cap + 2).min(max_n);
    }
}
