//! Symbol sequences, canonical sequences (restricted growth strings) and the
//! elementary transforms on them.
//!
//! Symbols are 1-based `u8` values. A partition of `[n]` is stored as its
//! canonical sequence: position `i` holds the index of the block containing
//! `i`, and blocks are numbered by their smallest element.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Parse a sequence written either as concatenated digits (`12112`) or as
/// comma-separated decimals (`1,2,11,3`). Whitespace is ignored.
pub fn parse_symbols(text: &str) -> Result<Vec<u8>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if t.contains(',') {
        for part in t.split(',').filter(|p| !p.is_empty()) {
            let v: u8 = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad symbol `{part}` in `{text}`")))?;
            out.push(v);
        }
    } else {
        for c in t.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("bad character `{c}` in `{text}`")))?;
            out.push(d as u8);
        }
    }
    if out.iter().any(|&v| v == 0) {
        return Err(Error::Parse(format!("symbols must be positive in `{text}`")));
    }
    Ok(out)
}

/// Compact text form: digits when every symbol is at most 9, otherwise
/// comma-separated (a lone symbol gets a trailing comma, `10,`).
pub fn format_symbols(s: &[u8]) -> String {
    if s.iter().all(|&v| v <= 9) {
        s.iter().map(|v| char::from(b'0' + v)).collect()
    } else if s.len() == 1 {
        format!("{},", s[0])
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// A finite sequence of positive symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SymbolSeq(Vec<u8>);

impl SymbolSeq {
    /// Wrap a vector, rejecting zero symbols.
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if symbols.contains(&0) {
            return Err(Error::Precondition("symbols must be positive".into()));
        }
        Ok(SymbolSeq(symbols))
    }

    /// Largest symbol, 0 for the empty sequence.
    pub fn max_symbol(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The underlying symbols.
    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Consume into the underlying vector.
    pub fn into_vec(self) -> Vec<u8> {
        self.0
    }
}

impl Deref for SymbolSeq {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl FromStr for SymbolSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SymbolSeq::new(parse_symbols(s)?)
    }
}

impl fmt::Display for SymbolSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.0))
    }
}

/// True iff `s` is a canonical sequence: every value of `[max]` occurs and
/// first occurrences appear in increasing order.
pub fn validate_partition(s: &[u8]) -> bool {
    let mut max = 0u8;
    for &v in s {
        if v == 0 || v > max.saturating_add(1) {
            return false;
        }
        max = max.max(v);
    }
    true
}

/// Relabel the values of `s` by order of first occurrence.
pub fn canonical_form(s: &[u8]) -> Vec<u8> {
    let mut label = [0u8; 256];
    let mut next = 0u8;
    s.iter()
        .map(|&v| {
            if label[v as usize] == 0 {
                next += 1;
                label[v as usize] = next;
            }
            label[v as usize]
        })
        .collect()
}

/// A set partition of `[n]` stored as its canonical sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    seq: Vec<u8>,
    blocks: u8,
}

impl Partition {
    /// Validate and wrap a canonical sequence.
    pub fn new(seq: Vec<u8>) -> Result<Self> {
        if !validate_partition(&seq) {
            return Err(Error::Precondition(format!(
                "`{}` is not a canonical sequence",
                format_symbols(&seq)
            )));
        }
        let blocks = seq.iter().copied().max().unwrap_or(0);
        Ok(Partition { seq, blocks })
    }

    pub(crate) fn from_canonical(seq: Vec<u8>) -> Self {
        debug_assert!(validate_partition(&seq));
        let blocks = seq.iter().copied().max().unwrap_or(0);
        Partition { seq, blocks }
    }

    /// Canonical sequence.
    pub fn as_slice(&self) -> &[u8] {
        &self.seq
    }

    /// Size of the ground set.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Number of blocks `m`.
    pub fn blocks(&self) -> u8 {
        self.blocks
    }

    /// Consume into the canonical sequence.
    pub fn into_vec(self) -> Vec<u8> {
        self.seq
    }

    /// The blocks as lists of 1-based positions, ordered by smallest element.
    pub fn blocks_of(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks as usize];
        for (i, &v) in self.seq.iter().enumerate() {
            out[v as usize - 1].push(i + 1);
        }
        out
    }

    /// Erase the block containing 1 and decrease every other symbol.
    pub fn remove_first_block(&self) -> Partition {
        let seq: Vec<u8> = self.seq.iter().filter(|&&v| v != 1).map(|&v| v - 1).collect();
        Partition::from_canonical(seq)
    }
}

impl Deref for Partition {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.seq
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_symbols(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.seq))
    }
}

/// Lexicographic stream of all canonical sequences of a given length.
#[derive(Debug, Clone)]
pub struct Partitions {
    cur: Vec<u8>,
    // prefix maxima: pmax[i] = max(cur[..i]); pmax[0] = 0
    pmax: Vec<u8>,
    done: bool,
}

impl Partitions {
    /// Stream of the partitions of `[n]`.
    pub fn new(n: usize) -> Self {
        let mut pmax = vec![1; n];
        if n > 0 {
            pmax[0] = 0;
        }
        Partitions { cur: vec![1; n], pmax, done: false }
    }

    fn advance(&mut self) {
        let n = self.cur.len();
        for i in (1..n).rev() {
            if self.cur[i] <= self.pmax[i] {
                self.cur[i] += 1;
                let m = self.pmax[i].max(self.cur[i]);
                for j in i + 1..n {
                    self.cur[j] = 1;
                    self.pmax[j] = m;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = Partition;
    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_canonical(self.cur.clone());
        self.advance();
        Some(out)
    }
}

/// All partitions of `[n]` in lexicographic order of canonical sequences.
pub fn iterate_partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// First occurrence (0-based) of each symbol `1..=m`; `usize::MAX` if absent.
pub fn first_occurrences(s: &[u8], m: u8) -> Vec<usize> {
    let mut f = vec![usize::MAX; m as usize + 1];
    for (i, &v) in s.iter().enumerate().rev() {
        if (v as usize) < f.len() {
            f[v as usize] = i;
        }
    }
    f
}

/// Last occurrence (0-based) of each symbol `1..=m`; `usize::MAX` if absent.
pub fn last_occurrences(s: &[u8], m: u8) -> Vec<usize> {
    let mut l = vec![usize::MAX; m as usize + 1];
    for (i, &v) in s.iter().enumerate() {
        if (v as usize) < l.len() {
            l[v as usize] = i;
        }
    }
    l
}

/// True iff `s` is a `k`-semicanonical sequence over `[m]`: every symbol of
/// `[m]` occurs, symbols below `k` are ordered by first occurrence against all
/// larger symbols, and symbols from `k` up are ordered by last occurrence.
pub fn is_k_semicanonical(s: &[u8], m: u8, k: u8) -> bool {
    if s.iter().any(|&v| v == 0 || v > m) {
        return false;
    }
    let f = first_occurrences(s, m);
    let l = last_occurrences(s, m);
    if (1..=m as usize).any(|i| f[i] == usize::MAX) {
        return false;
    }
    // suffix minimum of first occurrences
    let mut min_above = usize::MAX;
    for i in (1..=m as usize).rev() {
        if i < k as usize && f[i] > min_above {
            return false;
        }
        min_above = min_above.min(f[i]);
    }
    (k.max(1) as usize..m as usize).all(|i| l[i] < l[i + 1])
}

/// A `k`-semicanonical sequence over `[m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KSeq {
    seq: Vec<u8>,
    m: u8,
    k: u8,
}

impl KSeq {
    /// Validate and wrap.
    pub fn new(seq: Vec<u8>, m: u8, k: u8) -> Result<Self> {
        if k == 0 || k > m.max(1) {
            return Err(Error::OutOfRange(format!("level {k} not in [1, {m}]")));
        }
        if !is_k_semicanonical(&seq, m, k) {
            return Err(Error::Precondition(format!(
                "`{}` is not {k}-semicanonical over [{m}]",
                format_symbols(&seq)
            )));
        }
        Ok(KSeq { seq, m, k })
    }

    /// The symbols.
    pub fn as_slice(&self) -> &[u8] {
        &self.seq
    }

    /// Alphabet size.
    pub fn m(&self) -> u8 {
        self.m
    }

    /// Level.
    pub fn k(&self) -> u8 {
        self.k
    }

    /// Consume into the symbols.
    pub fn into_vec(self) -> Vec<u8> {
        self.seq
    }
}

/// The unique `k`-sequence with the same block structure as `p`: blocks below
/// `k` keep their numbers, the others are renumbered by largest element.
pub fn to_k_sequence(p: &Partition, k: u8) -> Result<KSeq> {
    let m = p.blocks();
    if k == 0 || k > m.max(1) {
        return Err(Error::OutOfRange(format!("level {k} not in [1, {m}]")));
    }
    if p.is_empty() {
        return Ok(KSeq { seq: Vec::new(), m: 0, k });
    }
    let l = last_occurrences(p, m);
    let mut high: Vec<u8> = (k..=m).collect();
    high.sort_by_key(|&v| l[v as usize]);
    let mut relabel: Vec<u8> = (0..=m).collect();
    for (i, &v) in high.iter().enumerate() {
        relabel[v as usize] = k + i as u8;
    }
    let seq = p.iter().map(|&v| relabel[v as usize]).collect();
    Ok(KSeq { seq, m, k })
}

/// Inverse of [`to_k_sequence`].
pub fn from_k_sequence(s: &KSeq) -> Partition {
    Partition::from_canonical(canonical_form(&s.seq))
}

/// Reverse the sequence and replace each symbol `i` by `m + 1 - i`.
pub fn reverse_complement(s: &[u8], m: u8) -> Result<Vec<u8>> {
    if let Some(&bad) = s.iter().find(|&&v| v == 0 || v > m) {
        return Err(Error::OutOfRange(format!("symbol {bad} not in [1, {m}]")));
    }
    Ok(s.iter().rev().map(|&v| m + 1 - v).collect())
}
