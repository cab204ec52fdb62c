//! Chunk decomposition and the block-size preserving map from
//! `1^k 2 1^(m-k)`-avoiders to `1^m 2`-avoiders.
//!
//! A partition is written `1 P_1 1 P_2 ... 1 P_p`, where the chunks `P_i` are
//! the maximal runs without the symbol 1. Concatenating the chunks and
//! lowering every symbol by one gives `π⁻`, the partition with the first block
//! removed.

use crate::containment::contains;
use crate::error::{invariant, Error, Result};
use crate::seqcore::{format_symbols, Partition};

/// A partition split at its 1s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chunks {
    /// `P_1, ..., P_p` with their original symbols (all at least 2).
    pub chunks: Vec<Vec<u8>>,
    /// The partition with the block of 1 removed.
    pub rest: Partition,
}

/// Split `p` into its chunks. The empty partition has no chunks.
pub fn chunk_decompose(p: &Partition) -> Chunks {
    let mut chunks: Vec<Vec<u8>> = Vec::new();
    for &v in p.iter() {
        if v == 1 {
            chunks.push(Vec::new());
        } else {
            chunks.last_mut().expect("canonical sequences start with 1").push(v);
        }
    }
    Chunks { chunks, rest: p.remove_first_block() }
}

/// Inverse of [`chunk_decompose`]: `1 P_1 1 P_2 ... 1 P_p`.
pub fn chunk_compose(chunks: &[Vec<u8>]) -> Result<Partition> {
    let mut seq = Vec::new();
    for c in chunks {
        seq.push(1);
        seq.extend_from_slice(c);
    }
    Partition::new(seq)
}

/// `1^r 2 1^s`.
pub fn binary_pattern(r: usize, s: usize) -> Vec<u8> {
    let mut v = vec![1u8; r];
    v.push(2);
    v.extend(std::iter::repeat(1).take(s));
    v
}

/// The chunk criterion for avoiding `1^r 2 1^s` (`r >= 1`): `π⁻` avoids the
/// pattern and the chunks `P_r, ..., P_(p-s)` are all empty.
pub fn chunk_criterion(p: &Partition, r: usize, s: usize) -> bool {
    let d = chunk_decompose(p);
    let np = d.chunks.len();
    let pat = binary_pattern(r, s);
    let middle_empty = (r..=np.saturating_sub(s))
        .filter(|&i| i >= 1 && i <= np)
        .all(|i| d.chunks[i - 1].is_empty());
    middle_empty && !contains(&d.rest, &pat)
}

fn check_km(k: usize, m: usize) -> Result<()> {
    if k == 0 || k >= m {
        return Err(Error::OutOfRange(format!("need 1 <= k < m, got k = {k}, m = {m}")));
    }
    if m > 250 {
        return Err(Error::OutOfRange(format!("m = {m} too large")));
    }
    Ok(())
}

fn split_by(seq: &[u8], lens: &[usize]) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(lens.len());
    let mut at = 0;
    for &l in lens {
        out.push(seq[at..at + l].to_vec());
        at += l;
    }
    out
}

fn raise(s: &[u8]) -> Vec<u8> {
    s.iter().map(|&v| v + 1).collect()
}

fn forward(p: &Partition, k: usize, m: usize) -> Result<Partition> {
    if p.blocks() <= 1 {
        return Ok(p.clone());
    }
    let d = chunk_decompose(p);
    let np = d.chunks.len();
    let inner = forward(&d.rest, k, m)?;
    let lens: Vec<usize> = d.chunks.iter().map(Vec::len).collect();
    let s = split_by(&raise(&inner), &lens);
    let q: Vec<Vec<u8>> = if np < m {
        s
    } else {
        // S_k .. S_(p-m+k) must be empty
        if let Some(i) = (k..=np - m + k).find(|&i| !s[i - 1].is_empty()) {
            return Err(invariant(
                "chunk criterion",
                format!("chunk {i} of `{}` is not empty", format_symbols(p)),
            ));
        }
        let mut q: Vec<Vec<u8>> = s[..k - 1].to_vec();
        q.extend(s[np - m + k..].iter().cloned());
        q.resize(np, Vec::new());
        q
    };
    chunk_compose(&q)
}

fn backward(p: &Partition, k: usize, m: usize) -> Result<Partition> {
    if p.blocks() <= 1 {
        return Ok(p.clone());
    }
    let d = chunk_decompose(p);
    let np = d.chunks.len();
    let inner = backward(&d.rest, k, m)?;
    let q = &d.chunks;
    let s: Vec<Vec<u8>> = if np < m {
        q.clone()
    } else {
        if let Some(i) = (m..=np).find(|&i| !q[i - 1].is_empty()) {
            return Err(invariant(
                "chunk criterion",
                format!("chunk {i} of `{}` is not empty", format_symbols(p)),
            ));
        }
        let mut s = vec![Vec::new(); np];
        s[..k - 1].clone_from_slice(&q[..k - 1]);
        for j in 1..=m - k {
            s[np - m + k + j - 1] = q[k + j - 2].clone();
        }
        s
    };
    let lens: Vec<usize> = s.iter().map(Vec::len).collect();
    chunk_compose(&split_by(&raise(&inner), &lens))
}

/// The map from `1^k 2 1^(m-k)`-avoiders onto `1^m 2`-avoiders of the same
/// size. Recurses on `π⁻`; keeps the size of every block.
pub fn thm12_map(p: &Partition, k: usize, m: usize) -> Result<Partition> {
    check_km(k, m)?;
    let src = binary_pattern(k, m - k);
    if contains(p, &src) {
        return Err(Error::Precondition(format!(
            "`{}` contains {}",
            format_symbols(p),
            format_symbols(&src)
        )));
    }
    let out = forward(p, k, m)?;
    debug_assert!(!contains(&out, &binary_pattern(m, 0)));
    Ok(out)
}

/// Inverse of [`thm12_map`].
pub fn thm12_inverse(p: &Partition, k: usize, m: usize) -> Result<Partition> {
    check_km(k, m)?;
    let tgt = binary_pattern(m, 0);
    if contains(p, &tgt) {
        return Err(Error::Precondition(format!(
            "`{}` contains {}",
            format_symbols(p),
            format_symbols(&tgt)
        )));
    }
    backward(p, k, m)
}

/// Sorted block sizes.
pub fn block_sizes(p: &Partition) -> Vec<usize> {
    let mut v: Vec<usize> = p.blocks_of().iter().map(Vec::len).collect();
    v.sort_unstable();
    v
}
