//! Tails of `1123`-avoiders and the maps behind the recurrence for `t(n, k)`.
//!
//! A `1123`-avoiding partition with `m` blocks reads `1 2 ... (m-1) S` where
//! `S` is a 123-avoiding sequence with maximum `m`. The rank of a sequence of
//! length `l` and maximum `m` is `l + m - 1`; `T0(n, k)` is the set of
//! 123-avoiding sequences of rank `n` ending with `k`.

use std::fmt;

use crate::containment::contains;
use crate::error::{invariant, Error, Result};
use crate::seqcore::{format_symbols, Partition};

/// A nonempty 123-avoiding sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tail(Vec<u8>);

fn avoids_123(s: &[u8]) -> bool {
    // smallest value seen so far, and smallest value that ends an ascent
    let mut lo = u8::MAX;
    let mut mid = u8::MAX;
    for &v in s {
        if v > mid {
            return false;
        }
        if v > lo {
            mid = mid.min(v);
        }
        lo = lo.min(v);
    }
    true
}

impl Tail {
    /// Validate.
    pub fn new(s: Vec<u8>) -> Result<Self> {
        if s.is_empty() || s.contains(&0) {
            return Err(Error::Precondition("a tail is a nonempty positive sequence".into()));
        }
        if !avoids_123(&s) {
            return Err(Error::Precondition(format!("`{}` contains 123", format_symbols(&s))));
        }
        Ok(Tail(s))
    }

    /// The symbols.
    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Largest symbol.
    pub fn max_symbol(&self) -> u8 {
        *self.0.iter().max().expect("nonempty")
    }

    /// Last symbol.
    pub fn last(&self) -> u8 {
        *self.0.last().expect("nonempty")
    }

    /// `length + max - 1`.
    pub fn rank(&self) -> usize {
        self.0.len() + self.max_symbol() as usize - 1
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Split a `1123`-avoider into its block count and tail.
pub fn tail_decompose(p: &Partition) -> Result<(u8, Tail)> {
    if p.is_empty() {
        return Err(Error::Precondition("the empty partition has no tail".into()));
    }
    if contains(p, &[1, 1, 2, 3]) {
        return Err(Error::Precondition(format!("`{}` contains 1123", format_symbols(p))));
    }
    let m = p.blocks();
    let head = m as usize - 1;
    if p[..head].iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
        return Err(invariant("prefix 12...(m-1)", p.to_string()));
    }
    let t = Tail::new(p[head..].to_vec()).map_err(|e| invariant("tail avoids 123", e.to_string()))?;
    if t.max_symbol() != m {
        return Err(invariant("tail carries the largest block", p.to_string()));
    }
    Ok((m, t))
}

/// `1 2 ... (max-1)` followed by the tail.
pub fn tail_compose(t: &Tail) -> Result<Partition> {
    let mut seq: Vec<u8> = (1..t.max_symbol()).collect();
    seq.extend_from_slice(t.as_slice());
    Partition::new(seq)
}

/// Every 123-avoiding sequence of rank `n`, in lexicographic order.
pub fn tails_of_rank(n: usize) -> Vec<Tail> {
    fn go(len: usize, m: u8, buf: &mut Vec<u8>, lo: u8, mid: u8, out: &mut Vec<Vec<u8>>) {
        if buf.len() == len {
            if buf.iter().copied().max() == Some(m) {
                out.push(buf.clone());
            }
            return;
        }
        for v in 1..=m.min(mid) {
            buf.push(v);
            let nmid = if v > lo { mid.min(v) } else { mid };
            go(len, m, buf, lo.min(v), nmid, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    for len in 1..=n {
        let m = (n + 1 - len) as u8;
        go(len, m, &mut Vec::new(), u8::MAX, u8::MAX, &mut out);
    }
    let mut tails: Vec<Tail> = out.into_iter().map(Tail).collect();
    tails.sort();
    tails
}

/// `T0(n, k)`: the tails of rank `n` ending with `k`.
pub fn tails_ending(n: usize, k: u8) -> Vec<Tail> {
    tails_of_rank(n).into_iter().filter(|t| t.last() == k).collect()
}

// S = S0 1^b k with S0 not ending in 1.
fn split_ones(s: &[u8]) -> (&[u8], usize, u8) {
    let k = *s.last().expect("nonempty");
    let body = &s[..s.len() - 1];
    let b = body.iter().rev().take_while(|&&v| v == 1).count();
    (&body[..body.len() - b], b, k)
}

fn check_end(s: &Tail, k: u8) -> Result<()> {
    if k < 2 {
        return Err(Error::OutOfRange("the tail maps need k >= 2".into()));
    }
    if s.last() != k {
        return Err(Error::Precondition(format!("{s} does not end with {k}")));
    }
    Ok(())
}

/// First branch: `S0 1^b k` with `S0` nonempty and `last(S0) >= k` goes to
/// `S0 (k-1)^b`.
pub fn tail_f1(s: &Tail, k: u8) -> Result<Tail> {
    check_end(s, k)?;
    let (s0, b, _) = split_ones(s.as_slice());
    match s0.last() {
        Some(&x) if x >= k => {
            let mut out = s0.to_vec();
            out.extend(std::iter::repeat(k - 1).take(b));
            Tail::new(out).map_err(|e| invariant("first branch stays 123-avoiding", e.to_string()))
        }
        _ => Err(Error::Precondition(format!("{s} is not in the first branch"))),
    }
}

/// Second branch: `S0 1^b k` with `S0` empty or `last(S0) < k` goes to
/// `(S0 - 1) (k-1)^(b+1)`.
pub fn tail_f2(s: &Tail, k: u8) -> Result<Tail> {
    check_end(s, k)?;
    let (s0, b, _) = split_ones(s.as_slice());
    if matches!(s0.last(), Some(&x) if x >= k) {
        return Err(Error::Precondition(format!("{s} is not in the second branch")));
    }
    if s0.contains(&1) {
        return Err(invariant("second branch has no 1 before the final run", s.to_string()));
    }
    let mut out: Vec<u8> = s0.iter().map(|&v| v - 1).collect();
    out.extend(std::iter::repeat(k - 1).take(b + 1));
    Tail::new(out).map_err(|e| invariant("second branch stays 123-avoiding", e.to_string()))
}

/// The map `T0(n, k) -> union over j >= k-1 of T0(n-1, j)`. For `k >= 2` it is
/// [`tail_f1`] or [`tail_f2`]; for `k = 1` the final 1 is dropped.
pub fn tail_step(s: &Tail) -> Result<Tail> {
    if s.rank() < 2 {
        return Err(Error::OutOfRange("rank 1 has no predecessor".into()));
    }
    let k = s.last();
    if k == 1 {
        return Tail::new(s.as_slice()[..s.as_slice().len() - 1].to_vec());
    }
    let (s0, _, _) = split_ones(s.as_slice());
    match s0.last() {
        Some(&x) if x >= k => tail_f1(s, k),
        _ => tail_f2(s, k),
    }
}

/// Inverse of [`tail_step`]: the tail ending with `k` that maps to `s`.
/// Needs `last(s) >= k - 1`.
pub fn tail_step_inverse(s: &Tail, k: u8) -> Result<Tail> {
    if k == 0 || (s.last() as usize) + 1 < k as usize {
        return Err(Error::Precondition(format!("{s} does not end with at least {}", k.saturating_sub(1))));
    }
    let v = s.as_slice();
    if k == 1 {
        let mut out = v.to_vec();
        out.push(1);
        return Tail::new(out);
    }
    let c = v.iter().rev().take_while(|&&x| x == k - 1).count();
    let s0 = &v[..v.len() - c];
    let mut out: Vec<u8>;
    match s0.last() {
        Some(&x) if x >= k => {
            out = s0.to_vec();
            out.extend(std::iter::repeat(1).take(c));
        }
        _ => {
            if c == 0 {
                return Err(invariant("second branch image ends with k-1", s.to_string()));
            }
            out = s0.iter().map(|&x| x + 1).collect();
            out.extend(std::iter::repeat(1).take(c - 1));
        }
    }
    out.push(k);
    Tail::new(out).map_err(|e| invariant("inverse stays 123-avoiding", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tail(v: &[u8]) -> Tail {
        Tail::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rank_three() {
        let r3: Vec<String> = tails_of_rank(3).iter().map(|t| t.to_string()).collect();
        assert_eq!(r3, ["(1,1,1)", "(1,2)", "(2,1)", "(2,2)", "(3)"]);
        assert_eq!(tails_of_rank(4).len(), 14);
    }

    #[test]
    fn branches() {
        // (3,1,2): S0 = (3), b = 1, k = 2 -> (3,1)
        assert_eq!(tail_f1(&tail(&[3, 1, 2]), 2).unwrap(), tail(&[3, 1]));
        assert_eq!(tail_f2(&tail(&[2, 3]), 3).unwrap(), tail(&[1, 2]));
        assert!(tail_f1(&tail(&[1, 1]), 1).is_err());
        assert_eq!(tail_step_inverse(&tail(&[1, 2]), 3).unwrap(), tail(&[2, 3]));
    }

    #[test]
    fn decompose() {
        let p: Partition = "1232".parse().unwrap();
        let (m, t) = tail_decompose(&p).unwrap();
        assert_eq!((m, t.as_slice()), (3, &[3u8, 2][..]));
        assert_eq!(tail_compose(&t).unwrap(), p);
    }
}
