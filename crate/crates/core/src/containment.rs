//! Order-isomorphic subsequence containment and its leveled variants.
//!
//! A sequence `hay` contains `pat` when some subsequence of `hay` is
//! order-isomorphic to `pat` (equal symbols map to equal values, smaller to
//! smaller). The search runs depth-first over pattern positions, carrying the
//! partial map from pattern symbols to values.

use crate::error::{Error, Result};
use crate::seqcore::format_symbols;

/// Longest pattern alphabet the matcher accepts.
pub const MAX_PATTERN_SYMBOLS: usize = 32;

/// Positions (0-based, strictly increasing) of an occurrence of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    /// `positions[i]` is the index in the host of the `i`-th pattern symbol.
    pub positions: Vec<usize>,
}

/// Replace each symbol by its 0-based rank among the distinct symbols.
fn ranks(pat: &[u8]) -> (Vec<u8>, usize) {
    let mut present = [false; 256];
    for &v in pat {
        present[v as usize] = true;
    }
    let mut rank = [0u8; 256];
    let mut d = 0usize;
    for v in 0..256 {
        if present[v] {
            rank[v] = d as u8;
            d += 1;
        }
    }
    (pat.iter().map(|&v| rank[v as usize]).collect(), d)
}

struct Search<'a> {
    hay: &'a [u8],
    pat: &'a [u8],
    d: usize,
    // val[s] = value assigned to rank s, 0 when free
    val: [u8; MAX_PATTERN_SYMBOLS],
    pos: Vec<usize>,
    record: bool,
}

impl Search<'_> {
    #[inline]
    fn fits(&self, s: usize, x: u8) -> bool {
        for t in 0..s {
            let v = self.val[t];
            if v != 0 && v >= x {
                return false;
            }
        }
        for t in s + 1..self.d {
            let v = self.val[t];
            if v != 0 && v <= x {
                return false;
            }
        }
        true
    }

    fn run(&mut self, i: usize, start: usize) -> bool {
        if i == self.pat.len() {
            return true;
        }
        let s = self.pat[i] as usize;
        let last = self.hay.len() + i + 1 - self.pat.len();
        let fixed = self.val[s];
        for j in start..last {
            let x = self.hay[j];
            if fixed != 0 {
                if x != fixed {
                    continue;
                }
                if self.record {
                    self.pos[i] = j;
                }
                if self.run(i + 1, j + 1) {
                    return true;
                }
            } else if self.fits(s, x) {
                self.val[s] = x;
                if self.record {
                    self.pos[i] = j;
                }
                if self.run(i + 1, j + 1) {
                    return true;
                }
                self.val[s] = 0;
            }
        }
        false
    }
}

fn search(hay: &[u8], pat: &[u8], pins: &[(u8, u8)], record: bool) -> Option<Vec<usize>> {
    if pat.len() > hay.len() {
        return None;
    }
    let (r, d) = ranks(pat);
    assert!(d <= MAX_PATTERN_SYMBOLS, "pattern alphabet too large");
    let mut st = Search {
        hay,
        pat: &r,
        d,
        val: [0; MAX_PATTERN_SYMBOLS],
        pos: vec![0; if record { pat.len() } else { 0 }],
        record,
    };
    for &(sym, value) in pins {
        let rank = r[pat.iter().position(|&v| v == sym)?] as usize;
        if !st.fits(rank, value) {
            return None;
        }
        st.val[rank] = value;
    }
    if st.run(0, 0) {
        Some(st.pos)
    } else {
        None
    }
}

/// True iff `hay` has a subsequence order-isomorphic to `pat`. The empty
/// pattern is contained in everything.
pub fn contains(hay: &[u8], pat: &[u8]) -> bool {
    search(hay, pat, &[], false).is_some()
}

/// The leftmost occurrence of `pat` in `hay` (lexicographically smallest
/// position vector), if any.
pub fn find_occurrence(hay: &[u8], pat: &[u8]) -> Option<Occurrence> {
    search(hay, pat, &[], true).map(|positions| Occurrence { positions })
}

/// Containment where the pattern symbol `sym` must be realized by `value`.
pub fn contains_pinned(hay: &[u8], pat: &[u8], sym: u8, value: u8) -> bool {
    search(hay, pat, &[(sym, value)], false).is_some()
}

fn check_123(sigma: &[u8]) -> Result<()> {
    let ok = sigma.iter().all(|&v| (1..=3).contains(&v)) && (1..=3).all(|v| sigma.contains(&v));
    if ok {
        Ok(())
    } else {
        Err(Error::Pattern(format!(
            "`{}` must use exactly the symbols 1, 2 and 3",
            format_symbols(sigma)
        )))
    }
}

/// Leveled containment: some `l < k < h` give a subsequence over `{l, k, h}`
/// order-isomorphic to `sigma`, with the 2s of `sigma` realized by `k`.
pub fn contains_at_level(p: &[u8], sigma: &[u8], k: u8) -> Result<bool> {
    check_123(sigma)?;
    Ok(contains_pinned(p, sigma, 2, k))
}

fn split_123(tau: &[u8]) -> Option<&[u8]> {
    if tau.len() >= 3 && tau[..3] == [1, 2, 3] {
        Some(&tau[3..])
    } else {
        None
    }
}

/// `123S` where `S` has one 1, one 4, 2s otherwise, and the 4 is neither
/// first nor last in `S`.
pub fn is_124_pattern(tau: &[u8]) -> bool {
    let Some(s) = split_123(tau) else { return false };
    let ones = s.iter().filter(|&&v| v == 1).count();
    let fours = s.iter().filter(|&&v| v == 4).count();
    ones == 1
        && fours == 1
        && s.iter().all(|&v| matches!(v, 1 | 2 | 4))
        && s.first() != Some(&4)
        && s.last() != Some(&4)
}

/// `123S` where `S` has one 1, one 4, 3s otherwise, and the 1 is not last in
/// `S`.
pub fn is_134_pattern(tau: &[u8]) -> bool {
    let Some(s) = split_123(tau) else { return false };
    let ones = s.iter().filter(|&&v| v == 1).count();
    let fours = s.iter().filter(|&&v| v == 4).count();
    ones == 1 && fours == 1 && s.iter().all(|&v| matches!(v, 1 | 3 | 4)) && s.last() != Some(&1)
}

/// Containment of a 1-2-4 pattern with its 2s realized by `k`.
pub fn contains_124_at_level(p: &[u8], tau: &[u8], k: u8) -> Result<bool> {
    if !is_124_pattern(tau) {
        return Err(Error::Pattern(format!("`{}` is not a 1-2-4 pattern", format_symbols(tau))));
    }
    Ok(contains_pinned(p, tau, 2, k))
}

/// Containment of a 1-3-4 pattern with its 3s realized by `k`.
pub fn contains_134_at_level(p: &[u8], tau: &[u8], k: u8) -> Result<bool> {
    if !is_134_pattern(tau) {
        return Err(Error::Pattern(format!("`{}` is not a 1-3-4 pattern", format_symbols(tau))));
    }
    Ok(contains_pinned(p, tau, 3, k))
}

/// A pattern compiled for the incremental question asked during enumeration:
/// does appending `v` to a sequence that avoids the pattern create an
/// occurrence? Any new occurrence must use the appended position.
#[derive(Debug, Clone)]
pub struct Matcher {
    ranks: Vec<u8>,
    d: usize,
}

impl Matcher {
    /// Compile `pat`.
    pub fn new(pat: &[u8]) -> Result<Self> {
        let (ranks, d) = ranks(pat);
        if d > MAX_PATTERN_SYMBOLS {
            return Err(Error::Pattern("pattern alphabet too large".into()));
        }
        Ok(Matcher { ranks, d })
    }

    /// Pattern length.
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    /// True for the empty pattern.
    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// True iff `prefix` followed by `v` has an occurrence ending at `v`.
    #[inline]
    pub fn completes(&self, prefix: &[u8], v: u8) -> bool {
        let l = self.ranks.len();
        if l == 0 {
            return true;
        }
        if l - 1 > prefix.len() {
            return false;
        }
        let mut st = Search {
            hay: prefix,
            pat: &self.ranks[..l - 1],
            d: self.d,
            val: [0; MAX_PATTERN_SYMBOLS],
            pos: Vec::new(),
            record: false,
        };
        st.val[self.ranks[l - 1] as usize] = v;
        st.run(0, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::parse_symbols;

    fn s(t: &str) -> Vec<u8> {
        parse_symbols(t).unwrap()
    }

    #[test]
    fn basic_containment() {
        assert!(contains(&s("1231242"), &s("1212")));
        assert!(contains(&s("12121"), &s("1221")));
        assert!(!contains(&s("12112"), &s("1221")));
        assert!(contains(&s("123"), &[]));
        assert!(!contains(&s("12"), &s("123")));
    }

    #[test]
    fn leftmost_occurrence() {
        let occ = find_occurrence(&s("1231242"), &s("1212")).unwrap();
        assert_eq!(occ.positions, vec![0, 1, 3, 4]);
    }

    #[test]
    fn levels() {
        let p = s("1231323142221");
        assert!(contains_at_level(&p, &s("121223"), 3).unwrap());
        assert!(!contains_at_level(&p, &s("121223"), 2).unwrap());
        assert!(!contains_at_level(&p, &s("121223"), 1).unwrap());
        assert!(contains_at_level(&p, &s("1212"), 2).is_err());
    }

    #[test]
    fn pattern_families() {
        assert!(is_124_pattern(&s("1232142")));
        assert!(!is_124_pattern(&s("1232124")));
        assert!(!is_124_pattern(&s("1234212")));
        assert!(is_134_pattern(&s("1233134")));
        assert!(!is_134_pattern(&s("1233341")));
    }

    #[test]
    fn matcher_agrees_with_contains() {
        let m = Matcher::new(&s("1212")).unwrap();
        assert!(m.completes(&s("121"), 2));
        assert!(!m.completes(&s("121"), 1));
        assert!(!m.completes(&s("112"), 3));
    }
}
