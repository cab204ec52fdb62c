//! Landscapes of a partition around a level `k`, and shuffles between
//! compatible landscape words.
//!
//! Symbols below `k` are low, symbols above `k` are high. Every maximal run of
//! low (high) symbols is a cluster, written `L` (`H`); the symbol `k` itself
//! is kept as `K`.

use std::fmt;

use crate::error::{invariant, Error, Result};
use crate::seqcore::{format_symbols, Partition};

/// One letter of a landscape word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// A low cluster.
    L,
    /// The level symbol.
    K,
    /// A high cluster.
    H,
}

/// A word over `{L, K, H}` that starts with `L K` and has no `LL` or `HH`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LandscapeWord {
    letters: Vec<Letter>,
    k: u8,
}

/// True iff `w` starts with `L K` and has no two adjacent `L` or `H`.
pub fn is_landscape_word(w: &[Letter]) -> bool {
    w.len() >= 2
        && w[0] == Letter::L
        && w[1] == Letter::K
        && w.windows(2).all(|p| !(p[0] == p[1] && p[0] != Letter::K))
}

impl LandscapeWord {
    /// Validate a word at level `k`.
    pub fn new(letters: Vec<Letter>, k: u8) -> Result<Self> {
        if !is_landscape_word(&letters) {
            return Err(Error::Precondition(format!(
                "`{}` is not a landscape word",
                render(&letters, k)
            )));
        }
        Ok(LandscapeWord { letters, k })
    }

    /// Parse text such as `L3L3LHL` (the level digits may also be written `K`).
    pub fn parse(text: &str, k: u8) -> Result<Self> {
        let ks = k.to_string();
        let mut letters = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('L') {
                letters.push(Letter::L);
                rest = r;
            } else if let Some(r) = rest.strip_prefix('H') {
                letters.push(Letter::H);
                rest = r;
            } else if let Some(r) = rest.strip_prefix('K') {
                letters.push(Letter::K);
                rest = r;
            } else if let Some(r) = rest.strip_prefix(ks.as_str()) {
                letters.push(Letter::K);
                rest = r;
            } else {
                return Err(Error::Parse(format!("bad landscape letter in `{text}`")));
            }
        }
        Self::new(letters, k)
    }

    /// The letters.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The level.
    pub fn level(&self) -> u8 {
        self.k
    }

    /// Number of `L`, `K` and `H` letters.
    pub fn counts(&self) -> (usize, usize, usize) {
        letter_counts(&self.letters)
    }

    /// Same number of each letter.
    pub fn compatible(&self, other: &LandscapeWord) -> bool {
        self.k == other.k && self.counts() == other.counts()
    }

    /// Compatible, and the `i`-th and `j`-th `H` are separated by an `L` in
    /// one word exactly when they are in the other.
    pub fn h_compatible(&self, other: &LandscapeWord) -> bool {
        self.compatible(other)
            && separation(&self.letters, Letter::H) == separation(&other.letters, Letter::H)
    }

    /// The mirror notion of [`h_compatible`](Self::h_compatible) for `L`.
    pub fn l_compatible(&self, other: &LandscapeWord) -> bool {
        self.compatible(other)
            && separation(&self.letters, Letter::L) == separation(&other.letters, Letter::L)
    }
}

fn letter_counts(w: &[Letter]) -> (usize, usize, usize) {
    let c = |x| w.iter().filter(|&&l| l == x).count();
    (c(Letter::L), c(Letter::K), c(Letter::H))
}

// Two occurrences of `x` are separated when the other cluster letter lies
// between them; since separation is monotone along the word, recording
// between which consecutive occurrences it happens describes every pair.
fn separation(w: &[Letter], x: Letter) -> Vec<bool> {
    let other = if x == Letter::H { Letter::L } else { Letter::H };
    let mut out = Vec::new();
    let mut seen_x = false;
    let mut sep = false;
    for &l in w {
        if l == x {
            if seen_x {
                out.push(sep);
            }
            seen_x = true;
            sep = false;
        } else if l == other {
            sep = true;
        }
    }
    out
}

fn render(w: &[Letter], k: u8) -> String {
    w.iter()
        .map(|l| match l {
            Letter::L => "L".to_string(),
            Letter::H => "H".to_string(),
            Letter::K => k.to_string(),
        })
        .collect()
}

impl fmt::Display for LandscapeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.letters, self.k))
    }
}

/// A partition cut into its clusters around level `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clusters {
    /// The landscape.
    pub word: LandscapeWord,
    /// Low clusters, left to right.
    pub low: Vec<Vec<u8>>,
    /// High clusters, left to right.
    pub high: Vec<Vec<u8>>,
}

impl Clusters {
    /// Reassemble the sequence described by `word` from the clusters.
    pub fn assemble(&self, word: &LandscapeWord) -> Result<Vec<u8>> {
        if !self.word.compatible(word) {
            return Err(Error::Precondition(format!(
                "`{}` is not compatible with `{}`",
                word, self.word
            )));
        }
        let (mut li, mut hi) = (0, 0);
        let mut out = Vec::new();
        for l in word.letters() {
            match l {
                Letter::L => {
                    out.extend_from_slice(&self.low[li]);
                    li += 1;
                }
                Letter::H => {
                    out.extend_from_slice(&self.high[hi]);
                    hi += 1;
                }
                Letter::K => out.push(self.word.k),
            }
        }
        Ok(out)
    }
}

/// Clusters and landscape of `p` at level `k`. Needs `2 <= k <= blocks`.
pub fn clusters(p: &Partition, k: u8) -> Result<Clusters> {
    if k < 2 || k > p.blocks() {
        return Err(Error::OutOfRange(format!(
            "level {k} not in [2, {}] for `{}`",
            p.blocks(),
            format_symbols(p)
        )));
    }
    let mut letters = Vec::new();
    let mut low: Vec<Vec<u8>> = Vec::new();
    let mut high: Vec<Vec<u8>> = Vec::new();
    for &v in p.iter() {
        let l = match v.cmp(&k) {
            std::cmp::Ordering::Less => Letter::L,
            std::cmp::Ordering::Equal => Letter::K,
            std::cmp::Ordering::Greater => Letter::H,
        };
        let extends = letters.last() == Some(&l) && l != Letter::K;
        match (l, extends) {
            (Letter::L, true) => low.last_mut().expect("open cluster").push(v),
            (Letter::H, true) => high.last_mut().expect("open cluster").push(v),
            (Letter::L, false) => {
                low.push(vec![v]);
                letters.push(l);
            }
            (Letter::H, false) => {
                high.push(vec![v]);
                letters.push(l);
            }
            (Letter::K, _) => letters.push(l),
        }
    }
    let word = LandscapeWord::new(letters, k)
        .map_err(|e| invariant("landscape of a partition", e.to_string()))?;
    Ok(Clusters { word, low, high })
}

/// The `k`-landscape of `p`.
pub fn landscape(p: &Partition, k: u8) -> Result<LandscapeWord> {
    Ok(clusters(p, k)?.word)
}

/// The `k`-shuffle of `p` to a compatible word: low clusters keep their order,
/// high clusters keep theirs, and both are laid out along `target`.
pub fn shuffle(p: &Partition, target: &LandscapeWord) -> Result<Partition> {
    let c = clusters(p, target.level())?;
    let seq = c.assemble(target)?;
    Partition::new(seq).map_err(|e| invariant("shuffle yields a partition", e.to_string()))
}
