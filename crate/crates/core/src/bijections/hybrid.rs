//! Chains of level maps between avoiders of two patterns over landscapes.
//!
//! For a source pattern `σ` and a target `σ'`, a partition is a `k`-hybrid
//! when it avoids `σ'` at every level below `k` and `σ` at every level from
//! `k` up. Each level map `f_k` turns `k`-hybrids into `(k+1)`-hybrids by
//! rewriting the `k`-landscape and shuffling the clusters along the new word;
//! composing `f_2, ..., f_(n-1)` maps `σ`-avoiders onto `σ'`-avoiders.

use crate::containment::{contains, contains_pinned, is_124_pattern, is_134_pattern};
use crate::error::{invariant, Error, Result};
use crate::seqcore::{format_symbols, Partition};

use super::landscape::{clusters, is_landscape_word, Clusters, LandscapeWord, Letter};

/// The two families of three-letter level patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaVariant {
    /// `1 2^(p+1) 1 2^q 3 2^r` to `1 2^(p+1) 3 2^q 1 2^r`.
    Minus,
    /// `1 2^(p+2) 1 2^q 3 2^r` to `1 2^(p+1) 1 2^q 3 2^(r+1)`.
    Plus,
}

/// The four pattern pairs with one 1 and one 4 after the prefix `123`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family124 {
    /// `1232^p 4 1 2^q` to `1232^p 4 2^q 1`, `p, q >= 1`.
    FourOne,
    /// `1232^p 1 4 2^q` to `123 1 2^p 4 2^q`, `p, q >= 1`.
    OneFour,
    /// `123^(p+1) 1 3^q 4` to `123^(p+1) 1 4 3^q`, `p >= 0`, `q >= 1`.
    OneTailFour,
    /// `123^(p+1) 4 1 3^q` to `1234 3^p 1 3^q`, `p >= 0`, `q >= 1`.
    FourOneTail,
}

fn rep(v: u8, n: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat(v).take(n)
}

fn build(parts: &[(u8, usize)]) -> Vec<u8> {
    parts.iter().flat_map(|&(v, n)| rep(v, n)).collect()
}

/// `(source, target)` of a level-pattern pair.
pub fn sigma_patterns(variant: SigmaVariant, p: usize, q: usize, r: usize) -> (Vec<u8>, Vec<u8>) {
    match variant {
        SigmaVariant::Minus => (
            build(&[(1, 1), (2, p + 1), (1, 1), (2, q), (3, 1), (2, r)]),
            build(&[(1, 1), (2, p + 1), (3, 1), (2, q), (1, 1), (2, r)]),
        ),
        SigmaVariant::Plus => (
            build(&[(1, 1), (2, p + 2), (1, 1), (2, q), (3, 1), (2, r)]),
            build(&[(1, 1), (2, p + 1), (1, 1), (2, q), (3, 1), (2, r + 1)]),
        ),
    }
}

/// `(source, target)` of a 1-2-4 or 1-3-4 pair.
pub fn family_patterns(family: Family124, p: usize, q: usize) -> (Vec<u8>, Vec<u8>) {
    match family {
        Family124::FourOne => (
            build(&[(1, 1), (2, 1), (3, 1), (2, p), (4, 1), (1, 1), (2, q)]),
            build(&[(1, 1), (2, 1), (3, 1), (2, p), (4, 1), (2, q), (1, 1)]),
        ),
        Family124::OneFour => (
            build(&[(1, 1), (2, 1), (3, 1), (2, p), (1, 1), (4, 1), (2, q)]),
            build(&[(1, 1), (2, 1), (3, 1), (1, 1), (2, p), (4, 1), (2, q)]),
        ),
        Family124::OneTailFour => (
            build(&[(1, 1), (2, 1), (3, p + 1), (1, 1), (3, q), (4, 1)]),
            build(&[(1, 1), (2, 1), (3, p + 1), (1, 1), (4, 1), (3, q)]),
        ),
        Family124::FourOneTail => (
            build(&[(1, 1), (2, 1), (3, p + 1), (4, 1), (1, 1), (3, q)]),
            build(&[(1, 1), (2, 1), (3, 1), (4, 1), (3, p), (1, 1), (3, q)]),
        ),
    }
}

/// One chain of level maps with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HybridMap {
    /// A three-letter pair.
    Sigma {
        /// Which pair.
        variant: SigmaVariant,
        /// Parameter `p`.
        p: usize,
        /// Parameter `q`.
        q: usize,
        /// Parameter `r`.
        r: usize,
    },
    /// A four-letter pair.
    Level124 {
        /// Which pair.
        family: Family124,
        /// Parameter `p`.
        p: usize,
        /// Parameter `q`.
        q: usize,
    },
}

impl HybridMap {
    /// Check the parameter ranges.
    pub fn validate(&self) -> Result<()> {
        if let HybridMap::Level124 { family, p, q } = *self {
            let ok = match family {
                Family124::FourOne | Family124::OneFour => p >= 1 && q >= 1,
                Family124::OneTailFour | Family124::FourOneTail => q >= 1,
            };
            if !ok {
                return Err(Error::OutOfRange(format!("parameters p = {p}, q = {q} not allowed")));
            }
            let (s, t) = self.patterns();
            let family_ok = match family {
                Family124::FourOne | Family124::OneFour => is_124_pattern(&s) && is_124_pattern(&t),
                _ => is_134_pattern(&s) && is_134_pattern(&t),
            };
            if !family_ok {
                return Err(Error::Pattern("pattern builder produced a foreign pattern".into()));
            }
        }
        let (s, t) = self.patterns();
        if s.len() > 40 || t.len() > 40 {
            return Err(Error::OutOfRange("patterns too long".into()));
        }
        Ok(())
    }

    /// `(source, target)`.
    pub fn patterns(&self) -> (Vec<u8>, Vec<u8>) {
        match *self {
            HybridMap::Sigma { variant, p, q, r } => sigma_patterns(variant, p, q, r),
            HybridMap::Level124 { family, p, q } => family_patterns(family, p, q),
        }
    }

    /// The pattern symbol realized by the level.
    pub fn level_symbol(&self) -> u8 {
        match self {
            HybridMap::Sigma { .. } => 2,
            HybridMap::Level124 { family: Family124::FourOne | Family124::OneFour, .. } => 2,
            HybridMap::Level124 { .. } => 3,
        }
    }

    fn forward_word(&self, c: &Clusters) -> Result<Option<Vec<Letter>>> {
        let w = c.word.letters();
        match *self {
            HybridMap::Sigma { variant: SigmaVariant::Minus, p, q, r } => Ok(sigma_minus(w, p, q, r)),
            HybridMap::Sigma { variant: SigmaVariant::Plus, p, q, r } => Ok(sigma_plus(w, p, q, r)),
            HybridMap::Level124 { family, p, q } => {
                let k = c.word.level();
                let xh = extra_high(c, k);
                let xl = extra_low(c, k);
                match family {
                    Family124::FourOne => four_one(w, &xh, p, q),
                    Family124::OneFour => one_four(w, &xh, p, q),
                    Family124::OneTailFour => one_tail_four(w, &xl, p, q),
                    Family124::FourOneTail => four_one_tail(w, &xl, p, q),
                }
            }
        }
    }

    fn backward_word(&self, c: &Clusters) -> Result<Option<Vec<Letter>>> {
        let w = c.word.letters();
        match *self {
            HybridMap::Sigma { variant: SigmaVariant::Minus, p, q, r } => Ok(sigma_minus(w, p, q, r)),
            HybridMap::Sigma { variant: SigmaVariant::Plus, p, q, r } => {
                Ok(sigma_plus_inverse(w, p, q, r))
            }
            HybridMap::Level124 { family, p, q } => {
                let k = c.word.level();
                let xh = extra_high(c, k);
                let xl = extra_low(c, k);
                match family {
                    Family124::FourOne => four_one_inverse(w, &xh, p, q),
                    Family124::OneFour => one_four_inverse(w, &xh, p, q),
                    Family124::OneTailFour => one_tail_four_inverse(w, &xl, p, q),
                    Family124::FourOneTail => four_one_tail_inverse(w, &xl, p, q),
                }
            }
        }
    }
}

// Per letter of the word: is it a high cluster holding a symbol above k+1.
fn extra_high(c: &Clusters, k: u8) -> Vec<bool> {
    let mut hi = c.high.iter();
    c.word
        .letters()
        .iter()
        .map(|&l| l == Letter::H && hi.next().expect("cluster").iter().any(|&v| v > k + 1))
        .collect()
}

// Per letter: is it a low cluster holding a symbol below k-1.
fn extra_low(c: &Clusters, k: u8) -> Vec<bool> {
    let mut lo = c.low.iter();
    c.word
        .letters()
        .iter()
        .map(|&l| l == Letter::L && lo.next().expect("cluster").iter().any(|&v| v + 1 < k))
        .collect()
}

fn k_positions(w: &[Letter]) -> Vec<usize> {
    (0..w.len()).filter(|&i| w[i] == Letter::K).collect()
}

fn k_count(w: &[Letter]) -> usize {
    w.iter().filter(|&&l| l == Letter::K).count()
}

fn rev(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().copied().collect()
}

fn has(w: &[Letter], l: Letter) -> bool {
    w.contains(&l)
}

// Start of the shortest suffix holding r level letters.
fn suffix_start(w: &[Letter], kpos: &[usize], r: usize) -> usize {
    if r == 0 {
        w.len()
    } else {
        kpos[kpos.len() - r]
    }
}

fn sigma_minus(w: &[Letter], p: usize, q: usize, r: usize) -> Option<Vec<Letter>> {
    let kpos = k_positions(w);
    if kpos.len() < p + q + r + 1 {
        return None;
    }
    let xe = kpos[p] + 1;
    let zs = suffix_start(w, &kpos, r);
    let mut out = w[..xe].to_vec();
    out.extend(rev(&w[xe..zs]));
    out.extend_from_slice(&w[zs..]);
    Some(out)
}

fn sigma_plus(w: &[Letter], p: usize, q: usize, r: usize) -> Option<Vec<Letter>> {
    let kpos = k_positions(w);
    if kpos.len() < p + q + r + 2 {
        return None;
    }
    let xe = kpos[p] + 1;
    let se = kpos[p + 1] + 1;
    let zs = suffix_start(w, &kpos, r);
    let mut out = w[..xe].to_vec();
    out.extend_from_slice(&w[se..zs]);
    out.extend(rev(&w[xe..se]));
    out.extend_from_slice(&w[zs..]);
    Some(out)
}

fn sigma_plus_inverse(w: &[Letter], p: usize, q: usize, r: usize) -> Option<Vec<Letter>> {
    let kpos = k_positions(w);
    if kpos.len() < p + q + r + 2 {
        return None;
    }
    let xe = kpos[p] + 1;
    let zs = suffix_start(w, &kpos, r);
    // the reversed block starts at the last level letter before z
    let j = *kpos.iter().filter(|&&i| i < zs).last().expect("enough level letters");
    let mut out = w[..xe].to_vec();
    out.extend(rev(&w[j..zs]));
    out.extend_from_slice(&w[xe..j]);
    out.extend_from_slice(&w[zs..]);
    Some(out)
}

fn violated(clause: &'static str, w: &[Letter]) -> Error {
    invariant(clause, format!("landscape {}", letters_text(w)))
}

fn letters_text(w: &[Letter]) -> String {
    w.iter()
        .map(|l| match l {
            Letter::L => 'L',
            Letter::K => 'K',
            Letter::H => 'H',
        })
        .collect()
}

// Split `w[from..to]` at the given level-letter positions into the pieces
// between them: before the first, between consecutive ones, after the last.
fn pieces(w: &[Letter], from: usize, to: usize, cuts: &[usize]) -> Vec<Vec<Letter>> {
    let mut out = Vec::with_capacity(cuts.len() + 1);
    let mut at = from;
    for &c in cuts {
        out.push(w[at..c].to_vec());
        at = c + 1;
    }
    out.push(w[at..to].to_vec());
    out
}

fn strip_front(s: &[Letter], l: Letter) -> (bool, Vec<Letter>) {
    if s.first() == Some(&l) {
        (true, s[1..].to_vec())
    } else {
        (false, s.to_vec())
    }
}

fn strip_back(s: &[Letter], l: Letter) -> (bool, Vec<Letter>) {
    if s.last() == Some(&l) {
        (true, s[..s.len() - 1].to_vec())
    } else {
        (false, s.to_vec())
    }
}

fn opt(flag: bool, l: Letter) -> Option<Letter> {
    flag.then_some(l)
}

// The leftmost extra-high cluster with at least p level letters between the
// first high cluster and it.
fn leftmost_far_extra_high(w: &[Letter], xh: &[bool], p: usize) -> Option<usize> {
    let h1 = w.iter().position(|&l| l == Letter::H)?;
    (h1 + 1..w.len()).find(|&i| xh[i] && k_count(&w[h1 + 1..i]) >= p)
}

fn four_one(w: &[Letter], xh: &[bool], p: usize, q: usize) -> Result<Option<Vec<Letter>>> {
    let Some(hp) = leftmost_far_extra_high(w, xh, p) else { return Ok(None) };
    let kpos = k_positions(w);
    if kpos.iter().filter(|&&i| i > hp).count() < q {
        return Ok(None);
    }
    let last = &kpos[kpos.len() - q..];
    let y = &w[hp + 1..last[0]];
    if has(y, Letter::L) {
        return Err(violated("no low cluster between H' and the last q level symbols", w));
    }
    let s = pieces(w, last[0] + 1, w.len(), &last[1..]);
    let (h_star, s1) = strip_front(&s[0], Letter::H);
    let mut out = w[..=hp].to_vec();
    out.extend(s1);
    for si in &s[1..] {
        out.push(Letter::K);
        out.extend_from_slice(si);
    }
    out.push(Letter::K);
    out.extend(opt(h_star, Letter::H));
    out.extend_from_slice(y);
    Ok(Some(out))
}

fn four_one_inverse(w: &[Letter], xh: &[bool], p: usize, q: usize) -> Result<Option<Vec<Letter>>> {
    let Some(hp) = leftmost_far_extra_high(w, xh, p) else { return Ok(None) };
    let after: Vec<usize> = k_positions(w).into_iter().filter(|&i| i > hp).collect();
    if after.len() < q {
        return Ok(None);
    }
    let first = &after[..q];
    let parts = pieces(w, hp + 1, w.len(), first);
    let (h_star, y) = strip_front(&parts[q], Letter::H);
    if has(&y, Letter::L) {
        return Err(violated("no low cluster after the q-th level symbol past H'", w));
    }
    let mut out = w[..=hp].to_vec();
    out.extend_from_slice(&y);
    for (i, s) in parts[..q].iter().enumerate() {
        out.push(Letter::K);
        if i == 0 {
            out.extend(opt(h_star, Letter::H));
        }
        out.extend_from_slice(s);
    }
    Ok(Some(out))
}

// First high cluster, and the rightmost extra-high cluster with at least q
// level letters to its right, provided p level letters lie between them.
fn one_four_frame(w: &[Letter], xh: &[bool], p: usize, q: usize) -> Option<(usize, usize)> {
    let h1 = w.iter().position(|&l| l == Letter::H)?;
    let hp = (0..w.len()).rev().find(|&i| xh[i] && k_count(&w[i + 1..]) >= q)?;
    if hp <= h1 || k_count(&w[h1 + 1..hp]) < p {
        return None;
    }
    Some((h1, hp))
}

fn one_four(w: &[Letter], xh: &[bool], p: usize, q: usize) -> Result<Option<Vec<Letter>>> {
    let Some((h1, hp)) = one_four_frame(w, xh, p, q) else { return Ok(None) };
    let ks: Vec<usize> = k_positions(w).into_iter().filter(|&i| i > h1 && i < hp).take(p).collect();
    let mut parts = pieces(w, h1 + 1, hp, &ks);
    let y = parts.pop().expect("tail piece");
    if has(&y, Letter::L) {
        return Err(violated("no low cluster between the p-th level symbol and H'", w));
    }
    let (h_star, sp) = strip_back(&parts[p - 1], Letter::H);
    parts[p - 1] = sp;
    let mut out = w[..=h1].to_vec();
    out.extend(rev(&y));
    for (i, t) in parts.iter().enumerate() {
        out.push(Letter::K);
        if i == 0 {
            out.extend(opt(h_star, Letter::H));
        }
        out.extend_from_slice(t);
    }
    out.extend_from_slice(&w[hp..]);
    Ok(Some(out))
}

fn one_four_inverse(w: &[Letter], xh: &[bool], p: usize, q: usize) -> Result<Option<Vec<Letter>>> {
    let Some((h1, hp)) = one_four_frame(w, xh, p, q) else { return Ok(None) };
    let inner: Vec<usize> = k_positions(w).into_iter().filter(|&i| i > h1 && i < hp).collect();
    let cuts = &inner[inner.len() - p..];
    let mut parts = pieces(w, h1 + 1, hp, cuts);
    let ybar = parts.remove(0);
    let (h_star, t1) = strip_front(&parts[0], Letter::H);
    parts[0] = t1;
    parts[p - 1].extend(opt(h_star, Letter::H));
    let y = rev(&ybar);
    if has(&y, Letter::L) {
        return Err(violated("no low cluster in the reversed block", w));
    }
    let mut out = w[..=h1].to_vec();
    for s in &parts {
        out.extend_from_slice(s);
        out.push(Letter::K);
    }
    out.extend(y);
    out.extend_from_slice(&w[hp..]);
    Ok(Some(out))
}

// The leftmost extra-low cluster with at least p+1 level letters before it.
fn leftmost_late_extra_low(w: &[Letter], xl: &[bool], p: usize) -> Option<usize> {
    (0..w.len()).find(|&i| xl[i] && k_count(&w[..i]) > p)
}

fn one_tail_four(w: &[Letter], xl: &[bool], p: usize, q: usize) -> Result<Option<Vec<Letter>>> {
    let Some(lp) = leftmost_late_extra_low(w, xl, p) else { return Ok(None) };
    let ks: Vec<usize> = k_positions(w).into_iter().filter(|&i| i > lp).take(q).collect();
    if ks.len() < q {
        return Ok(None);
    }
    let mut parts = pieces(w, lp + 1, w.len(), &ks);
    let y = parts.pop().expect("tail piece");
    if has(&y, Letter::H) {
        return Err(violated("no high cluster after the q-th level symbol past L'", w));
    }
    let (l_star, ym) = strip_front(&y, Letter::L);
    let mut out = w[..=lp].to_vec();
    out.extend(ym);
    for (i, s) in parts.iter().enumerate() {
        out.push(Letter::K);
        if i == 0 {
            out.extend(opt(l_star, Letter::L));
        }
        out.extend_from_slice(s);
    }
    Ok(Some(out))
}

fn one_tail_four_inverse(
    w: &[Letter],
    xl: &[bool],
    p: usize,
    q: usize,
) -> Result<Option<Vec<Letter>>> {
    let Some(lp) = leftmost_late_extra_low(w, xl, p) else { return Ok(None) };
    let after: Vec<usize> = k_positions(w).into_iter().filter(|&i| i > lp).collect();
    if after.len() < q {
        return Ok(None);
    }
    let mut parts = pieces(w, lp + 1, w.len(), &after[after.len() - q..]);
    let ym = parts.remove(0);
    let (l_star, s1) = strip_front(&parts[0], Letter::L);
    parts[0] = s1;
    let mut y: Vec<Letter> = opt(l_star, Letter::L).into_iter().collect();
    y.extend(ym);
    if has(&y, Letter::H) {
        return Err(violated("no high cluster in the moved block", w));
    }
    let mut out = w[..=lp].to_vec();
    for s in &parts {
        out.extend_from_slice(s);
        out.push(Letter::K);
    }
    out.extend(y);
    Ok(Some(out))
}

// The rightmost extra-low cluster with at least q level letters after it,
// provided at least p+1 level letters precede it.
fn four_one_tail_frame(w: &[Letter], xl: &[bool], p: usize, q: usize) -> Option<usize> {
    let lp = (0..w.len()).rev().find(|&i| xl[i] && k_count(&w[i + 1..]) >= q)?;
    (k_count(&w[..lp]) > p).then_some(lp)
}

fn four_one_tail(w: &[Letter], xl: &[bool], p: usize, q: usize) -> Result<Option<Vec<Letter>>> {
    // with p = 0 both patterns are 1234 1 3^q
    if p == 0 {
        return Ok(None);
    }
    let Some(lp) = four_one_tail_frame(w, xl, p, q) else { return Ok(None) };
    let ks: Vec<usize> = k_positions(w).into_iter().take(p + 1).collect();
    debug_assert_eq!(ks[0], 1);
    let mut parts = pieces(w, 2, lp, &ks[1..]);
    let y = parts.pop().expect("tail piece");
    if has(&y, Letter::H) {
        return Err(violated("no high cluster between the (p+1)-th level symbol and L'", w));
    }
    let (l_star, sp) = strip_back(&parts[p - 1], Letter::L);
    parts[p - 1] = sp;
    let mut out = vec![Letter::L, Letter::K];
    out.extend(opt(l_star, Letter::L));
    out.extend(rev(&y));
    for t in &parts {
        out.push(Letter::K);
        out.extend_from_slice(t);
    }
    out.extend_from_slice(&w[lp..]);
    Ok(Some(out))
}

fn four_one_tail_inverse(
    w: &[Letter],
    xl: &[bool],
    p: usize,
    q: usize,
) -> Result<Option<Vec<Letter>>> {
    if p == 0 {
        return Ok(None);
    }
    let Some(lp) = four_one_tail_frame(w, xl, p, q) else { return Ok(None) };
    let before: Vec<usize> = k_positions(w).into_iter().filter(|&i| i < lp).collect();
    let mut parts = pieces(w, 2, lp, &before[before.len() - p..]);
    let mid = parts.remove(0);
    let (l_star, ybar) = strip_front(&mid, Letter::L);
    parts[p - 1].extend(opt(l_star, Letter::L));
    let y = rev(&ybar);
    if has(&y, Letter::H) {
        return Err(violated("no high cluster in the reversed block", w));
    }
    let mut out = vec![Letter::L, Letter::K];
    for s in &parts {
        out.extend_from_slice(s);
        out.push(Letter::K);
    }
    out.extend(y);
    out.extend_from_slice(&w[lp..]);
    Ok(Some(out))
}

/// Does `p` contain `pat` with its level symbol realized by `k`.
pub fn contains_at(p: &[u8], map: &HybridMap, pat: &[u8], k: u8) -> bool {
    contains_pinned(p, pat, map.level_symbol(), k)
}

/// True iff `p` avoids the target below level `k` and the source from `k` up.
pub fn is_hybrid(p: &Partition, map: &HybridMap, k: u8) -> bool {
    let (src, tgt) = map.patterns();
    (1..=p.blocks()).all(|j| {
        let pat = if j < k { &tgt } else { &src };
        !contains_at(p, map, pat, j)
    })
}

fn apply_word(p: &Partition, c: &Clusters, word: Vec<Letter>, k: u8) -> Result<Partition> {
    if !is_landscape_word(&word) {
        return Err(invariant(
            "rewritten word is a landscape word",
            format!("`{}` gives {}", format_symbols(p), letters_text(&word)),
        ));
    }
    let target = LandscapeWord::new(word, k)?;
    let seq = c.assemble(&target)?;
    Partition::new(seq).map_err(|e| invariant("shuffle yields a partition", e.to_string()))
}

/// The level map `f_k`, from `k`-hybrids to `(k+1)`-hybrids.
pub fn hybrid_step(p: &Partition, map: &HybridMap, k: u8) -> Result<Partition> {
    if k < 2 || k > p.blocks() {
        return Ok(p.clone());
    }
    let c = clusters(p, k)?;
    let out = match map.forward_word(&c)? {
        None => p.clone(),
        Some(word) => apply_word(p, &c, word, k)?,
    };
    if cfg!(debug_assertions) {
        let (_, tgt) = map.patterns();
        debug_assert!(!contains_at(&out, map, &tgt, k), "level {k} step kept the target");
    }
    Ok(out)
}

/// Inverse of [`hybrid_step`].
pub fn hybrid_step_inverse(p: &Partition, map: &HybridMap, k: u8) -> Result<Partition> {
    if k < 2 || k > p.blocks() {
        return Ok(p.clone());
    }
    let c = clusters(p, k)?;
    match map.backward_word(&c)? {
        None => Ok(p.clone()),
        Some(word) => apply_word(p, &c, word, k),
    }
}

fn check_avoids(p: &Partition, pat: &[u8]) -> Result<()> {
    if contains(p, pat) {
        return Err(Error::Precondition(format!(
            "`{}` contains {}",
            format_symbols(p),
            format_symbols(pat)
        )));
    }
    Ok(())
}

/// Compose the level maps `f_2, ..., f_(n-1)`: source avoiders to target
/// avoiders of the same size.
pub fn hybrid_chain(p: &Partition, map: &HybridMap) -> Result<Partition> {
    map.validate()?;
    let (src, tgt) = map.patterns();
    check_avoids(p, &src)?;
    let mut cur = p.clone();
    for k in 2..p.len() {
        cur = hybrid_step(&cur, map, k as u8)?;
    }
    if contains(&cur, &tgt) {
        return Err(invariant("chain output avoids the target", cur.to_string()));
    }
    Ok(cur)
}

/// Inverse of [`hybrid_chain`].
pub fn hybrid_chain_inverse(p: &Partition, map: &HybridMap) -> Result<Partition> {
    map.validate()?;
    let (src, tgt) = map.patterns();
    check_avoids(p, &tgt)?;
    let mut cur = p.clone();
    for k in (2..p.len()).rev() {
        cur = hybrid_step_inverse(&cur, map, k as u8)?;
    }
    if contains(&cur, &src) {
        return Err(invariant("inverse chain output avoids the source", cur.to_string()));
    }
    Ok(cur)
}

/// [`hybrid_chain`] for a three-letter pair.
pub fn hybrid_chain_sigma(
    p: &Partition,
    variant: SigmaVariant,
    pp: usize,
    q: usize,
    r: usize,
) -> Result<Partition> {
    hybrid_chain(p, &HybridMap::Sigma { variant, p: pp, q, r })
}

/// [`hybrid_chain`] for a four-letter pair.
pub fn hybrid_chain_124(p: &Partition, family: Family124, pp: usize, q: usize) -> Result<Partition> {
    hybrid_chain(p, &HybridMap::Level124 { family, p: pp, q })
}
