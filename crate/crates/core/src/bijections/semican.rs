//! Pseudoswaps of adjacent rows and the map from `12112`-avoiders to
//! `12212`-avoiders that walks through the `k`-semicanonical sequences.
//!
//! Sparse 0-1 matrices are handled as column sequences: entry `j` is the row
//! of the 1-cell in column `j`, or 0 for an empty column. "`12112` in rows
//! `(x, y)`" means a subsequence `x y x x y`.

use crate::containment::contains;
use crate::error::{invariant, Error, Result};
use crate::fillings::Matrix01;
use crate::seqcore::{
    first_occurrences, format_symbols, is_k_semicanonical, last_occurrences, reverse_complement,
    Partition,
};

const P12112: [u8; 5] = [1, 2, 1, 1, 2];
const P12212: [u8; 5] = [1, 2, 2, 1, 2];

fn positions(cols: &[u8], r: u8) -> Vec<usize> {
    (0..cols.len()).filter(|&j| cols[j] == r).collect()
}

fn two_rows(cols: &[u8], x: u8, y: u8) -> Vec<u8> {
    cols.iter()
        .filter_map(|&v| match v {
            _ if v == x => Some(1),
            _ if v == y => Some(2),
            _ => None,
        })
        .collect()
}

fn swap_except(cols: &[u8], x: u8, keep: &[usize]) -> Vec<u8> {
    let y = x + 1;
    let mut out = cols.to_vec();
    for (j, v) in out.iter_mut().enumerate() {
        if keep.contains(&j) {
            continue;
        }
        if *v == x {
            *v = y;
        } else if *v == y {
            *v = x;
        }
    }
    out
}

fn check_rows(cols: &[u8], x: u8) -> Result<(Vec<usize>, Vec<usize>)> {
    if x == 0 || x == u8::MAX {
        return Err(Error::OutOfRange(format!("row {x} has no upper neighbour")));
    }
    let y = x + 1;
    let (px, py) = (positions(cols, x), positions(cols, y));
    if px.is_empty() || py.is_empty() {
        return Err(Error::Precondition(format!("rows {x} and {y} must both be nonempty")));
    }
    if contains(&two_rows(cols, x, y), &P12112) {
        return Err(Error::Precondition(format!("rows {x}, {y} contain 12112")));
    }
    Ok((px, py))
}

// Rear columns: the y-columns to the right of the x-column that separates
// f_y from l_y.
fn rear_columns(px: &[usize], py: &[usize]) -> Vec<usize> {
    let (fy, ly) = (py[0], py[py.len() - 1]);
    match px.iter().find(|&&s| fy < s && s < ly) {
        Some(&s) => py.iter().copied().filter(|&j| j > s).collect(),
        None => Vec::new(),
    }
}

// Middle columns: the y-columns between the last two x-columns.
fn middle_columns(px: &[usize], py: &[usize]) -> Vec<usize> {
    if px.len() < 2 {
        return Vec::new();
    }
    let (a, b) = (px[px.len() - 2], px[px.len() - 1]);
    py.iter().copied().filter(|&j| a < j && j < b).collect()
}

/// Pseudoswap of rows `x` and `x + 1` in a sparse column sequence. Needs the
/// two rows to avoid `12112` and `f_x < f_y <= l_y < l_x`.
pub fn pseudoswap_columns(cols: &[u8], x: u8) -> Result<Vec<u8>> {
    let (px, py) = check_rows(cols, x)?;
    let ok = px[0] < py[0] && py[py.len() - 1] < px[px.len() - 1];
    if !ok {
        return Err(Error::Precondition(format!(
            "rows {x}, {} of `{}` are not nested as f_x < f_y <= l_y < l_x",
            x + 1,
            format_symbols(cols)
        )));
    }
    let rear = rear_columns(&px, &py);
    let keep = if rear.len() > 1 { &rear[..rear.len() - 1] } else { &[][..] };
    Ok(swap_except(cols, x, keep))
}

/// Inverse of [`pseudoswap_columns`]. Needs `f_y < f_x <= l_x < l_y`.
pub fn pseudoswap_inverse_columns(cols: &[u8], x: u8) -> Result<Vec<u8>> {
    let (px, py) = check_rows(cols, x)?;
    let ok = py[0] < px[0] && px[px.len() - 1] < py[py.len() - 1];
    if !ok {
        return Err(Error::Precondition(format!(
            "rows {x}, {} of `{}` are not nested as f_y < f_x <= l_x < l_y",
            x + 1,
            format_symbols(cols)
        )));
    }
    let mid = middle_columns(&px, &py);
    let keep = if mid.len() > 1 { &mid[1..] } else { &[][..] };
    Ok(swap_except(cols, x, keep))
}

fn sparse(m: &Matrix01) -> Result<Vec<u8>> {
    let mut cols = vec![0u8; m.num_columns()];
    for (r, c) in m.ones() {
        if cols[c - 1] != 0 {
            return Err(Error::Precondition("a column holds two 1-cells".into()));
        }
        cols[c - 1] = r;
    }
    Ok(cols)
}

fn from_sparse(rows: u8, cols: &[u8]) -> Result<Matrix01> {
    Matrix01::new(rows, cols.iter().map(|&v| if v == 0 { vec![] } else { vec![v] }).collect())
}

/// [`pseudoswap_columns`] on a sparse matrix.
pub fn pseudoswap(m: &Matrix01, x: u8) -> Result<Matrix01> {
    from_sparse(m.rows(), &pseudoswap_columns(&sparse(m)?, x)?)
}

/// [`pseudoswap_inverse_columns`] on a sparse matrix.
pub fn pseudoswap_inverse(m: &Matrix01, x: u8) -> Result<Matrix01> {
    from_sparse(m.rows(), &pseudoswap_inverse_columns(&sparse(m)?, x)?)
}

/// A `(k, p, q)`-sequence over `[m]`: removing row `p` leaves a
/// `k`-semicanonical sequence, row `p` has the smallest first occurrence among
/// the rows from `k` up (and a larger one than every row below `k`), `q` is
/// the largest row whose last occurrence is not after that of row `p`, and no
/// row from `k` to `q` ends after row `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KpqMatrix {
    seq: Vec<u8>,
    m: u8,
    k: u8,
    p: u8,
    q: u8,
}

impl KpqMatrix {
    /// Validate `seq` with key row `p`; `q` is computed.
    pub fn new(seq: Vec<u8>, m: u8, k: u8, p: u8) -> Result<Self> {
        if k == 0 || k > p || p > m {
            return Err(Error::OutOfRange(format!("need 1 <= k <= p <= m, got {k}, {p}, {m}")));
        }
        let bad = |why: &str| {
            Error::Precondition(format!(
                "`{}` is not a ({k}, {p}, *)-sequence over [{m}]: {why}",
                format_symbols(&seq)
            ))
        };
        let erased: Vec<u8> = seq
            .iter()
            .filter(|&&v| v != p)
            .map(|&v| if v > p { v - 1 } else { v })
            .collect();
        if !seq.contains(&p) || !is_k_semicanonical(&erased, m - 1, k) {
            return Err(bad("the rest is not semicanonical"));
        }
        let f = first_occurrences(&seq, m);
        let l = last_occurrences(&seq, m);
        let fp = f[p as usize];
        if (1..k).any(|i| f[i as usize] > fp) || (k..=m).any(|j| j != p && f[j as usize] < fp) {
            return Err(bad("row p does not start at the right place"));
        }
        let lp = l[p as usize];
        // rows k..q must all end before row p, not only the rows above p
        if (k..p).any(|j| l[j as usize] > lp) {
            return Err(bad("a row between k and p ends after row p"));
        }
        let q = (1..=m).rev().find(|&j| l[j as usize] <= lp).expect("row p itself");
        Ok(KpqMatrix { seq, m, k, p, q })
    }

    /// The column sequence.
    pub fn as_slice(&self) -> &[u8] {
        &self.seq
    }

    /// Consume into the column sequence.
    pub fn into_vec(self) -> Vec<u8> {
        self.seq
    }

    /// Number of rows.
    pub fn m(&self) -> u8 {
        self.m
    }

    /// The level `k`.
    pub fn k(&self) -> u8 {
        self.k
    }

    /// The key row.
    pub fn p(&self) -> u8 {
        self.p
    }

    /// The target row.
    pub fn q(&self) -> u8 {
        self.q
    }
}

// Put the values at `first` and then those at `second` (each in order) back
// into the union of their positions.
fn reorder(cols: &mut [u8], first: &[usize], second: &[usize]) {
    let mut at: Vec<usize> = first.iter().chain(second).copied().collect();
    at.sort_unstable();
    let vals: Vec<u8> = first.iter().chain(second).map(|&j| cols[j]).collect();
    for (j, v) in at.into_iter().zip(vals) {
        cols[j] = v;
    }
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

/// One step from a `12112`-avoiding `(k, p, q)`-sequence with `p < q` to a
/// `12112`-avoiding `(k, p + 1, q)`-sequence.
pub fn phi(a: &KpqMatrix) -> Result<KpqMatrix> {
    let (m, k, p) = (a.m, a.k, a.p);
    if p >= a.q {
        return Err(Error::Precondition(format!("p = {p} is not below q = {}", a.q)));
    }
    if contains(&a.seq, &P12112) {
        return Err(Error::Precondition(format!("`{}` contains 12112", format_symbols(&a.seq))));
    }
    let s = &a.seq;
    let (px, py) = (positions(s, p), positions(s, p + 1));
    let rear = rear_columns(&px, &py);
    let mut out = pseudoswap_columns(s, p)?;
    if rear.len() > 1 {
        let r = rear.len();
        let c1 = py[0];
        let d_prev = rear[r - 2];
        let d_last = rear[r - 1];
        let sep = *px.iter().find(|&&j| py[0] < j && j < py[py.len() - 1]).expect("separator");
        let before = px.iter().copied().filter(|&j| j < sep).last();
        let after = px.iter().copied().find(|&j| j > sep).unwrap_or(usize::MAX);
        let f = first_occurrences(s, m);
        let ys: Vec<u8> = (p + 2..=m).filter(|&y| f[y as usize] < d_prev).collect();
        let ycols: Vec<usize> = (0..s.len()).filter(|&j| ys.contains(&s[j])).collect();
        for &j in &ycols {
            let lo = before.map_or(false, |b| b < j && j < c1);
            if !(lo || (d_prev < j && j < d_last) || (d_last < j && j < after)) {
                return Err(invariant(
                    "high rows start inside the allowed ranges",
                    format!("column {} of `{}`", j + 1, format_symbols(s)),
                ));
            }
        }
        let y1: Vec<usize> = ycols.into_iter().filter(|&j| j < c1).collect();
        let dx = positions(&out, p);
        let mid = middle_columns(&dx, &positions(&out, p + 1));
        let z = sorted_union(&dx[..dx.len() - 1], &mid[..mid.len().saturating_sub(1)]);
        reorder(&mut out, &z, &y1);
    }
    debug_assert!(!contains(&out, &P12112));
    KpqMatrix::new(out, m, k, p + 1).map_err(|e| invariant("phi lands on a (k, p+1, q)-sequence", e.to_string()))
}

/// Inverse of [`phi`]: from a `(k, p, q)`-sequence with `p > k` back to the
/// `(k, p - 1, q)`-sequence it came from.
pub fn phi_inverse(b: &KpqMatrix) -> Result<KpqMatrix> {
    let (m, k, p) = (b.m, b.k, b.p);
    if p <= k {
        return Err(Error::Precondition(format!("p = {p} is not above k = {k}")));
    }
    if contains(&b.seq, &P12112) {
        return Err(Error::Precondition(format!("`{}` contains 12112", format_symbols(&b.seq))));
    }
    let x = p - 1;
    let mut cols = b.seq.clone();
    let (px, py) = (positions(&cols, x), positions(&cols, p));
    let mid = middle_columns(&px, &py);
    if mid.len() > 1 {
        let beta_r = mid[mid.len() - 1];
        let beta_prev = mid[mid.len() - 2];
        let f = first_occurrences(&cols, m);
        let ys: Vec<u8> = (p + 1..=m).filter(|&y| f[y as usize] < beta_r).collect();
        let y1: Vec<usize> =
            (beta_prev + 1..beta_r).filter(|&j| ys.contains(&cols[j])).collect();
        let z = sorted_union(&px[..px.len() - 1], &mid[..mid.len() - 1]);
        reorder(&mut cols, &y1, &z);
    }
    let out = pseudoswap_inverse_columns(&cols, x)?;
    let prev = KpqMatrix::new(out, m, k, x)
        .map_err(|e| invariant("phi inverse lands on a (k, p-1, q)-sequence", e.to_string()))?;
    if prev.q != b.q {
        return Err(invariant("phi inverse keeps q", format!("{} vs {}", prev.q, b.q)));
    }
    Ok(prev)
}

/// The map from `12112`-avoiding partitions to `12212`-avoiding ones.
pub fn bijection_12112_12212(p: &Partition) -> Result<Partition> {
    if contains(p, &P12112) {
        return Err(Error::Precondition(format!("`{p}` contains 12112")));
    }
    let m = p.blocks();
    let mut s = p.to_vec();
    for k in (1..m).rev() {
        let mut a = KpqMatrix::new(s, m, k, k)
            .map_err(|e| invariant("a (k+1)-sequence is a (k, k, q)-sequence", e.to_string()))?;
        while a.p < a.q {
            a = phi(&a)?;
        }
        s = a.into_vec();
        debug_assert!(is_k_semicanonical(&s, m, k));
    }
    let out = Partition::new(reverse_complement(&s, m)?)
        .map_err(|e| invariant("reverse complement of a 1-sequence", e.to_string()))?;
    debug_assert!(!contains(&out, &P12212));
    Ok(out)
}

/// Inverse of [`bijection_12112_12212`].
pub fn bijection_12212_12112(p: &Partition) -> Result<Partition> {
    if contains(p, &P12212) {
        return Err(Error::Precondition(format!("`{p}` contains 12212")));
    }
    let m = p.blocks();
    let mut s = reverse_complement(p, m)?;
    for k in 1..m {
        let f = first_occurrences(&s, m);
        let key = (k..=m).min_by_key(|&j| f[j as usize]).expect("k <= m");
        let mut a = KpqMatrix::new(s, m, k, key)
            .map_err(|e| invariant("a k-sequence is a (k, p, p)-sequence", e.to_string()))?;
        if a.q != key {
            return Err(invariant("key row ends last among its rows", format!("q = {}", a.q)));
        }
        while a.p > k {
            a = phi_inverse(&a)?;
        }
        s = a.into_vec();
    }
    Partition::new(s).map_err(|e| invariant("the walk ends on a canonical sequence", e.to_string()))
}
