//! The row-by-row map from `M(2^p 1 2^q, 2)`-avoiding to
//! `M(2^(p+q) 1, 2)`-avoiding semi-standard fillings of a stack polyomino.
//!
//! The top row is peeled off together with the columns whose 1-cell sits in
//! it; the rest is mapped recursively. Then the runs of columns between the
//! last `q` top-row 1-cells are moved in front, right after the `p`-th one.

use crate::error::{invariant, Error, Result};
use crate::fillings::{filling_contains, Filling, Matrix01, ShapeKind};
use crate::seqcore::format_symbols;

/// `2^p 1 2^q`.
pub fn spq(p: usize, q: usize) -> Vec<u8> {
    let mut v = vec![2u8; p];
    v.push(1);
    v.extend(std::iter::repeat(2).take(q));
    v
}

// The gaps of the top interval: the columns (indices into `cols`) before the
// first top-row 1-cell, between consecutive ones, and after the last one.
fn top_gaps(heights: &[u8], cols: &[u8], r: u8) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut tops = Vec::new();
    let mut gaps = vec![Vec::new()];
    for (j, (&h, &c)) in heights.iter().zip(cols).enumerate() {
        if h != r {
            continue;
        }
        if c == r {
            tops.push(j);
            gaps.push(Vec::new());
        } else {
            gaps.last_mut().expect("open gap").push(j);
        }
    }
    (tops, gaps)
}

// Lay the gaps back into the top interval, which starts at `start`.
fn relay(cols: &mut [u8], start: usize, r: u8, gaps: &[Vec<u8>]) {
    let mut at = start;
    for (i, g) in gaps.iter().enumerate() {
        if i > 0 {
            cols[at] = r;
            at += 1;
        }
        for &v in g {
            cols[at] = v;
            at += 1;
        }
    }
}

fn values(cols: &[u8], idx: &[usize]) -> Vec<u8> {
    idx.iter().map(|&j| cols[j]).collect()
}

fn sub_problem(heights: &[u8], cols: &[u8], r: u8) -> (Vec<usize>, Vec<u8>, Vec<u8>) {
    let keep: Vec<usize> = (0..cols.len()).filter(|&j| cols[j] != r).collect();
    let h = keep.iter().map(|&j| heights[j].min(r - 1)).collect();
    let c = keep.iter().map(|&j| cols[j]).collect();
    (keep, h, c)
}

fn rearrange(
    cols: &mut [u8],
    heights: &[u8],
    r: u8,
    p: usize,
    q: usize,
    inverse: bool,
) -> Result<()> {
    let (tops, gaps) = top_gaps(heights, cols, r);
    let m = tops.len();
    if m < p + q {
        return Ok(());
    }
    let start = heights.iter().position(|&h| h == r).expect("top row");
    let g: Vec<Vec<u8>> = gaps.iter().map(|idx| values(cols, idx)).collect();
    let mut out = vec![Vec::new(); m + 1];
    if !inverse {
        if let Some(i) = (p..=m - q).find(|&i| !g[i].is_empty()) {
            return Err(invariant(
                "top-row 1-cells adjacent in the avoided range",
                format!("gap {i} of row {r} is not empty"),
            ));
        }
        out[..p].clone_from_slice(&g[..p]);
        for i in 1..=q {
            out[p + i - 1] = g[m - q + i].clone();
        }
    } else {
        if let Some(i) = (p + q..=m).find(|&i| !g[i].is_empty()) {
            return Err(invariant(
                "top-row 1-cells adjacent at the right end",
                format!("gap {i} of row {r} is not empty"),
            ));
        }
        out[..p].clone_from_slice(&g[..p]);
        for i in 1..=q {
            out[m - q + i] = g[p + i - 1].clone();
        }
    }
    relay(cols, start, r, &out);
    Ok(())
}

fn walk(heights: &[u8], cols: &[u8], p: usize, q: usize, inverse: bool) -> Result<Vec<u8>> {
    let r = heights.iter().copied().max().unwrap_or(0);
    if r <= 1 {
        return Ok(cols.to_vec());
    }
    let mut out = cols.to_vec();
    if inverse {
        rearrange(&mut out, heights, r, p, q, true)?;
    }
    let (keep, sh, sc) = sub_problem(heights, &out, r);
    let mapped = walk(&sh, &sc, p, q, inverse)?;
    for (&j, v) in keep.iter().zip(mapped) {
        out[j] = v;
    }
    if !inverse {
        rearrange(&mut out, heights, r, p, q, false)?;
    }
    Ok(out)
}

fn check(f: &Filling, pat: &[u8]) -> Result<()> {
    if f.shape().kind() != ShapeKind::Stack {
        return Err(Error::Precondition("the map works on stack polyominoes".into()));
    }
    if !f.is_semi_standard() {
        return Err(Error::Precondition("the filling has an empty column".into()));
    }
    if filling_contains(f, &Matrix01::of_sequence(pat, 2)?) {
        return Err(Error::Precondition(format!("{f} contains M({}, 2)", format_symbols(pat))));
    }
    Ok(())
}

/// From `M(2^p 1 2^q, 2)`-avoiders to `M(2^(p+q) 1, 2)`-avoiders on the same
/// shape. Keeps the number of 1-cells in every row.
pub fn fall_bijection(f: &Filling, p: usize, q: usize) -> Result<Filling> {
    check(f, &spq(p, q))?;
    let cols = walk(f.shape().heights(), f.columns(), p, q, false)?;
    let out = Filling::new(f.shape().clone(), cols)?;
    debug_assert!(!filling_contains(&out, &Matrix01::of_sequence(&spq(p + q, 0), 2)?));
    debug_assert_eq!(out.row_counts(), f.row_counts());
    Ok(out)
}

/// Inverse of [`fall_bijection`].
pub fn fall_inverse(f: &Filling, p: usize, q: usize) -> Result<Filling> {
    check(f, &spq(p + q, 0))?;
    let cols = walk(f.shape().heights(), f.columns(), p, q, true)?;
    Filling::new(f.shape().clone(), cols)
}
