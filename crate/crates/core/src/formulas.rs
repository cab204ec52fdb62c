//! Exact counting formulas used to cross-check enumeration.
//!
//! Everything is checked `u64` arithmetic; an overflow is reported as
//! [`Error::Overflow`] rather than wrapping.

use crate::error::{Error, Result};

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("sum"))
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("product"))
}

/// Binomial coefficient `C(n, k)`, 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial"));
        }
    }
    Ok(acc as u64)
}

/// Stirling number of the second kind `S(n, m)`.
pub fn stirling2(n: usize, m: usize) -> Result<u64> {
    if m > n {
        return Ok(0);
    }
    // row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1)
    let mut row = vec![0u64; m + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=m.min(i)).rev() {
            row[j] = add(mul(j as u64, row[j])?, row[j - 1])?;
        }
        row[0] = 0;
    }
    Ok(row[m])
}

/// Bell number `B(n)` via `B(n+1) = sum_k C(n, k) B(k)`.
pub fn bell(n: usize) -> Result<u64> {
    let mut b = vec![1u64];
    for i in 0..n {
        let mut s = 0u64;
        for (k, &bk) in b.iter().enumerate() {
            s = add(s, mul(binomial(i as u64, k as u64)?, bk)?)?;
        }
        b.push(s);
    }
    Ok(b[n])
}

/// Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> Result<u64> {
    let mut c = vec![1u64];
    for i in 0..n {
        let mut s = 0u64;
        for j in 0..=i {
            s = add(s, mul(c[j], c[i - j])?)?;
        }
        c.push(s);
    }
    Ok(c[n])
}

/// Partitions of `[n]` all of whose blocks have fewer than `k` elements,
/// i.e. the avoiders of `1^k`. Uses `a(n) = sum_{j=0}^{k-2} C(n-1, j) a(n-1-j)`:
/// the block of 1 takes `j` further elements.
pub fn count_blocksize_lt(k: usize, n: usize) -> Result<u64> {
    Ok(blocksize_lt_vector(k, n)?[n])
}

/// `count_blocksize_lt(k, i)` for `i = 0..=n`.
pub fn blocksize_lt_vector(k: usize, n: usize) -> Result<Vec<u64>> {
    let mut a = vec![1u64];
    for i in 1..=n {
        let mut s = 0u64;
        if k >= 2 {
            for j in 0..=(k - 2).min(i - 1) {
                s = add(s, mul(binomial((i - 1) as u64, j as u64)?, a[i - 1 - j])?)?;
            }
        }
        a.push(s);
    }
    Ok(a)
}

/// Partitions of `[n]` with fewer than `k` blocks, i.e. the avoiders of
/// `12...k`.
pub fn count_blocks_lt(k: usize, n: usize) -> Result<u64> {
    let mut s = 0u64;
    for i in 0..k.min(n + 1) {
        s = add(s, stirling2(n, i)?)?;
    }
    Ok(s)
}

/// Counts of `1(τ+1)` from the counts of `τ`:
/// `p(n; σ) = sum_{i=0}^{n-1} C(n-1, i) p(i; τ)` for `n >= 1`, and 1 at `n = 0`.
/// `tau_counts` must hold `p(0..n-1; τ)`.
pub fn lift(tau_counts: &[u64], n: usize) -> Result<u64> {
    if n == 0 {
        return Ok(1);
    }
    if tau_counts.len() < n {
        return Err(Error::OutOfRange(format!("need {n} values, got {}", tau_counts.len())));
    }
    let mut s = 0u64;
    for (i, &t) in tau_counts[..n].iter().enumerate() {
        s = add(s, mul(binomial((n - 1) as u64, i as u64)?, t)?)?;
    }
    Ok(s)
}

/// [`lift`] for every `n = 0..=tau_counts.len()`.
pub fn lift_vector(tau_counts: &[u64]) -> Result<Vec<u64>> {
    (0..=tau_counts.len()).map(|n| lift(tau_counts, n)).collect()
}

fn signed_to_count(v: i128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow("inverse lift"))
}

/// Recover `p(n; τ)` from the counts of `σ = 1(τ+1)`, using the alternating
/// sum `p(n; τ) = sum_{i=0}^{n} (-1)^i C(n, i) p(n+1-i; σ)`.
/// `sigma_counts` must hold `p(0..=n+1; σ)`.
pub fn lift_inverse(sigma_counts: &[u64], n: usize) -> Result<u64> {
    if sigma_counts.len() < n + 2 {
        return Err(Error::OutOfRange(format!("need {} values, got {}", n + 2, sigma_counts.len())));
    }
    let mut s: i128 = 0;
    for i in 0..=n {
        let term = i128::from(binomial(n as u64, i as u64)?) * i128::from(sigma_counts[n + 1 - i]);
        s = if i % 2 == 0 { s + term } else { s - term };
    }
    signed_to_count(s)
}

/// Plain binomial inversion of `a_j = p(j+1; σ) = sum_i C(j, i) p(i; τ)`:
/// `p(n; τ) = sum_{j=0}^{n} (-1)^(n-j) C(n, j) p(j+1; σ)`. Same value as
/// [`lift_inverse`] after substituting `i = n - j`.
pub fn lift_inverse_binomial(sigma_counts: &[u64], n: usize) -> Result<u64> {
    if sigma_counts.len() < n + 2 {
        return Err(Error::OutOfRange(format!("need {} values, got {}", n + 2, sigma_counts.len())));
    }
    let mut s: i128 = 0;
    for j in 0..=n {
        let term = i128::from(binomial(n as u64, j as u64)?) * i128::from(sigma_counts[j + 1]);
        s = if (n - j) % 2 == 0 { s + term } else { s - term };
    }
    signed_to_count(s)
}

/// `p(n; 12^m)` as the lift of the `1^m` avoiders, since `12^m = 1(1^m + 1)`.
pub fn corollary_1222_egf_counts(m: usize, n: usize) -> Result<u64> {
    let tau = blocksize_lt_vector(m, n.saturating_sub(1))?;
    lift(&tau, n)
}

/// Closed form `t(n, k) = k/n * C(2n-k-1, n-1)` for the number of
/// 123-avoiding sequences of rank `n` ending with `k`; 0 outside `1..=n`.
pub fn t_closed(n: usize, k: usize) -> Result<u64> {
    if k == 0 || k > n {
        return Ok(0);
    }
    let c = u128::from(binomial((2 * n - k - 1) as u64, (n - 1) as u64)?);
    let num = c * k as u128;
    if num % n as u128 != 0 {
        return Err(Error::Invariant {
            clause: "t closed form",
            detail: format!("k*C(2n-k-1,n-1) not divisible by n at n={n}, k={k}"),
        });
    }
    u64::try_from(num / n as u128).map_err(|_| Error::Overflow("t(n,k)"))
}

/// Recurrence `t(1,1) = 1`, `t(n,k) = sum_{j=k-1}^{n-1} t(n-1, j)`, with
/// `t(n,k) = 0` for `k` outside `1..=n`. Returns the table for rows `0..=n`.
pub fn t_table(n: usize) -> Result<Vec<Vec<u64>>> {
    let mut t = vec![vec![0u64; n + 2]; n + 1];
    if n >= 1 {
        t[1][1] = 1;
    }
    for i in 2..=n {
        for k in 1..=i {
            let mut s = 0u64;
            for j in k.saturating_sub(1).max(1)..i {
                s = add(s, t[i - 1][j])?;
            }
            t[i][k] = s;
        }
    }
    Ok(t)
}

/// Single entry of [`t_table`].
pub fn t_rec(n: usize, k: usize) -> Result<u64> {
    if k == 0 || k > n {
        return Ok(0);
    }
    Ok(t_table(n)?[n][k])
}
