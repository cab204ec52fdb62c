// Independent brute-force oracles, kept deliberately naive.

/// Order-isomorphic: equal where the pattern is equal, ordered where it is
/// ordered.
pub fn iso(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (0..a.len()).all(|j| a[i].cmp(&a[j]) == b[i].cmp(&b[j])))
}

/// Try every position subset.
pub fn brute_contains(hay: &[u8], pat: &[u8]) -> bool {
    fn go(hay: &[u8], pat: &[u8], start: usize, pick: &mut Vec<u8>) -> bool {
        if pick.len() == pat.len() {
            return iso(pick, pat);
        }
        for i in start..hay.len() {
            pick.push(hay[i]);
            if go(hay, pat, i + 1, pick) {
                return true;
            }
            pick.pop();
        }
        false
    }
    go(hay, pat, 0, &mut Vec::new())
}

/// Every string over `[n]` that is a restricted growth string.
pub fn brute_partitions(n: usize) -> Vec<Vec<u8>> {
    let mut all = vec![Vec::new()];
    for _ in 0..n {
        all = all
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (1..=n as u8).map(move |v| {
                    let mut x = w.clone();
                    x.push(v);
                    x
                })
            })
            .collect();
    }
    all.into_iter()
        .filter(|s| {
            let mut max = 0;
            s.iter().all(|&v| {
                let ok = v <= max + 1;
                max = max.max(v);
                ok
            })
        })
        .collect()
}

/// Bell numbers from the Bell triangle.
pub fn bell_triangle(n: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let x = *next.last().unwrap() + v;
            next.push(x);
        }
        out.push(next[0]);
        row = next;
    }
    out.truncate(n + 1);
    out
}
