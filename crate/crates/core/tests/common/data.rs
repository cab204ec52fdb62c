// Published tables: one class per line, `members: counts`.

use partpat::seqcore::parse_symbols;

pub struct Row {
    pub members: Vec<Vec<u8>>,
    pub counts: Vec<u64>,
}

fn parse(text: &str) -> Vec<Row> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (pats, nums) = l.split_once(':').expect("row separator");
            Row {
                members: pats.split(',').map(|p| parse_symbols(p.trim()).unwrap()).collect(),
                counts: nums.split_whitespace().map(|v| v.parse().unwrap()).collect(),
            }
        })
        .collect()
}

/// Size-5 classes with `p(n)` for `n = 6..=11`.
pub fn size5_rows() -> Vec<Row> {
    parse(include_str!("../data/size5.txt"))
}

/// Printed values that a plain filter count contradicts:
/// `(first member, n, printed, counted)`.
pub const ERRATA: &[(&str, usize, u64, u64)] = &[
    // the printed value is the one of the 123131 row
    ("122133", 11, 523161, 502640),
];

/// A row's counts with the errata applied; `first` is the first `n`.
pub fn corrected(r: &Row, first: usize) -> Vec<u64> {
    let mut v = r.counts.clone();
    for &(pat, n, printed, counted) in ERRATA {
        if r.members[0] == parse_symbols(pat).unwrap() && v.get(n - first) == Some(&printed) {
            v[n - first] = counted;
        }
    }
    v
}

/// Size-6 classes with `p(n)` from `n = 7` up to the printed horizon.
pub fn size6_rows() -> Vec<Row> {
    parse(include_str!("../data/size6.txt"))
}
