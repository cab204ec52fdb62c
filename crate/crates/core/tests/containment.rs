mod common;

use common::oracle::{brute_contains, iso};
use partpat::containment::*;
use partpat::seqcore::{iterate_partitions, parse_symbols, Partition};
use proptest::prelude::*;

fn s(t: &str) -> Vec<u8> {
    parse_symbols(t).unwrap()
}

#[test]
fn agrees_with_subset_search() {
    let pats: Vec<Partition> = (1..=4).flat_map(iterate_partitions).collect();
    for n in 0..=7 {
        for p in iterate_partitions(n) {
            for q in &pats {
                assert_eq!(contains(&p, q), brute_contains(&p, q), "{p} {q}");
            }
        }
    }
}

#[test]
fn worked_examples() {
    assert!(contains(&s("1231242"), &s("1212")));
    assert!(contains(&s("12121"), &s("1221")));
    assert!(!contains(&s("12112"), &s("1221")));
    let p = s("1231323142221");
    assert!(contains_at_level(&p, &s("121223"), 3).unwrap());
    assert!(!contains_at_level(&p, &s("121223"), 2).unwrap());
    assert!(is_124_pattern(&s("1232142")));
    assert!(!is_124_pattern(&s("1232124")));
    assert!(contains_at_level(&p, &s("1212"), 3).is_err());
}

#[test]
fn occurrences_are_leftmost_and_valid() {
    for n in 0..=6 {
        for p in iterate_partitions(n) {
            for q in ["121", "1122", "1213"] {
                let q = s(q);
                match find_occurrence(&p, &q) {
                    Some(o) => {
                        let vals: Vec<u8> = o.positions.iter().map(|&i| p[i]).collect();
                        assert!(iso(&vals, &q));
                        assert!(o.positions.windows(2).all(|w| w[0] < w[1]));
                    }
                    None => assert!(!brute_contains(&p, &q)),
                }
            }
        }
    }
}

// leveled containment by trying every (l, h) pair; over {l < k < h} an
// order-isomorphic copy of sigma puts its 2s on k
fn brute_level(p: &[u8], sigma: &[u8], k: u8) -> bool {
    let m = p.iter().copied().max().unwrap_or(0);
    (1..k).any(|l| {
        (k + 1..=m).any(|h| {
            let sub: Vec<u8> = p.iter().copied().filter(|&v| v == l || v == k || v == h).collect();
            brute_contains(&sub, sigma)
        })
    })
}

#[test]
fn levels_match_brute_force() {
    let sigmas = ["121223", "12123", "12321", "1213", "1231"];
    for n in 0..=8 {
        for p in iterate_partitions(n) {
            for sg in sigmas {
                let sg = s(sg);
                for k in 1..=p.blocks() {
                    assert_eq!(contains_at_level(&p, &sg, k).unwrap(), brute_level(&p, &sg, k), "{p} k={k}");
                }
            }
        }
    }
}

#[test]
fn levels_cover_plain_containment() {
    let tau = s("1232142");
    for n in 0..=9 {
        for p in iterate_partitions(n) {
            let any = (1..=p.blocks()).any(|k| contains_124_at_level(&p, &tau, k).unwrap());
            assert_eq!(any, contains(&p, &tau), "{p}");
        }
    }
}

#[test]
fn matcher_completes_prefixes() {
    for pat in ["1212", "12112", "1123"] {
        let pat = s(pat);
        let m = Matcher::new(&pat).unwrap();
        for n in 1..=8 {
            for p in iterate_partitions(n) {
                let (head, last) = p.split_at(n - 1);
                if contains(head, &pat) {
                    continue;
                }
                assert_eq!(m.completes(head, last[0]), contains(&p, &pat), "{p}");
            }
        }
    }
}

proptest! {
    #[test]
    fn random_words(hay in proptest::collection::vec(1u8..6, 0..11), pat in proptest::collection::vec(1u8..4, 0..5)) {
        prop_assert_eq!(contains(&hay, &pat), brute_contains(&hay, &pat));
    }
}
