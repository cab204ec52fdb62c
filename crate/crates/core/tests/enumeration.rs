mod common;

use common::oracle::brute_contains;
use partpat::enumeration::*;
use partpat::seqcore::{iterate_partitions, parse_symbols, Partition};

fn s(t: &str) -> Vec<u8> {
    parse_symbols(t).unwrap()
}

#[test]
fn engine_matches_brute_force() {
    let pats: Vec<Partition> = (0..=4).flat_map(iterate_partitions).collect();
    for q in &pats {
        let t = count_table(q, 8, true).unwrap();
        for n in 0..=8 {
            let parts: Vec<Partition> = iterate_partitions(n).filter(|p| !brute_contains(p, q)).collect();
            assert_eq!(t.counts[n], parts.len() as u64, "{q} n={n}");
            let by = &t.by_blocks.as_ref().unwrap()[n];
            for (m, &c) in by.iter().enumerate() {
                let want = parts.iter().filter(|p| p.blocks() as usize == m).count() as u64;
                assert_eq!(c, want, "{q} n={n} m={m}");
            }
        }
    }
}

#[test]
fn published_rows() {
    for tau in ["112", "121", "122", "123"] {
        for n in 1..=12 {
            assert_eq!(count_avoiders(&s(tau), n).unwrap(), 1 << (n - 1));
        }
    }
    assert_eq!(count_vector(&s("1122"), 0, 7).unwrap(), [1, 1, 2, 5, 14, 42, 133, 441]);
    assert_eq!(
        count_vector(&s("12345"), 6, 11).unwrap(),
        [187, 715, 2795, 11051, 43947, 175275]
    );
    assert_eq!(count_avoiders_by_blocks(&s("12345"), 11).unwrap().iter().sum::<u64>(), 175275);
}

#[test]
fn blocks_of_12112_and_12212() {
    for n in 0..=10 {
        assert_eq!(
            count_avoiders_by_blocks(&s("12112"), n).unwrap(),
            count_avoiders_by_blocks(&s("12212"), n).unwrap()
        );
    }
}

#[test]
fn thread_count_does_not_matter() {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = pool.install(|| count_table(&s("121321"), 10, true).unwrap());
    let parallel = count_table(&s("121321"), 10, true).unwrap();
    assert_eq!(serial, parallel);
    for depth in [0, 2, 6] {
        assert_eq!(count_table_sharded(&s("121321"), 10, true, depth).unwrap(), parallel);
    }
}

#[test]
fn small_classes() {
    let r = classify(3, 9).unwrap();
    let names: Vec<Vec<String>> =
        r.classes.iter().map(|c| c.members.iter().map(|p| p.to_string()).collect()).collect();
    assert_eq!(names, vec![vec!["111"], vec!["112", "121", "122", "123"]]);
    let r = classify(4, 11).unwrap();
    let mut sizes: Vec<usize> = r.classes.iter().map(|c| c.members.len()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 3, 4, 6]);
    assert_eq!(classify(1, 3).unwrap().classes.len(), 1);
    assert_eq!(classify(2, 6).unwrap().classes.len(), 1);
}

#[test]
fn witnesses() {
    assert_eq!(witness(&s("111"), &s("112"), 4).unwrap(), Some(4));
    assert_eq!(witness(&s("111"), &s("112"), 3).unwrap(), None);
    assert_eq!(witness(&s("12112"), &s("12122"), 12).unwrap(), None);
    assert_eq!(witness(&s("1212"), &s("1122"), 12).unwrap(), Some(6));
}

#[test]
fn oversized_n_is_rejected() {
    assert!(count_avoiders(&s("12"), 70).is_err());
}
