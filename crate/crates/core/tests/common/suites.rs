use std::collections::{HashMap, HashSet};

use partpat::bijections::chunks::{
    binary_pattern, block_sizes, chunk_criterion, chunk_decompose, thm12_inverse, thm12_map,
};
use partpat::bijections::fall::{fall_bijection, fall_inverse, spq};
use partpat::bijections::hybrid::{
    family_patterns, hybrid_chain, hybrid_chain_inverse, sigma_patterns, Family124, HybridMap,
    SigmaVariant,
};
use partpat::bijections::landscape::{clusters, landscape, shuffle, LandscapeWord, Letter};
use partpat::bijections::semican::{
    bijection_12112_12212, bijection_12212_12112, phi, phi_inverse, pseudoswap_columns,
    pseudoswap_inverse_columns, KpqMatrix,
};
use partpat::bijections::tails::{
    tail_compose, tail_decompose, tail_step, tail_step_inverse, tails_ending, tails_of_rank, Tail,
};
use partpat::containment::{contains, contains_at_level};
use partpat::enumeration::{count_avoiders, count_avoiders_by_blocks};
use partpat::fillings::{
    count_fillings, filling_contains, is_t_falling, stack_shapes, FillMode, Filling, Matrix01,
};
use partpat::formulas::{catalan, t_closed, t_rec};
use partpat::seqcore::{iterate_partitions, Partition};
use rayon::prelude::*;

pub fn avoiders(pat: &[u8], n: usize) -> Vec<Partition> {
    iterate_partitions(n).filter(|p| !contains(p, pat)).collect()
}

// every sequence over 0..=max of length n
fn words(n: usize, lo: u8, max: u8) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (lo..=max).map(move |v| {
                    let mut x = w.clone();
                    x.push(v);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn chunk_predicate_matches_containment() {
    for n in 0..=9 {
        for p in iterate_partitions(n) {
            for r in 1..=3 {
                for s in 0..=2 {
                    let want = !contains(&p, &binary_pattern(r, s));
                    assert_eq!(chunk_criterion(&p, r, s), want, "{p} r={r} s={s}");
                }
            }
        }
    }
}

pub fn ones_give_empty_chunks() {
    for n in 1..=6 {
        let p = Partition::new(vec![1; n]).unwrap();
        let d = chunk_decompose(&p);
        assert_eq!(d.chunks.len(), n);
        assert!(d.chunks.iter().all(Vec::is_empty));
    }
}

pub fn chunk_map_is_a_bijection() {
    for (k, m) in [(1, 2), (1, 3), (2, 3)] {
        let src = binary_pattern(k, m - k);
        let tgt = binary_pattern(m, 0);
        for n in 0..=9 {
            let dom = avoiders(&src, n);
            let mut image = HashSet::new();
            for p in &dom {
                let q = thm12_map(p, k, m).unwrap();
                assert!(!contains(&q, &tgt));
                assert_eq!(block_sizes(&q), block_sizes(p), "{p}");
                assert_eq!(thm12_inverse(&q, k, m).unwrap(), *p);
                assert!(image.insert(q));
            }
            assert_eq!(image.len(), avoiders(&tgt, n).len(), "k={k} m={m} n={n}");
        }
    }
}

pub fn chunk_map_fixes_one_block() {
    let p = Partition::new(vec![1; 7]).unwrap();
    assert_eq!(thm12_map(&p, 2, 3).unwrap(), p);
}

fn semi_standard_fillings(heights: &[u8]) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for &h in heights {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (1..=h).map(move |v| {
                    let mut x = w.clone();
                    x.push(v);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn fall_is_a_bijection_on_small_stacks() {
    let pairs = [(1, 1), (0, 1), (1, 2), (2, 1), (0, 2)];
    for cols in 1..=5 {
        for shape in stack_shapes(cols, 3) {
            let all: Vec<Filling> = semi_standard_fillings(shape.heights())
                .into_iter()
                .map(|c| Filling::new(shape.clone(), c).unwrap())
                .collect();
            for (p, q) in pairs {
                let src = Matrix01::of_sequence(&spq(p, q), 2).unwrap();
                let tgt = Matrix01::of_sequence(&spq(p + q, 0), 2).unwrap();
                let dom: Vec<&Filling> = all.iter().filter(|f| !filling_contains(f, &src)).collect();
                let cod: HashSet<&Filling> =
                    all.iter().filter(|f| !filling_contains(f, &tgt)).collect();
                let mut image = HashSet::new();
                for f in &dom {
                    let g = fall_bijection(f, p, q).unwrap();
                    assert!(cod.contains(&g), "{:?} -> {:?}", f.columns(), g.columns());
                    assert_eq!(g.row_counts(), f.row_counts());
                    assert_eq!(fall_inverse(&g, p, q).unwrap(), **f);
                    if p >= 1 {
                        for t in 1..=shape.rows() {
                            assert_eq!(is_t_falling(f, t), is_t_falling(&g, t), "{:?}", f.columns());
                        }
                    }
                    image.insert(g);
                }
                assert_eq!(image.len(), cod.len(), "{:?} p={p} q={q}", shape.heights());
            }
        }
    }
}

pub fn fall_counts_212_221() {
    let a = Matrix01::of_sequence(&[2, 1, 2], 2).unwrap();
    let b = Matrix01::of_sequence(&[2, 2, 1], 2).unwrap();
    for cols in 1..=4 {
        for shape in stack_shapes(cols, 3) {
            let fs = semi_standard_fillings(shape.heights());
            let count = |m: &Matrix01| {
                fs.iter()
                    .filter(|c| !filling_contains(&Filling::new(shape.clone(), c.to_vec()).unwrap(), m))
                    .count() as u64
            };
            let (ca, cb) = (count(&a), count(&b));
            assert_eq!(ca, cb, "{:?}", shape.heights());
            assert_eq!(count_fillings(&shape, &a, FillMode::SemiStandard).unwrap(), ca);
        }
    }
}

// all landscape words with the given letter counts
fn landscape_words(l: usize, k: usize, h: usize) -> Vec<Vec<Letter>> {
    fn go(rem: [usize; 3], w: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if rem == [0, 0, 0] {
            out.push(w.clone());
            return;
        }
        for (i, x) in [Letter::L, Letter::K, Letter::H].into_iter().enumerate() {
            if rem[i] == 0 || (x != Letter::K && w.last() == Some(&x)) {
                continue;
            }
            if (w.is_empty() && x != Letter::L) || (w.len() == 1 && x != Letter::K) {
                continue;
            }
            let mut r = rem;
            r[i] -= 1;
            w.push(x);
            go(r, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    go([l, k, h], &mut Vec::new(), &mut out);
    out
}

pub fn worked_landscape() {
    let p: Partition = "1231323142221".parse().unwrap();
    assert_eq!(landscape(&p, 3).unwrap().to_string(), "L3L3L3LHL");
}

pub fn shuffles_round_trip_and_keep_levels() {
    let ends_not_1: Vec<u8> = sigma_patterns(SigmaVariant::Minus, 0, 1, 0).0; // 12123
    let ends_not_3: Vec<u8> = sigma_patterns(SigmaVariant::Minus, 0, 1, 0).1; // 12321
    assert_eq!(ends_not_1, [1, 2, 1, 2, 3]);
    assert_eq!(ends_not_3, [1, 2, 3, 2, 1]);
    let all: Vec<Partition> = (0..=8).flat_map(iterate_partitions).collect();
    let checked: usize = all
        .par_iter()
        .map(|p| {
            let mut pairs = 0;
            for k in 2..=p.blocks() {
                let c = clusters(p, k).unwrap();
                let (l, kk, h) = c.word.counts();
                for w in landscape_words(l, kk, h) {
                    let target = LandscapeWord::new(w, k).unwrap();
                    let q = shuffle(p, &target).unwrap();
                    assert_eq!(landscape(&q, k).unwrap(), target);
                    assert_eq!(shuffle(&q, &c.word).unwrap(), *p);
                    for j in 1..=p.blocks() {
                        if j > k {
                            assert_eq!(
                                contains_at_level(p, &ends_not_1, j).unwrap(),
                                contains_at_level(&q, &ends_not_1, j).unwrap()
                            );
                        }
                        if j < k {
                            assert_eq!(
                                contains_at_level(p, &ends_not_3, j).unwrap(),
                                contains_at_level(&q, &ends_not_3, j).unwrap()
                            );
                        }
                    }
                    pairs += 1;
                }
            }
            pairs
        })
        .sum();
    assert!(checked > 10_000);
}

fn check_chain(map: HybridMap, max_n: usize) {
    let (src, tgt) = map.patterns();
    for n in 0..=max_n {
        let dom = avoiders(&src, n);
        let image: Vec<Partition> = dom
            .par_iter()
            .map(|p| {
                let q = hybrid_chain(p, &map).unwrap_or_else(|e| panic!("{map:?} {p}: {e}"));
                assert!(!contains(&q, &tgt));
                assert_eq!(hybrid_chain_inverse(&q, &map).unwrap(), *p, "{map:?}");
                q
            })
            .collect();
        let set: HashSet<&Partition> = image.iter().collect();
        assert_eq!(set.len(), dom.len(), "{map:?} n={n} not injective");
        assert_eq!(set.len() as u64, count_avoiders(&tgt, n).unwrap(), "{map:?} n={n}");
    }
}

pub fn sigma_chains_are_bijections() {
    for variant in [SigmaVariant::Minus, SigmaVariant::Plus] {
        for (p, q, r) in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            check_chain(HybridMap::Sigma { variant, p, q, r }, 9);
        }
    }
}

pub fn sigma_class_shares_counts() {
    let t = 1;
    let mut pats = Vec::new();
    for p in 0..=t {
        for q in 0..=t - p {
            let r = t - p - q;
            let (plus, minus) = sigma_patterns(SigmaVariant::Minus, p, q, r);
            pats.push(plus);
            pats.push(minus);
        }
    }
    assert_eq!(pats.len(), 6);
    let first: Vec<u64> = (1..=9).map(|n| count_avoiders(&pats[0], n).unwrap()).collect();
    for s in &pats[1..] {
        let v: Vec<u64> = (1..=9).map(|n| count_avoiders(s, n).unwrap()).collect();
        assert_eq!(v, first, "{s:?}");
    }
}

pub fn four_letter_chains_are_bijections() {
    let cases = [
        (Family124::FourOne, 1, 1),
        (Family124::OneFour, 1, 1),
        (Family124::OneTailFour, 0, 1),
        (Family124::FourOneTail, 0, 1),
        (Family124::FourOneTail, 1, 1),
    ];
    for (family, p, q) in cases {
        check_chain(HybridMap::Level124 { family, p, q }, 9);
    }
    let (s, t) = family_patterns(Family124::FourOne, 1, 1);
    assert_eq!((s, t), (vec![1, 2, 3, 2, 4, 1, 2], vec![1, 2, 3, 2, 4, 2, 1]));
}

pub fn four_letter_chains_reject_bad_parameters() {
    let map = HybridMap::Level124 { family: Family124::FourOne, p: 0, q: 1 };
    assert!(map.validate().is_err());
}

pub fn tails_match_the_recurrence() {
    let r4: Vec<String> = tails_of_rank(4).iter().map(Tail::to_string).collect();
    assert_eq!(
        r4,
        [
            "(1,1,1,1)", "(1,1,2)", "(1,2,1)", "(1,2,2)", "(1,3)", "(2,1,1)", "(2,1,2)",
            "(2,2,1)", "(2,2,2)", "(2,3)", "(3,1)", "(3,2)", "(3,3)", "(4)"
        ]
    );
    for n in 1..=9 {
        for k in 1..=n {
            let c = tails_ending(n, k as u8).len() as u64;
            assert_eq!(c, t_rec(n, k).unwrap(), "n={n} k={k}");
            assert_eq!(c, t_closed(n, k).unwrap(), "n={n} k={k}");
        }
        assert_eq!(tails_of_rank(n).len() as u64, catalan(n).unwrap());
    }
}

pub fn tail_step_is_a_bijection() {
    for n in 2..=9 {
        let lower = tails_of_rank(n - 1);
        for k in 1..=n as u8 {
            let mut image = HashSet::new();
            for s in tails_ending(n, k) {
                let t = tail_step(&s).unwrap();
                assert_eq!(t.rank(), n - 1);
                assert!(t.last() + 1 >= k, "{s} -> {t}");
                assert_eq!(tail_step_inverse(&t, k).unwrap(), s);
                assert!(image.insert(t));
            }
            let want = lower.iter().filter(|t| t.last() + 1 >= k).count();
            assert_eq!(image.len(), want, "n={n} k={k}");
        }
    }
}

pub fn tails_of_1123_avoiders() {
    for n in 1..=9 {
        let mut seen = HashSet::new();
        for p in avoiders(&[1, 1, 2, 3], n) {
            let (m, t) = tail_decompose(&p).unwrap();
            assert_eq!(t.max_symbol(), m);
            assert_eq!(t.rank(), n);
            assert_eq!(tail_compose(&t).unwrap(), p);
            assert!(seen.insert(t));
        }
        assert_eq!(seen.len(), tails_of_rank(n).len());
    }
}

fn rows_contain_12112(s: &[u8]) -> bool {
    let two: Vec<u8> = s.iter().copied().filter(|&v| v != 0).collect();
    contains(&two, &[1, 2, 1, 1, 2])
}

fn rear_and_middle(s: &[u8], x: u8, rear: bool) -> usize {
    let y = x + 1;
    let px: Vec<usize> = (0..s.len()).filter(|&j| s[j] == x).collect();
    let py: Vec<usize> = (0..s.len()).filter(|&j| s[j] == y).collect();
    if rear {
        let (f, l) = (py[0], py[py.len() - 1]);
        match px.iter().find(|&&c| f < c && c < l) {
            Some(&c) => py.iter().filter(|&&j| j > c).count(),
            None => 0,
        }
    } else if px.len() < 2 {
        0
    } else {
        let (a, b) = (px[px.len() - 2], px[px.len() - 1]);
        py.iter().filter(|&&j| a < j && j < b).count()
    }
}

pub fn pseudoswap_on_two_rows() {
    for n in 0..=8 {
        let all = words(n, 0, 2);
        let nested = |s: &Vec<u8>, outer: u8| {
            let inner = 3 - outer;
            let f = |r: u8| s.iter().position(|&v| v == r);
            let l = |r: u8| s.iter().rposition(|&v| v == r);
            match (f(outer), f(inner), l(inner), l(outer)) {
                (Some(a), Some(b), Some(c), Some(d)) => a < b && c < d,
                _ => false,
            }
        };
        let dom: Vec<&Vec<u8>> = all.iter().filter(|s| !rows_contain_12112(s) && nested(s, 1)).collect();
        let cod: HashSet<&Vec<u8>> =
            all.iter().filter(|s| !rows_contain_12112(s) && nested(s, 2)).collect();
        let mut image = HashSet::new();
        for s in &dom {
            let t = pseudoswap_columns(s, 1).unwrap();
            assert!(cod.contains(&t), "{s:?} -> {t:?}");
            assert_eq!(rear_and_middle(s, 1, true), rear_and_middle(&t, 1, false));
            assert_eq!(pseudoswap_inverse_columns(&t, 1).unwrap(), **s);
            image.insert(t);
        }
        assert_eq!(image.len(), cod.len(), "n={n}");
        for s in all.iter().filter(|s| !dom.contains(s)) {
            assert!(pseudoswap_columns(s, 1).is_err());
        }
    }
}

pub fn pseudoswap_example() {
    let s: Vec<u8> = "1331232431".bytes().map(|b| b - b'0').collect();
    let t = pseudoswap_columns(&s, 3).unwrap();
    let want: Vec<u8> = "1441242341".bytes().map(|b| b - b'0').collect();
    assert_eq!(t, want);
}

pub fn phi_is_a_bijection() {
    let mut steps = 0usize;
    for m in 1..=4u8 {
        for n in 1..=8 {
            // all 12112-avoiding (k, p, q)-sequences of this size, by (k, p, q)
            let mut sets: HashMap<(u8, u8, u8), HashSet<Vec<u8>>> = HashMap::new();
            for s in words(n, 1, m) {
                if (1..=m).any(|v| !s.contains(&v)) || contains(&s, &[1, 2, 1, 1, 2]) {
                    continue;
                }
                for k in 1..=m {
                    for p in k..=m {
                        if let Ok(a) = KpqMatrix::new(s.clone(), m, k, p) {
                            sets.entry((k, p, a.q())).or_default().insert(s.clone());
                        }
                    }
                }
            }
            for (&(k, p, q), dom) in &sets {
                if p >= q {
                    continue;
                }
                let cod = sets.get(&(k, p + 1, q)).cloned().unwrap_or_default();
                let mut image = HashSet::new();
                for s in dom {
                    let a = KpqMatrix::new(s.clone(), m, k, p).unwrap();
                    let b = phi(&a).unwrap_or_else(|e| panic!("{s:?} k={k} p={p}: {e}"));
                    assert!(!contains(b.as_slice(), &[1, 2, 1, 1, 2]), "{s:?}");
                    assert_eq!((b.k(), b.p(), b.q()), (k, p + 1, q));
                    assert_eq!(phi_inverse(&b).unwrap(), a);
                    image.insert(b.into_vec());
                    steps += 1;
                }
                assert_eq!(image, cod, "m={m} n={n} k={k} p={p} q={q}");
            }
        }
    }
    assert!(steps > 1000);
}

pub fn p12112_per_size_and_blocks() {
    for n in 0..=10 {
        let dom = avoiders(&[1, 2, 1, 1, 2], n);
        let image: Vec<Partition> = dom
            .par_iter()
            .map(|p| {
                let q = bijection_12112_12212(p).unwrap_or_else(|e| panic!("{p}: {e}"));
                assert!(!contains(&q, &[1, 2, 2, 1, 2]));
                assert_eq!((q.len(), q.blocks()), (p.len(), p.blocks()));
                assert_eq!(bijection_12212_12112(&q).unwrap(), *p);
                q
            })
            .collect();
        let set: HashSet<&Partition> = image.iter().collect();
        assert_eq!(set.len(), dom.len(), "n={n}");
        let by_m = count_avoiders_by_blocks(&[1, 2, 2, 1, 2], n).unwrap();
        for (m, &want) in by_m.iter().enumerate() {
            let got = image.iter().filter(|q| q.blocks() as usize == m).count() as u64;
            assert_eq!(got, want, "n={n} m={m}");
        }
    }
}
