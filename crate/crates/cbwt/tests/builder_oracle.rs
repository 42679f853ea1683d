mod common;

use cbwt::builder::{build_collection_observed, build_single_dollar};
use cbwt::oracle::{brute_count, brute_index};
use cbwt::{build_collection, build_single, extend_with_text, RtsSymbol, Symbol, TextCollection};
use common::*;
use rand::{Rng, SeedableRng};

#[test]
fn single_dollar_texts_match_brute() {
    let idx = build_single_dollar::<u32>(&[Symbol::Dollar]).unwrap();
    assert_eq!(idx.ft(), vec![RtsSymbol::Dollar]);
    assert_eq!(idx.lt(), vec![RtsSymbol::Dollar]);
    assert_eq!(idx.lcp(), vec![0]);

    let idx = build_single_dollar(&[Symbol::Plain(2u32), Symbol::Dollar]).unwrap();
    assert_eq!(idx.ft(), vec![RtsSymbol::Dollar, RtsSymbol::Count(0)]);
    assert_eq!(idx.lt(), vec![RtsSymbol::Count(0), RtsSymbol::Dollar]);
    assert_eq!(idx.lcp(), vec![0, 0]);

    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let len = rng.gen_range(1..=10);
        let mut r: Vec<Symbol<u32>> = (0..len).map(|_| Symbol::Plain(rng.gen_range(0..5))).collect();
        r.push(Symbol::Dollar);
        let idx = build_single_dollar(&r).unwrap();
        let b = brute_index(&TextCollection::with_terminators(vec![r.clone()]).unwrap()).unwrap();
        assert_eq!(diff_against_brute(&idx, &b), None, "text {r:?}");
    }
}

#[test]
fn misplaced_dollar_is_rejected() {
    assert!(build_single_dollar(&[Symbol::Dollar, Symbol::Plain(1u32)]).is_err());
    assert!(build_single_dollar(&[Symbol::Plain(1u32)]).is_err());
    assert!(build_single_dollar::<u32>(&[Symbol::Dollar, Symbol::Dollar]).is_err());
}

#[test]
fn single_texts_match_brute() {
    let idx = build_single(&[7u32]).unwrap();
    assert_eq!(idx.ft(), vec![RtsSymbol::Count(1)]);
    assert_eq!(idx.lt(), vec![RtsSymbol::Count(1)]);
    assert_eq!(idx.lcp(), vec![0]);
    for t in ["512", "44", "4478", "5363", "73152", "1212", "333", "121121"] {
        let t = digits(t);
        let idx = build_single(&t).unwrap();
        assert_eq!(diff_against_brute(&idx, &brute(std::slice::from_ref(&t))), None, "text {t:?}");
    }
}

#[test]
fn rotation_of_an_indexed_text_takes_the_equal_class_path() {
    let mut idx = build_single(&digits("512")).unwrap();
    extend_with_text(&mut idx, &digits("125")).unwrap();
    assert_eq!(diff_against_brute(&idx, &brute(&[digits("512"), digits("125")])), None);
}

#[test]
fn collection_is_independent_of_input_order() {
    let a = build_collection(&running_example()).unwrap();
    let mut rev = running_example();
    rev.reverse();
    let b = build_collection(&rev).unwrap();
    assert_eq!(a.ft(), b.ft());
    assert_eq!(a.lt(), b.lt());
    assert_eq!(a.lcp(), b.lcp());
}

#[test]
fn empty_inputs_are_rejected() {
    assert!(build_collection::<u32>(&[]).is_err());
    assert!(build_collection(&[vec![1u32], vec![]]).is_err());
    assert!(build_single::<u32>(&[]).is_err());
}

#[test]
fn random_collections_match_brute() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    for round in 0..400 {
        let sigma = rng.gen_range(1..=6);
        let texts = random_collection(&mut rng, sigma);
        let idx = build_collection(&texts).unwrap();
        if let Some(d) = diff_against_brute(&idx, &brute(&texts)) {
            panic!("round {round}, texts {texts:?}: {d}");
        }
        assert!(idx.e_marks().iter().all(|&b| b == 0));
    }
}

#[test]
fn partial_indexes_answer_counts() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(21);
    let patterns = all_patterns(3, 4);
    for _ in 0..40 {
        let texts = random_collection(&mut rng, 4);
        let mut order: Vec<usize> = (0..texts.len()).collect();
        order.sort_by_key(|&k| texts[k].len());
        let mut step = 0;
        build_collection_observed(&texts, |partial| {
            step += 1;
            let included: Vec<Vec<u32>> = order[..step].iter().map(|&k| texts[k].clone()).collect();
            let tc = TextCollection::new(included).unwrap();
            assert!(partial.e_marks().iter().all(|&b| b == 0));
            for p in &patterns {
                assert_eq!(partial.count(p).unwrap(), brute_count(&tc, p).unwrap(), "texts {texts:?} step {step} p {p:?}");
            }
        })
        .unwrap();
    }
}

#[test]
fn real_valued_texts_index_like_their_ranks() {
    let reals = vec![vec![0.5f64, -1.25, 3.0], vec![2.0, 2.0, 7.5, 0.0]];
    let ints = vec![vec![2u32, 0, 4], vec![3, 3, 5, 1]];
    let a = build_collection(&reals).unwrap();
    let b = build_collection(&ints).unwrap();
    assert_eq!(a.ft(), b.ft());
    assert_eq!(a.lt(), b.lt());
    assert_eq!(a.lcp(), b.lcp());
    assert_eq!(a.count(&[1.0, 0.0, 2.0]).unwrap(), b.count(&[1u32, 0, 2]).unwrap());
    assert!(build_collection(&[vec![1.0, f64::NAN]]).is_err());
}

#[test]
fn rational_texts_index_like_their_ranks() {
    use num_rational::Ratio;
    let r = |a: i64, b: i64| Ratio::new(a, b);
    let ratios = vec![vec![r(1, 3), r(-1, 2), r(2, 3)], vec![r(1, 2), r(1, 2), r(5, 4), r(-2, 1)]];
    let ints = vec![vec![2u32, 1, 4], vec![3, 3, 5, 0]];
    let a = build_collection(&ratios).unwrap();
    let b = build_collection(&ints).unwrap();
    assert_eq!((a.ft(), a.lt(), a.lcp()), (b.ft(), b.lt(), b.lcp()));
    assert_eq!(a.count(&[r(0, 1), r(7, 2)]).unwrap(), b.count(&[0u32, 1]).unwrap());
}
