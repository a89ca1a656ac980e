use necklace_core::counting::parikh_vectors;
use necklace_core::ranking::FixedContentRanker;
use necklace_core::unranking::{FixedContentUnranker, Unranker};
use necklace_oracle::{census, size_grid};
use num_bigint::BigUint;

#[test]
fn unrank_lists_the_census() {
    for s in size_grid(8, 4) {
        for q in 2..=3u8 {
            let c = census(&s, q).unwrap();
            let mut u = Unranker::new(&s, q);
            assert_eq!(u.count(), &BigUint::from(c.len()));
            for i in 0..c.len() {
                assert_eq!(u.unrank(&BigUint::from(i)).unwrap().cells(), c.cells(i), "{s} q={q} rank {i}");
            }
        }
    }
}

#[test]
fn fixed_content_round_trip() {
    for s in size_grid(8, 4) {
        for q in 2..=3u8 {
            let c = census(&s, q).unwrap();
            for p in parikh_vectors(s.total(), q as usize) {
                let members = c.with_content(&p);
                let mut u = FixedContentUnranker::new(&s, &p).unwrap();
                let mut r = FixedContentRanker::new(&s, &p).unwrap();
                assert_eq!(u.count(), &BigUint::from(members.len()), "{s} {p:?}");
                for (k, &i) in members.iter().enumerate() {
                    let w = c.word(i);
                    assert_eq!(r.rank(&w).unwrap(), BigUint::from(k));
                    assert_eq!(u.unrank(&BigUint::from(k)).unwrap(), w);
                }
            }
        }
    }
}

#[test]
fn prefix_counts_match_census() {
    for dims in [vec![6], vec![2, 3], vec![3, 2], vec![2, 2, 2]] {
        let s = necklace_core::SizeVec::new(&dims).unwrap();
        let c = census(&s, 2).unwrap();
        let mut u = Unranker::new(&s, 2);
        let ns = s.total() / s.last();
        for len in 0..=s.last() {
            let mut prefixes: Vec<Vec<u8>> = (0..c.len()).map(|i| c.cells(i)[..len * ns].to_vec()).collect();
            prefixes.dedup();
            for p in prefixes {
                let expected = (0..c.len()).filter(|&i| c.cells(i).starts_with(&p)).count();
                assert_eq!(u.prefix_count(&p).unwrap(), BigUint::from(expected), "{dims:?} {p:?}");
            }
        }
    }
}
