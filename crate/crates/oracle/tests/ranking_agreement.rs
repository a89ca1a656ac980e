use necklace_core::ranking::Ranker;
use necklace_core::counting;
use necklace_oracle::{census, size_grid};
use num_bigint::BigUint;

#[test]
fn ranks_match_census_on_small_sizes() {
    for s in size_grid(8, 4) {
        for q in 2..=3u8 {
            let c = census(&s, q).unwrap();
            assert_eq!(counting::count_necklaces(&s, q), BigUint::from(c.len()));
            let mut r = Ranker::new(&s, q);
            let (mut rl, mut ra) = (0usize, 0usize);
            for i in 0..c.len() {
                let w = c.word(i);
                let got = r.rank(&w).unwrap();
                assert_eq!(got.rn, BigUint::from(i), "{} rn", w.to_text());
                assert_eq!(got.rl, BigUint::from(rl), "{} rl", w.to_text());
                assert_eq!(got.ra, BigUint::from(ra), "{} ra", w.to_text());
                rl += c.is_lyndon(i) as usize;
                ra += c.is_atranslational(i) as usize;
            }
        }
    }
}
