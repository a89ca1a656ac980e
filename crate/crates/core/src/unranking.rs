//! Unranking: the necklace with a given rank.
//!
//! With `R(x)` the number of necklaces whose canonical form is strictly
//! smaller than an arbitrary word `x`, the necklace of rank `i` is the
//! largest word `w` with `R(w) ≤ i`. It is built slice by slice: with the
//! prefix `P` fixed, the next slice is the largest slot `y` with
//! `R(P : y : 1…1) ≤ i`, where `1…1` is the smallest possible continuation.
//! Slots are searched by bisection, first over slice classes (each probe
//! unranks one dimension down) and then over the distinct offsets of the
//! chosen class.

use crate::counting::{count_fc_necklaces, count_necklaces};
use crate::error::{Error, Result};
use crate::order::SliceClass;
use crate::ranking::{FixedContentRanker, Ranker};
use crate::word::{SizeVec, Word};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Access to the slice classes of a size by their rank, unranking one
/// dimension down on demand.
struct SliceIndex {
    sub: Vec<usize>,
    count: BigUint,
    lower: Option<Box<Unranker>>,
    cache: HashMap<BigUint, Vec<u8>>,
}

impl SliceIndex {
    fn new(size: &SizeVec, q: u8) -> Self {
        let d = size.d();
        let sub = size.dims()[..d - 1].to_vec();
        let (count, lower) = if d == 1 {
            (BigUint::from(q), None)
        } else {
            let s = SizeVec::new(&sub).unwrap();
            (count_necklaces(&s, q), Some(Box::new(Unranker::new(&s, q))))
        };
        SliceIndex {
            sub,
            count,
            lower,
            cache: HashMap::new(),
        }
    }

    /// Canonical form of the `k`-th slice class.
    fn class(&mut self, k: &BigUint) -> Vec<u8> {
        if let Some(c) = self.cache.get(k) {
            return c.clone();
        }
        let c = match self.lower.as_mut() {
            None => vec![u8::try_from(k + 1u32).unwrap()],
            Some(u) => u.unrank(k).unwrap().cells().to_vec(),
        };
        self.cache.insert(k.clone(), c.clone());
        c
    }

    /// Build the slices of the necklace of rank `i` under the counting
    /// function `below`.
    fn build(&mut self, m: usize, i: &BigUint, below: &mut dyn FnMut(&[u8]) -> BigUint) -> Vec<u8> {
        let ns: usize = self.sub.iter().product();
        let mut prefix: Vec<u8> = Vec::with_capacity(ns * m);
        for t in 0..m {
            let fill = ns * (m - t - 1);
            let probe = |prefix: &[u8], slice: &[u8], below: &mut dyn FnMut(&[u8]) -> BigUint| {
                let mut x = prefix.to_vec();
                x.extend_from_slice(slice);
                x.extend(std::iter::repeat(1).take(fill));
                below(&x) <= *i
            };
            // largest class k whose smallest member still fits
            let (mut lo, mut hi) = (BigUint::zero(), self.count.clone());
            while &lo + 1u32 < hi {
                let mid: BigUint = (&lo + &hi) >> 1;
                let c = self.class(&mid);
                if probe(&prefix, &c, below) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let canonical = self.class(&lo);
            let slice = if self.sub.is_empty() {
                canonical
            } else {
                let cls = SliceClass::new(&self.sub, canonical);
                let offs = cls.offsets();
                let (mut a, mut b) = (0usize, offs.len());
                while a + 1 < b {
                    let mid = (a + b) / 2;
                    if probe(&prefix, &cls.member(&self.sub, offs[mid]), below) {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                cls.member(&self.sub, offs[a])
            };
            prefix.extend(slice);
        }
        prefix
    }
}

/// Unranking context for one size and alphabet.
pub struct Unranker {
    size: SizeVec,
    q: u8,
    total: BigUint,
    ranker: Ranker,
    slices: SliceIndex,
}

impl Unranker {
    pub fn new(size: &SizeVec, q: u8) -> Self {
        Unranker {
            size: size.clone(),
            q,
            total: count_necklaces(size, q),
            ranker: Ranker::new(size, q),
            slices: SliceIndex::new(size, q),
        }
    }

    /// Number of necklaces of this size.
    pub fn count(&self) -> &BigUint {
        &self.total
    }

    /// The necklace of (zero-based) rank `i`.
    pub fn unrank(&mut self, i: &BigUint) -> Result<Word> {
        if i >= &self.total {
            return Err(Error::OutOfRange {
                index: i.to_string(),
                count: self.total.to_string(),
            });
        }
        let ranker = &mut self.ranker;
        let cells = self.slices.build(self.size.last(), i, &mut |x| ranker.necklaces_below(x));
        Word::new(self.size.clone(), self.q, cells)
    }

    /// Number of necklaces whose canonical form begins with the given slices.
    pub fn prefix_count(&mut self, prefix: &[u8]) -> Result<BigUint> {
        prefix_count_with(&self.size, self.q, prefix, &mut |x| self.ranker.necklaces_below(x))
    }
}

fn prefix_count_with(
    size: &SizeVec,
    q: u8,
    prefix: &[u8],
    below: &mut dyn FnMut(&[u8]) -> BigUint,
) -> Result<BigUint> {
    let ns = size.total() / size.last();
    if prefix.len() % ns != 0 || prefix.len() > size.total() {
        return Err(Error::InvalidArgument(format!(
            "a prefix must consist of whole slices of {ns} cells, at most {}",
            size.last()
        )));
    }
    if let Some(&s) = prefix.iter().find(|&&s| s == 0 || s > q) {
        return Err(Error::InvalidSymbol(format!("symbol {s} outside 1..={q}")));
    }
    let rest = size.total() - prefix.len();
    let mut lo = prefix.to_vec();
    lo.extend(std::iter::repeat(1).take(rest));
    let mut hi = prefix.to_vec();
    hi.extend(std::iter::repeat(q).take(rest));
    let hi_is_necklace = crate::order::is_canonical_cells(size.dims(), &hi);
    let count = below(&hi) + if hi_is_necklace { BigUint::one() } else { BigUint::zero() };
    Ok(count - below(&lo))
}

/// Number of necklaces of size `size` whose canonical form begins with `prefix`
/// (whole slices in linear-index order).
pub fn prefix_count(prefix: &[u8], size: &SizeVec, q: u8) -> Result<BigUint> {
    let mut r = Ranker::new(size, q);
    prefix_count_with(size, q, prefix, &mut |x| r.necklaces_below(x))
}

/// The necklace of rank `i` among all necklaces of `size` over `q` symbols.
pub fn unrank(i: &BigUint, size: &SizeVec, q: u8) -> Result<Word> {
    Unranker::new(size, q).unrank(i)
}

/// Unranking restricted to necklaces with one Parikh vector.
pub struct FixedContentUnranker {
    size: SizeVec,
    total: BigUint,
    ranker: FixedContentRanker,
    slices: SliceIndex,
}

impl FixedContentUnranker {
    pub fn new(size: &SizeVec, content: &[usize]) -> Result<Self> {
        let ranker = FixedContentRanker::new(size, content)?;
        let q = content.len() as u8;
        Ok(FixedContentUnranker {
            size: size.clone(),
            total: count_fc_necklaces(size, content)?,
            ranker,
            slices: SliceIndex::new(size, q),
        })
    }

    pub fn count(&self) -> &BigUint {
        &self.total
    }

    /// The necklace of rank `i` among those with this content.
    pub fn unrank(&mut self, i: &BigUint) -> Result<Word> {
        if i >= &self.total {
            return Err(Error::OutOfRange {
                index: i.to_string(),
                count: self.total.to_string(),
            });
        }
        let ranker = &mut self.ranker;
        let cells = self.slices.build(self.size.last(), i, &mut |x| ranker.necklaces_below(x));
        Word::new(self.size.clone(), self.ranker.content().len() as u8, cells)
    }

    /// Number of necklaces with this content whose canonical form begins with `prefix`.
    pub fn prefix_count(&mut self, prefix: &[u8]) -> Result<BigUint> {
        let q = self.ranker.content().len() as u8;
        prefix_count_with(&self.size, q, prefix, &mut |x| self.ranker.necklaces_below(x))
    }
}

/// The necklace of rank `i` among those of `size` with Parikh vector `p`.
pub fn unrank_fixed_content(i: &BigUint, size: &SizeVec, p: &[usize]) -> Result<Word> {
    FixedContentUnranker::new(size, p)?.unrank(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(d: &[usize]) -> SizeVec {
        SizeVec::new(d).unwrap()
    }

    #[test]
    fn documented_positions() {
        let s = size(&[2, 2]);
        assert_eq!(unrank(&BigUint::from(4u32), &s, 2).unwrap().to_text(), "[ab;ba]");
        assert_eq!(unrank(&BigUint::zero(), &s, 2).unwrap().to_text(), "[aa;aa]");
        assert!(unrank(&BigUint::from(7u32), &s, 2).is_err());
    }

    #[test]
    fn prefix_counts() {
        assert_eq!(prefix_count(&[1, 1], &size(&[2, 2]), 2).unwrap(), BigUint::from(3u32));
        assert_eq!(prefix_count(&[], &size(&[2, 2]), 2).unwrap(), BigUint::from(7u32));
        assert_eq!(prefix_count(&[2], &size(&[2]), 2).unwrap(), BigUint::one());
    }

    #[test]
    fn fixed_content_examples() {
        let s = size(&[4]);
        assert_eq!(unrank_fixed_content(&BigUint::zero(), &s, &[2, 2]).unwrap().to_text(), "aabb");
        assert_eq!(unrank_fixed_content(&BigUint::one(), &s, &[2, 2]).unwrap().to_text(), "abab");
        assert_eq!(unrank_fixed_content(&BigUint::zero(), &s, &[4, 0]).unwrap().to_text(), "aaaa");
        assert!(unrank_fixed_content(&BigUint::one(), &s, &[4, 0]).is_err());
    }
}
