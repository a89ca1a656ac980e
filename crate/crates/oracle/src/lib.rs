//! Brute-force reference implementations for multidimensional necklaces.
//!
//! Every quantity here is computed straight from the definitions by
//! enumerating all `q^N` words, using nothing from the core library beyond
//! words, translations and the word order. The results are exponential to
//! compute and serve as ground truth for the fast algorithms.
//!
//! Enumeration is guarded: sizes with more than [`DEFAULT_GUARD`] words are
//! rejected unless the limit is raised through the `NECKLACE_ORACLE_GUARD`
//! environment variable or an explicit guard argument.

use necklace_core::{Error, Result, SizeVec, Word};
use num_rational::Ratio;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::rc::Rc;

/// Default ceiling on the number of words an oracle call may enumerate.
pub const DEFAULT_GUARD: u128 = 1 << 24;

/// Environment variable overriding [`DEFAULT_GUARD`].
pub const GUARD_ENV: &str = "NECKLACE_ORACLE_GUARD";

/// Exact rational used for distances.
pub type Fraction = Ratio<u64>;

/// The active guard: the environment override if set and valid, else the default.
pub fn guard_limit() -> u128 {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GUARD)
}

/// Number of words of the given size, or `None` on overflow.
pub fn word_count(size: &SizeVec, q: u8) -> Option<u128> {
    (q as u128).checked_pow(size.total() as u32)
}

fn check_guard(size: &SizeVec, q: u8, guard: u128) -> Result<()> {
    match word_count(size, q) {
        Some(c) if c <= guard => Ok(()),
        _ => Err(Error::GuardExceeded(format!(
            "{q}^{} words of size {size} exceed the oracle guard {guard}",
            size.total()
        ))),
    }
}

/// Slice tables: every slice of the cross-section, numbered by its position
/// in the slice order, with the action of the cross-section translations.
struct Slices {
    /// cells of each slice, indexed by key
    cells: Vec<Vec<u8>>,
    /// `trans[h][k]`: key of slice `k` translated by cross-section element `h`
    trans: Vec<Vec<u32>>,
    /// coordinates of each cross-section translation
    coords: Vec<Vec<usize>>,
    /// key of each slice, by cells
    index: HashMap<Vec<u8>, u32>,
}

thread_local! {
    static SLICE_CACHE: std::cell::RefCell<HashMap<(Vec<usize>, u8), Rc<Slices>>> =
        std::cell::RefCell::new(HashMap::new());
}

/// Slice tables for the cross-section of `size`, built once per thread.
fn cached_slices(size: &SizeVec, q: u8) -> Rc<Slices> {
    let d = size.d();
    let key = (size.dims()[..d - 1].to_vec(), q);
    SLICE_CACHE.with(|c| {
        c.borrow_mut()
            .entry(key)
            .or_insert_with(|| Rc::new(Slices::new(size, q)))
            .clone()
    })
}

impl Slices {
    fn new(size: &SizeVec, q: u8) -> Slices {
        let d = size.d();
        if d == 1 {
            return Slices {
                cells: (1..=q).map(|s| vec![s]).collect(),
                trans: vec![(0..q as u32).collect()],
                coords: vec![vec![]],
                index: (1..=q).map(|s| (vec![s], s as u32 - 1)).collect(),
            };
        }
        let sub = SizeVec::new(&size.dims()[..d - 1]).unwrap();
        let cells_per = sub.total();
        let words = slices_in_order(&sub, q);
        let key: HashMap<Vec<u8>, u32> =
            words.iter().enumerate().map(|(i, w)| (w.cells().to_vec(), i as u32)).collect();
        let trans = (0..cells_per)
            .map(|h| words.iter().map(|w| key[w.translate_index(h).cells()]).collect())
            .collect();
        let coords = (0..cells_per)
            .map(|h| necklace_core::Translation::from_index(&sub, h).offsets().to_vec())
            .collect();
        Slices {
            cells: words.into_iter().map(|w| w.cells().to_vec()).collect(),
            trans,
            coords,
            index: key,
        }
    }

    fn cells_of(&self, keys: &[u32]) -> Vec<u8> {
        keys.iter().flat_map(|&k| self.cells[k as usize].iter().copied()).collect()
    }
}

/// Slot of a slice: its class representative and the smallest translation
/// taking the slice to it.
pub fn slice_slot(slice: &Word) -> (Word, usize) {
    let canon = canonical_form(slice);
    let g = (0..slice.size().total())
        .find(|&g| slice.translate_index(g) == canon)
        .unwrap();
    (canon, g)
}

/// Order of slices inside a larger word: by class, then by offset.
pub fn compare_slices(a: &Word, b: &Word) -> Ordering {
    let (ca, ga) = slice_slot(a);
    let (cb, gb) = slice_slot(b);
    ca.compare(&cb).unwrap().then(ga.cmp(&gb))
}

/// Every slice of size `sub` over `q` symbols, in slice order.
pub fn slices_in_order(sub: &SizeVec, q: u8) -> Vec<Word> {
    let cells_per = sub.total();
    let count = (q as usize).pow(cells_per as u32);
    let mut keyed: Vec<((Word, usize), Word)> = (0..count)
        .map(|mut x| {
            let cells = (0..cells_per)
                .map(|_| {
                    let s = (x % q as usize) as u8 + 1;
                    x /= q as usize;
                    s
                })
                .collect();
            let w = Word::new(sub.clone(), q, cells).unwrap();
            (slice_slot(&w), w)
        })
        .collect();
    keyed.sort_by(|(a, _), (b, _)| a.0.compare(&b.0).unwrap().then(a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, w)| w).collect()
}

/// Outcome of comparing a word with all of its translates.
struct Classification {
    canonical: bool,
    aperiodic: bool,
    atranslational: bool,
}

fn classify(keys: &[u32], slices: &Slices, buf: &mut Vec<u32>) -> Classification {
    let m = keys.len();
    let mut out = Classification { canonical: true, aperiodic: true, atranslational: true };
    for (h, table) in slices.trans.iter().enumerate() {
        let h_nonzero = slices.coords[h].iter().filter(|&&c| c != 0).count();
        for t in 0..m {
            if h == 0 && t == 0 {
                continue;
            }
            buf.clear();
            buf.extend((0..m).map(|i| table[keys[(i + t) % m] as usize]));
            match buf.as_slice().cmp(keys) {
                Ordering::Less => {
                    out.canonical = false;
                    return out;
                }
                Ordering::Equal => {
                    out.atranslational = false;
                    if h_nonzero + usize::from(t != 0) == 1 {
                        out.aperiodic = false;
                    }
                }
                Ordering::Greater => {}
            }
        }
    }
    out
}

const LYNDON: u8 = 1;
const ATRANSLATIONAL: u8 = 2;

/// All necklaces of one size and alphabet, in increasing order of canonical form.
#[derive(Clone, Debug)]
pub struct Census {
    size: SizeVec,
    q: u8,
    cells: Vec<u8>,
    flags: Vec<u8>,
}

/// Enumerate the necklaces of `size` over `q` symbols under the active guard.
pub fn census(size: &SizeVec, q: u8) -> Result<Census> {
    census_with_guard(size, q, guard_limit())
}

/// [`census`] with an explicit guard.
pub fn census_with_guard(size: &SizeVec, q: u8, guard: u128) -> Result<Census> {
    if q == 0 {
        return Err(Error::InvalidArgument("alphabet size must be at least 1".into()));
    }
    check_guard(size, q, guard)?;
    let slices = Slices::new(size, q);
    let base = slices.cells.len() as u32;
    let m = size.last();
    let mut keys = vec![0u32; m];
    let mut buf = Vec::with_capacity(m);
    let mut census = Census { size: size.clone(), q, cells: Vec::new(), flags: Vec::new() };
    loop {
        let c = classify(&keys, &slices, &mut buf);
        if c.canonical {
            census.cells.extend(slices.cells_of(&keys));
            let mut f = 0;
            if c.aperiodic {
                f |= LYNDON;
            }
            if c.atranslational {
                f |= ATRANSLATIONAL;
            }
            census.flags.push(f);
        }
        // next key tuple in lexicographic order
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(census);
            }
            i -= 1;
            keys[i] += 1;
            if keys[i] < base {
                break;
            }
            keys[i] = 0;
        }
    }
}

impl Census {
    pub fn size(&self) -> &SizeVec {
        &self.size
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    /// Number of necklaces.
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// The `i`-th necklace in increasing order.
    pub fn word(&self, i: usize) -> Word {
        let n = self.size.total();
        Word::new(self.size.clone(), self.q, self.cells[i * n..(i + 1) * n].to_vec()).unwrap()
    }

    pub fn cells(&self, i: usize) -> &[u8] {
        let n = self.size.total();
        &self.cells[i * n..(i + 1) * n]
    }

    pub fn is_lyndon(&self, i: usize) -> bool {
        self.flags[i] & LYNDON != 0
    }

    pub fn is_atranslational(&self, i: usize) -> bool {
        self.flags[i] & ATRANSLATIONAL != 0
    }

    /// All necklaces in increasing order.
    pub fn necklaces(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).map(move |i| self.word(i))
    }

    /// Lyndon (aperiodic) necklaces in increasing order.
    pub fn lyndon(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).filter(move |&i| self.is_lyndon(i)).map(move |i| self.word(i))
    }

    /// Atranslational necklaces in increasing order.
    pub fn atranslational(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).filter(move |&i| self.is_atranslational(i)).map(move |i| self.word(i))
    }

    pub fn lyndon_count(&self) -> usize {
        (0..self.len()).filter(|&i| self.is_lyndon(i)).count()
    }

    pub fn atranslational_count(&self) -> usize {
        (0..self.len()).filter(|&i| self.is_atranslational(i)).count()
    }

    /// Position of a necklace in the sorted list, if present.
    pub fn position(&self, w: &Word) -> Option<usize> {
        if w.size() != &self.size || w.q() != self.q {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word(mid).compare(w).unwrap() {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Ranks of a necklace among all necklaces, the Lyndon sublist and the
    /// atranslational sublist (each the number of strictly smaller entries).
    pub fn ranks(&self, w: &Word) -> Result<(usize, usize, usize)> {
        let i = self.position(w).ok_or(Error::NotCanonical)?;
        let rl = (0..i).filter(|&j| self.is_lyndon(j)).count();
        let ra = (0..i).filter(|&j| self.is_atranslational(j)).count();
        Ok((i, rl, ra))
    }

    /// Indices of the necklaces with the given Parikh vector, in increasing order.
    pub fn with_content(&self, p: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&i| content(self.cells(i), self.q) == p).collect()
    }
}

fn content(cells: &[u8], q: u8) -> Vec<usize> {
    let mut p = vec![0; q as usize];
    for &c in cells {
        p[c as usize - 1] += 1;
    }
    p
}

/// Rank of a canonical word: its position in the census.
pub fn oracle_rank(w: &Word, census: &Census) -> Result<usize> {
    census.position(w).ok_or(Error::NotCanonical)
}

/// Every word of the given size, in linear-index counting order.
pub fn all_words(size: &SizeVec, q: u8) -> Result<impl Iterator<Item = Word>> {
    check_guard(size, q, guard_limit())?;
    let total = word_count(size, q).unwrap() as u64;
    let size = size.clone();
    let n = size.total();
    Ok((0..total).map(move |mut x| {
        let cells = (0..n)
            .map(|_| {
                let s = (x % q as u64) as u8 + 1;
                x /= q as u64;
                s
            })
            .collect();
        Word::new(size.clone(), q, cells).unwrap()
    }))
}

/// Smallest translate of a word, by trying every translation.
pub fn canonical_form(w: &Word) -> Word {
    (0..w.size().total())
        .map(|g| w.translate_index(g))
        .min_by(|a, b| a.compare(b).unwrap())
        .unwrap()
}

/// Number of necklaces, by building every orbit explicitly.
pub fn orbit_count(size: &SizeVec, q: u8) -> Result<usize> {
    check_guard(size, q, guard_limit())?;
    let mut seen = std::collections::HashSet::new();
    let mut orbits = 0;
    for w in all_words(size, q)? {
        if seen.contains(w.cells()) {
            continue;
        }
        orbits += 1;
        for g in 0..size.total() {
            seen.insert(w.translate_index(g).cells().to_vec());
        }
    }
    Ok(orbits)
}

/// Multiset of all cyclic subwords of all sizes `m ≤ n` at all positions:
/// `N` sizes times `N` positions.
pub fn subword_multiset(w: &Word) -> HashMap<(Vec<usize>, Vec<u8>), u64> {
    let dims = w.dims().to_vec();
    let mut sizes = vec![vec![]];
    for &n in &dims {
        sizes = sizes
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                (1..=n).map(move |m| {
                    let mut s = s.clone();
                    s.push(m);
                    s
                })
            })
            .collect();
    }
    let positions: Vec<Vec<usize>> = (0..w.size().total())
        .map(|g| necklace_core::Translation::from_index(w.size(), g).offsets().to_vec())
        .collect();
    let mut out = HashMap::new();
    for m in &sizes {
        for p in &positions {
            let sub = w.subword(p, m).unwrap();
            *out.entry((m.clone(), sub.cells().to_vec())).or_insert(0) += 1;
        }
    }
    out
}

/// Overlap distance `1 − |A ∩ B| / N²` by literal multiset intersection.
pub fn oracle_distance(a: &Word, b: &Word) -> Result<Fraction> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch("distance needs words of equal size".into()));
    }
    let ma = subword_multiset(a);
    let mb = subword_multiset(b);
    let common: u64 = ma.iter().map(|(k, &c)| c.min(mb.get(k).copied().unwrap_or(0))).sum();
    let n2 = (a.size().total() as u64).pow(2);
    Ok(Fraction::new(n2 - common, n2))
}

/// Largest distance from any necklace in the census to its nearest centre.
pub fn oracle_max_distance(centres: &[Word], census: &Census) -> Result<Fraction> {
    if centres.is_empty() {
        return Err(Error::InvalidArgument("no centres given".into()));
    }
    let cm: Vec<_> = centres.iter().map(subword_multiset).collect();
    let n2 = (census.size().total() as u64).pow(2);
    let mut worst = Fraction::from_integer(0);
    for w in census.necklaces() {
        let mw = subword_multiset(&w);
        let best = cm
            .iter()
            .map(|c| {
                let common: u64 = mw.iter().map(|(k, &x)| x.min(c.get(k).copied().unwrap_or(0))).sum();
                Fraction::new(n2 - common, n2)
            })
            .min()
            .unwrap();
        worst = worst.max(best);
    }
    Ok(worst)
}

/// All size vectors with at most `max_d` dimensions, every dimension at
/// least 2, and at most `max_total` cells, plus the single-cell size `(1)`.
/// Sizes are listed by cell count, then dimension count, then lexicographically.
pub fn size_grid(max_total: usize, max_d: usize) -> Vec<SizeVec> {
    fn rec(prefix: &mut Vec<usize>, budget: usize, max_d: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == max_d {
            return;
        }
        for f in 2..=budget {
            prefix.push(f);
            rec(prefix, budget / f, max_d, out);
            prefix.pop();
        }
    }
    let mut dims = vec![vec![1]];
    rec(&mut Vec::new(), max_total, max_d, &mut dims);
    dims.sort_by_key(|d| (d.iter().product::<usize>(), d.len(), d.clone()));
    dims.into_iter().map(|d| SizeVec::new(&d).unwrap()).collect()
}

/// Tile a word periodically up to size `n` (each `nᵢ` a multiple of the word's size).
pub fn tile(v: &Word, n: &SizeVec) -> Result<Word> {
    if !n.divisible_by(v.size()) {
        return Err(Error::InvalidArgument(format!("{} does not tile {n}", v.size())));
    }
    let cells = (0..n.total())
        .map(|i| {
            let c = necklace_core::Translation::from_index(n, i);
            let reduced: Vec<usize> = c.offsets().iter().zip(v.dims()).map(|(a, b)| a % b).collect();
            let j = necklace_core::Translation::new(v.size(), &reduced).unwrap().index();
            v.cells()[j]
        })
        .collect();
    Word::new(n.clone(), v.q(), cells)
}

/// `|T(w, f)|`: words of size `f` whose canonical form, tiled to the size of
/// `w`, is smaller than `w`.
pub fn oracle_t(w: &Word, f: &SizeVec) -> Result<u64> {
    let mut count = 0;
    for v in all_words(f, w.q())? {
        if tile(&canonical_form(&v), w.size())?.compare(w)?.is_lt() {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of slices strictly greater than slice `j` of `w` in the slice order.
pub fn oracle_ns(w: &Word, j: usize) -> u64 {
    let slices = cached_slices(w.size(), w.q());
    let key = slice_keys(w, &slices)[j];
    (slices.cells.len() - 1 - key as usize) as u64
}

fn slice_keys(w: &Word, slices: &Slices) -> Vec<u32> {
    w.slices()
        .map(|s| slices.index[s])
        .collect()
}

/// `|β(w, i, j)|` by enumeration: words of `i` slices whose first `j` slices
/// are those of `w` and whose every suffix, under every cross-section
/// translation, is strictly greater than the prefix of `w` of equal length.
pub fn oracle_beta(w: &Word, i: usize, j: usize) -> u64 {
    let slices = cached_slices(w.size(), w.q());
    let k = slice_keys(w, &slices);
    let ns = slices.trans.len();
    // undecided[(start, h)]: the translated suffix still equals the prefix
    fn rec(t: usize, i: usize, j: usize, k: &[u32], s: &Slices, ns: usize, undecided: Vec<bool>) -> u64 {
        if t == i {
            return u64::from(undecided.iter().all(|u| !u));
        }
        let choices: Vec<u32> = if t < j { vec![k[t]] } else { (0..s.cells.len() as u32).collect() };
        let mut total = 0;
        'next: for y in choices {
            let mut und = undecided.clone();
            for start in 0..=t {
                for h in 0..ns {
                    if !und[start * ns + h] {
                        continue;
                    }
                    match s.trans[h][y as usize].cmp(&k[t - start]) {
                        Ordering::Less => continue 'next,
                        Ordering::Greater => und[start * ns + h] = false,
                        Ordering::Equal => {}
                    }
                }
            }
            total += rec(t + 1, i, j, k, s, ns, und);
        }
        total
    }
    // a suffix starting at `start` is only compared once `t ≥ start`
    let undecided = vec![true; i * ns];
    rec(0, i, j, &k, &slices, ns, undecided)
}

/// The sets `B(w, g, j)` for a one-dimensional word: every word `v` below
/// `w`'s necklace falls into the set where `g` is the smallest rotation with
/// `rot(v, g) < w` and `j` is the common prefix length of `rot(v, g)` and `w`.
pub fn oracle_b_sets_1d(w: &Word) -> Result<HashMap<(usize, usize), u64>> {
    if w.size().d() != 1 {
        return Err(Error::InvalidArgument("B sets are enumerated for one-dimensional words".into()));
    }
    let n = w.size().total();
    let mut out = HashMap::new();
    for v in all_words(w.size(), w.q())? {
        if let Some(g) = (0..n).find(|&g| v.translate_index(g).cells() < w.cells()) {
            let r = v.translate_index(g);
            let j = r.cells().iter().zip(w.cells()).take_while(|(a, b)| a == b).count();
            *out.entry((g, j)).or_insert(0) += 1;
        }
    }
    Ok(out)
}
