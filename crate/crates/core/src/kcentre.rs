//! Overlap distance between necklaces and k-centre constructions.
//!
//! Every word of size `n` has `N²` cyclic subwords: one for each of the `N`
//! size vectors `m ≤ n` at each of the `N` positions. The overlap distance of
//! two necklaces is `1 − |A ∩ B| / N²` for their subword multisets `A`, `B`,
//! a metric on necklaces.
//!
//! The k-centre constructions cut de Bruijn sequences into overlapping
//! windows so that every word of some length `λ` (or every block of some
//! size) occurs in at least one centre. Any necklace then shares a subword of
//! that size with its nearest centre, which bounds the distance.

use crate::counting::count_necklaces;
use crate::error::{Error, Result};
use crate::generation::enumerate;
use crate::group::Group;
use crate::numtheory::divisor_vectors;
use crate::word::{SizeVec, Word};
use num_bigint::BigUint;
use num_rational::Ratio;
use std::collections::{HashMap, HashSet};

/// Exact rational used for distances and bounds.
pub type ExactRatio = Ratio<u64>;

/// Largest de Bruijn sequence the constructions will build.
pub const DE_BRUIJN_GUARD: u128 = 1 << 24;

/// Multiset of all `N²` cyclic subwords of a word, keyed by subword size and cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubwordMultiset {
    counts: HashMap<(Vec<usize>, Vec<u8>), u64>,
    total: u64,
}

impl SubwordMultiset {
    pub fn new(w: &Word) -> Self {
        let dims = w.dims();
        let g = Group::new(dims);
        let n = g.order();
        let positions: Vec<Vec<usize>> = (0..n).map(|i| g.coords(i)).collect();
        let mut counts = HashMap::new();
        for mi in 0..n {
            // size vector with entries 1..=n_i
            let m: Vec<usize> = g.coords(mi).iter().map(|c| c + 1).collect();
            let mg = Group::new(&m);
            let offsets: Vec<Vec<usize>> = (0..mg.order()).map(|j| mg.coords(j)).collect();
            for p in &positions {
                let cells: Vec<u8> = offsets
                    .iter()
                    .map(|o| {
                        let c: Vec<usize> = (0..dims.len()).map(|i| (p[i] + o[i]) % dims[i]).collect();
                        w.cells()[g.index(&c)]
                    })
                    .collect();
                *counts.entry((m.clone(), cells)).or_insert(0) += 1;
            }
        }
        SubwordMultiset {
            counts,
            total: (n * n) as u64,
        }
    }

    /// Total multiplicity, `N²`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Multiplicity of a subword of the given size.
    pub fn count(&self, size: &[usize], cells: &[u8]) -> u64 {
        self.counts.get(&(size.to_vec(), cells.to_vec())).copied().unwrap_or(0)
    }

    /// Size of the multiset intersection.
    pub fn common(&self, other: &SubwordMultiset) -> u64 {
        self.counts
            .iter()
            .map(|(k, &c)| c.min(other.counts.get(k).copied().unwrap_or(0)))
            .sum()
    }

    /// Overlap distance `1 − |A ∩ B| / N²`.
    pub fn distance(&self, other: &SubwordMultiset) -> ExactRatio {
        ExactRatio::new(self.total - self.common(other), self.total)
    }
}

/// Overlap distance between the necklaces of two words of equal size.
pub fn overlap_distance(a: &Word, b: &Word) -> Result<ExactRatio> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch("distance needs words of equal size".into()));
    }
    Ok(SubwordMultiset::new(a).distance(&SubwordMultiset::new(b)))
}

/// Lexicographically least de Bruijn sequence of the given order over
/// `alphabet` symbols `0..alphabet`, built by concatenating the Lyndon words
/// whose length divides the order, in increasing order.
pub fn de_bruijn_symbols(alphabet: usize, order: usize) -> Result<Vec<usize>> {
    if alphabet < 1 || order < 1 {
        return Err(Error::InvalidArgument("alphabet and order must be positive".into()));
    }
    match (alphabet as u128).checked_pow(order as u32) {
        Some(len) if len <= DE_BRUIJN_GUARD => {}
        _ => {
            return Err(Error::GuardExceeded(format!(
                "de Bruijn sequence of order {order} over {alphabet} symbols is too long"
            )))
        }
    }
    let n = order;
    let mut a = vec![0usize; n + 1];
    let mut out = vec![0];
    loop {
        // next prenecklace: increment the last symbol that can grow, then repeat the prefix
        let mut i = n;
        while i >= 1 && a[i] == alphabet - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(out);
        }
        a[i] += 1;
        for j in i + 1..=n {
            a[j] = a[j - i];
        }
        if n % i == 0 {
            out.extend_from_slice(&a[1..=i]);
        }
    }
}

/// De Bruijn sequence of order `order` over `q` symbols as a one-dimensional
/// word (symbols `1..=q`); every word of length `order` occurs exactly once
/// cyclically.
pub fn de_bruijn_sequence(q: u8, order: usize) -> Result<Word> {
    let seq = de_bruijn_symbols(q as usize, order)?;
    let size = SizeVec::new(&[seq.len()])?;
    Word::new(size, q, seq.into_iter().map(|s| s as u8 + 1).collect())
}

/// A set of centres with the guarantee behind it.
#[derive(Clone, Debug)]
pub struct CentreSet {
    /// Canonical centres.
    pub centres: Vec<Word>,
    /// Length (along the last dimension) of the de Bruijn windows every
    /// necklace shares with some centre.
    pub lambda: usize,
    /// Size of a subword every necklace shares with some centre; empty when
    /// nothing is guaranteed.
    pub shared: Vec<usize>,
    /// Upper bound on the distance from any necklace to its nearest centre.
    pub bound: ExactRatio,
}

/// `λ = max{λ ≥ 1 : q^λ ≤ k·(n − λ + 1)}`, or 0 if even `λ = 1` fails.
pub fn select_lambda(n: usize, q: u128, k: u128) -> usize {
    let mut best = 0;
    for lambda in 1..=n {
        match q.checked_pow(lambda as u32) {
            Some(p) if p <= k.saturating_mul((n - lambda + 1) as u128) => best = lambda,
            _ => break,
        }
    }
    best
}

/// Guaranteed distance bound for two words of size `n` sharing a subword of
/// size `m`: the shared subword contributes all `Π mᵢ(mᵢ+1)/2` of its own
/// subwords to the intersection.
pub fn guaranteed_shared_bound(n: &SizeVec, m: &[usize]) -> Result<ExactRatio> {
    check_subsize(n, m)?;
    let inner: u64 = m.iter().map(|&x| (x * (x + 1) / 2) as u64).product();
    let n2 = (n.total() as u64).pow(2);
    Ok(ExactRatio::new(n2 - inner.min(n2), n2))
}

/// Distance bound `1 − M²/(2N²)` for two necklaces of size `n` sharing a
/// subword of size `m` (with `M = Π mᵢ`). It is implied by
/// [`guaranteed_shared_bound`] whenever `Π mᵢ(mᵢ+1)/2 ≥ M²/2`, which covers
/// every one-dimensional case and every `m` with at most one entry above 1.
pub fn shared_subword_bound(n: &SizeVec, m: &[usize]) -> Result<ExactRatio> {
    check_subsize(n, m)?;
    let big_m = m.iter().product::<usize>() as u64;
    let n2 = (n.total() as u64).pow(2);
    Ok(ExactRatio::from_integer(1) - ExactRatio::new(big_m * big_m, 2 * n2))
}

fn check_subsize(n: &SizeVec, m: &[usize]) -> Result<()> {
    if m.len() != n.d() || m.iter().zip(n.dims()).any(|(&a, &b)| a == 0 || a > b) {
        return Err(Error::InvalidArgument(format!("{m:?} is not a subword size of {n}")));
    }
    Ok(())
}

fn all_necklaces(size: &SizeVec, q: u8) -> CentreSet {
    CentreSet {
        centres: enumerate(size, q).collect(),
        lambda: size.last(),
        shared: size.dims().to_vec(),
        bound: ExactRatio::from_integer(0),
    }
}

fn constant_centres(size: &SizeVec, q: u8, k: usize) -> CentreSet {
    CentreSet {
        centres: fill_distinct(size, q, vec![Word::constant(size, q, 1); k]),
        lambda: 0,
        shared: Vec::new(),
        bound: ExactRatio::from_integer(1),
    }
}

/// Replace repeated centres by the smallest necklaces not yet chosen.
///
/// Windows of the de Bruijn sequence wrap around once `k·(n − λ + 1)`
/// exceeds its length, so the same centre can be produced twice; the distinct
/// windows already carry the covering guarantee and the extra slots are free.
fn fill_distinct(size: &SizeVec, q: u8, centres: Vec<Word>) -> Vec<Word> {
    let k = centres.len();
    let mut seen = HashSet::new();
    let mut out: Vec<Word> = centres.into_iter().filter(|c| seen.insert(c.clone())).collect();
    if out.len() < k {
        let extra: Vec<Word> = enumerate(size, q).filter(|w| !seen.contains(w)).take(k - out.len()).collect();
        out.extend(extra);
    }
    out
}

/// One-dimensional k-centre construction for necklaces of length `n`.
///
/// With `λ` from [`select_lambda`], the centres are the length-`n` cyclic
/// windows of the de Bruijn sequence of order `λ` starting at
/// `i·(n − λ + 1)` for `i < k`, so every word of length `λ` occurs in some
/// centre. Repeated windows are replaced by further necklaces so the `k`
/// centres are distinct. When `k` is at least the number of necklaces all of
/// them are returned.
pub fn k_centre_1d(n: usize, q: u8, k: usize) -> Result<CentreSet> {
    let size = SizeVec::new(&[n])?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if BigUint::from(k) >= count_necklaces(&size, q) {
        return Ok(all_necklaces(&size, q));
    }
    let lambda = select_lambda(n, q as u128, k as u128);
    if lambda == 0 {
        return Ok(constant_centres(&size, q, k));
    }
    let seq = de_bruijn_symbols(q as usize, lambda)?;
    let len = seq.len();
    let step = n - lambda + 1;
    let centres = (0..k)
        .map(|i| {
            let start = i * step;
            let cells = (0..n).map(|t| seq[(start + t) % len] as u8 + 1).collect();
            Word::new(size.clone(), q, cells).map(|w| w.canonicalize().0)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CentreSet {
        centres: fill_distinct(&size, q, centres),
        lambda,
        shared: vec![lambda],
        bound: guaranteed_shared_bound(&size, &[lambda])?,
    })
}

/// Which of the two multidimensional constructions applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentreCase {
    /// `q^{n_d} ≤ k·N/n_d`: every column of length `n_d` fits into the centres.
    Columns,
    /// Blocks of size `m` (with `m_d = 1`) act as symbols of a larger alphabet.
    Blocks(Vec<usize>),
}

/// Select the construction for size `n`: columns when `q^{n_d} ≤ k·N/n_d`,
/// otherwise the block size `m` (`mᵢ | nᵢ`, `m_d = 1`) of largest volume `M`
/// with `q^M ≤ k·Π(nᵢ/mᵢ)`, the first in index order among equals. Returns
/// `None` when not even single cells satisfy the inequality.
pub fn select_case(n: &SizeVec, q: u8, k: usize) -> Option<CentreCase> {
    let nd = n.last();
    let columns = (n.total() / nd) as u128;
    let fits = |exp: usize, room: u128| {
        (q as u128)
            .checked_pow(exp as u32)
            .is_some_and(|p| p <= (k as u128).saturating_mul(room))
    };
    if fits(nd, columns) {
        return Some(CentreCase::Columns);
    }
    let d = n.d();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for m in divisor_vectors(n.dims()) {
        if m[d - 1] != 1 {
            continue;
        }
        let vol: usize = m.iter().product();
        let room: u128 = n.dims().iter().zip(&m).map(|(a, b)| (a / b) as u128).product();
        if fits(vol, room) && best.as_ref().map_or(true, |(v, _)| vol > *v) {
            best = Some((vol, m));
        }
    }
    best.map(|(_, m)| CentreCase::Blocks(m))
}

/// Multidimensional k-centre construction.
///
/// The word is viewed as `C` columns along the last dimension whose cells are
/// blocks of size `m` (single cells in the column case), i.e. symbols of an
/// alphabet of size `q^M`. The one-dimensional construction over that
/// alphabet yields `k·C` columns, grouped `C` at a time into the centres, so
/// every necklace shares a subword of size `(m₁, …, m_{d−1}, λ)` with some
/// centre.
pub fn k_centre_multidim(n: &SizeVec, q: u8, k: usize) -> Result<CentreSet> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if BigUint::from(k) >= count_necklaces(n, q) {
        return Ok(all_necklaces(n, q));
    }
    let d = n.d();
    let block = match select_case(n, q, k) {
        None => return Ok(constant_centres(n, q, k)),
        Some(CentreCase::Columns) => vec![1; d],
        Some(CentreCase::Blocks(m)) => m,
    };
    let nd = n.last();
    let vol: usize = block.iter().product();
    let alphabet = (q as u128).pow(vol as u32);
    let grid: Vec<usize> = n.dims()[..d - 1].iter().zip(&block).map(|(a, b)| a / b).collect();
    let columns: usize = grid.iter().product();
    let count = k * columns;
    let lambda = select_lambda(nd, alphabet, count as u128);
    if lambda == 0 {
        return Ok(constant_centres(n, q, k));
    }
    let seq = de_bruijn_symbols(alphabet as usize, lambda)?;
    let len = seq.len();
    let step = nd - lambda + 1;
    let g = Group::new(n.dims());
    let bg = Group::new(&block);
    let cg = Group::new(&grid);
    let mut centres = Vec::with_capacity(k);
    for j in 0..k {
        let mut cells = vec![0u8; n.total()];
        for c in 0..columns {
            let start = (j * columns + c) * step;
            let cc = cg.coords(c);
            for t in 0..nd {
                let mut symbol = seq[(start + t) % len];
                for b in 0..bg.order() {
                    let bc = bg.coords(b);
                    let mut pos: Vec<usize> = (0..d - 1).map(|i| cc[i] * block[i] + bc[i]).collect();
                    pos.push(t);
                    cells[g.index(&pos)] = (symbol % q as usize) as u8 + 1;
                    symbol /= q as usize;
                }
            }
        }
        centres.push(Word::new(n.clone(), q, cells)?.canonicalize().0);
    }
    let mut shared = block[..d - 1].to_vec();
    shared.push(lambda);
    Ok(CentreSet {
        centres: fill_distinct(n, q, centres),
        lambda,
        bound: guaranteed_shared_bound(n, &shared)?,
        shared,
    })
}

/// k-centre construction for any dimension.
pub fn k_centre(n: &SizeVec, q: u8, k: usize) -> Result<CentreSet> {
    if n.d() == 1 {
        k_centre_1d(n.total(), q, k)
    } else {
        k_centre_multidim(n, q, k)
    }
}

/// Largest distance from any necklace of the centres' size to its nearest centre.
pub fn max_distance(centres: &[Word]) -> Result<ExactRatio> {
    let first = centres
        .first()
        .ok_or_else(|| Error::InvalidArgument("no centres given".into()))?;
    let cm: Vec<SubwordMultiset> = centres.iter().map(SubwordMultiset::new).collect();
    let mut worst = ExactRatio::from_integer(0);
    for w in enumerate(first.size(), first.q()) {
        let mw = SubwordMultiset::new(&w);
        let best = cm.iter().map(|c| mw.distance(c)).min().unwrap();
        worst = worst.max(best);
    }
    Ok(worst)
}

/// Lower bound `1 − log_q(kN)/N` on the optimal k-centre radius.
pub fn lower_bound(n: &SizeVec, q: u8, k: usize) -> f64 {
    let big_n = n.total() as f64;
    1.0 - (k as f64 * big_n).log(q as f64) / big_n
}

/// Approximation ratio `1 + f(N, k)` with
/// `f = L/(N − L) − L²/(2N(N − L))`, `L = log_q(kN)`; `None` when
/// `L ≥ N`, where every necklace can be a centre.
pub fn approx_ratio(total: usize, q: u8, k: usize) -> Option<f64> {
    let n = total as f64;
    let l = (k as f64 * n).ln() / (q as f64).ln();
    let exact_fit = (q as u128)
        .checked_pow(total as u32)
        .is_some_and(|p| p <= (k as u128) * total as u128);
    if exact_fit || l >= n {
        return None;
    }
    Some(1.0 + l / (n - l) - l * l / (2.0 * n * (n - l)))
}

/// Rows of approximation ratios for `k` in `ks` and lengths `n` in `ns`.
pub fn ratio_table(q: u8, ns: &[usize], ks: &[usize]) -> Vec<Vec<Option<f64>>> {
    ks.iter()
        .map(|&k| ns.iter().map(|&n| approx_ratio(n, q, k)).collect())
        .collect()
}
