//! Ranking words among necklaces, Lyndon words and atranslational necklaces.
//!
//! All ranks are zero-based: the rank of `w` is the number of necklaces (of
//! the relevant kind) whose canonical form is strictly smaller than `w`.
//! Ranks are signed combinations of [`Engine::count_fixed`] over subgroups
//! `K` of the translation group:
//!
//! * necklaces: Burnside's lemma, `RN = (1/N) Σ_{cyclic K} #gen(K) · T_K`;
//! * Lyndon words: `RL = (1/N) Σ_g Σ_{f|n} μ(n/f) · T_{⟨g, P_f⟩}` where words
//!   fixed by `P_f` are tilings of size-`f` words, so the inner sum counts
//!   aperiodic words fixed by `g`;
//! * atranslational necklaces: `RA = (1/N) Σ_K μ(0, K) · T_K` over the
//!   subgroup lattice.
//!
//! Here `T_K` is the number of `K`-fixed words whose necklace is below `w`;
//! `T_{P_f}` is exactly `|T(w, f)|`, the number of size-`f` words whose
//! canonical form tiles to something smaller than `w`.

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::numtheory::mobius_vec;
use crate::weight::{Count, Graded};
use crate::word::{SizeVec, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Signed, Zero};
use std::collections::BTreeMap;

/// Ranks of a canonical word among necklaces, Lyndon words and atranslational necklaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rn: BigUint,
    pub rl: BigUint,
    pub ra: BigUint,
}

/// Signed subgroup combinations for each kind of rank.
#[derive(Clone, Debug)]
struct Terms {
    necklace: Vec<(Subgroup, i64)>,
    lyndon: Option<Vec<(Subgroup, i64)>>,
    atranslational: Option<Vec<(Subgroup, i64)>>,
}

fn necklace_terms(g: &Group) -> Vec<(Subgroup, i64)> {
    g.cyclic_subgroups().into_iter().map(|(k, c)| (k, c as i64)).collect()
}

fn lyndon_terms(g: &Group, sub_size: &[usize]) -> Vec<(Subgroup, i64)> {
    // translations of words of size `sub_size`, viewed inside the group of `size`
    let sub = Group::new(sub_size);
    let mut map: BTreeMap<Subgroup, i64> = BTreeMap::new();
    for f in crate::numtheory::divisor_vectors(sub_size) {
        let mu = mobius_vec(sub_size, &f);
        if mu == 0 {
            continue;
        }
        let pf = g.axis_subgroup(&f);
        for x in 0..sub.order() {
            let lifted = g.index(&sub.coords(x));
            let mut gens = pf.clone();
            gens.push(lifted);
            *map.entry(g.closure(&gens)).or_insert(0) += mu;
        }
    }
    map.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn divide(total: BigInt, n: usize) -> BigUint {
    let n = BigInt::from(n);
    assert!((&total % &n).is_zero(), "non-integral rank");
    assert!(!total.is_negative(), "negative rank");
    (total / n).to_biguint().unwrap()
}

/// Ranking context for one size and alphabet, memoising sub-counts across calls.
pub struct Ranker {
    size: SizeVec,
    q: u8,
    group: Group,
    engine: Engine<Count>,
    terms: Terms,
}

impl Ranker {
    pub fn new(size: &SizeVec, q: u8) -> Self {
        let group = size.group();
        Ranker {
            size: size.clone(),
            q,
            terms: Terms {
                necklace: necklace_terms(&group),
                lyndon: None,
                atranslational: None,
            },
            group,
            engine: Engine::new(Count::unit(q)),
        }
    }

    pub fn size(&self) -> &SizeVec {
        &self.size
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    fn check(&self, w: &Word) -> Result<()> {
        if w.size() != &self.size || w.q() != self.q {
            return Err(Error::SizeMismatch(format!(
                "word of size {} over {} symbols given to a ranker for size {} over {}",
                w.size(),
                w.q(),
                self.size,
                self.q
            )));
        }
        Ok(())
    }

    fn combine(&mut self, cells: &[u8], terms: &[(Subgroup, i64)]) -> BigUint {
        let mut total = BigInt::zero();
        for (k, c) in terms {
            let v = self.engine.count_fixed(self.size.dims(), cells, k).value;
            total += v * BigInt::from(*c);
        }
        divide(total, self.size.total())
    }

    /// Weight `T_K`: words fixed by `k` whose necklace is below `cells`.
    pub fn count_fixed(&mut self, cells: &[u8], k: &[usize]) -> BigUint {
        self.engine
            .count_fixed(self.size.dims(), cells, k)
            .value
            .to_biguint()
            .expect("negative count")
    }

    /// Number of necklaces whose canonical form is strictly smaller than the
    /// given word (which need not be canonical).
    pub fn necklaces_below(&mut self, cells: &[u8]) -> BigUint {
        let terms = self.terms.necklace.clone();
        self.combine(cells, &terms)
    }

    /// Number of Lyndon necklaces strictly smaller than the given word.
    pub fn lyndon_below(&mut self, cells: &[u8]) -> BigUint {
        if self.terms.lyndon.is_none() {
            self.terms.lyndon = Some(lyndon_terms(&self.group, self.size.dims()));
        }
        let terms = self.terms.lyndon.clone().unwrap();
        self.combine(cells, &terms)
    }

    /// Number of atranslational necklaces strictly smaller than the given word.
    pub fn atranslational_below(&mut self, cells: &[u8]) -> BigUint {
        if self.terms.atranslational.is_none() {
            self.terms.atranslational = Some(self.group.elementary_abelian_subgroups());
        }
        let terms = self.terms.atranslational.clone().unwrap();
        self.combine(cells, &terms)
    }

    /// Ranks of a canonical word.
    pub fn rank(&mut self, w: &Word) -> Result<RankResult> {
        self.check(w)?;
        if !w.is_canonical() {
            return Err(Error::NotCanonical);
        }
        Ok(RankResult {
            rn: self.necklaces_below(w.cells()),
            rl: self.lyndon_below(w.cells()),
            ra: self.atranslational_below(w.cells()),
        })
    }

    /// `|T(w, f)|`: words of size `f` whose canonical form, tiled to the full
    /// size, is smaller than `w`.
    pub fn count_t(&mut self, w: &Word, f: &SizeVec) -> Result<BigUint> {
        self.check(w)?;
        if !self.size.divisible_by(f) {
            return Err(Error::InvalidArgument(format!("{f} does not divide {}", self.size)));
        }
        let pf = self.group.axis_subgroup(f.dims());
        Ok(self.count_fixed(w.cells(), &pf))
    }

    /// `|L(w, f)| = Σ_{f'|f} μ(f/f') |T(w, f')|`: aperiodic words of size `f`
    /// below `w`.
    pub fn count_l(&mut self, w: &Word, f: &SizeVec) -> Result<BigUint> {
        let mut total = BigInt::zero();
        for fp in f.divisor_vectors() {
            let mu = mobius_vec(f.dims(), fp.dims());
            if mu != 0 {
                total += BigInt::from(mu) * BigInt::from(self.count_t(w, &fp)?);
            }
        }
        Ok(total.to_biguint().expect("negative count"))
    }

    /// `RL(w, f)`: Lyndon necklaces of size `f` whose tiling is below `w`.
    pub fn lyndon_rank_at(&mut self, w: &Word, f: &SizeVec) -> Result<BigUint> {
        self.check(w)?;
        if !self.size.divisible_by(f) {
            return Err(Error::InvalidArgument(format!("{f} does not divide {}", self.size)));
        }
        let terms = lyndon_terms(&self.group, f.dims());
        let mut total = BigInt::zero();
        for (k, c) in &terms {
            total += self.engine.count_fixed(self.size.dims(), w.cells(), k).value * BigInt::from(*c);
        }
        Ok(divide(total, f.total()))
    }

    /// `RN(w) = Σ_{f|n} RL(w, f)`: every necklace has a unique aperiodic period.
    pub fn necklace_rank_via_periods(&mut self, w: &Word) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for f in self.size.divisor_vectors() {
            total += self.lyndon_rank_at(w, &f)?;
        }
        Ok(total)
    }
}

/// Ranks of a canonical word among necklaces, Lyndon words and atranslational necklaces.
pub fn rank_necklace(w: &Word) -> Result<RankResult> {
    Ranker::new(w.size(), w.q()).rank(w)
}

/// Number of necklaces strictly smaller than an arbitrary word.
pub fn necklaces_below(w: &Word) -> BigUint {
    Ranker::new(w.size(), w.q()).necklaces_below(w.cells())
}

/// Ranking restricted to the necklaces with one Parikh vector.
pub struct FixedContentRanker {
    size: SizeVec,
    content: Vec<usize>,
    engine: Engine<Graded>,
    terms: Vec<(Subgroup, i64)>,
}

impl FixedContentRanker {
    pub fn new(size: &SizeVec, content: &[usize]) -> Result<Self> {
        if content.iter().sum::<usize>() != size.total() {
            return Err(Error::InvalidContent(format!("{content:?} does not sum to {}", size.total())));
        }
        if content.len() > u8::MAX as usize || content.is_empty() {
            return Err(Error::InvalidContent("alphabet size out of range".into()));
        }
        Ok(FixedContentRanker {
            size: size.clone(),
            content: content.to_vec(),
            engine: Engine::new(Graded::unit(content)),
            terms: necklace_terms(&size.group()),
        })
    }

    pub fn content(&self) -> &[usize] {
        &self.content
    }

    /// Number of necklaces with this content strictly smaller than the given word.
    pub fn necklaces_below(&mut self, cells: &[u8]) -> BigUint {
        let mut total = BigInt::zero();
        for (k, c) in &self.terms {
            let v = self.engine.count_fixed(self.size.dims(), cells, k);
            total += v.coefficient(&self.content) * BigInt::from(*c);
        }
        divide(total, self.size.total())
    }

    /// Rank of a canonical word with this content.
    pub fn rank(&mut self, w: &Word) -> Result<BigUint> {
        if w.size() != &self.size || w.q() as usize != self.content.len() {
            return Err(Error::SizeMismatch("word does not match the ranker".into()));
        }
        if w.parikh() != self.content {
            return Err(Error::InvalidContent(format!(
                "word has content {:?}, expected {:?}",
                w.parikh(),
                self.content
            )));
        }
        if !w.is_canonical() {
            return Err(Error::NotCanonical);
        }
        Ok(self.necklaces_below(w.cells()))
    }
}

/// Rank of a canonical word among the necklaces sharing its Parikh vector `p`.
pub fn rank_fixed_content(w: &Word, p: &[usize]) -> Result<BigUint> {
    FixedContentRanker::new(w.size(), p)?.rank(w)
}

fn slice_info(w: &Word) -> (Vec<usize>, usize) {
    let d = w.size().d();
    let sub = w.dims()[..d - 1].to_vec();
    let ns = sub.iter().product();
    (sub, ns)
}

/// `|β(w, i, j)|`: words of `i` slices (with the cross-section of `w`) whose
/// first `j` slices equal those of `w` and every translated suffix of which is
/// strictly greater than the prefix of `w` of the same length. Computed
/// exactly with the match automaton.
pub fn beta(w: &Word, i: usize, j: usize) -> Result<BigUint> {
    if j > i || i > w.size().last() {
        return Err(Error::InvalidArgument(format!("need j ≤ i ≤ n_d, got i={i}, j={j}")));
    }
    let mut eng = Engine::new(Count::unit(w.q()));
    Ok(eng.beta(w.dims(), w.cells(), i, j).value.to_biguint().unwrap())
}

/// `|β(w, i, j)|` by the slice recursion
/// `β(i, j) = NS(j)·β(i−j−1, 0) + β(i, j+1)` with `β(0,0) = 1`, `β(i,i) = 0`.
/// The recursion assumes that any slice greater than `w_{j+1}` stays greater
/// under every cross-section translation, which holds when slices are single
/// cells but not in general; [`beta`] is exact everywhere.
pub fn beta_recursive(w: &Word, i: usize, j: usize) -> Result<BigUint> {
    if j > i || i > w.size().last() {
        return Err(Error::InvalidArgument(format!("need j ≤ i ≤ n_d, got i={i}, j={j}")));
    }
    let m = w.size().last();
    let ns_values: Vec<BigUint> = (0..m).map(|t| ns(w, t)).collect::<Result<_>>()?;
    let mut memo: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    fn rec(i: usize, j: usize, ns: &[BigUint], memo: &mut BTreeMap<(usize, usize), BigUint>) -> BigUint {
        if i == j {
            return if i == 0 { BigUint::from(1u32) } else { BigUint::zero() };
        }
        if let Some(v) = memo.get(&(i, j)) {
            return v.clone();
        }
        let v = &ns[j] * rec(i - j - 1, 0, ns, memo) + rec(i, j + 1, ns, memo);
        memo.insert((i, j), v.clone());
        v
    }
    Ok(rec(i, j, &ns_values, &mut memo))
}

/// `NS(w, j)`: number of slices strictly greater than slice `j` (zero-based)
/// of `w` in the slice order: the later translates of the same class
/// (`TP − TR`) plus every member of a greater class.
pub fn ns(w: &Word, j: usize) -> Result<BigUint> {
    if j >= w.size().last() {
        return Err(Error::InvalidArgument(format!("slice {j} out of range")));
    }
    let (sub, ns_cells) = slice_info(w);
    let slice = &w.cells()[j * ns_cells..(j + 1) * ns_cells];
    let (class, offset) = crate::order::canonical_cells(&sub, slice);
    let cls = crate::order::SliceClass::new(&sub, class.clone());
    let offs = cls.offsets();
    let tr = offs.iter().position(|&o| o == offset).unwrap() + 1;
    let same_class = offs.len() - tr;
    let all: BigInt = Pow::pow(BigInt::from(w.q()), ns_cells as u32);
    let below = if sub.is_empty() {
        BigInt::from(class[0] - 1)
    } else {
        let mut eng = Engine::new(Count::unit(w.q()));
        eng.count_fixed(&sub, &class, &[0]).value
    };
    let greater = all - below - BigInt::from(cls.orbit_size());
    Ok((greater + BigInt::from(same_class)).to_biguint().expect("negative slice count"))
}

/// `|Θ|` for the first `j` slices: the number of distinct translates of
/// `w_{[1,j]}` under cross-section translations.
pub fn theta_count(w: &Word, j: usize) -> Result<usize> {
    if j > w.size().last() {
        return Err(Error::InvalidArgument(format!("prefix length {j} out of range")));
    }
    let (sub, ns_cells) = slice_info(w);
    let prefix = &w.cells()[..j * ns_cells];
    let sg = Group::new(&sub);
    let fixing = (0..sg.order())
        .filter(|&h| (0..j).all(|t| {
            let s = &prefix[t * ns_cells..(t + 1) * ns_cells];
            crate::order::translate_cells(&sub, s, h) == s
        }))
        .count();
    Ok(ns_cells / fixing)
}

/// `S(g, l, n)`: number of translations in `G(l, n)` (cross-section
/// translations of order exactly `n_d / l`) with index smaller than `g`.
pub fn s_count(g: usize, l: usize, n: &[usize]) -> Result<usize> {
    let d = n.len();
    if d == 0 || l == 0 || n[d - 1] % l != 0 {
        return Err(Error::InvalidArgument(format!("{l} does not divide the last dimension of {n:?}")));
    }
    let sg = Group::new(&n[..d - 1]);
    let t = n[d - 1] / l;
    Ok((0..g.min(sg.order())).filter(|&x| sg.element_order(x) == t).count())
}

/// `U(w)`: for a translational Lyndon word, the number of Lyndon words built
/// from the same translational period with a smaller generating translation;
/// zero for atranslational or periodic words. With `g` the smallest
/// non-identity translation fixing `w` and `i` its last non-zero coordinate,
/// this is `S(g|_{<i}, g_i, (n₁…n_i)) + Σ_{j>i} S(g|_{<j}, 1, (n₁…n_j))`.
pub fn u_correction(w: &Word) -> usize {
    if w.is_atranslational() || !w.is_aperiodic() {
        return 0;
    }
    let (fix, _) = w.symmetry();
    let g = &fix[1];
    let coords = g.offsets();
    let n = w.dims();
    let i = coords.iter().rposition(|&c| c != 0).unwrap();
    let mut total = 0;
    for j in i..n.len() {
        let l = if j == i { coords[i] } else { 1 };
        if n[j] % l != 0 {
            continue;
        }
        let r = Group::new(&n[..j]).index(&coords[..j]);
        total += s_count(r, l, &n[..=j]).unwrap_or(0);
    }
    total
}

/// Size of `B(w, g_d, j)` (with `f = n`) from the two displayed case
/// formulas. Case `g_d + j < n_d` is
/// `β(w, g_d, 0) · #{b < w_{j+1}} · |Θ| · q^{N'(n_d − g_d − j − 1)}`;
/// case `g_d + j ≥ n_d` is
/// `β(w, n_d + t − j, t + 1) + (NS(t) − NS(j)) · β(w, n_d − j − 1, 0) · |Θ|`
/// with `t` the longest suffix of the wrapped part of `w_{[1,j]}` that is also
/// a prefix of `w`. The first case reproduces direct counts for
/// one-dimensional words; the second does not (see the crate tests).
pub fn b_set_size(w: &Word, g_d: usize, j: usize) -> Result<BigUint> {
    let m = w.size().last();
    if g_d >= m || j >= m {
        return Err(Error::InvalidArgument("g_d and j must be below n_d".into()));
    }
    let (_, ns_cells) = slice_info(w);
    let q = BigUint::from(w.q());
    let theta = BigUint::from(theta_count(w, j)?);
    let total_slices: BigUint = Pow::pow(q.clone(), ns_cells as u32);
    if g_d + j < m {
        let smaller = total_slices - ns(w, j)? - BigUint::from(1u32);
        let free: BigUint = Pow::pow(q, (ns_cells * (m - g_d - j - 1)) as u32);
        Ok(beta(w, g_d, 0)? * smaller * theta * free)
    } else {
        let wrapped = j + g_d - m;
        let slices: Vec<&[u8]> = w.slices().collect();
        let t = (0..=wrapped)
            .filter(|&t| slices[j - t..j] == slices[..t])
            .max()
            .unwrap_or(0);
        let first = beta(w, m + t - j, t + 1).unwrap_or_else(|_| BigUint::zero());
        let ns_t = BigInt::from(ns(w, t)?);
        let ns_j = BigInt::from(ns(w, j)?);
        let rest = (ns_t - ns_j) * BigInt::from(beta(w, m - j - 1, 0)?) * BigInt::from(theta);
        let v = BigInt::from(first) + rest;
        Ok(v.to_biguint().unwrap_or_else(BigUint::zero))
    }
}
