//! Counting words fixed by a subgroup whose necklace lies below a bound.
//!
//! `count_fixed(w, K)` is the weight of `{v : K fixes v, ⟨v⟩ < w}` where `⟨v⟩`
//! is the canonical form of `v` and `w` is any word of the same size. Every
//! ranking quantity is a signed combination of these values over subgroups:
//! Burnside's lemma gives necklace ranks, Möbius inversion over divisor
//! vectors gives Lyndon ranks, and Möbius inversion over the subgroup lattice
//! gives atranslational ranks.
//!
//! A word `v` is counted unless some translate of it is smaller than `w`, so
//! the engine reads the slices of `v` while tracking every partial match of a
//! translated suffix of `v` against a prefix of `w` (a set of pairs `(L, h)`:
//! the last `L` slices, translated by cross-section translation `h`, equal
//! `w₁…w_L`). A slice is a *hit* if it makes some matched translate fall below
//! `w`. Slices whose class exceeds every class still being matched all lead to
//! the empty match set and are counted in bulk using `count_fixed` one
//! dimension down.
//!
//! Words fixed by `K` are determined by their first `c` slices, where `c` is
//! the smallest positive last coordinate of an element of `K` (or `n_d`):
//! slice `i + c` is slice `i` translated by the cross-section part `h_c` of
//! that element, and every slice is fixed by `K₀ = {g : (g, 0) ∈ K}`. The
//! cyclic structure is closed by requiring the match set after `c` slices to
//! be the start set shifted by `h_c`; start sets must be invariant under
//! `(n_d / c)·h_c`.

use crate::group::Group;
use crate::order::SliceProfile;
use crate::weight::Weight;
use std::collections::HashMap;

/// A set of live partial matches `(L, h)` with `L ≥ 1`, sorted.
pub type MatchSet = Vec<(u32, u32)>;

/// Memoising evaluator for `count_fixed`.
pub struct Engine<W: Weight> {
    base: W,
    memo: HashMap<(Vec<usize>, Vec<u8>, Vec<usize>), W>,
}

impl<W: Weight> Engine<W> {
    /// `base` supplies the weight flavour (plain counts or graded counts).
    pub fn new(base: W) -> Self {
        Engine {
            base,
            memo: HashMap::new(),
        }
    }

    pub fn base(&self) -> &W {
        &self.base
    }

    /// Weight of the words of size `dims` fixed by the subgroup `k` (sorted
    /// element indices) whose canonical form is smaller than `w`.
    pub fn count_fixed(&mut self, dims: &[usize], w: &[u8], k: &[usize]) -> W {
        if dims.is_empty() {
            return self.base.symbols_below(w[0]);
        }
        let key = (dims.to_vec(), w.to_vec(), k.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = self.count_fixed_uncached(dims, w, k);
        self.memo.insert(key, v.clone());
        v
    }

    fn count_fixed_uncached(&mut self, dims: &[usize], w: &[u8], k: &[usize]) -> W {
        let d = dims.len();
        let m = dims[d - 1];
        let ns: usize = dims[..d - 1].iter().product();
        let k0: Vec<usize> = k.iter().copied().filter(|&g| g < ns).collect();
        let (c, hc) = k
            .iter()
            .filter(|&&g| g >= ns)
            .map(|&g| (g / ns, g % ns))
            .min()
            .unwrap_or((m, 0));
        let mut auto = Automaton::new(dims, w, k0, self);
        let sg = auto.sg.clone();
        let shift = sg.mul(m / c, hc);
        auto.explore(self);
        let mut avoid = self.base.zero();
        for s in 0..auto.states.len() {
            if act(&auto.states[s], shift, &sg) != auto.states[s] {
                continue;
            }
            let target = match auto.index.get(&act(&auto.states[s], hc, &sg)) {
                Some(&t) => t,
                None => continue,
            };
            let mut cur: HashMap<usize, W> = HashMap::new();
            cur.insert(s, self.base.one());
            for _ in 0..c {
                let mut next: HashMap<usize, W> = HashMap::new();
                for (st, wt) in &cur {
                    for (to, tw) in &auto.trans[*st] {
                        let add = wt.mul(tw);
                        next.entry(*to)
                            .and_modify(|x| x.add_assign(&add))
                            .or_insert(add);
                    }
                }
                cur = next;
            }
            if let Some(x) = cur.get(&target) {
                avoid.add_assign(x);
            }
        }
        let mut total = self.base.one();
        for _ in 0..c {
            total = total.mul(&auto.fixed);
        }
        total.sub_assign(&avoid);
        total.stretch(m / c)
    }

    /// `β(w, i, j)`: words of `i` slices (cross-section of `w`) whose first `j`
    /// slices equal those of `w` and whose every translated suffix is strictly
    /// greater than the prefix of `w` of the same length.
    pub fn beta(&mut self, dims: &[usize], w: &[u8], i: usize, j: usize) -> W {
        let d = dims.len();
        assert!(j <= i && i <= dims[d - 1]);
        let mut auto = Automaton::new(dims, w, vec![0], self);
        let mut cur: HashMap<usize, W> = HashMap::new();
        cur.insert(0, self.base.one());
        for t in 0..i {
            let mut next: HashMap<usize, W> = HashMap::new();
            for (st, wt) in &cur {
                if t < j {
                    let cells = auto.slice_cells(t);
                    if let Some(to) = auto.step(*st, auto.profile.class_of[t], auto.profile.offset_of[t]) {
                        let add = wt.mul(&self.base.slice(&cells));
                        next.entry(to).and_modify(|x| x.add_assign(&add)).or_insert(add);
                    }
                } else {
                    let tr = auto.transitions(*st, self);
                    for (to, tw) in tr {
                        let add = wt.mul(&tw);
                        next.entry(to).and_modify(|x| x.add_assign(&add)).or_insert(add);
                    }
                }
            }
            cur = next;
        }
        cur.remove(&0).unwrap_or_else(|| self.base.zero())
    }
}

/// Shift every match of a set by the cross-section translation `a`.
fn act(s: &MatchSet, a: usize, sg: &Group) -> MatchSet {
    let mut out: MatchSet = s.iter().map(|&(l, h)| (l, sg.add(h as usize, a) as u32)).collect();
    out.sort_unstable();
    out
}

/// The match automaton for one pattern word and one slice stabiliser `K₀`.
struct Automaton<W: Weight> {
    m: usize,
    sub: Vec<usize>,
    sg: Group,
    w: Vec<u8>,
    profile: SliceProfile,
    k0: Vec<usize>,
    /// Weight of all slices fixed by `K₀`.
    fixed: W,
    states: Vec<MatchSet>,
    index: HashMap<MatchSet, usize>,
    trans: Vec<Vec<(usize, W)>>,
    bulk: HashMap<usize, W>,
}

impl<W: Weight> Automaton<W> {
    fn new(dims: &[usize], w: &[u8], k0: Vec<usize>, eng: &Engine<W>) -> Self {
        let d = dims.len();
        let sub = dims[..d - 1].to_vec();
        let sg = Group::new(&sub);
        let profile = SliceProfile::new(dims, w);
        let fixed = eng.base.fixed_slices(sg.order(), k0.len());
        let mut index = HashMap::new();
        index.insert(Vec::new(), 0);
        Automaton {
            m: dims[d - 1],
            sub,
            sg,
            w: w.to_vec(),
            profile,
            k0,
            fixed,
            states: vec![Vec::new()],
            index,
            trans: Vec::new(),
            bulk: HashMap::new(),
        }
    }

    fn slice_cells(&self, i: usize) -> Vec<u8> {
        let s = self.sg.order();
        self.w[i * s..(i + 1) * s].to_vec()
    }

    fn intern(&mut self, s: MatchSet) -> usize {
        if let Some(&i) = self.index.get(&s) {
            return i;
        }
        let i = self.states.len();
        self.index.insert(s.clone(), i);
        self.states.push(s);
        i
    }

    /// Matches that can still grow: the implicit empty matches `(0, h)` and
    /// the stored matches shorter than `w`.
    fn active(&self, st: usize) -> Vec<(usize, usize)> {
        let mut act: Vec<(usize, usize)> = (0..self.sg.order()).map(|h| (0, h)).collect();
        act.extend(
            self.states[st]
                .iter()
                .filter(|&&(l, _)| (l as usize) < self.m)
                .map(|&(l, h)| (l as usize, h as usize)),
        );
        act
    }

    /// Read one slice of class `cls` (index into the profile) with offset
    /// `off`; `None` on a hit.
    fn step(&mut self, st: usize, cls: usize, off: usize) -> Option<usize> {
        let mut new: MatchSet = Vec::new();
        for (l, h) in self.active(st) {
            let cl = self.profile.class_of[l];
            if cl > cls {
                return None;
            }
            if cl < cls {
                continue;
            }
            let o = self.profile.classes[cls].coset_min[self.sg.sub(off, h)];
            let ol = self.profile.offset_of[l];
            if o < ol {
                return None;
            }
            if o == ol {
                new.push((l as u32 + 1, h as u32));
            }
        }
        new.sort_unstable();
        new.dedup();
        Some(self.intern(new))
    }

    /// All non-hitting transitions from a state, grouped by target.
    fn transitions(&mut self, st: usize, eng: &mut Engine<W>) -> Vec<(usize, W)> {
        let act = self.active(st);
        let cmax = act.iter().map(|&(l, _)| self.profile.class_of[l]).max().unwrap();
        let mut out: HashMap<usize, W> = HashMap::new();
        let up = self.bulk_weight(cmax, eng);
        if !up.is_zero() {
            out.insert(0, up);
        }
        let class = &self.profile.classes[cmax];
        let is_fixed = self.k0.iter().all(|g| class.stab.binary_search(g).is_ok());
        if is_fixed {
            let wt = eng.base.slice(&class.canonical);
            for off in class.offsets() {
                if let Some(to) = self.step(st, cmax, off) {
                    out.entry(to).and_modify(|x| x.add_assign(&wt)).or_insert_with(|| wt.clone());
                }
            }
        }
        let mut v: Vec<(usize, W)> = out.into_iter().collect();
        v.sort_by_key(|(s, _)| *s);
        v
    }

    /// Weight of the `K₀`-fixed slices whose class exceeds class `cmax`.
    fn bulk_weight(&mut self, cmax: usize, eng: &mut Engine<W>) -> W {
        if let Some(x) = self.bulk.get(&cmax) {
            return x.clone();
        }
        let class = self.profile.classes[cmax].clone();
        let mut up = self.fixed.clone();
        up.sub_assign(&eng.count_fixed(&self.sub, &class.canonical, &self.k0));
        if self.k0.iter().all(|g| class.stab.binary_search(g).is_ok()) {
            up.sub_assign(&eng.base.slice(&class.canonical).scale(class.orbit_size()));
        }
        self.bulk.insert(cmax, up.clone());
        up
    }

    /// Build every reachable state and its transitions.
    fn explore(&mut self, eng: &mut Engine<W>) {
        let mut i = 0;
        while i < self.states.len() {
            let t = self.transitions(i, eng);
            self.trans.push(t);
            i += 1;
        }
    }
}
