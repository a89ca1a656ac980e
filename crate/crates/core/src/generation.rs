//! Generating necklaces in increasing order.
//!
//! A *prenecklace* is a word that is a prefix (in slices) of the canonical
//! form of some necklace with a longer last dimension. Equivalently, for every
//! start slice `s` and every cross-section translation `h` other than the
//! identity at `s = 0`, the suffix starting at `s`, translated by `h`, is
//! slotwise at least the prefix of the same length. Slices are compared by
//! their *slot*: the class of the slice (its (d−1)-dimensional necklace)
//! followed by its offset.
//!
//! The successor of a prenecklace increments the last slice that can be
//! increased to the smallest slot keeping the prefix a prenecklace, then
//! fills the remaining slices with the smallest valid slots. Iterating this
//! until a canonical form appears gives the next necklace.
//!
//! The generator tracks, for every prefix length, the set of *matches*
//! `(s, h)`: pairs whose translated suffix equals the prefix so far. Only
//! these constrain the next slice, which makes the smallest valid slot
//! computable directly instead of by trial.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::order::{canonical_cells, compare_cells, SliceClass};
use crate::word::{SizeVec, Word};
use std::cmp::Ordering;
use std::collections::HashMap;

/// A slice described by its class index and offset.
type Slot = (usize, usize);

/// Matches `(s, h)` alive after a prefix.
type Matches = Vec<(usize, usize)>;

/// Successor machinery for one size and alphabet. Classes of slices are
/// interned on first use, and the successor of a class is found by a
/// generator one dimension down.
pub struct Generator {
    size: SizeVec,
    q: u8,
    sub: Vec<usize>,
    ns: usize,
    m: usize,
    sg: Group,
    classes: Vec<SliceClass>,
    offsets: Vec<Vec<usize>>,
    index: HashMap<Vec<u8>, usize>,
    succ: HashMap<usize, Option<usize>>,
    order: HashMap<(usize, usize), Ordering>,
    lower: Option<Box<Generator>>,
}

/// A prefix of slots with the match set after every prefix length.
#[derive(Clone, Debug, Default)]
struct State {
    slots: Vec<Slot>,
    matches: Vec<Matches>,
}

impl Generator {
    pub fn new(size: &SizeVec, q: u8) -> Self {
        let d = size.d();
        let sub = size.dims()[..d - 1].to_vec();
        let lower = if d >= 2 {
            Some(Box::new(Generator::new(&SizeVec::new(&sub).unwrap(), q)))
        } else {
            None
        };
        let sg = Group::new(&sub);
        Generator {
            size: size.clone(),
            q,
            ns: sg.order(),
            m: size.last(),
            sg,
            sub,
            classes: Vec::new(),
            offsets: Vec::new(),
            index: HashMap::new(),
            succ: HashMap::new(),
            order: HashMap::new(),
            lower,
        }
    }

    pub fn size(&self) -> &SizeVec {
        &self.size
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    fn intern(&mut self, canonical: Vec<u8>) -> usize {
        if let Some(&i) = self.index.get(&canonical) {
            return i;
        }
        let cls = SliceClass::new(&self.sub, canonical.clone());
        self.offsets.push(cls.offsets());
        self.classes.push(cls);
        self.index.insert(canonical, self.classes.len() - 1);
        self.classes.len() - 1
    }

    fn slot_of(&mut self, slice: &[u8]) -> Slot {
        let (c, g) = canonical_cells(&self.sub, slice);
        (self.intern(c), g)
    }

    fn cmp_class(&mut self, a: usize, b: usize) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        if let Some(&o) = self.order.get(&(a, b)) {
            return o;
        }
        let o = compare_cells(&self.sub, &self.classes[a].canonical, &self.classes[b].canonical);
        self.order.insert((a, b), o);
        self.order.insert((b, a), o.reverse());
        o
    }

    fn cmp_slot(&mut self, a: Slot, b: Slot) -> Ordering {
        self.cmp_class(a.0, b.0).then(a.1.cmp(&b.1))
    }

    /// Slot of the slice translated by cross-section element `h`.
    #[inline]
    fn tslot(&self, s: Slot, h: usize) -> Slot {
        (s.0, self.classes[s.0].coset_min[self.sg.sub(s.1, h)])
    }

    fn min_class(&mut self) -> usize {
        self.intern(vec![1; self.ns])
    }

    fn next_class(&mut self, c: usize) -> Option<usize> {
        if let Some(r) = self.succ.get(&c) {
            return *r;
        }
        let canon = self.classes[c].canonical.clone();
        let next = match self.lower.as_mut() {
            None => (canon[0] < self.q).then(|| vec![canon[0] + 1]),
            Some(g) => g.next_necklace_cells(&canon).map(|(w, _)| w),
        };
        let r = next.map(|n| self.intern(n));
        self.succ.insert(c, r);
        r
    }

    /// Lower bounds `(slot, h)` on the next slice: the translate by `h` of the
    /// next slice must be at least `slot`. Matches starting at slice 0 compare
    /// the next slice with its own translate; their `h` are returned separately.
    fn constraints(&self, slots: &[Slot], matches: &[(usize, usize)]) -> (Vec<(Slot, usize)>, Vec<usize>) {
        let t = slots.len();
        if t == 0 {
            return (Vec::new(), Vec::new());
        }
        let mut cons = Vec::new();
        let mut own = Vec::new();
        for &(s, h) in matches {
            if s == 0 {
                own.push(h);
            } else {
                cons.push((slots[t - s], h));
            }
        }
        cons.extend((0..self.ns).map(|h| (slots[0], h)));
        (cons, own)
    }

    fn satisfies(&mut self, z: Slot, cons: &(Vec<(Slot, usize)>, Vec<usize>)) -> bool {
        cons.1.iter().all(|&h| self.tslot(z, h).1 >= z.1)
            && cons.0.iter().all(|&(k, h)| {
                let t = self.tslot(z, h);
                self.cmp_slot(t, k) != Ordering::Less
            })
    }

    fn first_offset(&mut self, c: usize, after: Option<usize>, cons: &(Vec<(Slot, usize)>, Vec<usize>)) -> Option<usize> {
        let offs = self.offsets[c].clone();
        offs.into_iter()
            .filter(|&o| after.map_or(true, |a| o > a))
            .find(|&o| self.satisfies((c, o), cons))
    }

    /// Smallest slot (strictly above `above`, if given) that keeps the prefix
    /// `slots` a prenecklace.
    fn smallest_valid(&mut self, slots: &[Slot], matches: &[(usize, usize)], above: Option<Slot>) -> Option<Slot> {
        if slots.is_empty() {
            // the first slice must be canonical
            let c = match above {
                None => self.min_class(),
                Some((c0, _)) => self.next_class(c0)?,
            };
            return Some((c, 0));
        }
        let cons = self.constraints(slots, matches);
        let mut cstar = cons.0[0].0 .0;
        for &(k, _) in &cons.0[1..] {
            if self.cmp_class(k.0, cstar) == Ordering::Greater {
                cstar = k.0;
            }
        }
        let mut c = match above {
            Some((c0, o0)) => {
                if let Some(o) = self.first_offset(c0, Some(o0), &cons) {
                    return Some((c0, o));
                }
                self.next_class(c0)?
            }
            None => self.min_class(),
        };
        if self.cmp_class(c, cstar) == Ordering::Less {
            c = cstar;
        }
        if let Some(o) = self.first_offset(c, None, &cons) {
            return Some((c, o));
        }
        // any member of a class above every constraint is valid
        let c = self.next_class(c)?;
        Some((c, 0))
    }

    /// Matches alive after appending `z` to the prefix `slots`.
    fn extend_matches(&self, slots: &[Slot], prev: &[(usize, usize)], z: Slot) -> Matches {
        let t = slots.len();
        if t == 0 {
            return (1..self.ns).filter(|&h| self.tslot(z, h) == z).map(|h| (0, h)).collect();
        }
        prev.iter()
            .copied()
            .chain((0..self.ns).map(|h| (t, h)))
            .filter(|&(s, h)| self.tslot(z, h) == if s == 0 { z } else { slots[t - s] })
            .collect()
    }

    fn push(&self, st: &mut State, z: Slot) {
        let prev: &[(usize, usize)] = st.matches.last().map_or(&[], |v| v);
        let next = self.extend_matches(&st.slots, prev, z);
        st.slots.push(z);
        st.matches.push(next);
    }

    /// Append slots one by one while they keep the prefix a prenecklace;
    /// returns the number accepted.
    fn load(&mut self, st: &mut State, slots: &[Slot]) -> usize {
        for (t, &z) in slots.iter().enumerate() {
            let ok = if t == 0 {
                z.1 == 0
            } else {
                let cons = self.constraints(&st.slots, st.matches.last().unwrap());
                self.satisfies(z, &cons)
            };
            if !ok {
                return t;
            }
            self.push(st, z);
        }
        slots.len()
    }

    fn fill(&mut self, st: &mut State) {
        while st.slots.len() < self.m {
            let prev = st.matches.last().cloned().unwrap_or_default();
            let z = self
                .smallest_valid(&st.slots, &prev, None)
                .expect("every prenecklace extends");
            self.push(st, z);
        }
    }

    /// Replace the slot at the largest position `i ≤ from` that can be
    /// increased, then fill greedily. `target` holds the slots being
    /// incremented. Returns false when no position can be increased.
    fn advance(&mut self, st: &mut State, target: &[Slot], from: usize) -> bool {
        for i in (0..=from).rev() {
            st.slots.truncate(i);
            st.matches.truncate(i);
            let prev = st.matches.last().cloned().unwrap_or_default();
            let slots = st.slots.clone();
            if let Some(y) = self.smallest_valid(&slots, &prev, Some(target[i])) {
                self.push(st, y);
                self.fill(st);
                return true;
            }
        }
        false
    }

    /// Whether a full-length prenecklace is a canonical necklace form.
    fn is_necklace(&mut self, st: &State) -> bool {
        let m = self.m;
        let fin = st.matches.last().unwrap().clone();
        for (s, h) in fin {
            for u in 0..s {
                let t = self.tslot(st.slots[u], h);
                match self.cmp_slot(t, st.slots[m - s + u]) {
                    Ordering::Less => return false,
                    Ordering::Greater => break,
                    Ordering::Equal => {}
                }
            }
        }
        true
    }

    fn slots_of(&mut self, cells: &[u8]) -> Vec<Slot> {
        let ns = self.ns;
        cells.chunks(ns).map(|s| self.slot_of(s)).collect()
    }

    fn cells_of(&self, slots: &[Slot]) -> Vec<u8> {
        let mut out = Vec::with_capacity(slots.len() * self.ns);
        for &(c, o) in slots {
            out.extend(self.classes[c].member(&self.sub, o));
        }
        out
    }

    fn next_from(&mut self, st: &mut State, target: &[Slot], from: usize) -> Option<usize> {
        let mut steps = 0;
        let mut from = from;
        let mut target = target.to_vec();
        loop {
            if !self.advance(st, &target, from) {
                return None;
            }
            steps += 1;
            if self.is_necklace(st) {
                return Some(steps);
            }
            target = st.slots.clone();
            from = self.m - 1;
        }
    }

    /// Smallest canonical form strictly greater than `cells`, with the number
    /// of prenecklace steps taken.
    pub fn next_necklace_cells(&mut self, cells: &[u8]) -> Option<(Vec<u8>, usize)> {
        let target = self.slots_of(cells);
        let mut st = State::default();
        let j = self.load(&mut st, &target);
        let from = j.min(self.m - 1);
        let steps = self.next_from(&mut st, &target, from)?;
        Some((self.cells_of(&st.slots), steps))
    }

    /// Whether the word is a prenecklace.
    pub fn is_prenecklace_cells(&mut self, cells: &[u8]) -> bool {
        let target = self.slots_of(cells);
        let mut st = State::default();
        self.load(&mut st, &target) == target.len()
    }

    /// The next prenecklace of a prenecklace and whether it is a necklace.
    pub fn next_prenecklace_cells(&mut self, cells: &[u8]) -> Option<(Vec<u8>, bool)> {
        let target = self.slots_of(cells);
        let mut st = State::default();
        if self.load(&mut st, &target) != target.len() {
            return None;
        }
        if !self.advance(&mut st, &target, self.m - 1) {
            return None;
        }
        let neck = self.is_necklace(&st);
        Some((self.cells_of(&st.slots), neck))
    }
}

fn check_prefix(w: &Word) -> Generator {
    Generator::new(w.size(), w.q())
}

/// Whether the word is a prenecklace.
pub fn is_prenecklace(w: &Word) -> bool {
    check_prefix(w).is_prenecklace_cells(w.cells())
}

/// The next prenecklace after a prenecklace, and whether it is a necklace.
/// Returns `Ok(None)` after the largest word.
pub fn next_prenecklace(w: &Word) -> Result<Option<(Word, bool)>> {
    let mut g = check_prefix(w);
    if !g.is_prenecklace_cells(w.cells()) {
        return Err(Error::InvalidArgument(format!("{} is not a prenecklace", w.to_text())));
    }
    Ok(g.next_prenecklace_cells(w.cells())
        .map(|(c, neck)| (Word::from_parts(w.size().clone(), w.q(), c), neck)))
}

/// Smallest canonical necklace form strictly greater than `w` (which need not
/// be canonical), or `None` when `w` is at least the largest necklace.
pub fn next_necklace(w: &Word) -> Option<Word> {
    next_necklace_counted(w).map(|(w, _)| w)
}

/// [`next_necklace`] together with the number of prenecklace successor steps
/// it took.
pub fn next_necklace_counted(w: &Word) -> Option<(Word, usize)> {
    let mut g = check_prefix(w);
    g.next_necklace_cells(w.cells())
        .map(|(c, steps)| (Word::from_parts(w.size().clone(), w.q(), c), steps))
}

/// Stream of all necklaces of one size in increasing order of canonical form.
pub struct Necklaces {
    gen: Generator,
    state: State,
    started: bool,
    done: bool,
    max_steps: usize,
}

impl Necklaces {
    /// Largest number of prenecklace steps taken between consecutive necklaces so far.
    pub fn max_steps(&self) -> usize {
        self.max_steps
    }
}

/// Enumerate all necklaces of `size` over `q` symbols, smallest first.
pub fn enumerate(size: &SizeVec, q: u8) -> Necklaces {
    Necklaces {
        gen: Generator::new(size, q),
        state: State::default(),
        started: false,
        done: false,
        max_steps: 0,
    }
}

impl Iterator for Necklaces {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.gen.fill(&mut self.state);
        } else {
            let target = self.state.slots.clone();
            let m = self.gen.m;
            match self.gen.next_from(&mut self.state, &target, m - 1) {
                Some(steps) => self.max_steps = self.max_steps.max(steps),
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        let cells = self.gen.cells_of(&self.state.slots);
        Some(Word::from_parts(self.gen.size.clone(), self.gen.q, cells))
    }
}
