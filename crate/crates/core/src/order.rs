//! The recursive slice order on same-size words and canonical forms.
//!
//! Words are flat cell arrays in linear-index order (first coordinate varies
//! fastest), so slice `i` (last coordinate fixed to `i`) is the contiguous
//! block `cells[i·S .. (i+1)·S]` with `S = N / n_d`.
//!
//! Two words are compared at their first differing slice. The slices are
//! compared by the canonical forms of their necklace classes (recursively, one
//! dimension down) and, when those agree, by the index of the smallest
//! translation taking the slice to its canonical form. In one dimension this
//! is plain lexicographic order.

use crate::group::Group;
use std::cmp::Ordering;

/// Translate a cell array: `v_p = w_{p+g}` for the translation with index `g`.
pub fn translate_cells(dims: &[usize], cells: &[u8], g: usize) -> Vec<u8> {
    if g == 0 {
        return cells.to_vec();
    }
    let group = Group::new(dims);
    (0..cells.len()).map(|i| cells[group.add(i, g)]).collect()
}

/// Compare two same-size cell arrays in the recursive slice order.
pub fn compare_cells(dims: &[usize], a: &[u8], b: &[u8]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    match dims.len() {
        0 | 1 => a.cmp(b),
        d => {
            let sub = &dims[..d - 1];
            let s = a.len() / dims[d - 1];
            for (x, y) in a.chunks(s).zip(b.chunks(s)) {
                if x == y {
                    continue;
                }
                let (cx, gx) = canonical_cells(sub, x);
                let (cy, gy) = canonical_cells(sub, y);
                return compare_cells(sub, &cx, &cy).then(gx.cmp(&gy));
            }
            Ordering::Equal
        }
    }
}

/// Canonical form of a cell array together with the smallest translation
/// index `g` such that translating the input by `g` yields the canonical form.
pub fn canonical_cells(dims: &[usize], cells: &[u8]) -> (Vec<u8>, usize) {
    match dims.len() {
        0 => (cells.to_vec(), 0),
        1 => canonical_1d(cells),
        _ => SliceProfile::new(dims, cells).canonical(),
    }
}

/// Whether the cell array is the canonical form of its class.
pub fn is_canonical_cells(dims: &[usize], cells: &[u8]) -> bool {
    canonical_cells(dims, cells).0 == cells
}

/// Least rotation by Booth's algorithm, returning the smallest shift achieving it.
fn canonical_1d(w: &[u8]) -> (Vec<u8>, usize) {
    let n = w.len();
    if n <= 1 {
        return (w.to_vec(), 0);
    }
    let start = booth(w);
    let period = rotational_period(w);
    let g = start % period;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&w[g..]);
    out.extend_from_slice(&w[..g]);
    (out, g)
}

/// Booth's least-rotation algorithm; returns a start index of a least rotation.
fn booth(s: &[u8]) -> usize {
    let n = s.len();
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = f[j - k - 1];
        while i != -1 && sj != s[(k + i as usize + 1) % n] {
            if sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != s[(k + i.wrapping_add(1) as usize) % n] {
            if sj < s[k % n] {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

/// Smallest positive shift `p` with `rotate(w, p) = w`.
fn rotational_period(w: &[u8]) -> usize {
    let n = w.len();
    // prefix-function based smallest period; it divides n exactly when w is periodic
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && w[i] != w[k] {
            k = pi[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let p = n - pi[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

/// Stabiliser of a cell array: all translation indices fixing it.
pub fn stabilizer_cells(dims: &[usize], cells: &[u8]) -> Vec<usize> {
    let group = Group::new(dims);
    (0..group.order())
        .filter(|&g| (0..cells.len()).all(|i| cells[group.add(i, g)] == cells[i]))
        .collect()
}

/// A necklace class of slices together with the data needed to locate and
/// compare its members by integer arithmetic.
#[derive(Clone, Debug)]
pub struct SliceClass {
    /// Canonical form of the class.
    pub canonical: Vec<u8>,
    /// Stabiliser of the canonical form (sorted translation indices).
    pub stab: Vec<usize>,
    /// `coset_min[g]` is the smallest index in the coset `g + stab`.
    pub coset_min: Vec<usize>,
}

impl SliceClass {
    pub fn new(dims: &[usize], canonical: Vec<u8>) -> Self {
        let group = Group::new(dims);
        let stab = stabilizer_cells(dims, &canonical);
        let coset_min = (0..group.order())
            .map(|g| stab.iter().map(|&s| group.add(g, s)).min().unwrap())
            .collect();
        SliceClass {
            canonical,
            stab,
            coset_min,
        }
    }

    /// Distinct offsets of the class in increasing order; each identifies one
    /// member slice.
    pub fn offsets(&self) -> Vec<usize> {
        (0..self.coset_min.len())
            .filter(|&g| self.coset_min[g] == g)
            .collect()
    }

    /// Number of distinct members.
    pub fn orbit_size(&self) -> usize {
        self.coset_min.len() / self.stab.len()
    }

    /// The member slice with the given offset, i.e. the slice `x` with
    /// `translate(x, offset) = canonical`.
    pub fn member(&self, dims: &[usize], offset: usize) -> Vec<u8> {
        let group = Group::new(dims);
        translate_cells(dims, &self.canonical, group.neg(offset))
    }
}

/// Per-slice classification of a word: the class of every slice (as an index
/// into a list of distinct classes sorted by the order) and its offset.
#[derive(Clone, Debug)]
pub struct SliceProfile {
    pub sub: Vec<usize>,
    pub classes: Vec<SliceClass>,
    /// `class_of[i]` indexes `classes`; classes are sorted increasingly.
    pub class_of: Vec<usize>,
    pub offset_of: Vec<usize>,
}

impl SliceProfile {
    /// Classify the slices of a word of size `dims` (which must have `d ≥ 1`).
    pub fn new(dims: &[usize], cells: &[u8]) -> Self {
        let d = dims.len();
        assert!(d >= 1);
        let sub = dims[..d - 1].to_vec();
        let s = cells.len() / dims[d - 1];
        let mut raw: Vec<(Vec<u8>, usize)> = cells.chunks(s).map(|x| canonical_cells(&sub, x)).collect();
        let mut distinct: Vec<Vec<u8>> = raw.iter().map(|(c, _)| c.clone()).collect();
        distinct.sort_by(|a, b| compare_cells(&sub, a, b));
        distinct.dedup();
        let class_of = raw
            .iter()
            .map(|(c, _)| distinct.iter().position(|x| x == c).unwrap())
            .collect();
        let offset_of = raw.iter_mut().map(|(_, g)| *g).collect();
        let classes = distinct.into_iter().map(|c| SliceClass::new(&sub, c)).collect();
        SliceProfile {
            sub,
            classes,
            class_of,
            offset_of,
        }
    }

    /// Slot key of slice `i` after translating it by cross-section translation `h`.
    #[inline]
    pub fn slot(&self, i: usize, h: usize, group: &Group) -> (usize, usize) {
        let c = self.class_of[i];
        (c, self.classes[c].coset_min[group.sub(self.offset_of[i], h)])
    }

    /// Canonical form of the whole word and the smallest translation index to it.
    pub fn canonical(&self) -> (Vec<u8>, usize) {
        let m = self.class_of.len();
        let sg = Group::new(&self.sub);
        let ns = sg.order();
        let key = |g: usize| -> Vec<(usize, usize)> {
            let (h, gd) = (g % ns, g / ns);
            (0..m).map(|i| self.slot((i + gd) % m, h, &sg)).collect()
        };
        let mut best = key(0);
        let mut best_g = 0;
        for g in 1..ns * m {
            let k = key(g);
            if k < best {
                best = k;
                best_g = g;
            }
        }
        let mut cells = Vec::with_capacity(ns * m);
        for &(c, off) in &best {
            cells.extend(self.classes[c].member(&self.sub, off));
        }
        (cells, best_g)
    }
}
