//! Multidimensional words, size vectors and translations.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::numtheory::divisor_vectors;
use crate::order::{canonical_cells, compare_cells, stabilizer_cells, translate_cells};
use std::cmp::Ordering;
use std::fmt;

/// The dimension vector `(n₁,…,n_d)` of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SizeVec {
    dims: Vec<usize>,
}

impl SizeVec {
    /// A size vector with `d ≥ 1` positive dimensions.
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidSize("at least one dimension is required".into()));
        }
        if dims.iter().any(|&n| n == 0) {
            return Err(Error::InvalidSize(format!("{dims:?} has a zero dimension")));
        }
        Ok(SizeVec { dims: dims.to_vec() })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of dimensions `d`.
    pub fn d(&self) -> usize {
        self.dims.len()
    }

    /// Total number of cells `N`.
    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    /// Length of the last dimension, i.e. the number of slices.
    pub fn last(&self) -> usize {
        self.dims[self.dims.len() - 1]
    }

    /// The translation group acting on words of this size.
    pub fn group(&self) -> Group {
        Group::new(&self.dims)
    }

    /// Every componentwise divisor vector.
    pub fn divisor_vectors(&self) -> Vec<SizeVec> {
        divisor_vectors(&self.dims)
            .into_iter()
            .map(|dims| SizeVec { dims })
            .collect()
    }

    /// Whether every dimension of `other` divides the matching dimension here.
    pub fn divisible_by(&self, other: &SizeVec) -> bool {
        self.d() == other.d() && self.dims.iter().zip(&other.dims).all(|(a, b)| a % b == 0)
    }
}

impl fmt::Display for SizeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A translation `(g₁,…,g_d)` bound to a size vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Translation {
    size: SizeVec,
    offsets: Vec<usize>,
}

impl Translation {
    pub fn new(size: &SizeVec, offsets: &[usize]) -> Result<Self> {
        if offsets.len() != size.d() || offsets.iter().zip(size.dims()).any(|(g, n)| g >= n) {
            return Err(Error::SizeMismatch(format!(
                "translation {offsets:?} does not fit size {size}"
            )));
        }
        Ok(Translation {
            size: size.clone(),
            offsets: offsets.to_vec(),
        })
    }

    /// The translation with the given linear index.
    pub fn from_index(size: &SizeVec, index: usize) -> Self {
        Translation {
            size: size.clone(),
            offsets: size.group().coords(index),
        }
    }

    pub fn identity(size: &SizeVec) -> Self {
        Translation::from_index(size, 0)
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn size(&self) -> &SizeVec {
        &self.size
    }

    /// `Σ gᵢ·Π_{j<i} nⱼ`.
    pub fn index(&self) -> usize {
        self.size.group().index(&self.offsets)
    }

    pub fn compose(&self, other: &Translation) -> Result<Translation> {
        if self.size != other.size {
            return Err(Error::SizeMismatch("translations of different sizes".into()));
        }
        let g = self.size.group();
        Ok(Translation::from_index(&self.size, g.add(self.index(), other.index())))
    }

    pub fn inverse(&self) -> Translation {
        let g = self.size.group();
        Translation::from_index(&self.size, g.neg(self.index()))
    }
}

/// A `d`-dimensional word over the alphabet `{1,…,q}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    size: SizeVec,
    q: u8,
    cells: Vec<u8>,
}

impl Word {
    /// Build a word from cells in linear-index order.
    pub fn new(size: SizeVec, q: u8, cells: Vec<u8>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument("alphabet size must be at least 1".into()));
        }
        if cells.len() != size.total() {
            return Err(Error::SizeMismatch(format!(
                "{} cells given for size {} ({} cells)",
                cells.len(),
                size,
                size.total()
            )));
        }
        if let Some(&s) = cells.iter().find(|&&s| s == 0 || s > q) {
            return Err(Error::InvalidSymbol(format!("symbol {s} outside 1..={q}")));
        }
        Ok(Word { size, q, cells })
    }

    /// The word whose every cell is `symbol`.
    pub fn constant(size: &SizeVec, q: u8, symbol: u8) -> Self {
        Word {
            size: size.clone(),
            q,
            cells: vec![symbol; size.total()],
        }
    }

    pub(crate) fn from_parts(size: SizeVec, q: u8, cells: Vec<u8>) -> Self {
        Word { size, q, cells }
    }

    pub fn size(&self) -> &SizeVec {
        &self.size
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn dims(&self) -> &[usize] {
        self.size.dims()
    }

    /// Number of cells in one slice.
    pub fn slice_len(&self) -> usize {
        self.size.total() / self.size.last()
    }

    /// Slice `i` (zero-based): all cells whose last coordinate is `i`, as a
    /// word of the cross-section size. One-dimensional words have single-symbol slices.
    pub fn slice(&self, i: usize) -> Result<Word> {
        if i >= self.size.last() {
            return Err(Error::InvalidArgument(format!("slice {i} out of range")));
        }
        let s = self.slice_len();
        let d = self.size.d();
        let dims = if d == 1 { vec![1] } else { self.dims()[..d - 1].to_vec() };
        Ok(Word::from_parts(
            SizeVec { dims },
            self.q,
            self.cells[i * s..(i + 1) * s].to_vec(),
        ))
    }

    /// The slices as raw cell blocks.
    pub fn slices(&self) -> std::slice::Chunks<'_, u8> {
        self.cells.chunks(self.slice_len())
    }

    /// Cyclic subword of size `m` starting at position `p`.
    pub fn subword(&self, p: &[usize], m: &[usize]) -> Result<Word> {
        if p.len() != self.size.d() || m.len() != self.size.d() {
            return Err(Error::SizeMismatch("position/size dimension mismatch".into()));
        }
        if m.iter().zip(self.dims()).any(|(a, b)| a > b || *a == 0) {
            return Err(Error::InvalidArgument(format!("subword size {m:?} too large")));
        }
        let g = self.size.group();
        let sub = Group::new(m);
        let cells = (0..sub.order())
            .map(|i| {
                let c: Vec<usize> = sub.coords(i).iter().zip(p).map(|(a, b)| a + b).collect();
                self.cells[g.index(&c)]
            })
            .collect();
        Ok(Word::from_parts(SizeVec::new(m)?, self.q, cells))
    }

    /// `v_p = w_{p+g}`.
    pub fn translate(&self, g: &Translation) -> Result<Word> {
        if g.size() != &self.size {
            return Err(Error::SizeMismatch("translation size differs from word size".into()));
        }
        Ok(self.translate_index(g.index()))
    }

    pub fn translate_index(&self, g: usize) -> Word {
        Word::from_parts(self.size.clone(), self.q, translate_cells(self.dims(), &self.cells, g))
    }

    /// Compare two words of equal size in the recursive slice order.
    pub fn compare(&self, other: &Word) -> Result<Ordering> {
        if self.size != other.size {
            return Err(Error::SizeMismatch("cannot compare words of different sizes".into()));
        }
        Ok(compare_cells(self.dims(), &self.cells, &other.cells))
    }

    /// Canonical form of the necklace of this word and the smallest translation
    /// `g` with `translate(self, g)` equal to it.
    pub fn canonicalize(&self) -> (Word, Translation) {
        let (cells, g) = canonical_cells(self.dims(), &self.cells);
        (
            Word::from_parts(self.size.clone(), self.q, cells),
            Translation::from_index(&self.size, g),
        )
    }

    pub fn is_canonical(&self) -> bool {
        canonical_cells(self.dims(), &self.cells).0 == self.cells
    }

    /// All translations fixing the word, and the number of distinct translates.
    pub fn symmetry(&self) -> (Vec<Translation>, usize) {
        let stab = stabilizer_cells(self.dims(), &self.cells);
        let distinct = self.size.total() / stab.len();
        (
            stab.into_iter().map(|g| Translation::from_index(&self.size, g)).collect(),
            distinct,
        )
    }

    pub fn is_atranslational(&self) -> bool {
        stabilizer_cells(self.dims(), &self.cells).len() == 1
    }

    /// Minimal period size and the period subword. The divisor vectors are
    /// scanned by increasing cell count, ties broken by index order.
    pub fn period(&self) -> (SizeVec, Word) {
        let mut cands = self.size.divisor_vectors();
        cands.sort_by_key(|f| (f.total(), f.dims().iter().rev().cloned().collect::<Vec<_>>()));
        let g = self.size.group();
        for f in cands {
            let tiles = (0..self.cells.len()).all(|i| {
                let c: Vec<usize> = g.coords(i).iter().zip(f.dims()).map(|(a, b)| a % b).collect();
                self.cells[i] == self.cells[g.index(&c)]
            });
            if tiles {
                let b = self.subword(&vec![0; self.size.d()], f.dims()).unwrap();
                return (f, b);
            }
        }
        unreachable!("the full size always tiles")
    }

    pub fn is_aperiodic(&self) -> bool {
        self.period().0 == self.size
    }

    /// Occurrences of each symbol `1..=q`.
    pub fn parikh(&self) -> Vec<usize> {
        let mut p = vec![0; self.q as usize];
        for &s in &self.cells {
            p[s as usize - 1] += 1;
        }
        p
    }

    /// Text rendering: letters `a..z` for `q ≤ 26`, otherwise comma-separated
    /// integers. Two-dimensional words are rendered as `[row;row;…]` with one
    /// slice per row; higher dimensions use the same bracket form over slices
    /// of the flattened cross-section.
    pub fn to_text(&self) -> String {
        let render = |cells: &[u8]| -> String {
            if self.q <= 26 {
                cells.iter().map(|&s| (b'a' + s - 1) as char).collect()
            } else {
                cells.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        if self.size.d() == 1 {
            render(&self.cells)
        } else {
            let rows: Vec<String> = self.slices().map(render).collect();
            format!("[{}]", rows.join(";"))
        }
    }

    /// Grid rendering for two-dimensional words: one slice per line.
    pub fn to_grid(&self) -> String {
        if self.size.d() == 1 {
            return self.to_text();
        }
        let t = self.to_text();
        t[1..t.len() - 1].replace(';', "\n")
    }

    /// Parse a one-dimensional word (`abab` or `1,2,1,2`), a bracketed grid
    /// `[ab;ba]`, or a newline-separated grid, for the given size.
    pub fn parse_text(text: &str, size: &SizeVec, q: u8) -> Result<Word> {
        let t = text.trim();
        let t = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t);
        let mut cells = Vec::new();
        for row in t.split(|c| c == ';' || c == '\n') {
            let row = row.trim();
            if q > 26 {
                for tok in row.split(',').filter(|s| !s.trim().is_empty()) {
                    let v: u8 = tok
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))?;
                    cells.push(v);
                }
            } else {
                for ch in row.chars() {
                    if !ch.is_ascii_lowercase() {
                        return Err(Error::Parse(format!("bad symbol {ch:?}")));
                    }
                    cells.push(ch as u8 - b'a' + 1);
                }
            }
        }
        Word::new(size.clone(), q, cells)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
