//! Weights accumulated by the counting automaton: plain counts, or counts
//! graded by Parikh vector (truncated to vectors below a target content).

use crate::numtheory::multinomial;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};
use std::sync::Arc;

/// A commutative semiring-like weight with the few primitives the automaton needs.
pub trait Weight: Clone + std::fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn sub_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    /// Multiply by a non-negative integer.
    fn scale(&self, k: usize) -> Self;
    /// Weight of one particular slice with the given cells.
    fn slice(&self, cells: &[u8]) -> Self;
    /// Weight of the set of single symbols strictly below `c`.
    fn symbols_below(&self, c: u8) -> Self;
    /// Weight of all slices of `cells` cells fixed by a group of order `orbit`
    /// acting freely on the cells.
    fn fixed_slices(&self, cells: usize, orbit: usize) -> Self;
    /// Replace every content vector `c` by `k·c` (weight of a word made of `k`
    /// translated copies of a block).
    fn stretch(&self, k: usize) -> Self;
}

/// Plain counting over an alphabet of size `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Count {
    pub q: u8,
    pub value: BigInt,
}

impl Count {
    pub fn unit(q: u8) -> Self {
        Count { q, value: BigInt::one() }
    }
}

impl Weight for Count {
    fn zero(&self) -> Self {
        Count { q: self.q, value: BigInt::zero() }
    }
    fn one(&self) -> Self {
        Count { q: self.q, value: BigInt::one() }
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add_assign(&mut self, other: &Self) {
        self.value += &other.value;
    }
    fn sub_assign(&mut self, other: &Self) {
        self.value -= &other.value;
    }
    fn mul(&self, other: &Self) -> Self {
        Count { q: self.q, value: &self.value * &other.value }
    }
    fn scale(&self, k: usize) -> Self {
        Count { q: self.q, value: &self.value * BigInt::from(k) }
    }
    fn slice(&self, _cells: &[u8]) -> Self {
        self.one()
    }
    fn symbols_below(&self, c: u8) -> Self {
        Count { q: self.q, value: BigInt::from(c as u32 - 1) }
    }
    fn fixed_slices(&self, cells: usize, orbit: usize) -> Self {
        Count { q: self.q, value: Pow::pow(BigInt::from(self.q), (cells / orbit) as u32) }
    }
    fn stretch(&self, _k: usize) -> Self {
        self.clone()
    }
}

/// Index layout of the truncated content vectors `0 ≤ c ≤ bound`, in mixed
/// radix with the first symbol varying fastest.
#[derive(Debug, PartialEq, Eq)]
struct Shape {
    bound: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
    /// `digits[i·q + s]`: component `s` of the content vector with index `i`
    digits: Vec<u32>,
}

impl Shape {
    fn new(bound: &[usize]) -> Self {
        let q = bound.len();
        let mut strides = Vec::with_capacity(q);
        let mut len = 1usize;
        for &b in bound {
            strides.push(len);
            len *= b + 1;
        }
        let mut digits = Vec::with_capacity(len * q);
        for i in 0..len {
            for s in 0..q {
                digits.push(((i / strides[s]) % (bound[s] + 1)) as u32);
            }
        }
        Shape { bound: bound.to_vec(), strides, len, digits }
    }

    fn len(&self) -> usize {
        self.len
    }

    fn index(&self, content: &[usize]) -> Option<usize> {
        if content.len() != self.bound.len() || content.iter().zip(&self.bound).any(|(c, b)| c > b) {
            return None;
        }
        Some(content.iter().zip(&self.strides).map(|(c, s)| c * s).sum())
    }

    /// Index of the sum of the vectors with indices `a` and `b`, if it fits.
    fn add(&self, a: usize, b: usize) -> Option<usize> {
        let q = self.bound.len();
        let (da, db) = (&self.digits[a * q..(a + 1) * q], &self.digits[b * q..(b + 1) * q]);
        for s in 0..q {
            if (da[s] + db[s]) as usize > self.bound[s] {
                return None;
            }
        }
        Some(a + b)
    }
}

/// Coefficient arithmetic for [`Graded`]: machine integers when the counts
/// provably fit, big integers otherwise.
trait Coeff: Clone + std::fmt::Debug + PartialEq {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn add(&mut self, other: &Self);
    fn sub(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn from_big(v: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn add(&mut self, other: &Self) {
        *self = self.checked_add(*other).expect("graded coefficient overflow");
    }
    fn sub(&mut self, other: &Self) {
        *self = self.checked_sub(*other).expect("graded coefficient overflow");
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("graded coefficient overflow")
    }
    fn from_big(v: &BigInt) -> Self {
        i128::try_from(v).expect("graded coefficient overflow")
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&mut self, other: &Self) {
        *self += other;
    }
    fn sub(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_big(v: &BigInt) -> Self {
        v.clone()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

/// Apply a generic operation to the coefficient vector, whichever its representation.
macro_rules! with_coeffs {
    ($c:expr, $v:ident => $body:expr) => {
        match $c {
            Coeffs::Small($v) => $body,
            Coeffs::Big($v) => $body,
        }
    };
}

fn mul_into<C: Coeff>(shape: &Shape, a: &[C], b: &[C]) -> Vec<C> {
    let mut out = vec![C::nil(); shape.len()];
    let rhs: Vec<(usize, &C)> = b.iter().enumerate().filter(|(_, v)| !v.is_nil()).collect();
    for (ia, va) in a.iter().enumerate().filter(|(_, v)| !v.is_nil()) {
        for &(ib, vb) in &rhs {
            if let Some(i) = shape.add(ia, ib) {
                out[i].add(&va.mul(vb));
            }
        }
    }
    out
}

/// Counts graded by Parikh vector, truncated to vectors `≤ bound` componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded {
    shape: Arc<Shape>,
    coeffs: Coeffs,
}

impl Graded {
    pub fn unit(bound: &[usize]) -> Self {
        let shape = Arc::new(Shape::new(bound));
        // Every coefficient counts words of at most N = Σ bound cells (times
        // small multiplicities), so q^N with generous headroom decides whether
        // machine integers suffice.
        let n: usize = bound.iter().sum();
        let bits = n as f64 * (bound.len().max(2) as f64).log2();
        let mut coeffs = if bits + 40.0 <= 126.0 {
            Coeffs::Small(vec![0; shape.len()])
        } else {
            Coeffs::Big(vec![BigInt::zero(); shape.len()])
        };
        with_coeffs!(&mut coeffs, v => v[0] = Coeff::unit());
        Graded { shape, coeffs }
    }

    /// The truncation bound.
    pub fn bound(&self) -> &[usize] {
        &self.shape.bound
    }

    fn empty(&self) -> Self {
        let len = self.shape.len();
        Graded {
            shape: self.shape.clone(),
            coeffs: match &self.coeffs {
                Coeffs::Small(_) => Coeffs::Small(vec![0; len]),
                Coeffs::Big(_) => Coeffs::Big(vec![BigInt::zero(); len]),
            },
        }
    }

    fn insert(&mut self, content: &[usize], value: &BigInt) {
        if let Some(i) = self.shape.index(content) {
            with_coeffs!(&mut self.coeffs, v => v[i].add(&Coeff::from_big(value)));
        }
    }

    /// Coefficient of a content vector.
    pub fn coefficient(&self, content: &[usize]) -> BigInt {
        match self.shape.index(content) {
            Some(i) => with_coeffs!(&self.coeffs, v => v[i].to_big()),
            None => BigInt::zero(),
        }
    }

    /// Nonzero coefficients with their indices.
    fn nonzero(&self) -> Vec<(usize, BigInt)> {
        with_coeffs!(&self.coeffs, v => v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_nil())
            .map(|(i, x)| (i, x.to_big()))
            .collect())
    }
}

impl Weight for Graded {
    fn zero(&self) -> Self {
        self.empty()
    }
    fn one(&self) -> Self {
        let mut out = self.empty();
        with_coeffs!(&mut out.coeffs, v => v[0] = Coeff::unit());
        out
    }
    fn is_zero(&self) -> bool {
        with_coeffs!(&self.coeffs, v => v.iter().all(|x| x.is_nil()))
    }
    fn add_assign(&mut self, other: &Self) {
        match (&mut self.coeffs, &other.coeffs) {
            (Coeffs::Small(a), Coeffs::Small(b)) => a.iter_mut().zip(b).for_each(|(x, y)| x.add(y)),
            (Coeffs::Big(a), Coeffs::Big(b)) => a.iter_mut().zip(b).for_each(|(x, y)| Coeff::add(x, y)),
            _ => unreachable!("mixed coefficient representations"),
        }
    }
    fn sub_assign(&mut self, other: &Self) {
        match (&mut self.coeffs, &other.coeffs) {
            (Coeffs::Small(a), Coeffs::Small(b)) => a.iter_mut().zip(b).for_each(|(x, y)| x.sub(y)),
            (Coeffs::Big(a), Coeffs::Big(b)) => a.iter_mut().zip(b).for_each(|(x, y)| Coeff::sub(x, y)),
            _ => unreachable!("mixed coefficient representations"),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Small(a), Coeffs::Small(b)) => Coeffs::Small(mul_into(&self.shape, a, b)),
            (Coeffs::Big(a), Coeffs::Big(b)) => Coeffs::Big(mul_into(&self.shape, a, b)),
            _ => unreachable!("mixed coefficient representations"),
        };
        Graded { shape: self.shape.clone(), coeffs }
    }
    fn scale(&self, k: usize) -> Self {
        let mut out = self.clone();
        with_coeffs!(&mut out.coeffs, v => {
            let k = Coeff::from_big(&BigInt::from(k));
            for x in v.iter_mut() {
                *x = Coeff::mul(&*x, &k);
            }
        });
        out
    }
    fn slice(&self, cells: &[u8]) -> Self {
        let mut key = vec![0; self.shape.bound.len()];
        for &s in cells {
            key[s as usize - 1] += 1;
        }
        let mut out = self.empty();
        out.insert(&key, &BigInt::one());
        out
    }
    fn symbols_below(&self, c: u8) -> Self {
        let mut out = self.empty();
        for s in 1..c {
            let mut key = vec![0; self.shape.bound.len()];
            key[s as usize - 1] = 1;
            out.insert(&key, &BigInt::one());
        }
        out
    }
    fn fixed_slices(&self, cells: usize, orbit: usize) -> Self {
        // choose a symbol for each of the cells/orbit orbits
        let r = cells / orbit;
        let q = self.shape.bound.len();
        let mut out = self.empty();
        let mut parts = vec![0usize; q];
        fn rec(i: usize, left: usize, parts: &mut Vec<usize>, orbit: usize, out: &mut Graded) {
            let q = parts.len();
            if i + 1 == q {
                parts[i] = left;
                let key: Vec<usize> = parts.iter().map(|p| p * orbit).collect();
                let coeff: BigUint = multinomial(parts);
                out.insert(&key, &BigInt::from(coeff));
                return;
            }
            for k in 0..=left {
                if k * orbit > out.shape.bound[i] {
                    break;
                }
                parts[i] = k;
                rec(i + 1, left - k, parts, orbit, out);
            }
        }
        rec(0, r, &mut parts, orbit, &mut out);
        out
    }
    fn stretch(&self, k: usize) -> Self {
        let mut out = self.empty();
        let q = self.shape.bound.len();
        for (i, v) in self.nonzero() {
            let key: Vec<usize> = self.shape.digits[i * q..(i + 1) * q].iter().map(|&x| x as usize * k).collect();
            out.insert(&key, &v);
        }
        out
    }
}
