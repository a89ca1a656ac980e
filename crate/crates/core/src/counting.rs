//! Closed-form counts of necklaces, Lyndon words and atranslational
//! necklaces, unconstrained and with fixed content (Parikh vector).

use crate::error::{Error, Result};
use crate::numtheory::{divisor_vectors, divisors, lcm_all, mobius, mobius_vec, multinomial, totient};
use crate::word::SizeVec;
use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Signed, Zero};

fn pow(q: u8, e: usize) -> BigUint {
    Pow::pow(BigUint::from(q), e as u32)
}

fn exact_div(total: BigInt, n: usize) -> BigUint {
    let n = BigInt::from(n);
    assert!((&total % &n).is_zero(), "non-integral count");
    assert!(!total.is_negative(), "negative count");
    (total / n).to_biguint().unwrap()
}

/// Number of necklaces: `(1/N) Σ_{f|n} Π φ(fᵢ) · q^{N / lcm(f)}`.
pub fn count_necklaces(n: &SizeVec, q: u8) -> BigUint {
    let total_cells = n.total();
    let mut total = BigInt::zero();
    for f in divisor_vectors(n.dims()) {
        let phi: usize = f.iter().map(|&x| totient(x)).product();
        total += BigInt::from(phi) * BigInt::from(pow(q, total_cells / lcm_all(&f)));
    }
    exact_div(total, total_cells)
}

/// Number of Lyndon (aperiodic) necklaces: `Σ_{f|n} Π μ(nᵢ/fᵢ) · |N(f)|`.
pub fn count_lyndon(n: &SizeVec, q: u8) -> BigUint {
    let mut total = BigInt::zero();
    for f in n.divisor_vectors() {
        let mu = mobius_vec(n.dims(), f.dims());
        if mu != 0 {
            total += BigInt::from(mu) * BigInt::from(count_necklaces(&f, q));
        }
    }
    total.to_biguint().expect("negative Lyndon count")
}

/// Number of atranslational necklaces by Möbius inversion over the subgroup
/// lattice: only elementary abelian subgroups `K` have `μ(0, K) ≠ 0`, and a
/// subgroup of order `|K|` fixes `q^{N/|K|}` words.
pub fn count_atranslational(n: &SizeVec, q: u8) -> BigUint {
    let total_cells = n.total();
    let mut total = BigInt::zero();
    for (k, mu) in n.group().elementary_abelian_subgroups() {
        total += BigInt::from(mu) * BigInt::from(pow(q, total_cells / k.len()));
    }
    exact_div(total, total_cells)
}

/// `|G(l, n)|`: translations `x` of the cross-section `(n₁,…,n_{d−1})` of
/// order exactly `n_d / l`.
pub fn g_set_size(l: usize, n: &[usize]) -> Result<usize> {
    let d = n.len();
    if d == 0 || l == 0 || n[d - 1] % l != 0 {
        return Err(Error::InvalidArgument(format!("{l} does not divide the last dimension of {n:?}")));
    }
    let target = n[d - 1] / l;
    // elements of exact order t in Π Z_{nᵢ}: Σ_{e|t} μ(t/e) Π gcd(e, nᵢ)
    let mut total: i64 = 0;
    for e in divisors(target) {
        let fixed: usize = n[..d - 1].iter().map(|&ni| num_integer::gcd(e, ni)).product();
        total += mobius(target / e) * fixed as i64;
    }
    Ok(total as usize)
}

/// `I(i, l, n)` (with `1 ≤ i ≤ d`): the number of higher dimensions `j` whose
/// translations can cancel a translation in dimension `i`.
pub fn i_func(i: usize, l: usize, n: &[usize]) -> usize {
    let d = n.len();
    if i >= d || l > 1 {
        0
    } else if n[i - 1] == n[d - 1] {
        1 + i_func(i, l, &n[..d - 1])
    } else {
        i_func(i, l, &n[..d - 1])
    }
}

/// `H(i, l, n, d)`: the number of translation sets that build a
/// `d`-dimensional Lyndon word from an atranslational word whose last
/// dimension is `i` with length `l`.
pub fn h_func(i: usize, l: usize, n: &[usize], d: usize) -> Result<BigInt> {
    if d == i {
        return if l == n[d - 1] {
            Ok(BigInt::from(1))
        } else {
            Ok(BigInt::from(g_set_size(l, &n[..d])?))
        };
    }
    let g = g_set_size(1, &n[..d])? as i64 - i_func(i, l, &n[..d]) as i64;
    Ok(BigInt::from(g) * h_func(i, l, &n[..d - 1], d - 1)?)
}

/// The atranslational count assembled from Lyndon counts and the `G/I/H`
/// translation combinatorics (read with the correction running over
/// `l | nᵢ, l < nᵢ` and subword sizes `(n₁,…,n_{i−1}, l)`). Kept for
/// comparison with [`count_atranslational`], which is exact.
pub fn count_atranslational_via_lyndon(n: &SizeVec, q: u8) -> Result<BigInt> {
    let dims = n.dims();
    let d = dims.len();
    let mut total = BigInt::from(count_lyndon(n, q));
    if d == 1 {
        return Ok(total);
    }
    for i in 1..=d {
        for l in divisors(dims[i - 1]) {
            if l == dims[i - 1] {
                continue;
            }
            let sign: i64 = dims.get(i..d - 1).unwrap_or(&[]).iter().map(|&t| -mobius(t)).product::<i64>() * -mobius(dims[i - 1] / l);
            if sign == 0 {
                continue;
            }
            let mut smaller = dims[..i - 1].to_vec();
            smaller.push(l);
            let a = count_atranslational_via_lyndon(&SizeVec::new(&smaller)?, q)?;
            total -= BigInt::from(sign) * a * h_func(i, l, dims, d)?;
        }
    }
    Ok(total)
}

fn check_content(n: &SizeVec, p: &[usize]) -> Result<()> {
    if p.iter().sum::<usize>() != n.total() {
        return Err(Error::InvalidContent(format!(
            "{p:?} sums to {} but the size has {} cells",
            p.iter().sum::<usize>(),
            n.total()
        )));
    }
    Ok(())
}

fn scaled(p: &[usize], k: usize) -> Option<Vec<usize>> {
    if p.iter().all(|&x| x % k == 0) {
        Some(p.iter().map(|&x| x / k).collect())
    } else {
        None
    }
}

/// Number of necklaces with Parikh vector `p`.
pub fn count_fc_necklaces(n: &SizeVec, p: &[usize]) -> Result<BigUint> {
    check_content(n, p)?;
    let mut total = BigInt::zero();
    for f in divisor_vectors(n.dims()) {
        let l = lcm_all(&f);
        if let Some(ps) = scaled(p, l) {
            let phi: usize = f.iter().map(|&x| totient(x)).product();
            total += BigInt::from(phi) * BigInt::from(multinomial(&ps));
        }
    }
    Ok(exact_div(total, n.total()))
}

/// Number of Lyndon words with Parikh vector `p`.
pub fn count_fc_lyndon(n: &SizeVec, p: &[usize]) -> Result<BigUint> {
    check_content(n, p)?;
    let mut total = BigInt::zero();
    for f in n.divisor_vectors() {
        let mu = mobius_vec(n.dims(), f.dims());
        if mu == 0 {
            continue;
        }
        if let Some(ps) = scaled(p, n.total() / f.total()) {
            total += BigInt::from(mu) * BigInt::from(count_fc_necklaces(&f, &ps)?);
        }
    }
    Ok(total.to_biguint().expect("negative Lyndon count"))
}

/// Number of atranslational necklaces with Parikh vector `p`.
pub fn count_fc_atranslational(n: &SizeVec, p: &[usize]) -> Result<BigUint> {
    check_content(n, p)?;
    let mut total = BigInt::zero();
    for (k, mu) in n.group().elementary_abelian_subgroups() {
        if let Some(ps) = scaled(p, k.len()) {
            total += BigInt::from(mu) * BigInt::from(multinomial(&ps));
        }
    }
    Ok(exact_div(total, n.total()))
}

/// Every Parikh vector over `q` symbols summing to `total`, in lexicographic order.
pub fn parikh_vectors(total: usize, q: usize) -> Vec<Vec<usize>> {
    if q == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if q == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in parikh_vectors(total - first, q - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(d: &[usize]) -> SizeVec {
        SizeVec::new(d).unwrap()
    }

    #[test]
    fn documented_counts() {
        assert_eq!(count_necklaces(&s(&[2, 2]), 2), BigUint::from(7u32));
        assert_eq!(count_necklaces(&s(&[4]), 2), BigUint::from(6u32));
        assert_eq!(count_necklaces(&s(&[1, 1, 1]), 5), BigUint::from(5u32));
    }

    #[test]
    fn lyndon_and_atranslational_small() {
        assert_eq!(count_lyndon(&s(&[2, 2]), 2), BigUint::from(3u32));
        assert_eq!(count_lyndon(&s(&[4]), 2), BigUint::from(3u32));
        assert_eq!(count_lyndon(&s(&[1]), 4), BigUint::from(4u32));
        assert_eq!(count_atranslational(&s(&[4]), 2), BigUint::from(3u32));
        assert_eq!(count_atranslational(&s(&[2, 2]), 2), BigUint::from(2u32));
    }

    #[test]
    fn fixed_content_small() {
        assert_eq!(count_fc_necklaces(&s(&[4]), &[2, 2]).unwrap(), BigUint::from(2u32));
        assert_eq!(count_fc_necklaces(&s(&[4]), &[4, 0]).unwrap(), BigUint::from(1u32));
        let total: BigUint = parikh_vectors(4, 2)
            .iter()
            .map(|p| count_fc_necklaces(&s(&[2, 2]), p).unwrap())
            .sum();
        assert_eq!(total, BigUint::from(7u32));
        assert!(count_fc_necklaces(&s(&[4]), &[1, 2]).is_err());
    }

    #[test]
    fn g_i_h_base_cases() {
        assert_eq!(h_func(2, 2, &[2, 2], 2).unwrap(), BigInt::from(1));
        assert_eq!(i_func(2, 1, &[2, 2]), 0);
        assert_eq!(g_set_size(1, &[2, 2]).unwrap(), 1);
        assert_eq!(g_set_size(2, &[2, 2]).unwrap(), 1);
        assert!(g_set_size(3, &[2, 2]).is_err());
    }
}
