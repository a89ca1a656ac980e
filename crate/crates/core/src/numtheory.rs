//! Small number-theoretic helpers: divisors, Euler's totient, the Möbius
//! function, multinomial coefficients and divisor vectors.

use num_bigint::BigUint;
use num_traits::One;

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n > 0, "divisors of zero are undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient function.
pub fn totient(n: usize) -> usize {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// The Möbius function.
pub fn mobius(n: usize) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of the Möbius function over a pair of vectors, `Π μ(nᵢ / fᵢ)`.
pub fn mobius_vec(n: &[usize], f: &[usize]) -> i64 {
    n.iter().zip(f).map(|(&a, &b)| mobius(a / b)).product()
}

/// Every componentwise divisor vector of `n`, in lexicographic order.
pub fn divisor_vectors(n: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &ni in n {
        let ds = divisors(ni);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                ds.iter().map(move |&d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// The multinomial coefficient `(Σ parts)! / Π partsᵢ!`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0usize;
    for &p in parts {
        for k in 1..=p {
            total += 1;
            acc = acc * BigUint::from(total) / BigUint::from(k);
        }
    }
    acc
}

/// Greatest common divisor of a list (0 for an empty list).
pub fn gcd_all(xs: &[usize]) -> usize {
    xs.iter().fold(0, |acc, &x| num_integer::gcd(acc, x))
}

/// Least common multiple of a list (1 for an empty list).
pub fn lcm_all(xs: &[usize]) -> usize {
    xs.iter().fold(1, |acc, &x| num_integer::lcm(acc, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_are_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn totient_and_mobius_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn multinomial_matches_factorials() {
        assert_eq!(multinomial(&[2, 2]), BigUint::from(6u32));
        assert_eq!(multinomial(&[3, 1, 2]), factorial(6) / (factorial(3) * factorial(2)));
        assert_eq!(multinomial(&[]), BigUint::one());
    }

    #[test]
    fn divisor_vectors_cover_the_lattice() {
        let v = divisor_vectors(&[2, 4]);
        assert_eq!(v.len(), 6);
        assert_eq!(v[0], vec![1, 1]);
        assert_eq!(v[5], vec![2, 4]);
    }
}
