// SPDX-License-Identifier: Apache-2.0

//! Small-integer number theory: factorization, divisors and Euler's totient.

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient via the factorization of `n`. `totient(1) == 1`.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined on positive integers");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// `base^exp mod m` without overflow for `m < 2^32`.
pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}

/// Iterates the primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> impl Iterator<Item = u64> {
    (2..=limit).filter(|&n| is_prime(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coprime_count(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn totient_matches_counting() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        for n in 1..=300 {
            assert_eq!(totient(n), coprime_count(n), "n = {n}");
        }
    }

    #[test]
    fn gauss_sum_over_twelve() {
        let sum: u64 = divisors(12).into_iter().map(totient).sum();
        assert_eq!(sum, 12);
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(15));
    }

    #[test]
    fn modular_power() {
        assert_eq!(pow_mod(2, 2, 5), 4);
        assert_eq!(pow_mod(2, 2, 3), 1);
        assert_eq!(pow_mod(7, 0, 1), 0);
    }
}
