//! Integer helpers: primality, factorization, and the brute-force scans
//! behind the number-theoretic lemmas used by the classification.

use serde::{Deserialize, Serialize};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
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
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// True when `n` is a power of an odd prime (exponent at least one).
pub fn is_odd_prime_power(n: u64) -> bool {
    matches!(prime_power(n), Some((p, _)) if p != 2)
}

pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// The largest odd divisor of `n`.
pub fn odd_part(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    n >> n.trailing_zeros()
}

/// The largest divisor of `n` that is a power of `p`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut n = n;
    while n > 0 && n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Outcome of the three number-theoretic scans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaScan {
    /// `m` in `[2, m_max]` with `2^m + 1` and `2^(m-1) + 1` both prime.
    pub fermat_pairs: Vec<u32>,
    /// Primes `5 <= p <= p_max` with `p^2 - 1` or `p^2 + 1` a power of two.
    pub square_neighbours: Vec<u64>,
    /// Primes with `p + 1` a power of two and `(p - 1)/2` an odd prime power.
    pub mersenne_side: Vec<u64>,
    /// Primes with `p - 1` a power of two and `(p + 1)/2` an odd prime power.
    pub fermat_side: Vec<u64>,
}

/// Run the scans over `m <= m_max` and primes `p <= p_max`.
pub fn lemma_scan(m_max: u32, p_max: u64) -> LemmaScan {
    // 2^m + 1 must fit in u64.
    let m_top = m_max.min(63);
    let fermat_pairs = (2..=m_top)
        .filter(|&m| is_prime((1u64 << m) + 1) && is_prime((1u64 << (m - 1)) + 1))
        .collect();

    let primes: Vec<u64> = primes_up_to(p_max).into_iter().filter(|&p| p >= 5).collect();
    let square_neighbours = primes
        .iter()
        .copied()
        .filter(|&p| is_power_of_two(p * p - 1) || is_power_of_two(p * p + 1))
        .collect();
    let mersenne_side = primes
        .iter()
        .copied()
        .filter(|&p| is_power_of_two(p + 1) && is_odd_prime_power((p - 1) / 2))
        .collect();
    let fermat_side = primes
        .iter()
        .copied()
        .filter(|&p| is_power_of_two(p - 1) && is_odd_prime_power((p + 1) / 2))
        .collect();

    LemmaScan {
        fermat_pairs,
        square_neighbours,
        mersenne_side,
        fermat_side,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_matches_sieve() {
        let sieve = primes_up_to(10_000);
        let mr: Vec<u64> = (0..=10_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, mr);
        assert!(is_prime(65_537));
        assert!(!is_prime((1 << 32) + 1)); // 641 * 6700417
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn factor_helpers() {
        assert_eq!(factorize(120), vec![(2, 3), (3, 1), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(odd_part(120), 15);
        assert_eq!(p_part(120, 2), 8);
        assert!(is_squarefree(15));
        assert!(!is_squarefree(45));
        assert!(is_odd_prime_power(9));
        assert!(!is_odd_prime_power(8));
        assert!(!is_odd_prime_power(15));
    }

    #[test]
    fn small_scan() {
        let s = lemma_scan(10, 100);
        assert_eq!(s.fermat_pairs, vec![2]);
        assert!(s.square_neighbours.is_empty());
        assert_eq!(s.mersenne_side, vec![7]);
        assert_eq!(s.fermat_side, vec![5, 17]);
    }
}
