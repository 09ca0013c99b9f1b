//! Word-sized modular arithmetic: primality, inverses, and K-th roots in prime fields.

use std::collections::HashMap;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    // extended Euclid on signed 128-bit values
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin for all 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `p >= start` with `p ≡ 1 (mod k)`.
pub fn next_prime_congruent_one(start: u64, k: u64) -> u64 {
    let k = k.max(1);
    let mut p = start.max(2);
    while !(p % k == 1 % k && is_prime(p)) {
        p += 1;
    }
    p
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest primitive root of the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Baby-step giant-step discrete logarithm of `a` to base `g`.
fn discrete_log(g: u64, a: u64, p: u64) -> Option<u64> {
    let order = p - 1;
    let m = (order as f64).sqrt().ceil() as u64 + 1;
    let mut table = HashMap::with_capacity(m as usize);
    let mut cur = 1u64;
    for j in 0..m {
        table.entry(cur).or_insert(j);
        cur = mul_mod(cur, g, p);
    }
    let factor = pow_mod(inv_mod(g, p)?, m, p);
    let mut gamma = a % p;
    for i in 0..=m {
        if let Some(&j) = table.get(&gamma) {
            return Some((i * m + j) % order);
        }
        gamma = mul_mod(gamma, factor, p);
    }
    None
}

/// Whether `a` is a K-th power residue modulo `p`.
pub fn is_kth_power(a: u64, k: u64, p: u64) -> bool {
    let a = a % p;
    if a == 0 {
        return true;
    }
    let g = num_integer::gcd(k, p - 1);
    pow_mod(a, (p - 1) / g, p) == 1
}

/// Some `r` with `r^k = a (mod p)`, or `None` when `a` is not a K-th power.
pub fn kth_root_mod(a: u64, k: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if !is_kth_power(a, k, p) {
        return None;
    }
    let order = p - 1;
    let g = num_integer::gcd(k, order);
    let gen = primitive_root(p);
    let x = discrete_log(gen, a, p)?;
    // k*y ≡ x (mod p-1), solvable because g | x
    let reduced = order / g;
    let kk = (k / g) % reduced;
    let y = if reduced == 1 {
        0
    } else {
        mul_mod((x / g) % reduced, inv_mod(kk, reduced).unwrap_or(0), reduced)
    };
    let r = pow_mod(gen, y, p);
    debug_assert_eq!(pow_mod(r, k, p), a);
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn next_prime_respects_congruence() {
        for k in 2..8 {
            let p = next_prime_congruent_one(1_000_003, k);
            assert!(is_prime(p) && p % k == 1 && p >= 1_000_003, "k={k} p={p}");
        }
        assert_eq!(next_prime_congruent_one(1_000_003, 2), 1_000_003);
    }

    #[test]
    fn kth_roots_round_trip() {
        let p = 1_000_003;
        for a in [1u64, 4, 9, 12345, 999_999] {
            if let Some(r) = kth_root_mod(a, 2, p) {
                assert_eq!(mul_mod(r, r, p), a);
            } else {
                assert!(!is_kth_power(a, 2, p));
            }
        }
        let p = 13;
        for a in 1..13 {
            let cubes: Vec<u64> = (1..13).map(|x| pow_mod(x, 3, p)).collect();
            assert_eq!(kth_root_mod(a, 3, p).is_some(), cubes.contains(&a));
        }
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(0, 7), None);
    }
}
