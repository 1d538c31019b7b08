//! Small integer helpers shared by the field and code constructions.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
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

/// Returns `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `q` modulo `n`; requires `gcd(n, q) = 1` and `n > 1`.
pub fn multiplicative_order(n: u64, q: u64) -> u64 {
    let q = q % n;
    let mut acc = q;
    let mut m = 1;
    while acc != 1 {
        acc = ((acc as u128 * q as u128) % n as u128) as u64;
        m += 1;
    }
    m
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Ceiling of `a / b`.
pub fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_and_prime_powers() {
        assert_eq!(prime_factors(3124), vec![2, 11, 71]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_power(729), Some((3, 6)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(2), Some((2, 1)));
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(26, 3), 3);
        assert_eq!(multiplicative_order(13, 3), 3);
        assert_eq!(multiplicative_order(781, 5), 5);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(25, 7), 480_700);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}
