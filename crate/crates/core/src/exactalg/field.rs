use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// The prime field `Z/pZ` for a word-sized prime `p`. Elements are plain
/// `u64` values in `[0, p)`; products go through `u128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    /// 2^61 − 1.
    pub const MERSENNE_61: u64 = (1 << 61) - 1;

    pub fn new(modulus: u64) -> Result<Self> {
        if is_prime_u64(modulus) {
            Ok(Self { modulus })
        } else {
            Err(Error::NotPrime(modulus))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, x: u64) -> u64 {
        x % self.modulus
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        let r = (x as i128).rem_euclid(self.modulus as i128);
        r as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        let p = self.modulus as u128;
        (if s >= p { s - p } else { s }) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut result = 1 % self.modulus;
        let mut b = self.reduce(base);
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        result
    }

    /// `base^exp` for an unbounded exponent. Nonzero bases use Fermat's little
    /// theorem to shrink the exponent.
    pub fn pow_big(&self, base: u64, exp: &BigUint) -> u64 {
        if exp.is_zero() {
            return 1 % self.modulus;
        }
        let base = self.reduce(base);
        if base == 0 {
            return 0;
        }
        let reduced = exp % BigUint::from(self.modulus - 1);
        let e = reduced.iter_u64_digits().next().unwrap_or(0);
        self.pow(base, e)
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = self.reduce(a);
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.modulus - 2))
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for all 64-bit integers (the first twelve prime
/// bases suffice below 3.3·10^24).
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
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
