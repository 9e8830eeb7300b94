//! Exact unsigned integer primitives. All arithmetic is overflow-checked;
//! silent wraparound never happens.

use crate::error::{Error, Result};

/// The integer type every quantity in this crate lives in. 128 bits covers
/// the second-type triple legs (roughly p^6) well past desk-scale primes.
pub type Nat = u128;

#[inline]
pub fn add(a: Nat, b: Nat) -> Result<Nat> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: Nat, b: Nat) -> Result<Nat> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: Nat, b: Nat) -> Result<Nat> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Greatest common divisor by Euclid's algorithm; `gcd(a, 0) = a`.
pub fn gcd(a: Nat, b: Nat) -> Result<Nat> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok(a)
}

/// gcd of three values.
pub fn gcd3(a: Nat, b: Nat, c: Nat) -> Result<Nat> {
    gcd(gcd(a, b)?, c)
}

/// Smallest n with n*b >= a.
pub fn ceil_div(a: Nat, b: Nat) -> Result<Nat> {
    if b == 0 {
        return Err(Error::DivisionByZero);
    }
    if a == 0 {
        return Ok(0);
    }
    Ok((a - 1) / b + 1)
}

/// Largest s with s*s <= n. Newton iteration from an over-estimate with a
/// final downward correction; correctness is property-tested, not assumed.
pub fn isqrt(n: Nat) -> Nat {
    if n < 2 {
        return n;
    }
    // 2^(floor(log2 n)/2 + 1) > sqrt(n), so the iteration descends.
    let mut x: Nat = 1 << (n.ilog2() / 2 + 1);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    x
}

/// True iff n is a perfect square.
pub fn is_perfect_square(n: Nat) -> bool {
    let s = isqrt(n);
    s * s == n
}
