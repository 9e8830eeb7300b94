//! The decomposition identity 4/p = 1/x + 1/y + 1/z in integer form, its
//! closed-form trivial solutions, solution classification, the three
//! recovery formulas, the three necessary conditions, and the brute-force
//! enumerator that serves as the independent oracle for everything else.

use crate::error::{Error, Result};
use crate::kernel::{self, Nat};

/// A candidate decomposition: prime p with ordered positive (x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EscSolution {
    pub p: Nat,
    pub x: Nat,
    pub y: Nat,
    pub z: Nat,
}

impl EscSolution {
    pub fn new(p: Nat, x: Nat, y: Nat, z: Nat) -> Self {
        Self { p, x, y, z }
    }

    pub fn xyz(&self) -> (Nat, Nat, Nat) {
        (self.x, self.y, self.z)
    }
}

/// Where a candidate falls: closed-form trivial (x = y or y = z),
/// type I (gcd(p, y) = 1), type II (gcd(p, y) = p), or not a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionClass {
    Trivial,
    TypeI,
    TypeII,
    Invalid,
}

impl std::fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SolutionClass::Trivial => "trivial",
            SolutionClass::TypeI => "typeI",
            SolutionClass::TypeII => "typeII",
            SolutionClass::Invalid => "invalid",
        };
        f.write_str(s)
    }
}

/// Exact signed rational, reduced, reported by [`check_eq5`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residual {
    pub numerator: i128,
    pub denominator: Nat,
}

// ---------------------------------------------------------------------------
// primality
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin. The fixed witness set is proven complete for
/// all n < 3.3 * 10^24, which covers the full u64 range.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for w in WITNESSES {
        if n == w {
            return true;
        }
        if n.is_multiple_of(w) {
            return false;
        }
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    'witness: for w in WITNESSES {
        let mut x = pow_mod(w, d, n);
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

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn require_prime(p: Nat) -> Result<u64> {
    let p64 = u64::try_from(p).map_err(|_| Error::NotPrime(p))?;
    if is_prime(p64) {
        Ok(p64)
    } else {
        Err(Error::NotPrime(p))
    }
}

pub(crate) fn require_odd_prime(p: Nat) -> Result<u64> {
    let p64 = require_prime(p)?;
    if p64 == 2 {
        return Err(Error::Domain("p must be an odd prime"));
    }
    Ok(p64)
}

// ---------------------------------------------------------------------------
// identity, trivial solutions, classification
// ---------------------------------------------------------------------------

/// True iff 4xyz = p(yz + xz + xy), computed exactly.
pub fn verify_identity(p: Nat, x: Nat, y: Nat, z: Nat) -> Result<bool> {
    if p == 0 || x == 0 || y == 0 || z == 0 {
        return Err(Error::Domain("all of p, x, y, z must be positive"));
    }
    let lhs = kernel::mul(4, kernel::mul(x, kernel::mul(y, z)?)?)?;
    let cross = kernel::add(
        kernel::mul(y, z)?,
        kernel::add(kernel::mul(x, z)?, kernel::mul(x, y)?)?,
    )?;
    Ok(lhs == kernel::mul(p, cross)?)
}

/// The closed-form solutions with x = y or y = z. For p = 2 this is
/// (1, 2, 2); for p = 3 mod 4 the two families
/// ((p+1)/2, (p+1)/2, p(p+1)/4) and ((p+1)/4, p(p+1)/2, p(p+1)/2);
/// empty for p = 1 mod 4.
#[allow(clippy::manual_div_ceil)] // keep the closed forms readable as written
pub fn trivial_solutions(p: Nat) -> Result<Vec<EscSolution>> {
    require_prime(p)?;
    if p == 2 {
        return Ok(vec![EscSolution::new(2, 1, 2, 2)]);
    }
    if p % 4 != 3 {
        return Ok(Vec::new());
    }
    let half = (p + 1) / 2;
    let quarter = (p + 1) / 4;
    let sols = vec![
        EscSolution::new(p, half, half, kernel::mul(p, quarter)?),
        EscSolution::new(p, quarter, kernel::mul(p, half)?, kernel::mul(p, half)?),
    ];
    for s in &sols {
        debug_assert_eq!(verify_identity(s.p, s.x, s.y, s.z), Ok(true));
    }
    Ok(sols)
}

/// Classify a candidate. Anything that fails the identity, the ordering
/// x <= y <= z, or has gcd(p, y) outside {1, p} is `Invalid`.
pub fn classify(sol: &EscSolution) -> SolutionClass {
    let (p, x, y, z) = (sol.p, sol.x, sol.y, sol.z);
    if !(0 < x && x <= y && y <= z) || verify_identity(p, x, y, z) != Ok(true) {
        return SolutionClass::Invalid;
    }
    if x == y || y == z {
        return SolutionClass::Trivial;
    }
    match kernel::gcd(p, y) {
        Ok(1) => SolutionClass::TypeI,
        Ok(g) if g == p => SolutionClass::TypeII,
        _ => SolutionClass::Invalid,
    }
}

// ---------------------------------------------------------------------------
// recovery formulas
// ---------------------------------------------------------------------------

/// z = xyp / (gcd(p,y) gcd(xy, x+y)), accepted only if integral and the
/// completed triple satisfies the identity.
pub fn recover_z(p: Nat, x: Nat, y: Nat) -> Result<Nat> {
    require_odd_prime(p)?;
    if !(0 < x && x < y) {
        return Err(Error::Domain("recover_z needs 0 < x < y"));
    }
    let num = kernel::mul(kernel::mul(x, y)?, p)?;
    let den = kernel::mul(
        kernel::gcd(p, y)?,
        kernel::gcd(kernel::mul(x, y)?, kernel::add(x, y)?)?,
    )?;
    if num % den != 0 {
        return Err(Error::NoSolution);
    }
    let z = num / den;
    if verify_identity(p, x, y, z)? {
        Ok(z)
    } else {
        Err(Error::NoSolution)
    }
}

/// y = xz gcd(p,y) / (p gcd(xz, x+z)) under an explicit gcd(p, y) hypothesis.
/// The formula is self-referential, so callers try both hypotheses {1, p};
/// the returned y must realize the assumed gcd and satisfy the identity.
pub fn recover_y(p: Nat, x: Nat, z: Nat, assumed_gcd_py: Nat) -> Result<Nat> {
    require_odd_prime(p)?;
    if !(0 < x && x < z) {
        return Err(Error::Domain("recover_y needs 0 < x < z"));
    }
    if assumed_gcd_py != 1 && assumed_gcd_py != p {
        return Err(Error::BadGcdHypothesis(assumed_gcd_py));
    }
    let num = kernel::mul(kernel::mul(x, z)?, assumed_gcd_py)?;
    let den = kernel::mul(p, kernel::gcd(kernel::mul(x, z)?, kernel::add(x, z)?)?)?;
    if num % den != 0 {
        return Err(Error::NoSolution);
    }
    let y = num / den;
    if y == 0 || kernel::gcd(p, y)? != assumed_gcd_py {
        return Err(Error::NoSolution);
    }
    if verify_identity(p, x, y, z)? {
        Ok(y)
    } else {
        Err(Error::NoSolution)
    }
}

/// x = yz / (p gcd(yz, y+z)), accepted only if integral and verified.
pub fn recover_x(p: Nat, y: Nat, z: Nat) -> Result<Nat> {
    require_odd_prime(p)?;
    if !(0 < y && y < z) {
        return Err(Error::Domain("recover_x needs 0 < y < z"));
    }
    let num = kernel::mul(y, z)?;
    let den = kernel::mul(p, kernel::gcd(num, kernel::add(y, z)?)?)?;
    if num % den != 0 {
        return Err(Error::NoSolution);
    }
    let x = num / den;
    if x == 0 {
        return Err(Error::NoSolution);
    }
    if verify_identity(p, x, y, z)? {
        Ok(x)
    } else {
        Err(Error::NoSolution)
    }
}

// ---------------------------------------------------------------------------
// necessary conditions
// ---------------------------------------------------------------------------

// The fractional intermediates p/(v-u) need not be integers individually, so
// each condition is evaluated as one exact cross-multiplied comparison of
//   2(2uv/g) - (p/(v-u))((v^2-u^2)/g)   ==   target
// i.e.  4uv(v-u) - p(v^2-u^2)  ==  target * g * (v-u),  g = gcd(uv, u+v).
fn condition_sides(p: Nat, u: Nat, v: Nat) -> Result<(i128, Nat)> {
    let uv = kernel::mul(u, v)?;
    let g = kernel::gcd(uv, kernel::add(u, v)?)?;
    let diff = v - u;
    let v2 = kernel::mul(v, v)?;
    let u2 = kernel::mul(u, u)?;
    let t1 = kernel::mul(4, kernel::mul(uv, diff)?)?;
    let t2 = kernel::mul(p, v2 - u2)?;
    let t1 = i128::try_from(t1).map_err(|_| Error::Overflow)?;
    let t2 = i128::try_from(t2).map_err(|_| Error::Overflow)?;
    let numer = t1.checked_sub(t2).ok_or(Error::Overflow)?;
    let denom = kernel::mul(g, diff)?;
    Ok((numer, denom))
}

fn scaled_eq(numer: i128, denom: Nat, target: Nat) -> Result<bool> {
    let rhs = i128::try_from(kernel::mul(target, denom)?).map_err(|_| Error::Overflow)?;
    Ok(numer == rhs)
}

/// First necessary condition on (x, y): the exact value of
/// 2(2xy/g) - (p/(y-x))((y^2-x^2)/g) as a reduced rational, and whether it
/// equals gcd(p, y).
pub fn check_eq5(p: Nat, x: Nat, y: Nat) -> Result<(Residual, bool)> {
    require_odd_prime(p)?;
    if !(0 < x && x < y) {
        return Err(Error::Domain("check_eq5 needs 0 < x < y"));
    }
    let (numer, denom) = condition_sides(p, x, y)?;
    let holds = scaled_eq(numer, denom, kernel::gcd(p, y)?)?;
    let r = kernel::gcd(numer.unsigned_abs(), denom)?;
    Ok((
        Residual {
            numerator: numer / r as i128,
            denominator: denom / r,
        },
        holds,
    ))
}

/// Second necessary condition on (x, z), target p^2 / gcd(p, y).
pub fn check_eq6(p: Nat, x: Nat, z: Nat, gcd_py: Nat) -> Result<bool> {
    require_odd_prime(p)?;
    if !(0 < x && x < z) {
        return Err(Error::Domain("check_eq6 needs 0 < x < z"));
    }
    if gcd_py != 1 && gcd_py != p {
        return Err(Error::BadGcdHypothesis(gcd_py));
    }
    let (numer, denom) = condition_sides(p, x, z)?;
    scaled_eq(numer, denom, kernel::mul(p, p)? / gcd_py)
}

/// Third necessary condition on (y, z), target p^2.
pub fn check_eq7(p: Nat, y: Nat, z: Nat) -> Result<bool> {
    require_odd_prime(p)?;
    if !(0 < y && y < z) {
        return Err(Error::Domain("check_eq7 needs 0 < y < z"));
    }
    let (numer, denom) = condition_sides(p, y, z)?;
    scaled_eq(numer, denom, kernel::mul(p, p)?)
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// Exhaustively enumerate all non-trivial solutions x < y < z for an odd
/// prime p, in lexicographic (x, y, z) order. This is the oracle the rest of
/// the crate is tested against.
///
/// Bounds follow from the identity with x <= y <= z:
///   1/x < 4/p <= 3/x          gives  p/4 < x <= 3p/4,
/// and with r = 4/p - 1/x = 1/y + 1/z and y <= z:
///   1/y < r <= 2/y            gives  1/r < y <= 2/r,
/// i.e. with q = 4x - p:       px/q < y <= 2px/q.
/// For each (x, y) the unique candidate z = pxy / (qy - px) is kept when the
/// division is exact and z > y.
pub fn enumerate_nontrivial(p: Nat) -> Result<Vec<EscSolution>> {
    require_odd_prime(p)?;
    let mut out = Vec::new();
    let mut x = p / 4 + 1;
    while 4 * x <= 3 * p {
        let q = 4 * x - p;
        let px = kernel::mul(p, x)?;
        let y_lo = (px / q + 1).max(x + 1);
        let y_hi = kernel::mul(2, px)? / q;
        // d = qy - px and pxy advance linearly in y; both stay positive.
        let mut d = kernel::mul(q, y_lo)?.checked_sub(px).ok_or(Error::Overflow)?;
        let mut num = kernel::mul(px, y_lo)?;
        let mut y = y_lo;
        while y <= y_hi {
            if num % d == 0 {
                let z = num / d;
                if z > y {
                    debug_assert_eq!(verify_identity(p, x, y, z), Ok(true));
                    out.push(EscSolution::new(p, x, y, z));
                }
            }
            d = kernel::add(d, q)?;
            num = kernel::add(num, px)?;
            y += 1;
        }
        x += 1;
    }
    Ok(out)
}

/// Lexicographically smallest non-trivial solution, or None if no x admits
/// one. Equivalent to `enumerate_nontrivial(p).first()` but fast enough for
/// bulk range scans: for each x the y candidates are read off the divisors
/// of p^2 x^2, because qy - px and qz - px multiply to exactly p^2 x^2.
pub fn first_nontrivial(p: Nat) -> Result<Option<EscSolution>> {
    require_odd_prime(p)?;
    let mut x = p / 4 + 1;
    while 4 * x <= 3 * p {
        let q = 4 * x - p;
        let px = kernel::mul(p, x)?;
        let n = kernel::mul(px, px)?;
        for d in divisors_of_px_squared(p, x)? {
            if d >= px {
                break; // d >= px means y >= z
            }
            if (px + d) % q != 0 {
                continue;
            }
            let e = n / d;
            if (kernel::add(px, e)?) % q != 0 {
                continue;
            }
            let y = (px + d) / q;
            if y <= x {
                continue;
            }
            let z = (px + e) / q;
            debug_assert_eq!(verify_identity(p, x, y, z), Ok(true));
            return Ok(Some(EscSolution::new(p, x, y, z)));
        }
        x += 1;
    }
    Ok(None)
}

/// Sorted divisors of (px)^2 for prime p and x < p, from the factorization
/// of x by trial division plus the known factor p^2.
fn divisors_of_px_squared(p: Nat, x: Nat) -> Result<Vec<Nat>> {
    let mut factors: Vec<(Nat, u32)> = vec![(p, 2)];
    let mut rem = x;
    let mut d: Nat = 2;
    while d * d <= rem {
        if rem.is_multiple_of(d) {
            let mut e = 0;
            while rem.is_multiple_of(d) {
                rem /= d;
                e += 1;
            }
            factors.push((d, 2 * e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rem > 1 {
        factors.push((rem, 2));
    }
    let mut divs: Vec<Nat> = vec![1];
    for (prime, exp) in factors {
        let base = divs.clone();
        let mut pw: Nat = 1;
        for _ in 0..exp {
            pw = kernel::mul(pw, prime)?;
            for b in &base {
                divs.push(kernel::mul(*b, pw)?);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}
