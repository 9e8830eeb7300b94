//! The three forward maps from solution pairs to Pythagorean-triple legs,
//! their inverses, and the closed-form gcd(A, B) identities.
//!
//! Kind conventions: the first type is built from (x, y), the second from
//! (x, z), the third from (y, z). The designated leg A = 2uv/g is always
//! even; B = (v^2 - u^2)/g may exceed A.

use crate::error::{Error, Result};
use crate::kernel::{self, Nat};
use crate::solutions::{self, EscSolution};

/// A Pythagorean triple with the even leg first. B may exceed A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PythTriple {
    pub a: Nat,
    pub b: Nat,
    pub c: Nat,
}

impl PythTriple {
    /// Validates a^2 + b^2 = c^2, positivity, and that a is even.
    pub fn new(a: Nat, b: Nat, c: Nat) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::NotPythagorean);
        }
        let lhs = kernel::add(kernel::mul(a, a)?, kernel::mul(b, b)?)?;
        if lhs != kernel::mul(c, c)? {
            return Err(Error::NotPythagorean);
        }
        if !a.is_multiple_of(2) {
            return Err(Error::Domain("designated leg A must be even"));
        }
        Ok(Self { a, b, c })
    }
}

/// Which solution pair the triple legs are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleKind {
    First,
    Second,
    Third,
}

impl TripleKind {
    pub const ALL: [TripleKind; 3] = [TripleKind::First, TripleKind::Second, TripleKind::Third];

    /// The (u, v) pair this kind maps: (x,y), (x,z) or (y,z).
    pub fn legs(self, sol: &EscSolution) -> (Nat, Nat) {
        match self {
            TripleKind::First => (sol.x, sol.y),
            TripleKind::Second => (sol.x, sol.z),
            TripleKind::Third => (sol.y, sol.z),
        }
    }
}

impl std::fmt::Display for TripleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TripleKind::First => "first",
            TripleKind::Second => "second",
            TripleKind::Third => "third",
        };
        f.write_str(s)
    }
}

/// A = 2uv/g, B = (v^2 - u^2)/g with g = gcd(uv, u+v); the hypotenuse is
/// completed by isqrt and asserted exact (g divides u^2 + v^2, so C is
/// always the integer (u^2 + v^2)/g).
pub fn forward(kind: TripleKind, u: Nat, v: Nat) -> Result<PythTriple> {
    let _ = kind; // all three kinds share one leg formula; kind only names the pair
    if !(0 < u && u < v) {
        return Err(Error::Domain("forward needs 0 < u < v"));
    }
    let uv = kernel::mul(u, v)?;
    let g = kernel::gcd(uv, kernel::add(u, v)?)?;
    let a = kernel::mul(2, uv)? / g;
    let b = (kernel::mul(v, v)? - kernel::mul(u, u)?) / g;
    let c2 = kernel::add(kernel::mul(a, a)?, kernel::mul(b, b)?)?;
    let c = kernel::isqrt(c2);
    assert_eq!(c * c, c2, "legs from ({u}, {v}) do not complete to a square");
    debug_assert_eq!(a % 2, 0);
    Ok(PythTriple { a, b, c })
}

// Common tail of the inverse maps: x and z (or y and z) are
// (A -+ B + C) / (2w) with w = (2A - target)/p; all divisions must be exact.
fn half_sum_pair(t: &PythTriple, w: Nat) -> Result<(Nat, Nat)> {
    let den = kernel::mul(2, w)?;
    let minus = kernel::sub(kernel::add(t.a, t.c)?, t.b)?; // C >= B keeps this positive
    let plus = kernel::add(kernel::add(t.a, t.b)?, t.c)?;
    if minus % den != 0 || plus % den != 0 {
        return Err(Error::NotDivisible);
    }
    Ok((minus / den, plus / den))
}

fn divisor_step(p: Nat, two_a: Nat, target: Nat) -> Result<Nat> {
    if two_a <= target {
        return Err(Error::NotDivisible);
    }
    let q = two_a - target;
    if !q.is_multiple_of(p) {
        return Err(Error::NotDivisible);
    }
    Ok(q / p)
}

fn check_gcd_hypothesis(p: Nat, gcd_py: Nat) -> Result<()> {
    if gcd_py != 1 && gcd_py != p {
        return Err(Error::BadGcdHypothesis(gcd_py));
    }
    Ok(())
}

fn validated(p: Nat, x: Nat, y: Nat, z: Nat, gcd_py: Nat) -> Result<(Nat, Nat, Nat)> {
    if x == 0 || !(x < y && y < z) {
        return Err(Error::Unverified);
    }
    if kernel::gcd(p, y)? != gcd_py {
        return Err(Error::Unverified);
    }
    if solutions::verify_identity(p, x, y, z)? {
        Ok((x, y, z))
    } else {
        Err(Error::Unverified)
    }
}

/// Invert a first-type triple: x, y = (A -+ B + C)/(2(2A - gcd_py)/p),
/// z = Ap/(2 gcd_py). `NotDivisible` marks a failed divisibility
/// precondition, `Unverified` a candidate that failed final verification.
pub fn inverse_first(p: Nat, t: &PythTriple, gcd_py: Nat) -> Result<(Nat, Nat, Nat)> {
    require_triple_inputs(p, t, gcd_py)?;
    let w = divisor_step(p, kernel::mul(2, t.a)?, gcd_py)?;
    let (x, y) = half_sum_pair(t, w)?;
    let z_num = kernel::mul(t.a, p)?;
    let z_den = kernel::mul(2, gcd_py)?;
    if z_num % z_den != 0 {
        return Err(Error::NotDivisible);
    }
    validated(p, x, y, z_num / z_den, gcd_py)
}

/// Invert a second-type triple: y = A gcd_py/(2p), x and z from
/// (A -+ B + C)/(2(2A - p^2/gcd_py)/p).
pub fn inverse_second(p: Nat, t: &PythTriple, gcd_py: Nat) -> Result<(Nat, Nat, Nat)> {
    require_triple_inputs(p, t, gcd_py)?;
    let y_num = kernel::mul(t.a, gcd_py)?;
    let y_den = kernel::mul(2, p)?;
    if y_num % y_den != 0 {
        return Err(Error::NotDivisible);
    }
    let y = y_num / y_den;
    let target = kernel::mul(p, p)? / gcd_py;
    let w = divisor_step(p, kernel::mul(2, t.a)?, target)?;
    let (x, z) = half_sum_pair(t, w)?;
    validated(p, x, y, z, gcd_py)
}

/// Invert a third-type triple: x = A/(2p), y and z from
/// (A -+ B + C)/(2(2A - p^2)/p). No gcd hypothesis is needed.
pub fn inverse_third(p: Nat, t: &PythTriple) -> Result<(Nat, Nat, Nat)> {
    solutions::require_odd_prime(p)?;
    PythTriple::new(t.a, t.b, t.c)?;
    let x_den = kernel::mul(2, p)?;
    if !t.a.is_multiple_of(x_den) {
        return Err(Error::NotDivisible);
    }
    let x = t.a / x_den;
    let w = divisor_step(p, kernel::mul(2, t.a)?, kernel::mul(p, p)?)?;
    let (y, z) = half_sum_pair(t, w)?;
    if x == 0 || !(x < y && y < z) {
        return Err(Error::Unverified);
    }
    if solutions::verify_identity(p, x, y, z)? {
        Ok((x, y, z))
    } else {
        Err(Error::Unverified)
    }
}

fn require_triple_inputs(p: Nat, t: &PythTriple, gcd_py: Nat) -> Result<()> {
    solutions::require_odd_prime(p)?;
    check_gcd_hypothesis(p, gcd_py)?;
    PythTriple::new(t.a, t.b, t.c)?;
    Ok(())
}

/// The closed-form right-hand side for gcd(A, B) of the given kind:
/// gcd(x,y,z) * gcd(2, (v^2-u^2)/gcd^2(u,v)), with an extra factor
/// gcd(p, y) for the third kind.
pub fn predicted_gcd_ab(kind: TripleKind, sol: &EscSolution) -> Result<Nat> {
    let (u, v) = kind.legs(sol);
    let h = kernel::gcd(u, v)?;
    let odd_part = (kernel::mul(v, v)? - kernel::mul(u, u)?) / kernel::mul(h, h)?;
    let two_factor = kernel::gcd(2, odd_part)?;
    let common = kernel::gcd3(sol.x, sol.y, sol.z)?;
    let base = kernel::mul(common, two_factor)?;
    match kind {
        TripleKind::Third => kernel::mul(kernel::gcd(sol.p, sol.y)?, base),
        _ => Ok(base),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_examples() {
        let t = forward(TripleKind::First, 3, 6).unwrap();
        assert_eq!((t.a, t.b, t.c), (4, 3, 5));
        let t = forward(TripleKind::Second, 3, 14).unwrap();
        assert_eq!((t.a, t.b, t.c), (84, 187, 205));
        let t = forward(TripleKind::Third, 4, 12).unwrap();
        assert_eq!((t.a, t.b, t.c), (6, 8, 10));
        assert!(forward(TripleKind::First, 6, 3).is_err());
    }

    #[test]
    fn inverse_first_examples() {
        let t = PythTriple::new(4, 3, 5).unwrap();
        assert_eq!(inverse_first(7, &t, 1), Ok((3, 6, 14)));
        let t = PythTriple::new(8, 6, 10).unwrap();
        assert_eq!(inverse_first(5, &t, 1), Ok((2, 4, 20)));
        let t = PythTriple::new(6, 8, 10).unwrap();
        assert_eq!(inverse_first(7, &t, 1), Err(Error::NotDivisible));
    }

    #[test]
    fn inverse_second_examples() {
        let t = PythTriple::new(84, 187, 205).unwrap();
        assert_eq!(inverse_second(7, &t, 1), Ok((3, 6, 14)));
        let t = PythTriple::new(10, 24, 26).unwrap();
        assert_eq!(inverse_second(5, &t, 5), Ok((2, 5, 10)));
        let t = PythTriple::new(4, 3, 5).unwrap();
        assert_eq!(inverse_second(7, &t, 1), Err(Error::NotDivisible));
    }

    #[test]
    fn inverse_third_examples() {
        let t = PythTriple::new(42, 40, 58).unwrap();
        assert_eq!(inverse_third(7, &t), Ok((3, 6, 14)));
        let t = PythTriple::new(6, 8, 10).unwrap();
        assert_eq!(inverse_third(3, &t), Ok((1, 4, 12)));
        assert_eq!(inverse_third(5, &t), Err(Error::NotDivisible));
    }

    #[test]
    fn predicted_gcd_examples() {
        let s = EscSolution::new(5, 2, 4, 20);
        assert_eq!(predicted_gcd_ab(TripleKind::First, &s), Ok(2));
        let s = EscSolution::new(5, 2, 5, 10);
        assert_eq!(predicted_gcd_ab(TripleKind::Third, &s), Ok(5));
        let s = EscSolution::new(7, 3, 6, 14);
        assert_eq!(predicted_gcd_ab(TripleKind::Second, &s), Ok(1));
    }

    #[test]
    fn triple_constructor_rejects_bad_input() {
        assert_eq!(PythTriple::new(4, 3, 6), Err(Error::NotPythagorean));
        assert_eq!(PythTriple::new(0, 3, 5), Err(Error::NotPythagorean));
        assert!(PythTriple::new(3, 4, 5).is_err()); // odd designated leg
    }
}
