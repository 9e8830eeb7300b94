//! Bezout coefficient families (b_k, c_k) for the two solution types, the
//! family identities, discriminant-square conditions, integer root
//! extraction for T^2 - m b_k T + m c_k, grid search, and the reduced
//! type II scan in the starred variables y* = y/p, z* = z/p.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{self, Nat};
use crate::solutions::{self, classify, recover_z, EscSolution, SolutionClass};

/// Which family a pair belongs to: type I targets 4c - pb = gcd(c, b),
/// type II targets 4c - pb = p gcd(c, b).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    TypeI,
    TypeII,
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FamilyKind::TypeI => "typeI",
            FamilyKind::TypeII => "typeII",
        })
    }
}

/// One family member (b_k, c_k) with its coprimality flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutPair {
    pub k: Nat,
    pub b: Nat,
    pub c: Nat,
    pub kind: FamilyKind,
    pub coprime: bool,
}

/// A witness that (p, x, y, z) was found through the (m, k) grid: x and y
/// are the roots of T^2 - m b_k T + m c_k and the recorded discriminant is
/// the perfect square m^2 b_k^2 - 4 m c_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCertificate {
    pub p: Nat,
    pub m: Nat,
    pub k: Nat,
    pub kind: FamilyKind,
    pub discriminant: Nat,
    pub x: Nat,
    pub y: Nat,
    pub z: Nat,
}

impl SearchCertificate {
    pub fn solution(&self) -> EscSolution {
        EscSolution::new(self.p, self.x, self.y, self.z)
    }
}

fn require_index(k: Nat) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("family index k starts at 1"));
    }
    Ok(())
}

/// Type I family: b_1 = 4 ceil(p/4) - p, c_1 = (b_1 p + 1)/4, advancing by
/// b_k = b_1 + 4(k-1), c_k = c_1 + p(k-1). Every member satisfies
/// 4 c_k - p b_k = 1, so the pairs are coprime by construction.
pub fn type1_family(p: Nat, k: Nat) -> Result<BezoutPair> {
    solutions::require_odd_prime(p)?;
    require_index(k)?;
    let b1 = kernel::mul(4, kernel::ceil_div(p, 4)?)? - p;
    let c1 = (kernel::mul(b1, p)? + 1) / 4;
    let b = kernel::add(b1, kernel::mul(4, k - 1)?)?;
    let c = kernel::add(c1, kernel::mul(p, k - 1)?)?;
    let coprime = kernel::gcd(b, c)? == 1;
    debug_assert!(coprime);
    Ok(BezoutPair { k, b, c, kind: FamilyKind::TypeI, coprime })
}

/// Type II family: b_k = 4k - 1, c_k = pk. The pair is coprime exactly when
/// p does not divide b_k; for p = 3 that is k != 1 mod 3.
pub fn type2_family(p: Nat, k: Nat) -> Result<BezoutPair> {
    solutions::require_prime(p)?;
    require_index(k)?;
    let b = kernel::mul(4, k)? - 1;
    let c = kernel::mul(p, k)?;
    let coprime = kernel::gcd(b, c)? == 1;
    Ok(BezoutPair { k, b, c, kind: FamilyKind::TypeII, coprime })
}

/// Evaluate the kind-appropriate identity exactly:
/// type I checks 4c - pb = gcd(c, b), type II checks 4c - pb = p gcd(c, b).
pub fn family_identity_check(pair: &BezoutPair, p: Nat) -> Result<bool> {
    let four_c = i128::try_from(kernel::mul(4, pair.c)?).map_err(|_| Error::Overflow)?;
    let pb = i128::try_from(kernel::mul(p, pair.b)?).map_err(|_| Error::Overflow)?;
    let lhs = four_c.checked_sub(pb).ok_or(Error::Overflow)?;
    let g = kernel::gcd(pair.c, pair.b)?;
    let rhs = match pair.kind {
        FamilyKind::TypeI => g,
        FamilyKind::TypeII => kernel::mul(p, g)?,
    };
    Ok(lhs == i128::try_from(rhs).map_err(|_| Error::Overflow)?)
}

fn to_i128(n: Nat) -> Result<i128> {
    i128::try_from(n).map_err(|_| Error::Overflow)
}

/// The square-number condition polynomial, signed. Negative simply means
/// "not a square". Type I evaluates
///   m^2 (4k - (4 - 4 ceil(p/4) + p))^2 - pm (4k - ...) - m
/// and type II evaluates m^2 (4k - 1)^2 - 4pmk; both agree with
/// m^2 b_k^2 - 4 m c_k for the corresponding family.
pub fn discriminant(kind: FamilyKind, p: Nat, m: Nat, k: Nat) -> Result<i128> {
    require_index(k)?;
    require_index(m)?;
    match kind {
        FamilyKind::TypeI => {
            solutions::require_odd_prime(p)?;
            let bias = 4 + to_i128(p)? - to_i128(kernel::mul(4, kernel::ceil_div(p, 4)?)?)?;
            let b = to_i128(kernel::mul(4, k)?)?.checked_sub(bias).ok_or(Error::Overflow)?;
            let m = to_i128(m)?;
            let mb = m.checked_mul(b).ok_or(Error::Overflow)?;
            let sq = mb.checked_mul(mb).ok_or(Error::Overflow)?;
            let lin = to_i128(p)?.checked_mul(mb).ok_or(Error::Overflow)?;
            sq.checked_sub(lin)
                .and_then(|v| v.checked_sub(m))
                .ok_or(Error::Overflow)
        }
        FamilyKind::TypeII => {
            solutions::require_prime(p)?;
            let b = to_i128(kernel::mul(4, k)?)? - 1;
            let lin = to_i128(kernel::mul(4, kernel::mul(p, kernel::mul(m, k)?)?)?)?;
            let m = to_i128(m)?;
            let mb = m.checked_mul(b).ok_or(Error::Overflow)?;
            let sq = mb.checked_mul(mb).ok_or(Error::Overflow)?;
            sq.checked_sub(lin).ok_or(Error::Overflow)
        }
    }
}

/// If m^2 b^2 - 4mc is a non-negative perfect square and both roots of
/// T^2 - mbT + mc are integers, return them as (x, y) with x <= y.
pub fn roots_if_square(m: Nat, pair: &BezoutPair) -> Result<(Nat, Nat)> {
    require_index(m)?;
    let mb = kernel::mul(m, pair.b)?;
    let sq = to_i128(kernel::mul(mb, mb)?)?;
    let four_mc = to_i128(kernel::mul(4, kernel::mul(m, pair.c)?)?)?;
    let d = sq.checked_sub(four_mc).ok_or(Error::Overflow)?;
    if d < 0 {
        return Err(Error::NonSquareDiscriminant);
    }
    let d = d as Nat;
    let s = kernel::isqrt(d);
    if s * s != d {
        return Err(Error::NonSquareDiscriminant);
    }
    if !(mb - s).is_multiple_of(2) {
        return Err(Error::RootParity);
    }
    Ok(((mb - s) / 2, (mb + s) / 2))
}

// Any non-trivial solution has x <= 3p/4 and y <= 2px/(4x - p), so
// x + y = m b_k never exceeds (2p^2 + 5p)/4 + 1; cells beyond that bound
// cannot verify and are skipped.
fn sum_bound(p: Nat) -> Result<Nat> {
    let t = kernel::add(kernel::mul(2, kernel::mul(p, p)?)?, kernel::mul(5, p)?)?;
    Ok(t / 4 + 1)
}

/// Scan the (m, k) grid over coprime family pairs, completing each integer
/// root pair to a full verified solution of the requested class.
/// Certificates come back in deterministic (k, then m) order; the k axis is
/// partitioned across threads and merged in order. Cells that overflow are
/// logged and skipped.
pub fn search_solutions(
    p: Nat,
    kind: FamilyKind,
    m_max: Nat,
    k_max: Nat,
) -> Result<Vec<SearchCertificate>> {
    solutions::require_odd_prime(p)?;
    require_index(m_max)?;
    require_index(k_max)?;
    let k_max = u64::try_from(k_max).map_err(|_| Error::Domain("k_max exceeds 64 bits"))?;
    let m_max = u64::try_from(m_max).map_err(|_| Error::Domain("m_max exceeds 64 bits"))?;
    let bound = sum_bound(p)?;
    let want = match kind {
        FamilyKind::TypeI => SolutionClass::TypeI,
        FamilyKind::TypeII => SolutionClass::TypeII,
    };

    let per_k: Vec<Vec<SearchCertificate>> = (1..=k_max)
        .into_par_iter()
        .map(|k| -> Result<Vec<SearchCertificate>> {
            let pair = match kind {
                FamilyKind::TypeI => type1_family(p, k as Nat)?,
                FamilyKind::TypeII => type2_family(p, k as Nat)?,
            };
            let mut found = Vec::new();
            if !pair.coprime {
                return Ok(found);
            }
            for m in 1..=m_max {
                let m = m as Nat;
                match scan_cell(p, &pair, m, bound, want) {
                    Ok(Some(cert)) => found.push(cert),
                    Ok(None) => {}
                    Err(Error::Overflow) => {
                        log::warn!("overflow at p={p} kind={kind} k={k} m={m}; cell skipped");
                    }
                    Err(e) => return Err(e),
                }
                // (m+1) b_k past the sum bound (or past 128 bits) ends the column
                if (m + 1).checked_mul(pair.b).is_none_or(|next| next > bound) {
                    break;
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;

    Ok(per_k.into_iter().flatten().collect())
}

fn scan_cell(
    p: Nat,
    pair: &BezoutPair,
    m: Nat,
    bound: Nat,
    want: SolutionClass,
) -> Result<Option<SearchCertificate>> {
    if kernel::mul(m, pair.b)? > bound {
        return Ok(None);
    }
    let (x, y) = match roots_if_square(m, pair) {
        Ok(roots) => roots,
        Err(Error::NonSquareDiscriminant) | Err(Error::RootParity) => return Ok(None),
        Err(e) => return Err(e),
    };
    if x == 0 || x >= y {
        return Ok(None);
    }
    let z = match recover_z(p, x, y) {
        Ok(z) => z,
        Err(Error::NoSolution) => return Ok(None),
        Err(e) => return Err(e),
    };
    let sol = EscSolution::new(p, x, y, z);
    if classify(&sol) != want {
        return Ok(None);
    }
    let mb = kernel::mul(m, pair.b)?;
    let discriminant = kernel::mul(mb, mb)? - kernel::mul(4, kernel::mul(m, pair.c)?)?;
    Ok(Some(SearchCertificate {
        p,
        m,
        k: pair.k,
        kind: pair.kind,
        discriminant,
        x,
        y,
        z,
    }))
}

/// Reduced type II test at one (m, k) cell. With b the type I coefficient
/// 4(k-1) + (4 ceil(p/4) - p), checks whether m^2 b^2 - mb - mp is a perfect
/// square; on success the roots y*, z* of T^2 - mbT + m(b+p)/4 satisfy
/// y* + z* = mb and 4 y*z* - (y* + z*) = pm, and the lifted candidate
/// (x, y, z) = (y*z*/gcd(y*z*, y*+z*), p y*, p z*) must verify as a
/// type II solution.
pub fn reduced_type2_check(p: Nat, m: Nat, k: Nat) -> Result<(Nat, Nat)> {
    reduced_cell(p, m, k).map(|(ys, zs, _)| (ys, zs))
}

fn reduced_cell(p: Nat, m: Nat, k: Nat) -> Result<(Nat, Nat, Nat)> {
    solutions::require_odd_prime(p)?;
    require_index(m)?;
    require_index(k)?;
    let ceil = kernel::ceil_div(p, 4)?;
    if k - 1 > ceil {
        return Err(Error::Domain("reduced scan needs (k - 1) <= ceil(p/4)"));
    }
    let b1 = kernel::mul(4, ceil)? - p;
    let b = kernel::add(b1, kernel::mul(4, k - 1)?)?;
    let mb = kernel::mul(m, b)?;
    let sq = to_i128(kernel::mul(mb, mb)?)?;
    let mp = to_i128(kernel::mul(m, p)?)?;
    let d = sq
        .checked_sub(to_i128(mb)?)
        .and_then(|v| v.checked_sub(mp))
        .ok_or(Error::Overflow)?;
    if d < 0 {
        return Err(Error::NonSquareDiscriminant);
    }
    let d = d as Nat;
    let s = kernel::isqrt(d);
    if s * s != d {
        return Err(Error::NonSquareDiscriminant);
    }
    if !(mb - s).is_multiple_of(2) {
        return Err(Error::RootParity);
    }
    let ys = (mb - s) / 2;
    let zs = (mb + s) / 2;
    if ys == 0 {
        return Err(Error::Unverified);
    }
    // product of the roots is m(b+p)/4, i.e. y*z* ranges over m A*
    debug_assert_eq!(kernel::mul(ys, zs), kernel::mul(m, (b + p) / 4));
    let (x, y, z) = lift_reduced(p, ys, zs)?;
    let sol = EscSolution::new(p, x, y, z);
    if !(x < y && y < z) || classify(&sol) != SolutionClass::TypeII {
        return Err(Error::Unverified);
    }
    Ok((ys, zs, d))
}

// x = y*z* / gcd(y*z*, y*+z*); the full solution (x, p y*, p z*).
fn lift_reduced(p: Nat, ys: Nat, zs: Nat) -> Result<(Nat, Nat, Nat)> {
    let prod = kernel::mul(ys, zs)?;
    let g = kernel::gcd(prod, kernel::add(ys, zs)?)?;
    Ok((prod / g, kernel::mul(p, ys)?, kernel::mul(p, zs)?))
}

/// Reduced scan over the grid m <= m_max, k <= min(k_max, ceil(p/4) + 1),
/// emitting certificates in (k, m) order.
pub fn search_reduced_type2(p: Nat, m_max: Nat, k_max: Nat) -> Result<Vec<SearchCertificate>> {
    solutions::require_odd_prime(p)?;
    require_index(m_max)?;
    require_index(k_max)?;
    let k_cap = k_max.min(kernel::ceil_div(p, 4)? + 1);
    let k_cap = u64::try_from(k_cap).map_err(|_| Error::Domain("k_max exceeds 64 bits"))?;
    let m_max = u64::try_from(m_max).map_err(|_| Error::Domain("m_max exceeds 64 bits"))?;
    let mut out = Vec::new();
    for k in 1..=k_cap {
        for m in 1..=m_max {
            match reduced_cell(p, m as Nat, k as Nat) {
                Ok((ys, zs, d)) => {
                    let (x, y, z) = lift_reduced(p, ys, zs)?;
                    out.push(SearchCertificate {
                        p,
                        m: m as Nat,
                        k: k as Nat,
                        kind: FamilyKind::TypeII,
                        discriminant: d,
                        x,
                        y,
                        z,
                    });
                }
                Err(Error::Overflow) => {
                    log::warn!("overflow at p={p} reduced k={k} m={m}; cell skipped");
                }
                Err(_) => {}
            }
        }
    }
    Ok(out)
}
