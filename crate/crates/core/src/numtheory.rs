//! Arithmetic constructions on squared lengths: primitive vectors with
//! squared length divisible by `p²`, the reverse embedding that realises a
//! prescribed coordinate vector inside a cubic sublattice, and the resulting
//! transfer of "sum of three coprime squares" between `m` and `d²·m`.

use serde::Serialize;

use crate::arith;
use crate::cubic::gamma;
use crate::error::{Error, Result};
use crate::int3::{Basis3, IntVec3};

/// A primitive vector whose squared length is divisible by `p²`, for an odd
/// prime `p`. Rejects `p = 2`: modulo 4, three squares summing to a multiple
/// of 4 are all even, so no primitive vector qualifies.
///
/// For `p ≡ 1 (mod 4)` the vector is built from a square root of `−1`
/// modulo `p`; for `p ≡ 3 (mod 4)` from the lexicographically first pair
/// `x, y` with `x² + y² ≡ −1 (mod p)`.
pub fn prime_vector(p: i128) -> Result<IntVec3> {
    if p == 2 {
        return Err(Error::PrimeTwo);
    }
    if p < 2 || !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let raw = if p % 4 == 1 {
        let x = sqrt_minus_one(p);
        debug_assert_eq!(arith::mul_mod(x, x, p), p - 1);
        let a = (x * x + 1) / p;
        let b = offset_for(a, p);
        IntVec3::new(0, x, arith::add(arith::mul(b, p)?, 1)?)
    } else {
        let (x, y) = pair_sum_minus_one(p);
        let a = (x * x + y * y + 1) / p;
        let b = offset_for(a, p);
        IntVec3::new(x, y, arith::add(arith::mul(b, p)?, 1)?)
    };
    let (_, u) = raw.primitive_part()?;
    debug_assert_eq!(u.norm_sq()? % (p * p), 0);
    Ok(u)
}

// x with x² ≡ −1 (mod p), p ≡ 1 (mod 4): g^((p−1)/4) for the first base g
// that is a quadratic non-residue.
fn sqrt_minus_one(p: i128) -> i128 {
    let e = (p - 1) / 4;
    for g in 2.. {
        let x = arith::pow_mod(g, e, p);
        if arith::mul_mod(x, x, p) == p - 1 {
            return x;
        }
    }
    unreachable!("half of all residues are non-squares")
}

// lexicographically first (x, y) in [1, p−1]² with x² + y² ≡ −1 (mod p);
// a counting argument over the residue pairs guarantees a hit
fn pair_sum_minus_one(p: i128) -> (i128, i128) {
    // least y with y² ≡ r (mod p), for each attained residue r
    let mut least_root = std::collections::BTreeMap::new();
    for y in 1..p {
        least_root.entry(arith::mul_mod(y, y, p)).or_insert(y);
    }
    for x in 1..p {
        let target = (p - 1 - arith::mul_mod(x, x, p)).rem_euclid(p);
        if let Some(&y) = least_root.get(&target) {
            return (x, y);
        }
    }
    unreachable!("some pair of residues sums to -1 mod p")
}

// b in [0, p) with −2b ≡ a (mod p)
fn offset_for(a: i128, p: i128) -> i128 {
    let inv2 = (p + 1) / 2;
    arith::mul_mod(-a, inv2, p)
}

/// One prime step of [`reverse_construct`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReverseStep {
    pub prime: i128,
    /// The auxiliary vector actually used, after permutation and sign flip.
    pub w: IntVec3,
    /// Coordinate permutation applied to the raw [`prime_vector`] output.
    pub permutation: [usize; 3],
    pub sign_flipped: bool,
    /// Cubic basis of `gamma(w, p)` in this step's coordinate frame.
    pub cubic_basis: Basis3,
    /// The current vector re-expressed in that cubic basis (scaled by `p²`).
    pub lifted: IntVec3,
}

/// Audit record of the reverse embedding: `u` is primitive with
/// `‖u‖² = d²·‖input‖²`, and the certifying basis is a cubic basis of the
/// edge-`d` cubic sublattice around `u` in which `u` has exactly the input's
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReverseTrace {
    pub input: IntVec3,
    pub d: i128,
    pub steps: Vec<ReverseStep>,
    pub u: IntVec3,
    pub certifying_basis: Basis3,
}

/// For a primitive `v` and odd `d`, produces a primitive `u` together with a
/// cubic basis of the edge-`d` cubic sublattice containing `u` in which the
/// coordinates of `u` are exactly `v`.
///
/// One step per prime factor of `d`, ascending with multiplicity: pick an
/// auxiliary `w` from [`prime_vector`], permute it so the coordinate at
/// which `p` misses `v` also misses `w`, flip that coordinate's sign if `p`
/// divides `v·w`, then re-express `p²·v` in a cubic basis of `gamma(w, p)`.
/// Oddness of `d` is essential: it makes the sign flip able to break the
/// divisibility, and `d²·m` with even `d` need not be a sum of three coprime
/// squares at all.
pub fn reverse_construct(v: IntVec3, d: i128) -> Result<ReverseTrace> {
    if d < 1 {
        return Err(Error::NonPositive);
    }
    if d % 2 == 0 {
        return Err(Error::EvenD);
    }
    if !v.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    let mut primes = Vec::new();
    for (p, e) in arith::factorize(d)? {
        for _ in 0..e {
            primes.push(p);
        }
    }
    let mut cur = v;
    let mut cert = Basis3::identity();
    let mut steps = Vec::with_capacity(primes.len());
    for p in primes {
        let raw = prime_vector(p)?;
        let i = (0..3)
            .find(|&i| cur[i] % p != 0)
            .expect("a primitive vector has a coordinate prime to p");
        let j = (0..3)
            .find(|&j| raw[j] % p != 0)
            .expect("prime_vector output is primitive");
        let mut permutation = [0usize, 1, 2];
        permutation.swap(i, j);
        let mut wc = [
            raw[permutation[0]],
            raw[permutation[1]],
            raw[permutation[2]],
        ];
        debug_assert_ne!(wc[i] % p, 0);
        let mut w = IntVec3::new(wc[0], wc[1], wc[2]);
        let sign_flipped = cur.dot(w)? % p == 0;
        if sign_flipped {
            wc[i] = arith::neg(wc[i])?;
            w = IntVec3::new(wc[0], wc[1], wc[2]);
        }
        // p ∤ v·w now: the two candidates differ by 2·vᵢ·wᵢ, prime to odd p
        assert_ne!(cur.dot(w)? % p, 0, "sign flip must break divisibility");

        let g = gamma(w, p)?;
        let basis = g.basis().clone();
        let lifted = basis
            .coords_of(cur.scale(arith::mul(p, p)?)?)?
            .expect("p²·Z³ lies inside gamma(w, p)");
        assert!(
            lifted.is_primitive()?,
            "lift of a vector with p ∤ v·w stays primitive"
        );
        // in the new frame the certifying basis picks up a factor Bᵀ, since
        // Bᵀ·x equals the coordinates of p²·x in the cubic basis B
        cert = basis.transposed().compose(&cert)?;
        steps.push(ReverseStep {
            prime: p,
            w,
            permutation,
            sign_flipped,
            cubic_basis: basis,
            lifted,
        });
        cur = lifted;
    }
    debug_assert_eq!(cert.mul_vec(v)?, cur);
    debug_assert_eq!(cur.norm_sq()?, arith::mul(arith::mul(d, d)?, v.norm_sq()?)?);
    Ok(ReverseTrace {
        input: v,
        d,
        steps,
        u: cur,
        certifying_basis: cert,
    })
}

/// Divides a coprime triple out of a cubic sublattice: the coordinates of
/// `t` in the cubic basis of `gamma(t, d)`, for coprime `t` with
/// `d² | Σtᵢ²`. The result is again coprime and its squared sum is
/// `(Σtᵢ²)/d²`.
pub fn scale_down(t: IntVec3, d: i128) -> Result<IntVec3> {
    if d < 1 {
        return Err(Error::NonPositive);
    }
    if t.is_zero() || !t.is_primitive()? {
        return Err(Error::NotCoprime);
    }
    if t.norm_sq()? % arith::mul(d, d)? != 0 {
        return Err(Error::SquareDivisibility);
    }
    let g = gamma(t, d)?;
    let out = g
        .basis()
        .coords_of(t)?
        .expect("t lies in its own cubic sublattice");
    debug_assert!(out.is_primitive()?);
    debug_assert_eq!(out.norm_sq()?, t.norm_sq()? / (d * d));
    Ok(out)
}

/// Multiplies a coprime triple up by an odd `d`: a coprime triple whose
/// squared sum is `d²·Σtᵢ²`, obtained as the endpoint of
/// [`reverse_construct`].
pub fn scale_up(t: IntVec3, d: i128) -> Result<IntVec3> {
    if t.is_zero() || !t.is_primitive()? {
        return Err(Error::NotCoprime);
    }
    let trace = reverse_construct(t, d)?;
    Ok(trace.u)
}

/// Necessary condition for `m` to be a sum of three coprime squares: `m` is
/// neither divisible by 4 nor congruent to 7 modulo 8. (Only necessity is
/// claimed; no sufficiency.)
pub fn coprime_three_squares_necessary(m: i128) -> bool {
    m >= 1 && m % 4 != 0 && m % 8 != 7
}
