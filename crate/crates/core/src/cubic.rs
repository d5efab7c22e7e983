//! Construction and classification of cubic sublattices.
//!
//! `gamma(v, d)` builds the cubic sublattice of edge `d` containing a
//! primitive vector `v` (unique with these properties); `classify` decides
//! whether an arbitrary full-rank basis spans a cubic sublattice and, when it
//! does, recovers the canonical `k·gamma(v, d)` presentation;
//! `enumerate_cubic_edge` lists every cubic sublattice of a given edge by
//! exhausting orthogonal pairs of fixed-norm vectors, which doubles as the
//! brute-force oracle for the uniqueness claims.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};
use crate::int3::{hnf_of_generators, Basis3, HnfBasis3, IntVec3};
use crate::perp::{cross_preimage, perp_basis, perp_sublattice};

/// Default cap on edge lengths accepted by the exhaustive enumerations.
pub const DEFAULT_ENUM_BOUND: i128 = 12;

/// Hard ceiling for enumeration bounds; the pair scan is quadratic in the
/// number of fixed-norm points and becomes unpleasant beyond this.
pub const MAX_ENUM_BOUND: i128 = 32;

/// A cubic sublattice of `Z³`: a basis of three pairwise orthogonal columns
/// of equal length `edge = k·d`, its canonical HNF, the gcd `k` of all
/// lattice vectors, and a primitive witness vector `v` of the `k = 1` part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicLattice {
    basis: Basis3,
    hnf: HnfBasis3,
    k: i128,
    d: i128,
    witness: IntVec3,
}

impl Serialize for CubicLattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CubicLattice", 6)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("hnf", &self.hnf)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("edge", &self.edge())?;
        st.serialize_field("v", &self.witness)?;
        st.end()
    }
}

impl CubicLattice {
    /// The cubic basis: pairwise orthogonal columns of length `edge`.
    pub fn basis(&self) -> &Basis3 {
        &self.basis
    }

    pub fn hnf(&self) -> &HnfBasis3 {
        &self.hnf
    }

    /// Gcd of all lattice vectors.
    pub fn k(&self) -> i128 {
        self.k
    }

    pub fn d(&self) -> i128 {
        self.d
    }

    pub fn edge(&self) -> i128 {
        self.k * self.d
    }

    /// A primitive vector whose edge-`d` cubic sublattice, scaled by `k`,
    /// is this lattice.
    pub fn witness(&self) -> IntVec3 {
        self.witness
    }

    pub fn contains(&self, a: IntVec3) -> Result<bool> {
        self.hnf.basis().contains(a)
    }

    /// The lattice `m`-times this one (every vector scaled by `m ≥ 1`).
    pub fn scaled(&self, m: i128) -> Result<CubicLattice> {
        if m < 1 {
            return Err(Error::NonPositive);
        }
        let cols = self.hnf.cols();
        let hnf = hnf_of_generators(&[cols[0].scale(m)?, cols[1].scale(m)?, cols[2].scale(m)?])?;
        Ok(CubicLattice {
            basis: self.basis.scaled(m)?,
            hnf,
            k: arith::mul(self.k, m)?,
            d: self.d,
            witness: self.witness,
        })
    }
}

/// All integer points with the given squared norm, in ascending
/// lexicographic order.
pub fn sphere_points(norm_sq: i128) -> Result<Vec<IntVec3>> {
    if norm_sq < 0 {
        return Err(Error::NonPositive);
    }
    let r = arith::isqrt(norm_sq);
    let mut out = Vec::new();
    for x in -r..=r {
        let rem_x = norm_sq - x * x;
        let ry = arith::isqrt(rem_x);
        for y in -ry..=ry {
            let rem = rem_x - y * y;
            if let Some(z) = arith::exact_sqrt(rem) {
                if z == 0 {
                    out.push(IntVec3::new(x, y, 0));
                } else {
                    out.push(IntVec3::new(x, y, -z));
                    out.push(IntVec3::new(x, y, z));
                }
            }
        }
    }
    Ok(out)
}

/// The defining membership test for `gamma(v, d)`, free of any basis:
/// `d | a × v` and `d² | (a × v) × v`.
pub fn gamma_contains_def(v: IntVec3, d: i128, a: IntVec3) -> Result<bool> {
    let cr = a.cross(v)?;
    Ok(cr.divisible_by(d) && cr.cross(v)?.divisible_by(arith::mul(d, d)?))
}

/// The cubic sublattice of edge `d` containing the primitive vector `v`,
/// for `d² | ‖v‖²`. It is the set of vectors passing
/// [`gamma_contains_def`], has index `d³` in `Z³`, and is the unique cubic
/// sublattice of edge `d` containing `v`.
///
/// The basis is produced by pulling the plane sublattice of
/// [`perp_sublattice`] back through the cross product: generators
/// `{v, w₁, w₂}` with `cross(wᵢ, v) = d·mᵢ`.
pub fn gamma(v: IntVec3, d: i128) -> Result<CubicLattice> {
    if d < 1 {
        return Err(Error::NonPositive);
    }
    if !v.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    if v.norm_sq()? % arith::mul(d, d)? != 0 {
        return Err(Error::SquareDivisibility);
    }
    let m = perp_sublattice(v, d)?;
    let (m1, m2) = m.basis();
    let w1 = cross_preimage(v, m1.scale(d)?)?;
    let w2 = cross_preimage(v, m2.scale(d)?)?;
    let hnf = hnf_of_generators(&[v, w1, w2])?;
    assert_eq!(hnf.index(), d * d * d, "gamma({v}, {d}) must have index d³");
    let lattice = cubic_from_hnf_parts(hnf, 1, d, v)?;
    debug_assert!(lattice.contains(v)?);
    Ok(lattice)
}

/// All decompositions `d = d₁·d₂` with `d₁` dividing the greatest divisor
/// of `v` and `d₂²` dividing `‖v/k‖²`, ordered by descending `d₂`. Each one
/// yields a cubic sublattice `d₁·gamma(v/k, d₂)` of edge `d` containing `v`;
/// the first entry is the canonical choice of [`gamma_any`]. Non-empty
/// whenever `d² | ‖v‖²`.
pub fn edge_splits(v: IntVec3, d: i128) -> Result<Vec<(i128, i128)>> {
    if d < 1 {
        return Err(Error::NonPositive);
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (k, u) = v.primitive_part()?;
    let u_norm = u.norm_sq()?;
    let mut out = Vec::new();
    for d2 in arith::divisors(d)?.into_iter().rev() {
        if u_norm % arith::mul(d2, d2)? == 0 && k % (d / d2) == 0 {
            out.push((d / d2, d2));
        }
    }
    Ok(out)
}

/// Extends `gamma` to arbitrary non-zero `v` with `d² | ‖v‖²`.
///
/// With `v = k·u` (`u` primitive) the edge splits as `d = d₁·d₂` with
/// `d₁ | k` and `d₂² | ‖u‖²`; among the valid splits (see [`edge_splits`])
/// the one with maximal `d₂` is chosen, and the result is `d₁·gamma(u, d₂)`.
/// When `gcd(k, d) = 1` this is the unique cubic sublattice of edge `d`
/// containing `v`; otherwise other cubic sublattices of the same edge may
/// contain `v` as well (see [`enumerate_cubic_containing`]).
pub fn gamma_any(v: IntVec3, d: i128) -> Result<CubicLattice> {
    if d < 1 {
        return Err(Error::NonPositive);
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if v.norm_sq()? % arith::mul(d, d)? != 0 {
        return Err(Error::SquareDivisibility);
    }
    let (d1, d2) = *edge_splits(v, d)?
        .first()
        .expect("a valid split d = d1·d2 exists whenever d² divides ‖v‖²");
    let (_, u) = v.primitive_part()?;
    let inner = gamma(u, d2)?;
    let out = inner.scaled(d1)?;
    debug_assert!(out.contains(v)?);
    Ok(out)
}

/// Recovers a cubic basis from a full-rank basis whose lattice is claimed to
/// be cubic of edge `e = ∛|det|`. Returns `None` when the lattice is not
/// cubic (no such `e`, no vector of length `e`, or no completing pair).
///
/// Deterministic choice: among the lattice members of squared norm `e²` the
/// lexicographically least is `a`, the least one orthogonal to `a` is `b`,
/// and `c = (a × b)/e`.
pub fn extract_cubic_basis(b: &Basis3) -> Result<Option<(IntVec3, IntVec3, IntVec3)>> {
    let det = b.det().checked_abs().ok_or(Error::Overflow)?;
    let Some(e) = arith::exact_cbrt(det) else {
        return Ok(None);
    };
    let mut members = Vec::new();
    for p in sphere_points(arith::mul(e, e)?)? {
        if b.contains(p)? {
            members.push(p);
        }
    }
    let Some(&a) = members.first() else {
        return Ok(None);
    };
    let mut pair = None;
    for &cand in &members[1..] {
        if a.dot(cand)? == 0 {
            pair = Some(cand);
            break;
        }
    }
    let Some(bb) = pair else {
        return Ok(None);
    };
    let Some(c) = a.cross(bb)?.div_exact(e) else {
        return Ok(None);
    };
    if !b.contains(c)? {
        return Ok(None);
    }
    // three orthogonal members of length e span index e³ = the whole lattice
    debug_assert_eq!(
        Basis3::new(a, bb, c)?.gram()?,
        [[e * e, 0, 0], [0, e * e, 0], [0, 0, e * e]]
    );
    Ok(Some((a, bb, c)))
}

/// The unique `(k, d)` and a primitive witness `v` presenting a cubic
/// sublattice as `k·gamma(v, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyResult {
    pub k: i128,
    pub d: i128,
    pub v: IntVec3,
}

/// Decides whether `b` spans a cubic sublattice. On success the presentation
/// `k·gamma(v, d)` is returned; `None` means the lattice is not cubic.
///
/// `k` is the gcd of all nine entries, `e = ∛|det|` the candidate edge,
/// `d = e/k`, and the verdict is settled by comparing HNFs against the
/// reconstruction `k·gamma(v, d)` for a primitive witness `v` of the
/// de-scaled lattice.
pub fn classify(b: &Basis3) -> Result<Option<ClassifyResult>> {
    let k = arith::gcd(
        arith::gcd(b.col(0).coord_gcd()?, b.col(1).coord_gcd()?)?,
        b.col(2).coord_gcd()?,
    )?;
    let det = b.det().checked_abs().ok_or(Error::Overflow)?;
    let Some(e) = arith::exact_cbrt(det) else {
        return Ok(None);
    };
    if e % k != 0 {
        return Ok(None);
    }
    let d = e / k;
    let descaled = [
        b.col(0).div_exact(k).expect("k divides every entry"),
        b.col(1).div_exact(k).expect("k divides every entry"),
        b.col(2).div_exact(k).expect("k divides every entry"),
    ];
    let hnf_descaled = hnf_of_generators(&descaled)?;
    let cols = hnf_descaled.cols();
    let v = gcd_witness_triple(cols[0], cols[1], cols[2])?;
    debug_assert!(v.is_primitive()?);
    if v.norm_sq()? % (d * d) != 0 {
        return Ok(None);
    }
    let rebuilt = gamma(v, d)?.scaled(k)?;
    if rebuilt.hnf() == &hnf_of_generators(&[b.col(0), b.col(1), b.col(2)])? {
        Ok(Some(ClassifyResult { k, d, v }))
    } else {
        Ok(None)
    }
}

fn rank_of(v1: IntVec3, v2: IntVec3, v3: IntVec3) -> Result<usize> {
    if crate::int3::det3(v1, v2, v3)? != 0 {
        return Ok(3);
    }
    for (a, b) in [(v1, v2), (v1, v3), (v2, v3)] {
        if !a.cross(b)?.is_zero() {
            return Ok(2);
        }
    }
    if v1.is_zero() && v2.is_zero() && v3.is_zero() {
        Ok(0)
    } else {
        Ok(1)
    }
}

/// A vector of the lattice spanned by two independent vectors whose greatest
/// divisor equals the gcd of that lattice, i.e. `gcd(k₁, k₂)` for the
/// greatest divisors `kᵢ` of the generators.
///
/// Construction: complete `u₁ = v₁/k₁` to a basis `{u₁, w}` of the plane
/// lattice, write `u₂ = a·u₁ + b·w`, and return `c·v₁ + v₂` where `c` is the
/// product of the primes of `b` dividing neither `k₁/k` nor `k₂/k`.
pub fn gcd_witness_pair(v1: IntVec3, v2: IntVec3) -> Result<IntVec3> {
    if v1.is_zero() || v2.is_zero() {
        return Err(Error::ZeroVector);
    }
    let normal = v1.cross(v2)?;
    if normal.is_zero() {
        return Err(Error::Parallel);
    }
    let (k1, u1) = v1.primitive_part()?;
    let (k2, u2) = v2.primitive_part()?;
    let k = arith::gcd(k1, k2)?;
    let (_, n) = normal.primitive_part()?;
    let plane = perp_basis(n)?;
    let (pb1, pb2) = plane.basis();
    let [p, q] = plane.coords_of(u1)?.expect("u1 lies in the plane lattice");
    let (g, x, y) = arith::ext_gcd(p, q)?;
    debug_assert_eq!(g, 1, "u1 is primitive in the plane lattice");
    // {u1, w} is a basis: det [[p, -y], [q, x]] = p·x + q·y = 1
    let w = pb1.scale(arith::neg(y)?)?.add(pb2.scale(x)?)?;
    let [p2, q2] = plane.coords_of(u2)?.expect("u2 lies in the plane lattice");
    let a = arith::add(arith::mul(x, p2)?, arith::mul(y, q2)?)?;
    let bcoef = arith::add(arith::mul(arith::neg(q)?, p2)?, arith::mul(p, q2)?)?;
    debug_assert_eq!(u1.scale(a)?.add(w.scale(bcoef)?)?, u2);
    debug_assert_ne!(bcoef, 0);
    let c = arith::radical_coprime_to(bcoef, arith::mul(k1 / k, k2 / k)?)?;
    let out = v1.scale(c)?.add(v2)?;
    let (out_gcd, _) = out.primitive_part()?;
    assert_eq!(out_gcd, k, "witness must achieve the lattice gcd");
    Ok(out)
}

/// Three-generator version of [`gcd_witness_pair`]: a vector of the spanned
/// lattice whose greatest divisor is `gcd(k₁, k₂, k₃)`.
pub fn gcd_witness_triple(v1: IntVec3, v2: IntVec3, v3: IntVec3) -> Result<IntVec3> {
    if crate::int3::det3(v1, v2, v3)? == 0 {
        return Err(Error::RankDeficient {
            achieved: rank_of(v1, v2, v3)?,
            required: 3,
        });
    }
    let t = gcd_witness_pair(v1, v2)?;
    gcd_witness_pair(t, v3)
}

// Shared constructor: wraps a known-cubic HNF with its presentation data,
// extracting the canonical cubic basis.
fn cubic_from_hnf_parts(
    hnf: HnfBasis3,
    k: i128,
    d: i128,
    witness: IntVec3,
) -> Result<CubicLattice> {
    let (a, b, c) =
        extract_cubic_basis(hnf.basis())?.expect("lattice certified cubic must extract");
    let basis = Basis3::new(a, b, c)?;
    Ok(CubicLattice {
        basis,
        hnf,
        k,
        d,
        witness,
    })
}

/// Every cubic sublattice of edge `e`, deduplicated by HNF and sorted by it.
///
/// Pairs of orthogonal norm-`e` vectors whose cross product is divisible by
/// `e` close to a cubic basis `{a, b, (a×b)/e}`; every cubic sublattice of
/// edge `e` arises this way from any two of its cubic basis vectors.
pub fn enumerate_cubic_edge(e: i128) -> Result<Vec<CubicLattice>> {
    if e < 1 {
        return Err(Error::NonPositive);
    }
    if e > MAX_ENUM_BOUND {
        return Err(Error::BoundExceeded {
            edge: e,
            bound: MAX_ENUM_BOUND,
        });
    }
    let pts = sphere_points(arith::mul(e, e)?)?;
    let mut seen: BTreeMap<HnfBasis3, ()> = BTreeMap::new();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            if a.dot(b)? != 0 {
                continue;
            }
            let Some(c) = a.cross(b)?.div_exact(e) else {
                continue;
            };
            let hnf = hnf_of_generators(&[a, b, c])?;
            seen.entry(hnf).or_insert(());
        }
    }
    let mut out = Vec::with_capacity(seen.len());
    for (hnf, ()) in seen {
        let cols = hnf.cols();
        let result = classify(&Basis3::new(cols[0], cols[1], cols[2])?)?
            .expect("enumerated lattice has a cubic basis by construction");
        out.push(cubic_from_hnf_parts(hnf, result.k, result.d, result.v)?);
    }
    Ok(out)
}

/// Every cubic sublattice of edge `d` containing `v`, for `d ≤ bound`.
///
/// This is the brute-force oracle for the uniqueness of `gamma`: for
/// primitive `v` the list has exactly one element, equal to `gamma(v, d)`;
/// for imprimitive `v` it may have several.
pub fn enumerate_cubic_containing(v: IntVec3, d: i128, bound: i128) -> Result<Vec<CubicLattice>> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if d < 1 {
        return Err(Error::NonPositive);
    }
    if d > bound || bound > MAX_ENUM_BOUND {
        return Err(Error::BoundExceeded { edge: d, bound });
    }
    if v.norm_sq()? % arith::mul(d, d)? != 0 {
        return Err(Error::SquareDivisibility);
    }
    let mut out = Vec::new();
    for lat in enumerate_cubic_edge(d)? {
        if lat.contains(v)? {
            out.push(lat);
        }
    }
    Ok(out)
}
