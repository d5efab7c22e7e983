//! The rank-2 lattice of integer vectors orthogonal to a primitive vector,
//! canonical preimages under the cross product, and the index-`d` sublattice
//! of the plane whose members' cross products with the normal are divisible
//! by `d`.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::int3::{hnf2_with_carry, IntVec3};

/// Two integer vectors spanning a rank-2 sublattice of a plane through the
/// origin, kept in ambient coordinates together with the primitive normal.
///
/// For the full orthogonal lattice produced by [`perp_basis`] the basis is
/// oriented so that `cross(b1, b2) = normal` exactly; sublattices of the
/// plane (see [`PerpSublattice`]) scale that cross product by their index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneLattice {
    normal: IntVec3,
    b1: IntVec3,
    b2: IntVec3,
}

impl PlaneLattice {
    pub(crate) fn new_unchecked(normal: IntVec3, b1: IntVec3, b2: IntVec3) -> Self {
        debug_assert_eq!(b1.dot(normal).unwrap(), 0);
        debug_assert_eq!(b2.dot(normal).unwrap(), 0);
        PlaneLattice { normal, b1, b2 }
    }

    pub fn normal(&self) -> IntVec3 {
        self.normal
    }

    pub fn basis(&self) -> (IntVec3, IntVec3) {
        (self.b1, self.b2)
    }

    /// Integer coordinates of `a` in the `(b1, b2)` basis, or `None` when `a`
    /// is outside the spanned lattice (including off the plane entirely).
    pub fn coords_of(&self, a: IntVec3) -> Result<Option<[i128; 2]>> {
        if a.dot(self.normal)? != 0 {
            return Ok(None);
        }
        // a = α·b1 + β·b2  ⇒  (a × b2)·n = α·(b1 × b2)·n  and symmetrically
        let denom = self.b1.cross(self.b2)?.dot(self.normal)?;
        debug_assert_ne!(denom, 0);
        let alpha_num = a.cross(self.b2)?.dot(self.normal)?;
        let beta_num = self.b1.cross(a)?.dot(self.normal)?;
        if alpha_num % denom != 0 || beta_num % denom != 0 {
            return Ok(None);
        }
        Ok(Some([alpha_num / denom, beta_num / denom]))
    }

    pub fn contains(&self, a: IntVec3) -> Result<bool> {
        Ok(self.coords_of(a)?.is_some())
    }

    /// `α·b1 + β·b2`.
    pub fn member(&self, coords: [i128; 2]) -> Result<IntVec3> {
        self.b1.scale(coords[0])?.add(self.b2.scale(coords[1])?)
    }
}

/// Basis of the lattice of *all* integer vectors orthogonal to the primitive
/// vector `v`, oriented so that `cross(b1, b2) = v`.
///
/// The three cross products `eᵢ × v` generate the whole orthogonal lattice;
/// they are canonicalised by a rank-2 HNF taken in the coordinate plane that
/// omits the first non-zero coordinate of `v` (projection there is injective
/// on the plane), with the 3-D vectors dragged through the same column
/// operations.
pub fn perp_basis(v: IntVec3) -> Result<PlaneLattice> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !v.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    let drop = (0..3).find(|&i| v[i] != 0).expect("non-zero vector");
    let keep: [usize; 2] = match drop {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let mut gens = Vec::with_capacity(3);
    for i in 0..3 {
        let g = IntVec3::axis(i).cross(v)?;
        gens.push(([g[keep[0]], g[keep[1]]], g));
    }
    let [(_, b1), (_, b2)] = hnf2_with_carry(gens)?;
    // orient: cross(b1, b2) is ±v; swap to get the + sign
    let (b1, b2) = if b1.cross(b2)? == v {
        (b1, b2)
    } else {
        (b2, b1)
    };
    debug_assert_eq!(b1.cross(b2)?, v);
    Ok(PlaneLattice::new_unchecked(v, b1, b2))
}

// Bezout vector: t·v = 1 for primitive v.
fn bezout3(v: IntVec3) -> Result<IntVec3> {
    let (g, a, b) = arith::ext_gcd(v.x, v.y)?;
    let (one, c, d) = arith::ext_gcd(g, v.z)?;
    debug_assert_eq!(one, 1);
    Ok(IntVec3::new(arith::mul(a, c)?, arith::mul(b, c)?, d))
}

/// Canonical `w` with `cross(w, v) = m`, defined for `m` orthogonal to the
/// primitive vector `v`.
///
/// The solutions form a line `w₀ + t·v`; the representative returned is the
/// one of least infinity norm, ties broken by least squared length and then
/// by least `t`. In particular `m = 0` maps to the zero vector.
pub fn cross_preimage(v: IntVec3, m: IntVec3) -> Result<IntVec3> {
    if !v.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    if m.dot(v)? != 0 {
        return Err(Error::NotOrthogonal);
    }
    // t·v = 1  ⇒  (t × m) × v = (t·v)m − (m·v)t = m
    let w0 = bezout3(v)?.cross(m)?;
    debug_assert_eq!(w0.cross(v)?, m);

    let inf = |t: i128| -> Result<i128> {
        let w = w0.add(v.scale(t)?)?;
        Ok(w.x.abs().max(w.y.abs()).max(w.z.abs()))
    };
    // bracket the convex minimum of t ↦ ‖w0 + t·v‖∞
    let mut lo = i128::MAX;
    let mut hi = i128::MIN;
    for i in 0..3 {
        if v[i] != 0 {
            let t = (-w0[i]).div_euclid(v[i]);
            lo = lo.min(t - 1);
            hi = hi.max(t + 2);
        }
    }
    debug_assert!(lo <= hi);
    // leftmost minimiser of the infinity norm
    let (mut a, mut b) = (lo, hi);
    while a < b {
        let mid = a + (b - a) / 2;
        if inf(mid)? <= inf(mid + 1)? {
            b = mid;
        } else {
            a = mid + 1;
        }
    }
    let t_left = a;
    // rightmost minimiser (the plateau's other edge)
    let (mut a, mut b) = (t_left, hi);
    while a < b {
        let mid = a + (b - a + 1) / 2;
        if inf(mid)? <= inf(mid - 1)? {
            a = mid;
        } else {
            b = mid - 1;
        }
    }
    let t_right = a;
    // squared length is a strictly convex quadratic in t; clamp its vertex
    let num = -w0.dot(v)?;
    let den = v.norm_sq()?;
    let vertex = num.div_euclid(den);
    let mut best: Option<(i128, i128)> = None;
    for t in [
        t_left,
        vertex.clamp(t_left, t_right),
        (vertex + 1).clamp(t_left, t_right),
        t_right,
    ] {
        let w = w0.add(v.scale(t)?)?;
        let key = w.norm_sq()?;
        match best {
            Some((bk, bt)) if (bk, bt) <= (key, t) => {}
            _ => best = Some((key, t)),
        }
    }
    let (_, t) = best.expect("candidates non-empty");
    let w = w0.add(v.scale(t)?)?;
    debug_assert_eq!(w.cross(v)?, m);
    Ok(w)
}

/// The sublattice of the plane orthogonal to `v` whose members `a` satisfy
/// `d | a × v` componentwise; its index in the full orthogonal lattice is
/// exactly `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerpSublattice {
    plane: PlaneLattice,
    v: IntVec3,
    d: i128,
    index: i128,
}

impl PerpSublattice {
    pub fn plane(&self) -> &PlaneLattice {
        &self.plane
    }

    pub fn basis(&self) -> (IntVec3, IntVec3) {
        self.plane.basis()
    }

    pub fn v(&self) -> IntVec3 {
        self.v
    }

    pub fn d(&self) -> i128 {
        self.d
    }

    /// Index in the full orthogonal lattice of `v`; always equals `d`.
    pub fn index_in_perp(&self) -> i128 {
        self.index
    }

    /// The defining divisibility test, independent of any basis.
    pub fn contains_def(&self, a: IntVec3) -> Result<bool> {
        Ok(a.dot(self.v)? == 0 && a.cross(self.v)?.divisible_by(self.d))
    }

    pub fn contains(&self, a: IntVec3) -> Result<bool> {
        self.plane.contains(a)
    }
}

/// Constructs the index-`d` sublattice above for a primitive `v` with
/// `d² | ‖v‖²`, as the HNF (in plane coordinates) of the generating set
/// `{d·eᵢ×v, (eᵢ×v)×v} ∪ {d·b1, d·b2}`.
pub fn perp_sublattice(v: IntVec3, d: i128) -> Result<PerpSublattice> {
    if d < 1 {
        return Err(Error::NonPositive);
    }
    if !v.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    if v.norm_sq()? % (arith::mul(d, d)?) != 0 {
        return Err(Error::SquareDivisibility);
    }
    let plane = perp_basis(v)?;
    let (b1, b2) = plane.basis();
    let mut gens3 = Vec::with_capacity(8);
    for i in 0..3 {
        let r = IntVec3::axis(i).cross(v)?;
        gens3.push(r.scale(d)?);
        gens3.push(r.cross(v)?);
    }
    gens3.push(b1.scale(d)?);
    gens3.push(b2.scale(d)?);

    let mut gens2 = Vec::with_capacity(gens3.len());
    for g in gens3 {
        let c = plane
            .coords_of(g)?
            .expect("generator lies in the orthogonal lattice");
        gens2.push((c, ()));
    }
    let [(c1, ()), (c2, ())] = hnf2_with_carry(gens2)?;
    let m1 = plane.member(c1)?;
    let m2 = plane.member(c2)?;
    let index = arith::mul(c1[0], c2[1])?;
    assert_eq!(index, d, "index of the divisibility sublattice must be d");

    let sub = PerpSublattice {
        plane: PlaneLattice::new_unchecked(v, m1, m2),
        v,
        d,
        index,
    };
    debug_assert!(sub.contains_def(m1)?);
    debug_assert!(sub.contains_def(m2)?);
    Ok(sub)
}
