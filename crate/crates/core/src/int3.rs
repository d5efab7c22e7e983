//! Exact 3-vector and 3×3 basis algebra: cross and dot products, primitive
//! parts, determinants, coordinate solving and the canonical Hermite normal
//! form that serves as the identity test for sublattices.
//!
//! Conventions fixed here and relied on everywhere else:
//!
//! * a `Basis3` is *column-major*: its three vectors are the columns of the
//!   matrix it denotes, and JSON renders it as three `[x, y, z]` arrays;
//! * the canonical HNF is column-style and lower triangular with strictly
//!   positive diagonal, and every entry left of its row's pivot is reduced
//!   into `[0, pivot)`. Two generating sets span the same sublattice exactly
//!   when their HNFs are identical component-wise.

use std::fmt;
use std::ops::Index;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};

/// An exact integer 3-vector, the universal currency of the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec3 {
    pub x: i128,
    pub y: i128,
    pub z: i128,
}

impl fmt::Debug for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Display for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Index<usize> for IntVec3 {
    type Output = i128;
    fn index(&self, i: usize) -> &i128 {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("IntVec3 index out of range: {i}"),
        }
    }
}

impl Serialize for IntVec3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        seq.serialize_element(&self.x)?;
        seq.serialize_element(&self.y)?;
        seq.serialize_element(&self.z)?;
        seq.end()
    }
}

// add/sub/neg return Result, which the std operator traits cannot express
#[allow(clippy::should_implement_trait)]
impl IntVec3 {
    pub const ZERO: IntVec3 = IntVec3 { x: 0, y: 0, z: 0 };

    pub fn new(x: i128, y: i128, z: i128) -> Self {
        IntVec3 { x, y, z }
    }

    /// Standard basis vector `e_i`, `i ∈ {0, 1, 2}`.
    pub fn axis(i: usize) -> Self {
        let mut v = IntVec3::ZERO;
        match i {
            0 => v.x = 1,
            1 => v.y = 1,
            2 => v.z = 1,
            _ => panic!("axis index out of range: {i}"),
        }
        v
    }

    pub fn coords(&self) -> [i128; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_zero(&self) -> bool {
        *self == IntVec3::ZERO
    }

    pub fn add(self, o: IntVec3) -> Result<IntVec3> {
        Ok(IntVec3::new(
            arith::add(self.x, o.x)?,
            arith::add(self.y, o.y)?,
            arith::add(self.z, o.z)?,
        ))
    }

    pub fn sub(self, o: IntVec3) -> Result<IntVec3> {
        Ok(IntVec3::new(
            arith::sub(self.x, o.x)?,
            arith::sub(self.y, o.y)?,
            arith::sub(self.z, o.z)?,
        ))
    }

    pub fn neg(self) -> Result<IntVec3> {
        Ok(IntVec3::new(
            arith::neg(self.x)?,
            arith::neg(self.y)?,
            arith::neg(self.z)?,
        ))
    }

    pub fn scale(self, k: i128) -> Result<IntVec3> {
        Ok(IntVec3::new(
            arith::mul(self.x, k)?,
            arith::mul(self.y, k)?,
            arith::mul(self.z, k)?,
        ))
    }

    pub fn dot(self, o: IntVec3) -> Result<i128> {
        arith::add(
            arith::add(arith::mul(self.x, o.x)?, arith::mul(self.y, o.y)?)?,
            arith::mul(self.z, o.z)?,
        )
    }

    /// `(a₂b₃ − a₃b₂, a₃b₁ − a₁b₃, a₁b₂ − a₂b₁)`; orthogonal to both inputs.
    pub fn cross(self, o: IntVec3) -> Result<IntVec3> {
        Ok(IntVec3::new(
            arith::sub(arith::mul(self.y, o.z)?, arith::mul(self.z, o.y)?)?,
            arith::sub(arith::mul(self.z, o.x)?, arith::mul(self.x, o.z)?)?,
            arith::sub(arith::mul(self.x, o.y)?, arith::mul(self.y, o.x)?)?,
        ))
    }

    pub fn norm_sq(self) -> Result<i128> {
        self.dot(self)
    }

    /// Gcd of the coordinates; 0 only for the zero vector.
    pub fn coord_gcd(self) -> Result<i128> {
        arith::gcd(arith::gcd(self.x, self.y)?, self.z)
    }

    /// Splits a non-zero vector as `k·u` with `u` primitive and `k ≥ 1`.
    pub fn primitive_part(self) -> Result<(i128, IntVec3)> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let k = self.coord_gcd()?;
        Ok((k, IntVec3::new(self.x / k, self.y / k, self.z / k)))
    }

    pub fn is_primitive(self) -> Result<bool> {
        Ok(!self.is_zero() && self.coord_gcd()? == 1)
    }

    pub fn divisible_by(self, k: i128) -> bool {
        k != 0 && self.x % k == 0 && self.y % k == 0 && self.z % k == 0
    }

    /// Componentwise division when exact.
    pub fn div_exact(self, k: i128) -> Option<IntVec3> {
        self.divisible_by(k)
            .then(|| IntVec3::new(self.x / k, self.y / k, self.z / k))
    }
}

/// An ordered triple of column vectors spanning a finite-index sublattice of
/// `Z³`. The determinant is cached and never zero; its magnitude equals the
/// index of the spanned sublattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Basis3 {
    cols: [IntVec3; 3],
    det: i128,
}

impl fmt::Debug for Basis3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}, {:?}, {:?}]",
            self.cols[0], self.cols[1], self.cols[2]
        )
    }
}

impl Serialize for Basis3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        for c in &self.cols {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// Signed determinant of three column vectors.
pub fn det3(c0: IntVec3, c1: IntVec3, c2: IntVec3) -> Result<i128> {
    c0.cross(c1)?.dot(c2)
}

impl Basis3 {
    pub fn new(c0: IntVec3, c1: IntVec3, c2: IntVec3) -> Result<Self> {
        let det = det3(c0, c1, c2)?;
        if det == 0 {
            return Err(Error::Singular);
        }
        Ok(Basis3 {
            cols: [c0, c1, c2],
            det,
        })
    }

    pub fn from_cols(cols: [IntVec3; 3]) -> Result<Self> {
        Basis3::new(cols[0], cols[1], cols[2])
    }

    pub fn identity() -> Self {
        Basis3 {
            cols: [IntVec3::axis(0), IntVec3::axis(1), IntVec3::axis(2)],
            det: 1,
        }
    }

    pub fn cols(&self) -> &[IntVec3; 3] {
        &self.cols
    }

    pub fn col(&self, i: usize) -> IntVec3 {
        self.cols[i]
    }

    pub fn det(&self) -> i128 {
        self.det
    }

    /// Every column multiplied by `k ≠ 0`.
    pub fn scaled(&self, k: i128) -> Result<Basis3> {
        if k == 0 {
            return Err(Error::Singular);
        }
        Basis3::new(
            self.cols[0].scale(k)?,
            self.cols[1].scale(k)?,
            self.cols[2].scale(k)?,
        )
    }

    /// Rows become columns. A cubic basis matrix `B` satisfies
    /// `Bᵀ·B = edge²·I`, so the transpose doubles as `edge²·B⁻¹`.
    pub fn transposed(&self) -> Basis3 {
        let c = &self.cols;
        Basis3 {
            cols: [
                IntVec3::new(c[0].x, c[1].x, c[2].x),
                IntVec3::new(c[0].y, c[1].y, c[2].y),
                IntVec3::new(c[0].z, c[1].z, c[2].z),
            ],
            det: self.det,
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Basis3) -> Result<Basis3> {
        let mut cols = [IntVec3::ZERO; 3];
        for (i, c) in cols.iter_mut().enumerate() {
            *c = self.mul_vec(other.cols[i])?;
        }
        Basis3::from_cols(cols)
    }

    /// `B·x`: the lattice vector with coefficients `x`.
    pub fn mul_vec(&self, x: IntVec3) -> Result<IntVec3> {
        self.cols[0]
            .scale(x.x)?
            .add(self.cols[1].scale(x.y)?)?
            .add(self.cols[2].scale(x.z)?)
    }

    /// Gram matrix: entry `(i, j)` is the dot product of columns `i` and `j`.
    pub fn gram(&self) -> Result<[[i128; 3]; 3]> {
        let mut g = [[0i128; 3]; 3];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.cols[i].dot(self.cols[j])?;
            }
        }
        Ok(g)
    }

    /// Adjugate matrix as columns, so `adj(B)·B = B·adj(B) = det·I`.
    fn adjugate_cols(&self) -> Result<[IntVec3; 3]> {
        let [a, b, c] = self.cols;
        // rows of the adjugate are the cross products of column pairs
        let r0 = b.cross(c)?;
        let r1 = c.cross(a)?;
        let r2 = a.cross(b)?;
        Ok([
            IntVec3::new(r0.x, r1.x, r2.x),
            IntVec3::new(r0.y, r1.y, r2.y),
            IntVec3::new(r0.z, r1.z, r2.z),
        ])
    }

    /// Integer coordinates of `a` with respect to this basis, or `None` when
    /// `a` lies outside the spanned sublattice. Exactness comes from the
    /// adjugate: `x = adj(B)·a / det` with a divisibility check.
    pub fn coords_of(&self, a: IntVec3) -> Result<Option<IntVec3>> {
        let adj = self.adjugate_cols()?;
        let num = adj[0]
            .scale(a.x)?
            .add(adj[1].scale(a.y)?)?
            .add(adj[2].scale(a.z)?)?;
        Ok(num.div_exact(self.det))
    }

    pub fn contains(&self, a: IntVec3) -> Result<bool> {
        Ok(self.coords_of(a)?.is_some())
    }
}

/// A `Basis3` in canonical column Hermite normal form. Two generating sets
/// span the same sublattice iff their `HnfBasis3` are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HnfBasis3(Basis3);

impl fmt::Debug for HnfBasis3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hnf{:?}", self.0)
    }
}

impl HnfBasis3 {
    pub fn basis(&self) -> &Basis3 {
        &self.0
    }

    pub fn cols(&self) -> &[IntVec3; 3] {
        self.0.cols()
    }

    /// Index of the sublattice in `Z³`; equals the (positive) determinant.
    pub fn index(&self) -> i128 {
        self.0.det()
    }
}

// One elimination step: combine columns `ci` and `cj` unimodularly so the
// entry of `ci` at `row` becomes gcd(ci[row], cj[row]) and cj[row] becomes 0.
fn gcd_step(cols: &mut [IntVec3], row: usize, ci: usize, cj: usize) -> Result<()> {
    let a = cols[ci][row];
    let b = cols[cj][row];
    if b == 0 {
        return Ok(());
    }
    if a == 0 {
        cols.swap(ci, cj);
        return Ok(());
    }
    let (g, x, y) = arith::ext_gcd(a, b)?;
    let new_i = cols[ci].scale(x)?.add(cols[cj].scale(y)?)?;
    let new_j = cols[ci].scale(b / g)?.sub(cols[cj].scale(a / g)?)?;
    cols[ci] = new_i;
    cols[cj] = new_j;
    debug_assert_eq!(cols[ci][row], g);
    debug_assert_eq!(cols[cj][row], 0);
    Ok(())
}

/// Canonical HNF of the sublattice generated by `gens`. Idempotent and
/// independent of generator order; rank below 3 is an error that reports the
/// rank actually achieved.
pub fn hnf_of_generators(gens: &[IntVec3]) -> Result<HnfBasis3> {
    let mut cols: Vec<IntVec3> = gens.to_vec();
    let mut pivot = 0usize;
    for row in 0..3 {
        let found = (pivot..cols.len()).find(|&j| cols[j][row] != 0);
        let Some(j) = found else { continue };
        cols.swap(pivot, j);
        for j in pivot + 1..cols.len() {
            gcd_step(&mut cols, row, pivot, j)?;
        }
        if cols[pivot][row] < 0 {
            cols[pivot] = cols[pivot].neg()?;
        }
        pivot += 1;
    }
    if pivot < 3 {
        return Err(Error::RankDeficient {
            achieved: pivot,
            required: 3,
        });
    }
    let mut b = [cols[0], cols[1], cols[2]];
    // reduce entries left of each pivot into [0, diagonal)
    for i in 1..3 {
        let diag = b[i][i];
        for j in 0..i {
            let q = b[j][i].div_euclid(diag);
            if q != 0 {
                b[j] = b[j].sub(b[i].scale(q)?)?;
            }
            debug_assert!(0 <= b[j][i] && b[j][i] < diag);
        }
    }
    Ok(HnfBasis3(Basis3::from_cols(b)?))
}

/// Rank-2 column HNF over pairs, each pair dragging an arbitrary payload
/// through the same unimodular column operations. Returns the two pivot
/// columns as `([p, q], payload)`, `([0, r], payload)` with `p, r > 0` and
/// `0 ≤ q < r`.
pub(crate) fn hnf2_with_carry<T>(gens: Vec<([i128; 2], T)>) -> Result<[([i128; 2], T); 2]>
where
    T: Clone + CarryOps,
{
    let mut cols = gens;
    let mut pivot = 0usize;
    for row in 0..2 {
        let found = (pivot..cols.len()).find(|&j| cols[j].0[row] != 0);
        let Some(j) = found else { continue };
        cols.swap(pivot, j);
        for j in pivot + 1..cols.len() {
            let a = cols[pivot].0[row];
            let b = cols[j].0[row];
            if b == 0 {
                continue;
            }
            if a == 0 {
                cols.swap(pivot, j);
                continue;
            }
            let (g, x, y) = arith::ext_gcd(a, b)?;
            let (cp, cj) = (cols[pivot].clone(), cols[j].clone());
            cols[pivot] = combine(&cp, x, &cj, y)?;
            cols[j] = combine(&cp, b / g, &cj, -(a / g))?;
        }
        if cols[pivot].0[row] < 0 {
            cols[pivot] = combine(&cols[pivot].clone(), -1, &cols[pivot].clone(), 0)?;
        }
        pivot += 1;
    }
    if pivot < 2 {
        return Err(Error::RankDeficient {
            achieved: pivot,
            required: 2,
        });
    }
    let mut b0 = cols[0].clone();
    let b1 = cols[1].clone();
    let diag = b1.0[1];
    let q = b0.0[1].div_euclid(diag);
    if q != 0 {
        b0 = combine(&b0, 1, &b1, -q)?;
    }
    debug_assert!(b0.0[0] > 0 && diag > 0 && 0 <= b0.0[1] && b0.0[1] < diag);
    Ok([b0, b1])
}

pub(crate) trait CarryOps: Sized {
    fn lincomb(a: &Self, x: i128, b: &Self, y: i128) -> Result<Self>;
}

impl CarryOps for IntVec3 {
    fn lincomb(a: &Self, x: i128, b: &Self, y: i128) -> Result<Self> {
        a.scale(x)?.add(b.scale(y)?)
    }
}

impl CarryOps for () {
    fn lincomb(_: &Self, _: i128, _: &Self, _: i128) -> Result<Self> {
        Ok(())
    }
}

fn combine<T: CarryOps + Clone>(
    a: &([i128; 2], T),
    x: i128,
    b: &([i128; 2], T),
    y: i128,
) -> Result<([i128; 2], T)> {
    let c0 = arith::add(arith::mul(a.0[0], x)?, arith::mul(b.0[0], y)?)?;
    let c1 = arith::add(arith::mul(a.0[1], x)?, arith::mul(b.0[1], y)?)?;
    Ok(([c0, c1], T::lincomb(&a.1, x, &b.1, y)?))
}

/// Largest `d` with `d² | n`; the quotient `n / d²` is square-free.
pub fn max_square_divisor(n: i128) -> Result<i128> {
    arith::max_square_divisor(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: i128, y: i128, z: i128) -> IntVec3 {
        IntVec3::new(x, y, z)
    }

    #[test]
    fn cross_examples() {
        assert_eq!(v(1, 0, 0).cross(v(0, 1, 0)).unwrap(), v(0, 0, 1),);
        assert_eq!(v(-1, 2, 2).cross(v(2, -1, 2)).unwrap(), v(6, 6, -3));
        assert_eq!(v(1, 2, 2).cross(v(1, 2, 2)).unwrap(), IntVec3::ZERO);
    }

    #[test]
    fn gram_examples() {
        let id = Basis3::identity();
        assert_eq!(id.gram().unwrap(), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

        let tilted = Basis3::new(v(-1, 2, 2), v(2, -1, 2), v(2, 2, -1)).unwrap();
        assert_eq!(tilted.gram().unwrap(), [[9, 0, 0], [0, 9, 0], [0, 0, 9]]);

        let five = Basis3::new(v(5, 0, 0), v(0, 3, 4), v(0, 4, -3)).unwrap();
        assert_eq!(five.gram().unwrap(), [[25, 0, 0], [0, 25, 0], [0, 0, 25]]);
    }

    #[test]
    fn primitive_part_examples() {
        assert_eq!(v(6, 0, 0).primitive_part().unwrap(), (6, v(1, 0, 0)));
        assert_eq!(v(5, 5, 2).primitive_part().unwrap(), (1, v(5, 5, 2)));
        assert_eq!(v(-2, 4, 6).primitive_part().unwrap(), (2, v(-1, 2, 3)));
        assert_eq!(IntVec3::ZERO.primitive_part(), Err(Error::ZeroVector));
    }

    #[test]
    fn hnf_examples() {
        let h = hnf_of_generators(&[v(5, 0, 0), v(0, 3, 4), v(0, 4, -3)]).unwrap();
        assert_eq!(*h.cols(), [v(5, 0, 0), v(0, 1, 18), v(0, 0, 25)]);
        assert_eq!(h.index(), 125);

        let id = hnf_of_generators(&[v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)]).unwrap();
        assert_eq!(*id.cols(), [v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)]);

        let redundant =
            hnf_of_generators(&[v(2, 0, 0), v(0, 2, 0), v(0, 0, 2), v(2, 2, 2)]).unwrap();
        assert_eq!(*redundant.cols(), [v(2, 0, 0), v(0, 2, 0), v(0, 0, 2)]);
    }

    #[test]
    fn hnf_rank_deficient() {
        let err = hnf_of_generators(&[v(1, 0, 0), v(2, 0, 0), v(-3, 0, 0)]).unwrap_err();
        assert_eq!(
            err,
            Error::RankDeficient {
                achieved: 1,
                required: 3
            }
        );
        let err = hnf_of_generators(&[v(1, 0, 0), v(0, 1, 0), v(1, 1, 0)]).unwrap_err();
        assert_eq!(
            err,
            Error::RankDeficient {
                achieved: 2,
                required: 3
            }
        );
    }

    #[test]
    fn coords_examples() {
        let tilted = Basis3::new(v(-1, 2, 2), v(2, -1, 2), v(2, 2, -1)).unwrap();
        assert_eq!(tilted.coords_of(v(5, 5, 2)).unwrap(), Some(v(1, 1, 2)));

        let id = Basis3::identity();
        assert_eq!(id.coords_of(v(7, -3, 0)).unwrap(), Some(v(7, -3, 0)));

        let three = Basis3::identity().scaled(3).unwrap();
        assert_eq!(three.coords_of(v(1, 0, 0)).unwrap(), None);
    }

    #[test]
    fn det_matches_triple_product() {
        let b = Basis3::new(v(3, 1, -2), v(0, 4, 5), v(7, 0, 1)).unwrap();
        assert_eq!(
            b.det(),
            b.col(0).cross(b.col(1)).unwrap().dot(b.col(2)).unwrap()
        );
    }

    #[test]
    fn max_square_divisor_examples() {
        assert_eq!(max_square_divisor(54).unwrap(), 3);
        assert_eq!(max_square_divisor(125).unwrap(), 5);
        assert_eq!(max_square_divisor(1).unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        let big = v(i128::MAX, 0, 0);
        assert_eq!(big.dot(big), Err(Error::Overflow));
        assert_eq!(big.cross(v(0, i128::MAX, 0)), Err(Error::Overflow));
    }

    #[test]
    fn json_forms() {
        let h = hnf_of_generators(&[v(5, 0, 0), v(0, 3, 4), v(0, 4, -3)]).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            "[[5,0,0],[0,1,18],[0,0,25]]"
        );
        assert_eq!(serde_json::to_string(&v(1, -2, 3)).unwrap(), "[1,-2,3]");
    }

    fn small_vec() -> impl Strategy<Value = IntVec3> {
        (-40i128..=40, -40i128..=40, -40i128..=40).prop_map(|(x, y, z)| IntVec3::new(x, y, z))
    }

    fn nonzero_vec() -> impl Strategy<Value = IntVec3> {
        small_vec().prop_filter("non-zero", |a| !a.is_zero())
    }

    proptest! {
        #[test]
        fn cross_is_orthogonal(a in small_vec(), b in small_vec()) {
            let c = a.cross(b).unwrap();
            prop_assert_eq!(c.dot(a).unwrap(), 0);
            prop_assert_eq!(c.dot(b).unwrap(), 0);
        }

        #[test]
        fn primitive_part_reconstructs(a in nonzero_vec()) {
            let (k, u) = a.primitive_part().unwrap();
            prop_assert!(k >= 1);
            prop_assert_eq!(u.coord_gcd().unwrap(), 1);
            prop_assert_eq!(u.scale(k).unwrap(), a);
        }

        #[test]
        fn coords_round_trip(
            c0 in small_vec(), c1 in small_vec(), c2 in small_vec(),
            x in (-9i128..=9, -9i128..=9, -9i128..=9),
        ) {
            prop_assume!(det3(c0, c1, c2).unwrap() != 0);
            let b = Basis3::new(c0, c1, c2).unwrap();
            let xv = IntVec3::new(x.0, x.1, x.2);
            let a = b.mul_vec(xv).unwrap();
            prop_assert_eq!(b.coords_of(a).unwrap(), Some(xv));
        }

        #[test]
        fn hnf_invariance(
            c0 in small_vec(), c1 in small_vec(), c2 in small_vec(),
            perm in 0usize..6, t in -3i128..=3,
        ) {
            prop_assume!(det3(c0, c1, c2).unwrap() != 0);
            let h = hnf_of_generators(&[c0, c1, c2]).unwrap();

            let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let cs = [c0, c1, c2];
            let p = orders[perm];
            let permuted = hnf_of_generators(&[cs[p[0]], cs[p[1]], cs[p[2]]]).unwrap();
            prop_assert_eq!(&h, &permuted);

            let negated = hnf_of_generators(&[c0.neg().unwrap(), c1, c2]).unwrap();
            prop_assert_eq!(&h, &negated);

            let sheared =
                hnf_of_generators(&[c0.add(c1.scale(t).unwrap()).unwrap(), c1, c2]).unwrap();
            prop_assert_eq!(&h, &sheared);

            let redundant = hnf_of_generators(&[c0, c1, c2, c0.add(c2).unwrap()]).unwrap();
            prop_assert_eq!(&h, &redundant);

            // idempotent
            let again = hnf_of_generators(h.cols()).unwrap();
            prop_assert_eq!(&h, &again);
        }

        #[test]
        #[allow(clippy::needless_range_loop)]
        fn hnf_shape(c0 in small_vec(), c1 in small_vec(), c2 in small_vec()) {
            prop_assume!(det3(c0, c1, c2).unwrap() != 0);
            let h = hnf_of_generators(&[c0, c1, c2]).unwrap();
            let b = h.cols();
            for i in 0..3 {
                for j in i + 1..3 {
                    prop_assert_eq!(b[j][i], 0);
                }
                prop_assert!(b[i][i] > 0);
                for j in 0..i {
                    prop_assert!(0 <= b[j][i] && b[j][i] < b[i][i]);
                }
            }
            prop_assert_eq!(h.index(), det3(c0, c1, c2).unwrap().abs());
        }
    }
}
