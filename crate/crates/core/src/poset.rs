//! Inclusion order on cubic sublattices: comparisons, the divisor-indexed
//! family of cubic sublattices over a primitive vector, and bounded searches
//! for minimal upper and maximal lower bounds (which demonstrate that joins
//! and meets need not exist).

use std::collections::BTreeMap;

use crate::arith;
use crate::cubic::{enumerate_cubic_edge, gamma, CubicLattice, MAX_ENUM_BOUND};
use crate::error::{Error, Result};
use crate::int3::{max_square_divisor, Basis3, IntVec3};

/// Sublattice inclusion: true iff every column of `l1` has integer
/// coordinates in `l2`.
pub fn lattice_leq(l1: &Basis3, l2: &Basis3) -> Result<bool> {
    for i in 0..3 {
        if !l2.contains(l1.col(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cubic_leq(l1: &CubicLattice, l2: &CubicLattice) -> Result<bool> {
    lattice_leq(l1.hnf().basis(), l2.hnf().basis())
}

/// All cubic sublattices containing a given primitive vector, indexed by
/// edge length. The admissible edges are exactly the divisors of
/// `d_max = max_square_divisor(‖v‖²)`, and inclusion mirrors divisibility:
/// `member(a) ⊇ member(b)` iff `a | b`.
#[derive(Clone, Debug)]
pub struct CubicFamily {
    v: IntVec3,
    d_max: i128,
    members: BTreeMap<i128, CubicLattice>,
}

impl CubicFamily {
    pub fn v(&self) -> IntVec3 {
        self.v
    }

    pub fn d_max(&self) -> i128 {
        self.d_max
    }

    pub fn members(&self) -> &BTreeMap<i128, CubicLattice> {
        &self.members
    }

    pub fn member(&self, d: i128) -> Option<&CubicLattice> {
        self.members.get(&d)
    }
}

/// Builds the divisor-indexed family `{gamma(v, d') : d' | d_max}` for a
/// primitive `v` and verifies the inclusion/divisibility correspondence.
pub fn divisor_family(v: IntVec3) -> Result<CubicFamily> {
    if !v.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    let d_max = max_square_divisor(v.norm_sq()?)?;
    let mut members = BTreeMap::new();
    for d in arith::divisors(d_max)? {
        members.insert(d, gamma(v, d)?);
    }
    for (a, la) in &members {
        for (b, lb) in &members {
            let included = cubic_leq(lb, la)?;
            assert_eq!(
                included,
                b % a == 0,
                "family inclusion must mirror divisibility ({a}, {b})"
            );
        }
    }
    Ok(CubicFamily { v, d_max, members })
}

fn enumerate_up_to(bound: i128) -> Result<Vec<CubicLattice>> {
    if bound < 1 {
        return Err(Error::NonPositive);
    }
    if bound > MAX_ENUM_BOUND {
        return Err(Error::BoundExceeded {
            edge: bound,
            bound: MAX_ENUM_BOUND,
        });
    }
    let mut all = Vec::new();
    for e in 1..=bound {
        all.extend(enumerate_cubic_edge(e)?);
    }
    Ok(all)
}

/// Inclusion-minimal cubic sublattices of edge ≤ `edge_bound` containing
/// both inputs. A join of the two exists within the bound exactly when the
/// result is a single lattice.
pub fn minimal_cubic_over(
    l1: &CubicLattice,
    l2: &CubicLattice,
    edge_bound: i128,
) -> Result<Vec<CubicLattice>> {
    let mut uppers = Vec::new();
    for cand in enumerate_up_to(edge_bound)? {
        if cubic_leq(l1, &cand)? && cubic_leq(l2, &cand)? {
            uppers.push(cand);
        }
    }
    let mut minimal = Vec::new();
    'outer: for cand in &uppers {
        for other in &uppers {
            if other.hnf() != cand.hnf() && cubic_leq(other, cand)? {
                continue 'outer;
            }
        }
        minimal.push(cand.clone());
    }
    Ok(minimal)
}

/// Dual of [`minimal_cubic_over`]: inclusion-maximal cubic sublattices of
/// edge ≤ `edge_bound` contained in both inputs. A meet exists within the
/// bound exactly when the result is a single lattice.
pub fn maximal_cubic_under(
    l1: &CubicLattice,
    l2: &CubicLattice,
    edge_bound: i128,
) -> Result<Vec<CubicLattice>> {
    let mut lowers = Vec::new();
    for cand in enumerate_up_to(edge_bound)? {
        if cubic_leq(&cand, l1)? && cubic_leq(&cand, l2)? {
            lowers.push(cand);
        }
    }
    let mut maximal = Vec::new();
    'outer: for cand in &lowers {
        for other in &lowers {
            if other.hnf() != cand.hnf() && cubic_leq(cand, other)? {
                continue 'outer;
            }
        }
        maximal.push(cand.clone());
    }
    Ok(maximal)
}
