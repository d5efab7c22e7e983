//! Brute-force cross checks of the constructions against their defining
//! divisibility tests. The CLI `verify` subcommand runs everything here and
//! reports one line per suite; each check pits an implementation against an
//! independent definitional route (box scans, exhaustive enumeration),
//! never against itself.

use crate::arith;
use crate::cubic::{enumerate_cubic_containing, gamma, gamma_contains_def, MAX_ENUM_BOUND};
use crate::error::Result;
use crate::int3::IntVec3;
use crate::numtheory::{prime_vector, scale_down, scale_up};
use crate::perp::{cross_preimage, perp_basis, perp_sublattice};

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

// Primitive vectors with squared norm in [1, max_norm_sq], ascending lex.
fn primitive_vectors(max_norm_sq: i128) -> Result<Vec<IntVec3>> {
    let r = arith::isqrt(max_norm_sq);
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            for z in -r..=r {
                let v = IntVec3::new(x, y, z);
                if v.is_zero() || v.norm_sq()? > max_norm_sq {
                    continue;
                }
                if v.coord_gcd()? == 1 {
                    out.push(v);
                }
            }
        }
    }
    Ok(out)
}

// Admissible pairs (v, d) with d ≥ 2, d² | ‖v‖², d ≤ max_d; when `thin` is
// set, at most that many vectors are kept per (d, ‖v‖²) class so the cubic
// box scans stay affordable.
fn admissible_pairs(
    max_norm_sq: i128,
    max_d: i128,
    thin: Option<usize>,
) -> Result<Vec<(IntVec3, i128)>> {
    let mut out = Vec::new();
    let mut class_count: std::collections::BTreeMap<(i128, i128), usize> = Default::default();
    for v in primitive_vectors(max_norm_sq)? {
        let n = v.norm_sq()?;
        for d in 2..=max_d {
            if n % (d * d) != 0 {
                continue;
            }
            if let Some(limit) = thin {
                let c = class_count.entry((d, n)).or_insert(0);
                if *c >= limit {
                    continue;
                }
                *c += 1;
            }
            out.push((v, d));
        }
    }
    Ok(out)
}

fn check(name: &'static str, cases: u64, failure: Option<String>) -> CheckResult {
    CheckResult {
        name,
        passed: failure.is_none(),
        cases,
        detail: failure,
    }
}

fn perp_basis_suite(max_norm_sq: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    'all: for v in primitive_vectors(max_norm_sq.min(60))? {
        let p = perp_basis(v)?;
        let (b1, b2) = p.basis();
        if b1.dot(v)? != 0 || b2.dot(v)? != 0 || b1.cross(b2)? != v {
            failure = Some(format!("basis properties fail for {v}"));
            break;
        }
        // every orthogonal vector in a small box must be spanned
        let r = 4;
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    let a = IntVec3::new(x, y, z);
                    cases += 1;
                    if a.dot(v)? == 0 && !p.contains(a)? {
                        failure = Some(format!("{a} orthogonal to {v} but not spanned"));
                        break 'all;
                    }
                }
            }
        }
    }
    Ok(check(
        "perp basis spans the orthogonal lattice",
        cases,
        failure,
    ))
}

fn preimage_suite(max_norm_sq: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    'all: for v in primitive_vectors(max_norm_sq.min(100))? {
        let p = perp_basis(v)?;
        for c1 in -3i128..=3 {
            for c2 in -3i128..=3 {
                let m = p.member([c1, c2])?;
                let w = cross_preimage(v, m)?;
                cases += 1;
                if w.cross(v)? != m {
                    failure = Some(format!("preimage of {m} under {v} broken"));
                    break 'all;
                }
            }
        }
    }
    Ok(check("cross preimage round trip", cases, failure))
}

fn perp_sublattice_suite(max_norm_sq: i128, max_d: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    'all: for (v, d) in admissible_pairs(max_norm_sq, max_d, Some(4))? {
        let m = perp_sublattice(v, d)?;
        if m.index_in_perp() != d {
            failure = Some(format!("index of plane sublattice for {v}, d={d}"));
            break;
        }
        let r = 3 * d;
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    let a = IntVec3::new(x, y, z);
                    cases += 1;
                    if m.contains_def(a)? != m.contains(a)? {
                        failure = Some(format!("plane membership mismatch at {a}, v={v}, d={d}"));
                        break 'all;
                    }
                }
            }
        }
    }
    Ok(check(
        "plane sublattice membership and index",
        cases,
        failure,
    ))
}

fn gamma_index_suite(max_norm_sq: i128, max_d: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    for (v, d) in admissible_pairs(max_norm_sq, max_d, None)? {
        let g = gamma(v, d)?;
        cases += 1;
        if g.hnf().index() != d * d * d {
            failure = Some(format!("index of gamma({v}, {d})"));
            break;
        }
        if !g.contains(v)? {
            failure = Some(format!("gamma({v}, {d}) misses v"));
            break;
        }
    }
    Ok(check("gamma index law d³", cases, failure))
}

fn gamma_membership_suite(max_norm_sq: i128, max_d: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    'all: for (v, d) in admissible_pairs(max_norm_sq, max_d, Some(4))? {
        let g = gamma(v, d)?;
        let r = d * d;
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    let a = IntVec3::new(x, y, z);
                    cases += 1;
                    if g.contains(a)? != gamma_contains_def(v, d, a)? {
                        failure = Some(format!("membership mismatch at {a}, v={v}, d={d}"));
                        break 'all;
                    }
                }
            }
        }
    }
    Ok(check(
        "gamma membership matches divisibility test",
        cases,
        failure,
    ))
}

fn divisibility_laws_suite(max_norm_sq: i128, max_d: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    'all: for (v, d) in admissible_pairs(max_norm_sq, max_d, Some(6))? {
        let g = gamma(v, d)?;
        let cols = g.hnf().cols();
        let mut members = Vec::new();
        for i in -2i128..=2 {
            for j in -2i128..=2 {
                for l in -2i128..=2 {
                    members.push(
                        cols[0]
                            .scale(i)?
                            .add(cols[1].scale(j)?)?
                            .add(cols[2].scale(l)?)?,
                    );
                }
            }
        }
        for (ai, &a) in members.iter().enumerate().step_by(5) {
            if a.dot(v)? % (d * d) != 0 {
                failure = Some(format!("d² ∤ a·v for a={a}, v={v}, d={d}"));
                break 'all;
            }
            for &b in members.iter().skip(ai % 3).step_by(7) {
                cases += 1;
                if a.dot(b)? % (d * d) != 0 {
                    failure = Some(format!("d² ∤ a·b for v={v}, d={d}"));
                    break 'all;
                }
                let Some(c) = a.cross(b)?.div_exact(d) else {
                    failure = Some(format!("d ∤ a×b for v={v}, d={d}"));
                    break 'all;
                };
                if !g.contains(c)? {
                    failure = Some(format!("a×b/d escapes gamma({v}, {d})"));
                    break 'all;
                }
            }
        }
    }
    Ok(check("member dot/cross divisibility laws", cases, failure))
}

fn uniqueness_suite(max_norm_sq: i128, max_d: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    let bound = max_d.min(7).min(MAX_ENUM_BOUND);
    for (v, d) in admissible_pairs(max_norm_sq, bound, Some(3))? {
        let found = enumerate_cubic_containing(v, d, bound)?;
        cases += 1;
        if found.len() != 1 || found[0].hnf() != gamma(v, d)?.hnf() {
            failure = Some(format!("uniqueness fails for {v}, d={d}"));
            break;
        }
    }
    Ok(check("primitive uniqueness by enumeration", cases, failure))
}

fn ambient_scale_suite(max_norm_sq: i128, max_d: i128) -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    'all: for (v, d) in admissible_pairs(max_norm_sq, max_d, Some(8))? {
        let g = gamma(v, d)?;
        for i in 0..3 {
            cases += 1;
            if !g.contains(IntVec3::axis(i).scale(d * d)?)? {
                failure = Some(format!("d²·e{i} outside gamma({v}, {d})"));
                break 'all;
            }
        }
    }
    Ok(check(
        "d²-scaled ambient vectors are members",
        cases,
        failure,
    ))
}

fn prime_vector_suite() -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    for p in (3i128..200).filter(|&p| arith::is_prime(p)) {
        let w = prime_vector(p)?;
        cases += 1;
        if !(w.is_primitive()? && w.norm_sq()? % (p * p) == 0) {
            failure = Some(format!("prime vector for p={p}"));
            break;
        }
    }
    Ok(check("prime vectors for odd p < 200", cases, failure))
}

fn scale_round_trip_suite() -> Result<CheckResult> {
    let mut cases = 0u64;
    let mut failure = None;
    let vs = [
        IntVec3::new(1, 0, 0),
        IntVec3::new(1, 1, 1),
        IntVec3::new(1, 2, 2),
        IntVec3::new(3, 4, 12),
    ];
    'all: for v in vs {
        for d in [1i128, 3, 5, 9] {
            let up = scale_up(v, d)?;
            let down = scale_down(up, d)?;
            cases += 1;
            let mut a = [down.x.abs(), down.y.abs(), down.z.abs()];
            let mut b = [v.x.abs(), v.y.abs(), v.z.abs()];
            a.sort_unstable();
            b.sort_unstable();
            if a != b || up.norm_sq()? != d * d * v.norm_sq()? {
                failure = Some(format!("round trip fails for {v}, d={d}"));
                break 'all;
            }
        }
    }
    Ok(check("scale up/down round trip", cases, failure))
}

/// Runs every suite. `max_norm_sq` bounds `‖v‖²` in the sweeps and `max_d`
/// bounds the edge length; box scans thin the vector classes deterministically
/// to keep the run affordable.
pub fn run_all(max_norm_sq: i128, max_d: i128) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    report.checks.push(perp_basis_suite(max_norm_sq)?);
    report.checks.push(preimage_suite(max_norm_sq)?);
    report
        .checks
        .push(perp_sublattice_suite(max_norm_sq, max_d)?);
    report.checks.push(gamma_index_suite(max_norm_sq, max_d)?);
    report
        .checks
        .push(gamma_membership_suite(max_norm_sq, max_d)?);
    report
        .checks
        .push(divisibility_laws_suite(max_norm_sq, max_d)?);
    report.checks.push(uniqueness_suite(max_norm_sq, max_d)?);
    report.checks.push(ambient_scale_suite(max_norm_sq, max_d)?);
    report.checks.push(prime_vector_suite()?);
    report.checks.push(scale_round_trip_suite()?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = run_all(60, 3).unwrap();
        assert!(!report.checks.is_empty());
        for c in &report.checks {
            assert!(c.passed, "{}: {:?}", c.name, c.detail);
        }
    }
}
