//! Scalar integer helpers: checked arithmetic, gcd machinery, integer roots
//! and small trial-division factoring. Everything is exact; nothing here
//! allocates except the factor lists.

use crate::error::{Error, Result};

pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn neg(a: i128) -> Result<i128> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// Non-negative gcd over unsigned magnitudes, so `i128::MIN` cannot trap.
pub(crate) fn gcd_u(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd(a: i128, b: i128) -> Result<i128> {
    i128::try_from(gcd_u(a.unsigned_abs(), b.unsigned_abs())).map_err(|_| Error::Overflow)
}

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
pub(crate) fn ext_gcd(a: i128, b: i128) -> Result<(i128, i128, i128)> {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r2 = sub(r0, mul(q, r1)?)?;
        let x2 = sub(x0, mul(q, x1)?)?;
        let y2 = sub(y0, mul(q, y1)?)?;
        r0 = r1;
        r1 = r2;
        x0 = x1;
        x1 = x2;
        y0 = y1;
        y1 = y2;
    }
    if r0 < 0 {
        Ok((neg(r0)?, neg(x0)?, neg(y0)?))
    } else {
        Ok((r0, x0, y0))
    }
}

/// Floor square root of a non-negative integer.
pub(crate) fn isqrt(n: i128) -> i128 {
    debug_assert!(n >= 0);
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as i128;
    // fix up the float seed; at most a couple of steps
    while x > 0 && x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}

pub(crate) fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Floor cube root of a non-negative integer.
pub(crate) fn icbrt(n: i128) -> i128 {
    debug_assert!(n >= 0);
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).cbrt() as i128;
    while x > 0 && x.saturating_mul(x).saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}

pub(crate) fn exact_cbrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = icbrt(n);
    (r * r * r == n).then_some(r)
}

/// Trial-division primality check. Intended for desk-scale inputs.
pub(crate) fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut p = 5i128;
    while p * p <= n {
        if n % p == 0 || n % (p + 2) == 0 {
            return false;
        }
        p += 6;
    }
    true
}

/// Prime factorisation by trial division, ascending, with multiplicities.
pub(crate) fn factorize(mut n: i128) -> Result<Vec<(i128, u32)>> {
    if n < 1 {
        return Err(Error::NonPositive);
    }
    let mut out = Vec::new();
    let mut p = 2i128;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// All positive divisors of `n`, ascending.
pub(crate) fn divisors(n: i128) -> Result<Vec<i128>> {
    let mut out = vec![1i128];
    for (p, e) in factorize(n)? {
        let prev = out.clone();
        let mut pk = 1i128;
        for _ in 0..e {
            pk = mul(pk, p)?;
            for d in &prev {
                out.push(mul(*d, pk)?);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Largest `d` with `d² | n`; the cofactor `n / d²` is square-free.
///
/// Trial division runs only up to the cube root of `n`; whatever remains has
/// at most two prime factors, so its square part is visible to `exact_sqrt`.
pub(crate) fn max_square_divisor(n: i128) -> Result<i128> {
    if n < 1 {
        return Err(Error::NonPositive);
    }
    let mut m = n;
    let mut d = 1i128;
    let mut p = 2i128;
    while p * p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            for _ in 0..e / 2 {
                d = mul(d, p)?;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(r) = exact_sqrt(m) {
        if m > 1 {
            d = mul(d, r)?;
        }
    }
    Ok(d)
}

/// Product of the distinct primes of `n` that do not divide `m`.
///
/// The `m`-part of `n` is stripped with gcd steps; the leftover is factored
/// only up to its cube root, which determines its radical exactly because at
/// most two primes can survive.
pub(crate) fn radical_coprime_to(n: i128, m: i128) -> Result<i128> {
    let mut x = n.unsigned_abs();
    if x == 0 {
        return Err(Error::ZeroVector);
    }
    let mu = m.unsigned_abs();
    if mu > 1 {
        loop {
            let g = gcd_u(x, mu);
            if g == 1 {
                break;
            }
            x /= g;
        }
    }
    let mut x = i128::try_from(x).map_err(|_| Error::Overflow)?;
    let mut rad = 1i128;
    let mut p = 2i128;
    while p * p * p <= x {
        if x % p == 0 {
            rad = mul(rad, p)?;
            while x % p == 0 {
                x /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if x > 1 {
        match exact_sqrt(x) {
            Some(r) => rad = mul(rad, r)?,
            None => rad = mul(rad, x)?, // prime, or two distinct primes
        }
    }
    Ok(rad)
}

pub(crate) fn mul_mod(a: i128, b: i128, m: i128) -> i128 {
    debug_assert!(m > 0 && m < (1i128 << 62));
    (a.rem_euclid(m) * b.rem_euclid(m)).rem_euclid(m)
}

pub(crate) fn pow_mod(mut base: i128, mut exp: i128, m: i128) -> i128 {
    debug_assert!(exp >= 0);
    let mut acc = 1i128.rem_euclid(m);
    base = base.rem_euclid(m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
