//! Bit-exact atom codings shared by every module.
//!
//! Structured atoms (pairs, tuples, strings, finite sets, rationals) are
//! always encoded through the functions here, never ad hoc, so that wire
//! files produced by one module can be decoded by any other.
//!
//! Atoms are plain naturals. The artifact represents them as 128-bit
//! integers; deeply nested codes beyond that range cannot be materialized
//! and the checked fragment of every enumeration stays far below it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Atoms are plain naturals.
pub type Atom = u128;

/// Cantor pairing: `<a,b> = (a+b)(a+b+1)/2 + b`.
pub fn encode_pair(a: Atom, b: Atom) -> Atom {
    checked_pair(a, b).expect("pair code exceeds the 128-bit atom range")
}

/// Cantor pairing with an explicit overflow check; emission paths drop
/// atoms that do not fit the atom range.
pub fn checked_pair(a: Atom, b: Atom) -> Option<Atom> {
    let s = a.checked_add(b)?;
    let prod = s.checked_mul(s.checked_add(1)?)?;
    (prod / 2).checked_add(b)
}

/// Inverse of [`encode_pair`]; total on all naturals.
pub fn decode_pair(code: Atom) -> (Atom, Atom) {
    let s = triangular_root(code);
    let b = code - s * (s + 1) / 2;
    let a = s - b;
    (a, b)
}

/// Largest s with s(s+1)/2 <= code.
fn triangular_root(code: Atom) -> Atom {
    let mut s = approx_triangular_root(code);
    while s > 0 && s * (s + 1) / 2 > code {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 2).map(|p| p / 2 <= code) == Some(true) {
        s += 1;
    }
    s
}

fn approx_triangular_root(code: Atom) -> Atom {
    let f = (8.0 * code as f64 + 1.0).sqrt();
    if !f.is_finite() {
        return 0;
    }
    let est = ((f - 1.0) / 2.0).max(0.0);
    if est >= u128::MAX as f64 {
        (1u128 << 64) as Atom
    } else {
        est as Atom
    }
}

/// Right-nested triple `<a,b,c> = <a,<b,c>>`.
pub fn encode_triple(a: Atom, b: Atom, c: Atom) -> Atom {
    encode_pair(a, encode_pair(b, c))
}

pub fn decode_triple(code: Atom) -> (Atom, Atom, Atom) {
    let (a, bc) = decode_pair(code);
    let (b, c) = decode_pair(bc);
    (a, b, c)
}

/// Right-nested k-tuple; `encode_tuple(&[a]) = a` and
/// `encode_tuple(&[a,b,..]) = <a, encode_tuple(&[b,..])>`.
pub fn encode_tuple(parts: &[Atom]) -> Atom {
    checked_tuple(parts).expect("tuple code exceeds the 128-bit atom range")
}

pub fn checked_tuple(parts: &[Atom]) -> Option<Atom> {
    match parts {
        [] => panic!("empty tuple has no code"),
        [a] => Some(*a),
        [a, rest @ ..] => checked_pair(*a, checked_tuple(rest)?),
    }
}

/// Splits a code into a k-tuple (k >= 1 fixed by the caller).
pub fn decode_tuple(code: Atom, k: usize) -> Vec<Atom> {
    assert!(k >= 1);
    let mut out = Vec::with_capacity(k);
    let mut rest = code;
    for _ in 0..k - 1 {
        let (a, r) = decode_pair(rest);
        out.push(a);
        rest = r;
    }
    out.push(rest);
    out
}

/// Canonical code of a finite set: `D -> sum of 2^i for i in D`.
pub fn encode_finset(d: &[Atom]) -> Atom {
    let mut code: Atom = 0;
    for &i in d {
        assert!(i < 127, "finite-set element too large for the canonical index");
        code |= 1u128 << i;
    }
    code
}

/// Elements of the `e`-th finite set, in increasing order.
pub fn decode_finset(mut e: Atom) -> Vec<Atom> {
    let mut out = Vec::new();
    let mut i = 0;
    while e > 0 {
        if e & 1 == 1 {
            out.push(i);
        }
        e >>= 1;
        i += 1;
    }
    out
}

/// String coding: `code(<>) = 0`, `code(s + a) = <code(s), a> + 1`.
/// A bijection between finite sequences of naturals and naturals.
pub fn encode_string(s: &[Atom]) -> Atom {
    checked_string(s).expect("string code exceeds the 128-bit atom range")
}

pub fn checked_string(s: &[Atom]) -> Option<Atom> {
    let mut code = 0;
    for &a in s {
        code = checked_pair(code, a)?.checked_add(1)?;
    }
    Some(code)
}

pub fn decode_string(mut code: Atom) -> Vec<Atom> {
    let mut rev = Vec::new();
    while code > 0 {
        let (prefix, a) = decode_pair(code - 1);
        rev.push(a);
        code = prefix;
    }
    rev.reverse();
    rev
}

/// zigzag(n) = 2n for n >= 0 and -2n-1 for n < 0.
pub fn zigzag(n: i64) -> Atom {
    if n >= 0 {
        2 * n as Atom
    } else {
        (-2 * (n as i128) - 1) as Atom
    }
}

pub fn unzigzag(z: Atom) -> Option<i64> {
    if z % 2 == 0 {
        (z / 2).to_i64()
    } else {
        ((z + 1) / 2).to_i64().map(|v| -v)
    }
}

/// Rational coding: `q -> <zigzag(num), den-1>` with q in lowest terms, den > 0.
pub fn encode_rational(q: &BigRational) -> Atom {
    let num = q.numer().to_i64().expect("rational numerator out of range");
    let den = q
        .denom()
        .to_u128()
        .expect("rational denominator out of range");
    debug_assert!(den > 0);
    encode_pair(zigzag(num), den - 1)
}

/// Decodes any natural as a rational; codes not in lowest terms decode to
/// their reduced value and are not canonical.
pub fn decode_rational(code: Atom) -> Option<BigRational> {
    let (zn, d) = decode_pair(code);
    let num = unzigzag(zn)?;
    let den = d.checked_add(1)?;
    Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// True when `a` is the canonical code of a rational in lowest terms.
pub fn is_canonical_rational(a: Atom) -> bool {
    let (zn, d) = decode_pair(a);
    match unzigzag(zn) {
        Some(num) => num_integer::gcd(num.unsigned_abs() as u128, d + 1) == 1,
        None => false,
    }
}

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact `2^-e` as a rational.
pub fn pow2_neg(e: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2u8).pow(e))
}

pub fn rational_abs(q: &BigRational) -> BigRational {
    q.abs()
}

pub fn rational_is_zero(q: &BigRational) -> bool {
    q.is_zero()
}

/// Turing join on atoms: element `n` of the left part becomes `2n`, of the
/// right part `2n+1`.
pub fn join_left(n: Atom) -> Atom {
    2 * n
}

pub fn join_right(n: Atom) -> Atom {
    2 * n + 1
}

/// Splits a join atom into (side, element); side 0 is left.
pub fn join_split(a: Atom) -> (u8, Atom) {
    ((a % 2) as u8, a / 2)
}

/// k-ary interleaved join: element `m` of part `i` (i < k) becomes `k*m + i`.
/// Written joins `A0 + A1 + ... + Ak-1` throughout the crate use this
/// convention, so a binary join agrees with [`join_left`]/[`join_right`].
pub fn joink(k: Atom, part: Atom, m: Atom) -> Atom {
    debug_assert!(part < k);
    k * m + part
}

/// Splits a k-ary join atom into (part, element).
pub fn joink_split(k: Atom, a: Atom) -> (Atom, Atom) {
    (a % k, a / k)
}

/// Countable join over a family: element `m` of part `i` becomes `<i,m>`.
pub fn join_family(i: Atom, m: Atom) -> Atom {
    encode_pair(i, m)
}

pub fn join_family_split(a: Atom) -> (Atom, Atom) {
    decode_pair(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_examples() {
        assert_eq!(encode_pair(0, 0), 0);
        assert_eq!(encode_pair(1, 0), 1);
        assert_eq!(encode_pair(0, 1), 2);
    }

    #[test]
    fn pair_round_trip_exhaustive() {
        for code in 0..10_000 {
            let (a, b) = decode_pair(code);
            assert_eq!(encode_pair(a, b), code);
        }
    }

    #[test]
    fn pair_round_trip_large() {
        for shift in [40u32, 70, 100, 120] {
            let code = 1u128 << shift;
            let (a, b) = decode_pair(code);
            assert_eq!(encode_pair(a, b), code);
        }
        assert!(checked_pair(u128::MAX / 2, u128::MAX / 2).is_none());
    }

    #[test]
    fn string_round_trip_exhaustive() {
        for code in 0..10_000 {
            let s = decode_string(code);
            assert_eq!(encode_string(&s), code);
        }
        assert_eq!(encode_string(&[]), 0);
    }

    #[test]
    fn finset_round_trip_exhaustive() {
        for code in 0..10_000 {
            let d = decode_finset(code);
            assert_eq!(encode_finset(&d), code);
        }
    }

    #[test]
    fn rational_round_trip_exhaustive() {
        for code in 0..10_000 {
            if is_canonical_rational(code) {
                let q = decode_rational(code).unwrap();
                assert_eq!(encode_rational(&q), code);
            }
        }
        assert_eq!(
            decode_rational(encode_rational(&rat(-3, 7))).unwrap(),
            rat(-3, 7)
        );
    }

    #[test]
    fn tuple_nesting() {
        let code = encode_tuple(&[3, 1, 4, 1, 5]);
        assert_eq!(decode_tuple(code, 5), vec![3, 1, 4, 1, 5]);
        assert_eq!(encode_tuple(&[1, 2, 3]), encode_pair(1, encode_pair(2, 3)));
    }

    #[test]
    fn zigzag_round_trip() {
        for n in -100..100 {
            assert_eq!(unzigzag(zigzag(n)), Some(n));
        }
        assert_eq!(zigzag(0), 0);
        assert_eq!(zigzag(-1), 1);
        assert_eq!(zigzag(1), 2);
    }
}
