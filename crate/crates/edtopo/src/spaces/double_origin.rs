//! The power of the double origin space, with coordinates drawn from the
//! quasi-Polish product and atoms evaluated through its rational embedding.

use super::{OmegaHatValue, Seq};
use crate::coding::{decode_pair, decode_rational, decode_tuple, is_canonical_rational, Atom};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// A value in the second factor: the order `0 < 1 < ... < * < ... < ~1 < ~0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum P1Value {
    Fin(u64),
    Star,
    BarFin(u64),
}

impl fmt::Display for P1Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Value::Fin(m) => write!(f, "{m}"),
            P1Value::Star => write!(f, "*"),
            P1Value::BarFin(m) => write!(f, "~{m}"),
        }
    }
}

/// A coordinate value: a pair of the product, or the doubled origin. The
/// plain origin is the pair `(inf, *)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoValue {
    Pair(OmegaHatValue, P1Value),
    OriginStar,
}

impl DoValue {
    pub const ORIGIN: DoValue = DoValue::Pair(OmegaHatValue::Inf, P1Value::Star);

    pub fn is_origin(&self) -> bool {
        *self == DoValue::ORIGIN
    }

    pub fn is_origin_star(&self) -> bool {
        matches!(self, DoValue::OriginStar)
    }

    /// First coordinate under the embedding `n -> 2^-(n+1)`, `inf -> 0`
    /// (shifted by one so every value lands inside (-1,1)); the doubled
    /// origin merges to the plain origin.
    pub fn cx(&self) -> BigRational {
        match self {
            DoValue::OriginStar => BigRational::zero(),
            DoValue::Pair(x, _) => match x {
                OmegaHatValue::Fin(n) => pow2(*n),
                OmegaHatValue::Inf => BigRational::zero(),
            },
        }
    }

    /// Second coordinate under `m -> -2^-(m+1)`, `* -> 0`, `~m -> 2^-(m+1)`.
    pub fn cy(&self) -> BigRational {
        match self {
            DoValue::OriginStar => BigRational::zero(),
            DoValue::Pair(_, y) => match y {
                P1Value::Fin(m) => -pow2(*m),
                P1Value::Star => BigRational::zero(),
                P1Value::BarFin(m) => pow2(*m),
            },
        }
    }
}

fn pow2(n: u64) -> BigRational {
    crate::coding::pow2_neg(u32::try_from(n + 1).expect("coordinate index out of range"))
}

/// Atoms: `<n,0,p,q,r,s>` is the open box `p < cx < q, r < cy < s` minus
/// both origins; `<n,1,k,l>` is `|cx| < 1/k and 0 < cy < 1/l` together with
/// the plain origin; `<n,2,k,l>` is `|cx| < 1/k and -1/l < cy < 0` together
/// with the doubled origin. Box corners range over the rationals in
/// (-1,1); k and l are positive.
#[derive(Clone, Debug)]
pub struct DoubleOriginPower {
    pub seq: Seq<DoValue>,
}

impl DoubleOriginPower {
    pub fn new(seq: Seq<DoValue>) -> DoubleOriginPower {
        DoubleOriginPower { seq }
    }

    pub fn value(&self, n: u64) -> DoValue {
        self.seq.at(n)
    }

    fn value_at(&self, n: Atom) -> DoValue {
        self.seq.at_atom(n)
    }

    pub fn member(&self, a: Atom) -> bool {
        let (n, rest) = decode_pair(a);
        let (i, args) = decode_pair(rest);
        let v = self.value_at(n);
        match i {
            0 => {
                let t = decode_tuple(args, 4);
                let corners: Option<Vec<BigRational>> = t
                    .iter()
                    .map(|&c| {
                        let q = decode_rational(c).filter(|_| is_canonical_rational(c))?;
                        (q.abs() < BigRational::from_integer(1.into())).then_some(q)
                    })
                    .collect();
                let Some(c) = corners else { return false };
                if v.is_origin() || v.is_origin_star() {
                    return false;
                }
                c[0] < v.cx() && v.cx() < c[1] && c[2] < v.cy() && v.cy() < c[3]
            }
            1 | 2 => {
                let (k, l) = decode_pair(args);
                if k == 0 || l == 0 {
                    return false;
                }
                let (Ok(k), Ok(l)) = (u64::try_from(k), u64::try_from(l)) else {
                    // Arbitrarily fine constraints only hold at the origins.
                    return (i == 1 && v.is_origin()) || (i == 2 && v.is_origin_star());
                };
                if i == 1 && v.is_origin() {
                    return true;
                }
                if i == 2 && v.is_origin_star() {
                    return true;
                }
                let inv = |d: u64| BigRational::new(1.into(), d.into());
                let y_ok = if i == 1 {
                    v.cy() > BigRational::zero() && v.cy() < inv(l)
                } else {
                    v.cy() < BigRational::zero() && v.cy() > -inv(l)
                };
                v.cx().abs() < inv(k) && y_ok
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{encode_pair, encode_rational, encode_tuple, rat};

    fn atom_box(n: Atom, p: &BigRational, q: &BigRational, r: &BigRational, s: &BigRational) -> Atom {
        encode_pair(
            n,
            encode_pair(
                0,
                encode_tuple(&[
                    encode_rational(p),
                    encode_rational(q),
                    encode_rational(r),
                    encode_rational(s),
                ]),
            ),
        )
    }

    fn atom_origin(n: Atom, i: Atom, k: Atom, l: Atom) -> Atom {
        encode_pair(n, encode_pair(i, encode_pair(k, l)))
    }

    #[test]
    fn origins_and_boxes() {
        let origin = DoubleOriginPower::new(Seq::constant(DoValue::ORIGIN));
        let star = DoubleOriginPower::new(Seq::constant(DoValue::OriginStar));
        for k in 1..5 {
            for l in 1..5 {
                assert!(origin.member(atom_origin(0, 1, k, l)));
                assert!(!origin.member(atom_origin(0, 2, k, l)));
                assert!(star.member(atom_origin(0, 2, k, l)));
                assert!(!star.member(atom_origin(0, 1, k, l)));
            }
        }
        // No box contains either origin.
        let b = atom_box(0, &rat(-1, 2), &rat(1, 2), &rat(-1, 2), &rat(1, 2));
        assert!(!origin.member(b));
        assert!(!star.member(b));
    }

    #[test]
    fn ordinary_point() {
        // (2, ~1) embeds to (1/8, 1/4).
        let v = DoValue::Pair(OmegaHatValue::Fin(2), P1Value::BarFin(1));
        let x = DoubleOriginPower::new(Seq::constant(v));
        assert!(x.member(atom_box(0, &rat(0, 1), &rat(1, 2), &rat(0, 1), &rat(1, 2))));
        assert!(!x.member(atom_box(0, &rat(1, 3), &rat(1, 2), &rat(0, 1), &rat(1, 2))));
        // |1/8| < 1/1 and 0 < 1/4 < 1/1
        assert!(x.member(atom_origin(0, 1, 1, 1)));
        assert!(!x.member(atom_origin(0, 1, 1, 4)));
        assert!(!x.member(atom_origin(0, 1, 8, 1)));
        assert!(!x.member(atom_origin(0, 2, 1, 1)));
    }
}
