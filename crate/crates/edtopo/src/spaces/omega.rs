//! Powers of the one-point compactification, the cofinite power, and the
//! cocylinder space.

use super::Seq;
use crate::coding::{decode_finset, decode_string, decode_tuple, Atom};
use std::fmt;

/// A value in `omega` extended with a top point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaHatValue {
    Fin(u64),
    Inf,
}

impl OmegaHatValue {
    pub fn at_least(&self, k: Atom) -> bool {
        match self {
            OmegaHatValue::Fin(m) => *m as Atom >= k,
            OmegaHatValue::Inf => true,
        }
    }

    pub fn equals(&self, k: Atom) -> bool {
        matches!(self, OmegaHatValue::Fin(m) if *m as Atom == k)
    }
}

impl fmt::Display for OmegaHatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaHatValue::Fin(m) => write!(f, "{m}"),
            OmegaHatValue::Inf => write!(f, "inf"),
        }
    }
}

/// A point of the power of the one-point compactification. Atoms
/// `<0,n,k>` assert `x(n) = k` and `<1,n,k>` assert `x(n) >= k`.
#[derive(Clone, Debug)]
pub struct OmegaHatPower {
    pub seq: Seq<OmegaHatValue>,
}

impl OmegaHatPower {
    pub fn new(seq: Seq<OmegaHatValue>) -> OmegaHatPower {
        OmegaHatPower { seq }
    }

    pub fn value(&self, n: u64) -> OmegaHatValue {
        self.seq.at(n)
    }

    pub fn member(&self, a: Atom) -> bool {
        let t = decode_tuple(a, 3);
        let (i, n, k) = (t[0], t[1], t[2]);
        let v = self.seq.at_atom(n);
        match i {
            0 => v.equals(k),
            1 => v.at_least(k),
            _ => false,
        }
    }
}

/// A point of the cofinite power: a total function on the naturals. Atoms
/// `<n,e>` assert that `x(n)` avoids the e-th finite set.
#[derive(Clone, Debug)]
pub struct CofinitePower {
    pub seq: Seq<u64>,
}

impl CofinitePower {
    pub fn new(seq: Seq<u64>) -> CofinitePower {
        CofinitePower { seq }
    }

    pub fn value(&self, n: u64) -> u64 {
        self.seq.at(n)
    }

    pub fn member(&self, a: Atom) -> bool {
        let (n, e) = crate::coding::decode_pair(a);
        let v = self.seq.at_atom(n) as Atom;
        !decode_finset(e).contains(&v)
    }
}

/// A point of the cocylinder space: the neighborhood filter consists of
/// the codes of strings that are not initial segments of the point.
#[derive(Clone, Debug)]
pub struct CocylinderPoint {
    pub seq: Seq<u64>,
}

impl CocylinderPoint {
    pub fn new(seq: Seq<u64>) -> CocylinderPoint {
        CocylinderPoint { seq }
    }

    pub fn value(&self, n: u64) -> u64 {
        self.seq.at(n)
    }

    pub fn is_prefix(&self, sigma: &[Atom]) -> bool {
        sigma
            .iter()
            .enumerate()
            .all(|(i, &a)| self.value(i as u64) as Atom == a)
    }

    pub fn member(&self, a: Atom) -> bool {
        !self.is_prefix(&decode_string(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{encode_finset, encode_pair, encode_string, encode_tuple};

    #[test]
    fn omega_hat_infinite_coordinate() {
        let x = OmegaHatPower::new(Seq::constant(OmegaHatValue::Inf));
        for k in 0..30 {
            assert!(x.member(encode_tuple(&[1, 0, k])));
            assert!(!x.member(encode_tuple(&[0, 0, k])));
        }
    }

    #[test]
    fn cofinite_member() {
        let x = CofinitePower::new(Seq::constant(3));
        assert!(x.member(encode_pair(0, encode_finset(&[1, 2]))));
        assert!(!x.member(encode_pair(0, encode_finset(&[1, 3]))));
        assert!(x.member(encode_pair(0, 0)));
    }

    #[test]
    fn cocylinder_member() {
        let x = CocylinderPoint::new(Seq::constant(0));
        assert!(x.member(encode_string(&[1])));
        assert!(!x.member(encode_string(&[0])));
        assert!(!x.member(encode_string(&[])));
        assert!(!x.member(encode_string(&[0, 0, 0])));
        assert!(x.member(encode_string(&[0, 0, 1])));
    }
}
