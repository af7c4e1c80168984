//! The power of the irregular lattice space.

use super::{OmegaHatValue, Seq};
use crate::coding::{decode_tuple, Atom};
use std::fmt;

/// A lattice point: a pair in `omega x omega-hat`, or the extra point at
/// `(inf, inf)`. Pairs `(inf, d)` with `d` finite do not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrrValue {
    Pair(u64, OmegaHatValue),
    InfInf,
}

impl fmt::Display for IrrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrValue::Pair(a, d) => write!(f, "({a}, {d})"),
            IrrValue::InfInf => write!(f, "(inf, inf)"),
        }
    }
}

/// Atoms `<i,n,a,b>`: `i = 0` asserts `x(n) = a` and `y(n) = b`; `i = 1`
/// asserts `x(n) = a` and `y(n) >= b`; `i = 2` asserts that the coordinate
/// is the extra point or `a <= x(n)` and `b <= y(n) < inf`.
#[derive(Clone, Debug)]
pub struct IrrLatticePower {
    pub seq: Seq<IrrValue>,
}

impl IrrLatticePower {
    pub fn new(seq: Seq<IrrValue>) -> IrrLatticePower {
        IrrLatticePower { seq }
    }

    pub fn value(&self, n: u64) -> IrrValue {
        self.seq.at(n)
    }

    pub fn member(&self, atom: Atom) -> bool {
        let t = decode_tuple(atom, 4);
        let (i, n, a, b) = (t[0], t[1], t[2], t[3]);
        let v = self.seq.at_atom(n);
        match (i, v) {
            (0, IrrValue::Pair(c, OmegaHatValue::Fin(d))) => c as Atom == a && d as Atom == b,
            (0, _) => false,
            (1, IrrValue::Pair(c, d)) => c as Atom == a && d.at_least(b),
            (1, IrrValue::InfInf) => false,
            (2, IrrValue::InfInf) => true,
            (2, IrrValue::Pair(c, OmegaHatValue::Fin(d))) => c as Atom >= a && d as Atom >= b,
            (2, IrrValue::Pair(_, OmegaHatValue::Inf)) => false,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::encode_tuple;

    #[test]
    fn families() {
        let x = IrrLatticePower::new(Seq::constant(IrrValue::Pair(2, OmegaHatValue::Fin(3))));
        assert!(x.member(encode_tuple(&[0, 0, 2, 3])));
        assert!(!x.member(encode_tuple(&[0, 0, 2, 4])));
        assert!(x.member(encode_tuple(&[1, 0, 2, 1])));
        assert!(!x.member(encode_tuple(&[1, 0, 3, 1])));
        assert!(x.member(encode_tuple(&[2, 0, 1, 3])));
        assert!(!x.member(encode_tuple(&[2, 0, 3, 3])));

        let top = IrrLatticePower::new(Seq::constant(IrrValue::InfInf));
        assert!(top.member(encode_tuple(&[2, 0, 9, 9])));
        assert!(!top.member(encode_tuple(&[1, 0, 9, 9])));

        let col = IrrLatticePower::new(Seq::constant(IrrValue::Pair(2, OmegaHatValue::Inf)));
        assert!(col.member(encode_tuple(&[1, 0, 2, 7])));
        // (n, inf) lies in no extra-point neighborhood.
        assert!(!col.member(encode_tuple(&[2, 0, 1, 1])));
    }
}
