//! The power of the telophase space: a two-point compactification of the
//! naturals with incomparable top points.

use super::Seq;
use crate::coding::{decode_tuple, Atom};
use std::fmt;

/// A value in the telophase line: a natural, the top point, or its twin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TeloValue {
    Fin(u64),
    Inf,
    InfStar,
}

impl fmt::Display for TeloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TeloValue::Fin(m) => write!(f, "{m}"),
            TeloValue::Inf => write!(f, "inf"),
            TeloValue::InfStar => write!(f, "inf*"),
        }
    }
}

/// Atoms are `<n,i,m>`: `i = 0` asserts `x(n) = m`, `i = 1` asserts
/// `m <= x(n) <= inf`, and `i = 2` asserts `m <= x(n) <= inf*`.
#[derive(Clone, Debug)]
pub struct TelophasePower {
    pub seq: Seq<TeloValue>,
}

impl TelophasePower {
    pub fn new(seq: Seq<TeloValue>) -> TelophasePower {
        TelophasePower { seq }
    }

    pub fn value(&self, n: u64) -> TeloValue {
        self.seq.at(n)
    }

    pub fn member(&self, a: Atom) -> bool {
        let t = decode_tuple(a, 3);
        let (n, i, m) = (t[0], t[1], t[2]);
        let v = self.seq.at_atom(n);
        match i {
            0 => matches!(v, TeloValue::Fin(x) if x as Atom == m),
            1 => match v {
                TeloValue::Fin(x) => x as Atom >= m,
                TeloValue::Inf => true,
                TeloValue::InfStar => false,
            },
            2 => match v {
                TeloValue::Fin(x) => x as Atom >= m,
                TeloValue::Inf => false,
                TeloValue::InfStar => true,
            },
            _ => false,
        }
    }
}
