//! The Golomb space of positive integers under the relatively prime
//! integer topology, and its countable power.

use super::Seq;
use crate::coding::{decode_pair, decode_tuple, Atom};

fn residue_atom_ok(a: Atom, b: Atom) -> bool {
    a > 0 && a <= b && num_integer::gcd(a, b) == 1
}

fn in_class(x: u64, a: Atom, b: Atom) -> bool {
    residue_atom_ok(a, b) && (x as Atom) % b == a % b
}

/// A single positive integer; atoms `<a,b>` are the arithmetic
/// progressions `a + b Z` with `gcd(a,b) = 1` and `0 < a <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golomb {
    pub value: u64,
}

impl Golomb {
    pub fn new(value: u64) -> Golomb {
        assert!(value > 0, "Golomb points are positive integers");
        Golomb { value }
    }

    pub fn member(&self, atom: Atom) -> bool {
        let (a, b) = decode_pair(atom);
        in_class(self.value, a, b)
    }
}

/// A point of the power: atoms `<n,a,b>` constrain coordinate `n`.
#[derive(Clone, Debug)]
pub struct GolombPower {
    pub seq: Seq<u64>,
}

impl GolombPower {
    pub fn new(seq: Seq<u64>) -> GolombPower {
        GolombPower { seq }
    }

    pub fn value(&self, n: u64) -> u64 {
        let v = self.seq.at(n);
        debug_assert!(v > 0);
        v
    }

    pub fn member(&self, atom: Atom) -> bool {
        let t = decode_tuple(atom, 3);
        let (n, a, b) = (t[0], t[1], t[2]);
        in_class(self.seq.at_atom(n), a, b)
    }
}
