//! The lower reals and the Hilbert cube.

use crate::coding::{decode_rational, decode_tuple, is_canonical_rational, Atom};
use crate::setspec::SetSpec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A point of the reals under the lower topology: the neighborhood filter
/// is the set of rational codes q with q < x.
#[derive(Clone, Debug)]
pub struct LowerReal {
    value: BigRational,
}

impl LowerReal {
    pub fn rational(value: BigRational) -> LowerReal {
        LowerReal { value }
    }

    /// The dyadic real `sum of 2^-(n+1) over n in S`, exact because an
    /// eventually periodic expansion is rational.
    pub fn dyadic(s: &SetSpec) -> LowerReal {
        LowerReal {
            value: dyadic_value(s),
        }
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn member(&self, a: Atom) -> bool {
        is_canonical_rational(a) && decode_rational(a).is_some_and(|q| q < self.value)
    }
}

pub(crate) fn dyadic_value(s: &SetSpec) -> BigRational {
    // Value of the prefix bits plus the periodic tail as a geometric series.
    let prefix_len = s.prefix_len();
    let cycle_len = s.period_len();
    let mut head = BigRational::zero();
    for n in 0..prefix_len {
        if s.contains(n as Atom) {
            head += pow2_neg_big(n + 1);
        }
    }
    let mut cycle_part = BigRational::zero();
    for i in 0..cycle_len {
        if s.contains((prefix_len + i) as Atom) {
            cycle_part += pow2_neg_big(i + 1);
        }
    }
    let tail =
        pow2_neg_big(prefix_len) * cycle_part / (BigRational::one() - pow2_neg_big(cycle_len));
    head + tail
}

fn pow2_neg_big(e: u64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2u8).pow(e as u32))
}

/// A point of the Hilbert cube: coordinates are exact rationals in [0,1],
/// finitely many away from the default 0. Atoms are triples `<n,s,p>`
/// accepted when `|x(n) - p| < 2^-s` with p a rational code in [0,1].
#[derive(Clone, Debug)]
pub struct HilbertPoint {
    coords: BTreeMap<u64, BigRational>,
}

impl HilbertPoint {
    pub fn new(coords: BTreeMap<u64, BigRational>) -> Result<HilbertPoint, super::SpecError> {
        for (n, q) in &coords {
            if q < &BigRational::zero() || q > &BigRational::one() {
                return Err(super::SpecError::InvalidComponent(format!(
                    "hilbert coordinate {n} = {q} outside [0,1]"
                )));
            }
        }
        Ok(HilbertPoint { coords })
    }

    pub fn coord(&self, n: u64) -> BigRational {
        self.coords.get(&n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coords(&self) -> &BTreeMap<u64, BigRational> {
        &self.coords
    }

    pub fn member(&self, a: Atom) -> bool {
        let t = decode_tuple(a, 3);
        let (n, s, p) = (t[0], t[1], t[2]);
        if !is_canonical_rational(p) {
            return false;
        }
        let Some(q) = decode_rational(p) else {
            return false;
        };
        if q < BigRational::zero() || q > BigRational::one() {
            return false;
        }
        let Ok(s) = u32::try_from(s) else {
            return false;
        };
        let Ok(n) = u64::try_from(n) else {
            // Coordinates beyond the index range hold the default 0.
            return (q - BigRational::zero()).abs() < crate::coding::pow2_neg(s);
        };
        (self.coord(n) - q).abs() < crate::coding::pow2_neg(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{encode_rational, encode_tuple, rat};

    #[test]
    fn lower_real_examples() {
        let x = LowerReal::rational(rat(1, 3));
        assert!(x.member(encode_rational(&rat(0, 1))));
        assert!(!x.member(encode_rational(&rat(1, 2))));
        assert!(!x.member(encode_rational(&rat(1, 3))));
        assert!(x.member(encode_rational(&rat(-7, 2))));
    }

    #[test]
    fn dyadic_values() {
        // S = {0}: 1/2. S = evens: 2/3 = sum 2^-(2k+1).
        assert_eq!(
            LowerReal::dyadic(&SetSpec::finite(&[0])).value(),
            &rat(1, 2)
        );
        assert_eq!(
            LowerReal::dyadic(&SetSpec::from_bits(&[], &[1, 0])).value(),
            &rat(2, 3)
        );
    }

    #[test]
    fn hilbert_member() {
        let mut coords = BTreeMap::new();
        coords.insert(0u64, rat(1, 2));
        let x = HilbertPoint::new(coords).unwrap();
        let atom = |n, s, p: &BigRational| encode_tuple(&[n, s, encode_rational(p)]);
        assert!(x.member(atom(0, 1, &rat(1, 4)))); // |1/2-1/4| = 1/4 < 1/2
        assert!(!x.member(atom(0, 2, &rat(1, 4)))); // 1/4 < 1/4 fails
        assert!(x.member(atom(5, 3, &rat(0, 1)))); // default coordinate 0
        assert!(!x.member(atom(0, 0, &rat(-1, 2)))); // p outside [0,1]
    }
}
