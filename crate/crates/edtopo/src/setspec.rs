//! Finitary stand-in for the decidable sets all reductions accept.

use crate::coding::Atom;
use crate::stream::{NameStream, Symbol};

/// An eventually periodic subset of the naturals: the characteristic
/// sequence is `prefix` followed by `period` repeated forever.
///
/// Membership is decidable in O(1) after index reduction, and the canonical
/// enumeration emits `s` at stage `s` exactly when `s` is a member, which
/// pins down every "the stage at which we see n" clause in the reduction
/// constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSpec {
    prefix: Vec<bool>,
    period: Vec<bool>,
}

impl SetSpec {
    pub fn new(prefix: Vec<bool>, period: Vec<bool>) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        SetSpec { prefix, period }
    }

    /// The empty set.
    pub fn empty() -> Self {
        SetSpec::new(Vec::new(), vec![false])
    }

    /// All naturals.
    pub fn full() -> Self {
        SetSpec::new(Vec::new(), vec![true])
    }

    /// The finite set given by the listed elements.
    pub fn finite(elems: &[Atom]) -> Self {
        let max = elems.iter().copied().max().map_or(0, |m| m + 1);
        let max = usize::try_from(max).expect("finite-set element too large");
        let mut prefix = vec![false; max];
        for &e in elems {
            prefix[e as usize] = true;
        }
        SetSpec::new(prefix, vec![false])
    }

    pub fn from_bits(prefix: &[u8], period: &[u8]) -> Self {
        SetSpec::new(
            prefix.iter().map(|&b| b != 0).collect(),
            period.iter().map(|&b| b != 0).collect(),
        )
    }

    pub fn prefix_len(&self) -> u64 {
        self.prefix.len() as u64
    }

    pub fn period_len(&self) -> u64 {
        self.period.len() as u64
    }

    /// Smallest bound so that membership beyond it is periodic.
    pub fn stable_bound(&self) -> u64 {
        self.prefix.len() as u64
    }

    pub fn contains(&self, n: Atom) -> bool {
        if n < self.prefix.len() as Atom {
            self.prefix[n as usize]
        } else {
            self.period[((n - self.prefix.len() as Atom) % self.period.len() as Atom) as usize]
        }
    }

    /// Complement, still eventually periodic.
    pub fn complement(&self) -> SetSpec {
        SetSpec {
            prefix: self.prefix.iter().map(|b| !b).collect(),
            period: self.period.iter().map(|b| !b).collect(),
        }
    }

    pub fn union(&self, other: &SetSpec) -> SetSpec {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &SetSpec) -> SetSpec {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn is_disjoint_from(&self, other: &SetSpec) -> bool {
        let bound = self.eventual_bound().max(other.eventual_bound())
            + lcm(self.period.len(), other.period.len());
        (0..bound as Atom).all(|n| !(self.contains(n) && other.contains(n)))
    }

    pub fn is_empty(&self) -> bool {
        let bound = self.eventual_bound() + self.period.len();
        (0..bound as Atom).all(|n| !self.contains(n))
    }

    fn eventual_bound(&self) -> usize {
        self.prefix.len()
    }

    fn zip_with(&self, other: &SetSpec, f: impl Fn(bool, bool) -> bool) -> SetSpec {
        let prefix_len = self.prefix.len().max(other.prefix.len());
        let period_len = lcm(self.period.len(), other.period.len());
        let prefix =
            (0..prefix_len).map(|n| f(self.contains(n as Atom), other.contains(n as Atom)));
        let period = (prefix_len..prefix_len + period_len)
            .map(|n| f(self.contains(n as Atom), other.contains(n as Atom)));
        SetSpec::new(prefix.collect(), period.collect())
    }

    /// The canonical enumeration: at stage `s` the stream emits `s` when
    /// `s` is a member and pauses otherwise.
    pub fn canonical_stream(&self) -> NameStream {
        let spec = self.clone();
        NameStream::from_fn(move |stage| {
            if spec.contains(stage as Atom) {
                Symbol::Emit(stage as Atom)
            } else {
                Symbol::Pause
            }
        })
    }

    /// Stage at which `n` is confirmed under the canonical enumeration.
    /// Always `n` for members; `None` for non-members.
    pub fn canonical_stage(&self, n: Atom) -> Option<Atom> {
        self.contains(n).then_some(n)
    }

    /// The join `self (+) other` as a SetSpec.
    pub fn join(&self, other: &SetSpec) -> SetSpec {
        let prefix_len = 2 * self.prefix.len().max(other.prefix.len());
        let period_len = 2 * lcm(self.period.len(), other.period.len());
        let at = |n: Atom| {
            if n % 2 == 0 {
                self.contains(n / 2)
            } else {
                other.contains(n / 2)
            }
        };
        SetSpec::new(
            (0..prefix_len as Atom).map(at).collect(),
            (prefix_len as Atom..(prefix_len + period_len) as Atom)
                .map(at)
                .collect(),
        )
    }
}

fn lcm(a: usize, b: usize) -> usize {
    num_integer::lcm(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_complement() {
        let s = SetSpec::from_bits(&[1, 0, 1], &[0, 1]);
        assert!(s.contains(0));
        assert!(!s.contains(1));
        assert!(s.contains(2));
        assert!(!s.contains(3));
        assert!(s.contains(4));
        assert!(!s.contains(5));
        let c = s.complement();
        for n in 0..100 {
            assert_eq!(c.contains(n), !s.contains(n));
        }
    }

    #[test]
    fn canonical_enumeration_emits_members_at_their_own_stage() {
        let s = SetSpec::from_bits(&[0, 1], &[1, 0, 0]);
        let mut st = s.canonical_stream();
        for stage in 0..30u64 {
            match st.pull() {
                Symbol::Emit(n) => {
                    assert_eq!(n, stage as Atom);
                    assert!(s.contains(n));
                }
                Symbol::Pause => assert!(!s.contains(stage as Atom)),
            }
        }
    }

    #[test]
    fn join_coding() {
        let a = SetSpec::finite(&[0]);
        let b = SetSpec::finite(&[0]);
        let j = a.join(&b);
        assert!(j.contains(0));
        assert!(j.contains(1));
        assert!(!j.contains(2));
        assert!(!j.contains(3));
    }
}
