//! The space of complements of maximal antichains in the tree of finite
//! strings, under the Scott-type basis.

use crate::coding::{decode_finset, decode_string, Atom};

/// A point given by a finitary maximal-antichain scheme: either all
/// strings of a fixed length, or one string together with all strings of
/// a larger fixed length that do not extend it. The point itself is the
/// complement of the antichain; atoms are codes of finite sets D of
/// string codes, accepted when every string in D avoids the antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmaxPoint {
    /// Antichain: all strings of length `n`.
    AllStrings { len: u64 },
    /// Antichain: `{sigma}` together with every string of length `len`
    /// not extending `sigma`; requires `len > |sigma|`.
    SigmaScheme { sigma: Vec<Atom>, len: u64 },
}

impl AmaxPoint {
    pub fn all_strings(len: u64) -> AmaxPoint {
        AmaxPoint::AllStrings { len }
    }

    pub fn sigma_scheme(sigma: Vec<Atom>, len: u64) -> Result<AmaxPoint, super::SpecError> {
        if len <= sigma.len() as u64 {
            return Err(super::SpecError::InvalidComponent(format!(
                "scheme length {len} must exceed |sigma| = {}",
                sigma.len()
            )));
        }
        Ok(AmaxPoint::SigmaScheme { sigma, len })
    }

    /// Decides membership of a string in the antichain.
    pub fn in_antichain(&self, s: &[Atom]) -> bool {
        match self {
            AmaxPoint::AllStrings { len } => s.len() as u64 == *len,
            AmaxPoint::SigmaScheme { sigma, len } => {
                s == sigma.as_slice()
                    || (s.len() as u64 == *len && !s.starts_with(sigma))
            }
        }
    }

    /// Membership of a string code in the point (the complement).
    pub fn in_point(&self, code: Atom) -> bool {
        !self.in_antichain(&decode_string(code))
    }

    pub fn member(&self, atom: Atom) -> bool {
        decode_finset(atom).iter().all(|&c| self.in_point(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{encode_finset, encode_string};

    #[test]
    fn all_strings_scheme() {
        let x = AmaxPoint::all_strings(2);
        let d1 = encode_finset(&[encode_string(&[0])]);
        let d2 = encode_finset(&[encode_string(&[0, 0])]);
        assert!(x.member(d1));
        assert!(!x.member(d2));
        assert!(x.member(0)); // the empty set is below every point
    }

    #[test]
    fn sigma_scheme() {
        let x = AmaxPoint::sigma_scheme(vec![1], 3).unwrap();
        assert!(!x.in_point(encode_string(&[1])));
        assert!(x.in_point(encode_string(&[1, 0])));
        assert!(x.in_point(encode_string(&[1, 0, 0])));
        assert!(!x.in_point(encode_string(&[0, 0, 0])));
        assert!(x.in_point(encode_string(&[0, 0])));
        assert!(AmaxPoint::sigma_scheme(vec![1, 2], 2).is_err());
    }

    #[test]
    fn degenerate_root_antichain() {
        // The antichain containing only the empty string: every nonempty
        // string lies in the point.
        let x = AmaxPoint::sigma_scheme(vec![], 1);
        // len 1 > 0, but every length-1 string extends the empty string,
        // so the antichain is just the root.
        let x = x.unwrap();
        assert!(!x.in_point(encode_string(&[])));
        for a in 0..5 {
            assert!(x.in_point(encode_string(&[a])));
            assert!(x.in_point(encode_string(&[a, a])));
        }
    }
}
