//! The power of the modified (quasi-Polish) Arens square.

use super::{Seq, SpecError};
use crate::coding::{decode_pair, decode_tuple, Atom};
use crate::ordinals::{arens_classify, ArensLabel, OrdCNF};

/// A point of the Arens square: a label and an ordinal in its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArensPair {
    pub label: ArensLabel,
    pub ord: OrdCNF,
}

impl ArensPair {
    pub fn new(label: ArensLabel, ord: OrdCNF) -> Result<ArensPair, SpecError> {
        let classes = arens_classify(&ord)
            .map_err(|e| SpecError::PartitionConstraint(e.to_string()))?;
        if !classes.contains(&label) {
            return Err(SpecError::PartitionConstraint(format!(
                "{ord} is not in the class of label {label}"
            )));
        }
        Ok(ArensPair { label, ord })
    }
}

/// Atoms come in six families:
///
/// * `<0,n,j>`: the label is finite and the ordinal exceeds `w^2*j`;
/// * `<1,n,j>`: the label is barred finite and the ordinal exceeds `w^2*j`;
/// * `<2,n,j,k>`: the label is in the integer block and the ordinal lies in
///   `(w^2*j + w*k, w^2*(j+1)]`;
/// * `<3,n,j,k,l>` (j >= 1): the label lies in the closed label interval
///   from `j` to `z(-j)` and the ordinal in
///   `(w^2*k + w*(2l) + 2j-1, w^2*k + w*(2l+1)]`;
/// * `<4,n,j,k,l>` (j >= 1): the label lies between `z(j)` and `~j` and the
///   ordinal in `(w^2*k + w*(2l+1) + 2j-1, w^2*k + w*(2l+2)]`;
/// * `<5,n,x,y>`: the coordinate equals the coded isolated point `(x, y)`.
#[derive(Clone, Debug)]
pub struct ArensPower {
    pub seq: Seq<ArensPair>,
}

impl ArensPower {
    pub fn new(seq: Seq<ArensPair>) -> ArensPower {
        ArensPower { seq }
    }

    pub fn value(&self, n: u64) -> ArensPair {
        self.seq.at(n)
    }

    pub fn member(&self, atom: Atom) -> bool {
        let (i, rest) = decode_pair(atom);
        match i {
            0 | 1 => {
                let (n, j) = decode_pair(rest);
                let v = self.seq.at_atom(n);
                let label_ok = if i == 0 {
                    matches!(v.label, ArensLabel::Fin(_))
                } else {
                    matches!(v.label, ArensLabel::Bar(_))
                };
                label_ok && v.ord > OrdCNF::new_wide(j, 0, 0)
            }
            2 => {
                let t = decode_tuple(rest, 3);
                let (n, j, k) = (t[0], t[1], t[2]);
                let v = self.seq.at_atom(n);
                matches!(v.label, ArensLabel::Zeta(_))
                    && v.ord > OrdCNF::new_wide(j, k, 0)
                    && v.ord <= OrdCNF::new_wide(j + 1, 0, 0)
            }
            3 | 4 => {
                let t = decode_tuple(rest, 4);
                let (n, j, k, l) = (t[0], t[1], t[2], t[3]);
                if j == 0 {
                    return false;
                }
                let Ok(j64) = u64::try_from(j) else {
                    return false;
                };
                let v = self.seq.at_atom(n);
                let (lo_label, hi_label, u) = if i == 3 {
                    (ArensLabel::Fin(j64), ArensLabel::Zeta(-(j64 as i64)), 2 * l)
                } else {
                    (ArensLabel::Zeta(j64 as i64), ArensLabel::Bar(j64), 2 * l + 1)
                };
                lo_label <= v.label
                    && v.label <= hi_label
                    && v.ord > OrdCNF::new_wide(k, u, 2 * j - 1)
                    && v.ord <= OrdCNF::new_wide(k, u + 1, 0)
            }
            5 => {
                let t = decode_tuple(rest, 3);
                let (n, xc, yc) = (t[0], t[1], t[2]);
                let Some(label) = ArensLabel::decode(xc) else {
                    return false;
                };
                if !label.is_plus() {
                    return false;
                }
                let y = OrdCNF::decode(yc);
                if arens_classify(&y).map_or(true, |c| !c.contains(&label)) {
                    return false;
                }
                let v = self.seq.at_atom(n);
                v.label == label && v.ord == y
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{encode_pair, encode_tuple};

    fn pair(label: ArensLabel, j: u64, k: u64, n: u64) -> ArensPair {
        ArensPair::new(label, OrdCNF::new(j, k, n)).unwrap()
    }

    #[test]
    fn constraint_checked() {
        assert!(ArensPair::new(ArensLabel::Inf, OrdCNF::new(0, 1, 0)).is_ok());
        assert!(ArensPair::new(ArensLabel::Inf, OrdCNF::new(0, 2, 0)).is_err());
        assert!(ArensPair::new(ArensLabel::Fin(0), OrdCNF::top()).is_ok());
        assert!(ArensPair::new(ArensLabel::Bar(0), OrdCNF::top()).is_ok());
    }

    #[test]
    fn family_zero_and_top_points() {
        let x = ArensPower::new(Seq::constant(ArensPair {
            label: ArensLabel::Fin(0),
            ord: OrdCNF::top(),
        }));
        for j in 0..10 {
            assert!(x.member(encode_pair(0, encode_pair(0, j))));
            assert!(!x.member(encode_pair(1, encode_pair(0, j))));
        }
    }

    #[test]
    fn family_three_consistency() {
        // (3, w^2*0 + w*0 + 5) lies in I_3; check a family-3 atom: need
        // ord in (w*0 + 2j-1, w*1] with j <= 3.
        let x = ArensPower::new(Seq::constant(pair(ArensLabel::Fin(3), 0, 0, 5)));
        let atom3 = |n, j, k, l| encode_pair(3, encode_tuple(&[n, j, k, l]));
        assert!(x.member(atom3(0, 1, 0, 0)));
        assert!(x.member(atom3(0, 2, 0, 0)));
        assert!(!x.member(atom3(0, 3, 0, 0))); // 5 > 2*3-1 fails
        assert!(!x.member(atom3(0, 1, 0, 1))); // wrong w-block
        // The infinite label sits at the right end of family-3 intervals.
        let inf = ArensPower::new(Seq::constant(pair(ArensLabel::Inf, 0, 1, 0)));
        for j in 1..6 {
            assert!(inf.member(atom3(0, j, 0, 0)));
        }
    }

    #[test]
    fn family_five_exact() {
        let v = pair(ArensLabel::Fin(3), 0, 0, 5);
        let x = ArensPower::new(Seq::constant(v.clone()));
        let atom = encode_pair(
            5,
            encode_tuple(&[0, v.label.encode(), v.ord.encode()]),
        );
        assert!(x.member(atom));
        // Mismatched label/ordinal pairs are malformed, never members.
        let bad = encode_pair(
            5,
            encode_tuple(&[0, ArensLabel::Fin(2).encode(), v.ord.encode()]),
        );
        assert!(!x.member(bad));
    }
}
