//! Exact arithmetic and classifiers for the ordinals below `w^3 + 1` in
//! Cantor normal form, and for the well-founded tree whose Kleene-Brouwer
//! order has type `w^w + 1`.

use crate::coding::{decode_string, decode_tuple, encode_string, encode_tuple, Atom};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An ordinal `w^2*j + w*k + n`, or the distinguished top value `w^3`.
///
/// The (j, k, n) form is canonical: each value below `w^3` has exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdCNF {
    Top,
    Cnf { j: BigUint, k: BigUint, n: BigUint },
}

impl OrdCNF {
    pub fn top() -> OrdCNF {
        OrdCNF::Top
    }

    pub fn new(j: u64, k: u64, n: u64) -> OrdCNF {
        OrdCNF::Cnf {
            j: j.into(),
            k: k.into(),
            n: n.into(),
        }
    }

    pub fn zero() -> OrdCNF {
        OrdCNF::new(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, OrdCNF::Cnf { j, k, n } if j.is_zero() && k.is_zero() && n.is_zero())
    }

    /// Successor ordinals are exactly those with n > 0.
    pub fn is_successor(&self) -> bool {
        matches!(self, OrdCNF::Cnf { n, .. } if !n.is_zero())
    }

    pub fn new_wide(j: u128, k: u128, n: u128) -> OrdCNF {
        OrdCNF::Cnf {
            j: j.into(),
            k: k.into(),
            n: n.into(),
        }
    }

    pub fn parts_u64(&self) -> Option<(u64, u64, u64)> {
        match self {
            OrdCNF::Top => None,
            OrdCNF::Cnf { j, k, n } => Some((j.to_u64()?, k.to_u64()?, n.to_u64()?)),
        }
    }

    pub fn parts_u128(&self) -> Option<(u128, u128, u128)> {
        match self {
            OrdCNF::Top => None,
            OrdCNF::Cnf { j, k, n } => Some((j.to_u128()?, k.to_u128()?, n.to_u128()?)),
        }
    }

    /// Atom code: 0 for the top value, `<j,k,n> + 1` otherwise.
    pub fn encode(&self) -> Atom {
        match self.parts_u128() {
            None => 0,
            Some((j, k, n)) => encode_tuple(&[j, k, n]) + 1,
        }
    }

    pub fn decode(code: Atom) -> OrdCNF {
        if code == 0 {
            OrdCNF::Top
        } else {
            let t = decode_tuple(code - 1, 3);
            OrdCNF::new_wide(t[0], t[1], t[2])
        }
    }

    pub fn parse(s: &str) -> Result<OrdCNF, OrdinalError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "w3" {
            return Ok(OrdCNF::Top);
        }
        let (mut j, mut k, mut n) = (0u64, 0u64, 0u64);
        let (mut saw_j, mut saw_k, mut saw_n) = (false, false, false);
        for term in s.split('+') {
            if let Some(v) = term.strip_prefix("w2*") {
                if saw_j || saw_k || saw_n {
                    return Err(OrdinalError::Parse(s.clone()));
                }
                j = v.parse().map_err(|_| OrdinalError::Parse(s.clone()))?;
                saw_j = true;
            } else if let Some(v) = term.strip_prefix("w*") {
                if saw_k || saw_n {
                    return Err(OrdinalError::Parse(s.clone()));
                }
                k = v.parse().map_err(|_| OrdinalError::Parse(s.clone()))?;
                saw_k = true;
            } else {
                if saw_n || term.is_empty() {
                    return Err(OrdinalError::Parse(s.clone()));
                }
                n = term.parse().map_err(|_| OrdinalError::Parse(s.clone()))?;
                saw_n = true;
            }
        }
        Ok(OrdCNF::new(j, k, n))
    }
}

impl fmt::Display for OrdCNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdCNF::Top => write!(f, "w3"),
            OrdCNF::Cnf { j, k, n } => write!(f, "w2*{j} + w*{k} + {n}"),
        }
    }
}

impl PartialOrd for OrdCNF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdCNF {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (OrdCNF::Top, OrdCNF::Top) => Ordering::Equal,
            (OrdCNF::Top, _) => Ordering::Greater,
            (_, OrdCNF::Top) => Ordering::Less,
            (OrdCNF::Cnf { j, k, n }, OrdCNF::Cnf { j: j2, k: k2, n: n2 }) => {
                (j, k, n).cmp(&(j2, k2, n2))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrdinalError {
    #[error("sequence violates the tree constraint |s| <= s(0)+1: {0:?}")]
    NotInTree(Vec<u128>),
    #[error("interval base must not be a leaf: {0:?}")]
    LeafBase(Vec<u128>),
    #[error("ordinal 0 is excluded from the partition")]
    ZeroExcluded,
    #[error("ordinal does not match any embedding clause form")]
    NoClauseForm,
    #[error("embedding exponent out of representable range")]
    ExponentOverflow,
    #[error("cannot parse ordinal syntax: {0}")]
    Parse(String),
}

/// A node of the well-founded tree `{ s : |s| <= s(0)+1 }`, whose
/// Kleene-Brouwer order has type `w^w + 1` with the empty node on top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KBNode {
    entries: Vec<u128>,
}

impl KBNode {
    pub fn new(entries: Vec<u128>) -> Result<KBNode, OrdinalError> {
        if !entries.is_empty() && entries.len() as u128 > entries[0] + 1 {
            return Err(OrdinalError::NotInTree(entries));
        }
        Ok(KBNode { entries })
    }

    pub fn from_u64(entries: &[u64]) -> Result<KBNode, OrdinalError> {
        KBNode::new(entries.iter().map(|&e| e as u128).collect())
    }

    pub fn root() -> KBNode {
        KBNode { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[u128] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// A node is a leaf when no extension stays inside the tree.
    pub fn is_leaf(&self) -> bool {
        !self.entries.is_empty() && self.entries.len() as u128 == self.entries[0] + 1
    }

    pub fn child(&self, a: u128) -> Result<KBNode, OrdinalError> {
        let mut entries = self.entries.clone();
        entries.push(a);
        KBNode::new(entries)
    }

    pub fn extends(&self, prefix: &KBNode) -> bool {
        self.entries.len() >= prefix.entries.len()
            && self.entries[..prefix.entries.len()] == prefix.entries[..]
    }

    /// Atom code via the canonical string coding.
    pub fn encode(&self) -> Atom {
        encode_string(&self.entries)
    }

    pub fn decode(code: Atom) -> Result<KBNode, OrdinalError> {
        KBNode::new(decode_string(code))
    }

    pub fn parse(s: &str) -> Result<KBNode, OrdinalError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| OrdinalError::Parse(t.to_string()))?;
        let mut entries: Vec<u128> = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            entries.push(tok.parse().map_err(|_| OrdinalError::Parse(t.to_string()))?);
        }
        KBNode::new(entries)
    }
}

impl fmt::Display for KBNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}

/// Kleene-Brouwer comparison: a node precedes another when it properly
/// extends it, or when it is smaller at the first index where they differ.
/// The empty node is the maximum.
pub fn kb_compare(a: &KBNode, b: &KBNode) -> Ordering {
    for (x, y) in a.entries.iter().zip(b.entries.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    // One is a prefix of the other; the longer one is KB-smaller.
    b.entries.len().cmp(&a.entries.len())
}

/// Membership in the basic open `(s^j, s]_KB`, characterized as
/// `t = s or t extends s^k for some k > j`. The base must not be a leaf.
pub fn kb_interval_member(gamma: &KBNode, base: &KBNode, j: u128) -> Result<bool, OrdinalError> {
    if base.is_leaf() {
        return Err(OrdinalError::LeafBase(base.entries.clone()));
    }
    if gamma == base {
        return Ok(true);
    }
    Ok(gamma.entries.len() > base.entries.len()
        && gamma.extends(base)
        && gamma.entries[base.entries.len()] > j)
}

/// Labels of the modified Arens square's index set, ordered
/// `0 < 1 < ... < inf < ... < (-1)z < 0z < 1z < ... < inf~ < ... < 1~ < 0~`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArensLabel {
    Fin(u64),
    Inf,
    Zeta(i64),
    InfBar,
    Bar(u64),
}

impl ArensLabel {
    fn key(&self) -> (u8, i128) {
        match *self {
            ArensLabel::Fin(n) => (0, n as i128),
            ArensLabel::Inf => (1, 0),
            ArensLabel::Zeta(z) => (2, z as i128),
            ArensLabel::InfBar => (3, 0),
            ArensLabel::Bar(n) => (4, -(n as i128)),
        }
    }

    /// Labels outside {0, 0~, 0z, inf, inf~}; these index singleton basic
    /// opens and correspond exactly to the successor ordinals below w^3.
    pub fn is_plus(&self) -> bool {
        !matches!(
            self,
            ArensLabel::Fin(0) | ArensLabel::Bar(0) | ArensLabel::Zeta(0) | ArensLabel::Inf | ArensLabel::InfBar
        )
    }

    /// Atom code as a tagged pair.
    pub fn encode(&self) -> Atom {
        use crate::coding::encode_pair;
        match *self {
            ArensLabel::Fin(n) => encode_pair(0, n as Atom),
            ArensLabel::Inf => encode_pair(1, 0),
            ArensLabel::Zeta(z) => encode_pair(2, crate::coding::zigzag(z)),
            ArensLabel::InfBar => encode_pair(3, 0),
            ArensLabel::Bar(n) => encode_pair(4, n as Atom),
        }
    }

    pub fn decode(code: Atom) -> Option<ArensLabel> {
        use crate::coding::{decode_pair, unzigzag};
        let (tag, v) = decode_pair(code);
        match tag {
            0 => Some(ArensLabel::Fin(u64::try_from(v).ok()?)),
            1 => (v == 0).then_some(ArensLabel::Inf),
            2 => Some(ArensLabel::Zeta(unzigzag(v)?)),
            3 => (v == 0).then_some(ArensLabel::InfBar),
            4 => Some(ArensLabel::Bar(u64::try_from(v).ok()?)),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<ArensLabel, OrdinalError> {
        let t = s.trim();
        let err = || OrdinalError::Parse(t.to_string());
        if t == "inf" {
            Ok(ArensLabel::Inf)
        } else if t == "~inf" {
            Ok(ArensLabel::InfBar)
        } else if let Some(v) = t.strip_prefix('~') {
            Ok(ArensLabel::Bar(v.parse().map_err(|_| err())?))
        } else if let Some(v) = t.strip_prefix("z(").and_then(|x| x.strip_suffix(')')) {
            Ok(ArensLabel::Zeta(v.parse().map_err(|_| err())?))
        } else {
            Ok(ArensLabel::Fin(t.parse().map_err(|_| err())?))
        }
    }
}

impl fmt::Display for ArensLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ArensLabel::Fin(n) => write!(f, "{n}"),
            ArensLabel::Inf => write!(f, "inf"),
            ArensLabel::Zeta(z) => write!(f, "z({z})"),
            ArensLabel::InfBar => write!(f, "~inf"),
            ArensLabel::Bar(n) => write!(f, "~{n}"),
        }
    }
}

impl PartialOrd for ArensLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ArensLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// All labels x with `alpha` in the partition class indexed by x.
/// A singleton except for the top ordinal, whose class is {0, 0~};
/// the ordinal 0 is excluded from the partition.
pub fn arens_classify(alpha: &OrdCNF) -> Result<Vec<ArensLabel>, OrdinalError> {
    if alpha.is_zero() {
        return Err(OrdinalError::ZeroExcluded);
    }
    let (k, n) = match alpha {
        OrdCNF::Top => return Ok(vec![ArensLabel::Fin(0), ArensLabel::Bar(0)]),
        OrdCNF::Cnf { k, n, .. } => (k, n),
    };
    let two = BigUint::from(2u8);
    let label = if n.is_zero() {
        if k.is_zero() {
            // w^2 * (j'+1) with j >= 1
            ArensLabel::Zeta(0)
        } else if (k % &two).is_one() {
            ArensLabel::Inf
        } else {
            ArensLabel::InfBar
        }
    } else {
        let m = ((n + BigUint::one()) / &two)
            .to_i64()
            .ok_or(OrdinalError::ExponentOverflow)?;
        let k_even = (k % &two).is_zero();
        if (n % &two).is_one() {
            // n = 2m - 1
            if k_even {
                ArensLabel::Fin(m as u64)
            } else {
                ArensLabel::Bar(m as u64)
            }
        } else {
            // n = 2m
            if k_even {
                ArensLabel::Zeta(-m)
            } else {
                ArensLabel::Zeta(m)
            }
        }
    };
    Ok(vec![label])
}

/// Labels of the Roy partition: naturals together with infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RoyLabel {
    Fin(u64),
    Inf,
}

impl fmt::Display for RoyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RoyLabel::Fin(n) => write!(f, "{n}"),
            RoyLabel::Inf => write!(f, "inf"),
        }
    }
}

/// Classifies a node into the Roy partition. The empty node belongs to
/// both class 0 and class infinity. Leaves of length >= 2 overlap the
/// even length classes on paper; they are classified by their odd class
/// only, which is the unique reading under which the family partitions
/// the nonempty nodes while the length-1 leaf still lands in class 2.
pub fn roy_classify(sigma: &KBNode) -> Vec<RoyLabel> {
    if sigma.is_empty() {
        return vec![RoyLabel::Fin(0), RoyLabel::Inf];
    }
    if sigma.is_leaf() && sigma.len() >= 2 {
        let last_big = (2..sigma.len()).rev().find(|&i| sigma.entries()[i] > 0);
        return match last_big {
            // sigma(t) > 0 with t = k+1 maximal puts the leaf in class 2k+1.
            Some(t) => vec![RoyLabel::Fin(2 * t as u64 - 1)],
            None => vec![RoyLabel::Fin(1)],
        };
    }
    vec![RoyLabel::Fin(2 * sigma.len() as u64)]
}

/// The four-clause order embedding of `w^3 + 1` into the rationals, with
/// fundamental sequences `w^(m+1)[i] = w^m * i` and `(a+b)[i] = a + b[i]`.
///
/// Clause domains are the syntactic forms `w^3`, `w^3[j]`, `w^3[j+1][k]`
/// (k >= 1) and `w^3[j+1][k+1][l]` (k, l >= 1); ordinals of the shape
/// `w^2*j + l` with l >= 1 match no clause and are rejected.
pub fn h_embed(alpha: &OrdCNF) -> Result<BigRational, OrdinalError> {
    let half = |e: &BigUint| -> Result<BigRational, OrdinalError> {
        let e = e.to_u32().ok_or(OrdinalError::ExponentOverflow)?;
        Ok(crate::coding::pow2_neg(e))
    };
    match alpha {
        OrdCNF::Top => Ok(BigRational::zero()),
        OrdCNF::Cnf { j, k, n } => {
            if k.is_zero() && n.is_zero() {
                half(j)
            } else if n.is_zero() {
                Ok(half(j)? * (BigRational::one() + half(k)?))
            } else if !k.is_zero() {
                Ok(half(j)? * (BigRational::one() + half(k)? * (BigRational::one() + half(n)?)))
            } else {
                Err(OrdinalError::NoClauseForm)
            }
        }
    }
}
