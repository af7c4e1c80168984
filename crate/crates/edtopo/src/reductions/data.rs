//! Shared set-data shapes for the reduction families.

use super::{oracle_from, Oracle};
use crate::coding::{joink_split, Atom};
use crate::setspec::SetSpec;
use std::rc::Rc;

/// A decidable set of naturals: either a finitary spec or a decoded
/// predicate. Canonical enumerations confirm `n` at stage `n` either way.
pub type SetPred = Rc<dyn Fn(Atom) -> bool>;

pub fn pred_of(s: &SetSpec) -> SetPred {
    let s = s.clone();
    Rc::new(move |n| s.contains(n))
}

pub fn pred_fn(f: impl Fn(Atom) -> bool + 'static) -> SetPred {
    Rc::new(f)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DataError {
    #[error("constraint violated: {0}")]
    Constraint(String),
}

/// A co-d-CEA presentation: `X (+) cX (+) (A u P)` with `A` and `P`
/// disjoint (`P` and the complement of `A` being `X`-c.e. is automatic
/// for finitary data).
#[derive(Clone)]
pub struct CoDceaData {
    pub x: SetPred,
    pub a: SetPred,
    pub p: SetPred,
}

impl CoDceaData {
    pub fn from_specs(x: SetSpec, a: SetSpec, p: SetSpec) -> Result<CoDceaData, DataError> {
        if !a.is_disjoint_from(&p) {
            return Err(DataError::Constraint("A and P must be disjoint".into()));
        }
        Ok(CoDceaData {
            x: pred_of(&x),
            a: pred_of(&a),
            p: pred_of(&p),
        })
    }

    /// The 3-ary join `X (+) cX (+) (A u P)`.
    pub fn join_oracle(&self) -> Oracle {
        let d = self.clone();
        oracle_from(move |atom| {
            let (part, m) = joink_split(3, atom);
            match part {
                0 => (d.x)(m),
                1 => !(d.x)(m),
                2 => (d.a)(m) || (d.p)(m),
                _ => unreachable!(),
            }
        })
    }
}

/// A doubled co-d-CEA presentation:
/// `X (+) cX (+) (A u P) (+) (B u N)` with `A`, `B`, `P`, `N` pairwise
/// disjoint.
#[derive(Clone)]
pub struct DCodCEAData {
    pub x: SetPred,
    pub a: SetPred,
    pub b: SetPred,
    pub p: SetPred,
    pub n: SetPred,
}

impl DCodCEAData {
    pub fn from_specs(
        x: SetSpec,
        a: SetSpec,
        b: SetSpec,
        p: SetSpec,
        n: SetSpec,
    ) -> Result<DCodCEAData, DataError> {
        let parts = [&a, &b, &p, &n];
        for (i, s) in parts.iter().enumerate() {
            for t in parts.iter().skip(i + 1) {
                if !s.is_disjoint_from(t) {
                    return Err(DataError::Constraint(
                        "A, B, P, N must be pairwise disjoint".into(),
                    ));
                }
            }
        }
        Ok(DCodCEAData {
            x: pred_of(&x),
            a: pred_of(&a),
            b: pred_of(&b),
            p: pred_of(&p),
            n: pred_of(&n),
        })
    }

    pub fn from_preds(
        x: SetPred,
        a: SetPred,
        b: SetPred,
        p: SetPred,
        n: SetPred,
    ) -> DCodCEAData {
        DCodCEAData { x, a, b, p, n }
    }

    /// The 4-ary join `X (+) cX (+) (A u P) (+) (B u N)`.
    pub fn join_oracle(&self) -> Oracle {
        let d = self.clone();
        oracle_from(move |atom| {
            let (part, m) = joink_split(4, atom);
            match part {
                0 => (d.x)(m),
                1 => !(d.x)(m),
                2 => (d.a)(m) || (d.p)(m),
                3 => (d.b)(m) || (d.n)(m),
                _ => unreachable!(),
            }
        })
    }

    /// The telograph coding of the doubled data: position `2n` tracks
    /// membership in `A` or `P`, position `2n+1` in `B` or `N`, stage
    /// values shifted by two; canonical confirmation stages equal the
    /// element itself.
    pub fn telograph_g(&self, k: Atom) -> Atom {
        let m = k / 2;
        let (one, staged) = if k % 2 == 0 {
            ((self.a)(m), (self.p)(m))
        } else {
            ((self.b)(m), (self.n)(m))
        };
        if one {
            1
        } else if staged {
            m + 2
        } else {
            0
        }
    }
}

/// Doubled data together with a decidable partition `{H_P, H_N}` of the
/// complement of `A u B` separating `P` from `N`.
#[derive(Clone)]
pub struct SeparatedDCodCEAData {
    pub base: DCodCEAData,
    pub h_p: SetPred,
    pub h_n: SetPred,
}

impl SeparatedDCodCEAData {
    pub fn from_specs(
        x: SetSpec,
        a: SetSpec,
        b: SetSpec,
        p: SetSpec,
        n: SetSpec,
        h_p: SetSpec,
        h_n: SetSpec,
    ) -> Result<SeparatedDCodCEAData, DataError> {
        let base = DCodCEAData::from_specs(x, a.clone(), b.clone(), p.clone(), n.clone())?;
        let outside = a.union(&b).complement();
        if !h_p.is_disjoint_from(&h_n) {
            return Err(DataError::Constraint("H_P, H_N must be disjoint".into()));
        }
        // H_P u H_N must equal the complement of A u B, P inside H_P and
        // N inside H_N; checked pointwise up to the periodic bound.
        let bound = [&a, &b, &p, &n, &h_p, &h_n]
            .iter()
            .map(|s| s.stable_bound() + s.period_len())
            .max()
            .unwrap()
            .max(64);
        for m in 0..2 * bound as Atom {
            let out = outside.contains(m);
            if (h_p.contains(m) || h_n.contains(m)) != out {
                return Err(DataError::Constraint(format!(
                    "H_P u H_N must partition the complement of A u B (fails at {m})"
                )));
            }
            if p.contains(m) && !h_p.contains(m) {
                return Err(DataError::Constraint(format!("P not inside H_P at {m}")));
            }
            if n.contains(m) && !h_n.contains(m) {
                return Err(DataError::Constraint(format!("N not inside H_N at {m}")));
            }
        }
        Ok(SeparatedDCodCEAData {
            base,
            h_p: pred_of(&h_p),
            h_n: pred_of(&h_n),
        })
    }
}
