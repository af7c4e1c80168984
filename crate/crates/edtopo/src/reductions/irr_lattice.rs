//! The irregular lattice power against co-d-CEA targets.

use super::data::{CoDceaData, SetPred};
use super::{operator_transducer, oracle_from, rule_operator, ReductionPair};
use crate::coding::{decode_pair, encode_tuple, joink, joink_split, Atom};
use crate::spaces::{IrrLatticePower, IrrValue, OmegaHatValue, Seq};
use std::rc::Rc;

fn atom4(i: Atom, n: Atom, a: Atom, b: Atom) -> Atom {
    encode_tuple(&[i, n, a, b])
}

/// Membership of `e` in the compactified-power filter of one side of the
/// lattice point: `e = <0,n,k>` asserts the value is `k`, `<1,n,k>` that
/// it is at least `k`.
fn omega_hat_fact(value: impl Fn(Atom) -> OmegaHatValue, e: Atom) -> bool {
    let t = crate::coding::decode_tuple(e, 3);
    let (i, n, k) = (t[0], t[1], t[2]);
    match i {
        0 => value(n).equals(k),
        1 => value(n).at_least(k),
        _ => false,
    }
}

/// Decodes a lattice point into its co-d-CEA presentation: `X` is the
/// join of the two compactified-power filters, `A` collects the extra
/// points and `P` the coordinates with finite second component. Returns
/// the data with the operator pair between the name and the 3-ary join.
pub fn irrlattice_codcea(z: &IrrLatticePower) -> (CoDceaData, ReductionPair) {
    let zx = z.clone();
    let x_set: SetPred = Rc::new(move |m| {
        let e = m / 2;
        if m % 2 == 0 {
            omega_hat_fact(
                |n| match zx.seq.at_atom(n) {
                    IrrValue::Pair(c, _) => OmegaHatValue::Fin(c),
                    IrrValue::InfInf => OmegaHatValue::Inf,
                },
                e,
            )
        } else {
            omega_hat_fact(
                |n| match zx.seq.at_atom(n) {
                    IrrValue::Pair(_, d) => d,
                    IrrValue::InfInf => OmegaHatValue::Inf,
                },
                e,
            )
        }
    });
    let za = z.clone();
    let a_set: SetPred = Rc::new(move |n| za.seq.at_atom(n) == IrrValue::InfInf);
    let zp = z.clone();
    let p_set: SetPred = Rc::new(move |n| {
        matches!(zp.seq.at_atom(n), IrrValue::Pair(_, OmegaHatValue::Fin(_)))
    });
    let data = CoDceaData {
        x: x_set,
        a: a_set,
        p: p_set,
    };
    let target_oracle = data.join_oracle();

    let forward = rule_operator(move |atom, w| {
        let (part, m) = joink_split(3, atom);
        match part {
            0 | 1 => {
                let x_side = m % 2 == 0;
                let e = m / 2;
                let t = crate::coding::decode_tuple(e, 3);
                let (i, n, k) = (t[0], t[1], t[2]);
                match (part, x_side, i) {
                    // x(n) = k, witnessed by an exact pair or any
                    // first-component fact.
                    (0, true, 0) => Some(vec![if w == 0 {
                        atom4(1, n, k, 0)
                    } else {
                        atom4(0, n, k, w - 1)
                    }]),
                    // x(n) >= k: the extra point or a finite value above.
                    (0, true, 1) => Some(vec![if w == 0 {
                        atom4(2, n, k, 0)
                    } else {
                        atom4(1, n, k + w - 1, 0)
                    }]),
                    // y(n) = k, only at pairs: exact atom with some x.
                    (0, false, 0) => Some(vec![atom4(0, n, w, k)]),
                    // y(n) >= k: the extra point or a pair fact.
                    (0, false, 1) => Some(vec![if w == 0 {
                        atom4(2, n, 0, k)
                    } else {
                        atom4(1, n, w - 1, k)
                    }]),
                    // Complements. x(n) != k: a different value or above.
                    (1, true, 0) => Some(vec![if w == 0 {
                        atom4(2, n, k + 1, 0)
                    } else {
                        let a = if w - 1 >= k { w } else { w - 1 };
                        atom4(1, n, a, 0)
                    }]),
                    // x(n) < k: a smaller exact value.
                    (1, true, 1) => (w < k).then(|| vec![atom4(1, n, w, 0)]),
                    // y(n) != k: strictly above (covers the extra point),
                    // or an exact pair with a different second component.
                    (1, false, 0) => Some(vec![if w == 0 {
                        atom4(2, n, 0, k + 1)
                    } else {
                        let (w1, u) = decode_pair(w - 1);
                        let b = if u >= k { u + 1 } else { u };
                        atom4(0, n, w1, b)
                    }]),
                    // y(n) < k: an exact pair below.
                    (1, false, 1) => {
                        let (w1, u) = decode_pair(w);
                        (u < k).then(|| vec![atom4(0, n, w1, u)])
                    }
                    // Malformed filter codes never enter X, so their
                    // complement facts are unconditional.
                    (1, _, _) if i >= 2 => (w == 0).then(Vec::new),
                    _ => None,
                }
            }
            // n in A u P iff the extra-point family fires at (0,0).
            2 => (w == 0).then(|| vec![atom4(2, m, 0, 0)]),
            _ => unreachable!(),
        }
    });

    let backward = rule_operator(move |atom, w| {
        if w != 0 {
            return None;
        }
        let t = crate::coding::decode_tuple(atom, 4);
        let (i, n, a, b) = (t[0], t[1], t[2], t[3]);
        let x_fact = |e: Atom| joink(3, 0, 2 * e);
        let y_fact = |e: Atom| joink(3, 0, 2 * e + 1);
        match i {
            0 => Some(vec![
                x_fact(encode_tuple(&[0, n, a])),
                y_fact(encode_tuple(&[0, n, b])),
            ]),
            1 => Some(vec![
                x_fact(encode_tuple(&[0, n, a])),
                y_fact(encode_tuple(&[1, n, b])),
            ]),
            2 => Some(vec![
                x_fact(encode_tuple(&[1, n, a])),
                y_fact(encode_tuple(&[1, n, b])),
                joink(3, 2, n),
            ]),
            _ => None,
        }
    });

    let source = z.clone();
    let pair = ReductionPair {
        name: "irrlattice<->codcea".into(),
        forward: operator_transducer(forward),
        backward: operator_transducer(backward),
        source_oracle: oracle_from(move |a| source.member(a)),
        target_oracle,
    };
    (data, pair)
}

/// Builds a lattice point realizing the co-d-CEA data: even coordinates
/// code `X`, odd coordinates place `A` at the extra point and confirm
/// membership facts at canonical stages.
pub fn build_irrlattice_point(d: &CoDceaData) -> IrrLatticePower {
    let dd = d.clone();
    IrrLatticePower::new(Seq::rule(move |m| {
        if m % 2 == 0 {
            let n = (m / 2) as Atom;
            let bit = if (dd.x)(n) { 1 } else { 0 };
            IrrValue::Pair(bit, OmegaHatValue::Inf)
        } else {
            let n = ((m - 1) / 2) as Atom;
            if (dd.a)(n) {
                IrrValue::InfInf
            } else {
                let stage = (m - 1) / 2;
                if (dd.p)(n) {
                    IrrValue::Pair(stage, OmegaHatValue::Fin(stage))
                } else {
                    IrrValue::Pair(stage, OmegaHatValue::Inf)
                }
            }
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::check_roundtrip;
    use crate::setspec::SetSpec;
    use std::collections::BTreeMap;

    fn sample() -> IrrLatticePower {
        let mut o = BTreeMap::new();
        o.insert(0u64, IrrValue::InfInf);
        o.insert(1, IrrValue::Pair(2, OmegaHatValue::Fin(3)));
        o.insert(2, IrrValue::Pair(0, OmegaHatValue::Inf));
        IrrLatticePower::new(Seq::table(o, vec![IrrValue::Pair(1, OmegaHatValue::Inf)]))
    }

    #[test]
    fn decoded_sets() {
        let (d, _) = irrlattice_codcea(&sample());
        assert!((d.a)(0));
        assert!(!(d.a)(1));
        assert!((d.p)(1));
        assert!(!(d.p)(2));
    }

    #[test]
    fn extra_point_family_is_membership() {
        let z = sample();
        let (d, _) = irrlattice_codcea(&z);
        for n in 0..10u128 {
            assert_eq!(z.member(atom4(2, n, 0, 0)), (d.a)(n) || (d.p)(n));
        }
    }

    #[test]
    fn round_trip() {
        let (_, pair) = irrlattice_codcea(&sample());
        let report = check_roundtrip(&pair, 8000, 50);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn builder_round_trip() {
        let d = CoDceaData::from_specs(
            SetSpec::from_bits(&[1, 0], &[1]),
            SetSpec::finite(&[1]),
            SetSpec::finite(&[0, 3]),
        )
        .unwrap();
        let z = build_irrlattice_point(&d);
        let (dec, pair) = irrlattice_codcea(&z);
        for n in 0..8u128 {
            assert_eq!((dec.a)(2 * n + 1), (d.a)(n));
            assert_eq!((dec.p)(2 * n + 1), (d.p)(n));
        }
        let report = check_roundtrip(&pair, 8000, 50);
        assert!(report.pass(), "{report:?}");
    }
}
