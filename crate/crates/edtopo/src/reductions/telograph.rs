//! Telograph targets: translations between telophase names and
//! threshold-graph joins, and the collapse of the telograph hierarchy.

use super::data::DCodCEAData;
use super::{operator_transducer, oracle_from, rule_operator, Oracle, ReductionPair, Transducer};
use crate::coding::{decode_pair, decode_triple, encode_pair, encode_triple, Atom};
use crate::spaces::{Seq, TeloValue, TelophasePower};
use std::rc::Rc;

/// A total function together with a threshold; the associated target set
/// is the join of the graph complement with the telograph
/// `{ <n,m> : g(n) = m and m >= b }`.
#[derive(Clone, Debug)]
pub struct TelographData {
    pub g: Seq<u64>,
    pub b: u64,
}

impl TelographData {
    pub fn new(g: Seq<u64>, b: u64) -> TelographData {
        TelographData { g, b }
    }

    pub fn g_at(&self, n: u64) -> u64 {
        self.g.at(n)
    }

    /// Membership in `comp(Graph(g)) (+) TGraph_b(g)`.
    pub fn target_member(&self, a: Atom) -> bool {
        let (side, e) = crate::coding::join_split(a);
        let (n, m) = decode_pair(e);
        let Ok(n) = u64::try_from(n) else {
            // Beyond the override range the sequence is periodic.
            return side == 0;
        };
        let g = self.g_at(n) as Atom;
        if side == 0 {
            g != m
        } else {
            g == m && m >= self.b as Atom
        }
    }

    pub fn oracle(&self) -> Oracle {
        let d = self.clone();
        oracle_from(move |a| d.target_member(a))
    }
}

/// The graph coding a telophase coordinate: the two top points map to the
/// reserved values 0 and 1, naturals shift up by two.
pub fn telo_to_g(v: TeloValue) -> u64 {
    match v {
        TeloValue::Inf => 0,
        TeloValue::InfStar => 1,
        TeloValue::Fin(m) => m + 2,
    }
}

/// The 2-telograph form of a telophase point, with the operator pair
/// realizing the equivalence of its name with the target join.
pub fn telophase_telograph(x: &TelophasePower) -> (TelographData, ReductionPair) {
    let seq = x.seq.clone();
    let data = TelographData::new(Seq::rule(move |n| telo_to_g(seq.at(n))), 2);

    // Forward: target atoms from name atoms.
    let forward = rule_operator(move |a, w| {
        let (side, e) = crate::coding::join_split(a);
        let (n, m) = decode_pair(e);
        if side == 1 {
            // <n,m> in TGraph_2(g_x) iff m >= 2 and <n,0,m-2> is in the name.
            return (w == 0 && m >= 2).then(|| vec![encode_triple(n, 0, m - 2)]);
        }
        match m {
            // g_x(n) != 0 iff x(n) != inf, witnessed by any <n,2,k>.
            0 => Some(vec![encode_triple(n, 2, w)]),
            // g_x(n) != 1 iff x(n) != inf*, witnessed by any <n,1,k>.
            1 => Some(vec![encode_triple(n, 1, w)]),
            // g_x(n) != m+2 iff some <n,0,k> with k != m-2, or some
            // <n,i+1,k> with k > m-2.
            _ => {
                let v = m - 2;
                if w % 2 == 0 {
                    let k = w / 2;
                    let k = if k >= v { k + 1 } else { k };
                    Some(vec![encode_triple(n, 0, k)])
                } else {
                    let w = (w - 1) / 2;
                    let i = w % 2;
                    let k = v + 1 + w / 2;
                    Some(vec![encode_triple(n, i + 1, k)])
                }
            }
        }
    });

    // Backward: name atoms from target atoms.
    let backward = rule_operator(move |a, w| {
        if w != 0 {
            return None;
        }
        let (n, i, m) = decode_triple(a);
        match i {
            0 => Some(vec![2 * encode_pair(n, m + 2) + 1]),
            1 => Some((1..=m + 1).map(|j| 2 * encode_pair(n, j)).collect()),
            2 => {
                let mut hyp = vec![2 * encode_pair(n, 0)];
                hyp.extend((2..=m + 1).map(|j| 2 * encode_pair(n, j)));
                Some(hyp)
            }
            _ => None,
        }
    });

    let source = x.clone();
    let pair = ReductionPair {
        name: "telophase<->telograph".into(),
        forward: operator_transducer(forward),
        backward: operator_transducer(backward),
        source_oracle: oracle_from(move |a| source.member(a)),
        target_oracle: data.oracle(),
    };
    (data, pair)
}

/// Collapses a `b`-telograph target to the canonical 2-telograph form
/// (`b >= 3`), to the total set `G` (`b = 1`), or to itself (`b = 2`).
/// The returned pair reads the b-form as its source and the collapsed
/// form as its target.
pub fn telograph_collapse(g: Seq<u64>, b: u64) -> (TelographData, ReductionPair) {
    assert!(b >= 1);
    let source_data = TelographData::new(g.clone(), b);
    let source_oracle = source_data.oracle();
    match b {
        1 => {
            // G = { <n,m,0> : g(n) != m+1 } union { <n,m,1> : g(n) = m+1 }.
            let g1 = g.clone();
            let target_oracle: Oracle = oracle_from(move |a| {
                let (n, m, i) = decode_triple(a);
                let Ok(n) = u64::try_from(n) else {
                    return i == 0;
                };
                match i {
                    0 => g1.at(n) as Atom != m + 1,
                    1 => g1.at(n) as Atom == m + 1,
                    _ => false,
                }
            });
            let forward = rule_operator(|a, w| {
                if w != 0 {
                    return None;
                }
                let (n, m, i) = decode_triple(a);
                match i {
                    0 => Some(vec![2 * encode_pair(n, m + 1)]),
                    1 => Some(vec![2 * encode_pair(n, m + 1) + 1]),
                    _ => None,
                }
            });
            let backward = rule_operator(|a, w| {
                let (side, e) = crate::coding::join_split(a);
                let (n, m) = decode_pair(e);
                if side == 1 {
                    // TGraph_1 atoms need m >= 1.
                    return (w == 0 && m >= 1).then(|| vec![encode_triple(n, m - 1, 1)]);
                }
                if m >= 1 {
                    (w == 0).then(|| vec![encode_triple(n, m - 1, 0)])
                } else {
                    // g(n) != 0 is witnessed by any positive value fact.
                    Some(vec![encode_triple(n, w, 1)])
                }
            });
            let pair = ReductionPair {
                name: "telograph-collapse-b1".into(),
                forward: operator_transducer(forward),
                backward: operator_transducer(backward),
                source_oracle,
                target_oracle,
            };
            // The b = 1 target is coded as a plain total set; report the
            // source data unchanged alongside the pair.
            (source_data, pair)
        }
        2 => {
            let identity: Transducer = Rc::new(|input| input);
            let pair = ReductionPair {
                name: "telograph-collapse-b2".into(),
                forward: identity.clone(),
                backward: identity,
                source_oracle: source_oracle.clone(),
                target_oracle: source_oracle,
            };
            (source_data, pair)
        }
        _ => {
            let (gg, bb) = (g.clone(), b);
            let collapsed = TelographData::new(
                Seq::rule(move |k| {
                    let (n, i) = (k / bb, k % bb);
                    let v = gg.at(n);
                    if v == i {
                        0
                    } else if v < bb {
                        1
                    } else {
                        v - bb + 2
                    }
                }),
                2,
            );
            let target_oracle = collapsed.oracle();
            let bf = b;
            let forward = rule_operator(move |a, w| {
                let (side, e) = crate::coding::join_split(a);
                let (k, m) = decode_pair(e);
                let i = k % bf as Atom;
                let n = k / bf as Atom;
                if side == 1 {
                    // TGraph_2 values are m+2 with g(n) = m+b.
                    return (w == 0 && m >= 2)
                        .then(|| vec![2 * encode_pair(n, m - 2 + bf as Atom) + 1]);
                }
                match m {
                    0 => (w == 0).then(|| vec![2 * encode_pair(n, i)]),
                    1 => (w == 0).then(|| {
                        (0..bf as Atom)
                            .filter(|&j| j != i)
                            .map(|j| 2 * encode_pair(n, j))
                            .collect()
                    }),
                    _ => (w == 0).then(|| vec![2 * encode_pair(n, m - 2 + bf as Atom)]),
                }
            });
            let bb2 = b;
            let backward = rule_operator(move |a, w| {
                if w != 0 {
                    return None;
                }
                let (side, e) = crate::coding::join_split(a);
                let (n, m) = decode_pair(e);
                if side == 1 {
                    return (m >= bb2 as Atom)
                        .then(|| vec![2 * encode_pair(bb2 as Atom * n, m - bb2 as Atom + 2) + 1]);
                }
                if m < bb2 as Atom {
                    Some(vec![2 * encode_pair(bb2 as Atom * n + m, 0)])
                } else {
                    Some(vec![2 * encode_pair(bb2 as Atom * n, m - bb2 as Atom + 2)])
                }
            });
            let pair = ReductionPair {
                name: format!("telograph-collapse-b{b}"),
                forward: operator_transducer(forward),
                backward: operator_transducer(backward),
                source_oracle,
                target_oracle,
            };
            (collapsed, pair)
        }
    }
}

/// The telograph form of a doubled target per the stage tables: position
/// `2n` tracks membership in `A` or `P`, position `2n+1` in `B` or `N`,
/// with canonical confirmation stages. Returns the graph data and a pair
/// from the doubled join `X + cX + (A u P) + (B u N)` to
/// `X + cX + cGraph(g) + TGraph_2(g)`.
pub fn dcodcea_to_telograph(d: &DCodCEAData) -> (TelographData, ReductionPair) {
    let dd = d.clone();
    let g = Seq::rule(move |k| {
        u64::try_from(dd.telograph_g(k as Atom)).expect("stage value out of range")
    });
    let data = TelographData::new(g, 2);

    let source_oracle = d.join_oracle();
    let td = data.clone();
    let target_oracle: Oracle = oracle_from(move |a| {
        let (part, m) = crate::coding::joink_split(4, a);
        match part {
            0 | 1 => false,
            2 => td.target_member(2 * m),
            3 => td.target_member(2 * m + 1),
            _ => unreachable!(),
        }
    });
    // The X and cX parts are carried through unchanged.
    let dx = d.x.clone();
    let target_oracle: Oracle = {
        let inner = target_oracle.clone();
        oracle_from(move |a| {
            let (part, m) = crate::coding::joink_split(4, a);
            match part {
                0 => dx(m),
                1 => !dx(m),
                _ => inner(a),
            }
        })
    };

    let dd = d.clone();
    let forward = rule_operator(move |a, w| {
        if w != 0 {
            return None;
        }
        let (part, m) = crate::coding::joink_split(4, a);
        match part {
            0 | 1 => Some(vec![a]),
            2 => {
                // cGraph(g) atom <k, v>.
                let (k, v) = decode_pair(m);
                let n = k / 2;
                let even = k % 2 == 0;
                let src_part = if even { 2 } else { 3 };
                let other = if even { 3 } else { 2 };
                match v {
                    // g(k) != 0 iff the corresponding position entered Z.
                    0 => Some(vec![4 * n + src_part]),
                    // g(k) != 1 iff n avoids both origins or the twin
                    // position entered Z; the first case is decided by the
                    // canonical enumeration of the complement.
                    1 => {
                        if !(dd.a)(n) && !(dd.b)(n) {
                            Some(vec![])
                        } else {
                            Some(vec![4 * n + other])
                        }
                    }
                    // Values above 1 are stage-determined.
                    _ => (dd.telograph_g(k) != v).then(Vec::new),
                }
            }
            3 => {
                let (k, v) = decode_pair(m);
                (dd.telograph_g(k) == v && v >= 2).then(Vec::new)
            }
            _ => unreachable!(),
        }
    });

    let backward = rule_operator(move |a, w| {
        if w != 0 {
            return None;
        }
        let (part, n) = crate::coding::joink_split(4, a);
        match part {
            0 | 1 => Some(vec![a]),
            // n in A u P iff g(2n) != 0.
            2 => Some(vec![4 * encode_pair(2 * n, 0) + 2]),
            // n in B u N iff g(2n+1) != 0.
            3 => Some(vec![4 * encode_pair(2 * n + 1, 0) + 2]),
            _ => unreachable!(),
        }
    });

    let pair = ReductionPair {
        name: "dcodcea->telograph".into(),
        forward: operator_transducer(forward),
        backward: operator_transducer(backward),
        source_oracle,
        target_oracle,
    };
    (data, pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::check_roundtrip;
    use crate::setspec::SetSpec;
    use std::collections::BTreeMap;

    fn telo_point() -> TelophasePower {
        let mut overrides = BTreeMap::new();
        overrides.insert(0, TeloValue::Inf);
        overrides.insert(1, TeloValue::Fin(3));
        overrides.insert(2, TeloValue::InfStar);
        TelophasePower::new(Seq::table(overrides, vec![TeloValue::InfStar, TeloValue::Fin(0)]))
    }

    #[test]
    fn g_x_values() {
        let (data, _) = telophase_telograph(&telo_point());
        assert_eq!(data.g_at(0), 0);
        assert_eq!(data.g_at(1), 5);
        assert_eq!(data.g_at(2), 1);
        assert_eq!(data.g_at(3), 1);
    }

    #[test]
    fn tgraph_atom_example() {
        let (data, _) = telophase_telograph(&telo_point());
        // g_x(1) = 5 >= 2, so <1,5> is in the telograph part.
        assert!(data.target_member(2 * encode_pair(1, 5) + 1));
        assert!(!data.target_member(2 * encode_pair(1, 5)));
        assert!(data.target_member(2 * encode_pair(1, 4)));
    }

    #[test]
    fn round_trip_within_budget() {
        let (_, pair) = telophase_telograph(&telo_point());
        let report = check_roundtrip(&pair, 4000, 60);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn collapse_b1_is_total_form() {
        let g = Seq::table(BTreeMap::new(), vec![0, 3, 1]);
        let (_, pair) = telograph_collapse(g, 1);
        let report = check_roundtrip(&pair, 4000, 60);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn collapse_b3_g_tilde() {
        let mut o = BTreeMap::new();
        o.insert(0, 0);
        o.insert(1, 1);
        o.insert(2, 2);
        o.insert(3, 5);
        let g = Seq::table(o, vec![4]);
        let (collapsed, pair) = telograph_collapse(g.clone(), 3);
        // g~(3n+i) = g_i(n) per the case table.
        for n in 0..6u64 {
            for i in 0..3u64 {
                let v = g.at(n);
                let expect = if v == i {
                    0
                } else if v < 3 {
                    1
                } else {
                    v - 3 + 2
                };
                assert_eq!(collapsed.g_at(3 * n + i), expect);
            }
        }
        let report = check_roundtrip(&pair, 6000, 60);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn collapse_b2_identity() {
        let g = Seq::table(BTreeMap::new(), vec![7, 0]);
        let (_, pair) = telograph_collapse(g, 2);
        let report = check_roundtrip(&pair, 2000, 60);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn doubled_to_telograph_cases() {
        let d = DCodCEAData::from_specs(
            SetSpec::from_bits(&[1, 0, 1], &[0, 1]),
            SetSpec::finite(&[0]),
            SetSpec::finite(&[2]),
            SetSpec::finite(&[1]),
            SetSpec::finite(&[3]),
        )
        .unwrap();
        let (data, pair) = dcodcea_to_telograph(&d);
        // n=0 in A: g(2n) = 1. n=1 in P: g(2) = 1+2. n=4 outside: 0.
        assert_eq!(data.g_at(0), 1);
        assert_eq!(data.g_at(2), 3);
        assert_eq!(data.g_at(8), 0);
        // n=2 in B: g(2n+1) = 1; n=3 in N: g(7) = 3+2.
        assert_eq!(data.g_at(5), 1);
        assert_eq!(data.g_at(7), 5);
        let report = check_roundtrip(&pair, 6000, 60);
        assert!(report.pass(), "{report:?}");
    }
}
