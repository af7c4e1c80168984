//! Medvedev procedures through separating sets: the telophase name as a
//! total set plus a separator, and the co-d-CEA form of separation.
//!
//! Both targets are joins `T = X (+) (C (+) cC)` delivering the total
//! side together with one separator. Forward procedures are functions of
//! the input order (the first fact seen about a coordinate resolves its
//! side); their oracles describe the representative produced on the
//! canonical enumeration, which is what the round-trip checks replay.

use super::data::SetPred;
use super::{operator_transducer, oracle_from, rule_operator, ReductionPair, Transducer};
use crate::coding::{decode_pair, decode_triple, encode_pair, joink, joink_split, Atom};
use crate::setspec::SetSpec;
use crate::spaces::{Seq, TeloValue, TelophasePower};
use crate::stream::{NameStream, Symbol};
use std::collections::{HashSet, VecDeque};
use std::rc::Rc;

fn c_side(n: Atom, inside: bool) -> Atom {
    // C (+) cC element, placed on the right of the outer join.
    2 * (2 * n + if inside { 0 } else { 1 }) + 1
}

fn x_side(e: Atom) -> Atom {
    2 * e
}

/// The operator pair between a telophase name and `X (+) (C (+) cC)`,
/// where `X` holds the value facts `2<n,m>` for `x(n) = m` and
/// `2<n,m>+1` for `x(n) != m`, and `C` is the separator the first-seen
/// rule produces on the canonical name: coordinates other than the
/// starred top resolve into `C`.
pub fn telophase_sep(x: &TelophasePower) -> ReductionPair {
    let xs = x.clone();
    let target_oracle = oracle_from(move |a| {
        if a % 2 == 0 {
            // X part.
            let e = a / 2;
            let (nm, fact) = (e / 2, e % 2);
            let (n, m) = decode_pair(nm);
            let eq = matches!(xs.seq.at_atom(n), TeloValue::Fin(v) if v as Atom == m);
            (fact == 0) == eq
        } else {
            let e = (a - 1) / 2;
            let (n, inside) = (e / 2, e % 2 == 0);
            let starred = matches!(xs.seq.at_atom(n), TeloValue::InfStar);
            inside != starred
        }
    });

    // Forward: a stateful procedure; the separator side of a coordinate
    // is fixed by the first name fact seen about it.
    let forward: Transducer = Rc::new(move |mut input: NameStream| {
        let mut resolved: HashSet<Atom> = HashSet::new();
        let mut queue: VecDeque<Atom> = VecDeque::new();
        // Progressive emission of inequality facts per coordinate.
        let mut known: Vec<(Atom, CoordFacts)> = Vec::new();
        let mut rr = 0usize;
        NameStream::from_fn(move |_stage| {
            if let Symbol::Emit(atom) = input.pull() {
                let (n, i, m) = decode_triple(atom);
                if resolved.insert(n) {
                    queue.push_back(c_side(n, i != 2));
                }
                let entry = match known.iter_mut().find(|(k, _)| *k == n) {
                    Some((_, f)) => f,
                    None => {
                        known.push((n, CoordFacts::default()));
                        &mut known.last_mut().unwrap().1
                    }
                };
                match i {
                    0 => {
                        if entry.exact.is_none() {
                            entry.exact = Some(m);
                            queue.push_back(x_side(2 * encode_pair(n, m)));
                        }
                    }
                    _ => entry.low = entry.low.max(m),
                }
            }
            if let Some(a) = queue.pop_front() {
                return Symbol::Emit(a);
            }
            // Visit one coordinate and emit its next inequality fact.
            for _ in 0..known.len() {
                rr = (rr + 1) % known.len().max(1);
                let (n, facts) = &mut known[rr];
                let next = facts.neq_cursor;
                let fact = match facts.exact {
                    Some(v) => {
                        let m = if next >= v { next + 1 } else { next };
                        Some(m)
                    }
                    None if next < facts.low => Some(next),
                    None => None,
                };
                if let Some(m) = fact {
                    facts.neq_cursor += 1;
                    return Symbol::Emit(x_side(2 * encode_pair(*n, m) + 1));
                }
            }
            Symbol::Pause
        })
    });

    // Backward: monotone, so an operator: value facts rebuild the exact
    // neighborhoods, the separator side licenses the one-sided rays.
    let backward = rule_operator(move |atom, w| {
        let (n, i, m) = decode_triple(atom);
        match i {
            0 => (w == 0).then(|| vec![x_side(2 * encode_pair(n, m))]),
            1 | 2 => {
                if w == 0 {
                    // n in C rules out the starred top; n outside C rules
                    // out the plain top.
                    let mut hyp = vec![c_side(n, i == 1)];
                    hyp.extend((0..m).map(|k| x_side(2 * encode_pair(n, k) + 1)));
                    Some(hyp)
                } else {
                    // Or an exact value at or above m.
                    Some(vec![x_side(2 * encode_pair(n, m + w - 1))])
                }
            }
            _ => None,
        }
    });

    let xs = x.clone();
    ReductionPair {
        name: "telophase<->sep".into(),
        forward,
        backward: operator_transducer(backward),
        source_oracle: oracle_from(move |a| xs.member(a)),
        target_oracle,
    }
}

#[derive(Default)]
struct CoordFacts {
    exact: Option<Atom>,
    low: Atom,
    neq_cursor: Atom,
}

/// Builds a telophase point from separation data: even coordinates code
/// the total side, odd coordinates place the two tops on `A` and `B` and
/// resolve the rest at canonical stages.
pub fn build_telophase_point(
    x: &SetSpec,
    a: &SetSpec,
    b: &SetSpec,
) -> Result<TelophasePower, super::data::DataError> {
    if !a.is_disjoint_from(b) {
        return Err(super::data::DataError::Constraint(
            "A and B must be disjoint".into(),
        ));
    }
    let (x, a, b) = (x.clone(), a.clone(), b.clone());
    Ok(TelophasePower::new(Seq::rule(move |m| {
        if m % 2 == 0 {
            TeloValue::Fin(if x.contains((m / 2) as Atom) { 1 } else { 0 })
        } else {
            let n = (m - 1) / 2;
            if a.contains(n as Atom) {
                TeloValue::Inf
            } else if b.contains(n as Atom) {
                TeloValue::InfStar
            } else {
                TeloValue::Fin(n)
            }
        }
    })))
}

/// The separation procedures of the co-d-CEA characterization: between
/// `E = X (+) cX (+) cA` and `X (+) cX` joined with a separator of
/// `(A, B)`. The forward race resolves a number into the separator when
/// the canonical complement-of-`B` enumeration reaches it first, and out
/// when the complement-of-`A` part of the input arrives first.
pub struct SepProcedures {
    pub pair: ReductionPair,
    /// Direction 2 against an arbitrary separator stream: returns the
    /// enumeration of `E` it induces.
    pub from_separator: Rc<dyn Fn(NameStream) -> NameStream>,
}

pub fn codcea_sep(x: &SetSpec, a: &SetSpec, b: &SetSpec) -> Result<SepProcedures, super::data::DataError> {
    if !a.is_disjoint_from(b) {
        return Err(super::data::DataError::Constraint(
            "A and B must be disjoint".into(),
        ));
    }
    let (xs, aa) = (x.clone(), a.clone());
    let source_oracle = oracle_from(move |atom| {
        let (part, m) = joink_split(3, atom);
        match part {
            0 => xs.contains(m),
            1 => !xs.contains(m),
            2 => !aa.contains(m),
            _ => unreachable!(),
        }
    });

    // On the canonical input, the complement-of-B reveal at stage n always
    // precedes the complement-of-A fact at stage 3n+2, so the canonical
    // separator is exactly the complement of B.
    let bt = b.clone();
    let xt = x.clone();
    let target_oracle = oracle_from(move |atom| {
        if atom % 2 == 0 {
            let e = atom / 2;
            let inx = xt.contains(e / 2);
            (e % 2 == 0) == inx
        } else {
            let e = (atom - 1) / 2;
            let inb = bt.contains(e / 2);
            (e % 2 == 0) != inb
        }
    });

    let bf = b.clone();
    let forward: Transducer = Rc::new(move |mut input: NameStream| {
        let bf = bf.clone();
        let mut resolved: HashSet<Atom> = HashSet::new();
        let mut queue: VecDeque<Atom> = VecDeque::new();
        NameStream::from_fn(move |stage| {
            // Internal reveal first: stage s confirms s outside B.
            let s = stage as Atom;
            if !bf.contains(s) && resolved.insert(s) {
                queue.push_back(c_side(s, true));
            }
            if let Symbol::Emit(atom) = input.pull() {
                let (part, m) = joink_split(3, atom);
                match part {
                    0 => queue.push_back(x_side(2 * m)),
                    1 => queue.push_back(x_side(2 * m + 1)),
                    2 => {
                        if resolved.insert(m) {
                            queue.push_back(c_side(m, false));
                        }
                    }
                    _ => unreachable!(),
                }
            }
            match queue.pop_front() {
                Some(a) => Symbol::Emit(a),
                None => Symbol::Pause,
            }
        })
    });

    // Direction 2: from the separator, the complement of A is the union
    // of the separator's complement with the canonical complement of
    // A u B.
    let (aa, bb) = (a.clone(), b.clone());
    let backward_op = rule_operator(move |atom, w| {
        let (part, m) = joink_split(3, atom);
        match part {
            0 => (w == 0).then(|| vec![x_side(2 * m)]),
            1 => (w == 0).then(|| vec![x_side(2 * m + 1)]),
            2 => match w {
                0 => Some(vec![c_side(m, false)]),
                1 => (!aa.contains(m) && !bb.contains(m)).then(Vec::new),
                _ => None,
            },
            _ => unreachable!(),
        }
    });
    let backward = operator_transducer(backward_op);
    let from_separator = backward.clone();

    Ok(SepProcedures {
        pair: ReductionPair {
            name: "codcea<->sep".into(),
            forward,
            backward,
            source_oracle,
            target_oracle,
        },
        from_separator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{canonical_stream, check_roundtrip};
    use std::collections::BTreeMap;

    fn telo_point() -> TelophasePower {
        let mut o = BTreeMap::new();
        o.insert(0u64, TeloValue::Inf);
        o.insert(1, TeloValue::InfStar);
        o.insert(2, TeloValue::Fin(2));
        TelophasePower::new(Seq::table(o, vec![TeloValue::Fin(1), TeloValue::InfStar]))
    }

    #[test]
    fn forward_separator_contains_plain_top() {
        let x = telo_point();
        let pair = telophase_sep(&x);
        let out = (pair.forward)(canonical_stream(pair.source_oracle.clone()));
        let mut got = std::collections::BTreeSet::new();
        let mut s = out;
        for _ in 0..4000 {
            if let Symbol::Emit(a) = s.pull() {
                got.insert(a);
            }
        }
        // Coordinate 0 has the plain top: it must land inside C.
        assert!(got.contains(&c_side(0, true)));
        assert!(got.contains(&c_side(1, false)));
        assert!(got.contains(&c_side(2, true)));
        for &a in &got {
            assert!((pair.target_oracle)(a), "unsound atom {a}");
        }
    }

    #[test]
    fn telophase_sep_round_trip() {
        let pair = telophase_sep(&telo_point());
        let report = check_roundtrip(&pair, 6000, 50);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn builder_composite() {
        let x = SetSpec::from_bits(&[1, 0], &[1, 1, 0]);
        let a = SetSpec::finite(&[0, 3]);
        let b = SetSpec::finite(&[1]);
        let z = build_telophase_point(&x, &a, &b).unwrap();
        assert_eq!(z.value(1), TeloValue::Inf);
        assert_eq!(z.value(3), TeloValue::InfStar);
        assert_eq!(z.value(5), TeloValue::Fin(2));
        assert_eq!(z.value(0), TeloValue::Fin(1));
        let pair = telophase_sep(&z);
        let report = check_roundtrip(&pair, 6000, 50);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn codcea_sep_races() {
        let x = SetSpec::from_bits(&[1], &[0, 1]);
        let a = SetSpec::finite(&[1, 4]);
        let b = SetSpec::finite(&[2]);
        let sep = codcea_sep(&x, &a, &b).unwrap();
        let report = check_roundtrip(&sep.pair, 6000, 50);
        assert!(report.pass(), "{report:?}");
        // n in B resolves outside C, n in A inside.
        assert!((sep.pair.target_oracle)(c_side(2, false)));
        assert!((sep.pair.target_oracle)(c_side(1, true)));
        assert!((sep.pair.target_oracle)(c_side(4, true)));
    }

    #[test]
    fn direction_two_on_a_itself() {
        // Feeding C = A reproduces the complement of A exactly:
        // cA = cC u c(A u B).
        let x = SetSpec::from_bits(&[1], &[0]);
        let a = SetSpec::finite(&[1, 4]);
        let b = SetSpec::finite(&[2]);
        let sep = codcea_sep(&x, &a, &b).unwrap();
        // Stream presenting X (+) (A (+) cA) as the separator pair.
        let (xs, ascript) = (x.clone(), a.clone());
        let input = NameStream::from_fn(move |stage| {
            let s = stage as Atom;
            // Interleave X facts and separator facts canonically.
            if s % 2 == 0 {
                let m = s / 2;
                Symbol::Emit(x_side(2 * m + if xs.contains(m) { 0 } else { 1 }))
            } else {
                let n = (s - 1) / 2;
                Symbol::Emit(c_side(n, ascript.contains(n)))
            }
        });
        let out = (sep.from_separator)(input).collect_set(6000);
        for m in 0..40u128 {
            let atom = joink(3, 2, m);
            assert_eq!(out.contains(&atom), !a.contains(m), "at {m}");
        }
    }
}
