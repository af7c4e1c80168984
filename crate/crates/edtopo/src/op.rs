//! Enumeration operators: monotone, continuous set-to-set maps given by an
//! axiom collection of (output atom, finite hypothesis set) pairs.

use crate::coding::{join_left, join_right, Atom};
use crate::stream::{NameStream, Symbol};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::io::{BufRead, Write};
use std::rc::Rc;

type Axiom = (Atom, Vec<Atom>);

#[derive(Clone)]
enum OpSource {
    Finite(Rc<Vec<Axiom>>),
    /// On-demand generator; `f(i)` is the i-th axiom of a canonical
    /// enumeration of the table. `None` means index `i` carries no axiom;
    /// generated tables are scanned forever.
    Gen(Rc<dyn Fn(u64) -> Option<Axiom>>),
}

/// Semantics: `apply(B) = { n : some axiom (n, D) has D included in B }`.
/// Monotone and continuous by construction.
#[derive(Clone)]
pub struct EnumOperator {
    source: OpSource,
}

impl EnumOperator {
    pub fn from_table(table: Vec<(Atom, Vec<Atom>)>) -> EnumOperator {
        EnumOperator {
            source: OpSource::Finite(Rc::new(table)),
        }
    }

    /// Operator whose axiom table is produced on demand, in a fixed
    /// canonical order.
    pub fn from_generator(f: impl Fn(u64) -> Option<Axiom> + 'static) -> EnumOperator {
        EnumOperator {
            source: OpSource::Gen(Rc::new(f)),
        }
    }

    /// The identity operator `{(n, {n}) : n < bound}`.
    pub fn identity(bound: u64) -> EnumOperator {
        EnumOperator::from_table((0..bound as Atom).map(|n| (n, vec![n])).collect())
    }

    pub fn axiom(&self, i: u64) -> Option<Axiom> {
        match &self.source {
            OpSource::Finite(t) => t.get(i as usize).cloned(),
            OpSource::Gen(f) => f(i),
        }
    }

    pub fn table_len(&self) -> Option<u64> {
        match &self.source {
            OpSource::Finite(t) => Some(t.len() as u64),
            OpSource::Gen(_) => None,
        }
    }

    /// Direct evaluation on a finite set. For generated tables the caller
    /// supplies a bound on how many axiom indices are examined.
    pub fn apply_finite_bounded(&self, input: &BTreeSet<Atom>, axiom_bound: u64) -> BTreeSet<Atom> {
        let finite = self.table_len().is_some();
        let mut out = BTreeSet::new();
        for i in 0..axiom_bound {
            match self.axiom(i) {
                None if finite => break,
                None => continue,
                Some((n, d)) => {
                    if d.iter().all(|a| input.contains(a)) {
                        out.insert(n);
                    }
                }
            }
        }
        out
    }

    /// Direct evaluation of a finite-table operator on a finite set.
    pub fn apply_finite(&self, input: &BTreeSet<Atom>) -> BTreeSet<Atom> {
        let bound = self
            .table_len()
            .expect("apply_finite requires a finite table; use apply_finite_bounded");
        self.apply_finite_bounded(input, bound)
    }

    /// Applies the operator to a name stream, dovetailing fairly: the
    /// transducer processes one input pull per output pull and admits
    /// axiom `i` into the scan from output pull `i` on, so every firable
    /// axiom eventually fires. Output streams keep a seen-set and re-emit
    /// nothing; `Pause` is emitted when nothing new fires.
    pub fn apply_stream(&self, input: NameStream) -> NameStream {
        let mut st = ApplyState {
            op: self.clone(),
            input,
            next_axiom: 0,
            received: HashSet::new(),
            waiting: HashMap::new(),
            axioms: Vec::new(),
            pending: VecDeque::new(),
            emitted: HashSet::new(),
        };
        NameStream::from_fn(move |stage| st.step(stage))
    }

    /// `compose(op1, op2)(B) = op1(op2(B))`, as an explicit finite table.
    pub fn compose(op1: &EnumOperator, op2: &EnumOperator) -> EnumOperator {
        let len1 = op1.table_len().expect("compose requires finite tables");
        let len2 = op2.table_len().expect("compose requires finite tables");
        let table2: Vec<Axiom> = (0..len2).filter_map(|i| op2.axiom(i)).collect();
        let mut out = Vec::new();
        for i in 0..len1 {
            let (n, e) = op1.axiom(i).unwrap();
            // Each way of deriving every element of `e` from op2 axioms
            // yields one composed axiom whose hypothesis is the union of
            // the chosen hypotheses.
            let mut choices: Vec<Vec<&Axiom>> = Vec::new();
            for &want in &e {
                let ways: Vec<&Axiom> = table2.iter().filter(|(m, _)| *m == want).collect();
                choices.push(ways);
            }
            if choices.iter().any(|w| w.is_empty()) {
                continue;
            }
            let mut stack = vec![(0usize, Vec::<&Axiom>::new())];
            while let Some((depth, picked)) = stack.pop() {
                if depth == choices.len() {
                    let mut hyp: BTreeSet<Atom> = BTreeSet::new();
                    for ax in &picked {
                        hyp.extend(ax.1.iter().copied());
                    }
                    out.push((n, hyp.into_iter().collect()));
                    continue;
                }
                for way in &choices[depth] {
                    let mut next = picked.clone();
                    next.push(way);
                    stack.push((depth + 1, next));
                }
            }
        }
        EnumOperator::from_table(out)
    }

    /// Serializes the first `bound` axioms as lines `n : a1 a2 ... ak`.
    pub fn write_table(&self, bound: u64, w: &mut impl Write) -> std::io::Result<()> {
        for i in 0..bound {
            match self.axiom(i) {
                None => break,
                Some((n, d)) => {
                    let hyp: Vec<String> = d.iter().map(|a| a.to_string()).collect();
                    writeln!(w, "{} : {}", n, hyp.join(" "))?;
                }
            }
        }
        Ok(())
    }

    pub fn read_table(r: impl BufRead) -> std::io::Result<EnumOperator> {
        let mut table = Vec::new();
        for line in r.lines() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let (lhs, rhs) = t.split_once(':').ok_or_else(|| {
                std::io::Error::new(std::io::ErrorKind::InvalidData, "missing ':' in axiom line")
            })?;
            let n: Atom = lhs.trim().parse().map_err(|e| {
                std::io::Error::new(std::io::ErrorKind::InvalidData, format!("bad atom: {e}"))
            })?;
            let mut d = Vec::new();
            for tok in rhs.split_whitespace() {
                d.push(tok.parse().map_err(|e| {
                    std::io::Error::new(std::io::ErrorKind::InvalidData, format!("bad atom: {e}"))
                })?);
            }
            table.push((n, d));
        }
        Ok(EnumOperator::from_table(table))
    }
}

struct ApplyState {
    op: EnumOperator,
    input: NameStream,
    next_axiom: u64,
    received: HashSet<Atom>,
    /// missing input atom -> indices into `axioms` still waiting on it
    waiting: HashMap<Atom, Vec<usize>>,
    /// (output atom, number of hypothesis atoms not yet received)
    axioms: Vec<(Atom, usize)>,
    pending: VecDeque<Atom>,
    emitted: HashSet<Atom>,
}

impl ApplyState {
    fn step(&mut self, stage: u64) -> Symbol {
        if let Symbol::Emit(a) = self.input.pull() {
            if self.received.insert(a) {
                if let Some(ids) = self.waiting.remove(&a) {
                    for id in ids {
                        self.axioms[id].1 -= 1;
                        if self.axioms[id].1 == 0 {
                            self.fire(self.axioms[id].0);
                        }
                    }
                }
            }
        }
        // Admit axioms with index <= stage into the scan.
        let finite = self.op.table_len().is_some();
        while self.next_axiom <= stage {
            match self.op.axiom(self.next_axiom) {
                None if finite => {
                    self.next_axiom = u64::MAX;
                    break;
                }
                None => {
                    self.next_axiom += 1;
                }
                Some((n, d)) => {
                    self.next_axiom += 1;
                    let missing: Vec<Atom> = d
                        .iter()
                        .copied()
                        .collect::<BTreeSet<_>>()
                        .into_iter()
                        .filter(|a| !self.received.contains(a))
                        .collect();
                    if missing.is_empty() {
                        self.fire(n);
                    } else {
                        let id = self.axioms.len();
                        self.axioms.push((n, missing.len()));
                        for a in missing {
                            self.waiting.entry(a).or_default().push(id);
                        }
                    }
                }
            }
        }
        match self.pending.pop_front() {
            Some(n) => Symbol::Emit(n),
            None => Symbol::Pause,
        }
    }

    fn fire(&mut self, n: Atom) {
        if self.emitted.insert(n) {
            self.pending.push_back(n);
        }
    }
}

/// `join(p, q)` enumerates `set(p) (+) set(q)` under the join coding.
pub fn join_streams(mut p: NameStream, mut q: NameStream) -> NameStream {
    NameStream::from_fn(move |stage| {
        // Alternate which side is polled first so neither starves; both
        // sides advance every other pull.
        let sym = if stage % 2 == 0 { p.pull() } else { q.pull() };
        match (stage % 2, sym) {
            (0, Symbol::Emit(a)) => Symbol::Emit(join_left(a)),
            (_, Symbol::Emit(a)) => Symbol::Emit(join_right(a)),
            _ => Symbol::Pause,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[Atom]) -> BTreeSet<Atom> {
        xs.iter().copied().collect()
    }

    #[test]
    fn apply_finite_examples() {
        let op = EnumOperator::from_table(vec![(5, vec![1, 2]), (7, vec![])]);
        assert_eq!(op.apply_finite(&set(&[1, 2, 9])), set(&[5, 7]));
        assert_eq!(op.apply_finite(&set(&[])), set(&[7]));
        assert_eq!(op.apply_finite(&set(&[1])), set(&[7]));
    }

    #[test]
    fn apply_stream_eventually_emits() {
        let op = EnumOperator::from_table(vec![(5, vec![1, 2])]);
        let input = NameStream::from_symbols(vec![
            Symbol::Emit(1),
            Symbol::Pause,
            Symbol::Emit(2),
        ]);
        let out = op.apply_stream(input).collect_set(50);
        assert_eq!(out, set(&[5]));
    }

    #[test]
    fn identity_on_streams() {
        let id = EnumOperator::identity(100);
        let input = NameStream::from_atoms(vec![3, 1, 4, 1, 5, 92]);
        let out = id.apply_stream(input).collect_set(200);
        assert_eq!(out, set(&[1, 3, 4, 5, 92]));
    }

    #[test]
    fn compose_with_identity() {
        let op = EnumOperator::from_table(vec![(5, vec![1, 2]), (7, vec![]), (9, vec![3])]);
        let id = EnumOperator::identity(100);
        let composed = EnumOperator::compose(&id, &op);
        for bits in 0..128u64 {
            let input: BTreeSet<Atom> = (0..7).filter(|i| bits >> i & 1 == 1).collect();
            assert_eq!(composed.apply_finite(&input), op.apply_finite(&input));
        }
    }

    #[test]
    fn join_enumerates_both_sides() {
        let p = NameStream::from_atoms(vec![0]);
        let q = NameStream::from_atoms(vec![0]);
        let out = join_streams(p, q).collect_set(10);
        assert_eq!(out, set(&[0, 1]));
    }

    #[test]
    fn generated_operator_is_scanned_fairly() {
        // Axiom i maps input i to output i; all should fire even though the
        // table is infinite.
        let op = EnumOperator::from_generator(|i| Some((i as Atom, vec![i as Atom])));
        let input = NameStream::from_atoms(vec![9, 0, 4]);
        let out = op.apply_stream(input).collect_set(40);
        assert_eq!(out, set(&[0, 4, 9]));
    }

    #[test]
    fn table_round_trip() {
        let op = EnumOperator::from_table(vec![(5, vec![1, 2]), (7, vec![])]);
        let mut buf = Vec::new();
        op.write_table(10, &mut buf).unwrap();
        let back = EnumOperator::read_table(&buf[..]).unwrap();
        assert_eq!(back.apply_finite(&set(&[1, 2])), set(&[5, 7]));
    }
}
