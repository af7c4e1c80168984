//! The constructive e-equivalences, each packaged as an operator pair:
//! a forward stream transducer carrying a name of the point to the target
//! set, a backward transducer carrying the target set to the name, and
//! total membership oracles for both sides so every run can be checked
//! against brute-force truth at finite stage.

mod arens;
mod cocyl;
mod data;
mod double_origin;
mod halfgraph;
mod irr_lattice;
mod roy;
mod sep;
mod telograph;

pub use arens::{arens_codcea, build_arens_point, ArensData};
pub use cocyl::{baire_cocyl, cocyl_power_to_cofinite, ctp_embed, CtpPoint};
pub use data::{pred_fn, pred_of, CoDceaData, DCodCEAData, DataError, SeparatedDCodCEAData, SetPred};
pub use double_origin::{
    build_double_origin_point, doubleorigin_codcea, separated_doubled_to_codcea,
    separated_identities_hold, SeparatedCollapse,
};
pub use halfgraph::{codcea_to_halfgraph, halfgraph_to_doubled};
pub use irr_lattice::{build_irrlattice_point, irrlattice_codcea};
pub use roy::{build_roy_point, roy_halfgraph, HalfGraphData};
pub use sep::{build_telophase_point, codcea_sep, telophase_sep, SepProcedures};
pub use telograph::{dcodcea_to_telograph, telograph_collapse, telophase_telograph, TelographData};

use crate::coding::Atom;
use crate::op::EnumOperator;
use crate::stream::{NameStream, Symbol};
use std::collections::BTreeSet;
use std::rc::Rc;

pub type Oracle = Rc<dyn Fn(Atom) -> bool>;
pub type Transducer = Rc<dyn Fn(NameStream) -> NameStream>;

/// A two-sided translation between a point's neighborhood filter and a
/// target set, with oracles fixing the ground truth of both sides.
#[derive(Clone)]
pub struct ReductionPair {
    pub name: String,
    /// Nbase stream in, target enumeration out.
    pub forward: Transducer,
    /// Target enumeration in, Nbase stream out.
    pub backward: Transducer,
    pub source_oracle: Oracle,
    pub target_oracle: Oracle,
}

/// The canonical enumeration of an oracle: stage `s` emits `s` exactly
/// when the oracle accepts it.
pub fn canonical_stream(oracle: Oracle) -> NameStream {
    NameStream::from_fn(move |stage| {
        if oracle(stage as Atom) {
            Symbol::Emit(stage as Atom)
        } else {
            Symbol::Pause
        }
    })
}

pub fn oracle_from<F: Fn(Atom) -> bool + 'static>(f: F) -> Oracle {
    Rc::new(f)
}

/// Wraps an enumeration operator as a stream transducer.
pub fn operator_transducer(op: EnumOperator) -> Transducer {
    Rc::new(move |input| op.apply_stream(input))
}

/// Axiom generators for the translations enumerate (output, witness)
/// pairs: index `i` decodes to `(a, w)` and the rule gives output `a` its
/// `w`-th hypothesis set, if it has one. Axiom `(a, w)` therefore enters
/// the scan by pull `<a, w>`, which bounds the stage at which any target
/// atom with small code and small witness fires.
pub fn rule_operator(rule: impl Fn(Atom, Atom) -> Option<Vec<Atom>> + 'static) -> EnumOperator {
    EnumOperator::from_generator(move |i| {
        let (a, w) = crate::coding::decode_pair(i as Atom);
        rule(a, w).map(|hyp| (a, hyp))
    })
}

/// One direction's check result: atoms emitted that the oracle rejects,
/// and oracle-true atoms below the bound that never appeared.
#[derive(Debug, Clone, Default)]
pub struct DirectionReport {
    pub emitted: usize,
    pub unsound: Vec<Atom>,
    pub missing: Vec<Atom>,
}

impl DirectionReport {
    pub fn pass(&self) -> bool {
        self.unsound.is_empty() && self.missing.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct RoundTripReport {
    pub forward: DirectionReport,
    pub backward: DirectionReport,
}

impl RoundTripReport {
    pub fn pass(&self) -> bool {
        self.forward.pass() && self.backward.pass()
    }
}

fn check_direction(
    transducer: &Transducer,
    input_oracle: &Oracle,
    output_oracle: &Oracle,
    stages: u64,
    atom_bound: Atom,
) -> DirectionReport {
    let input = canonical_stream(input_oracle.clone());
    let emitted: BTreeSet<Atom> = transducer(input).collect_set(stages);
    let unsound: Vec<Atom> = emitted
        .iter()
        .copied()
        .filter(|&a| !output_oracle(a))
        .collect();
    let missing: Vec<Atom> = (0..atom_bound)
        .filter(|&a| output_oracle(a) && !emitted.contains(&a))
        .collect();
    DirectionReport {
        emitted: emitted.len(),
        unsound,
        missing,
    }
}

/// Runs both directions of a pair on canonical enumerations: every emitted
/// atom must be confirmed by the receiving side's oracle, and every
/// oracle-true atom below `atom_bound` must appear within `stages` pulls.
pub fn check_roundtrip(pair: &ReductionPair, stages: u64, atom_bound: Atom) -> RoundTripReport {
    RoundTripReport {
        forward: check_direction(
            &pair.forward,
            &pair.source_oracle,
            &pair.target_oracle,
            stages,
            atom_bound,
        ),
        backward: check_direction(
            &pair.backward,
            &pair.target_oracle,
            &pair.source_oracle,
            stages,
            atom_bound,
        ),
    }
}

/// Composes the two directions: forward then backward; the result should
/// stage-converge to the source filter again.
pub fn check_composition(pair: &ReductionPair, stages: u64, atom_bound: Atom) -> DirectionReport {
    let fwd = pair.forward.clone();
    let bwd = pair.backward.clone();
    let composite: Transducer = Rc::new(move |input| bwd(fwd(input)));
    check_direction(
        &composite,
        &pair.source_oracle,
        &pair.source_oracle,
        stages,
        atom_bound,
    )
}
