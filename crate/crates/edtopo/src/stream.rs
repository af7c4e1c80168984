//! Pull-based name streams and their wire format.

use crate::coding::Atom;
use std::collections::BTreeSet;
use std::io::{BufRead, Write};

/// One symbol of a name stream. On the wire, `Pause` is `0` and `Emit(k)`
/// is `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Pause,
    Emit(Atom),
}

impl Symbol {
    pub fn to_wire(self) -> u128 {
        match self {
            Symbol::Pause => 0,
            Symbol::Emit(k) => k + 1,
        }
    }

    pub fn from_wire(w: u128) -> Symbol {
        if w == 0 {
            Symbol::Pause
        } else {
            Symbol::Emit(w - 1)
        }
    }
}

/// A pull-based enumeration of atoms. The represented set is exactly the
/// set of atoms ever emitted; re-emission is permitted and consumers must
/// be idempotent under duplicates.
///
/// A stream must not be pulled by two consumers concurrently.
pub struct NameStream {
    state: StreamState,
}

enum StreamState {
    Fn {
        stage: u64,
        f: Box<dyn FnMut(u64) -> Symbol>,
    },
    Fixed {
        pos: usize,
        symbols: Vec<Symbol>,
    },
}

impl NameStream {
    /// A stream whose stage-`s` symbol is `f(s)`.
    pub fn from_fn(f: impl FnMut(u64) -> Symbol + 'static) -> NameStream {
        NameStream {
            state: StreamState::Fn {
                stage: 0,
                f: Box::new(f),
            },
        }
    }

    /// A finite scripted stream; pulls past the end pause forever.
    pub fn from_symbols(symbols: Vec<Symbol>) -> NameStream {
        NameStream {
            state: StreamState::Fixed { pos: 0, symbols },
        }
    }

    /// Emits the listed atoms in order, then pauses forever.
    pub fn from_atoms(atoms: Vec<Atom>) -> NameStream {
        NameStream::from_symbols(atoms.into_iter().map(Symbol::Emit).collect())
    }

    pub fn pull(&mut self) -> Symbol {
        match &mut self.state {
            StreamState::Fn { stage, f } => {
                let s = *stage;
                *stage += 1;
                f(s)
            }
            StreamState::Fixed { pos, symbols } => {
                let sym = symbols.get(*pos).copied().unwrap_or(Symbol::Pause);
                *pos += 1;
                sym
            }
        }
    }

    /// Pulls `n` symbols and returns the set of atoms emitted.
    pub fn collect_set(&mut self, pulls: u64) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for _ in 0..pulls {
            if let Symbol::Emit(a) = self.pull() {
                out.insert(a);
            }
        }
        out
    }

    /// Pulls `n` symbols and returns them in order.
    pub fn collect_symbols(&mut self, pulls: u64) -> Vec<Symbol> {
        (0..pulls).map(|_| self.pull()).collect()
    }

    /// Writes `pulls` wire symbols, one decimal per line.
    pub fn write_wire(&mut self, pulls: u64, w: &mut impl Write) -> std::io::Result<()> {
        for _ in 0..pulls {
            writeln!(w, "{}", self.pull().to_wire())?;
        }
        Ok(())
    }

    /// Reads a wire file into a scripted stream.
    pub fn read_wire(r: impl BufRead) -> std::io::Result<NameStream> {
        let mut symbols = Vec::new();
        for line in r.lines() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let w: u128 = t.parse().map_err(|e| {
                std::io::Error::new(std::io::ErrorKind::InvalidData, format!("bad symbol: {e}"))
            })?;
            symbols.push(Symbol::from_wire(w));
        }
        Ok(NameStream::from_symbols(symbols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_convention() {
        assert_eq!(Symbol::Pause.to_wire(), 0);
        assert_eq!(Symbol::Emit(0).to_wire(), 1);
        assert_eq!(Symbol::Emit(7).to_wire(), 8);
        assert_eq!(Symbol::from_wire(8), Symbol::Emit(7));
    }

    #[test]
    fn wire_round_trip() {
        let mut s = NameStream::from_symbols(vec![
            Symbol::Emit(3),
            Symbol::Pause,
            Symbol::Emit(0),
        ]);
        let mut buf = Vec::new();
        s.write_wire(5, &mut buf).unwrap();
        let mut back = NameStream::read_wire(&buf[..]).unwrap();
        assert_eq!(back.pull(), Symbol::Emit(3));
        assert_eq!(back.pull(), Symbol::Pause);
        assert_eq!(back.pull(), Symbol::Emit(0));
        assert_eq!(back.pull(), Symbol::Pause);
    }
}
