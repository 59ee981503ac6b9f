//! Finite labeled graphs and their text format.
//!
//! ```text
//! alphabet: 0 1
//! states: q0 q1
//! edge: q0 0 q0
//! edge: q0 1 q1
//! edge: q1 0 q0
//! ```
//!
//! `#` starts a comment, blank lines are ignored. Serialization sorts the
//! alphabet, the states and the edges, so a canonical file round-trips byte
//! for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: usize,
    pub label: Letter,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    alphabet: Alphabet,
    states: Vec<String>,
    edges: BTreeSet<Edge>,
}

impl LabeledGraph {
    /// Builds a graph from named states and `(source, label, target)` triples.
    pub fn new<S: AsRef<str>>(
        alphabet: Alphabet,
        states: &[S],
        edges: &[(S, S, S)],
    ) -> Result<Self> {
        let states = canonical_states(states.iter().map(|s| s.as_ref().to_string()), 0)?;
        let mut set = BTreeSet::new();
        for (src, label, dst) in edges {
            let edge = resolve_edge(&alphabet, &states, src.as_ref(), label.as_ref(), dst.as_ref(), 0)?;
            if !set.insert(edge) {
                return Err(Error::DuplicateEdge { line: 0 });
            }
        }
        Ok(LabeledGraph {
            alphabet,
            states,
            edges: set,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.binary_search_by(|s| s.as_str().cmp(name)).ok()
    }

    /// Parses the text format. States and edges are normalized to canonical order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Alphabet> = None;
        let mut states: Option<Vec<String>> = None;
        let mut edges = BTreeSet::new();

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected `key: value`, got `{line}`"),
            })?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            match key.trim() {
                "alphabet" => {
                    if alphabet.is_some() {
                        return Err(parse_err(line_no, "alphabet declared twice"));
                    }
                    alphabet = Some(Alphabet::new(fields.iter().copied()).map_err(|e| Error::Parse {
                        line: line_no,
                        message: e.to_string(),
                    })?);
                }
                "states" => {
                    if alphabet.is_none() {
                        return Err(parse_err(line_no, "`states:` must follow `alphabet:`"));
                    }
                    if states.is_some() {
                        return Err(parse_err(line_no, "states declared twice"));
                    }
                    states = Some(canonical_states(fields.iter().map(|s| s.to_string()), line_no)?);
                }
                "edge" => {
                    let (Some(alphabet), Some(states)) = (&alphabet, &states) else {
                        return Err(parse_err(line_no, "`edge:` before `alphabet:` and `states:`"));
                    };
                    let [src, label, dst] = fields[..] else {
                        return Err(parse_err(line_no, "edge needs exactly `source label target`"));
                    };
                    let edge = resolve_edge(alphabet, states, src, label, dst, line_no)?;
                    if !edges.insert(edge) {
                        return Err(Error::DuplicateEdge { line: line_no });
                    }
                }
                other => return Err(parse_err(line_no, &format!("unknown record `{other}`"))),
            }
        }

        let alphabet = alphabet.ok_or_else(|| parse_err(1, "missing `alphabet:` line"))?;
        let states = states.ok_or_else(|| parse_err(2, "missing `states:` line"))?;
        Ok(LabeledGraph {
            alphabet,
            states,
            edges,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", self.alphabet.tokens().join(" "));
        let _ = writeln!(out, "states: {}", self.states.join(" "));
        for e in &self.edges {
            let _ = writeln!(
                out,
                "edge: {} {} {}",
                self.states[e.source],
                self.alphabet.token(e.label),
                self.states[e.target]
            );
        }
        out
    }

    /// The largest subgraph in which every state has an incoming and an
    /// outgoing edge. Fails if nothing survives.
    pub fn essentialize(&self) -> Result<LabeledGraph> {
        let n = self.states.len();
        let mut alive = vec![true; n];
        loop {
            let mut has_out = vec![false; n];
            let mut has_in = vec![false; n];
            for e in &self.edges {
                if alive[e.source] && alive[e.target] {
                    has_out[e.source] = true;
                    has_in[e.target] = true;
                }
            }
            let mut changed = false;
            for q in 0..n {
                if alive[q] && !(has_out[q] && has_in[q]) {
                    alive[q] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if !alive.iter().any(|&a| a) {
            return Err(Error::EmptySubshift);
        }

        let mut remap = vec![usize::MAX; n];
        let mut states = Vec::new();
        for q in 0..n {
            if alive[q] {
                remap[q] = states.len();
                states.push(self.states[q].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| alive[e.source] && alive[e.target])
            .map(|e| Edge {
                source: remap[e.source],
                label: e.label,
                target: remap[e.target],
            })
            .collect();
        Ok(LabeledGraph {
            alphabet: self.alphabet.clone(),
            states,
            edges,
        })
    }

    pub fn is_essential(&self) -> bool {
        let mut has_out = vec![false; self.states.len()];
        let mut has_in = vec![false; self.states.len()];
        for e in &self.edges {
            has_out[e.source] = true;
            has_in[e.target] = true;
        }
        !self.states.is_empty() && has_out.iter().zip(&has_in).all(|(&o, &i)| o && i)
    }

    /// Same states, every edge reversed.
    pub fn reversed(&self) -> LabeledGraph {
        LabeledGraph {
            alphabet: self.alphabet.clone(),
            states: self.states.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    source: e.target,
                    label: e.label,
                    target: e.source,
                })
                .collect(),
        }
    }

    pub fn is_right_resolving(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert((e.source, e.label)))
    }
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn canonical_states(names: impl Iterator<Item = String>, line: usize) -> Result<Vec<String>> {
    let mut states: Vec<String> = names.collect();
    if states.is_empty() {
        return Err(parse_err(line, "no states declared"));
    }
    states.sort();
    if let Some(w) = states.windows(2).find(|w| w[0] == w[1]) {
        return Err(parse_err(line, &format!("duplicate state `{}`", w[0])));
    }
    Ok(states)
}

fn resolve_edge(
    alphabet: &Alphabet,
    states: &[String],
    src: &str,
    label: &str,
    dst: &str,
    line: usize,
) -> Result<Edge> {
    let find = |name: &str| {
        states
            .binary_search_by(|s| s.as_str().cmp(name))
            .map_err(|_| Error::UnknownState {
                line,
                state: name.to_string(),
            })
    };
    let source = find(src)?;
    let target = find(dst)?;
    let label = alphabet.letter(label).map_err(|_| Error::UnknownLetterInEdge {
        line,
        letter: label.to_string(),
    })?;
    Ok(Edge {
        source,
        label,
        target,
    })
}

/// Built-in presentations used throughout the test suites and the CLI.
pub mod builtin {
    use super::LabeledGraph;

    pub const GOLDEN_MEAN: &str = "\
alphabet: 0 1
states: q0 q1
edge: q0 0 q0
edge: q0 1 q1
edge: q1 0 q0
";

    pub const EVEN_SHIFT: &str = "\
alphabet: 0 1
states: A B
edge: A 0 B
edge: A 1 A
edge: B 0 A
";

    pub const FULL_SHIFT_2: &str = "\
alphabet: 0 1
states: s
edge: s 0 s
edge: s 1 s
";

    /// Orbit closure of the point (01)^inf.
    pub const PERIODIC_01: &str = "\
alphabet: 0 1
states: a b
edge: a 0 b
edge: b 1 a
";

    pub fn golden_mean() -> LabeledGraph {
        LabeledGraph::parse(GOLDEN_MEAN).expect("builtin graph")
    }

    pub fn even_shift() -> LabeledGraph {
        LabeledGraph::parse(EVEN_SHIFT).expect("builtin graph")
    }

    pub fn full_shift() -> LabeledGraph {
        LabeledGraph::parse(FULL_SHIFT_2).expect("builtin graph")
    }

    pub fn periodic_01() -> LabeledGraph {
        LabeledGraph::parse(PERIODIC_01).expect("builtin graph")
    }
}
